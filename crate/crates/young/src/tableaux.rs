//! Young tableaux and tabloids: parsing, standard enumeration under a
//! configurable basis order, and the entrywise permutation action.

use std::fmt;

use itertools::Itertools;
use thiserror::Error;

use crate::perm::Permutation;
use crate::shapes::{Cell, Partition};

/// Errors from constructing, parsing, or transforming tableaux.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum TableauError {
    /// Row lengths were empty, contained a zero, or increased downwards.
    #[error("row lengths {0:?} do not form a shape")]
    InvalidShape(Vec<usize>),
    /// Entries were not exactly 1..=n, each used once.
    #[error("entries must be exactly 1..={0}, each exactly once")]
    NotBijective(usize),
    /// Text did not parse as a tableau.
    #[error("cannot parse tableau from {0:?}")]
    Parse(String),
    /// A permutation of the wrong degree was applied.
    #[error("permutation degree {0} does not match tableau size {1}")]
    DegreeMismatch(usize, usize),
    /// The literal S4 listing only exists for n = 4.
    #[error("basis order \"paper\" is only defined for n = 4, got n = {0}")]
    PaperOrderDegree(usize),
    /// An operation required strictly increasing columns.
    #[error("columns are not strictly increasing")]
    ColumnsNotSorted,
}

/// How the standard tableaux of a shape are listed, which fixes the basis
/// order of the representation matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisOrder {
    /// The fixed literal listing for n = 4 (`--order paper`) that reproduces
    /// the classical displayed S_4 matrices column-for-column. Errors for
    /// any other n.
    PaperS4,
    /// Ascending lexicographic order of the row-reading word
    /// (`--order rowlex`), defined for every n. For most shapes of n = 4 the
    /// two orders agree; for shape 3,1 the literal listing is reversed.
    RowWordLex,
}

impl BasisOrder {
    /// The command-line name of the order.
    pub fn as_str(self) -> &'static str {
        match self {
            BasisOrder::PaperS4 => "paper",
            BasisOrder::RowWordLex => "rowlex",
        }
    }
}

impl fmt::Display for BasisOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A bijective filling of a Ferrers diagram with 1..=n: `rows[r][c]` is the
/// entry in 1-based cell (r+1, c+1).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Validates the row lengths (a shape) and the entries (a bijection).
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, TableauError> {
        let lengths: Vec<usize> = rows.iter().map(Vec::len).collect();
        if lengths.is_empty() || lengths.contains(&0) || lengths.windows(2).any(|w| w[0] < w[1]) {
            return Err(TableauError::InvalidShape(lengths));
        }
        let n: usize = lengths.iter().sum();
        let mut seen = vec![false; n];
        for &x in rows.iter().flatten() {
            if x < 1 || x > n || seen[x - 1] {
                return Err(TableauError::NotBijective(n));
            }
            seen[x - 1] = true;
        }
        Ok(Tableau { rows })
    }

    /// Parses `"1,3,4/2"`; rows are separated by `/`. A row without commas
    /// is read digit by digit (`"134/2"`), which covers every entry when
    /// n <= 9; entries of 10 or more require the comma form.
    pub fn parse(text: &str) -> Result<Self, TableauError> {
        let rows: Vec<Vec<usize>> = text
            .trim()
            .split('/')
            .map(parse_row)
            .collect::<Result<_, _>>()
            .map_err(|_| TableauError::Parse(text.to_string()))?;
        Tableau::new(rows).map_err(|e| match e {
            TableauError::InvalidShape(_) | TableauError::NotBijective(_) => e,
            _ => TableauError::Parse(text.to_string()),
        })
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect())
            .expect("row lengths validated on construction")
    }

    /// Number of entries.
    pub fn n(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entry at a 1-based cell, if the cell lies in the diagram.
    pub fn entry(&self, cell: Cell) -> Option<usize> {
        self.rows
            .get(cell.row.wrapping_sub(1))
            .and_then(|row| row.get(cell.col.wrapping_sub(1)))
            .copied()
    }

    /// The 1-based cell holding `entry`.
    pub fn position_of(&self, entry: usize) -> Option<Cell> {
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &x) in row.iter().enumerate() {
                if x == entry {
                    return Some(Cell::new(r + 1, c + 1));
                }
            }
        }
        None
    }

    /// Entries concatenated row by row, left to right.
    pub fn row_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Number of columns (length of the first row).
    pub fn num_cols(&self) -> usize {
        self.rows[0].len()
    }

    /// Entries of the 1-based column c, top to bottom.
    pub fn column(&self, c: usize) -> Vec<usize> {
        self.rows
            .iter()
            .filter_map(|row| row.get(c - 1))
            .copied()
            .collect()
    }

    /// Rows and columns both strictly increasing.
    pub fn is_standard(&self) -> bool {
        let rows_ok = self
            .rows
            .iter()
            .all(|row| row.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = (1..=self.num_cols()).all(|c| self.column(c).windows(2).all(|w| w[0] < w[1]));
        rows_ok && cols_ok
    }

    /// Replaces every entry x by sigma(x), keeping the shape.
    pub fn apply_perm(&self, sigma: &Permutation) -> Result<Tableau, TableauError> {
        if sigma.degree() != self.n() {
            return Err(TableauError::DegreeMismatch(sigma.degree(), self.n()));
        }
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().map(|&x| sigma.apply(x)).collect())
            .collect();
        Ok(Tableau { rows })
    }

    /// Sorts every column into increasing order and returns the sign of the
    /// rearrangement: the product over columns of the sign of the
    /// permutation that sorts that column.
    pub fn column_sort(&self) -> (Tableau, i64) {
        let mut inversions = 0usize;
        let mut columns: Vec<Vec<usize>> = Vec::new();
        for c in 1..=self.num_cols() {
            let col = self.column(c);
            for i in 0..col.len() {
                for j in i + 1..col.len() {
                    if col[i] > col[j] {
                        inversions += 1;
                    }
                }
            }
            let mut sorted = col;
            sorted.sort_unstable();
            columns.push(sorted);
        }
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(r, row)| (0..row.len()).map(|c| columns[c][r]).collect())
            .collect();
        let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
        (Tableau { rows }, sign)
    }

    /// First cell (r, c), scanning rows top to bottom and left to right,
    /// whose entry exceeds its right neighbor. `None` means the tableau is
    /// standard. Requires strictly increasing columns.
    pub fn first_row_descent(&self) -> Result<Option<Cell>, TableauError> {
        for c in 1..=self.num_cols() {
            if !self.column(c).windows(2).all(|w| w[0] < w[1]) {
                return Err(TableauError::ColumnsNotSorted);
            }
        }
        for (r, row) in self.rows.iter().enumerate() {
            for c in 0..row.len().saturating_sub(1) {
                if row[c] > row[c + 1] {
                    return Ok(Some(Cell::new(r + 1, c + 1)));
                }
            }
        }
        Ok(None)
    }

    /// Forgets the order within each row.
    pub fn to_tabloid(&self) -> Tabloid {
        let mut rows = self.rows.clone();
        for row in &mut rows {
            row.sort_unstable();
        }
        Tabloid { rows }
    }

    /// Every permutation preserving each column of this tableau setwise:
    /// the direct product of the symmetric groups on the column entry sets.
    /// The list has (product of column lengths factorial) elements.
    pub fn column_group(&self) -> Vec<Permutation> {
        let n = self.n();
        let columns: Vec<Vec<usize>> = (1..=self.num_cols()).map(|c| self.column(c)).collect();
        let arrangements: Vec<Vec<Vec<usize>>> = columns
            .iter()
            .map(|col| {
                let mut sorted = col.clone();
                sorted.sort_unstable();
                sorted.iter().copied().permutations(sorted.len()).collect()
            })
            .collect();
        arrangements
            .iter()
            .map(|per_col| per_col.iter())
            .multi_cartesian_product()
            .map(|choice| {
                let mut images: Vec<usize> = (1..=n).collect();
                for (col, arrangement) in columns.iter().zip(choice) {
                    let mut sorted = col.clone();
                    sorted.sort_unstable();
                    for (&from, &to) in sorted.iter().zip(arrangement.iter()) {
                        images[from - 1] = to;
                    }
                }
                Permutation::from_images(images).expect("column arrangements are bijections")
            })
            .collect()
    }
}

fn parse_row(text: &str) -> Result<Vec<usize>, ()> {
    let t = text.trim();
    if t.is_empty() {
        return Err(());
    }
    if t.contains(',') {
        t.split(',')
            .map(|tok| tok.trim().parse::<usize>().map_err(|_| ()))
            .collect()
    } else if t.chars().all(|ch| ch.is_ascii_digit()) {
        Ok(t.chars().map(|ch| ch as usize - '0' as usize).collect())
    } else {
        Err(())
    }
}

impl fmt::Display for Tableau {
    /// Always the comma form: `1,3,4/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", rows_to_string(&self.rows))
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau[{self}]")
    }
}

/// A tabloid: a filling up to reordering within rows. Stored with each row
/// sorted ascending, so equality and ordering are equality of row sets.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tabloid {
    rows: Vec<Vec<usize>>,
}

impl Tabloid {
    /// Validates like [`Tableau::new`], then sorts each row.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, TableauError> {
        Ok(Tableau::new(rows)?.to_tabloid())
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect())
            .expect("row lengths validated on construction")
    }

    pub fn n(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Replaces every entry x by sigma(x) and re-sorts the rows.
    pub fn apply_perm(&self, sigma: &Permutation) -> Result<Tabloid, TableauError> {
        if sigma.degree() != self.n() {
            return Err(TableauError::DegreeMismatch(sigma.degree(), self.n()));
        }
        let mut rows: Vec<Vec<usize>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(|&x| sigma.apply(x)).collect())
            .collect();
        for row in &mut rows {
            row.sort_unstable();
        }
        Ok(Tabloid { rows })
    }
}

impl fmt::Display for Tabloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", rows_to_string(&self.rows))
    }
}

impl fmt::Debug for Tabloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tabloid[{self}]")
    }
}

fn rows_to_string(rows: &[Vec<usize>]) -> String {
    rows.iter().map(|row| row.iter().join(",")).join("/")
}

/// All standard tableaux of `shape`, listed in the given basis order. The
/// length always equals the hook-length dimension of the shape.
pub fn standard_tableaux(
    shape: &Partition,
    order: BasisOrder,
) -> Result<Vec<Tableau>, TableauError> {
    match order {
        BasisOrder::RowWordLex => {
            let mut out = enumerate_standard(shape);
            out.sort_by_key(Tableau::row_word);
            Ok(out)
        }
        BasisOrder::PaperS4 => {
            if shape.n() != 4 {
                return Err(TableauError::PaperOrderDegree(shape.n()));
            }
            let listing: &[&str] = match shape.parts() {
                [1, 1, 1, 1] => &["1/2/3/4"],
                [2, 1, 1] => &["1,2/3/4", "1,3/2/4", "1,4/2/3"],
                [2, 2] => &["1,2/3,4", "1,3/2,4"],
                [3, 1] => &["1,3,4/2", "1,2,4/3", "1,2,3/4"],
                [4] => &["1,2,3,4"],
                _ => unreachable!("every shape of 4 is listed"),
            };
            Ok(listing
                .iter()
                .map(|text| Tableau::parse(text).expect("listing entries are valid"))
                .collect())
        }
    }
}

/// Backtracking enumeration: place 1..=n in increasing order; entry k may
/// extend row r when that row is still shorter than its cap and, except in
/// the first row, strictly shorter than the row above. Both constraints
/// together make every produced filling standard.
fn enumerate_standard(shape: &Partition) -> Vec<Tableau> {
    let parts = shape.parts();
    let n = shape.n();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); parts.len()];
    let mut out = Vec::new();
    place(1, n, parts, &mut rows, &mut out);
    out
}

fn place(k: usize, n: usize, parts: &[usize], rows: &mut Vec<Vec<usize>>, out: &mut Vec<Tableau>) {
    if k > n {
        out.push(Tableau { rows: rows.clone() });
        return;
    }
    for r in 0..parts.len() {
        let len = rows[r].len();
        if len < parts[r] && (r == 0 || len < rows[r - 1].len()) {
            rows[r].push(k);
            place(k + 1, n, parts, rows, out);
            rows[r].pop();
        }
    }
}
