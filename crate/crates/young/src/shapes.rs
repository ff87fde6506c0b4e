//! Partitions of n, Ferrers-diagram cells, hook lengths, and the
//! hook-length dimension count.

use std::fmt;
use std::str::FromStr;

use num::bigint::BigUint;
use num::{Integer, One, ToPrimitive, Zero};
use thiserror::Error;

/// Errors from constructing or querying shapes.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ShapeError {
    /// Parts were empty, contained a zero, or were not weakly decreasing.
    #[error("parts must be positive and weakly decreasing, got {0:?}")]
    InvalidParts(Vec<usize>),
    /// A cell query landed outside the diagram.
    #[error("cell ({0}, {1}) lies outside the diagram")]
    CellOutside(usize, usize),
    /// Text did not parse as a partition.
    #[error("cannot parse partition from {0:?}")]
    Parse(String),
}

/// A cell of a Ferrers diagram, with 1-based `row` and `col`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.row, self.col)
    }
}

/// A partition of n: weakly decreasing positive parts summing to n.
///
/// Partitions index both the conjugacy classes and the irreducible
/// representations of S_n. The derived ordering is lexicographic on the
/// part sequence, which is the ascending order used for every listing in
/// this crate: for n = 4 it runs
/// `1,1,1,1 < 2,1,1 < 2,2 < 3,1 < 4`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates that `parts` is nonempty, positive, and weakly decreasing.
    pub fn new(parts: Vec<usize>) -> Result<Self, ShapeError> {
        if parts.is_empty() || parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(ShapeError::InvalidParts(parts));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned (sum of the parts).
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows of the diagram.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1
            && cell.col >= 1
            && cell.row <= self.parts.len()
            && cell.col <= self.parts[cell.row - 1]
    }

    /// All cells of the diagram, row by row.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| Cell::new(r + 1, c)))
    }

    /// Hook length of a cell: the arm (cells to the right), the leg (cells
    /// below), and the cell itself.
    pub fn hook_length(&self, cell: Cell) -> Result<usize, ShapeError> {
        if !self.contains(cell) {
            return Err(ShapeError::CellOutside(cell.row, cell.col));
        }
        let arm = self.parts[cell.row - 1] - cell.col;
        let leg = self.parts[cell.row..]
            .iter()
            .filter(|&&len| len >= cell.col)
            .count();
        Ok(arm + leg + 1)
    }

    /// Dimension of the irreducible representation indexed by this shape,
    /// by the hook length formula: n! divided by the product of all hook
    /// lengths. The division is checked to be exact.
    pub fn dimension(&self) -> u64 {
        let mut hooks = BigUint::one();
        for cell in self.cells() {
            let h = self.hook_length(cell).expect("cell comes from the diagram");
            hooks *= BigUint::from(h);
        }
        let (q, r) = factorial(self.n()).div_rem(&hooks);
        assert!(r.is_zero(), "hook product must divide n! exactly");
        q.to_u64()
            .expect("dimension fits in u64 at supported sizes")
    }

    /// The transposed diagram: row lengths become column lengths.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts[0];
        let parts = (1..=cols)
            .map(|c| self.parts.iter().filter(|&&len| len >= c).count())
            .collect();
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

impl FromStr for Partition {
    type Err = ShapeError;

    /// Parses `"3,1"`. Parts must already be weakly decreasing; the parser
    /// rejects unsorted input rather than silently sorting it.
    fn from_str(s: &str) -> Result<Self, ShapeError> {
        let parts: Vec<usize> = s
            .split(',')
            .map(|tok| tok.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| ShapeError::Parse(s.to_string()))?;
        Partition::new(parts).map_err(|_| ShapeError::Parse(s.to_string()))
    }
}

/// All partitions of n in ascending lexicographic order.
///
/// Panics if `n` is zero; every caller in this crate works with n >= 1.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    assert!(n >= 1, "partitions_of requires n >= 1");
    let mut out = Vec::new();
    let mut stack = Vec::new();
    descend(n, n, &mut stack, &mut out);
    out.sort();
    out
}

fn descend(remaining: usize, max_part: usize, stack: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: stack.clone(),
        });
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        stack.push(part);
        descend(remaining - part, part, stack, out);
        stack.pop();
    }
}

/// n! as an arbitrary-precision integer.
pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}
