//! Polytabloid straightening and the natural representation matrices.
//!
//! The Specht module of a shape has the polytabloids of standard tableaux
//! as a basis. Acting with a generator s_i = (i, i+1) on a basis element
//! gives a polytabloid of a possibly non-standard tableau; Garnir
//! relations rewrite it as an integer combination of standard ones. Each
//! rewrite fills one matrix column, and arbitrary permutations are reduced
//! to products of generator matrices along an adjacent-transposition word.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use itertools::Itertools;
use thiserror::Error;

use crate::perm::{PermError, Permutation};
use crate::shapes::{Cell, Partition};
use crate::tableaux::{standard_tableaux, BasisOrder, Tableau, TableauError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpechtError {
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("generator index {0} out of range 1..={1}")]
    GeneratorOutOfRange(usize, usize),
    #[error("Garnir pair sets must be disjoint and nonempty")]
    InvalidGarnirPair,
    #[error("no descent: cell ({0}, {1}) does not exceed its right neighbor")]
    NotADescent(usize, usize),
}

/// An integer vector in the standard-polytabloid basis of one Specht
/// module: coefficient `c` at key `j` means `c * e_{t_j}` where `t_j` is
/// the j-th (0-based) standard tableau in the chosen order.
#[derive(Clone, PartialEq, Eq)]
pub struct PolytabloidExpansion {
    shape: Partition,
    order: BasisOrder,
    coeffs: BTreeMap<usize, i64>,
}

impl PolytabloidExpansion {
    pub fn zero(shape: Partition, order: BasisOrder) -> Self {
        PolytabloidExpansion {
            shape,
            order,
            coeffs: BTreeMap::new(),
        }
    }

    /// The expansion `coeff * e_{t_index}`.
    pub fn unit(shape: Partition, order: BasisOrder, index: usize, coeff: i64) -> Self {
        let mut e = PolytabloidExpansion::zero(shape, order);
        e.add_term(index, coeff);
        e
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn order(&self) -> BasisOrder {
        self.order
    }

    pub fn coeff(&self, index: usize) -> i64 {
        self.coeffs.get(&index).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Terms in increasing basis-index order; coefficients are nonzero.
    pub fn iter(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.coeffs.iter().map(|(&j, &c)| (j, c))
    }

    pub fn add_term(&mut self, index: usize, coeff: i64) {
        let entry = self.coeffs.entry(index).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.coeffs.remove(&index);
        }
    }

    /// Adds `factor * other` termwise.
    pub fn add_scaled(&mut self, other: &PolytabloidExpansion, factor: i64) {
        debug_assert_eq!(self.shape, other.shape);
        for (j, c) in other.iter() {
            self.add_term(j, c * factor);
        }
    }

    pub fn scaled(&self, factor: i64) -> PolytabloidExpansion {
        let mut out = PolytabloidExpansion::zero(self.shape.clone(), self.order);
        out.add_scaled(self, factor);
        out
    }

    /// Dense coefficient vector of the given dimension.
    pub fn to_dense(&self, dim: usize) -> Vec<i64> {
        let mut v = vec![0; dim];
        for (j, c) in self.iter() {
            v[j] = c;
        }
        v
    }
}

impl fmt::Display for PolytabloidExpansion {
    /// Signed basis labels with 1-based indices: `+t1 -t2 +t3`, with an
    /// explicit magnitude when it is not 1 (`-2t3`). Zero prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.iter() {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{}", if c < 0 { '-' } else { '+' })?;
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "t{}", j + 1)?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for PolytabloidExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolytabloidExpansion[{self}]")
    }
}

/// A square integer matrix, stored row-major. Columns hold images of basis
/// vectors, so composition of maps is the usual matrix product.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntegerMatrix {
    dim: usize,
    entries: Vec<i64>,
}

impl IntegerMatrix {
    pub fn zeros(dim: usize) -> Self {
        IntegerMatrix {
            dim,
            entries: vec![0; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = IntegerMatrix::zeros(dim);
        for i in 0..dim {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds from rows; panics unless the rows form a square matrix.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        IntegerMatrix {
            dim,
            entries: rows.iter().flatten().copied().collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// 0-based access.
    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: i64) {
        self.entries[row * self.dim + col] = value;
    }

    /// Writes an expansion into column `col`.
    pub fn set_column(&mut self, col: usize, column: &PolytabloidExpansion) {
        for (j, c) in column.iter() {
            self.set(j, col, c);
        }
    }

    /// Matrix product; panics on dimension mismatch.
    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut out = IntegerMatrix::zeros(self.dim);
        for i in 0..self.dim {
            for k in 0..self.dim {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..self.dim {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        *self == IntegerMatrix::identity(self.dim)
    }

    pub fn trace(&self) -> i64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Rows as vectors, for serialization.
    pub fn row_vectors(&self) -> Vec<Vec<i64>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j)).collect())
            .collect()
    }
}

impl fmt::Display for IntegerMatrix {
    /// Bracketed rows with right-aligned entries:
    ///
    /// ```text
    /// [ -1  0  0 ]
    /// [  0  0  1 ]
    /// [  0  1  0 ]
    /// ```
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .entries
            .iter()
            .map(|e| e.to_string().len())
            .max()
            .unwrap_or(1);
        for i in 0..self.dim {
            write!(f, "[")?;
            for j in 0..self.dim {
                write!(f, " {:>width$}", self.get(i, j))?;
            }
            writeln!(f, " ]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntegerMatrix[{}x{}]", self.dim, self.dim)?;
        write!(f, "{self}")
    }
}

/// The two entry sets of a Garnir relation at a row descent: `a` from the
/// descent column, `b` from the column to its right.
#[derive(Clone, PartialEq, Eq)]
pub struct GarnirPair {
    a: Vec<usize>,
    b: Vec<usize>,
    degree: usize,
}

impl GarnirPair {
    /// Sorts both sets; they must be nonempty, disjoint, and within
    /// 1..=degree.
    pub fn new(mut a: Vec<usize>, mut b: Vec<usize>, degree: usize) -> Result<Self, SpechtError> {
        a.sort_unstable();
        b.sort_unstable();
        let disjoint = a.iter().all(|x| !b.contains(x));
        let in_range = a.iter().chain(&b).all(|&x| x >= 1 && x <= degree);
        let distinct = a.windows(2).all(|w| w[0] < w[1]) && b.windows(2).all(|w| w[0] < w[1]);
        if a.is_empty() || b.is_empty() || !disjoint || !in_range || !distinct {
            return Err(SpechtError::InvalidGarnirPair);
        }
        Ok(GarnirPair { a, b, degree })
    }

    /// The pair at a row descent (r, c) of a column-sorted tableau:
    /// `a` is column c from row r downward, `b` is column c+1 from the top
    /// down to row r.
    pub fn from_descent(t: &Tableau, descent: Cell) -> Result<Self, SpechtError> {
        let left = t
            .entry(descent)
            .ok_or(SpechtError::NotADescent(descent.row, descent.col))?;
        let right = t
            .entry(Cell::new(descent.row, descent.col + 1))
            .ok_or(SpechtError::NotADescent(descent.row, descent.col))?;
        if left <= right {
            return Err(SpechtError::NotADescent(descent.row, descent.col));
        }
        let a = t.column(descent.col)[descent.row - 1..].to_vec();
        let b = t.column(descent.col + 1)[..descent.row].to_vec();
        GarnirPair::new(a, b, t.n())
    }

    pub fn a(&self) -> &[usize] {
        &self.a
    }

    pub fn b(&self) -> &[usize] {
        &self.b
    }

    pub fn degree(&self) -> usize {
        self.degree
    }
}

impl fmt::Display for GarnirPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "A = {{{}}}, B = {{{}}}",
            self.a.iter().join(","),
            self.b.iter().join(",")
        )
    }
}

impl fmt::Debug for GarnirPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GarnirPair[{self}]")
    }
}

/// Signed coset representatives for the Garnir relation on `pair`.
///
/// One representative per split of the union of A and B into a part of
/// size |A| and a part of size |B|: the permutation carrying sorted A onto
/// the sorted new part elementwise, and likewise for B. The identity
/// (the split A, B itself) comes first, then splits in lexicographic
/// order of the new A-part. The list has C(|A|+|B|, |A|) entries.
pub fn garnir_transversal(pair: &GarnirPair) -> Vec<(i64, Permutation)> {
    let union: Vec<usize> = pair
        .a
        .iter()
        .chain(&pair.b)
        .copied()
        .sorted_unstable()
        .collect();
    let mut out = vec![(1, Permutation::identity(pair.degree))];
    for a_new in union.iter().copied().combinations(pair.a.len()) {
        if a_new == pair.a {
            continue;
        }
        let b_new: Vec<usize> = union
            .iter()
            .copied()
            .filter(|x| !a_new.contains(x))
            .collect();
        let mut images: Vec<usize> = (1..=pair.degree).collect();
        for (&from, &to) in pair.a.iter().zip(&a_new) {
            images[from - 1] = to;
        }
        for (&from, &to) in pair.b.iter().zip(&b_new) {
            images[from - 1] = to;
        }
        let pi = Permutation::from_images(images).expect("splits induce bijections");
        out.push((pi.sign(), pi));
    }
    out
}

/// One straightening step: at `descent` of the column-sorted `tableau`,
/// the Garnir relation over `pair` replaces its polytabloid by the signed
/// `terms` (coefficient, image tableau), which are then straightened in
/// turn.
#[derive(Clone, Debug)]
pub struct GarnirStep {
    pub tableau: Tableau,
    pub descent: Cell,
    pub pair: GarnirPair,
    pub terms: Vec<(i64, Tableau)>,
}

/// Rewriting engine for one Specht module: holds the standard basis and a
/// memo of straightened tableaux, and builds generator matrices.
pub struct Straightener {
    shape: Partition,
    order: BasisOrder,
    basis: Vec<Tableau>,
    index: HashMap<Tableau, usize>,
    memo: HashMap<Tableau, PolytabloidExpansion>,
}

impl Straightener {
    pub fn new(shape: &Partition, order: BasisOrder) -> Result<Self, SpechtError> {
        let basis = standard_tableaux(shape, order)?;
        let index = basis
            .iter()
            .enumerate()
            .map(|(j, t)| (t.clone(), j))
            .collect();
        Ok(Straightener {
            shape: shape.clone(),
            order,
            basis,
            index,
            memo: HashMap::new(),
        })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn order(&self) -> BasisOrder {
        self.order
    }

    pub fn basis(&self) -> &[Tableau] {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Writes `e_t` as an integer combination of standard polytabloids.
    pub fn straighten(&mut self, t: &Tableau) -> PolytabloidExpansion {
        assert_eq!(t.shape(), self.shape, "tableau shape must match");
        self.expand(t, &mut None)
    }

    /// Like [`Straightener::straighten`], also returning every Garnir step
    /// in the order performed (depth-first). The memo is bypassed so the
    /// trace is complete.
    pub fn straighten_traced(&mut self, t: &Tableau) -> (PolytabloidExpansion, Vec<GarnirStep>) {
        assert_eq!(t.shape(), self.shape, "tableau shape must match");
        let mut steps = Vec::new();
        let expansion = self.expand(t, &mut Some(&mut steps));
        (expansion, steps)
    }

    fn expand(
        &mut self,
        t: &Tableau,
        trace: &mut Option<&mut Vec<GarnirStep>>,
    ) -> PolytabloidExpansion {
        let (sorted, sign) = t.column_sort();
        if trace.is_none() {
            if let Some(hit) = self.memo.get(&sorted) {
                return hit.scaled(sign);
            }
        }
        let expansion = if let Some(&j) = self.index.get(&sorted) {
            PolytabloidExpansion::unit(self.shape.clone(), self.order, j, 1)
        } else {
            let descent = sorted
                .first_row_descent()
                .expect("columns are sorted")
                .expect("a column-sorted non-standard tableau has a row descent");
            let pair =
                GarnirPair::from_descent(&sorted, descent).expect("descent cell was just found");
            let terms: Vec<(i64, Tableau)> = garnir_transversal(&pair)
                .into_iter()
                .filter(|(_, pi)| !pi.is_identity())
                .map(|(pi_sign, pi)| {
                    let image = sorted.apply_perm(&pi).expect("degrees match");
                    (-pi_sign, image)
                })
                .collect();
            if let Some(steps) = trace.as_mut() {
                steps.push(GarnirStep {
                    tableau: sorted.clone(),
                    descent,
                    pair,
                    terms: terms.clone(),
                });
            }
            let mut acc = PolytabloidExpansion::zero(self.shape.clone(), self.order);
            for (coeff, image) in &terms {
                let sub = self.expand(image, trace);
                acc.add_scaled(&sub, *coeff);
            }
            acc
        };
        if trace.is_none() {
            self.memo.insert(sorted, expansion.clone());
        }
        expansion.scaled(sign)
    }

    /// Matrix of s_i = (i, i+1) on this module. Column j is the expansion
    /// of s_i acting on the j-th basis polytabloid, split by where i and
    /// i+1 sit in the tableau: same column negates, same row takes a
    /// Garnir rewrite, and otherwise the swapped tableau is standard.
    pub fn generator_matrix(&mut self, i: usize) -> Result<IntegerMatrix, SpechtError> {
        let n = self.shape.n();
        if i < 1 || i + 1 > n {
            return Err(SpechtError::GeneratorOutOfRange(i, n.saturating_sub(1)));
        }
        let s = Permutation::adjacent_transposition(n, i)?;
        let mut m = IntegerMatrix::zeros(self.dimension());
        for j in 0..self.dimension() {
            let t = self.basis[j].clone();
            let pos_i = t.position_of(i).expect("entries cover 1..=n");
            let pos_next = t.position_of(i + 1).expect("entries cover 1..=n");
            let column = if pos_i.col == pos_next.col {
                PolytabloidExpansion::unit(self.shape.clone(), self.order, j, -1)
            } else if pos_i.row == pos_next.row {
                let moved = t.apply_perm(&s)?;
                self.straighten(&moved)
            } else {
                let moved = t.apply_perm(&s)?;
                let k = *self
                    .index
                    .get(&moved)
                    .expect("swapping entries in distinct rows and columns keeps standardness");
                PolytabloidExpansion::unit(self.shape.clone(), self.order, k, 1)
            };
            m.set_column(j, &column);
        }
        Ok(m)
    }
}

/// The natural integer representation of S_n indexed by one shape: the
/// standard basis and all generator matrices, with arbitrary elements
/// reached through adjacent-transposition words.
pub struct NaturalRepresentation {
    shape: Partition,
    order: BasisOrder,
    basis: Vec<Tableau>,
    generators: Vec<IntegerMatrix>,
}

impl NaturalRepresentation {
    pub fn new(shape: &Partition, order: BasisOrder) -> Result<Self, SpechtError> {
        let mut engine = Straightener::new(shape, order)?;
        let generators = (1..shape.n())
            .map(|i| engine.generator_matrix(i))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(NaturalRepresentation {
            shape: shape.clone(),
            order,
            basis: engine.basis,
            generators,
        })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn order(&self) -> BasisOrder {
        self.order
    }

    pub fn basis(&self) -> &[Tableau] {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Matrix of s_i, 1 <= i <= n-1.
    pub fn generator(&self, i: usize) -> Result<&IntegerMatrix, SpechtError> {
        self.generators
            .get(i.wrapping_sub(1))
            .ok_or(SpechtError::GeneratorOutOfRange(i, self.generators.len()))
    }

    /// Matrix of an arbitrary permutation: the generator matrices are
    /// multiplied left to right along `sigma.adjacent_word()`, matching a
    /// word whose rightmost letter acts first.
    pub fn matrix(&self, sigma: &Permutation) -> Result<IntegerMatrix, SpechtError> {
        if sigma.degree() != self.shape.n() {
            return Err(PermError::DegreeMismatch(sigma.degree(), self.shape.n()).into());
        }
        let mut m = IntegerMatrix::identity(self.dimension());
        for &i in sigma.adjacent_word().letters() {
            m = m.mul(&self.generators[i - 1]);
        }
        Ok(m)
    }

    /// Trace of the matrix of `sigma`.
    pub fn character_value(&self, sigma: &Permutation) -> Result<i64, SpechtError> {
        Ok(self.matrix(sigma)?.trace())
    }
}

/// Expands `e_t` over the standard basis of the tableau's own shape.
pub fn straighten(t: &Tableau, order: BasisOrder) -> Result<PolytabloidExpansion, SpechtError> {
    let mut engine = Straightener::new(&t.shape(), order)?;
    Ok(engine.straighten(t))
}

/// Matrix of the generator s_i on the Specht module of `shape`.
pub fn generator_matrix(
    shape: &Partition,
    i: usize,
    order: BasisOrder,
) -> Result<IntegerMatrix, SpechtError> {
    Straightener::new(shape, order)?.generator_matrix(i)
}

/// Matrix of an arbitrary permutation on the Specht module of `shape`.
pub fn rep_matrix(
    shape: &Partition,
    sigma: &Permutation,
    order: BasisOrder,
) -> Result<IntegerMatrix, SpechtError> {
    NaturalRepresentation::new(shape, order)?.matrix(sigma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::partitions_of;

    fn t(text: &str) -> Tableau {
        Tableau::parse(text).unwrap()
    }

    fn shape(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn perm(text: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(text, n).unwrap()
    }

    #[test]
    fn expansion_arithmetic_and_display() {
        let sh = shape(&[2, 2]);
        let mut e = PolytabloidExpansion::zero(sh.clone(), BasisOrder::RowWordLex);
        assert!(e.is_zero());
        assert_eq!(e.to_string(), "0");
        e.add_term(0, 1);
        e.add_term(1, -1);
        e.add_term(2, 2);
        assert_eq!(e.to_string(), "+t1 -t2 +2t3");
        assert_eq!(e.to_dense(3), vec![1, -1, 2]);
        e.add_term(1, 1);
        assert_eq!(e.to_string(), "+t1 +2t3");
        let s = e.scaled(-1);
        assert_eq!(s.to_string(), "-t1 -2t3");
    }

    #[test]
    fn matrix_basics() {
        let id = IntegerMatrix::identity(3);
        assert!(id.is_identity());
        assert_eq!(id.trace(), 3);
        let a = IntegerMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(a.mul(&a), IntegerMatrix::identity(2));
        let b = IntegerMatrix::from_rows(&[vec![1, 0], vec![-1, -1]]);
        let ab = a.mul(&b);
        assert_eq!(ab, IntegerMatrix::from_rows(&[vec![-1, -1], vec![1, 0]]));
        assert_eq!(ab.trace(), -1);
    }

    #[test]
    fn matrix_display_aligns_entries() {
        let m = IntegerMatrix::from_rows(&[vec![-1, 0], vec![10, 1]]);
        assert_eq!(m.to_string(), "[ -1  0 ]\n[ 10  1 ]\n");
    }

    #[test]
    fn garnir_pair_from_descent() {
        let pair = GarnirPair::from_descent(&t("2,1/3/4"), Cell::new(1, 1)).unwrap();
        assert_eq!(pair.a(), &[2, 3, 4]);
        assert_eq!(pair.b(), &[1]);
        assert_eq!(pair.to_string(), "A = {2,3,4}, B = {1}");

        let pair = GarnirPair::from_descent(&t("1,4,3/2"), Cell::new(1, 2)).unwrap();
        assert_eq!(pair.a(), &[4]);
        assert_eq!(pair.b(), &[3]);

        // (1, 1) of 1,2/3/4 holds 1 < 2: not a descent.
        assert_eq!(
            GarnirPair::from_descent(&t("1,2/3/4"), Cell::new(1, 1)),
            Err(SpechtError::NotADescent(1, 1))
        );
        // No right neighbor at (2, 1) of 1,2/3/4.
        assert!(GarnirPair::from_descent(&t("1,2/3/4"), Cell::new(2, 1)).is_err());
    }

    #[test]
    fn garnir_pair_validation() {
        assert!(GarnirPair::new(vec![2, 3], vec![1], 4).is_ok());
        assert_eq!(
            GarnirPair::new(vec![2, 3], vec![3], 4),
            Err(SpechtError::InvalidGarnirPair)
        );
        assert_eq!(
            GarnirPair::new(vec![], vec![1], 4),
            Err(SpechtError::InvalidGarnirPair)
        );
        assert_eq!(
            GarnirPair::new(vec![5], vec![1], 4),
            Err(SpechtError::InvalidGarnirPair)
        );
    }

    #[test]
    fn transversal_for_two_one_split() {
        let pair = GarnirPair::new(vec![2, 3], vec![1], 4).unwrap();
        let reps: Vec<(i64, String)> = garnir_transversal(&pair)
            .into_iter()
            .map(|(s, p)| (s, p.to_string()))
            .collect();
        assert_eq!(
            reps,
            [
                (1, "e".to_string()),
                (1, "(1 3 2)".to_string()),
                (-1, "(1 2)".to_string()),
            ]
        );
    }

    #[test]
    fn transversal_for_singletons() {
        let pair = GarnirPair::new(vec![4], vec![3], 4).unwrap();
        let reps: Vec<(i64, String)> = garnir_transversal(&pair)
            .into_iter()
            .map(|(s, p)| (s, p.to_string()))
            .collect();
        assert_eq!(reps, [(1, "e".to_string()), (-1, "(3 4)".to_string())]);
    }

    #[test]
    fn transversal_counts_and_structure() {
        // C(|A| + |B|, |A|) representatives; each maps sorted A and sorted B
        // onto sorted images (order preserving), and each split occurs once.
        let pair = GarnirPair::new(vec![3, 5], vec![1, 2], 5).unwrap();
        let reps = garnir_transversal(&pair);
        assert_eq!(reps.len(), 6);
        let mut images_of_a: Vec<Vec<usize>> = Vec::new();
        for (sign, pi) in &reps {
            assert_eq!(*sign, pi.sign());
            let image_a: Vec<usize> = pair.a().iter().map(|&x| pi.apply(x)).collect();
            let image_b: Vec<usize> = pair.b().iter().map(|&x| pi.apply(x)).collect();
            assert!(image_a.windows(2).all(|w| w[0] < w[1]), "A image sorted");
            assert!(image_b.windows(2).all(|w| w[0] < w[1]), "B image sorted");
            // Everything outside A and B stays put.
            assert_eq!(pi.apply(4), 4);
            images_of_a.push(image_a);
        }
        images_of_a.sort();
        images_of_a.dedup();
        assert_eq!(images_of_a.len(), 6, "each split occurs exactly once");
    }

    #[test]
    fn straighten_standard_is_unit() {
        let e = straighten(&t("1,3/2,4"), BasisOrder::RowWordLex).unwrap();
        assert_eq!(e.to_string(), "+t2");
    }

    #[test]
    fn straighten_first_column_descent() {
        let e = straighten(&t("2,1/3/4"), BasisOrder::PaperS4).unwrap();
        assert_eq!(e.to_string(), "+t1 -t2 +t3");
    }

    #[test]
    fn straighten_two_row_shape() {
        let e = straighten(&t("2,1/3,4"), BasisOrder::PaperS4).unwrap();
        assert_eq!(e.to_string(), "+t1 -t2");
    }

    #[test]
    fn straighten_needs_two_steps() {
        // 2,1,3/4 first rewrites against the descent at (1, 1); one of the
        // two images, 1,4,3/2, needs a second rewrite at (1, 2).
        let e = straighten(&t("2,1,3/4"), BasisOrder::PaperS4).unwrap();
        assert_eq!(e.to_string(), "-t1 +t3");
    }

    #[test]
    fn straighten_accounts_for_column_sign() {
        // 3,1/2,4 column-sorts to 2,1/3,4 with one swap, so the expansion
        // is the negative of the two-row case above.
        let e = straighten(&t("3,1/2,4"), BasisOrder::PaperS4).unwrap();
        assert_eq!(e.to_string(), "-t1 +t2");
    }

    #[test]
    fn straighten_trace_records_steps() {
        let mut engine = Straightener::new(&shape(&[3, 1]), BasisOrder::PaperS4).unwrap();
        let (e, steps) = engine.straighten_traced(&t("2,1,3/4"));
        assert_eq!(e.to_string(), "-t1 +t3");
        assert_eq!(steps.len(), 2);
        assert_eq!(steps[0].tableau, t("2,1,3/4"));
        assert_eq!(steps[0].descent, Cell::new(1, 1));
        assert_eq!(steps[0].pair.a(), &[2, 4]);
        assert_eq!(steps[0].pair.b(), &[1]);
        assert_eq!(steps[1].tableau, t("1,4,3/2"));
        assert_eq!(steps[1].descent, Cell::new(1, 2));
        let traced_terms: Vec<(i64, String)> = steps[1]
            .terms
            .iter()
            .map(|(c, tab)| (*c, tab.to_string()))
            .collect();
        assert_eq!(traced_terms, [(1, "1,3,4/2".to_string())]);
    }

    #[test]
    fn straighten_agrees_with_traced_result() {
        let mut engine = Straightener::new(&shape(&[2, 2, 1]), BasisOrder::RowWordLex).unwrap();
        for sigma in Permutation::all(5).unwrap().iter().step_by(7) {
            let moved = t("1,2/3,4/5").apply_perm(sigma).unwrap();
            let plain = engine.straighten(&moved);
            let (traced, _) = engine.straighten_traced(&moved);
            assert_eq!(plain, traced, "sigma {sigma}");
        }
    }

    #[test]
    fn generator_matrices_for_2_1_1() {
        let sh = shape(&[2, 1, 1]);
        let m1 = generator_matrix(&sh, 1, BasisOrder::PaperS4).unwrap();
        assert_eq!(
            m1,
            IntegerMatrix::from_rows(&[vec![1, 0, 0], vec![-1, -1, 0], vec![1, 0, -1]])
        );
        let m3 = generator_matrix(&sh, 3, BasisOrder::PaperS4).unwrap();
        assert_eq!(
            m3,
            IntegerMatrix::from_rows(&[vec![-1, 0, 0], vec![0, 0, 1], vec![0, 1, 0]])
        );
    }

    #[test]
    fn generator_matrices_for_2_2() {
        let sh = shape(&[2, 2]);
        let m2 = generator_matrix(&sh, 2, BasisOrder::PaperS4).unwrap();
        assert_eq!(m2, IntegerMatrix::from_rows(&[vec![0, 1], vec![1, 0]]));
    }

    #[test]
    fn generator_index_out_of_range() {
        assert_eq!(
            generator_matrix(&shape(&[2, 2]), 4, BasisOrder::RowWordLex),
            Err(SpechtError::GeneratorOutOfRange(4, 3))
        );
        assert_eq!(
            generator_matrix(&shape(&[2, 2]), 0, BasisOrder::RowWordLex),
            Err(SpechtError::GeneratorOutOfRange(0, 3))
        );
    }

    #[test]
    fn sign_shape_gives_sign_matrices() {
        let sh = shape(&[1, 1, 1, 1]);
        for i in 1..=3 {
            let m = generator_matrix(&sh, i, BasisOrder::RowWordLex).unwrap();
            assert_eq!(m, IntegerMatrix::from_rows(&[vec![-1]]));
        }
        let m = rep_matrix(&sh, &perm("(2 3)", 4), BasisOrder::RowWordLex).unwrap();
        assert_eq!(m, IntegerMatrix::from_rows(&[vec![-1]]));
        let m = rep_matrix(&sh, &perm("(1 2 3)", 4), BasisOrder::RowWordLex).unwrap();
        assert_eq!(m, IntegerMatrix::from_rows(&[vec![1]]));
    }

    #[test]
    fn trivial_shape_gives_ones() {
        let sh = shape(&[4]);
        for sigma in ["e", "(1 2)", "(1 2 3 4)", "(1 3)(2 4)"] {
            let m = rep_matrix(&sh, &perm(sigma, 4), BasisOrder::RowWordLex).unwrap();
            assert_eq!(m, IntegerMatrix::from_rows(&[vec![1]]));
        }
    }

    #[test]
    fn rep_matrix_of_identity_and_four_cycle() {
        let sh = shape(&[2, 2]);
        let id = rep_matrix(&sh, &Permutation::identity(4), BasisOrder::PaperS4).unwrap();
        assert!(id.is_identity());
        let m = rep_matrix(&sh, &perm("(1 2 3 4)", 4), BasisOrder::PaperS4).unwrap();
        assert_eq!(m.trace(), 0);
    }

    #[test]
    fn rep_matrix_degree_mismatch() {
        let sh = shape(&[2, 2]);
        let sigma = Permutation::identity(5);
        assert!(matches!(
            rep_matrix(&sh, &sigma, BasisOrder::RowWordLex),
            Err(SpechtError::Perm(PermError::DegreeMismatch(5, 4)))
        ));
    }

    #[test]
    fn representation_is_multiplicative_on_samples() {
        let rep = NaturalRepresentation::new(&shape(&[3, 1]), BasisOrder::PaperS4).unwrap();
        let pairs = [
            ("(1 2)", "(2 3)"),
            ("(1 2 3 4)", "(1 3)"),
            ("(2 4)", "(1 4 3 2)"),
        ];
        for (a_text, b_text) in pairs {
            let a = perm(a_text, 4);
            let b = perm(b_text, 4);
            let product = rep.matrix(&a.compose(&b).unwrap()).unwrap();
            let factored = rep.matrix(&a).unwrap().mul(&rep.matrix(&b).unwrap());
            assert_eq!(product, factored, "{a_text} * {b_text}");
        }
    }

    #[test]
    fn generators_square_to_identity_for_n_5() {
        for sh in partitions_of(5) {
            let rep = NaturalRepresentation::new(&sh, BasisOrder::RowWordLex).unwrap();
            for i in 1..=4 {
                let m = rep.generator(i).unwrap();
                assert!(m.mul(m).is_identity(), "shape {sh}, generator {i}");
            }
        }
    }

    #[test]
    fn single_cell_shape() {
        let rep = NaturalRepresentation::new(&shape(&[1]), BasisOrder::RowWordLex).unwrap();
        assert_eq!(rep.dimension(), 1);
        let m = rep.matrix(&Permutation::identity(1)).unwrap();
        assert!(m.is_identity());
    }

    #[test]
    fn generator_matrices_for_3_1() {
        let rep = NaturalRepresentation::new(&shape(&[3, 1]), BasisOrder::PaperS4).unwrap();
        let m1 = rep.generator(1).unwrap();
        assert_eq!(
            *m1,
            IntegerMatrix::from_rows(&[vec![-1, -1, -1], vec![0, 1, 0], vec![0, 0, 1]])
        );
        let m2 = rep.generator(2).unwrap();
        assert_eq!(
            *m2,
            IntegerMatrix::from_rows(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]])
        );
    }
}
