//! Brute-force cross-check in the permutation module on tabloids.
//!
//! Polytabloids are expanded literally as signed sums of tabloids, the
//! permutation action relabels tabloid entries, and coordinates in the
//! standard-polytabloid basis are recovered by exact rational linear
//! algebra. Nothing here reuses the straightening engine, so agreement
//! with [`crate::specht`] is a genuine two-route check.

use std::collections::BTreeSet;
use std::fmt;

use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::perm::Permutation;
use crate::shapes::Partition;
use crate::specht::{IntegerMatrix, PolytabloidExpansion};
use crate::tableaux::{standard_tableaux, BasisOrder, Tableau, TableauError, Tabloid};

/// Degree bound for the oracle; tabloid counts explode past this.
pub const ORACLE_MAX_N: usize = 8;
/// Dimension bound for the oracle's linear solves.
pub const ORACLE_MAX_DIM: u64 = 200;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error(
        "oracle limit exceeded for shape {shape}: n = {n} (max {ORACLE_MAX_N}), \
         dimension = {dim} (max {ORACLE_MAX_DIM})"
    )]
    SizeLimit { shape: String, n: usize, dim: u64 },
    #[error("vector lies outside the span of the standard polytabloids")]
    Inconsistent,
    #[error("coordinates are not integral")]
    NonIntegral,
    #[error("standard polytabloids came out linearly dependent; enumeration bug")]
    LinearlyDependent,
}

/// An exact-rational vector in the permutation module: a finite formal sum
/// of tabloids of one shape.
#[derive(Clone, PartialEq, Eq)]
pub struct TabloidVector {
    shape: Partition,
    coeffs: std::collections::BTreeMap<Tabloid, BigRational>,
}

impl TabloidVector {
    pub fn zero(shape: Partition) -> Self {
        TabloidVector {
            shape,
            coeffs: std::collections::BTreeMap::new(),
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Number of tabloids with nonzero coefficient.
    pub fn support_size(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, tabloid: &Tabloid) -> BigRational {
        self.coeffs
            .get(tabloid)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Terms in tabloid order; coefficients are nonzero.
    pub fn iter(&self) -> impl Iterator<Item = (&Tabloid, &BigRational)> + '_ {
        self.coeffs.iter()
    }

    pub fn add_term(&mut self, tabloid: Tabloid, coeff: BigRational) {
        debug_assert_eq!(tabloid.shape(), self.shape);
        if coeff.is_zero() {
            return;
        }
        match self.coeffs.entry(tabloid) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Adds `factor * other` termwise.
    pub fn add_scaled(&mut self, other: &TabloidVector, factor: &BigRational) {
        for (tabloid, coeff) in other.iter() {
            self.add_term(tabloid.clone(), coeff * factor);
        }
    }

    pub fn scaled(&self, factor: &BigRational) -> TabloidVector {
        let mut out = TabloidVector::zero(self.shape.clone());
        out.add_scaled(self, factor);
        out
    }
}

impl fmt::Display for TabloidVector {
    /// Signed tabloids in brackets: `+[1,2/3,4] -[1,4/2,3]`, with the
    /// coefficient spelled out when its magnitude is not 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (tabloid, coeff) in self.iter() {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{}", if coeff.is_negative() { '-' } else { '+' })?;
            let magnitude = coeff.abs();
            if !magnitude.is_one() {
                write!(f, "{magnitude}")?;
            }
            write!(f, "[{tabloid}]")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for TabloidVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TabloidVector[{self}]")
    }
}

/// The polytabloid of `t`, written out in full: the signed sum of the
/// tabloids of pi(t) over all pi preserving the columns of t setwise. The
/// sum has (product of column lengths factorial) distinct terms.
pub fn polytabloid(t: &Tableau) -> TabloidVector {
    let mut v = TabloidVector::zero(t.shape());
    for pi in t.column_group() {
        let image = t.apply_perm(&pi).expect("degrees match");
        v.add_term(
            image.to_tabloid(),
            BigRational::from_integer(pi.sign().into()),
        );
    }
    v
}

/// The permutation action on the module: relabels every tabloid entrywise,
/// keeping coefficients.
pub fn act(sigma: &Permutation, v: &TabloidVector) -> Result<TabloidVector, OracleError> {
    if sigma.degree() != v.shape.n() {
        return Err(OracleError::DegreeMismatch(sigma.degree(), v.shape.n()));
    }
    let mut out = TabloidVector::zero(v.shape.clone());
    for (tabloid, coeff) in v.iter() {
        out.add_term(tabloid.apply_perm(sigma)?, coeff.clone());
    }
    Ok(out)
}

/// The standard polytabloids of one shape with a precomputed solver: a set
/// of pivot tabloids whose coefficient submatrix is invertible, plus that
/// inverse, found once by rational elimination. Construction fails with
/// [`OracleError::SizeLimit`] beyond n = 8 or dimension 200.
pub struct SpechtBasis {
    shape: Partition,
    order: BasisOrder,
    basis: Vec<Tableau>,
    vectors: Vec<TabloidVector>,
    pivots: Vec<Tabloid>,
    inverse: Vec<Vec<BigRational>>,
}

impl fmt::Debug for SpechtBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SpechtBasis[shape {}, order {}, dim {}]",
            self.shape,
            self.order,
            self.basis.len()
        )
    }
}

impl SpechtBasis {
    pub fn new(shape: &Partition, order: BasisOrder) -> Result<Self, OracleError> {
        let n = shape.n();
        let dim = shape.dimension();
        if n > ORACLE_MAX_N || dim > ORACLE_MAX_DIM {
            return Err(OracleError::SizeLimit {
                shape: shape.to_string(),
                n,
                dim,
            });
        }
        let basis = standard_tableaux(shape, order)?;
        let vectors: Vec<TabloidVector> = basis.iter().map(polytabloid).collect();
        let f = vectors.len();

        // Row-reduce the (tabloid x basis) coefficient matrix just far
        // enough to find f rows whose square submatrix is invertible.
        let support: BTreeSet<Tabloid> = vectors
            .iter()
            .flat_map(|v| v.iter().map(|(t, _)| t.clone()))
            .collect();
        let mut reduced_rows: Vec<Vec<BigRational>> = Vec::new();
        let mut pivot_cols: Vec<usize> = Vec::new();
        let mut pivots: Vec<Tabloid> = Vec::new();
        for tabloid in support {
            if pivots.len() == f {
                break;
            }
            let mut row: Vec<BigRational> = vectors.iter().map(|v| v.coeff(&tabloid)).collect();
            for (prow, &pcol) in reduced_rows.iter().zip(&pivot_cols) {
                if !row[pcol].is_zero() {
                    let factor = &row[pcol] / &prow[pcol];
                    for j in 0..f {
                        let delta = &factor * &prow[j];
                        row[j] -= delta;
                    }
                }
            }
            if let Some(col) = row.iter().position(|x| !x.is_zero()) {
                reduced_rows.push(row);
                pivot_cols.push(col);
                pivots.push(tabloid);
            }
        }
        if pivots.len() < f {
            return Err(OracleError::LinearlyDependent);
        }

        let square: Vec<Vec<BigRational>> = pivots
            .iter()
            .map(|t| vectors.iter().map(|v| v.coeff(t)).collect())
            .collect();
        let inverse = invert(square).ok_or(OracleError::LinearlyDependent)?;
        Ok(SpechtBasis {
            shape: shape.clone(),
            order,
            basis,
            vectors,
            pivots,
            inverse,
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

    /// The expanded standard polytabloids, parallel to [`SpechtBasis::basis`].
    pub fn vectors(&self) -> &[TabloidVector] {
        &self.vectors
    }

    /// Integer coordinates of `v` in the standard-polytabloid basis.
    ///
    /// Solves on the pivot tabloids, then checks the candidate against all
    /// of `v`: a mismatch means `v` is outside the span
    /// ([`OracleError::Inconsistent`]); non-integer coordinates are
    /// reported as [`OracleError::NonIntegral`].
    pub fn express(&self, v: &TabloidVector) -> Result<Vec<i64>, OracleError> {
        if *v.shape() != self.shape {
            return Err(OracleError::DegreeMismatch(v.shape().n(), self.shape.n()));
        }
        let f = self.dimension();
        let rhs: Vec<BigRational> = self.pivots.iter().map(|t| v.coeff(t)).collect();
        let coords: Vec<BigRational> = (0..f)
            .map(|i| {
                (0..f)
                    .map(|k| &self.inverse[i][k] * &rhs[k])
                    .fold(BigRational::zero(), |acc, x| acc + x)
            })
            .collect();
        let mut candidate = TabloidVector::zero(self.shape.clone());
        for (coeff, vector) in coords.iter().zip(&self.vectors) {
            candidate.add_scaled(vector, coeff);
        }
        if candidate != *v {
            return Err(OracleError::Inconsistent);
        }
        coords
            .iter()
            .map(|c| {
                if !c.is_integer() {
                    return Err(OracleError::NonIntegral);
                }
                c.to_integer().to_i64().ok_or(OracleError::NonIntegral)
            })
            .collect()
    }

    /// Matrix of `sigma` recomputed entirely in the tabloid module:
    /// column j holds the coordinates of `sigma` acting on the j-th
    /// standard polytabloid.
    pub fn matrix(&self, sigma: &Permutation) -> Result<IntegerMatrix, OracleError> {
        let f = self.dimension();
        let mut m = IntegerMatrix::zeros(f);
        for (j, vector) in self.vectors.iter().enumerate() {
            let moved = act(sigma, vector)?;
            for (i, c) in self.express(&moved)?.into_iter().enumerate() {
                m.set(i, j, c);
            }
        }
        Ok(m)
    }
}

/// Exact inverse by Gauss-Jordan elimination; `None` for a singular matrix.
fn invert(mut m: Vec<Vec<BigRational>>) -> Option<Vec<Vec<BigRational>>> {
    let f = m.len();
    let mut inv: Vec<Vec<BigRational>> = (0..f)
        .map(|i| {
            (0..f)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..f {
        let pivot_row = (col..f).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot_row);
        inv.swap(col, pivot_row);
        let pivot = m[col][col].clone();
        for j in 0..f {
            m[col][j] /= &pivot;
            inv[col][j] /= &pivot;
        }
        for r in 0..f {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for j in 0..f {
                let dm = &factor * &m[col][j];
                m[r][j] -= dm;
                let di = &factor * &inv[col][j];
                inv[r][j] -= di;
            }
        }
    }
    Some(inv)
}

/// Coordinates of an arbitrary module vector over the standard basis of
/// its own shape, as a [`PolytabloidExpansion`].
pub fn express_in_standard_basis(
    v: &TabloidVector,
    order: BasisOrder,
) -> Result<PolytabloidExpansion, OracleError> {
    let basis = SpechtBasis::new(v.shape(), order)?;
    let coords = basis.express(v)?;
    let mut out = PolytabloidExpansion::zero(v.shape().clone(), order);
    for (j, c) in coords.into_iter().enumerate() {
        out.add_term(j, c);
    }
    Ok(out)
}

/// Matrix of `sigma` on the Specht module of `shape`, via the tabloid
/// model alone.
pub fn oracle_matrix(
    shape: &Partition,
    sigma: &Permutation,
    order: BasisOrder,
) -> Result<IntegerMatrix, OracleError> {
    if sigma.degree() != shape.n() {
        return Err(OracleError::DegreeMismatch(sigma.degree(), shape.n()));
    }
    SpechtBasis::new(shape, order)?.matrix(sigma)
}
