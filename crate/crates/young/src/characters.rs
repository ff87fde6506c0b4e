//! Characters of the natural representations: rows, whole tables, and
//! exact inner products.

use std::collections::BTreeMap;
use std::fmt;

use num::rational::Rational64;
use thiserror::Error;

use crate::perm::{class_size, conjugacy_classes, PermError, Permutation, ENUMERATION_LIMIT};
use crate::shapes::{partitions_of, Partition};
use crate::specht::{NaturalRepresentation, SpechtError};
use crate::tableaux::BasisOrder;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CharacterError {
    #[error(transparent)]
    Specht(#[from] SpechtError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("character rows have different class sets")]
    MismatchedClasses,
}

/// One character: the trace of the representation of a shape on each
/// conjugacy class of S_n, keyed by cycle type in ascending order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharacterRow {
    shape: Partition,
    values: BTreeMap<Partition, i64>,
}

impl CharacterRow {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn value(&self, class: &Partition) -> Option<i64> {
        self.values.get(class).copied()
    }

    pub fn classes(&self) -> impl Iterator<Item = &Partition> + '_ {
        self.values.keys()
    }

    /// Values in ascending class order.
    pub fn values(&self) -> impl Iterator<Item = (&Partition, i64)> + '_ {
        self.values.iter().map(|(c, &v)| (c, v))
    }
}

/// The canonical member of a conjugacy class: cycles laid out on
/// consecutive integers, one per part, so cycle type 3,1 gives (1 2 3).
pub fn class_representative(class: &Partition) -> Permutation {
    let n = class.n();
    let mut images: Vec<usize> = (1..=n).collect();
    let mut start = 1;
    for &part in class.parts() {
        for offset in 0..part {
            images[start + offset - 1] = start + (offset + 1) % part;
        }
        start += part;
    }
    Permutation::from_images(images).expect("consecutive cycles fill 1..=n")
}

/// The character of the representation of `shape`, evaluated on every
/// conjugacy class of S_n.
///
/// For n <= 5 the trace is computed on every member of every class and
/// asserted constant, rather than trusting a single representative; larger
/// degrees evaluate the canonical representative only.
pub fn character(shape: &Partition, order: BasisOrder) -> Result<CharacterRow, CharacterError> {
    let n = shape.n();
    let rep = NaturalRepresentation::new(shape, order)?;
    let mut values = BTreeMap::new();
    if n <= 5 {
        for (cycle_type, members) in conjugacy_classes(n)? {
            let mut traces = members
                .iter()
                .map(|sigma| rep.character_value(sigma).map_err(CharacterError::from));
            let first = traces.next().expect("classes are nonempty")?;
            for trace in traces {
                assert_eq!(
                    trace?, first,
                    "trace must be constant on class {cycle_type} for shape {shape}"
                );
            }
            values.insert(cycle_type, first);
        }
    } else {
        for class in partitions_of(n) {
            let value = rep.character_value(&class_representative(&class))?;
            values.insert(class, value);
        }
    }
    Ok(CharacterRow {
        shape: shape.clone(),
        values,
    })
}

/// The full character table of S_n: one row per shape and one column per
/// class, both in ascending partition order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharacterTable {
    n: usize,
    shapes: Vec<Partition>,
    class_sizes: Vec<u64>,
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Row and column labels alike: the partitions of n, ascending.
    pub fn shapes(&self) -> &[Partition] {
        &self.shapes
    }

    /// Sizes of the conjugacy classes, parallel to [`CharacterTable::shapes`].
    pub fn class_sizes(&self) -> &[u64] {
        &self.class_sizes
    }

    /// `values()[i][j]` is the character of the i-th shape on the j-th class.
    pub fn values(&self) -> &[Vec<i64>] {
        &self.values
    }

    pub fn value(&self, shape: &Partition, class: &Partition) -> Option<i64> {
        let i = self.shapes.iter().position(|s| s == shape)?;
        let j = self.shapes.iter().position(|s| s == class)?;
        Some(self.values[i][j])
    }
}

impl fmt::Display for CharacterTable {
    /// A padded table with class labels and sizes in the header.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.shapes.iter().map(|s| s.to_string()).collect();
        let label_width = labels.iter().map(String::len).max().unwrap_or(1).max(7);
        let col_widths: Vec<usize> = labels
            .iter()
            .enumerate()
            .map(|(j, label)| {
                let widest_value = self
                    .values
                    .iter()
                    .map(|row| row[j].to_string().len())
                    .max()
                    .unwrap_or(1);
                label
                    .len()
                    .max(widest_value)
                    .max(self.class_sizes[j].to_string().len())
            })
            .collect();
        write!(f, "{:<label_width$}", "classes")?;
        for (label, w) in labels.iter().zip(&col_widths) {
            write!(f, "  {label:>w$}")?;
        }
        writeln!(f)?;
        write!(f, "{:<label_width$}", "sizes")?;
        for (size, w) in self.class_sizes.iter().zip(&col_widths) {
            write!(f, "  {size:>w$}")?;
        }
        writeln!(f)?;
        for (label, row) in labels.iter().zip(&self.values) {
            write!(f, "{label:<label_width$}")?;
            for (value, w) in row.iter().zip(&col_widths) {
                write!(f, "  {value:>w$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Builds the character table of S_n in the row-word basis order.
/// Errors past the enumeration limit.
pub fn character_table(n: usize) -> Result<CharacterTable, CharacterError> {
    if n == 0 {
        return Err(PermError::ZeroDegree.into());
    }
    if n > ENUMERATION_LIMIT {
        return Err(PermError::EnumerationLimit(n).into());
    }
    let shapes = partitions_of(n);
    let class_sizes = shapes.iter().map(class_size).collect();
    let mut values = Vec::with_capacity(shapes.len());
    for shape in &shapes {
        let row = character(shape, BasisOrder::RowWordLex)?;
        values.push(
            shapes
                .iter()
                .map(|class| row.value(class).expect("row covers every class"))
                .collect(),
        );
    }
    Ok(CharacterTable {
        n,
        shapes,
        class_sizes,
        values,
    })
}

/// The standard inner product of two characters of the same S_n:
/// (1/n!) * sum over classes of |class| * a * b, as an exact rational.
/// Distinct irreducible characters give 0; a character paired with itself
/// gives 1.
pub fn inner_product(a: &CharacterRow, b: &CharacterRow) -> Result<Rational64, CharacterError> {
    if a.shape.n() != b.shape.n() || a.values.len() != b.values.len() {
        return Err(CharacterError::MismatchedClasses);
    }
    let n = a.shape.n();
    let mut numerator: i64 = 0;
    for (class, av) in a.values() {
        let bv = b.value(class).ok_or(CharacterError::MismatchedClasses)?;
        numerator += class_size(class) as i64 * av * bv;
    }
    let order: i64 = (1..=n as i64).product();
    Ok(Rational64::new(numerator, order))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn row_values(row: &CharacterRow) -> Vec<i64> {
        row.values().map(|(_, v)| v).collect()
    }

    #[test]
    fn class_representative_examples() {
        assert_eq!(class_representative(&shape(&[3, 1])).to_string(), "(1 2 3)");
        assert_eq!(
            class_representative(&shape(&[2, 2])).to_string(),
            "(1 2)(3 4)"
        );
        assert_eq!(class_representative(&shape(&[1, 1, 1, 1])).to_string(), "e");
        assert_eq!(class_representative(&shape(&[4])).to_string(), "(1 2 3 4)");
    }

    #[test]
    fn class_representative_has_its_cycle_type() {
        for n in 1..=7 {
            for class in partitions_of(n) {
                assert_eq!(class_representative(&class).cycle_type(), class);
            }
        }
    }

    #[test]
    fn characters_of_s4_rows() {
        let cases: &[(&[usize], &[i64])] = &[
            (&[1, 1, 1, 1], &[1, -1, 1, 1, -1]),
            (&[2, 1, 1], &[3, -1, -1, 0, 1]),
            (&[2, 2], &[2, 0, 2, -1, 0]),
            (&[3, 1], &[3, 1, -1, 0, -1]),
            (&[4], &[1, 1, 1, 1, 1]),
        ];
        for (parts, expect) in cases {
            let row = character(&shape(parts), BasisOrder::RowWordLex).unwrap();
            assert_eq!(&row_values(&row), expect, "shape {:?}", parts);
        }
    }

    #[test]
    fn character_does_not_depend_on_basis_order() {
        for sh in partitions_of(4) {
            let lex = character(&sh, BasisOrder::RowWordLex).unwrap();
            let literal = character(&sh, BasisOrder::PaperS4).unwrap();
            assert_eq!(row_values(&lex), row_values(&literal), "shape {sh}");
        }
    }

    #[test]
    fn character_table_of_s4() {
        let table = character_table(4).unwrap();
        assert_eq!(table.n(), 4);
        assert_eq!(table.class_sizes(), &[1, 6, 3, 8, 6]);
        assert_eq!(
            table.values(),
            &[
                vec![1, -1, 1, 1, -1],
                vec![3, -1, -1, 0, 1],
                vec![2, 0, 2, -1, 0],
                vec![3, 1, -1, 0, -1],
                vec![1, 1, 1, 1, 1],
            ]
        );
        assert_eq!(table.value(&shape(&[2, 2]), &shape(&[3, 1])), Some(-1));
    }

    #[test]
    fn character_tables_of_tiny_groups() {
        let t1 = character_table(1).unwrap();
        assert_eq!(t1.values(), &[vec![1]]);
        let t2 = character_table(2).unwrap();
        assert_eq!(t2.values(), &[vec![1, -1], vec![1, 1]]);
        assert_eq!(t2.class_sizes(), &[1, 1]);
    }

    #[test]
    fn character_table_rejects_degrees_past_the_limit() {
        assert!(matches!(
            character_table(11),
            Err(CharacterError::Perm(PermError::EnumerationLimit(11)))
        ));
        assert!(character_table(0).is_err());
    }

    #[test]
    fn first_column_is_the_dimension() {
        for n in 1..=6 {
            let table = character_table(n).unwrap();
            let identity_class = shape(&vec![1; n]);
            for sh in table.shapes() {
                assert_eq!(
                    table.value(sh, &identity_class).unwrap(),
                    sh.dimension() as i64,
                    "shape {sh}"
                );
            }
        }
    }

    #[test]
    fn trivial_and_sign_rows() {
        for n in 2..=6 {
            let table = character_table(n).unwrap();
            let trivial = shape(&[n]);
            let sign = shape(&vec![1; n]);
            for class in table.shapes() {
                assert_eq!(table.value(&trivial, class), Some(1), "class {class}");
                assert_eq!(
                    table.value(&sign, class),
                    Some(class_representative(class).sign()),
                    "class {class}"
                );
            }
        }
    }

    #[test]
    fn sum_of_squared_dimensions_is_group_order() {
        for n in 1..=6 {
            let total: u64 = partitions_of(n)
                .iter()
                .map(|sh| sh.dimension() * sh.dimension())
                .sum();
            let order: u64 = (1..=n as u64).product();
            assert_eq!(total, order, "n = {n}");
        }
    }

    #[test]
    fn inner_products_are_orthonormal_for_s4() {
        let rows: Vec<CharacterRow> = partitions_of(4)
            .iter()
            .map(|sh| character(sh, BasisOrder::RowWordLex).unwrap())
            .collect();
        for (i, a) in rows.iter().enumerate() {
            for (j, b) in rows.iter().enumerate() {
                let expect = Rational64::from_integer(i64::from(i == j));
                assert_eq!(
                    inner_product(a, b).unwrap(),
                    expect,
                    "rows {} and {}",
                    a.shape(),
                    b.shape()
                );
            }
        }
    }

    #[test]
    fn inner_product_rejects_mismatched_degrees() {
        let a = character(&shape(&[3, 1]), BasisOrder::RowWordLex).unwrap();
        let b = character(&shape(&[3, 2]), BasisOrder::RowWordLex).unwrap();
        assert_eq!(
            inner_product(&a, &b),
            Err(CharacterError::MismatchedClasses)
        );
    }

    #[test]
    fn table_display_lines_up() {
        let text = character_table(4).unwrap().to_string();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 7);
        assert!(lines[0].starts_with("classes"));
        assert!(lines[1].starts_with("sizes"));
        assert!(lines[2].ends_with("-1"));
        let widths: Vec<usize> = lines.iter().map(|l| l.len()).collect();
        assert!(widths.windows(2).all(|w| w[0] == w[1]), "{text}");
    }
}
