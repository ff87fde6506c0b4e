//! Prints the exact character table of S_n and confirms the rows are
//! orthonormal under the class-weighted inner product.
//!
//! Usage: `cargo run --example character_table -- [n]` (default 5).

use num::rational::Rational64;
use young::{character, character_table, inner_product, partitions_of, BasisOrder};

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .map(|a| a.parse().expect("n must be a small positive integer"))
        .unwrap_or(5);

    let table = character_table(n).expect("n within the enumeration limit");
    println!("{table}");

    let rows: Vec<_> = partitions_of(n)
        .iter()
        .map(|shape| character(shape, BasisOrder::RowWordLex).expect("valid shape"))
        .collect();
    for a in &rows {
        for b in &rows {
            let product = inner_product(a, b).expect("same class sets");
            let expected = Rational64::from_integer(i64::from(a.shape() == b.shape()));
            assert_eq!(product, expected);
        }
    }
    println!("\nall {0} x {0} inner products are orthonormal", rows.len());
}
