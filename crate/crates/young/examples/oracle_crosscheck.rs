//! Re-derives representation matrices inside the permutation module on
//! tabloids, with exact rational arithmetic, and checks them against the
//! generator-product construction. The two paths share no code: one
//! straightens polytabloids symbolically, the other solves linear systems
//! over the tabloid basis.
//!
//! Usage: `cargo run --example oracle_crosscheck -- [shape]` (default `3,1`).

use young::{BasisOrder, NaturalRepresentation, Partition, Permutation, SpechtBasis};

fn main() {
    let shape: Partition = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "3,1".into())
        .parse()
        .expect("shape must be weakly decreasing parts like 3,1");
    let n = shape.n();

    let rep =
        NaturalRepresentation::new(&shape, BasisOrder::RowWordLex).expect("representation builds");
    let oracle =
        SpechtBasis::new(&shape, BasisOrder::RowWordLex).expect("shape within the oracle limits");

    // Small degrees check the whole group; larger ones check the generators.
    let elements = if n <= 5 {
        Permutation::all(n).expect("n within the enumeration limit")
    } else {
        (1..n)
            .map(|i| Permutation::adjacent_transposition(n, i).expect("valid index"))
            .collect()
    };

    let mut checked = 0;
    for sigma in &elements {
        let direct = rep.matrix(sigma).expect("degrees match");
        let brute = oracle.matrix(sigma).expect("within oracle limits");
        assert_eq!(direct, brute, "disagreement at {sigma}");
        checked += 1;
    }
    println!(
        "shape {shape}: straightening and the tabloid model agree on {checked} matrices \
         of dimension {}",
        rep.dimension()
    );

    let sample = &elements[elements.len() / 2];
    println!("\nfor instance X({sample}) =");
    print!("{}", rep.matrix(sample).expect("degrees match"));
}
