//! Prints the matrix of every adjacent transposition on one Specht module.
//!
//! Usage: `cargo run --example generator_matrices -- [shape] [order]`
//! with shape like `3,1` (default `2,1,1`) and order `rowlex` or `paper`
//! (default `rowlex`; `paper` is the classical S_4 listing).

use young::{BasisOrder, NaturalRepresentation, Partition};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let shape: Partition = args
        .first()
        .map(String::as_str)
        .unwrap_or("2,1,1")
        .parse()
        .expect("shape must be weakly decreasing parts like 3,1");
    let order = match args.get(1).map(String::as_str) {
        Some("paper") => BasisOrder::PaperS4,
        _ => BasisOrder::RowWordLex,
    };
    let rep = NaturalRepresentation::new(&shape, order).expect("representation builds");

    println!(
        "Specht module of shape {shape}: dimension {} over {} standard tableaux",
        rep.dimension(),
        rep.dimension()
    );
    for (j, t) in rep.basis().iter().enumerate() {
        println!("  t{} = {t}", j + 1);
    }
    for i in 1..shape.n() {
        println!("\nX(({i} {})) =", i + 1);
        print!("{}", rep.generator(i).expect("index in range"));
    }
}
