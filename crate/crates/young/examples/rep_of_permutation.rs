//! Builds the representation matrix of an arbitrary permutation as the
//! product of generator matrices along its adjacent-transposition word.
//!
//! Usage: `cargo run --example rep_of_permutation -- [shape] [perm]`
//! defaulting to shape `2,2` and the four-cycle `(1 2 3 4)`.

use young::{BasisOrder, NaturalRepresentation, Partition, Permutation};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let shape: Partition = args
        .first()
        .map(String::as_str)
        .unwrap_or("2,2")
        .parse()
        .expect("shape must be weakly decreasing parts like 2,2");
    let sigma = Permutation::parse(
        args.get(1).map(String::as_str).unwrap_or("(1 2 3 4)"),
        shape.n(),
    )
    .expect("permutation in cycle or one-line form");

    let word = sigma.adjacent_word();
    println!("sigma = {sigma}");
    println!(
        "word  = {word} (length {}, sign {})",
        word.len(),
        word.sign()
    );
    assert_eq!(word.evaluate(), sigma);

    let rep =
        NaturalRepresentation::new(&shape, BasisOrder::RowWordLex).expect("representation builds");
    let matrix = rep.matrix(&sigma).expect("degrees match");
    println!("X_{{{shape}}}({sigma}) =");
    print!("{matrix}");
    println!("trace = {}", matrix.trace());

    // The inverse comes from the group, not from numeric inversion.
    let inverse = rep.matrix(&sigma.inverse()).expect("degrees match");
    assert!(matrix.mul(&inverse).is_identity());
    println!("X(sigma) X(sigma^-1) = I confirmed");
}
