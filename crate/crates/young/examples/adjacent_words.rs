//! Decomposes every element of S_n into adjacent transpositions and
//! verifies each word by multiplying it back out. The words are reduced:
//! their length equals the inversion count of the permutation.
//!
//! Usage: `cargo run --example adjacent_words -- [n]` (default 4).

use young::Permutation;

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .map(|a| a.parse().expect("n must be a small positive integer"))
        .unwrap_or(4);

    for sigma in Permutation::all(n).expect("n within the enumeration limit") {
        let word = sigma.adjacent_word();
        assert_eq!(word.evaluate(), sigma);
        assert_eq!(word.len(), sigma.inversions());
        assert_eq!(word.sign(), sigma.sign());
        println!(
            "{:<16} = {:<44} length {:>2}, sign {:+}",
            sigma.to_string(),
            word.to_string(),
            word.len(),
            word.sign()
        );
    }
}
