//! Compares the hook-length dimension formula with direct enumeration of
//! standard tableaux, shape by shape, and checks that the squared
//! dimensions sum to n!.
//!
//! Usage: `cargo run --example hook_dimensions -- [max_n]` (default 8).

use young::{partitions_of, standard_tableaux, BasisOrder};

fn main() {
    let max_n: usize = std::env::args()
        .nth(1)
        .map(|a| a.parse().expect("max_n must be a positive integer"))
        .unwrap_or(8);

    for n in 1..=max_n {
        let mut sum_of_squares: u64 = 0;
        println!("n = {n}");
        for shape in partitions_of(n) {
            let by_hooks = shape.dimension();
            let by_enumeration = standard_tableaux(&shape, BasisOrder::RowWordLex)
                .expect("enumeration succeeds")
                .len() as u64;
            assert_eq!(by_hooks, by_enumeration);
            sum_of_squares += by_hooks * by_hooks;
            println!("  f^({shape}) = {by_hooks}");
        }
        let order: u64 = (1..=n as u64).product();
        assert_eq!(sum_of_squares, order);
        println!("  sum of squares = {sum_of_squares} = {n}!");
    }
}
