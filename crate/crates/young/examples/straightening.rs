//! Straightens a polytabloid into the standard basis, showing every
//! Garnir step: the offending descent, the pair (A, B), and the signed
//! replacement tableaux.
//!
//! Usage: `cargo run --example straightening -- [tableau]` with rows
//! separated by `/`, e.g. `2,1,3/4` (the default, which needs two steps).

use young::{BasisOrder, Straightener, Tableau};

fn main() {
    let text = std::env::args().nth(1).unwrap_or_else(|| "2,1,3/4".into());
    let t = Tableau::parse(&text).expect("tableau like 2,1,3/4");
    let mut straightener =
        Straightener::new(&t.shape(), BasisOrder::RowWordLex).expect("valid shape");

    println!("input tableau {t} of shape {}", t.shape());
    for (j, u) in straightener.basis().iter().enumerate() {
        println!("  t{} = {u}", j + 1);
    }

    let (expansion, steps) = straightener.straighten_traced(&t);
    for (k, step) in steps.iter().enumerate() {
        println!(
            "step {}: {} has a row descent at ({}, {}); {}",
            k + 1,
            step.tableau,
            step.descent.row,
            step.descent.col,
            step.pair
        );
        for (coeff, u) in &step.terms {
            println!("    {} e_[{u}]", if *coeff < 0 { "-" } else { "+" });
        }
    }
    println!("e_[{t}] = {expansion}");
}
