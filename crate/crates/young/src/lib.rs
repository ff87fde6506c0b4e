//! Young's natural irreducible representations of symmetric groups.
//!
//! This crate constructs, entirely over the integers, the natural
//! representation matrices of S_n on the Specht module indexed by a
//! partition of n. The basis is the set of standard Young tableaux of that
//! shape; the matrix of a generator is obtained by acting on each basis
//! polytabloid and rewriting the result with Garnir straightening. From the
//! generator matrices the crate assembles the matrix of an arbitrary
//! permutation, exact character tables, and orthogonality checks. A
//! brute-force model of the permutation module on tabloids, computed with
//! exact rational arithmetic, re-derives the same matrices independently
//! and serves as a cross-check at desk scale.
//!
//! # Where to start
//!
//! The `examples/` directory is the primary interface; each example is a
//! small, runnable program for one capability:
//!
//! ```text
//! cargo run --example generator_matrices   # matrices of (i, i+1) on a Specht module
//! cargo run --example straightening        # Garnir expansion of a non-standard polytabloid
//! cargo run --example rep_of_permutation   # matrix of an arbitrary permutation
//! cargo run --example adjacent_words       # reduced words in adjacent transpositions
//! cargo run --example hook_dimensions      # hook-length dimensions vs. tableau counts
//! cargo run --example character_table      # exact character table of S_n
//! cargo run --example oracle_crosscheck    # tabloid-model verification of the matrices
//! ```
//!
//! A thin `young` binary exposes the same capabilities as subcommands
//! (`matrix`, `straighten`, `chartable`, `decompose`, `verify`); see the
//! README for the command-line contract.
//!
//! # Module map
//!
//! * [`shapes`]: partitions, Ferrers cells, hook lengths, dimensions.
//! * [`perm`]: permutations, cycle notation, conjugacy classes, reduced
//!   words in the adjacent transpositions.
//! * [`tableaux`]: tableaux, tabloids, standard enumeration, basis orders.
//! * [`specht`]: polytabloid straightening and the representation matrices.
//! * [`oracle`]: the tabloid-model verifier (exact rationals).
//! * [`characters`]: character rows, tables, and inner products.
//! * [`verify`]: named check suites over all of the above.
//! * [`cli`]: rendering and the command implementations behind the binary.

pub mod characters;
pub mod cli;
pub mod oracle;
pub mod perm;
pub mod shapes;
pub mod specht;
pub mod tableaux;
pub mod verify;

pub use characters::{
    character, character_table, class_representative, inner_product, CharacterError, CharacterRow,
    CharacterTable,
};
pub use oracle::{
    act, express_in_standard_basis, oracle_matrix, polytabloid, OracleError, SpechtBasis,
    TabloidVector,
};
pub use perm::{
    class_size, conjugacy_classes, GeneratorWord, PermError, Permutation, ENUMERATION_LIMIT,
};
pub use shapes::{partitions_of, Cell, Partition, ShapeError};
pub use specht::{
    generator_matrix, rep_matrix, straighten, GarnirPair, GarnirStep, IntegerMatrix,
    NaturalRepresentation, PolytabloidExpansion, SpechtError, Straightener,
};
pub use tableaux::{standard_tableaux, BasisOrder, Tableau, TableauError, Tabloid};
