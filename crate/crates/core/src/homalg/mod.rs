//! Exact homological computations over a chosen field.

mod betti;
mod field;
mod homology;
mod primes;
mod rank;
mod shelling;

pub use betti::{
    betti_table, has_linear_resolution, k_polynomial, linear_verdict, BettiTable, LinearVerdict,
    Subject, MAX_BETTI_VERTICES,
};
pub use field::FieldSpec;
pub use homology::{homology_of_layers, is_cohen_macaulay, reduced_homology, ReducedHomology};
pub use primes::{is_unmixed, minimal_primes, minimal_transversals, PrimeList};
pub use rank::rank;
pub use shelling::{attaches, is_shellable, is_shelling_order, Shelling, DEFAULT_BUDGET};
