//! Exact combinatorics of squarefree monomial ideals and their simplicial
//! complexes: f-ideals, Newton complement and Alexander duals, homogeneous
//! complements, and combinatorial tests for Cohen-Macaulayness and linear
//! resolutions.

pub mod checks;
pub mod complex;
pub mod duality;
pub mod enumerate;
pub mod error;
pub mod fideal;
pub mod homalg;

pub use complex::{stanley_reisner_complex, Complex, FVector, Mask, SubsetFamily};
pub use error::{Error, Result};
pub use homalg::FieldSpec;
