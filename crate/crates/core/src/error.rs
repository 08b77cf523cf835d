use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count {0} is outside 1..=64")]
    VertexCount(u32),
    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: u32, n: u32 },
    #[error("no generators given")]
    NoGenerators,
    #[error("operation is undefined on the void complex")]
    VoidComplex,
    #[error("{0} is not a face of the complex")]
    NotAFace(String),
    #[error("the family contains the empty set, so the ideal is the unit ideal")]
    UnitIdeal,
    #[error("the family is empty")]
    EmptyFamily,
    #[error("the family is not uniform")]
    NotUniform,
    #[error("the complex is not pure")]
    NotPure,
    #[error("a facet equals the whole vertex set [{0}]")]
    FacetIsVertexSet(u32),
    #[error("the complex is the full simplex on [{0}]; its Alexander dual is not defined here")]
    FullSimplex(u32),
    #[error("the facets exhaust all {0}-subsets, so the homogeneous complement is void")]
    EmptyHomogeneousComplement(u32),
    #[error("well-distributedness needs an even vertex count, got n = {0}")]
    OddVertexCount(u32),
    #[error("well-distributedness needs facet size n/2 = {expected}, got {found}")]
    WrongFacetSize { expected: u32, found: u32 },
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("invalid enumeration parameters: {0}")]
    Parameters(String),
    #[error("internal disagreement between independent routes: {0}")]
    RouteDisagreement(String),
}
