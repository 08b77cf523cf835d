//! The three duals: Newton complement, Alexander, and homogeneous complement.

use crate::complex::{full_mask, k_subsets, Complex, Mask};
use crate::error::{Error, Result};

/// `Δ^c = ⟨[n] - F : F ∈ F(Δ)⟩`. Defined for nonpure complexes too; the
/// complements are re-maximalized.
pub fn newton_dual(c: &Complex) -> Result<Complex> {
    if c.is_void() {
        return Err(Error::VoidComplex);
    }
    let full = full_mask(c.n());
    if c.generators().contains(&full) {
        return Err(Error::FacetIsVertexSet(c.n()));
    }
    let complements: Vec<Mask> = c.generators().iter().map(|&f| full & !f).collect();
    Ok(Complex::from_masks_unchecked(c.n(), &complements))
}

/// `Δ^∨`, whose facets are the complements of the minimal nonfaces of `Δ`.
pub fn alexander_dual(c: &Complex) -> Result<Complex> {
    let nonfaces = c.minimal_nonfaces()?;
    if nonfaces.is_empty() {
        return Err(Error::FullSimplex(c.n()));
    }
    let full = full_mask(c.n());
    let facets: Vec<Mask> = nonfaces.iter().map(|m| full & !m).collect();
    Ok(Complex::from_masks_unchecked(c.n(), &facets))
}

/// `Δ' = ⟨[n]_d \ F(Δ)⟩` for a pure complex with facets of size `d`.
pub fn homogeneous_complement(c: &Complex) -> Result<Complex> {
    if c.is_void() {
        return Err(Error::VoidComplex);
    }
    if !c.is_pure() {
        return Err(Error::NotPure);
    }
    let d = c.generators()[0].count_ones();
    let family = c.facet_family();
    let rest: Vec<Mask> = k_subsets(c.n(), d).filter(|&s| !family.contains(s)).collect();
    if rest.is_empty() {
        return Err(Error::EmptyHomogeneousComplement(d));
    }
    Ok(Complex::from_masks_unchecked(c.n(), &rest))
}
