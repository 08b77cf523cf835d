//! The f-ideal predicate and its relatives.
//!
//! A squarefree monomial ideal is an f-ideal when its facet complex and its
//! Stanley–Reisner (nonface) complex have the same f-vector. For generators
//! of a single degree `d` this is equivalent to the generators forming an
//! LU-set with exactly `C(n, d) / 2` members; both routes are computed and
//! must agree.

use std::fmt;

use crate::complex::{
    binomial, format_set, full_mask, k_subsets, sort_canonical, stanley_reisner_complex,
    vertices, Complex, FVector, Mask, SubsetFamily,
};
use crate::duality::{homogeneous_complement, newton_dual};
use crate::error::{Error, Result};

fn degree(fam: &SubsetFamily) -> Result<u32> {
    if fam.is_empty() {
        return Err(Error::EmptyFamily);
    }
    fam.uniform_degree().ok_or(Error::NotUniform)
}

/// All `(d-1)`-subsets of members of a `d`-uniform family.
pub fn lower_shadow(fam: &SubsetFamily) -> Result<SubsetFamily> {
    let d = degree(fam)?;
    if d == 0 {
        return Err(Error::Parameters("the lower shadow needs d >= 1".into()));
    }
    let mut out: Vec<Mask> = fam
        .iter()
        .flat_map(|m| vertices(m).map(move |v| m & !(1u64 << (v - 1))))
        .collect();
    sort_canonical(&mut out);
    Ok(SubsetFamily::from_sorted_unchecked(fam.n(), out))
}

/// All `(d+1)`-subsets of `[n]` containing a member of a `d`-uniform family.
pub fn upper_shadow(fam: &SubsetFamily) -> Result<SubsetFamily> {
    degree(fam)?;
    let full = full_mask(fam.n());
    let mut out: Vec<Mask> = fam
        .iter()
        .flat_map(|m| vertices(full & !m).map(move |v| m | (1u64 << (v - 1))))
        .collect();
    sort_canonical(&mut out);
    Ok(SubsetFamily::from_sorted_unchecked(fam.n(), out))
}

/// Outcome of the L- and U-checks, with the first uncovered set of each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LuVerdict {
    pub lower: bool,
    pub upper: bool,
    /// First `(d-1)`-subset (canonical order) not below any member.
    pub lower_witness: Option<Mask>,
    /// First `(d+1)`-subset (canonical order) above no member.
    pub upper_witness: Option<Mask>,
}

impl LuVerdict {
    pub fn is_lu(&self) -> bool {
        self.lower && self.upper
    }
}

pub fn is_lu_set(fam: &SubsetFamily) -> Result<LuVerdict> {
    let d = degree(fam)?;
    let n = fam.n();
    let lower = lower_shadow(fam)?;
    let upper = upper_shadow(fam)?;
    let lower_witness = if lower.len() as u128 == binomial(n as u64, d as u64 - 1) {
        None
    } else {
        k_subsets(n, d - 1).find(|&s| !lower.contains(s))
    };
    let upper_witness = if upper.len() as u128 == binomial(n as u64, d as u64 + 1) {
        None
    } else {
        k_subsets(n, d + 1).find(|&s| !upper.contains(s))
    };
    Ok(LuVerdict {
        lower: lower_witness.is_none(),
        upper: upper_witness.is_none(),
        lower_witness,
        upper_witness,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    PureLu,
    GeneralFVector,
    BothAgree,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::PureLu => "pure-LU",
            Route::GeneralFVector => "general-fvector",
            Route::BothAgree => "both-agree",
        })
    }
}

/// Why a family fails to generate an f-ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// A `(d-1)`-set covered by no generator.
    MissingLower(Mask),
    /// A `(d+1)`-set containing no generator.
    UncoveredUpper(Mask),
    /// The first index `k` with `f_k(δ_F) != f_k(δ_N)`.
    FVectorMismatch {
        index: usize,
        facet_complex: u64,
        nonface_complex: u64,
    },
}

impl Witness {
    pub fn describe(&self, n: u32) -> String {
        match self {
            Witness::MissingLower(m) => format!("L fails: {} is not covered", format_set(*m, n)),
            Witness::UncoveredUpper(m) => {
                format!("U fails: {} contains no generator", format_set(*m, n))
            }
            Witness::FVectorMismatch {
                index,
                facet_complex,
                nonface_complex,
            } => format!(
                "f_{index} differs: facet complex {facet_complex}, nonface complex {nonface_complex}"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FIdealVerdict {
    pub is_f: bool,
    pub route: Route,
    pub witness: Option<Witness>,
    /// Number of minimal generators.
    pub generators: usize,
    pub degree: Option<u32>,
    pub facet_f_vector: FVector,
    pub nonface_f_vector: FVector,
}

fn first_mismatch(a: &FVector, b: &FVector) -> Option<Witness> {
    let len = a.entries.len().max(b.entries.len());
    (0..len).find_map(|k| {
        let x = a.entries.get(k).copied().unwrap_or(0);
        let y = b.entries.get(k).copied().unwrap_or(0);
        (x != y).then_some(Witness::FVectorMismatch {
            index: k,
            facet_complex: x,
            nonface_complex: y,
        })
    })
}

/// Decides whether the ideal generated by `gens` is an f-ideal.
///
/// The f-vector comparison always runs. When the generators share a degree,
/// the LU-set criterion runs too and any disagreement is reported as
/// [`Error::RouteDisagreement`].
pub fn is_f_ideal(gens: &SubsetFamily) -> Result<FIdealVerdict> {
    if gens.is_empty() {
        return Err(Error::EmptyFamily);
    }
    if gens.contains(0) {
        return Err(Error::UnitIdeal);
    }
    let gens = gens.minimal_members();
    let facet_f_vector = Complex::new(&gens)?.f_vector()?;
    let nonface_f_vector = stanley_reisner_complex(&gens)?.f_vector()?;
    let mismatch = first_mismatch(&facet_f_vector, &nonface_f_vector);
    let general = mismatch.is_none();

    let degree = gens.uniform_degree();
    let (route, witness) = match degree {
        None => (Route::GeneralFVector, mismatch),
        Some(d) => {
            let lu = is_lu_set(&gens)?;
            let half = 2 * gens.len() as u128 == binomial(gens.n() as u64, d as u64);
            let pure = lu.is_lu() && half;
            if pure != general {
                return Err(Error::RouteDisagreement(format!(
                    "LU criterion says {pure}, f-vectors say {general} for {gens}"
                )));
            }
            let witness = lu
                .lower_witness
                .map(Witness::MissingLower)
                .or(lu.upper_witness.map(Witness::UncoveredUpper))
                .or(mismatch);
            (Route::BothAgree, witness)
        }
    };
    Ok(FIdealVerdict {
        is_f: general,
        route,
        witness,
        generators: gens.len(),
        degree,
        facet_f_vector,
        nonface_f_vector,
    })
}

/// Whether `Δ` is an f-complex, i.e. its facet ideal is an f-ideal.
pub fn is_f_complex(c: &Complex) -> Result<FIdealVerdict> {
    if c.is_void() {
        return Err(Error::VoidComplex);
    }
    is_f_ideal(&c.facet_family())
}

/// A facet whose complement is also a facet, if any. Requires `n = 2d` and a
/// pure complex with facets of size `d`.
pub fn well_distributed_collision(c: &Complex) -> Result<Option<Mask>> {
    let n = c.n();
    if n % 2 == 1 {
        return Err(Error::OddVertexCount(n));
    }
    if c.is_void() {
        return Err(Error::VoidComplex);
    }
    if !c.is_pure() {
        return Err(Error::NotPure);
    }
    let size = c.generators()[0].count_ones();
    if size != n / 2 {
        return Err(Error::WrongFacetSize {
            expected: n / 2,
            found: size,
        });
    }
    let family = c.facet_family();
    let full = full_mask(n);
    let collision = family.iter().find(|&f| family.contains(full & !f));
    Ok(collision)
}

/// `F(Δ) ∩ F(Δ^c) = ∅`.
pub fn is_well_distributed(c: &Complex) -> Result<bool> {
    Ok(well_distributed_collision(c)?.is_none())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongVerdict {
    pub complex: FIdealVerdict,
    pub complement: FIdealVerdict,
}

impl StrongVerdict {
    pub fn is_strong(&self) -> bool {
        self.complex.is_f && self.complement.is_f
    }
}

pub fn strong_verdict(c: &Complex) -> Result<StrongVerdict> {
    let complement = homogeneous_complement(c)?;
    Ok(StrongVerdict {
        complex: is_f_complex(c)?,
        complement: is_f_complex(&complement)?,
    })
}

/// Both `Δ` and its homogeneous complement are f-complexes.
pub fn is_strong(c: &Complex) -> Result<bool> {
    Ok(strong_verdict(c)?.is_strong())
}

/// Whether the Newton dual of `c` is an f-complex; convenience for checks.
pub fn newton_dual_is_f(c: &Complex) -> Result<bool> {
    Ok(is_f_complex(&newton_dual(c)?)?.is_f)
}
