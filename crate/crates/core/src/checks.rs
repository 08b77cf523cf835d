//! Property checks over families of complexes: the duality identities, the
//! Cohen-Macaulay/linear-resolution equivalences, and cross-checks between
//! independent computations.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::complex::{binomial, full_mask, stanley_reisner_complex, Complex, SubsetFamily};
use crate::duality::{alexander_dual, homogeneous_complement, newton_dual};
use crate::enumerate::{complex_at, enumerate_pure, pool_size};
use crate::error::Result;
use crate::fideal::{is_f_complex, is_strong, is_well_distributed};
use crate::homalg::{
    betti_table, has_linear_resolution, is_cohen_macaulay, is_shellable, k_polynomial,
    minimal_primes, reduced_homology, FieldSpec, Shelling, Subject,
};

/// Outcome of one property over a family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyOutcome {
    pub name: String,
    /// Instances where the property applied.
    pub checked: usize,
    pub counterexamples: Vec<String>,
}

impl PropertyOutcome {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Runs `check` on each complex. `Ok(None)` means "not applicable",
/// `Ok(Some(false))` and errors are counterexamples.
pub fn check_all<'a, I, F>(name: &str, complexes: I, check: F) -> PropertyOutcome
where
    I: IntoIterator<Item = &'a Complex>,
    F: Fn(&Complex) -> Result<Option<bool>>,
{
    let mut outcome = PropertyOutcome {
        name: name.to_string(),
        checked: 0,
        counterexamples: Vec::new(),
    };
    for c in complexes {
        match check(c) {
            Ok(None) => {}
            Ok(Some(true)) => outcome.checked += 1,
            Ok(Some(false)) => {
                outcome.checked += 1;
                outcome.counterexamples.push(format!("{c} on [{}]", c.n()));
            }
            Err(e) => {
                outcome.checked += 1;
                outcome.counterexamples.push(format!("{c} on [{}]: {e}", c.n()));
            }
        }
    }
    outcome
}

/// Every pure complex on `[n]`: all facet sizes, all facet counts.
pub fn all_pure_complexes(n: u32) -> Vec<Complex> {
    let mut out = Vec::new();
    for d in 1..=n {
        let pool = binomial(n as u64, d as u64) as u32;
        for m in 1..=pool {
            out.extend(enumerate_pure(n, d, m).expect("valid parameters"));
        }
    }
    out
}

/// `count` uniform draws (with replacement) from the `(n, d, m)` pool.
pub fn sample_pool(n: u32, d: u32, m: u32, count: usize, seed: u64) -> Result<Vec<Complex>> {
    let total = pool_size(n, d, m)?;
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| complex_at(n, d, m, rng.gen_range(0..total)))
        .collect()
}

fn has_full_facet(c: &Complex) -> bool {
    c.generators().contains(&full_mask(c.n()))
}

fn is_f(c: &Complex) -> Result<bool> {
    Ok(is_f_complex(c)?.is_f)
}

fn is_strong_f(c: &Complex) -> Result<bool> {
    if !c.is_pure() || has_full_facet(c) || homogeneous_complement(c).is_err() {
        return Ok(false);
    }
    is_strong(c)
}

fn is_well_distributed_f(c: &Complex) -> Result<bool> {
    let n = c.n();
    if n % 2 == 1 || !c.is_pure() || c.generators()[0].count_ones() != n / 2 {
        return Ok(false);
    }
    Ok(is_well_distributed(c)? && is_f(c)?)
}

/// `Δ` is an f-complex iff `Δ^c` is.
pub fn newton_duality(complexes: &[Complex]) -> PropertyOutcome {
    check_all("newton duality of f-ideals", complexes, |c| {
        if has_full_facet(c) {
            return Ok(None);
        }
        Ok(Some(is_f(c)? == is_f(&newton_dual(c)?)?))
    })
}

/// `(Δ^c)' = (Δ')^c` for pure complexes.
pub fn complements_commute(complexes: &[Complex]) -> PropertyOutcome {
    check_all("(Δ^c)' = (Δ')^c", complexes, |c| {
        if !c.is_pure() || has_full_facet(c) || homogeneous_complement(c).is_err() {
            return Ok(None);
        }
        let a = homogeneous_complement(&newton_dual(c)?)?;
        let b = newton_dual(&homogeneous_complement(c)?)?;
        Ok(Some(a == b))
    })
}

/// Newton duality and the homogeneous complement are involutions on pure
/// complexes.
pub fn involutions(complexes: &[Complex]) -> PropertyOutcome {
    check_all("involutions", complexes, |c| {
        if !c.is_pure() || has_full_facet(c) || homogeneous_complement(c).is_err() {
            return Ok(None);
        }
        let twice_dual = newton_dual(&newton_dual(c)?)?;
        let twice_comp = homogeneous_complement(&homogeneous_complement(c)?)?;
        Ok(Some(twice_dual == *c && twice_comp == *c))
    })
}

/// For strong complexes: `N(Δ) = F(Δ')`, `Δ^∨ = (Δ^c)'`, and `Δ^c` is
/// strong too.
pub fn strong_identities(complexes: &[Complex]) -> PropertyOutcome {
    check_all("strong: N(Δ) = F(Δ'), Δ^∨ = (Δ^c)'", complexes, |c| {
        if !is_strong_f(c)? {
            return Ok(None);
        }
        let complement = homogeneous_complement(c)?;
        let nonfaces_match = c.minimal_nonfaces()? == complement.facet_family();
        let dual = newton_dual(c)?;
        let alexander_match = alexander_dual(c)? == homogeneous_complement(&dual)?;
        Ok(Some(nonfaces_match && alexander_match && is_strong_f(&dual)?))
    })
}

/// `Δ` is strong iff `Δ^c` is.
pub fn strong_duality(complexes: &[Complex]) -> PropertyOutcome {
    check_all("strong iff dual strong", complexes, |c| {
        if !c.is_pure() || has_full_facet(c) || homogeneous_complement(c).is_err() {
            return Ok(None);
        }
        Ok(Some(is_strong_f(c)? == is_strong_f(&newton_dual(c)?)?))
    })
}

/// For well-distributed f-complexes: `N(Δ^c) = F(Δ)` and `Δ^∨ = Δ`.
pub fn well_distributed_identities(complexes: &[Complex]) -> PropertyOutcome {
    check_all("well-distributed: N(Δ^c) = F(Δ), Δ^∨ = Δ", complexes, |c| {
        if !is_well_distributed_f(c)? {
            return Ok(None);
        }
        let dual = newton_dual(c)?;
        Ok(Some(
            dual.minimal_nonfaces()? == c.facet_family() && alexander_dual(c)? == *c,
        ))
    })
}

/// Generators of `I_{Γ^∨}`, read off the Alexander dual.
fn alexander_dual_ideal(c: &Complex) -> Result<SubsetFamily> {
    alexander_dual(c)?.minimal_nonfaces()
}

/// Eagon–Reiner: `Γ` is Cohen-Macaulay iff `I_{Γ^∨}` has a linear
/// resolution. Also checks that `I_{Γ^∨}` is generated by the facet
/// complements.
pub fn eagon_reiner(complexes: &[Complex], field: FieldSpec) -> PropertyOutcome {
    check_all("Eagon-Reiner: CM(Γ) iff I_{Γ^∨} linear", complexes, |c| {
        if c.is_simplex() {
            return Ok(None);
        }
        let gens = alexander_dual_ideal(c)?;
        if gens != c.facet_family().complements() {
            return Ok(Some(false));
        }
        Ok(Some(
            is_cohen_macaulay(c, field) == has_linear_resolution(&gens, field)?,
        ))
    })
}

/// The ideal `I(Δ)`, read as a Stanley–Reisner ideal, is Cohen-Macaulay.
fn facet_ideal_is_cm(c: &Complex, field: FieldSpec) -> Result<bool> {
    Ok(is_cohen_macaulay(
        &stanley_reisner_complex(&c.facet_family())?,
        field,
    ))
}

/// For well-distributed f-complexes `Δ` with `J = I(Δ)`: `J` Cohen-Macaulay
/// iff `J` linear, and `Δ^c` Cohen-Macaulay iff `J` linear.
pub fn well_distributed_cm_iff_linear(complexes: &[Complex], field: FieldSpec) -> PropertyOutcome {
    check_all("well-distributed: I(Δ) CM iff linear", complexes, |c| {
        if !is_well_distributed_f(c)? {
            return Ok(None);
        }
        let linear = has_linear_resolution(&c.facet_family(), field)?;
        let ideal_cm = facet_ideal_is_cm(c, field)?;
        let dual_cm = is_cohen_macaulay(&newton_dual(c)?, field);
        Ok(Some(linear == ideal_cm && linear == dual_cm))
    })
}

/// For strong f-complexes: `I(Δ')` CM iff `Δ` CM iff `I(Δ^c)` linear, and
/// `I(Δ^c)` CM iff `I(Δ')` linear.
pub fn strong_cm_equivalences(complexes: &[Complex], field: FieldSpec) -> PropertyOutcome {
    check_all("strong: I(Δ') CM iff Δ CM iff I(Δ^c) linear", complexes, |c| {
        if !is_strong_f(c)? {
            return Ok(None);
        }
        let complement = homogeneous_complement(c)?;
        let dual = newton_dual(c)?;
        let complement_ideal_cm = facet_ideal_is_cm(&complement, field)?;
        let complex_cm = is_cohen_macaulay(c, field);
        let dual_linear = has_linear_resolution(&dual.facet_family(), field)?;
        let theorem = complement_ideal_cm == complex_cm && complex_cm == dual_linear;
        let dual_ideal_cm = facet_ideal_is_cm(&dual, field)?;
        let complement_linear = has_linear_resolution(&complement.facet_family(), field)?;
        Ok(Some(theorem && dual_ideal_cm == complement_linear))
    })
}

/// `stanley_reisner_complex(N(Δ)) = Δ`, and the layered minimal-nonface
/// search agrees with the subset sweep.
pub fn stanley_reisner_round_trip(complexes: &[Complex]) -> PropertyOutcome {
    check_all("Stanley-Reisner round trip", complexes, |c| {
        let nonfaces = c.minimal_nonfaces()?;
        if nonfaces != c.minimal_nonfaces_sweep()? {
            return Ok(Some(false));
        }
        if nonfaces.is_empty() {
            return Ok(Some(c.is_simplex()));
        }
        Ok(Some(stanley_reisner_complex(&nonfaces)? == *c))
    })
}

/// `K(t)` equals the alternating Betti sum of `S/I_Γ`.
pub fn k_polynomial_identity(complexes: &[Complex], field: FieldSpec) -> PropertyOutcome {
    check_all("K-polynomial = alternating Betti sum", complexes, |c| {
        let k = k_polynomial(c)?;
        let nonfaces = c.minimal_nonfaces()?;
        let sums = if nonfaces.is_empty() {
            vec![1]
        } else {
            betti_table(&nonfaces, field, Subject::Quotient)?.alternating_sums()
        };
        Ok(Some(k == sums))
    })
}

/// Both minimal-prime routes agree on `I(Δ)` (disagreement is an error).
pub fn minimal_prime_routes(complexes: &[Complex]) -> PropertyOutcome {
    check_all("minimal primes: transversals = SR facet complements", complexes, |c| {
        minimal_primes(&c.facet_family())?;
        Ok(Some(true))
    })
}

/// Shellable complexes are Cohen-Macaulay.
pub fn shellable_implies_cm(complexes: &[Complex], fields: &[FieldSpec]) -> PropertyOutcome {
    check_all("shellable implies CM", complexes, |c| {
        match is_shellable(c, crate::homalg::DEFAULT_BUDGET)? {
            Shelling::Shellable(_) => Ok(Some(fields.iter().all(|&k| is_cohen_macaulay(c, k)))),
            _ => Ok(None),
        }
    })
}

/// Alternating sum of reduced Betti numbers equals the reduced Euler
/// characteristic from the f-vector.
pub fn euler_characteristic(complexes: &[Complex], field: FieldSpec) -> PropertyOutcome {
    check_all("reduced Euler characteristic", complexes, |c| {
        let f = c.f_vector()?;
        let from_f: i64 = -1 + f
            .entries
            .iter()
            .enumerate()
            .map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) })
            .sum::<i64>();
        Ok(Some(reduced_homology(c, field).euler_characteristic() == from_f))
    })
}

/// The f, well-distributed and strong verdicts survive a random relabeling.
pub fn relabeling_invariance(complexes: &[Complex], seed: u64) -> PropertyOutcome {
    let mut rng = StdRng::seed_from_u64(seed);
    let perms: Vec<Vec<u32>> = complexes
        .iter()
        .map(|c| {
            let mut perm: Vec<u32> = (0..c.n()).collect();
            for i in (1..perm.len()).rev() {
                perm.swap(i, rng.gen_range(0..=i));
            }
            perm
        })
        .collect();
    let pairs: Vec<(Complex, Complex)> = complexes
        .iter()
        .zip(&perms)
        .map(|(c, p)| (c.clone(), c.relabel(p)))
        .collect();
    let mut outcome = PropertyOutcome {
        name: "relabeling invariance".into(),
        checked: 0,
        counterexamples: Vec::new(),
    };
    for (c, image) in &pairs {
        let verdicts = |x: &Complex| -> Result<(bool, bool, bool)> {
            Ok((is_f(x)?, is_well_distributed_f(x)?, is_strong_f(x)?))
        };
        outcome.checked += 1;
        match (verdicts(c), verdicts(image)) {
            (Ok(a), Ok(b)) if a == b => {}
            _ => outcome
                .counterexamples
                .push(format!("{c} vs relabeled {image}")),
        }
    }
    outcome
}
