//! Graded Betti numbers via Hochster's formula.
//!
//! For `I = I_Γ`, `β_{i,σ}(I) = dim H̃_{|σ|-i-2}(Γ|_σ)`. Restrictions of a
//! nonvoid `Γ` are never void; `Γ|_σ = {∅}` contributes through `H̃_{-1}`.

use std::collections::BTreeMap;
use std::fmt;

use super::homology::homology_of_layers;
use super::FieldSpec;
use crate::complex::{binomial, full_mask, stanley_reisner_complex, Complex, Mask, SubsetFamily};
use crate::error::{Error, Result};

/// Largest vertex count for which Betti tables are computed.
pub const MAX_BETTI_VERTICES: u32 = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Subject {
    /// The ideal `I`.
    Ideal,
    /// The quotient `S/I`.
    Quotient,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub subject: Subject,
    /// `(i, j) -> β_{i,j}`, zero entries omitted.
    pub entries: BTreeMap<(u32, u32), u64>,
}

impl BettiTable {
    pub fn get(&self, i: u32, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Coefficients of `Σ_j (Σ_i (-1)^i β_{i,j}) t^j`, trailing zeros trimmed.
    pub fn alternating_sums(&self) -> Vec<i128> {
        let mut out: Vec<i128> = Vec::new();
        for (&(i, j), &b) in &self.entries {
            let j = j as usize;
            if out.len() <= j {
                out.resize(j + 1, 0);
            }
            out[j] += if i % 2 == 0 { b as i128 } else { -(b as i128) };
        }
        trim(&mut out);
        out
    }

    fn into_quotient(self) -> BettiTable {
        let mut entries: BTreeMap<(u32, u32), u64> =
            self.entries.into_iter().map(|((i, j), b)| ((i + 1, j), b)).collect();
        entries.insert((0, 0), 1);
        BettiTable {
            subject: Subject::Quotient,
            entries,
        }
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|((i, j), b)| format!("({i},{j}):{b}"))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

fn trim(v: &mut Vec<i128>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn check_generators(gens: &SubsetFamily) -> Result<()> {
    if gens.is_empty() {
        return Err(Error::EmptyFamily);
    }
    if gens.contains(0) {
        return Err(Error::UnitIdeal);
    }
    if gens.n() > MAX_BETTI_VERTICES {
        return Err(Error::Parameters(format!(
            "Betti tables are limited to n <= {MAX_BETTI_VERTICES}, got {}",
            gens.n()
        )));
    }
    Ok(())
}

/// The Betti table of the ideal generated by `gens` (or of its quotient).
pub fn betti_table(gens: &SubsetFamily, field: FieldSpec, subject: Subject) -> Result<BettiTable> {
    check_generators(gens)?;
    let gens = gens.minimal_members();
    let gamma = stanley_reisner_complex(&gens)?;
    let layers = gamma.faces_by_cardinality();
    let mut entries: BTreeMap<(u32, u32), u64> = BTreeMap::new();
    for sigma in 0..=full_mask(gens.n()) {
        // A vertex of σ outside every generator inside σ is a cone point of
        // Γ|_σ, which is then acyclic.
        let covered = gens
            .iter()
            .filter(|&g| g & !sigma == 0)
            .fold(0, |acc, g| acc | g);
        if covered != sigma {
            continue;
        }
        let restricted: Vec<Vec<Mask>> = layers
            .iter()
            .map(|layer| layer.iter().copied().filter(|f| f & !sigma == 0).collect())
            .collect();
        let h = homology_of_layers(&restricted, field);
        let size = sigma.count_ones() as i32;
        for (k, &dim) in h.dims.iter().enumerate() {
            let i = size - (k as i32 - 1) - 2;
            if dim > 0 && i >= 0 {
                *entries.entry((i as u32, size as u32)).or_insert(0) += dim as u64;
            }
        }
    }
    let table = BettiTable {
        subject: Subject::Ideal,
        entries,
    };
    Ok(match subject {
        Subject::Ideal => table,
        Subject::Quotient => table.into_quotient(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearVerdict {
    /// Every `β_{i,j}` sits on `j = i + d`.
    Linear { degree: u32 },
    /// Generators of several degrees cannot have a linear resolution.
    NotUniform,
    /// First off-diagonal entry `(i, j)` with `j != i + d`.
    OffDiagonal { i: u32, j: u32, value: u64 },
}

impl LinearVerdict {
    pub fn is_linear(&self) -> bool {
        matches!(self, LinearVerdict::Linear { .. })
    }
}

pub fn linear_verdict(gens: &SubsetFamily, field: FieldSpec) -> Result<LinearVerdict> {
    check_generators(gens)?;
    let gens = gens.minimal_members();
    let Some(d) = gens.uniform_degree() else {
        return Ok(LinearVerdict::NotUniform);
    };
    let table = betti_table(&gens, field, Subject::Ideal)?;
    Ok(table
        .entries
        .iter()
        .find(|(&(i, j), _)| j != i + d)
        .map_or(LinearVerdict::Linear { degree: d }, |(&(i, j), &value)| {
            LinearVerdict::OffDiagonal { i, j, value }
        }))
}

pub fn has_linear_resolution(gens: &SubsetFamily, field: FieldSpec) -> Result<bool> {
    Ok(linear_verdict(gens, field)?.is_linear())
}

/// `K(t) = Σ_{F ∈ Δ} t^{|F|} (1-t)^{n-|F|}`, the numerator of the Hilbert
/// series of `S/I_Δ`; trailing zeros trimmed.
pub fn k_polynomial(c: &Complex) -> Result<Vec<i128>> {
    let f = c.f_vector()?;
    let n = c.n() as usize;
    let mut out = vec![0i128; n + 1];
    let counts = std::iter::once(1u64).chain(f.entries.iter().copied());
    for (k, count) in counts.enumerate() {
        let m = n - k;
        for l in 0..=m {
            let term = count as i128 * binomial(m as u64, l as u64) as i128;
            out[k + l] += if l % 2 == 0 { term } else { -term };
        }
    }
    trim(&mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(n: u32, text: &str) -> SubsetFamily {
        SubsetFamily::from_shorthand(n, text).unwrap()
    }

    const SEC2: &str = "123 125 136 145 146 234 246 256 345 356";
    const Q: FieldSpec = FieldSpec::Rationals;

    fn table(pairs: &[((u32, u32), u64)]) -> BTreeMap<(u32, u32), u64> {
        pairs.iter().copied().collect()
    }

    #[test]
    fn sec2_linear_resolution() {
        let expected = table(&[((0, 3), 10), ((1, 4), 15), ((2, 5), 6)]);
        let gens = fam(6, SEC2);
        assert_eq!(betti_table(&gens, Q, Subject::Ideal).unwrap().entries, expected);
        assert_eq!(
            betti_table(&gens.complements(), Q, Subject::Ideal).unwrap().entries,
            expected
        );
        assert!(has_linear_resolution(&gens, Q).unwrap());
        assert!(has_linear_resolution(&gens.complements(), Q).unwrap());
    }

    #[test]
    fn small_tables() {
        assert_eq!(
            betti_table(&fam(2, "12"), Q, Subject::Ideal).unwrap().entries,
            table(&[((0, 2), 1)])
        );
        assert_eq!(
            betti_table(&fam(3, "12 13"), Q, Subject::Ideal).unwrap().entries,
            table(&[((0, 2), 2), ((1, 3), 1)])
        );
        // (x3) in three variables: σ = {3} restricts to {∅}
        assert_eq!(
            betti_table(&fam(3, "3"), Q, Subject::Ideal).unwrap().entries,
            table(&[((0, 1), 1)])
        );
        let quotient = betti_table(&fam(3, "12 13"), Q, Subject::Quotient).unwrap();
        assert_eq!(
            quotient.entries,
            table(&[((0, 0), 1), ((1, 2), 2), ((2, 3), 1)])
        );
        assert_eq!(quotient.alternating_sums(), vec![1, 0, -2, 1]);
    }

    #[test]
    fn linearity() {
        assert_eq!(
            linear_verdict(&fam(4, "12 34"), Q).unwrap(),
            LinearVerdict::OffDiagonal {
                i: 1,
                j: 4,
                value: 1
            }
        );
        assert_eq!(
            linear_verdict(&fam(4, "12 3"), Q).unwrap(),
            LinearVerdict::NotUniform
        );
        assert_eq!(linear_verdict(&fam(4, ""), Q), Err(Error::EmptyFamily));
    }

    #[test]
    fn k_polynomials() {
        let edge = Complex::from_shorthand(2, "12").unwrap();
        assert_eq!(k_polynomial(&edge).unwrap(), vec![1]);
        assert_eq!(k_polynomial(&Complex::empty(1).unwrap()).unwrap(), vec![1, -1]);
        // S/(x1x2, x1x3): 1 - 2t^2 + t^3
        let gamma = stanley_reisner_complex(&fam(3, "12 13")).unwrap();
        assert_eq!(k_polynomial(&gamma).unwrap(), vec![1, 0, -2, 1]);
    }
}
