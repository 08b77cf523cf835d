//! Minimal primes of squarefree monomial ideals, i.e. minimal vertex covers
//! of the generator clutter.

use crate::complex::{
    format_set, full_mask, minimal_masks, sort_canonical, stanley_reisner_complex, vertices, Mask,
    SubsetFamily,
};
use crate::error::{Error, Result};

/// Supports of the minimal primes `⟨x_i : i ∈ C⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeList {
    pub n: u32,
    pub components: Vec<Mask>,
}

impl PrimeList {
    pub fn heights(&self) -> Vec<u32> {
        self.components.iter().map(|c| c.count_ones()).collect()
    }

    /// `⟨x3,x5,x6⟩ ∩ ...` in the order stored.
    pub fn decomposition(&self) -> String {
        self.components
            .iter()
            .map(|&c| {
                let vars: Vec<String> = vertices(c).map(|v| format!("x{v}")).collect();
                format!("⟨{}⟩", vars.join(","))
            })
            .collect::<Vec<_>>()
            .join(" ∩ ")
    }
}

/// Minimal transversals by Berge's incremental construction.
pub fn minimal_transversals(edges: &[Mask]) -> Vec<Mask> {
    let mut transversals: Vec<Mask> = vec![0];
    for &edge in edges {
        let mut next = Vec::with_capacity(transversals.len());
        for &t in &transversals {
            if t & edge != 0 {
                next.push(t);
            } else {
                let mut rest = edge;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    rest &= rest - 1;
                    next.push(t | bit);
                }
            }
        }
        transversals = minimal_masks(&next);
    }
    transversals
}

/// Minimal primes, computed as minimal transversals and again as complements
/// of the Stanley–Reisner facets; the two must agree.
pub fn minimal_primes(gens: &SubsetFamily) -> Result<PrimeList> {
    if gens.is_empty() {
        return Err(Error::EmptyFamily);
    }
    if gens.contains(0) {
        return Err(Error::UnitIdeal);
    }
    let gens = gens.minimal_members();
    let mut by_transversal = minimal_transversals(gens.members());
    sort_canonical(&mut by_transversal);

    let full = full_mask(gens.n());
    let mut by_complement: Vec<Mask> = stanley_reisner_complex(&gens)?
        .generators()
        .iter()
        .map(|&f| full & !f)
        .collect();
    sort_canonical(&mut by_complement);

    if by_transversal != by_complement {
        let show = |v: &[Mask]| {
            v.iter()
                .map(|&m| format_set(m, gens.n()))
                .collect::<Vec<_>>()
                .join(" ")
        };
        return Err(Error::RouteDisagreement(format!(
            "transversals [{}] vs facet complements [{}]",
            show(&by_transversal),
            show(&by_complement)
        )));
    }
    Ok(PrimeList {
        n: gens.n(),
        components: by_transversal,
    })
}

/// All minimal primes have the same height.
pub fn is_unmixed(gens: &SubsetFamily) -> Result<bool> {
    let primes = minimal_primes(gens)?;
    let heights = primes.heights();
    Ok(heights.windows(2).all(|w| w[0] == w[1]))
}
