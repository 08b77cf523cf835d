//! Backtracking search for shellings of pure complexes.

use std::collections::HashSet;

use crate::complex::{Complex, Mask};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Shelling {
    /// A shelling order of the facets.
    Shellable(Vec<Mask>),
    /// Every facet ordering was ruled out.
    NotShellable,
    /// The step budget ran out before a verdict.
    BudgetExhausted,
}

pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Whether `next` may follow the facets in `prefix`: every `F_j ∩ next` lies
/// in some `F_i ∩ next` of size `|next| - 1`, and at least one such exists.
pub fn attaches(prefix: &[Mask], next: Mask) -> bool {
    if prefix.is_empty() {
        return true;
    }
    let ridge = next.count_ones() - 1;
    let ridges: Vec<Mask> = prefix
        .iter()
        .map(|&f| f & next)
        .filter(|m| m.count_ones() == ridge)
        .collect();
    !ridges.is_empty()
        && prefix
            .iter()
            .all(|&f| ridges.iter().any(|&r| (f & next) & !r == 0))
}

/// Checks the shelling condition for a full ordering.
pub fn is_shelling_order(order: &[Mask]) -> bool {
    (1..order.len()).all(|k| attaches(&order[..k], order[k]))
}

struct Search<'a> {
    facets: &'a [Mask],
    failed: HashSet<Vec<u64>>,
    steps: u64,
    budget: u64,
}

impl Search<'_> {
    /// `None` when the budget is exhausted.
    fn extend(&mut self, order: &mut Vec<usize>, used: &mut Vec<u64>) -> Option<bool> {
        if order.len() == self.facets.len() {
            return Some(true);
        }
        if self.failed.contains(used) {
            return Some(false);
        }
        self.steps += 1;
        if self.steps > self.budget {
            return None;
        }
        let prefix: Vec<Mask> = order.iter().map(|&i| self.facets[i]).collect();
        let mut candidates: Vec<(usize, usize)> = (0..self.facets.len())
            .filter(|&j| used[j / 64] & (1 << (j % 64)) == 0)
            .filter(|&j| attaches(&prefix, self.facets[j]))
            .map(|j| {
                let f = self.facets[j];
                let ridge = f.count_ones() - 1;
                let degree = prefix
                    .iter()
                    .filter(|&&g| (g & f).count_ones() == ridge)
                    .count();
                (j, degree)
            })
            .collect();
        candidates.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        for (j, _) in candidates {
            order.push(j);
            used[j / 64] |= 1 << (j % 64);
            let found = self.extend(order, used);
            used[j / 64] &= !(1 << (j % 64));
            match found {
                Some(true) => return Some(true),
                None => {
                    order.pop();
                    return None;
                }
                Some(false) => {
                    order.pop();
                }
            }
        }
        self.failed.insert(used.clone());
        Some(false)
    }
}

/// Searches for a shelling of a pure complex. Failed prefixes are memoized as
/// sets, since whether a prefix extends depends only on its facet set.
pub fn is_shellable(c: &Complex, budget: u64) -> Result<Shelling> {
    if c.is_void() {
        return Err(Error::VoidComplex);
    }
    if !c.is_pure() {
        return Err(Error::NotPure);
    }
    let facets = c.generators();
    let mut search = Search {
        facets,
        failed: HashSet::new(),
        steps: 0,
        budget,
    };
    let mut order = Vec::with_capacity(facets.len());
    let mut used = vec![0u64; facets.len().div_ceil(64)];
    Ok(match search.extend(&mut order, &mut used) {
        Some(true) => Shelling::Shellable(order.into_iter().map(|i| facets[i]).collect()),
        Some(false) => Shelling::NotShellable,
        None => Shelling::BudgetExhausted,
    })
}
