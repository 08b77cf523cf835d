//! Exhaustive generation and classification of pure complexes.

mod canonical;
mod classify;

pub use canonical::{canonical_form, canonical_form_exact, CanonicalForm, EXACT_CANON_LIMIT};
pub use classify::{
    classify, evaluate, ClassifyOptions, ClassifyReport, IsoClass, Predicates, Verdicts,
};

use crate::complex::{binomial, k_subsets, Complex, Mask};
use crate::error::{Error, Result};

/// Largest pool `[n]_d` the enumerator will index.
const MAX_POOL: usize = 1 << 20;

/// Every `m`-subset of `[n]_d` as a pure complex, in lexicographic order of
/// facet lists. Ranks index that order.
#[derive(Clone, Debug)]
pub struct PureComplexes {
    n: u32,
    pool: Vec<Mask>,
    indices: Vec<usize>,
    remaining: u128,
}

/// Validates `(n, d, m)` and returns the number of complexes.
pub fn pool_size(n: u32, d: u32, m: u32) -> Result<u128> {
    if n == 0 || n > 64 {
        return Err(Error::VertexCount(n));
    }
    if d == 0 || d > n {
        return Err(Error::Parameters(format!("need 1 <= d <= n, got d = {d}, n = {n}")));
    }
    let pool = binomial(n as u64, d as u64);
    if pool > MAX_POOL as u128 {
        return Err(Error::Parameters(format!("[{n}]_{d} has {pool} members, too many to enumerate")));
    }
    if m == 0 || m as u128 > pool {
        return Err(Error::Parameters(format!("need 1 <= m <= C({n},{d}) = {pool}, got m = {m}")));
    }
    let total = binomial(pool as u64, m as u64);
    if total == u128::MAX {
        return Err(Error::Parameters("the number of complexes overflows u128".into()));
    }
    Ok(total)
}

/// The `rank`-th `m`-combination of `0..len` in lexicographic order.
pub fn unrank_combination(len: usize, m: usize, rank: u128) -> Vec<usize> {
    let mut out = Vec::with_capacity(m);
    let mut rest = rank;
    let mut start = 0;
    for i in 0..m {
        for c in start..len {
            let count = binomial((len - c - 1) as u64, (m - i - 1) as u64);
            if rest < count {
                out.push(c);
                start = c + 1;
                break;
            }
            rest -= count;
        }
    }
    out
}

pub fn rank_combination(len: usize, indices: &[usize]) -> u128 {
    let m = indices.len();
    let mut rank = 0;
    let mut start = 0;
    for (i, &idx) in indices.iter().enumerate() {
        for c in start..idx {
            rank += binomial((len - c - 1) as u64, (m - i - 1) as u64);
        }
        start = idx + 1;
    }
    rank
}

pub fn enumerate_pure(n: u32, d: u32, m: u32) -> Result<PureComplexes> {
    let total = pool_size(n, d, m)?;
    enumerate_pure_range(n, d, m, 0, total)
}

/// The complexes with ranks in `start..end`; used for sharding.
pub fn enumerate_pure_range(n: u32, d: u32, m: u32, start: u128, end: u128) -> Result<PureComplexes> {
    let total = pool_size(n, d, m)?;
    if start > end || end > total {
        return Err(Error::Parameters(format!(
            "rank range {start}..{end} is outside 0..{total}"
        )));
    }
    let pool: Vec<Mask> = k_subsets(n, d).collect();
    let indices = unrank_combination(pool.len(), m as usize, start.min(total.saturating_sub(1)));
    Ok(PureComplexes {
        n,
        pool,
        indices,
        remaining: end - start,
    })
}

/// The complex of a given rank.
pub fn complex_at(n: u32, d: u32, m: u32, rank: u128) -> Result<Complex> {
    enumerate_pure_range(n, d, m, rank, rank + 1)?
        .next()
        .ok_or_else(|| Error::Parameters(format!("rank {rank} is out of range")))
}

impl Iterator for PureComplexes {
    type Item = Complex;

    fn next(&mut self) -> Option<Complex> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let facets: Vec<Mask> = self.indices.iter().map(|&i| self.pool[i]).collect();
        let complex = Complex::from_masks_unchecked(self.n, &facets);
        if self.remaining > 0 {
            let m = self.indices.len();
            let len = self.pool.len();
            if let Some(i) = (0..m).rev().find(|&i| self.indices[i] < len - m + i) {
                self.indices[i] += 1;
                for j in i + 1..m {
                    self.indices[j] = self.indices[j - 1] + 1;
                }
            }
        }
        Some(complex)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = usize::try_from(self.remaining).unwrap_or(usize::MAX);
        (r, usize::try_from(self.remaining).ok())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(enumerate_pure(4, 2, 3).unwrap().count(), 20);
        let single: Vec<Complex> = enumerate_pure(3, 3, 1).unwrap().collect();
        assert_eq!(single.len(), 1);
        assert!(single[0].is_simplex());
        assert_eq!(pool_size(6, 3, 10).unwrap(), 184_756);
    }

    #[test]
    fn lexicographic_and_distinct() {
        let all: Vec<Complex> = enumerate_pure(5, 2, 4).unwrap().collect();
        assert_eq!(all.len() as u128, binomial(10, 4));
        assert!(all.windows(2).all(|w| w[0].facets() < w[1].facets()));
    }

    #[test]
    fn ranges_tile_the_stream() {
        let all: Vec<Complex> = enumerate_pure(5, 2, 3).unwrap().collect();
        let total = all.len() as u128;
        let mut pieces = Vec::new();
        for (a, b) in [(0, 17), (17, 18), (18, 64), (64, total)] {
            pieces.extend(enumerate_pure_range(5, 2, 3, a, b).unwrap());
        }
        assert_eq!(pieces, all);
        assert_eq!(complex_at(5, 2, 3, 42).unwrap(), all[42]);
        assert_eq!(enumerate_pure_range(5, 2, 3, 5, 5).unwrap().count(), 0);
    }

    #[test]
    fn rank_unrank_inverse() {
        for r in 0..binomial(7, 3) {
            let combo = unrank_combination(7, 3, r);
            assert_eq!(rank_combination(7, &combo), r);
        }
    }

    #[test]
    fn parameter_errors() {
        assert!(pool_size(4, 0, 1).is_err());
        assert!(pool_size(4, 5, 1).is_err());
        assert!(pool_size(4, 2, 0).is_err());
        assert!(pool_size(4, 2, 7).is_err());
        assert!(enumerate_pure_range(4, 2, 3, 3, 21).is_err());
    }
}
