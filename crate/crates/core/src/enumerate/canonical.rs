//! Canonical relabeling of complexes on `[n]`.
//!
//! The canonical form is the relabeling whose facet list, compared as a
//! sequence of `(cardinality, mask)` pairs, is lexicographically least. New
//! labels are handed out from the bottom. Once labels `0..k` are assigned,
//! the facets inside the assigned set form a prefix of their cardinality
//! class in the final sorted list, and every other facet of that class will
//! be numerically larger, so partial keys already order the completions.
//! Partial labelings with a worse key are dropped, and partial labelings that
//! leave the same labeled trace on every facet are merged.

use std::collections::HashSet;

use crate::complex::{full_mask, vertices, Complex, Mask};

/// Largest `n` for which the exact search is used.
pub const EXACT_CANON_LIMIT: u32 = 10;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    pub complex: Complex,
    /// `false` when the invariant-ordering fallback was used: equal forms
    /// still imply isomorphism, but isomorphic complexes may differ.
    pub exact: bool,
}

/// Exact for `n <= EXACT_CANON_LIMIT`, heuristic above.
pub fn canonical_form(c: &Complex) -> CanonicalForm {
    if c.n() <= EXACT_CANON_LIMIT {
        CanonicalForm {
            complex: canonical_form_exact(c),
            exact: true,
        }
    } else {
        CanonicalForm {
            complex: invariant_ordering(c),
            exact: false,
        }
    }
}

const SENTINEL: (u32, Mask) = (u32::MAX, Mask::MAX);

#[derive(Clone)]
struct Partial {
    /// `label[v]` for assigned original vertices `v`.
    label: Vec<u32>,
    assigned: Mask,
    next_label: u32,
}

impl Partial {
    fn relabel_inside(&self, facet: Mask) -> Mask {
        vertices(facet & self.assigned).fold(0, |acc, v| acc | 1 << self.label[v as usize - 1])
    }

    /// Known facets class by class, cut at the first incomplete class.
    fn key(&self, classes: &[(u32, Vec<Mask>)]) -> Vec<(u32, Mask)> {
        let mut key = Vec::new();
        for (size, facets) in classes {
            let mut known: Vec<Mask> = facets
                .iter()
                .filter(|&&f| f & !self.assigned == 0)
                .map(|&f| self.relabel_inside(f))
                .collect();
            known.sort_unstable();
            let complete = known.len() == facets.len();
            key.extend(known.into_iter().map(|m| (*size, m)));
            if !complete {
                key.push(SENTINEL);
                break;
            }
        }
        key
    }

    fn trace(&self, facets: &[Mask]) -> Vec<(Mask, Mask)> {
        let mut t: Vec<(Mask, Mask)> = facets
            .iter()
            .map(|&f| (self.relabel_inside(f), f & !self.assigned))
            .collect();
        t.sort_unstable();
        t
    }
}

/// Lexicographically least relabeling over all permutations of `[n]`.
pub fn canonical_form_exact(c: &Complex) -> Complex {
    let n = c.n();
    let facets = c.facets();
    if facets.is_empty() {
        return c.clone();
    }
    let mut classes: Vec<(u32, Vec<Mask>)> = Vec::new();
    for &f in facets {
        let size = f.count_ones();
        match classes.last_mut() {
            Some((s, list)) if *s == size => list.push(f),
            _ => classes.push((size, vec![f])),
        }
    }

    let mut level = vec![Partial {
        label: vec![0; n as usize],
        assigned: 0,
        next_label: 0,
    }];
    for _ in 0..n {
        let mut best: Option<Vec<(u32, Mask)>> = None;
        let mut next: Vec<Partial> = Vec::new();
        let mut seen: HashSet<Vec<(Mask, Mask)>> = HashSet::new();
        for state in &level {
            for v in vertices(full_mask(n) & !state.assigned) {
                let mut child = state.clone();
                child.label[v as usize - 1] = child.next_label;
                child.next_label += 1;
                child.assigned |= 1 << (v - 1);
                let key = child.key(&classes);
                match best.as_ref().map(|b| key.cmp(b)) {
                    Some(std::cmp::Ordering::Greater) => continue,
                    Some(std::cmp::Ordering::Less) | None => {
                        best = Some(key);
                        next.clear();
                        seen.clear();
                    }
                    Some(std::cmp::Ordering::Equal) => {}
                }
                if seen.insert(child.trace(facets)) {
                    next.push(child);
                }
            }
        }
        level = next;
    }
    c.relabel(&level[0].label)
}

/// Orders vertices by a relabeling-invariant profile (facet counts per
/// cardinality), ties broken by the original label.
fn invariant_ordering(c: &Complex) -> Complex {
    let n = c.n();
    let top = c.facets().last().map_or(0, |f| f.count_ones()) as usize;
    let mut profiles: Vec<(Vec<u32>, u32)> = (0..n)
        .map(|v| {
            let mut profile = vec![0u32; top + 1];
            for &f in c.facets() {
                if f & (1 << v) != 0 {
                    profile[f.count_ones() as usize] += 1;
                }
            }
            // more incidences first so busy vertices take low labels
            profile.iter_mut().for_each(|x| *x = u32::MAX - *x);
            (profile, v)
        })
        .collect();
    profiles.sort();
    let mut perm = vec![0u32; n as usize];
    for (new, (_, old)) in profiles.into_iter().enumerate() {
        perm[old as usize] = new as u32;
    }
    c.relabel(&perm)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(n: u32, text: &str) -> Complex {
        Complex::from_shorthand(n, text).unwrap()
    }

    /// Minimum over all `n!` relabelings, by Heap's algorithm.
    fn brute_force(c: &Complex) -> Complex {
        let n = c.n() as usize;
        let mut perm: Vec<u32> = (0..n as u32).collect();
        let mut best = c.relabel(&perm);
        let mut counters = vec![0usize; n];
        let mut i = 0;
        while i < n {
            if counters[i] < i {
                if i % 2 == 0 {
                    perm.swap(0, i);
                } else {
                    perm.swap(counters[i], i);
                }
                let image = c.relabel(&perm);
                if key_of(&image) < key_of(&best) {
                    best = image;
                }
                counters[i] += 1;
                i = 0;
            } else {
                counters[i] = 0;
                i += 1;
            }
        }
        best
    }

    fn key_of(c: &Complex) -> Vec<(u32, Mask)> {
        c.facets().iter().map(|&f| (f.count_ones(), f)).collect()
    }

    #[test]
    fn examples() {
        let a = canonical_form(&cx(4, "13 24 34"));
        let b = canonical_form(&cx(4, "12 13 24"));
        assert!(a.exact);
        assert_eq!(a, b);
        assert_ne!(
            canonical_form(&cx(4, "12 13 23")),
            canonical_form(&cx(4, "12 13 14"))
        );
        assert_eq!(canonical_form(&cx(4, "34")).complex, cx(4, "12"));
    }

    #[test]
    fn matches_brute_force_on_small_complexes() {
        let samples = [
            (4, "12 13 24"),
            (4, "12 13 23"),
            (4, "12 13 14"),
            (5, "123 345 15"),
            (5, "12 34 5"),
            (6, "123 125 136 145 146 234 246 256 345 356"),
            (6, "123 124 125 126 345 346 456 356 134 256"),
            (6, "12 234 3456 1"),
            (6, "135 246"),
        ];
        for (n, text) in samples {
            let c = cx(n, text);
            assert_eq!(canonical_form_exact(&c), brute_force(&c), "{text}");
        }
    }

    #[test]
    fn degenerate_complexes() {
        let empty = Complex::empty(3).unwrap();
        assert_eq!(canonical_form(&empty).complex, empty);
        let void = Complex::void(3).unwrap();
        assert_eq!(canonical_form(&void).complex, void);
    }

    #[test]
    fn heuristic_mode_is_flagged_and_sound() {
        let c = Complex::from_masks(12, [0b11, 0b110, 1 << 11 | 1 << 10]).unwrap();
        let form = canonical_form(&c);
        assert!(!form.exact);
        assert_eq!(form.complex.facets().len(), 3);
        assert_eq!(form.complex.f_vector(), c.f_vector());
    }
}
