//! Simplicial complexes and subset families on the vertex set `[n]`.
//!
//! Subsets are `u64` bitmasks: vertex `v` (1-based) is bit `v - 1`. Lists of
//! subsets are kept in canonical order, by cardinality and then numerically,
//! so two complexes are equal exactly when their facet lists are equal.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

/// A subset of `[n]` encoded as a bitmask.
pub type Mask = u64;

pub const MAX_VERTICES: u32 = 64;

const EMPTY_FACE: [Mask; 1] = [0];

pub fn full_mask(n: u32) -> Mask {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Order by cardinality, then numerically.
pub fn canonical_cmp(a: &Mask, b: &Mask) -> Ordering {
    (a.count_ones(), *a).cmp(&(b.count_ones(), *b))
}

pub fn sort_canonical(masks: &mut Vec<Mask>) {
    masks.sort_unstable_by(canonical_cmp);
    masks.dedup();
}

/// 1-based vertex labels of a mask, ascending.
pub fn vertices(mask: Mask) -> impl Iterator<Item = u32> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let bit = rest.trailing_zeros();
            rest &= rest - 1;
            Some(bit + 1)
        }
    })
}

pub fn mask_of(vertices: &[u32], n: u32) -> Result<Mask> {
    let mut mask = 0;
    for &v in vertices {
        if v == 0 || v > n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        mask |= 1u64 << (v - 1);
    }
    Ok(mask)
}

/// Paper-style shorthand (`123`) when every label is a single digit,
/// otherwise a braced list.
pub fn format_set(mask: Mask, n: u32) -> String {
    if mask == 0 {
        return "∅".to_string();
    }
    if n <= 9 {
        vertices(mask).map(|v| char::from(b'0' + v as u8)).collect()
    } else {
        let labels: Vec<String> = vertices(mask).map(|v| v.to_string()).collect();
        format!("{{{}}}", labels.join(","))
    }
}

/// Exact binomial coefficient; saturates at `u128::MAX`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// All `k`-subsets of `[n]` in increasing numeric order.
pub fn k_subsets(n: u32, k: u32) -> impl Iterator<Item = Mask> {
    let limit = full_mask(n);
    let mut next = if k > n {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some(full_mask(k))
    };
    std::iter::from_fn(move || {
        let current = next?;
        next = if current == 0 {
            None
        } else {
            // Gosper's hack
            let low = current & current.wrapping_neg();
            let ripple = current.wrapping_add(low);
            if ripple == 0 {
                None
            } else {
                let ones = ((current ^ ripple) >> 2) / low;
                let candidate = ripple | ones;
                (candidate & !limit == 0).then_some(candidate)
            }
        };
        Some(current)
    })
}

/// Every submask of `mask`, including `0` and `mask` itself.
pub fn submasks(mask: Mask) -> impl Iterator<Item = Mask> {
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let current = next?;
        next = if current == 0 {
            None
        } else {
            Some((current - 1) & mask)
        };
        Some(current)
    })
}

fn check_n(n: u32) -> Result<()> {
    if n == 0 || n > MAX_VERTICES {
        Err(Error::VertexCount(n))
    } else {
        Ok(())
    }
}

fn check_range(n: u32, mask: Mask) -> Result<()> {
    let stray = mask & !full_mask(n);
    if stray != 0 {
        Err(Error::VertexOutOfRange {
            vertex: stray.trailing_zeros() + 1,
            n,
        })
    } else {
        Ok(())
    }
}

/// Keep the members not strictly contained in another member.
pub(crate) fn maximal_masks(masks: &[Mask]) -> Vec<Mask> {
    let mut by_size = masks.to_vec();
    by_size.sort_unstable_by(|a, b| canonical_cmp(b, a));
    by_size.dedup();
    let mut kept: Vec<Mask> = Vec::with_capacity(by_size.len());
    for m in by_size {
        if !kept.iter().any(|&k| m & !k == 0) {
            kept.push(m);
        }
    }
    sort_canonical(&mut kept);
    kept
}

/// Keep the members containing no other member.
pub(crate) fn minimal_masks(masks: &[Mask]) -> Vec<Mask> {
    let mut by_size = masks.to_vec();
    sort_canonical(&mut by_size);
    let mut kept: Vec<Mask> = Vec::with_capacity(by_size.len());
    for m in by_size {
        if !kept.iter().any(|&k| k & !m == 0) {
            kept.push(m);
        }
    }
    kept
}

/// A finite family of distinct subsets of `[n]`, also read as a set of
/// squarefree monomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetFamily {
    n: u32,
    members: Vec<Mask>,
}

impl SubsetFamily {
    pub fn new(n: u32, masks: impl IntoIterator<Item = Mask>) -> Result<Self> {
        check_n(n)?;
        let mut members: Vec<Mask> = masks.into_iter().collect();
        for &m in &members {
            check_range(n, m)?;
        }
        sort_canonical(&mut members);
        Ok(Self { n, members })
    }

    pub fn from_vertex_sets<S: AsRef<[u32]>>(n: u32, sets: &[S]) -> Result<Self> {
        check_n(n)?;
        let masks = sets
            .iter()
            .map(|s| mask_of(s.as_ref(), n))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, masks)
    }

    /// Parses whitespace- or comma-separated digit words such as
    /// `"123 125 136"`. Only meaningful for `n <= 9`.
    pub fn from_shorthand(n: u32, text: &str) -> Result<Self> {
        check_n(n)?;
        let mut masks = Vec::new();
        for word in text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|w| !w.is_empty())
        {
            let mut mask = 0;
            for ch in word.chars() {
                let v = ch.to_digit(10).ok_or_else(|| {
                    Error::Parameters(format!("`{word}` is not a digit shorthand"))
                })?;
                mask |= mask_of(&[v], n)?;
            }
            masks.push(mask);
        }
        Self::new(n, masks)
    }

    pub(crate) fn from_sorted_unchecked(n: u32, members: Vec<Mask>) -> Self {
        Self { n, members }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn members(&self) -> &[Mask] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = Mask> + '_ {
        self.members.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, mask: Mask) -> bool {
        self.members
            .binary_search_by(|m| canonical_cmp(m, &mask))
            .is_ok()
    }

    /// The common cardinality of the members, if there is one.
    pub fn uniform_degree(&self) -> Option<u32> {
        let d = self.members.first()?.count_ones();
        self.members
            .iter()
            .all(|m| m.count_ones() == d)
            .then_some(d)
    }

    pub fn is_uniform(&self) -> bool {
        self.uniform_degree().is_some()
    }

    pub fn is_antichain(&self) -> bool {
        minimal_masks(&self.members).len() == self.members.len()
    }

    /// The minimal members; the minimal generators of the ideal they span.
    pub fn minimal_members(&self) -> SubsetFamily {
        Self::from_sorted_unchecked(self.n, minimal_masks(&self.members))
    }

    pub fn maximal_members(&self) -> SubsetFamily {
        Self::from_sorted_unchecked(self.n, maximal_masks(&self.members))
    }

    /// `{[n] - F}` for every member `F`.
    pub fn complements(&self) -> SubsetFamily {
        let full = full_mask(self.n);
        let mut members: Vec<Mask> = self.members.iter().map(|m| full & !m).collect();
        sort_canonical(&mut members);
        Self::from_sorted_unchecked(self.n, members)
    }

    pub fn relabel(&self, perm: &[u32]) -> SubsetFamily {
        let mut members: Vec<Mask> = self.members.iter().map(|&m| permute(m, perm)).collect();
        sort_canonical(&mut members);
        Self::from_sorted_unchecked(self.n, members)
    }
}

impl fmt::Display for SubsetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.members.iter().map(|&m| format_set(m, self.n)).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Applies a 0-based vertex permutation: bit `i` moves to bit `perm[i]`.
pub fn permute(mask: Mask, perm: &[u32]) -> Mask {
    let mut out = 0;
    let mut rest = mask;
    while rest != 0 {
        let bit = rest.trailing_zeros();
        rest &= rest - 1;
        out |= 1u64 << perm[bit as usize];
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Kind {
    /// No faces at all.
    Void,
    /// Only the empty face: `{∅}`.
    Empty,
    /// At least one nonempty facet.
    Proper,
}

/// A simplicial complex on `[n]`, stored by its facet antichain.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Complex {
    n: u32,
    kind: Kind,
    facets: Vec<Mask>,
}

/// Face counts `(f_0, ..., f_dim)`; empty for `{∅}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FVector {
    pub entries: Vec<u64>,
}

impl FVector {
    pub fn dim(&self) -> i32 {
        self.entries.len() as i32 - 1
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl Complex {
    /// The complex generated by `generators`: non-maximal members are absorbed.
    pub fn new(generators: &SubsetFamily) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::NoGenerators);
        }
        Ok(Self::from_masks_unchecked(generators.n, generators.members()))
    }

    pub fn from_masks(n: u32, masks: impl IntoIterator<Item = Mask>) -> Result<Self> {
        Self::new(&SubsetFamily::new(n, masks)?)
    }

    pub fn from_shorthand(n: u32, text: &str) -> Result<Self> {
        Self::new(&SubsetFamily::from_shorthand(n, text)?)
    }

    pub fn void(n: u32) -> Result<Self> {
        check_n(n)?;
        Ok(Self {
            n,
            kind: Kind::Void,
            facets: Vec::new(),
        })
    }

    /// The complex `{∅}`.
    pub fn empty(n: u32) -> Result<Self> {
        check_n(n)?;
        Ok(Self {
            n,
            kind: Kind::Empty,
            facets: Vec::new(),
        })
    }

    pub fn simplex(n: u32) -> Result<Self> {
        check_n(n)?;
        Ok(Self::from_masks_unchecked(n, &[full_mask(n)]))
    }

    /// `masks` must be nonempty and inside `[n]`.
    pub(crate) fn from_masks_unchecked(n: u32, masks: &[Mask]) -> Self {
        debug_assert!(!masks.is_empty());
        let mut facets = maximal_masks(masks);
        if facets == [0] {
            facets.clear();
            return Self {
                n,
                kind: Kind::Empty,
                facets,
            };
        }
        Self {
            n,
            kind: Kind::Proper,
            facets,
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// The nonempty facets in canonical order. Empty for both `{∅}` and the
    /// void complex.
    pub fn facets(&self) -> &[Mask] {
        &self.facets
    }

    /// Facets with `{∅}` reporting its single empty facet.
    pub fn generators(&self) -> &[Mask] {
        match self.kind {
            Kind::Empty => &EMPTY_FACE,
            _ => &self.facets,
        }
    }

    /// The facet clutter `F(Δ)` as a family.
    pub fn facet_family(&self) -> SubsetFamily {
        SubsetFamily::from_sorted_unchecked(self.n, self.generators().to_vec())
    }

    pub fn is_void(&self) -> bool {
        self.kind == Kind::Void
    }

    pub fn is_empty_complex(&self) -> bool {
        self.kind == Kind::Empty
    }

    pub fn is_simplex(&self) -> bool {
        self.facets == [full_mask(self.n)]
    }

    pub fn contains(&self, face: Mask) -> bool {
        self.generators().iter().any(|&g| face & !g == 0)
    }

    /// `-2` for the void complex, `-1` for `{∅}`.
    pub fn dim(&self) -> i32 {
        match self.kind {
            Kind::Void => -2,
            Kind::Empty => -1,
            Kind::Proper => self.facets.last().map_or(-1, |f| f.count_ones() as i32 - 1),
        }
    }

    pub fn is_pure(&self) -> bool {
        let gens = self.generators();
        gens.iter().all(|g| g.count_ones() == gens[0].count_ones())
    }

    pub fn dimension_and_purity(&self) -> (i32, bool) {
        (self.dim(), self.is_pure())
    }

    /// Vertices lying in some facet.
    pub fn support(&self) -> Mask {
        self.facets.iter().fold(0, |acc, f| acc | f)
    }

    /// All faces, `∅` included, in canonical order.
    pub fn faces(&self) -> Vec<Mask> {
        let mut seen: HashSet<Mask> = HashSet::new();
        for &g in self.generators() {
            seen.extend(submasks(g));
        }
        let mut faces: Vec<Mask> = seen.into_iter().collect();
        sort_canonical(&mut faces);
        faces
    }

    /// Faces grouped by cardinality; index `k` holds the `k`-faces.
    pub fn faces_by_cardinality(&self) -> Vec<Vec<Mask>> {
        let mut layers: Vec<Vec<Mask>> = vec![Vec::new(); (self.dim() + 2).max(0) as usize];
        for face in self.faces() {
            layers[face.count_ones() as usize].push(face);
        }
        layers
    }

    pub fn f_vector(&self) -> Result<FVector> {
        if self.is_void() {
            return Err(Error::VoidComplex);
        }
        let entries = self
            .faces_by_cardinality()
            .iter()
            .skip(1)
            .map(|layer| layer.len() as u64)
            .collect();
        Ok(FVector { entries })
    }

    /// The faces of cardinality `k`; `k = 0` gives `{∅}` for a nonvoid complex.
    pub fn faces_of_cardinality(&self, k: u32) -> SubsetFamily {
        let mut seen: HashSet<Mask> = HashSet::new();
        for &g in self.generators() {
            if g.count_ones() >= k {
                for sub in submasks(g) {
                    if sub.count_ones() == k {
                        seen.insert(sub);
                    }
                }
            }
        }
        let mut members: Vec<Mask> = seen.into_iter().collect();
        sort_canonical(&mut members);
        SubsetFamily::from_sorted_unchecked(self.n, members)
    }

    /// `lk(F) = {G : G ∩ F = ∅, G ∪ F ∈ Δ}`.
    pub fn link(&self, face: Mask) -> Result<Complex> {
        if !self.contains(face) {
            return Err(Error::NotAFace(format_set(face, self.n)));
        }
        let parts: Vec<Mask> = self
            .generators()
            .iter()
            .filter(|&&g| face & !g == 0)
            .map(|&g| g & !face)
            .collect();
        Ok(Self::from_masks_unchecked(self.n, &parts))
    }

    /// The induced subcomplex on `subset`. For a nonvoid complex this is at
    /// least `{∅}`; only the void complex restricts to the void complex.
    pub fn restriction(&self, subset: Mask) -> Complex {
        if self.is_void() {
            return self.clone();
        }
        let parts: Vec<Mask> = self.generators().iter().map(|&g| g & subset).collect();
        Self::from_masks_unchecked(self.n, &parts)
    }

    /// Minimal nonfaces `N(Δ)`, found layer by layer up to cardinality
    /// `dim + 2`.
    pub fn minimal_nonfaces(&self) -> Result<SubsetFamily> {
        if self.is_void() {
            return Err(Error::VoidComplex);
        }
        let layers = self.faces_by_cardinality();
        let top = ((self.dim() + 2) as u32).min(self.n);
        let mut out = Vec::new();
        let mut candidates: HashSet<Mask> = HashSet::new();
        for k in 1..=top as usize {
            let below: HashSet<Mask> = layers[k - 1].iter().copied().collect();
            let here: HashSet<Mask> = layers
                .get(k)
                .map(|l| l.iter().copied().collect())
                .unwrap_or_default();
            candidates.clear();
            for &face in &layers[k - 1] {
                let mut free = full_mask(self.n) & !face;
                while free != 0 {
                    let bit = free & free.wrapping_neg();
                    free &= free - 1;
                    candidates.insert(face | bit);
                }
            }
            for &c in &candidates {
                if here.contains(&c) {
                    continue;
                }
                let mut rest = c;
                let mut minimal = true;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    rest &= rest - 1;
                    if !below.contains(&(c & !bit)) {
                        minimal = false;
                        break;
                    }
                }
                if minimal {
                    out.push(c);
                }
            }
        }
        sort_canonical(&mut out);
        Ok(SubsetFamily::from_sorted_unchecked(self.n, out))
    }

    /// Reference sweep over all `2^n` subsets; `n <= 20`.
    pub fn minimal_nonfaces_sweep(&self) -> Result<SubsetFamily> {
        if self.is_void() {
            return Err(Error::VoidComplex);
        }
        if self.n > 20 {
            return Err(Error::Parameters(format!(
                "subset sweep is limited to n <= 20, got {}",
                self.n
            )));
        }
        let mut out = Vec::new();
        for s in 0..=full_mask(self.n) {
            if self.contains(s) {
                continue;
            }
            let mut rest = s;
            let mut minimal = true;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest &= rest - 1;
                if !self.contains(s & !bit) {
                    minimal = false;
                    break;
                }
            }
            if minimal {
                out.push(s);
            }
        }
        sort_canonical(&mut out);
        Ok(SubsetFamily::from_sorted_unchecked(self.n, out))
    }

    pub fn relabel(&self, perm: &[u32]) -> Complex {
        if self.kind != Kind::Proper {
            return self.clone();
        }
        let parts: Vec<Mask> = self.facets.iter().map(|&f| permute(f, perm)).collect();
        Self::from_masks_unchecked(self.n, &parts)
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            Kind::Void => write!(f, "void"),
            Kind::Empty => write!(f, "{{∅}}"),
            Kind::Proper => {
                let parts: Vec<String> =
                    self.facets.iter().map(|&m| format_set(m, self.n)).collect();
                write!(f, "⟨{}⟩", parts.join(","))
            }
        }
    }
}

/// The Stanley–Reisner complex `δ_N`: all subsets of `[n]` containing no
/// member of `generators`. Facets come from a maximal-independent-set search.
pub fn stanley_reisner_complex(generators: &SubsetFamily) -> Result<Complex> {
    if generators.is_empty() {
        return Err(Error::EmptyFamily);
    }
    if generators.contains(0) {
        return Err(Error::UnitIdeal);
    }
    let edges = minimal_masks(generators.members());
    let facets = maximal_independent_sets(generators.n(), &edges);
    Ok(Complex::from_masks_unchecked(generators.n(), &facets))
}

fn maximal_independent_sets(n: u32, edges: &[Mask]) -> Vec<Mask> {
    struct Search<'a> {
        n: u32,
        edges: &'a [Mask],
        out: Vec<Mask>,
    }

    impl Search<'_> {
        fn blocked(&self, set: Mask) -> bool {
            self.edges.iter().any(|&e| e & !set == 0)
        }

        fn run(&mut self, v: u32, current: Mask) {
            if v == self.n {
                let outside = full_mask(self.n) & !current;
                let maximal = vertices(outside).all(|u| self.blocked(current | 1 << (u - 1)));
                if maximal {
                    self.out.push(current);
                }
                return;
            }
            let bit = 1u64 << v;
            if !self.blocked(current | bit) {
                self.run(v + 1, current | bit);
            }
            // Leaving `v` out is only useful if some edge through `v` can
            // still be completed by the vertices chosen so far and later ones.
            let decided = full_mask(v + 1);
            let excludable = self
                .edges
                .iter()
                .any(|&e| e & bit != 0 && (e & !bit & decided) & !current == 0);
            if excludable {
                self.run(v + 1, current);
            }
        }
    }

    let mut search = Search {
        n,
        edges,
        out: Vec::new(),
    };
    search.run(0, 0);
    search.out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(n: u32, text: &str) -> Complex {
        Complex::from_shorthand(n, text).unwrap()
    }

    fn fam(n: u32, text: &str) -> SubsetFamily {
        SubsetFamily::from_shorthand(n, text).unwrap()
    }

    const SEC2: &str = "123 125 136 145 146 234 246 256 345 356";

    #[test]
    fn new_complex_absorbs_contained_generators() {
        let c = cx(4, "12 13 24");
        assert_eq!(c.facets(), fam(4, "12 13 24").members());
        assert_eq!(c.dim(), 1);
        let c = cx(3, "123 12 3");
        assert_eq!(c.facets(), &[0b111]);
        assert_eq!(c.dim(), 2);
        let c = cx(6, SEC2);
        assert_eq!(c.facets().len(), 10);
        assert_eq!(c.dimension_and_purity(), (2, true));
    }

    #[test]
    fn new_complex_rejects_bad_input() {
        assert_eq!(
            Complex::from_masks(3, [0b1000]),
            Err(Error::VertexOutOfRange { vertex: 4, n: 3 })
        );
        assert_eq!(Complex::from_masks(0, [1]), Err(Error::VertexCount(0)));
        assert_eq!(Complex::from_masks(65, [1]), Err(Error::VertexCount(65)));
        assert_eq!(Complex::from_masks(3, []), Err(Error::NoGenerators));
        assert!(Complex::from_masks(3, [0]).unwrap().is_empty_complex());
    }

    #[test]
    fn f_vectors() {
        assert_eq!(cx(3, "123").f_vector().unwrap().entries, vec![3, 3, 1]);
        assert_eq!(cx(6, SEC2).f_vector().unwrap().entries, vec![6, 15, 10]);
        assert_eq!(cx(4, "12 34").f_vector().unwrap().entries, vec![4, 2]);
        assert_eq!(Complex::empty(3).unwrap().f_vector().unwrap().dim(), -1);
        assert_eq!(Complex::void(3).unwrap().f_vector(), Err(Error::VoidComplex));
    }

    #[test]
    fn dimension_conventions() {
        assert_eq!(cx(5, "123 45").dimension_and_purity(), (2, false));
        assert_eq!(Complex::empty(2).unwrap().dimension_and_purity(), (-1, true));
        assert_eq!(Complex::void(2).unwrap().dim(), -2);
    }

    #[test]
    fn faces_by_size() {
        assert_eq!(cx(3, "123").faces_of_cardinality(2), fam(3, "12 13 23"));
        assert_eq!(cx(6, SEC2).faces_of_cardinality(2).len(), 15);
        assert!(cx(4, "12 34").faces_of_cardinality(3).is_empty());
        assert_eq!(cx(4, "12").faces_of_cardinality(0).members(), &[0]);
        assert!(Complex::void(4).unwrap().faces_of_cardinality(0).is_empty());
    }

    #[test]
    fn links() {
        let path = cx(4, "12 23 34");
        assert_eq!(path.link(0b0010).unwrap(), cx(4, "1 3"));
        assert_eq!(cx(3, "123").link(0b001).unwrap(), cx(3, "23"));
        assert!(path.link(0b0011).unwrap().is_empty_complex());
        assert_eq!(path.link(0b0101), Err(Error::NotAFace("13".into())));
        assert_eq!(path.link(0).unwrap(), path);
    }

    #[test]
    fn restrictions() {
        let path = cx(4, "12 23 34");
        assert_eq!(path.restriction(0b0111), cx(4, "12 23"));
        assert!(cx(3, "123").restriction(0).is_empty_complex());
        // An unused vertex restricts to {∅}, whose H̃_{-1} Hochster needs.
        assert!(cx(3, "12").restriction(0b100).is_empty_complex());
        assert!(Complex::void(3).unwrap().restriction(0b111).is_void());
    }

    #[test]
    fn minimal_nonfaces_examples() {
        assert_eq!(
            cx(4, "12 23 34").minimal_nonfaces().unwrap(),
            fam(4, "13 14 24")
        );
        let sec2 = cx(6, SEC2);
        let complements = sec2.facet_family().complements();
        assert_eq!(sec2.minimal_nonfaces().unwrap(), complements);
        assert_eq!(
            complements,
            fam(6, "124 126 134 135 156 235 236 245 346 456")
        );
        assert!(cx(3, "123").minimal_nonfaces().unwrap().is_empty());
        assert_eq!(
            Complex::empty(3).unwrap().minimal_nonfaces().unwrap(),
            fam(3, "1 2 3")
        );
        // unused vertices are minimal nonfaces
        assert_eq!(cx(3, "12").minimal_nonfaces().unwrap(), fam(3, "3"));
    }

    #[test]
    fn stanley_reisner_examples() {
        assert_eq!(stanley_reisner_complex(&fam(2, "12")).unwrap(), cx(2, "1 2"));
        assert_eq!(
            stanley_reisner_complex(&fam(4, "13 14 24")).unwrap(),
            cx(4, "12 23 34")
        );
        let sec2 = fam(6, SEC2);
        assert_eq!(
            stanley_reisner_complex(&sec2).unwrap(),
            Complex::new(&sec2.complements()).unwrap()
        );
        assert_eq!(
            stanley_reisner_complex(&SubsetFamily::new(3, [0, 1]).unwrap()),
            Err(Error::UnitIdeal)
        );
        assert!(stanley_reisner_complex(&fam(2, "1 2"))
            .unwrap()
            .is_empty_complex());
        // non-minimal generators are reduced first
        assert_eq!(
            stanley_reisner_complex(&fam(3, "12 123")).unwrap(),
            cx(3, "13 23")
        );
    }

    #[test]
    fn k_subsets_are_ordered_and_complete() {
        let all: Vec<Mask> = k_subsets(5, 2).collect();
        assert_eq!(all.len(), 10);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(k_subsets(4, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(k_subsets(4, 4).collect::<Vec<_>>(), vec![0b1111]);
        assert_eq!(k_subsets(3, 4).count(), 0);
        assert_eq!(k_subsets(64, 63).count(), 64);
        assert_eq!(binomial(20, 10), 184_756);
    }

    #[test]
    fn shorthand_and_display() {
        let c = cx(6, "356 123");
        assert_eq!(c.to_string(), "⟨123,356⟩");
        assert_eq!(format_set(0b1, 12), "{1}");
        assert!(SubsetFamily::from_shorthand(4, "15").is_err());
    }
}
