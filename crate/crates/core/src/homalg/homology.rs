//! Reduced simplicial homology and Reisner's Cohen-Macaulay criterion.

use std::collections::HashMap;

use super::rank::rank;
use super::FieldSpec;
use crate::complex::{Complex, Mask};

/// Dimensions of `H̃_i` for `i = -1, 0, ..., dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedHomology {
    /// `dims[k]` is `dim H̃_{k-1}`.
    pub dims: Vec<usize>,
}

impl ReducedHomology {
    pub fn get(&self, degree: i32) -> usize {
        usize::try_from(degree + 1)
            .ok()
            .and_then(|k| self.dims.get(k).copied())
            .unwrap_or(0)
    }

    pub fn is_acyclic(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(k, &d)| if k % 2 == 1 { d as i64 } else { -(d as i64) })
            .sum()
    }
}

/// Boundary map from `k`-faces to `(k-1)`-faces as a dense matrix with one
/// row per `k`-face.
fn boundary(upper: &[Mask], lower: &[Mask]) -> Vec<Vec<i64>> {
    let index: HashMap<Mask, usize> = lower.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    upper
        .iter()
        .map(|&face| {
            let mut row = vec![0i64; lower.len()];
            let mut rest = face;
            let mut sign = 1;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest &= rest - 1;
                row[index[&(face & !bit)]] = sign;
                sign = -sign;
            }
            row
        })
        .collect()
}

/// Homology from faces grouped by cardinality (`layers[k]` = `k`-faces).
/// An empty slice is the void complex.
pub fn homology_of_layers(layers: &[Vec<Mask>], field: FieldSpec) -> ReducedHomology {
    let top = layers.iter().rposition(|l| !l.is_empty());
    let Some(top) = top else {
        return ReducedHomology { dims: Vec::new() };
    };
    let layers = &layers[..=top];
    // ranks[k] = rank of the boundary from k-faces to (k-1)-faces
    let mut ranks = vec![0usize; layers.len() + 1];
    for k in 1..layers.len() {
        ranks[k] = rank(&boundary(&layers[k], &layers[k - 1]), field);
    }
    let dims = (0..layers.len())
        .map(|k| layers[k].len() - ranks[k] - ranks[k + 1])
        .collect();
    ReducedHomology { dims }
}

pub fn reduced_homology(c: &Complex, field: FieldSpec) -> ReducedHomology {
    homology_of_layers(&c.faces_by_cardinality(), field)
}

/// Reisner's criterion: every link `lk(F)`, `F = ∅` included, has vanishing
/// reduced homology below its top dimension.
pub fn is_cohen_macaulay(c: &Complex, field: FieldSpec) -> bool {
    if c.is_void() {
        return false;
    }
    c.faces().into_iter().all(|face| {
        let link = c.link(face).expect("faces have links");
        let h = reduced_homology(&link, field);
        h.dims[..h.dims.len() - 1].iter().all(|&d| d == 0)
    })
}
