//! Tallying predicates over an enumeration, optionally modulo relabeling.
//!
//! The rank range is cut into shards of a size that depends only on the
//! parameters, so reports do not depend on the worker count. Shard results
//! are merged in rank order.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use super::canonical::canonical_form;
use super::{enumerate_pure_range, pool_size};
use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::fideal::{is_f_complex, is_well_distributed, strong_verdict};
use crate::homalg::{is_cohen_macaulay, FieldSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Predicates {
    pub f: bool,
    pub strong: bool,
    pub well_distributed: bool,
    pub cm: bool,
}

impl Default for Predicates {
    fn default() -> Self {
        Self {
            f: true,
            strong: true,
            well_distributed: true,
            cm: true,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ClassifyOptions {
    pub iso: bool,
    pub field: FieldSpec,
    pub predicates: Predicates,
    /// Worker threads; `0` uses the rayon default.
    pub jobs: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        Self {
            iso: false,
            field: FieldSpec::Rationals,
            predicates: Predicates::default(),
            jobs: 1,
        }
    }
}

/// Per-complex verdicts; `None` when not requested or not defined (the
/// well-distributed test needs `n = 2d`). The f verdict is also computed
/// whenever well-distributedness is requested, since only well-distributed
/// f-complexes are tallied.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Verdicts {
    pub f: Option<bool>,
    pub strong: Option<bool>,
    pub well_distributed: Option<bool>,
    pub cm: Option<bool>,
}

pub fn evaluate(c: &Complex, options: &ClassifyOptions) -> Result<Verdicts> {
    let p = options.predicates;
    let f = if p.f || p.well_distributed {
        Some(is_f_complex(c)?.is_f)
    } else {
        None
    };
    let strong = if p.strong {
        match strong_verdict(c) {
            Ok(v) => Some(v.is_strong()),
            Err(Error::EmptyHomogeneousComplement(_)) => Some(false),
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    let well_distributed = if p.well_distributed && c.n() % 2 == 0 {
        match is_well_distributed(c) {
            Ok(v) => Some(v),
            Err(Error::WrongFacetSize { .. }) => None,
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    let cm = p.cm.then(|| is_cohen_macaulay(c, options.field));
    Ok(Verdicts {
        f,
        strong,
        well_distributed,
        cm,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoClass {
    /// The canonical form.
    pub representative: Complex,
    pub orbit_size: u64,
    pub verdicts: Verdicts,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassifyReport {
    pub n: u32,
    pub d: u32,
    pub m: u32,
    pub total: u128,
    pub f_count: Option<u128>,
    pub strong_count: Option<u128>,
    /// Complexes that are both f-complexes and well-distributed.
    pub well_distributed_count: Option<u128>,
    pub cm_count: Option<u128>,
    pub iso_classes: Option<Vec<IsoClass>>,
    /// Rank ranges `[start, end)` processed as units.
    pub shards: Vec<(u128, u128)>,
    /// `false` if any canonical form came from the heuristic fallback.
    pub exact_iso: bool,
}

#[derive(Default)]
struct Tally {
    total: u128,
    f: u128,
    strong: u128,
    well_distributed: u128,
    cm: u128,
}

impl Tally {
    fn add(&mut self, v: &Verdicts, weight: u128) {
        self.total += weight;
        let count = |x: Option<bool>| if x == Some(true) { weight } else { 0 };
        self.f += count(v.f);
        self.strong += count(v.strong);
        if v.f == Some(true) {
            self.well_distributed += count(v.well_distributed);
        }
        self.cm += count(v.cm);
    }
}

#[derive(Default)]
struct ShardResult {
    tally: Tally,
    classes: BTreeMap<Complex, (u64, Verdicts)>,
    exact: bool,
}

fn run_shard(
    n: u32,
    d: u32,
    m: u32,
    (start, end): (u128, u128),
    options: &ClassifyOptions,
) -> Result<ShardResult> {
    let mut out = ShardResult {
        exact: true,
        ..ShardResult::default()
    };
    for c in enumerate_pure_range(n, d, m, start, end)? {
        if options.iso {
            let form = canonical_form(&c);
            out.exact &= form.exact;
            if let Some(entry) = out.classes.get_mut(&form.complex) {
                entry.0 += 1;
            } else {
                let verdicts = evaluate(&form.complex, options)?;
                out.classes.insert(form.complex, (1, verdicts));
            }
        } else {
            out.tally.add(&evaluate(&c, options)?, 1);
        }
    }
    Ok(out)
}

fn shard_bounds(total: u128) -> Vec<(u128, u128)> {
    let size = (total / 64).max(1);
    let mut bounds = Vec::new();
    let mut start = 0;
    while start < total {
        let end = (start + size).min(total);
        bounds.push((start, end));
        start = end;
    }
    bounds
}

/// Runs the selected predicates over every `m`-facet pure complex with
/// facets of size `d` on `[n]`.
pub fn classify(n: u32, d: u32, m: u32, options: &ClassifyOptions) -> Result<ClassifyReport> {
    let total = pool_size(n, d, m)?;
    let shards = shard_bounds(total);
    let work = || -> Result<Vec<ShardResult>> {
        shards
            .par_iter()
            .map(|&range| run_shard(n, d, m, range, options))
            .collect()
    };
    let results = if options.jobs == 0 {
        work()?
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(options.jobs)
            .build()
            .map_err(|e| Error::Parameters(e.to_string()))?
            .install(work)?
    };

    let mut tally = Tally::default();
    let mut classes: BTreeMap<Complex, (u64, Verdicts)> = BTreeMap::new();
    let mut exact_iso = true;
    for shard in results {
        exact_iso &= shard.exact;
        tally.total += shard.tally.total;
        tally.f += shard.tally.f;
        tally.strong += shard.tally.strong;
        tally.well_distributed += shard.tally.well_distributed;
        tally.cm += shard.tally.cm;
        for (rep, (count, verdicts)) in shard.classes {
            classes.entry(rep).or_insert((0, verdicts)).0 += count;
        }
    }
    let iso_classes = options.iso.then(|| {
        for (count, verdicts) in classes.values() {
            tally.add(verdicts, *count as u128);
        }
        classes
            .into_iter()
            .map(|(representative, (orbit_size, verdicts))| IsoClass {
                representative,
                orbit_size,
                verdicts,
            })
            .collect()
    });
    debug_assert_eq!(tally.total, total);

    let p = options.predicates;
    Ok(ClassifyReport {
        n,
        d,
        m,
        total,
        f_count: p.f.then_some(tally.f),
        strong_count: p.strong.then_some(tally.strong),
        well_distributed_count: (p.well_distributed && n == 2 * d).then_some(tally.well_distributed),
        cm_count: p.cm.then_some(tally.cm),
        iso_classes,
        shards,
        exact_iso,
    })
}

impl fmt::Display for ClassifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = vec![format!("total {}", self.total)];
        let mut push = |name: &str, v: Option<u128>| {
            if let Some(v) = v {
                parts.push(format!("{name} {v}"));
            }
        };
        push("f", self.f_count);
        push("well-distributed", self.well_distributed_count);
        push("strong", self.strong_count);
        push("cm", self.cm_count);
        writeln!(f, "{}", parts.join(", "))?;
        if let Some(classes) = &self.iso_classes {
            writeln!(f, "iso classes {}", classes.len())?;
            for class in classes {
                let flag = |v: Option<bool>| match v {
                    Some(true) => "yes",
                    Some(false) => "no",
                    None => "-",
                };
                writeln!(
                    f,
                    "  {} orbit {} f {} strong {} well-distributed {} cm {}",
                    class.representative,
                    class.orbit_size,
                    flag(class.verdicts.f),
                    flag(class.verdicts.strong),
                    flag(class.verdicts.well_distributed),
                    flag(class.verdicts.cm),
                )?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paths_stars_triangles() {
        let report = classify(4, 2, 3, &ClassifyOptions::default()).unwrap();
        assert_eq!(report.total, 20);
        assert_eq!(report.f_count, Some(12));
        assert_eq!(report.well_distributed_count, Some(0));
        assert_eq!(report.strong_count, Some(12));
        assert_eq!(
            report.to_string().lines().next().unwrap(),
            "total 20, f 12, well-distributed 0, strong 12, cm 20"
        );
    }

    #[test]
    fn iso_mode_orbits() {
        let options = ClassifyOptions {
            iso: true,
            ..ClassifyOptions::default()
        };
        let report = classify(4, 2, 3, &options).unwrap();
        let classes = report.iso_classes.as_ref().unwrap();
        let mut orbits: Vec<u64> = classes.iter().map(|c| c.orbit_size).collect();
        orbits.sort_unstable();
        assert_eq!(orbits, vec![4, 4, 12]);
        assert_eq!(report.f_count, Some(12));
        let f_class: Vec<&IsoClass> = classes.iter().filter(|c| c.verdicts.f == Some(true)).collect();
        assert_eq!(f_class.len(), 1);
        assert_eq!(f_class[0].orbit_size, 12);
    }

    #[test]
    fn single_vertex_facets() {
        let report = classify(2, 1, 1, &ClassifyOptions::default()).unwrap();
        assert_eq!(report.total, 2);
        assert_eq!(report.f_count, Some(2));
    }

    #[test]
    fn worker_count_does_not_change_report() {
        let one = classify(5, 2, 3, &ClassifyOptions::default()).unwrap();
        let many = classify(
            5,
            2,
            3,
            &ClassifyOptions {
                jobs: 3,
                ..ClassifyOptions::default()
            },
        )
        .unwrap();
        assert_eq!(one, many);
        assert_eq!(one.well_distributed_count, None);
    }
}
