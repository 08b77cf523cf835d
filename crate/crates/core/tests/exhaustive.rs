//! Exhaustive cross-checks over every pure complex with at most five
//! vertices.

use fcomplex::checks::{self, all_pure_complexes};
use fcomplex::complex::{k_subsets, Mask};
use fcomplex::enumerate::{canonical_form, classify, ClassifyOptions};
use fcomplex::fideal::is_f_complex;
use fcomplex::homalg::{is_cohen_macaulay, is_shellable, FieldSpec, Shelling, DEFAULT_BUDGET};
use fcomplex::{stanley_reisner_complex, Complex};

fn up_to_five() -> Vec<Complex> {
    (1..=5).flat_map(all_pure_complexes).collect()
}

/// f-ideal straight from the definition.
fn f_by_definition(c: &Complex) -> bool {
    let nonface = stanley_reisner_complex(&c.facet_family()).unwrap();
    c.f_vector().unwrap() == nonface.f_vector().unwrap()
}

/// The LU condition by explicit loops.
fn lu_by_loops(c: &Complex) -> bool {
    let n = c.n();
    let facets = c.facets();
    let d = facets[0].count_ones();
    let lower = k_subsets(n, d - 1).all(|s: Mask| facets.iter().any(|&f| s & !f == 0));
    let upper = d == n || k_subsets(n, d + 1).all(|s: Mask| facets.iter().any(|&f| f & !s == 0));
    lower && upper && 2 * facets.len() as u128 == fcomplex::complex::binomial(n as u64, d as u64)
}

#[test]
fn routes_agree_with_both_definitions() {
    for c in up_to_five() {
        let verdict = is_f_complex(&c).unwrap_or_else(|e| panic!("{c}: {e}"));
        assert_eq!(verdict.is_f, f_by_definition(&c), "{c}");
        assert_eq!(verdict.is_f, lu_by_loops(&c), "{c}");
    }
}

#[test]
fn shellable_implies_cohen_macaulay() {
    let all = up_to_five();
    let outcome = checks::shellable_implies_cm(&all, &[FieldSpec::Rationals, FieldSpec::prime(2).unwrap()]);
    assert!(outcome.passed(), "{outcome:?}");
    assert!(outcome.checked > 100);
}

#[test]
fn small_complexes_are_cm_independently_of_the_field() {
    // torsion needs at least six vertices
    let gf2 = FieldSpec::prime(2).unwrap();
    for c in up_to_five() {
        assert_eq!(is_cohen_macaulay(&c, FieldSpec::Rationals), is_cohen_macaulay(&c, gf2), "{c}");
    }
}

#[test]
fn graphs_shellable_iff_connected() {
    // a pure 1-dimensional complex is shellable iff it is connected
    for c in all_pure_complexes(5).into_iter().filter(|c| c.dim() == 1) {
        let mut reached: Mask = c.facets()[0];
        loop {
            let next = c.facets().iter().filter(|&&f| f & reached != 0).fold(reached, |a, &f| a | f);
            if next == reached {
                break;
            }
            reached = next;
        }
        let connected = reached == c.support();
        let shellable = matches!(is_shellable(&c, DEFAULT_BUDGET).unwrap(), Shelling::Shellable(_));
        assert_eq!(shellable, connected, "{c}");
    }
}

#[test]
fn structural_identities() {
    let all = up_to_five();
    let q = FieldSpec::Rationals;
    for outcome in [
        checks::stanley_reisner_round_trip(&all),
        checks::involutions(&all),
        checks::complements_commute(&all),
        checks::newton_duality(&all),
        checks::strong_duality(&all),
        checks::euler_characteristic(&all, q),
        checks::k_polynomial_identity(&all, q),
    ] {
        assert!(outcome.passed(), "{outcome:?}");
    }
}

#[test]
fn orbit_sizes_divide_group_order() {
    let options = ClassifyOptions {
        iso: true,
        ..ClassifyOptions::default()
    };
    for m in 1..=10 {
        let report = classify(5, 2, m, &options).unwrap();
        let classes = report.iso_classes.unwrap();
        assert_eq!(classes.iter().map(|c| c.orbit_size as u128).sum::<u128>(), report.total);
        for class in &classes {
            assert_eq!(120 % class.orbit_size, 0, "{}", class.representative);
            assert_eq!(canonical_form(&class.representative).complex, class.representative);
        }
    }
}

#[test]
fn graph_class_counts() {
    // isomorphism classes of graphs on 5 vertices with m edges
    let expected = [1, 2, 4, 6, 6, 6, 4, 2, 1, 1];
    let options = ClassifyOptions {
        iso: true,
        ..ClassifyOptions::default()
    };
    for (m, &want) in (1..=10).zip(&expected) {
        let report = classify(5, 2, m, &options).unwrap();
        assert_eq!(report.iso_classes.unwrap().len(), want, "m = {m}");
    }
}
