use fcomplex::checks;
use fcomplex::complex::full_mask;
use fcomplex::duality::{alexander_dual, newton_dual};
use fcomplex::enumerate::canonical_form;
use fcomplex::fideal::is_f_complex;
use fcomplex::homalg::{rank, FieldSpec};
use fcomplex::{stanley_reisner_complex, Complex};
use proptest::prelude::*;

/// A complex on `[n]`, `2 <= n <= 7`, with a vertex permutation.
fn complex_and_perm() -> impl Strategy<Value = (Complex, Vec<u32>)> {
    (2u32..=7).prop_flat_map(|n| {
        let facets = prop::collection::vec(1..=full_mask(n), 1..6);
        let perm = Just((0..n).collect::<Vec<u32>>()).prop_shuffle();
        (facets, perm).prop_map(move |(facets, perm)| (Complex::from_masks(n, facets).unwrap(), perm))
    })
}

fn complex() -> impl Strategy<Value = Complex> {
    complex_and_perm().prop_map(|(c, _)| c)
}

proptest! {
    #[test]
    fn invariants_survive_relabeling((c, perm) in complex_and_perm()) {
        let image = c.relabel(&perm);
        prop_assert_eq!(c.f_vector().unwrap(), image.f_vector().unwrap());
        prop_assert_eq!(is_f_complex(&c).unwrap().is_f, is_f_complex(&image).unwrap().is_f);
        prop_assert_eq!(
            c.minimal_nonfaces().unwrap().relabel(&perm),
            image.minimal_nonfaces().unwrap()
        );
        prop_assert_eq!(canonical_form(&c), canonical_form(&image));
    }

    #[test]
    fn canonical_form_is_idempotent(c in complex()) {
        let once = canonical_form(&c).complex;
        prop_assert_eq!(canonical_form(&once).complex, once.clone());
        prop_assert_eq!(once.f_vector().unwrap(), c.f_vector().unwrap());
    }

    #[test]
    fn nonface_search_and_round_trip(c in complex()) {
        let nonfaces = c.minimal_nonfaces().unwrap();
        prop_assert_eq!(&nonfaces, &c.minimal_nonfaces_sweep().unwrap());
        if nonfaces.is_empty() {
            prop_assert!(c.is_simplex());
        } else {
            prop_assert_eq!(stanley_reisner_complex(&nonfaces).unwrap(), c);
        }
    }

    #[test]
    fn duals_are_involutions(c in complex()) {
        if !c.generators().contains(&full_mask(c.n())) {
            prop_assert_eq!(newton_dual(&newton_dual(&c).unwrap()).unwrap(), c.clone());
        }
        if let Ok(dual) = alexander_dual(&c) {
            prop_assert_eq!(alexander_dual(&dual).unwrap(), c);
        }
    }

    #[test]
    fn homological_identities(c in complex()) {
        let family = [c];
        let q = FieldSpec::Rationals;
        prop_assert!(checks::euler_characteristic(&family, q).passed());
        prop_assert!(checks::k_polynomial_identity(&family, q).passed());
        prop_assert!(checks::eagon_reiner(&family, q).passed());
        prop_assert!(checks::minimal_prime_routes(&family).passed());
    }

    #[test]
    fn rank_is_transpose_invariant_and_drops_mod_p(
        rows in prop::collection::vec(prop::collection::vec(-4i64..=4, 5), 1..6)
    ) {
        let transpose: Vec<Vec<i64>> = (0..5).map(|j| rows.iter().map(|r| r[j]).collect()).collect();
        let q = rank(&rows, FieldSpec::Rationals);
        prop_assert_eq!(q, rank(&transpose, FieldSpec::Rationals));
        for p in [2, 3, 7] {
            prop_assert!(rank(&rows, FieldSpec::prime(p).unwrap()) <= q);
        }
    }
}

#[test]
fn rank_with_huge_entries_falls_back_exactly() {
    // Entries near 2^62 overflow i128 products during elimination.
    let big = 1i64 << 62;
    let rows = vec![
        vec![big, big - 1, 3],
        vec![big - 1, big - 2, 5],
        vec![2 * (big / 2), 2 * ((big - 1) / 2) + 1, 3],
    ];
    assert_eq!(rank(&rows, FieldSpec::Rationals), 2);
}
