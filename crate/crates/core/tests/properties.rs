mod common;

use homassoc::catalog::{catalog_list, Family};
use homassoc::constructions::{direct_sum, gl_action, transport, untwist, yau_twist};
use homassoc::fingerprint::fingerprint;
use homassoc::variety::noniso_certificate;
use homassoc::verify::{check_hom_associative, check_multiplicative, iso_verify};
use homassoc::{GaussianRational, HomAlgebra, Matrix};
use homassoc_poly::DEFAULT_BUDGET;
use proptest::prelude::*;

use common::default;

fn invertible(n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-2i64..=2, n * n).prop_filter_map("singular", move |xs| {
        let rows = xs.chunks(n).map(|r| r.iter().map(|&x| GaussianRational::from_integer(x)).collect()).collect();
        let m = Matrix::from_rows(rows).unwrap();
        m.inverse().map(|_| m)
    })
}

fn entry_of(family: Family) -> impl Strategy<Value = HomAlgebra> {
    let ids = catalog_list(Some(family));
    (0..ids.len()).prop_map(move |k| default(ids[k]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn transport_preserves_axioms_and_invariants(a in entry_of(Family::Dim2), phi in invertible(2)) {
        let b = transport(&a, &phi).unwrap();
        prop_assert!(check_hom_associative(&b).holds);
        prop_assert!(check_multiplicative(&b).holds);
        prop_assert!(iso_verify(&a, &b, &phi).unwrap().holds);
        prop_assert_eq!(fingerprint(&a).unwrap(), fingerprint(&b).unwrap());
        let back = transport(&b, &phi.inverse().unwrap()).unwrap();
        prop_assert!(back.same_structure(&a));
    }

    #[test]
    fn transport_invariants_in_dimension_three(a in entry_of(Family::Dim3), phi in invertible(3)) {
        let b = gl_action(&phi, &a).unwrap();
        prop_assert!(check_hom_associative(&b).holds);
        prop_assert_eq!(fingerprint(&a).unwrap(), fingerprint(&b).unwrap());
    }

    #[test]
    fn untwist_then_twist_is_the_identity(a in entry_of(Family::Dim2), phi in invertible(2)) {
        let b = transport(&a, &phi).unwrap();
        if b.twist().inverse().is_some() {
            let c = untwist(&b).unwrap();
            prop_assert!(yau_twist(&c, b.twist()).unwrap().same_structure(&b));
        }
    }

    #[test]
    fn isomorphic_pairs_are_not_proven_distinct(a in entry_of(Family::Dim2), phi in invertible(2)) {
        let b = transport(&a, &phi).unwrap();
        prop_assert!(!noniso_certificate(&a, &b, DEFAULT_BUDGET).unwrap().is_proven());
    }

    #[test]
    fn direct_sums_stay_hom_associative(a in entry_of(Family::Dim2), b in entry_of(Family::Unital2)) {
        let s = direct_sum(&a, &b);
        prop_assert_eq!(s.dim(), 4);
        prop_assert!(check_hom_associative(&s).holds);
        prop_assert!(check_multiplicative(&s).holds);
    }
}
