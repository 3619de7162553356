mod common;

use homassoc::cohomology::{coboundary_matrix, cochain_space, cohomology_table};
use homassoc::deformation::{
    check_deformation, equivalence_apply, first_obstruction, obstruction_cochain, rigidity_probe, trivializing_map,
    DeformationJet, ObstructionResult, Rigidity,
};
use homassoc::{Cochain, GaussianRational, HomAlgebra, Matrix};
use proptest::prelude::*;

use common::default;

fn cocycle_basis(a: &HomAlgebra) -> Vec<Cochain> {
    cohomology_table(a, 2).unwrap().degree(2).unwrap().cocycle_basis()
}

/// Checks a first-order term against an independent solve of `δ²μ_2 = ±Q`.
fn check_first_order(a: &HomAlgebra, mu1: &Cochain) {
    let jet = DeformationJet::new(a.clone(), vec![mu1.clone()]).unwrap();
    assert!(check_deformation(&jet, 1).unwrap().holds);
    let q = obstruction_cochain(a, mu1).unwrap();
    let delta = coboundary_matrix(a, 2).unwrap();
    let solvable = delta.matrix.solve(q.coeffs()).unwrap().is_some();
    let minus_q: Vec<GaussianRational> = q.coeffs().iter().map(|x| -x).collect();
    assert_eq!(delta.matrix.solve(&minus_q).unwrap().is_some(), solvable);
    match first_obstruction(a, mu1).unwrap() {
        ObstructionResult::Extendable(mu2) => {
            assert!(solvable);
            let ext = DeformationJet::new(a.clone(), vec![mu1.clone(), mu2]).unwrap();
            assert!(check_deformation(&ext, 2).unwrap().holds);
        }
        ObstructionResult::Obstructed(_) => assert!(!solvable),
    }
}

#[test]
fn cocycle_basis_elements_are_infinitesimal_deformations() {
    for id in ["A2_3", "A2_7"] {
        let a = default(id);
        for mu1 in cocycle_basis(&a) {
            check_first_order(&a, &mu1);
        }
    }
}

#[test]
fn non_cocycles_fail_at_first_order() {
    for id in ["A2_3", "A2_6", "A2_7"] {
        let a = default(id);
        let z2 = cohomology_table(&a, 2).unwrap().degree(2).unwrap().cocycles.clone();
        for b in cochain_space(&a, 2).unwrap().basis() {
            if z2.contains(b).unwrap() {
                continue;
            }
            let jet = DeformationJet::new(a.clone(), vec![Cochain::from_coeffs(2, 2, b.clone()).unwrap()]).unwrap();
            assert!(check_deformation(&jet, 0).unwrap().holds);
            assert!(!check_deformation(&jet, 1).unwrap().holds, "{id}");
        }
    }
}

#[test]
fn rigidity_matches_second_cohomology() {
    for id in ["A2_1", "A2_2", "A2_3", "A2_5", "A2_6", "A2_7", "A3_3", "A3_8", "U2_3"] {
        let a = default(id);
        let h2 = cohomology_table(&a, 2).unwrap().degree(2).unwrap().dim_cohomology;
        assert_eq!(rigidity_probe(&a).unwrap() == Rigidity::RigidIndicated, h2 == 0, "{id}");
    }
}

#[test]
fn coboundaries_are_trivial_deformations() {
    for id in ["A2_3", "A2_7", "A2_6"] {
        let a = default(id);
        let t = cohomology_table(&a, 2).unwrap();
        for b in t.degree(2).unwrap().coboundaries.basis() {
            let mu1 = Cochain::from_coeffs(2, 2, b.clone()).unwrap();
            let f = trivializing_map(&a, &mu1).unwrap().expect("coboundary");
            let jet = DeformationJet::new(a.clone(), vec![mu1]).unwrap();
            let moved = equivalence_apply(&jet, &[Matrix::identity(2), f]).unwrap();
            assert!(moved.terms()[0].is_zero(), "{id}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn combinations_of_cocycles_agree_with_the_solver(
        which in 0usize..3,
        coeffs in prop::collection::vec(-2i64..=2, 4),
    ) {
        let a = default(["A2_3", "A2_6", "A2_7"][which]);
        let basis = cocycle_basis(&a);
        let mut mu1 = Cochain::zero(2, 2);
        for (b, k) in basis.iter().zip(&coeffs) {
            mu1 = mu1.add(&b.scale(&GaussianRational::from_integer(*k))).unwrap();
        }
        check_first_order(&a, &mu1);
    }
}
