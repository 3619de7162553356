mod common;

use homassoc::algebra::operator_coords;
use homassoc::derivations::{
    commutator, commutator_inner_derivation, derivation_space, inner_derivation, inner_derivation_space, is_derivation,
    twist_fixed_space, DerivationSpace,
};
use homassoc::{GaussianRational, HomAlgebra, Matrix, Subspace};

use common::{all_defaults, default};

#[test]
fn brackets_of_derivations_are_derivations() {
    for (id, a) in all_defaults() {
        for k in 0..=2u32 {
            for s in 0..=2u32 {
                let dk = derivation_space(&a, k).operators();
                let ds = derivation_space(&a, s).operators();
                let target = derivation_space(&a, k + s);
                for d in &dk {
                    for e in &ds {
                        let c = commutator(d, e).unwrap();
                        assert!(target.contains(&c).unwrap(), "{id} k={k} s={s}");
                        assert!(is_derivation(&a, &c, k + s).unwrap(), "{id} k={k} s={s}");
                    }
                }
            }
        }
    }
}

/// For a multiplicative Hom-associative algebra and α-fixed `f`, Hom-associativity
/// gives `D(μ(g,h)) = μ(α^{k+1}(g), D(h))` for `D = g ↦ μ(α^k(g), f)`, so `D` is an
/// α^{k+1}-derivation exactly when `μ(D(g), α^{k+1}(h))` vanishes identically.
fn right_inner_is_derivation_predicted(a: &HomAlgebra, d: &Matrix, k: u32) -> bool {
    let next = a.twist_power(k + 1);
    (0..a.dim()).all(|i| (0..a.dim()).all(|j| a.mul(&d.column(i), &next.column(j)).unwrap().iter().all(|x| x.is_zero())))
}

#[test]
fn right_multiplication_inner_maps_are_derivations_only_when_the_cross_term_vanishes() {
    let mut failures = 0;
    for (id, a) in all_defaults() {
        for k in 0..=1u32 {
            for f in twist_fixed_space(&a).basis() {
                let d = inner_derivation(&a, f, k).unwrap();
                let holds = is_derivation(&a, &d, k + 1).unwrap();
                assert_eq!(holds, right_inner_is_derivation_predicted(&a, &d, k), "{id} k={k}");
                assert_eq!(d.mul(a.twist()).unwrap(), a.twist().mul(&d).unwrap(), "{id} k={k}");
                failures += usize::from(!holds);
            }
        }
    }
    assert!(failures > 0);
}

#[test]
fn identity_on_a2_4_is_not_a_derivation() {
    let a = default("A2_4");
    let e1 = [GaussianRational::one(), GaussianRational::zero()];
    let d = inner_derivation(&a, &e1, 0).unwrap();
    assert_eq!(d, Matrix::identity(2));
    assert!(!is_derivation(&a, &d, 1).unwrap());
}

#[test]
fn commutator_inner_maps_are_derivations() {
    for (id, a) in all_defaults() {
        for k in 0..=2u32 {
            let target = derivation_space(&a, k + 1);
            for f in twist_fixed_space(&a).basis() {
                let d = commutator_inner_derivation(&a, f, k).unwrap();
                assert!(target.contains(&d).unwrap(), "{id} k={k}");
            }
        }
    }
}

#[test]
fn inner_space_is_spanned_by_the_inner_maps() {
    for (id, a) in all_defaults() {
        let maps: Vec<_> = twist_fixed_space(&a)
            .basis()
            .iter()
            .map(|f| operator_coords(&inner_derivation(&a, f, 0).unwrap()))
            .collect();
        let n = a.dim();
        assert_eq!(Subspace::span(n * n, &maps).unwrap(), inner_derivation_space(&a, 0), "{id}");
    }
}

#[test]
fn untwisted_algebras_have_one_derivation_space() {
    for (id, a) in all_defaults() {
        if !a.twist().is_identity() {
            continue;
        }
        assert_eq!(derivation_space(&a, 0), DerivationSpace { k: 0, ..derivation_space(&a, 2) }, "{id}");
    }
}

#[test]
fn derivation_spaces_of_small_examples() {
    let a = default("A2_4");
    assert_eq!(derivation_space(&a, 0).dim(), 1);
    assert_eq!(derivation_space(&default("A2_2"), 0).dim(), 0);
    let zero = Matrix::zeros(2, 2);
    assert!(is_derivation(&a, &zero, 0).unwrap());
    assert!(!is_derivation(&a, &Matrix::identity(2), 0).unwrap());
}
