mod common;

use homassoc::constructions::transport;
use homassoc::variety::{
    homass_ideal, noniso_certificate, structure_ring, variety_residuals, IdealFlags, NonIsoVerdict,
};
use homassoc::{Cochain, HomAlgebra, Matrix};
use homassoc_poly::{buchberger, MonomialOrder, DEFAULT_BUDGET};

use common::{all_defaults, default};

#[test]
fn catalog_points_lie_on_the_variety() {
    for (id, a) in all_defaults() {
        let flags = IdealFlags { unitality: a.unit() == Some(0), ..IdealFlags::ALL };
        assert!(variety_residuals(&a, flags).unwrap().is_empty(), "{id}");
    }
}

#[test]
fn a_non_hom_associative_point_is_off_the_variety() {
    let mut product = Cochain::zero(2, 2);
    product.set_at_basis(&[0, 0], &[0.into(), 1.into()]);
    product.set_at_basis(&[1, 1], &[1.into(), 0.into()]);
    let a = HomAlgebra::new("off", product, Matrix::identity(2), None).unwrap();
    assert!(!variety_residuals(&a, IdealFlags::HOM_ASSOC).unwrap().is_empty());
}

#[test]
fn one_dimensional_multiplicativity_ideal() {
    let gb = buchberger(&homass_ideal(1, IdealFlags::MULTIPLICATIVITY), DEFAULT_BUDGET).unwrap();
    let ring = structure_ring(1, MonomialOrder::DegRevLex);
    let expected = ring.parse("a11*c111 - a11^2*c111").unwrap().monic();
    assert_eq!(gb.polys(), &[expected]);
    assert!(homass_ideal(1, IdealFlags::HOM_ASSOC).iter().all(|g| g.is_zero()));
}

#[test]
fn colliding_fingerprints_are_separated_by_the_certificate() {
    let v = noniso_certificate(&default("A2_8"), &default("A2_9"), DEFAULT_BUDGET).unwrap();
    assert!(matches!(v, NonIsoVerdict::ProvenNonIsomorphic { .. }), "{v:?}");
}

#[test]
fn isomorphic_copies_are_never_proven_distinct() {
    let phi = Matrix::from_i64(&[&[1, 1], &[0, 1]]);
    for id in ["A2_1", "A2_4", "A2_8", "A2_9"] {
        let a = default(id);
        let b = transport(&a, &phi).unwrap();
        let v = noniso_certificate(&a, &b, DEFAULT_BUDGET).unwrap();
        assert!(!v.is_proven(), "{id}");
    }
}

#[test]
fn complex_data_is_inconclusive() {
    let a = default("T2_1");
    let v = noniso_certificate(&a, &a, DEFAULT_BUDGET).unwrap();
    assert!(matches!(v, NonIsoVerdict::Inconclusive { .. }));
}
