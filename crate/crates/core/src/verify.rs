use homassoc_exact::{unit_vector, vec_sub, GaussianRational, Matrix, Vector};

use crate::algebra::HomAlgebra;
use crate::error::{AlgebraError, Result};

/// One violated instance of an identity, evaluated on basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// Which equation failed, e.g. `product` or `twist`.
    pub relation: String,
    pub indices: Vec<usize>,
    pub lhs: Vector,
    pub rhs: Vector,
}

/// Outcome of an axiom check. `holds` is true exactly when `witnesses` is empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub property: String,
    pub holds: bool,
    pub witnesses: Vec<Witness>,
}

impl VerificationReport {
    pub fn from_witnesses(property: impl Into<String>, witnesses: Vec<Witness>) -> Self {
        VerificationReport { property: property.into(), holds: witnesses.is_empty(), witnesses }
    }

    /// Concatenates the witnesses of several reports under a new name.
    pub fn merge(property: impl Into<String>, parts: Vec<VerificationReport>) -> Self {
        Self::from_witnesses(property, parts.into_iter().flat_map(|r| r.witnesses).collect())
    }
}

pub(crate) struct Recorder {
    witnesses: Vec<Witness>,
}

impl Recorder {
    pub(crate) fn new() -> Self {
        Recorder { witnesses: Vec::new() }
    }

    pub(crate) fn compare(&mut self, relation: &str, indices: &[usize], lhs: Vector, rhs: Vector) {
        if lhs != rhs {
            self.witnesses.push(Witness { relation: relation.to_string(), indices: indices.to_vec(), lhs, rhs });
        }
    }

    pub(crate) fn finish(self, property: &str) -> VerificationReport {
        VerificationReport::from_witnesses(property, self.witnesses)
    }
}

/// `μ(μ(x,y), α(z)) − μ(α(x), μ(y,z))`.
pub fn hom_associator(
    a: &HomAlgebra,
    x: &[GaussianRational],
    y: &[GaussianRational],
    z: &[GaussianRational],
) -> Result<Vector> {
    let lhs = a.mul(&a.mul(x, y)?, &a.apply_twist(z)?)?;
    let rhs = a.mul(&a.apply_twist(x)?, &a.mul(y, z)?)?;
    Ok(vec_sub(&lhs, &rhs))
}

/// Checks `μ(μ(x,y), α(z)) = μ(α(x), μ(y,z))` on all basis triples.
pub fn check_hom_associative(a: &HomAlgebra) -> VerificationReport {
    let n = a.dim();
    let twist_cols = a.twist().columns();
    let mut rec = Recorder::new();
    for i in 0..n {
        for j in 0..n {
            let xy = a.mul_basis(i, j).to_vec();
            for k in 0..n {
                let lhs = a.mul(&xy, &twist_cols[k]).expect("shapes agree");
                let rhs = a.mul(&twist_cols[i], a.mul_basis(j, k)).expect("shapes agree");
                rec.compare("hom-associativity", &[i, j, k], lhs, rhs);
            }
        }
    }
    rec.finish("hom-associative")
}

/// Checks classical associativity of the product, ignoring the twist.
pub fn check_associative(a: &HomAlgebra) -> VerificationReport {
    let n = a.dim();
    let mut rec = Recorder::new();
    for i in 0..n {
        for j in 0..n {
            let xy = a.mul_basis(i, j).to_vec();
            for k in 0..n {
                let lhs = a.mul(&xy, &unit_vector(n, k)).expect("shapes agree");
                let rhs = a.mul(&unit_vector(n, i), a.mul_basis(j, k)).expect("shapes agree");
                rec.compare("associativity", &[i, j, k], lhs, rhs);
            }
        }
    }
    rec.finish("associative")
}

/// Checks `α(μ(x,y)) = μ(α(x), α(y))` on all basis pairs.
pub fn check_multiplicative(a: &HomAlgebra) -> VerificationReport {
    let n = a.dim();
    let twist_cols = a.twist().columns();
    let mut rec = Recorder::new();
    for i in 0..n {
        for j in 0..n {
            let lhs = a.apply_twist(a.mul_basis(i, j)).expect("shapes agree");
            let rhs = a.mul(&twist_cols[i], &twist_cols[j]).expect("shapes agree");
            rec.compare("multiplicativity", &[i, j], lhs, rhs);
        }
    }
    rec.finish("multiplicative")
}

/// Checks `μ(x,u) = μ(u,x) = α(x)` and `α(u) = u` for the declared unit.
pub fn check_unital(a: &HomAlgebra) -> Result<VerificationReport> {
    let u = a.unit().ok_or(AlgebraError::MissingUnit)?;
    let n = a.dim();
    let mut rec = Recorder::new();
    for i in 0..n {
        let ax = a.twist().column(i);
        rec.compare("right unit", &[i], a.mul_basis(i, u).to_vec(), ax.clone());
        rec.compare("left unit", &[i], a.mul_basis(u, i).to_vec(), ax);
    }
    rec.compare("unit fixed by twist", &[u], a.twist().column(u), unit_vector(n, u));
    Ok(rec.finish("unital"))
}

fn check_map(phi: &Matrix, a1: &HomAlgebra, a2: &HomAlgebra, property: &str) -> Result<VerificationReport> {
    let (n1, n2) = (a1.dim(), a2.dim());
    if phi.cols() != n1 {
        return Err(AlgebraError::DimensionMismatch { context: "morphism columns", expected: n1, found: phi.cols() });
    }
    if phi.rows() != n2 {
        return Err(AlgebraError::DimensionMismatch { context: "morphism rows", expected: n2, found: phi.rows() });
    }
    let images = phi.columns();
    let mut rec = Recorder::new();
    for i in 0..n1 {
        for j in 0..n1 {
            let lhs = phi.mul_vec(a1.mul_basis(i, j))?;
            let rhs = a2.mul(&images[i], &images[j])?;
            rec.compare("product", &[i, j], lhs, rhs);
        }
    }
    for i in 0..n1 {
        let lhs = a2.apply_twist(&images[i])?;
        let rhs = phi.mul_vec(&a1.twist().column(i))?;
        rec.compare("twist", &[i], lhs, rhs);
    }
    if let (Some(u1), Some(u2)) = (a1.unit(), a2.unit()) {
        rec.compare("unit", &[u1], images[u1].clone(), unit_vector(n2, u2));
    }
    Ok(rec.finish(property))
}

/// Checks that `φ` (an `n2 × n1` matrix) is a morphism `A1 → A2`:
/// `φ∘μ1 = μ2∘(φ⊗φ)`, `α2∘φ = φ∘α1`, and `φ(u1) = u2` when both are unital.
pub fn check_morphism(phi: &Matrix, a1: &HomAlgebra, a2: &HomAlgebra) -> Result<VerificationReport> {
    check_map(phi, a1, a2, "morphism")
}

/// Checks that an invertible square `φ` is an isomorphism `A1 → A2`.
pub fn iso_verify(a1: &HomAlgebra, a2: &HomAlgebra, phi: &Matrix) -> Result<VerificationReport> {
    if !phi.is_square() || phi.rows() != a1.dim() {
        return Err(AlgebraError::DimensionMismatch { context: "isomorphism", expected: a1.dim(), found: phi.rows() });
    }
    if phi.inverse().is_none() {
        return Err(AlgebraError::NotInvertible("isomorphism candidate"));
    }
    check_map(phi, a1, a2, "isomorphism")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Cochain;

    fn g(n: i64) -> GaussianRational {
        GaussianRational::from_integer(n)
    }

    fn failing_example() -> HomAlgebra {
        let mut a = HomAlgebra::zero("bad", 2);
        a.set_product(0, 0, &[g(0), g(1)]).unwrap();
        a.set_product(0, 1, &[g(1), g(0)]).unwrap();
        a.set_twist_image(0, &[g(1), g(0)]).unwrap();
        a.set_twist_image(1, &[g(0), g(1)]).unwrap();
        a
    }

    #[test]
    fn associator_of_failing_example() {
        let a = failing_example();
        let e1 = unit_vector(2, 0);
        assert_eq!(hom_associator(&a, &e1, &e1, &e1).unwrap(), vec![g(-1), g(0)]);
        let r = check_hom_associative(&a);
        assert!(!r.holds);
        assert!(r.witnesses.iter().any(|w| w.indices == vec![0, 0, 0]));
    }

    #[test]
    fn scaling_twist_breaks_multiplicativity() {
        let mut p = Cochain::zero(1, 2);
        p.set(&[0, 0], 0, g(1));
        let a = HomAlgebra::new("s", p, Matrix::from_i64(&[&[2]]), None).unwrap();
        let r = check_multiplicative(&a);
        assert_eq!(r.witnesses[0].lhs, vec![g(2)]);
        assert_eq!(r.witnesses[0].rhs, vec![g(4)]);
    }

    #[test]
    fn unital_requires_unit() {
        assert_eq!(check_unital(&HomAlgebra::zero("z", 1)), Err(AlgebraError::MissingUnit));
    }
}
