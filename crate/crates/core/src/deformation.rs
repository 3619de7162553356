use homassoc_exact::{GaussianRational, Matrix, Vector};

use crate::algebra::{tuples, Cochain, HomAlgebra};
use crate::cohomology::{coboundary_matrix, cocycle_check, cohomology_table, is_equivariant};
use crate::error::{AlgebraError, Result};
use crate::verify::{Recorder, VerificationReport};

/// Truncated formal deformation `μ_t = μ + t μ_1 + ... + t^N μ_N` with the
/// twist held fixed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationJet {
    base: HomAlgebra,
    terms: Vec<Cochain>,
}

impl DeformationJet {
    /// Each term must be a bilinear map commuting with the twist.
    pub fn new(base: HomAlgebra, terms: Vec<Cochain>) -> Result<Self> {
        for (i, t) in terms.iter().enumerate() {
            if t.dim() != base.dim() || t.arity() != 2 {
                return Err(AlgebraError::DimensionMismatch {
                    context: "deformation term",
                    expected: base.dim(),
                    found: t.dim(),
                });
            }
            if !is_equivariant(&base, t)? {
                return Err(AlgebraError::Precondition(format!("term of order {} does not commute with the twist", i + 1)));
            }
        }
        Ok(DeformationJet { base, terms })
    }

    /// The jet with all higher terms zero.
    pub fn trivial(base: HomAlgebra, order: usize) -> Self {
        let n = base.dim();
        DeformationJet { base, terms: vec![Cochain::zero(n, 2); order] }
    }

    pub fn base(&self) -> &HomAlgebra {
        &self.base
    }

    pub fn order(&self) -> usize {
        self.terms.len()
    }

    /// `μ_1 .. μ_N`.
    pub fn terms(&self) -> &[Cochain] {
        &self.terms
    }

    /// `μ_i`, with `μ_0` the base product and zero beyond the order.
    pub fn term(&self, i: usize) -> Option<&Cochain> {
        if i == 0 {
            Some(self.base.product())
        } else {
            self.terms.get(i - 1)
        }
    }
}

fn nested(
    outer: &Cochain,
    inner: &Cochain,
    alpha_cols: &[Vector],
    x: usize,
    y: usize,
    z: usize,
) -> Result<(Vector, Vector)> {
    let right = outer.eval(&[&alpha_cols[x], inner.at_basis(&[y, z])])?;
    let left = outer.eval(&[inner.at_basis(&[x, y]), &alpha_cols[z]])?;
    Ok((right, left))
}

/// Coefficient of `t^m` in `μ_t(α(x), μ_t(y, z)) − μ_t(μ_t(x, y), α(z))`.
///
/// With this sign the order-1 coefficient is exactly `δ²μ_1`.
pub fn deformation_residual(j: &DeformationJet, m: usize) -> Result<Cochain> {
    if m > 2 * j.order() {
        return Err(AlgebraError::Precondition(format!("residual order {m} exceeds twice the jet order {}", j.order())));
    }
    let n = j.base.dim();
    let alpha_cols = j.base.twist().columns();
    let mut out = Cochain::zero(n, 3);
    for t in tuples(n, 3) {
        let mut v = vec![GaussianRational::zero(); n];
        for i in 0..=m {
            let (Some(outer), Some(inner)) = (j.term(i), j.term(m - i)) else {
                continue;
            };
            let (right, left) = nested(outer, inner, &alpha_cols, t[0], t[1], t[2])?;
            for ((o, r), l) in v.iter_mut().zip(&right).zip(&left) {
                *o += &(r - l);
            }
        }
        out.set_at_basis(&t, &v);
    }
    Ok(out)
}

/// Holds iff every residual of order `0..=up_to` vanishes.
pub fn check_deformation(j: &DeformationJet, up_to: usize) -> Result<VerificationReport> {
    let mut rec = Recorder::new();
    let zero = vec![GaussianRational::zero(); j.base.dim()];
    for m in 0..=up_to {
        let r = deformation_residual(j, m)?;
        let relation = format!("order {m}");
        for t in r.input_tuples() {
            rec.compare(&relation, &t, r.at_basis(&t).to_vec(), zero.clone());
        }
    }
    Ok(rec.finish("deformation"))
}

/// `Q(x,y,z) = μ_1(μ_1(x,y), α(z)) − μ_1(α(x), μ_1(y,z))`.
pub fn obstruction_cochain(a: &HomAlgebra, mu1: &Cochain) -> Result<Cochain> {
    let n = a.dim();
    let alpha_cols = a.twist().columns();
    let mut out = Cochain::zero(n, 3);
    for t in tuples(n, 3) {
        let (right, left) = nested(mu1, mu1, &alpha_cols, t[0], t[1], t[2])?;
        let v: Vector = left.iter().zip(&right).map(|(l, r)| l - r).collect();
        out.set_at_basis(&t, &v);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ObstructionResult {
    /// A second-order term `μ_2` with `δ²μ_2 = Q`, so the order-2 residual vanishes.
    Extendable(Cochain),
    /// `Q` is a 3-cocycle outside the image of `δ²`.
    Obstructed(Cochain),
}

impl ObstructionResult {
    pub fn is_extendable(&self) -> bool {
        matches!(self, ObstructionResult::Extendable(_))
    }
}

/// Decides whether the order-1 jet `μ + t μ_1` extends to order 2.
pub fn first_obstruction(a: &HomAlgebra, mu1: &Cochain) -> Result<ObstructionResult> {
    let check = cocycle_check(a, mu1)?;
    if let Some(w) = check.witnesses.first() {
        return Err(AlgebraError::Precondition(format!(
            "first-order term is not a 2-cocycle ({} at {:?})",
            w.relation, w.indices
        )));
    }
    let q = obstruction_cochain(a, mu1)?;
    if let Some(w) = cocycle_check(a, &q)?.witnesses.first() {
        return Err(AlgebraError::Precondition(format!(
            "obstruction is not a 3-cocycle ({} at {:?}); is the algebra multiplicative?",
            w.relation, w.indices
        )));
    }
    let delta = coboundary_matrix(a, 2)?;
    match delta.matrix.solve(q.coeffs())? {
        Some(coords) => {
            let n = a.dim();
            let mut mu2 = vec![GaussianRational::zero(); n.pow(3)];
            for (b, c) in delta.domain.basis().iter().zip(&coords) {
                if c.is_zero() {
                    continue;
                }
                for (o, x) in mu2.iter_mut().zip(b) {
                    *o += &(c * x);
                }
            }
            Ok(ObstructionResult::Extendable(Cochain::from_coeffs(n, 2, mu2)?))
        }
        None => Ok(ObstructionResult::Obstructed(q)),
    }
}

/// `P ∘ μ ∘ (L ⊗ R)`.
fn conjugate_term(mu: &Cochain, p: &Matrix, l: &[Vector], r: &[Vector]) -> Result<Cochain> {
    let n = mu.dim();
    let mut out = Cochain::zero(n, 2);
    for i in 0..n {
        for j in 0..n {
            let v = mu.eval(&[&l[i], &r[j]])?;
            out.set_at_basis(&[i, j], &p.mul_vec(&v)?);
        }
    }
    Ok(out)
}

/// Transforms a jet by `φ_t = id + t φ_1 + ...`: the new terms are the
/// coefficients of `φ_t ∘ μ_t ∘ (φ_t⁻¹ ⊗ φ_t⁻¹)` up to the jet order.
pub fn equivalence_apply(j: &DeformationJet, phi: &[Matrix]) -> Result<DeformationJet> {
    let n = j.base.dim();
    let id = Matrix::identity(n);
    match phi.first() {
        Some(p0) if *p0 == id => {}
        _ => return Err(AlgebraError::Precondition("the order-0 map must be the identity".into())),
    }
    for (i, p) in phi.iter().enumerate() {
        if p.rows() != n || p.cols() != n {
            return Err(AlgebraError::DimensionMismatch { context: "equivalence term", expected: n, found: p.rows() });
        }
        if p.mul(j.base.twist())? != j.base.twist().mul(p)? {
            return Err(AlgebraError::Precondition(format!("map of order {i} does not commute with the twist")));
        }
    }
    let order = j.order();
    let zero = Matrix::zeros(n, n);
    let phi_at = |i: usize| phi.get(i).unwrap_or(&zero);
    // Formal inverse: ψ_0 = id, ψ_m = −Σ_{i=1..m} φ_i ψ_{m−i}.
    let mut psi = vec![id.clone()];
    for m in 1..=order {
        let mut acc = Matrix::zeros(n, n);
        for i in 1..=m {
            acc = acc.sub(&phi_at(i).mul(&psi[m - i])?)?;
        }
        psi.push(acc);
    }
    let psi_cols: Vec<Vec<Vector>> = psi.iter().map(Matrix::columns).collect();
    let mut terms = Vec::with_capacity(order);
    for m in 1..=order {
        let mut acc = Cochain::zero(n, 2);
        for a in 0..=m {
            for b in 0..=m - a {
                let Some(mu) = j.term(b) else { continue };
                for c in 0..=m - a - b {
                    let d = m - a - b - c;
                    acc = acc.add(&conjugate_term(mu, phi_at(a), &psi_cols[c], &psi_cols[d])?)?;
                }
            }
        }
        terms.push(acc);
    }
    DeformationJet::new(j.base.clone(), terms)
}

/// An equivariant `f` with `δ¹f = μ_1`, if one exists; applying `(id, f)`
/// to the jet then removes its first-order term.
pub fn trivializing_map(a: &HomAlgebra, mu1: &Cochain) -> Result<Option<Matrix>> {
    let delta = coboundary_matrix(a, 1)?;
    let Some(coords) = delta.matrix.solve(mu1.coeffs())? else {
        return Ok(None);
    };
    let n = a.dim();
    let mut f = vec![GaussianRational::zero(); n * n];
    for (b, c) in delta.domain.basis().iter().zip(&coords) {
        for (o, x) in f.iter_mut().zip(b) {
            *o += &(c * x);
        }
    }
    // Arity-1 tensor index (input, output) is the transpose of the column convention.
    let cochain = Cochain::from_coeffs(n, 1, f)?;
    let cols: Vec<Vector> = (0..n).map(|i| cochain.at_basis(&[i]).to_vec()).collect();
    Ok(Some(Matrix::from_columns(n, &cols)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rigidity {
    /// `H² = 0`: every first-order term is a coboundary.
    RigidIndicated,
    Unknown,
}

pub fn rigidity_probe(a: &HomAlgebra) -> Result<Rigidity> {
    let table = cohomology_table(a, 2)?;
    let h2 = table.degree(2).map(|d| d.dim_cohomology).unwrap_or(0);
    Ok(if h2 == 0 { Rigidity::RigidIndicated } else { Rigidity::Unknown })
}
