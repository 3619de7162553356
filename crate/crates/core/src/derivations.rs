use homassoc_exact::{unit_vector, vec_add, vec_sub, Matrix, Subspace, Vector};

use crate::algebra::{operator_coords, operator_from_coords, HomAlgebra};
use crate::error::{AlgebraError, Result};

/// The space of α^k-derivations, as a subspace of row-major operator
/// coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationSpace {
    pub k: u32,
    pub space: Subspace,
}

impl DerivationSpace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Basis operators in the column convention of the twist matrix.
    pub fn operators(&self) -> Vec<Matrix> {
        let n = (self.space.ambient() as f64).sqrt() as usize;
        self.space.basis().iter().map(|c| operator_from_coords(n, c)).collect()
    }

    pub fn contains(&self, d: &Matrix) -> Result<bool> {
        Ok(self.space.contains(&operator_coords(d))?)
    }
}

/// Residual vector of the defining equations of an α^k-derivation: the
/// commutator `Dα − αD` followed by the Leibniz defects on all basis pairs.
fn derivation_defect(a: &HomAlgebra, d: &Matrix, alpha_k: &Matrix) -> Result<Vector> {
    let n = a.dim();
    let mut out = operator_coords(&d.mul(a.twist())?.sub(&a.twist().mul(d)?)?);
    let d_cols = d.columns();
    let ak_cols = alpha_k.columns();
    for i in 0..n {
        for j in 0..n {
            let lhs = d.mul_vec(a.mul_basis(i, j))?;
            let rhs = vec_add(&a.mul(&d_cols[i], &ak_cols[j])?, &a.mul(&ak_cols[i], &d_cols[j])?);
            out.extend(vec_sub(&lhs, &rhs));
        }
    }
    Ok(out)
}

/// Solves `Dα = αD` and `D(μ(x,y)) = μ(D x, α^k y) + μ(α^k x, D y)`.
pub fn derivation_space(a: &HomAlgebra, k: u32) -> DerivationSpace {
    let n = a.dim();
    let alpha_k = a.twist_power(k);
    let columns: Vec<Vector> = (0..n * n)
        .map(|c| {
            let e = operator_from_coords(n, &unit_vector(n * n, c));
            derivation_defect(a, &e, &alpha_k).expect("shapes agree")
        })
        .collect();
    let rows = n * n + n * n * n;
    let space = Matrix::from_columns(rows, &columns).expect("uniform columns").nullspace();
    DerivationSpace { k, space }
}

/// Whether `D` is an α^k-derivation, checked directly on the defining equations.
pub fn is_derivation(a: &HomAlgebra, d: &Matrix, k: u32) -> Result<bool> {
    let n = a.dim();
    if d.rows() != n || d.cols() != n {
        return Err(AlgebraError::DimensionMismatch { context: "derivation", expected: n, found: d.rows() });
    }
    Ok(derivation_defect(a, d, &a.twist_power(k))?.iter().all(|x| x.is_zero()))
}

/// The operator `g ↦ μ(α^k(g), f)` for an α-fixed `f`.
pub fn inner_derivation(a: &HomAlgebra, f: &[homassoc_exact::GaussianRational], k: u32) -> Result<Matrix> {
    let n = a.dim();
    if a.apply_twist(f)? != f {
        return Err(AlgebraError::Precondition("inner derivations need an α-fixed element".into()));
    }
    let ak = a.twist_power(k);
    let cols: Vec<Vector> = (0..n).map(|i| a.mul(&ak.column(i), f)).collect::<Result<_>>()?;
    Ok(Matrix::from_columns(n, &cols)?)
}

/// The operator `g ↦ μ(α^k(g), f) − μ(f, α^k(g))` for an α-fixed `f`.
/// Unlike [`inner_derivation`], this is an α^{k+1}-derivation of every
/// multiplicative Hom-associative algebra.
pub fn commutator_inner_derivation(a: &HomAlgebra, f: &[homassoc_exact::GaussianRational], k: u32) -> Result<Matrix> {
    let right = inner_derivation(a, f, k)?;
    let ak = a.twist_power(k);
    let cols: Vec<Vector> =
        (0..a.dim()).map(|i| Ok(vec_sub(&right.column(i), &a.mul(f, &ak.column(i))?))).collect::<Result<_>>()?;
    Ok(Matrix::from_columns(a.dim(), &cols)?)
}

/// Elements fixed by the twist: `Ker(α − id)`.
pub fn twist_fixed_space(a: &HomAlgebra) -> Subspace {
    a.twist().sub(&Matrix::identity(a.dim())).expect("square").nullspace()
}

/// Span of all inner α^{k+1}-derivations `g ↦ μ(α^k(g), f)`.
pub fn inner_derivation_space(a: &HomAlgebra, k: u32) -> Subspace {
    let n = a.dim();
    let ops: Vec<Vector> = twist_fixed_space(a)
        .basis()
        .iter()
        .map(|f| operator_coords(&inner_derivation(a, f, k).expect("fixed vector")))
        .collect();
    Subspace::span(n * n, &ops).expect("shape")
}

/// `D∘D' − D'∘D`.
pub fn commutator(d: &Matrix, e: &Matrix) -> Result<Matrix> {
    if !d.is_square() || d.rows() != e.rows() || d.cols() != e.cols() {
        return Err(AlgebraError::DimensionMismatch { context: "commutator", expected: d.rows(), found: e.rows() });
    }
    Ok(d.mul(e)?.sub(&e.mul(d)?)?)
}
