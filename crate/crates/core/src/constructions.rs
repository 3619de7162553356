use homassoc_exact::{is_zero_vector, unit_vector, Matrix, Subspace, Vector};

use crate::algebra::{Cochain, HomAlgebra};
use crate::error::{AlgebraError, Result};
use crate::verify::check_morphism;

fn product_from<F>(n: usize, mut f: F) -> Result<Cochain>
where
    F: FnMut(usize, usize) -> Result<Vector>,
{
    let mut p = Cochain::zero(n, 2);
    for i in 0..n {
        for j in 0..n {
            p.set_at_basis(&[i, j], &f(i, j)?);
        }
    }
    Ok(p)
}

/// `(A, β∘μ, β∘α)` for a morphism `β: A → A`.
pub fn yau_twist(a: &HomAlgebra, beta: &Matrix) -> Result<HomAlgebra> {
    let report = check_morphism(beta, a, a)?;
    if !report.holds {
        return Err(AlgebraError::Precondition(format!(
            "twisting map is not a morphism of {} ({} violated relations)",
            a.label,
            report.witnesses.len()
        )));
    }
    let product = a.product().compose_left(beta)?;
    let twist = beta.mul(a.twist())?;
    HomAlgebra::new(format!("{}_tw", a.label), product, twist, a.unit())
}

/// The compatible associative algebra `(A, α⁻¹∘μ)` with identity twist.
pub fn untwist(a: &HomAlgebra) -> Result<HomAlgebra> {
    let inv = a.twist().inverse().ok_or(AlgebraError::NotInvertible("twist"))?;
    let product = a.product().compose_left(&inv)?;
    HomAlgebra::new(format!("{}_untw", a.label), product, Matrix::identity(a.dim()), a.unit())
}

/// Transport of structure along `φ`: `(φ∘μ∘(φ⁻¹⊗φ⁻¹), φαφ⁻¹)`.
///
/// The unit is carried along when `φ` maps it to a basis vector.
pub fn transport(a: &HomAlgebra, phi: &Matrix) -> Result<HomAlgebra> {
    let n = a.dim();
    if !phi.is_square() || phi.rows() != n {
        return Err(AlgebraError::DimensionMismatch { context: "transport", expected: n, found: phi.rows() });
    }
    let inv = phi.inverse().ok_or(AlgebraError::NotInvertible("transport map"))?;
    let pre = inv.columns();
    let product = product_from(n, |i, j| Ok(phi.mul_vec(&a.mul(&pre[i], &pre[j])?)?))?;
    let twist = phi.mul(a.twist())?.mul(&inv)?;
    let unit = a.unit().and_then(|u| {
        let image = phi.column(u);
        (0..n).find(|&v| image == unit_vector(n, v))
    });
    HomAlgebra::new(a.label.clone(), product, twist, unit)
}

/// Group action `f·μ(x,y) = f⁻¹μ(f(x), f(y))`, i.e. `transport(A, f⁻¹)`.
pub fn gl_action(f: &Matrix, a: &HomAlgebra) -> Result<HomAlgebra> {
    let inv = f.inverse().ok_or(AlgebraError::NotInvertible("group element"))?;
    transport(a, &inv)
}

/// Block direct sum `A ⊕ B`. A unit survives only when one summand is
/// zero-dimensional, since the sum of two units is not a basis vector.
pub fn direct_sum(a: &HomAlgebra, b: &HomAlgebra) -> HomAlgebra {
    let (na, nb) = (a.dim(), b.dim());
    let n = na + nb;
    let mut product = Cochain::zero(n, 2);
    let mut twist = Matrix::zeros(n, n);
    for (src, off) in [(a, 0), (b, na)] {
        let m = src.dim();
        for i in 0..m {
            for j in 0..m {
                let mut v = vec![homassoc_exact::GaussianRational::zero(); n];
                v[off..off + m].clone_from_slice(src.mul_basis(i, j));
                product.set_at_basis(&[off + i, off + j], &v);
            }
            for r in 0..m {
                twist[(off + r, off + i)] = src.twist()[(r, i)].clone();
            }
        }
    }
    let unit = match (a.unit(), b.unit()) {
        (Some(u), None) if nb == 0 => Some(u),
        (None, Some(u)) if na == 0 => Some(u),
        _ => None,
    };
    let label = match (na, nb) {
        (_, 0) => a.label.clone(),
        (0, _) => b.label.clone(),
        _ => format!("{}_plus_{}", a.label, b.label),
    };
    HomAlgebra::new(label, product, twist, unit).expect("block shapes agree")
}

/// Whether the graph `{(x, φx)}` is a subalgebra of `A ⊕ B` closed under
/// the block product and twist.
pub fn graph_is_subalgebra(phi: &Matrix, a: &HomAlgebra, b: &HomAlgebra) -> Result<bool> {
    let (na, nb) = (a.dim(), b.dim());
    if phi.rows() != nb || phi.cols() != na {
        return Err(AlgebraError::DimensionMismatch { context: "graph map", expected: nb, found: phi.rows() });
    }
    let sum = direct_sum(a, b);
    let gens: Vec<Vector> = (0..na)
        .map(|i| {
            let mut v = unit_vector(na, i);
            v.extend(phi.column(i));
            v
        })
        .collect();
    let graph = Subspace::span(na + nb, &gens)?;
    for x in &gens {
        if !graph.contains(&sum.apply_twist(x)?)? {
            return Ok(false);
        }
        for y in &gens {
            if !graph.contains(&sum.mul(x, y)?)? {
                return Ok(false);
            }
        }
    }
    if let (Some(u1), Some(u2)) = (a.unit(), b.unit()) {
        if phi.column(u1) != unit_vector(nb, u2) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `f⁻¹∘μ∘(f⊗f) = μ` and `f∘α = α∘f`.
pub fn stabilizer_member(f: &Matrix, a: &HomAlgebra) -> Result<bool> {
    let n = a.dim();
    if !f.is_square() || f.rows() != n {
        return Err(AlgebraError::DimensionMismatch { context: "stabilizer", expected: n, found: f.rows() });
    }
    let inv = f.inverse().ok_or(AlgebraError::NotInvertible("stabilizer candidate"))?;
    let cols = f.columns();
    for i in 0..n {
        for j in 0..n {
            let v = inv.mul_vec(&a.mul(&cols[i], &cols[j])?)?;
            if v != a.mul_basis(i, j) {
                return Ok(false);
            }
        }
    }
    Ok(f.mul(a.twist())? == a.twist().mul(f)?)
}

/// Whether the product tensor vanishes identically.
pub fn is_zero_product(a: &HomAlgebra) -> bool {
    is_zero_vector(a.product().coeffs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use homassoc_exact::GaussianRational;

    fn g(n: i64) -> GaussianRational {
        GaussianRational::from_integer(n)
    }

    #[test]
    fn direct_sum_with_empty_is_identity() {
        let mut a = HomAlgebra::zero("x", 1);
        a.set_product(0, 0, &[g(1)]).unwrap();
        assert_eq!(direct_sum(&a, &HomAlgebra::zero("e", 0)), a);
    }

    #[test]
    fn untwist_rejects_singular() {
        assert_eq!(untwist(&HomAlgebra::zero("z", 2)), Err(AlgebraError::NotInvertible("twist")));
    }
}
