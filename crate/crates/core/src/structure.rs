use homassoc_exact::{unit_vector, vec_add, vec_scale, vec_sub, GaussianRational, Matrix, Rational, Subspace, Vector};
use homassoc_poly::{buchberger, MonomialOrder, MultiPoly, PolyRing};

use crate::algebra::{operator_coords, operator_from_coords, Cochain, HomAlgebra};
use crate::constructions::is_zero_product;
use crate::error::{AlgebraError, Result};
use crate::verify::{check_associative, Witness};

fn check_ambient(s: &Subspace, a: &HomAlgebra) -> Result<()> {
    if s.ambient() != a.dim() {
        return Err(AlgebraError::DimensionMismatch { context: "subspace ambient", expected: a.dim(), found: s.ambient() });
    }
    Ok(())
}

/// One-step images of `v`: `α(v)`, `μ(v, e_j)` and `μ(e_j, v)`.
fn expansions(a: &HomAlgebra, v: &[GaussianRational]) -> Result<Vec<Vector>> {
    let n = a.dim();
    let mut out = vec![a.apply_twist(v)?];
    for j in 0..n {
        let e = unit_vector(n, j);
        out.push(a.mul(v, &e)?);
        out.push(a.mul(&e, v)?);
    }
    Ok(out)
}

/// Whether `S` is α-invariant and absorbs products with `A` on both sides.
pub fn is_ideal(s: &Subspace, a: &HomAlgebra) -> Result<bool> {
    check_ambient(s, a)?;
    for v in s.basis() {
        for w in expansions(a, v)? {
            if !s.contains(&w)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Smallest two-sided ideal containing `generators`.
pub fn ideal_closure(generators: &[Vector], a: &HomAlgebra) -> Result<Subspace> {
    let n = a.dim();
    let mut s = Subspace::span(n, generators)?;
    let mut frontier: Vec<Vector> = s.basis().to_vec();
    while !frontier.is_empty() {
        let mut grown = s.clone();
        for v in &frontier {
            let images = expansions(a, v)?;
            grown = grown.sum(&Subspace::span(n, &images)?)?;
        }
        if grown.dim() == s.dim() {
            break;
        }
        frontier = grown.basis().to_vec();
        s = grown;
    }
    Ok(s)
}

/// `Ker α`, which is a two-sided ideal whenever `A` is multiplicative.
pub fn kernel_alpha_ideal(a: &HomAlgebra) -> Result<Subspace> {
    let k = a.twist().nullspace();
    if !is_ideal(&k, a)? {
        return Err(AlgebraError::Precondition(format!(
            "kernel of the twist of {} is not an ideal; the algebra is not multiplicative",
            a.label
        )));
    }
    Ok(k)
}

/// `{x : μ(x,y) = μ(y,x) and μ(α(x),y) = μ(y,α(x)) for all y}`.
pub fn center(a: &HomAlgebra) -> Subspace {
    let n = a.dim();
    let columns: Vec<Vector> = (0..n)
        .map(|i| {
            let x = unit_vector(n, i);
            let ax = a.twist().column(i);
            let mut col = Vec::with_capacity(2 * n * n);
            for j in 0..n {
                let y = unit_vector(n, j);
                col.extend(vec_sub(&a.mul(&x, &y).expect("shape"), &a.mul(&y, &x).expect("shape")));
                col.extend(vec_sub(&a.mul(&ax, &y).expect("shape"), &a.mul(&y, &ax).expect("shape")));
            }
            col
        })
        .collect();
    Matrix::from_columns(2 * n * n, &columns).expect("uniform columns").nullspace()
}

/// Operator subalgebra of `End(A)` generated by the identity, all left and
/// right multiplications by basis vectors, and `α`.
pub fn multiplication_algebra(a: &HomAlgebra) -> Subspace {
    let n = a.dim();
    let mut gens = vec![a.twist().clone()];
    for i in 0..n {
        let e = unit_vector(n, i);
        gens.push(a.left_multiplication(&e).expect("shape"));
        gens.push(a.right_multiplication(&e).expect("shape"));
    }
    gens.retain(|g| !g.is_zero());
    let mut space = Subspace::span(n * n, &[operator_coords(&Matrix::identity(n))]).expect("shape");
    loop {
        let mut products: Vec<Vector> = space.basis().to_vec();
        for b in space.basis() {
            let m = operator_from_coords(n, b);
            for g in &gens {
                products.push(operator_coords(&g.mul(&m).expect("square")));
            }
        }
        let next = Subspace::span(n * n, &products).expect("shape");
        if next.dim() == space.dim() {
            return space;
        }
        space = next;
    }
}

pub fn multiplication_algebra_dim(a: &HomAlgebra) -> usize {
    multiplication_algebra(a).dim()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SimplicityKind {
    /// The multiplication algebra is all of `End(A)`, so no proper ideal
    /// exists over any field extension.
    CertifiedSimple,
    ProperIdealFound(Subspace),
    /// `α = 0` or `μ = 0` and no proper ideal was found; such algebras are
    /// excluded from simplicity.
    Trivial,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicityVerdict {
    pub kind: SimplicityKind,
    pub multiplication_algebra_dim: usize,
}

/// Probe vectors for spinning: basis vectors, then `e_i + e_j` for `i < j`,
/// then `e_i + i·e_j` for `i ≠ j`.
pub fn probe_vectors(n: usize) -> Vec<Vector> {
    let mut out: Vec<Vector> = (0..n).map(|i| unit_vector(n, i)).collect();
    for i in 0..n {
        for j in i + 1..n {
            out.push(vec_add(&unit_vector(n, i), &unit_vector(n, j)));
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i != j {
                out.push(vec_add(&unit_vector(n, i), &vec_scale(&GaussianRational::i(), &unit_vector(n, j))));
            }
        }
    }
    out
}

fn spin(a: &HomAlgebra) -> Result<Option<Subspace>> {
    for v in probe_vectors(a.dim()) {
        let s = ideal_closure(&[v], a)?;
        if !s.is_zero() && !s.is_full() {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

/// Decides simplicity where possible. A proper kernel of `α` is reported
/// first, then triviality, then the Burnside criterion, then spinning.
pub fn simplicity_certificate(a: &HomAlgebra) -> Result<SimplicityVerdict> {
    let dim = multiplication_algebra_dim(a);
    let verdict = |kind| Ok(SimplicityVerdict { kind, multiplication_algebra_dim: dim });
    let n = a.dim();
    let kernel = a.twist().nullspace();
    if !kernel.is_zero() && !kernel.is_full() && is_ideal(&kernel, a)? {
        return verdict(SimplicityKind::ProperIdealFound(kernel));
    }
    if a.twist().is_zero() || is_zero_product(a) {
        return match spin(a)? {
            Some(s) => verdict(SimplicityKind::ProperIdealFound(s)),
            None => verdict(SimplicityKind::Trivial),
        };
    }
    if dim == n * n {
        return verdict(SimplicityKind::CertifiedSimple);
    }
    match spin(a)? {
        Some(s) => verdict(SimplicityKind::ProperIdealFound(s)),
        None => verdict(SimplicityKind::Inconclusive),
    }
}

/// Why an algebra is not of associative type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NotAssociativeType {
    /// `α` is invertible and the unique candidate `α⁻¹∘μ` fails associativity.
    CandidateNotAssociative(Witness),
    /// `μ(e_i, e_j)` lies outside the image of `α`.
    ProductOutsideImage { pair: (usize, usize) },
    /// The associativity constraints on all candidates generate the unit ideal.
    NoCandidateOverAnyExtension,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AssociativeType {
    /// A compatible associative product `μ'` with `α∘μ' = μ`.
    Yes(Cochain),
    No(NotAssociativeType),
    Inconclusive(String),
}

const POINT_SEARCH_LIMIT: usize = 9;

/// Decides whether `μ = α∘μ'` for some associative `μ'`.
pub fn associative_type_check(a: &HomAlgebra, budget: u64) -> Result<AssociativeType> {
    let n = a.dim();
    let alpha = a.twist();
    if let Some(inv) = alpha.inverse() {
        let cand = HomAlgebra::new("candidate", a.product().compose_left(&inv)?, Matrix::identity(n), None)?;
        let report = check_associative(&cand);
        return Ok(match report.witnesses.into_iter().next() {
            None => AssociativeType::Yes(cand.product().clone()),
            Some(w) => AssociativeType::No(NotAssociativeType::CandidateNotAssociative(w)),
        });
    }
    let mut particular = Cochain::zero(n, 2);
    for i in 0..n {
        for j in 0..n {
            match alpha.solve(a.mul_basis(i, j))? {
                Some(x) => particular.set_at_basis(&[i, j], &x),
                None => return Ok(AssociativeType::No(NotAssociativeType::ProductOutsideImage { pair: (i, j) })),
            }
        }
    }
    let cand = HomAlgebra::new("candidate", particular.clone(), Matrix::identity(n), None)?;
    if check_associative(&cand).holds {
        return Ok(AssociativeType::Yes(particular));
    }
    let kernel = alpha.nullspace();
    let real = a.is_real() && kernel.basis().iter().flatten().all(GaussianRational::is_real);
    if !real {
        return Ok(AssociativeType::Inconclusive("non-real structure constants are outside the polynomial engine".into()));
    }
    let d = kernel.dim();
    let mut names = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for r in 0..d {
                names.push(format!("t{}_{}_{}", i + 1, j + 1, r + 1));
            }
        }
    }
    let ring = PolyRing::new(names, MonomialOrder::DegRevLex);
    let var = |i: usize, j: usize, r: usize| (i * n + j) * d + r;
    let q = |x: &GaussianRational| x.re.clone();
    // Linear forms for the coordinates of μ'(e_i, e_j).
    let mut lin: Vec<Vec<MultiPoly>> = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let p = particular.at_basis(&[i, j]);
            lin.push(
                (0..n)
                    .map(|s| {
                        let mut f = ring.constant(q(&p[s]));
                        for (r, k) in kernel.basis().iter().enumerate() {
                            if !k[s].is_zero() {
                                let v = MultiPoly::variable(ring.nvars(), ring.order(), var(i, j, r));
                                f = f.add(&v.scale(&q(&k[s])));
                            }
                        }
                        f
                    })
                    .collect(),
            );
        }
    }
    let at = |i: usize, j: usize, s: usize| &lin[i * n + j][s];
    let mut system = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for out in 0..n {
                    let mut f = ring.zero();
                    for s in 0..n {
                        f = f.add(&at(i, j, s).mul(at(s, k, out)));
                        f = f.sub(&at(j, k, s).mul(at(i, s, out)));
                    }
                    if !f.is_zero() {
                        system.push(f);
                    }
                }
            }
        }
    }
    let gb = buchberger(&system, budget)?;
    if gb.is_unit_ideal() {
        return Ok(AssociativeType::No(NotAssociativeType::NoCandidateOverAnyExtension));
    }
    let m = ring.nvars();
    if m <= POINT_SEARCH_LIMIT {
        let choices = [Rational::zero(), Rational::one(), -Rational::one()];
        let total = 3usize.pow(m as u32);
        for code in 0..total {
            let mut c = code;
            let point: Vec<Rational> = (0..m)
                .map(|_| {
                    let v = choices[c % 3].clone();
                    c /= 3;
                    v
                })
                .collect();
            if system.iter().all(|f| f.eval(&point).is_zero()) {
                let mut prod = particular.clone();
                for i in 0..n {
                    for j in 0..n {
                        for s in 0..n {
                            let value = at(i, j, s).eval(&point);
                            prod.set(&[i, j], s, GaussianRational::real(value));
                        }
                    }
                }
                return Ok(AssociativeType::Yes(prod));
            }
        }
    }
    Ok(AssociativeType::Inconclusive(format!(
        "associativity variety is nonempty ({} basis elements) but no small rational point was found",
        gb.polys().len()
    )))
}
