use homassoc_exact::{unit_vector, GaussianRational, Matrix, Subspace, Vector};

use crate::algebra::{tuples, Cochain, HomAlgebra};
use crate::error::{AlgebraError, Result};
use crate::verify::{Recorder, VerificationReport};

/// Highest degree reported by [`cohomology_table`].
pub const MAX_DEGREE: usize = 3;

const MAX_ARITY: usize = 4;

fn check_arity(arity: usize) -> Result<()> {
    if arity == 0 || arity > MAX_ARITY {
        return Err(AlgebraError::UnsupportedArity(arity));
    }
    Ok(())
}

/// α-equivariant cochains `α∘φ = φ∘(α × ... × α)` of the given arity, as a
/// subspace of the flat tensor coordinates.
pub fn cochain_space(a: &HomAlgebra, arity: usize) -> Result<Subspace> {
    check_arity(arity)?;
    let n = a.dim();
    let size = n.pow(arity as u32 + 1);
    if a.twist().is_identity() {
        return Ok(Subspace::full(size));
    }
    let alpha = a.twist();
    let inputs = tuples(n, arity);
    // Column for the unit cochain supported at (inputs P, output p); rows are
    // indexed like tensor coordinates (inputs I, output s).
    let mut columns = Vec::with_capacity(size);
    for (pi, p_in) in inputs.iter().enumerate() {
        for p in 0..n {
            let mut col = vec![GaussianRational::zero(); size];
            for s in 0..n {
                col[pi * n + s] = alpha[(s, p)].clone();
            }
            for (ii, i_in) in inputs.iter().enumerate() {
                let mut w = GaussianRational::one();
                for (pt, it) in p_in.iter().zip(i_in) {
                    w = &w * &alpha[(*pt, *it)];
                    if w.is_zero() {
                        break;
                    }
                }
                if !w.is_zero() {
                    col[ii * n + p] -= &w;
                }
            }
            columns.push(col);
        }
    }
    Ok(Matrix::from_columns(size, &columns)?.nullspace())
}

/// Whether a cochain commutes with the twist.
pub fn is_equivariant(a: &HomAlgebra, c: &Cochain) -> Result<bool> {
    Ok(equivariance_defects(a, c)?.is_empty())
}

fn equivariance_defects(a: &HomAlgebra, c: &Cochain) -> Result<Vec<(Vec<usize>, Vector, Vector)>> {
    let n = a.dim();
    if c.dim() != n {
        return Err(AlgebraError::DimensionMismatch { context: "cochain dimension", expected: n, found: c.dim() });
    }
    let cols = a.twist().columns();
    let mut out = Vec::new();
    for t in c.input_tuples() {
        let lhs = a.apply_twist(c.at_basis(&t))?;
        let args: Vec<&[GaussianRational]> = t.iter().map(|&i| cols[i].as_slice()).collect();
        let rhs = c.eval(&args)?;
        if lhs != rhs {
            out.push((t, lhs, rhs));
        }
    }
    Ok(out)
}

/// The Hom-Hochschild coboundary
/// `δφ(x0..xm) = μ(α^{m-1}x0, φ(x1..xm))
///   + Σ_k (-1)^k φ(αx0, .., μ(x_{k-1}, x_k), .., αxm)
///   + (-1)^{m+1} μ(φ(x0..x_{m-1}), α^{m-1}xm)`.
pub fn coboundary(a: &HomAlgebra, c: &Cochain) -> Result<Cochain> {
    let m = c.arity();
    check_arity(m)?;
    let n = a.dim();
    if c.dim() != n {
        return Err(AlgebraError::DimensionMismatch { context: "cochain dimension", expected: n, found: c.dim() });
    }
    let alpha = a.twist().columns();
    let outer = a.twist_power(m as u32 - 1).columns();
    let mut out = Cochain::zero(n, m + 1);
    for x in tuples(n, m + 1) {
        let mut v = a.mul(&outer[x[0]], c.at_basis(&x[1..]))?;
        for k in 1..=m {
            let merged = a.mul_basis(x[k - 1], x[k]).to_vec();
            let mut args: Vec<&[GaussianRational]> = Vec::with_capacity(m);
            for p in 0..k - 1 {
                args.push(&alpha[x[p]]);
            }
            args.push(&merged);
            for p in k + 1..=m {
                args.push(&alpha[x[p]]);
            }
            let term = c.eval(&args)?;
            add_signed(&mut v, &term, k % 2 == 1);
        }
        let last = a.mul(c.at_basis(&x[..m]), &outer[x[m]])?;
        add_signed(&mut v, &last, (m + 1) % 2 == 1);
        out.set_at_basis(&x, &v);
    }
    Ok(out)
}

fn add_signed(acc: &mut Vector, v: &[GaussianRational], negate: bool) {
    for (o, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            if negate {
                *o -= x;
            } else {
                *o += x;
            }
        }
    }
}

/// Matrix of `δ^m` on the echelon basis of the cochain space, with the full
/// tensor space of arity `m+1` as codomain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoboundaryMatrix {
    pub degree: usize,
    pub domain: Subspace,
    pub matrix: Matrix,
}

pub fn coboundary_matrix(a: &HomAlgebra, m: usize) -> Result<CoboundaryMatrix> {
    let domain = cochain_space(a, m)?;
    coboundary_matrix_on(a, m, domain)
}

fn coboundary_matrix_on(a: &HomAlgebra, m: usize, domain: Subspace) -> Result<CoboundaryMatrix> {
    let n = a.dim();
    let columns: Vec<Vector> = domain
        .basis()
        .iter()
        .map(|b| Ok(coboundary(a, &Cochain::from_coeffs(n, m, b.clone())?)?.into_coeffs()))
        .collect::<Result<_>>()?;
    let matrix = Matrix::from_columns(n.pow(m as u32 + 2), &columns)?;
    Ok(CoboundaryMatrix { degree: m, domain, matrix })
}

/// Dimensions and bases in one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyDegree {
    pub degree: usize,
    pub dim_cochains: usize,
    pub dim_cocycles: usize,
    pub dim_coboundaries: usize,
    pub dim_cohomology: usize,
    /// Rank of `δ^degree` on the cochain space.
    pub rank_delta: usize,
    /// Rank of `δ^{degree-1}`; zero in degree 1.
    pub rank_delta_prev: usize,
    pub cocycles: Subspace,
    pub coboundaries: Subspace,
}

impl CohomologyDegree {
    pub fn cocycle_basis(&self) -> Vec<Cochain> {
        let n = (self.cocycles.ambient() as f64).powf(1.0 / (self.degree as f64 + 1.0)).round() as usize;
        self.cocycles
            .basis()
            .iter()
            .map(|v| Cochain::from_coeffs(n, self.degree, v.clone()).expect("cocycle shape"))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyTable {
    pub degrees: Vec<CohomologyDegree>,
}

impl CohomologyTable {
    pub fn degree(&self, d: usize) -> Option<&CohomologyDegree> {
        self.degrees.iter().find(|x| x.degree == d)
    }
}

/// `Z^m = Ker δ^m` and `B^m = Im δ^{m-1}` for `m = 1..=max_degree`, with
/// `B^1 = 0`.
pub fn cohomology_table(a: &HomAlgebra, max_degree: usize) -> Result<CohomologyTable> {
    if max_degree == 0 || max_degree > MAX_DEGREE {
        return Err(AlgebraError::UnsupportedArity(max_degree));
    }
    let n = a.dim();
    let mut degrees = Vec::new();
    let mut prev: Option<CoboundaryMatrix> = None;
    for m in 1..=max_degree {
        let delta = coboundary_matrix(a, m)?;
        let size = n.pow(m as u32 + 1);
        let kernel = delta.matrix.nullspace();
        let cocycle_vectors: Vec<Vector> = kernel
            .basis()
            .iter()
            .map(|coords| combine(delta.domain.basis(), coords, size))
            .collect();
        let cocycles = Subspace::span(size, &cocycle_vectors)?;
        let (coboundaries, rank_prev) = match &prev {
            None => (Subspace::zero(size), 0),
            Some(p) => {
                let image = p.matrix.column_space();
                let r = image.dim();
                (image, r)
            }
        };
        degrees.push(CohomologyDegree {
            degree: m,
            dim_cochains: delta.domain.dim(),
            dim_cocycles: cocycles.dim(),
            dim_coboundaries: coboundaries.dim(),
            dim_cohomology: cocycles.dim() - coboundaries.dim().min(cocycles.dim()),
            rank_delta: delta.domain.dim() - kernel.dim(),
            rank_delta_prev: rank_prev,
            cocycles,
            coboundaries,
        });
        prev = Some(delta);
    }
    Ok(CohomologyTable { degrees })
}

fn combine(basis: &[Vector], coords: &[GaussianRational], size: usize) -> Vector {
    let mut v = vec![GaussianRational::zero(); size];
    for (b, c) in basis.iter().zip(coords) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in v.iter_mut().zip(b) {
            if !x.is_zero() {
                *o += &(c * x);
            }
        }
    }
    v
}

/// Holds when `c` is α-equivariant and `δc = 0`.
pub fn cocycle_check(a: &HomAlgebra, c: &Cochain) -> Result<VerificationReport> {
    let mut rec = Recorder::new();
    for (t, lhs, rhs) in equivariance_defects(a, c)? {
        rec.compare("equivariance", &t, lhs, rhs);
    }
    let d = coboundary(a, c)?;
    let zero = vec![GaussianRational::zero(); a.dim()];
    for t in d.input_tuples() {
        rec.compare("coboundary", &t, d.at_basis(&t).to_vec(), zero.clone());
    }
    Ok(rec.finish("cocycle"))
}

/// Lifts a Hochschild cocycle `c'` of the compatible associative algebra
/// `(A, μ')` with `μ = α∘μ'` to the Hom-cocycle `α∘c'`.
pub fn lift_assoc_cocycle(a: &HomAlgebra, compatible: &Cochain, c: &Cochain) -> Result<Cochain> {
    let n = a.dim();
    let assoc = HomAlgebra::new("compatible", compatible.clone(), Matrix::identity(n), None)?;
    if a.product() != &compatible.compose_left(a.twist())? {
        return Err(AlgebraError::Precondition("product is not α composed with the compatible product".into()));
    }
    let hochschild = cocycle_check(&assoc, c)?;
    if let Some(w) = hochschild.witnesses.first() {
        return Err(AlgebraError::Precondition(format!(
            "not a Hochschild cocycle of the compatible algebra at {:?}",
            w.indices
        )));
    }
    if let Some((t, _, _)) = equivariance_defects(a, c)?.first() {
        return Err(AlgebraError::Precondition(format!("cochain does not commute with the twist at {t:?}")));
    }
    let lifted = c.compose_left(a.twist())?;
    debug_assert!(cocycle_check(a, &lifted)?.holds);
    Ok(lifted)
}

/// Unit cochain with a single coefficient 1.
pub fn unit_cochain(n: usize, inputs: &[usize], out: usize) -> Cochain {
    let mut c = Cochain::zero(n, inputs.len());
    c.set_at_basis(inputs, &unit_vector(n, out));
    c
}

/// Evidence for the dimensions reported in one degree: an explicit cocycle
/// basis that is checked element by element, its rank, and the rank of the
/// incoming coboundary map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankCertificate {
    pub degree: usize,
    pub dim_cochains: usize,
    pub rank_delta: usize,
    pub rank_delta_prev: usize,
    pub cocycle_basis_size: usize,
    /// Every basis element passes [`cocycle_check`].
    pub basis_are_cocycles: bool,
    pub basis_independent: bool,
    /// Every coboundary basis element passes [`cocycle_check`].
    pub coboundaries_are_cocycles: bool,
    pub dim_cocycles: usize,
    pub dim_cohomology: usize,
}

impl RankCertificate {
    /// Rank–nullity and the explicit checks agree with the reported dimensions.
    pub fn is_valid(&self) -> bool {
        self.basis_are_cocycles
            && self.basis_independent
            && self.coboundaries_are_cocycles
            && self.cocycle_basis_size == self.dim_cocycles
            && self.dim_cocycles == self.dim_cochains - self.rank_delta
            && self.dim_cohomology == self.dim_cocycles - self.rank_delta_prev
    }
}

pub fn rank_certificate(a: &HomAlgebra, d: &CohomologyDegree) -> Result<RankCertificate> {
    let n = a.dim();
    let basis = d.cocycle_basis();
    let mut basis_are_cocycles = true;
    for c in &basis {
        basis_are_cocycles &= cocycle_check(a, c)?.holds;
    }
    let size = n.pow(d.degree as u32 + 1);
    let vectors: Vec<Vector> = basis.iter().map(|c| c.coeffs().to_vec()).collect();
    let basis_independent = Subspace::span(size, &vectors)?.dim() == basis.len();
    let mut coboundaries_are_cocycles = true;
    for v in d.coboundaries.basis() {
        coboundaries_are_cocycles &= cocycle_check(a, &Cochain::from_coeffs(n, d.degree, v.clone())?)?.holds;
    }
    Ok(RankCertificate {
        degree: d.degree,
        dim_cochains: d.dim_cochains,
        rank_delta: d.rank_delta,
        rank_delta_prev: d.rank_delta_prev,
        cocycle_basis_size: basis.len(),
        basis_are_cocycles,
        basis_independent,
        coboundaries_are_cocycles,
        dim_cocycles: d.dim_cocycles,
        dim_cohomology: d.dim_cohomology,
    })
}
