use homassoc_exact::{GaussianRational, Matrix, Vector};

use crate::error::{AlgebraError, Result};

/// Multilinear map `A^arity -> A` on an `dim`-dimensional space, stored as a
/// dense tensor with index order `(inputs..., output)`:
/// `φ(e_{i1}, ..., e_{im}) = Σ_k f[i1, ..., im, k] e_k`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Cochain {
    dim: usize,
    arity: usize,
    coeffs: Vec<GaussianRational>,
}

impl Cochain {
    pub fn zero(dim: usize, arity: usize) -> Self {
        Cochain { dim, arity, coeffs: vec![GaussianRational::zero(); dim.pow(arity as u32 + 1)] }
    }

    pub fn from_coeffs(dim: usize, arity: usize, coeffs: Vector) -> Result<Self> {
        let expected = dim.pow(arity as u32 + 1);
        if coeffs.len() != expected {
            return Err(AlgebraError::DimensionMismatch { context: "cochain", expected, found: coeffs.len() });
        }
        Ok(Cochain { dim, arity, coeffs })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Flat coefficient vector, the coordinates used by the cohomology module.
    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vector {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(GaussianRational::is_zero)
    }

    fn offset(&self, inputs: &[usize]) -> usize {
        debug_assert_eq!(inputs.len(), self.arity);
        inputs.iter().fold(0, |acc, &i| acc * self.dim + i) * self.dim
    }

    /// Value on a tuple of basis vectors.
    pub fn at_basis(&self, inputs: &[usize]) -> &[GaussianRational] {
        let o = self.offset(inputs);
        &self.coeffs[o..o + self.dim]
    }

    pub fn set_at_basis(&mut self, inputs: &[usize], value: &[GaussianRational]) {
        let o = self.offset(inputs);
        self.coeffs[o..o + self.dim].clone_from_slice(value);
    }

    pub fn get(&self, inputs: &[usize], out: usize) -> &GaussianRational {
        &self.coeffs[self.offset(inputs) + out]
    }

    pub fn set(&mut self, inputs: &[usize], out: usize, value: GaussianRational) {
        let o = self.offset(inputs);
        self.coeffs[o + out] = value;
    }

    /// Multilinear evaluation at arbitrary vectors, skipping zero coordinates.
    pub fn eval(&self, args: &[&[GaussianRational]]) -> Result<Vector> {
        if args.len() != self.arity {
            return Err(AlgebraError::DimensionMismatch { context: "cochain arity", expected: self.arity, found: args.len() });
        }
        if let Some(a) = args.iter().find(|a| a.len() != self.dim) {
            return Err(AlgebraError::DimensionMismatch { context: "cochain argument", expected: self.dim, found: a.len() });
        }
        let supports: Vec<Vec<(usize, &GaussianRational)>> = args
            .iter()
            .map(|a| a.iter().enumerate().filter(|(_, x)| !x.is_zero()).collect())
            .collect();
        let mut out = vec![GaussianRational::zero(); self.dim];
        let mut idx = vec![0usize; self.arity];
        self.accumulate(&supports, 0, &GaussianRational::one(), &mut idx, &mut out);
        Ok(out)
    }

    fn accumulate(
        &self,
        supports: &[Vec<(usize, &GaussianRational)>],
        depth: usize,
        weight: &GaussianRational,
        idx: &mut Vec<usize>,
        out: &mut Vector,
    ) {
        if depth == self.arity {
            for (o, v) in out.iter_mut().zip(self.at_basis(idx)) {
                if !v.is_zero() {
                    *o += &(weight * v);
                }
            }
            return;
        }
        for &(i, x) in &supports[depth] {
            idx[depth] = i;
            self.accumulate(supports, depth + 1, &(weight * x), idx, out);
        }
    }

    /// `m ∘ φ`, applying `m` to every output vector.
    pub fn compose_left(&self, m: &Matrix) -> Result<Cochain> {
        if m.cols() != self.dim || m.rows() != self.dim {
            return Err(AlgebraError::DimensionMismatch { context: "compose_left", expected: self.dim, found: m.cols() });
        }
        let mut out = Cochain::zero(self.dim, self.arity);
        for o in (0..self.coeffs.len()).step_by(self.dim.max(1)) {
            let v = m.mul_vec(&self.coeffs[o..o + self.dim])?;
            out.coeffs[o..o + self.dim].clone_from_slice(&v);
        }
        Ok(out)
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        self.same_shape(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Cochain { dim: self.dim, arity: self.arity, coeffs })
    }

    pub fn sub(&self, other: &Cochain) -> Result<Cochain> {
        self.same_shape(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Cochain { dim: self.dim, arity: self.arity, coeffs })
    }

    pub fn scale(&self, k: &GaussianRational) -> Cochain {
        Cochain { dim: self.dim, arity: self.arity, coeffs: self.coeffs.iter().map(|x| k * x).collect() }
    }

    fn same_shape(&self, other: &Cochain) -> Result<()> {
        if self.dim != other.dim || self.arity != other.arity {
            return Err(AlgebraError::DimensionMismatch {
                context: "cochain shape",
                expected: self.coeffs.len(),
                found: other.coeffs.len(),
            });
        }
        Ok(())
    }

    /// All input tuples in lexicographic order.
    pub fn input_tuples(&self) -> Vec<Vec<usize>> {
        tuples(self.dim, self.arity)
    }
}

/// Lexicographically ordered tuples in `{0..n}^len`.
pub fn tuples(n: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |i| {
                    let mut u = t.clone();
                    u.push(i);
                    u
                })
            })
            .collect();
    }
    out
}

/// Finite-dimensional algebra with a bilinear product and a linear twist.
///
/// The product is the arity-2 cochain of structure constants
/// `μ(e_i, e_j) = Σ_k C^k_{ij} e_k`. The twist matrix uses the column
/// convention: column `i` holds the coordinates of `α(e_i)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HomAlgebra {
    pub label: String,
    product: Cochain,
    twist: Matrix,
    unit: Option<usize>,
}

impl HomAlgebra {
    pub fn new(label: impl Into<String>, product: Cochain, twist: Matrix, unit: Option<usize>) -> Result<Self> {
        let n = product.dim();
        if product.arity() != 2 {
            return Err(AlgebraError::UnsupportedArity(product.arity()));
        }
        if twist.rows() != n || twist.cols() != n {
            return Err(AlgebraError::DimensionMismatch { context: "twist matrix", expected: n, found: twist.rows() });
        }
        if let Some(u) = unit {
            if u >= n {
                return Err(AlgebraError::DimensionMismatch { context: "unit index", expected: n, found: u });
            }
        }
        Ok(HomAlgebra { label: label.into(), product, twist, unit })
    }

    /// Zero product and zero twist.
    pub fn zero(label: impl Into<String>, dim: usize) -> Self {
        HomAlgebra { label: label.into(), product: Cochain::zero(dim, 2), twist: Matrix::zeros(dim, dim), unit: None }
    }

    pub fn dim(&self) -> usize {
        self.product.dim()
    }

    pub fn product(&self) -> &Cochain {
        &self.product
    }

    pub fn twist(&self) -> &Matrix {
        &self.twist
    }

    pub fn unit(&self) -> Option<usize> {
        self.unit
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn with_unit(mut self, unit: Option<usize>) -> Result<Self> {
        if let Some(u) = unit {
            if u >= self.dim() {
                return Err(AlgebraError::DimensionMismatch { context: "unit index", expected: self.dim(), found: u });
            }
        }
        self.unit = unit;
        Ok(self)
    }

    /// `C^k_{ij}`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &GaussianRational {
        self.product.get(&[i, j], k)
    }

    /// `μ(e_i, e_j)`.
    pub fn mul_basis(&self, i: usize, j: usize) -> &[GaussianRational] {
        self.product.at_basis(&[i, j])
    }

    pub fn set_product(&mut self, i: usize, j: usize, value: &[GaussianRational]) -> Result<()> {
        self.check_len(value.len())?;
        self.product.set_at_basis(&[i, j], value);
        Ok(())
    }

    pub fn set_twist_image(&mut self, i: usize, value: &[GaussianRational]) -> Result<()> {
        self.check_len(value.len())?;
        for (r, x) in value.iter().enumerate() {
            self.twist[(r, i)] = x.clone();
        }
        Ok(())
    }

    pub fn mul(&self, x: &[GaussianRational], y: &[GaussianRational]) -> Result<Vector> {
        self.product.eval(&[x, y])
    }

    pub fn apply_twist(&self, x: &[GaussianRational]) -> Result<Vector> {
        self.check_len(x.len())?;
        Ok(self.twist.mul_vec(x)?)
    }

    /// `α^k` as a matrix.
    pub fn twist_power(&self, k: u32) -> Matrix {
        self.twist.pow(k).expect("twist is square")
    }

    /// Matrix of `y ↦ μ(x, y)`.
    pub fn left_multiplication(&self, x: &[GaussianRational]) -> Result<Matrix> {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.mul(x, &homassoc_exact::unit_vector(n, j))).collect::<Result<_>>()?;
        Ok(Matrix::from_columns(n, &cols)?)
    }

    /// Matrix of `y ↦ μ(y, x)`.
    pub fn right_multiplication(&self, x: &[GaussianRational]) -> Result<Matrix> {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.mul(&homassoc_exact::unit_vector(n, j), x)).collect::<Result<_>>()?;
        Ok(Matrix::from_columns(n, &cols)?)
    }

    /// Equality of product, twist and unit, ignoring labels.
    pub fn same_structure(&self, other: &HomAlgebra) -> bool {
        self.product == other.product && self.twist == other.twist && self.unit == other.unit
    }

    /// Whether every structure constant and twist entry is real.
    pub fn is_real(&self) -> bool {
        self.product.coeffs().iter().all(GaussianRational::is_real)
            && self.twist.row_vectors().iter().flatten().all(GaussianRational::is_real)
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.dim() {
            return Err(AlgebraError::DimensionMismatch { context: "vector length", expected: self.dim(), found: len });
        }
        Ok(())
    }
}

/// Row-major coordinates of an `n × n` operator in the `n²`-dimensional
/// operator space.
pub fn operator_coords(m: &Matrix) -> Vector {
    m.row_vectors().iter().flatten().cloned().collect()
}

/// Inverse of [`operator_coords`].
pub fn operator_from_coords(n: usize, coords: &[GaussianRational]) -> Matrix {
    let rows = coords.chunks(n.max(1)).map(|r| r.to_vec()).collect::<Vec<_>>();
    if n == 0 {
        return Matrix::zeros(0, 0);
    }
    Matrix::from_rows(rows).expect("square operator coordinates")
}
