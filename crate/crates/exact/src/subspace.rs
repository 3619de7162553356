use crate::error::ExactError;
use crate::gaussian::GaussianRational;
use crate::matrix::{Matrix, Vector};

/// Linear subspace of Q(i)^n, stored by its canonical reduced row echelon
/// basis. Two subspaces are equal exactly when their stored bases are equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(ambient).row_vectors().to_vec() }
    }

    pub fn span(ambient: usize, vectors: &[Vector]) -> Result<Self, ExactError> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(ExactError::DimensionMismatch { op: "span", expected: ambient, found: v.len() });
        }
        if vectors.is_empty() {
            return Ok(Self::zero(ambient));
        }
        let m = Matrix::from_rows(vectors.to_vec())?;
        let (r, pivots) = m.rref();
        let basis = r.row_vectors()[..pivots.len()].to_vec();
        Ok(Subspace { ambient, basis })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    /// Canonical echelon basis.
    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis
            .iter()
            .map(|row| row.iter().position(|x| !x.is_zero()).expect("echelon rows are nonzero"))
            .collect()
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` lies outside.
    pub fn coordinates(&self, v: &[GaussianRational]) -> Result<Option<Vector>, ExactError> {
        if v.len() != self.ambient {
            return Err(ExactError::DimensionMismatch { op: "coordinates", expected: self.ambient, found: v.len() });
        }
        let mut rest = v.to_vec();
        let mut coords = Vec::with_capacity(self.dim());
        for (row, p) in self.basis.iter().zip(self.pivots()) {
            let c = rest[p].clone();
            if !c.is_zero() {
                for (x, y) in rest.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *x -= &(&c * y);
                    }
                }
            }
            coords.push(c);
        }
        Ok(rest.iter().all(GaussianRational::is_zero).then_some(coords))
    }

    pub fn contains(&self, v: &[GaussianRational]) -> Result<bool, ExactError> {
        Ok(self.coordinates(v)?.is_some())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool, ExactError> {
        self.check_ambient(other)?;
        for v in &self.basis {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, ExactError> {
        self.check_ambient(other)?;
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient, &all)
    }

    /// Annihilator under the pairing `<x, y> = sum x_k y_k`.
    pub fn annihilator(&self) -> Subspace {
        if self.basis.is_empty() {
            return Subspace::full(self.ambient);
        }
        Matrix::from_rows(self.basis.clone()).expect("rectangular basis").nullspace()
    }

    /// Intersection computed as the annihilator of the sum of annihilators.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, ExactError> {
        self.check_ambient(other)?;
        Ok(self.annihilator().sum(&other.annihilator())?.annihilator())
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), ExactError> {
        if self.ambient != other.ambient {
            return Err(ExactError::DimensionMismatch { op: "subspace", expected: self.ambient, found: other.ambient });
        }
        Ok(())
    }
}
