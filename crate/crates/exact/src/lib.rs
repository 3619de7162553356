//! Exact arithmetic over the rationals and the Gaussian rationals Q(i):
//! scalars, dense matrices with echelon-form algorithms, the characteristic
//! polynomial, and canonical subspaces.

mod error;
mod gaussian;
mod matrix;
mod rational;
mod subspace;

pub use error::ExactError;
pub use gaussian::GaussianRational;
pub use matrix::{Matrix, Vector};
pub use rational::Rational;
pub use subspace::Subspace;

/// Standard basis vector `e_k` of length `n`.
pub fn unit_vector(n: usize, k: usize) -> Vector {
    let mut v = vec![GaussianRational::zero(); n];
    v[k] = GaussianRational::one();
    v
}

/// `a + b` on vectors of equal length.
pub fn vec_add(a: &[GaussianRational], b: &[GaussianRational]) -> Vector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// `a - b` on vectors of equal length.
pub fn vec_sub(a: &[GaussianRational], b: &[GaussianRational]) -> Vector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(k: &GaussianRational, a: &[GaussianRational]) -> Vector {
    a.iter().map(|x| k * x).collect()
}

pub fn is_zero_vector(a: &[GaussianRational]) -> bool {
    a.iter().all(GaussianRational::is_zero)
}
