//! Sparse multivariate polynomials over Q, monomial orders, and reduced
//! Groebner bases by Buchberger's algorithm.

mod error;
mod groebner;
mod monomial;
mod poly;
mod ring;

pub use error::PolyError;
pub use groebner::{buchberger, is_groebner_basis, normal_form, s_polynomial, GroebnerBasis, GroebnerStats, DEFAULT_BUDGET};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::MultiPoly;
pub use ring::PolyRing;
