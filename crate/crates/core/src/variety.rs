//! The affine variety of Hom-associative structure constants.
//!
//! Variables are `cKIJ` for the coefficient of `e_K` in `μ(e_I, e_J)` and
//! `aLI` for the coefficient of `e_L` in `α(e_I)`, i.e. row `L`, column `I`
//! of the twist matrix. Precedence is `c111 < c211 < … < cnnn < a11 < … < ann`
//! with `K` varying fastest.

use homassoc_exact::{GaussianRational, Rational};
use homassoc_poly::{buchberger, GroebnerBasis, GroebnerStats, MonomialOrder, MultiPoly, PolyRing};

use crate::algebra::HomAlgebra;
use crate::error::{AlgebraError, Result};

/// Which families of equations to include in [`homass_ideal`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdealFlags {
    pub hom_assoc: bool,
    pub multiplicativity: bool,
    /// `e1` is a unit: `C^k_{i1} = C^k_{1i} = a_{ki}`.
    pub unitality: bool,
}

impl IdealFlags {
    pub const HOM_ASSOC: IdealFlags = IdealFlags { hom_assoc: true, multiplicativity: false, unitality: false };
    pub const MULTIPLICATIVITY: IdealFlags = IdealFlags { hom_assoc: false, multiplicativity: true, unitality: false };
    pub const ALL: IdealFlags = IdealFlags { hom_assoc: true, multiplicativity: true, unitality: true };
}

pub fn product_var(k: usize, i: usize, j: usize) -> String {
    format!("c{k}{i}{j}")
}

pub fn twist_var(l: usize, i: usize) -> String {
    format!("a{l}{i}")
}

/// Variable names, highest precedence first (1-based indices in names).
pub fn structure_var_names(n: usize) -> Vec<String> {
    let mut names = Vec::with_capacity(n * n * (n + 1));
    for l in (1..=n).rev() {
        for i in (1..=n).rev() {
            names.push(twist_var(l, i));
        }
    }
    for i in (1..=n).rev() {
        for j in (1..=n).rev() {
            for k in (1..=n).rev() {
                names.push(product_var(k, i, j));
            }
        }
    }
    names
}

pub fn structure_ring(n: usize, order: MonomialOrder) -> PolyRing {
    PolyRing::new(structure_var_names(n), order)
}

struct Vars<'r> {
    ring: &'r PolyRing,
}

impl Vars<'_> {
    fn c(&self, k: usize, i: usize, j: usize) -> MultiPoly {
        self.ring.var(&product_var(k, i, j)).expect("structure variable")
    }

    fn a(&self, l: usize, i: usize) -> MultiPoly {
        self.ring.var(&twist_var(l, i)).expect("structure variable")
    }
}

/// Generators in the degrevlex structure ring; see [`homass_ideal_in`].
pub fn homass_ideal(n: usize, flags: IdealFlags) -> Vec<MultiPoly> {
    homass_ideal_in(&structure_ring(n, MonomialOrder::DegRevLex), n, flags)
}

/// Generators in the given ring, which must contain the structure variables:
///
/// - Hom-associativity, one per `(i, j, k, s)`:
///   `Σ_{l,m} a_{li} C^m_{jk} C^s_{lm} − a_{mk} C^l_{ij} C^s_{lm}`;
/// - multiplicativity, one per `(i, j, s)`:
///   `Σ_p a_{sp} C^p_{ij} − Σ_{p,q} a_{pi} a_{qj} C^s_{pq}`;
/// - unitality with unit `e1`: `C^k_{i1} − a_{ki}` and `C^k_{1i} − a_{ki}`.
///
/// Zero generators are kept so that the count is predictable.
pub fn homass_ideal_in(ring: &PolyRing, n: usize, flags: IdealFlags) -> Vec<MultiPoly> {
    let v = Vars { ring };
    let r = 1..=n;
    let mut gens = Vec::new();
    if flags.hom_assoc {
        for i in r.clone() {
            for j in r.clone() {
                for k in r.clone() {
                    for s in r.clone() {
                        let mut g = ring.zero();
                        for l in r.clone() {
                            for m in r.clone() {
                                g = g.add(&v.a(l, i).mul(&v.c(m, j, k)).mul(&v.c(s, l, m)));
                                g = g.sub(&v.a(m, k).mul(&v.c(l, i, j)).mul(&v.c(s, l, m)));
                            }
                        }
                        gens.push(g);
                    }
                }
            }
        }
    }
    if flags.multiplicativity {
        for i in r.clone() {
            for j in r.clone() {
                for s in r.clone() {
                    let mut g = ring.zero();
                    for p in r.clone() {
                        g = g.add(&v.a(s, p).mul(&v.c(p, i, j)));
                        for q in r.clone() {
                            g = g.sub(&v.a(p, i).mul(&v.a(q, j)).mul(&v.c(s, p, q)));
                        }
                    }
                    gens.push(g);
                }
            }
        }
    }
    if flags.unitality {
        for i in r.clone() {
            for k in r.clone() {
                gens.push(v.c(k, i, 1).sub(&v.a(k, i)));
                gens.push(v.c(k, 1, i).sub(&v.a(k, i)));
            }
        }
    }
    gens
}

/// Whether `p` reduces to zero modulo the basis.
pub fn ideal_membership(p: &MultiPoly, g: &GroebnerBasis) -> bool {
    g.contains(p)
}

/// Values of the ring variables at the structure constants of `a`.
pub fn structure_point(a: &HomAlgebra, ring: &PolyRing) -> Result<Vec<GaussianRational>> {
    let n = a.dim();
    ring.names()
        .iter()
        .map(|name| {
            let digits: Vec<usize> = name[1..].chars().map(|c| c.to_digit(10).unwrap_or(0) as usize).collect();
            match (name.as_bytes()[0], digits.as_slice()) {
                (b'c', [k, i, j]) if [k, i, j].iter().all(|&&x| (1..=n).contains(&x)) => {
                    Ok(a.structure_constant(i - 1, j - 1, k - 1).clone())
                }
                (b'a', [l, i]) if [l, i].iter().all(|&&x| (1..=n).contains(&x)) => Ok(a.twist()[(l - 1, i - 1)].clone()),
                _ => Err(AlgebraError::Precondition(format!("variable {name} is not a structure constant of a {n}-dimensional algebra"))),
            }
        })
        .collect()
}

/// Evaluates a rational polynomial at a Gaussian-rational point.
pub fn eval_gaussian(p: &MultiPoly, point: &[GaussianRational]) -> GaussianRational {
    let mut acc = GaussianRational::zero();
    for (m, c) in p.terms() {
        let mut t = GaussianRational::real(c.clone());
        for (x, &e) in point.iter().zip(m.exponents()) {
            if e > 0 {
                t = &t * &x.pow(u32::from(e));
            }
        }
        acc += &t;
    }
    acc
}

/// Indices and values of the generators that do not vanish at `a`.
pub fn variety_residuals(a: &HomAlgebra, flags: IdealFlags) -> Result<Vec<(usize, GaussianRational)>> {
    let ring = structure_ring(a.dim(), MonomialOrder::DegRevLex);
    let point = structure_point(a, &ring)?;
    Ok(homass_ideal_in(&ring, a.dim(), flags)
        .iter()
        .enumerate()
        .map(|(k, g)| (k, eval_gaussian(g, &point)))
        .filter(|(_, v)| !v.is_zero())
        .collect())
}

/// The published Groebner basis of the two-dimensional Hom-associativity
/// variety, transcribed in the variable names of [`structure_ring`].
pub const PUBLISHED_HOM_ASSOC_BASIS_N2: [&str; 16] = [
    "a21*c111*c112 - a21*c111*c121 - a11*c211*c112 + a11*c211*c121",
    "a21*c111*c212 - a21*c111*c221 - a11*c211*c212 + a11*c211*c221",
    "a12*c111^2 + a11*c111*c112 - a22*c111*c112 + a11*c112*c212 - a12*c211*c121 + a21*c112*c121 - a22*c211*c122 + a21*c212*c122",
    "a12*c211^2 + a12*c211*c112 - a11*c111*c121 + a22*c111*c121 - a21*c112*c121 - a11*c121*c221 + a22*c211*c122 - a21*c221*c122",
    "-a11*c111*c112 - a21*c112^2 + a11*c111*c121 - a11*c212*c121 + a21*c121^2 + a11*c112*c221 - a21*c212*c122 + a21*c221*c122",
    "a12*c111*c112 + a12*c112*c212 - a12*c111*c121 - a12*c121*c221 + a22*c212*c122 - a22*c221*c122",
    "-a22*c112*c121 + a12*c112*c222 + a22*c121*c122 - a12*c121*c222",
    "a22*c212*c122 - a12*c212*c222 - a22*c212*c222 + a22*c221*c222",
    "a12*c111*c211 + a11*c211*c112 - a22*c111*c212 + a11*c212^2 - a12*c211*c221 + a21*c112*c221 - a22*c211*c222 + a21*c212*c222",
    "a12*c111*c211 + a12*c211*c212 - a11*c211*c121 - a21*c212*c121 + a22*c111*c221 - a11*c221^2 + a22*c211*c222 - a21*c221*c222",
    "-a11*c211*c112 - a21*c112*c212 + a11*c211*c121 + a21*c121*c221 - a21*c212*c222 + a21*c221*c222",
    "a12*c211*c112 + a12*c212^2 - a12*c211*c121 - a22*c212*c121 + a22*c112*c221 - a12*c221^2 + a22*c212*c222 - a22*c221*c222",
    "a12*c111*c121 + a22*c121^2 + a12*c112*c221 - a11*c111*c122 - a21*c112*c122 + a22*c221*c122 - a11*c121*c222 - a21*c122*c222",
    "-a12*c111*c112 - a22*c112^2 - a12*c212*c121 + a11*c111*c122 - a22*c212*c122 + a21*c121*c122 + a11*c112*c222 + a21*c122*c222",
    "a12*c211*c121 + a12*c212*c221 + a22*c121*c221 - a11*c211*c122 - a21*c212*c122 - a11*c221*c222 + a22*c221*c222 - a21*c222^2",
    "-a12*c211*c112 - a22*c112*c212 - a12*c212*c221 + a11*c211*c122 + a21*c221*c122 + a11*c212*c222 - a22*c212*c222 + a21*c222^2",
];

/// The published generators of the two-dimensional multiplicativity variety;
/// `None` marks a generator whose printed form is not legible.
pub const PUBLISHED_MULTIPLICATIVITY_BASIS_N2: [Option<&str>; 8] = [
    Some("a11*c111 - a11^2*c111 + a12*c211 - a11*a21*c112 - a11*a21*c121 - a21^2*c122"),
    Some("a11*a12*c111 + a11*c112 - a11*a22*c112 + a12*c212 - a12*a21*c121 - a21*a22*c122"),
    None,
    Some("a12^2*c111 - a12*a22*c112 - a12*a22*c121 + a11*c122 - a22^2*c122 + a12*c222"),
    Some("a21*c111 - a11^2*c211 + a22*c211 - a11*a21*c212 - a11*a21*c221 - a21^2*c222"),
    Some("a11*a12*c211 + a21*c112 + a22*c212 - a11*a22*c212 - a12*a21*c221 - a21*a22*c222"),
    Some("a11*a12*c211 - a12*a21*c212 + a21*c121 + a22*c221 - a11*a22*c221 - a21*a22*c222"),
    Some("a12^2*c211 - a12*a22*c212 - a12*a22*c221 + a21*c122 + a22*c222 - a22^2*c222"),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NonIsoVerdict {
    /// The isomorphism equations generate the unit ideal, so no isomorphism
    /// exists over any extension field.
    ProvenNonIsomorphic { stats: GroebnerStats },
    Inconclusive { reason: String, stats: Option<GroebnerStats> },
}

impl NonIsoVerdict {
    pub fn is_proven(&self) -> bool {
        matches!(self, NonIsoVerdict::ProvenNonIsomorphic { .. })
    }
}

fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    if n == 0 {
        return vec![(Vec::new(), false)];
    }
    let mut out = Vec::new();
    for (p, odd) in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            // Inserting at `pos` adds `n - 1 - pos` inversions.
            out.push((q, odd ^ ((n - 1 - pos) % 2 == 1)));
        }
    }
    out
}

/// Tries to prove that no invertible `φ` satisfies `φ∘μ1 = μ2∘(φ⊗φ)` and
/// `φ∘α1 = α2∘φ`, by computing a Groebner basis of these equations together
/// with `det(φ)·t − 1`. Only algebras with real structure constants are
/// supported; others give `Inconclusive`.
pub fn noniso_certificate(a1: &HomAlgebra, a2: &HomAlgebra, budget: u64) -> Result<NonIsoVerdict> {
    let n = a1.dim();
    if a2.dim() != n {
        return Err(AlgebraError::DimensionMismatch { context: "non-isomorphism", expected: n, found: a2.dim() });
    }
    if !a1.is_real() || !a2.is_real() {
        return Ok(NonIsoVerdict::Inconclusive {
            reason: "structure constants outside the rationals are not supported by the polynomial engine".into(),
            stats: None,
        });
    }
    let mut names: Vec<String> = Vec::with_capacity(n * n + 1);
    for q in 0..n {
        for i in 0..n {
            names.push(format!("x{}{}", q + 1, i + 1));
        }
    }
    names.push("t".into());
    let ring = PolyRing::new(names, MonomialOrder::DegRevLex);
    let x = |q: usize, i: usize| MultiPoly::variable(ring.nvars(), ring.order(), q * n + i);
    let t = MultiPoly::variable(ring.nvars(), ring.order(), n * n);
    let re = |g: &GaussianRational| g.re.clone();
    let mut system = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for q in 0..n {
                let mut f = ring.zero();
                for k in 0..n {
                    let c = re(a1.structure_constant(i, j, k));
                    if !c.is_zero() {
                        f = f.add(&x(q, k).scale(&c));
                    }
                    for p in 0..n {
                        let d = re(a2.structure_constant(p, k, q));
                        if !d.is_zero() {
                            f = f.sub(&x(p, i).mul(&x(k, j)).scale(&d));
                        }
                    }
                }
                system.push(f);
            }
        }
    }
    for i in 0..n {
        for q in 0..n {
            let mut f = ring.zero();
            for k in 0..n {
                let l = re(&a1.twist()[(k, i)]);
                if !l.is_zero() {
                    f = f.add(&x(q, k).scale(&l));
                }
                let r = re(&a2.twist()[(q, k)]);
                if !r.is_zero() {
                    f = f.sub(&x(k, i).scale(&r));
                }
            }
            system.push(f);
        }
    }
    let mut det = ring.zero();
    for (perm, odd) in permutations(n) {
        let mut term = ring.constant(if odd { -Rational::one() } else { Rational::one() });
        for (col, &row) in perm.iter().enumerate() {
            term = term.mul(&x(row, col));
        }
        det = det.add(&term);
    }
    system.push(det.mul(&t).sub(&ring.constant(Rational::one())));
    system.retain(|f| !f.is_zero());
    match buchberger(&system, budget) {
        Ok(gb) if gb.is_unit_ideal() => Ok(NonIsoVerdict::ProvenNonIsomorphic { stats: gb.stats().clone() }),
        Ok(gb) => Ok(NonIsoVerdict::Inconclusive {
            reason: format!("the isomorphism equations have a nontrivial Groebner basis ({} elements)", gb.polys().len()),
            stats: Some(gb.stats().clone()),
        }),
        Err(homassoc_poly::PolyError::BudgetExceeded { steps }) => Ok(NonIsoVerdict::Inconclusive {
            reason: format!("budget exceeded after {steps} reduction steps"),
            stats: Some(GroebnerStats { reduction_steps: steps, ..GroebnerStats::default() }),
        }),
        Err(e) => Err(e.into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_signs() {
        let perms = permutations(3);
        assert_eq!(perms.len(), 6);
        assert_eq!(perms.iter().filter(|(_, odd)| *odd).count(), 3);
        let identity = perms.iter().find(|(p, _)| p == &vec![0, 1, 2]).unwrap();
        assert!(!identity.1);
    }

    #[test]
    fn one_dimensional_ideals() {
        let ring = structure_ring(1, MonomialOrder::DegRevLex);
        let h = homass_ideal(1, IdealFlags::HOM_ASSOC);
        assert_eq!(h.len(), 1);
        assert!(h[0].is_zero());
        let m = homass_ideal(1, IdealFlags::MULTIPLICATIVITY);
        assert_eq!(m, vec![ring.parse("a11*c111 - a11^2*c111").unwrap()]);
    }

    #[test]
    fn variable_precedence() {
        let names = structure_var_names(2);
        assert_eq!(names.last().map(String::as_str), Some("c111"));
        assert_eq!(names[names.len() - 2], "c211");
        assert_eq!(names[0], "a22");
    }
}
