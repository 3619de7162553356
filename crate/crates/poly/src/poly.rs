use std::cmp::Ordering;

use homassoc_exact::Rational;

use crate::monomial::{Monomial, MonomialOrder};

/// Sparse polynomial over Q with terms kept in strictly decreasing order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiPoly {
    nvars: usize,
    order: MonomialOrder,
    terms: Vec<(Monomial, Rational)>,
}

impl MultiPoly {
    pub fn zero(nvars: usize, order: MonomialOrder) -> Self {
        MultiPoly { nvars, order, terms: Vec::new() }
    }

    pub fn constant(nvars: usize, order: MonomialOrder, c: Rational) -> Self {
        Self::from_terms(nvars, order, vec![(Monomial::one(nvars), c)])
    }

    pub fn variable(nvars: usize, order: MonomialOrder, k: usize) -> Self {
        Self::from_terms(nvars, order, vec![(Monomial::variable(nvars, k), Rational::one())])
    }

    /// Collects like terms and drops zero coefficients.
    pub fn from_terms(nvars: usize, order: MonomialOrder, mut raw: Vec<(Monomial, Rational)>) -> Self {
        raw.sort_by(|a, b| order.compare(&b.0, &a.0));
        let mut terms: Vec<(Monomial, Rational)> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            assert_eq!(m.nvars(), nvars, "monomial arity differs from ring");
            match terms.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += &c,
                _ => terms.push((m, c)),
            }
        }
        terms.retain(|(_, c)| !c.is_zero());
        MultiPoly { nvars, order, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let d = self.total_degree();
        self.terms.iter().all(|(m, _)| m.degree() == d)
    }

    /// Same polynomial re-sorted under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Self {
        Self::from_terms(self.nvars, order, self.terms.clone())
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::zero(self.nvars, self.order);
        }
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect();
        MultiPoly { nvars: self.nvars, order: self.order, terms }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            Some(c) if !c.is_one() => self.scale(&c.recip().expect("nonzero")),
            _ => self.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn add(&self, other: &MultiPoly) -> Self {
        self.combine(other, &Rational::one(), &Monomial::one(self.nvars))
    }

    pub fn sub(&self, other: &MultiPoly) -> Self {
        self.combine(other, &-Rational::one(), &Monomial::one(self.nvars))
    }

    /// `self + k * m * other`, by merging two sorted term lists.
    pub fn combine(&self, other: &MultiPoly, k: &Rational, m: &Monomial) -> Self {
        assert_eq!(self.nvars, other.nvars, "ring mismatch");
        let order = self.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().map(|(bm, bc)| (bm.mul(m), bc * k)).peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some((am, _)), Some((bm, _))) => order.compare(am, bm),
            };
            match ord {
                Ordering::Greater => out.push(a.next().expect("peeked").clone()),
                Ordering::Less => out.push(b.next().expect("peeked")),
                Ordering::Equal => {
                    let (am, ac) = a.next().expect("peeked");
                    let (_, bc) = b.next().expect("peeked");
                    let c = ac + &bc;
                    if !c.is_zero() {
                        out.push((am.clone(), c));
                    }
                }
            }
        }
        MultiPoly { nvars: self.nvars, order, terms: out }
    }

    pub fn mul(&self, other: &MultiPoly) -> Self {
        let mut acc = Self::zero(self.nvars, self.order);
        for (m, c) in &other.terms {
            acc = acc.combine(self, c, m);
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(self.nvars, self.order, Rational::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Evaluates at a point given as one rational per variable.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars, "point arity differs from ring");
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t *= &x.pow(e as u32);
                }
            }
            acc += &t;
        }
        acc
    }

    pub(crate) fn drop_leading(&mut self) -> (Monomial, Rational) {
        self.terms.remove(0)
    }

    pub(crate) fn push_smallest(&mut self, term: (Monomial, Rational)) {
        self.terms.push(term);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(k: usize) -> MultiPoly {
        MultiPoly::variable(2, MonomialOrder::DegRevLex, k)
    }

    #[test]
    fn difference_of_squares() {
        let lhs = x(0).add(&x(1)).mul(&x(0).sub(&x(1)));
        let rhs = x(0).pow(2).sub(&x(1).pow(2));
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.len(), 2);
    }

    #[test]
    fn eval_at_point() {
        let p = x(0).pow(2).add(&x(1).scale(&Rational::from_integer(3)));
        let v = p.eval(&[Rational::from_integer(2), Rational::new(1, 3).unwrap()]);
        assert_eq!(v, Rational::from_integer(5));
    }
}
