use std::collections::HashMap;

use homassoc_exact::Rational;

use crate::error::PolyError;
use crate::monomial::MonomialOrder;
use crate::poly::MultiPoly;

/// Named variables for parsing and printing polynomials. Variable 0 has the
/// highest precedence in every monomial order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    names: Vec<String>,
    index: HashMap<String, usize>,
    order: MonomialOrder,
}

impl PolyRing {
    pub fn new(names: Vec<String>, order: MonomialOrder) -> Self {
        let index = names.iter().enumerate().map(|(k, n)| (n.clone(), k)).collect();
        PolyRing { names, index, order }
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn var(&self, name: &str) -> Result<MultiPoly, PolyError> {
        let k = self.var_index(name).ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        Ok(MultiPoly::variable(self.nvars(), self.order, k))
    }

    pub fn zero(&self) -> MultiPoly {
        MultiPoly::zero(self.nvars(), self.order)
    }

    pub fn constant(&self, c: Rational) -> MultiPoly {
        MultiPoly::constant(self.nvars(), self.order, c)
    }

    /// Parses expressions such as `3*c112*a21 - a11^2*c222` or `(x+1)^2/3`.
    pub fn parse(&self, text: &str) -> Result<MultiPoly, PolyError> {
        let mut p = Parser { ring: self, src: text.as_bytes(), pos: 0 };
        let poly = p.sum()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(poly)
    }

    /// Prints a polynomial in the syntax accepted by [`PolyRing::parse`].
    pub fn format(&self, p: &MultiPoly) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in p.terms().iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            out.push_str(match (k, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            });
            let mut factors = Vec::new();
            if !mag.is_one() || m.is_one() {
                factors.push(mag.to_string());
            }
            for (v, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.names[v].clone()),
                    _ => factors.push(format!("{}^{}", self.names[v], e)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

struct Parser<'a> {
    ring: &'a PolyRing,
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> PolyError {
        PolyError::Parse { position: self.pos, message: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn sum(&mut self) -> Result<MultiPoly, PolyError> {
        let mut acc = self.ring.zero();
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.product()?;
            acc = if sign < 0 { acc.sub(&t) } else { acc.add(&t) };
            match self.peek() {
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn product(&mut self) -> Result<MultiPoly, PolyError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.power()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.integer()?;
                    if d.is_zero() {
                        return Err(self.error("division by zero"));
                    }
                    acc = acc.scale(&d.recip().expect("nonzero"));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<MultiPoly, PolyError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.integer()?;
            if !e.is_integer() || e.is_negative() || e > Rational::from_integer(u16::MAX as i64) {
                return Err(self.error("exponent must be a small nonnegative integer"));
            }
            let e: u32 = e.to_string().parse().map_err(|_| self.error("bad exponent"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly, PolyError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.sum()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => Ok(self.ring.constant(self.integer()?)),
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                self.ring.var(name).map_err(|_| PolyError::UnknownVariable(name.to_string()))
            }
            _ => Err(self.error("expected a number, variable or `(`")),
        }
    }

    fn integer(&mut self) -> Result<Rational, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        digits.parse().map_err(|_| self.error("bad integer"))
    }
}
