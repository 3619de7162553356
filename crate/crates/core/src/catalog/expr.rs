//! Evaluator for the compact expressions used in the built-in tables, such as
//! `-i*sqrt(b2)/sqrt(b1)*E21 + E22` or `p1*e1`.

use std::collections::BTreeMap;

use homassoc_exact::{GaussianRational, Rational, Vector};

use crate::error::{AlgebraError, Result};

#[derive(Clone, Debug)]
enum Value {
    Scalar(GaussianRational),
    Vector(Vector),
}

pub(crate) struct Env<'a> {
    pub basis: &'a [&'a str],
    pub params: &'a BTreeMap<String, GaussianRational>,
}

fn bad(expr: &str, why: impl Into<String>) -> AlgebraError {
    AlgebraError::Precondition(format!("table expression `{expr}`: {}", why.into()))
}

struct Parser<'a, 'e> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
    env: &'e Env<'e>,
}

/// Evaluates an expression to a vector in the span of the basis.
pub(crate) fn eval_vector(expr: &str, env: &Env<'_>) -> Result<Vector> {
    match eval(expr, env)? {
        Value::Vector(v) => Ok(v),
        Value::Scalar(s) if s.is_zero() => Ok(vec![GaussianRational::zero(); env.basis.len()]),
        Value::Scalar(_) => Err(bad(expr, "expected a linear combination of basis elements")),
    }
}

/// Evaluates a scalar expression.
#[cfg(test)]
pub(crate) fn eval_scalar(expr: &str, env: &Env<'_>) -> Result<GaussianRational> {
    match eval(expr, env)? {
        Value::Scalar(s) => Ok(s),
        Value::Vector(_) => Err(bad(expr, "expected a scalar")),
    }
}

fn eval(expr: &str, env: &Env<'_>) -> Result<Value> {
    let mut p = Parser { src: expr, bytes: expr.as_bytes(), pos: 0, env };
    let v = p.sum()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(bad(expr, format!("unexpected input at offset {}", p.pos)));
    }
    Ok(v)
}

impl Parser<'_, '_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn err(&self, why: impl Into<String>) -> AlgebraError {
        bad(self.src, why)
    }

    fn sum(&mut self) -> Result<Value> {
        let mut acc = self.product()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.product()?;
            acc = self.combine(acc, rhs, c == b'-')?;
        }
        Ok(acc)
    }

    fn combine(&self, a: Value, b: Value, subtract: bool) -> Result<Value> {
        let sign = |x: &GaussianRational| if subtract { -x } else { x.clone() };
        match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(&x + &sign(&y))),
            (Value::Vector(x), Value::Vector(y)) => {
                Ok(Value::Vector(x.iter().zip(&y).map(|(p, q)| p + &sign(q)).collect()))
            }
            (Value::Vector(x), Value::Scalar(s)) if s.is_zero() => Ok(Value::Vector(x)),
            (Value::Scalar(s), Value::Vector(y)) if s.is_zero() => {
                Ok(Value::Vector(y.iter().map(|q| sign(q)).collect()))
            }
            _ => Err(self.err("cannot add a scalar to a vector")),
        }
    }

    fn product(&mut self) -> Result<Value> {
        let mut acc = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if c == b'*' { self.multiply(acc, rhs)? } else { self.divide(acc, rhs)? };
        }
        Ok(acc)
    }

    fn multiply(&self, a: Value, b: Value) -> Result<Value> {
        match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(&x * &y)),
            (Value::Scalar(k), Value::Vector(v)) | (Value::Vector(v), Value::Scalar(k)) => {
                Ok(Value::Vector(v.iter().map(|x| &k * x).collect()))
            }
            _ => Err(self.err("cannot multiply two vectors")),
        }
    }

    fn divide(&self, a: Value, b: Value) -> Result<Value> {
        let Value::Scalar(d) = b else {
            return Err(self.err("cannot divide by a vector"));
        };
        let inv = d.inv().ok_or_else(|| AlgebraError::InadmissibleParameter {
            name: self.src.to_string(),
            reason: "division by zero".into(),
        })?;
        self.multiply(a, Value::Scalar(inv))
    }

    fn unary(&mut self) -> Result<Value> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            let v = self.unary()?;
            return self.multiply(Value::Scalar(-GaussianRational::one()), v);
        }
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.integer()?;
            return match base {
                Value::Scalar(s) => Ok(Value::Scalar(s.pow(e as u32))),
                Value::Vector(_) => Err(self.err("cannot raise a vector to a power")),
            };
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        self.src[start..self.pos].parse().map_err(|_| self.err("expected an integer"))
    }

    fn atom(&mut self) -> Result<Value> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.sum()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Value::Scalar(GaussianRational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.bytes.len() && (self.bytes[self.pos].is_ascii_alphanumeric() || self.bytes[self.pos] == b'_') {
                    self.pos += 1;
                }
                let name = &self.src[start..self.pos];
                if name == "sqrt" {
                    if self.peek() != Some(b'(') {
                        return Err(self.err("expected `(` after sqrt"));
                    }
                    let arg = self.atom()?;
                    return self.sqrt(arg).map(Value::Scalar);
                }
                if name == "i" {
                    return Ok(Value::Scalar(GaussianRational::i()));
                }
                if let Some(k) = self.env.basis.iter().position(|b| *b == name) {
                    return Ok(Value::Vector(homassoc_exact::unit_vector(self.env.basis.len(), k)));
                }
                if let Some(v) = self.env.params.get(name) {
                    return Ok(Value::Scalar(v.clone()));
                }
                Err(self.err(format!("unknown name `{name}`")))
            }
            _ => Err(self.err(format!("unexpected input at offset {}", self.pos))),
        }
    }

    /// Principal square root of a rational: `sqrt(-r) = i·sqrt(r)`.
    fn sqrt(&self, arg: Value) -> Result<GaussianRational> {
        let Value::Scalar(s) = arg else {
            return Err(self.err("sqrt of a vector"));
        };
        if !s.is_real() {
            return Err(self.err("sqrt of a non-real value"));
        }
        let negative = s.re.is_negative();
        let r: Rational = s.re.abs();
        let root = r.sqrt_exact().ok_or_else(|| AlgebraError::InadmissibleParameter {
            name: self.src.to_string(),
            reason: format!("{r} is not the square of a rational"),
        })?;
        Ok(if negative {
            GaussianRational::new(Rational::zero(), root)
        } else {
            GaussianRational::real(root)
        })
    }
}
