//! Line-oriented text format for algebras, linear maps and deformation jets.
//!
//! ```text
//! algebra A2_4
//! dim 2
//! basis e1 e2
//! mul e1 e1 = e1
//! mul e1 e2 = e2
//! mul e2 e1 = e2
//! alpha e1 = e1
//! alpha e2 = e2
//! ```
//!
//! Maps use the header `map NAME` and statements `image X = ...`; jets use
//! `jet NAME`, a line `order N` and statements `mul K X Y = ...` for the
//! order-`K` term. Scalars are `3`, `-1/2`, `2i`, `i`, `(1/2+3/4i)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use homassoc::algebra::{Cochain, HomAlgebra};
use homassoc::deformation::DeformationJet;
use homassoc_exact::{GaussianRational, Matrix, Rational, Vector};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub expected: Vec<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(" | "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraDocument {
    pub label: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: Option<String>,
    pub products: BTreeMap<(usize, usize), Vector>,
    pub twist: BTreeMap<usize, Vector>,
    /// Where each statement starts, keyed like `mul e1 e2`, `alpha e1`, `unit`.
    pub locations: BTreeMap<String, Position>,
}

impl AlgebraDocument {
    pub fn to_algebra(&self) -> HomAlgebra {
        let n = self.dim;
        let mut a = HomAlgebra::zero(self.label.clone(), n);
        for (&(i, j), v) in &self.products {
            a.set_product(i, j, v).expect("vector length checked by the parser");
        }
        for (&i, v) in &self.twist {
            a.set_twist_image(i, v).expect("vector length checked by the parser");
        }
        let unit = self.unit.as_ref().and_then(|u| self.basis.iter().position(|b| b == u));
        a.with_unit(unit).expect("unit index checked by the parser")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapDocument {
    pub label: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub images: BTreeMap<usize, Vector>,
}

impl MapDocument {
    /// Matrix whose column `i` is the image of the `i`-th basis element.
    pub fn to_matrix(&self) -> Matrix {
        let n = self.dim;
        let cols: Vec<Vector> =
            (0..n).map(|i| self.images.get(&i).cloned().unwrap_or_else(|| vec![GaussianRational::zero(); n])).collect();
        Matrix::from_columns(n, &cols).expect("columns of equal length")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JetDocument {
    pub label: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub order: usize,
    /// `(term, left, right) -> value`, with terms numbered from 1.
    pub terms: BTreeMap<(usize, usize, usize), Vector>,
}

impl JetDocument {
    /// The terms `μ_1 .. μ_order` as bilinear cochains.
    pub fn to_cochains(&self) -> Vec<Cochain> {
        let n = self.dim;
        let mut out = vec![Cochain::zero(n, 2); self.order];
        for (&(t, i, j), v) in &self.terms {
            out[t - 1].set_at_basis(&[i, j], v);
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(String),
    Sym(char),
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    col: usize,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) | Tok::Int(s) => write!(f, "`{s}`"),
            Tok::Sym(c) => write!(f, "`{c}`"),
        }
    }
}

struct Line {
    number: usize,
    tokens: Vec<Token>,
    end: usize,
}

fn err(line: usize, column: usize, message: impl Into<String>, expected: &[&str]) -> ParseError {
    ParseError { line, column, message: message.into(), expected: expected.iter().map(|s| s.to_string()).collect() }
}

fn tokenize(text: &str) -> Result<Vec<Line>, ParseError> {
    let mut lines = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let number = k + 1;
        let content = raw.split('#').next().unwrap_or("");
        let chars: Vec<char> = content.chars().collect();
        let mut tokens = Vec::new();
        let mut p = 0;
        while p < chars.len() {
            let c = chars[p];
            let col = p + 1;
            if c.is_whitespace() {
                p += 1;
            } else if c.is_ascii_alphabetic() || c == '_' {
                let start = p;
                while p < chars.len() && (chars[p].is_ascii_alphanumeric() || chars[p] == '_') {
                    p += 1;
                }
                tokens.push(Token { tok: Tok::Ident(chars[start..p].iter().collect()), col });
            } else if c.is_ascii_digit() {
                let start = p;
                while p < chars.len() && chars[p].is_ascii_digit() {
                    p += 1;
                }
                tokens.push(Token { tok: Tok::Int(chars[start..p].iter().collect()), col });
            } else if "=+-*/()".contains(c) {
                tokens.push(Token { tok: Tok::Sym(c), col });
                p += 1;
            } else {
                return Err(err(number, col, format!("unexpected character `{c}`"), &[]));
            }
        }
        if !tokens.is_empty() {
            lines.push(Line { number, tokens, end: chars.len() + 1 });
        }
    }
    Ok(lines)
}

struct Cursor<'a> {
    line: &'a Line,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(line: &'a Line) -> Self {
        Cursor { line, pos: 0 }
    }

    fn peek(&self) -> Option<&'a Tok> {
        self.line.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn peek_at(&self, k: usize) -> Option<&'a Tok> {
        self.line.tokens.get(self.pos + k).map(|t| &t.tok)
    }

    fn column(&self) -> usize {
        self.line.tokens.get(self.pos).map_or(self.line.end, |t| t.col)
    }

    fn at_end(&self) -> bool {
        self.pos >= self.line.tokens.len()
    }

    fn fail(&self, message: impl Into<String>, expected: &[&str]) -> ParseError {
        err(self.line.number, self.column(), message, expected)
    }

    fn unexpected(&self, expected: &[&str]) -> ParseError {
        match self.peek() {
            Some(t) => self.fail(format!("unexpected {t}"), expected),
            None => self.fail("unexpected end of line", expected),
        }
    }

    fn ident(&mut self, expected: &str) -> Result<&'a str, ParseError> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(s)
            }
            _ => Err(self.unexpected(&[expected])),
        }
    }

    fn keyword(&mut self, word: &str) -> Result<(), ParseError> {
        match self.peek() {
            Some(Tok::Ident(s)) if s == word => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.unexpected(&[word])),
        }
    }

    fn int(&mut self, expected: &str) -> Result<usize, ParseError> {
        let col = self.column();
        match self.peek() {
            Some(Tok::Int(s)) => {
                self.pos += 1;
                s.parse().map_err(|_| err(self.line.number, col, format!("integer {s} is too large"), &[]))
            }
            _ => Err(self.unexpected(&[expected])),
        }
    }

    fn sym(&mut self, c: char) -> Result<(), ParseError> {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.unexpected(&[&format!("`{c}`")]))
        }
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn end(&self) -> Result<(), ParseError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.unexpected(&["end of line"]))
        }
    }
}

fn basis_index(c: &mut Cursor<'_>, basis: &[String]) -> Result<usize, ParseError> {
    let col = c.column();
    let name = c.ident("basis name")?;
    basis
        .iter()
        .position(|b| b == name)
        .ok_or_else(|| err(c.line.number, col, format!("unknown basis name {name}"), &["basis name"]))
}

/// `INT` or `INT/INT`.
fn rational(c: &mut Cursor<'_>) -> Result<Rational, ParseError> {
    let col = c.column();
    let malformed = |why: &str| err(c.line.number, col, format!("malformed scalar: {why}"), &["scalar"]);
    let num = match c.peek() {
        Some(Tok::Int(s)) => s.clone(),
        _ => return Err(c.unexpected(&["integer"])),
    };
    c.pos += 1;
    if c.eat_sym('/') {
        let den = match c.peek() {
            Some(Tok::Int(s)) => s.clone(),
            _ => return Err(malformed("missing denominator")),
        };
        c.pos += 1;
        Rational::from_str(&format!("{num}/{den}")).map_err(|_| malformed("zero denominator"))
    } else {
        Rational::from_str(&num).map_err(|_| malformed("bad integer"))
    }
}

fn is_i(t: Option<&Tok>) -> bool {
    matches!(t, Some(Tok::Ident(s)) if s == "i")
}

fn scalar(c: &mut Cursor<'_>) -> Result<GaussianRational, ParseError> {
    let col = c.column();
    match c.peek() {
        Some(Tok::Sym('(')) => {
            c.pos += 1;
            let neg = c.eat_sym('-');
            let re = rational(c)?;
            let re = if neg { -re } else { re };
            let sign = if c.eat_sym('-') {
                -Rational::one()
            } else if c.eat_sym('+') {
                Rational::one()
            } else {
                return Err(err(c.line.number, c.column(), "malformed scalar: expected the imaginary part", &["`+`", "`-`"]));
            };
            let mag = if matches!(c.peek(), Some(Tok::Int(_))) { rational(c)? } else { Rational::one() };
            if !is_i(c.peek()) {
                return Err(err(c.line.number, c.column(), "malformed scalar: missing `i`", &["`i`"]));
            }
            c.pos += 1;
            c.sym(')')?;
            Ok(GaussianRational::new(re, &sign * &mag))
        }
        Some(Tok::Int(_)) => {
            let q = rational(c)?;
            if is_i(c.peek()) {
                c.pos += 1;
                Ok(GaussianRational::new(Rational::zero(), q))
            } else {
                Ok(GaussianRational::real(q))
            }
        }
        _ if is_i(c.peek()) => {
            c.pos += 1;
            Ok(GaussianRational::i())
        }
        _ => Err(err(c.line.number, col, "malformed scalar", &["scalar", "basis name"])),
    }
}

fn term(c: &mut Cursor<'_>, basis: &[String]) -> Result<(GaussianRational, usize), ParseError> {
    let plain_basis = matches!(c.peek(), Some(Tok::Ident(s)) if s != "i")
        || (is_i(c.peek()) && c.peek_at(1) != Some(&Tok::Sym('*')));
    if plain_basis {
        return Ok((GaussianRational::one(), basis_index(c, basis)?));
    }
    let k = scalar(c)?;
    c.sym('*')?;
    Ok((k, basis_index(c, basis)?))
}

fn lincomb(c: &mut Cursor<'_>, basis: &[String]) -> Result<Vector, ParseError> {
    let n = basis.len();
    let mut v = vec![GaussianRational::zero(); n];
    if c.peek() == Some(&Tok::Int("0".into())) && c.peek_at(1).is_none() {
        c.pos += 1;
        return Ok(v);
    }
    let mut negate = c.eat_sym('-');
    if !negate {
        c.eat_sym('+');
    }
    loop {
        let (k, idx) = term(c, basis)?;
        if negate {
            v[idx] -= &k;
        } else {
            v[idx] += &k;
        }
        if c.at_end() {
            return Ok(v);
        }
        negate = if c.eat_sym('-') {
            true
        } else if c.eat_sym('+') {
            false
        } else {
            return Err(c.unexpected(&["`+`", "`-`", "end of line"]));
        };
    }
}

struct Header {
    label: String,
    dim: usize,
    basis: Vec<String>,
}

fn header<'a>(lines: &'a [Line], kinds: &[&str]) -> Result<(Header, &'a [Line]), ParseError> {
    let first = lines.first().ok_or_else(|| err(1, 1, "empty document", kinds))?;
    let mut c = Cursor::new(first);
    match c.peek() {
        Some(Tok::Ident(s)) if kinds.contains(&s.as_str()) => c.pos += 1,
        _ => return Err(c.unexpected(kinds)),
    }
    let label = c.ident("label")?.to_string();
    c.end()?;
    let dim_line = lines.get(1).ok_or_else(|| err(first.number + 1, 1, "missing dim line", &["dim"]))?;
    let mut c = Cursor::new(dim_line);
    c.keyword("dim")?;
    let dim = c.int("dimension")?;
    c.end()?;
    let basis_line = lines.get(2).ok_or_else(|| err(dim_line.number + 1, 1, "missing basis line", &["basis"]))?;
    let mut c = Cursor::new(basis_line);
    c.keyword("basis")?;
    let mut basis: Vec<String> = Vec::new();
    while !c.at_end() {
        let col = c.column();
        let name = c.ident("basis name")?;
        if name == "i" {
            return Err(err(basis_line.number, col, "`i` is reserved for the imaginary unit", &["basis name"]));
        }
        if basis.iter().any(|b| b == name) {
            return Err(err(basis_line.number, col, format!("duplicate basis name {name}"), &["basis name"]));
        }
        basis.push(name.to_string());
    }
    if basis.len() != dim {
        return Err(err(
            basis_line.number,
            1,
            format!("dim mismatch: dim {dim} declared but {} basis names given", basis.len()),
            &[],
        ));
    }
    Ok((Header { label, dim, basis }, &lines[3..]))
}

fn position(line: &Line) -> Position {
    Position { line: line.number, column: line.tokens[0].col }
}

/// Parses an algebra document.
pub fn parse(text: &str) -> Result<AlgebraDocument, ParseError> {
    let lines = tokenize(text)?;
    let (h, mut rest) = header(&lines, &["algebra"])?;
    let mut doc = AlgebraDocument {
        label: h.label,
        dim: h.dim,
        basis: h.basis,
        unit: None,
        products: BTreeMap::new(),
        twist: BTreeMap::new(),
        locations: BTreeMap::new(),
    };
    if let Some(line) = rest.first() {
        if matches!(&line.tokens[0].tok, Tok::Ident(s) if s == "unit") {
            let mut c = Cursor::new(line);
            c.pos = 1;
            let idx = basis_index(&mut c, &doc.basis)?;
            c.end()?;
            doc.unit = Some(doc.basis[idx].clone());
            doc.locations.insert("unit".into(), position(line));
            rest = &rest[1..];
        }
    }
    for line in rest {
        let mut c = Cursor::new(line);
        let start = position(line);
        match c.peek() {
            Some(Tok::Ident(s)) if s == "mul" => {
                c.pos += 1;
                let i = basis_index(&mut c, &doc.basis)?;
                let j = basis_index(&mut c, &doc.basis)?;
                c.sym('=')?;
                let v = lincomb(&mut c, &doc.basis)?;
                let key = format!("mul {} {}", doc.basis[i], doc.basis[j]);
                if doc.products.contains_key(&(i, j)) {
                    return Err(err(line.number, start.column, format!("duplicate product statement for {} {}", doc.basis[i], doc.basis[j]), &[]));
                }
                doc.products.insert((i, j), v);
                doc.locations.insert(key, start);
            }
            Some(Tok::Ident(s)) if s == "alpha" => {
                c.pos += 1;
                let i = basis_index(&mut c, &doc.basis)?;
                c.sym('=')?;
                let v = lincomb(&mut c, &doc.basis)?;
                if doc.twist.contains_key(&i) {
                    return Err(err(line.number, start.column, format!("duplicate twist statement for {}", doc.basis[i]), &[]));
                }
                doc.twist.insert(i, v);
                doc.locations.insert(format!("alpha {}", doc.basis[i]), start);
            }
            Some(Tok::Ident(s)) if s == "unit" => {
                return Err(c.fail("the unit line must directly follow the basis line", &["mul", "alpha"]));
            }
            _ => return Err(c.unexpected(&["mul", "alpha"])),
        }
    }
    Ok(doc)
}

/// Parses an algebra document straight to an algebra.
pub fn parse_algebra(text: &str) -> Result<HomAlgebra, ParseError> {
    parse(text).map(|d| d.to_algebra())
}

/// Parses a `map` document.
pub fn parse_map(text: &str) -> Result<MapDocument, ParseError> {
    let lines = tokenize(text)?;
    let (h, rest) = header(&lines, &["map"])?;
    let mut images = BTreeMap::new();
    for line in rest {
        let mut c = Cursor::new(line);
        c.keyword("image")?;
        let i = basis_index(&mut c, &h.basis)?;
        c.sym('=')?;
        let v = lincomb(&mut c, &h.basis)?;
        if images.insert(i, v).is_some() {
            return Err(err(line.number, 1, format!("duplicate image statement for {}", h.basis[i]), &[]));
        }
    }
    Ok(MapDocument { label: h.label, dim: h.dim, basis: h.basis, images })
}

/// Parses a `jet` document.
pub fn parse_jet(text: &str) -> Result<JetDocument, ParseError> {
    let lines = tokenize(text)?;
    let (h, rest) = header(&lines, &["jet"])?;
    let order_line = rest.first().ok_or_else(|| err(lines.last().map_or(1, |l| l.number + 1), 1, "missing order line", &["order"]))?;
    let mut c = Cursor::new(order_line);
    c.keyword("order")?;
    let order = c.int("order")?;
    c.end()?;
    let mut terms = BTreeMap::new();
    for line in &rest[1..] {
        let mut c = Cursor::new(line);
        c.keyword("mul")?;
        let col = c.column();
        let t = c.int("term index")?;
        if t == 0 || t > order {
            return Err(err(line.number, col, format!("term index {t} outside 1..={order}"), &[]));
        }
        let i = basis_index(&mut c, &h.basis)?;
        let j = basis_index(&mut c, &h.basis)?;
        c.sym('=')?;
        let v = lincomb(&mut c, &h.basis)?;
        if terms.insert((t, i, j), v).is_some() {
            return Err(err(line.number, 1, "duplicate product statement", &[]));
        }
    }
    Ok(JetDocument { label: h.label, dim: h.dim, basis: h.basis, order, terms })
}

/// Replaces characters that cannot appear in an identifier.
pub fn sanitize_label(label: &str) -> String {
    let mut s: String = label.chars().map(|c| if c.is_ascii_alphanumeric() || c == '_' { c } else { '_' }).collect();
    if !s.starts_with(|c: char| c.is_ascii_alphabetic() || c == '_') {
        s.insert_str(0, "A_");
    }
    s
}

pub fn default_basis(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

fn format_term(c: &GaussianRational, name: &str) -> (bool, String) {
    let (negative, mag) = if c.im.is_zero() {
        (c.re.is_negative(), GaussianRational::real(c.re.abs()))
    } else if c.re.is_zero() {
        (c.im.is_negative(), GaussianRational::new(Rational::zero(), c.im.abs()))
    } else {
        (false, c.clone())
    };
    if mag.is_one() {
        (negative, name.to_string())
    } else {
        (negative, format!("{}*{name}", mag.to_dsl_string()))
    }
}

/// Renders a vector as a linear combination, `0` when it vanishes.
pub fn format_lincomb(v: &[GaussianRational], names: &[String]) -> String {
    let mut out = String::new();
    for (c, name) in v.iter().zip(names) {
        if c.is_zero() {
            continue;
        }
        let (negative, body) = format_term(c, name);
        match (out.is_empty(), negative) {
            (true, false) => {}
            (true, true) => out.push('-'),
            (false, false) => out.push_str(" + "),
            (false, true) => out.push_str(" - "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn write_header(out: &mut String, kind: &str, label: &str, names: &[String]) {
    out.push_str(&format!("{kind} {}\ndim {}\nbasis {}\n", sanitize_label(label), names.len(), names.join(" ")));
}

/// Canonical document with basis `e1 .. en`.
pub fn serialize(a: &HomAlgebra) -> String {
    serialize_with_basis(a, &default_basis(a.dim()))
}

/// Canonical document: header, optional unit, nonzero products, nonzero
/// twist images, in index order.
pub fn serialize_with_basis(a: &HomAlgebra, names: &[String]) -> String {
    let n = a.dim();
    assert_eq!(names.len(), n, "one name per basis element");
    let mut out = String::new();
    write_header(&mut out, "algebra", &a.label, names);
    if let Some(u) = a.unit() {
        out.push_str(&format!("unit {}\n", names[u]));
    }
    for i in 0..n {
        for j in 0..n {
            let v = a.mul_basis(i, j);
            if v.iter().any(|x| !x.is_zero()) {
                out.push_str(&format!("mul {} {} = {}\n", names[i], names[j], format_lincomb(v, names)));
            }
        }
    }
    for i in 0..n {
        let v = a.twist().column(i);
        if v.iter().any(|x| !x.is_zero()) {
            out.push_str(&format!("alpha {} = {}\n", names[i], format_lincomb(&v, names)));
        }
    }
    out
}

/// Map document listing the nonzero columns of `m`.
pub fn serialize_map(label: &str, m: &Matrix, names: &[String]) -> String {
    let mut out = String::new();
    write_header(&mut out, "map", label, names);
    for (i, name) in names.iter().enumerate() {
        let v = m.column(i);
        if v.iter().any(|x| !x.is_zero()) {
            out.push_str(&format!("image {name} = {}\n", format_lincomb(&v, names)));
        }
    }
    out
}

/// Jet document for the higher terms of a deformation.
pub fn serialize_jet(label: &str, j: &DeformationJet, names: &[String]) -> String {
    let n = j.base().dim();
    let mut out = String::new();
    write_header(&mut out, "jet", label, names);
    out.push_str(&format!("order {}\n", j.order()));
    for (t, c) in j.terms().iter().enumerate() {
        for a in 0..n {
            for b in 0..n {
                let v = c.at_basis(&[a, b]);
                if v.iter().any(|x| !x.is_zero()) {
                    out.push_str(&format!("mul {} {} {} = {}\n", t + 1, names[a], names[b], format_lincomb(v, names)));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const A24: &str = "algebra A2_4\ndim 2\nbasis e1 e2\nmul e1 e1 = e1\nmul e1 e2 = e2\nmul e2 e1 = e2\nalpha e1 = e1\nalpha e2 = e2\n";

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::new(Rational::from_integer(re), Rational::from_integer(im))
    }

    #[test]
    fn parses_the_sample_document() {
        let doc = parse(A24).unwrap();
        assert_eq!(doc.dim, 2);
        assert_eq!(doc.products.len(), 3);
        assert_eq!(doc.locations["mul e2 e1"], Position { line: 6, column: 1 });
        assert_eq!(serialize(&doc.to_algebra()), A24);
    }

    #[test]
    fn scalar_forms() {
        let text = "algebra s\ndim 2\nbasis x y\nmul x x = -1/2*x + (1/2+3/4i)*y\nmul x y = i*x - 2i*y\nmul y x = -i*y\nmul y y = 0\n";
        let a = parse_algebra(text).unwrap();
        let half = Rational::new(1, 2).unwrap();
        assert_eq!(a.mul_basis(0, 0)[0], GaussianRational::real(-&half));
        assert_eq!(a.mul_basis(0, 0)[1], GaussianRational::new(half, Rational::new(3, 4).unwrap()));
        assert_eq!(a.mul_basis(0, 1), &[g(0, 1), g(0, -2)]);
        assert_eq!(a.mul_basis(1, 0), &[g(0, 0), g(0, -1)]);
        assert_eq!(parse_algebra(&serialize(&a)).unwrap(), a.with_label("s"));
    }

    #[test]
    fn complex_coefficients_are_parenthesized() {
        let names = default_basis(1);
        assert_eq!(format_lincomb(&[GaussianRational::new(Rational::new(1, 2).unwrap(), Rational::new(3, 4).unwrap())], &names), "(1/2+3/4i)*e1");
        assert_eq!(format_lincomb(&[g(0, -1)], &names), "-i*e1");
    }

    #[test]
    fn error_positions() {
        let e = parse("algebra a\ndim 2\nbasis e1 e2\nmul e1 e9 = e1\n").unwrap_err();
        assert_eq!((e.line, e.column), (4, 8));
        assert!(e.message.contains("unknown basis name e9"));
        let e = parse("algebra a\ndim 2\nbasis e1 e2\nmul e1 e1 = e1\nmul e1 e1 = e2\n").unwrap_err();
        assert_eq!(e.line, 5);
        assert!(e.message.contains("duplicate product"));
        let e = parse("algebra a\ndim 2\nbasis e1 e2\nmul e1 e1 = 3/0*e1\n").unwrap_err();
        assert!(e.message.contains("malformed scalar"));
        assert_eq!((e.line, e.column), (4, 13));
        let e = parse("algebra a\ndim 3\nbasis e1 e2\n").unwrap_err();
        assert!(e.message.contains("dim mismatch"));
        assert_eq!(e.line, 3);
    }

    #[test]
    fn zero_algebra_has_only_header() {
        let a = HomAlgebra::zero("z", 2);
        assert_eq!(serialize(&a), "algebra z\ndim 2\nbasis e1 e2\n");
        assert_eq!(parse_algebra(&serialize(&a)).unwrap(), a);
    }

    #[test]
    fn maps_and_jets() {
        let m = parse_map("map phi\ndim 2\nbasis e1 e2\nimage e1 = e2\nimage e2 = e1\n").unwrap();
        let mat = m.to_matrix();
        assert_eq!(serialize_map("phi", &mat, &m.basis), "map phi\ndim 2\nbasis e1 e2\nimage e1 = e2\nimage e2 = e1\n");
        let j = parse_jet("jet j\ndim 2\nbasis e1 e2\norder 2\nmul 1 e1 e1 = e2\nmul 2 e2 e2 = e1\n").unwrap();
        let terms = j.to_cochains();
        assert_eq!(terms.len(), 2);
        assert!(terms[0].get(&[0, 0], 1).is_one());
        assert!(parse_jet("jet j\ndim 2\nbasis e1 e2\norder 1\nmul 2 e1 e1 = e2\n").is_err());
    }
}
