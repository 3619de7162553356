use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::ExactError;
use crate::gaussian::GaussianRational;
use crate::subspace::Subspace;

pub type Vector = Vec<GaussianRational>;

/// Dense matrix over Q(i), stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<GaussianRational>>,
}

fn mismatch(op: &'static str, expected: usize, found: usize) -> ExactError {
    ExactError::DimensionMismatch { op, expected, found }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![vec![GaussianRational::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = GaussianRational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Result<Self, ExactError> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(mismatch("from_rows", cols, bad.len()));
        }
        Ok(Matrix { rows: rows.len(), cols, data: rows })
    }

    /// Builds a matrix from column vectors of equal length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Result<Self, ExactError> {
        let mut m = Self::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(mismatch("from_columns", rows, col.len()));
            }
            for (r, x) in col.iter().enumerate() {
                m.data[r][c] = x.clone();
            }
        }
        Ok(m)
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let data: Vec<Vector> = rows
            .iter()
            .map(|r| r.iter().map(|&x| GaussianRational::from_integer(x)).collect())
            .collect();
        Self::from_rows(data).expect("ragged integer matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[GaussianRational] {
        &self.data[r]
    }

    pub fn row_vectors(&self) -> &[Vector] {
        &self.data
    }

    pub fn column(&self, c: usize) -> Vector {
        self.data.iter().map(|row| row[c].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.iter().all(GaussianRational::is_zero))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c][r] = self.data[r][c].clone();
            }
        }
        t
    }

    pub fn scale(&self, k: &GaussianRational) -> Self {
        let data = self.data.iter().map(|r| r.iter().map(|x| x * k).collect()).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn add(&self, other: &Matrix) -> Result<Self, ExactError> {
        self.same_shape(other, "add")?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Self, ExactError> {
        self.same_shape(other, "sub")?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x - y).collect())
            .collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    fn same_shape(&self, other: &Matrix, op: &'static str) -> Result<(), ExactError> {
        if self.rows != other.rows {
            return Err(mismatch(op, self.rows, other.rows));
        }
        if self.cols != other.cols {
            return Err(mismatch(op, self.cols, other.cols));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Self, ExactError> {
        if self.cols != other.rows {
            return Err(mismatch("mul", self.cols, other.rows));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[r][k];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other.data[k][c];
                    if !b.is_zero() {
                        out.data[r][c] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[GaussianRational]) -> Result<Vector, ExactError> {
        if v.len() != self.cols {
            return Err(mismatch("mul_vec", self.cols, v.len()));
        }
        Ok(self
            .data
            .iter()
            .map(|row| {
                let mut acc = GaussianRational::zero();
                for (a, x) in row.iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += &(a * x);
                    }
                }
                acc
            })
            .collect())
    }

    pub fn pow(&self, k: u32) -> Result<Self, ExactError> {
        if !self.is_square() {
            return Err(mismatch("pow", self.rows, self.cols));
        }
        let mut acc = Self::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.data.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&p| !m[p][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let inv = m[r][c].inv().expect("nonzero pivot");
            let support: Vec<usize> = (c..self.cols).filter(|&k| !m[r][k].is_zero()).collect();
            for &k in &support {
                m[r][k] = &m[r][k] * &inv;
            }
            let (before, rest) = m.split_at_mut(r);
            let (pivot_row, after) = rest.split_first_mut().expect("pivot row");
            for q in before.iter_mut().chain(after.iter_mut()) {
                if q[c].is_zero() {
                    continue;
                }
                let f = q[c].clone();
                for &k in &support {
                    let d = &f * &pivot_row[k];
                    q[k] -= &d;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (Matrix { rows: self.rows, cols: self.cols, data: m }, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Right kernel `{x : M x = 0}`.
    pub fn nullspace(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut vectors = Vec::new();
        for f in (0..self.cols).filter(|&f| !is_pivot[f]) {
            let mut v = vec![GaussianRational::zero(); self.cols];
            v[f] = GaussianRational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -&r.data[row][f];
            }
            vectors.push(v);
        }
        Subspace::span(self.cols, &vectors).expect("kernel vectors have ambient length")
    }

    /// Column space as a subspace of the codomain.
    pub fn column_space(&self) -> Subspace {
        Subspace::span(self.rows, &self.columns()).expect("columns have ambient length")
    }

    /// Some solution of `M x = b`, or `None` when the system is inconsistent.
    /// Free variables are set to zero.
    pub fn solve(&self, b: &[GaussianRational]) -> Result<Option<Vector>, ExactError> {
        if b.len() != self.rows {
            return Err(mismatch("solve", self.rows, b.len()));
        }
        let mut aug = self.data.clone();
        for (row, x) in aug.iter_mut().zip(b) {
            row.push(x.clone());
        }
        let aug = Matrix { rows: self.rows, cols: self.cols + 1, data: aug };
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![GaussianRational::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r.data[row][self.cols].clone();
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(Matrix::zeros(0, 0));
        }
        let mut aug = self.data.clone();
        for (i, row) in aug.iter_mut().enumerate() {
            row.extend((0..n).map(|j| {
                if i == j {
                    GaussianRational::one()
                } else {
                    GaussianRational::zero()
                }
            }));
        }
        let (r, pivots) = Matrix { rows: n, cols: 2 * n, data: aug }.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let data = r.data.into_iter().map(|row| row[n..].to_vec()).collect();
        Some(Matrix { rows: n, cols: n, data })
    }

    /// Determinant by fraction-based Gaussian elimination.
    pub fn det(&self) -> Result<GaussianRational, ExactError> {
        if !self.is_square() {
            return Err(mismatch("det", self.rows, self.cols));
        }
        let n = self.rows;
        let mut m = self.data.clone();
        let mut det = GaussianRational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&p| !m[p][c].is_zero()) else {
                return Ok(GaussianRational::zero());
            };
            if p != c {
                m.swap(p, c);
                det = -det;
            }
            det = &det * &m[c][c];
            let inv = m[c][c].inv().expect("nonzero pivot");
            for q in c + 1..n {
                if m[q][c].is_zero() {
                    continue;
                }
                let f = &m[q][c] * &inv;
                for k in c..n {
                    let d = &f * &m[c][k];
                    m[q][k] -= &d;
                }
            }
        }
        Ok(det)
    }

    /// Characteristic polynomial `det(tI - M)` by the division-free Berkowitz
    /// algorithm. Coefficients are listed from `t^n` (always 1) down to `t^0`.
    pub fn charpoly(&self) -> Result<Vector, ExactError> {
        if !self.is_square() {
            return Err(mismatch("charpoly", self.rows, self.cols));
        }
        let a = &self.data;
        let mut poly = vec![GaussianRational::one()];
        for k in 0..self.rows {
            // First column of the Toeplitz factor: 1, -a_kk, -R S, -R A S, ...
            let mut q = vec![GaussianRational::one(), -&a[k][k]];
            let mut s: Vector = (0..k).map(|i| a[i][k].clone()).collect();
            for _ in 0..k {
                let rs: GaussianRational = (0..k).map(|j| &a[k][j] * &s[j]).sum();
                q.push(-rs);
                s = (0..k).map(|i| (0..k).map(|j| &a[i][j] * &s[j]).sum()).collect();
            }
            let mut next = vec![GaussianRational::zero(); k + 2];
            for (i, slot) in next.iter_mut().enumerate() {
                for (j, pj) in poly.iter().enumerate().take(i + 1) {
                    *slot += &(&q[i - j] * pj);
                }
            }
            poly = next;
        }
        Ok(poly)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = GaussianRational;
    fn index(&self, (r, c): (usize, usize)) -> &GaussianRational {
        &self.data[r][c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut GaussianRational {
        &mut self.data[r][c]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for row in &self.data {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: i64) -> GaussianRational {
        GaussianRational::from_integer(n)
    }

    #[test]
    fn rref_of_rank_two() {
        let m = Matrix::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let (r, p) = m.rref();
        assert_eq!(p, vec![0, 1]);
        assert_eq!(r, Matrix::from_i64(&[&[1, 0, 1], &[0, 1, 1], &[0, 0, 0]]));
    }

    #[test]
    fn berkowitz_on_two_by_two() {
        let m = Matrix::from_i64(&[&[1, 2], &[3, 4]]);
        assert_eq!(m.charpoly().unwrap(), vec![g(1), g(-5), g(-2)]);
        assert_eq!(Matrix::zeros(0, 0).charpoly().unwrap(), vec![g(1)]);
    }

    #[test]
    fn solve_inconsistent_system() {
        let m = Matrix::from_i64(&[&[1, 1], &[1, 1]]);
        assert_eq!(m.solve(&[g(1), g(2)]).unwrap(), None);
        assert_eq!(m.solve(&[g(2), g(2)]).unwrap(), Some(vec![g(2), g(0)]));
    }

    #[test]
    fn inverse_and_det() {
        let m = Matrix::from_i64(&[&[2, 1], &[1, 1]]);
        assert_eq!(m.inverse().unwrap(), Matrix::from_i64(&[&[1, -1], &[-1, 2]]));
        assert_eq!(m.det().unwrap(), g(1));
        assert!(Matrix::from_i64(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }
}
