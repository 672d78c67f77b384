//! Dense matrices over GF(q) and the Vandermonde-family helpers.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};

#[derive(Clone)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data && *self.field == *other.field
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over GF({})", self.rows, self.cols, self.field.order())?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|e| e.0.to_string()).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Reduced row-echelon form together with its pivot columns.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field: field.clone(), rows, cols, data: vec![Elem::ZERO; rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Elem::ONE);
        }
        m
    }

    pub fn from_fn(field: &Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Elem) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { field: field.clone(), rows, cols, data }
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<Elem>>) -> Result<Matrix> {
        let cols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::Dimension(format!("ragged rows: expected {cols}, got {}", row.len())));
            }
            for e in row {
                field.element(e.0)?;
                data.push(e);
            }
        }
        Ok(Matrix { field: field.clone(), rows: nrows, cols, data })
    }

    /// Builds a matrix from canonical integer encodings.
    pub fn from_u32_rows(field: &Field, rows: &[Vec<u32>]) -> Result<Matrix> {
        Matrix::from_rows(field, rows.iter().map(|r| r.iter().map(|&x| Elem(x)).collect()).collect())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Elem> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn to_nested(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).iter().map(|e| e.0).collect()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.field, self.cols, self.rows, |r, c| self.get(c, r))
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        Ok(Matrix::from_fn(f, self.rows, other.cols, |r, c| {
            f.sum((0..self.cols).map(|i| f.mul(self.get(r, i), other.get(i, c))))
        }))
    }

    /// `M v` for a column vector given as a slice.
    pub fn mul_vec(&self, v: &[Elem]) -> Result<Vec<Elem>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!("vector of length {} against {} columns", v.len(), self.cols)));
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|r| f.sum(self.row(r).iter().zip(v).map(|(&a, &b)| f.mul(a, b))))
            .collect())
    }

    /// `v M` for a row vector.
    pub fn vec_mul(&self, v: &[Elem]) -> Result<Vec<Elem>> {
        if v.len() != self.rows {
            return Err(Error::Dimension(format!("vector of length {} against {} rows", v.len(), self.rows)));
        }
        let f = &self.field;
        let mut out = vec![Elem::ZERO; self.cols];
        for (r, &coef) in v.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            for (o, &x) in out.iter_mut().zip(self.row(r)) {
                *o = f.add(*o, f.mul(coef, x));
            }
        }
        Ok(out)
    }

    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows {
            return Err(Error::Dimension(format!("hstack of {} and {} rows", self.rows, other.rows)));
        }
        Ok(Matrix::from_fn(&self.field, self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c)
            } else {
                other.get(r, c - self.cols)
            }
        }))
    }

    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::Dimension(format!("vstack of {} and {} columns", self.cols, other.cols)));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data })
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        Matrix::from_fn(&self.field, self.rows, cols.len(), |r, c| self.get(r, cols[c]))
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        Matrix::from_fn(&self.field, rows.len(), self.cols, |r, c| self.get(rows[r], c))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    // row[dst] -= factor * row[src], starting at column `from`.
    fn eliminate(&mut self, dst: usize, src: usize, factor: Elem, from: usize) {
        let f = self.field.clone();
        for c in from..self.cols {
            let s = self.get(src, c);
            if !s.is_zero() {
                let v = f.sub(self.get(dst, c), f.mul(factor, s));
                self.set(dst, c, v);
            }
        }
    }

    /// Reduced row-echelon form. Pivots are the first nonzero entry found
    /// scanning down each column in order.
    pub fn rref(&self) -> Echelon {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = f.inv_nonzero(m.get(row, col));
            for c in col..m.cols {
                let v = f.mul(m.get(row, c), inv);
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r != row {
                    let factor = m.get(r, col);
                    if !factor.is_zero() {
                        m.eliminate(r, row, factor, col);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        Echelon { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        // Forward elimination only.
        let f = self.field.clone();
        let mut m = self.clone();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = f.inv_nonzero(m.get(row, col));
            for r in row + 1..m.rows {
                let x = m.get(r, col);
                if !x.is_zero() {
                    m.eliminate(r, row, f.mul(x, inv), col);
                }
            }
            row += 1;
        }
        row
    }

    /// Determinant by Gaussian elimination, pivoting on the first nonzero
    /// entry of each column.
    pub fn determinant(&self) -> Result<Elem> {
        if self.rows != self.cols {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let f = self.field.clone();
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Elem::ONE;
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return Ok(Elem::ZERO);
            };
            if p != col {
                m.swap_rows(col, p);
                det = f.neg(det);
            }
            let pivot = m.get(col, col);
            det = f.mul(det, pivot);
            let inv = f.inv_nonzero(pivot);
            for r in col + 1..n {
                let x = m.get(r, col);
                if !x.is_zero() {
                    m.eliminate(r, col, f.mul(x, inv), col);
                }
            }
        }
        Ok(det)
    }

    /// Basis (as rows) of `{x : M x = 0}`.
    pub fn null_space(&self) -> Matrix {
        let f = self.field.clone();
        let Echelon { matrix: r, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(&f, free.len(), self.cols);
        for (i, &fc) in free.iter().enumerate() {
            out.set(i, fc, Elem::ONE);
            for (pr, &pc) in pivots.iter().enumerate() {
                out.set(i, pc, f.neg(r.get(pr, fc)));
            }
        }
        out
    }

    /// Solves `M x = b` for one solution, if any exists.
    pub fn solve(&self, b: &[Elem]) -> Result<Option<Vec<Elem>>> {
        if b.len() != self.rows {
            return Err(Error::Dimension(format!("rhs of length {} for {} rows", b.len(), self.rows)));
        }
        let col = Matrix::from_fn(&self.field, self.rows, 1, |r, _| b[r]);
        let Echelon { matrix: r, pivots } = self.hstack(&col)?.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Elem::ZERO; self.cols];
        for (pr, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(pr, self.cols);
        }
        Ok(Some(x))
    }
}

/// JSON form: nested arrays of canonical encodings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MatrixJson(pub Vec<Vec<u32>>);

impl From<&Matrix> for MatrixJson {
    fn from(m: &Matrix) -> Self {
        MatrixJson(m.to_nested())
    }
}

fn check_distinct(points: &[Elem]) -> Result<()> {
    for (i, a) in points.iter().enumerate() {
        if points[..i].contains(a) {
            return Err(Error::DuplicatePoint(a.0));
        }
    }
    Ok(())
}

/// Row `i` holds the `i`-th powers of the points.
pub fn vandermonde(field: &Field, points: &[Elem], nrows: usize) -> Result<Matrix> {
    check_distinct(points)?;
    if nrows == 0 {
        return Err(Error::Dimension("Vandermonde matrix needs at least one row".into()));
    }
    Ok(Matrix::from_fn(field, nrows, points.len(), |r, c| field.pow_u(points[c], r as u64)))
}

/// Square matrix with an all-ones first row followed by rows of the points
/// raised to each exponent in `exponents`.
pub fn generalized_vandermonde(field: &Field, exponents: &[u32], points: &[Elem]) -> Result<Matrix> {
    check_distinct(points)?;
    if exponents.len() + 1 != points.len() {
        return Err(Error::Dimension(format!(
            "{} exponents need {} points, got {}",
            exponents.len(),
            exponents.len() + 1,
            points.len()
        )));
    }
    if exponents.first().is_some_and(|&e| e == 0) || exponents.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::BadExponents);
    }
    Ok(Matrix::from_fn(field, points.len(), points.len(), |r, c| {
        if r == 0 {
            Elem::ONE
        } else {
            field.pow_u(points[c], exponents[r - 1] as u64)
        }
    }))
}

/// Complete homogeneous symmetric polynomial of degree `r` in `values`,
/// evaluated through `P(r, l) = x_l P(r-1, l) + P(r, l-1)`.
pub fn homogeneous_poly(field: &Field, r: i64, values: &[Elem]) -> Elem {
    if r < 0 || values.is_empty() {
        return if r == 0 { Elem::ONE } else { Elem::ZERO };
    }
    let r = r as usize;
    // col[d] = P(d, l) for the current l.
    let x1 = values[0];
    let mut col: Vec<Elem> = (0..=r).map(|d| field.pow_u(x1, d as u64)).collect();
    for &xl in &values[1..] {
        for d in 1..=r {
            col[d] = field.add(field.mul(xl, col[d - 1]), col[d]);
        }
    }
    col[r]
}

/// The factor `D` with `det(generalized Vandermonde) = D * det(Vandermonde)`.
///
/// With exponents `k_1 < ... < k_m` on points `x_1..x_{m+1}`, `D` is the
/// determinant of the `m x m` matrix whose `(j, c)` entry (0-based) is the
/// complete homogeneous polynomial of degree `k_j - c - 1` evaluated on the
/// first `c + 2` points.
pub fn gvand_factor(field: &Field, exponents: &[u32], points: &[Elem]) -> Result<Elem> {
    // Reuse the argument validation.
    generalized_vandermonde(field, exponents, points)?;
    let m = exponents.len();
    if m == 0 {
        return Ok(Elem::ONE);
    }
    let p = Matrix::from_fn(field, m, m, |j, c| {
        homogeneous_poly(field, exponents[j] as i64 - (c as i64 + 1), &points[..c + 2])
    });
    p.determinant()
}

/// `w_i = 1 / prod_{j != i} (x_i - x_j)`, the solution of `V w = (0, .., 0, 1)^T`
/// for the square Vandermonde matrix on the points.
pub fn cramer_unit_solution(field: &Field, points: &[Elem]) -> Result<Vec<Elem>> {
    check_distinct(points)?;
    Ok(points
        .iter()
        .enumerate()
        .map(|(i, &xi)| {
            let prod = field.product(points.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &xj)| field.sub(xi, xj)));
            field.inv_nonzero(prod)
        })
        .collect())
}

/// `prod_{i<j} (x_j - x_i)`.
pub fn vandermonde_product(field: &Field, points: &[Elem]) -> Elem {
    let mut acc = Elem::ONE;
    for j in 0..points.len() {
        for i in 0..j {
            acc = field.mul(acc, field.sub(points[j], points[i]));
        }
    }
    acc
}
