use std::fmt;

use crate::error::{Error, Result};
use crate::text::{parse_header, LineCursor};

/// Upper bound on series terms in [`RealMatrix::exp`]; reached only for
/// inputs far outside desk scale.
const MAX_EXP_TERMS: usize = 2000;

/// Small dense real matrix, row-major.
#[derive(Clone, PartialEq)]
pub struct RealMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl RealMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Shape(format!(
                "matrix dimensions must be positive, got {rows}x{cols}"
            )));
        }
        Ok(Self {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut m = Self::zeros(n, n)?;
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        Ok(m)
    }

    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = Self::zeros(rows.len(), cols)?;
        for (r, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::Shape(format!(
                    "row {r} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            m.data[r * cols..(r + 1) * cols].copy_from_slice(row);
        }
        Ok(m)
    }

    pub fn diagonal(values: &[f64]) -> Result<Self> {
        let mut m = Self::zeros(values.len(), values.len())?;
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = v;
        }
        Ok(m)
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

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |acc, v| acc.max(v.abs()))
    }

    /// `max_ij |self[i][j] − other[i][j]|`.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        self.check_same_shape(other)?;
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .fold(0.0, |acc, (a, b)| acc.max((a - b).abs())))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a += b;
        }
        Ok(out)
    }

    pub fn scale(&self, factor: f64) -> Self {
        let mut out = self.clone();
        out.data.iter_mut().for_each(|v| *v *= factor);
        out
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "product of {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols)?;
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = self[(i, t)];
                if a != 0.0 {
                    for j in 0..other.cols {
                        out[(i, j)] += a * other[(t, j)];
                    }
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product, size `(a.rows·b.rows) × (a.cols·b.cols)`.
    pub fn kronecker_product(&self, other: &Self) -> Self {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut data = vec![0.0; rows * cols];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self[(i, j)];
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        data[(i * other.rows + k) * cols + j * other.cols + l] = a * other[(k, l)];
                    }
                }
            }
        }
        Self { rows, cols, data }
    }

    /// Kronecker sum `A ⊗ I_m + I_n ⊗ B` of square matrices.
    pub fn kronecker_sum(&self, other: &Self) -> Result<Self> {
        self.require_square("Kronecker sum")?;
        other.require_square("Kronecker sum")?;
        let left = self.kronecker_product(&Self::identity(other.rows)?);
        let right = Self::identity(self.rows)?.kronecker_product(other);
        left.add(&right)
    }

    /// Matrix exponential by direct series summation.
    ///
    /// Terms are added until the tail bound `s^{K+1}/(K+1)! · 1/(1 − s/(K+1))`
    /// drops below `tol`, where `s = n · max|m_ij|` dominates the induced
    /// ∞-norm, so every entry of the result is within `tol` of `exp(m)`
    /// up to rounding.
    pub fn exp(&self, tol: f64) -> Result<Self> {
        self.require_square("matrix exponential")?;
        if !(tol.is_finite() && tol > 0.0) {
            return Err(Error::Argument(format!(
                "tolerance must be positive, got {tol}"
            )));
        }
        if self.data.iter().any(|v| !v.is_finite()) {
            return Err(Error::Argument("matrix has non-finite entries".into()));
        }
        let n = self.rows;
        let s = n as f64 * self.max_abs();
        let mut sum = Self::identity(n)?;
        let mut term = Self::identity(n)?;
        // scalar s^k / k! tracked alongside the matrix terms
        let mut scalar_term = 1.0f64;
        for k in 1..=MAX_EXP_TERMS {
            term = term.matmul(self)?.scale(1.0 / k as f64);
            sum = sum.add(&term)?;
            scalar_term *= s / k as f64;
            let ratio = s / (k + 1) as f64;
            if ratio < 1.0 {
                let tail = scalar_term * ratio / (1.0 - ratio);
                if tail < tol {
                    return Ok(sum);
                }
            }
            // later terms are multiples of a zero term
            if term.max_abs() == 0.0 {
                return Ok(sum);
            }
        }
        Err(Error::Argument(format!(
            "exponential series did not reach tolerance {tol} within {MAX_EXP_TERMS} terms"
        )))
    }

    fn require_square(&self, op: &str) -> Result<()> {
        if !self.is_square() {
            return Err(Error::Shape(format!(
                "{op} needs a square matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        Ok(())
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    /// `R C` header then rows of space-separated decimals.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.rows, self.cols);
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self[(r, c)].to_string()).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut cursor = LineCursor::new(text);
        let (rows, cols) = parse_header(&mut cursor)?;
        let mut m = Self::zeros(rows, cols)?;
        for r in 0..rows {
            let (line, text) = cursor.expect_line("matrix row")?;
            let values: Vec<&str> = text.split_whitespace().collect();
            if values.len() != cols {
                return Err(Error::parse(
                    line,
                    format!("expected {cols} values, found {}", values.len()),
                ));
            }
            for (c, token) in values.into_iter().enumerate() {
                m[(r, c)] = token
                    .parse::<f64>()
                    .map_err(|_| Error::parse(line, format!("invalid number `{token}`")))?;
            }
        }
        if !cursor.at_end() {
            return Err(Error::parse(
                cursor.line_no(),
                "trailing content after matrix",
            ));
        }
        Ok(m)
    }
}

impl std::ops::Index<(usize, usize)> for RealMatrix {
    type Output = f64;

    fn index(&self, (r, c): (usize, usize)) -> &f64 {
        assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RealMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut f64 {
        assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Debug for RealMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RealMatrix {}", self.to_text())
    }
}
