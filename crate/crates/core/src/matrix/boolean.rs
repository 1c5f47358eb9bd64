use std::fmt;

use crate::error::{Error, Result};
use crate::text::{parse_header, LineCursor};

const WORD_BITS: usize = 64;

/// Dense 0/1 matrix with bit-packed rows.
///
/// Packing is an implementation detail: equality, hashing and every accessor
/// are entrywise. Padding bits past `cols` in the last word of a row are
/// always zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BoolMatrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl BoolMatrix {
    /// All-zeros `rows × cols` matrix. Both dimensions must be positive.
    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Shape(format!(
                "matrix dimensions must be positive, got {rows}x{cols}"
            )));
        }
        Ok(Self::zeros_unchecked(rows, cols))
    }

    pub(crate) fn zeros_unchecked(rows: usize, cols: usize) -> Self {
        debug_assert!(rows > 0 && cols > 0);
        let words_per_row = cols.div_ceil(WORD_BITS);
        Self {
            rows,
            cols,
            words_per_row,
            bits: vec![0; rows * words_per_row],
        }
    }

    pub fn ones(rows: usize, cols: usize) -> Result<Self> {
        let mut m = Self::zeros(rows, cols)?;
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, true);
            }
        }
        Ok(m)
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut m = Self::zeros(n, n)?;
        for i in 0..n {
            m.set(i, i, true);
        }
        Ok(m)
    }

    /// Builds a matrix from rows of 0/1 values. Any non-zero value counts as 1.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
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
            for (c, &v) in row.iter().enumerate() {
                m.set(r, c, v != 0);
            }
        }
        Ok(m)
    }

    /// Builds a `rows × cols` matrix from a row-major cell mask (bit `r*cols+c`).
    pub fn from_cell_mask(rows: usize, cols: usize, mask: u64) -> Result<Self> {
        if rows * cols > 64 {
            return Err(Error::Size(format!(
                "cell mask holds at most 64 cells, matrix has {}",
                rows * cols
            )));
        }
        let mut m = Self::zeros(rows, cols)?;
        for i in 0..rows * cols {
            if mask >> i & 1 == 1 {
                m.set(i / cols, i % cols, true);
            }
        }
        Ok(m)
    }

    /// Row-major cell mask; inverse of [`BoolMatrix::from_cell_mask`].
    pub fn cell_mask(&self) -> Result<u64> {
        if self.cells() > 64 {
            return Err(Error::Size(format!(
                "cell mask holds at most 64 cells, matrix has {}",
                self.cells()
            )));
        }
        let mut mask = 0u64;
        for (r, c) in self.ones_iter() {
            mask |= 1 << (r * self.cols + c);
        }
        Ok(mask)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn cells(&self) -> usize {
        self.rows * self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(
            r < self.rows && c < self.cols,
            "index ({r},{c}) out of range"
        );
        self.bits[r * self.words_per_row + c / WORD_BITS] >> (c % WORD_BITS) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(
            r < self.rows && c < self.cols,
            "index ({r},{c}) out of range"
        );
        let word = &mut self.bits[r * self.words_per_row + c / WORD_BITS];
        let bit = 1u64 << (c % WORD_BITS);
        if value {
            *word |= bit;
        } else {
            *word &= !bit;
        }
    }

    /// Bounds-checked read.
    pub fn try_get(&self, r: usize, c: usize) -> Result<bool> {
        if r >= self.rows || c >= self.cols {
            return Err(Error::Bounds(format!(
                "entry ({r},{c}) outside {}x{} matrix",
                self.rows, self.cols
            )));
        }
        Ok(self.get(r, c))
    }

    pub(crate) fn row_words(&self, r: usize) -> &[u64] {
        &self.bits[r * self.words_per_row..(r + 1) * self.words_per_row]
    }

    fn row_words_mut(&mut self, r: usize) -> &mut [u64] {
        &mut self.bits[r * self.words_per_row..(r + 1) * self.words_per_row]
    }

    pub fn row_count_ones(&self, r: usize) -> usize {
        self.row_words(r)
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    /// True when the support of row `a` is contained in the support of row `b`.
    pub fn row_subset(&self, a: usize, b: usize) -> bool {
        self.row_words(a)
            .iter()
            .zip(self.row_words(b))
            .all(|(x, y)| x & !y == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn is_all_ones(&self) -> bool {
        self.count_ones() == self.cells()
    }

    /// Positions of 1 entries in row-major order.
    pub fn ones_iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.rows)
            .flat_map(move |r| (0..self.cols).filter_map(move |c| self.get(r, c).then_some((r, c))))
    }

    /// Positions of 0 entries in row-major order.
    pub fn zeros_iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.rows).flat_map(move |r| {
            (0..self.cols).filter_map(move |c| (!self.get(r, c)).then_some((r, c)))
        })
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros_unchecked(self.cols, self.rows);
        for (r, c) in self.ones_iter() {
            t.set(c, r, true);
        }
        t
    }

    /// Entrywise OR.
    pub fn or(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other, "or")?;
        let mut out = self.clone();
        for (a, b) in out.bits.iter_mut().zip(&other.bits) {
            *a |= b;
        }
        Ok(out)
    }

    /// Entrywise AND (relation intersection).
    pub fn and(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other, "and")?;
        let mut out = self.clone();
        for (a, b) in out.bits.iter_mut().zip(&other.bits) {
            *a &= b;
        }
        Ok(out)
    }

    /// `self ≤ other` entrywise.
    pub fn is_submatrix_of(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    fn check_same_shape(&self, other: &Self, op: &str) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape(format!(
                "{op}: {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    /// Boolean matrix product: `(a·b)[i][j] = ∨_t a[i][t] ∧ b[t][j]`.
    pub fn bool_product(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "product of {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros_unchecked(self.rows, other.cols);
        for i in 0..self.rows {
            for t in 0..self.cols {
                if self.get(i, t) {
                    let src = other.row_words(t).to_vec();
                    for (dst, s) in out.row_words_mut(i).iter_mut().zip(src) {
                        *dst |= s;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Block-diagonal matrix `diag(B_1, …, B_n)`.
    pub fn direct_sum(blocks: &[BoolMatrix]) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::Argument("direct sum of an empty block list".into()));
        }
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros_unchecked(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for (r, c) in b.ones_iter() {
                out.set(r0 + r, c0 + c, true);
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        Ok(out)
    }

    /// Boolean geometric series `I ∨ A ∨ A² ∨ …`, summed until the partial
    /// sums stop changing. The fixed point is reached within `n` steps.
    pub fn boolean_geometric_series(&self) -> Result<Self> {
        self.require_square("geometric series")?;
        let n = self.rows;
        let mut sum = Self::identity(n)?;
        let mut power = Self::identity(n)?;
        for _ in 0..n {
            power = power.bool_product(self)?;
            let next = sum.or(&power)?;
            if next == sum {
                break;
            }
            sum = next;
        }
        Ok(sum)
    }

    /// Reflexive-transitive closure by Warshall's triple loop.
    pub fn warshall_closure(&self) -> Result<Self> {
        self.require_square("Warshall closure")?;
        let n = self.rows;
        let mut m = self.clone();
        for i in 0..n {
            m.set(i, i, true);
        }
        for k in 0..n {
            for i in 0..n {
                if m.get(i, k) {
                    for j in 0..n {
                        if m.get(k, j) {
                            m.set(i, j, true);
                        }
                    }
                }
            }
        }
        Ok(m)
    }

    /// `self^exp` under the Boolean product; `self^0 = I`.
    pub fn bool_power(&self, exp: usize) -> Result<Self> {
        self.require_square("power")?;
        let mut out = Self::identity(self.rows)?;
        for _ in 0..exp {
            out = out.bool_product(self)?;
        }
        Ok(out)
    }

    pub(crate) fn require_square(&self, op: &str) -> Result<()> {
        if !self.is_square() {
            return Err(Error::Shape(format!(
                "{op} needs a square matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        Ok(())
    }

    /// Renders the matrix text format: `R C` header, then one line of
    /// `0`/`1` characters per row. Ends with a newline.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                s.push(if self.get(r, c) { '1' } else { '0' });
            }
            s.push('\n');
        }
        s
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut cursor = LineCursor::new(text);
        let m = Self::parse_from(&mut cursor)?;
        if !cursor.at_end() {
            return Err(Error::parse(
                cursor.line_no(),
                "trailing content after matrix",
            ));
        }
        Ok(m)
    }

    pub(crate) fn parse_from(cursor: &mut LineCursor<'_>) -> Result<Self> {
        let (rows, cols) = parse_header(cursor)?;
        let mut m = Self::zeros_unchecked(rows, cols);
        for r in 0..rows {
            let (line, text) = cursor.expect_line("matrix row")?;
            let text = text.trim();
            if text.chars().count() != cols {
                return Err(Error::parse(
                    line,
                    format!("expected {cols} characters, found {}", text.chars().count()),
                ));
            }
            for (c, ch) in text.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => m.set(r, c, true),
                    other => {
                        return Err(Error::parse(
                            line,
                            format!("invalid matrix character `{other}`"),
                        ))
                    }
                }
            }
        }
        Ok(m)
    }
}

impl fmt::Debug for BoolMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BoolMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                write!(f, "{}", self.get(r, c) as u8)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for BoolMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
