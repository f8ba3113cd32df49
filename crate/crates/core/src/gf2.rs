//! Dense bit-packed matrices over GF(2).

use std::fmt;

use crate::error::{Error, Result};
use crate::pauli::words_for;

/// Row-major binary matrix; each row is packed into `u64` words, bit `j` of
/// a row being column `j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BinMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols).max(1);
        BinMatrix {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from rows of '0'/'1' characters.
    pub fn from_strs(rows: &[&str]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::Shape(format!(
                    "row {i} has {} columns, expected {cols}",
                    r.len()
                )));
            }
            for (j, c) in r.chars().enumerate() {
                match c {
                    '0' => {}
                    '1' => m.set(i, j, true),
                    _ => {
                        return Err(Error::Format {
                            line: i + 1,
                            message: format!("unexpected character {c:?} in binary row"),
                        })
                    }
                }
            }
        }
        Ok(m)
    }

    /// Builds a matrix from packed rows of `cols` bits.
    pub fn from_packed_rows(cols: usize, rows: &[Vec<u64>]) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            let dst = m.row_mut(i);
            for (d, s) in dst.iter_mut().zip(r) {
                *d = *s;
            }
        }
        m.clear_tails();
        m
    }

    fn clear_tails(&mut self) {
        let rem = self.cols % 64;
        if rem == 0 {
            return;
        }
        let mask = (1u64 << rem) - 1;
        let last = words_for(self.cols).max(1) - 1;
        for i in 0..self.rows {
            self.data[i * self.stride + last] &= mask;
        }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        (self.data[i * self.stride + j / 64] >> (j % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        let w = &mut self.data[i * self.stride + j / 64];
        if value {
            *w |= 1 << (j % 64);
        } else {
            *w &= !(1 << (j % 64));
        }
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.stride..(i + 1) * self.stride]
    }

    pub fn row_string(&self, i: usize) -> String {
        (0..self.cols)
            .map(|j| if self.get(i, j) { '1' } else { '0' })
            .collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> BinMatrix {
        let mut t = BinMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    t.set(j, i, true);
                }
            }
        }
        t
    }

    /// The same matrix with its row order reversed.
    pub fn reverse_rows(&self) -> BinMatrix {
        let mut out = BinMatrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            out.row_mut(i).copy_from_slice(self.row(self.rows - 1 - i));
        }
        out
    }

    pub fn add(&self, other: &BinMatrix) -> Result<BinMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a ^= b;
        }
        Ok(out)
    }

    pub fn matmul(&self, other: &BinMatrix) -> Result<BinMatrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = BinMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.get(i, k) {
                    let (src, dst) = (other.row(k).to_vec(), out.row_mut(i));
                    for (d, s) in dst.iter_mut().zip(src) {
                        *d ^= s;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product over packed vectors.
    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        let mut out = vec![0u64; words_for(self.rows).max(1)];
        for i in 0..self.rows {
            let parity = self
                .row(i)
                .iter()
                .zip(v)
                .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
                & 1;
            if parity == 1 {
                out[i / 64] |= 1 << (i % 64);
            }
        }
        out
    }

    /// Row rank over GF(2).
    pub fn rank(&self) -> usize {
        RowSpace::from_matrix(self).rank()
    }

    pub fn is_invertible(&self) -> Result<bool> {
        if !self.is_square() {
            return Err(Error::Shape(format!(
                "invertibility needs a square matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        Ok(self.rank() == self.rows)
    }

    /// True iff `A s != 0` and `A s != s` for every nonzero `s`, i.e. both
    /// `A` and `A + I` are invertible.
    pub fn is_fixed_point_free(&self) -> Result<bool> {
        if !self.is_invertible()? {
            return Ok(false);
        }
        self.add(&BinMatrix::identity(self.rows))?.is_invertible()
    }

    /// True iff `v` (with `cols` bits) is in the span of the rows.
    pub fn in_row_space(&self, v: &[u64]) -> bool {
        RowSpace::from_matrix(self).contains(v)
    }
}

impl fmt::Debug for BinMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {}", self.row_string(i))?;
        }
        Ok(())
    }
}

/// The m x 2^m matrix whose column k is the binary expansion of k, with
/// row i holding bit i (least significant bit in row 0).
pub fn hamming_matrix(m: usize) -> Result<BinMatrix> {
    if m < 1 {
        return Err(Error::OutOfRange {
            what: "hamming matrix order m",
            value: m as u64,
            min: 1,
        });
    }
    let cols = 1usize << m;
    let mut h = BinMatrix::zeros(m, cols);
    for k in 0..cols {
        for i in 0..m {
            if (k >> i) & 1 == 1 {
                h.set(i, k, true);
            }
        }
    }
    Ok(h)
}

/// Companion matrix of x^m + x + 1: ones on the subdiagonal and the last
/// column holding the coefficients of 1 and x.
///
/// The constant term makes it invertible and p(1) = 1 makes `A + I`
/// invertible, so the result is always fixed-point free.
pub fn companion_fixed_point_free(m: usize) -> Result<BinMatrix> {
    if m < 2 {
        return Err(Error::OutOfRange {
            what: "companion matrix order m",
            value: m as u64,
            min: 2,
        });
    }
    let mut a = BinMatrix::zeros(m, m);
    for i in 1..m {
        a.set(i, i - 1, true);
    }
    a.set(0, m - 1, true);
    a.set(1, m - 1, true);
    assert!(
        a.is_fixed_point_free()?,
        "companion of x^{m}+x+1 is not fixed-point free"
    );
    Ok(a)
}

/// Reduced echelon basis of a row space, for repeated membership tests.
#[derive(Debug, Clone)]
pub struct RowSpace {
    width: usize,
    // (pivot column, row) pairs; every other basis row is zero in each pivot column
    basis: Vec<(usize, Vec<u64>)>,
}

impl RowSpace {
    pub fn new(width: usize) -> Self {
        RowSpace {
            width,
            basis: Vec::new(),
        }
    }

    pub fn from_matrix(m: &BinMatrix) -> Self {
        let mut space = RowSpace::new(m.cols());
        for i in 0..m.rows() {
            space.insert(m.row(i));
        }
        space
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    fn reduce(&self, v: &mut [u64]) {
        for (pivot, row) in &self.basis {
            if (v[pivot / 64] >> (pivot % 64)) & 1 == 1 {
                for (a, b) in v.iter_mut().zip(row) {
                    *a ^= b;
                }
            }
        }
    }

    /// Adds `v` to the space; returns `false` if it was already in it.
    pub fn insert(&mut self, v: &[u64]) -> bool {
        let mut r = v.to_vec();
        r.resize(words_for(self.width).max(1), 0);
        self.reduce(&mut r);
        let Some(pivot) = first_set_bit(&r) else {
            return false;
        };
        for (_, row) in self.basis.iter_mut() {
            if (row[pivot / 64] >> (pivot % 64)) & 1 == 1 {
                for (a, b) in row.iter_mut().zip(&r) {
                    *a ^= b;
                }
            }
        }
        self.basis.push((pivot, r));
        true
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        let mut r = v.to_vec();
        r.resize(words_for(self.width).max(1), 0);
        self.reduce(&mut r);
        r.iter().all(|&w| w == 0)
    }
}

fn first_set_bit(v: &[u64]) -> Option<usize> {
    v.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}
