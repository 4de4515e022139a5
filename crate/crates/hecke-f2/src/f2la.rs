//! Dense linear algebra over GF(2).
//!
//! Matrices are row-major with each row packed into `u64` words. Vectors are
//! plain word slices whose bit `j` is coordinate `j`.

use std::fmt;

use crate::words;

#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words::nwords(cols).max(1);
        BitMatrix {
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

    /// Build from row vectors; bits at or past `cols` are dropped.
    pub fn from_rows<R: AsRef<[u64]>>(rows: &[R], cols: usize) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            let n = r.len().min(m.stride);
            m.row_mut(i)[..n].copy_from_slice(&r[..n]);
            words::mask_tail(m.row_mut(i), cols);
        }
        m
    }

    /// Build from column vectors of length `rows`.
    pub fn from_cols<C: AsRef<[u64]>>(cols: &[C], rows: usize) -> Self {
        Self::from_rows(cols, rows).transpose()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.stride..(i + 1) * self.stride]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        words::get(self.row(i), j)
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        words::set(self.row_mut(i), j, v)
    }

    pub fn col(&self, j: usize) -> Vec<u64> {
        let mut v = vec![0u64; words::nwords(self.rows).max(1)];
        for i in 0..self.rows {
            if self.get(i, j) {
                words::set(&mut v, i, true);
            }
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        words::is_zero(&self.data)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in words::ones(self.row(i)) {
                t.set(j, i, true);
            }
        }
        t
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut m = self.clone();
        words::xor_into(&mut m.data, &other.data);
        m
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let (lo, hi) = (i * out.stride, (i + 1) * out.stride);
            for k in words::ones(self.row(i)) {
                words::xor_into(&mut out.data[lo..hi], other.row(k));
            }
        }
        out
    }

    /// `M v` for a column vector `v` of length `cols`.
    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        let mut out = vec![0u64; words::nwords(self.rows).max(1)];
        for i in 0..self.rows {
            if words::parity_and(self.row(i), v) {
                words::set(&mut out, i, true);
            }
        }
        out
    }

    /// `v^T M` for a row vector `v` of length `rows`.
    pub fn vec_mul(&self, v: &[u64]) -> Vec<u64> {
        let mut out = vec![0u64; self.stride];
        for k in words::ones(v) {
            if k >= self.rows {
                break;
            }
            words::xor_into(&mut out, self.row(k));
        }
        out
    }

    pub fn echelon(&self) -> Echelon {
        let mut m = self.clone();
        let pivots = rref_in_place(&mut m, self.cols);
        m.rows = pivots.len();
        m.data.truncate(m.rows * m.stride);
        Echelon { basis: m, pivots }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        rref_in_place(&mut m, self.cols).len()
    }

    /// Basis of `{ v : M v = 0 }`, each vector of length `cols`.
    pub fn kernel(&self) -> Vec<Vec<u64>> {
        let e = self.echelon();
        let mut is_pivot = vec![false; self.cols];
        for &p in &e.pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|&j| !is_pivot[j]) {
            let mut v = vec![0u64; self.stride];
            words::set(&mut v, free, true);
            for (r, &p) in e.pivots.iter().enumerate() {
                if e.basis.get(r, free) {
                    words::set(&mut v, p, true);
                }
            }
            out.push(v);
        }
        out
    }

    /// Some `x` with `M x = b`, or `None`.
    pub fn solve(&self, b: &[u64]) -> Option<Vec<u64>> {
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            let n = self.stride.min(aug.stride);
            aug.row_mut(i)[..n].copy_from_slice(&self.row(i)[..n]);
            aug.set(i, self.cols, words::get(b, i));
        }
        let pivots = rref_in_place(&mut aug, self.cols);
        for i in pivots.len()..self.rows {
            if aug.get(i, self.cols) {
                return None;
            }
        }
        let mut x = vec![0u64; self.stride];
        for (r, &p) in pivots.iter().enumerate() {
            if aug.get(r, self.cols) {
                words::set(&mut x, p, true);
            }
        }
        Some(x)
    }

    /// Inverse of a square matrix, if it is invertible.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols, "inverse needs a square matrix");
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in words::ones(self.row(i)) {
                aug.set(i, j, true);
            }
            aug.set(i, n + i, true);
        }
        if rref_in_place(&mut aug, n).len() < n {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in words::ones(aug.row(i)).filter(|&j| j >= n) {
                inv.set(i, j - n, true);
            }
        }
        Some(inv)
    }

    /// Leading `k x k` block.
    pub fn leading_block(&self, k: usize) -> Self {
        let mut m = Self::zeros(k, k);
        for i in 0..k.min(self.rows) {
            let n = m.stride.min(self.stride);
            m.row_mut(i)[..n].copy_from_slice(&self.row(i)[..n]);
            words::mask_tail(m.row_mut(i), k);
        }
        m
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut m = self.clone();
        m.rows += other.rows;
        m.data.extend_from_slice(&other.data);
        m
    }
}

/// Reduce the first `ncols` columns to reduced row-echelon form; returns pivots.
/// Pivot rows end up at the top in order.
fn rref_in_place(m: &mut BitMatrix, ncols: usize) -> Vec<usize> {
    let stride = m.stride;
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows).find(|&i| m.get(i, c)) else {
            continue;
        };
        if p != r {
            for k in 0..stride {
                m.data.swap(p * stride + k, r * stride + k);
            }
        }
        let (head, tail) = m.data.split_at_mut(r * stride);
        let (prow, rest) = tail.split_at_mut(stride);
        let wc = c / 64;
        let bit = 1u64 << (c % 64);
        for row in head.chunks_mut(stride).chain(rest.chunks_mut(stride)) {
            if row[wc] & bit != 0 {
                words::xor_into(&mut row[wc..], &prow[wc..]);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Reduced row-echelon basis with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    pub basis: BitMatrix,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduce `v` against the basis; returns the residual.
    pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
        let mut r = v.to_vec();
        r.resize(self.basis.stride, 0);
        for (i, &p) in self.pivots.iter().enumerate() {
            if words::get(&r, p) {
                words::xor_into(&mut r, self.basis.row(i));
            }
        }
        r
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        words::is_zero(&self.reduce(v))
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[u64]) -> Option<Vec<u64>> {
        let mut r = v.to_vec();
        r.resize(self.basis.stride, 0);
        let mut c = vec![0u64; words::nwords(self.rank()).max(1)];
        for (i, &p) in self.pivots.iter().enumerate() {
            if words::get(&r, p) {
                words::xor_into(&mut r, self.basis.row(i));
                words::set(&mut c, i, true);
            }
        }
        words::is_zero(&r).then_some(c)
    }
}

pub fn echelon(m: &BitMatrix) -> Echelon {
    m.echelon()
}

pub fn kernel(m: &BitMatrix) -> Vec<Vec<u64>> {
    m.kernel()
}

pub fn solve(m: &BitMatrix, b: &[u64]) -> Option<Vec<u64>> {
    m.solve(b)
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let s: String = (0..self.cols)
                .map(|j| if self.get(i, j) { '1' } else { '0' })
                .collect();
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&str]) -> BitMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut out = BitMatrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            for (j, ch) in r.chars().enumerate() {
                out.set(i, j, ch == '1');
            }
        }
        out
    }

    #[test]
    fn echelon_examples() {
        let e = BitMatrix::identity(3).echelon();
        assert_eq!(e.pivots, vec![0, 1, 2]);
        assert_eq!(e.basis, BitMatrix::identity(3));
        assert_eq!(BitMatrix::zeros(3, 3).echelon().rank(), 0);
        assert_eq!(m(&["110", "011", "101"]).rank(), 2);
    }

    #[test]
    fn kernel_examples() {
        assert!(BitMatrix::identity(4).kernel().is_empty());
        assert_eq!(BitMatrix::zeros(2, 3).kernel().len(), 3);
        let k = m(&["110", "011"]).kernel();
        assert_eq!(k, vec![vec![0b111]]);
    }

    #[test]
    fn solve_examples() {
        assert_eq!(BitMatrix::identity(3).solve(&[0b101]), Some(vec![0b101]));
        assert_eq!(BitMatrix::zeros(2, 2).solve(&[0b01]), None);
        assert_eq!(m(&["11", "01"]).solve(&[0b11]), Some(vec![0b10]));
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&["110", "011", "001"]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), BitMatrix::identity(3));
        assert!(m(&["110", "011", "101"]).inverse().is_none());
    }

    #[test]
    fn coordinates_in_span() {
        let e = m(&["1100", "0110"]).echelon();
        assert!(e.contains(&[0b0101]));
        assert!(!e.contains(&[0b1000]));
        assert!(e.coordinates(&[0b0101]).is_some());
    }

    #[test]
    fn wide_matrices_cross_word_boundaries() {
        let mut a = BitMatrix::zeros(3, 130);
        a.set(0, 0, true);
        a.set(0, 129, true);
        a.set(1, 129, true);
        a.set(2, 64, true);
        assert_eq!(a.rank(), 3);
        assert_eq!(a.kernel().len(), 127);
        for v in a.kernel() {
            assert!(words::is_zero(&a.mul_vec(&v)));
        }
        assert_eq!(a.transpose().transpose(), a);
    }
}
