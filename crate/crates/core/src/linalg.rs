//! Dense exact linear algebra over a prime field 𝔽_p.
//!
//! Every routine pivots on the leftmost available column and the topmost
//! available row, so results are reproducible bit for bit.

use std::fmt;

use crate::error::{Error, Result};

/// An element of 𝔽_p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldElem {
    residue: u32,
    modulus: u32,
}

impl FieldElem {
    pub fn new(value: i64, modulus: u32) -> Self {
        let m = modulus as i64;
        FieldElem { residue: value.rem_euclid(m) as u32, modulus }
    }
    pub fn residue(self) -> u32 {
        self.residue
    }
    pub fn modulus(self) -> u32 {
        self.modulus
    }
    pub fn is_zero(self) -> bool {
        self.residue == 0
    }
    pub fn add(self, o: Self) -> Self {
        debug_assert_eq!(self.modulus, o.modulus);
        FieldElem { residue: add(self.residue, o.residue, self.modulus), modulus: self.modulus }
    }
    pub fn sub(self, o: Self) -> Self {
        debug_assert_eq!(self.modulus, o.modulus);
        FieldElem { residue: sub(self.residue, o.residue, self.modulus), modulus: self.modulus }
    }
    pub fn mul(self, o: Self) -> Self {
        debug_assert_eq!(self.modulus, o.modulus);
        FieldElem { residue: mul(self.residue, o.residue, self.modulus), modulus: self.modulus }
    }
    pub fn neg(self) -> Self {
        FieldElem { residue: sub(0, self.residue, self.modulus), modulus: self.modulus }
    }
    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self) -> Option<Self> {
        if self.residue == 0 {
            None
        } else {
            Some(FieldElem { residue: inv(self.residue, self.modulus), modulus: self.modulus })
        }
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Checked constructor for a modulus.
pub fn check_prime(p: u32) -> Result<u32> {
    if is_prime(p) {
        Ok(p)
    } else {
        Err(Error::NotPrime(p))
    }
}

#[inline]
pub(crate) fn add(a: u32, b: u32, p: u32) -> u32 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub(crate) fn sub(a: u32, b: u32, p: u32) -> u32 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
pub(crate) fn mul(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

pub(crate) fn inv(a: u32, p: u32) -> u32 {
    // extended Euclid on (a, p)
    let (mut r0, mut r1) = (p as i64, a as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "{a} not invertible mod {p}");
    t0.rem_euclid(p as i64) as u32
}

/// Dense row-major matrix over 𝔽_p.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Result of [`Mat::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Mat,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl Mat {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Mat {
        Mat { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(p: u32, n: usize) -> Mat {
        let mut m = Mat::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % p;
        }
        m
    }

    /// Builds a matrix from signed integer rows, reducing entries mod p.
    pub fn from_rows<R: AsRef<[i64]>>(p: u32, cols: usize, rows: &[R]) -> Mat {
        let mut m = Mat::zeros(p, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged row {i}");
            for (j, &v) in r.iter().enumerate() {
                m.data[i * cols + j] = v.rem_euclid(p as i64) as u32;
            }
        }
        m
    }

    /// Builds a matrix from already reduced row-major data.
    pub fn from_data(p: u32, rows: usize, cols: usize, data: Vec<u32>) -> Mat {
        assert_eq!(data.len(), rows * cols);
        debug_assert!(data.iter().all(|&x| x < p));
        Mat { p, rows, cols, data }
    }

    /// A single row vector.
    pub fn row_vector(p: u32, v: &[u32]) -> Mat {
        Mat::from_data(p, 1, v.len(), v.to_vec())
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn data(&self) -> &[u32] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        debug_assert!(v < self.p);
        self.data[i * self.cols + j] = v;
    }
    pub fn elem(&self, i: usize, j: usize) -> FieldElem {
        FieldElem { residue: self.get(i, j), modulus: self.p }
    }
    #[inline]
    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut [u32] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }
    pub fn row_vecs(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }
    pub fn to_i64_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|&x| x as i64).collect()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }
    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Mat::identity(self.p, self.rows)
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        assert_eq!(self.cols, o.rows, "dimension mismatch in product");
        assert_eq!(self.p, o.p);
        let p = self.p as u64;
        let mut out = Mat::zeros(self.p, self.rows, o.cols);
        let mut acc = vec![0u64; o.cols];
        for i in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self.get(i, k) as u64;
                if a == 0 {
                    continue;
                }
                for (j, &b) in o.row(k).iter().enumerate() {
                    acc[j] += a * b as u64;
                }
                // keep accumulators bounded
                if k % 1024 == 1023 {
                    acc.iter_mut().for_each(|x| *x %= p);
                }
            }
            for (j, a) in acc.iter().enumerate() {
                out.data[i * o.cols + j] = (a % p) as u32;
            }
        }
        out
    }

    pub fn add(&self, o: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let p = self.p;
        let data = self.data.iter().zip(&o.data).map(|(&a, &b)| add(a, b, p)).collect();
        Mat { p, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, o: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let p = self.p;
        let data = self.data.iter().zip(&o.data).map(|(&a, &b)| sub(a, b, p)).collect();
        Mat { p, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: u32) -> Mat {
        let p = self.p;
        let c = c % p;
        Mat { p, rows: self.rows, cols: self.cols, data: self.data.iter().map(|&a| mul(a, c, p)).collect() }
    }

    /// In-place `self += c · o`.
    pub fn add_scaled(&mut self, o: &Mat, c: u32) {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let p = self.p;
        let c = c % p;
        if c == 0 {
            return;
        }
        for (a, &b) in self.data.iter_mut().zip(&o.data) {
            *a = add(*a, mul(b, c, p), p);
        }
    }

    pub fn pow(&self, mut k: u32) -> Mat {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Mat::identity(self.p, self.rows);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    pub fn hstack(&self, o: &Mat) -> Mat {
        assert_eq!(self.rows, o.rows);
        let mut out = Mat::zeros(self.p, self.rows, self.cols + o.cols);
        for i in 0..self.rows {
            out.row_mut(i)[..self.cols].copy_from_slice(self.row(i));
            out.row_mut(i)[self.cols..].copy_from_slice(o.row(i));
        }
        out
    }

    pub fn vstack(&self, o: &Mat) -> Mat {
        assert_eq!(self.cols, o.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&o.data);
        Mat { p: self.p, rows: self.rows + o.rows, cols: self.cols, data }
    }

    /// Block-diagonal sum.
    pub fn block_diag(&self, o: &Mat) -> Mat {
        let mut out = Mat::zeros(self.p, self.rows + o.rows, self.cols + o.cols);
        out.paste(0, 0, self);
        out.paste(self.rows, self.cols, o);
        out
    }

    /// Copies `block` into `self` with its top-left corner at (r, c).
    pub fn paste(&mut self, r: usize, c: usize, block: &Mat) {
        for i in 0..block.rows {
            let cols = self.cols;
            self.data[(r + i) * cols + c..(r + i) * cols + c + block.cols].copy_from_slice(block.row(i));
        }
    }

    pub fn select_rows(&self, idx: &[usize]) -> Mat {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        Mat { p: self.p, rows: idx.len(), cols: self.cols, data }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Mat {
        let mut out = Mat::zeros(self.p, self.rows, idx.len());
        for i in 0..self.rows {
            for (k, &j) in idx.iter().enumerate() {
                out.data[i * idx.len() + k] = self.get(i, j);
            }
        }
        out
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Mat {
        self.select_rows(rows).select_cols(cols)
    }

    /// Reduced row echelon form with leftmost pivoting.
    pub fn rref(&self) -> Rref {
        let mut r = self.clone();
        let pivots = r.rref_in_place();
        Rref { reduced: r, pivots }
    }

    /// Reduces `self` in place and returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let p = self.p;
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(piv) = (r..rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if piv != r {
                for j in 0..cols {
                    self.data.swap(piv * cols + j, r * cols + j);
                }
            }
            let iv = inv(self.data[r * cols + c], p);
            if iv != 1 {
                for j in c..cols {
                    self.data[r * cols + j] = mul(self.data[r * cols + j], iv, p);
                }
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let f = self.data[i * cols + c];
                if f == 0 {
                    continue;
                }
                let nf = p - f;
                for j in c..cols {
                    let v = self.data[r * cols + j];
                    if v != 0 {
                        let x = &mut self.data[i * cols + j];
                        *x = add(*x, mul(v, nf, p), p);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    /// Nonzero rows of the reduced echelon form: a canonical basis of the row space.
    pub fn row_space(&self) -> Mat {
        let mut r = self.clone();
        let k = r.rref_in_place().len();
        r.data.truncate(k * r.cols);
        r.rows = k;
        r
    }

    /// Rows spanning `{x : A·xᵀ = 0}`, one per free column, in column order.
    pub fn kernel_basis(&self) -> Mat {
        let Rref { reduced, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let p = self.p;
        let mut out = Mat::zeros(p, free.len(), self.cols);
        for (k, &f) in free.iter().enumerate() {
            out.set(k, f, 1 % p);
            for (r, &pc) in pivots.iter().enumerate() {
                let v = reduced.get(r, f);
                if v != 0 {
                    out.set(k, pc, p - v);
                }
            }
        }
        out
    }

    /// Rows spanning `{y : y·A = 0}`.
    pub fn left_kernel_basis(&self) -> Mat {
        self.transpose().kernel_basis()
    }

    /// Columns of `A` at its pivot positions, returned as the columns of a
    /// matrix: a basis of the column space drawn from `A` itself.
    pub fn image_basis(&self) -> Mat {
        let pivots = self.rref().pivots;
        self.select_cols(&pivots)
    }

    /// Solves `A·X = B` with free variables set to zero.
    pub fn solve(&self, b: &Mat) -> Result<Mat> {
        assert_eq!(self.rows, b.rows, "solve: row mismatch");
        let aug = self.hstack(b);
        let Rref { reduced, pivots } = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return Err(Error::NoSolution);
        }
        let mut x = Mat::zeros(self.p, self.cols, b.cols);
        for (r, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, reduced.get(r, self.cols + j));
            }
        }
        Ok(x)
    }

    /// Solves `X·A = B` (row-vector systems).
    pub fn solve_left(&self, b: &Mat) -> Result<Mat> {
        Ok(self.transpose().solve(&b.transpose())?.transpose())
    }

    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Mat::identity(self.p, n));
        let Rref { reduced, pivots } = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(reduced.select_cols(&(n..2 * n).collect::<Vec<_>>()))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn is_nilpotent(&self) -> bool {
        assert!(self.is_square());
        self.rows == 0 || self.pow(self.rows as u32).is_zero()
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat[F{}; {}x{}]", self.p, self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "\n  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// Coordinates relative to a subspace given in reduced echelon form.
///
/// A vector lying in the span of the rows has its coordinates sitting
/// verbatim at the pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EchelonBasis {
    pub basis: Mat,
    pub pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(rows: &Mat) -> Self {
        let Rref { mut reduced, pivots } = rows.rref();
        reduced.data.truncate(pivots.len() * reduced.cols);
        reduced.rows = pivots.len();
        EchelonBasis { basis: reduced, pivots }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols
    }

    /// Coordinates of `v`, or `None` if `v` is outside the span.
    pub fn coords(&self, v: &[u32]) -> Option<Vec<u32>> {
        let p = self.basis.p;
        let c: Vec<u32> = self.pivots.iter().map(|&j| v[j]).collect();
        let mut w = v.to_vec();
        for (k, &ck) in c.iter().enumerate() {
            if ck == 0 {
                continue;
            }
            let nc = p - ck;
            for (x, &b) in w.iter_mut().zip(self.basis.row(k)) {
                *x = add(*x, mul(b, nc, p), p);
            }
        }
        w.iter().all(|&x| x == 0).then_some(c)
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.coords(v).is_some()
    }

    /// Non-pivot columns: unit vectors there span a complement.
    pub fn complement(&self) -> Vec<usize> {
        (0..self.ambient()).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Reduces `v` modulo the span and returns the entries at the
    /// complement positions (coordinates in the quotient).
    pub fn quotient_coords(&self, v: &[u32]) -> Vec<u32> {
        let p = self.basis.p;
        let mut w = v.to_vec();
        for (k, &j) in self.pivots.iter().enumerate() {
            let ck = w[j];
            if ck == 0 {
                continue;
            }
            let nc = p - ck;
            for (x, &b) in w.iter_mut().zip(self.basis.row(k)) {
                *x = add(*x, mul(b, nc, p), p);
            }
        }
        self.complement().iter().map(|&j| w[j]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_examples() {
        let z = Mat::zeros(2, 2, 2);
        let r = z.rref();
        assert_eq!(r.rank(), 0);
        assert!(r.pivots.is_empty());

        let i3 = Mat::identity(2, 3);
        let r = i3.rref();
        assert_eq!(r.reduced, i3);
        assert_eq!(r.pivots, vec![0, 1, 2]);

        let a = Mat::from_rows(2, 2, &[[1, 1], [1, 1]]);
        let r = a.rref();
        assert_eq!(r.reduced, Mat::from_rows(2, 2, &[[1, 1], [0, 0]]));
        assert_eq!(r.rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Mat::identity(3, 4).kernel_basis().rows(), 0);
        let k = Mat::zeros(5, 2, 3).kernel_basis();
        assert_eq!(k.rows(), 3);
        assert_eq!(k.rank(), 3);
        let k = Mat::from_rows(2, 2, &[[1, 1]]).kernel_basis();
        assert_eq!(k, Mat::from_rows(2, 2, &[[1, 1]]));
    }

    #[test]
    fn solve_examples() {
        let b = Mat::from_rows(3, 2, &[[1, 2], [0, 1]]);
        assert_eq!(Mat::identity(3, 2).solve(&b).unwrap(), b);
        let z = Mat::zeros(3, 2, 2);
        assert!(z.solve(&z).unwrap().is_zero());
        assert_eq!(z.solve(&b), Err(Error::NoSolution));
    }

    #[test]
    fn image_examples() {
        assert_eq!(Mat::identity(2, 3).image_basis(), Mat::identity(2, 3));
        assert_eq!(Mat::zeros(2, 3, 3).image_basis().cols(), 0);
        let a = Mat::from_rows(2, 2, &[[1, 1], [1, 1]]);
        assert_eq!(a.image_basis(), Mat::from_rows(2, 1, &[[1], [1]]));
    }

    #[test]
    fn inverse_and_field() {
        let a = Mat::from_rows(5, 2, &[[2, 1], [1, 1]]);
        let ai = a.inverse().unwrap();
        assert!(a.mul(&ai).is_identity());
        assert!(Mat::from_rows(2, 2, &[[1, 1], [1, 1]]).inverse().is_none());
        for p in [2u32, 3, 5, 7, 101] {
            for a in 1..p {
                assert_eq!(mul(a, inv(a, p), p), 1);
            }
        }
        assert!(is_prime(2) && is_prime(101) && !is_prime(1) && !is_prime(91));
        let x = FieldElem::new(-1, 5);
        assert_eq!(x.residue(), 4);
        assert_eq!(x.mul(x.inv().unwrap()).residue(), 1);
    }

    #[test]
    fn echelon_coords() {
        let s = EchelonBasis::new(&Mat::from_rows(3, 3, &[[1, 1, 0], [0, 1, 1]]));
        assert_eq!(s.dim(), 2);
        let v = [1, 0, 2]; // (1,1,0) - (0,1,1) = (1,0,-1)
        let c = s.coords(&v).unwrap();
        let back = Mat::row_vector(3, &c).mul(&s.basis);
        assert_eq!(back.row(0), &v);
        assert!(!s.contains(&[0, 0, 1]));
        assert_eq!(s.complement(), vec![2]);
        assert_eq!(s.quotient_coords(&[0, 0, 1]), vec![1]);
    }
}
