//! Dense exact matrices, row reduction over a field, and integer lattice
//! reduction (saturated kernels, Smith invariants).

use std::fmt;

use num_traits::Zero;

use crate::scalar::{ExactInteger, Scalar};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: fmt::Display> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.data[i * self.cols..(i + 1) * self.cols].iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<S: Clone + Zero> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![S::zero(); rows * cols] }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Rows must all have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<S>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r);
        }
        Self { rows: n, cols, data }
    }

    /// Build from column vectors of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<S>]) -> Self {
        Self::from_fn(rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<S> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<T: Clone + Zero>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn nonzero_count(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }

    pub fn entries(&self) -> impl Iterator<Item = &S> {
        self.data.iter()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }
}

impl<S: Scalar> Matrix<S> {
    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { S::one() } else { S::zero() })
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] = out.data[idx].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.clone() - b.clone()).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.clone() * c.clone()).collect() }
    }

    /// Reduced row echelon form and pivot columns. Requires a field.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = S::one() / m.get(r, c).clone();
            for j in c..m.cols {
                let v = m.get(r, j).clone() * inv.clone();
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let pv = m.get(r, j);
                    if !pv.is_zero() {
                        let v = m.get(i, j).clone() - f.clone() * pv.clone();
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel, one vector per free column, read off the
    /// reduced echelon form.
    pub fn kernel_basis(&self) -> Vec<Vec<S>> {
        let (m, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![S::zero(); self.cols];
                v[f] = S::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -m.get(r, f).clone();
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                S::one()
            } else {
                S::zero()
            }
        });
        let (m, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| m.get(i, n + j).clone()))
    }
}

/// Integer row reduction of `[A^T | I]`: returns a basis of the saturated
/// kernel `{x ∈ Z^n : A x = 0}`.
pub fn integer_kernel<I: ExactInteger>(a: &Matrix<I>) -> Vec<Vec<I>> {
    let (m, n) = (a.rows(), a.cols());
    let mut w = Matrix::from_fn(n, m + n, |i, j| {
        if j < m {
            a.get(j, i).clone()
        } else if j - m == i {
            I::one()
        } else {
            I::zero()
        }
    });
    let rank = echelon_columns(&mut w, m);
    (rank..n).map(|i| w.row(i)[m..].to_vec()).collect()
}

/// Unimodular row reduction on the first `upto` columns. Returns the number
/// of pivot rows; rows below are zero on those columns.
fn echelon_columns<I: ExactInteger>(w: &mut Matrix<I>, upto: usize) -> usize {
    let mut r = 0;
    for c in 0..upto {
        if r == w.rows() {
            break;
        }
        loop {
            let Some(p) = (r..w.rows())
                .filter(|&i| !w.get(i, c).is_zero())
                .min_by(|&x, &y| w.get(x, c).abs().cmp(&w.get(y, c).abs()))
            else {
                break;
            };
            w.swap_rows(r, p);
            let mut done = true;
            for i in r + 1..w.rows() {
                if w.get(i, c).is_zero() {
                    continue;
                }
                let q = w.get(i, c).div_floor(w.get(r, c));
                row_axpy(w, i, r, &q);
                if !w.get(i, c).is_zero() {
                    done = false;
                }
            }
            if done {
                r += 1;
                break;
            }
        }
    }
    r
}

/// `row[dst] -= q * row[src]`
fn row_axpy<I: ExactInteger>(w: &mut Matrix<I>, dst: usize, src: usize, q: &I) {
    for j in 0..w.cols() {
        let s = w.get(src, j);
        if !s.is_zero() {
            let v = w.get(dst, j).clone() - q.clone() * s.clone();
            w.set(dst, j, v);
        }
    }
}

fn col_axpy<I: ExactInteger>(w: &mut Matrix<I>, dst: usize, src: usize, q: &I) {
    for i in 0..w.rows() {
        let s = w.get(i, src);
        if !s.is_zero() {
            let v = w.get(i, dst).clone() - q.clone() * s.clone();
            w.set(i, dst, v);
        }
    }
}

fn swap_cols<I: ExactInteger>(w: &mut Matrix<I>, a: usize, b: usize) {
    if a != b {
        for i in 0..w.rows() {
            let t = w.get(i, a).clone();
            let u = w.get(i, b).clone();
            w.set(i, a, u);
            w.set(i, b, t);
        }
    }
}

/// Nonzero Smith invariants `d_1 | d_2 | ...` (all positive).
pub fn smith_invariants<I: ExactInteger>(a: &Matrix<I>) -> Vec<I> {
    let mut w = a.clone();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < w.rows().min(w.cols()) {
        let mut best: Option<(usize, usize)> = None;
        for i in t..w.rows() {
            for j in t..w.cols() {
                let v = w.get(i, j);
                if !v.is_zero() && best.is_none_or(|(bi, bj)| v.abs() < w.get(bi, bj).abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        w.swap_rows(t, bi);
        swap_cols(&mut w, t, bj);
        loop {
            let mut clean = true;
            for i in t + 1..w.rows() {
                if !w.get(i, t).is_zero() {
                    let q = w.get(i, t).div_floor(w.get(t, t));
                    row_axpy(&mut w, i, t, &q);
                    if !w.get(i, t).is_zero() {
                        clean = false;
                    }
                }
            }
            for j in t + 1..w.cols() {
                if !w.get(t, j).is_zero() {
                    let q = w.get(t, j).div_floor(w.get(t, t));
                    col_axpy(&mut w, j, t, &q);
                    if !w.get(t, j).is_zero() {
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
            // move the smallest remaining entry of row/column t to the pivot
            let mut bi = t;
            let mut bj = t;
            for i in t..w.rows() {
                if !w.get(i, t).is_zero() && w.get(i, t).abs() < w.get(bi, bj).abs() {
                    (bi, bj) = (i, t);
                }
            }
            for j in t..w.cols() {
                if !w.get(t, j).is_zero() && w.get(t, j).abs() < w.get(bi, bj).abs() {
                    (bi, bj) = (t, j);
                }
            }
            w.swap_rows(t, bi);
            swap_cols(&mut w, t, bj);
        }
        diag.push(w.get(t, t).abs());
        t += 1;
    }
    normalize_invariants(diag)
}

/// Invariant factors of a diagonal matrix: repeatedly replace `(d_i, d_j)`
/// by `(gcd, lcm)` until the list is a divisibility chain.
pub fn normalize_invariants<I: ExactInteger>(mut diag: Vec<I>) -> Vec<I> {
    diag.retain(|d| !d.is_zero());
    for d in diag.iter_mut() {
        *d = d.abs();
    }
    let n = diag.len();
    for i in 0..n {
        for j in i + 1..n {
            if !(diag[j].is_multiple_of(&diag[i])) {
                let g = diag[i].gcd(&diag[j]);
                let l = diag[i].lcm(&diag[j]);
                diag[i] = g;
                diag[j] = l;
            }
        }
    }
    diag
}
