//! The standard symplectic module, its tensor powers, contractions,
//! insertions, and the traceless subspace.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{integer_kernel, Matrix};
use crate::scalar::Scalar;
use crate::{Integer, Rational};

/// Default guard on `(2g)^s`.
pub const DEFAULT_TENSOR_BUDGET: u128 = 500_000;

/// `V = <e_g, ..., e_1, e_1*, ..., e_g*>` with Gram matrix `J`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StandardModule {
    pub g: usize,
}

impl StandardModule {
    pub fn new(g: usize) -> Result<Self> {
        if g == 0 {
            return Err(Error::ZeroGenus);
        }
        Ok(Self { g })
    }

    pub fn dim(&self) -> usize {
        2 * self.g
    }

    /// `J[i][2g-1-i] = 1` for `i < g` and `-1` for `i >= g`.
    pub fn form(&self, a: usize, b: usize) -> i64 {
        let n = self.dim();
        if a + b != n - 1 {
            0
        } else if a < self.g {
            1
        } else {
            -1
        }
    }

    pub fn gram<S: Scalar>(&self) -> Matrix<S> {
        let n = self.dim();
        Matrix::from_fn(n, n, |a, b| crate::scalar::from_i64(self.form(a, b)))
    }

    /// Semisimple weight of a basis vector: `e_k ↦ e_k`, `e_k* ↦ -e_k`.
    pub fn weight(&self, a: usize) -> Vec<i64> {
        let mut v = vec![0; self.g];
        if a < self.g {
            v[a] = 1;
        } else {
            v[2 * self.g - 1 - a] = -1;
        }
        v
    }

    pub fn label(&self, a: usize) -> String {
        if a < self.g {
            format!("e{}", self.g - a)
        } else {
            format!("e{}*", a - self.g + 1)
        }
    }

    /// The form pushed into `V ⊗ V` along `v ↦ <v, ->`: with `F = J^T` the
    /// coefficient matrix is `F^{-1} J F^{-T}`. Returned as `(a, b, coeff)`.
    pub fn psi(&self) -> Vec<(usize, usize, i64)> {
        let j: Matrix<Rational> = self.gram();
        let f_inv = j.transpose().inverse().expect("the symplectic form is nondegenerate");
        let c = f_inv.mul(&j).mul(&f_inv.transpose());
        let n = self.dim();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let x = c.get(a, b);
                if !x.is_zero() {
                    assert!(x.is_integer(), "ψ has non-integral coefficients");
                    let v: i64 = x.to_integer().try_into().expect("small coefficient");
                    out.push((a, b, v));
                }
            }
        }
        out
    }
}

/// A linear map stored column by column with sorted sparse entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseOperator<S> {
    rows: usize,
    columns: Vec<Vec<(usize, S)>>,
}

impl<S: Scalar> SparseOperator<S> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self { rows, columns: vec![Vec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self { rows: n, columns: (0..n).map(|i| vec![(i, S::one())]).collect() }
    }

    pub fn from_columns(rows: usize, columns: Vec<BTreeMap<usize, S>>) -> Self {
        Self {
            rows,
            columns: columns.into_iter().map(|c| c.into_iter().filter(|(_, v)| !v.is_zero()).collect()).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, j: usize) -> &[(usize, S)] {
        &self.columns[j]
    }

    pub fn nonzero_count(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.nonzero_count() == 0
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.cols(), other.rows, "dimension mismatch in composition");
        let columns = other
            .columns
            .iter()
            .map(|col| {
                let mut acc: BTreeMap<usize, S> = BTreeMap::new();
                for (k, c) in col {
                    for (i, v) in &self.columns[*k] {
                        let e = acc.entry(*i).or_insert_with(S::zero);
                        *e = e.clone() + c.clone() * v.clone();
                    }
                }
                acc
            })
            .collect();
        Self::from_columns(self.rows, columns)
    }

    pub fn linear_combination(&self, a: &S, other: &Self, b: &S) -> Self {
        assert_eq!((self.rows, self.cols()), (other.rows, other.cols()));
        let columns = self
            .columns
            .iter()
            .zip(&other.columns)
            .map(|(x, y)| {
                let mut acc: BTreeMap<usize, S> = BTreeMap::new();
                for (i, v) in x {
                    let e = acc.entry(*i).or_insert_with(S::zero);
                    *e = e.clone() + a.clone() * v.clone();
                }
                for (i, v) in y {
                    let e = acc.entry(*i).or_insert_with(S::zero);
                    *e = e.clone() + b.clone() * v.clone();
                }
                acc
            })
            .collect();
        Self::from_columns(self.rows, columns)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.linear_combination(&S::one(), other, &S::one())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.linear_combination(&S::one(), other, &-S::one())
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> SparseOperator<T> {
        SparseOperator {
            rows: self.rows,
            columns: self.columns.iter().map(|c| c.iter().map(|(i, v)| (*i, f(v))).collect()).collect(),
        }
    }

    /// Dense submatrix on the given row and column index sets.
    pub fn block<T: Scalar>(&self, rows: &[usize], cols: &[usize], f: impl Fn(&S) -> T) -> Matrix<T> {
        let pos: HashMap<usize, usize> = rows.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let mut m = Matrix::zeros(rows.len(), cols.len());
        for (cj, &j) in cols.iter().enumerate() {
            for (i, v) in &self.columns[j] {
                if let Some(&ri) = pos.get(i) {
                    m.set(ri, cj, f(v));
                }
            }
        }
        m
    }

    pub fn apply(&self, x: &BTreeMap<usize, S>) -> BTreeMap<usize, S> {
        let mut acc: BTreeMap<usize, S> = BTreeMap::new();
        for (k, c) in x {
            for (i, v) in &self.columns[*k] {
                let e = acc.entry(*i).or_insert_with(S::zero);
                *e = e.clone() + c.clone() * v.clone();
            }
        }
        acc.retain(|_, v| !v.is_zero());
        acc
    }
}

/// `V^{⊗s}` with the basis of multi-indices; factor 1 is the most
/// significant digit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TensorModule {
    pub base: StandardModule,
    pub s: usize,
}

impl TensorModule {
    pub fn new(g: usize, s: usize, budget: u128) -> Result<Self> {
        let base = StandardModule::new(g)?;
        let size = (2 * g as u128).checked_pow(s as u32).unwrap_or(u128::MAX);
        if size > budget {
            return Err(Error::SizeBudget { what: format!("(2g)^s for g={g}, s={s}"), size, budget });
        }
        Ok(Self { base, s })
    }

    pub fn dim(&self) -> usize {
        self.base.dim().pow(self.s as u32)
    }

    /// The module of degree `s - 2` (same base).
    pub fn lowered(&self) -> Self {
        Self { base: self.base, s: self.s - 2 }
    }

    pub fn multi_index(&self, mut idx: usize) -> Vec<usize> {
        let n = self.base.dim();
        let mut m = vec![0; self.s];
        for k in (0..self.s).rev() {
            m[k] = idx % n;
            idx /= n;
        }
        m
    }

    pub fn index(&self, m: &[usize]) -> usize {
        m.iter().fold(0, |acc, &a| acc * self.base.dim() + a)
    }

    pub fn weight(&self, idx: usize) -> Vec<i64> {
        let mut w = vec![0; self.base.g];
        for a in self.multi_index(idx) {
            for (x, y) in w.iter_mut().zip(self.base.weight(a)) {
                *x += y;
            }
        }
        w
    }

    /// Basis indices grouped by semisimple weight.
    pub fn weight_blocks(&self) -> BTreeMap<Vec<i64>, Vec<usize>> {
        let mut blocks: BTreeMap<Vec<i64>, Vec<usize>> = BTreeMap::new();
        for idx in 0..self.dim() {
            blocks.entry(self.weight(idx)).or_default().push(idx);
        }
        blocks
    }

    /// Pairs `1 ≤ i < j ≤ s`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (1..=self.s).flat_map(|i| (i + 1..=self.s).map(move |j| (i, j))).collect()
    }

    fn check_pair(&self, i: usize, j: usize) -> Result<()> {
        if i >= 1 && i < j && j <= self.s {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { i, j, s: self.s })
        }
    }

    /// `φ_{i,j}: V^{⊗s} → V^{⊗(s-2)}`, pairing factors `i` and `j`.
    pub fn contraction(&self, i: usize, j: usize) -> Result<SparseOperator<i64>> {
        self.check_pair(i, j)?;
        let low = self.lowered();
        let columns = (0..self.dim())
            .map(|idx| {
                let m = self.multi_index(idx);
                let c = self.base.form(m[i - 1], m[j - 1]);
                let mut col = BTreeMap::new();
                if c != 0 {
                    let rest: Vec<usize> =
                        m.iter().enumerate().filter(|(k, _)| *k != i - 1 && *k != j - 1).map(|(_, &a)| a).collect();
                    col.insert(low.index(&rest), c);
                }
                col
            })
            .collect();
        Ok(SparseOperator::from_columns(low.dim(), columns))
    }

    /// `ψ_{i,j}: V^{⊗(s-2)} → V^{⊗s}`, inserting ψ at factors `i` and `j`.
    pub fn insertion(&self, i: usize, j: usize) -> Result<SparseOperator<i64>> {
        self.check_pair(i, j)?;
        let low = self.lowered();
        let psi = self.base.psi();
        let columns = (0..low.dim())
            .map(|idx| {
                let rest = low.multi_index(idx);
                let mut col = BTreeMap::new();
                for &(a, b, c) in &psi {
                    let mut m = Vec::with_capacity(self.s);
                    let mut it = rest.iter();
                    for k in 1..=self.s {
                        if k == i {
                            m.push(a);
                        } else if k == j {
                            m.push(b);
                        } else {
                            m.push(*it.next().expect("degree bookkeeping"));
                        }
                    }
                    *col.entry(self.index(&m)).or_insert(0) += c;
                }
                col
            })
            .collect();
        Ok(SparseOperator::from_columns(self.dim(), columns))
    }

    /// `θ_{i,j} = ψ_{i,j} ∘ φ_{i,j}`.
    pub fn theta(&self, i: usize, j: usize) -> Result<SparseOperator<i64>> {
        Ok(self.insertion(i, j)?.compose(&self.contraction(i, j)?))
    }

    /// `Θ = Σ_{i<j} θ_{i,j}`.
    pub fn big_theta(&self) -> Result<SparseOperator<i64>> {
        let mut acc = SparseOperator::zero(self.dim(), self.dim());
        for (i, j) in self.pairs() {
            acc = acc.add(&self.theta(i, j)?);
        }
        Ok(acc)
    }
}

/// One weight block of the traceless subspace.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TracelessBlock {
    pub weight: Vec<i64>,
    pub indices: Vec<usize>,
    /// Reduced-echelon kernel basis, coordinates relative to `indices`.
    #[serde(skip)]
    pub rational_basis: Vec<Vec<Rational>>,
    /// Saturated integral basis of the same kernel.
    #[serde(skip)]
    pub integral_basis: Vec<Vec<Integer>>,
    /// Rank of the stacked insertions landing in this block.
    pub insertion_rank: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TracelessSubspace {
    pub g: usize,
    pub s: usize,
    pub ambient_dim: usize,
    pub dim: usize,
    pub contraction_rank: usize,
    pub insertion_rank: usize,
    #[serde(skip)]
    pub blocks: Vec<TracelessBlock>,
}

/// The stacked contraction `Φ` and stacked insertion `Ψ` on one weight block.
pub(crate) struct StackedBlock {
    pub phi: Matrix<Integer>,
    pub psi: Matrix<Integer>,
}

pub(crate) fn stacked_block(
    phis: &[SparseOperator<i64>],
    psis: &[SparseOperator<i64>],
    low_blocks: &BTreeMap<Vec<i64>, Vec<usize>>,
    weight: &[i64],
    indices: &[usize],
) -> StackedBlock {
    let low = low_blocks.get(weight).cloned().unwrap_or_default();
    let lift = |x: &i64| Integer::from(*x);
    let mut phi_rows: Vec<Vec<Integer>> = Vec::new();
    let mut psi_cols: Vec<Vec<Integer>> = Vec::new();
    for (phi, psi) in phis.iter().zip(psis) {
        let b = phi.block(&low, indices, lift);
        for i in 0..b.rows() {
            phi_rows.push(b.row(i).to_vec());
        }
        let c = psi.block(indices, &low, lift);
        for j in 0..c.cols() {
            psi_cols.push(c.column(j));
        }
    }
    StackedBlock {
        phi: Matrix::from_rows(indices.len(), phi_rows),
        psi: Matrix::from_columns(indices.len(), &psi_cols),
    }
}

/// `V^{<s>} = ∩ ker φ_{i,j}`, computed blockwise by weight.
pub fn traceless_subspace(g: usize, s: usize, budget: u128) -> Result<TracelessSubspace> {
    let module = TensorModule::new(g, s, budget)?;
    let blocks = module.weight_blocks();
    let (phis, psis, low_blocks) = if s >= 2 {
        let mut phis = Vec::new();
        let mut psis = Vec::new();
        for (i, j) in module.pairs() {
            phis.push(module.contraction(i, j)?);
            psis.push(module.insertion(i, j)?);
        }
        (phis, psis, module.lowered().weight_blocks())
    } else {
        (Vec::new(), Vec::new(), BTreeMap::new())
    };
    let mut out = Vec::with_capacity(blocks.len());
    let (mut dim, mut contraction_rank, mut insertion_rank) = (0, 0, 0);
    for (weight, indices) in blocks {
        let n = indices.len();
        let (rational_basis, integral_basis, ins_rank) = if phis.is_empty() {
            let unit = |k: usize| (0..n).map(|i| if i == k { 1 } else { 0 }).collect::<Vec<i64>>();
            (
                (0..n).map(|k| unit(k).into_iter().map(|x| Rational::from_integer(x.into())).collect()).collect(),
                (0..n).map(|k| unit(k).into_iter().map(Integer::from).collect()).collect(),
                0,
            )
        } else {
            let sb = stacked_block(&phis, &psis, &low_blocks, &weight, &indices);
            let rational = sb.phi.map(|x| Rational::from_integer(x.clone()));
            let rb = rational.kernel_basis();
            let ib = integer_kernel(&sb.phi);
            assert_eq!(rb.len(), ib.len(), "rational and integral kernels disagree");
            let ir = sb.psi.map(|x| Rational::from_integer(x.clone())).rank();
            (rb, ib, ir)
        };
        dim += rational_basis.len();
        contraction_rank += n - rational_basis.len();
        insertion_rank += ins_rank;
        out.push(TracelessBlock { weight, indices, rational_basis, integral_basis, insertion_rank: ins_rank });
    }
    Ok(TracelessSubspace { g, s, ambient_dim: module.dim(), dim, contraction_rank, insertion_rank, blocks: out })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(g: usize, s: usize) -> TensorModule {
        TensorModule::new(g, s, DEFAULT_TENSOR_BUDGET).unwrap()
    }

    #[test]
    fn gram_is_antisymmetric_and_unimodular() {
        for g in 1..=4 {
            let v = StandardModule::new(g).unwrap();
            let j: Matrix<Rational> = v.gram();
            assert_eq!(j.transpose(), j.scale(&Rational::from_integer((-1).into())));
            let inv = j.inverse().unwrap();
            assert!(inv.entries().all(|x| x.is_integer()));
            // <e_k, e_k*> = 1
            for k in 1..=g {
                assert_eq!(v.form(g - k, g + k - 1), 1);
            }
        }
    }

    #[test]
    fn psi_equals_gram_entries() {
        for g in 1..=3 {
            let v = StandardModule::new(g).unwrap();
            let psi = v.psi();
            assert_eq!(psi.len(), 2 * g);
            for (a, b, c) in psi {
                assert_eq!(c, v.form(a, b));
            }
        }
    }

    #[test]
    fn contraction_of_e1_e1star() {
        let m = t(1, 2);
        let phi = m.contraction(1, 2).unwrap();
        let idx = m.index(&[0, 1]);
        assert_eq!(phi.column(idx), &[(0, 1)]);
    }

    #[test]
    fn kappa_is_measured() {
        for (g, expected) in [(1, 2), (2, 4), (3, 6)] {
            let m = t(g, 2);
            let comp = m.contraction(1, 2).unwrap().compose(&m.insertion(1, 2).unwrap());
            assert_eq!(comp, SparseOperator::identity(1).map(|x: &i64| x * expected));
        }
    }

    #[test]
    fn index_errors() {
        let m = t(2, 3);
        assert!(matches!(m.contraction(2, 2), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(m.insertion(1, 4), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(m.contraction(0, 1), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn disjoint_contraction_and_insertion_commute() {
        // φ_{1,2} ψ_{3,4} = ψ_{1,2} φ_{1,2} on V^{⊗4} → V^{⊗2} reindexed
        let m4 = t(1, 4);
        let m2 = t(1, 2);
        let lhs = m4.contraction(1, 2).unwrap().compose(&m4.insertion(3, 4).unwrap());
        let rhs = m2.insertion(1, 2).unwrap().compose(&m2.contraction(1, 2).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn insertion_is_injective() {
        for (g, s) in [(1, 2), (1, 3), (2, 3), (1, 4)] {
            let m = t(g, s);
            for (i, j) in m.pairs() {
                let ins = m.insertion(i, j).unwrap();
                let all: Vec<usize> = (0..ins.rows()).collect();
                let cols: Vec<usize> = (0..ins.cols()).collect();
                let d = ins.block(&all, &cols, |x| Rational::from_integer((*x).into()));
                assert_eq!(d.rank(), ins.cols());
            }
        }
    }

    #[test]
    fn traceless_dimensions() {
        assert_eq!(traceless_subspace(2, 2, DEFAULT_TENSOR_BUDGET).unwrap().dim, 15);
        assert_eq!(traceless_subspace(1, 2, DEFAULT_TENSOR_BUDGET).unwrap().dim, 3);
        for g in 1..=3 {
            assert_eq!(traceless_subspace(g, 1, DEFAULT_TENSOR_BUDGET).unwrap().dim, 2 * g);
        }
        for (g, s) in [(1, 3), (2, 3), (1, 4)] {
            let t = traceless_subspace(g, s, DEFAULT_TENSOR_BUDGET).unwrap();
            assert_eq!(t.dim + t.contraction_rank, t.ambient_dim);
            assert_eq!(t.dim + t.insertion_rank, t.ambient_dim);
        }
    }

    #[test]
    fn budget_guard() {
        assert!(matches!(TensorModule::new(4, 10, DEFAULT_TENSOR_BUDGET), Err(Error::SizeBudget { .. })));
        assert!(TensorModule::new(4, 10, u128::MAX).is_ok());
    }

    fn transvection(v: &StandardModule, u: &[i64]) -> Vec<Vec<i64>> {
        // x ↦ x + ω(u, x) u
        let n = v.dim();
        (0..n)
            .map(|row| {
                (0..n)
                    .map(|col| {
                        let w: i64 = (0..n).map(|a| u[a] * v.form(a, col)).sum();
                        (row == col) as i64 + w * u[row]
                    })
                    .collect()
            })
            .collect()
    }

    fn kron_power(m: &[Vec<i64>], s: usize) -> Vec<Vec<i64>> {
        let mut acc = vec![vec![1i64]];
        for _ in 0..s {
            let (r, c) = (acc.len(), acc[0].len());
            let n = m.len();
            let mut next = vec![vec![0; c * n]; r * n];
            for i in 0..r {
                for j in 0..c {
                    for a in 0..n {
                        for b in 0..n {
                            next[i * n + a][j * n + b] = acc[i][j] * m[a][b];
                        }
                    }
                }
            }
            acc = next;
        }
        acc
    }

    fn dense(op: &SparseOperator<i64>) -> Vec<Vec<i64>> {
        let mut d = vec![vec![0; op.cols()]; op.rows()];
        for j in 0..op.cols() {
            for (i, v) in op.column(j) {
                d[*i][j] = *v;
            }
        }
        d
    }

    fn matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
        (0..a.len()).map(|i| (0..b[0].len()).map(|j| (0..b.len()).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
    }

    #[test]
    fn contractions_are_equivariant() {
        for (g, s) in [(1, 2), (1, 3), (2, 2), (2, 3)] {
            let m = t(g, s);
            let v = m.base;
            for u in [vec![1, 0, 0, 1, 0, 0], vec![1, -1, 2, 0, 1, 3], vec![0, 2, 1, 1, -1, 0]] {
                let gamma = transvection(&v, &u[..v.dim()]);
                let big = kron_power(&gamma, s);
                let small = kron_power(&gamma, s - 2);
                for (i, j) in m.pairs() {
                    let phi = dense(&m.contraction(i, j).unwrap());
                    assert_eq!(matmul(&small, &phi), matmul(&phi, &big));
                    let psi = dense(&m.insertion(i, j).unwrap());
                    assert_eq!(matmul(&big, &psi), matmul(&psi, &small));
                }
            }
        }
    }
}
