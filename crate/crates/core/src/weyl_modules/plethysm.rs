//! Young symmetrizers on `V^{⊗s}`, the integral Weyl lattices they cut out
//! of the traceless tensors, and the measured behaviour of `Θ`.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use num_traits::{One, Signed, ToPrimitive};
use serde::Serialize;

use super::characters::weyl_dimension;
use super::tensor::{stacked_block, traceless_subspace, SparseOperator, TensorModule};
use crate::error::{Error, Result};
use crate::linalg::{normalize_invariants, smith_invariants, Matrix};
use crate::root_datum::{require_odd_prime, Weight};
use crate::scalar::serialize_display_vec;
use crate::{Integer, Rational};

/// Small odd primes always included in lattice reports.
pub const REPORTED_PRIMES: [u64; 5] = [3, 5, 7, 11, 13];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TableauFill {
    /// `1, 2, ...` along the first row, then the second row, ...
    Rows,
    /// `1, 2, ...` down the first column, then the second column, ...
    Columns,
}

/// Standard tableau of shape `partition`, as rows of 0-based tensor slots.
pub fn tableau(partition: &[usize], fill: TableauFill) -> Vec<Vec<usize>> {
    let mut rows: Vec<Vec<usize>> = partition.iter().map(|&len| Vec::with_capacity(len)).collect();
    match fill {
        TableauFill::Rows => {
            let mut next = 0;
            for (row, &len) in rows.iter_mut().zip(partition) {
                row.extend(next..next + len);
                next += len;
            }
        }
        TableauFill::Columns => {
            let width = partition.first().copied().unwrap_or(0);
            let mut next = 0;
            for c in 0..width {
                for (row, &len) in rows.iter_mut().zip(partition) {
                    if len > c {
                        row.push(next);
                        next += 1;
                    }
                }
            }
        }
    }
    rows
}

/// All permutations preserving each block, with their signs. A permutation
/// `σ` moves the factor in slot `k` to slot `σ[k]`.
fn block_group(s: usize, blocks: &[Vec<usize>]) -> Vec<(Vec<usize>, i64)> {
    let mut group = vec![((0..s).collect::<Vec<usize>>(), 1i64)];
    for block in blocks.iter().filter(|b| b.len() > 1) {
        let mut next = Vec::new();
        for (sigma, sign) in &group {
            for image in block.iter().copied().permutations(block.len()) {
                let mut tau = sigma.clone();
                for (&from, &to) in block.iter().zip(&image) {
                    tau[from] = to;
                }
                next.push((tau, sign * permutation_sign(block, &image)));
            }
        }
        group = next;
    }
    group
}

fn permutation_sign(domain: &[usize], image: &[usize]) -> i64 {
    let pos: Vec<usize> = image.iter().map(|x| domain.iter().position(|y| y == x).expect("block permutation")).collect();
    let inversions = (0..pos.len()).flat_map(|i| (i + 1..pos.len()).map(move |j| (i, j))).filter(|&(i, j)| pos[i] > pos[j]).count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

fn columns_of(rows: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let width = rows.first().map_or(0, Vec::len);
    (0..width).map(|c| rows.iter().filter(|r| r.len() > c).map(|r| r[c]).collect()).collect()
}

/// `c_λ = a_λ ∘ b_λ` (column antisymmetrizer first) on `V^{⊗s}`.
pub fn young_symmetrizer(module: &TensorModule, partition: &[usize], fill: TableauFill) -> Result<SparseOperator<i64>> {
    let s: usize = partition.iter().sum();
    if s != module.s {
        return Err(Error::PartitionMismatch(format!("partition {partition:?} has size {s}, tensor degree is {}", module.s)));
    }
    if partition.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::PartitionMismatch(format!("{partition:?} is not weakly decreasing")));
    }
    let rows = tableau(partition, fill);
    let row_group = block_group(s, &rows);
    let col_group = block_group(s, &columns_of(&rows));
    let columns = (0..module.dim())
        .map(|idx| {
            let m = module.multi_index(idx);
            let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
            for (q, sign) in &col_group {
                let qm = permute(&m, q);
                for (p, _) in &row_group {
                    *acc.entry(module.index(&permute(&qm, p))).or_insert(0) += sign;
                }
            }
            acc
        })
        .collect();
    Ok(SparseOperator::from_columns(module.dim(), columns))
}

fn permute(m: &[usize], sigma: &[usize]) -> Vec<usize> {
    let mut out = vec![0; m.len()];
    for (k, &a) in m.iter().enumerate() {
        out[sigma[k]] = a;
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LatticeReport {
    pub lambda: Weight,
    pub s: usize,
    pub partition: Vec<usize>,
    pub rank: usize,
    pub rank_column_tableau: usize,
    #[serde(serialize_with = "crate::scalar::serialize_display")]
    pub weyl_dimension: Integer,
    pub rank_matches_weyl_dimension: bool,
    /// Smith invariants of `c_λ(L)` inside `Z^N`, `L` the saturated
    /// traceless lattice.
    #[serde(serialize_with = "serialize_display_vec")]
    pub elementary_divisors: Vec<Integer>,
    pub p: u64,
    pub p_free: bool,
    pub p_free_by_prime: BTreeMap<u64, bool>,
}

/// Image of the saturated traceless lattice under `c_λ`.
pub fn weyl_lattice(lambda: &Weight, p: u64, budget: u128) -> Result<LatticeReport> {
    lambda.require_dominant()?;
    require_odd_prime(p)?;
    let s = lambda.size() as usize;
    if lambda.central() != lambda.size() {
        return Err(Error::PartitionMismatch(format!("{lambda} needs central value {s} to sit in degree {s}")));
    }
    if p as usize <= s {
        return Err(Error::PrimeTooSmall { p, s });
    }
    let g = lambda.genus();
    let partition: Vec<usize> = lambda.coords().iter().filter(|&&a| a > 0).map(|&a| a as usize).collect();
    let module = TensorModule::new(g, s, budget)?;
    let traceless = traceless_subspace(g, s, budget)?;
    let row_sym = young_symmetrizer(&module, &partition, TableauFill::Rows)?;
    let col_sym = young_symmetrizer(&module, &partition, TableauFill::Columns)?;
    let lift = |x: &i64| Integer::from(*x);
    let mut divisors = Vec::new();
    let mut rank_columns = 0;
    for block in &traceless.blocks {
        if block.integral_basis.is_empty() {
            continue;
        }
        let basis = Matrix::from_columns(block.indices.len(), &block.integral_basis);
        let image = row_sym.block(&block.indices, &block.indices, lift).mul(&basis);
        divisors.extend(smith_invariants(&image));
        let other = col_sym.block(&block.indices, &block.indices, |x| Rational::from_integer((*x).into()));
        rank_columns += other.mul(&basis.map(|x| Rational::from_integer(x.clone()))).rank();
    }
    let divisors = normalize_invariants(divisors);
    let rank = divisors.len();
    let dim = weyl_dimension(lambda)?;
    let free = |q: u64| divisors.iter().all(|d| !num_integer::Integer::is_multiple_of(d, &Integer::from(q)));
    let mut by_prime: BTreeMap<u64, bool> = REPORTED_PRIMES.iter().map(|&q| (q, free(q))).collect();
    let p_free = free(p);
    by_prime.insert(p, p_free);
    Ok(LatticeReport {
        lambda: lambda.clone(),
        s,
        partition,
        rank,
        rank_column_tableau: rank_columns,
        rank_matches_weyl_dimension: Integer::from(rank) == dim,
        weyl_dimension: dim,
        elementary_divisors: divisors,
        p,
        p_free,
        p_free_by_prime: by_prime,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdempotentReport {
    pub g: usize,
    pub s: usize,
    pub p: u64,
    pub ambient_dim: usize,
    /// `φ_{1,2} ψ_{1,2}` on `V^{⊗0}`.
    pub kappa: i64,
    /// Every `φ_{i,j} ψ_{i,j}` equals `κ · Id`.
    pub diagonal_terms_scalar: bool,
    /// Pairs `(i,j) ≠ (k,l)` sharing an index with `φ_{i,j} ψ_{k,l} ≠ 0`.
    pub overlapping_cross_terms_nonzero: usize,
    pub theta_nonzero: usize,
    pub theta_square_equals_kappa_theta: bool,
    pub theta_square_minus_kappa_theta_nonzero: usize,
    /// `Id - Θ/g` squares to itself.
    pub id_minus_theta_over_g_idempotent: bool,
    /// `Id - Θ/κ` squares to itself.
    pub id_minus_theta_over_kappa_idempotent: bool,
    pub traceless_dim: usize,
    pub insertion_rank: usize,
    /// `V^{⊗s} = V^{<s>} ⊕ im Ψ` over `Q`.
    pub rational_direct_sum: bool,
    /// Primes dividing a denominator of the projector onto `V^{<s>}` along
    /// `im Ψ`.
    pub projector_denominator_primes: Vec<u64>,
    /// The projector has `Z_(p)` coefficients, so the sum is direct over `Z_(p)`.
    pub p_integral: bool,
}

/// Measure `Θ` and the splitting `V^{⊗s} = ker Φ ⊕ im Ψ`.
pub fn idempotent_check(g: usize, s: usize, p: u64, budget: u128) -> Result<IdempotentReport> {
    require_odd_prime(p)?;
    if (2 * g as u64) % p == 0 {
        return Err(Error::PrimeDividesTwoG { p, two_g: 2 * g });
    }
    let module = TensorModule::new(g, s, budget)?;
    let two = TensorModule::new(g, 2, u128::MAX)?;
    let kappa_op = two.contraction(1, 2)?.compose(&two.insertion(1, 2)?);
    let kappa = kappa_op.column(0).first().map_or(0, |(_, v)| *v);

    let pairs = module.pairs();
    let mut phis = Vec::new();
    let mut psis = Vec::new();
    for &(i, j) in &pairs {
        phis.push(module.contraction(i, j)?);
        psis.push(module.insertion(i, j)?);
    }
    let mut diagonal_terms_scalar = true;
    let mut cross = 0;
    for (a, &(i, j)) in pairs.iter().enumerate() {
        for (b, &(k, l)) in pairs.iter().enumerate() {
            let comp = phis[a].compose(&psis[b]);
            if a == b {
                let scalar = SparseOperator::<i64>::identity(comp.rows()).map(|x| x * kappa);
                diagonal_terms_scalar &= comp == scalar;
            } else if [i, j].iter().any(|x| *x == k || *x == l) && !comp.is_zero() {
                cross += 1;
            }
        }
    }

    let theta = module.big_theta()?;
    let theta_sq = theta.compose(&theta);
    let diff = theta_sq.linear_combination(&1, &theta, &-kappa);

    let n = module.dim();
    let q = |x: &i64| Rational::from_integer((*x).into());
    let theta_q = theta.map(q);
    let id = SparseOperator::<Rational>::identity(n);
    let idempotent_with = |c: i64| {
        let e = id.linear_combination(&Rational::one(), &theta_q, &-Rational::from_integer(c.into()).recip());
        e.compose(&e) == e
    };

    let traceless = traceless_subspace(g, s, budget)?;
    let blocks = module.weight_blocks();
    let low_blocks = if s >= 2 { module.lowered().weight_blocks() } else { BTreeMap::new() };
    let mut direct = true;
    let mut primes = BTreeSet::new();
    for block in &traceless.blocks {
        let indices = &blocks[&block.weight];
        let k = block.integral_basis.len();
        let mut columns: Vec<Vec<Rational>> =
            block.integral_basis.iter().map(|v| v.iter().map(|x| Rational::from_integer(x.clone())).collect()).collect();
        if !phis.is_empty() {
            let sb = stacked_block(&phis, &psis, &low_blocks, &block.weight, indices);
            let psi_q = sb.psi.map(|x| Rational::from_integer(x.clone()));
            let (_, pivots) = psi_q.rref();
            columns.extend(pivots.iter().map(|&j| psi_q.column(j)));
        }
        let basis = Matrix::from_columns(indices.len(), &columns);
        let Some(inv) = basis.inverse() else {
            direct = false;
            continue;
        };
        let head = Matrix::from_fn(indices.len(), k, |i, j| basis.get(i, j).clone());
        let coords = Matrix::from_fn(k, indices.len(), |i, j| inv.get(i, j).clone());
        let projector = head.mul(&coords);
        for x in projector.entries() {
            let den = x.denom().abs();
            if !den.is_one() {
                primes.extend(prime_factors(&den));
            }
        }
    }
    let primes: Vec<u64> = primes.into_iter().collect();
    Ok(IdempotentReport {
        g,
        s,
        p,
        ambient_dim: n,
        kappa,
        diagonal_terms_scalar,
        overlapping_cross_terms_nonzero: cross,
        theta_nonzero: theta.nonzero_count(),
        theta_square_equals_kappa_theta: diff.is_zero(),
        theta_square_minus_kappa_theta_nonzero: diff.nonzero_count(),
        id_minus_theta_over_g_idempotent: idempotent_with(g as i64),
        id_minus_theta_over_kappa_idempotent: kappa != 0 && idempotent_with(kappa),
        traceless_dim: traceless.dim,
        insertion_rank: traceless.insertion_rank,
        rational_direct_sum: direct && traceless.dim + traceless.insertion_rank == n,
        p_integral: !primes.contains(&p),
        projector_denominator_primes: primes,
    })
}

fn prime_factors(n: &Integer) -> Vec<u64> {
    let mut n = n.to_u64().expect("projector denominators stay small");
    let mut out = Vec::new();
    let mut k = 2;
    while k * k <= n {
        if n % k == 0 {
            out.push(k);
            while n % k == 0 {
                n /= k;
            }
        }
        k += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl_modules::tensor::DEFAULT_TENSOR_BUDGET;

    fn w(coords: &[i64]) -> Weight {
        Weight::with_standard_central(coords.to_vec())
    }

    #[test]
    fn tableaux() {
        assert_eq!(tableau(&[2, 1], TableauFill::Rows), vec![vec![0, 1], vec![2]]);
        assert_eq!(tableau(&[2, 1], TableauFill::Columns), vec![vec![0, 2], vec![1]]);
        assert_eq!(columns_of(&tableau(&[2, 2], TableauFill::Rows)), vec![vec![0, 2], vec![1, 3]]);
    }

    #[test]
    fn symmetrizer_is_quasi_idempotent() {
        // c_λ^2 = (s! / f^λ) c_λ; for (2,1), s!/f = 6/2 = 3
        let m = TensorModule::new(1, 3, DEFAULT_TENSOR_BUDGET).unwrap();
        let c = young_symmetrizer(&m, &[2, 1], TableauFill::Rows).unwrap();
        assert_eq!(c.compose(&c), c.map(|x| 3 * x));
        let sym = young_symmetrizer(&m, &[3], TableauFill::Rows).unwrap();
        assert_eq!(sym.compose(&sym), sym.map(|x| 6 * x));
    }

    #[test]
    fn symmetrizer_rejects_bad_shapes() {
        let m = TensorModule::new(2, 3, DEFAULT_TENSOR_BUDGET).unwrap();
        assert!(matches!(young_symmetrizer(&m, &[2, 2], TableauFill::Rows), Err(Error::PartitionMismatch(_))));
        assert!(matches!(young_symmetrizer(&m, &[1, 2], TableauFill::Rows), Err(Error::PartitionMismatch(_))));
    }

    #[test]
    fn lattice_ranks_genus_two() {
        for (lam, dim) in [([1, 0], 4), ([1, 1], 5), ([2, 0], 10)] {
            let r = weyl_lattice(&w(&lam), 7, DEFAULT_TENSOR_BUDGET).unwrap();
            assert_eq!(r.rank, dim);
            assert_eq!(r.rank_column_tableau, dim);
            assert!(r.p_free);
        }
    }

    #[test]
    fn lattice_genus_one() {
        for n in 0..=4 {
            let r = weyl_lattice(&w(&[n]), 7, DEFAULT_TENSOR_BUDGET).unwrap();
            assert_eq!(r.rank as i64, n + 1);
        }
    }

    #[test]
    fn lattice_errors() {
        assert!(matches!(weyl_lattice(&w(&[2, 1]), 3, DEFAULT_TENSOR_BUDGET), Err(Error::PrimeTooSmall { .. })));
        assert!(matches!(weyl_lattice(&w(&[1, 0]), 2, DEFAULT_TENSOR_BUDGET), Err(Error::CharacteristicTwo)));
        assert!(matches!(weyl_lattice(&w(&[0, 1]), 7, DEFAULT_TENSOR_BUDGET), Err(Error::NotDominant(_))));
        let off = Weight::new(vec![1, 0], 3).unwrap();
        assert!(matches!(weyl_lattice(&off, 7, DEFAULT_TENSOR_BUDGET), Err(Error::PartitionMismatch(_))));
    }

    #[test]
    fn degree_two_theta_is_kappa_multiple() {
        let r = idempotent_check(2, 2, 3, DEFAULT_TENSOR_BUDGET).unwrap();
        assert_eq!(r.kappa, 4);
        assert!(r.theta_square_equals_kappa_theta);
        assert!(r.id_minus_theta_over_kappa_idempotent);
        assert!(!r.id_minus_theta_over_g_idempotent);
        assert_eq!(r.traceless_dim, 15);
        assert!(r.rational_direct_sum);
    }

    #[test]
    fn degree_one_is_trivial() {
        let r = idempotent_check(2, 1, 3, DEFAULT_TENSOR_BUDGET).unwrap();
        assert_eq!(r.theta_nonzero, 0);
        assert!(r.id_minus_theta_over_g_idempotent);
        assert_eq!(r.traceless_dim, 4);
    }

    #[test]
    fn prime_dividing_two_g_rejected() {
        assert!(matches!(idempotent_check(3, 2, 3, DEFAULT_TENSOR_BUDGET), Err(Error::PrimeDividesTwoG { .. })));
    }
}
