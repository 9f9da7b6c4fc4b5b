//! Weight multiplicities by Freudenthal's recursion and the Weyl dimension
//! formula, for GSp(2g) and for the Levi subgroups `GL(r) × GSp(2g-2r)`.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::root_datum::{dot, h_pairing, positive_roots, simple_roots, Weight};
use crate::scalar::{from_i64, Scalar};
use crate::Integer;

/// Guard on the dimension of modules whose weights are enumerated.
pub const MULTIPLICITY_BUDGET: u64 = 1_000_000;

/// Semisimple weight → multiplicity.
pub type Character = BTreeMap<Vec<i64>, i64>;

/// A root subsystem given by its positive and simple roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSubsystem {
    pub positive: Vec<Vec<i64>>,
    pub simple: Vec<Vec<i64>>,
}

impl RootSubsystem {
    pub fn symplectic(g: usize) -> Result<Self> {
        Ok(Self {
            positive: positive_roots(g).into_iter().map(|r| r.vector).collect(),
            simple: simple_roots(g)?.into_iter().map(|r| r.vector).collect(),
        })
    }

    /// Roots of the Levi `GL(r) × GSp(2g-2r)`: type `A_{r-1}` on the first
    /// `r` positions and type `C_{g-r}` on the rest.
    pub fn levi(g: usize, r: usize) -> Result<Self> {
        if r > g {
            return Err(Error::InvalidParabolic { g, r });
        }
        let mut positive = Vec::new();
        let mut simple = Vec::new();
        let diff = |k: usize, l: usize| {
            let mut v = vec![0; g];
            v[k] = 1;
            v[l] = -1;
            v
        };
        for k in 0..r {
            for l in k + 1..r {
                positive.push(diff(k, l));
            }
            if k + 1 < r {
                simple.push(diff(k, k + 1));
            }
        }
        let h = g - r;
        if h > 0 {
            for root in positive_roots(h) {
                let mut v = vec![0; r];
                v.extend(root.vector);
                positive.push(v);
            }
            for root in simple_roots(h)? {
                let mut v = vec![0; r];
                v.extend(root.vector);
                simple.push(v);
            }
        }
        Ok(Self { positive, simple })
    }

    pub fn two_rho(&self, g: usize) -> Vec<i64> {
        let mut t = vec![0; g];
        for a in &self.positive {
            for (x, y) in t.iter_mut().zip(a) {
                *x += y;
            }
        }
        t
    }

    pub fn is_dominant(&self, mu: &[i64]) -> bool {
        self.simple.iter().all(|a| dot(mu, a) >= 0)
    }
}

/// `Π_{α>0} (μ+ρ, α) / (ρ, α)` evaluated in `S`.
pub fn dimension_in<S: Scalar>(mu: &[i64], system: &RootSubsystem) -> S {
    let two_rho = system.two_rho(mu.len());
    let shifted: Vec<i64> = mu.iter().zip(&two_rho).map(|(m, r)| 2 * m + r).collect();
    system.positive.iter().fold(S::one(), |acc, a| {
        acc * from_i64::<S>(dot(&shifted, a)) / from_i64::<S>(dot(&two_rho, a))
    })
}

/// Freudenthal's recursion in integer form:
/// `m(ν) (λ-ν, λ+ν+2ρ) = 2 Σ_{α>0} Σ_{k≥1} m(ν+kα) (ν+kα, α)`.
pub fn freudenthal(highest: &[i64], system: &RootSubsystem) -> Character {
    let two_rho = system.two_rho(highest.len());
    let lam = highest.to_vec();
    let mut mult: Character = BTreeMap::new();
    mult.insert(lam.clone(), 1);
    let mut frontier = vec![lam.clone()];
    let mut level = 0i64;
    while !frontier.is_empty() {
        level += 1;
        let candidates: BTreeSet<Vec<i64>> = frontier
            .iter()
            .flat_map(|nu| system.simple.iter().map(move |a| nu.iter().zip(a).map(|(x, y)| x - y).collect()))
            .collect();
        let mut next = Vec::new();
        for nu in candidates {
            let diff: Vec<i64> = lam.iter().zip(&nu).map(|(a, b)| a - b).collect();
            let sum: Vec<i64> = lam.iter().zip(&nu).zip(&two_rho).map(|((a, b), r)| a + b + r).collect();
            let den = dot(&diff, &sum);
            if den <= 0 {
                continue;
            }
            let mut num = 0i64;
            for a in &system.positive {
                for k in 1..=level {
                    let up: Vec<i64> = nu.iter().zip(a).map(|(x, y)| x + k * y).collect();
                    if let Some(m) = mult.get(&up) {
                        num += m * dot(&up, a);
                    }
                }
            }
            num *= 2;
            assert_eq!(num % den, 0, "Freudenthal recursion produced a fractional multiplicity");
            let m = num / den;
            if m > 0 {
                mult.insert(nu.clone(), m);
                next.push(nu);
            }
        }
        frontier = next;
    }
    mult
}

/// Weyl dimension of the irreducible GSp(2g)-module of highest weight `λ`.
pub fn weyl_dimension(lambda: &Weight) -> Result<Integer> {
    lambda.require_dominant()?;
    if lambda.genus() == 0 {
        return Ok(Integer::from(1));
    }
    let d: crate::Rational = dimension_in(lambda.coords(), &RootSubsystem::symplectic(lambda.genus())?);
    assert!(d.is_integer(), "Weyl dimension is not an integer");
    Ok(d.to_integer())
}

/// Dimension of the irreducible `GL(r) × GSp(2g-2r)`-module of highest
/// weight `μ` (dominant for the Levi).
pub fn levi_dimension(mu: &Weight, r: usize) -> Result<Integer> {
    let system = RootSubsystem::levi(mu.genus(), r)?;
    if !system.is_dominant(mu.coords()) {
        return Err(Error::NotDominant(format!("{mu} for the Levi of P_{r}")));
    }
    let d: crate::Rational = dimension_in(mu.coords(), &system);
    Ok(d.to_integer())
}

/// Weight multiplicities of `V_λ`; weights carry the central value `c`.
pub fn weight_multiplicities(lambda: &Weight) -> Result<BTreeMap<Weight, u64>> {
    lambda.require_dominant()?;
    let dim = weyl_dimension(lambda)?;
    if dim > Integer::from(MULTIPLICITY_BUDGET) {
        return Err(Error::SizeBudget {
            what: "weight multiplicities".into(),
            size: u128::try_from(dim).unwrap_or(u128::MAX),
            budget: MULTIPLICITY_BUDGET as u128,
        });
    }
    if lambda.genus() == 0 {
        return Ok(BTreeMap::from([(lambda.clone(), 1)]));
    }
    let ch = freudenthal(lambda.coords(), &RootSubsystem::symplectic(lambda.genus())?);
    Ok(ch
        .into_iter()
        .map(|(nu, m)| (Weight::from_parts_unchecked(nu, lambda.central()), m as u64))
        .collect())
}

/// Character of the Levi module of highest weight `μ`.
pub fn levi_character(mu: &Weight, r: usize) -> Result<Character> {
    let system = RootSubsystem::levi(mu.genus(), r)?;
    if !system.is_dominant(mu.coords()) {
        return Err(Error::NotDominant(format!("{mu} for the Levi of P_{r}")));
    }
    Ok(freudenthal(mu.coords(), &system))
}

/// Dimensions of the graded pieces `V^i / V^{i+1}` of the H-filtration, keyed
/// by the H-eigenvalue `μ(H)`.
pub fn h_filtration(lambda: &Weight) -> Result<BTreeMap<i64, u64>> {
    let mut bins = BTreeMap::new();
    for (mu, m) in weight_multiplicities(lambda)? {
        *bins.entry(h_pairing(&mu)).or_insert(0) += m;
    }
    Ok(bins)
}

pub fn character_dimension(ch: &Character) -> i64 {
    ch.values().sum()
}

/// Multiply a character by `1 - e^{-α}`.
pub fn times_one_minus(ch: &Character, alpha: &[i64]) -> Character {
    let mut out = ch.clone();
    for (nu, m) in ch {
        let shifted: Vec<i64> = nu.iter().zip(alpha).map(|(x, a)| x - a).collect();
        *out.entry(shifted).or_insert(0) -= m;
    }
    out.retain(|_, m| !m.is_zero());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(coords: &[i64], c: i64) -> Weight {
        Weight::new(coords.to_vec(), c).unwrap()
    }

    #[test]
    fn dimensions_genus_two() {
        // the classical table for Sp(4)
        for (lam, dim) in [((1, 0), 4), ((1, 1), 5), ((2, 0), 10), ((2, 1), 16), ((2, 2), 14), ((3, 0), 20)] {
            let l = w(&[lam.0, lam.1], lam.0 + lam.1);
            assert_eq!(weyl_dimension(&l).unwrap(), Integer::from(dim));
        }
        assert_eq!(weyl_dimension(&Weight::zero(3)).unwrap(), Integer::from(1));
        assert!(weyl_dimension(&w(&[0, 1], 1)).is_err());
    }

    #[test]
    fn sym_n_genus_one() {
        for n in 0..8 {
            assert_eq!(weyl_dimension(&w(&[n], n)).unwrap(), Integer::from(n + 1));
        }
    }

    #[test]
    fn freudenthal_sums_to_weyl_dimension() {
        for lam in [vec![1, 0], vec![1, 1], vec![2, 1], vec![3, 1], vec![2, 1, 0], vec![2, 2, 1], vec![1, 1, 1, 0]] {
            let l = Weight::with_standard_central(lam);
            let total: u64 = weight_multiplicities(&l).unwrap().values().sum();
            assert_eq!(Integer::from(total), weyl_dimension(&l).unwrap(), "{l}");
        }
    }

    #[test]
    fn five_dimensional_multiplicities() {
        let m = weight_multiplicities(&w(&[1, 1], 2)).unwrap();
        assert_eq!(m.len(), 5);
        assert_eq!(m[&w(&[0, 0], 2)], 1);
        assert_eq!(m.values().filter(|&&x| x == 1).count(), 5);
    }

    #[test]
    fn adjoint_zero_weight_multiplicity_is_rank() {
        // V_{(2,0)} is the adjoint representation of Sp(4)
        let m = weight_multiplicities(&w(&[2, 0], 2)).unwrap();
        assert_eq!(m[&w(&[0, 0], 2)], 2);
    }

    #[test]
    fn standard_filtration() {
        let f = h_filtration(&w(&[1, 0], 1)).unwrap();
        assert_eq!(f, BTreeMap::from([(-1, 2), (0, 2)]));
        assert_eq!(h_filtration(&Weight::zero(2)).unwrap(), BTreeMap::from([(0, 1)]));
    }

    #[test]
    fn levi_dimensions() {
        // GL(2) weight (3,1) has dimension 3; GL(1) × GSp(2) weight (5; 4,...)
        assert_eq!(levi_dimension(&w(&[3, 1], 4), 2).unwrap(), Integer::from(3));
        assert_eq!(levi_dimension(&w(&[-4, 3], 1), 1).unwrap(), Integer::from(4));
        assert!(levi_dimension(&w(&[1, 3], 4), 2).is_err());
    }

    #[test]
    fn levi_characters_match_dimensions() {
        let mu = w(&[3, 2, 1, 0], 6);
        for r in 1..=2 {
            let ch = levi_character(&mu, r).unwrap();
            assert_eq!(Integer::from(character_dimension(&ch)), levi_dimension(&mu, r).unwrap());
        }
    }

    #[test]
    fn generic_dimension_over_small_rationals() {
        let d: num_rational::Rational64 = dimension_in(&[2, 1], &RootSubsystem::symplectic(2).unwrap());
        assert_eq!(d, num_rational::Rational64::from(16));
    }
}
