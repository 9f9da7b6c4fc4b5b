//! The acceptance checks, runnable from the library and the `verify-all`
//! subcommand. Each check reports pass/fail, a short detail line and its
//! wall-clock time against its budget.

use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};
use serde::Serialize;

use crate::bgg_hodge::{bgg_complex, claim_84_check, claim_87_check, hodge_jump, hodge_weights, kostant_dimension_identity};
use crate::error::Result;
use crate::hecke_params::{solve_slope_system, spin_slopes, SlopeConvention, SlopeSystem};
use crate::root_datum::{
    exceeds_five, is_p_small, is_prime, middle_degree, minimal_admissible_prime, minuscule_pairing, motivic_weight,
    rho_tilde, Weight,
};
use crate::weyl::{kostant_reps, longest_kostant, Parabolic};
use crate::weyl_modules::characters::weyl_dimension;
use crate::weyl_modules::plethysm::{idempotent_check, weyl_lattice};
use crate::weyl_modules::tensor::{traceless_subspace, DEFAULT_TENSOR_BUDGET};
use crate::{Integer, Rational};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub within_budget: bool,
    pub elapsed_ms: u128,
    pub budget_ms: u128,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub max_g: usize,
    pub criteria: Vec<CriterionResult>,
    pub passed: usize,
    pub failed: usize,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

/// First `count` dominant weights of genus `g` with `c = Σa_i`, ordered by
/// size and then lexicographically.
pub fn dominant_grid(g: usize, count: usize) -> Vec<Weight> {
    let mut out = Vec::new();
    let mut size = 0i64;
    while out.len() < count {
        let mut level = Vec::new();
        partitions_into(size, g, size, &mut Vec::new(), &mut level);
        level.sort();
        for coords in level {
            if out.len() == count {
                break;
            }
            out.push(Weight::with_standard_central(coords));
        }
        size += 1;
    }
    out
}

fn partitions_into(rest: i64, parts: usize, max: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if parts == 0 {
        if rest == 0 {
            out.push(prefix.clone());
        }
        return;
    }
    for first in (0..=max.min(rest)).rev() {
        prefix.push(first);
        partitions_into(rest - first, parts - 1, first, prefix, out);
        prefix.pop();
    }
}

type Outcome = Result<(bool, String)>;

fn timed(id: u8, name: &'static str, budget: Duration, f: impl FnOnce() -> Outcome) -> CriterionResult {
    let start = Instant::now();
    let outcome = f();
    let elapsed = start.elapsed();
    let within_budget = elapsed < budget;
    let (ok, detail) = match outcome {
        Ok(v) => v,
        Err(e) => (false, format!("error: {e}")),
    };
    CriterionResult {
        id,
        name,
        passed: ok && within_budget,
        within_budget,
        elapsed_ms: elapsed.as_millis(),
        budget_ms: budget.as_millis(),
        detail,
    }
}

/// Run every check, scanning genera up to `max_g` where a check ranges over
/// several genera.
pub fn run_all(max_g: usize) -> VerifyReport {
    let criteria = vec![
        timed(1, "hodge_weight_quadruples", Duration::from_secs(1), hodge_quadruples),
        timed(2, "kostant_hodge_bijection", Duration::from_secs(10), || kostant_hodge_bijection(max_g.min(4))),
        timed(3, "jump_separation_on_strata", Duration::from_secs(60), || jump_separation(max_g)),
        timed(4, "weyl_lattice_ranks", Duration::from_secs(120), weyl_lattice_ranks),
        timed(5, "kostant_dimension_identity", Duration::from_secs(5), dimension_identity),
        timed(6, "slope_round_trip", Duration::from_secs(2), || slope_round_trip(max_g.min(4))),
        timed(7, "minuscule_pairing", Duration::from_secs(1), || minuscule(max_g.min(5))),
        timed(8, "plethysm_verifier", Duration::from_secs(60), plethysm),
        timed(9, "p_smallness_gate", Duration::from_secs(1), p_smallness),
    ];
    let passed = criteria.iter().filter(|c| c.passed).count();
    let failed = criteria.len() - passed;
    VerifyReport { max_g, criteria, passed, failed }
}

fn hodge_quadruples() -> Outcome {
    let cases = [(vec![5, 5], [0, 6, 7, 13]), (vec![3, 3], [0, 4, 5, 9]), (vec![0, 0], [0, 1, 2, 3])];
    let mut ok = true;
    let mut seen = Vec::new();
    for (coords, expected) in cases {
        let lambda = Weight::with_standard_central(coords);
        let got = hodge_weights(&lambda)?;
        ok &= got == expected;
        seen.push(format!("{lambda}->{got:?}"));
    }
    Ok((ok, seen.join(" ")))
}

fn kostant_hodge_bijection(max_g: usize) -> Outcome {
    let mut checked = 0;
    for g in 1..=max_g {
        let table = kostant_reps(g, Parabolic::Siegel)?;
        if table.len() != 1 << g {
            return Ok((false, format!("g={g}: |W^M| = {}", table.len())));
        }
        let w_prime = longest_kostant(g)?;
        for lambda in dominant_grid(g, 20) {
            let mut jumps: Vec<i64> = table.elements().map(|w| hodge_jump(w, &lambda)).collect::<Result<_>>()?;
            jumps.sort_unstable();
            if jumps != hodge_weights(&lambda)? {
                return Ok((false, format!("{lambda}: jumps {jumps:?}")));
            }
            if hodge_jump(&w_prime, &lambda)? != motivic_weight(&lambda)? {
                return Ok((false, format!("{lambda}: p(w') differs from w")));
            }
            checked += 1;
        }
    }
    Ok((true, format!("{checked} weights, g<={max_g}")))
}

fn jump_separation(max_g: usize) -> Outcome {
    let mut rows = 0;
    for g in (2..=max_g.min(3)).collect::<Vec<_>>() {
        for lambda in dominant_grid(g, 10) {
            for r in 1..=g {
                let report = claim_84_check(&lambda, r)?;
                if !report.passes {
                    return Ok((false, format!("{lambda}, r={r}: a coset reaches 0 and {}", report.top)));
                }
                rows += report.rows.len();
            }
        }
    }
    let mut chains = 0;
    if max_g >= 3 {
        for lambda in dominant_grid(3, 10) {
            let report = claim_87_check(&lambda, 2)?;
            if !report.passes || !report.iterated_matches_composite {
                return Ok((false, format!("{lambda}: depth-2 chain check failed")));
            }
            chains += report.rows.len();
        }
    }
    Ok((true, format!("{rows} single-stratum rows, {chains} depth-2 chains")))
}

fn weyl_lattice_ranks() -> Outcome {
    let mut cases: Vec<(Weight, i64)> = vec![
        (Weight::with_standard_central(vec![1, 0]), 4),
        (Weight::with_standard_central(vec![1, 1]), 5),
        (Weight::with_standard_central(vec![2, 0]), 10),
        (Weight::with_standard_central(vec![2, 1]), 16),
        (Weight::with_standard_central(vec![2, 2]), 14),
    ];
    cases.extend((0..=5).map(|n| (Weight::with_standard_central(vec![n]), n + 1)));
    let mut notes = Vec::new();
    for (lambda, expected) in cases {
        let p = (lambda.size() as u64 + 1..).find(|&q| q > 2 && is_prime(q)).expect("primes are unbounded");
        let report = weyl_lattice(&lambda, p, DEFAULT_TENSOR_BUDGET)?;
        let units = report.p_free && report.p_free_by_prime.iter().filter(|(&q, _)| q > p).all(|(_, &f)| f);
        let dim = weyl_dimension(&lambda)?;
        if report.rank as i64 != expected || dim != Integer::from(expected) || !units {
            return Ok((false, format!("{lambda}: rank {} (dim {dim}), p={p} free={}", report.rank, report.p_free)));
        }
        notes.push(format!("{lambda}:{}", report.rank));
    }
    Ok((true, notes.join(" ")))
}

fn dimension_identity() -> Outcome {
    let weights = [vec![0, 0], vec![1, 0], vec![1, 1], vec![2, 1], vec![3, 1]];
    let mut failures = Vec::new();
    for coords in weights {
        let lambda = Weight::with_standard_central(coords);
        for r in 1..=2 {
            let id = kostant_dimension_identity(&lambda, r)?;
            if !id.holds {
                failures.push(format!("{lambda} r={r}: {} vs {}", id.lhs, id.rhs));
            }
        }
    }
    if failures.is_empty() {
        Ok((true, "10 cases".into()))
    } else {
        Ok((false, failures.join("; ")))
    }
}

fn random_rational(rng: &mut StdRng) -> Rational {
    let n: i64 = rng.random_range(-50..=50);
    let d: i64 = rng.random_range(1..=12);
    Rational::new(n.into(), d.into())
}

fn slope_round_trip(max_g: usize) -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for trial in 0..100 {
        let g = 1 + trial % max_g;
        let t: Vec<Rational> = (0..g).map(|_| random_rational(&mut rng)).collect();
        let z = random_rational(&mut rng);
        let sys = spin_slopes(&t, &z)?;
        match solve_slope_system(&sys, SlopeConvention::Spin).solution() {
            Some(sol) if sol.coords == t && sol.central == z => {}
            _ => return Ok((false, format!("trial {trial}: round trip failed for t={t:?}"))),
        }
    }
    let mut weights = 0;
    for g in 1..=max_g {
        for lambda in dominant_grid(g, 20) {
            let slopes = (0..1u32 << g)
                .map(|m| Rational::from_integer(crate::bgg_hodge::j_b(&lambda, m).into()))
                .collect();
            let sys = SlopeSystem::new(g, slopes)?;
            let outcome = solve_slope_system(&sys, SlopeConvention::Spin);
            let Some(sol) = outcome.solution() else {
                return Ok((false, format!("{lambda}: Hodge slopes inconsistent")));
            };
            let expected = (1..=g).all(|i| *sol.at(i) == Rational::from_integer((-(lambda.a(i) + i as i64)).into()));
            let w = Rational::new(motivic_weight(&lambda)?.into(), 2.into());
            if !expected || sol.central != w {
                return Ok((false, format!("{lambda}: solved {:?}", sol.coords)));
            }
            weights += 1;
        }
    }
    Ok((true, format!("100 random systems, {weights} Hodge systems")))
}

fn minuscule(max_g: usize) -> Outcome {
    let mut checked = 0;
    for g in 1..=max_g {
        let shift = rho_tilde(g);
        for lambda in dominant_grid(g, 20) {
            if minuscule_pairing(&lambda.checked_add(&shift)?) != motivic_weight(&lambda)? {
                return Ok((false, format!("{lambda}")));
            }
            checked += 1;
        }
    }
    for n in 0..10 {
        let lambda = Weight::with_standard_central(vec![n]);
        if minuscule_pairing(&lambda.checked_add(&rho_tilde(1))?) != n + 1 {
            return Ok((false, format!("g=1, n={n}")));
        }
    }
    Ok((true, format!("{checked} grid weights, g<={max_g}")))
}

/// `Σ_{μ ⊢ s, ℓ(μ) ≤ g} f^μ · dim V_μ`, the Schur–Weyl count of traceless
/// tensors.
fn traceless_oracle(g: usize, s: usize) -> Result<Integer> {
    let mut parts = Vec::new();
    partitions_into(s as i64, g, s as i64, &mut Vec::new(), &mut parts);
    let mut total = Integer::from(0);
    for mu in parts {
        total += hook_length_count(&mu) * weyl_dimension(&Weight::with_standard_central(mu))?;
    }
    Ok(total)
}

/// Standard tableaux of shape `mu` by the hook length formula.
fn hook_length_count(mu: &[i64]) -> Integer {
    let shape: Vec<usize> = mu.iter().filter(|&&x| x > 0).map(|&x| x as usize).collect();
    let n: usize = shape.iter().sum();
    let mut num = Integer::from(1);
    for k in 2..=n {
        num *= k;
    }
    let mut den = Integer::from(1);
    for (i, &row) in shape.iter().enumerate() {
        for j in 0..row {
            let below = shape[i + 1..].iter().filter(|&&r| r > j).count();
            den *= row - j + below;
        }
    }
    num / den
}

fn plethysm() -> Outcome {
    let mut notes = Vec::new();
    for (g, s) in [(1, 2), (2, 2), (1, 3), (2, 3)] {
        let t = traceless_subspace(g, s, DEFAULT_TENSOR_BUDGET)?;
        let oracle = traceless_oracle(g, s)?;
        if Integer::from(t.dim) != oracle || t.dim + t.insertion_rank != t.ambient_dim {
            return Ok((false, format!("g={g} s={s}: dim {} vs oracle {oracle}", t.dim)));
        }
        let report = idempotent_check(g, s, 7, DEFAULT_TENSOR_BUDGET)?;
        if report.traceless_dim != t.dim || !report.rational_direct_sum {
            return Ok((false, format!("g={g} s={s}: idempotent report disagrees with kernel")));
        }
        notes.push(format!(
            "(g={g},s={s}) dim={} Θ²=κΘ:{}",
            t.dim, report.theta_square_equals_kappa_theta
        ));
    }
    Ok((true, notes.join(" ")))
}

fn p_smallness() -> Outcome {
    let zero = Weight::zero(2);
    let minimal = minimal_admissible_prime(&zero)?;
    let seven = exceeds_five(7) && is_p_small(&zero, 7)?;
    let five = exceeds_five(5) && is_p_small(&zero, 5)?;
    let d = middle_degree(2);
    Ok((minimal == 7 && seven && !five, format!("minimal prime {minimal}, |ρ| = {d}")))
}

/// The BGG descriptor checks for a single weight, used by the `bgg`
/// subcommand to decide its exit status.
pub fn bgg_passes(lambda: &Weight, p: Option<u64>) -> Result<bool> {
    Ok(bgg_complex(lambda, p)?.checks.all())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_is_dominant_and_sized() {
        let grid = dominant_grid(3, 20);
        assert_eq!(grid.len(), 20);
        assert!(grid.iter().all(|w| w.is_dominant() && w.has_standard_central()));
        assert_eq!(grid[0], Weight::zero(3));
        assert_eq!(grid[1], Weight::with_standard_central(vec![1, 0, 0]));
    }

    #[test]
    fn hook_lengths() {
        assert_eq!(hook_length_count(&[2, 1]), Integer::from(2));
        assert_eq!(hook_length_count(&[3, 2]), Integer::from(5));
        assert_eq!(hook_length_count(&[1, 1, 1]), Integer::from(1));
    }

    #[test]
    fn traceless_oracle_small() {
        assert_eq!(traceless_oracle(2, 2).unwrap(), Integer::from(15));
        assert_eq!(traceless_oracle(1, 2).unwrap(), Integer::from(3));
    }
}
