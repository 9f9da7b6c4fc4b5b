//! Acceptance suite: one line per criterion, exit status 1 if any fails.
//! Oracles here are written independently of the library internals.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};

use siegel_bgg::bgg_hodge::{claim_84_check, claim_87_check, hodge_jump, hodge_weights};
use siegel_bgg::hecke_params::{solve_slope_system, spin_slopes, SlopeConvention, SlopeSystem};
use siegel_bgg::root_datum::{exceeds_five, is_p_small, minimal_admissible_prime, minuscule_pairing, rho_tilde};
use siegel_bgg::weyl::{kostant_reps, Parabolic};
use siegel_bgg::weyl_modules::plethysm::{idempotent_check, weyl_lattice};
use siegel_bgg::weyl_modules::tensor::{traceless_subspace, DEFAULT_TENSOR_BUDGET};
use siegel_bgg::{Weight, WeylElement};

type Q = BigRational;

fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

fn weight(coords: &[i64]) -> Weight {
    Weight::with_standard_central(coords.to_vec())
}

/// Dominant `(a_g ≥ ... ≥ a_1 ≥ 0)` with entries up to `max`, smallest first.
fn grid(g: usize, max: i64, count: usize) -> Vec<Weight> {
    let mut all: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..g {
        all = all
            .into_iter()
            .flat_map(|p| {
                let cap = p.last().copied().unwrap_or(max);
                (0..=cap).map(move |x| {
                    let mut v = p.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    all.sort_by_key(|v| (v.iter().sum::<i64>(), v.clone()));
    all.into_iter().take(count).map(|v| weight(&v)).collect()
}

fn a(lambda: &Weight, i: usize) -> i64 {
    lambda.coords()[lambda.genus() - i]
}

fn j_b_oracle(lambda: &Weight) -> Vec<i64> {
    let g = lambda.genus();
    let mut out: Vec<i64> = (0..1u32 << g)
        .map(|b| (1..=g).filter(|i| b >> (i - 1) & 1 == 1).map(|i| a(lambda, i) + i as i64).sum())
        .collect();
    out.sort_unstable();
    out
}

fn motivic(lambda: &Weight) -> i64 {
    let g = lambda.genus() as i64;
    lambda.coords().iter().sum::<i64>() + g * (g + 1) / 2
}

/// `w(λ+ρ) - ρ` from the signed permutation, central coordinate untouched.
fn dot_oracle(w: &WeylElement, lambda: &Weight) -> (Vec<i64>, i64) {
    let g = lambda.genus();
    let shifted: Vec<i64> = (0..g).map(|k| lambda.coords()[k] + (g - k) as i64).collect();
    let mut image = vec![0; g];
    for k in 0..g {
        let target = w.perm()[k];
        image[target] = w.signs()[target] as i64 * shifted[k];
    }
    ((0..g).map(|k| image[k] - (g - k) as i64).collect(), lambda.central())
}

fn jump_oracle(w: &WeylElement, lambda: &Weight) -> i64 {
    let (m, c) = dot_oracle(w, lambda);
    -(m.iter().sum::<i64>() - c) / 2
}

/// Weyl dimension for `Sp(2n)`, coordinates in decreasing order of index.
fn sp_dim(coords: &[i64]) -> Q {
    let n = coords.len();
    let l: Vec<i64> = (0..n).map(|k| coords[k] + (n - k) as i64).collect();
    let r: Vec<i64> = (0..n).map(|k| (n - k) as i64).collect();
    let mut num = Q::one();
    let mut den = Q::one();
    for i in 0..n {
        num *= q(l[i]);
        den *= q(r[i]);
        for j in i + 1..n {
            num *= q(l[i] - l[j]) * q(l[i] + l[j]);
            den *= q(r[i] - r[j]) * q(r[i] + r[j]);
        }
    }
    num / den
}

fn gl_dim(coords: &[i64]) -> Q {
    let n = coords.len();
    let mut out = Q::one();
    for i in 0..n {
        for j in i + 1..n {
            out *= q(coords[i] - coords[j] + (j - i) as i64) / q((j - i) as i64);
        }
    }
    out
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn hook_count(shape: &[usize]) -> Q {
    let n: usize = shape.iter().sum();
    let mut out = (1..=n as i64).fold(Q::one(), |acc, k| acc * q(k));
    for (i, &row) in shape.iter().enumerate() {
        for j in 0..row {
            let below = shape[i + 1..].iter().filter(|&&r| r > j).count();
            out /= q((row - j + below) as i64);
        }
    }
    out
}

fn partitions(n: usize, parts: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    if parts == 0 {
        return vec![];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        for mut rest in partitions(n - first, parts - 1, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

type Check = Result<String, String>;

fn c1_hodge() -> Check {
    let cases: [(&[i64], [i64; 4]); 3] = [(&[5, 5], [0, 6, 7, 13]), (&[3, 3], [0, 4, 5, 9]), (&[0, 0], [0, 1, 2, 3])];
    for (coords, expected) in cases {
        let got = hodge_weights(&weight(coords)).map_err(|e| e.to_string())?;
        if got != expected {
            return Err(format!("{coords:?}: {got:?}"));
        }
    }
    Ok("three quadruples exact".into())
}

fn c2_bijection() -> Check {
    let mut n = 0;
    for g in 1..=4 {
        let table = kostant_reps(g, Parabolic::Siegel).map_err(|e| e.to_string())?;
        if table.len() != 1 << g {
            return Err(format!("g={g}: |W^M|={}", table.len()));
        }
        let d = g * (g + 1) / 2;
        let top: Vec<&WeylElement> = table.elements().filter(|w| w.length() == d).collect();
        if top.len() != 1 {
            return Err(format!("g={g}: {} elements of length d", top.len()));
        }
        for lambda in grid(g, 19, 20) {
            let mut jumps: Vec<i64> = table.elements().map(|w| jump_oracle(w, &lambda)).collect();
            jumps.sort_unstable();
            if jumps != j_b_oracle(&lambda) {
                return Err(format!("{lambda}: {jumps:?}"));
            }
            let lib: Vec<i64> = table.elements().map(|w| hodge_jump(w, &lambda).unwrap()).collect();
            if lib.iter().zip(table.elements()).any(|(p, w)| *p != jump_oracle(w, &lambda)) {
                return Err(format!("{lambda}: library jumps disagree"));
            }
            if jump_oracle(top[0], &lambda) != motivic(&lambda) {
                return Err(format!("{lambda}: top element misses w"));
            }
            n += 1;
        }
    }
    Ok(format!("{n} weights over g=1..4"))
}

fn c3_claims() -> Check {
    let mut sets = 0;
    for g in [2, 3] {
        for lambda in grid(g, 4, 10) {
            let w = motivic(&lambda);
            for r in 1..=g {
                let outer = kostant_reps(g, Parabolic::P(r)).map_err(|e| e.to_string())?;
                let inner = kostant_reps(g - r, Parabolic::Siegel).map_err(|e| e.to_string())?;
                for w2 in outer.elements() {
                    let set: Vec<i64> =
                        inner.elements().map(|w1| jump_oracle(&w1.embed(g).unwrap().compose(w2), &lambda)).collect();
                    if set.contains(&0) && set.contains(&w) {
                        return Err(format!("{lambda}, r={r}, {w2}: {set:?}"));
                    }
                    sets += 1;
                }
                let report = claim_84_check(&lambda, r).map_err(|e| e.to_string())?;
                if !report.passes {
                    return Err(format!("{lambda}, r={r}: library reports a counterexample"));
                }
            }
        }
    }
    for lambda in grid(3, 4, 10) {
        let report = claim_87_check(&lambda, 2).map_err(|e| e.to_string())?;
        if !report.passes || !report.iterated_matches_composite {
            return Err(format!("{lambda}: depth-2 chains fail"));
        }
    }
    Ok(format!("{sets} jump sets, depth-2 chains for g=3 pass"))
}

fn c4_lattices() -> Check {
    let mut cases: Vec<(Vec<i64>, i64)> =
        vec![(vec![1, 0], 4), (vec![1, 1], 5), (vec![2, 0], 10), (vec![2, 1], 16), (vec![2, 2], 14)];
    cases.extend((0..=5).map(|n| (vec![n], n + 1)));
    for (coords, expected) in cases {
        let lambda = weight(&coords);
        if sp_dim(&coords) != q(expected) {
            return Err(format!("{lambda}: oracle dimension {}", sp_dim(&coords)));
        }
        let size = coords.iter().sum::<i64>() as u64;
        for p in (size + 1..30).filter(|&p| p > 2 && is_prime(p)) {
            let report = weyl_lattice(&lambda, p, DEFAULT_TENSOR_BUDGET).map_err(|e| e.to_string())?;
            if report.rank as i64 != expected {
                return Err(format!("{lambda}: rank {}", report.rank));
            }
            let unit = report.elementary_divisors.iter().all(|d| !(d % p).is_zero());
            if !unit || !report.p_free {
                return Err(format!("{lambda}: divisors {:?} not {p}-units", report.elementary_divisors));
            }
        }
    }
    Ok("11 weights, ranks match, divisors are p-units".into())
}

fn c5_dimension_identity() -> Check {
    let mut failures = Vec::new();
    for coords in [[0, 0], [1, 0], [1, 1], [2, 1], [3, 1]] {
        let lambda = weight(&coords);
        for r in 1..=2 {
            let table = kostant_reps(2, Parabolic::P(r)).map_err(|e| e.to_string())?;
            let mut sum = Q::zero();
            for w in table.elements() {
                let (mu, _) = dot_oracle(w, &lambda);
                sum += gl_dim(&mu[..r]) * sp_dim(&mu[r..]);
            }
            let dim = sp_dim(&coords);
            if sum != dim {
                failures.push(format!("{lambda} r={r}: {sum} vs {dim}"));
            }
        }
    }
    if failures.is_empty() {
        Ok("10 cases".into())
    } else {
        Err(failures.join("; "))
    }
}

fn c6_slopes() -> Check {
    let mut rng = StdRng::seed_from_u64(20_240_601);
    let rand_q = |rng: &mut StdRng| {
        let n: i64 = rng.random_range(-1000..=1000);
        let d: i64 = rng.random_range(1..=60);
        Q::new(n.into(), d.into())
    };
    for trial in 0..100 {
        let g = 1 + trial % 4;
        let t: Vec<Q> = (0..g).map(|_| rand_q(&mut rng)).collect();
        let z = rand_q(&mut rng);
        let sys = spin_slopes(&t, &z).map_err(|e| e.to_string())?;
        let out = solve_slope_system(&sys, SlopeConvention::Spin);
        match out.solution() {
            Some(s) if s.coords == t && s.central == z => {}
            _ => return Err(format!("trial {trial}: t={t:?} z={z}")),
        }
    }
    let mut n = 0;
    for g in 1..=4 {
        for lambda in grid(g, 19, 20) {
            let slopes = (0..1u32 << g)
                .map(|b| q((1..=g).filter(|i| b >> (i - 1) & 1 == 1).map(|i| a(&lambda, i) + i as i64).sum()))
                .collect();
            let sys = SlopeSystem::new(g, slopes).map_err(|e| e.to_string())?;
            let out = solve_slope_system(&sys, SlopeConvention::Spin);
            let s = out.solution().ok_or(format!("{lambda}: inconsistent"))?;
            if (1..=g).any(|i| s.coords[g - i] != q(-(a(&lambda, i) + i as i64))) {
                return Err(format!("{lambda}: t = {:?}", s.coords));
            }
            n += 1;
        }
    }
    Ok(format!("100 random round trips, {n} weights give t_i = -(a_i+i)"))
}

fn c7_minuscule() -> Check {
    let mut n = 0;
    for g in 1..=5 {
        for lambda in grid(g, 4, 30) {
            let shifted = lambda.checked_add(&rho_tilde(g)).map_err(|e| e.to_string())?;
            if minuscule_pairing(&shifted) != motivic(&lambda) {
                return Err(format!("{lambda}"));
            }
            n += 1;
        }
    }
    for k in 0..12 {
        let shifted = weight(&[k]).checked_add(&rho_tilde(1)).unwrap();
        if minuscule_pairing(&shifted) != k + 1 {
            return Err(format!("g=1, n={k}"));
        }
    }
    Ok(format!("{n} weights, g=1 exponent n+1"))
}

fn c8_plethysm() -> Check {
    let mut notes = Vec::new();
    for (g, s) in [(1, 2), (2, 2), (1, 3), (2, 3)] {
        let oracle: Q = partitions(s, g, s)
            .iter()
            .map(|shape| {
                let mut coords: Vec<i64> = shape.iter().map(|&x| x as i64).collect();
                coords.resize(g, 0);
                hook_count(shape) * sp_dim(&coords)
            })
            .fold(Q::zero(), |acc, x| acc + x);
        let t = traceless_subspace(g, s, DEFAULT_TENSOR_BUDGET).map_err(|e| e.to_string())?;
        if q(t.dim as i64) != oracle {
            return Err(format!("g={g} s={s}: {} vs {oracle}", t.dim));
        }
        let report = idempotent_check(g, s, 7, DEFAULT_TENSOR_BUDGET).map_err(|e| e.to_string())?;
        if report.kappa != 2 * g as i64 || report.traceless_dim != t.dim || !report.rational_direct_sum {
            return Err(format!("g={g} s={s}: κ={} report inconsistent", report.kappa));
        }
        notes.push(format!("({g},{s}):dim {} Θ²=κΘ {}", t.dim, report.theta_square_equals_kappa_theta));
    }
    if notes.iter().all(|n| !n.contains("dim 15")) {
        return Err("g=2, s=2 missing".into());
    }
    Ok(notes.join(", "))
}

fn c9_gate() -> Check {
    let zero = Weight::zero(2);
    let oracle = (2u64..).find(|&p| is_prime(p) && p > 5 && p - 1 > 3).unwrap();
    let lib = minimal_admissible_prime(&zero).map_err(|e| e.to_string())?;
    let seven = exceeds_five(7) && is_p_small(&zero, 7).unwrap();
    let five = exceeds_five(5) && is_p_small(&zero, 5).unwrap();
    if oracle == 7 && lib == 7 && seven && !five {
        Ok("minimal prime 7".into())
    } else {
        Err(format!("oracle {oracle}, library {lib}"))
    }
}

fn main() -> ExitCode {
    let criteria: [(u8, &str, Duration, fn() -> Check); 9] = [
        (1, "hodge weight quadruples", Duration::from_secs(1), c1_hodge),
        (2, "kostant/hodge bijection", Duration::from_secs(10), c2_bijection),
        (3, "jump separation on strata", Duration::from_secs(60), c3_claims),
        (4, "weyl lattice ranks", Duration::from_secs(120), c4_lattices),
        (5, "kostant dimension identity", Duration::from_secs(5), c5_dimension_identity),
        (6, "slope round trip", Duration::from_secs(2), c6_slopes),
        (7, "minuscule pairing", Duration::from_secs(1), c7_minuscule),
        (8, "plethysm verifier", Duration::from_secs(60), c8_plethysm),
        (9, "p-smallness gate", Duration::from_secs(1), c9_gate),
    ];
    let mut failed = 0;
    for (id, name, budget, check) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let (ok, detail) = match result {
            Ok(d) if elapsed < budget => (true, d),
            Ok(d) => (false, format!("{d}; over budget {budget:?}")),
            Err(d) => (false, d),
        };
        failed += usize::from(!ok);
        println!(
            "criterion {id} [{}] {name} ({:.3}s / {}s): {detail}",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            budget.as_secs()
        );
    }
    println!("{} passed, {failed} failed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
