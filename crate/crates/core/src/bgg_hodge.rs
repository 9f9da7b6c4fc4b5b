//! Hodge filtration bookkeeping on the BGG complex: jumps `p(w)`, the
//! weights `j_B`, boundary-strata Kostant decompositions and the exhaustive
//! checks that `p` never reaches both `0` and `w` on a coset of `W_{G_{g-r}}`.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::root_datum::{h_pairing, is_p_small, middle_degree, motivic_weight, Weight};
use crate::weyl::{dot_action, iterated_dot_levels, kostant_reps, CosetTable, Parabolic, WeylElement};
use crate::weyl_modules::characters::{
    freudenthal, levi_character, levi_dimension, times_one_minus, weyl_dimension, Character, RootSubsystem,
};
use crate::Integer;

/// `j_B = Σ_{i∈B} (a_i + i)`, with `B` encoded as a bitmask (bit `i-1` ↔ `i`).
pub fn j_b(lambda: &Weight, mask: u32) -> i64 {
    (1..=lambda.genus()).filter(|i| mask >> (i - 1) & 1 == 1).map(|i| lambda.a(i) + i as i64).sum()
}

/// The multiset `{j_B : B ⊆ {1, ..., g}}`, sorted.
pub fn hodge_weights(lambda: &Weight) -> Result<Vec<i64>> {
    lambda.require_dominant()?;
    let mut out: Vec<i64> = (0..1u32 << lambda.genus()).map(|m| j_b(lambda, m)).collect();
    out.sort_unstable();
    Ok(out)
}

/// `p(w) = -(w(λ+ρ) - ρ)(H)`.
pub fn hodge_jump(w: &WeylElement, lambda: &Weight) -> Result<i64> {
    lambda.require_dominant()?;
    Ok(-h_pairing(&dot_action(w, lambda)?))
}

fn require_standard_central(lambda: &Weight) -> Result<()> {
    if lambda.has_standard_central() {
        Ok(())
    } else {
        Err(Error::NonStandardCentral { central: lambda.central(), sum: lambda.size() })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BggEntry {
    pub element: WeylElement,
    pub length: usize,
    pub weight: Weight,
    pub jump: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealizableJumps {
    pub degree: usize,
    pub jumps: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BggChecks {
    pub entry_count: bool,
    pub lengths_in_range: bool,
    pub unique_middle_length: bool,
    pub jumps_are_hodge_weights: bool,
    pub top_jump_excluded_below_middle: bool,
}

impl BggChecks {
    pub fn all(&self) -> bool {
        self.entry_count
            && self.lengths_in_range
            && self.unique_middle_length
            && self.jumps_are_hodge_weights
            && self.top_jump_excluded_below_middle
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BggDescriptor {
    pub g: usize,
    pub lambda: Weight,
    pub p: Option<u64>,
    /// `None` when no prime was given.
    pub p_small: Option<bool>,
    pub entries: Vec<BggEntry>,
    /// `{p(w) : ℓ(w) ≤ j}` for `j = 0, ..., d`.
    pub realizable: Vec<RealizableJumps>,
    pub top_jump: i64,
    pub checks: BggChecks,
}

/// Graded pieces of the BGG complex, one per Siegel Kostant representative.
pub fn bgg_complex(lambda: &Weight, p: Option<u64>) -> Result<BggDescriptor> {
    lambda.require_dominant()?;
    let g = lambda.genus();
    let d = middle_degree(g) as usize;
    let p_small = p.map(|p| is_p_small(lambda, p)).transpose()?;
    let table = kostant_reps(g, Parabolic::Siegel)?;
    let entries: Vec<BggEntry> = table
        .representatives
        .iter()
        .map(|r| {
            let weight = dot_action(&r.element, lambda)?;
            Ok(BggEntry { element: r.element.clone(), length: r.length, jump: -h_pairing(&weight), weight })
        })
        .collect::<Result<_>>()?;
    let top_entry = entries.iter().find(|e| e.length == d);
    let top_jump = top_entry.map_or(0, |e| e.jump);
    let realizable: Vec<RealizableJumps> = (0..=d)
        .map(|j| RealizableJumps {
            degree: j,
            jumps: entries.iter().filter(|e| e.length <= j).map(|e| e.jump).collect::<BTreeSet<_>>().into_iter().collect(),
        })
        .collect();
    let shift = (lambda.central() - lambda.size()) / 2;
    let mut jumps: Vec<i64> = entries.iter().map(|e| e.jump - shift).collect();
    jumps.sort_unstable();
    let checks = BggChecks {
        entry_count: entries.len() == 1 << g,
        lengths_in_range: entries.iter().all(|e| e.length <= d),
        unique_middle_length: entries.iter().filter(|e| e.length == d).count() == 1,
        jumps_are_hodge_weights: jumps == hodge_weights(lambda)?,
        top_jump_excluded_below_middle: realizable.iter().filter(|r| r.degree < d).all(|r| !r.jumps.contains(&top_jump)),
    };
    Ok(BggDescriptor { g, lambda: lambda.clone(), p, p_small, entries, realizable, top_jump, checks })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoherentDegree {
    pub weight: Weight,
    pub degree: i64,
}

/// The two nonvanishing coherent degrees: `(λ, d)` and `(w'·λ, 0)`.
pub fn coherent_degrees(lambda: &Weight) -> Result<[CoherentDegree; 2]> {
    lambda.require_dominant()?;
    let g = lambda.genus();
    let w_prime = kostant_reps(g, Parabolic::Siegel)?.longest().element.clone();
    Ok([
        CoherentDegree { weight: lambda.clone(), degree: middle_degree(g) },
        CoherentDegree { weight: dot_action(&w_prime, lambda)?, degree: 0 },
    ])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StratumTerm {
    pub element: WeylElement,
    /// `w''·λ` restricted to the `GL(r)` torus (first `r` coordinates).
    pub mu_l: Vec<i64>,
    /// `w''·λ` as a weight of `GSp(2g-2r)`.
    pub mu_h: Weight,
    pub l_dominant: bool,
    pub h_dominant: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StratumDegree {
    pub degree: usize,
    pub terms: Vec<StratumTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KostantStratumDecomposition {
    pub g: usize,
    pub r: usize,
    pub lambda: Weight,
    pub p: Option<u64>,
    pub p_small: Option<bool>,
    pub degrees: Vec<StratumDegree>,
    pub all_dominant: bool,
}

fn split_levi(mu: &Weight, r: usize) -> (Vec<i64>, Weight) {
    let head = mu.coords()[..r].to_vec();
    let tail = mu.coords()[r..].to_vec();
    let central = mu.central() - head.iter().sum::<i64>();
    (head, Weight::from_parts_unchecked(tail, central))
}

/// `⊕_{w''∈W^{P_r}, ℓ(w'')=q} V_{M_r, w''·λ}`, split along `M_r = GL(r) × GSp(2g-2r)`.
pub fn kostant_mod_p(lambda: &Weight, r: usize, p: Option<u64>) -> Result<KostantStratumDecomposition> {
    lambda.require_dominant()?;
    let g = lambda.genus();
    let table = kostant_reps(g, Parabolic::P(r))?;
    let p_small = p.map(|p| is_p_small(lambda, p)).transpose()?;
    let mut by_degree: BTreeMap<usize, Vec<StratumTerm>> = BTreeMap::new();
    for rep in &table.representatives {
        let mu = dot_action(&rep.element, lambda)?;
        let (mu_l, mu_h) = split_levi(&mu, r);
        let l_dominant = mu_l.windows(2).all(|w| w[0] >= w[1]);
        let h_dominant = mu_h.is_dominant();
        by_degree.entry(rep.length).or_default().push(StratumTerm {
            element: rep.element.clone(),
            mu_l,
            mu_h,
            l_dominant,
            h_dominant,
        });
    }
    let degrees: Vec<StratumDegree> = by_degree.into_iter().map(|(degree, terms)| StratumDegree { degree, terms }).collect();
    let all_dominant = degrees.iter().flat_map(|d| &d.terms).all(|t| t.l_dominant && t.h_dominant);
    Ok(KostantStratumDecomposition { g, r, lambda: lambda.clone(), p, p_small, degrees, all_dominant })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionIdentity {
    pub g: usize,
    pub r: usize,
    pub lambda: Weight,
    #[serde(serialize_with = "crate::scalar::serialize_display_vec")]
    pub levi_dimensions: Vec<Integer>,
    #[serde(serialize_with = "crate::scalar::serialize_display")]
    pub lhs: Integer,
    #[serde(serialize_with = "crate::scalar::serialize_display")]
    pub rhs: Integer,
    pub holds: bool,
}

/// Compare `Σ_{w''∈W^{P_r}} dim V_{M_r, w''·λ}` with `dim V_λ`.
pub fn kostant_dimension_identity(lambda: &Weight, r: usize) -> Result<DimensionIdentity> {
    lambda.require_dominant()?;
    let g = lambda.genus();
    let table = kostant_reps(g, Parabolic::P(r))?;
    let levi_dimensions: Vec<Integer> =
        table.elements().map(|w| levi_dimension(&dot_action(w, lambda)?, r)).collect::<Result<_>>()?;
    let lhs: Integer = levi_dimensions.iter().sum();
    let rhs = weyl_dimension(lambda)?;
    Ok(DimensionIdentity { g, r, lambda: lambda.clone(), holds: lhs == rhs, levi_dimensions, lhs, rhs })
}

/// Kostant's Euler characteristic identity on torus characters:
/// `Σ_{w∈W^{P_r}} (-1)^{ℓ(w)} ch V_{M_r, w·λ} = ch V_λ · Π_{α∈Φ^+∖Φ_M^+} (1 - e^{-α})`.
pub fn kostant_euler_identity(lambda: &Weight, r: usize) -> Result<bool> {
    lambda.require_dominant()?;
    let g = lambda.genus();
    let table = kostant_reps(g, Parabolic::P(r))?;
    let mut lhs: Character = BTreeMap::new();
    for rep in &table.representatives {
        let sign = if rep.length % 2 == 0 { 1 } else { -1 };
        for (nu, m) in levi_character(&dot_action(&rep.element, lambda)?, r)? {
            *lhs.entry(nu).or_insert(0) += sign * m;
        }
    }
    lhs.retain(|_, m| *m != 0);
    let full = RootSubsystem::symplectic(g)?;
    let levi = RootSubsystem::levi(g, r)?;
    let mut rhs = freudenthal(lambda.coords(), &full);
    for alpha in full.positive.iter().filter(|a| !levi.positive.contains(a)) {
        rhs = times_one_minus(&rhs, alpha);
    }
    Ok(lhs == rhs)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim84Row {
    pub element: WeylElement,
    pub length: usize,
    pub jumps: Vec<i64>,
    pub contains_zero: bool,
    pub contains_top: bool,
    pub passes: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim84Report {
    pub g: usize,
    pub r: usize,
    pub lambda: Weight,
    pub top: i64,
    pub rows: Vec<Claim84Row>,
    pub passes: bool,
}

fn siegel_reps_embedded(g: usize, level: usize) -> Result<Vec<WeylElement>> {
    let table: CosetTable = kostant_reps(g - level, Parabolic::Siegel)?;
    table.elements().map(|w| w.embed(g)).collect()
}

fn parabolic_reps_embedded(g: usize, level: usize, r: usize) -> Result<Vec<(WeylElement, usize)>> {
    let table = kostant_reps(g - level, Parabolic::P(r))?;
    table.representatives.iter().map(|rep| Ok((rep.element.embed(g)?, rep.length))).collect()
}

/// For each `w'' ∈ W^{P_r}`, the set `{p(w'∘w'') : w' ∈ W^M(G_{g-r})}`
/// never contains both `0` and `w`.
pub fn claim_84_check(lambda: &Weight, r: usize) -> Result<Claim84Report> {
    lambda.require_dominant()?;
    require_standard_central(lambda)?;
    let g = lambda.genus();
    let top = motivic_weight(lambda)?;
    let inner = siegel_reps_embedded(g, r.min(g))?;
    let rows: Vec<Claim84Row> = parabolic_reps_embedded(g, 0, r)?
        .into_iter()
        .map(|(w2, length)| {
            let jumps: BTreeSet<i64> =
                inner.iter().map(|w1| hodge_jump(&w1.compose(&w2), lambda)).collect::<Result<_>>()?;
            Ok(row(w2, length, jumps, top))
        })
        .collect::<Result<_>>()?;
    let passes = rows.iter().all(|r| r.passes);
    Ok(Claim84Report { g, r, lambda: lambda.clone(), top, rows, passes })
}

fn row(element: WeylElement, length: usize, jumps: BTreeSet<i64>, top: i64) -> Claim84Row {
    let contains_zero = jumps.contains(&0);
    let contains_top = jumps.contains(&top);
    Claim84Row { element, length, jumps: jumps.into_iter().collect(), contains_zero, contains_top, passes: !(contains_zero && contains_top) }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim87Row {
    pub ranks: Vec<usize>,
    /// The chain `w''_1, ..., w''_s`, each embedded in `W_G`.
    pub chain: Vec<WeylElement>,
    pub jumps: Vec<i64>,
    pub contains_zero: bool,
    pub contains_top: bool,
    pub passes: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim87Report {
    pub g: usize,
    pub depth: usize,
    pub lambda: Weight,
    pub top: i64,
    pub compositions: Vec<Vec<usize>>,
    pub rows: Vec<Claim87Row>,
    /// Iterated dot actions agree with the composite dot action.
    pub iterated_matches_composite: bool,
    pub passes: bool,
}

/// Rank sequences `(r_1, ..., r_s)` with `r_k ≥ 1` and `Σ r_k ≤ g`.
pub fn rank_compositions(g: usize, depth: usize) -> Vec<Vec<usize>> {
    if depth == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=g {
        for rest in rank_compositions(g - first, depth - 1) {
            let mut c = vec![first];
            c.extend(rest);
            out.push(c);
        }
    }
    out
}

/// Iterated composites `w = w'_s∘w''_s∘...∘w'_1∘w''_1` with
/// `w''_k ∈ W^{P_{r_k}}(G_{g-R_{k-1}})` and `w'_k ∈ W^M(G_{g-R_k})`; for each
/// fixed chain of `w''`, the set of `p(w)` over all `w'` never contains both
/// `0` and `w`.
pub fn claim_87_check(lambda: &Weight, depth: usize) -> Result<Claim87Report> {
    lambda.require_dominant()?;
    require_standard_central(lambda)?;
    let g = lambda.genus();
    if depth > g {
        return Err(Error::DepthTooLarge { depth, g });
    }
    let top = motivic_weight(lambda)?;
    let compositions = rank_compositions(g, depth);
    let mut rows = Vec::new();
    let mut consistent = true;
    for ranks in &compositions {
        let mut levels = Vec::with_capacity(ranks.len());
        let mut stage_outer = Vec::with_capacity(ranks.len());
        let mut stage_inner = Vec::with_capacity(ranks.len());
        let mut before = 0;
        for &rk in ranks {
            let after = before + rk;
            stage_outer.push(parabolic_reps_embedded(g, before, rk)?);
            stage_inner.push(siegel_reps_embedded(g, after)?);
            levels.push((before, after));
            before = after;
        }
        for outer in product(&stage_outer) {
            let mut jumps = BTreeSet::new();
            for inner in product(&stage_inner) {
                let mut steps = Vec::with_capacity(2 * ranks.len());
                let mut composite = WeylElement::identity(g);
                for (k, &(before, after)) in levels.iter().enumerate() {
                    steps.push((before, outer[k].0.clone()));
                    steps.push((after, inner[k].clone()));
                    composite = inner[k].compose(&outer[k].0.compose(&composite));
                }
                let iterated = iterated_dot_levels(lambda, &steps)?;
                consistent &= iterated == dot_action(&composite, lambda)?;
                jumps.insert(-h_pairing(&iterated));
            }
            let contains_zero = jumps.contains(&0);
            let contains_top = jumps.contains(&top);
            rows.push(Claim87Row {
                ranks: ranks.clone(),
                chain: outer.iter().map(|(w, _)| w.clone()).collect(),
                jumps: jumps.into_iter().collect(),
                contains_zero,
                contains_top,
                passes: !(contains_zero && contains_top),
            });
        }
    }
    let passes = rows.iter().all(|r| r.passes);
    Ok(Claim87Report {
        g,
        depth,
        lambda: lambda.clone(),
        top,
        compositions,
        rows,
        iterated_matches_composite: consistent,
        passes,
    })
}

/// Cartesian product of the factors; one empty tuple for zero factors.
fn product<T: Clone>(factors: &[Vec<T>]) -> Vec<Vec<T>> {
    factors.iter().fold(vec![Vec::new()], |acc, f| {
        acc.iter()
            .flat_map(|prefix| {
                f.iter().map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x.clone());
                    v
                })
            })
            .collect()
    })
}

/// `[d_0, ..., d_g]` with `d_r = (g-r)(g-r+1)/2`.
pub fn strata_dims(g: usize) -> Vec<i64> {
    (0..=g).map(|r| middle_degree(g - r)).collect()
}
