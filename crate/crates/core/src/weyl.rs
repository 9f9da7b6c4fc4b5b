//! The Weyl group `S_g ⋉ {±1}^g`, lengths, the dot action and Kostant
//! representatives for the Siegel parabolic and the parabolics `P_r`.
//!
//! Positions are display positions: position 0 carries `e_g`, position
//! `g-1` carries `e_1`. An element `(perm, signs)` sends the coordinate at
//! position `k` to position `perm[k]` and then multiplies position `j` by
//! `signs[j]`. The central coordinate is never touched.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::root_datum::{is_positive, positive_roots, rho_coords, Weight};

/// Enumeration guard: `2^g g!` elements.
pub const MAX_ENUMERATION_GENUS: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl WeylElement {
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let g = perm.len();
        if signs.len() != g {
            return Err(Error::LengthMismatch { expected: g, got: signs.len() });
        }
        let mut seen = vec![false; g];
        for &p in &perm {
            if p >= g || seen[p] {
                return Err(Error::InvalidElement(format!("{perm:?} is not a permutation")));
            }
            seen[p] = true;
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::InvalidElement(format!("signs {signs:?} must be ±1")));
        }
        Ok(Self { perm, signs })
    }

    pub fn identity(g: usize) -> Self {
        Self { perm: (0..g).collect(), signs: vec![1; g] }
    }

    /// `-id`, the longest element.
    pub fn longest(g: usize) -> Self {
        Self { perm: (0..g).collect(), signs: vec![-1; g] }
    }

    /// The element negating the coordinates `a_i` for `i ∈ B` (1-based).
    pub fn sign_flip(g: usize, b: &[usize]) -> Self {
        let mut signs = vec![1; g];
        for &i in b {
            signs[g - i] = -1;
        }
        Self { perm: (0..g).collect(), signs }
    }

    pub fn genus(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn act(&self, x: &[i64]) -> Vec<i64> {
        assert_eq!(x.len(), self.genus(), "genus mismatch in Weyl action");
        let mut y = vec![0; x.len()];
        for (k, &xk) in x.iter().enumerate() {
            let j = self.perm[k];
            y[j] = self.signs[j] as i64 * xk;
        }
        y
    }

    pub fn act_weight(&self, w: &Weight) -> Result<Weight> {
        self.check_genus(w.genus())?;
        Ok(Weight::from_parts_unchecked(self.act(w.coords()), w.central()))
    }

    /// `self ∘ other`, acting right to left.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        assert_eq!(self.genus(), other.genus(), "genus mismatch in composition");
        let g = self.genus();
        let mut perm = vec![0; g];
        let mut signs = vec![1; g];
        for k in 0..g {
            let mid = other.perm[k];
            let j = self.perm[mid];
            perm[k] = j;
            signs[j] = self.signs[j] * other.signs[mid];
        }
        WeylElement { perm, signs }
    }

    pub fn inverse(&self) -> WeylElement {
        let g = self.genus();
        let mut perm = vec![0; g];
        let mut signs = vec![1; g];
        for k in 0..g {
            perm[self.perm[k]] = k;
        }
        for j in 0..g {
            signs[perm[j]] = self.signs[j];
        }
        WeylElement { perm, signs }
    }

    /// `#{α > 0 : wα < 0}`.
    pub fn length(&self) -> usize {
        positive_roots(self.genus()).iter().filter(|r| !is_positive(&self.act(&r.vector))).count()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.genus())
    }

    /// Embed an element of `W(G_{g-r})` acting on the last `g - r` positions.
    pub fn embed(&self, g: usize) -> Result<WeylElement> {
        let h = self.genus();
        if h > g {
            return Err(Error::GenusMismatch { expected: g, got: h });
        }
        let r = g - h;
        let mut perm: Vec<usize> = (0..r).collect();
        perm.extend(self.perm.iter().map(|p| p + r));
        let mut signs = vec![1; r];
        signs.extend(&self.signs);
        Ok(WeylElement { perm, signs })
    }

    /// True when the element fixes the first `s` positions.
    pub fn fixes_prefix(&self, s: usize) -> bool {
        (0..s.min(self.genus())).all(|k| self.perm[k] == k && self.signs[k] == 1)
    }

    fn check_genus(&self, g: usize) -> Result<()> {
        if g == self.genus() {
            Ok(())
        } else {
            Err(Error::GenusMismatch { expected: self.genus(), got: g })
        }
    }
}

impl fmt::Display for WeylElement {
    /// Signed one-line notation: the image of `x = (x_g, ..., x_1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.genus();
        let mut out = vec![String::new(); g];
        for k in 0..g {
            let j = self.perm[k];
            let sign = if self.signs[j] < 0 { "-" } else { "" };
            out[j] = format!("{sign}x{}", g - k);
        }
        write!(f, "[{}]", out.join(","))
    }
}

impl Serialize for WeylElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// All `2^g g!` elements in a fixed order.
pub fn enumerate(g: usize) -> Result<Vec<WeylElement>> {
    if g > MAX_ENUMERATION_GENUS {
        return Err(Error::GroupTooLarge { g, limit: MAX_ENUMERATION_GENUS });
    }
    let mut out = Vec::with_capacity((1 << g) * (1..=g).product::<usize>());
    for perm in (0..g).permutations(g) {
        for mask in 0u32..(1 << g) {
            let signs = (0..g).map(|j| if mask >> j & 1 == 1 { -1 } else { 1 }).collect();
            out.push(WeylElement { perm: perm.clone(), signs });
        }
    }
    Ok(out)
}

/// `w·λ = w(λ+ρ) - ρ`.
pub fn dot_action(w: &WeylElement, lambda: &Weight) -> Result<Weight> {
    shifted_dot(w, lambda, &rho_coords(lambda.genus()))
}

/// `ρ_s = (0, ..., 0, g-s, ..., 1)`, the half-sum for `G_{g-s}` embedded on
/// the last `g - s` positions.
pub fn nested_rho(g: usize, s: usize) -> Vec<i64> {
    let mut v = vec![0; s.min(g)];
    v.extend((1..=(g.saturating_sub(s)) as i64).rev());
    v
}

fn shifted_dot(w: &WeylElement, lambda: &Weight, rho: &[i64]) -> Result<Weight> {
    w.check_genus(lambda.genus())?;
    let shifted: Vec<i64> = lambda.coords().iter().zip(rho).map(|(a, r)| a + r).collect();
    let moved = w.act(&shifted);
    Ok(Weight::from_parts_unchecked(moved.iter().zip(rho).map(|(a, r)| a - r).collect(), lambda.central()))
}

/// Iterated dot action with `chain[s]` taken in `W(G_{g-s})`.
pub fn iterated_dot(lambda: &Weight, chain: &[WeylElement]) -> Result<Weight> {
    let leveled: Vec<(usize, WeylElement)> = chain.iter().cloned().enumerate().collect();
    iterated_dot_levels(lambda, &leveled)
}

/// Iterated dot action where each step names the level `s` of its nested
/// group `W(G_{g-s})` and uses `ρ_s`.
pub fn iterated_dot_levels(lambda: &Weight, chain: &[(usize, WeylElement)]) -> Result<Weight> {
    let g = lambda.genus();
    let mut mu = lambda.clone();
    for (index, (level, w)) in chain.iter().enumerate() {
        if *level > g || !w.fixes_prefix(*level) {
            return Err(Error::NotInSubgroup { index, level: *level });
        }
        mu = shifted_dot(w, &mu, &nested_rho(g, *level))?;
    }
    Ok(mu)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parabolic {
    /// Levi `GL(g) × G_m`, Weyl group `S_g`.
    Siegel,
    /// Levi `GL(r) × GSp(2g-2r)`, Weyl group `S_r × W(G_{g-r})`.
    P(usize),
}

impl fmt::Display for Parabolic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parabolic::Siegel => write!(f, "Siegel"),
            Parabolic::P(r) => write!(f, "P_{r}"),
        }
    }
}

impl Serialize for Parabolic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl Parabolic {
    fn validate(self, g: usize) -> Result<usize> {
        match self {
            Parabolic::Siegel => Ok(g),
            Parabolic::P(r) if (1..=g).contains(&r) => Ok(r),
            Parabolic::P(r) => Err(Error::InvalidParabolic { g, r }),
        }
    }

    /// Canonical label of the right coset `W_P w`, read off `w(x)` for the
    /// regular vector `x = (g, ..., 1)`.
    fn coset_key(self, g: usize, w: &WeylElement) -> Vec<i64> {
        let r = match self {
            Parabolic::Siegel => g,
            Parabolic::P(r) => r,
        };
        let y = w.act(&rho_coords(g));
        let mut head: Vec<i64> = y[..r].to_vec();
        head.sort_unstable();
        let mut tail: Vec<i64> = y[r..].iter().map(|v| v.abs()).collect();
        tail.sort_unstable();
        head.extend(tail);
        head
    }

    /// Membership in the Levi Weyl group.
    pub fn contains(self, w: &WeylElement) -> bool {
        let g = w.genus();
        let r = match self {
            Parabolic::Siegel => g,
            Parabolic::P(r) => r,
        };
        (0..r).all(|k| w.perm[k] < r && w.signs[w.perm[k]] == 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KostantRep {
    pub element: WeylElement,
    pub length: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CosetTable {
    pub g: usize,
    pub parabolic: Parabolic,
    pub representatives: Vec<KostantRep>,
}

impl CosetTable {
    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    pub fn elements(&self) -> impl Iterator<Item = &WeylElement> {
        self.representatives.iter().map(|r| &r.element)
    }

    /// The unique representative of maximal length.
    pub fn longest(&self) -> &KostantRep {
        self.representatives.iter().max_by_key(|r| r.length).expect("coset tables are never empty")
    }
}

/// Minimal-length representatives of the right cosets `W_P \ W_G`, found by
/// exhaustive scan. Genus 0 yields the single trivial element.
pub fn kostant_reps(g: usize, parabolic: Parabolic) -> Result<CosetTable> {
    parabolic.validate(g)?;
    let mut cosets: BTreeMap<Vec<i64>, Vec<(usize, WeylElement)>> = BTreeMap::new();
    for w in enumerate(g)? {
        cosets.entry(parabolic.coset_key(g, &w)).or_default().push((w.length(), w));
    }
    let mut reps = Vec::with_capacity(cosets.len());
    for (_, members) in cosets {
        let min = members.iter().map(|(l, _)| *l).min().expect("cosets are nonempty");
        let mut minimal: Vec<WeylElement> = members.into_iter().filter(|(l, _)| *l == min).map(|(_, w)| w).collect();
        if minimal.len() != 1 {
            return Err(Error::AmbiguousCoset { count: minimal.len() });
        }
        reps.push(KostantRep { element: minimal.remove(0), length: min });
    }
    reps.sort_by(|a, b| a.length.cmp(&b.length).then_with(|| a.element.cmp(&b.element)));
    Ok(CosetTable { g, parabolic, representatives: reps })
}

/// The unique length-`d` Siegel Kostant representative `w'`.
pub fn longest_kostant(g: usize) -> Result<WeylElement> {
    Ok(kostant_reps(g, Parabolic::Siegel)?.longest().element.clone())
}
