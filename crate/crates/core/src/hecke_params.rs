//! Valuation arithmetic for unramified parameters: the central twist, spin
//! slopes `ord ξ_J`, the slope system and its solver, the ordinarity
//! predicate on `T_{p,r}` valuations, and the restriction of diagonal double
//! cosets to a boundary stratum.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::root_datum::{middle_degree, require_odd_prime, Weight};
use crate::scalar::{from_i64, serialize_display, serialize_display_vec, Scalar};

/// `(α_g, ..., α_1; γ)` parameterizing
/// `diag(t, ν t^{-1}) ↦ Π |t_i|^{α_i} · |ν|^{(γ - Σα_i)/2}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct UnramifiedParameter<S: Scalar> {
    pub g: usize,
    #[serde(serialize_with = "serialize_display_vec")]
    pub alphas: Vec<S>,
    #[serde(serialize_with = "serialize_display")]
    pub gamma: S,
    pub p: u64,
}

/// Exponents of `t ↦ (|t|^{α_g}, ..., |t|^{α_1}, [|t|^{u}, |t|^{z}])` in the
/// spin torus.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpinTorusExponents<S: Scalar> {
    #[serde(serialize_with = "serialize_display_vec")]
    pub alphas: Vec<S>,
    #[serde(serialize_with = "serialize_display")]
    pub u: S,
    #[serde(serialize_with = "serialize_display")]
    pub z: S,
}

impl<S: Scalar> UnramifiedParameter<S> {
    pub fn new(alphas: Vec<S>, gamma: S, p: u64) -> Result<Self> {
        require_odd_prime(p)?;
        if alphas.is_empty() {
            return Err(Error::ZeroGenus);
        }
        Ok(Self { g: alphas.len(), alphas, gamma, p })
    }

    /// `γ ↦ γ - d`.
    pub fn twist(&self) -> Self {
        Self { gamma: self.gamma.clone() - from_i64(middle_degree(self.g)), ..self.clone() }
    }

    /// The twisted cocharacter: `u = (α_g + ... + α_1)/2`, `z = (γ - d)/2`.
    pub fn twisted_cocharacter(&self) -> SpinTorusExponents<S> {
        let two: S = from_i64(2);
        let sum = self.alphas.iter().cloned().fold(S::zero(), |a, b| a + b);
        SpinTorusExponents {
            alphas: self.alphas.clone(),
            u: sum / two.clone(),
            z: (self.gamma.clone() - from_i64(middle_degree(self.g))) / two,
        }
    }

    /// Exponent `e` with `φ(diag(t, ν t^{-1})) = p^e` when `ord t_i = n_i`
    /// (display order) and `ord ν = m`.
    pub fn evaluate(&self, ords: &[i64], ord_nu: i64) -> Result<S> {
        if ords.len() != self.g {
            return Err(Error::LengthMismatch { expected: self.g, got: ords.len() });
        }
        let sum = self.alphas.iter().cloned().fold(S::zero(), |a, b| a + b);
        let mut e = S::zero();
        for (a, &n) in self.alphas.iter().zip(ords) {
            e = e - a.clone() * from_i64(n);
        }
        Ok(e - (self.gamma.clone() - sum) / from_i64(2) * from_i64(ord_nu))
    }
}

/// A subset `J ⊆ {1, ..., g}` as a bitmask (bit `i-1` ↔ `i`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset(pub u32);

impl Subset {
    pub fn contains(self, i: usize) -> bool {
        self.0 >> (i - 1) & 1 == 1
    }

    pub fn with(self, i: usize) -> Subset {
        Subset(self.0 | 1 << (i - 1))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let members: Vec<String> = (1..=32).filter(|&i| self.contains(i)).map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", members.join(","))
    }
}

impl Serialize for Subset {
    fn serialize<Se: Serializer>(&self, s: Se) -> std::result::Result<Se::Ok, Se::Error> {
        s.collect_str(self)
    }
}

/// Target slopes `s_J`, indexed by bitmask.
#[derive(Clone, Debug, PartialEq)]
pub struct SlopeSystem<S: Scalar> {
    pub g: usize,
    slopes: Vec<S>,
}

impl<S: Scalar> SlopeSystem<S> {
    pub fn new(g: usize, slopes: Vec<S>) -> Result<Self> {
        if g == 0 {
            return Err(Error::ZeroGenus);
        }
        if slopes.len() != 1 << g {
            return Err(Error::LengthMismatch { expected: 1 << g, got: slopes.len() });
        }
        Ok(Self { g, slopes })
    }

    pub fn get(&self, j: Subset) -> &S {
        &self.slopes[j.0 as usize]
    }

    pub fn values(&self) -> &[S] {
        &self.slopes
    }

    pub fn iter(&self) -> impl Iterator<Item = (Subset, &S)> {
        self.slopes.iter().enumerate().map(|(m, s)| (Subset(m as u32), s))
    }
}

impl<S: Scalar> Serialize for SlopeSystem<S> {
    fn serialize<Se: Serializer>(&self, s: Se) -> std::result::Result<Se::Ok, Se::Error> {
        s.collect_map(self.iter().map(|(j, v)| (j.to_string(), v.to_string())))
    }
}

/// How the unknowns enter the slope equations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SlopeConvention {
    /// `ord ξ_J = (-Σ_{i∈J} t_i + Σ_{i∉J} t_i)/2 + z` with `t_i = ord θ_i`,
    /// `z = ord ζ`.
    Spin,
    /// `-(y + d + Σ_{i∈J} x_i - Σ_{i∉J} x_i)/2 = s_J`.
    Displayed,
}

/// Unknowns in display order `(i = g, ..., 1)` plus the central unknown.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SlopeSolution<S: Scalar> {
    pub convention: SlopeConvention,
    #[serde(serialize_with = "serialize_display_vec")]
    pub coords: Vec<S>,
    #[serde(serialize_with = "serialize_display")]
    pub central: S,
}

impl<S: Scalar> SlopeSolution<S> {
    /// Coordinate for index `i` (1-based).
    pub fn at(&self, i: usize) -> &S {
        &self.coords[self.coords.len() - i]
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SlopeViolation<S: Scalar> {
    pub subset: Subset,
    #[serde(serialize_with = "serialize_display")]
    pub given: S,
    #[serde(serialize_with = "serialize_display")]
    pub predicted: S,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SlopeOutcome<S: Scalar> {
    Consistent { solution: SlopeSolution<S> },
    Inconsistent { candidate: SlopeSolution<S>, violations: Vec<SlopeViolation<S>> },
}

impl<S: Scalar> SlopeOutcome<S> {
    pub fn solution(&self) -> Option<&SlopeSolution<S>> {
        match self {
            SlopeOutcome::Consistent { solution } => Some(solution),
            SlopeOutcome::Inconsistent { .. } => None,
        }
    }

    pub fn is_consistent(&self) -> bool {
        matches!(self, SlopeOutcome::Consistent { .. })
    }
}

fn signed_half_sum<S: Scalar>(coords: &[S], j: Subset) -> S {
    // (Σ_{i∉J} c_i - Σ_{i∈J} c_i) / 2, coords in display order
    let g = coords.len();
    let mut acc = S::zero();
    for i in 1..=g {
        let c = coords[g - i].clone();
        acc = if j.contains(i) { acc - c } else { acc + c };
    }
    acc / from_i64(2)
}

/// `ord ξ_J` for all `J`, from `t` (display order) and `z`.
pub fn spin_slopes<S: Scalar>(t: &[S], z: &S) -> Result<SlopeSystem<S>> {
    let g = t.len();
    let slopes = (0..1u32 << g).map(|m| signed_half_sum(t, Subset(m)) + z.clone()).collect();
    SlopeSystem::new(g, slopes)
}

/// `s_J = -(y + d + Σ_{i∈J} x_i - Σ_{i∉J} x_i)/2` for all `J`.
pub fn displayed_slopes<S: Scalar>(x: &[S], y: &S) -> Result<SlopeSystem<S>> {
    let g = x.len();
    let d: S = from_i64(middle_degree(g));
    let two: S = from_i64(2);
    let slopes = (0..1u32 << g)
        .map(|m| signed_half_sum(x, Subset(m)) - (y.clone() + d.clone()) / two.clone())
        .collect();
    SlopeSystem::new(g, slopes)
}

/// Eliminate: differences `s_∅ - s_{k}` give the coordinates, the empty-set
/// equation gives the central unknown; then every equation is re-checked.
pub fn solve_slope_system<S: Scalar>(sys: &SlopeSystem<S>, convention: SlopeConvention) -> SlopeOutcome<S> {
    let g = sys.g;
    let empty = sys.get(Subset(0)).clone();
    let coords: Vec<S> = (1..=g).rev().map(|i| empty.clone() - sys.get(Subset(0).with(i)).clone()).collect();
    let sum = coords.iter().cloned().fold(S::zero(), |a, b| a + b);
    let two: S = from_i64(2);
    let (central, predicted) = match convention {
        SlopeConvention::Spin => {
            let z = empty - sum / two;
            let pred = spin_slopes(&coords, &z).expect("genus is positive");
            (z, pred)
        }
        SlopeConvention::Displayed => {
            let y = -(two * empty) - from_i64(middle_degree(g)) + sum;
            let pred = displayed_slopes(&coords, &y).expect("genus is positive");
            (y, pred)
        }
    };
    let candidate = SlopeSolution { convention, coords, central };
    let violations: Vec<SlopeViolation<S>> = sys
        .iter()
        .filter(|(j, v)| *v != predicted.get(*j))
        .map(|(j, v)| SlopeViolation { subset: j, given: v.clone(), predicted: predicted.get(j).clone() })
        .collect();
    if violations.is_empty() {
        SlopeOutcome::Consistent { solution: candidate }
    } else {
        SlopeOutcome::Inconsistent { candidate, violations }
    }
}

/// `v_r = a_{r+1} + ... + a_g` for `r = 1, ..., g`.
pub fn ao_valuations(lambda: &Weight) -> Vec<i64> {
    let g = lambda.genus();
    (1..=g).map(|r| (r + 1..=g).map(|i| lambda.a(i)).sum()).collect()
}

/// True iff `valuations[r-1] = a_{r+1} + ... + a_g` for every `r`.
pub fn ao_predicate<S: Scalar>(valuations: &[S], lambda: &Weight) -> Result<bool> {
    let g = lambda.genus();
    if valuations.len() != g {
        return Err(Error::LengthMismatch { expected: g, got: valuations.len() });
    }
    Ok(valuations.iter().zip(ao_valuations(lambda)).all(|(v, e)| *v == from_i64(e)))
}

/// Valuations `v_r = Σ_{i>r} (-t_i - i)` read off solved spin slopes.
pub fn valuations_from_slopes<S: Scalar>(solution: &SlopeSolution<S>) -> Vec<S> {
    let g = solution.coords.len();
    (1..=g)
        .map(|r| {
            (r + 1..=g).fold(S::zero(), |acc, i| acc - solution.at(i).clone() - from_i64(i as i64))
        })
        .collect()
}

/// The class of `diag(q^{e_1}, ..., q^{e_{2g}})` with `e_i + e_{2g+1-i} = c`
/// and `e_1 ≤ ... ≤ e_g`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorusDoubleCoset {
    pub g: usize,
    pub exponents: Vec<i64>,
    pub similitude: i64,
}

impl TorusDoubleCoset {
    pub fn new(exponents: Vec<i64>) -> Result<Self> {
        if exponents.is_empty() || exponents.len() % 2 != 0 {
            return Err(Error::MalformedCoset(format!("{} exponents; need 2g with g ≥ 1", exponents.len())));
        }
        let n = exponents.len();
        let g = n / 2;
        let c = exponents[0] + exponents[n - 1];
        if (0..g).any(|i| exponents[i] + exponents[n - 1 - i] != c) {
            return Err(Error::MalformedCoset(format!("{exponents:?} is not symplectic: e_i + e_(2g+1-i) varies")));
        }
        if exponents[..g].windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::MalformedCoset(format!("{exponents:?}: first g exponents must weakly increase")));
        }
        Ok(Self { g, exponents, similitude: c })
    }

    pub fn unit(g: usize) -> Self {
        Self { g, exponents: vec![0; 2 * g], similitude: 0 }
    }

    pub fn is_unit(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }
}

impl fmt::Display for TorusDoubleCoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self.exponents.iter().map(|x| x.to_string()).collect();
        write!(f, "diag(q^[{}])", e.join(","))
    }
}

/// `φ_{g-r}`: keep the middle block when the first `r` exponents vanish,
/// otherwise `None` (the zero element).
pub fn satake_restrict(c: &TorusDoubleCoset, r: usize) -> Result<Option<TorusDoubleCoset>> {
    if !(1..=c.g).contains(&r) {
        return Err(Error::InvalidParabolic { g: c.g, r });
    }
    if c.exponents[..r].iter().any(|&e| e != 0) {
        return Ok(None);
    }
    let n = c.exponents.len();
    Ok(Some(TorusDoubleCoset { g: c.g - r, exponents: c.exponents[r..n - r].to_vec(), similitude: c.similitude }))
}
