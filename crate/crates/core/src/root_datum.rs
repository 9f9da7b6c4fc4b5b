//! Based root datum of GSp(2g), its dual GSpin(2g+1), and weight arithmetic.
//!
//! Weights are stored as `(m_g, ..., m_1; m_c)`: the semisimple coordinates in
//! the basis `e_g, ..., e_1` followed by the full similitude coordinate. A
//! character of the diagonal torus satisfies `m_c = m_g + ... + m_1 (mod 2)`.
//! Roots have central coordinate 0, so they are stored by their semisimple
//! part only.

use std::fmt;

use num_rational::Rational64;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// `d = g(g+1)/2`, the dimension of the Siegel variety of genus `g`.
pub fn middle_degree(g: usize) -> i64 {
    (g * (g + 1) / 2) as i64
}

/// A character `(m_g, ..., m_1; m_c)` of the diagonal torus of GSp(2g).
///
/// Genus 0 is allowed so that Levi factors `GSp(0) = G_m` can carry weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    coords: Vec<i64>,
    central: i64,
}

impl Weight {
    /// Build a weight from coordinates in display order `(m_g, ..., m_1)`.
    pub fn new(coords: Vec<i64>, central: i64) -> Result<Self> {
        let sum: i64 = coords.iter().sum();
        if (sum - central).rem_euclid(2) != 0 {
            return Err(Error::ParityViolation { sum, central });
        }
        Ok(Self { coords, central })
    }

    /// The weight `(a_g, ..., a_1; a_g + ... + a_1)`.
    pub fn with_standard_central(coords: Vec<i64>) -> Self {
        let central = coords.iter().sum();
        Self { coords, central }
    }

    pub fn zero(g: usize) -> Self {
        Self { coords: vec![0; g], central: 0 }
    }

    pub fn genus(&self) -> usize {
        self.coords.len()
    }

    /// Semisimple coordinates in display order `(m_g, ..., m_1)`.
    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn central(&self) -> i64 {
        self.central
    }

    /// The coordinate `a_i` (1-based, `a_1` is the last displayed entry).
    pub fn a(&self, i: usize) -> i64 {
        self.coords[self.genus() - i]
    }

    /// `|λ| = a_g + ... + a_1`.
    pub fn size(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.windows(2).all(|w| w[0] >= w[1]) && self.coords.last().is_none_or(|&m| m >= 0)
    }

    pub fn require_dominant(&self) -> Result<()> {
        if self.is_dominant() {
            Ok(())
        } else {
            Err(Error::NotDominant(self.to_string()))
        }
    }

    /// True when `c = a_g + ... + a_1`, the normalization used throughout
    /// the Hodge bookkeeping.
    pub fn has_standard_central(&self) -> bool {
        self.central == self.size()
    }

    pub fn checked_add(&self, other: &Weight) -> Result<Weight> {
        same_genus(self.genus(), other.genus())?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        Ok(Weight { coords, central: self.central + other.central })
    }

    pub(crate) fn from_parts_unchecked(coords: Vec<i64>, central: i64) -> Self {
        debug_assert!((coords.iter().sum::<i64>() - central).rem_euclid(2) == 0);
        Self { coords, central }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, self.coords.iter().map(|c| c.to_string()), self.central.to_string())
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, coords: impl Iterator<Item = String>, central: String) -> fmt::Result {
    let body: Vec<String> = coords.collect();
    write!(f, "({};{})", body.join(","), central)
}

fn same_genus(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::GenusMismatch { expected, got })
    }
}

/// A point of `X*(T) ⊗ (1/2)Z`, stored as doubled integer coordinates.
///
/// Houses `ρ` (which breaks character parity when `d` is odd), the minuscule
/// weight `ϖ̂ = (1/2, ..., 1/2; 1/2)` and the spin weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfWeight {
    twice: Vec<i64>,
    twice_central: i64,
}

impl HalfWeight {
    pub fn from_doubled(twice: Vec<i64>, twice_central: i64) -> Self {
        Self { twice, twice_central }
    }

    pub fn from_integers(coords: Vec<i64>, central: i64) -> Self {
        Self { twice: coords.iter().map(|c| 2 * c).collect(), twice_central: 2 * central }
    }

    pub fn genus(&self) -> usize {
        self.twice.len()
    }

    pub fn coords(&self) -> Vec<Rational64> {
        self.twice.iter().map(|&c| Rational64::new(c, 2)).collect()
    }

    pub fn central(&self) -> Rational64 {
        Rational64::new(self.twice_central, 2)
    }

    pub fn doubled_coords(&self) -> &[i64] {
        &self.twice
    }

    /// Integral coordinates, if every coordinate is an integer.
    pub fn integral_coords(&self) -> Option<Vec<i64>> {
        self.twice.iter().map(|&c| (c % 2 == 0).then_some(c / 2)).collect()
    }

    /// Convert to a character, when coordinates are integral and parity holds.
    pub fn to_weight(&self) -> Result<Weight> {
        let coords = self
            .integral_coords()
            .ok_or_else(|| Error::InvalidElement(format!("{self} has half-integral coordinates")))?;
        if self.twice_central % 2 != 0 {
            return Err(Error::InvalidElement(format!("{self} has half-integral central part")));
        }
        Weight::new(coords, self.twice_central / 2)
    }

    pub fn add_weight(&self, w: &Weight) -> Result<HalfWeight> {
        same_genus(self.genus(), w.genus())?;
        Ok(HalfWeight {
            twice: self.twice.iter().zip(w.coords()).map(|(a, b)| a + 2 * b).collect(),
            twice_central: self.twice_central + 2 * w.central(),
        })
    }

    /// Full scalar product `Σ h_i m_i + h_c m_c` with a character.
    pub fn pair(&self, w: &Weight) -> Result<Rational64> {
        same_genus(self.genus(), w.genus())?;
        let twice: i64 =
            self.twice.iter().zip(w.coords()).map(|(h, m)| h * m).sum::<i64>() + self.twice_central * w.central();
        Ok(Rational64::new(twice, 2))
    }

    /// `μ(H)` for `H = diag(0,...,0,-1,...,-1)`, i.e. `(Σ m_i - m_c)/2`.
    pub fn h_pairing(&self) -> Rational64 {
        let s: i64 = self.twice.iter().sum();
        Rational64::new(s - self.twice_central, 4)
    }
}

impl fmt::Display for HalfWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |c: i64| if c % 2 == 0 { (c / 2).to_string() } else { format!("{c}/2") };
        write_tuple(f, self.twice.iter().map(|&c| show(c)), show(self.twice_central))
    }
}

impl Serialize for HalfWeight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum RootLength {
    Short,
    Long,
}

/// A root of GSp(2g) (central coordinate 0), with its coroot.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Root {
    pub vector: Vec<i64>,
    pub coroot: Vec<i64>,
    pub length: RootLength,
    pub positive: bool,
}

impl Root {
    fn from_vector(vector: Vec<i64>) -> Self {
        let norm: i64 = vector.iter().map(|x| x * x).sum();
        let (length, coroot) = if norm == 4 {
            (RootLength::Long, vector.iter().map(|x| x / 2).collect())
        } else {
            (RootLength::Short, vector.clone())
        };
        let positive = is_positive(&vector);
        Root { vector, coroot, length, positive }
    }

    pub fn as_weight(&self) -> Weight {
        Weight::from_parts_unchecked(self.vector.clone(), 0)
    }
}

/// Positivity for the standard Borel: pairing with `(g, ..., 1)` is positive.
pub(crate) fn is_positive(v: &[i64]) -> bool {
    let g = v.len() as i64;
    v.iter().enumerate().map(|(k, x)| x * (g - k as i64)).sum::<i64>() > 0
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn unit(g: usize, i: usize) -> Vec<i64> {
    // e_i sits at display position g - i
    let mut v = vec![0; g];
    v[g - i] = 1;
    v
}

/// Simple roots `α_g, ..., α_1` with coroots: `α_{i+1} = e_{i+1} - e_i`,
/// `α_1 = 2 e_1`.
pub fn simple_roots(g: usize) -> Result<Vec<Root>> {
    if g == 0 {
        return Err(Error::ZeroGenus);
    }
    Ok((1..=g)
        .rev()
        .map(|i| {
            if i == 1 {
                Root::from_vector(unit(g, 1).iter().map(|x| 2 * x).collect())
            } else {
                Root::from_vector(unit(g, i).iter().zip(unit(g, i - 1)).map(|(a, b)| a - b).collect())
            }
        })
        .collect())
}

/// All roots `±e_i ± e_j (i ≠ j)` and `±2 e_i`.
pub fn roots(g: usize) -> Vec<Root> {
    let mut out = Vec::with_capacity(2 * g * g);
    for i in 1..=g {
        for j in 1..i {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let v = unit(g, i).iter().zip(unit(g, j)).map(|(a, b)| si * a + sj * b).collect();
                out.push(Root::from_vector(v));
            }
        }
        for s in [2, -2] {
            out.push(Root::from_vector(unit(g, i).iter().map(|x| s * x).collect()));
        }
    }
    out
}

pub fn positive_roots(g: usize) -> Vec<Root> {
    roots(g).into_iter().filter(|r| r.positive).collect()
}

/// `ρ = (g, ..., 1; 0)`, stored in the half-integer lattice.
pub fn rho(g: usize) -> HalfWeight {
    HalfWeight::from_integers(rho_coords(g), 0)
}

pub(crate) fn rho_coords(g: usize) -> Vec<i64> {
    (1..=g as i64).rev().collect()
}

/// `ρ̃ = (g, ..., 1; d)`, a genuine character.
pub fn rho_tilde(g: usize) -> Weight {
    Weight::from_parts_unchecked(rho_coords(g), middle_degree(g))
}

/// `λ̂ = (a_g, ..., a_1; -c)`.
pub fn dual_weight(lambda: &Weight) -> Weight {
    Weight::from_parts_unchecked(lambda.coords().to_vec(), -lambda.central())
}

/// `w = |λ + ρ| = Σ (a_i + i)`.
pub fn motivic_weight(lambda: &Weight) -> Result<i64> {
    lambda.require_dominant()?;
    Ok(lambda.size() + middle_degree(lambda.genus()))
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= p {
        if p % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

/// Reject non-primes and `p = 2`.
pub fn require_odd_prime(p: u64) -> Result<()> {
    if p == 2 {
        Err(Error::CharacteristicTwo)
    } else if !is_prime(p) {
        Err(Error::NotPrime(p))
    } else {
        Ok(())
    }
}

/// `p - 1 > |λ + ρ|`.
pub fn is_p_small(lambda: &Weight, p: u64) -> Result<bool> {
    require_odd_prime(p)?;
    Ok(p as i64 - 1 > motivic_weight(lambda)?)
}

/// The auxiliary hypothesis `p > 5`.
pub fn exceeds_five(p: u64) -> bool {
    p > 5
}

/// The looser lattice-uniqueness bound `a_g + a_{g-1} + g + (g-1) < p`.
pub fn satisfies_lattice_bound(lambda: &Weight, p: u64) -> Result<bool> {
    require_odd_prime(p)?;
    lambda.require_dominant()?;
    let g = lambda.genus();
    let top = lambda.a(g) + g as i64;
    let next = if g >= 2 { lambda.a(g - 1) + g as i64 - 1 } else { 0 };
    Ok(top + next < p as i64)
}

/// Smallest prime with `p > 5` and `p - 1 > |λ + ρ|`.
pub fn minimal_admissible_prime(lambda: &Weight) -> Result<u64> {
    let w = motivic_weight(lambda)? as u64;
    Ok((6..).find(|&p| is_prime(p) && exceeds_five(p) && p - 1 > w).expect("primes are unbounded"))
}

/// `μ(H) = (Σ m_i - m_c)/2`, an integer for characters.
pub fn h_pairing(mu: &Weight) -> i64 {
    (mu.size() - mu.central()) / 2
}

/// `ϖ̂ = (1/2, ..., 1/2; 1/2)`, the highest weight of the spin representation.
pub fn varpi_hat(g: usize) -> HalfWeight {
    HalfWeight::from_doubled(vec![1; g], 1)
}

/// `ϖ̂ ∘ μ = |μ_ss|/2 + μ_c/2`, an integer for characters.
pub fn minuscule_pairing(mu: &Weight) -> i64 {
    (mu.size() + mu.central()) / 2
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum DatumSide {
    /// `(X*(T), R, Δ, X_*(T), R^∨, Δ^∨)` for GSp(2g).
    Symplectic,
    /// The swapped datum, i.e. GSpin(2g+1).
    Spin,
}

/// A based root datum in the fixed coordinates; roots live in the first
/// lattice, coroots in the second.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootDatum {
    pub g: usize,
    pub side: DatumSide,
    pub simple_roots: Vec<Vec<i64>>,
    pub simple_coroots: Vec<Vec<i64>>,
    pub positive_roots: Vec<Vec<i64>>,
    pub positive_coroots: Vec<Vec<i64>>,
}

impl RootDatum {
    pub fn symplectic(g: usize) -> Result<Self> {
        let simple = simple_roots(g)?;
        let positive = positive_roots(g);
        Ok(Self {
            g,
            side: DatumSide::Symplectic,
            simple_roots: simple.iter().map(|r| r.vector.clone()).collect(),
            simple_coroots: simple.iter().map(|r| r.coroot.clone()).collect(),
            positive_roots: positive.iter().map(|r| r.vector.clone()).collect(),
            positive_coroots: positive.iter().map(|r| r.coroot.clone()).collect(),
        })
    }

    /// `A[i][j] = <α_i, α_j^∨>` in the order `α_g, ..., α_1`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        self.simple_roots
            .iter()
            .map(|a| self.simple_coroots.iter().map(|c| dot(a, c)).collect())
            .collect()
    }

    /// Half-sum of the positive roots of this side.
    pub fn rho(&self) -> HalfWeight {
        let mut twice = vec![0; self.g];
        for r in &self.positive_roots {
            for (t, x) in twice.iter_mut().zip(r) {
                *t += x;
            }
        }
        HalfWeight::from_doubled(twice, 0)
    }
}

/// Exchange `(M, R, Δ)` and `(M*, R^∨, Δ^∨)`.
pub fn dual_root_datum(rd: &RootDatum) -> RootDatum {
    RootDatum {
        g: rd.g,
        side: match rd.side {
            DatumSide::Symplectic => DatumSide::Spin,
            DatumSide::Spin => DatumSide::Symplectic,
        },
        simple_roots: rd.simple_coroots.clone(),
        simple_coroots: rd.simple_roots.clone(),
        positive_roots: rd.positive_coroots.clone(),
        positive_coroots: rd.positive_roots.clone(),
    }
}

/// Type C_g Cartan matrix in the order `α_g, ..., α_1` (long root last).
pub fn type_c_cartan(g: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0; g]; g];
    for i in 0..g {
        a[i][i] = 2;
        if i + 1 < g {
            a[i][i + 1] = -1;
            a[i + 1][i] = if i + 2 == g { -2 } else { -1 };
        }
    }
    a
}
