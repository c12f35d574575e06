//! Moments and free cumulants.
//!
//! Two routes connect a moment sequence `m_n` to free cumulants `R_n`:
//!
//! * the fast recursion
//!   `m_n = sum_k R_k * [z^{n-k}] M(z)^k` with `M(z) = 1 + sum m_i z^i`,
//!   which is triangular in `R_n` and so inverts directly;
//! * the defining sum over non-crossing partitions,
//!   `m_n = sum_{pi in NC(n)} prod_{B in pi} R_{|B|}`, kept as a brute-force
//!   oracle in [`moments_via_nc_oracle`].
//!
//! Mixed moments of words in two free variables `X`, `Y` (and optionally a
//! leading `X^{-1}`) are computed by [`word_moment`], which sums over
//! non-crossing partitions and drops every block that mixes free letters.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{for_each_nc, for_each_nc_where};
use crate::rational::{self, Rat};
use crate::series::RationalSeries;

/// Longest word accepted by [`word_moment`].
pub const WORD_CAP: usize = 12;
/// Largest `n` accepted by [`moments_via_nc_oracle`].
pub const ORACLE_CAP: usize = 10;

/// Moments `m_1..m_N`, optionally with the moment of order `-1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MomentSeq {
    #[serde(with = "rational::serde_rat_vec")]
    m: Vec<Rat>,
    #[serde(skip)]
    inv: Option<Rat>,
}

impl MomentSeq {
    pub fn new(m: Vec<Rat>) -> Self {
        Self { m, inv: None }
    }

    pub fn with_inverse(m: Vec<Rat>, inv: Rat) -> Self {
        Self { m, inv: Some(inv) }
    }

    pub fn from_ints(m: &[i64]) -> Self {
        Self::new(m.iter().map(|&x| rational::int(x)).collect())
    }

    /// Moments of the point mass at `a`.
    pub fn point_mass(a: &Rat, len: usize) -> Self {
        Self::new((1..=len).map(|k| rational::pow(a, k)).collect())
    }

    pub fn len(&self) -> usize {
        self.m.len()
    }

    pub fn is_empty(&self) -> bool {
        self.m.is_empty()
    }

    pub fn moments(&self) -> &[Rat] {
        &self.m
    }

    /// `m_k` with `m_0 = 1`.
    pub fn get(&self, k: usize) -> Option<Rat> {
        if k == 0 {
            Some(Rat::one())
        } else {
            self.m.get(k - 1).cloned()
        }
    }

    pub fn inverse(&self) -> Option<&Rat> {
        self.inv.as_ref()
    }

    /// `1 + m_1 z + ... + m_N z^N`.
    pub fn to_series(&self) -> RationalSeries {
        let mut c = Vec::with_capacity(self.m.len() + 1);
        c.push(Rat::one());
        c.extend(self.m.iter().cloned());
        RationalSeries::new(c)
    }

    /// Reads `m_1..m_N` off a series, ignoring its constant term.
    pub fn from_series(s: &RationalSeries) -> Self {
        Self::new(s.coeffs()[1..].to_vec())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FreeCumulantSeq {
    #[serde(with = "rational::serde_rat_vec")]
    r: Vec<Rat>,
}

impl FreeCumulantSeq {
    pub fn new(r: Vec<Rat>) -> Self {
        Self { r }
    }

    pub fn from_ints(r: &[i64]) -> Self {
        Self::new(r.iter().map(|&x| rational::int(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.r.len()
    }

    pub fn is_empty(&self) -> bool {
        self.r.is_empty()
    }

    pub fn values(&self) -> &[Rat] {
        &self.r
    }

    /// `R_k`, 1-based.
    pub fn get(&self, k: usize) -> Option<&Rat> {
        k.checked_sub(1).and_then(|i| self.r.get(i))
    }

    /// Termwise sum, truncated to the shorter sequence.
    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.r.iter().zip(&other.r).map(|(a, b)| a + b).collect())
    }

    /// `R_1 + R_2 z + R_3 z^2 + ...`, of order `len - 1`.
    pub fn to_rtransform_series(&self) -> RationalSeries {
        RationalSeries::new(self.r.clone())
    }
}

/// `C_n = R_n(V^{-1}, V, ..., V)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct InvCumulantSeq {
    #[serde(with = "rational::serde_rat_vec")]
    c: Vec<Rat>,
}

impl InvCumulantSeq {
    pub fn new(c: Vec<Rat>) -> Self {
        Self { c }
    }

    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c.is_empty()
    }

    pub fn values(&self) -> &[Rat] {
        &self.c
    }

    pub fn get(&self, k: usize) -> Option<&Rat> {
        k.checked_sub(1).and_then(|i| self.c.get(i))
    }
}

/// Moments `m_1..m_n` from free cumulants `R_1..R_n`.
pub fn cumulants_to_moments(r: &FreeCumulantSeq, n: usize) -> Result<MomentSeq> {
    if n > r.len() {
        return Err(Error::InsufficientData {
            what: "cumulants_to_moments",
            needed: n,
            have: r.len(),
        });
    }
    let mut m: Vec<Rat> = Vec::with_capacity(n);
    for deg in 1..=n {
        // Only m_0..m_{deg-1} enter the coefficients read below.
        let mut known = Vec::with_capacity(deg);
        known.push(Rat::one());
        known.extend(m.iter().cloned());
        let partial = RationalSeries::new(known);
        let mut power = RationalSeries::one(deg - 1);
        let mut total = Rat::zero();
        for k in 1..=deg {
            power = power.mul(&partial);
            let rk = &r.r[k - 1];
            if !rk.is_zero() {
                total += rk * power.coeff(deg - k);
            }
        }
        m.push(total);
    }
    Ok(MomentSeq::new(m))
}

/// Inverse of [`cumulants_to_moments`]; returns as many cumulants as moments.
pub fn moments_to_cumulants(m: &MomentSeq) -> FreeCumulantSeq {
    let n = m.len();
    let series = m.to_series();
    let mut powers = Vec::with_capacity(n);
    let mut p = RationalSeries::one(n);
    for _ in 0..n {
        p = p.mul(&series);
        powers.push(p.clone());
    }
    let mut r: Vec<Rat> = Vec::with_capacity(n);
    for deg in 1..=n {
        let mut value = m.m[deg - 1].clone();
        for k in 1..deg {
            value -= &r[k - 1] * powers[k - 1].coeff(deg - k);
        }
        r.push(value);
    }
    FreeCumulantSeq::new(r)
}

/// `m_n` as the sum over `NC(n)` of products of `R_{|B|}`.
pub fn moments_via_nc_oracle(r: &FreeCumulantSeq, n: usize) -> Result<Rat> {
    if n == 0 || n > ORACLE_CAP {
        return Err(Error::OutOfRange {
            what: "oracle moment order n",
            value: n,
            min: 1,
            max: ORACLE_CAP,
        });
    }
    if r.len() < n {
        return Err(Error::InsufficientData {
            what: "moments_via_nc_oracle",
            needed: n,
            have: r.len(),
        });
    }
    let mut total = Rat::zero();
    let mut sizes = Vec::with_capacity(n);
    for_each_nc(n, |membership| {
        block_sizes(membership, &mut sizes);
        let mut prod = Rat::one();
        for &s in &sizes {
            prod *= &r.r[s - 1];
            if prod.is_zero() {
                return;
            }
        }
        total += prod;
    })?;
    Ok(total)
}

fn block_sizes(membership: &[usize], sizes: &mut Vec<usize>) {
    sizes.clear();
    for &b in membership {
        if b >= sizes.len() {
            sizes.resize(b + 1, 0);
        }
        sizes[b] += 1;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Letter {
    X,
    Y,
    #[serde(rename = "Xinv")]
    XInv,
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Letter::X => "X",
            Letter::Y => "Y",
            Letter::XInv => "Xinv",
        })
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "X" => Ok(Letter::X),
            "Y" => Ok(Letter::Y),
            "Xinv" => Ok(Letter::XInv),
            other => Err(Error::InvalidWord(format!("unknown letter {other:?}"))),
        }
    }
}

/// A word in `X`, `Y` and at most one leading `X^{-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::InvalidWord("empty word".into()));
        }
        if letters.len() > WORD_CAP {
            return Err(Error::OutOfRange {
                what: "word length",
                value: letters.len(),
                min: 1,
                max: WORD_CAP,
            });
        }
        let inverses = letters.iter().filter(|&&l| l == Letter::XInv).count();
        if inverses > 1 {
            return Err(Error::InvalidWord("more than one Xinv letter".into()));
        }
        if inverses == 1 && letters[0] != Letter::XInv {
            return Err(Error::InvalidWord("Xinv must be the leading letter".into()));
        }
        Ok(Self { letters })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn count(&self, l: Letter) -> usize {
        self.letters.iter().filter(|&&x| x == l).count()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .split('.')
            .map(|t| t.trim().parse())
            .collect::<Result<Vec<Letter>>>()?;
        Self::new(letters)
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Cumulant data for the letters of a [`Word`]: free cumulants of `X` and
/// `Y`, and the inverse cumulants `C_n` of `X` when `Xinv` appears.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LetterCumulants {
    pub x: FreeCumulantSeq,
    pub y: FreeCumulantSeq,
    pub x_inv: Option<InvCumulantSeq>,
}

impl LetterCumulants {
    pub fn new(x: FreeCumulantSeq, y: FreeCumulantSeq) -> Self {
        Self { x, y, x_inv: None }
    }

    pub fn with_inverse(mut self, c: InvCumulantSeq) -> Self {
        self.x_inv = Some(c);
        self
    }
}

/// Mixed moment `phi(w_1 w_2 ... w_n)` for free `X`, `Y`.
///
/// Sums over `pi in NC(n)` of `prod_B kappa(B)`, where a block all of `X`
/// (or all of `Y`) contributes `R_{|B|}` of that letter, a block holding the
/// leading `Xinv` and otherwise only `X` contributes `C_{|B|}`, and any other
/// block is zero. Zero blocks prune the enumeration.
pub fn word_moment(w: &Word, data: &LetterCumulants) -> Result<Rat> {
    let letters = w.letters();
    let n = letters.len();
    let nx = w.count(Letter::X);
    let ny = w.count(Letter::Y);
    let need = |what, needed: usize, have: usize| {
        if needed > have {
            Err(Error::InsufficientData { what, needed, have })
        } else {
            Ok(())
        }
    };
    need("cumulants of X", nx, data.x.len())?;
    need("cumulants of Y", ny, data.y.len())?;
    let inv = if letters[0] == Letter::XInv {
        let c = data.x_inv.as_ref().ok_or(Error::InsufficientData {
            what: "inverse cumulants of X",
            needed: nx + 1,
            have: 0,
        })?;
        need("inverse cumulants of X", nx + 1, c.len())?;
        Some(c)
    } else {
        None
    };

    // A block's kind is fixed by its first letter; X and Xinv blocks accept X.
    let allow = |first: usize, i: usize| match letters[first] {
        Letter::X | Letter::XInv => letters[i] == Letter::X,
        Letter::Y => letters[i] == Letter::Y,
    };

    let mut total = Rat::zero();
    let mut sizes = Vec::with_capacity(n);
    let mut firsts = Vec::with_capacity(n);
    for_each_nc_where(n, allow, |membership| {
        sizes.clear();
        firsts.clear();
        for (i, &b) in membership.iter().enumerate() {
            if b == sizes.len() {
                sizes.push(0);
                firsts.push(i);
            }
            sizes[b] += 1;
        }
        let mut prod = Rat::one();
        for (&s, &first) in sizes.iter().zip(&firsts) {
            let kappa = match letters[first] {
                Letter::X => &data.x.r[s - 1],
                Letter::Y => &data.y.r[s - 1],
                Letter::XInv => &inv.expect("checked above").c[s - 1],
            };
            prod *= kappa;
            if prod.is_zero() {
                return;
            }
        }
        total += prod;
    })?;
    Ok(total)
}

/// Inverse cumulants from the triangular recursion:
/// `C_1` given, `C_2 = 1 - C_1 R_1`, `C_n = -sum_{i<n} C_i R_{n-i}` for `n >= 3`.
/// Returns `len(R)` terms.
pub fn inverse_cumulants_recursion(r: &FreeCumulantSeq, c1: &Rat) -> InvCumulantSeq {
    let n = r.len().max(1);
    let mut c: Vec<Rat> = Vec::with_capacity(n);
    c.push(c1.clone());
    for k in 2..=n {
        let mut value = if k == 2 { Rat::one() } else { Rat::zero() };
        for i in 1..k {
            value -= &c[i - 1] * &r.r[k - i - 1];
        }
        c.push(value);
    }
    InvCumulantSeq::new(c)
}

/// Inverse cumulants as the coefficients of `(z + C_1) / (1 + z r(z))`, where
/// `r` is the R-transform series. Returns `order(r) + 1` terms.
pub fn inverse_cumulants_series(r: &RationalSeries, c1: &Rat) -> InvCumulantSeq {
    let n = r.order();
    let mut numerator = RationalSeries::identity(n);
    numerator = numerator.add(&RationalSeries::constant(c1.clone(), n));
    let denominator = RationalSeries::one(n).add(&r.shift_up());
    let c = numerator
        .div(&denominator)
        .expect("1 + z r(z) has unit constant term");
    InvCumulantSeq::new(c.into_coeffs())
}

/// Every word of length `n` over `{X, Y}`, in lexicographic order of the
/// binary expansion (`X` = 0). These are the terms of `(X + Y)^n`.
pub fn expand_sum_power(n: usize) -> Vec<Vec<Letter>> {
    (0..1usize << n)
        .map(|bits| {
            (0..n)
                .map(|i| {
                    if bits >> (n - 1 - i) & 1 == 0 {
                        Letter::X
                    } else {
                        Letter::Y
                    }
                })
                .collect()
        })
        .collect()
}
