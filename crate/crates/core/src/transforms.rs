//! Moment, Cauchy and R-transform representations, and free convolutions.
//!
//! The Cauchy transform is carried by its expansion at infinity,
//! `G(z) = sum_k g_k z^{-(k+1)}` with `g_0 = 1` and `g_k = m_k`, so that
//! `M(z) = (1/z) G(1/z) - 1` is the moment generating function. The
//! R-transform is recovered from `G(r(z) + 1/z) = z` by formal reversion:
//! with `F(w) = G(1/w) = w + g_1 w^2 + ...`, the inverse series satisfies
//! `F^{-1}(z) = z / (1 + z r(z))`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cumulants::{
    cumulants_to_moments, moments_to_cumulants, word_moment, FreeCumulantSeq, Letter,
    LetterCumulants, MomentSeq, Word, WORD_CAP,
};
use crate::error::{Error, Result};
use crate::rational::{self, Rat};
use crate::series::RationalSeries;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CauchyCoeffs {
    #[serde(with = "rational::serde_rat_vec")]
    g: Vec<Rat>,
}

impl CauchyCoeffs {
    /// Checks the total-mass normalization `g_0 = 1`.
    pub fn new(g: Vec<Rat>) -> Result<Self> {
        match g.first() {
            Some(g0) if g0.is_one() => Ok(Self { g }),
            Some(g0) => Err(Error::NotProbabilityMass(rational::format(g0))),
            None => Err(Error::NotProbabilityMass("<empty>".into())),
        }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.g
    }

    /// `F(w) = G(1/w) = sum_k g_k w^{k+1}`.
    fn at_reciprocal(&self) -> RationalSeries {
        let mut c = Vec::with_capacity(self.g.len() + 1);
        c.push(Rat::zero());
        c.extend(self.g.iter().cloned());
        RationalSeries::new(c)
    }
}

/// `r(z) = sum_n R_{n+1} z^n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RTransform {
    series: RationalSeries,
}

impl RTransform {
    pub fn new(series: RationalSeries) -> Self {
        Self { series }
    }

    pub fn from_cumulants(r: &FreeCumulantSeq) -> Self {
        Self::new(r.to_rtransform_series())
    }

    pub fn series(&self) -> &RationalSeries {
        &self.series
    }

    pub fn cumulants(&self) -> FreeCumulantSeq {
        FreeCumulantSeq::new(self.series.coeffs().to_vec())
    }
}

pub fn moments_to_cauchy(m: &MomentSeq) -> CauchyCoeffs {
    let mut g = Vec::with_capacity(m.len() + 1);
    g.push(Rat::one());
    g.extend(m.moments().iter().cloned());
    CauchyCoeffs { g }
}

/// Solves `G(r(z) + 1/z) = z` for `r`. With `g_0..g_N` given, returns
/// `R_1..R_N`; a mass-only input yields the empty R-transform, represented
/// as the order-0 zero series.
pub fn cauchy_to_rtransform(g: &CauchyCoeffs) -> Result<RTransform> {
    if !g.g.first().is_some_and(One::is_one) {
        return Err(Error::NotProbabilityMass(
            g.g.first().map(rational::format).unwrap_or_default(),
        ));
    }
    let n = g.g.len() - 1;
    if n == 0 {
        return Ok(RTransform::new(RationalSeries::zero(0)));
    }
    let inverse = g.at_reciprocal().revert()?;
    // F^{-1}(z) / z = 1 / (1 + z r(z))
    let q = inverse.shift_down();
    let one_plus_zr = q.reciprocal()?;
    let r = one_plus_zr.shift_down().truncate(n - 1);
    Ok(RTransform::new(r))
}

/// Moments of the free additive convolution, via additivity of free
/// cumulants. Truncated to the shorter input.
pub fn free_add_convolve(mx: &MomentSeq, my: &MomentSeq) -> MomentSeq {
    let r = moments_to_cumulants(mx).add(&moments_to_cumulants(my));
    let n = r.len();
    cumulants_to_moments(&r, n).expect("length matches")
}

/// Moments `phi((XY)^k)`, `k = 1..=n`, of the free multiplicative convolution,
/// from the alternating-word expansion.
pub fn free_mult_convolve(mx: &MomentSeq, my: &MomentSeq, n: usize) -> Result<MomentSeq> {
    let cap = WORD_CAP / 2;
    if n > cap {
        return Err(Error::OutOfRange {
            what: "multiplicative convolution order",
            value: n,
            min: 0,
            max: cap,
        });
    }
    for (what, m) in [("moments of X", mx), ("moments of Y", my)] {
        if m.len() < n {
            return Err(Error::InsufficientData {
                what,
                needed: n,
                have: m.len(),
            });
        }
    }
    let data = LetterCumulants::new(moments_to_cumulants(mx), moments_to_cumulants(my));
    let out = (1..=n)
        .map(|k| {
            let letters = (0..k).flat_map(|_| [Letter::X, Letter::Y]).collect();
            word_moment(&Word::new(letters)?, &data)
        })
        .collect::<Result<Vec<Rat>>>()?;
    Ok(MomentSeq::new(out))
}
