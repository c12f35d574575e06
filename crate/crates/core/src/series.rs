//! Truncated formal power series with exact rational coefficients.
//!
//! A [`RationalSeries`] of order `N` stores `c_0, ..., c_N`, the coefficients
//! of `z^0..z^N`. Binary operations truncate to the smaller operand order, so
//! every identity built on top of this module holds "exactly up to `z^N`".

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rat};

pub const DEFAULT_ORDER: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RationalSeries {
    #[serde(with = "rational::serde_rat_vec")]
    coeffs: Vec<Rat>,
}

impl RationalSeries {
    /// Builds a series from `c_0..c_N`. An empty list is read as the order-0
    /// zero series.
    pub fn new(coeffs: Vec<Rat>) -> Self {
        if coeffs.is_empty() {
            return Self::zero(0);
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rational::int(c)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![Rat::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rat::one(), order)
    }

    pub fn constant(c: Rat, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The series `z` (zero when `order == 0`).
    pub fn identity(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = Rat::one();
        }
        s
    }

    /// `a / (1 - b z)` expanded to `order`.
    pub fn geometric(a: &Rat, b: &Rat, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = a.clone();
        for _ in 0..=order {
            coeffs.push(term.clone());
            term *= b;
        }
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rat> {
        self.coeffs
    }

    /// Coefficient of `z^k`; zero beyond the truncation order.
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs: Vec<Rat> = self.coeffs.iter().take(order + 1).cloned().collect();
        coeffs.resize(order + 1, Rat::zero());
        Self { coeffs }
    }

    /// Multiplies by `z`, keeping the same order.
    pub fn shift_up(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        coeffs.push(Rat::zero());
        coeffs.extend(self.coeffs[..self.order()].iter().cloned());
        Self { coeffs }
    }

    /// `(f - f_0) / z`, one order lower. The order-0 input maps to the order-0
    /// zero series.
    pub fn shift_down(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        Self {
            coeffs: self.coeffs[1..].to_vec(),
        }
    }

    pub fn scale(&self, a: &Rat) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * a).collect(),
        }
    }

    pub fn add(&self, g: &Self) -> Self {
        Self::linear_combine(&Rat::one(), self, &Rat::one(), g)
    }

    pub fn sub(&self, g: &Self) -> Self {
        Self::linear_combine(&Rat::one(), self, &-Rat::one(), g)
    }

    /// `a*f + b*g`, truncated to `min(order f, order g)`.
    pub fn linear_combine(a: &Rat, f: &Self, b: &Rat, g: &Self) -> Self {
        let n = f.order().min(g.order());
        Self {
            coeffs: (0..=n)
                .map(|k| a * &f.coeffs[k] + b * &g.coeffs[k])
                .collect(),
        }
    }

    /// Cauchy product, truncated to the smaller order.
    pub fn mul(&self, g: &Self) -> Self {
        let n = self.order().min(g.order());
        let mut coeffs = vec![Rat::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in g.coeffs.iter().enumerate().take(n + 1 - i) {
                coeffs[i + j] += a * b;
            }
        }
        Self { coeffs }
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(self.order()), |acc, _| acc.mul(self))
    }

    /// `f(g(z))` by Horner's scheme. `g` must have zero constant term.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        if !g.coeffs[0].is_zero() {
            return Err(Error::NonZeroConstant);
        }
        let n = self.order().min(g.order());
        let g = g.truncate(n);
        let mut acc = Self::constant(self.coeffs[n].clone(), n);
        for k in (0..n).rev() {
            acc = acc.mul(&g);
            acc.coeffs[0] += &self.coeffs[k];
        }
        Ok(acc)
    }

    /// Multiplicative inverse by forward substitution. Needs `f_0 != 0`.
    pub fn reciprocal(&self) -> Result<Self> {
        let f0 = &self.coeffs[0];
        if f0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv0 = f0.recip();
        let n = self.order();
        let mut g: Vec<Rat> = Vec::with_capacity(n + 1);
        g.push(inv0.clone());
        for k in 1..=n {
            let s = (1..=k).fold(Rat::zero(), |s, i| s + &self.coeffs[i] * &g[k - i]);
            g.push(-s * &inv0);
        }
        Ok(Self { coeffs: g })
    }

    /// `f / g`; needs `g_0 != 0`.
    pub fn div(&self, g: &Self) -> Result<Self> {
        Ok(self.mul(&g.reciprocal()?))
    }

    /// Compositional inverse: the `g` with `f(g(z)) = z + O(z^{N+1})`.
    ///
    /// Solved one coefficient at a time: with `g` known through degree `k-1`,
    /// the degree-`k` coefficient of `f(g)` depends on `g_k` only through
    /// `f_1 * g_k`.
    pub fn revert(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NotRevertible("constant term must be zero"));
        }
        let n = self.order();
        if n == 0 {
            return Ok(Self::zero(0));
        }
        let f1 = &self.coeffs[1];
        if f1.is_zero() {
            return Err(Error::NotRevertible("linear coefficient must be nonzero"));
        }
        let inv1 = f1.recip();
        let mut g = Self::zero(n);
        g.coeffs[1] = inv1.clone();
        for k in 2..=n {
            let probe = self.truncate(k).compose(&g.truncate(k))?;
            let residual = probe.coeffs[k].clone();
            g.coeffs[k] = -residual * &inv1;
        }
        Ok(g)
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "] + O(z^{})", self.order() + 1)
    }
}
