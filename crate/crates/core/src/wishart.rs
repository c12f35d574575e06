//! Finite-size check of the regression constants with Wishart matrices.
//!
//! A free Poisson element `nu(lambda, alpha)` is approximated by
//! `(alpha/M) G G^T` with `G` an `M x L` standard Gaussian matrix and
//! `L = round(lambda M)`; the state is replaced by `tr_M = Trace / M`. For
//! independent `X ~ nu(c lambda, alpha)` and `Y ~ nu((1-c) lambda, alpha)` and
//! `V = X + Y` the estimators
//!
//! ```text
//! c_hat[n] = tr_M(X V^n)      / tr_M(V^{n+1})
//! d_hat[n] = tr_M(X^{-1} V^n) / tr_M(V^{n-1})
//! ```
//!
//! should approach `c` and `d` as `M` grows. The model and all tolerances are
//! choices of this crate, not part of the exact theory.
//!
//! Every repetition draws from its own ChaCha stream keyed by `(seed, rep)`,
//! so repetitions run in parallel and still merge bit-identically.

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::characterization::{params_from_config, validate_config, CheckerConfig};
use crate::error::{Error, Result};
use crate::rational;

pub const MIN_DIM: usize = 16;
/// Repetitions whose `X` sample has a condition estimate above this are
/// discarded.
pub const CONDITION_LIMIT: f64 = 1e12;

pub const SURROGATE_NOTE: &str = "finite-size Wishart surrogate; dimensions, \
    tolerances and the rounding L = round(lambda*M) are implementation choices";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum YMode {
    #[default]
    Wishart,
    /// `Y = 0`, so `c_hat` must be exactly 1.
    Zero,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MCConfig {
    pub cfg: CheckerConfig,
    pub m: usize,
    pub reps: usize,
    pub seed: u64,
    pub n_max: usize,
    #[serde(default)]
    pub y_mode: YMode,
}

impl MCConfig {
    pub fn new(cfg: CheckerConfig, m: usize, reps: usize, seed: u64, n_max: usize) -> Self {
        Self {
            cfg,
            m,
            reps,
            seed,
            n_max,
            y_mode: YMode::Wishart,
        }
    }

    /// Float rates of `X` and `Y` and the common jump size.
    fn rates(&self) -> Result<(f64, f64, f64)> {
        let v = validate_config(&self.cfg)?;
        let (px, py) = params_from_config(&v);
        Ok((
            rational::to_f64(&px.lambda),
            rational::to_f64(&py.lambda),
            rational::to_f64(&px.alpha),
        ))
    }

    pub fn validate(&self) -> Result<()> {
        let mut violations = Vec::new();
        let rates = match self.rates() {
            Ok(r) => Some(r),
            Err(Error::InvalidConfig(v)) => {
                violations.extend(v);
                None
            }
            Err(e) => return Err(e),
        };
        if self.m < MIN_DIM {
            violations.push(format!("M must be at least {MIN_DIM}"));
        }
        if self.reps == 0 {
            violations.push("reps must be at least 1".into());
        }
        if self.n_max == 0 {
            violations.push("n_max must be at least 1".into());
        }
        if let Some((lx, _, _)) = rates {
            if wishart_columns(lx, self.m) <= self.m {
                violations.push("round(c*lambda*M) must exceed M so X is invertible".into());
            }
        }
        if violations.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidConfig(violations))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MCReport {
    pub config: MCConfig,
    /// Index `i` holds the estimate for `n = i + 1`.
    pub c_hat: Vec<f64>,
    pub c_stderr: Vec<f64>,
    pub d_hat: Vec<f64>,
    pub d_stderr: Vec<f64>,
    pub reps_used: usize,
    pub reps_discarded: usize,
    /// Largest `|tr(XV^n) + tr(YV^n) - tr(V^{n+1})| / |tr(V^{n+1})|` seen.
    pub max_linearity_rel_err: f64,
    pub note: String,
}

fn wishart_columns(lambda: f64, m: usize) -> usize {
    (lambda * m as f64).round() as usize
}

/// `(alpha/M) G G^T` with `G` an `M x round(lambda M)` standard Gaussian matrix.
pub fn sample_wishart<R: Rng + ?Sized>(
    lambda: f64,
    alpha: f64,
    m: usize,
    rng: &mut R,
) -> Result<DMatrix<f64>> {
    let l = wishart_columns(lambda, m);
    if l == 0 {
        return Err(Error::OutOfRange {
            what: "Wishart column count round(lambda*M)",
            value: 0,
            min: 1,
            max: usize::MAX,
        });
    }
    let g = DMatrix::<f64>::from_fn(m, l, |_, _| rng.sample(StandardNormal));
    Ok((&g * g.transpose()) * (alpha / m as f64))
}

/// `tr_M(A B)` without forming the product.
pub fn normalized_trace_product(a: &DMatrix<f64>, b: &DMatrix<f64>) -> f64 {
    let m = a.nrows();
    let mut s = 0.0;
    for i in 0..m {
        for j in 0..m {
            s += a[(i, j)] * b[(j, i)];
        }
    }
    s / m as f64
}

pub fn normalized_trace(a: &DMatrix<f64>) -> f64 {
    a.trace() / a.nrows() as f64
}

struct RepOutcome {
    c: Vec<f64>,
    d: Vec<f64>,
    linearity: f64,
}

/// Deterministic generator for repetition `rep` of a run seeded with `seed`.
pub fn rep_rng(seed: u64, rep: usize) -> ChaCha20Rng {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    rng.set_stream(rep as u64);
    rng
}

fn run_rep(mc: &MCConfig, rates: (f64, f64, f64), rep: usize) -> Result<Option<RepOutcome>> {
    let (lx, ly, alpha) = rates;
    let m = mc.m;
    let mut rng = rep_rng(mc.seed, rep);
    let x = sample_wishart(lx, alpha, m, &mut rng)?;
    let y = match mc.y_mode {
        YMode::Wishart => sample_wishart(ly, alpha, m, &mut rng)?,
        YMode::Zero => DMatrix::zeros(m, m),
    };
    let v = &x + &y;

    let Some(chol) = x.clone().cholesky() else {
        return Ok(None);
    };
    let diag = chol.l_dirty().diagonal();
    let (lo, hi) = diag.iter().fold((f64::INFINITY, 0.0f64), |(lo, hi), &t| {
        (lo.min(t), hi.max(t))
    });
    if lo.is_nan() || lo <= 0.0 || (hi / lo).powi(2) > CONDITION_LIMIT {
        return Ok(None);
    }
    let x_inv = chol.inverse();

    let mut c = Vec::with_capacity(mc.n_max);
    let mut d = Vec::with_capacity(mc.n_max);
    let mut linearity = 0.0f64;
    let mut prev = DMatrix::<f64>::identity(m, m);
    let mut power = v.clone();
    for _ in 1..=mc.n_max {
        let tr_next = normalized_trace_product(&v, &power);
        let tr_x = normalized_trace_product(&x, &power);
        let tr_y = normalized_trace_product(&y, &power);
        let tr_xinv = normalized_trace_product(&x_inv, &power);
        c.push(tr_x / tr_next);
        d.push(tr_xinv / normalized_trace(&prev));
        linearity = linearity.max(((tr_x + tr_y) - tr_next).abs() / tr_next.abs());
        let next = &v * &power;
        prev = std::mem::replace(&mut power, next);
    }
    Ok(Some(RepOutcome { c, d, linearity }))
}

fn mean_and_stderr(samples: &[f64]) -> (f64, f64) {
    let n = samples.len() as f64;
    let mean = samples.iter().sum::<f64>() / n;
    if samples.len() < 2 {
        return (mean, 0.0);
    }
    let var = samples.iter().map(|s| (s - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, (var / n).sqrt())
}

pub fn run_experiment(mc: &MCConfig) -> Result<MCReport> {
    mc.validate()?;
    let rates = mc.rates()?;
    let outcomes: Vec<Option<RepOutcome>> = (0..mc.reps)
        .into_par_iter()
        .map(|rep| run_rep(mc, rates, rep))
        .collect::<Result<_>>()?;
    let used: Vec<&RepOutcome> = outcomes.iter().flatten().collect();
    let discarded = outcomes.len() - used.len();
    if used.is_empty() {
        return Err(Error::InvalidConfig(vec![
            "every repetition produced a numerically singular X".into(),
        ]));
    }

    let mut report = MCReport {
        config: mc.clone(),
        c_hat: Vec::with_capacity(mc.n_max),
        c_stderr: Vec::with_capacity(mc.n_max),
        d_hat: Vec::with_capacity(mc.n_max),
        d_stderr: Vec::with_capacity(mc.n_max),
        reps_used: used.len(),
        reps_discarded: discarded,
        max_linearity_rel_err: used.iter().map(|o| o.linearity).fold(0.0, f64::max),
        note: SURROGATE_NOTE.to_string(),
    };
    for k in 0..mc.n_max {
        let cs: Vec<f64> = used.iter().map(|o| o.c[k]).collect();
        let ds: Vec<f64> = used.iter().map(|o| o.d[k]).collect();
        let (cm, ce) = mean_and_stderr(&cs);
        let (dm, de) = mean_and_stderr(&ds);
        report.c_hat.push(cm);
        report.c_stderr.push(ce);
        report.d_hat.push(dm);
        report.d_stderr.push(de);
    }
    Ok(report)
}
