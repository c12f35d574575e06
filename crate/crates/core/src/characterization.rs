//! Regression characterization of the free Poisson law.
//!
//! For free `X`, `Y` with `X` strictly positive and `Y` positive, the
//! hypotheses
//!
//! ```text
//! phi(X      | X+Y) = c (X+Y)
//! phi(X^{-1} | X+Y) = d (X+Y)^{-1}
//! ```
//!
//! force `X ~ nu(c*lambda, alpha)` and `Y ~ nu((1-c)*lambda, alpha)` with
//! `lambda = (d-1)/(cd-1)` and `alpha = (cd-1)/(C1 (1-c))`, where
//! `C1 = phi(X^{-1})`.
//!
//! Convention: `nu(lambda, alpha)` has free cumulants `R_n = lambda * alpha^n`,
//! i.e. R-transform `lambda*alpha / (1 - alpha z)`.
//!
//! [`verify_characterization`] rebuilds the generating functions
//! `A(z) = sum phi((X+Y)^n) z^n`, `B(z) = sum phi(X (X+Y)^n) z^n`,
//! `D(z) = sum phi(X^{-1} (X+Y)^n) z^n` and `h(z) = zA r_X(zA)` from the
//! conclusion and checks every intermediate identity of the argument exactly
//! to the truncation order. [`word_level_check`] re-derives the same
//! regression identities by expanding `(X+Y)^n` into words and summing over
//! non-crossing partitions.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cumulants::{
    cumulants_to_moments, expand_sum_power, inverse_cumulants_recursion, inverse_cumulants_series,
    word_moment, FreeCumulantSeq, Letter, LetterCumulants, MomentSeq, Word, WORD_CAP,
};
use crate::error::{Error, Result};
use crate::rational::{self, Rat};
use crate::series::RationalSeries;
use crate::transforms::{cauchy_to_rtransform, moments_to_cauchy, RTransform};

pub const DEFAULT_CHECK_ORDER: usize = 12;
pub const DEFAULT_WORD_N_MAX: usize = 6;

/// The regression constants `c`, `d`, the inverse moment `C1 = phi(X^{-1})`
/// and the truncation order of the series checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckerConfig {
    #[serde(with = "rational::serde_rat")]
    pub c: Rat,
    #[serde(with = "rational::serde_rat")]
    pub d: Rat,
    #[serde(with = "rational::serde_rat")]
    pub c1: Rat,
    #[serde(default = "default_order")]
    pub order: usize,
}

fn default_order() -> usize {
    DEFAULT_CHECK_ORDER
}

impl CheckerConfig {
    pub fn new(c: Rat, d: Rat, c1: Rat, order: usize) -> Self {
        Self { c, d, c1, order }
    }
}

/// A configuration that passed [`validate_config`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidConfig {
    cfg: CheckerConfig,
    lambda: Rat,
    alpha: Rat,
}

impl ValidConfig {
    pub fn config(&self) -> &CheckerConfig {
        &self.cfg
    }

    /// `lambda = (d-1)/(cd-1)`, the rate of `X+Y`.
    pub fn lambda(&self) -> &Rat {
        &self.lambda
    }

    pub fn alpha(&self) -> &Rat {
        &self.alpha
    }

    /// Whether `c*lambda > 1`, i.e. the limiting law of `X` has no atom at 0
    /// and `X^{-1}` exists.
    pub fn x_strictly_positive(&self) -> bool {
        &self.cfg.c * &self.lambda > Rat::one()
    }

    fn with_order(&self, order: usize) -> Self {
        let mut v = self.clone();
        v.cfg.order = order;
        v
    }
}

pub fn validate_config(cfg: &CheckerConfig) -> Result<ValidConfig> {
    let one = Rat::one();
    let mut violations = Vec::new();
    if !(cfg.c > Rat::zero() && cfg.c < one) {
        violations.push("c must lie strictly between 0 and 1".to_string());
    }
    if cfg.d <= one {
        violations.push("d must exceed 1".to_string());
    }
    let cd = &cfg.c * &cfg.d;
    if cd <= one {
        violations.push("cd must exceed 1".to_string());
    }
    if !rational::is_positive(&cfg.c1) {
        violations.push("C1 must be positive".to_string());
    }
    if cfg.order < 2 {
        violations.push("order must be at least 2".to_string());
    }
    if !violations.is_empty() {
        return Err(Error::InvalidConfig(violations));
    }
    let lambda = (&cfg.d - &one) / (&cd - &one);
    let alpha = (&cd - &one) / (&cfg.c1 * (&one - &cfg.c));
    Ok(ValidConfig {
        cfg: cfg.clone(),
        lambda,
        alpha,
    })
}

/// Parameters of `nu(lambda, alpha)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreePoissonParams {
    #[serde(with = "rational::serde_rat")]
    pub lambda: Rat,
    #[serde(with = "rational::serde_rat")]
    pub alpha: Rat,
}

impl FreePoissonParams {
    pub fn new(lambda: Rat, alpha: Rat) -> Self {
        Self { lambda, alpha }
    }

    /// `R_1..R_len`.
    pub fn cumulants(&self, len: usize) -> FreeCumulantSeq {
        FreeCumulantSeq::new(
            (1..=len)
                .map(|k| &self.lambda * rational::pow(&self.alpha, k))
                .collect(),
        )
    }

    pub fn moments(&self, len: usize) -> MomentSeq {
        cumulants_to_moments(&self.cumulants(len), len).expect("length matches")
    }
}

/// `(X params, Y params) = (nu(c*lambda, alpha), nu((1-c)*lambda, alpha))`.
pub fn params_from_config(v: &ValidConfig) -> (FreePoissonParams, FreePoissonParams) {
    let c = &v.cfg.c;
    let x = FreePoissonParams::new(c * &v.lambda, v.alpha.clone());
    let y = FreePoissonParams::new((Rat::one() - c) * &v.lambda, v.alpha.clone());
    (x, y)
}

/// `lambda*alpha / (1 - alpha z)` to order `n`.
pub fn free_poisson_rtransform(p: &FreePoissonParams, n: usize) -> RTransform {
    RTransform::new(RationalSeries::geometric(
        &(&p.lambda * &p.alpha),
        &p.alpha,
        n,
    ))
}

/// `phi(X^{-1}) = 1 / (alpha (lambda - 1))`; needs `lambda > 1`.
pub fn inverse_moment(p: &FreePoissonParams) -> Result<Rat> {
    if p.lambda <= Rat::one() {
        return Err(Error::NotStrictlyPositive(rational::format(&p.lambda)));
    }
    Ok((&p.alpha * (&p.lambda - Rat::one())).recip())
}

/// Generating functions of the argument, all of the config's order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegressionBundle {
    pub a: RationalSeries,
    pub b: RationalSeries,
    pub d: RationalSeries,
    pub h: RationalSeries,
    /// `phi((X+Y)^{-1})`, taken as `C1 / d`.
    #[serde(with = "rational::serde_rat")]
    pub alpha_minus1: Rat,
    pub r_x: RationalSeries,
    pub r_y: RationalSeries,
}

pub fn build_regression_bundle(v: &ValidConfig) -> RegressionBundle {
    let (px, _) = params_from_config(v);
    let r_x = free_poisson_rtransform(&px, v.cfg.order);
    build_bundle_with(v, &r_x).expect("free Poisson R-transform has full order")
}

/// Builds the bundle for an arbitrary R-transform of `X`, keeping `Y` at its
/// free Poisson law. Used to probe the checker with non-free-Poisson inputs.
pub fn build_bundle_with(v: &ValidConfig, r_x: &RTransform) -> Result<RegressionBundle> {
    let n = v.cfg.order;
    if r_x.series().order() < n {
        return Err(Error::InsufficientData {
            what: "R-transform of X",
            needed: n + 1,
            have: r_x.series().order() + 1,
        });
    }
    let r_x = r_x.series().truncate(n);
    let (_, py) = params_from_config(v);
    let r_y = free_poisson_rtransform(&py, n).series().clone();

    let r_sum = FreeCumulantSeq::new(r_x.add(&r_y).into_coeffs());
    let a = cumulants_to_moments(&r_sum, n)?.to_series();
    let za = a.shift_up();
    let r_x_at_za = r_x.compose(&za)?;
    let b = a.mul(&r_x_at_za);
    let h = za.mul(&r_x_at_za);
    let c_series = RationalSeries::new(inverse_cumulants_series(&r_x, &v.cfg.c1).values().to_vec());
    let d = a.mul(&c_series.compose(&za)?);
    let alpha_minus1 = &v.cfg.c1 / &v.cfg.d;
    Ok(RegressionBundle {
        a,
        b,
        d,
        h,
        alpha_minus1,
        r_x,
        r_y,
    })
}

/// Outcome of comparing two series coefficientwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub pass: bool,
    /// Highest degree compared.
    pub order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_bad_degree: Option<usize>,
    #[serde(
        skip_serializing_if = "Option::is_none",
        with = "rational::serde_rat_opt"
    )]
    pub lhs_coeff: Option<Rat>,
    #[serde(
        skip_serializing_if = "Option::is_none",
        with = "rational::serde_rat_opt"
    )]
    pub rhs_coeff: Option<Rat>,
}

impl IdentityCheck {
    pub fn compare(name: &str, lhs: &RationalSeries, rhs: &RationalSeries) -> Self {
        let order = lhs.order().min(rhs.order());
        let bad = (0..=order).find(|&k| lhs.coeffs()[k] != rhs.coeffs()[k]);
        Self {
            name: name.to_string(),
            pass: bad.is_none(),
            order,
            first_bad_degree: bad,
            lhs_coeff: bad.map(|k| lhs.coeffs()[k].clone()),
            rhs_coeff: bad.map(|k| rhs.coeffs()[k].clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterizationReport {
    pub config: CheckerConfig,
    pub identities: Vec<IdentityCheck>,
}

impl CharacterizationReport {
    pub fn all_pass(&self) -> bool {
        self.identities.iter().all(|i| i.pass)
    }

    pub fn first_failure(&self) -> Option<&IdentityCheck> {
        self.identities.iter().find(|i| !i.pass)
    }
}

pub const IDENTITY_NAMES: [&str; 6] = [
    "B = c(A-1)/z",
    "D = d(zA + alpha_-1)",
    "h = c(A-1)",
    "h/(zA) = c(d-1)/(C1(1-c) - zA(cd-1))",
    "zA^2(cd-1) + A(zd(1-c) - C1(1-c)) + C1(1-c) = 0",
    "r_Y = (1-c)(d-1)/(C1(1-c) - (cd-1)z)",
];

pub fn verify_characterization(v: &ValidConfig) -> CharacterizationReport {
    check_bundle(v, &build_regression_bundle(v))
}

/// Runs the six identities with `r_X` replaced by an arbitrary R-transform.
pub fn verify_with_rtransform(v: &ValidConfig, r_x: &RTransform) -> Result<CharacterizationReport> {
    Ok(check_bundle(v, &build_bundle_with(v, r_x)?))
}

fn check_bundle(v: &ValidConfig, bundle: &RegressionBundle) -> CharacterizationReport {
    let cfg = &v.cfg;
    let n = cfg.order;
    let one = Rat::one();
    let (c, d, c1) = (&cfg.c, &cfg.d, &cfg.c1);
    let one_minus_c = &one - c;
    let cd_minus_1 = c * d - &one;
    let a = &bundle.a;
    let za = a.shift_up();
    let a_minus_1 = a.sub(&RationalSeries::one(n));

    let mut ids = Vec::with_capacity(6);

    // B = c (A - 1) / z
    let rhs = a_minus_1.shift_down().scale(c);
    ids.push(IdentityCheck::compare(IDENTITY_NAMES[0], &bundle.b, &rhs));

    // D = d (zA + alpha_{-1})
    let rhs = za
        .add(&RationalSeries::constant(bundle.alpha_minus1.clone(), n))
        .scale(d);
    ids.push(IdentityCheck::compare(IDENTITY_NAMES[1], &bundle.d, &rhs));

    // h = c (A - 1)
    ids.push(IdentityCheck::compare(
        IDENTITY_NAMES[2],
        &bundle.h,
        &a_minus_1.scale(c),
    ));

    // h / (zA) against the closed form in zA
    let lhs = bundle
        .h
        .shift_down()
        .div(&a.truncate(n - 1))
        .expect("A has unit constant term");
    let k = c1 * &one_minus_c;
    let denom = RationalSeries::constant(k.clone(), n).sub(&za.scale(&cd_minus_1));
    let rhs = denom
        .reciprocal()
        .expect("C1(1-c) > 0")
        .scale(&(c * (d - &one)));
    ids.push(IdentityCheck::compare(IDENTITY_NAMES[3], &lhs, &rhs));

    // zA^2 (cd-1) + A (z d (1-c) - C1 (1-c)) + C1 (1-c) = 0
    let quad = za.mul(a).scale(&cd_minus_1);
    let linear_factor = RationalSeries::identity(n)
        .scale(&(d * &one_minus_c))
        .sub(&RationalSeries::constant(k.clone(), n));
    let lhs = quad
        .add(&a.mul(&linear_factor))
        .add(&RationalSeries::constant(k.clone(), n));
    ids.push(IdentityCheck::compare(
        IDENTITY_NAMES[4],
        &lhs,
        &RationalSeries::zero(n),
    ));

    // r_Y recovered as r_{X+Y} - r_X, with r_{X+Y} read off A through G
    let rhs =
        RationalSeries::geometric(&((&one_minus_c * (d - &one)) / &k), &(&cd_minus_1 / &k), n);
    let check = match cauchy_to_rtransform(&moments_to_cauchy(&MomentSeq::from_series(a))) {
        Ok(r_sum) => {
            let r_y = r_sum.series().sub(&bundle.r_x);
            IdentityCheck::compare(IDENTITY_NAMES[5], &r_y, &rhs)
        }
        Err(_) => IdentityCheck {
            name: IDENTITY_NAMES[5].to_string(),
            pass: false,
            order: 0,
            first_bad_degree: Some(0),
            lhs_coeff: None,
            rhs_coeff: None,
        },
    };
    ids.push(check);

    CharacterizationReport {
        config: cfg.clone(),
        identities: ids,
    }
}

/// `phi((X+Y)^{-1})` read off the quadratic for `G_{X+Y}` at `z = 0`:
/// there `G(0) d (1-c) + C1 (1-c) = 0` and `G(0) = -phi((X+Y)^{-1})`.
pub fn sum_inverse_moment_from_quadratic(v: &ValidConfig) -> Rat {
    let cfg = &v.cfg;
    let one_minus_c = Rat::one() - &cfg.c;
    let linear = &cfg.d * &one_minus_c;
    let constant = &cfg.c1 * &one_minus_c;
    let g0 = -constant / linear;
    -g0
}

/// One regression identity checked through the word expansion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WordCheck {
    /// `beta` for `phi(X (X+Y)^n)`, `delta` for `phi(X^{-1} (X+Y)^n)`.
    pub side: &'static str,
    pub n: usize,
    pub words: usize,
    #[serde(with = "rational::serde_rat")]
    pub lhs: Rat,
    #[serde(with = "rational::serde_rat")]
    pub rhs: Rat,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WordLevelReport {
    pub n_max: usize,
    pub delta_checked: bool,
    /// Closed-form and recursive inverse cumulants agree.
    pub inverse_cumulants_agree: bool,
    pub checks: Vec<WordCheck>,
}

impl WordLevelReport {
    pub fn all_pass(&self) -> bool {
        self.inverse_cumulants_agree && self.checks.iter().all(|c| c.pass)
    }
}

/// `beta_n = c alpha_{n+1}` and `delta_n = d alpha_{n-1}` for `n = 0..=n_max`,
/// with left sides summed word by word over the expansion of `(X+Y)^n` and
/// right sides taken from the generating-function bundle.
pub fn word_level_check(v: &ValidConfig, n_max: usize) -> Result<WordLevelReport> {
    if n_max + 1 > WORD_CAP {
        return Err(Error::OutOfRange {
            what: "word-level n_max",
            value: n_max,
            min: 0,
            max: WORD_CAP - 1,
        });
    }
    let cfg = &v.cfg;
    let order = cfg.order.max(n_max + 1);
    let bundle = build_regression_bundle(&v.with_order(order));
    let (px, py) = params_from_config(v);
    let len = n_max + 1;
    let rx = px.cumulants(len);
    let c_rec = inverse_cumulants_recursion(&rx, &cfg.c1);
    let c_ser = inverse_cumulants_series(&rx.to_rtransform_series(), &cfg.c1);
    let data = LetterCumulants::new(rx, py.cumulants(len)).with_inverse(c_rec.clone());
    let delta_checked = v.x_strictly_positive();

    let alpha = |k: usize| bundle.a.coeff(k);
    let mut checks = Vec::new();
    for n in 0..=n_max {
        let words = expand_sum_power(n);
        let beta = sum_words(&words, Letter::X, &data)?;
        let rhs = &cfg.c * alpha(n + 1);
        checks.push(WordCheck {
            side: "beta",
            n,
            words: words.len(),
            pass: beta == rhs,
            lhs: beta,
            rhs,
        });
        if delta_checked {
            let delta = sum_words(&words, Letter::XInv, &data)?;
            let prev = if n == 0 {
                bundle.alpha_minus1.clone()
            } else {
                alpha(n - 1)
            };
            let rhs = &cfg.d * prev;
            checks.push(WordCheck {
                side: "delta",
                n,
                words: words.len(),
                pass: delta == rhs,
                lhs: delta,
                rhs,
            });
        }
    }
    Ok(WordLevelReport {
        n_max,
        delta_checked,
        inverse_cumulants_agree: c_rec == c_ser,
        checks,
    })
}

fn sum_words(words: &[Vec<Letter>], lead: Letter, data: &LetterCumulants) -> Result<Rat> {
    let mut total = Rat::zero();
    for w in words {
        let mut letters = Vec::with_capacity(w.len() + 1);
        letters.push(lead);
        letters.extend_from_slice(w);
        total += word_moment(&Word::new(letters)?, data)?;
    }
    Ok(total)
}

/// Copy of `r` with `R_k` shifted by `eps` (1-based `k`).
pub fn perturb_cumulant(r: &RTransform, k: usize, eps: &Rat) -> RTransform {
    let mut c = r.series().coeffs().to_vec();
    if let Some(x) = k.checked_sub(1).and_then(|i| c.get_mut(i)) {
        *x += eps;
    }
    RTransform::new(RationalSeries::new(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn cfg(c: Rat, d: Rat, c1: Rat, order: usize) -> ValidConfig {
        validate_config(&CheckerConfig::new(c, d, c1, order)).unwrap()
    }

    fn reference() -> ValidConfig {
        cfg(ratio(3, 5), int(6), ratio(13, 2), 12)
    }

    #[test]
    fn validation() {
        let v = reference();
        assert_eq!(v.lambda(), &ratio(25, 13));
        assert_eq!(&(v.lambda() * &ratio(3, 5)), &ratio(15, 13));
        assert!(v.x_strictly_positive());

        let err =
            validate_config(&CheckerConfig::new(ratio(1, 2), ratio(3, 2), int(1), 12)).unwrap_err();
        assert!(err.to_string().contains("cd must exceed 1"), "{err}");

        let err =
            validate_config(&CheckerConfig::new(ratio(1, 2), int(3), int(0), 12)).unwrap_err();
        assert!(err.to_string().contains("C1 must be positive"), "{err}");

        let Error::InvalidConfig(v) =
            validate_config(&CheckerConfig::new(int(1), int(1), int(-1), 12)).unwrap_err()
        else {
            panic!("expected InvalidConfig");
        };
        assert_eq!(v.len(), 4);
    }

    #[test]
    fn parameters() {
        let (x, y) = params_from_config(&reference());
        assert_eq!(x, FreePoissonParams::new(ratio(15, 13), int(1)));
        assert_eq!(y, FreePoissonParams::new(ratio(10, 13), int(1)));

        let (x, y) = params_from_config(&cfg(ratio(1, 2), ratio(7, 3), ratio(2, 9), 4));
        assert_eq!(x.lambda, y.lambda);

        let (x, _) = params_from_config(&cfg(ratio(3, 5), int(6), int(13), 4));
        assert_eq!(x, FreePoissonParams::new(ratio(15, 13), ratio(1, 2)));
    }

    #[test]
    fn rtransform_matches_closed_form() {
        let r = free_poisson_rtransform(&FreePoissonParams::new(int(1), int(1)), 4);
        assert_eq!(r.series(), &RationalSeries::from_ints(&[1, 1, 1, 1, 1]));

        let p = FreePoissonParams::new(ratio(2, 3), ratio(5, 7));
        let r = free_poisson_rtransform(&p, 3);
        assert_eq!(r.series().coeff(0), &p.lambda * &p.alpha);
        assert_eq!(r.series().coeff(1), &p.lambda * &p.alpha * &p.alpha);

        // c(d-1)/(C1(1-c) - z(cd-1)) expanded directly
        let v = reference();
        let (px, _) = params_from_config(&v);
        let k = &v.cfg.c1 * (int(1) - &v.cfg.c);
        let direct = RationalSeries::geometric(
            &(&v.cfg.c * (&v.cfg.d - int(1)) / &k),
            &((&v.cfg.c * &v.cfg.d - int(1)) / &k),
            8,
        );
        assert_eq!(free_poisson_rtransform(&px, 8).series(), &direct);
    }

    #[test]
    fn bundle_leading_coefficients() {
        let b = build_regression_bundle(&reference());
        assert_eq!(b.a.coeff(0), int(1));
        assert_eq!(b.a.coeff(1), ratio(25, 13));
        assert_eq!(b.a.coeff(2), ratio(950, 169));
        assert_eq!(b.b.coeff(0), ratio(15, 13));
        assert_eq!(b.h.coeff(0), int(0));
        assert_eq!(b.alpha_minus1, ratio(13, 12));
        assert_eq!(b.d.coeff(0), ratio(13, 2));
    }

    #[test]
    fn all_identities_hold() {
        for v in [
            reference(),
            cfg(ratio(1, 2), int(3), int(1), 12),
            cfg(ratio(2, 3), int(4), int(2), 12),
        ] {
            let report = verify_characterization(&v);
            assert_eq!(report.identities.len(), 6);
            assert!(report.all_pass(), "{report:?}");
        }
    }

    #[test]
    fn perturbation_is_detected_at_degree_two() {
        let v = reference();
        let (px, _) = params_from_config(&v);
        let r = perturb_cumulant(&free_poisson_rtransform(&px, 12), 3, &ratio(1, 1000));
        let report = verify_with_rtransform(&v, &r).unwrap();
        let first = &report.identities[0];
        assert!(!first.pass);
        assert_eq!(first.first_bad_degree, Some(2));
        assert_ne!(first.lhs_coeff, first.rhs_coeff);
    }

    #[test]
    fn word_level_examples() {
        let v = reference();
        let report = word_level_check(&v, 3).unwrap();
        assert!(report.all_pass(), "{report:?}");
        let find = |side: &str, n: usize| {
            report
                .checks
                .iter()
                .find(|c| c.side == side && c.n == n)
                .unwrap()
                .lhs
                .clone()
        };
        assert_eq!(find("beta", 1), ratio(570, 169));
        assert_eq!(find("delta", 0), ratio(13, 2));
        assert_eq!(find("delta", 1), int(6));
        assert!(word_level_check(&v, WORD_CAP).is_err());
    }

    #[test]
    fn inverse_moments() {
        assert_eq!(
            inverse_moment(&FreePoissonParams::new(int(2), int(1))).unwrap(),
            int(1)
        );
        let (px, _) = params_from_config(&reference());
        assert_eq!(inverse_moment(&px).unwrap(), ratio(13, 2));
        assert!(matches!(
            inverse_moment(&FreePoissonParams::new(int(1), int(1))),
            Err(Error::NotStrictlyPositive(_))
        ));
    }

    #[test]
    fn sum_inverse_moment_routes_agree() {
        let v = reference();
        let from_quadratic = sum_inverse_moment_from_quadratic(&v);
        assert_eq!(from_quadratic, build_regression_bundle(&v).alpha_minus1);
        let sum = FreePoissonParams::new(v.lambda().clone(), v.alpha().clone());
        assert_eq!(inverse_moment(&sum).unwrap(), from_quadratic);
    }

    #[test]
    fn report_json_shape() {
        let report = verify_characterization(&reference());
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["config"]["c"], "3/5");
        assert_eq!(json["identities"][0]["pass"], true);
        assert!(json["identities"][0].get("first_bad_degree").is_none());
    }
}
