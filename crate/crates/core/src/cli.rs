//! Batch command-line front end. Every subcommand is a thin adapter over a
//! library call and prints one canonical JSON document.
//!
//! Exit status: 0 on success, 1 when `check-theorem` finds a failing
//! identity, 2 on invalid arguments (with `{"error", "hint"}` on stdout).

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::characterization::{
    params_from_config, validate_config, verify_characterization, word_level_check, CheckerConfig,
    DEFAULT_CHECK_ORDER, DEFAULT_WORD_N_MAX,
};
use crate::cumulants::{
    cumulants_to_moments, inverse_cumulants_recursion, inverse_cumulants_series,
    moments_to_cumulants, FreeCumulantSeq, MomentSeq,
};
use crate::error::Error;
use crate::partitions::count_nc;
use crate::rational::{self, Rat};
use crate::transforms::{free_add_convolve, free_mult_convolve};
use crate::wishart::{run_experiment, MCConfig, YMode};

pub const SEED_ENV: &str = "FREEPROB_SEED";
pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Debug, Parser)]
#[command(name = "freeprob", version, about = "Exact free-probability toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

fn rat_arg(s: &str) -> Result<Rat, String> {
    rational::parse(s).map_err(|e| e.to_string())
}

/// Comma-separated rationals, optionally wrapped in brackets.
#[derive(Debug, Clone)]
struct RatList(Vec<Rat>);

fn rat_list_arg(s: &str) -> Result<RatList, String> {
    rational::parse_list(s)
        .map(RatList)
        .map_err(|e| e.to_string())
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count non-crossing partitions of {1..n} by enumeration.
    NcCount {
        #[arg(long)]
        n: usize,
    },
    /// Free cumulants from moments m_1,...,m_N.
    Cumulants {
        #[arg(long, value_parser = rat_list_arg)]
        moments: RatList,
    },
    /// Moments m_1..m_n from free cumulants R_1,...,R_N.
    Moments {
        #[arg(long, value_parser = rat_list_arg)]
        cumulants: RatList,
        /// Defaults to the number of cumulants given.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Moments of the free additive convolution.
    ConvolveAdd {
        #[arg(long, value_parser = rat_list_arg)]
        x: RatList,
        #[arg(long, value_parser = rat_list_arg)]
        y: RatList,
    },
    /// Moments of the free multiplicative convolution.
    ConvolveMult {
        #[arg(long, value_parser = rat_list_arg)]
        x: RatList,
        #[arg(long, value_parser = rat_list_arg)]
        y: RatList,
        #[arg(long)]
        n: usize,
    },
    /// Replay the regression characterization exactly.
    CheckTheorem {
        #[arg(long, value_parser = rat_arg)]
        c: Rat,
        #[arg(long, value_parser = rat_arg)]
        d: Rat,
        #[arg(long, value_parser = rat_arg)]
        c1: Rat,
        #[arg(long, default_value_t = DEFAULT_CHECK_ORDER)]
        order: usize,
        #[arg(long, default_value_t = DEFAULT_WORD_N_MAX)]
        n_max: usize,
    },
    /// Estimate c and d from Wishart samples.
    McVerify {
        #[arg(long, value_parser = rat_arg)]
        c: Rat,
        #[arg(long, value_parser = rat_arg)]
        d: Rat,
        #[arg(long, value_parser = rat_arg)]
        c1: Rat,
        #[arg(long, default_value_t = 256)]
        m: usize,
        #[arg(long, default_value_t = 64)]
        reps: usize,
        #[arg(long, env = SEED_ENV, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        n_max: usize,
        /// Replace Y by the zero matrix (diagnostic: c_hat must be 1).
        #[arg(long)]
        zero_y: bool,
    },
    /// Inverse cumulants C_n by recursion and by closed form.
    InverseCumulants {
        #[arg(long, value_parser = rat_list_arg)]
        cumulants: RatList,
        #[arg(long, value_parser = rat_arg)]
        c1: Rat,
    },
}

/// What a run prints and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
}

impl Outcome {
    fn json(status: i32, value: &Value) -> Self {
        Self {
            status,
            stdout: format_report(value),
        }
    }

    fn error(message: String, hint: &str) -> Self {
        Self::json(2, &json!({ "error": message, "hint": hint }))
    }
}

/// Canonical JSON: object keys sorted, rationals already rendered as `"p/q"`.
pub fn format_report(value: &Value) -> String {
    // serde_json's default map is ordered by key.
    serde_json::to_string(value).expect("values serialize")
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("library types serialize")
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome {
                    status: 0,
                    stdout: e.to_string(),
                };
            }
            let rendered = e.to_string();
            let message = rendered
                .lines()
                .next()
                .unwrap_or("invalid arguments")
                .trim_start_matches("error: ")
                .to_string();
            return Outcome::error(message, "run `freeprob help` for usage");
        }
    };
    match execute(cli.command) {
        Ok(outcome) => outcome,
        Err(e) => Outcome::error(e.to_string(), hint_for(&e)),
    }
}

fn hint_for(e: &Error) -> &'static str {
    match e {
        Error::InvalidConfig(_) => "need 0 < c < 1, d > 1, cd > 1 and C1 > 0",
        Error::OutOfRange { .. } => "reduce the size argument",
        Error::InsufficientData { .. } => "supply more terms",
        Error::ParseRational(_) => "rationals are integers or p/q",
        _ => "check the arguments",
    }
}

fn execute(command: Command) -> Result<Outcome, Error> {
    let value = match command {
        Command::NcCount { n } => json!({ "n": n, "count": count_nc(n)? }),
        Command::Cumulants { moments } => {
            let m = MomentSeq::new(moments.0);
            json!({ "moments": to_value(&m), "cumulants": to_value(&moments_to_cumulants(&m)) })
        }
        Command::Moments { cumulants, n } => {
            let r = FreeCumulantSeq::new(cumulants.0);
            let n = n.unwrap_or(r.len());
            json!({ "cumulants": to_value(&r), "moments": to_value(&cumulants_to_moments(&r, n)?) })
        }
        Command::ConvolveAdd { x, y } => {
            let out = free_add_convolve(&MomentSeq::new(x.0), &MomentSeq::new(y.0));
            json!({ "moments": to_value(&out) })
        }
        Command::ConvolveMult { x, y, n } => {
            let out = free_mult_convolve(&MomentSeq::new(x.0), &MomentSeq::new(y.0), n)?;
            json!({ "moments": to_value(&out) })
        }
        Command::CheckTheorem {
            c,
            d,
            c1,
            order,
            n_max,
        } => {
            let v = validate_config(&CheckerConfig::new(c, d, c1, order))?;
            let report = verify_characterization(&v);
            let words = word_level_check(&v, n_max)?;
            let (px, py) = params_from_config(&v);
            let pass = report.all_pass() && words.all_pass();
            let value = json!({
                "characterization": to_value(&report),
                "word_level": to_value(&words),
                "params": { "x": to_value(&px), "y": to_value(&py) },
                "x_strictly_positive": v.x_strictly_positive(),
                "pass": pass,
            });
            return Ok(Outcome::json(if pass { 0 } else { 1 }, &value));
        }
        Command::McVerify {
            c,
            d,
            c1,
            m,
            reps,
            seed,
            n_max,
            zero_y,
        } => {
            let mut mc = MCConfig::new(
                CheckerConfig::new(c, d, c1, DEFAULT_CHECK_ORDER),
                m,
                reps,
                seed,
                n_max,
            );
            if zero_y {
                mc.y_mode = YMode::Zero;
            }
            to_value(&run_experiment(&mc)?)
        }
        Command::InverseCumulants { cumulants, c1 } => {
            let r = FreeCumulantSeq::new(cumulants.0);
            if r.is_empty() {
                return Err(Error::InsufficientData {
                    what: "inverse-cumulants",
                    needed: 1,
                    have: 0,
                });
            }
            let rec = inverse_cumulants_recursion(&r, &c1);
            let ser = inverse_cumulants_series(&r.to_rtransform_series(), &c1);
            json!({ "recursion": to_value(&rec), "series": to_value(&ser), "agree": rec == ser })
        }
    };
    Ok(Outcome::json(0, &value))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("freeprob").chain(args.iter().copied()))
    }

    #[test]
    fn nc_count() {
        let out = run_args(&["nc-count", "--n", "4"]);
        assert_eq!(out.status, 0);
        assert_eq!(out.stdout, r#"{"count":14,"n":4}"#);
    }

    #[test]
    fn format_is_canonical() {
        assert_eq!(format_report(&json!({})), "{}");
        let v = json!({"b": 1, "a": {"d": "1/2", "c": true}});
        assert_eq!(format_report(&v), r#"{"a":{"c":true,"d":"1/2"},"b":1}"#);
        assert_eq!(format_report(&v), format_report(&v.clone()));
    }

    #[test]
    fn floats_are_rejected() {
        let out = run_args(&["cumulants", "--moments", "0.5,1"]);
        assert_eq!(out.status, 2);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert!(v["error"].as_str().unwrap().contains("0.5"));
        assert!(v["hint"].is_string());
    }

    #[test]
    fn unknown_subcommand() {
        assert_eq!(run_args(&["frobnicate"]).status, 2);
    }

    #[test]
    fn invalid_theorem_config() {
        let out = run_args(&["check-theorem", "--c", "1/2", "--d", "3/2", "--c1", "1"]);
        assert_eq!(out.status, 2);
        assert!(out.stdout.contains("cd must exceed 1"), "{}", out.stdout);
    }
}
