use std::process::Command;

use freeprob::characterization::{
    validate_config, verify_characterization, word_level_check, CheckerConfig,
};
use freeprob::cumulants::{cumulants_to_moments, moments_to_cumulants, FreeCumulantSeq, MomentSeq};
use freeprob::rational::{int, ratio};
use freeprob::transforms::{free_add_convolve, free_mult_convolve};
use proptest::prelude::*;
use serde_json::Value;

fn freeprob(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_freeprob"))
        .args(args)
        .env_remove(freeprob::cli::SEED_ENV)
        .output()
        .expect("binary runs");
    let text = String::from_utf8(out.stdout).unwrap();
    let value = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{e}: {text}"));
    (out.status.code().unwrap(), value)
}

fn json<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).unwrap()
}

#[test]
fn nc_count() {
    let (status, v) = freeprob(&["nc-count", "--n", "4"]);
    assert_eq!(status, 0);
    assert_eq!(v, serde_json::json!({"n": 4, "count": 14}));
    let (status, v) = freeprob(&["nc-count", "--n", "15"]);
    assert_eq!(status, 2);
    assert!(v["error"].as_str().unwrap().contains("..=14"));
}

#[test]
fn sequence_commands_match_library() {
    let (status, v) = freeprob(&["cumulants", "--moments", "1,2,5,14"]);
    assert_eq!(status, 0);
    let direct = moments_to_cumulants(&MomentSeq::from_ints(&[1, 2, 5, 14]));
    assert_eq!(v["cumulants"], json(&direct));

    let (_, v) = freeprob(&["moments", "--cumulants", "0,1,0,0,0,0"]);
    let direct = cumulants_to_moments(&FreeCumulantSeq::from_ints(&[0, 1, 0, 0, 0, 0]), 6).unwrap();
    assert_eq!(v["moments"], json(&direct));
    assert_eq!(
        v["moments"],
        serde_json::json!(["0", "1", "0", "2", "0", "5"])
    );

    let (_, v) = freeprob(&["convolve-add", "--x", "0,1,0,2", "--y", "0,1,0,2"]);
    let semi = MomentSeq::from_ints(&[0, 1, 0, 2]);
    assert_eq!(v["moments"], json(&free_add_convolve(&semi, &semi)));

    let (_, v) = freeprob(&[
        "convolve-mult",
        "--x",
        "1,2,5",
        "--y",
        "1/2,1,5/2",
        "--n",
        "3",
    ]);
    let x = MomentSeq::from_ints(&[1, 2, 5]);
    let y = MomentSeq::new(vec![ratio(1, 2), int(1), ratio(5, 2)]);
    assert_eq!(v["moments"], json(&free_mult_convolve(&x, &y, 3).unwrap()));

    let (status, v) = freeprob(&["inverse-cumulants", "--cumulants", "2,2,2,2", "--c1", "1"]);
    assert_eq!(status, 0);
    assert_eq!(v["agree"], true);
    assert_eq!(v["recursion"], serde_json::json!(["1", "-1", "0", "0"]));
}

#[test]
fn check_theorem_all_pass() {
    let (status, v) = freeprob(&[
        "check-theorem",
        "--c",
        "3/5",
        "--d",
        "6",
        "--c1",
        "13/2",
        "--order",
        "12",
    ]);
    assert_eq!(status, 0);
    assert_eq!(v["pass"], true);
    let cfg = CheckerConfig::new(ratio(3, 5), int(6), ratio(13, 2), 12);
    let valid = validate_config(&cfg).unwrap();
    assert_eq!(
        v["characterization"],
        json(&verify_characterization(&valid))
    );
    assert_eq!(v["word_level"], json(&word_level_check(&valid, 6).unwrap()));
    assert_eq!(v["params"]["x"]["lambda"], "15/13");
    assert_eq!(v["params"]["y"]["lambda"], "10/13");
}

#[test]
fn check_theorem_rejects_small_cd() {
    let (status, v) = freeprob(&["check-theorem", "--c", "1/2", "--d", "3/2", "--c1", "1"]);
    assert_eq!(status, 2);
    assert!(v["error"].as_str().unwrap().contains("cd must exceed 1"));
    assert!(v["hint"].is_string());
}

#[test]
fn output_is_byte_stable() {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_freeprob"))
            .args([
                "check-theorem",
                "--c",
                "1/2",
                "--d",
                "3",
                "--c1",
                "1",
                "--n-max",
                "4",
            ])
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run(), run());
}

#[test]
fn mc_verify_seed_from_environment() {
    let args = [
        "mc-verify",
        "--c",
        "3/5",
        "--d",
        "6",
        "--c1",
        "13/2",
        "--m",
        "32",
        "--reps",
        "4",
    ];
    let with_env = |seed: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_freeprob"))
            .args(args)
            .env(freeprob::cli::SEED_ENV, seed)
            .output()
            .unwrap();
        assert!(out.status.success());
        serde_json::from_slice::<Value>(&out.stdout).unwrap()
    };
    let a = with_env("7");
    assert_eq!(a["config"]["seed"], 7);
    assert_eq!(a, with_env("7"));
    let (_, explicit) = freeprob(&[&args[..], &["--seed", "7"]].concat());
    assert_eq!(explicit, a);
    assert_eq!(a["c_hat"].as_array().unwrap().len(), 3);
}

#[test]
fn mc_verify_zero_y() {
    let (status, v) = freeprob(&[
        "mc-verify",
        "--c",
        "3/5",
        "--d",
        "6",
        "--c1",
        "13/2",
        "--m",
        "24",
        "--reps",
        "2",
        "--zero-y",
    ]);
    assert_eq!(status, 0);
    for c in v["c_hat"].as_array().unwrap() {
        assert_eq!(c.as_f64().unwrap(), 1.0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    // Malformed inputs never crash and always map to status 2 with an error object.
    #[test]
    fn malformed_arguments_exit_2(
        sub in prop::sample::select(vec!["cumulants", "moments", "check-theorem", "nc-count", "convolve-add"]),
        junk in prop::sample::select(vec!["0.5", "abc", "1/0", "", "--", "1e3", "-x"]),
    ) {
        let args: Vec<&str> = match sub {
            "cumulants" => vec![sub, "--moments", junk],
            "moments" => vec![sub, "--cumulants", junk],
            "check-theorem" => vec![sub, "--c", junk, "--d", "6", "--c1", "1"],
            "nc-count" => vec![sub, "--n", junk],
            _ => vec![sub, "--x", junk, "--y", "1"],
        };
        let out = Command::new(env!("CARGO_BIN_EXE_freeprob")).args(&args).output().unwrap();
        let code = out.status.code().unwrap();
        // An empty list is a valid (empty) sequence for the sequence commands.
        if code == 0 {
            prop_assert!(junk.is_empty() && sub != "check-theorem" && sub != "nc-count");
        } else {
            prop_assert_eq!(code, 2);
            let v: Value = serde_json::from_slice(&out.stdout).unwrap();
            prop_assert!(v["error"].is_string());
            prop_assert!(v["hint"].is_string());
        }
    }
}
