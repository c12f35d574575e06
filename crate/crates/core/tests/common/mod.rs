#![allow(dead_code)]

use freeprob::characterization::CheckerConfig;
use freeprob::rational::{int, ratio};
use freeprob::Rat;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small random rational in `[-bound, bound]` with denominators up to `den`.
pub fn small_rat(rng: &mut impl Rng, bound: i64, den: i64) -> Rat {
    let q = rng.gen_range(1..=den);
    ratio(rng.gen_range(-bound * q..=bound * q), q)
}

pub fn positive_rat(rng: &mut impl Rng, bound: i64, den: i64) -> Rat {
    let q = rng.gen_range(1..=den);
    ratio(rng.gen_range(1..=bound * q), q)
}

pub fn rat_vec(rng: &mut impl Rng, len: usize) -> Vec<Rat> {
    (0..len).map(|_| small_rat(rng, 3, 5)).collect()
}

/// Random `(c, d, C1)` with `0 < c < 1`, `cd > 1` (hence `d > 1`), `C1 > 0`.
pub fn admissible_config(rng: &mut impl Rng, order: usize) -> CheckerConfig {
    let q = rng.gen_range(2..=12);
    let c = ratio(rng.gen_range(1..q), q);
    let d = c.recip() + positive_rat(rng, 4, 9);
    let c1 = positive_rat(rng, 8, 7);
    CheckerConfig::new(c, d, c1, order)
}

pub fn named_configs(order: usize) -> Vec<CheckerConfig> {
    vec![
        CheckerConfig::new(ratio(3, 5), int(6), ratio(13, 2), order),
        CheckerConfig::new(ratio(1, 2), int(3), int(1), order),
        CheckerConfig::new(ratio(2, 3), int(4), int(2), order),
    ]
}

/// Catalan numbers from `C_0 = 1`, `C_{n+1} = sum_i C_i C_{n-i}`.
pub fn catalan(n: usize) -> u64 {
    let mut c = vec![1u64];
    for k in 0..n {
        c.push((0..=k).map(|i| c[i] * c[k - i]).sum());
    }
    c[n]
}

/// Every set partition of `{0..n-1}` as a restricted growth string, by
/// brute force (no non-crossing logic).
pub fn all_set_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn go(n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let blocks = cur.iter().max().map_or(0, |m| m + 1);
        for b in 0..=blocks {
            cur.push(b);
            go(n, cur, out);
            cur.pop();
        }
    }
    go(n, &mut cur, &mut out);
    out
}

/// Crossing test straight from the four-index definition.
pub fn crosses(membership: &[usize]) -> bool {
    let n = membership.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    if membership[a] == membership[c]
                        && membership[b] == membership[d]
                        && membership[a] != membership[b]
                    {
                        return true;
                    }
                }
            }
        }
    }
    false
}
