use serde::Serialize;

use super::mean;
use super::nonlinear::nonlinearity;
use crate::boolean::{component_function, TruthTable};
use crate::exec::Exec;
use crate::sbox::SBox;

/// Mask flipping input bit `i` (1-based, MSB-first) of an `n`-bit word.
#[inline]
pub fn input_direction(n: u32, i: usize) -> u32 {
    1 << (n as usize - i)
}

/// `sum_x f(x) ^ f(x ^ d)`.
pub fn avalanche_sum(f: &TruthTable, d: u32) -> u32 {
    let d = d as usize;
    f.bits()
        .iter()
        .enumerate()
        .map(|(x, &v)| (v ^ f.get(x ^ d)) as u32)
        .sum()
}

/// Largest `|2^(n-1) - avalanche_sum(f, d)| / 2` over single-bit `d`.
///
/// The avalanche sum is always even, so the result is exact for `n >= 2`.
pub fn dynamic_distance(f: &TruthTable) -> u32 {
    let n = f.arity();
    let half = 1u32 << (n - 1);
    (1..=n as usize)
        .map(|i| half.abs_diff(avalanche_sum(f, input_direction(n, i))) / 2)
        .max()
        .unwrap_or(0)
}

fn components(sbox: &SBox) -> Vec<TruthTable> {
    (1..=sbox.bits() as usize)
        .map(|i| component_function(sbox, i).expect("index in range"))
        .collect()
}

fn flip_probabilities(f: &TruthTable) -> Vec<f64> {
    let n = f.arity();
    let size = f.len() as f64;
    (1..=n as usize)
        .map(|i| avalanche_sum(f, input_direction(n, i)) as f64 / size)
        .collect()
}

/// Probability that output bit `j` flips when input bit `i` is complemented,
/// stored at `[j - 1][i - 1]`. A box with perfect avalanche has 0.5
/// everywhere.
pub fn sac_matrix(sbox: &SBox) -> Vec<Vec<f64>> {
    components(sbox).iter().map(flip_probabilities).collect()
}

/// Output bit independence measured on every pair `f_i ^ f_j`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Bic {
    pub nl: Vec<Vec<u32>>,
    /// Mean single-bit flip probability of `f_i ^ f_j`.
    pub sac: Vec<Vec<f64>>,
    pub dd: Vec<Vec<u32>>,
    pub nl_mean: f64,
    pub sac_mean: f64,
    pub dd_max: u32,
}

pub fn bic(sbox: &SBox, exec: Exec) -> Bic {
    let comps = components(sbox);
    let n = comps.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let results = exec.map_slice(&pairs, |&(i, j)| {
        let f = comps[i].xor(&comps[j]);
        (nonlinearity(&f), mean(flip_probabilities(&f)), dynamic_distance(&f))
    });

    let mut nl = vec![vec![0u32; n]; n];
    let mut sac = vec![vec![0.0f64; n]; n];
    let mut dd = vec![vec![0u32; n]; n];
    for (&(i, j), &(l, s, d)) in pairs.iter().zip(&results) {
        nl[i][j] = l;
        nl[j][i] = l;
        sac[i][j] = s;
        sac[j][i] = s;
        dd[i][j] = d;
        dd[j][i] = d;
    }
    Bic {
        nl_mean: mean(results.iter().map(|r| r.0 as f64)),
        sac_mean: mean(results.iter().map(|r| r.1)),
        dd_max: results.iter().map(|r| r.2).max().unwrap_or(0),
        nl,
        sac,
        dd,
    }
}
