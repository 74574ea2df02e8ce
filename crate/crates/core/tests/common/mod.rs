//! Shared fixtures, reference tables and brute-force oracles.
//!
//! The oracles evaluate each definition directly from the table with nested
//! loops; none of them goes through the Walsh butterfly or the library's
//! component extraction.

#![allow(dead_code)]

use lagbox::sbox::parse_fixture_str;
use lagbox::SBox;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn reference_box() -> SBox {
    parse_fixture_str(include_str!("../../testdata/reference.sbox")).unwrap()
}

pub fn aes_box() -> SBox {
    parse_fixture_str(include_str!("../../testdata/aes.sbox")).unwrap()
}

pub fn random_bijection<R: Rng>(rng: &mut R, n: u32) -> SBox {
    let mut t: Vec<u16> = (0..1u32 << n).map(|v| v as u16).collect();
    t.shuffle(rng);
    SBox::new(n, t).unwrap()
}

fn parity(v: usize) -> usize {
    v.count_ones() as usize & 1
}

/// Bit `j` (1-based, MSB-first) of an `n`-bit word.
fn bit(n: u32, word: usize, j: usize) -> usize {
    (word >> (n as usize - j)) & 1
}

/// Minimum Hamming distance from component `j` to all `2^(n+1)` affine
/// functions.
pub fn naive_nonlinearity(s: &SBox, j: usize) -> u32 {
    naive_nonlinearity_of(s.bits(), |x| bit(s.bits(), s.table()[x] as usize, j))
}

pub fn naive_nonlinearity_of(n: u32, f: impl Fn(usize) -> usize) -> u32 {
    let size = 1usize << n;
    let mut best = u32::MAX;
    for w in 0..size {
        for c in 0..2 {
            let d = (0..size).filter(|&x| f(x) != parity(x & w) ^ c).count() as u32;
            best = best.min(d);
        }
    }
    best
}

/// `[output j][input i]` flip probabilities.
pub fn naive_sac(s: &SBox) -> Vec<Vec<f64>> {
    let n = s.bits();
    let size = s.size();
    let t = s.table();
    (1..=n as usize)
        .map(|j| {
            (1..=n as usize)
                .map(|i| {
                    let e = 1usize << (n as usize - i);
                    let flips = (0..size)
                        .filter(|&x| bit(n, t[x] as usize, j) != bit(n, t[x ^ e] as usize, j))
                        .count();
                    flips as f64 / size as f64
                })
                .collect()
        })
        .collect()
}

/// DD of `f_i ^ f_j` straight from the definition.
pub fn naive_pair_dd(s: &SBox, i: usize, j: usize) -> u32 {
    let n = s.bits();
    let size = s.size();
    let t = s.table();
    let g = |x: usize| bit(n, t[x] as usize, i) ^ bit(n, t[x] as usize, j);
    let mut worst = 0i64;
    for k in 0..n {
        let d = 1usize << k;
        let sum = (0..size).filter(|&x| g(x) != g(x ^ d)).count() as i64;
        worst = worst.max(((size as i64 / 2) - sum).abs());
    }
    (worst / 2) as u32
}

/// DD of the single component `f_j`.
pub fn naive_component_dd(s: &SBox, j: usize) -> u32 {
    let n = s.bits();
    let size = s.size();
    let t = s.table();
    let g = |x: usize| bit(n, t[x] as usize, j);
    let mut worst = 0i64;
    for k in 0..n {
        let d = 1usize << k;
        let sum = (0..size).filter(|&x| g(x) != g(x ^ d)).count() as i64;
        worst = worst.max(((size as i64 / 2) - sum).abs());
    }
    (worst / 2) as u32
}

pub fn naive_pair_nonlinearity(s: &SBox, i: usize, j: usize) -> u32 {
    let n = s.bits();
    let t = s.table();
    naive_nonlinearity_of(n, |x| bit(n, t[x] as usize, i) ^ bit(n, t[x] as usize, j))
}

/// `ddt[dx][dy]`, counting solutions of `S(x) ^ S(x ^ dx) = dy` one pair at a time.
pub fn naive_ddt(s: &SBox) -> Vec<Vec<u32>> {
    let size = s.size();
    let t = s.table();
    (0..size)
        .map(|dx| {
            (0..size)
                .map(|dy| (0..size).filter(|&x| (t[x] ^ t[x ^ dx]) as usize == dy).count() as u32)
                .collect()
        })
        .collect()
}

/// `sum_x (-1)^(a.x ^ b.S(x))` for every `(a, b)`.
pub fn naive_lat(s: &SBox) -> Vec<Vec<i32>> {
    let size = s.size();
    let t = s.table();
    (0..size)
        .map(|a| {
            (0..size)
                .map(|b| {
                    (0..size)
                        .map(|x| if parity(a & x) ^ parity(b & t[x] as usize) == 0 { 1 } else { -1 })
                        .sum()
                })
                .collect()
        })
        .collect()
}

/// `sum_x (-1)^(f(x) ^ w.x)` by double loop.
pub fn naive_walsh(bits: &[u8]) -> Vec<i32> {
    let size = bits.len();
    (0..size)
        .map(|w| {
            (0..size)
                .map(|x| if (bits[x] as usize ^ parity(x & w)) == 0 { 1 } else { -1 })
                .sum()
        })
        .collect()
}

pub const REFERENCE_NONLINEARITIES: [u32; 8] = [104, 104, 102, 104, 96, 102, 100, 102];

pub const REFERENCE_SAC: [[f64; 8]; 8] = [
    [0.5781, 0.4844, 0.5000, 0.4219, 0.4844, 0.5156, 0.4063, 0.5469],
    [0.5156, 0.5000, 0.4688, 0.5156, 0.5469, 0.3906, 0.5469, 0.4375],
    [0.5469, 0.5000, 0.5000, 0.5469, 0.4063, 0.5156, 0.4531, 0.5313],
    [0.4531, 0.5156, 0.5000, 0.4531, 0.5313, 0.5313, 0.4844, 0.4688],
    [0.5156, 0.5469, 0.4844, 0.5313, 0.5313, 0.5625, 0.5625, 0.5469],
    [0.4063, 0.4844, 0.5000, 0.4063, 0.5625, 0.5625, 0.4844, 0.5313],
    [0.4219, 0.4063, 0.5313, 0.5313, 0.4219, 0.5625, 0.4844, 0.4844],
    [0.5469, 0.5156, 0.5469, 0.5625, 0.4531, 0.5625, 0.5781, 0.4531],
];

pub const REFERENCE_BIC_NL: [[u32; 8]; 8] = [
    [0, 104, 104, 106, 104, 106, 106, 102],
    [104, 0, 106, 98, 102, 104, 102, 104],
    [104, 106, 0, 104, 102, 96, 104, 104],
    [106, 98, 104, 0, 106, 100, 106, 104],
    [104, 102, 102, 106, 0, 102, 100, 102],
    [106, 104, 96, 100, 102, 0, 104, 108],
    [106, 102, 104, 106, 100, 104, 0, 106],
    [102, 104, 104, 104, 102, 108, 106, 0],
];

pub const REFERENCE_BIC_SAC: [[f64; 8]; 8] = [
    [0.0, 0.5020, 0.5176, 0.5137, 0.5293, 0.5098, 0.4727, 0.5059],
    [0.5020, 0.0, 0.4980, 0.4844, 0.5039, 0.5313, 0.5156, 0.5000],
    [0.5176, 0.4980, 0.0, 0.5039, 0.4941, 0.5313, 0.5000, 0.5020],
    [0.5137, 0.4844, 0.5039, 0.0, 0.5117, 0.4980, 0.5020, 0.5020],
    [0.5293, 0.5039, 0.4941, 0.5117, 0.0, 0.5234, 0.5000, 0.5137],
    [0.5098, 0.5313, 0.5313, 0.4980, 0.5234, 0.0, 0.5039, 0.5000],
    [0.4727, 0.5156, 0.5000, 0.5020, 0.5000, 0.5039, 0.0, 0.5156],
    [0.5059, 0.5000, 0.5020, 0.5020, 0.5137, 0.5000, 0.5156, 0.0],
];

pub const REFERENCE_BIC_DD: [[u32; 8]; 8] = [
    [0, 2, 6, 2, 4, 6, 4, 6],
    [2, 0, 2, 2, 2, 2, 4, 2],
    [6, 2, 0, 6, 8, 2, 6, 4],
    [2, 2, 6, 0, 4, 2, 8, 4],
    [4, 2, 8, 4, 0, 2, 0, 2],
    [6, 2, 2, 2, 2, 0, 2, 8],
    [4, 4, 6, 8, 0, 2, 0, 0],
    [6, 2, 4, 4, 2, 8, 0, 0],
];

/// Per-difference maxima, halved, for `dx = 1..=255` in row-major order; the
/// 256th printed cell is blank.
pub const REFERENCE_HALF_ROW_MAX: [u32; 255] = [
    4, 3, 3, 4, 3, 3, 3, 3, 4, 3, 3, 3, 3, 3, 4, 4,
    3, 3, 4, 3, 3, 4, 3, 3, 4, 3, 3, 4, 4, 4, 4, 3,
    4, 3, 4, 3, 4, 4, 3, 3, 3, 3, 3, 3, 3, 4, 3, 3,
    4, 3, 3, 3, 4, 4, 4, 4, 3, 4, 5, 4, 3, 2, 3, 3,
    5, 4, 4, 3, 3, 3, 4, 4, 4, 3, 5, 3, 3, 3, 3, 3,
    3, 3, 3, 4, 4, 3, 5, 4, 3, 3, 3, 5, 5, 3, 3, 3,
    3, 3, 3, 3, 3, 4, 4, 3, 3, 3, 4, 3, 3, 2, 3, 3,
    3, 2, 3, 3, 3, 4, 3, 3, 3, 3, 3, 4, 3, 3, 3, 3,
    3, 3, 3, 5, 5, 3, 3, 4, 3, 4, 3, 2, 5, 3, 3, 3,
    3, 3, 3, 4, 3, 4, 3, 3, 3, 4, 3, 3, 4, 3, 4, 3,
    4, 3, 4, 3, 2, 3, 3, 4, 3, 3, 3, 3, 3, 4, 3, 3,
    3, 4, 3, 3, 3, 3, 3, 3, 3, 4, 3, 3, 3, 3, 4, 4,
    3, 3, 3, 3, 3, 4, 3, 3, 2, 4, 3, 3, 4, 4, 3, 3,
    4, 3, 4, 3, 4, 4, 3, 4, 4, 3, 4, 4, 3, 3, 3, 3,
    3, 4, 3, 3, 3, 3, 3, 3, 3, 4, 4, 3, 3, 3, 3, 3,
    3, 3, 3, 5, 4, 5, 4, 3, 3, 5, 3, 3, 4, 3, 5,
];

/// Upper 95% point of the chi-square distribution with 15 degrees of freedom.
pub const CHI2_15_95: f64 = 24.995790;

/// Pearson statistic of `samples` in `[0, 1)` over `bins` equal bins.
pub fn chi_square_uniform(samples: &[f64], bins: usize) -> f64 {
    let mut counts = vec![0u64; bins];
    for &z in samples {
        counts[((z * bins as f64) as usize).min(bins - 1)] += 1;
    }
    let e = samples.len() as f64 / bins as f64;
    counts.iter().map(|&o| (o as f64 - e).powi(2) / e).sum()
}

pub fn pearson_lag1(samples: &[f64]) -> f64 {
    let a = &samples[..samples.len() - 1];
    let b = &samples[1..];
    let n = a.len() as f64;
    let ma = a.iter().sum::<f64>() / n;
    let mb = b.iter().sum::<f64>() / n;
    let (mut sab, mut saa, mut sbb) = (0.0, 0.0, 0.0);
    for (x, y) in a.iter().zip(b) {
        sab += (x - ma) * (y - mb);
        saa += (x - ma) * (x - ma);
        sbb += (y - mb) * (y - mb);
    }
    sab / (saa * sbb).sqrt()
}
