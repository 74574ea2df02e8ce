use serde::Serialize;

use crate::boolean::{combination_unchecked, walsh_transform};
use crate::exec::Exec;
use crate::sbox::SBox;

/// Linear approximation table in correlation form.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Lat {
    /// `sums[a][b] = sum_x (-1)^(a.x ^ b.S(x))`; the correlation is
    /// `sums[a][b] / 2^n`.
    pub sums: Vec<Vec<i32>>,
    /// Largest `|sums[a][b]|` over nonzero `a` and `b`.
    pub max_abs: u32,
    /// Largest squared correlation over nonzero masks.
    pub sq_max: f64,
    /// Mean squared correlation over nonzero masks.
    pub sq_mean_nonzero: f64,
    /// Largest squared bias `(correlation / 2)^2` over nonzero masks.
    pub melp: f64,
}

impl Lat {
    pub fn correlation(&self, a: usize, b: usize) -> f64 {
        self.sums[a][b] as f64 / self.sums.len() as f64
    }
}

/// Builds the table column by column: column `b` is the Walsh spectrum of
/// `x -> b.S(x)`.
pub fn lat(sbox: &SBox, exec: Exec) -> Lat {
    let size = sbox.size();
    let columns = exec.map_range(size, |b| walsh_transform(&combination_unchecked(sbox, b as u32)).values);
    let sums: Vec<Vec<i32>> = (0..size).map(|a| columns.iter().map(|col| col[a]).collect()).collect();

    let mut max_abs = 0u32;
    let mut sq_total = 0u64;
    for row in &sums[1..] {
        for &v in &row[1..] {
            max_abs = max_abs.max(v.unsigned_abs());
            sq_total += (v as i64 * v as i64) as u64;
        }
    }
    let scale = size as f64;
    let nonzero = ((size - 1) * (size - 1)) as f64;
    let c_max = max_abs as f64 / scale;
    Lat {
        sums,
        max_abs,
        sq_max: c_max * c_max,
        sq_mean_nonzero: sq_total as f64 / (scale * scale) / nonzero,
        melp: c_max * c_max / 4.0,
    }
}
