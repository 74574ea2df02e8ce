use serde::Serialize;

use crate::exec::Exec;
use crate::sbox::SBox;

/// Differential distribution table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Ddt {
    /// `table[dx][dy] = #{x : S(x) ^ S(x ^ dx) = dy}`.
    pub table: Vec<Vec<u32>>,
    /// Largest count over `dx != 0`.
    pub max: u32,
    /// `max / 2^n`.
    pub dp: f64,
}

impl Ddt {
    /// Largest count in each row `dx = 1 .. 2^n - 1`.
    pub fn row_maxima(&self) -> Vec<u32> {
        self.table[1..].iter().map(|row| row.iter().copied().max().unwrap_or(0)).collect()
    }
}

pub fn ddt(sbox: &SBox, exec: Exec) -> Ddt {
    let size = sbox.size();
    let t = sbox.table();
    let mut flat = vec![0u32; size * size];
    exec.for_each_row(&mut flat, size, |dx, row| {
        for x in 0..size {
            row[(t[x] ^ t[x ^ dx]) as usize] += 1;
        }
    });
    let table: Vec<Vec<u32>> = flat.chunks(size).map(<[u32]>::to_vec).collect();
    let max = table[1..].iter().flatten().copied().max().unwrap_or(0);
    Ddt { table, max, dp: max as f64 / size as f64 }
}
