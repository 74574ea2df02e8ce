//! Boolean functions over `n`-bit inputs and their Walsh-Hadamard spectra.
//!
//! Bit numbering is MSB-first throughout: input variable `x_1` and output
//! component `f_1` are the most significant bits of their words.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::sbox::SBox;

pub const MAX_ARITY: u32 = 16;

/// A Boolean function stored as its `2^n` output bits, indexed by input word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    n: u32,
    bits: Vec<u8>,
}

impl TruthTable {
    pub fn new(n: u32, bits: Vec<u8>) -> Result<Self> {
        if n == 0 || n > MAX_ARITY {
            return Err(Error::InvalidParameter(format!("arity {n} outside 1..={MAX_ARITY}")));
        }
        if bits.len() != 1 << n {
            return Err(Error::InvalidParameter(format!(
                "truth table of arity {n} needs {} entries, got {}",
                1usize << n,
                bits.len()
            )));
        }
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::InvalidParameter("truth table entries must be 0 or 1".into()));
        }
        Ok(TruthTable { n, bits })
    }

    /// Truth table of `f(x) = pred(x)`.
    pub fn from_fn(n: u32, pred: impl Fn(u32) -> bool) -> Result<Self> {
        if n == 0 || n > MAX_ARITY {
            return Err(Error::InvalidParameter(format!("arity {n} outside 1..={MAX_ARITY}")));
        }
        Ok(TruthTable { n, bits: (0..1u32 << n).map(|x| pred(x) as u8).collect() })
    }

    /// The linear function `L_w(x) = w . x`.
    pub fn linear(n: u32, w: u32) -> Result<Self> {
        Self::from_fn(n, |x| dot_product(x, w) == 1)
    }

    pub fn arity(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    #[inline]
    pub fn get(&self, x: usize) -> u8 {
        self.bits[x]
    }

    /// Pointwise XOR; arities must match.
    pub fn xor(&self, other: &TruthTable) -> TruthTable {
        assert_eq!(self.n, other.n, "xor of truth tables with different arity");
        TruthTable {
            n: self.n,
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a ^ b).collect(),
        }
    }
}

/// Walsh-Hadamard spectrum: `values[w] = sum_x (-1)^(f(x) ^ w.x)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WalshSpectrum {
    pub n: u32,
    pub values: Vec<i32>,
}

impl WalshSpectrum {
    pub fn max_abs(&self) -> u32 {
        self.values.iter().map(|v| v.unsigned_abs()).max().unwrap_or(0)
    }

    /// `sum_w values[w]^2`; equals `2^(2n)` for every Boolean function.
    pub fn energy(&self) -> u64 {
        self.values.iter().map(|&v| (v as i64 * v as i64) as u64).sum()
    }
}

/// Parity of `x AND w`.
#[inline]
pub fn dot_product(x: u32, w: u32) -> u8 {
    ((x & w).count_ones() & 1) as u8
}

pub fn hamming_weight(f: &TruthTable) -> u32 {
    f.bits.iter().map(|&b| b as u32).sum()
}

/// In-place unnormalized Walsh-Hadamard butterfly over `2^k` integers.
pub fn fwht_in_place(values: &mut [i32]) {
    let len = values.len();
    debug_assert!(len.is_power_of_two());
    let mut h = 1;
    while h < len {
        for block in values.chunks_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (u, v) = (*a, *b);
                *a = u + v;
                *b = u - v;
            }
        }
        h *= 2;
    }
}

/// Spectrum of `f` via the fast butterfly, `O(n 2^n)`.
pub fn walsh_transform(f: &TruthTable) -> WalshSpectrum {
    let mut values: Vec<i32> = f.bits.iter().map(|&b| 1 - 2 * b as i32).collect();
    fwht_in_place(&mut values);
    WalshSpectrum { n: f.n, values }
}

/// Output component `f_i`, `1 <= i <= n`, with `f_1` the most significant bit.
pub fn component_function(sbox: &SBox, bit_index: usize) -> Result<TruthTable> {
    let n = sbox.bits() as usize;
    if bit_index == 0 || bit_index > n {
        return Err(Error::IndexOutOfRange { index: bit_index, max: n });
    }
    let shift = n - bit_index;
    Ok(TruthTable {
        n: sbox.bits(),
        bits: sbox.table().iter().map(|&y| ((y >> shift) & 1) as u8).collect(),
    })
}

/// `a_1 f_1 ^ ... ^ a_n f_n`, i.e. `x -> a . S(x)` with `a` read MSB-first
/// like the output word.
pub fn linear_combination(sbox: &SBox, mask: u32) -> Result<TruthTable> {
    let n = sbox.bits();
    if mask == 0 || mask >= 1 << n {
        return Err(Error::InvalidParameter(format!("mask {mask} outside 1..2^{n}")));
    }
    Ok(combination_unchecked(sbox, mask))
}

pub(crate) fn combination_unchecked(sbox: &SBox, mask: u32) -> TruthTable {
    TruthTable {
        n: sbox.bits(),
        bits: sbox.table().iter().map(|&y| dot_product(y as u32, mask)).collect(),
    }
}
