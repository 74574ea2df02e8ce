use serde::Serialize;

use crate::boolean::{combination_unchecked, component_function, hamming_weight, walsh_transform, TruthTable};
use crate::sbox::SBox;

/// `2^(n-1) - max_w |W_f(w)| / 2`: distance from `f` to the nearest affine
/// function.
pub fn nonlinearity(f: &TruthTable) -> u32 {
    let half = 1u32 << (f.arity() - 1);
    half - walsh_transform(f).max_abs() / 2
}

/// Nonlinearity of each output component, `f_1` first.
pub fn component_nonlinearities(sbox: &SBox) -> Vec<u32> {
    (1..=sbox.bits() as usize)
        .map(|i| nonlinearity(&component_function(sbox, i).expect("index in range")))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bijectivity {
    /// Every nonzero combination of components is balanced.
    pub bijective: bool,
    /// Hamming weight of the combination selected by mask `a`, stored at
    /// index `a - 1`.
    pub weights: Vec<u32>,
    /// Direct check that no table entry repeats.
    pub permutation: bool,
}

pub fn bijectivity(sbox: &SBox) -> Bijectivity {
    let half = (sbox.size() / 2) as u32;
    let weights: Vec<u32> = (1..sbox.size() as u32)
        .map(|a| hamming_weight(&combination_unchecked(sbox, a)))
        .collect();
    let bijective = weights.iter().all(|&w| w == half);
    let permutation = sbox.is_permutation();
    debug_assert_eq!(bijective, permutation);
    Bijectivity { bijective, weights, permutation }
}
