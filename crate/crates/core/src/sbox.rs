//! Substitution boxes: construction from the chaotic bit stream, inversion,
//! dynamical families and the decimal grid fixture format.

use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;

use crate::chaos::{Generator, GeneratorConfig};
use crate::error::{Error, Result};
use crate::exec::Exec;

pub const MIN_BITS: u32 = 2;
pub const MAX_BITS: u32 = 16;

/// An `n x n` S-box stored as its lookup table.
///
/// Boxes built with [`SBox::new`] are guaranteed bijective. [`SBox::from_mapping`]
/// admits arbitrary maps so that defective tables can still be analysed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SBox {
    n: u32,
    table: Vec<u16>,
}

fn check_bits(n: u32) -> Result<()> {
    if (MIN_BITS..=MAX_BITS).contains(&n) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("word size {n} outside {MIN_BITS}..={MAX_BITS}")))
    }
}

/// Index of the first entry whose value already occurred.
fn first_duplicate(n: u32, table: &[u16]) -> Option<(usize, u16)> {
    let mut seen = vec![false; 1 << n];
    for (i, &v) in table.iter().enumerate() {
        if std::mem::replace(&mut seen[v as usize], true) {
            return Some((i, v));
        }
    }
    None
}

impl SBox {
    /// A bijective S-box; rejects repeated entries.
    pub fn new(n: u32, table: Vec<u16>) -> Result<Self> {
        let sbox = Self::from_mapping(n, table)?;
        if let Some((index, value)) = first_duplicate(n, &sbox.table) {
            return Err(Error::NotBijective { value: value as u32, index });
        }
        Ok(sbox)
    }

    /// Any map from `n`-bit words to `n`-bit words.
    pub fn from_mapping(n: u32, table: Vec<u16>) -> Result<Self> {
        check_bits(n)?;
        if table.len() != 1 << n {
            return Err(Error::InvalidParameter(format!(
                "table of a {n}-bit S-box needs {} entries, got {}",
                1usize << n,
                table.len()
            )));
        }
        if let Some(&v) = table.iter().find(|&&v| (v as u32) >> n != 0) {
            return Err(Error::InvalidParameter(format!("entry {v} does not fit in {n} bits")));
        }
        Ok(SBox { n, table })
    }

    pub fn identity(n: u32) -> Result<Self> {
        check_bits(n)?;
        Ok(SBox { n, table: (0..1u32 << n).map(|x| x as u16).collect() })
    }

    /// Word size in bits.
    pub fn bits(&self) -> u32 {
        self.n
    }

    /// Number of entries, `2^n`.
    pub fn size(&self) -> usize {
        self.table.len()
    }

    pub fn table(&self) -> &[u16] {
        &self.table
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.table[x] as usize
    }

    pub fn is_permutation(&self) -> bool {
        first_duplicate(self.n, &self.table).is_none()
    }

    /// `x -> S(x) ^ c`.
    pub fn xor_output(&self, c: u16) -> SBox {
        SBox { n: self.n, table: self.table.iter().map(|&v| v ^ c).collect() }
    }
}

/// `T` with `T[S[x]] = x`.
pub fn invert(sbox: &SBox) -> Result<SBox> {
    if let Some((index, value)) = first_duplicate(sbox.n, &sbox.table) {
        return Err(Error::NotBijective { value: value as u32, index });
    }
    let mut inv = vec![0u16; sbox.size()];
    for (x, &y) in sbox.table.iter().enumerate() {
        inv[y as usize] = x as u16;
    }
    Ok(SBox { n: sbox.n, table: inv })
}

/// Default bit budget for one S-box, `64 n 2^n`.
pub fn default_max_bits(n: u32) -> u64 {
    64 * n as u64 * (1u64 << n)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratedSBox {
    pub sbox: SBox,
    pub bits_consumed: u64,
}

/// Builds an S-box from consecutive `n`-bit blocks of `bits`, each read
/// MSB-first. A block value already seen is discarded; the table holds the
/// first `2^n` distinct values in arrival order.
///
/// Fails when `max_bits` would be exceeded or the source ends first.
pub fn generate_from_bits<I>(bits: &mut I, n: u32, max_bits: u64) -> Result<GeneratedSBox>
where
    I: Iterator<Item = u8> + ?Sized,
{
    check_bits(n)?;
    let size = 1usize << n;
    let mut seen = vec![false; size];
    let mut table = Vec::with_capacity(size);
    let mut consumed = 0u64;
    let exhausted = |consumed, distinct| Error::Exhausted { bits_consumed: consumed, distinct, needed: size };
    while table.len() < size {
        if consumed + n as u64 > max_bits {
            return Err(exhausted(consumed, table.len()));
        }
        let mut word = 0usize;
        for _ in 0..n {
            let b = bits.next().ok_or_else(|| exhausted(consumed, table.len()))?;
            consumed += 1;
            word = (word << 1) | (b & 1) as usize;
        }
        if !std::mem::replace(&mut seen[word], true) {
            table.push(word as u16);
        }
    }
    Ok(GeneratedSBox { sbox: SBox { n, table }, bits_consumed: consumed })
}

/// One S-box from the stream of `config`; `max_bits` defaults to
/// [`default_max_bits`].
pub fn generate(config: &GeneratorConfig, n: u32, max_bits: Option<u64>) -> Result<GeneratedSBox> {
    check_bits(n)?;
    let max_bits = max_bits.unwrap_or_else(|| default_max_bits(n));
    if max_bits < n as u64 * (1u64 << n) {
        return Err(Error::InvalidParameter(format!("max_bits {max_bits} below n 2^n")));
    }
    let mut gen = Generator::new(config)?;
    generate_from_bits(&mut gen, n, max_bits)
}

/// Independent generation for many configs, results in input order.
pub fn generate_batch(configs: &[GeneratorConfig], n: u32, exec: Exec) -> Vec<Result<GeneratedSBox>> {
    exec.map_slice(configs, |c| generate(c, n, None))
}

/// S-boxes drawn one after another from a single uninterrupted stream.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SBoxFamily {
    pub members: Vec<SBox>,
    pub config: GeneratorConfig,
    /// Stream position, in bits, at which each member started.
    pub offsets: Vec<u64>,
    pub bits_consumed: u64,
}

impl SBoxFamily {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

pub fn generate_family(config: &GeneratorConfig, n: u32, count: usize) -> Result<SBoxFamily> {
    if count == 0 {
        return Err(Error::InvalidParameter("family needs at least one member".into()));
    }
    check_bits(n)?;
    let mut gen = Generator::new(config)?;
    let mut members = Vec::with_capacity(count);
    let mut offsets = Vec::with_capacity(count);
    let mut position = 0u64;
    for _ in 0..count {
        let g = generate_from_bits(&mut gen, n, default_max_bits(n))?;
        offsets.push(position);
        position += g.bits_consumed;
        members.push(g.sbox);
    }
    Ok(SBoxFamily { members, config: config.clone(), offsets, bits_consumed: position })
}

fn parse_values(text: &str) -> Result<(Option<u32>, Vec<u64>)> {
    let mut header = None;
    let mut values = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("n") {
            if let Some(v) = rest.trim_start().strip_prefix('=') {
                if header.is_some() || !values.is_empty() {
                    return Err(Error::Parse(format!("line {}: misplaced n= header", lineno + 1)));
                }
                let n = v.trim().parse::<u32>().map_err(|e| {
                    Error::Parse(format!("line {}: bad word size '{}': {e}", lineno + 1, v.trim()))
                })?;
                header = Some(n);
                continue;
            }
        }
        for tok in line.split_whitespace() {
            let v = tok.parse::<u64>().map_err(|e| {
                Error::Parse(format!("line {}: bad entry '{tok}': {e}", lineno + 1))
            })?;
            values.push(v);
        }
    }
    Ok((header, values))
}

/// Parses the decimal fixture format without requiring a bijection.
///
/// Either an `n=<bits>` header followed by `2^n` integers in any layout, or
/// a bare list whose length `2^n` determines the word size.
pub fn parse_mapping_str(text: &str) -> Result<SBox> {
    let (header, values) = parse_values(text)?;
    let n = match header {
        Some(n) => n,
        None => {
            let len = values.len();
            if len < 4 || !len.is_power_of_two() {
                return Err(Error::Parse(format!("{len} entries is not 2^n for n >= 2")));
            }
            len.trailing_zeros()
        }
    };
    check_bits(n).map_err(|e| Error::Parse(e.to_string()))?;
    if values.len() != 1 << n {
        return Err(Error::Parse(format!(
            "expected {} entries for n = {n}, found {}",
            1usize << n,
            values.len()
        )));
    }
    let table = values
        .iter()
        .map(|&v| {
            if v >> n != 0 {
                Err(Error::Parse(format!("entry {v} does not fit in {n} bits")))
            } else {
                Ok(v as u16)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    SBox::from_mapping(n, table)
}

/// Parses a fixture and checks it is a bijection.
pub fn parse_fixture_str(text: &str) -> Result<SBox> {
    let s = parse_mapping_str(text)?;
    SBox::new(s.n, s.table)
}

/// Renders the fixture format: a `2^(n/2)`-wide grid, preceded by an `n=`
/// header when `n` is odd. An 8-bit box becomes 16 rows of 16 values.
pub fn format_fixture(sbox: &SBox) -> String {
    let n = sbox.bits();
    let mut out = String::new();
    if n % 2 == 1 {
        let _ = writeln!(out, "n={n}");
    }
    let width = 1usize << n.div_ceil(2);
    for row in sbox.table().chunks(width) {
        let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}

pub fn load_fixture(path: impl AsRef<Path>) -> Result<SBox> {
    parse_fixture_str(&std::fs::read_to_string(path)?)
}

pub fn load_mapping(path: impl AsRef<Path>) -> Result<SBox> {
    parse_mapping_str(&std::fs::read_to_string(path)?)
}

pub fn save_fixture(sbox: &SBox, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, format_fixture(sbox))?;
    Ok(())
}
