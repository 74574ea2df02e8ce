//! Flat `key = value` config files, bit-stream exports and trace CSV.

use std::fmt::Write as _;
use std::io::{self, Write};

use super::generator::{GeneratorConfig, LagSpec, TraceRow};
use crate::error::{Error, Result};

const KEYS: [&str; 7] = ["alpha1", "alpha2", "x01", "x02", "lags1", "lags2", "burn_in"];

impl GeneratorConfig {
    /// Serializes as one `key = value` line per field.
    pub fn to_kv_string(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "alpha1 = {}", self.params1.alpha);
        let _ = writeln!(s, "alpha2 = {}", self.params2.alpha);
        let _ = writeln!(s, "x01 = {}", self.params1.x0);
        let _ = writeln!(s, "x02 = {}", self.params2.x0);
        let _ = writeln!(s, "lags1 = {}", self.lags1);
        let _ = writeln!(s, "lags2 = {}", self.lags2);
        let _ = writeln!(s, "burn_in = {}", self.burn_in);
        s
    }

    /// Parses a key-value config. Keys absent from the text keep the values
    /// of `base`. Blank lines and `#` comments are ignored; unknown keys are
    /// rejected. The result is validated.
    pub fn from_kv_str(text: &str, base: &GeneratorConfig) -> Result<Self> {
        let mut cfg = base.clone();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("line {}: expected key = value", lineno + 1)))?;
            cfg.set(key.trim(), value.trim())
                .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    /// Sets one field by its config-file key. Does not validate.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        fn real(v: &str) -> Result<f64> {
            v.parse::<f64>().map_err(|e| Error::Parse(format!("bad number '{v}': {e}")))
        }
        match key {
            "alpha1" => self.params1.alpha = real(value)?,
            "alpha2" => self.params2.alpha = real(value)?,
            "x01" => self.params1.x0 = real(value)?,
            "x02" => self.params2.x0 = real(value)?,
            "lags1" => self.lags1 = value.parse::<LagSpec>()?,
            "lags2" => self.lags2 = value.parse::<LagSpec>()?,
            "burn_in" => {
                self.burn_in = value
                    .parse::<u64>()
                    .map_err(|e| Error::Parse(format!("bad burn_in '{value}': {e}")))?
            }
            other => {
                return Err(Error::Parse(format!(
                    "unknown key '{other}' (expected one of {})",
                    KEYS.join(", ")
                )))
            }
        }
        Ok(())
    }
}

/// Packs bits eight per byte, first bit in the most significant position.
/// A trailing partial byte is zero-padded.
pub fn pack_bits_msb_first(bits: &[u8]) -> Vec<u8> {
    bits.chunks(8)
        .map(|chunk| {
            chunk
                .iter()
                .enumerate()
                .fold(0u8, |acc, (i, &b)| acc | ((b & 1) << (7 - i)))
        })
        .collect()
}

pub fn bits_to_ascii(bits: &[u8]) -> String {
    bits.iter().map(|&b| if b & 1 == 1 { '1' } else { '0' }).collect()
}

pub const TRACE_CSV_HEADER: &str = "i,x_i,m_i1,m_i2,z_i";

/// Writes trace rows as CSV; `x_i` is the state of the first orbit.
pub fn write_trace_csv<W: Write>(mut out: W, rows: impl IntoIterator<Item = TraceRow>) -> io::Result<()> {
    writeln!(out, "{TRACE_CSV_HEADER}")?;
    for r in rows {
        writeln!(out, "{},{},{},{},{}", r.index, r.x, r.m1, r.m2, r.z)?;
    }
    out.flush()
}
