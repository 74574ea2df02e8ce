use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::logistic::{check_domain, logistic_map, mod1, LogisticParams};
use crate::error::{Error, Result};

/// Delay offsets of one lag-time series, kept in descending order.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct LagSpec {
    lags: Vec<usize>,
}

impl LagSpec {
    /// Builds a lag set from offsets given in any order. Offsets must be
    /// positive and pairwise distinct.
    pub fn new(lags: impl Into<Vec<usize>>) -> Result<Self> {
        let mut lags = lags.into();
        if lags.contains(&0) {
            return Err(Error::InvalidConfig("lag offsets must be >= 1".into()));
        }
        lags.sort_unstable_by(|a, b| b.cmp(a));
        if lags.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidConfig("lag offsets must be distinct".into()));
        }
        Ok(LagSpec { lags })
    }

    pub fn empty() -> Self {
        LagSpec::default()
    }

    /// Offsets, largest first.
    pub fn lags(&self) -> &[usize] {
        &self.lags
    }

    pub fn max_lag(&self) -> usize {
        self.lags.first().copied().unwrap_or(0)
    }

    /// True when no two offsets are adjacent integers.
    pub fn is_non_contiguous(&self) -> bool {
        self.lags.windows(2).all(|w| w[0] - w[1] > 1)
    }
}

impl fmt::Display for LagSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.lags.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for LagSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(LagSpec::empty());
        }
        let lags = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad lag '{}': {e}", p.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        LagSpec::new(lags)
    }
}

/// One logistic orbit together with the ring buffer of its recent states.
#[derive(Debug, Clone)]
pub struct LagSeries {
    params: LogisticParams,
    lags: LagSpec,
    ring: Vec<f64>,
    /// Slot holding the current state `x_i`.
    head: usize,
    filled: usize,
    index: u64,
}

impl LagSeries {
    pub fn new(params: LogisticParams, lags: LagSpec) -> Result<Self> {
        params.validate()?;
        let len = lags.max_lag() + 1;
        let mut ring = vec![0.0; len];
        ring[0] = params.x0;
        Ok(LagSeries { params, lags, ring, head: 0, filled: 1, index: 0 })
    }

    /// Builds a warm series directly from a window of states, oldest first.
    /// The last element is the current state; the window length must be
    /// `max_lag + 1`. States are not required to form an orbit.
    pub fn with_window(params: LogisticParams, lags: LagSpec, window: &[f64]) -> Result<Self> {
        let len = lags.max_lag() + 1;
        if window.len() != len {
            return Err(Error::InvalidParameter(format!(
                "window holds {} states, lag set needs {len}",
                window.len()
            )));
        }
        for &x in window {
            check_domain(params.alpha, x)?;
        }
        Ok(LagSeries {
            params,
            lags,
            ring: window.to_vec(),
            head: len - 1,
            filled: len,
            index: (len - 1) as u64,
        })
    }

    pub fn params(&self) -> &LogisticParams {
        &self.params
    }

    pub fn lag_spec(&self) -> &LagSpec {
        &self.lags
    }

    /// Time index `i` of the current state.
    pub fn index(&self) -> u64 {
        self.index
    }

    pub fn buffer_len(&self) -> usize {
        self.ring.len()
    }

    pub fn is_warm(&self) -> bool {
        self.filled == self.ring.len()
    }

    pub fn current(&self) -> f64 {
        self.ring[self.head]
    }

    /// State `x_{i-k}`; `k` must not exceed the buffered history.
    pub fn lagged(&self, k: usize) -> f64 {
        debug_assert!(k < self.filled);
        let len = self.ring.len();
        self.ring[(self.head + len - k) % len]
    }

    /// Iterates the orbit once, evicting the oldest buffered state.
    pub fn advance(&mut self) {
        let next = logistic_map(self.params.alpha, self.current());
        self.head = (self.head + 1) % self.ring.len();
        self.ring[self.head] = next;
        self.filled = (self.filled + 1).min(self.ring.len());
        self.index += 1;
    }

    /// `m_i`: the lagged states, largest lag first, plus the current state,
    /// summed left to right and reduced mod 1 once.
    pub fn value(&self) -> Result<f64> {
        if !self.is_warm() {
            return Err(Error::NotWarm { filled: self.filled, needed: self.ring.len() });
        }
        let mut sum = 0.0;
        for &k in self.lags.lags() {
            sum += self.lagged(k);
        }
        sum += self.current();
        Ok(mod1(sum))
    }

    /// Returns `m_i` for the current state, then advances to `i + 1`.
    pub fn step(&mut self) -> Result<f64> {
        let m = self.value()?;
        self.advance();
        Ok(m)
    }
}

/// `Z = m1 + m2 mod 1`.
#[inline]
pub fn mix(m1: f64, m2: f64) -> f64 {
    mod1(m1 + m2)
}

/// Quantizes the delayed map: `[0, 0.5]` gives 0, `(0.5, 1)` gives 1.
#[inline]
pub fn bit_from_z(z: f64) -> u8 {
    if z <= 0.5 {
        0
    } else {
        1
    }
}

/// Named parameter sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    /// `alpha1 = 4` with lags {10, 5}, `alpha2 = -2` with lags {10, 6}.
    /// Reproduces the reference 8x8 S-box bit for bit.
    Reference,
    /// `alpha1 = -2` with lags {10, 5}, `alpha2 = 4` with lags {10, 6}.
    Mirrored,
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "reference" => Ok(Preset::Reference),
            "mirrored" => Ok(Preset::Mirrored),
            other => Err(Error::Parse(format!("unknown preset '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneratorConfig {
    pub params1: LogisticParams,
    pub params2: LogisticParams,
    pub lags1: LagSpec,
    pub lags2: LagSpec,
    /// Orbit iterations discarded before the lag buffers start filling.
    pub burn_in: u64,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig::preset(Preset::Reference)
    }
}

impl GeneratorConfig {
    pub fn preset(preset: Preset) -> Self {
        let (a1, a2) = match preset {
            Preset::Reference => (4.0, -2.0),
            Preset::Mirrored => (-2.0, 4.0),
        };
        GeneratorConfig {
            params1: LogisticParams { alpha: a1, x0: 0.8147 },
            params2: LogisticParams { alpha: a2, x0: 0.9058 },
            lags1: LagSpec { lags: vec![10, 5] },
            lags2: LagSpec { lags: vec![10, 6] },
            burn_in: 0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.params1.validate()?;
        self.params2.validate()?;
        if self.params1.x0 == self.params2.x0 {
            return Err(Error::InvalidConfig(format!(
                "initial conditions must differ (x01 = x02 = {})",
                self.params1.x0
            )));
        }
        if self.params1.alpha == self.params2.alpha {
            return Err(Error::InvalidConfig(format!(
                "bifurcation parameters must differ (alpha1 = alpha2 = {})",
                self.params1.alpha
            )));
        }
        Ok(())
    }

    /// Orbit steps taken before the first emitted sample.
    pub fn warm_up(&self) -> u64 {
        self.lags1.max_lag().max(self.lags2.max_lag()) as u64
    }
}

/// One emitted sample of the generator, for trace export.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceRow {
    pub index: u64,
    pub x: f64,
    pub m1: f64,
    pub m2: f64,
    pub z: f64,
}

/// Stateful bit generator. Single owner; clone to fork an identical stream.
#[derive(Debug, Clone)]
pub struct Generator {
    series1: LagSeries,
    series2: LagSeries,
    emitted: u64,
}

impl Generator {
    pub fn new(config: &GeneratorConfig) -> Result<Self> {
        config.validate()?;
        let mut series1 = LagSeries::new(config.params1, config.lags1.clone())?;
        let mut series2 = LagSeries::new(config.params2, config.lags2.clone())?;
        for _ in 0..config.burn_in + config.warm_up() {
            series1.advance();
            series2.advance();
        }
        debug_assert!(series1.is_warm() && series2.is_warm());
        Ok(Generator { series1, series2, emitted: 0 })
    }

    /// Builds a generator from two already-warm series.
    pub fn from_series(series1: LagSeries, series2: LagSeries) -> Result<Self> {
        for s in [&series1, &series2] {
            if !s.is_warm() {
                return Err(Error::NotWarm { filled: s.filled, needed: s.buffer_len() });
            }
        }
        Ok(Generator { series1, series2, emitted: 0 })
    }

    pub fn series1(&self) -> &LagSeries {
        &self.series1
    }

    pub fn series2(&self) -> &LagSeries {
        &self.series2
    }

    /// Samples of the delayed map emitted so far.
    pub fn emitted(&self) -> u64 {
        self.emitted
    }

    /// Returns the current trace sample and advances both orbits once.
    pub fn next_sample(&mut self) -> TraceRow {
        let index = self.series1.index();
        let x = self.series1.current();
        // Both series are warm by construction.
        let m1 = self.series1.step().expect("series 1 warm");
        let m2 = self.series2.step().expect("series 2 warm");
        self.emitted += 1;
        TraceRow { index, x, m1, m2, z: mix(m1, m2) }
    }

    /// `Z_i`, advancing both orbits one step.
    pub fn next_z(&mut self) -> f64 {
        self.next_sample().z
    }

    pub fn next_bit(&mut self) -> u8 {
        bit_from_z(self.next_z())
    }
}

impl Iterator for Generator {
    type Item = u8;

    fn next(&mut self) -> Option<u8> {
        Some(self.next_bit())
    }
}

/// The first `count` bits of the stream defined by `config`.
pub fn bit_stream(config: &GeneratorConfig, count: usize) -> Result<Vec<u8>> {
    Ok(Generator::new(config)?.take(count).collect())
}
