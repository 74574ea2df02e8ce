//! Logistic-map dynamics and the lag-time chaotic bit generator.
//!
//! The generator runs two logistic orbits, forms a lag-time series from each
//! by summing delayed states modulo 1, mixes the two series into the delayed
//! map `Z_i = m_i1 + m_i2 mod 1`, and thresholds `Z_i` at one half to produce
//! a bit stream.

mod config_file;
mod dynamics;
mod generator;
mod logistic;

pub use config_file::{bits_to_ascii, pack_bits_msb_first, write_trace_csv, TRACE_CSV_HEADER};
pub use dynamics::{
    bifurcation_scan, fixed_points, lyapunov_exponent, lyapunov_sweep, BifurcationSlice,
    FixedPoint, Stability, BIFURCATION_X0,
};
pub use generator::{
    bit_from_z, bit_stream, mix, GeneratorConfig, Generator, LagSeries, LagSpec, Preset, TraceRow,
};
pub use logistic::{invariant_interval, logistic_map, logistic_step, mod1, LogisticParams};
