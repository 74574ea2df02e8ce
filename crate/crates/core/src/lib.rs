//! Dynamical S-box generation from lag-time chaotic series of the logistic
//! map, and evaluation of S-boxes against the standard quality criteria.
//!
//! * [`chaos`] - logistic map diagnostics and the lag-time bit generator.
//! * [`boolean`] - truth tables and Walsh-Hadamard spectra.
//! * [`sbox`] - S-box construction, inversion, families and fixtures.
//! * [`criteria`] - bijectivity, nonlinearity, SAC, BIC, DDT and LAT.
//! * [`imaging`] - per-row substitution of grayscale images.
//!
//! Data-parallel loops run on rayon when the `parallel` feature is enabled;
//! see [`Exec`].

pub mod boolean;
pub mod chaos;
pub mod criteria;
mod error;
mod exec;
pub mod imaging;
pub mod sbox;

pub use error::{Error, Result};
pub use exec::Exec;
pub use sbox::{SBox, SBoxFamily};
