//! The six S-box quality criteria: bijectivity, nonlinearity, strict
//! avalanche, output bit independence, differential uniformity and linear
//! approximation probability.
//!
//! Matrices indexed by bit position use MSB-first numbering. Avalanche
//! matrices are laid out with one row per output component and one column per
//! flipped input bit.

mod avalanche;
mod differential;
mod export;
mod linear;
mod nonlinear;
mod report;

pub use avalanche::{avalanche_sum, bic, dynamic_distance, input_direction, sac_matrix, Bic};
pub use differential::{ddt, Ddt};
pub use export::{compare_csv, compare_text, write_csv_dir, CompareRow};
pub use linear::{lat, Lat};
pub use nonlinear::{bijectivity, component_nonlinearities, nonlinearity, Bijectivity};
pub use report::{full_report, full_report_with, CriteriaReport};

pub(crate) fn mean(values: impl IntoIterator<Item = f64>) -> f64 {
    let (sum, count) = values.into_iter().fold((0.0, 0usize), |(s, c), v| (s + v, c + 1));
    if count == 0 {
        0.0
    } else {
        sum / count as f64
    }
}
