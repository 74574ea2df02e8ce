use serde::Serialize;

use super::avalanche::{bic, sac_matrix};
use super::differential::ddt;
use super::linear::lat;
use super::mean;
use super::nonlinear::{bijectivity, component_nonlinearities};
use crate::exec::Exec;
use crate::sbox::SBox;

/// All six criteria for one S-box. Field names double as the JSON keys.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CriteriaReport {
    pub n: u32,
    pub bijective: bool,
    pub bijectivity_weights: Vec<u32>,
    pub nonlinearities: Vec<u32>,
    pub nl_min: u32,
    pub nl_max: u32,
    pub nl_avg: f64,
    pub sac_matrix: Vec<Vec<f64>>,
    pub sac_min: f64,
    pub sac_max: f64,
    pub sac_avg: f64,
    pub bic_nl_matrix: Vec<Vec<u32>>,
    pub bic_nl_mean: f64,
    pub bic_sac_matrix: Vec<Vec<f64>>,
    pub bic_sac_mean: f64,
    pub bic_dd_matrix: Vec<Vec<u32>>,
    pub bic_dd_max: u32,
    pub ddt: Vec<Vec<u32>>,
    pub ddt_max: u32,
    pub dp: f64,
    pub lat_sq_max: f64,
    pub lat_sq_mean_nonzero: f64,
    pub melp: f64,
}

pub fn full_report(sbox: &SBox) -> CriteriaReport {
    full_report_with(sbox, Exec::default())
}

pub fn full_report_with(sbox: &SBox, exec: Exec) -> CriteriaReport {
    let bij = bijectivity(sbox);
    let nonlinearities = component_nonlinearities(sbox);
    let sac = sac_matrix(sbox);
    let sac_flat = || sac.iter().flatten().copied();
    let bic = bic(sbox, exec);
    let ddt = ddt(sbox, exec);
    let lat = lat(sbox, exec);
    CriteriaReport {
        n: sbox.bits(),
        bijective: bij.bijective,
        bijectivity_weights: bij.weights,
        nl_min: nonlinearities.iter().copied().min().unwrap_or(0),
        nl_max: nonlinearities.iter().copied().max().unwrap_or(0),
        nl_avg: mean(nonlinearities.iter().map(|&v| v as f64)),
        nonlinearities,
        sac_min: sac_flat().fold(f64::INFINITY, f64::min),
        sac_max: sac_flat().fold(f64::NEG_INFINITY, f64::max),
        sac_avg: mean(sac_flat()),
        sac_matrix: sac,
        bic_nl_matrix: bic.nl,
        bic_nl_mean: bic.nl_mean,
        bic_sac_matrix: bic.sac,
        bic_sac_mean: bic.sac_mean,
        bic_dd_matrix: bic.dd,
        bic_dd_max: bic.dd_max,
        ddt_max: ddt.max,
        dp: ddt.dp,
        ddt: ddt.table,
        lat_sq_max: lat.sq_max,
        lat_sq_mean_nonzero: lat.sq_mean_nonzero,
        melp: lat.melp,
    }
}

impl CriteriaReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One `key value` line per summary figure.
    pub fn to_text(&self) -> String {
        let nl: Vec<String> = self.nonlinearities.iter().map(|v| v.to_string()).collect();
        let min_weight = self.bijectivity_weights.iter().min().copied().unwrap_or(0);
        let rows: Vec<(&str, String)> = vec![
            ("n", self.n.to_string()),
            ("bijective", self.bijective.to_string()),
            ("bijectivity_weight_min", min_weight.to_string()),
            ("nonlinearities", nl.join(" ")),
            ("nl_min", self.nl_min.to_string()),
            ("nl_max", self.nl_max.to_string()),
            ("nl_avg", format!("{:.4}", self.nl_avg)),
            ("sac_min", format!("{:.4}", self.sac_min)),
            ("sac_max", format!("{:.4}", self.sac_max)),
            ("sac_avg", format!("{:.4}", self.sac_avg)),
            ("bic_nl_mean", format!("{:.4}", self.bic_nl_mean)),
            ("bic_sac_mean", format!("{:.4}", self.bic_sac_mean)),
            ("bic_dd_max", self.bic_dd_max.to_string()),
            ("ddt_max", self.ddt_max.to_string()),
            ("dp", format!("{:.4}", self.dp)),
            ("lat_sq_max", format!("{:.4}", self.lat_sq_max)),
            ("lat_sq_mean_nonzero", format!("{:.4}", self.lat_sq_mean_nonzero)),
            ("melp", format!("{:.4}", self.melp)),
        ];
        rows.iter().map(|(k, v)| format!("{k} {v}\n")).collect()
    }
}
