//! CSV and comparison-table renderings of criteria results.

use std::fmt::Display;
use std::fs;
use std::path::Path;

use serde::Serialize;

use super::report::CriteriaReport;
use crate::error::Result;

fn matrix_csv<T: Display>(rows: &[Vec<T>]) -> String {
    rows.iter()
        .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",") + "\n")
        .collect()
}

fn matrix_csv_4dp(rows: &[Vec<f64>]) -> String {
    rows.iter()
        .map(|r| r.iter().map(|v| format!("{v:.4}")).collect::<Vec<_>>().join(",") + "\n")
        .collect()
}

/// Writes one CSV per table into `dir`:
/// `sac.csv`, `bic_nl.csv`, `bic_sac.csv`, `bic_dd.csv`, `ddt.csv`, and
/// `ddt_row_max_half.csv` (per-`dx` maximum halved, `dx = 1..`, 16 per line,
/// `-` padding the final cell).
pub fn write_csv_dir(report: &CriteriaReport, dir: &Path) -> Result<()> {
    fs::create_dir_all(dir)?;
    fs::write(dir.join("sac.csv"), matrix_csv_4dp(&report.sac_matrix))?;
    fs::write(dir.join("bic_nl.csv"), matrix_csv(&report.bic_nl_matrix))?;
    fs::write(dir.join("bic_sac.csv"), matrix_csv_4dp(&report.bic_sac_matrix))?;
    fs::write(dir.join("bic_dd.csv"), matrix_csv(&report.bic_dd_matrix))?;
    fs::write(dir.join("ddt.csv"), matrix_csv(&report.ddt))?;

    let mut cells: Vec<String> = report.ddt[1..]
        .iter()
        .map(|row| (row.iter().copied().max().unwrap_or(0) / 2).to_string())
        .collect();
    cells.push("-".into());
    let half: Vec<Vec<String>> = cells.chunks(16).map(<[String]>::to_vec).collect();
    fs::write(dir.join("ddt_row_max_half.csv"), matrix_csv(&half))?;
    Ok(())
}

/// One line of a multi-box comparison.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CompareRow {
    pub name: String,
    pub bijective: bool,
    pub bijectivity_weight: f64,
    pub nl_min: u32,
    pub nl_max: u32,
    pub nl_avg: f64,
    pub sac_min: f64,
    pub sac_max: f64,
    pub sac_avg: f64,
    pub bic_sac: f64,
    pub bic_nl: f64,
    pub dp: f64,
    pub melp: f64,
}

impl CompareRow {
    pub fn from_report(name: impl Into<String>, r: &CriteriaReport) -> Self {
        let w = &r.bijectivity_weights;
        CompareRow {
            name: name.into(),
            bijective: r.bijective,
            bijectivity_weight: w.iter().map(|&v| v as f64).sum::<f64>() / w.len().max(1) as f64,
            nl_min: r.nl_min,
            nl_max: r.nl_max,
            nl_avg: r.nl_avg,
            sac_min: r.sac_min,
            sac_max: r.sac_max,
            sac_avg: r.sac_avg,
            bic_sac: r.bic_sac_mean,
            bic_nl: r.bic_nl_mean,
            dp: r.dp,
            melp: r.melp,
        }
    }

    fn cells(&self) -> Vec<String> {
        vec![
            self.name.clone(),
            format!("{:.2}", self.bijectivity_weight),
            self.nl_min.to_string(),
            self.nl_max.to_string(),
            format!("{:.4}", self.nl_avg),
            format!("{:.4}", self.sac_min),
            format!("{:.4}", self.sac_max),
            format!("{:.4}", self.sac_avg),
            format!("{:.4}", self.bic_sac),
            format!("{:.4}", self.bic_nl),
            format!("{:.4}", self.dp),
            format!("{:.4}", self.melp),
        ]
    }
}

const COMPARE_HEADER: [&str; 12] = [
    "name", "bijective", "nl_min", "nl_max", "nl_avg", "sac_min", "sac_max", "sac_avg", "bic_sac",
    "bic_nl", "dp", "melp",
];

pub fn compare_text(rows: &[CompareRow]) -> String {
    let mut table = vec![COMPARE_HEADER.iter().map(|s| s.to_string()).collect::<Vec<_>>()];
    table.extend(rows.iter().map(CompareRow::cells));
    let widths: Vec<usize> = (0..COMPARE_HEADER.len())
        .map(|c| table.iter().map(|r| r[c].len()).max().unwrap_or(0))
        .collect();
    table
        .iter()
        .map(|r| {
            let cells: Vec<String> = r
                .iter()
                .zip(&widths)
                .enumerate()
                .map(|(c, (v, &w))| if c == 0 { format!("{v:<w$}") } else { format!("{v:>w$}") })
                .collect();
            cells.join("  ").trim_end().to_string() + "\n"
        })
        .collect()
}

pub fn compare_csv(rows: &[CompareRow]) -> String {
    let mut out = COMPARE_HEADER.join(",") + "\n";
    for r in rows {
        out += &(r.cells().join(",") + "\n");
    }
    out
}
