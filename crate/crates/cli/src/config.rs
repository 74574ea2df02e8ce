use std::path::PathBuf;

use clap::Args;
use lagbox::chaos::{GeneratorConfig, LagSpec, Preset};

use crate::commands::Failure;

/// Generator parameters: a preset, optionally overlaid by a config file,
/// then by individual flags.
#[derive(Debug, Args)]
pub struct ConfigArgs {
    /// Key-value config file (alpha1, alpha2, x01, x02, lags1, lags2, burn_in).
    #[arg(long)]
    config: Option<PathBuf>,
    /// Starting parameter set: reference or mirrored.
    #[arg(long)]
    preset: Option<Preset>,
    #[arg(long, allow_hyphen_values = true)]
    alpha1: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    alpha2: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    x01: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    x02: Option<f64>,
    /// Comma-separated lags of the first series, e.g. 10,5.
    #[arg(long)]
    lags1: Option<LagSpec>,
    #[arg(long)]
    lags2: Option<LagSpec>,
    #[arg(long)]
    burn_in: Option<u64>,
}

impl ConfigArgs {
    pub fn resolve(&self) -> Result<GeneratorConfig, Failure> {
        let mut cfg = self.preset.map(GeneratorConfig::preset).unwrap_or_default();
        if let Some(path) = &self.config {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::io(format!("{}: {e}", path.display())))?;
            cfg = GeneratorConfig::from_kv_str(&text, &cfg)
                .map_err(|e| Failure::from(e).context(&path.display().to_string()))?;
        }
        if let Some(v) = self.alpha1 {
            cfg.params1.alpha = v;
        }
        if let Some(v) = self.alpha2 {
            cfg.params2.alpha = v;
        }
        if let Some(v) = self.x01 {
            cfg.params1.x0 = v;
        }
        if let Some(v) = self.x02 {
            cfg.params2.x0 = v;
        }
        if let Some(v) = &self.lags1 {
            cfg.lags1 = v.clone();
        }
        if let Some(v) = &self.lags2 {
            cfg.lags2 = v.clone();
        }
        if let Some(v) = self.burn_in {
            cfg.burn_in = v;
        }
        cfg.validate().map_err(|e| Failure::usage(e.to_string()))?;
        Ok(cfg)
    }
}
