//! Sweep configuration file.

use std::path::Path;

use anyhow::{anyhow, Context, Result};
use fqhe_core::landau::SweepConfig;
use fqhe_core::{Branch, Error, SampleGeometry, UnitSystem};
use serde::Deserialize;

/// Flat JSON object, SI units, unit-suffixed keys.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepFile {
    #[serde(rename = "B_min_tesla")]
    pub b_min_tesla: f64,
    #[serde(rename = "B_max_tesla")]
    pub b_max_tesla: f64,
    pub steps: usize,
    pub n_s_per_m2: f64,
    #[serde(rename = "L_m")]
    pub l_m: f64,
    #[serde(rename = "W_m")]
    pub w_m: f64,
    #[serde(rename = "V_x_volt")]
    pub v_x_volt: f64,
    pub branch: Branch,
    /// Overrides `--units` when present.
    #[serde(default)]
    pub units: Option<UnitSystem>,
}

/// Maps the parameter names used by the model back to config keys.
fn config_key(name: &str) -> &str {
    match name {
        "B_min" => "B_min_tesla",
        "B_max" => "B_max_tesla",
        "n_s" => "n_s_per_m2",
        "L" => "L_m",
        "W" => "W_m",
        "V_x" => "V_x_volt",
        other => other,
    }
}

fn validation(err: Error) -> anyhow::Error {
    match err {
        Error::InvalidParameter { name, reason } => {
            anyhow!("invalid config field `{}`: {reason}", config_key(name))
        }
        other => anyhow!("invalid config: {other}"),
    }
}

impl SweepFile {
    pub fn parse(text: &str) -> Result<Self> {
        // serde_json reports "... at line L column C"
        serde_json::from_str(text).map_err(|e| anyhow!("malformed config: {e}"))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading config {}", path.display()))?;
        Self::parse(&text)
    }

    pub fn to_sweep(&self) -> Result<SweepConfig> {
        let geometry =
            SampleGeometry::new(self.l_m, self.w_m, self.n_s_per_m2).map_err(validation)?;
        let config = SweepConfig {
            b_min: self.b_min_tesla,
            b_max: self.b_max_tesla,
            steps: self.steps,
            geometry,
            v_x: self.v_x_volt,
            branch: self.branch,
        };
        config.validate().map_err(validation)?;
        Ok(config)
    }
}
