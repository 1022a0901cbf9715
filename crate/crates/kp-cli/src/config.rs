//! Run configuration: a single flat JSON document per experiment, also
//! embeddable in result files so outputs re-ingest as configs.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::path::Path;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum CaseName {
    Ellipse,
    Dilation,
    Oval,
}

impl fmt::Display for CaseName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseName::Ellipse => write!(f, "ellipse"),
            CaseName::Dilation => write!(f, "dilation"),
            CaseName::Oval => write!(f, "oval"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum SweepParam {
    Sigma,
    Beta,
    Area,
    Radius,
}

impl fmt::Display for SweepParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SweepParam::Sigma => write!(f, "sigma"),
            SweepParam::Beta => write!(f, "beta"),
            SweepParam::Area => write!(f, "area"),
            SweepParam::Radius => write!(f, "radius"),
        }
    }
}

/// `LO:HI:N` range. A degenerate range (`lo == hi`) evaluates the single
/// point once; otherwise `n >= 2` grid points from `lo` to `hi` inclusive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Range {
    pub lo: f64,
    pub hi: f64,
    pub n: usize,
}

impl Range {
    pub fn validate(&self) -> Result<(), String> {
        if !self.lo.is_finite() || !self.hi.is_finite() {
            return Err(format!("range bounds must be finite, got {}:{}", self.lo, self.hi));
        }
        if self.lo > self.hi {
            return Err(format!("range requires lo <= hi, got {}:{}", self.lo, self.hi));
        }
        if self.lo < self.hi && self.n < 2 {
            return Err(format!("range over [{}, {}] needs n >= 2", self.lo, self.hi));
        }
        Ok(())
    }

    pub fn points(&self) -> Vec<f64> {
        if self.lo == self.hi {
            return vec![self.lo];
        }
        (0..self.n)
            .map(|i| self.lo + (self.hi - self.lo) * i as f64 / (self.n - 1) as f64)
            .collect()
    }
}

impl FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        let (lo, hi, n) = match parts.as_slice() {
            [lo, hi] => (lo, hi, "2"),
            [lo, hi, n] => (lo, hi, *n),
            _ => return Err(format!("expected LO:HI:N, got `{s}`")),
        };
        let range = Range {
            lo: lo.parse().map_err(|_| format!("bad range bound `{lo}`"))?,
            hi: hi.parse().map_err(|_| format!("bad range bound `{hi}`"))?,
            n: n.parse().map_err(|_| format!("bad range count `{n}`"))?,
        };
        range.validate()?;
        Ok(range)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub param: SweepParam,
    #[serde(flatten)]
    pub range: Range,
}

/// Optional output block of a configuration file. Flags take precedence;
/// result documents never embed it (where a run was written does not
/// identify the experiment).
#[derive(Debug, Clone, PartialEq, Default, Deserialize)]
pub struct OutputSpec {
    #[serde(default)]
    pub path: Option<std::path::PathBuf>,
    #[serde(default)]
    pub format: Option<crate::output::OutFormat>,
}

/// One experiment: case, physical parameters and optional sweep/verify
/// settings. Result documents embed the fully resolved configuration, so
/// feeding an output file back through `--config` reproduces the run.
fn default_alpha() -> f64 {
    1.0
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub case: CaseName,
    /// Bending weight; defaults to 1 (it only enters the multiplier).
    #[serde(default = "default_alpha")]
    pub alpha: f64,
    pub beta: f64,
    pub sigma: f64,
    pub area: f64,
    pub radius: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a0: Option<f64>,
    #[serde(default)]
    pub verify: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_nodes: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sweep: Option<SweepSpec>,
    #[serde(default, skip_serializing)]
    pub output: Option<OutputSpec>,
}

impl RunConfig {
    pub fn params(&self) -> Result<kp_core::Params, String> {
        kp_core::Params::new(self.alpha, self.beta, self.sigma, self.area, self.radius)
            .map_err(|e| e.to_string())
    }
}

/// Reads a configuration from either a bare `RunConfig` document or a
/// result document carrying a `config` field. Parse failures keep the
/// serde line/column reference.
pub fn load_config(path: &Path) -> Result<RunConfig, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("{}: {e}", path.display()))?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| format!("{}:{}:{}: {e}", path.display(), e.line(), e.column()))?;
    let config_value = value.get("config").cloned().unwrap_or(value);
    serde_json::from_value(config_value).map_err(|e| format!("{}: {e}", path.display()))
}

/// Default quadrature resolution; `KP_NODES` overrides it.
pub fn default_n_nodes() -> Result<usize, String> {
    match std::env::var("KP_NODES") {
        Err(_) => Ok(2048),
        Ok(raw) => {
            let n: usize = raw
                .parse()
                .map_err(|_| format!("KP_NODES must be an integer, got `{raw}`"))?;
            if n < 64 || !n.is_power_of_two() {
                return Err(format!("KP_NODES must be a power of two >= 64, got {n}"));
            }
            Ok(n)
        }
    }
}
