//! Scenario files: a flat key-value TOML document selecting a model, a
//! suite and the sampling parameters.
//!
//! ```toml
//! model = "taxicab_r2"
//! suite = "isometry"
//! n = 100
//! seed = 7
//! net_epsilon = 0.01
//! ```
//!
//! Unknown suites, unknown models and non-positive tolerances are rejected
//! before anything runs (exit code 2).

use ballspace::spaces::ModelParams;
use serde::{Deserialize, Serialize};

pub const SUITES: &[&str] = &[
    "lipschitz",
    "isometry",
    "injectivity",
    "extendibility",
    "product",
    "quotient",
    "convergence",
    "lift",
];

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub model: String,
    pub suite: String,
    #[serde(default = "default_n")]
    pub n: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_eps")]
    pub net_epsilon: f64,
    #[serde(default = "default_r_max")]
    pub r_max: f64,
    #[serde(default = "default_window")]
    pub window: f64,
    #[serde(default = "default_tolerance")]
    pub tolerance: f64,
    #[serde(default = "default_true")]
    pub include_designated_witness: bool,

    // Model parameters.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub circumference: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factor_x: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factor_y: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family_n: Option<u32>,

    // Quotient suite parameters.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group_step: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group_bound: Option<i64>,

    /// Optional expectation override (defaults derive from the model's
    /// ground truth); used to exercise the exit-code contract.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expect: Option<String>,
}

fn default_n() -> usize {
    100
}
fn default_eps() -> f64 {
    0.01
}
fn default_r_max() -> f64 {
    3.0
}
fn default_window() -> f64 {
    10.0
}
fn default_tolerance() -> f64 {
    1e-6
}
fn default_true() -> bool {
    true
}

impl Scenario {
    pub fn parse(text: &str) -> Result<Self, String> {
        let scenario: Scenario =
            toml::from_str(text).map_err(|e| format!("malformed scenario: {e}"))?;
        scenario.validate()?;
        Ok(scenario)
    }

    pub fn validate(&self) -> Result<(), String> {
        if !SUITES.contains(&self.suite.as_str()) {
            return Err(format!(
                "unknown suite: {} (expected one of {SUITES:?})",
                self.suite
            ));
        }
        if self.tolerance <= 0.0 {
            return Err(format!(
                "tolerance must be strictly positive, got {}",
                self.tolerance
            ));
        }
        if self.net_epsilon <= 0.0 {
            return Err(format!(
                "net_epsilon must be strictly positive, got {}",
                self.net_epsilon
            ));
        }
        if self.n == 0 {
            return Err("sample count n must be at least 1".into());
        }
        Ok(())
    }

    pub fn model_params(&self) -> ModelParams {
        ModelParams {
            dim: self.dim,
            k: self.k,
            circumference: self.circumference,
            factor_x: self.factor_x.clone(),
            factor_y: self.factor_y.clone(),
            family_n: self.family_n,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_minimal_scenario_with_defaults() {
        let s = Scenario::parse("model = \"taxicab_r2\"\nsuite = \"isometry\"\n").unwrap();
        assert_eq!(s.n, 100);
        assert_eq!(s.net_epsilon, 0.01);
        assert!(s.include_designated_witness);
    }

    #[test]
    fn rejects_unknown_suite_and_bad_tolerance() {
        assert!(Scenario::parse("model = \"x\"\nsuite = \"nope\"\n").is_err());
        assert!(Scenario::parse("model = \"x\"\nsuite = \"isometry\"\ntolerance = 0.0\n").is_err());
    }
}
