use std::collections::BTreeMap;

use serde::Serialize;

use crate::suite::{CheckOutcome, SuiteConfig};

/// Echo of the effective configuration, embedded in every report.
#[derive(Serialize)]
pub struct ConfigEcho {
    pub n: usize,
    pub gamma: f64,
    pub seed: u64,
    pub trials: usize,
    pub inject_violation: bool,
    pub tol_overrides: BTreeMap<String, f64>,
}

/// Machine-readable result of a check run.
#[derive(Serialize)]
pub struct Report {
    pub suite: String,
    pub version: String,
    pub config: ConfigEcho,
    pub checks: Vec<CheckOutcome>,
}

impl Report {
    pub fn new(suite: &str, config: &SuiteConfig, checks: Vec<CheckOutcome>) -> Self {
        Report {
            suite: suite.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            config: ConfigEcho {
                n: config.n,
                gamma: config.gamma,
                seed: config.seed,
                trials: config.trials,
                inject_violation: config.inject_violation,
                tol_overrides: config.tol_overrides.clone(),
            },
            checks,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.pass)
    }
}
