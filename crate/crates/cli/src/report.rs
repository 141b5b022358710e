use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use curvecert::forge::TheoremInstance;
use curvecert::galois::{CycleType, GaloisCert};
use curvecert::schema::{SCHEMA_VERSION, TOOLKIT_VERSION};
use serde::{Deserialize, Serialize};

/// Everything a command produced. No wall-clock data, so equal inputs give equal bytes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub version: String,
    pub command: Vec<String>,
    pub inputs: serde_json::Value,
    pub seed: u64,
    pub result: Outcome,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Outcome {
    Instance { instance: TheoremInstance },
    Count(CountResult),
    Galois(GaloisResult),
    Jacobian(JacobianResult),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountResult {
    pub curve: String,
    pub field: String,
    pub model: String,
    pub genus: usize,
    pub count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaloisResult {
    pub poly: String,
    pub discriminant: String,
    pub cycle_types: Vec<CycleType>,
    pub group: Option<String>,
    pub certificate: Option<GaloisCert>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JacobianResult {
    pub curve: String,
    pub q: u64,
    pub genus: usize,
    /// `a_0, ..., a_{2g}` of `P(T)`.
    pub lpoly: Vec<String>,
    pub lpoly_text: String,
    /// `P(1) = #J(F_q)`.
    pub jacobian_order: String,
    /// `#C(F_{q^i})` for `i = 1, 2, ...`.
    pub counts: Vec<u64>,
}

impl Report {
    pub fn new(command: Vec<String>, inputs: serde_json::Value, seed: u64, result: Outcome) -> Self {
        Report { schema_version: SCHEMA_VERSION, version: TOOLKIT_VERSION.to_string(), command, inputs, seed, result }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Writes to `out`, or stdout when absent. Files are written to a sibling and renamed into place.
pub fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
        Some(path) => {
            let mut tmp = path.as_os_str().to_owned();
            tmp.push(".partial");
            std::fs::write(&tmp, text).with_context(|| format!("writing {}", path.display()))?;
            std::fs::rename(&tmp, path).with_context(|| format!("writing {}", path.display()))?;
            Ok(())
        }
    }
}

/// Accepts a full report or a bare theorem instance.
pub fn read_instance(text: &str) -> Result<TheoremInstance> {
    if let Ok(report) = serde_json::from_str::<Report>(text) {
        return match report.result {
            Outcome::Instance { instance } => Ok(instance),
            _ => anyhow::bail!("report does not hold a theorem instance"),
        };
    }
    serde_json::from_str(text).context("not a report or theorem instance")
}
