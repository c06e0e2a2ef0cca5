use serde::Serialize;
use serde_json::Value;

use cartan_core::Error;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("cannot read `{path}`: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
}

/// 2 parse, 3 validation, 4 precondition, 5 verification, 6 too large.
pub fn exit_code(e: &CliError) -> u8 {
    match e {
        CliError::Io { .. } | CliError::Usage(_) => 2,
        CliError::Core(e) => match e {
            Error::Parse(_) | Error::UnknownPreset(_) => 2,
            Error::NotAssociative(..)
            | Error::BadIdentity(_)
            | Error::DimensionMismatch { .. }
            | Error::FieldMismatch
            | Error::NotPrime(_)
            | Error::InvalidGroupTable(_)
            | Error::InvalidOrder(_)
            | Error::NotSubgroup => 3,
            Error::VerificationFailed(_) => 5,
            Error::EnumerationTooLarge { .. } | Error::TooLarge => 6,
            Error::DivisionByZero
            | Error::ZeroPolynomial
            | Error::NotUnital
            | Error::NotLieClosed
            | Error::NotIdeal
            | Error::NotInRadical
            | Error::NotTorus
            | Error::NotCentralSimple(_)
            | Error::NotFiniteField
            | Error::InvalidN(_)
            | Error::Precondition(_) => 4,
        },
    }
}

#[derive(Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub input_digest: String,
    pub command: String,
    pub results: Value,
    pub checks: Vec<Check>,
    pub seed: u64,
    pub version: String,
}

impl RunReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn pretty(&self) -> String {
        let mut out = format!(
            "command: {}\ninput:   sha256:{}\nseed:    {}\n",
            self.command, self.input_digest, self.seed
        );
        if let Value::Object(map) = &self.results {
            for (k, v) in map {
                out.push_str(&format!("{k}: {}\n", summarize(v)));
            }
        }
        out.push_str("checks:\n");
        for c in &self.checks {
            out.push_str(&format!("  [{}] {}\n", if c.passed { "ok" } else { "FAIL" }, c.name));
        }
        out.push_str(if self.all_passed() {
            "verdict: all checks passed"
        } else {
            "verdict: FAILED"
        });
        out
    }
}

/// One-line rendering; subspaces show as their dimension.
fn summarize(v: &Value) -> String {
    match v {
        Value::Object(m) if m.contains_key("basis") => {
            let rows = m["basis"].as_array().map_or(0, Vec::len);
            format!("subspace of dimension {rows}")
        }
        Value::Object(m) => {
            let parts: Vec<String> = m.iter().map(|(k, v)| format!("{k}={}", summarize(v))).collect();
            format!("{{{}}}", parts.join(", "))
        }
        other => other.to_string(),
    }
}
