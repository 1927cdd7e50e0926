//! Machine-readable outcomes of identity, closure and kinematics checks.
//!
//! Exact residuals are serialized as rational strings (`"0"`, `"-3/4"`), so
//! report bodies are reproducible byte for byte.

use crate::scalar::{GaussianRational, Rat};
use serde::Serialize;

/// Outcome of an exhaustive identity check: residual must be exactly zero at
/// every enumerated tuple for a pass.
#[derive(Clone, Debug, Serialize)]
pub struct ResidualReport {
    pub id: String,
    pub pass: bool,
    pub tuple_count: u64,
    pub max_residual_re: String,
    pub max_residual_im: String,
    pub first_failure: Option<Vec<usize>>,
    /// Informational entries never gate a suite.
    #[serde(skip_serializing_if = "std::ops::Not::not", default)]
    pub informational: bool,
}

impl ResidualReport {
    pub fn passing(id: impl Into<String>, tuple_count: u64) -> ResidualReport {
        ResidualReport {
            id: id.into(),
            pass: true,
            tuple_count,
            max_residual_re: "0".into(),
            max_residual_im: "0".into(),
            first_failure: None,
            informational: false,
        }
    }
}

/// Streaming aggregator for per-tuple residuals.
pub struct ResidualTracker {
    id: String,
    tuple_count: u64,
    max_key: Rat,
    max_value: GaussianRational,
    first_failure: Option<Vec<usize>>,
}

impl ResidualTracker {
    pub fn new(id: impl Into<String>) -> ResidualTracker {
        ResidualTracker {
            id: id.into(),
            tuple_count: 0,
            max_key: Rat::ZERO,
            max_value: GaussianRational::ZERO,
            first_failure: None,
        }
    }

    pub fn record(&mut self, tuple: &[usize], residual: &GaussianRational) {
        self.tuple_count += 1;
        if residual.is_zero() {
            return;
        }
        if self.first_failure.is_none() {
            self.first_failure = Some(tuple.to_vec());
        }
        let key = residual.abs_key();
        if key > self.max_key {
            self.max_key = key;
            self.max_value = residual.clone();
        }
    }

    pub fn finish(self) -> ResidualReport {
        ResidualReport {
            id: self.id,
            pass: self.first_failure.is_none(),
            tuple_count: self.tuple_count,
            max_residual_re: self.max_value.re.render(),
            max_residual_im: self.max_value.im.render(),
            first_failure: self.first_failure,
            informational: false,
        }
    }
}

/// Per-generator closure outcome for one model.
#[derive(Clone, Debug, Serialize)]
pub struct ClosureEntry {
    pub generator: String,
    pub pass: bool,
    /// Scalar identities compared (charge pairs x free components x jets).
    pub tuple_count: u64,
    /// Nonzero residual terms, rendered, when the check fails.
    pub residual_terms: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClosureReport {
    pub model: String,
    pub n: u8,
    pub quotient_enabled: bool,
    pub pass: bool,
    pub entries: Vec<ClosureEntry>,
}

/// Outcome of matching a computed solution basis against a closed-form
/// template family.
#[derive(Clone, Debug, Serialize)]
pub struct MatchReport {
    pub model: String,
    pub degree: u32,
    pub dimension: usize,
    pub template: String,
    #[serde(rename = "match")]
    pub matched: bool,
    pub missing_directions: usize,
}
