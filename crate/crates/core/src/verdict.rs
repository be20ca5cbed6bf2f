//! Verdict types shared by the graph, groupoid and self-similar pipelines.

use serde::{Deserialize, Serialize};

use crate::field::Scalar;

/// Outcome of a Lie-simplicity decision for `[A, A]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LieVerdict {
    Simple,
    /// The identity lies in `[A, A]`. The certificate, when present, holds
    /// span coefficients witnessing the membership.
    NotSimple {
        certificate: Option<Vec<Scalar>>,
    },
    /// `A` is isomorphic to the base field, so `[A, A] = 0`.
    Trivial,
    /// Theorem preconditions fail (the algebra is not simple).
    Inapplicable(String),
    /// Preconditions hold but no finite criterion is available.
    Undecided(String),
}

impl LieVerdict {
    pub fn label(&self) -> &'static str {
        match self {
            LieVerdict::Simple => "Simple",
            LieVerdict::NotSimple { .. } => "NotSimple",
            LieVerdict::Trivial => "Trivial",
            LieVerdict::Inapplicable(_) => "Inapplicable",
            LieVerdict::Undecided(_) => "Undecided",
        }
    }

    pub fn is_simple(&self) -> bool {
        matches!(self, LieVerdict::Simple)
    }

    pub fn reason(&self) -> Option<&str> {
        match self {
            LieVerdict::Inapplicable(r) | LieVerdict::Undecided(r) => Some(r),
            _ => None,
        }
    }

    pub fn to_json(&self) -> VerdictJson {
        VerdictJson {
            verdict: self.label().to_string(),
            certificate: match self {
                LieVerdict::NotSimple { certificate: Some(c) } => Some(c.iter().map(ToString::to_string).collect()),
                _ => None,
            },
            reason: self.reason().map(str::to_string),
        }
    }
}

/// Outcome of a center computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CenterVerdict {
    /// `Z(A) = K * 1`.
    ScalarMultiplesOfIdentity,
    /// `Z(A) = 0`; only reachable for infinite unit spaces or vertex sets,
    /// which cannot be represented here.
    Zero,
    Inapplicable(String),
}

impl CenterVerdict {
    pub fn label(&self) -> &'static str {
        match self {
            CenterVerdict::ScalarMultiplesOfIdentity => "ScalarMultiplesOfIdentity",
            CenterVerdict::Zero => "Zero",
            CenterVerdict::Inapplicable(_) => "Inapplicable",
        }
    }

    pub fn to_json(&self) -> VerdictJson {
        VerdictJson {
            verdict: self.label().to_string(),
            certificate: None,
            reason: match self {
                CenterVerdict::Inapplicable(r) => Some(r.clone()),
                _ => None,
            },
        }
    }
}

/// `{"verdict": "...", "certificate": [...], "reason": "..."}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictJson {
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certificate: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
}
