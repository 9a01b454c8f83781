//! Serializable outcome of checking one identity instance.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::numkernel::CVal;

/// One verified, failed or skipped instance.
///
/// `pass` is `residual <= budget`, with `budget = err_lhs + err_rhs + slack`.
/// Skipped instances carry the divergent term in `skipped_reason`; instances
/// that could not be evaluated carry the reason in `error` and fail.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity_id: String,
    pub params: BTreeMap<String, String>,
    pub lhs: Option<CVal>,
    pub rhs: Option<CVal>,
    pub residual: Option<f64>,
    pub budget: Option<f64>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub skipped_reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Skipped,
}

impl IdentityReport {
    pub fn checked(
        identity_id: &str,
        params: BTreeMap<String, String>,
        lhs: CVal,
        rhs: CVal,
        slack: f64,
    ) -> IdentityReport {
        let residual = (lhs - rhs).abs();
        let budget = lhs.err + rhs.err + slack;
        IdentityReport {
            identity_id: identity_id.to_string(),
            params,
            lhs: Some(lhs),
            rhs: Some(rhs),
            residual: Some(residual),
            budget: Some(budget),
            pass: residual <= budget,
            skipped_reason: None,
            error: None,
        }
    }

    pub fn skipped(identity_id: &str, params: BTreeMap<String, String>, reason: String) -> Self {
        IdentityReport {
            identity_id: identity_id.to_string(),
            params,
            lhs: None,
            rhs: None,
            residual: None,
            budget: None,
            pass: false,
            skipped_reason: Some(reason),
            error: None,
        }
    }

    pub fn failed(identity_id: &str, params: BTreeMap<String, String>, error: String) -> Self {
        IdentityReport {
            error: Some(error),
            skipped_reason: None,
            ..IdentityReport::skipped(identity_id, params, String::new())
        }
    }

    pub fn outcome(&self) -> Outcome {
        if self.skipped_reason.is_some() {
            Outcome::Skipped
        } else if self.pass {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }

    /// `k=v` pairs joined by `;`, in key order.
    pub fn params_text(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";")
    }
}
