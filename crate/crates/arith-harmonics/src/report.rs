use std::collections::BTreeMap;

use num_complex::Complex64;
use num_rational::BigRational;
use serde::Serialize;

/// A value on one side of an identity: exact rational or complex float.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ReportValue {
    Exact { value: String },
    Complex { re: f64, im: f64 },
}

impl From<&BigRational> for ReportValue {
    fn from(r: &BigRational) -> Self {
        ReportValue::Exact {
            value: r.to_string(),
        }
    }
}

impl From<Complex64> for ReportValue {
    fn from(z: Complex64) -> Self {
        ReportValue::Complex { re: z.re, im: z.im }
    }
}

impl From<f64> for ReportValue {
    fn from(x: f64) -> Self {
        ReportValue::Complex { re: x, im: 0.0 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    /// Holds within an empirical tail only; nothing is proved at this
    /// truncation (conditionally convergent s = 1 cases, conjecture scans).
    HeuristicPass,
    HeuristicFail,
}

/// One verified identity: both sides, the error, the verdict, and every
/// parameter that went into the run.
#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub name: String,
    pub params: BTreeMap<String, String>,
    pub lhs: ReportValue,
    pub rhs: ReportValue,
    pub abs_error: f64,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_terms: Option<u64>,
}

impl IdentityReport {
    pub fn exact(name: impl Into<String>, lhs: &BigRational, rhs: &BigRational) -> Self {
        let verdict = if lhs == rhs {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        IdentityReport {
            name: name.into(),
            params: BTreeMap::new(),
            lhs: lhs.into(),
            rhs: rhs.into(),
            abs_error: 0.0,
            verdict,
            n_terms: None,
        }
    }

    pub fn numeric(
        name: impl Into<String>,
        lhs: Complex64,
        rhs: Complex64,
        tolerance: f64,
    ) -> Self {
        let abs_error = (lhs - rhs).norm();
        let verdict = if abs_error <= tolerance {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        let mut r = IdentityReport {
            name: name.into(),
            params: BTreeMap::new(),
            lhs: lhs.into(),
            rhs: rhs.into(),
            abs_error,
            verdict,
            n_terms: None,
        };
        r.params
            .insert("tolerance".into(), format!("{tolerance:e}"));
        r
    }

    /// Same comparison, but the truncation carries no rigorous tail bound.
    pub fn heuristic(
        name: impl Into<String>,
        lhs: Complex64,
        rhs: Complex64,
        tolerance: f64,
    ) -> Self {
        let mut r = Self::numeric(name, lhs, rhs, tolerance);
        r.verdict = match r.verdict {
            Verdict::Pass => Verdict::HeuristicPass,
            _ => Verdict::HeuristicFail,
        };
        r
    }

    pub fn with_param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.into(), value.to_string());
        self
    }

    pub fn with_n_terms(mut self, n: u64) -> Self {
        self.n_terms = Some(n);
        self
    }

    pub fn passed(&self) -> bool {
        matches!(self.verdict, Verdict::Pass | Verdict::HeuristicPass)
    }

    pub fn is_heuristic(&self) -> bool {
        matches!(
            self.verdict,
            Verdict::HeuristicPass | Verdict::HeuristicFail
        )
    }
}
