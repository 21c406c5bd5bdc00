use std::fmt::Write as _;

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::morphisms::IndexCombination;
use crate::numerics::{json_number, ApproxValue};
use crate::wordalg::Poly;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    Exact,
    Numeric,
}

impl CheckKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckKind::Exact => "exact",
            CheckKind::Numeric => "numeric",
        }
    }
}

/// Outcome of one check at one parameter point.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub name: &'static str,
    /// Named integer parameters in a fixed order.
    pub params: Vec<(String, i64)>,
    pub kind: CheckKind,
    pub passed: bool,
    /// Exact difference of the two sides; zero when they agree.
    pub difference: Option<Poly>,
    pub residual: Option<ApproxValue>,
    pub tolerance: Option<f64>,
    /// Rendered nonzero terms of whatever failed to cancel exactly.
    pub detail_terms: Vec<String>,
    pub note: Option<String>,
}

impl CheckResult {
    pub(crate) fn exact(name: &'static str, params: Vec<(String, i64)>, difference: Poly) -> CheckResult {
        CheckResult {
            name,
            params,
            kind: CheckKind::Exact,
            passed: difference.is_zero(),
            detail_terms: poly_terms(&difference),
            difference: Some(difference),
            residual: None,
            tolerance: None,
            note: None,
        }
    }

    /// `residual` within its error bound plus `max(eps, 3·err)`.
    pub(crate) fn numeric(
        name: &'static str,
        params: Vec<(String, i64)>,
        residual: ApproxValue,
        eps: f64,
    ) -> CheckResult {
        let tolerance = eps.max(3.0 * residual.err());
        CheckResult {
            name,
            params,
            kind: CheckKind::Numeric,
            passed: residual.value().abs() <= residual.err() + tolerance,
            difference: None,
            residual: Some(residual),
            tolerance: Some(tolerance),
            detail_terms: Vec::new(),
            note: None,
        }
    }

    /// A numeric check whose evaluation itself failed.
    pub(crate) fn numeric_error(name: &'static str, params: Vec<(String, i64)>, error: crate::Error) -> CheckResult {
        CheckResult {
            name,
            params,
            kind: CheckKind::Numeric,
            passed: false,
            difference: None,
            residual: None,
            tolerance: None,
            detail_terms: Vec::new(),
            note: Some(format!("evaluation failed: {error}")),
        }
    }

    pub(crate) fn with_note(mut self, note: impl Into<String>) -> CheckResult {
        let note = note.into();
        self.note = Some(match self.note.take() {
            Some(prev) => format!("{prev}; {note}"),
            None => note,
        });
        self
    }

    /// `k1=3 k2=1 l=2`.
    pub fn params_label(&self) -> String {
        let parts: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        parts.join(" ")
    }
}

/// Terms of `p`, as indices when every word lies in `h¹`.
pub(crate) fn poly_terms(p: &Poly) -> Vec<String> {
    match IndexCombination::from_poly(p) {
        Ok(c) => c.terms().map(|(k, q)| format!("{q}*{k}")).collect(),
        Err(_) => p.terms().map(|(w, q)| format!("{q}*{w}")).collect(),
    }
}

/// Parameters `prefix1=k₁, prefix2=k₂, …`.
pub(crate) fn index_params(prefix: &str, parts: &[u32]) -> Vec<(String, i64)> {
    parts.iter().enumerate().map(|(i, &p)| (format!("{prefix}{}", i + 1), p as i64)).collect()
}

struct Params<'a>(&'a [(String, i64)]);

impl Serialize for Params<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0 {
            m.serialize_entry(k, v)?;
        }
        m.end()
    }
}

impl Serialize for CheckResult {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CheckResult", 9)?;
        st.serialize_field("name", self.name)?;
        st.serialize_field("params", &Params(&self.params))?;
        st.serialize_field("kind", self.kind.as_str())?;
        st.serialize_field("passed", &self.passed)?;
        st.serialize_field("residual_value", &self.residual.map(|r| json_number(r.value())))?;
        st.serialize_field("residual_err", &self.residual.map(|r| json_number(r.err())))?;
        st.serialize_field("tolerance", &self.tolerance.map(json_number))?;
        st.serialize_field("detail_terms", &self.detail_terms)?;
        st.serialize_field("note", &self.note)?;
        st.end()
    }
}

/// Pretty-printed JSON array of results.
pub fn render_json(results: &[CheckResult]) -> String {
    serde_json::to_string_pretty(results).expect("report serializes")
}

/// One aligned line per result followed by a pass count.
pub fn render_text(results: &[CheckResult]) -> String {
    let name_w = results.iter().map(|r| r.name.len()).max().unwrap_or(0);
    let labels: Vec<String> = results.iter().map(CheckResult::params_label).collect();
    let param_w = labels.iter().map(|l| l.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for (r, label) in results.iter().zip(&labels) {
        let status = if r.passed { "PASS" } else { "FAIL" };
        let summary = match (r.kind, r.residual) {
            (CheckKind::Numeric, Some(res)) => {
                format!("residual {:>10.3e} err {:.3e} tol {:.3e}", res.value(), res.err(), r.tolerance.unwrap_or(0.0))
            }
            (CheckKind::Numeric, None) => "no residual".to_string(),
            (CheckKind::Exact, _) => format!("difference terms {}", r.detail_terms.len()),
        };
        let pad = param_w - label.chars().count();
        let _ = write!(out, "{status}  {:<name_w$}  {label}{:pad$}  {summary}", r.name, "");
        if !r.detail_terms.is_empty() {
            let _ = write!(out, "  [{}]", r.detail_terms.join(" + "));
        }
        if let Some(note) = &r.note {
            let _ = write!(out, "  ({note})");
        }
        out.push('\n');
    }
    let passed = results.iter().filter(|r| r.passed).count();
    let _ = writeln!(out, "{passed}/{} checks passed", results.len());
    out
}
