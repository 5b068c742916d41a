use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::Value;

use super::registry::CheckId;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// Recorded for information; never affects the exit code.
    ReportOnly,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::ReportOnly => "report-only",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub check: CheckId,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

pub type Params = Vec<(&'static str, String)>;

fn to_map(params: Params) -> BTreeMap<String, String> {
    params
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect()
}

impl VerificationReport {
    pub fn pass(check: CheckId, params: Params, detail: impl Into<String>) -> Self {
        VerificationReport {
            check,
            params: to_map(params),
            status: Status::Pass,
            detail: detail.into(),
            witness: None,
        }
    }

    pub fn fail(check: CheckId, params: Params, detail: impl Into<String>, witness: Value) -> Self {
        VerificationReport {
            check,
            params: to_map(params),
            status: Status::Fail,
            detail: detail.into(),
            witness: Some(witness),
        }
    }

    pub fn report_only(check: CheckId, params: Params, detail: impl Into<String>) -> Self {
        VerificationReport {
            check,
            params: to_map(params),
            status: Status::ReportOnly,
            detail: detail.into(),
            witness: None,
        }
    }

    /// Pass or fail depending on `ok`; a failure carries the witness.
    pub fn verdict(
        check: CheckId,
        params: Params,
        ok: bool,
        detail: impl Into<String>,
        witness: impl FnOnce() -> Value,
    ) -> Self {
        if ok {
            VerificationReport::pass(check, params, detail)
        } else {
            VerificationReport::fail(check, params, detail, witness())
        }
    }

    pub fn with_witness(mut self, witness: Value) -> Self {
        self.witness = Some(witness);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.status == Status::Fail && self.witness.is_none() {
            return Err(Error::ReportInvariant(format!(
                "fail record for {} has no witness",
                self.check
            )));
        }
        Ok(())
    }
}

/// Numbers compare numerically, everything else lexically.
fn natural_cmp(a: &str, b: &str) -> Ordering {
    match (a.parse::<i64>(), b.parse::<i64>()) {
        (Ok(x), Ok(y)) => x.cmp(&y),
        _ => a.cmp(b),
    }
}

/// Order of records: check identifier, then parameters in natural order.
pub fn report_order(a: &VerificationReport, b: &VerificationReport) -> Ordering {
    a.check.as_str().cmp(b.check.as_str()).then_with(|| {
        let mut ia = a.params.iter();
        let mut ib = b.params.iter();
        loop {
            match (ia.next(), ib.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some((ka, va)), Some((kb, vb))) => {
                    let o = ka.cmp(kb).then_with(|| natural_cmp(va, vb));
                    if o != Ordering::Equal {
                        return o;
                    }
                }
            }
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            other => Err(Error::Precondition(format!("unknown format `{other}`"))),
        }
    }
}

fn params_cell(params: &BTreeMap<String, String>) -> String {
    if params.is_empty() {
        return "-".to_string();
    }
    params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(",")
}

/// Renders the records; fails if any record breaks the report invariants.
pub fn emit_report(reports: &[VerificationReport], format: Format) -> Result<String> {
    for r in reports {
        r.validate()?;
    }
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(reports)
                .map_err(|e| Error::ReportInvariant(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
        Format::Text => {
            let rows: Vec<[String; 4]> = reports
                .iter()
                .map(|r| {
                    [
                        r.check.to_string(),
                        params_cell(&r.params),
                        r.status.to_string(),
                        r.detail.clone(),
                    ]
                })
                .collect();
            let header = ["CHECK", "PARAMS", "STATUS", "DETAIL"].map(String::from);
            let mut widths = header.clone().map(|h| h.len());
            for row in &rows {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.chars().count());
                }
            }
            let mut out = String::new();
            for row in std::iter::once(&header).chain(&rows) {
                let line = format!(
                    "{:<w0$}  {:<w1$}  {:<w2$}  {}",
                    row[0],
                    row[1],
                    row[2],
                    row[3],
                    w0 = widths[0],
                    w1 = widths[1],
                    w2 = widths[2]
                );
                out.push_str(line.trim_end());
                out.push('\n');
            }
            let fails = reports.iter().filter(|r| r.status == Status::Fail).count();
            let info = reports
                .iter()
                .filter(|r| r.status == Status::ReportOnly)
                .count();
            out.push_str(&format!(
                "\n{} checks: {} pass, {} fail, {} report-only\n",
                reports.len(),
                reports.len() - fails - info,
                fails,
                info
            ));
            Ok(out)
        }
    }
}
