//! The verification suite: every check as a structured record, run in
//! parallel and merged in a fixed order.

mod checks;
mod registry;
mod report;

use rayon::prelude::*;

pub use checks::{HAMILTONIAN_SAMPLES, MAX_DIM_RANK, MAX_HAMILTONIAN_N, MAX_SCALING_N};
pub use registry::{CheckId, Scope};
pub use report::{emit_report, report_order, Format, Status, VerificationReport};

use crate::error::{Error, Result};
use crate::spectral::LocalFamily;

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub scope: Scope,
    pub min_n: usize,
    pub max_n: usize,
    pub min_g: u64,
    pub max_g: u64,
    pub seed: u64,
    /// Extra family whose multiplicity is reported alongside the fixtures.
    pub family: Option<LocalFamily>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            scope: Scope::All,
            min_n: 1,
            max_n: 4,
            min_g: 2,
            max_g: 5,
            seed: 0,
            family: None,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        if self.min_n < 1 {
            return Err(Error::Precondition("n must be at least 1".into()));
        }
        if self.min_n > self.max_n {
            return Err(Error::Precondition(format!(
                "empty n range {}..={}",
                self.min_n, self.max_n
            )));
        }
        if self.min_g < 2 {
            return Err(Error::Precondition("g must be at least 2".into()));
        }
        if self.min_g > self.max_g {
            return Err(Error::Precondition(format!(
                "empty g range {}..={}",
                self.min_g, self.max_g
            )));
        }
        Ok(())
    }
}

/// Runs every check selected by the configuration. Ranges beyond a check's
/// supported `n` are clipped to it.
pub fn run_suite(cfg: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    cfg.validate()?;
    let jobs = checks::jobs(cfg);
    let mut reports: Vec<VerificationReport> = jobs.par_iter().flat_map_iter(|job| job()).collect();
    reports.sort_by(report_order);
    Ok(reports)
}

/// Exit status of a run: 0 without failures, 1 otherwise.
pub fn exit_code(reports: &[VerificationReport]) -> i32 {
    if reports.iter().any(|r| r.status == Status::Fail) {
        1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn cfg(scope: Scope) -> SuiteConfig {
        SuiteConfig {
            scope,
            max_n: 2,
            max_g: 3,
            ..SuiteConfig::default()
        }
    }

    #[test]
    fn every_check_is_covered() {
        let reports = run_suite(&SuiteConfig {
            max_n: 3,
            ..cfg(Scope::All)
        })
        .unwrap();
        let seen: BTreeSet<CheckId> = reports.iter().map(|r| r.check).collect();
        for id in CheckId::ALL {
            assert!(seen.contains(id), "{id} never emitted");
            assert!(Scope::ALL[1..].iter().any(|s| s.includes(*id)));
        }
        assert_eq!(
            exit_code(&reports),
            0,
            "{:#?}",
            reports
                .iter()
                .filter(|r| r.status == Status::Fail)
                .collect::<Vec<_>>()
        );
    }

    #[test]
    fn scopes_partition_the_checks() {
        for s in &Scope::ALL[1..] {
            let reports = run_suite(&cfg(*s)).unwrap();
            assert!(!reports.is_empty());
            assert!(reports.iter().all(|r| r.check.scope() == *s));
        }
    }

    #[test]
    fn runs_are_deterministic() {
        let a = emit_report(
            &run_suite(&cfg(Scope::Factorization)).unwrap(),
            Format::Json,
        )
        .unwrap();
        let b = emit_report(
            &run_suite(&cfg(Scope::Factorization)).unwrap(),
            Format::Json,
        )
        .unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn invalid_ranges_rejected() {
        for bad in [
            SuiteConfig {
                min_n: 0,
                ..SuiteConfig::default()
            },
            SuiteConfig {
                min_n: 3,
                max_n: 2,
                ..SuiteConfig::default()
            },
            SuiteConfig {
                min_g: 1,
                ..SuiteConfig::default()
            },
            SuiteConfig {
                min_g: 4,
                max_g: 3,
                ..SuiteConfig::default()
            },
        ] {
            assert!(run_suite(&bad).is_err());
        }
    }

    #[test]
    fn multiplicity_orders_and_flags() {
        let reports = run_suite(&cfg(Scope::Multiplicity)).unwrap();
        let orders: Vec<(String, Status, u64)> = reports
            .iter()
            .filter(|r| r.check == CheckId::StratumMultiplicity)
            .map(|r| {
                (
                    r.params["label"].clone(),
                    r.status,
                    r.witness.as_ref().unwrap()["order"].as_u64().unwrap(),
                )
            })
            .collect();
        let expected = [
            ("ac", Status::ReportOnly, 2),
            ("b", Status::Pass, 1),
            ("bb", Status::Pass, 1),
            ("bm", Status::Pass, 1),
            ("cc", Status::Pass, 3),
            ("mm", Status::Pass, 2),
        ];
        let expected: Vec<_> = expected
            .iter()
            .map(|(l, s, o)| (l.to_string(), *s, *o))
            .collect();
        assert_eq!(orders, expected);
    }
}
