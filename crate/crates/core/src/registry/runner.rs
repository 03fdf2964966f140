use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::checks::SpaceCtx;
use super::{check_by_id, Checker, Scope, TheoremCheck, CHECKS};
use crate::error::{Result, TopoError};
use crate::setcore::enumerate_topologies;

/// Largest ground size `verify` sweeps.
pub const MAX_VERIFY_N: usize = 5;

#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    pub n_max: usize,
    /// Check ids to run; all when `None`.
    pub ids: Option<Vec<String>>,
    /// Worker threads; rayon's default when `None`.
    pub workers: Option<usize>,
    /// Skip fixture and symbolic checks.
    pub finite_only: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CheckStatus {
    Pass {
        #[serde(skip_serializing_if = "Option::is_none")]
        note: Option<String>,
    },
    Fail {
        witness: String,
    },
    Skipped,
}

impl CheckStatus {
    pub fn passed(&self) -> bool {
        matches!(self, CheckStatus::Pass { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub id: &'static str,
    pub statement: &'static str,
    pub scope: Scope,
    #[serde(flatten)]
    pub status: CheckStatus,
    /// Spaces the check was evaluated on.
    pub spaces: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub n_max: usize,
    pub spaces_examined: usize,
    pub checks: Vec<CheckReport>,
    /// `None` once masked.
    pub wall_time_ms: Option<u128>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks
            .iter()
            .all(|c| !matches!(c.status, CheckStatus::Fail { .. }))
    }

    pub fn masked(&self) -> VerificationReport {
        VerificationReport {
            wall_time_ms: None,
            ..self.clone()
        }
    }

    pub fn get(&self, id: &str) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.id == id)
    }
}

fn select(ids: &Option<Vec<String>>) -> Result<Vec<&'static TheoremCheck>> {
    match ids {
        None => Ok(CHECKS.iter().collect()),
        Some(ids) => {
            let mut chosen = Vec::new();
            for id in ids {
                let check = check_by_id(id.trim()).ok_or_else(|| TopoError::UnknownCheckId(id.clone()))?;
                if !chosen.iter().any(|c: &&TheoremCheck| c.id == check.id) {
                    chosen.push(check);
                }
            }
            // Registry order, whatever order the ids came in.
            chosen.sort_by_key(|c| CHECKS.iter().position(|d| d.id == c.id));
            Ok(chosen)
        }
    }
}

/// Runs the selected checks over every topology on `0..=n_max` points.
///
/// Spaces are visited in canonical order and each check reports its first
/// failure, so the content does not depend on the number of workers.
pub fn verify(options: &VerifyOptions) -> Result<VerificationReport> {
    let n_max = options.n_max;
    if n_max == 0 {
        return Err(TopoError::BadSize("n_max must be at least 1".into()));
    }
    if n_max > MAX_VERIFY_N {
        return Err(TopoError::GroundTooLarge {
            size: n_max,
            max: MAX_VERIFY_N,
        });
    }
    let selected = select(&options.ids)?;
    let start = Instant::now();
    let pool = {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(w) = options.workers {
            builder = builder.num_threads(w.max(1));
        }
        builder
            .build()
            .map_err(|e| TopoError::Unsupported(format!("thread pool: {e}")))?
    };

    let space_checks: Vec<(usize, &TheoremCheck)> = selected
        .iter()
        .enumerate()
        .filter(|(_, c)| matches!(c.checker, Checker::Space(_)))
        .map(|(i, c)| (i, *c))
        .collect();
    let mut failures: Vec<Option<String>> = vec![None; selected.len()];
    let mut spaces_examined = 0;
    if !space_checks.is_empty() {
        for k in 0..=n_max {
            let spaces = enumerate_topologies(k, false)?;
            spaces_examined += spaces.len();
            let results: Vec<Vec<Option<String>>> = pool.install(|| {
                spaces
                    .par_iter()
                    .map(|space| {
                        let ctx = SpaceCtx::new(space);
                        space_checks
                            .iter()
                            .map(|(_, c)| match c.checker {
                                Checker::Space(f) => f(&ctx).err().map(|w| format!("n={k} {space:?}: {w}")),
                                Checker::Fixed(_) => unreachable!(),
                            })
                            .collect()
                    })
                    .collect()
            });
            for row in results {
                for ((slot, _), outcome) in space_checks.iter().zip(row) {
                    if failures[*slot].is_none() {
                        failures[*slot] = outcome;
                    }
                }
            }
        }
    }

    let checks = selected
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let (status, spaces) = match c.checker {
                Checker::Space(_) => (
                    match failures[i].take() {
                        Some(witness) => CheckStatus::Fail { witness },
                        None => CheckStatus::Pass { note: None },
                    },
                    spaces_examined,
                ),
                Checker::Fixed(_) if options.finite_only => (CheckStatus::Skipped, 0),
                Checker::Fixed(f) => (
                    match f() {
                        Ok(note) => CheckStatus::Pass {
                            note: (!note.is_empty()).then_some(note),
                        },
                        Err(witness) => CheckStatus::Fail { witness },
                    },
                    1,
                ),
            };
            CheckReport {
                id: c.id,
                statement: c.statement,
                scope: c.scope,
                status,
                spaces,
            }
        })
        .collect();

    Ok(VerificationReport {
        n_max,
        spaces_examined,
        checks,
        wall_time_ms: Some(start.elapsed().as_millis()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts(n_max: usize, ids: Option<&[&str]>) -> VerifyOptions {
        VerifyOptions {
            n_max,
            ids: ids.map(|i| i.iter().map(|s| s.to_string()).collect()),
            workers: Some(2),
            finite_only: false,
        }
    }

    #[test]
    fn all_checks_pass_up_to_three_points() {
        let report = verify(&VerifyOptions { finite_only: true, ..opts(3, None) }).unwrap();
        assert_eq!(report.spaces_examined, 1 + 1 + 4 + 29);
        assert!(report.all_passed(), "{report:#?}");
        assert_eq!(report.get("T28").unwrap().status, CheckStatus::Skipped);
    }

    #[test]
    fn errors() {
        assert_eq!(verify(&opts(3, Some(&["T99"]))), Err(TopoError::UnknownCheckId("T99".into())));
        assert!(matches!(verify(&opts(6, None)), Err(TopoError::GroundTooLarge { .. })));
        assert!(matches!(verify(&opts(0, None)), Err(TopoError::BadSize(_))));
    }

    #[test]
    fn selection_keeps_registry_order() {
        let report = verify(&opts(2, Some(&["T12", "T1", "t12"]))).unwrap();
        let ids: Vec<&str> = report.checks.iter().map(|c| c.id).collect();
        assert_eq!(ids, ["T1", "T12"]);
    }

    #[test]
    fn worker_count_does_not_change_content() {
        let a = verify(&VerifyOptions { workers: Some(1), ..opts(3, Some(&["T2", "T15", "S2"])) }).unwrap();
        let b = verify(&VerifyOptions { workers: Some(4), ..opts(3, Some(&["T2", "T15", "S2"])) }).unwrap();
        assert_eq!(a.masked(), b.masked());
    }
}
