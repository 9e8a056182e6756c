//! Parallel corpus sweeps with deterministic, input-ordered results.

use rayon::prelude::*;
use realclass_core::group::Group;
use realclass_core::verify::Statement;
use serde::Serialize;

use crate::corpus::GroupSpec;
use crate::report::{build_report, to_canonical_json, Report};

/// A group that could not be materialized (cap violations and the like);
/// recorded, never silently dropped.
#[derive(Debug, Clone, Serialize)]
pub struct SkippedGroup {
    pub name: String,
    pub reason: String,
}

/// Maps `f` over the corpus with a bounded worker pool; results come back in
/// input order regardless of scheduling, so output is deterministic.
pub fn par_map_specs<T: Send>(
    specs: &[GroupSpec],
    jobs: usize,
    cap: usize,
    f: impl Fn(&GroupSpec, &Group) -> T + Sync,
) -> (Vec<T>, Vec<SkippedGroup>) {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("worker pool");
    let results: Vec<Result<T, SkippedGroup>> = pool.install(|| {
        specs
            .par_iter()
            .map(|spec| match spec.build(cap) {
                Ok(group) => Ok(f(spec, &group)),
                Err(e) => Err(SkippedGroup {
                    name: spec.name.clone(),
                    reason: e.to_string(),
                }),
            })
            .collect()
    });
    let mut ok = Vec::new();
    let mut skipped = Vec::new();
    for r in results {
        match r {
            Ok(t) => ok.push(t),
            Err(s) => skipped.push(s),
        }
    }
    (ok, skipped)
}

#[derive(Debug, Serialize)]
pub struct VerifyRun {
    pub reports: Vec<Report>,
    pub skipped: Vec<SkippedGroup>,
}

impl VerifyRun {
    pub fn failing_verdicts(&self) -> usize {
        self.reports
            .iter()
            .flat_map(|r| &r.verdicts)
            .filter(|v| !v.passed)
            .count()
    }

    pub fn to_json(&self) -> String {
        to_canonical_json(self)
    }
}

/// Runs the statement suite over the corpus.
pub fn verify_corpus(
    specs: &[GroupSpec],
    selection: &[Statement],
    jobs: usize,
    cap: usize,
) -> VerifyRun {
    let (reports, skipped) =
        par_map_specs(specs, jobs, cap, |spec, g| build_report(spec, g, selection));
    VerifyRun { reports, skipped }
}

/// A 2-closed group whose real prime graph is disconnected. The sweep
/// reports these; it never asserts against them.
#[derive(Debug, Clone, Serialize)]
pub struct HuntFinding {
    pub name: String,
    pub order: u64,
    pub graph: crate::report::GraphReport,
}

#[derive(Debug, Serialize)]
pub struct HuntRun {
    pub findings: Vec<HuntFinding>,
    pub skipped: Vec<SkippedGroup>,
}

impl HuntRun {
    pub fn to_json(&self) -> String {
        to_canonical_json(self)
    }
}

/// Scans every 2-closed corpus group for a disconnected real prime graph.
pub fn hunt_conjecture(specs: &[GroupSpec], jobs: usize, cap: usize) -> HuntRun {
    let (findings, skipped) = par_map_specs(specs, jobs, cap, |spec, g| {
        let classes = realclass_core::structure::conjugacy_classes(g);
        if !realclass_core::structure::sylow_subgroup(g, 2).is_normal_in(g) {
            return None;
        }
        let real = realclass_core::RealClassData::from_classes(g, &classes);
        let graph = realclass_core::PrimeGraph::from_real_data(&real);
        if graph.is_connected() {
            None
        } else {
            Some(HuntFinding {
                name: spec.name.clone(),
                order: g.order(),
                graph: crate::report::graph_report(&graph),
            })
        }
    });
    HuntRun {
        findings: findings.into_iter().flatten().collect(),
        skipped,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::parse_group_lines;

    fn small_corpus() -> Vec<GroupSpec> {
        parse_group_lines(
            "sym3 ; 3 ; (1,2) ; (1,2,3)\n\
             c6 ; 6 ; (1,2,3,4,5,6)\n\
             sym4 ; 4 ; (1,2) ; (1,2,3,4)\n",
            "t",
        )
        .unwrap()
    }

    #[test]
    fn verify_preserves_input_order() {
        let specs = small_corpus();
        let run = verify_corpus(&specs, &Statement::ALL, 2, 10_000);
        let names: Vec<&str> = run.reports.iter().map(|r| r.group.name.as_str()).collect();
        assert_eq!(names, vec!["sym3", "c6", "sym4"]);
        assert_eq!(run.failing_verdicts(), 0);
        assert!(run.skipped.is_empty());
    }

    #[test]
    fn cap_violations_become_skips() {
        let specs = parse_group_lines("big ; 9 ; (1,2) ; (1,2,3,4,5,6,7,8,9)", "t").unwrap();
        let run = verify_corpus(&specs, &Statement::ALL, 1, 100);
        assert!(run.reports.is_empty());
        assert_eq!(run.skipped.len(), 1);
        assert!(run.skipped[0].reason.contains("cap"));
    }

    #[test]
    fn hunt_output_is_identical_across_worker_counts() {
        let specs = small_corpus();
        let one = hunt_conjecture(&specs, 1, 10_000).to_json();
        let four = hunt_conjecture(&specs, 4, 10_000).to_json();
        assert_eq!(one, four);
        let parsed: serde_json::Value = serde_json::from_str(&one).unwrap();
        assert!(parsed["findings"].as_array().unwrap().is_empty());
    }

    #[test]
    fn verify_json_is_identical_across_worker_counts() {
        let specs = small_corpus();
        let one = verify_corpus(&specs, &Statement::ALL, 1, 10_000).to_json();
        let three = verify_corpus(&specs, &Statement::ALL, 3, 10_000).to_json();
        assert_eq!(one, three);
    }
}
