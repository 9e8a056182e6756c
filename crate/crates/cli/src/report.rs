//! Per-group reports and canonical JSON output.
//!
//! JSON is emitted with sorted keys (reports are routed through
//! `serde_json::Value`, whose map is ordered) and documented array orders,
//! so identical inputs produce byte-identical output. Integers exceeding
//! 2⁵³−1 are emitted as decimal strings to survive double-precision
//! consumers.

use realclass_core::group::Group;
use realclass_core::verify::{run_suite, Analysis, Statement, Verdict};
use serde::{Serialize, Serializer};

use crate::corpus::GroupSpec;

const MAX_EXACT_JSON_INT: u64 = (1u64 << 53) - 1;

fn ser_u64<S: Serializer>(v: &u64, s: S) -> Result<S::Ok, S::Error> {
    if *v > MAX_EXACT_JSON_INT {
        s.serialize_str(&v.to_string())
    } else {
        s.serialize_u64(*v)
    }
}

fn ser_u64_vec<S: Serializer>(v: &[u64], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        if *x > MAX_EXACT_JSON_INT {
            seq.serialize_element(&x.to_string())?;
        } else {
            seq.serialize_element(x)?;
        }
    }
    seq.end()
}

#[derive(Debug, Clone, Serialize)]
pub struct GroupEcho {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<String>,
    pub source: String,
    #[serde(serialize_with = "ser_u64")]
    pub order: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Invariants {
    #[serde(serialize_with = "ser_u64")]
    pub order: u64,
    #[serde(serialize_with = "ser_u64")]
    pub center_order: u64,
    pub solvable: bool,
    pub two_closed: bool,
    pub two_nilpotent: bool,
    /// Order of the smallest normal subgroup of odd index.
    #[serde(serialize_with = "ser_u64")]
    pub odd_index_residual_order: u64,
    /// Order of the largest normal odd-order subgroup.
    #[serde(serialize_with = "ser_u64")]
    pub odd_core_order: u64,
    /// Order of the largest normal 2-subgroup.
    #[serde(serialize_with = "ser_u64")]
    pub two_core_order: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphReport {
    #[serde(serialize_with = "ser_u64_vec")]
    pub vertices: Vec<u64>,
    /// Pairs (p, q) with p < q, lexicographic.
    pub edges: Vec<(u64, u64)>,
    /// Component containing 2 first, then by smallest member.
    pub components: Vec<Vec<u64>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub group: GroupEcho,
    pub invariants: Invariants,
    #[serde(serialize_with = "ser_u64_vec")]
    pub real_sizes: Vec<u64>,
    pub graph: GraphReport,
    pub verdicts: Vec<Verdict>,
}

impl Report {
    /// True when no selected statement failed.
    pub fn clean(&self) -> bool {
        self.verdicts.iter().all(|v| v.passed)
    }
}

/// Runs the analysis and the selected statement checks for one group.
pub fn build_report(spec: &GroupSpec, g: &Group, selection: &[Statement]) -> Report {
    let analysis = Analysis::new(g);
    let verdicts = run_suite(g, &analysis, selection);
    build_report_with(spec, g, &analysis, verdicts)
}

pub fn build_report_with(
    spec: &GroupSpec,
    g: &Group,
    analysis: &Analysis,
    verdicts: Vec<Verdict>,
) -> Report {
    let center = realclass_core::structure::center(g);
    let two_core = realclass_core::structure::p_core(g, &analysis.classes, 2);
    Report {
        group: GroupEcho {
            name: spec.name.clone(),
            degree: spec.degree,
            generators: spec.generator_strings.clone(),
            source: spec.source.clone(),
            order: g.order(),
        },
        invariants: Invariants {
            order: g.order(),
            center_order: center.order(),
            solvable: analysis.solvable(g),
            two_closed: analysis.two_closed(g),
            two_nilpotent: analysis.two_nilpotent(g),
            odd_index_residual_order: analysis.two_prime_residual(g).order(),
            odd_core_order: analysis.two_prime_core(g).order(),
            two_core_order: two_core.order(),
        },
        real_sizes: analysis.real.sizes.clone(),
        graph: graph_report(&analysis.graph),
        verdicts,
    }
}

pub fn graph_report(graph: &realclass_core::PrimeGraph) -> GraphReport {
    GraphReport {
        vertices: graph.vertices.clone(),
        edges: graph.edges.clone(),
        components: graph.components.clone(),
    }
}

/// Writes one report as canonical JSON.
pub fn emit_report(report: &Report, path: &std::path::Path) -> std::io::Result<()> {
    std::fs::write(path, to_canonical_json(report))
}

/// Canonical JSON: sorted keys, trailing newline.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("reports serialize");
    let mut s = serde_json::to_string_pretty(&v).expect("values print");
    s.push('\n');
    s
}
