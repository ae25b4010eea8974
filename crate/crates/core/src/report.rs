//! Command implementations behind the `weak-iasi` binary.
//!
//! Each command returns a [`RunReport`]: what ran, a summary of the input
//! graph, the results as JSON, and per-phase timings in milliseconds.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Result;
use crate::graph::io::{to_dot, EdgeClass};
use crate::graph::{Graph, NamedGraph};
use crate::oracle::cross_validate;
use crate::solvers::{max_bipartite_subgraph, sparing_number_exact, SparingCertificate};
use crate::sumset::{mono_indexed_edges, verify_iasi, IasiLabeling};
use crate::theorems::check_all;

#[derive(Clone, Debug, Serialize)]
pub struct GraphSummary {
    pub label: String,
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub mean_degree: f64,
}

impl GraphSummary {
    pub fn of(g: &Graph, label: &str) -> Self {
        let degrees = g.degrees();
        GraphSummary {
            label: label.to_string(),
            n: g.n(),
            m: g.m(),
            min_degree: degrees.iter().copied().min().unwrap_or(0),
            max_degree: degrees.iter().copied().max().unwrap_or(0),
            mean_degree: 2.0 * g.m() as f64 / g.n().max(1) as f64,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphSummary>,
    pub results: Value,
    pub timings_ms: BTreeMap<String, f64>,
}

impl RunReport {
    /// JSON with object keys in sorted order.
    pub fn to_value(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

#[derive(Default)]
struct Timer(BTreeMap<String, f64>);

impl Timer {
    fn time<T>(&mut self, phase: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.0.insert(phase.to_string(), start.elapsed().as_secs_f64() * 1e3);
        out
    }
}

/// Sparing number next to the edge-bipartization number, with a mismatch flag.
pub fn cmd_sparing(g: &Graph, label: &str, include_labeling: bool) -> Result<(RunReport, SparingCertificate)> {
    let mut timer = Timer::default();
    let cert = timer.time("sparing", || sparing_number_exact(g))?;
    let bip = timer.time("bipartization", || max_bipartite_subgraph(g))?;
    let mut results = json!({
        "phi": cert.phi,
        "independent_set": cert.independent_set,
        "mono_edges": cert.mono_edges,
        "bipartization_number": bip.bipartization_number(),
        "b": bip.b,
        "removed_edges": bip.removed_edges,
        "mismatch": cert.phi != bip.bipartization_number(),
    });
    if include_labeling {
        results["labeling"] = serde_json::to_value(&cert.labeling)?;
    }
    let report =
        RunReport { command: "sparing".into(), graph: Some(GraphSummary::of(g, label)), results, timings_ms: timer.0 };
    Ok((report, cert))
}

/// DOT rendering with the certificate's mono-indexed edges classed `mono`.
pub fn sparing_dot(g: &Graph, cert: &SparingCertificate) -> String {
    let classes = cert.mono_edges.iter().map(|&e| (e, EdgeClass::Mono)).collect();
    to_dot(g, &classes)
}

pub fn cmd_check(g: &Graph, label: &str) -> Result<RunReport> {
    let mut timer = Timer::default();
    let reports = timer.time("theorems", || check_all(g, label))?;
    Ok(RunReport {
        command: "check-theorems".into(),
        graph: Some(GraphSummary::of(g, label)),
        results: serde_json::to_value(reports)?,
        timings_ms: timer.0,
    })
}

/// Catalogue of the named graphs and parameterised families.
pub fn cmd_named() -> RunReport {
    let fixed: Vec<Value> = NamedGraph::FIXED
        .iter()
        .map(|name| {
            let g = name.build();
            json!({ "name": name.to_string(), "n": g.n(), "m": g.m() })
        })
        .collect();
    let families = json!([
        { "name": "cycle", "param": "n >= 3", "n": "n", "m": "n" },
        { "name": "path", "param": "n >= 2", "n": "n", "m": "n - 1" },
        { "name": "complete", "param": "n >= 2", "n": "n", "m": "n(n-1)/2" },
        { "name": "star", "param": "leaves >= 1", "n": "leaves + 1", "m": "leaves" },
    ]);
    RunReport {
        command: "named".into(),
        graph: None,
        results: json!({ "graphs": fixed, "families": families }),
        timings_ms: BTreeMap::new(),
    }
}

pub fn cmd_oracle(g: &Graph, label: &str) -> Result<RunReport> {
    let mut timer = Timer::default();
    let cv = timer.time("oracle", || cross_validate(g))?;
    Ok(RunReport {
        command: "oracle".into(),
        graph: Some(GraphSummary::of(g, label)),
        results: serde_json::to_value(cv)?,
        timings_ms: timer.0,
    })
}

/// Runs the IASI checks on a user-supplied labeling.
pub fn cmd_verify(g: &Graph, label: &str, labeling: &IasiLabeling) -> Result<RunReport> {
    let mut timer = Timer::default();
    let report = timer.time("verify", || verify_iasi(g, labeling))?;
    let mono = if report.weak { Some(mono_indexed_edges(g, labeling)?) } else { None };
    let mut results = serde_json::to_value(&report)?;
    results["weak_iasi"] = json!(report.is_weak_iasi());
    results["mono_edges"] = json!(mono);
    Ok(RunReport { command: "verify".into(), graph: Some(GraphSummary::of(g, label)), results, timings_ms: timer.0 })
}
