//! Executable checks relating the sparing number to other graph parameters.
//!
//! Each checker computes both sides of a claimed identity exactly and returns a
//! [`TheoremReport`]. A mismatch is a result, not an error: checkers only fail
//! on invalid input or size limits.

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::{decompose_into_cycles, vec_to_mask, Edge, Graph};
use crate::solvers::{
    chromatic_number, independence_number, matching_number, max_bipartite_subgraph, sparing_number_exact,
    vertex_cover_number, SparingCertificate, EXACT_LIMIT,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Fails,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremReport {
    pub theorem: &'static str,
    pub inputs: Vec<String>,
    pub lhs: Option<i64>,
    pub rhs: Option<i64>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unmet_hypothesis: Option<String>,
    pub witness: Value,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<TheoremReport>,
}

impl TheoremReport {
    pub fn compare(theorem: &'static str, lhs: i64, rhs: i64, witness: Value) -> Self {
        TheoremReport {
            theorem,
            inputs: Vec::new(),
            lhs: Some(lhs),
            rhs: Some(rhs),
            verdict: if lhs == rhs { Verdict::Holds } else { Verdict::Fails },
            unmet_hypothesis: None,
            witness,
            parts: Vec::new(),
        }
    }

    pub fn not_applicable(theorem: &'static str, hypothesis: &str, witness: Value) -> Self {
        TheoremReport {
            theorem,
            inputs: Vec::new(),
            lhs: None,
            rhs: None,
            verdict: Verdict::NotApplicable,
            unmet_hypothesis: Some(hypothesis.to_string()),
            witness,
            parts: Vec::new(),
        }
    }

    /// Conjunction of sub-claims: `lhs` counts the parts that hold, `rhs` all parts.
    pub fn all_of(theorem: &'static str, parts: Vec<TheoremReport>, witness: Value) -> Self {
        let holding = parts.iter().filter(|p| p.verdict == Verdict::Holds).count();
        let mut report = TheoremReport::compare(theorem, holding as i64, parts.len() as i64, witness);
        report.parts = parts;
        report
    }

    pub fn with_inputs(mut self, inputs: &[&str]) -> Self {
        self.inputs = inputs.iter().map(|s| s.to_string()).collect();
        self
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    /// The verdict follows from `lhs`/`rhs`, recursively for every part.
    pub fn is_consistent(&self) -> bool {
        let own = match (self.verdict, self.lhs, self.rhs) {
            (Verdict::NotApplicable, None, None) => self.unmet_hypothesis.is_some(),
            (Verdict::Holds, Some(l), Some(r)) => l == r,
            (Verdict::Fails, Some(l), Some(r)) => l != r,
            _ => false,
        };
        own && self.parts.iter().all(TheoremReport::is_consistent)
    }
}

fn phi(g: &Graph) -> Result<SparingCertificate> {
    sparing_number_exact(g)
}

fn certificate_summary(cert: &SparingCertificate) -> Value {
    json!({
        "phi": cert.phi,
        "independent_set": cert.independent_set,
        "mono_edges": cert.mono_edges,
    })
}

/// φ(G) against the vertex count outside the two largest colour classes of an
/// optimal colouring.
pub fn check_chromatic_class_formula(g: &Graph) -> Result<TheoremReport> {
    let coloring = chromatic_number(g)?;
    let mut order: Vec<usize> = (0..coloring.chi).collect();
    order.sort_by_key(|&c| (std::cmp::Reverse(coloring.classes[c].len()), c));
    let largest: usize = order.iter().take(2).map(|&c| coloring.classes[c].len()).sum();
    let cert = phi(g)?;
    Ok(TheoremReport::compare(
        "chromatic-class",
        cert.phi as i64,
        (g.n() - largest) as i64,
        json!({
            "chi": coloring.chi,
            "classes": coloring.classes,
            "largest_classes": &order[..order.len().min(2)],
            "sparing": certificate_summary(&cert),
        }),
    ))
}

const PATH_OR_CYCLE: &str = "graph is a path or a cycle";

/// χ(G) − φ(G) = 2 for paths and cycles.
pub fn check_chi_phi_gap(g: &Graph) -> Result<TheoremReport> {
    if !(g.is_path() || g.is_cycle()) {
        return Ok(TheoremReport::not_applicable("chi-phi-gap", PATH_OR_CYCLE, json!({})));
    }
    let chi = chromatic_number(g)?.chi as i64;
    let phi = phi(g)?.phi as i64;
    Ok(TheoremReport::compare("chi-phi-gap", chi - phi, 2, json!({ "chi": chi, "phi": phi })))
}

/// φ(G) = ⌈n/2⌉ − ν(G) for paths and cycles.
pub fn check_matching_formula(g: &Graph) -> Result<TheoremReport> {
    if !(g.is_path() || g.is_cycle()) {
        return Ok(TheoremReport::not_applicable("matching-formula", PATH_OR_CYCLE, json!({})));
    }
    let nu = matching_number(g)? as i64;
    let half = g.n().div_ceil(2) as i64;
    let phi = phi(g)?.phi as i64;
    Ok(TheoremReport::compare("matching-formula", phi, half - nu, json!({ "n": g.n(), "ceil_half_n": half, "nu": nu })))
}

/// φ(G1 ∪ G2) = φ(G1) + φ(G2) − φ(G1 ∩ G2).
///
/// `overlap` pairs a vertex of `g1` with the vertex of `g2` it is identified
/// with. The union numbers `g1`'s vertices first, then the unshared vertices of
/// `g2` in id order. The intersection keeps the shared edges; its vertices that
/// touch no shared edge contribute nothing, and an edgeless intersection has φ = 0.
pub fn check_union_formula(g1: &Graph, g2: &Graph, overlap: &[(usize, usize)]) -> Result<TheoremReport> {
    let mut to_union = vec![usize::MAX; g2.n()];
    let mut shared_in_g1 = vec![false; g1.n()];
    for &(a, b) in overlap {
        if a >= g1.n() || b >= g2.n() || shared_in_g1[a] || to_union[b] != usize::MAX {
            return Err(Error::BadOverlap(a, b));
        }
        shared_in_g1[a] = true;
        to_union[b] = a;
    }
    let mut next = g1.n();
    for slot in to_union.iter_mut().filter(|s| **s == usize::MAX) {
        *slot = next;
        next += 1;
    }
    if next > EXACT_LIMIT {
        return Err(Error::TooLarge { n: next, limit: EXACT_LIMIT });
    }

    let g2_edges: Vec<Edge> = g2.edges().iter().map(|&(u, v)| crate::graph::edge(to_union[u], to_union[v])).collect();
    let union = Graph::new(
        next,
        g1.edges().iter().copied().chain(g2_edges.iter().copied()).filter({
            let mut seen = std::collections::BTreeSet::new();
            move |e| seen.insert(*e)
        }),
    )?;
    let common: Vec<Edge> = g1.edges().iter().copied().filter(|e| g2_edges.contains(e)).collect();

    let relabel = |cert: &SparingCertificate, ids: &dyn Fn(usize) -> usize| {
        let mut set: Vec<usize> = cert.independent_set.iter().map(|&v| ids(v)).collect();
        set.sort_unstable();
        let mut mono: Vec<Edge> = cert.mono_edges.iter().map(|&(u, v)| crate::graph::edge(ids(u), ids(v))).collect();
        mono.sort_unstable();
        json!({ "phi": cert.phi, "independent_set": set, "mono_edges": mono })
    };

    let c1 = phi(g1)?;
    let c2 = phi(g2)?;
    let cu = phi(&union)?;
    let (phi_common, common_json) = if common.is_empty() {
        (0, json!({ "phi": 0, "edges": [], "note": "no shared edges" }))
    } else {
        let (inter, ids) = Graph::compact(common.iter().copied())?;
        let ci = phi(&inter)?;
        let mut summary = relabel(&ci, &|v| ids[v]);
        summary["edges"] = json!(common);
        (ci.phi, summary)
    };

    let mut union_json = relabel(&cu, &|v| v);
    union_json["n"] = json!(union.n());
    union_json["edges"] = json!(union.edges());
    Ok(TheoremReport::compare(
        "union-formula",
        cu.phi as i64,
        c1.phi as i64 + c2.phi as i64 - phi_common as i64,
        json!({
            "union": union_json,
            "g1": relabel(&c1, &|v| v),
            "g2": relabel(&c2, &|v| to_union[v]),
            "intersection": common_json,
        }),
    )
    .with_inputs(&["G1", "G2"]))
}

/// φ(G) = Σ⌈n_i/2⌉ − ν(G) over the cycles of an edge-disjoint cycle
/// decomposition with at most one even cycle. The sub-report checks
/// ν(G) = Σν(C_i) on the same decomposition.
pub fn check_odd_cycle_decomposition(g: &Graph) -> Result<TheoremReport> {
    let decomposition = decompose_into_cycles(g)?;
    let lengths = decomposition.lengths();
    let nu = matching_number(g)? as i64;
    let sum_ceil: i64 = lengths.iter().map(|&l| l.div_ceil(2) as i64).sum();
    let sum_nu: i64 = lengths.iter().map(|&l| (l / 2) as i64).sum();
    let additivity = TheoremReport::compare(
        "matching-additivity",
        nu,
        sum_nu,
        json!({ "nu": nu, "cycle_matching_numbers": lengths.iter().map(|l| l / 2).collect::<Vec<_>>() }),
    );
    let witness = json!({
        "cycles": decomposition.cycles,
        "lengths": lengths,
        "even_cycles": decomposition.even_count(),
        "sum_ceil_half": sum_ceil,
        "nu": nu,
    });
    let mut report = if decomposition.even_count() <= 1 {
        let phi = phi(g)?.phi as i64;
        TheoremReport::compare("odd-cycle-decomposition", phi, sum_ceil - nu, witness)
    } else {
        TheoremReport::not_applicable(
            "odd-cycle-decomposition",
            "cycle decomposition has at most one even cycle",
            witness,
        )
    };
    report.parts.push(additivity);
    Ok(report)
}

/// Mono-indexed vertex counts against the covering and independence numbers.
///
/// Non-singleton vertices of a weak IASI are independent and any independent
/// set can be made the non-singleton set, so the fewest mono-indexed vertices is
/// `n − α`, the most non-mono-indexed vertices is `α`.
pub fn check_cover_theorems(g: &Graph) -> Result<TheoremReport> {
    let n = g.n() as i64;
    let (alpha, independent) = independence_number(g)?;
    let (beta, cover) = vertex_cover_number(g)?;
    let (alpha, beta) = (alpha as i64, beta as i64);
    let min_mono = n - alpha;
    let cover_mask = vec_to_mask(&cover);
    let cover_valid = g.edges().iter().all(|&(u, v)| cover_mask >> u & 1 == 1 || cover_mask >> v & 1 == 1);
    let independent_valid = g.is_independent(vec_to_mask(&independent));
    let parts = vec![
        TheoremReport::compare("min-mono-vertices-is-cover-number", min_mono, beta, json!({})),
        TheoremReport::compare("min-mono-vertices-is-n-minus-alpha", min_mono, n - alpha, json!({})),
        TheoremReport::compare("max-non-mono-vertices-is-alpha", n - min_mono, alpha, json!({})),
        TheoremReport::compare("alpha-plus-beta", alpha + beta, n, json!({})),
    ];
    Ok(TheoremReport::all_of(
        "cover-independence",
        parts,
        json!({
            "n": n,
            "alpha": alpha,
            "beta": beta,
            "independent_set": independent,
            "vertex_cover": cover,
            "independent_set_valid": independent_valid,
            "vertex_cover_valid": cover_valid,
        }),
    ))
}

/// φ(G) against the number of edges with both ends in the minimum vertex
/// cover returned by the solver.
pub fn check_cover_sparing_formula(g: &Graph) -> Result<TheoremReport> {
    let (_, cover) = vertex_cover_number(g)?;
    let inside = g.induced_edge_count(vec_to_mask(&cover)) as i64;
    let cert = phi(g)?;
    Ok(TheoremReport::compare(
        "cover-induced-edges",
        cert.phi as i64,
        inside,
        json!({ "vertex_cover": cover, "sparing": certificate_summary(&cert) }),
    ))
}

/// φ(G) against the minimum number of edges whose removal leaves `G` bipartite.
pub fn check_bipartization_theorem(g: &Graph) -> Result<TheoremReport> {
    let cert = phi(g)?;
    let bip = max_bipartite_subgraph(g)?;
    Ok(TheoremReport::compare(
        "bipartization",
        cert.phi as i64,
        bip.bipartization_number() as i64,
        json!({ "sparing": cert, "bipartization": bip }),
    ))
}

/// Every single-graph checker. Graphs that are not Eulerian get a
/// not-applicable decomposition report.
pub fn check_all(g: &Graph, label: &str) -> Result<Vec<TheoremReport>> {
    let decomposition = match check_odd_cycle_decomposition(g) {
        Err(Error::NotEulerian { vertex, degree }) => TheoremReport::not_applicable(
            "odd-cycle-decomposition",
            "graph is Eulerian",
            json!({ "odd_vertex": vertex, "degree": degree }),
        ),
        other => other?,
    };
    let reports = vec![
        check_bipartization_theorem(g)?,
        check_chromatic_class_formula(g)?,
        check_chi_phi_gap(g)?,
        check_matching_formula(g)?,
        decomposition,
        check_cover_theorems(g)?,
        check_cover_sparing_formula(g)?,
    ];
    Ok(reports.into_iter().map(|r| r.with_inputs(&[label])).collect())
}
