//! Set labels, sumsets, and weak-IASI verification and construction.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits, edge, Edge, Graph};

/// Non-empty finite set of non-negative integers, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct SetLabel(Vec<u64>);

impl SetLabel {
    pub fn new(elements: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut v: Vec<u64> = elements.into_iter().collect();
        if v.is_empty() {
            return Err(Error::EmptyLabel);
        }
        v.sort_unstable();
        v.dedup();
        Ok(SetLabel(v))
    }

    pub fn singleton(x: u64) -> Self {
        SetLabel(vec![x])
    }

    /// Set-indexing number of the labelled element.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_singleton(&self) -> bool {
        self.0.len() == 1
    }

    pub fn elements(&self) -> &[u64] {
        &self.0
    }
}

impl TryFrom<Vec<u64>> for SetLabel {
    type Error = Error;

    fn try_from(v: Vec<u64>) -> Result<Self> {
        SetLabel::new(v)
    }
}

impl From<SetLabel> for Vec<u64> {
    fn from(s: SetLabel) -> Self {
        s.0
    }
}

impl fmt::Display for SetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

/// `A + B = {a + b : a in A, b in B}`.
pub fn sumset(a: &SetLabel, b: &SetLabel) -> SetLabel {
    let mut out: Vec<u64> = a.0.iter().flat_map(|&x| b.0.iter().map(move |&y| x + y)).collect();
    out.sort_unstable();
    out.dedup();
    SetLabel(out)
}

/// Vertex labels of a graph. Edge labels are induced as endpoint sumsets.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IasiLabeling {
    pub vertex_labels: BTreeMap<usize, SetLabel>,
}

impl IasiLabeling {
    pub fn new(vertex_labels: BTreeMap<usize, SetLabel>) -> Self {
        IasiLabeling { vertex_labels }
    }

    pub fn label(&self, v: usize) -> Result<&SetLabel> {
        self.vertex_labels.get(&v).ok_or(Error::MissingLabel(v))
    }

    /// Induced label of every edge of `g`, in edge order.
    pub fn edge_labels(&self, g: &Graph) -> Result<Vec<(Edge, SetLabel)>> {
        g.edges().iter().map(|&(u, v)| Ok(((u, v), sumset(self.label(u)?, self.label(v)?)))).collect()
    }

    /// Vertices of `g` whose label is a singleton.
    pub fn mono_indexed_vertices(&self, g: &Graph) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for v in 0..g.n() {
            if self.label(v)?.is_singleton() {
                out.push(v);
            }
        }
        Ok(out)
    }
}

/// A weak-condition failure: `|g(uv)| > max(|f(u)|, |f(v)|)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeakViolation {
    pub edge: Edge,
    pub edge_label_size: usize,
    pub max_endpoint_size: usize,
}

/// Result of checking a labeling against the IASI and weak-IASI conditions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IasiReport {
    pub vertex_injective: bool,
    pub vertex_collision: Option<(usize, usize)>,
    pub edge_injective: bool,
    pub edge_collision: Option<(Edge, Edge)>,
    pub weak: bool,
    pub weak_violation: Option<WeakViolation>,
    /// Set-indexing number of every edge, in edge order.
    pub edge_set_indexing: Vec<(Edge, usize)>,
}

impl IasiReport {
    pub fn is_iasi(&self) -> bool {
        self.vertex_injective && self.edge_injective
    }

    pub fn is_weak_iasi(&self) -> bool {
        self.is_iasi() && self.weak
    }
}

pub fn verify_iasi(g: &Graph, labeling: &IasiLabeling) -> Result<IasiReport> {
    let mut seen: HashMap<&SetLabel, usize> = HashMap::new();
    let mut vertex_collision = None;
    for v in 0..g.n() {
        let label = labeling.label(v)?;
        if let Some(&u) = seen.get(label) {
            vertex_collision.get_or_insert((u, v));
        } else {
            seen.insert(label, v);
        }
    }

    let edge_labels = labeling.edge_labels(g)?;
    let mut seen: HashMap<&SetLabel, Edge> = HashMap::new();
    let mut edge_collision = None;
    let mut weak_violation = None;
    for (e, label) in &edge_labels {
        if let Some(&first) = seen.get(label) {
            edge_collision.get_or_insert((first, *e));
        } else {
            seen.insert(label, *e);
        }
        let max_endpoint = labeling.label(e.0)?.len().max(labeling.label(e.1)?.len());
        if label.len() != max_endpoint && weak_violation.is_none() {
            weak_violation =
                Some(WeakViolation { edge: *e, edge_label_size: label.len(), max_endpoint_size: max_endpoint });
        }
    }

    Ok(IasiReport {
        vertex_injective: vertex_collision.is_none(),
        vertex_collision,
        edge_injective: edge_collision.is_none(),
        edge_collision,
        weak: weak_violation.is_none(),
        weak_violation,
        edge_set_indexing: edge_labels.iter().map(|(e, l)| (*e, l.len())).collect(),
    })
}

/// Edges whose induced label is a singleton. The labeling must satisfy the weak condition.
pub fn mono_indexed_edges(g: &Graph, labeling: &IasiLabeling) -> Result<Vec<Edge>> {
    let report = verify_iasi(g, labeling)?;
    if let Some(w) = report.weak_violation {
        return Err(Error::NotWeak(w.edge.0, w.edge.1));
    }
    Ok(report.edge_set_indexing.into_iter().filter(|&(_, size)| size == 1).map(|(e, _)| e).collect())
}

/// First `n` terms of the Mian–Chowla sequence shifted to start at 0: each
/// term is the smallest integer keeping all pairwise sums `a_i + a_j` (`i <= j`)
/// distinct.
pub fn sidon_bases(n: usize) -> Vec<u64> {
    let mut terms: Vec<u64> = Vec::with_capacity(n);
    let mut sums = std::collections::HashSet::new();
    let mut candidate = 0u64;
    while terms.len() < n {
        let fresh: Vec<u64> = terms.iter().map(|&t| t + candidate).chain([2 * candidate]).collect();
        let mut distinct = fresh.clone();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() == fresh.len() && fresh.iter().all(|s| !sums.contains(s)) {
            sums.extend(fresh);
            terms.push(candidate);
        }
        candidate += 1;
    }
    terms
}

/// Labels the vertices in `wide` with two-element sets and every other vertex
/// with a singleton, without checking that `wide` is independent.
///
/// Vertex `v` is built on `c * a_v` where `a` is a Sidon sequence and the
/// spacing `c` starts at `max(n^2, 4)`. The spacing doubles until every vertex
/// label and every induced edge label is distinct.
pub fn pattern_labeling(g: &Graph, wide: u64) -> IasiLabeling {
    let n = g.n();
    let bases = sidon_bases(n);
    let mut spacing = (n as u64 * n as u64).max(4);
    loop {
        let labels: BTreeMap<usize, SetLabel> = (0..n)
            .map(|v| {
                let base = spacing * bases[v];
                let label = if wide >> v & 1 == 1 { SetLabel(vec![base, base + 1]) } else { SetLabel::singleton(base) };
                (v, label)
            })
            .collect();
        let labeling = IasiLabeling::new(labels);
        let report = verify_iasi(g, &labeling).expect("every vertex labelled");
        if report.is_iasi() {
            return labeling;
        }
        spacing = spacing.checked_mul(2).expect("label spacing overflow");
    }
}

/// Weak IASI in which exactly the vertices of `independent` carry non-singleton labels.
pub fn construct_labeling(g: &Graph, independent: &[usize]) -> Result<IasiLabeling> {
    let mut mask = 0u64;
    for &v in independent {
        if v >= g.n() {
            return Err(Error::InvalidEdge { u: v, v, reason: "vertex id out of range" });
        }
        mask |= 1 << v;
    }
    for u in bits(mask) {
        if let Some(w) = bits(g.adjacency(u) & mask).next() {
            let (a, b) = edge(u, w);
            return Err(Error::NotIndependent(a, b));
        }
    }
    Ok(pattern_labeling(g, mask))
}
