use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::Graph;
use crate::error::{Error, Result};

const FRUCHT_LCF: [i64; 12] = [-5, -2, -4, 2, 5, -2, 2, 5, -2, -5, 4, 2];

/// Graphs that can be built by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase", tag = "name", content = "param")]
pub enum NamedGraph {
    /// GP(5,2).
    Petersen,
    /// 12-vertex cubic graph with trivial automorphism group, from its LCF code.
    Frucht,
    /// Mycielskian of the 5-cycle.
    Grotzsch,
    /// GP(6,2).
    Durer,
    /// GP(10,2).
    Dodecahedron,
    Cycle(usize),
    Path(usize),
    Complete(usize),
    /// `K_{1,n}`: a centre joined to `n` leaves.
    Star(usize),
}

impl NamedGraph {
    pub const FIXED: [NamedGraph; 5] =
        [NamedGraph::Petersen, NamedGraph::Frucht, NamedGraph::Grotzsch, NamedGraph::Durer, NamedGraph::Dodecahedron];

    pub const FAMILIES: [&'static str; 4] = ["cycle", "path", "complete", "star"];

    /// Resolves a name (case-insensitive, umlauts optional) and an optional parameter.
    pub fn parse(name: &str, param: Option<usize>) -> Result<Self> {
        let key = name.trim().to_lowercase().replace('ö', "o").replace('ü', "u");
        let need = |p: Option<usize>, min: usize, family: &str| -> Result<usize> {
            match p {
                Some(k) if k >= min => Ok(k),
                Some(k) => Err(Error::InvalidParam {
                    name: family.to_string(),
                    reason: format!("needs a parameter of at least {min}, got {k}"),
                }),
                None => Err(Error::InvalidParam { name: family.to_string(), reason: "missing parameter".to_string() }),
            }
        };
        let fixed = |g: NamedGraph| match param {
            None => Ok(g),
            Some(_) => Err(Error::InvalidParam { name: key.clone(), reason: "takes no parameter".to_string() }),
        };
        match key.as_str() {
            "petersen" => fixed(NamedGraph::Petersen),
            "frucht" => fixed(NamedGraph::Frucht),
            "grotzsch" | "groetzsch" => fixed(NamedGraph::Grotzsch),
            "durer" | "duerer" => fixed(NamedGraph::Durer),
            "dodecahedron" => fixed(NamedGraph::Dodecahedron),
            "cycle" => need(param, 3, "cycle").map(NamedGraph::Cycle),
            "path" => need(param, 2, "path").map(NamedGraph::Path),
            "complete" => need(param, 2, "complete").map(NamedGraph::Complete),
            "star" => need(param, 1, "star").map(NamedGraph::Star),
            _ => Err(Error::UnknownName(name.to_string())),
        }
    }

    pub fn try_build(self) -> Result<Graph> {
        match self {
            NamedGraph::Petersen => generalized_petersen(5, 2),
            NamedGraph::Frucht => frucht(),
            NamedGraph::Grotzsch => {
                let g = mycielskian(&cycle(5)?)?;
                let names = (0..11).map(|v| (v, format!("v{}", v + 1))).collect();
                g.with_names(names)
            }
            NamedGraph::Durer => generalized_petersen(6, 2),
            NamedGraph::Dodecahedron => generalized_petersen(10, 2),
            NamedGraph::Cycle(n) => cycle(n),
            NamedGraph::Path(n) => Graph::new(n, (1..n).map(|i| (i - 1, i))),
            NamedGraph::Complete(n) => Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))),
            NamedGraph::Star(n) => Graph::new(n + 1, (1..=n).map(|leaf| (0, leaf))),
        }
    }

    /// Builds the graph.
    ///
    /// # Panics
    /// For family parameters beyond [`super::MAX_VERTICES`]; use [`Self::try_build`]
    /// when the parameter is untrusted.
    pub fn build(self) -> Graph {
        self.try_build().expect("named graph within size limits")
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGraph::Petersen => write!(f, "petersen"),
            NamedGraph::Frucht => write!(f, "frucht"),
            NamedGraph::Grotzsch => write!(f, "grotzsch"),
            NamedGraph::Durer => write!(f, "durer"),
            NamedGraph::Dodecahedron => write!(f, "dodecahedron"),
            NamedGraph::Cycle(n) => write!(f, "cycle({n})"),
            NamedGraph::Path(n) => write!(f, "path({n})"),
            NamedGraph::Complete(n) => write!(f, "complete({n})"),
            NamedGraph::Star(n) => write!(f, "star({n})"),
        }
    }
}

fn cycle(n: usize) -> Result<Graph> {
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Generalized Petersen graph GP(n, k): outer cycle `u1..un`, inner star polygon
/// `v1..vn` with skip `k`, and spokes `ui vi`. Requires `n >= 3`, `1 <= k < n/2`.
pub fn generalized_petersen(n: usize, k: usize) -> Result<Graph> {
    if n < 3 || k == 0 || 2 * k >= n {
        return Err(Error::InvalidParam {
            name: "generalized_petersen".to_string(),
            reason: format!("need n >= 3 and 1 <= k < n/2, got n={n}, k={k}"),
        });
    }
    let edges = (0..n).flat_map(|i| [(i, (i + 1) % n), (i, n + i), (n + i, n + (i + k) % n)]);
    let g = Graph::new(2 * n, edges)?;
    let names: BTreeMap<usize, String> =
        (0..n).map(|i| (i, format!("u{}", i + 1))).chain((0..n).map(|i| (n + i, format!("v{}", i + 1)))).collect();
    g.with_names(names)
}

/// Mycielskian of `g`: a shadow copy of every vertex joined to the originals'
/// neighbours, plus an apex joined to every shadow. Shadows get ids `n..2n`,
/// the apex `2n`.
pub fn mycielskian(g: &Graph) -> Result<Graph> {
    let n = g.n();
    let edges = g
        .edges()
        .iter()
        .flat_map(|&(u, v)| [(u, v), (u, n + v), (v, n + u)])
        .chain((0..n).map(|i| (n + i, 2 * n)))
        .collect::<Vec<_>>();
    Graph::new(2 * n + 1, edges)
}

fn frucht() -> Result<Graph> {
    let n = FRUCHT_LCF.len();
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    for (i, &jump) in FRUCHT_LCF.iter().enumerate() {
        let j = (i as i64 + jump).rem_euclid(n as i64) as usize;
        if i < j {
            edges.push((i, j));
        }
    }
    let names = (0..n).map(|v| (v, format!("v{}", v + 1))).collect();
    Graph::new(n, edges)?.with_names(names)
}
