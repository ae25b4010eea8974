//! Simple undirected graphs with bit-vector adjacency.

mod cycles;
pub mod io;
mod named;

use std::collections::BTreeMap;

use crate::error::{Error, Result};

pub use cycles::{decompose_into_cycles, CycleDecomposition};
pub use named::{generalized_petersen, mycielskian, NamedGraph};

/// Largest vertex count a [`Graph`] can hold; adjacency rows are single `u64` words.
pub const MAX_VERTICES: usize = 64;

/// Undirected edge stored with `u < v`.
pub type Edge = (usize, usize);

/// Normalizes an unordered pair so the smaller id comes first.
pub fn edge(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Immutable simple graph on vertices `0..n`.
///
/// Every vertex has at least one neighbour. The edge list is sorted and each
/// adjacency row is a bit-vector that agrees with it exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<u64>,
    names: BTreeMap<usize, String>,
}

impl Graph {
    /// Validates and builds a graph. Edges may be given in either orientation.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { n, limit: MAX_VERTICES });
        }
        let mut adj = vec![0u64; n];
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidEdge { u, v, reason: "vertex id out of range" });
            }
            if u == v {
                return Err(Error::InvalidEdge { u, v, reason: "self-loop" });
            }
            if adj[u] >> v & 1 == 1 {
                return Err(Error::InvalidEdge { u, v, reason: "duplicate edge" });
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
            list.push(edge(u, v));
        }
        if let Some(v) = adj.iter().position(|&row| row == 0) {
            return Err(Error::IsolatedVertex(v));
        }
        list.sort_unstable();
        Ok(Graph { n, edges: list, adj, names: BTreeMap::new() })
    }

    /// Builds a graph from edges over arbitrary ids, dropping ids that touch no
    /// edge. Returns the graph together with the original id of each new vertex.
    pub fn compact(edges: impl IntoIterator<Item = (usize, usize)>) -> Result<(Self, Vec<usize>)> {
        let edges: Vec<Edge> = edges.into_iter().collect();
        let mut ids: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        ids.sort_unstable();
        ids.dedup();
        let index = |x: usize| ids.binary_search(&x).unwrap();
        let g = Graph::new(ids.len(), edges.iter().map(|&(u, v)| (index(u), index(v))))?;
        Ok((g, ids))
    }

    /// Attaches display names to vertices. Unknown ids are rejected.
    pub fn with_names(mut self, names: BTreeMap<usize, String>) -> Result<Self> {
        if let Some(&v) = names.keys().find(|&&v| v >= self.n) {
            return Err(Error::InvalidEdge { u: v, v, reason: "name for unknown vertex" });
        }
        self.names = names;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Sorted edge list, each edge with `u < v`.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn names(&self) -> &BTreeMap<usize, String> {
        &self.names
    }

    /// Display name of `v`, falling back to the numeric id.
    pub fn name(&self, v: usize) -> String {
        self.names.get(&v).cloned().unwrap_or_else(|| v.to_string())
    }

    /// Neighbour bit-vector of `v`.
    pub fn adjacency(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Bit mask with one bit per vertex.
    pub fn vertex_mask(&self) -> u64 {
        low_bits(self.n)
    }

    /// Number of edges with both endpoints in `mask`.
    pub fn induced_edge_count(&self, mask: u64) -> usize {
        bits(mask).map(|v| (self.adj[v] & mask).count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges with both endpoints in `mask`, sorted.
    pub fn induced_edges(&self, mask: u64) -> Vec<Edge> {
        self.edges.iter().copied().filter(|&(u, v)| mask >> u & 1 == 1 && mask >> v & 1 == 1).collect()
    }

    pub fn is_independent(&self, mask: u64) -> bool {
        bits(mask).all(|v| self.adj[v] & mask == 0)
    }

    /// Vertex masks of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen >> start & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0;
                for v in bits(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Connected graph in which every vertex has degree 2.
    pub fn is_cycle(&self) -> bool {
        self.is_connected() && self.adj.iter().all(|row| row.count_ones() == 2)
    }

    /// Connected graph with `n - 1` edges and maximum degree at most 2.
    pub fn is_path(&self) -> bool {
        self.is_connected() && self.m() + 1 == self.n && self.adj.iter().all(|row| row.count_ones() <= 2)
    }

    /// Every vertex has even degree.
    pub fn is_eulerian(&self) -> bool {
        self.adj.iter().all(|row| row.count_ones() % 2 == 0)
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges.iter().all(|&(u, v)| self.adj[u] & self.adj[v] == 0)
    }

    /// New graph without the given edges. Names are kept.
    pub fn remove_edges(&self, removed: &[Edge]) -> Result<Graph> {
        let drop: std::collections::BTreeSet<Edge> = removed.iter().map(|&(u, v)| edge(u, v)).collect();
        let g = Graph::new(self.n, self.edges.iter().copied().filter(|e| !drop.contains(e)))?;
        Ok(Graph { names: self.names.clone(), ..g })
    }

    /// Two-colours the graph, or returns an odd cycle proving it impossible.
    pub fn is_bipartite(&self) -> Bipartiteness {
        let mut color = vec![u8::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut depth = vec![0usize; self.n];
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[u];
                        parent[w] = u;
                        depth[w] = depth[u] + 1;
                        queue.push_back(w);
                    } else if color[w] == color[u] {
                        return Bipartiteness::OddCycle(tree_cycle(&parent, &depth, u, w));
                    }
                }
            }
        }
        Bipartiteness::Bipartite(color)
    }
}

/// Closes the tree paths from `u` and `w` to their lowest common ancestor.
fn tree_cycle(parent: &[usize], depth: &[usize], mut u: usize, mut w: usize) -> Vec<usize> {
    let mut left = vec![u];
    let mut right = vec![w];
    while depth[u] > depth[w] {
        u = parent[u];
        left.push(u);
    }
    while depth[w] > depth[u] {
        w = parent[w];
        right.push(w);
    }
    while u != w {
        u = parent[u];
        w = parent[w];
        left.push(u);
        right.push(w);
    }
    right.pop();
    left.extend(right.into_iter().rev());
    left
}

/// Outcome of a bipartiteness test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartiteness {
    /// Side (0 or 1) of every vertex.
    Bipartite(Vec<u8>),
    /// Vertex sequence of an odd cycle; the last vertex is adjacent to the first.
    OddCycle(Vec<usize>),
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::Bipartite(_))
    }

    /// The two sides as sorted vertex lists.
    pub fn parts(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        match self {
            Bipartiteness::Bipartite(color) => {
                let side = |c| (0..color.len()).filter(|&v| color[v] == c).collect();
                Some((side(0), side(1)))
            }
            Bipartiteness::OddCycle(_) => None,
        }
    }
}

/// Iterates the set bit positions of `mask` in increasing order.
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

pub fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Sorted vertex ids of a mask.
pub fn mask_to_vec(mask: u64) -> Vec<usize> {
    bits(mask).collect()
}

pub fn vec_to_mask(vertices: &[usize]) -> u64 {
    vertices.iter().fold(0, |m, &v| m | 1 << v)
}
