//! Exact solvers for desk-scale graphs.
//!
//! The sparing number reduces to an independent-set problem: two non-singleton
//! sets always have a sumset strictly larger than either of them, so in a weak
//! IASI the non-singleton vertices are independent, and every edge between two
//! singleton vertices is mono-indexed. Choosing the non-singleton set `I` to
//! cover as many edges as possible gives
//!
//! ```text
//! phi(G) = |E| - max { sum of deg(v) over v in I : I independent }
//! ```
//!
//! The edge-bipartization value (edges outside a maximum cut) is computed by a
//! separate solver so the two can be compared.

mod coloring;
mod independent;
mod matching;
mod maxcut;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bits, mask_to_vec, Edge, Graph};
use crate::sumset::{construct_labeling, IasiLabeling};

pub use maxcut::SWEEP_LIMIT;

/// Vertex limit for the bit-vector solvers.
pub const EXACT_LIMIT: usize = 32;
/// Vertex limit for the subset-table matching solver.
pub const MATCHING_LIMIT: usize = 24;

fn check_limit(g: &Graph, limit: usize) -> Result<()> {
    if g.n() > limit {
        Err(Error::TooLarge { n: g.n(), limit })
    } else {
        Ok(())
    }
}

/// Optimal weak IASI witness: the non-singleton vertex set, the mono-indexed
/// edges it forces, and a concrete labeling realizing them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SparingCertificate {
    pub phi: usize,
    pub independent_set: Vec<usize>,
    pub mono_edges: Vec<Edge>,
    pub labeling: IasiLabeling,
}

/// Minimum edge set whose removal leaves a bipartite graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BipartizationCertificate {
    pub removed_edges: Vec<Edge>,
    /// Edge count of the maximum bipartite spanning subgraph.
    pub b: usize,
    /// Side (0 or 1) of every vertex in `G - removed_edges`.
    pub bipartition: Vec<u8>,
}

impl BipartizationCertificate {
    pub fn bipartization_number(&self) -> usize {
        self.removed_edges.len()
    }
}

/// Exact sparing number with the lexicographically smallest optimal independent set.
pub fn sparing_number_exact(g: &Graph) -> Result<SparingCertificate> {
    check_limit(g, EXACT_LIMIT)?;
    let weights: Vec<u64> = g.degrees().into_iter().map(|d| d as u64).collect();
    let (covered, wide) = independent::max_weight_independent_set(g, &weights);
    let singles = g.vertex_mask() & !wide;
    let independent_set = mask_to_vec(wide);
    let mono_edges = g.induced_edges(singles);
    debug_assert_eq!(mono_edges.len(), g.m() - covered as usize);
    let labeling = construct_labeling(g, &independent_set)?;
    Ok(SparingCertificate { phi: mono_edges.len(), independent_set, mono_edges, labeling })
}

/// Maximum bipartite spanning subgraph, i.e. a maximum cut.
pub fn max_bipartite_subgraph(g: &Graph) -> Result<BipartizationCertificate> {
    check_limit(g, EXACT_LIMIT)?;
    let cut = maxcut::max_cut(g);
    let bipartition = (0..g.n()).map(|v| (cut.side >> v & 1) as u8).collect();
    Ok(BipartizationCertificate { b: cut.crossing, removed_edges: cut.removed, bipartition })
}

/// `|E| - b(G)`: the fewest edges whose removal makes `g` bipartite.
pub fn bipartization_number(g: &Graph) -> Result<usize> {
    Ok(max_bipartite_subgraph(g)?.bipartization_number())
}

pub fn matching_number(g: &Graph) -> Result<usize> {
    check_limit(g, MATCHING_LIMIT)?;
    Ok(matching::MatchingTable::new(g).size(g.vertex_mask()))
}

/// A maximum matching as a list of edges.
pub fn maximum_matching(g: &Graph) -> Result<Vec<Edge>> {
    check_limit(g, MATCHING_LIMIT)?;
    Ok(matching::MatchingTable::new(g).witness(g.vertex_mask()))
}

/// Optimal proper colouring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coloring {
    pub chi: usize,
    /// Colour of every vertex, in `0..chi`.
    pub colors: Vec<usize>,
    /// Vertices of each colour, indexed by colour.
    pub classes: Vec<Vec<usize>>,
}

/// Exact chromatic number; components are coloured independently.
pub fn chromatic_number(g: &Graph) -> Result<Coloring> {
    check_limit(g, EXACT_LIMIT)?;
    let mut colors = vec![0; g.n()];
    let mut chi = 0;
    for comp in g.components() {
        chi = chi.max(coloring::color_component(g, comp, &mut colors));
    }
    let classes = (0..chi).map(|c| (0..g.n()).filter(|&v| colors[v] == c).collect()).collect();
    Ok(Coloring { chi, colors, classes })
}

/// `(alpha, maximum independent set)`.
pub fn independence_number(g: &Graph) -> Result<(usize, Vec<usize>)> {
    check_limit(g, EXACT_LIMIT)?;
    let (alpha, set) = independent::max_weight_independent_set(g, &vec![1; g.n()]);
    Ok((alpha as usize, mask_to_vec(set)))
}

/// `(beta, minimum vertex cover)`, the complement of the maximum independent set.
pub fn vertex_cover_number(g: &Graph) -> Result<(usize, Vec<usize>)> {
    let (_, independent) = independence_number(g)?;
    let cover: Vec<usize> = bits(g.vertex_mask() & !crate::graph::vec_to_mask(&independent)).collect();
    Ok((cover.len(), cover))
}
