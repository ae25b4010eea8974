use rayon::prelude::*;

use crate::graph::{bits, Edge, Graph};

/// Components up to this size are solved by a full Gray-code sweep.
pub const SWEEP_LIMIT: usize = 28;

/// Free vertices above which a sweep is split into parallel chunks.
const PARALLEL_FROM: usize = 16;
const CHUNK_BITS: usize = 6;

/// Best bipartition of one component: side-1 vertices, crossing edge count,
/// and the non-crossing edges in sorted order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Cut {
    pub side: u64,
    pub crossing: usize,
    pub removed: Vec<Edge>,
}

impl Cut {
    /// Larger cut wins; equal cuts prefer the lexicographically smaller removed list.
    fn better_than(&self, other: &Cut) -> bool {
        self.crossing > other.crossing || (self.crossing == other.crossing && self.removed < other.removed)
    }
}

struct Component<'a> {
    g: &'a Graph,
    mask: u64,
    vertices: Vec<usize>,
    edges: Vec<Edge>,
}

impl<'a> Component<'a> {
    fn new(g: &'a Graph, mask: u64) -> Self {
        Component { g, mask, vertices: bits(mask).collect(), edges: g.induced_edges(mask) }
    }

    fn crossing(&self, side: u64) -> usize {
        self.vertices
            .iter()
            .filter(|&&v| side >> v & 1 == 1)
            .map(|&v| (self.g.adjacency(v) & self.mask & !side).count_ones() as usize)
            .sum()
    }

    fn removed(&self, side: u64) -> Vec<Edge> {
        self.edges.iter().copied().filter(|&(u, v)| (side >> u & 1) == (side >> v & 1)).collect()
    }

    fn cut(&self, side: u64) -> Cut {
        Cut { side, crossing: self.crossing(side), removed: self.removed(side) }
    }

    /// Vertex side mask for an assignment of the free vertices (all but the first).
    fn side_of(&self, assignment: u64) -> u64 {
        bits(assignment).fold(0, |side, i| side | 1 << self.vertices[i + 1])
    }

    /// Enumerates all `2^(k-1)` bipartitions with the smallest vertex on side 0.
    fn sweep(&self) -> Cut {
        let free = self.vertices.len() - 1;
        let high = if free > PARALLEL_FROM { CHUNK_BITS } else { 0 };
        let low = free - high;
        let chunks: Vec<Cut> =
            (0..1u64 << high).into_par_iter().map(|chunk| self.sweep_chunk(chunk << low, low)).collect();
        chunks.into_iter().reduce(|a, b| if b.better_than(&a) { b } else { a }).unwrap()
    }

    fn sweep_chunk(&self, fixed: u64, low: usize) -> Cut {
        let mut side = self.side_of(fixed);
        let mut crossing = self.crossing(side);
        let mut best = Cut { side, crossing, removed: self.removed(side) };
        for step in 1..1u64 << low {
            let v = self.vertices[step.trailing_zeros() as usize + 1];
            let adj = self.g.adjacency(v) & self.mask;
            let same = if side >> v & 1 == 1 { side } else { self.mask & !side };
            let same_count = (adj & same).count_ones() as usize;
            let other_count = adj.count_ones() as usize - same_count;
            crossing = crossing + same_count - other_count;
            side ^= 1 << v;
            if crossing >= best.crossing {
                let candidate = Cut { side, crossing, removed: self.removed(side) };
                if candidate.better_than(&best) {
                    best = candidate;
                }
            }
        }
        best
    }

    /// Assigns vertices in id order, bounding by the crossing count so far plus
    /// every edge that still has an unassigned endpoint.
    fn branch_and_bound(&self) -> Cut {
        let k = self.vertices.len();
        let position = |v: usize| self.vertices.binary_search(&v).unwrap();
        // open[i]: edges whose later endpoint sits at position >= i
        let mut open = vec![0usize; k + 1];
        for &(u, v) in &self.edges {
            let last = position(u).max(position(v));
            for slot in open.iter_mut().take(last + 1) {
                *slot += 1;
            }
        }
        let mut best = self.cut(0);
        self.assign(1, 0, 0, &open, &mut best);
        best
    }

    fn assign(&self, i: usize, side: u64, crossing: usize, open: &[usize], best: &mut Cut) {
        if crossing + open[i] < best.crossing {
            return;
        }
        if i == self.vertices.len() {
            let candidate = Cut { side, crossing, removed: self.removed(side) };
            if candidate.better_than(best) {
                *best = candidate;
            }
            return;
        }
        let v = self.vertices[i];
        let earlier = self.g.adjacency(v) & self.mask & ((1u64 << v) - 1);
        let on_one = (earlier & side).count_ones() as usize;
        let on_zero = earlier.count_ones() as usize - on_one;
        self.assign(i + 1, side, crossing + on_one, open, best);
        self.assign(i + 1, side | 1 << v, crossing + on_zero, open, best);
    }
}

/// Exact maximum cut, solved per connected component and combined.
pub(crate) fn max_cut(g: &Graph) -> Cut {
    let mut total = Cut { side: 0, crossing: 0, removed: Vec::new() };
    for mask in g.components() {
        let comp = Component::new(g, mask);
        let cut = if comp.vertices.len() <= SWEEP_LIMIT { comp.sweep() } else { comp.branch_and_bound() };
        total.side |= cut.side;
        total.crossing += cut.crossing;
        total.removed.extend(cut.removed);
    }
    total.removed.sort_unstable();
    total
}

#[cfg(test)]
pub(crate) fn max_cut_branch_and_bound(g: &Graph) -> Cut {
    let mut total = Cut { side: 0, crossing: 0, removed: Vec::new() };
    for mask in g.components() {
        let cut = Component::new(g, mask).branch_and_bound();
        total.side |= cut.side;
        total.crossing += cut.crossing;
        total.removed.extend(cut.removed);
    }
    total.removed.sort_unstable();
    total
}
