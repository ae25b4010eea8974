use crate::graph::Graph;

/// Maximum-weight independent set by branch and bound over vertex bit-vectors.
///
/// Branches on the lowest remaining candidate, taking it before leaving it out,
/// so optimal sets are met in lexicographic order of their sorted vertex
/// lists. Only strict improvements replace the incumbent, so with positive
/// weights the result is the lexicographically smallest optimum. The bound is
/// the sum of the heaviest vertex of each clique in a greedy clique cover of
/// the candidates.
pub(crate) fn max_weight_independent_set(g: &Graph, weights: &[u64]) -> (u64, u64) {
    debug_assert!(weights.iter().all(|&w| w > 0));
    let adj: Vec<u64> = (0..g.n()).map(|v| g.adjacency(v)).collect();
    let mut search = Search { adj: &adj, weights, best_weight: 0, best: 0 };
    search.branch(g.vertex_mask(), 0, 0);
    (search.best_weight, search.best)
}

struct Search<'a> {
    adj: &'a [u64],
    weights: &'a [u64],
    best_weight: u64,
    best: u64,
}

impl Search<'_> {
    fn branch(&mut self, candidates: u64, chosen: u64, weight: u64) {
        if candidates == 0 {
            if weight > self.best_weight {
                self.best_weight = weight;
                self.best = chosen;
            }
            return;
        }
        if weight + self.clique_cover_bound(candidates) <= self.best_weight {
            return;
        }
        let v = candidates.trailing_zeros() as usize;
        let bit = 1u64 << v;
        self.branch(candidates & !bit & !self.adj[v], chosen | bit, weight + self.weights[v]);
        self.branch(candidates & !bit, chosen, weight);
    }

    fn clique_cover_bound(&self, mut candidates: u64) -> u64 {
        let mut total = 0;
        while candidates != 0 {
            let v = candidates.trailing_zeros() as usize;
            candidates &= !(1 << v);
            let mut heaviest = self.weights[v];
            let mut extend = candidates & self.adj[v];
            while extend != 0 {
                let u = extend.trailing_zeros() as usize;
                candidates &= !(1 << u);
                heaviest = heaviest.max(self.weights[u]);
                extend &= self.adj[u];
            }
            total += heaviest;
        }
        total
    }
}
