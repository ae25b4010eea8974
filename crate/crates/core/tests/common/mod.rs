#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use weak_iasi::Graph;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Random spanning tree plus independent extra edges with probability `p`.
pub fn random_connected(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// `G(n, p)` with every isolated vertex then joined to a random other vertex.
pub fn random_without_isolated(rng: &mut StdRng, n: usize, p: f64, mut edges: Vec<(usize, usize)>) -> Graph {
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    for v in 0..n {
        if !edges.iter().any(|&(a, b)| a == v || b == v) {
            let mut w = rng.gen_range(0..n - 1);
            if w >= v {
                w += 1;
            }
            let e = (v.min(w), v.max(w));
            edges.push(e);
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Greedy independent set over a shuffled vertex order, keeping each eligible
/// vertex with probability `keep`.
pub fn random_independent_set(rng: &mut StdRng, g: &Graph, keep: f64) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.shuffle(rng);
    let mut chosen: Vec<usize> = Vec::new();
    for v in order {
        if chosen.iter().all(|&u| !g.has_edge(u, v)) && rng.gen_bool(keep) {
            chosen.push(v);
        }
    }
    chosen.sort_unstable();
    chosen
}

/// Every labelled connected graph on `n >= 2` vertices.
pub fn all_connected(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0..1u64 << pairs.len())
        .filter_map(|mask| {
            let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
            Graph::new(n, edges).ok().filter(Graph::is_connected)
        })
        .collect()
}

/// Two graphs sharing `k` vertices and a random subgraph on them, with at most
/// `max_union` vertices in the union. Returns `(g1, g2, overlap)`.
pub fn random_overlapping_pair(rng: &mut StdRng, max_union: usize) -> (Graph, Graph, Vec<(usize, usize)>) {
    let total = rng.gen_range(4..=max_union);
    let shared = rng.gen_range(2..total);
    let n1 = rng.gen_range(shared..=total);
    let n2 = total - n1 + shared;

    let mut g1_shared: Vec<usize> = (0..n1).collect();
    g1_shared.shuffle(rng);
    g1_shared.truncate(shared);
    let mut g2_shared: Vec<usize> = (0..n2).collect();
    g2_shared.shuffle(rng);
    g2_shared.truncate(shared);
    let overlap: Vec<(usize, usize)> = g1_shared.iter().copied().zip(g2_shared.iter().copied()).collect();

    let mut h1 = Vec::new();
    let mut h2 = Vec::new();
    for i in 0..overlap.len() {
        for j in i + 1..overlap.len() {
            if rng.gen_bool(0.5) {
                let (a, b) = (overlap[i].0, overlap[j].0);
                let (c, d) = (overlap[i].1, overlap[j].1);
                h1.push((a.min(b), a.max(b)));
                h2.push((c.min(d), c.max(d)));
            }
        }
    }
    let p = rng.gen_range(0.2..0.6);
    let g1 = random_without_isolated(rng, n1, p, h1);
    let g2 = random_without_isolated(rng, n2, p, h2);
    (g1, g2, overlap)
}
