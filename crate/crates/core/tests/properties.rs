mod common;

use proptest::collection::{btree_set, vec};
use proptest::prelude::*;
use weak_iasi::graph::{bits, decompose_into_cycles, low_bits, mask_to_vec, Bipartiteness, NamedGraph};
use weak_iasi::oracle::{pattern_feasible, sparing_oracle};
use weak_iasi::solvers::{matching_number, max_bipartite_subgraph, maximum_matching, sparing_number_exact};
use weak_iasi::sumset::{construct_labeling, mono_indexed_edges, sumset, verify_iasi};
use weak_iasi::theorems::{check_chi_phi_gap, check_matching_formula, check_odd_cycle_decomposition, Verdict};
use weak_iasi::{Graph, SetLabel};

/// Arbitrary graph on `2..=max_n` vertices; isolated vertices are joined to a
/// chosen partner so the result is always valid.
fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| (vec(any::<bool>(), n * (n - 1) / 2), vec(0..n, n))).prop_map(
        |(present, partners)| {
            let n = partners.len();
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if present[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            for (v, &partner) in partners.iter().enumerate() {
                if !edges.iter().any(|&(a, b)| a == v || b == v) {
                    let w = if partner == v { (v + 1) % n } else { partner };
                    edges.push((v.min(w), v.max(w)));
                }
            }
            Graph::new(n, edges).unwrap()
        },
    )
}

fn label() -> impl Strategy<Value = SetLabel> {
    btree_set(0u64..40, 1..6).prop_map(|s| SetLabel::new(s).unwrap())
}

/// Maximal independent set grown greedily from a shuffled vertex order.
fn independent_from(g: &Graph, order: &[usize]) -> Vec<usize> {
    let mut mask = 0u64;
    for &v in order.iter().filter(|&&v| v < g.n()) {
        if g.adjacency(v) & mask == 0 {
            mask |= 1 << v;
        }
    }
    mask_to_vec(mask)
}

proptest! {
    #[test]
    fn sumset_is_commutative(a in label(), b in label()) {
        prop_assert_eq!(sumset(&a, &b), sumset(&b, &a));
    }

    #[test]
    fn sumset_is_associative(a in label(), b in label(), c in label()) {
        prop_assert_eq!(sumset(&sumset(&a, &b), &c), sumset(&a, &sumset(&b, &c)));
    }

    #[test]
    fn zero_is_the_identity(a in label()) {
        prop_assert_eq!(sumset(&a, &SetLabel::singleton(0)), a);
    }

    #[test]
    fn sumset_size_bounds(a in label(), b in label()) {
        let s = sumset(&a, &b).len();
        prop_assert!(s >= a.len().max(b.len()));
        prop_assert!(s >= a.len() + b.len() - 1);
        prop_assert!(s <= a.len() * b.len());
    }

    #[test]
    fn constructed_labeling_is_weak_with_expected_mono_edges(g in graph(12), order in Just((0..12).collect::<Vec<usize>>()).prop_shuffle()) {
        let set = independent_from(&g, &order);
        let labeling = construct_labeling(&g, &set).unwrap();
        let report = verify_iasi(&g, &labeling).unwrap();
        prop_assert!(report.is_weak_iasi(), "{:?}", report);
        let outside = g.vertex_mask() & !set.iter().fold(0u64, |m, &v| m | 1 << v);
        prop_assert_eq!(mono_indexed_edges(&g, &labeling).unwrap(), g.induced_edges(outside));
    }

    #[test]
    fn bipartiteness_witnesses_are_valid(g in graph(12)) {
        match g.is_bipartite() {
            Bipartiteness::Bipartite(side) => {
                prop_assert!(g.edges().iter().all(|&(u, v)| side[u] != side[v]));
            }
            Bipartiteness::OddCycle(cycle) => {
                prop_assert_eq!(cycle.len() % 2, 1);
                let mut seen = cycle.clone();
                seen.sort_unstable();
                seen.dedup();
                prop_assert_eq!(seen.len(), cycle.len());
                for i in 0..cycle.len() {
                    prop_assert!(g.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]));
                }
            }
        }
    }

    #[test]
    fn bipartization_certificate_is_valid(g in graph(12)) {
        let cert = max_bipartite_subgraph(&g).unwrap();
        prop_assert_eq!(cert.b + cert.removed_edges.len(), g.m());
        prop_assert!(g.edges().iter().filter(|e| !cert.removed_edges.contains(e)).all(|&(u, v)| cert.bipartition[u] != cert.bipartition[v]));
        // no cut beats the solver's
        if g.n() <= 10 {
            let best = (0..1u64 << (g.n() - 1))
                .map(|s| g.edges().iter().filter(|&&(u, v)| (s >> u & 1) != (s >> v & 1)).count())
                .max()
                .unwrap();
            prop_assert_eq!(cert.b, best);
        }
    }

    #[test]
    fn eulerian_decompositions_partition_the_edges(g in graph(10)) {
        match decompose_into_cycles(&g) {
            Ok(d) => {
                prop_assert!(g.is_eulerian());
                let mut edges = d.edges();
                edges.sort_unstable();
                prop_assert_eq!(edges, g.edges().to_vec());
                for cycle in &d.cycles {
                    prop_assert!(cycle.len() >= 3);
                }
            }
            Err(_) => prop_assert!(!g.is_eulerian()),
        }
    }

    #[test]
    fn matching_is_a_valid_maximum_matching(g in graph(10)) {
        let m = maximum_matching(&g).unwrap();
        prop_assert_eq!(m.len(), matching_number(&g).unwrap());
        let mut used = 0u64;
        for &(u, v) in &m {
            prop_assert!(g.has_edge(u, v));
            prop_assert_eq!(used & (1 << u | 1 << v), 0);
            used |= 1 << u | 1 << v;
        }
    }

    #[test]
    fn feasible_patterns_are_exactly_independent_sets(g in graph(6)) {
        for wide in 0..=low_bits(g.n()) {
            prop_assert_eq!(pattern_feasible(&g, wide).unwrap(), g.is_independent(wide), "pattern {:?}", mask_to_vec(wide));
        }
    }

    #[test]
    fn deleting_an_edge_never_raises_phi(g in graph(7), pick in any::<prop::sample::Index>()) {
        let removed = g.edges()[pick.index(g.m())];
        let phi = sparing_oracle(&g).unwrap().phi;
        let rest = g.edges().iter().copied().filter(|&e| e != removed);
        if let Ok((smaller, _)) = Graph::compact(rest) {
            prop_assert!(sparing_oracle(&smaller).unwrap().phi <= phi);
        }
    }

    #[test]
    fn solver_is_deterministic(g in graph(14)) {
        prop_assert_eq!(sparing_number_exact(&g).unwrap(), sparing_number_exact(&g).unwrap());
        prop_assert_eq!(max_bipartite_subgraph(&g).unwrap(), max_bipartite_subgraph(&g).unwrap());
    }

    #[test]
    fn certificate_matches_its_labeling(g in graph(14)) {
        let cert = sparing_number_exact(&g).unwrap();
        let report = verify_iasi(&g, &cert.labeling).unwrap();
        prop_assert!(report.is_weak_iasi());
        prop_assert_eq!(&mono_indexed_edges(&g, &cert.labeling).unwrap(), &cert.mono_edges);
        prop_assert_eq!(cert.mono_edges.len(), cert.phi);
    }

    #[test]
    fn weak_labelings_have_independent_wide_vertices(g in graph(6), wide in any::<u64>()) {
        let wide = wide & g.vertex_mask();
        let labeling = weak_iasi::sumset::pattern_labeling(&g, wide);
        if verify_iasi(&g, &labeling).unwrap().is_weak_iasi() {
            let wide_vertices: u64 = bits(g.vertex_mask())
                .filter(|&v| !labeling.label(v).unwrap().is_singleton())
                .fold(0, |m, v| m | 1 << v);
            prop_assert!(g.is_independent(wide_vertices));
        }
    }

    #[test]
    fn chi_phi_gap_on_paths_and_cycles(n in 3usize..=20) {
        for g in [NamedGraph::Cycle(n).build(), NamedGraph::Path(n).build()] {
            prop_assert_eq!(check_chi_phi_gap(&g).unwrap().verdict, Verdict::Holds);
        }
    }

    #[test]
    fn matching_formula_on_cycles_and_even_paths(n in 3usize..=20) {
        prop_assert_eq!(check_matching_formula(&NamedGraph::Cycle(n).build()).unwrap().verdict, Verdict::Holds);
        let path = check_matching_formula(&NamedGraph::Path(n).build()).unwrap();
        // ⌈n/2⌉ − ⌊n/2⌋ is 1 on odd paths while φ(P_n) is 0
        let expected = if n % 2 == 0 { Verdict::Holds } else { Verdict::Fails };
        prop_assert_eq!(path.verdict, expected);
    }

    #[test]
    fn matching_additivity_fails_on_even_flowers(petals in 2usize..=4, half in 2usize..=3) {
        // `petals` cycles of length 2·half sharing vertex 0
        let len = 2 * half;
        let n = 1 + petals * (len - 1);
        let mut edges = Vec::new();
        for p in 0..petals {
            let first = 1 + p * (len - 1);
            let ring: Vec<usize> = std::iter::once(0).chain(first..first + len - 1).collect();
            for i in 0..len {
                edges.push((ring[i].min(ring[(i + 1) % len]), ring[i].max(ring[(i + 1) % len])));
            }
        }
        let g = Graph::new(n, edges).unwrap();
        let report = check_odd_cycle_decomposition(&g).unwrap();
        prop_assert_eq!(report.witness["even_cycles"].as_u64(), Some(petals as u64));
        prop_assert_eq!(report.verdict, Verdict::NotApplicable);
        prop_assert_eq!(report.parts[0].verdict, Verdict::Fails);
    }
}

#[test]
fn oracle_agrees_on_every_small_connected_graph() {
    for n in 2..=5 {
        for g in common::all_connected(n) {
            assert_eq!(sparing_oracle(&g).unwrap(), sparing_number_exact(&g).unwrap(), "{:?}", g.edges());
        }
    }
}
