//! Maximum bipartite subgraphs: the fewest edges whose removal leaves a graph
//! two-colourable, and an odd cycle when a graph is not bipartite.
//!
//!     cargo run --release --example bipartization

use weak_iasi::graph::Bipartiteness;
use weak_iasi::solvers::max_bipartite_subgraph;
use weak_iasi::NamedGraph;

fn main() -> weak_iasi::Result<()> {
    for name in NamedGraph::FIXED {
        let g = name.build();
        if let Bipartiteness::OddCycle(cycle) = g.is_bipartite() {
            println!("{name}: odd cycle {cycle:?}");
        }
        let cert = max_bipartite_subgraph(&g)?;
        println!("  b = {} of {} edges, remove {:?}", cert.b, g.m(), cert.removed_edges);

        let rest = g.remove_edges(&cert.removed_edges)?;
        let (left, right) = rest.is_bipartite().parts().expect("removal leaves a bipartite graph");
        println!("  sides {left:?} | {right:?}");
    }
    Ok(())
}
