//! Builds every named graph and family member and prints basic invariants.
//!
//!     cargo run --example named_graphs

use weak_iasi::solvers::{chromatic_number, independence_number};
use weak_iasi::NamedGraph;

fn main() -> weak_iasi::Result<()> {
    let mut graphs = NamedGraph::FIXED.to_vec();
    graphs.extend([NamedGraph::Cycle(7), NamedGraph::Path(6), NamedGraph::Complete(5), NamedGraph::Star(4)]);

    println!("{:<14} {:>3} {:>3} {:>4} {:>6} {:>9}", "graph", "n", "m", "chi", "alpha", "triangles");
    for name in graphs {
        let g = name.try_build()?;
        let chi = chromatic_number(&g)?.chi;
        let (alpha, _) = independence_number(&g)?;
        let triangles = if g.is_triangle_free() { "no" } else { "yes" };
        println!("{:<14} {:>3} {:>3} {:>4} {:>6} {:>9}", name.to_string(), g.n(), g.m(), chi, alpha, triangles);
    }

    // names accept common spellings
    let durer = NamedGraph::parse("Dürer", None)?;
    println!("\n`Dürer` parses as {durer}; vertex 0 is {}", durer.build().name(0));
    Ok(())
}
