//! Reads and writes graphs as edge lists, JSON and DOT.
//!
//!     cargo run --example graph_io

use std::collections::BTreeMap;

use weak_iasi::graph::io::{parse_auto, to_dot, to_edge_list, to_json, EdgeClass};
use weak_iasi::solvers::{max_bipartite_subgraph, sparing_number_exact};
use weak_iasi::NamedGraph;

fn main() -> weak_iasi::Result<()> {
    let text = "# house graph\n5 6\n0 1\n1 2\n2 3\n3 0\n2 4\n3 4\n";
    let house = parse_auto(text)?;
    print!("edge list:\n{}", to_edge_list(&house));
    let json = to_json(&house);
    println!("json: {json}");
    assert_eq!(parse_auto(&json)?, house);

    if let Err(e) = parse_auto("2 1\n0 one\n") {
        println!("bad input: {e}");
    }

    // Mono-indexed edges of an optimal labeling and the bipartization edges.
    let g = NamedGraph::Petersen.build();
    let cert = sparing_number_exact(&g)?;
    let bip = max_bipartite_subgraph(&g)?;
    let mut classes = BTreeMap::new();
    for &e in &bip.removed_edges {
        classes.insert(e, EdgeClass::Removed);
    }
    for &e in &cert.mono_edges {
        classes.insert(e, EdgeClass::Mono);
    }
    println!("\n{}", to_dot(&g, &classes));
    Ok(())
}
