//! Sparing numbers of the named graphs next to their edge-bipartization
//! numbers, with the optimal non-singleton vertex set.
//!
//!     cargo run --release --example sparing_table

use std::time::Instant;

use weak_iasi::solvers::{max_bipartite_subgraph, sparing_number_exact};
use weak_iasi::NamedGraph;

fn main() -> weak_iasi::Result<()> {
    println!("{:<14} {:>3} {:>14} {:>5}  non-singleton vertices", "graph", "phi", "bipartization", "ms");
    for name in NamedGraph::FIXED {
        let g = name.build();
        let start = Instant::now();
        let cert = sparing_number_exact(&g)?;
        let bip = max_bipartite_subgraph(&g)?;
        let ms = start.elapsed().as_secs_f64() * 1e3;
        let flag = if cert.phi != bip.bipartization_number() { " *" } else { "" };
        let set: Vec<String> = cert.independent_set.iter().map(|&v| g.name(v)).collect();
        println!(
            "{:<14} {:>3} {:>14} {:>5.1}  {{{}}}{flag}",
            name.to_string(),
            cert.phi,
            bip.bipartization_number(),
            ms,
            set.join(", ")
        );
    }
    println!("\n* the two numbers differ");
    Ok(())
}
