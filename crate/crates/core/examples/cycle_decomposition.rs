//! Splits Eulerian graphs into edge-disjoint cycles and compares matching
//! numbers with the cycle lengths.
//!
//!     cargo run --example cycle_decomposition

use weak_iasi::graph::decompose_into_cycles;
use weak_iasi::solvers::{matching_number, sparing_number_exact};
use weak_iasi::{Graph, NamedGraph};

fn main() -> weak_iasi::Result<()> {
    let graphs = [
        ("bowtie", Graph::new(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])?),
        ("two squares", Graph::new(7, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (4, 5), (5, 6), (0, 6)])?),
        ("K5", NamedGraph::Complete(5).build()),
        ("K7", NamedGraph::Complete(7).build()),
        ("petersen", NamedGraph::Petersen.build()),
    ];
    for (label, g) in graphs {
        match decompose_into_cycles(&g) {
            Ok(d) => {
                let lengths = d.lengths();
                let per_cycle: usize = lengths.iter().map(|l| l / 2).sum();
                let ceil: usize = lengths.iter().map(|l| l.div_ceil(2)).sum();
                println!(
                    "{label}: cycles {lengths:?} ({} even), nu = {} vs sum of cycle matchings {per_cycle}, phi = {} vs {}",
                    d.even_count(),
                    matching_number(&g)?,
                    sparing_number_exact(&g)?.phi,
                    ceil as i64 - matching_number(&g)? as i64,
                );
            }
            Err(e) => println!("{label}: {e}"),
        }
    }
    Ok(())
}
