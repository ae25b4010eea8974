//! Runs the theorem checkers and prints each verdict with its two sides.
//!
//!     cargo run --release --example theorem_checks

use weak_iasi::theorems::{check_all, check_union_formula};
use weak_iasi::{Graph, NamedGraph, TheoremReport};

fn show(label: &str, r: &TheoremReport) {
    let side = |x: Option<i64>| x.map_or("-".to_string(), |v| v.to_string());
    println!("{label:<12} {:<36} {:>4} {:>4}  {:?}", r.theorem, side(r.lhs), side(r.rhs), r.verdict);
}

fn main() -> weak_iasi::Result<()> {
    let bowtie = Graph::new(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])?;
    let graphs = [
        ("cycle(9)", NamedGraph::Cycle(9).build()),
        ("path(7)", NamedGraph::Path(7).build()),
        ("bowtie", bowtie),
        ("petersen", NamedGraph::Petersen.build()),
    ];
    println!("{:<12} {:<36} {:>4} {:>4}  verdict", "graph", "check", "lhs", "rhs");
    for (label, g) in &graphs {
        for r in check_all(g, label)? {
            show(label, &r);
            for part in &r.parts {
                show("", part);
            }
        }
    }

    // Gluing a 3-vertex path and a 4-vertex path at both ends makes a 5-cycle.
    let p3 = NamedGraph::Path(3).build();
    let p4 = NamedGraph::Path(4).build();
    let glued = check_union_formula(&p3, &p4, &[(0, 0), (2, 3)])?;
    println!();
    show("P3 ∪ P4", &glued);
    Ok(())
}
