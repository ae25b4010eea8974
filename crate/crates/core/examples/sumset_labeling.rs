//! Sumsets, set-labelings and the weak IASI check.
//!
//!     cargo run --example sumset_labeling

use std::collections::BTreeMap;

use weak_iasi::sumset::{construct_labeling, mono_indexed_edges, sumset, verify_iasi};
use weak_iasi::{Graph, IasiLabeling, NamedGraph, SetLabel};

fn main() -> weak_iasi::Result<()> {
    let a = SetLabel::new([0, 2])?;
    let b = SetLabel::new([1, 4])?;
    println!("{a} + {b} = {}", sumset(&a, &b));

    // Two adjacent non-singleton labels give an edge label larger than both
    // endpoints, which a weak IASI forbids.
    let triangle = NamedGraph::Complete(3).build();
    let labels: BTreeMap<usize, SetLabel> =
        [(0, SetLabel::new([0, 1])?), (1, SetLabel::new([4, 5])?), (2, SetLabel::singleton(9))].into();
    let report = verify_iasi(&triangle, &IasiLabeling::new(labels))?;
    println!("hand-made triangle labeling: weak = {}, violation = {:?}", report.weak, report.weak_violation);

    // Any independent set can carry the non-singleton labels.
    let g = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])?;
    let labeling = construct_labeling(&g, &[1, 3])?;
    for (v, label) in &labeling.vertex_labels {
        println!("  f({v}) = {label}");
    }
    let report = verify_iasi(&g, &labeling)?;
    println!("C5 labeling: iasi = {}, weak = {}", report.is_iasi(), report.is_weak_iasi());
    println!("mono-indexed edges: {:?}", mono_indexed_edges(&g, &labeling)?);
    println!("{}", serde_json::to_string(&labeling)?);
    Ok(())
}
