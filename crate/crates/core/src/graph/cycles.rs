use serde::Serialize;

use super::{edge, Edge, Graph};
use crate::error::{Error, Result};

/// Edge-disjoint cycles covering every edge of a graph exactly once.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleDecomposition {
    /// Each cycle as a vertex sequence; the last vertex is adjacent to the first.
    pub cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    pub fn lengths(&self) -> Vec<usize> {
        self.cycles.iter().map(Vec::len).collect()
    }

    pub fn even_count(&self) -> usize {
        self.cycles.iter().filter(|c| c.len() % 2 == 0).count()
    }

    /// Edges of every cycle, concatenated in cycle order.
    pub fn edges(&self) -> Vec<Edge> {
        self.cycles.iter().flat_map(|c| (0..c.len()).map(move |i| edge(c[i], c[(i + 1) % c.len()]))).collect()
    }
}

/// Splits an even-degree graph into edge-disjoint cycles.
///
/// Walks a trail of unused edges from the smallest vertex that still has one,
/// always taking the smallest unused neighbour. As soon as the trail revisits
/// a vertex the closed part is cut off as a cycle and the walk continues from
/// that vertex.
pub fn decompose_into_cycles(g: &Graph) -> Result<CycleDecomposition> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) % 2 == 1) {
        return Err(Error::NotEulerian { vertex: v, degree: g.degree(v) });
    }
    let mut unused: Vec<u64> = (0..g.n()).map(|v| g.adjacency(v)).collect();
    let mut cycles = Vec::new();
    while let Some(start) = unused.iter().position(|&row| row != 0) {
        let mut trail = vec![start];
        let mut position = vec![usize::MAX; g.n()];
        position[start] = 0;
        loop {
            let here = *trail.last().unwrap();
            if unused[here] == 0 {
                debug_assert_eq!(trail.len(), 1);
                break;
            }
            let next = unused[here].trailing_zeros() as usize;
            unused[here] &= !(1 << next);
            unused[next] &= !(1 << here);
            if position[next] == usize::MAX {
                position[next] = trail.len();
                trail.push(next);
                continue;
            }
            let cycle = trail.split_off(position[next]);
            for &v in &cycle[1..] {
                position[v] = usize::MAX;
            }
            trail.push(next);
            cycles.push(cycle);
        }
    }
    Ok(CycleDecomposition { cycles })
}
