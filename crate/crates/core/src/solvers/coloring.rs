use crate::graph::{bits, Graph};

/// Smallest `k` admitting a proper colouring of the component `mask`, with one
/// such colouring written into `colors`.
///
/// Iterative deepening on `k`. Vertices are coloured largest degree first (ties
/// by id), and a vertex may open at most one new colour, which removes colour
/// permutations from the search.
pub(crate) fn color_component(g: &Graph, mask: u64, colors: &mut [usize]) -> usize {
    let mut order: Vec<usize> = bits(mask).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let lower = if order.len() > 1 { 2 } else { 1 };
    for k in lower..=order.len() {
        let mut classes = vec![0u64; k];
        if extend(g, &order, 0, 0, &mut classes, colors) {
            return k;
        }
    }
    unreachable!("n colours always suffice")
}

fn extend(g: &Graph, order: &[usize], i: usize, used: usize, classes: &mut [u64], colors: &mut [usize]) -> bool {
    let Some(&v) = order.get(i) else {
        return true;
    };
    let limit = (used + 1).min(classes.len());
    for c in 0..limit {
        if g.adjacency(v) & classes[c] != 0 {
            continue;
        }
        classes[c] |= 1 << v;
        colors[v] = c;
        if extend(g, order, i + 1, used.max(c + 1), classes, colors) {
            return true;
        }
        classes[c] &= !(1 << v);
    }
    false
}
