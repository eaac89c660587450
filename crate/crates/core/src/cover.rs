//! Minimum vertex cover by bounded branching, and the clique/residual split built on it.

use alloc::vec::Vec;

use crate::bits::BitSet;
use crate::graph::{Graph, VertexSet};

/// A minimum vertex cover of `g` if one of size `<= budget` exists.
///
/// Branches on the lexicographically smallest uncovered edge `(u, v)`, `u < v`,
/// trying `u` before `v`, with iterative deepening on the cover size. The result is
/// therefore the first minimum cover in that branching order.
pub fn min_vertex_cover(g: &Graph, budget: usize) -> Option<VertexSet> {
    let mut chosen = BitSet::new(g.n());
    let mut stack = Vec::new();
    for size in 0..=budget.min(g.n()) {
        if branch(g, size, &mut chosen, &mut stack) {
            return Some(VertexSet::new(stack));
        }
    }
    None
}

fn first_uncovered(g: &Graph, chosen: &BitSet) -> Option<(usize, usize)> {
    (0..g.n())
        .filter(|&u| !chosen.contains(u))
        .find_map(|u| g.neighbors(u).find(|&v| v > u && !chosen.contains(v)).map(|v| (u, v)))
}

fn branch(g: &Graph, left: usize, chosen: &mut BitSet, stack: &mut Vec<usize>) -> bool {
    let Some((u, v)) = first_uncovered(g, chosen) else {
        return true;
    };
    if left == 0 {
        return false;
    }
    for w in [u, v] {
        chosen.insert(w);
        stack.push(w);
        if branch(g, left - 1, chosen, stack) {
            return true;
        }
        stack.pop();
        chosen.remove(w);
    }
    false
}

/// Splits `V` into a residual set `A` and a clique `Q = V \ A` with `|A|` minimum.
///
/// Returns `None` when the minimum `|A|` exceeds `k_max`.
pub fn clique_residual_split(g: &Graph, k_max: usize) -> Option<(VertexSet, VertexSet)> {
    let a = min_vertex_cover(&g.complement(), k_max)?;
    let q = a.complement_in(g.n());
    Some((a, q))
}
