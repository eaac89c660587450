//! Difference constraint systems `x[v] - x[u] <= w` by Bellman-Ford.

use alloc::vec;
use alloc::vec::Vec;

/// Constraint `x[to] - x[from] <= bound`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Constraint {
    pub from: usize,
    pub to: usize,
    pub bound: i64,
}

/// A feasible assignment shifted so its minimum is 0, or `None` if infeasible.
pub(crate) fn solve(n: usize, constraints: &[Constraint]) -> Option<Vec<i64>> {
    // implicit source with 0-weight edges to every variable
    let mut x = vec![0i64; n];
    for _ in 0..=n {
        let mut changed = false;
        for c in constraints {
            let cand = x[c.from] + c.bound;
            if cand < x[c.to] {
                x[c.to] = cand;
                changed = true;
            }
        }
        if !changed {
            let min = x.iter().copied().min().unwrap_or(0);
            x.iter_mut().for_each(|v| *v -= min);
            return Some(x);
        }
    }
    None
}
