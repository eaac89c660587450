//! Optimal box representations for graphs that contain a clique on `n - k` vertices.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::bits::BitSet;
use crate::cover::clique_residual_split;
use crate::error::Error;
use crate::graph::{Graph, VertexSet};
use crate::interval::{validate_box_rep, BoxRep, IntervalRep};
use crate::nice::for_each_nice_supergraph;

/// Default residual cap used by the command line.
pub const DEFAULT_K_MAX: usize = 12;

/// Result of [`exact_box_large_clique`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactBox {
    pub boxicity: usize,
    pub rep: BoxRep,
    /// Residual vertices outside the large clique.
    pub residual: VertexSet,
    /// Candidates emitted by the nice-supergraph enumeration.
    pub candidates: usize,
}

/// Computes `box(g)` and an optimal representation when `g` has a clique on all
/// but at most `k_max` vertices.
///
/// Every nice interval supergraph relative to the large clique is reduced to the
/// set of non-edges of `g` it separates. Candidates with equal sets keep the first
/// one in stream order and candidates whose set is strictly contained in another
/// are dropped; neither changes the optimum. The smallest `d` for which `d` sets
/// cover all non-edges is then found by branching on the first uncovered non-edge.
pub fn exact_box_large_clique(g: &Graph, k_max: usize) -> Result<ExactBox, Error> {
    let (residual, _) = clique_residual_split(g, k_max).ok_or(Error::ResidualTooLarge { k_max })?;
    if g.is_complete() {
        return Ok(ExactBox { boxicity: 0, rep: BoxRep::empty(g.n()), residual, candidates: 1 });
    }
    let non_edges: Vec<(usize, usize)> = g.non_edges().collect();
    let m = non_edges.len();

    let mut by_mask: BTreeMap<BitSet, (usize, IntervalRep)> = BTreeMap::new();
    let mut idx = 0;
    let candidates = for_each_nice_supergraph(g, &residual, |rep, _| {
        let mut mask = BitSet::new(m);
        for (i, &(u, v)) in non_edges.iter().enumerate() {
            if !rep.adjacent(u, v) {
                mask.insert(i);
            }
        }
        by_mask.entry(mask).or_insert_with(|| (idx, rep.clone()));
        idx += 1;
    })?;

    let mut family: Vec<(usize, BitSet, IntervalRep)> =
        by_mask.into_iter().map(|(mask, (i, rep))| (i, mask, rep)).collect();
    family = maximal_sets(family);
    family.sort_by_key(|(i, _, _)| *i);
    let sets: Vec<BitSet> = family.iter().map(|(_, m, _)| m.clone()).collect();

    let chosen = min_set_cover(m, &sets, residual.len().max(1))
        .ok_or_else(|| Error::InvalidRepresentation(format!("no cover within {} dimensions", residual.len())))?;
    let rep = BoxRep::new(g.n(), chosen.iter().map(|&i| family[i].2.clone()).collect())?;
    match validate_box_rep(g, &rep)? {
        v if v.is_valid() => Ok(ExactBox { boxicity: rep.dimension(), rep, residual, candidates }),
        v => Err(Error::InvalidRepresentation(format!("{:?}", v.witness()))),
    }
}

fn maximal_sets<T>(mut family: Vec<(usize, BitSet, T)>) -> Vec<(usize, BitSet, T)> {
    family.sort_by(|a, b| b.1.count().cmp(&a.1.count()).then(a.0.cmp(&b.0)));
    let mut kept: Vec<(usize, BitSet, T)> = Vec::new();
    for entry in family {
        if !kept.iter().any(|k| entry.1.is_subset(&k.1)) {
            kept.push(entry);
        }
    }
    kept
}

/// Smallest list of indices into `sets` whose union covers `0..universe`,
/// trying sizes `1..=max_size`. Deterministic: branches on the smallest uncovered
/// element and tries the sets containing it in index order.
pub(crate) fn min_set_cover(universe: usize, sets: &[BitSet], max_size: usize) -> Option<Vec<usize>> {
    let all = BitSet::full(universe);
    let mut containing: Vec<Vec<usize>> = alloc::vec![Vec::new(); universe];
    for (i, s) in sets.iter().enumerate() {
        for e in s.iter() {
            containing[e].push(i);
        }
    }
    if universe == 0 {
        return Some(Vec::new());
    }
    let mut picked = Vec::new();
    for size in 1..=max_size {
        if cover_branch(&all, sets, &containing, &BitSet::new(universe), size, &mut picked) {
            return Some(picked);
        }
    }
    None
}

fn cover_branch(
    all: &BitSet,
    sets: &[BitSet],
    containing: &[Vec<usize>],
    covered: &BitSet,
    left: usize,
    picked: &mut Vec<usize>,
) -> bool {
    let Some(e) = covered.first_missing(all) else {
        return true;
    };
    if left == 0 {
        return false;
    }
    for &i in &containing[e] {
        let mut next = covered.clone();
        next.union_with(&sets[i]);
        picked.push(i);
        if cover_branch(all, sets, containing, &next, left - 1, picked) {
            return true;
        }
        picked.pop();
    }
    false
}
