//! Brute force ground truth for tiny inputs.
//!
//! Box and cube searches enumerate every vertex ordering. For an ordering, each
//! vertex is stretched from its position to its farthest neighbor (for unit
//! interval graphs the reach is also made nondecreasing); this gives the minimal
//! interval (unit interval) supergraph of `g` with that left-endpoint order, and
//! every interval (unit interval) supergraph of `g` contains one of these. The
//! search then looks for the fewest such supergraphs that separate every non-edge.

use alloc::vec;
use alloc::vec::Vec;

use crate::diff::{self, Constraint};
use crate::error::Error;
use crate::graph::Graph;
use crate::interval::{BoxRep, Interval, IntervalRep};
use crate::reductions::{BipartiteGraph, Poset};
use crate::unit::{CubeRep, UnitIntervalRep};

/// Default vertex cap for the box and cube oracles.
pub const DEFAULT_CAP: usize = 8;
/// Largest cap the box and cube oracles accept.
pub const MAX_CAP: usize = 10;
/// Edge cap for the chain cover oracle.
pub const CHAIN_EDGE_CAP: usize = 20;
/// Element cap for the poset dimension oracle.
pub const POSET_CAP: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleBox {
    pub boxicity: usize,
    pub rep: BoxRep,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleCube {
    pub cubicity: usize,
    pub rep: CubeRep,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Interval,
    Unit,
}

fn check_cap(g: &Graph, cap: usize) -> Result<(), Error> {
    let cap = cap.min(MAX_CAP);
    if g.n() > cap {
        return Err(Error::SizeCap { what: "graph", size: g.n(), cap });
    }
    Ok(())
}

/// Exact boxicity and an optimal representation, for `g.n() <= cap`.
pub fn oracle_boxicity(g: &Graph, max_dim: usize, cap: usize) -> Result<OracleBox, Error> {
    check_cap(g, cap)?;
    if g.is_complete() {
        return Ok(OracleBox { boxicity: 0, rep: BoxRep::empty(g.n()) });
    }
    let chosen = search(g, Kind::Interval, max_dim)?;
    let dims = chosen
        .iter()
        .map(|order| {
            let reach = reaches(g, order, Kind::Interval);
            let mut ivs = vec![Interval::point(0); g.n()];
            for (i, &v) in order.iter().enumerate() {
                ivs[v] = Interval::new(i as i64, reach[i] as i64);
            }
            IntervalRep::new(ivs).expect("reach is at least the position")
        })
        .collect();
    let rep = BoxRep::new(g.n(), dims)?;
    Ok(OracleBox { boxicity: rep.dimension(), rep })
}

/// Exact cubicity and an optimal representation, for `g.n() <= cap`.
pub fn oracle_cubicity(g: &Graph, max_dim: usize, cap: usize) -> Result<OracleCube, Error> {
    check_cap(g, cap)?;
    if g.is_complete() {
        return Ok(OracleCube { cubicity: 0, rep: CubeRep::empty(g.n()) });
    }
    let chosen = search(g, Kind::Unit, max_dim)?;
    let dims = chosen
        .iter()
        .map(|order| unit_from_order(g.n(), order, &reaches(g, order, Kind::Unit)))
        .collect();
    let rep = CubeRep::new(g.n(), dims)?;
    Ok(OracleCube { cubicity: rep.dimension(), rep })
}

/// Farthest position each vertex must reach to keep its `g`-edges to later vertices.
fn reaches(g: &Graph, order: &[usize], kind: Kind) -> Vec<usize> {
    let n = order.len();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut reach: Vec<usize> = order.iter().enumerate().map(|(i, &v)| g.neighbors(v).map(|w| pos[w]).fold(i, usize::max)).collect();
    if kind == Kind::Unit {
        for i in 1..n {
            reach[i] = reach[i].max(reach[i - 1]);
        }
    }
    reach
}

fn separation_mask(order: &[usize], reach: &[usize], pair_bit: &[Vec<u8>]) -> u64 {
    let mut mask = 0u64;
    for i in 0..order.len() {
        for j in reach[i] + 1..order.len() {
            let b = pair_bit[order[i]][order[j]];
            if b != u8::MAX {
                mask |= 1 << b;
            }
        }
    }
    mask
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Orders whose minimal supergraphs form a smallest separating family.
fn search(g: &Graph, kind: Kind, max_dim: usize) -> Result<Vec<Vec<usize>>, Error> {
    let n = g.n();
    let mut pair_bit = vec![vec![u8::MAX; n]; n];
    let mut m = 0u8;
    for (u, v) in g.non_edges() {
        pair_bit[u][v] = m;
        pair_bit[v][u] = m;
        m += 1;
    }
    let universe: u64 = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };

    let mut masks = Vec::new();
    let mut order: Vec<usize> = (0..n).collect();
    loop {
        let reach = reaches(g, &order, kind);
        masks.push(separation_mask(&order, &reach, &pair_bit));
        if !next_permutation(&mut order) {
            break;
        }
    }
    masks.sort_unstable_by(|a, b| b.count_ones().cmp(&a.count_ones()).then(a.cmp(b)));
    masks.dedup();
    let mut maximal: Vec<u64> = Vec::new();
    for m in masks {
        if m != 0 && !maximal.iter().any(|&k| m & !k == 0) {
            maximal.push(m);
        }
    }

    let chosen = (1..=max_dim)
        .find_map(|d| {
            let mut picked = Vec::new();
            cover(universe, 0, &maximal, d, &mut picked).then_some(picked)
        })
        .ok_or(Error::DimensionExceeded { max_dim })?;

    // recover an ordering for each chosen mask
    let mut found: Vec<Option<Vec<usize>>> = vec![None; chosen.len()];
    let mut order: Vec<usize> = (0..n).collect();
    loop {
        let mask = separation_mask(&order, &reaches(g, &order, kind), &pair_bit);
        for (slot, &c) in found.iter_mut().zip(&chosen) {
            if slot.is_none() && mask == c {
                *slot = Some(order.clone());
            }
        }
        if found.iter().all(Option::is_some) || !next_permutation(&mut order) {
            break;
        }
    }
    Ok(found.into_iter().map(|o| o.expect("mask came from an ordering")).collect())
}

fn cover(universe: u64, covered: u64, sets: &[u64], left: usize, picked: &mut Vec<u64>) -> bool {
    let missing = universe & !covered;
    if missing == 0 {
        return true;
    }
    if left == 0 {
        return false;
    }
    let bit = missing & missing.wrapping_neg();
    for &s in sets.iter().filter(|&&s| s & bit != 0) {
        picked.push(s);
        if cover(universe, covered | s, sets, left - 1, picked) {
            return true;
        }
        picked.pop();
    }
    false
}

/// Unit positions for an ordering with nondecreasing reach.
fn unit_from_order(n: usize, order: &[usize], reach: &[usize]) -> UnitIntervalRep {
    let denom = (2 * n as i64).max(1);
    let mut cons = Vec::new();
    for i in 0..n {
        if i + 1 < n {
            cons.push(Constraint { from: order[i + 1], to: order[i], bound: 0 });
        }
        for j in i + 1..n {
            if j <= reach[i] {
                cons.push(Constraint { from: order[i], to: order[j], bound: denom });
            } else {
                cons.push(Constraint { from: order[j], to: order[i], bound: -(denom + 1) });
            }
        }
    }
    let nums = diff::solve(n, &cons).expect("umbrella orderings have unit representations");
    UnitIntervalRep::new(denom, nums).expect("positive unit")
}

/// Minimum number of chain subgraphs covering the edges of `b`.
pub fn oracle_chain_cover(b: &BipartiteGraph) -> Result<usize, Error> {
    let edges: Vec<(usize, usize)> = b.oriented_edges().collect();
    let m = edges.len();
    if m > CHAIN_EDGE_CAP {
        return Err(Error::SizeCap { what: "bipartite edge set", size: m, cap: CHAIN_EDGE_CAP });
    }
    if m == 0 {
        return Ok(0);
    }
    let n = b.graph().n();
    let mut chains = Vec::new();
    let mut nbr = vec![0u64; n];
    for subset in 1u32..1 << m {
        nbr.iter_mut().for_each(|x| *x = 0);
        for (i, &(x, y)) in edges.iter().enumerate() {
            if subset >> i & 1 == 1 {
                nbr[x] |= 1 << y;
            }
        }
        let nested = nbr.iter().enumerate().all(|(i, &a)| nbr[i + 1..].iter().all(|&c| a & !c == 0 || c & !a == 0));
        if nested {
            chains.push(subset as u64);
        }
    }
    chains.sort_unstable_by_key(|s| core::cmp::Reverse(s.count_ones()));
    let mut maximal: Vec<u64> = Vec::new();
    for s in chains {
        if !maximal.iter().any(|&k| s & !k == 0) {
            maximal.push(s);
        }
    }
    let universe = (1u64 << m) - 1;
    Ok((1..=m).find(|&d| cover(universe, 0, &maximal, d, &mut Vec::new())).expect("single edges are chains"))
}

/// Poset dimension: fewest linear extensions whose intersection is the order.
pub fn oracle_poset_dimension(p: &Poset) -> Result<usize, Error> {
    let n = p.n();
    if n > POSET_CAP {
        return Err(Error::SizeCap { what: "poset", size: n, cap: POSET_CAP });
    }
    if n == 0 {
        return Ok(0);
    }
    // ordered incomparable pairs (x, y): some extension must put x below y
    let mut pair_bit = vec![vec![u8::MAX; n]; n];
    let mut m = 0u8;
    for (x, row) in pair_bit.iter_mut().enumerate() {
        for (y, bit) in row.iter_mut().enumerate() {
            if x != y && !p.comparable(x, y) {
                *bit = m;
                m += 1;
            }
        }
    }
    if m == 0 {
        return Ok(1);
    }
    let mut masks = Vec::new();
    let mut ext = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    linear_extensions(p, &mut ext, &mut placed, &mut |ext: &[usize]| {
        let mut mask = 0u64;
        for i in 0..n {
            for j in i + 1..n {
                let b = pair_bit[ext[i]][ext[j]];
                if b != u8::MAX {
                    mask |= 1 << b;
                }
            }
        }
        masks.push(mask);
    });
    masks.sort_unstable_by(|a, b| b.count_ones().cmp(&a.count_ones()).then(a.cmp(b)));
    masks.dedup();
    let mut maximal: Vec<u64> = Vec::new();
    for s in masks {
        if !maximal.iter().any(|&k| s & !k == 0) {
            maximal.push(s);
        }
    }
    let universe = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    Ok((1..).find(|&d| cover(universe, 0, &maximal, d, &mut Vec::new())).expect("finite"))
}

fn linear_extensions<F: FnMut(&[usize])>(p: &Poset, ext: &mut Vec<usize>, placed: &mut [bool], visit: &mut F) {
    let n = p.n();
    if ext.len() == n {
        visit(ext);
        return;
    }
    for v in 0..n {
        if !placed[v] && (0..n).all(|u| placed[u] || u == v || !p.less(u, v)) {
            placed[v] = true;
            ext.push(v);
            linear_extensions(p, ext, placed, visit);
            ext.pop();
            placed[v] = false;
        }
    }
}
