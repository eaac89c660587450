//! Unit interval graphs: recognition, synthesis, and decomposition of interval
//! representations into few unit interval representations.

use alloc::vec;
use alloc::vec::Vec;

use crate::diff::{self, Constraint};
use crate::error::Error;
use crate::graph::{Graph, VertexSet};
use crate::interval::{validate_box_rep, BoxRep, Interval, IntervalRep, Verdict};
use crate::oracle;

/// Unit interval representation: vertex `v` is `[num[v], num[v] + denom]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnitIntervalRep {
    denom: i64,
    nums: Vec<i64>,
}

impl UnitIntervalRep {
    pub fn new(denom: i64, nums: Vec<i64>) -> Result<Self, Error> {
        if denom <= 0 {
            return Err(Error::InvalidRepresentation("unit length must be positive".into()));
        }
        Ok(UnitIntervalRep { denom, nums })
    }

    pub fn n(&self) -> usize {
        self.nums.len()
    }

    pub fn denom(&self) -> i64 {
        self.denom
    }

    pub fn nums(&self) -> &[i64] {
        &self.nums
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        (self.nums[u] - self.nums[v]).abs() <= self.denom
    }

    pub fn to_interval_rep(&self) -> IntervalRep {
        IntervalRep::new(self.nums.iter().map(|&x| Interval::new(x, x + self.denom)).collect())
            .expect("positive unit length")
    }

    pub fn realize(&self) -> Graph {
        self.to_interval_rep().realize()
    }
}

/// Ordered list of unit interval representations on a common vertex set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CubeRep {
    n: usize,
    dims: Vec<UnitIntervalRep>,
}

impl CubeRep {
    pub fn new(n: usize, dims: Vec<UnitIntervalRep>) -> Result<Self, Error> {
        if let Some(d) = dims.iter().find(|d| d.n() != n) {
            return Err(Error::VertexMismatch { expected: n, found: d.n() });
        }
        Ok(CubeRep { n, dims })
    }

    pub fn empty(n: usize) -> Self {
        CubeRep { n, dims: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &[UnitIntervalRep] {
        &self.dims
    }

    pub fn extend(&mut self, dims: impl IntoIterator<Item = UnitIntervalRep>) -> Result<(), Error> {
        for d in dims {
            if d.n() != self.n {
                return Err(Error::VertexMismatch { expected: self.n, found: d.n() });
            }
            self.dims.push(d);
        }
        Ok(())
    }

    pub fn to_box_rep(&self) -> BoxRep {
        BoxRep::new(self.n, self.dims.iter().map(UnitIntervalRep::to_interval_rep).collect())
            .expect("dimensions share the vertex set")
    }
}

pub fn validate_cube_rep(g: &Graph, c: &CubeRep) -> Result<Verdict, Error> {
    validate_box_rep(g, &c.to_box_rep())
}

/// `ceil(log2(a))`, with `0` for `a <= 1`.
pub fn ceil_log2(a: usize) -> usize {
    if a <= 1 {
        0
    } else {
        (usize::BITS - (a - 1).leading_zeros()) as usize
    }
}

/// Greedy sweep by right endpoint; returns picks in sweep order.
fn greedy_picks(rep: &IntervalRep) -> Vec<usize> {
    let mut order: Vec<usize> = (0..rep.n()).collect();
    order.sort_by_key(|&v| (rep.get(v).r, v));
    let mut picks: Vec<usize> = Vec::new();
    for v in order {
        if picks.last().is_none_or(|&last| rep.get(v).l > rep.get(last).r) {
            picks.push(v);
        }
    }
    picks
}

/// Maximum independent set of the interval graph, by the right-endpoint sweep.
pub fn greedy_mis_interval(rep: &IntervalRep) -> VertexSet {
    VertexSet::new(greedy_picks(rep))
}

/// A unit interval representation realizing exactly `g`, or `None` when `g` is
/// not a unit interval graph.
///
/// Each component is ordered by three sweeps of lexicographic breadth-first search
/// (the second and third breaking ties by the latest vertex of the previous
/// sweep); the concatenated order must satisfy the umbrella property. Positions
/// then solve the difference system over the order with unit length `2n`.
pub fn unit_interval_rep(g: &Graph) -> Option<UnitIntervalRep> {
    let n = g.n();
    let denom = (2 * n as i64).max(1);
    let mut order = Vec::with_capacity(n);
    for comp in g.components() {
        let sub = g.induced(&comp);
        let identity: Vec<usize> = (0..comp.len()).collect();
        let s1 = lbfs_plus(&sub, &identity);
        let s2 = lbfs_plus(&sub, &s1);
        let s3 = lbfs_plus(&sub, &s2);
        order.extend(s3.into_iter().map(|i| comp[i]));
    }
    if !is_umbrella(g, &order) {
        return None;
    }
    let mut cons = Vec::new();
    for i in 0..n {
        if i + 1 < n {
            cons.push(Constraint { from: order[i + 1], to: order[i], bound: 0 });
        }
        for j in i + 1..n {
            let (u, v) = (order[i], order[j]);
            if g.has_edge(u, v) {
                cons.push(Constraint { from: u, to: v, bound: denom });
            } else {
                cons.push(Constraint { from: v, to: u, bound: -(denom + 1) });
            }
        }
    }
    let nums = diff::solve(n, &cons)?;
    let rep = UnitIntervalRep { denom, nums };
    (rep.realize() == *g).then_some(rep)
}

/// Lexicographic BFS; ties go to the vertex appearing last in `prev`.
fn lbfs_plus(g: &Graph, prev: &[usize]) -> Vec<usize> {
    let n = g.n();
    let mut rank = vec![0; n];
    for (i, &v) in prev.iter().enumerate() {
        rank[v] = i;
    }
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut visited = vec![false; n];
    let mut out = Vec::with_capacity(n);
    for step in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by(|&a, &b| labels[a].cmp(&labels[b]).then(rank[a].cmp(&rank[b])))
            .expect("unvisited vertex remains");
        visited[v] = true;
        out.push(v);
        for w in g.neighbors(v) {
            if !visited[w] {
                labels[w].push(n - step);
            }
        }
    }
    out
}

/// For `i < j < k` in `order`, an edge `ik` forces edges `ij` and `jk`.
fn is_umbrella(g: &Graph, order: &[usize]) -> bool {
    let n = order.len();
    (0..n).all(|i| {
        let reach = (i + 1..n).rev().find(|&k| g.has_edge(order[i], order[k]));
        reach.is_none_or(|k| {
            (i + 1..k).all(|j| g.has_edge(order[i], order[j]) && g.has_edge(order[j], order[k]))
        })
    })
}

/// Binary-index construction: `ceil(log2 a)` unit dimensions for an interval
/// representation with independence number `a >= 2`.
///
/// With greedy clique points `c_1 < ... < c_a`, every interval contains some `c_i`.
/// Vertex `v` gets index `#{i : c_i < l_v}`; if `u` lies entirely left of `v`,
/// `index(u) < index(v)`, so some bit `j` is 0 in `u` and 1 in `v`. In dimension `j`
/// a vertex with bit 0 sits at `rank(r_v)`, one with bit 1 at `D + rank(l_v)`, with
/// `D = 2n` exceeding every rank. Pairs in the same group always meet, and a 0/1
/// pair meets iff `l_v <= r_u`, which holds for every intersecting pair.
fn binary_index_units(rep: &IntervalRep) -> Vec<UnitIntervalRep> {
    let n = rep.n();
    let picks = greedy_picks(rep);
    let points: Vec<i64> = picks.iter().map(|&v| rep.get(v).r).collect();
    let dims = ceil_log2(points.len());
    let denom = (2 * n as i64).max(1);
    let mut values: Vec<i64> = rep.intervals().iter().flat_map(|iv| [iv.l, iv.r]).collect();
    values.sort_unstable();
    values.dedup();
    let rank = |x: i64| values.binary_search(&x).expect("endpoint value") as i64;
    let index: Vec<usize> =
        rep.intervals().iter().map(|iv| points.partition_point(|&c| c < iv.l)).collect();
    (0..dims)
        .map(|j| {
            let nums = (0..n)
                .map(|v| {
                    let iv = rep.get(v);
                    if index[v] >> j & 1 == 1 {
                        denom + rank(iv.l)
                    } else {
                        rank(iv.r)
                    }
                })
                .collect();
            UnitIntervalRep { denom, nums }
        })
        .collect()
}

fn intersects_to(dims: &[UnitIntervalRep], target: &Graph) -> bool {
    let c = CubeRep { n: target.n(), dims: dims.to_vec() };
    matches!(validate_cube_rep(target, &c), Ok(Verdict::Valid))
}

/// Unit interval representations whose intersection is the graph of `rep`, at most
/// `max(1, ceil(log2 alpha_bound))` of them.
///
/// Tries, in order: a single synthesized representation when the independence
/// number is at most 2; the binary-index construction; an exhaustive cube search
/// for graphs within the oracle cap. Every result is validated before it is returned.
pub fn decompose_interval_to_units(rep: &IntervalRep, alpha_bound: usize) -> Result<Vec<UnitIntervalRep>, Error> {
    let n = rep.n();
    let target = rep.realize();
    let alpha = greedy_picks(rep).len();
    let bound = ceil_log2(alpha_bound.max(alpha)).max(1);
    let bound_err = |achieved: Option<Vec<UnitIntervalRep>>| Error::DecompositionBound {
        bound: ceil_log2(alpha_bound).max(1),
        achieved: achieved.as_ref().map(Vec::len),
        fallback: achieved,
    };

    if alpha <= 1 {
        let denom = (2 * n as i64).max(1);
        return Ok(vec![UnitIntervalRep { denom, nums: vec![0; n] }]);
    }
    if alpha <= 2 {
        if let Some(u) = unit_interval_rep(&target) {
            return Ok(vec![u]);
        }
    }
    let built = binary_index_units(rep);
    let built_ok = intersects_to(&built, &target);
    if built_ok && built.len() <= bound && alpha <= alpha_bound.max(1) {
        return Ok(built);
    }
    if n <= oracle::DEFAULT_CAP {
        if let Ok(found) = oracle::oracle_cubicity(&target, bound, oracle::DEFAULT_CAP) {
            if found.cubicity <= ceil_log2(alpha_bound).max(1) {
                let mut dims = found.rep.dims().to_vec();
                if dims.is_empty() {
                    dims.push(UnitIntervalRep { denom: (2 * n as i64).max(1), nums: vec![0; n] });
                }
                return Ok(dims);
            }
        }
    }
    Err(bound_err(built_ok.then_some(built)))
}
