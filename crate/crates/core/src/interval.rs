//! Interval and box representations over integer endpoints.

use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::graph::{Graph, VertexSet};

/// Closed interval `[l, r]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    pub l: i64,
    pub r: i64,
}

impl Interval {
    pub const fn new(l: i64, r: i64) -> Self {
        Interval { l, r }
    }

    pub const fn point(p: i64) -> Self {
        Interval { l: p, r: p }
    }

    #[inline]
    pub fn intersects(&self, other: &Interval) -> bool {
        self.l.max(other.l) <= self.r.min(other.r)
    }

    #[inline]
    pub fn contains(&self, x: i64) -> bool {
        self.l <= x && x <= self.r
    }
}

/// One interval per vertex `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntervalRep(Vec<Interval>);

impl IntervalRep {
    pub fn new(intervals: Vec<Interval>) -> Result<Self, Error> {
        if let Some(v) = intervals.iter().position(|iv| iv.l > iv.r) {
            return Err(Error::MalformedInterval { vertex: v });
        }
        Ok(IntervalRep(intervals))
    }

    pub fn from_pairs(pairs: &[(i64, i64)]) -> Result<Self, Error> {
        Self::new(pairs.iter().map(|&(l, r)| Interval::new(l, r)).collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.0
    }

    #[inline]
    pub fn get(&self, v: usize) -> Interval {
        self.0[v]
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.0[u].intersects(&self.0[v])
    }

    /// The intersection graph of the intervals.
    pub fn realize(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if self.adjacent(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Smallest left and largest right endpoint, `None` when empty.
    pub fn span(&self) -> Option<Interval> {
        let l = self.0.iter().map(|iv| iv.l).min()?;
        let r = self.0.iter().map(|iv| iv.r).max()?;
        Some(Interval::new(l, r))
    }

    /// Common intersection of the intervals in `set`, `None` if empty.
    pub fn helly_region(&self, set: &[usize]) -> Option<Interval> {
        let l = set.iter().map(|&v| self.0[v].l).max()?;
        let r = set.iter().map(|&v| self.0[v].r).min()?;
        (l <= r).then_some(Interval::new(l, r))
    }

    /// Rescales to pairwise distinct endpoints while keeping every intersection.
    ///
    /// Endpoints are multiplied by `2(n + 1)`; within a group of equal endpoints,
    /// left endpoints get the smaller offsets so touching intervals keep touching.
    pub fn perturb_distinct(&self) -> IntervalRep {
        let n = self.n();
        let scale = 2 * (n as i64 + 1);
        // (value, side: 0 = left, 1 = right, vertex)
        let mut tokens: Vec<(i64, u8, usize)> = Vec::with_capacity(2 * n);
        for (v, iv) in self.0.iter().enumerate() {
            tokens.push((iv.l, 0, v));
            tokens.push((iv.r, 1, v));
        }
        tokens.sort_unstable();
        let mut out = self.0.clone();
        let mut offset = 0;
        for i in 0..tokens.len() {
            let (value, side, v) = tokens[i];
            offset = if i > 0 && tokens[i - 1].0 == value { offset + 1 } else { 0 };
            let x = value * scale + offset;
            if side == 0 {
                out[v].l = x;
            } else {
                out[v].r = x;
            }
        }
        IntervalRep(out)
    }

    fn endpoints_distinct(&self, set: impl Iterator<Item = usize>) -> bool {
        let mut pts: Vec<i64> = set.flat_map(|v| [self.0[v].l, self.0[v].r]).collect();
        let len = pts.len();
        pts.sort_unstable();
        pts.dedup();
        pts.len() == len
    }
}

/// Ordered list of interval representations on a common vertex set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoxRep {
    n: usize,
    dims: Vec<IntervalRep>,
}

impl BoxRep {
    pub fn new(n: usize, dims: Vec<IntervalRep>) -> Result<Self, Error> {
        if let Some(d) = dims.iter().find(|d| d.n() != n) {
            return Err(Error::VertexMismatch { expected: n, found: d.n() });
        }
        Ok(BoxRep { n, dims })
    }

    pub fn empty(n: usize) -> Self {
        BoxRep { n, dims: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &[IntervalRep] {
        &self.dims
    }

    pub fn push(&mut self, dim: IntervalRep) -> Result<(), Error> {
        if dim.n() != self.n {
            return Err(Error::VertexMismatch { expected: self.n, found: dim.n() });
        }
        self.dims.push(dim);
        Ok(())
    }

    pub fn extend(&mut self, other: BoxRep) -> Result<(), Error> {
        if other.n != self.n {
            return Err(Error::VertexMismatch { expected: self.n, found: other.n });
        }
        self.dims.extend(other.dims);
        Ok(())
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.dims.iter().all(|d| d.adjacent(u, v))
    }

    /// Intersection of the realized graphs (complete when dimension is 0).
    pub fn realize(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.adjacent(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Edge of the graph missing from dimension `dim`.
    MissingEdge { u: usize, v: usize, dim: usize },
    /// Non-edge of the graph present in every dimension.
    SpuriousPair { u: usize, v: usize },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Witness::MissingEdge { u, v, dim } => write!(f, "missing-edge {u} {v} dim {dim}"),
            Witness::SpuriousPair { u, v } => write!(f, "spurious-pair {u} {v}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid(Witness),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }

    pub fn witness(&self) -> Option<Witness> {
        match self {
            Verdict::Valid => None,
            Verdict::Invalid(w) => Some(*w),
        }
    }
}

/// Checks that the intersection of `b`'s dimensions is exactly `g`.
///
/// On failure reports the lexicographically least failing pair.
pub fn validate_box_rep(g: &Graph, b: &BoxRep) -> Result<Verdict, Error> {
    if g.n() != b.n() {
        return Err(Error::VertexMismatch { expected: g.n(), found: b.n() });
    }
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if g.has_edge(u, v) {
                if let Some(dim) = b.dims().iter().position(|d| !d.adjacent(u, v)) {
                    return Ok(Verdict::Invalid(Witness::MissingEdge { u, v, dim }));
                }
            } else if b.adjacent(u, v) {
                return Ok(Verdict::Invalid(Witness::SpuriousPair { u, v }));
            }
        }
    }
    Ok(Verdict::Valid)
}

/// Doubles every dimension so that `a` becomes a clique while every other relation is kept.
///
/// For a dimension with global extremes `lo`, `hi`, the first copy stretches each
/// `a`-interval left to `lo`, the second stretches it right to `hi`.
pub fn saturate_to_clique(b: &BoxRep, a: &VertexSet) -> Result<BoxRep, Error> {
    if b.dimension() == 0 {
        return Err(Error::EmptyBoxRep);
    }
    a.check(b.n())?;
    let mut dims = Vec::with_capacity(2 * b.dimension());
    for dim in b.dims() {
        let Some(span) = dim.span() else {
            dims.push(dim.clone());
            dims.push(dim.clone());
            continue;
        };
        let mut left = dim.0.clone();
        let mut right = dim.0.clone();
        for v in a.iter() {
            left[v].l = span.l;
            right[v].r = span.r;
        }
        dims.push(IntervalRep(left));
        dims.push(IntervalRep(right));
    }
    Ok(BoxRep { n: b.n(), dims })
}

/// Stretches the intervals of clique `s` minimally around a point of its Helly region.
///
/// Intervals outside `s` are kept (after rescaling to distinct endpoints if
/// they collide). Each `v` in `s` becomes
/// `[min(p, min r_u), max(p, max l_u)]` over its `g`-neighbors `u` outside `s`,
/// where `p` is the midpoint of the Helly region of `s`, rounded down.
pub fn nicefy(rep: &IntervalRep, g: &Graph, s: &VertexSet) -> Result<(IntervalRep, i64), Error> {
    if rep.n() != g.n() {
        return Err(Error::VertexMismatch { expected: g.n(), found: rep.n() });
    }
    s.check(g.n())?;
    if s.is_empty() {
        let p = rep.span().map_or(0, |sp| (sp.l + sp.r).div_euclid(2));
        return Ok((rep.clone(), p));
    }
    let outside = s.complement_in(g.n());
    let work = if rep.endpoints_distinct(outside.iter()) { rep.clone() } else { rep.perturb_distinct() };
    let helly = work.helly_region(s).ok_or(Error::EmptyHellyRegion)?;
    let p = (helly.l + helly.r).div_euclid(2);
    let mut out = work.0.clone();
    for v in s.iter() {
        let mut l = p;
        let mut r = p;
        for u in g.neighbors(v).filter(|&u| !s.contains(u)) {
            l = l.min(work.0[u].r);
            r = r.max(work.0[u].l);
        }
        out[v] = Interval::new(l, r);
    }
    Ok((IntervalRep(out), p))
}

/// Checks the three conditions of a nice representation of a supergraph of `g`
/// relative to clique `s` and point `p`, literally.
pub fn is_nice(rep: &IntervalRep, g: &Graph, s: &VertexSet, p: i64) -> bool {
    let in_helly = s.iter().all(|v| rep.get(v).contains(p));
    let outside = s.complement_in(g.n());
    let distinct = rep.endpoints_distinct(outside.iter());
    let stretched = s.iter().all(|v| {
        let nb = || g.neighbors(v).filter(|&u| !s.contains(u));
        let l = nb().map(|u| rep.get(u).r).fold(p, i64::min);
        let r = nb().map(|u| rep.get(u).l).fold(p, i64::max);
        rep.get(v) == Interval::new(l, r)
    });
    in_helly && distinct && stretched
}
