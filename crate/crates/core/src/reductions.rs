//! Chain covers of bipartite graphs and the poset dimension reduction.
//!
//! The complement of a bipartite graph `B` with sides `X1`, `X2` is two cliques
//! joined by the non-edges of `B`. In every dimension of a box representation of
//! that complement the cross pairs with disjoint intervals form a chain graph, and
//! together these chain graphs cover `E(B)`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::approx::{approx_box, ApproxParams};
use crate::error::Error;
use crate::graph::{Graph, VertexSet};
use crate::interval::{validate_box_rep, BoxRep};

/// Bipartite graph with a fixed side `X1`; the other side is the rest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    graph: Graph,
    x1: VertexSet,
}

impl BipartiteGraph {
    pub fn new(graph: Graph, x1: VertexSet) -> Result<Self, Error> {
        x1.check(graph.n())?;
        if let Some((u, v)) = graph.edges().find(|&(u, v)| x1.contains(u) == x1.contains(v)) {
            return Err(Error::NotBipartite { u, v });
        }
        Ok(BipartiteGraph { graph, x1 })
    }

    /// Two-colors `graph`, putting the smallest vertex of every component in `X1`.
    pub fn from_graph(graph: Graph) -> Result<Self, Error> {
        let n = graph.n();
        let mut side: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(true);
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                let su = side[u] == Some(true);
                for v in graph.neighbors(u) {
                    match side[v] {
                        None => {
                            side[v] = Some(!su);
                            stack.push(v);
                        }
                        Some(sv) if sv == su => return Err(Error::NotBipartite { u: u.min(v), v: u.max(v) }),
                        Some(_) => {}
                    }
                }
            }
        }
        let x1 = (0..n).filter(|&v| side[v] == Some(true)).collect();
        Self::new(graph, x1)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn x1(&self) -> &VertexSet {
        &self.x1
    }

    pub fn x2(&self) -> VertexSet {
        self.x1.complement_in(self.graph.n())
    }

    /// Edges as `(x, y)` with `x` in `X1`, ordered by `x` then `y`.
    pub fn oriented_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.x1.iter().flat_map(move |x| self.graph.neighbors(x).map(move |y| (x, y)))
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }
}

/// True when no two edges of `edges` induce a `2K2`, i.e. the neighborhoods of
/// the `X1` endpoints are nested.
pub fn is_chain_graph(edges: &[(usize, usize)]) -> bool {
    let set: BTreeSet<(usize, usize)> = edges.iter().copied().collect();
    edges.iter().enumerate().all(|(i, &(x1, y1))| {
        edges[i + 1..]
            .iter()
            .all(|&(x2, y2)| x1 == x2 || y1 == y2 || set.contains(&(x1, y2)) || set.contains(&(x2, y1)))
    })
}

/// Chain subgraphs, each an edge list oriented as in [`BipartiteGraph::oriented_edges`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ChainCover {
    pub members: Vec<Vec<(usize, usize)>>,
}

impl ChainCover {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Every member is a chain graph inside `b` and the members cover `E(b)`.
    pub fn is_cover_of(&self, b: &BipartiteGraph) -> bool {
        let edges: BTreeSet<(usize, usize)> = b.oriented_edges().collect();
        let mut union = BTreeSet::new();
        for m in &self.members {
            if !is_chain_graph(m) || !m.iter().all(|e| edges.contains(e)) {
                return false;
            }
            union.extend(m.iter().copied());
        }
        union == edges
    }
}

/// Reads a chain cover of `b` off a box representation of its complement.
pub fn chain_graphs_from_box_rep(b: &BipartiteGraph, rep: &BoxRep) -> Result<ChainCover, Error> {
    let h = b.graph().complement();
    if let Some(w) = validate_box_rep(&h, rep)?.witness() {
        return Err(Error::InvalidRepresentation(alloc::format!("{w}")));
    }
    let members: Vec<Vec<(usize, usize)>> = rep
        .dims()
        .iter()
        .map(|dim| b.oriented_edges().filter(|&(x, y)| !dim.adjacent(x, y)).collect())
        .collect();
    let cover = ChainCover { members };
    assert!(cover.is_cover_of(b), "box representation produced an invalid chain cover");
    Ok(cover)
}

/// Chain cover through the boxicity approximation of the complement; returns the
/// cover and the guaranteed factor.
pub fn chain_cover_approx(b: &BipartiteGraph, params: &ApproxParams) -> Result<(ChainCover, usize), Error> {
    let r = approx_box(&b.graph().complement(), params)?;
    Ok((chain_graphs_from_box_rep(b, &r.rep)?, r.bound_factor))
}

/// Finite partial order on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    le: Vec<bool>,
}

impl Poset {
    /// Reflexive transitive closure of the pairs `a <= b`.
    pub fn from_relations(n: usize, relations: &[(usize, usize)]) -> Result<Self, Error> {
        let mut le = vec![false; n * n];
        for v in 0..n {
            le[v * n + v] = true;
        }
        for &(a, b) in relations {
            for vertex in [a, b] {
                if vertex >= n {
                    return Err(Error::VertexOutOfRange { vertex, n });
                }
            }
            le[a * n + b] = true;
        }
        for m in 0..n {
            for a in 0..n {
                if le[a * n + m] {
                    for b in 0..n {
                        if le[m * n + b] {
                            le[a * n + b] = true;
                        }
                    }
                }
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                if le[a * n + b] && le[b * n + a] {
                    return Err(Error::NotAPoset { a, b });
                }
            }
        }
        Ok(Poset { n, le })
    }

    /// `a_i = i`, `b_i = k + i`, with `a_i < b_j` exactly when `i != j`.
    pub fn standard_example(k: usize) -> Self {
        let rel: Vec<(usize, usize)> =
            (0..k).flat_map(|i| (0..k).filter(move |&j| j != i).map(move |j| (i, k + j))).collect();
        Self::from_relations(2 * k, &rel).expect("standard example is a poset")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.le[a * self.n + b]
    }

    pub fn less(&self, a: usize, b: usize) -> bool {
        a != b && self.le(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.le(a, b) || self.le(b, a)
    }

    pub fn is_minimal(&self, v: usize) -> bool {
        (0..self.n).all(|u| !self.less(u, v))
    }

    pub fn is_maximal(&self, v: usize) -> bool {
        (0..self.n).all(|u| !self.less(v, u))
    }

    /// No chain of three elements.
    pub fn is_height_two(&self) -> bool {
        (0..self.n).all(|v| self.is_minimal(v) || self.is_maximal(v))
    }

    /// Strict relations `(a, b)` with `a < b`, in lexicographic order.
    pub fn relations(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |a| (0..self.n).filter(move |&b| self.less(a, b)).map(move |b| (a, b)))
    }
}

/// Height-two poset on `2n` elements: `x- = x`, `x+ = n + x`, and `x- < y+`
/// exactly when `x <= y`.
pub fn kimble_split(p: &Poset) -> Poset {
    let n = p.n();
    let rel: Vec<(usize, usize)> =
        (0..n).flat_map(|x| (0..n).filter(move |&y| p.le(x, y)).map(move |y| (x, n + y))).collect();
    Poset::from_relations(2 * n, &rel).expect("split of a poset is a poset")
}

/// Bipartite graph of a height-two poset: `X1` holds the minimal elements
/// (isolated elements included), `X2` the rest, and `x y` is an edge when `x < y`
/// fails.
pub fn poset_bipartite(p: &Poset) -> Result<BipartiteGraph, Error> {
    if !p.is_height_two() {
        return Err(Error::NotHeightTwo);
    }
    let x1: VertexSet = (0..p.n()).filter(|&v| p.is_minimal(v)).collect();
    let mut g = Graph::new(p.n());
    for x in x1.iter() {
        for y in (0..p.n()).filter(|&y| !x1.contains(y)) {
            if !p.less(x, y) {
                g.add_edge(x, y);
            }
        }
    }
    BipartiteGraph::new(g, x1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetDimApprox {
    /// Upper bound on the dimension, at least 1.
    pub dimension: usize,
    pub cover: ChainCover,
    pub bound_factor: usize,
}

/// Upper bound on `dim(p)` via a chain cover of the bipartite graph of its split.
/// `k = None` uses the default part size for `2n` vertices.
pub fn posetdim_approx(p: &Poset, k: Option<usize>) -> Result<PosetDimApprox, Error> {
    let b = poset_bipartite(&kimble_split(p))?;
    let n = b.graph().n();
    let params = match k {
        Some(k) => ApproxParams::with_k(n, k),
        None => ApproxParams::for_n(n),
    };
    let (cover, bound_factor) = chain_cover_approx(&b, &params)?;
    Ok(PosetDimApprox { dimension: cover.len().max(1), cover, bound_factor })
}
