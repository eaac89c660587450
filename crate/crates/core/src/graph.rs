//! Simple undirected graphs on vertices `0..n`.

use alloc::vec::Vec;
use core::fmt;

use crate::bits::BitSet;
use crate::error::Error;

/// Simple undirected graph with bitset adjacency rows.
///
/// Vertices are labeled `0..n` and labels never change in derived graphs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<BitSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph { n, rows: (0..n).map(|_| BitSet::new(n)).collect() }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, Error> {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u != v {
                g.add_edge(u, v);
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.rows[u].contains(v)
    }

    /// Adds `{u, v}`; returns `false` if it was already present. Self-loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        if u == v || self.rows[u].contains(v) {
            return false;
        }
        self.rows[u].insert(v);
        self.rows[v].insert(u);
        true
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.rows[u].remove(v);
            self.rows[v].remove(u);
        }
    }

    pub fn row(&self, v: usize) -> &BitSet {
        &self.rows[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[v].iter()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.rows[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Non-adjacent pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| (u + 1..self.n).filter(move |&v| !self.has_edge(u, v)).map(move |v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(BitSet::count).sum::<usize>() / 2
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| u == v || self.has_edge(u, v)))
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// `self` with every pair inside `set` joined.
    pub fn with_clique(&self, set: &[usize]) -> Graph {
        let mut g = self.clone();
        for (i, &u) in set.iter().enumerate() {
            for &v in &set[i + 1..] {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Whether every edge of `other` is an edge of `self`.
    pub fn contains_graph(&self, other: &Graph) -> bool {
        self.n == other.n && self.rows.iter().zip(&other.rows).all(|(a, b)| b.is_subset(a))
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = alloc::vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = alloc::vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Induced subgraph on `set`, relabeled `0..set.len()` in the order given.
    pub fn induced(&self, set: &[usize]) -> Graph {
        let mut g = Graph::new(set.len());
        for (i, &u) in set.iter().enumerate() {
            for (j, &v) in set.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        f.write_str(")")
    }
}

/// Sorted, duplicate-free set of vertex labels.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(mut v: Vec<usize>) -> Self {
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    pub fn range(start: usize, end: usize) -> Self {
        VertexSet((start..end).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    /// `0..n` minus `self`.
    pub fn complement_in(&self, n: usize) -> VertexSet {
        VertexSet((0..n).filter(|&v| !self.contains(v)).collect())
    }

    pub fn check(&self, n: usize) -> Result<(), Error> {
        match self.0.last() {
            Some(&v) if v >= n => Err(Error::VertexOutOfRange { vertex: v, n }),
            _ => Ok(()),
        }
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

impl core::ops::Deref for VertexSet {
    type Target = [usize];
    fn deref(&self) -> &[usize] {
        &self.0
    }
}

/// Small named graphs used throughout the tests and examples.
pub mod named {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    pub fn cycle(n: usize) -> Graph {
        let mut g = path(n);
        if n > 2 {
            g.add_edge(n - 1, 0);
        }
        g
    }

    /// `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Graph {
        let mut g = Graph::new(leaves + 1);
        for v in 1..=leaves {
            g.add_edge(0, v);
        }
        g
    }

    /// `K_{2m}` minus the perfect matching `{2i, 2i+1}`.
    pub fn cocktail_party(m: usize) -> Graph {
        let mut g = Graph::complete(2 * m);
        for i in 0..m {
            g.remove_edge(2 * i, 2 * i + 1);
        }
        g
    }
}
