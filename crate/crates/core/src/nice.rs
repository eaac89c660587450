//! Enumeration of nice interval supergraphs relative to the clique `V \ A`.
//!
//! A candidate is fixed by the left-to-right order of the `2|A|` endpoints of the
//! residual vertices and by the gap that holds the point `p`. Token `i` (1-based)
//! sits at coordinate `2i` and `p` at `2 * slot + 1`; the clique intervals follow
//! from the stretching rule in [`crate::interval::nicefy`].

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::graph::{Graph, VertexSet};
use crate::interval::{Interval, IntervalRep};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Token {
    pub vertex: usize,
    pub side: Side,
}

/// Endpoint order of the residual vertices plus the gap holding `p`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EndpointOrder {
    pub tokens: Vec<Token>,
    /// Gap index in `0..=tokens.len()`; gap `s` lies between tokens `s` and `s + 1`.
    pub p_slot: usize,
}

impl EndpointOrder {
    pub fn p(&self) -> i64 {
        2 * self.p_slot as i64 + 1
    }

    /// Each vertex has one left and one right token, left first.
    pub fn is_well_formed(&self) -> bool {
        let mut state: Vec<(usize, u8)> = Vec::new();
        for t in &self.tokens {
            let pos = state.iter().position(|&(v, _)| v == t.vertex);
            match (t.side, pos) {
                (Side::Left, None) => state.push((t.vertex, 1)),
                (Side::Right, Some(i)) if state[i].1 == 1 => state[i].1 = 2,
                _ => return false,
            }
        }
        state.iter().all(|&(_, s)| s == 2) && self.p_slot <= self.tokens.len()
    }
}

/// Upper bound `(2a + 1) * (2a)!` on the number of candidates for `|A| = a`.
pub fn candidate_bound(a: usize) -> u128 {
    let fact: u128 = (1..=2 * a as u128).product();
    (2 * a as u128 + 1) * fact
}

/// Calls `visit` for every nice interval supergraph of `g` relative to the clique
/// `V \ a`, in lexicographic order of `(token order, p_slot)`.
///
/// Returns the number of candidates emitted.
pub fn for_each_nice_supergraph<F>(g: &Graph, a: &VertexSet, mut visit: F) -> Result<usize, Error>
where
    F: FnMut(&IntervalRep, &EndpointOrder),
{
    a.check(g.n())?;
    let clique = a.complement_in(g.n());
    if !g.is_clique(&clique) {
        return Err(Error::NotAClique);
    }
    let mut search = Search {
        g,
        a: a.as_slice(),
        clique: clique.as_slice(),
        state: vec![0u8; a.len()],
        tokens: Vec::with_capacity(2 * a.len()),
        coords: vec![Interval::point(0); g.n()],
        count: 0,
    };
    search.extend(&mut visit);
    Ok(search.count)
}

/// Collects the candidates of [`for_each_nice_supergraph`].
pub fn enumerate_nice_supergraphs(g: &Graph, a: &VertexSet) -> Result<Vec<(IntervalRep, EndpointOrder)>, Error> {
    let mut out = Vec::new();
    for_each_nice_supergraph(g, a, |rep, order| out.push((rep.clone(), order.clone())))?;
    Ok(out)
}

struct Search<'a> {
    g: &'a Graph,
    a: &'a [usize],
    clique: &'a [usize],
    /// Per residual index: 0 unopened, 1 open, 2 closed.
    state: Vec<u8>,
    tokens: Vec<Token>,
    coords: Vec<Interval>,
    count: usize,
}

impl Search<'_> {
    fn extend<F: FnMut(&IntervalRep, &EndpointOrder)>(&mut self, visit: &mut F) {
        if self.tokens.len() == 2 * self.a.len() {
            self.emit(visit);
            return;
        }
        let pos = 2 * (self.tokens.len() as i64 + 1);
        for i in 0..self.a.len() {
            let v = self.a[i];
            match self.state[i] {
                0 => {
                    self.state[i] = 1;
                    self.coords[v].l = pos;
                    self.tokens.push(Token { vertex: v, side: Side::Left });
                    self.extend(visit);
                    self.tokens.pop();
                    self.state[i] = 0;
                }
                1 => {
                    // closing v before a residual neighbor opens loses an edge of g
                    let loses_edge = self
                        .a
                        .iter()
                        .zip(&self.state)
                        .any(|(&w, &s)| s == 0 && self.g.has_edge(v, w));
                    if loses_edge {
                        continue;
                    }
                    self.state[i] = 2;
                    self.coords[v].r = pos;
                    self.tokens.push(Token { vertex: v, side: Side::Right });
                    self.extend(visit);
                    self.tokens.pop();
                    self.state[i] = 1;
                }
                _ => {}
            }
        }
    }

    fn emit<F: FnMut(&IntervalRep, &EndpointOrder)>(&mut self, visit: &mut F) {
        let mut order = EndpointOrder { tokens: self.tokens.clone(), p_slot: 0 };
        for slot in 0..=self.tokens.len() {
            order.p_slot = slot;
            let p = order.p();
            for &v in self.clique {
                let mut l = p;
                let mut r = p;
                for &u in self.a {
                    if self.g.has_edge(u, v) {
                        l = l.min(self.coords[u].r);
                        r = r.max(self.coords[u].l);
                    }
                }
                self.coords[v] = Interval::new(l, r);
            }
            let rep = IntervalRep::new(self.coords.clone()).expect("well-formed by construction");
            if self.g.edges().all(|(u, v)| rep.adjacent(u, v)) {
                self.count += 1;
                visit(&rep, &order);
            }
        }
    }
}
