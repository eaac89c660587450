//! Plain text formats for graphs, posets, box and cube representations and chain covers.
//!
//! Graph and poset files use 1-based vertex labels; representation files use the
//! 0-based labels of the solver. Lines starting with `c` are comments everywhere.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use boxdim_core::reductions::{BipartiteGraph, ChainCover, Poset};
use boxdim_core::{BoxRep, CubeRep, Graph, Interval, IntervalRep, UnitIntervalRep};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, message: message.into() })
}

/// Non-comment, non-blank lines with their 1-based line numbers.
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let words: Vec<&str> = l.split_whitespace().collect();
        match words.first() {
            None | Some(&"c") => None,
            Some(_) => Some((i + 1, words)),
        }
    })
}

fn num<T: std::str::FromStr>(line: usize, word: &str) -> Result<T, ParseError> {
    word.parse().or_else(|_| err(line, format!("expected a number, found `{word}`")))
}

struct Reader<'a, I: Iterator<Item = (usize, Vec<&'a str>)>> {
    it: I,
    last: usize,
}

impl<'a, I: Iterator<Item = (usize, Vec<&'a str>)>> Reader<'a, I> {
    fn next(&mut self, what: &str) -> Result<(usize, Vec<&'a str>), ParseError> {
        match self.it.next() {
            Some((l, w)) => {
                self.last = l;
                Ok((l, w))
            }
            None => err(self.last + 1, format!("unexpected end of input, expected {what}")),
        }
    }

    /// Next line of the form `tag a b ...` with exactly `arity` numeric fields.
    fn record<T: std::str::FromStr>(&mut self, tag: &str, arity: usize) -> Result<(usize, Vec<T>), ParseError> {
        let (l, w) = self.next(&format!("`{tag}` line"))?;
        if w[0] != tag || w.len() != arity + 1 {
            return err(l, format!("expected `{tag}` with {arity} fields"));
        }
        let vals = w[1..].iter().map(|x| num(l, x)).collect::<Result<_, _>>()?;
        Ok((l, vals))
    }

    /// `p <kind> <n> <m>`
    fn header(&mut self, kind: &str) -> Result<(usize, usize), ParseError> {
        let (l, w) = self.next("header")?;
        if w.len() != 4 || w[0] != "p" || w[1] != kind {
            return err(l, format!("expected header `p {kind} <n> <m>`"));
        }
        Ok((num(l, w[2])?, num(l, w[3])?))
    }

    /// `<tag> <n> <d>`
    fn rep_header(&mut self, tag: &str) -> Result<(usize, usize), ParseError> {
        let (_, w) = self.record::<usize>(tag, 2)?;
        Ok((w[0], w[1]))
    }

    fn finish(mut self) -> Result<(), ParseError> {
        match self.it.next() {
            Some((l, _)) => err(l, "unexpected trailing line"),
            None => Ok(()),
        }
    }
}

fn reader(text: &str) -> Reader<'_, impl Iterator<Item = (usize, Vec<&str>)>> {
    Reader { it: lines(text), last: 0 }
}


/// Reads `p box <n> <m>` followed by `m` lines `e <u> <v>`.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut r = reader(text);
    let (n, m) = r.header("box")?;
    let mut g = Graph::new(n);
    for _ in 0..m {
        let (l, e) = r.record::<usize>("e", 2)?;
        let (u, v) = pair(l, e[0], e[1], n)?;
        if !g.add_edge(u, v) {
            return err(l, format!("duplicate edge {} {}", e[0], e[1]));
        }
    }
    r.finish()?;
    Ok(g)
}

fn pair(l: usize, a: usize, b: usize, n: usize) -> Result<(usize, usize), ParseError> {
    if a == 0 || b == 0 || a > n || b > n {
        return err(l, "vertex index out of range");
    }
    if a == b {
        return err(l, "self loop");
    }
    Ok((a - 1, b - 1))
}

pub fn write_graph(g: &Graph) -> String {
    let mut s = format!("p box {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(s, "e {} {}", u + 1, v + 1).unwrap();
    }
    s
}

/// Reads `p poset <n> <m>` followed by `m` lines `r <a> <b>` meaning `a <= b`.
pub fn parse_poset(text: &str) -> Result<Poset, ParseError> {
    let mut r = reader(text);
    let (n, m) = r.header("poset")?;
    let mut rel = Vec::with_capacity(m);
    let mut seen = BTreeSet::new();
    for _ in 0..m {
        let (l, e) = r.record::<usize>("r", 2)?;
        if e[0] == 0 || e[1] == 0 || e[0] > n || e[1] > n {
            return err(l, "element index out of range");
        }
        if !seen.insert((e[0], e[1])) {
            return err(l, format!("duplicate relation {} {}", e[0], e[1]));
        }
        rel.push((e[0] - 1, e[1] - 1));
    }
    let last = r.last;
    r.finish()?;
    Poset::from_relations(n, &rel).map_err(|e| ParseError { line: last, message: e.to_string() })
}

/// Writes the strict relations of the closure.
pub fn write_poset(p: &Poset) -> String {
    let rel: Vec<_> = p.relations().collect();
    let mut s = format!("p poset {} {}\n", p.n(), rel.len());
    for (a, b) in rel {
        writeln!(s, "r {} {}", a + 1, b + 1).unwrap();
    }
    s
}

/// Reads `boxrep <n> <d>` then `d` blocks of `dim <i>` and `n` lines `<v> <l> <r>`.
pub fn parse_box_rep(text: &str) -> Result<BoxRep, ParseError> {
    let mut r = reader(text);
    let (n, d) = r.rep_header("boxrep")?;
    let mut dims = Vec::with_capacity(d);
    for i in 0..d {
        let (l, w) = r.record::<usize>("dim", 1)?;
        if w[0] != i {
            return err(l, format!("expected `dim {i}`"));
        }
        let mut ivs = Vec::with_capacity(n);
        for v in 0..n {
            let (l, w) = r.next("interval line")?;
            if w.len() != 3 || num::<usize>(l, w[0])? != v {
                return err(l, format!("expected `{v} <l> <r>`"));
            }
            let (a, b) = (num::<i64>(l, w[1])?, num::<i64>(l, w[2])?);
            if a > b {
                return err(l, "interval with l > r");
            }
            ivs.push(Interval::new(a, b));
        }
        dims.push(IntervalRep::new(ivs).expect("endpoints checked"));
    }
    r.finish()?;
    Ok(BoxRep::new(n, dims).expect("dimensions have n intervals"))
}


pub fn write_box_rep(b: &BoxRep) -> String {
    let mut s = format!("boxrep {} {}\n", b.n(), b.dimension());
    for (i, dim) in b.dims().iter().enumerate() {
        writeln!(s, "dim {i}").unwrap();
        for (v, iv) in dim.intervals().iter().enumerate() {
            writeln!(s, "{v} {} {}", iv.l, iv.r).unwrap();
        }
    }
    s
}

/// Reads `cuberep <n> <d>` then `d` blocks of `dim <i> <denom>` and `n` lines `<v> <num>`.
pub fn parse_cube_rep(text: &str) -> Result<CubeRep, ParseError> {
    let mut r = reader(text);
    let (n, d) = r.rep_header("cuberep")?;
    let mut dims = Vec::with_capacity(d);
    for i in 0..d {
        let (l, w) = r.record::<i64>("dim", 2)?;
        if w[0] != i as i64 {
            return err(l, format!("expected `dim {i} <denom>`"));
        }
        if w[1] < 0 {
            return err(l, "negative unit length");
        }
        let mut nums = Vec::with_capacity(n);
        for v in 0..n {
            let (l, w) = r.next("point line")?;
            if w.len() != 2 || num::<usize>(l, w[0])? != v {
                return err(l, format!("expected `{v} <num>`"));
            }
            nums.push(num(l, w[1])?);
        }
        dims.push(UnitIntervalRep::new(w[1], nums).or_else(|e| err(l, e.to_string()))?);
    }
    r.finish()?;
    Ok(CubeRep::new(n, dims).expect("dimensions have n points"))
}

pub fn write_cube_rep(c: &CubeRep) -> String {
    let mut s = format!("cuberep {} {}\n", c.n(), c.dimension());
    for (i, dim) in c.dims().iter().enumerate() {
        writeln!(s, "dim {i} {}", dim.denom()).unwrap();
        for (v, x) in dim.nums().iter().enumerate() {
            writeln!(s, "{v} {x}").unwrap();
        }
    }
    s
}

/// `chaincover <n> <d>` then per member `chain <i> <m>` and `m` lines `<x> <y>`, 0-based,
/// `x` on the first side.
pub fn write_chain_cover(b: &BipartiteGraph, c: &ChainCover) -> String {
    let mut s = format!("chaincover {} {}\n", b.graph().n(), c.len());
    for (i, m) in c.members.iter().enumerate() {
        writeln!(s, "chain {i} {}", m.len()).unwrap();
        for (x, y) in m {
            writeln!(s, "{x} {y}").unwrap();
        }
    }
    s
}

/// Candidates as a box representation file, one block per candidate.
pub fn write_rep_list(n: usize, reps: &[IntervalRep]) -> String {
    let b = BoxRep::new(n, reps.to_vec()).expect("candidates share the vertex count");
    write_box_rep(&b)
}
