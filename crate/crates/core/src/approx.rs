//! Partition based approximation of boxicity and cubicity.
//!
//! The vertex set is cut into parts of at most `k` vertices. For every part `V_i`
//! the supergraph `G_i` joins all pairs outside `V_i`, so `G_i` has a clique on all
//! but `|V_i|` vertices and is solved exactly. Since `E(G)` is the intersection of
//! the `E(G_i)`, the concatenated representations represent `G`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::exact::exact_box_large_clique;
use crate::graph::{Graph, VertexSet};
use crate::interval::{validate_box_rep, BoxRep};
use crate::unit::{ceil_log2, decompose_interval_to_units, validate_cube_rep, CubeRep, UnitIntervalRep};

/// Part size `k` and number of parts `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ApproxParams {
    pub n: usize,
    pub k: usize,
    pub t: usize,
}

impl ApproxParams {
    /// `k = ceil(sqrt(log n / log log n))`, `t = max(ceil(n / k), ceil(n sqrt(log log n) / sqrt(log n)))`,
    /// logarithms base 2; `k = 1` for `n <= 4`.
    pub fn for_n(n: usize) -> Self {
        let (k, formula_t) = if n <= 4 {
            let t = if n >= 3 {
                let l = libm::log2(n as f64);
                libm::ceil(n as f64 * libm::sqrt(libm::log2(l)) / libm::sqrt(l)) as usize
            } else {
                0
            };
            (1, t)
        } else {
            let l = libm::log2(n as f64);
            let ll = libm::log2(l);
            let k = (libm::ceil(libm::sqrt(l / ll)) as usize).max(1);
            (k, libm::ceil(n as f64 * libm::sqrt(ll) / libm::sqrt(l)) as usize)
        };
        ApproxParams { n, k, t: formula_t.max(n.div_ceil(k)).max(1) }
    }

    /// User supplied part size; `t` is the number of parts, `ceil(n / k)`.
    pub fn with_k(n: usize, k: usize) -> Self {
        let k = k.max(1);
        ApproxParams { n, k, t: n.div_ceil(k).max(1) }
    }

    /// Guaranteed factor for boxicity, `2t`.
    pub fn box_factor(&self) -> usize {
        2 * self.t
    }

    /// Reported factor for cubicity, `2t * ceil(log2 k)`, at least `2t`.
    pub fn cube_factor(&self) -> usize {
        2 * self.t * ceil_log2(self.k).max(1)
    }
}

/// Contiguous chunks of `k` labels; trailing parts may be empty.
pub fn partition_vertices(g: &Graph, params: &ApproxParams) -> Vec<VertexSet> {
    let n = g.n();
    (0..params.t)
        .map(|j| VertexSet::range((j * params.k).min(n), ((j + 1) * params.k).min(n)))
        .collect()
}

/// `g` plus every pair outside `part`.
pub fn augment_supergraph(g: &Graph, part: &VertexSet) -> Graph {
    g.with_clique(part.complement_in(g.n()).as_slice())
}

/// Optimal box representation of the augmented supergraph of one part.
pub fn solve_part(g: &Graph, part: &VertexSet) -> Result<BoxRep, Error> {
    let gi = augment_supergraph(g, part);
    Ok(exact_box_large_clique(&gi, part.len())?.rep)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproxBox {
    pub rep: BoxRep,
    /// `2t`, or 0 for a complete graph.
    pub bound_factor: usize,
    /// Dimension contributed by each nonempty part, in part order.
    pub part_dims: Vec<usize>,
}

/// Concatenates per-part representations in part order and validates the result.
pub fn assemble_box(g: &Graph, params: &ApproxParams, parts: Vec<BoxRep>) -> Result<ApproxBox, Error> {
    let mut rep = BoxRep::empty(g.n());
    let mut part_dims = Vec::with_capacity(parts.len());
    for b in parts {
        part_dims.push(b.dimension());
        rep.extend(b)?;
    }
    let verdict = validate_box_rep(g, &rep)?;
    if let Some(w) = verdict.witness() {
        return Err(Error::InvalidRepresentation(alloc::format!("{w}")));
    }
    Ok(ApproxBox { rep, bound_factor: params.box_factor(), part_dims })
}

/// Box representation of `g` with at most `2t * box(g)` dimensions.
pub fn approx_box(g: &Graph, params: &ApproxParams) -> Result<ApproxBox, Error> {
    if g.is_complete() {
        return Ok(ApproxBox { rep: BoxRep::empty(g.n()), bound_factor: 0, part_dims: Vec::new() });
    }
    let parts = partition_vertices(g, params)
        .iter()
        .filter(|p| !p.is_empty())
        .map(|p| solve_part(g, p))
        .collect::<Result<Vec<_>, _>>()?;
    assemble_box(g, params, parts)
}

/// Independence number of the augmented supergraph of `part`: an independent set
/// holds at most one vertex outside `part`.
pub fn part_independence_number(g: &Graph, part: &VertexSet) -> usize {
    let members = part.as_slice();
    let outside = part.complement_in(g.n());
    let mut best = usize::from(!outside.is_empty()).max(usize::from(!members.is_empty()));
    for mask in 1u64..1 << members.len() {
        let set: Vec<usize> = (0..members.len()).filter(|&i| mask >> i & 1 == 1).map(|i| members[i]).collect();
        if !g.is_independent(&set) {
            continue;
        }
        let extra = outside.iter().any(|w| set.iter().all(|&v| !g.has_edge(v, w)));
        best = best.max(set.len() + usize::from(extra));
    }
    best
}

/// Unit decomposition of one part's optimal box representation.
pub fn cube_part(g: &Graph, part: &VertexSet) -> Result<Vec<UnitIntervalRep>, Error> {
    let b = solve_part(g, part)?;
    let alpha = part_independence_number(g, part);
    let mut out = Vec::new();
    for dim in b.dims() {
        out.extend(decompose_interval_to_units(dim, alpha)?);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproxCube {
    pub rep: CubeRep,
    /// `2t * ceil(log2 k)` (at least `2t`), or 0 for a complete graph.
    pub bound_factor: usize,
    pub part_dims: Vec<usize>,
}

pub fn assemble_cube(g: &Graph, params: &ApproxParams, parts: Vec<Vec<UnitIntervalRep>>) -> Result<ApproxCube, Error> {
    let mut rep = CubeRep::empty(g.n());
    let mut part_dims = Vec::with_capacity(parts.len());
    for dims in parts {
        part_dims.push(dims.len());
        rep.extend(dims)?;
    }
    if let Some(w) = validate_cube_rep(g, &rep)?.witness() {
        return Err(Error::InvalidRepresentation(alloc::format!("{w}")));
    }
    Ok(ApproxCube { rep, bound_factor: params.cube_factor(), part_dims })
}

fn require_connected(g: &Graph) -> Result<(), Error> {
    let components = g.components();
    if components.len() > 1 {
        return Err(Error::Disconnected { components });
    }
    Ok(())
}

/// Cube representation of a connected graph.
pub fn approx_cube(g: &Graph, params: &ApproxParams) -> Result<ApproxCube, Error> {
    require_connected(g)?;
    if g.is_complete() {
        return Ok(ApproxCube { rep: CubeRep::empty(g.n()), bound_factor: 0, part_dims: Vec::new() });
    }
    let parts = partition_vertices(g, params)
        .iter()
        .filter(|p| !p.is_empty())
        .map(|p| cube_part(g, p))
        .collect::<Result<Vec<_>, _>>()?;
    assemble_cube(g, params, parts)
}

/// Runs [`approx_cube`] per component and combines the results.
///
/// `k = None` uses the default part size for each component. Components are laid
/// out left to right in the first dimension, more than one unit apart; a
/// component with fewer dimensions than the maximum sits on a single point in
/// the remaining ones.
pub fn approx_cube_per_component(g: &Graph, k: Option<usize>) -> Result<ApproxCube, Error> {
    if g.is_complete() {
        return Ok(ApproxCube { rep: CubeRep::empty(g.n()), bound_factor: 0, part_dims: Vec::new() });
    }
    let components = g.components();
    let mut solved = Vec::with_capacity(components.len());
    let mut factor = 0;
    for comp in &components {
        let sub = g.induced(comp);
        let params = match k {
            Some(k) => ApproxParams::with_k(sub.n(), k),
            None => ApproxParams::for_n(sub.n()),
        };
        let r = approx_cube(&sub, &params)?;
        factor = factor.max(r.bound_factor).max(params.cube_factor());
        solved.push(r.rep);
    }
    let dims = solved.iter().map(CubeRep::dimension).max().unwrap_or(0).max(1);
    let mut out = Vec::with_capacity(dims);
    for j in 0..dims {
        let unit = solved
            .iter()
            .filter_map(|c| c.dims().get(j).map(UnitIntervalRep::denom))
            .fold(1i64, lcm);
        let mut nums = vec![0i64; g.n()];
        let mut base = 0i64;
        for (comp, c) in components.iter().zip(&solved) {
            let mut hi = base;
            for (i, &v) in comp.iter().enumerate() {
                let x = c.dims().get(j).map_or(0, |d| d.nums()[i] * (unit / d.denom()));
                nums[v] = if j == 0 { base + x } else { x };
                hi = hi.max(nums[v]);
            }
            base = hi + unit + 1;
        }
        out.push(UnitIntervalRep::new(unit, nums)?);
    }
    let rep = CubeRep::new(g.n(), out)?;
    if let Some(w) = validate_cube_rep(g, &rep)?.witness() {
        return Err(Error::InvalidRepresentation(alloc::format!("{w}")));
    }
    Ok(ApproxCube { rep, bound_factor: factor, part_dims: solved.iter().map(CubeRep::dimension).collect() })
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::oracle::{oracle_boxicity, oracle_cubicity};

    #[test]
    fn params_formulas() {
        let p = ApproxParams::for_n(100);
        assert_eq!((p.k, p.t), (2, 65));
        assert_eq!(p.box_factor(), 130);
        for n in 0..=300 {
            let p = ApproxParams::for_n(n);
            assert!(p.k >= 1 && p.t >= 1 && p.k * p.t >= n, "n = {n}");
        }
        assert_eq!(ApproxParams::for_n(4).k, 1);
        assert_eq!(ApproxParams::with_k(7, 3).t, 3);
    }

    #[test]
    fn partition_examples() {
        let parts = partition_vertices(&Graph::new(6), &ApproxParams::with_k(6, 2));
        assert_eq!(parts, [VertexSet::range(0, 2), VertexSet::range(2, 4), VertexSet::range(4, 6)]);
        let parts = partition_vertices(&Graph::new(5), &ApproxParams::with_k(5, 2));
        assert_eq!(parts.last().unwrap().as_slice(), &[4]);
        let parts = partition_vertices(&Graph::new(100), &ApproxParams::for_n(100));
        assert_eq!(parts.len(), 65);
        assert_eq!(parts.iter().filter(|p| !p.is_empty()).count(), 50);
    }

    #[test]
    fn augment_examples() {
        let c4 = cycle(4);
        assert_eq!(augment_supergraph(&c4, &VertexSet::range(0, 4)), c4);
        assert_eq!(augment_supergraph(&c4, &VertexSet::empty()), Graph::complete(4));
        let mut expected = Graph::complete(4);
        expected.remove_edge(0, 2);
        assert_eq!(augment_supergraph(&c4, &VertexSet::new(vec![0])), expected);
    }

    #[test]
    fn approx_box_examples() {
        let mut g = Graph::complete(5);
        g.remove_edge(1, 3);
        let p = ApproxParams::with_k(5, 2);
        let r = approx_box(&g, &p).unwrap();
        assert!(validate_box_rep(&g, &r.rep).unwrap().is_valid());
        assert!(r.rep.dimension() <= p.box_factor());

        let c4 = cycle(4);
        let r = approx_box(&c4, &ApproxParams::with_k(4, 1)).unwrap();
        assert!(r.rep.dimension() >= oracle_boxicity(&c4, 2, 8).unwrap().boxicity);
        assert!(r.rep.dimension() <= 2 * 4 * 2);

        let r = approx_box(&Graph::complete(4), &ApproxParams::for_n(4)).unwrap();
        assert_eq!((r.rep.dimension(), r.bound_factor), (0, 0));
    }

    #[test]
    fn approx_cube_examples() {
        let r = approx_cube(&Graph::complete(4), &ApproxParams::for_n(4)).unwrap();
        assert_eq!((r.rep.dimension(), r.bound_factor), (0, 0));

        let claw = star(3);
        let r = approx_cube(&claw, &ApproxParams::with_k(4, 2)).unwrap();
        assert!(r.rep.dimension() >= oracle_cubicity(&claw, 3, 8).unwrap().cubicity);

        let p4 = path(4);
        let r = approx_cube(&p4, &ApproxParams::with_k(4, 2)).unwrap();
        assert!(validate_cube_rep(&p4, &r.rep).unwrap().is_valid());
    }

    #[test]
    fn disconnected_cube_input() {
        let mut g = Graph::new(5);
        g.add_edge(0, 1);
        g.add_edge(2, 3);
        g.add_edge(3, 4);
        match approx_cube(&g, &ApproxParams::for_n(5)) {
            Err(Error::Disconnected { components }) => assert_eq!(components, vec![vec![0, 1], vec![2, 3, 4]]),
            other => panic!("{other:?}"),
        }
        let r = approx_cube_per_component(&g, Some(2)).unwrap();
        assert!(validate_cube_rep(&g, &r.rep).unwrap().is_valid());
        let r = approx_cube_per_component(&Graph::new(3), None).unwrap();
        assert_eq!(r.rep.dimension(), 1);
        assert!(validate_cube_rep(&Graph::new(3), &r.rep).unwrap().is_valid());
    }

    #[test]
    fn independence_of_augmented_parts() {
        // the outside clique can add one vertex to an independent set of the part
        let p3 = path(3);
        let part = VertexSet::new(vec![0]);
        assert_eq!(part_independence_number(&p3, &part), 2);
        assert!(part_independence_number(&p3, &part) <= part.len() + 1);
    }
}
