//! Per-part parallel drivers for the approximation pipeline.
//!
//! Parts are solved on a dedicated rayon pool and concatenated in part order, so
//! the result does not depend on the thread count.

use boxdim_core::approx::{self, ApproxBox, ApproxCube, ApproxParams};
use boxdim_core::{Error, Graph};
use rayon::prelude::*;

fn pool(threads: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new().num_threads(threads).build().expect("thread pool")
}

/// Same result as [`approx::approx_box`]; `threads = 0` uses the rayon default.
pub fn approx_box(g: &Graph, params: &ApproxParams, threads: usize) -> Result<ApproxBox, Error> {
    if g.is_complete() {
        return approx::approx_box(g, params);
    }
    let parts: Vec<_> = approx::partition_vertices(g, params).into_iter().filter(|p| !p.is_empty()).collect();
    let reps = pool(threads).install(|| parts.par_iter().map(|p| approx::solve_part(g, p)).collect::<Result<Vec<_>, _>>())?;
    approx::assemble_box(g, params, reps)
}

/// Same result as [`approx::approx_cube`].
pub fn approx_cube(g: &Graph, params: &ApproxParams, threads: usize) -> Result<ApproxCube, Error> {
    if g.is_complete() || !g.is_connected() {
        return approx::approx_cube(g, params);
    }
    let parts: Vec<_> = approx::partition_vertices(g, params).into_iter().filter(|p| !p.is_empty()).collect();
    let reps = pool(threads).install(|| parts.par_iter().map(|p| approx::cube_part(g, p)).collect::<Result<Vec<_>, _>>())?;
    approx::assemble_cube(g, params, reps)
}
