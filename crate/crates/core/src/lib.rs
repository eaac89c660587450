//! Algorithms for boxicity, cubicity and related dimension parameters.
//!
//! The crate is `no_std` and only needs `alloc`. It contains:
//!
//! * [`graph`]: the labeled graph type, complement, and the vertex-cover based
//!   clique/residual split,
//! * [`interval`]: interval and box representations with validation,
//!   clique saturation and nice-representation derivation,
//! * [`nice`]: enumeration of nice interval supergraphs relative to a large clique,
//! * [`exact`]: optimal box representations for graphs with a clique of size `n - k`,
//! * [`approx`]: the partition based approximation for boxicity and cubicity,
//! * [`unit`]: unit interval recognition and interval-to-unit decomposition,
//! * [`oracle`]: brute force ground truth at tiny sizes,
//! * [`reductions`]: chain covers of bipartite graphs and poset dimension.
//!
//! IO, file formats and the command line live in the `boxdim` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod approx;
pub mod bits;
pub mod cover;
mod diff;
pub mod error;
pub mod exact;
pub mod graph;
pub mod interval;
pub mod nice;
pub mod oracle;
pub mod reductions;
pub mod unit;

pub use approx::{approx_box, approx_cube, ApproxParams};
pub use cover::{clique_residual_split, min_vertex_cover};
pub use error::Error;
pub use exact::exact_box_large_clique;
pub use graph::{Graph, VertexSet};
pub use interval::{BoxRep, Interval, IntervalRep, Verdict, Witness};
pub use unit::{CubeRep, UnitIntervalRep};

pub type Result<T, E = Error> = core::result::Result<T, E>;
