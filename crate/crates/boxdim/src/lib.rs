//! File formats, parallel drivers and the command line front end for `boxdim-core`.

pub mod cli;
pub mod formats;
pub mod parallel;
