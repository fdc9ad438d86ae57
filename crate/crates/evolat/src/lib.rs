//! File formats, reports and the command-line front end for `evolat-core`.
//!
//! Algebra files are JSON documents:
//!
//! ```json
//! {"field": "Q", "dim": 3, "matrix": [["1","0","0"],["0","1","0"],["1/4","1/4","1"]]}
//! ```
//!
//! Row `i` of `matrix` lists the coordinates of `eᵢ²`. Scalars are strings so
//! that `"1/4"` stays exact. `field` is `"Q"` or `{"Fp": p}` for an odd prime `p`.

pub mod cli;
pub mod error;
pub mod export;
pub mod figures;
pub mod file;
pub mod report;

pub use error::CliError;
pub use file::{parse_algebra, to_canonical, AlgebraFile};
