//! Connected matchings, paths and even cycles in 3-coloured complete
//! bipartite graphs: exact verification, extremal constructions, exhaustive
//! Ramsey search and the almost-complete to complete reduction.

pub mod bigraph;
pub mod constructions;
pub mod dsu;
pub mod error;
pub mod fixtures;
pub mod matching;
pub mod paths;
pub mod reducer;
pub mod report;
pub mod search;

pub use error::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;
