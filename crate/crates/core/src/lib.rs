//! Exact computation of clique cover width, neighbourhood clique cover numbers
//! over shallow minors, grad, induced star and biclique numbers, and
//! clique-measured separators, for graphs small enough for exhaustive search.
//!
//! Every solver is deterministic: witnesses are chosen by fixed tie-breaks, and
//! parallel evaluation (feature `parallel`, on by default) reduces results in
//! canonical order.

mod bandwidth;
pub mod caps;
pub mod constructions;
pub mod cover;
pub mod error;
pub mod graph;
pub mod harness;
pub mod minor;
mod par;
pub mod report;
mod search;
pub mod separators;
pub mod structure;

pub use caps::Caps;
pub use cover::{CliqueCover, QuotientGraph};
pub use error::{Error, Result};
pub use graph::{Format, Graph, VertexSet};
pub use minor::{MinorModel, MinorOptimum};
pub use search::max_independent_set;
pub use separators::Separation;

/// Crate version recorded in reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
