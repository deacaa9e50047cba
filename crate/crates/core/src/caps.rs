//! Search limits shared by every exact solver.

use serde::Serialize;

/// Exact-search limits. Defaults follow the scale at which every solver in the
/// crate finishes in seconds on a laptop.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Caps {
    /// Vertex limit for independent set, coloring, star and biclique search.
    pub exact_vertices: usize,
    /// Vertex limit for exact bandwidth.
    pub bandwidth_vertices: usize,
    /// Vertex limit for exact clique cover width.
    pub ccw_vertices: usize,
    /// Block limit for the exact balanced clique separator search.
    pub separator_blocks: usize,
    /// Maximum number of minor models examined per call.
    pub max_models: u64,
    /// Optional wall-clock budget per minor enumeration. Off by default so that
    /// results depend only on the inputs.
    pub max_seconds: Option<f64>,
    /// Evaluate independent work items on the rayon pool when the `parallel`
    /// feature is compiled in. Results are identical either way.
    pub parallel: bool,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            exact_vertices: 64,
            bandwidth_vertices: 12,
            ccw_vertices: 10,
            separator_blocks: 18,
            max_models: 1_000_000,
            max_seconds: None,
            parallel: true,
        }
    }
}

impl Caps {
    pub fn sequential(mut self) -> Self {
        self.parallel = false;
        self
    }
}
