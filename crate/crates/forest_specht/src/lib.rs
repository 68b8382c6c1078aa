//! Exact combinatorics of bipartite forests: matching-polytope volumes,
//! Specht and Schur modules, forest Schur functions, and forest tableaux.
//!
//! Every quantity of interest is computed by at least two independent
//! routes, all in exact arithmetic, so the library doubles as a
//! cross-checking engine:
//!
//! - [`volume`]: the normalized volume `V(G)` of the matching polytope by
//!   four routes (almost-perfect-matching recursion, leaf recursion,
//!   Ehrhart interpolation, standard-labeling count), plus the restricted
//!   lattice count `m_G(N)`.
//! - [`symfunc`]: the symmetric function `s_G` in the complete homogeneous
//!   basis, its Schur expansion, and its exponential and principal
//!   specializations.
//! - [`specht`]: explicit symmetric-group Specht modules and tensor-space
//!   Schur modules of diagrams, with dimensions, characters, and
//!   irreducible decompositions.
//! - [`tableaux`]: horizontal strips, semistandard and standard tableaux
//!   for forest diagrams, and their generating functions.
//! - [`checks`]: a consolidated identity suite tying all of the above
//!   together on exhaustively enumerated and randomly sampled forests.
//!
//! See the crate examples for runnable walkthroughs of each capability,
//! and the `forest-specht` binary for a command-line front end.

pub mod canon;
pub mod checks;
pub mod diagram;
pub mod enumerate;
pub mod generate;
pub mod graph;
pub mod linalg;
pub mod partition;
pub mod perm;
pub mod specht;
pub mod symfunc;
pub mod tableaux;
pub mod volume;

pub use diagram::{Diagram, StandardFormDiagram, Transversal};
pub use graph::{BipartiteGraph, Color, Matching};
pub use partition::Partition;
pub use symfunc::{ClassFunction, HPoly, SchurExpansion};

use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("non-bipartite edge: vertices {0} and {1} have the same color")]
    NonBipartiteEdge(u32, u32),
    #[error("isolated vertex {0}")]
    IsolatedVertex(u32),
    #[error("duplicate edge between {0} and {1}")]
    DuplicateEdge(u32, u32),
    #[error("unknown vertex id {0} in edge list")]
    UnknownVertex(u32),
    #[error("graph is not a forest")]
    NotAForest,
    #[error("edge set is not a matching: edges {0} and {1} share a vertex")]
    NotAMatching(usize, usize),
    #[error("transversal is not special: row/column digraph has a cycle")]
    NotSpecial,
    #[error("transversal box ({0},{1}) is not a box of the diagram")]
    NotATransversalBox(u32, u32),
    #[error("boxes share a row or column")]
    SharedRowOrColumn,
    #[error("empty diagram")]
    EmptyDiagram,
    #[error("graph is a white-centered star: leaf step has no work to do")]
    WhiteStarBase,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("root {0} is not a white vertex of the graph")]
    BadRoot(u32),
    #[error("invalid split: boxes violate the split precondition")]
    BadSplit,
    #[error("cap {name} exceeded: needed {needed}, limit {limit}")]
    CapExceeded {
        name: &'static str,
        needed: u128,
        limit: u128,
    },
    #[error("partition sizes differ: |{0}| != |{1}|")]
    SizeMismatch(String, String),
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("negative multiplicity {1} for partition {0}; this is a bug")]
    NegativeCoefficient(String, String),
    #[error("non-integer result in exact interpolation; this is a bug")]
    NonIntegerResult,
    #[error("internal consistency failure: {0}")]
    Internal(&'static str),
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Size caps for the expensive engines. All caps are configuration, not
/// hard-wired constants; the CLI exposes them as flags and a config file.
#[derive(Debug, Clone, serde::Deserialize)]
#[serde(default)]
pub struct Caps {
    /// Largest diagram (in boxes) accepted by the Specht-module rank engine.
    pub specht_n_max: usize,
    /// Largest `|C_D| * |R_D|` product accepted when expanding a symmetrizer.
    pub symmetrizer_term_cap: u128,
    /// Largest `N^n` accepted by the tensor-space Schur module engine.
    pub tensor_point_cap: u128,
    /// Largest edge count accepted by the Ehrhart interpolation route.
    pub ehrhart_n_max: usize,
    /// Primary word-sized prime for modular rank computations.
    pub prime: u64,
    /// Secondary prime used for rank agreement checks.
    pub prime_alt: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            specht_n_max: 7,
            symmetrizer_term_cap: 10_000_000,
            tensor_point_cap: 1_000_000,
            ehrhart_n_max: 7,
            prime: 2_147_483_647,
            prime_alt: 2_147_483_629,
        }
    }
}
