//! Approximate minimum dominating sets in two stages: a greedy selection by
//! maximum active degree, then purification of the forest formed by tied
//! pairs of selected vertices.
//!
//! ```
//! use domset::{generators::path, solve, SolverConfig};
//!
//! let run = solve(&path(5), &SolverConfig::default()).unwrap();
//! assert_eq!(run.result.greedy_set, vec![1, 2, 3]);
//! assert_eq!(run.result.purified_set, vec![1, 3]);
//! ```

pub mod bench;
pub mod bounds;
pub mod error;
pub mod forest;
pub mod generators;
pub mod graph;
pub mod greedy;
pub mod io;
pub mod oracle;
pub mod purify;
pub mod solver;

pub use bounds::{evaluate_bounds, gamma_bounds, GammaBounds, RatioReport};
pub use error::{Error, Result};
pub use forest::{build_forest, tied_pairs, ClusterForest, TiedPairSet};
pub use graph::{Graph, Vertex, VertexSet};
pub use greedy::{greedy_dominating_set, Certificate, CertificateKind, GreedyTrace, TieBreak};
pub use oracle::{exact_gamma, has_system_of_representatives, OracleResult};
pub use purify::{ensure_minimal, purify_all, PurifyMode, PurifyState, Status};
pub use solver::{solve, DominationResult, Solution, SolverConfig};
