//! Construction and analysis of low average-shortest-path-length (ASPL)
//! regular graphs of diameter 3.
//!
//! * [`graph`], [`distance`]: regular graphs, switch randomization, exact
//!   BFS distances.
//! * [`motifs`], [`bounds`]: triangle/square and k-multiple counts, the
//!   inclusion–exclusion terms `T(m)`, the exact ASPL identity for diameter
//!   3 and its truncated upper/lower bounds.
//! * [`tables`]: path-count tables giving `O(1)` evaluation of the change
//!   in `g = 3△ + 2□` under a switch, with `O(d²)` updates.
//! * [`ifi`], [`anneal`], [`run`]: first-improvement and simulated-annealing
//!   optimizers driven by `g`.
//!
//! Real-valued results are generic over [`Scalar`]: use [`Real`] for speed
//! and [`Rational`] for exact comparisons.

pub mod anneal;
pub mod bounds;
pub mod distance;
pub mod error;
pub mod graph;
pub mod ifi;
pub mod io;
pub mod motifs;
pub mod oracle;
pub mod run;
pub mod scalar;
pub mod search;
pub mod switch;
pub mod tables;

pub use anneal::{sa_acceptance, sa_run, AnnealState, LogSchedule, SaConfig};
pub use bounds::{
    aspl_bound, aspl_equality, aspl_gap, moore_bound, Bound, BoundsReport, Direction,
};
pub use distance::{bfs_distances, distance_summary, Diameter, DistanceSummary};
pub use error::{Error, Result};
pub use graph::{random_regular, randomize, Edge, Graph, Node};
pub use ifi::{ifi_run, IfiConfig, IfiState};
pub use motifs::{
    count_k_multiple, count_squares, count_triangles, evaluation, t_of_m, CommonNeighborProfile,
    MotifCounts,
};
pub use oracle::brute_force_motifs;
pub use run::{optimize, verify_diameter3, Algorithm, GraphStats, RunConfig, RunReport};
pub use scalar::Scalar;
pub use search::{PhaseReport, SearchState, StopReason};
pub use switch::{propose_switch, Rewire, SwitchMove};
pub use tables::{PathTables, SwitchDelta};

/// Exact rational scalar.
pub type Rational = num_rational::Ratio<i128>;

/// Floating-point scalar.
pub type Real = f64;

pub type ExactBoundsReport = BoundsReport<Rational>;
pub type RealBoundsReport = BoundsReport<Real>;
pub type Schedule = LogSchedule<Real>;
