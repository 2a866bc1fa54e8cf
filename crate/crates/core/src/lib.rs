//! Exact tools for interval edge-colorings of simple graphs.
//!
//! An interval `t`-coloring is a proper edge-coloring with colors `1..=t`,
//! all of them used, such that the colors at every vertex form a contiguous
//! range. This crate verifies such colorings, decides whether one exists for
//! a given `t`, computes the full set of feasible `t` for small graphs,
//! evaluates the known upper bounds on that set, and replays the
//! unique-color decomposition argument behind the planar `(3n - 4) / 2` and
//! outerplanar `n - 1` bounds on concrete colorings.

pub mod bounds;
pub mod certify;
pub mod coloring;
pub mod families;
pub mod graph;
pub mod solver;

pub use bounds::{upper_bounds, BoundName, BoundReport};
pub use coloring::{verify_interval, Color, EdgeColoring, VerificationReport};
pub use graph::{parse_graph, profile, Graph, GraphClassProfile, GraphFormat};
pub use solver::{feasible, max_coloring, spectrum, Outcome, SearchConfig, SpectrumResult, Status};
