//! Adjustable node centrality on weighted graphs.
//!
//! The crate computes six `alpha`-tunable centralities (degree and closeness,
//! each in product, power-sum and logarithmic form), the range of `alpha` over
//! which they are representable in binary64, and the *useful interval*: the
//! span of `alpha` between the first and last change in node ranking. The
//! latter reduces to the leftmost and rightmost crossings of a set of lines,
//! found in `O(n log n)` by [`extrema`].
//!
//! Seeded random models ([`generators`]) provide null graphs and
//! degree-preserving surrogates.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod centrality;
pub mod error;
pub mod extrema;
pub mod generators;
pub mod graph;
pub mod intervals;
pub mod numeric;

pub use centrality::{
    closeness, closeness_log, closeness_prod, closeness_sum, degree_log, degree_prod, degree_sum,
    profile, rank_nodes, rank_nodes_approx, safe_interval, weighted_closeness, Benchmarks, CentralityProfile,
    MeasureKind, RangeCheck, Reach, Summarization,
};
pub use error::{Error, Result};
pub use extrema::{
    brute_force_extrema, leftmost_intersection, pairwise_intersection, rightmost_intersection,
    Crossing, ExtremaResult, Intersection, Line,
};
pub use generators::{derive_seed, er_normal, rewire, wrg, wrg_with, ModelConfig};
pub use graph::{symmetrize_directed, Edge, GraphBuilder, ValidationReport, WeightedGraph};
pub use intervals::{
    closeness_lines, degree_lines, degree_useful_interval, closeness_useful_interval,
    useful_interval, Degeneracy, UsefulInterval,
};
pub use numeric::{interval_length, ExtendedInterval};
