//! Decision procedures for spanning path systems with ≥3-vertex paths:
//! existence, coveredness (every edge on some factor), and uniformity
//! (every single-edge deletion stays covered), decided both by exhaustive
//! search and by the structural sun-component criteria, with parameter-based
//! sufficient-condition checks and a validation harness that cross-examines
//! every route against the others on small graphs.

pub mod criteria;
pub mod factor;
pub mod families;
pub mod formats;
pub mod graph;
pub mod harness;
pub mod matching;
pub mod params;
pub mod rational;
pub mod sun;

pub use criteria::{
    covered_check_bruteforce, covered_check_criterion, cross_validate, is_uniform,
    is_uniform_pairwise, kaneko_check, CoverageFailure, CoveredVerdict, CriteriaError,
    CriterionVerdict, CriterionWitness, CrossReport, InnerVerdict, UniformRoute, UniformVerdict,
};
pub use factor::{
    covers_edge_set, find_p3_factor, has_p3_factor, FactorError, PathFactor, SearchOptions,
};
pub use graph::{EdgeRef, Graph, GraphError, VertexSet, MAX_VERTICES};
pub use matching::{has_perfect_matching, is_factor_critical, maximum_matching, Matching};
pub use params::{
    check_thm13_hypothesis, check_thm14_hypothesis, edge_connectivity_at_least,
    independence_number, independent_sets, min_degree, neighborhood, vertex_connectivity,
    HypothesisCheck, HypothesisReport, ParamsError, Thm14Params,
};
pub use rational::{ExactRational, RationalError};
pub use sun::{epsilon, is_sun, sun_count, SunError, SunKind, SunVerdict};
