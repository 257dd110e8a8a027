//! Bipartite Turán numbers and spectral extrema for linear forests.
//!
//! The crate has three layers:
//!
//! * exact machinery — [`graph`], [`canon`], [`graph6`], [`forest`],
//!   [`embed`], [`construct`] and the closed forms in [`formulas`];
//! * ground truth at desk scale — the exhaustive [`oracle`], which recomputes
//!   every extremal count and extremal-graph set by branch-and-bound and is
//!   what the formula layer is validated against;
//! * numerics — [`spectral`], power iteration generic over the float scalar
//!   via `num-traits`, with `f64` aliases below.

pub mod canon;
pub mod construct;
pub mod embed;
pub mod forest;
pub mod formulas;
pub mod graph;
pub mod graph6;
pub mod oracle;
pub mod report;
pub mod spectral;

pub use canon::{canonical_key_bipartite, canonical_key_general, CanonicalKey};
pub use construct::{build_family, BuiltGraph, FamilyDescriptor};
pub use embed::{
    contains_forest, contains_forest_through_edge, find_path, verify_certificate,
    EmbeddingCertificate, ForestSearch,
};
pub use forest::LinearForestSpec;
pub use formulas::{
    check_p7_lemmas, ex_forest_bipartite, ex_forest_general, ex_path_bipartite, ex_path_general,
    ex_path_upper, f_helper, p_value, spectral_bound, FormulaResult, Validity,
};
pub use graph::{AdjacencyHost, BipartiteGraph, GeneralGraph};
pub use oracle::{
    brute_ex_bipartite, brute_ex_general, brute_spectral_max, threshold_scan, OracleBudget,
    OracleReport, SpectralSearchMode, SpectralSearchReport, ThresholdScan,
};
pub use spectral::{least_eigenvalue, least_eigenvalue_direct, spectral_radius};

/// Concrete scalar aliases; the numeric layer itself is generic over
/// `num_traits::Float`.
pub type Scalar = f64;
pub type SpectralResult64 = spectral::SpectralResult<f64>;
pub type SpectralResult32 = spectral::SpectralResult<f32>;
