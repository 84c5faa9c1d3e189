//! Transversal matroids and their single-element contractions.
//!
//! The crate decides whether contracting one element of a transversal matroid
//! leaves a transversal matroid, builds a presentation of the contraction when
//! it does, and implements path-circular matroids, a minor-closed class of
//! transversal matroids containing the bicircular and multi-path matroids.
//!
//! All oracles are matching based. Exhaustive operations are guarded by a
//! ground-set bound ([`DEFAULT_MAX_GROUND`] by default).

pub mod contraction;
pub mod cotransversal;
pub mod error;
pub mod ground;
pub mod matching;
pub mod matroid;
pub mod oracle;
pub mod path_circular;
pub mod presentation;
pub mod rng;
pub mod selftest;

pub use contraction::{
    contract_presentation, induced_support, is_contraction_transversal, is_presenting,
    minimal_presenting_graph, pivot_indices, ContractionCheck, PivotKind, PresentingGraph,
};
pub use cotransversal::{
    alpha, alpha_presentation, alpha_table, cyclic_flats, exchange_set, is_cotransversal,
    is_cyclic_flat, maximal_presentation, AlphaTable, CotransversalVerdict,
};
pub use error::{Error, Result};
pub use ground::{ElementSet, GroundSet, DEFAULT_MAX_GROUND};
pub use matroid::{
    first_difference, has_transversal, loops_and_coloops, matroids_equal, max_partial_transversal,
    normalize_presentation, restrict, Dual, MinorMatroid, RankOracle, RankTable,
    TransversalMatroid,
};
pub use path_circular::{PathCircularInstance, SimpleGraph};
pub use presentation::Presentation;
