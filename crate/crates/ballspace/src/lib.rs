//! Computational toolkit for complete, locally compact length spaces:
//! Hausdorff distances between compact sets, metric graphs with first-class
//! edge-interior points, geodesic extendibility checks, the space of compact
//! balls with its taxicab comparison metric, lifted isometric actions and
//! quotients, and stability under uniformly convergent metric families.
//!
//! Graph-backed models compute exactly over arbitrary-precision rationals;
//! analytic models carry explicit ε-net resolutions and every verifier
//! reports its error budget alongside its verdict.

pub mod actions;
pub mod ballmap;
pub mod convergence;
pub mod exact;
pub mod geodesy;
pub mod graph;
pub mod metric_core;
pub(crate) mod nn;
pub mod point;
pub mod spaces;

use thiserror::Error as ThisError;

pub use exact::{rat, to_f64, Rat};
pub use metric_core::{CompactSet, HausdorffResult, IntervalUnion, NetSet};
pub use point::{GraphPoint, Point};

/// Errors surfaced by the toolkit.
#[derive(Debug, ThisError)]
pub enum Error {
    #[error("model mismatch: expected {expected}, found {found}")]
    ModelMismatch { expected: String, found: String },
    #[error("compact-set representations must not be mixed in one call")]
    RepresentationMismatch,
    #[error("empty sets are rejected: balls always contain their center")]
    EmptySet,
    #[error("invalid length {0}: must be non-negative and finite")]
    InvalidLength(f64),
    #[error("reversed interval: require lo <= hi")]
    ReversedInterval,
    #[error("point outside the model carrier: {0}")]
    OutsideCarrier(String),
    #[error("sphere radius must be positive (radius 0 is the singleton ball)")]
    ZeroSphereRadius,
    #[error("enumeration bound too small: {0}")]
    BoundTooSmall(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unsupported operation: {0}")]
    Unsupported(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}
