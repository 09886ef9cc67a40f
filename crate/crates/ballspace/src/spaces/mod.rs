//! Catalog of model length spaces implementing a common contract.
//!
//! Every space the verification suites run against is registered here:
//! analytic models (Euclidean, taxicab, hyperbolic plane, half-plane,
//! reparameterized lines), graph-backed models (diamond, diamond chain, tee,
//! circle, windowed real line) and max-metric products. Each entry carries
//! its ground truth for strong geodesic completeness and midpoint
//! uniqueness, which the suites compare their verdicts against.

pub mod catalog;
mod euclidean;
mod graphs;
mod halfplane;
pub(crate) mod hyperbolic;
mod product;
pub(crate) mod pullback;
mod taxicab;

pub use euclidean::EuclideanSpace;
pub use graphs::{circle_point, line_point, GraphSpace};
pub use halfplane::HalfPlane;
pub use hyperbolic::HyperbolicPlane;
pub use product::ProductMax;
pub use pullback::PullbackLine;
pub use taxicab::TaxicabR2;

use rand::RngCore;
use serde::Serialize;

use crate::exact::Rat;
use crate::graph::MetricGraph;
use crate::metric_core::CompactSet;
use crate::point::Point;
use crate::Error;

/// Three-valued ground-truth flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Flag {
    Yes,
    No,
    Unknown,
}

/// Recorded ground truth of a catalogued model.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct GroundTruth {
    pub strongly_geodesically_complete: Flag,
    pub unique_midpoints: Flag,
}

/// Common contract of all model spaces.
///
/// Models are immutable after construction; all methods are pure and safe to
/// call concurrently.
pub trait ModelSpace: Send + Sync {
    fn id(&self) -> &str;

    fn ground_truth(&self) -> GroundTruth;

    fn contains(&self, p: &Point) -> bool;

    /// The model's metric. Exact shortest-path length on graphs (rounded
    /// once to `f64`); closed-form on analytic models.
    fn distance(&self, p: &Point, q: &Point) -> Result<f64, Error>;

    /// Exact rational distance, available on graph-backed models.
    fn distance_exact(&self, _p: &Point, _q: &Point) -> Option<Rat> {
        None
    }

    /// Closed metric ball. Exact interval union on graph-backed models
    /// (`eps` ignored); ε-net elsewhere. `closed_ball(x, 0, _)` is the
    /// singleton `{x}`.
    fn closed_ball(&self, x: &Point, t: f64, eps: f64) -> Result<CompactSet, Error>;

    /// Metric sphere `{p : d(x,p) = t}`, `t > 0`: the exact finite set on
    /// graphs, an ε-net on analytic models.
    fn sphere(&self, x: &Point, t: f64, eps: f64) -> Result<Vec<Point>, Error>;

    /// A midpoint `m` with `d(p,m) = d(m,q) = d(p,q)/2`, when the model
    /// provides one.
    fn midpoint(&self, _p: &Point, _q: &Point) -> Result<Option<Point>, Error> {
        Ok(None)
    }

    /// Extends the geodesic from `y` through `x` by `r` past `x`, returning
    /// a point `p` with `d(x,p) = r` and `d(y,p) = d(y,x) + r`, when the
    /// model can construct one (and the extension stays on the carrier).
    fn extend_ray(&self, _y: &Point, _x: &Point, _r: f64) -> Option<Point> {
        None
    }

    /// Random point for sampling suites; `window` bounds the region (side
    /// length or diameter, model-specific).
    fn sample_point(&self, rng: &mut dyn RngCore, window: f64) -> Point;

    /// The underlying 1-complex for graph-backed models.
    fn graph(&self) -> Option<&MetricGraph> {
        None
    }

    /// Whether set computations on this model are exact.
    fn is_exact(&self) -> bool {
        self.graph().is_some()
    }

    /// Distance from `p` to the nearest artificial window boundary, for
    /// models that truncate an unbounded space. `None` means none exists.
    fn boundary_clearance(&self, _p: &Point) -> Option<f64> {
        None
    }
}

/// Reporting view of a point: flat coordinates plus a readable label.
pub fn report_point(space: &dyn ModelSpace, p: &Point) -> crate::point::PointRepr {
    use crate::point::{GraphPoint, PointRepr};
    let fmt_coords = |c: &[f64]| {
        let inner: Vec<String> = c.iter().map(|x| crate::point::sig6(*x)).collect();
        format!("({})", inner.join(", "))
    };
    match p {
        Point::Euclid(c) => PointRepr {
            coords: c.clone(),
            label: fmt_coords(c),
        },
        Point::Hyperboloid(c) => PointRepr {
            coords: c.to_vec(),
            label: fmt_coords(c),
        },
        Point::Line(x) => PointRepr {
            coords: vec![*x],
            label: crate::point::sig6(*x),
        },
        Point::Pair(a, b) => {
            let (ra, rb) = (report_point(space, a), report_point(space, b));
            let mut coords = ra.coords;
            coords.extend(rb.coords);
            PointRepr {
                coords,
                label: format!("({}, {})", ra.label, rb.label),
            }
        }
        Point::Graph(g) => {
            if let Some(graph) = space.graph() {
                if let Some(c) = graph.coords_of(g) {
                    return PointRepr {
                        coords: c.clone(),
                        label: fmt_coords(&c),
                    };
                }
            }
            let label = match g {
                GraphPoint::Vertex(v) => format!("vertex #{v}"),
                GraphPoint::Interior { edge, offset } => {
                    format!(
                        "edge #{edge} @ {}",
                        crate::point::sig6(crate::exact::to_f64(offset))
                    )
                }
            };
            PointRepr {
                coords: vec![],
                label,
            }
        }
    }
}

/// Catalog entry describing a registered model.
#[derive(Debug, Clone, Serialize)]
pub struct ModelInfo {
    pub id: &'static str,
    pub ground_truth: GroundTruth,
    pub parameters: &'static str,
}

/// Construction parameters accepted by the catalog.
#[derive(Debug, Clone, Default)]
pub struct ModelParams {
    /// Dimension for `euclidean_rn` (default 2; ball nets support 1 and 2).
    pub dim: Option<usize>,
    /// Window half-count of diamonds for `diamond_chain` (default 3).
    pub k: Option<i64>,
    /// Circumference for `circle` (default 2π).
    pub circumference: Option<f64>,
    /// Factor model ids for `product_max` (default real_line × real_line).
    pub factor_x: Option<String>,
    pub factor_y: Option<String>,
    /// Family index for `pullback_line` (default 8; must be ≥ 2).
    pub family_n: Option<u32>,
}
