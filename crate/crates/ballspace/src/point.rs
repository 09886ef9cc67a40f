//! Points of the catalogued model spaces.
//!
//! A single enum covers every carrier so that heterogeneous catalogs, report
//! serialization and the scenario-driven CLI can treat points uniformly.
//! Each model validates that the points it receives live on its own carrier.

use serde::Serialize;

use crate::exact::{rat_abs, to_f64, Rat};

/// Identifier of an edge inside a [`crate::graph::MetricGraph`].
pub type EdgeId = usize;
/// Identifier of a vertex inside a [`crate::graph::MetricGraph`].
pub type VertexId = usize;

/// A point of a metric graph: either a vertex or an interior point of an
/// edge, addressed by an exact offset from the edge's first endpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphPoint {
    Vertex(VertexId),
    /// Interior point: `0 < offset < length(edge)`.
    Interior {
        edge: EdgeId,
        offset: Rat,
    },
}

impl GraphPoint {
    pub fn interior(edge: EdgeId, offset: Rat) -> Self {
        GraphPoint::Interior { edge, offset }
    }
}

/// A point of one of the catalogued model spaces.
#[derive(Debug, Clone, PartialEq)]
pub enum Point {
    /// Coordinates in R^n. Shared by the Euclidean, taxicab and half-plane
    /// models.
    Euclid(Vec<f64>),
    /// Hyperboloid-model coordinates `(x0, x1, x2)` with
    /// `-x0^2 + x1^2 + x2^2 = -1`, `x0 > 0`.
    Hyperboloid([f64; 3]),
    /// Point of a metric graph.
    Graph(GraphPoint),
    /// Point of a product space.
    Pair(Box<Point>, Box<Point>),
    /// Point of a reparameterized line model.
    Line(f64),
}

impl Point {
    pub fn euclid(coords: &[f64]) -> Self {
        Point::Euclid(coords.to_vec())
    }

    pub fn pair(x: Point, y: Point) -> Self {
        Point::Pair(Box::new(x), Box::new(y))
    }

    pub fn as_euclid(&self) -> Option<&[f64]> {
        match self {
            Point::Euclid(c) => Some(c),
            _ => None,
        }
    }

    pub fn as_graph(&self) -> Option<&GraphPoint> {
        match self {
            Point::Graph(g) => Some(g),
            _ => None,
        }
    }

    /// Approximate equality for points of the same kind; exact on graph
    /// points. Used by samplers and tests, not by the exact kernels.
    pub fn close_to(&self, other: &Point, tol: f64) -> bool {
        match (self, other) {
            (Point::Euclid(a), Point::Euclid(b)) => {
                a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
            }
            (Point::Hyperboloid(a), Point::Hyperboloid(b)) => {
                a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
            }
            (Point::Graph(a), Point::Graph(b)) => match (a, b) {
                (GraphPoint::Vertex(u), GraphPoint::Vertex(v)) => u == v,
                (
                    GraphPoint::Interior {
                        edge: e1,
                        offset: o1,
                    },
                    GraphPoint::Interior {
                        edge: e2,
                        offset: o2,
                    },
                ) => e1 == e2 && to_f64(&rat_abs(&(o1 - o2))) <= tol,
                _ => false,
            },
            (Point::Pair(a1, a2), Point::Pair(b1, b2)) => {
                a1.close_to(b1, tol) && a2.close_to(b2, tol)
            }
            (Point::Line(a), Point::Line(b)) => (a - b).abs() <= tol,
            _ => false,
        }
    }
}

/// Reporting view of a point: a flat coordinate vector plus a label, shown
/// with six significant digits in text reports.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct PointRepr {
    pub coords: Vec<f64>,
    pub label: String,
}

/// Formats `x` with six significant digits.
pub fn sig6(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let mag = x.abs().log10().floor() as i32;
    let decimals = (5 - mag).max(0) as usize;
    format!("{x:.decimals$}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig6_matches_expected_forms() {
        assert_eq!(sig6(std::f64::consts::SQRT_2), "1.41421");
        assert_eq!(sig6(0.0), "0");
        assert_eq!(sig6(123456.7), "123457");
        assert_eq!(sig6(0.001234567), "0.00123457");
    }
}
