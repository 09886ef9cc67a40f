//! Graph-backed model spaces: the diamond, the diamond chain, the tee, the
//! circle, and a windowed real line. All set computations on these models
//! are exact.
//!
//! Unbounded carriers (line, tee ray, diamond chain) are materialized as
//! finite windows; the artificial end vertices are recorded so that queries
//! near them can be flagged as boundary-affected instead of silently
//! reporting window artifacts as geometry.

use rand::{Rng, RngCore};

use crate::exact::{rat, to_f64, Rat};
use crate::graph::{MetricGraph, Vertex};
use crate::metric_core::CompactSet;
use crate::point::{GraphPoint, Point};
use crate::spaces::{Flag, GroundTruth, ModelSpace};
use crate::Error;

#[derive(Debug, Clone)]
pub enum GraphKind {
    Diamond,
    DiamondChain { k: i64 },
    Tee { ray: f64 },
    RealLine { half_width: f64 },
    Circle { circumference: f64 },
}

pub struct GraphSpace {
    graph: MetricGraph,
    kind: GraphKind,
    ground_truth: GroundTruth,
}

const SQRT2: f64 = std::f64::consts::SQRT_2;

impl GraphSpace {
    /// The diamond `|u| + |v| = 1` with the intrinsic metric induced from
    /// the Euclidean plane: a 4-cycle with sides of length sqrt(2). No point
    /// satisfies strong geodesic extendibility.
    pub fn diamond() -> Result<Self, Error> {
        let coords = [[1.0, 0.0], [0.0, 1.0], [-1.0, 0.0], [0.0, -1.0]];
        let vertices = coords
            .iter()
            .map(|c| Vertex {
                label: format!("({},{})", c[0], c[1]),
                coords: Some(*c),
            })
            .collect();
        let edges = vec![(0, 1, SQRT2), (1, 2, SQRT2), (2, 3, SQRT2), (3, 0, SQRT2)];
        let graph = MetricGraph::new("diamond", vertices, edges, vec![])?;
        Ok(GraphSpace {
            graph,
            kind: GraphKind::Diamond,
            ground_truth: GroundTruth {
                strongly_geodesically_complete: Flag::No,
                unique_midpoints: Flag::No,
            },
        })
    }

    /// A window of the infinite chain of diamonds centered at even integers,
    /// diamonds `n = -k .. k`. Extendibility holds exactly at the junction
    /// points `(2n+1, 0)` away from the window ends.
    pub fn diamond_chain(k: i64) -> Result<Self, Error> {
        if k < 1 {
            return Err(Error::Invalid("diamond_chain requires k >= 1".into()));
        }
        let mut vertices = Vec::new();
        let mut spine = Vec::new(); // vertex ids of (2i+1, 0), i = -k-1 ..= k
        for i in -k - 1..=k {
            let x = (2 * i + 1) as f64;
            spine.push(vertices.len());
            vertices.push(Vertex {
                label: format!("({x},0)"),
                coords: Some([x, 0.0]),
            });
        }
        let mut edges = Vec::new();
        for n in -k..=k {
            let left = spine[(n + k) as usize];
            let right = spine[(n + k + 1) as usize];
            let top = vertices.len();
            vertices.push(Vertex {
                label: format!("({},1)", 2 * n),
                coords: Some([(2 * n) as f64, 1.0]),
            });
            let bottom = vertices.len();
            vertices.push(Vertex {
                label: format!("({},-1)", 2 * n),
                coords: Some([(2 * n) as f64, -1.0]),
            });
            edges.push((left, top, SQRT2));
            edges.push((top, right, SQRT2));
            edges.push((left, bottom, SQRT2));
            edges.push((bottom, right, SQRT2));
        }
        let ends = vec![spine[0], spine[(2 * k + 1) as usize]];
        let graph = MetricGraph::new("diamond_chain", vertices, edges, ends)?;
        Ok(GraphSpace {
            graph,
            kind: GraphKind::DiamondChain { k },
            ground_truth: GroundTruth {
                strongly_geodesically_complete: Flag::No,
                unique_midpoints: Flag::No,
            },
        })
    }

    /// The tee: `[-1, ray] x {0}` with a unit stub `{0} x [0,1]`, the
    /// horizontal part windowed at `ray`. The ball map is non-injective:
    /// radius-2 balls at `(-1,0)` and `(0,1)` coincide.
    pub fn tee(ray: f64) -> Result<Self, Error> {
        if !ray.is_finite() || ray <= 1.0 {
            return Err(Error::Invalid("tee ray length must exceed 1".into()));
        }
        let vertices = vec![
            Vertex {
                label: "(-1,0)".into(),
                coords: Some([-1.0, 0.0]),
            },
            Vertex {
                label: "(0,0)".into(),
                coords: Some([0.0, 0.0]),
            },
            Vertex {
                label: "(0,1)".into(),
                coords: Some([0.0, 1.0]),
            },
            Vertex {
                label: format!("({ray},0)"),
                coords: Some([ray, 0.0]),
            },
        ];
        let edges = vec![(0, 1, 1.0), (1, 2, 1.0), (1, 3, ray)];
        let graph = MetricGraph::new("tee", vertices, edges, vec![3])?;
        Ok(GraphSpace {
            graph,
            kind: GraphKind::Tee { ray },
            ground_truth: GroundTruth {
                strongly_geodesically_complete: Flag::No,
                unique_midpoints: Flag::Yes,
            },
        })
    }

    /// The real line windowed to `[-half_width, half_width]` as a single
    /// edge. Exact interval arithmetic makes this the reference strongly
    /// geodesically complete model.
    pub fn real_line(half_width: f64) -> Result<Self, Error> {
        if !half_width.is_finite() || half_width <= 0.0 {
            return Err(Error::InvalidLength(half_width));
        }
        let vertices = vec![
            Vertex {
                label: format!("({},0)", -half_width),
                coords: Some([-half_width, 0.0]),
            },
            Vertex {
                label: format!("({half_width},0)"),
                coords: Some([half_width, 0.0]),
            },
        ];
        let graph = MetricGraph::new(
            "real_line",
            vertices,
            vec![(0, 1, 2.0 * half_width)],
            vec![0, 1],
        )?;
        Ok(GraphSpace {
            graph,
            kind: GraphKind::RealLine { half_width },
            ground_truth: GroundTruth {
                strongly_geodesically_complete: Flag::Yes,
                unique_midpoints: Flag::Yes,
            },
        })
    }

    /// A circle of the given circumference: two vertices joined by two
    /// parallel arcs of length `circumference / 2`.
    pub fn circle(circumference: f64) -> Result<Self, Error> {
        if !circumference.is_finite() || circumference <= 0.0 {
            return Err(Error::InvalidLength(circumference));
        }
        let half = circumference / 2.0;
        let vertices = vec![
            Vertex {
                label: "arc 0".into(),
                coords: None,
            },
            Vertex {
                label: format!("arc {half}"),
                coords: None,
            },
        ];
        let graph = MetricGraph::new("circle", vertices, vec![(0, 1, half), (0, 1, half)], vec![])?;
        Ok(GraphSpace {
            graph,
            kind: GraphKind::Circle { circumference },
            ground_truth: GroundTruth {
                strongly_geodesically_complete: Flag::No,
                unique_midpoints: Flag::No,
            },
        })
    }

    pub fn kind(&self) -> &GraphKind {
        &self.kind
    }

    pub fn metric_graph(&self) -> &MetricGraph {
        &self.graph
    }

    /// Locates a planar coordinate on the embedded complex (graphs with an
    /// embedding only).
    pub fn point_by_coords(&self, coords: [f64; 2]) -> Option<Point> {
        self.graph.point_by_coords(coords, 1e-9).map(Point::Graph)
    }

    fn graph_point<'a>(&self, p: &'a Point) -> Result<&'a GraphPoint, Error> {
        match p {
            Point::Graph(g) if self.graph.contains(g) => Ok(g),
            _ => Err(Error::OutsideCarrier(format!(
                "{p:?} is not a point of {}",
                self.graph.id()
            ))),
        }
    }
}

impl ModelSpace for GraphSpace {
    fn id(&self) -> &str {
        self.graph.id()
    }

    fn ground_truth(&self) -> GroundTruth {
        self.ground_truth
    }

    fn contains(&self, p: &Point) -> bool {
        matches!(p, Point::Graph(g) if self.graph.contains(g))
    }

    fn distance(&self, p: &Point, q: &Point) -> Result<f64, Error> {
        Ok(to_f64(
            &self
                .graph
                .distance(self.graph_point(p)?, self.graph_point(q)?),
        ))
    }

    fn distance_exact(&self, p: &Point, q: &Point) -> Option<Rat> {
        let (p, q) = (p.as_graph()?, q.as_graph()?);
        (self.graph.contains(p) && self.graph.contains(q)).then(|| self.graph.distance(p, q))
    }

    fn closed_ball(&self, x: &Point, t: f64, _eps: f64) -> Result<CompactSet, Error> {
        if t < 0.0 || !t.is_finite() {
            return Err(Error::InvalidLength(t));
        }
        let gp = self.graph_point(x)?;
        CompactSet::intervals(self.graph.ball(gp, &rat(t)))
    }

    fn sphere(&self, x: &Point, t: f64, _eps: f64) -> Result<Vec<Point>, Error> {
        if t <= 0.0 {
            return Err(Error::ZeroSphereRadius);
        }
        let gp = self.graph_point(x)?;
        Ok(self
            .graph
            .sphere(gp, &rat(t))
            .into_iter()
            .map(Point::Graph)
            .collect())
    }

    fn midpoint(&self, p: &Point, q: &Point) -> Result<Option<Point>, Error> {
        let m = self
            .graph
            .midpoint(self.graph_point(p)?, self.graph_point(q)?);
        Ok(Some(Point::Graph(m)))
    }

    fn extend_ray(&self, y: &Point, x: &Point, r: f64) -> Option<Point> {
        // Only the line supports closed-form ray extension; the other graph
        // models go through exact sphere checks instead.
        if !matches!(self.kind, GraphKind::RealLine { .. }) {
            return None;
        }
        let (yg, xg) = (y.as_graph()?, x.as_graph()?);
        let (yy, xx) = (self.line_coordinate(yg)?, self.line_coordinate(xg)?);
        if yy == xx || r < 0.0 {
            return None;
        }
        let target = if xx >= yy {
            &xx + &rat(r)
        } else {
            &xx - &rat(r)
        };
        self.point_at_line(&target)
    }

    fn sample_point(&self, rng: &mut dyn RngCore, window: f64) -> Point {
        match &self.kind {
            GraphKind::RealLine { half_width } => {
                let half = (window / 2.0).min(half_width - 1.0);
                let x = rng.gen_range(-half..half);
                line_point(self, x).expect("within window")
            }
            GraphKind::Tee { ray } => {
                // Uniform by length over the sub-complex within the window.
                let reach = (window / 2.0).min(ray - 1.0).max(1.0);
                let total = 2.0 + reach;
                let mut t = rng.gen_range(0.0..total);
                if t <= 1.0 {
                    // left arm [-1, 0]
                    return Point::Graph(self.graph.canonical(GraphPoint::interior(0, rat(t))));
                }
                t -= 1.0;
                if t <= 1.0 {
                    return Point::Graph(self.graph.canonical(GraphPoint::interior(1, rat(t))));
                }
                t -= 1.0;
                Point::Graph(self.graph.canonical(GraphPoint::interior(2, rat(t))))
            }
            _ => Point::Graph(self.graph.sample_point(rng)),
        }
    }

    fn graph(&self) -> Option<&MetricGraph> {
        Some(&self.graph)
    }

    fn boundary_clearance(&self, p: &Point) -> Option<f64> {
        let gp = p.as_graph()?;
        self.graph.boundary_distance(gp).map(|d| to_f64(&d))
    }
}

impl GraphSpace {
    fn line_coordinate(&self, p: &GraphPoint) -> Option<Rat> {
        let GraphKind::RealLine { half_width } = self.kind else {
            return None;
        };
        let w = rat(half_width);
        Some(match p {
            GraphPoint::Vertex(0) => -w,
            GraphPoint::Vertex(_) => w,
            GraphPoint::Interior { offset, .. } => offset - &w,
        })
    }

    fn point_at_line(&self, x: &Rat) -> Option<Point> {
        let GraphKind::RealLine { half_width } = self.kind else {
            return None;
        };
        let w = rat(half_width);
        let offset = x + &w;
        if offset < Rat::from_integer(0.into()) || offset > rat(2.0 * half_width) {
            return None;
        }
        Some(Point::Graph(
            self.graph.canonical(GraphPoint::interior(0, offset)),
        ))
    }
}

/// The point of the windowed real line at coordinate `x`.
pub fn line_point(space: &GraphSpace, x: f64) -> Result<Point, Error> {
    let GraphKind::RealLine { half_width } = space.kind else {
        return Err(Error::OutsideCarrier(
            "line_point requires the real_line model".into(),
        ));
    };
    if x.abs() > half_width {
        return Err(Error::OutsideCarrier(format!(
            "{x} outside line window ±{half_width}"
        )));
    }
    let offset = &rat(x) + &rat(half_width);
    Ok(Point::Graph(
        space.graph.canonical(GraphPoint::interior(0, offset)),
    ))
}

/// The point of the circle at arc-length position `arc` (measured from the
/// vertex at 0, wrapping modulo the circumference).
pub fn circle_point(space: &GraphSpace, arc: f64) -> Result<Point, Error> {
    let GraphKind::Circle { circumference } = space.kind else {
        return Err(Error::OutsideCarrier(
            "circle_point requires the circle model".into(),
        ));
    };
    let c = rat(circumference);
    let half = rat(circumference / 2.0);
    let mut a = rat(arc);
    let zero = Rat::from_integer(0.into());
    while a < zero {
        a = &a + &c;
    }
    while a >= c {
        a = &a - &c;
    }
    // Edge 0 carries arcs [0, C/2] from vertex 0; edge 1 carries the
    // complementary arcs, also parameterized from vertex 0, so the arc
    // position `a > C/2` sits at offset `C - a`.
    let gp = if a <= half {
        GraphPoint::interior(0, a)
    } else {
        GraphPoint::interior(1, &c - &a)
    };
    Ok(Point::Graph(space.graph.canonical(gp)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_int;

    #[test]
    fn diamond_two_midpoints_distance() {
        // Distance between the midpoints of opposite sides is 2*sqrt(2),
        // realized by two distinct geodesic segments.
        let s = GraphSpace::diamond().unwrap();
        let x = s.point_by_coords([-0.5, 0.5]).unwrap();
        let y = s.point_by_coords([0.5, -0.5]).unwrap();
        let d = s.distance_exact(&x, &y).unwrap();
        assert_eq!(d, rat(2.0 * SQRT2));
        assert!((to_f64(&d) - 2.828427).abs() < 1e-6);
    }

    #[test]
    fn tee_equal_balls_at_distinct_parameters() {
        let s = GraphSpace::tee(12.0).unwrap();
        let p = s.point_by_coords([-1.0, 0.0]).unwrap();
        let q = s.point_by_coords([0.0, 1.0]).unwrap();
        let bp = s.closed_ball(&p, 2.0, 0.0).unwrap();
        let bq = s.closed_ball(&q, 2.0, 0.0).unwrap();
        assert_eq!(bp.as_intervals().unwrap(), bq.as_intervals().unwrap());
    }

    #[test]
    fn circle_ball_of_half_circumference_is_everything() {
        let c = 2.0 * std::f64::consts::PI;
        let s = GraphSpace::circle(c).unwrap();
        let x = circle_point(&s, 0.0).unwrap();
        let y = circle_point(&s, 1.0).unwrap();
        let bx = s.closed_ball(&x, c / 2.0, 0.0).unwrap();
        let by = s.closed_ball(&y, c / 2.0, 0.0).unwrap();
        assert_eq!(bx.as_intervals().unwrap(), by.as_intervals().unwrap());
        // And the whole circle it is.
        let g = s.graph().unwrap();
        for iv in &bx.as_intervals().unwrap().intervals {
            assert!(iv.lo == rat_int(0) && iv.hi == g.edge(iv.edge).len);
        }
    }

    #[test]
    fn circle_distance_wraps() {
        let c = 2.0 * std::f64::consts::PI;
        let s = GraphSpace::circle(c).unwrap();
        let x = circle_point(&s, 0.0).unwrap();
        let y = circle_point(&s, 1.0).unwrap();
        assert_eq!(s.distance(&x, &y).unwrap(), 1.0);
        let z = circle_point(&s, c - 0.5).unwrap();
        assert!((s.distance(&x, &z).unwrap() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn chain_window_ends_are_flagged() {
        let s = GraphSpace::diamond_chain(3).unwrap();
        let end = s.point_by_coords([7.0, 0.0]).unwrap();
        assert_eq!(s.boundary_clearance(&end), Some(0.0));
        let mid = s.point_by_coords([1.0, 0.0]).unwrap();
        let clearance = s.boundary_clearance(&mid).unwrap();
        assert!((clearance - 3.0 * 2.0 * SQRT2).abs() < 1e-9);
    }
}
