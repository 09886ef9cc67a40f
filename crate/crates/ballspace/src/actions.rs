//! Isometries, their lifts to the ball space, proper group actions and
//! quotient metrics.
//!
//! An isometry `g` of the base space lifts to the ball space by
//! `(x, r) -> (g(x), r)` on parameters and pointwise on compact sets; the
//! lift preserves the Hausdorff metric and maps each radius slice into
//! itself. Group elements are enumerated rather than composed symbolically:
//! every catalogued action is a cyclic translation group or a finite graph
//! shift, so bounded enumeration with an explicit soundness guard suffices.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::ballmap::{f_map, BallPoint, SampleConfig};
use crate::exact::{rat, rat_abs, rat_min, to_f64, Rat};
use crate::metric_core::{hausdorff, hausdorff_exact, CompactSet, EdgeInterval, NetSet};
use crate::point::{GraphPoint, Point, VertexId};
use crate::spaces::hyperbolic::boost_x;
use crate::spaces::{GraphSpace, ModelSpace};
use crate::Error;

/// Concrete isometries of the catalogued models.
#[derive(Debug, Clone)]
pub enum IsometryKind {
    Identity,
    /// Translation of R^n by a vector.
    EuclidTranslation(Vec<f64>),
    /// Rotation of R^2 about the origin.
    EuclidRotation {
        angle: f64,
    },
    /// Reflection `(x, y) -> (-x, y)`; an isometry of the taxicab plane.
    TaxicabReflectX,
    /// Boost by hyperbolic distance along the first spatial axis.
    HyperbolicTranslation {
        dist: f64,
    },
    /// Shift of the windowed real line by `c` (partial: window interior).
    LineShift {
        c: f64,
    },
    /// Automorphism of an embedded graph given by a coordinate translation;
    /// partial on windowed graphs.
    GraphShift {
        dx: f64,
        dy: f64,
    },
}

/// An isometry with both directions available.
#[derive(Debug, Clone)]
pub struct IsometryDescriptor {
    pub id: String,
    pub kind: IsometryKind,
}

impl IsometryDescriptor {
    pub fn new(id: impl Into<String>, kind: IsometryKind) -> Self {
        IsometryDescriptor {
            id: id.into(),
            kind,
        }
    }

    pub fn identity() -> Self {
        IsometryDescriptor::new("identity", IsometryKind::Identity)
    }

    /// Closed-form composition `self o other` within one parameter family.
    pub fn compose(&self, other: &IsometryDescriptor) -> Option<IsometryDescriptor> {
        use IsometryKind::*;
        let kind = match (&self.kind, &other.kind) {
            (Identity, k) | (k, Identity) => k.clone(),
            (EuclidTranslation(u), EuclidTranslation(v)) if u.len() == v.len() => {
                EuclidTranslation(u.iter().zip(v).map(|(a, b)| a + b).collect())
            }
            (EuclidRotation { angle: a }, EuclidRotation { angle: b }) => {
                EuclidRotation { angle: a + b }
            }
            (TaxicabReflectX, TaxicabReflectX) => Identity,
            (HyperbolicTranslation { dist: a }, HyperbolicTranslation { dist: b }) => {
                HyperbolicTranslation { dist: a + b }
            }
            (LineShift { c: a }, LineShift { c: b }) => LineShift { c: a + b },
            (GraphShift { dx: a, dy: b }, GraphShift { dx: c, dy: d }) => GraphShift {
                dx: a + c,
                dy: b + d,
            },
            _ => return None,
        };
        Some(IsometryDescriptor {
            id: format!("{} o {}", self.id, other.id),
            kind,
        })
    }

    pub fn inverse(&self) -> IsometryDescriptor {
        let kind = match &self.kind {
            IsometryKind::Identity => IsometryKind::Identity,
            IsometryKind::EuclidTranslation(v) => {
                IsometryKind::EuclidTranslation(v.iter().map(|x| -x).collect())
            }
            IsometryKind::EuclidRotation { angle } => {
                IsometryKind::EuclidRotation { angle: -angle }
            }
            IsometryKind::TaxicabReflectX => IsometryKind::TaxicabReflectX,
            IsometryKind::HyperbolicTranslation { dist } => {
                IsometryKind::HyperbolicTranslation { dist: -dist }
            }
            IsometryKind::LineShift { c } => IsometryKind::LineShift { c: -c },
            IsometryKind::GraphShift { dx, dy } => IsometryKind::GraphShift { dx: -dx, dy: -dy },
        };
        IsometryDescriptor {
            id: format!("{}^-1", self.id),
            kind,
        }
    }

    /// Applies the isometry to a point. Partial maps (window shifts) error
    /// when the image leaves the carrier.
    pub fn apply(&self, space: &dyn ModelSpace, p: &Point) -> Result<Point, Error> {
        match (&self.kind, p) {
            (IsometryKind::Identity, _) => Ok(p.clone()),
            (IsometryKind::EuclidTranslation(v), Point::Euclid(c)) => {
                if v.len() != c.len() {
                    return Err(Error::OutsideCarrier("dimension mismatch".into()));
                }
                Ok(Point::Euclid(c.iter().zip(v).map(|(x, d)| x + d).collect()))
            }
            (IsometryKind::EuclidRotation { angle }, Point::Euclid(c)) if c.len() == 2 => {
                let (s, co) = angle.sin_cos();
                Ok(Point::euclid(&[co * c[0] - s * c[1], s * c[0] + co * c[1]]))
            }
            (IsometryKind::TaxicabReflectX, Point::Euclid(c)) if c.len() == 2 => {
                Ok(Point::euclid(&[-c[0], c[1]]))
            }
            (IsometryKind::HyperbolicTranslation { dist }, Point::Hyperboloid(c)) => {
                Ok(Point::Hyperboloid(boost_x(c, *dist)))
            }
            (IsometryKind::LineShift { c }, Point::Graph(gp)) => {
                let graph = space
                    .graph()
                    .ok_or_else(|| Error::Unsupported("line shift needs the line graph".into()))?;
                let offset = match gp {
                    GraphPoint::Vertex(0) => Rat::zero(),
                    GraphPoint::Vertex(_) => graph.edge(0).len.clone(),
                    GraphPoint::Interior { offset, .. } => offset.clone(),
                };
                let shifted = &offset + &rat(*c);
                if shifted < Rat::zero() || shifted > graph.edge(0).len {
                    return Err(Error::OutsideCarrier("shift leaves the line window".into()));
                }
                Ok(Point::Graph(
                    graph.canonical(GraphPoint::interior(0, shifted)),
                ))
            }
            (IsometryKind::GraphShift { dx, dy }, Point::Graph(gp)) => {
                let graph = space
                    .graph()
                    .ok_or_else(|| Error::Unsupported("graph shift needs a graph model".into()))?;
                graph_shift_apply(graph, *dx, *dy, gp).map(Point::Graph)
            }
            _ => Err(Error::OutsideCarrier(format!(
                "{:?} cannot act on {p:?}",
                self.id
            ))),
        }
    }
}

/// Applies a coordinate translation to a graph point by mapping edges onto
/// edges, keeping the rational offset exact (flipped when the image edge is
/// oriented the other way).
fn graph_shift_apply(
    graph: &crate::graph::MetricGraph,
    dx: f64,
    dy: f64,
    gp: &GraphPoint,
) -> Result<GraphPoint, Error> {
    let shifted_vertex = |v: VertexId| -> Option<VertexId> {
        let c = graph.vertex(v).coords?;
        let target = [c[0] + dx, c[1] + dy];
        (0..graph.vertex_count()).find(|&w| {
            graph.vertex(w).coords.is_some_and(|wc| {
                (wc[0] - target[0]).abs() <= 1e-9 && (wc[1] - target[1]).abs() <= 1e-9
            })
        })
    };
    let outside = || Error::OutsideCarrier("shift leaves the graph window".into());
    match gp {
        GraphPoint::Vertex(v) => shifted_vertex(*v)
            .map(GraphPoint::Vertex)
            .ok_or_else(outside),
        GraphPoint::Interior { edge, offset } => {
            let e = graph.edge(*edge);
            let (u2, v2) = (
                shifted_vertex(e.u).ok_or_else(outside)?,
                shifted_vertex(e.v).ok_or_else(outside)?,
            );
            let e2 = (0..graph.edge_count())
                .find(|&k| {
                    let ed = graph.edge(k);
                    (ed.u == u2 && ed.v == v2) || (ed.u == v2 && ed.v == u2)
                })
                .ok_or_else(outside)?;
            let same_orientation = graph.edge(e2).u == u2;
            let offset = if same_orientation {
                offset.clone()
            } else {
                &e.len - offset
            };
            Ok(graph.canonical(GraphPoint::Interior { edge: e2, offset }))
        }
    }
}

/// Lift of an isometry to ball-space parameters: `(x, r) -> (g(x), r)`.
pub fn lift_ball_point(
    space: &dyn ModelSpace,
    g: &IsometryDescriptor,
    bp: &BallPoint,
) -> Result<BallPoint, Error> {
    Ok(BallPoint {
        center: g.apply(space, &bp.center)?,
        radius: bp.radius,
    })
}

/// Lift of an isometry to compact sets (pointwise image).
pub fn lift_compact_set(
    space: &dyn ModelSpace,
    g: &IsometryDescriptor,
    set: &CompactSet,
) -> Result<CompactSet, Error> {
    match set {
        CompactSet::Net(net) => {
            let points = net
                .points
                .iter()
                .map(|p| g.apply(space, p))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(CompactSet::Net(NetSet {
                model_id: net.model_id.clone(),
                points,
                resolution: net.resolution,
            }))
        }
        CompactSet::Intervals(iu) => {
            let graph = space
                .graph()
                .ok_or_else(|| Error::Unsupported("interval sets need a graph model".into()))?;
            let mut raw: Vec<EdgeInterval> = Vec::with_capacity(iu.intervals.len());
            for iv in &iu.intervals {
                let (lo_img, hi_img) = (
                    g.apply(
                        space,
                        &Point::Graph(GraphPoint::interior(iv.edge, iv.lo.clone())),
                    )?,
                    g.apply(
                        space,
                        &Point::Graph(GraphPoint::interior(iv.edge, iv.hi.clone())),
                    )?,
                );
                raw.push(image_interval(graph, &lo_img, &hi_img)?);
            }
            Ok(CompactSet::Intervals(graph.normalize(raw)))
        }
    }
}

/// Rebuilds an edge interval from the images of its endpoints. The
/// catalogued graph isometries map edges onto edges, so both images lie on
/// one edge (vertices included through canonicalization).
fn image_interval(
    graph: &crate::graph::MetricGraph,
    a: &Point,
    b: &Point,
) -> Result<EdgeInterval, Error> {
    let to_edge_offset = |p: &Point, prefer: Option<usize>| -> Option<(usize, Rat)> {
        match p.as_graph()? {
            GraphPoint::Interior { edge, offset } => Some((*edge, offset.clone())),
            GraphPoint::Vertex(v) => {
                // A vertex endpoint borrows the partner's edge when possible.
                let eid = prefer.filter(|&e| {
                    let ed = graph.edge(e);
                    ed.u == *v || ed.v == *v
                })?;
                let ed = graph.edge(eid);
                Some((
                    eid,
                    if ed.u == *v {
                        Rat::zero()
                    } else {
                        ed.len.clone()
                    },
                ))
            }
        }
    };
    let hint = match (a.as_graph(), b.as_graph()) {
        (Some(GraphPoint::Interior { edge, .. }), _) => Some(*edge),
        (_, Some(GraphPoint::Interior { edge, .. })) => Some(*edge),
        (Some(GraphPoint::Vertex(u)), Some(GraphPoint::Vertex(v))) => {
            (0..graph.edge_count()).find(|&e| {
                let ed = graph.edge(e);
                (ed.u == *u && ed.v == *v) || (ed.u == *v && ed.v == *u)
            })
        }
        _ => None,
    };
    let (ea, oa) = to_edge_offset(a, hint)
        .ok_or_else(|| Error::Invalid("interval image endpoint off the complex".into()))?;
    let (eb, ob) = to_edge_offset(b, Some(ea))
        .ok_or_else(|| Error::Invalid("interval image endpoint off the complex".into()))?;
    if ea != eb {
        return Err(Error::Invalid(
            "isometry image of an edge interval split edges".into(),
        ));
    }
    let (lo, hi) = if oa <= ob { (oa, ob) } else { (ob, oa) };
    Ok(EdgeInterval { edge: ea, lo, hi })
}

/// Report of a lift-isometry verification.
#[derive(Debug, Clone, Serialize)]
pub struct LiftCheckReport {
    pub isometry: String,
    pub samples: usize,
    /// Max |d_H(g A, g B) - d_H(A, B)|.
    pub max_dh_deviation: f64,
    /// Max deviation between `g(ball(x,t))` and `ball(g(x), t)`; exact 0 on
    /// graphs. Radius slices are preserved when this is within budget.
    pub max_slice_deviation: f64,
    pub error_budget: f64,
    pub radius_slice_exact: bool,
}

/// Sampling clearance needed so that balls and their images stay inside
/// windowed models.
fn shift_clearance(g: &IsometryDescriptor, r_max: f64) -> f64 {
    match &g.kind {
        IsometryKind::LineShift { c } => c.abs() + r_max + 0.5,
        IsometryKind::GraphShift { dx, dy } => {
            (dx.abs() + dy.abs()) * std::f64::consts::SQRT_2 + r_max + 0.5
        }
        _ => 0.0,
    }
}

fn sample_clear_ball(
    space: &dyn ModelSpace,
    rng: &mut ChaCha8Rng,
    cfg: &SampleConfig,
    clearance: f64,
) -> BallPoint {
    for _ in 0..200 {
        let bp = crate::ballmap::sample_ball_point(space, rng, cfg.window, cfg.r_max);
        match space.boundary_clearance(&bp.center) {
            Some(c) if c < clearance => continue,
            _ => return bp,
        }
    }
    crate::ballmap::sample_ball_point(space, rng, cfg.window, cfg.r_max)
}

/// Verifies that the lift of `g` preserves `d_H` on `n` random ball pairs
/// and maps radius-t balls to radius-t balls.
pub fn check_lift_isometry(
    space: &dyn ModelSpace,
    g: &IsometryDescriptor,
    cfg: &SampleConfig,
) -> Result<LiftCheckReport, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x11f7);
    let clearance = shift_clearance(g, cfg.r_max);
    let mut max_dh = 0.0f64;
    let mut max_slice = 0.0f64;
    let mut budget = cfg.tol;
    let mut slice_exact = true;
    for _ in 0..cfg.n {
        let a = sample_clear_ball(space, &mut rng, cfg, clearance);
        let b = sample_clear_ball(space, &mut rng, cfg, clearance);
        let set_a = f_map(space, &a, cfg.eps)?;
        let set_b = f_map(space, &b, cfg.eps)?;
        let base = hausdorff(space, &set_a, &set_b)?;
        let ga = lift_compact_set(space, g, &set_a)?;
        let gb = lift_compact_set(space, g, &set_b)?;
        let lifted = hausdorff(space, &ga, &gb)?;
        match (&base.exact, &lifted.exact) {
            (Some(x), Some(y)) => {
                max_dh = max_dh.max(to_f64(&rat_abs(&(x - y))));
            }
            _ => {
                max_dh = max_dh.max((base.value - lifted.value).abs());
                budget = budget.max(base.error_bound + lifted.error_bound + cfg.tol);
            }
        }
        // Slice preservation: the image of ball(x, t) is ball(g x, t).
        let a_img = lift_ball_point(space, g, &a)?;
        let direct = f_map(space, &a_img, cfg.eps)?;
        match (&ga, &direct) {
            (CompactSet::Intervals(u), CompactSet::Intervals(v)) => {
                if u != v {
                    slice_exact = false;
                    max_slice = f64::INFINITY;
                }
            }
            _ => {
                slice_exact = false;
                let h = hausdorff(space, &ga, &direct)?;
                max_slice = max_slice.max(h.value);
                budget = budget.max(h.error_bound + cfg.tol);
            }
        }
    }
    Ok(LiftCheckReport {
        isometry: g.id.clone(),
        samples: cfg.n,
        max_dh_deviation: max_dh,
        max_slice_deviation: if max_slice.is_infinite() {
            f64::INFINITY
        } else {
            max_slice
        },
        error_budget: budget,
        radius_slice_exact: slice_exact,
    })
}

/// Verifies the lift homomorphism `H[f o g^-1] = H[f] o H[g]^-1` on
/// sampled balls: the left side is the lift of the single composed
/// descriptor, the right side applies the factor lifts sequentially.
pub fn check_lift_homomorphism(
    space: &dyn ModelSpace,
    f: &IsometryDescriptor,
    g: &IsometryDescriptor,
    cfg: &SampleConfig,
) -> Result<f64, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x407);
    let g_inv = g.inverse();
    let combined = f
        .compose(&g_inv)
        .ok_or_else(|| Error::Unsupported("isometries from different families".into()))?;
    let clearance = shift_clearance(f, cfg.r_max) + shift_clearance(g, cfg.r_max);
    let mut max_dev = 0.0f64;
    for _ in 0..cfg.n {
        let bp = sample_clear_ball(space, &mut rng, cfg, clearance);
        let set = f_map(space, &bp, cfg.eps)?;
        let composed = lift_compact_set(space, &combined, &set)?;
        let factored = lift_compact_set(space, f, &lift_compact_set(space, &g_inv, &set)?)?;
        match (&composed, &factored) {
            (CompactSet::Intervals(u), CompactSet::Intervals(v)) => {
                if u != v {
                    max_dev = f64::INFINITY;
                }
            }
            _ => {
                let h = hausdorff(space, &composed, &factored)?;
                max_dev = max_dev.max(h.value);
            }
        }
    }
    Ok(max_dev)
}

/// A group acting by isometries, enumerable up to a bound.
#[derive(Debug, Clone)]
pub enum ActionKind {
    Trivial,
    /// Translations `x -> x + k * step` of the windowed real line.
    LineTranslations {
        step: f64,
    },
    /// The cyclic group generated by one translation of R^n.
    EuclidTranslations {
        generator: Vec<f64>,
    },
}

#[derive(Debug, Clone)]
pub struct GroupAction {
    pub kind: ActionKind,
    /// Elements `|k| <= bound` are enumerable.
    pub bound: i64,
}

impl GroupAction {
    pub fn line_translations(step: f64, bound: i64) -> Self {
        GroupAction {
            kind: ActionKind::LineTranslations { step },
            bound,
        }
    }

    pub fn euclid_translations(generator: Vec<f64>, bound: i64) -> Self {
        GroupAction {
            kind: ActionKind::EuclidTranslations { generator },
            bound,
        }
    }

    pub fn element(&self, k: i64) -> IsometryDescriptor {
        if k == 0 {
            return IsometryDescriptor::identity();
        }
        match &self.kind {
            ActionKind::Trivial => IsometryDescriptor::identity(),
            ActionKind::LineTranslations { step } => IsometryDescriptor::new(
                format!("shift {k}*{step}"),
                IsometryKind::LineShift { c: k as f64 * step },
            ),
            ActionKind::EuclidTranslations { generator } => IsometryDescriptor::new(
                format!("translation {k}*{generator:?}"),
                IsometryKind::EuclidTranslation(generator.iter().map(|v| k as f64 * v).collect()),
            ),
        }
    }

    /// Exact displacement of every point under element `k` (translations
    /// displace uniformly).
    fn displacement(&self, k: i64) -> Rat {
        match &self.kind {
            ActionKind::Trivial => Rat::zero(),
            ActionKind::LineTranslations { step } => rat_abs(&(&rat(*step) * &rat(k as f64))),
            ActionKind::EuclidTranslations { generator } => {
                let norm = generator.iter().map(|v| v * v).sum::<f64>().sqrt();
                rat_abs(&(&rat(norm) * &rat(k as f64)))
            }
        }
    }
}

/// Elements whose translate of the open ball `B_r(x)` meets `B_r(x)`:
/// in a geodesic space, exactly those with `d(x, g x) < 2r`.
///
/// Errors when the enumeration bound does not cover every element moving
/// `x` by less than `2r` (never silently truncates).
pub fn properness_check(
    action: &GroupAction,
    space: &dyn ModelSpace,
    x: &Point,
    r: f64,
) -> Result<Vec<(i64, IsometryDescriptor)>, Error> {
    if r <= 0.0 {
        return Err(Error::InvalidLength(r));
    }
    let two_r = &rat(r) * &rat(2.0);
    // Soundness: displacement grows linearly, so it suffices that the
    // first excluded element already moves x by >= 2r. The trivial group
    // is always fully enumerated.
    let fully_enumerated = matches!(action.kind, ActionKind::Trivial);
    if !fully_enumerated && action.displacement(action.bound + 1) < two_r {
        return Err(Error::BoundTooSmall(format!(
            "elements beyond |k| = {} may still move x by less than 2r",
            action.bound
        )));
    }
    let mut out = Vec::new();
    for k in -action.bound..=action.bound {
        let g = action.element(k);
        let moved = g.apply(space, x);
        let hit = match moved {
            Ok(gx) => {
                let d = space
                    .distance_exact(x, &gx)
                    .unwrap_or_else(|| rat(space.distance(x, &gx).expect("same carrier")));
                d < two_r
            }
            // An element shifting x out of the window moves it by more than
            // the window clearance; require that clearance to exceed 2r.
            Err(_) => {
                if action.displacement(k) < two_r {
                    return Err(Error::BoundTooSmall(
                        "window too small for the requested radius".into(),
                    ));
                }
                false
            }
        };
        if hit {
            out.push((k, g));
        }
    }
    Ok(out)
}

/// Lifted properness: elements whose lifted translate of the d_H-ball
/// `B_R(ball(x, r))` meets it, decided through
/// `d_H(ball(g x, r), ball(x, r)) < 2R`.
pub fn lifted_properness_check(
    action: &GroupAction,
    space: &dyn ModelSpace,
    x: &Point,
    r: f64,
    big_r: f64,
) -> Result<Vec<i64>, Error> {
    let graph = space
        .graph()
        .ok_or_else(|| Error::Unsupported("lifted properness uses exact graph balls".into()))?;
    let two_r = &rat(big_r) * &rat(2.0);
    if action.displacement(action.bound + 1) < &two_r + &(&rat(r) * &rat(2.0)) {
        return Err(Error::BoundTooSmall(
            "bound must cover 2R + 2r displacements".into(),
        ));
    }
    let base_ball = f_map(
        space,
        &BallPoint {
            center: x.clone(),
            radius: r,
        },
        0.0,
    )?;
    let base_iu = base_ball
        .as_intervals()
        .expect("graph balls are exact")
        .clone();
    let mut out = Vec::new();
    for k in -action.bound..=action.bound {
        let g = action.element(k);
        let Ok(gx) = g.apply(space, x) else { continue };
        let moved = f_map(
            space,
            &BallPoint {
                center: gx,
                radius: r,
            },
            0.0,
        )?;
        let h = hausdorff_exact(graph, moved.as_intervals().unwrap(), &base_iu);
        if h.exact.expect("exact") < two_r {
            out.push(k);
        }
    }
    Ok(out)
}

/// Quotient distance `inf_g d(a, g(b))` with a truncation-soundness guard:
/// the infimum over the enumerated window is certified once the first
/// excluded shift displaces by more than `best + d(a, b)`.
pub fn quotient_distance(
    action: &GroupAction,
    space: &dyn ModelSpace,
    a: &Point,
    b: &Point,
) -> Result<f64, Error> {
    Ok(to_f64(&quotient_distance_exact(action, space, a, b)?))
}

pub fn quotient_distance_exact(
    action: &GroupAction,
    space: &dyn ModelSpace,
    a: &Point,
    b: &Point,
) -> Result<Rat, Error> {
    let dist = |p: &Point, q: &Point| -> Result<Rat, Error> {
        Ok(space
            .distance_exact(p, q)
            .unwrap_or_else(|| rat(space.distance(p, q).expect("same carrier"))))
    };
    let d_ab = dist(a, b)?;
    let mut best: Rat = d_ab.clone();
    for k in -action.bound..=action.bound {
        if k == 0 {
            continue;
        }
        let g = action.element(k);
        if let Ok(gb) = g.apply(space, b) {
            best = rat_min(best, dist(a, &gb)?);
        }
    }
    // d(a, g_k b) >= displacement(k) - d(a, b); beyond the bound this
    // exceeds `best`, so the truncation is sound.
    if &action.displacement(action.bound + 1) - &d_ab < best {
        return Err(Error::BoundTooSmall(
            "enumeration bound cannot certify the quotient infimum".into(),
        ));
    }
    Ok(best)
}

/// Report of the quotient-metric comparison.
#[derive(Debug, Clone, Serialize)]
pub struct QuotientCheckReport {
    pub samples: usize,
    /// Max |inf_g d_H(g ball(x,t), ball(y,s)) - (d_G(x,y) + |t-s|)|.
    pub max_deviation: f64,
    pub seed: u64,
}

/// Compares the quotient of the ball space against the taxicab metric on
/// the quotient: for random orbit-ball pairs, the infimum over enumerated
/// lifts of `d_H` must equal `d_G + |t - s|`. Exact on graph models; on
/// analytic models the comparison carries the net error bound (reported in
/// the deviation, which the caller checks against `2 eps + tol`).
pub fn check_quotient_theorem(
    action: &GroupAction,
    space: &dyn ModelSpace,
    cfg: &SampleConfig,
) -> Result<QuotientCheckReport, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x9007);
    let mut max_dev = Rat::zero();
    for _ in 0..cfg.n {
        let x = space.sample_point(&mut rng, cfg.window);
        let y = space.sample_point(&mut rng, cfg.window);
        let t = cfg.r_max - rng.gen_range(0.0..cfg.r_max);
        let s = cfg.r_max - rng.gen_range(0.0..cfg.r_max);
        let ball_y = f_map(
            space,
            &BallPoint {
                center: y.clone(),
                radius: s,
            },
            cfg.eps,
        )?;

        let mut lhs: Option<Rat> = None;
        for k in -action.bound..=action.bound {
            let g = action.element(k);
            let Ok(gx) = g.apply(space, &x) else { continue };
            let moved = f_map(
                space,
                &BallPoint {
                    center: gx,
                    radius: t,
                },
                cfg.eps,
            )?;
            let v = match (moved.as_intervals(), ball_y.as_intervals(), space.graph()) {
                (Some(miu), Some(yiu), Some(graph)) => {
                    hausdorff_exact(graph, miu, yiu).exact.expect("exact")
                }
                _ => rat(hausdorff(space, &moved, &ball_y)?.value),
            };
            lhs = Some(match lhs {
                Some(cur) => rat_min(cur, v),
                None => v,
            });
        }
        let lhs = lhs.expect("identity always applies");
        // Soundness: excluded shifts satisfy
        // d_H >= d(g x, y) - t - s >= displacement - d(x,y) - t - s.
        let d_xy = space
            .distance_exact(&x, &y)
            .unwrap_or_else(|| rat(space.distance(&x, &y).expect("same carrier")));
        let slack = &(&action.displacement(action.bound + 1) - &d_xy) - &(&rat(t) + &rat(s));
        if slack < lhs {
            return Err(Error::BoundTooSmall(
                "quotient enumeration cannot certify the infimum".into(),
            ));
        }
        let rhs = &quotient_distance_exact(action, space, &x, &y)? + &rat_abs(&(&rat(t) - &rat(s)));
        let dev = rat_abs(&(&lhs - &rhs));
        if dev > max_dev {
            max_dev = dev;
        }
    }
    Ok(QuotientCheckReport {
        samples: cfg.n,
        max_deviation: to_f64(&max_dev),
        seed: cfg.seed,
    })
}

/// The metric quotient of the windowed real line by a translation group:
/// a circle whose circumference is the translation step.
pub fn quotient_space(action: &GroupAction) -> Result<GraphSpace, Error> {
    match &action.kind {
        ActionKind::LineTranslations { step } => GraphSpace::circle(*step),
        ActionKind::Trivial | ActionKind::EuclidTranslations { .. } => Err(Error::Unsupported(
            "only line-translation quotients are materialized as models".into(),
        )),
    }
}

/// Report of orbit invariants: `g(ball(x,t)) = ball(g(x), t)`.
#[derive(Debug, Clone, Serialize)]
pub struct OrbitReport {
    pub isometry: String,
    pub samples: usize,
    pub max_deviation: f64,
    pub exact: bool,
}

/// Confirms orbit balls keep their radius: the image of `ball(x,t)` under
/// `g` equals `ball(g(x), t)` (exactly on graphs, within net error
/// elsewhere).
pub fn orbit_invariants_check(
    space: &dyn ModelSpace,
    g: &IsometryDescriptor,
    cfg: &SampleConfig,
) -> Result<OrbitReport, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x0b17);
    let clearance = shift_clearance(g, cfg.r_max);
    let mut max_dev = 0.0f64;
    let mut exact = true;
    for _ in 0..cfg.n {
        let bp = sample_clear_ball(space, &mut rng, cfg, clearance);
        let set = f_map(space, &bp, cfg.eps)?;
        let image = lift_compact_set(space, g, &set)?;
        let direct = f_map(space, &lift_ball_point(space, g, &bp)?, cfg.eps)?;
        match (&image, &direct) {
            (CompactSet::Intervals(u), CompactSet::Intervals(v)) => {
                if u != v {
                    max_dev = f64::INFINITY;
                }
            }
            _ => {
                exact = false;
                let h = hausdorff(space, &image, &direct)?;
                max_dev = max_dev.max((h.value - h.error_bound).max(0.0));
            }
        }
    }
    Ok(OrbitReport {
        isometry: g.id.clone(),
        samples: cfg.n,
        max_deviation: max_dev,
        exact,
    })
}

/// The catalogued isometry fixtures per model, used by the lift suite.
pub fn catalog_isometries(space: &dyn ModelSpace) -> Vec<IsometryDescriptor> {
    match space.id() {
        id if id.starts_with("euclidean_r2") || id == "euclidean_rn" => vec![
            IsometryDescriptor::new(
                "translation (1.5, 0.5)",
                IsometryKind::EuclidTranslation(vec![1.5, 0.5]),
            ),
            IsometryDescriptor::new(
                "rotation pi/2",
                IsometryKind::EuclidRotation {
                    angle: std::f64::consts::FRAC_PI_2,
                },
            ),
        ],
        "taxicab_r2" => vec![IsometryDescriptor::new(
            "reflection across the y-axis",
            IsometryKind::TaxicabReflectX,
        )],
        "hyperbolic_plane" => vec![IsometryDescriptor::new(
            "geodesic translation by 0.8",
            IsometryKind::HyperbolicTranslation { dist: 0.8 },
        )],
        "real_line" => vec![IsometryDescriptor::new(
            "shift by 1",
            IsometryKind::LineShift { c: 1.0 },
        )],
        "diamond_chain" => vec![IsometryDescriptor::new(
            "period shift by 4",
            IsometryKind::GraphShift { dx: 4.0, dy: 0.0 },
        )],
        _ => Vec::new(),
    }
}
