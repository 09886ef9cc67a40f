//! Geodesic segments, the length functional, and the strong-geodesic-
//! extendibility decision procedure.
//!
//! Extendibility at `x` is verified through the sphere criterion: for a
//! sample of pairs `(y, r)` there must exist `p` on the metric sphere of
//! radius `r` around `x` with `d(y,p) = d(y,x) + r`, which makes the
//! concatenation `y -> x -> p` distance-realizing. On graphs the sphere is
//! an exact finite set and every comparison is exact rational arithmetic;
//! on analytic models the check is a documented sound-but-incomplete
//! sampling with explicit tolerances. Certified failures bound the
//! supremum of `d(y,.)` over the whole sphere strictly below the target.

use std::collections::HashSet;

use num_traits::Zero;
use serde::Serialize;

use crate::exact::{rat, rat_abs, rat_half, rat_min, to_f64, Rat};
use crate::point::{EdgeId, GraphPoint, Point, VertexId};
use crate::spaces::ModelSpace;
use crate::Error;

/// An arc-length-parameterized polyline claimed to realize distances
/// between its breakpoints.
#[derive(Debug, Clone)]
pub struct GeodesicSegment {
    pub points: Vec<Point>,
    pub params: Vec<f64>,
    /// Exact parameters, carried by graph-model segments so that
    /// distance-realization is decided exactly.
    pub params_exact: Option<Vec<Rat>>,
}

impl GeodesicSegment {
    /// Builds a segment from breakpoints, assigning cumulative distances as
    /// parameters.
    pub fn from_breakpoints(space: &dyn ModelSpace, points: Vec<Point>) -> Result<Self, Error> {
        if points.is_empty() {
            return Err(Error::Invalid(
                "segment needs at least one breakpoint".into(),
            ));
        }
        if space.is_exact() {
            let mut exact = vec![Rat::zero()];
            for w in points.windows(2) {
                let d = space
                    .distance_exact(&w[0], &w[1])
                    .ok_or_else(|| Error::OutsideCarrier(format!("{:?}", w[0])))?;
                exact.push(exact.last().unwrap() + &d);
            }
            let params = exact.iter().map(to_f64).collect();
            Ok(GeodesicSegment {
                points,
                params,
                params_exact: Some(exact),
            })
        } else {
            let mut params = vec![0.0];
            for w in points.windows(2) {
                let d = space.distance(&w[0], &w[1])?;
                params.push(params.last().unwrap() + d);
            }
            Ok(GeodesicSegment {
                points,
                params,
                params_exact: None,
            })
        }
    }

    /// A segment with explicitly prescribed exact parameters.
    pub fn with_exact_params(points: Vec<Point>, params_exact: Vec<Rat>) -> Self {
        let params = params_exact.iter().map(to_f64).collect();
        GeodesicSegment {
            points,
            params,
            params_exact: Some(params_exact),
        }
    }

    pub fn length(&self) -> f64 {
        *self.params.last().unwrap_or(&0.0)
    }
}

/// Length of a polyline as an inscribed polygonal sum.
///
/// `refinement` rounds of midpoint insertion are applied first (on models
/// with a midpoint oracle); by the triangle inequality the result is
/// monotone nondecreasing in the refinement depth. On graphs the sum of
/// consecutive exact distances is already the exact length.
pub fn path_length(
    space: &dyn ModelSpace,
    polyline: &[Point],
    refinement: u32,
) -> Result<f64, Error> {
    if polyline.is_empty() {
        return Err(Error::Invalid("empty polyline".into()));
    }
    let mut pts: Vec<Point> = polyline.to_vec();
    for _ in 0..refinement {
        if pts.len() < 2 {
            break;
        }
        let mut refined = Vec::with_capacity(pts.len() * 2);
        for w in pts.windows(2) {
            refined.push(w[0].clone());
            if let Some(m) = space.midpoint(&w[0], &w[1])? {
                refined.push(m);
            }
        }
        refined.push(pts.last().unwrap().clone());
        pts = refined;
    }
    let mut total = 0.0;
    for w in pts.windows(2) {
        total += space.distance(&w[0], &w[1])?;
    }
    Ok(total)
}

/// Checks `d(gamma(t_i), gamma(t_j)) = |t_i - t_j|` over all breakpoint
/// pairs; returns the verdict at tolerance `tol` and the maximum deviation.
pub fn is_distance_realizing(
    space: &dyn ModelSpace,
    segment: &GeodesicSegment,
    tol: f64,
) -> Result<(bool, f64), Error> {
    let n = segment.points.len();
    if let Some(exact) = &segment.params_exact {
        let mut max_dev = Rat::zero();
        for i in 0..n {
            for j in i + 1..n {
                let d = space
                    .distance_exact(&segment.points[i], &segment.points[j])
                    .ok_or_else(|| Error::OutsideCarrier("non-graph point".into()))?;
                let dev = rat_abs(&(&d - &rat_abs(&(&exact[j] - &exact[i]))));
                if dev > max_dev {
                    max_dev = dev;
                }
            }
        }
        let dev = to_f64(&max_dev);
        Ok((dev <= tol, dev))
    } else {
        let mut max_dev = 0.0f64;
        for i in 0..n {
            for j in i + 1..n {
                let d = space.distance(&segment.points[i], &segment.points[j])?;
                let dev = (d - (segment.params[j] - segment.params[i]).abs()).abs();
                max_dev = max_dev.max(dev);
            }
        }
        Ok((max_dev <= tol, max_dev))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
    Inconclusive,
}

#[derive(Debug, Clone)]
pub struct SuccessWitness {
    pub y: Point,
    pub r: f64,
    pub p: Point,
}

#[derive(Debug, Clone)]
pub struct FailureWitness {
    pub y: Point,
    pub r: f64,
    /// Supremum of `d(y, .)` over the sphere (`None` when the sphere is
    /// empty at this radius).
    pub sphere_sup: Option<f64>,
    pub target: f64,
    /// Certified: the supremum bound (plus net resolution on analytic
    /// models) lies strictly below the target.
    pub certified: bool,
}

#[derive(Debug, Clone)]
pub struct ExtendibilityVerdict {
    pub point: Point,
    pub verdict: Verdict,
    pub successes: Vec<SuccessWitness>,
    pub failures: Vec<FailureWitness>,
    pub undecided: Vec<(Point, f64)>,
    pub y_count: usize,
    pub radii: Vec<f64>,
}

/// Configuration for the extendibility checks.
#[derive(Debug, Clone)]
pub struct ExtendibilityConfig {
    /// Net resolution for analytic sphere sampling.
    pub eps: f64,
    /// Base equality tolerance on analytic models; the effective tolerance
    /// is `tol + 2 * eps`.
    pub tol: f64,
}

impl Default for ExtendibilityConfig {
    fn default() -> Self {
        ExtendibilityConfig {
            eps: 1e-3,
            tol: 1e-6,
        }
    }
}

/// Default radius grid: geometric `2^-3 .. 2^3`.
pub fn default_radius_grid() -> Vec<f64> {
    (-3..=3).map(|k| (2.0f64).powi(k)).collect()
}

/// Default number of reference points `y` sampled per probe.
pub const DEFAULT_Y_SAMPLES: usize = 32;

/// Tests strong geodesic extendibility at `x` over the sample `ys x radii`.
pub fn extendibility_at(
    space: &dyn ModelSpace,
    x: &Point,
    ys: &[Point],
    radii: &[f64],
    cfg: &ExtendibilityConfig,
) -> Result<ExtendibilityVerdict, Error> {
    if !space.contains(x) {
        return Err(Error::OutsideCarrier(format!("{x:?}")));
    }
    if ys.is_empty() || radii.is_empty() {
        return Err(Error::Precondition("empty extendibility sampling".into()));
    }
    let mut successes = Vec::new();
    let mut failures = Vec::new();
    let mut undecided = Vec::new();

    for y in ys {
        if y == x {
            continue;
        }
        for &r in radii {
            if space.is_exact() {
                match check_pair_exact(space, x, y, r)? {
                    Ok(p) => successes.push(SuccessWitness { y: y.clone(), r, p }),
                    Err(sup) => failures.push(FailureWitness {
                        y: y.clone(),
                        r,
                        sphere_sup: sup.as_ref().map(to_f64),
                        target: space.distance(y, x)? + r,
                        certified: true,
                    }),
                }
            } else {
                match check_pair_analytic(space, x, y, r, cfg)? {
                    PairOutcome::Success(p) => {
                        successes.push(SuccessWitness { y: y.clone(), r, p })
                    }
                    PairOutcome::CertifiedFail { sup, target } => failures.push(FailureWitness {
                        y: y.clone(),
                        r,
                        sphere_sup: Some(sup),
                        target,
                        certified: true,
                    }),
                    PairOutcome::Undecided => undecided.push((y.clone(), r)),
                }
            }
        }
    }

    let verdict = if failures.iter().any(|f| f.certified) {
        Verdict::Fails
    } else if undecided.is_empty() && !successes.is_empty() {
        Verdict::Holds
    } else {
        Verdict::Inconclusive
    };
    Ok(ExtendibilityVerdict {
        point: x.clone(),
        verdict,
        successes,
        failures,
        undecided,
        y_count: ys.len(),
        radii: radii.to_vec(),
    })
}

/// Exact sphere check on a graph: success witness or sup over the sphere.
#[allow(clippy::type_complexity)]
fn check_pair_exact(
    space: &dyn ModelSpace,
    x: &Point,
    y: &Point,
    r: f64,
) -> Result<Result<Point, Option<Rat>>, Error> {
    let graph = space.graph().expect("exact models are graph-backed");
    let (gx, gy) = match (x.as_graph(), y.as_graph()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::OutsideCarrier("graph point required".into())),
    };
    let rr = rat(r);
    let target = &graph.distance(gy, gx) + &rr;
    let sphere = graph.sphere(gx, &rr);
    let mut sup: Option<Rat> = None;
    for p in sphere {
        let d = graph.distance(gy, &p);
        if d == target {
            return Ok(Ok(Point::Graph(p)));
        }
        if sup.as_ref().is_none_or(|s| d > *s) {
            sup = Some(d);
        }
    }
    Ok(Err(sup))
}

enum PairOutcome {
    Success(Point),
    CertifiedFail { sup: f64, target: f64 },
    Undecided,
}

fn check_pair_analytic(
    space: &dyn ModelSpace,
    x: &Point,
    y: &Point,
    r: f64,
    cfg: &ExtendibilityConfig,
) -> Result<PairOutcome, Error> {
    let d_yx = space.distance(y, x)?;
    let target = d_yx + r;
    // Constructive route first: models with a ray extension produce the
    // witness directly, verified at the base tolerance.
    if let Some(p) = space.extend_ray(y, x, r) {
        let on_sphere = (space.distance(x, &p)? - r).abs() < cfg.tol;
        let realizes = (space.distance(y, &p)? - target).abs() < cfg.tol;
        if on_sphere && realizes {
            return Ok(PairOutcome::Success(p));
        }
    }
    // Sphere-net search.
    let sphere = space.sphere(x, r, cfg.eps)?;
    if sphere.is_empty() {
        return Ok(PairOutcome::CertifiedFail { sup: 0.0, target });
    }
    let tol_eq = cfg.tol + 2.0 * cfg.eps;
    let mut sup = f64::NEG_INFINITY;
    let mut arg = None;
    for p in &sphere {
        let d = space.distance(y, p)?;
        if d > sup {
            sup = d;
            arg = Some(p.clone());
        }
    }
    // The net covers the sphere within eps and d(y,.) is 1-Lipschitz, so
    // the true supremum is at most sup + eps.
    if sup + cfg.eps < target - cfg.tol {
        return Ok(PairOutcome::CertifiedFail { sup, target });
    }
    if (sup - target).abs() < tol_eq {
        return Ok(PairOutcome::Success(arg.expect("non-empty sphere")));
    }
    Ok(PairOutcome::Undecided)
}

/// Partition of candidate points by extendibility verdict.
#[derive(Debug, Clone)]
pub struct ExtendiblePartition {
    pub holds: Vec<Point>,
    pub fails: Vec<Point>,
    pub inconclusive: Vec<Point>,
    pub verdicts: Vec<ExtendibilityVerdict>,
}

/// Classifies candidate points of a graph model exactly.
///
/// Candidates too close to an artificial window end (within
/// `max(boundary_margin, max radius)`) are reported as inconclusive rather
/// than letting window truncation fabricate verdicts about the unbounded
/// space being modeled.
pub fn extendible_set(
    space: &dyn ModelSpace,
    candidates: &[Point],
    ys: &[Point],
    radii: &[f64],
    boundary_margin: f64,
) -> Result<ExtendiblePartition, Error> {
    if space.graph().is_none() {
        return Err(Error::Unsupported(
            "extendible_set requires a graph model; analytic models go through extendibility_at"
                .into(),
        ));
    }
    let max_r = radii.iter().cloned().fold(0.0f64, f64::max);
    let flag_below = boundary_margin.max(max_r);
    let mut out = ExtendiblePartition {
        holds: Vec::new(),
        fails: Vec::new(),
        inconclusive: Vec::new(),
        verdicts: Vec::new(),
    };
    for x in candidates {
        if let Some(clear) = space.boundary_clearance(x) {
            if clear <= flag_below {
                out.inconclusive.push(x.clone());
                continue;
            }
        }
        let ys_filtered: Vec<Point> = ys.iter().filter(|y| *y != x).cloned().collect();
        let v = extendibility_at(
            space,
            x,
            &ys_filtered,
            radii,
            &ExtendibilityConfig::default(),
        )?;
        match v.verdict {
            Verdict::Holds => out.holds.push(x.clone()),
            Verdict::Fails => out.fails.push(x.clone()),
            Verdict::Inconclusive => out.inconclusive.push(x.clone()),
        }
        out.verdicts.push(v);
    }
    Ok(out)
}

/// Vertex + edge-midpoint candidate set of a graph model.
pub fn graph_candidates(space: &dyn ModelSpace) -> Vec<Point> {
    let Some(graph) = space.graph() else {
        return Vec::new();
    };
    let mut out: Vec<Point> = (0..graph.vertex_count())
        .map(|v| Point::Graph(GraphPoint::Vertex(v)))
        .collect();
    for e in 0..graph.edge_count() {
        let half = rat_half(&graph.edge(e).len);
        out.push(Point::Graph(GraphPoint::interior(e, half)));
    }
    out
}

/// Search budget for [`mincut_witness`].
#[derive(Debug, Clone, Copy)]
pub struct SearchBudget {
    /// Maximum geodesic length explored from the base point.
    pub max_length: f64,
}

/// A geodesic through `x` that stops minimizing: `q` is the last point at
/// which the path still realizes the distance from `x`, at arc-length
/// parameter `failure_param`; `beyond` is a concrete point past `q` with
/// `path_length > d(x, beyond)` as an exact strict inequality.
#[derive(Debug, Clone)]
pub struct MinCutWitness {
    pub q: Point,
    pub failure_param: f64,
    pub failure_param_exact: Rat,
    pub segment: GeodesicSegment,
    pub beyond: Point,
    pub beyond_path_length: f64,
    pub beyond_distance: f64,
}

/// Searches for a geodesic from `x` whose extension stops minimizing,
/// returning the witness with the smallest failure parameter found within
/// the budget. `None` means "nothing found within budget", not a
/// certificate of emptiness.
pub fn mincut_witness(
    space: &dyn ModelSpace,
    x: &Point,
    budget: SearchBudget,
) -> Result<Option<MinCutWitness>, Error> {
    let graph = space
        .graph()
        .ok_or_else(|| Error::Unsupported("mincut_witness requires a graph model".into()))?;
    let gx = x
        .as_graph()
        .ok_or_else(|| Error::OutsideCarrier("graph point required".into()))?;
    let max_len = rat(budget.max_length);

    // Minimizing arrivals at (vertex, entered-by-edge); lengths always
    // equal d(x, vertex) on surviving branches, so each state is visited
    // once.
    struct State {
        vertex: VertexId,
        entry: Option<EdgeId>,
        length: Rat,
        parent: Option<usize>,
    }
    struct Candidate {
        param: Rat,
        q: GraphPoint,
        beyond: GraphPoint,
        parent: Option<usize>,
    }
    let mut states: Vec<State> = Vec::new();
    let mut frontier: Vec<usize> = Vec::new();
    let mut seen: HashSet<(VertexId, Option<EdgeId>)> = HashSet::new();
    let mut best: Option<Candidate> = None;

    // Longest minimizing prefix along `edge` entered at vertex `w` with
    // accumulated length `len_at_w`.
    let prefix =
        |w: VertexId, edge: EdgeId, len_at_w: &Rat| -> (Rat, GraphPoint, Option<GraphPoint>) {
            let e = graph.edge(edge);
            let far = if e.u == w { e.v } else { e.u };
            let d_far = graph.distance(gx, &GraphPoint::Vertex(far));
            // L + s <= d(x,far) + (len - s)  =>  s <= (d(x,far) + len - L) / 2.
            let mut s_star = rat_min(e.len.clone(), rat_half(&(&d_far + &e.len - len_at_w)));
            // Re-entering the edge that carries an interior base point adds the
            // head-on constraint s <= (gap - L) / 2.
            if let GraphPoint::Interior {
                edge: xe,
                offset: xo,
            } = gx
            {
                if *xe == edge {
                    let gap = if e.u == w { xo.clone() } else { &e.len - xo };
                    s_star = rat_min(s_star, rat_half(&(&gap - len_at_w)));
                }
            }
            if s_star < Rat::zero() {
                s_star = Rat::zero();
            }
            let to_offset = |s: &Rat| if e.u == w { s.clone() } else { &e.len - s };
            let q = GraphPoint::Interior {
                edge,
                offset: to_offset(&s_star),
            };
            let beyond = (s_star < e.len).then(|| {
                let s_b = rat_half(&(&s_star + &rat_min(e.len.clone(), &s_star + &rat(1.0))));
                let s_b = if s_b > s_star { s_b } else { e.len.clone() };
                graph.canonical(GraphPoint::Interior {
                    edge,
                    offset: to_offset(&s_b),
                })
            });
            (s_star, graph.canonical(q), beyond)
        };

    match gx {
        GraphPoint::Vertex(v) => {
            states.push(State {
                vertex: *v,
                entry: None,
                length: Rat::zero(),
                parent: None,
            });
            frontier.push(0);
            seen.insert((*v, None));
        }
        GraphPoint::Interior { edge, offset } => {
            let e = graph.edge(*edge);
            // Two directions along the base edge; toward an endpoint the
            // path minimizes while s <= (d(x, endpoint) + gap) / 2.
            for (toward, gap, sign) in [(e.u, offset.clone(), -1i64), (e.v, &e.len - offset, 1i64)]
            {
                let d_t = graph.distance(gx, &GraphPoint::Vertex(toward));
                let s_star = rat_min(gap.clone(), rat_half(&(&d_t + &gap)));
                if s_star < gap {
                    let dir = rat(sign as f64);
                    let q_off = offset + &(&dir * &s_star);
                    let b_off = offset + &(&dir * &rat_half(&(&s_star + &gap)));
                    let cand = Candidate {
                        param: s_star,
                        q: graph.canonical(GraphPoint::Interior {
                            edge: *edge,
                            offset: q_off,
                        }),
                        beyond: graph.canonical(GraphPoint::Interior {
                            edge: *edge,
                            offset: b_off,
                        }),
                        parent: None,
                    };
                    if best.as_ref().is_none_or(|b| cand.param < b.param) {
                        best = Some(cand);
                    }
                } else if gap <= max_len && seen.insert((toward, Some(*edge))) {
                    states.push(State {
                        vertex: toward,
                        entry: Some(*edge),
                        length: gap,
                        parent: None,
                    });
                    frontier.push(states.len() - 1);
                }
            }
        }
    }

    // Process states in increasing length order so the first-found minimal
    // failure parameter is final once no shorter state remains.
    while let Some(pos) = frontier
        .iter()
        .enumerate()
        .min_by(|a, b| states[*a.1].length.cmp(&states[*b.1].length))
        .map(|(i, _)| i)
    {
        let si = frontier.swap_remove(pos);
        let (w, entry, len_here) = (
            states[si].vertex,
            states[si].entry,
            states[si].length.clone(),
        );
        if let Some(b) = &best {
            if len_here >= b.param {
                continue;
            }
        }
        for &e_next in graph.incident_edges(w) {
            if Some(e_next) == entry {
                continue; // a U-turn is not a local geodesic
            }
            let (s_star, q, beyond) = prefix(w, e_next, &len_here);
            let reach = &len_here + &s_star;
            match beyond {
                Some(b) => {
                    let cand = Candidate {
                        param: reach,
                        q,
                        beyond: b,
                        parent: Some(si),
                    };
                    if best.as_ref().is_none_or(|cur| cand.param < cur.param) {
                        best = Some(cand);
                    }
                }
                None => {
                    let e = graph.edge(e_next);
                    let far = if e.u == w { e.v } else { e.u };
                    if reach <= max_len && seen.insert((far, Some(e_next))) {
                        states.push(State {
                            vertex: far,
                            entry: Some(e_next),
                            length: reach,
                            parent: Some(si),
                        });
                        frontier.push(states.len() - 1);
                    }
                }
            }
        }
    }

    let Some(cand) = best else { return Ok(None) };

    // Reconstruct breakpoints x -> ... -> q, then attach the beyond point.
    let mut chain: Vec<GraphPoint> = Vec::new();
    let mut cur = cand.parent;
    while let Some(i) = cur {
        chain.push(GraphPoint::Vertex(states[i].vertex));
        cur = states[i].parent;
    }
    chain.reverse();
    let mut points = vec![x.clone()];
    points.extend(chain.into_iter().map(Point::Graph));
    let q_pt = Point::Graph(cand.q.clone());
    if *points.last().unwrap() != q_pt {
        points.push(q_pt.clone());
    }
    let segment = GeodesicSegment::from_breakpoints(space, points)?;
    let d_beyond = graph.distance(gx, &cand.beyond);
    let step = graph.distance(&cand.q, &cand.beyond);
    let beyond_len = &cand.param + &step;
    debug_assert!(d_beyond < beyond_len);
    Ok(Some(MinCutWitness {
        q: q_pt,
        failure_param: to_f64(&cand.param),
        failure_param_exact: cand.param,
        segment,
        beyond: Point::Graph(cand.beyond),
        beyond_path_length: to_f64(&beyond_len),
        beyond_distance: to_f64(&d_beyond),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::{circle_point, line_point, GraphSpace};
    use crate::spaces::{EuclideanSpace, ModelSpace};

    const SQRT2: f64 = std::f64::consts::SQRT_2;

    #[test]
    fn path_length_examples() {
        let e2 = EuclideanSpace::new(2).unwrap();
        // Single point.
        assert_eq!(
            path_length(&e2, &[Point::euclid(&[1.0, 1.0])], 3).unwrap(),
            0.0
        );
        // Straight segment: length 5 at any refinement depth.
        let seg = [Point::euclid(&[0.0, 0.0]), Point::euclid(&[3.0, 4.0])];
        for depth in 0..4 {
            assert!((path_length(&e2, &seg, depth).unwrap() - 5.0).abs() < 1e-12);
        }
    }

    #[test]
    fn inscribed_quarter_circle_lengths_increase_to_pi_half() {
        let e2 = EuclideanSpace::new(2).unwrap();
        let sample = |n: usize| -> Vec<Point> {
            (0..=n)
                .map(|i| {
                    let th = std::f64::consts::FRAC_PI_2 * i as f64 / n as f64;
                    Point::euclid(&[th.cos(), th.sin()])
                })
                .collect()
        };
        let mut prev = 0.0;
        for depth in 1..=10 {
            let len = path_length(&e2, &sample(1 << depth), 0).unwrap();
            assert!(len >= prev);
            prev = len;
        }
        assert!((prev - std::f64::consts::FRAC_PI_2).abs() < 1e-4);
    }

    #[test]
    fn diamond_path_realizes_and_extension_breaks() {
        let s = GraphSpace::diamond().unwrap();
        let x = s.point_by_coords([-0.5, 0.5]).unwrap();
        let top = s.point_by_coords([0.0, 1.0]).unwrap();
        let right = s.point_by_coords([1.0, 0.0]).unwrap();
        let y = s.point_by_coords([0.5, -0.5]).unwrap();
        let seg =
            GeodesicSegment::from_breakpoints(&s, vec![x.clone(), top, right.clone(), y.clone()])
                .unwrap();
        let (ok, dev) = is_distance_realizing(&s, &seg, 0.0).unwrap();
        assert!(ok);
        assert_eq!(dev, 0.0);
        assert_eq!(seg.length(), 2.0 * SQRT2);

        // Extend 0.1 past y along the lower-right side: the far route is
        // shorter, so the extension stops realizing distance.
        let graph = s.graph().unwrap();
        let gy = y.as_graph().unwrap();
        let (edge, offset) = match gy {
            GraphPoint::Interior { edge, offset } => (*edge, offset.clone()),
            _ => panic!("midpoint is interior"),
        };
        let e = graph.edge(edge);
        let towards_bottom = graph.vertex(e.v).coords == Some([0.0, -1.0]);
        let ext_off = if towards_bottom {
            &offset + &rat(0.1)
        } else {
            &offset - &rat(0.1)
        };
        let beyond = Point::Graph(GraphPoint::interior(edge, ext_off));
        let mut pts = seg.points.clone();
        let mut params = seg.params_exact.clone().unwrap();
        pts.push(beyond);
        params.push(params.last().unwrap() + rat(0.1));
        let ext = GeodesicSegment::with_exact_params(pts, params);
        let (ok, dev) = is_distance_realizing(&s, &ext, 1e-9).unwrap();
        assert!(!ok);
        assert_eq!(dev, 0.2); // far route undercuts by exactly 2 * 0.1
    }

    #[test]
    fn real_line_extendibility_holds() {
        let s = GraphSpace::real_line(40.0).unwrap();
        let x = line_point(&s, 0.0).unwrap();
        let ys = vec![line_point(&s, 2.0).unwrap(), line_point(&s, -3.5).unwrap()];
        let v = extendibility_at(
            &s,
            &x,
            &ys,
            &[0.5, 1.0, 2.0],
            &ExtendibilityConfig::default(),
        )
        .unwrap();
        assert_eq!(v.verdict, Verdict::Holds);
        // Success witnesses concatenate into exactly distance-realizing
        // paths.
        for w in &v.successes {
            let seg =
                GeodesicSegment::from_breakpoints(&s, vec![w.y.clone(), x.clone(), w.p.clone()])
                    .unwrap();
            let (ok, dev) = is_distance_realizing(&s, &seg, 0.0).unwrap();
            assert!(ok && dev == 0.0);
        }
    }

    #[test]
    fn diamond_fails_with_certified_witness() {
        let s = GraphSpace::diamond().unwrap();
        let x = s.point_by_coords([-0.5, 0.5]).unwrap();
        let y = s.point_by_coords([0.5, -0.5]).unwrap();
        let v = extendibility_at(&s, &x, &[y], &[0.5], &ExtendibilityConfig::default()).unwrap();
        assert_eq!(v.verdict, Verdict::Fails);
        let f = &v.failures[0];
        assert!(f.certified);
        // sup over sphere = 2*sqrt(2) - 0.5 < target = 2*sqrt(2) + 0.5.
        assert!((f.sphere_sup.unwrap() - (2.0 * SQRT2 - 0.5)).abs() < 1e-12);
        assert!((f.target - (2.0 * SQRT2 + 0.5)).abs() < 1e-12);
    }

    #[test]
    fn mincut_on_diamond_circle_and_line() {
        // Diamond from the top vertex: around the cycle, minimality is lost
        // past the antipodal vertex at parameter 2*sqrt(2).
        let s = GraphSpace::diamond().unwrap();
        let top = s.point_by_coords([0.0, 1.0]).unwrap();
        let w = mincut_witness(&s, &top, SearchBudget { max_length: 20.0 })
            .unwrap()
            .unwrap();
        assert_eq!(w.failure_param_exact, rat(2.0 * SQRT2));
        assert_eq!(w.q, s.point_by_coords([0.0, -1.0]).unwrap());
        assert!(w.beyond_distance < w.beyond_path_length);
        let (ok, dev) = is_distance_realizing(&s, &w.segment, 0.0).unwrap();
        assert!(ok && dev == 0.0);

        // Circle: lost past the antipode at half the circumference.
        let c = 2.0 * std::f64::consts::PI;
        let s = GraphSpace::circle(c).unwrap();
        let x = circle_point(&s, 0.0).unwrap();
        let w = mincut_witness(&s, &x, SearchBudget { max_length: 30.0 })
            .unwrap()
            .unwrap();
        assert_eq!(w.failure_param, c / 2.0);

        // Real line: nothing within budget.
        let s = GraphSpace::real_line(40.0).unwrap();
        let x = line_point(&s, 0.0).unwrap();
        assert!(mincut_witness(&s, &x, SearchBudget { max_length: 20.0 })
            .unwrap()
            .is_none());
    }

    #[test]
    fn mincut_from_side_midpoint_finds_opposite_midpoint() {
        // From the midpoint of the upper-left side, both geodesics around
        // the cycle stop minimizing exactly at the opposite midpoint, at
        // parameter 2*sqrt(2) = the distance between the two points.
        let s = GraphSpace::diamond().unwrap();
        let x = s.point_by_coords([-0.5, 0.5]).unwrap();
        let w = mincut_witness(&s, &x, SearchBudget { max_length: 20.0 })
            .unwrap()
            .unwrap();
        assert_eq!(w.q, s.point_by_coords([0.5, -0.5]).unwrap());
        assert_eq!(w.failure_param_exact, rat(2.0 * SQRT2));
    }

    #[test]
    fn euclidean_extendibility_holds_via_ray_extension() {
        let e2 = EuclideanSpace::new(2).unwrap();
        let x = Point::euclid(&[0.5, -0.25]);
        let ys = vec![Point::euclid(&[2.0, 1.0]), Point::euclid(&[-1.0, 0.5])];
        let v = extendibility_at(
            &e2,
            &x,
            &ys,
            &default_radius_grid(),
            &ExtendibilityConfig::default(),
        )
        .unwrap();
        assert_eq!(v.verdict, Verdict::Holds);
        for w in &v.successes {
            let seg =
                GeodesicSegment::from_breakpoints(&e2, vec![w.y.clone(), x.clone(), w.p.clone()])
                    .unwrap();
            let (ok, dev) = is_distance_realizing(&e2, &seg, 1e-6).unwrap();
            assert!(ok, "deviation {dev}");
        }
    }
}
