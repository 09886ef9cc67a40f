//! The space of compact balls with the Hausdorff metric, the map
//! `(x,t) -> closed ball of radius t at x`, and its comparison against the
//! taxicab metric `d(x,y) + |t - s|` on `X x R>=0`.
//!
//! The map is always 1-Lipschitz; it is an isometry precisely on the
//! strongly geodesically complete fixtures. Verifiers sample ball pairs,
//! compare both metrics and issue verdicts with explicit error budgets:
//! a violation verdict requires a margin exceeding the summed net
//! resolutions plus the base tolerance, so net noise can never fabricate a
//! counterexample.

use num_traits::Zero;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::exact::{rat, rat_abs, rat_max, to_f64, Rat};
use crate::metric_core::{hausdorff, CompactSet};
use crate::point::{Point, PointRepr};
use crate::spaces::{ModelSpace, ProductMax};
use crate::Error;

/// A point of the ball space: a center and a non-negative radius.
#[derive(Debug, Clone, PartialEq)]
pub struct BallPoint {
    pub center: Point,
    pub radius: f64,
}

impl BallPoint {
    pub fn new(center: Point, radius: f64) -> Result<Self, Error> {
        if radius < 0.0 || !radius.is_finite() {
            return Err(Error::InvalidLength(radius));
        }
        Ok(BallPoint { center, radius })
    }
}

/// `f(x,t)`: the closed ball of radius `t` around `x`, as a compact set.
pub fn f_map(space: &dyn ModelSpace, bp: &BallPoint, eps: f64) -> Result<CompactSet, Error> {
    space.closed_ball(&bp.center, bp.radius, eps)
}

/// Taxicab distance `d(x,y) + |t-s|` between ball points.
pub fn taxicab_dist(space: &dyn ModelSpace, a: &BallPoint, b: &BallPoint) -> Result<f64, Error> {
    match taxicab_dist_exact(space, a, b) {
        Some(d) => Ok(to_f64(&d)),
        None => Ok(space.distance(&a.center, &b.center)? + (a.radius - b.radius).abs()),
    }
}

/// Exact rational taxicab distance on graph-backed models.
pub fn taxicab_dist_exact(space: &dyn ModelSpace, a: &BallPoint, b: &BallPoint) -> Option<Rat> {
    let d = space.distance_exact(&a.center, &b.center)?;
    Some(&d + &rat_abs(&(&rat(a.radius) - &rat(b.radius))))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IsometryVerdict {
    Isometry,
    LipschitzOnly,
    Violation,
}

/// One compared pair of ball points.
#[derive(Debug, Clone)]
pub struct PairSample {
    pub a: BallPoint,
    pub b: BallPoint,
    pub d_h: f64,
    pub d_t: f64,
    /// Signed deviation `d_h - d_t`; exactly zero on exact models when the
    /// two metrics agree.
    pub deviation: f64,
    pub error_budget: f64,
}

#[derive(Debug, Clone)]
pub struct IsometryCheckReport {
    pub model_id: String,
    pub samples: usize,
    pub max_abs_deviation: f64,
    /// Maximum of `d_h - d_t`: the 1-Lipschitz side, within budget on every
    /// length space.
    pub max_excess: f64,
    /// Maximum of `d_t - d_h`: exceeds the budget exactly on the
    /// non-isometry fixtures.
    pub max_defect: f64,
    pub tolerance: f64,
    pub net_epsilon: f64,
    pub verdict: IsometryVerdict,
    pub witnesses: Vec<PairSample>,
    pub seed: u64,
}

/// Sampling configuration shared by the ball-space suites.
#[derive(Debug, Clone)]
pub struct SampleConfig {
    pub n: usize,
    pub eps: f64,
    pub tol: f64,
    pub r_max: f64,
    pub window: f64,
    pub seed: u64,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig {
            n: 100,
            eps: 0.01,
            tol: 1e-6,
            r_max: 3.0,
            window: 10.0,
            seed: 0,
        }
    }
}

/// Random ball point: center uniform in the window, radius uniform in
/// `(0, r_max]`.
pub fn sample_ball_point(
    space: &dyn ModelSpace,
    rng: &mut dyn RngCore,
    window: f64,
    r_max: f64,
) -> BallPoint {
    let center = space.sample_point(rng, window);
    let radius = r_max - rng.gen_range(0.0..r_max);
    BallPoint { center, radius }
}

fn compare_pair(
    space: &dyn ModelSpace,
    a: &BallPoint,
    b: &BallPoint,
    eps: f64,
    tol: f64,
) -> Result<PairSample, Error> {
    let ball_a = f_map(space, a, eps)?;
    let ball_b = f_map(space, b, eps)?;
    let h = hausdorff(space, &ball_a, &ball_b)?;
    match (&h.exact, taxicab_dist_exact(space, a, b)) {
        (Some(hx), Some(tx)) => {
            let dev = hx - &tx;
            Ok(PairSample {
                a: a.clone(),
                b: b.clone(),
                d_h: h.value,
                d_t: to_f64(&tx),
                deviation: to_f64(&dev),
                error_budget: tol,
            })
        }
        _ => {
            let d_t = taxicab_dist(space, a, b)?;
            Ok(PairSample {
                a: a.clone(),
                b: b.clone(),
                d_h: h.value,
                d_t,
                deviation: h.value - d_t,
                error_budget: h.error_bound + tol,
            })
        }
    }
}

fn run_pairs(
    space: &dyn ModelSpace,
    pairs: &[(BallPoint, BallPoint)],
    eps: f64,
    tol: f64,
) -> Result<Vec<PairSample>, Error> {
    pairs
        .par_iter()
        .map(|(a, b)| compare_pair(space, a, b, eps, tol))
        .collect()
}

fn sample_pairs(
    space: &dyn ModelSpace,
    cfg: &SampleConfig,
    stream: u64,
) -> Vec<(BallPoint, BallPoint)> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ stream);
    (0..cfg.n)
        .map(|_| {
            (
                sample_ball_point(space, &mut rng, cfg.window, cfg.r_max),
                sample_ball_point(space, &mut rng, cfg.window, cfg.r_max),
            )
        })
        .collect()
}

/// Verifies the 1-Lipschitz bound `d_H(f(p), f(q)) <= d_T(p, q)` (within
/// the error budget) on `n` random pairs. The bound holds on every
/// catalogued model, isometry or not, so the verdict never claims more.
pub fn check_lipschitz(
    space: &dyn ModelSpace,
    cfg: &SampleConfig,
) -> Result<IsometryCheckReport, Error> {
    let pairs = sample_pairs(space, cfg, 0x1195);
    let samples = run_pairs(space, &pairs, cfg.eps, cfg.tol)?;
    let mut report = summarize(space, samples, cfg);
    // Lipschitz-only claim: witnesses are excess-side violations only.
    report.witnesses.retain(|w| w.deviation > w.error_budget);
    report.verdict = if report.witnesses.is_empty() {
        IsometryVerdict::LipschitzOnly
    } else {
        IsometryVerdict::Violation
    };
    Ok(report)
}

/// Compares `d_H` against `d_T` on `n` random pairs plus any designated
/// pairs; verdict `isometry` when every deviation is within budget,
/// `violation` with witnesses when a margin certifiably exceeds it.
pub fn check_isometry(
    space: &dyn ModelSpace,
    cfg: &SampleConfig,
    designated: &[(BallPoint, BallPoint)],
) -> Result<IsometryCheckReport, Error> {
    let mut pairs = sample_pairs(space, cfg, 0x150);
    pairs.extend(designated.iter().cloned());
    let samples = run_pairs(space, &pairs, cfg.eps, cfg.tol)?;
    Ok(summarize(space, samples, cfg))
}

fn summarize(
    space: &dyn ModelSpace,
    samples: Vec<PairSample>,
    cfg: &SampleConfig,
) -> IsometryCheckReport {
    let mut max_abs = 0.0f64;
    let mut max_excess = 0.0f64;
    let mut max_defect = 0.0f64;
    let mut witnesses: Vec<PairSample> = Vec::new();
    for s in &samples {
        max_abs = max_abs.max(s.deviation.abs());
        max_excess = max_excess.max(s.deviation);
        max_defect = max_defect.max(-s.deviation);
        if s.deviation.abs() > s.error_budget {
            witnesses.push(s.clone());
        }
    }
    witnesses.sort_by(|a, b| b.deviation.abs().total_cmp(&a.deviation.abs()));
    witnesses.truncate(8);
    let verdict = if witnesses.is_empty() {
        IsometryVerdict::Isometry
    } else {
        IsometryVerdict::Violation
    };
    IsometryCheckReport {
        model_id: space.id().to_string(),
        samples: samples.len(),
        max_abs_deviation: max_abs,
        max_excess,
        max_defect,
        tolerance: cfg.tol,
        net_epsilon: cfg.eps,
        verdict,
        witnesses,
        seed: cfg.seed,
    }
}

/// A certified (or, on net models, candidate) pair of distinct ball points
/// with equal balls.
#[derive(Debug, Clone)]
pub struct InjectivityWitness {
    pub a: BallPoint,
    pub b: BallPoint,
    pub certified: bool,
}

#[derive(Debug, Clone)]
pub struct InjectivityReport {
    pub model_id: String,
    pub pairs_checked: usize,
    pub witnesses: Vec<InjectivityWitness>,
    pub seed: u64,
}

/// Searches for distinct parameters `(x,t) != (y,s)` with equal balls.
/// Exact equality of interval unions on graphs; on net models a pair is
/// only a candidate when `d_H` is within the summed resolutions.
pub fn check_injectivity(
    space: &dyn ModelSpace,
    cfg: &SampleConfig,
    candidates: &[(BallPoint, BallPoint)],
) -> Result<InjectivityReport, Error> {
    let mut pairs: Vec<(BallPoint, BallPoint)> = candidates.to_vec();
    if pairs.is_empty() {
        pairs = sample_pairs(space, cfg, 0x1a9);
    }
    let mut witnesses = Vec::new();
    for (a, b) in &pairs {
        if ball_points_equal(space, a, b) {
            continue;
        }
        let ball_a = f_map(space, a, cfg.eps)?;
        let ball_b = f_map(space, b, cfg.eps)?;
        match (&ball_a, &ball_b) {
            (CompactSet::Intervals(ia), CompactSet::Intervals(ib)) => {
                if ia == ib {
                    witnesses.push(InjectivityWitness {
                        a: a.clone(),
                        b: b.clone(),
                        certified: true,
                    });
                }
            }
            _ => {
                let h = hausdorff(space, &ball_a, &ball_b)?;
                if h.value <= h.error_bound + cfg.tol {
                    witnesses.push(InjectivityWitness {
                        a: a.clone(),
                        b: b.clone(),
                        certified: false,
                    });
                }
            }
        }
    }
    Ok(InjectivityReport {
        model_id: space.id().to_string(),
        pairs_checked: pairs.len(),
        witnesses,
        seed: cfg.seed,
    })
}

fn ball_points_equal(space: &dyn ModelSpace, a: &BallPoint, b: &BallPoint) -> bool {
    if space.is_exact() {
        a.center == b.center && rat(a.radius) == rat(b.radius)
    } else {
        a.center == b.center && a.radius == b.radius
    }
}

/// Report of the max-metric product identity checks.
#[derive(Debug, Clone)]
pub struct ProductCheckReport {
    pub product_id: String,
    pub samples: usize,
    /// Max |direct product d_H - max of factor d_H|.
    pub max_identity_deviation: f64,
    /// Max |max of factor d_H - (d_inf + |t-s|)|, the corollary chain;
    /// meaningful when both factors are strongly geodesically complete.
    pub max_chain_deviation: f64,
    pub error_budget: f64,
    pub seed: u64,
}

/// Compares the directly computed Hausdorff distance between product balls
/// against the max of factor Hausdorff distances, and against the chain
/// `max(d_X, d_Y) + |t-s|`.
pub fn product_ball_distance_check(
    product: &ProductMax,
    cfg: &SampleConfig,
) -> Result<ProductCheckReport, Error> {
    let (fx, fy) = product.factors();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x9d0d);
    let pairs: Vec<(BallPoint, BallPoint)> = (0..cfg.n)
        .map(|_| {
            (
                sample_ball_point(product, &mut rng, cfg.window, cfg.r_max),
                sample_ball_point(product, &mut rng, cfg.window, cfg.r_max),
            )
        })
        .collect();

    let results: Vec<(f64, f64, f64)> = pairs
        .par_iter()
        .map(|(a, b)| -> Result<(f64, f64, f64), Error> {
            let (ax, ay) = split_pair(&a.center)?;
            let (bx, by) = split_pair(&b.center)?;
            let ball_a = f_map(product, a, cfg.eps)?;
            let ball_b = f_map(product, b, cfg.eps)?;
            let direct = hausdorff(product, &ball_a, &ball_b)?;
            let hx = hausdorff(
                fx,
                &fx.closed_ball(ax, a.radius, cfg.eps)?,
                &fx.closed_ball(bx, b.radius, cfg.eps)?,
            )?;
            let hy = hausdorff(
                fy,
                &fy.closed_ball(ay, a.radius, cfg.eps)?,
                &fy.closed_ball(by, b.radius, cfg.eps)?,
            )?;
            let factor_max = hx.value.max(hy.value);
            let identity_dev = (direct.value - factor_max).abs();
            let chain =
                fx.distance(ax, bx)?.max(fy.distance(ay, by)?) + (a.radius - b.radius).abs();
            let chain_dev = (factor_max - chain).abs();
            Ok((
                identity_dev,
                chain_dev,
                direct.error_bound.max(hx.error_bound + hy.error_bound),
            ))
        })
        .collect::<Result<_, _>>()?;

    let mut max_identity = 0.0f64;
    let mut max_chain = 0.0f64;
    let mut budget = 0.0f64;
    for (i, c, e) in results {
        max_identity = max_identity.max(i);
        max_chain = max_chain.max(c);
        budget = budget.max(e);
    }
    Ok(ProductCheckReport {
        product_id: product.id().to_string(),
        samples: pairs.len(),
        max_identity_deviation: max_identity,
        max_chain_deviation: max_chain,
        error_budget: 2.0 * cfg.eps + budget + cfg.tol,
        seed: cfg.seed,
    })
}

fn split_pair(p: &Point) -> Result<(&Point, &Point), Error> {
    match p {
        Point::Pair(a, b) => Ok((a, b)),
        _ => Err(Error::OutsideCarrier("product point required".into())),
    }
}

/// Exact three-route check of the product identity for interval balls on
/// two line factors: centers `(x1, y1)`, `(x2, y2)`, radii `t`, `s`.
///
/// Routes: (1) the containment characterization
/// `inf { r : A in U_r(B), B in U_r(A) }` evaluated through per-factor
/// dilation deficits, (2) max of the factor interval Hausdorff formulas,
/// (3) the chain `max(|x1-x2|, |y1-y2|) + |t-s|`. All exact rationals.
pub fn product_interval_identity(
    c1: (f64, f64),
    t: f64,
    c2: (f64, f64),
    s: f64,
) -> Result<(Rat, Rat, Rat), Error> {
    if t < 0.0 || s < 0.0 {
        return Err(Error::InvalidLength(t.min(s)));
    }
    let (x1, y1, x2, y2, t, s) = (rat(c1.0), rat(c1.1), rat(c2.0), rat(c2.1), rat(t), rat(s));
    // Interval [a,b] fits in [c - r, d + r] iff r >= max(c - a, b - d, 0).
    let deficit = |a: &Rat, b: &Rat, c: &Rat, d: &Rat| rat_max(rat_max(c - a, b - d), Rat::zero());
    let per_factor = |cx1: &Rat, cx2: &Rat| -> Rat {
        let (a1, b1) = (cx1 - &t, cx1 + &t);
        let (a2, b2) = (cx2 - &s, cx2 + &s);
        rat_max(deficit(&a1, &b1, &a2, &b2), deficit(&a2, &b2, &a1, &b1))
    };
    let containment = rat_max(per_factor(&x1, &x2), per_factor(&y1, &y2));

    // Factor interval formula max(|c-a|, |d-b|) on the rational endpoints
    // (rounding them through f64 would break exact equality of the routes).
    let interval_formula = |cx1: &Rat, cx2: &Rat| -> Rat {
        let (a, b) = (cx1 - &t, cx1 + &t);
        let (c, d) = (cx2 - &s, cx2 + &s);
        rat_max(rat_abs(&(&c - &a)), rat_abs(&(&d - &b)))
    };
    let factor_max = rat_max(interval_formula(&x1, &x2), interval_formula(&y1, &y2));

    let chain = rat_max(rat_abs(&(&x1 - &x2)), rat_abs(&(&y1 - &y2))) + rat_abs(&(&t - &s));
    Ok((containment, factor_max, chain))
}

/// Designated isometry-violation witness pairs for the catalogued
/// non-complete fixtures: the counterexample geometry of each model,
/// embedded as data. Empty for models whose ball map is an isometry.
pub fn designated_violation_pairs(space: &dyn ModelSpace) -> Vec<(BallPoint, BallPoint)> {
    let sqrt2 = std::f64::consts::SQRT_2;
    let by_coords = |c: [f64; 2]| -> Option<Point> {
        space
            .graph()
            .and_then(|g| g.point_by_coords(c, 1e-9))
            .map(Point::Graph)
    };
    match space.id() {
        // Singleton against the unit ball at the boundary: d_H = sqrt(2)
        // (boundary corners) versus d_T = 2.
        "halfplane" => vec![(
            BallPoint {
                center: Point::euclid(&[0.0, 1.0]),
                radius: 0.0,
            },
            BallPoint {
                center: Point::euclid(&[0.0, 0.0]),
                radius: 1.0,
            },
        )],
        // Radius-2 balls at the left tip and the stub tip coincide.
        "tee" => match (by_coords([-1.0, 0.0]), by_coords([0.0, 1.0])) {
            (Some(p), Some(q)) => {
                vec![(
                    BallPoint {
                        center: p,
                        radius: 2.0,
                    },
                    BallPoint {
                        center: q,
                        radius: 2.0,
                    },
                )]
            }
            _ => vec![],
        },
        // Radius beyond the diameter swallows the whole cycle from any
        // center.
        "diamond" => match (by_coords([0.0, 1.0]), by_coords([0.0, -1.0])) {
            (Some(p), Some(q)) => vec![(
                BallPoint {
                    center: p,
                    radius: 3.0 * sqrt2,
                },
                BallPoint {
                    center: q,
                    radius: 3.0 * sqrt2,
                },
            )],
            _ => vec![],
        },
        // Opposite poles of one diamond grow identical balls at radius
        // 2*sqrt(2).
        "diamond_chain" => match (by_coords([0.0, 1.0]), by_coords([0.0, -1.0])) {
            (Some(p), Some(q)) => vec![(
                BallPoint {
                    center: p,
                    radius: 2.0 * sqrt2,
                },
                BallPoint {
                    center: q,
                    radius: 2.0 * sqrt2,
                },
            )],
            _ => vec![],
        },
        // Half-circumference balls are the whole circle regardless of
        // center.
        "circle" => {
            let Some(graph) = space.graph() else {
                return vec![];
            };
            let half_edge = &graph.edge(0).len;
            let half = to_f64(half_edge);
            let origin = Point::Graph(crate::point::GraphPoint::Vertex(0));
            let quarter = crate::exact::rat_half(half_edge);
            let other =
                Point::Graph(graph.canonical(crate::point::GraphPoint::interior(0, quarter)));
            vec![(
                BallPoint {
                    center: origin,
                    radius: half,
                },
                BallPoint {
                    center: other,
                    radius: half,
                },
            )]
        }
        _ => vec![],
    }
}

/// Designated extendibility-failure probes `(x, y, r)` for the
/// non-complete fixtures, chosen away from window artifacts.
pub fn designated_failure_probe(space: &dyn ModelSpace) -> Option<(Point, Point, f64)> {
    let by_coords = |c: [f64; 2]| -> Option<Point> {
        space
            .graph()
            .and_then(|g| g.point_by_coords(c, 1e-9))
            .map(Point::Graph)
    };
    match space.id() {
        "halfplane" => Some((Point::euclid(&[0.0, 0.0]), Point::euclid(&[0.0, 1.0]), 0.5)),
        "tee" => Some((by_coords([0.0, 1.0])?, by_coords([0.0, 0.0])?, 0.5)),
        "diamond" => Some((by_coords([-0.5, 0.5])?, by_coords([0.5, -0.5])?, 0.5)),
        "diamond_chain" => Some((by_coords([0.0, 1.0])?, by_coords([0.0, -1.0])?, 0.5)),
        "circle" => {
            let graph = space.graph()?;
            let x = Point::Graph(crate::point::GraphPoint::Vertex(0));
            let quarter = to_f64(&graph.edge(0).len) / 2.0;
            let y =
                Point::Graph(graph.canonical(crate::point::GraphPoint::interior(0, rat(quarter))));
            Some((x, y, 2.0 * to_f64(&graph.edge(0).len)))
        }
        _ => None,
    }
}

/// Serializable witness form for reports.
#[derive(Debug, Clone, Serialize)]
pub struct WitnessRepr {
    pub a: PointRepr,
    pub a_radius: f64,
    pub b: PointRepr,
    pub b_radius: f64,
    pub d_h: f64,
    pub d_t: f64,
    pub deviation: f64,
}

impl PairSample {
    pub fn describe(&self, space: &dyn ModelSpace) -> WitnessRepr {
        WitnessRepr {
            a: crate::spaces::report_point(space, &self.a.center),
            a_radius: self.a.radius,
            b: crate::spaces::report_point(space, &self.b.center),
            b_radius: self.b.radius,
            d_h: self.d_h,
            d_t: self.d_t,
            deviation: self.deviation,
        }
    }
}
