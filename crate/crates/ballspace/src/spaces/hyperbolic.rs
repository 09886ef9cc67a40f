//! The hyperbolic plane in the hyperboloid model.
//!
//! Points are `(x0, x1, x2)` on the upper sheet of `<p,p> = -1` for the
//! Minkowski form `<a,b> = -a0 b0 + a1 b1 + a2 b2`; the distance is
//! `arccosh(-<a,b>)`, evaluated through the numerically stable
//! `2 asinh(sqrt(<a-b,a-b>)/2)` form.

use rand::{Rng, RngCore};

use crate::metric_core::{CompactSet, NetSet};
use crate::point::Point;
use crate::spaces::{Flag, GroundTruth, ModelSpace};
use crate::Error;

pub struct HyperbolicPlane;

const CARRIER_TOL: f64 = 1e-6;

pub fn minkowski(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    -a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn coords(p: &Point) -> Result<[f64; 3], Error> {
    match p {
        Point::Hyperboloid(c) => {
            if (minkowski(c, c) + 1.0).abs() <= CARRIER_TOL * c[0].max(1.0) && c[0] > 0.0 {
                Ok(*c)
            } else {
                Err(Error::OutsideCarrier(format!(
                    "{c:?} is not on the hyperboloid"
                )))
            }
        }
        _ => Err(Error::OutsideCarrier(format!(
            "{p:?} is not a hyperboloid point"
        ))),
    }
}

fn dist(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    let diff = [a[0] - b[0], a[1] - b[1], a[2] - b[2]];
    let q = minkowski(&diff, &diff).max(0.0);
    2.0 * (q.sqrt() / 2.0).asinh()
}

/// Orthonormal tangent basis at `p` (Minkowski-orthogonal to `p`).
fn tangent_basis(p: &[f64; 3]) -> ([f64; 3], [f64; 3]) {
    let project = |u: [f64; 3], p: &[f64; 3]| {
        // <p,p> = -1, so the tangential part is u + <u,p> p.
        let c = minkowski(&u, p);
        [u[0] + c * p[0], u[1] + c * p[1], u[2] + c * p[2]]
    };
    let normalize = |u: [f64; 3]| {
        let n = minkowski(&u, &u).sqrt();
        [u[0] / n, u[1] / n, u[2] / n]
    };
    let e1 = {
        let cand = if p[1].abs() < 0.9 * p[0] {
            [0.0, 1.0, 0.0]
        } else {
            [0.0, 0.0, 1.0]
        };
        normalize(project(cand, p))
    };
    let e2 = {
        let cand = [0.0, -e1[2], e1[1]];
        let mut u = project(cand, p);
        let c = minkowski(&u, &e1);
        u = [u[0] - c * e1[0], u[1] - c * e1[1], u[2] - c * e1[2]];
        normalize(u)
    };
    (e1, e2)
}

/// Exponential map: unit direction `u` in the tangent space at `p`,
/// parameter `r >= 0`.
fn exp_map(p: &[f64; 3], u: &[f64; 3], r: f64) -> [f64; 3] {
    let (ch, sh) = (r.cosh(), r.sinh());
    renormalize([
        ch * p[0] + sh * u[0],
        ch * p[1] + sh * u[1],
        ch * p[2] + sh * u[2],
    ])
}

/// Pulls accumulated rounding back onto the sheet.
fn renormalize(p: [f64; 3]) -> [f64; 3] {
    let s = (p[1] * p[1] + p[2] * p[2] + 1.0).sqrt();
    [s, p[1], p[2]]
}

/// Unit tangent at `x` pointing toward `q`.
fn direction(x: &[f64; 3], q: &[f64; 3]) -> Option<[f64; 3]> {
    let d = dist(x, q);
    if d == 0.0 {
        return None;
    }
    let sh = d.sinh();
    let ch = d.cosh();
    Some([
        (q[0] - ch * x[0]) / sh,
        (q[1] - ch * x[1]) / sh,
        (q[2] - ch * x[2]) / sh,
    ])
}

impl HyperbolicPlane {
    pub fn origin() -> Point {
        Point::Hyperboloid([1.0, 0.0, 0.0])
    }

    /// Lifts planar polar coordinates at the origin onto the sheet.
    pub fn from_polar(rho: f64, theta: f64) -> Point {
        let o = [1.0, 0.0, 0.0];
        let u = [0.0, theta.cos(), theta.sin()];
        Point::Hyperboloid(exp_map(&o, &u, rho))
    }
}

impl ModelSpace for HyperbolicPlane {
    fn id(&self) -> &str {
        "hyperbolic_plane"
    }

    fn ground_truth(&self) -> GroundTruth {
        GroundTruth {
            strongly_geodesically_complete: Flag::Yes,
            unique_midpoints: Flag::Yes,
        }
    }

    fn contains(&self, p: &Point) -> bool {
        coords(p).is_ok()
    }

    fn distance(&self, p: &Point, q: &Point) -> Result<f64, Error> {
        Ok(dist(&coords(p)?, &coords(q)?))
    }

    fn closed_ball(&self, x: &Point, t: f64, eps: f64) -> Result<CompactSet, Error> {
        if t < 0.0 || !t.is_finite() {
            return Err(Error::InvalidLength(t));
        }
        let c = coords(x)?;
        if t == 0.0 {
            return CompactSet::net(NetSet {
                model_id: self.id().into(),
                points: vec![x.clone()],
                resolution: 0.0,
            });
        }
        if eps <= 0.0 {
            return Err(Error::InvalidLength(eps));
        }
        // Geodesic polar net: radial spacing <= eps (exact along radial
        // geodesics), ring arc gaps <= eps (circumference 2 pi sinh rho).
        let (e1, e2) = tangent_basis(&c);
        let rings = (t / eps).ceil().max(1.0) as usize;
        let mut points = vec![x.clone()];
        for k in 1..=rings {
            let rho = t * k as f64 / rings as f64;
            let m = ((2.0 * std::f64::consts::PI * rho.sinh()) / eps)
                .ceil()
                .max(4.0) as usize;
            for i in 0..m {
                let th = 2.0 * std::f64::consts::PI * i as f64 / m as f64;
                let u = [
                    th.cos() * e1[0] + th.sin() * e2[0],
                    th.cos() * e1[1] + th.sin() * e2[1],
                    th.cos() * e1[2] + th.sin() * e2[2],
                ];
                points.push(Point::Hyperboloid(exp_map(&c, &u, rho)));
            }
        }
        CompactSet::net(NetSet {
            model_id: self.id().into(),
            points,
            resolution: eps,
        })
    }

    fn sphere(&self, x: &Point, t: f64, eps: f64) -> Result<Vec<Point>, Error> {
        if t <= 0.0 {
            return Err(Error::ZeroSphereRadius);
        }
        if eps <= 0.0 {
            return Err(Error::InvalidLength(eps));
        }
        let c = coords(x)?;
        let (e1, e2) = tangent_basis(&c);
        let m = ((2.0 * std::f64::consts::PI * t.sinh()) / eps)
            .ceil()
            .max(4.0) as usize;
        Ok((0..m)
            .map(|i| {
                let th = 2.0 * std::f64::consts::PI * i as f64 / m as f64;
                let u = [
                    th.cos() * e1[0] + th.sin() * e2[0],
                    th.cos() * e1[1] + th.sin() * e2[1],
                    th.cos() * e1[2] + th.sin() * e2[2],
                ];
                Point::Hyperboloid(exp_map(&c, &u, t))
            })
            .collect())
    }

    fn midpoint(&self, p: &Point, q: &Point) -> Result<Option<Point>, Error> {
        let (a, b) = (coords(p)?, coords(q)?);
        let d = dist(&a, &b);
        if d == 0.0 {
            return Ok(Some(p.clone()));
        }
        let u = direction(&a, &b).expect("distinct points");
        Ok(Some(Point::Hyperboloid(exp_map(&a, &u, d / 2.0))))
    }

    fn extend_ray(&self, y: &Point, x: &Point, r: f64) -> Option<Point> {
        let (yc, xc) = (coords(y).ok()?, coords(x).ok()?);
        let u = direction(&xc, &yc)?;
        Some(Point::Hyperboloid(exp_map(&xc, &[-u[0], -u[1], -u[2]], r)))
    }

    fn sample_point(&self, rng: &mut dyn RngCore, window: f64) -> Point {
        let rho = rng.gen_range(0.0..window / 2.0);
        let theta = rng.gen_range(0.0..2.0 * std::f64::consts::PI);
        HyperbolicPlane::from_polar(rho, theta)
    }
}

/// Boost by hyperbolic distance `rho` along the first spatial axis: the
/// canonical translation isometry used by the action fixtures.
pub fn boost_x(p: &[f64; 3], rho: f64) -> [f64; 3] {
    let (ch, sh) = (rho.cosh(), rho.sinh());
    renormalize([ch * p[0] + sh * p[1], sh * p[0] + ch * p[1], p[2]])
}
