//! The plane with the taxicab metric `d((a1,a2),(b1,b2)) = |b1-a1| + |b2-a2|`.
//!
//! Strongly geodesically complete but with non-unique geodesic segments, so
//! it separates the two ground-truth flags.

use rand::{Rng, RngCore};

use crate::metric_core::{CompactSet, NetSet};
use crate::point::Point;
use crate::spaces::{Flag, GroundTruth, ModelSpace};
use crate::Error;

pub struct TaxicabR2;

fn coords(p: &Point) -> Result<[f64; 2], Error> {
    match p.as_euclid() {
        Some(c) if c.len() == 2 => Ok([c[0], c[1]]),
        _ => Err(Error::OutsideCarrier(format!(
            "{p:?} is not a point of taxicab R^2"
        ))),
    }
}

fn d1(a: [f64; 2], b: [f64; 2]) -> f64 {
    (a[0] - b[0]).abs() + (a[1] - b[1]).abs()
}

impl ModelSpace for TaxicabR2 {
    fn id(&self) -> &str {
        "taxicab_r2"
    }

    fn ground_truth(&self) -> GroundTruth {
        GroundTruth {
            strongly_geodesically_complete: Flag::Yes,
            unique_midpoints: Flag::No,
        }
    }

    fn contains(&self, p: &Point) -> bool {
        matches!(p.as_euclid(), Some(c) if c.len() == 2 && c.iter().all(|x| x.is_finite()))
    }

    fn distance(&self, p: &Point, q: &Point) -> Result<f64, Error> {
        Ok(d1(coords(p)?, coords(q)?))
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
        // Scanline net of the diamond |dx| + |dy| <= t: rows spaced eps/2,
        // in-row step eps; a ball point is within eps/2 of the toward-center
        // row (whose slice is wider) plus eps/2 along it.
        let points = scanline(c, t, eps, |dy| t - dy.abs());
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
        // Four sides of the diamond; taxicab arc length of each is 2t.
        let n = ((2.0 * t) / eps).ceil().max(1.0) as usize;
        let corners = [[t, 0.0], [0.0, t], [-t, 0.0], [0.0, -t], [t, 0.0]];
        let mut out = Vec::with_capacity(4 * n);
        for side in corners.windows(2) {
            for i in 0..n {
                let f = i as f64 / n as f64;
                out.push(Point::euclid(&[
                    c[0] + side[0][0] + f * (side[1][0] - side[0][0]),
                    c[1] + side[0][1] + f * (side[1][1] - side[0][1]),
                ]));
            }
        }
        Ok(out)
    }

    fn midpoint(&self, p: &Point, q: &Point) -> Result<Option<Point>, Error> {
        let (a, b) = (coords(p)?, coords(q)?);
        Ok(Some(Point::euclid(&[
            0.5 * (a[0] + b[0]),
            0.5 * (a[1] + b[1]),
        ])))
    }

    fn extend_ray(&self, y: &Point, x: &Point, r: f64) -> Option<Point> {
        let (yc, xc) = (coords(y).ok()?, coords(x).ok()?);
        let d = d1(yc, xc);
        if d == 0.0 || r < 0.0 {
            return None;
        }
        // Scaling the L1 direction keeps the three points d1-collinear.
        Some(Point::euclid(&[
            xc[0] + r * (xc[0] - yc[0]) / d,
            xc[1] + r * (xc[1] - yc[1]) / d,
        ]))
    }

    fn sample_point(&self, rng: &mut dyn RngCore, window: f64) -> Point {
        let half = window / 2.0;
        Point::euclid(&[rng.gen_range(-half..half), rng.gen_range(-half..half)])
    }
}

/// Scanline net of a convex region symmetric in x around `c`, with slice
/// half-width `w(dy)` at vertical offset `dy in [-t, t]`.
pub(super) fn scanline(c: [f64; 2], t: f64, eps: f64, w: impl Fn(f64) -> f64) -> Vec<Point> {
    let rows = ((2.0 * t) / (eps / 2.0)).ceil().max(2.0) as usize;
    let rows = rows + rows % 2; // even count => the center row is on the grid
    let mut out = Vec::new();
    for j in 0..=rows {
        let dy = -t + 2.0 * t * j as f64 / rows as f64;
        let half = w(dy).max(0.0);
        if half == 0.0 {
            out.push(Point::euclid(&[c[0], c[1] + dy]));
            continue;
        }
        let n = ((2.0 * half) / eps).ceil().max(1.0) as usize;
        for i in 0..=n {
            let dx = -half + 2.0 * half * i as f64 / n as f64;
            out.push(Point::euclid(&[c[0] + dx, c[1] + dy]));
        }
    }
    out
}
