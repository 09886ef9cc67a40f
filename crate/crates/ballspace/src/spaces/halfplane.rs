//! The closed upper half-plane with the restricted Euclidean metric.
//!
//! The carrier is convex, so the induced metric is intrinsic with straight
//! geodesics; segments hitting the boundary cannot be extended, making this
//! the canonical "injective but not strongly geodesically complete" fixture.

use rand::{Rng, RngCore};

use crate::metric_core::{CompactSet, NetSet};
use crate::point::Point;
use crate::spaces::euclidean::l2;
use crate::spaces::taxicab::scanline;
use crate::spaces::{Flag, GroundTruth, ModelSpace};
use crate::Error;

pub struct HalfPlane;

fn coords(p: &Point) -> Result<[f64; 2], Error> {
    match p.as_euclid() {
        Some(c) if c.len() == 2 && c[1] >= 0.0 => Ok([c[0], c[1]]),
        _ => Err(Error::OutsideCarrier(format!(
            "{p:?} is not in the closed upper half-plane"
        ))),
    }
}

impl ModelSpace for HalfPlane {
    fn id(&self) -> &str {
        "halfplane"
    }

    fn ground_truth(&self) -> GroundTruth {
        GroundTruth {
            strongly_geodesically_complete: Flag::No,
            unique_midpoints: Flag::Yes,
        }
    }

    fn contains(&self, p: &Point) -> bool {
        matches!(p.as_euclid(), Some(c) if c.len() == 2 && c[1] >= 0.0 && c.iter().all(|x| x.is_finite()))
    }

    fn distance(&self, p: &Point, q: &Point) -> Result<f64, Error> {
        let (a, b) = (coords(p)?, coords(q)?);
        Ok(l2(&a, &b))
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
        // Clipped disc: scanline rows with y >= 0 only. A clipped-ball point
        // moves toward the center row without leaving the carrier, so the
        // covering argument survives the clipping.
        let points: Vec<Point> = scanline(c, t, eps, |dy| (t * t - dy * dy).max(0.0).sqrt())
            .into_iter()
            .filter(|p| p.as_euclid().is_some_and(|q| q[1] >= 0.0))
            .collect();
        // Add the boundary chord so the clipped rim is represented exactly.
        let mut points = points;
        if c[1] < t {
            let w = (t * t - c[1] * c[1]).sqrt();
            let n = ((2.0 * w) / eps).ceil().max(1.0) as usize;
            for i in 0..=n {
                points.push(Point::euclid(&[
                    c[0] - w + 2.0 * w * i as f64 / n as f64,
                    0.0,
                ]));
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
        let m = ((2.0 * std::f64::consts::PI * t) / eps).ceil().max(4.0) as usize;
        let mut out = Vec::new();
        for i in 0..m {
            let th = 2.0 * std::f64::consts::PI * i as f64 / m as f64;
            let p = [c[0] + t * th.cos(), c[1] + t * th.sin()];
            if p[1] >= 0.0 {
                out.push(Point::euclid(&p));
            }
        }
        // Exact clip points where the circle meets the boundary.
        if c[1] < t {
            let w = (t * t - c[1] * c[1]).sqrt();
            out.push(Point::euclid(&[c[0] - w, 0.0]));
            out.push(Point::euclid(&[c[0] + w, 0.0]));
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
        let d = l2(&yc, &xc);
        if d == 0.0 || r < 0.0 {
            return None;
        }
        let p = [
            xc[0] + r * (xc[0] - yc[0]) / d,
            xc[1] + r * (xc[1] - yc[1]) / d,
        ];
        // The straight extension may leave the carrier; that is precisely
        // the geodesic incompleteness of this model.
        (p[1] >= 0.0).then(|| Point::euclid(&p))
    }

    fn sample_point(&self, rng: &mut dyn RngCore, window: f64) -> Point {
        let half = window / 2.0;
        Point::euclid(&[rng.gen_range(-half..half), rng.gen_range(0.0..window)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_lower_half_plane_points() {
        let s = HalfPlane;
        let err = s.distance(&Point::euclid(&[0.0, -1.0]), &Point::euclid(&[0.0, 1.0]));
        assert!(err.is_err());
    }

    #[test]
    fn clipped_ball_contains_boundary_corners() {
        let s = HalfPlane;
        let ball = s
            .closed_ball(&Point::euclid(&[0.0, 0.0]), 1.0, 0.01)
            .unwrap();
        let net = ball.as_net().unwrap();
        for target in [[1.0, 0.0], [-1.0, 0.0], [0.0, 1.0]] {
            let hit = net.points.iter().any(|p| {
                let c = p.as_euclid().unwrap();
                l2(c, &target) <= 1e-9
            });
            assert!(hit, "corner {target:?} missing from clipped ball net");
        }
        assert!(net.points.iter().all(|p| p.as_euclid().unwrap()[1] >= 0.0));
    }
}
