//! Euclidean space R^n with the standard metric.

use rand::{Rng, RngCore};

use crate::metric_core::{CompactSet, NetSet};
use crate::point::Point;
use crate::spaces::{Flag, GroundTruth, ModelSpace};
use crate::Error;

pub struct EuclideanSpace {
    id: String,
    dim: usize,
}

impl EuclideanSpace {
    pub fn new(dim: usize) -> Result<Self, Error> {
        if dim == 0 {
            return Err(Error::Invalid("dimension must be positive".into()));
        }
        Ok(EuclideanSpace {
            id: format!("euclidean_r{dim}"),
            dim,
        })
    }

    fn coords<'a>(&self, p: &'a Point) -> Result<&'a [f64], Error> {
        match p.as_euclid() {
            Some(c) if c.len() == self.dim => Ok(c),
            _ => Err(Error::OutsideCarrier(format!(
                "{p:?} is not a point of R^{}",
                self.dim
            ))),
        }
    }
}

pub(super) fn l2(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

impl ModelSpace for EuclideanSpace {
    fn id(&self) -> &str {
        &self.id
    }

    fn ground_truth(&self) -> GroundTruth {
        GroundTruth {
            strongly_geodesically_complete: Flag::Yes,
            unique_midpoints: Flag::Yes,
        }
    }

    fn contains(&self, p: &Point) -> bool {
        matches!(p.as_euclid(), Some(c) if c.len() == self.dim && c.iter().all(|x| x.is_finite()))
    }

    fn distance(&self, p: &Point, q: &Point) -> Result<f64, Error> {
        Ok(l2(self.coords(p)?, self.coords(q)?))
    }

    fn closed_ball(&self, x: &Point, t: f64, eps: f64) -> Result<CompactSet, Error> {
        if t < 0.0 || !t.is_finite() {
            return Err(Error::InvalidLength(t));
        }
        let c = self.coords(x)?;
        if t == 0.0 {
            return CompactSet::net(NetSet {
                model_id: self.id.clone(),
                points: vec![x.clone()],
                resolution: 0.0,
            });
        }
        if eps <= 0.0 {
            return Err(Error::InvalidLength(eps));
        }
        let points = match self.dim {
            1 => grid_1d(c[0], t, eps),
            2 => polar_disc(c, t, eps),
            d => {
                return Err(Error::Unsupported(format!(
                    "ball nets are implemented for dimensions 1 and 2, not {d}"
                )))
            }
        };
        CompactSet::net(NetSet {
            model_id: self.id.clone(),
            points,
            resolution: eps,
        })
    }

    fn sphere(&self, x: &Point, t: f64, eps: f64) -> Result<Vec<Point>, Error> {
        if t <= 0.0 {
            return Err(Error::ZeroSphereRadius);
        }
        let c = self.coords(x)?;
        match self.dim {
            1 => Ok(vec![Point::euclid(&[c[0] - t]), Point::euclid(&[c[0] + t])]),
            2 => {
                if eps <= 0.0 {
                    return Err(Error::InvalidLength(eps));
                }
                let m = ((2.0 * std::f64::consts::PI * t) / eps).ceil().max(4.0) as usize;
                Ok((0..m)
                    .map(|i| {
                        let th = 2.0 * std::f64::consts::PI * i as f64 / m as f64;
                        Point::euclid(&[c[0] + t * th.cos(), c[1] + t * th.sin()])
                    })
                    .collect())
            }
            d => Err(Error::Unsupported(format!(
                "sphere nets are implemented for dimensions 1 and 2, not {d}"
            ))),
        }
    }

    fn midpoint(&self, p: &Point, q: &Point) -> Result<Option<Point>, Error> {
        let (a, b) = (self.coords(p)?, self.coords(q)?);
        let m: Vec<f64> = a.iter().zip(b).map(|(x, y)| 0.5 * (x + y)).collect();
        Ok(Some(Point::Euclid(m)))
    }

    fn extend_ray(&self, y: &Point, x: &Point, r: f64) -> Option<Point> {
        let (yc, xc) = (self.coords(y).ok()?, self.coords(x).ok()?);
        let d = l2(yc, xc);
        if d == 0.0 || r < 0.0 {
            return None;
        }
        let p: Vec<f64> = xc
            .iter()
            .zip(yc)
            .map(|(xi, yi)| xi + r * (xi - yi) / d)
            .collect();
        Some(Point::Euclid(p))
    }

    fn sample_point(&self, rng: &mut dyn RngCore, window: f64) -> Point {
        let half = window / 2.0;
        Point::Euclid((0..self.dim).map(|_| rng.gen_range(-half..half)).collect())
    }
}

fn grid_1d(center: f64, t: f64, eps: f64) -> Vec<Point> {
    let n = ((2.0 * t) / (2.0 * eps)).ceil().max(1.0) as usize;
    let h = 2.0 * t / n as f64;
    (0..=n)
        .map(|i| Point::euclid(&[center - t + i as f64 * h]))
        .collect()
}

/// Polar net of a closed disc: ring spacing ≤ eps, ring arc gaps ≤ eps, so
/// any disc point is within eps/2 + eps/2 of a sample.
fn polar_disc(center: &[f64], t: f64, eps: f64) -> Vec<Point> {
    let rings = (t / eps).ceil().max(1.0) as usize;
    let mut out = vec![Point::euclid(&[center[0], center[1]])];
    for k in 1..=rings {
        let rho = t * k as f64 / rings as f64;
        let m = ((2.0 * std::f64::consts::PI * rho) / eps).ceil().max(4.0) as usize;
        for i in 0..m {
            let th = 2.0 * std::f64::consts::PI * i as f64 / m as f64;
            out.push(Point::euclid(&[
                center[0] + rho * th.cos(),
                center[1] + rho * th.sin(),
            ]));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ball_net_resolution_holds_on_random_disc_points() {
        let space = EuclideanSpace::new(2).unwrap();
        let center = Point::euclid(&[0.3, -0.7]);
        let eps = 0.05;
        let ball = space.closed_ball(&center, 1.3, eps).unwrap();
        let net = ball.as_net().unwrap();
        // Deterministic probe points across the disc, including boundary.
        for i in 0..200 {
            let th = i as f64 * 0.37;
            let rho = 1.3 * ((i as f64 * 0.618034) % 1.0).sqrt();
            let p = Point::euclid(&[0.3 + rho * th.cos(), -0.7 + rho * th.sin()]);
            let min = net
                .points
                .iter()
                .map(|q| space.distance(&p, q).unwrap())
                .fold(f64::INFINITY, f64::min);
            assert!(
                min <= eps + 1e-12,
                "covering radius violated: {min} > {eps}"
            );
        }
    }

    #[test]
    fn sphere_net_gap_bound() {
        let space = EuclideanSpace::new(2).unwrap();
        let pts = space
            .sphere(&Point::euclid(&[0.0, 0.0]), 1.0, 0.01)
            .unwrap();
        assert!(pts.len() >= 629);
        for w in pts.windows(2) {
            assert!(space.distance(&w[0], &w[1]).unwrap() <= 0.01 + 1e-12);
        }
    }
}
