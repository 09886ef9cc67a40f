//! The real line with the pulled-back metric
//! `d_n(a,b) = |psi_n(a) - psi_n(b)|`, `psi_n(x) = x + sin(x)/n`, `n >= 2`.
//!
//! Each member is isometric to the standard line (psi_n is strictly
//! increasing), hence strongly geodesically complete, and
//! `sup |d_n - d| <= 2/n`: the family realizes the uniform-convergence
//! hypotheses honestly. Ball endpoints come from monotone root-finding;
//! the bisection tolerance is part of the reported slack.

use rand::{Rng, RngCore};

use crate::metric_core::{CompactSet, NetSet};
use crate::point::Point;
use crate::spaces::{Flag, GroundTruth, ModelSpace};
use crate::Error;

/// Bisection tolerance for ball endpoints; propagated into convergence
/// checks as explicit slack.
pub const ROOT_TOL: f64 = 1e-12;

pub struct PullbackLine {
    id: String,
    n: u32,
    half_width: f64,
}

impl PullbackLine {
    pub fn new(n: u32) -> Result<Self, Error> {
        if n < 2 {
            return Err(Error::Invalid("pullback_line requires n >= 2".into()));
        }
        Ok(PullbackLine {
            id: format!("pullback_line[{n}]"),
            n,
            half_width: 60.0,
        })
    }

    pub fn index(&self) -> u32 {
        self.n
    }

    /// The reparameterization `psi_n`.
    pub fn psi(&self, x: f64) -> f64 {
        x + x.sin() / self.n as f64
    }

    /// Inverse of `psi_n` by bisection (psi is strictly increasing with
    /// slope in [1 - 1/n, 1 + 1/n]).
    pub fn psi_inv(&self, target: f64) -> f64 {
        let (mut lo, mut hi) = (target - 1.0, target + 1.0);
        while hi - lo > ROOT_TOL {
            let mid = 0.5 * (lo + hi);
            if self.psi(mid) < target {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    /// Certified uniform bound `sup |d_n - d| <= 2/n`.
    pub fn uniform_bound(&self) -> f64 {
        2.0 / self.n as f64
    }

    /// Endpoints of the closed `d_n`-ball around `x`, as standard-line
    /// coordinates, within `ROOT_TOL` of the ideal endpoints.
    pub fn ball_interval(&self, x: f64, t: f64) -> (f64, f64) {
        let px = self.psi(x);
        (self.psi_inv(px - t), self.psi_inv(px + t))
    }

    fn coord(&self, p: &Point) -> Result<f64, Error> {
        match p {
            Point::Line(x) if x.is_finite() && x.abs() <= self.half_width => Ok(*x),
            _ => Err(Error::OutsideCarrier(format!(
                "{p:?} is not a point of {}",
                self.id
            ))),
        }
    }
}

impl ModelSpace for PullbackLine {
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
        matches!(p, Point::Line(x) if x.is_finite() && x.abs() <= self.half_width)
    }

    fn distance(&self, p: &Point, q: &Point) -> Result<f64, Error> {
        Ok((self.psi(self.coord(p)?) - self.psi(self.coord(q)?)).abs())
    }

    fn closed_ball(&self, x: &Point, t: f64, eps: f64) -> Result<CompactSet, Error> {
        if t < 0.0 || !t.is_finite() {
            return Err(Error::InvalidLength(t));
        }
        let c = self.coord(x)?;
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
        let (lo, hi) = self.ball_interval(c, t);
        // Coordinate step eps gives d_n covering radius
        // (eps/2)(1 + 1/n) <= eps for n >= 1.
        let m = ((hi - lo) / eps).ceil().max(1.0) as usize;
        let points = (0..=m)
            .map(|i| Point::Line(lo + (hi - lo) * i as f64 / m as f64))
            .collect();
        CompactSet::net(NetSet {
            model_id: self.id.clone(),
            points,
            resolution: eps,
        })
    }

    fn sphere(&self, x: &Point, t: f64, _eps: f64) -> Result<Vec<Point>, Error> {
        if t <= 0.0 {
            return Err(Error::ZeroSphereRadius);
        }
        let c = self.coord(x)?;
        let (lo, hi) = self.ball_interval(c, t);
        Ok(vec![Point::Line(lo), Point::Line(hi)])
    }

    fn midpoint(&self, p: &Point, q: &Point) -> Result<Option<Point>, Error> {
        let m = 0.5 * (self.psi(self.coord(p)?) + self.psi(self.coord(q)?));
        Ok(Some(Point::Line(self.psi_inv(m))))
    }

    fn extend_ray(&self, y: &Point, x: &Point, r: f64) -> Option<Point> {
        let (py, px) = (self.psi(self.coord(y).ok()?), self.psi(self.coord(x).ok()?));
        if px == py || r < 0.0 {
            return None;
        }
        let target = if px >= py { px + r } else { px - r };
        let p = self.psi_inv(target);
        (p.abs() <= self.half_width).then_some(Point::Line(p))
    }

    fn sample_point(&self, rng: &mut dyn RngCore, window: f64) -> Point {
        let half = (window / 2.0).min(self.half_width - 5.0);
        Point::Line(rng.gen_range(-half..half))
    }

    fn boundary_clearance(&self, p: &Point) -> Option<f64> {
        let x = self.coord(p).ok()?;
        Some(self.half_width - x.abs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn psi_inverse_round_trips() {
        let m = PullbackLine::new(5).unwrap();
        for x in [-3.0, -0.2, 0.0, 1.7, 8.9] {
            assert!((m.psi_inv(m.psi(x)) - x).abs() < 1e-10);
        }
    }

    #[test]
    fn uniform_bound_holds_on_grid() {
        let m = PullbackLine::new(4).unwrap();
        let bound = m.uniform_bound();
        for i in 0..1000 {
            let a = -10.0 + 0.02 * i as f64;
            let b = 10.0 - 0.017 * i as f64;
            let dn = (m.psi(a) - m.psi(b)).abs();
            assert!((dn - (a - b).abs()).abs() <= bound + 1e-12);
        }
    }

    #[test]
    fn ball_interval_endpoints_satisfy_psi_equation() {
        let m = PullbackLine::new(10).unwrap();
        let (lo, hi) = m.ball_interval(0.0, 1.0);
        assert!((m.psi(lo) - (-1.0)).abs() < 1e-10);
        assert!((m.psi(hi) - 1.0).abs() < 1e-10);
    }
}
