//! Product of two model spaces under the maximum metric
//! `d((x,y),(a,b)) = max(d_X(x,a), d_Y(y,b))`.
//!
//! Balls factor: the t-ball around `(x,y)` is the product of the factor
//! t-balls, which is what the net builders exploit.

use rand::RngCore;

use crate::metric_core::{CompactSet, NetSet};
use crate::point::Point;
use crate::spaces::{Flag, GroundTruth, ModelSpace};
use crate::Error;

pub struct ProductMax {
    id: String,
    x: Box<dyn ModelSpace>,
    y: Box<dyn ModelSpace>,
}

impl ProductMax {
    pub fn new(x: Box<dyn ModelSpace>, y: Box<dyn ModelSpace>) -> Self {
        let id = format!("product_max[{},{}]", x.id(), y.id());
        ProductMax { id, x, y }
    }

    pub fn factors(&self) -> (&dyn ModelSpace, &dyn ModelSpace) {
        (self.x.as_ref(), self.y.as_ref())
    }

    fn split<'a>(&self, p: &'a Point) -> Result<(&'a Point, &'a Point), Error> {
        match p {
            Point::Pair(a, b) if self.x.contains(a) && self.y.contains(b) => Ok((a, b)),
            _ => Err(Error::OutsideCarrier(format!(
                "{p:?} is not a point of {}",
                self.id
            ))),
        }
    }

    /// Net of a factor ball, sampling exact interval unions when that is
    /// what the factor builds.
    fn factor_ball_net(
        space: &dyn ModelSpace,
        center: &Point,
        t: f64,
        eps: f64,
    ) -> Result<Vec<Point>, Error> {
        match space.closed_ball(center, t, eps)? {
            CompactSet::Net(n) => Ok(n.points),
            CompactSet::Intervals(iu) => {
                let graph = space.graph().expect("interval unions come from graphs");
                Ok(graph
                    .sample_interval_union(&iu, eps)
                    .into_iter()
                    .map(Point::Graph)
                    .collect())
            }
        }
    }
}

impl ModelSpace for ProductMax {
    fn id(&self) -> &str {
        &self.id
    }

    fn ground_truth(&self) -> GroundTruth {
        let gx = self.x.ground_truth().strongly_geodesically_complete;
        let gy = self.y.ground_truth().strongly_geodesically_complete;
        let sgc = match (gx, gy) {
            (Flag::Yes, Flag::Yes) => Flag::Yes,
            (Flag::No, _) | (_, Flag::No) => Flag::No,
            _ => Flag::Unknown,
        };
        GroundTruth {
            strongly_geodesically_complete: sgc,
            unique_midpoints: Flag::No,
        }
    }

    fn contains(&self, p: &Point) -> bool {
        matches!(p, Point::Pair(a, b) if self.x.contains(a) && self.y.contains(b))
    }

    fn distance(&self, p: &Point, q: &Point) -> Result<f64, Error> {
        let (pa, pb) = self.split(p)?;
        let (qa, qb) = self.split(q)?;
        Ok(self.x.distance(pa, qa)?.max(self.y.distance(pb, qb)?))
    }

    fn closed_ball(&self, x: &Point, t: f64, eps: f64) -> Result<CompactSet, Error> {
        if t < 0.0 || !t.is_finite() {
            return Err(Error::InvalidLength(t));
        }
        let (cx, cy) = self.split(x)?;
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
        // B_t(x,y) = B_t(x) × B_t(y); in the max metric the covering radius
        // of the product of two ε-nets is ε.
        let nx = Self::factor_ball_net(self.x.as_ref(), cx, t, eps)?;
        let ny = Self::factor_ball_net(self.y.as_ref(), cy, t, eps)?;
        let mut points = Vec::with_capacity(nx.len() * ny.len());
        for a in &nx {
            for b in &ny {
                points.push(Point::pair(a.clone(), b.clone()));
            }
        }
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
        if eps <= 0.0 {
            return Err(Error::InvalidLength(eps));
        }
        let (cx, cy) = self.split(x)?;
        // max(a,b) = t splits into (sphere × ball) ∪ (ball × sphere).
        let sx = self.x.sphere(cx, t, eps)?;
        let sy = self.y.sphere(cy, t, eps)?;
        let bx = Self::factor_ball_net(self.x.as_ref(), cx, t, eps)?;
        let by = Self::factor_ball_net(self.y.as_ref(), cy, t, eps)?;
        let mut out = Vec::new();
        for a in &sx {
            for b in &by {
                out.push(Point::pair(a.clone(), b.clone()));
            }
        }
        for b in &sy {
            for a in &bx {
                out.push(Point::pair(a.clone(), b.clone()));
            }
        }
        Ok(out)
    }

    fn midpoint(&self, p: &Point, q: &Point) -> Result<Option<Point>, Error> {
        let (pa, pb) = self.split(p)?;
        let (qa, qb) = self.split(q)?;
        let (Some(mx), Some(my)) = (self.x.midpoint(pa, qa)?, self.y.midpoint(pb, qb)?) else {
            return Ok(None);
        };
        // Factor midpoints give a midpoint for the max metric.
        Ok(Some(Point::pair(mx, my)))
    }

    fn extend_ray(&self, y: &Point, x: &Point, r: f64) -> Option<Point> {
        let (ya, yb) = self.split(y).ok()?;
        let (xa, xb) = self.split(x).ok()?;
        // Extend each factor past x by r: factors where y and x differ use
        // their ray extension (d_f becomes d_f + r); coincident factors take
        // any point at distance r. The factor realizing the max then attains
        // d_inf(y, p) = d_inf(y, x) + r while d_inf(x, p) = r.
        let extend_factor = |space: &dyn ModelSpace, yf: &Point, xf: &Point| -> Option<Point> {
            let d = space.distance(yf, xf).ok()?;
            if d > 0.0 {
                space.extend_ray(yf, xf, r)
            } else {
                space
                    .sphere(xf, r, (r / 8.0).max(1e-3))
                    .ok()?
                    .into_iter()
                    .next()
            }
        };
        let pa = extend_factor(self.x.as_ref(), ya, xa)?;
        let pb = extend_factor(self.y.as_ref(), yb, xb)?;
        Some(Point::pair(pa, pb))
    }

    fn sample_point(&self, rng: &mut dyn RngCore, window: f64) -> Point {
        let a = self.x.sample_point(rng, window);
        let b = self.y.sample_point(rng, window);
        Point::pair(a, b)
    }

    fn boundary_clearance(&self, p: &Point) -> Option<f64> {
        let (a, b) = self.split(p).ok()?;
        match (self.x.boundary_clearance(a), self.y.boundary_clearance(b)) {
            (Some(u), Some(v)) => Some(u.min(v)),
            (Some(u), None) | (None, Some(u)) => Some(u),
            (None, None) => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::graphs::{line_point, GraphSpace};

    fn line_pair() -> (ProductMax, GraphSpace) {
        let x = GraphSpace::real_line(40.0).unwrap();
        let y = GraphSpace::real_line(40.0).unwrap();
        let helper = GraphSpace::real_line(40.0).unwrap();
        (ProductMax::new(Box::new(x), Box::new(y)), helper)
    }

    #[test]
    fn max_metric_distance() {
        let (prod, helper) = line_pair();
        let p = Point::pair(
            line_point(&helper, 0.0).unwrap(),
            line_point(&helper, 0.0).unwrap(),
        );
        let q = Point::pair(
            line_point(&helper, 3.0).unwrap(),
            line_point(&helper, 4.0).unwrap(),
        );
        assert_eq!(prod.distance(&p, &q).unwrap(), 4.0);
    }

    #[test]
    fn product_ball_membership_factors() {
        let (prod, helper) = line_pair();
        let c = Point::pair(
            line_point(&helper, 1.0).unwrap(),
            line_point(&helper, -1.0).unwrap(),
        );
        let ball = prod.closed_ball(&c, 1.5, 0.05).unwrap();
        let net = ball.as_net().unwrap();
        for p in net.points.iter().step_by(7) {
            assert!(prod.distance(&c, p).unwrap() <= 1.5 + 1e-9);
        }
    }
}
