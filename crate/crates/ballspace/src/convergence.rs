//! Uniformly convergent metric families and the stability of strong
//! geodesic completeness under uniform limits.
//!
//! A family carries a common carrier, indexed metrics `d_n`, a certified
//! uniform bound `sup |d_n - d| <= eps_n`, and the limit metric. The
//! built-in nontrivial family is the reparameterized line
//! `d_n(a,b) = |psi_n(a) - psi_n(b)|`, whose member balls have exact
//! endpoints up to the root-finding tolerance; that tolerance is carried
//! into every reported slack. Constant families wrap a catalogued model
//! with `eps_n = 0`.

use serde::Serialize;

use crate::ballmap::{check_isometry, IsometryCheckReport, SampleConfig};
use crate::exact::{rat, rat_abs, rat_max, to_f64};
use crate::metric_core::hausdorff_intervals_exact;
use crate::spaces::catalog::build_model;
use crate::spaces::pullback::ROOT_TOL;
use crate::spaces::{Flag, GraphSpace, ModelParams, ModelSpace, PullbackLine};
use crate::Error;

/// Slack added for the two root-finding calls behind each ball endpoint.
pub const ENDPOINT_SLACK: f64 = 4.0 * ROOT_TOL;

/// A uniformly convergent family of metrics on a common carrier.
#[derive(Debug, Clone)]
pub enum MetricFamily {
    /// `d_n = |psi_n(a) - psi_n(b)|` on the line, converging to the
    /// standard metric with certified bound `2/n`.
    PullbackLine,
    /// The constant family `d_n = d` on a catalogued model, bound 0.
    Constant { model_id: String },
}

impl MetricFamily {
    pub fn certified_bound(&self, n: u32) -> f64 {
        match self {
            MetricFamily::PullbackLine => 2.0 / n as f64,
            MetricFamily::Constant { .. } => 0.0,
        }
    }

    /// Ground truth of the members' strong geodesic completeness.
    pub fn members_complete(&self) -> Result<Flag, Error> {
        match self {
            MetricFamily::PullbackLine => Ok(Flag::Yes),
            MetricFamily::Constant { model_id } => {
                Ok(build_model(model_id, &ModelParams::default())?
                    .ground_truth()
                    .strongly_geodesically_complete)
            }
        }
    }

    pub fn member(&self, n: u32) -> Result<Box<dyn ModelSpace>, Error> {
        match self {
            MetricFamily::PullbackLine => Ok(Box::new(PullbackLine::new(n)?)),
            MetricFamily::Constant { model_id } => build_model(model_id, &ModelParams::default()),
        }
    }

    /// The limit model: the windowed real line (exact intervals) for the
    /// pullback family, the model itself for constant families.
    pub fn limit_model(&self) -> Result<Box<dyn ModelSpace>, Error> {
        match self {
            MetricFamily::PullbackLine => Ok(Box::new(GraphSpace::real_line(40.0)?)),
            MetricFamily::Constant { model_id } => build_model(model_id, &ModelParams::default()),
        }
    }
}

/// Checks the two ball inclusions
/// `ball_t(x) in ball^n_{t+eps}(x)` and `ball^n_t(x) in ball_{t+eps}(x)`
/// on exact interval representations of the pullback family.
///
/// Precondition: `eps >= eps_n` (the certified uniform bound realizes the
/// threshold of the underlying limit statement).
pub fn check_ball_inclusions(
    family: &MetricFamily,
    n: u32,
    x: f64,
    t: f64,
    eps: f64,
) -> Result<bool, Error> {
    let bound = family.certified_bound(n);
    if eps < bound {
        return Err(Error::Precondition(format!(
            "eps = {eps} is below the certified uniform bound {bound} for n = {n}"
        )));
    }
    match family {
        MetricFamily::Constant { .. } => Ok(true), // d_n = d: both inclusions are monotonicity
        MetricFamily::PullbackLine => {
            let member = PullbackLine::new(n)?;
            // Limit ball is [x - t, x + t]; member balls by root-finding.
            let (lo_wide, hi_wide) = member.ball_interval(x, t + eps);
            let first = lo_wide - ENDPOINT_SLACK <= x - t && x + t <= hi_wide + ENDPOINT_SLACK;
            let (lo_n, hi_n) = member.ball_interval(x, t);
            let second =
                x - t - eps <= lo_n + ENDPOINT_SLACK && hi_n - ENDPOINT_SLACK <= x + t + eps;
            Ok(first && second)
        }
    }
}

/// One row of the Hausdorff convergence table.
#[derive(Debug, Clone, Serialize)]
pub struct ConvergenceRow {
    pub n: u32,
    pub d_h_n: f64,
    pub deviation: f64,
    /// `2 eps_n` plus the endpoint slack.
    pub bound: f64,
    pub within_bound: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConvergenceReport {
    pub limit_value: f64,
    pub rows: Vec<ConvergenceRow>,
    pub all_within_bound: bool,
}

/// Computes the sequence `d_H^n(ball^n_t(x), ball^n_s(y))` and compares it
/// against the limit `d_H(ball_t(x), ball_s(y))`, asserting
/// `|d_H^n - d_H| <= 2 eps_n + slack` row by row.
pub fn hausdorff_limit_check(
    family: &MetricFamily,
    x: f64,
    y: f64,
    t: f64,
    s: f64,
    ns: &[u32],
) -> Result<ConvergenceReport, Error> {
    if t < 0.0 || s < 0.0 {
        return Err(Error::InvalidLength(t.min(s)));
    }
    // Limit value through the exact interval formula.
    let limit = to_f64(&hausdorff_intervals_exact(x - t, x + t, y - s, y + s)?);
    let mut rows = Vec::with_capacity(ns.len());
    for &n in ns {
        let d_h_n = match family {
            MetricFamily::Constant { .. } => limit,
            MetricFamily::PullbackLine => {
                let member = PullbackLine::new(n)?;
                // Member balls as line intervals, then the Hausdorff
                // distance under d_n: psi is monotone, so it is the
                // interval formula applied to the psi-images.
                let (a, b) = member.ball_interval(x, t);
                let (c, d) = member.ball_interval(y, s);
                to_f64(&hausdorff_intervals_exact(
                    member.psi(a),
                    member.psi(b),
                    member.psi(c),
                    member.psi(d),
                )?)
            }
        };
        let deviation = (d_h_n - limit).abs();
        let bound = 2.0 * family.certified_bound(n) + ENDPOINT_SLACK;
        rows.push(ConvergenceRow {
            n,
            d_h_n,
            deviation,
            bound,
            within_bound: deviation <= bound,
        });
    }
    let all = rows.iter().all(|r| r.within_bound);
    Ok(ConvergenceReport {
        limit_value: limit,
        rows,
        all_within_bound: all,
    })
}

/// Report of the uniform-stability check.
#[derive(Debug, Clone)]
pub struct StabilityReport {
    pub family: String,
    pub isometry: IsometryCheckReport,
}

/// Realizes the stability of strong geodesic completeness under uniform
/// limits: all members must be certified complete (precondition), and the
/// ball-map isometry check on the limit metric must return `isometry`.
pub fn stability_check(
    family: &MetricFamily,
    cfg: &SampleConfig,
) -> Result<StabilityReport, Error> {
    if family.members_complete()? != Flag::Yes {
        return Err(Error::Precondition(
            "stability requires every family member to be strongly geodesically complete".into(),
        ));
    }
    let limit = family.limit_model()?;
    let isometry = check_isometry(limit.as_ref(), cfg, &[])?;
    let name = match family {
        MetricFamily::PullbackLine => "pullback_line".to_string(),
        MetricFamily::Constant { model_id } => format!("constant[{model_id}]"),
    };
    Ok(StabilityReport {
        family: name,
        isometry,
    })
}

/// Audits the certified uniform bound on a dense grid; used by fixtures.
pub fn audit_uniform_bound(family: &MetricFamily, n: u32, grid: usize) -> Result<f64, Error> {
    match family {
        MetricFamily::Constant { .. } => Ok(0.0),
        MetricFamily::PullbackLine => {
            let member = PullbackLine::new(n)?;
            let mut max_dev = rat(0.0);
            for i in 0..grid {
                let a = -12.0 + 24.0 * (i as f64) / grid as f64;
                let b = 12.0 - 23.0 * (i as f64 * 0.618034 % 1.0);
                let dn = (member.psi(a) - member.psi(b)).abs();
                let d = (a - b).abs();
                max_dev = rat_max(max_dev, rat_abs(&(&rat(dn) - &rat(d))));
            }
            Ok(to_f64(&max_dev))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ball_inclusions_hold_at_certified_bound() {
        let fam = MetricFamily::PullbackLine;
        // n = 10, eps = 0.2 = 2/10.
        assert!(check_ball_inclusions(&fam, 10, 0.0, 1.0, 0.2).unwrap());
        // Constant family: any eps >= 0.
        let cf = MetricFamily::Constant {
            model_id: "taxicab_r2".into(),
        };
        assert!(check_ball_inclusions(&cf, 3, 0.0, 1.0, 0.0).unwrap());
    }

    #[test]
    fn ball_inclusion_guard_rejects_small_eps() {
        let fam = MetricFamily::PullbackLine;
        // n = 2 has certified bound 1.0.
        assert!(matches!(
            check_ball_inclusions(&fam, 2, 0.0, 1.0, 0.05),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn hausdorff_sequence_converges_with_rate() {
        let fam = MetricFamily::PullbackLine;
        let ns: Vec<u32> = (1..=6).map(|k| 1 << k).collect();
        let report = hausdorff_limit_check(&fam, 0.0, 2.0, 1.0, 0.5, &ns).unwrap();
        assert_eq!(report.limit_value, 2.5);
        assert!(report.all_within_bound);
        for r in &report.rows {
            assert!(r.deviation <= 4.0 / r.n as f64 + ENDPOINT_SLACK);
        }
        // Identical parameters: identically zero.
        let z = hausdorff_limit_check(&fam, 1.0, 1.0, 0.75, 0.75, &ns).unwrap();
        assert_eq!(z.limit_value, 0.0);
        for r in &z.rows {
            assert!(r.d_h_n.abs() <= ENDPOINT_SLACK);
        }
    }

    #[test]
    fn uniform_bound_audit() {
        let fam = MetricFamily::PullbackLine;
        for n in [2, 5, 16] {
            let dev = audit_uniform_bound(&fam, n, 10_000).unwrap();
            assert!(dev <= fam.certified_bound(n) + 1e-12);
        }
    }

    #[test]
    fn stability_guard_rejects_incomplete_members() {
        let fam = MetricFamily::Constant {
            model_id: "halfplane".into(),
        };
        let cfg = SampleConfig {
            n: 5,
            ..Default::default()
        };
        assert!(matches!(
            stability_check(&fam, &cfg),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn stability_on_pullback_limit_is_exact() {
        let fam = MetricFamily::PullbackLine;
        let cfg = SampleConfig {
            n: 30,
            seed: 9,
            ..Default::default()
        };
        let report = stability_check(&fam, &cfg).unwrap();
        assert_eq!(
            report.isometry.verdict,
            crate::ballmap::IsometryVerdict::Isometry
        );
        assert_eq!(report.isometry.max_abs_deviation, 0.0);
    }
}
