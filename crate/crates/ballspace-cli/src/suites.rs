//! Suite execution: dispatches a scenario to the library verifiers and
//! collects per-suite results with ground-truth expectations.

use std::time::{Duration, Instant};

use ballspace::actions::{
    catalog_isometries, check_lift_isometry, check_quotient_theorem, lifted_properness_check,
    properness_check, quotient_space, GroupAction,
};
use ballspace::ballmap::{
    check_injectivity, check_isometry, check_lipschitz, designated_failure_probe,
    designated_violation_pairs, product_ball_distance_check, IsometryVerdict, SampleConfig,
    WitnessRepr,
};
use ballspace::convergence::{
    check_ball_inclusions, hausdorff_limit_check, stability_check, MetricFamily,
};
use ballspace::geodesy::{
    extendibility_at, extendible_set, graph_candidates, ExtendibilityConfig, Verdict,
};
use ballspace::spaces::catalog::build_model;
use ballspace::spaces::{report_point, Flag, GroundTruth, ModelSpace, ProductMax};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::scenario::Scenario;

#[derive(Debug, Clone, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    /// Traceability: the claim this suite checks.
    pub claim: String,
    pub verdict: String,
    pub max_deviation: f64,
    pub error_budget: f64,
    pub samples: usize,
    pub witnesses: Vec<WitnessRepr>,
    pub notes: Vec<String>,
    pub expectation: String,
    pub passed: bool,
    /// Wall-clock runtime; excluded from the JSON report so that identical
    /// scenario + seed produce byte-identical output.
    #[serde(skip)]
    pub runtime: Duration,
}

#[derive(Debug, Serialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub scenario: Scenario,
    pub model_id: String,
    pub ground_truth: GroundTruth,
    pub results: Vec<SuiteResult>,
    pub all_passed: bool,
}

pub fn run_scenario(scenario: &Scenario) -> Result<VerificationReport, String> {
    let space = build_model(&scenario.model, &scenario.model_params())
        .map_err(|e| format!("unknown model id or bad parameters: {e}"))?;
    let cfg = SampleConfig {
        n: scenario.n,
        eps: scenario.net_epsilon,
        tol: scenario.tolerance,
        r_max: scenario.r_max,
        window: scenario.window,
        seed: scenario.seed,
    };
    let start = Instant::now();
    let mut result = match scenario.suite.as_str() {
        "lipschitz" => run_lipschitz(space.as_ref(), &cfg),
        "isometry" => run_isometry(space.as_ref(), &cfg, scenario.include_designated_witness),
        "injectivity" => run_injectivity(space.as_ref(), &cfg),
        "extendibility" => run_extendibility(space.as_ref(), &cfg),
        "product" => run_product(space.as_ref(), scenario, &cfg),
        "quotient" => run_quotient(space.as_ref(), scenario, &cfg),
        "convergence" => run_convergence(space.as_ref(), scenario, &cfg),
        "lift" => run_lift(space.as_ref(), &cfg),
        other => return Err(format!("unknown suite: {other}")),
    }?;
    result.runtime = start.elapsed();
    if let Some(expect) = &scenario.expect {
        result.expectation = expect.clone();
    }
    result.passed = result.verdict == result.expectation;
    let all_passed = result.passed;
    Ok(VerificationReport {
        schema_version: 1,
        scenario: scenario.clone(),
        model_id: space.id().to_string(),
        ground_truth: space.ground_truth(),
        results: vec![result],
        all_passed,
    })
}

fn blank(suite: &str, claim: &str, expectation: &str) -> SuiteResult {
    SuiteResult {
        suite: suite.into(),
        claim: claim.into(),
        verdict: String::new(),
        max_deviation: 0.0,
        error_budget: 0.0,
        samples: 0,
        witnesses: Vec::new(),
        notes: Vec::new(),
        expectation: expectation.into(),
        passed: false,
        runtime: Duration::ZERO,
    }
}

fn verdict_name(v: IsometryVerdict) -> &'static str {
    match v {
        IsometryVerdict::Isometry => "isometry",
        IsometryVerdict::LipschitzOnly => "lipschitz-only",
        IsometryVerdict::Violation => "violation",
    }
}

fn run_lipschitz(space: &dyn ModelSpace, cfg: &SampleConfig) -> Result<SuiteResult, String> {
    let mut out = blank(
        "lipschitz",
        "ball map is 1-Lipschitz: d_H(f(p), f(q)) <= d_T(p, q) on every length space",
        "lipschitz-only",
    );
    let report = check_lipschitz(space, cfg).map_err(|e| e.to_string())?;
    out.verdict = verdict_name(report.verdict).into();
    out.max_deviation = report.max_excess.max(0.0);
    out.error_budget = 2.0 * cfg.eps + cfg.tol;
    out.samples = report.samples;
    out.witnesses = report.witnesses.iter().map(|w| w.describe(space)).collect();
    Ok(out)
}

fn run_isometry(
    space: &dyn ModelSpace,
    cfg: &SampleConfig,
    include_designated: bool,
) -> Result<SuiteResult, String> {
    let expectation = match space.ground_truth().strongly_geodesically_complete {
        Flag::Yes => "isometry",
        Flag::No => "violation",
        Flag::Unknown => "isometry",
    };
    let mut out = blank(
        "isometry",
        "ball-map isometry criterion: d_H(ball(x,t), ball(y,s)) = d(x,y) + |t-s| \
         holds exactly when the space is strongly geodesically complete \
         [forward: sampled equality; converse: designated counterexample witnesses]",
        expectation,
    );
    let designated = if include_designated {
        designated_violation_pairs(space)
    } else {
        Vec::new()
    };
    if !designated.is_empty() {
        out.notes.push(format!(
            "{} designated witness pair(s) included",
            designated.len()
        ));
    }
    let report = check_isometry(space, cfg, &designated).map_err(|e| e.to_string())?;
    out.verdict = verdict_name(report.verdict).into();
    out.max_deviation = report.max_abs_deviation;
    out.error_budget = 2.0 * cfg.eps + cfg.tol;
    out.samples = report.samples;
    out.witnesses = report.witnesses.iter().map(|w| w.describe(space)).collect();
    Ok(out)
}

fn run_injectivity(space: &dyn ModelSpace, cfg: &SampleConfig) -> Result<SuiteResult, String> {
    let non_injective = matches!(space.id(), "tee" | "circle" | "diamond" | "diamond_chain");
    let expectation = if non_injective {
        "witness-found"
    } else {
        "no-witness"
    };
    let mut out = blank(
        "injectivity",
        "the ball map need not be injective: search for equal balls at distinct parameters",
        expectation,
    );
    let designated = if non_injective {
        designated_violation_pairs(space)
    } else {
        Vec::new()
    };
    let report = check_injectivity(space, cfg, &designated).map_err(|e| e.to_string())?;
    out.samples = report.pairs_checked;
    out.verdict = if report.witnesses.is_empty() {
        "no-witness".into()
    } else {
        "witness-found".into()
    };
    for w in report.witnesses.iter().take(4) {
        out.notes.push(format!(
            "equal balls: center {} radius {} == center {} radius {}{}",
            report_point(space, &w.a.center).label,
            ballspace::point::sig6(w.a.radius),
            report_point(space, &w.b.center).label,
            ballspace::point::sig6(w.b.radius),
            if w.certified {
                " (exact)"
            } else {
                " (within net resolution)"
            },
        ));
    }
    Ok(out)
}

fn run_extendibility(space: &dyn ModelSpace, cfg: &SampleConfig) -> Result<SuiteResult, String> {
    let gt = space.ground_truth().strongly_geodesically_complete;
    let expectation = match gt {
        Flag::Yes => "holds",
        _ => "fails",
    };
    let mut out = blank(
        "extendibility",
        "sphere criterion for strong geodesic extendibility: some p with d(x,p) = r \
         realizes d(y,p) = d(y,x) + r for every sampled (y, r)",
        expectation,
    );
    if space.graph().is_some() {
        let candidates = graph_candidates(space);
        let radii = [0.25, 0.5, 1.0, 2.0];
        let margin = if space.id() == "diamond_chain" {
            2.0 * std::f64::consts::SQRT_2
        } else {
            0.0
        };
        let partition = extendible_set(space, &candidates, &candidates, &radii, margin)
            .map_err(|e| e.to_string())?;
        out.samples = candidates.len();
        out.notes.push(format!(
            "candidates: {} hold, {} fail, {} boundary-affected/inconclusive",
            partition.holds.len(),
            partition.fails.len(),
            partition.inconclusive.len()
        ));
        for p in partition.holds.iter().take(6) {
            out.notes
                .push(format!("holds at {}", report_point(space, p).label));
        }
        out.verdict = if !partition.fails.is_empty() {
            "fails".into()
        } else if !partition.holds.is_empty() {
            "holds".into()
        } else {
            "inconclusive".into()
        };
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0xe7);
        let ecfg = ExtendibilityConfig {
            eps: cfg.eps.min(1e-3),
            tol: cfg.tol,
        };
        let radii = [0.5, 1.0, 2.0];
        let mut verdicts = Vec::new();
        for _ in 0..cfg.n.min(8) {
            let x = space.sample_point(&mut rng, cfg.window);
            let ys: Vec<_> = (0..ballspace::geodesy::DEFAULT_Y_SAMPLES)
                .map(|_| space.sample_point(&mut rng, cfg.window))
                .filter(|y| y != &x)
                .collect();
            if ys.is_empty() {
                continue;
            }
            verdicts
                .push(extendibility_at(space, &x, &ys, &radii, &ecfg).map_err(|e| e.to_string())?);
        }
        if let Some((x, y, r)) = designated_failure_probe(space) {
            verdicts
                .push(extendibility_at(space, &x, &[y], &[r], &ecfg).map_err(|e| e.to_string())?);
            out.notes.push("designated failure probe included".into());
        }
        out.samples = verdicts.len();
        let fails = verdicts
            .iter()
            .filter(|v| v.verdict == Verdict::Fails)
            .count();
        let holds = verdicts
            .iter()
            .filter(|v| v.verdict == Verdict::Holds)
            .count();
        out.notes.push(format!(
            "{holds} hold, {fails} fail, of {} probe points",
            verdicts.len()
        ));
        out.verdict = if fails > 0 {
            "fails".into()
        } else if holds == verdicts.len() {
            "holds".into()
        } else {
            "inconclusive".into()
        };
    }
    Ok(out)
}

fn run_product(
    space: &dyn ModelSpace,
    scenario: &Scenario,
    cfg: &SampleConfig,
) -> Result<SuiteResult, String> {
    let mut out = blank(
        "product",
        "max-metric product balls: d_H^inf(B_t(x,y), B_s(a,b)) = max of factor d_H \
         = d_inf + |t-s| on complete factors",
        "within-budget",
    );
    if !space.id().starts_with("product_max") {
        return Err("product suite requires model = \"product_max\"".into());
    }
    // Rebuild as the concrete product type to reach the factors.
    let fx = scenario
        .factor_x
        .clone()
        .unwrap_or_else(|| "real_line".into());
    let fy = scenario
        .factor_y
        .clone()
        .unwrap_or_else(|| "real_line".into());
    let product = ProductMax::new(
        build_model(&fx, &Default::default()).map_err(|e| e.to_string())?,
        build_model(&fy, &Default::default()).map_err(|e| e.to_string())?,
    );
    let report = product_ball_distance_check(&product, cfg).map_err(|e| e.to_string())?;
    // The identity d_H^inf = max(factor d_H) holds on any factors; the
    // corollary chain additionally needs both factors complete.
    let (gx, gy) = product.factors();
    let chain_applies = gx.ground_truth().strongly_geodesically_complete == Flag::Yes
        && gy.ground_truth().strongly_geodesically_complete == Flag::Yes;
    out.samples = report.samples;
    out.max_deviation = if chain_applies {
        report.max_identity_deviation.max(report.max_chain_deviation)
    } else {
        report.max_identity_deviation
    };
    out.error_budget = report.error_budget;
    out.notes.push(format!("identity deviation {:.3e}", report.max_identity_deviation));
    if chain_applies {
        out.notes.push(format!(
            "corollary-chain deviation {:.3e}",
            report.max_chain_deviation
        ));
    } else {
        out.notes.push(
            "corollary chain skipped: a factor is not strongly geodesically complete".into(),
        );
    }
    out.verdict = if out.max_deviation <= out.error_budget {
        "within-budget".into()
    } else {
        "violation".into()
    };
    Ok(out)
}

fn run_quotient(
    space: &dyn ModelSpace,
    scenario: &Scenario,
    cfg: &SampleConfig,
) -> Result<SuiteResult, String> {
    let mut out = blank(
        "quotient",
        "quotient of the ball space by a lifted proper translation action is the \
         taxicab half-space over the base quotient",
        "within-budget",
    );
    if space.id() != "real_line" {
        return Err("quotient suite requires model = \"real_line\"".into());
    }
    let step = scenario.group_step.unwrap_or(1.0);
    let bound = scenario.group_bound.unwrap_or(30);
    let action = GroupAction::line_translations(step, bound);
    let report = check_quotient_theorem(&action, space, cfg).map_err(|e| e.to_string())?;
    out.samples = report.samples;
    out.max_deviation = report.max_deviation;
    out.error_budget = 1e-9;
    // Properness counts at the origin of the line window.
    let graph = space.graph().ok_or("real_line is graph-backed")?;
    let mid = ballspace::exact::rat_half(&graph.edge(0).len);
    let x = ballspace::Point::Graph(ballspace::GraphPoint::interior(0, mid));
    let hits = properness_check(&action, space, &x, 2.0 * step).map_err(|e| e.to_string())?;
    out.notes.push(format!(
        "properness at (0, r = 2 step): {} elements meet their translate",
        hits.len()
    ));
    let lifted = lifted_properness_check(&action, space, &x, step / 4.0, step / 4.0)
        .map_err(|e| e.to_string())?;
    let base: Vec<i64> = properness_check(&action, space, &x, step / 4.0)
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|(k, _)| k)
        .collect();
    let contained = lifted.iter().all(|k| base.contains(k));
    out.notes.push(format!(
        "lifted properness set {lifted:?} contained in base {base:?}"
    ));
    // Quotient model reproduces the injectivity failure.
    let circle = quotient_space(&action).map_err(|e| e.to_string())?;
    let inj = check_injectivity(
        &circle,
        cfg,
        &ballspace::ballmap::designated_violation_pairs(&circle),
    )
    .map_err(|e| e.to_string())?;
    out.notes.push(format!(
        "quotient circle injectivity witnesses: {} (certified)",
        inj.witnesses.len()
    ));
    out.verdict =
        if report.max_deviation <= out.error_budget && contained && !inj.witnesses.is_empty() {
            "within-budget".into()
        } else {
            "violation".into()
        };
    Ok(out)
}

fn run_convergence(
    space: &dyn ModelSpace,
    _scenario: &Scenario,
    cfg: &SampleConfig,
) -> Result<SuiteResult, String> {
    let mut out = blank(
        "convergence",
        "under uniform metric convergence, ball Hausdorff distances converge and \
         strong geodesic completeness passes to the limit",
        "within-budget",
    );
    let family = if space.id().starts_with("pullback_line") {
        MetricFamily::PullbackLine
    } else {
        MetricFamily::Constant {
            model_id: space.id().to_string(),
        }
    };
    // The inclusion example at the certified bound.
    let incl = check_ball_inclusions(&family, 10, 0.0, 1.0, family.certified_bound(10).max(1e-9))
        .map_err(|e| e.to_string())?;
    let ns: Vec<u32> = (1..=6).map(|k| 1u32 << k).collect();
    let table =
        hausdorff_limit_check(&family, 0.0, 2.0, 1.0, 0.5, &ns).map_err(|e| e.to_string())?;
    for row in &table.rows {
        out.notes.push(format!(
            "n = {:2}: d_H^n = {:.6}, |d_H^n - {:.1}| = {:.6} <= {:.6}",
            row.n, row.d_h_n, table.limit_value, row.deviation, row.bound
        ));
    }
    let stability = stability_check(&family, cfg).map_err(|e| e.to_string())?;
    out.samples = stability.isometry.samples;
    out.max_deviation = stability.isometry.max_abs_deviation;
    out.error_budget = 2.0 * cfg.eps + cfg.tol;
    out.notes.push(format!(
        "limit metric isometry verdict: {}",
        verdict_name(stability.isometry.verdict)
    ));
    out.verdict = if incl
        && table.all_within_bound
        && stability.isometry.verdict == IsometryVerdict::Isometry
    {
        "within-budget".into()
    } else {
        "violation".into()
    };
    Ok(out)
}

fn run_lift(space: &dyn ModelSpace, cfg: &SampleConfig) -> Result<SuiteResult, String> {
    let mut out = blank(
        "lift",
        "base isometries lift to ball-space isometries preserving every radius slice",
        "within-budget",
    );
    let isometries = catalog_isometries(space);
    if isometries.is_empty() {
        return Err(format!("no catalogued isometries for model {}", space.id()));
    }
    let mut worst = 0.0f64;
    for g in &isometries {
        let report = check_lift_isometry(space, g, cfg).map_err(|e| e.to_string())?;
        worst = worst
            .max(report.max_dh_deviation)
            .max(report.max_slice_deviation);
        out.notes.push(format!(
            "{}: d_H deviation {:.3e}, slice deviation {:.3e}{}",
            report.isometry,
            report.max_dh_deviation,
            report.max_slice_deviation,
            if report.radius_slice_exact {
                " (slices exact)"
            } else {
                ""
            }
        ));
        out.samples += report.samples;
    }
    out.max_deviation = worst;
    out.error_budget = 2.0 * cfg.eps + cfg.tol;
    out.verdict = if worst <= out.error_budget {
        "within-budget".into()
    } else {
        "violation".into()
    };
    Ok(out)
}
