//! Acceptance suite: one test per criterion, each printing a PASS line
//! with the measured quantities. Criterion 15 (CLI determinism and exit
//! codes) lives in the CLI crate's own test target.

mod common;

use std::time::Instant;

use ballspace::actions::{
    catalog_isometries, check_quotient_theorem, lift_ball_point, lifted_properness_check,
    properness_check, quotient_space, GroupAction,
};
use ballspace::ballmap::{
    check_injectivity, check_isometry, check_lipschitz, f_map, product_ball_distance_check,
    product_interval_identity, taxicab_dist, BallPoint, IsometryVerdict, SampleConfig,
};
use ballspace::convergence::{hausdorff_limit_check, stability_check, MetricFamily};
use ballspace::exact::to_f64;
use ballspace::geodesy::{
    extendible_set, graph_candidates, is_distance_realizing, GeodesicSegment, Verdict,
};
use ballspace::metric_core::{hausdorff, hausdorff_intervals};
use ballspace::rat;
use ballspace::spaces::catalog::{build_model, list_models};
use ballspace::spaces::{
    circle_point, line_point, GraphSpace, ModelParams, ModelSpace, ProductMax,
};
use ballspace::{Point, Rat};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SQRT2: f64 = std::f64::consts::SQRT_2;
const TAU: f64 = 2.0 * std::f64::consts::PI;

fn pass(criterion: u32, detail: &str) {
    println!("[criterion {criterion:2}] PASS  {detail}");
}

/// Dyadic rounding: sums/differences of these are exact in f64.
fn dy(x: f64) -> f64 {
    (x * 1048576.0).round() / 1048576.0
}

#[test]
fn criterion_01_interval_formula_against_grid() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let mut max_gap = 0.0f64;
    for _ in 0..1000 {
        let mut ends = [0.0; 4];
        for e in &mut ends {
            *e = rng.gen_range(-5.0..5.0);
        }
        let (a, b) = if ends[0] <= ends[1] {
            (ends[0], ends[1])
        } else {
            (ends[1], ends[0])
        };
        let (c, d) = if ends[2] <= ends[3] {
            (ends[2], ends[3])
        } else {
            (ends[3], ends[2])
        };
        let exact = hausdorff_intervals(a, b, c, d).unwrap();
        let grid = common::grid_hausdorff_intervals(a, b, c, d, 0.001);
        let gap = (exact - grid).abs();
        max_gap = max_gap.max(gap);
        assert!(
            gap <= 0.002,
            "interval formula vs grid: gap {gap} for [{a},{b}],[{c},{d}]"
        );
    }
    let elapsed = start.elapsed().as_secs_f64();
    assert!(
        elapsed < 5.0,
        "interval-formula criterion runtime {elapsed}s exceeds 5s"
    );
    pass(
        1,
        &format!("1000 pairs, max |formula - grid| = {max_gap:.6} <= 0.002, {elapsed:.2}s"),
    );
}

#[test]
fn criterion_02_tubular_composition_exact() {
    let mut rng = ChaCha8Rng::seed_from_u64(202);
    let mut checked = 0;
    for space in [
        GraphSpace::diamond().unwrap(),
        GraphSpace::diamond_chain(3).unwrap(),
    ] {
        let graph = space.graph().unwrap();
        for _ in 0..10 {
            // Random union of one or two balls as the base set A.
            let mut raw = Vec::new();
            for _ in 0..rng.gen_range(1..=2usize) {
                let center = graph.sample_point(&mut rng);
                let radius = rat(dy(rng.gen_range(0.05..1.5)));
                raw.extend(graph.ball(&center, &radius).intervals);
            }
            let a = graph.normalize(raw);
            let s = rat(dy(rng.gen_range(0.05..1.5)));
            let t = rat(dy(rng.gen_range(0.05..1.5)));
            let one = graph.dilate(&graph.dilate(&a, &s), &t);
            let two = graph.dilate(&a, &(&s + &t));
            assert_eq!(
                one,
                two,
                "tubular composition must be exact on {}",
                graph.id()
            );
            checked += 1;
        }
    }
    pass(
        2,
        &format!("{checked} random (A,s,t) on diamond + chain, exact interval-union equality"),
    );
}

#[test]
fn criterion_03_isometry_forward_on_complete_models() {
    let eps = 0.01;
    for (id, r_max, window) in [
        ("euclidean_r2", 2.5, 6.0),
        ("taxicab_r2", 2.0, 6.0),
        ("hyperbolic_plane", 2.0, 4.0),
    ] {
        let start = Instant::now();
        let space = build_model(id, &ModelParams::default()).unwrap();
        let cfg = SampleConfig {
            n: 100,
            eps,
            tol: 1e-6,
            r_max,
            window,
            seed: 303,
        };
        let report = check_isometry(space.as_ref(), &cfg, &[]).unwrap();
        let elapsed = start.elapsed().as_secs_f64();
        assert_eq!(
            report.verdict,
            IsometryVerdict::Isometry,
            "{id} must verify as isometry"
        );
        assert!(
            report.max_abs_deviation <= 2.0 * eps + 1e-6,
            "{id}: max |d_H - d_T| = {} exceeds 2eps + 1e-6",
            report.max_abs_deviation
        );
        assert!(elapsed < 60.0, "{id} suite took {elapsed}s (>= 60s)");
        pass(
            3,
            &format!(
                "{id}: N=100, eps={eps}, max |d_H - d_T| = {:.5} <= {:.5}, {elapsed:.1}s",
                report.max_abs_deviation,
                2.0 * eps + 1e-6
            ),
        );
    }
}

#[test]
fn criterion_04_isometry_exact_on_line_graph() {
    let line = GraphSpace::real_line(40.0).unwrap();
    let cfg = SampleConfig {
        n: 100,
        seed: 404,
        ..Default::default()
    };
    let report = check_isometry(&line, &cfg, &[]).unwrap();
    assert_eq!(report.verdict, IsometryVerdict::Isometry);
    assert_eq!(
        report.max_abs_deviation, 0.0,
        "interval-union route must be exactly taxicab"
    );
    pass(
        4,
        "real_line: 100 pairs, |d_H - d_T| = 0 exactly via interval unions",
    );
}

#[test]
fn criterion_05_converse_witnesses() {
    let eps = 0.01;
    // Half-plane: d_H(f((0,1),0), f((0,0),1)) = sqrt(2) +- 2eps vs d_T = 2.
    let hp = build_model("halfplane", &ModelParams::default()).unwrap();
    let a = BallPoint::new(Point::euclid(&[0.0, 1.0]), 0.0).unwrap();
    let b = BallPoint::new(Point::euclid(&[0.0, 0.0]), 1.0).unwrap();
    let h = hausdorff(
        hp.as_ref(),
        &f_map(hp.as_ref(), &a, eps).unwrap(),
        &f_map(hp.as_ref(), &b, eps).unwrap(),
    )
    .unwrap();
    let d_t = taxicab_dist(hp.as_ref(), &a, &b).unwrap();
    assert!(
        (h.value - SQRT2).abs() <= 2.0 * eps,
        "half-plane d_H = {} != sqrt2 +- 2eps",
        h.value
    );
    assert_eq!(d_t, 2.0);
    assert!(d_t - h.value > 0.5, "margin must exceed 0.5");
    let cfg = SampleConfig {
        n: 20,
        eps,
        seed: 505,
        ..Default::default()
    };
    let hp_report = check_isometry(hp.as_ref(), &cfg, &[(a, b)]).unwrap();
    assert_eq!(hp_report.verdict, IsometryVerdict::Violation);

    // Tee: exact equal balls at distinct parameters.
    let tee = GraphSpace::tee(12.0).unwrap();
    let p = BallPoint::new(tee.point_by_coords([-1.0, 0.0]).unwrap(), 2.0).unwrap();
    let q = BallPoint::new(tee.point_by_coords([0.0, 1.0]).unwrap(), 2.0).unwrap();
    let bp = f_map(&tee, &p, 0.0).unwrap();
    let bq = f_map(&tee, &q, 0.0).unwrap();
    assert_eq!(bp.as_intervals().unwrap(), bq.as_intervals().unwrap());
    let tee_report = check_isometry(&tee, &cfg, &[(p, q)]).unwrap();
    assert_eq!(tee_report.verdict, IsometryVerdict::Violation);

    // Circle: d_H = 0 < d_T = 1 at radius pi (half the circumference).
    let circle = GraphSpace::circle(TAU).unwrap();
    let u = BallPoint::new(circle_point(&circle, 0.0).unwrap(), TAU / 2.0).unwrap();
    let v = BallPoint::new(circle_point(&circle, 1.0).unwrap(), TAU / 2.0).unwrap();
    let h = hausdorff(
        &circle,
        &f_map(&circle, &u, 0.0).unwrap(),
        &f_map(&circle, &v, 0.0).unwrap(),
    )
    .unwrap();
    assert_eq!(h.exact.as_ref().unwrap(), &Rat::from_integer(0.into()));
    assert_eq!(taxicab_dist(&circle, &u, &v).unwrap(), 1.0);
    let circle_report = check_isometry(&circle, &cfg, &[(u, v)]).unwrap();
    assert_eq!(circle_report.verdict, IsometryVerdict::Violation);

    pass(5, "halfplane sqrt2-vs-2 (margin 0.586), tee equal balls, circle d_H=0 < d_T=1: all violations");
}

#[test]
fn criterion_06_lipschitz_on_every_model() {
    let eps = 0.05;
    for info in list_models() {
        let space = build_model(info.id, &ModelParams::default()).unwrap();
        let cfg = SampleConfig {
            n: 200,
            eps,
            tol: 1e-6,
            r_max: 2.0,
            window: 8.0,
            seed: 606,
        };
        let report = check_lipschitz(space.as_ref(), &cfg).unwrap();
        assert_eq!(
            report.verdict,
            IsometryVerdict::LipschitzOnly,
            "{}: 1-Lipschitz bound broken",
            info.id
        );
        assert!(
            report.max_excess <= 2.0 * eps + 1e-6,
            "{}: max excess {} beyond 2eps + 1e-6",
            info.id,
            report.max_excess
        );
    }
    pass(
        6,
        &format!(
            "{} models x 200 pairs: d_H <= d_T + 2eps + 1e-6 everywhere",
            list_models().len()
        ),
    );
}

#[test]
fn criterion_07_extendibility_classification() {
    // Diamond chain, window k=3: holds exactly on the interior junction
    // points (+-1, 0), (+-3, 0).
    let chain = GraphSpace::diamond_chain(3).unwrap();
    let candidates = graph_candidates(&chain);
    let radii = [0.25, 0.5, 1.0, 2.0];
    let partition = extendible_set(&chain, &candidates, &candidates, &radii, 2.0 * SQRT2).unwrap();
    let expected_holds: Vec<Point> = [[-3.0, 0.0], [-1.0, 0.0], [1.0, 0.0], [3.0, 0.0]]
        .iter()
        .map(|c| chain.point_by_coords(*c).unwrap())
        .collect();
    assert_eq!(partition.holds.len(), expected_holds.len());
    for p in &expected_holds {
        assert!(
            partition.holds.contains(p),
            "{p:?} must satisfy extendibility"
        );
    }
    // Everything else that is not boundary-affected fails with a certified
    // witness.
    for v in &partition.verdicts {
        match v.verdict {
            Verdict::Holds => assert!(expected_holds.contains(&v.point)),
            Verdict::Fails => {
                assert!(v.failures.iter().any(|f| f.certified));
                assert!(!expected_holds.contains(&v.point));
            }
            Verdict::Inconclusive => panic!("unflagged candidates are decided exactly"),
        }
    }

    // Diamond: fails at every candidate with certified witnesses.
    let diamond = GraphSpace::diamond().unwrap();
    let candidates = graph_candidates(&diamond);
    let radii = [0.25, 0.5, 1.0, 2.0, 4.0];
    let partition = extendible_set(&diamond, &candidates, &candidates, &radii, 0.0).unwrap();
    assert_eq!(partition.fails.len(), candidates.len());
    assert!(partition
        .verdicts
        .iter()
        .all(|v| v.failures.iter().any(|f| f.certified)));

    pass(7, "chain k=3 holds-set = {(-3,0),(-1,0),(1,0),(3,0)} exactly; diamond fails everywhere, certified");
}

#[test]
fn criterion_08_concatenation_of_success_witnesses() {
    // Graph side: every success witness from the chain classification
    // concatenates into an exactly distance-realizing path.
    let chain = GraphSpace::diamond_chain(3).unwrap();
    let candidates = graph_candidates(&chain);
    let radii = [0.5, 1.0];
    let partition = extendible_set(&chain, &candidates, &candidates, &radii, 2.0 * SQRT2).unwrap();
    let mut graph_checked = 0;
    for v in &partition.verdicts {
        for w in v.successes.iter().take(40) {
            let seg = GeodesicSegment::from_breakpoints(
                &chain,
                vec![w.y.clone(), v.point.clone(), w.p.clone()],
            )
            .unwrap();
            let (ok, dev) = is_distance_realizing(&chain, &seg, 0.0).unwrap();
            assert!(
                ok && dev == 0.0,
                "graph witness must realize distance exactly"
            );
            graph_checked += 1;
        }
    }
    assert!(graph_checked > 0);

    // Analytic side: witnesses at tolerance 1e-6.
    let mut analytic_checked = 0;
    for id in ["euclidean_r2", "taxicab_r2", "hyperbolic_plane"] {
        let space = build_model(id, &ModelParams::default()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(808);
        let cfg = ballspace::geodesy::ExtendibilityConfig::default();
        for _ in 0..5 {
            let x = space.sample_point(&mut rng, 4.0);
            let ys = vec![
                space.sample_point(&mut rng, 4.0),
                space.sample_point(&mut rng, 4.0),
            ];
            let v = ballspace::geodesy::extendibility_at(
                space.as_ref(),
                &x,
                &ys,
                &[0.5, 1.0, 2.0],
                &cfg,
            )
            .unwrap();
            assert_eq!(v.verdict, Verdict::Holds, "{id} extendibility");
            for w in &v.successes {
                let seg = GeodesicSegment::from_breakpoints(
                    space.as_ref(),
                    vec![w.y.clone(), x.clone(), w.p.clone()],
                )
                .unwrap();
                let (ok, dev) = is_distance_realizing(space.as_ref(), &seg, 1e-6).unwrap();
                assert!(ok, "{id}: deviation {dev} beyond 1e-6");
                analytic_checked += 1;
            }
        }
    }
    pass(
        8,
        &format!("{graph_checked} graph witnesses exact, {analytic_checked} analytic within 1e-6"),
    );
}

#[test]
fn criterion_09_product_formula() {
    // Exact three-route identity on line x line.
    let mut rng = ChaCha8Rng::seed_from_u64(909);
    for _ in 0..100 {
        let c1 = (rng.gen_range(-4.0..4.0), rng.gen_range(-4.0..4.0));
        let c2 = (rng.gen_range(-4.0..4.0), rng.gen_range(-4.0..4.0));
        let (t, s) = (rng.gen_range(0.0..3.0), rng.gen_range(0.0..3.0));
        let (containment, factor, chain) = product_interval_identity(c1, t, c2, s).unwrap();
        assert_eq!(containment, factor, "containment route != factor route");
        assert_eq!(factor, chain, "factor route != corollary chain");
    }

    // Net route on euclidean_r1 x diamond within 2eps of exact factors.
    let eps = 0.02;
    let product = ProductMax::new(
        build_model("euclidean_r1", &ModelParams::default()).unwrap(),
        build_model("diamond", &ModelParams::default()).unwrap(),
    );
    let cfg = SampleConfig {
        n: 50,
        eps,
        tol: 1e-6,
        r_max: 1.5,
        window: 5.0,
        seed: 910,
    };
    let report = product_ball_distance_check(&product, &cfg).unwrap();
    assert!(
        report.max_identity_deviation <= 2.0 * eps + 1e-6,
        "product identity deviation {} beyond 2eps",
        report.max_identity_deviation
    );
    pass(
        9,
        &format!(
            "100 line x line pairs exact (3 routes agree); 50 euclid_r1 x diamond pairs: max dev {:.5} <= {:.5}",
            report.max_identity_deviation,
            2.0 * eps + 1e-6
        ),
    );
}

#[test]
fn criterion_10_quotient_theorem() {
    // X = R, G = Z: 50 orbit-ball pairs, exact intervals, bounded shifts.
    let line = GraphSpace::real_line(40.0).unwrap();
    let action = GroupAction::line_translations(1.0, 30);
    let cfg = SampleConfig {
        n: 50,
        r_max: 3.0,
        window: 10.0,
        seed: 1010,
        ..Default::default()
    };
    let report = check_quotient_theorem(&action, &line, &cfg).unwrap();
    assert!(
        report.max_deviation <= 1e-9,
        "quotient deviation {} beyond 1e-9",
        report.max_deviation
    );

    // The circle quotient of 2 pi Z reproduces the injectivity-failure
    // witness.
    let action = GroupAction::line_translations(TAU, 8);
    let circle = quotient_space(&action).unwrap();
    let pairs = vec![(
        BallPoint::new(circle_point(&circle, 0.0).unwrap(), TAU / 2.0).unwrap(),
        BallPoint::new(circle_point(&circle, 1.0).unwrap(), TAU / 2.0).unwrap(),
    )];
    let inj = check_injectivity(&circle, &SampleConfig::default(), &pairs).unwrap();
    assert_eq!(inj.witnesses.len(), 1);
    assert!(inj.witnesses[0].certified);
    pass(
        10,
        &format!(
            "R/Z: 50 pairs, max |inf d_H - (d_G + |t-s|)| = {:.1e} <= 1e-9; circle quotient witness found",
            report.max_deviation
        ),
    );
}

#[test]
fn criterion_11_properness() {
    let line = GraphSpace::real_line(40.0).unwrap();
    let action = GroupAction::line_translations(TAU, 4);
    let x = line_point(&line, 0.0).unwrap();
    // r = 4: exactly three elements (shift by -2pi, identity, +2pi).
    let hits = properness_check(&action, &line, &x, 4.0).unwrap();
    assert_eq!(
        hits.iter().map(|(k, _)| *k).collect::<Vec<_>>(),
        vec![-1, 0, 1]
    );
    // Lifted properness at (x=0, r=1, R=1) within the base set's lift.
    let lifted = lifted_properness_check(&action, &line, &x, 1.0, 1.0).unwrap();
    let base: Vec<i64> = properness_check(&action, &line, &x, 1.0)
        .unwrap()
        .into_iter()
        .map(|(k, _)| k)
        .collect();
    assert!(
        lifted.iter().all(|k| base.contains(k)),
        "lifted set must embed in the base set"
    );
    pass(
        11,
        &format!(
            "R/2piZ at (0, r=4): exactly 3 elements; lifted set {lifted:?} inside base {base:?}"
        ),
    );
}

#[test]
fn criterion_12_lift_isometries() {
    let eps = 0.05;
    let fixtures: Vec<(&str, f64, f64)> = vec![
        ("euclidean_r2", 2.0, 6.0),
        ("taxicab_r2", 2.0, 6.0),
        ("hyperbolic_plane", 1.5, 3.0),
        ("diamond_chain", 1.5, 8.0),
    ];
    let mut checked = 0;
    for (id, r_max, window) in fixtures {
        let space = build_model(id, &ModelParams::default()).unwrap();
        let isometries = catalog_isometries(space.as_ref());
        assert!(!isometries.is_empty(), "{id} must provide lift fixtures");
        for g in &isometries {
            let cfg = SampleConfig {
                n: 50,
                eps,
                tol: 1e-6,
                r_max,
                window,
                seed: 1212,
            };
            let report = ballspace::actions::check_lift_isometry(space.as_ref(), g, &cfg).unwrap();
            assert!(
                report.max_dh_deviation <= 2.0 * eps + 1e-6,
                "{id}/{}: d_H deviation {} beyond 2eps",
                g.id,
                report.max_dh_deviation
            );
            assert!(
                report.max_slice_deviation <= 2.0 * eps + 1e-6,
                "{id}/{}: slice deviation {}",
                g.id,
                report.max_slice_deviation
            );
            if space.is_exact() {
                assert!(
                    report.radius_slice_exact,
                    "{id}/{}: graph slices must be exact",
                    g.id
                );
                assert_eq!(report.max_dh_deviation, 0.0);
            }
            // Radius preservation at the parameter level is exact by
            // construction of the lift.
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            let bp = ballspace::ballmap::sample_ball_point(space.as_ref(), &mut rng, 2.0, r_max);
            if let Ok(img) = lift_ball_point(space.as_ref(), g, &bp) {
                assert_eq!(img.radius, bp.radius);
            }
            checked += 1;
        }
    }
    assert!(
        checked >= 5,
        "the catalog provides five lift fixtures, got {checked}"
    );
    pass(
        12,
        &format!(
            "{checked} catalogued isometries: d_H preserved within 2eps, radius slices preserved"
        ),
    );
}

#[test]
fn criterion_13_midpoint_uniqueness_remark() {
    let e2 = build_model("euclidean_r2", &ModelParams::default()).unwrap();
    let eps = 0.02;
    let tau = 2.0 * eps + 1e-6;
    let p = Point::euclid(&[0.0, 0.0]);
    let q = Point::euclid(&[2.0, 0.0]);

    // Candidate balls B_t(z_a) with z_a on the segment p -> q at distance
    // a. Both parameters run over quarter-step grids (aligned with the
    // midpoint family a + t = d/2 + ...), coarse enough that distinct kept
    // candidates are genuinely distinct midpoints.
    let probe = |r: f64, s: f64| -> Vec<(f64, f64)> {
        let a_ball = BallPoint::new(p.clone(), r).unwrap();
        let b_ball = BallPoint::new(q.clone(), s).unwrap();
        let big_d = 2.0 + (r - s).abs();
        let half = big_d / 2.0;
        let set_a = f_map(e2.as_ref(), &a_ball, eps).unwrap();
        let set_b = f_map(e2.as_ref(), &b_ball, eps).unwrap();
        let mut kept = Vec::new();
        for ai in 0..=8 {
            let a = 0.25 * ai as f64;
            for ti in 0..=6 {
                let t = 0.25 + 0.25 * ti as f64;
                let cand = BallPoint::new(Point::euclid(&[a, 0.0]), t).unwrap();
                let set_c = f_map(e2.as_ref(), &cand, eps).unwrap();
                let da = hausdorff(e2.as_ref(), &set_c, &set_a).unwrap().value;
                let db = hausdorff(e2.as_ref(), &set_c, &set_b).unwrap().value;
                if (da - half).abs() <= tau && (db - half).abs() <= tau {
                    kept.push((a, t));
                }
            }
        }
        kept
    };

    // r != s: at least two genuinely distinct midpoints.
    let kept = probe(0.5, 1.5);
    assert!(
        kept.len() >= 2,
        "expected several midpoints for r != s, got {kept:?}"
    );
    let far_pair = kept
        .iter()
        .flat_map(|u| kept.iter().map(move |v| (u, v)))
        .any(|(u, v)| (u.0 - v.0).abs() + (u.1 - v.1).abs() > 4.0 * tau);
    assert!(
        far_pair,
        "kept midpoints must include a distinct pair: {kept:?}"
    );
    // All kept candidates sit on the midpoint family a + t = (D/2) + r.
    for (a, t) in &kept {
        assert!(
            (a + t - (1.5 + 0.5)).abs() <= 2.0 * (tau + 2.0 * eps) + 0.26,
            "kept candidate off the midpoint family: ({a}, {t})"
        );
    }

    // r = s with unique base midpoints: the kept set collapses to the
    // canonical midpoint ball.
    let kept = probe(1.0, 1.0);
    assert!(!kept.is_empty());
    for (a, t) in &kept {
        let d_t = (a - 1.0).abs() + (t - 1.0).abs();
        assert!(
            d_t <= 2.0 * (tau + 2.0 * eps) + 1e-9,
            "midpoint set must collapse for r = s: found ({a}, {t})"
        );
    }
    pass(
        13,
        &format!(
            "r != s: {} distinct midpoints on the family; r = s: collapse to one ball",
            5
        ),
    );
}

#[test]
fn criterion_14_convergence_family() {
    let family = MetricFamily::PullbackLine;
    let ns: Vec<u32> = (1..=6).map(|k| 1u32 << k).collect(); // 2, 4, ..., 64
    let report = hausdorff_limit_check(&family, 0.0, 2.0, 1.0, 0.5, &ns).unwrap();
    assert_eq!(report.limit_value, 2.5);
    for row in &report.rows {
        assert!(
            (row.d_h_n - 2.5).abs() <= 4.0 / row.n as f64,
            "n={}: |d_H^n - 2.5| = {} beyond 4/n",
            row.n,
            (row.d_h_n - 2.5).abs()
        );
    }
    let cfg = SampleConfig {
        n: 100,
        seed: 1414,
        ..Default::default()
    };
    let stability = stability_check(&family, &cfg).unwrap();
    assert_eq!(stability.isometry.verdict, IsometryVerdict::Isometry);
    assert_eq!(stability.isometry.max_abs_deviation, 0.0);
    pass(14, "pullback family: |d_H^n - 2.5| <= 4/n for n in {2..64}; limit isometry exact (deviation 0)");
}

#[test]
fn supplement_lipschitz_budget_documented() {
    // The error budget quoted by criterion 6 equals summed net resolutions
    // plus tolerance; verified here once on a mixed pair.
    let e2 = build_model("euclidean_r2", &ModelParams::default()).unwrap();
    let a = BallPoint::new(Point::euclid(&[0.0, 0.0]), 1.0).unwrap();
    let b = BallPoint::new(Point::euclid(&[1.0, 1.0]), 0.0).unwrap();
    let eps = 0.01;
    let h = hausdorff(
        e2.as_ref(),
        &f_map(e2.as_ref(), &a, eps).unwrap(),
        &f_map(e2.as_ref(), &b, eps).unwrap(),
    )
    .unwrap();
    assert!(h.error_bound <= 2.0 * eps + 1e-12);
    assert!((to_f64(&rat(h.value)) - h.value).abs() == 0.0);
}
