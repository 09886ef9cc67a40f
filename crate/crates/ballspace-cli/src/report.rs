//! Report serialization: schema-versioned JSON (byte-deterministic for a
//! fixed scenario and seed) and a human-readable text rendering with one
//! traceability line per result.

use ballspace::point::sig6;

use crate::suites::VerificationReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            other => Err(format!("unknown format: {other} (expected json or text)")),
        }
    }
}

pub fn emit(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Text => render_text(report),
    }
}

fn render_text(report: &VerificationReport) -> String {
    let mut out = String::new();
    let s = &report.scenario;
    out.push_str(&format!(
        "scenario: model={} suite={} n={} seed={} eps={} r_max={} window={} tol={}\n",
        s.model, s.suite, s.n, s.seed, s.net_epsilon, s.r_max, s.window, s.tolerance
    ));
    out.push_str(&format!(
        "model: {} (strongly geodesically complete: {:?}, unique midpoints: {:?})\n",
        report.model_id,
        report.ground_truth.strongly_geodesically_complete,
        report.ground_truth.unique_midpoints
    ));
    for r in &report.results {
        out.push_str(&format!(
            "\nsuite {}: {}\n",
            r.suite,
            if r.passed { "PASS" } else { "FAIL" }
        ));
        out.push_str(&format!("  claim: {}\n", r.claim));
        out.push_str(&format!(
            "  verdict: {} (expected {}), samples: {}, runtime: {:.2}s\n",
            r.verdict,
            r.expectation,
            r.samples,
            r.runtime.as_secs_f64()
        ));
        out.push_str(&format!(
            "  max deviation: {} within budget {}\n",
            sig6(r.max_deviation),
            sig6(r.error_budget)
        ));
        for w in &r.witnesses {
            out.push_str(&format!(
                "  witness: ball({}, {}) vs ball({}, {}): d_H = {}, d_T = {}, deviation = {}\n",
                w.a.label,
                sig6(w.a_radius),
                w.b.label,
                sig6(w.b_radius),
                sig6(w.d_h),
                sig6(w.d_t),
                sig6(w.deviation)
            ));
        }
        for n in &r.notes {
            out.push_str(&format!("  note: {n}\n"));
        }
    }
    out.push_str(&format!(
        "\noverall: {}\n",
        if report.all_passed {
            "PASS (exit 0)"
        } else {
            "FAIL (exit 1)"
        }
    ));
    out
}
