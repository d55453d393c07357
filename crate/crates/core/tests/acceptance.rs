//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Criteria whose printed source material is inconsistent keep failing; the
//! process exits nonzero only when an outcome differs from the recorded one.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use nfbridge::report::{run_suite, Mode, Scenario, SuiteReport};

/// Tensor-table entries whose printed closed forms disagree with the matrices.
const KNOWN_TABLE_MISMATCHES: [&str; 4] =
    ["bilinears.tensor(1,2)", "bilinears.tensor(2,1)", "bilinears.tensor(2,3)", "bilinears.tensor(3,2)"];

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
    /// Whether a FAIL here is recorded and expected.
    known_failure: bool,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Self { pass, detail: detail.into(), known_failure: false }
    }
}

fn scenario(mode: Mode) -> Scenario {
    Scenario { mode, ..Scenario::default() }
}

fn timed(name: &str, mode: Mode) -> (SuiteReport, Duration) {
    let start = Instant::now();
    let r = run_suite(name, &scenario(mode)).unwrap_or_else(|e| panic!("suite {name}: {e}"));
    (r, start.elapsed())
}

/// All listed checks pass; the detail names every failing one.
fn all_pass(report: &SuiteReport, ids: &[&str]) -> Outcome {
    let mut missing = Vec::new();
    let mut failed = Vec::new();
    for id in ids {
        match report.check(id) {
            None => missing.push(*id),
            Some(c) if !c.pass => failed.push(format!("{id}: {}", c.detail)),
            Some(_) => {}
        }
    }
    let pass = missing.is_empty() && failed.is_empty();
    let detail = if pass {
        format!("{} checks pass", ids.len())
    } else {
        format!("missing {missing:?}; failing {failed:?}")
    };
    Outcome::new(pass, detail)
}

fn prefixed<'a>(report: &'a SuiteReport, prefix: &str) -> Vec<&'a str> {
    report.checks.iter().filter(|c| c.id.starts_with(prefix)).map(|c| c.id.as_str()).collect()
}

fn criterion_1() -> Outcome {
    let (r, t) = timed("algebra", Mode::Exact);
    let mut o = all_pass(&r, &["algebra.anticommutators", "algebra.alpha5", "algebra.tensor_antisymmetry"]);
    o.pass &= t < Duration::from_secs(1);
    o.detail.push_str(&format!("; {:.3} s", t.as_secs_f64()));
    o
}

fn criterion_2() -> Outcome {
    let (r, _) = timed("bilinears", Mode::Exact);
    let failing: Vec<&str> = r.checks.iter().filter(|c| !c.pass).map(|c| c.id.as_str()).collect();
    let total = r.checks.len();
    let detail = format!(
        "{} of {total} table entries match on 1000 quads; mismatched: {}",
        total - failing.len(),
        if failing.is_empty() { "none".to_string() } else { failing.join(", ") }
    );
    Outcome { pass: failing.is_empty(), detail, known_failure: failing == KNOWN_TABLE_MISMATCHES }
}

fn criterion_3() -> Outcome {
    let (r, _) = timed("planewave", Mode::Exact);
    all_pass(&r, &["planewave.massless.column", "planewave.massless.row"])
}

fn criterion_4() -> Outcome {
    let (r, _) = timed("planewave", Mode::Exact);
    all_pass(&r, &["planewave.klein_gordon", "planewave.squares"])
}

fn criterion_5() -> Outcome {
    let (r, _) = timed("currents", Mode::Exact);
    all_pass(
        &r,
        &[
            "currents.column.+_mass",
            "currents.row.+_mass",
            "currents.column.-_mass",
            "currents.row.-_mass",
            "currents.hermitian_pair",
        ],
    )
}

fn criterion_6() -> Outcome {
    let (r, _) = timed("directions", Mode::Exact);
    let ids = prefixed(&r, "directions.");
    let poynting = ids.iter().filter(|id| id.starts_with("directions.poynting.")).count();
    let per_axis = ids.iter().filter(|id| id.starts_with("directions.per_axis.")).count();
    let mut o = all_pass(&r, &ids);
    o.pass &= poynting == 6 && per_axis == 3;
    o.detail.push_str(&format!("; {poynting} frames, {per_axis} per-axis systems"));
    o
}

fn criterion_7() -> Outcome {
    let (r, _) = timed("canonical", Mode::Exact);
    all_pass(&r, &["canonical.unitary", "canonical.psi_prime", "canonical.bilinear_invariance"])
}

fn criterion_8() -> Outcome {
    let (r, t) = timed("conservation", Mode::Exact);
    let mut o = all_pass(&r, &["conservation.analytic", "conservation.fd_order"]);
    o.pass &= t < Duration::from_secs(10);
    o.detail.push_str(&format!("; {:.3} s", t.as_secs_f64()));
    o
}

fn criterion_9() -> Outcome {
    let (exact, _) = timed("lagrangian", Mode::Exact);
    let (float, _) = timed("lagrangian", Mode::Float);
    let a = all_pass(&exact, &["lagrangian.on_shell", "lagrangian.termwise"]);
    let b = all_pass(&float, &["lagrangian.on_shell"]);
    Outcome::new(a.pass && b.pass, format!("exact: {}; float: {}", a.detail, b.detail))
}

fn criterion_10() -> Outcome {
    let (r, _) = timed("forces", Mode::Exact);
    let mut o = all_pass(
        &r,
        &[
            "forces.spin.linear_photon",
            "forces.spinning.ex_hz",
            "forces.spinning.ez_hx",
            "forces.ring.inward",
        ],
    );
    if let Some(c) = r.check("forces.spin.printed_second_line") {
        o.detail.push_str(&format!("; printed second line as typeset: {}", if c.pass { "zero" } else { "nonzero" }));
    }
    o
}

fn criterion_11() -> Outcome {
    let (r, _) = timed("hydro", Mode::Exact);
    all_pass(&r, &["hydro.curl_ratio", "hydro.newton", "hydro.heisenberg_momentum"])
}

fn criterion_12() -> Outcome {
    let (first, t) = timed("all", Mode::Exact);
    let (second, _) = timed("all", Mode::Exact);
    let a = first.to_json().expect("report serializes");
    let b = second.to_json().expect("report serializes");
    let pass = a == b && t < Duration::from_secs(60);
    Outcome::new(pass, format!("identical reports: {}; full suite {:.2} s", a == b, t.as_secs_f64()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("dirac set certification", criterion_1),
        ("bilinear table", criterion_2),
        ("massless equivalence", criterion_3),
        ("klein-gordon factorization", criterion_4),
        ("current correspondence", criterion_5),
        ("direction frames", criterion_6),
        ("canonical invariance", criterion_7),
        ("conservation", criterion_8),
        ("lagrangian", criterion_9),
        ("forces", criterion_10),
        ("hydrodynamics", criterion_11),
        ("determinism and reporting", criterion_12),
    ];
    let mut unexpected = 0;
    for (n, (name, f)) in criteria.iter().enumerate() {
        let o = f();
        let tag = match (o.pass, o.known_failure) {
            (true, _) => "PASS",
            (false, true) => "FAIL (known)",
            (false, false) => {
                unexpected += 1;
                "FAIL"
            }
        };
        println!("{tag} criterion {:>2} {name}: {}", n + 1, o.detail);
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} unexpected failure(s)");
        ExitCode::FAILURE
    }
}
