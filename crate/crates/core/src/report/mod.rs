//! Scenarios, suite orchestration and machine-readable reports.
//!
//! A report is a single JSON object `{suite, mode, seed, checks, summary}`;
//! every check carries the equation tag it verifies. Reports hold no wall
//! time, so equal seeds and scenarios give byte-identical output.

mod suites;

use std::fs::File;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use num_complex::Complex64;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::algebra::ExactComplex;
use crate::error::{Error, Result};
use crate::forces::RingConfig;
use crate::gridfields::GridSpec;
use crate::planewave::PhysicalConstants;

/// Suite names in execution order; `all` runs every one of them.
pub const SUITES: [&str; 11] = [
    "algebra",
    "bilinears",
    "directions",
    "canonical",
    "planewave",
    "currents",
    "grid",
    "conservation",
    "lagrangian",
    "forces",
    "hydro",
];

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Arithmetic over Q(√2, i).
    #[default]
    Exact,
    /// `Complex64` with 1e-12 tolerances.
    Float,
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "exact" => Ok(Mode::Exact),
            "float" => Ok(Mode::Float),
            other => Err(Error::Scenario(format!("unknown mode `{other}` (expected exact or float)"))),
        }
    }
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::Exact => "exact",
            Mode::Float => "float",
        })
    }
}

/// Physical constants as rational strings such as `"1"` or `"3/2"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ConstantsProfile {
    pub c: String,
    pub hbar: String,
    pub mass: String,
}

impl Default for ConstantsProfile {
    fn default() -> Self {
        Self { c: "1".into(), hbar: "1".into(), mass: "1".into() }
    }
}

fn parse_rational(name: &str, s: &str) -> Result<BigRational> {
    BigRational::from_str(s.trim()).map_err(|e| Error::Scenario(format!("{name} = `{s}` is not a rational: {e}")))
}

impl ConstantsProfile {
    pub fn to_constants(&self) -> Result<PhysicalConstants> {
        PhysicalConstants::new(
            parse_rational("constants.c", &self.c)?,
            parse_rational("constants.hbar", &self.hbar)?,
            parse_rational("constants.mass", &self.mass)?,
        )
        .map_err(|e| Error::Scenario(e.to_string()))
    }
}

/// Everything a suite run depends on. Every field has a default; unknown
/// keys are rejected.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Scenario {
    pub suite: String,
    pub mode: Mode,
    pub seed: u64,
    pub grid: GridSpec,
    pub constants: ConstantsProfile,
    pub ring: Option<RingConfig>,
    /// Extra y-wave amplitudes `(E_x, E_z, H_x, H_z)` as rational strings,
    /// checked alongside the random ones.
    pub fields: Option<[String; 4]>,
    /// Volume converting momentum to momentum density.
    pub dtau: Option<f64>,
}

impl Default for Scenario {
    fn default() -> Self {
        Self {
            suite: "all".into(),
            mode: Mode::Exact,
            seed: 1,
            grid: GridSpec::default(),
            constants: ConstantsProfile::default(),
            ring: None,
            fields: None,
            dtau: None,
        }
    }
}

impl Scenario {
    pub fn from_json(text: &str) -> Result<Self> {
        let s: Scenario = serde_json::from_str(text).map_err(|e| Error::Scenario(e.to_string()))?;
        s.validate()?;
        Ok(s)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn validate(&self) -> Result<()> {
        if self.suite != "all" && !SUITES.contains(&self.suite.as_str()) {
            return Err(Error::UnknownSuite(self.suite.clone()));
        }
        self.grid.validate().map_err(|e| Error::Scenario(e.to_string()))?;
        if self.grid.time_steps < 3 {
            return Err(Error::Scenario("grid.time_steps must be at least 3".into()));
        }
        self.constants.to_constants()?;
        if let Some(r) = &self.ring {
            r.validate().map_err(|e| Error::Scenario(e.to_string()))?;
        }
        if let Some(f) = &self.fields {
            for (i, s) in f.iter().enumerate() {
                parse_rational(&format!("fields[{i}]"), s)?;
            }
        }
        if let Some(d) = self.dtau {
            if !(d > 0.0 && d.is_finite()) {
                return Err(Error::Scenario("dtau must be a positive finite volume".into()));
            }
        }
        Ok(())
    }

    pub(crate) fn custom_fields(&self) -> Option<[BigRational; 4]> {
        let f = self.fields.as_ref()?;
        let v: Vec<BigRational> = f.iter().map(|s| parse_rational("fields", s).expect("validated")).collect();
        v.try_into().ok()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub paper_eq: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn new(id: impl Into<String>, paper_eq: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Self { id: id.into(), paper_eq: paper_eq.into(), pass, detail: detail.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    /// True iff every check passed.
    pub pass: bool,
    pub tool_version: String,
}

impl Summary {
    pub fn of(checks: &[Check]) -> Self {
        let passed = checks.iter().filter(|c| c.pass).count();
        Self {
            total: checks.len(),
            passed,
            failed: checks.len() - passed,
            pass: passed == checks.len(),
            tool_version: TOOL_VERSION.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub mode: Mode,
    pub seed: u64,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>, mode: Mode, seed: u64, checks: Vec<Check>) -> Self {
        let summary = Summary::of(&checks);
        Self { suite: suite.into(), mode, seed, checks, summary }
    }

    pub fn passed(&self) -> bool {
        self.summary.pass
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        for c in &self.checks {
            w.serialize(c)?;
        }
        if self.checks.is_empty() {
            w.write_record(["id", "paper_eq", "pass", "detail"])?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

pub fn emit_report(report: &SuiteReport, format: ReportFormat, path: &Path) -> Result<()> {
    let text = match format {
        ReportFormat::Json => report.to_json()?,
        ReportFormat::Csv => report.to_csv()?,
    };
    let mut f = File::create(path)?;
    f.write_all(text.as_bytes())?;
    if format == ReportFormat::Json {
        f.write_all(b"\n")?;
    }
    Ok(())
}

/// Runs suite `name` (or every suite for `all`) under the scenario's mode
/// and seed. Suites of `all` run on separate threads; their checks are merged
/// in [`SUITES`] order.
pub fn run_suite(name: &str, scenario: &Scenario) -> Result<SuiteReport> {
    scenario.validate()?;
    let names: Vec<&str> = if name == "all" {
        SUITES.to_vec()
    } else if let Some(n) = SUITES.iter().find(|s| **s == name) {
        vec![*n]
    } else {
        return Err(Error::UnknownSuite(name.into()));
    };
    let results: Vec<Result<Vec<Check>>> = std::thread::scope(|scope| {
        let handles: Vec<_> = names
            .iter()
            .map(|n| scope.spawn(move || run_one(n, scenario)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("suite thread panicked")).collect()
    });
    let mut checks = Vec::new();
    for r in results {
        checks.extend(r?);
    }
    Ok(SuiteReport::new(name, scenario.mode, scenario.seed, checks))
}

fn run_one(name: &str, scenario: &Scenario) -> Result<Vec<Check>> {
    let stream = SUITES.iter().position(|s| *s == name).expect("known suite") as u64;
    match scenario.mode {
        Mode::Exact => suites::run::<ExactComplex>(name, scenario, stream),
        Mode::Float => suites::run::<Complex64>(name, scenario, stream),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_keys_and_suites_are_rejected() {
        assert!(matches!(Scenario::from_json(r#"{"sweet": "all"}"#), Err(Error::Scenario(_))));
        assert!(matches!(Scenario::from_json(r#"{"suite": "nope"}"#), Err(Error::UnknownSuite(_))));
        assert!(matches!(run_suite("nope", &Scenario::default()), Err(Error::UnknownSuite(_))));
        assert!(Scenario::from_json(r#"{"constants": {"c": "x"}}"#).is_err());
        assert!(Scenario::from_json(r#"{"constants": {"c": "-1"}}"#).is_err());
    }

    #[test]
    fn defaults_fill_missing_keys() {
        let s = Scenario::from_json(r#"{"mode": "float", "grid": {"h": 0.0625}}"#).unwrap();
        assert_eq!(s.mode, Mode::Float);
        assert_eq!(s.grid.h, 0.0625);
        assert_eq!(s.grid.dt_ratio, GridSpec::default().dt_ratio);
        assert_eq!(s.seed, 1);
    }

    #[test]
    fn empty_report_serializes() {
        let r = SuiteReport::new("algebra", Mode::Exact, 7, vec![]);
        let back = SuiteReport::from_json(&r.to_json().unwrap()).unwrap();
        assert_eq!(back.summary.total, 0);
        assert!(back.passed());
        assert_eq!(r.to_csv().unwrap().trim(), "id,paper_eq,pass,detail");
    }

    #[test]
    fn failing_check_round_trips() {
        let checks = vec![
            Check::new("a", "Eq 2.14'", true, "ok"),
            Check::new("b", "Eq 2.18", false, "residual 3, expected 0"),
        ];
        let r = SuiteReport::new("currents", Mode::Float, 3, checks);
        let back = SuiteReport::from_json(&r.to_json().unwrap()).unwrap();
        assert_eq!(back, r);
        assert_eq!(Summary::of(&back.checks), back.summary);
        assert!(!back.passed());
        let csv = r.to_csv().unwrap();
        assert!(csv.contains("b,Eq 2.18,false,\"residual 3, expected 0\""));
    }

    #[test]
    fn mode_parsing() {
        assert_eq!("FLOAT".parse::<Mode>().unwrap(), Mode::Float);
        assert!("fast".parse::<Mode>().is_err());
    }
}
