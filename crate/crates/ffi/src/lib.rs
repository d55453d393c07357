//! C ABI over the `nfbridge` verification library.
//!
//! Every fallible call returns an [`NfbStatus`]; on anything but
//! `NFB_STATUS_OK` the message is available from [`nfb_last_error`] on the
//! same thread until the next failing call. Handles are opaque and owned by
//! the caller, who releases them with the matching `*_free` function.
//! Strings returned through out-parameters are released with
//! [`nfb_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::OnceLock;

use nfbridge::algebra::MatrixKind;
use nfbridge::bilinears::bilinear;
use nfbridge::bridge::FieldQuad;
use nfbridge::forces::{ring_force, RingConfig};
use nfbridge::planewave::y_frame;
use nfbridge::report::{run_suite, Mode, Scenario, SuiteReport, TOOL_VERSION};
use nfbridge::Error;
use num_complex::Complex64;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NfbStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidInput = 3,
    UnknownSuite = 4,
    Scenario = 5,
    Precondition = 6,
    Io = 7,
    Panic = 8,
}

/// Scenario handle.
pub struct NfbScenario(Scenario);

/// Suite report handle.
pub struct NfbReport(SuiteReport);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn status_of(e: &Error) -> NfbStatus {
    match e {
        Error::UnknownSuite(_) => NfbStatus::UnknownSuite,
        Error::Scenario(_) | Error::Json(_) => NfbStatus::Scenario,
        Error::Precondition(_) | Error::NotUnitary => NfbStatus::Precondition,
        Error::Io(_) | Error::Csv(_) => NfbStatus::Io,
        _ => NfbStatus::InvalidInput,
    }
}

/// Runs `f`, mapping errors and panics to a status and the thread's last error.
fn guard(f: impl FnOnce() -> Result<(), (NfbStatus, String)>) -> NfbStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => NfbStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            NfbStatus::Panic
        }
    }
}

fn lib<T>(r: nfbridge::Result<T>) -> Result<T, (NfbStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn non_null<T>(p: *const T, what: &str) -> Result<(), (NfbStatus, String)> {
    if p.is_null() {
        Err((NfbStatus::NullPointer, format!("{what} is null")))
    } else {
        Ok(())
    }
}

/// # Safety
/// `s` must be null or a valid NUL-terminated string.
unsafe fn str_arg<'a>(s: *const c_char, what: &str) -> Result<&'a str, (NfbStatus, String)> {
    non_null(s, what)?;
    CStr::from_ptr(s).to_str().map_err(|_| (NfbStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

fn to_c_string(s: String) -> Result<*mut c_char, (NfbStatus, String)> {
    CString::new(s).map(CString::into_raw).map_err(|_| (NfbStatus::InvalidInput, "string contains NUL".into()))
}

/// Message of the last failing call on this thread, or null. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn nfb_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Version recorded in reports; static storage.
#[no_mangle]
pub extern "C" fn nfb_version() -> *const c_char {
    static VERSION: OnceLock<CString> = OnceLock::new();
    VERSION.get_or_init(|| CString::new(TOOL_VERSION).expect("version has no NUL")).as_ptr()
}

/// # Safety
/// `s` must be null or a pointer obtained from this library.
#[no_mangle]
pub unsafe extern "C" fn nfb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Default scenario: every suite, exact mode, seed 1.
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn nfb_scenario_new(out: *mut *mut NfbScenario) -> NfbStatus {
    guard(|| {
        non_null(out, "out")?;
        *out = Box::into_raw(Box::new(NfbScenario(Scenario::default())));
        Ok(())
    })
}

/// Scenario from JSON text; unknown keys are rejected.
///
/// # Safety
/// `json` must be null or NUL-terminated; `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn nfb_scenario_from_json(json: *const c_char, out: *mut *mut NfbScenario) -> NfbStatus {
    guard(|| {
        non_null(out, "out")?;
        let text = str_arg(json, "json")?;
        let s = lib(Scenario::from_json(text))?;
        *out = Box::into_raw(Box::new(NfbScenario(s)));
        Ok(())
    })
}

/// # Safety
/// `scenario` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn nfb_scenario_set_seed(scenario: *mut NfbScenario, seed: u64) -> NfbStatus {
    guard(|| {
        non_null(scenario, "scenario")?;
        (*scenario).0.seed = seed;
        Ok(())
    })
}

/// `exact` nonzero selects exact arithmetic, zero selects floating point.
///
/// # Safety
/// `scenario` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn nfb_scenario_set_exact(scenario: *mut NfbScenario, exact: i32) -> NfbStatus {
    guard(|| {
        non_null(scenario, "scenario")?;
        (*scenario).0.mode = if exact != 0 { Mode::Exact } else { Mode::Float };
        Ok(())
    })
}

/// # Safety
/// `scenario` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn nfb_scenario_free(scenario: *mut NfbScenario) {
    if !scenario.is_null() {
        drop(Box::from_raw(scenario));
    }
}

/// Runs suite `name` (or `all`) under `scenario`.
///
/// # Safety
/// `scenario` must be a live handle, `name` NUL-terminated, `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn nfb_run_suite(
    scenario: *const NfbScenario,
    name: *const c_char,
    out: *mut *mut NfbReport,
) -> NfbStatus {
    guard(|| {
        non_null(scenario, "scenario")?;
        non_null(out, "out")?;
        let name = str_arg(name, "name")?;
        let report = lib(run_suite(name, &(*scenario).0))?;
        *out = Box::into_raw(Box::new(NfbReport(report)));
        Ok(())
    })
}

/// Check counts; any out-pointer may be null.
///
/// # Safety
/// `report` must be a live handle; non-null out-pointers must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn nfb_report_counts(
    report: *const NfbReport,
    total: *mut usize,
    passed: *mut usize,
    failed: *mut usize,
) -> NfbStatus {
    guard(|| {
        non_null(report, "report")?;
        let s = &(*report).0.summary;
        for (p, v) in [(total, s.total), (passed, s.passed), (failed, s.failed)] {
            if !p.is_null() {
                *p = v;
            }
        }
        Ok(())
    })
}

/// Writes 1 when every check passed, else 0.
///
/// # Safety
/// `report` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn nfb_report_passed(report: *const NfbReport, out: *mut i32) -> NfbStatus {
    guard(|| {
        non_null(report, "report")?;
        non_null(out, "out")?;
        *out = i32::from((*report).0.passed());
        Ok(())
    })
}

/// JSON text of the report; release with [`nfb_string_free`].
///
/// # Safety
/// `report` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn nfb_report_to_json(report: *const NfbReport, out: *mut *mut c_char) -> NfbStatus {
    guard(|| {
        non_null(report, "report")?;
        non_null(out, "out")?;
        *out = to_c_string(lib((*report).0.to_json())?)?;
        Ok(())
    })
}

/// # Safety
/// `report` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn nfb_report_free(report: *mut NfbReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Radial ring force `ρ_e(E_p − H_p)` with `j_τ = ρ_e·c`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn nfb_ring_force(rho_e: f64, e_p: f64, h_p: f64, c: f64, out: *mut f64) -> NfbStatus {
    guard(|| {
        non_null(out, "out")?;
        let cfg = RingConfig { rho_e, j_tau: rho_e * c, e_p, h_p, c, ..RingConfig::default() };
        *out = lib(ring_force(&cfg))?;
        Ok(())
    })
}

/// `ψ⁺Âψ` for a real y-wave `(E_x, E_z, H_x, H_z)`; `kind` is a matrix name
/// such as `beta`, `alpha2`, `pseudovector(3)` or `tensor(1,2)`.
///
/// # Safety
/// `kind` must be NUL-terminated, `fields` must point to four doubles and
/// `re`, `im` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn nfb_bilinear(
    kind: *const c_char,
    fields: *const f64,
    re: *mut f64,
    im: *mut f64,
) -> NfbStatus {
    guard(|| {
        non_null(fields, "fields")?;
        non_null(re, "re")?;
        non_null(im, "im")?;
        let name = str_arg(kind, "kind")?;
        let kind = MatrixKind::enumerate()
            .into_iter()
            .find(|k| k.to_string() == name)
            .ok_or_else(|| (NfbStatus::InvalidInput, format!("unknown matrix `{name}`")))?;
        let v = std::slice::from_raw_parts(fields, 4);
        let q = FieldQuad::y(
            Complex64::new(v[0], 0.0),
            Complex64::new(v[1], 0.0),
            Complex64::new(v[2], 0.0),
            Complex64::new(v[3], 0.0),
        );
        let z = lib(bilinear(kind, &q, &y_frame()))?;
        *re = z.re;
        *im = z.im;
        Ok(())
    })
}
