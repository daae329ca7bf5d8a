//! C ABI over `weilbsd`.
//!
//! Objects cross the boundary as opaque heap handles that the caller frees
//! with the matching `*_free` function. Every fallible call returns a
//! [`WbStatus`]; on failure a message is available from
//! [`wb_last_error_message`] on the same thread until the next call.
//! Strings returned by the library are NUL-terminated UTF-8 and must be
//! released with [`wb_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use weilbsd::bsd::{bsd_report, BsdReport, RegulatorInput, ReportOptions};
use weilbsd::cli::{self, Command, Config};
use weilbsd::homrank::rank_consistency_check;
use weilbsd::regulator::GramMatrix;
use weilbsd::weil::{validate_weil, zeta_from_counts};
use weilbsd::{Error, IntegerPolynomial, PrimeFieldSize, WeilPolynomial};

/// Status codes. Values are stable.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WbStatus {
    Ok = 0,
    InvalidInput = 1,
    InvalidField = 2,
    DegreeOdd = 3,
    NotMonic = 4,
    FunctionalEquationFailure = 5,
    RiemannHypothesisFailure = 6,
    ValidationFailure = 7,
    FieldMismatch = 8,
    RankMismatch = 9,
    NonIntegralSha = 10,
    ReportInconsistent = 11,
    PrecludedPrime = 12,
    DegreeCapExceeded = 13,
    NullPointer = 20,
    Utf8 = 21,
    Overflow = 22,
    Panic = 30,
    Internal = 31,
}

impl From<&Error> for WbStatus {
    fn from(err: &Error) -> Self {
        match err {
            Error::InvalidInput(_) | Error::AmbientMismatch | Error::LengthMismatch(..) => WbStatus::InvalidInput,
            Error::InvalidField(_) => WbStatus::InvalidField,
            Error::DegreeOdd(_) => WbStatus::DegreeOdd,
            Error::NotMonic => WbStatus::NotMonic,
            Error::FunctionalEquationFailure(_) => WbStatus::FunctionalEquationFailure,
            Error::RiemannHypothesisFailure(_) => WbStatus::RiemannHypothesisFailure,
            Error::ValidationFailure(_) => WbStatus::ValidationFailure,
            Error::FieldMismatch(..) => WbStatus::FieldMismatch,
            Error::RankMismatch { .. } => WbStatus::RankMismatch,
            Error::NonIntegralSha { .. } => WbStatus::NonIntegralSha,
            Error::ReportInconsistent(_) => WbStatus::ReportInconsistent,
            Error::PrecludedPrime(_) => WbStatus::PrecludedPrime,
            Error::DegreeCapExceeded { .. } => WbStatus::DegreeCapExceeded,
            Error::ZeroConstantTerm
            | Error::DenominatorVanishes
            | Error::PoleAtPoint(_)
            | Error::Internal(_) => WbStatus::Internal,
        }
    }
}

/// How [`wb_report_new`] obtains the Hom lattice bases.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WbRegulatorMode {
    /// No bases; the rank must be zero.
    Absent = 0,
    /// `{1, pi}` in `Z[pi]`; needs `f_A = f_B` of degree 2.
    Endomorphism = 1,
    /// Row-major `n x n` Gram matrix.
    Gram = 2,
}

/// Opaque certified Weil polynomial.
pub struct WbWeilPolynomial(WeilPolynomial);

/// Opaque BSD report.
pub struct WbReport(BsdReport);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn clear_last_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

struct Failure(WbStatus, String);

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure(WbStatus::from(&err), format!("{}: {err}", err.name()))
    }
}

fn null(what: &str) -> Failure {
    Failure(WbStatus::NullPointer, format!("{what} is null"))
}

/// Runs `body`, converting errors and panics into a status.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> WbStatus {
    clear_last_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => WbStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("panic inside weilbsd");
            WbStatus::Panic
        }
    }
}

unsafe fn slice<'a, T>(data: *const T, len: usize, what: &str) -> Result<&'a [T], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if data.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(data, len))
}

unsafe fn handle<'a, T>(h: *const T, what: &str) -> Result<&'a T, Failure> {
    h.as_ref().ok_or_else(|| null(what))
}

unsafe fn write_out<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn to_i64(x: &BigInt, what: &str) -> Result<i64, Failure> {
    x.to_i64()
        .ok_or_else(|| Failure(WbStatus::Overflow, format!("{what} = {x} does not fit in int64")))
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

/// Message for the last failed call on this thread, or NULL. The pointer is
/// valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn wb_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Certifies the polynomial with ascending coefficients `coeffs[0..len]`.
///
/// # Safety
/// `coeffs` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wb_weil_validate(
    q: u64,
    coeffs: *const i64,
    len: usize,
    out: *mut *mut WbWeilPolynomial,
) -> WbStatus {
    guard(|| {
        let coeffs = slice(coeffs, len, "coeffs")?;
        let field = PrimeFieldSize::new(q)?;
        let w = validate_weil(field, &IntegerPolynomial::from_i64s(coeffs))?;
        write_out(out, Box::into_raw(Box::new(WbWeilPolynomial(w))), "out")
    })
}

/// Characteristic polynomial of a genus-`g` curve from `counts[0..g]`.
///
/// # Safety
/// `counts` must point to `g` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wb_weil_from_counts(
    q: u64,
    g: usize,
    counts: *const u64,
    out: *mut *mut WbWeilPolynomial,
) -> WbStatus {
    guard(|| {
        let counts: Vec<BigInt> = slice(counts, g, "counts")?.iter().map(|&n| BigInt::from(n)).collect();
        let w = zeta_from_counts(PrimeFieldSize::new(q)?, g, &counts)?;
        write_out(out, Box::into_raw(Box::new(WbWeilPolynomial(w))), "out")
    })
}

/// The constant polynomial 1 (trivial Albanese).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wb_weil_trivial(q: u64, out: *mut *mut WbWeilPolynomial) -> WbStatus {
    guard(|| {
        let w = WeilPolynomial::trivial(PrimeFieldSize::new(q)?);
        write_out(out, Box::into_raw(Box::new(WbWeilPolynomial(w))), "out")
    })
}

/// Dimension `g` (half the degree); 0 for a null handle.
///
/// # Safety
/// `w` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn wb_weil_dimension(w: *const WbWeilPolynomial) -> usize {
    w.as_ref().map_or(0, |w| w.0.g())
}

/// `f(1)`.
///
/// # Safety
/// `w` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wb_weil_point_count(w: *const WbWeilPolynomial, out: *mut i64) -> WbStatus {
    guard(|| {
        let w = handle(w, "w")?;
        write_out(out, to_i64(&w.0.point_count(), "point count")?, "out")
    })
}

/// Coefficients as a JSON array string, constant term first.
///
/// # Safety
/// `w` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wb_weil_coefficients_json(w: *const WbWeilPolynomial, out: *mut *mut c_char) -> WbStatus {
    guard(|| {
        let w = handle(w, "w")?;
        let text = serde_json_array(w.0.poly());
        write_out(out, owned_string(text), "out")
    })
}

fn serde_json_array(p: &IntegerPolynomial) -> String {
    let items: Vec<String> = p.coeffs().iter().map(|c| cli::json::int(c).to_string()).collect();
    format!("[{}]", items.join(","))
}

/// # Safety
/// `w` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn wb_weil_free(w: *mut WbWeilPolynomial) {
    if !w.is_null() {
        drop(Box::from_raw(w));
    }
}

/// Analytic and algebraic rank; fails with `RANK_MISMATCH` if they differ.
///
/// # Safety
/// `fa`, `fb` must be live handles; outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn wb_rank(
    fa: *const WbWeilPolynomial,
    fb: *const WbWeilPolynomial,
    out_analytic: *mut usize,
    out_algebraic: *mut usize,
) -> WbStatus {
    guard(|| {
        let cert = rank_consistency_check(&handle(fa, "fa")?.0, &handle(fb, "fb")?.0)?;
        write_out(out_analytic, cert.analytic, "out_analytic")?;
        write_out(out_algebraic, cert.algebraic, "out_algebraic")
    })
}

/// Assembles the BSD report with the default prime list.
///
/// For `WB_REGULATOR_MODE_GRAM`, `gram` holds `gram_size * gram_size`
/// entries in row-major order; it is ignored otherwise.
///
/// # Safety
/// Handles must be live; `gram` must be readable as described; `out` must
/// be writable.
#[no_mangle]
pub unsafe extern "C" fn wb_report_new(
    fa: *const WbWeilPolynomial,
    fb: *const WbWeilPolynomial,
    mode: WbRegulatorMode,
    gram: *const i64,
    gram_size: usize,
    out: *mut *mut WbReport,
) -> WbStatus {
    guard(|| {
        let fa = &handle(fa, "fa")?.0;
        let fb = &handle(fb, "fb")?.0;
        let input = match mode {
            WbRegulatorMode::Absent => RegulatorInput::Absent,
            WbRegulatorMode::Endomorphism => RegulatorInput::Endomorphism { trace_of_frobenius: None },
            WbRegulatorMode::Gram => {
                let cells = gram_size
                    .checked_mul(gram_size)
                    .ok_or_else(|| Failure(WbStatus::Overflow, "gram_size is too large".into()))?;
                let flat = slice(gram, cells, "gram")?;
                let rows = if gram_size == 0 {
                    Vec::new()
                } else {
                    flat.chunks(gram_size)
                        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                        .collect()
                };
                RegulatorInput::Gram(GramMatrix::new(rows)?)
            }
        };
        let report = bsd_report(fa, fb, &input, &ReportOptions::default())?;
        write_out(out, Box::into_raw(Box::new(WbReport(report))), "out")
    })
}

/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wb_report_rank(r: *const WbReport, out: *mut usize) -> WbStatus {
    guard(|| write_out(out, handle(r, "report")?.0.rank, "out"))
}

/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wb_report_sha(r: *const WbReport, out: *mut i64) -> WbStatus {
    guard(|| write_out(out, to_i64(&handle(r, "report")?.0.sha, "sha")?, "out"))
}

/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wb_report_regulator(r: *const WbReport, out: *mut i64) -> WbStatus {
    guard(|| write_out(out, to_i64(&handle(r, "report")?.0.regulator, "regulator")?, "out"))
}

/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wb_report_torsion(r: *const WbReport, out: *mut i64) -> WbStatus {
    guard(|| write_out(out, to_i64(&handle(r, "report")?.0.torsion, "torsion")?, "out"))
}

/// Leading coefficient `c` as `"num/den"` (or `"num"` when integral).
///
/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wb_report_leading_coefficient(r: *const WbReport, out: *mut *mut c_char) -> WbStatus {
    guard(|| write_out(out, owned_string(handle(r, "report")?.0.c.to_string()), "out"))
}

/// Canonical report JSON, identical to the CLI's `bsd` output.
///
/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wb_report_json(r: *const WbReport, out: *mut *mut c_char) -> WbStatus {
    guard(|| {
        let doc = cli::report_json(&handle(r, "report")?.0);
        write_out(out, owned_string(cli::json::render(&doc)), "out")
    })
}

/// # Safety
/// `r` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn wb_report_free(r: *mut WbReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Runs one CLI job (`command` as on the command line, `job_json` as in a
/// job file) and stores the output document in `*out_json`. Returns the CLI
/// exit code (0, 2 or 3), or 1 for bad arguments.
///
/// # Safety
/// `command` and `job_json` must be NUL-terminated strings; `out_json` must
/// be writable.
#[no_mangle]
pub unsafe extern "C" fn wb_run_job(
    command: *const c_char,
    job_json: *const c_char,
    out_json: *mut *mut c_char,
) -> i32 {
    clear_last_error();
    let result = catch_unwind(AssertUnwindSafe(|| {
        if command.is_null() || job_json.is_null() || out_json.is_null() {
            set_last_error("null argument");
            return cli::EXIT_USAGE;
        }
        let (Ok(name), Ok(text)) = (CStr::from_ptr(command).to_str(), CStr::from_ptr(job_json).to_str()) else {
            set_last_error("arguments are not valid UTF-8");
            return cli::EXIT_USAGE;
        };
        let Some(command) = Command::from_name(name) else {
            set_last_error(&format!("unknown command {name:?}"));
            return cli::EXIT_USAGE;
        };
        let outcome = cli::run_job_text(command, text, &Config::default());
        if let Some(err) = &outcome.error {
            set_last_error(&err.to_string());
        }
        out_json.write(owned_string(cli::json::render(&outcome.document)));
        outcome.exit_code
    }));
    result.unwrap_or_else(|_| {
        set_last_error("panic inside weilbsd");
        cli::EXIT_INCONSISTENT
    })
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn wb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
