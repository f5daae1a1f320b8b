//! C ABI over `axial-core`.
//!
//! Conventions:
//!
//! * Objects cross the boundary as opaque handles (`AxialAlgebra`,
//!   `AxialProfile`, `AxialReport`) created by this library and released
//!   with the matching `*_free` function.
//! * Fallible calls return an [`AxialStatus`] and write their result through
//!   an out pointer, which is left untouched on failure. The message for the
//!   last failure on the calling thread is available from
//!   [`axial_last_error_message`].
//! * Rationals are strings such as `"-3/4"`. Elements are JSON arrays of
//!   rationals (strings or integers), one per basis vector.
//! * Strings returned through `char **` are owned by the caller and released
//!   with [`axial_string_free`].
//! * No panic crosses the boundary; one is reported as `AXIAL_STATUS_PANIC`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use axial_core::verify::verify_algebra;
use axial_core::{
    classify_axis, dim2_algebra, format_rational, matsuo_algebra, parse_rational,
    subalgebra_closure, AlgebraTable, AxisProfile, Element, Error, FischerSpace,
    VerificationReport,
};
use serde_json::Value;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxialStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// Well-formed input the operation cannot accept.
    InvalidArgument = 2,
    /// Malformed JSON, rational literal or UTF-8.
    ParseError = 3,
    DimensionMismatch = 4,
    NotIdempotent = 5,
    NotAnAxis = 6,
    /// The requested value does not exist, e.g. an absent eigenvalue.
    NotFound = 7,
    /// An internal invariant failed; the library state is still usable.
    Panic = 99,
}

/// A finite-dimensional algebra given by rational structure constants.
pub struct AxialAlgebra {
    table: AlgebraTable,
}

/// Classification of one idempotent.
pub struct AxialProfile {
    profile: AxisProfile,
}

/// Entries of a verification run.
pub struct AxialReport {
    report: VerificationReport,
}

struct Failure {
    status: AxialStatus,
    message: String,
}

impl Failure {
    fn new(status: AxialStatus, message: impl Into<String>) -> Self {
        Failure {
            status,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::DimensionMismatch { .. } => AxialStatus::DimensionMismatch,
            Error::ParseRational(_) | Error::Json(_) => AxialStatus::ParseError,
            Error::NotIdempotent => AxialStatus::NotIdempotent,
            Error::NotAxis(_) => AxialStatus::NotAnAxis,
            _ => AxialStatus::InvalidArgument,
        };
        Failure::new(status, e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::new(AxialStatus::ParseError, format!("malformed JSON: {e}"))
    }
}

type Outcome = Result<(), Failure>;

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let text = CString::new(message.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(text));
}

fn guard(f: impl FnOnce() -> Outcome) -> AxialStatus {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => AxialStatus::Ok,
        Ok(Err(failure)) => {
            set_last_error(failure.message);
            failure.status
        }
        Err(payload) => {
            let detail = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_last_error(format!("internal error: {detail}"));
            AxialStatus::Panic
        }
    }
}

unsafe fn input<'a>(p: *const c_char, name: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::new(
            AxialStatus::NullPointer,
            format!("{name} is null"),
        ));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure::new(AxialStatus::ParseError, format!("{name} is not UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, name: &str) -> Result<&'a T, Failure> {
    p.as_ref()
        .ok_or_else(|| Failure::new(AxialStatus::NullPointer, format!("{name} is null")))
}

fn check_out<T>(out: *mut T) -> Outcome {
    if out.is_null() {
        Err(Failure::new(
            AxialStatus::NullPointer,
            "output pointer is null",
        ))
    } else {
        Ok(())
    }
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s)
        .expect("library strings contain no nul bytes")
        .into_raw()
}

fn parse_coefficient(v: &Value) -> Result<axial_core::Rational, Failure> {
    match v {
        Value::String(s) => Ok(parse_rational(s)?),
        Value::Number(n) if n.is_i64() => Ok(axial_core::Rational::from_integer(
            n.as_i64().expect("checked").into(),
        )),
        other => Err(Failure::new(
            AxialStatus::ParseError,
            format!("expected a rational string or integer, found {other}"),
        )),
    }
}

fn parse_element(v: &Value) -> Result<Element, Failure> {
    let items = v
        .as_array()
        .ok_or_else(|| Failure::new(AxialStatus::ParseError, "an element must be a JSON array"))?;
    Ok(Element(
        items
            .iter()
            .map(parse_coefficient)
            .collect::<Result<_, _>>()?,
    ))
}

fn parse_elements(text: &str) -> Result<Vec<Element>, Failure> {
    let v: Value = serde_json::from_str(text)?;
    let items = v.as_array().ok_or_else(|| {
        Failure::new(AxialStatus::ParseError, "expected a JSON array of elements")
    })?;
    items.iter().map(parse_element).collect()
}

fn element_for(table: &AlgebraTable, text: &str) -> Result<Element, Failure> {
    let v: Value = serde_json::from_str(text)?;
    let e = parse_element(&v)?;
    Ok(table.element(e.0)?)
}

/// Library version, a static string.
#[no_mangle]
pub extern "C" fn axial_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failed call on this thread, or null when the last
/// status-returning call succeeded. Valid until the next status-returning
/// call on the same thread.
#[no_mangle]
pub extern "C" fn axial_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn axial_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses an algebra from its JSON file format.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn axial_algebra_from_json(
    json: *const c_char,
    out: *mut *mut AxialAlgebra,
) -> AxialStatus {
    guard(|| {
        check_out(out)?;
        let table = AlgebraTable::from_json_str(input(json, "json")?)?;
        *out = Box::into_raw(Box::new(AxialAlgebra { table }));
        Ok(())
    })
}

/// The two-dimensional algebra with axes of type `(lambda, 1 - lambda)`.
///
/// # Safety
/// `lambda` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn axial_algebra_dim2(
    lambda: *const c_char,
    out: *mut *mut AxialAlgebra,
) -> AxialStatus {
    guard(|| {
        check_out(out)?;
        let lambda = parse_rational(input(lambda, "lambda")?)?;
        let table = dim2_algebra(&lambda)?;
        *out = Box::into_raw(Box::new(AxialAlgebra { table }));
        Ok(())
    })
}

/// The Matsuo algebra of a Fischer space given as JSON
/// (`{"points": [...], "lines": [[i, j, k], ...]}`).
///
/// # Safety
/// `space_json` and `eta` must be nul-terminated strings; `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn axial_algebra_matsuo(
    space_json: *const c_char,
    eta: *const c_char,
    out: *mut *mut AxialAlgebra,
) -> AxialStatus {
    guard(|| {
        check_out(out)?;
        let space = FischerSpace::from_json_str(input(space_json, "space_json")?)?;
        let eta = parse_rational(input(eta, "eta")?)?;
        let table = matsuo_algebra(&space, &eta)?;
        *out = Box::into_raw(Box::new(AxialAlgebra { table }));
        Ok(())
    })
}

/// JSON for a built-in Fischer space: `"line"` or `"s4"`.
///
/// # Safety
/// `name` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn axial_fischer_space_builtin(
    name: *const c_char,
    out: *mut *mut c_char,
) -> AxialStatus {
    guard(|| {
        check_out(out)?;
        let space = match input(name, "name")? {
            "line" => FischerSpace::single_line(),
            "s4" => FischerSpace::symmetric_group_s4(),
            other => {
                return Err(Failure::new(
                    AxialStatus::NotFound,
                    format!("no built-in Fischer space {other:?}"),
                ))
            }
        };
        *out = into_c_string(space.to_json_string());
        Ok(())
    })
}

/// # Safety
/// `algebra` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn axial_algebra_free(algebra: *mut AxialAlgebra) {
    if !algebra.is_null() {
        drop(Box::from_raw(algebra));
    }
}

/// Dimension of the algebra, 0 for a null handle.
///
/// # Safety
/// `algebra` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn axial_algebra_dim(algebra: *const AxialAlgebra) -> usize {
    algebra.as_ref().map_or(0, |a| a.table.dim())
}

/// # Safety
/// `algebra` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn axial_algebra_to_json(
    algebra: *const AxialAlgebra,
    out: *mut *mut c_char,
) -> AxialStatus {
    guard(|| {
        check_out(out)?;
        let a = handle(algebra, "algebra")?;
        *out = into_c_string(a.table.to_json_string());
        Ok(())
    })
}

/// Product `u * v`, written as a JSON array of rational strings.
///
/// # Safety
/// `algebra` must be a live handle, `u` and `v` nul-terminated strings and
/// `out` writable.
#[no_mangle]
pub unsafe extern "C" fn axial_algebra_multiply(
    algebra: *const AxialAlgebra,
    u: *const c_char,
    v: *const c_char,
    out: *mut *mut c_char,
) -> AxialStatus {
    guard(|| {
        check_out(out)?;
        let t = &handle(algebra, "algebra")?.table;
        let u = element_for(t, input(u, "u")?)?;
        let v = element_for(t, input(v, "v")?)?;
        let p = t.multiply(&u, &v)?;
        *out = into_c_string(serde_json::to_string(&p.to_strings())?);
        Ok(())
    })
}

/// Dimension of the subalgebra generated by a JSON array of elements.
///
/// # Safety
/// `algebra` must be a live handle, `generators` a nul-terminated string and
/// `out` writable.
#[no_mangle]
pub unsafe extern "C" fn axial_closure_dim(
    algebra: *const AxialAlgebra,
    generators: *const c_char,
    out: *mut usize,
) -> AxialStatus {
    guard(|| {
        check_out(out)?;
        let t = &handle(algebra, "algebra")?.table;
        let gens = parse_elements(input(generators, "generators")?)?;
        *out = subalgebra_closure(t, &gens)?.dim();
        Ok(())
    })
}

/// Classifies an idempotent. Fails with `AXIAL_STATUS_NOT_IDEMPOTENT` when
/// the element is not one; any idempotent, axis or not, yields a profile.
///
/// # Safety
/// `algebra` must be a live handle, `axis` a nul-terminated string and `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn axial_classify(
    algebra: *const AxialAlgebra,
    axis: *const c_char,
    out: *mut *mut AxialProfile,
) -> AxialStatus {
    guard(|| {
        check_out(out)?;
        let t = &handle(algebra, "algebra")?.table;
        let a = element_for(t, input(axis, "axis")?)?;
        let profile = classify_axis(t, &a)?;
        *out = Box::into_raw(Box::new(AxialProfile { profile }));
        Ok(())
    })
}

/// # Safety
/// `profile` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn axial_profile_free(profile: *mut AxialProfile) {
    if !profile.is_null() {
        drop(Box::from_raw(profile));
    }
}

/// False for a null handle.
///
/// # Safety
/// `profile` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn axial_profile_is_primitive_axis(profile: *const AxialProfile) -> bool {
    profile
        .as_ref()
        .is_some_and(|p| p.profile.is_primitive_axis())
}

/// False for a null handle.
///
/// # Safety
/// `profile` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn axial_profile_is_jordan_type(profile: *const AxialProfile) -> bool {
    profile.as_ref().is_some_and(|p| p.profile.jordan_type)
}

unsafe fn eigenvalue(
    profile: *const AxialProfile,
    out: *mut *mut c_char,
    pick: fn(&AxisProfile) -> Option<&axial_core::Rational>,
    name: &str,
) -> AxialStatus {
    guard(|| {
        check_out(out)?;
        let p = &handle(profile, "profile")?.profile;
        let value = pick(p)
            .ok_or_else(|| Failure::new(AxialStatus::NotFound, format!("{name} is absent")))?;
        *out = into_c_string(format_rational(value));
        Ok(())
    })
}

/// Left eigenvalue `lambda`; `AXIAL_STATUS_NOT_FOUND` when absent.
///
/// # Safety
/// `profile` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn axial_profile_lambda(
    profile: *const AxialProfile,
    out: *mut *mut c_char,
) -> AxialStatus {
    eigenvalue(profile, out, |p| p.lambda.as_ref(), "lambda")
}

/// Right eigenvalue `delta`; `AXIAL_STATUS_NOT_FOUND` when absent.
///
/// # Safety
/// `profile` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn axial_profile_delta(
    profile: *const AxialProfile,
    out: *mut *mut c_char,
) -> AxialStatus {
    eigenvalue(profile, out, |p| p.delta.as_ref(), "delta")
}

/// Full classification as JSON, the same object `axial classify --json`
/// prints.
///
/// # Safety
/// `profile` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn axial_profile_to_json(
    profile: *const AxialProfile,
    out: *mut *mut c_char,
) -> AxialStatus {
    guard(|| {
        check_out(out)?;
        let p = &handle(profile, "profile")?.profile;
        *out = into_c_string(serde_json::to_string_pretty(&p.summary())?);
        Ok(())
    })
}

/// Runs every check for the given axes (a JSON array of elements), or for
/// all basis vectors when `axes` is null.
///
/// # Safety
/// `algebra` must be a live handle, `axes` null or a nul-terminated string
/// and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn axial_verify(
    algebra: *const AxialAlgebra,
    axes: *const c_char,
    out: *mut *mut AxialReport,
) -> AxialStatus {
    guard(|| {
        check_out(out)?;
        let t = &handle(algebra, "algebra")?.table;
        let axes = if axes.is_null() {
            (0..t.dim()).map(|i| t.basis_element(i)).collect()
        } else {
            parse_elements(input(axes, "axes")?)?
        };
        let report = verify_algebra(t, &axes)?;
        *out = Box::into_raw(Box::new(AxialReport { report }));
        Ok(())
    })
}

/// # Safety
/// `report` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn axial_report_free(report: *mut AxialReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Number of entries, 0 for a null handle.
///
/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn axial_report_len(report: *const AxialReport) -> usize {
    report.as_ref().map_or(0, |r| r.report.len())
}

/// Number of failed entries, 0 for a null handle.
///
/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn axial_report_failure_count(report: *const AxialReport) -> usize {
    report.as_ref().map_or(0, |r| r.report.failures().count())
}

/// True when every entry passed; false for a null handle.
///
/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn axial_report_all_passed(report: *const AxialReport) -> bool {
    report.as_ref().is_some_and(|r| r.report.all_passed())
}

/// Entries as a JSON array of `{identity_id, passed, residual, ...}`.
///
/// # Safety
/// `report` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn axial_report_to_json(
    report: *const AxialReport,
    out: *mut *mut c_char,
) -> AxialStatus {
    guard(|| {
        check_out(out)?;
        let r = &handle(report, "report")?.report;
        *out = into_c_string(serde_json::to_string_pretty(&r.to_json_value())?);
        Ok(())
    })
}
