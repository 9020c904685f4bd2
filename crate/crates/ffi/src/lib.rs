//! C ABI for `treecert`.
//!
//! Every fallible function returns a [`TcStatus`]; on failure the message is
//! available from [`tc_last_error`] on the same thread. Objects are opaque
//! handles released with their matching `*_free` function, and strings
//! returned by the library are released with [`tc_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use treecert::algebra::{parse_rational, PrimeField, RationalFunction};
use treecert::bass_serre;
use treecert::matrix2::parse_matrix;
use treecert::raag::{self, SimpleGraph};
use treecert::report::Report;
use treecert::surface;
use treecert::valuation_bt::{self, Classification, Mat};
use treecert::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Arithmetic = 4,
    InvalidArgument = 5,
    Io = 6,
    Panic = 7,
}

impl From<&Error> for TcStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Parse(_) | Error::BadLetter(_) | Error::LoopEdge { .. } | Error::DuplicateEdge { .. } => {
                TcStatus::Parse
            }
            Error::ZeroDenominator
            | Error::DivisionByZero
            | Error::NotAUnit
            | Error::SingularMatrix
            | Error::NotUnimodular => TcStatus::Arithmetic,
            Error::Io(_) => TcStatus::Io,
            _ => TcStatus::InvalidArgument,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = CString::new(text).ok());
}

fn clear_last_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

/// Message of the most recent failure on this thread, or null. The pointer
/// stays valid until the next library call on this thread.
#[no_mangle]
pub extern "C" fn tc_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

#[no_mangle]
pub extern "C" fn tc_clear_last_error() {
    clear_last_error();
}

/// Runs `f`, recording any error or panic as the last error.
fn guard(f: impl FnOnce() -> Result<(), (TcStatus, String)>) -> TcStatus {
    clear_last_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => TcStatus::Ok,
        Ok(Err((status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            TcStatus::Panic
        }
    }
}

fn lib<T>(r: treecert::Result<T>) -> Result<T, (TcStatus, String)> {
    r.map_err(|e| (TcStatus::from(&e), e.to_string()))
}

unsafe fn arg_str<'a>(s: *const c_char) -> Result<&'a str, (TcStatus, String)> {
    if s.is_null() {
        return Err((TcStatus::NullPointer, "null string argument".into()));
    }
    CStr::from_ptr(s).to_str().map_err(|_| (TcStatus::InvalidUtf8, "argument is not valid UTF-8".into()))
}

unsafe fn handle<'a, T>(h: *const T) -> Result<&'a T, (TcStatus, String)> {
    h.as_ref().ok_or((TcStatus::NullPointer, "null handle".into()))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), (TcStatus, String)> {
    if out.is_null() {
        return Err((TcStatus::NullPointer, "null output pointer".into()));
    }
    out.write(value);
    Ok(())
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("interior nul removed").into_raw()
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a pointer obtained from this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// An element of 𝔽_p(x).
pub struct TcRational(RationalFunction);

/// A 2×2 matrix over 𝔽_p(x).
pub struct TcMatrix(Mat);

/// A check report.
pub struct TcReport(Report);

/// Parses `text` as an element of 𝔽_p(x).
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tc_rational_parse(p: u64, text: *const c_char, out: *mut *mut TcRational) -> TcStatus {
    guard(|| {
        let field = lib(PrimeField::new(p))?;
        let value = lib(parse_rational(field, arg_str(text)?))?;
        write_out(out, Box::into_raw(Box::new(TcRational(value))))
    })
}

/// Canonical text form; free with [`tc_string_free`]. Null on a null handle.
///
/// # Safety
/// `r` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn tc_rational_to_string(r: *const TcRational) -> *mut c_char {
    match r.as_ref() {
        Some(r) => to_c_string(r.0.to_string()),
        None => ptr::null_mut(),
    }
}

/// Valuation at infinity (minus the degree). `*is_infinite` is set to 1 for
/// zero, in which case `*out` is left untouched.
///
/// # Safety
/// `r` must be a live handle; the output pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn tc_rational_valuation(r: *const TcRational, out: *mut i64, is_infinite: *mut c_int) -> TcStatus {
    guard(|| {
        let r = handle(r)?;
        match valuation_bt::val(&r.0).finite() {
            Some(v) => {
                write_out(out, v)?;
                write_out(is_infinite, 0)
            }
            None => write_out(is_infinite, 1),
        }
    })
}

/// # Safety
/// `r` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tc_rational_free(r: *mut TcRational) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Parses `"a;b;c;d"` (row-major) over 𝔽_p(x).
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tc_matrix_parse(p: u64, text: *const c_char, out: *mut *mut TcMatrix) -> TcStatus {
    guard(|| {
        let field = lib(PrimeField::new(p))?;
        let m = lib(parse_matrix(field, arg_str(text)?))?;
        write_out(out, Box::into_raw(Box::new(TcMatrix(m))))
    })
}

/// Classifies an SL₂ matrix on the Bruhat–Tits tree. `*translation_length`
/// is 0 for elliptic elements.
///
/// # Safety
/// `m` must be a live handle; `translation_length` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tc_matrix_classify(m: *const TcMatrix, translation_length: *mut u64) -> TcStatus {
    guard(|| {
        let m = handle(m)?;
        let len = match lib(valuation_bt::classify(&m.0))? {
            Classification::Elliptic => 0,
            Classification::Hyperbolic { translation_length } => translation_length,
        };
        write_out(translation_length, len)
    })
}

/// Minimum of `d(v, m·v)` over the ball of the given radius around the base
/// vertex.
///
/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tc_matrix_min_displacement(m: *const TcMatrix, radius: u32, out: *mut u64) -> TcStatus {
    guard(|| {
        let m = handle(m)?;
        let base = valuation_bt::LatticeVertex::base(m.0.a.field());
        write_out(out, lib(valuation_bt::min_displacement_on_ball(&m.0, &base, radius))?)
    })
}

/// # Safety
/// `m` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tc_matrix_free(m: *mut TcMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

fn emit_report(out: *mut *mut TcReport, r: Report) -> Result<(), (TcStatus, String)> {
    unsafe { write_out(out, Box::into_raw(Box::new(TcReport(r)))) }
}

/// Builds the standard surface-group representation over 𝔽_p(x, y) and runs
/// the family, discreteness and relation checks.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tc_surface_verify(p: u64, out: *mut *mut TcReport) -> TcStatus {
    guard(|| {
        let params = lib(surface::standard_params(p))?;
        let (a, b) = lib(surface::build_ab(&params))?;
        let q = surface::shalen_double(&a, &b);
        let mut r = Report::new(format!("surface verify --p {p}"));
        r.absorb("family", lib(surface::verify_family(&params))?);
        r.absorb("discreteness", surface::discreteness_certificate(&a, &b));
        r.absorb("relation", lib(surface::surface_relation_check(&q))?);
        emit_report(out, r)
    })
}

/// Tree-count bounds for the RAAG whose defining graph is given in the edge
/// list format (`vertices n`, then `u v` per line).
///
/// # Safety
/// `graph` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tc_raag_plan(
    graph: *const c_char,
    lower: *mut u64,
    upper: *mut u64,
    exact: *mut c_int,
) -> TcStatus {
    guard(|| {
        let g = lib(SimpleGraph::parse(arg_str(graph)?))?;
        let plan = lib(raag::tree_count_plan(&g))?;
        write_out(lower, plan.lower as u64)?;
        write_out(upper, plan.upper as u64)?;
        write_out(exact, c_int::from(plan.exact.is_some()))
    })
}

/// Coverage certificate for reduced words up to `maxlen`: `group` 0 is
/// ⟨s, x, y | [x, y], sxs⁻¹ = y⟩ on three trees, 1 the genus-2 surface
/// group on two.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tc_bass_serre_certify(group: c_int, maxlen: u32, out: *mut *mut TcReport) -> TcStatus {
    guard(|| {
        let r = match group {
            0 => lib(bass_serre::three_tree_certificate(maxlen as usize))?,
            1 => lib(bass_serre::two_tree_certificate(maxlen as usize))?,
            g => return Err((TcStatus::InvalidArgument, format!("unknown group {g}"))),
        };
        emit_report(out, r)
    })
}

/// Runs a `treecert` command line (`argv[0]` is the program name). Writes
/// the exit code and the rendered output.
///
/// # Safety
/// `argv` must point to `argc` nul-terminated strings; outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn tc_cli_run(
    argc: c_int,
    argv: *const *const c_char,
    exit_code: *mut c_int,
    output: *mut *mut c_char,
) -> TcStatus {
    guard(|| {
        if argv.is_null() || argc < 0 {
            return Err((TcStatus::NullPointer, "null argv".into()));
        }
        let args = (0..argc as usize).map(|i| arg_str(*argv.add(i)).map(str::to_owned)).collect::<Result<Vec<_>, _>>()?;
        let outcome = treecert::cli::run(args);
        write_out(exit_code, outcome.code)?;
        write_out(output, to_c_string(outcome.output))
    })
}

/// 1 if every check passed, 0 otherwise (including a null handle).
///
/// # Safety
/// `r` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn tc_report_passed(r: *const TcReport) -> c_int {
    r.as_ref().map_or(0, |r| c_int::from(r.0.passed()))
}

/// Looks up a named counter.
///
/// # Safety
/// `r` must be a live handle, `name` a nul-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tc_report_counter(r: *const TcReport, name: *const c_char, out: *mut i64) -> TcStatus {
    guard(|| {
        let r = handle(r)?;
        let name = arg_str(name)?;
        let v = r.0.get_counter(name).ok_or((TcStatus::InvalidArgument, format!("no counter {name:?}")))?;
        write_out(out, v)
    })
}

/// Plain-text rendering; free with [`tc_string_free`].
///
/// # Safety
/// `r` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn tc_report_text(r: *const TcReport) -> *mut c_char {
    r.as_ref().map_or(ptr::null_mut(), |r| to_c_string(r.0.to_text()))
}

/// JSON-lines rendering; free with [`tc_string_free`].
///
/// # Safety
/// `r` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn tc_report_json(r: *const TcReport) -> *mut c_char {
    r.as_ref().map_or(ptr::null_mut(), |r| to_c_string(r.0.to_json_lines()))
}

/// # Safety
/// `r` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tc_report_free(r: *mut TcReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}
