//! C ABI over `simplie`.
//!
//! Objects are opaque handles created from JSON documents and released with
//! the matching `_free` function. Every fallible call returns a
//! [`SimplieStatus`]; on failure [`simplie_last_error`] describes the problem
//! for the calling thread. Reports come back as NUL-terminated JSON strings
//! owned by the caller and released with [`simplie_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use simplie::cli::{self, Report};
use simplie::lie::DEFAULT_SEED;
use simplie::{FieldSpec, FiniteGroupoid, Graph, SelfSimilarAction};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SimplieStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed JSON or a document that fails validation.
    InvalidInput = 3,
    /// A theorem's preconditions are unmet; a report is still produced.
    Inapplicable = 4,
    /// Independent computations disagreed or the library panicked.
    Internal = 5,
}

pub struct SimplieGraph(Graph);
pub struct SimplieGroupoid(FiniteGroupoid);
pub struct SimplieAction(SelfSimilarAction);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

struct Failure(SimplieStatus, String);

fn guard(f: impl FnOnce() -> Result<SimplieStatus, Failure>) -> SimplieStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => s,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            SimplieStatus::Internal
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(SimplieStatus::NullPointer, "null string argument".into()));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Failure(SimplieStatus::InvalidUtf8, e.to_string()))
}

unsafe fn read_field(p: *const c_char) -> Result<FieldSpec, Failure> {
    if p.is_null() {
        return Ok(FieldSpec::Rationals);
    }
    read_str(p)?
        .parse()
        .map_err(|e: simplie::FieldError| Failure(SimplieStatus::InvalidInput, e.to_string()))
}

fn invalid(e: impl ToString) -> Failure {
    Failure(SimplieStatus::InvalidInput, e.to_string())
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref()
        .ok_or_else(|| Failure(SimplieStatus::NullPointer, "null handle".into()))
}

unsafe fn emit<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(SimplieStatus::NullPointer, "null output pointer".into()));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn emit_report(out: *mut *mut c_char, report: &Report) -> Result<SimplieStatus, Failure> {
    if out.is_null() {
        return Err(Failure(SimplieStatus::NullPointer, "null output pointer".into()));
    }
    let text = serde_json::to_string(report).map_err(|e| Failure(SimplieStatus::Internal, e.to_string()))?;
    *out = CString::new(text)
        .map_err(|e| Failure(SimplieStatus::Internal, e.to_string()))?
        .into_raw();
    let status = match report.exit_code {
        cli::EXIT_OK => SimplieStatus::Ok,
        cli::EXIT_INAPPLICABLE => SimplieStatus::Inapplicable,
        _ => SimplieStatus::Internal,
    };
    if let Some(e) = &report.error {
        set_error(e.clone());
    }
    Ok(status)
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn simplie_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn simplie_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be null or a string returned by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn simplie_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parse a graph document.
///
/// # Safety
/// `json` must be a valid C string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn simplie_graph_from_json(json: *const c_char, out: *mut *mut SimplieGraph) -> SimplieStatus {
    guard(|| {
        let doc = serde_json::from_str(read_str(json)?).map_err(invalid)?;
        let g = Graph::from_doc(&doc).map_err(invalid)?;
        emit(out, SimplieGraph(g))?;
        Ok(SimplieStatus::Ok)
    })
}

/// # Safety
/// `g` must be null or a handle from [`simplie_graph_from_json`], freed once.
#[no_mangle]
pub unsafe extern "C" fn simplie_graph_free(g: *mut SimplieGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn simplie_graph_vertex_count(g: *const SimplieGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.vertex_count())
}

/// Leavitt path algebra report as JSON. `field` is `"Q"` or `"Fp:<p>"`;
/// null means the rationals.
///
/// # Safety
/// `g` must be a live handle, `field` null or a valid C string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn simplie_graph_lpa_report(
    g: *const SimplieGraph,
    field: *const c_char,
    out: *mut *mut c_char,
) -> SimplieStatus {
    guard(|| {
        let g = handle(g)?;
        let field = read_field(field)?;
        emit_report(out, &cli::lpa_report(&g.0, field, None))
    })
}

/// Parse a finite groupoid document.
///
/// # Safety
/// `json` must be a valid C string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn simplie_groupoid_from_json(
    json: *const c_char,
    out: *mut *mut SimplieGroupoid,
) -> SimplieStatus {
    guard(|| {
        let doc = serde_json::from_str(read_str(json)?).map_err(invalid)?;
        let g = FiniteGroupoid::from_doc(&doc).map_err(invalid)?;
        emit(out, SimplieGroupoid(g))?;
        Ok(SimplieStatus::Ok)
    })
}

/// The pair groupoid on `n` units.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn simplie_groupoid_pair(n: usize, out: *mut *mut SimplieGroupoid) -> SimplieStatus {
    guard(|| {
        if n == 0 {
            return Err(invalid("pair groupoid needs at least one unit"));
        }
        emit(out, SimplieGroupoid(FiniteGroupoid::pair(n)))?;
        Ok(SimplieStatus::Ok)
    })
}

/// # Safety
/// `g` must be null or a groupoid handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn simplie_groupoid_free(g: *mut SimplieGroupoid) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Steinberg algebra report as JSON.
///
/// # Safety
/// As for [`simplie_graph_lpa_report`].
#[no_mangle]
pub unsafe extern "C" fn simplie_groupoid_report(
    g: *const SimplieGroupoid,
    field: *const c_char,
    out: *mut *mut c_char,
) -> SimplieStatus {
    guard(|| {
        let g = handle(g)?;
        let field = read_field(field)?;
        emit_report(out, &cli::groupoid_report(&g.0, field, None))
    })
}

/// Theorem-vs-oracle Lie simplicity check over `F_p`. Writes whether both
/// verdicts agree to `agree` and the row as JSON to `out` (if non-null).
/// A `seed` of 0 selects the default seed.
///
/// # Safety
/// `g` must be a live handle, `agree` writable, `out` null or writable.
#[no_mangle]
pub unsafe extern "C" fn simplie_groupoid_cross_check(
    g: *const SimplieGroupoid,
    p: u32,
    seed: u64,
    agree: *mut bool,
    out: *mut *mut c_char,
) -> SimplieStatus {
    guard(|| {
        let g = handle(g)?;
        if agree.is_null() {
            return Err(Failure(SimplieStatus::NullPointer, "null output pointer".into()));
        }
        let seed = if seed == 0 { DEFAULT_SEED } else { seed };
        let row = cli::oracle_row("input", &g.0, p, None, seed);
        *agree = row.agree;
        if !out.is_null() {
            let text = serde_json::to_string(&row).map_err(|e| Failure(SimplieStatus::Internal, e.to_string()))?;
            *out = CString::new(text)
                .map_err(|e| Failure(SimplieStatus::Internal, e.to_string()))?
                .into_raw();
        }
        match row.error {
            None => Ok(SimplieStatus::Ok),
            Some(e) if e.contains("precondition") => Err(Failure(SimplieStatus::Inapplicable, e)),
            Some(e) => Err(Failure(SimplieStatus::Internal, e)),
        }
    })
}

/// Parse a self-similar action document.
///
/// # Safety
/// `json` must be a valid C string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn simplie_action_from_json(json: *const c_char, out: *mut *mut SimplieAction) -> SimplieStatus {
    guard(|| {
        let doc = serde_json::from_str(read_str(json)?).map_err(invalid)?;
        let a = SelfSimilarAction::from_doc(&doc).map_err(invalid)?;
        emit(out, SimplieAction(a))?;
        Ok(SimplieStatus::Ok)
    })
}

/// # Safety
/// `a` must be null or an action handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn simplie_action_free(a: *mut SimplieAction) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// Exel-Pardo algebra report as JSON. `depth` bounds the strongly fixed
/// path search; 0 selects the automatic bound.
///
/// # Safety
/// As for [`simplie_graph_lpa_report`].
#[no_mangle]
pub unsafe extern "C" fn simplie_action_report(
    a: *const SimplieAction,
    field: *const c_char,
    depth: usize,
    out: *mut *mut c_char,
) -> SimplieStatus {
    guard(|| {
        let a = handle(a)?;
        let field = read_field(field)?;
        let depth = (depth > 0).then_some(depth);
        emit_report(out, &cli::ep_report(&a.0, field, depth, None))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_parsing() {
        unsafe {
            assert_eq!(read_field(ptr::null()).ok(), Some(FieldSpec::Rationals));
            let f = CString::new("Fp:7").unwrap();
            assert_eq!(read_field(f.as_ptr()).ok(), Some(FieldSpec::PrimeField(7)));
            let bad = CString::new("Fp:9").unwrap();
            assert!(matches!(
                read_field(bad.as_ptr()),
                Err(Failure(SimplieStatus::InvalidInput, _))
            ));
        }
    }

    #[test]
    fn panics_become_internal_errors() {
        let s = guard(|| panic!("boom"));
        assert_eq!(s, SimplieStatus::Internal);
        assert!(!simplie_last_error().is_null());
        assert_eq!(guard(|| Ok(SimplieStatus::Ok)), SimplieStatus::Ok);
        assert!(simplie_last_error().is_null());
    }

    #[test]
    fn errors_are_nul_safe() {
        set_error("a\0b");
        let msg = unsafe { CStr::from_ptr(simplie_last_error()) };
        assert_eq!(msg.to_str().unwrap(), "a b");
    }
}
