//! C ABI over the curve-atlas classifier.
//!
//! Verdicts are returned behind an opaque `CaVerdict` handle, released with
//! `ca_verdict_free`. Strings returned to C are released with `ca_string_free`.
//! Every fallible call returns a `CaError`; on failure `ca_last_error` gives
//! the message for the calling thread.

use curve_atlas::ampleness::default_table;
use curve_atlas::atlas::irreducibility_for;
use curve_atlas::bounds;
use curve_atlas::classifier::{classify_general, validate_obstruction, validate_witness, Evidence, Status, Verdict};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaError {
    Ok = 0,
    NullPointer = 1,
    Domain = 2,
    Validation = 3,
    Internal = 4,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaStatus {
    Empty = 0,
    NonEmpty = 1,
    Unknown = 2,
}

/// Opaque classification result.
pub struct CaVerdict {
    verdict: Verdict,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn fail(code: CaError, msg: impl Into<String>) -> CaError {
    let text = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
    code
}

fn guarded(f: impl FnOnce() -> CaError) -> CaError {
    std::panic::catch_unwind(std::panic::AssertUnwindSafe(f))
        .unwrap_or_else(|_| fail(CaError::Internal, "panic inside curve-atlas"))
}

/// Message for the last failed call on this thread; empty if none.
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ca_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Classify the triple with `g - d + r = alpha`.
///
/// # Safety
/// `out` must be null or point to writable storage for one pointer. On
/// success `*out` owns a handle that must be passed to `ca_verdict_free`.
#[no_mangle]
pub unsafe extern "C" fn ca_classify(alpha: i64, r: i64, g: i64, out: *mut *mut CaVerdict) -> CaError {
    if out.is_null() {
        return fail(CaError::NullPointer, "out is null");
    }
    guarded(|| match classify_general(alpha, r, g) {
        Ok(verdict) => {
            // SAFETY: `out` is non-null and writable per the contract.
            unsafe { *out = Box::into_raw(Box::new(CaVerdict { verdict })) };
            CaError::Ok
        }
        Err(e) => fail(CaError::Domain, e.to_string()),
    })
}

/// # Safety
/// `v` must be null or a handle from `ca_classify` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ca_verdict_free(v: *mut CaVerdict) {
    if !v.is_null() {
        // SAFETY: the handle came from `Box::into_raw` in `ca_classify`.
        drop(unsafe { Box::from_raw(v) });
    }
}

/// # Safety
/// `v` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ca_verdict_status(v: *const CaVerdict, out: *mut CaStatus) -> CaError {
    // SAFETY: caller guarantees both pointers, when non-null, are valid.
    let (Some(v), false) = (unsafe { v.as_ref() }, out.is_null()) else {
        return fail(CaError::NullPointer, "null argument");
    };
    let s = match v.verdict.status {
        Status::Empty => CaStatus::Empty,
        Status::NonEmpty => CaStatus::NonEmpty,
        Status::Unknown => CaStatus::Unknown,
    };
    // SAFETY: checked non-null above.
    unsafe { *out = s };
    CaError::Ok
}

/// Degree of the classified triple.
///
/// # Safety
/// `v` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ca_verdict_degree(v: *const CaVerdict, out: *mut i64) -> CaError {
    // SAFETY: caller guarantees both pointers, when non-null, are valid.
    let (Some(v), false) = (unsafe { v.as_ref() }, out.is_null()) else {
        return fail(CaError::NullPointer, "null argument");
    };
    // SAFETY: checked non-null above.
    unsafe { *out = v.verdict.triple.d };
    CaError::Ok
}

/// Re-check the attached evidence independently of the verdict table.
///
/// # Safety
/// `v` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ca_verdict_recheck(v: *const CaVerdict) -> CaError {
    // SAFETY: caller guarantees the handle is live when non-null.
    let Some(v) = (unsafe { v.as_ref() }) else {
        return fail(CaError::NullPointer, "null handle");
    };
    guarded(|| {
        let v = &v.verdict;
        let r = match &v.evidence {
            Evidence::Witness(w) => validate_witness(&v.triple, w, default_table()),
            Evidence::Obstruction(o) => validate_obstruction(&v.triple, o),
            Evidence::Open => Err("no evidence to check".into()),
        };
        match r {
            Ok(()) => CaError::Ok,
            Err(e) => fail(CaError::Validation, e),
        }
    })
}

/// The verdict, with irreducibility, as a JSON object.
///
/// # Safety
/// `v` must be a live handle; `out` must be writable. On success `*out`
/// must be released with `ca_string_free`.
#[no_mangle]
pub unsafe extern "C" fn ca_verdict_json(v: *const CaVerdict, out: *mut *mut c_char) -> CaError {
    // SAFETY: caller guarantees both pointers, when non-null, are valid.
    let (Some(v), false) = (unsafe { v.as_ref() }, out.is_null()) else {
        return fail(CaError::NullPointer, "null argument");
    };
    guarded(|| {
        let mut json = v.verdict.to_json();
        match irreducibility_for(&v.verdict) {
            Ok(i) => json["irreducibility"] = serde_json::json!({ "status": i.status.label(), "citation": i.citation }),
            Err(e) => return fail(CaError::Domain, e.to_string()),
        }
        match CString::new(json.to_string()) {
            Ok(s) => {
                // SAFETY: checked non-null above.
                unsafe { *out = s.into_raw() };
                CaError::Ok
            }
            Err(e) => fail(CaError::Internal, e.to_string()),
        }
    })
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ca_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: the string came from `CString::into_raw`.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Castelnuovo's bound for degree `d` in `P^r`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ca_castelnuovo_bound(d: i64, r: i64, out: *mut i64) -> CaError {
    if out.is_null() {
        return fail(CaError::NullPointer, "out is null");
    }
    match bounds::pi(d, r) {
        Ok(p) => {
            // SAFETY: checked non-null above.
            unsafe { *out = p };
            CaError::Ok
        }
        Err(e) => fail(CaError::Domain, e.to_string()),
    }
}

/// Version string of the library; static, never freed.
#[no_mangle]
pub extern "C" fn ca_version() -> *const c_char {
    static V: &CStr = match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
        Ok(c) => c,
        Err(_) => panic!("version has no interior nul"),
    };
    V.as_ptr()
}
