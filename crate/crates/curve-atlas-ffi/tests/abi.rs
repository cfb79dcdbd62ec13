use curve_atlas_ffi::*;
use std::ffi::CStr;
use std::ptr;

fn classify(alpha: i64, r: i64, g: i64) -> *mut CaVerdict {
    let mut v = ptr::null_mut();
    assert_eq!(unsafe { ca_classify(alpha, r, g, &mut v) }, CaError::Ok);
    assert!(!v.is_null());
    v
}

fn status(v: *const CaVerdict) -> CaStatus {
    let mut s = CaStatus::Unknown;
    assert_eq!(unsafe { ca_verdict_status(v, &mut s) }, CaError::Ok);
    s
}

#[test]
fn classify_round_trip() {
    let v = classify(5, 8, 17);
    assert_eq!(status(v), CaStatus::NonEmpty);
    let mut d = 0;
    assert_eq!(unsafe { ca_verdict_degree(v, &mut d) }, CaError::Ok);
    assert_eq!(d, 20);
    assert_eq!(unsafe { ca_verdict_recheck(v) }, CaError::Ok);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { ca_verdict_json(v, &mut s) }, CaError::Ok);
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { ca_string_free(s) };
    let json: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(json["evidence"]["kind"], "ExtremalOnScroll");
    assert_eq!(json["irreducibility"]["status"], "Irreducible");
    unsafe { ca_verdict_free(v) };

    let v = classify(5, 12, 23);
    assert_eq!(status(v), CaStatus::Empty);
    assert_eq!(unsafe { ca_verdict_recheck(v) }, CaError::Ok);
    unsafe { ca_verdict_free(v) };
}

#[test]
fn open_cells_fail_recheck() {
    let mut found = false;
    for g in 0..=80 {
        let v = classify(7, 5, g);
        if status(v) == CaStatus::Unknown {
            assert_eq!(unsafe { ca_verdict_recheck(v) }, CaError::Validation);
            let msg = unsafe { CStr::from_ptr(ca_last_error()) }.to_str().unwrap();
            assert!(!msg.is_empty());
            found = true;
        }
        unsafe { ca_verdict_free(v) };
    }
    assert!(found);
}

#[test]
fn error_codes() {
    let mut v = ptr::null_mut();
    assert_eq!(unsafe { ca_classify(5, 2, 10, &mut v) }, CaError::Domain);
    assert!(v.is_null());
    let msg = unsafe { CStr::from_ptr(ca_last_error()) }.to_str().unwrap();
    assert!(msg.contains('2'), "{msg}");
    assert_eq!(unsafe { ca_classify(5, 5, 10, ptr::null_mut()) }, CaError::NullPointer);
    let mut s = CaStatus::Empty;
    assert_eq!(unsafe { ca_verdict_status(ptr::null(), &mut s) }, CaError::NullPointer);
    assert_eq!(unsafe { ca_verdict_recheck(ptr::null()) }, CaError::NullPointer);
    unsafe {
        ca_verdict_free(ptr::null_mut());
        ca_string_free(ptr::null_mut());
    }
}

#[test]
fn bounds_and_version() {
    let mut p = 0;
    assert_eq!(unsafe { ca_castelnuovo_bound(19, 8, &mut p) }, CaError::Ok);
    assert_eq!(p, 15);
    assert_eq!(unsafe { ca_castelnuovo_bound(3, 8, &mut p) }, CaError::Domain);
    let v = unsafe { CStr::from_ptr(ca_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/curve_atlas.h")).unwrap();
    for name in [
        "ca_classify",
        "ca_verdict_free",
        "ca_verdict_status",
        "ca_verdict_json",
        "ca_string_free",
        "ca_last_error",
        "typedef struct CaVerdict CaVerdict",
        "CA_ERROR_NULL_POINTER",
    ] {
        assert!(header.contains(name), "{name}");
    }
}

#[test]
fn header_compiles_as_c() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/curve_atlas.h");
    let Ok(out) = std::process::Command::new("cc").args(["-std=c99", "-fsyntax-only", "-x", "c", header]).output() else {
        eprintln!("no C compiler; skipped");
        return;
    };
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}
