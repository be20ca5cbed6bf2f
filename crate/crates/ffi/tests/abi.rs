use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::ptr;

use serde_json::Value;
use simplie::fixtures;
use simplie::FiniteGroupoid;
use simplie_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut c_char) -> Value {
    assert!(!s.is_null());
    let v = serde_json::from_str(CStr::from_ptr(s).to_str().unwrap()).unwrap();
    simplie_string_free(s);
    v
}

fn last_error() -> Option<String> {
    let p = simplie_last_error();
    (!p.is_null()).then(|| unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned())
}

#[test]
fn graph_round_trip_and_report() {
    let doc = c(&serde_json::to_string(&fixtures::rose_infinite().to_doc()).unwrap());
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(simplie_graph_from_json(doc.as_ptr(), &mut g), SimplieStatus::Ok);
        assert_eq!(simplie_graph_vertex_count(g), 1);
        for field in ["Q", "Fp:2", "Fp:3", "Fp:5"] {
            let mut out = ptr::null_mut();
            let f = c(field);
            assert_eq!(simplie_graph_lpa_report(g, f.as_ptr(), &mut out), SimplieStatus::Ok);
            let v = take(out);
            assert_eq!(v["verdicts"]["lie"]["verdict"], "Simple");
            assert_eq!(v["field"], field);
        }
        let mut out = ptr::null_mut();
        assert_eq!(simplie_graph_lpa_report(g, ptr::null(), &mut out), SimplieStatus::Ok);
        assert_eq!(take(out)["field"], "Q");
        simplie_graph_free(g);
    }
}

#[test]
fn inapplicable_reports_still_returned() {
    let doc = c(&serde_json::to_string(&fixtures::rose(1).to_doc()).unwrap());
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(simplie_graph_from_json(doc.as_ptr(), &mut g), SimplieStatus::Ok);
        let mut out = ptr::null_mut();
        assert_eq!(
            simplie_graph_lpa_report(g, ptr::null(), &mut out),
            SimplieStatus::Inapplicable
        );
        assert_eq!(take(out)["verdicts"]["lpa_simple"]["verdict"], "NotSimple");
        simplie_graph_free(g);
    }
}

#[test]
fn groupoid_reports_and_cross_check() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(simplie_groupoid_pair(2, &mut g), SimplieStatus::Ok);
        let mut out = ptr::null_mut();
        let f2 = c("Fp:2");
        assert_eq!(simplie_groupoid_report(g, f2.as_ptr(), &mut out), SimplieStatus::Ok);
        assert_eq!(take(out)["verdicts"]["lie"]["verdict"], "NotSimple");
        for p in [2u32, 3, 5] {
            let mut agree = false;
            let mut row = ptr::null_mut();
            assert_eq!(
                simplie_groupoid_cross_check(g, p, 0, &mut agree, &mut row),
                SimplieStatus::Ok
            );
            assert!(agree);
            let row = take(row);
            assert_eq!(row["theorem"], if p == 2 { "NotSimple" } else { "Simple" });
            assert_eq!(row["oracle"], row["theorem"]);
        }
        simplie_groupoid_free(g);

        let doc = c(&serde_json::to_string(&FiniteGroupoid::cyclic(2).to_doc()).unwrap());
        let mut z2 = ptr::null_mut();
        assert_eq!(simplie_groupoid_from_json(doc.as_ptr(), &mut z2), SimplieStatus::Ok);
        let mut agree = true;
        assert_eq!(
            simplie_groupoid_cross_check(z2, 3, 0, &mut agree, ptr::null_mut()),
            SimplieStatus::Inapplicable
        );
        assert!(!agree);
        assert!(last_error().is_some());
        simplie_groupoid_free(z2);
    }
}

#[test]
fn action_reports() {
    unsafe {
        let swap = c(&serde_json::to_string(&fixtures::swap().to_doc()).unwrap());
        let mut a = ptr::null_mut();
        assert_eq!(simplie_action_from_json(swap.as_ptr(), &mut a), SimplieStatus::Ok);
        let mut out = ptr::null_mut();
        assert_eq!(simplie_action_report(a, ptr::null(), 0, &mut out), SimplieStatus::Ok);
        let v = take(out);
        assert_eq!(v["verdicts"]["simple"]["verdict"], true);
        assert_eq!(v["verdicts"]["center"]["verdict"], "ScalarMultiplesOfIdentity");
        simplie_action_free(a);

        let nhaus = c(&serde_json::to_string(&fixtures::nhaus().to_doc()).unwrap());
        assert_eq!(simplie_action_from_json(nhaus.as_ptr(), &mut a), SimplieStatus::Ok);
        let mut out = ptr::null_mut();
        assert_eq!(
            simplie_action_report(a, ptr::null(), 0, &mut out),
            SimplieStatus::Inapplicable
        );
        assert_eq!(take(out)["verdicts"]["hausdorff"]["verdict"], false);
        assert!(last_error().unwrap().contains("Hausdorff"));
        simplie_action_free(a);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(simplie_graph_from_json(ptr::null(), &mut g), SimplieStatus::NullPointer);
        let bad = c("{\"vertices\": [\"v\"], \"edges\": [{\"name\": 3}]}");
        assert_eq!(
            simplie_graph_from_json(bad.as_ptr(), &mut g),
            SimplieStatus::InvalidInput
        );
        assert!(g.is_null());
        assert!(last_error().unwrap().contains("line 1"));

        let ok = c(&serde_json::to_string(&fixtures::line2().to_doc()).unwrap());
        assert_eq!(simplie_graph_from_json(ok.as_ptr(), &mut g), SimplieStatus::Ok);
        assert!(last_error().is_none());
        let mut out = ptr::null_mut();
        let f4 = c("Fp:4");
        assert_eq!(
            simplie_graph_lpa_report(g, f4.as_ptr(), &mut out),
            SimplieStatus::InvalidInput
        );
        assert!(out.is_null());
        assert_eq!(
            simplie_graph_lpa_report(ptr::null(), ptr::null(), &mut out),
            SimplieStatus::NullPointer
        );
        assert_eq!(
            simplie_graph_lpa_report(g, ptr::null(), ptr::null_mut()),
            SimplieStatus::NullPointer
        );
        simplie_graph_free(g);

        let mut p = ptr::null_mut();
        assert_eq!(simplie_groupoid_pair(0, &mut p), SimplieStatus::InvalidInput);
        simplie_graph_free(ptr::null_mut());
        simplie_string_free(ptr::null_mut());
    }
}

#[test]
fn version_matches_crate() {
    let v = unsafe { CStr::from_ptr(simplie_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/simplie.h")).unwrap();
    let src = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/src/lib.rs")).unwrap();
    let exports: Vec<&str> = src
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exports.len() >= 14, "{exports:?}");
    for name in exports {
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
    }
    assert!(header.contains("SIMPLIE_STATUS_INAPPLICABLE = 4"));
}
