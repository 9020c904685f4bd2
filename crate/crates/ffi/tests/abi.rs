use std::ffi::{c_char, c_int, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use treecert_ffi::*;

fn take_string(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { tc_string_free(s) };
    out
}

fn last_error() -> Option<String> {
    let p = tc_last_error();
    (!p.is_null()).then(|| unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned())
}

#[test]
fn rational_round_trip() {
    let text = CString::new("(x^2 - 1)/(x - 1)").unwrap();
    let mut r = ptr::null_mut();
    assert_eq!(unsafe { tc_rational_parse(5, text.as_ptr(), &mut r) }, TcStatus::Ok);
    assert_eq!(take_string(unsafe { tc_rational_to_string(r) }), "x+1");
    let (mut v, mut inf) = (0i64, -1 as c_int);
    assert_eq!(unsafe { tc_rational_valuation(r, &mut v, &mut inf) }, TcStatus::Ok);
    assert_eq!((v, inf), (-1, 0));
    unsafe { tc_rational_free(r) };

    let zero = CString::new("0").unwrap();
    let mut z = ptr::null_mut();
    assert_eq!(unsafe { tc_rational_parse(5, zero.as_ptr(), &mut z) }, TcStatus::Ok);
    assert_eq!(unsafe { tc_rational_valuation(z, &mut v, &mut inf) }, TcStatus::Ok);
    assert_eq!(inf, 1);
    unsafe { tc_rational_free(z) };
}

#[test]
fn errors_set_last_error() {
    let text = CString::new("1/0").unwrap();
    let mut r = ptr::null_mut();
    assert_eq!(unsafe { tc_rational_parse(5, text.as_ptr(), &mut r) }, TcStatus::Arithmetic);
    assert!(r.is_null());
    assert!(last_error().unwrap().contains("zero"));

    assert_eq!(unsafe { tc_rational_parse(6, text.as_ptr(), &mut r) }, TcStatus::InvalidArgument);
    assert!(last_error().unwrap().contains("prime"));

    assert_eq!(unsafe { tc_rational_parse(5, ptr::null(), &mut r) }, TcStatus::NullPointer);
    let bad = CString::new("x +* 1").unwrap();
    assert_eq!(unsafe { tc_rational_parse(5, bad.as_ptr(), &mut r) }, TcStatus::Parse);

    let ok = CString::new("x").unwrap();
    assert_eq!(unsafe { tc_rational_parse(5, ok.as_ptr(), &mut r) }, TcStatus::Ok);
    assert!(last_error().is_none());
    unsafe { tc_rational_free(r) };
    tc_clear_last_error();
}

#[test]
fn matrices_on_the_tree() {
    let hyper = CString::new("x;1;-1;0").unwrap();
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { tc_matrix_parse(3, hyper.as_ptr(), &mut m) }, TcStatus::Ok);
    let mut len = 99u64;
    assert_eq!(unsafe { tc_matrix_classify(m, &mut len) }, TcStatus::Ok);
    assert_eq!(len, 2);
    let mut min = 0u64;
    assert_eq!(unsafe { tc_matrix_min_displacement(m, 2, &mut min) }, TcStatus::Ok);
    assert_eq!(min, 2);
    unsafe { tc_matrix_free(m) };

    let singular = CString::new("1;1;1;1").unwrap();
    assert_eq!(unsafe { tc_matrix_parse(3, singular.as_ptr(), &mut m) }, TcStatus::Ok);
    assert_eq!(unsafe { tc_matrix_classify(m, &mut len) }, TcStatus::Arithmetic);
    unsafe { tc_matrix_free(m) };
    assert_eq!(unsafe { tc_matrix_classify(ptr::null(), &mut len) }, TcStatus::NullPointer);
}

#[test]
fn surface_report() {
    let mut r = ptr::null_mut();
    assert_eq!(unsafe { tc_surface_verify(3, &mut r) }, TcStatus::Ok);
    assert_eq!(unsafe { tc_report_passed(r) }, 1);
    let name = CString::new("discreteness.v_trA").unwrap();
    let mut v = 0i64;
    assert_eq!(unsafe { tc_report_counter(r, name.as_ptr(), &mut v) }, TcStatus::Ok);
    assert_eq!(v, -1);
    let missing = CString::new("nope").unwrap();
    assert_eq!(unsafe { tc_report_counter(r, missing.as_ptr(), &mut v) }, TcStatus::InvalidArgument);
    assert!(take_string(unsafe { tc_report_text(r) }).starts_with("surface verify --p 3: PASS"));
    let json = take_string(unsafe { tc_report_json(r) });
    assert!(json.lines().all(serde_json_like));
    unsafe { tc_report_free(r) };
    assert_eq!(unsafe { tc_report_passed(ptr::null()) }, 0);
}

fn serde_json_like(line: &str) -> bool {
    line.starts_with('{') && line.ends_with('}')
}

#[test]
fn raag_plan_and_certificates() {
    let c5 = CString::new("0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
    let (mut lo, mut hi, mut exact) = (0u64, 0u64, 0 as c_int);
    assert_eq!(unsafe { tc_raag_plan(c5.as_ptr(), &mut lo, &mut hi, &mut exact) }, TcStatus::Ok);
    assert_eq!((lo, hi, exact), (3, 3, 1));
    let looped = CString::new("0 0").unwrap();
    assert_eq!(unsafe { tc_raag_plan(looped.as_ptr(), &mut lo, &mut hi, &mut exact) }, TcStatus::Parse);

    let mut r = ptr::null_mut();
    assert_eq!(unsafe { tc_bass_serre_certify(0, 4, &mut r) }, TcStatus::Ok);
    assert_eq!(unsafe { tc_report_passed(r) }, 1);
    unsafe { tc_report_free(r) };
    assert_eq!(unsafe { tc_bass_serre_certify(1, 3, &mut r) }, TcStatus::Ok);
    assert_eq!(unsafe { tc_report_passed(r) }, 1);
    unsafe { tc_report_free(r) };
    assert_eq!(unsafe { tc_bass_serre_certify(2, 3, &mut r) }, TcStatus::InvalidArgument);
}

#[test]
fn cli_passthrough() {
    let args: Vec<CString> = ["treecert", "bt", "classify", "--p", "3", "--matrix", "1;0;0;1"]
        .iter()
        .map(|s| CString::new(*s).unwrap())
        .collect();
    let ptrs: Vec<*const c_char> = args.iter().map(|a| a.as_ptr()).collect();
    let (mut code, mut out) = (-1 as c_int, ptr::null_mut());
    assert_eq!(unsafe { tc_cli_run(ptrs.len() as c_int, ptrs.as_ptr(), &mut code, &mut out) }, TcStatus::Ok);
    assert_eq!(code, 0);
    assert!(take_string(out).contains("Elliptic"));
}

fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(manifest_dir().join("include/treecert.h")).unwrap();
    let source = std::fs::read_to_string(manifest_dir().join("src/lib.rs")).unwrap();
    let exports: Vec<&str> = source
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exports.len() >= 15);
    for name in exports {
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
    }
    assert!(header.contains("typedef struct TcReport TcReport;"));
}

#[test]
fn header_compiles_as_c() {
    let Ok(status) = Command::new("cc")
        .args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c"])
        .arg(manifest_dir().join("include/treecert.h"))
        .status()
    else {
        eprintln!("no C compiler; skipped");
        return;
    };
    assert!(status.success());
}

#[test]
fn c_program_links_against_static_library() {
    let target = manifest_dir().join("../../target/debug");
    let lib = target.join("libtreecert_ffi.a");
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("static library or C compiler unavailable; skipped");
        return;
    }
    let dir = tempfile::tempdir().unwrap();
    let exe = dir.path().join("smoke");
    let status = Command::new("cc")
        .arg(manifest_dir().join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest_dir().join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
    assert!(out.status.success());
}
