use std::ffi::{c_char, CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use hds_ffi::*;
use serde_json::Value;

fn take_string(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { hds_string_free(s) };
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(hds_last_error()) }.to_str().unwrap().to_string()
}

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn sp(n: u32) -> *mut HdsPair {
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { hds_pair_new_sp(n, &mut p) }, HdsStatus::Ok);
    p
}

#[test]
fn pair_lifecycle_and_json() {
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { hds_pair_new_su(2, 3, &mut p) }, HdsStatus::Ok);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { hds_pair_to_json(p, &mut s) }, HdsStatus::Ok);
    let v: Value = serde_json::from_str(&take_string(s)).unwrap();
    assert_eq!(v["family"], "SU(2,3)");
    unsafe { hds_pair_free(p) };
    unsafe { hds_pair_free(ptr::null_mut()) };

    assert_eq!(unsafe { hds_pair_new_su(0, 3, &mut p) }, HdsStatus::DomainError);
    assert!(last_error().contains("invalid_parameters"));
    assert_eq!(unsafe { hds_pair_new_sp(2, ptr::null_mut()) }, HdsStatus::NullPointer);
}

#[test]
fn blattner_parameter_and_multiplicities() {
    let p = sp(4);
    let mut s = ptr::null_mut();
    let lam = c("5,3,1,-2");
    assert_eq!(unsafe { hds_blattner_param(p, lam.as_ptr(), &mut s) }, HdsStatus::Ok);
    let v: Value = serde_json::from_str(&take_string(s)).unwrap();
    assert_eq!(v["Lambda"], serde_json::json!(["6", "5", "3", "-1"]));
    assert_eq!(v["condition_1_2"], false);
    assert_eq!(last_error(), "");
    unsafe { hds_pair_free(p) };

    let p = sp(2);
    let mut m = 0u64;
    assert_eq!(unsafe { hds_blattner_mult(p, c("2,1").as_ptr(), c("5,5").as_ptr(), &mut m) }, HdsStatus::Ok);
    assert_eq!(m, 1);
    assert_eq!(unsafe { hds_holo_k_mult(p, c("3,3").as_ptr(), c("5,5").as_ptr(), &mut m) }, HdsStatus::Ok);
    assert_eq!(m, 1);
    assert_eq!(unsafe { hds_holo_k_mult(p, c("3,3").as_ptr(), c("5").as_ptr(), &mut m) }, HdsStatus::InvalidArgument);
    assert_eq!(unsafe { hds_blattner_mult(p, c("2,2").as_ptr(), c("5,5").as_ptr(), &mut m) }, HdsStatus::DomainError);
    assert!(last_error().starts_with("not_harish_chandra"));
    assert_eq!(unsafe { hds_blattner_mult(p, ptr::null(), c("5,5").as_ptr(), &mut m) }, HdsStatus::NullPointer);
    assert_eq!(unsafe { hds_blattner_mult(ptr::null(), c("2,1").as_ptr(), c("5,5").as_ptr(), &mut m) }, HdsStatus::NullPointer);
    unsafe { hds_pair_free(p) };
}

#[test]
fn admissibility_by_preset_and_json() {
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { hds_pair_new_su(2, 3, &mut p) }, HdsStatus::Ok);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { hds_admissible(p, c("su-q-block").as_ptr(), 6, &mut s) }, HdsStatus::Ok);
    assert_eq!(take_string(s), r#"{"certificate":"ConeKernelTrivial","status":"Admissible"}"#);
    let desc = c(r#"{"name":"u1","projection":[["1","1","0","0","0"]],"flags":{"is_torus":true}}"#);
    assert_eq!(unsafe { hds_admissible(p, desc.as_ptr(), 6, &mut s) }, HdsStatus::Ok);
    assert!(take_string(s).contains("Admissible"));
    assert_eq!(unsafe { hds_admissible(p, c("nope").as_ptr(), 6, &mut s) }, HdsStatus::DomainError);
    unsafe { hds_pair_free(p) };
}

#[test]
fn verify_entry_point() {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { hds_verify_paper(c("sp4-counterexample").as_ptr(), &mut s) }, HdsStatus::Ok);
    let v: Value = serde_json::from_str(&take_string(s)).unwrap();
    assert_eq!(v["all_pass"], true);
    assert_eq!(unsafe { hds_verify_paper(c("missing").as_ptr(), &mut s) }, HdsStatus::VerifyFailed);
    take_string(s);
    let version = unsafe { CStr::from_ptr(hds_schema_version()) }.to_str().unwrap();
    assert_eq!(version, hds_core::cli::SCHEMA_VERSION);
}

fn header() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("include/hds.h")
}

#[test]
fn header_is_valid_c_and_cxx() {
    let h = header();
    let text = std::fs::read_to_string(&h).unwrap();
    for f in ["hds_pair_new_su", "hds_pair_free", "hds_blattner_param", "hds_last_error", "hds_string_free"] {
        assert!(text.contains(f), "{f} missing from header");
    }
    let st = Command::new("cc").args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c"]).arg(&h).status().unwrap();
    assert!(st.success());
    let st = Command::new("cc").args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c++"]).arg(&h).status().unwrap();
    assert!(st.success());
}

#[test]
fn c_program_links_against_static_library() {
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(Path::parent).unwrap();
    let lib = profile_dir.join("libhds_ffi.a");
    assert!(lib.exists(), "{} not built", lib.display());
    let tmp = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let src = tmp.join("hds_smoke.c");
    let bin = tmp.join("hds_smoke");
    std::fs::write(
        &src,
        r#"#include <stdio.h>
#include <string.h>
#include "hds.h"
int main(void) {
    HdsPair *p = NULL;
    if (hds_pair_new_sp(4, &p) != HDS_STATUS_OK) return 1;
    char *json = NULL;
    if (hds_blattner_param(p, "5,3,1,-2", &json) != HDS_STATUS_OK) return 2;
    int ok = strstr(json, "\"Lambda\":[\"6\",\"5\",\"3\",\"-1\"]") != NULL;
    hds_string_free(json);
    uint64_t m = 0;
    if (hds_blattner_mult(p, "1,1,1,1", "5,5,5,5", &m) != HDS_STATUS_DOMAIN_ERROR) return 3;
    if (strlen(hds_last_error()) == 0) return 4;
    hds_pair_free(p);
    puts(ok ? "ok" : "mismatch");
    return ok ? 0 : 5;
}
"#,
    )
    .unwrap();
    let st = Command::new("cc")
        .arg("-I")
        .arg(header().parent().unwrap())
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(st.success());
    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success(), "exit {:?}", out.status.code());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
}
