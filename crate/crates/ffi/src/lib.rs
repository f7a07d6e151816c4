//! C interface to `hds-core`.
//!
//! Handles are opaque; strings returned through `char **` out-parameters are
//! owned by the caller and released with `hds_string_free`. Weights are
//! passed as comma-separated rationals such as `"5,3,1,-2"` or `"1/2,-1/2"`.
//! On any status other than `HDS_STATUS_OK`, `hds_last_error` describes the failure
//! on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use hds_core::branch::{admissible, Subgroup};
use hds_core::mult::{blattner_mult, holo_k_mult};
use hds_core::params::{blattner_param, chamber_of, condition_hc};
use hds_core::rational::parse_list;
use hds_core::verify::{verify_paper, GoldenTable};
use hds_core::{HermitianPair, Weight};
use serde_json::json;

/// Result code of every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HdsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    DomainError = 3,
    VerifyFailed = 4,
    Panic = 5,
}

/// An opaque Hermitian symmetric pair.
pub struct HdsPair {
    inner: HermitianPair,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Fail(HdsStatus, String);

impl From<hds_core::Error> for Fail {
    fn from(e: hds_core::Error) -> Fail {
        let status = match e {
            hds_core::Error::Parse(_) | hds_core::Error::DimensionMismatch { .. } => HdsStatus::InvalidArgument,
            _ => HdsStatus::DomainError,
        };
        Fail(status, format!("{}: {e}", e.kind()))
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> HdsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            HdsStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("panic inside hds");
            HdsStatus::Panic
        }
    }
}

fn null(what: &str) -> Fail {
    Fail(HdsStatus::NullPointer, format!("{what} is NULL"))
}

unsafe fn pair_ref<'a>(p: *const HdsPair) -> Result<&'a HermitianPair, Fail> {
    p.as_ref().map(|h| &h.inner).ok_or_else(|| null("pair"))
}

unsafe fn text<'a>(s: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s).to_str().map_err(|_| Fail(HdsStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

unsafe fn weight(pair: &HermitianPair, s: *const c_char, what: &str) -> Result<Weight, Fail> {
    let coords = parse_list(text(s, what)?)?;
    let dim = pair.ambient().dim();
    if coords.len() != dim {
        return Err(Fail(HdsStatus::InvalidArgument, format!("{what}: expected {dim} coordinates, got {}", coords.len())));
    }
    Ok(pair.parse_weight(coords)?)
}

unsafe fn put<T>(out: *mut T, v: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(v);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail(HdsStatus::Panic, "interior NUL in output".into()))?;
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(c.into_raw());
    Ok(())
}

unsafe fn new_pair(out: *mut *mut HdsPair, make: impl FnOnce() -> hds_core::Result<HermitianPair>) -> HdsStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let inner = make()?;
        out.write(Box::into_raw(Box::new(HdsPair { inner })));
        Ok(())
    })
}

/// Build SU(p,q). On success `*out` owns a handle for `hds_pair_free`.
///
/// # Safety
/// `out` must be NULL or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hds_pair_new_su(p: u32, q: u32, out: *mut *mut HdsPair) -> HdsStatus {
    new_pair(out, || HermitianPair::su(p as usize, q as usize))
}

/// Build Sp(n,R).
///
/// # Safety
/// `out` must be NULL or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hds_pair_new_sp(n: u32, out: *mut *mut HdsPair) -> HdsStatus {
    new_pair(out, || HermitianPair::sp(n as usize))
}

/// Release a handle. NULL is ignored.
///
/// # Safety
/// `pair` must be NULL or a handle from `hds_pair_new_*` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hds_pair_free(pair: *mut HdsPair) {
    if !pair.is_null() {
        let _ = catch_unwind(AssertUnwindSafe(|| drop(Box::from_raw(pair))));
    }
}

/// Structural data of the pair as JSON.
///
/// # Safety
/// `pair` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hds_pair_to_json(pair: *const HdsPair, out: *mut *mut c_char) -> HdsStatus {
    guard(|| {
        let g = pair_ref(pair)?;
        put_string(out, g.to_json().to_string())
    })
}

/// Blattner parameter of `lambda`, as the JSON object
/// `{"lambda", "Lambda", "chamber_id", "condition_1_2"}`.
///
/// # Safety
/// `pair` must be a live handle, `lambda` a NUL-terminated string and `out`
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hds_blattner_param(
    pair: *const HdsPair,
    lambda: *const c_char,
    out: *mut *mut c_char,
) -> HdsStatus {
    guard(|| {
        let g = pair_ref(pair)?;
        let lam = weight(g, lambda, "lambda")?;
        let big = blattner_param(g, &lam)?;
        let v = json!({
            "lambda": lam,
            "Lambda": big,
            "chamber_id": chamber_of(g, &lam)?.id.to_string(),
            "condition_1_2": condition_hc(g, &lam)?,
        });
        put_string(out, v.to_string())
    })
}

/// Multiplicity of the K-type `mu` in the discrete series with parameter
/// `lambda`, by the Blattner formula.
///
/// # Safety
/// Pointers as for `hds_blattner_param`; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hds_blattner_mult(
    pair: *const HdsPair,
    lambda: *const c_char,
    mu: *const c_char,
    out: *mut u64,
) -> HdsStatus {
    guard(|| {
        let g = pair_ref(pair)?;
        let m = blattner_mult(g, &weight(g, lambda, "lambda")?, &weight(g, mu, "mu")?)?;
        put(out, m)
    })
}

/// Multiplicity of the K-type `mu` in the holomorphic discrete series with
/// lowest K-type `big_lambda`.
///
/// # Safety
/// Pointers as for `hds_blattner_param`; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hds_holo_k_mult(
    pair: *const HdsPair,
    big_lambda: *const c_char,
    mu: *const c_char,
    out: *mut u64,
) -> HdsStatus {
    guard(|| {
        let g = pair_ref(pair)?;
        let m = holo_k_mult(g, &weight(g, big_lambda, "Lambda")?, &weight(g, mu, "mu")?)?;
        put(out, m)
    })
}

/// Admissibility verdict as JSON. `subgroup` is a preset name or a JSON
/// subgroup description (anything starting with `{`).
///
/// # Safety
/// `pair` must be a live handle, `subgroup` NUL-terminated, `out` valid for
/// writes.
#[no_mangle]
pub unsafe extern "C" fn hds_admissible(
    pair: *const HdsPair,
    subgroup: *const c_char,
    truncation: u32,
    out: *mut *mut c_char,
) -> HdsStatus {
    guard(|| {
        let g = pair_ref(pair)?;
        let s = text(subgroup, "subgroup")?;
        let sub = if s.trim_start().starts_with('{') { Subgroup::from_json(g, s)? } else { Subgroup::preset(g, s)? };
        let v = admissible(g, &sub, u64::from(truncation))?;
        put_string(out, v.to_json().to_string())
    })
}

/// Run the golden checks; `item` may be NULL for all of them. The report is
/// written to `*out` and the status is `HDS_STATUS_VERIFY_FAILED` if any item fails.
///
/// # Safety
/// `item` must be NULL or NUL-terminated; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn hds_verify_paper(item: *const c_char, out: *mut *mut c_char) -> HdsStatus {
    let mut all_pass = true;
    let status = guard(|| {
        let filter = if item.is_null() { vec![] } else { vec![text(item, "item")?.to_string()] };
        let report = verify_paper(&GoldenTable::reference(), &filter);
        all_pass = report.all_pass();
        put_string(out, report.to_json().to_string())
    });
    if status == HdsStatus::Ok && !all_pass {
        set_error("verification failed");
        return HdsStatus::VerifyFailed;
    }
    status
}

/// Message for the last failure on this thread; empty after a success. The
/// pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn hds_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Release a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must be NULL or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hds_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Schema version of the JSON documents.
#[no_mangle]
pub extern "C" fn hds_schema_version() -> *const c_char {
    c"1".as_ptr()
}
