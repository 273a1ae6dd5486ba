//! C ABI for the chow engine.
//!
//! The surface is deliberately small: evaluate a scene text into an opaque
//! report handle, query it, run built-in cases, and evaluate expressions in
//! a named ring of a scene. All strings are UTF-8, all returned strings are
//! owned by the callee until freed with `chow_string_free`, and every
//! fallible call returns a `ChowStatus`.
//!
//! The reference header lives at `include/chow.h` (regenerated with
//! cbindgen when the `bindgen` feature of the build script is available).

use chow::corpus;
use chow::scene::{
    eval_scene_full, format_report, parse_expr_str, parse_scene, resolve_names, EvalOptions,
    Report, ReportMode, SceneEnv,
};
use std::ffi::{c_char, CStr, CString};
use std::ptr;

/// Status codes returned by every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChowStatus {
    /// Success.
    Ok = 0,
    /// Report evaluated but contains failures or errors.
    Unverified = 1,
    /// Lexical/syntax/name-resolution error in the scene text.
    ParseError = 2,
    /// A supplied name was not found.
    NotFound = 3,
    /// Invalid argument (null pointer, bad UTF-8, bad expression).
    InvalidArgument = 4,
}

/// Opaque evaluated scene: report plus ring environment.
pub struct ChowScene {
    report: Report,
    env: SceneEnv,
}

fn cstr_arg<'a>(p: *const c_char) -> Option<&'a str> {
    if p.is_null() {
        return None;
    }
    unsafe { CStr::from_ptr(p) }.to_str().ok()
}

fn to_cstring(s: String) -> *mut c_char {
    CString::new(s.replace('\0', ""))
        .expect("no interior NUL")
        .into_raw()
}

/// Library version string; the pointer is static and must not be freed.
#[no_mangle]
pub extern "C" fn chow_version() -> *const c_char {
    concat!("chow ", env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Parse and evaluate a scene text. On success (including a scene whose
/// assertions fail) writes a handle to `out` and returns `Ok`/`Unverified`
/// according to the report; parse errors return `ParseError` and leave
/// `out` untouched.
#[no_mangle]
pub extern "C" fn chow_scene_eval(
    text: *const c_char,
    name: *const c_char,
    out: *mut *mut ChowScene,
) -> ChowStatus {
    let Some(text) = cstr_arg(text) else {
        return ChowStatus::InvalidArgument;
    };
    if out.is_null() {
        return ChowStatus::InvalidArgument;
    }
    let file_name = cstr_arg(name).unwrap_or("scene").to_string();
    let scene = match parse_scene(text) {
        Ok(s) => s,
        Err(_) => return ChowStatus::ParseError,
    };
    if resolve_names(&scene).is_err() {
        return ChowStatus::ParseError;
    }
    let (report, env) = eval_scene_full(&scene, &EvalOptions { file_name });
    let all_pass = report.all_pass();
    let handle = Box::new(ChowScene { report, env });
    unsafe { *out = Box::into_raw(handle) };
    if all_pass {
        ChowStatus::Ok
    } else {
        ChowStatus::Unverified
    }
}

#[no_mangle]
pub extern "C" fn chow_scene_free(scene: *mut ChowScene) {
    if !scene.is_null() {
        drop(unsafe { Box::from_raw(scene) });
    }
}

/// Number of report entries.
#[no_mangle]
pub extern "C" fn chow_report_len(scene: *const ChowScene) -> usize {
    if scene.is_null() {
        return 0;
    }
    unsafe { &*scene }.report.assertions.len()
}

/// Counts of passing / failing / erroring entries.
#[no_mangle]
pub extern "C" fn chow_report_counts(
    scene: *const ChowScene,
    pass: *mut usize,
    fail: *mut usize,
    error: *mut usize,
) -> ChowStatus {
    if scene.is_null() {
        return ChowStatus::InvalidArgument;
    }
    let r = unsafe { &*scene };
    if !pass.is_null() {
        unsafe { *pass = r.report.summary.pass };
    }
    if !fail.is_null() {
        unsafe { *fail = r.report.summary.fail };
    }
    if !error.is_null() {
        unsafe { *error = r.report.summary.error };
    }
    ChowStatus::Ok
}

/// The full report rendered as JSON (schema identical to `chow check
/// --json`). Free with `chow_string_free`.
#[no_mangle]
pub extern "C" fn chow_report_json(scene: *const ChowScene) -> *mut c_char {
    if scene.is_null() {
        return ptr::null_mut();
    }
    let r = unsafe { &*scene };
    to_cstring(format_report(&r.report, ReportMode::Json))
}

/// Evaluate an expression in a named ring of the scene; writes the printed
/// normal form to `out`.
#[no_mangle]
pub extern "C" fn chow_scene_eval_expr(
    scene: *const ChowScene,
    ring: *const c_char,
    expr: *const c_char,
    out: *mut *mut c_char,
) -> ChowStatus {
    if scene.is_null() || out.is_null() {
        return ChowStatus::InvalidArgument;
    }
    let (Some(ring), Some(expr)) = (cstr_arg(ring), cstr_arg(expr)) else {
        return ChowStatus::InvalidArgument;
    };
    let s = unsafe { &*scene };
    let Some(r) = s.env.ring(ring) else {
        return ChowStatus::NotFound;
    };
    let parsed = match parse_expr_str(expr) {
        Ok(e) => e,
        Err(_) => return ChowStatus::InvalidArgument,
    };
    let classes = s.env.classes_of(&r);
    match chow::scene::eval_expr(&parsed, &r, &classes) {
        Ok(v) => {
            unsafe { *out = to_cstring(r.fmt_element(&v)) };
            ChowStatus::Ok
        }
        Err(_) => ChowStatus::InvalidArgument,
    }
}

/// Hilbert function of a named ring as a comma-separated list.
#[no_mangle]
pub extern "C" fn chow_scene_hilbert(
    scene: *const ChowScene,
    ring: *const c_char,
    out: *mut *mut c_char,
) -> ChowStatus {
    if scene.is_null() || out.is_null() {
        return ChowStatus::InvalidArgument;
    }
    let Some(ring) = cstr_arg(ring) else {
        return ChowStatus::InvalidArgument;
    };
    let s = unsafe { &*scene };
    let Some(r) = s.env.ring(ring) else {
        return ChowStatus::NotFound;
    };
    let dims: Vec<String> = r.hilbert_function().iter().map(|d| d.to_string()).collect();
    unsafe { *out = to_cstring(dims.join(",")) };
    ChowStatus::Ok
}

/// Number of built-in cases.
#[no_mangle]
pub extern "C" fn chow_corpus_len() -> usize {
    corpus::cases().len()
}

/// Name of the i-th built-in case. Free with `chow_string_free`.
#[no_mangle]
pub extern "C" fn chow_corpus_name(index: usize) -> *mut c_char {
    let cases = corpus::cases();
    match cases.get(index) {
        Some(c) => to_cstring(c.name.to_string()),
        None => ptr::null_mut(),
    }
}

/// Scene text of a built-in case by name. Free with `chow_string_free`.
#[no_mangle]
pub extern "C" fn chow_corpus_scene(name: *const c_char) -> *mut c_char {
    let Some(name) = cstr_arg(name) else {
        return ptr::null_mut();
    };
    match corpus::load_case(name) {
        Some(c) => to_cstring(c.scene.to_string()),
        None => ptr::null_mut(),
    }
}

/// Run a built-in case: `Ok` when every assertion matches its expectation.
#[no_mangle]
pub extern "C" fn chow_corpus_run(name: *const c_char) -> ChowStatus {
    let Some(name) = cstr_arg(name) else {
        return ChowStatus::InvalidArgument;
    };
    let Some(case) = corpus::load_case(name) else {
        return ChowStatus::NotFound;
    };
    let result = corpus::run_case(&case);
    if result.mismatches.is_empty() {
        ChowStatus::Ok
    } else {
        ChowStatus::Unverified
    }
}

#[no_mangle]
pub extern "C" fn chow_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CString;

    fn c(s: &str) -> CString {
        CString::new(s).unwrap()
    }

    #[test]
    fn eval_scene_through_the_abi() {
        let text = c("ring J { gens: T:1; rels: T^3; top: 3 }\nassert hilbert in J : ( 1, 1, 1, 0 )\n");
        let name = c("abi-test");
        let mut handle: *mut ChowScene = ptr::null_mut();
        let st = chow_scene_eval(text.as_ptr(), name.as_ptr(), &mut handle);
        assert_eq!(st, ChowStatus::Ok);
        assert_eq!(chow_report_len(handle), 1);
        let (mut p, mut f, mut e) = (0usize, 0usize, 0usize);
        assert_eq!(
            chow_report_counts(handle, &mut p, &mut f, &mut e),
            ChowStatus::Ok
        );
        assert_eq!((p, f, e), (1, 0, 0));
        let json = chow_report_json(handle);
        let s = unsafe { CStr::from_ptr(json) }.to_str().unwrap().to_string();
        assert!(s.contains("\"pass\": 1"));
        chow_string_free(json);
        // Expression evaluation against the scene's ring.
        let ring = c("J");
        let expr = c("(T + 1)^3");
        let mut out: *mut c_char = ptr::null_mut();
        assert_eq!(
            chow_scene_eval_expr(handle, ring.as_ptr(), expr.as_ptr(), &mut out),
            ChowStatus::Ok
        );
        let printed = unsafe { CStr::from_ptr(out) }.to_str().unwrap().to_string();
        assert_eq!(printed, "3*T^2 + 3*T + 1");
        chow_string_free(out);
        chow_scene_free(handle);
    }

    #[test]
    fn failing_scene_reports_unverified() {
        let text = c("ring J { gens: T:1; rels: T^3; top: 3 }\nassert zero in J : T\n");
        let mut handle: *mut ChowScene = ptr::null_mut();
        let st = chow_scene_eval(text.as_ptr(), ptr::null(), &mut handle);
        assert_eq!(st, ChowStatus::Unverified);
        chow_scene_free(handle);
    }

    #[test]
    fn parse_error_status() {
        let text = c("ring J { gens: Θ:1; rels: ; top: 2 }");
        let mut handle: *mut ChowScene = ptr::null_mut();
        assert_eq!(
            chow_scene_eval(text.as_ptr(), ptr::null(), &mut handle),
            ChowStatus::ParseError
        );
        assert!(handle.is_null());
    }

    #[test]
    fn corpus_listing() {
        assert!(chow_corpus_len() >= 15);
        let n = chow_corpus_name(0);
        assert!(!n.is_null());
        chow_string_free(n);
        let bad = c("nonsuch");
        assert_eq!(chow_corpus_run(bad.as_ptr()), ChowStatus::NotFound);
    }
}
