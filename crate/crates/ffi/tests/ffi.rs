use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use unipotent_e6_ffi::*;

fn data_dir() -> CString {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data");
    CString::new(p.to_str().unwrap()).unwrap()
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(ue6_last_error()) }.to_str().unwrap().to_string()
}

unsafe fn take(s: *mut std::ffi::c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    ue6_string_free(s);
    out
}

#[test]
fn context_round_trip() {
    unsafe {
        let mut ctx = ptr::null_mut();
        assert_eq!(ue6_context_new(data_dir().as_ptr(), &mut ctx), Ue6Status::Ok);
        for case in [Ue6Case::Untwisted, Ue6Case::Twisted] {
            let mut xi = 0;
            assert_eq!(ue6_determine_xi(ctx, case as i32, &mut xi), Ue6Status::Ok, "{}", last_error());
            assert_eq!(xi, 1);
            let mut s = ptr::null_mut();
            assert_eq!(ue6_m_polynomial(ctx, case as i32, &mut s), Ue6Status::Ok);
            assert_eq!(take(s), "1*q^6 + xi*(2*q^6)");
            assert_eq!(ue6_unipotent_values_tsv(ctx, case as i32, &mut s), Ue6Status::Ok);
            assert_eq!(take(s).lines().count(), 31);
        }
        ue6_context_free(ctx);
    }
}

#[test]
fn argument_errors() {
    unsafe {
        let mut ctx = ptr::null_mut();
        assert_eq!(ue6_context_new(ptr::null(), &mut ctx), Ue6Status::NullPointer);
        assert!(last_error().contains("data_dir"));
        let mut xi = 0;
        assert_eq!(ue6_determine_xi(ptr::null_mut(), 0, &mut xi), Ue6Status::NullPointer);
        assert_eq!(ue6_context_new(data_dir().as_ptr(), &mut ctx), Ue6Status::Ok);
        assert_eq!(ue6_determine_xi(ctx, 7, &mut xi), Ue6Status::InvalidArgument);
        assert!(last_error().contains("unknown case"));
        let bad = [3i64, 10];
        assert_eq!(ue6_context_set_q_samples(ctx, bad.as_ptr(), bad.len()), Ue6Status::InvalidArgument);
        let good = [3i64, 81];
        assert_eq!(ue6_context_set_q_samples(ctx, good.as_ptr(), good.len()), Ue6Status::Ok);
        assert!(last_error().is_empty());
        ue6_context_free(ctx);
        ue6_context_free(ptr::null_mut());
        ue6_string_free(ptr::null_mut());
    }
}

#[test]
fn missing_data_is_an_io_error() {
    let dir = CString::new("/nonexistent/unipotent-e6").unwrap();
    unsafe {
        let mut ctx = ptr::null_mut();
        assert_eq!(ue6_context_new(dir.as_ptr(), &mut ctx), Ue6Status::Ok);
        let mut xi = 0;
        assert_eq!(ue6_determine_xi(ctx, 0, &mut xi), Ue6Status::Io);
        assert!(last_error().contains("/nonexistent"), "{}", last_error());
        ue6_context_free(ctx);
    }
}

#[test]
fn fourier_matrices() {
    unsafe {
        let mut s = ptr::null_mut();
        let g = CString::new("s3").unwrap();
        assert_eq!(ue6_fourier_matrix_tsv(g.as_ptr(), &mut s), Ue6Status::Ok);
        assert_eq!(take(s).lines().count(), 9);
        let g = CString::new("s4").unwrap();
        assert_eq!(ue6_fourier_matrix_tsv(g.as_ptr(), &mut s), Ue6Status::InvalidArgument);
    }
}

#[test]
fn full_report() {
    unsafe {
        let mut ctx = ptr::null_mut();
        assert_eq!(ue6_context_new(data_dir().as_ptr(), &mut ctx), Ue6Status::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(ue6_full_report_json(ctx, &mut s), Ue6Status::Ok, "{}", last_error());
        let report: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(report["summary"]["failed"].as_array().unwrap().len(), 0);
        ue6_context_free(ctx);
    }
    assert_eq!(unsafe { CStr::from_ptr(ue6_version()) }.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

/// Compiles a C program against the generated header and the static library.
#[test]
fn c_program_links_and_runs() {
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().unwrap().parent().unwrap();
    let lib = profile_dir.join("libunipotent_e6_ffi.a");
    assert!(lib.exists(), "{} not built", lib.display());
    let work = tempfile::tempdir().unwrap();
    let src = work.path().join("smoke.c");
    std::fs::write(
        &src,
        r#"#include <stdio.h>
#include "unipotent_e6.h"

int main(int argc, char **argv) {
    Ue6Context *ctx = NULL;
    if (ue6_context_new(argv[1], &ctx) != UE6_STATUS_OK) return 10;
    int32_t xi = 0;
    if (ue6_determine_xi(ctx, UE6_CASE_TWISTED, &xi) != UE6_STATUS_OK) {
        fprintf(stderr, "%s\n", ue6_last_error());
        return 11;
    }
    if (ue6_determine_xi(ctx, 5, &xi) != UE6_STATUS_INVALID_ARGUMENT) return 12;
    char *m = NULL;
    if (ue6_m_polynomial(ctx, UE6_CASE_UNTWISTED, &m) != UE6_STATUS_OK) return 13;
    printf("xi=%d m=%s\n", xi, m);
    ue6_string_free(m);
    ue6_context_free(ctx);
    return 0;
}
"#,
    )
    .unwrap();
    let bin = work.path().join("smoke");
    let include = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include");
    let status = Command::new("cc")
        .arg(&src)
        .arg("-I")
        .arg(&include)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .expect("C compiler available");
    assert!(status.success());
    let out = Command::new(&bin).arg(data_dir().to_str().unwrap()).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "xi=1 m=1*q^6 + xi*(2*q^6)\n");
}
