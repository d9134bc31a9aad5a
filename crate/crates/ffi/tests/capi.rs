//! The C ABI called from Rust, and a C program built against the generated header.

use std::ffi::{c_char, CStr};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use liecheck_ffi::*;

fn new(name: &str) -> *mut LcRootSystem {
    let c = std::ffi::CString::new(name).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { lc_rootsys_new(c.as_ptr(), &mut out) },
        LcStatus::Ok
    );
    out
}

fn last_error() -> String {
    let mut buf = [0 as c_char; 256];
    unsafe { lc_last_error(buf.as_mut_ptr(), buf.len()) };
    unsafe { CStr::from_ptr(buf.as_ptr()) }
        .to_string_lossy()
        .into_owned()
}

#[test]
fn e8_affine_chain_through_the_abi() {
    let e8 = new("E8");
    let mut top = [0i64; 8];
    assert_eq!(
        unsafe { lc_rootsys_dominant_root(e8, true, top.as_mut_ptr(), 8) },
        LcStatus::Ok
    );
    assert_eq!(top, [0, 0, 0, 0, 0, 0, 0, 1]);
    let zero = [0i64; 8];
    let mut out = [0i64; 8];
    let word = [8usize];
    assert_eq!(
        unsafe { lc_dot_word(e8, word.as_ptr(), 1, zero.as_ptr(), out.as_mut_ptr(), 8) },
        LcStatus::Ok
    );
    // s8·0 = −α8 = −(2ω8 − ω7).
    assert_eq!(out, [0, 0, 0, 0, 0, 0, 1, -2]);
    unsafe { lc_rootsys_free(e8) };
}

#[test]
fn linkage_and_errors() {
    let b6 = new("B6");
    let (w1, w2) = ([1i64, 0, 0, 0, 0, 0], [0i64, 1, 0, 0, 0, 0]);
    let mut linked = false;
    let s = unsafe { lc_linked(b6, w1.as_ptr(), w2.as_ptr(), 6, 5, false, &mut linked) };
    assert_eq!(s, LcStatus::Ok);
    assert!(linked);
    let s = unsafe { lc_linked(b6, w1.as_ptr(), w2.as_ptr(), 6, 6, false, &mut linked) };
    assert_eq!(s, LcStatus::Precondition);
    assert!(last_error().contains("not prime"));
    let s = unsafe {
        lc_linked(
            ptr::null(),
            w1.as_ptr(),
            w2.as_ptr(),
            6,
            5,
            false,
            &mut linked,
        )
    };
    assert_eq!(s, LcStatus::NullPointer);
    let mut small = [0i64; 2];
    let s = unsafe { lc_rootsys_dominant_root(b6, false, small.as_mut_ptr(), 2) };
    assert_eq!(s, LcStatus::BufferTooSmall);
    unsafe { lc_rootsys_free(b6) };
}

#[test]
fn bad_labels_do_not_unwind() {
    let a2 = new("A2");
    let zero = [0i64; 2];
    let mut out = [0i64; 2];
    let word = [5usize];
    let s = unsafe { lc_dot_word(a2, word.as_ptr(), 1, zero.as_ptr(), out.as_mut_ptr(), 2) };
    assert_ne!(s, LcStatus::Ok);
    assert!(!last_error().is_empty());
    unsafe { lc_rootsys_free(a2) };
}

#[test]
fn typec_bounds() {
    let mut b = LcBound::default();
    assert_eq!(unsafe { lc_typec_h2(12, 3, 6, &mut b) }, LcStatus::Ok);
    assert!(b.lower <= 1 && (b.upper == LC_UNBOUNDED || b.upper >= 1));
    assert_eq!(
        unsafe { lc_typec_h2(12, 2, 6, &mut b) },
        LcStatus::Precondition
    );
}

#[test]
fn c_program_links_against_the_header() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    // target/<profile>/deps/<test binary> → target/<profile>
    let profile_dir = std::env::current_exe()
        .unwrap()
        .parent()
        .unwrap()
        .parent()
        .unwrap()
        .to_path_buf();
    let lib = profile_dir.join("libliecheck_ffi.a");
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    if !lib.exists() || Command::new(&cc).arg("--version").output().is_err() {
        eprintln!(
            "skipping: no C compiler or static library at {}",
            lib.display()
        );
        return;
    }
    let dir = tempfile::tempdir().unwrap();
    let exe = dir.path().join("smoke");
    let status = Command::new(&cc)
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
}
