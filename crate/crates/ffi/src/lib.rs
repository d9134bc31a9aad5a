//! C ABI over the liecheck core.
//!
//! Root systems are opaque handles. Every fallible call returns an [`LcStatus`]
//! and writes results through out-pointers; the message of the last failure on
//! the calling thread is available from [`lc_last_error`]. Panics never cross
//! the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use liecheck::linkage::{linked, linked_extended};
use liecheck::rootsys::{parse_type, RootSystem, Weight};
use liecheck::typec::{h2_fundamental, RuleProvider, UNBOUNDED};
use liecheck::Error;

/// Status codes returned by every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidType = 2,
    MalformedWeight = 3,
    NotARoot = 4,
    Precondition = 5,
    IterationCap = 6,
    Inconsistent = 7,
    Io = 8,
    BufferTooSmall = 9,
    InvalidUtf8 = 10,
    Panic = 11,
}

impl From<&Error> for LcStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::InvalidType { .. } => LcStatus::InvalidType,
            Error::MalformedWeight(_) => LcStatus::MalformedWeight,
            Error::NotARoot(_) => LcStatus::NotARoot,
            Error::Precondition(_) => LcStatus::Precondition,
            Error::IterationCap(_) => LcStatus::IterationCap,
            Error::Inconsistent(_) => LcStatus::Inconsistent,
            Error::Io(_) => LcStatus::Io,
        }
    }
}

/// Opaque root system handle.
pub struct LcRootSystem {
    inner: RootSystem,
}

/// Lower and upper bound on a cohomology dimension; `upper` is `UINT64_MAX`
/// when no upper bound is known.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LcBound {
    pub lower: u64,
    pub upper: u64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: LcStatus, msg: impl Into<String>) -> LcStatus {
    set_error(msg.into());
    status
}

/// Runs `f`, mapping errors and panics to status codes.
fn guard(f: impl FnOnce() -> Result<(), LcStatus>) -> LcStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => LcStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => fail(LcStatus::Panic, "internal panic"),
    }
}

fn lift<T>(r: liecheck::Result<T>) -> Result<T, LcStatus> {
    r.map_err(|e| fail(LcStatus::from(&e), e.to_string()))
}

fn non_null<T>(p: *const T, what: &str) -> Result<(), LcStatus> {
    if p.is_null() {
        Err(fail(LcStatus::NullPointer, format!("{what} is null")))
    } else {
        Ok(())
    }
}

/// # Safety
/// `p` must be null or point to `len` readable values.
unsafe fn read_weight(rs: &RootSystem, p: *const i64, len: usize) -> Result<Weight, LcStatus> {
    non_null(p, "weight")?;
    if len != rs.rank {
        return Err(fail(
            LcStatus::MalformedWeight,
            format!(
                "weight has {len} coordinates, {} expects {}",
                rs.name(),
                rs.rank
            ),
        ));
    }
    Ok(Weight::new(std::slice::from_raw_parts(p, len).to_vec()))
}

/// # Safety
/// `out` must be null or point to `len` writable values.
unsafe fn write_weight(w: &Weight, out: *mut i64, len: usize) -> Result<(), LcStatus> {
    non_null(out, "output buffer")?;
    if len < w.rank() {
        return Err(fail(
            LcStatus::BufferTooSmall,
            format!("need {} slots, got {len}", w.rank()),
        ));
    }
    ptr::copy_nonoverlapping(w.coords.as_ptr(), out, w.rank());
    Ok(())
}

/// # Safety
/// `rs` must be null or a live handle from [`lc_rootsys_new`].
unsafe fn handle<'a>(rs: *const LcRootSystem) -> Result<&'a RootSystem, LcStatus> {
    non_null(rs, "root system handle")?;
    Ok(&(*rs).inner)
}

/// Builds a root system from an identifier such as "E8" or "C12".
///
/// # Safety
/// `type_name` must be a NUL-terminated string and `out` a writable pointer.
/// The handle written to `out` must be released with [`lc_rootsys_free`].
#[no_mangle]
pub unsafe extern "C" fn lc_rootsys_new(
    type_name: *const c_char,
    out: *mut *mut LcRootSystem,
) -> LcStatus {
    guard(|| {
        non_null(type_name, "type name")?;
        non_null(out, "out")?;
        let name = CStr::from_ptr(type_name)
            .to_str()
            .map_err(|_| fail(LcStatus::InvalidUtf8, "type name is not UTF-8"))?;
        let (family, rank) = lift(parse_type(name))?;
        let inner = lift(RootSystem::new(family, rank))?;
        *out = Box::into_raw(Box::new(LcRootSystem { inner }));
        Ok(())
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `rs` must be null or a handle from [`lc_rootsys_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lc_rootsys_free(rs: *mut LcRootSystem) {
    if !rs.is_null() {
        drop(Box::from_raw(rs));
    }
}

/// Rank of the root system, or 0 for a null handle.
///
/// # Safety
/// `rs` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn lc_rootsys_rank(rs: *const LcRootSystem) -> usize {
    if rs.is_null() {
        0
    } else {
        (*rs).inner.rank
    }
}

/// Number of positive roots, or 0 for a null handle.
///
/// # Safety
/// `rs` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn lc_rootsys_positive_root_count(rs: *const LcRootSystem) -> usize {
    if rs.is_null() {
        0
    } else {
        (*rs).inner.positive_roots.len()
    }
}

/// Writes the highest long root (or the highest short root when `short_root`)
/// in fundamental-weight coordinates.
///
/// # Safety
/// `rs` must be a live handle and `out` must hold `len` values.
#[no_mangle]
pub unsafe extern "C" fn lc_rootsys_dominant_root(
    rs: *const LcRootSystem,
    short_root: bool,
    out: *mut i64,
    len: usize,
) -> LcStatus {
    guard(|| {
        let rs = handle(rs)?;
        let w = if short_root {
            &rs.highest_short
        } else {
            &rs.highest_long
        };
        write_weight(w, out, len)
    })
}

/// Dot action of a word of 1-based simple reflection labels (rightmost acts first).
///
/// # Safety
/// `rs` must be a live handle; `word` must hold `word_len` labels (it may be
/// null when `word_len` is 0); `lambda` and `out` must hold `len` values.
#[no_mangle]
pub unsafe extern "C" fn lc_dot_word(
    rs: *const LcRootSystem,
    word: *const usize,
    word_len: usize,
    lambda: *const i64,
    out: *mut i64,
    len: usize,
) -> LcStatus {
    guard(|| {
        let rs = handle(rs)?;
        let word = if word_len == 0 {
            Vec::new()
        } else {
            non_null(word, "word")?;
            std::slice::from_raw_parts(word, word_len).to_vec()
        };
        let lambda = read_weight(rs, lambda, len)?;
        let y = lift(rs.dot_word(&word, &lambda))?;
        write_weight(&y, out, len)
    })
}

/// Decides whether λ and μ are linked under W ⋉ pZΦ, or under W ⋉ pX(T) when
/// `extended` is set.
///
/// # Safety
/// `rs` must be a live handle; `lambda` and `mu` must hold `len` values and
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lc_linked(
    rs: *const LcRootSystem,
    lambda: *const i64,
    mu: *const i64,
    len: usize,
    p: i64,
    extended: bool,
    out: *mut bool,
) -> LcStatus {
    guard(|| {
        let rs = handle(rs)?;
        non_null(out, "out")?;
        let (l, m) = (read_weight(rs, lambda, len)?, read_weight(rs, mu, len)?);
        let v = if extended {
            lift(linked_extended(rs, &l, &m, p))?
        } else {
            lift(linked(rs, &l, &m, p))?
        };
        *out = v.linked;
        Ok(())
    })
}

/// Bounds on dim H²(G, L(ω_j)) for Sp_{2n} in characteristic p from the
/// rule-backed structure provider.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lc_typec_h2(n: usize, p: i64, j: usize, out: *mut LcBound) -> LcStatus {
    guard(|| {
        non_null(out, "out")?;
        let rep = lift(h2_fundamental(&RuleProvider, n, p, j))?;
        *out = LcBound {
            lower: rep.bound.lower,
            upper: rep.bound.upper,
        };
        Ok(())
    })
}

/// Copies the last error message of this thread into `buf`, NUL-terminated
/// and truncated to fit. Returns the full message length in bytes, or 0 when
/// there is no error.
///
/// # Safety
/// `buf` must be null or point to `len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn lc_last_error(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let e = e.borrow();
        let Some(msg) = e.as_ref() else { return 0 };
        let bytes = msg.as_bytes();
        if !buf.is_null() && len > 0 {
            let n = bytes.len().min(len - 1);
            ptr::copy_nonoverlapping(bytes.as_ptr().cast::<c_char>(), buf, n);
            *buf.add(n) = 0;
        }
        bytes.len()
    })
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn lc_status_str(status: LcStatus) -> *const c_char {
    let s: &'static str = match status {
        LcStatus::Ok => "ok\0",
        LcStatus::NullPointer => "null pointer\0",
        LcStatus::InvalidType => "invalid root system type\0",
        LcStatus::MalformedWeight => "malformed weight\0",
        LcStatus::NotARoot => "not a root\0",
        LcStatus::Precondition => "precondition violated\0",
        LcStatus::IterationCap => "iteration cap exceeded\0",
        LcStatus::Inconsistent => "inconsistent data\0",
        LcStatus::Io => "i/o error\0",
        LcStatus::BufferTooSmall => "buffer too small\0",
        LcStatus::InvalidUtf8 => "invalid UTF-8\0",
        LcStatus::Panic => "internal panic\0",
    };
    s.as_ptr().cast()
}

/// Marker for an unbounded [`LcBound::upper`].
pub const LC_UNBOUNDED: u64 = u64::MAX;

const _: () = assert!(LC_UNBOUNDED == UNBOUNDED);
