//! C ABI over `weylmin`.
//!
//! Handles are opaque; every call returns a `WeylminStatus`. On failure the
//! message is kept per thread and read with `weylmin_last_error`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use weylmin::ell::{check_witness, ell_delta, ell_minus, ell_minus_coweight, ell_sd_delta, EllOutcome, Pairing};
use weylmin::{Coweight, Error, RootSystem, Weight, WeylWord};

/// Status codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeylminStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidType = 2,
    InvalidArgument = 3,
    /// The search ran to the depth limit without finding an element.
    LimitExceeded = 4,
    /// A witness failed verification.
    InvalidWitness = 5,
    Panic = 99,
}

/// Opaque root system.
pub struct WeylminRootSystem {
    rs: RootSystem,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let s = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(s).ok());
}

fn fail(status: WeylminStatus, msg: impl Into<String>) -> WeylminStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> WeylminStatus {
    let status = match e {
        Error::InvalidTypeString { .. } => WeylminStatus::InvalidType,
        _ => WeylminStatus::InvalidArgument,
    };
    fail(status, e.to_string())
}

fn guard(f: impl FnOnce() -> WeylminStatus) -> WeylminStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(WeylminStatus::Panic, "internal panic"))
}

unsafe fn system_ref<'a>(h: *const WeylminRootSystem) -> Result<&'a RootSystem, WeylminStatus> {
    h.as_ref().map(|h| &h.rs).ok_or_else(|| fail(WeylminStatus::NullPointer, "null root system handle"))
}

unsafe fn coords(rs: &RootSystem, p: *const i64, len: usize, what: &str) -> Result<Vec<i64>, WeylminStatus> {
    if p.is_null() {
        return Err(fail(WeylminStatus::NullPointer, format!("null {what}")));
    }
    if len != rs.rank() {
        return Err(fail(WeylminStatus::InvalidArgument, format!("{what} has length {len}, rank is {}", rs.rank())));
    }
    Ok(std::slice::from_raw_parts(p, len).to_vec())
}

unsafe fn out<T>(p: *mut T, v: T) {
    if !p.is_null() {
        *p = v;
    }
}

/// Last error message on this thread, or NULL. Valid until the next failing call.
#[no_mangle]
pub extern "C" fn weylmin_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn weylmin_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Build a root system from a type string such as "E6" or "A2xB3".
///
/// # Safety
/// `type_string` must be NUL-terminated; `out_handle` must be writable.
#[no_mangle]
pub unsafe extern "C" fn weylmin_root_system_new(
    type_string: *const c_char,
    out_handle: *mut *mut WeylminRootSystem,
) -> WeylminStatus {
    guard(|| {
        if type_string.is_null() || out_handle.is_null() {
            return fail(WeylminStatus::NullPointer, "null argument");
        }
        let Ok(s) = CStr::from_ptr(type_string).to_str() else {
            return fail(WeylminStatus::InvalidType, "type string is not UTF-8");
        };
        match RootSystem::from_type_string(s) {
            Ok(rs) => {
                *out_handle = Box::into_raw(Box::new(WeylminRootSystem { rs }));
                WeylminStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Release a handle. NULL is ignored.
///
/// # Safety
/// `handle` must come from `weylmin_root_system_new` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn weylmin_root_system_free(handle: *mut WeylminRootSystem) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Rank, or 0 for NULL.
///
/// # Safety
/// `handle` must be NULL or valid.
#[no_mangle]
pub unsafe extern "C" fn weylmin_rank(handle: *const WeylminRootSystem) -> usize {
    handle.as_ref().map_or(0, |h| h.rs.rank())
}

/// Number of positive roots, or 0 for NULL.
///
/// # Safety
/// `handle` must be NULL or valid.
#[no_mangle]
pub unsafe extern "C" fn weylmin_num_positive_roots(handle: *const WeylminRootSystem) -> usize {
    handle.as_ref().map_or(0, |h| h.rs.num_positive_roots())
}

/// ℓ_Δ.
///
/// # Safety
/// `handle` valid; `out_value` writable.
#[no_mangle]
pub unsafe extern "C" fn weylmin_ell_delta(handle: *const WeylminRootSystem, out_value: *mut usize) -> WeylminStatus {
    guard(|| {
        let rs = match system_ref(handle) {
            Ok(r) => r,
            Err(s) => return s,
        };
        if out_value.is_null() {
            return fail(WeylminStatus::NullPointer, "null out_value");
        }
        match ell_delta(rs) {
            Ok(a) => {
                *out_value = a.value;
                WeylminStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// ℓ^sd_Δ.
///
/// # Safety
/// `handle` valid; `out_value` writable.
#[no_mangle]
pub unsafe extern "C" fn weylmin_ell_sd_delta(handle: *const WeylminRootSystem, out_value: *mut usize) -> WeylminStatus {
    guard(|| {
        let rs = match system_ref(handle) {
            Ok(r) => r,
            Err(s) => return s,
        };
        if out_value.is_null() {
            return fail(WeylminStatus::NullPointer, "null out_value");
        }
        match ell_sd_delta(rs) {
            Ok(a) => {
                *out_value = a.value;
                WeylminStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// ℓ⁻_h(λ) with `h` and `lambda` in fundamental-weight coordinates (length = rank).
/// With `h_is_coweight` nonzero, `h` is read in fundamental-coweight coordinates.
/// `depth_limit` 0 means no limit. The witness word (1-based letters, rightmost
/// applied first) is copied into `out_word` when it fits in `word_capacity`;
/// `out_word_len` always receives its length.
///
/// # Safety
/// Pointers must be valid for the stated lengths; output pointers may be NULL.
#[no_mangle]
pub unsafe extern "C" fn weylmin_ell_minus(
    handle: *const WeylminRootSystem,
    h: *const i64,
    h_is_coweight: i32,
    lambda: *const i64,
    len: usize,
    depth_limit: usize,
    out_value: *mut usize,
    out_word: *mut u32,
    word_capacity: usize,
    out_word_len: *mut usize,
) -> WeylminStatus {
    guard(|| {
        let rs = match system_ref(handle) {
            Ok(r) => r,
            Err(s) => return s,
        };
        let (hc, lc) = match (coords(rs, h, len, "h"), coords(rs, lambda, len, "lambda")) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(s), _) | (_, Err(s)) => return s,
        };
        let limit = (depth_limit > 0).then_some(depth_limit);
        let res = if h_is_coweight != 0 {
            ell_minus_coweight(rs, &Coweight::new(hc), &Weight::new(lc), limit)
        } else {
            ell_minus(rs, &Weight::new(hc), &Weight::new(lc), limit)
        };
        match res {
            Ok(EllOutcome::Found(r)) => {
                out(out_value, r.value);
                let letters = r.witness.letters();
                out(out_word_len, letters.len());
                if !out_word.is_null() && letters.len() <= word_capacity {
                    for (i, &l) in letters.iter().enumerate() {
                        *out_word.add(i) = l as u32;
                    }
                }
                WeylminStatus::Ok
            }
            Ok(EllOutcome::ExceedsLimit { limit, .. }) => {
                fail(WeylminStatus::LimitExceeded, format!("no element within depth {limit}"))
            }
            Err(e) => from_error(e),
        }
    })
}

/// Check that `word` is reduced and turns the pairing of `lambda` with `h`
/// negative. Returns `WEYLMIN_STATUS_OK` for a valid witness and
/// `WEYLMIN_STATUS_INVALID_WITNESS` otherwise; `out_length` gets the length of
/// the group element.
///
/// # Safety
/// Pointers must be valid for the stated lengths; `out_length` may be NULL.
#[no_mangle]
pub unsafe extern "C" fn weylmin_verify_witness(
    handle: *const WeylminRootSystem,
    h: *const i64,
    h_is_coweight: i32,
    lambda: *const i64,
    len: usize,
    word: *const u32,
    word_len: usize,
    out_length: *mut usize,
) -> WeylminStatus {
    guard(|| {
        let rs = match system_ref(handle) {
            Ok(r) => r,
            Err(s) => return s,
        };
        let (hc, lc) = match (coords(rs, h, len, "h"), coords(rs, lambda, len, "lambda")) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(s), _) | (_, Err(s)) => return s,
        };
        if word.is_null() && word_len > 0 {
            return fail(WeylminStatus::NullPointer, "null word");
        }
        let letters: Vec<usize> =
            if word_len == 0 { Vec::new() } else { std::slice::from_raw_parts(word, word_len).iter().map(|&l| l as usize).collect() };
        let w = WeylWord::new(letters);
        let p = if h_is_coweight != 0 { Pairing::Coweight(Coweight::new(hc)) } else { Pairing::Weight(Weight::new(hc)) };
        match check_witness(rs, &p, &Weight::new(lc), &w) {
            Ok(c) => {
                out(out_length, c.length);
                if c.is_valid() {
                    WeylminStatus::Ok
                } else {
                    fail(
                        WeylminStatus::InvalidWitness,
                        format!("word has {} letters, length {}, pairing sign {}", c.letters, c.length, c.pairing_sign),
                    )
                }
            }
            Err(e) => from_error(e),
        }
    })
}
