use std::ffi::{CStr, CString};
use std::ptr;

use weylmin_ffi::*;

struct Handle(*mut WeylminRootSystem);

impl Handle {
    fn new(t: &str) -> Handle {
        let s = CString::new(t).unwrap();
        let mut h = ptr::null_mut();
        let st = unsafe { weylmin_root_system_new(s.as_ptr(), &mut h) };
        assert_eq!(st, WeylminStatus::Ok, "{t}");
        Handle(h)
    }
}

impl Drop for Handle {
    fn drop(&mut self) {
        unsafe { weylmin_root_system_free(self.0) }
    }
}

fn last_error() -> String {
    let p = weylmin_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn bad_type_string_names_token() {
    let s = CString::new("A2xH4").unwrap();
    let mut h = ptr::null_mut();
    let st = unsafe { weylmin_root_system_new(s.as_ptr(), &mut h) };
    assert_eq!(st, WeylminStatus::InvalidType);
    assert!(h.is_null());
    assert!(last_error().contains("H4"));
}

#[test]
fn null_arguments() {
    let mut v = 0usize;
    assert_eq!(unsafe { weylmin_ell_delta(ptr::null(), &mut v) }, WeylminStatus::NullPointer);
    assert_eq!(unsafe { weylmin_rank(ptr::null()) }, 0);
    unsafe { weylmin_root_system_free(ptr::null_mut()) };
}

#[test]
fn invariants() {
    for (t, rank, ell, sd) in [("A1", 1, 1, 1), ("G2", 2, 3, 3), ("A3", 3, 1, 2), ("F4", 4, 8, 8)] {
        let h = Handle::new(t);
        assert_eq!(unsafe { weylmin_rank(h.0) }, rank);
        let (mut a, mut b) = (0usize, 0usize);
        assert_eq!(unsafe { weylmin_ell_delta(h.0, &mut a) }, WeylminStatus::Ok);
        assert_eq!(unsafe { weylmin_ell_sd_delta(h.0, &mut b) }, WeylminStatus::Ok);
        assert_eq!((a, b), (ell, sd), "{t}");
    }
}

#[test]
fn ell_minus_and_witness_round_trip() {
    let h = Handle::new("G2");
    let rho = [1i64, 1];
    let mut value = 0usize;
    let mut word = [0u32; 16];
    let mut wlen = 0usize;
    let st = unsafe {
        weylmin_ell_minus(h.0, rho.as_ptr(), 0, rho.as_ptr(), 2, 0, &mut value, word.as_mut_ptr(), word.len(), &mut wlen)
    };
    assert_eq!(st, WeylminStatus::Ok);
    assert_eq!((value, wlen), (3, 3));
    let mut len = 0usize;
    let st = unsafe { weylmin_verify_witness(h.0, rho.as_ptr(), 0, rho.as_ptr(), 2, word.as_ptr(), wlen, &mut len) };
    assert_eq!(st, WeylminStatus::Ok);
    assert_eq!(len, 3);

    // Coweight pairing with rho-vee needs one more step.
    let st = unsafe {
        weylmin_ell_minus(h.0, rho.as_ptr(), 1, rho.as_ptr(), 2, 0, &mut value, ptr::null_mut(), 0, &mut wlen)
    };
    assert_eq!(st, WeylminStatus::Ok);
    assert_eq!(value, 4);

    let short = [1u32, 2];
    let st = unsafe { weylmin_verify_witness(h.0, rho.as_ptr(), 0, rho.as_ptr(), 2, short.as_ptr(), 2, &mut len) };
    assert_eq!(st, WeylminStatus::InvalidWitness);
}

#[test]
fn limit_and_bad_lengths() {
    let h = Handle::new("E6");
    let w = [0i64, 0, 0, 1, 0, 0];
    let mut value = 0usize;
    let st = unsafe { weylmin_ell_minus(h.0, w.as_ptr(), 0, w.as_ptr(), 6, 3, &mut value, ptr::null_mut(), 0, ptr::null_mut()) };
    assert_eq!(st, WeylminStatus::LimitExceeded);
    let st = unsafe { weylmin_ell_minus(h.0, w.as_ptr(), 0, w.as_ptr(), 5, 0, &mut value, ptr::null_mut(), 0, ptr::null_mut()) };
    assert_eq!(st, WeylminStatus::InvalidArgument);
    let bad = [7u32];
    let st = unsafe { weylmin_verify_witness(h.0, w.as_ptr(), 0, w.as_ptr(), 6, bad.as_ptr(), 1, ptr::null_mut()) };
    assert_eq!(st, WeylminStatus::InvalidArgument);
}
