//! C interface to `clusterqp`.
//!
//! Every fallible function returns a [`CqpStatus`]; on anything but
//! `CQP_STATUS_OK` the message is available from [`cqp_last_error_message`]
//! on the same thread. Strings handed out must be released with
//! [`cqp_string_free`], seeds with [`cqp_seed_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use clusterqp::catalog::{catalog_entry_by_name, verify_actions, verify_relations, verify_root_basis};
use clusterqp::io::{seed_from_json, word_from_text, SeedJson};
use clusterqp::lattice::{Seed, Sign};
use clusterqp::symbolic::{triviality, EvalOptions};
use clusterqp::toric::{classify_type, ToricSeedData};

/// Status codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CqpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidInput = 3,
    OutOfRange = 4,
    Computation = 5,
    BufferTooSmall = 6,
    Panic = 7,
}

/// Opaque seed handle.
pub struct CqpSeed {
    seed: Seed,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let s = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(s));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn fail(status: CqpStatus, msg: impl Into<String>) -> CqpStatus {
    set_error(msg);
    status
}

fn guard(f: impl FnOnce() -> CqpStatus) -> CqpStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            fail(CqpStatus::Panic, msg)
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, CqpStatus> {
    if p.is_null() {
        return Err(fail(CqpStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| fail(CqpStatus::InvalidUtf8, e.to_string()))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> CqpStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            CqpStatus::Ok
        }
        Err(e) => fail(CqpStatus::Computation, e.to_string()),
    }
}

/// Message for the last failing call on this thread, or NULL. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn cqp_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Release a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn cqp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Build a seed from its JSON form.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cqp_seed_from_json(json: *const c_char, out: *mut *mut CqpSeed) -> CqpStatus {
    guard(|| {
        if out.is_null() {
            return fail(CqpStatus::NullPointer, "null output");
        }
        let text = match read_str(json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match seed_from_json(text) {
            Ok(seed) => {
                *out = Box::into_raw(Box::new(CqpSeed { seed }));
                CqpStatus::Ok
            }
            Err(e) => fail(CqpStatus::InvalidInput, e.to_string()),
        }
    })
}

/// Release a seed. NULL is ignored.
///
/// # Safety
/// `seed` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn cqp_seed_free(seed: *mut CqpSeed) {
    if !seed.is_null() {
        drop(Box::from_raw(seed));
    }
}

/// # Safety
/// `seed` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cqp_seed_rank(seed: *const CqpSeed, out: *mut usize) -> CqpStatus {
    guard(|| {
        if seed.is_null() || out.is_null() {
            return fail(CqpStatus::NullPointer, "null argument");
        }
        *out = (*seed).seed.rank();
        CqpStatus::Ok
    })
}

/// Mutate at direction `k` (zero-based) with sign `+1` or `-1`, producing a new seed.
///
/// # Safety
/// `seed` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cqp_seed_mutate(
    seed: *const CqpSeed,
    k: usize,
    sign: i32,
    out: *mut *mut CqpSeed,
) -> CqpStatus {
    guard(|| {
        if seed.is_null() || out.is_null() {
            return fail(CqpStatus::NullPointer, "null argument");
        }
        let s = &(*seed).seed;
        if k >= s.rank() {
            return fail(CqpStatus::OutOfRange, format!("direction {k} out of range"));
        }
        let sign = match sign {
            1 => Sign::Plus,
            -1 => Sign::Minus,
            _ => return fail(CqpStatus::InvalidInput, format!("sign must be 1 or -1, got {sign}")),
        };
        match s.mutate_at(k, sign) {
            Ok(t) => {
                *out = Box::into_raw(Box::new(CqpSeed { seed: t }));
                CqpStatus::Ok
            }
            Err(e) => fail(CqpStatus::Computation, e.to_string()),
        }
    })
}

/// Copy the exchange matrix, row-major, into `buf` of `len` entries (at least rank²).
///
/// # Safety
/// `seed` must be a live handle and `buf` must hold `len` writable values.
#[no_mangle]
pub unsafe extern "C" fn cqp_seed_exchange_matrix(
    seed: *const CqpSeed,
    buf: *mut i64,
    len: usize,
) -> CqpStatus {
    guard(|| {
        if seed.is_null() || buf.is_null() {
            return fail(CqpStatus::NullPointer, "null argument");
        }
        let s = &(*seed).seed;
        let n = s.rank();
        if len < n * n {
            return fail(CqpStatus::BufferTooSmall, format!("need {} entries", n * n));
        }
        let rows = s.exchange_matrix().to_rows_i64();
        let out = std::slice::from_raw_parts_mut(buf, n * n);
        for (i, r) in rows.iter().enumerate() {
            out[i * n..(i + 1) * n].copy_from_slice(r);
        }
        CqpStatus::Ok
    })
}

/// JSON form of a seed; free the result with `cqp_string_free`.
///
/// # Safety
/// `seed` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cqp_seed_to_json(seed: *const CqpSeed, out: *mut *mut c_char) -> CqpStatus {
    guard(|| {
        if seed.is_null() || out.is_null() {
            return fail(CqpStatus::NullPointer, "null argument");
        }
        let j = serde_json::to_string(&SeedJson::from_seed(&(*seed).seed)).expect("serializable");
        write_string(out, j)
    })
}

/// Decide whether a word (JSON or composition notation) is a trivial cluster
/// transformation at `seed`. Writes 1 or 0 to `out`.
///
/// # Safety
/// `seed` must be a live handle, `word` NUL-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cqp_word_is_trivial(
    seed: *const CqpSeed,
    word: *const c_char,
    out: *mut i32,
) -> CqpStatus {
    guard(|| {
        if seed.is_null() || out.is_null() {
            return fail(CqpStatus::NullPointer, "null argument");
        }
        let text = match read_str(word) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let w = match word_from_text(&(*seed).seed, text) {
            Ok(w) => w,
            Err(e) => return fail(CqpStatus::InvalidInput, e.to_string()),
        };
        match triviality(&w, &EvalOptions::default()) {
            Ok(v) => {
                *out = i32::from(v.is_trivial());
                CqpStatus::Ok
            }
            Err(e) => fail(CqpStatus::Computation, e.to_string()),
        }
    })
}

/// Type label (e.g. `E5(1)`) of toric data `{"vectors": [[a, b], ..]}`.
///
/// # Safety
/// `json` must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cqp_classify_json(json: *const c_char, out: *mut *mut c_char) -> CqpStatus {
    guard(|| {
        if out.is_null() {
            return fail(CqpStatus::NullPointer, "null output");
        }
        let text = match read_str(json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let data: ToricSeedData = match serde_json::from_str(text) {
            Ok(d) => d,
            Err(e) => return fail(CqpStatus::InvalidInput, e.to_string()),
        };
        match classify_type(&data) {
            Ok(l) => write_string(out, l.to_string()),
            Err(e) => fail(CqpStatus::Computation, e.to_string()),
        }
    })
}

/// Run every catalog check for `label`. Writes the JSON report to `report`
/// (may be NULL) and 1 or 0 to `passed`.
///
/// # Safety
/// `label` must be NUL-terminated; `passed` writable; `report` NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn cqp_verify_label(
    label: *const c_char,
    report: *mut *mut c_char,
    passed: *mut i32,
) -> CqpStatus {
    guard(|| {
        if passed.is_null() {
            return fail(CqpStatus::NullPointer, "null output");
        }
        let name = match read_str(label) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let entry = match catalog_entry_by_name(name) {
            Ok(e) => e,
            Err(e) => return fail(CqpStatus::InvalidInput, e.to_string()),
        };
        let opts = EvalOptions::default();
        let mut rep = verify_root_basis(&entry);
        rep.extend(verify_relations(&entry, &opts));
        rep.extend(verify_actions(&entry, &opts));
        *passed = i32::from(rep.passed());
        if report.is_null() {
            return CqpStatus::Ok;
        }
        write_string(report, serde_json::to_string(&rep).expect("serializable"))
    })
}
