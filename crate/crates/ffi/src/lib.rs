//! C interface to the `listiso` solvers.
//!
//! Instances and results are opaque handles owned by the caller and released
//! with their `_free` function. Every fallible call returns a
//! [`ListIsoStatus`]; on failure [`listiso_last_error_message`] describes the
//! error for the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use listiso::dispatch::{classify_instance, solve_with, Engine};
use listiso::oracle::count_list_isos;
use listiso::{verify_list_iso, Error, Graph, ListInstance, SolveResult};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ListIsoStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    /// Invalid input or an engine called outside its class.
    Usage = 4,
    Internal = 5,
}

/// A validated instance.
pub struct ListIsoInstance(ListInstance);

/// A yes/no answer with its mapping.
pub struct ListIsoResult(SolveResult);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn fail(status: ListIsoStatus, msg: &str) -> ListIsoStatus {
    set_error(msg);
    status
}

fn from_error(e: &Error) -> ListIsoStatus {
    let status = match e {
        Error::Parse { .. } => ListIsoStatus::Parse,
        Error::Internal(_) => ListIsoStatus::Internal,
        _ => ListIsoStatus::Usage,
    };
    fail(status, &e.to_string())
}

fn guard(f: impl FnOnce() -> ListIsoStatus) -> ListIsoStatus {
    set_error("");
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(ListIsoStatus::Internal, "panic inside listiso"))
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, ListIsoStatus> {
    if p.is_null() {
        return Err(fail(ListIsoStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p).to_str().map_err(|_| fail(ListIsoStatus::InvalidUtf8, "string argument is not UTF-8"))
}

unsafe fn slice_arg<'a>(p: *const usize, len: usize) -> Result<&'a [usize], ListIsoStatus> {
    match (p.is_null(), len) {
        (_, 0) => Ok(&[]),
        (true, _) => Err(fail(ListIsoStatus::NullPointer, "null array argument")),
        (false, _) => Ok(slice::from_raw_parts(p, len)),
    }
}

/// Parses an instance from NUL-terminated JSON.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn listiso_instance_from_json(
    json: *const c_char,
    out: *mut *mut ListIsoInstance,
) -> ListIsoStatus {
    guard(|| {
        if out.is_null() {
            return fail(ListIsoStatus::NullPointer, "null output pointer");
        }
        let text = match str_arg(json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match listiso::io::parse_instance(text.as_bytes()) {
            Ok(inst) => {
                *out = Box::into_raw(Box::new(ListIsoInstance(inst)));
                ListIsoStatus::Ok
            }
            Err(e) => from_error(&e),
        }
    })
}

/// Builds an instance from flat arrays. Edges are `m` pairs stored as `2m`
/// consecutive entries. The list of G-vertex `u` is
/// `list_values[list_offsets[u]..list_offsets[u + 1]]`, so `list_offsets`
/// holds `ng + 1` entries.
///
/// # Safety
/// Every pointer must be valid for the stated length; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn listiso_instance_from_arrays(
    ng: usize,
    g_edges: *const usize,
    g_m: usize,
    nh: usize,
    h_edges: *const usize,
    h_m: usize,
    list_offsets: *const usize,
    list_values: *const usize,
    out: *mut *mut ListIsoInstance,
) -> ListIsoStatus {
    guard(|| {
        if out.is_null() || list_offsets.is_null() {
            return fail(ListIsoStatus::NullPointer, "null argument");
        }
        let build = || -> Result<ListInstance, ListIsoStatus> {
            let ge = slice_arg(g_edges, 2 * g_m)?;
            let he = slice_arg(h_edges, 2 * h_m)?;
            let offsets = slice_arg(list_offsets, ng + 1)?;
            if offsets.windows(2).any(|w| w[0] > w[1]) {
                return Err(fail(ListIsoStatus::Usage, "list offsets must be non-decreasing"));
            }
            let values = slice_arg(list_values, offsets[ng])?;
            let graph = |n, e: &[usize]| Graph::from_edges(n, e.chunks(2).map(|p| (p[0], p[1])));
            let g = graph(ng, ge).map_err(|e| from_error(&e))?;
            let h = graph(nh, he).map_err(|e| from_error(&e))?;
            let lists = offsets.windows(2).map(|w| values[w[0]..w[1]].to_vec()).collect();
            ListInstance::new(g, h, lists).map_err(|e| from_error(&e))
        };
        match build() {
            Ok(inst) => {
                *out = Box::into_raw(Box::new(ListIsoInstance(inst)));
                ListIsoStatus::Ok
            }
            Err(s) => s,
        }
    })
}

/// # Safety
/// `inst` must come from this library and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn listiso_instance_free(inst: *mut ListIsoInstance) {
    if !inst.is_null() {
        drop(Box::from_raw(inst));
    }
}

/// Decides an instance. `algo` names an engine (`oracle`, `lists2`, `deg2`,
/// `tree`, `interval`, `treewidth`) or is `auto`/null for automatic choice.
/// `k` is the width bound for `treewidth`; pass a negative value for none.
///
/// # Safety
/// `inst` must be a live handle, `algo` null or NUL-terminated, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn listiso_solve(
    inst: *const ListIsoInstance,
    algo: *const c_char,
    k: i64,
    out: *mut *mut ListIsoResult,
) -> ListIsoStatus {
    guard(|| {
        if inst.is_null() || out.is_null() {
            return fail(ListIsoStatus::NullPointer, "null argument");
        }
        let inst = &(*inst).0;
        let engine = if algo.is_null() {
            classify_instance(inst)
        } else {
            match str_arg(algo) {
                Ok("auto") => classify_instance(inst),
                Ok(name) => match name.parse::<Engine>() {
                    Ok(e) => e,
                    Err(e) => return from_error(&e),
                },
                Err(s) => return s,
            }
        };
        let k = usize::try_from(k).ok();
        match solve_with(inst, engine, k) {
            Ok(r) => {
                *out = Box::into_raw(Box::new(ListIsoResult(r)));
                ListIsoStatus::Ok
            }
            Err(e) => from_error(&e),
        }
    })
}

/// # Safety
/// `res` must be a live result handle or null (reported as no).
#[no_mangle]
pub unsafe extern "C" fn listiso_result_is_yes(res: *const ListIsoResult) -> bool {
    !res.is_null() && (*res).0.is_yes()
}

/// Length of the mapping; 0 for a no answer.
///
/// # Safety
/// `res` must be a live result handle or null.
#[no_mangle]
pub unsafe extern "C" fn listiso_result_mapping_len(res: *const ListIsoResult) -> usize {
    if res.is_null() {
        return 0;
    }
    (*res).0.mapping().map_or(0, |m| m.len())
}

/// Copies the mapping into `buf`, which must hold at least
/// [`listiso_result_mapping_len`] entries.
///
/// # Safety
/// `res` must be live and `buf` valid for `len` writes.
#[no_mangle]
pub unsafe extern "C" fn listiso_result_mapping(
    res: *const ListIsoResult,
    buf: *mut usize,
    len: usize,
) -> ListIsoStatus {
    guard(|| {
        if res.is_null() {
            return fail(ListIsoStatus::NullPointer, "null result");
        }
        let Some(m) = (*res).0.mapping() else {
            return fail(ListIsoStatus::Usage, "a no answer has no mapping");
        };
        if len < m.len() {
            return fail(ListIsoStatus::Usage, &format!("buffer holds {len} entries, mapping has {}", m.len()));
        }
        if !m.is_empty() {
            if buf.is_null() {
                return fail(ListIsoStatus::NullPointer, "null buffer");
            }
            ptr::copy_nonoverlapping(m.as_ptr(), buf, m.len());
        }
        ListIsoStatus::Ok
    })
}

/// # Safety
/// `res` must come from this library and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn listiso_result_free(res: *mut ListIsoResult) {
    if !res.is_null() {
        drop(Box::from_raw(res));
    }
}

/// Checks `mapping` (of length `len`) against the instance.
///
/// # Safety
/// `inst` must be live, `mapping` valid for `len` reads, `valid` writable.
#[no_mangle]
pub unsafe extern "C" fn listiso_verify(
    inst: *const ListIsoInstance,
    mapping: *const usize,
    len: usize,
    valid: *mut bool,
) -> ListIsoStatus {
    guard(|| {
        if inst.is_null() || valid.is_null() {
            return fail(ListIsoStatus::NullPointer, "null argument");
        }
        match slice_arg(mapping, len) {
            Ok(m) => {
                *valid = verify_list_iso(&(*inst).0, m);
                ListIsoStatus::Ok
            }
            Err(s) => s,
        }
    })
}

/// Counts list-compatible isomorphisms by exhaustive search.
///
/// # Safety
/// `inst` must be live and `count` writable.
#[no_mangle]
pub unsafe extern "C" fn listiso_count(inst: *const ListIsoInstance, count: *mut u64) -> ListIsoStatus {
    guard(|| {
        if inst.is_null() || count.is_null() {
            return fail(ListIsoStatus::NullPointer, "null argument");
        }
        *count = count_list_isos(&(*inst).0);
        ListIsoStatus::Ok
    })
}

/// Message of the last failed call on this thread; empty after a success.
/// Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn listiso_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}
