//! C interface to `tw-approx`.
//!
//! Graphs and decompositions are opaque handles owned by the caller and
//! released with the matching `*_free` function. Every fallible call
//! returns a `TwStatus`; on failure a description is available from
//! `tw_last_error_message` on the same thread until the next failing call.
//! Vertex ids are 0-based.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use tw_approx::io::{emit_decomposition, parse_graph};
use tw_approx::validate::{check_tree_decomposition, exact_treewidth};
use tw_approx::{decompose, Algorithm, Alpha, Graph, Mode, TreeDecomposition, TriangOutcome};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    /// The algorithm certified that the treewidth is at least `k`.
    Exceeds = 4,
    /// A decomposition failed validation.
    Invalid = 5,
    /// An internal error; the library state is unaffected.
    Internal = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwAlgorithm {
    Rs4 = 0,
    Half45 = 1,
    Bg367 = 2,
    MinDegree = 3,
    Generic = 4,
}

/// Options of `tw_decompose`; start from `tw_options_default()`.
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct TwOptions {
    /// A `TwAlgorithm` value.
    pub algorithm: u32,
    /// Fixed `k`, or 0 to search for the smallest `k` that succeeds.
    pub k: u32,
    /// Non-zero to grow the padding set gradually (search only).
    pub adaptive: u8,
    pub alpha_num: u32,
    pub alpha_den: u32,
}

/// Opaque graph handle.
pub struct TwGraph(Graph);

/// Opaque decomposition handle.
pub struct TwDecomposition {
    td: TreeDecomposition,
    n: usize,
    k_used: u32,
    bags: Vec<Vec<u32>>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: TwStatus, msg: impl Into<String>) -> TwStatus {
    set_error(msg);
    status
}

fn guard(body: impl FnOnce() -> TwStatus) -> TwStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(s) => s,
        Err(p) => {
            let what = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            fail(TwStatus::Internal, format!("internal error: {what}"))
        }
    }
}

/// Message of the last failing call on this thread, or null. The pointer is
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn tw_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

#[no_mangle]
pub extern "C" fn tw_options_default() -> TwOptions {
    TwOptions {
        algorithm: TwAlgorithm::Bg367 as u32,
        k: 0,
        adaptive: 0,
        alpha_num: 4,
        alpha_den: 3,
    }
}

/// Builds a graph on `n` vertices from `m` edges given as `2m` consecutive
/// endpoint ids. Self-loops and duplicates are ignored.
#[no_mangle]
pub unsafe extern "C" fn tw_graph_new(n: usize, edges: *const u32, m: usize, out: *mut *mut TwGraph) -> TwStatus {
    guard(|| {
        if out.is_null() || (edges.is_null() && m > 0) {
            return fail(TwStatus::NullPointer, "null pointer argument");
        }
        let flat: &[u32] = if m == 0 {
            &[]
        } else {
            // SAFETY: the caller provides 2m readable ids.
            unsafe { std::slice::from_raw_parts(edges, 2 * m) }
        };
        let pairs = flat.chunks_exact(2).map(|p| (p[0] as usize, p[1] as usize));
        match Graph::from_edges(n, pairs) {
            Ok(g) => {
                // SAFETY: checked non-null above.
                unsafe { *out = Box::into_raw(Box::new(TwGraph(g))) };
                TwStatus::Ok
            }
            Err(e) => fail(TwStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// Parses a PACE `.gr` document (NUL-terminated UTF-8).
#[no_mangle]
pub unsafe extern "C" fn tw_graph_parse(text: *const c_char, out: *mut *mut TwGraph) -> TwStatus {
    guard(|| {
        if text.is_null() || out.is_null() {
            return fail(TwStatus::NullPointer, "null pointer argument");
        }
        // SAFETY: the caller passes a NUL-terminated string.
        let Ok(text) = unsafe { CStr::from_ptr(text) }.to_str() else {
            return fail(TwStatus::Parse, "input is not valid UTF-8");
        };
        match parse_graph(text) {
            Ok(p) => {
                // SAFETY: checked non-null above.
                unsafe { *out = Box::into_raw(Box::new(TwGraph(p.graph))) };
                TwStatus::Ok
            }
            Err(e) => fail(TwStatus::Parse, e.to_string()),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn tw_graph_free(g: *mut TwGraph) {
    if !g.is_null() {
        // SAFETY: `g` came from `Box::into_raw` in this library.
        drop(unsafe { Box::from_raw(g) });
    }
}

/// Vertex count, or 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn tw_graph_vertex_count(g: *const TwGraph) -> usize {
    // SAFETY: null or a live handle.
    unsafe { g.as_ref() }.map_or(0, |g| g.0.n())
}

/// Edge count after removing loops and duplicates, or 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn tw_graph_edge_count(g: *const TwGraph) -> usize {
    // SAFETY: null or a live handle.
    unsafe { g.as_ref() }.map_or(0, |g| g.0.m())
}

fn algorithm(o: &TwOptions) -> Result<Algorithm, String> {
    let alpha = Alpha::new(o.alpha_num as usize, o.alpha_den as usize)
        .ok_or_else(|| format!("alpha must be a rational >= 1, got {}/{}", o.alpha_num, o.alpha_den))?;
    const RS4: u32 = TwAlgorithm::Rs4 as u32;
    const HALF45: u32 = TwAlgorithm::Half45 as u32;
    const BG367: u32 = TwAlgorithm::Bg367 as u32;
    const MIN_DEGREE: u32 = TwAlgorithm::MinDegree as u32;
    const GENERIC: u32 = TwAlgorithm::Generic as u32;
    Ok(match o.algorithm {
        RS4 => Algorithm::Rs4,
        HALF45 => Algorithm::Half45,
        BG367 => Algorithm::Bg367(alpha),
        MIN_DEGREE => Algorithm::MinDegree,
        GENERIC => Algorithm::Generic(alpha),
        other => return Err(format!("unknown algorithm {other}")),
    })
}

/// Triangulates `g`. On `TW_STATUS_EXCEEDS` nothing is written to `out` and
/// the message states the certified bound.
#[no_mangle]
pub unsafe extern "C" fn tw_decompose(
    g: *const TwGraph,
    options: *const TwOptions,
    out: *mut *mut TwDecomposition,
) -> TwStatus {
    guard(|| {
        // SAFETY: null or live pointers supplied by the caller.
        let (Some(g), Some(o)) = (unsafe { g.as_ref() }, unsafe { options.as_ref() }) else {
            return fail(TwStatus::NullPointer, "null pointer argument");
        };
        if out.is_null() {
            return fail(TwStatus::NullPointer, "null pointer argument");
        }
        let algo = match algorithm(o) {
            Ok(a) => a,
            Err(e) => return fail(TwStatus::InvalidArgument, e),
        };
        let mode = match (o.k, o.adaptive != 0) {
            (0, false) => Mode::Search,
            (0, true) => Mode::Adaptive,
            (_, true) => return fail(TwStatus::InvalidArgument, "adaptive mode needs k = 0"),
            (k, false) => Mode::Fixed(k as usize),
        };
        let d = decompose(&g.0, algo, mode);
        match d.outcome {
            TriangOutcome::Success(_, td) => {
                let bags = td.bags.iter().map(|b| b.iter().map(|v| v as u32).collect()).collect();
                let handle = TwDecomposition {
                    n: g.0.n(),
                    k_used: d.k_used.unwrap_or(0) as u32,
                    td,
                    bags,
                };
                // SAFETY: checked non-null above.
                unsafe { *out = Box::into_raw(Box::new(handle)) };
                TwStatus::Ok
            }
            TriangOutcome::Exceeds(k) => fail(TwStatus::Exceeds, format!("the treewidth exceeds {}", k - 1)),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn tw_decomposition_free(d: *mut TwDecomposition) {
    if !d.is_null() {
        // SAFETY: `d` came from `Box::into_raw` in this library.
        drop(unsafe { Box::from_raw(d) });
    }
}

/// Width (largest bag size minus one), or 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn tw_decomposition_width(d: *const TwDecomposition) -> usize {
    // SAFETY: null or a live handle.
    unsafe { d.as_ref() }.map_or(0, |d| d.td.width())
}

/// The `k` at which the decomposition was found (width + 1 for min-degree).
#[no_mangle]
pub unsafe extern "C" fn tw_decomposition_k_used(d: *const TwDecomposition) -> u32 {
    // SAFETY: null or a live handle.
    unsafe { d.as_ref() }.map_or(0, |d| d.k_used)
}

#[no_mangle]
pub unsafe extern "C" fn tw_decomposition_bag_count(d: *const TwDecomposition) -> usize {
    // SAFETY: null or a live handle.
    unsafe { d.as_ref() }.map_or(0, |d| d.bags.len())
}

/// Borrows bag `i` as a sorted id array owned by the handle.
#[no_mangle]
pub unsafe extern "C" fn tw_decomposition_bag(
    d: *const TwDecomposition,
    i: usize,
    vertices: *mut *const u32,
    len: *mut usize,
) -> TwStatus {
    // SAFETY: null or a live handle.
    let Some(d) = (unsafe { d.as_ref() }) else {
        return fail(TwStatus::NullPointer, "null pointer argument");
    };
    if vertices.is_null() || len.is_null() {
        return fail(TwStatus::NullPointer, "null pointer argument");
    }
    let Some(bag) = d.bags.get(i) else {
        return fail(TwStatus::InvalidArgument, format!("bag {i} out of range"));
    };
    // SAFETY: checked non-null above.
    unsafe {
        *vertices = bag.as_ptr();
        *len = bag.len();
    }
    TwStatus::Ok
}

/// Tree edges as `2 * count` bag indices written to `out`, which must hold
/// room for `2 * (bag_count - 1)` entries. Writes the edge count to `count`.
#[no_mangle]
pub unsafe extern "C" fn tw_decomposition_edges(
    d: *const TwDecomposition,
    out: *mut usize,
    count: *mut usize,
) -> TwStatus {
    // SAFETY: null or a live handle.
    let Some(d) = (unsafe { d.as_ref() }) else {
        return fail(TwStatus::NullPointer, "null pointer argument");
    };
    if count.is_null() || (out.is_null() && !d.td.edges.is_empty()) {
        return fail(TwStatus::NullPointer, "null pointer argument");
    }
    for (j, &(a, b)) in d.td.edges.iter().enumerate() {
        // SAFETY: the caller provides room for every edge.
        unsafe {
            *out.add(2 * j) = a;
            *out.add(2 * j + 1) = b;
        }
    }
    // SAFETY: checked non-null above.
    unsafe { *count = d.td.edges.len() };
    TwStatus::Ok
}

/// Checks the decomposition against `g`; `TW_STATUS_INVALID` lists the
/// violations in the error message.
#[no_mangle]
pub unsafe extern "C" fn tw_decomposition_validate(d: *const TwDecomposition, g: *const TwGraph) -> TwStatus {
    guard(|| {
        // SAFETY: null or live handles.
        let (Some(d), Some(g)) = (unsafe { d.as_ref() }, unsafe { g.as_ref() }) else {
            return fail(TwStatus::NullPointer, "null pointer argument");
        };
        match check_tree_decomposition(&g.0, &d.td) {
            Ok(()) => TwStatus::Ok,
            Err(vs) => fail(
                TwStatus::Invalid,
                vs.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "),
            ),
        }
    })
}

/// PACE `.td` text of the decomposition; release with `tw_string_free`.
/// Null for a null handle.
#[no_mangle]
pub unsafe extern "C" fn tw_decomposition_to_pace(d: *const TwDecomposition) -> *mut c_char {
    // SAFETY: null or a live handle.
    let Some(d) = (unsafe { d.as_ref() }) else {
        set_error("null pointer argument");
        return ptr::null_mut();
    };
    CString::new(emit_decomposition(&d.td, d.n)).map_or(ptr::null_mut(), CString::into_raw)
}

#[no_mangle]
pub unsafe extern "C" fn tw_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: `s` came from `CString::into_raw` in this library.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Exact treewidth for graphs of at most 14 vertices.
#[no_mangle]
pub unsafe extern "C" fn tw_exact_treewidth(g: *const TwGraph, out: *mut u32) -> TwStatus {
    guard(|| {
        // SAFETY: null or a live handle.
        let Some(g) = (unsafe { g.as_ref() }) else {
            return fail(TwStatus::NullPointer, "null pointer argument");
        };
        if out.is_null() {
            return fail(TwStatus::NullPointer, "null pointer argument");
        }
        match exact_treewidth(&g.0) {
            Ok(w) => {
                // SAFETY: checked non-null above.
                unsafe { *out = w as u32 };
                TwStatus::Ok
            }
            Err(e) => fail(TwStatus::InvalidArgument, e.to_string()),
        }
    })
}
