//! C ABI for `evenspan`.
//!
//! Graphs and trees are opaque heap handles released with their `_free`
//! function. Every fallible call returns an [`EvenspanStatus`]; on failure a
//! message is available from [`evenspan_last_error`] on the same thread.
//! Strings returned by the library are released with
//! [`evenspan_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use evenspan::graph::Multigraph;
use evenspan::io;
use evenspan::solver::{solve, BipartiteTree, SolveError, SolveOutcome};
use evenspan::verify::is_weakly_even_tree;

/// Opaque multigraph handle.
pub struct EvenspanGraph(Multigraph);

/// Opaque spanning tree handle.
pub struct EvenspanTree(BipartiteTree);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvenspanStatus {
    Ok = 0,
    /// The graph is regular bipartite, so no weakly even tree exists.
    NoSolution = 2,
    InvalidInput = 3,
    ContractFailure = 4,
    NullPointer = 5,
    BufferTooSmall = 6,
    Panic = 7,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl ToString) {
    let msg = CString::new(msg.to_string().replace('\0', " ")).expect("no interior NUL");
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn fail(status: EvenspanStatus, msg: impl ToString) -> EvenspanStatus {
    set_error(msg);
    status
}

fn guard(f: impl FnOnce() -> EvenspanStatus) -> EvenspanStatus {
    catch_unwind(AssertUnwindSafe(f))
        .unwrap_or_else(|_| fail(EvenspanStatus::Panic, "internal panic"))
}

fn solve_status(e: &SolveError) -> EvenspanStatus {
    match e {
        SolveError::Graph(_)
        | SolveError::InvalidLambda(_)
        | SolveError::NotTwoEdgeConnected(_) => EvenspanStatus::InvalidInput,
        _ => EvenspanStatus::ContractFailure,
    }
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s)
        .expect("JSON has no interior NUL")
        .into_raw()
}

/// Message describing the last failure on this thread; empty if none. The
/// pointer stays valid until the next failing call on this thread.
#[no_mangle]
pub extern "C" fn evenspan_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn evenspan_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// New graph with `vertex_count` vertices and no edges.
#[no_mangle]
pub extern "C" fn evenspan_graph_new(vertex_count: usize) -> *mut EvenspanGraph {
    Box::into_raw(Box::new(EvenspanGraph(Multigraph::new(vertex_count))))
}

/// Parses an edge list or graph JSON document into `*out`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn evenspan_graph_parse(
    text: *const c_char,
    out: *mut *mut EvenspanGraph,
) -> EvenspanStatus {
    guard(|| {
        if text.is_null() || out.is_null() {
            return fail(EvenspanStatus::NullPointer, "null argument");
        }
        *out = ptr::null_mut();
        let Ok(text) = CStr::from_ptr(text).to_str() else {
            return fail(EvenspanStatus::InvalidInput, "input is not UTF-8");
        };
        match io::parse_graph(text) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(EvenspanGraph(g)));
                EvenspanStatus::Ok
            }
            Err(e) => fail(EvenspanStatus::InvalidInput, e),
        }
    })
}

/// Releases a graph. Null is ignored.
///
/// # Safety
/// `g` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn evenspan_graph_free(g: *mut EvenspanGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Adds edge `{u, v}`, writing its id to `edge_out` when that is non-null.
///
/// # Safety
/// `g` must be a live graph handle; `edge_out` null or writable.
#[no_mangle]
pub unsafe extern "C" fn evenspan_graph_add_edge(
    g: *mut EvenspanGraph,
    u: usize,
    v: usize,
    edge_out: *mut usize,
) -> EvenspanStatus {
    guard(|| {
        let Some(g) = g.as_mut() else {
            return fail(EvenspanStatus::NullPointer, "null graph");
        };
        match g.0.add_edge(u, v) {
            Ok(e) => {
                if !edge_out.is_null() {
                    *edge_out = e;
                }
                EvenspanStatus::Ok
            }
            Err(e) => fail(EvenspanStatus::InvalidInput, e),
        }
    })
}

/// Number of vertices; 0 for null.
///
/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn evenspan_graph_vertex_count(g: *const EvenspanGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.vertex_count())
}

/// Number of edges; 0 for null.
///
/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn evenspan_graph_edge_count(g: *const EvenspanGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// Endpoints of edge `e`.
///
/// # Safety
/// `g` must be a live graph handle; `u` and `v` writable.
#[no_mangle]
pub unsafe extern "C" fn evenspan_graph_endpoints(
    g: *const EvenspanGraph,
    e: usize,
    u: *mut usize,
    v: *mut usize,
) -> EvenspanStatus {
    guard(|| {
        let (Some(g), false, false) = (g.as_ref(), u.is_null(), v.is_null()) else {
            return fail(EvenspanStatus::NullPointer, "null argument");
        };
        if e >= g.0.edge_count() {
            return fail(
                EvenspanStatus::InvalidInput,
                format!("edge {e} out of range"),
            );
        }
        (*u, *v) = g.0.endpoints(e);
        EvenspanStatus::Ok
    })
}

/// Builds a spanning weakly even (w, lambda)-tree into `*out`. Returns
/// `NoSolution` with `*out` null when the graph is regular bipartite.
///
/// # Safety
/// `g` must be a live graph handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn evenspan_solve(
    g: *const EvenspanGraph,
    w: usize,
    lambda: u8,
    out: *mut *mut EvenspanTree,
) -> EvenspanStatus {
    guard(|| {
        let (Some(g), false) = (g.as_ref(), out.is_null()) else {
            return fail(EvenspanStatus::NullPointer, "null argument");
        };
        *out = ptr::null_mut();
        match solve(&g.0, w, lambda) {
            Ok(SolveOutcome::Tree(t)) => {
                *out = Box::into_raw(Box::new(EvenspanTree(t)));
                EvenspanStatus::Ok
            }
            Ok(SolveOutcome::NoSolution { r, .. }) => fail(
                EvenspanStatus::NoSolution,
                format!("graph is {r}-regular bipartite"),
            ),
            Err(e) => fail(solve_status(&e), e),
        }
    })
}

/// As [`evenspan_solve`], writing the tree JSON (or the no-solution
/// certificate) to `*json_out`, to be released with [`evenspan_string_free`].
///
/// # Safety
/// `g` must be a live graph handle and `json_out` writable.
#[no_mangle]
pub unsafe extern "C" fn evenspan_solve_json(
    g: *const EvenspanGraph,
    w: usize,
    lambda: u8,
    json_out: *mut *mut c_char,
) -> EvenspanStatus {
    guard(|| {
        let (Some(g), false) = (g.as_ref(), json_out.is_null()) else {
            return fail(EvenspanStatus::NullPointer, "null argument");
        };
        *json_out = ptr::null_mut();
        match solve(&g.0, w, lambda) {
            Ok(SolveOutcome::Tree(t)) => match io::tree_to_json(&g.0, &t) {
                Ok(json) => {
                    *json_out = into_c_string(json);
                    EvenspanStatus::Ok
                }
                Err(e) => fail(EvenspanStatus::ContractFailure, e),
            },
            Ok(SolveOutcome::NoSolution { r, coloring }) => {
                *json_out = into_c_string(io::no_solution_to_json(r, &coloring));
                fail(
                    EvenspanStatus::NoSolution,
                    format!("graph is {r}-regular bipartite"),
                )
            }
            Err(e) => fail(solve_status(&e), e),
        }
    })
}

/// Releases a tree. Null is ignored.
///
/// # Safety
/// `t` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn evenspan_tree_free(t: *mut EvenspanTree) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Number of tree edges; 0 for null.
///
/// # Safety
/// `t` must be null or a live tree handle.
#[no_mangle]
pub unsafe extern "C" fn evenspan_tree_edge_count(t: *const EvenspanTree) -> usize {
    t.as_ref().map_or(0, |t| t.0.edges.len())
}

/// Copies the tree's edge ids (ascending) into `buf`, which must hold
/// [`evenspan_tree_edge_count`] entries.
///
/// # Safety
/// `t` must be a live tree handle and `buf` writable for `len` entries.
#[no_mangle]
pub unsafe extern "C" fn evenspan_tree_edges(
    t: *const EvenspanTree,
    buf: *mut usize,
    len: usize,
) -> EvenspanStatus {
    guard(|| {
        let (Some(t), false) = (t.as_ref(), buf.is_null()) else {
            return fail(EvenspanStatus::NullPointer, "null argument");
        };
        if len < t.0.edges.len() {
            return fail(
                EvenspanStatus::BufferTooSmall,
                format!("need {} entries", t.0.edges.len()),
            );
        }
        ptr::copy_nonoverlapping(t.0.edges.as_ptr(), buf, t.0.edges.len());
        EvenspanStatus::Ok
    })
}

/// Bipartition type (0 or 1) of vertex `v` in the tree.
///
/// # Safety
/// `t` must be a live tree handle and `type_out` writable.
#[no_mangle]
pub unsafe extern "C" fn evenspan_tree_vertex_type(
    t: *const EvenspanTree,
    v: usize,
    type_out: *mut u8,
) -> EvenspanStatus {
    guard(|| {
        let (Some(t), false) = (t.as_ref(), type_out.is_null()) else {
            return fail(EvenspanStatus::NullPointer, "null argument");
        };
        match t.0.types.get(v).copied().flatten() {
            Some(ty) => {
                *type_out = ty;
                EvenspanStatus::Ok
            }
            None => fail(
                EvenspanStatus::InvalidInput,
                format!("vertex {v} is not in the tree"),
            ),
        }
    })
}

/// Checks that `t` is a spanning weakly even tree of `g`.
///
/// # Safety
/// `g` and `t` must be live handles and `passed` writable.
#[no_mangle]
pub unsafe extern "C" fn evenspan_verify(
    g: *const EvenspanGraph,
    t: *const EvenspanTree,
    passed: *mut bool,
) -> EvenspanStatus {
    guard(|| {
        let (Some(g), Some(t), false) = (g.as_ref(), t.as_ref(), passed.is_null()) else {
            return fail(EvenspanStatus::NullPointer, "null argument");
        };
        let report = is_weakly_even_tree(&g.0, &t.0);
        *passed = report.passed;
        if let Some(v) = report.first_violation {
            set_error(format!("violated condition: {}", v.condition));
        }
        EvenspanStatus::Ok
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn evenspan_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
