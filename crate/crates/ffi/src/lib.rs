//! C ABI over the corebuilder solvers.
//!
//! Graphs and answers are opaque heap handles released with their `_free`
//! function. Vertex ids are 0-based. Every fallible call returns a
//! [`CbStatus`]; on failure [`cb_last_error`] describes the problem until the
//! next failing call on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use corebuilder::cli::{run_solver, Algo};
use corebuilder::io::parse_graph;
use corebuilder::sequences::erdos_gallai;
use corebuilder::{k_core, verify_certificate, Answer, Certificate, Error, Graph, Instance, Verdict};

pub const CB_ALGO_AUTO: u32 = 0;
pub const CB_ALGO_FOREST: u32 = 1;
pub const CB_ALGO_TREEWIDTH: u32 = 2;
pub const CB_ALGO_VC: u32 = 3;
pub const CB_ALGO_ORACLE: u32 = 4;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CbStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    Parse = 3,
    InvalidDecomposition = 4,
    Unsupported = 5,
    CapExceeded = 6,
    Internal = 7,
    Panic = 8,
}

/// Opaque graph handle.
pub struct CbGraph(Graph);

/// Opaque solver answer handle.
pub struct CbAnswer(Answer);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn fail(status: CbStatus, message: impl Into<String>) -> CbStatus {
    let text = CString::new(message.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(text));
    status
}

fn from_error(e: Error) -> CbStatus {
    let status = match e {
        Error::Parse { .. } => CbStatus::Parse,
        Error::InvalidInput(_) => CbStatus::InvalidInput,
        Error::InvalidDecomposition(_) => CbStatus::InvalidDecomposition,
        Error::Unsupported(_) => CbStatus::Unsupported,
        Error::CapExceeded(_) => CbStatus::CapExceeded,
        Error::Internal(_) => CbStatus::Internal,
    };
    fail(status, e.to_string())
}

fn guard(f: impl FnOnce() -> Result<(), CbStatus>) -> CbStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CbStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => fail(CbStatus::Panic, "panic inside corebuilder"),
    }
}

fn null() -> CbStatus {
    fail(CbStatus::NullPointer, "null pointer argument")
}

unsafe fn pairs<'a>(edges: *const usize, m: usize) -> Result<&'a [usize], CbStatus> {
    if m == 0 {
        return Ok(&[]);
    }
    if edges.is_null() {
        return Err(null());
    }
    Ok(std::slice::from_raw_parts(edges, 2 * m))
}

/// Message of the last failing call on this thread, or NULL. The pointer
/// stays valid until the next failing call on this thread.
#[no_mangle]
pub extern "C" fn cb_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Builds a graph on `n` vertices from `m` edges stored as `2 * m`
/// consecutive endpoint ids.
///
/// # Safety
/// `edges` must point to `2 * m` readable values unless `m == 0`; `out` must
/// be writable.
#[no_mangle]
pub unsafe extern "C" fn cb_graph_from_edges(n: usize, edges: *const usize, m: usize, out: *mut *mut CbGraph) -> CbStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let flat = pairs(edges, m)?;
        let g = Graph::from_edges(n, flat.chunks_exact(2).map(|e| (e[0], e[1]))).map_err(from_error)?;
        *out = Box::into_raw(Box::new(CbGraph(g)));
        Ok(())
    })
}

/// Parses a graph in the `p edge` text format.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cb_graph_parse(text: *const c_char, out: *mut *mut CbGraph) -> CbStatus {
    guard(|| {
        if text.is_null() || out.is_null() {
            return Err(null());
        }
        let text = CStr::from_ptr(text).to_str().map_err(|_| fail(CbStatus::Parse, "graph text is not UTF-8"))?;
        let g = parse_graph(text).map_err(from_error)?;
        *out = Box::into_raw(Box::new(CbGraph(g)));
        Ok(())
    })
}

/// # Safety
/// `graph` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cb_graph_free(graph: *mut CbGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// # Safety
/// `graph` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn cb_graph_vertex_count(graph: *const CbGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.0.n())
}

/// # Safety
/// `graph` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn cb_graph_edge_count(graph: *const CbGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.0.m())
}

/// Writes the number of vertices in the k-core of `graph` to `out`.
///
/// # Safety
/// `graph` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cb_k_core_size(graph: *const CbGraph, k: usize, out: *mut usize) -> CbStatus {
    guard(|| {
        let (Some(g), false) = (graph.as_ref(), out.is_null()) else {
            return Err(null());
        };
        *out = k_core(&g.0, k).len();
        Ok(())
    })
}

/// Decides whether at most `b` added edges give a k-core of at least `p`
/// vertices, using one of the `CB_ALGO_*` solvers.
///
/// # Safety
/// `graph` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cb_solve(
    graph: *const CbGraph,
    k: usize,
    b: usize,
    p: usize,
    algo: u32,
    out: *mut *mut CbAnswer,
) -> CbStatus {
    guard(|| {
        let (Some(g), false) = (graph.as_ref(), out.is_null()) else {
            return Err(null());
        };
        let algo = match algo {
            CB_ALGO_AUTO => Algo::Auto,
            CB_ALGO_FOREST => Algo::Forest,
            CB_ALGO_TREEWIDTH => Algo::Treewidth,
            CB_ALGO_VC => Algo::Vc,
            CB_ALGO_ORACLE => Algo::Oracle,
            other => return Err(fail(CbStatus::InvalidInput, format!("unknown algorithm {other}"))),
        };
        let inst = Instance::new(g.0.clone(), k, b, p);
        let (_, answer) = run_solver(&inst, algo, None, usize::MAX).map_err(from_error)?;
        *out = Box::into_raw(Box::new(CbAnswer(answer)));
        Ok(())
    })
}

/// # Safety
/// `answer` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cb_answer_free(answer: *mut CbAnswer) {
    if !answer.is_null() {
        drop(Box::from_raw(answer));
    }
}

/// # Safety
/// `answer` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn cb_answer_feasible(answer: *const CbAnswer) -> bool {
    answer.as_ref().is_some_and(|a| a.0.feasible)
}

/// Number of edges the certificate adds; 0 for a no answer.
///
/// # Safety
/// `answer` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn cb_answer_edge_count(answer: *const CbAnswer) -> usize {
    answer.as_ref().map_or(0, |a| a.0.added())
}

/// Copies the added edges as `2 * cb_answer_edge_count` endpoint ids into
/// `buf`, which holds `capacity` values.
///
/// # Safety
/// `answer` must be a live handle; `buf` must hold `capacity` writable values.
#[no_mangle]
pub unsafe extern "C" fn cb_answer_edges(answer: *const CbAnswer, buf: *mut usize, capacity: usize) -> CbStatus {
    guard(|| {
        let a = answer.as_ref().ok_or_else(null)?;
        let edges = a.0.certificate.as_ref().map_or(&[][..], |c| &c.added_edges[..]);
        if capacity < 2 * edges.len() {
            return Err(fail(CbStatus::InvalidInput, format!("buffer holds {capacity} ids, need {}", 2 * edges.len())));
        }
        if edges.is_empty() {
            return Ok(());
        }
        if buf.is_null() {
            return Err(null());
        }
        let dst = std::slice::from_raw_parts_mut(buf, 2 * edges.len());
        for (i, &(u, v)) in edges.iter().enumerate() {
            dst[2 * i] = u;
            dst[2 * i + 1] = v;
        }
        Ok(())
    })
}

/// Size of the k-core after the certificate's edges; 0 for a no answer.
///
/// # Safety
/// `answer` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn cb_answer_core_size(answer: *const CbAnswer) -> usize {
    answer.as_ref().and_then(|a| a.0.certificate.as_ref()).map_or(0, |c| c.core_vertices.len())
}

/// Checks independently that adding the `m` given edges (at most `b`) yields
/// a k-core of at least `p` vertices. Writes the verdict to `valid`; when
/// rejected, [`cb_last_error`] holds the reason.
///
/// # Safety
/// `graph` must be a live handle; `edges` must point to `2 * m` readable
/// values unless `m == 0`; `valid` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cb_verify(
    graph: *const CbGraph,
    k: usize,
    b: usize,
    p: usize,
    edges: *const usize,
    m: usize,
    valid: *mut bool,
) -> CbStatus {
    guard(|| {
        let (Some(g), false) = (graph.as_ref(), valid.is_null()) else {
            return Err(null());
        };
        let flat = pairs(edges, m)?;
        let inst = Instance::new(g.0.clone(), k, b, p);
        let cert = Certificate::from_additions(&g.0, k, flat.chunks_exact(2).map(|e| (e[0], e[1])).collect());
        *valid = match verify_certificate(&inst, &cert) {
            Verdict::Accepted { .. } => true,
            Verdict::Rejected(why) => {
                fail(CbStatus::Ok, why);
                false
            }
        };
        Ok(())
    })
}

/// Writes whether the non-increasing sequence `degrees[0..len]` is graphic.
///
/// # Safety
/// `degrees` must point to `len` readable values unless `len == 0`; `out`
/// must be writable.
#[no_mangle]
pub unsafe extern "C" fn cb_erdos_gallai(degrees: *const usize, len: usize, out: *mut bool) -> CbStatus {
    guard(|| {
        if out.is_null() || (len > 0 && degrees.is_null()) {
            return Err(null());
        }
        let d = if len == 0 { &[][..] } else { std::slice::from_raw_parts(degrees, len) };
        *out = erdos_gallai(d).map_err(from_error)?;
        Ok(())
    })
}
