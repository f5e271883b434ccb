//! C ABI for the perfect-forest library.
//!
//! Graphs and forests are opaque handles created by `pf_*` constructors and
//! released with the matching `*_free` function. Every fallible call returns a
//! [`PfStatus`]; on failure a description is available from
//! [`pf_last_error_message`] on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use perfect_forest::gen::random_connected;
use perfect_forest::io::{parse_edge_list, write_forest, Format};
use perfect_forest::{enumerate_perfect_forests, verify_perfect_forest, Algorithm, Edge, Error, Forest, Graph};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidGraph = 2,
    Disconnected = 3,
    OddOrder = 4,
    ParseError = 5,
    VerificationFailed = 6,
    TooManyEdges = 7,
    InvalidArgument = 8,
    BufferTooSmall = 9,
    Internal = 10,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PfAlgorithm {
    Split = 0,
    Edge = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PfFormat {
    Edges = 0,
    Dot = 1,
}

/// Opaque graph handle.
pub struct PfGraph {
    graph: Graph,
}

/// Opaque forest handle. Keeps its own copy of the host graph.
pub struct PfForest {
    host: Graph,
    edges: Vec<Edge>,
    component_count: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn clear_last_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

fn status_of(err: &Error) -> PfStatus {
    match err {
        Error::Loop(_) | Error::DuplicateEdge(_) | Error::VertexOutOfRange { .. } | Error::NotATree => {
            PfStatus::InvalidGraph
        }
        Error::Disconnected => PfStatus::Disconnected,
        Error::OddOrder(_) => PfStatus::OddOrder,
        Error::Parse { .. } | Error::EmptyInput => PfStatus::ParseError,
        Error::Verification(_) => PfStatus::VerificationFailed,
        Error::TooManyEdges { .. } => PfStatus::TooManyEdges,
        Error::EmptyVertexSet
        | Error::AllOddTree
        | Error::TooSmall(_)
        | Error::Precondition(_)
        | Error::InvalidSpec(_) => PfStatus::InvalidArgument,
    }
}

/// Runs `body`, recording any error or panic as the thread's last error.
fn guard(body: impl FnOnce() -> Result<(), (PfStatus, String)>) -> PfStatus {
    clear_last_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => PfStatus::Ok,
        Ok(Err((status, message))) => {
            set_last_error(message);
            status
        }
        Err(_) => {
            set_last_error("internal panic".into());
            PfStatus::Internal
        }
    }
}

fn domain(err: Error) -> (PfStatus, String) {
    (status_of(&err), err.to_string())
}

fn null(what: &str) -> (PfStatus, String) {
    (PfStatus::NullPointer, format!("{what} is NULL"))
}

/// Reads `edge_count` pairs from a flat array `[a0, b0, a1, b1, ...]`.
///
/// # Safety
/// `pairs` must point to `2 * edge_count` readable `size_t` values, or may be
/// NULL when `edge_count` is 0.
unsafe fn read_pairs(pairs: *const usize, edge_count: usize) -> Result<Vec<(usize, usize)>, (PfStatus, String)> {
    if edge_count == 0 {
        return Ok(Vec::new());
    }
    if pairs.is_null() {
        return Err(null("pairs"));
    }
    let flat = std::slice::from_raw_parts(pairs, 2 * edge_count);
    Ok(flat.chunks_exact(2).map(|c| (c[0], c[1])).collect())
}

/// Builds a graph on `n` vertices from `edge_count` vertex pairs.
///
/// # Safety
/// `pairs` must point to `2 * edge_count` readable values; `out` must be a
/// valid pointer to write the new handle to.
#[no_mangle]
pub unsafe extern "C" fn pf_graph_from_edges(
    n: usize,
    pairs: *const usize,
    edge_count: usize,
    out: *mut *mut PfGraph,
) -> PfStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let pairs = read_pairs(pairs, edge_count)?;
        let graph = Graph::from_edges(n, pairs).map_err(domain)?;
        *out = Box::into_raw(Box::new(PfGraph { graph }));
        Ok(())
    })
}

/// Parses an edge-list text (`u v` per line, `#` comments).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pf_graph_parse(text: *const c_char, out: *mut *mut PfGraph) -> PfStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| (PfStatus::ParseError, "input is not UTF-8".to_string()))?;
        let graph = parse_edge_list(text).map_err(domain)?;
        *out = Box::into_raw(Box::new(PfGraph { graph }));
        Ok(())
    })
}

/// Seeded random connected graph with `n` vertices and `m` edges.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pf_graph_random_connected(n: usize, m: usize, seed: u64, out: *mut *mut PfGraph) -> PfStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let graph = random_connected(n, m, seed).map_err(domain)?;
        *out = Box::into_raw(Box::new(PfGraph { graph }));
        Ok(())
    })
}

/// # Safety
/// `graph` must be NULL or a handle from a `pf_graph_*` constructor that has
/// not been freed.
#[no_mangle]
pub unsafe extern "C" fn pf_graph_free(graph: *mut PfGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Number of vertices, or 0 for NULL.
///
/// # Safety
/// `graph` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pf_graph_vertex_count(graph: *const PfGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.graph.n())
}

/// Number of edges, or 0 for NULL.
///
/// # Safety
/// `graph` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pf_graph_edge_count(graph: *const PfGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.graph.m())
}

/// Computes a perfect forest with the chosen algorithm.
///
/// # Safety
/// `graph` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pf_find_forest(
    graph: *const PfGraph,
    algorithm: PfAlgorithm,
    out: *mut *mut PfForest,
) -> PfStatus {
    guard(|| {
        let graph = graph.as_ref().ok_or_else(|| null("graph"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let algorithm = match algorithm {
            PfAlgorithm::Split => Algorithm::Split,
            PfAlgorithm::Edge => Algorithm::Edge,
        };
        let forest = algorithm.run(&graph.graph).map_err(domain)?;
        let component_count = forest.components().len();
        let edges = forest.into_edges();
        *out = Box::into_raw(Box::new(PfForest { host: graph.graph.clone(), edges, component_count }));
        Ok(())
    })
}

/// # Safety
/// `forest` must be NULL or a live handle from [`pf_find_forest`].
#[no_mangle]
pub unsafe extern "C" fn pf_forest_free(forest: *mut PfForest) {
    if !forest.is_null() {
        drop(Box::from_raw(forest));
    }
}

/// # Safety
/// `forest` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pf_forest_edge_count(forest: *const PfForest) -> usize {
    forest.as_ref().map_or(0, |f| f.edges.len())
}

/// # Safety
/// `forest` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pf_forest_component_count(forest: *const PfForest) -> usize {
    forest.as_ref().map_or(0, |f| f.component_count)
}

/// Copies the forest edges, in lexicographic order, into `out_pairs` as
/// `[a0, b0, a1, b1, ...]` with `a < b`. `capacity` counts edges, not values.
///
/// # Safety
/// `forest` must be a live handle; `out_pairs` must have room for
/// `2 * capacity` values.
#[no_mangle]
pub unsafe extern "C" fn pf_forest_edges(forest: *const PfForest, out_pairs: *mut usize, capacity: usize) -> PfStatus {
    guard(|| {
        let forest = forest.as_ref().ok_or_else(|| null("forest"))?;
        if forest.edges.len() > capacity {
            return Err((
                PfStatus::BufferTooSmall,
                format!("forest has {} edges, buffer holds {capacity}", forest.edges.len()),
            ));
        }
        if forest.edges.is_empty() {
            return Ok(());
        }
        if out_pairs.is_null() {
            return Err(null("out_pairs"));
        }
        let out = std::slice::from_raw_parts_mut(out_pairs, 2 * forest.edges.len());
        for (slot, e) in out.chunks_exact_mut(2).zip(&forest.edges) {
            slot[0] = e.a();
            slot[1] = e.b();
        }
        Ok(())
    })
}

/// Renders the forest as text. The returned string must be released with
/// [`pf_string_free`]. Returns NULL on failure.
///
/// # Safety
/// `forest` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pf_forest_to_string(forest: *const PfForest, format: PfFormat) -> *mut c_char {
    let mut text = None;
    let status = guard(|| {
        let forest = forest.as_ref().ok_or_else(|| null("forest"))?;
        let view = Forest::new(&forest.host, forest.edges.clone()).map_err(domain)?;
        let format = match format {
            PfFormat::Edges => Format::Edges,
            PfFormat::Dot => Format::Dot,
        };
        text = Some(CString::new(write_forest(&view, format)).map_err(|e| (PfStatus::Internal, e.to_string()))?);
        Ok(())
    });
    match (status, text) {
        (PfStatus::Ok, Some(s)) => s.into_raw(),
        _ => ptr::null_mut(),
    }
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Checks an arbitrary edge list against the perfect-forest definition.
/// `*out_valid` receives the verdict; a returned status other than `Ok`
/// means the check itself could not run.
///
/// # Safety
/// `graph` must be a live handle; `pairs` must hold `2 * edge_count` values;
/// `out_valid` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pf_verify_forest(
    graph: *const PfGraph,
    pairs: *const usize,
    edge_count: usize,
    out_valid: *mut bool,
) -> PfStatus {
    guard(|| {
        let graph = graph.as_ref().ok_or_else(|| null("graph"))?;
        if out_valid.is_null() {
            return Err(null("out_valid"));
        }
        let edges: Vec<Edge> = read_pairs(pairs, edge_count)?.into_iter().map(Edge::from).collect();
        let verdict = verify_perfect_forest(&graph.graph, &edges);
        *out_valid = verdict.valid;
        if !verdict.valid {
            set_last_error(verdict.summary());
        }
        Ok(())
    })
}

/// Counts perfect forests by exhaustive enumeration (graphs with at most 24
/// edges).
///
/// # Safety
/// `graph` must be a live handle; `out_count` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pf_oracle_count(graph: *const PfGraph, out_count: *mut u64) -> PfStatus {
    guard(|| {
        let graph = graph.as_ref().ok_or_else(|| null("graph"))?;
        if out_count.is_null() {
            return Err(null("out_count"));
        }
        *out_count = enumerate_perfect_forests(&graph.graph, 0).map_err(domain)?.count;
        Ok(())
    })
}

/// Message for the most recent failure on this thread, or NULL. The pointer
/// stays valid until the next `pf_*` call on the same thread.
#[no_mangle]
pub extern "C" fn pf_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn pf_status_string(status: PfStatus) -> *const c_char {
    let s: &'static CStr = match status {
        PfStatus::Ok => c"ok",
        PfStatus::NullPointer => c"null pointer argument",
        PfStatus::InvalidGraph => c"invalid graph",
        PfStatus::Disconnected => c"graph is disconnected",
        PfStatus::OddOrder => c"odd number of vertices",
        PfStatus::ParseError => c"parse error",
        PfStatus::VerificationFailed => c"verification failed",
        PfStatus::TooManyEdges => c"too many edges for enumeration",
        PfStatus::InvalidArgument => c"invalid argument",
        PfStatus::BufferTooSmall => c"buffer too small",
        PfStatus::Internal => c"internal error",
    };
    s.as_ptr()
}
