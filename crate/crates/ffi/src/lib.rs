//! C ABI for `lapcert`.
//!
//! Graphs live behind the opaque [`LapcertGraph`] handle. Every fallible call
//! returns a [`LapcertStatus`] and writes its result through an out-pointer; on
//! failure a message is available from [`lapcert_last_error_message`] on the
//! same thread. Strings returned by the library must be released with
//! [`lapcert_string_free`], graphs with [`lapcert_graph_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use lapcert::matching::{factor_critical, maximum_matching};
use lapcert::spectra::spectrum;
use lapcert::structure::balloons;
use lapcert::verify::{GraphContext, TheoremId, VerifierCaps};
use lapcert::{Error, Graph};

/// Result codes shared by every function that can fail.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LapcertStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidGraph = 4,
    InvalidParameter = 5,
    Precondition = 6,
    NotConverged = 7,
    CapExceeded = 8,
    Internal = 9,
}

/// Opaque graph handle.
pub struct LapcertGraph {
    inner: Graph,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let message = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(message));
}

fn status_of(error: &Error) -> LapcertStatus {
    match error {
        Error::Graph6 { .. } | Error::EdgeList { .. } => LapcertStatus::ParseError,
        Error::InvalidGraph(_) | Error::InvalidTriple(_) => LapcertStatus::InvalidGraph,
        Error::InvalidParameter(_) => LapcertStatus::InvalidParameter,
        Error::Precondition(_) => LapcertStatus::Precondition,
        Error::NotConverged { .. } => LapcertStatus::NotConverged,
        Error::CapExceeded { .. } => LapcertStatus::CapExceeded,
        Error::Io(_) => LapcertStatus::Internal,
    }
}

/// Internal failure carrying the status to report.
struct Failure(LapcertStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(LapcertStatus::NullPointer, format!("{what} is null"))
}

/// Runs `body`, recording errors and turning panics into `Internal`.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> LapcertStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
            LapcertStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_last_error(message);
            status
        }
        Err(_) => {
            set_last_error("internal panic".into());
            LapcertStatus::Internal
        }
    }
}

unsafe fn read_str<'a>(text: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if text.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(text)
        .to_str()
        .map_err(|e| Failure(LapcertStatus::InvalidUtf8, format!("{what}: {e}")))
}

unsafe fn graph_ref<'a>(graph: *const LapcertGraph) -> Result<&'a Graph, Failure> {
    graph.as_ref().map(|g| &g.inner).ok_or_else(|| null("graph"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_graph(out: *mut *mut LapcertGraph, inner: Graph) -> Result<(), Failure> {
    write_out(out, Box::into_raw(Box::new(LapcertGraph { inner })))
}

unsafe fn write_json(out: *mut *mut c_char, value: &serde_json::Value) -> Result<(), Failure> {
    let text = CString::new(value.to_string()).map_err(|e| Failure(LapcertStatus::Internal, e.to_string()))?;
    write_out(out, text.into_raw())
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<serde_json::Value, Failure> {
    serde_json::to_value(value).map_err(|e| Failure(LapcertStatus::Internal, e.to_string()))
}

/// Parses one graph6 line.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lapcert_graph_from_graph6(
    text: *const c_char,
    out: *mut *mut LapcertGraph,
) -> LapcertStatus {
    guard(|| {
        let g = lapcert::graph::parse_graph6(read_str(text, "text")?)?;
        write_graph(out, g)
    })
}

/// Parses an edge list: a `n m` header followed by `m` lines `u v`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lapcert_graph_from_edge_list(
    text: *const c_char,
    out: *mut *mut LapcertGraph,
) -> LapcertStatus {
    guard(|| {
        let g = lapcert::graph::parse_edge_list(read_str(text, "text")?)?;
        write_graph(out, g)
    })
}

/// Builds a graph on `n` vertices from `m` edges stored as `2m` endpoints.
///
/// # Safety
/// `endpoints` must point to `2 * m` values (it may be null when `m == 0`).
#[no_mangle]
pub unsafe extern "C" fn lapcert_graph_new(
    n: usize,
    endpoints: *const usize,
    m: usize,
    out: *mut *mut LapcertGraph,
) -> LapcertStatus {
    guard(|| {
        let flat: &[usize] = if m == 0 {
            &[]
        } else if endpoints.is_null() {
            return Err(null("endpoints"));
        } else {
            std::slice::from_raw_parts(endpoints, 2 * m)
        };
        let g = Graph::new(n, flat.chunks_exact(2).map(|e| (e[0], e[1])))?;
        write_graph(out, g)
    })
}

/// Releases a graph; null is ignored.
///
/// # Safety
/// `graph` must come from this library and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn lapcert_graph_free(graph: *mut LapcertGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn lapcert_graph_vertex_count(graph: *const LapcertGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.inner.n())
}

/// Number of edges, or 0 for a null handle.
///
/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn lapcert_graph_edge_count(graph: *const LapcertGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.inner.m())
}

/// Copies the Laplacian eigenvalues in ascending order into `values`, which
/// must hold at least `n` entries; `mu2` and `mun` receive the second smallest
/// and the largest eigenvalue.
///
/// # Safety
/// `graph` must be a live handle; `values` must hold `capacity` doubles.
#[no_mangle]
pub unsafe extern "C" fn lapcert_spectrum(
    graph: *const LapcertGraph,
    values: *mut f64,
    capacity: usize,
    mu2: *mut f64,
    mun: *mut f64,
) -> LapcertStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        let spec = spectrum(g)?;
        if values.is_null() {
            return Err(null("values"));
        }
        if capacity < spec.eigenvalues.len() {
            return Err(Failure(
                LapcertStatus::InvalidParameter,
                format!("capacity {capacity} < {} eigenvalues", spec.eigenvalues.len()),
            ));
        }
        ptr::copy_nonoverlapping(spec.eigenvalues.as_ptr(), values, spec.eigenvalues.len());
        write_out(mu2, spec.mu2)?;
        write_out(mun, spec.mun)
    })
}

/// Size of a maximum matching.
///
/// # Safety
/// `graph` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lapcert_matching_number(graph: *const LapcertGraph, out: *mut usize) -> LapcertStatus {
    guard(|| write_out(out, maximum_matching(graph_ref(graph)?).size))
}

/// Whether `G - v` has a perfect matching for every vertex `v`.
///
/// # Safety
/// `graph` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lapcert_is_factor_critical(graph: *const LapcertGraph, out: *mut bool) -> LapcertStatus {
    guard(|| write_out(out, factor_critical(graph_ref(graph)?).is_factor_critical))
}

/// Number of balloons of a connected graph.
///
/// # Safety
/// `graph` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lapcert_balloon_count(graph: *const LapcertGraph, out: *mut usize) -> LapcertStatus {
    guard(|| write_out(out, balloons(graph_ref(graph)?)?.count))
}

/// Spectrum, matching certificate, factor-criticality and balloons as JSON.
///
/// # Safety
/// `graph` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lapcert_analyze_json(graph: *const LapcertGraph, out: *mut *mut c_char) -> LapcertStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        let balloon_report = match balloons(g) {
            Ok(report) => to_json(&report)?,
            Err(Error::Precondition(_)) => serde_json::Value::Null,
            Err(e) => return Err(e.into()),
        };
        let value = serde_json::json!({
            "n": g.n(),
            "m": g.m(),
            "connected": g.is_connected(),
            "spectrum": to_json(&spectrum(g)?)?,
            "matching": to_json(&maximum_matching(g))?,
            "factor_critical": to_json(&factor_critical(g))?,
            "balloons": balloon_report,
        });
        write_json(out, &value)
    })
}

/// Runs one verifier and returns its verdict as JSON. `theorem` is a tag such
/// as `"T3"` or a full name; `r` is read by the matching and balloon bounds and
/// `k` by the spanning-tree bound.
///
/// # Safety
/// `graph` must be a live handle, `theorem` NUL-terminated and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn lapcert_verify_json(
    graph: *const LapcertGraph,
    theorem: *const c_char,
    r: f64,
    k: usize,
    out: *mut *mut c_char,
) -> LapcertStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        let id: TheoremId = read_str(theorem, "theorem")?.parse()?;
        let ctx = GraphContext::new(g, VerifierCaps::default())?;
        let verdict = match id {
            TheoremId::T2PerfectMatching => ctx.verify_t2(),
            TheoremId::T3MatchingBound => ctx.verify_t3(r)?,
            TheoremId::CorMatchingBound => ctx.verify_corollary(),
            TheoremId::T4FactorCritical => ctx.verify_t4(),
            TheoremId::T5Balloons => ctx.verify_t5(r)?,
            TheoremId::T6EvenSubgraph => ctx.verify_t6()?,
            TheoremId::T7SpanningTree => ctx.verify_t7(k)?,
        };
        write_json(out, &to_json(&verdict)?)
    })
}

/// Serializes a graph to graph6 (at most 62 vertices).
///
/// # Safety
/// `graph` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lapcert_graph_to_graph6(graph: *const LapcertGraph, out: *mut *mut c_char) -> LapcertStatus {
    guard(|| {
        let text = lapcert::graph::serialize_graph6(graph_ref(graph)?)?;
        let text = CString::new(text).map_err(|e| Failure(LapcertStatus::Internal, e.to_string()))?;
        write_out(out, text.into_raw())
    })
}

/// Message for the last failed call on this thread, or null after a success.
/// The pointer stays valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn lapcert_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by the library; null is ignored.
///
/// # Safety
/// `text` must come from this library and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn lapcert_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
}
