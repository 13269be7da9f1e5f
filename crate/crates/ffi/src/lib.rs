//! C ABI for the kpartite library.
//!
//! Graphs live behind the opaque [`KpGraph`] handle. Every fallible call
//! returns a [`KpStatus`]; on failure a human-readable message is available
//! from [`kp_last_error_message`] on the same thread. Strings handed out by
//! the library must be released with [`kp_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use kpartite::bounds::{compare_bounds, rational_to_f64, BoundReport};
use kpartite::exact::{max_clique, max_independent_set, WitnessCertificate};
use kpartite::graph::io::{decode_graph6, encode_graph6};
use kpartite::recognition::{
    clique_union_profile_from_degrees, is_clique_union, is_complete_multipartite,
    multipartite_profile_from_degrees,
};
use kpartite::witness::{witness_clique, witness_independent_set};
use kpartite::{Error, Graph, PartitionProfile};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KpStatus {
    Ok = 0,
    NullPointer = 1,
    VertexOutOfRange = 2,
    InvalidInput = 3,
    SizeLimit = 4,
    OutsideFamily = 5,
    Canonical = 6,
    BufferTooSmall = 7,
    Internal = 8,
}

/// Opaque graph handle.
pub struct KpGraph(Graph);

/// Which of the four family conditions hold, with the number of parts `k`
/// when they do (0 otherwise).
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct KpRecognition {
    pub complete_multipartite: bool,
    pub complete_multipartite_k: usize,
    pub clique_union: bool,
    pub clique_union_k: usize,
    pub degree_multipartite: bool,
    pub degree_multipartite_k: usize,
    pub degree_clique_union: bool,
    pub degree_clique_union_k: usize,
}

/// Lower bounds as doubles. Optional integers are -1 when absent. Use
/// [`kp_bounds_json`] for the exact rationals.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct KpBounds {
    pub n: usize,
    pub m: usize,
    pub caro_wei: f64,
    pub turan_alpha: f64,
    pub hansen_zheng: usize,
    pub myers_liu: f64,
    pub edwards_elphick: f64,
    pub sharpened_alpha: i64,
    pub sharpened_omega: i64,
    pub exact_alpha: i64,
    pub exact_omega: i64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(err: &Error) -> KpStatus {
    match err {
        Error::VertexOutOfRange { .. } => KpStatus::VertexOutOfRange,
        Error::SizeLimit { .. } => KpStatus::SizeLimit,
        Error::OutsideFamily(_) => KpStatus::OutsideFamily,
        Error::Canonical(_) => KpStatus::Canonical,
        Error::ProofInvariant(_) | Error::Io(_) | Error::Csv(_) | Error::Json(_) => {
            KpStatus::Internal
        }
        _ => KpStatus::InvalidInput,
    }
}

fn fail(status: KpStatus, msg: impl Into<String>) -> KpStatus {
    set_error(msg.into());
    status
}

/// Runs `f`, converting library errors and panics into status codes.
fn guard<F>(f: F) -> KpStatus
where
    F: FnOnce() -> Result<(), KpStatus>,
{
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => KpStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => fail(KpStatus::Internal, "panic inside kpartite"),
    }
}

fn lib<T>(r: kpartite::Result<T>) -> Result<T, KpStatus> {
    r.map_err(|e| fail(status_of(&e), e.to_string()))
}

unsafe fn graph_ref<'a>(g: *const KpGraph) -> Result<&'a Graph, KpStatus> {
    g.as_ref()
        .map(|g| &g.0)
        .ok_or_else(|| fail(KpStatus::NullPointer, "graph handle is NULL"))
}

unsafe fn out_ref<'a, T>(p: *mut T) -> Result<&'a mut T, KpStatus> {
    p.as_mut()
        .ok_or_else(|| fail(KpStatus::NullPointer, "output pointer is NULL"))
}

fn to_c_string(s: String) -> Result<*mut c_char, KpStatus> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| fail(KpStatus::Internal, "string contains NUL"))
}

/// Creates an edgeless graph on `n` vertices. Free with [`kp_graph_free`].
#[no_mangle]
pub extern "C" fn kp_graph_new(n: usize) -> *mut KpGraph {
    Box::into_raw(Box::new(KpGraph(Graph::new(n))))
}

/// Releases a graph handle. Passing NULL is a no-op.
///
/// # Safety
/// `g` must be NULL or a handle from this library that was not yet freed.
#[no_mangle]
pub unsafe extern "C" fn kp_graph_free(g: *mut KpGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Adds the edge `{u, v}`; adding an existing edge is not an error.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn kp_graph_add_edge(g: *mut KpGraph, u: usize, v: usize) -> KpStatus {
    guard(|| {
        let g = g
            .as_mut()
            .ok_or_else(|| fail(KpStatus::NullPointer, "graph handle is NULL"))?;
        lib(g.0.add_edge(u, v)).map(drop)
    })
}

/// Number of vertices, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn kp_graph_vertex_count(g: *const KpGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.n())
}

/// Number of edges, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn kp_graph_edge_count(g: *const KpGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.m())
}

/// Parses one graph6 string into a new handle stored in `*out`.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kp_graph_from_graph6(
    text: *const c_char,
    out: *mut *mut KpGraph,
) -> KpStatus {
    guard(|| {
        let out = out_ref(out)?;
        if text.is_null() {
            return Err(fail(KpStatus::NullPointer, "graph6 text is NULL"));
        }
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| fail(KpStatus::InvalidInput, "graph6 text is not UTF-8"))?;
        let g = lib(decode_graph6(text.trim()))?;
        *out = Box::into_raw(Box::new(KpGraph(g)));
        Ok(())
    })
}

/// Encodes the graph as graph6 into a new string stored in `*out`. Free it
/// with [`kp_string_free`].
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kp_graph_to_graph6(g: *const KpGraph, out: *mut *mut c_char) -> KpStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let out = out_ref(out)?;
        *out = to_c_string(encode_graph6(g))?;
        Ok(())
    })
}

/// Releases a string returned by this library. Passing NULL is a no-op.
///
/// # Safety
/// `s` must be NULL or a string from this library that was not yet freed.
#[no_mangle]
pub unsafe extern "C" fn kp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message describing the last failure on this thread, or NULL. The pointer
/// stays valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn kp_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Copies `cert` into `buf`. `*len` always receives the certificate size;
/// `KP_STATUS_BUFFER_TOO_SMALL` is returned if `cap` is smaller.
unsafe fn write_vertices(
    cert: &WitnessCertificate,
    buf: *mut usize,
    cap: usize,
    len: *mut usize,
) -> Result<(), KpStatus> {
    *out_ref(len)? = cert.size();
    if cert.size() > cap {
        return Err(fail(
            KpStatus::BufferTooSmall,
            format!(
                "certificate has {} vertices, buffer holds {cap}",
                cert.size()
            ),
        ));
    }
    if cert.size() > 0 {
        if buf.is_null() {
            return Err(fail(KpStatus::NullPointer, "vertex buffer is NULL"));
        }
        ptr::copy_nonoverlapping(cert.vertices.as_slice().as_ptr(), buf, cert.size());
    }
    Ok(())
}

/// Independence number.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kp_independence_number(g: *const KpGraph, out: *mut usize) -> KpStatus {
    guard(|| {
        let g = graph_ref(g)?;
        *out_ref(out)? = lib(max_independent_set(g))?.size();
        Ok(())
    })
}

/// Clique number.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kp_clique_number(g: *const KpGraph, out: *mut usize) -> KpStatus {
    guard(|| {
        let g = graph_ref(g)?;
        *out_ref(out)? = lib(max_clique(g))?.size();
        Ok(())
    })
}

/// A maximum independent set, written to `buf` (capacity `cap`).
///
/// # Safety
/// `g` must be a live handle, `buf` must hold `cap` elements, `len` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn kp_max_independent_set(
    g: *const KpGraph,
    buf: *mut usize,
    cap: usize,
    len: *mut usize,
) -> KpStatus {
    guard(|| write_vertices(&lib(max_independent_set(graph_ref(g)?))?, buf, cap, len))
}

/// A maximum clique, written to `buf` (capacity `cap`).
///
/// # Safety
/// As for [`kp_max_independent_set`].
#[no_mangle]
pub unsafe extern "C" fn kp_max_clique(
    g: *const KpGraph,
    buf: *mut usize,
    cap: usize,
    len: *mut usize,
) -> KpStatus {
    guard(|| write_vertices(&lib(max_clique(graph_ref(g)?))?, buf, cap, len))
}

/// Independent set of size `k + 1` in a non-canonical graph with the degree
/// sequence of `k` disjoint cliques. Fails with `KP_STATUS_CANONICAL` on the
/// clique union itself and `KP_STATUS_OUTSIDE_FAMILY` on other degree
/// sequences.
///
/// # Safety
/// As for [`kp_max_independent_set`].
#[no_mangle]
pub unsafe extern "C" fn kp_witness_independent_set(
    g: *const KpGraph,
    buf: *mut usize,
    cap: usize,
    len: *mut usize,
) -> KpStatus {
    guard(|| write_vertices(&lib(witness_independent_set(graph_ref(g)?))?, buf, cap, len))
}

/// Clique of size `k + 1` in a non-canonical graph with the degree sequence
/// of a complete `k`-partite graph.
///
/// # Safety
/// As for [`kp_max_independent_set`].
#[no_mangle]
pub unsafe extern "C" fn kp_witness_clique(
    g: *const KpGraph,
    buf: *mut usize,
    cap: usize,
    len: *mut usize,
) -> KpStatus {
    guard(|| write_vertices(&lib(witness_clique(graph_ref(g)?))?, buf, cap, len))
}

fn k_of(p: &Option<PartitionProfile>) -> usize {
    p.as_ref().map_or(0, PartitionProfile::k)
}

/// Evaluates the four family conditions.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kp_recognize(g: *const KpGraph, out: *mut KpRecognition) -> KpStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let out = out_ref(out)?;
        let d = g.degree_sequence();
        let cm = is_complete_multipartite(g);
        let cu = is_clique_union(g);
        let dm = lib(multipartite_profile_from_degrees(&d))?;
        let dc = clique_union_profile_from_degrees(&d);
        *out = KpRecognition {
            complete_multipartite: cm.is_some(),
            complete_multipartite_k: k_of(&cm),
            clique_union: cu.is_some(),
            clique_union_k: k_of(&cu),
            degree_multipartite: dm.is_some(),
            degree_multipartite_k: k_of(&dm),
            degree_clique_union: dc.is_some(),
            degree_clique_union_k: k_of(&dc),
        };
        Ok(())
    })
}

fn report(g: &Graph, with_exact: bool) -> Result<BoundReport, KpStatus> {
    lib(compare_bounds(g, "ffi", with_exact))
}

/// Lower bounds, plus exact values when `with_exact` is set.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kp_bounds(
    g: *const KpGraph,
    with_exact: bool,
    out: *mut KpBounds,
) -> KpStatus {
    guard(|| {
        let r = report(graph_ref(g)?, with_exact)?;
        let opt = |v: Option<usize>| v.map_or(-1, |v| v as i64);
        *out_ref(out)? = KpBounds {
            n: r.n,
            m: r.m,
            caro_wei: rational_to_f64(&r.caro_wei),
            turan_alpha: rational_to_f64(&r.turan_alpha),
            hansen_zheng: r.hansen_zheng,
            myers_liu: rational_to_f64(&r.myers_liu),
            edwards_elphick: r.edwards_elphick,
            sharpened_alpha: opt(r.sharpened_alpha),
            sharpened_omega: opt(r.sharpened_omega),
            exact_alpha: opt(r.exact_alpha),
            exact_omega: opt(r.exact_omega),
        };
        Ok(())
    })
}

/// The full bound report as JSON, with rationals written exactly (e.g.
/// `"50/17"`). Free the string with [`kp_string_free`].
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kp_bounds_json(
    g: *const KpGraph,
    with_exact: bool,
    out: *mut *mut c_char,
) -> KpStatus {
    guard(|| {
        let r = report(graph_ref(g)?, with_exact)?;
        let out = out_ref(out)?;
        let json = lib(serde_json::to_string(&r).map_err(Error::from))?;
        *out = to_c_string(json)?;
        Ok(())
    })
}
