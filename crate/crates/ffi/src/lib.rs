//! C ABI over `structcode`.
//!
//! Structures cross the boundary as opaque handles created by a `*_parse` or encoding function
//! and released with the matching `*_free`. Every fallible function returns an [`ScStatus`];
//! on failure the message is available from [`sc_last_error`] until the next call on the same
//! thread. Strings returned to the caller must be released with [`sc_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use structcode::codings::{daisy_decode, daisy_encode};
use structcode::fslin::{fs_member, FSElement};
use structcode::iso::{iso_digraph, iso_ugraph, IsoOptions};
use structcode::marker::{marker_decode, marker_encode};
use structcode::structure::{Digraph, UGraph};
use structcode::Error;

/// Status of a call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScStatus {
    Ok = 0,
    /// The call succeeded and the answer is negative.
    False = 1,
    Parse = 2,
    Precondition = 3,
    NullArgument = 4,
    InvalidUtf8 = 5,
    BufferTooSmall = 6,
    Panic = 7,
}

/// A directed graph.
pub struct ScDigraph(Digraph);

/// An undirected graph.
pub struct ScGraph(UGraph);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> ScStatus {
    match e {
        Error::Parse(_) | Error::Io(_) | Error::Malformed(_) | Error::UnboundVariable(_) => ScStatus::Parse,
        _ => ScStatus::Precondition,
    }
}

fn guard(f: impl FnOnce() -> Result<ScStatus, (ScStatus, String)>) -> ScStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => s,
        Ok(Err((s, msg))) => {
            set_error(msg);
            s
        }
        Err(_) => {
            set_error("internal panic");
            ScStatus::Panic
        }
    }
}

fn lib<T>(r: structcode::Result<T>) -> Result<T, (ScStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, (ScStatus, String)> {
    if p.is_null() {
        return Err((ScStatus::NullArgument, "null string".into()));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (ScStatus::InvalidUtf8, "string is not UTF-8".into()))
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, (ScStatus, String)> {
    p.as_ref().ok_or((ScStatus::NullArgument, "null handle".into()))
}

unsafe fn put<T>(out: *mut T, v: T) -> Result<(), (ScStatus, String)> {
    if out.is_null() {
        return Err((ScStatus::NullArgument, "null output pointer".into()));
    }
    out.write(v);
    Ok(())
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("nul bytes removed").into_raw()
}

/// Message of the last failed call on this thread, or null. Owned by the library.
#[no_mangle]
pub extern "C" fn sc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be null or a string returned by this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn sc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a digraph from `v`/`e` lines.
///
/// # Safety
/// `src` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sc_digraph_parse(src: *const c_char, out: *mut *mut ScDigraph) -> ScStatus {
    guard(|| {
        let g = lib(Digraph::parse(text(src)?))?;
        put(out, Box::into_raw(Box::new(ScDigraph(g))))?;
        Ok(ScStatus::Ok)
    })
}

/// # Safety
/// `g` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn sc_digraph_free(g: *mut ScDigraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sc_digraph_vertex_count(g: *const ScDigraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.len())
}

/// Writes the digraph in graph-file format to `*out`.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sc_digraph_to_text(g: *const ScDigraph, out: *mut *mut c_char) -> ScStatus {
    guard(|| {
        let g = handle(g)?;
        put(out, owned_string(g.0.to_text()))?;
        Ok(ScStatus::Ok)
    })
}

/// Parses an undirected graph from `v`/`e` lines.
///
/// # Safety
/// `src` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sc_graph_parse(src: *const c_char, out: *mut *mut ScGraph) -> ScStatus {
    guard(|| {
        let g = lib(UGraph::parse(text(src)?))?;
        put(out, Box::into_raw(Box::new(ScGraph(g))))?;
        Ok(ScStatus::Ok)
    })
}

/// # Safety
/// `g` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn sc_graph_free(g: *mut ScGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sc_graph_vertex_count(g: *const ScGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.len())
}

/// Writes the graph in graph-file format to `*out`.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sc_graph_to_text(g: *const ScGraph, out: *mut *mut c_char) -> ScStatus {
    guard(|| {
        let g = handle(g)?;
        put(out, owned_string(g.0.to_text()))?;
        Ok(ScStatus::Ok)
    })
}

/// Marker's encoding of an irreflexive digraph.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sc_marker_encode(g: *const ScDigraph, out: *mut *mut ScGraph) -> ScStatus {
    guard(|| {
        let enc = lib(marker_encode(&handle(g)?.0))?;
        put(out, Box::into_raw(Box::new(ScGraph(enc.graph))))?;
        Ok(ScStatus::Ok)
    })
}

/// Decodes a graph produced by Marker's encoding.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sc_marker_decode(h: *const ScGraph, out: *mut *mut ScDigraph) -> ScStatus {
    guard(|| {
        let g = lib(marker_decode(&handle(h)?.0))?;
        put(out, Box::into_raw(Box::new(ScDigraph(g))))?;
        Ok(ScStatus::Ok)
    })
}

/// `SC_STATUS_OK` when the digraphs are isomorphic, `SC_STATUS_FALSE` when not.
///
/// # Safety
/// Both handles must be live.
#[no_mangle]
pub unsafe extern "C" fn sc_digraph_isomorphic(a: *const ScDigraph, b: *const ScDigraph) -> ScStatus {
    guard(|| {
        let m = lib(iso_digraph(&handle(a)?.0, &handle(b)?.0, IsoOptions::default()))?;
        Ok(if m.is_some() { ScStatus::Ok } else { ScStatus::False })
    })
}

/// `SC_STATUS_OK` when the graphs are isomorphic, `SC_STATUS_FALSE` when not.
///
/// # Safety
/// Both handles must be live.
#[no_mangle]
pub unsafe extern "C" fn sc_graph_isomorphic(a: *const ScGraph, b: *const ScGraph) -> ScStatus {
    guard(|| {
        let m = lib(iso_ugraph(&handle(a)?.0, &handle(b)?.0, IsoOptions::default()))?;
        Ok(if m.is_some() { ScStatus::Ok } else { ScStatus::False })
    })
}

/// Membership in `L(G)` of an element written as a JSON term array such as `["3/4",0]`.
/// Returns `SC_STATUS_OK` for members and `SC_STATUS_FALSE` otherwise.
///
/// # Safety
/// `g` must be a live handle and `element` a valid C string.
#[no_mangle]
pub unsafe extern "C" fn sc_fs_member(g: *const ScDigraph, element: *const c_char) -> ScStatus {
    guard(|| {
        let g = handle(g)?;
        let x = lib(FSElement::parse_json(text(element)?))?;
        Ok(if lib(fs_member(&g.0, &x))? { ScStatus::Ok } else { ScStatus::False })
    })
}

/// The daisy of `S ∩ [0, bound)`, with `prefix[n] != 0` meaning `n ∈ S` for `n < len`.
///
/// # Safety
/// `prefix` must point to `len` readable bytes (or be null with `len == 0`), and `out` must be
/// valid.
#[no_mangle]
pub unsafe extern "C" fn sc_daisy_encode(prefix: *const u8, len: usize, bound: u64, out: *mut *mut ScGraph) -> ScStatus {
    guard(|| {
        let bits: Vec<bool> = if len == 0 {
            Vec::new()
        } else if prefix.is_null() {
            return Err((ScStatus::NullArgument, "null prefix".into()));
        } else {
            std::slice::from_raw_parts(prefix, len).iter().map(|&b| b != 0).collect()
        };
        let g = lib(daisy_encode(&bits, bound))?;
        put(out, Box::into_raw(Box::new(ScGraph(g))))?;
        Ok(ScStatus::Ok)
    })
}

/// Decodes a daisy into `buf` (one byte per index, 1 for members). The number of petals is
/// written to `*len` even when `buf` is too small.
///
/// # Safety
/// `h` must be a live handle, `buf` must have `cap` writable bytes (or be null with `cap == 0`),
/// and `len` must be valid.
#[no_mangle]
pub unsafe extern "C" fn sc_daisy_decode(h: *const ScGraph, buf: *mut u8, cap: usize, len: *mut usize) -> ScStatus {
    guard(|| {
        let d = lib(daisy_decode(&handle(h)?.0))?;
        put(len, d.prefix.len())?;
        if d.prefix.len() > cap {
            return Err((ScStatus::BufferTooSmall, format!("{} bytes needed", d.prefix.len())));
        }
        if !d.prefix.is_empty() {
            if buf.is_null() {
                return Err((ScStatus::NullArgument, "null buffer".into()));
            }
            for (i, &m) in d.prefix.iter().enumerate() {
                buf.add(i).write(u8::from(m));
            }
        }
        Ok(ScStatus::Ok)
    })
}
