//! C ABI over `xyalt`.
//!
//! Graphs are opaque handles created by `xyalt_graph_new` or
//! `xyalt_graph_parse` and released with `xyalt_graph_free`. Every call
//! returns an [`XyaltStatus`]; on failure `xyalt_last_error` gives a message
//! that stays valid until the next failing call on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use xyalt::alternation::membership_a1;
use xyalt::embedding::{min_genus, Budget};
use xyalt::formats::{parse_terminal_graph, write_terminal_graph};
use xyalt::graph::{SimpleGraph, TerminalGraph};
use xyalt::obstruction::{builtin_catalog, verify_obstruction, write_catalog};
use xyalt::planarity::planar;
use xyalt::Error;

/// Opaque graph with two terminals.
pub struct XyaltGraph(TerminalGraph);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum XyaltStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    BudgetExceeded = 4,
    /// A panic was caught at the boundary.
    Internal = 5,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let s = CString::new(msg.into().replace('\0', " ")).expect("no interior NUL");
    LAST_ERROR.with(|e| *e.borrow_mut() = s);
}

fn status_of(e: &Error) -> XyaltStatus {
    match e {
        Error::Parse { .. } => XyaltStatus::ParseError,
        Error::BudgetExceeded(_) => XyaltStatus::BudgetExceeded,
        _ => XyaltStatus::InvalidArgument,
    }
}

fn guard(f: impl FnOnce() -> Result<(), XyaltStatus>) -> XyaltStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => XyaltStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic");
            XyaltStatus::Internal
        }
    }
}

fn fail(e: Error) -> XyaltStatus {
    set_error(e.to_string());
    status_of(&e)
}

fn null() -> XyaltStatus {
    set_error("null pointer argument");
    XyaltStatus::NullPointer
}

unsafe fn graph<'a>(g: *const XyaltGraph) -> Result<&'a TerminalGraph, XyaltStatus> {
    g.as_ref().map(|g| &g.0).ok_or_else(null)
}

unsafe fn write_out<T>(out: *mut T, v: T) -> Result<(), XyaltStatus> {
    if out.is_null() {
        return Err(null());
    }
    out.write(v);
    Ok(())
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("no interior NUL").into_raw()
}

/// Message for the last failure on this thread; empty if none.
#[no_mangle]
pub extern "C" fn xyalt_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Edgeless graph on `n` vertices with terminals `x` and `y`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn xyalt_graph_new(n: usize, x: usize, y: usize, out: *mut *mut XyaltGraph) -> XyaltStatus {
    guard(|| {
        let g = SimpleGraph::new(n).and_then(|g| TerminalGraph::new(g, x, y)).map_err(fail)?;
        write_out(out, Box::into_raw(Box::new(XyaltGraph(g))))
    })
}

/// Parses the native text format or graph6 with a `terminals:` line.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn xyalt_graph_parse(text: *const c_char, out: *mut *mut XyaltGraph) -> XyaltStatus {
    guard(|| {
        if text.is_null() {
            return Err(null());
        }
        let text = CStr::from_ptr(text).to_str().map_err(|_| {
            set_error("input is not UTF-8");
            XyaltStatus::ParseError
        })?;
        let g = parse_terminal_graph(text).map_err(fail)?;
        write_out(out, Box::into_raw(Box::new(XyaltGraph(g))))
    })
}

/// # Safety
/// `g` must come from this library and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn xyalt_graph_free(g: *mut XyaltGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn xyalt_graph_add_edge(g: *mut XyaltGraph, u: usize, v: usize) -> XyaltStatus {
    guard(|| {
        let g = g.as_mut().ok_or_else(null)?;
        g.0.add_edge(u, v).map_err(fail)
    })
}

/// # Safety
/// `g` must be a live handle; outputs must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn xyalt_graph_size(g: *const XyaltGraph, vertices: *mut usize, edges: *mut usize) -> XyaltStatus {
    guard(|| {
        let g = graph(g)?;
        write_out(vertices, g.n())?;
        write_out(edges, g.edge_count())
    })
}

/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn xyalt_is_planar(g: *const XyaltGraph, out: *mut bool) -> XyaltStatus {
    guard(|| write_out(out, planar(graph(g)?.graph())))
}

/// Membership in the class, decided by cutting at the terminals.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn xyalt_is_member(g: *const XyaltGraph, out: *mut bool) -> XyaltStatus {
    guard(|| write_out(out, membership_a1(graph(g)?).map_err(fail)?.member))
}

/// Whether `g` is a minor-minimal non-member.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn xyalt_is_obstruction(g: *const XyaltGraph, out: *mut bool) -> XyaltStatus {
    guard(|| write_out(out, verify_obstruction(graph(g)?).map_err(fail)?.is_obstruction))
}

/// Minimum orientable genus. A `budget` of 0 means unlimited.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn xyalt_genus(g: *const XyaltGraph, budget: u64, out: *mut usize) -> XyaltStatus {
    guard(|| {
        let mut b = if budget == 0 { Budget::unlimited() } else { Budget::new(budget) };
        let r = min_genus(&graph(g)?.graph().to_multigraph(), &mut b).map_err(fail)?;
        write_out(out, r.genus)
    })
}

/// Native text form of `g`; free it with `xyalt_string_free`.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn xyalt_graph_to_string(g: *const XyaltGraph, out: *mut *mut c_char) -> XyaltStatus {
    guard(|| write_out(out, into_c_string(write_terminal_graph(graph(g)?))))
}

/// The built-in obstruction catalog, one record per line; free it with
/// `xyalt_string_free`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn xyalt_builtin_catalog(out: *mut *mut c_char) -> XyaltStatus {
    guard(|| write_out(out, into_c_string(write_catalog(&builtin_catalog().map_err(fail)?))))
}

/// # Safety
/// `s` must come from this library and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn xyalt_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
