//! C ABI over the ndarc library: opaque digraph handles, status codes,
//! and flat colour buffers.
//!
//! Every fallible function returns an [`NdarcStatus`] and writes its
//! results through caller-supplied out-pointers. A handle created by
//! [`ndarc_digraph_new`] stays valid until passed to
//! [`ndarc_digraph_free`]. Panics never cross the boundary; they
//! surface as [`NdarcStatus::Internal`].

use ndarc::colouring::{is_nd, lower_bound, ArcColouring, NdVerdict};
use ndarc::digraph::{build_digraph, degrees, Digraph};
use ndarc::exact::{exact_ndi_with_budget, DEFAULT_NODE_BUDGET};
use ndarc::report::{dispatch, Algo};
use ndarc::Error;
use std::ffi::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::slice;

/// Opaque digraph handle. Create with [`ndarc_digraph_new`], release
/// with [`ndarc_digraph_free`].
pub struct NdarcDigraph {
    inner: Digraph,
}

/// Result code returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NdarcStatus {
    /// The call succeeded.
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// An argument was malformed: a loop or duplicate arc, a vertex or
    /// colour out of range, or a buffer of the wrong length.
    InvalidArgument = 2,
    /// The requested algorithm does not apply to this digraph.
    Inapplicable = 3,
    /// A search exhausted its colour cap or node budget.
    ResourceExhausted = 4,
    /// An internal invariant failed or a panic was caught.
    Internal = 5,
}

/// Algorithm selector for [`ndarc_colour`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NdarcAlgo {
    /// Pick the applicable algorithm with the smallest colour bound.
    Auto = 0,
    /// Round-robin scheme for complete digraphs.
    Complete = 1,
    /// Peel-and-extend scheme for digraphs whose underlying graph is a
    /// tree.
    Tree = 2,
    /// Two-matching repair for bipartite digraphs.
    Bipartite = 3,
    /// Underlying-graph edge colouring for digraphs with no opposite
    /// arc pairs.
    Oriented = 4,
    /// Regularise-and-factor scheme; always applicable.
    Factor = 5,
    /// Bipartite-layer scheme; always applicable.
    Layered = 6,
}

impl From<NdarcAlgo> for Algo {
    fn from(algo: NdarcAlgo) -> Algo {
        match algo {
            NdarcAlgo::Auto => Algo::Auto,
            NdarcAlgo::Complete => Algo::Complete,
            NdarcAlgo::Tree => Algo::Tree,
            NdarcAlgo::Bipartite => Algo::Bipartite,
            NdarcAlgo::Oriented => Algo::Oriented,
            NdarcAlgo::Factor => Algo::Factor,
            NdarcAlgo::Layered => Algo::Layered,
        }
    }
}

fn status_of(err: &Error) -> NdarcStatus {
    match err {
        Error::LoopArc(..)
        | Error::DuplicateArc(..)
        | Error::VertexOutOfRange(..)
        | Error::ColourOutOfRange(..)
        | Error::ImproperVertexColouring(..)
        | Error::CapTooSmall { .. }
        | Error::Parse { .. } => NdarcStatus::InvalidArgument,
        Error::NothingToColour
        | Error::OppositeArcs(..)
        | Error::NotBipartite
        | Error::ArcInsidePart(..)
        | Error::NotATree
        | Error::NotRegular(..)
        | Error::NotCompleteSymmetric
        | Error::OrderTooSmall(..)
        | Error::EvenOrder(..)
        | Error::EnumerationTooLarge(..) => NdarcStatus::Inapplicable,
        Error::CapExhausted(..) | Error::BudgetExceeded { .. } => NdarcStatus::ResourceExhausted,
        Error::TheoremViolation | Error::CorollaryViolation | Error::Internal(..) => {
            NdarcStatus::Internal
        }
    }
}

/// Runs `body`, turning any panic into [`NdarcStatus::Internal`].
fn guarded<F: FnOnce() -> NdarcStatus>(body: F) -> NdarcStatus {
    catch_unwind(AssertUnwindSafe(body)).unwrap_or(NdarcStatus::Internal)
}

/// Builds a digraph from parallel tail and head arrays of length
/// `arc_count` and writes the new handle to `out`.
///
/// `tails` and `heads` may be null only when `arc_count` is zero.
/// Rejects loops, duplicate arcs, and endpoints at or above `order`.
///
/// # Safety
///
/// `tails` and `heads` must point to `arc_count` readable elements,
/// and `out` must be a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn ndarc_digraph_new(
    order: usize,
    tails: *const usize,
    heads: *const usize,
    arc_count: usize,
    out: *mut *mut NdarcDigraph,
) -> NdarcStatus {
    if out.is_null() || (arc_count > 0 && (tails.is_null() || heads.is_null())) {
        return NdarcStatus::NullPointer;
    }
    let arcs: Vec<(usize, usize)> = if arc_count == 0 {
        Vec::new()
    } else {
        let tails = slice::from_raw_parts(tails, arc_count);
        let heads = slice::from_raw_parts(heads, arc_count);
        tails.iter().copied().zip(heads.iter().copied()).collect()
    };
    guarded(|| match build_digraph(order, &arcs) {
        Ok(d) => {
            out.write(Box::into_raw(Box::new(NdarcDigraph { inner: d })));
            NdarcStatus::Ok
        }
        Err(err) => status_of(&err),
    })
}

/// Releases a handle created by [`ndarc_digraph_new`]. Null is a no-op.
///
/// # Safety
///
/// `d` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ndarc_digraph_free(d: *mut NdarcDigraph) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Returns the vertex count, or 0 for a null handle.
///
/// # Safety
///
/// `d` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ndarc_digraph_order(d: *const NdarcDigraph) -> usize {
    d.as_ref().map_or(0, |d| d.inner.n())
}

/// Returns the arc count, or 0 for a null handle.
///
/// # Safety
///
/// `d` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ndarc_digraph_arc_count(d: *const NdarcDigraph) -> usize {
    d.as_ref().map_or(0, |d| d.inner.arc_count())
}

/// Writes the degree-based lower bound on the number of colours any
/// distinguishing arc colouring needs.
///
/// # Safety
///
/// `d` must be a live handle and `out_bound` a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn ndarc_lower_bound(
    d: *const NdarcDigraph,
    out_bound: *mut usize,
) -> NdarcStatus {
    if d.is_null() || out_bound.is_null() {
        return NdarcStatus::NullPointer;
    }
    let d = &*d;
    guarded(|| {
        out_bound.write(lower_bound(&d.inner));
        NdarcStatus::Ok
    })
}

/// Colours the digraph with the requested algorithm and writes one
/// colour per arc, in the order the arcs were supplied, to
/// `colours_out` (length = arc count). Colours start at 1.
/// `colours_used_out` and `bound_out` are optional; when non-null they
/// receive the number of distinct colours and the algorithm's promised
/// bound. The result is re-verified before returning; a colouring that
/// fails its own check yields [`NdarcStatus::Internal`].
///
/// # Safety
///
/// `d` must be a live handle and `colours_out` must point to as many
/// writable elements as the digraph has arcs.
#[no_mangle]
pub unsafe extern "C" fn ndarc_colour(
    d: *const NdarcDigraph,
    algo: NdarcAlgo,
    colours_out: *mut usize,
    colours_used_out: *mut usize,
    bound_out: *mut usize,
) -> NdarcStatus {
    if d.is_null() || colours_out.is_null() {
        return NdarcStatus::NullPointer;
    }
    let d = &*d;
    guarded(|| match dispatch(&d.inner, algo.into()) {
        Ok(report) => {
            for (idx, arc) in report.arcs.iter().enumerate() {
                colours_out.add(idx).write(arc.colour);
            }
            if !colours_used_out.is_null() {
                colours_used_out.write(report.colours_used);
            }
            if !bound_out.is_null() {
                bound_out.write(report.bound_claimed);
            }
            if report.verified {
                NdarcStatus::Ok
            } else {
                NdarcStatus::Internal
            }
        }
        Err(err) => status_of(&err),
    })
}

/// Computes the exact minimum colour count. `max_colours` of 0 means
/// twice the larger degree bound (which always suffices); `node_budget`
/// of 0 means the default per-colour-count budget. When `colours_out`
/// is non-null it receives a witness colouring, one colour per arc.
///
/// # Safety
///
/// `d` must be a live handle, `ndi_out` a valid writable pointer, and
/// `colours_out` null or a buffer with as many writable elements as the
/// digraph has arcs.
#[no_mangle]
pub unsafe extern "C" fn ndarc_exact_ndi(
    d: *const NdarcDigraph,
    max_colours: usize,
    node_budget: u64,
    colours_out: *mut usize,
    ndi_out: *mut usize,
) -> NdarcStatus {
    if d.is_null() || ndi_out.is_null() {
        return NdarcStatus::NullPointer;
    }
    let d = &*d;
    guarded(|| {
        let cap = if max_colours == 0 {
            2 * degrees(&d.inner).delta_star()
        } else {
            max_colours
        };
        let budget = if node_budget == 0 { DEFAULT_NODE_BUDGET } else { node_budget };
        match exact_ndi_with_budget(&d.inner, cap, budget) {
            Ok(result) => {
                if !colours_out.is_null() {
                    for (idx, &colour) in result.witness.colours().iter().enumerate() {
                        colours_out.add(idx).write(colour);
                    }
                }
                ndi_out.write(result.ndi);
                NdarcStatus::Ok
            }
            Err(err) => status_of(&err),
        }
    })
}

/// Checks a colouring supplied as one colour per arc (length must equal
/// the arc count, colours start at 1) and writes whether it is proper
/// and gives adjacent vertices distinct colour-set pairs.
///
/// # Safety
///
/// `d` must be a live handle, `colours` must point to `colour_count`
/// readable elements, and `result_out` must be a valid writable
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn ndarc_is_nd(
    d: *const NdarcDigraph,
    colours: *const usize,
    colour_count: usize,
    result_out: *mut bool,
) -> NdarcStatus {
    if d.is_null() || result_out.is_null() || (colour_count > 0 && colours.is_null()) {
        return NdarcStatus::NullPointer;
    }
    let d = &*d;
    if colour_count != d.inner.arc_count() {
        return NdarcStatus::InvalidArgument;
    }
    let colours = if colour_count == 0 {
        Vec::new()
    } else {
        slice::from_raw_parts(colours, colour_count).to_vec()
    };
    guarded(|| {
        let k = colours.iter().copied().max().unwrap_or(0);
        match ArcColouring::new(colours, k) {
            Ok(colouring) => {
                result_out.write(matches!(is_nd(&d.inner, &colouring), NdVerdict::Nd));
                NdarcStatus::Ok
            }
            Err(err) => status_of(&err),
        }
    })
}

/// Returns a static NUL-terminated description of a status code.
#[no_mangle]
pub extern "C" fn ndarc_status_message(status: NdarcStatus) -> *const c_char {
    let message: &'static str = match status {
        NdarcStatus::Ok => "ok\0",
        NdarcStatus::NullPointer => "a required pointer was null\0",
        NdarcStatus::InvalidArgument => "an argument was malformed\0",
        NdarcStatus::Inapplicable => "the algorithm does not apply to this digraph\0",
        NdarcStatus::ResourceExhausted => "the search exhausted its colour cap or node budget\0",
        NdarcStatus::Internal => "internal error\0",
    };
    message.as_ptr() as *const c_char
}
