//! Neighbour-distinguishing arc-colouring toolkit for digraphs.
//!
//! A proper arc-colouring assigns colours to arcs so that no two arcs
//! sharing a tail get the same colour and no two arcs sharing a head get
//! the same colour. Consecutive arcs may repeat a colour. Such a colouring
//! is *neighbour-distinguishing* (nd) when for every arc uv the ordered
//! pair of colour sets (outgoing, incoming) at u differs from the pair
//! at v. The smallest number of colours admitting an nd-arc-colouring of
//! a digraph D is its neighbour-distinguishing index, ndi(D).
//!
//! The crate provides:
//!
//! * [`digraph`]: the digraph representation, degree statistics, the
//!   underlying simple graph, and structural classification.
//! * [`colouring`]: arc-colourings, palette tables, properness and
//!   nd verification, and the degree-based lower bound on ndi.
//! * [`proper`]: proper arc-colourings with exactly Δ* colours, bipartite
//!   and general edge colouring of simple graphs, and the shortcut for
//!   oriented digraphs (no opposite arcs).
//! * [`factorization`]: regular completion, decomposition of regular
//!   digraphs into 1-factors, and the general nd-colouring with at most
//!   2Δ* colours.
//! * [`constructions`]: exact nd-colourings of complete symmetric
//!   digraphs with n colours, and nd-colourings of digraphs whose
//!   underlying graph is a tree with at most Δ*+1 colours.
//! * [`layered`]: the bipartite algorithm (at most Δ*+2 colours) and its
//!   extension to arbitrary digraphs through bipartite edge layers.
//! * [`exact`]: exact ndi computation by backtracking search, labelled
//!   digraph enumeration, and a scanner hunting for digraphs with
//!   ndi(D) > Δ*(D)+1.
//! * [`generate`]: deterministic, seedable digraph generators.
//! * [`format`]: the plain-text arc-list format used by the CLI.
//! * [`report`]: algorithm dispatch and machine-readable reports.

pub mod colouring;
pub mod constructions;
pub mod digraph;
pub mod exact;
pub mod factorization;
pub mod format;
pub mod generate;
pub mod layered;
pub mod proper;
pub mod report;

use thiserror::Error;

/// Errors produced by digraph construction, the colouring algorithms,
/// the exact solver, and the text parser.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An arc with equal tail and head was supplied.
    #[error("loop arc {0} -> {0} is not allowed")]
    LoopArc(usize),
    /// The same ordered pair was supplied twice.
    #[error("duplicate arc {0} -> {1}")]
    DuplicateArc(usize, usize),
    /// An arc endpoint is not a valid vertex index.
    #[error("vertex {0} out of range for order {1}")]
    VertexOutOfRange(usize, usize),
    /// A colouring operation was asked to colour an empty arc set.
    #[error("nothing to colour: the digraph has no arcs")]
    NothingToColour,
    /// An operation restricted to oriented digraphs met a pair of
    /// opposite arcs.
    #[error("opposite arcs present: {0} -> {1} and {1} -> {0}")]
    OppositeArcs(usize, usize),
    /// The underlying graph admits no bipartition.
    #[error("not bipartite: the underlying graph contains an odd cycle")]
    NotBipartite,
    /// An arc failed to cross the two sides of a supplied bipartition.
    #[error("arc {0} -> {1} does not cross the bipartition")]
    ArcInsidePart(usize, usize),
    /// The underlying graph is not a tree.
    #[error("underlying graph is not a tree")]
    NotATree,
    /// A factorization was requested on a digraph that is not regular
    /// of the stated degree.
    #[error("digraph is not {0}-regular")]
    NotRegular(usize),
    /// The digraph is not complete symmetric.
    #[error("not complete symmetric: some ordered pair is missing")]
    NotCompleteSymmetric,
    /// A construction needs a larger order than was supplied.
    #[error("order {0} is too small: need at least {1} vertices")]
    OrderTooSmall(usize, usize),
    /// Round-robin matchings exist only for odd orders.
    #[error("round-robin order must be odd, got {0}")]
    EvenOrder(usize),
    /// Exhaustive enumeration refused an order beyond the safety limit.
    #[error("enumeration order {0} exceeds the limit {1}")]
    EnumerationTooLarge(usize, usize),
    /// A vertex colouring handed to the layering step was not proper.
    #[error("vertex colouring is not proper: edge {0}-{1} is monochromatic")]
    ImproperVertexColouring(usize, usize),
    /// A colour cap below the proven lower bound was requested.
    #[error("colour cap {cap} is below the lower bound {lower}")]
    CapTooSmall { cap: usize, lower: usize },
    /// The exact search gave up before settling the instance. The true
    /// index lies in `lo..=hi`.
    #[error("search budget exceeded after {nodes} nodes; index lies in {lo}..={hi}")]
    BudgetExceeded { nodes: u64, lo: usize, hi: usize },
    /// The exact search proved that no nd-arc-colouring exists within
    /// the requested cap.
    #[error("no nd-arc-colouring with at most {0} colours")]
    CapExhausted(usize),
    /// A colouring value fell outside the declared colour range.
    #[error("colour {0} outside the declared range 1..={1}")]
    ColourOutOfRange(usize, usize),
    /// The two-matching recolouring left conflicts behind. This signals
    /// an implementation bug, never valid input.
    #[error("theorem violation: conflicts remain after the second matching pass")]
    TheoremViolation,
    /// The per-layer recolouring left conflicts behind after all layers.
    /// This signals an implementation bug, never valid input.
    #[error("corollary violation: conflicts remain after all layer passes")]
    CorollaryViolation,
    /// An internal invariant failed.
    #[error("internal error: {0}")]
    Internal(&'static str),
    /// The text input was malformed.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
