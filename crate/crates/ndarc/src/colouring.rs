//! Arc-colourings, palette tables, and the verification oracle every
//! algorithm's output is checked against.
//!
//! The palette of a vertex u under a colouring is the ordered pair
//! (S+(u), S-(u)) of colour sets on its outgoing and incoming arcs. A
//! proper colouring is neighbour-distinguishing (nd) exactly when the
//! palettes at the two ends of every arc differ as ordered pairs. Note
//! that (A, B) and (B, A) count as different whenever A differs from B.

use std::collections::BTreeSet;

use crate::digraph::{degrees, Digraph};
use crate::{Error, Result};

/// A total assignment of colours `1..=k` to the arcs of a digraph, by
/// arc index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcColouring {
    colours: Vec<usize>,
    k: usize,
}

impl ArcColouring {
    /// Wraps a colour vector, checking that every value lies in `1..=k`.
    pub fn new(colours: Vec<usize>, k: usize) -> Result<ArcColouring> {
        for &c in &colours {
            if c == 0 || c > k {
                return Err(Error::ColourOutOfRange(c, k));
            }
        }
        Ok(ArcColouring { colours, k })
    }

    /// The declared number of colours.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Colour of the arc with the given index.
    pub fn colour(&self, arc: usize) -> usize {
        self.colours[arc]
    }

    /// All arc colours, by arc index.
    pub fn colours(&self) -> &[usize] {
        &self.colours
    }

    /// Number of distinct colours actually appearing.
    pub fn colours_used(&self) -> usize {
        let mut seen: Vec<usize> = self.colours.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }
}

/// Per-vertex ordered pairs (S+, S-) of colour sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaletteTable {
    out_sets: Vec<BTreeSet<usize>>,
    in_sets: Vec<BTreeSet<usize>>,
}

impl PaletteTable {
    pub fn out_set(&self, u: usize) -> &BTreeSet<usize> {
        &self.out_sets[u]
    }

    pub fn in_set(&self, u: usize) -> &BTreeSet<usize> {
        &self.in_sets[u]
    }

    /// Whether u and v carry the same ordered palette pair.
    pub fn same_palette(&self, u: usize, v: usize) -> bool {
        self.out_sets[u] == self.out_sets[v] && self.in_sets[u] == self.in_sets[v]
    }
}

/// Verdict of the properness check. A failure carries the offending
/// arc pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Properness {
    Proper,
    /// Two arcs leave the same vertex with one colour.
    SharedTail { vertex: usize, first_arc: usize, second_arc: usize },
    /// Two arcs enter the same vertex with one colour.
    SharedHead { vertex: usize, first_arc: usize, second_arc: usize },
}

impl Properness {
    pub fn is_proper(&self) -> bool {
        matches!(self, Properness::Proper)
    }
}

/// Verdict of the full nd check with a witness on failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NdVerdict {
    Nd,
    Improper(Properness),
    /// An arc whose endpoints share their palette pair.
    Conflict { arc: usize },
}

impl NdVerdict {
    pub fn is_nd(&self) -> bool {
        matches!(self, NdVerdict::Nd)
    }
}

/// Collects S+(u) and S-(u) for every vertex.
pub fn palettes(d: &Digraph, colouring: &ArcColouring) -> PaletteTable {
    let mut out_sets = vec![BTreeSet::new(); d.n()];
    let mut in_sets = vec![BTreeSet::new(); d.n()];
    for (idx, &(u, v)) in d.arcs().iter().enumerate() {
        let c = colouring.colour(idx);
        out_sets[u].insert(c);
        in_sets[v].insert(c);
    }
    PaletteTable { out_sets, in_sets }
}

/// Checks that no two arcs share a tail and a colour and no two arcs
/// share a head and a colour. Consecutive arcs vu, uw may repeat a
/// colour; that is not a violation.
pub fn is_proper(d: &Digraph, colouring: &ArcColouring) -> Properness {
    for u in 0..d.n() {
        for (pos, &e) in d.out_arcs(u).iter().enumerate() {
            for &f in &d.out_arcs(u)[pos + 1..] {
                if colouring.colour(e) == colouring.colour(f) {
                    return Properness::SharedTail { vertex: u, first_arc: e, second_arc: f };
                }
            }
        }
        for (pos, &e) in d.in_arcs(u).iter().enumerate() {
            for &f in &d.in_arcs(u)[pos + 1..] {
                if colouring.colour(e) == colouring.colour(f) {
                    return Properness::SharedHead { vertex: u, first_arc: e, second_arc: f };
                }
            }
        }
    }
    Properness::Proper
}

/// Arcs uv whose endpoints carry identical ordered palette pairs, in
/// arc-index order.
pub fn conflicts(d: &Digraph, colouring: &ArcColouring) -> Vec<usize> {
    let table = palettes(d, colouring);
    conflicts_with_table(d, &table)
}

/// Same as [`conflicts`] for a palette table that is already at hand.
pub fn conflicts_with_table(d: &Digraph, table: &PaletteTable) -> Vec<usize> {
    d.arcs()
        .iter()
        .enumerate()
        .filter(|&(_, &(u, v))| table.same_palette(u, v))
        .map(|(idx, _)| idx)
        .collect()
}

/// Whether the colouring is proper and distinguishes the endpoints of
/// every arc.
pub fn is_nd(d: &Digraph, colouring: &ArcColouring) -> NdVerdict {
    let properness = is_proper(d, colouring);
    if !properness.is_proper() {
        return NdVerdict::Improper(properness);
    }
    match conflicts(d, colouring).first() {
        Some(&arc) => NdVerdict::Conflict { arc },
        None => NdVerdict::Nd,
    }
}

/// Degree-based lower bound on the neighbour-distinguishing index.
///
/// Returns Δ* in general and Δ*+1 when some arc joins two vertices
/// that both attain Δ* on both sides: with only Δ* colours both ends
/// of such an arc would carry the full palette pair and could never be
/// distinguished. The two saturated vertices must be adjacent for that
/// argument, so adjacency is required here. Returns 0 on an arcless
/// digraph.
pub fn lower_bound(d: &Digraph) -> usize {
    if d.arc_count() == 0 {
        return 0;
    }
    let profile = degrees(d);
    let delta = profile.delta_star();
    let bump = d
        .arcs()
        .iter()
        .any(|&(u, v)| profile.is_saturated(u) && profile.is_saturated(v));
    if bump {
        delta + 1
    } else {
        delta
    }
}
