//! Digraph representation, degree statistics, the underlying simple
//! graph, and the structural classifiers that drive algorithm dispatch.
//!
//! Vertices are dense indices `0..n`. Arc storage preserves input order
//! so that every algorithm downstream iterates deterministically; the
//! per-vertex adjacency lists are built once at construction.

use std::collections::HashSet;

use crate::{Error, Result};

/// A loop-free, multiplicity-free directed graph. Opposite arcs uv and
/// vu may both be present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
    out_arcs: Vec<Vec<usize>>,
    in_arcs: Vec<Vec<usize>>,
    arc_set: HashSet<(usize, usize)>,
}

impl Digraph {
    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of arcs.
    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// All arcs as (tail, head) pairs, in input order.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// The (tail, head) pair of the arc with the given index.
    pub fn arc(&self, idx: usize) -> (usize, usize) {
        self.arcs[idx]
    }

    /// Indices of the arcs leaving `u`, in input order.
    pub fn out_arcs(&self, u: usize) -> &[usize] {
        &self.out_arcs[u]
    }

    /// Indices of the arcs entering `u`, in input order.
    pub fn in_arcs(&self, u: usize) -> &[usize] {
        &self.in_arcs[u]
    }

    /// Whether the ordered pair (u, v) is an arc.
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arc_set.contains(&(u, v))
    }

    /// Index of the arc (u, v) if present. Linear in d+(u), which is
    /// fine for the small out-lists this crate works with.
    pub fn arc_index(&self, u: usize, v: usize) -> Option<usize> {
        self.out_arcs[u].iter().copied().find(|&e| self.arcs[e].1 == v)
    }

    pub fn out_degree(&self, u: usize) -> usize {
        self.out_arcs[u].len()
    }

    pub fn in_degree(&self, u: usize) -> usize {
        self.in_arcs[u].len()
    }

    /// The digraph with every arc reversed.
    pub fn reverse(&self) -> Digraph {
        let arcs: Vec<(usize, usize)> = self.arcs.iter().map(|&(u, v)| (v, u)).collect();
        build_digraph(self.n, &arcs).expect("reversal preserves validity")
    }
}

/// Per-vertex degrees together with their maxima.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub out_degrees: Vec<usize>,
    pub in_degrees: Vec<usize>,
    pub max_out: usize,
    pub max_in: usize,
}

impl DegreeProfile {
    /// The larger of the maximum outdegree and the maximum indegree.
    pub fn delta_star(&self) -> usize {
        self.max_out.max(self.max_in)
    }

    /// Whether vertex u attains the maximum on both sides at once.
    pub fn is_saturated(&self, u: usize) -> bool {
        let d = self.delta_star();
        self.out_degrees[u] == d && self.in_degrees[u] == d
    }

    pub fn out_degree(&self, u: usize) -> usize {
        self.out_degrees[u]
    }

    pub fn in_degree(&self, u: usize) -> usize {
        self.in_degrees[u]
    }
}

/// A simple undirected graph on dense vertex indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>,
}

impl SimpleGraph {
    /// Builds a simple graph, normalising and rejecting bad edges.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<SimpleGraph> {
        let mut seen = HashSet::new();
        let mut normalised = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= n {
                return Err(Error::VertexOutOfRange(a, n));
            }
            if b >= n {
                return Err(Error::VertexOutOfRange(b, n));
            }
            if a == b {
                return Err(Error::LoopArc(a));
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(Error::DuplicateArc(e.0, e.1));
            }
            normalised.push(e);
        }
        let mut adj = vec![Vec::new(); n];
        for (idx, &(a, b)) in normalised.iter().enumerate() {
            adj[a].push((b, idx));
            adj[b].push((a, idx));
        }
        Ok(SimpleGraph { n, edges: normalised, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as (min, max) pairs, in insertion order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbours of `u` as (vertex, edge index) pairs.
    pub fn adj(&self, u: usize) -> &[(usize, usize)] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).max().unwrap_or(0)
    }
}

/// Assignment of every vertex to one of two sides. `side[v]` is false
/// for the X side and true for the Y side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub side: Vec<bool>,
}

impl Bipartition {
    pub fn is_x(&self, v: usize) -> bool {
        !self.side[v]
    }

    pub fn is_y(&self, v: usize) -> bool {
        self.side[v]
    }
}

/// Structural facts about a digraph, computed once by [`classify`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    /// No pair of opposite arcs.
    pub oriented: bool,
    /// A two-colouring of the underlying graph, when one exists.
    pub bipartition: Option<Bipartition>,
    /// The underlying graph is connected and acyclic.
    pub is_tree: bool,
    /// Every ordered pair of distinct vertices is an arc.
    pub complete_symmetric: bool,
}

/// Validates and builds a digraph from an arc list.
///
/// Rejects loops, duplicate ordered pairs, and endpoints outside
/// `0..n`, each with its own error kind.
pub fn build_digraph(n: usize, arcs: &[(usize, usize)]) -> Result<Digraph> {
    let mut arc_set = HashSet::with_capacity(arcs.len());
    for &(u, v) in arcs {
        if u >= n {
            return Err(Error::VertexOutOfRange(u, n));
        }
        if v >= n {
            return Err(Error::VertexOutOfRange(v, n));
        }
        if u == v {
            return Err(Error::LoopArc(u));
        }
        if !arc_set.insert((u, v)) {
            return Err(Error::DuplicateArc(u, v));
        }
    }
    let mut out_arcs = vec![Vec::new(); n];
    let mut in_arcs = vec![Vec::new(); n];
    for (idx, &(u, v)) in arcs.iter().enumerate() {
        out_arcs[u].push(idx);
        in_arcs[v].push(idx);
    }
    Ok(Digraph { n, arcs: arcs.to_vec(), out_arcs, in_arcs, arc_set })
}

/// Exact per-vertex degree counts and their maxima.
pub fn degrees(d: &Digraph) -> DegreeProfile {
    let out_degrees: Vec<usize> = (0..d.n()).map(|u| d.out_degree(u)).collect();
    let in_degrees: Vec<usize> = (0..d.n()).map(|u| d.in_degree(u)).collect();
    let max_out = out_degrees.iter().copied().max().unwrap_or(0);
    let max_in = in_degrees.iter().copied().max().unwrap_or(0);
    DegreeProfile { out_degrees, in_degrees, max_out, max_in }
}

/// The simple graph obtained by forgetting arc directions. A pair of
/// opposite arcs collapses to a single edge.
pub fn underlying_graph(d: &Digraph) -> SimpleGraph {
    let mut seen = HashSet::new();
    let mut edges = Vec::new();
    for &(u, v) in d.arcs() {
        let e = (u.min(v), u.max(v));
        if seen.insert(e) {
            edges.push(e);
        }
    }
    SimpleGraph::new(d.n(), &edges).expect("arcs of a valid digraph give valid edges")
}

/// Two-colours the underlying graph by breadth-first search, one
/// component at a time. Component roots, and in particular isolated
/// vertices, go to side X.
fn two_colour(g: &SimpleGraph) -> Option<Bipartition> {
    let n = g.n();
    let mut side = vec![None; n];
    let mut queue = std::collections::VecDeque::new();
    for root in 0..n {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(false);
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            let su = side[u].unwrap();
            for &(w, _) in g.adj(u) {
                match side[w] {
                    None => {
                        side[w] = Some(!su);
                        queue.push_back(w);
                    }
                    Some(sw) if sw == su => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(Bipartition { side: side.into_iter().map(|s| s.unwrap()).collect() })
}

/// Whether the underlying graph is connected and acyclic.
fn is_tree(g: &SimpleGraph) -> bool {
    let n = g.n();
    if n == 0 {
        return false;
    }
    if g.edge_count() != n - 1 {
        return false;
    }
    // With exactly n-1 edges, connectivity rules out cycles.
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &(w, _) in g.adj(u) {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == n
}

/// Computes the structural facts used to pick an algorithm: whether the
/// digraph is oriented, a bipartition of the underlying graph when one
/// exists, whether the underlying graph is a tree, and whether the
/// digraph is complete symmetric.
pub fn classify(d: &Digraph) -> Classification {
    let oriented = d.arcs().iter().all(|&(u, v)| !d.has_arc(v, u));
    let und = underlying_graph(d);
    let bipartition = two_colour(&und);
    let tree = is_tree(&und);
    // Arcs are unique, so the count alone settles completeness.
    let complete_symmetric = d.n() >= 2 && d.arc_count() == d.n() * (d.n() - 1);
    Classification { oriented, bipartition, is_tree: tree, complete_symmetric }
}
