//! Seeded digraph generators for the instance families the toolkit
//! targets: directed cycles and their unions, complete symmetric
//! digraphs, random bipartite digraphs, random tree orientations,
//! tournaments, and binomial random digraphs with or without a degree
//! cap. Every generator is deterministic for a fixed seed.

use crate::digraph::{build_digraph, Bipartition, Digraph};
use crate::{Error, Result};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The stream cipher generator used across the toolkit, keyed by a
/// caller-supplied seed.
pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The directed cycle 0 -> 1 -> ... -> n-1 -> 0.
pub fn cycle(n: usize) -> Result<Digraph> {
    if n < 2 {
        return Err(Error::OrderTooSmall(n, 2));
    }
    let arcs: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    build_digraph(n, &arcs)
}

/// A spanning union of vertex-disjoint directed cycles: the vertices
/// are shuffled and cut into runs of length at least two, each closed
/// into a cycle. Every vertex ends with one arc out and one in.
pub fn union_of_cycles(n: usize, rng: &mut impl Rng) -> Result<Digraph> {
    if n < 2 {
        return Err(Error::OrderTooSmall(n, 2));
    }
    let mut vertices: Vec<usize> = (0..n).collect();
    vertices.shuffle(rng);
    let mut arcs = Vec::with_capacity(n);
    let mut start = 0;
    while start < n {
        let remaining = n - start;
        let len = if remaining <= 3 {
            remaining
        } else {
            let picked = rng.gen_range(2..=remaining);
            // Never strand a single vertex: it could not close a cycle.
            if remaining - picked == 1 {
                picked + 1
            } else {
                picked
            }
        };
        let run = &vertices[start..start + len];
        for i in 0..len {
            arcs.push((run[i], run[(i + 1) % len]));
        }
        start += len;
    }
    build_digraph(n, &arcs)
}

/// A random tournament: one arc per unordered pair, its direction
/// drawn uniformly.
pub fn tournament(n: usize, rng: &mut impl Rng) -> Digraph {
    let mut arcs = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
    for i in 0..n {
        for j in i + 1..n {
            arcs.push(if rng.gen_bool(0.5) { (i, j) } else { (j, i) });
        }
    }
    build_digraph(n, &arcs).expect("one arc per pair is loop- and duplicate-free")
}

/// The binomial random digraph: every ordered pair of distinct
/// vertices becomes an arc independently with probability p.
pub fn gnp(n: usize, p: f64, rng: &mut impl Rng) -> Digraph {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                arcs.push((u, v));
            }
        }
    }
    build_digraph(n, &arcs).expect("distinct ordered pairs")
}

/// A binomial random digraph kept under a degree cap: candidate pairs
/// are visited in shuffled order and an arc is added only while both
/// the tail's out-degree and the head's in-degree stay below `cap`,
/// so the maximum degree never exceeds it.
pub fn gnp_max_degree(n: usize, p: f64, cap: usize, rng: &mut impl Rng) -> Digraph {
    let mut pairs = Vec::with_capacity(n * n.saturating_sub(1));
    for u in 0..n {
        for v in 0..n {
            if u != v {
                pairs.push((u, v));
            }
        }
    }
    pairs.shuffle(rng);
    let mut out_deg = vec![0usize; n];
    let mut in_deg = vec![0usize; n];
    let mut arcs = Vec::new();
    for (u, v) in pairs {
        if out_deg[u] < cap && in_deg[v] < cap && rng.gen_bool(p) {
            out_deg[u] += 1;
            in_deg[v] += 1;
            arcs.push((u, v));
        }
    }
    build_digraph(n, &arcs).expect("distinct ordered pairs")
}

/// A random oriented graph: each unordered pair becomes an edge with
/// probability p and the edge is oriented uniformly, so no pair of
/// opposite arcs can appear.
pub fn random_oriented(n: usize, p: f64, rng: &mut impl Rng) -> Digraph {
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                arcs.push(if rng.gen_bool(0.5) { (i, j) } else { (j, i) });
            }
        }
    }
    build_digraph(n, &arcs).expect("at most one arc per pair")
}

/// A random bipartite digraph on parts of the given sizes (X takes
/// vertices 0..nx, Y the rest): each crossing ordered pair becomes an
/// arc independently with probability p. The generating bipartition is
/// returned alongside.
pub fn random_bipartite(
    nx: usize,
    ny: usize,
    p: f64,
    rng: &mut impl Rng,
) -> (Digraph, Bipartition) {
    let n = nx + ny;
    let mut arcs = Vec::new();
    for x in 0..nx {
        for y in nx..n {
            if rng.gen_bool(p) {
                arcs.push((x, y));
            }
            if rng.gen_bool(p) {
                arcs.push((y, x));
            }
        }
    }
    let d = build_digraph(n, &arcs).expect("crossing pairs are distinct");
    let side = (0..n).map(|v| v >= nx).collect();
    (d, Bipartition { side })
}

/// A random orientation of a uniform random labelled tree; each edge
/// gets one direction uniformly, and independently carries the
/// opposite arc as well with probability `doubled`.
pub fn random_tree_orientation(n: usize, doubled: f64, rng: &mut impl Rng) -> Result<Digraph> {
    if n < 2 {
        return Err(Error::OrderTooSmall(n, 2));
    }
    let sequence: Vec<usize> = (0..n.saturating_sub(2)).map(|_| rng.gen_range(0..n)).collect();
    let mut arcs = Vec::with_capacity(2 * (n - 1));
    for (u, v) in decode_tree_sequence(&sequence, n) {
        let (tail, head) = if rng.gen_bool(0.5) { (u, v) } else { (v, u) };
        arcs.push((tail, head));
        if rng.gen_bool(doubled) {
            arcs.push((head, tail));
        }
    }
    build_digraph(n, &arcs)
}

/// Rebuilds the labelled tree encoded by a degree sequence code of
/// length n-2: each code entry is joined to the smallest current leaf,
/// and the last two leaves are joined to each other.
fn decode_tree_sequence(sequence: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &s in sequence {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in sequence {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a tree always has a leaf");
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let mut last: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let b = last.pop().expect("two leaves remain");
    let a = last.pop().expect("two leaves remain");
    edges.push((a, b));
    edges
}
