//! Closed-form nd-colourings for two families: complete symmetric
//! digraphs, coloured with exactly n colours, and digraphs whose
//! underlying graph is a tree, coloured with at most Δ*+1 colours.

use crate::colouring::ArcColouring;
use crate::digraph::{classify, underlying_graph, Digraph};
use crate::{digraph::build_digraph, Error, Result};

/// The n matchings of K_n for odd n given by the round-robin rule:
/// M_k holds every pair {i, j} with i + j ≡ 2k (mod n). Each M_k is a
/// maximal matching covering everything except vertex k, and together
/// they partition the edge set.
#[derive(Debug, Clone)]
pub struct RoundRobin {
    n: usize,
    matchings: Vec<Vec<(usize, usize)>>,
}

impl RoundRobin {
    pub fn n(&self) -> usize {
        self.n
    }

    /// The pairs of matching k, each as (min, max).
    pub fn matching(&self, k: usize) -> &[(usize, usize)] {
        &self.matchings[k]
    }

    /// Index of the matching containing the pair {i, j}: the k solving
    /// i + j ≡ 2k (mod n), which is well defined because 2 is
    /// invertible mod odd n.
    pub fn matching_of(&self, i: usize, j: usize) -> usize {
        let inv2 = (self.n + 1) / 2;
        (i + j) * inv2 % self.n
    }
}

/// The complete symmetric digraph: every ordered pair of distinct
/// vertices is an arc. Arcs are listed tail-major.
pub fn knstar(n: usize) -> Result<Digraph> {
    if n < 2 {
        return Err(Error::OrderTooSmall(n, 2));
    }
    let mut arcs = Vec::with_capacity(n * (n - 1));
    for i in 0..n {
        for j in 0..n {
            if i != j {
                arcs.push((i, j));
            }
        }
    }
    build_digraph(n, &arcs)
}

/// Builds and validates the round-robin matchings for odd n >= 3.
pub fn round_robin(n: usize) -> Result<RoundRobin> {
    if n % 2 == 0 {
        return Err(Error::EvenOrder(n));
    }
    if n < 3 {
        return Err(Error::OrderTooSmall(n, 3));
    }
    let inv2 = (n + 1) / 2;
    let mut matchings = vec![Vec::new(); n];
    for i in 0..n {
        for j in i + 1..n {
            matchings[(i + j) * inv2 % n].push((i, j));
        }
    }
    // Check the advertised shape: matching k covers V minus vertex k,
    // each vertex exactly once.
    for (k, matching) in matchings.iter().enumerate() {
        let mut covered = vec![false; n];
        for &(i, j) in matching {
            if covered[i] || covered[j] {
                return Err(Error::Internal("round-robin matching covers a vertex twice"));
            }
            covered[i] = true;
            covered[j] = true;
        }
        for v in 0..n {
            if covered[v] == (v == k) {
                return Err(Error::Internal("round-robin matching misses the wrong vertex"));
            }
        }
    }
    Ok(RoundRobin { n, matchings })
}

/// An nd-arc-colouring of the complete symmetric digraph of order n
/// using exactly n colours, the optimum.
///
/// For n = 2 the two arcs get the two colours. For odd n both arcs
/// between i and j get the index of the round-robin matching holding
/// {i, j}; vertex i then misses exactly colour i on both sides. For
/// even n the odd construction on the first n-1 vertices is extended:
/// arcs i -> i+1 (mod n-1) hand their colour over to the new last
/// vertex's arcs and are recoloured with the fresh colour, so that the
/// fresh colour surrounds every old vertex and never touches the last
/// one, while each old vertex keeps its own missing colour.
///
/// Colours are built on 0..n-1 and reported shifted up by one.
pub fn colour_knstar(n: usize) -> Result<ArcColouring> {
    colour_knstar_on(&knstar(n)?)
}

/// [`colour_knstar`] applied to an existing digraph, which must be
/// complete symmetric; its own arc order is kept.
pub fn colour_knstar_on(d: &Digraph) -> Result<ArcColouring> {
    let n = d.n();
    if n < 2 {
        return Err(Error::OrderTooSmall(n, 2));
    }
    if !classify(d).complete_symmetric {
        return Err(Error::NotCompleteSymmetric);
    }
    let rr = if n == 2 {
        None
    } else if n % 2 == 1 {
        Some(round_robin(n)?)
    } else {
        Some(round_robin(n - 1)?)
    };
    let colour_of = |x: usize, y: usize| -> usize {
        match &rr {
            // Arc 0->1 gets colour 0, arc 1->0 gets colour 1.
            None => x,
            Some(rr) if n % 2 == 1 => rr.matching_of(x, y),
            Some(rr) => {
                let m = n - 1;
                if x < m && y < m {
                    if y == (x + 1) % m {
                        m
                    } else {
                        rr.matching_of(x, y)
                    }
                } else if y == m {
                    rr.matching_of((x + 1) % m, x)
                } else {
                    rr.matching_of((y + m - 1) % m, y)
                }
            }
        }
    };
    let colours = d.arcs().iter().map(|&(x, y)| colour_of(x, y) + 1).collect();
    ArcColouring::new(colours, n)
}

/// An nd-arc-colouring with at most Δ*+1 colours for a digraph whose
/// underlying graph is a tree.
///
/// Works by induction on leaves: repeatedly strip an endpoint of a
/// longest path of the current subtree until two vertices remain,
/// colour the base arcs, then replay the strips in reverse. Each
/// replayed vertex y hangs off a single active neighbour w. When the
/// step raises Δ*, the at most two arcs between w and y take the brand
/// new colour, which cannot clash or collide. Otherwise the colours
/// for those arcs are found by scanning pairs lexicographically and
/// keeping the first choice that is proper at w and leaves w
/// distinguished from all its active neighbours; the degree margin at
/// the one non-leaf neighbour guarantees such a choice exists.
pub fn colour_tree(d: &Digraph) -> Result<ArcColouring> {
    if d.arc_count() == 0 {
        return Err(Error::NothingToColour);
    }
    if !classify(d).is_tree {
        return Err(Error::NotATree);
    }
    let n = d.n();
    let und = underlying_graph(d);
    let neighbours: Vec<Vec<usize>> =
        (0..n).map(|v| und.adj(v).iter().map(|&(w, _)| w).collect()).collect();

    let mut active = vec![true; n];
    let mut removal = Vec::with_capacity(n.saturating_sub(2));
    for _ in 2..n {
        let y = longest_path_endpoint(&neighbours, &active);
        removal.push(y);
        active[y] = false;
    }

    let mut colours = vec![0usize; d.arc_count()];
    let mut out_deg = vec![0usize; n];
    let mut in_deg = vec![0usize; n];

    // Base: the two surviving vertices and the arcs between them.
    let base: Vec<usize> = (0..n).filter(|&v| active[v]).collect();
    let (p, q) = (base[0], base[1]);
    let mut base_arcs: Vec<usize> =
        [d.arc_index(p, q), d.arc_index(q, p)].into_iter().flatten().collect();
    base_arcs.sort_unstable();
    for (offset, &e) in base_arcs.iter().enumerate() {
        colours[e] = offset + 1;
        let (t, h) = d.arc(e);
        out_deg[t] += 1;
        in_deg[h] += 1;
    }
    let mut delta = out_deg.iter().chain(in_deg.iter()).copied().max().unwrap();

    // The out/in palette of v over the arcs coloured so far.
    let palette = |colours: &[usize], v: usize| -> (Vec<usize>, Vec<usize>) {
        let collect = |arcs: &[usize]| {
            let mut set: Vec<usize> =
                arcs.iter().map(|&e| colours[e]).filter(|&c| c != 0).collect();
            set.sort_unstable();
            set
        };
        (collect(d.out_arcs(v)), collect(d.in_arcs(v)))
    };

    for &y in removal.iter().rev() {
        active[y] = true;
        let w = *neighbours[y]
            .iter()
            .find(|&&z| active[z])
            .expect("replayed vertex hangs off the live subtree");
        let alpha = d.arc_index(w, y);
        let beta = d.arc_index(y, w);
        if let Some(e) = alpha {
            out_deg[w] += 1;
            in_deg[y] += 1;
            debug_assert!(colours[e] == 0);
        }
        if let Some(e) = beta {
            out_deg[y] += 1;
            in_deg[w] += 1;
            debug_assert!(colours[e] == 0);
        }
        let new_delta = delta
            .max(out_deg[w])
            .max(in_deg[w])
            .max(out_deg[y])
            .max(in_deg[y]);

        if new_delta > delta {
            // A brand new colour distinguishes y and w from everyone.
            let fresh = new_delta + 1;
            for e in [alpha, beta].into_iter().flatten() {
                colours[e] = fresh;
            }
        } else {
            let (out_w, in_w) = palette(&colours, w);
            let choices_a: Vec<usize> = match alpha {
                Some(_) => (1..=delta + 1).filter(|c| !out_w.contains(c)).collect(),
                None => vec![0],
            };
            let choices_b: Vec<usize> = match beta {
                Some(_) => (1..=delta + 1).filter(|c| !in_w.contains(c)).collect(),
                None => vec![0],
            };
            let mut found = false;
            'scan: for &a in &choices_a {
                for &b in &choices_b {
                    if let Some(e) = alpha {
                        colours[e] = a;
                    }
                    if let Some(e) = beta {
                        colours[e] = b;
                    }
                    let pal_w = palette(&colours, w);
                    let distinguished = neighbours[w]
                        .iter()
                        .filter(|&&z| active[z])
                        .all(|&z| palette(&colours, z) != pal_w);
                    if distinguished {
                        found = true;
                        break 'scan;
                    }
                }
            }
            if !found {
                return Err(Error::Internal("tree extension found no admissible colours"));
            }
        }
        delta = new_delta;
    }

    ArcColouring::new(colours, delta + 1)
}

/// An endpoint of a longest path of the active subtree, located by two
/// breadth-first sweeps. Ties break on the lower vertex index.
fn longest_path_endpoint(neighbours: &[Vec<usize>], active: &[bool]) -> usize {
    let start = (0..active.len()).find(|&v| active[v]).expect("subtree is nonempty");
    let far = bfs_farthest(neighbours, active, start);
    bfs_farthest(neighbours, active, far)
}

fn bfs_farthest(neighbours: &[Vec<usize>], active: &[bool], start: usize) -> usize {
    let mut dist = vec![usize::MAX; active.len()];
    let mut queue = std::collections::VecDeque::from([start]);
    dist[start] = 0;
    let (mut best, mut best_dist) = (start, 0);
    while let Some(u) = queue.pop_front() {
        for &w in &neighbours[u] {
            if active[w] && dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                if dist[w] > best_dist {
                    best = w;
                    best_dist = dist[w];
                }
                queue.push_back(w);
            }
        }
    }
    best
}
