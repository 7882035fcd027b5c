//! Regular completion, decomposition of regular digraphs into
//! spanning 1-regular factors, the two-colour scheme for one factor,
//! and the general nd-colouring that combines them to stay within
//! 2Δ* colours on any digraph with at least one arc.

use crate::colouring::ArcColouring;
use crate::digraph::{build_digraph, degrees, Digraph};
use crate::{Error, Result};

/// A spanning subdigraph in which every vertex has exactly one
/// outgoing and one incoming arc: a loop-free permutation of the
/// vertices, whose functional graph is a union of directed cycles of
/// length at least two.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneFactor {
    successor: Vec<usize>,
}

impl OneFactor {
    pub fn new(successor: Vec<usize>) -> Result<Self> {
        let n = successor.len();
        let mut seen = vec![false; n];
        for (u, &v) in successor.iter().enumerate() {
            if v >= n {
                return Err(Error::VertexOutOfRange(v, n));
            }
            if v == u {
                return Err(Error::LoopArc(u));
            }
            if seen[v] {
                return Err(Error::Internal("factor successor map is not a permutation"));
            }
            seen[v] = true;
        }
        Ok(OneFactor { successor })
    }

    pub fn successor(&self, u: usize) -> usize {
        self.successor[u]
    }

    pub fn n(&self) -> usize {
        self.successor.len()
    }

    /// The directed cycles of the factor. Each cycle is listed from
    /// its minimum vertex, and cycles are ordered by that minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.successor.len();
        let mut visited = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if visited[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut u = start;
            while !visited[u] {
                visited[u] = true;
                cycle.push(u);
                u = self.successor[u];
            }
            cycles.push(cycle);
        }
        cycles
    }
}

/// A digraph embedded in a regular host: the original vertices keep
/// their identities (the injection is the identity on 0..original_n)
/// and every host arc is flagged by whether it belongs to the
/// original.
#[derive(Debug, Clone)]
pub struct Embedding {
    host: Digraph,
    vertex_map: Vec<usize>,
    from_original: Vec<bool>,
}

impl Embedding {
    pub fn host(&self) -> &Digraph {
        &self.host
    }

    pub fn vertex_map(&self) -> &[usize] {
        &self.vertex_map
    }

    pub fn is_original(&self, arc: usize) -> bool {
        self.from_original[arc]
    }

    pub fn original_arc_count(&self) -> usize {
        self.from_original.iter().filter(|&&f| f).count()
    }
}

/// Embeds a digraph in a Δ*-regular host by adding arcs and, when the
/// missing degrees cannot be absorbed in place, fresh vertices.
///
/// The primary strategy pads the degree deficit with a unit-capacity
/// flow: each vertex offers its missing out-degree and asks for its
/// missing in-degree, any non-arc ordered pair may carry one unit, and
/// a saturating flow is exactly a set of new arcs completing the
/// digraph. The flow is attempted with 0, 1, ... up to Δ*+1 fresh
/// full-deficiency vertices, so the host never grows by more than
/// Δ*+1 vertices. If no attempt saturates, a doubling construction
/// takes over: adjoin a reversed disjoint copy and join each deficient
/// vertex to its mirror image, which lowers the maximum deficiency by
/// one per round and always terminates.
pub fn regularize(d: &Digraph) -> Embedding {
    let delta = degrees(d).delta_star();
    let identity: Vec<usize> = (0..d.n()).collect();
    if is_regular(d, delta) {
        return Embedding {
            host: d.clone(),
            vertex_map: identity,
            from_original: vec![true; d.arc_count()],
        };
    }
    for fresh in 0..=delta + 1 {
        if let Some(new_arcs) = completion_flow(d, delta, fresh) {
            let mut arcs = d.arcs().to_vec();
            arcs.extend(new_arcs);
            let host = build_digraph(d.n() + fresh, &arcs)
                .expect("completion adds only missing non-loop arcs");
            debug_assert!(is_regular(&host, delta));
            let mut from_original = vec![true; d.arc_count()];
            from_original.resize(host.arc_count(), false);
            return Embedding { host, vertex_map: identity, from_original };
        }
    }
    let mut host = d.clone();
    while !is_regular(&host, delta) {
        host = double_once(&host, delta);
    }
    let mut from_original = vec![true; d.arc_count()];
    from_original.resize(host.arc_count(), false);
    Embedding { host, vertex_map: identity, from_original }
}

fn is_regular(d: &Digraph, k: usize) -> bool {
    let deg = degrees(d);
    (0..d.n()).all(|v| deg.out_degree(v) == k && deg.in_degree(v) == k)
}

/// One round of the fallback: the disjoint union of the digraph with
/// its reversed copy, plus an arc from each out-deficient vertex to
/// its mirror and from the mirror of each in-deficient vertex back.
/// The original arcs stay at the front of the arc list.
fn double_once(d: &Digraph, delta: usize) -> Digraph {
    let n = d.n();
    let deg = degrees(d);
    let mut arcs = d.arcs().to_vec();
    arcs.extend(d.arcs().iter().map(|&(u, v)| (v + n, u + n)));
    for u in 0..n {
        if deg.out_degree(u) < delta {
            arcs.push((u, u + n));
        }
        if deg.in_degree(u) < delta {
            arcs.push((u + n, u));
        }
    }
    build_digraph(2 * n, &arcs).expect("mirror arcs are fresh and loop-free")
}

/// Finds a set of new arcs giving every vertex out- and in-degree
/// delta, using `fresh` extra vertices, or reports that no such set
/// exists. Solved as a maximum flow on the deficiency network with
/// unit capacity per candidate arc.
fn completion_flow(d: &Digraph, delta: usize, fresh: usize) -> Option<Vec<(usize, usize)>> {
    let n = d.n() + fresh;
    let deg = degrees(d);
    let out_deficit =
        |u: usize| if u < d.n() { delta - deg.out_degree(u) } else { delta };
    let in_deficit =
        |v: usize| if v < d.n() { delta - deg.in_degree(v) } else { delta };
    let total: usize = (0..n).map(out_deficit).sum();

    // Nodes: 0 = source, 1..=n supply side, n+1..=2n demand side,
    // 2n+1 = sink.
    let source = 0;
    let sink = 2 * n + 1;
    let mut cap = vec![vec![0u64; 2 * n + 2]; 2 * n + 2];
    for u in 0..n {
        cap[source][1 + u] = out_deficit(u) as u64;
        cap[n + 1 + u][sink] = in_deficit(u) as u64;
        for v in 0..n {
            if u != v && !d.has_arc(u, v) {
                cap[1 + u][n + 1 + v] = 1;
            }
        }
    }
    if max_flow(&mut cap, source, sink) != total as u64 {
        return None;
    }
    let mut new_arcs = Vec::with_capacity(total);
    for u in 0..n {
        for v in 0..n {
            if u != v && !d.has_arc(u, v) && cap[1 + u][n + 1 + v] == 0 {
                new_arcs.push((u, v));
            }
        }
    }
    Some(new_arcs)
}

/// Maximum flow by shortest augmenting paths, on a dense residual
/// capacity matrix that is updated in place.
fn max_flow(cap: &mut [Vec<u64>], source: usize, sink: usize) -> u64 {
    let n = cap.len();
    let mut total = 0;
    loop {
        let mut parent = vec![usize::MAX; n];
        parent[source] = source;
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for v in 0..n {
                if parent[v] == usize::MAX && cap[u][v] > 0 {
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        if parent[sink] == usize::MAX {
            return total;
        }
        let mut bottleneck = u64::MAX;
        let mut v = sink;
        while v != source {
            let u = parent[v];
            bottleneck = bottleneck.min(cap[u][v]);
            v = u;
        }
        let mut v = sink;
        while v != source {
            let u = parent[v];
            cap[u][v] -= bottleneck;
            cap[v][u] += bottleneck;
            v = u;
        }
        total += bottleneck;
    }
}

/// Splits a k-regular digraph into k arc-disjoint spanning 1-regular
/// factors by peeling off k perfect matchings of the bipartite split,
/// each found with augmenting paths.
pub fn one_factorize(d: &Digraph, k: usize) -> Result<Vec<OneFactor>> {
    if !is_regular(d, k) {
        return Err(Error::NotRegular(k));
    }
    let n = d.n();
    let mut used = vec![false; d.arc_count()];
    let mut factors = Vec::with_capacity(k);
    for _ in 0..k {
        let adj: Vec<Vec<usize>> = (0..n)
            .map(|u| {
                d.out_arcs(u)
                    .iter()
                    .copied()
                    .filter(|&e| !used[e])
                    .map(|e| d.arc(e).1)
                    .collect()
            })
            .collect();
        let mut matched_to: Vec<Option<usize>> = vec![None; n];
        for u in 0..n {
            let mut visited = vec![false; n];
            if !augment(u, &adj, &mut visited, &mut matched_to) {
                return Err(Error::Internal("regular digraph failed to split into factors"));
            }
        }
        let mut successor = vec![0usize; n];
        for v in 0..n {
            let u = matched_to[v].ok_or(Error::Internal("matching is not perfect"))?;
            successor[u] = v;
            let e = d
                .arc_index(u, v)
                .ok_or(Error::Internal("matched pair is not an arc"))?;
            used[e] = true;
        }
        factors.push(OneFactor::new(successor)?);
    }
    debug_assert!(used.iter().all(|&f| f));
    Ok(factors)
}

fn augment(
    u: usize,
    adj: &[Vec<usize>],
    visited: &mut [bool],
    matched_to: &mut [Option<usize>],
) -> bool {
    for &v in &adj[u] {
        if visited[v] {
            continue;
        }
        visited[v] = true;
        if matched_to[v].is_none() || augment(matched_to[v].unwrap(), adj, visited, matched_to) {
            matched_to[v] = Some(u);
            return true;
        }
    }
    false
}

/// Colours the arcs of one factor with the two colours of `pair`,
/// returning the colour of each vertex's outgoing factor arc.
///
/// Each cycle is walked from its minimum vertex. Even cycles simply
/// alternate the two colours. Odd cycles start with the second colour
/// doubled on the first two arcs and alternate from there, so that no
/// vertex sees the same colour twice on one side and consecutive
/// palette pairs along the cycle always differ.
pub fn colour_one_factor(factor: &OneFactor, pair: (usize, usize)) -> Vec<usize> {
    let (a, b) = pair;
    debug_assert_ne!(a, b);
    let mut colour_by_tail = vec![0usize; factor.n()];
    for cycle in factor.cycles() {
        let odd = cycle.len() % 2 == 1;
        for (i, &u) in cycle.iter().enumerate() {
            colour_by_tail[u] = if odd {
                if i == 0 || i % 2 == 1 {
                    b
                } else {
                    a
                }
            } else if i % 2 == 0 {
                a
            } else {
                b
            };
        }
    }
    colour_by_tail
}

/// An nd-arc-colouring of any digraph with at least one arc, using at
/// most 2Δ* colours: embed in a Δ*-regular host, split the host into
/// Δ* factors, give factor i the colour pair (2i-1, 2i), and keep the
/// colours of the original arcs.
pub fn colour_general(d: &Digraph) -> Result<ArcColouring> {
    if d.arc_count() == 0 {
        return Err(Error::NothingToColour);
    }
    let delta = degrees(d).delta_star();
    let embedding = regularize(d);
    let host = embedding.host();
    let factors = one_factorize(host, delta)?;
    let mut host_colours = vec![0usize; host.arc_count()];
    for (i, factor) in factors.iter().enumerate() {
        let by_tail = colour_one_factor(factor, (2 * i + 1, 2 * i + 2));
        for u in 0..host.n() {
            let e = host
                .arc_index(u, factor.successor(u))
                .ok_or(Error::Internal("factor arc missing from host"))?;
            host_colours[e] = by_tail[u];
        }
    }
    let colours = host_colours[..d.arc_count()].to_vec();
    debug_assert!((0..d.arc_count()).all(|e| embedding.is_original(e)));
    ArcColouring::new(colours, 2 * delta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::{is_nd, palettes};
    use crate::constructions::knstar;
    use std::collections::BTreeSet;

    fn arc_set(d: &Digraph) -> BTreeSet<(usize, usize)> {
        d.arcs().iter().copied().collect()
    }

    #[test]
    fn regularize_completes_a_single_arc_to_the_two_cycle() {
        let d = build_digraph(2, &[(0, 1)]).unwrap();
        let emb = regularize(&d);
        assert_eq!(emb.host().n(), 2, "no fresh vertices needed");
        assert_eq!(emb.host().arcs(), &[(0, 1), (1, 0)]);
        assert!(emb.is_original(0));
        assert!(!emb.is_original(1));
        assert_eq!(emb.vertex_map(), &[0, 1]);
    }

    #[test]
    fn regularize_keeps_a_regular_digraph_unchanged() {
        let cycle = build_digraph(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let emb = regularize(&cycle);
        assert_eq!(emb.host().arcs(), cycle.arcs());
        assert_eq!(emb.original_arc_count(), 3);
        assert!((0..3).all(|e| emb.is_original(e)));
    }

    #[test]
    fn regularize_restores_the_arc_missing_from_k3_star() {
        let d = build_digraph(3, &[(0, 1), (0, 2), (1, 0), (1, 2), (2, 0)]).unwrap();
        let emb = regularize(&d);
        assert_eq!(emb.host().n(), 3);
        assert_eq!(arc_set(emb.host()), arc_set(&knstar(3).unwrap()));
    }

    #[test]
    fn regularize_stays_within_the_fresh_vertex_budget() {
        let samples = [
            build_digraph(4, &[(0, 1), (1, 2), (2, 1), (3, 2)]).unwrap(),
            build_digraph(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap(),
            build_digraph(6, &[(0, 1), (2, 3), (4, 5), (1, 2), (5, 0), (3, 0)]).unwrap(),
        ];
        for d in &samples {
            let delta = degrees(d).delta_star();
            let emb = regularize(d);
            assert!(emb.host().n() <= d.n() + delta + 1);
            let deg = degrees(emb.host());
            for v in 0..emb.host().n() {
                assert_eq!(deg.out_degree(v), delta);
                assert_eq!(deg.in_degree(v), delta);
            }
            assert_eq!(emb.original_arc_count(), d.arc_count());
            for (e, &(u, v)) in d.arcs().iter().enumerate() {
                assert!(emb.is_original(e));
                assert_eq!(emb.host().arc(e), (u, v), "original arcs keep their slots");
            }
        }
    }

    #[test]
    fn doubling_round_joins_deficient_vertices_to_their_mirrors() {
        let d = build_digraph(2, &[(0, 1)]).unwrap();
        let doubled = double_once(&d, 1);
        assert_eq!(doubled.n(), 4);
        // Reversed copy contributes (3, 2); vertex 1 is out-deficient
        // and joins forward to its mirror 3, vertex 0 is in-deficient
        // and is joined from its mirror 2.
        assert_eq!(
            arc_set(&doubled),
            BTreeSet::from([(0, 1), (3, 2), (1, 3), (2, 0)])
        );
        let deg = degrees(&doubled);
        for v in 0..4 {
            assert_eq!(deg.out_degree(v), 1);
            assert_eq!(deg.in_degree(v), 1);
        }
    }

    #[test]
    fn one_factorize_splits_the_two_cycle() {
        let d = build_digraph(2, &[(0, 1), (1, 0)]).unwrap();
        let factors = one_factorize(&d, 1).unwrap();
        assert_eq!(factors.len(), 1);
        assert_eq!(factors[0].successor(0), 1);
        assert_eq!(factors[0].successor(1), 0);
        assert_eq!(factors[0].cycles(), vec![vec![0, 1]]);
    }

    #[test]
    fn one_factorize_splits_k3_star_into_the_two_rotations() {
        let d = knstar(3).unwrap();
        let factors = one_factorize(&d, 2).unwrap();
        assert_eq!(factors.len(), 2);
        let mut seen = BTreeSet::new();
        for f in &factors {
            assert_eq!(f.cycles().len(), 1, "each factor is a single 3-cycle");
            for u in 0..3 {
                assert!(seen.insert((u, f.successor(u))), "factors are arc-disjoint");
            }
        }
        assert_eq!(seen.len(), 6, "factors cover every arc");
    }

    #[test]
    fn one_factorize_rejects_irregular_digraphs() {
        let d = build_digraph(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(one_factorize(&d, 1).unwrap_err(), Error::NotRegular(1));
    }

    #[test]
    fn factor_colours_alternate_on_even_cycles() {
        let factor = OneFactor::new(vec![1, 2, 3, 0]).unwrap();
        assert_eq!(colour_one_factor(&factor, (1, 2)), vec![1, 2, 1, 2]);
    }

    #[test]
    fn factor_colours_double_up_at_the_start_of_odd_cycles() {
        let factor = OneFactor::new(vec![1, 2, 0]).unwrap();
        assert_eq!(colour_one_factor(&factor, (1, 2)), vec![2, 2, 1]);
        let five = OneFactor::new(vec![1, 2, 3, 4, 0]).unwrap();
        assert_eq!(colour_one_factor(&five, (1, 2)), vec![2, 2, 1, 2, 1]);
    }

    #[test]
    fn factor_colours_distinguish_the_two_cycle() {
        let d = build_digraph(2, &[(0, 1), (1, 0)]).unwrap();
        let factor = OneFactor::new(vec![1, 0]).unwrap();
        let by_tail = colour_one_factor(&factor, (1, 2));
        assert_eq!(by_tail, vec![1, 2]);
        let colours = d.arcs().iter().map(|&(u, _)| by_tail[u]).collect();
        let c = ArcColouring::new(colours, 2).unwrap();
        let table = palettes(&d, &c);
        assert_eq!(table.out_set(0).iter().copied().collect::<Vec<_>>(), vec![1]);
        assert_eq!(table.in_set(0).iter().copied().collect::<Vec<_>>(), vec![2]);
        assert!(is_nd(&d, &c).is_nd());
    }

    #[test]
    fn factor_colours_give_each_vertex_one_colour_per_side() {
        let factor = OneFactor::new(vec![2, 0, 4, 1, 3]).unwrap();
        let by_tail = colour_one_factor(&factor, (5, 6));
        for u in 0..5 {
            assert!(by_tail[u] == 5 || by_tail[u] == 6);
        }
    }

    #[test]
    fn general_colouring_uses_two_colours_on_directed_cycles() {
        for n in [2, 3, 4, 5, 7] {
            let arcs: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            let d = build_digraph(n, &arcs).unwrap();
            let c = colour_general(&d).unwrap();
            assert!(is_nd(&d, &c).is_nd(), "cycle of length {n}");
            assert_eq!(c.colours_used(), 2, "cycle of length {n}");
        }
    }

    #[test]
    fn general_colouring_bound_holds_on_dense_and_sparse_samples() {
        let samples = [
            knstar(3).unwrap(),
            build_digraph(4, &[(0, 1), (1, 2), (2, 1), (3, 2)]).unwrap(),
            build_digraph(2, &[(0, 1)]).unwrap(),
            build_digraph(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 0)]).unwrap(),
        ];
        for d in &samples {
            let delta = degrees(d).delta_star();
            let c = colour_general(d).unwrap();
            assert!(is_nd(d, &c).is_nd());
            assert!(c.colours_used() <= 2 * delta);
        }
    }

    #[test]
    fn general_colouring_rejects_empty_arc_sets() {
        let d = build_digraph(3, &[]).unwrap();
        assert_eq!(colour_general(&d).unwrap_err(), Error::NothingToColour);
    }

    #[test]
    fn factor_validation_rejects_broken_successor_maps() {
        assert_eq!(OneFactor::new(vec![0, 1]).unwrap_err(), Error::LoopArc(0));
        assert_eq!(OneFactor::new(vec![2, 0]).unwrap_err(), Error::VertexOutOfRange(2, 2));
        assert!(OneFactor::new(vec![1, 1]).is_err());
    }
}
