//! The bipartite repair algorithm — a proper base colouring fixed up
//! with two matchings and two extra colours — and its extension to
//! arbitrary digraphs by splitting the underlying graph into bipartite
//! layers, each repaired with its own fresh colour pair.

use crate::colouring::{conflicts, is_nd, is_proper, ArcColouring};
use crate::digraph::{degrees, underlying_graph, Bipartition, Digraph, SimpleGraph};
use crate::proper::proper_arc_colour;
use crate::{Error, Result};

/// One bipartite layer: a two-sided split of all vertices together
/// with the underlying edges whose endpoints differ exactly there.
#[derive(Debug, Clone)]
pub struct Layer {
    /// Side assignment for every vertex (X = false, Y = true).
    pub bipartition: Bipartition,
    /// Indices into the underlying graph's edge list.
    pub edges: Vec<usize>,
}

/// A partition of the underlying edges into bipartite layers, driven
/// by a proper vertex colouring: edge uv lands in the layer of the
/// lowest bit where the binary codes of its endpoint colours differ,
/// and the sides of layer j are the two values of bit j.
#[derive(Debug, Clone)]
pub struct Layering {
    k: usize,
    layers: Vec<Layer>,
}

impl Layering {
    /// Number of vertex colours behind the layering.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn layer_count(&self) -> usize {
        self.layers.len()
    }

    pub fn layers(&self) -> &[Layer] {
        &self.layers
    }
}

/// Smallest L with 2^L >= k; the number of bits needed to tell k
/// colour codes apart.
pub fn ceil_log2(k: usize) -> usize {
    if k <= 1 {
        0
    } else {
        (usize::BITS - (k - 1).leading_zeros()) as usize
    }
}

/// A proper vertex colouring of a simple graph, greedy in descending
/// degree order (ties by index): each vertex takes the smallest colour
/// absent from its already-coloured neighbours. Colours are 0-based
/// and never exceed the maximum degree, so at most Δ+1 are used.
pub fn greedy_vertex_colour(g: &SimpleGraph) -> Vec<usize> {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut colour = vec![usize::MAX; n];
    for &v in &order {
        let taken: Vec<usize> = g
            .adj(v)
            .iter()
            .map(|&(w, _)| colour[w])
            .filter(|&c| c != usize::MAX)
            .collect();
        colour[v] = (0..).find(|c| !taken.contains(c)).unwrap();
    }
    colour
}

/// Splits the edges of a graph into bipartite layers along a proper
/// vertex colouring, as described on [`Layering`].
pub fn bipartite_layers(g: &SimpleGraph, colour: &[usize]) -> Result<Layering> {
    assert_eq!(colour.len(), g.n(), "one colour per vertex");
    for &(u, v) in g.edges() {
        if colour[u] == colour[v] {
            return Err(Error::ImproperVertexColouring(u, v));
        }
    }
    let k = colour.iter().map(|&c| c + 1).max().unwrap_or(0);
    let count = ceil_log2(k);
    let mut layers: Vec<Layer> = (0..count)
        .map(|j| Layer {
            bipartition: Bipartition {
                side: colour.iter().map(|&c| (c >> j) & 1 == 1).collect(),
            },
            edges: Vec::new(),
        })
        .collect();
    for (idx, &(u, v)) in g.edges().iter().enumerate() {
        let j = (colour[u] ^ colour[v]).trailing_zeros() as usize;
        layers[j].edges.push(idx);
    }
    Ok(Layering { k, layers })
}

/// The intermediate states of the bipartite repair, kept for callers
/// that want to inspect the matchings or the state between the passes.
#[derive(Debug, Clone)]
pub struct BipartiteTrace {
    /// The proper starting colouring.
    pub base: ArcColouring,
    /// The colouring after the first matching pass (equal to `base`
    /// when that pass was skipped).
    pub after_first: ArcColouring,
    /// Arcs recoloured by the first pass, in index order.
    pub first_matching: Vec<usize>,
    /// Arcs recoloured by the second pass, in index order.
    pub second_matching: Vec<usize>,
    /// The final nd colouring.
    pub result: ArcColouring,
}

/// An nd-arc-colouring with at most Δ*+2 colours for a digraph whose
/// arcs all cross the given bipartition.
///
/// Starts from a proper colouring with Δ* colours and stops as soon as
/// the verifier is satisfied. Otherwise a maximal matching among the
/// X-to-Y arcs is recoloured with colour Δ*+1: afterwards no
/// conflicting arc can run from X to Y, because an uncovered such arc
/// would extend the matching, and a covered one has the fresh colour
/// on a side where its partner cannot. A second maximal matching,
/// chosen among the arcs still in conflict and running Y to X,
/// receives Δ*+2 and settles the remaining pairs the same way.
/// Recolouring a matching keeps the colouring proper since no vertex
/// gains the fresh colour twice on one side.
pub fn colour_bipartite(d: &Digraph, bipartition: &Bipartition) -> Result<ArcColouring> {
    colour_bipartite_trace(d, bipartition).map(|t| t.result)
}

/// [`colour_bipartite`] with the intermediate states exposed.
pub fn colour_bipartite_trace(
    d: &Digraph,
    bipartition: &Bipartition,
) -> Result<BipartiteTrace> {
    assert_eq!(bipartition.side.len(), d.n(), "one side per vertex");
    for &(u, v) in d.arcs() {
        if bipartition.is_x(u) == bipartition.is_x(v) {
            return Err(Error::ArcInsidePart(u, v));
        }
    }
    let base = proper_arc_colour(d)?;
    let delta = degrees(d).delta_star();
    if is_nd(d, &base).is_nd() {
        return Ok(BipartiteTrace {
            base: base.clone(),
            after_first: base.clone(),
            first_matching: Vec::new(),
            second_matching: Vec::new(),
            result: base,
        });
    }

    let mut colours = base.colours().to_vec();
    let forward =
        (0..d.arc_count()).filter(|&e| bipartition.is_x(d.arc(e).0)).collect::<Vec<_>>();
    let first_matching = greedy_matching(d, forward);
    for &e in &first_matching {
        colours[e] = delta + 1;
    }
    let after_first = ArcColouring::new(colours.clone(), delta + 1)?;
    debug_assert!(is_proper(d, &after_first).is_proper());
    if is_nd(d, &after_first).is_nd() {
        return Ok(BipartiteTrace {
            base,
            after_first: after_first.clone(),
            first_matching,
            second_matching: Vec::new(),
            result: after_first,
        });
    }

    let backward: Vec<usize> = conflicts(d, &after_first)
        .into_iter()
        .filter(|&e| bipartition.is_y(d.arc(e).0))
        .collect();
    let second_matching = greedy_matching(d, backward);
    for &e in &second_matching {
        colours[e] = delta + 2;
    }
    let result = ArcColouring::new(colours, delta + 2)?;
    debug_assert!(is_proper(d, &result).is_proper());
    if !is_nd(d, &result).is_nd() {
        return Err(Error::TheoremViolation);
    }
    Ok(BipartiteTrace { base, after_first, first_matching, second_matching, result })
}

/// An nd-arc-colouring of an arbitrary digraph with at most
/// Δ* + 2·ceil(log2 k) colours, where k is the number of vertex
/// colours the greedy colouring of the underlying graph achieves.
///
/// The underlying edges are split into bipartite layers; ascending
/// layer by layer, the two-matching repair of [`colour_bipartite`] is
/// applied with a fresh colour pair, recolouring only arcs of the
/// current layer while judging conflicts against the palettes of the
/// full colouring. Processing stops as soon as the verifier accepts.
pub fn colour_layered(d: &Digraph) -> Result<ArcColouring> {
    colour_layered_detail(d).map(|(c, _)| c)
}

/// [`colour_layered`] together with the layering it used, whose vertex
/// colour count determines the claimed bound.
pub fn colour_layered_detail(d: &Digraph) -> Result<(ArcColouring, Layering)> {
    let base = proper_arc_colour(d)?;
    let delta = degrees(d).delta_star();
    let und = underlying_graph(d);
    let vertex_colours = greedy_vertex_colour(&und);
    let layering = bipartite_layers(&und, &vertex_colours)?;

    // Layer of each arc = layer of its underlying edge.
    let arc_layer: Vec<usize> = d
        .arcs()
        .iter()
        .map(|&(u, v)| (vertex_colours[u] ^ vertex_colours[v]).trailing_zeros() as usize)
        .collect();

    let mut colours = base.colours().to_vec();
    let mut declared = delta;
    for (j, layer) in layering.layers().iter().enumerate() {
        let current = ArcColouring::new(colours.clone(), declared)?;
        if is_nd(d, &current).is_nd() {
            break;
        }
        let side = &layer.bipartition;
        let (fresh_forward, fresh_backward) = (delta + 2 * j + 1, delta + 2 * j + 2);
        declared = fresh_backward;

        let forward: Vec<usize> = (0..d.arc_count())
            .filter(|&e| arc_layer[e] == j && side.is_x(d.arc(e).0))
            .collect();
        for &e in &greedy_matching(d, forward) {
            colours[e] = fresh_forward;
        }
        let current = ArcColouring::new(colours.clone(), declared)?;
        debug_assert!(is_proper(d, &current).is_proper());
        if is_nd(d, &current).is_nd() {
            break;
        }

        let backward: Vec<usize> = conflicts(d, &current)
            .into_iter()
            .filter(|&e| arc_layer[e] == j && side.is_y(d.arc(e).0))
            .collect();
        for &e in &greedy_matching(d, backward) {
            colours[e] = fresh_backward;
        }
    }

    let result = ArcColouring::new(colours, declared)?;
    debug_assert!(is_proper(d, &result).is_proper());
    if !is_nd(d, &result).is_nd() {
        return Err(Error::CorollaryViolation);
    }
    Ok((result, layering))
}

/// Greedily keeps every candidate arc whose endpoints are both still
/// unused, scanning in the order given; the result is a maximal
/// vertex-disjoint set within the candidates.
fn greedy_matching(d: &Digraph, candidates: impl IntoIterator<Item = usize>) -> Vec<usize> {
    let mut used = vec![false; d.n()];
    let mut picked = Vec::new();
    for e in candidates {
        let (u, v) = d.arc(e);
        if !used[u] && !used[v] {
            used[u] = true;
            used[v] = true;
            picked.push(e);
        }
    }
    picked
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{build_digraph, classify};

    fn distinct(colours: &[usize]) -> usize {
        let set: std::collections::BTreeSet<usize> = colours.iter().copied().collect();
        set.len()
    }

    #[test]
    fn greedy_counts_on_the_classical_small_graphs() {
        let triangle = SimpleGraph::new(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(distinct(&greedy_vertex_colour(&triangle)), 3);

        let path = SimpleGraph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(distinct(&greedy_vertex_colour(&path)), 2);

        let odd_cycle =
            SimpleGraph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert_eq!(distinct(&greedy_vertex_colour(&odd_cycle)), 3);
    }

    #[test]
    fn greedy_colourings_are_proper_and_within_degree_plus_one() {
        let graphs = [
            SimpleGraph::new(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]).unwrap(),
            SimpleGraph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap(),
        ];
        for g in &graphs {
            let c = greedy_vertex_colour(g);
            for &(u, v) in g.edges() {
                assert_ne!(c[u], c[v]);
            }
            assert!(distinct(&c) <= g.max_degree() + 1);
        }
    }

    #[test]
    fn ceil_log2_small_values() {
        assert_eq!(ceil_log2(0), 0);
        assert_eq!(ceil_log2(1), 0);
        assert_eq!(ceil_log2(2), 1);
        assert_eq!(ceil_log2(3), 2);
        assert_eq!(ceil_log2(4), 2);
        assert_eq!(ceil_log2(5), 3);
        assert_eq!(ceil_log2(8), 3);
        assert_eq!(ceil_log2(9), 4);
    }

    #[test]
    fn triangle_with_three_colours_splits_into_two_layers() {
        let g = SimpleGraph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let layering = bipartite_layers(&g, &[0, 1, 2]).unwrap();
        assert_eq!(layering.k(), 3);
        assert_eq!(layering.layer_count(), 2);
        // Bit 0 separates 0 from 1 and 1 from 2; bit 1 separates 0 from 2.
        assert_eq!(layering.layers()[0].edges, vec![0, 1]);
        assert_eq!(layering.layers()[1].edges, vec![2]);
        assert_eq!(layering.layers()[0].bipartition.side, vec![false, true, false]);
        assert_eq!(layering.layers()[1].bipartition.side, vec![false, false, true]);
    }

    #[test]
    fn two_colours_give_a_single_layer_holding_every_edge() {
        let g = SimpleGraph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let layering = bipartite_layers(&g, &[0, 1, 0, 1]).unwrap();
        assert_eq!(layering.layer_count(), 1);
        assert_eq!(layering.layers()[0].edges, vec![0, 1, 2]);
    }

    #[test]
    fn layers_partition_the_edge_set() {
        let g = SimpleGraph::new(
            6,
            &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)],
        )
        .unwrap();
        let c = greedy_vertex_colour(&g);
        let layering = bipartite_layers(&g, &c).unwrap();
        let mut seen = vec![0usize; g.edge_count()];
        for layer in layering.layers() {
            for &e in &layer.edges {
                seen[e] += 1;
                let (u, v) = g.edges()[e];
                assert_ne!(
                    layer.bipartition.is_x(u),
                    layer.bipartition.is_x(v),
                    "assigned edges cross their layer's split"
                );
            }
        }
        assert!(seen.iter().all(|&s| s == 1), "each edge sits in exactly one layer");
    }

    #[test]
    fn improper_vertex_colourings_are_rejected() {
        let g = SimpleGraph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(
            bipartite_layers(&g, &[3, 3]).unwrap_err(),
            Error::ImproperVertexColouring(0, 1)
        );
    }

    #[test]
    fn directed_four_cycle_is_repaired_by_one_matching() {
        let d = build_digraph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let bip = classify(&d).bipartition.unwrap();
        let trace = colour_bipartite_trace(&d, &bip).unwrap();
        assert_eq!(trace.base.colours(), &[1, 1, 1, 1]);
        assert_eq!(trace.first_matching, vec![0, 2]);
        assert_eq!(trace.after_first.colours(), &[2, 1, 2, 1]);
        assert!(trace.second_matching.is_empty());
        assert!(is_nd(&d, &trace.result).is_nd());
        assert_eq!(trace.result.colours_used(), 2);
    }

    #[test]
    fn single_arc_needs_no_repair() {
        let d = build_digraph(2, &[(0, 1)]).unwrap();
        let bip = classify(&d).bipartition.unwrap();
        let trace = colour_bipartite_trace(&d, &bip).unwrap();
        assert!(trace.first_matching.is_empty());
        assert!(trace.second_matching.is_empty());
        assert_eq!(trace.result.colours_used(), 1);
    }

    #[test]
    fn four_vertex_example_stays_within_delta_star_plus_two() {
        let d = build_digraph(4, &[(0, 1), (1, 2), (2, 1), (3, 2)]).unwrap();
        let bip = classify(&d).bipartition.unwrap();
        let c = colour_bipartite(&d, &bip).unwrap();
        assert!(is_nd(&d, &c).is_nd());
        assert!(c.colours_used() <= 4, "delta star is 2");
    }

    #[test]
    fn arcs_inside_a_part_are_rejected() {
        let d = build_digraph(3, &[(0, 1), (1, 2)]).unwrap();
        let both_x = Bipartition { side: vec![false, false, true] };
        assert_eq!(
            colour_bipartite(&d, &both_x).unwrap_err(),
            Error::ArcInsidePart(0, 1)
        );
    }

    #[test]
    fn no_forward_conflicts_survive_the_first_pass() {
        let samples = [
            build_digraph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap(),
            build_digraph(4, &[(0, 1), (1, 2), (2, 1), (3, 2)]).unwrap(),
            build_digraph(
                6,
                &[(0, 3), (3, 1), (1, 4), (4, 2), (2, 5), (5, 0), (0, 4), (4, 1)],
            )
            .unwrap(),
            build_digraph(6, &[(0, 1), (2, 1), (2, 3), (4, 3), (4, 5), (0, 5)]).unwrap(),
        ];
        for d in &samples {
            let bip = classify(d).bipartition.expect("samples are bipartite");
            let trace = colour_bipartite_trace(d, &bip).unwrap();
            for e in conflicts(d, &trace.after_first) {
                let (u, _) = d.arc(e);
                assert!(
                    bip.is_y(u),
                    "a conflicting arc after the first pass never leaves X"
                );
            }
            assert!(is_nd(d, &trace.result).is_nd());
        }
    }

    #[test]
    fn layered_handles_the_complete_symmetric_triple() {
        let d = crate::constructions::knstar(3).unwrap();
        let (c, layering) = colour_layered_detail(&d).unwrap();
        assert!(is_nd(&d, &c).is_nd());
        assert_eq!(layering.k(), 3);
        assert_eq!(layering.layer_count(), 2);
        assert!(c.colours_used() <= 2 + 2 * 2, "delta star 2 plus two colour pairs");
    }

    #[test]
    fn layered_handles_an_odd_cycle_orientation() {
        let d = build_digraph(5, &[(0, 1), (2, 1), (2, 3), (4, 3), (4, 0)]).unwrap();
        let (c, layering) = colour_layered_detail(&d).unwrap();
        assert!(is_nd(&d, &c).is_nd());
        let delta = degrees(&d).delta_star();
        assert!(c.colours_used() <= delta + 2 * ceil_log2(layering.k()));
    }

    #[test]
    fn layered_collapses_to_one_layer_on_bipartite_inputs() {
        let d = build_digraph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let (c, layering) = colour_layered_detail(&d).unwrap();
        assert_eq!(layering.layer_count(), 1);
        assert!(is_nd(&d, &c).is_nd());
        assert!(c.colours_used() <= degrees(&d).delta_star() + 2);
    }

    #[test]
    fn layered_rejects_empty_arc_sets() {
        let d = build_digraph(3, &[]).unwrap();
        assert_eq!(colour_layered(&d).unwrap_err(), Error::NothingToColour);
    }

    #[test]
    fn layered_output_is_deterministic() {
        let d = crate::constructions::knstar(4).unwrap();
        let a = colour_layered(&d).unwrap();
        let b = colour_layered(&d).unwrap();
        assert_eq!(a.colours(), b.colours());
    }
}
