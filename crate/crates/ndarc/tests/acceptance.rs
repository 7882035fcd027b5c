//! End-to-end acceptance checks for the library's headline guarantees.
//! Each test prints one PASS/FAIL line naming the guarantee it
//! exercises together with the measured wall time, and fails loudly if
//! either the guarantee or its time budget is broken.

use ndarc::colouring::{conflicts, is_nd, is_proper, lower_bound};
use ndarc::constructions::{colour_knstar, colour_tree, knstar};
use ndarc::digraph::{build_digraph, degrees, underlying_graph, Digraph};
use ndarc::exact::{enumerate_digraphs, exact_ndi, scan_conjecture, DEFAULT_NODE_BUDGET};
use ndarc::factorization::colour_general;
use ndarc::generate::{
    cycle, gnp, gnp_max_degree, random_bipartite, random_oriented, random_tree_orientation,
    seeded, tournament, union_of_cycles,
};
use ndarc::layered::{ceil_log2, colour_bipartite_trace, colour_layered_detail};
use ndarc::proper::{colour_oriented, proper_arc_colour};
use ndarc::report::{dispatch, Algo};
use ndarc::Error;
use std::time::{Duration, Instant};

/// Runs one acceptance criterion, prints its PASS/FAIL line, and turns
/// a failure (including a blown time budget) into a test failure.
fn criterion(name: &str, limit: Duration, body: impl FnOnce() -> Result<String, String>) {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let outcome = outcome.and_then(|detail| {
        if elapsed <= limit {
            Ok(detail)
        } else {
            Err(format!("{detail}; blew the {limit:?} budget at {elapsed:?}"))
        }
    });
    match outcome {
        Ok(detail) => {
            println!("acceptance {name}: PASS ({detail}; {elapsed:?} within {limit:?})");
        }
        Err(detail) => {
            println!("acceptance {name}: FAIL ({detail})");
            panic!("{name}: {detail}");
        }
    }
}

fn four_vertex_example() -> Digraph {
    build_digraph(4, &[(0, 1), (1, 2), (2, 1), (3, 2)]).unwrap()
}

#[test]
fn complete_digraphs_get_exactly_their_order_in_colours() {
    criterion("complete digraphs", Duration::from_secs(1), || {
        for n in 2..=10 {
            let d = knstar(n).map_err(|e| e.to_string())?;
            let c = colour_knstar(n).map_err(|e| e.to_string())?;
            if !is_nd(&d, &c).is_nd() {
                return Err(format!("order {n}: colouring does not distinguish neighbours"));
            }
            if c.colours_used() != n {
                return Err(format!("order {n}: used {} colours, wanted {n}", c.colours_used()));
            }
            if lower_bound(&d) != n {
                return Err(format!("order {n}: lower bound is {}", lower_bound(&d)));
            }
        }
        Ok("orders 2..=10, each nd with exactly n colours matching the lower bound".into())
    });
}

#[test]
fn exact_search_confirms_complete_digraph_indices() {
    criterion("exact index of complete digraphs", Duration::from_secs(120), || {
        for n in 2..=4 {
            let d = knstar(n).map_err(|e| e.to_string())?;
            let delta = degrees(&d).delta_star();
            let result = exact_ndi(&d, 2 * delta).map_err(|e| e.to_string())?;
            if result.ndi != n {
                return Err(format!("order {n}: exact search found {}", result.ndi));
            }
            if !is_nd(&d, &result.witness).is_nd() {
                return Err(format!("order {n}: witness fails verification"));
            }
        }
        Ok("orders 2..=4 solved exactly, witnesses verified".into())
    });
}

#[test]
fn disjoint_cycle_unions_need_exactly_two_colours() {
    criterion("disjoint cycle unions", Duration::from_secs(60), || {
        for n in 2..=7 {
            let d = cycle(n).map_err(|e| e.to_string())?;
            let result = exact_ndi(&d, 4).map_err(|e| e.to_string())?;
            if result.ndi != 2 {
                return Err(format!("cycle of length {n}: exact index {}", result.ndi));
            }
        }
        for seed in 0..200u64 {
            let n = 4 + (seed as usize) % 47;
            let d = union_of_cycles(n, &mut seeded(seed)).map_err(|e| e.to_string())?;
            let c = colour_general(&d).map_err(|e| e.to_string())?;
            if !is_nd(&d, &c).is_nd() {
                return Err(format!("seed {seed}: colouring does not distinguish neighbours"));
            }
            if c.colours_used() != 2 {
                return Err(format!("seed {seed}: used {} colours, wanted 2", c.colours_used()));
            }
        }
        Ok("cycles 2..=7 solved exactly at 2; 200 random unions coloured nd with 2".into())
    });
}

#[test]
fn factor_scheme_colours_bounded_degree_digraphs() {
    criterion("factor scheme on degree-bounded digraphs", Duration::from_secs(120), || {
        let mut accepted = 0usize;
        let mut seed = 0u64;
        while accepted < 300 {
            if seed > 10_000 {
                return Err(format!("generator stalled after {accepted} instances"));
            }
            let n = 5 + (seed as usize) % 26;
            let d = gnp_max_degree(n, 0.3, 4, &mut seeded(seed));
            seed += 1;
            if d.arc_count() == 0 {
                continue;
            }
            accepted += 1;
            let delta = degrees(&d).delta_star();
            let c = colour_general(&d).map_err(|e| e.to_string())?;
            if !is_nd(&d, &c).is_nd() {
                return Err(format!("seed {}: not neighbour distinguishing", seed - 1));
            }
            if c.colours_used() > 2 * delta {
                return Err(format!(
                    "seed {}: {} colours exceeds twice the degree bound {delta}",
                    seed - 1,
                    c.colours_used()
                ));
            }
        }
        Ok("300 random digraphs with degree bound 4, orders 5..=30, all nd within 2Δ*".into())
    });
}

#[test]
fn bipartite_scheme_needs_at_most_two_extra_colours() {
    criterion("bipartite two-matching repair", Duration::from_secs(60), || {
        let mut accepted = 0usize;
        let mut seed = 0u64;
        while accepted < 300 {
            if seed > 20_000 {
                return Err(format!("generator stalled after {accepted} instances"));
            }
            let nx = 2 + (seed as usize) % 11;
            let ny = 2 + ((seed as usize) * 7) % 11;
            let (d, bipartition) = random_bipartite(nx, ny, 0.15, &mut seeded(seed));
            seed += 1;
            if d.arc_count() == 0 || degrees(&d).delta_star() > 4 {
                continue;
            }
            accepted += 1;
            let delta = degrees(&d).delta_star();
            let trace = colour_bipartite_trace(&d, &bipartition).map_err(|e| e.to_string())?;
            if !is_nd(&d, &trace.result).is_nd() {
                return Err(format!("seed {}: not neighbour distinguishing", seed - 1));
            }
            if trace.result.colours_used() > delta + 2 {
                return Err(format!(
                    "seed {}: {} colours exceeds Δ*+2 = {}",
                    seed - 1,
                    trace.result.colours_used(),
                    delta + 2
                ));
            }
            // After the first matching pass every remaining conflict
            // must run from the second part back to the first.
            for e in conflicts(&d, &trace.after_first) {
                let (tail, _) = d.arc(e);
                if bipartition.is_x(tail) {
                    return Err(format!(
                        "seed {}: conflict arc {e} still leaves the first part",
                        seed - 1
                    ));
                }
            }
        }
        Ok("300 random bipartite digraphs (parts ≤ 12, Δ* ≤ 4): nd within Δ*+2, \
            and no first-part conflicts survive the first matching"
            .into())
    });
}

#[test]
fn tree_orientations_need_at_most_one_extra_colour() {
    criterion("trees with optional opposite arcs", Duration::from_secs(60), || {
        let doubles = [0.0, 0.3, 0.7, 1.0];
        for seed in 0..300u64 {
            let n = 2 + (seed as usize) % 39;
            let doubled = doubles[(seed as usize) % doubles.len()];
            let d = random_tree_orientation(n, doubled, &mut seeded(seed))
                .map_err(|e| e.to_string())?;
            let delta = degrees(&d).delta_star();
            let c = colour_tree(&d).map_err(|e| e.to_string())?;
            if !is_nd(&d, &c).is_nd() {
                return Err(format!("seed {seed}: not neighbour distinguishing"));
            }
            if c.colours_used() > delta + 1 {
                return Err(format!(
                    "seed {seed}: {} colours exceeds Δ*+1 = {}",
                    c.colours_used(),
                    delta + 1
                ));
            }
        }
        Ok("300 random tree orientations, orders 2..=40, all nd within Δ*+1".into())
    });
}

#[test]
fn layer_scheme_colours_arbitrary_digraphs() {
    criterion("bipartite-layer scheme", Duration::from_secs(60), || {
        let probabilities = [0.2, 0.4, 0.6];
        let mut accepted = 0usize;
        let mut seed = 0u64;
        let mut most_layers = 0usize;
        while accepted < 200 {
            if seed > 10_000 {
                return Err(format!("generator stalled after {accepted} instances"));
            }
            let n = 4 + (seed as usize) % 15;
            let p = probabilities[(seed as usize) % probabilities.len()];
            let d = gnp(n, p, &mut seeded(seed));
            seed += 1;
            if d.arc_count() == 0 {
                continue;
            }
            accepted += 1;
            let delta = degrees(&d).delta_star();
            let (c, layering) = colour_layered_detail(&d).map_err(|e| e.to_string())?;
            if !is_nd(&d, &c).is_nd() {
                return Err(format!("seed {}: not neighbour distinguishing", seed - 1));
            }
            let bound = delta + 2 * ceil_log2(layering.k());
            if c.colours_used() > bound {
                return Err(format!(
                    "seed {}: {} colours exceeds Δ*+2·ceil(log2 k) = {bound}",
                    seed - 1,
                    c.colours_used()
                ));
            }
            if layering.layer_count() != ceil_log2(layering.k()) {
                return Err(format!("seed {}: layer count mismatch", seed - 1));
            }
            most_layers = most_layers.max(layering.layer_count());
        }
        Ok(format!(
            "200 random digraphs, orders 4..=18, all nd within Δ*+2·ceil(log2 k) \
             (deepest layering: {most_layers})"
        ))
    });
}

#[test]
fn oriented_digraphs_inherit_underlying_edge_colourings() {
    criterion("oriented digraphs", Duration::from_secs(30), || {
        for seed in 0..100u64 {
            let n = 4 + (seed as usize) % 27;
            let d = tournament(n, &mut seeded(seed));
            let bound = underlying_graph(&d).max_degree() + 1;
            let c = colour_oriented(&d).map_err(|e| e.to_string())?;
            if !is_nd(&d, &c).is_nd() {
                return Err(format!("tournament seed {seed}: not distinguishing"));
            }
            if c.colours_used() > bound {
                return Err(format!("tournament seed {seed}: exceeds Δ(und)+1 = {bound}"));
            }
        }
        let mut accepted = 0usize;
        let mut seed = 1_000u64;
        while accepted < 100 {
            if seed > 11_000 {
                return Err(format!("generator stalled after {accepted} sparse instances"));
            }
            let n = 4 + (seed as usize) % 27;
            let d = random_oriented(n, 0.15, &mut seeded(seed));
            seed += 1;
            if d.arc_count() == 0 {
                continue;
            }
            accepted += 1;
            let bound = underlying_graph(&d).max_degree() + 1;
            let c = colour_oriented(&d).map_err(|e| e.to_string())?;
            if !is_nd(&d, &c).is_nd() {
                return Err(format!("sparse seed {}: not distinguishing", seed - 1));
            }
            if c.colours_used() > bound {
                return Err(format!("sparse seed {}: exceeds Δ(und)+1 = {bound}", seed - 1));
            }
        }

        // Regression: a digraph with opposite arcs must be refused, and
        // for good reason — both ways of lifting a 2-colouring of its
        // underlying path onto the arcs leave the middle pair with
        // identical palettes.
        let d = four_vertex_example();
        if colour_oriented(&d) != Err(Error::OppositeArcs(1, 2)) {
            return Err("digraph with opposite arcs was not refused".into());
        }
        for lift in [[1, 2, 2, 1], [2, 1, 1, 2]] {
            let c = ndarc::colouring::ArcColouring::new(lift.to_vec(), 2)
                .map_err(|e| e.to_string())?;
            if !is_proper(&d, &c).is_proper() {
                return Err(format!("lift {lift:?} should be proper"));
            }
            if conflicts(&d, &c) != vec![1, 2] {
                return Err(format!(
                    "lift {lift:?} should leave exactly the opposite pair in conflict, got {:?}",
                    conflicts(&d, &c)
                ));
            }
        }
        Ok("100 tournaments + 100 sparse oriented digraphs nd within Δ(und)+1; \
            opposite-arc rejection confirmed necessary"
            .into())
    });
}

#[test]
fn proper_colourings_use_exactly_the_degree_bound() {
    criterion("proper colouring width", Duration::from_secs(30), || {
        let probabilities = [0.2, 0.5, 0.8];
        let mut accepted = 0usize;
        let mut seed = 0u64;
        while accepted < 300 {
            if seed > 10_000 {
                return Err(format!("generator stalled after {accepted} instances"));
            }
            let n = 3 + (seed as usize) % 18;
            let p = probabilities[(seed as usize) % probabilities.len()];
            let d = gnp(n, p, &mut seeded(seed));
            seed += 1;
            if d.arc_count() == 0 {
                continue;
            }
            accepted += 1;
            let delta = degrees(&d).delta_star();
            let c = proper_arc_colour(&d).map_err(|e| e.to_string())?;
            if !is_proper(&d, &c).is_proper() {
                return Err(format!("seed {}: colouring is not proper", seed - 1));
            }
            if c.colours_used() != delta {
                return Err(format!(
                    "seed {}: used {} colours, wanted exactly {delta}",
                    seed - 1,
                    c.colours_used()
                ));
            }
        }
        Ok("300 random digraphs properly coloured with exactly Δ* colours".into())
    });
}

#[test]
fn no_small_digraph_needs_more_than_one_extra_colour() {
    criterion("exhaustive and random index scan", Duration::from_secs(600), || {
        let exhaustive = enumerate_digraphs(1)
            .and_then(|one| Ok(one.chain(enumerate_digraphs(2)?).chain(enumerate_digraphs(3)?)))
            .map_err(|e| e.to_string())?;
        let report = scan_conjecture(exhaustive, DEFAULT_NODE_BUDGET).map_err(|e| e.to_string())?;
        if report.scanned != 66 || report.empty_skipped != 3 {
            return Err(format!(
                "exhaustive scan covered {} + {} empty, expected 66 + 3",
                report.scanned, report.empty_skipped
            ));
        }
        if report.budget_exhausted != 0 {
            return Err(format!("{} exhaustive instances hit the budget", report.budget_exhausted));
        }
        if !report.counterexamples.is_empty() {
            return Err(format!(
                "exhaustive scan found counterexamples: {:?}",
                report.counterexamples
            ));
        }
        if report.gap_counts.keys().any(|&gap| gap > 1) {
            return Err(format!("exhaustive gap distribution {:?}", report.gap_counts));
        }

        let probabilities = [0.2, 0.4, 0.6, 0.8];
        let mut instances = Vec::with_capacity(1000);
        for seed in 0..1000u64 {
            let n = 4 + (seed as usize) % 2;
            let p = probabilities[(seed as usize) % probabilities.len()];
            instances.push(gnp(n, p, &mut seeded(seed)));
        }
        let random = scan_conjecture(instances, DEFAULT_NODE_BUDGET).map_err(|e| e.to_string())?;
        if random.budget_exhausted != 0 {
            return Err(format!("{} random instances hit the budget", random.budget_exhausted));
        }
        if !random.counterexamples.is_empty() {
            return Err(format!("random scan found counterexamples: {:?}", random.counterexamples));
        }
        if random.gap_counts.keys().any(|&gap| gap > 1) {
            return Err(format!("random gap distribution {:?}", random.gap_counts));
        }
        Ok(format!(
            "all 69 digraphs of order ≤ 3 plus 1000 random orders 4–5: exact index \
             within Δ*+1 everywhere (exhaustive gaps {:?}, random gaps {:?})",
            report.gap_counts, random.gap_counts
        ))
    });
}

#[test]
fn every_bound_sandwiches_the_exact_index() {
    criterion("lower bound / exact / constructions sandwich", Duration::from_secs(120), || {
        let mut instances: Vec<Digraph> = Vec::new();
        for n in 2..=4 {
            instances.push(knstar(n).map_err(|e| e.to_string())?);
        }
        for n in 2..=6 {
            instances.push(cycle(n).map_err(|e| e.to_string())?);
        }
        instances.push(four_vertex_example());
        for seed in 0..5u64 {
            instances.push(
                random_tree_orientation(6, 0.4, &mut seeded(seed)).map_err(|e| e.to_string())?,
            );
        }
        for seed in 0..10u64 {
            let d = gnp(5, 0.4, &mut seeded(100 + seed));
            if d.arc_count() > 0 {
                instances.push(d);
            }
        }
        instances.push(tournament(5, &mut seeded(7)));

        let algos = [
            Algo::Complete,
            Algo::Tree,
            Algo::Bipartite,
            Algo::Oriented,
            Algo::Factor,
            Algo::Layered,
        ];
        let mut comparisons = 0usize;
        for (idx, d) in instances.iter().enumerate() {
            let delta = degrees(d).delta_star();
            let exact = exact_ndi(d, 2 * delta).map_err(|e| e.to_string())?;
            if lower_bound(d) > exact.ndi {
                return Err(format!(
                    "instance {idx}: lower bound {} exceeds exact index {}",
                    lower_bound(d),
                    exact.ndi
                ));
            }
            for algo in algos {
                match dispatch(d, algo) {
                    Ok(report) => {
                        if !report.verified {
                            return Err(format!("instance {idx}: {algo} failed verification"));
                        }
                        if exact.ndi > report.colours_used {
                            return Err(format!(
                                "instance {idx}: exact index {} beats {algo} at {} colours",
                                exact.ndi, report.colours_used
                            ));
                        }
                        comparisons += 1;
                    }
                    Err(
                        err @ (Error::TheoremViolation
                        | Error::CorollaryViolation
                        | Error::Internal(_)),
                    ) => {
                        return Err(format!("instance {idx}: {algo} broke its promise: {err}"));
                    }
                    Err(_) => {} // algorithm does not apply to this instance
                }
            }
        }
        Ok(format!(
            "{} instances, {comparisons} construction runs: lower bound ≤ exact ≤ construction",
            instances.len()
        ))
    });
}
