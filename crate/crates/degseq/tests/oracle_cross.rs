//! Cross-validation between the fast paths and the exhaustive oracle: every
//! closed-form predicate, canonical code, and constructive algorithm is, on
//! small domains, checked against brute force that shares none of its code.

use degseq::enumeration::{
    all_realizations, canonical_form, cell_census, enumerate_graphs, is_forcibly_connected,
    realization_survey, CensusOptions,
};
use degseq::{
    is_connected_sequence, is_graphic, merge_components_by_swap, partition_cell, DegreeSequence,
    SimpleGraph,
};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn seq(terms: &[usize]) -> DegreeSequence {
    DegreeSequence::new(terms.to_vec()).unwrap()
}

/// Calls `f` on every non-increasing sequence of `len` terms from `1..=cap`.
fn for_each_candidate(len: usize, cap: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(prefix: &mut Vec<usize>, left: usize, cap: usize, f: &mut impl FnMut(&[usize])) {
        if left == 0 {
            f(prefix);
            return;
        }
        for t in 1..=cap {
            prefix.push(t);
            rec(prefix, left - 1, t, f);
            prefix.pop();
        }
    }
    if cap > 0 {
        rec(&mut Vec::with_capacity(len), len, cap, f);
    }
}

/// The formula-based predicates agree with the exhaustive realization scan
/// on every candidate sequence of length up to 7.
#[test]
fn graphicness_and_connectivity_match_the_survey() {
    for n in 2..=7 {
        let survey = realization_survey(n, 1).unwrap();
        let mut candidates = 0usize;
        for_each_candidate(n, n - 1, &mut |terms| {
            candidates += 1;
            let s = seq(terms);
            let flags = survey.get(&s);
            assert_eq!(
                is_graphic(&s),
                flags.is_some(),
                "graphicness of {s} disagrees with the oracle"
            );
            if let Some(flags) = flags {
                assert_eq!(
                    is_connected_sequence(&s),
                    flags.connected,
                    "connected realizability of {s} disagrees with the oracle"
                );
            }
        });
        // every surveyed sequence is also a candidate (max term <= n-1)
        assert!(survey.len() <= candidates);
        for s in survey.keys() {
            assert!(s.max_term() < n);
        }
    }
}

/// The survey's flag pair decides forcible connectivity, and it agrees with
/// the dedicated single-sequence scan.
#[test]
fn forcible_connectivity_agrees_between_scans() {
    for n in 2..=6 {
        for (s, flags) in &realization_survey(n, 1).unwrap() {
            assert_eq!(
                is_forcibly_connected(s, 1).unwrap(),
                flags.connected && !flags.disconnected,
                "forcible connectivity of {s}"
            );
        }
    }
}

/// The branch-and-bound canonical code equals the plain minimum over all
/// `n!` relabelings (which the search never enumerates in full).
#[test]
fn canonical_code_equals_permutation_minimum_on_samples() {
    fn code_of(g: &SimpleGraph) -> u64 {
        let n = g.vertex_count();
        let mut code = 0u64;
        for j in 1..n {
            for i in 0..j {
                code = (code << 1) | u64::from(g.contains_edge(i, j));
            }
        }
        code
    }

    fn reference_min(g: &SimpleGraph) -> u64 {
        let n = g.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best = u64::MAX;
        fn visit(k: usize, perm: &mut Vec<usize>, g: &SimpleGraph, best: &mut u64) {
            if k == perm.len() {
                *best = (*best).min(code_of(&g.relabeled(perm).unwrap()));
                return;
            }
            for i in k..perm.len() {
                perm.swap(k, i);
                visit(k + 1, perm, g, best);
                perm.swap(k, i);
            }
        }
        visit(0, &mut perm, g, &mut best);
        best
    }

    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for (n, samples) in [(6, 200), (7, 80)] {
        for _ in 0..samples {
            let mut edges = Vec::new();
            for v in 1..n {
                for u in 0..v {
                    if rng.random_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            let g = SimpleGraph::from_edges(n, edges).unwrap();
            assert_eq!(
                canonical_form(&g).unwrap().code,
                reference_min(&g),
                "canonical code mismatch on {g:?}"
            );
        }
    }
}

/// Every graph occurs among the realizations of its own degree sequence.
#[test]
fn graphs_appear_in_their_sequences_realizations() {
    for n in 2..=5 {
        for g in enumerate_graphs(n, 1).unwrap() {
            let s = g.degree_sequence().unwrap();
            assert!(
                all_realizations(&s, 1).unwrap().contains(&g),
                "{g:?} missing from realizations of {s}"
            );
        }
    }
    // spot-check the 6-vertex layer
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let sampled: Vec<SimpleGraph> = enumerate_graphs(6, 1)
        .unwrap()
        .filter(|_| rng.random_ratio(1, 40))
        .collect();
    assert!(sampled.len() > 100);
    for g in sampled {
        let s = g.degree_sequence().unwrap();
        assert!(all_realizations(&s, 1).unwrap().contains(&g));
    }
}

/// The closed-form cell of a sequence matches where the census actually put
/// its realizations.
#[test]
fn census_binning_matches_the_cell_formula() {
    let census = cell_census(6, CensusOptions { jobs: 1, with_representatives: true }).unwrap();
    let reps = census.representatives().unwrap();
    let mut checked = 0;
    for (cell, forms) in reps {
        if cell.col == 0 {
            continue; // the one-vertex graph has no positive degree sequence
        }
        for form in forms {
            let g = form.to_graph();
            let s = g.degree_sequence().unwrap();
            assert_eq!(partition_cell(&s).unwrap(), *cell);
            checked += 1;
        }
    }
    assert!(checked > 100);
}

/// Component merging always reaches a connected graph in exactly
/// (components - 1) swaps, preserving the degree multiset throughout.
#[test]
fn merging_random_disconnected_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    for _ in 0..60 {
        let parts = rng.random_range(2..=3);
        let mut edges = Vec::new();
        let mut offset = 0;
        for _ in 0..parts {
            let size = rng.random_range(3..=8);
            // random tree plus one extra edge: guarantees a cycle somewhere
            for v in 1..size {
                edges.push((offset + rng.random_range(0..v), offset + v));
            }
            loop {
                let a = rng.random_range(0..size);
                let b = rng.random_range(0..size);
                if a != b && !edges.contains(&(offset + a.min(b), offset + a.max(b))) {
                    edges.push((offset + a.min(b), offset + a.max(b)));
                    break;
                }
            }
            offset += size;
        }
        let g = SimpleGraph::from_edges(offset, edges).unwrap();
        assert_eq!(g.components().len(), parts);

        let (merged, swaps) = merge_components_by_swap(&g).unwrap();
        assert!(merged.is_connected());
        assert_eq!(swaps, parts - 1);
        let mut before = g.degrees();
        let mut after = merged.degrees();
        before.sort_unstable();
        after.sort_unstable();
        assert_eq!(before, after);
        assert_eq!(merged.edge_count(), g.edge_count());
    }
}
