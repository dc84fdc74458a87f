//! Building connected graphs: realize a degree sequence, repair a
//! disconnected realization with degree-preserving swaps, and read a
//! step-by-step construction back out of a finished graph.
//!
//! The pipeline in [`realize_connected`] mirrors the classical two-stage
//! argument: a greedy realization first (largest remaining degree claims its
//! partners), then, if that lands in several pieces, 2-swaps that each fuse
//! two components without touching any degree. A sequence whose sum reaches
//! `2(n - 1)` always survives this — the swap phase needs only *some*
//! component to carry a cycle, and with at least `n - 1` edges spread over
//! two or more components one always does.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::analysis::is_graphic;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::seq::DegreeSequence;
use crate::trace::{ConstructionTrace, Step};

/// A connected realization together with how it was built.
#[derive(Debug, Clone)]
pub struct RealizationResult {
    /// The connected graph realizing the requested degrees.
    pub graph: SimpleGraph,
    /// A two-phase construction of `graph` (spanning growth first, then the
    /// remaining edges); replaying it reproduces `graph` exactly.
    pub trace: ConstructionTrace,
    /// How many component-fusing swaps the greedy realization needed.
    pub swaps_used: usize,
}

/// Builds a connected graph with exactly the degrees of `s`.
///
/// Fails with [`Error::NotGraphic`] when no simple graph has these degrees,
/// and with [`Error::NotConnectedSequence`] when realizations exist but none
/// is connected (degree sum below `2(n - 1)`). The result is deterministic:
/// the same sequence always yields the same graph and trace.
pub fn realize_connected(s: &DegreeSequence) -> Result<RealizationResult> {
    if !is_graphic(s) {
        return Err(Error::NotGraphic);
    }
    let n = s.len();
    if s.degree_sum() < 2 * (n - 1) {
        return Err(Error::NotConnectedSequence);
    }
    let greedy = greedy_realization(s)?;
    let (graph, swaps_used) = merge_components_by_swap(&greedy)?;
    let trace = canonical_trace(&graph)?;
    Ok(RealizationResult { graph, trace, swaps_used })
}

/// Greedy realization of a graphic sequence: repeatedly let the vertex with
/// the largest remaining demand (lowest index on ties) claim the next
/// largest ones as neighbors. Graphicness guarantees every claim can be
/// honored.
fn greedy_realization(s: &DegreeSequence) -> Result<SimpleGraph> {
    let n = s.len();
    let mut remaining: Vec<usize> = s.terms().to_vec();
    let mut edges = Vec::with_capacity(s.degree_sum() / 2);
    loop {
        let mut active: Vec<usize> = (0..n).filter(|&v| remaining[v] > 0).collect();
        if active.is_empty() {
            break;
        }
        active.sort_unstable_by_key(|&v| (std::cmp::Reverse(remaining[v]), v));
        let v = active[0];
        let need = remaining[v];
        if active.len() <= need {
            // never reached for graphic input; kept as a guard against one
            return Err(Error::NotGraphic);
        }
        remaining[v] = 0;
        for &u in &active[1..=need] {
            remaining[u] -= 1;
            edges.push((v.min(u), v.max(u)));
        }
    }
    SimpleGraph::from_edges(n, edges)
}

/// Fuses the components of `g` into one with degree-preserving 2-swaps:
/// each swap removes a cycle edge `(a, b)` from one component and any edge
/// `(c, d)` from another, then adds `(a, c)` and `(b, d)`. Returns the
/// connected result and the number of swaps (0 when `g` already is).
///
/// Fails with [`Error::CannotMerge`] when no swap sequence can work: an
/// isolated vertex can never gain an edge, and fewer than `n - 1` edges can
/// never span `n` vertices. Outside those two cases the merge always
/// succeeds, because a disconnected graph with at least `n - 1` edges has
/// more edges than a forest can hold, so some component carries a cycle.
pub fn merge_components_by_swap(g: &SimpleGraph) -> Result<(SimpleGraph, usize)> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if g.is_connected() {
        return Ok((g.clone(), 0));
    }
    if let Some(v) = (0..n).find(|&v| g.degree(v) == 0) {
        return Err(Error::CannotMerge {
            reason: format!("vertex {v} is isolated, and swaps preserve every degree"),
        });
    }
    if g.edge_count() < n - 1 {
        return Err(Error::CannotMerge {
            reason: format!(
                "{n} vertices need at least {} edges to be connected, got {}",
                n - 1,
                g.edge_count()
            ),
        });
    }
    let mut current = g.clone();
    let mut swaps = 0;
    while !current.is_connected() {
        let components = current.components();
        let (cyclic_idx, (a, b)) = find_cycle_edge(&current, &components)
            .expect("a disconnected graph with >= n-1 edges has a cyclic component");
        let donor_idx = usize::from(cyclic_idx == 0);
        let donor: BTreeSet<usize> = components[donor_idx].iter().copied().collect();
        let (c, d) = current
            .edges()
            .find(|(u, _)| donor.contains(u))
            .expect("positive minimum degree puts an edge in every component");
        let mut edges: BTreeSet<(usize, usize)> = current.edges().collect();
        edges.remove(&(a, b));
        edges.remove(&(c, d));
        edges.insert((a.min(c), a.max(c)));
        edges.insert((b.min(d), b.max(d)));
        current = SimpleGraph::from_edges(n, edges).expect("swaps keep endpoints in range");
        swaps += 1;
    }
    Ok((current, swaps))
}

/// The first cycle edge of the first component that has one: scanning
/// components in order of smallest member, returns the component's index and
/// its lexicographically first edge whose removal keeps it connected.
fn find_cycle_edge(
    g: &SimpleGraph,
    components: &[Vec<usize>],
) -> Option<(usize, (usize, usize))> {
    for (idx, component) in components.iter().enumerate() {
        let members: BTreeSet<usize> = component.iter().copied().collect();
        let local: Vec<(usize, usize)> =
            g.edges().filter(|(u, _)| members.contains(u)).collect();
        if local.len() < component.len() {
            continue; // a tree: every edge is a bridge
        }
        for &(u, v) in &local {
            if connected_without(&members, &local, (u, v)) {
                return Some((idx, (u, v)));
            }
        }
    }
    None
}

fn connected_without(
    vertices: &BTreeSet<usize>,
    edges: &[(usize, usize)],
    skipped: (usize, usize),
) -> bool {
    let mut adjacency: BTreeMap<usize, Vec<usize>> =
        vertices.iter().map(|&v| (v, Vec::new())).collect();
    for &(u, v) in edges {
        if (u, v) == skipped {
            continue;
        }
        adjacency.get_mut(&u).unwrap().push(v);
        adjacency.get_mut(&v).unwrap().push(u);
    }
    let start = *vertices.iter().next().unwrap();
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &w in &adjacency[&v] {
            if seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen.len() == vertices.len()
}

/// Reads a two-phase construction out of a connected graph: breadth-first
/// growth from vertex 0 (neighbors in ascending order) emits one vertex-
/// introducing step per tree edge, then the leftover edges follow in
/// lexicographic order. Replaying the trace reproduces `g` exactly, and
/// every prefix of it is a connected graph.
pub fn canonical_trace(g: &SimpleGraph) -> Result<ConstructionTrace> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let adjacency = g.adjacency();
    let mut steps = Vec::with_capacity(g.edge_count());
    let mut tree = BTreeSet::new();
    let mut discovered = vec![false; n];
    discovered[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        for &v in &adjacency[u] {
            if !discovered[v] {
                discovered[v] = true;
                tree.insert((u.min(v), u.max(v)));
                steps.push(Step::Open { anchor: u, new_vertex: v });
                queue.push_back(v);
            }
        }
    }
    for (u, v) in g.edges() {
        if !tree.contains(&(u, v)) {
            steps.push(Step::Closed { u, v });
        }
    }
    Ok(ConstructionTrace::new(steps))
}

/// The extremal pair at `n >= 5` vertices: two graphs sharing the degree
/// sequence `(n-3, ..., n-3, 1, 1)` and the maximum edge count a
/// disconnected graph without isolated vertices can have, one disconnected
/// and one connected.
///
/// The first is a complete graph on `n - 2` vertices plus a separate edge;
/// the second trades one clique edge for two edges tying that pair to the
/// outsiders. Together they witness that below the connectivity threshold,
/// edge count alone cannot decide connectedness.
pub fn extremal_pair(n: usize) -> Result<(SimpleGraph, SimpleGraph)> {
    if n < 5 {
        return Err(Error::DomainTooSmall { n, min: 5 });
    }
    let mut clique_edges = Vec::new();
    for j in 1..n - 2 {
        for i in 0..j {
            clique_edges.push((i, j));
        }
    }
    let mut disconnected_edges = clique_edges.clone();
    disconnected_edges.push((n - 2, n - 1));
    let disconnected = SimpleGraph::from_edges(n, disconnected_edges)?;

    let mut connected_edges: Vec<(usize, usize)> =
        clique_edges.into_iter().filter(|&e| e != (0, 1)).collect();
    connected_edges.push((0, n - 2));
    connected_edges.push((1, n - 1));
    let connected = SimpleGraph::from_edges(n, connected_edges)?;

    Ok((disconnected, connected))
}
