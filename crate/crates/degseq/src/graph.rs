//! Simple undirected graphs on a dense vertex range `0..vertex_count`.
//!
//! Graph values are immutable: [`SimpleGraph::add_edge`] returns a new graph.
//! Equality is label-sensitive; isomorphism testing lives in
//! [`crate::enumeration`].

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::seq::DegreeSequence;

/// How a candidate edge relates to a host graph.
///
/// The four kinds are mutually exclusive and cover every non-loop pair:
/// * `Open` — exactly one endpoint is an existing vertex, so adding the edge
///   brings one new vertex in.
/// * `Closed` — both endpoints exist and the edge is absent.
/// * `AlreadyPresent` — both endpoints exist and the edge is present.
/// * `Disjoint` — neither endpoint exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    Open,
    Closed,
    AlreadyPresent,
    Disjoint,
}

impl std::fmt::Display for EdgeKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            EdgeKind::Open => "open",
            EdgeKind::Closed => "closed",
            EdgeKind::AlreadyPresent => "already-present",
            EdgeKind::Disjoint => "disjoint",
        };
        f.write_str(s)
    }
}

/// An undirected graph without loops or parallel edges.
///
/// Vertices are the integers `0..vertex_count`; edges are stored as ordered
/// pairs `(u, v)` with `u < v`, so edge iteration is always sorted and all
/// derived output (edge lists, DOT, traces) is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl SimpleGraph {
    /// An edgeless graph on `vertex_count` vertices.
    pub fn new(vertex_count: usize) -> Self {
        SimpleGraph { vertex_count, edges: BTreeSet::new() }
    }

    /// Builds a graph from an edge iterator. Endpoint order within a pair is
    /// irrelevant and duplicate pairs collapse (set semantics); loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            let w = u.max(v);
            if w >= vertex_count {
                return Err(Error::VertexOutOfRange { vertex: w, vertex_count });
            }
            set.insert((u.min(v), w));
        }
        Ok(SimpleGraph { vertex_count, edges: set })
    }

    /// The complete graph on `vertex_count` vertices.
    pub fn complete(vertex_count: usize) -> Self {
        let mut edges = BTreeSet::new();
        for v in 0..vertex_count {
            for u in 0..v {
                edges.insert((u, v));
            }
        }
        SimpleGraph { vertex_count, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in sorted order, each as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    /// Whether the (order-insensitive) pair `{u, v}` is an edge.
    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// Degree of `v`. Panics if `v` is out of range.
    pub fn degree(&self, v: usize) -> usize {
        assert!(v < self.vertex_count, "vertex {v} out of range");
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Degrees indexed by vertex.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.vertex_count];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    /// Adjacency lists, each sorted ascending.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        // edges iterate sorted by (u, v), so adj[u] is already ascending for
        // the first endpoint; the mirrored entries need a sort
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Classifies the candidate edge `{u, v}` against this graph: exactly one
    /// of [`EdgeKind`]'s four cases. Loops are rejected rather than
    /// classified.
    pub fn classify_edge(&self, u: usize, v: usize) -> Result<EdgeKind> {
        if u == v {
            return Err(Error::SelfLoop { vertex: u });
        }
        let in_u = u < self.vertex_count;
        let in_v = v < self.vertex_count;
        Ok(match (in_u, in_v) {
            (true, true) => {
                if self.contains_edge(u, v) {
                    EdgeKind::AlreadyPresent
                } else {
                    EdgeKind::Closed
                }
            }
            (false, false) => EdgeKind::Disjoint,
            _ => EdgeKind::Open,
        })
    }

    /// Returns a new graph with `{u, v}` added. Only open and closed edges
    /// can be added; an open edge must introduce the next unused index
    /// (`vertex_count`), which keeps the vertex range dense.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<SimpleGraph> {
        match self.classify_edge(u, v)? {
            EdgeKind::Closed => {
                let mut g = self.clone();
                g.edges.insert((u.min(v), u.max(v)));
                Ok(g)
            }
            EdgeKind::Open => {
                let new_vertex = u.max(v); // the endpoint outside 0..vertex_count
                if new_vertex != self.vertex_count {
                    return Err(Error::NonContiguousVertex {
                        vertex: new_vertex,
                        next: self.vertex_count,
                    });
                }
                let mut g = self.clone();
                g.vertex_count += 1;
                g.edges.insert((u.min(v), new_vertex));
                Ok(g)
            }
            kind => Err(Error::InvalidUnion { u, v, kind }),
        }
    }

    /// Whether every vertex is reachable from every other. The one-vertex
    /// graph is connected; the zero-vertex graph is not.
    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return false;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.vertex_count
    }

    /// Connected components, each sorted ascending, ordered by smallest
    /// member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.vertex_count];
        let mut comps = Vec::new();
        for start in 0..self.vertex_count {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// The degree sequence (terms sorted non-increasing). Isolated vertices
    /// are rejected because the sequence domain has positive terms only.
    pub fn degree_sequence(&self) -> Result<DegreeSequence> {
        if self.vertex_count == 0 {
            return Err(Error::EmptyGraph);
        }
        let degrees = self.degrees();
        if let Some(v) = degrees.iter().position(|&d| d == 0) {
            return Err(Error::IsolatedVertex { vertex: v });
        }
        DegreeSequence::new(degrees)
    }

    /// The same graph with vertex `v` renamed to `perm[v]`. `perm` must be a
    /// permutation of `0..vertex_count`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<SimpleGraph> {
        if perm.len() != self.vertex_count {
            return Err(Error::VertexOutOfRange {
                vertex: perm.len(),
                vertex_count: self.vertex_count,
            });
        }
        let mut seen = vec![false; self.vertex_count];
        for &p in perm {
            if p >= self.vertex_count || seen[p] {
                return Err(Error::VertexOutOfRange { vertex: p, vertex_count: self.vertex_count });
            }
            seen[p] = true;
        }
        SimpleGraph::from_edges(
            self.vertex_count,
            self.edges.iter().map(|&(u, v)| (perm[u], perm[v])),
        )
    }

    /// Renders the edge-list format: a `n <vertex_count>` header line, then
    /// one `u v` line per edge in sorted order.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.vertex_count);
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Parses the edge-list format. `#` starts a comment, blank lines are
    /// skipped, the first significant line must be `n <vertex_count>`, and
    /// every edge line must satisfy `u < v` with both endpoints in range.
    pub fn parse_edge_list(input: &str) -> Result<SimpleGraph> {
        let mut graph: Option<SimpleGraph> = None;
        for (idx, raw) in input.lines().enumerate() {
            let line_no = idx + 1;
            let at = || format!("line {line_no}");
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match &mut graph {
                None => {
                    if tokens.len() != 2 || tokens[0] != "n" {
                        return Err(Error::parse(at(), "expected header `n <vertex_count>`"));
                    }
                    let count: usize = tokens[1]
                        .parse()
                        .map_err(|_| Error::parse(at(), format!("bad vertex count `{}`", tokens[1])))?;
                    graph = Some(SimpleGraph::new(count));
                }
                Some(g) => {
                    if tokens.len() != 2 {
                        return Err(Error::parse(at(), "expected an edge line `u v`"));
                    }
                    let parse_vertex = |tok: &str| -> Result<usize> {
                        tok.parse().map_err(|_| Error::parse(at(), format!("bad vertex `{tok}`")))
                    };
                    let u = parse_vertex(tokens[0])?;
                    let v = parse_vertex(tokens[1])?;
                    if u >= v {
                        return Err(Error::parse(at(), format!("edges require u < v, got {u} {v}")));
                    }
                    if v >= g.vertex_count {
                        return Err(Error::parse(
                            at(),
                            format!("vertex {v} out of range for {} vertices", g.vertex_count),
                        ));
                    }
                    if !g.edges.insert((u, v)) {
                        return Err(Error::parse(at(), format!("duplicate edge {u} {v}")));
                    }
                }
            }
        }
        graph.ok_or_else(|| Error::parse("end of input", "missing `n <vertex_count>` header"))
    }

    /// Renders an undirected DOT graph with bare integer node ids. Isolated
    /// vertices are listed as bare node statements so the rendering is
    /// lossless.
    pub fn to_dot(&self) -> String {
        let degrees = self.degrees();
        let mut out = String::from("graph {\n");
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        for (v, &d) in degrees.iter().enumerate() {
            if d == 0 {
                let _ = writeln!(out, "  {v};");
            }
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn path(n: usize) -> SimpleGraph {
        SimpleGraph::from_edges(n, (1..n).map(|v| (v - 1, v))).unwrap()
    }

    #[test]
    fn classification_covers_all_cases() {
        let tri = SimpleGraph::complete(3);
        assert_eq!(tri.classify_edge(0, 1).unwrap(), EdgeKind::AlreadyPresent);
        assert_eq!(tri.classify_edge(0, 3).unwrap(), EdgeKind::Open);
        assert_eq!(tri.classify_edge(4, 3).unwrap(), EdgeKind::Disjoint);
        let p3 = path(3);
        assert_eq!(p3.classify_edge(0, 2).unwrap(), EdgeKind::Closed);
        assert!(matches!(p3.classify_edge(1, 1), Err(Error::SelfLoop { vertex: 1 })));
    }

    #[test]
    fn add_edge_open_appends_next_index() {
        let tri = SimpleGraph::complete(3);
        let paw = tri.add_edge(0, 3).unwrap();
        assert_eq!(paw.vertex_count(), 4);
        assert_eq!(paw.edge_count(), 4);
        assert!(paw.contains_edge(0, 3));
        // direction of the pair does not matter
        let paw2 = tri.add_edge(3, 0).unwrap();
        assert_eq!(paw, paw2);
    }

    #[test]
    fn add_edge_rejects_bad_unions() {
        let tri = SimpleGraph::complete(3);
        assert!(matches!(
            tri.add_edge(0, 1),
            Err(Error::InvalidUnion { kind: EdgeKind::AlreadyPresent, .. })
        ));
        assert!(matches!(
            tri.add_edge(4, 5),
            Err(Error::InvalidUnion { kind: EdgeKind::Disjoint, .. })
        ));
        // an open edge may only introduce the next unused index
        assert!(matches!(
            tri.add_edge(0, 5),
            Err(Error::NonContiguousVertex { vertex: 5, next: 3 })
        ));
    }

    #[test]
    fn open_and_closed_additions_preserve_connectivity() {
        // grow K1 -> path -> cycle, checking connectivity at every step
        let mut g = SimpleGraph::new(1);
        assert!(g.is_connected());
        for v in 1..6 {
            g = g.add_edge(v - 1, v).unwrap();
            assert!(g.is_connected());
        }
        g = g.add_edge(0, 5).unwrap();
        assert!(g.is_connected());
        assert_eq!(g.degrees(), vec![2; 6]);
    }

    #[test]
    fn connectivity_basics() {
        assert!(!SimpleGraph::new(0).is_connected());
        assert!(SimpleGraph::new(1).is_connected());
        assert!(!SimpleGraph::new(2).is_connected());
        assert!(path(5).is_connected());
        let two_triangles =
            SimpleGraph::from_edges(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]).unwrap();
        assert!(!two_triangles.is_connected());
        assert_eq!(two_triangles.components(), vec![vec![0, 1, 2], vec![3, 4, 5]]);
    }

    #[test]
    fn degree_sequence_sorts_and_rejects_isolated() {
        let paw = SimpleGraph::from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        assert_eq!(paw.degree_sequence().unwrap().terms(), &[3, 2, 2, 1]);
        let lonely = SimpleGraph::from_edges(3, [(0, 1)]).unwrap();
        assert!(matches!(lonely.degree_sequence(), Err(Error::IsolatedVertex { vertex: 2 })));
        assert!(matches!(SimpleGraph::new(0).degree_sequence(), Err(Error::EmptyGraph)));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = SimpleGraph::from_edges(5, [(0, 2), (1, 2), (0, 3), (1, 4)]).unwrap();
        let text = g.to_edge_list();
        assert_eq!(SimpleGraph::parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_parser_reports_positions() {
        let err = SimpleGraph::parse_edge_list("n 3\n1 0\n").unwrap_err();
        match err {
            Error::Parse { location, message } => {
                assert_eq!(location, "line 2");
                assert!(message.contains("u < v"));
            }
            other => panic!("unexpected error {other:?}"),
        }
        assert!(SimpleGraph::parse_edge_list("").is_err());
        assert!(SimpleGraph::parse_edge_list("n 3\n0 1\n0 1\n").is_err());
        assert!(SimpleGraph::parse_edge_list("n 3\n0 5\n").is_err());
        // comments and blank lines are fine
        let g = SimpleGraph::parse_edge_list("# a path\n\nn 3\n0 1 # first\n1 2\n").unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn dot_lists_isolated_vertices() {
        let g = SimpleGraph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(g.to_dot(), "graph {\n  0 -- 1;\n  2;\n}\n");
    }

    proptest! {
        // classification is total and the four kinds are mutually exclusive
        #[test]
        fn classify_is_exhaustive(
            n in 1usize..7,
            edges in proptest::collection::vec((0usize..7, 0usize..7), 0..12),
            u in 0usize..9,
            v in 0usize..9,
        ) {
            let edges: Vec<_> = edges
                .into_iter()
                .filter(|&(a, b)| a != b && a < n && b < n)
                .collect();
            let g = SimpleGraph::from_edges(n, edges).unwrap();
            if u == v {
                prop_assert!(g.classify_edge(u, v).is_err());
            } else {
                let kind = g.classify_edge(u, v).unwrap();
                let inside = (u < n) as usize + (v < n) as usize;
                let expected = match inside {
                    0 => EdgeKind::Disjoint,
                    1 => EdgeKind::Open,
                    _ if g.contains_edge(u, v) => EdgeKind::AlreadyPresent,
                    _ => EdgeKind::Closed,
                };
                prop_assert_eq!(kind, expected);
            }
        }

        // the handshake identity: degree sum is twice the edge count
        #[test]
        fn handshake(
            n in 1usize..8,
            edges in proptest::collection::vec((0usize..8, 0usize..8), 0..20),
        ) {
            let edges: Vec<_> = edges
                .into_iter()
                .filter(|&(a, b)| a != b && a < n && b < n)
                .collect();
            let g = SimpleGraph::from_edges(n, edges).unwrap();
            let sum: usize = g.degrees().iter().sum();
            prop_assert_eq!(sum, 2 * g.edge_count());
        }
    }
}
