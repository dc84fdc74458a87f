//! Construction traces: building a connected graph from a single vertex by
//! open edges (which bring a new vertex in) and closed edges (which join two
//! vertices already present).
//!
//! Replaying a valid trace keeps every prefix connected — an open edge hangs
//! the new vertex off an existing one, and a closed edge only densifies —
//! so a trace is a certificate of connectivity for its final graph.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result, StepFault};
use crate::graph::SimpleGraph;

/// One construction step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    /// Joins `new_vertex` (not yet in the graph) to `anchor` (already in it).
    Open { anchor: usize, new_vertex: usize },
    /// Joins two vertices that are both already in the graph.
    Closed { u: usize, v: usize },
}

impl Step {
    pub fn is_open(&self) -> bool {
        matches!(self, Step::Open { .. })
    }

    /// The step's endpoints as written.
    pub fn endpoints(&self) -> (usize, usize) {
        match *self {
            Step::Open { anchor, new_vertex } => (anchor, new_vertex),
            Step::Closed { u, v } => (u, v),
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Step::Open { anchor, new_vertex } => write!(f, "O {anchor} {new_vertex}"),
            Step::Closed { u, v } => write!(f, "C {u} {v}"),
        }
    }
}

/// A sequence of steps that grows a graph from the single vertex `0`.
///
/// The steps are plain data; validity (kind labels match reality, the final
/// vertex set is the dense range `0..v`) is established by [`replay`].
///
/// [`replay`]: ConstructionTrace::replay
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ConstructionTrace {
    steps: Vec<Step>,
}

impl ConstructionTrace {
    pub fn new(steps: Vec<Step>) -> Self {
        ConstructionTrace { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn open_count(&self) -> usize {
        self.steps.iter().filter(|s| s.is_open()).count()
    }

    pub fn closed_count(&self) -> usize {
        self.steps.len() - self.open_count()
    }

    /// Whether all open steps come before all closed steps (the spanning-
    /// tree-first shape every connected graph admits).
    pub fn is_two_phase(&self) -> bool {
        let first_closed = self.steps.iter().position(|s| !s.is_open());
        match first_closed {
            None => true,
            Some(i) => self.steps[i..].iter().all(|s| !s.is_open()),
        }
    }

    /// Replays the trace from the one-vertex graph, validating every step.
    ///
    /// A step is rejected if its declared kind contradicts how the edge
    /// classifies against the partial graph (wrong-kind), if its edge already
    /// exists (duplicate-edge), or if a closed step names an absent vertex
    /// (dangling-vertex). Open steps may introduce vertex ids out of numeric
    /// order — the anchor is whichever endpoint is already present — but
    /// after the last step the ids used must form the dense range `0..v`.
    ///
    /// Every intermediate graph is connected by construction.
    pub fn replay(&self) -> Result<SimpleGraph> {
        let mut active: BTreeSet<usize> = BTreeSet::from([0]);
        let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
        for (index, step) in self.steps.iter().enumerate() {
            let fail = |fault: StepFault| Error::InvalidStep { index, fault };
            let (a, b) = step.endpoints();
            if a == b {
                return Err(fail(StepFault::SelfLoop));
            }
            let pair = (a.min(b), a.max(b));
            let in_a = active.contains(&a);
            let in_b = active.contains(&b);
            match step {
                Step::Open { .. } => match (in_a, in_b) {
                    (true, true) => {
                        if edges.contains(&pair) {
                            return Err(fail(StepFault::DuplicateEdge));
                        }
                        return Err(fail(StepFault::WrongKind {
                            declared: crate::graph::EdgeKind::Open,
                            actual: crate::graph::EdgeKind::Closed,
                        }));
                    }
                    (false, false) => {
                        return Err(fail(StepFault::WrongKind {
                            declared: crate::graph::EdgeKind::Open,
                            actual: crate::graph::EdgeKind::Disjoint,
                        }));
                    }
                    _ => {
                        active.insert(if in_a { b } else { a });
                        edges.insert(pair);
                    }
                },
                Step::Closed { .. } => {
                    if !in_a {
                        return Err(fail(StepFault::DanglingVertex { vertex: a }));
                    }
                    if !in_b {
                        return Err(fail(StepFault::DanglingVertex { vertex: b }));
                    }
                    if !edges.insert(pair) {
                        return Err(fail(StepFault::DuplicateEdge));
                    }
                }
            }
        }
        let vertex_count = active.len();
        let max_seen = *active.last().expect("vertex 0 is always active");
        if max_seen + 1 != vertex_count {
            let missing = (0..vertex_count).find(|v| !active.contains(v)).unwrap_or(0);
            return Err(Error::NonContiguousTrace { missing, max_seen });
        }
        let graph = SimpleGraph::from_edges(vertex_count, edges)?;
        debug_assert!(graph.is_connected());
        Ok(graph)
    }

    /// Renders the line format: `O a b` per open step (anchor first), `C u v`
    /// per closed step.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for step in &self.steps {
            out.push_str(&step.to_string());
            out.push('\n');
        }
        out
    }

    /// Parses the line format produced by [`to_text`]. Blank lines and `#`
    /// comments are skipped.
    ///
    /// [`to_text`]: ConstructionTrace::to_text
    pub fn parse(input: &str) -> Result<ConstructionTrace> {
        let mut steps = Vec::new();
        for (idx, raw) in input.lines().enumerate() {
            let at = || format!("line {}", idx + 1);
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.len() != 3 || (tokens[0] != "O" && tokens[0] != "C") {
                return Err(Error::parse(at(), "expected `O a b` or `C u v`"));
            }
            let parse_vertex = |tok: &str| -> Result<usize> {
                tok.parse().map_err(|_| Error::parse(at(), format!("bad vertex `{tok}`")))
            };
            let a = parse_vertex(tokens[1])?;
            let b = parse_vertex(tokens[2])?;
            steps.push(if tokens[0] == "O" {
                Step::Open { anchor: a, new_vertex: b }
            } else {
                Step::Closed { u: a, v: b }
            });
        }
        Ok(ConstructionTrace::new(steps))
    }
}

impl fmt::Display for ConstructionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for ConstructionTrace {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ConstructionTrace::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::EdgeKind;

    fn triangle_trace() -> ConstructionTrace {
        ConstructionTrace::new(vec![
            Step::Open { anchor: 0, new_vertex: 1 },
            Step::Open { anchor: 1, new_vertex: 2 },
            Step::Closed { u: 0, v: 2 },
        ])
    }

    #[test]
    fn empty_trace_is_the_single_vertex() {
        let g = ConstructionTrace::default().replay().unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn replay_builds_the_triangle() {
        let g = triangle_trace().replay().unwrap();
        assert_eq!(g, SimpleGraph::complete(3));
    }

    #[test]
    fn open_steps_may_discover_ids_out_of_order() {
        // vertices {0,1,2} with edges (0,2),(1,2): vertex 1 has no neighbor
        // below it, so the only way to build this exact labeling is to bring
        // vertex 2 in first
        let t = ConstructionTrace::new(vec![
            Step::Open { anchor: 0, new_vertex: 2 },
            Step::Open { anchor: 2, new_vertex: 1 },
        ]);
        let g = t.replay().unwrap();
        assert_eq!(g, SimpleGraph::from_edges(3, [(0, 2), (1, 2)]).unwrap());
    }

    #[test]
    fn replay_rejects_bad_steps() {
        // duplicate closed edge
        let t = ConstructionTrace::new(vec![
            Step::Open { anchor: 0, new_vertex: 1 },
            Step::Closed { u: 0, v: 1 },
        ]);
        assert!(matches!(
            t.replay(),
            Err(Error::InvalidStep { index: 1, fault: StepFault::DuplicateEdge })
        ));

        // open step whose endpoints are both present
        let t = ConstructionTrace::new(vec![
            Step::Open { anchor: 0, new_vertex: 1 },
            Step::Open { anchor: 0, new_vertex: 1 },
        ]);
        assert!(matches!(
            t.replay(),
            Err(Error::InvalidStep { index: 1, fault: StepFault::DuplicateEdge })
        ));
        let t = ConstructionTrace::new(vec![
            Step::Open { anchor: 0, new_vertex: 1 },
            Step::Open { anchor: 1, new_vertex: 2 },
            Step::Open { anchor: 0, new_vertex: 2 },
        ]);
        assert!(matches!(
            t.replay(),
            Err(Error::InvalidStep {
                index: 2,
                fault: StepFault::WrongKind { declared: EdgeKind::Open, actual: EdgeKind::Closed },
            })
        ));

        // open step with neither endpoint present
        let t = ConstructionTrace::new(vec![Step::Open { anchor: 5, new_vertex: 6 }]);
        assert!(matches!(
            t.replay(),
            Err(Error::InvalidStep {
                index: 0,
                fault: StepFault::WrongKind { declared: EdgeKind::Open, actual: EdgeKind::Disjoint },
            })
        ));

        // closed step naming an absent vertex
        let t = ConstructionTrace::new(vec![
            Step::Open { anchor: 0, new_vertex: 1 },
            Step::Closed { u: 1, v: 7 },
        ]);
        assert!(matches!(
            t.replay(),
            Err(Error::InvalidStep { index: 1, fault: StepFault::DanglingVertex { vertex: 7 } })
        ));

        // self-loop
        let t = ConstructionTrace::new(vec![Step::Open { anchor: 0, new_vertex: 0 }]);
        assert!(matches!(
            t.replay(),
            Err(Error::InvalidStep { index: 0, fault: StepFault::SelfLoop })
        ));
    }

    #[test]
    fn replay_requires_dense_final_ids() {
        let t = ConstructionTrace::new(vec![Step::Open { anchor: 0, new_vertex: 2 }]);
        assert!(matches!(
            t.replay(),
            Err(Error::NonContiguousTrace { missing: 1, max_seen: 2 })
        ));
    }

    #[test]
    fn text_round_trip() {
        let t = triangle_trace();
        let text = t.to_text();
        assert_eq!(text, "O 0 1\nO 1 2\nC 0 2\n");
        assert_eq!(ConstructionTrace::parse(&text).unwrap(), t);

        // comments and blanks are tolerated
        let t2 = ConstructionTrace::parse("# triangle\nO 0 1\n\nO 1 2 # second\nC 0 2\n").unwrap();
        assert_eq!(t2, t);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        match ConstructionTrace::parse("O 0 1\nQ 1 2\n").unwrap_err() {
            Error::Parse { location, .. } => assert_eq!(location, "line 2"),
            other => panic!("unexpected error {other:?}"),
        }
        assert!(ConstructionTrace::parse("O 0\n").is_err());
        assert!(ConstructionTrace::parse("C 0 1 2\n").is_err());
        assert!(ConstructionTrace::parse("O 0 x\n").is_err());
    }

    #[test]
    fn shape_helpers() {
        let t = triangle_trace();
        assert_eq!(t.open_count(), 2);
        assert_eq!(t.closed_count(), 1);
        assert!(t.is_two_phase());

        let interleaved = ConstructionTrace::new(vec![
            Step::Open { anchor: 0, new_vertex: 1 },
            Step::Open { anchor: 1, new_vertex: 2 },
            Step::Closed { u: 0, v: 2 },
            Step::Open { anchor: 0, new_vertex: 3 },
        ]);
        assert!(!interleaved.is_two_phase());
        assert!(interleaved.replay().is_ok());
    }
}
