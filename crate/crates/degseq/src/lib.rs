//! Connected simple graphs and the degree sequences that admit them.
//!
//! The crate answers three families of questions about finite simple graphs
//! and sequences of positive integers:
//!
//! * **Deciding** — is a sequence graphic? Does it have a connected
//!   realization? Do *all* of its realizations come out connected? Fast
//!   arithmetic checks (parity, sum bounds, max degree, an edge-count
//!   threshold) sit side by side with the exact predicates, and the places
//!   where the shortcuts diverge from ground truth are first-class, queryable
//!   results ([`find_sufficiency_gaps`], [`find_threshold_gaps`]) rather than
//!   caveats.
//! * **Building** — [`realize_connected`] turns any connected-realizable
//!   sequence into a concrete connected graph (greedy realization plus
//!   degree-preserving 2-swaps), and every connected graph yields a two-phase
//!   [`ConstructionTrace`] that grows it from a single vertex, one edge per
//!   step, connected at every prefix.
//! * **Counting** — exhaustive enumeration over all graphs on up to
//!   [`MAX_VERTICES`](enumeration::MAX_VERTICES) vertices, with a true
//!   canonical form for isomorphism classing, feeds a census that bins
//!   connected graphs by vertex and edge count ([`cell_census`]).
//!
//! # Quick start
//!
//! ```
//! use degseq::{realize_connected, verdict, DegreeSequence};
//!
//! let s: DegreeSequence = "3,3,3,3,1,1".parse()?;
//!
//! let report = verdict(&s);
//! assert!(report.graphic && report.exact_connected);
//! // this sequence also has a disconnected realization, and the report's
//! // edge-count threshold knows it cannot rule that out
//! assert!(!report.threshold_forced_connected);
//!
//! let built = realize_connected(&s)?;
//! assert!(built.graph.is_connected());
//! assert_eq!(built.swaps_used, 1); // the greedy pass needed one repair swap
//! assert_eq!(built.trace.replay()?, built.graph);
//! # Ok::<(), degseq::Error>(())
//! ```
//!
//! # Tour by example
//!
//! Each major capability has a runnable walkthrough under `examples/`:
//!
//! | example | run with | shows |
//! |---|---|---|
//! | sequence verdicts | `cargo run --example check_sequences` | every predicate on a batch of sequences |
//! | realization | `cargo run --example realize_sequence` | building connected graphs, repair swaps |
//! | traces | `cargo run --example construction_trace` | two-phase construction, replay, prefixes |
//! | the matrix | `cargo run --example partition_matrix` | the census grid and its column bounds |
//! | enumeration | `cargo run --example enumerate_realizations` | all/distinct realizations, forced connectivity |
//! | gap audit | `cargo run --example gap_audit` | where the arithmetic shortcuts fail |
//! | thresholds | `cargo run --example threshold_table` | edge-count thresholds and the extremal pair |
//!
//! The same functionality is scriptable through the thin `degseq` binary
//! (subcommands `check`, `realize`, `trace`, `enumerate`, `matrix`, `gaps`,
//! `threshold`).

#![forbid(unsafe_code)]

pub mod analysis;
pub mod construction;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod seq;
pub mod trace;

pub use analysis::{
    arithmetic_condition_failures, arithmetic_connected_check, column_row_bounds,
    connectivity_edge_threshold, find_sufficiency_gaps, find_threshold_gaps, is_connected_sequence,
    is_graphic, max_disconnected_edges, partition_cell, threshold_forced_connected, verdict,
    ArithmeticCondition, PartitionCell, SequenceVerdict, MAX_GAP_SEQUENCE_LENGTH,
};
pub use construction::{
    canonical_trace, extremal_pair, merge_components_by_swap, realize_connected, RealizationResult,
};
pub use enumeration::{
    all_realizations, canonical_form, cell_census, distinct_realizations, enumerate_graphs,
    is_forcibly_connected, is_isomorphic, realization_survey, CanonicalForm, CellCensus,
    CensusOptions, GraphIter, RealizationFlags,
};
pub use error::{Error, Result, StepFault};
pub use graph::{EdgeKind, SimpleGraph};
pub use seq::{parse_sequence, AssociatedPair, DegreeSequence};
pub use trace::{ConstructionTrace, Step};
