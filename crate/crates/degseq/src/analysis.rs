//! Predicates on degree sequences: graphicness, connected realizability, the
//! four-condition arithmetic check, forcibly-connected thresholds, and the
//! partition-matrix cell a sequence lands in.
//!
//! Two connectivity predicates are deliberately kept side by side:
//!
//! * [`is_connected_sequence`] — exact: the sequence is graphic (Erdős–
//!   Gallai) and has enough degree sum for a spanning tree. This is the
//!   ground truth the rest of the crate realizes and enumerates against.
//! * [`arithmetic_connected_check`] — four arithmetic conditions (parity, lower
//!   bound, upper bound, max degree). Necessary but **not** sufficient:
//!   `3,3,1,1` passes all four yet is not graphic. [`find_sufficiency_gaps`]
//!   enumerates exactly these divergences.
//!
//! The same split exists for forced connectivity: the edge-count threshold
//! behind [`threshold_forced_connected`] is exact in one direction only,
//! and [`find_threshold_gaps`] lists the sequences it misses (for example
//! `4,2,1,1,1,1`, and every star `n-1,1,...,1` with `n >= 5`).

use crate::enumeration;
use crate::error::{Error, Result};
use crate::seq::DegreeSequence;

/// Upper bound on `max_n` for [`find_sufficiency_gaps`]: the candidate space
/// (non-increasing positive sequences) grows as a central binomial and the
/// point of the finder is an exhaustive audit, not an open-ended search.
pub const MAX_GAP_SEQUENCE_LENGTH: usize = 9;

/// One of the four conditions of the arithmetic check. A sequence
/// passes [`arithmetic_connected_check`] iff none of these fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithmeticCondition {
    /// The degree sum must be even.
    Parity,
    /// Half the degree sum must be at least `n - 1` (room for a spanning
    /// tree).
    LowerBound,
    /// Half the degree sum must be at most `n(n-1)/2` (a simple graph).
    UpperBound,
    /// No term may exceed `n - 1`.
    MaxDegree,
}

impl ArithmeticCondition {
    pub fn as_str(&self) -> &'static str {
        match self {
            ArithmeticCondition::Parity => "parity",
            ArithmeticCondition::LowerBound => "lower-bound",
            ArithmeticCondition::UpperBound => "upper-bound",
            ArithmeticCondition::MaxDegree => "max-degree",
        }
    }
}

impl std::fmt::Display for ArithmeticCondition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Everything the crate can say about one sequence, in one place.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceVerdict {
    /// Erdős–Gallai graphicness.
    pub graphic: bool,
    /// The four-condition arithmetic check.
    pub arithmetic_connected: bool,
    /// Exact connected realizability.
    pub exact_connected: bool,
    /// The arithmetic forced-connectivity claim (arithmetic check plus the
    /// edge threshold). Like the check itself this can overshoot; compare
    /// with [`enumeration::is_forcibly_connected`] for ground truth.
    pub threshold_forced_connected: bool,
    /// Which of the four conditions failed, in fixed declaration order.
    pub failure_reasons: Vec<ArithmeticCondition>,
}

/// Erdős–Gallai test: `s` is the degree sequence of some simple graph iff
/// the sum is even and every prefix satisfies
/// `sum(s[..k]) <= k(k-1) + sum(min(s[i], k) for i >= k)`.
///
/// Runs in `O(n log n)` (the terms are already sorted; each prefix bound is
/// evaluated with a binary search for the crossover where terms drop below
/// `k`).
pub fn is_graphic(s: &DegreeSequence) -> bool {
    let terms = s.terms();
    let n = terms.len();
    if !s.degree_sum().is_multiple_of(2) {
        return false;
    }
    let mut prefix = vec![0usize; n + 1];
    for (i, &t) in terms.iter().enumerate() {
        prefix[i + 1] = prefix[i] + t;
    }
    let total = prefix[n];
    for k in 1..=n {
        // c = how many terms are >= k; terms are non-increasing
        let c = terms.partition_point(|&d| d >= k);
        let tail = if c > k {
            // positions k+1..c contribute k each, the rest contribute themselves
            k * (c - k) + (total - prefix[c])
        } else {
            total - prefix[k]
        };
        if prefix[k] > k * (k - 1) + tail {
            return false;
        }
    }
    true
}

/// Which of the four arithmetic conditions fail for `s`, in fixed order
/// (parity, lower-bound, upper-bound, max-degree). Empty means the check
/// passes. All comparisons stay on the un-halved degree sum, so odd sums
/// never round.
pub fn arithmetic_condition_failures(s: &DegreeSequence) -> Vec<ArithmeticCondition> {
    let n = s.len();
    let sum = s.degree_sum();
    let mut failures = Vec::new();
    if !sum.is_multiple_of(2) {
        failures.push(ArithmeticCondition::Parity);
    }
    if sum < 2 * (n - 1) {
        failures.push(ArithmeticCondition::LowerBound);
    }
    if sum > n * (n - 1) {
        failures.push(ArithmeticCondition::UpperBound);
    }
    if s.max_term() > n - 1 {
        failures.push(ArithmeticCondition::MaxDegree);
    }
    failures
}

/// The four-condition arithmetic connectivity check. Every connected graph's
/// degree sequence passes; the converse fails (see [`find_sufficiency_gaps`]).
pub fn arithmetic_connected_check(s: &DegreeSequence) -> bool {
    arithmetic_condition_failures(s).is_empty()
}

/// Exact predicate: `s` has at least one connected realization. Equivalent
/// to being graphic with degree sum at least `2(n-1)`.
pub fn is_connected_sequence(s: &DegreeSequence) -> bool {
    is_graphic(s) && s.degree_sum() >= 2 * (s.len() - 1)
}

/// Arithmetic forced-connectivity claim: the arithmetic check passes and the
/// edge count clears `(n-2)(n-3)/2 + 1`, the most edges a disconnected graph
/// without isolated vertices can carry.
///
/// Above the threshold the claim is exact; below it, it under-reports — see
/// [`find_threshold_gaps`].
pub fn threshold_forced_connected(s: &DegreeSequence) -> bool {
    let n = s.len() as i64;
    let sum = s.degree_sum() as i64;
    // 2e > (n-2)(n-3) + 2, kept on the un-halved sum
    arithmetic_connected_check(s) && sum > (n - 2) * (n - 3) + 2
}

/// Runs every predicate on `s` and packages the outcome.
pub fn verdict(s: &DegreeSequence) -> SequenceVerdict {
    let failure_reasons = arithmetic_condition_failures(s);
    SequenceVerdict {
        graphic: is_graphic(s),
        arithmetic_connected: failure_reasons.is_empty(),
        exact_connected: is_connected_sequence(s),
        threshold_forced_connected: threshold_forced_connected(s),
        failure_reasons,
    }
}

/// A cell of the partition matrix: `col = j` gathers connected graphs on
/// `j + 1` vertices, `row = i` those with `i + j` edges. Ordered by column
/// then row, which is the order every rendering uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PartitionCell {
    pub row: usize,
    pub col: usize,
}

impl PartitionCell {
    pub fn new(row: usize, col: usize) -> Self {
        PartitionCell { row, col }
    }
}

impl Ord for PartitionCell {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.col, self.row).cmp(&(other.col, other.row))
    }
}

impl PartialOrd for PartitionCell {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Display for PartitionCell {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.row, self.col)
    }
}

/// Where every connected realization of `s` lands in the partition matrix:
/// `(row, col) = (e - n + 1, n - 1)`. Errors when `s` has no connected
/// realization.
pub fn partition_cell(s: &DegreeSequence) -> Result<PartitionCell> {
    if !is_connected_sequence(s) {
        return Err(Error::NotConnectedSequence);
    }
    let n = s.len();
    let e = s.degree_sum() / 2; // graphic, so the sum is even
    Ok(PartitionCell::new(e - (n - 1), n - 1))
}

/// The inclusive row range `(0, j(j-1)/2)` that column `j` of the partition
/// matrix can populate: row 0 are the trees on `j + 1` vertices, the top row
/// is the complete graph.
pub fn column_row_bounds(col: usize) -> (usize, usize) {
    (0, col.saturating_sub(1) * col / 2)
}

/// The most edges a disconnected graph on `n` vertices without isolated
/// vertices can have: `(n-2)(n-3)/2 + 1`, attained by `K_{n-2}` plus a
/// disjoint edge. Needs `n >= 4` — below that every graph with positive
/// degrees is connected.
pub fn max_disconnected_edges(n: usize) -> Result<usize> {
    if n < 4 {
        return Err(Error::DomainTooSmall { n, min: 4 });
    }
    Ok((n - 2) * (n - 3) / 2 + 1)
}

/// Smallest edge count that forces connectivity for graphs on `n` vertices
/// with minimum degree at least one: `(n^2 - 5n + 10) / 2`. The minimum-
/// degree hypothesis matters — a complete graph plus an isolated vertex has
/// arbitrarily many edges and is still disconnected.
pub fn connectivity_edge_threshold(n: usize) -> Result<usize> {
    if n < 2 {
        return Err(Error::DomainTooSmall { n, min: 2 });
    }
    Ok((n * n + 10 - 5 * n) / 2)
}

/// Exhaustively lists the sequences of length at most `max_n` that pass the
/// arithmetic [`arithmetic_connected_check`] but are **not** actually realizable
/// as connected graphs — the check's sufficiency gaps. Sorted by length,
/// then lexicographically.
///
/// Candidates only need terms up to `n - 1`: anything larger already fails
/// the max-degree condition and so cannot be a gap.
pub fn find_sufficiency_gaps(max_n: usize) -> Result<Vec<DegreeSequence>> {
    if max_n > MAX_GAP_SEQUENCE_LENGTH {
        return Err(Error::LimitExceeded { requested: max_n, max: MAX_GAP_SEQUENCE_LENGTH });
    }
    let mut gaps = Vec::new();
    for n in 2..=max_n.max(1) {
        for_each_nonincreasing(n, n - 1, &mut |terms| {
            let s = DegreeSequence::new(terms.to_vec()).expect("terms are positive");
            if arithmetic_connected_check(&s) && !is_connected_sequence(&s) {
                gaps.push(s);
            }
        });
    }
    gaps.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.terms().cmp(b.terms())));
    Ok(gaps)
}

/// Exhaustively lists the sequences of length at most `max_n` that are
/// forcibly connected per the enumeration oracle (every realization is
/// connected) yet fail [`threshold_forced_connected`] — the threshold's
/// converse gaps. Sorted by length, then lexicographically.
///
/// `jobs` is the worker count for the underlying exhaustive scans; the
/// result does not depend on it.
pub fn find_threshold_gaps(max_n: usize, jobs: usize) -> Result<Vec<DegreeSequence>> {
    if max_n > enumeration::MAX_VERTICES {
        return Err(Error::LimitExceeded { requested: max_n, max: enumeration::MAX_VERTICES });
    }
    let mut gaps = Vec::new();
    for n in 1..=max_n {
        for (s, flags) in enumeration::realization_survey(n, jobs)? {
            // in the survey at all => at least one realization
            if !flags.disconnected && !threshold_forced_connected(&s) {
                gaps.push(s);
            }
        }
    }
    Ok(gaps)
}

/// Calls `f` with every non-increasing sequence of `len` positive terms
/// bounded by `cap`.
fn for_each_nonincreasing(len: usize, cap: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(prefix: &mut Vec<usize>, remaining: usize, cap: usize, f: &mut impl FnMut(&[usize])) {
        if remaining == 0 {
            f(prefix);
            return;
        }
        for t in 1..=cap {
            prefix.push(t);
            rec(prefix, remaining - 1, t, f);
            prefix.pop();
        }
    }
    if cap == 0 {
        return;
    }
    rec(&mut Vec::with_capacity(len), len, cap, f);
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn seq(terms: &[usize]) -> DegreeSequence {
        DegreeSequence::new(terms.to_vec()).unwrap()
    }

    mod graphic {
        use super::*;

        #[test]
        fn known_values() {
            assert!(is_graphic(&seq(&[2, 2, 2])));
            assert!(is_graphic(&seq(&[1, 1])));
            assert!(is_graphic(&seq(&[2, 2, 1, 1])));
            assert!(is_graphic(&seq(&[4, 1, 1, 1, 1])));
            assert!(is_graphic(&seq(&[3, 3, 3, 3, 1, 1])));
            assert!(is_graphic(&seq(&[3, 3, 3, 3])));
            // odd sum
            assert!(!is_graphic(&seq(&[3, 2, 1, 1])));
            // even sum but the k = 2 prefix bound fails: 6 > 2 + 1 + 1
            assert!(!is_graphic(&seq(&[3, 3, 1, 1])));
            // max degree too large for the length
            assert!(!is_graphic(&seq(&[4, 1, 1, 1])));
            assert!(!is_graphic(&seq(&[2])));
            assert!(!is_graphic(&seq(&[4, 4, 2, 1, 1])));
        }

        /// Direct quadratic evaluation of the same inequality family.
        fn naive_graphic(terms: &[usize]) -> bool {
            let n = terms.len();
            if terms.iter().sum::<usize>() % 2 != 0 {
                return false;
            }
            for k in 1..=n {
                let lhs: usize = terms[..k].iter().sum();
                let rhs: usize =
                    k * (k - 1) + terms[k..].iter().map(|&d| d.min(k)).sum::<usize>();
                if lhs > rhs {
                    return false;
                }
            }
            true
        }

        /// Independent oracle: the recursive greedy reduction (sort, remove
        /// the largest term d, decrement the next d terms).
        fn greedy_graphic(mut terms: Vec<usize>) -> bool {
            loop {
                terms.sort_unstable_by(|a, b| b.cmp(a));
                while terms.last() == Some(&0) {
                    terms.pop();
                }
                if terms.is_empty() {
                    return true;
                }
                let d = terms.remove(0);
                if d > terms.len() {
                    return false;
                }
                for t in terms.iter_mut().take(d) {
                    *t -= 1;
                }
            }
        }

        proptest! {
            #[test]
            fn matches_naive_and_greedy(terms in proptest::collection::vec(1usize..10, 1..10)) {
                let s = DegreeSequence::new(terms).unwrap();
                let fast = is_graphic(&s);
                prop_assert_eq!(fast, naive_graphic(s.terms()));
                prop_assert_eq!(fast, greedy_graphic(s.terms().to_vec()));
            }
        }
    }

    mod arithmetic_check {
        use super::*;

        #[test]
        fn passes_where_it_should() {
            assert!(arithmetic_connected_check(&seq(&[2, 2, 1, 1])));
            assert!(arithmetic_connected_check(&seq(&[1, 1])));
            // the famous false positive: passes all four conditions but is
            // not graphic
            assert!(arithmetic_connected_check(&seq(&[3, 3, 1, 1])));
            assert!(!is_connected_sequence(&seq(&[3, 3, 1, 1])));
        }

        #[test]
        fn failure_reasons_are_labeled() {
            assert_eq!(
                arithmetic_condition_failures(&seq(&[3, 2, 1, 1])),
                vec![ArithmeticCondition::Parity]
            );
            assert_eq!(
                arithmetic_condition_failures(&seq(&[1, 1, 1, 1, 1, 1])),
                vec![ArithmeticCondition::LowerBound]
            );
            assert_eq!(
                arithmetic_condition_failures(&seq(&[4, 2, 1, 1])),
                vec![ArithmeticCondition::MaxDegree]
            );
            // a single term of 2 asks for edges a one-vertex graph cannot hold
            assert_eq!(
                arithmetic_condition_failures(&seq(&[2])),
                vec![ArithmeticCondition::UpperBound, ArithmeticCondition::MaxDegree]
            );
            // upper bound needs an absurdly dense request
            assert_eq!(
                arithmetic_condition_failures(&seq(&[9, 9, 9, 9])),
                vec![ArithmeticCondition::UpperBound, ArithmeticCondition::MaxDegree]
            );
            assert_eq!(arithmetic_condition_failures(&seq(&[2, 2, 2])), vec![]);
        }

        #[test]
        fn single_vertex_sequences_fail() {
            // {0} is outside the domain entirely; {k} with k >= 1 fails
            assert!(!arithmetic_connected_check(&seq(&[1])));
            assert!(!is_connected_sequence(&seq(&[1])));
        }
    }

    mod exact_connected {
        use super::*;

        #[test]
        fn known_values() {
            assert!(is_connected_sequence(&seq(&[2, 2, 2])));
            assert!(is_connected_sequence(&seq(&[3, 3, 3, 3, 1, 1])));
            assert!(is_connected_sequence(&seq(&[2, 2, 2, 2, 1, 1])));
            // graphic but not enough sum for a spanning tree
            assert!(is_graphic(&seq(&[1, 1, 1, 1])));
            assert!(!is_connected_sequence(&seq(&[1, 1, 1, 1])));
            assert!(!is_connected_sequence(&seq(&[3, 3, 1, 1])));
        }
    }

    mod forced_connectivity {
        use super::*;

        #[test]
        fn threshold_side() {
            // 2e = 12 > (4-2)(4-3) + 2 = 4
            assert!(threshold_forced_connected(&seq(&[3, 3, 3, 3])));
            assert!(threshold_forced_connected(&seq(&[2, 2, 2])));
            // K4 plus a disjoint edge realizes this one, so the threshold
            // correctly refuses it: 2e = 14, (6-2)(6-3) + 2 = 14, not >
            assert!(!threshold_forced_connected(&seq(&[3, 3, 3, 3, 1, 1])));
            // forcibly connected in truth, but below the threshold
            assert!(!threshold_forced_connected(&seq(&[4, 2, 1, 1, 1, 1])));
            assert!(!threshold_forced_connected(&seq(&[4, 1, 1, 1, 1])));
            assert!(!threshold_forced_connected(&seq(&[1, 1])));
        }
    }

    mod cells {
        use super::*;

        #[test]
        fn cell_examples() {
            assert_eq!(partition_cell(&seq(&[1, 1])).unwrap(), PartitionCell::new(0, 1));
            assert_eq!(partition_cell(&seq(&[2, 2, 2])).unwrap(), PartitionCell::new(1, 2));
            assert_eq!(partition_cell(&seq(&[2, 2, 1, 1])).unwrap(), PartitionCell::new(0, 3));
            assert_eq!(
                partition_cell(&seq(&[3, 3, 3, 3])).unwrap(),
                PartitionCell::new(3, 3)
            );
            assert!(matches!(
                partition_cell(&seq(&[1, 1, 1, 1])),
                Err(Error::NotConnectedSequence)
            ));
        }

        #[test]
        fn column_bounds() {
            assert_eq!(column_row_bounds(0), (0, 0));
            assert_eq!(column_row_bounds(1), (0, 0));
            assert_eq!(column_row_bounds(2), (0, 1));
            assert_eq!(column_row_bounds(3), (0, 3));
            assert_eq!(column_row_bounds(6), (0, 15));
        }

        #[test]
        fn cells_order_by_column_then_row() {
            let mut cells = vec![
                PartitionCell::new(0, 3),
                PartitionCell::new(2, 2),
                PartitionCell::new(1, 3),
                PartitionCell::new(0, 0),
            ];
            cells.sort();
            assert_eq!(
                cells,
                vec![
                    PartitionCell::new(0, 0),
                    PartitionCell::new(2, 2),
                    PartitionCell::new(0, 3),
                    PartitionCell::new(1, 3),
                ]
            );
        }
    }

    mod thresholds {
        use super::*;

        #[test]
        fn known_values() {
            assert_eq!(max_disconnected_edges(4).unwrap(), 2);
            assert_eq!(max_disconnected_edges(5).unwrap(), 4);
            assert_eq!(max_disconnected_edges(6).unwrap(), 7);
            assert_eq!(max_disconnected_edges(7).unwrap(), 11);
            assert!(matches!(max_disconnected_edges(3), Err(Error::DomainTooSmall { n: 3, min: 4 })));

            assert_eq!(connectivity_edge_threshold(2).unwrap(), 2);
            assert_eq!(connectivity_edge_threshold(4).unwrap(), 3);
            assert_eq!(connectivity_edge_threshold(6).unwrap(), 8);
            assert_eq!(connectivity_edge_threshold(7).unwrap(), 12);
            assert!(matches!(connectivity_edge_threshold(1), Err(Error::DomainTooSmall { .. })));
        }

        #[test]
        fn threshold_is_one_above_max_disconnected() {
            for n in 4..=64 {
                assert_eq!(
                    connectivity_edge_threshold(n).unwrap(),
                    max_disconnected_edges(n).unwrap() + 1,
                    "mismatch at n = {n}"
                );
            }
        }
    }

    mod gap_finders {
        use super::*;

        #[test]
        fn sufficiency_gaps_small() {
            assert_eq!(find_sufficiency_gaps(3).unwrap(), vec![]);
            let gaps = find_sufficiency_gaps(4).unwrap();
            assert!(gaps.contains(&seq(&[3, 3, 1, 1])), "gaps were {gaps:?}");
            // every reported gap really does pass the check and fail reality
            for g in &gaps {
                assert!(arithmetic_connected_check(g));
                assert!(!is_connected_sequence(g));
            }
        }

        #[test]
        fn sufficiency_gaps_at_five_include_the_derived_witness() {
            let gaps = find_sufficiency_gaps(5).unwrap();
            assert!(gaps.contains(&seq(&[4, 4, 2, 1, 1])));
            // sorted by length then lexicographically
            let mut sorted = gaps.clone();
            sorted.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.terms().cmp(b.terms())));
            assert_eq!(gaps, sorted);
        }

        #[test]
        fn caps_are_enforced() {
            assert!(matches!(
                find_sufficiency_gaps(10),
                Err(Error::LimitExceeded { requested: 10, max: 9 })
            ));
            assert!(matches!(
                find_threshold_gaps(9, 1),
                Err(Error::LimitExceeded { requested: 9, max: 8 })
            ));
        }

        #[test]
        fn threshold_gaps_small() {
            let gaps = find_threshold_gaps(5, 1).unwrap();
            // the single edge: trivially forcibly connected, below threshold
            assert!(gaps.contains(&seq(&[1, 1])));
            // stars have a unique realization
            assert!(gaps.contains(&seq(&[4, 1, 1, 1, 1])));
            // P3 and P4 clear the threshold, so they are not gaps
            assert!(!gaps.contains(&seq(&[2, 1, 1])));
            assert!(!gaps.contains(&seq(&[2, 2, 1, 1])));
        }
    }
}
