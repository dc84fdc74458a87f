//! Degree sequences with positive terms, and the (vertex count, degree sum)
//! pair every analysis in this crate pivots on.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A finite non-increasing sequence of positive integers.
///
/// The constructor sorts, so a `DegreeSequence` is really the multiset of
/// degrees; two sequences are equal iff their sorted terms are. Zero terms
/// are rejected: an isolated vertex can never be part of a connected graph
/// with more than one vertex, so the positive-term domain is where all the
/// connectivity questions live.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegreeSequence {
    terms: Vec<usize>,
}

impl DegreeSequence {
    /// Builds a sequence from any ordering of positive terms; the terms are
    /// sorted non-increasing.
    pub fn new(terms: impl Into<Vec<usize>>) -> Result<Self> {
        let mut terms = terms.into();
        if terms.is_empty() {
            return Err(Error::EmptySequence);
        }
        if let Some(index) = terms.iter().position(|&t| t == 0) {
            return Err(Error::NonPositiveTerm { index });
        }
        terms.sort_unstable_by(|a, b| b.cmp(a));
        Ok(DegreeSequence { terms })
    }

    /// Terms in non-increasing order.
    pub fn terms(&self) -> &[usize] {
        &self.terms
    }

    /// Number of terms (the vertex count of any realization).
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Always false: sequences have at least one term.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest term.
    pub fn max_term(&self) -> usize {
        self.terms[0]
    }

    /// Smallest term.
    pub fn min_term(&self) -> usize {
        *self.terms.last().expect("sequences are non-empty")
    }

    /// Sum of all terms. Twice the edge count of any realization.
    pub fn degree_sum(&self) -> usize {
        self.terms.iter().sum()
    }

    /// The (vertex count, degree sum) summary of this sequence.
    pub fn associated_pair(&self) -> AssociatedPair {
        AssociatedPair { vertex_count: self.len(), degree_sum: self.degree_sum() }
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl FromStr for DegreeSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_sequence(s).map(|(seq, _)| seq)
    }
}

/// Parses a comma-separated sequence like `"3,2,2,1"` (whitespace around
/// items is fine). Returns the sequence and whether the input had to be
/// reordered to become non-increasing.
pub fn parse_sequence(input: &str) -> Result<(DegreeSequence, bool)> {
    if input.trim().is_empty() {
        return Err(Error::parse("input", "empty sequence"));
    }
    let mut terms = Vec::new();
    for (idx, item) in input.split(',').enumerate() {
        let at = || format!("item {}", idx + 1);
        let item = item.trim();
        if item.is_empty() {
            return Err(Error::parse(at(), "empty item"));
        }
        let term: usize = item
            .parse()
            .map_err(|_| Error::parse(at(), format!("`{item}` is not a positive integer")))?;
        if term == 0 {
            return Err(Error::parse(at(), "degree terms must be positive"));
        }
        terms.push(term);
    }
    let reordered = terms.windows(2).any(|w| w[0] < w[1]);
    Ok((DegreeSequence::new(terms)?, reordered))
}

/// The pair (vertex count, degree sum) associated with a degree sequence.
///
/// The degree sum is kept un-halved so that parity stays observable: a
/// sequence has an integral edge count iff the sum is even, and several
/// predicates need exactly that distinction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AssociatedPair {
    pub vertex_count: usize,
    pub degree_sum: usize,
}

impl AssociatedPair {
    /// Half the degree sum — the edge count of any realization — when the
    /// sum is even.
    pub fn edge_count(&self) -> Option<usize> {
        if self.degree_sum.is_multiple_of(2) {
            Some(self.degree_sum / 2)
        } else {
            None
        }
    }
}

impl fmt::Display for AssociatedPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.edge_count() {
            Some(e) => write!(f, "({}, {})", self.vertex_count, e),
            None => write!(f, "({}, {}/2)", self.vertex_count, self.degree_sum),
        }
    }
}
