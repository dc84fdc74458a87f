//! Exhaustive enumeration of small graphs: the crate's ground truth.
//!
//! Graphs on `n <= 8` vertices are encoded as `n(n-1)/2`-bit edge masks
//! (column-major upper triangle: bit k is the pair (0,1), (0,2), (1,2),
//! (0,3), ...), so "every graph on n vertices" is a single integer range.
//! Everything here — realization listings, forcibly-connected verdicts, the
//! partition-matrix census — is a scan over that range, optionally split
//! across worker threads. Workers own disjoint subranges and their partial
//! results merge with commutative operations, so results are identical for
//! every worker count.
//!
//! Isomorphism is decided by a canonical form: the lexicographically
//! smallest edge-bit string over all vertex relabelings, found by
//! branch-and-bound over partial placements. Pruning only ever skips
//! placements that provably cannot reach a smaller string, so the result
//! equals the brute-force minimum over all `n!` permutations (the test
//! suite checks exactly that).

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicBool, Ordering};

use serde::{Deserialize, Serialize};

use crate::analysis::{is_graphic, PartitionCell};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::seq::DegreeSequence;

/// Hard cap on exhaustive enumeration. `2^28` masks at `n = 8` is the edge
/// of practical; raise only deliberately (codes are stored in 64 bits, which
/// accommodates `n <= 11`).
pub const MAX_VERTICES: usize = 8;

/// Cache format version; bump when the census layout or canonical-code
/// packing changes, which invalidates older cache files.
pub const CENSUS_CACHE_VERSION: u32 = 1;

const MAX_EDGE_BITS: usize = MAX_VERTICES * (MAX_VERTICES - 1) / 2;

/// Column-major upper-triangle pair order shared by masks and canonical
/// codes.
#[derive(Clone, Copy)]
struct PairTable {
    pairs: [(u8, u8); MAX_EDGE_BITS],
    m: usize,
}

fn colex_pairs(n: usize) -> PairTable {
    let mut pairs = [(0u8, 0u8); MAX_EDGE_BITS];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            pairs[k] = (i as u8, j as u8);
            k += 1;
        }
    }
    PairTable { pairs, m: k }
}

/// Adjacency rows (bit v of `rows[u]` = edge {u, v}) from an edge mask.
fn rows_of_mask(mask: u64, table: &PairTable) -> [u16; MAX_VERTICES] {
    let mut rows = [0u16; MAX_VERTICES];
    let mut bits = mask;
    while bits != 0 {
        let k = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let (i, j) = table.pairs[k];
        rows[i as usize] |= 1 << j;
        rows[j as usize] |= 1 << i;
    }
    rows
}

fn rows_of_graph(g: &SimpleGraph) -> [u16; MAX_VERTICES] {
    let mut rows = [0u16; MAX_VERTICES];
    for (u, v) in g.edges() {
        rows[u] |= 1 << v;
        rows[v] |= 1 << u;
    }
    rows
}

fn rows_connected(rows: &[u16; MAX_VERTICES], n: usize) -> bool {
    let full: u16 = (1 << n) - 1;
    let mut visited: u16 = 1;
    let mut frontier: u16 = 1;
    while frontier != 0 {
        let mut next: u16 = 0;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= rows[v];
        }
        frontier = next & !visited;
        visited |= next;
    }
    visited == full
}

/// Degrees sorted non-increasing, zero-padded to the array width.
fn sorted_degrees(rows: &[u16; MAX_VERTICES], n: usize) -> [u8; MAX_VERTICES] {
    let mut d = [0u8; MAX_VERTICES];
    for v in 0..n {
        d[v] = rows[v].count_ones() as u8;
    }
    d[..n].sort_unstable_by(|a, b| b.cmp(a));
    d
}

fn edges_of_mask(mask: u64, table: &PairTable) -> Vec<(usize, usize)> {
    let mut edges = Vec::with_capacity(mask.count_ones() as usize);
    let mut bits = mask;
    while bits != 0 {
        let k = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let (i, j) = table.pairs[k];
        edges.push((i as usize, j as usize));
    }
    edges
}

fn graph_of_mask(mask: u64, n: usize, table: &PairTable) -> SimpleGraph {
    SimpleGraph::from_edges(n, edges_of_mask(mask, table)).expect("mask pairs are in range")
}

fn check_enumerable(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::DomainTooSmall { n, min: 1 });
    }
    if n > MAX_VERTICES {
        return Err(Error::LimitExceeded { requested: n, max: MAX_VERTICES });
    }
    Ok(())
}

/// Splits the mask range `0..2^m` into `jobs` contiguous chunks, runs
/// `worker` on each in its own thread, and returns the partial results in
/// chunk order (so any merge that respects chunk order is deterministic).
fn scan_masks<T, F>(n: usize, jobs: usize, worker: F) -> Vec<T>
where
    T: Send,
    F: Fn(std::ops::Range<u64>) -> T + Sync,
{
    let m = n * (n - 1) / 2;
    let total: u64 = 1 << m;
    let jobs = (jobs.max(1) as u64).min(total);
    let chunk = total / jobs;
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..jobs)
            .map(|k| {
                let lo = k * chunk;
                let hi = if k + 1 == jobs { total } else { lo + chunk };
                let worker = &worker;
                scope.spawn(move || worker(lo..hi))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("scan worker panicked")).collect()
    })
}

// ---------------------------------------------------------------------------
// enumeration stream
// ---------------------------------------------------------------------------

/// Iterator over every labeled simple graph on `n` vertices with minimum
/// degree at least `min_degree`, in ascending edge-mask order.
pub struct GraphIter {
    n: usize,
    min_degree: usize,
    table: PairTable,
    next_mask: u64,
    total: u64,
}

impl Iterator for GraphIter {
    type Item = SimpleGraph;

    fn next(&mut self) -> Option<SimpleGraph> {
        while self.next_mask < self.total {
            let mask = self.next_mask;
            self.next_mask += 1;
            if self.min_degree > 0 {
                let rows = rows_of_mask(mask, &self.table);
                let ok = (0..self.n)
                    .all(|v| rows[v].count_ones() as usize >= self.min_degree);
                if !ok {
                    continue;
                }
            }
            return Some(graph_of_mask(mask, self.n, &self.table));
        }
        None
    }
}

/// Streams every labeled simple graph on `n` vertices (`1 <= n <= 8`) whose
/// minimum degree is at least `min_degree`, each exactly once, in a fixed
/// order.
pub fn enumerate_graphs(n: usize, min_degree: usize) -> Result<GraphIter> {
    check_enumerable(n)?;
    let table = colex_pairs(n);
    Ok(GraphIter { n, min_degree, table, next_mask: 0, total: 1 << table.m })
}

// ---------------------------------------------------------------------------
// canonical form
// ---------------------------------------------------------------------------

/// A complete isomorphism invariant for graphs in the enumerable range: two
/// graphs have equal canonical forms iff they are isomorphic.
///
/// `code` packs the upper-triangle adjacency bits of the lexicographically
/// minimal relabeling, in the same column-major pair order the edge masks
/// use. Forms order by vertex count, then code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub vertex_count: usize,
    pub code: u64,
}

impl CanonicalForm {
    /// The code as a fixed-width bit string (empty for the one-vertex
    /// graph, which has no edge bits).
    pub fn bit_string(&self) -> String {
        let m = self.vertex_count * (self.vertex_count - 1) / 2;
        if m == 0 {
            String::new()
        } else {
            format!("{:0width$b}", self.code, width = m)
        }
    }

    fn from_bit_string(vertex_count: usize, bits: &str) -> Option<CanonicalForm> {
        let m = vertex_count * (vertex_count - 1) / 2;
        if bits.len() != m {
            return None;
        }
        let code = if bits.is_empty() { 0 } else { u64::from_str_radix(bits, 2).ok()? };
        Some(CanonicalForm { vertex_count, code })
    }

    /// The minimally-labeled representative: decoding the code gives back a
    /// concrete graph whose canonical form is `self`.
    pub fn to_graph(&self) -> SimpleGraph {
        let n = self.vertex_count;
        let mut code = self.code;
        let mut edges = Vec::new();
        for j in (1..n).rev() {
            let chunk = code & ((1 << j) - 1);
            code >>= j;
            for i in 0..j {
                if chunk >> (j - 1 - i) & 1 == 1 {
                    edges.push((i, j));
                }
            }
        }
        SimpleGraph::from_edges(n, edges).expect("decoded pairs are in range")
    }
}

impl std::fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}", self.vertex_count, self.bit_string())
    }
}

struct CanonSearch<'a> {
    rows: &'a [u16; MAX_VERTICES],
    n: usize,
    m: usize,
    best: u64,
}

impl CanonSearch<'_> {
    /// Extends a partial placement (`placed[..depth]` hold the original
    /// vertices assigned to positions `0..depth`). `prefix` holds the `bits`
    /// code bits those positions determine. Candidates are tried in
    /// ascending chunk order, so as soon as one compares above the incumbent
    /// prefix the rest can be skipped.
    fn descend(&mut self, placed: &mut [usize; MAX_VERTICES], used: u16, depth: usize, prefix: u64, bits: usize) {
        if depth == self.n {
            if prefix < self.best {
                self.best = prefix;
            }
            return;
        }
        let mut cands = [(0u64, 0usize); MAX_VERTICES];
        let mut cnt = 0;
        for v in 0..self.n {
            if used & (1 << v) != 0 {
                continue;
            }
            let mut chunk: u64 = 0;
            for &p in &placed[..depth] {
                chunk = (chunk << 1) | u64::from(self.rows[p] >> v & 1);
            }
            cands[cnt] = (chunk, v);
            cnt += 1;
        }
        cands[..cnt].sort_unstable();
        let new_bits = bits + depth;
        for &(chunk, v) in &cands[..cnt] {
            let extended = (prefix << depth) | chunk;
            if extended > self.best >> (self.m - new_bits) {
                break;
            }
            placed[depth] = v;
            self.descend(placed, used | (1 << v), depth + 1, extended, new_bits);
        }
    }
}

fn canonical_code(rows: &[u16; MAX_VERTICES], n: usize) -> u64 {
    if n == 1 {
        return 0;
    }
    let m = n * (n - 1) / 2;
    let mut order: Vec<usize> = (0..n).collect();
    // low-degree vertices first reaches a near-minimal leaf early, which
    // makes the incumbent prune hard from the start
    order.sort_unstable_by_key(|&v| (rows[v].count_ones(), v));
    let mut search = CanonSearch { rows, n, m, best: u64::MAX };
    let mut placed = [0usize; MAX_VERTICES];
    for &v0 in &order {
        placed[0] = v0;
        search.descend(&mut placed, 1 << v0, 1, 0, 0);
    }
    search.best
}

/// Computes the canonical form of `g` (`1 <= |V| <= 8`).
pub fn canonical_form(g: &SimpleGraph) -> Result<CanonicalForm> {
    let n = g.vertex_count();
    check_enumerable(n)?;
    let rows = rows_of_graph(g);
    Ok(CanonicalForm { vertex_count: n, code: canonical_code(&rows, n) })
}

/// Whether two graphs in the enumerable range are isomorphic.
pub fn is_isomorphic(a: &SimpleGraph, b: &SimpleGraph) -> Result<bool> {
    if a.vertex_count() != b.vertex_count() {
        // still validate the inputs are in range
        check_enumerable(a.vertex_count())?;
        check_enumerable(b.vertex_count())?;
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

// ---------------------------------------------------------------------------
// realization scans
// ---------------------------------------------------------------------------

/// Every labeled realization of `s` on `|s|` vertices, in ascending
/// edge-mask order. Empty iff `s` is not graphic.
pub fn all_realizations(s: &DegreeSequence, jobs: usize) -> Result<Vec<SimpleGraph>> {
    let n = s.len();
    check_enumerable(n)?;
    if s.max_term() > n - 1 || !s.degree_sum().is_multiple_of(2) {
        return Ok(Vec::new());
    }
    let table = colex_pairs(n);
    let target = target_degrees(s);
    let edge_count = (s.degree_sum() / 2) as u32;
    let partials = scan_masks(n, jobs, |range| {
        let mut hits = Vec::new();
        for mask in range {
            if mask.count_ones() != edge_count {
                continue;
            }
            let rows = rows_of_mask(mask, &table);
            if sorted_degrees(&rows, n) == target {
                hits.push(mask);
            }
        }
        hits
    });
    Ok(partials
        .into_iter()
        .flatten()
        .map(|mask| graph_of_mask(mask, n, &table))
        .collect())
}

/// One representative per isomorphism class of realizations of `s`, each
/// minimally labeled, in ascending canonical-code order. Empty iff `s` is
/// not graphic.
pub fn distinct_realizations(s: &DegreeSequence, jobs: usize) -> Result<Vec<SimpleGraph>> {
    let n = s.len();
    check_enumerable(n)?;
    if s.max_term() > n - 1 || !s.degree_sum().is_multiple_of(2) {
        return Ok(Vec::new());
    }
    let table = colex_pairs(n);
    let target = target_degrees(s);
    let edge_count = (s.degree_sum() / 2) as u32;
    let partials = scan_masks(n, jobs, |range| {
        let mut codes = BTreeSet::new();
        for mask in range {
            if mask.count_ones() != edge_count {
                continue;
            }
            let rows = rows_of_mask(mask, &table);
            if sorted_degrees(&rows, n) == target {
                codes.insert(canonical_code(&rows, n));
            }
        }
        codes
    });
    let mut codes = BTreeSet::new();
    for partial in partials {
        codes.extend(partial);
    }
    Ok(codes
        .into_iter()
        .map(|code| CanonicalForm { vertex_count: n, code }.to_graph())
        .collect())
}

/// Whether every realization of `s` is connected, decided by exhausting the
/// realizations. Errors when `s` is not graphic — "all realizations" would
/// be vacuous.
pub fn is_forcibly_connected(s: &DegreeSequence, jobs: usize) -> Result<bool> {
    let n = s.len();
    check_enumerable(n)?;
    if !is_graphic(s) {
        return Err(Error::NotGraphic);
    }
    let table = colex_pairs(n);
    let target = target_degrees(s);
    let edge_count = (s.degree_sum() / 2) as u32;
    let found_disconnected = AtomicBool::new(false);
    scan_masks(n, jobs, |range| {
        for mask in range {
            if found_disconnected.load(Ordering::Relaxed) {
                return;
            }
            if mask.count_ones() != edge_count {
                continue;
            }
            let rows = rows_of_mask(mask, &table);
            if sorted_degrees(&rows, n) == target && !rows_connected(&rows, n) {
                found_disconnected.store(true, Ordering::Relaxed);
                return;
            }
        }
    });
    Ok(!found_disconnected.into_inner())
}

fn target_degrees(s: &DegreeSequence) -> [u8; MAX_VERTICES] {
    let mut target = [0u8; MAX_VERTICES];
    for (i, &t) in s.terms().iter().enumerate() {
        target[i] = t as u8;
    }
    target
}

/// What kinds of realizations each positive degree sequence of length `n`
/// has.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RealizationFlags {
    /// At least one realization is connected.
    pub connected: bool,
    /// At least one realization is disconnected.
    pub disconnected: bool,
}

/// Scans every graph on `n` vertices with positive minimum degree and
/// records, per degree sequence, whether connected and disconnected
/// realizations exist. A sequence appears iff it has at least one
/// realization, so this is the oracle for graphicness, connected
/// realizability, and forcible connectivity in one pass.
pub fn realization_survey(
    n: usize,
    jobs: usize,
) -> Result<BTreeMap<DegreeSequence, RealizationFlags>> {
    check_enumerable(n)?;
    let table = colex_pairs(n);
    let partials = scan_masks(n, jobs, |range| {
        let mut local: BTreeMap<[u8; MAX_VERTICES], RealizationFlags> = BTreeMap::new();
        for mask in range {
            let rows = rows_of_mask(mask, &table);
            if (0..n).any(|v| rows[v] == 0) {
                continue;
            }
            let key = sorted_degrees(&rows, n);
            let flags = local.entry(key).or_default();
            if rows_connected(&rows, n) {
                flags.connected = true;
            } else {
                flags.disconnected = true;
            }
        }
        local
    });
    let mut merged: BTreeMap<[u8; MAX_VERTICES], RealizationFlags> = BTreeMap::new();
    for partial in partials {
        for (key, flags) in partial {
            let entry = merged.entry(key).or_default();
            entry.connected |= flags.connected;
            entry.disconnected |= flags.disconnected;
        }
    }
    merged
        .into_iter()
        .map(|(key, flags)| {
            let terms: Vec<usize> = key[..n].iter().map(|&d| d as usize).collect();
            Ok((DegreeSequence::new(terms)?, flags))
        })
        .collect()
}

// ---------------------------------------------------------------------------
// partition-matrix census
// ---------------------------------------------------------------------------

/// Options for [`cell_census`].
#[derive(Debug, Clone, Copy)]
pub struct CensusOptions {
    /// Worker count for the mask scans. The census is identical for every
    /// value.
    pub jobs: usize,
    /// Also collect the canonical form of every class per cell.
    pub with_representatives: bool,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions { jobs: 1, with_representatives: false }
    }
}

/// Isomorphism-class counts of connected graphs, binned into partition-
/// matrix cells: column `j` holds the classes with `j + 1` vertices, row `i`
/// those with `i + j` edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellCensus {
    max_vertices: usize,
    counts: BTreeMap<PartitionCell, usize>,
    representatives: Option<BTreeMap<PartitionCell, Vec<CanonicalForm>>>,
}

impl CellCensus {
    pub fn max_vertices(&self) -> usize {
        self.max_vertices
    }

    /// Non-empty cells and their class counts, ordered by column then row.
    pub fn counts(&self) -> &BTreeMap<PartitionCell, usize> {
        &self.counts
    }

    /// Class count in one cell (0 when the cell is empty).
    pub fn count(&self, cell: PartitionCell) -> usize {
        self.counts.get(&cell).copied().unwrap_or(0)
    }

    /// Canonical forms per cell, when the census was built with
    /// `with_representatives`.
    pub fn representatives(&self) -> Option<&BTreeMap<PartitionCell, Vec<CanonicalForm>>> {
        self.representatives.as_ref()
    }

    /// The rows with at least one class in column `j`, ascending.
    pub fn nonempty_rows_in_column(&self, col: usize) -> Vec<usize> {
        self.counts.keys().filter(|c| c.col == col).map(|c| c.row).collect()
    }

    /// Total class count in column `j` — the number of connected graphs on
    /// `j + 1` vertices up to isomorphism.
    pub fn column_total(&self, col: usize) -> usize {
        self.counts.iter().filter(|(c, _)| c.col == col).map(|(_, n)| n).sum()
    }

    /// Total class count across all cells.
    pub fn class_total(&self) -> usize {
        self.counts.values().sum()
    }
}

/// Counts the isomorphism classes of connected graphs on `1..=max_vertices`
/// vertices, binned by partition-matrix cell, by exhausting every edge mask
/// per vertex count, keeping the connected ones, and deduplicating by
/// canonical form.
pub fn cell_census(max_vertices: usize, options: CensusOptions) -> Result<CellCensus> {
    check_enumerable(max_vertices)?;
    let mut counts = BTreeMap::new();
    let mut representatives = options.with_representatives.then(BTreeMap::new);
    for n in 1..=max_vertices {
        let table = colex_pairs(n);
        let tree_edges = (n - 1) as u32;
        let rows_in_column = (n - 1).saturating_sub(1) * (n - 1) / 2 + 1;
        let partials = scan_masks(n, options.jobs, |range| {
            let mut cells: Vec<BTreeSet<u64>> = vec![BTreeSet::new(); rows_in_column];
            for mask in range {
                let edges = mask.count_ones();
                if edges < tree_edges {
                    continue;
                }
                let rows = rows_of_mask(mask, &table);
                if !rows_connected(&rows, n) {
                    continue;
                }
                cells[(edges - tree_edges) as usize].insert(canonical_code(&rows, n));
            }
            cells
        });
        let mut cells: Vec<BTreeSet<u64>> = vec![BTreeSet::new(); rows_in_column];
        for partial in partials {
            for (into, from) in cells.iter_mut().zip(partial) {
                into.extend(from);
            }
        }
        for (row, codes) in cells.into_iter().enumerate() {
            if codes.is_empty() {
                continue;
            }
            let cell = PartitionCell::new(row, n - 1);
            counts.insert(cell, codes.len());
            if let Some(reps) = representatives.as_mut() {
                reps.insert(
                    cell,
                    codes
                        .into_iter()
                        .map(|code| CanonicalForm { vertex_count: n, code })
                        .collect(),
                );
            }
        }
    }
    Ok(CellCensus { max_vertices, counts, representatives })
}

// ---------------------------------------------------------------------------
// census rendering and persistence
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct CellEntryDto {
    i: usize,
    j: usize,
    count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    representatives: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct CensusDto {
    cells: Vec<CellEntryDto>,
    max_vertices: usize,
}

#[derive(Serialize, Deserialize)]
struct CensusCacheDto {
    schema_version: u32,
    #[serde(flatten)]
    census: CensusDto,
}

fn census_dto(census: &CellCensus) -> CensusDto {
    let cells = census
        .counts
        .iter()
        .map(|(cell, &count)| CellEntryDto {
            i: cell.row,
            j: cell.col,
            count,
            representatives: census
                .representatives
                .as_ref()
                .map(|reps| reps[cell].iter().map(CanonicalForm::bit_string).collect()),
        })
        .collect();
    CensusDto { cells, max_vertices: census.max_vertices }
}

fn census_from_dto(dto: CensusDto, expect_representatives: bool) -> Option<CellCensus> {
    let mut counts = BTreeMap::new();
    let mut representatives = expect_representatives.then(BTreeMap::new);
    for entry in dto.cells {
        let cell = PartitionCell::new(entry.i, entry.j);
        counts.insert(cell, entry.count);
        if let Some(reps) = representatives.as_mut() {
            let bits = entry.representatives?;
            if bits.len() != entry.count {
                return None;
            }
            let forms = bits
                .iter()
                .map(|b| CanonicalForm::from_bit_string(entry.j + 1, b))
                .collect::<Option<Vec<_>>>()?;
            reps.insert(cell, forms);
        }
    }
    Some(CellCensus { max_vertices: dto.max_vertices, counts, representatives })
}

/// The census as JSON: `{"cells": [{"i", "j", "count"}...], "max_vertices"}`
/// with cells ordered by column then row. Representatives, when present,
/// appear per cell as canonical bit strings.
pub fn census_to_json(census: &CellCensus) -> String {
    let mut out = serde_json::to_string_pretty(&census_dto(census)).expect("census serializes");
    out.push('\n');
    out
}

/// The census as CSV (`i,j,count` header plus one row per non-empty cell,
/// ordered by column then row).
pub fn census_to_csv(census: &CellCensus) -> String {
    let mut out = String::from("i,j,count\n");
    for (cell, count) in &census.counts {
        out.push_str(&format!("{},{},{}\n", cell.row, cell.col, count));
    }
    out
}

/// The census as a fixed-width text grid (rows = i, columns = j, `.` for
/// empty cells), plus per-cell representative lists when collected.
pub fn census_to_text(census: &CellCensus) -> String {
    let max_col = census.max_vertices - 1;
    let max_row = census.counts.keys().map(|c| c.row).max().unwrap_or(0);
    let mut out = String::from("      ");
    for col in 0..=max_col {
        out.push_str(&format!("{:>7}", format!("j={col}")));
    }
    out.push('\n');
    for row in 0..=max_row {
        out.push_str(&format!("i={row:<4}"));
        for col in 0..=max_col {
            match census.counts.get(&PartitionCell::new(row, col)) {
                Some(count) => out.push_str(&format!("{count:>7}")),
                None => out.push_str(&format!("{:>7}", ".")),
            }
        }
        out.push('\n');
    }
    out.push_str("total ");
    for col in 0..=max_col {
        out.push_str(&format!("{:>7}", census.column_total(col)));
    }
    out.push('\n');
    if let Some(reps) = &census.representatives {
        out.push('\n');
        for (cell, forms) in reps {
            let bits: Vec<String> = forms.iter().map(CanonicalForm::bit_string).collect();
            out.push_str(&format!("representatives {cell}: {}\n", bits.join(" ")));
        }
    }
    out
}

/// The file name a census is cached under; the key is (schema version,
/// max vertices, whether representatives are included).
pub fn census_cache_file_name(max_vertices: usize, with_representatives: bool) -> String {
    let mode = if with_representatives { "reps" } else { "counts" };
    format!("census-v{CENSUS_CACHE_VERSION}-n{max_vertices}-{mode}.json")
}

/// Writes the census to its cache file under `dir`, creating the directory
/// if needed. Returns the file path.
pub fn write_census_cache(dir: &Path, census: &CellCensus) -> Result<PathBuf> {
    std::fs::create_dir_all(dir)?;
    let path = dir.join(census_cache_file_name(
        census.max_vertices,
        census.representatives.is_some(),
    ));
    let dto = CensusCacheDto { schema_version: CENSUS_CACHE_VERSION, census: census_dto(census) };
    let mut contents = serde_json::to_string_pretty(&dto).expect("census serializes");
    contents.push('\n');
    std::fs::write(&path, contents)?;
    Ok(path)
}

/// Loads a cached census if a file for this key exists and carries the
/// current schema version. Any mismatch or parse failure is a miss (`None`),
/// never an error — the caller just recomputes.
pub fn load_census_cache(
    dir: &Path,
    max_vertices: usize,
    with_representatives: bool,
) -> Option<CellCensus> {
    let path = dir.join(census_cache_file_name(max_vertices, with_representatives));
    let contents = std::fs::read_to_string(path).ok()?;
    let dto: CensusCacheDto = serde_json::from_str(&contents).ok()?;
    if dto.schema_version != CENSUS_CACHE_VERSION || dto.census.max_vertices != max_vertices {
        return None;
    }
    census_from_dto(dto.census, with_representatives)
}
