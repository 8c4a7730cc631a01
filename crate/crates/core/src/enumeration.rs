//! Exhaustive enumeration of finite topologies.
//!
//! Topologies on `n` labeled points are in bijection with preorders, so the
//! enumerator walks preorders instead of families of open sets. Preorders are
//! grown one point at a time: the new point `p` picks an up-closed set `U` of
//! points above it and a down-closed set `D` of points below it, subject to
//! `d ≤ u` for every `d ∈ D`, `u ∈ U`. That single condition is exactly what
//! transitivity through `p` demands, so every branch of the search yields a
//! valid preorder and nothing is ever discarded.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::topology::{FiniteTopology, Preorder};

/// Largest point count for labeled enumeration and class enumeration.
pub const MAX_ENUMERATION_POINTS: usize = 7;
/// Largest point count for Hausdorff-number count tables.
pub const MAX_COUNT_POINTS: usize = 6;
/// Largest point count for the Stirling identity check.
pub const MAX_STIRLING_POINTS: usize = 5;

fn check_range(n: usize, max: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidPointCount(0));
    }
    if n > max {
        return Err(Error::TooLarge { n, max });
    }
    Ok(())
}

/// Ways to attach point `rows.len()` to the preorder given by `rows`, as
/// `(strict up-set, strict down-set)` pairs.
fn extensions(rows: &[PointSet]) -> Vec<(PointSet, PointSet)> {
    let p = rows.len();
    let old = PointSet::full(p);
    let below: Vec<PointSet> = (0..p)
        .map(|q| (0..p).filter(|&r| rows[r].contains(q)).collect())
        .collect();
    let ups: Vec<PointSet> = old
        .subsets()
        .filter(|u| u.iter().all(|q| rows[q].is_subset(*u)))
        .collect();
    let mut out = Vec::new();
    for down in old.subsets() {
        if !down.iter().all(|q| below[q].is_subset(down)) {
            continue;
        }
        let allowed = down
            .iter()
            .fold(old, |acc, d| acc.intersection(rows[d]));
        out.extend(
            ups.iter()
                .filter(|u| u.is_subset(allowed))
                .map(|&u| (u, down)),
        );
    }
    out
}

fn extend(rows: &[PointSet], up: PointSet, down: PointSet) -> Vec<PointSet> {
    let p = rows.len();
    let mut next: Vec<PointSet> = rows
        .iter()
        .enumerate()
        .map(|(q, r)| if down.contains(q) { r.with(p) } else { *r })
        .collect();
    next.push(up.with(p));
    next
}

struct Frame {
    base: Vec<PointSet>,
    candidates: Vec<(PointSet, PointSet)>,
    next: usize,
}

/// Depth-first stream of all preorders on `n` points that extend a fixed
/// preorder on the first `k` points. Order is deterministic.
pub struct Preorders {
    n: usize,
    stack: Vec<Frame>,
    pending: Option<Vec<PointSet>>,
}

impl Preorders {
    /// All preorders on `n` points.
    pub fn new(n: usize) -> Result<Self> {
        check_range(n, MAX_ENUMERATION_POINTS)?;
        Ok(Self::extending(n, vec![PointSet::singleton(0)]))
    }

    /// All preorders on `n` points whose restriction to `{0..prefix.len()-1}`
    /// equals `prefix`.
    fn extending(n: usize, prefix: Vec<PointSet>) -> Self {
        if prefix.len() >= n {
            return Preorders {
                n,
                stack: Vec::new(),
                pending: Some(prefix),
            };
        }
        let candidates = extensions(&prefix);
        Preorders {
            n,
            stack: vec![Frame {
                base: prefix,
                candidates,
                next: 0,
            }],
            pending: None,
        }
    }
}

impl Iterator for Preorders {
    type Item = Preorder;

    fn next(&mut self) -> Option<Preorder> {
        if let Some(rows) = self.pending.take() {
            return Some(Preorder::from_rows_unchecked(rows));
        }
        loop {
            let frame = self.stack.last_mut()?;
            if frame.next == frame.candidates.len() {
                self.stack.pop();
                continue;
            }
            let (up, down) = frame.candidates[frame.next];
            frame.next += 1;
            let rows = extend(&frame.base, up, down);
            if rows.len() == self.n {
                return Some(Preorder::from_rows_unchecked(rows));
            }
            let candidates = extensions(&rows);
            self.stack.push(Frame {
                base: rows,
                candidates,
                next: 0,
            });
        }
    }
}

/// Every topology on `n` labeled points, each exactly once.
pub fn enumerate_labeled(n: usize) -> Result<impl Iterator<Item = FiniteTopology>> {
    Ok(Preorders::new(n)?.map(|p| {
        FiniteTopology::from_preorder(&p).expect("small preorders yield small topologies")
    }))
}

/// Depth at which the search tree is split into independent subtrees.
fn split_depth(n: usize) -> usize {
    n.min(3)
}

/// Preorders on the first few points; each roots an independent subtree.
fn subtree_roots(n: usize) -> Vec<Vec<PointSet>> {
    Preorders::extending(split_depth(n), vec![PointSet::singleton(0)])
        .map(|p| p.rows().to_vec())
        .collect()
}

/// Homeomorphism-class identity of a finite topology: the smallest row-major
/// serialization of its specialization matrix over all relabelings.
///
/// The first byte is `n`; each following byte is one matrix row, with
/// column 0 in the most significant of the low `n` bits.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// The preorder this form serializes.
    pub fn preorder(&self) -> Preorder {
        let n = self.0[0] as usize;
        let rows = self.0[1..]
            .iter()
            .map(|&byte| {
                (0..n)
                    .filter(|j| byte & (1 << (n - 1 - j)) != 0)
                    .collect()
            })
            .collect();
        Preorder::from_rows_unchecked(rows)
    }
}

impl std::fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

/// Packs rows of the relabeled matrix `M'[i][j] = leq(σ(i), σ(j))` so that
/// integer order equals lexicographic byte order.
fn encode(rows: &[PointSet], sigma: &[usize]) -> u64 {
    let n = sigma.len();
    let mut code = 0u64;
    for &si in sigma {
        let mut byte = 0u64;
        for &sj in sigma {
            byte = (byte << 1) | rows[si].contains(sj) as u64;
        }
        code = (code << 8) | byte;
    }
    debug_assert!(n <= 8);
    code
}

fn canonical_rows(rows: &[PointSet]) -> CanonicalForm {
    let n = rows.len();
    // group points by (|N(a)|, in-degree); cells are visited in invariant order
    let invariant = |a: usize| {
        let in_degree = rows.iter().filter(|r| r.contains(a)).count();
        (rows[a].len(), in_degree)
    };
    let mut points: Vec<usize> = (0..n).collect();
    points.sort_by_key(|&a| (invariant(a), a));
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for a in points {
        match cells.last_mut() {
            Some(cell) if invariant(cell[0]) == invariant(a) => cell.push(a),
            _ => cells.push(vec![a]),
        }
    }

    let mut sigma = Vec::with_capacity(n);
    let mut best = u64::MAX;
    search_cells(rows, &cells, 0, &mut vec![false; n], &mut sigma, &mut best);

    let mut bytes = Vec::with_capacity(n + 1);
    bytes.push(n as u8);
    for i in 0..n {
        bytes.push(((best >> (8 * (n - 1 - i))) & 0xff) as u8);
    }
    CanonicalForm(bytes)
}

fn search_cells(
    rows: &[PointSet],
    cells: &[Vec<usize>],
    cell: usize,
    used: &mut Vec<bool>,
    sigma: &mut Vec<usize>,
    best: &mut u64,
) {
    if sigma.len() == rows.len() {
        *best = (*best).min(encode(rows, sigma));
        return;
    }
    let current = &cells[cell];
    let placed_in_cell = current.iter().filter(|&&a| used[a]).count();
    let next_cell = if placed_in_cell + 1 == current.len() {
        cell + 1
    } else {
        cell
    };
    for &a in current {
        if used[a] {
            continue;
        }
        used[a] = true;
        sigma.push(a);
        search_cells(rows, cells, next_cell, used, sigma, best);
        sigma.pop();
        used[a] = false;
    }
}

/// Canonical form of `t`; equal for two topologies iff they are homeomorphic.
pub fn canonical_form(t: &FiniteTopology) -> Result<CanonicalForm> {
    check_range(t.n(), MAX_ENUMERATION_POINTS)?;
    Ok(canonical_rows(t.minimal_neighborhoods()))
}

/// One representative per homeomorphism class, in order of first appearance
/// in the labeled stream.
pub fn enumerate_classes(n: usize) -> Result<Vec<(CanonicalForm, FiniteTopology)>> {
    let mut seen: HashMap<CanonicalForm, ()> = HashMap::new();
    let mut out = Vec::new();
    for p in Preorders::new(n)? {
        let form = canonical_rows(p.rows());
        if seen.insert(form.clone(), ()).is_none() {
            let t = FiniteTopology::from_preorder(&p)?;
            out.push((form, t));
        }
    }
    Ok(out)
}

/// Which topologies a [`CountsTable`] covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CountFilter {
    All,
    T0,
}

impl CountFilter {
    pub fn as_str(self) -> &'static str {
        match self {
            CountFilter::All => "all",
            CountFilter::T0 => "t0",
        }
    }

    fn admits(self, rows: &[PointSet]) -> bool {
        match self {
            CountFilter::All => true,
            CountFilter::T0 => is_t0(rows),
        }
    }
}

fn is_t0(rows: &[PointSet]) -> bool {
    (0..rows.len()).all(|a| (a + 1..rows.len()).all(|b| rows[a] != rows[b]))
}

/// Hausdorff number from the up-set rows: one more than the largest number
/// of minimal neighborhoods sharing a point.
fn hausdorff_from_rows(rows: &[PointSet]) -> usize {
    let n = rows.len();
    1 + (0..n)
        .map(|x| rows.iter().filter(|r| r.contains(x)).count())
        .max()
        .unwrap_or(0)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRow {
    pub labeled_count: u64,
    pub class_count: u64,
}

/// Counts of topologies on `n` points, labeled and up to homeomorphism,
/// grouped by Hausdorff number.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountsTable {
    pub n: usize,
    pub filter: CountFilter,
    pub rows: BTreeMap<usize, CountRow>,
    pub labeled_total: u64,
    pub class_total: u64,
    pub t0_labeled_count: u64,
}

impl CountsTable {
    /// CSV with header `n,hausdorff_number,labeled_count,class_count`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["n", "hausdorff_number", "labeled_count", "class_count"])
            .expect("in-memory write");
        for (h, row) in &self.rows {
            w.write_record([
                self.n.to_string(),
                h.to_string(),
                row.labeled_count.to_string(),
                row.class_count.to_string(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii output")
    }
}

#[derive(Default)]
struct Tally {
    labeled: BTreeMap<usize, u64>,
    t0: u64,
    classes: HashMap<CanonicalForm, usize>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        for (h, c) in other.labeled {
            *self.labeled.entry(h).or_default() += c;
        }
        self.t0 += other.t0;
        self.classes.extend(other.classes);
        self
    }
}

fn tally_subtree(n: usize, root: Vec<PointSet>, filter: CountFilter) -> Tally {
    let mut tally = Tally::default();
    for p in Preorders::extending(n, root) {
        let rows = p.rows();
        if !filter.admits(rows) {
            continue;
        }
        let h = hausdorff_from_rows(rows);
        *tally.labeled.entry(h).or_default() += 1;
        if is_t0(rows) {
            tally.t0 += 1;
        }
        tally.classes.entry(canonical_rows(rows)).or_insert(h);
    }
    tally
}

/// Classifies every labeled topology (and every homeomorphism class) on `n`
/// points by Hausdorff number, using `jobs` worker threads. The result does
/// not depend on `jobs`.
pub fn count_by_hausdorff(n: usize, filter: CountFilter, jobs: usize) -> Result<CountsTable> {
    check_range(n, MAX_COUNT_POINTS)?;
    if jobs == 0 {
        return Err(Error::BadParameter("jobs must be at least 1".into()));
    }
    let roots = subtree_roots(n);
    let tally = if jobs == 1 {
        roots
            .into_iter()
            .map(|r| tally_subtree(n, r, filter))
            .fold(Tally::default(), Tally::merge)
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::BadParameter(format!("cannot start worker pool: {e}")))?;
        pool.install(|| {
            roots
                .into_par_iter()
                .map(|r| tally_subtree(n, r, filter))
                .reduce(Tally::default, Tally::merge)
        })
    };

    let mut rows: BTreeMap<usize, CountRow> = tally
        .labeled
        .iter()
        .map(|(&h, &c)| {
            (
                h,
                CountRow {
                    labeled_count: c,
                    class_count: 0,
                },
            )
        })
        .collect();
    for &h in tally.classes.values() {
        rows.entry(h).or_default().class_count += 1;
    }
    Ok(CountsTable {
        n,
        filter,
        labeled_total: tally.labeled.values().sum(),
        class_total: tally.classes.len() as u64,
        t0_labeled_count: tally.t0,
        rows,
    })
}

/// Number of labeled topologies on `n ≤ 7` points passing `filter`.
pub fn count_labeled(n: usize, filter: CountFilter, jobs: usize) -> Result<u64> {
    check_range(n, MAX_ENUMERATION_POINTS)?;
    if jobs == 0 {
        return Err(Error::BadParameter("jobs must be at least 1".into()));
    }
    let count = |root: Vec<PointSet>| {
        Preorders::extending(n, root)
            .filter(|p| filter.admits(p.rows()))
            .count() as u64
    };
    let roots = subtree_roots(n);
    if jobs == 1 {
        return Ok(roots.into_iter().map(count).sum());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::BadParameter(format!("cannot start worker pool: {e}")))?;
    Ok(pool.install(|| roots.into_par_iter().map(count).sum()))
}

/// Stirling numbers of the second kind `S(n, k)` for `0 ≤ k ≤ n`, via
/// `S(n, k) = k·S(n−1, k) + S(n−1, k−1)`.
pub fn stirling2_row(n: usize) -> Vec<u64> {
    let mut row = vec![1u64];
    for m in 1..=n {
        let mut next = vec![0u64; m + 1];
        for k in 1..=m {
            let carry = if k < m { k as u64 * row[k] } else { 0 };
            next[k] = carry + row[k - 1];
        }
        row = next;
    }
    row
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StirlingTerm {
    pub k: usize,
    pub stirling: u64,
    pub t0_count: u64,
}

/// Both sides of `T(n) = Σ_k S(n,k)·T0(k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StirlingReport {
    pub n: usize,
    pub topology_count: u64,
    pub weighted_t0_sum: u64,
    pub terms: Vec<StirlingTerm>,
    pub holds: bool,
}

/// Checks the relation between labeled topology counts and labeled T0
/// counts using enumerated values on both sides.
pub fn stirling_consistency(n: usize) -> Result<StirlingReport> {
    check_range(n, MAX_STIRLING_POINTS)?;
    let topology_count = count_labeled(n, CountFilter::All, 1)?;
    let s = stirling2_row(n);
    let terms = (1..=n)
        .map(|k| {
            Ok(StirlingTerm {
                k,
                stirling: s[k],
                t0_count: count_labeled(k, CountFilter::T0, 1)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let weighted_t0_sum = terms.iter().map(|t| t.stirling * t.t0_count).sum();
    Ok(StirlingReport {
        n,
        topology_count,
        weighted_t0_sum,
        holds: topology_count == weighted_t0_sum,
        terms,
    })
}
