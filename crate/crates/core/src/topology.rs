//! Finite topologies, their specialization preorders, and subspaces.
//!
//! Every topology on a finite set is closed under arbitrary intersections, so
//! each point `a` has a smallest open set containing it, its *minimal
//! neighborhood* `N(a)`. The relation `a ≤ b ⇔ b ∈ N(a)` is a preorder, and
//! the open sets are exactly the up-closed sets of that preorder. Both
//! directions of this correspondence are implemented here and are used as
//! the backbone of the separation checks and the enumerator.

use std::collections::HashSet;

use crate::error::{Error, Result, Violation};
use crate::pointset::{PointSet, MAX_POINTS};

/// Upper bound on the number of open sets materialized by any constructor.
pub const MAX_OPENS: usize = 1 << 22;

/// A validated topology on the points `{0..n-1}`.
///
/// Open sets are stored without duplicates, ascending by cardinality and then
/// by bit encoding, so two topologies are equal iff their `opens` lists are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteTopology {
    n: usize,
    opens: Vec<PointSet>,
    minimal: Vec<PointSet>,
}

/// A reflexive, transitive relation on `{0..n-1}`.
///
/// Row `a` holds the up-set `{b : a ≤ b}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Preorder {
    n: usize,
    rows: Vec<PointSet>,
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_POINTS {
        Err(Error::InvalidPointCount(n))
    } else {
        Ok(())
    }
}

fn check_point(a: usize, n: usize) -> Result<()> {
    if a >= n {
        Err(Error::PointOutOfRange { point: a, n })
    } else {
        Ok(())
    }
}

fn check_set(s: PointSet, n: usize) -> Result<()> {
    match s.difference(PointSet::full(n)).first() {
        Some(point) => Err(Error::PointOutOfRange { point, n }),
        None => Ok(()),
    }
}

fn canonical_sorted(set: HashSet<PointSet>) -> Vec<PointSet> {
    let mut opens: Vec<_> = set.into_iter().collect();
    opens.sort_unstable_by(PointSet::canonical_cmp);
    opens
}

fn minimal_neighborhoods(n: usize, opens: &[PointSet]) -> Vec<PointSet> {
    let full = PointSet::full(n);
    (0..n)
        .map(|a| {
            opens
                .iter()
                .filter(|u| u.contains(a))
                .fold(full, |acc, u| acc.intersection(*u))
        })
        .collect()
}

impl FiniteTopology {
    /// Checks that `family` is a topology on `n` points and returns it in
    /// canonical form. All violations found are reported together.
    pub fn validate(n: usize, family: &[PointSet]) -> Result<Self> {
        check_n(n)?;
        for &s in family {
            check_set(s, n)?;
        }
        let set: HashSet<PointSet> = family.iter().copied().collect();
        let opens = canonical_sorted(set.clone());

        let mut violations = Vec::new();
        if !set.contains(&PointSet::EMPTY) {
            violations.push(Violation::MissingEmptySet);
        }
        if !set.contains(&PointSet::full(n)) {
            violations.push(Violation::MissingFullSet);
        }
        let mut union_gap = None;
        let mut inter_gap = None;
        'outer: for (i, &u) in opens.iter().enumerate() {
            for &v in &opens[i + 1..] {
                if union_gap.is_none() && !set.contains(&u.union(v)) {
                    union_gap = Some(Violation::NotClosedUnderUnion(u, v));
                }
                if inter_gap.is_none() && !set.contains(&u.intersection(v)) {
                    inter_gap = Some(Violation::NotClosedUnderIntersection(u, v));
                }
                if union_gap.is_some() && inter_gap.is_some() {
                    break 'outer;
                }
            }
        }
        violations.extend(union_gap);
        violations.extend(inter_gap);
        if !violations.is_empty() {
            return Err(Error::InvalidTopology(violations));
        }

        let minimal = minimal_neighborhoods(n, &opens);
        Ok(FiniteTopology { n, opens, minimal })
    }

    /// The smallest topology containing every set of `subbasis`.
    pub fn from_subbasis(n: usize, subbasis: &[PointSet]) -> Result<Self> {
        check_n(n)?;
        for &s in subbasis {
            check_set(s, n)?;
        }
        // finite intersections, with X as the empty intersection
        let mut basis: HashSet<PointSet> = HashSet::new();
        basis.insert(PointSet::full(n));
        let mut frontier: Vec<PointSet> = vec![PointSet::full(n)];
        while let Some(b) = frontier.pop() {
            for &s in subbasis {
                let c = b.intersection(s);
                if basis.insert(c) {
                    frontier.push(c);
                }
            }
        }
        // arbitrary unions, with ∅ as the empty union
        let basis: Vec<PointSet> = basis.into_iter().collect();
        let mut opens: HashSet<PointSet> = HashSet::new();
        opens.insert(PointSet::EMPTY);
        let mut frontier = vec![PointSet::EMPTY];
        while let Some(u) = frontier.pop() {
            for &b in &basis {
                let c = u.union(b);
                if opens.insert(c) {
                    if opens.len() > MAX_OPENS {
                        return Err(Error::TooManyOpens(MAX_OPENS));
                    }
                    frontier.push(c);
                }
            }
        }
        Self::validate(n, &canonical_sorted(opens))
    }

    /// Builds the topology whose open sets are the up-closed sets of `order`.
    pub fn from_preorder(order: &Preorder) -> Result<Self> {
        let n = order.n;
        let rows = &order.rows;
        let mut opens = Vec::new();
        if n <= 20 {
            for bits in 0..(1u64 << n) {
                let u = PointSet::from_bits(bits);
                if u.iter().all(|a| rows[a].is_subset(u)) {
                    opens.push(u);
                }
            }
        } else {
            let mut seen: HashSet<PointSet> = HashSet::new();
            seen.insert(PointSet::EMPTY);
            let mut frontier = vec![PointSet::EMPTY];
            while let Some(u) = frontier.pop() {
                for &r in rows {
                    let c = u.union(r);
                    if seen.insert(c) {
                        if seen.len() > MAX_OPENS {
                            return Err(Error::TooManyOpens(MAX_OPENS));
                        }
                        frontier.push(c);
                    }
                }
            }
            opens = seen.into_iter().collect();
        }
        opens.sort_unstable_by(PointSet::canonical_cmp);
        Ok(FiniteTopology {
            n,
            opens,
            minimal: rows.clone(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn opens(&self) -> &[PointSet] {
        &self.opens
    }

    pub fn full(&self) -> PointSet {
        PointSet::full(self.n)
    }

    pub fn is_open(&self, s: PointSet) -> bool {
        self.opens
            .binary_search_by(|u| u.canonical_cmp(&s))
            .is_ok()
    }

    /// The intersection of all open sets containing `a`.
    pub fn minimal_neighborhood(&self, a: usize) -> Result<PointSet> {
        check_point(a, self.n)?;
        Ok(self.minimal[a])
    }

    /// Minimal neighborhoods of every point, indexed by point.
    pub fn minimal_neighborhoods(&self) -> &[PointSet] {
        &self.minimal
    }

    /// Smallest open set containing `s`.
    pub fn open_hull(&self, s: PointSet) -> PointSet {
        s.iter()
            .fold(PointSet::EMPTY, |acc, a| acc.union(self.minimal[a]))
    }

    /// Closed sets, as complements of the open sets.
    pub fn closed_sets(&self) -> impl Iterator<Item = PointSet> + '_ {
        self.opens.iter().map(move |u| u.complement(self.n))
    }

    pub fn specialization_preorder(&self) -> Preorder {
        Preorder {
            n: self.n,
            rows: self.minimal.clone(),
        }
    }

    /// The trace topology on `s`, relabeled onto `{0..|s|-1}` preserving
    /// order. The second component maps new labels back to original points.
    pub fn subspace(&self, s: PointSet) -> Result<(FiniteTopology, Vec<usize>)> {
        if s.is_empty() {
            return Err(Error::EmptySubset);
        }
        check_set(s, self.n)?;
        let labels = s.to_vec();
        let traces: HashSet<PointSet> = self
            .opens
            .iter()
            .map(|u| compress(u.intersection(s), &labels))
            .collect();
        let m = labels.len();
        let opens = canonical_sorted(traces);
        let minimal = minimal_neighborhoods(m, &opens);
        Ok((
            FiniteTopology {
                n: m,
                opens,
                minimal,
            },
            labels,
        ))
    }

    /// Relabels point `a` as `perm[a]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<FiniteTopology> {
        check_permutation(perm, self.n)?;
        let opens: HashSet<PointSet> = self
            .opens
            .iter()
            .map(|u| u.iter().map(|a| perm[a]).collect())
            .collect();
        let mut minimal = vec![PointSet::EMPTY; self.n];
        for (a, &m) in self.minimal.iter().enumerate() {
            minimal[perm[a]] = m.iter().map(|b| perm[b]).collect();
        }
        Ok(FiniteTopology {
            n: self.n,
            opens: canonical_sorted(opens),
            minimal,
        })
    }

    pub fn is_discrete(&self) -> bool {
        self.minimal.iter().enumerate().all(|(a, m)| *m == PointSet::singleton(a))
    }

    pub fn discrete(n: usize) -> Result<Self> {
        check_n(n)?;
        Self::from_preorder(&Preorder::identity(n)?)
    }

    pub fn indiscrete(n: usize) -> Result<Self> {
        Self::validate(n, &[PointSet::EMPTY, PointSet::full(n)])
    }
}

fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::BadParameter(format!(
            "permutation has length {}, expected {n}",
            perm.len()
        )));
    }
    let image: PointSet = perm
        .iter()
        .map(|&p| {
            check_point(p, n)?;
            Ok(p)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .collect();
    if image.len() != n {
        return Err(Error::BadParameter("not a permutation".into()));
    }
    Ok(())
}

/// Maps the members of `set` (a subset of `labels`) to their positions in
/// `labels`.
fn compress(set: PointSet, labels: &[usize]) -> PointSet {
    labels
        .iter()
        .enumerate()
        .filter(|(_, &p)| set.contains(p))
        .map(|(i, _)| i)
        .collect()
}

impl Preorder {
    /// Builds a preorder from up-set rows, checking reflexivity and
    /// transitivity.
    pub fn from_rows(rows: Vec<PointSet>) -> Result<Self> {
        let n = rows.len();
        check_n(n)?;
        for &r in &rows {
            check_set(r, n)?;
        }
        for (a, r) in rows.iter().enumerate() {
            if !r.contains(a) {
                return Err(Error::NotReflexive(a));
            }
        }
        for (a, r) in rows.iter().enumerate() {
            for b in r.iter() {
                if let Some(c) = rows[b].difference(*r).first() {
                    return Err(Error::NotTransitive(a, b, c));
                }
            }
        }
        Ok(Preorder { n, rows })
    }

    /// Builds a preorder from a boolean matrix, `matrix[a][b] ⇔ a ≤ b`.
    pub fn from_matrix(matrix: &[Vec<bool>]) -> Result<Self> {
        let n = matrix.len();
        if matrix.iter().any(|row| row.len() != n) {
            return Err(Error::MalformedMatrix(n));
        }
        let rows = matrix
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(_, &x)| x)
                    .map(|(b, _)| b)
                    .collect()
            })
            .collect();
        Self::from_rows(rows)
    }

    /// Trusted constructor for callers that maintain the invariants.
    pub(crate) fn from_rows_unchecked(rows: Vec<PointSet>) -> Self {
        Preorder {
            n: rows.len(),
            rows,
        }
    }

    pub fn identity(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(Preorder {
            n,
            rows: (0..n).map(PointSet::singleton).collect(),
        })
    }

    pub fn total(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(Preorder {
            n,
            rows: vec![PointSet::full(n); n],
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[PointSet] {
        &self.rows
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.rows[a].contains(b)
    }

    pub fn to_matrix(&self) -> Vec<Vec<bool>> {
        (0..self.n)
            .map(|a| (0..self.n).map(|b| self.leq(a, b)).collect())
            .collect()
    }
}
