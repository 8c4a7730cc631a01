//! Separability of point sets and the Hausdorff number of finite topologies.
//!
//! A set `A` is *separable* when every `a ∈ A` has an open neighborhood `U_a`
//! with `⋂ U_a = ∅`. The Hausdorff number `H` is the least `τ` such that all
//! sets of at least `τ` points are separable. Singletons are never separable,
//! so `H ≥ 2` on every space, including the one-point space.
//!
//! In a finite space the minimal neighborhoods are the best possible choice
//! of `U_a`, so `A` fails to be separable exactly when some point `x` lies in
//! every `N(a)`, i.e. `A ⊆ S_x = {a : x ∈ N(a)}`. This gives the closed form
//! `H = 1 + max_x |S_x|` computed by [`hausdorff_number`]. The exhaustive
//! [`hausdorff_number_oracle`] follows the definition literally and is kept
//! independent of that reduction.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::topology::FiniteTopology;

/// Largest point count accepted by [`hausdorff_number_oracle`].
pub const ORACLE_MAX_POINTS: usize = 5;

/// One open neighborhood per point of a separated set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationWitness {
    pub assignments: Vec<(usize, PointSet)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeparationDecision {
    Separable(SeparationWitness),
    /// `certificate` lies in every open set containing any member of the set.
    NonSeparable { certificate: usize },
}

impl SeparationDecision {
    pub fn is_separable(&self) -> bool {
        matches!(self, SeparationDecision::Separable(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HausdorffNumber {
    pub value: usize,
    /// A non-separable set of `value - 1` points.
    pub largest_nonseparable: PointSet,
}

/// Classical separation properties of a finite topology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomsReport {
    pub t0: bool,
    pub t1: bool,
    pub hausdorff: bool,
    pub regular: bool,
    pub normal: bool,
    pub discrete: bool,
    pub compact: bool,
}

fn check_query(t: &FiniteTopology, a: PointSet) -> Result<()> {
    if let Some(point) = a.difference(t.full()).first() {
        return Err(Error::PointOutOfRange { point, n: t.n() });
    }
    if a.len() < 2 {
        return Err(Error::SetTooSmall(a.len()));
    }
    Ok(())
}

/// Decides whether the points of `a` admit open neighborhoods with empty
/// intersection.
pub fn is_separable(t: &FiniteTopology, a: PointSet) -> Result<SeparationDecision> {
    check_query(t, a)?;
    let minimal = t.minimal_neighborhoods();
    let common = a
        .iter()
        .fold(t.full(), |acc, p| acc.intersection(minimal[p]));
    Ok(match common.first() {
        Some(certificate) => SeparationDecision::NonSeparable { certificate },
        None => SeparationDecision::Separable(SeparationWitness {
            assignments: a.iter().map(|p| (p, minimal[p])).collect(),
        }),
    })
}

/// Checks a witness directly against the definition: one open neighborhood
/// per point of `a`, each containing its point, with empty intersection.
pub fn verify_witness(t: &FiniteTopology, a: PointSet, witness: &SeparationWitness) -> bool {
    let covered: PointSet = witness.assignments.iter().map(|(p, _)| *p).collect();
    if covered != a || witness.assignments.len() != a.len() {
        return false;
    }
    let mut common = t.full();
    for &(p, u) in &witness.assignments {
        if !u.contains(p) || !t.is_open(u) {
            return false;
        }
        common = common.intersection(u);
    }
    common.is_empty()
}

/// Hausdorff number by the minimal-neighborhood closed form.
pub fn hausdorff_number(t: &FiniteTopology) -> HausdorffNumber {
    let minimal = t.minimal_neighborhoods();
    let mut best = PointSet::EMPTY;
    for x in 0..t.n() {
        let s_x: PointSet = (0..t.n()).filter(|&a| minimal[a].contains(x)).collect();
        if s_x.len() > best.len() {
            best = s_x;
        }
    }
    HausdorffNumber {
        value: best.len() + 1,
        largest_nonseparable: best,
    }
}

/// Hausdorff number by exhaustive search over every subset and every choice
/// of open neighborhoods. Exponential; limited to five points.
pub fn hausdorff_number_oracle(t: &FiniteTopology) -> Result<HausdorffNumber> {
    let n = t.n();
    if n > ORACLE_MAX_POINTS {
        return Err(Error::TooLarge {
            n,
            max: ORACLE_MAX_POINTS,
        });
    }
    let containing: Vec<Vec<PointSet>> = (0..n)
        .map(|a| t.opens().iter().copied().filter(|u| u.contains(a)).collect())
        .collect();
    let subsets: Vec<PointSet> = t.full().subsets().filter(|s| !s.is_empty()).collect();
    let separable: Vec<bool> = subsets
        .iter()
        .map(|s| some_choice_separates(&s.to_vec(), &containing, t.full()))
        .collect();

    for tau in 1..=n + 1 {
        let all_large_separable = subsets
            .iter()
            .zip(&separable)
            .filter(|(s, _)| s.len() >= tau)
            .all(|(_, &sep)| sep);
        if all_large_separable {
            let largest_nonseparable = subsets
                .iter()
                .zip(&separable)
                .find(|(s, &sep)| s.len() == tau - 1 && !sep)
                .map(|(s, _)| *s)
                .unwrap_or(PointSet::EMPTY);
            return Ok(HausdorffNumber {
                value: tau,
                largest_nonseparable,
            });
        }
    }
    unreachable!("sets larger than n are vacuously separable")
}

/// Depth-first search over `U_{a_1} ∈ containing[a_1], U_{a_2} ∈ ...` for a
/// choice whose intersection is empty.
fn some_choice_separates(points: &[usize], containing: &[Vec<PointSet>], acc: PointSet) -> bool {
    if acc.is_empty() {
        return true;
    }
    match points.split_first() {
        None => false,
        Some((&a, rest)) => containing[a]
            .iter()
            .any(|&u| some_choice_separates(rest, containing, acc.intersection(u))),
    }
}

/// True iff `H(T) ≤ k`.
pub fn is_n_hausdorff(t: &FiniteTopology, k: usize) -> Result<bool> {
    if k < 2 {
        return Err(Error::BadParameter(format!(
            "n-Hausdorff requires n ≥ 2, got {k}"
        )));
    }
    Ok(hausdorff_number(t).value <= k)
}

pub fn axioms_report(t: &FiniteTopology) -> AxiomsReport {
    let n = t.n();
    let minimal = t.minimal_neighborhoods();

    let t0 = (0..n).all(|a| (a + 1..n).all(|b| minimal[a] != minimal[b]));
    let t1 = t.is_discrete();
    let hausdorff = (0..n).all(|a| {
        (a + 1..n).all(|b| {
            is_separable(t, PointSet::from_points([a, b]))
                .map(|d| d.is_separable())
                .unwrap_or(false)
        })
    });

    let closed: Vec<PointSet> = t.closed_sets().collect();
    let regular = closed.iter().all(|&c| {
        let hull = t.open_hull(c);
        c.complement(n)
            .iter()
            .all(|p| minimal[p].is_disjoint(hull))
    });
    let normal = closed.iter().enumerate().all(|(i, &c)| {
        closed[i + 1..]
            .iter()
            .filter(|d| d.is_disjoint(c))
            .all(|&d| t.open_hull(c).is_disjoint(t.open_hull(d)))
    });

    AxiomsReport {
        t0,
        t1,
        hausdorff,
        regular,
        normal,
        discrete: t1,
        compact: true,
    }
}

/// Combined analysis emitted by the `analyze` command and the bindings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub hausdorff_number: usize,
    pub largest_nonseparable: Vec<usize>,
    pub t0: bool,
    pub t1: bool,
    pub hausdorff: bool,
    pub regular: bool,
    pub normal: bool,
    pub discrete: bool,
    pub compact: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_hausdorff_number: Option<usize>,
}

impl AnalysisReport {
    pub fn new(t: &FiniteTopology) -> Self {
        let h = hausdorff_number(t);
        let ax = axioms_report(t);
        AnalysisReport {
            n: t.n(),
            hausdorff_number: h.value,
            largest_nonseparable: h.largest_nonseparable.to_vec(),
            t0: ax.t0,
            t1: ax.t1,
            hausdorff: ax.hausdorff,
            regular: ax.regular,
            normal: ax.normal,
            discrete: ax.discrete,
            compact: ax.compact,
            oracle_hausdorff_number: None,
        }
    }

    /// Runs the exhaustive oracle and records its value. Fails if the
    /// oracle disagrees with the closed form.
    pub fn with_oracle(mut self, t: &FiniteTopology) -> Result<Self> {
        let oracle = hausdorff_number_oracle(t)?;
        if oracle.value != self.hausdorff_number {
            return Err(Error::ClaimViolated(format!(
                "closed form gives H = {} but the oracle gives H = {}",
                self.hausdorff_number, oracle.value
            )));
        }
        self.oracle_hausdorff_number = Some(oracle.value);
        Ok(self)
    }
}
