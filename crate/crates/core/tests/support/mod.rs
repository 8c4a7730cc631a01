//! Independent oracles shared by the integration and acceptance tests. None
//! of these go through the enumerator, the closed-form Hausdorff number, or
//! the symbolic interval checker they are used to validate.

#![allow(dead_code)]

use std::collections::HashSet;

use hausdorff_core::symbolic::{BasisNeighborhood, BugEyedSpace, SymbolicPoint, VerticalCount};
use hausdorff_core::{FiniteTopology, PointSet, Preorder};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::Rng;

/// Every family of subsets of `{0..n-1}` that contains ∅ and X and is
/// closed under pairwise union and intersection, found by filtering all
/// `2^(2^n)` families. Feasible for `n ≤ 4`.
pub fn naive_topologies(n: usize) -> Vec<Vec<u64>> {
    assert!(n <= 4);
    let subsets = 1usize << n;
    let full = (1u64 << n) - 1;
    let mut out = Vec::new();
    for family in 0u64..(1u64 << subsets) {
        let has = |s: u64| family & (1u64 << s) != 0;
        if !has(0) || !has(full) {
            continue;
        }
        let members: Vec<u64> = (0..subsets as u64).filter(|&s| has(s)).collect();
        let closed = members
            .iter()
            .all(|&a| members.iter().all(|&b| has(a | b) && has(a & b)));
        if closed {
            out.push(members);
        }
    }
    out
}

/// T0 check straight from the open sets: distinct points are told apart by
/// some open set.
pub fn naive_is_t0(n: usize, opens: &[u64]) -> bool {
    (0..n).all(|a| {
        (a + 1..n).all(|b| {
            opens
                .iter()
                .any(|&u| ((u >> a) & 1) != ((u >> b) & 1))
        })
    })
}

/// Number of homeomorphism classes by explicit orbit computation.
pub fn naive_class_count(n: usize, families: &[Vec<u64>]) -> usize {
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut classes = 0;
    let perms = permutations(n);
    for f in families {
        let key = sorted(f.clone());
        if seen.contains(&key) {
            continue;
        }
        classes += 1;
        for p in &perms {
            seen.insert(sorted(f.iter().map(|&u| permute_mask(u, p)).collect()));
        }
    }
    classes
}

fn sorted(mut v: Vec<u64>) -> Vec<u64> {
    v.sort_unstable();
    v
}

pub fn permute_mask(u: u64, perm: &[usize]) -> u64 {
    (0..perm.len())
        .filter(|&a| u & (1 << a) != 0)
        .fold(0, |acc, a| acc | (1 << perm[a]))
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

pub fn to_topology(n: usize, family: &[u64]) -> FiniteTopology {
    let sets: Vec<PointSet> = family.iter().map(|&b| PointSet::from_bits(b)).collect();
    FiniteTopology::validate(n, &sets).unwrap()
}

/// All topologies on `n ≤ 4` points via the naive family filter.
pub fn all_topologies(n: usize) -> Vec<FiniteTopology> {
    naive_topologies(n)
        .iter()
        .map(|f| to_topology(n, f))
        .collect()
}

/// Random preorder: random relation, reflexive-transitive closure.
pub fn random_topology(rng: &mut StdRng, n: usize) -> FiniteTopology {
    let density = rng.random_range(0.0..0.6);
    let mut m = vec![vec![false; n]; n];
    for (a, row) in m.iter_mut().enumerate() {
        for (b, x) in row.iter_mut().enumerate() {
            *x = a == b || rng.random_bool(density);
        }
    }
    for k in 0..n {
        for a in 0..n {
            for b in 0..n {
                if m[a][k] && m[k][b] {
                    m[a][b] = true;
                }
            }
        }
    }
    FiniteTopology::from_preorder(&Preorder::from_matrix(&m).unwrap()).unwrap()
}

/// Definition-level search: the largest set whose every neighborhood choice
/// meets, via subsets and explicit open-set choices.
pub fn brute_hausdorff(t: &FiniteTopology) -> usize {
    let n = t.n();
    let mut largest = 0;
    for a in PointSet::full(n).subsets() {
        if a.is_empty() || a.len() <= largest {
            continue;
        }
        if !separable_by_search(t, a) {
            largest = a.len();
        }
    }
    largest + 1
}

pub fn separable_by_search(t: &FiniteTopology, a: PointSet) -> bool {
    fn go(t: &FiniteTopology, rest: &[usize], acc: PointSet) -> bool {
        if acc.is_empty() {
            return true;
        }
        match rest.split_first() {
            None => false,
            Some((&p, tail)) => t
                .opens()
                .iter()
                .filter(|u| u.contains(p))
                .any(|&u| go(t, tail, acc.intersection(u))),
        }
    }
    go(t, &a.to_vec(), t.full())
}

// ---- symbolic spaces ----

pub const GRID: u64 = 64;

pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Base-line interval `(lo, hi) ∩ [0,1]`, possibly punctured at 1/2, plus
/// the vertical point it owns.
struct Region {
    lo: BigRational,
    hi: BigRational,
    punctured: bool,
    vertical: Option<u64>,
}

fn region(space: &BugEyedSpace, u: &BasisNeighborhood) -> Region {
    match u {
        BasisNeighborhood::Ball { center, radius } => Region {
            lo: center - radius,
            hi: center + radius,
            punctured: false,
            vertical: None,
        },
        BasisNeighborhood::Basic { m, k } => Region {
            lo: rat(1, 2) - rat(1, *k as i64),
            hi: rat(1, 2) + rat(1, *k as i64),
            punctured: space.t1_variant,
            vertical: Some(*m),
        },
    }
}

fn region_contains(r: &Region, x: &BigRational) -> bool {
    let in_unit = !x.is_negative() && *x <= BigRational::one();
    in_unit && r.lo < *x && *x < r.hi && !(r.punctured && *x == rat(1, 2))
}

/// Emptiness of a family of basic neighborhoods, decided by testing every
/// breakpoint and every midpoint between consecutive breakpoints.
pub fn independent_intersection_empty(space: &BugEyedSpace, nbhds: &[BasisNeighborhood]) -> bool {
    let regions: Vec<Region> = nbhds.iter().map(|u| region(space, u)).collect();
    if let Some(m) = regions[0].vertical {
        if regions.iter().all(|r| r.vertical == Some(m)) {
            return false;
        }
    }
    let mut points: Vec<BigRational> = vec![BigRational::zero(), BigRational::one(), rat(1, 2)];
    for r in &regions {
        points.push(r.lo.clone());
        points.push(r.hi.clone());
    }
    points.sort();
    points.dedup();
    let mut candidates = points.clone();
    for w in points.windows(2) {
        candidates.push((&w[0] + &w[1]) / rat(2, 1));
    }
    !candidates
        .iter()
        .any(|x| regions.iter().all(|r| region_contains(r, x)))
}

fn grid_neighborhood(p: &SymbolicPoint, j: u64) -> BasisNeighborhood {
    match p {
        SymbolicPoint::Base(c) => BasisNeighborhood::Ball {
            center: c.clone(),
            radius: rat(1, j as i64),
        },
        SymbolicPoint::Vertical(m) => BasisNeighborhood::Basic { m: *m, k: j },
    }
}

/// Bounded witness search with every parameter `ε, 1/k ∈ {1/1..1/GRID}`.
/// Pairs are searched over the full product of parameters; larger sets over
/// the shared-parameter diagonal, which is complete because each point's
/// grid neighborhoods are nested (checked separately).
pub fn grid_search_separable(space: &BugEyedSpace, points: &[SymbolicPoint]) -> bool {
    if points.len() == 2 {
        return (1..=GRID).any(|i| {
            (1..=GRID).any(|j| {
                independent_intersection_empty(
                    space,
                    &[grid_neighborhood(&points[0], i), grid_neighborhood(&points[1], j)],
                )
            })
        });
    }
    (1..=GRID).any(|j| {
        let nbhds: Vec<_> = points.iter().map(|p| grid_neighborhood(p, j)).collect();
        independent_intersection_empty(space, &nbhds)
    })
}

/// Random distinct points with base coordinates `a/32`, `0 ≤ a ≤ 32`.
pub fn random_symbolic_set(rng: &mut StdRng, space: &BugEyedSpace, size: usize) -> Vec<SymbolicPoint> {
    let v = match space.verticals {
        VerticalCount::Finite(v) => v,
        VerticalCount::Omega => 8,
    };
    let mut out: Vec<SymbolicPoint> = Vec::new();
    let mut attempts = 0;
    while out.len() < size && attempts < 1000 {
        attempts += 1;
        let p = match rng.random_range(0..3) {
            0 => SymbolicPoint::Vertical(rng.random_range(1..=v)),
            1 => SymbolicPoint::Base(rat(1, 2)),
            _ => SymbolicPoint::Base(rat(rng.random_range(0..=32), 32)),
        };
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}
