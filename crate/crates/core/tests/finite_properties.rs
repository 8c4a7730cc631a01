mod support;

use std::collections::{HashMap, HashSet};

use hausdorff_core::enumeration::{
    canonical_form, count_by_hausdorff, enumerate_classes, enumerate_labeled, CountFilter,
};
use hausdorff_core::separation::{
    axioms_report, hausdorff_number, hausdorff_number_oracle, is_n_hausdorff, is_separable,
    verify_witness, SeparationDecision,
};
use hausdorff_core::{FiniteTopology, PointSet, Preorder};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;
use support::*;

fn exhaustive(max_n: usize) -> Vec<FiniteTopology> {
    (1..=max_n).flat_map(all_topologies).collect()
}

#[test]
fn naive_filter_counts() {
    let counts: Vec<usize> = (1..=4).map(|n| naive_topologies(n).len()).collect();
    assert_eq!(counts, vec![1, 4, 29, 355]);
}

#[test]
fn enumerator_matches_naive_filter() {
    for n in 1..=4 {
        let naive: HashSet<FiniteTopology> = all_topologies(n).into_iter().collect();
        let enumerated: Vec<FiniteTopology> = enumerate_labeled(n).unwrap().collect();
        let as_set: HashSet<FiniteTopology> = enumerated.iter().cloned().collect();
        assert_eq!(as_set.len(), enumerated.len(), "duplicates at n = {n}");
        assert_eq!(as_set, naive, "n = {n}");
    }
}

#[test]
fn no_duplicates_at_five_points() {
    let all: Vec<_> = enumerate_labeled(5).unwrap().collect();
    let distinct: HashSet<_> = all.iter().collect();
    assert_eq!(all.len(), 6942);
    assert_eq!(distinct.len(), all.len());
}

#[test]
fn round_trip_exhaustive() {
    for t in exhaustive(4) {
        let p = t.specialization_preorder();
        assert_eq!(FiniteTopology::from_preorder(&p).unwrap(), t);
        let back = FiniteTopology::from_preorder(&p).unwrap().specialization_preorder();
        assert_eq!(back, p);
    }
}

#[test]
fn round_trip_random_five_points() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..300 {
        let t = random_topology(&mut rng, 5);
        let p = t.specialization_preorder();
        assert_eq!(FiniteTopology::from_preorder(&p).unwrap(), t);
        let again = FiniteTopology::validate(5, t.opens()).unwrap();
        assert_eq!(again.specialization_preorder(), p);
    }
}

#[test]
fn subbasis_generation_is_idempotent() {
    for t in exhaustive(4) {
        assert_eq!(FiniteTopology::from_subbasis(t.n(), t.opens()).unwrap(), t);
    }
}

#[test]
fn minimal_neighborhood_matches_naive_intersection() {
    for t in exhaustive(4) {
        for a in 0..t.n() {
            let mut naive = t.full();
            for u in t.opens() {
                if u.contains(a) {
                    naive = naive.intersection(*u);
                }
            }
            assert_eq!(t.minimal_neighborhood(a).unwrap(), naive);
        }
    }
}

#[test]
fn subspace_traces_compose() {
    for t in exhaustive(4) {
        for s1 in t.full().subsets().filter(|s| !s.is_empty()) {
            let (t1, labels1) = t.subspace(s1).unwrap();
            for s2 in s1.subsets().filter(|s| !s.is_empty()) {
                let reindexed: PointSet = labels1
                    .iter()
                    .enumerate()
                    .filter(|(_, &p)| s2.contains(p))
                    .map(|(i, _)| i)
                    .collect();
                let (nested, nested_labels) = t1.subspace(reindexed).unwrap();
                let (direct, direct_labels) = t.subspace(s2).unwrap();
                assert_eq!(nested, direct);
                let mapped: Vec<usize> = nested_labels.iter().map(|&i| labels1[i]).collect();
                assert_eq!(mapped, direct_labels);
            }
        }
    }
}

#[test]
fn closed_form_matches_definition_search() {
    for t in exhaustive(4) {
        let h = hausdorff_number(&t);
        assert_eq!(h.value, brute_hausdorff(&t), "{:?}", t.opens());
        assert_eq!(h.value, hausdorff_number_oracle(&t).unwrap().value);
        assert_eq!(h.largest_nonseparable.len(), h.value - 1);
        if h.value >= 3 {
            assert!(!separable_by_search(&t, h.largest_nonseparable));
        }
    }
}

#[test]
fn oracle_extremal_set_is_nonseparable() {
    for t in exhaustive(4) {
        let h = hausdorff_number_oracle(&t).unwrap();
        assert_eq!(h.largest_nonseparable.len(), h.value - 1);
        assert!(!separable_by_search(&t, h.largest_nonseparable));
    }
}

#[test]
fn separability_is_monotone_under_supersets() {
    for t in exhaustive(4) {
        let sets: Vec<PointSet> = t.full().subsets().filter(|s| s.len() >= 2).collect();
        let sep: HashMap<PointSet, bool> = sets
            .iter()
            .map(|&s| (s, is_separable(&t, s).unwrap().is_separable()))
            .collect();
        for &a in &sets {
            if !sep[&a] {
                continue;
            }
            for &b in &sets {
                if a.is_subset(b) {
                    assert!(sep[&b]);
                }
            }
        }
    }
}

#[test]
fn witnesses_verify_and_verdicts_match_search() {
    for t in exhaustive(4) {
        for a in t.full().subsets().filter(|s| s.len() >= 2) {
            match is_separable(&t, a).unwrap() {
                SeparationDecision::Separable(w) => {
                    assert!(verify_witness(&t, a, &w));
                    assert!(separable_by_search(&t, a));
                }
                SeparationDecision::NonSeparable { certificate } => {
                    for p in a.iter() {
                        for u in t.opens().iter().filter(|u| u.contains(p)) {
                            assert!(u.contains(certificate));
                        }
                    }
                    assert!(!separable_by_search(&t, a));
                }
            }
        }
    }
}

#[test]
fn subspaces_never_raise_the_hausdorff_number() {
    for t in exhaustive(4) {
        let h = hausdorff_number(&t).value;
        for s in t.full().subsets().filter(|s| s.len() >= 2) {
            let (sub, _) = t.subspace(s).unwrap();
            assert!(hausdorff_number(&sub).value <= h);
        }
    }
}

#[test]
fn hausdorff_flag_iff_h_is_two() {
    for t in exhaustive(4).into_iter().filter(|t| t.n() >= 2) {
        let r = axioms_report(&t);
        assert_eq!(r.hausdorff, hausdorff_number(&t).value == 2);
        if r.hausdorff {
            assert!(r.discrete);
        }
    }
}

#[test]
fn n_hausdorff_is_upward_closed() {
    for t in exhaustive(4) {
        for k in 2..=6 {
            if is_n_hausdorff(&t, k).unwrap() {
                assert!(is_n_hausdorff(&t, k + 1).unwrap());
            }
        }
    }
}

#[test]
fn regularity_and_normality_match_definitions() {
    // brute force over every pair of opens
    for t in exhaustive(4) {
        let n = t.n();
        let closed: Vec<PointSet> = t.opens().iter().map(|u| u.complement(n)).collect();
        let disjoint_opens = |a: PointSet, b: PointSet| {
            t.opens().iter().any(|&u| {
                a.is_subset(u)
                    && t.opens()
                        .iter()
                        .any(|&v| b.is_subset(v) && u.is_disjoint(v))
            })
        };
        let regular = closed.iter().all(|&c| {
            c.complement(n)
                .iter()
                .all(|p| disjoint_opens(PointSet::singleton(p), c))
        });
        let normal = closed.iter().all(|&c| {
            closed
                .iter()
                .filter(|d| d.is_disjoint(c))
                .all(|&d| disjoint_opens(c, d))
        });
        let r = axioms_report(&t);
        assert_eq!(r.regular, regular, "{:?}", t.opens());
        assert_eq!(r.normal, normal, "{:?}", t.opens());
        assert_eq!(r.t0, naive_is_t0(n, &t.opens().iter().map(|u| u.bits()).collect::<Vec<_>>()));
    }
}

#[test]
fn class_counts_match_orbit_computation() {
    for n in 1..=4 {
        let naive = naive_class_count(n, &naive_topologies(n));
        assert_eq!(enumerate_classes(n).unwrap().len(), naive);
    }
}

#[test]
fn orbit_sizes_divide_factorial_and_sum_to_total() {
    for n in 1..=5usize {
        let fact: usize = (1..=n).product();
        let mut orbit: HashMap<_, usize> = HashMap::new();
        for t in enumerate_labeled(n).unwrap() {
            *orbit.entry(canonical_form(&t).unwrap()).or_default() += 1;
        }
        assert!(orbit.values().all(|&s| fact % s == 0));
        let total: usize = orbit.values().sum();
        assert_eq!(total, enumerate_labeled(n).unwrap().count());
    }
}

#[test]
fn histogram_keys_respect_bounds() {
    for n in 1..=5 {
        let table = count_by_hausdorff(n, CountFilter::All, 2).unwrap();
        assert!(table.rows.keys().all(|&h| (2..=n + 1).contains(&h)));
        assert_eq!(
            table.rows.values().map(|r| r.labeled_count).sum::<u64>(),
            table.labeled_total
        );
        assert_eq!(
            table.rows.values().map(|r| r.class_count).sum::<u64>(),
            table.class_total
        );
    }
    // H = n + 1 exactly when one point lies in every minimal neighborhood
    for t in enumerate_labeled(4).unwrap() {
        let shared = (0..4).any(|x| t.minimal_neighborhoods().iter().all(|m| m.contains(x)));
        assert_eq!(hausdorff_number(&t).value == 5, shared);
    }
}

#[test]
fn random_five_point_oracle_agreement() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..200 {
        let t = random_topology(&mut rng, 5);
        assert_eq!(
            hausdorff_number(&t).value,
            hausdorff_number_oracle(&t).unwrap().value
        );
    }
}

fn arb_preorder(max_n: usize) -> impl Strategy<Value = Preorder> {
    (1..=max_n)
        .prop_flat_map(|n| proptest::collection::vec(proptest::collection::vec(any::<bool>(), n), n))
        .prop_map(|mut m| {
            let n = m.len();
            for (a, row) in m.iter_mut().enumerate() {
                row[a] = true;
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
            Preorder::from_matrix(&m).unwrap()
        })
}

fn arb_permuted(max_n: usize) -> impl Strategy<Value = (Preorder, Vec<usize>)> {
    arb_preorder(max_n).prop_flat_map(|p| {
        let n = p.n();
        (Just(p), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn canonical_form_is_relabeling_invariant((p, perm) in arb_permuted(6)) {
        let t = FiniteTopology::from_preorder(&p).unwrap();
        let relabeled = t.permuted(&perm).unwrap();
        prop_assert_eq!(canonical_form(&t).unwrap(), canonical_form(&relabeled).unwrap());
        prop_assert_eq!(hausdorff_number(&t).value, hausdorff_number(&relabeled).value);
    }

    #[test]
    fn preorder_round_trip(p in arb_preorder(6)) {
        let t = FiniteTopology::from_preorder(&p).unwrap();
        prop_assert_eq!(t.specialization_preorder(), p);
        prop_assert_eq!(FiniteTopology::validate(t.n(), t.opens()).unwrap(), t);
    }
}

#[test]
fn distinct_classes_have_distinct_forms() {
    // forms of non-homeomorphic topologies differ: the naive orbit count
    // equals the number of distinct forms
    let forms: HashSet<_> = enumerate_labeled(4)
        .unwrap()
        .map(|t| canonical_form(&t).unwrap())
        .collect();
    assert_eq!(forms.len(), naive_class_count(4, &naive_topologies(4)));
}
