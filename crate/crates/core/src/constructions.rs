//! The finite spaces used as examples of non-discrete n-Hausdorff
//! topologies. Each constructor checks its advertised properties before
//! returning and fails with [`Error::ClaimViolated`] if any does not hold.
//!
//! Point names used in reports: `x, y, z = 0, 1, 2` for the three-point space
//! and `w, x, y, z = 0, 1, 2, 3` for the four-point space.

use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::separation::{axioms_report, hausdorff_number, is_n_hausdorff};
use crate::topology::FiniteTopology;

/// Labels for the points of [`three_point_example`].
pub const THREE_POINT_NAMES: [&str; 3] = ["x", "y", "z"];
/// Labels for the points of [`filtered_four_point`].
pub const FOUR_POINT_NAMES: [&str; 4] = ["w", "x", "y", "z"];

fn claim(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::ClaimViolated(what()))
    }
}

fn expect_h(t: &FiniteTopology, name: &str, expected: usize) -> Result<()> {
    let h = hausdorff_number(t).value;
    claim(h == expected, || {
        format!("{name}: expected H = {expected}, computed {h}")
    })
}

/// `{∅, {x}, {y,z}, X}` on `{x,y,z}`: 3-Hausdorff, compact, not Hausdorff.
pub fn three_point_example() -> Result<FiniteTopology> {
    let t = FiniteTopology::validate(
        3,
        &[
            PointSet::EMPTY,
            PointSet::singleton(0),
            PointSet::from_points([1, 2]),
            PointSet::full(3),
        ],
    )?;
    expect_h(&t, "three-point", 3)?;
    let ax = axioms_report(&t);
    claim(!ax.hausdorff && !ax.discrete && ax.compact, || {
        "three-point: expected compact, non-Hausdorff, non-discrete".into()
    })?;
    Ok(t)
}

/// `{∅, {x0}, X∖{x0}, X}` on `n` points. Its Hausdorff number is exactly `n`.
pub fn two_block_topology(n: usize, x0: usize) -> Result<FiniteTopology> {
    if n < 2 || x0 >= n {
        return Err(Error::BadParameter(format!(
            "two-block topology needs n ≥ 2 and x0 < n, got n = {n}, x0 = {x0}"
        )));
    }
    let x = PointSet::full(n);
    let t = FiniteTopology::validate(
        n,
        &[PointSet::EMPTY, PointSet::singleton(x0), x.without(x0), x],
    )?;
    claim(is_n_hausdorff(&t, n)?, || {
        format!("two-block({n}): not {n}-Hausdorff")
    })?;
    expect_h(&t, "two-block", n)?;
    if n >= 3 {
        claim(!t.is_discrete(), || format!("two-block({n}): discrete"))?;
    }
    Ok(t)
}

/// Opens are every superset of `{y}` together with `∅, {x}, {z}, {x,z}`.
pub fn filtered_four_point() -> Result<FiniteTopology> {
    let y = 2;
    let mut family: Vec<PointSet> = PointSet::full(4)
        .subsets()
        .filter(|s| s.contains(y))
        .collect();
    family.extend([
        PointSet::EMPTY,
        PointSet::singleton(1),
        PointSet::singleton(3),
        PointSet::from_points([1, 3]),
    ]);
    let t = FiniteTopology::validate(4, &family)?;
    claim(is_n_hausdorff(&t, 3)?, || "four-point: not 3-Hausdorff".into())?;
    expect_h(&t, "four-point", 3)?;
    claim(!t.is_discrete(), || "four-point: discrete".into())?;
    Ok(t)
}

/// Topology generated by `{{x} : x ≠ x0} ∪ {{x0, x1}}`: 3-Hausdorff and not
/// discrete for every `n ≥ 3`.
pub fn doubled_point_topology(n: usize, x0: usize, x1: usize) -> Result<FiniteTopology> {
    if n < 3 || x0 >= n || x1 >= n || x0 == x1 {
        return Err(Error::BadParameter(format!(
            "doubled-point topology needs n ≥ 3 and distinct x0, x1 < n, got n = {n}, x0 = {x0}, x1 = {x1}"
        )));
    }
    let mut basis: Vec<PointSet> = (0..n)
        .filter(|&x| x != x0)
        .map(PointSet::singleton)
        .collect();
    basis.push(PointSet::from_points([x0, x1]));
    let t = FiniteTopology::from_subbasis(n, &basis)?;
    claim(is_n_hausdorff(&t, 3)?, || {
        format!("doubled-point({n}): not 3-Hausdorff")
    })?;
    expect_h(&t, "doubled-point", 3)?;
    claim(!t.is_open(PointSet::singleton(x0)), || {
        format!("doubled-point({n}): {{x0}} is open")
    })?;
    Ok(t)
}

/// A named construction, as accepted by the command line (`three-point`,
/// `two-block:N`, `four-point`, `doubled:N`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    ThreePoint,
    TwoBlock(usize),
    FourPoint,
    Doubled(usize),
}

impl Construction {
    pub fn build(self) -> Result<FiniteTopology> {
        match self {
            Construction::ThreePoint => three_point_example(),
            Construction::TwoBlock(n) => two_block_topology(n, 0),
            Construction::FourPoint => filtered_four_point(),
            Construction::Doubled(n) => doubled_point_topology(n, 0, 1),
        }
    }

    pub fn name(self) -> String {
        match self {
            Construction::ThreePoint => "three-point".into(),
            Construction::TwoBlock(n) => format!("two-block:{n}"),
            Construction::FourPoint => "four-point".into(),
            Construction::Doubled(n) => format!("doubled:{n}"),
        }
    }

    /// Hausdorff number the construction is expected to have.
    pub fn expected_hausdorff_number(self) -> usize {
        match self {
            Construction::ThreePoint | Construction::FourPoint | Construction::Doubled(_) => 3,
            Construction::TwoBlock(n) => n,
        }
    }
}

impl std::str::FromStr for Construction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let param = |rest: &str| {
            rest.parse::<usize>()
                .map_err(|_| Error::BadParameter(format!("bad point count in {s:?}")))
        };
        match s.split_once(':') {
            None if s == "three-point" => Ok(Construction::ThreePoint),
            None if s == "four-point" => Ok(Construction::FourPoint),
            Some(("two-block", rest)) => Ok(Construction::TwoBlock(param(rest)?)),
            Some(("doubled", rest)) => Ok(Construction::Doubled(param(rest)?)),
            _ => Err(Error::BadParameter(format!("unknown construction {s:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::separation::{hausdorff_number_oracle, is_separable, SeparationDecision};

    #[test]
    fn three_point_properties() {
        let t = three_point_example().unwrap();
        assert_eq!(hausdorff_number(&t).value, 3);
        assert!(is_separable(&t, t.full()).unwrap().is_separable());
        assert!(!axioms_report(&t).discrete);
    }

    #[test]
    fn two_block_examples() {
        assert_eq!(two_block_topology(3, 0).unwrap(), three_point_example().unwrap());
        let t = two_block_topology(5, 2).unwrap();
        assert_eq!(hausdorff_number(&t).value, 5);
        assert_eq!(hausdorff_number_oracle(&t).unwrap().value, 5);
        let t = two_block_topology(2, 0).unwrap();
        assert_eq!(t, FiniteTopology::discrete(2).unwrap());
        assert_eq!(hausdorff_number(&t).value, 2);
        assert!(matches!(two_block_topology(1, 0), Err(Error::BadParameter(_))));
        assert!(matches!(two_block_topology(4, 4), Err(Error::BadParameter(_))));
    }

    #[test]
    fn four_point_properties() {
        let t = filtered_four_point().unwrap();
        assert_eq!(hausdorff_number_oracle(&t).unwrap().value, 3);
        assert_eq!(hausdorff_number(&t).largest_nonseparable, PointSet::from_points([0, 2]));
        let (sub, _) = t.subspace(PointSet::from_points([1, 3])).unwrap();
        assert!(sub.is_discrete());
        assert_eq!(hausdorff_number(&sub).value, 2);
    }

    #[test]
    fn doubled_point_examples() {
        for n in 3..=5 {
            let t = doubled_point_topology(n, 0, 1).unwrap();
            assert_eq!(hausdorff_number_oracle(&t).unwrap().value, 3);
        }
        let t = doubled_point_topology(3, 0, 1).unwrap();
        assert_eq!(hausdorff_number(&t).largest_nonseparable, PointSet::from_points([0, 1]));
        let t = doubled_point_topology(8, 0, 1).unwrap();
        assert!(!t.is_open(PointSet::singleton(0)));
        assert!(matches!(doubled_point_topology(4, 1, 1), Err(Error::BadParameter(_))));
        assert!(matches!(doubled_point_topology(2, 0, 1), Err(Error::BadParameter(_))));
    }

    #[test]
    fn doubled_point_separates_triples_with_the_doubled_neighborhood() {
        let (x0, x1) = (2, 5);
        let t = doubled_point_topology(6, x0, x1).unwrap();
        for a in t.full().subsets().filter(|s| s.len() == 3) {
            match is_separable(&t, a).unwrap() {
                SeparationDecision::Separable(w) => {
                    for (p, u) in w.assignments {
                        let expected = if p == x0 {
                            PointSet::from_points([x0, x1])
                        } else {
                            PointSet::singleton(p)
                        };
                        assert_eq!(u, expected);
                    }
                }
                other => panic!("{a} not separable: {other:?}"),
            }
        }
    }

    #[test]
    fn construction_names_parse() {
        for c in [
            Construction::ThreePoint,
            Construction::TwoBlock(5),
            Construction::FourPoint,
            Construction::Doubled(4),
        ] {
            assert_eq!(c.name().parse::<Construction>().unwrap(), c);
        }
        assert!("two-block:x".parse::<Construction>().is_err());
        assert!("five-point".parse::<Construction>().is_err());
    }
}
