//! Exact models of the bug-eyed interval spaces.
//!
//! The underlying set is `[0,1] × {0}` together with vertical points
//! `⟨1/2, 1/m⟩` for `m = 1..v` (or every `m ≥ 1` when `v = ω`). Base points
//! carry the Euclidean topology of `[0,1]`. The basic neighborhoods of the
//! vertical point `m` are
//!
//! ```text
//! U_k(m) = {⟨1/2, 1/m⟩} ∪ ((1/2 − 1/k, 1/2 + 1/k) ∖ {1/2}) × {0}
//! ```
//!
//! in the T1 variant, and the same without the puncture at `1/2` otherwise.
//! Intervals are clipped to `[0,1]`. All arithmetic is on exact rationals.
//!
//! A finite set of points fails to be separable exactly when it lies inside
//! `{⟨1/2, 0⟩} ∪ V`: any two vertical points (and `⟨1/2, 0⟩`) have
//! overlapping punctured intervals around `1/2`, while two distinct base
//! points, or one base point away from `1/2`, can always be isolated.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymbolicError {
    #[error("{0} is not a point of this space")]
    SpaceMismatch(String),
    #[error("set of {0} point(s) is too small; at least 2 are required")]
    SetTooSmall(usize),
    #[error("point {0} appears more than once")]
    DuplicatePoints(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("cannot parse {0:?}: {1}")]
    Parse(String, String),
}

pub type Result<T, E = SymbolicError> = std::result::Result<T, E>;

fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

fn unit_reciprocal(k: u64) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(k))
}

/// `num/den` with the denominator always written.
pub fn format_rational(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let err = |msg: &str| SymbolicError::Parse(s.to_string(), msg.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err("bad numerator"))?;
    let den: BigInt = den.parse().map_err(|_| err("bad denominator"))?;
    if den.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(BigRational::new(num, den))
}

/// Number of vertical points: finite, or one for every positive integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VerticalCount {
    Finite(u64),
    Omega,
}

impl VerticalCount {
    fn admits(self, m: u64) -> bool {
        m >= 1
            && match self {
                VerticalCount::Finite(v) => m <= v,
                VerticalCount::Omega => true,
            }
    }
}

impl fmt::Display for VerticalCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerticalCount::Finite(v) => write!(f, "{v}"),
            VerticalCount::Omega => write!(f, "omega"),
        }
    }
}

impl FromStr for VerticalCount {
    type Err = SymbolicError;

    fn from_str(s: &str) -> Result<Self> {
        if s.eq_ignore_ascii_case("omega") || s == "ω" {
            return Ok(VerticalCount::Omega);
        }
        match s.parse::<u64>() {
            Ok(v) if v >= 1 => Ok(VerticalCount::Finite(v)),
            _ => Err(SymbolicError::Parse(
                s.to_string(),
                "expected a positive integer or \"omega\"".into(),
            )),
        }
    }
}

/// A space of the bug-eyed family.
///
/// `(1, true)` has one vertical point and punctured neighborhoods; `(1,
/// false)` is its non-T1 modification; `(v, true)` is `(v+2)`-Hausdorff but
/// not `(v+1)`-Hausdorff; `(Omega, true)` is not n-Hausdorff for any finite n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BugEyedSpace {
    pub verticals: VerticalCount,
    pub t1_variant: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymbolicPoint {
    /// `⟨q, 0⟩` for `q ∈ [0,1]`.
    Base(BigRational),
    /// `⟨1/2, 1/m⟩` for `m ≥ 1`.
    Vertical(u64),
}

impl SymbolicPoint {
    pub fn base(num: i64, den: i64) -> Self {
        SymbolicPoint::Base(BigRational::new(num.into(), den.into()))
    }

    fn is_base_half(&self) -> bool {
        matches!(self, SymbolicPoint::Base(q) if *q == half())
    }
}

impl fmt::Display for SymbolicPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymbolicPoint::Base(q) => write!(f, "b:{}", format_rational(q)),
            SymbolicPoint::Vertical(m) => write!(f, "v:{m}"),
        }
    }
}

impl FromStr for SymbolicPoint {
    type Err = SymbolicError;

    /// `b:<num>/<den>` or `v:<m>`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s.split_once(':') {
            Some(("b", q)) => Ok(SymbolicPoint::Base(parse_rational(q)?)),
            Some(("v", m)) => m
                .trim()
                .parse::<u64>()
                .ok()
                .filter(|&m| m >= 1)
                .map(SymbolicPoint::Vertical)
                .ok_or_else(|| {
                    SymbolicError::Parse(s.to_string(), "vertical index must be ≥ 1".into())
                }),
            _ => Err(SymbolicError::Parse(
                s.to_string(),
                "expected b:<num>/<den> or v:<m>".into(),
            )),
        }
    }
}

impl Serialize for SymbolicPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SymbolicPoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses a comma-separated point list such as `b:1/2,v:1`.
pub fn parse_points(list: &str) -> Result<Vec<SymbolicPoint>> {
    list.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(str::parse)
        .collect()
}

/// A member of the canonical neighborhood basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BasisNeighborhood {
    /// `((center − radius, center + radius) ∩ [0,1]) × {0}`, owned by
    /// `Base(center)`.
    Ball {
        center: BigRational,
        radius: BigRational,
    },
    /// `U_k` of `Vertical(m)`.
    Basic { m: u64, k: u64 },
}

impl BasisNeighborhood {
    pub fn owner(&self) -> SymbolicPoint {
        match self {
            BasisNeighborhood::Ball { center, .. } => SymbolicPoint::Base(center.clone()),
            BasisNeighborhood::Basic { m, .. } => SymbolicPoint::Vertical(*m),
        }
    }
}

impl Serialize for BasisNeighborhood {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            BasisNeighborhood::Ball { center, radius } => {
                let mut st = s.serialize_struct("Ball", 3)?;
                st.serialize_field("kind", "ball")?;
                st.serialize_field("center", &format_rational(center))?;
                st.serialize_field("radius", &format_rational(radius))?;
                st.end()
            }
            BasisNeighborhood::Basic { k, .. } => {
                let mut st = s.serialize_struct("Basic", 2)?;
                st.serialize_field("kind", "basic")?;
                st.serialize_field("k", k)?;
                st.end()
            }
        }
    }
}

/// The base-line part of a neighborhood: an interval inside `[0,1]`, possibly
/// with `1/2` removed.
#[derive(Clone, Debug)]
struct Trace {
    lo: BigRational,
    lo_closed: bool,
    hi: BigRational,
    hi_closed: bool,
    punctured: bool,
}

impl Trace {
    fn around(center: &BigRational, radius: &BigRational, punctured: bool) -> Trace {
        let lo = center - radius;
        let hi = center + radius;
        let (lo, lo_closed) = if lo.is_negative() {
            (BigRational::zero(), true)
        } else {
            (lo, false)
        };
        let (hi, hi_closed) = if hi > BigRational::one() {
            (BigRational::one(), true)
        } else {
            (hi, false)
        };
        Trace {
            lo,
            lo_closed,
            hi,
            hi_closed,
            punctured,
        }
    }

    fn contains(&self, x: &BigRational) -> bool {
        let above = if self.lo_closed { *x >= self.lo } else { *x > self.lo };
        let below = if self.hi_closed { *x <= self.hi } else { *x < self.hi };
        above && below && !(self.punctured && *x == half())
    }

    fn meet(&self, other: &Trace) -> Trace {
        let (lo, lo_closed) = match self.lo.cmp(&other.lo) {
            std::cmp::Ordering::Greater => (self.lo.clone(), self.lo_closed),
            std::cmp::Ordering::Less => (other.lo.clone(), other.lo_closed),
            std::cmp::Ordering::Equal => (self.lo.clone(), self.lo_closed && other.lo_closed),
        };
        let (hi, hi_closed) = match self.hi.cmp(&other.hi) {
            std::cmp::Ordering::Less => (self.hi.clone(), self.hi_closed),
            std::cmp::Ordering::Greater => (other.hi.clone(), other.hi_closed),
            std::cmp::Ordering::Equal => (self.hi.clone(), self.hi_closed && other.hi_closed),
        };
        Trace {
            lo,
            lo_closed,
            hi,
            hi_closed,
            punctured: self.punctured || other.punctured,
        }
    }

    /// Some rational in the trace, if it is nonempty.
    fn sample(&self) -> Option<BigRational> {
        if self.lo > self.hi {
            return None;
        }
        if self.lo == self.hi {
            let p = self.lo.clone();
            return self.contains(&p).then_some(p);
        }
        let two = BigRational::from_integer(2.into());
        let mid = (&self.lo + &self.hi) / &two;
        if self.contains(&mid) {
            return Some(mid);
        }
        // the midpoint is the puncture; step halfway back toward lo
        let q = (&self.lo + &mid) / &two;
        debug_assert!(self.contains(&q));
        Some(q)
    }
}

/// Outcome of a separability query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeparabilityVerdict {
    Separable {
        witness: Vec<(SymbolicPoint, BasisNeighborhood)>,
    },
    NonSeparable {
        /// The queried points; all lie in `{Base(1/2)} ∪ V`.
        points: Vec<SymbolicPoint>,
    },
}

impl SeparabilityVerdict {
    pub fn is_separable(&self) -> bool {
        matches!(self, SeparabilityVerdict::Separable { .. })
    }
}

#[derive(Serialize)]
struct WitnessEntry<'a> {
    point: &'a SymbolicPoint,
    neighborhood: &'a BasisNeighborhood,
}

#[derive(Serialize)]
struct Certificate<'a> {
    contained_in: &'static str,
    points: &'a [SymbolicPoint],
    reason: &'static str,
}

const CONTAINING_SET: &str = "{b:1/2} ∪ V";
const NONSEPARABLE_REASON: &str =
    "every neighborhood of b:1/2 and every U_k contain base points on both sides of 1/2 arbitrarily close to it, so any choice of neighborhoods shares a base point";

impl Serialize for SeparabilityVerdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SeparabilityVerdict", 2)?;
        match self {
            SeparabilityVerdict::Separable { witness } => {
                st.serialize_field("separable", &true)?;
                let entries: Vec<_> = witness
                    .iter()
                    .map(|(point, neighborhood)| WitnessEntry {
                        point,
                        neighborhood,
                    })
                    .collect();
                st.serialize_field("witness", &entries)?;
            }
            SeparabilityVerdict::NonSeparable { points } => {
                st.serialize_field("separable", &false)?;
                st.serialize_field(
                    "certificate",
                    &Certificate {
                        contained_in: CONTAINING_SET,
                        points,
                        reason: NONSEPARABLE_REASON,
                    },
                )?;
            }
        }
        st.end()
    }
}

/// Hausdorff number of a bug-eyed space: finite, or `ω₁`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SymbolicHausdorffNumber {
    Finite(u64),
    OmegaOne,
}

impl fmt::Display for SymbolicHausdorffNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymbolicHausdorffNumber::Finite(k) => write!(f, "{k}"),
            SymbolicHausdorffNumber::OmegaOne => write!(f, "OMEGA_ONE"),
        }
    }
}

impl Serialize for SymbolicHausdorffNumber {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            SymbolicHausdorffNumber::Finite(k) => s.serialize_u64(*k),
            SymbolicHausdorffNumber::OmegaOne => s.serialize_str("OMEGA_ONE"),
        }
    }
}

/// The largest non-separable set behind a Hausdorff number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtremalSet {
    Finite(Vec<SymbolicPoint>),
    /// `{Base(1/2)} ∪ {Vertical(m) : m ≥ 1}`, countably infinite.
    HalfAndAllVerticals,
}

impl Serialize for ExtremalSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ExtremalSet::Finite(points) => points.serialize(s),
            ExtremalSet::HalfAndAllVerticals => s.serialize_str("b:1/2 and v:m for every m >= 1"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymbolicHausdorffReport {
    pub hausdorff_number: SymbolicHausdorffNumber,
    pub largest_nonseparable: ExtremalSet,
}

/// Result of a T1 query on an ordered pair of points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct T1Status {
    pub holds: bool,
    /// A neighborhood of the first point missing the second.
    pub first_excludes_second: Option<BasisNeighborhood>,
    /// A neighborhood of the second point missing the first.
    pub second_excludes_first: Option<BasisNeighborhood>,
    pub explanation: String,
}

impl BugEyedSpace {
    pub fn new(verticals: VerticalCount, t1_variant: bool) -> Result<Self> {
        if verticals == VerticalCount::Finite(0) {
            return Err(SymbolicError::BadParameter(
                "vertical count must be at least 1".into(),
            ));
        }
        Ok(BugEyedSpace {
            verticals,
            t1_variant,
        })
    }

    pub fn contains_point(&self, p: &SymbolicPoint) -> bool {
        match p {
            SymbolicPoint::Base(q) => !q.is_negative() && *q <= BigRational::one(),
            SymbolicPoint::Vertical(m) => self.verticals.admits(*m),
        }
    }

    fn check_point(&self, p: &SymbolicPoint) -> Result<()> {
        if self.contains_point(p) {
            Ok(())
        } else {
            Err(SymbolicError::SpaceMismatch(p.to_string()))
        }
    }

    fn check_neighborhood(&self, u: &BasisNeighborhood) -> Result<()> {
        match u {
            BasisNeighborhood::Ball { center, radius } => {
                self.check_point(&SymbolicPoint::Base(center.clone()))?;
                if !radius.is_positive() {
                    return Err(SymbolicError::BadParameter(format!(
                        "ball radius must be positive, got {}",
                        format_rational(radius)
                    )));
                }
            }
            BasisNeighborhood::Basic { m, k } => {
                self.check_point(&SymbolicPoint::Vertical(*m))?;
                if *k == 0 {
                    return Err(SymbolicError::BadParameter("U_k needs k ≥ 1".into()));
                }
            }
        }
        Ok(())
    }

    fn trace(&self, u: &BasisNeighborhood) -> Trace {
        match u {
            BasisNeighborhood::Ball { center, radius } => Trace::around(center, radius, false),
            BasisNeighborhood::Basic { k, .. } => {
                Trace::around(&half(), &unit_reciprocal(*k), self.t1_variant)
            }
        }
    }

    /// Exact decision of `p ∈ u`.
    pub fn membership(&self, u: &BasisNeighborhood, p: &SymbolicPoint) -> Result<bool> {
        self.check_neighborhood(u)?;
        self.check_point(p)?;
        Ok(match (u, p) {
            (_, SymbolicPoint::Base(x)) => self.trace(u).contains(x),
            (BasisNeighborhood::Basic { m, .. }, SymbolicPoint::Vertical(j)) => m == j,
            (BasisNeighborhood::Ball { .. }, SymbolicPoint::Vertical(_)) => false,
        })
    }

    /// A point common to all of `nbhds`, preferring a base point, or `None`
    /// when their intersection is empty.
    pub fn intersection_nonempty(
        &self,
        nbhds: &[BasisNeighborhood],
    ) -> Result<Option<SymbolicPoint>> {
        let (first, rest) = nbhds.split_first().ok_or_else(|| {
            SymbolicError::BadParameter("intersection of an empty family".into())
        })?;
        for u in nbhds {
            self.check_neighborhood(u)?;
        }
        let trace = rest
            .iter()
            .fold(self.trace(first), |acc, u| acc.meet(&self.trace(u)));
        if let Some(x) = trace.sample() {
            return Ok(Some(SymbolicPoint::Base(x)));
        }
        let shared_vertical = match first {
            BasisNeighborhood::Basic { m, .. } => rest
                .iter()
                .all(|u| matches!(u, BasisNeighborhood::Basic { m: j, .. } if j == m))
                .then_some(SymbolicPoint::Vertical(*m)),
            BasisNeighborhood::Ball { .. } => None,
        };
        Ok(shared_vertical)
    }

    fn check_query(&self, points: &[SymbolicPoint]) -> Result<()> {
        for p in points {
            self.check_point(p)?;
        }
        let mut sorted: Vec<&SymbolicPoint> = points.iter().collect();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(SymbolicError::DuplicatePoints(w[0].to_string()));
        }
        if points.len() < 2 {
            return Err(SymbolicError::SetTooSmall(points.len()));
        }
        Ok(())
    }

    /// Decides separability of a finite set of distinct points and returns a
    /// basis witness or a containment certificate.
    pub fn separable(&self, points: &[SymbolicPoint]) -> Result<SeparabilityVerdict> {
        self.check_query(points)?;
        let mut bases: Vec<&BigRational> = points
            .iter()
            .filter_map(|p| match p {
                SymbolicPoint::Base(q) => Some(q),
                SymbolicPoint::Vertical(_) => None,
            })
            .collect();
        bases.sort();

        let witness = if bases.len() >= 2 {
            // equal balls of half the smallest gap are pairwise disjoint
            let two = BigRational::from_integer(2.into());
            let radius = bases
                .windows(2)
                .map(|w| w[1] - w[0])
                .min()
                .expect("at least one gap")
                / two;
            points
                .iter()
                .map(|p| {
                    let u = match p {
                        SymbolicPoint::Base(q) => BasisNeighborhood::Ball {
                            center: q.clone(),
                            radius: radius.clone(),
                        },
                        SymbolicPoint::Vertical(m) => BasisNeighborhood::Basic { m: *m, k: 1 },
                    };
                    (p.clone(), u)
                })
                .collect()
        } else if bases.len() == 1 && *bases[0] != half() {
            // ball of radius d/2 around q, U_k with 1/k ≤ d/2, d = |q − 1/2|
            let q = bases[0];
            let d = (q - half()).abs();
            let two = BigRational::from_integer(2.into());
            let radius = &d / &two;
            let k = (&two / &d).ceil().to_integer();
            let k: u64 = k.try_into().map_err(|_| {
                SymbolicError::BadParameter(format!(
                    "point b:{} too close to 1/2 for a machine-size k",
                    format_rational(q)
                ))
            })?;
            points
                .iter()
                .map(|p| {
                    let u = match p {
                        SymbolicPoint::Base(c) => BasisNeighborhood::Ball {
                            center: c.clone(),
                            radius: radius.clone(),
                        },
                        SymbolicPoint::Vertical(m) => BasisNeighborhood::Basic { m: *m, k },
                    };
                    (p.clone(), u)
                })
                .collect()
        } else {
            debug_assert!(points
                .iter()
                .all(|p| p.is_base_half() || matches!(p, SymbolicPoint::Vertical(_))));
            return Ok(SeparabilityVerdict::NonSeparable {
                points: points.to_vec(),
            });
        };
        Ok(SeparabilityVerdict::Separable { witness })
    }

    /// Re-checks a separation witness with exact interval arithmetic: each
    /// neighborhood is owned by (and contains) its point, the points are
    /// exactly `points`, and the total intersection is empty.
    pub fn verify_witness(
        &self,
        points: &[SymbolicPoint],
        witness: &[(SymbolicPoint, BasisNeighborhood)],
    ) -> Result<bool> {
        if witness.len() != points.len()
            || !points.iter().all(|p| witness.iter().any(|(q, _)| q == p))
        {
            return Ok(false);
        }
        for (p, u) in witness {
            if u.owner() != *p || !self.membership(u, p)? {
                return Ok(false);
            }
        }
        let nbhds: Vec<BasisNeighborhood> = witness.iter().map(|(_, u)| u.clone()).collect();
        Ok(self.intersection_nonempty(&nbhds)?.is_none())
    }

    pub fn hausdorff_number(&self) -> SymbolicHausdorffReport {
        match self.verticals {
            VerticalCount::Finite(v) => {
                let mut set = vec![SymbolicPoint::Base(half())];
                set.extend((1..=v).map(SymbolicPoint::Vertical));
                SymbolicHausdorffReport {
                    hausdorff_number: SymbolicHausdorffNumber::Finite(v + 2),
                    largest_nonseparable: ExtremalSet::Finite(set),
                }
            }
            VerticalCount::Omega => SymbolicHausdorffReport {
                hausdorff_number: SymbolicHausdorffNumber::OmegaOne,
                largest_nonseparable: ExtremalSet::HalfAndAllVerticals,
            },
        }
    }

    /// A basis neighborhood of `p` that misses `q`, if one exists.
    fn excluding(&self, p: &SymbolicPoint, q: &SymbolicPoint) -> Option<BasisNeighborhood> {
        let u = match (p, q) {
            (SymbolicPoint::Base(c), SymbolicPoint::Base(d)) => BasisNeighborhood::Ball {
                center: c.clone(),
                radius: (c - d).abs() / BigRational::from_integer(2.into()),
            },
            (SymbolicPoint::Base(c), SymbolicPoint::Vertical(_)) => BasisNeighborhood::Ball {
                center: c.clone(),
                radius: BigRational::one(),
            },
            (SymbolicPoint::Vertical(m), SymbolicPoint::Vertical(_)) => {
                BasisNeighborhood::Basic { m: *m, k: 1 }
            }
            (SymbolicPoint::Vertical(m), SymbolicPoint::Base(d)) => {
                let offset = (d - half()).abs();
                if offset.is_zero() {
                    if !self.t1_variant {
                        return None;
                    }
                    BasisNeighborhood::Basic { m: *m, k: 1 }
                } else {
                    let k = (BigRational::one() / offset).ceil().to_integer();
                    BasisNeighborhood::Basic {
                        m: *m,
                        k: k.try_into().ok()?,
                    }
                }
            }
        };
        debug_assert_eq!(self.membership(&u, q), Ok(false));
        Some(u)
    }

    /// Whether each of `p`, `q` has a basis neighborhood missing the other.
    pub fn t1_status(&self, p: &SymbolicPoint, q: &SymbolicPoint) -> Result<T1Status> {
        self.check_point(p)?;
        self.check_point(q)?;
        if p == q {
            return Err(SymbolicError::DuplicatePoints(p.to_string()));
        }
        let first = self.excluding(p, q);
        let second = self.excluding(q, p);
        let holds = first.is_some() && second.is_some();
        let explanation = match (&first, &second) {
            (Some(_), Some(_)) => format!("each of {p} and {q} has a basic neighborhood missing the other"),
            (None, _) => format!("every basic neighborhood of {p} contains {q}"),
            (_, None) => format!("every basic neighborhood of {q} contains {p}"),
        };
        Ok(T1Status {
            holds,
            first_excludes_second: first,
            second_excludes_first: second,
            explanation,
        })
    }

    /// The subspace keeping every base point and the vertical points
    /// `1..=n` (all of them if there are fewer).
    pub fn restrict(&self, n: u64) -> Result<BugEyedSpace> {
        if n == 0 {
            return Err(SymbolicError::BadParameter(
                "restriction must keep at least one vertical point".into(),
            ));
        }
        let verticals = match self.verticals {
            VerticalCount::Omega => VerticalCount::Finite(n),
            VerticalCount::Finite(v) => VerticalCount::Finite(v.min(n)),
        };
        Ok(BugEyedSpace {
            verticals,
            t1_variant: self.t1_variant,
        })
    }
}
