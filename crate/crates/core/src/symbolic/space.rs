use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::trace::Trace;
use crate::error::{Result, TopoError};

/// One of the countably infinite witness spaces.
///
/// Trace points are the naturals. `ParticularPoint` and
/// `OnePointCompactification` carry one extra distinguished point (`p`, `∞`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymbolicSpace {
    Cofinite,
    /// `A ∪ {p}` with opens `∅, A, X`.
    ParticularPoint,
    /// `D ∪ {∞}`, `D` discrete, neighbourhoods of `∞` cofinite.
    OnePointCompactification,
    IndiscreteInfinite,
    /// Opens are the initial segments of ω.
    LeftRay,
    /// Opens are the final segments of ω.
    RightRay,
}

impl SymbolicSpace {
    pub const ALL: [SymbolicSpace; 6] = [
        SymbolicSpace::Cofinite,
        SymbolicSpace::ParticularPoint,
        SymbolicSpace::OnePointCompactification,
        SymbolicSpace::IndiscreteInfinite,
        SymbolicSpace::LeftRay,
        SymbolicSpace::RightRay,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SymbolicSpace::Cofinite => "cofinite",
            SymbolicSpace::ParticularPoint => "pp",
            SymbolicSpace::OnePointCompactification => "opc",
            SymbolicSpace::IndiscreteInfinite => "indiscrete",
            SymbolicSpace::LeftRay => "lray",
            SymbolicSpace::RightRay => "rray",
        }
    }

    /// Label of the distinguished point, if the family has one.
    pub fn special_label(self) -> Option<&'static str> {
        match self {
            SymbolicSpace::ParticularPoint => Some("p"),
            SymbolicSpace::OnePointCompactification => Some("∞"),
            _ => None,
        }
    }

    pub fn has_special(self) -> bool {
        self.special_label().is_some()
    }

    pub fn ground(self) -> SymbolicSet {
        SymbolicSet::new(self.has_special(), Trace::all())
    }

    pub fn check(self, a: &SymbolicSet) -> Result<()> {
        if a.special && !self.has_special() {
            return Err(TopoError::MalformedShape(format!(
                "{} has no distinguished point",
                self.name()
            )));
        }
        Ok(())
    }

    pub fn complement(self, a: &SymbolicSet) -> SymbolicSet {
        SymbolicSet::new(self.has_special() && !a.special, a.trace.complement())
    }

    pub fn interior(self, a: &SymbolicSet) -> SymbolicSet {
        let t = &a.trace;
        match self {
            SymbolicSpace::Cofinite => {
                if t.is_cofinite() {
                    a.clone()
                } else {
                    SymbolicSet::empty()
                }
            }
            SymbolicSpace::IndiscreteInfinite => {
                if t.is_all() {
                    a.clone()
                } else {
                    SymbolicSet::empty()
                }
            }
            SymbolicSpace::ParticularPoint => {
                if t.is_all() {
                    a.clone()
                } else {
                    SymbolicSet::empty()
                }
            }
            SymbolicSpace::OnePointCompactification => {
                SymbolicSet::new(a.special && t.is_cofinite(), t.clone())
            }
            SymbolicSpace::LeftRay => match t.mex() {
                None => a.clone(),
                Some(k) => SymbolicSet::trace(Trace::initial_segment(k)),
            },
            SymbolicSpace::RightRay => {
                if t.is_cofinite() {
                    let start = t.complement().greatest().map_or(0, |m| m + 1);
                    SymbolicSet::trace(Trace::final_segment(start))
                } else {
                    SymbolicSet::empty()
                }
            }
        }
    }

    pub fn closure(self, a: &SymbolicSet) -> SymbolicSet {
        let t = &a.trace;
        if a.is_empty() {
            return SymbolicSet::empty();
        }
        match self {
            SymbolicSpace::Cofinite => {
                if t.is_finite() {
                    a.clone()
                } else {
                    self.ground()
                }
            }
            SymbolicSpace::IndiscreteInfinite => self.ground(),
            SymbolicSpace::ParticularPoint => {
                if t.is_empty() {
                    a.clone()
                } else {
                    self.ground()
                }
            }
            SymbolicSpace::OnePointCompactification => {
                SymbolicSet::new(a.special || !t.is_finite(), t.clone())
            }
            SymbolicSpace::LeftRay => {
                let start = t.least().expect("nonempty trace");
                SymbolicSet::trace(Trace::final_segment(start))
            }
            SymbolicSpace::RightRay => match t.greatest() {
                Some(m) => SymbolicSet::trace(Trace::initial_segment(m + 1)),
                None => self.ground(),
            },
        }
    }

    pub fn boundary(self, a: &SymbolicSet) -> SymbolicSet {
        self.closure(a).difference(&self.interior(a))
    }

    pub fn is_open(self, a: &SymbolicSet) -> bool {
        self.interior(a) == *a
    }

    pub fn is_closed(self, a: &SymbolicSet) -> bool {
        self.closure(a) == *a
    }

    pub fn is_nowhere_dense(self, a: &SymbolicSet) -> bool {
        self.interior(&self.closure(a)).is_empty()
    }

    /// `X₁`: points whose singleton is nowhere dense.
    pub fn x1(self) -> SymbolicSet {
        match self {
            SymbolicSpace::Cofinite | SymbolicSpace::RightRay => self.ground(),
            SymbolicSpace::IndiscreteInfinite => SymbolicSet::empty(),
            SymbolicSpace::ParticularPoint | SymbolicSpace::OnePointCompactification => {
                SymbolicSet::special_point()
            }
            SymbolicSpace::LeftRay => SymbolicSet::trace(Trace::final_segment(1)),
        }
    }

    /// Points whose singleton is open.
    pub fn isolated_points(self) -> SymbolicSet {
        match self {
            SymbolicSpace::OnePointCompactification => SymbolicSet::trace(Trace::all()),
            SymbolicSpace::LeftRay => SymbolicSet::trace(Trace::finite([0])),
            _ => SymbolicSet::empty(),
        }
    }

    /// Whether `a`, as a subspace, is scattered.
    pub fn is_scattered(self, a: &SymbolicSet) -> bool {
        let t = &a.trace;
        match self {
            SymbolicSpace::Cofinite | SymbolicSpace::RightRay => t.is_finite(),
            SymbolicSpace::IndiscreteInfinite => t.count().is_some_and(|c| c <= 1),
            SymbolicSpace::ParticularPoint => t.count().is_some_and(|c| c <= 1),
            SymbolicSpace::OnePointCompactification | SymbolicSpace::LeftRay => true,
        }
    }

    pub fn is_sg_closed(self, a: &SymbolicSet) -> bool {
        self.x1()
            .intersection(&self.interior(&self.closure(a)))
            .is_subset(a)
    }

    pub fn is_hsg_closed(self, a: &SymbolicSet) -> bool {
        self.x1()
            .intersection(&self.interior(&self.closure(a)))
            .is_empty()
    }

    pub fn is_semi_open(self, a: &SymbolicSet) -> bool {
        a.is_subset(&self.closure(&self.interior(a)))
    }

    pub fn flags(self, a: &SymbolicSet) -> SymbolicFlags {
        let int = self.interior(a);
        let cl = self.closure(a);
        let int_cl = self.interior(&cl);
        let cl_int = self.closure(&int);
        SymbolicFlags {
            open: int == *a,
            closed: cl == *a,
            dense: cl == self.ground(),
            nowhere_dense: int_cl.is_empty(),
            semi_open: a.is_subset(&cl_int),
            semi_closed: int_cl.is_subset(a),
            preopen: a.is_subset(&int_cl),
            alpha_open: a.is_subset(&self.interior(&cl_int)),
            regular_open: int_cl == *a,
            sg_closed: self.is_sg_closed(a),
            sg_open: self.is_sg_closed(&self.complement(a)),
            hsg_closed: self.is_hsg_closed(a),
            scattered: self.is_scattered(a),
            finite: a.is_finite(),
        }
    }
}

impl fmt::Display for SymbolicSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SymbolicSpace {
    type Err = TopoError;

    fn from_str(s: &str) -> Result<Self> {
        SymbolicSpace::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| TopoError::UnknownFixture(s.to_string()))
    }
}

impl Serialize for SymbolicSpace {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// A subset of a symbolic space: distinguished-point membership plus trace.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymbolicSet {
    pub special: bool,
    pub trace: Trace,
}

impl SymbolicSet {
    pub fn new(special: bool, trace: Trace) -> Self {
        SymbolicSet { special, trace }
    }

    pub fn empty() -> Self {
        SymbolicSet::new(false, Trace::empty())
    }

    pub fn trace(trace: Trace) -> Self {
        SymbolicSet::new(false, trace)
    }

    pub fn special_point() -> Self {
        SymbolicSet::new(true, Trace::empty())
    }

    pub fn with_special(&self, special: bool) -> Self {
        SymbolicSet::new(special, self.trace.clone())
    }

    pub fn is_empty(&self) -> bool {
        !self.special && self.trace.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.trace.is_finite()
    }

    /// Total number of points of a finite set.
    pub fn count(&self) -> Option<usize> {
        self.trace.count().map(|c| c + self.special as usize)
    }

    pub fn union(&self, other: &Self) -> Self {
        SymbolicSet::new(self.special || other.special, self.trace.union(&other.trace))
    }

    pub fn intersection(&self, other: &Self) -> Self {
        SymbolicSet::new(
            self.special && other.special,
            self.trace.intersection(&other.trace),
        )
    }

    pub fn difference(&self, other: &Self) -> Self {
        SymbolicSet::new(
            self.special && !other.special,
            self.trace.difference(&other.trace),
        )
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        (!self.special || other.special) && self.trace.is_subset(&other.trace)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.intersection(other).is_empty()
    }
}

impl fmt::Display for SymbolicSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.special, self.trace.is_empty()) {
            (false, _) => write!(f, "{}", self.trace),
            (true, true) => write!(f, "{{*}}"),
            (true, false) => write!(f, "{{*}} ∪ {}", self.trace),
        }
    }
}

impl fmt::Debug for SymbolicSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for SymbolicSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SymOperatorKind {
    Interior,
    Closure,
    Boundary,
}

pub fn sym_operator(space: SymbolicSpace, a: &SymbolicSet, kind: SymOperatorKind) -> Result<SymbolicSet> {
    space.check(a)?;
    Ok(match kind {
        SymOperatorKind::Interior => space.interior(a),
        SymOperatorKind::Closure => space.closure(a),
        SymOperatorKind::Boundary => space.boundary(a),
    })
}

/// Classification of one symbolic subset. Field names agree with the
/// finite [`SetFlags`](crate::operators::SetFlags) where they overlap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct SymbolicFlags {
    pub open: bool,
    pub closed: bool,
    pub dense: bool,
    pub nowhere_dense: bool,
    pub semi_open: bool,
    pub semi_closed: bool,
    pub preopen: bool,
    pub alpha_open: bool,
    pub regular_open: bool,
    pub sg_closed: bool,
    pub sg_open: bool,
    pub hsg_closed: bool,
    pub scattered: bool,
    pub finite: bool,
}

impl SymbolicFlags {
    pub const NAMES: &'static [&'static str] = &[
        "open",
        "closed",
        "dense",
        "nowhere_dense",
        "semi_open",
        "semi_closed",
        "preopen",
        "alpha_open",
        "regular_open",
        "sg_closed",
        "sg_open",
        "hsg_closed",
        "scattered",
        "finite",
    ];

    pub fn get(&self, name: &str) -> Option<bool> {
        Some(match name {
            "open" => self.open,
            "closed" => self.closed,
            "dense" => self.dense,
            "nowhere_dense" => self.nowhere_dense,
            "semi_open" => self.semi_open,
            "semi_closed" => self.semi_closed,
            "preopen" => self.preopen,
            "alpha_open" => self.alpha_open,
            "regular_open" => self.regular_open,
            "sg_closed" => self.sg_closed,
            "sg_open" => self.sg_open,
            "hsg_closed" => self.hsg_closed,
            "scattered" => self.scattered,
            "finite" => self.finite,
            _ => return None,
        })
    }
}

pub fn sym_set_flags(space: SymbolicSpace, a: &SymbolicSet) -> Result<SymbolicFlags> {
    space.check(a)?;
    Ok(space.flags(a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn finite(points: &[u64]) -> SymbolicSet {
        SymbolicSet::trace(Trace::finite(points.iter().copied()))
    }

    #[test]
    fn operator_examples() {
        let cof = SymbolicSpace::Cofinite;
        let a = finite(&[1, 2]);
        assert_eq!(sym_operator(cof, &a, SymOperatorKind::Closure).unwrap(), a);
        let b = SymbolicSet::trace(Trace::cofinite([0]));
        assert_eq!(sym_operator(cof, &b, SymOperatorKind::Interior).unwrap(), b);
        let pp = SymbolicSpace::ParticularPoint;
        assert_eq!(
            sym_operator(pp, &finite(&[4]), SymOperatorKind::Closure).unwrap(),
            pp.ground()
        );
    }

    #[test]
    fn malformed_special_point() {
        let a = SymbolicSet::special_point();
        assert!(matches!(
            sym_operator(SymbolicSpace::Cofinite, &a, SymOperatorKind::Interior),
            Err(TopoError::MalformedShape(_))
        ));
        assert!(sym_set_flags(SymbolicSpace::LeftRay, &a).is_err());
        assert!(sym_set_flags(SymbolicSpace::ParticularPoint, &a).is_ok());
    }

    #[test]
    fn flag_examples() {
        let cof = SymbolicSpace::Cofinite;
        assert!(!sym_set_flags(cof, &SymbolicSet::trace(Trace::cofinite([3]))).unwrap().hsg_closed);
        let pp = SymbolicSpace::ParticularPoint;
        for a in [finite(&[0]), finite(&[0, 5]), SymbolicSet::trace(Trace::cofinite([1]))] {
            assert!(!sym_set_flags(pp, &a).unwrap().hsg_closed, "{a}");
        }
        for space in SymbolicSpace::ALL {
            let f = sym_set_flags(space, &SymbolicSet::empty()).unwrap();
            assert!(f.sg_closed && f.nowhere_dense && f.scattered, "{space}");
        }
    }

    #[test]
    fn x1_and_isolated_points_match_singletons() {
        for space in SymbolicSpace::ALL {
            let mut points: Vec<SymbolicSet> = (0..12).map(|x| finite(&[x])).collect();
            if space.has_special() {
                points.push(SymbolicSet::special_point());
            }
            for s in points {
                assert_eq!(space.is_nowhere_dense(&s), s.is_subset(&space.x1()), "{space} {s}");
                assert_eq!(space.is_open(&s), s.is_subset(&space.isolated_points()), "{space} {s}");
            }
        }
    }

    #[test]
    fn family_names_round_trip() {
        for space in SymbolicSpace::ALL {
            assert_eq!(space.name().parse::<SymbolicSpace>().unwrap(), space);
        }
        assert!("reals".parse::<SymbolicSpace>().is_err());
    }

    fn arb_set() -> impl Strategy<Value = (SymbolicSpace, SymbolicSet)> {
        (
            0usize..6,
            any::<bool>(),
            1u32..=3,
            any::<u8>(),
            proptest::collection::btree_set(0u64..10, 0..4),
        )
            .prop_map(|(f, special, p, res, flips)| {
                let space = SymbolicSpace::ALL[f];
                let residues: Vec<u32> = (0..p).filter(|r| res >> r & 1 == 1).collect();
                let trace = flips
                    .into_iter()
                    .fold(Trace::periodic(p, &residues).unwrap(), |t, x| t.toggled(x));
                (space, SymbolicSet::new(special && space.has_special(), trace))
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig { cases: 512, rng_algorithm: proptest::test_runner::RngAlgorithm::ChaCha, ..ProptestConfig::default() })]

        #[test]
        fn de_morgan_duality((space, a) in arb_set()) {
            let int = space.interior(&a);
            let dual = space.complement(&space.closure(&space.complement(&a)));
            prop_assert_eq!(int, dual);
        }

        #[test]
        fn kuratowski_axioms((space, a) in arb_set(), (_, b) in arb_set()) {
            let b = if space.has_special() { b } else { b.with_special(false) };
            let cl = space.closure(&a);
            prop_assert!(a.is_subset(&cl));
            prop_assert_eq!(space.closure(&cl), cl.clone());
            prop_assert_eq!(space.closure(&a.union(&b)), cl.union(&space.closure(&b)));
            let int = space.interior(&a);
            prop_assert!(int.is_subset(&a));
            prop_assert!(space.is_open(&int));
        }

        #[test]
        fn cofinite_identities(a in arb_set().prop_map(|(_, a)| a.with_special(false))) {
            let cof = SymbolicSpace::Cofinite;
            let f = cof.flags(&a);
            prop_assert_eq!(f.sg_closed, a.is_finite() || a == cof.ground());
            prop_assert_eq!(f.hsg_closed, a.is_finite());
        }

        #[test]
        fn particular_point_identities((_, a) in arb_set()) {
            let pp = SymbolicSpace::ParticularPoint;
            let f = pp.flags(&a);
            prop_assert_eq!(f.hsg_closed, a.is_empty() || a == SymbolicSet::special_point());
            if !a.special {
                prop_assert!(f.sg_open);
            } else {
                prop_assert_eq!(f.sg_open, a == pp.ground());
            }
        }
    }
}
