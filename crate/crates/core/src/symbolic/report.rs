use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use super::space::{SymbolicSet, SymbolicSpace};
use super::trace::Trace;

/// Exceptions of sampled shapes are drawn from `0..WINDOW`.
const WINDOW: u64 = 3;

/// Trace points probed past the window when testing a cover's tail.
const TAIL_PROBE: u64 = WINDOW + 4;

/// Representative shapes: every periodic pattern of period at most 2,
/// flipped on any subset of the window, with and without the distinguished
/// point. Each family's predicates depend on a shape only through features
/// these representatives exhaust (finiteness, cofiniteness, size up to 2,
/// least element, membership of 0).
pub fn shape_universe(space: SymbolicSpace) -> Vec<SymbolicSet> {
    let patterns = [
        Trace::empty(),
        Trace::all(),
        Trace::periodic(2, &[0]).expect("valid period"),
        Trace::periodic(2, &[1]).expect("valid period"),
    ];
    let specials: &[bool] = if space.has_special() { &[false, true] } else { &[false] };
    let mut shapes = BTreeSet::new();
    for base in &patterns {
        for flips in 0u32..1 << WINDOW {
            let trace = (0..WINDOW)
                .filter(|x| flips >> x & 1 == 1)
                .fold(base.clone(), |t, x| t.toggled(x));
            for &s in specials {
                shapes.insert(SymbolicSet::new(s, trace.clone()));
            }
        }
    }
    shapes.into_iter().collect()
}

/// A family of subsets described as a shape predicate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdealDescription {
    OnlyEmpty,
    SubsetsOf(SymbolicSet),
    FiniteSets,
    AllSets,
    AtMostPoints(usize),
    AtMostTracePoints(usize),
    /// Sets missing infinitely many non-distinguished points.
    CoinfiniteTrace,
    Unclassified,
}

impl fmt::Display for IdealDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealDescription::OnlyEmpty => write!(f, "{{∅}}"),
            IdealDescription::SubsetsOf(s) => write!(f, "subsets of {s}"),
            IdealDescription::FiniteSets => write!(f, "finite sets"),
            IdealDescription::AllSets => write!(f, "all sets"),
            IdealDescription::AtMostPoints(k) => write!(f, "sets of at most {k} points"),
            IdealDescription::AtMostTracePoints(k) => {
                write!(f, "sets with at most {k} non-distinguished points")
            }
            IdealDescription::CoinfiniteTrace => {
                write!(f, "sets missing infinitely many non-distinguished points")
            }
            IdealDescription::Unclassified => write!(f, "unclassified"),
        }
    }
}

impl Serialize for IdealDescription {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn describe(universe: &[SymbolicSet], member: impl Fn(&SymbolicSet) -> bool) -> IdealDescription {
    let members: Vec<&SymbolicSet> = universe.iter().filter(|a| member(a)).collect();
    let matches = |pred: &dyn Fn(&SymbolicSet) -> bool| {
        universe.iter().all(|a| pred(a) == member(a))
    };
    if members.len() == universe.len() {
        return IdealDescription::AllSets;
    }
    if matches(&|a| a.is_empty()) {
        return IdealDescription::OnlyEmpty;
    }
    if matches(&|a| a.is_finite()) {
        return IdealDescription::FiniteSets;
    }
    for k in 1..=2 {
        if matches(&|a| a.count().is_some_and(|c| c <= k)) {
            return IdealDescription::AtMostPoints(k);
        }
        if matches(&|a| a.trace.count().is_some_and(|c| c <= k)) {
            return IdealDescription::AtMostTracePoints(k);
        }
    }
    if matches(&|a| !a.trace.is_cofinite()) {
        return IdealDescription::CoinfiniteTrace;
    }
    let support = members
        .iter()
        .fold(SymbolicSet::empty(), |acc, a| acc.union(a));
    if matches(&|a| a.is_subset(&support)) {
        return IdealDescription::SubsetsOf(support);
    }
    IdealDescription::Unclassified
}

/// Decides compactness for covers drawn from `family` by shape arguments.
///
/// Compact when some point lies only in the ground member, or when every
/// nonempty member is cofinite. Not compact when some member `C` with
/// infinite complement stays a member after adding any single outside point:
/// the sets `C ∪ {t}` then cover with no finite subcover. `None` when
/// neither argument applies.
pub fn compact_by_covers(
    space: SymbolicSpace,
    family: impl Fn(&SymbolicSet) -> bool,
) -> Option<bool> {
    let universe = shape_universe(space);
    let ground = space.ground();
    let members: Vec<&SymbolicSet> = universe.iter().filter(|a| family(a)).collect();

    let mut probes: Vec<SymbolicSet> = (0..TAIL_PROBE)
        .map(|x| SymbolicSet::trace(Trace::finite([x])))
        .collect();
    if space.has_special() {
        probes.push(SymbolicSet::special_point());
    }
    let pinned = probes.iter().any(|q| {
        members
            .iter()
            .filter(|m| q.is_subset(m))
            .all(|m| **m == ground)
    });
    let cofinite = members
        .iter()
        .all(|m| m.is_empty() || m.trace.is_cofinite());
    let compact = pinned || cofinite;

    let escapes = members.iter().any(|c| {
        let outside = space.complement(c);
        if outside.is_finite() || outside.special {
            return false;
        }
        outside
            .trace
            .members_below(TAIL_PROBE)
            .into_iter()
            .all(|t| family(&c.union(&SymbolicSet::trace(Trace::finite([t])))))
    });

    match (compact, escapes) {
        (true, false) => Some(true),
        (false, true) => Some(false),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealDescriptions {
    /// Nowhere dense sets.
    pub n: IdealDescription,
    /// Scattered sets.
    pub s: IdealDescription,
    /// hsg-closed sets (not an ideal in general).
    pub hsg_closed: IdealDescription,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymbolicReport {
    pub family: SymbolicSpace,
    pub sg_compact: bool,
    pub semi_compact: bool,
    /// Every nowhere dense set is finite.
    pub c2: bool,
    /// Every hsg-closed set is finite.
    pub c3: bool,
    pub n_scattered: bool,
    pub hsg_scattered: bool,
    pub scattered: bool,
    pub crowded: bool,
    pub cellular_infinite: bool,
    /// sg-compactness decided from covers by sg-open shapes.
    pub sg_compact_by_covers: Option<bool>,
    /// Semi-compactness decided from covers by semi-open shapes.
    pub semi_compact_by_covers: Option<bool>,
    pub x1: SymbolicSet,
    pub isolated: SymbolicSet,
    pub ideal_descriptions: IdealDescriptions,
}

impl SymbolicReport {
    pub const BOOL_NAMES: &'static [&'static str] = &[
        "sg_compact",
        "semi_compact",
        "c2",
        "c3",
        "n_scattered",
        "hsg_scattered",
        "scattered",
        "crowded",
        "cellular_infinite",
    ];

    pub fn get(&self, name: &str) -> Option<bool> {
        Some(match name {
            "sg_compact" => self.sg_compact,
            "semi_compact" => self.semi_compact,
            "c2" => self.c2,
            "c3" => self.c3,
            "n_scattered" => self.n_scattered,
            "hsg_scattered" => self.hsg_scattered,
            "scattered" => self.scattered,
            "crowded" => self.crowded,
            "cellular_infinite" => self.cellular_infinite,
            _ => return None,
        })
    }
}

/// An infinite cellular family exists iff there are infinitely many
/// isolated points; otherwise every pair of nonempty opens of the sampled
/// families meets.
fn cellular_infinite(space: SymbolicSpace, universe: &[SymbolicSet]) -> bool {
    if !space.isolated_points().is_finite() {
        return true;
    }
    let opens: Vec<&SymbolicSet> = universe
        .iter()
        .filter(|a| !a.is_empty() && space.is_open(a))
        .collect();
    let pairwise_meet = opens
        .iter()
        .all(|u| opens.iter().all(|v| !u.is_disjoint(v)));
    assert!(pairwise_meet, "{space}: disjoint opens with finitely many isolated points");
    false
}

pub fn sym_space_report(space: SymbolicSpace) -> SymbolicReport {
    let universe = shape_universe(space);
    let nowhere_dense: Vec<&SymbolicSet> = universe
        .iter()
        .filter(|a| space.is_nowhere_dense(a))
        .collect();
    let hsg: Vec<&SymbolicSet> = universe.iter().filter(|a| space.is_hsg_closed(a)).collect();
    let c2 = nowhere_dense.iter().all(|a| a.is_finite());
    let c3 = hsg.iter().all(|a| a.is_finite());
    let cellular = cellular_infinite(space, &universe);
    SymbolicReport {
        family: space,
        sg_compact: c3,
        semi_compact: c2 && !cellular,
        c2,
        c3,
        n_scattered: nowhere_dense.iter().all(|a| space.is_scattered(a)),
        hsg_scattered: hsg.iter().all(|a| space.is_scattered(a)),
        scattered: space.is_scattered(&space.ground()),
        crowded: space.isolated_points().is_empty(),
        cellular_infinite: cellular,
        sg_compact_by_covers: compact_by_covers(space, |a| space.is_sg_closed(&space.complement(a))),
        semi_compact_by_covers: compact_by_covers(space, |a| space.is_semi_open(a)),
        x1: space.x1(),
        isolated: space.isolated_points(),
        ideal_descriptions: IdealDescriptions {
            n: describe(&universe, |a| space.is_nowhere_dense(a)),
            s: describe(&universe, |a| space.is_scattered(a)),
            hsg_closed: describe(&universe, |a| space.is_hsg_closed(a)),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn universe_is_rich_and_well_formed() {
        for space in SymbolicSpace::ALL {
            let u = shape_universe(space);
            assert_eq!(u.len(), if space.has_special() { 64 } else { 32 });
            assert!(u.contains(&space.ground()));
            assert!(u.contains(&SymbolicSet::empty()));
            assert!(u.iter().all(|a| space.check(a).is_ok()));
        }
    }

    #[test]
    fn cofinite_report() {
        let r = sym_space_report(SymbolicSpace::Cofinite);
        assert!(r.sg_compact && r.crowded && r.hsg_scattered && !r.scattered);
        assert_eq!(r.ideal_descriptions.n, IdealDescription::FiniteSets);
        assert_eq!(r.ideal_descriptions.s, IdealDescription::FiniteSets);
        assert_eq!(r.sg_compact_by_covers, Some(true));
    }

    #[test]
    fn particular_point_report() {
        let r = sym_space_report(SymbolicSpace::ParticularPoint);
        assert!(r.sg_compact && r.c3);
        assert_eq!(
            r.ideal_descriptions.hsg_closed,
            IdealDescription::SubsetsOf(SymbolicSet::special_point())
        );
        assert_eq!(r.sg_compact_by_covers, Some(true));
    }

    #[test]
    fn one_point_compactification_report() {
        let r = sym_space_report(SymbolicSpace::OnePointCompactification);
        assert!(r.c2 && r.cellular_infinite && !r.semi_compact && !r.c3 && r.scattered);
        assert_eq!(r.sg_compact_by_covers, Some(false));
        assert_eq!(r.semi_compact_by_covers, Some(false));
        assert_eq!(r.ideal_descriptions.hsg_closed, IdealDescription::CoinfiniteTrace);
    }

    #[test]
    fn ray_reports() {
        let l = sym_space_report(SymbolicSpace::LeftRay);
        assert!(l.scattered && !l.crowded && !l.c2 && !l.c3);
        assert_eq!(l.ideal_descriptions.s, IdealDescription::AllSets);
        let r = sym_space_report(SymbolicSpace::RightRay);
        assert!(r.crowded && r.sg_compact);
        assert_eq!(r.ideal_descriptions.s, IdealDescription::FiniteSets);
    }

    #[test]
    fn indiscrete_report() {
        let r = sym_space_report(SymbolicSpace::IndiscreteInfinite);
        assert!(r.n_scattered && !r.hsg_scattered && !r.sg_compact && r.semi_compact);
        assert_eq!(r.sg_compact_by_covers, Some(false));
        assert_eq!(r.ideal_descriptions.s, IdealDescription::AtMostPoints(1));
    }

    #[test]
    fn cover_oracle_agrees_with_characterizations() {
        for space in SymbolicSpace::ALL {
            let r = sym_space_report(space);
            assert_eq!(r.sg_compact_by_covers, Some(r.sg_compact), "{space}");
            assert_eq!(r.semi_compact_by_covers, Some(r.semi_compact), "{space}");
        }
    }
}
