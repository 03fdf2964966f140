//! Set operators and per-subset classification on finite spaces, plus the
//! derived topologies (α-topology, semi-regularization, ideal expansion).

use serde::Serialize;

use crate::classes::is_scattered;
use crate::error::Result;
use crate::setcore::{check_in_range, validate_topology, FiniteSpace, PointSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OperatorKind {
    Interior,
    Closure,
    Boundary,
    SemiInterior,
    SemiClosure,
}

pub fn core_operator(space: &FiniteSpace, a: PointSet, kind: OperatorKind) -> Result<PointSet> {
    space.check_subset(a)?;
    Ok(match kind {
        OperatorKind::Interior => space.interior(a),
        OperatorKind::Closure => space.closure(a),
        OperatorKind::Boundary => space.boundary(a),
        OperatorKind::SemiInterior => space.semi_interior(a),
        OperatorKind::SemiClosure => space.semi_closure(a),
    })
}

/// `X₁`: points whose singleton is nowhere dense.
pub fn nowhere_dense_points(space: &FiniteSpace) -> PointSet {
    (0..space.n())
        .filter(|&x| is_nowhere_dense(space, PointSet::singleton(x)))
        .collect()
}

pub fn is_nowhere_dense(space: &FiniteSpace, a: PointSet) -> bool {
    space.interior(space.closure(a)).is_empty()
}

pub fn is_semi_open(space: &FiniteSpace, a: PointSet) -> bool {
    a.is_subset(space.closure(space.interior(a)))
}

pub fn is_semi_closed(space: &FiniteSpace, a: PointSet) -> bool {
    space.interior(space.closure(a)).is_subset(a)
}

pub fn is_preopen(space: &FiniteSpace, a: PointSet) -> bool {
    a.is_subset(space.interior(space.closure(a)))
}

pub fn is_alpha_open(space: &FiniteSpace, a: PointSet) -> bool {
    a.is_subset(space.interior(space.closure(space.interior(a))))
}

pub fn is_regular_open(space: &FiniteSpace, a: PointSet) -> bool {
    space.interior(space.closure(a)) == a
}

pub fn regular_open_sets(space: &FiniteSpace) -> Vec<PointSet> {
    space
        .opens()
        .iter()
        .copied()
        .filter(|&u| is_regular_open(space, u))
        .collect()
}

/// Classification of one subset of a finite space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct SetFlags {
    pub open: bool,
    pub closed: bool,
    pub dense: bool,
    pub nowhere_dense: bool,
    pub semi_open: bool,
    pub semi_closed: bool,
    /// Locally dense: `A ⊆ int cl A`.
    pub preopen: bool,
    pub beta_open: bool,
    pub regular_open: bool,
    pub regular_closed: bool,
    pub delta_open: bool,
    pub alpha_open: bool,
    pub sg_closed: bool,
    pub sg_open: bool,
    pub hsg_closed: bool,
    pub hsg_open: bool,
    /// The subspace has no isolated point.
    pub crowded: bool,
    pub perfect: bool,
    /// The subspace topology is discrete.
    pub discrete_subset: bool,
    pub closed_discrete: bool,
    pub scattered: bool,
}

impl SetFlags {
    pub const NAMES: &'static [&'static str] = &[
        "open",
        "closed",
        "dense",
        "nowhere_dense",
        "semi_open",
        "semi_closed",
        "preopen",
        "beta_open",
        "regular_open",
        "regular_closed",
        "delta_open",
        "alpha_open",
        "sg_closed",
        "sg_open",
        "hsg_closed",
        "hsg_open",
        "crowded",
        "perfect",
        "discrete_subset",
        "closed_discrete",
        "scattered",
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
            "beta_open" => self.beta_open,
            "regular_open" => self.regular_open,
            "regular_closed" => self.regular_closed,
            "delta_open" => self.delta_open,
            "alpha_open" => self.alpha_open,
            "sg_closed" => self.sg_closed,
            "sg_open" => self.sg_open,
            "hsg_closed" => self.hsg_closed,
            "hsg_open" => self.hsg_open,
            "crowded" => self.crowded,
            "perfect" => self.perfect,
            "discrete_subset" => self.discrete_subset,
            "closed_discrete" => self.closed_discrete,
            "scattered" => self.scattered,
            _ => return None,
        })
    }
}

/// Per-space data shared by every subset classification.
#[derive(Debug, Clone)]
pub struct FlagContext<'a> {
    pub space: &'a FiniteSpace,
    pub x1: PointSet,
    pub regular_opens: Vec<PointSet>,
}

impl<'a> FlagContext<'a> {
    pub fn new(space: &'a FiniteSpace) -> Self {
        FlagContext {
            space,
            x1: nowhere_dense_points(space),
            regular_opens: regular_open_sets(space),
        }
    }

    /// sg-closed via `X₁ ∩ int cl A ⊆ A`.
    pub fn sg_closed(&self, a: PointSet) -> bool {
        let s = self.space;
        (self.x1 & s.interior(s.closure(a))).is_subset(a)
    }

    pub fn sg_open(&self, a: PointSet) -> bool {
        self.sg_closed(self.space.complement(a))
    }

    /// hsg-closed via `X₁ ∩ int cl A = ∅`.
    pub fn hsg_closed(&self, a: PointSet) -> bool {
        let s = self.space;
        (self.x1 & s.interior(s.closure(a))).is_empty()
    }

    pub fn flags(&self, a: PointSet) -> SetFlags {
        let s = self.space;
        let n = s.n();
        let int = s.interior(a);
        let cl = s.closure(a);
        let int_cl = s.interior(cl);
        let cl_int = s.closure(int);
        let open = int == a;
        let closed = cl == a;
        let isolated = s.isolated_in(a);
        let crowded = isolated.is_empty();
        let discrete_subset = isolated == a;
        let delta_union = self
            .regular_opens
            .iter()
            .filter(|r| r.is_subset(a))
            .fold(PointSet::EMPTY, |acc, &r| acc | r);
        SetFlags {
            open,
            closed,
            dense: cl == PointSet::full(n),
            nowhere_dense: int_cl.is_empty(),
            semi_open: a.is_subset(cl_int),
            semi_closed: int_cl.is_subset(a),
            preopen: a.is_subset(int_cl),
            beta_open: a.is_subset(s.closure(int_cl)),
            regular_open: int_cl == a,
            regular_closed: cl_int == a,
            delta_open: delta_union == a,
            alpha_open: a.is_subset(s.interior(cl_int)),
            sg_closed: self.sg_closed(a),
            sg_open: self.sg_open(a),
            hsg_closed: self.hsg_closed(a),
            // Every subset of A is sg-open iff A avoids X₁.
            hsg_open: a.is_disjoint(self.x1),
            crowded,
            perfect: closed && crowded,
            discrete_subset,
            closed_discrete: closed && discrete_subset,
            scattered: is_scattered(s, a),
        }
    }

    /// Flags of every subset, indexed by mask.
    pub fn all_flags(&self) -> Vec<SetFlags> {
        self.space.subsets().map(|a| self.flags(a)).collect()
    }
}

pub fn set_flags(space: &FiniteSpace, a: PointSet) -> Result<SetFlags> {
    space.check_subset(a)?;
    Ok(FlagContext::new(space).flags(a))
}

/// All semi-open subsets, in canonical order.
pub fn semi_open_sets(space: &FiniteSpace) -> Vec<PointSet> {
    space.subsets().filter(|&a| is_semi_open(space, a)).collect()
}

/// sg-closedness straight from the definition: `sCl(A) ⊆ U` for every
/// semi-open `U ⊇ A`.
pub fn is_sg_closed_def(space: &FiniteSpace, a: PointSet) -> Result<bool> {
    space.check_subset(a)?;
    Ok(sg_closed_by_definition(space, a))
}

pub(crate) fn sg_closed_by_definition(space: &FiniteSpace, a: PointSet) -> bool {
    let scl = space.semi_closure(a);
    let outside = space.complement(a);
    // Supersets of A are A ∪ B for B ⊆ X \ A.
    outside.subsets().all(|b| {
        let u = a | b;
        !is_semi_open(space, u) || scl.is_subset(u)
    })
}

/// hsg-closedness straight from the definition: every subset is sg-closed.
pub fn is_hsg_closed_def(space: &FiniteSpace, a: PointSet) -> Result<bool> {
    space.check_subset(a)?;
    Ok(a.subsets().all(|b| sg_closed_by_definition(space, b)))
}

/// Hereditary sg-openness straight from the definition.
pub fn is_hsg_open_def(space: &FiniteSpace, a: PointSet) -> Result<bool> {
    space.check_subset(a)?;
    Ok(a
        .subsets()
        .all(|b| sg_closed_by_definition(space, space.complement(b))))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DerivedKind {
    /// `τ^α = {U \ N : U open, N nowhere dense}`
    Alpha,
    /// Semi-regularization: generated by the regular open sets.
    Delta,
}

pub fn derived_topology(space: &FiniteSpace, kind: DerivedKind) -> FiniteSpace {
    let n = space.n();
    match kind {
        DerivedKind::Alpha => {
            let nowhere_dense: Vec<PointSet> = space
                .subsets()
                .filter(|&a| is_nowhere_dense(space, a))
                .collect();
            let mut family: Vec<PointSet> = space
                .opens()
                .iter()
                .flat_map(|&u| nowhere_dense.iter().map(move |&m| u - m))
                .collect();
            family.sort_unstable();
            family.dedup();
            validate_topology(n, &family).expect("the α-sets of a space form a topology")
        }
        DerivedKind::Delta => FiniteSpace::generated_by(n, regular_open_sets(space))
            .expect("ground size already validated"),
    }
}

/// An ideal of subsets given by generators; on a finite ground the ideal is
/// the power set of the union of the generators.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct IdealSpec {
    pub generators: Vec<PointSet>,
}

impl IdealSpec {
    pub fn new(generators: Vec<PointSet>) -> Self {
        IdealSpec { generators }
    }

    pub fn support(&self) -> PointSet {
        self.generators
            .iter()
            .fold(PointSet::EMPTY, |acc, &g| acc | g)
    }

    pub fn contains(&self, a: PointSet) -> bool {
        a.is_subset(self.support())
    }

    pub fn members(&self) -> impl Iterator<Item = PointSet> {
        self.support().subsets()
    }
}

/// `τ[I]`: the smallest topology containing `τ` in which every member of the
/// ideal is closed.
pub fn expand_by_ideal(space: &FiniteSpace, ideal: &IdealSpec) -> Result<FiniteSpace> {
    let n = space.n();
    for &g in &ideal.generators {
        check_in_range(n, g)?;
    }
    let family = space
        .opens()
        .iter()
        .copied()
        .chain(ideal.members().map(|m| m.complement(n)));
    FiniteSpace::generated_by(n, family)
}

/// Nonempty closed, crowded, nowhere dense subsets in canonical order.
pub fn perfect_nowhere_dense_sets(space: &FiniteSpace) -> Vec<PointSet> {
    space
        .subsets()
        .filter(|&a| {
            !a.is_empty()
                && space.is_closed(a)
                && space.isolated_in(a).is_empty()
                && is_nowhere_dense(space, a)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setcore::fixture;

    fn ps(points: &[usize]) -> PointSet {
        PointSet::from_points(points.iter().copied())
    }

    #[test]
    fn core_operator_examples() {
        let sierp = fixture("SIERP").unwrap();
        assert_eq!(
            core_operator(&sierp, ps(&[1]), OperatorKind::SemiInterior).unwrap(),
            ps(&[])
        );
        assert_eq!(
            core_operator(&sierp, ps(&[0]), OperatorKind::SemiClosure).unwrap(),
            ps(&[0, 1])
        );
        for name in ["SIERP", "CONE3", "PP3", "DISC_3"] {
            let s = fixture(name).unwrap();
            assert_eq!(core_operator(&s, ps(&[]), OperatorKind::Closure).unwrap(), ps(&[]));
        }
        assert!(core_operator(&sierp, ps(&[4]), OperatorKind::Interior).is_err());
    }

    #[test]
    fn set_flags_examples() {
        let sierp = fixture("SIERP").unwrap();
        let f = set_flags(&sierp, ps(&[1])).unwrap();
        assert!(f.nowhere_dense && f.hsg_closed && f.sg_closed && f.semi_closed);
        assert!(!f.open);

        let dp = fixture("DOUBLEPT3").unwrap();
        let f = set_flags(&dp, ps(&[0, 1])).unwrap();
        assert!(!f.sg_closed);
        assert!(f.open);

        for name in ["SIERP", "CONE3", "PP3", "DOUBLEPT3", "LRAY_4"] {
            let s = fixture(name).unwrap();
            let f = set_flags(&s, s.ground()).unwrap();
            assert!(f.open && f.closed && f.dense && f.sg_closed && f.sg_open);
        }
    }

    #[test]
    fn definitional_sg_closed_examples() {
        let sierp = fixture("SIERP").unwrap();
        assert!(!is_sg_closed_def(&sierp, ps(&[0])).unwrap());
        assert!(is_sg_closed_def(&sierp, ps(&[1])).unwrap());
        for name in ["SIERP", "CONE3", "PP3", "INDISC_2"] {
            let s = fixture(name).unwrap();
            assert!(is_sg_closed_def(&s, PointSet::EMPTY).unwrap());
            assert!(is_hsg_closed_def(&s, PointSet::EMPTY).unwrap());
        }
    }

    #[test]
    fn definitional_hsg_closed_examples() {
        let cone = fixture("CONE3").unwrap();
        assert!(is_hsg_closed_def(&cone, ps(&[1, 2])).unwrap());
        let pp = fixture("PP3").unwrap();
        assert!(!is_hsg_closed_def(&pp, ps(&[1])).unwrap());
        // cl {1} = X, so int cl {1} contains the extra point 2.
        assert_eq!(pp.interior(pp.closure(ps(&[1]))), pp.ground());
    }

    #[test]
    fn derived_topology_examples() {
        let cone = fixture("CONE3").unwrap();
        let alpha = derived_topology(&cone, DerivedKind::Alpha);
        assert_eq!(
            alpha.opens(),
            &[ps(&[]), ps(&[0]), ps(&[0, 1]), ps(&[0, 2]), ps(&[0, 1, 2])]
        );
        let sierp = fixture("SIERP").unwrap();
        assert_eq!(
            derived_topology(&sierp, DerivedKind::Delta),
            fixture("INDISC_2").unwrap()
        );
        let disc = fixture("DISC_3").unwrap();
        assert_eq!(derived_topology(&disc, DerivedKind::Alpha), disc);
    }

    #[test]
    fn expand_by_ideal_examples() {
        let cone = fixture("CONE3").unwrap();
        assert_eq!(expand_by_ideal(&cone, &IdealSpec::new(vec![ps(&[])])).unwrap(), cone);
        assert_eq!(
            expand_by_ideal(&cone, &IdealSpec::new(vec![ps(&[1, 2])])).unwrap().opens(),
            &[ps(&[]), ps(&[0]), ps(&[0, 1]), ps(&[0, 2]), ps(&[0, 1, 2])]
        );
        let d2 = fixture("DISC_2").unwrap();
        assert_eq!(expand_by_ideal(&d2, &IdealSpec::new(vec![ps(&[0])])).unwrap(), d2);
        assert!(expand_by_ideal(&d2, &IdealSpec::new(vec![ps(&[5])])).is_err());
    }

    #[test]
    fn perfect_nowhere_dense_examples() {
        assert_eq!(perfect_nowhere_dense_sets(&fixture("CONE3").unwrap()), vec![ps(&[1, 2])]);
        assert!(perfect_nowhere_dense_sets(&fixture("DISC_3").unwrap()).is_empty());
        assert!(perfect_nowhere_dense_sets(&fixture("SIERP").unwrap()).is_empty());
    }

    #[test]
    fn flag_names_cover_every_field() {
        let f = SetFlags::default();
        for name in SetFlags::NAMES {
            assert_eq!(f.get(name), Some(false), "{name}");
        }
        assert_eq!(f.get("bogus"), None);
        let json = serde_json::to_value(f).unwrap();
        assert_eq!(json.as_object().unwrap().len(), SetFlags::NAMES.len());
    }
}
