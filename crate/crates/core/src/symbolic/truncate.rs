use serde::Serialize;

use super::space::{SymbolicSet, SymbolicSpace};
use super::trace::Trace;
use crate::error::{Result, TopoError};
use crate::operators::FlagContext;
use crate::setcore::{
    left_ray, particular_point, right_ray, validate_topology, FiniteSpace, PointSet, MAX_POINTS,
};

/// Properties compared between a family and its truncations.
pub const CROSS_CHECKED: &[&str] = &[
    "interior",
    "closure",
    "boundary",
    "open",
    "closed",
    "nowhere_dense",
    "semi_open",
    "semi_closed",
    "preopen",
    "alpha_open",
    "sg_closed",
    "hsg_closed",
    "scattered",
];

const COFINITE_FAITHFUL: &[&str] = &["closure", "closed", "scattered"];

/// A finite analog of a symbolic family.
///
/// Trace points `0..trace_points` become points `0..trace_points`; the
/// distinguished point, if any, is the last point. The last trace point
/// stands in for the infinite tail, so comparisons use only sets avoiding
/// it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Truncation {
    pub family: SymbolicSpace,
    pub space: FiniteSpace,
    pub trace_points: usize,
    pub special: Option<usize>,
    pub faithful: &'static [&'static str],
}

impl Truncation {
    pub fn is_faithful(&self, property: &str) -> bool {
        self.faithful.contains(&property)
    }

    /// Restriction of a symbolic set to the truncated points.
    pub fn restrict(&self, a: &SymbolicSet) -> PointSet {
        let mut out: PointSet = (0..self.trace_points)
            .filter(|&x| a.trace.contains(x as u64))
            .collect();
        if let (Some(p), true) = (self.special, a.special) {
            out.insert(p);
        }
        out
    }

    pub fn lift(&self, s: PointSet) -> SymbolicSet {
        let trace = Trace::finite(s.iter().filter(|&x| x < self.trace_points).map(|x| x as u64));
        let special = self.special.is_some_and(|p| s.contains(p));
        SymbolicSet::new(special, trace)
    }

    /// Finite sets avoiding the tail point, as symbolic sets.
    pub fn domain(&self) -> Vec<SymbolicSet> {
        let tail = self.trace_points.saturating_sub(1);
        let mut carrier = PointSet::full(tail);
        if let Some(p) = self.special {
            carrier.insert(p);
        }
        carrier.subsets().map(|s| self.lift(s)).collect()
    }
}

pub fn truncate(family: SymbolicSpace, n: usize) -> Result<Truncation> {
    let min = if family.has_special() { 2 } else { 1 };
    if n < min || n > MAX_POINTS {
        return Err(TopoError::BadSize(format!(
            "{family} truncates to {min}..={MAX_POINTS} points, got {n}"
        )));
    }
    let special = family.has_special().then_some(n - 1);
    let trace_points = n - special.is_some() as usize;
    let (space, faithful) = match family {
        SymbolicSpace::Cofinite => (FiniteSpace::discrete(n)?, COFINITE_FAITHFUL),
        SymbolicSpace::ParticularPoint => (particular_point(n)?, CROSS_CHECKED),
        SymbolicSpace::OnePointCompactification => {
            let mut opens: Vec<PointSet> = PointSet::full(n - 1).subsets().collect();
            let tail = PointSet::from_points([n - 2, n - 1]);
            opens.extend(PointSet::full(n - 1).subsets().map(|s| s | tail));
            (FiniteSpace::generated_by(n, opens)?, CROSS_CHECKED)
        }
        SymbolicSpace::IndiscreteInfinite => (FiniteSpace::indiscrete(n)?, CROSS_CHECKED),
        SymbolicSpace::LeftRay => (left_ray(n)?, CROSS_CHECKED),
        SymbolicSpace::RightRay => (right_ray(n)?, CROSS_CHECKED),
    };
    Ok(Truncation {
        family,
        space,
        trace_points,
        special,
        faithful,
    })
}

/// Compares every faithful property on every domain set; returns the
/// disagreements.
pub fn cross_check(family: SymbolicSpace, n: usize) -> Result<Vec<String>> {
    let tr = truncate(family, n)?;
    let ctx = FlagContext::new(&tr.space);
    let mut mismatches = Vec::new();
    for a in tr.domain() {
        let s = tr.restrict(&a);
        let sym = family.flags(&a);
        let fin = ctx.flags(s);
        for &prop in tr.faithful {
            let (lhs, rhs) = match prop {
                "interior" => (tr.restrict(&family.interior(&a)), tr.space.interior(s)),
                "closure" => (tr.restrict(&family.closure(&a)), tr.space.closure(s)),
                "boundary" => (tr.restrict(&family.boundary(&a)), tr.space.boundary(s)),
                _ => {
                    let lhs = sym.get(prop).expect("symbolic flag");
                    let rhs = fin.get(prop).expect("finite flag");
                    if lhs != rhs {
                        mismatches.push(format!("{family} n={n} A={a} {prop}: {lhs} vs {rhs}"));
                    }
                    continue;
                }
            };
            if lhs != rhs {
                mismatches.push(format!("{family} n={n} A={a} {prop}: {lhs} vs {rhs}"));
            }
        }
    }
    Ok(mismatches)
}

/// A subspace of a symbolic family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum SymbolicSubspace {
    /// Homeomorphic to the named family.
    Infinite(SymbolicSpace),
    /// Trace points in ascending order, then the distinguished point.
    Finite(FiniteSpace),
}

pub fn sym_subspace(family: SymbolicSpace, carrier: &SymbolicSet) -> Result<SymbolicSubspace> {
    family.check(carrier)?;
    if let Some(points) = carrier.trace.members() {
        let mut labels: Vec<SymbolicSet> = points
            .into_iter()
            .map(|x| SymbolicSet::trace(Trace::finite([x])))
            .collect();
        if carrier.special {
            labels.push(SymbolicSet::special_point());
        }
        let k = labels.len();
        if k > MAX_POINTS {
            return Err(TopoError::GroundTooLarge { size: k, max: MAX_POINTS });
        }
        let lift = |s: PointSet| {
            s.iter()
                .fold(SymbolicSet::empty(), |acc, i| acc.union(&labels[i]))
        };
        // S is relatively open iff the closure of C∖S misses S.
        let opens: Vec<PointSet> = PointSet::full(k)
            .subsets()
            .filter(|&s| {
                let rest = lift(PointSet::full(k) - s);
                family.closure(&rest).is_disjoint(&lift(s))
            })
            .collect();
        return Ok(SymbolicSubspace::Finite(validate_topology(k, &opens)?));
    }
    use SymbolicSpace::*;
    let result = match family {
        Cofinite | IndiscreteInfinite | LeftRay | RightRay => family,
        ParticularPoint if carrier.special => ParticularPoint,
        ParticularPoint => IndiscreteInfinite,
        OnePointCompactification if carrier.special => OnePointCompactification,
        OnePointCompactification => {
            return Err(TopoError::Unsupported(
                "infinite discrete subspace".to_string(),
            ))
        }
    };
    Ok(SymbolicSubspace::Infinite(result))
}
