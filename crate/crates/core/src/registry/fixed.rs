//! Checks pinned to one fixture or to the symbolic families.

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use crate::classes::{is_n_scattered, ns_kernel, space_report};
use crate::operators::{derived_topology, is_nowhere_dense, DerivedKind};
use crate::setcore::{fixture, left_ray, particular_point, product, product_point, right_ray, FiniteSpace, PointSet};
use crate::symbolic::{
    cross_check, sym_space_report, sym_subspace, IdealDescription, SymbolicSet, SymbolicSpace,
    SymbolicSubspace, Trace,
};

/// Passing checks return a note; failing ones the witness.
pub(crate) type FixedOutcome = std::result::Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err(format!($($arg)+));
        }
    };
}

/// Result of searching the topologies strictly between `τ` and `τ^α`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntermediateSearch {
    pub tau: FiniteSpace,
    pub alpha: FiniteSpace,
    /// `NP(τ) ≠ ∅`
    pub np_nonempty: bool,
    /// `NS(τ)` contains a nonempty, non-discrete, nowhere dense set.
    pub ns_has_nondiscrete_nowhere_dense: bool,
    /// Number of topologies strictly between `τ` and `τ^α`.
    pub intermediates: usize,
    /// First N-scattered one in canonical order.
    pub witness: Option<FiniteSpace>,
}

/// Explores every topology generated by `τ` together with some α-open
/// sets; these are exactly the topologies between `τ` and `τ^α`.
pub fn intermediate_n_scattered(tau: &FiniteSpace) -> IntermediateSearch {
    let n = tau.n();
    let alpha = derived_topology(tau, DerivedKind::Alpha);
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::from([tau.clone()]);
    seen.insert(tau.clone());
    while let Some(sigma) = queue.pop_front() {
        for &e in alpha.opens() {
            if sigma.is_open(e) {
                continue;
            }
            let family = sigma.opens().iter().copied().chain([e]);
            let next = FiniteSpace::generated_by(n, family).expect("ground size already validated");
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen.remove(tau);
    seen.remove(&alpha);
    let witness = seen.iter().find(|s| is_n_scattered(s)).cloned();
    let (ns, np) = ns_kernel(tau);
    let ns_has_nondiscrete_nowhere_dense = ns
        .subsets()
        .any(|a| !a.is_empty() && is_nowhere_dense(tau, a) && tau.isolated_in(a) != a);
    IntermediateSearch {
        tau: tau.clone(),
        alpha,
        np_nonempty: !np.is_empty(),
        ns_has_nondiscrete_nowhere_dense,
        intermediates: seen.len(),
        witness,
    }
}

pub(crate) fn t28() -> FixedOutcome {
    let tau = fixture("T28FIX6").expect("built-in fixture");
    let s = intermediate_n_scattered(&tau);
    ensure!(s.np_nonempty, "hypothesis NP(τ) ≠ ∅ fails on T28FIX6");
    ensure!(
        s.ns_has_nondiscrete_nowhere_dense,
        "hypothesis on NS(τ) fails on T28FIX6"
    );
    ensure!(!is_n_scattered(&tau), "T28FIX6 is already N-scattered");
    match s.witness {
        Some(sigma) => {
            ensure!(
                tau.is_subtopology_of(&sigma) && sigma.is_subtopology_of(&s.alpha),
                "witness {sigma:?} is not between τ and τ^α"
            );
            Ok(format!(
                "{} strictly intermediate topologies; first N-scattered σ = {sigma:?}",
                s.intermediates
            ))
        }
        None => Err(format!(
            "none of the {} intermediate topologies is N-scattered",
            s.intermediates
        )),
    }
}

fn no_mismatches(family: SymbolicSpace) -> FixedOutcome {
    for n in 4..=8 {
        let mismatches = cross_check(family, n).map_err(|e| e.to_string())?;
        ensure!(mismatches.is_empty(), "truncation disagreement: {}", mismatches[0]);
    }
    Ok(String::new())
}

fn trace(t: Trace) -> SymbolicSet {
    SymbolicSet::trace(t)
}

pub(crate) fn s1() -> FixedOutcome {
    let cof = SymbolicSpace::Cofinite;
    let r = sym_space_report(cof);
    ensure!(r.sg_compact && r.c3, "cofinite space not sg-compact");
    ensure!(r.sg_compact_by_covers == Some(true), "cover argument gives {:?}", r.sg_compact_by_covers);
    ensure!(r.ideal_descriptions.n == IdealDescription::FiniteSets, "N(τ) = {}", r.ideal_descriptions.n);
    ensure!(r.ideal_descriptions.s == IdealDescription::FiniteSets, "S(τ) = {}", r.ideal_descriptions.s);
    ensure!(r.crowded && r.hsg_scattered && r.n_scattered && !r.scattered, "cofinite space flags {r:?}");
    for carrier in [
        trace(Trace::cofinite([0, 4])),
        trace(Trace::periodic(2, &[1]).expect("valid period")),
    ] {
        match sym_subspace(cof, &carrier).map_err(|e| e.to_string())? {
            SymbolicSubspace::Infinite(f) => {
                ensure!(sym_space_report(f).sg_compact, "subspace {carrier} not sg-compact")
            }
            other => return Err(format!("subspace {carrier} came out as {other:?}")),
        }
    }
    no_mismatches(cof)?;
    Ok("sg-compact, N(τ) = S(τ) = finite sets, crowded, hsg-scattered, not scattered".into())
}

pub(crate) fn s2() -> FixedOutcome {
    let pp = SymbolicSpace::ParticularPoint;
    let r = sym_space_report(pp);
    ensure!(r.sg_compact && r.c3, "particular-point space not sg-compact");
    ensure!(r.sg_compact_by_covers == Some(true), "cover argument gives {:?}", r.sg_compact_by_covers);
    ensure!(r.x1 == SymbolicSet::special_point(), "X₁ = {}", r.x1);
    ensure!(
        r.ideal_descriptions.hsg_closed == IdealDescription::SubsetsOf(SymbolicSet::special_point()),
        "hsg-closed sets: {}",
        r.ideal_descriptions.hsg_closed
    );
    let a = trace(Trace::all());
    let sub = sym_subspace(pp, &a).map_err(|e| e.to_string())?;
    ensure!(
        sub == SymbolicSubspace::Infinite(SymbolicSpace::IndiscreteInfinite),
        "open subspace A is {sub:?}"
    );
    let ra = sym_space_report(SymbolicSpace::IndiscreteInfinite);
    ensure!(!ra.sg_compact && ra.sg_compact_by_covers == Some(false), "subspace A is sg-compact");
    // X × X ∖ A × A is nowhere dense in the square of the finite analog.
    for n in 2..=3 {
        let x = particular_point(n).expect("n ≥ 1");
        let sq = product(&x, &x).map_err(|e| e.to_string())?;
        let aa: PointSet = (0..n - 1)
            .flat_map(|i| (0..n - 1).map(move |j| (i, j)))
            .map(|(i, j)| product_point(&x, i, j))
            .collect();
        let rest = sq.complement(aa);
        ensure!(is_nowhere_dense(&sq, rest), "PP_{n}²: X×X∖A×A not nowhere dense");
        ensure!(rest.len() == 2 * n - 1, "PP_{n}²: |X×X∖A×A| = {}", rest.len());
    }
    no_mismatches(pp)?;
    Ok("sg-compact, hsg-closed sets {∅,{p}}, open subspace A indiscrete and not sg-compact".into())
}

pub(crate) fn s3() -> FixedOutcome {
    let opc = SymbolicSpace::OnePointCompactification;
    let r = sym_space_report(opc);
    ensure!(r.c2, "not C₂");
    ensure!(r.cellular_infinite, "no infinite cellular family");
    ensure!(!r.semi_compact && r.semi_compact_by_covers == Some(false), "semi-compact");
    ensure!(!r.c3 && !r.sg_compact && r.sg_compact_by_covers == Some(false), "C₃");
    no_mismatches(opc)?;
    Ok("C₂, infinite cellular family, not semi-compact, not C₃".into())
}

pub(crate) fn s4() -> FixedOutcome {
    let l = SymbolicSpace::LeftRay;
    let r = sym_space_report(l);
    ensure!(r.scattered, "left ray not scattered");
    ensure!(r.ideal_descriptions.s == IdealDescription::AllSets, "S(L) = {}", r.ideal_descriptions.s);
    for n in 3..=8 {
        let rep = space_report(&left_ray(n).expect("n ≥ 1"));
        ensure!(rep.scattered && !rep.alpha_space, "LRAY_{n}: scattered {}, α-space {}", rep.scattered, rep.alpha_space);
        ensure!(rep.t0 && !rep.t1 && rep.td, "LRAY_{n} separation flags");
    }
    no_mismatches(l)?;
    Ok("scattered, S(L) = all sets; truncations scattered but not α-spaces".into())
}

pub(crate) fn s5() -> FixedOutcome {
    let rr = SymbolicSpace::RightRay;
    let r = sym_space_report(rr);
    ensure!(r.crowded, "right ray not crowded");
    ensure!(r.ideal_descriptions.s == IdealDescription::FiniteSets, "S(R) = {}", r.ideal_descriptions.s);
    for n in 2..=8 {
        let rep = space_report(&right_ray(n).expect("n ≥ 1"));
        ensure!(rep.t0 && !rep.t1 && rep.td, "RRAY_{n} separation flags");
    }
    no_mismatches(rr)?;
    Ok("crowded, S(R) = finite sets".into())
}

pub(crate) fn s6() -> FixedOutcome {
    let ind = sym_space_report(SymbolicSpace::IndiscreteInfinite);
    ensure!(ind.n_scattered && !ind.hsg_scattered, "indiscrete: N-scattered {}, hsg-scattered {}", ind.n_scattered, ind.hsg_scattered);
    let cof = sym_space_report(SymbolicSpace::Cofinite);
    ensure!(cof.hsg_scattered && !cof.scattered, "cofinite: hsg-scattered {}, scattered {}", cof.hsg_scattered, cof.scattered);
    no_mismatches(SymbolicSpace::IndiscreteInfinite)?;
    Ok("indiscrete N-scattered not hsg-scattered; cofinite hsg-scattered not scattered".into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_checks_pass() {
        for (id, check) in [("T28", t28 as fn() -> FixedOutcome), ("S1", s1), ("S2", s2), ("S3", s3), ("S4", s4), ("S5", s5), ("S6", s6)] {
            assert!(check().is_ok(), "{id}: {:?}", check());
        }
    }

    #[test]
    fn intermediate_search_on_n_scattered_space_is_empty_of_hypotheses() {
        let s = intermediate_n_scattered(&fixture("SIERP").unwrap());
        assert!(!s.np_nonempty);
    }
}
