//! Theorem registry, verification runner, counterexample miner and report
//! builders.
//!
//! Every finite-checkable result is a [`TheoremCheck`]. Checks with
//! [`Scope::FiniteExhaustive`] run on every labeled topology with at most
//! `n_max` points; the others are pinned to a fixture or to the symbolic
//! families.

mod analyze;
mod checks;
mod fixed;
mod miner;
mod runner;

use serde::Serialize;

pub use analyze::{analyze, Analysis, SetAnalysis, SingletonRow};
pub use fixed::{intermediate_n_scattered, IntermediateSearch};
pub use miner::{
    mine, named_goal, revalidate, validate_goal, Domain, MineOutcome, MiningGoal, NamedGoal, Witness, WitnessSpace,
    MAX_MINE_BITOP_N, MAX_MINE_N, NAMED_GOALS,
};
pub use runner::{verify, CheckReport, CheckStatus, VerificationReport, VerifyOptions, MAX_VERIFY_N};

use checks::SpaceCheck;
use fixed::FixedOutcome;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Scope {
    FiniteExhaustive,
    Fixture,
    Symbolic,
}

#[derive(Clone, Copy)]
pub(crate) enum Checker {
    Space(SpaceCheck),
    Fixed(fn() -> FixedOutcome),
}

#[derive(Clone, Copy)]
pub struct TheoremCheck {
    pub id: &'static str,
    pub statement: &'static str,
    pub scope: Scope,
    pub(crate) checker: Checker,
}

impl std::fmt::Debug for TheoremCheck {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TheoremCheck")
            .field("id", &self.id)
            .field("scope", &self.scope)
            .finish()
    }
}

const fn space(id: &'static str, statement: &'static str, check: SpaceCheck) -> TheoremCheck {
    TheoremCheck {
        id,
        statement,
        scope: Scope::FiniteExhaustive,
        checker: Checker::Space(check),
    }
}

const fn fixed(id: &'static str, statement: &'static str, scope: Scope, check: fn() -> FixedOutcome) -> TheoremCheck {
    TheoremCheck {
        id,
        statement,
        scope,
        checker: Checker::Fixed(check),
    }
}

pub static CHECKS: &[TheoremCheck] = &[
    space("T1", "An arbitrary intersection of sg-closed sets is sg-closed.", checks::t1),
    space("T2", "A is sg-closed iff X₁ ∩ sCl(A) ⊆ A iff X₁ ∩ int cl A ⊆ A.", checks::t2),
    space("T3", "A is sg-open iff A ∩ X₁ ⊆ sInt(A); every subset of X₂ is sg-open.", checks::t3),
    space("T4", "Every space is sg-T½: each singleton is sg-open or sg-closed.", checks::t4),
    space("T5", "X splits into X₁ (nowhere dense singletons) and X₂ (sg-open, locally dense singletons).", checks::t5),
    space("T6", "A is hsg-closed iff X₁ ∩ int cl A = ∅.", checks::t6),
    space("T7", "Nowhere dense ⇒ hsg-closed ⇒ sg-closed.", checks::t7),
    space("T8", "Semi-closed ⇒ sg-closed; sg-open ⇒ β-open.", checks::t8),
    space("T9", "If A is sg-closed and B is closed then A ∪ B is sg-closed.", checks::t9),
    space("T10", "The intersection of an sg-open set and an open set is sg-open.", checks::t10),
    space("T11", "A is regular open iff A is α-open and sg-closed.", checks::t11),
    space("T12", "For B ⊆ A with A open and sg-closed, B is sg-closed in A iff sg-closed in X.", checks::t12),
    space("T13", "If A ⊆ R with R regular open (or δ-open) and A sg-open in R, then A is sg-open in X.", checks::t13),
    space("T14", "Every subset is hsg-closed iff X₁ = ∅; in particular every subset of an indiscrete space is hsg-closed.", checks::t14),
    space("T15", "X is semi-normal iff disjoint semi-closed sets have disjoint sg-open neighbourhoods.", checks::t15),
    space("T16", "X is semi-T_D iff every sg-closed set is semi-closed; if X₁ = X the two notions coincide.", checks::t16),
    space("T17", "X is scattered iff X is α-scattered and N-scattered.", checks::t17),
    space("T18", "The eleven formulations (a)-(k) of N-scatteredness are equivalent.", checks::t18),
    space("T19", "N-scatteredness is hereditary.", checks::t19),
    space("T20", "If every point has an N-scattered neighbourhood then X is N-scattered.", checks::t20),
    space("T21", "X is T₀ iff every finite set is scattered.", checks::t21),
    space("T22", "X is T₁ iff every finite set is discrete.", checks::t22),
    space("T23", "In a T₀ space S ∪ F is scattered for S scattered and F finite; disjoint scattered sets, one with an open neighbourhood missing the other, have scattered union.", checks::t23),
    space("T24", "In an α-space N(τ) ⊆ CD(τ); always CD(τ) ⊆ D(τ) ⊆ S(τ).", checks::t24),
    space("T25", "NS(τ) is the largest open N-scattered set; NP(τ), if nonempty, contains a nonempty crowded nowhere dense set.", checks::t25),
    space("T26", "In a T₀ space the scattered sets form an ideal and the space is N-scattered; a T₁ crowded space is N-scattered iff N(τ) = S(τ).", checks::t26),
    space("T27", "τ[I], with I generated by the perfect nowhere dense sets, is N-scattered.", checks::t27),
    fixed("T28", "If NP(τ) ≠ ∅ and NS(τ) holds a nonempty non-discrete nowhere dense set, some σ with τ ⊊ σ ⊊ τ^α is N-scattered.", Scope::Fixture, fixed::t28),
    space("T29", "A homogeneous space is crowded or discrete.", checks::t29),
    space("T30", "Partition ⇔ no nonempty nowhere dense set; discrete ⇒ partition; globally disconnected ⇔ extremally disconnected α-space; submaximal ⇒ α-space ⇒ N-scattered; scattered ⇒ N-scattered.", checks::t30),
    space("T31", "The semi-open sets form a topology iff X is extremally disconnected.", checks::t31),
    space("T32", "Every nonempty open set contains a nonempty open subset of X₂, so cellular families can be taken inside X₂.", checks::t32),
    space("T33", "Scattered ⇒ hsg-scattered ⇒ N-scattered.", checks::t33),
    fixed("S1", "The cofinite space on ω is sg-compact, crowded and hsg-scattered but not scattered, with N(τ) = S(τ) = finite sets.", Scope::Symbolic, fixed::s1),
    fixed("S2", "The particular-point space is sg-compact with hsg-closed sets ∅ and {p}; its open subspace A is not sg-compact.", Scope::Symbolic, fixed::s2),
    fixed("S3", "The one-point compactification of a countable discrete space is C₂ with an infinite cellular family, hence neither semi-compact nor C₃.", Scope::Symbolic, fixed::s3),
    fixed("S4", "(ω, L) is scattered with S(L) = P(ω).", Scope::Symbolic, fixed::s4),
    fixed("S5", "(ω, R) is crowded with S(R) = I_ω.", Scope::Symbolic, fixed::s5),
    fixed("S6", "The infinite indiscrete space is N-scattered but not hsg-scattered; the cofinite space is hsg-scattered but not scattered.", Scope::Symbolic, fixed::s6),
];

pub fn check_by_id(id: &str) -> Option<&'static TheoremCheck> {
    CHECKS.iter().find(|c| c.id.eq_ignore_ascii_case(id))
}

/// Results that have no executable check, with the reason.
pub const OUT_OF_SCOPE: &[(&str, &str)] = &[
    ("density topology corollaries", "measure-theoretic; no finite or shape-decidable model"),
    ("closed lower density spaces are N-scattered", "measure-theoretic"),
    ("rim-scattered reals that are not N-scattered", "needs the Cantor set inside the Euclidean line"),
    ("pre-sg-continuous images of sg-compact spaces", "function classes are not modelled"),
    ("sg-compact T_gs products", "T_gs is not defined"),
    ("every space is pre-T½", "pre-T½ is not defined"),
    ("β-compact spaces are finite", "recorded as a remark only"),
    ("metrizability conditions for utterly Baire bitopological spaces", "no metric spaces are modelled"),
    ("compactness facts on finite spaces (C₃ ⇒ semi-compact, sg-compactness is topological, δ-open subspaces)", "trivially true on finite grounds; the infinite content is covered by S1-S6"),
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_exactly_the_expected_ones() {
        let ids: Vec<&str> = CHECKS.iter().map(|c| c.id).collect();
        let mut expected: Vec<String> = (1..=33).map(|i| format!("T{i}")).collect();
        expected.extend((1..=6).map(|i| format!("S{i}")));
        assert_eq!(ids, expected);
    }

    #[test]
    fn lookup_is_case_insensitive() {
        assert_eq!(check_by_id("t12").unwrap().id, "T12");
        assert!(check_by_id("T34").is_none());
    }

    #[test]
    fn scopes() {
        assert_eq!(check_by_id("T28").unwrap().scope, Scope::Fixture);
        assert!(CHECKS.iter().filter(|c| c.id.starts_with('S')).all(|c| c.scope == Scope::Symbolic));
        assert!(!OUT_OF_SCOPE.is_empty());
    }
}
