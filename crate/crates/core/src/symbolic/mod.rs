//! Decision procedures on countably infinite witness spaces.
//!
//! Subsets are represented by [`SymbolicSet`]: membership of the family's
//! distinguished point plus an eventually periodic [`Trace`] on ℕ. The
//! representation is closed under the boolean operations and under interior
//! and closure in every family, so set-level flags are exact. Space-level
//! answers quantify over [`shape_universe`] and are cross-checked against
//! finite truncations.

mod report;
mod space;
mod trace;
mod truncate;

pub use report::{
    compact_by_covers, shape_universe, sym_space_report, IdealDescription, IdealDescriptions,
    SymbolicReport,
};
pub use space::{
    sym_operator, sym_set_flags, SymOperatorKind, SymbolicFlags, SymbolicSet, SymbolicSpace,
};
pub use trace::{Trace, MAX_PERIOD};
pub use truncate::{cross_check, sym_subspace, truncate, SymbolicSubspace, Truncation, CROSS_CHECKED};
