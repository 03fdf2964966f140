use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Result, TopoError};

/// Longest period a trace may carry.
pub const MAX_PERIOD: u32 = 64;

/// An eventually periodic subset of ℕ.
///
/// Membership of `x` is the residue pattern at `x mod period`, flipped when
/// `x` is listed in `exceptions`. The representation is normalized (minimal
/// period, only genuine exceptions), so structural equality is set equality.
/// Finite sets have an empty pattern, cofinite sets a full one.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Trace {
    period: u32,
    residues: u64,
    exceptions: BTreeSet<u64>,
}

fn full_pattern(period: u32) -> u64 {
    if period >= 64 {
        u64::MAX
    } else {
        (1u64 << period) - 1
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl Trace {
    pub fn empty() -> Trace {
        Trace {
            period: 1,
            residues: 0,
            exceptions: BTreeSet::new(),
        }
    }

    pub fn all() -> Trace {
        Trace {
            period: 1,
            residues: 1,
            exceptions: BTreeSet::new(),
        }
    }

    pub fn finite<I: IntoIterator<Item = u64>>(points: I) -> Trace {
        Trace {
            period: 1,
            residues: 0,
            exceptions: points.into_iter().collect(),
        }
    }

    /// ℕ minus the listed points.
    pub fn cofinite<I: IntoIterator<Item = u64>>(missing: I) -> Trace {
        Trace {
            period: 1,
            residues: 1,
            exceptions: missing.into_iter().collect(),
        }
    }

    /// `{x : x mod period ∈ residues}`.
    pub fn periodic(period: u32, residues: &[u32]) -> Result<Trace> {
        if period == 0 || period > MAX_PERIOD {
            return Err(TopoError::MalformedShape(format!(
                "period must lie in 1..={MAX_PERIOD}, got {period}"
            )));
        }
        let mut pattern = 0u64;
        for &r in residues {
            if r >= period {
                return Err(TopoError::MalformedShape(format!(
                    "residue {r} out of range for period {period}"
                )));
            }
            pattern |= 1 << r;
        }
        Ok(Trace::normalized(period, pattern, BTreeSet::new()))
    }

    /// Flips membership of `x`.
    pub fn toggled(&self, x: u64) -> Trace {
        let mut exceptions = self.exceptions.clone();
        if !exceptions.remove(&x) {
            exceptions.insert(x);
        }
        Trace {
            period: self.period,
            residues: self.residues,
            exceptions,
        }
    }

    fn pattern_has(&self, x: u64) -> bool {
        self.residues & (1 << (x % self.period as u64)) != 0
    }

    fn normalized(period: u32, residues: u64, exceptions: BTreeSet<u64>) -> Trace {
        let member = |x: u64| (residues & (1 << (x % period as u64)) != 0) != exceptions.contains(&x);
        // Smallest divisor of the period that reproduces the pattern.
        let mut best = period;
        for d in 1..period {
            if period.is_multiple_of(d) && (0..period).all(|r| {
                (residues >> r & 1) == (residues >> (r % d) & 1)
            }) {
                best = d;
                break;
            }
        }
        let reduced = residues & full_pattern(best);
        let base = Trace {
            period: best,
            residues: reduced,
            exceptions: BTreeSet::new(),
        };
        let exceptions = exceptions
            .iter()
            .copied()
            .filter(|&x| member(x) != base.pattern_has(x))
            .collect();
        Trace {
            period: best,
            residues: reduced,
            exceptions,
        }
    }

    pub fn contains(&self, x: u64) -> bool {
        self.pattern_has(x) != self.exceptions.contains(&x)
    }

    fn combine(&self, other: &Trace, op: impl Fn(bool, bool) -> bool) -> Trace {
        let g = gcd(self.period, other.period);
        let period = self.period / g * other.period;
        assert!(period <= MAX_PERIOD, "combined period {period} exceeds {MAX_PERIOD}");
        let mut residues = 0u64;
        for r in 0..period as u64 {
            if op(self.pattern_has(r), other.pattern_has(r)) {
                residues |= 1 << r;
            }
        }
        let candidates: BTreeSet<u64> = self.exceptions.union(&other.exceptions).copied().collect();
        let exceptions = candidates
            .into_iter()
            .filter(|&x| {
                let pattern = residues & (1 << (x % period as u64)) != 0;
                op(self.contains(x), other.contains(x)) != pattern
            })
            .collect();
        Trace::normalized(period, residues, exceptions)
    }

    pub fn union(&self, other: &Trace) -> Trace {
        self.combine(other, |a, b| a || b)
    }

    pub fn intersection(&self, other: &Trace) -> Trace {
        self.combine(other, |a, b| a && b)
    }

    pub fn difference(&self, other: &Trace) -> Trace {
        self.combine(other, |a, b| a && !b)
    }

    pub fn complement(&self) -> Trace {
        Trace {
            period: self.period,
            residues: !self.residues & full_pattern(self.period),
            exceptions: self.exceptions.clone(),
        }
    }

    pub fn is_subset(&self, other: &Trace) -> bool {
        self.difference(other).is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.residues == 0 && self.exceptions.is_empty()
    }

    pub fn is_all(&self) -> bool {
        self.residues == full_pattern(self.period) && self.exceptions.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.residues == 0
    }

    pub fn is_cofinite(&self) -> bool {
        self.residues == full_pattern(self.period)
    }

    /// Number of members of a finite trace.
    pub fn count(&self) -> Option<usize> {
        self.is_finite().then_some(self.exceptions.len())
    }

    /// Members of a finite trace.
    pub fn members(&self) -> Option<Vec<u64>> {
        self.is_finite().then(|| self.exceptions.iter().copied().collect())
    }

    /// Past this bound membership is purely periodic.
    fn horizon(&self) -> u64 {
        self.exceptions.iter().next_back().map_or(0, |m| m + 1) + self.period as u64
    }

    pub fn least(&self) -> Option<u64> {
        (0..self.horizon()).find(|&x| self.contains(x))
    }

    /// Least natural number not in the trace.
    pub fn mex(&self) -> Option<u64> {
        (0..self.horizon()).find(|&x| !self.contains(x))
    }

    /// Largest member of a finite trace.
    pub fn greatest(&self) -> Option<u64> {
        if self.is_finite() {
            self.exceptions.iter().next_back().copied()
        } else {
            None
        }
    }

    /// `{0, …, k-1}`
    pub fn initial_segment(k: u64) -> Trace {
        Trace::finite(0..k)
    }

    /// `{k, k+1, …}`
    pub fn final_segment(k: u64) -> Trace {
        Trace::cofinite(0..k)
    }

    /// Members below `bound`.
    pub fn members_below(&self, bound: u64) -> Vec<u64> {
        (0..bound).filter(|&x| self.contains(x)).collect()
    }

    pub fn period(&self) -> u32 {
        self.period
    }
}

impl fmt::Debug for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn write_points(f: &mut fmt::Formatter<'_>, points: &BTreeSet<u64>) -> fmt::Result {
    write!(f, "{{")?;
    for (i, x) in points.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, "}}")
}

impl fmt::Display for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_finite() {
            write_points(f, &self.exceptions)
        } else if self.is_cofinite() {
            write!(f, "ℕ")?;
            if !self.exceptions.is_empty() {
                write!(f, "∖")?;
                write_points(f, &self.exceptions)?;
            }
            Ok(())
        } else {
            let residues: Vec<String> = (0..self.period)
                .filter(|r| self.residues >> r & 1 == 1)
                .map(|r| r.to_string())
                .collect();
            write!(f, "{{n ≡ {} mod {}}}", residues.join("|"), self.period)?;
            if !self.exceptions.is_empty() {
                write!(f, " △ ")?;
                write_points(f, &self.exceptions)?;
            }
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn evens() -> Trace {
        Trace::periodic(2, &[0]).unwrap()
    }

    #[test]
    fn normalization_makes_equality_structural() {
        assert_eq!(Trace::periodic(4, &[0, 2]).unwrap(), evens());
        assert_eq!(Trace::periodic(2, &[0, 1]).unwrap(), Trace::all());
        assert_eq!(evens().union(&evens().complement()), Trace::all());
        assert_eq!(evens().intersection(&evens().complement()), Trace::empty());
        assert_eq!(Trace::finite([1, 2]).toggled(2), Trace::finite([1]));
    }

    #[test]
    fn extrema() {
        let t = Trace::cofinite([0, 1, 5]);
        assert_eq!(t.least(), Some(2));
        assert_eq!(t.mex(), Some(0));
        assert_eq!(Trace::all().mex(), None);
        assert_eq!(Trace::empty().least(), None);
        assert_eq!(Trace::finite([3, 9]).greatest(), Some(9));
        assert_eq!(evens().toggled(0).least(), Some(2));
        assert_eq!(evens().greatest(), None);
    }

    #[test]
    fn malformed_periods() {
        assert!(Trace::periodic(0, &[]).is_err());
        assert!(Trace::periodic(2, &[2]).is_err());
        assert!(Trace::periodic(65, &[]).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(Trace::finite([1, 2]).to_string(), "{1,2}");
        assert_eq!(Trace::cofinite([0]).to_string(), "ℕ∖{0}");
        assert_eq!(evens().toggled(1).to_string(), "{n ≡ 0 mod 2} △ {1}");
    }

    fn arb_trace() -> impl Strategy<Value = Trace> {
        (1u32..=3, any::<u8>(), proptest::collection::btree_set(0u64..12, 0..4)).prop_map(
            |(p, res, flips)| {
                let residues: Vec<u32> = (0..p).filter(|r| res >> r & 1 == 1).collect();
                flips
                    .into_iter()
                    .fold(Trace::periodic(p, &residues).unwrap(), |t, x| t.toggled(x))
            },
        )
    }

    proptest! {
        #[test]
        fn boolean_ops_match_pointwise(a in arb_trace(), b in arb_trace()) {
            let u = a.union(&b);
            let i = a.intersection(&b);
            let d = a.difference(&b);
            let c = a.complement();
            for x in 0..40u64 {
                prop_assert_eq!(u.contains(x), a.contains(x) || b.contains(x));
                prop_assert_eq!(i.contains(x), a.contains(x) && b.contains(x));
                prop_assert_eq!(d.contains(x), a.contains(x) && !b.contains(x));
                prop_assert_eq!(c.contains(x), !a.contains(x));
            }
            prop_assert_eq!(c.complement(), a.clone());
            prop_assert_eq!(a.is_subset(&u), true);
        }

        #[test]
        fn min_and_mex_are_exact(a in arb_trace()) {
            let first = (0..40u64).find(|&x| a.contains(x));
            let gap = (0..40u64).find(|&x| !a.contains(x));
            prop_assert_eq!(a.least(), first);
            prop_assert_eq!(a.mex(), gap);
        }
    }
}
