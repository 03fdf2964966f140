use std::collections::HashSet;

use rayon::prelude::*;

use super::homeo::canonical_key;
use super::pointset::PointSet;
use super::space::FiniteSpace;
use crate::error::{Result, TopoError};

/// Largest ground set [`enumerate_topologies`] accepts.
pub const MAX_ENUM_POINTS: usize = 6;

/// Largest ground set handled by the brute-force family filter.
const BRUTE_FORCE_MAX: usize = 3;

/// Every topology on `n` labelled points, in canonical order.
///
/// With `up_to_homeomorphism` set, only the first space of each
/// homeomorphism class (in canonical order) is kept.
pub fn enumerate_topologies(n: usize, up_to_homeomorphism: bool) -> Result<Vec<FiniteSpace>> {
    if n > MAX_ENUM_POINTS {
        return Err(TopoError::GroundTooLarge {
            size: n,
            max: MAX_ENUM_POINTS,
        });
    }
    let mut spaces = if n <= BRUTE_FORCE_MAX {
        brute_force(n)
    } else {
        closure_generation(n)
    };
    spaces.sort();
    if up_to_homeomorphism {
        let keys: Vec<_> = spaces.par_iter().map(canonical_key).collect();
        let mut seen = HashSet::new();
        spaces = spaces
            .into_iter()
            .zip(keys)
            .filter_map(|(s, k)| seen.insert(k).then_some(s))
            .collect();
    }
    Ok(spaces)
}

/// Number of labelled topologies on `n` points.
pub fn count_topologies(n: usize) -> Result<usize> {
    enumerate_topologies(n, false).map(|v| v.len())
}

/// Filters every family of subsets of an `n`-point set through the axioms.
fn brute_force(n: usize) -> Vec<FiniteSpace> {
    let subsets: Vec<PointSet> = PointSet::all(n).collect();
    let full = PointSet::full(n);
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << subsets.len()) {
        let member = |s: PointSet| mask & (1 << s.bits()) != 0;
        if !member(PointSet::EMPTY) || !member(full) {
            continue;
        }
        let family: Vec<PointSet> = subsets.iter().copied().filter(|&s| member(s)).collect();
        let closed = family.iter().all(|&a| {
            family
                .iter()
                .all(|&b| member(a | b) && member(a & b))
        });
        if closed {
            out.push(FiniteSpace::generated_by(n, family).expect("ground within limits"));
        }
    }
    out
}

/// Grows topologies from the indiscrete one by adjoining a single new open
/// set and closing under union and intersection.
///
/// A topology is tracked by its minimal neighbourhoods; adjoining `S` and
/// closing replaces `U_x` with `U_x ∩ S` for every `x ∈ S`.
fn closure_generation(n: usize) -> Vec<FiniteSpace> {
    let start = vec![PointSet::full(n); n];
    let mut seen: HashSet<Vec<PointSet>> = HashSet::new();
    seen.insert(start.clone());
    let mut frontier = vec![start];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for nbhd in &frontier {
            for s in PointSet::all(n) {
                let is_open = s.iter().all(|x| nbhd[x].is_subset(s));
                if is_open {
                    continue;
                }
                let grown: Vec<PointSet> = nbhd
                    .iter()
                    .enumerate()
                    .map(|(x, &u)| if s.contains(x) { u & s } else { u })
                    .collect();
                if seen.insert(grown.clone()) {
                    next.push(grown);
                }
            }
        }
        frontier = next;
    }
    seen.into_iter().map(FiniteSpace::from_neighborhoods).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<_> = (0..=4).map(|n| count_topologies(n).unwrap()).collect();
        assert_eq!(counts, vec![1, 1, 4, 29, 355]);
    }

    #[test]
    fn closure_agrees_with_brute_force_on_small_grounds() {
        for n in 0..=3 {
            let mut a = brute_force(n);
            let mut b = closure_generation(n);
            a.sort();
            b.sort();
            assert_eq!(a, b, "n = {n}");
        }
    }

    #[test]
    fn output_is_sorted_and_unique() {
        let spaces = enumerate_topologies(4, false).unwrap();
        assert!(spaces.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn homeomorphism_classes() {
        let classes: Vec<_> = (0..=4)
            .map(|n| enumerate_topologies(n, true).unwrap().len())
            .collect();
        assert_eq!(classes, vec![1, 1, 3, 9, 33]);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            enumerate_topologies(7, false),
            Err(TopoError::GroundTooLarge { size: 7, .. })
        ));
    }
}
