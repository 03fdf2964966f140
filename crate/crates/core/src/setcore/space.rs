use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use super::pointset::PointSet;
use crate::error::{Result, TopoError};

/// Largest ground set accepted anywhere in the finite engine.
pub const MAX_POINTS: usize = 16;

/// A validated topology on `{0, …, n-1}`.
///
/// Besides the sorted family of open sets the space keeps the minimal open
/// neighbourhood of every point; on a finite space this determines the
/// topology and makes interior and closure linear in `n`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FiniteSpace {
    n: usize,
    opens: Vec<PointSet>,
    #[serde(skip)]
    nbhd: Vec<PointSet>,
}

impl FiniteSpace {
    /// Builds a space from minimal neighbourhoods.
    ///
    /// `nbhd[x]` must contain `x` and be closed under the induced preorder;
    /// callers inside the crate guarantee this.
    pub(crate) fn from_neighborhoods(nbhd: Vec<PointSet>) -> FiniteSpace {
        let n = nbhd.len();
        debug_assert!(n <= MAX_POINTS);
        debug_assert!(nbhd.iter().enumerate().all(|(x, u)| u.contains(x)));
        let opens = PointSet::all(n)
            .filter(|a| a.iter().all(|x| nbhd[x].is_subset(*a)))
            .collect();
        FiniteSpace { n, opens, nbhd }
    }

    /// The topology generated by `family` used as a subbase.
    pub fn generated_by<I>(n: usize, family: I) -> Result<FiniteSpace>
    where
        I: IntoIterator<Item = PointSet>,
    {
        check_ground(n)?;
        let full = PointSet::full(n);
        let mut nbhd = vec![full; n];
        for s in family {
            check_in_range(n, s)?;
            for x in s.iter() {
                nbhd[x] = nbhd[x] & s;
            }
        }
        Ok(FiniteSpace::from_neighborhoods(nbhd))
    }

    pub fn discrete(n: usize) -> Result<FiniteSpace> {
        check_ground(n)?;
        Ok(FiniteSpace::from_neighborhoods(
            (0..n).map(PointSet::singleton).collect(),
        ))
    }

    pub fn indiscrete(n: usize) -> Result<FiniteSpace> {
        check_ground(n)?;
        Ok(FiniteSpace::from_neighborhoods(vec![PointSet::full(n); n]))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ground(&self) -> PointSet {
        PointSet::full(self.n)
    }

    /// Open sets in canonical (ascending mask) order.
    pub fn opens(&self) -> &[PointSet] {
        &self.opens
    }

    /// Minimal open neighbourhood of `x`.
    pub fn nbhd(&self, x: usize) -> PointSet {
        self.nbhd[x]
    }

    pub fn neighborhoods(&self) -> &[PointSet] {
        &self.nbhd
    }

    pub fn closed_sets(&self) -> impl Iterator<Item = PointSet> + '_ {
        self.opens.iter().map(move |u| u.complement(self.n))
    }

    /// Every subset of the ground set, in canonical order.
    pub fn subsets(&self) -> impl Iterator<Item = PointSet> + Clone {
        PointSet::all(self.n)
    }

    pub fn check_subset(&self, a: PointSet) -> Result<()> {
        check_in_range(self.n, a)
    }

    pub fn is_open(&self, a: PointSet) -> bool {
        a.iter().all(|x| self.nbhd[x].is_subset(a))
    }

    pub fn is_closed(&self, a: PointSet) -> bool {
        self.is_open(a.complement(self.n))
    }

    pub fn complement(&self, a: PointSet) -> PointSet {
        a.complement(self.n)
    }

    pub fn interior(&self, a: PointSet) -> PointSet {
        a.iter()
            .filter(|&x| self.nbhd[x].is_subset(a))
            .collect()
    }

    pub fn closure(&self, a: PointSet) -> PointSet {
        (0..self.n).filter(|&x| self.nbhd[x].intersects(a)).collect()
    }

    pub fn boundary(&self, a: PointSet) -> PointSet {
        self.closure(a) - self.interior(a)
    }

    /// `A ∩ cl(int A)`
    pub fn semi_interior(&self, a: PointSet) -> PointSet {
        a & self.closure(self.interior(a))
    }

    /// `A ∪ int(cl A)`
    pub fn semi_closure(&self, a: PointSet) -> PointSet {
        a | self.interior(self.closure(a))
    }

    /// Points of `a` that are isolated in the subspace `a`.
    pub fn isolated_in(&self, a: PointSet) -> PointSet {
        a.iter()
            .filter(|&x| (self.nbhd[x] & a) == PointSet::singleton(x))
            .collect()
    }

    /// Specialization test: `x` lies in every open set containing `y`.
    pub fn specializes(&self, y: usize, x: usize) -> bool {
        self.nbhd[y].contains(x)
    }

    /// Image of the space under a point relabelling `x ↦ perm[x]`.
    pub fn permute(&self, perm: &[usize]) -> FiniteSpace {
        assert_eq!(perm.len(), self.n);
        let mut nbhd = vec![PointSet::EMPTY; self.n];
        for x in 0..self.n {
            nbhd[perm[x]] = self.nbhd[x].map(perm);
        }
        FiniteSpace::from_neighborhoods(nbhd)
    }

    pub fn is_subtopology_of(&self, other: &FiniteSpace) -> bool {
        self.n == other.n && self.opens.iter().all(|u| other.is_open(*u))
    }
}

impl PartialOrd for FiniteSpace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: by ground size, then lexicographically by the sorted
/// list of open-set masks.
impl Ord for FiniteSpace {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.opens.cmp(&other.opens))
    }
}

impl fmt::Debug for FiniteSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteSpace(n={}, opens=[", self.n)?;
        for (i, u) in self.opens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}")?;
        }
        write!(f, "])")
    }
}

pub(crate) fn check_ground(n: usize) -> Result<()> {
    if n > MAX_POINTS {
        Err(TopoError::GroundTooLarge {
            size: n,
            max: MAX_POINTS,
        })
    } else {
        Ok(())
    }
}

pub(crate) fn check_in_range(n: usize, a: PointSet) -> Result<()> {
    let extra = a - PointSet::full(n);
    match extra.first() {
        Some(point) => Err(TopoError::OutOfRangePoint { point, ground: n }),
        None => Ok(()),
    }
}

/// Checks the topology axioms for an explicit family and returns the
/// canonicalised space.
pub fn validate_topology(n: usize, opens: &[PointSet]) -> Result<FiniteSpace> {
    check_ground(n)?;
    for &u in opens {
        check_in_range(n, u)?;
    }
    let mut family = opens.to_vec();
    family.sort_unstable();
    family.dedup();
    if family.binary_search(&PointSet::EMPTY).is_err() {
        return Err(TopoError::MissingEmptyOrFull);
    }

    let candidate = FiniteSpace::generated_by(n, family.iter().copied())?;
    if candidate.opens == family {
        return Ok(candidate);
    }

    // The family generates strictly more sets: either some pair is not
    // closed or the whole set is missing.
    let has = |s: PointSet| family.binary_search(&s).is_ok();
    for (i, &a) in family.iter().enumerate() {
        for &b in &family[i + 1..] {
            if !has(a | b) {
                return Err(TopoError::NotClosedUnderUnion(a, b));
            }
            if !has(a & b) {
                return Err(TopoError::NotClosedUnderIntersection(a, b));
            }
        }
    }
    debug_assert!(!has(PointSet::full(n)));
    Err(TopoError::MissingEmptyOrFull)
}

/// The relative topology on `carrier`, re-indexed to `0..|carrier|` in point
/// order.
pub fn subspace(space: &FiniteSpace, carrier: PointSet) -> Result<FiniteSpace> {
    space.check_subset(carrier)?;
    let nbhd = carrier
        .iter()
        .map(|x| (space.nbhd(x) & carrier).compress(carrier))
        .collect();
    Ok(FiniteSpace::from_neighborhoods(nbhd))
}

/// Largest ground set accepted by [`product`].
pub const MAX_PRODUCT_POINTS: usize = 12;

/// Product topology; the pair `(i, j)` becomes point `i * n2 + j`.
pub fn product(s1: &FiniteSpace, s2: &FiniteSpace) -> Result<FiniteSpace> {
    let n = s1.n() * s2.n();
    if n > MAX_PRODUCT_POINTS {
        return Err(TopoError::GroundTooLarge {
            size: n,
            max: MAX_PRODUCT_POINTS,
        });
    }
    let n2 = s2.n();
    let mut nbhd = Vec::with_capacity(n);
    for i in 0..s1.n() {
        for j in 0..n2 {
            let mut u = PointSet::EMPTY;
            for a in s1.nbhd(i).iter() {
                for b in s2.nbhd(j).iter() {
                    u.insert(a * n2 + b);
                }
            }
            nbhd.push(u);
        }
    }
    Ok(FiniteSpace::from_neighborhoods(nbhd))
}

/// Point index of the pair `(i, j)` in `product(s1, s2)`.
pub fn product_point(s2: &FiniteSpace, i: usize, j: usize) -> usize {
    i * s2.n() + j
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(points: &[usize]) -> PointSet {
        PointSet::from_points(points.iter().copied())
    }

    #[test]
    fn sierpinski_validates() {
        let s = validate_topology(2, &[ps(&[]), ps(&[0]), ps(&[0, 1])]).unwrap();
        assert_eq!(s.opens(), &[ps(&[]), ps(&[0]), ps(&[0, 1])]);
        assert_eq!(s.nbhd(1), ps(&[0, 1]));
    }

    #[test]
    fn union_failure_reports_pair() {
        let err = validate_topology(2, &[ps(&[]), ps(&[0]), ps(&[1])]).unwrap_err();
        assert_eq!(err, TopoError::NotClosedUnderUnion(ps(&[0]), ps(&[1])));
        let err = validate_topology(2, &[ps(&[]), ps(&[0])]).unwrap_err();
        assert_eq!(err, TopoError::MissingEmptyOrFull);
        let err = validate_topology(2, &[ps(&[0]), ps(&[0, 1])]).unwrap_err();
        assert_eq!(err, TopoError::MissingEmptyOrFull);
        let err = validate_topology(3, &[ps(&[]), ps(&[0]), ps(&[1]), ps(&[0, 1, 2])]).unwrap_err();
        assert_eq!(err, TopoError::NotClosedUnderUnion(ps(&[0]), ps(&[1])));
        let err =
            validate_topology(3, &[ps(&[]), ps(&[0, 1]), ps(&[1, 2]), ps(&[0, 1, 2])]).unwrap_err();
        assert_eq!(err, TopoError::NotClosedUnderIntersection(ps(&[0, 1]), ps(&[1, 2])));
    }

    #[test]
    fn out_of_range_and_duplicates() {
        let err = validate_topology(2, &[ps(&[]), ps(&[0, 1]), ps(&[2])]).unwrap_err();
        assert_eq!(err, TopoError::OutOfRangePoint { point: 2, ground: 2 });
        let s = validate_topology(1, &[ps(&[]), ps(&[0]), ps(&[0])]).unwrap();
        assert_eq!(s.opens().len(), 2);
        assert!(matches!(
            validate_topology(17, &[]),
            Err(TopoError::GroundTooLarge { .. })
        ));
    }

    #[test]
    fn empty_ground() {
        let s = validate_topology(0, &[PointSet::EMPTY]).unwrap();
        assert_eq!(s.opens(), &[PointSet::EMPTY]);
    }

    #[test]
    fn operators_on_sierpinski() {
        let s = validate_topology(2, &[ps(&[]), ps(&[0]), ps(&[0, 1])]).unwrap();
        assert_eq!(s.closure(ps(&[0])), ps(&[0, 1]));
        assert_eq!(s.closure(ps(&[1])), ps(&[1]));
        assert_eq!(s.interior(ps(&[1])), ps(&[]));
        assert_eq!(s.semi_interior(ps(&[1])), ps(&[]));
        assert_eq!(s.semi_closure(ps(&[0])), ps(&[0, 1]));
        assert_eq!(s.boundary(ps(&[0])), ps(&[1]));
    }

    #[test]
    fn product_of_discrete_and_indiscrete() {
        let d = FiniteSpace::discrete(2).unwrap();
        assert_eq!(product(&d, &d).unwrap(), FiniteSpace::discrete(4).unwrap());
        let i = FiniteSpace::indiscrete(2).unwrap();
        assert_eq!(product(&i, &i).unwrap(), FiniteSpace::indiscrete(4).unwrap());
        let big = FiniteSpace::discrete(4).unwrap();
        assert!(matches!(
            product(&big, &big),
            Err(TopoError::GroundTooLarge { size: 16, .. })
        ));
    }

    #[test]
    fn subspace_of_cone_is_indiscrete() {
        let cone = validate_topology(3, &[ps(&[]), ps(&[0]), ps(&[0, 1, 2])]).unwrap();
        let sub = subspace(&cone, ps(&[1, 2])).unwrap();
        assert_eq!(sub, FiniteSpace::indiscrete(2).unwrap());
        assert_eq!(subspace(&cone, cone.ground()).unwrap(), cone);
        assert!(subspace(&cone, ps(&[3])).is_err());
    }
}
