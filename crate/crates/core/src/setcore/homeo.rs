use serde::Serialize;

use super::pointset::PointSet;
use super::space::FiniteSpace;

/// A point bijection carrying the opens of one space onto the opens of
/// another.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Homeomorphism {
    map: Vec<usize>,
}

impl Homeomorphism {
    pub fn identity(n: usize) -> Self {
        Homeomorphism {
            map: (0..n).collect(),
        }
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    pub fn apply_point(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn apply(&self, a: PointSet) -> PointSet {
        a.map(&self.map)
    }
}

/// Per-point invariant used to prune searches: sizes of the minimal
/// neighbourhood and of the point closure.
fn point_invariant(space: &FiniteSpace, x: usize) -> (usize, usize) {
    let up = (0..space.n()).filter(|&y| space.nbhd(y).contains(x)).count();
    (space.nbhd(x).len(), up)
}

struct Search<'a> {
    s1: &'a FiniteSpace,
    s2: &'a FiniteSpace,
    inv1: Vec<(usize, usize)>,
    inv2: Vec<(usize, usize)>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl<'a> Search<'a> {
    fn new(s1: &'a FiniteSpace, s2: &'a FiniteSpace) -> Self {
        let n = s1.n();
        Search {
            s1,
            s2,
            inv1: (0..n).map(|x| point_invariant(s1, x)).collect(),
            inv2: (0..n).map(|x| point_invariant(s2, x)).collect(),
            map: vec![usize::MAX; n],
            used: vec![false; n],
        }
    }

    fn consistent(&self, x: usize, y: usize) -> bool {
        if self.inv1[x] != self.inv2[y] {
            return false;
        }
        (0..=x).all(|x2| {
            let y2 = if x2 == x { y } else { self.map[x2] };
            self.s1.nbhd(x).contains(x2) == self.s2.nbhd(y).contains(y2)
                && self.s1.nbhd(x2).contains(x) == self.s2.nbhd(y2).contains(y)
        })
    }

    /// Depth-first extension; `visit` returns `false` to stop the search.
    fn run(&mut self, x: usize, fixed: Option<(usize, usize)>, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let n = self.s1.n();
        if x == n {
            return visit(&self.map);
        }
        for y in 0..n {
            if self.used[y] {
                continue;
            }
            if let Some((fx, fy)) = fixed {
                if (x == fx) != (y == fy) {
                    continue;
                }
            }
            if !self.consistent(x, y) {
                continue;
            }
            self.map[x] = y;
            self.used[y] = true;
            let keep_going = self.run(x + 1, fixed, visit);
            self.used[y] = false;
            self.map[x] = usize::MAX;
            if !keep_going {
                return false;
            }
        }
        true
    }
}

/// All homeomorphisms `s1 → s2`, in lexicographic order of the point map.
///
/// The result can be as large as `n!`; use [`find_homeomorphism`] when one
/// witness suffices.
pub fn homeomorphisms(s1: &FiniteSpace, s2: &FiniteSpace) -> Vec<Homeomorphism> {
    if s1.n() != s2.n() || s1.opens().len() != s2.opens().len() {
        return Vec::new();
    }
    let mut out = Vec::new();
    Search::new(s1, s2).run(0, None, &mut |m| {
        out.push(Homeomorphism { map: m.to_vec() });
        true
    });
    out
}

pub fn find_homeomorphism(s1: &FiniteSpace, s2: &FiniteSpace) -> Option<Homeomorphism> {
    find_with(s1, s2, None)
}

fn find_with(s1: &FiniteSpace, s2: &FiniteSpace, fixed: Option<(usize, usize)>) -> Option<Homeomorphism> {
    if s1.n() != s2.n() || s1.opens().len() != s2.opens().len() {
        return None;
    }
    let mut found = None;
    Search::new(s1, s2).run(0, fixed, &mut |m| {
        found = Some(Homeomorphism { map: m.to_vec() });
        false
    });
    found
}

/// Every pair of points is exchanged by some self-homeomorphism.
pub fn is_homogeneous(space: &FiniteSpace) -> bool {
    // Orbits partition the points, so the orbit of 0 decides.
    (1..space.n()).all(|y| find_with(space, space, Some((0, y))).is_some())
}

/// A labelling-independent key: equal keys iff the spaces are homeomorphic.
///
/// Points are ordered by [`point_invariant`]; the key is the least
/// neighbourhood vector over all relabellings consistent with that order.
pub fn canonical_key(space: &FiniteSpace) -> Vec<u32> {
    let n = space.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| point_invariant(space, x));
    let inv: Vec<_> = order.iter().map(|&x| point_invariant(space, x)).collect();
    // Block boundaries of equal invariants; points may only move inside a block.
    let mut blocks = Vec::new();
    let mut start = 0;
    for i in 1..=n {
        if i == n || inv[i] != inv[start] {
            blocks.push(start..i);
            start = i;
        }
    }

    let mut best: Option<Vec<u32>> = None;
    let mut slots = order.clone();
    permute_blocks(&mut slots, &blocks, 0, &mut |slots| {
        // slots[i] = old point placed at new index i
        let mut relabel = vec![0; n];
        for (i, &x) in slots.iter().enumerate() {
            relabel[x] = i;
        }
        let key: Vec<u32> = slots
            .iter()
            .map(|&x| space.nbhd(x).map(&relabel).bits())
            .collect();
        if best.as_ref().is_none_or(|b| key < *b) {
            best = Some(key);
        }
    });
    best.unwrap_or_default()
}

fn permute_blocks(
    slots: &mut Vec<usize>,
    blocks: &[std::ops::Range<usize>],
    b: usize,
    visit: &mut dyn FnMut(&[usize]),
) {
    if b == blocks.len() {
        visit(slots);
        return;
    }
    let range = blocks[b].clone();
    heap_permutations(slots, range.start, range.end - range.start, &mut |s| {
        permute_blocks(s, blocks, b + 1, visit)
    });
}

/// Heap's algorithm on `slots[lo..lo + k]`.
fn heap_permutations(
    slots: &mut Vec<usize>,
    lo: usize,
    k: usize,
    visit: &mut dyn FnMut(&mut Vec<usize>),
) {
    if k <= 1 {
        visit(slots);
        return;
    }
    for i in 0..k - 1 {
        heap_permutations(slots, lo, k - 1, visit);
        if k.is_multiple_of(2) {
            slots.swap(lo + i, lo + k - 1);
        } else {
            slots.swap(lo, lo + k - 1);
        }
    }
    heap_permutations(slots, lo, k - 1, visit);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setcore::{fixture, validate_topology};

    #[test]
    fn sierpinski_has_only_identity() {
        let s = fixture("SIERP").unwrap();
        assert_eq!(homeomorphisms(&s, &s), vec![Homeomorphism::identity(2)]);
        assert!(!is_homogeneous(&s));
    }

    #[test]
    fn discrete_and_indiscrete_are_homogeneous() {
        for name in ["DISC_3", "INDISC_3"] {
            let s = fixture(name).unwrap();
            assert!(is_homogeneous(&s));
            assert_eq!(homeomorphisms(&s, &s).len(), 6);
        }
    }

    #[test]
    fn homeomorphisms_carry_opens() {
        let a = validate_topology(3, &[0, 1, 3, 7].map(PointSet::from_bits)).unwrap();
        let b = validate_topology(3, &[0, 4, 6, 7].map(PointSet::from_bits)).unwrap();
        let hs = homeomorphisms(&a, &b);
        assert_eq!(hs.len(), 1);
        let mut image: Vec<_> = a.opens().iter().map(|&u| hs[0].apply(u)).collect();
        image.sort();
        assert_eq!(image, b.opens());
        assert_eq!(canonical_key(&a), canonical_key(&b));
    }

    #[test]
    fn different_sizes_are_not_homeomorphic() {
        let a = fixture("DISC_2").unwrap();
        let b = fixture("DISC_3").unwrap();
        assert!(homeomorphisms(&a, &b).is_empty());
        assert!(find_homeomorphism(&a, &b).is_none());
    }
}
