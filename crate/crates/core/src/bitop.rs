//! Smallness notions on finite bitopological spaces `(X, τ₁, τ₂)`.
//!
//! For indices `(i, j)` the basic operator is `A ↦ τⱼ-int(τᵢ-cl A)`. A set is
//! rare when that image is empty and sg-closed when the image lies in every
//! τᵢ-semi-open superset. On a finite ground a countable union is a finite
//! one, so meager means "union of rare sets" and sg-meager "union of
//! sg-closed sets".

use serde::Serialize;

use crate::error::{Result, TopoError};
use crate::operators::is_semi_open;
use crate::setcore::{enumerate_topologies, FiniteSpace, PointSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BitopSpace {
    pub tau1: FiniteSpace,
    pub tau2: FiniteSpace,
}

impl BitopSpace {
    pub fn new(tau1: FiniteSpace, tau2: FiniteSpace) -> Result<Self> {
        if tau1.n() != tau2.n() {
            return Err(TopoError::BadSize(format!(
                "ground sizes differ: {} vs {}",
                tau1.n(),
                tau2.n()
            )));
        }
        Ok(BitopSpace { tau1, tau2 })
    }

    pub fn n(&self) -> usize {
        self.tau1.n()
    }

    pub fn topology(&self, index: usize) -> Result<&FiniteSpace> {
        match index {
            1 => Ok(&self.tau1),
            2 => Ok(&self.tau2),
            other => Err(TopoError::BadIndex(other)),
        }
    }

    /// Operators and semi-open family for one index order.
    pub fn view(&self, i: usize, j: usize) -> Result<BitopView<'_>> {
        let ti = self.topology(i)?;
        let tj = self.topology(j)?;
        Ok(BitopView {
            ti,
            tj,
            semi_open_i: ti.subsets().filter(|&u| is_semi_open(ti, u)).collect(),
        })
    }
}

pub struct BitopView<'a> {
    ti: &'a FiniteSpace,
    tj: &'a FiniteSpace,
    semi_open_i: Vec<PointSet>,
}

impl BitopView<'_> {
    /// `τⱼ-int(τᵢ-cl A)`
    pub fn int_cl(&self, a: PointSet) -> PointSet {
        self.tj.interior(self.ti.closure(a))
    }

    pub fn rare(&self, a: PointSet) -> bool {
        self.int_cl(a).is_empty()
    }

    pub fn sg_closed(&self, a: PointSet) -> bool {
        let core = self.int_cl(a);
        self.semi_open_i
            .iter()
            .filter(|u| a.is_subset(**u))
            .all(|u| core.is_subset(*u))
    }

    /// Rare sets are hereditary, so `A` is a union of rare sets iff each of
    /// its singletons is rare.
    pub fn meager(&self, a: PointSet) -> bool {
        a.iter().all(|x| self.rare(PointSet::singleton(x)))
    }

    /// sg-closed sets are not hereditary: take the union of all sg-closed
    /// subsets of `A`.
    pub fn sg_meager(&self, a: PointSet) -> bool {
        a.subsets()
            .filter(|&b| self.sg_closed(b))
            .fold(PointSet::EMPTY, |acc, b| acc | b)
            == a
    }

    pub fn flags(&self, a: PointSet) -> BitopFlags {
        BitopFlags {
            rare: self.rare(a),
            sg_closed: self.sg_closed(a),
            meager: self.meager(a),
            sg_meager: self.sg_meager(a),
        }
    }

    /// No nonempty τᵢ-open set is meager.
    pub fn baire(&self) -> bool {
        self.ti
            .opens()
            .iter()
            .all(|&u| u.is_empty() || !self.meager(u))
    }

    /// No nonempty τᵢ-open set is sg-meager.
    pub fn utterly_baire(&self) -> bool {
        self.ti
            .opens()
            .iter()
            .all(|&u| u.is_empty() || !self.sg_meager(u))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BitopFlags {
    pub rare: bool,
    pub sg_closed: bool,
    pub meager: bool,
    pub sg_meager: bool,
}

pub fn bitop_set_flags(space: &BitopSpace, i: usize, j: usize, a: PointSet) -> Result<BitopFlags> {
    space.tau1.check_subset(a)?;
    Ok(space.view(i, j)?.flags(a))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BitopReport {
    pub baire_12: bool,
    pub baire_21: bool,
    pub utterly_12: bool,
    pub utterly_21: bool,
}

impl BitopReport {
    pub const BOOL_NAMES: &'static [&'static str] = &["baire_12", "baire_21", "utterly_12", "utterly_21"];

    pub fn get(&self, name: &str) -> Option<bool> {
        Some(match name {
            "baire_12" => self.baire_12,
            "baire_21" => self.baire_21,
            "utterly_12" => self.utterly_12,
            "utterly_21" => self.utterly_21,
            _ => return None,
        })
    }
}

pub fn bitop_space_report(space: &BitopSpace) -> BitopReport {
    let v12 = space.view(1, 2).expect("valid indices");
    let v21 = space.view(2, 1).expect("valid indices");
    BitopReport {
        baire_12: v12.baire(),
        baire_21: v21.baire(),
        utterly_12: v12.utterly_baire(),
        utterly_21: v21.utterly_baire(),
    }
}

/// Outcome of the exhaustive implication sweep over all topology pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BitopSweep {
    pub n: usize,
    pub pairs: usize,
    pub sets_checked: usize,
    pub rare_not_sg_closed: Option<String>,
    pub meager_not_sg_meager: Option<String>,
    pub utterly_not_baire: Option<String>,
    pub rare_not_hereditary: Option<String>,
    pub meager_not_ideal: Option<String>,
    /// First pair (canonical order) that is (1,2)-Baire but not utterly.
    pub baire_not_utterly: Option<(FiniteSpace, FiniteSpace)>,
}

impl BitopSweep {
    pub fn all_pass(&self) -> bool {
        self.rare_not_sg_closed.is_none()
            && self.meager_not_sg_meager.is_none()
            && self.utterly_not_baire.is_none()
            && self.rare_not_hereditary.is_none()
            && self.meager_not_ideal.is_none()
    }
}

/// Checks rare ⇒ sg-closed, meager ⇒ sg-meager, utterly Baire ⇒ Baire,
/// heredity of rare sets and the ideal property of meager sets over every
/// pair of topologies on `n` points and both index orders.
pub fn sweep_implications(n: usize) -> Result<BitopSweep> {
    let spaces = enumerate_topologies(n, false)?;
    let mut sweep = BitopSweep {
        n,
        pairs: 0,
        sets_checked: 0,
        rare_not_sg_closed: None,
        meager_not_sg_meager: None,
        utterly_not_baire: None,
        rare_not_hereditary: None,
        meager_not_ideal: None,
        baire_not_utterly: None,
    };
    let note = |slot: &mut Option<String>, msg: String| {
        if slot.is_none() {
            *slot = Some(msg);
        }
    };
    for t1 in &spaces {
        for t2 in &spaces {
            let space = BitopSpace::new(t1.clone(), t2.clone())?;
            sweep.pairs += 1;
            for (i, j) in [(1, 2), (2, 1)] {
                let view = space.view(i, j)?;
                let flags: Vec<BitopFlags> = t1.subsets().map(|a| view.flags(a)).collect();
                for a in t1.subsets() {
                    sweep.sets_checked += 1;
                    let f = flags[a.bits() as usize];
                    let tag = || format!("{t1:?} / {t2:?} ({i},{j}) A={a}");
                    if f.rare && !f.sg_closed {
                        note(&mut sweep.rare_not_sg_closed, tag());
                    }
                    if f.meager && !f.sg_meager {
                        note(&mut sweep.meager_not_sg_meager, tag());
                    }
                    if f.rare && a.subsets().any(|b| !flags[b.bits() as usize].rare) {
                        note(&mut sweep.rare_not_hereditary, tag());
                    }
                    if f.meager {
                        let sub_ok = a.subsets().all(|b| flags[b.bits() as usize].meager);
                        let union_ok = t1
                            .subsets()
                            .filter(|b| flags[b.bits() as usize].meager)
                            .all(|b| flags[(a | b).bits() as usize].meager);
                        if !sub_ok || !union_ok {
                            note(&mut sweep.meager_not_ideal, tag());
                        }
                    }
                }
                let baire = view.baire();
                let utterly = view.utterly_baire();
                if utterly && !baire {
                    note(&mut sweep.utterly_not_baire, format!("{t1:?} / {t2:?} ({i},{j})"));
                }
                if (i, j) == (1, 2) && baire && !utterly && sweep.baire_not_utterly.is_none() {
                    sweep.baire_not_utterly = Some((t1.clone(), t2.clone()));
                }
            }
        }
    }
    Ok(sweep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::FlagContext;
    use crate::setcore::fixture;

    fn ps(points: &[usize]) -> PointSet {
        PointSet::from_points(points.iter().copied())
    }

    fn pair(a: &str, b: &str) -> BitopSpace {
        BitopSpace::new(fixture(a).unwrap(), fixture(b).unwrap()).unwrap()
    }

    #[test]
    fn sierpinski_pair_flags() {
        let f = bitop_set_flags(&pair("SIERP", "SIERP"), 1, 2, ps(&[1])).unwrap();
        assert!(f.rare && f.sg_closed && f.meager);
    }

    #[test]
    fn empty_set_is_small_everywhere() {
        for (a, b) in [("SIERP", "DISC_2"), ("INDISC_2", "SIERP"), ("DISC_2", "DISC_2")] {
            let s = pair(a, b);
            for (i, j) in [(1, 2), (2, 1)] {
                let f = bitop_set_flags(&s, i, j, PointSet::EMPTY).unwrap();
                assert!(f.rare && f.sg_closed && f.meager && f.sg_meager);
            }
        }
    }

    #[test]
    fn rare_depends_on_index_order() {
        let s = pair("DISC_2", "INDISC_2");
        // τ₂-int(τ₁-cl {0}) = τ₂-int {0} = ∅
        assert!(bitop_set_flags(&s, 1, 2, ps(&[0])).unwrap().rare);
        // τ₁-int(τ₂-cl {0}) = τ₁-int X = X
        assert!(!bitop_set_flags(&s, 2, 1, ps(&[0])).unwrap().rare);
    }

    #[test]
    fn errors() {
        let s = pair("SIERP", "SIERP");
        assert_eq!(bitop_set_flags(&s, 3, 1, ps(&[0])), Err(TopoError::BadIndex(3)));
        assert!(bitop_set_flags(&s, 1, 2, ps(&[2])).is_err());
        assert!(BitopSpace::new(fixture("SIERP").unwrap(), fixture("CONE3").unwrap()).is_err());
    }

    #[test]
    fn space_report_examples() {
        // Every subset of a discrete space is sg-closed, X included.
        let r = bitop_space_report(&pair("DISC_2", "DISC_2"));
        assert!(r.baire_12 && r.baire_21 && !r.utterly_12 && !r.utterly_21);
        let r = bitop_space_report(&pair("INDISC_2", "INDISC_2"));
        assert!(r.baire_12 && !r.utterly_12);
        let r = bitop_space_report(&pair("SIERP", "SIERP"));
        assert!(r.baire_12);
    }

    #[test]
    fn equal_topologies_match_single_space_sg_closed() {
        for n in 0..=3 {
            for t in enumerate_topologies(n, false).unwrap() {
                let ctx = FlagContext::new(&t);
                let s = BitopSpace::new(t.clone(), t.clone()).unwrap();
                let v = s.view(1, 2).unwrap();
                for a in t.subsets() {
                    assert_eq!(v.sg_closed(a), ctx.sg_closed(a), "{t:?} {a}");
                }
            }
        }
    }

    #[test]
    fn whole_space_is_always_sg_closed() {
        for n in 1..=3 {
            let spaces = enumerate_topologies(n, false).unwrap();
            for t1 in &spaces {
                for t2 in &spaces {
                    let s = BitopSpace::new(t1.clone(), t2.clone()).unwrap();
                    assert!(s.view(1, 2).unwrap().sg_closed(t1.ground()));
                    let r = bitop_space_report(&s);
                    assert!(!r.utterly_12 && !r.utterly_21);
                }
            }
        }
    }

    #[test]
    fn sweep_on_two_points() {
        let sweep = sweep_implications(2).unwrap();
        assert_eq!(sweep.pairs, 16);
        assert!(sweep.all_pass(), "{sweep:?}");
        assert!(sweep.baire_not_utterly.is_some());
    }
}
