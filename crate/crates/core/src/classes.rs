//! Point decomposition, scatteredness, ideals of small sets and space-level
//! predicates on finite spaces.

use serde::Serialize;

use crate::error::Result;
use crate::operators::{
    derived_topology, is_nowhere_dense, is_semi_closed, is_semi_open, nowhere_dense_points,
    DerivedKind, FlagContext,
};
use crate::setcore::{is_homogeneous, subspace, FiniteSpace, PointSet};

/// `X = X₁ ⊔ X₂` where `X₁` holds the points with nowhere dense singleton.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub x1: PointSet,
    pub x2: PointSet,
}

pub fn decompose(space: &FiniteSpace) -> Decomposition {
    let x1 = nowhere_dense_points(space);
    let x2 = space.complement(x1);
    debug_assert!(x2.iter().all(|x| {
        let s = PointSet::singleton(x);
        s.is_subset(space.interior(space.closure(s)))
    }));
    Decomposition { x1, x2 }
}

/// Cantor–Bendixson analysis of a subspace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScatterReport {
    pub is_scattered: bool,
    /// Successive derived sets `A', A'', …`, ending with the kernel.
    pub derivative_chain: Vec<PointSet>,
    /// The crowded residue.
    pub kernel: PointSet,
    /// Number of strict removal rounds.
    pub rank: usize,
}

pub fn scattered_check(space: &FiniteSpace, a: PointSet) -> Result<ScatterReport> {
    space.check_subset(a)?;
    let mut chain = Vec::new();
    let mut current = a;
    loop {
        let isolated = space.isolated_in(current);
        if isolated.is_empty() {
            break;
        }
        current = current - isolated;
        chain.push(current);
    }
    Ok(ScatterReport {
        is_scattered: current.is_empty(),
        rank: chain.len(),
        derivative_chain: chain,
        kernel: current,
    })
}

/// Every nonempty subset of `a` has a point isolated in it.
pub fn is_scattered(space: &FiniteSpace, a: PointSet) -> bool {
    let mut current = a;
    loop {
        if current.is_empty() {
            return true;
        }
        let isolated = space.isolated_in(current);
        if isolated.is_empty() {
            return false;
        }
        current = current - isolated;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum IdealKind {
    /// Nowhere dense sets.
    N,
    /// Scattered sets.
    S,
    /// Discrete subspaces.
    D,
    /// Closed and discrete sets.
    CD,
    /// Finite sets; every subset on a finite ground.
    Finite,
}

pub fn ideal_family(space: &FiniteSpace, kind: IdealKind) -> Vec<PointSet> {
    space
        .subsets()
        .filter(|&a| match kind {
            IdealKind::N => is_nowhere_dense(space, a),
            IdealKind::S => is_scattered(space, a),
            IdealKind::D => space.isolated_in(a) == a,
            IdealKind::CD => space.isolated_in(a) == a && space.is_closed(a),
            IdealKind::Finite => true,
        })
        .collect()
}

/// Every nowhere dense subset is scattered.
pub fn is_n_scattered(space: &FiniteSpace) -> bool {
    space
        .subsets()
        .all(|a| !is_nowhere_dense(space, a) || is_scattered(space, a))
}

/// `NS(τ)`, the union of the open sets whose subspace is N-scattered, and its
/// complement `NP(τ)`.
pub fn ns_kernel(space: &FiniteSpace) -> (PointSet, PointSet) {
    let ns = space
        .opens()
        .iter()
        .copied()
        .filter(|&u| is_n_scattered(&subspace(space, u).expect("opens lie in the ground")))
        .fold(PointSet::EMPTY, |acc, u| acc | u);
    debug_assert!(space.is_open(ns));
    (ns, space.complement(ns))
}

/// Labels of the eleven equivalent formulations of N-scatteredness.
pub const N_SCATTERED_CLAUSES: [&str; 11] = [
    "a: nowhere dense subspaces are scattered",
    "b: nonempty nowhere dense subspaces have an isolated point",
    "c: N(τ) ⊆ S(τ)",
    "d: closed nowhere dense sets are scattered",
    "e: open sets have scattered boundary",
    "f: α-boundaries of α-open sets are scattered",
    "g: semi-open sets have scattered boundary",
    "h: open N-scattered subspaces form a base",
    "i: open N-scattered subspaces cover X",
    "j: nonempty open subspaces are N-scattered",
    "k: nowhere dense subspaces are α-scattered",
];

/// Evaluates each clause independently.
pub fn n_scattered_clauses(space: &FiniteSpace) -> [bool; 11] {
    let nowhere_dense: Vec<PointSet> = space
        .subsets()
        .filter(|&a| is_nowhere_dense(space, a))
        .collect();
    let sub = |a: PointSet| subspace(space, a).expect("subset of the ground");
    let whole_scattered = |s: &FiniteSpace| is_scattered(s, s.ground());
    let nonempty_opens = || space.opens().iter().copied().filter(|u| !u.is_empty());
    let ns_opens: Vec<PointSet> = space
        .opens()
        .iter()
        .copied()
        .filter(|&u| is_n_scattered(&sub(u)))
        .collect();

    let a = nowhere_dense.iter().all(|&m| whole_scattered(&sub(m)));
    let b = nowhere_dense
        .iter()
        .all(|&m| m.is_empty() || !space.isolated_in(m).is_empty());
    let c = {
        let scattered = ideal_family(space, IdealKind::S);
        nowhere_dense
            .iter()
            .all(|m| scattered.binary_search(m).is_ok())
    };
    let d = nowhere_dense
        .iter()
        .filter(|&&m| space.is_closed(m))
        .all(|&m| is_scattered(space, m));
    let e = nonempty_opens().all(|u| is_scattered(space, space.boundary(u)));
    let f = {
        let alpha = derived_topology(space, DerivedKind::Alpha);
        alpha
            .opens()
            .iter()
            .all(|&u| is_scattered(space, alpha.boundary(u)))
    };
    let g = space
        .subsets()
        .filter(|&s| !s.is_empty() && is_semi_open(space, s))
        .all(|s| is_scattered(space, space.boundary(s)));
    let h = space.opens().iter().all(|&u| {
        ns_opens
            .iter()
            .filter(|v| v.is_subset(u))
            .fold(PointSet::EMPTY, |acc, &v| acc | v)
            == u
    });
    let i = ns_opens.iter().fold(PointSet::EMPTY, |acc, &v| acc | v) == space.ground();
    let j = nonempty_opens().all(|u| is_n_scattered(&sub(u)));
    let k = nowhere_dense.iter().all(|&m| {
        let alpha = derived_topology(&sub(m), DerivedKind::Alpha);
        whole_scattered(&alpha)
    });
    [a, b, c, d, e, f, g, h, i, j, k]
}

/// Maximum cellular family (pairwise disjoint nonempty opens).
///
/// Distinct minimal nonempty open sets are disjoint and every nonempty open
/// set contains one, so the minimal opens form a maximum family.
pub fn cellular_families(space: &FiniteSpace) -> (usize, Vec<PointSet>) {
    let mut minimal: Vec<PointSet> = space
        .opens()
        .iter()
        .copied()
        .filter(|&u| {
            !u.is_empty()
                && space
                    .opens()
                    .iter()
                    .all(|&v| v.is_empty() || v == u || !v.is_subset(u))
        })
        .collect();
    minimal.sort_unstable();
    (minimal.len(), minimal)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemiNormalReport {
    pub semi_normal: bool,
    pub sg_separation: bool,
    /// Least disjoint semi-closed pair without disjoint semi-open supersets.
    pub semi_witness: Option<(PointSet, PointSet)>,
    /// Least disjoint semi-closed pair without disjoint sg-open supersets.
    pub sg_witness: Option<(PointSet, PointSet)>,
}

/// Is there `U ⊇ a`, `V ⊇ b` from `family`, disjoint?
fn separated(family: &[PointSet], member: &dyn Fn(PointSet) -> bool, n: usize, a: PointSet, b: PointSet) -> bool {
    family.iter().any(|&u| {
        if !a.is_subset(u) || u.intersects(b) {
            return false;
        }
        let room = u.complement(n);
        let largest = family
            .iter()
            .filter(|v| v.is_subset(room))
            .fold(PointSet::EMPTY, |acc, &v| acc | v);
        if member(largest) {
            b.is_subset(largest)
        } else {
            family.iter().any(|&v| b.is_subset(v) && v.is_subset(room))
        }
    })
}

pub fn semi_normal_check(space: &FiniteSpace) -> SemiNormalReport {
    let n = space.n();
    let ctx = FlagContext::new(space);
    let semi_closed: Vec<PointSet> = space
        .subsets()
        .filter(|&a| is_semi_closed(space, a))
        .collect();
    let semi_open: Vec<PointSet> = space.subsets().filter(|&a| is_semi_open(space, a)).collect();
    let sg_open: Vec<PointSet> = space.subsets().filter(|&a| ctx.sg_open(a)).collect();
    let is_semi_open_fn = |s: PointSet| is_semi_open(space, s);
    let is_sg_open_fn = |s: PointSet| ctx.sg_open(s);

    let mut semi_witness = None;
    let mut sg_witness = None;
    'pairs: for (i, &a) in semi_closed.iter().enumerate() {
        for &b in &semi_closed[i..] {
            if a.intersects(b) {
                continue;
            }
            if semi_witness.is_none() && !separated(&semi_open, &is_semi_open_fn, n, a, b) {
                semi_witness = Some((a, b));
            }
            if sg_witness.is_none() && !separated(&sg_open, &is_sg_open_fn, n, a, b) {
                sg_witness = Some((a, b));
            }
            if semi_witness.is_some() && sg_witness.is_some() {
                break 'pairs;
            }
        }
    }
    SemiNormalReport {
        semi_normal: semi_witness.is_none(),
        sg_separation: sg_witness.is_none(),
        semi_witness,
        sg_witness,
    }
}

/// Space-level predicates of a finite space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpaceReport {
    pub t0: bool,
    pub t1: bool,
    pub td: bool,
    pub semi_td: bool,
    pub extremally_disconnected: bool,
    pub submaximal: bool,
    pub globally_disconnected: bool,
    pub partition: bool,
    pub indiscrete: bool,
    pub discrete: bool,
    pub crowded: bool,
    pub homogeneous: bool,
    pub scattered: bool,
    pub alpha_scattered: bool,
    pub n_scattered: bool,
    pub hsg_scattered: bool,
    pub alpha_space: bool,
    pub semi_normal: bool,
    pub sg_separation: bool,
    /// Every singleton is sg-open or sg-closed.
    pub sg_t_half: bool,
    /// The semi-open sets form a topology.
    pub so_topology: bool,
    /// The sg-open sets form a topology.
    pub sgo_topology: bool,
    pub x1: PointSet,
    pub x2: PointSet,
    pub ideal_n: Vec<PointSet>,
    pub ideal_s: Vec<PointSet>,
    pub ideal_d: Vec<PointSet>,
    pub ideal_cd: Vec<PointSet>,
    /// Finite stand-in for the C₃ condition.
    pub hsg_closed_sets: Vec<PointSet>,
    pub ns_kernel: PointSet,
    pub np: PointSet,
    pub max_cellular: usize,
}

impl SpaceReport {
    pub const BOOL_NAMES: &'static [&'static str] = &[
        "t0",
        "t1",
        "td",
        "semi_td",
        "extremally_disconnected",
        "submaximal",
        "globally_disconnected",
        "partition",
        "indiscrete",
        "discrete",
        "crowded",
        "homogeneous",
        "scattered",
        "alpha_scattered",
        "n_scattered",
        "hsg_scattered",
        "alpha_space",
        "semi_normal",
        "sg_separation",
        "sg_t_half",
        "so_topology",
        "sgo_topology",
    ];

    pub fn get(&self, name: &str) -> Option<bool> {
        Some(match name {
            "t0" => self.t0,
            "t1" => self.t1,
            "td" => self.td,
            "semi_td" => self.semi_td,
            "extremally_disconnected" => self.extremally_disconnected,
            "submaximal" => self.submaximal,
            "globally_disconnected" => self.globally_disconnected,
            "partition" => self.partition,
            "indiscrete" => self.indiscrete,
            "discrete" => self.discrete,
            "crowded" => self.crowded,
            "homogeneous" => self.homogeneous,
            "scattered" => self.scattered,
            "alpha_scattered" => self.alpha_scattered,
            "n_scattered" => self.n_scattered,
            "hsg_scattered" => self.hsg_scattered,
            "alpha_space" => self.alpha_space,
            "semi_normal" => self.semi_normal,
            "sg_separation" => self.sg_separation,
            "sg_t_half" => self.sg_t_half,
            "so_topology" => self.so_topology,
            "sgo_topology" => self.sgo_topology,
            _ => return None,
        })
    }
}

fn closed_under_union_and_intersection(family: &[PointSet]) -> bool {
    let has = |s: PointSet| family.binary_search(&s).is_ok();
    family
        .iter()
        .all(|&a| family.iter().all(|&b| has(a | b) && has(a & b)))
}

pub fn space_report(space: &FiniteSpace) -> SpaceReport {
    let n = space.n();
    let ground = space.ground();
    let ctx = FlagContext::new(space);
    let Decomposition { x1, x2 } = decompose(space);
    let nbhd = space.neighborhoods();
    let singletons = || (0..n).map(PointSet::singleton);

    let t0 = (0..n).all(|x| (x + 1..n).all(|y| nbhd[x] != nbhd[y]));
    let t1 = (0..n).all(|x| nbhd[x] == PointSet::singleton(x));
    let td = (0..n).all(|x| (nbhd[x] & space.closure(PointSet::singleton(x))) == PointSet::singleton(x));
    let semi_td = singletons().all(|s| space.is_open(s) || is_nowhere_dense(space, s));
    let extremally_disconnected = space.opens().iter().all(|&u| space.is_open(space.closure(u)));
    let submaximal = space
        .subsets()
        .filter(|&a| space.closure(a) == ground)
        .all(|a| space.is_open(a));
    let semi_open: Vec<PointSet> = space.subsets().filter(|&a| is_semi_open(space, a)).collect();
    let globally_disconnected = semi_open.iter().all(|&a| space.is_open(a));
    let partition = space.opens().iter().all(|&u| space.is_closed(u));
    let indiscrete = space.opens().len() <= 2;
    let discrete = t1;
    let crowded = space.isolated_in(ground).is_empty();
    let scattered = is_scattered(space, ground);
    let alpha = derived_topology(space, DerivedKind::Alpha);
    let alpha_scattered = is_scattered(&alpha, alpha.ground());
    let n_scattered = is_n_scattered(space);
    let hsg_closed_sets: Vec<PointSet> = space.subsets().filter(|&a| ctx.hsg_closed(a)).collect();
    let hsg_scattered = hsg_closed_sets.iter().all(|&a| is_scattered(space, a));
    let alpha_space = alpha == *space;
    let semi = semi_normal_check(space);
    let sg_t_half = singletons().all(|s| ctx.sg_open(s) || ctx.sg_closed(s));
    let sg_open: Vec<PointSet> = space.subsets().filter(|&a| ctx.sg_open(a)).collect();
    let (ns, np) = ns_kernel(space);

    SpaceReport {
        t0,
        t1,
        td,
        semi_td,
        extremally_disconnected,
        submaximal,
        globally_disconnected,
        partition,
        indiscrete,
        discrete,
        crowded,
        homogeneous: is_homogeneous(space),
        scattered,
        alpha_scattered,
        n_scattered,
        hsg_scattered,
        alpha_space,
        semi_normal: semi.semi_normal,
        sg_separation: semi.sg_separation,
        sg_t_half,
        so_topology: closed_under_union_and_intersection(&semi_open),
        sgo_topology: closed_under_union_and_intersection(&sg_open),
        x1,
        x2,
        ideal_n: ideal_family(space, IdealKind::N),
        ideal_s: ideal_family(space, IdealKind::S),
        ideal_d: ideal_family(space, IdealKind::D),
        ideal_cd: ideal_family(space, IdealKind::CD),
        hsg_closed_sets,
        ns_kernel: ns,
        np,
        max_cellular: cellular_families(space).0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setcore::fixture;

    fn ps(points: &[usize]) -> PointSet {
        PointSet::from_points(points.iter().copied())
    }

    #[test]
    fn decompose_examples() {
        let pp = decompose(&fixture("PP3").unwrap());
        assert_eq!((pp.x1, pp.x2), (ps(&[2]), ps(&[0, 1])));
        assert_eq!(decompose(&fixture("DISC_3").unwrap()).x1, ps(&[]));
        let s = decompose(&fixture("SIERP").unwrap());
        assert_eq!((s.x1, s.x2), (ps(&[1]), ps(&[0])));
    }

    #[test]
    fn scattered_check_examples() {
        let ind = fixture("INDISC_2").unwrap();
        let r = scattered_check(&ind, ind.ground()).unwrap();
        assert!(!r.is_scattered);
        assert_eq!(r.kernel, ind.ground());
        assert_eq!(r.rank, 0);

        let lray = fixture("LRAY4").unwrap();
        let r = scattered_check(&lray, lray.ground()).unwrap();
        assert!(r.is_scattered);
        assert_eq!(r.rank, 4);
        assert_eq!(
            r.derivative_chain,
            vec![ps(&[1, 2, 3]), ps(&[2, 3]), ps(&[3]), ps(&[])]
        );

        let cone = fixture("CONE3").unwrap();
        let r = scattered_check(&cone, cone.ground()).unwrap();
        assert!(!r.is_scattered);
        assert_eq!(r.kernel, ps(&[1, 2]));
        assert!(scattered_check(&cone, ps(&[3])).is_err());
    }

    #[test]
    fn ideal_family_examples() {
        let cone = fixture("CONE3").unwrap();
        assert_eq!(
            ideal_family(&cone, IdealKind::N),
            vec![ps(&[]), ps(&[1]), ps(&[2]), ps(&[1, 2])]
        );
        let s = ideal_family(&cone, IdealKind::S);
        let expected: Vec<_> = cone
            .subsets()
            .filter(|&a| a != ps(&[1, 2]) && a != cone.ground())
            .collect();
        assert_eq!(s, expected);
        for n in 1..=4 {
            let d = fixture(&format!("DISC_{n}")).unwrap();
            assert_eq!(ideal_family(&d, IdealKind::N), vec![ps(&[])]);
        }
    }

    #[test]
    fn ns_kernel_examples() {
        assert_eq!(ns_kernel(&fixture("CONE3").unwrap()), (ps(&[0]), ps(&[1, 2])));
        assert_eq!(ns_kernel(&fixture("DISC_3").unwrap()), (ps(&[0, 1, 2]), ps(&[])));
        assert_eq!(ns_kernel(&fixture("INDISC_3").unwrap()), (ps(&[0, 1, 2]), ps(&[])));
    }

    #[test]
    fn space_report_examples() {
        let r = space_report(&fixture("SIERP").unwrap());
        assert!(r.t0 && !r.t1 && r.submaximal && r.scattered && r.n_scattered);
        let r = space_report(&fixture("CONE3").unwrap());
        assert!(!r.n_scattered && !r.t0 && !r.partition);
        for n in 1..=4 {
            let r = space_report(&fixture(&format!("DISC_{n}")).unwrap());
            assert!(r.partition && r.extremally_disconnected && r.scattered);
        }
    }

    #[test]
    fn cellular_examples() {
        assert_eq!(
            cellular_families(&fixture("DISC_3").unwrap()),
            (3, vec![ps(&[0]), ps(&[1]), ps(&[2])])
        );
        assert_eq!(cellular_families(&fixture("INDISC_3").unwrap()), (1, vec![ps(&[0, 1, 2])]));
        assert_eq!(cellular_families(&fixture("SIERP").unwrap()), (1, vec![ps(&[0])]));
    }

    #[test]
    fn semi_normal_examples() {
        let r = semi_normal_check(&fixture("DISC_2").unwrap());
        assert!(r.semi_normal && r.sg_separation);
        let r = semi_normal_check(&fixture("CONE3").unwrap());
        assert!(!r.semi_normal && !r.sg_separation);
        assert_eq!(r.semi_witness, Some((ps(&[1]), ps(&[2]))));
        assert_eq!(r.sg_witness, Some((ps(&[1]), ps(&[2]))));
        let r = semi_normal_check(&fixture("SIERP").unwrap());
        assert!(r.semi_normal && r.sg_separation);
    }

    #[test]
    fn clauses_agree_on_fixtures() {
        for name in ["SIERP", "CONE3", "PP3", "DOUBLEPT3", "T28FIX6", "LRAY_4", "RRAY_4"] {
            let s = fixture(name).unwrap();
            let clauses = n_scattered_clauses(&s);
            let expected = is_n_scattered(&s);
            assert!(clauses.iter().all(|&c| c == expected), "{name}: {clauses:?}");
        }
    }

    #[test]
    fn report_atom_names_resolve() {
        let r = space_report(&fixture("PP3").unwrap());
        for name in SpaceReport::BOOL_NAMES {
            assert!(r.get(name).is_some(), "{name}");
        }
        assert!(r.get("nope").is_none());
    }
}
