//! Per-space checks, each evaluated on every topology of the sweep.

use std::sync::OnceLock;

use crate::classes::{
    cellular_families, decompose, is_n_scattered, is_scattered, n_scattered_clauses, space_report,
    SpaceReport, N_SCATTERED_CLAUSES,
};
use crate::operators::{
    derived_topology, expand_by_ideal, is_nowhere_dense, perfect_nowhere_dense_sets,
    sg_closed_by_definition, DerivedKind, FlagContext, IdealSpec, SetFlags,
};
use crate::setcore::{subspace, FiniteSpace, PointSet};

pub(crate) type Outcome = std::result::Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err(format!($($arg)+));
        }
    };
}

/// Everything the checks share for one space, computed on first use.
pub(crate) struct SpaceCtx<'a> {
    pub space: &'a FiniteSpace,
    pub flag_ctx: FlagContext<'a>,
    pub flags: Vec<SetFlags>,
    sg_def: OnceLock<Vec<bool>>,
    report: OnceLock<SpaceReport>,
}

impl<'a> SpaceCtx<'a> {
    pub fn new(space: &'a FiniteSpace) -> Self {
        let flag_ctx = FlagContext::new(space);
        let flags = flag_ctx.all_flags();
        SpaceCtx {
            space,
            flag_ctx,
            flags,
            sg_def: OnceLock::new(),
            report: OnceLock::new(),
        }
    }

    pub fn f(&self, a: PointSet) -> &SetFlags {
        &self.flags[a.bits() as usize]
    }

    /// sg-closedness of every subset, straight from the definition.
    pub fn sg_def(&self, a: PointSet) -> bool {
        self.sg_def.get_or_init(|| {
            self.space
                .subsets()
                .map(|b| sg_closed_by_definition(self.space, b))
                .collect()
        })[a.bits() as usize]
    }

    pub fn hsg_def(&self, a: PointSet) -> bool {
        a.subsets().all(|b| self.sg_def(b))
    }

    pub fn report(&self) -> &SpaceReport {
        self.report.get_or_init(|| space_report(self.space))
    }

    pub fn subsets(&self) -> impl Iterator<Item = PointSet> + Clone {
        self.space.subsets()
    }

    fn sets_where(&self, pred: impl Fn(&SetFlags) -> bool) -> Vec<PointSet> {
        self.subsets().filter(|&a| pred(self.f(a))).collect()
    }
}

pub(crate) type SpaceCheck = fn(&SpaceCtx) -> Outcome;

pub(crate) fn t1(c: &SpaceCtx) -> Outcome {
    let sg = c.sets_where(|f| f.sg_closed);
    ensure!(c.f(c.space.ground()).sg_closed, "X is not sg-closed");
    for (i, &a) in sg.iter().enumerate() {
        for &b in &sg[i + 1..] {
            ensure!(c.f(a & b).sg_closed, "A={a} B={b}: A∩B={} not sg-closed", a & b);
        }
    }
    Ok(())
}

pub(crate) fn t2(c: &SpaceCtx) -> Outcome {
    let x1 = c.flag_ctx.x1;
    for a in c.subsets() {
        let def = c.sg_def(a);
        let via_scl = (x1 & c.space.semi_closure(a)).is_subset(a);
        let via_int_cl = c.f(a).sg_closed;
        ensure!(
            def == via_scl && def == via_int_cl,
            "A={a}: definition {def}, X₁∩sCl {via_scl}, X₁∩int cl {via_int_cl}"
        );
    }
    Ok(())
}

pub(crate) fn t3(c: &SpaceCtx) -> Outcome {
    let x1 = c.flag_ctx.x1;
    let x2 = c.space.complement(x1);
    for a in c.subsets() {
        let f = c.f(a);
        let formula = (a & x1).is_subset(c.space.semi_interior(a));
        ensure!(f.sg_open == formula, "A={a}: sg-open {} vs A∩X₁⊆sInt A {formula}", f.sg_open);
        if a.is_subset(x2) {
            ensure!(f.sg_open, "A={a} ⊆ X₂ is not sg-open");
        }
        let hsg_open = a.subsets().all(|b| c.sg_def(c.space.complement(b)));
        ensure!(f.hsg_open == hsg_open, "A={a}: hsg-open flag {} vs definition {hsg_open}", f.hsg_open);
    }
    Ok(())
}

pub(crate) fn t4(c: &SpaceCtx) -> Outcome {
    for x in 0..c.space.n() {
        let f = c.f(PointSet::singleton(x));
        ensure!(f.sg_open || f.sg_closed, "{{{x}}} is neither sg-open nor sg-closed");
    }
    Ok(())
}

pub(crate) fn t5(c: &SpaceCtx) -> Outcome {
    let d = decompose(c.space);
    ensure!(d.x1.is_disjoint(d.x2) && (d.x1 | d.x2) == c.space.ground(), "X₁={} X₂={} do not partition X", d.x1, d.x2);
    for x in 0..c.space.n() {
        let f = c.f(PointSet::singleton(x));
        if d.x1.contains(x) {
            ensure!(f.nowhere_dense, "{x} ∈ X₁ but {{{x}}} is not nowhere dense");
        } else {
            ensure!(
                f.sg_open && f.preopen && !f.nowhere_dense,
                "{x} ∈ X₂ but {{{x}}} is not sg-open and locally dense"
            );
        }
    }
    Ok(())
}

pub(crate) fn t6(c: &SpaceCtx) -> Outcome {
    for a in c.subsets() {
        let def = c.hsg_def(a);
        ensure!(def == c.f(a).hsg_closed, "A={a}: definition {def}, X₁∩int cl A=∅ {}", c.f(a).hsg_closed);
    }
    Ok(())
}

pub(crate) fn t7(c: &SpaceCtx) -> Outcome {
    for a in c.subsets() {
        let f = c.f(a);
        ensure!(!f.nowhere_dense || f.hsg_closed, "A={a} nowhere dense, not hsg-closed");
        ensure!(!f.hsg_closed || f.sg_closed, "A={a} hsg-closed, not sg-closed");
    }
    Ok(())
}

pub(crate) fn t8(c: &SpaceCtx) -> Outcome {
    for a in c.subsets() {
        let f = c.f(a);
        ensure!(!f.semi_closed || f.sg_closed, "A={a} semi-closed, not sg-closed");
        ensure!(!f.sg_open || f.beta_open, "A={a} sg-open, not β-open");
    }
    Ok(())
}

pub(crate) fn t9(c: &SpaceCtx) -> Outcome {
    let sg = c.sets_where(|f| f.sg_closed);
    for &a in &sg {
        for b in c.space.closed_sets() {
            ensure!(c.f(a | b).sg_closed, "A={a} sg-closed, B={b} closed, A∪B not sg-closed");
        }
    }
    Ok(())
}

pub(crate) fn t10(c: &SpaceCtx) -> Outcome {
    for a in c.sets_where(|f| f.sg_open) {
        for &u in c.space.opens() {
            ensure!(c.f(a & u).sg_open, "A={a} sg-open, U={u} open, A∩U not sg-open");
        }
    }
    Ok(())
}

pub(crate) fn t11(c: &SpaceCtx) -> Outcome {
    for a in c.subsets() {
        let f = c.f(a);
        ensure!(
            f.regular_open == (f.alpha_open && f.sg_closed),
            "A={a}: regular open {}, α-open {}, sg-closed {}",
            f.regular_open,
            f.alpha_open,
            f.sg_closed
        );
    }
    Ok(())
}

pub(crate) fn t12(c: &SpaceCtx) -> Outcome {
    for &a in c.space.opens() {
        if !c.f(a).sg_closed {
            continue;
        }
        let sub = subspace(c.space, a).expect("open set lies in the ground");
        let sub_ctx = FlagContext::new(&sub);
        for b in a.subsets() {
            let inside = sub_ctx.sg_closed(b.compress(a));
            ensure!(
                inside == c.f(b).sg_closed,
                "A={a}, B={b}: sg-closed in A {inside}, in X {}",
                c.f(b).sg_closed
            );
        }
    }
    Ok(())
}

pub(crate) fn t13(c: &SpaceCtx) -> Outcome {
    for r in c.sets_where(|f| f.delta_open) {
        let sub = subspace(c.space, r).expect("δ-open set lies in the ground");
        let sub_ctx = FlagContext::new(&sub);
        for a in r.subsets() {
            if sub_ctx.sg_open(a.compress(r)) {
                ensure!(c.f(a).sg_open, "R={r} δ-open, A={a} sg-open in R but not in X");
            }
        }
    }
    Ok(())
}

pub(crate) fn t14(c: &SpaceCtx) -> Outcome {
    let all_hsg = c.subsets().all(|a| c.hsg_def(a));
    let indiscrete = c.space.opens().len() <= 2;
    let x1_empty = c.flag_ctx.x1.is_empty();
    ensure!(all_hsg == x1_empty, "X₁ empty {x1_empty}, every subset hsg-closed {all_hsg}");
    ensure!(!indiscrete || all_hsg, "indiscrete but some subset is not hsg-closed");
    Ok(())
}

pub(crate) fn t15(c: &SpaceCtx) -> Outcome {
    let r = c.report();
    ensure!(
        r.semi_normal == r.sg_separation,
        "semi-normal {} vs sg-separation {}",
        r.semi_normal,
        r.sg_separation
    );
    Ok(())
}

pub(crate) fn t16(c: &SpaceCtx) -> Outcome {
    let sg_semi = c.subsets().all(|a| !c.f(a).sg_closed || c.f(a).semi_closed);
    let semi_td = c.report().semi_td;
    ensure!(semi_td == sg_semi, "semi-T_D {semi_td}, every sg-closed set semi-closed {sg_semi}");
    if c.flag_ctx.x1 == c.space.ground() {
        for a in c.subsets() {
            ensure!(c.f(a).sg_closed == c.f(a).semi_closed, "X₁=X, A={a}: sg-closed ≠ semi-closed");
        }
    }
    Ok(())
}

pub(crate) fn t17(c: &SpaceCtx) -> Outcome {
    let r = c.report();
    ensure!(
        r.scattered == (r.alpha_scattered && r.n_scattered),
        "scattered {}, α-scattered {}, N-scattered {}",
        r.scattered,
        r.alpha_scattered,
        r.n_scattered
    );
    Ok(())
}

pub(crate) fn t18(c: &SpaceCtx) -> Outcome {
    let clauses = n_scattered_clauses(c.space);
    let expected = c.report().n_scattered;
    for (label, value) in N_SCATTERED_CLAUSES.iter().zip(clauses) {
        ensure!(value == expected, "clause ({label}) is {value}, N-scattered is {expected}");
    }
    Ok(())
}

pub(crate) fn t19(c: &SpaceCtx) -> Outcome {
    if !c.report().n_scattered {
        return Ok(());
    }
    for a in c.subsets() {
        let sub = subspace(c.space, a).expect("subset of the ground");
        ensure!(is_n_scattered(&sub), "subspace {a} of an N-scattered space is not N-scattered");
    }
    Ok(())
}

pub(crate) fn t20(c: &SpaceCtx) -> Outcome {
    let local = (0..c.space.n()).all(|x| {
        is_n_scattered(&subspace(c.space, c.space.nbhd(x)).expect("neighbourhood in ground"))
    });
    ensure!(!local || c.report().n_scattered, "every point has an N-scattered neighbourhood, X is not N-scattered");
    Ok(())
}

pub(crate) fn t21(c: &SpaceCtx) -> Outcome {
    let all_scattered = c.subsets().all(|a| c.f(a).scattered);
    let t0 = c.report().t0;
    ensure!(t0 == all_scattered, "T₀ {t0}, every finite set scattered {all_scattered}");
    Ok(())
}

pub(crate) fn t22(c: &SpaceCtx) -> Outcome {
    let all_discrete = c.subsets().all(|a| c.f(a).discrete_subset);
    let t1 = c.report().t1;
    ensure!(t1 == all_discrete, "T₁ {t1}, every finite set discrete {all_discrete}");
    Ok(())
}

/// Smallest open set containing `a`.
fn open_hull(space: &FiniteSpace, a: PointSet) -> PointSet {
    a.iter().fold(PointSet::EMPTY, |acc, x| acc | space.nbhd(x))
}

pub(crate) fn t23(c: &SpaceCtx) -> Outcome {
    let scattered = c.sets_where(|f| f.scattered);
    if c.report().t0 {
        for &s in &scattered {
            for f in c.subsets() {
                ensure!(c.f(s | f).scattered, "T₀, S={s} scattered, F={f}: S∪F not scattered");
            }
        }
    }
    for &s in &scattered {
        let hull = open_hull(c.space, s);
        for &t in &scattered {
            if s.is_disjoint(t) && hull.is_disjoint(t) {
                ensure!(
                    c.f(s | t).scattered,
                    "S={s}, T={t} scattered, S has an open neighbourhood missing T, S∪T not scattered"
                );
            }
        }
    }
    Ok(())
}

pub(crate) fn t24(c: &SpaceCtx) -> Outcome {
    let r = c.report();
    for a in c.subsets() {
        let f = c.f(a);
        if r.alpha_space && f.nowhere_dense {
            ensure!(f.closed_discrete, "α-space, A={a} nowhere dense but not closed discrete");
        }
        ensure!(!f.closed_discrete || f.discrete_subset, "A={a} in CD but not D");
        ensure!(!f.discrete_subset || f.scattered, "A={a} in D but not S");
    }
    Ok(())
}

pub(crate) fn t25(c: &SpaceCtx) -> Outcome {
    let r = c.report();
    let (ns, np) = (r.ns_kernel, r.np);
    ensure!(c.space.is_open(ns), "NS={ns} is not open");
    ensure!(c.space.is_closed(np), "NP={np} is not closed");
    let sub = subspace(c.space, ns).expect("NS lies in the ground");
    ensure!(is_n_scattered(&sub), "NS={ns} is not N-scattered");
    for &u in c.space.opens() {
        let open_ns = is_n_scattered(&subspace(c.space, u).expect("open set in ground"));
        ensure!(!open_ns || u.is_subset(ns), "open N-scattered U={u} not inside NS={ns}");
    }
    ensure!(r.n_scattered == (ns == c.space.ground()), "N-scattered {} but NS={ns}", r.n_scattered);
    if !np.is_empty() {
        let crowded_nd = np
            .subsets()
            .any(|a| !a.is_empty() && c.f(a).crowded && c.f(a).nowhere_dense);
        ensure!(crowded_nd, "NP={np} holds no nonempty crowded nowhere dense set");
    }
    Ok(())
}

pub(crate) fn t26(c: &SpaceCtx) -> Outcome {
    let r = c.report();
    if r.t0 {
        let scattered = c.sets_where(|f| f.scattered);
        for &a in &scattered {
            for b in a.subsets() {
                ensure!(c.f(b).scattered, "T₀, A={a} scattered, subset {b} not scattered");
            }
            for &b in &scattered {
                ensure!(c.f(a | b).scattered, "T₀, A={a}, B={b} scattered, A∪B not scattered");
            }
        }
        ensure!(r.n_scattered, "finite T₀ space is not N-scattered");
    }
    if r.t1 && r.crowded {
        let n_equals_s = c.subsets().all(|a| c.f(a).nowhere_dense == c.f(a).scattered);
        ensure!(r.n_scattered == n_equals_s, "T₁ crowded: N-scattered {} but N=S {n_equals_s}", r.n_scattered);
    }
    Ok(())
}

pub(crate) fn t27(c: &SpaceCtx) -> Outcome {
    let perfect = perfect_nowhere_dense_sets(c.space);
    let ideal = IdealSpec::new(perfect);
    let gamma = expand_by_ideal(c.space, &ideal).expect("generators lie in the ground");
    ensure!(c.space.is_subtopology_of(&gamma), "τ ⊄ τ[I]");
    for m in ideal.members() {
        ensure!(gamma.is_closed(m), "ideal member {m} not closed in τ[I]");
    }
    ensure!(is_n_scattered(&gamma), "τ[I] with I={} is not N-scattered", ideal.support());
    Ok(())
}

pub(crate) fn t29(c: &SpaceCtx) -> Outcome {
    let r = c.report();
    ensure!(!r.homogeneous || r.crowded || r.discrete, "homogeneous but neither crowded nor discrete");
    Ok(())
}

pub(crate) fn t30(c: &SpaceCtx) -> Outcome {
    let r = c.report();
    let no_nd = c.subsets().all(|a| a.is_empty() || !is_nowhere_dense(c.space, a));
    ensure!(r.partition == no_nd, "partition {} vs no nonempty nowhere dense set {no_nd}", r.partition);
    ensure!(!r.discrete || r.partition, "discrete, not partition");
    ensure!(
        r.globally_disconnected == (r.extremally_disconnected && r.alpha_space),
        "globally disconnected {}, extremally disconnected {}, α-space {}",
        r.globally_disconnected,
        r.extremally_disconnected,
        r.alpha_space
    );
    ensure!(!r.submaximal || r.alpha_space, "submaximal, not α-space");
    ensure!(!r.globally_disconnected || r.alpha_space, "globally disconnected, not α-space");
    ensure!(!r.alpha_space || r.n_scattered, "α-space, not N-scattered");
    ensure!(!r.scattered || r.n_scattered, "scattered, not N-scattered");
    ensure!(!r.partition || r.n_scattered, "partition, not N-scattered");
    let alpha = derived_topology(c.space, DerivedKind::Alpha);
    ensure!(r.alpha_space == (alpha == *c.space), "α-space flag disagrees with τ^α");
    Ok(())
}

pub(crate) fn t31(c: &SpaceCtx) -> Outcome {
    let r = c.report();
    ensure!(
        r.so_topology == r.extremally_disconnected,
        "semi-open sets form a topology {}, extremally disconnected {}",
        r.so_topology,
        r.extremally_disconnected
    );
    Ok(())
}

pub(crate) fn t32(c: &SpaceCtx) -> Outcome {
    let x2 = c.space.complement(c.flag_ctx.x1);
    for &u in c.space.opens() {
        if u.is_empty() {
            continue;
        }
        let found = c.space.opens().iter().any(|&v| !v.is_empty() && v.is_subset(u & x2));
        ensure!(found, "open U={u} contains no nonempty open subset of X₂={x2}");
    }
    let (_, family) = cellular_families(c.space);
    let union = family.iter().fold(PointSet::EMPTY, |acc, &v| acc | v);
    ensure!(union.is_subset(x2), "maximum cellular family covers {union} ⊄ X₂={x2}");
    Ok(())
}

pub(crate) fn t33(c: &SpaceCtx) -> Outcome {
    let r = c.report();
    ensure!(!r.scattered || r.hsg_scattered, "scattered, not hsg-scattered");
    ensure!(!r.hsg_scattered || r.n_scattered, "hsg-scattered, not N-scattered");
    let hsg_scattered = r.hsg_closed_sets.iter().all(|&a| is_scattered(c.space, a));
    ensure!(hsg_scattered == r.hsg_scattered, "hsg-scattered flag disagrees with the hsg-closed list");
    Ok(())
}
