//! Counterexample search over small spaces.
//!
//! A goal is a flat conjunction of literals separated by `&`. A literal is an
//! optional `!` followed by a space atom such as `n_scattered`, or a set atom
//! applied to a set expression, such as `sg_closed(A|B)`. Set expressions
//! combine variables with `|`, `&`, `-` and prefix `~`. Variables are
//! existentially quantified subsets; a witness is the first space in
//! canonical order with an assignment making every literal true.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::bitop::{bitop_space_report, BitopFlags, BitopReport, BitopSpace};
use crate::classes::{space_report, SpaceReport};
use crate::error::{Result, TopoError};
use crate::operators::{is_hsg_closed_def, is_hsg_open_def, is_sg_closed_def, set_flags, FlagContext, SetFlags};
use crate::setcore::{enumerate_topologies, fixture, FiniteSpace, PointSet};

/// Largest ground size for finite goals.
pub const MAX_MINE_N: usize = 5;
/// Largest ground size for bitopological goals.
pub const MAX_MINE_BITOP_N: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Domain {
    /// Single finite topologies.
    Finite,
    /// Ordered pairs of topologies on one ground set.
    Bitop,
}

/// A goal from the built-in catalog.
#[derive(Debug, Clone, Copy)]
pub struct NamedGoal {
    pub id: &'static str,
    pub expr: &'static str,
    pub domain: Domain,
    pub n_min: usize,
    pub description: &'static str,
}

const fn goal(id: &'static str, expr: &'static str, description: &'static str) -> NamedGoal {
    NamedGoal {
        id,
        expr,
        domain: Domain::Finite,
        n_min: 1,
        description,
    }
}

pub static NAMED_GOALS: &[NamedGoal] = &[
    goal(
        "sg-union-failure",
        "sg_closed(A) & sg_closed(B) & !sg_closed(A|B)",
        "two sg-closed sets whose union is not sg-closed",
    ),
    goal("sg-open-not-preopen", "sg_open(A) & !preopen(A)", "an sg-open set that is not preopen"),
    goal("preopen-not-sg-open", "preopen(A) & !sg_open(A)", "a preopen set that is not sg-open"),
    NamedGoal {
        n_min: 2,
        ..goal("hsg-not-nowhere-dense", "hsg_closed(A) & !nowhere_dense(A)", "an hsg-closed set that is not nowhere dense")
    },
    goal("sg-closed-not-semi-closed", "sg_closed(A) & !semi_closed(A)", "an sg-closed set that is not semi-closed"),
    goal(
        "semi-closed-union-failure",
        "semi_closed(A) & semi_closed(B) & !semi_closed(A|B)",
        "two semi-closed sets whose union is not semi-closed",
    ),
    goal("hsg-open-not-open", "hsg_open(A) & !open(A)", "an hsg-open set that is not open"),
    goal(
        "all-hsg-closed-not-indiscrete",
        "!indiscrete & hsg_open(A|~A)",
        "every subset hsg-closed (X is hsg-open) without the space being indiscrete",
    ),
    goal("n-scattered-not-hsg-scattered", "n_scattered & !hsg_scattered", "N-scattered but not hsg-scattered"),
    goal("hsg-scattered-not-scattered", "hsg_scattered & !scattered", "hsg-scattered but not scattered"),
    goal("scattered-not-alpha-space", "scattered & !alpha_space", "scattered but not an α-space"),
    goal("sgo-topology-not-ed", "sgo_topology & !extremally_disconnected", "sg-open sets form a topology, not extremally disconnected"),
    goal("ed-not-sgo-topology", "extremally_disconnected & !sgo_topology", "extremally disconnected, sg-open sets not a topology"),
    goal("sgo-topology-not-discrete", "sgo_topology & !discrete & !indiscrete", "sg-open sets form a topology on a space that is neither discrete nor indiscrete"),
    NamedGoal {
        domain: Domain::Bitop,
        ..goal("baire-not-utterly", "baire_12 & !utterly_12", "(1,2)-Baire but not utterly (1,2)-Baire")
    },
    NamedGoal {
        domain: Domain::Bitop,
        ..goal(
            "nondegenerate-baire-not-utterly",
            "nondegenerate & baire_12 & !utterly_12",
            "(1,2)-Baire but not utterly, both topologies neither discrete nor indiscrete",
        )
    },
    NamedGoal {
        domain: Domain::Bitop,
        ..goal("nested-utterly", "nested & nondegenerate & utterly_12", "τ₁ ⊆ τ₂ and utterly (1,2)-Baire")
    },
];

pub fn named_goal(id: &str) -> Option<&'static NamedGoal> {
    NAMED_GOALS.iter().find(|g| g.id.eq_ignore_ascii_case(id))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MiningGoal {
    pub id: String,
    pub expr: String,
    pub domain: Domain,
    pub n_min: usize,
    pub n_max: usize,
}

impl MiningGoal {
    pub fn named(id: &str, n_max: usize) -> Result<MiningGoal> {
        let g = named_goal(id).ok_or_else(|| TopoError::MalformedGoal(format!("unknown goal `{id}`")))?;
        Ok(MiningGoal {
            id: g.id.to_string(),
            expr: g.expr.to_string(),
            domain: g.domain,
            n_min: g.n_min,
            n_max,
        })
    }

    pub fn custom(expr: &str, domain: Domain, n_max: usize) -> MiningGoal {
        MiningGoal {
            id: "custom".to_string(),
            expr: expr.to_string(),
            domain,
            n_min: 1,
            n_max,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum WitnessSpace {
    Single(FiniteSpace),
    Pair { tau1: FiniteSpace, tau2: FiniteSpace },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub goal: String,
    pub n: usize,
    pub space: WitnessSpace,
    /// Fixture names equal to the witness topologies.
    pub fixture: Option<String>,
    pub assignment: BTreeMap<String, PointSet>,
    /// One line per literal, with the value it evaluated to.
    pub certificate: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum MineOutcome {
    Found(Box<Witness>),
    NoWitnessUpTo { n_max: usize },
}

// Expression syntax ------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
enum SetExpr {
    Var(usize),
    Not(Box<SetExpr>),
    Union(Box<SetExpr>, Box<SetExpr>),
    Inter(Box<SetExpr>, Box<SetExpr>),
    Diff(Box<SetExpr>, Box<SetExpr>),
}

impl SetExpr {
    fn eval(&self, vals: &[PointSet], ground: PointSet) -> PointSet {
        match self {
            SetExpr::Var(i) => vals[*i],
            SetExpr::Not(e) => ground - e.eval(vals, ground),
            SetExpr::Union(a, b) => a.eval(vals, ground) | b.eval(vals, ground),
            SetExpr::Inter(a, b) => a.eval(vals, ground) & b.eval(vals, ground),
            SetExpr::Diff(a, b) => a.eval(vals, ground) - b.eval(vals, ground),
        }
    }
}

#[derive(Debug, Clone)]
struct Literal {
    negated: bool,
    atom: String,
    arg: Option<(String, SetExpr)>,
}

#[derive(Debug, Clone)]
struct Parsed {
    vars: Vec<String>,
    literals: Vec<Literal>,
}

const BITOP_SPACE_ATOMS: &[&str] = &["baire_12", "baire_21", "utterly_12", "utterly_21", "nested", "nondegenerate"];
const BITOP_SET_ATOMS: &[&str] = &[
    "rare_12", "sg_closed_12", "meager_12", "sg_meager_12", "rare_21", "sg_closed_21", "meager_21", "sg_meager_21",
];

fn malformed(msg: impl Into<String>) -> TopoError {
    TopoError::MalformedGoal(msg.into())
}

fn split_top_level(expr: &str) -> Result<Vec<&str>> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in expr.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(malformed("unbalanced `)`"));
                }
            }
            '&' if depth == 0 => {
                parts.push(&expr[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(malformed("unbalanced `(`"));
    }
    parts.push(&expr[start..]);
    Ok(parts)
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

struct SetParser<'a> {
    src: &'a str,
    pos: usize,
    vars: &'a mut Vec<String>,
}

impl SetParser<'_> {
    /// Skips whitespace and returns the next character.
    fn peek(&mut self) -> Option<char> {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
        self.src[self.pos..].chars().next()
    }

    fn expr(&mut self) -> Result<SetExpr> {
        let mut lhs = self.operand()?;
        while let Some(op) = self.peek() {
            let make: fn(Box<SetExpr>, Box<SetExpr>) -> SetExpr = match op {
                '|' => SetExpr::Union,
                '&' => SetExpr::Inter,
                '-' => SetExpr::Diff,
                _ => break,
            };
            self.pos += 1;
            let rhs = self.operand()?;
            lhs = make(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn operand(&mut self) -> Result<SetExpr> {
        match self.peek() {
            Some('~') => {
                self.pos += 1;
                Ok(SetExpr::Not(Box::new(self.operand()?)))
            }
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(malformed(format!("expected `)` in `{}`", self.src)));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_uppercase() => {
                let rest = &self.src[self.pos..];
                let len = rest
                    .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
                    .unwrap_or(rest.len());
                let name = rest[..len].to_string();
                self.pos += len;
                let idx = match self.vars.iter().position(|v| *v == name) {
                    Some(i) => i,
                    None => {
                        self.vars.push(name);
                        self.vars.len() - 1
                    }
                };
                Ok(SetExpr::Var(idx))
            }
            _ => Err(malformed(format!(
                "expected a set variable (uppercase name) in `{}`",
                self.src
            ))),
        }
    }
}

fn parse(expr: &str, domain: Domain) -> Result<Parsed> {
    let (space_atoms, set_atoms): (&[&str], &[&str]) = match domain {
        Domain::Finite => (SpaceReport::BOOL_NAMES, SetFlags::NAMES),
        Domain::Bitop => (BITOP_SPACE_ATOMS, BITOP_SET_ATOMS),
    };
    let mut vars = Vec::new();
    let mut literals = Vec::new();
    for part in split_top_level(expr)? {
        let mut text = part.trim();
        if text.is_empty() {
            return Err(malformed("empty literal"));
        }
        let negated = text.starts_with('!');
        if negated {
            text = text[1..].trim_start();
        }
        let (atom, arg) = match text.find('(') {
            Some(open) => {
                if !text.ends_with(')') {
                    return Err(malformed(format!("trailing input after `{text}`")));
                }
                let atom = text[..open].trim();
                let inner = &text[open + 1..text.len() - 1];
                let mut p = SetParser {
                    src: inner,
                    pos: 0,
                    vars: &mut vars,
                };
                let e = p.expr()?;
                if p.peek().is_some() {
                    return Err(malformed(format!("trailing input in `{inner}`")));
                }
                (atom, Some((inner.split_whitespace().collect::<String>(), e)))
            }
            None => (text, None),
        };
        if !is_ident(atom) {
            return Err(malformed(format!("bad atom `{atom}`")));
        }
        match &arg {
            Some(_) if !set_atoms.contains(&atom) => {
                return Err(malformed(format!("`{atom}` is not a set property")))
            }
            None if !space_atoms.contains(&atom) => {
                return Err(malformed(format!("`{atom}` is not a space property")))
            }
            _ => {}
        }
        literals.push(Literal {
            negated,
            atom: atom.to_string(),
            arg,
        });
    }
    Ok(Parsed {
        vars,
        literals,
    })
}

// Evaluation -------------------------------------------------------------

trait Candidate: Sync {
    fn n(&self) -> usize;
    fn space_atom(&self, atom: &str) -> bool;
    fn set_atom(&self, atom: &str, a: PointSet) -> bool;
    fn describe(&self) -> WitnessSpace;
}

struct FiniteCandidate<'a> {
    space: &'a FiniteSpace,
    flags: Vec<SetFlags>,
    report: OnceLock<SpaceReport>,
}

impl<'a> FiniteCandidate<'a> {
    fn new(space: &'a FiniteSpace, needs_flags: bool) -> Self {
        FiniteCandidate {
            space,
            flags: if needs_flags { FlagContext::new(space).all_flags() } else { Vec::new() },
            report: OnceLock::new(),
        }
    }
}

impl Candidate for FiniteCandidate<'_> {
    fn n(&self) -> usize {
        self.space.n()
    }

    fn space_atom(&self, atom: &str) -> bool {
        self.report
            .get_or_init(|| space_report(self.space))
            .get(atom)
            .expect("atom checked by the parser")
    }

    fn set_atom(&self, atom: &str, a: PointSet) -> bool {
        self.flags[a.bits() as usize].get(atom).expect("atom checked by the parser")
    }

    fn describe(&self) -> WitnessSpace {
        WitnessSpace::Single(self.space.clone())
    }
}

fn nondegenerate(s: &FiniteSpace) -> bool {
    let n = s.n();
    s.opens().len() > 2 && s.opens().len() < 1 << n
}

fn bitop_space_atom(pair: &BitopSpace, report: &BitopReport, atom: &str) -> bool {
    match atom {
        "nested" => pair.tau1.is_subtopology_of(&pair.tau2),
        "nondegenerate" => nondegenerate(&pair.tau1) && nondegenerate(&pair.tau2),
        other => report.get(other).expect("atom checked by the parser"),
    }
}

fn bitop_set_atom(flags: &BitopFlags, atom: &str) -> bool {
    match atom.rsplit_once('_').map(|(name, _)| name) {
        Some("rare") => flags.rare,
        Some("sg_closed") => flags.sg_closed,
        Some("meager") => flags.meager,
        Some("sg_meager") => flags.sg_meager,
        _ => unreachable!("atom checked by the parser"),
    }
}

fn order_of(atom: &str) -> (usize, usize) {
    if atom.ends_with("_21") {
        (2, 1)
    } else {
        (1, 2)
    }
}

struct BitopCandidate {
    pair: BitopSpace,
    report: OnceLock<BitopReport>,
    flags_12: Vec<BitopFlags>,
    flags_21: Vec<BitopFlags>,
}

impl BitopCandidate {
    fn new(pair: BitopSpace, needs_flags: bool) -> Self {
        let all = |i, j| -> Vec<BitopFlags> {
            if !needs_flags {
                return Vec::new();
            }
            let v = pair.view(i, j).expect("valid indices");
            pair.tau1.subsets().map(|a| v.flags(a)).collect()
        };
        let flags_12 = all(1, 2);
        let flags_21 = all(2, 1);
        BitopCandidate {
            pair,
            report: OnceLock::new(),
            flags_12,
            flags_21,
        }
    }
}

impl Candidate for BitopCandidate {
    fn n(&self) -> usize {
        self.pair.n()
    }

    fn space_atom(&self, atom: &str) -> bool {
        let report = self.report.get_or_init(|| bitop_space_report(&self.pair));
        bitop_space_atom(&self.pair, report, atom)
    }

    fn set_atom(&self, atom: &str, a: PointSet) -> bool {
        let flags = match order_of(atom) {
            (1, 2) => &self.flags_12,
            _ => &self.flags_21,
        };
        bitop_set_atom(&flags[a.bits() as usize], atom)
    }

    fn describe(&self) -> WitnessSpace {
        WitnessSpace::Pair {
            tau1: self.pair.tau1.clone(),
            tau2: self.pair.tau2.clone(),
        }
    }
}

/// Odometer over assignments: the first variable varies slowest, each
/// through masks in increasing order.
fn assignments(n: usize, vars: usize) -> impl Iterator<Item = Vec<PointSet>> {
    let size = 1usize << n;
    let total = size.checked_pow(vars as u32).expect("few variables");
    (0..total).map(move |mut code| {
        let mut vals = vec![PointSet::EMPTY; vars];
        for slot in vals.iter_mut().rev() {
            *slot = PointSet::from_bits((code % size) as u32);
            code /= size;
        }
        vals
    })
}

fn search<C: Candidate>(parsed: &Parsed, c: &C) -> Option<Vec<PointSet>> {
    for lit in parsed.literals.iter().filter(|l| l.arg.is_none()) {
        if c.space_atom(&lit.atom) == lit.negated {
            return None;
        }
    }
    let ground = PointSet::full(c.n());
    assignments(c.n(), parsed.vars.len()).find(|vals| {
        parsed.literals.iter().all(|lit| match &lit.arg {
            Some((_, e)) => c.set_atom(&lit.atom, e.eval(vals, ground)) != lit.negated,
            None => true,
        })
    })
}

fn fmt_set(a: PointSet) -> String {
    format!("{a}")
}

fn certificate<C: Candidate>(parsed: &Parsed, c: &C, vals: &[PointSet]) -> Vec<String> {
    let ground = PointSet::full(c.n());
    let mut lines: Vec<String> = parsed
        .vars
        .iter()
        .zip(vals)
        .map(|(v, &a)| format!("{v} = {}", fmt_set(a)))
        .collect();
    for lit in &parsed.literals {
        let sign = if lit.negated { "!" } else { "" };
        match &lit.arg {
            Some((text, e)) => {
                let a = e.eval(vals, ground);
                lines.push(format!(
                    "{sign}{}({text}) with {text} = {}: {} is {}",
                    lit.atom,
                    fmt_set(a),
                    lit.atom,
                    c.set_atom(&lit.atom, a)
                ));
            }
            None => lines.push(format!("{sign}{}: {} is {}", lit.atom, lit.atom, c.space_atom(&lit.atom))),
        }
    }
    lines
}

fn fixture_names(n: usize) -> Vec<String> {
    let mut names: Vec<String> = ["SIERP", "CONE3", "PP3", "DOUBLEPT3", "T28FIX6"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    names.extend(["DISC", "INDISC", "LRAY", "RRAY", "PP"].iter().map(|p| format!("{p}_{n}")));
    names
}

fn fixture_name(s: &FiniteSpace) -> Option<String> {
    fixture_names(s.n())
        .into_iter()
        .find(|name| fixture(name).is_ok_and(|f| f == *s))
}

fn needs_set_flags(parsed: &Parsed) -> bool {
    parsed.literals.iter().any(|l| l.arg.is_some())
}

fn witness_for<C: Candidate>(goal: &MiningGoal, parsed: &Parsed, c: &C, vals: Vec<PointSet>) -> Witness {
    let space = c.describe();
    let fixture = match &space {
        WitnessSpace::Single(s) => fixture_name(s),
        WitnessSpace::Pair { tau1, tau2 } => match (fixture_name(tau1), fixture_name(tau2)) {
            (Some(a), Some(b)) => Some(format!("{a}, {b}")),
            _ => None,
        },
    };
    Witness {
        goal: goal.id.clone(),
        n: c.n(),
        space,
        fixture,
        certificate: certificate(parsed, c, &vals),
        assignment: parsed.vars.iter().cloned().zip(vals).collect(),
    }
}

/// Finds the first witness in canonical order, scanning ground sizes
/// `n_min..=n_max`.
pub fn mine(goal: &MiningGoal) -> Result<MineOutcome> {
    let parsed = parse(&goal.expr, goal.domain)?;
    let limit = match goal.domain {
        Domain::Finite => MAX_MINE_N,
        Domain::Bitop => MAX_MINE_BITOP_N,
    };
    if goal.n_max > limit {
        return Err(TopoError::GroundTooLarge {
            size: goal.n_max,
            max: limit,
        });
    }
    if parsed.vars.len() > 3 {
        return Err(malformed("at most three set variables"));
    }
    let flags = needs_set_flags(&parsed);
    for k in goal.n_min..=goal.n_max {
        let spaces = enumerate_topologies(k, false)?;
        let found = match goal.domain {
            Domain::Finite => spaces.par_iter().find_map_first(|s| {
                let c = FiniteCandidate::new(s, flags);
                search(&parsed, &c).map(|vals| witness_for(goal, &parsed, &c, vals))
            }),
            Domain::Bitop => (0..spaces.len() * spaces.len()).into_par_iter().find_map_first(|idx| {
                let pair = BitopSpace::new(
                    spaces[idx / spaces.len()].clone(),
                    spaces[idx % spaces.len()].clone(),
                )
                .expect("same ground size");
                let c = BitopCandidate::new(pair, flags);
                search(&parsed, &c).map(|vals| witness_for(goal, &parsed, &c, vals))
            }),
        };
        if let Some(w) = found {
            return Ok(MineOutcome::Found(Box::new(w)));
        }
    }
    Ok(MineOutcome::NoWitnessUpTo { n_max: goal.n_max })
}

/// Re-evaluates a witness from scratch through the public per-set and
/// per-space entry points. The sg and hsg atoms use their definitions
/// rather than the characterizations the miner relies on.
pub fn revalidate(goal: &MiningGoal, witness: &Witness) -> Result<bool> {
    let parsed = parse(&goal.expr, goal.domain)?;
    let vals: Vec<PointSet> = parsed
        .vars
        .iter()
        .map(|v| {
            witness
                .assignment
                .get(v)
                .copied()
                .ok_or_else(|| malformed(format!("witness has no value for `{v}`")))
        })
        .collect::<Result<_>>()?;
    for lit in &parsed.literals {
        let value = match (&witness.space, &lit.arg) {
            (WitnessSpace::Single(s), None) => space_report(s).get(&lit.atom).expect("parsed atom"),
            (WitnessSpace::Single(s), Some((_, e))) => {
                let a = e.eval(&vals, s.ground());
                match lit.atom.as_str() {
                    "sg_closed" => is_sg_closed_def(s, a)?,
                    "sg_open" => is_sg_closed_def(s, s.complement(a))?,
                    "hsg_closed" => is_hsg_closed_def(s, a)?,
                    "hsg_open" => is_hsg_open_def(s, a)?,
                    other => set_flags(s, a)?.get(other).expect("parsed atom"),
                }
            }
            (WitnessSpace::Pair { tau1, tau2 }, arg) => {
                let pair = BitopSpace::new(tau1.clone(), tau2.clone())?;
                match arg {
                    None => bitop_space_atom(&pair, &bitop_space_report(&pair), &lit.atom),
                    Some((_, e)) => {
                        let a = e.eval(&vals, tau1.ground());
                        let (i, j) = order_of(&lit.atom);
                        bitop_set_atom(&crate::bitop::bitop_set_flags(&pair, i, j, a)?, &lit.atom)
                    }
                }
            }
        };
        if value == lit.negated {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks an expression without searching.
pub fn validate_goal(expr: &str, domain: Domain) -> Result<()> {
    if parse(expr, domain)?.vars.len() > 3 {
        return Err(malformed("at most three set variables"));
    }
    Ok(())
}
