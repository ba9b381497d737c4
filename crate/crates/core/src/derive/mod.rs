//! Derivability in the four rule systems.
//!
//! Independence and conditional independence are decided by saturating the
//! premises to a least fixed point over the problem's universe. Dependence
//! and absolute independence have direct decision procedures, each checked
//! against rule-level saturation in the tests.

mod engine;
mod proof;
mod rules;
mod systems;

pub use engine::Closure;
pub use proof::{Proof, ProofStep};
pub use rules::{Rule, RuleInfo, RuleSystem};

use crate::atom::{Atom, AtomKind, Problem};
use crate::error::{Error, Result};
use crate::vars::VarSet;
use proof::ProofBuilder;

/// Environment variable overriding the saturation caps.
pub const MAX_VARS_ENV: &str = "IDCALC_MAX_VARS";

/// Largest universes the saturation tables can be built for.
pub const HARD_CAP_PAIR: usize = 14;
pub const HARD_CAP_TRIPLE: usize = 9;

/// Universe size caps for saturation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// For dependence, absolute and plain independence atoms.
    pub pair: usize,
    /// For conditional independence atoms.
    pub triple: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { pair: 10, triple: 6 }
    }
}

impl Limits {
    /// Both caps set to `n`.
    pub fn uniform(n: usize) -> Limits {
        Limits { pair: n, triple: n }
    }

    /// Defaults, or both caps set from [`MAX_VARS_ENV`] when present.
    pub fn from_env() -> Result<Limits> {
        match std::env::var(MAX_VARS_ENV) {
            Err(_) => Ok(Limits::default()),
            Ok(text) => text
                .trim()
                .parse()
                .map(Limits::uniform)
                .map_err(|_| Error::Unsupported(format!("{MAX_VARS_ENV} must be a number, got {text:?}"))),
        }
    }

    fn check(&self, kind: AtomKind, universe: VarSet) -> Result<()> {
        let (cap, hard) = match kind {
            AtomKind::CondInd => (self.triple, HARD_CAP_TRIPLE),
            _ => (self.pair, HARD_CAP_PAIR),
        };
        let cap = cap.min(hard);
        let vars = universe.len();
        if vars > cap {
            return Err(Error::CapExceeded { kind, vars, cap });
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Completeness {
    /// Non-derivable goals have countermodels.
    Complete,
    /// The rules are sound but a non-derivable goal may still be entailed.
    SoundOnly,
}

#[derive(Clone, Debug)]
pub struct Judgment {
    pub derivable: bool,
    pub proof: Option<Proof>,
    pub completeness: Completeness,
}

impl Judgment {
    pub(crate) fn new(kind: AtomKind, proof: Option<Proof>) -> Judgment {
        Judgment {
            derivable: proof.is_some(),
            proof,
            completeness: if kind == AtomKind::CondInd {
                Completeness::SoundOnly
            } else {
                Completeness::Complete
            },
        }
    }
}

/// Least fixed point of the system for `kind` from `sigma` over `universe`.
/// Premises mentioning variables outside the universe are ignored.
pub fn closure(kind: AtomKind, sigma: &[Atom], universe: VarSet, limits: &Limits) -> Result<Closure> {
    limits.check(kind, universe)?;
    if let Some(other) = sigma.iter().find(|a| a.kind() != kind) {
        return Err(Error::MixedKinds {
            expected: kind,
            found: other.kind(),
        });
    }
    Ok(systems::saturate(kind, sigma, universe))
}

pub fn indep_closure(sigma: &[Atom], universe: VarSet, limits: &Limits) -> Result<Closure> {
    closure(AtomKind::Ind, sigma, universe, limits)
}

pub fn condind_closure(sigma: &[Atom], universe: VarSet, limits: &Limits) -> Result<Closure> {
    closure(AtomKind::CondInd, sigma, universe, limits)
}

/// Rule-level fixed point for dependence atoms. [`derives_dep`] does not need
/// it; it exists to cross-check the attribute closure.
pub fn dep_closure(sigma: &[Atom], universe: VarSet, limits: &Limits) -> Result<Closure> {
    closure(AtomKind::Dep, sigma, universe, limits)
}

pub fn absind_closure(sigma: &[Atom], universe: VarSet, limits: &Limits) -> Result<Closure> {
    closure(AtomKind::AbsInd, sigma, universe, limits)
}

fn expect_kind(problem: &Problem, kind: AtomKind) -> Result<()> {
    if problem.kind() != kind {
        return Err(Error::MixedKinds {
            expected: kind,
            found: problem.kind(),
        });
    }
    Ok(())
}

fn by_saturation(problem: &Problem, limits: &Limits) -> Result<Judgment> {
    let closure = closure(problem.kind(), problem.sigma(), problem.universe(), limits)?;
    Ok(Judgment::new(problem.kind(), closure.proof(problem.goal())))
}

pub fn derives_indep(problem: &Problem, limits: &Limits) -> Result<Judgment> {
    expect_kind(problem, AtomKind::Ind)?;
    by_saturation(problem, limits)
}

/// Sound but incomplete: a negative answer does not mean the goal fails in
/// some team.
pub fn derives_condind(problem: &Problem, limits: &Limits) -> Result<Judgment> {
    expect_kind(problem, AtomKind::CondInd)?;
    by_saturation(problem, limits)
}

fn dep_sides(atom: &Atom) -> (VarSet, VarSet) {
    match *atom {
        Atom::Dep { lhs, rhs } => (lhs, rhs),
        _ => unreachable!("dependence atom expected"),
    }
}

/// Largest `y` with `sigma ⊢ dep(x, y)`, together with `x`.
pub fn attribute_closure(x: VarSet, sigma: &[Atom]) -> VarSet {
    let mut cur = x;
    loop {
        let before = cur;
        for atom in sigma {
            let (l, r) = dep_sides(atom);
            if l.is_subset(cur) {
                cur = cur | r;
            }
        }
        if cur == before {
            return cur;
        }
    }
}

/// Decides `sigma ⊢ dep(x, y)` by attribute closure and, when derivable,
/// writes out the derivation the closure computation traces.
pub fn derives_dep(problem: &Problem) -> Result<Judgment> {
    expect_kind(problem, AtomKind::Dep)?;
    let (x, y) = dep_sides(problem.goal());
    let sigma = problem.sigma();
    if !y.is_subset(attribute_closure(x, sigma)) {
        return Ok(Judgment::new(AtomKind::Dep, None));
    }
    let dep = |l, r| Atom::Dep { lhs: l, rhs: r };
    let mut b = ProofBuilder::new();
    let mut cur = x;
    let mut have = b.push(dep(x, x), Rule::DepReflexivity, vec![]);
    loop {
        let before = cur;
        for atom in sigma {
            let (l, r) = dep_sides(atom);
            if !l.is_subset(cur) || r.is_subset(cur) {
                continue;
            }
            let hyp = b.push(*atom, Rule::Hypothesis, vec![]);
            // dep(x, r): through dep(x, l) when l is nonempty, else straight
            // from dep(∅, r) by widening the left side.
            let to_r = if l.is_empty() {
                b.push(dep(x, r), Rule::DepProjection, vec![hyp])
            } else {
                let to_l = if l == cur {
                    have
                } else {
                    b.push(dep(x, l), Rule::DepProjection, vec![have])
                };
                b.push(dep(x, r), Rule::DepTransitivity, vec![to_l, hyp])
            };
            have = b.push(dep(x, cur | r), Rule::DepUnion, vec![have, to_r]);
            cur = cur | r;
        }
        if cur == before {
            break;
        }
    }
    let root = if y == cur {
        have
    } else {
        b.push(dep(x, y), Rule::DepProjection, vec![have])
    };
    Ok(Judgment::new(AtomKind::Dep, Some(b.finish(root))))
}

/// `sigma ⊢ ⊥(x)` iff `x` is empty or contained in a premise.
pub fn derives_absind(problem: &Problem) -> Result<Judgment> {
    expect_kind(problem, AtomKind::AbsInd)?;
    let goal = *problem.goal();
    let Atom::AbsInd(x) = goal else { unreachable!() };
    let mut b = ProofBuilder::new();
    let root = if x.is_empty() {
        Some(b.push(goal, Rule::AbsEmpty, vec![]))
    } else {
        problem
            .sigma()
            .iter()
            .find(|a| matches!(a, Atom::AbsInd(v) if x.is_subset(*v)))
            .map(|a| {
                let hyp = b.push(*a, Rule::Hypothesis, vec![]);
                if *a == goal {
                    hyp
                } else {
                    b.push(goal, Rule::AbsSubset, vec![hyp])
                }
            })
    };
    Ok(Judgment::new(AtomKind::AbsInd, root.map(|r| b.finish(r))))
}

/// Dispatches on the problem's kind.
pub fn derives(problem: &Problem, limits: &Limits) -> Result<Judgment> {
    match problem.kind() {
        AtomKind::Dep => derives_dep(problem),
        AtomKind::AbsInd => derives_absind(problem),
        AtomKind::Ind => derives_indep(problem, limits),
        AtomKind::CondInd => derives_condind(problem, limits),
    }
}
