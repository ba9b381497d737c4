//! Countermodels for non-derivable goals. Each construction is re-checked by
//! evaluators that share no code with it before being returned, and a failed
//! check is reported as an error rather than a witness.

mod constructions;

use std::fmt::Write as _;

pub use constructions::{
    counter_absind_pregeo, counter_absind_team, counter_dep_closure, counter_dep_team, counter_ind_pregeo,
    counter_ind_team, TEAM_SEARCH_MAX_ROWS, TEAM_SEARCH_MAX_VARS,
};

use crate::atom::{Atom, AtomKind, Problem};
use crate::derive::{Judgment, Limits};
use crate::error::{Error, Result};
use crate::parser::print_team_csv;
use crate::pregeometry::{evaluate_pregeo, Geometry};
use crate::team::{self, Team};
use crate::vars::Vocab;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Semantics {
    Team,
    Pregeometry,
}

#[derive(Clone, Debug)]
pub enum Model {
    Team(Team),
    Geometry(Geometry),
}

impl Model {
    fn vocab(&self) -> &Vocab {
        match self {
            Model::Team(t) => t.vocab(),
            Model::Geometry(g) => g.vocab(),
        }
    }
}

/// Truth values of the premises and the goal in a model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub premises: Vec<(Atom, bool)>,
    pub goal: (Atom, bool),
}

impl Certificate {
    /// Every premise holds and the goal fails.
    pub fn refutes(&self) -> bool {
        self.premises.iter().all(|p| p.1) && !self.goal.1
    }

    /// One `# ` comment line per atom.
    pub fn to_comments(&self, vocab: &Vocab) -> String {
        let mut out = String::new();
        for (atom, holds) in &self.premises {
            let _ = writeln!(out, "# premise {}: {}", atom.display(vocab), holds);
        }
        let _ = writeln!(out, "# goal {}: {}", self.goal.0.display(vocab), self.goal.1);
        out
    }
}

/// Evaluates `sigma` and `goal` in `model` from scratch: teams by the literal
/// quantifier reading (cross-checked against the fast evaluators), geometries
/// by span computations.
pub fn certify(model: &Model, sigma: &[Atom], goal: &Atom) -> Result<Certificate> {
    let eval = |atom: &Atom| -> Result<bool> {
        match model {
            Model::Team(t) => {
                let literal = team::literal::holds(t, atom);
                if team::satisfies(t, atom)? != literal {
                    return Err(Error::Verification(format!(
                        "team evaluators disagree on {}",
                        atom.display(t.vocab())
                    )));
                }
                Ok(literal)
            }
            Model::Geometry(g) => evaluate_pregeo(g, atom),
        }
    };
    Ok(Certificate {
        premises: sigma.iter().map(|a| Ok((*a, eval(a)?))).collect::<Result<_>>()?,
        goal: (*goal, eval(goal)?),
    })
}

#[derive(Clone, Debug)]
pub struct Countermodel {
    pub model: Model,
    pub certificate: Certificate,
}

impl Countermodel {
    /// Certifies `model` against `problem`; fails unless it refutes the goal.
    pub(crate) fn checked(model: Model, problem: &Problem) -> Result<Countermodel> {
        let certificate = certify(&model, problem.sigma(), problem.goal())?;
        if !certificate.refutes() {
            return Err(Error::Verification(format!(
                "constructed model does not refute {}",
                problem.goal().display(problem.vocab())
            )));
        }
        Ok(Countermodel { model, certificate })
    }

    /// Re-runs certification; true when the model still refutes the goal.
    pub fn recheck(&self, problem: &Problem) -> bool {
        certify(&self.model, problem.sigma(), problem.goal()).is_ok_and(|c| c.refutes())
    }

    /// Team CSV or geometry text, followed by the certificate as comments.
    pub fn to_text(&self) -> String {
        let body = match &self.model {
            Model::Team(t) => print_team_csv(t),
            Model::Geometry(g) => g.to_text(),
        };
        body + &self.certificate.to_comments(self.model.vocab())
    }
}

#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum CounterResult {
    Derivable(Judgment),
    Witness(Countermodel),
}

impl CounterResult {
    pub fn witness(&self) -> Option<&Countermodel> {
        match self {
            CounterResult::Witness(w) => Some(w),
            CounterResult::Derivable(_) => None,
        }
    }
}

/// Either a derivation of the goal or a verified countermodel in the chosen
/// semantics. Conditional independence has no complete rule system, so it is
/// rejected.
pub fn counter(problem: &Problem, semantics: Semantics, limits: &Limits) -> Result<CounterResult> {
    match (problem.kind(), semantics) {
        (AtomKind::Dep, Semantics::Team) => counter_dep_team(problem),
        (AtomKind::Dep, Semantics::Pregeometry) => counter_dep_closure(problem),
        (AtomKind::AbsInd, Semantics::Team) => counter_absind_team(problem),
        (AtomKind::AbsInd, Semantics::Pregeometry) => counter_absind_pregeo(problem),
        (AtomKind::Ind, Semantics::Team) => counter_ind_team(problem, limits),
        (AtomKind::Ind, Semantics::Pregeometry) => counter_ind_pregeo(problem, limits),
        (AtomKind::CondInd, _) => Err(Error::Unsupported(
            "conditional independence rules are incomplete; a failed derivation does not yield a countermodel"
                .into(),
        )),
    }
}
