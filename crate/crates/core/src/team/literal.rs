//! Reference evaluators that spell out each satisfaction condition as nested
//! quantifiers over rows. Quadratic or cubic in the team size; used to
//! cross-check the evaluators in [`super::sat`] and to re-verify
//! countermodels independently of the code that built them.

use super::Team;
use crate::atom::Atom;
use crate::vars::{VarId, VarSet};

/// `∀s,s' (s(lhs) = s'(lhs) → s(rhs) = s'(rhs))`
pub fn dep(team: &Team, lhs: VarSet, rhs: VarSet) -> bool {
    let n = team.len();
    (0..n).all(|s| {
        (0..n).all(|t| team.project(s, lhs) != team.project(t, lhs) || team.project(s, rhs) == team.project(t, rhs))
    })
}

/// `∀s,s' ∃s'' (s''↾lhs = s↾lhs ∧ s''↾rhs = s'↾rhs)`
pub fn ind(team: &Team, lhs: VarSet, rhs: VarSet) -> bool {
    let rows: Vec<usize> = (0..team.len()).collect();
    rows.iter()
        .all(|&s| rows.iter().all(|&t| has_recombination(team, &rows, s, t, lhs, rhs)))
}

/// `∀s,s' (s(cond) = s'(cond) → ∃s'' (s''(cond) = s(cond) ∧ s''(lhs) = s(lhs) ∧ s''(rhs) = s'(rhs)))`
pub fn condind(team: &Team, lhs: VarSet, cond: VarSet, rhs: VarSet) -> bool {
    let n = team.len();
    (0..n).all(|s| {
        (0..n).all(|t| {
            team.project(s, cond) != team.project(t, cond)
                || (0..n).any(|u| {
                    team.project(u, cond) == team.project(s, cond)
                        && team.project(u, lhs) == team.project(s, lhs)
                        && team.project(u, rhs) == team.project(t, rhs)
                })
        })
    })
}

/// For every `v` in `vars`: `∀s,s' ∃s'' (s''(v) = s(v) ∧ s''(R) = s'(R))` where
/// `R` is the set of members that differ from `v` somewhere, and
/// `∃s,s' (s(v) ≠ s'(v))`.
pub fn absind(team: &Team, vars: VarSet) -> bool {
    let rows: Vec<usize> = (0..team.len()).collect();
    vars.iter().all(|v| {
        let rest = distinguishable(team, vars, v);
        let recombines = rows.iter().all(|&s| {
            rows.iter()
                .all(|&t| has_recombination(team, &rows, s, t, VarSet::singleton(v), rest))
        });
        let varies = rows
            .iter()
            .any(|&s| rows.iter().any(|&t| team.value(s, v) != team.value(t, v)));
        recombines && varies
    })
}

pub fn holds(team: &Team, atom: &Atom) -> bool {
    match *atom {
        Atom::Dep { lhs, rhs } => dep(team, lhs, rhs),
        Atom::AbsInd(vars) => absind(team, vars),
        Atom::Ind { lhs, rhs } => ind(team, lhs, rhs),
        Atom::CondInd { lhs, cond, rhs } => condind(team, lhs, cond, rhs),
    }
}

/// `{w ∈ vars | ∃s (s(v) ≠ s(w))}`
pub fn distinguishable(team: &Team, vars: VarSet, v: VarId) -> VarSet {
    vars.iter()
        .filter(|&w| (0..team.len()).any(|s| team.value(s, v) != team.value(s, w)))
        .collect()
}

/// Whether some row in `rows` agrees with row `s` on `x` and row `t` on `y`.
pub fn has_recombination(
    team: &Team,
    rows: &[usize],
    s: usize,
    t: usize,
    x: VarSet,
    y: VarSet,
) -> bool {
    rows.iter()
        .any(|&u| team.project(u, x) == team.project(s, x) && team.project(u, y) == team.project(t, y))
}
