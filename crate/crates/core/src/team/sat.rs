use std::collections::{HashMap, HashSet};

use super::Team;
use crate::atom::Atom;
use crate::error::Result;
use crate::vars::{VarId, VarSet};

/// Why an atom fails in a team. Row indices are 0-based positions in the
/// deduplicated team.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Rows `s`, `s'` for which the atom's condition has no solution.
    Pair { first: usize, second: usize },
    /// The variable never changes value.
    Constant { var: VarId },
    /// For this member of an absolute independence atom, rows `s`, `s'`
    /// cannot be recombined.
    Recombination {
        var: VarId,
        first: usize,
        second: usize,
    },
}

impl Witness {
    /// Human-readable form with 1-based row numbers.
    pub fn render(&self, team: &Team) -> String {
        match *self {
            Witness::Pair { first, second } => format!("rows {},{}", first + 1, second + 1),
            Witness::Constant { var } => format!("{} constant", team.vocab().name(var)),
            Witness::Recombination { var, first, second } => {
                format!("{}: rows {},{}", team.vocab().name(var), first + 1, second + 1)
            }
        }
    }

    /// Re-checks that the witness really refutes `atom` in `team`, using the
    /// literal quantifier reading.
    pub fn confirms(&self, team: &Team, atom: &Atom) -> bool {
        use super::literal;
        let all: Vec<usize> = (0..team.len()).collect();
        match (*self, *atom) {
            (Witness::Pair { first, second }, Atom::Dep { lhs, rhs }) => {
                team.project(first, lhs) == team.project(second, lhs)
                    && team.project(first, rhs) != team.project(second, rhs)
            }
            (Witness::Pair { first, second }, Atom::Ind { lhs, rhs }) => {
                !literal::has_recombination(team, &all, first, second, lhs, rhs)
            }
            (Witness::Pair { first, second }, Atom::CondInd { lhs, cond, rhs }) => {
                let group: Vec<usize> = all
                    .iter()
                    .copied()
                    .filter(|&r| team.project(r, cond) == team.project(first, cond))
                    .collect();
                team.project(first, cond) == team.project(second, cond)
                    && !literal::has_recombination(team, &group, first, second, lhs, rhs)
            }
            (Witness::Constant { var }, Atom::AbsInd(vars)) => {
                vars.contains(var) && (0..team.len()).all(|r| team.value(r, var) == team.value(0, var))
            }
            (Witness::Recombination { var, first, second }, Atom::AbsInd(vars)) => {
                let rest = literal::distinguishable(team, vars, var);
                vars.contains(var)
                    && !literal::has_recombination(
                        team,
                        &all,
                        first,
                        second,
                        VarSet::singleton(var),
                        rest,
                    )
            }
            _ => false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    const TRUE: Verdict = Verdict {
        holds: true,
        witness: None,
    };

    fn fails(witness: Witness) -> Verdict {
        Verdict {
            holds: false,
            witness: Some(witness),
        }
    }
}

/// Rows agreeing on `lhs` agree on `rhs`.
pub fn sat_dep(team: &Team, lhs: VarSet, rhs: VarSet) -> Result<Verdict> {
    team.check_vars(lhs | rhs)?;
    let mut seen: HashMap<Vec<u32>, (usize, Vec<u32>)> = HashMap::new();
    for row in 0..team.len() {
        let key = team.project(row, lhs);
        let val = team.project(row, rhs);
        match seen.get(&key) {
            Some((first, v)) if *v != val => {
                return Ok(Verdict::fails(Witness::Pair {
                    first: *first,
                    second: row,
                }))
            }
            Some(_) => {}
            None => {
                seen.insert(key, (row, val));
            }
        }
    }
    Ok(Verdict::TRUE)
}

/// Every `lhs`-pattern and every `rhs`-pattern occurring in the team occur
/// together in some row.
///
/// Evaluated as a projection product: the `lhs ∪ rhs` projection must equal
/// the `lhs` and `rhs` projections glued along their overlap.
pub fn sat_ind(team: &Team, lhs: VarSet, rhs: VarSet) -> Result<Verdict> {
    team.check_vars(lhs | rhs)?;
    let rows: Vec<usize> = (0..team.len()).collect();
    Ok(match recombine(team, &rows, lhs, rhs) {
        None => Verdict::TRUE,
        Some((first, second)) => Verdict::fails(Witness::Pair { first, second }),
    })
}

/// Within every group of rows agreeing on `cond`, `lhs`- and `rhs`-patterns
/// recombine.
pub fn sat_condind(team: &Team, lhs: VarSet, cond: VarSet, rhs: VarSet) -> Result<Verdict> {
    team.check_vars(lhs | cond | rhs)?;
    let mut order: Vec<Vec<u32>> = Vec::new();
    let mut groups: HashMap<Vec<u32>, Vec<usize>> = HashMap::new();
    for row in 0..team.len() {
        let key = team.project(row, cond);
        groups
            .entry(key.clone())
            .or_insert_with(|| {
                order.push(key);
                Vec::new()
            })
            .push(row);
    }
    for key in &order {
        if let Some((first, second)) = recombine(team, &groups[key], lhs, rhs) {
            return Ok(Verdict::fails(Witness::Pair { first, second }));
        }
    }
    Ok(Verdict::TRUE)
}

/// Absolute independence. For every member `v` of `vars`: `v` is not constant,
/// and `v` recombines freely with the members of `vars` that differ from `v`
/// in at least one row.
pub fn sat_absind(team: &Team, vars: VarSet) -> Result<Verdict> {
    team.check_vars(vars)?;
    let rows: Vec<usize> = (0..team.len()).collect();
    for var in vars {
        let first = team.rows.first().map(|_| team.value(0, var));
        if (0..team.len()).all(|r| Some(team.value(r, var)) == first) {
            return Ok(Verdict::fails(Witness::Constant { var }));
        }
        let rest: VarSet = vars
            .without(var)
            .iter()
            .filter(|&other| (0..team.len()).any(|r| team.value(r, var) != team.value(r, other)))
            .collect();
        if let Some((first, second)) = recombine(team, &rows, VarSet::singleton(var), rest) {
            return Ok(Verdict::fails(Witness::Recombination {
                var,
                first,
                second,
            }));
        }
    }
    Ok(Verdict::TRUE)
}

/// Returns rows `(s, s')` among `rows` for which no row `s''` in `rows` agrees
/// with `s` on `x` and with `s'` on `y`, or `None` if every pair recombines.
fn recombine(team: &Team, rows: &[usize], x: VarSet, y: VarSet) -> Option<(usize, usize)> {
    let xs = distinct_projections(team, rows, x);
    let ys = distinct_projections(team, rows, y);
    let xy = x | y;
    let joint: HashSet<Vec<u32>> = rows.iter().map(|&r| team.project(r, xy)).collect();
    for &ra in &xs {
        for &rb in &ys {
            let glued: Option<Vec<u32>> = xy
                .iter()
                .map(|v| {
                    let from_x = x.contains(v).then(|| team.value(ra, v));
                    let from_y = y.contains(v).then(|| team.value(rb, v));
                    match (from_x, from_y) {
                        (Some(a), Some(b)) if a != b => None,
                        (Some(a), _) => Some(a),
                        (None, Some(b)) => Some(b),
                        (None, None) => unreachable!(),
                    }
                })
                .collect();
            match glued {
                Some(g) if joint.contains(&g) => {}
                _ => return Some((ra, rb)),
            }
        }
    }
    None
}

/// First row of each distinct projection, in row order.
fn distinct_projections(team: &Team, rows: &[usize], vars: VarSet) -> Vec<usize> {
    let mut seen = HashSet::new();
    rows.iter()
        .copied()
        .filter(|&r| seen.insert(team.project(r, vars)))
        .collect()
}

/// Evaluates any atom; fails if the atom mentions variables outside the domain.
pub fn evaluate(team: &Team, atom: &Atom) -> Result<Verdict> {
    match *atom {
        Atom::Dep { lhs, rhs } => sat_dep(team, lhs, rhs),
        Atom::AbsInd(vars) => sat_absind(team, vars),
        Atom::Ind { lhs, rhs } => sat_ind(team, lhs, rhs),
        Atom::CondInd { lhs, cond, rhs } => sat_condind(team, lhs, cond, rhs),
    }
}

pub fn satisfies(team: &Team, atom: &Atom) -> Result<bool> {
    evaluate(team, atom).map(|v| v.holds)
}
