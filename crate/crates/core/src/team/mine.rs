use super::{sat, Team};
use crate::atom::{Atom, AtomKind};
use crate::error::{Error, Result};
use crate::vars::{VarId, VarSet};

/// Upper bound on the number of candidate atoms `mine` will evaluate.
pub const MINE_CANDIDATE_CAP: u64 = 2_000_000;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MineMode {
    /// For dependence atoms, drop trivial atoms and atoms implied by a single
    /// other reported atom. Other kinds are reported in full.
    #[default]
    Minimal,
    /// Every satisfied candidate.
    All,
}

/// Satisfied atoms of `kind` over the team's domain whose sides have at most
/// `max_arity` variables, in canonical order.
///
/// Sides range over nonempty sets, except the left side of a dependence atom
/// and the condition of a conditional atom, which may be empty.
pub fn mine(team: &Team, kind: AtomKind, max_arity: usize) -> Result<Vec<Atom>> {
    mine_with(team, kind, max_arity, MineMode::Minimal)
}

pub fn mine_with(team: &Team, kind: AtomKind, max_arity: usize, mode: MineMode) -> Result<Vec<Atom>> {
    if max_arity == 0 {
        return Err(Error::Unsupported("arity cap must be at least 1".into()));
    }
    let columns = team.columns();
    let n = columns.len() as u64;
    let side = count_up_to(n, max_arity, 1);
    let side0 = count_up_to(n, max_arity, 0);
    let total = match kind {
        AtomKind::AbsInd => Some(side),
        AtomKind::Dep => side0.checked_mul(side),
        AtomKind::Ind => side.checked_mul(side),
        AtomKind::CondInd => side.checked_mul(side).and_then(|s| s.checked_mul(side0)),
    };
    match total {
        Some(t) if t <= MINE_CANDIDATE_CAP => {}
        _ => {
            return Err(Error::TooManyCandidates(format!(
                "{kind} atoms over {n} columns with sides up to {max_arity}"
            )))
        }
    }

    let sides = sets_up_to(columns, max_arity, 1);
    let sides0 = sets_up_to(columns, max_arity, 0);
    let mut found = Vec::new();
    match kind {
        AtomKind::AbsInd => {
            for &x in &sides {
                push_if(team, Atom::abs(x), &mut found)?;
            }
        }
        AtomKind::Ind => {
            for &x in &sides {
                for &y in &sides {
                    push_if(team, Atom::ind(x, y), &mut found)?;
                }
            }
        }
        AtomKind::CondInd => {
            for &z in &sides0 {
                for &x in &sides {
                    for &y in &sides {
                        push_if(team, Atom::cind(x, z, y), &mut found)?;
                    }
                }
            }
        }
        AtomKind::Dep => {
            for &x in &sides0 {
                for &y in &sides {
                    if mode == MineMode::Minimal && !x.is_disjoint(y) {
                        continue;
                    }
                    push_if(team, Atom::dep(x, y)?, &mut found)?;
                }
            }
            if mode == MineMode::Minimal {
                found = maximal_deps(&found);
            }
        }
    }
    found.sort();
    Ok(found)
}

fn push_if(team: &Team, atom: Atom, out: &mut Vec<Atom>) -> Result<()> {
    if sat::satisfies(team, &atom)? {
        out.push(atom);
    }
    Ok(())
}

/// Keeps the atoms not implied by some other atom of the list. With disjoint
/// sides, `dep(x',y')` implies `dep(x,y)` exactly when `x' ⊆ x` and `y ⊆ y'`.
fn maximal_deps(atoms: &[Atom]) -> Vec<Atom> {
    let sides = |a: &Atom| match *a {
        Atom::Dep { lhs, rhs } => (lhs, rhs),
        _ => unreachable!(),
    };
    atoms
        .iter()
        .filter(|a| {
            let (x, y) = sides(a);
            !atoms.iter().any(|b| {
                let (bx, by) = sides(b);
                b != *a && bx.is_subset(x) && y.is_subset(by)
            })
        })
        .copied()
        .collect()
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

fn count_up_to(n: u64, max: usize, min: usize) -> u64 {
    (min as u64..=(max as u64).min(n)).fold(0u64, |acc, k| acc.saturating_add(binomial(n, k)))
}

/// All subsets of `columns` with `min..=max` elements, smaller sets first.
fn sets_up_to(columns: &[VarId], max: usize, min: usize) -> Vec<VarSet> {
    fn extend(columns: &[VarId], start: usize, k: usize, cur: VarSet, out: &mut Vec<VarSet>) {
        if k == 0 {
            out.push(cur);
            return;
        }
        for i in start..columns.len() {
            extend(columns, i + 1, k - 1, cur.with(columns[i]), out);
        }
    }
    let mut out = Vec::new();
    for k in min..=max.min(columns.len()) {
        extend(columns, 0, k, VarSet::EMPTY, &mut out);
    }
    out
}
