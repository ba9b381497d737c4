use super::{certify, CounterResult, Countermodel, Model};
use crate::atom::{Atom, AtomKind, Problem};
use crate::derive::{attribute_closure, derives_absind, derives_dep, indep_closure, Judgment, Limits};
use crate::error::{Error, Result};
use crate::pregeometry::{Geometry, Vector, VectorSpace};
use crate::team::Team;
use crate::vars::{VarId, VarSet};

/// Bounds for the exhaustive team search that backs up the functional-team
/// construction: universes of at most this many variables, teams of at most
/// this many rows.
pub const TEAM_SEARCH_MAX_VARS: usize = 4;
pub const TEAM_SEARCH_MAX_ROWS: usize = 4;

fn expect_kind(problem: &Problem, kind: AtomKind) -> Result<()> {
    if problem.kind() == kind {
        Ok(())
    } else {
        Err(Error::MixedKinds {
            expected: kind,
            found: problem.kind(),
        })
    }
}

fn sides(atom: &Atom) -> (VarSet, VarSet) {
    match *atom {
        Atom::Dep { lhs, rhs } | Atom::Ind { lhs, rhs } => (lhs, rhs),
        Atom::AbsInd(vars) => (vars, VarSet::EMPTY),
        Atom::CondInd { .. } => unreachable!("no constructions for conditional atoms"),
    }
}

/// A team over the problem's universe with 0/1 cells given by `value`.
fn binary_team(problem: &Problem, rows: usize, value: impl Fn(usize, VarId) -> bool) -> Result<Team> {
    let universe = problem.universe();
    let cells = (0..rows)
        .map(|r| {
            universe
                .iter()
                .map(|v| if value(r, v) { "1" } else { "0" }.to_string())
                .collect()
        })
        .collect();
    Team::with_domain(problem.vocab().clone(), universe, cells)
}

fn geometry(problem: &Problem, space: VectorSpace, image: impl Fn(VarId) -> Vector) -> Result<Geometry> {
    let mut g = Geometry::new(space, problem.vocab().clone());
    for v in problem.universe() {
        g.assign(v, image(v))?;
    }
    Ok(g)
}

fn witness(model: Model, problem: &Problem) -> Result<CounterResult> {
    Countermodel::checked(model, problem).map(CounterResult::Witness)
}

/// Two rows: all zeros, and zeros exactly on the attribute closure of the
/// goal's left side.
pub fn counter_dep_team(problem: &Problem) -> Result<CounterResult> {
    let judgment = derives_dep(problem)?;
    if judgment.derivable {
        return Ok(CounterResult::Derivable(judgment));
    }
    let closed = attribute_closure(sides(problem.goal()).0, problem.sigma());
    let team = binary_team(problem, 2, |r, v| r == 1 && !closed.contains(v))?;
    witness(Model::Team(team), problem)
}

/// In GF(2)^1: the attribute closure of the goal's left side goes to 0, which
/// lies in the closure of everything, and the rest to a vector outside the
/// closure of 0.
pub fn counter_dep_closure(problem: &Problem) -> Result<CounterResult> {
    let judgment = derives_dep(problem)?;
    if judgment.derivable {
        return Ok(CounterResult::Derivable(judgment));
    }
    let closed = attribute_closure(sides(problem.goal()).0, problem.sigma());
    let space = VectorSpace::new(2, 1)?;
    let g = geometry(problem, space.clone(), |v| {
        if closed.contains(v) {
            space.zero()
        } else {
            space.unit(0)
        }
    })?;
    witness(Model::Geometry(g), problem)
}

/// All 0/1 rows on the variables other than a designated goal member `x0`.
/// `x0` is constant 0 when the goal is a singleton, the complement of the
/// other member when the goal has two, and the parity of the other members
/// otherwise.
pub fn counter_absind_team(problem: &Problem) -> Result<CounterResult> {
    let judgment = derives_absind(problem)?;
    if judgment.derivable {
        return Ok(CounterResult::Derivable(judgment));
    }
    let goal = sides(problem.goal()).0;
    let x0 = goal.first().expect("the empty atom is derivable");
    let free: Vec<VarId> = problem.universe().without(x0).iter().collect();
    let rest = goal.without(x0);
    let bit = |r: usize, v: VarId| r >> free.iter().position(|&f| f == v).unwrap() & 1 == 1;
    let team = binary_team(problem, 1 << free.len(), |r, v| {
        if v != x0 {
            return bit(r, v);
        }
        let parity = rest.iter().filter(|&w| bit(r, w)).count() % 2 == 1;
        match rest.len() {
            0 => false,
            1 => !parity,
            _ => parity,
        }
    })?;
    witness(Model::Team(team), problem)
}

/// Distinct basis vectors for every variable except a designated goal member
/// `x0`, which is sent into the span of the other goal members' images but
/// outside the span of any proper part of them: 0 for a singleton goal, the
/// sum of the images otherwise. With two members the sum would coincide with
/// the single other image and the image set would collapse, so GF(3) and twice
/// that image are used instead.
pub fn counter_absind_pregeo(problem: &Problem) -> Result<CounterResult> {
    let judgment = derives_absind(problem)?;
    if judgment.derivable {
        return Ok(CounterResult::Derivable(judgment));
    }
    let goal = sides(problem.goal()).0;
    let x0 = goal.first().expect("the empty atom is derivable");
    let others: Vec<VarId> = problem.universe().without(x0).iter().collect();
    let rest = goal.without(x0);
    let p = if rest.len() == 1 { 3 } else { 2 };
    let space = VectorSpace::new(p, others.len().max(1))?;
    let basis = |v: VarId| space.unit(others.iter().position(|&o| o == v).unwrap());
    let d = match rest.len() {
        0 => space.zero(),
        1 => space.scale(2, &basis(rest.first().unwrap())),
        _ => space.sum(rest.iter().map(basis).collect::<Vec<_>>().iter()),
    };
    let g = geometry(problem, space.clone(), |v| if v == x0 { d.clone() } else { basis(v) })?;
    witness(Model::Geometry(g), problem)
}

/// Shrinks the goal one side element at a time while it stays non-derivable,
/// then builds an assignment into GF(2)^k. If the sides share a variable `z`
/// with `z ⊥ z` not derivable, `z` goes to a nonzero vector and everything
/// else to 0. Otherwise the goal members other than a designated `x0` get
/// distinct basis vectors, `x0` their sum, and all other variables 0.
pub fn counter_ind_pregeo(problem: &Problem, limits: &Limits) -> Result<CounterResult> {
    expect_kind(problem, AtomKind::Ind)?;
    let closure = indep_closure(problem.sigma(), problem.universe(), limits)?;
    if let Some(proof) = closure.proof(problem.goal()) {
        return Ok(CounterResult::Derivable(Judgment::new(AtomKind::Ind, Some(proof))));
    }
    let (mut x, mut y) = sides(problem.goal());
    loop {
        let smaller = x
            .iter()
            .map(|v| (x.without(v), y))
            .chain(y.iter().map(|v| (x, y.without(v))))
            .find(|&(a, b)| !closure.contains(&Atom::ind(a, b)));
        match smaller {
            Some((a, b)) => (x, y) = (a, b),
            None => break,
        }
    }

    let shared = (x & y)
        .iter()
        .find(|&z| !closure.contains(&Atom::ind(VarSet::singleton(z), VarSet::singleton(z))));
    let g = if let Some(z) = shared {
        let space = VectorSpace::new(2, 1)?;
        geometry(problem, space.clone(), |v| if v == z { space.unit(0) } else { space.zero() })?
    } else {
        let x0 = x.first().expect("sides of a non-derivable atom are nonempty");
        let others: Vec<VarId> = (x | y).without(x0).iter().collect();
        let space = VectorSpace::new(2, others.len().max(1))?;
        let basis: Vec<Vector> = (0..others.len()).map(|i| space.unit(i)).collect();
        let d = space.sum(basis.iter());
        geometry(problem, space.clone(), |v| {
            if v == x0 {
                d.clone()
            } else {
                others
                    .iter()
                    .position(|&o| o == v)
                    .map_or_else(|| space.zero(), |i| basis[i].clone())
            }
        })?
    };
    witness(Model::Geometry(g), problem)
}

/// The team of all linear functionals applied to the pregeometry witness:
/// one row per `h` in GF(2)^k, with cell `h · s(v)`. Team independence of
/// such a team matches independence of the spans. Should the result fail
/// certification, small universes are searched exhaustively instead.
pub fn counter_ind_team(problem: &Problem, limits: &Limits) -> Result<CounterResult> {
    let g = match counter_ind_pregeo(problem, limits)? {
        CounterResult::Witness(Countermodel {
            model: Model::Geometry(g),
            ..
        }) => g,
        other => return Ok(other),
    };
    let k = g.space().dim();
    let team = binary_team(problem, 1 << k, |h, v| {
        let image = g.image(v).expect("assigned on the universe");
        image.iter().enumerate().filter(|&(i, &c)| c == 1 && h >> i & 1 == 1).count() % 2 == 1
    })?;
    match Countermodel::checked(Model::Team(team), problem) {
        Ok(cm) => Ok(CounterResult::Witness(cm)),
        Err(Error::Verification(_)) => search_team(problem),
        Err(e) => Err(e),
    }
}

/// Smallest-first search over teams of 0/1 rows.
fn search_team(problem: &Problem) -> Result<CounterResult> {
    let n = problem.universe().len();
    if n > TEAM_SEARCH_MAX_VARS {
        return Err(Error::NoCountermodel);
    }
    let candidates = 1usize << n;
    for size in 1..=TEAM_SEARCH_MAX_ROWS.min(candidates) {
        let mut pick: Vec<usize> = (0..size).collect();
        loop {
            let team = binary_team(problem, size, |r, v| {
                let pos = problem.universe().iter().position(|u| u == v).unwrap();
                pick[r] >> pos & 1 == 1
            })?;
            let model = Model::Team(team);
            if certify(&model, problem.sigma(), problem.goal())?.refutes() {
                return witness(model, problem);
            }
            // Next combination in lexicographic order.
            let Some(i) = (0..size).rev().find(|&i| pick[i] < candidates - size + i) else {
                break;
            };
            pick[i] += 1;
            for j in i + 1..size {
                pick[j] = pick[j - 1] + 1;
            }
        }
    }
    Err(Error::NoCountermodel)
}
