//! Canonical atoms and problems.
//!
//! Atoms are stored as sets rather than sequences. Every rule system in the
//! crate is closed under permuting and duplicating variables inside a
//! component, so the set form loses nothing and keeps the atom universe over a
//! finite variable set finite.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::vars::{VarSet, Vocab};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AtomKind {
    Dep,
    AbsInd,
    Ind,
    CondInd,
}

impl AtomKind {
    pub const ALL: [AtomKind; 4] = [
        AtomKind::Dep,
        AtomKind::AbsInd,
        AtomKind::Ind,
        AtomKind::CondInd,
    ];

    /// Number of variable lists the atom syntax takes.
    pub fn arity(self) -> usize {
        match self {
            AtomKind::AbsInd => 1,
            AtomKind::Dep | AtomKind::Ind => 2,
            AtomKind::CondInd => 3,
        }
    }

    /// Keyword used by the text syntax.
    pub fn keyword(self) -> &'static str {
        match self {
            AtomKind::Dep => "dep",
            AtomKind::AbsInd => "abs",
            AtomKind::Ind => "ind",
            AtomKind::CondInd => "cind",
        }
    }

    pub fn from_keyword(word: &str) -> Option<AtomKind> {
        AtomKind::ALL.into_iter().find(|k| k.keyword() == word)
    }
}

impl fmt::Display for AtomKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

/// A dependence or independence atom in canonical set form.
///
/// `CondInd { lhs, cond, rhs }` reads "lhs is independent of rhs given cond".
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Atom {
    Dep { lhs: VarSet, rhs: VarSet },
    AbsInd(VarSet),
    Ind { lhs: VarSet, rhs: VarSet },
    CondInd { lhs: VarSet, cond: VarSet, rhs: VarSet },
}

impl Atom {
    /// `dep(lhs, rhs)`; an empty right side is only allowed with an empty left side.
    pub fn dep(lhs: VarSet, rhs: VarSet) -> Result<Atom> {
        if rhs.is_empty() && !lhs.is_empty() {
            return Err(Error::DepConstraint);
        }
        Ok(Atom::Dep { lhs, rhs })
    }

    pub fn abs(vars: VarSet) -> Atom {
        Atom::AbsInd(vars)
    }

    pub fn ind(lhs: VarSet, rhs: VarSet) -> Atom {
        Atom::Ind { lhs, rhs }
    }

    pub fn cind(lhs: VarSet, cond: VarSet, rhs: VarSet) -> Atom {
        Atom::CondInd { lhs, cond, rhs }
    }

    /// Builds the canonical atom of `kind` from lists of variable names,
    /// interning names into `vocab`.
    pub fn canonicalize<S: AsRef<str>>(
        kind: AtomKind,
        components: &[Vec<S>],
        vocab: &mut Vocab,
    ) -> Result<Atom> {
        if components.len() != kind.arity() {
            return Err(Error::Arity {
                kind,
                expected: kind.arity(),
                found: components.len(),
            });
        }
        let mut sets = Vec::with_capacity(components.len());
        for list in components {
            let mut set = VarSet::EMPTY;
            for name in list {
                let id = vocab.intern(name.as_ref())?;
                if kind == AtomKind::AbsInd && set.contains(id) {
                    return Err(Error::DuplicateVariable(name.as_ref().to_string()));
                }
                set.insert(id);
            }
            sets.push(set);
        }
        Atom::from_sets(kind, &sets)
    }

    /// Builds an atom from already-interned components.
    pub fn from_sets(kind: AtomKind, sets: &[VarSet]) -> Result<Atom> {
        if sets.len() != kind.arity() {
            return Err(Error::Arity {
                kind,
                expected: kind.arity(),
                found: sets.len(),
            });
        }
        Ok(match kind {
            AtomKind::Dep => Atom::dep(sets[0], sets[1])?,
            AtomKind::AbsInd => Atom::abs(sets[0]),
            AtomKind::Ind => Atom::ind(sets[0], sets[1]),
            AtomKind::CondInd => Atom::cind(sets[0], sets[1], sets[2]),
        })
    }

    pub fn kind(&self) -> AtomKind {
        match self {
            Atom::Dep { .. } => AtomKind::Dep,
            Atom::AbsInd(_) => AtomKind::AbsInd,
            Atom::Ind { .. } => AtomKind::Ind,
            Atom::CondInd { .. } => AtomKind::CondInd,
        }
    }

    /// Components in syntax order (`cind(lhs, cond, rhs)`).
    pub fn components(&self) -> Vec<VarSet> {
        match *self {
            Atom::Dep { lhs, rhs } | Atom::Ind { lhs, rhs } => vec![lhs, rhs],
            Atom::AbsInd(vars) => vec![vars],
            Atom::CondInd { lhs, cond, rhs } => vec![lhs, cond, rhs],
        }
    }

    pub fn vars(&self) -> VarSet {
        self.components()
            .into_iter()
            .fold(VarSet::EMPTY, |acc, s| acc | s)
    }

    pub fn display<'a>(&'a self, vocab: &'a Vocab) -> AtomDisplay<'a> {
        AtomDisplay { atom: self, vocab }
    }
}

/// Prints an atom in the crate's text syntax, e.g. `ind(x y, z)`.
pub struct AtomDisplay<'a> {
    atom: &'a Atom,
    vocab: &'a Vocab,
}

impl fmt::Display for AtomDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.atom.kind().keyword())?;
        for (i, set) in self.atom.components().into_iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            if set.is_empty() {
                f.write_str("()")?;
            } else {
                f.write_str(&self.vocab.render(set))?;
            }
        }
        f.write_str(")")
    }
}

/// Enumerates every canonical atom of `kind` over subsets of `universe`,
/// each exactly once.
///
/// Counts: `4^n` for `Ind`, `4^n - (2^n - 1)` for `Dep` (pairs with a
/// non-empty left and empty right side are not atoms), `2^n` for `AbsInd`
/// and `8^n` for `CondInd`.
pub fn atom_universe(kind: AtomKind, universe: VarSet) -> Result<Box<dyn Iterator<Item = Atom>>> {
    let n = universe.len();
    let cap = match kind {
        AtomKind::CondInd => UNIVERSE_ENUM_CAP_TRIPLE,
        _ => UNIVERSE_ENUM_CAP_PAIR,
    };
    if n > cap {
        return Err(Error::CapExceeded { kind, vars: n, cap });
    }
    let iter: Box<dyn Iterator<Item = Atom>> = match kind {
        AtomKind::AbsInd => Box::new(universe.subsets().map(Atom::AbsInd)),
        AtomKind::Ind => Box::new(
            universe
                .subsets()
                .flat_map(move |l| universe.subsets().map(move |r| Atom::ind(l, r))),
        ),
        AtomKind::Dep => Box::new(universe.subsets().flat_map(move |l| {
            universe
                .subsets()
                .filter_map(move |r| Atom::dep(l, r).ok())
        })),
        AtomKind::CondInd => Box::new(universe.subsets().flat_map(move |l| {
            universe.subsets().flat_map(move |c| {
                universe.subsets().map(move |r| Atom::cind(l, c, r))
            })
        })),
    };
    Ok(iter)
}

/// Largest universe [`atom_universe`] enumerates for two-component kinds.
pub const UNIVERSE_ENUM_CAP_PAIR: usize = 12;
/// Largest universe [`atom_universe`] enumerates for conditional atoms.
pub const UNIVERSE_ENUM_CAP_TRIPLE: usize = 8;

/// Premises, a goal, and the finite variable universe they live over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Problem {
    vocab: Vocab,
    kind: AtomKind,
    sigma: Vec<Atom>,
    goal: Atom,
    universe: VarSet,
}

impl Problem {
    /// Premises keep their order, minus repeats; the universe defaults to the
    /// variables that occur in the premises and the goal.
    pub fn new(vocab: Vocab, sigma: Vec<Atom>, goal: Atom) -> Result<Problem> {
        let kind = goal.kind();
        for atom in &sigma {
            if atom.kind() != kind {
                return Err(Error::MixedKinds {
                    expected: kind,
                    found: atom.kind(),
                });
            }
        }
        let mut seen = HashSet::new();
        let mut sigma = sigma;
        sigma.retain(|a| seen.insert(*a));
        let universe = sigma
            .iter()
            .fold(goal.vars(), |acc, a| acc | a.vars());
        if !universe.is_subset(vocab.all()) {
            return Err(Error::UniverseTooSmall);
        }
        Ok(Problem {
            vocab,
            kind,
            sigma,
            goal,
            universe,
        })
    }

    /// Widens the universe; it must still cover every mentioned variable.
    pub fn with_universe(mut self, universe: VarSet) -> Result<Problem> {
        if !self.universe.is_subset(universe) || !universe.is_subset(self.vocab.all()) {
            return Err(Error::UniverseTooSmall);
        }
        self.universe = universe;
        Ok(self)
    }

    pub fn vocab(&self) -> &Vocab {
        &self.vocab
    }

    pub fn kind(&self) -> AtomKind {
        self.kind
    }

    pub fn sigma(&self) -> &[Atom] {
        &self.sigma
    }

    pub fn goal(&self) -> &Atom {
        &self.goal
    }

    pub fn universe(&self) -> VarSet {
        self.universe
    }

    /// Same premises and universe, different goal.
    pub fn with_goal(&self, goal: Atom) -> Result<Problem> {
        let p = Problem::new(self.vocab.clone(), self.sigma.clone(), goal)?;
        p.with_universe(self.universe | goal.vars())
    }
}
