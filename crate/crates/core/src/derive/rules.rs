use std::fmt;

use crate::atom::{Atom, AtomKind};

/// One inference rule of one of the four systems. Permutation and
/// duplication rules have no variant: canonical atoms make them identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    /// A member of the premise set.
    Hypothesis,
    /// `dep(x, x)`
    DepReflexivity,
    /// `dep(x, y z) ⇒ dep(x u, y)`
    DepProjection,
    /// `dep(x, y), dep(y, z) ⇒ dep(x, z)`
    DepTransitivity,
    /// `dep(x, y), dep(x, v) ⇒ dep(x, y v)`
    DepUnion,
    /// `⊥(∅)`
    AbsEmpty,
    /// `⊥(x y) ⇒ ⊥(x)`
    AbsSubset,
    /// `x ⊥ ∅`
    IndEmpty,
    /// `x ⊥ y ⇒ y ⊥ x`
    IndSymmetry,
    /// `x ⊥ y z ⇒ x ⊥ y`
    IndProjection,
    /// `x ⊥ y, x y ⊥ z ⇒ x ⊥ y z`
    IndExchange,
    /// `x ⊥ x ⇒ x ⊥ y` for a single variable `x`
    IndConstant,
    /// `x ⊥_x y`
    CondReflexivity,
    /// `x ⊥_z y ⇒ y ⊥_z x`
    CondSymmetry,
    /// `x x' ⊥_z y y' ⇒ x ⊥_z y`
    CondProjection,
    /// `x ⊥_z y ⇒ x z ⊥_z y z`
    CondAbsorption,
    /// `x ⊥_z y, u ⊥_{z x} y ⇒ u ⊥_z y`
    CondContraction,
    /// `y ⊥_z y, z x ⊥_y u ⇒ x ⊥_z u`
    CondTransfer,
    /// `x ⊥_z y, x y ⊥_z u ⇒ x ⊥_z y u`
    CondExchange,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::Hypothesis => "hypothesis",
            Rule::DepReflexivity => "reflexivity",
            Rule::DepProjection => "projection",
            Rule::DepTransitivity => "transitivity",
            Rule::DepUnion => "union",
            Rule::AbsEmpty => "empty",
            Rule::AbsSubset => "subset",
            Rule::IndEmpty => "empty",
            Rule::IndSymmetry => "symmetry",
            Rule::IndProjection => "projection",
            Rule::IndExchange => "exchange",
            Rule::IndConstant => "constancy",
            Rule::CondReflexivity => "reflexivity",
            Rule::CondSymmetry => "symmetry",
            Rule::CondProjection => "projection",
            Rule::CondAbsorption => "absorption",
            Rule::CondContraction => "contraction",
            Rule::CondTransfer => "transfer",
            Rule::CondExchange => "exchange",
        }
    }

    /// The system the rule belongs to; `None` for [`Rule::Hypothesis`].
    pub fn kind(self) -> Option<AtomKind> {
        use Rule::*;
        Some(match self {
            Hypothesis => return None,
            DepReflexivity | DepProjection | DepTransitivity | DepUnion => AtomKind::Dep,
            AbsEmpty | AbsSubset => AtomKind::AbsInd,
            IndEmpty | IndSymmetry | IndProjection | IndExchange | IndConstant => AtomKind::Ind,
            _ => AtomKind::CondInd,
        })
    }

    /// Whether `premises ⇒ conclusion` is an instance of this rule, read on
    /// canonical set forms. Hypotheses are never admitted here; checking
    /// membership in the premise set is the caller's job.
    pub fn admits(self, premises: &[Atom], conclusion: &Atom) -> bool {
        use Atom::*;
        match (self, premises, *conclusion) {
            (Rule::DepReflexivity, [], Dep { lhs, rhs }) => lhs == rhs,
            (Rule::DepProjection, [Dep { lhs: x, rhs: yz }], Dep { lhs, rhs }) => {
                x.is_subset(lhs) && rhs.is_subset(*yz)
            }
            (Rule::DepTransitivity, [Dep { lhs: x, rhs: y }, Dep { lhs: y2, rhs: z }], Dep { lhs, rhs }) => {
                y == y2 && lhs == *x && rhs == *z
            }
            (Rule::DepUnion, [Dep { lhs: x, rhs: y }, Dep { lhs: x2, rhs: v }], Dep { lhs, rhs }) => {
                x == x2 && lhs == *x && rhs == (*y | *v)
            }
            (Rule::AbsEmpty, [], AbsInd(x)) => x.is_empty(),
            (Rule::AbsSubset, [AbsInd(xy)], AbsInd(x)) => x.is_subset(*xy),
            (Rule::IndEmpty, [], Ind { rhs, .. }) => rhs.is_empty(),
            (Rule::IndSymmetry, [Ind { lhs: x, rhs: y }], Ind { lhs, rhs }) => lhs == *y && rhs == *x,
            (Rule::IndProjection, [Ind { lhs: x, rhs: yz }], Ind { lhs, rhs }) => {
                lhs == *x && rhs.is_subset(*yz)
            }
            (Rule::IndExchange, [Ind { lhs: x, rhs: y }, Ind { lhs: xy, rhs: z }], Ind { lhs, rhs }) => {
                *xy == (*x | *y) && lhs == *x && rhs == (*y | *z)
            }
            (Rule::IndConstant, [Ind { lhs: x, rhs: x2 }], Ind { lhs, .. }) => {
                x == x2 && x.len() == 1 && lhs == *x
            }
            (Rule::CondReflexivity, [], CondInd { lhs, cond, .. }) => lhs == cond,
            (Rule::CondSymmetry, [CondInd { lhs: x, cond: z, rhs: y }], CondInd { lhs, cond, rhs }) => {
                lhs == *y && cond == *z && rhs == *x
            }
            (Rule::CondProjection, [CondInd { lhs: x, cond: z, rhs: y }], CondInd { lhs, cond, rhs }) => {
                lhs.is_subset(*x) && cond == *z && rhs.is_subset(*y)
            }
            (Rule::CondAbsorption, [CondInd { lhs: x, cond: z, rhs: y }], CondInd { lhs, cond, rhs }) => {
                cond == *z && lhs == (*x | *z) && rhs == (*y | *z)
            }
            (
                Rule::CondContraction,
                [CondInd { lhs: x, cond: z, rhs: y }, CondInd { lhs: u, cond: zx, rhs: y2 }],
                CondInd { lhs, cond, rhs },
            ) => y == y2 && *zx == (*z | *x) && lhs == *u && cond == *z && rhs == *y,
            (
                Rule::CondTransfer,
                [CondInd { lhs: y, cond: z, rhs: y2 }, CondInd { lhs: zx, cond: y3, rhs: u }],
                CondInd { lhs, cond, rhs },
            ) => y == y2 && y == y3 && cond == *z && *zx == (*z | lhs) && rhs == *u,
            (
                Rule::CondExchange,
                [CondInd { lhs: x, cond: z, rhs: y }, CondInd { lhs: xy, cond: z2, rhs: u }],
                CondInd { lhs, cond, rhs },
            ) => z == z2 && *xy == (*x | *y) && lhs == *x && cond == *z && rhs == (*y | *u),
            _ => false,
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A rule as listed in a system's description.
#[derive(Clone, Copy, Debug)]
pub struct RuleInfo {
    pub name: &'static str,
    pub premises: &'static [&'static str],
    pub conclusion: &'static str,
    /// Permutation and duplication rules, absorbed by canonical atoms.
    pub structural: bool,
    pub rule: Option<Rule>,
}

#[derive(Clone, Debug)]
pub struct RuleSystem {
    pub kind: AtomKind,
    pub rules: Vec<RuleInfo>,
    /// Whether derivability coincides with entailment over teams.
    pub complete: bool,
}

const fn info(rule: Rule, premises: &'static [&'static str], conclusion: &'static str) -> RuleInfo {
    RuleInfo {
        name: "",
        premises,
        conclusion,
        structural: false,
        rule: Some(rule),
    }
}

const fn structural(name: &'static str, premises: &'static [&'static str], conclusion: &'static str) -> RuleInfo {
    RuleInfo {
        name,
        premises,
        conclusion,
        structural: true,
        rule: None,
    }
}

impl RuleSystem {
    pub fn of(kind: AtomKind) -> RuleSystem {
        let rules = match kind {
            AtomKind::Dep => vec![
                info(Rule::DepReflexivity, &[], "dep(x, x)"),
                info(Rule::DepProjection, &["dep(x, y z)"], "dep(x u, y)"),
                info(Rule::DepTransitivity, &["dep(x, y)", "dep(y, z)"], "dep(x, z)"),
                info(Rule::DepUnion, &["dep(x, y)", "dep(x, v)"], "dep(x, y v)"),
                structural("permutation", &["dep(x, y)"], "dep(z, y) for z a permutation of x"),
            ],
            AtomKind::AbsInd => vec![
                info(Rule::AbsEmpty, &[], "abs(())"),
                info(Rule::AbsSubset, &["abs(x y)"], "abs(x)"),
                structural("permutation", &["abs(x)"], "abs(y) for y a permutation of x"),
            ],
            AtomKind::Ind => vec![
                info(Rule::IndEmpty, &[], "ind(x, ())"),
                info(Rule::IndSymmetry, &["ind(x, y)"], "ind(y, x)"),
                info(Rule::IndProjection, &["ind(x, y z)"], "ind(x, y)"),
                info(Rule::IndExchange, &["ind(x, y)", "ind(x y, z)"], "ind(x, y z)"),
                info(Rule::IndConstant, &["ind(x, x) for a single variable x"], "ind(x, y)"),
                structural("permutation", &["ind(x, y)"], "ind(u, v) for permutations u, v"),
                structural("duplication", &["ind(x y z, w)"], "ind(x y y z, w)"),
            ],
            AtomKind::CondInd => vec![
                info(Rule::CondReflexivity, &[], "cind(x, x, y)"),
                info(Rule::CondSymmetry, &["cind(x, z, y)"], "cind(y, z, x)"),
                info(Rule::CondProjection, &["cind(x x', z, y y')"], "cind(x, z, y)"),
                info(Rule::CondAbsorption, &["cind(x, z, y)"], "cind(x z, z, y z)"),
                info(Rule::CondContraction, &["cind(x, z, y)", "cind(u, z x, y)"], "cind(u, z, y)"),
                info(Rule::CondTransfer, &["cind(y, z, y)", "cind(z x, y, u)"], "cind(x, z, u)"),
                info(Rule::CondExchange, &["cind(x, z, y)", "cind(x y, z, u)"], "cind(x, z, y u)"),
                structural("permutation", &["cind(x, z, y)"], "cind(u, v, w) for permutations u, v, w"),
            ],
        };
        let rules = rules
            .into_iter()
            .map(|mut r| {
                if let Some(rule) = r.rule {
                    r.name = rule.name();
                }
                r
            })
            .collect();
        RuleSystem {
            kind,
            rules,
            complete: kind != AtomKind::CondInd,
        }
    }
}
