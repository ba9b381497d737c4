mod common;

use common::{rank, team_holds, team_rows};
use idcalc::derive::{closure, derives};
use idcalc::parser::{parse_atom, parse_atom_in, parse_problem, parse_team_csv, print_atom, print_problem, print_team_csv};
use idcalc::pregeometry::{dim, indep_rel, is_independent_set, Vector, VectorSpace};
use idcalc::team::{literal, satisfies};
use idcalc::{Atom, AtomKind, Limits, Problem, Team, VarSet, Vocab};
use proptest::prelude::*;

const NAMES: [&str; 5] = ["a", "b", "c", "d", "e"];

fn vocab(n: usize) -> Vocab {
    Vocab::from_names(NAMES.iter().take(n)).unwrap()
}

fn set(n: usize) -> impl Strategy<Value = VarSet> {
    (0..1u64 << n).prop_map(VarSet::from_bits)
}

fn atom(kind: AtomKind, n: usize) -> impl Strategy<Value = Atom> {
    (set(n), set(n), set(n)).prop_filter_map("dependence atoms need a right side", move |(a, b, c)| match kind {
        AtomKind::Dep => Atom::dep(a, b).ok(),
        AtomKind::AbsInd => Some(Atom::abs(a)),
        AtomKind::Ind => Some(Atom::ind(a, b)),
        AtomKind::CondInd => Some(Atom::cind(a, b, c)),
    })
}

fn any_kind() -> impl Strategy<Value = AtomKind> {
    prop::sample::select(AtomKind::ALL.to_vec())
}

/// Rows over `n` columns with values in {0,1,2}.
fn rows(n: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(prop::collection::vec(0u32..3, n), 1..=12)
}

fn team(n: usize, rows: &[Vec<u32>]) -> Team {
    let cells = rows.iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect();
    Team::new(vocab(n), cells).unwrap()
}

fn team_case() -> impl Strategy<Value = (usize, Vec<Vec<u32>>, Atom)> {
    (1usize..=5, any_kind()).prop_flat_map(|(n, kind)| (Just(n), rows(n), atom(kind, n)))
}

fn vectors(p: u32, k: usize, count: usize) -> impl Strategy<Value = Vec<Vector>> {
    prop::collection::vec(prop::collection::vec(0..p as u8, k), 0..=count)
}

fn widen(vs: &[Vector]) -> Vec<Vec<u32>> {
    vs.iter().map(|v| v.iter().map(|&c| c as u32).collect()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn fast_and_literal_evaluators_agree((n, rows, atom) in team_case()) {
        let t = team(n, &rows);
        let fast = satisfies(&t, &atom).unwrap();
        prop_assert_eq!(fast, literal::holds(&t, &atom));
        prop_assert_eq!(fast, team_holds(&rows, &atom));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn repeated_rows_do_not_change_verdicts((n, rows, atom) in team_case(), repeat in 0usize..12) {
        let mut doubled = rows.clone();
        doubled.push(rows[repeat % rows.len()].clone());
        doubled.extend(rows.iter().rev().cloned());
        prop_assert_eq!(
            satisfies(&team(n, &rows), &atom).unwrap(),
            satisfies(&team(n, &doubled), &atom).unwrap()
        );
    }

    #[test]
    fn renaming_columns_preserves_verdicts((n, rows, atom) in team_case()) {
        let t = team(n, &rows);
        let rename = |name: &str| format!("v{}", NAMES.iter().position(|&x| x == name).unwrap() * 7 % 5);
        // New names in reversed column order, so variable ids no longer line up.
        let mut csv = NAMES[..n].iter().rev().map(|m| rename(m)).collect::<Vec<_>>().join(",") + "\n";
        for r in &rows {
            csv += &r.iter().rev().map(u32::to_string).collect::<Vec<_>>().join(",");
            csv += "\n";
        }
        let moved_team = parse_team_csv(csv.as_bytes()).unwrap();
        let moved = parse_atom_in(&rename_tokens(&print_atom(&atom, t.vocab()), rename), moved_team.vocab()).unwrap();
        let verdict = satisfies(&t, &atom).unwrap();
        prop_assert_eq!(verdict, satisfies(&moved_team, &moved).unwrap());
        prop_assert_eq!(verdict, satisfies(&t.renamed(|m| m.to_uppercase()).unwrap(), &atom).unwrap());
    }

    #[test]
    fn independence_is_symmetric_and_trivial_with_an_empty_side(
        (n, rows, a) in (1usize..=5).prop_flat_map(|n| (Just(n), rows(n), set(n))),
        b in set(5),
    ) {
        let t = team(n, &rows);
        let b = VarSet::from_bits(b.bits() & ((1 << n) - 1));
        prop_assert!(satisfies(&t, &Atom::ind(a, VarSet::EMPTY)).unwrap());
        prop_assert_eq!(satisfies(&t, &Atom::ind(a, b)).unwrap(), satisfies(&t, &Atom::ind(b, a)).unwrap());
    }

    #[test]
    fn atoms_print_and_parse_back(kind in any_kind(), a in atom(AtomKind::CondInd, 5)) {
        let sets = a.components();
        let Ok(atom) = Atom::from_sets(kind, &sets[..kind.arity()]) else { return Ok(()) };
        let v = vocab(5);
        let text = print_atom(&atom, &v);
        prop_assert_eq!(parse_atom_in(&text, &v).unwrap(), atom);
    }

    #[test]
    fn list_order_and_repeats_do_not_matter(
        order in Just((0..5).collect::<Vec<usize>>()).prop_shuffle(),
        lhs in set(5),
        rhs in 1u64..32,
    ) {
        let names = |s: VarSet, repeat: bool| -> String {
            let mut out: Vec<&str> = order.iter().filter(|&&i| s.bits() >> i & 1 == 1).map(|&i| NAMES[i]).collect();
            if repeat {
                out.extend(out.clone());
            }
            if out.is_empty() { "()".to_string() } else { out.join(" ") }
        };
        let rhs = VarSet::from_bits(rhs);
        let mut canonical = vocab(5);
        let expected = parse_atom(&format!("ind({}, {})", names(lhs, false), names(rhs, false)), &mut canonical).unwrap();
        let shuffled = parse_atom_in(&format!("ind({}, {})", names(lhs, true), names(rhs, true)), &canonical).unwrap();
        prop_assert_eq!(shuffled, expected);
        prop_assert_eq!(expected, Atom::ind(lhs, rhs));
    }

    #[test]
    fn team_csv_round_trips((n, rows) in (1usize..=5).prop_flat_map(|n| (Just(n), rows(n)))) {
        let t = team(n, &rows);
        let text = print_team_csv(&t);
        let back = parse_team_csv(text.as_bytes()).unwrap();
        prop_assert_eq!(print_team_csv(&back), text);
        prop_assert_eq!(team_rows(&back), team_rows(&t));
    }
}

/// Renames every variable token of an atom's text.
fn rename_tokens(text: &str, rename: impl Fn(&str) -> String) -> String {
    let mut out = String::new();
    let mut token = String::new();
    for c in text.chars().chain([' ']) {
        if c.is_ascii_alphanumeric() || c == '_' {
            token.push(c);
            continue;
        }
        if NAMES.contains(&token.as_str()) {
            out += &rename(&token);
        } else {
            out += &token;
        }
        token.clear();
        out.push(c);
    }
    out.pop();
    out
}

fn named(atom: &Atom, vocab: &Vocab) -> Vec<Vec<String>> {
    atom.components()
        .into_iter()
        .map(|c| {
            let mut names: Vec<String> = c.iter().map(|v| vocab.name(v).to_string()).collect();
            names.sort();
            names
        })
        .collect()
}

fn problem_case(max_vars: usize, max_premises: usize) -> impl Strategy<Value = (AtomKind, usize, Vec<Atom>, Atom)> {
    (any_kind(), 1..=max_vars).prop_flat_map(move |(kind, n)| {
        (
            Just(kind),
            Just(n),
            prop::collection::vec(atom(kind, n), 0..=max_premises),
            atom(kind, n),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn problems_print_and_parse_back((_, n, sigma, goal) in problem_case(5, 4)) {
        let p = Problem::new(vocab(n), sigma, goal).unwrap();
        let back = parse_problem(&print_problem(&p)).unwrap();
        // Parsing numbers variables by first appearance, so ids may move once;
        // compare by name, and expect an exact round trip from then on.
        let by_name = |q: &Problem| {
            let mut premises: Vec<Vec<Vec<String>>> = q.sigma().iter().map(|a| named(a, q.vocab())).collect();
            premises.sort();
            (premises, named(q.goal(), q.vocab()))
        };
        prop_assert_eq!(by_name(&back), by_name(&p));
        let text = print_problem(&back);
        let again = parse_problem(&text).unwrap();
        prop_assert_eq!(print_problem(&again), text);
        prop_assert_eq!(again, back);
    }

    #[test]
    fn closures_are_monotone_and_idempotent((kind, n, sigma, extra) in problem_case(4, 3)) {
        let universe = vocab(n).all();
        let limits = Limits::default();
        let small = closure(kind, &sigma, universe, &limits).unwrap();
        let mut more = sigma.clone();
        more.push(extra);
        let large = closure(kind, &more, universe, &limits).unwrap();
        prop_assert!(small.atoms().all(|a| large.contains(&a)));
        let closed: Vec<Atom> = small.atoms().collect();
        let again = closure(kind, &closed, universe, &limits).unwrap();
        prop_assert_eq!(again.len(), small.len());
        prop_assert!(sigma.iter().all(|a| small.contains(a)));
    }

    #[test]
    fn proofs_replay_and_agree_with_closures((kind, n, sigma, goal) in problem_case(4, 3)) {
        let p = Problem::new(vocab(n), sigma, goal).unwrap().with_universe(vocab(n).all()).unwrap();
        let limits = Limits::default();
        let judgment = derives(&p, &limits).unwrap();
        let c = closure(kind, p.sigma(), p.universe(), &limits).unwrap();
        prop_assert_eq!(judgment.derivable, c.contains(p.goal()));
        if let Some(proof) = judgment.proof {
            prop_assert!(proof.replay(p.sigma()).is_ok());
            prop_assert_eq!(proof.conclusion(), p.goal());
        }
    }

    #[test]
    fn span_dimensions_match_a_reference_elimination(
        (p, k, vs) in prop::sample::select(vec![2u32, 3, 5]).prop_flat_map(|p| (1usize..=5).prop_flat_map(move |k| (Just(p), Just(k), vectors(p, k, 6)))),
    ) {
        let space = VectorSpace::new(p, k).unwrap();
        prop_assert_eq!(dim(&space, &vs).unwrap(), rank(p, &widen(&vs)));
    }

    #[test]
    fn independence_relation_properties(
        (p, k, a, b, c) in prop::sample::select(vec![2u32, 3]).prop_flat_map(|p| (1usize..=4).prop_flat_map(move |k| (Just(p), Just(k), vectors(p, k, 3), vectors(p, k, 3), vectors(p, k, 3)))),
    ) {
        let s = VectorSpace::new(p, k).unwrap();
        let ab: Vec<Vector> = a.iter().chain(&b).cloned().collect();
        // Symmetry, and agreement with the rank identity.
        let forward = indep_rel(&s, &a, &c, &b).unwrap();
        prop_assert_eq!(forward, indep_rel(&s, &b, &c, &a).unwrap());
        let r = |vs: Vec<&Vector>| rank(p, &widen(&vs.into_iter().cloned().collect::<Vec<_>>()));
        let expected = r(a.iter().chain(&c).collect()) + r(b.iter().chain(&c).collect())
            == r(a.iter().chain(&b).chain(&c).collect()) + r(c.iter().collect());
        prop_assert_eq!(forward, expected);
        // Over a base containing both sides, independence is automatic.
        prop_assert!(indep_rel(&s, &a, &ab, &b).unwrap());
        // A set independent over c stays independent after dropping members.
        if is_independent_set(&s, &ab, &c).unwrap() {
            prop_assert!(is_independent_set(&s, &a, &c).unwrap());
        }
    }
}
