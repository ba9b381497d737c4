//! Acceptance run: each criterion prints one PASS/FAIL line, and the process
//! fails if any criterion does.

mod common;

use std::collections::HashSet;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use common::{team_holds, team_rows, Vectors};
use idcalc::countermodel::{
    counter_absind_pregeo, counter_absind_team, counter_dep_closure, counter_dep_team, counter_ind_pregeo,
    counter_ind_team, CounterResult, Countermodel, Model,
};
use idcalc::derive::{closure, derives_absind, derives_dep, derives_indep};
use idcalc::parser::{parse_atom_in, parse_problem, parse_team_csv, print_problem};
use idcalc::pregeometry::{audit_axioms, VectorSpace};
use idcalc::team::satisfies;
use idcalc::{atom_universe, Atom, AtomKind, Limits, Problem, VarSet, Vocab};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const FIGURE_1: &str = "x1,x2,x3,x4,x5\n0,0,1,2,3\n0,1,1,4,3\n1,1,1,4,4\n0,1,0,3,2\n";
const FIGURE_2: &str = "x1,x2,x3\n0,0,1\n0,1,1\n1,0,1\n1,1,0\n";
const RANDOM_PROBLEMS: usize = 10_000;
const SOUNDNESS_PAIRS: usize = 10_000;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: String) -> Outcome {
    Outcome { passed, detail }
}

fn vocab(n: usize) -> Vocab {
    Vocab::from_names(["a", "b", "c", "d", "e", "f"].iter().take(n)).unwrap()
}

fn problem(vocab: &Vocab, sigma: &[Atom], goal: Atom) -> Problem {
    Problem::new(vocab.clone(), sigma.to_vec(), goal).unwrap()
}

/// Index tuples `i1 < i2 < ...` of length at most `k` from `0..n`.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut frontier = vec![vec![]];
    for _ in 0..k {
        let mut next = Vec::new();
        for c in &frontier {
            let start = c.last().map_or(0, |&l: &usize| l + 1);
            for i in start..n {
                let mut d: Vec<usize> = c.clone();
                d.push(i);
                next.push(d);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// For each premise set (as a bit mask over `atoms`), the atoms true in every
/// model whose truth mask contains it.
fn entailed(masks: &HashSet<u64>, sigma: u64, all: u64) -> u64 {
    masks.iter().filter(|&&m| m & sigma == sigma).fold(all, |acc, &m| acc & m)
}

fn truth_mask(atoms: &[Atom], holds: impl Fn(&Atom) -> bool) -> u64 {
    atoms.iter().enumerate().filter(|(_, a)| holds(a)).fold(0, |m, (i, _)| m | 1 << i)
}

/// Rows of bits of `row` over `n` variables.
fn bit_row(row: usize, n: usize) -> Vec<u32> {
    (0..n).map(|i| (row >> i & 1) as u32).collect()
}

/// A witness satisfies the premises and falsifies the goal under the
/// reference semantics, and the library's own recheck agrees.
fn witness_ok(w: &Countermodel, p: &Problem) -> bool {
    let local = match &w.model {
        Model::Team(t) => {
            let rows = team_rows(t);
            p.sigma().iter().all(|a| team_holds(&rows, a)) && !team_holds(&rows, p.goal())
        }
        Model::Geometry(g) => {
            let v = Vectors::from_geometry(g);
            p.sigma().iter().all(|a| v.holds(a)) && !v.holds(p.goal())
        }
    };
    local && w.recheck(p) && w.certificate.refutes()
}

fn random_set(rng: &mut ChaCha8Rng, n: usize) -> VarSet {
    VarSet::from_bits(rng.gen_range(0..1u64 << n))
}

fn random_ind_problems(seed: u64) -> Vec<Problem> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..RANDOM_PROBLEMS)
        .map(|_| {
            let n = rng.gen_range(1..=5);
            let v = vocab(n);
            let k = rng.gen_range(0..=4);
            let sigma: Vec<Atom> =
                (0..k).map(|_| Atom::ind(random_set(&mut rng, n), random_set(&mut rng, n))).collect();
            let goal = Atom::ind(random_set(&mut rng, n), random_set(&mut rng, n));
            problem(&v, &sigma, goal)
        })
        .collect()
}

fn figure_fidelity() -> Outcome {
    let t1 = parse_team_csv(FIGURE_1.as_bytes()).unwrap();
    let t2 = parse_team_csv(FIGURE_2.as_bytes()).unwrap();
    let cases = [
        (&t1, "dep(x1 x2 x3, x4 x5)", true),
        (&t1, "dep(x2 x3, x5)", false),
        (&t2, "abs(x1 x2)", true),
        (&t2, "abs(x1 x3)", false),
    ];
    let mut slowest = Duration::ZERO;
    let mut wrong = Vec::new();
    for (team, text, expected) in cases {
        let atom = parse_atom_in(text, team.vocab()).unwrap();
        let start = Instant::now();
        let got = satisfies(team, &atom).unwrap();
        slowest = slowest.max(start.elapsed());
        if got != expected || team_holds(&team_rows(team), &atom) != expected {
            wrong.push(text);
        }
    }
    outcome(
        wrong.is_empty() && slowest < Duration::from_millis(1),
        format!("4 evaluations, {} wrong, slowest {slowest:.2?}", wrong.len()),
    )
}

fn dependence_completeness() -> Outcome {
    let start = Instant::now();
    let v = vocab(3);
    let atoms: Vec<Atom> = atom_universe(AtomKind::Dep, v.all()).unwrap().collect();
    let all = (1u64 << atoms.len()) - 1;
    let masks: HashSet<u64> = (0..64)
        .map(|pair| {
            let rows = [bit_row(pair & 7, 3), bit_row(pair >> 3, 3)];
            truth_mask(&atoms, |a| team_holds(&rows, a))
        })
        .collect();
    let (mut problems, mut discrepancies, mut bad_proofs) = (0, 0, 0);
    for sigma in combinations(atoms.len(), 3) {
        let sigma_mask = sigma.iter().fold(0u64, |m, &i| m | 1 << i);
        let sigma: Vec<Atom> = sigma.iter().map(|&i| atoms[i]).collect();
        let implied = entailed(&masks, sigma_mask, all);
        for (g, &goal) in atoms.iter().enumerate() {
            problems += 1;
            let judgment = derives_dep(&problem(&v, &sigma, goal)).unwrap();
            if judgment.derivable != (implied >> g & 1 == 1) {
                discrepancies += 1;
            }
            if let Some(proof) = &judgment.proof {
                if proof.replay(&sigma).is_err() || proof.conclusion() != &goal {
                    bad_proofs += 1;
                }
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(
        discrepancies == 0 && bad_proofs == 0 && elapsed < Duration::from_secs(60),
        format!("{problems} problems, {discrepancies} discrepancies, {bad_proofs} bad proofs"),
    )
}

/// Exhaustive three-variable independence problems with at most two premises,
/// checked against `masks`, plus the random problems; `counter` supplies the
/// countermodel side.
fn independence_sweep(
    masks: &HashSet<u64>,
    counter: impl Fn(&Problem) -> CounterResult,
    row_bound: bool,
) -> (usize, usize, usize) {
    let limits = Limits::default();
    let v = vocab(3);
    let atoms: Vec<Atom> = atom_universe(AtomKind::Ind, v.all()).unwrap().collect();
    let (mut problems, mut discrepancies, mut witnesses) = (0, 0, 0);
    let mut check = |p: &Problem, oracle: Option<bool>| {
        problems += 1;
        let derivable = derives_indep(p, &limits).unwrap().derivable;
        let ok = match counter(p) {
            CounterResult::Derivable(_) => derivable,
            CounterResult::Witness(w) => {
                witnesses += 1;
                let small = match &w.model {
                    Model::Team(t) => !row_bound || t.len() <= 1 << p.universe().len(),
                    Model::Geometry(_) => true,
                };
                !derivable && small && witness_ok(&w, p)
            }
        };
        if !ok || oracle.is_some_and(|o| o != derivable) {
            discrepancies += 1;
        }
    };
    for sigma in combinations(atoms.len(), 2) {
        let sigma_mask = sigma.iter().fold(0u64, |m, &i| m | 1 << i);
        let sigma: Vec<Atom> = sigma.iter().map(|&i| atoms[i]).collect();
        let implied = entailed(masks, sigma_mask, u64::MAX);
        for (g, &goal) in atoms.iter().enumerate() {
            check(&problem(&v, &sigma, goal), Some(implied >> g & 1 == 1));
        }
    }
    for p in random_ind_problems(11) {
        check(&p, None);
    }
    (problems, discrepancies, witnesses)
}

fn independence_completeness() -> Outcome {
    let start = Instant::now();
    let v = vocab(3);
    let atoms: Vec<Atom> = atom_universe(AtomKind::Ind, v.all()).unwrap().collect();
    let masks: HashSet<u64> = (1..256usize)
        .map(|subset| {
            let rows: Vec<Vec<u32>> = (0..8).filter(|r| subset >> r & 1 == 1).map(|r| bit_row(r, 3)).collect();
            truth_mask(&atoms, |a| team_holds(&rows, a))
        })
        .collect();
    let limits = Limits::default();
    let (problems, discrepancies, witnesses) =
        independence_sweep(&masks, |p| counter_ind_team(p, &limits).unwrap(), true);
    let elapsed = start.elapsed();
    outcome(
        discrepancies == 0 && elapsed < Duration::from_secs(300),
        format!("{problems} problems, {witnesses} team witnesses, {discrepancies} discrepancies"),
    )
}

fn all_assignments(p: u32, dim: usize, vars: usize) -> Vec<Vectors> {
    let size = (p as usize).pow(dim as u32);
    let vector = |mut i: usize| -> Vec<u32> {
        (0..dim)
            .map(|_| {
                let c = (i % p as usize) as u32;
                i /= p as usize;
                c
            })
            .collect()
    };
    (0..size.pow(vars as u32))
        .map(|mut code| {
            let images = (0..vars)
                .map(|_| {
                    let v = vector(code % size);
                    code /= size;
                    v
                })
                .collect();
            Vectors { p, images }
        })
        .collect()
}

fn pregeometry_completeness() -> Outcome {
    let start = Instant::now();
    let v = vocab(3);
    let atoms: Vec<Atom> = atom_universe(AtomKind::Ind, v.all()).unwrap().collect();
    let masks: HashSet<u64> = all_assignments(2, 2, 3)
        .into_iter()
        .chain(all_assignments(3, 2, 3))
        .map(|s| truth_mask(&atoms, |a| s.holds(a)))
        .collect();
    let limits = Limits::default();
    let (ind_problems, ind_discrepancies, ind_witnesses) =
        independence_sweep(&masks, |p| counter_ind_pregeo(p, &limits).unwrap(), false);

    // Absolute independence over four variables: every premise set against
    // both reference semantics, and the constructions for up to three premises.
    let v = vocab(4);
    let atoms: Vec<Atom> = atom_universe(AtomKind::AbsInd, v.all()).unwrap().collect();
    let all = (1u64 << atoms.len()) - 1;
    let team_masks: HashSet<u64> = (1..1usize << 16)
        .map(|subset| {
            let rows: Vec<Vec<u32>> = (0..16).filter(|r| subset >> r & 1 == 1).map(|r| bit_row(r, 4)).collect();
            truth_mask(&atoms, |a| team_holds(&rows, a))
        })
        .collect();
    let geo_masks: HashSet<u64> =
        all_assignments(3, 3, 4).into_iter().map(|s| truth_mask(&atoms, |a| s.holds(a))).collect();
    let (mut abs_problems, mut abs_discrepancies, mut abs_witnesses) = (0, 0, 0);
    for sigma_mask in 0..1u64 << atoms.len() {
        let sigma: Vec<Atom> = (0..atoms.len()).filter(|i| sigma_mask >> i & 1 == 1).map(|i| atoms[i]).collect();
        let by_team = entailed(&team_masks, sigma_mask, all);
        let by_geo = entailed(&geo_masks, sigma_mask, all);
        for (g, &goal) in atoms.iter().enumerate() {
            abs_problems += 1;
            let p = problem(&v, &sigma, goal);
            let derivable = derives_absind(&p).unwrap().derivable;
            let mut ok = derivable == (by_team >> g & 1 == 1) && derivable == (by_geo >> g & 1 == 1);
            if sigma.len() <= 3 {
                for result in [counter_absind_team(&p).unwrap(), counter_absind_pregeo(&p).unwrap()] {
                    ok &= match result {
                        CounterResult::Derivable(_) => derivable,
                        CounterResult::Witness(w) => {
                            abs_witnesses += 1;
                            !derivable && witness_ok(&w, &p)
                        }
                    };
                }
            }
            if !ok {
                abs_discrepancies += 1;
            }
        }
    }
    outcome(
        ind_discrepancies == 0 && abs_discrepancies == 0,
        format!(
            "ind: {ind_problems} problems, {ind_witnesses} witnesses, {ind_discrepancies} discrepancies; \
             abs: {abs_problems} problems, {abs_witnesses} witnesses, {abs_discrepancies} discrepancies; {:.2?}",
            start.elapsed()
        ),
    )
}

fn random_atom(rng: &mut ChaCha8Rng, kind: AtomKind, n: usize) -> Option<Atom> {
    let mut set = || random_set(rng, n);
    match kind {
        AtomKind::Dep => Atom::dep(set(), set()).ok(),
        AtomKind::AbsInd => Some(Atom::abs(set())),
        AtomKind::Ind => Some(Atom::ind(set(), set())),
        AtomKind::CondInd => Some(Atom::cind(set(), set(), set())),
    }
}

fn soundness_sweep() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let limits = Limits::default();
    let mut details = Vec::new();
    let mut violations = 0;
    for kind in AtomKind::ALL {
        let max_vars = if kind == AtomKind::CondInd { 4 } else { 5 };
        let (mut checked, mut with_premises) = (0usize, 0usize);
        for _ in 0..SOUNDNESS_PAIRS {
            let n = rng.gen_range(1..=max_vars);
            let v = vocab(n);
            let rows: Vec<Vec<u32>> = (0..rng.gen_range(1..=12))
                .map(|_| (0..n).map(|_| rng.gen_range(0..3)).collect())
                .collect();
            let wanted = rng.gen_range(0..=3);
            let mut sigma = Vec::new();
            for _ in 0..40 {
                if sigma.len() == wanted {
                    break;
                }
                if let Some(a) = random_atom(&mut rng, kind, n) {
                    if team_holds(&rows, &a) {
                        sigma.push(a);
                    }
                }
            }
            if !sigma.is_empty() {
                with_premises += 1;
            }
            let c = closure(kind, &sigma, v.all(), &limits).unwrap();
            for atom in c.atoms() {
                checked += 1;
                if !team_holds(&rows, &atom) {
                    violations += 1;
                }
            }
        }
        details.push(format!("{kind}: {SOUNDNESS_PAIRS} pairs ({with_premises} with premises), {checked} atoms"));
    }
    outcome(
        violations == 0,
        format!("{}; {violations} violations; {:.2?}", details.join(", "), start.elapsed()),
    )
}

fn axiom_audit() -> Outcome {
    let start = Instant::now();
    let mut parts = Vec::new();
    let mut violations = 0;
    for spec in ["f2:6", "f3:4"] {
        let space = VectorSpace::from_spec(spec).unwrap();
        let report = audit_axioms(&space, 1000, 7);
        let instances: usize = report.checks.iter().map(|c| c.instances).sum();
        violations += report.violations();
        parts.push(format!("{space}: {} checks, {instances} instances", report.checks.len()));
    }
    let elapsed = start.elapsed();
    outcome(
        violations == 0 && elapsed < Duration::from_secs(30),
        format!("{}; {violations} violations", parts.join(", ")),
    )
}

fn witness_certification() -> Outcome {
    let limits = Limits::default();
    let (mut emitted, mut failed, mut size_claims) = (0, 0, 0);
    let mut record = |result: CounterResult, p: &Problem, rows: Option<usize>| {
        if let CounterResult::Witness(w) = result {
            emitted += 1;
            if !witness_ok(&w, p) {
                failed += 1;
            }
            if let (Model::Team(t), Some(expected)) = (&w.model, rows) {
                if t.len() != expected {
                    size_claims += 1;
                }
            }
        }
    };

    let v = vocab(3);
    let deps: Vec<Atom> = atom_universe(AtomKind::Dep, v.all()).unwrap().collect();
    for sigma in combinations(deps.len(), 2) {
        let sigma: Vec<Atom> = sigma.iter().map(|&i| deps[i]).collect();
        for &goal in &deps {
            let p = problem(&v, &sigma, goal);
            record(counter_dep_team(&p).unwrap(), &p, Some(2));
            record(counter_dep_closure(&p).unwrap(), &p, None);
        }
    }
    let inds: Vec<Atom> = atom_universe(AtomKind::Ind, v.all()).unwrap().collect();
    for sigma in combinations(inds.len(), 1) {
        let sigma: Vec<Atom> = sigma.iter().map(|&i| inds[i]).collect();
        for &goal in &inds {
            let p = problem(&v, &sigma, goal);
            record(counter_ind_team(&p, &limits).unwrap(), &p, None);
            record(counter_ind_pregeo(&p, &limits).unwrap(), &p, None);
        }
    }
    let v4 = vocab(4);
    let abss: Vec<Atom> = atom_universe(AtomKind::AbsInd, v4.all()).unwrap().collect();
    for sigma in combinations(abss.len(), 2) {
        let sigma: Vec<Atom> = sigma.iter().map(|&i| abss[i]).collect();
        for &goal in &abss {
            let p = problem(&v4, &sigma, goal);
            let rows = 1 << p.universe().len().saturating_sub(1);
            record(counter_absind_team(&p).unwrap(), &p, Some(rows));
            record(counter_absind_pregeo(&p).unwrap(), &p, None);
        }
    }
    for p in random_ind_problems(23).iter().take(3000) {
        record(counter_ind_team(p, &limits).unwrap(), p, None);
        record(counter_ind_pregeo(p, &limits).unwrap(), p, None);
    }
    outcome(
        emitted > 0 && failed == 0 && size_claims == 0,
        format!("{emitted} witnesses, {failed} failed re-verification, {size_claims} off the stated team size"),
    )
}

fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data")
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// CLI invocations with their golden output file and expected exit status.
const GOLDEN_RUNS: &[(&[&str], &str, i32)] = &[
    (&["entails", "--proof", "@ind_exchange.problem"], "entails_ind_exchange.out", 0),
    (&["entails", "@dep_empty.problem"], "entails_dep_empty.out", 1),
    (&["entails", "--proof", "@cind_symmetry.problem"], "entails_cind_symmetry.out", 0),
    (&["entails", "@cind_open.problem"], "entails_cind_open.out", 1),
    (&["counter", "--semantics", "team", "@dep_empty.problem"], "counter_dep_empty_team.out", 0),
    (&["counter", "--semantics", "team", "@ind_third.problem"], "counter_ind_third_team.out", 0),
    (&["counter", "--semantics", "pregeometry", "@ind_third.problem"], "counter_ind_third_pregeometry.out", 0),
    (&["counter", "--semantics", "team", "@abs_extend.problem"], "counter_abs_extend_team.out", 0),
    (&["counter", "--semantics", "pregeometry", "@abs_extend.problem"], "counter_abs_extend_pregeometry.out", 0),
    (&["counter", "--semantics", "team", "@ind_exchange.problem"], "counter_ind_exchange_team.out", 1),
    (&["check", "@figure1.csv", "@figure1_holds.atoms"], "check_figure1_holds.out", 0),
    (&["check", "@figure1.csv", "@figure1_fails.atoms"], "check_figure1_fails.out", 1),
    (&["check", "@figure2.csv", "@figure2_abs.atoms"], "check_figure2_abs.out", 0),
    (&["mine", "@figure1.csv", "--kind", "dep", "--max-arity", "3"], "mine_figure1_dep.out", 0),
    (&["mine", "@figure1.csv", "--kind", "dep", "--max-arity", "3", "--all"], "mine_figure1_dep_all.out", 0),
    (&["mine", "@figure2.csv", "--kind", "ind", "--max-arity", "2"], "mine_figure2_ind.out", 0),
    (&["audit", "--space", "f2:6", "--samples", "1000", "--seed", "7"], "audit_f2_6.out", 0),
    (&["audit", "--space", "f3:4", "--samples", "300", "--seed", "3"], "audit_f3_4.out", 0),
];

fn run_cli(args: &[&str]) -> (Vec<u8>, i32) {
    let args: Vec<String> = args
        .iter()
        .map(|a| match a.strip_prefix('@') {
            Some(file) => data_dir().join(file).display().to_string(),
            None => a.to_string(),
        })
        .collect();
    let out = Command::new(env!("CARGO_BIN_EXE_idcalc"))
        .args(&args)
        .env_remove("IDCALC_MAX_VARS")
        .output()
        .expect("run idcalc");
    (out.stdout, out.status.code().unwrap_or(-1))
}

fn determinism_and_round_trip() -> Outcome {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut failures = Vec::new();
    for (args, golden, code) in GOLDEN_RUNS {
        let (first, first_code) = run_cli(args);
        let (second, _) = run_cli(args);
        let path = golden_dir().join(golden);
        if update {
            std::fs::write(&path, &first).unwrap();
        }
        let expected = std::fs::read(&path).unwrap_or_default();
        if first != second || first != expected || first_code != *code {
            failures.push(*golden);
        }
    }

    let mut printed = String::new();
    let mut round_trips = 0;
    let mut files: Vec<PathBuf> = std::fs::read_dir(data_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "problem") && !p.ends_with("malformed.problem"))
        .collect();
    files.sort();
    for file in &files {
        let p = parse_problem(&std::fs::read_to_string(file).unwrap()).unwrap();
        let text = print_problem(&p);
        let again = parse_problem(&text).unwrap();
        if again != p || print_problem(&again) != text {
            failures.push("problem round trip");
        }
        round_trips += 1;
        printed.push_str(&format!("# {}\n{text}", file.file_name().unwrap().to_string_lossy()));
    }
    let path = golden_dir().join("problems.txt");
    if update {
        std::fs::write(&path, &printed).unwrap();
    }
    if std::fs::read_to_string(&path).unwrap_or_default() != printed {
        failures.push("problems.txt");
    }
    outcome(
        failures.is_empty(),
        format!(
            "{} CLI runs twice each, {round_trips} problem round trips, mismatches: {}",
            GOLDEN_RUNS.len(),
            if failures.is_empty() { "none".to_string() } else { failures.join(", ") }
        ),
    )
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("figure fidelity", figure_fidelity),
        ("dependence completeness", dependence_completeness),
        ("independence completeness", independence_completeness),
        ("pregeometry completeness", pregeometry_completeness),
        ("soundness sweep", soundness_sweep),
        ("pregeometry axiom audit", axiom_audit),
        ("witness certification", witness_certification),
        ("determinism and round trip", determinism_and_round_trip),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(run).unwrap_or_else(|e| {
            let message = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            outcome(false, format!("panicked: {message}"))
        });
        if !result.passed {
            failed += 1;
        }
        println!(
            "criterion {} {name}: {} ({}; {:.2?})",
            i + 1,
            if result.passed { "PASS" } else { "FAIL" },
            result.detail,
            start.elapsed()
        );
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
