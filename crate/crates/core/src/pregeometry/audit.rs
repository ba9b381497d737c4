//! Randomised check that span in GF(p)^k behaves as a pregeometry with the
//! expected independence calculus.

use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::space::{dim_over_unchecked, indep_rel_unchecked, is_independent_set_unchecked, Echelon, Vector, VectorSpace};

/// Spaces up to this many elements are probed exhaustively when comparing
/// closures; larger ones by random vectors.
const EXHAUSTIVE_PROBE_LIMIT: u64 = 4096;
const RANDOM_PROBES: usize = 256;

const CHECKS: [&str; 18] = [
    "closure extensive",
    "closure monotone",
    "closure idempotent",
    "exchange principle",
    "finite character of closure",
    "existence",
    "monotonicity",
    "transitivity",
    "finite character",
    "symmetry",
    "exchange",
    "anti-reflexivity",
    "basis cardinality",
    "rank identity",
    "tuple reading",
    "independent sequences",
    "nonempty closure of the empty set",
    "proper dependence witness",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    /// Instances whose premises held, so the conclusion was tested.
    pub instances: usize,
    pub violations: usize,
    pub first_violation: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditReport {
    pub space: String,
    pub samples: usize,
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl AuditReport {
    pub fn violations(&self) -> usize {
        self.checks.iter().map(|c| c.violations).sum()
    }

    pub fn passed(&self) -> bool {
        self.violations() == 0
    }

    pub fn render(&self) -> String {
        let mut out = format!("space {}  samples {}  seed {}\n", self.space, self.samples, self.seed);
        let width = CHECKS.iter().map(|c| c.len()).max().unwrap_or(0);
        for c in &self.checks {
            let _ = write!(out, "{:<width$}  {:>6} checked  {} violations", c.name, c.instances, c.violations);
            if let Some(w) = &c.first_violation {
                let _ = write!(out, "  first: {w}");
            }
            out.push('\n');
        }
        let _ = writeln!(out, "total violations: {}", self.violations());
        out
    }
}

fn show(vs: &[Vector]) -> String {
    let items: Vec<String> = vs.iter().map(|v| show_vec(v)).collect();
    format!("{{{}}}", items.join(", "))
}

fn show_vec(v: &[u8]) -> String {
    let coords: Vec<String> = v.iter().map(|c| c.to_string()).collect();
    format!("({})", coords.join(" "))
}

fn union(a: &[Vector], b: &[Vector]) -> Vec<Vector> {
    a.iter().chain(b).cloned().collect()
}

fn subsets(a: &[Vector]) -> impl Iterator<Item = Vec<Vector>> + '_ {
    (0u32..1 << a.len()).map(move |mask| {
        a.iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, v)| v.clone())
            .collect()
    })
}

struct Sampler<'a> {
    space: &'a VectorSpace,
    rng: ChaCha8Rng,
    /// A few fixed vectors that random sets reuse, so that dependencies
    /// between sets come up often.
    pool: Vec<Vector>,
}

impl<'a> Sampler<'a> {
    fn new(space: &'a VectorSpace, seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        let mut s = Sampler {
            space,
            rng,
            pool: Vec::new(),
        };
        s.pool = (0..3).map(|_| s.uniform()).collect();
        s
    }

    fn uniform(&mut self) -> Vector {
        let p = self.space.prime() as u8;
        (0..self.space.dim()).map(|_| self.rng.gen_range(0..p)).collect()
    }

    fn combination(&mut self, of: &[Vector]) -> Vector {
        let p = self.space.prime() as u8;
        let mut v = self.space.zero();
        for g in of {
            let c = self.rng.gen_range(0..p);
            v = self.space.add(&v, &self.space.scale(c, g));
        }
        v
    }

    fn vector(&mut self) -> Vector {
        if self.rng.gen_bool(0.5) {
            let pool = self.pool.clone();
            self.combination(&pool)
        } else {
            self.uniform()
        }
    }

    fn set(&mut self) -> Vec<Vector> {
        let n = self.rng.gen_range(0..=3);
        (0..n).map(|_| self.vector()).collect()
    }

    fn nonzero_scalar(&mut self) -> u8 {
        self.rng.gen_range(1..self.space.prime() as u8)
    }

    fn probes(&mut self) -> (Vec<Vector>, bool) {
        match self.space.size() {
            Some(n) if n <= EXHAUSTIVE_PROBE_LIMIT => ((0..n).map(|i| self.space.nth(i)).collect(), true),
            _ => ((0..RANDOM_PROBES).map(|_| self.uniform()).collect(), false),
        }
    }

    /// A set independent over `over`, of up to four elements.
    fn independent_over(&mut self, over: &[Vector]) -> Vec<Vector> {
        let mut e = Echelon::spanning(self.space, over);
        let mut out = Vec::new();
        for _ in 0..8 {
            let v = self.uniform();
            if out.len() < 4 && e.insert(&v) {
                out.push(v);
            }
        }
        out
    }
}

struct Recorder {
    checks: Vec<Check>,
}

impl Recorder {
    fn record(&mut self, name: &'static str, holds: bool, witness: impl FnOnce() -> String) {
        let c = self
            .checks
            .iter_mut()
            .find(|c| c.name == name)
            .expect("known check");
        c.instances += 1;
        if !holds {
            c.violations += 1;
            if c.first_violation.is_none() {
                c.first_violation = Some(witness());
            }
        }
    }
}

/// Runs every check on `samples` random instances. The outcome depends only on
/// the space, the sample count and the seed; sample `i` draws from its own
/// stream of the seeded generator.
pub fn audit_axioms(space: &VectorSpace, samples: usize, seed: u64) -> AuditReport {
    let mut rec = Recorder {
        checks: CHECKS
            .iter()
            .map(|&name| Check {
                name,
                instances: 0,
                violations: 0,
                first_violation: None,
            })
            .collect(),
    };
    for i in 0..samples {
        let mut s = Sampler::new(space, seed, i as u64);
        sample(space, &mut s, &mut rec);
    }
    AuditReport {
        space: space.to_string(),
        samples,
        seed,
        checks: rec.checks,
    }
}

fn sample(space: &VectorSpace, s: &mut Sampler, rec: &mut Recorder) {
    let ind = |a: &[Vector], base: &[Vector], b: &[Vector]| indep_rel_unchecked(space, a, base, b);
    let (a, b, c, d, e) = (s.set(), s.set(), s.set(), s.set(), s.set());
    let span_a = Echelon::spanning(space, &a);

    // Closure operator.
    rec.record("closure extensive", a.iter().all(|v| span_a.contains(v)), || show(&a));
    let (probes, exhaustive) = s.probes();
    let cl_a: Vec<Vector> = probes.iter().filter(|v| span_a.contains(v)).cloned().collect();
    let ab = union(&a, &b);
    let span_ab = Echelon::spanning(space, &ab);
    rec.record("closure monotone", cl_a.iter().all(|v| span_ab.contains(v)), || {
        format!("A={} B={}", show(&a), show(&ab))
    });
    let span_cl_a = Echelon::spanning(space, &cl_a);
    let idempotent = probes.iter().all(|v| {
        let inner = span_a.contains(v);
        let outer = span_cl_a.contains(v);
        if exhaustive {
            inner == outer
        } else {
            !outer || inner
        }
    });
    rec.record("closure idempotent", idempotent, || show(&a));

    // Exchange principle, on a constructed instance and a random one.
    let pb = s.vector();
    let w = s.combination(&a);
    let k = s.nonzero_scalar();
    let constructed = space.add(&space.scale(k, &pb), &w);
    let random = s.vector();
    for pa in [constructed, random] {
        let with_b = Echelon::spanning(space, a.iter().chain([&pb]));
        if with_b.contains(&pa) && !span_a.contains(&pa) {
            let with_a = Echelon::spanning(space, a.iter().chain([&pa]));
            rec.record("exchange principle", with_a.contains(&pb), || {
                format!("a={} b={} A={}", show_vec(&pa), show_vec(&pb), show(&a))
            });
        }
    }

    // Finite character of closure: a member of cl(A) is in the closure of a
    // basis of A.
    let member = s.combination(&a);
    let mut greedy = Echelon::new(space);
    let a0: Vec<Vector> = a.iter().filter(|v| greedy.insert(v)).cloned().collect();
    rec.record(
        "finite character of closure",
        Echelon::spanning(space, &a0).contains(&member) && a0.len() <= a.len(),
        || format!("v={} A={}", show_vec(&member), show(&a)),
    );

    // Properties of the independence relation; `ind(x, base, y)` reads
    // "x independent of y over base".
    rec.record("existence", ind(&a, &a, &b), || format!("A={} B={}", show(&a), show(&b)));

    if ind(&a, &c, &b) {
        let sub: Vec<Vector> = b.iter().filter(|_| s.rng.gen_bool(0.5)).cloned().collect();
        rec.record("monotonicity", ind(&a, &c, &sub), || {
            format!("A={} C={} B={} D={}", show(&a), show(&c), show(&b), show(&sub))
        });
    }

    let bd = union(&b, &d);
    let cb = union(&c, &b);
    rec.record(
        "transitivity",
        ind(&a, &c, &bd) == (ind(&a, &c, &b) && ind(&a, &cb, &d)),
        || format!("A={} C={} B={} D={}", show(&a), show(&c), show(&b), show(&d)),
    );

    rec.record(
        "finite character",
        ind(&a, &c, &b) == subsets(&b).all(|b0| ind(&a, &c, &b0)),
        || format!("A={} C={} B={}", show(&a), show(&c), show(&b)),
    );

    if ind(&a, &c, &b) {
        rec.record("symmetry", ind(&b, &c, &a), || {
            format!("A={} C={} B={}", show(&a), show(&c), show(&b))
        });
    }

    let bc = union(&b, &c);
    if ind(&a, &d, &b) && ind(&ab, &d, &c) {
        rec.record("exchange", ind(&a, &d, &bc), || {
            format!("A={} D={} B={} C={}", show(&a), show(&d), show(&b), show(&c))
        });
    }

    let inside: Vec<Vector> = (0..a.len().max(1)).map(|_| s.combination(&b)).collect();
    for x in [&a, &inside] {
        if ind(x, &b, x) {
            rec.record("anti-reflexivity", ind(x, &b, &e), || {
                format!("A={} B={} E={}", show(x), show(&b), show(&e))
            });
        }
    }

    // Two maximal independent subsets found from different orders have the
    // same size.
    let mut first = ab.clone();
    let mut second = ab.clone();
    first.shuffle(&mut s.rng);
    second.shuffle(&mut s.rng);
    let maximal = |order: &[Vector]| {
        let mut chosen: Vec<Vector> = Vec::new();
        for v in order {
            let mut candidate = chosen.clone();
            candidate.push(v.clone());
            if !chosen.contains(v) && is_independent_set_unchecked(space, &candidate, &[]) {
                chosen = candidate;
            }
        }
        chosen
    };
    let (m1, m2) = (maximal(&first), maximal(&second));
    rec.record("basis cardinality", m1.len() == m2.len(), || {
        format!("{} vs {}", show(&m1), show(&m2))
    });

    let rank = |x: &[Vector]| Echelon::spanning(space, x).rank();
    rec.record(
        "rank identity",
        dim_over_unchecked(space, &a, &c) == rank(&union(&a, &c)) - rank(&c),
        || format!("A={} C={}", show(&a), show(&c)),
    );

    rec.record(
        "tuple reading",
        ind(&a, &b, &c) == subsets(&a).all(|a0| ind(&a0, &b, &c)),
        || format!("A={} B={} C={}", show(&a), show(&b), show(&c)),
    );

    let basis = s.independent_over(&c);
    let (mut left, mut right) = (Vec::new(), Vec::new());
    for v in basis {
        match s.rng.gen_range(0..3) {
            0 => left.push(v),
            1 => right.push(v),
            _ => {}
        }
    }
    rec.record("independent sequences", ind(&left, &c, &right), || {
        format!("A={} B={} C={}", show(&left), show(&right), show(&c))
    });

    let empty = Echelon::new(space);
    rec.record(
        "nonempty closure of the empty set",
        empty.contains(&space.zero()) && probes.iter().all(|v| !empty.contains(v) || *v == space.zero()),
        String::new,
    );

    let d0 = s.independent_over(&[]);
    let witness = space.sum(&d0);
    let in_span = Echelon::spanning(space, &d0).contains(&witness);
    let proper_ok = subsets(&d0)
        .filter(|sub| sub.len() < d0.len())
        .all(|sub| !Echelon::spanning(space, &sub).contains(&witness));
    rec.record("proper dependence witness", in_span && proper_ok, || show(&d0));
}
