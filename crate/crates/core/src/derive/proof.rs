use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use super::rules::Rule;
use crate::atom::Atom;
use crate::error::{Error, Result};
use crate::vars::Vocab;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofStep {
    pub conclusion: Atom,
    pub rule: Rule,
    /// Indices of earlier steps, in the rule's premise order.
    pub premises: Vec<usize>,
}

/// A derivation as a list of steps in which every premise precedes its use.
/// The last step concludes the derived atom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Proof {
    steps: Vec<ProofStep>,
}

impl Proof {
    pub fn steps(&self) -> &[ProofStep] {
        &self.steps
    }

    pub fn conclusion(&self) -> &Atom {
        &self.steps.last().expect("proofs are nonempty").conclusion
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Hypotheses used by the proof.
    pub fn hypotheses(&self) -> Vec<Atom> {
        self.steps
            .iter()
            .filter(|s| s.rule == Rule::Hypothesis)
            .map(|s| s.conclusion)
            .collect()
    }

    /// Re-checks every step against the rule it cites, treating `sigma` as the
    /// only admissible hypotheses.
    pub fn replay(&self, sigma: &[Atom]) -> Result<()> {
        if self.steps.is_empty() {
            return Err(Error::Verification("empty proof".into()));
        }
        for (i, step) in self.steps.iter().enumerate() {
            let fail = |why: &str| Err(Error::Verification(format!("step {}: {why}", i + 1)));
            if step.premises.iter().any(|&p| p >= i) {
                return fail("premise does not precede its use");
            }
            if let Atom::Dep { lhs, rhs } = step.conclusion {
                if Atom::dep(lhs, rhs).is_err() {
                    return fail("malformed dependence atom");
                }
            }
            if step.rule == Rule::Hypothesis {
                if !step.premises.is_empty() || !sigma.contains(&step.conclusion) {
                    return fail("hypothesis not among the premises");
                }
                continue;
            }
            if step.rule.kind() != Some(step.conclusion.kind()) {
                return fail("rule from another system");
            }
            let premises: Vec<Atom> = step.premises.iter().map(|&p| self.steps[p].conclusion).collect();
            if !step.rule.admits(&premises, &step.conclusion) {
                return fail(&format!("not an instance of {}", step.rule));
            }
        }
        Ok(())
    }

    /// Indented tree, conclusion first. A subtree that already appeared is
    /// printed once and referred back to afterwards.
    pub fn render(&self, vocab: &Vocab) -> String {
        let mut out = String::new();
        let mut shown = HashSet::new();
        self.render_step(self.steps.len() - 1, 0, vocab, &mut shown, &mut out);
        out
    }

    fn render_step(&self, i: usize, depth: usize, vocab: &Vocab, shown: &mut HashSet<usize>, out: &mut String) {
        let step = &self.steps[i];
        let _ = write!(out, "{:indent$}{}  [{}", "", step.conclusion.display(vocab), step.rule, indent = depth * 2);
        if !step.premises.is_empty() && !shown.insert(i) {
            out.push_str(", see above]\n");
            return;
        }
        out.push_str("]\n");
        for &p in &step.premises {
            self.render_step(p, depth + 1, vocab, shown, out);
        }
    }
}

/// Accumulates steps, sharing repeated conclusions.
#[derive(Default)]
pub(crate) struct ProofBuilder {
    steps: Vec<ProofStep>,
    index: HashMap<Atom, usize>,
}

impl ProofBuilder {
    pub fn new() -> Self {
        ProofBuilder::default()
    }

    pub fn push(&mut self, conclusion: Atom, rule: Rule, premises: Vec<usize>) -> usize {
        if let Some(&i) = self.index.get(&conclusion) {
            return i;
        }
        let i = self.steps.len();
        self.steps.push(ProofStep {
            conclusion,
            rule,
            premises,
        });
        self.index.insert(conclusion, i);
        i
    }

    pub fn find(&self, atom: &Atom) -> Option<usize> {
        self.index.get(atom).copied()
    }

    /// The proof of step `root`, keeping only the steps it depends on.
    pub fn finish(self, root: usize) -> Proof {
        let mut keep = vec![false; self.steps.len()];
        keep[root] = true;
        for i in (0..=root).rev() {
            if keep[i] {
                for &p in &self.steps[i].premises {
                    keep[p] = true;
                }
            }
        }
        let mut renumber = vec![usize::MAX; self.steps.len()];
        let mut steps = Vec::new();
        for (i, step) in self.steps.into_iter().enumerate().take(root + 1) {
            if keep[i] {
                renumber[i] = steps.len();
                steps.push(ProofStep {
                    premises: step.premises.iter().map(|&p| renumber[p]).collect(),
                    ..step
                });
            }
        }
        Proof { steps }
    }
}
