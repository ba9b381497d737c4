//! Shared machinery for worklist saturation: atoms are packed into integer
//! keys over a compressed universe, so membership is a bit test.

use std::collections::{HashMap, VecDeque};

use super::proof::{Proof, ProofBuilder};
use super::rules::Rule;
use crate::atom::{Atom, AtomKind};
use crate::vars::{Compressor, VarSet};

pub(crate) struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(bits: u64) -> Self {
        BitSet {
            words: vec![0; bits.div_ceil(64) as usize],
        }
    }

    pub fn get(&self, i: u64) -> bool {
        self.words[(i >> 6) as usize] & (1 << (i & 63)) != 0
    }

    /// Sets bit `i`; returns whether it was clear.
    pub fn set(&mut self, i: u64) -> bool {
        let w = &mut self.words[(i >> 6) as usize];
        let fresh = *w & (1 << (i & 63)) == 0;
        *w |= 1 << (i & 63);
        fresh
    }
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct Step {
    pub rule: Rule,
    pub premises: [u64; 2],
    pub arity: u8,
}

/// Packs atoms of one kind over a fixed universe into keys
/// `c0 | c1 << n | c2 << 2n` of compressed components.
#[derive(Clone, Debug)]
pub(crate) struct Codec {
    pub kind: AtomKind,
    pub compressor: Compressor,
    pub width: u32,
}

impl Codec {
    pub fn new(kind: AtomKind, universe: VarSet) -> Self {
        let compressor = Compressor::new(universe);
        let width = compressor.width();
        Codec {
            kind,
            compressor,
            width,
        }
    }

    pub fn key_bits(&self) -> u32 {
        self.width * self.kind.arity() as u32
    }

    pub fn mask(&self) -> u32 {
        ((1u64 << self.width) - 1) as u32
    }

    pub fn encode(&self, atom: &Atom) -> Option<u64> {
        if atom.kind() != self.kind {
            return None;
        }
        let mut key = 0u64;
        for (i, set) in atom.components().into_iter().enumerate() {
            key |= (self.compressor.compress(set)? as u64) << (i as u32 * self.width);
        }
        Some(key)
    }

    pub fn decode(&self, key: u64) -> Atom {
        let part = |i: u32| self.compressor.expand(((key >> (i * self.width)) as u32) & self.mask());
        match self.kind {
            AtomKind::Dep => Atom::Dep {
                lhs: part(0),
                rhs: part(1),
            },
            AtomKind::AbsInd => Atom::AbsInd(part(0)),
            AtomKind::Ind => Atom::Ind {
                lhs: part(0),
                rhs: part(1),
            },
            AtomKind::CondInd => Atom::CondInd {
                lhs: part(0),
                cond: part(1),
                rhs: part(2),
            },
        }
    }
}

/// Worklist state. An atom is `present` once derived and `processed` once
/// every rule instance using it with processed partners has fired.
pub(crate) struct Core {
    pub present: BitSet,
    pub processed: BitSet,
    queue: VecDeque<u64>,
    order: Vec<u64>,
    steps: HashMap<u64, Step>,
}

impl Core {
    pub fn new(key_bits: u32) -> Self {
        Core {
            present: BitSet::new(1 << key_bits),
            processed: BitSet::new(1 << key_bits),
            queue: VecDeque::new(),
            order: Vec::new(),
            steps: HashMap::new(),
        }
    }

    /// Records `key` with its first derivation.
    pub fn add(&mut self, key: u64, rule: Rule, premises: &[u64]) {
        if self.present.set(key) {
            let mut p = [0; 2];
            p[..premises.len()].copy_from_slice(premises);
            self.steps.insert(
                key,
                Step {
                    rule,
                    premises: p,
                    arity: premises.len() as u8,
                },
            );
            self.order.push(key);
            self.queue.push_back(key);
        }
    }

    /// Next atom to process, marked processed.
    pub fn next(&mut self) -> Option<u64> {
        let key = self.queue.pop_front()?;
        self.processed.set(key);
        Some(key)
    }

    pub fn into_closure(self, codec: Codec) -> Closure {
        Closure {
            codec,
            present: self.present,
            order: self.order,
            steps: self.steps,
        }
    }
}

/// The atoms derivable from a premise set over a finite universe, with the
/// first derivation found for each.
pub struct Closure {
    codec: Codec,
    present: BitSet,
    order: Vec<u64>,
    steps: HashMap<u64, Step>,
}

impl Closure {
    pub fn kind(&self) -> AtomKind {
        self.codec.kind
    }

    pub fn universe(&self) -> VarSet {
        self.codec.compressor.universe()
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// False for atoms of another kind or outside the universe.
    pub fn contains(&self, atom: &Atom) -> bool {
        self.codec.encode(atom).is_some_and(|k| self.present.get(k))
    }

    /// Derived atoms in derivation order.
    pub fn atoms(&self) -> impl Iterator<Item = Atom> + '_ {
        self.order.iter().map(|&k| self.codec.decode(k))
    }

    /// The rule and premises of the first derivation of `atom`.
    pub fn step(&self, atom: &Atom) -> Option<(Rule, Vec<Atom>)> {
        let key = self.codec.encode(atom)?;
        let step = self.steps.get(&key)?;
        let premises = step.premises[..step.arity as usize]
            .iter()
            .map(|&k| self.codec.decode(k))
            .collect();
        Some((step.rule, premises))
    }

    pub fn proof(&self, atom: &Atom) -> Option<Proof> {
        let key = self.codec.encode(atom)?;
        if !self.present.get(key) {
            return None;
        }
        let mut builder = ProofBuilder::new();
        // Iterative post-order; provenance is acyclic because premises are
        // always derived before their conclusions.
        let mut stack = vec![(key, false)];
        while let Some((k, expanded)) = stack.pop() {
            let atom = self.codec.decode(k);
            if builder.find(&atom).is_some() {
                continue;
            }
            let step = self.steps[&k];
            let premises = &step.premises[..step.arity as usize];
            if expanded {
                let idx = premises
                    .iter()
                    .map(|&p| builder.find(&self.codec.decode(p)).expect("premise emitted first"))
                    .collect();
                builder.push(atom, step.rule, idx);
            } else {
                stack.push((k, true));
                for &p in premises.iter().rev() {
                    stack.push((p, false));
                }
            }
        }
        let root = builder.find(atom).expect("goal emitted");
        Some(builder.finish(root))
    }
}
