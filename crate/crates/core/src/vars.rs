//! Variable interning and bitset-backed variable sets.

use std::collections::HashMap;
use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use crate::error::Error;

/// Upper bound on the number of distinct variables one [`Vocab`] can hold.
pub const MAX_VARIABLES: usize = 64;

/// Dense index of an interned variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarId(u8);

impl VarId {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn from_index(index: usize) -> Self {
        assert!(index < MAX_VARIABLES, "variable index {index} out of range");
        VarId(index as u8)
    }
}

/// Name table mapping identifiers to contiguous [`VarId`]s.
///
/// Interning is the only mutation; once a problem or team is loaded the
/// vocabulary is read-only and can be shared freely.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Vocab {
    names: Vec<String>,
    index: HashMap<String, VarId>,
}

impl Vocab {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a vocabulary from names in order; duplicates are an error.
    pub fn from_names<I, S>(names: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut vocab = Vocab::new();
        for name in names {
            let name = name.as_ref();
            if vocab.lookup(name).is_some() {
                return Err(Error::DuplicateVariable(name.to_string()));
            }
            vocab.intern(name)?;
        }
        Ok(vocab)
    }

    pub fn intern(&mut self, name: &str) -> Result<VarId, Error> {
        if let Some(&id) = self.index.get(name) {
            return Ok(id);
        }
        if !is_identifier(name) {
            return Err(Error::InvalidVariableName(name.to_string()));
        }
        if self.names.len() >= MAX_VARIABLES {
            return Err(Error::TooManyVariables(MAX_VARIABLES));
        }
        let id = VarId(self.names.len() as u8);
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), id);
        Ok(id)
    }

    pub fn lookup(&self, name: &str) -> Option<VarId> {
        self.index.get(name).copied()
    }

    pub fn name(&self, id: VarId) -> &str {
        &self.names[id.index()]
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Every interned variable.
    pub fn all(&self) -> VarSet {
        VarSet::first_n(self.names.len())
    }

    pub fn ids(&self) -> impl Iterator<Item = VarId> + '_ {
        (0..self.names.len()).map(VarId::from_index)
    }

    /// Space-separated names of the members of `set`, in id order.
    pub fn render(&self, set: VarSet) -> String {
        let names: Vec<&str> = set.iter().map(|v| self.name(v)).collect();
        names.join(" ")
    }
}

/// `[A-Za-z_][A-Za-z0-9_]*`
pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A finite set of variables, stored as a bitmask over [`VarId`]s.
///
/// Order and multiplicity of construction are forgotten, so any spelling of
/// the same set yields the same value.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarSet(u64);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VarSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(v: VarId) -> Self {
        VarSet(1 << v.0)
    }

    /// The set `{0, .., n-1}` of ids.
    pub fn first_n(n: usize) -> Self {
        if n >= 64 {
            VarSet(u64::MAX)
        } else {
            VarSet((1u64 << n) - 1)
        }
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: VarId) -> bool {
        self.0 & (1 << v.0) != 0
    }

    pub fn insert(&mut self, v: VarId) {
        self.0 |= 1 << v.0;
    }

    pub fn remove(&mut self, v: VarId) {
        self.0 &= !(1 << v.0);
    }

    pub fn with(self, v: VarId) -> Self {
        VarSet(self.0 | (1 << v.0))
    }

    pub fn without(self, v: VarId) -> Self {
        VarSet(self.0 & !(1 << v.0))
    }

    pub fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: VarSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<VarId> {
        if self.0 == 0 {
            None
        } else {
            Some(VarId(self.0.trailing_zeros() as u8))
        }
    }

    /// Members in increasing id order.
    pub fn iter(self) -> VarSetIter {
        VarSetIter(self.0)
    }

    /// Every subset of `self`, starting from the empty set.
    pub fn subsets(self) -> Subsets {
        Subsets {
            full: self.0,
            next: Some(0),
        }
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|v| v.0)).finish()
    }
}

impl FromIterator<VarId> for VarSet {
    fn from_iter<T: IntoIterator<Item = VarId>>(iter: T) -> Self {
        let mut set = VarSet::EMPTY;
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl BitOr for VarSet {
    type Output = VarSet;
    fn bitor(self, rhs: VarSet) -> VarSet {
        VarSet(self.0 | rhs.0)
    }
}

impl BitAnd for VarSet {
    type Output = VarSet;
    fn bitand(self, rhs: VarSet) -> VarSet {
        VarSet(self.0 & rhs.0)
    }
}

impl Sub for VarSet {
    type Output = VarSet;
    fn sub(self, rhs: VarSet) -> VarSet {
        VarSet(self.0 & !rhs.0)
    }
}

impl IntoIterator for VarSet {
    type Item = VarId;
    type IntoIter = VarSetIter;
    fn into_iter(self) -> VarSetIter {
        self.iter()
    }
}

pub struct VarSetIter(u64);

impl Iterator for VarSetIter {
    type Item = VarId;

    fn next(&mut self) -> Option<VarId> {
        if self.0 == 0 {
            return None;
        }
        let bit = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(VarId(bit as u8))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VarSetIter {}

/// Submask enumeration in increasing numeric order.
pub struct Subsets {
    full: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = VarSet;

    fn next(&mut self) -> Option<VarSet> {
        let cur = self.next?;
        self.next = if cur == self.full {
            None
        } else {
            Some((cur.wrapping_sub(self.full)) & self.full)
        };
        Some(VarSet(cur))
    }
}

/// Maps a universe onto dense positions `0..n` so per-universe tables can be
/// indexed by small masks.
#[derive(Clone, Debug)]
pub(crate) struct Compressor {
    members: Vec<VarId>,
    universe: VarSet,
}

impl Compressor {
    pub fn new(universe: VarSet) -> Self {
        Compressor {
            members: universe.iter().collect(),
            universe,
        }
    }

    pub fn width(&self) -> u32 {
        self.members.len() as u32
    }

    pub fn universe(&self) -> VarSet {
        self.universe
    }

    /// `None` when `set` leaves the universe.
    pub fn compress(&self, set: VarSet) -> Option<u32> {
        if !set.is_subset(self.universe) {
            return None;
        }
        let mut out = 0u32;
        for (i, v) in self.members.iter().enumerate() {
            if set.contains(*v) {
                out |= 1 << i;
            }
        }
        Some(out)
    }

    pub fn expand(&self, local: u32) -> VarSet {
        let mut set = VarSet::EMPTY;
        let mut bits = local;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            set.insert(self.members[i]);
        }
        set
    }
}
