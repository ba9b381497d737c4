//! Teams (finite sets of assignments) and their satisfaction relation.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::vars::{VarId, VarSet, Vocab};

pub mod literal;
mod mine;
mod report;
mod sat;

pub use mine::{mine, mine_with, MineMode, MINE_CANDIDATE_CAP};
pub use report::{satisfies_all, AtomReport, SatReport};
pub use sat::{evaluate, sat_absind, sat_condind, sat_dep, sat_ind, satisfies, Verdict, Witness};

/// A duplicate-free set of rows over a fixed domain of variables.
///
/// Cell values are opaque strings; they are interned into one pool per team
/// so equality of ids is equality of strings, across columns as well.
#[derive(Clone, Debug)]
pub struct Team {
    vocab: Vocab,
    columns: Vec<VarId>,
    position: Vec<Option<usize>>,
    pool: Vec<String>,
    rows: Vec<Vec<u32>>,
}

impl Team {
    /// A team whose domain is every variable of `vocab`, with cells given in
    /// vocabulary order.
    pub fn new(vocab: Vocab, rows: Vec<Vec<String>>) -> Result<Team> {
        let domain = vocab.all();
        Team::with_domain(vocab, domain, rows)
    }

    /// A team over `domain` (a subset of the vocabulary); each row lists the
    /// domain's values in increasing id order. Repeated rows collapse, keeping
    /// the first occurrence's position.
    pub fn with_domain(vocab: Vocab, domain: VarSet, rows: Vec<Vec<String>>) -> Result<Team> {
        if !domain.is_subset(vocab.all()) {
            return Err(Error::OutsideDomain);
        }
        let columns: Vec<VarId> = domain.iter().collect();
        let mut position = vec![None; vocab.len()];
        for (i, v) in columns.iter().enumerate() {
            position[v.index()] = Some(i);
        }
        let mut team = Team {
            vocab,
            columns,
            position,
            pool: Vec::new(),
            rows: Vec::new(),
        };
        let mut intern: HashMap<String, u32> = HashMap::new();
        let mut seen: std::collections::HashSet<Vec<u32>> = Default::default();
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != team.columns.len() {
                return Err(Error::RaggedRow {
                    row: i + 1,
                    expected: team.columns.len(),
                    found: row.len(),
                });
            }
            let ids: Vec<u32> = row
                .into_iter()
                .map(|cell| {
                    if let Some(&id) = intern.get(&cell) {
                        id
                    } else {
                        let id = team.pool.len() as u32;
                        team.pool.push(cell.clone());
                        intern.insert(cell, id);
                        id
                    }
                })
                .collect();
            if seen.insert(ids.clone()) {
                team.rows.push(ids);
            }
        }
        Ok(team)
    }

    pub fn vocab(&self) -> &Vocab {
        &self.vocab
    }

    pub fn columns(&self) -> &[VarId] {
        &self.columns
    }

    pub fn domain(&self) -> VarSet {
        self.columns.iter().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Interned value of `var` in `row`.
    ///
    /// Panics if `var` is outside the domain.
    pub fn value(&self, row: usize, var: VarId) -> u32 {
        let col = self.position[var.index()].expect("variable outside team domain");
        self.rows[row][col]
    }

    pub fn value_str(&self, row: usize, var: VarId) -> &str {
        &self.pool[self.value(row, var) as usize]
    }

    pub fn row_strings(&self, row: usize) -> Vec<&str> {
        self.rows[row].iter().map(|&id| self.pool[id as usize].as_str()).collect()
    }

    /// Restriction of `row` to `vars`, in id order.
    pub fn project(&self, row: usize, vars: VarSet) -> Vec<u32> {
        vars.iter().map(|v| self.value(row, v)).collect()
    }

    pub(crate) fn check_vars(&self, vars: VarSet) -> Result<()> {
        if vars.is_subset(self.domain()) {
            Ok(())
        } else {
            Err(Error::OutsideDomain)
        }
    }

    /// Same cells under a vocabulary renamed by `rename` (old name to new name).
    pub fn renamed(&self, rename: impl Fn(&str) -> String) -> Result<Team> {
        let vocab = Vocab::from_names(self.vocab.ids().map(|v| rename(self.vocab.name(v))))?;
        let rows = (0..self.len())
            .map(|r| self.row_strings(r).into_iter().map(str::to_string).collect())
            .collect();
        Team::with_domain(vocab, self.domain(), rows)
    }
}
