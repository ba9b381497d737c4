use std::fmt::Write as _;

use super::{evaluate, Team, Verdict};
use crate::atom::Atom;
use crate::error::Result;

#[derive(Clone, Debug)]
pub struct AtomReport {
    pub atom: Atom,
    pub verdict: Verdict,
}

/// Per-atom verdicts for a set of atoms in one team.
#[derive(Clone, Debug)]
pub struct SatReport {
    pub entries: Vec<AtomReport>,
}

impl SatReport {
    pub fn all_hold(&self) -> bool {
        self.entries.iter().all(|e| e.verdict.holds)
    }

    pub fn first_failure(&self) -> Option<&AtomReport> {
        self.entries.iter().find(|e| !e.verdict.holds)
    }

    /// One record per atom: `<atom>\t<true|false>\t<witness|->`.
    pub fn to_lines(&self, team: &Team) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let witness = e
                .verdict
                .witness
                .map(|w| w.render(team))
                .unwrap_or_else(|| "-".into());
            let _ = writeln!(
                out,
                "{}\t{}\t{}",
                e.atom.display(team.vocab()),
                e.verdict.holds,
                witness
            );
        }
        out
    }

    /// Aligned table for people.
    pub fn to_table(&self, team: &Team) -> String {
        let cells: Vec<(String, &str, String)> = self
            .entries
            .iter()
            .map(|e| {
                (
                    e.atom.display(team.vocab()).to_string(),
                    if e.verdict.holds { "true" } else { "false" },
                    e.verdict.witness.map(|w| w.render(team)).unwrap_or_default(),
                )
            })
            .collect();
        let width = cells.iter().map(|c| c.0.chars().count()).max().unwrap_or(4).max(4);
        let mut out = format!("{:<width$}  {:<5}  witness\n", "atom", "holds");
        for (atom, holds, witness) in cells {
            let _ = writeln!(out, "{atom:<width$}  {holds:<5}  {witness}");
        }
        out
    }
}

/// Evaluates every atom of `sigma` in `team`.
pub fn satisfies_all(team: &Team, sigma: &[Atom]) -> Result<SatReport> {
    let entries = sigma
        .iter()
        .map(|atom| {
            evaluate(team, atom).map(|verdict| AtomReport {
                atom: *atom,
                verdict,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SatReport { entries })
}
