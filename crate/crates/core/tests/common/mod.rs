//! Reference semantics written directly from the definitions, sharing no
//! evaluation code with the library. Variables are addressed by their index,
//! so a `VarSet`'s bits select columns or vectors.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use idcalc::pregeometry::Geometry;
use idcalc::{Atom, Team};

fn columns(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| mask >> i & 1 == 1)
}

fn proj(row: &[u32], mask: u64) -> Vec<u32> {
    columns(mask).map(|i| row[i]).collect()
}

/// Within `rows`, every `x`-projection combines with every `y`-projection.
fn recombines(rows: &[&Vec<u32>], x: u64, y: u64) -> bool {
    let xs: HashSet<Vec<u32>> = rows.iter().map(|r| proj(r, x)).collect();
    let ys: HashSet<Vec<u32>> = rows.iter().map(|r| proj(r, y)).collect();
    let pairs: HashSet<(Vec<u32>, Vec<u32>)> = rows.iter().map(|r| (proj(r, x), proj(r, y))).collect();
    pairs.len() == xs.len() * ys.len()
}

/// Team satisfaction; `rows` may contain repeats.
pub fn team_holds(rows: &[Vec<u32>], atom: &Atom) -> bool {
    match *atom {
        Atom::Dep { lhs, rhs } => {
            let mut seen: HashMap<Vec<u32>, Vec<u32>> = HashMap::new();
            rows.iter().all(|r| {
                let y = proj(r, rhs.bits());
                seen.entry(proj(r, lhs.bits())).or_insert_with(|| y.clone()) == &y
            })
        }
        Atom::Ind { lhs, rhs } => recombines(&rows.iter().collect::<Vec<_>>(), lhs.bits(), rhs.bits()),
        Atom::CondInd { lhs, cond, rhs } => {
            let mut groups: HashMap<Vec<u32>, Vec<&Vec<u32>>> = HashMap::new();
            for r in rows {
                groups.entry(proj(r, cond.bits())).or_default().push(r);
            }
            groups.values().all(|g| recombines(g, lhs.bits(), rhs.bits()))
        }
        Atom::AbsInd(vars) => columns(vars.bits()).all(|i| {
            let rest = columns(vars.bits())
                .filter(|&j| rows.iter().any(|r| r[i] != r[j]))
                .fold(0u64, |m, j| m | 1 << j);
            let varies = rows.iter().any(|r| r[i] != rows[0][i]);
            varies && recombines(&rows.iter().collect::<Vec<_>>(), 1 << i, rest)
        }),
    }
}

/// A library team as rows indexed by variable id; cell strings are mapped to
/// numbers shared across columns so cross-column comparisons survive.
pub fn team_rows(team: &Team) -> Vec<Vec<u32>> {
    let n = team.vocab().len();
    let mut codes: HashMap<String, u32> = HashMap::new();
    (0..team.len())
        .map(|r| {
            let mut row = vec![u32::MAX; n];
            for &v in team.columns() {
                let next = codes.len() as u32;
                row[v.index()] = *codes.entry(team.value_str(r, v).to_string()).or_insert(next);
            }
            row
        })
        .collect()
}

fn inv(a: u32, p: u32) -> u32 {
    (0..p).find(|&b| a * b % p == 1).expect("nonzero element of a prime field")
}

/// Rank over GF(p) by plain Gaussian elimination.
pub fn rank(p: u32, vectors: &[Vec<u32>]) -> usize {
    let mut m: Vec<Vec<u32>> = vectors.to_vec();
    let width = m.first().map_or(0, |v| v.len());
    let mut r = 0;
    for c in 0..width {
        let Some(pivot) = (r..m.len()).find(|&i| !m[i][c].is_multiple_of(p)) else {
            continue;
        };
        m.swap(r, pivot);
        let k = inv(m[r][c] % p, p);
        for x in m[r].iter_mut() {
            *x = *x * k % p;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            let f = row[c];
            if i != r && f != 0 {
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + p * p - f * y % p) % p;
                }
            }
        }
        r += 1;
    }
    r
}

/// Variable images in GF(p)^k, indexed by variable id.
#[derive(Clone, Debug)]
pub struct Vectors {
    pub p: u32,
    pub images: Vec<Vec<u32>>,
}

impl Vectors {
    pub fn from_geometry(g: &Geometry) -> Vectors {
        let images = g
            .vocab()
            .ids()
            .map(|v| g.image(v).map_or_else(Vec::new, |img| img.iter().map(|&c| c as u32).collect()))
            .collect();
        Vectors {
            p: g.space().prime(),
            images,
        }
    }

    fn set(&self, mask: u64) -> Vec<Vec<u32>> {
        let mut out: Vec<Vec<u32>> = Vec::new();
        for i in columns(mask) {
            if !out.contains(&self.images[i]) {
                out.push(self.images[i].clone());
            }
        }
        out
    }

    fn rank_of(&self, masks: &[u64]) -> usize {
        rank(self.p, &self.set(masks.iter().fold(0, |a, m| a | m)))
    }

    /// Pregeometry satisfaction with span as closure.
    pub fn holds(&self, atom: &Atom) -> bool {
        match *atom {
            Atom::Dep { lhs, rhs } => {
                let base = self.rank_of(&[lhs.bits()]);
                columns(rhs.bits()).all(|i| self.rank_of(&[lhs.bits(), 1 << i]) == base)
            }
            Atom::Ind { lhs, rhs } => {
                let (a, b) = (lhs.bits(), rhs.bits());
                self.rank_of(&[a]) + self.rank_of(&[b]) == self.rank_of(&[a, b])
            }
            Atom::CondInd { lhs, cond, rhs } => {
                let (a, c, b) = (lhs.bits(), cond.bits(), rhs.bits());
                self.rank_of(&[a, c]) + self.rank_of(&[b, c]) == self.rank_of(&[a, b, c]) + self.rank_of(&[c])
            }
            Atom::AbsInd(vars) => {
                let set = self.set(vars.bits());
                let full = rank(self.p, &set);
                (0..set.len()).all(|i| {
                    let others: Vec<Vec<u32>> =
                        set.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, v)| v.clone()).collect();
                    rank(self.p, &others) + 1 == full
                })
            }
        }
    }
}
