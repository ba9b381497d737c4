use std::fmt::Write as _;

use super::space::{
    dedup, dim_over_unchecked, indep_rel_unchecked, is_independent_set_unchecked, Echelon, Vector, VectorSpace,
};
use crate::atom::Atom;
use crate::error::{Error, Result};
use crate::vars::{is_identifier, VarId, VarSet, Vocab};

/// Variables assigned to vectors of one space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Geometry {
    space: VectorSpace,
    vocab: Vocab,
    images: Vec<Option<Vector>>,
}

impl Geometry {
    pub fn new(space: VectorSpace, vocab: Vocab) -> Geometry {
        let images = vec![None; vocab.len()];
        Geometry { space, vocab, images }
    }

    pub fn space(&self) -> &VectorSpace {
        &self.space
    }

    pub fn vocab(&self) -> &Vocab {
        &self.vocab
    }

    pub fn assign(&mut self, var: VarId, v: Vector) -> Result<()> {
        self.space.check(&v)?;
        if var.index() >= self.images.len() {
            return Err(Error::OutsideDomain);
        }
        self.images[var.index()] = Some(v);
        Ok(())
    }

    pub fn image(&self, var: VarId) -> Option<&Vector> {
        self.images.get(var.index()).and_then(Option::as_ref)
    }

    /// Variables with an image.
    pub fn domain(&self) -> VarSet {
        self.vocab.ids().filter(|&v| self.image(v).is_some()).collect()
    }

    /// The image set `{s(v) | v ∈ vars}`, without repetitions.
    pub fn images(&self, vars: VarSet) -> Result<Vec<Vector>> {
        let all = vars
            .iter()
            .map(|v| {
                self.image(v)
                    .cloned()
                    .ok_or_else(|| Error::UnknownVariable(self.vocab.name(v).to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(dedup(&all))
    }

    /// Text form: `field p dim k`, then one `name = c1 ... ck` line per
    /// assigned variable in vocabulary order.
    pub fn to_text(&self) -> String {
        let mut out = format!("field {} dim {}\n", self.space.prime(), self.space.dim());
        for v in self.vocab.ids() {
            if let Some(img) = self.image(v) {
                let coords: Vec<String> = img.iter().map(|c| c.to_string()).collect();
                let _ = writeln!(out, "{} = {}", self.vocab.name(v), coords.join(" "));
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<Geometry> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let syntax = |line, message: &str| Error::Syntax {
            line,
            column: 1,
            message: message.to_string(),
        };
        let (hline, header) = lines.next().ok_or_else(|| syntax(1, "missing `field p dim k` header"))?;
        let words: Vec<&str> = header.split_whitespace().collect();
        let (p, k) = match words.as_slice() {
            ["field", p, "dim", k] => (
                p.parse::<u32>().map_err(|_| syntax(hline, "bad field size"))?,
                k.parse::<usize>().map_err(|_| syntax(hline, "bad dimension"))?,
            ),
            _ => return Err(syntax(hline, "expected `field p dim k`")),
        };
        let space = VectorSpace::new(p, k)?;
        let mut vocab = Vocab::new();
        let mut rows = Vec::new();
        for (line, body) in lines {
            let (name, coords) = body
                .split_once('=')
                .ok_or_else(|| syntax(line, "expected `name = coordinates`"))?;
            let name = name.trim();
            if !is_identifier(name) {
                return Err(syntax(line, "invalid variable name"));
            }
            if vocab.lookup(name).is_some() {
                return Err(Error::DuplicateVariable(name.to_string()));
            }
            let coords = coords
                .split_whitespace()
                .map(|c| c.parse::<u32>().map_err(|_| syntax(line, "coordinates must be integers")))
                .collect::<Result<Vec<_>>>()?;
            if coords.len() != k {
                return Err(Error::DimensionMismatch {
                    expected: k,
                    found: coords.len(),
                });
            }
            let v = space.vector(&coords).map_err(|_| syntax(line, "coordinate outside the field"))?;
            rows.push((vocab.intern(name)?, v));
        }
        let mut g = Geometry::new(space, vocab);
        for (var, v) in rows {
            g.assign(var, v)?;
        }
        Ok(g)
    }
}

/// `s(lhs)` is independent of `s(rhs)` over the empty set.
pub fn sat_ind_pregeo(g: &Geometry, lhs: VarSet, rhs: VarSet) -> Result<bool> {
    Ok(indep_rel_unchecked(&g.space, &g.images(lhs)?, &[], &g.images(rhs)?))
}

/// `s(lhs)` is independent of `s(rhs)` over `s(cond)`.
pub fn sat_condind_pregeo(g: &Geometry, lhs: VarSet, cond: VarSet, rhs: VarSet) -> Result<bool> {
    Ok(indep_rel_unchecked(&g.space, &g.images(lhs)?, &g.images(cond)?, &g.images(rhs)?))
}

/// The image set of `vars` is an independent set.
pub fn sat_absind_pregeo(g: &Geometry, vars: VarSet) -> Result<bool> {
    Ok(is_independent_set_unchecked(&g.space, &g.images(vars)?, &[]))
}

/// `s(rhs) ⊆ span(s(lhs))`.
pub fn sat_dep_closure(g: &Geometry, lhs: VarSet, rhs: VarSet) -> Result<bool> {
    let span = Echelon::spanning(&g.space, &g.images(lhs)?);
    Ok(g.images(rhs)?.iter().all(|v| span.contains(v)))
}

pub fn evaluate_pregeo(g: &Geometry, atom: &Atom) -> Result<bool> {
    match *atom {
        Atom::Dep { lhs, rhs } => sat_dep_closure(g, lhs, rhs),
        Atom::AbsInd(vars) => sat_absind_pregeo(g, vars),
        Atom::Ind { lhs, rhs } => sat_ind_pregeo(g, lhs, rhs),
        Atom::CondInd { lhs, cond, rhs } => sat_condind_pregeo(g, lhs, cond, rhs),
    }
}

/// Dimension of `s(vars)`.
pub fn image_dim(g: &Geometry, vars: VarSet) -> Result<usize> {
    Ok(dim_over_unchecked(&g.space, &g.images(vars)?, &[]))
}
