use std::fmt;

use super::field::Field;
use crate::error::{Error, Result};

/// Coordinates over GF(p), each in `0..p`.
pub type Vector = Vec<u8>;

/// The vector space GF(p)^k with linear span as closure operator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorSpace {
    field: Field,
    dim: usize,
}

impl VectorSpace {
    pub fn new(p: u32, dim: usize) -> Result<VectorSpace> {
        Ok(VectorSpace {
            field: Field::new(p)?,
            dim,
        })
    }

    /// Parses `f<p>:<k>`, e.g. `f2:6` for GF(2)^6.
    pub fn from_spec(spec: &str) -> Result<VectorSpace> {
        let bad = || Error::BadSpace(spec.to_string());
        let (p, k) = spec
            .strip_prefix('f')
            .and_then(|rest| rest.split_once(':'))
            .ok_or_else(bad)?;
        let p: u32 = p.parse().map_err(|_| bad())?;
        let k: usize = k.parse().map_err(|_| bad())?;
        VectorSpace::new(p, k)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn prime(&self) -> u32 {
        self.field.prime()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn zero(&self) -> Vector {
        vec![0; self.dim]
    }

    /// The `i`-th standard basis vector.
    pub fn unit(&self, i: usize) -> Vector {
        let mut v = self.zero();
        v[i] = 1;
        v
    }

    /// Builds a vector from integer coordinates, which must lie in `0..p`.
    pub fn vector(&self, coords: &[u32]) -> Result<Vector> {
        let v: Vec<u8> = coords
            .iter()
            .map(|&c| {
                if c < self.prime() {
                    Ok(c as u8)
                } else {
                    Err(Error::Unsupported(format!("coordinate {c} outside GF({})", self.prime())))
                }
            })
            .collect::<Result<_>>()?;
        self.check(&v)?;
        Ok(v)
    }

    pub fn check(&self, v: &[u8]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        if v.iter().any(|&c| c as u32 >= self.prime()) {
            return Err(Error::Unsupported(format!("coordinate outside GF({})", self.prime())));
        }
        Ok(())
    }

    pub fn check_all(&self, vs: &[Vector]) -> Result<()> {
        vs.iter().try_for_each(|v| self.check(v))
    }

    pub fn add(&self, a: &[u8], b: &[u8]) -> Vector {
        a.iter().zip(b).map(|(&x, &y)| self.field.add(x, y)).collect()
    }

    pub fn scale(&self, c: u8, a: &[u8]) -> Vector {
        a.iter().map(|&x| self.field.mul(c, x)).collect()
    }

    pub fn sum<'a>(&self, vs: impl IntoIterator<Item = &'a Vector>) -> Vector {
        vs.into_iter().fold(self.zero(), |acc, v| self.add(&acc, v))
    }

    /// Number of elements `p^k`, if it fits in a `u64`.
    pub fn size(&self) -> Option<u64> {
        (self.prime() as u64).checked_pow(self.dim as u32)
    }

    /// The `index`-th vector in base-`p` order, for enumerating small spaces.
    pub fn nth(&self, mut index: u64) -> Vector {
        let p = self.prime() as u64;
        (0..self.dim)
            .map(|_| {
                let c = (index % p) as u8;
                index /= p;
                c
            })
            .collect()
    }
}

impl fmt::Display for VectorSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})^{}", self.prime(), self.dim)
    }
}

/// A row-echelon basis grown one vector at a time. Each stored row has a
/// leading 1 at its pivot and zeros at the pivots of earlier rows, so reducing
/// by the rows in order clears every pivot.
#[derive(Clone, Debug)]
pub(crate) struct Echelon<'a> {
    space: &'a VectorSpace,
    rows: Vec<(usize, Vector)>,
}

impl<'a> Echelon<'a> {
    pub fn new(space: &'a VectorSpace) -> Self {
        Echelon {
            space,
            rows: Vec::new(),
        }
    }

    pub fn spanning<'v>(space: &'a VectorSpace, vs: impl IntoIterator<Item = &'v Vector>) -> Self {
        let mut e = Echelon::new(space);
        for v in vs {
            e.insert(v);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[u8]) -> Vector {
        let f = self.space.field();
        let mut r = v.to_vec();
        for (pivot, row) in &self.rows {
            let c = r[*pivot];
            if c != 0 {
                for (x, &y) in r.iter_mut().zip(row) {
                    *x = f.sub(*x, f.mul(c, y));
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[u8]) -> bool {
        self.reduce(v).iter().all(|&c| c == 0)
    }

    /// Adds `v` to the spanning set; returns whether the span grew.
    pub fn insert(&mut self, v: &[u8]) -> bool {
        let r = self.reduce(v);
        let Some(pivot) = r.iter().position(|&c| c != 0) else {
            return false;
        };
        let row = self.space.scale(self.space.field().inv(r[pivot]), &r);
        self.rows.push((pivot, row));
        true
    }
}

/// `v ∈ span(a)`.
pub fn span_member(space: &VectorSpace, v: &[u8], a: &[Vector]) -> Result<bool> {
    space.check(v)?;
    space.check_all(a)?;
    Ok(Echelon::spanning(space, a).contains(v))
}

/// Dimension of `span(a)`.
pub fn dim(space: &VectorSpace, a: &[Vector]) -> Result<usize> {
    space.check_all(a)?;
    Ok(Echelon::spanning(space, a).rank())
}

/// Dimension of `a` in the localization at `c`: the size of a basis of `a`
/// over `c`, found greedily.
pub fn dim_over(space: &VectorSpace, a: &[Vector], c: &[Vector]) -> Result<usize> {
    space.check_all(a)?;
    space.check_all(c)?;
    Ok(dim_over_unchecked(space, a, c))
}

pub(crate) fn dim_over_unchecked(space: &VectorSpace, a: &[Vector], c: &[Vector]) -> usize {
    let mut e = Echelon::spanning(space, c);
    a.iter().filter(|v| e.insert(v)).count()
}

fn union(a: &[Vector], b: &[Vector]) -> Vec<Vector> {
    a.iter().chain(b).cloned().collect()
}

/// `a` is independent of `c` over `b`: adding `c` to the parameters does not
/// lower the dimension of `a`.
pub fn indep_rel(space: &VectorSpace, a: &[Vector], b: &[Vector], c: &[Vector]) -> Result<bool> {
    space.check_all(a)?;
    space.check_all(b)?;
    space.check_all(c)?;
    Ok(indep_rel_unchecked(space, a, b, c))
}

pub(crate) fn indep_rel_unchecked(space: &VectorSpace, a: &[Vector], b: &[Vector], c: &[Vector]) -> bool {
    dim_over_unchecked(space, a, &union(b, c)) == dim_over_unchecked(space, a, b)
}

/// Every element of `y` lies in `span(x)`.
pub fn cl_dep(space: &VectorSpace, x: &[Vector], y: &[Vector]) -> Result<bool> {
    space.check_all(x)?;
    space.check_all(y)?;
    let e = Echelon::spanning(space, x);
    Ok(y.iter().all(|v| e.contains(v)))
}

/// The set `a` (duplicates ignored) is independent over `c`: no element lies
/// in the span of the others together with `c`.
pub fn is_independent_set(space: &VectorSpace, a: &[Vector], c: &[Vector]) -> Result<bool> {
    space.check_all(a)?;
    space.check_all(c)?;
    Ok(is_independent_set_unchecked(space, a, c))
}

pub(crate) fn is_independent_set_unchecked(space: &VectorSpace, a: &[Vector], c: &[Vector]) -> bool {
    let set = dedup(a);
    (0..set.len()).all(|i| {
        let others = set
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, v)| v)
            .chain(c);
        !Echelon::spanning(space, others).contains(&set[i])
    })
}

/// Distinct vectors in first-occurrence order.
pub fn dedup(a: &[Vector]) -> Vec<Vector> {
    let mut out: Vec<Vector> = Vec::new();
    for v in a {
        if !out.contains(v) {
            out.push(v.clone());
        }
    }
    out
}
