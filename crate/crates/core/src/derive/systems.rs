//! Rule application for each system. Every popped atom is joined, in each
//! premise position, against the processed atoms that can fill the other
//! position; indexes make those partners direct lookups.

use std::collections::HashMap;

use super::engine::{Closure, Codec, Core};
use super::rules::Rule;
use crate::atom::{Atom, AtomKind};
use crate::vars::VarSet;

fn bits(mut m: u32) -> impl Iterator<Item = u32> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let b = m & m.wrapping_neg();
            m &= m - 1;
            b
        })
    })
}

fn seed(core: &mut Core, codec: &Codec, sigma: &[Atom]) {
    for atom in sigma {
        if let Some(k) = codec.encode(atom) {
            core.add(k, Rule::Hypothesis, &[]);
        }
    }
}

pub(crate) fn saturate(kind: AtomKind, sigma: &[Atom], universe: VarSet) -> Closure {
    let codec = Codec::new(kind, universe);
    let mut core = Core::new(codec.key_bits());
    seed(&mut core, &codec, sigma);
    match kind {
        AtomKind::Dep => dep(&mut core, &codec),
        AtomKind::AbsInd => absind(&mut core, &codec),
        AtomKind::Ind => ind(&mut core, &codec),
        AtomKind::CondInd => condind(&mut core, &codec),
    }
    core.into_closure(codec)
}

fn dep(core: &mut Core, codec: &Codec) {
    let n = codec.width;
    let full = codec.mask();
    let key = |x: u32, y: u32| x as u64 | (y as u64) << n;
    for x in 0..=full {
        core.add(key(x, x), Rule::DepReflexivity, &[]);
    }
    let mut by_lhs: Vec<Vec<u32>> = vec![Vec::new(); 1 << n];
    let mut by_rhs: Vec<Vec<u32>> = vec![Vec::new(); 1 << n];
    while let Some(k) = core.next() {
        let x = (k as u32) & full;
        let y = (k >> n) as u32;
        by_lhs[x as usize].push(y);
        by_rhs[y as usize].push(x);

        // Projection in single steps: grow the left side or shrink the right.
        if y != 0 {
            for v in bits(full & !x) {
                core.add(key(x | v, y), Rule::DepProjection, &[k]);
            }
        }
        for v in bits(y) {
            if y & !v != 0 || x == 0 {
                core.add(key(x, y & !v), Rule::DepProjection, &[k]);
            }
        }
        for &z in &by_lhs[y as usize] {
            core.add(key(x, z), Rule::DepTransitivity, &[k, key(y, z)]);
        }
        for &w in &by_rhs[x as usize] {
            core.add(key(w, y), Rule::DepTransitivity, &[key(w, x), k]);
        }
        for &v in &by_lhs[x as usize] {
            core.add(key(x, y | v), Rule::DepUnion, &[k, key(x, v)]);
        }
    }
}

fn absind(core: &mut Core, _codec: &Codec) {
    core.add(0, Rule::AbsEmpty, &[]);
    while let Some(k) = core.next() {
        for v in bits(k as u32) {
            core.add(k & !(v as u64), Rule::AbsSubset, &[k]);
        }
    }
}

fn ind(core: &mut Core, codec: &Codec) {
    let n = codec.width;
    let full = codec.mask();
    let key = |x: u32, y: u32| x as u64 | (y as u64) << n;
    for x in 0..=full {
        core.add(key(x, 0), Rule::IndEmpty, &[]);
    }
    let mut by_lhs: Vec<Vec<u32>> = vec![Vec::new(); 1 << n];
    let mut by_union: Vec<Vec<(u32, u32)>> = vec![Vec::new(); 1 << n];
    while let Some(k) = core.next() {
        let x = (k as u32) & full;
        let y = (k >> n) as u32;
        by_lhs[x as usize].push(y);
        by_union[(x | y) as usize].push((x, y));

        core.add(key(y, x), Rule::IndSymmetry, &[k]);
        for v in bits(y) {
            core.add(key(x, y & !v), Rule::IndProjection, &[k]);
        }
        if x == y && x.count_ones() == 1 {
            for t in 0..=full {
                core.add(key(x, t), Rule::IndConstant, &[k]);
            }
        }
        // As the first premise x ⊥ y, partnered with (x ∪ y) ⊥ z.
        for &z in &by_lhs[(x | y) as usize] {
            core.add(key(x, y | z), Rule::IndExchange, &[k, key(x | y, z)]);
        }
        // As the second premise w ⊥ z, partnered with x' ⊥ y' where x' ∪ y' = w.
        for &(x1, y1) in &by_union[x as usize] {
            core.add(key(x1, y1 | y), Rule::IndExchange, &[key(x1, y1), k]);
        }
    }
}

fn condind(core: &mut Core, codec: &Codec) {
    let n = codec.width;
    let full = codec.mask();
    let key = |x: u32, z: u32, y: u32| x as u64 | (z as u64) << n | (y as u64) << (2 * n);
    let pair = |a: u32, b: u32| a as u64 | (b as u64) << n;
    for x in 0..=full {
        for y in 0..=full {
            core.add(key(x, x, y), Rule::CondReflexivity, &[]);
        }
    }
    // Processed atoms (x, z, y) filed under:
    let mut lhs_by_cond_rhs: HashMap<u64, Vec<u32>> = HashMap::new(); // (z, y) -> x
    let mut split_by_union_rhs: HashMap<u64, Vec<(u32, u32)>> = HashMap::new(); // (x ∪ z, y) -> (x, z)
    let mut sides_by_cond: HashMap<u32, Vec<(u32, u32)>> = HashMap::new(); // z -> (x, y)
    let mut cond_by_self: HashMap<u32, Vec<u32>> = HashMap::new(); // x where x = y -> z
    let mut rhs_by_lhs_cond: HashMap<u64, Vec<u32>> = HashMap::new(); // (x, z) -> y
    let mut sides_by_union_cond: HashMap<u64, Vec<(u32, u32)>> = HashMap::new(); // (x ∪ y, z) -> (x, y)

    while let Some(k) = core.next() {
        let x = (k as u32) & full;
        let z = ((k >> n) as u32) & full;
        let y = (k >> (2 * n)) as u32;
        lhs_by_cond_rhs.entry(pair(z, y)).or_default().push(x);
        split_by_union_rhs.entry(pair(x | z, y)).or_default().push((x, z));
        sides_by_cond.entry(z).or_default().push((x, y));
        if x == y {
            cond_by_self.entry(x).or_default().push(z);
        }
        rhs_by_lhs_cond.entry(pair(x, z)).or_default().push(y);
        sides_by_union_cond.entry(pair(x | y, z)).or_default().push((x, y));

        core.add(key(y, z, x), Rule::CondSymmetry, &[k]);
        for v in bits(x) {
            core.add(key(x & !v, z, y), Rule::CondProjection, &[k]);
        }
        for v in bits(y) {
            core.add(key(x, z, y & !v), Rule::CondProjection, &[k]);
        }
        core.add(key(x | z, z, y | z), Rule::CondAbsorption, &[k]);

        // Contraction: x ⊥_z y, u ⊥_{z x} y ⇒ u ⊥_z y.
        if let Some(us) = lhs_by_cond_rhs.get(&pair(z | x, y)) {
            for &u in us {
                core.add(key(u, z, y), Rule::CondContraction, &[k, key(u, z | x, y)]);
            }
        }
        if let Some(splits) = split_by_union_rhs.get(&pair(z, y)) {
            for &(x1, z1) in splits {
                core.add(key(x, z1, y), Rule::CondContraction, &[key(x1, z1, y), k]);
            }
        }

        // Transfer: y ⊥_z y, (z ∪ w) ⊥_y u ⇒ w ⊥_z u; concluded with the
        // largest w, the others follow by projection.
        if x == y {
            if let Some(partners) = sides_by_cond.get(&x) {
                for &(w, u) in partners {
                    if z & !w == 0 {
                        core.add(key(w, z, u), Rule::CondTransfer, &[k, key(w, x, u)]);
                    }
                }
            }
        }
        if let Some(conds) = cond_by_self.get(&z) {
            for &z1 in conds {
                if z1 & !x == 0 {
                    core.add(key(x, z1, y), Rule::CondTransfer, &[key(z, z1, z), k]);
                }
            }
        }

        // Exchange: x ⊥_z y, (x ∪ y) ⊥_z u ⇒ x ⊥_z (y ∪ u).
        if let Some(us) = rhs_by_lhs_cond.get(&pair(x | y, z)) {
            for &u in us {
                core.add(key(x, z, y | u), Rule::CondExchange, &[k, key(x | y, z, u)]);
            }
        }
        if let Some(splits) = sides_by_union_cond.get(&pair(x, z)) {
            for &(x1, y1) in splits {
                core.add(key(x1, z, y1 | y), Rule::CondExchange, &[key(x1, z, y1), k]);
            }
        }
    }
}
