//! Lie-algebra elements of gl(n) as sparse coefficient vectors over the
//! matrix-unit basis. Used for carrier analysis of twist factors.

use std::collections::BTreeMap;

use num::Zero;

use crate::algebra::{bracket_gens, Gen, Rat};

/// A gl(n) element: finite map (i,j) → coefficient of E_ij, 1-based.
pub type LieVec = BTreeMap<(u8, u8), Rat>;

pub fn lie_unit(i: u8, j: u8) -> LieVec {
    let mut v = LieVec::new();
    v.insert((i, j), Rat::from_integer(1.into()));
    v
}

pub fn lie_add_assign(a: &mut LieVec, b: &LieVec, scale: &Rat) {
    if scale.is_zero() {
        return;
    }
    for (k, c) in b {
        let e = a.entry(*k).or_insert_with(Rat::zero);
        *e += c * scale;
        if e.is_zero() {
            a.remove(k);
        }
    }
}

pub fn lie_bracket(a: &LieVec, b: &LieVec) -> LieVec {
    let mut out = LieVec::new();
    for ((ai, aj), ca) in a {
        for ((bi, bj), cb) in b {
            for (g, sign) in bracket_gens(Gen::raw(*ai, *aj), Gen::raw(*bi, *bj)) {
                let e = out.entry((g.i, g.j)).or_insert_with(Rat::zero);
                *e += ca * cb * Rat::from_integer(sign.into());
                if e.is_zero() {
                    out.remove(&(g.i, g.j));
                }
            }
        }
    }
    out
}

pub fn lie_is_diagonal(v: &LieVec) -> bool {
    v.keys().all(|(i, j)| i == j)
}
