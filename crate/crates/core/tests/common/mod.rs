//! Brute-force definitions over raw `add`/`mul`, sharing nothing with the
//! library's derived-set code.

#![allow(dead_code)]

use qnil_core::{Elem, FiniteRing};

pub fn is_unit(r: &FiniteRing, a: Elem) -> bool {
    r.elements()
        .any(|b| r.mul(a, b) == r.one() && r.mul(b, a) == r.one())
}

pub fn units(r: &FiniteRing) -> Vec<Elem> {
    r.elements().filter(|&a| is_unit(r, a)).collect()
}

pub fn qnil(r: &FiniteRing) -> Vec<Elem> {
    let unit: Vec<bool> = r.elements().map(|a| is_unit(r, a)).collect();
    r.elements()
        .filter(|&a| {
            r.elements()
                .filter(|&x| r.mul(a, x) == r.mul(x, a))
                .all(|x| unit[r.add(r.one(), r.mul(a, x))])
        })
        .collect()
}

/// `a` with `1 - ra` a unit for every `r`.
pub fn jacobson(r: &FiniteRing) -> Vec<Elem> {
    let unit: Vec<bool> = r.elements().map(|a| is_unit(r, a)).collect();
    r.elements()
        .filter(|&a| r.elements().all(|x| unit[r.sub(r.one(), r.mul(x, a))]))
        .collect()
}

pub fn nilpotents(r: &FiniteRing) -> Vec<Elem> {
    r.elements()
        .filter(|&a| {
            let mut p = a;
            for _ in 0..r.order() {
                if p == r.zero() {
                    return true;
                }
                p = r.mul(p, a);
            }
            p == r.zero()
        })
        .collect()
}

pub fn idempotents(r: &FiniteRing) -> Vec<Elem> {
    r.elements().filter(|&a| r.mul(a, a) == a).collect()
}

pub fn center(r: &FiniteRing) -> Vec<Elem> {
    r.elements()
        .filter(|&a| r.elements().all(|x| r.mul(a, x) == r.mul(x, a)))
        .collect()
}

/// Right: `S a ⊆ a S`; left: `a S ⊆ S a`, by direct search for `c`.
pub fn normal(r: &FiniteRing, s: &[Elem], right: bool) -> bool {
    r.elements().all(|a| {
        s.iter().all(|&b| {
            if right {
                let p = r.mul(b, a);
                s.iter().any(|&c| r.mul(a, c) == p)
            } else {
                let p = r.mul(a, b);
                s.iter().any(|&c| r.mul(c, a) == p)
            }
        })
    })
}
