//! Generalized matrix rings `K_s(R)` and Dorroh extensions `I(R, Z_n)`.

use super::matrix::render_matrix;
use super::{atom, BuildOptions};
use crate::coords::CoordSpace;
use crate::descriptor::RingDescriptor;
use crate::error::BuildError;
use crate::ring::{Elem, FiniteRing, RingArithmetic};

/// `[[a1,x1],[y1,b1]] [[a2,x2],[y2,b2]] =
///  [[a1 a2 + s x1 y2, a1 x2 + x1 b2], [y1 a2 + b1 y2, s y1 x2 + b1 b2]]`
struct Ks {
    base: FiniteRing,
    s: Elem,
    space: CoordSpace,
    zero: Elem,
    one: Elem,
}

impl RingArithmetic for Ks {
    fn order(&self) -> usize {
        self.space.order()
    }
    fn zero(&self) -> Elem {
        self.zero
    }
    fn one(&self) -> Elem {
        self.one
    }
    fn add(&self, p: Elem, q: Elem) -> Elem {
        let (u, v) = (self.space.decode(p), self.space.decode(q));
        let w: Vec<Elem> = (0..4).map(|k| self.base.add(u[k], v[k])).collect();
        self.space.encode(&w).unwrap()
    }
    fn neg(&self, p: Elem) -> Elem {
        let u = self.space.decode(p);
        let w: Vec<Elem> = u.iter().map(|&x| self.base.neg(x)).collect();
        self.space.encode(&w).unwrap()
    }
    fn mul(&self, p: Elem, q: Elem) -> Elem {
        let r = &self.base;
        let (u, v) = (self.space.decode(p), self.space.decode(q));
        let (a1, x1, y1, b1) = (u[0], u[1], u[2], u[3]);
        let (a2, x2, y2, b2) = (v[0], v[1], v[2], v[3]);
        let w = [
            r.add(r.mul(a1, a2), r.mul(self.s, r.mul(x1, y2))),
            r.add(r.mul(a1, x2), r.mul(x1, b2)),
            r.add(r.mul(y1, a2), r.mul(b1, y2)),
            r.add(r.mul(self.s, r.mul(y1, x2)), r.mul(b1, b2)),
        ];
        self.space.encode(&w).unwrap()
    }
    fn label(&self, p: Elem) -> String {
        render_matrix(&self.base, 2, &self.space.decode(p))
    }
    fn coords(&self) -> &CoordSpace {
        &self.space
    }
}

pub(super) fn build_ks(
    base: FiniteRing,
    s: Elem,
    descriptor: RingDescriptor,
    opts: &BuildOptions,
) -> Result<FiniteRing, BuildError> {
    if !base.center().contains(s) {
        return Err(BuildError::NonCentral {
            param: "s",
            label: base.label(s),
        });
    }
    opts.admit(CoordSpace::predicted_order([base.order(); 4]))?;
    let space = CoordSpace::uniform(["a11", "a12", "a21", "a22"], base.order());
    let one = space
        .encode(&[base.one(), base.zero(), base.zero(), base.one()])
        .unwrap();
    let mut notes = Vec::new();
    if !base.is_unit(s) {
        notes.push(format!(
            "s = {} is central but not a unit; product formula is still associative",
            base.label(s)
        ));
    }
    let zero = space.encode(&[base.zero(); 4]).unwrap();
    let arith = Ks {
        base: base.clone(),
        s,
        space,
        zero,
        one,
    };
    Ok(FiniteRing::with_notes(arith, descriptor, vec![base], notes))
}

/// `(a1, b1)(a2, b2) = (a1 a2 + b1 a2 + b2 a1, b1 b2)` on `R x Z_n`.
struct Dorroh {
    algebra: FiniteRing,
    modulus: usize,
    space: CoordSpace,
    one: Elem,
    zero: Elem,
}

impl Dorroh {
    #[inline]
    fn split(&self, p: Elem) -> (Elem, usize) {
        let c = self.space.decode(p);
        (c[0], c[1])
    }
    #[inline]
    fn join(&self, a: Elem, b: usize) -> Elem {
        self.space.encode(&[a, b % self.modulus]).unwrap()
    }
}

impl RingArithmetic for Dorroh {
    fn order(&self) -> usize {
        self.space.order()
    }
    fn zero(&self) -> Elem {
        self.zero
    }
    fn one(&self) -> Elem {
        self.one
    }
    fn add(&self, p: Elem, q: Elem) -> Elem {
        let ((a1, b1), (a2, b2)) = (self.split(p), self.split(q));
        self.join(self.algebra.add(a1, a2), b1 + b2)
    }
    fn neg(&self, p: Elem) -> Elem {
        let (a, b) = self.split(p);
        self.join(self.algebra.neg(a), self.modulus - b)
    }
    fn mul(&self, p: Elem, q: Elem) -> Elem {
        let r = &self.algebra;
        let ((a1, b1), (a2, b2)) = (self.split(p), self.split(q));
        let a = r.add(
            r.add(r.mul(a1, a2), r.times(b1 as u64, a2)),
            r.times(b2 as u64, a1),
        );
        self.join(a, b1 * b2)
    }
    fn label(&self, p: Elem) -> String {
        let (a, b) = self.split(p);
        format!("({}, {b})", atom(self.algebra.label(a)))
    }
    fn coords(&self) -> &CoordSpace {
        &self.space
    }
}

pub(super) fn build_dorroh(
    algebra: FiniteRing,
    modulus: usize,
    descriptor: RingDescriptor,
    opts: &BuildOptions,
) -> Result<FiniteRing, BuildError> {
    if modulus < 2 {
        return Err(BuildError::InvalidParameter(format!(
            "scalar ring Z_n needs n >= 2, got {modulus}"
        )));
    }
    let exponent = algebra.characteristic();
    if !modulus.is_multiple_of(exponent) {
        return Err(BuildError::ExponentMismatch { exponent, modulus });
    }
    opts.admit(CoordSpace::predicted_order([algebra.order(), modulus]))?;
    let space = CoordSpace::new([
        ("r".to_string(), algebra.elements().collect()),
        ("k".to_string(), (0..modulus).collect()),
    ]);
    let one = space.encode(&[algebra.zero(), 1]).unwrap();
    let zero = space.encode(&[algebra.zero(), 0]).unwrap();
    let arith = Dorroh {
        algebra: algebra.clone(),
        modulus,
        space,
        one,
        zero,
    };
    Ok(FiniteRing::new(arith, descriptor, vec![algebra]))
}
