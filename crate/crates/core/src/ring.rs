//! The finite ring abstraction and its exhaustively computed derived sets.
//!
//! A ring is a set of dense element indexes `0..order` with arithmetic
//! supplied by a [`RingArithmetic`] implementation. Rings are immutable once
//! built; derived sets (units, quasinilpotents, radical, ...) are computed on
//! first request and then shared.

use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::coords::{CoordSpace, Coords};
use crate::descriptor::{ElementLiteral, RingDescriptor};
use crate::error::RingError;
use crate::set::ElementSet;

/// Index of a ring element.
pub type Elem = usize;

/// Rings up to this order get their addition and multiplication tabulated
/// at construction time.
pub const TABULATE_CAP: usize = 1024;

/// Default bound for the `O(n^3)` axiom scan.
pub const DEFAULT_AXIOM_CAP: usize = 4096;

/// Arithmetic of a concrete construction on element indexes.
pub trait RingArithmetic: Send + Sync {
    fn order(&self) -> usize;
    fn zero(&self) -> Elem;
    fn one(&self) -> Elem;
    fn add(&self, a: Elem, b: Elem) -> Elem;
    fn neg(&self, a: Elem) -> Elem;
    fn mul(&self, a: Elem, b: Elem) -> Elem;
    /// Construction-native rendering (residues, matrices, series, ...).
    fn label(&self, a: Elem) -> String;
    fn coords(&self) -> &CoordSpace;
}

struct Tables {
    order: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
}

impl Tables {
    fn build(arith: &dyn RingArithmetic) -> Self {
        let n = arith.order();
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                add.push(arith.add(a, b) as u32);
                mul.push(arith.mul(a, b) as u32);
            }
        }
        let neg = (0..n).map(|a| arith.neg(a) as u32).collect();
        Tables {
            order: n,
            add,
            mul,
            neg,
        }
    }
}

#[derive(Default)]
struct Memo {
    units: OnceLock<(ElementSet, Vec<Option<Elem>>)>,
    qnil: OnceLock<ElementSet>,
    jacobson: OnceLock<ElementSet>,
    nilpotents: OnceLock<ElementSet>,
    idempotents: OnceLock<ElementSet>,
    center: OnceLock<ElementSet>,
}

struct Inner {
    arith: Box<dyn RingArithmetic>,
    tables: Option<Tables>,
    descriptor: RingDescriptor,
    parts: Vec<FiniteRing>,
    notes: Vec<String>,
    memo: Memo,
}

/// A realized finite unital ring. Cloning is cheap and shares memoized sets.
#[derive(Clone)]
pub struct FiniteRing {
    inner: Arc<Inner>,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("order", &self.order())
            .field("descriptor", &self.inner.descriptor)
            .finish()
    }
}

impl FiniteRing {
    /// Wraps an arithmetic implementation. `parts` are the rings the
    /// construction was built from, in construction order.
    pub fn new(
        arith: impl RingArithmetic + 'static,
        descriptor: RingDescriptor,
        parts: Vec<FiniteRing>,
    ) -> Self {
        Self::with_notes(arith, descriptor, parts, Vec::new())
    }

    pub fn with_notes(
        arith: impl RingArithmetic + 'static,
        descriptor: RingDescriptor,
        parts: Vec<FiniteRing>,
        notes: Vec<String>,
    ) -> Self {
        let arith: Box<dyn RingArithmetic> = Box::new(arith);
        let tables = (arith.order() <= TABULATE_CAP).then(|| Tables::build(arith.as_ref()));
        FiniteRing {
            inner: Arc::new(Inner {
                arith,
                tables,
                descriptor,
                parts,
                notes,
                memo: Memo::default(),
            }),
        }
    }

    pub fn order(&self) -> usize {
        self.inner.arith.order()
    }

    pub fn zero(&self) -> Elem {
        self.inner.arith.zero()
    }

    pub fn one(&self) -> Elem {
        self.inner.arith.one()
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match &self.inner.tables {
            Some(t) => t.add[a * t.order + b] as Elem,
            None => self.inner.arith.add(a, b),
        }
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.inner.tables {
            Some(t) => t.mul[a * t.order + b] as Elem,
            None => self.inner.arith.mul(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        match &self.inner.tables {
            Some(t) => t.neg[a] as Elem,
            None => self.inner.arith.neg(a),
        }
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    /// `1 + a`.
    #[inline]
    pub fn one_plus(&self, a: Elem) -> Elem {
        self.add(self.one(), a)
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order()
    }

    /// `a^k` with `a^0 = 1`.
    pub fn pow(&self, a: Elem, mut k: u64) -> Elem {
        let mut base = a;
        let mut acc = self.one();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Integer multiple `k * a`.
    pub fn times(&self, mut k: u64, a: Elem) -> Elem {
        let mut base = a;
        let mut acc = self.zero();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            k >>= 1;
        }
        acc
    }

    /// Additive order of `1`.
    pub fn characteristic(&self) -> usize {
        let mut k = 1;
        let mut x = self.one();
        while x != self.zero() {
            x = self.add(x, self.one());
            k += 1;
        }
        k
    }

    pub fn label(&self, a: Elem) -> String {
        self.inner.arith.label(a)
    }

    pub fn coords(&self) -> &CoordSpace {
        self.inner.arith.coords()
    }

    pub fn decode(&self, a: Elem) -> Coords {
        self.coords().decode(a)
    }

    pub fn encode(&self, values: &[Elem]) -> Option<Elem> {
        self.coords().encode(values)
    }

    pub fn descriptor(&self) -> &RingDescriptor {
        &self.inner.descriptor
    }

    /// Rings this one was constructed from (base ring, factors, ...).
    pub fn parts(&self) -> &[FiniteRing] {
        &self.inner.parts
    }

    pub fn part(&self, i: usize) -> &FiniteRing {
        &self.inner.parts[i]
    }

    /// Provenance notes recorded by the builder.
    pub fn notes(&self) -> &[String] {
        &self.inner.notes
    }

    pub fn check_index(&self, a: Elem) -> Result<Elem, RingError> {
        if a < self.order() {
            Ok(a)
        } else {
            Err(RingError::OutOfRange {
                elem: a,
                order: self.order(),
            })
        }
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|a| (a + 1..self.order()).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    #[inline]
    pub fn commute(&self, a: Elem, b: Elem) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    // ---- derived sets -------------------------------------------------

    fn unit_data(&self) -> &(ElementSet, Vec<Option<Elem>>) {
        self.inner.memo.units.get_or_init(|| {
            let n = self.order();
            let one = self.one();
            let mut inv = vec![None; n];
            for a in 0..n {
                if inv[a].is_some() {
                    continue;
                }
                if let Some(b) = (0..n).find(|&b| self.mul(a, b) == one && self.mul(b, a) == one) {
                    inv[a] = Some(b);
                    inv[b] = Some(a);
                }
            }
            let set = ElementSet::from_predicate(n, |a| inv[a].is_some());
            (set, inv)
        })
    }

    /// `U(R)`: elements with a two-sided inverse.
    pub fn units(&self) -> &ElementSet {
        &self.unit_data().0
    }

    #[inline]
    pub fn is_unit(&self, a: Elem) -> bool {
        self.units().contains(a)
    }

    pub fn inverse(&self, u: Elem) -> Result<Elem, RingError> {
        self.check_index(u)?;
        self.unit_data().1[u].ok_or_else(|| RingError::NotAUnit(self.label(u)))
    }

    /// `comm(a) = {b : ab = ba}`.
    pub fn commutant(&self, a: Elem) -> ElementSet {
        ElementSet::from_predicate(self.order(), |b| self.commute(a, b))
    }

    /// `comm²(a)`: elements commuting with every member of `comm(a)`.
    pub fn double_commutant(&self, a: Elem) -> ElementSet {
        let comm = self.commutant(a);
        ElementSet::from_predicate(self.order(), |b| comm.iter().all(|c| self.commute(b, c)))
    }

    /// Quasinilpotent elements: `1 + ax` is a unit for every `x` commuting
    /// with `a`.
    pub fn qnil(&self) -> &ElementSet {
        self.inner.memo.qnil.get_or_init(|| {
            let n = self.order();
            let units = self.units();
            ElementSet::from_predicate(n, |a| {
                // a unit a admits x = -a^{-1}, which commutes with a.
                !units.contains(a)
                    && (0..n).all(|x| {
                        !self.commute(a, x) || units.contains(self.one_plus(self.mul(a, x)))
                    })
            })
        })
    }

    #[inline]
    pub fn is_qnil(&self, a: Elem) -> bool {
        self.qnil().contains(a)
    }

    /// `J(R) = {a : 1 + ax is a unit for every x}`.
    pub fn jacobson(&self) -> &ElementSet {
        self.inner.memo.jacobson.get_or_init(|| {
            let units = self.units();
            ElementSet::from_predicate(self.order(), |a| {
                self.elements()
                    .all(|x| units.contains(self.one_plus(self.mul(a, x))))
            })
        })
    }

    /// `N(R)`: `a^k = 0` for some `k`.
    pub fn nilpotents(&self) -> &ElementSet {
        self.inner.memo.nilpotents.get_or_init(|| {
            let n = self.order() as u64;
            ElementSet::from_predicate(self.order(), |a| self.pow(a, n) == self.zero())
        })
    }

    /// `Id(R) = {e : e² = e}`.
    pub fn idempotents(&self) -> &ElementSet {
        self.inner
            .memo
            .idempotents
            .get_or_init(|| ElementSet::from_predicate(self.order(), |e| self.mul(e, e) == e))
    }

    /// `C(R)`.
    pub fn center(&self) -> &ElementSet {
        self.inner.memo.center.get_or_init(|| {
            ElementSet::from_predicate(self.order(), |c| {
                self.elements().all(|r| self.commute(c, r))
            })
        })
    }

    /// Principal left ideal `Rx`.
    pub fn left_multiples(&self, x: Elem) -> ElementSet {
        ElementSet::from_members(self.order(), self.elements().map(|r| self.mul(r, x)))
    }

    /// Principal right ideal `aR`.
    pub fn right_multiples(&self, a: Elem) -> ElementSet {
        ElementSet::from_members(self.order(), self.elements().map(|r| self.mul(a, r)))
    }

    /// `{s * t : s, t in set}` as a set.
    pub fn set_products(&self, left: &ElementSet, right: &ElementSet) -> ElementSet {
        let mut out = ElementSet::empty(self.order());
        for s in left.iter() {
            for t in right.iter() {
                out.insert(self.mul(s, t));
            }
        }
        out
    }

    pub fn labels(&self, set: &ElementSet) -> Vec<String> {
        set.iter().map(|e| self.label(e)).collect()
    }

    // ---- element literals ---------------------------------------------

    /// Resolves a literal in construction-native coordinates.
    pub fn resolve(&self, literal: &ElementLiteral) -> Result<Elem, RingError> {
        let space = self.coords();
        let bad = |reason: String| RingError::BadLiteral {
            literal: literal.to_string(),
            reason,
        };
        let values: Vec<Elem> = match literal {
            ElementLiteral::Int(v) => {
                if space.len() != 1 {
                    return Err(bad(format!(
                        "ring has {} coordinates ({}); give all of them",
                        space.len(),
                        space.names().collect::<Vec<_>>().join(",")
                    )));
                }
                vec![*v as Elem]
            }
            ElementLiteral::Coords(vs) => vs.iter().map(|&v| v as Elem).collect(),
            ElementLiteral::Named(map) => {
                for key in map.keys() {
                    if space.position(key).is_none() {
                        return Err(bad(format!("unknown coordinate `{key}`")));
                    }
                }
                space
                    .names()
                    .map(|n| {
                        map.get(n)
                            .map(|&v| v as Elem)
                            .ok_or_else(|| bad(format!("missing coordinate `{n}`")))
                    })
                    .collect::<Result<_, _>>()?
            }
            ElementLiteral::Text(text) => return self.parse_element(text),
        };
        space.encode(&values).ok_or_else(|| {
            bad(format!(
                "coordinates ({}) do not name an element",
                space.names().collect::<Vec<_>>().join(",")
            ))
        })
    }

    /// Parses `#17` (raw index), `3` (single-coordinate value) or
    /// `a=2,b=1,c=0` (named coordinates).
    pub fn parse_element(&self, text: &str) -> Result<Elem, RingError> {
        let text = text.trim();
        let bad = |reason: &str| RingError::BadLiteral {
            literal: text.to_string(),
            reason: reason.to_string(),
        };
        if let Some(raw) = text.strip_prefix('#') {
            let i: usize = raw
                .parse()
                .map_err(|_| bad("raw index must be an integer"))?;
            return self.check_index(i);
        }
        if let Ok(v) = text.parse::<u64>() {
            return self.resolve(&ElementLiteral::Int(v));
        }
        let mut map = std::collections::BTreeMap::new();
        for part in text.split(',') {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| bad("expected name=value pairs"))?;
            let v: u64 = v
                .trim()
                .parse()
                .map_err(|_| bad("coordinate values must be integers"))?;
            map.insert(k.trim().to_string(), v);
        }
        self.resolve(&ElementLiteral::Named(map))
    }
}

// ---- axiom verification ----------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Law {
    Closure,
    AdditiveIdentity,
    AdditiveInverse,
    AdditiveCommutativity,
    AdditiveAssociativity,
    MultiplicativeIdentity,
    MultiplicativeAssociativity,
    LeftDistributivity,
    RightDistributivity,
    NonTrivial,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Law::Closure => "closure",
            Law::AdditiveIdentity => "additive identity",
            Law::AdditiveInverse => "additive inverse",
            Law::AdditiveCommutativity => "additive commutativity",
            Law::AdditiveAssociativity => "additive associativity",
            Law::MultiplicativeIdentity => "multiplicative identity",
            Law::MultiplicativeAssociativity => "associativity",
            Law::LeftDistributivity => "left distributivity",
            Law::RightDistributivity => "right distributivity",
            Law::NonTrivial => "1 != 0",
        };
        f.write_str(s)
    }
}

/// The first failing law and the elements exhibiting it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomViolation {
    pub law: Law,
    pub elements: Vec<Elem>,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {:?}", self.law, self.elements)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum AxiomCheck {
    Verified,
    Violated(AxiomViolation),
    Unchecked { order: usize, cap: usize },
}

impl AxiomCheck {
    pub fn is_verified(&self) -> bool {
        matches!(self, AxiomCheck::Verified)
    }
}

/// Exhaustive check of the unital ring axioms on raw arithmetic. Returns
/// [`AxiomCheck::Unchecked`] when `order > cap`.
pub fn verify_arithmetic(arith: &dyn RingArithmetic, cap: usize) -> AxiomCheck {
    let n = arith.order();
    if n > cap {
        return AxiomCheck::Unchecked { order: n, cap };
    }
    let fail = |law, elements: Vec<Elem>| AxiomCheck::Violated(AxiomViolation { law, elements });
    let (zero, one) = (arith.zero(), arith.one());
    if zero >= n || one >= n {
        return fail(Law::Closure, vec![zero, one]);
    }
    if zero == one {
        return fail(Law::NonTrivial, vec![zero]);
    }
    // Closure first.
    for a in 0..n {
        if arith.neg(a) >= n {
            return fail(Law::Closure, vec![a]);
        }
        for b in 0..n {
            if arith.add(a, b) >= n || arith.mul(a, b) >= n {
                return fail(Law::Closure, vec![a, b]);
            }
        }
    }
    for a in 0..n {
        if arith.add(a, zero) != a || arith.add(zero, a) != a {
            return fail(Law::AdditiveIdentity, vec![a]);
        }
        if arith.add(a, arith.neg(a)) != zero {
            return fail(Law::AdditiveInverse, vec![a]);
        }
        if arith.mul(a, one) != a || arith.mul(one, a) != a {
            return fail(Law::MultiplicativeIdentity, vec![a]);
        }
        for b in 0..n {
            if arith.add(a, b) != arith.add(b, a) {
                return fail(Law::AdditiveCommutativity, vec![a, b]);
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            let ij_add = arith.add(i, j);
            let ij_mul = arith.mul(i, j);
            for k in 0..n {
                if arith.add(ij_add, k) != arith.add(i, arith.add(j, k)) {
                    return fail(Law::AdditiveAssociativity, vec![i, j, k]);
                }
                if arith.mul(ij_mul, k) != arith.mul(i, arith.mul(j, k)) {
                    return fail(Law::MultiplicativeAssociativity, vec![i, j, k]);
                }
                if arith.mul(i, arith.add(j, k)) != arith.add(ij_mul, arith.mul(i, k)) {
                    return fail(Law::LeftDistributivity, vec![i, j, k]);
                }
                if arith.mul(ij_add, k) != arith.add(arith.mul(i, k), arith.mul(j, k)) {
                    return fail(Law::RightDistributivity, vec![i, j, k]);
                }
            }
        }
    }
    AxiomCheck::Verified
}

struct RingView<'a>(&'a FiniteRing);

impl RingArithmetic for RingView<'_> {
    fn order(&self) -> usize {
        self.0.order()
    }
    fn zero(&self) -> Elem {
        self.0.zero()
    }
    fn one(&self) -> Elem {
        self.0.one()
    }
    fn add(&self, a: Elem, b: Elem) -> Elem {
        self.0.add(a, b)
    }
    fn neg(&self, a: Elem) -> Elem {
        self.0.neg(a)
    }
    fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.0.mul(a, b)
    }
    fn label(&self, a: Elem) -> String {
        self.0.label(a)
    }
    fn coords(&self) -> &CoordSpace {
        self.0.coords()
    }
}

/// [`verify_arithmetic`] on a realized ring.
pub fn verify_axioms(ring: &FiniteRing, cap: usize) -> AxiomCheck {
    verify_arithmetic(&RingView(ring), cap)
}
