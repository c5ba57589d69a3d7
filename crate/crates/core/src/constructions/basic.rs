use super::BuildOptions;
use crate::coords::{CoordSpace, Coords};
use crate::descriptor::RingDescriptor;
use crate::error::BuildError;
use crate::ring::{verify_arithmetic, AxiomCheck, Elem, FiniteRing, RingArithmetic};

// ---- Z_n -----------------------------------------------------------------

struct Zn {
    n: usize,
    space: CoordSpace,
}

impl RingArithmetic for Zn {
    fn order(&self) -> usize {
        self.n
    }
    fn zero(&self) -> Elem {
        0
    }
    fn one(&self) -> Elem {
        1
    }
    fn add(&self, a: Elem, b: Elem) -> Elem {
        (a + b) % self.n
    }
    fn neg(&self, a: Elem) -> Elem {
        (self.n - a) % self.n
    }
    fn mul(&self, a: Elem, b: Elem) -> Elem {
        ((a as u128 * b as u128) % self.n as u128) as Elem
    }
    fn label(&self, a: Elem) -> String {
        a.to_string()
    }
    fn coords(&self) -> &CoordSpace {
        &self.space
    }
}

pub(super) fn build_zn(n: usize, opts: &BuildOptions) -> Result<FiniteRing, BuildError> {
    if n < 2 {
        return Err(BuildError::InvalidParameter(format!(
            "Z_n needs n >= 2, got {n}"
        )));
    }
    opts.admit(Some(n))?;
    let space = CoordSpace::uniform(["r"], n);
    Ok(FiniteRing::new(
        Zn { n, space },
        RingDescriptor::zn(n),
        Vec::new(),
    ))
}

// ---- componentwise rings: products and T[R,S] truncations ---------------

enum LabelStyle {
    Tuple,
    /// `(r_1, ..., r_n, s, s, ...)`
    Sequence,
}

struct Componentwise {
    factors: Vec<FiniteRing>,
    space: CoordSpace,
    zero: Elem,
    one: Elem,
    style: LabelStyle,
}

impl Componentwise {
    fn new(factors: Vec<FiniteRing>, names: Vec<String>, style: LabelStyle) -> Self {
        let space = CoordSpace::new(
            names
                .into_iter()
                .zip(factors.iter().map(|f| f.elements().collect())),
        );
        let zeros: Vec<Elem> = factors.iter().map(|f| f.zero()).collect();
        let ones: Vec<Elem> = factors.iter().map(|f| f.one()).collect();
        let zero = space.encode(&zeros).unwrap();
        let one = space.encode(&ones).unwrap();
        Componentwise {
            factors,
            space,
            zero,
            one,
            style,
        }
    }

    #[inline]
    fn zip(&self, a: Elem, b: Elem, op: impl Fn(&FiniteRing, Elem, Elem) -> Elem) -> Elem {
        let (x, y) = (self.space.decode(a), self.space.decode(b));
        let out: Coords = self
            .factors
            .iter()
            .enumerate()
            .map(|(i, f)| op(f, x[i], y[i]))
            .collect();
        self.space.encode(&out).unwrap()
    }
}

impl RingArithmetic for Componentwise {
    fn order(&self) -> usize {
        self.space.order()
    }
    fn zero(&self) -> Elem {
        self.zero
    }
    fn one(&self) -> Elem {
        self.one
    }
    fn add(&self, a: Elem, b: Elem) -> Elem {
        self.zip(a, b, |f, x, y| f.add(x, y))
    }
    fn neg(&self, a: Elem) -> Elem {
        let x = self.space.decode(a);
        let out: Coords = self
            .factors
            .iter()
            .enumerate()
            .map(|(i, f)| f.neg(x[i]))
            .collect();
        self.space.encode(&out).unwrap()
    }
    fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.zip(a, b, |f, x, y| f.mul(x, y))
    }
    fn label(&self, a: Elem) -> String {
        let x = self.space.decode(a);
        let labels: Vec<String> = self
            .factors
            .iter()
            .enumerate()
            .map(|(i, f)| f.label(x[i]))
            .collect();
        match self.style {
            LabelStyle::Tuple => format!("({})", labels.join(", ")),
            LabelStyle::Sequence => {
                let s = labels.last().unwrap();
                format!("({}, {s}, ...)", labels.join(", "))
            }
        }
    }
    fn coords(&self) -> &CoordSpace {
        &self.space
    }
}

pub(super) fn build_product(
    factors: Vec<FiniteRing>,
    descriptor: RingDescriptor,
    opts: &BuildOptions,
) -> Result<FiniteRing, BuildError> {
    if factors.is_empty() {
        return Err(BuildError::InvalidParameter(
            "product needs at least one factor".into(),
        ));
    }
    opts.admit(CoordSpace::predicted_order(
        factors.iter().map(|f| f.order()),
    ))?;
    let names = (1..=factors.len()).map(|i| format!("p{i}")).collect();
    let arith = Componentwise::new(factors.clone(), names, LabelStyle::Tuple);
    Ok(FiniteRing::new(arith, descriptor, factors))
}

pub(super) fn build_t_trunc(
    r: FiniteRing,
    s: FiniteRing,
    n: usize,
    descriptor: RingDescriptor,
    opts: &BuildOptions,
) -> Result<FiniteRing, BuildError> {
    if n < 1 {
        return Err(BuildError::InvalidParameter(
            "T[R,S] truncation level must be >= 1".into(),
        ));
    }
    opts.admit(CoordSpace::predicted_order(
        std::iter::repeat_n(r.order(), n).chain([s.order()]),
    ))?;
    let mut factors = vec![r.clone(); n];
    factors.push(s.clone());
    let mut names: Vec<String> = (1..=n).map(|i| format!("r{i}")).collect();
    names.push("s".into());
    let arith = Componentwise::new(factors, names, LabelStyle::Sequence);
    let notes = vec![format!(
        "level-{n} truncation of eventually-constant sequences, realized as R^{n} x S"
    )];
    Ok(FiniteRing::with_notes(arith, descriptor, vec![r, s], notes))
}

/// Checks that `table` is an injective unital ring homomorphism `S -> R`.
pub(super) fn validate_embedding(
    s: &FiniteRing,
    r: &FiniteRing,
    table: &[Elem],
) -> Result<(), BuildError> {
    let fail = |m: String| Err(BuildError::NotEmbedding(m));
    if table.len() != s.order() {
        return fail(format!(
            "table has {} entries, S has {} elements",
            table.len(),
            s.order()
        ));
    }
    if let Some(&bad) = table.iter().find(|&&v| v >= r.order()) {
        return fail(format!("image {bad} is outside R"));
    }
    let mut seen = vec![false; r.order()];
    for &v in table {
        if std::mem::replace(&mut seen[v], true) {
            return fail(format!("image {} is hit twice", r.label(v)));
        }
    }
    if table[s.one()] != r.one() {
        return fail("identity is not preserved".into());
    }
    for a in s.elements() {
        for b in s.elements() {
            if table[s.add(a, b)] != r.add(table[a], table[b])
                || table[s.mul(a, b)] != r.mul(table[a], table[b])
            {
                return fail(format!(
                    "operations not preserved at ({}, {})",
                    s.label(a),
                    s.label(b)
                ));
            }
        }
    }
    Ok(())
}

// ---- corner rings ----------------------------------------------------------

struct Corner {
    base: FiniteRing,
    space: CoordSpace,
    one: Elem,
    zero: Elem,
}

impl Corner {
    #[inline]
    fn lift(&self, a: Elem) -> Elem {
        self.space.decode(a)[0]
    }
    #[inline]
    fn lower(&self, x: Elem) -> Elem {
        self.space.encode(&[x]).expect("corner is closed")
    }
}

impl RingArithmetic for Corner {
    fn order(&self) -> usize {
        self.space.order()
    }
    fn zero(&self) -> Elem {
        self.zero
    }
    fn one(&self) -> Elem {
        self.one
    }
    fn add(&self, a: Elem, b: Elem) -> Elem {
        self.lower(self.base.add(self.lift(a), self.lift(b)))
    }
    fn neg(&self, a: Elem) -> Elem {
        self.lower(self.base.neg(self.lift(a)))
    }
    fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.lower(self.base.mul(self.lift(a), self.lift(b)))
    }
    fn label(&self, a: Elem) -> String {
        self.base.label(self.lift(a))
    }
    fn coords(&self) -> &CoordSpace {
        &self.space
    }
}

pub(super) fn build_corner(
    base: FiniteRing,
    e: Elem,
    descriptor: RingDescriptor,
    opts: &BuildOptions,
) -> Result<FiniteRing, BuildError> {
    if base.mul(e, e) != e {
        return Err(BuildError::NotIdempotent {
            label: base.label(e),
        });
    }
    if e == base.zero() {
        return Err(BuildError::TrivialCorner {
            label: base.label(e),
        });
    }
    let members: Vec<Elem> = base
        .elements()
        .map(|a| base.mul(base.mul(e, a), e))
        .collect();
    let space = CoordSpace::new([("x".to_string(), members)]);
    opts.admit(Some(space.order()))?;
    let one = space.encode(&[e]).unwrap();
    let zero = space.encode(&[base.zero()]).unwrap();
    let arith = Corner {
        base: base.clone(),
        space,
        one,
        zero,
    };
    Ok(FiniteRing::new(arith, descriptor, vec![base]))
}

/// Base-ring indexes of the members of a corner ring, in corner index order.
pub fn corner_members(corner: &FiniteRing) -> Vec<Elem> {
    corner.coords().alphabet(0).to_vec()
}

// ---- the 16-element local ring --------------------------------------------

/// `a + bx + cy` with `a` in `Z_4`, `b, c` in `Z_2`.
struct XuxuLocal16 {
    space: CoordSpace,
}

impl XuxuLocal16 {
    #[inline]
    fn parts(a: Elem) -> (usize, usize, usize) {
        (a % 4, (a / 4) % 2, a / 8)
    }
    #[inline]
    fn pack(a: usize, b: usize, c: usize) -> Elem {
        (a % 4) + 4 * (b % 2) + 8 * (c % 2)
    }
}

impl RingArithmetic for XuxuLocal16 {
    fn order(&self) -> usize {
        16
    }
    fn zero(&self) -> Elem {
        0
    }
    fn one(&self) -> Elem {
        1
    }
    fn add(&self, p: Elem, q: Elem) -> Elem {
        let ((a, b, c), (a2, b2, c2)) = (Self::parts(p), Self::parts(q));
        Self::pack(a + a2, b + b2, c + c2)
    }
    fn neg(&self, p: Elem) -> Elem {
        let (a, b, c) = Self::parts(p);
        Self::pack(4 - a, b, c)
    }
    fn mul(&self, p: Elem, q: Elem) -> Elem {
        // x^2 = xy = 2, yx = y^2 = 0, 2x = 2y = 0
        let ((a, b, c), (a2, b2, c2)) = (Self::parts(p), Self::parts(q));
        Self::pack(
            a * a2 + 2 * b * b2 + 2 * b * c2,
            a * b2 + a2 * b,
            a * c2 + a2 * c,
        )
    }
    fn label(&self, p: Elem) -> String {
        let (a, b, c) = Self::parts(p);
        let mut terms = Vec::new();
        if a != 0 {
            terms.push(a.to_string());
        }
        if b != 0 {
            terms.push("x".to_string());
        }
        if c != 0 {
            terms.push("y".to_string());
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join("+")
        }
    }
    fn coords(&self) -> &CoordSpace {
        &self.space
    }
}

pub(super) fn build_xuxu_local16() -> FiniteRing {
    let space = CoordSpace::new([
        ("a".to_string(), (0..4).collect()),
        ("b".to_string(), vec![0, 1]),
        ("c".to_string(), vec![0, 1]),
    ]);
    FiniteRing::new(
        XuxuLocal16 { space },
        RingDescriptor::XuxuLocal16,
        Vec::new(),
    )
}

// ---- explicit tables --------------------------------------------------------

struct TableArith {
    n: usize,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    zero: Elem,
    one: Elem,
    space: CoordSpace,
}

impl RingArithmetic for TableArith {
    fn order(&self) -> usize {
        self.n
    }
    fn zero(&self) -> Elem {
        self.zero
    }
    fn one(&self) -> Elem {
        self.one
    }
    fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a * self.n + b]
    }
    fn neg(&self, a: Elem) -> Elem {
        self.neg[a]
    }
    fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a * self.n + b]
    }
    fn label(&self, a: Elem) -> String {
        a.to_string()
    }
    fn coords(&self) -> &CoordSpace {
        &self.space
    }
}

pub(super) fn build_table(
    add: &[Vec<usize>],
    mul: &[Vec<usize>],
    zero: Elem,
    one: Elem,
    descriptor: RingDescriptor,
    opts: &BuildOptions,
) -> Result<FiniteRing, BuildError> {
    let n = add.len();
    opts.admit(Some(n))?;
    let bad = |m: String| Err(BuildError::BadTable(m));
    if n == 0 || mul.len() != n || add.iter().chain(mul).any(|row| row.len() != n) {
        return bad(format!("tables must both be {n}x{n}"));
    }
    if zero >= n || one >= n {
        return bad("zero/one index out of range".into());
    }
    if let Some(v) = add.iter().chain(mul).flatten().find(|&&v| v >= n) {
        return bad(format!("entry {v} out of range"));
    }
    let flat_add: Vec<Elem> = add.iter().flatten().copied().collect();
    let neg = (0..n)
        .map(|a| (0..n).find(|&b| flat_add[a * n + b] == zero))
        .collect::<Option<Vec<_>>>();
    let Some(neg) = neg else {
        return bad("some element has no additive inverse".into());
    };
    let arith = TableArith {
        n,
        add: flat_add,
        mul: mul.iter().flatten().copied().collect(),
        neg,
        zero,
        one,
        space: CoordSpace::uniform(["i"], n),
    };
    match verify_arithmetic(&arith, usize::MAX) {
        AxiomCheck::Verified => Ok(FiniteRing::new(arith, descriptor, Vec::new())),
        AxiomCheck::Violated(v) => Err(BuildError::Axioms(v)),
        AxiomCheck::Unchecked { order, cap } => Err(BuildError::Unchecked { order, cap }),
    }
}

/// Exports the Cayley tables of a ring as a table descriptor.
pub fn table_descriptor(ring: &FiniteRing) -> RingDescriptor {
    let rows = |op: &dyn Fn(Elem, Elem) -> Elem| -> Vec<Vec<usize>> {
        ring.elements()
            .map(|a| ring.elements().map(|b| op(a, b)).collect())
            .collect()
    };
    RingDescriptor::Table {
        add: rows(&|a, b| ring.add(a, b)),
        mul: rows(&|a, b| ring.mul(a, b)),
        zero: ring.zero(),
        one: ring.one(),
    }
}
