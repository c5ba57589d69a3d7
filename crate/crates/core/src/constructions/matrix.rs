//! Subrings of `M_n(R)` described by which entries are free.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use smallvec::SmallVec;

use super::BuildOptions;
use crate::coords::{CoordSpace, Coords};
use crate::descriptor::{MatrixFamily, RingDescriptor};
use crate::error::BuildError;
use crate::ring::{Elem, FiniteRing, RingArithmetic};

type Entries = SmallVec<[Elem; 16]>;

/// Which matrix entries carry which coordinate.
///
/// Coordinate `k` is written to every position in `groups[k]`; positions in
/// no group are zero. `derived` adds the two diagonal entries of `H_(s,t)`:
/// `d = a - s c` and `f = d - t e`.
struct Shape {
    n: usize,
    groups: Vec<Vec<(usize, usize)>>,
    derived: Option<(Elem, Elem)>,
}

impl Shape {
    fn free_positions(&self) -> Vec<bool> {
        let mut free = vec![false; self.n * self.n];
        for g in &self.groups {
            for &(i, j) in g {
                free[i * self.n + j] = true;
            }
        }
        if self.derived.is_some() {
            free[4] = true;
            free[8] = true;
        }
        free
    }
}

struct MatrixArith {
    base: FiniteRing,
    shape: Shape,
    space: CoordSpace,
    /// Positions that are not forced to zero.
    free: Vec<bool>,
    zero: Elem,
    one: Elem,
}

impl MatrixArith {
    fn new(base: FiniteRing, shape: Shape, names: Vec<String>, alphabets: Vec<Vec<Elem>>) -> Self {
        let space = CoordSpace::new(names.into_iter().zip(alphabets));
        let free = shape.free_positions();
        let mut arith = MatrixArith {
            base,
            shape,
            space,
            free,
            zero: 0,
            one: 0,
        };
        let n = arith.shape.n;
        let zero_m: Entries = std::iter::repeat_n(arith.base.zero(), n * n).collect();
        let mut one_m = zero_m.clone();
        for i in 0..n {
            one_m[i * n + i] = arith.base.one();
        }
        arith.zero = arith
            .extract(&zero_m)
            .expect("zero matrix lies in the subring");
        arith.one = arith
            .extract(&one_m)
            .expect("identity matrix lies in the subring");
        arith
    }

    fn fill(&self, a: Elem) -> Entries {
        let n = self.shape.n;
        let coords = self.space.decode(a);
        let mut m: Entries = std::iter::repeat_n(self.base.zero(), n * n).collect();
        for (k, g) in self.shape.groups.iter().enumerate() {
            for &(i, j) in g {
                m[i * n + j] = coords[k];
            }
        }
        if let Some((s, t)) = self.shape.derived {
            let b = &self.base;
            let d = b.sub(m[0], b.mul(s, m[3]));
            m[4] = d;
            m[8] = b.sub(d, b.mul(t, m[5]));
        }
        m
    }

    /// Index of a matrix in the subring, `None` if it is not a member.
    fn extract(&self, m: &[Elem]) -> Option<Elem> {
        let n = self.shape.n;
        let zero = self.base.zero();
        if m.iter()
            .zip(&self.free)
            .any(|(&v, &free)| !free && v != zero)
        {
            return None;
        }
        let mut coords = Coords::new();
        for g in &self.shape.groups {
            let (i0, j0) = g[0];
            let v = m[i0 * n + j0];
            if g.iter().any(|&(i, j)| m[i * n + j] != v) {
                return None;
            }
            coords.push(v);
        }
        let index = self.space.encode(&coords)?;
        if self.shape.derived.is_some() && self.fill(index).as_slice() != m {
            return None;
        }
        Some(index)
    }

    fn product(&self, x: &[Elem], y: &[Elem]) -> Entries {
        let n = self.shape.n;
        let b = &self.base;
        let mut out: Entries = SmallVec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = b.zero();
                for k in 0..n {
                    acc = b.add(acc, b.mul(x[i * n + k], y[k * n + j]));
                }
                out.push(acc);
            }
        }
        out
    }

    fn entrywise(&self, a: Elem, b: Elem, op: impl Fn(Elem, Elem) -> Elem) -> Elem {
        let (x, y) = (self.fill(a), self.fill(b));
        let z: Entries = x.iter().zip(&y).map(|(&p, &q)| op(p, q)).collect();
        self.extract(&z).expect("subring is closed under addition")
    }
}

impl RingArithmetic for MatrixArith {
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
        self.entrywise(a, b, |p, q| self.base.add(p, q))
    }
    fn neg(&self, a: Elem) -> Elem {
        let z: Entries = self.fill(a).iter().map(|&p| self.base.neg(p)).collect();
        self.extract(&z).expect("subring is closed under negation")
    }
    fn mul(&self, a: Elem, b: Elem) -> Elem {
        let z = self.product(&self.fill(a), &self.fill(b));
        self.extract(&z)
            .expect("subring is closed under multiplication")
    }
    fn label(&self, a: Elem) -> String {
        render_matrix(&self.base, self.shape.n, &self.fill(a))
    }
    fn coords(&self) -> &CoordSpace {
        &self.space
    }
}

pub(crate) fn render_matrix(base: &FiniteRing, n: usize, m: &[Elem]) -> String {
    let rows: Vec<String> = (0..n)
        .map(|i| {
            let cells: Vec<String> = (0..n).map(|j| base.label(m[i * n + j])).collect();
            format!("[{}]", cells.join(","))
        })
        .collect();
    format!("[{}]", rows.join(","))
}

fn entry_name(i: usize, j: usize) -> String {
    format!("a{}{}", i + 1, j + 1)
}

pub(super) fn build_family(
    family: MatrixFamily,
    base: FiniteRing,
    n: usize,
    descriptor: RingDescriptor,
    opts: &BuildOptions,
) -> Result<FiniteRing, BuildError> {
    if n < 2 {
        return Err(BuildError::InvalidParameter(format!(
            "matrix size must be >= 2, got {n}"
        )));
    }
    let (names, groups): (Vec<String>, Vec<Vec<(usize, usize)>>) = match family {
        MatrixFamily::Mn => (0..n)
            .flat_map(|i| (0..n).map(move |j| (entry_name(i, j), vec![(i, j)])))
            .unzip(),
        MatrixFamily::Un => (0..n)
            .flat_map(|i| (i..n).map(move |j| (entry_name(i, j), vec![(i, j)])))
            .unzip(),
        MatrixFamily::Dn => std::iter::once(("d".to_string(), (0..n).map(|i| (i, i)).collect()))
            .chain((0..n).flat_map(|i| (i + 1..n).map(move |j| (entry_name(i, j), vec![(i, j)]))))
            .unzip(),
        MatrixFamily::Vn => (0..n)
            .map(|k| (format!("v{k}"), (0..n - k).map(|i| (i, i + k)).collect()))
            .unzip(),
    };
    opts.admit(CoordSpace::predicted_order(
        groups.iter().map(|_| base.order()),
    ))?;
    let alphabets = vec![base.elements().collect(); groups.len()];
    let arith = MatrixArith::new(
        base.clone(),
        Shape {
            n,
            groups,
            derived: None,
        },
        names,
        alphabets,
    );
    Ok(FiniteRing::new(arith, descriptor, vec![base]))
}

fn require_central(base: &FiniteRing, param: &'static str, x: Elem) -> Result<(), BuildError> {
    if base.center().contains(x) {
        Ok(())
    } else {
        Err(BuildError::NonCentral {
            param,
            label: base.label(x),
        })
    }
}

pub(super) fn build_lst(
    base: FiniteRing,
    s: Elem,
    t: Elem,
    descriptor: RingDescriptor,
    opts: &BuildOptions,
) -> Result<FiniteRing, BuildError> {
    require_central(&base, "s", s)?;
    require_central(&base, "t", t)?;
    let ideal = |x: Elem| -> Vec<Elem> {
        let mut v: Vec<Elem> = base.elements().map(|r| base.mul(x, r)).collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    let full: Vec<Elem> = base.elements().collect();
    let alphabets = vec![full.clone(), ideal(s), full.clone(), ideal(t), full];
    opts.admit(CoordSpace::predicted_order(alphabets.iter().map(Vec::len)))?;
    let names = ["a", "sc", "d", "te", "f"].map(String::from).to_vec();
    let groups = vec![
        vec![(0, 0)],
        vec![(1, 0)],
        vec![(1, 1)],
        vec![(1, 2)],
        vec![(2, 2)],
    ];
    let arith = MatrixArith::new(
        base.clone(),
        Shape {
            n: 3,
            groups,
            derived: None,
        },
        names,
        alphabets,
    );
    Ok(FiniteRing::new(arith, descriptor, vec![base]))
}

pub(super) fn build_hst(
    base: FiniteRing,
    s: Elem,
    t: Elem,
    descriptor: RingDescriptor,
    opts: &BuildOptions,
) -> Result<FiniteRing, BuildError> {
    for (param, x) in [("s", s), ("t", t)] {
        require_central(&base, param, x)?;
        if !base.is_unit(x) {
            return Err(BuildError::NotAUnit {
                param,
                label: base.label(x),
            });
        }
    }
    opts.admit(CoordSpace::predicted_order([base.order(); 3]))?;
    let names = ["a", "c", "e"].map(String::from).to_vec();
    let groups = vec![vec![(0, 0)], vec![(1, 0)], vec![(1, 2)]];
    let alphabets = vec![base.elements().collect(); 3];
    let arith = MatrixArith::new(
        base.clone(),
        Shape {
            n: 3,
            groups,
            derived: Some((s, t)),
        },
        names,
        alphabets,
    );
    check_closure(&arith)?;
    Ok(FiniteRing::new(arith, descriptor, vec![base]))
}

/// Multiplicative closure on all pairs for small rings, otherwise on the
/// coordinate generators plus a seeded random sample.
fn check_closure(arith: &MatrixArith) -> Result<(), BuildError> {
    const EXHAUSTIVE_PAIRS: usize = 1 << 20;
    const SAMPLE: usize = 4096;
    let n = arith.order();
    let in_ring = |a: Elem, b: Elem| {
        arith
            .extract(&arith.product(&arith.fill(a), &arith.fill(b)))
            .is_some()
    };
    let fail = |a: Elem, b: Elem| {
        Err(BuildError::NotClosed(format!(
            "{} * {}",
            arith.label(a),
            arith.label(b)
        )))
    };
    if n.saturating_mul(n) <= EXHAUSTIVE_PAIRS {
        for a in 0..n {
            for b in 0..n {
                if !in_ring(a, b) {
                    return fail(a, b);
                }
            }
        }
        return Ok(());
    }
    let one = arith.base.one();
    let generators: Vec<Elem> = (0..arith.space.len())
        .filter_map(|k| {
            let mut c: Coords = (0..arith.space.len()).map(|_| arith.base.zero()).collect();
            c[k] = one;
            arith.space.encode(&c)
        })
        .collect();
    for &a in &generators {
        for &b in &generators {
            if !in_ring(a, b) {
                return fail(a, b);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..SAMPLE {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if !in_ring(a, b) {
            return fail(a, b);
        }
    }
    Ok(())
}

pub(super) fn build_d3_pattern(
    base: FiniteRing,
    descriptor: RingDescriptor,
    opts: &BuildOptions,
) -> Result<FiniteRing, BuildError> {
    opts.admit(CoordSpace::predicted_order([base.order(); 3]))?;
    let names = ["a", "b", "c"].map(String::from).to_vec();
    let groups = vec![vec![(0, 0), (1, 1), (2, 2)], vec![(0, 1)], vec![(0, 2)]];
    let alphabets = vec![base.elements().collect(); 3];
    let arith = MatrixArith::new(
        base.clone(),
        Shape {
            n: 3,
            groups,
            derived: None,
        },
        names,
        alphabets,
    );
    Ok(FiniteRing::new(arith, descriptor, vec![base]))
}

/// Full `n x n` entry array of a matrix-shaped element, row-major, as base
/// elements. `None` for rings that are not matrix subrings.
pub fn matrix_entries(ring: &FiniteRing, a: Elem) -> Option<(usize, Vec<Elem>)> {
    let base = ring.parts().first()?;
    let c = ring.decode(a);
    let z = base.zero();
    let (n, m) = match ring.descriptor() {
        RingDescriptor::Matrix { family, n, .. } => {
            let n = *n;
            let mut m = vec![z; n * n];
            let mut k = 0;
            match family {
                MatrixFamily::Mn => m.copy_from_slice(&c),
                MatrixFamily::Un => {
                    for i in 0..n {
                        for j in i..n {
                            m[i * n + j] = c[k];
                            k += 1;
                        }
                    }
                }
                MatrixFamily::Dn => {
                    for i in 0..n {
                        m[i * n + i] = c[0];
                    }
                    k = 1;
                    for i in 0..n {
                        for j in i + 1..n {
                            m[i * n + j] = c[k];
                            k += 1;
                        }
                    }
                }
                MatrixFamily::Vn => {
                    for (d, &v) in c.iter().enumerate() {
                        for i in 0..n - d {
                            m[i * n + i + d] = v;
                        }
                    }
                }
            }
            (n, m)
        }
        RingDescriptor::Lst { .. } => (3, vec![c[0], z, z, c[1], c[2], c[3], z, z, c[4]]),
        RingDescriptor::Hst { .. } => {
            let (s, t) = hst_params(ring)?;
            let d = base.sub(c[0], base.mul(s, c[1]));
            let f = base.sub(d, base.mul(t, c[2]));
            (3, vec![c[0], z, z, c[1], d, c[2], z, z, f])
        }
        RingDescriptor::D3Pattern { .. } => (3, vec![c[0], c[1], c[2], z, c[0], z, z, z, c[0]]),
        RingDescriptor::Ks { .. } => (2, c.to_vec()),
        _ => return None,
    };
    Some((n, m))
}

/// Element of a matrix-shaped ring with the given row-major entries.
pub fn from_matrix_entries(ring: &FiniteRing, m: &[Elem]) -> Option<Elem> {
    (0..ring.order()).find(|&a| matrix_entries(ring, a).is_some_and(|(_, e)| e == m))
}

fn hst_params(ring: &FiniteRing) -> Option<(Elem, Elem)> {
    let RingDescriptor::Hst { s, t, .. } = ring.descriptor() else {
        return None;
    };
    let base = ring.part(0);
    Some((base.resolve(s).ok()?, base.resolve(t).ok()?))
}
