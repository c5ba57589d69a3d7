//! Truncated skew Hurwitz series and skew power series.
//!
//! Elements are coefficient vectors `(a_0, ..., a_k)`; everything of degree
//! above `k` is discarded. Products:
//!
//! * Hurwitz: `c_n = sum_{i=0..n} C(n, i) a_i alpha^i(b_{n-i})`
//! * power series: `c_n = sum_{i=0..n} a_i alpha^i(b_{n-i})`

use super::{atom, BuildOptions};
use crate::coords::{CoordSpace, Coords};
use crate::descriptor::RingDescriptor;
use crate::error::BuildError;
use crate::ring::{Elem, FiniteRing, RingArithmetic};

/// Checks that `table` is a unital ring endomorphism of `base`.
pub fn validate_endomorphism(base: &FiniteRing, table: &[Elem]) -> Result<(), BuildError> {
    let fail = |m: String| Err(BuildError::NotEndomorphism(m));
    if table.len() != base.order() {
        return fail(format!(
            "table has {} entries, ring has {} elements",
            table.len(),
            base.order()
        ));
    }
    if let Some(&v) = table.iter().find(|&&v| v >= base.order()) {
        return fail(format!("image {v} is outside the ring"));
    }
    if table[base.zero()] != base.zero() || table[base.one()] != base.one() {
        return fail("0 and 1 must be fixed".into());
    }
    for a in base.elements() {
        for b in base.elements() {
            if table[base.add(a, b)] != base.add(table[a], table[b]) {
                return fail(format!(
                    "addition not preserved at ({}, {})",
                    base.label(a),
                    base.label(b)
                ));
            }
            if table[base.mul(a, b)] != base.mul(table[a], table[b]) {
                return fail(format!(
                    "multiplication not preserved at ({}, {})",
                    base.label(a),
                    base.label(b)
                ));
            }
        }
    }
    Ok(())
}

struct Series {
    base: FiniteRing,
    /// `alpha^i` for `i = 0..=degree`.
    alpha_powers: Vec<Vec<Elem>>,
    /// `weights[n][i]` multiplies `a_i alpha^i(b_{n-i})`.
    weights: Vec<Vec<u64>>,
    space: CoordSpace,
    zero: Elem,
    one: Elem,
}

impl RingArithmetic for Series {
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
        let (f, g) = (self.space.decode(p), self.space.decode(q));
        let h: Coords = f
            .iter()
            .zip(&g)
            .map(|(&x, &y)| self.base.add(x, y))
            .collect();
        self.space.encode(&h).unwrap()
    }
    fn neg(&self, p: Elem) -> Elem {
        let h: Coords = self
            .space
            .decode(p)
            .iter()
            .map(|&x| self.base.neg(x))
            .collect();
        self.space.encode(&h).unwrap()
    }
    fn mul(&self, p: Elem, q: Elem) -> Elem {
        let r = &self.base;
        let (f, g) = (self.space.decode(p), self.space.decode(q));
        let h: Coords = (0..f.len())
            .map(|n| {
                (0..=n).fold(r.zero(), |acc, i| {
                    let term = r.mul(f[i], self.alpha_powers[i][g[n - i]]);
                    r.add(acc, r.times(self.weights[n][i], term))
                })
            })
            .collect();
        self.space.encode(&h).unwrap()
    }
    fn label(&self, p: Elem) -> String {
        let f = self.space.decode(p);
        let terms: Vec<String> = f
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c != self.base.zero())
            .map(|(i, &c)| {
                let coeff = atom(self.base.label(c));
                let one = c == self.base.one();
                match (i, one) {
                    (0, _) => coeff,
                    (1, true) => "x".to_string(),
                    (1, false) => format!("{coeff}x"),
                    (_, true) => format!("x^{i}"),
                    (_, false) => format!("{coeff}x^{i}"),
                }
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }
    fn coords(&self) -> &CoordSpace {
        &self.space
    }
}

fn binomial_rows(degree: usize) -> Vec<Vec<u64>> {
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(degree + 1);
    for n in 0..=degree {
        let mut row = vec![1u64; n + 1];
        for i in 1..n {
            row[i] = rows[n - 1][i - 1] + rows[n - 1][i];
        }
        rows.push(row);
    }
    rows
}

pub(super) fn build_series(
    base: FiniteRing,
    alpha: Vec<Elem>,
    degree: usize,
    hurwitz: bool,
    descriptor: RingDescriptor,
    opts: &BuildOptions,
) -> Result<FiniteRing, BuildError> {
    opts.admit(CoordSpace::predicted_order(std::iter::repeat_n(
        base.order(),
        degree + 1,
    )))?;
    let mut alpha_powers: Vec<Vec<Elem>> = vec![base.elements().collect()];
    for i in 1..=degree {
        let prev = &alpha_powers[i - 1];
        alpha_powers.push(prev.iter().map(|&x| alpha[x]).collect());
    }
    let weights = if hurwitz {
        binomial_rows(degree)
    } else {
        (0..=degree).map(|n| vec![1; n + 1]).collect()
    };
    let space = CoordSpace::uniform((0..=degree).map(|i| format!("c{i}")), base.order());
    let mut unit: Vec<Elem> = vec![base.zero(); degree + 1];
    let zero = space.encode(&unit).unwrap();
    unit[0] = base.one();
    let one = space.encode(&unit).unwrap();
    let mut notes = Vec::new();
    if hurwitz && !alpha.iter().enumerate().all(|(i, &v)| i == v) {
        notes.push("skew Hurwitz product applies alpha^i to the right factor".to_string());
    }
    let arith = Series {
        base: base.clone(),
        alpha_powers,
        weights,
        space,
        zero,
        one,
    };
    Ok(FiniteRing::with_notes(arith, descriptor, vec![base], notes))
}

#[cfg(test)]
mod tests {
    use super::binomial_rows;

    #[test]
    fn pascal_rows() {
        assert_eq!(binomial_rows(4)[4], vec![1, 4, 6, 4, 1]);
        assert_eq!(binomial_rows(0), vec![vec![1]]);
    }
}
