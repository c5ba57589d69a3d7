//! Mixed-radix encoding between coordinate tuples and element indexes.
//!
//! Every construction describes its elements as a tuple of named
//! coordinates. Coordinate `k` takes values from an *alphabet*: an ascending
//! list of element indexes of some underlying ring (a residue for `Z_n`, a
//! base-ring element for a matrix entry, a factor element for a product).
//! The element index is the little-endian mixed-radix number whose digit `k`
//! is the position of the coordinate value inside alphabet `k`:
//!
//! ```text
//! index = d_0 + r_0 * (d_1 + r_1 * (d_2 + ...))
//! ```
//!
//! so the first coordinate varies fastest.

use smallvec::SmallVec;

use crate::ring::Elem;

/// Inline storage for one decoded coordinate tuple.
pub type Coords = SmallVec<[Elem; 16]>;

#[derive(Debug, Clone)]
struct Axis {
    name: String,
    alphabet: Vec<Elem>,
    /// value -> digit, `u32::MAX` where the value is not in the alphabet.
    digit_of: Vec<u32>,
}

#[derive(Debug, Clone)]
pub struct CoordSpace {
    axes: Vec<Axis>,
    strides: Vec<usize>,
    order: usize,
}

impl CoordSpace {
    /// Builds a space from `(name, alphabet)` pairs. Alphabets are sorted and
    /// deduplicated.
    pub fn new(axes: impl IntoIterator<Item = (String, Vec<Elem>)>) -> Self {
        let mut built = Vec::new();
        let mut strides = Vec::new();
        let mut order = 1usize;
        for (name, mut alphabet) in axes {
            alphabet.sort_unstable();
            alphabet.dedup();
            assert!(!alphabet.is_empty(), "empty alphabet for coordinate {name}");
            let top = *alphabet.last().unwrap();
            let mut digit_of = vec![u32::MAX; top + 1];
            for (d, &v) in alphabet.iter().enumerate() {
                digit_of[v] = d as u32;
            }
            strides.push(order);
            order = order
                .checked_mul(alphabet.len())
                .expect("coordinate space overflow");
            built.push(Axis {
                name,
                alphabet,
                digit_of,
            });
        }
        CoordSpace {
            axes: built,
            strides,
            order,
        }
    }

    /// Space where every coordinate ranges over `0..radix`.
    pub fn uniform<S: Into<String>>(names: impl IntoIterator<Item = S>, radix: usize) -> Self {
        Self::new(names.into_iter().map(|n| (n.into(), (0..radix).collect())))
    }

    /// Predicted number of elements for the given radices, `None` on overflow.
    pub fn predicted_order(radices: impl IntoIterator<Item = usize>) -> Option<usize> {
        radices
            .into_iter()
            .try_fold(1usize, |acc, r| acc.checked_mul(r))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.axes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.axes.is_empty()
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.axes.iter().map(|a| a.name.as_str())
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.axes.iter().position(|a| a.name == name)
    }

    pub fn alphabet(&self, axis: usize) -> &[Elem] {
        &self.axes[axis].alphabet
    }

    /// Encodes coordinate values; `None` if some value is outside its alphabet
    /// or the arity is wrong.
    pub fn encode(&self, values: &[Elem]) -> Option<Elem> {
        if values.len() != self.axes.len() {
            return None;
        }
        let mut index = 0;
        for ((axis, &stride), &v) in self.axes.iter().zip(&self.strides).zip(values) {
            let d = *axis.digit_of.get(v)?;
            if d == u32::MAX {
                return None;
            }
            index += d as usize * stride;
        }
        Some(index)
    }

    /// Decodes an element index into coordinate values.
    pub fn decode(&self, mut index: Elem) -> Coords {
        debug_assert!(index < self.order);
        let mut out = Coords::new();
        for axis in &self.axes {
            let r = axis.alphabet.len();
            out.push(axis.alphabet[index % r]);
            index /= r;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn little_endian_digits() {
        let space = CoordSpace::new([
            ("a".to_string(), (0..4).collect()),
            ("b".to_string(), vec![0, 1]),
            ("c".to_string(), vec![0, 1]),
        ]);
        assert_eq!(space.order(), 16);
        assert_eq!(space.encode(&[2, 1, 0]), Some(6));
        assert_eq!(space.decode(6).as_slice(), &[2, 1, 0]);
        assert_eq!(space.encode(&[0, 2, 0]), None);
        assert_eq!(space.encode(&[0, 1]), None);
    }

    #[test]
    fn sparse_alphabet() {
        let space = CoordSpace::new([
            ("sc".to_string(), vec![2, 0]),
            ("d".to_string(), (0..4).collect()),
        ]);
        assert_eq!(space.order(), 8);
        assert_eq!(space.encode(&[2, 3]), Some(1 + 2 * 3));
        assert_eq!(space.encode(&[1, 3]), None);
    }

    proptest! {
        #[test]
        fn decode_encode_round_trip(radices in proptest::collection::vec(1usize..6, 1..5), seed in 0usize..10_000) {
            let space = CoordSpace::new(radices.iter().enumerate().map(|(i, &r)| (format!("c{i}"), (0..r).map(|v| v * 3).collect())));
            let index = seed % space.order();
            let coords = space.decode(index);
            prop_assert_eq!(space.encode(&coords), Some(index));
        }
    }
}
