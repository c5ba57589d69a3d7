//! Serializable ring recipes.
//!
//! A descriptor names a construction and its parameters and is realized by
//! [`crate::constructions::build`]. JSON form (`schema` version
//! [`DESCRIPTOR_SCHEMA`]):
//!
//! ```json
//! {"kind": "lst", "base": {"kind": "zn", "n": 4}, "s": 1, "t": 1}
//! ```
//!
//! Element-valued parameters are [`ElementLiteral`]s in the coordinates of
//! the ring they live in.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

pub const DESCRIPTOR_SCHEMA: &str = "qnil.ring/v1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MatrixFamily {
    /// Full matrix ring `M_n`.
    Mn,
    /// Upper triangular `U_n`.
    Un,
    /// Upper triangular with equal diagonal entries `D_n`.
    Dn,
    /// Constant along every diagonal `V_n`.
    Vn,
}

impl MatrixFamily {
    pub fn symbol(self) -> &'static str {
        match self {
            MatrixFamily::Mn => "M",
            MatrixFamily::Un => "U",
            MatrixFamily::Dn => "D",
            MatrixFamily::Vn => "V",
        }
    }
}

/// A ring endomorphism given as an image table over element indexes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EndomorphismSpec {
    Named(NamedEndomorphism),
    Table(Vec<usize>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NamedEndomorphism {
    Identity,
}

impl Default for EndomorphismSpec {
    fn default() -> Self {
        EndomorphismSpec::Named(NamedEndomorphism::Identity)
    }
}

impl EndomorphismSpec {
    pub fn is_identity(&self) -> bool {
        match self {
            EndomorphismSpec::Named(NamedEndomorphism::Identity) => true,
            EndomorphismSpec::Table(t) => t.iter().enumerate().all(|(i, &v)| i == v),
        }
    }
}

/// An element written in construction-native coordinates.
///
/// * `3`: the single coordinate of a one-coordinate ring (a residue of `Z_n`)
/// * `[2, 1, 0]`: all coordinates in order
/// * `{"a": 2, "b": 1, "c": 0}`: coordinates by name
/// * `"a=2,b=1,c=0"` or `"#6"`: textual forms, the latter a raw index
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementLiteral {
    Int(u64),
    Coords(Vec<u64>),
    Named(BTreeMap<String, u64>),
    Text(String),
}

impl fmt::Display for ElementLiteral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementLiteral::Int(v) => write!(f, "{v}"),
            ElementLiteral::Coords(vs) => write!(f, "{vs:?}"),
            ElementLiteral::Named(m) => {
                let parts: Vec<String> = m.iter().map(|(k, v)| format!("{k}={v}")).collect();
                f.write_str(&parts.join(","))
            }
            ElementLiteral::Text(t) => f.write_str(t),
        }
    }
}

impl From<u64> for ElementLiteral {
    fn from(v: u64) -> Self {
        ElementLiteral::Int(v)
    }
}

fn default_zero() -> usize {
    0
}

fn default_one() -> usize {
    1
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RingDescriptor {
    /// Integers modulo `n`.
    Zn { n: usize },
    /// Finite direct product.
    Product { factors: Vec<RingDescriptor> },
    /// `M_n`, `U_n`, `D_n` or `V_n` over a base ring.
    Matrix {
        family: MatrixFamily,
        base: Box<RingDescriptor>,
        n: usize,
    },
    /// `L_(s,t)(R)`: 3x3 matrices with (2,1) entry in `sR` and (2,3) entry
    /// in `tR`, `s, t` central.
    Lst {
        base: Box<RingDescriptor>,
        s: ElementLiteral,
        t: ElementLiteral,
    },
    /// `H_(s,t)(R)`: `L`-shaped matrices with `a - d = sc`, `d - f = te`,
    /// `s, t` central units.
    Hst {
        base: Box<RingDescriptor>,
        s: ElementLiteral,
        t: ElementLiteral,
    },
    /// Generalized matrix ring `K_s(R)`.
    Ks {
        base: Box<RingDescriptor>,
        s: ElementLiteral,
    },
    /// Dorroh extension `I(R, Z_n)`.
    Dorroh {
        algebra: Box<RingDescriptor>,
        scalars: usize,
    },
    /// Skew Hurwitz series truncated above `degree`.
    Hurwitz {
        base: Box<RingDescriptor>,
        #[serde(default)]
        alpha: EndomorphismSpec,
        degree: usize,
    },
    /// Skew power series truncated above `degree`.
    SkewPower {
        base: Box<RingDescriptor>,
        #[serde(default)]
        alpha: EndomorphismSpec,
        degree: usize,
    },
    /// Level-`n` truncation `R^n x S` of the eventually-constant sequence
    /// ring `T[R, S]`. `embedding` maps `S` into `R` (identity when omitted
    /// and `S = R`).
    TTrunc {
        r: Box<RingDescriptor>,
        s: Box<RingDescriptor>,
        n: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        embedding: Option<Vec<usize>>,
    },
    /// Corner ring `eRe`.
    Corner {
        base: Box<RingDescriptor>,
        e: ElementLiteral,
    },
    /// `Z_4<x,y>/(x^3, y^2, yx, x^2 - xy, x^2 - 2, 2x, 2y)`.
    XuxuLocal16,
    /// `{[[a,b,c],[0,a,0],[0,0,a]]}` inside `D_3(R)`.
    D3Pattern { base: Box<RingDescriptor> },
    /// Explicit Cayley tables.
    Table {
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        #[serde(default = "default_zero")]
        zero: usize,
        #[serde(default = "default_one")]
        one: usize,
    },
}

impl RingDescriptor {
    pub fn zn(n: usize) -> Self {
        RingDescriptor::Zn { n }
    }

    pub fn product(factors: impl IntoIterator<Item = RingDescriptor>) -> Self {
        RingDescriptor::Product {
            factors: factors.into_iter().collect(),
        }
    }

    pub fn matrix(family: MatrixFamily, base: RingDescriptor, n: usize) -> Self {
        RingDescriptor::Matrix {
            family,
            base: Box::new(base),
            n,
        }
    }

    pub fn lst(
        base: RingDescriptor,
        s: impl Into<ElementLiteral>,
        t: impl Into<ElementLiteral>,
    ) -> Self {
        RingDescriptor::Lst {
            base: Box::new(base),
            s: s.into(),
            t: t.into(),
        }
    }

    pub fn hst(
        base: RingDescriptor,
        s: impl Into<ElementLiteral>,
        t: impl Into<ElementLiteral>,
    ) -> Self {
        RingDescriptor::Hst {
            base: Box::new(base),
            s: s.into(),
            t: t.into(),
        }
    }

    pub fn ks(base: RingDescriptor, s: impl Into<ElementLiteral>) -> Self {
        RingDescriptor::Ks {
            base: Box::new(base),
            s: s.into(),
        }
    }

    pub fn dorroh(algebra: RingDescriptor, scalars: usize) -> Self {
        RingDescriptor::Dorroh {
            algebra: Box::new(algebra),
            scalars,
        }
    }

    pub fn hurwitz(base: RingDescriptor, alpha: EndomorphismSpec, degree: usize) -> Self {
        RingDescriptor::Hurwitz {
            base: Box::new(base),
            alpha,
            degree,
        }
    }

    pub fn skew_power(base: RingDescriptor, alpha: EndomorphismSpec, degree: usize) -> Self {
        RingDescriptor::SkewPower {
            base: Box::new(base),
            alpha,
            degree,
        }
    }

    pub fn t_trunc(r: RingDescriptor, s: RingDescriptor, n: usize) -> Self {
        RingDescriptor::TTrunc {
            r: Box::new(r),
            s: Box::new(s),
            n,
            embedding: None,
        }
    }

    pub fn corner(base: RingDescriptor, e: impl Into<ElementLiteral>) -> Self {
        RingDescriptor::Corner {
            base: Box::new(base),
            e: e.into(),
        }
    }

    pub fn d3_pattern(base: RingDescriptor) -> Self {
        RingDescriptor::D3Pattern {
            base: Box::new(base),
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            RingDescriptor::Zn { .. } => "zn",
            RingDescriptor::Product { .. } => "product",
            RingDescriptor::Matrix { .. } => "matrix",
            RingDescriptor::Lst { .. } => "lst",
            RingDescriptor::Hst { .. } => "hst",
            RingDescriptor::Ks { .. } => "ks",
            RingDescriptor::Dorroh { .. } => "dorroh",
            RingDescriptor::Hurwitz { .. } => "hurwitz",
            RingDescriptor::SkewPower { .. } => "skew_power",
            RingDescriptor::TTrunc { .. } => "t_trunc",
            RingDescriptor::Corner { .. } => "corner",
            RingDescriptor::XuxuLocal16 => "xuxu_local16",
            RingDescriptor::D3Pattern { .. } => "d3_pattern",
            RingDescriptor::Table { .. } => "table",
        }
    }

    /// Short mathematical name, e.g. `L_(1,1)(Z_4)`.
    pub fn display_name(&self) -> String {
        match self {
            RingDescriptor::Zn { n } => format!("Z_{n}"),
            RingDescriptor::Product { factors } => factors
                .iter()
                .map(|f| wrap(f.display_name()))
                .collect::<Vec<_>>()
                .join(" x "),
            RingDescriptor::Matrix { family, base, n } => {
                format!("{}_{}({})", family.symbol(), n, base.display_name())
            }
            RingDescriptor::Lst { base, s, t } => format!("L_({s},{t})({})", base.display_name()),
            RingDescriptor::Hst { base, s, t } => format!("H_({s},{t})({})", base.display_name()),
            RingDescriptor::Ks { base, s } => format!("K_{s}({})", base.display_name()),
            RingDescriptor::Dorroh { algebra, scalars } => {
                format!("I({}, Z_{scalars})", algebra.display_name())
            }
            RingDescriptor::Hurwitz {
                base,
                alpha,
                degree,
            } => {
                format!(
                    "HurwitzTrunc({}, {}, {degree})",
                    base.display_name(),
                    alpha_name(alpha)
                )
            }
            RingDescriptor::SkewPower {
                base,
                alpha,
                degree,
            } => {
                format!(
                    "SkewPowerTrunc({}, {}, {degree})",
                    base.display_name(),
                    alpha_name(alpha)
                )
            }
            RingDescriptor::TTrunc { r, s, n, .. } => {
                format!("T_{n}[{}, {}]", r.display_name(), s.display_name())
            }
            RingDescriptor::Corner { base, e } => format!("e({})e, e = {e}", base.display_name()),
            RingDescriptor::XuxuLocal16 => "XuXuLocal16".to_string(),
            RingDescriptor::D3Pattern { base } => format!("D3Pattern({})", base.display_name()),
            RingDescriptor::Table { add, .. } => format!("TableRing({})", add.len()),
        }
    }

    /// Canonical JSON used for digests and reports.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("descriptor serializes")
    }

    /// Parses either a bare descriptor or `{"schema": ..., "ring": {...}}`.
    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum File {
            Wrapped {
                schema: String,
                ring: RingDescriptor,
            },
            Bare(RingDescriptor),
        }
        match serde_json::from_str::<File>(text)? {
            File::Wrapped { schema, ring } => {
                if schema != DESCRIPTOR_SCHEMA {
                    return Err(serde::de::Error::custom(format!(
                        "unsupported descriptor schema `{schema}` (expected `{DESCRIPTOR_SCHEMA}`)"
                    )));
                }
                Ok(ring)
            }
            File::Bare(ring) => Ok(ring),
        }
    }
}

fn wrap(name: String) -> String {
    if name.contains(' ') {
        format!("({name})")
    } else {
        name
    }
}

fn alpha_name(alpha: &EndomorphismSpec) -> String {
    match alpha {
        EndomorphismSpec::Table(t) if !alpha.is_identity() => format!("{t:?}"),
        _ => "id".to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shapes() {
        let d = RingDescriptor::lst(RingDescriptor::zn(4), 1, 1);
        assert_eq!(
            d.to_json(),
            r#"{"kind":"lst","base":{"kind":"zn","n":4},"s":1,"t":1}"#
        );
        assert_eq!(RingDescriptor::from_json(&d.to_json()).unwrap(), d);
        let wrapped = format!(
            r#"{{"schema":"{DESCRIPTOR_SCHEMA}","ring":{}}}"#,
            d.to_json()
        );
        assert_eq!(RingDescriptor::from_json(&wrapped).unwrap(), d);
        assert!(
            RingDescriptor::from_json(r#"{"schema":"nope","ring":{"kind":"zn","n":4}}"#).is_err()
        );
    }

    #[test]
    fn literals_parse_in_every_form() {
        let d: RingDescriptor = serde_json::from_str(
            r#"{"kind":"corner","base":{"kind":"xuxu_local16"},"e":{"a":1,"b":0,"c":0}}"#,
        )
        .unwrap();
        let RingDescriptor::Corner { e, .. } = d else {
            panic!()
        };
        assert!(matches!(e, ElementLiteral::Named(_)));
        let d: RingDescriptor =
            serde_json::from_str(r#"{"kind":"hurwitz","base":{"kind":"zn","n":2},"degree":2}"#)
                .unwrap();
        assert_eq!(
            d,
            RingDescriptor::hurwitz(RingDescriptor::zn(2), EndomorphismSpec::default(), 2)
        );
        let alpha: EndomorphismSpec = serde_json::from_str("[0,2,1,3]").unwrap();
        assert_eq!(alpha, EndomorphismSpec::Table(vec![0, 2, 1, 3]));
        let lit: ElementLiteral = serde_json::from_str(r#""a=2,b=1""#).unwrap();
        assert_eq!(lit, ElementLiteral::Text("a=2,b=1".into()));
    }

    #[test]
    fn display_names() {
        assert_eq!(
            RingDescriptor::lst(RingDescriptor::zn(4), 1, 1).display_name(),
            "L_(1,1)(Z_4)"
        );
        assert_eq!(
            RingDescriptor::product([RingDescriptor::zn(2), RingDescriptor::zn(3)]).display_name(),
            "Z_2 x Z_3"
        );
    }
}
