//! The standard instance set and named built-in rings.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::descriptor::{ElementLiteral, EndomorphismSpec, MatrixFamily, RingDescriptor as D};

pub const CATALOG_SCHEMA: &str = "qnil.catalog/v1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub ring: D,
}

impl CatalogEntry {
    pub fn new(name: impl Into<String>, ring: D) -> Self {
        CatalogEntry {
            name: name.into(),
            ring,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct CatalogFile {
    schema: String,
    rings: Vec<CatalogEntry>,
}

#[derive(Debug, thiserror::Error)]
pub enum CatalogError {
    #[error("catalog is not valid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported catalog schema `{0}`")]
    Schema(String),
    #[error("duplicate catalog name `{0}`")]
    Duplicate(String),
}

/// Parses `{"schema": "qnil.catalog/v1", "rings": [...]}` or a bare array
/// of entries.
pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>, CatalogError> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    let entries: Vec<CatalogEntry> = if value.is_array() {
        serde_json::from_value(value)?
    } else {
        let file: CatalogFile = serde_json::from_value(value)?;
        if file.schema != CATALOG_SCHEMA {
            return Err(CatalogError::Schema(file.schema));
        }
        file.rings
    };
    let mut seen = std::collections::BTreeSet::new();
    for e in &entries {
        if !seen.insert(e.name.as_str()) {
            return Err(CatalogError::Duplicate(e.name.clone()));
        }
    }
    Ok(entries)
}

pub fn catalog_to_json(entries: &[CatalogEntry]) -> String {
    let file = CatalogFile {
        schema: CATALOG_SCHEMA.to_string(),
        rings: entries.to_vec(),
    };
    serde_json::to_string_pretty(&file).expect("catalog serializes")
}

fn z(n: usize) -> D {
    D::zn(n)
}

fn m2z2() -> D {
    D::matrix(MatrixFamily::Mn, z(2), 2)
}

/// Coordinate swap on `Z_2 x Z_2`.
pub fn swap_z2xz2() -> EndomorphismSpec {
    EndomorphismSpec::Table(vec![0, 2, 1, 3])
}

/// `F_4 = {0, 1, w, w+1}` with `w^2 = w + 1`, indexed by bits `(1, w)`.
pub fn f4() -> D {
    let mul = |a: usize, b: usize| {
        let mut p = 0;
        for i in 0..2 {
            if b >> i & 1 == 1 {
                p ^= a << i;
            }
        }
        if p & 4 != 0 {
            p ^= 0b111;
        }
        p
    };
    let add = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
    let mul = (0..4)
        .map(|a| (0..4).map(|b| mul(a, b)).collect())
        .collect();
    D::Table {
        add,
        mul,
        zero: 0,
        one: 1,
    }
}

/// Frobenius `a -> a^2` on [`f4`].
pub fn frobenius_f4() -> EndomorphismSpec {
    EndomorphismSpec::Table(vec![0, 1, 3, 2])
}

/// Idempotent 2x2 matrices over `Z_2` other than 0, as `(name, entries)`.
fn m2z2_idempotents() -> Vec<(usize, [u64; 4])> {
    let mut out = Vec::new();
    for idx in 1..16usize {
        let m = [idx & 1, (idx >> 1) & 1, (idx >> 2) & 1, (idx >> 3) & 1].map(|v| v as u64);
        let sq = [
            (m[0] * m[0] + m[1] * m[2]) % 2,
            (m[0] * m[1] + m[1] * m[3]) % 2,
            (m[2] * m[0] + m[3] * m[2]) % 2,
            (m[2] * m[1] + m[3] * m[3]) % 2,
        ];
        if sq == m {
            out.push((idx, m));
        }
    }
    out
}

/// Every built-in, in catalog order.
pub fn builtins() -> Vec<CatalogEntry> {
    let id = EndomorphismSpec::default;
    let mut v: Vec<CatalogEntry> = (2..=9)
        .map(|n| CatalogEntry::new(format!("z{n}"), z(n)))
        .collect();
    v.extend([
        CatalogEntry::new("z2xz3", D::product([z(2), z(3)])),
        CatalogEntry::new("z4xz4", D::product([z(4), z(4)])),
        CatalogEntry::new("z2xm2z2", D::product([z(2), m2z2()])),
        CatalogEntry::new("m2-z2", m2z2()),
        CatalogEntry::new("m2-z4", D::matrix(MatrixFamily::Mn, z(4), 2)),
        CatalogEntry::new("u2-z2", D::matrix(MatrixFamily::Un, z(2), 2)),
        CatalogEntry::new("u2-z4", D::matrix(MatrixFamily::Un, z(4), 2)),
        CatalogEntry::new("d2-z4", D::matrix(MatrixFamily::Dn, z(4), 2)),
        CatalogEntry::new("d3-z2", D::matrix(MatrixFamily::Dn, z(2), 3)),
        CatalogEntry::new("v3-z2", D::matrix(MatrixFamily::Vn, z(2), 3)),
        CatalogEntry::new("v3-z4", D::matrix(MatrixFamily::Vn, z(4), 3)),
        CatalogEntry::new("l11-z4", D::lst(z(4), 1u64, 1u64)),
        CatalogEntry::new("l01-z4", D::lst(z(4), 0u64, 1u64)),
        CatalogEntry::new("l10-z4", D::lst(z(4), 1u64, 0u64)),
        CatalogEntry::new("l00-z4", D::lst(z(4), 0u64, 0u64)),
        CatalogEntry::new("h11-z4", D::hst(z(4), 1u64, 1u64)),
        CatalogEntry::new("h13-z4", D::hst(z(4), 1u64, 3u64)),
        CatalogEntry::new("k0-z2", D::ks(z(2), 0u64)),
        CatalogEntry::new("k0-z4", D::ks(z(4), 0u64)),
        CatalogEntry::new("k1-z2", D::ks(z(2), 1u64)),
        CatalogEntry::new("dorroh-m2z2-z2", D::dorroh(m2z2(), 2)),
        CatalogEntry::new("dorroh-z4-z4", D::dorroh(z(4), 4)),
        CatalogEntry::new("hurwitz-z2-2", D::hurwitz(z(2), id(), 2)),
        CatalogEntry::new("hurwitz-z4-2", D::hurwitz(z(4), id(), 2)),
        CatalogEntry::new(
            "skewpower-z2xz2-swap-2",
            D::skew_power(D::product([z(2), z(2)]), swap_z2xz2(), 2),
        ),
        CatalogEntry::new("f4", f4()),
        CatalogEntry::new(
            "skewpower-f4-frob-1",
            D::skew_power(f4(), frobenius_f4(), 1),
        ),
        CatalogEntry::new("t2-z4-z4", D::t_trunc(z(4), z(4), 2)),
        CatalogEntry::new("xuxu-local16", D::XuxuLocal16),
        CatalogEntry::new("d3pattern-z4", D::d3_pattern(z(4))),
    ]);
    for (idx, m) in m2z2_idempotents() {
        v.push(CatalogEntry::new(
            format!("corner-m2z2-e{idx}"),
            D::corner(m2z2(), ElementLiteral::Coords(m.to_vec())),
        ));
    }
    v
}

/// The standard instance set.
pub fn default_catalog() -> Vec<CatalogEntry> {
    builtins()
}

pub fn builtin(name: &str) -> Option<D> {
    builtins()
        .into_iter()
        .find(|e| e.name == name)
        .map(|e| e.ring)
}

pub fn builtin_names() -> Vec<String> {
    builtins().into_iter().map(|e| e.name).collect()
}

/// Names, kinds and a SHA-256 digest of the canonical catalog JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Manifest {
    pub entries: Vec<ManifestEntry>,
    pub sha256: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ManifestEntry {
    pub name: String,
    pub kind: &'static str,
    pub display: String,
}

pub fn manifest(entries: &[CatalogEntry]) -> Manifest {
    let canonical = serde_json::to_string(entries).expect("catalog serializes");
    let sha256 = hex::encode(Sha256::digest(canonical.as_bytes()));
    let entries = entries
        .iter()
        .map(|e| ManifestEntry {
            name: e.name.clone(),
            kind: e.ring.kind_name(),
            display: e.ring.display_name(),
        })
        .collect();
    Manifest { entries, sha256 }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m2z2_has_seven_nonzero_idempotents() {
        assert_eq!(m2z2_idempotents().len(), 7);
    }

    #[test]
    fn catalog_json_round_trip() {
        let cat = default_catalog();
        assert_eq!(parse_catalog(&catalog_to_json(&cat)).unwrap(), cat);
        let bare = serde_json::to_string(&cat).unwrap();
        assert_eq!(parse_catalog(&bare).unwrap(), cat);
        assert!(matches!(
            parse_catalog(r#"{"schema":"other","rings":[]}"#),
            Err(CatalogError::Schema(_))
        ));
    }

    #[test]
    fn digest_is_stable() {
        assert_eq!(
            manifest(&default_catalog()).sha256,
            manifest(&default_catalog()).sha256
        );
        assert_eq!(manifest(&default_catalog()).sha256.len(), 64);
    }

    #[test]
    fn f4_is_a_field() {
        let r = crate::build(&f4()).unwrap();
        assert_eq!(r.units().len(), 3);
        assert!(r.is_commutative());
    }

    #[test]
    fn contains_xuxu() {
        assert!(default_catalog().iter().any(|e| e.ring == D::XuxuLocal16));
        assert_eq!(builtin("l11-z4"), Some(D::lst(z(4), 1u64, 1u64)));
    }
}
