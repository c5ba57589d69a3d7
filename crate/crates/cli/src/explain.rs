//! Defining formula and element encoding of a construction.

use std::fmt::Write;

use qnil_core::descriptor::MatrixFamily;
use qnil_core::{FiniteRing, RingDescriptor as D};
use serde::Serialize;

pub const EXPLAIN_SCHEMA: &str = "qnil.explain/v1";

#[derive(Serialize)]
pub struct Coordinate {
    pub name: String,
    pub values: Vec<usize>,
}

#[derive(Serialize)]
pub struct Explanation {
    pub schema: &'static str,
    pub name: String,
    pub kind: &'static str,
    pub order: usize,
    pub formula: String,
    pub coordinates: Vec<Coordinate>,
    pub encoding: &'static str,
    pub literal_example: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

fn formula(d: &D) -> String {
    match d {
        D::Zn { n } => format!("integers modulo {n}"),
        D::Product { .. } => "componentwise addition and multiplication".into(),
        D::Matrix { family, n, .. } => match family {
            MatrixFamily::Mn => format!("all {n}x{n} matrices"),
            MatrixFamily::Un => format!("upper triangular {n}x{n} matrices"),
            MatrixFamily::Dn => format!("upper triangular {n}x{n} matrices with constant diagonal"),
            MatrixFamily::Vn => format!("upper triangular Toeplitz {n}x{n} matrices, a_ij = c_(j-i)"),
        },
        D::Lst { s, t, .. } => {
            format!("[[a,0,0],[sc,d,te],[0,0,f]] with s = {s}, t = {t} central")
        }
        D::Hst { s, t, .. } => {
            format!("[[a,0,0],[sc,d,te],[0,0,f]] with a - d = sc, d - f = te, s = {s}, t = {t} central units")
        }
        D::Ks { s, .. } => format!(
            "[[a1,x1],[y1,b1]][[a2,x2],[y2,b2]] = [[a1a2 + s x1y2, a1x2 + x1b2], [y1a2 + b1y2, s y1x2 + b1b2]], s = {s}"
        ),
        D::Dorroh { scalars, .. } => {
            format!("(r1,k1)(r2,k2) = (r1r2 + k1r2 + k2r1, k1k2) on R x Z_{scalars}")
        }
        D::Hurwitz { degree, .. } => {
            format!("c_n = sum_i C(n,i) a_i alpha^i(b_(n-i)), terms above degree {degree} discarded")
        }
        D::SkewPower { degree, .. } => {
            format!("c_n = sum_i a_i alpha^i(b_(n-i)), terms above degree {degree} discarded")
        }
        D::TTrunc { n, .. } => {
            format!("sequences (r_1, ..., r_{n}, s, s, ...) with r_i in R, s in S, componentwise operations")
        }
        D::Corner { e, .. } => format!("eRe with e = {e}, identity e"),
        D::XuxuLocal16 => "Z_4<x,y>/(x^3, y^2, yx, x^2 - xy, x^2 - 2, 2x, 2y), elements a + bx + cy".into(),
        D::D3Pattern { .. } => "[[a,b,c],[0,a,0],[0,0,a]] inside D_3(R)".into(),
        D::Table { .. } => "explicit Cayley tables".into(),
    }
}

pub fn explain(r: &FiniteRing) -> Explanation {
    let space = r.coords();
    let coordinates: Vec<Coordinate> = space
        .names()
        .enumerate()
        .map(|(i, name)| Coordinate {
            name: name.to_string(),
            values: space.alphabet(i).to_vec(),
        })
        .collect();
    let literal_example = if coordinates.len() == 1 {
        format!("{}", coordinates[0].values.last().unwrap())
    } else {
        coordinates
            .iter()
            .map(|c| format!("{}={}", c.name, c.values.last().unwrap()))
            .collect::<Vec<_>>()
            .join(",")
    };
    Explanation {
        schema: EXPLAIN_SCHEMA,
        name: r.descriptor().display_name(),
        kind: r.descriptor().kind_name(),
        order: r.order(),
        formula: formula(r.descriptor()),
        coordinates,
        encoding: "index = d_0 + r_0 (d_1 + r_1 (d_2 + ...)), d_k the position of coordinate k in its value list",
        literal_example,
        notes: r.notes().to_vec(),
    }
}

pub fn render(e: &Explanation) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}  ({}, order {})", e.name, e.kind, e.order);
    let _ = writeln!(out, "  {}", e.formula);
    let _ = writeln!(out, "coordinates:");
    let width = e
        .coordinates
        .iter()
        .map(|c| c.name.len())
        .max()
        .unwrap_or(0);
    for c in &e.coordinates {
        let values: Vec<String> = c.values.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "  {:<width$}  {{{}}}", c.name, values.join(", "));
    }
    let _ = writeln!(out, "encoding: {}", e.encoding);
    let _ = writeln!(out, "literal:  --element {}", e.literal_example);
    for n in &e.notes {
        let _ = writeln!(out, "note: {n}");
    }
    out
}
