mod common;

use qnil_core::suite::default_catalog;
use qnil_core::{build, ElementSet, FiniteRing, RingDescriptor};

type Row = (
    &'static str,
    usize,
    usize,
    usize,
    usize,
    usize,
    usize,
    usize,
);

/// `(name, order, |U|, |qnil|, |J|, |N|, |Id|, |C|)` from the brute-force
/// definitions in `common`.
const CARDINALITIES: &[Row] = &[
    ("z2", 2, 1, 1, 1, 1, 2, 2),
    ("z3", 3, 2, 1, 1, 1, 2, 3),
    ("z4", 4, 2, 2, 2, 2, 2, 4),
    ("z5", 5, 4, 1, 1, 1, 2, 5),
    ("z6", 6, 2, 1, 1, 1, 4, 6),
    ("z7", 7, 6, 1, 1, 1, 2, 7),
    ("z8", 8, 4, 4, 4, 4, 2, 8),
    ("z9", 9, 6, 3, 3, 3, 2, 9),
    ("z2xz3", 6, 2, 1, 1, 1, 4, 6),
    ("z4xz4", 16, 4, 4, 4, 4, 4, 16),
    ("z2xm2z2", 32, 6, 4, 1, 4, 16, 4),
    ("m2-z2", 16, 6, 4, 1, 4, 8, 2),
    ("m2-z4", 256, 96, 64, 16, 64, 26, 4),
    ("u2-z2", 8, 2, 2, 2, 2, 6, 2),
    ("u2-z4", 64, 16, 16, 16, 16, 10, 4),
    ("d2-z4", 16, 8, 8, 8, 8, 2, 16),
    ("d3-z2", 16, 8, 8, 8, 8, 2, 4),
    ("v3-z2", 8, 4, 4, 4, 4, 2, 8),
    ("v3-z4", 64, 32, 32, 32, 32, 2, 64),
    ("l11-z4", 1024, 128, 128, 128, 128, 50, 4),
    ("l01-z4", 256, 32, 32, 32, 32, 20, 16),
    ("l10-z4", 256, 32, 32, 32, 32, 20, 16),
    ("l00-z4", 64, 8, 8, 8, 8, 8, 64),
    ("h11-z4", 64, 8, 8, 8, 8, 8, 64),
    ("h13-z4", 64, 8, 8, 8, 8, 8, 64),
    ("k0-z2", 16, 4, 4, 4, 4, 10, 2),
    ("k0-z4", 256, 64, 64, 64, 64, 34, 4),
    ("k1-z2", 16, 6, 4, 1, 4, 8, 2),
    ("dorroh-m2z2-z2", 32, 6, 4, 1, 4, 16, 4),
    ("dorroh-z4-z4", 16, 4, 4, 4, 4, 4, 16),
    ("hurwitz-z2-2", 8, 4, 4, 4, 4, 2, 8),
    ("hurwitz-z4-2", 64, 32, 32, 32, 32, 2, 64),
    ("skewpower-z2xz2-swap-2", 64, 16, 16, 16, 16, 10, 8),
    ("f4", 4, 3, 1, 1, 1, 2, 4),
    ("skewpower-f4-frob-1", 16, 12, 4, 4, 4, 2, 2),
    ("t2-z4-z4", 64, 8, 8, 8, 8, 8, 64),
    ("xuxu-local16", 16, 8, 8, 8, 8, 2, 4),
    ("d3pattern-z4", 64, 32, 32, 32, 32, 2, 64),
    ("corner-m2z2-e1", 2, 1, 1, 1, 1, 2, 2),
    ("corner-m2z2-e3", 2, 1, 1, 1, 1, 2, 2),
    ("corner-m2z2-e5", 2, 1, 1, 1, 1, 2, 2),
    ("corner-m2z2-e8", 2, 1, 1, 1, 1, 2, 2),
    ("corner-m2z2-e9", 16, 6, 4, 1, 4, 8, 2),
    ("corner-m2z2-e10", 2, 1, 1, 1, 1, 2, 2),
    ("corner-m2z2-e12", 2, 1, 1, 1, 1, 2, 2),
];

fn set(r: &FiniteRing, v: Vec<usize>) -> ElementSet {
    ElementSet::from_members(r.order(), v)
}

#[test]
fn frozen_cardinalities() {
    let catalog = default_catalog();
    assert_eq!(catalog.len(), CARDINALITIES.len());
    for (entry, &(name, order, u, q, j, n, id, c)) in catalog.iter().zip(CARDINALITIES) {
        assert_eq!(entry.name, name);
        let r = build(&entry.ring).unwrap();
        let got = (
            r.order(),
            r.units().len(),
            r.qnil().len(),
            r.jacobson().len(),
        );
        assert_eq!(got, (order, u, q, j), "{name}");
        let got = (
            r.nilpotents().len(),
            r.idempotents().len(),
            r.center().len(),
        );
        assert_eq!(got, (n, id, c), "{name}");
    }
}

#[test]
fn sets_match_oracle() {
    for entry in default_catalog() {
        let r = build(&entry.ring).unwrap();
        if r.order() > 256 {
            continue;
        }
        let name = &entry.name;
        assert_eq!(r.units(), &set(&r, common::units(&r)), "{name}");
        assert_eq!(r.qnil(), &set(&r, common::qnil(&r)), "{name}");
        assert_eq!(r.jacobson(), &set(&r, common::jacobson(&r)), "{name}");
        assert_eq!(r.nilpotents(), &set(&r, common::nilpotents(&r)), "{name}");
        assert_eq!(r.idempotents(), &set(&r, common::idempotents(&r)), "{name}");
        assert_eq!(r.center(), &set(&r, common::center(&r)), "{name}");
    }
}

#[test]
fn xuxu_qnil_labels() {
    let r = build(&RingDescriptor::XuxuLocal16).unwrap();
    let mut got = r.labels(r.qnil());
    got.sort();
    let mut want: Vec<String> = ["0", "2", "x", "y", "2+x", "2+y", "x+y", "2+x+y"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    want.sort();
    assert_eq!(got, want);
    let x = r.parse_element("a=0,b=1,c=0").unwrap();
    let y = r.parse_element("a=0,b=0,c=1").unwrap();
    assert_eq!(r.label(r.mul(x, y)), "2");
    assert_eq!(r.mul(y, x), r.zero());
}

#[test]
fn m2z2_commutant_of_e11() {
    let r = build(&qnil_core::suite::catalog::builtin("m2-z2").unwrap()).unwrap();
    let e11 = r.parse_element("a11=1,a12=0,a21=0,a22=0").unwrap();
    let comm = r.commutant(e11);
    assert_eq!(comm.len(), 4);
    assert_eq!(
        r.labels(&comm),
        [
            "[[0,0],[0,0]]",
            "[[1,0],[0,0]]",
            "[[0,0],[0,1]]",
            "[[1,0],[0,1]]"
        ]
    );
    assert_eq!(r.labels(r.center()), ["[[0,0],[0,0]]", "[[1,0],[0,1]]"]);
}

#[test]
fn z4_units_and_radical() {
    let r = build(&RingDescriptor::zn(4)).unwrap();
    assert_eq!(r.labels(r.units()), ["1", "3"]);
    assert_eq!(r.labels(r.jacobson()), ["0", "2"]);
}

#[test]
fn k0_z2_center_is_scalar() {
    let r = build(&RingDescriptor::ks(RingDescriptor::zn(2), 0u64)).unwrap();
    assert_eq!(r.labels(r.center()), ["[[0,0],[0,0]]", "[[1,0],[0,1]]"]);
}

#[test]
fn double_commutant_contains_element() {
    for entry in default_catalog()
        .iter()
        .filter(|e| e.name.starts_with("m2") || e.name == "xuxu-local16")
    {
        let r = build(&entry.ring).unwrap();
        for a in r.elements() {
            let dc = r.double_commutant(a);
            assert!(dc.contains(a));
            assert!(dc.iter().all(|b| r.commutant(a).contains(b)));
        }
    }
}
