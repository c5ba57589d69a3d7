mod common;

use qnil_core::checkers::{self, Property, Side};
use qnil_core::suite::catalog::builtin;
use qnil_core::suite::default_catalog;
use qnil_core::{build, ElementSet, FiniteRing, RingDescriptor};

fn ring(name: &str) -> FiniteRing {
    build(&builtin(name).unwrap()).unwrap()
}

#[test]
fn normality_matches_oracle() {
    for entry in default_catalog() {
        let r = build(&entry.ring).unwrap();
        let subsets: [(&str, &ElementSet); 4] = [
            ("qnil", r.qnil()),
            ("units", r.units()),
            ("nil", r.nilpotents()),
            ("jacobson", r.jacobson()),
        ];
        for (label, s) in subsets {
            let members: Vec<usize> = s.iter().collect();
            for (side, right) in [(Side::Right, true), (Side::Left, false)] {
                let v = checkers::one_sided_normality(&r, s, side);
                assert_eq!(
                    v.holds,
                    common::normal(&r, &members, right),
                    "{} {label} {side:?}",
                    entry.name
                );
            }
        }
    }
}

#[test]
fn every_false_verdict_reverifies() {
    for entry in default_catalog() {
        let r = build(&entry.ring).unwrap();
        for p in Property::ALL {
            let v = p.check(&r);
            assert_eq!(v.holds, v.witness.is_none(), "{} {}", entry.name, p.name());
            if let Some(w) = &v.witness {
                assert!(
                    p.reverify(&r, w),
                    "{} {} witness {:?}",
                    entry.name,
                    p.name(),
                    w
                );
            }
        }
    }
}

#[test]
fn degenerate_subsets_hold() {
    let r = ring("m2-z2");
    for s in [
        ElementSet::empty(16),
        ElementSet::from_members(16, [r.zero()]),
    ] {
        assert!(checkers::one_sided_normality(&r, &s, Side::Right).holds);
        assert!(checkers::one_sided_normality(&r, &s, Side::Left).holds);
    }
}

#[test]
fn xuxu_witness_is_x_and_y() {
    let r = build(&RingDescriptor::XuxuLocal16).unwrap();
    let v = checkers::is_right_qnil_duo(&r);
    let w = v.witness.unwrap();
    assert_eq!(r.label(w.get("a").unwrap()), "y");
    assert_eq!(r.label(w.get("b").unwrap()), "x");
    assert!(checkers::is_local(&r).holds);
}

#[test]
fn l11_is_not_right_qnil_duo() {
    let r = ring("l11-z4");
    let v = checkers::is_right_qnil_duo(&r);
    assert!(!v.holds);
    assert!(Property::RightQnilDuo.reverify(&r, v.witness.as_ref().unwrap()));
}

#[test]
fn m2z2_profile() {
    let r = ring("m2-z2");
    assert!(!checkers::is_right_qnil_duo(&r).holds);
    assert!(!checkers::is_left_qnil_duo(&r).holds);
    let ab = checkers::is_abelian(&r);
    let w = ab.witness.unwrap();
    assert_eq!(r.label(w.get("e").unwrap()), "[[1,0],[0,0]]");
    assert_eq!(r.label(w.get("r").unwrap()), "[[0,1],[0,0]]");
    assert!(checkers::is_directly_finite(&r).holds);
    assert!(!checkers::is_local(&r).holds);
    for p in [
        Property::Exchange,
        Property::Clean,
        Property::StableRangeOne,
        Property::Regular,
    ] {
        assert!(p.check(&r).holds, "{}", p.name());
    }
    let sr = checkers::is_strongly_regular(&r);
    assert_eq!(
        r.label(sr.witness.unwrap().get("a").unwrap()),
        "[[0,1],[0,0]]"
    );
    assert!(!checkers::qnil_is_central(&r).holds);
}

#[test]
fn z4_and_z6() {
    let z4 = ring("z4");
    for p in [
        Property::Exchange,
        Property::Clean,
        Property::StableRangeOne,
        Property::QnilCentral,
    ] {
        assert!(p.check(&z4).holds, "{}", p.name());
    }
    assert_eq!(checkers::is_regular(&z4).witness.unwrap().get("a"), Some(2));
    let z6 = ring("z6");
    assert!(checkers::is_regular(&z6).holds && checkers::is_strongly_regular(&z6).holds);
    let local = checkers::is_local(&z6).witness.unwrap();
    assert_eq!((local.get("a"), local.get("b")), (Some(2), Some(3)));
}

#[test]
fn d3_pattern_is_qnil_duo() {
    let r = ring("d3pattern-z4");
    assert!(checkers::is_right_qnil_duo(&r).holds);
    assert!(checkers::is_left_qnil_duo(&r).holds);
    assert!(!checkers::qnil_square_zero(&r).holds);
}

#[test]
fn stable_range_one_everywhere() {
    for entry in default_catalog() {
        let r = build(&entry.ring).unwrap();
        assert!(checkers::has_stable_range_one(&r).holds, "{}", entry.name);
    }
}

#[test]
fn kernel_condition_requires_k0() {
    let r = ring("k1-z2");
    assert!(checkers::k0_kernel_condition(&r, r.zero()).is_err());
    let k0 = ring("k0-z2");
    let unit = k0.one();
    assert!(checkers::k0_kernel_condition(&k0, unit).is_err());
    let check = checkers::k0_kernel_condition(&k0, k0.zero()).unwrap();
    assert!(check.condition.holds);
    assert_eq!(check.conclusion, Some(true));
}
