use std::collections::BTreeSet;

use qnil_core::suite::catalog::{catalog_to_json, parse_catalog, CatalogEntry};
use qnil_core::suite::{self, default_catalog, CaseKind, Outcome};
use qnil_core::{build, RingDescriptor};

const REQUIRED: &[&str] = &[
    "P2.2.1-power-closure",
    "P2.2.2-local-partition",
    "P2.2.3-swap",
    "P2.2.4-conjugation",
    "P2.2.5-corner",
    "L2.3.1-upper-triangular",
    "L2.3.2-d2-containment",
    "L2.3.3-d2-extraction",
    "P2.4-products",
    "L2.5.1-dorroh-commutant",
    "L2.5.2-dorroh-inverse",
    "P2.6.1-dorroh-algebra-part",
    "P2.6.2-dorroh-scalar-part",
    "T2.7-dorroh-criterion",
    "P2.8.1-ttrunc-projection",
    "P2.8.2-ttrunc-constant-tail",
    "L2.9-series-units",
    "P2.10-series-inclusion",
    "P2.10-hurwitz-equality",
    "D3.1-qnil-duo-consistency",
    "L3.4-central-qnil",
    "T3.5-products-forward",
    "T3.5-products-converse",
    "T3.6.1-idempotent-defect",
    "T3.abelian",
    "T3.6.3-central-idempotent-split",
    "C3.7-corner",
    "T3.8-directly-finite",
    "EX3.10.1-matrix-not-qnil-duo",
    "EX3.10.2-vn-qnil-duo",
    "T3.11-local-square-zero",
    "EX3.12.1-d3-pattern",
    "T3.13-d2-over-domain",
    "T3.14.1-exchange-stable-range",
    "T3.14.2-regular-strongly-regular",
    "T3.16-dorroh-descent",
    "P3.17-ttrunc-descent",
    "P3.17-ttrunc-converse",
    "T3.18.1-hurwitz-descent",
    "T3.18.2-skew-power-descent",
    "T4.3-l0t-descent",
    "EX4.4-L11Z4-not-right-qnil-duo",
    "T4.6-h-equivalence",
    "L4.7.1-k0-units",
    "L4.7.2-k0-center",
    "P4.8-k0-sufficiency",
    "T4.9-k0-kernel-condition",
    "P4.10.1-k0-local",
    "P4.10.2-k0-diagonal",
    "T4.11.1-k0-local-descent",
    "T4.11.2-k0-domain-descent",
];

#[test]
fn registry_ids_are_unique_and_cover_required_results() {
    let reg = suite::registry();
    let ids: BTreeSet<&str> = reg.iter().map(|c| c.id).collect();
    assert_eq!(ids.len(), reg.len());
    for id in REQUIRED {
        assert!(ids.contains(id), "missing {id}");
    }
    assert!(reg.windows(2).all(|w| w[0].id < w[1].id));
    assert!(reg.iter().all(|c| !c.paper_ref.is_empty()));
}

#[test]
fn every_catalog_ring_builds() {
    for e in default_catalog() {
        build(&e.ring).unwrap_or_else(|err| panic!("{}: {err}", e.name));
    }
}

#[test]
fn full_run_passes_and_is_stable() {
    let a = suite::run_all(&default_catalog());
    assert!(a.success(), "{}", a.to_json());
    assert_eq!(a.summary.fail, 0);
    assert_eq!(a.summary.skipped, 0);
    let b = suite::run_all(&default_catalog());
    let strip = |s: String| {
        s.lines()
            .filter(|l| !l.contains("\"millis\""))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(strip(a.to_json()), strip(b.to_json()));
    for c in &a.cases {
        let kind_ok = match c.kind {
            CaseKind::RecordedObservation => c.outcome == Outcome::Recorded,
            _ => matches!(c.outcome, Outcome::Pass | Outcome::SkippedDegenerate),
        };
        assert!(kind_ok, "{} {:?}", c.case_id, c.outcome);
    }
}

#[test]
fn implication_hypotheses_are_reached() {
    let report = suite::run_all(&default_catalog());
    for id in [
        "T3.abelian",
        "T3.14.1-exchange-stable-range",
        "T3.14.2-regular-strongly-regular",
        "L3.4-central-qnil",
        "T3.11-local-square-zero",
        "T3.5-products-forward",
        "T3.5-products-converse",
    ] {
        let c = report.case(id).unwrap();
        assert!(c.hypothesis_true.unwrap() > 0, "{id} is vacuous");
    }
    assert_eq!(
        report.case("T3.13-d2-over-domain").unwrap().outcome,
        Outcome::SkippedDegenerate
    );
}

#[test]
fn l11_case_reports_the_displayed_product() {
    let c = suite::run_case(&default_catalog(), "EX4.4-L11Z4-not-right-qnil-duo").unwrap();
    assert_eq!(c.outcome, Outcome::Pass);
    let w = c.witness.unwrap();
    let ba = w.elements.iter().find(|(k, _)| k == "BA").unwrap();
    assert_eq!(ba.1, "[[0,0,0],[2,0,3],[0,0,2]]");
}

#[test]
fn hurwitz_equality_is_recorded_per_instance() {
    let c = suite::run_case(&default_catalog(), "P2.10-hurwitz-equality").unwrap();
    assert_eq!(c.outcome, Outcome::Recorded);
    let z4 = c
        .observations
        .iter()
        .find(|o| o.ring == "hurwitz-z4-2")
        .unwrap();
    assert_eq!(z4.value["equal"], true);
}

#[test]
fn build_failure_marks_run_incomplete() {
    let mut cat = vec![CatalogEntry::new("z4", RingDescriptor::zn(4))];
    cat.push(CatalogEntry::new(
        "bad",
        RingDescriptor::ks(RingDescriptor::zn(4), 9u64),
    ));
    let cat = parse_catalog(&catalog_to_json(&cat)).unwrap();
    let report = suite::run_all(&cat);
    assert!(!report.complete);
    assert!(!report.success());
    assert_eq!(report.build_failures.len(), 1);
    assert!(report.summary.skipped > 0);
}
