//! Serializable set and verdict reports, and their aligned text forms.

use std::collections::BTreeMap;
use std::fmt::Write;

use qnil_core::checkers::PredicateVerdict;
use qnil_core::suite::{Outcome, SuiteReport};
use qnil_core::{Elem, ElementSet, FiniteRing};
use serde::Serialize;

pub const SETS_SCHEMA: &str = "qnil.sets/v1";
pub const VERDICTS_SCHEMA: &str = "qnil.verdicts/v1";

#[derive(Serialize)]
pub struct RingInfo {
    pub name: String,
    pub kind: &'static str,
    pub order: usize,
    pub coordinates: Vec<String>,
}

impl RingInfo {
    pub fn of(r: &FiniteRing) -> Self {
        RingInfo {
            name: r.descriptor().display_name(),
            kind: r.descriptor().kind_name(),
            order: r.order(),
            coordinates: r.coords().names().map(str::to_string).collect(),
        }
    }

    fn header(&self) -> String {
        format!("ring  {}  (order {})\n", self.name, self.order)
    }
}

#[derive(Serialize)]
pub struct RenderedElement {
    pub role: String,
    pub value: String,
    pub coordinates: BTreeMap<String, usize>,
}

impl RenderedElement {
    fn new(r: &FiniteRing, role: &str, e: Elem) -> Self {
        let coordinates = r
            .coords()
            .names()
            .map(str::to_string)
            .zip(r.decode(e).iter().copied())
            .collect();
        RenderedElement {
            role: role.to_string(),
            value: r.label(e),
            coordinates,
        }
    }
}

#[derive(Serialize)]
pub struct SetEntry {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub element: Option<String>,
    pub cardinality: usize,
    pub elements: Vec<String>,
}

impl SetEntry {
    pub fn new(r: &FiniteRing, name: &str, element: Option<Elem>, set: &ElementSet) -> Self {
        SetEntry {
            name: name.to_string(),
            element: element.map(|a| r.label(a)),
            cardinality: set.len(),
            elements: r.labels(set),
        }
    }
}

#[derive(Serialize)]
pub struct SetsReport {
    pub schema: &'static str,
    pub ring: RingInfo,
    pub sets: Vec<SetEntry>,
}

impl SetsReport {
    pub fn new(ring: RingInfo, sets: Vec<SetEntry>) -> Self {
        SetsReport {
            schema: SETS_SCHEMA,
            ring,
            sets,
        }
    }

    pub fn render(&self) -> String {
        let mut out = self.ring.header();
        let names: Vec<String> = self
            .sets
            .iter()
            .map(|s| match &s.element {
                Some(a) => format!("{}({a})", s.name),
                None => s.name.clone(),
            })
            .collect();
        let width = names.iter().map(|n| n.chars().count()).max().unwrap_or(0);
        for (s, name) in self.sets.iter().zip(&names) {
            let pad = width - name.chars().count();
            let _ = writeln!(
                out,
                "{name}{}  {:>5}  {{{}}}",
                " ".repeat(pad),
                s.cardinality,
                s.elements.join(", ")
            );
        }
        out
    }
}

#[derive(Serialize)]
pub struct WitnessReport {
    pub elements: Vec<RenderedElement>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub side: Option<&'static str>,
    pub detail: String,
}

#[derive(Serialize)]
pub struct VerdictEntry {
    pub property: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessReport>,
}

impl VerdictEntry {
    pub fn new(r: &FiniteRing, v: PredicateVerdict, with_witness: bool) -> Self {
        let witness = v.witness.filter(|_| with_witness).map(|w| {
            let left = w.get("side").is_some();
            WitnessReport {
                elements: w
                    .roles
                    .iter()
                    .filter(|(role, _)| role != "side")
                    .map(|(role, e)| RenderedElement::new(r, role, *e))
                    .collect(),
                side: left.then_some("left"),
                detail: w.detail,
            }
        });
        VerdictEntry {
            property: v.property,
            holds: v.holds,
            witness,
        }
    }
}

#[derive(Serialize)]
pub struct VerdictsReport {
    pub schema: &'static str,
    pub ring: RingInfo,
    pub verdicts: Vec<VerdictEntry>,
}

impl VerdictsReport {
    pub fn new(ring: RingInfo, verdicts: Vec<VerdictEntry>) -> Self {
        VerdictsReport {
            schema: VERDICTS_SCHEMA,
            ring,
            verdicts,
        }
    }

    pub fn render(&self) -> String {
        let mut out = self.ring.header();
        let width = self
            .verdicts
            .iter()
            .map(|v| v.property.len())
            .max()
            .unwrap_or(0);
        for v in &self.verdicts {
            let _ = writeln!(out, "{:<width$}  {}", v.property, v.holds);
            if let Some(w) = &v.witness {
                for e in &w.elements {
                    let _ = writeln!(out, "{:width$}    {} = {}", "", e.role, e.value);
                }
                let _ = writeln!(out, "{:width$}    {}", "", w.detail);
            }
        }
        out
    }
}

fn outcome_label(o: Outcome) -> &'static str {
    match o {
        Outcome::Pass => "pass",
        Outcome::Fail => "FAIL",
        Outcome::Skipped => "skipped",
        Outcome::SkippedDegenerate => "skipped-degenerate",
        Outcome::Recorded => "recorded",
    }
}

pub fn render_suite(report: &SuiteReport) -> String {
    let mut out = String::new();
    for f in &report.build_failures {
        let _ = writeln!(out, "build failure  {}: {}", f.name, f.error);
    }
    let width = report
        .cases
        .iter()
        .map(|c| c.case_id.len())
        .max()
        .unwrap_or(0);
    for c in &report.cases {
        let _ = writeln!(
            out,
            "{:<18}  {:<width$}  {}",
            outcome_label(c.outcome),
            c.case_id,
            c.summary
        );
        if c.outcome == Outcome::Fail {
            if let Some(w) = &c.witness {
                let shown: Vec<String> = w
                    .elements
                    .iter()
                    .map(|(k, v)| format!("{k} = {v}"))
                    .collect();
                let _ = writeln!(
                    out,
                    "{:18}  {:width$}  {}: {} ({})",
                    "",
                    "",
                    w.ring,
                    shown.join(", "),
                    w.detail
                );
            }
            for i in c.instances.iter().filter(|i| !i.holds()) {
                let _ = writeln!(out, "{:18}  {:width$}  violated on {}", "", "", i.ring);
            }
        }
    }
    let s = &report.summary;
    let _ = writeln!(
        out,
        "{} cases: {} pass, {} fail, {} skipped, {} skipped-degenerate, {} recorded; {}",
        s.total,
        s.pass,
        s.fail,
        s.skipped,
        s.skipped_degenerate,
        s.recorded,
        if report.complete {
            "complete"
        } else {
            "INCOMPLETE"
        }
    );
    out
}
