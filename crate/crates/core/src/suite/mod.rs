//! Registry of theorem cases run against a catalog of finite rings.
//!
//! Assertion cases must pass. Implication cases pass iff every instance
//! satisfies `¬H ∨ C`, and report how many instances had `H` true.
//! Recorded observations are logged and never fail the run.

mod cases;
pub mod catalog;

use std::collections::HashMap;
use std::sync::Mutex;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::checkers::{Property, Side};
use crate::constructions::{build_with, BuildOptions};
use crate::descriptor::RingDescriptor;
use crate::ring::{Elem, FiniteRing};
pub use catalog::{default_catalog, CatalogEntry, Manifest};

pub const SUITE_SCHEMA: &str = "qnil.suite/v1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseKind {
    Assertion,
    Implication,
    RecordedObservation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    Fail,
    Skipped,
    SkippedDegenerate,
    Recorded,
}

/// One registered result.
#[derive(Clone, Copy)]
pub struct TheoremCase {
    pub id: &'static str,
    pub paper_ref: &'static str,
    pub kind: CaseKind,
    run: fn(&Ctx) -> Result<Eval, Skip>,
}

impl std::fmt::Debug for TheoremCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TheoremCase")
            .field("id", &self.id)
            .field("kind", &self.kind)
            .finish()
    }
}

/// Rendered elements of a failing (or illustrating) instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseWitness {
    pub ring: String,
    pub elements: Vec<(String, String)>,
    pub detail: String,
}

impl CaseWitness {
    pub(crate) fn new(
        ring: &str,
        r: &FiniteRing,
        roles: &[(&str, Elem)],
        detail: impl Into<String>,
    ) -> Self {
        CaseWitness {
            ring: ring.to_string(),
            elements: roles
                .iter()
                .map(|&(n, e)| (n.to_string(), r.label(e)))
                .collect(),
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Instance {
    pub ring: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub side: Option<Side>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub hypothesis: bool,
    pub conclusion: bool,
}

impl Instance {
    pub fn holds(&self) -> bool {
        !self.hypothesis || self.conclusion
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Observation {
    pub ring: String,
    pub value: serde_json::Value,
}

pub(crate) enum Eval {
    Checked {
        ok: bool,
        checked: u64,
        witness: Option<CaseWitness>,
        detail: String,
    },
    Implications {
        instances: Vec<Instance>,
        witness: Option<CaseWitness>,
    },
    Recorded {
        observations: Vec<Observation>,
        detail: String,
    },
    Degenerate(String),
}

/// Why a case could not run.
pub(crate) struct Skip(pub String);

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CaseReport {
    pub case_id: String,
    pub paper_ref: String,
    pub kind: CaseKind,
    pub outcome: Outcome,
    pub summary: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checked: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypothesis_true: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub instances: Vec<Instance>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub observations: Vec<Observation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<CaseWitness>,
    pub millis: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BuildFailure {
    pub name: String,
    pub error: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub skipped_degenerate: usize,
    pub recorded: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub schema: &'static str,
    pub engine_version: &'static str,
    pub catalog: Manifest,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub build_failures: Vec<BuildFailure>,
    pub cases: Vec<CaseReport>,
    pub summary: Summary,
    /// No build failures and no skipped cases.
    pub complete: bool,
    pub millis: u64,
}

impl SuiteReport {
    /// Every assertion and implication case passed and the run is complete.
    pub fn success(&self) -> bool {
        self.complete && self.cases.iter().all(|c| c.outcome != Outcome::Fail)
    }

    pub fn case(&self, id: &str) -> Option<&CaseReport> {
        self.cases.iter().find(|c| c.case_id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Built catalog rings plus a verdict cache shared by the cases.
pub struct Ctx {
    rings: Vec<(String, FiniteRing)>,
    verdicts: Mutex<HashMap<(RingDescriptor, Property), bool>>,
}

impl Ctx {
    pub(crate) fn all(&self) -> impl Iterator<Item = (&str, &FiniteRing)> {
        self.rings.iter().map(|(n, r)| (n.as_str(), r))
    }

    pub(crate) fn select(
        &self,
        keep: impl Fn(&RingDescriptor) -> bool,
    ) -> Vec<(&str, &FiniteRing)> {
        self.all().filter(|(_, r)| keep(r.descriptor())).collect()
    }

    pub(crate) fn find(&self, desc: &RingDescriptor) -> Result<(&str, &FiniteRing), Skip> {
        self.all()
            .find(|(_, r)| r.descriptor() == desc)
            .ok_or_else(|| Skip(format!("{} is not in the catalog", desc.display_name())))
    }

    /// Cached property verdict, keyed by descriptor.
    pub(crate) fn holds(&self, ring: &FiniteRing, p: Property) -> bool {
        let key = (ring.descriptor().clone(), p);
        if let Some(&v) = self.verdicts.lock().unwrap().get(&key) {
            return v;
        }
        let v = p.check(ring).holds;
        self.verdicts.lock().unwrap().insert(key, v);
        v
    }

    pub(crate) fn duo(&self, ring: &FiniteRing, side: Side) -> bool {
        match side {
            Side::Right => self.holds(ring, Property::RightQnilDuo),
            Side::Left => self.holds(ring, Property::LeftQnilDuo),
        }
    }
}

/// All registered cases, sorted by id.
pub fn registry() -> Vec<TheoremCase> {
    let mut cases = cases::all();
    cases.sort_by_key(|c| c.id);
    cases
}

fn run_one(case: &TheoremCase, ctx: &Ctx) -> CaseReport {
    let start = Instant::now();
    let result = (case.run)(ctx);
    let millis = start.elapsed().as_millis() as u64;
    let mut report = CaseReport {
        case_id: case.id.to_string(),
        paper_ref: case.paper_ref.to_string(),
        kind: case.kind,
        outcome: Outcome::Skipped,
        summary: String::new(),
        checked: None,
        hypothesis_true: None,
        instances: Vec::new(),
        observations: Vec::new(),
        witness: None,
        millis,
    };
    match result {
        Err(Skip(reason)) => report.summary = reason,
        Ok(Eval::Degenerate(reason)) => {
            report.outcome = Outcome::SkippedDegenerate;
            report.summary = reason;
        }
        Ok(Eval::Checked {
            ok,
            checked,
            witness,
            detail,
        }) => {
            report.outcome = if ok { Outcome::Pass } else { Outcome::Fail };
            report.checked = Some(checked);
            report.witness = witness;
            report.summary = detail;
        }
        Ok(Eval::Implications { instances, witness }) => {
            let ok = instances.iter().all(Instance::holds);
            let h = instances.iter().filter(|i| i.hypothesis).count();
            report.outcome = if ok { Outcome::Pass } else { Outcome::Fail };
            report.summary = format!("{} instances, hypothesis true on {h}", instances.len());
            report.checked = Some(instances.len() as u64);
            report.hypothesis_true = Some(h);
            report.instances = instances;
            report.witness = witness;
        }
        Ok(Eval::Recorded {
            observations,
            detail,
        }) => {
            report.outcome = Outcome::Recorded;
            report.summary = detail;
            report.observations = observations;
        }
    }
    if case.kind == CaseKind::RecordedObservation && report.outcome == Outcome::Fail {
        report.outcome = Outcome::Recorded;
    }
    report
}

/// Builds the catalog and runs every case.
pub fn run_all(catalog: &[CatalogEntry]) -> SuiteReport {
    run_cases(catalog, &registry(), &BuildOptions::default())
}

pub fn run_cases(
    catalog: &[CatalogEntry],
    cases: &[TheoremCase],
    opts: &BuildOptions,
) -> SuiteReport {
    let start = Instant::now();
    let built: Vec<Result<(String, FiniteRing), BuildFailure>> = catalog
        .par_iter()
        .map(|e| {
            build_with(&e.ring, opts)
                .map(|r| (e.name.clone(), r))
                .map_err(|err| BuildFailure {
                    name: e.name.clone(),
                    error: err.to_string(),
                })
        })
        .collect();
    let mut rings = Vec::new();
    let mut build_failures = Vec::new();
    for b in built {
        match b {
            Ok(r) => rings.push(r),
            Err(f) => build_failures.push(f),
        }
    }
    let ctx = Ctx {
        rings,
        verdicts: Mutex::new(HashMap::new()),
    };
    let mut reports: Vec<CaseReport> = cases.par_iter().map(|c| run_one(c, &ctx)).collect();
    reports.sort_by(|a, b| a.case_id.cmp(&b.case_id));
    let mut summary = Summary {
        total: reports.len(),
        ..Summary::default()
    };
    for r in &reports {
        match r.outcome {
            Outcome::Pass => summary.pass += 1,
            Outcome::Fail => summary.fail += 1,
            Outcome::Skipped => summary.skipped += 1,
            Outcome::SkippedDegenerate => summary.skipped_degenerate += 1,
            Outcome::Recorded => summary.recorded += 1,
        }
    }
    let complete = build_failures.is_empty() && summary.skipped == 0;
    SuiteReport {
        schema: SUITE_SCHEMA,
        engine_version: env!("CARGO_PKG_VERSION"),
        catalog: catalog::manifest(catalog),
        build_failures,
        cases: reports,
        summary,
        complete,
        millis: start.elapsed().as_millis() as u64,
    }
}

/// Runs a single case by id.
pub fn run_case(catalog: &[CatalogEntry], id: &str) -> Option<CaseReport> {
    let case = registry().into_iter().find(|c| c.id == id)?;
    run_cases(catalog, &[case], &BuildOptions::default())
        .cases
        .pop()
}
