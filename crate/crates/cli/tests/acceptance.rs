//! Acceptance criteria, one PASS/FAIL line each, with their time bounds.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use qnil_core::checkers::{self, Property, Side};
use qnil_core::constructions::{corner_members, corner_ring, from_matrix_entries, matrix_entries};
use qnil_core::suite::catalog::builtin;
use qnil_core::suite::{self, default_catalog, CatalogEntry, Outcome};
use qnil_core::{build, BuildOptions, ElementSet, FiniteRing, RingDescriptor};

struct Criterion {
    id: u8,
    title: &'static str,
    bound: Option<Duration>,
    run: fn() -> Result<String, String>,
}

fn ensure(ok: bool, what: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn ring(name: &str) -> FiniteRing {
    build(&builtin(name).expect("built-in")).expect("builds")
}

fn xuxu() -> Result<String, String> {
    let r = build(&RingDescriptor::XuxuLocal16).map_err(|e| e.to_string())?;
    let listed = ["0", "2", "x", "y", "2+x", "2+y", "2+x+y", "x+y"];
    let expected = ElementSet::from_members(
        16,
        listed
            .iter()
            .map(|l| (0..16).find(|&e| r.label(e) == *l).unwrap()),
    );
    ensure(
        r.qnil() == &expected,
        "qnil set differs from the 8 listed elements",
    )?;
    ensure(checkers::is_local(&r).holds, "not local")?;
    let (x, y) = (
        r.parse_element("a=0,b=1,c=0").unwrap(),
        r.parse_element("a=0,b=0,c=1").unwrap(),
    );
    ensure(r.label(r.mul(x, y)) == "2", "xy != 2")?;
    ensure(!checkers::qnil_square_zero(&r).holds, "(qnil)^2 = 0")?;
    let v = checkers::is_right_qnil_duo(&r);
    let w = v.witness.ok_or("right qnil-duo")?;
    ensure(
        Property::RightQnilDuo.reverify(&r, &w),
        "witness does not re-verify",
    )?;
    Ok(format!(
        "witness a = {}, b = {}",
        r.label(w.get("a").unwrap()),
        r.label(w.get("b").unwrap())
    ))
}

fn l11() -> Result<String, String> {
    let r = ring("l11-z4");
    let v = checkers::is_right_qnil_duo(&r);
    ensure(!v.holds, "right qnil-duo")?;
    let a = from_matrix_entries(&r, &[0, 0, 0, 1, 2, 1, 0, 0, 3]).ok_or("A not in L_(1,1)(Z_4)")?;
    let b = from_matrix_entries(&r, &[2, 0, 0, 1, 2, 3, 0, 0, 2]).ok_or("B not in L_(1,1)(Z_4)")?;
    ensure(r.is_qnil(b), "B not quasinilpotent")?;
    let ba = r.mul(b, a);
    ensure(
        matrix_entries(&r, ba).unwrap().1 == [0, 0, 0, 2, 0, 3, 0, 0, 2],
        "BA differs from the displayed product",
    )?;
    let c = r.qnil().iter().find(|&c| r.mul(a, c) == ba);
    ensure(c.is_none(), "some quasinilpotent C has AC = BA")?;
    ensure(
        Property::RightQnilDuo.reverify(&r, v.witness.as_ref().unwrap()),
        "checker witness fails",
    )?;
    Ok(format!(
        "order {}, {} quasinilpotent C searched",
        r.order(),
        r.qnil().len()
    ))
}

/// Runs the named suite cases on the named built-ins and requires a pass
/// with at least one check each.
fn suite_cases(rings: &[&str], ids: &[&str]) -> Result<String, String> {
    let catalog: Vec<CatalogEntry> = rings
        .iter()
        .map(|n| CatalogEntry::new(*n, builtin(n).expect("built-in")))
        .collect();
    let cases: Vec<_> = suite::registry()
        .into_iter()
        .filter(|c| ids.contains(&c.id))
        .collect();
    ensure(cases.len() == ids.len(), "some case ids are not registered")?;
    let report = suite::run_cases(&catalog, &cases, &BuildOptions::default());
    ensure(report.complete, "run incomplete")?;
    let mut checked = 0;
    for c in &report.cases {
        ensure(
            c.outcome == Outcome::Pass,
            format!("{}: {:?} ({})", c.case_id, c.outcome, c.summary),
        )?;
        ensure(
            c.checked.unwrap_or(0) > 0,
            format!("{} checked nothing", c.case_id),
        )?;
        checked += c.checked.unwrap();
    }
    Ok(format!("{} cases, {checked} checks", report.cases.len()))
}

fn characterizations() -> Result<String, String> {
    suite_cases(
        &[
            "l01-z4", "l10-z4", "l00-z4", "h11-z4", "h13-z4", "k0-z2", "k0-z4",
        ],
        &[
            "L4.1.1-l-units",
            "L4.1.2-l-diagonal-qnil",
            "L4.2.1-l0t-corner-entry",
            "L4.2.2-ls0-corner-entry",
            "L4.2.3-l00-characterization",
            "L4.5.1-h-commutant",
            "L4.5.2-h-inverse",
            "L4.5.3-h-qnil",
            "L4.7.1-k0-units",
            "L4.7.2-k0-center",
        ],
    )
}

fn qnil_algebra() -> Result<String, String> {
    let mut checks = 0u64;
    for e in default_catalog() {
        let r = build(&e.ring).map_err(|err| format!("{}: {err}", e.name))?;
        let n = &e.name;
        let q = r.qnil();
        ensure(
            r.jacobson().iter().all(|a| q.contains(a)),
            format!("{n}: J not in qnil"),
        )?;
        ensure(
            r.nilpotents().iter().all(|a| q.contains(a)),
            format!("{n}: N not in qnil"),
        )?;
        ensure(q.is_disjoint(r.units()), format!("{n}: unit in qnil"))?;
        for a in r.elements() {
            let mut p = a;
            for _ in 0..r.order().min(64) {
                ensure(
                    !q.contains(p) || q.contains(a),
                    format!("{n}: power closure fails at {}", r.label(a)),
                )?;
                p = r.mul(p, a);
            }
            for b in r.elements() {
                ensure(
                    q.contains(r.mul(a, b)) == q.contains(r.mul(b, a)),
                    format!("{n}: swap fails"),
                )?;
            }
        }
        for u in r.units().iter() {
            let inv = r.inverse(u).unwrap();
            ensure(
                q.iter().all(|a| q.contains(r.mul(r.mul(inv, a), u))),
                format!("{n}: conjugation fails"),
            )?;
        }
        for e_ in r.idempotents().iter() {
            for x in r.elements() {
                let exe = r.mul(r.mul(e_, x), e_);
                let ok =
                    q.contains(r.sub(r.mul(e_, x), exe)) && q.contains(r.sub(r.mul(x, e_), exe));
                ensure(ok, format!("{n}: idempotent defect fails"))?;
            }
            if e_ != r.zero() {
                let c = corner_ring(&r, e_).map_err(|err| err.to_string())?;
                let members = corner_members(&c);
                let ok = members
                    .iter()
                    .enumerate()
                    .all(|(i, &m)| c.is_qnil(i) == q.contains(m));
                ensure(
                    ok,
                    format!("{n}: corner equality fails for e = {}", r.label(e_)),
                )?;
            }
        }
        if let RingDescriptor::Product { .. } = r.descriptor() {
            for x in r.elements() {
                let coords = r.decode(x);
                let want = r
                    .parts()
                    .iter()
                    .zip(coords.iter())
                    .all(|(f, &v)| f.is_qnil(v));
                ensure(q.contains(x) == want, format!("{n}: product rule fails"))?;
            }
        }
        checks += (r.order() * r.order()) as u64;
    }
    Ok(format!(
        "{} rings, ~{checks} element pairs",
        default_catalog().len()
    ))
}

fn implications() -> Result<String, String> {
    let mut reached = [0usize; 6];
    let names = [
        "abelian",
        "exchange",
        "regular",
        "central",
        "local-square-zero",
        "products",
    ];
    for e in default_catalog() {
        let r = build(&e.ring).map_err(|err| err.to_string())?;
        let n = &e.name;
        let holds = |p: Property| p.check(&r).holds;
        let (right, left) = (holds(Property::RightQnilDuo), holds(Property::LeftQnilDuo));
        for duo in [right, left] {
            if duo {
                reached[0] += 1;
                ensure(
                    holds(Property::Abelian),
                    format!("{n}: qnil-duo but not abelian"),
                )?;
            }
            if duo && holds(Property::Exchange) {
                reached[1] += 1;
                ensure(
                    holds(Property::StableRangeOne),
                    format!("{n}: exchange without stable range 1"),
                )?;
            }
            if duo && holds(Property::Regular) {
                reached[2] += 1;
                ensure(
                    holds(Property::StronglyRegular),
                    format!("{n}: regular, not strongly regular"),
                )?;
            }
        }
        if holds(Property::QnilCentral) {
            reached[3] += 1;
            ensure(right && left, format!("{n}: central qnil, not qnil-duo"))?;
        }
        if holds(Property::Local) && holds(Property::QnilSquareZero) {
            reached[4] += 1;
            ensure(
                right && left,
                format!("{n}: local square-zero, not qnil-duo"),
            )?;
        }
        if let RingDescriptor::Product { .. } = r.descriptor() {
            for (side, whole) in [(Side::Right, right), (Side::Left, left)] {
                let p = if side == Side::Right {
                    Property::RightQnilDuo
                } else {
                    Property::LeftQnilDuo
                };
                let parts = r.parts().iter().all(|f| p.check(f).holds);
                reached[5] += usize::from(whole || parts);
                ensure(
                    whole == parts,
                    format!("{n}: product equivalence fails on the {side:?} side"),
                )?;
            }
        }
    }
    for (count, name) in reached.iter().zip(names) {
        ensure(*count > 0, format!("hypothesis `{name}` never true"))?;
    }
    let shown: Vec<String> = reached
        .iter()
        .zip(names)
        .map(|(c, n)| format!("{n} {c}"))
        .collect();
    Ok(format!("hypothesis counts: {}", shown.join(", ")))
}

fn dorroh() -> Result<String, String> {
    suite_cases(
        &["dorroh-m2z2-z2", "dorroh-z4-z4"],
        &[
            "L2.5.1-dorroh-commutant",
            "L2.5.2-dorroh-inverse",
            "P2.6.1-dorroh-algebra-part",
            "P2.6.2-dorroh-scalar-part",
            "T2.7-dorroh-criterion",
        ],
    )
}

fn series() -> Result<String, String> {
    let rings = [
        "hurwitz-z2-2",
        "hurwitz-z4-2",
        "skewpower-z2xz2-swap-2",
        "skewpower-f4-frob-1",
    ];
    let asserted = suite_cases(&rings, &["L2.9-series-units", "P2.10-series-inclusion"])?;
    let catalog: Vec<CatalogEntry> = rings
        .iter()
        .map(|n| CatalogEntry::new(*n, builtin(n).unwrap()))
        .collect();
    let ids = [
        "P2.10-hurwitz-equality",
        "T3.18.1-hurwitz-descent",
        "T3.18.2-skew-power-descent",
    ];
    let cases: Vec<_> = suite::registry()
        .into_iter()
        .filter(|c| ids.contains(&c.id))
        .collect();
    let report = suite::run_cases(&catalog, &cases, &BuildOptions::default());
    let eq = report
        .case("P2.10-hurwitz-equality")
        .ok_or("equality case missing")?;
    ensure(
        eq.outcome == Outcome::Recorded && eq.observations.len() == rings.len(),
        "equality not recorded per instance",
    )?;
    for id in &ids[1..] {
        let c = report.case(id).ok_or("descent case missing")?;
        ensure(c.outcome == Outcome::Pass, format!("{id}: {:?}", c.outcome))?;
    }
    let equal = eq
        .observations
        .iter()
        .filter(|o| o.value["equal"] == true)
        .count();
    Ok(format!(
        "{asserted}; equality on {equal}/{} instances; descent reported",
        rings.len()
    ))
}

fn verify_run() -> Result<String, String> {
    let bin = env!("CARGO_BIN_EXE_qnil");
    let dir = std::env::temp_dir().join(format!("qnil-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let mut reports = Vec::new();
    let mut first = String::new();
    for i in 0..2 {
        let out = dir.join(format!("report{i}.json"));
        let status = Command::new(bin)
            .args(["verify", "--catalog", "default", "--out"])
            .arg(&out)
            .output()
            .map_err(|e| e.to_string())?;
        ensure(
            status.status.code() == Some(0),
            format!("exit status {:?}", status.status.code()),
        )?;
        let text = std::fs::read_to_string(&out).map_err(|e| e.to_string())?;
        if i == 0 {
            first = text.clone();
        }
        let stripped: Vec<&str> = text
            .lines()
            .filter(|l| !l.trim_start().starts_with("\"millis\""))
            .collect();
        reports.push(stripped.join("\n"));
    }
    let _ = std::fs::remove_dir_all(&dir);
    ensure(
        reports[0] == reports[1],
        "reports differ beyond timing fields",
    )?;
    let value: serde_json::Value = serde_json::from_str(&first).map_err(|e| e.to_string())?;
    let cases = value["cases"].as_array().map(Vec::len).unwrap_or(0);
    ensure(value["summary"]["fail"] == 0, "assertion failures")?;
    Ok(format!("exit 0, {cases} cases, byte-stable modulo millis"))
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        id: 1,
        title: "XuXuLocal16 reproduction",
        bound: Some(Duration::from_secs(1)),
        run: xuxu,
    },
    Criterion {
        id: 2,
        title: "L_(1,1)(Z_4) negative example",
        bound: Some(Duration::from_secs(30)),
        run: l11,
    },
    Criterion {
        id: 3,
        title: "L, H and K_0 characterizations",
        bound: Some(Duration::from_secs(60)),
        run: characterizations,
    },
    Criterion {
        id: 4,
        title: "quasinilpotent algebra on the catalog",
        bound: None,
        run: qnil_algebra,
    },
    Criterion {
        id: 5,
        title: "implication suite on the catalog",
        bound: None,
        run: implications,
    },
    Criterion {
        id: 6,
        title: "Dorroh suite",
        bound: Some(Duration::from_secs(10)),
        run: dorroh,
    },
    Criterion {
        id: 7,
        title: "Hurwitz and skew power truncations",
        bound: None,
        run: series,
    },
    Criterion {
        id: 8,
        title: "verify --catalog default",
        bound: Some(Duration::from_secs(300)),
        run: verify_run,
    },
];

fn main() -> ExitCode {
    let mut failed = 0;
    for c in CRITERIA {
        let start = Instant::now();
        let result = (c.run)();
        let elapsed = start.elapsed();
        let result = match (result, c.bound) {
            (Ok(_), Some(b)) if elapsed > b => Err(format!("took {elapsed:.2?}, bound {b:?}")),
            (r, _) => r,
        };
        match result {
            Ok(detail) => println!(
                "PASS criterion {}: {} [{elapsed:.2?}] {detail}",
                c.id, c.title
            ),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {} [{elapsed:.2?}] {why}", c.id, c.title);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        CRITERIA.len() - failed,
        CRITERIA.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
