//! `qnil`: compute quasinilpotent sets, check ring predicates and run the
//! theorem suite from the command line.

mod explain;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use qnil_core::checkers::Property;
use qnil_core::suite::{self, catalog};
use qnil_core::{build_with, BuildError, BuildOptions, FiniteRing, RingDescriptor};

use report::{RingInfo, SetEntry, SetsReport, VerdictEntry, VerdictsReport};

#[derive(Parser)]
#[command(
    name = "qnil",
    version,
    about = "Quasinilpotent elements and qnil-duo rings over finite rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute element sets of a ring.
    Compute {
        #[command(flatten)]
        ring: RingArgs,
        /// Comma-separated: units, qnil, jacobson, nilpotents, idempotents,
        /// center, comm, double-comm.
        #[arg(long, value_delimiter = ',', required = true)]
        sets: Vec<String>,
        /// Element for `comm` and `double-comm`, e.g. `a=2,b=1,c=0`.
        #[arg(long)]
        element: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Evaluate ring predicates.
    Check {
        #[command(flatten)]
        ring: RingArgs,
        /// Comma-separated property names, or `all`.
        #[arg(long, value_delimiter = ',', required = true)]
        props: Vec<String>,
        /// Include witnesses for false verdicts.
        #[arg(long)]
        witness: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run the theorem suite over a catalog.
    Verify {
        /// `default` or a path to a catalog JSON file.
        #[arg(long, default_value = "default")]
        catalog: String,
        #[command(flatten)]
        caps: CapArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Describe a construction and its element encoding.
    Explain {
        #[command(flatten)]
        ring: RingArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// List built-in rings, properties and suite cases.
    List,
}

#[derive(Args)]
struct RingArgs {
    /// `builtin:NAME`, a built-in name, or a path to a descriptor JSON file.
    #[arg(long)]
    ring: String,
    #[command(flatten)]
    caps: CapArgs,
}

#[derive(Args)]
struct CapArgs {
    /// Refuse to build rings above this order.
    #[arg(long, env = "QNIL_ORDER_CAP")]
    order_cap: Option<usize>,
    /// Largest order for which the exhaustive axiom scan runs.
    #[arg(long, env = "QNIL_AXIOM_CAP")]
    axiom_cap: Option<usize>,
    /// Scan ring axioms on every build.
    #[arg(long)]
    verify_axioms: bool,
}

impl CapArgs {
    fn options(&self) -> BuildOptions {
        let mut opts = BuildOptions::default();
        if let Some(c) = self.order_cap {
            opts.order_cap = c;
        }
        if let Some(c) = self.axiom_cap {
            opts.axiom_cap = c;
        }
        opts.verify_axioms = self.verify_axioms;
        opts
    }
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Also write the JSON report to this path.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

const SET_NAMES: [&str; 8] = [
    "units",
    "qnil",
    "jacobson",
    "nilpotents",
    "idempotents",
    "center",
    "comm",
    "double-comm",
];

/// Exit status for invalid input.
const EXIT_INPUT: u8 = 2;
/// Exit status when a ring exceeds the order cap.
const EXIT_CAP: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            let cap = err.chain().any(|e| {
                matches!(
                    e.downcast_ref::<BuildError>(),
                    Some(BuildError::OrderCap { .. })
                )
            });
            ExitCode::from(if cap { EXIT_CAP } else { EXIT_INPUT })
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Compute {
            ring,
            sets,
            element,
            output,
        } => compute(&ring, &sets, element.as_deref(), &output),
        Command::Check {
            ring,
            props,
            witness,
            output,
        } => check(&ring, &props, witness, &output),
        Command::Verify {
            catalog,
            caps,
            output,
        } => verify(&catalog, &caps, &output),
        Command::Explain { ring, output } => {
            let r = load_ring(&ring)?;
            let report = explain::explain(&r);
            emit(&output, &report, || explain::render(&report))?;
            Ok(0)
        }
        Command::List => {
            list();
            Ok(0)
        }
    }
}

fn descriptor_for(spec: &str) -> Result<RingDescriptor> {
    let name = spec.strip_prefix("builtin:");
    if let Some(d) = catalog::builtin(name.unwrap_or(spec)) {
        return Ok(d);
    }
    if name.is_some() || !Path::new(spec).exists() {
        bail!(
            "unknown ring `{spec}`; built-ins: {}",
            catalog::builtin_names().join(", ")
        );
    }
    let text = std::fs::read_to_string(spec).with_context(|| format!("reading {spec}"))?;
    RingDescriptor::from_json(&text).with_context(|| format!("invalid descriptor in {spec}"))
}

fn load_ring(args: &RingArgs) -> Result<FiniteRing> {
    let desc = descriptor_for(&args.ring)?;
    build_with(&desc, &args.caps.options())
        .with_context(|| format!("cannot build {}", desc.display_name()))
}

fn emit<T: serde::Serialize>(
    output: &OutputArgs,
    report: &T,
    text: impl FnOnce() -> String,
) -> Result<()> {
    let json = serde_json::to_string_pretty(report)?;
    if let Some(path) = &output.out {
        std::fs::write(path, format!("{json}\n"))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    match output.format {
        Format::Json => println!("{json}"),
        Format::Text => print!("{}", text()),
    }
    Ok(())
}

fn compute(
    args: &RingArgs,
    sets: &[String],
    element: Option<&str>,
    output: &OutputArgs,
) -> Result<u8> {
    for s in sets {
        if !SET_NAMES.contains(&s.as_str()) {
            bail!(
                "unknown set `{s}`; expected one of {}",
                SET_NAMES.join(", ")
            );
        }
    }
    let needs_element = sets.iter().any(|s| s.contains("comm"));
    if needs_element && element.is_none() {
        bail!("`comm` and `double-comm` need --element");
    }
    let r = load_ring(args)?;
    let a = match element {
        Some(text) => Some(r.parse_element(text)?),
        None => None,
    };
    let entries = sets
        .iter()
        .map(|name| {
            let set = match name.as_str() {
                "units" => r.units().clone(),
                "qnil" => r.qnil().clone(),
                "jacobson" => r.jacobson().clone(),
                "nilpotents" => r.nilpotents().clone(),
                "idempotents" => r.idempotents().clone(),
                "center" => r.center().clone(),
                "comm" => r.commutant(a.unwrap()),
                "double-comm" => r.double_commutant(a.unwrap()),
                _ => unreachable!(),
            };
            SetEntry::new(&r, name, a.filter(|_| name.contains("comm")), &set)
        })
        .collect();
    let report = SetsReport::new(RingInfo::of(&r), entries);
    emit(output, &report, || report.render())?;
    Ok(0)
}

fn check(args: &RingArgs, props: &[String], witness: bool, output: &OutputArgs) -> Result<u8> {
    let props: Vec<Property> = if props.iter().any(|p| p == "all") {
        Property::ALL.to_vec()
    } else {
        props
            .iter()
            .map(|p| {
                Property::from_name(p).ok_or_else(|| {
                    let names: Vec<&str> = Property::ALL.iter().map(|p| p.name()).collect();
                    anyhow!(
                        "unknown property `{p}`; expected one of {}",
                        names.join(", ")
                    )
                })
            })
            .collect::<Result<_>>()?
    };
    let r = load_ring(args)?;
    let verdicts = props
        .iter()
        .map(|&p| VerdictEntry::new(&r, p.check(&r), witness))
        .collect();
    let report = VerdictsReport::new(RingInfo::of(&r), verdicts);
    emit(output, &report, || report.render())?;
    Ok(0)
}

fn verify(source: &str, caps: &CapArgs, output: &OutputArgs) -> Result<u8> {
    let entries = if source == "default" {
        suite::default_catalog()
    } else {
        let text = std::fs::read_to_string(source).with_context(|| format!("reading {source}"))?;
        catalog::parse_catalog(&text).with_context(|| format!("invalid catalog {source}"))?
    };
    let report = suite::run_cases(&entries, &suite::registry(), &caps.options());
    emit(output, &report, || report::render_suite(&report))?;
    Ok(if report.success() { 0 } else { 1 })
}

fn list() {
    println!("built-in rings:");
    for e in suite::default_catalog() {
        println!("  {:<28} {}", e.name, e.ring.display_name());
    }
    println!("properties:");
    for p in Property::ALL {
        println!("  {}", p.name());
    }
    println!("suite cases:");
    for c in suite::registry() {
        println!("  {:<36} {}", c.id, c.paper_ref);
    }
}
