//! Scriptable front end: construction, counting, lattice export, table
//! reproduction and verification. Exit codes: 0 success/PASS, 1 verification
//! FAIL, 2 usage or input error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use cyclic_census::analysis::{hasse_dot, subgroup_lattice_capped, DEFAULT_LATTICE_CAP};
use cyclic_census::tables::{load_scenario_dir, reproduce_table, TableScenario, DEFAULT_SCAN_BOUND};
use cyclic_census::verify::{audit_tables, verify_entries, verify_registry, verify_theorem};
use cyclic_census::{
    admissible_shapes, cyclic_profile, parse_spec, shape_classes, GroupSpec, DEFAULT_ORDER_CAP,
};
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "cyclic-census", version, about = "Exact cyclic-subgroup census toolkit")]
struct Cli {
    /// Cap on the order of any constructed group.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER_CAP)]
    order_cap: u64,
    /// Cap on |G| for subgroup-lattice construction.
    #[arg(long, global = true, default_value_t = DEFAULT_LATTICE_CAP)]
    lattice_cap: usize,
    /// Prime scan bound for multivariate solving.
    #[arg(long, global = true, default_value_t = DEFAULT_SCAN_BOUND)]
    scan_bound: u64,
    /// Directory of scenario files (default: the embedded set; env
    /// CYCLIC_CENSUS_SCENARIOS is used when the flag is absent).
    #[arg(long, global = true)]
    scenarios: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Count cyclic subgroups of a group given in the spec DSL ("-" reads
    /// one spec per line from stdin).
    Count {
        spec: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Subgroup lattice of a group, as a DOT Hasse diagram by default.
    Lattice {
        spec: String,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
    /// Reproduce the Diophantine case tables and diff them against the
    /// recorded transcription.
    Tables(TablesArgs),
    /// Run the verification suites.
    Verify(VerifyArgs),
    /// Admissible order shapes for an n-cyclic group.
    Shapes {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Args)]
struct TablesArgs {
    /// Reproduce a single table by id (e.g. T1).
    #[arg(long, conflicts_with = "all")]
    id: Option<String>,
    /// Reproduce every shipped table.
    #[arg(long)]
    all: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Verify membership of the 11- or 12-cyclic classification.
    #[arg(long, value_parser = clap::value_parser!(u64))]
    theorem: Option<u64>,
    /// Verify the known-small registry and inline count claims.
    #[arg(long)]
    registry: bool,
    /// Entries to verify instead of the built-in registry:
    /// JSON [{"name", "spec", "expected"}].
    #[arg(long)]
    registry_file: Option<PathBuf>,
    /// Run everything: both theorems, the registry, and the table audit.
    #[arg(long)]
    full: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn scenarios_for(cli_dir: &Option<PathBuf>) -> cyclic_census::Result<Vec<TableScenario>> {
    let dir = cli_dir
        .clone()
        .or_else(|| std::env::var_os("CYCLIC_CENSUS_SCENARIOS").map(PathBuf::from));
    match dir {
        Some(d) => load_scenario_dir(&d),
        None => cyclic_census::tables::all_scenarios(),
    }
}

fn parse_specs(arg: &str) -> cyclic_census::Result<Vec<GroupSpec>> {
    if arg == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| cyclic_census::Error::MalformedSpec(e.to_string()))?;
        text.lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(parse_spec)
            .collect()
    } else {
        Ok(vec![parse_spec(arg)?])
    }
}

fn run(cli: Cli) -> cyclic_census::Result<ExitCode> {
    match &cli.command {
        Command::Count { spec, format } => {
            for spec in parse_specs(spec)? {
                let g = spec.build(cli.order_cap)?;
                let profile = cyclic_profile(&g);
                match format {
                    Format::Json => println!("{}", profile.to_json()),
                    Format::Text => {
                        println!("{}: |G| = {}, c(G) = {}", g.label(), g.order(), profile.total);
                        for (m, c) in &profile.per_order {
                            println!("  c({m}) = {c}");
                        }
                    }
                    Format::Csv => {
                        println!("order,total");
                        println!("{},{}", profile.group_order, profile.total);
                    }
                    Format::Dot => {
                        return Err(cyclic_census::Error::MalformedSpec(
                            "dot output applies to lattices".into(),
                        ))
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Lattice { spec, format } => {
            let g = parse_spec(spec)?.build(cli.order_cap)?;
            let lattice = subgroup_lattice_capped(&g, cli.lattice_cap)?;
            match format {
                Format::Dot => print!("{}", hasse_dot(&lattice)),
                Format::Json => {
                    let subgroups: Vec<serde_json::Value> = lattice
                        .subgroups
                        .iter()
                        .map(|s| serde_json::json!({"order": s.order, "elements": s.elements}))
                        .collect();
                    println!(
                        "{}",
                        serde_json::json!({
                            "group": g.label(),
                            "subgroups": subgroups,
                            "covers": lattice.covers,
                        })
                    );
                }
                _ => {
                    println!(
                        "{}: {} subgroups, {} cover relations",
                        g.label(),
                        lattice.subgroups.len(),
                        lattice.covers.len()
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Tables(args) => {
            let scenarios = scenarios_for(&cli.scenarios)?;
            let selected: Vec<&TableScenario> = if args.all {
                scenarios.iter().collect()
            } else if let Some(id) = &args.id {
                vec![scenarios
                    .iter()
                    .find(|s| &s.id == id)
                    .ok_or_else(|| cyclic_census::Error::UnknownTableId(id.clone()))?]
            } else {
                return Err(cyclic_census::Error::MalformedSpec(
                    "pass --id <ID> or --all".into(),
                ));
            };
            let mut all_ok = true;
            for sc in selected {
                let rep = reproduce_table(sc, cli.scan_bound)?;
                all_ok &= rep.ok;
                match args.format {
                    Format::Json => println!("{}", rep.to_json()),
                    Format::Csv => print!("{}", rep.to_csv(sc)),
                    _ => print!("{}", rep.to_text()),
                }
            }
            Ok(if all_ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Verify(args) => {
            let mut reports = Vec::new();
            let mut audit = None;
            if let Some(n) = args.theorem {
                if n != 11 && n != 12 {
                    return Err(cyclic_census::Error::ParamOutOfRange(
                        "only 11 and 12 are classified".into(),
                    ));
                }
                reports.push(verify_theorem(n, cli.order_cap));
            }
            if let Some(path) = &args.registry_file {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| cyclic_census::Error::ScenarioData(e.to_string()))?;
                reports.push(verify_entries("registry file", &parse_registry_file(&text)?));
            } else if args.registry {
                reports.push(verify_registry());
            }
            if args.full {
                reports.push(verify_theorem(11, cli.order_cap));
                reports.push(verify_theorem(12, cli.order_cap));
                reports.push(verify_registry());
                audit = Some(audit_tables(&scenarios_for(&cli.scenarios)?, cli.scan_bound)?);
            }
            if reports.is_empty() && audit.is_none() {
                return Err(cyclic_census::Error::MalformedSpec(
                    "pass --theorem 11|12, --registry, --registry-file or --full".into(),
                ));
            }
            let mut pass = reports.iter().all(|r| r.pass);
            if let Some(a) = &audit {
                pass &= a.pass;
            }
            match args.format {
                Format::Json => {
                    let mut out = serde_json::json!({
                        "reports": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
                        "pass": pass,
                    });
                    if let Some(a) = &audit {
                        out["audit"] = a.to_json();
                    }
                    println!("{out}");
                }
                _ => {
                    for r in &reports {
                        print!("{}", r.to_text());
                    }
                    if let Some(a) = &audit {
                        print!("{}", a.to_text());
                    }
                    println!("overall: {}", if pass { "PASS" } else { "FAIL" });
                }
            }
            Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Shapes { n, format } => {
            let shapes = admissible_shapes(*n);
            match format {
                Format::Json => {
                    println!(
                        "{}",
                        serde_json::json!({
                            "n": n,
                            "classes": shape_classes(*n),
                            "shapes": shapes.iter().map(|s| s.exponents.clone()).collect::<Vec<_>>(),
                        })
                    );
                }
                _ => {
                    for class in shape_classes(*n) {
                        println!("{class}");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn parse_registry_file(text: &str) -> cyclic_census::Result<Vec<(String, GroupSpec, u64)>> {
    #[derive(serde::Deserialize)]
    struct Entry {
        name: String,
        spec: String,
        expected: u64,
    }
    let entries: Vec<Entry> =
        serde_json::from_str(text).map_err(|e| cyclic_census::Error::ScenarioData(e.to_string()))?;
    entries
        .into_iter()
        .map(|e| Ok((e.name, parse_spec(&e.spec)?, e.expected)))
        .collect()
}
