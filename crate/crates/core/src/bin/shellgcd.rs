//! Command-line front end. Exit codes: 0 holds, 1 fails, 2 input error, 3 undecided.

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use shellgcd::format::{format_face_list, parse_complex, parse_face_list, to_json, to_text};
use shellgcd::hunt::{hunt_counterexample, HuntConfig};
use shellgcd::random::{random_complex, random_flag_complex};
use shellgcd::verify::verify_paper;
use shellgcd::{
    build_fact_table, find_shelling_order, find_strong_gcd_order, find_weak_shelling_order, is_cohen_macaulay,
    is_sequentially_cm, reduced_homology, CmReport, Complex, Error, FieldSpec, OrderCertificate, OrderKind,
    SearchConfig, SearchOutcome,
};

#[derive(Parser)]
#[command(
    name = "shellgcd",
    version,
    about = "Shelling orders, strong gcd-orders and Cohen-Macaulay checks"
)]
struct Cli {
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, ValueEnum)]
enum Kind {
    Shelling,
    Weak,
    Sgcd,
}

impl From<Kind> for OrderKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Shelling => OrderKind::Shelling,
            Kind::Weak => OrderKind::WeakShelling,
            Kind::Sgcd => OrderKind::StrongGcd,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Alexander dual.
    Dual { input: String },
    /// Minimal non-faces.
    Nonfaces { input: String },
    /// Validate an order given as `1,2,3; 1,2,6; 4,5,6`.
    Check {
        kind: Kind,
        input: String,
        #[arg(long)]
        order: String,
    },
    /// Search for an order.
    Find { kind: Kind, input: String },
    /// Whether every minimal non-face has two elements.
    Flag { input: String },
    /// Reduced homology ranks.
    Homology {
        input: String,
        #[arg(long, default_value = "gf2")]
        field: String,
    },
    /// Reisner's criterion (GF(2) and Q unless --field is given).
    Cm {
        input: String,
        #[arg(long)]
        field: Option<String>,
    },
    /// Sequential Cohen-Macaulayness through pure skeleta.
    Scm {
        input: String,
        #[arg(long)]
        field: Option<String>,
    },
    /// Fact table: dual shellable, strong gcd, dual seq-CM, Golod.
    Table { input: String },
    /// Re-check the worked examples.
    VerifyPaper,
    /// Print a seeded random complex.
    Random {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 6)]
        vertices: usize,
        #[arg(long, default_value_t = 0.1)]
        density: f64,
        /// Clique complex of G(n, p) with this edge probability instead.
        #[arg(long)]
        edge_prob: Option<f64>,
    },
    /// Look for sequentially Cohen-Macaulay complexes with no weak shelling order.
    Hunt {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        budget: usize,
    },
}

fn read_complex(path: &str) -> Result<Complex, Error> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(path)?
    };
    parse_complex(&text)
}

fn fields(arg: &Option<String>) -> Result<Vec<FieldSpec>, Error> {
    match arg {
        Some(f) => Ok(vec![FieldSpec::parse(f)?]),
        None => Ok(FieldSpec::defaults().to_vec()),
    }
}

fn verdict_code(ok: bool) -> u8 {
    if ok {
        0
    } else {
        1
    }
}

fn print_complex(c: &Complex, as_json: bool) {
    if as_json {
        println!("{}", to_json(c));
    } else {
        print!("{}", to_text(c));
    }
}

fn cm_reports(c: &Complex, fields: &[FieldSpec], sequential: bool, as_json: bool) -> Result<u8, Error> {
    let reports = fields
        .iter()
        .map(|&f| {
            if sequential {
                is_sequentially_cm(c, f)
            } else {
                is_cohen_macaulay(c, f)
            }
        })
        .collect::<Result<Vec<CmReport>, Error>>()?;
    if as_json {
        let rows: Vec<_> = reports
            .iter()
            .map(|r| {
                json!({
                    "field": r.field.to_string(),
                    "verdict": r.verdict,
                    "witness": r.witness.as_ref().map(|w| json!({
                        "skeleton": w.skeleton,
                        "face": c.universe().labels_of(w.face),
                        "degree": w.degree,
                        "rank": w.rank,
                    })),
                })
            })
            .collect();
        println!("{}", serde_json::Value::Array(rows));
    } else {
        for r in &reports {
            match &r.witness {
                None => println!("{}: yes", r.field),
                Some(w) => {
                    let skel = w
                        .skeleton
                        .map(|d| format!(" in the pure {d}-skeleton"))
                        .unwrap_or_default();
                    println!(
                        "{}: no; link of {}{skel} has H~{} of rank {}",
                        r.field,
                        c.display_face(w.face),
                        w.degree,
                        w.rank
                    );
                }
            }
        }
    }
    Ok(verdict_code(reports.iter().all(|r| r.verdict)))
}

fn print_outcome(c: &Complex, outcome: &SearchOutcome, as_json: bool) -> u8 {
    let (status, code) = match outcome {
        SearchOutcome::Found(_) => ("found", 0),
        SearchOutcome::NoneExists => ("none-exists", 1),
        SearchOutcome::Undecided(_) => ("undecided", 3),
    };
    if as_json {
        let order = outcome.certificate().map(|cert| {
            cert.sequence
                .iter()
                .map(|&f| c.universe().labels_of(f))
                .collect::<Vec<_>>()
        });
        let reason = match outcome {
            SearchOutcome::Undecided(r) => Some(r.as_str()),
            _ => None,
        };
        println!("{}", json!({ "status": status, "order": order, "reason": reason }));
    } else {
        match outcome {
            SearchOutcome::Found(cert) => println!("found: {}", format_face_list(c, &cert.sequence)),
            SearchOutcome::NoneExists => println!("none exists"),
            SearchOutcome::Undecided(r) => println!("undecided: {r}"),
        }
    }
    code
}

fn run(cli: Cli) -> Result<u8, Error> {
    let config = SearchConfig::from_env();
    let as_json = cli.json;
    match cli.command {
        Command::Dual { input } => {
            print_complex(&read_complex(&input)?.alexander_dual(), as_json);
            Ok(0)
        }
        Command::Nonfaces { input } => {
            let c = read_complex(&input)?;
            let m = c.minimal_nonfaces();
            if as_json {
                let lists: Vec<_> = m.iter().map(|&f| c.universe().labels_of(f)).collect();
                println!("{}", serde_json::to_string(&lists)?);
            } else {
                for f in m {
                    println!("{}", c.display_face(f));
                }
            }
            Ok(0)
        }
        Command::Check { kind, input, order } => {
            let c = read_complex(&input)?;
            let cert = OrderCertificate::new(kind.into(), parse_face_list(&c, &order)?);
            let report = cert.verify(&c)?;
            if as_json {
                let witness = report.witness.as_ref().map(|w| format!("{w:?}"));
                println!(
                    "{}",
                    json!({ "kind": cert.kind, "verdict": report.verdict, "witness": witness })
                );
            } else {
                match &report.witness {
                    None => println!("valid {} order", cert.kind),
                    Some(w) => println!("not a {} order: {w:?}", cert.kind),
                }
            }
            Ok(verdict_code(report.verdict))
        }
        Command::Find { kind, input } => {
            let c = read_complex(&input)?;
            let outcome = match kind {
                Kind::Shelling => find_shelling_order(&c, &config),
                Kind::Weak => find_weak_shelling_order(&c, &config),
                Kind::Sgcd => find_strong_gcd_order(&c, &config),
            };
            Ok(print_outcome(&c, &outcome, as_json))
        }
        Command::Flag { input } => {
            let flag = read_complex(&input)?.is_flag();
            println!(
                "{}",
                if as_json {
                    json!({ "flag": flag }).to_string()
                } else {
                    flag.to_string()
                }
            );
            Ok(verdict_code(flag))
        }
        Command::Homology { input, field } => {
            let c = read_complex(&input)?;
            let field = FieldSpec::parse(&field)?;
            let h = reduced_homology(&c, field)?;
            if as_json {
                let ranks: serde_json::Map<String, serde_json::Value> =
                    h.iter().map(|(d, r)| (d.to_string(), json!(r))).collect();
                println!("{}", json!({ "field": field.to_string(), "ranks": ranks }));
            } else {
                println!("{field}: {h}");
            }
            Ok(0)
        }
        Command::Cm { input, field } => cm_reports(&read_complex(&input)?, &fields(&field)?, false, as_json),
        Command::Scm { input, field } => cm_reports(&read_complex(&input)?, &fields(&field)?, true, as_json),
        Command::Table { input } => {
            let c = read_complex(&input)?;
            let table = build_fact_table(&c, &FieldSpec::defaults(), &config);
            if as_json {
                println!("{}", serde_json::to_string(&table)?);
            } else {
                print!("{table}");
            }
            Ok(verdict_code(table.conflicts().is_empty()))
        }
        Command::VerifyPaper => {
            let report = verify_paper();
            if as_json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                for c in &report.claims {
                    println!("{} {} {}", if c.passed { "PASS" } else { "FAIL" }, c.id, c.detail);
                }
            }
            Ok(verdict_code(report.all_passed()))
        }
        Command::Random {
            seed,
            vertices,
            density,
            edge_prob,
        } => {
            let c = match edge_prob {
                Some(p) => random_flag_complex(seed, vertices, p)?,
                None => random_complex(seed, vertices, density)?,
            };
            print_complex(&c, as_json);
            Ok(0)
        }
        Command::Hunt { seed, budget } => {
            let report = hunt_counterexample(
                seed,
                budget,
                &HuntConfig {
                    search: config,
                    ..HuntConfig::default()
                },
            );
            if as_json {
                let hits: Vec<_> = report
                    .hits
                    .iter()
                    .map(|c| serde_json::from_str::<serde_json::Value>(&to_json(c)).expect("valid json"))
                    .collect();
                println!(
                    "{}",
                    json!({ "stats": report.stats, "hits": hits, "skipped": report.skipped })
                );
            } else {
                let s = &report.stats;
                println!(
                    "sampled {} | degenerate {} | trivially weak {} | weakly shellable {} | undecided {} | seq-CM tested {} | not seq-CM {} | hits {}",
                    s.sampled, s.degenerate, s.trivially_weak, s.weakly_shellable, s.undecided, s.scm_tested, s.not_scm, s.hits
                );
                for c in &report.hits {
                    println!("hit: {c}");
                }
            }
            Ok(if report.hits.is_empty() { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
