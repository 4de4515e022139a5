mod cache;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use hecke_f2::galois::{frattini_class, FrattiniClass};
use hecke_f2::genforms::{delta_mod2, f_generator};
use hecke_f2::tangent::{constraint_system, TangentSystem};
use hecke_f2::verify::{self, Report, Scale, Suite, CLASS_TABLE};

use cache::Cache;

#[derive(Parser)]
#[command(
    name = "hecke-f2",
    version,
    about = "Mod-2 Hecke algebras of level 1, 3 and 5"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Restrict to one level.
    #[arg(long, global = true, value_parser = clap::builder::PossibleValuesParser::new(["1", "3", "5"]))]
    level: Option<String>,

    /// q-precision, and the cap on form-degree bounds in verify.
    #[arg(long, global = true, default_value_t = 1000)]
    prec: usize,

    /// Total-degree bound for series extraction.
    #[arg(long, global = true, default_value_t = 12)]
    degree: usize,

    /// Largest power f^n in recurrence and relation checks.
    #[arg(long, global = true, default_value_t = 40)]
    nmax: usize,

    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Neither read nor write the expansion cache.
    #[arg(long, global = true)]
    no_cache: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Print a generator expansion (F2QSER unless --format is given).
    Gen {
        /// delta, f3 or f5.
        #[arg(long)]
        name: String,
    },
    /// Run a check suite and emit a report.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Frobenius class tables, reference against computed.
    Classes,
    /// Tangent constraint-system nullities by residue of N mod 8.
    Tangent,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn level(cli: &Cli) -> Option<u32> {
    cli.level
        .as_deref()
        .map(|s| s.parse().expect("validated by clap"))
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.out {
        Some(p) => fs::write(p, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<bool> {
    match &cli.command {
        Command::Gen { name } => gen(cli, name).map(|_| true),
        Command::Verify { suite } => verify_cmd(cli, suite),
        Command::Classes => classes(cli).map(|_| true),
        Command::Tangent => tangent(cli).map(|_| true),
    }
}

fn gen(cli: &Cli, name: &str) -> Result<()> {
    let lvl = level(cli);
    let level = match (name, lvl) {
        ("delta", l) => l.unwrap_or(1),
        ("f3", None | Some(3)) => 3,
        ("f5", None | Some(5)) => 5,
        ("f3" | "f5", Some(l)) => bail!("{name} is not a generator at level {l}"),
        _ => bail!("unknown generator {name:?}; expected delta, f3 or f5"),
    };
    let cache = if cli.no_cache {
        Cache::disabled()
    } else {
        Cache::from_env()
    };
    let prec = cli.prec;
    let q = cache.get_or_compute(name, level, prec, || match name {
        "delta" => Ok(delta_mod2(prec)),
        _ => f_generator(level, prec),
    })?;
    let text = match cli.format {
        None => q.to_f2qser(name, level),
        Some(Format::Text) => format!("{q}\n"),
        Some(Format::Json) => {
            let support: Vec<usize> = q.support().collect();
            let v = json!({"name": name, "level": level, "prec": q.prec(), "support": support});
            format!("{}\n", serde_json::to_string_pretty(&v)?)
        }
        Some(Format::Csv) => {
            let mut s = String::from("exponent\n");
            for e in q.support() {
                s.push_str(&format!("{e}\n"));
            }
            s
        }
    };
    emit(cli, &text)
}

fn verify_cmd(cli: &Cli, suite: &str) -> Result<bool> {
    let suite: Suite = suite.parse()?;
    let scale = Scale {
        level: level(cli),
        prec: cli.prec,
        degree: cli.degree,
        nmax: cli.nmax,
    };
    let report: Report = verify::run(suite, &scale);
    let text = match cli.format.unwrap_or(Format::Json) {
        Format::Json => report.to_json() + "\n",
        Format::Text => report.to_text(),
        Format::Csv => report.to_csv(),
    };
    emit(cli, &text)?;
    Ok(report.passed())
}

fn classes(cli: &Cli) -> Result<()> {
    let levels: Vec<u32> = match level(cli) {
        Some(1) => bail!("class tables exist for levels 3 and 5"),
        Some(n) => vec![n],
        None => vec![3, 5],
    };
    let mut rows = Vec::new();
    for (n, qs, _, expected) in CLASS_TABLE.iter().filter(|r| levels.contains(&r.0)) {
        for &q in qs.iter() {
            let c: FrattiniClass = frattini_class(q, *n)?;
            rows.push((*n, q, *expected, c));
        }
    }
    let text = match cli.format.unwrap_or(Format::Text) {
        Format::Text => {
            let mut s = format!(
                "{:>5} {:>5} {:>8} {:>8} {:>4}\n",
                "N", "q", "expected", "computed", "bits"
            );
            for (n, q, p, c) in &rows {
                s.push_str(&format!(
                    "{n:>5} {q:>5} {p:>8} {:>8} {:>4}\n",
                    c.to_string(),
                    format!("{:03b}", c.bits())
                ));
            }
            s
        }
        Format::Json => {
            let v: Vec<_> = rows
                .iter()
                .map(|(n, q, p, c)| {
                    json!({"level": n, "q": q, "expected": p, "computed": c.to_string(), "agree": *p == c.to_string()})
                })
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&v)?)
        }
        Format::Csv => {
            let mut s = String::from("level,q,expected,computed\n");
            for (n, q, p, c) in &rows {
                s.push_str(&format!("{n},{q},{p},{c}\n"));
            }
            s
        }
    };
    emit(cli, &text)
}

fn tangent(cli: &Cli) -> Result<()> {
    let residues: Vec<u8> = match level(cli) {
        Some(n) => vec![(n % 8) as u8],
        None => vec![1, 3, 5, 7],
    };
    let mut table = Vec::new();
    for &r in &residues {
        let mut row = Vec::new();
        for kind in TangentSystem::ALL {
            row.push(constraint_system(kind, r)?.nullity());
        }
        table.push((r, row));
    }
    let text = match cli.format.unwrap_or(Format::Text) {
        Format::Text => {
            let mut s = format!("{:>8}", "N mod 8");
            for k in TangentSystem::ALL {
                s.push_str(&format!(" {:>15}", k.name()));
            }
            s.push('\n');
            for (r, row) in &table {
                s.push_str(&format!("{r:>8}"));
                for v in row {
                    s.push_str(&format!(" {v:>15}"));
                }
                s.push('\n');
            }
            s.push_str(
                "values are constraint-system nullities (upper bounds for the tangent dimension)\n",
            );
            s
        }
        Format::Json => {
            let v: Vec<_> = table
                .iter()
                .map(|(r, row)| {
                    let mut m = serde_json::Map::new();
                    m.insert("n_mod_8".into(), json!(r));
                    for (k, x) in TangentSystem::ALL.iter().zip(row) {
                        m.insert(k.name().into(), json!(x));
                    }
                    serde_json::Value::Object(m)
                })
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&v)?)
        }
        Format::Csv => {
            let mut s = String::from("n_mod_8");
            for k in TangentSystem::ALL {
                s.push_str(&format!(",{}", k.name()));
            }
            s.push('\n');
            for (r, row) in &table {
                s.push_str(&r.to_string());
                for v in row {
                    s.push_str(&format!(",{v}"));
                }
                s.push('\n');
            }
            s
        }
    };
    emit(cli, &text)
}
