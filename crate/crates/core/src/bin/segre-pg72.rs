//! `segre-pg72 <verify|eval|export|orbits|group>`.
//!
//! Exit codes: 0 success, 1 a check failed or output could not be written,
//! 2 usage error.

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use segre_pg72::anf::Anf;
use segre_pg72::export::{self, Format, Group};
use segre_pg72::gf2::parse_point;
use segre_pg72::groups::{closure, named_elements, schreier_sims, DEFAULT_CAP};
use segre_pg72::verify::{run_suite, Suite, DEFAULT_SEED};

#[derive(Parser)]
#[command(
    name = "segre-pg72",
    version,
    about = "Segre variety S(1,1,1) over GF(2) in PG(7,2)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite: all, groups, orbits, spread, polys, table1.
    Verify {
        suite: String,
        #[arg(long, default_value = "text")]
        format: String,
        #[arg(long)]
        out: Option<String>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Evaluate a named polynomial (P1..P15, Q2, Q4, Q4', Q6, Q6'), a hex
    /// coefficient mask or a monomial sum at a point given in shorthand.
    Eval { poly: String, point: String },
    /// Export orbits, spread, polys or model.
    Export {
        what: String,
        #[arg(long, default_value = "json")]
        format: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// Point orbits of GS, GS0 or GB.
    Orbits {
        #[arg(long, default_value = "GS")]
        group: String,
        #[arg(long, default_value = "text")]
        format: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// Group orders and named elements.
    Group {
        #[command(subcommand)]
        action: GroupAction,
    },
}

#[derive(Subcommand)]
enum GroupAction {
    /// Order of the group generated by a comma-separated list of names.
    /// Uses explicit closure up to `--cap` elements, Schreier-Sims beyond.
    Order {
        #[arg(long)]
        gens: String,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Named elements as 8 hex-pair rows.
    List,
}

enum Failure {
    Usage(String),
    Failed(String),
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn failed(e: impl std::fmt::Display) -> Failure {
    Failure::Failed(e.to_string())
}

/// Print a line to stdout; a closed pipe (`| head`) is not an error.
fn say(line: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{line}");
}

fn emit(text: &str, out: Option<&str>) -> Result<(), Failure> {
    match out {
        Some(path) => {
            let body = if text.ends_with('\n') {
                text.to_owned()
            } else {
                format!("{text}\n")
            };
            std::fs::write(path, body).map_err(|e| failed(format!("cannot write {path}: {e}")))
        }
        None => {
            say(text.trim_end_matches('\n'));
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Verify {
            suite,
            format,
            out,
            seed,
        } => {
            let suite: Suite = suite.parse().map_err(usage)?;
            let format: Format = format.parse().map_err(usage)?;
            let report = run_suite(suite, seed);
            let text = match format {
                Format::Json => report.to_json(),
                Format::Text => report.to_string(),
                Format::Csv => return Err(usage("verify supports text and json")),
            };
            emit(&text, out.as_deref())?;
            Ok(report.all_passed())
        }
        Command::Eval { poly, point } => {
            let p = parse_point(&point).map_err(usage)?;
            let catalog = export::poly_catalog().map_err(failed)?;
            let f = match catalog.get(&poly) {
                Some(f) => f,
                None => Anf::from_hex(&poly)
                    .or_else(|_| Anf::parse(&poly))
                    .map_err(|_| usage(format!("unknown polynomial {poly:?}")))?,
            };
            say(&u8::from(f.evaluate(p)).to_string());
            Ok(true)
        }
        Command::Export { what, format, out } => {
            let format: Format = format.parse().map_err(usage)?;
            let text = match what.as_str() {
                "orbits" => export::export_orbits(format),
                "spread" => export::export_spread(format),
                "polys" => export::export_polys(format),
                "model" if format != Format::Json => {
                    return Err(usage("the model is exported as JSON only"))
                }
                "model" => export::export_model(format),
                _ => return Err(usage(format!("unknown export {what:?}"))),
            }
            .map_err(failed)?;
            emit(&text, out.as_deref())?;
            Ok(true)
        }
        Command::Orbits { group, format, out } => {
            let group: Group = group.parse().map_err(usage)?;
            let format: Format = format.parse().map_err(usage)?;
            let entries = export::orbit_table(group).map_err(failed)?;
            let text = export::render_orbit_table(&entries, format).map_err(failed)?;
            emit(&text, out.as_deref())?;
            Ok(true)
        }
        Command::Group { action } => {
            let cat = named_elements().map_err(failed)?;
            match action {
                GroupAction::Order { gens, cap } => {
                    let gens = cat.resolve_list(&gens).map_err(usage)?;
                    let order = match closure(&gens, cap) {
                        Ok(g) => g.order().unwrap_or_else(|| schreier_sims(&gens)),
                        Err(_) => schreier_sims(&gens),
                    };
                    say(&order.to_string());
                }
                GroupAction::List => {
                    for e in cat.iter() {
                        say(&format!("{:<4} {}", e.name, e.matrix.to_hex_rows()));
                    }
                }
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("usage: segre-pg72 <verify|eval|export|orbits|group> [flags]");
            ExitCode::from(2)
        }
        Err(Failure::Failed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
