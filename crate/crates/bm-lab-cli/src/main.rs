//! `bmlab`: command-line front end for the bm-lab quasigroup workbench.
//!
//! Exit codes, shared by every subcommand:
//! - 0 — success / the property holds / a witness was found
//! - 1 — definite negative answer (identity fails, search exhausted,
//!   report has discrepancies)
//! - 2 — usage or input error
//! - 3 — search budget exhausted without a decision

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use bm_lab::{
    catalog_json, find_with_threads, lookup, reproduce_table1, satisfies, CayleyTable, Identity,
    Predicate, SearchQuery, UnitProfile, DEFAULT_BUDGET,
};
use clap::{Parser, Subcommand};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "bmlab",
    version,
    about = "Finite quasigroups and the 60 Bol-Moufang identities"
)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for searches; results are identical for any value.
    #[arg(long, global = true, env = "BM_LAB_THREADS", default_value_t = 1)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check whether a Cayley table satisfies an identity.
    Check {
        /// Table file: `order n` header, then n whitespace-separated rows.
        table: PathBuf,
        /// Catalog label (`F7`) or inline identity (`"xy.zx = (xy.z)x"`).
        identity: String,
    },
    /// Print a table's unit/loop/group profile.
    Units { table: PathBuf },
    /// Search for a quasigroup satisfying an identity and a structural
    /// requirement.
    Search {
        /// Catalog label or inline identity.
        #[arg(long)]
        identity: String,
        /// Structural requirement on the witness.
        #[arg(long, default_value = "always", value_parser = parse_predicate)]
        require: Predicate,
        /// Inclusive order range, e.g. `3..6` (or a single order `3`).
        #[arg(long)]
        orders: String,
        /// Node-expansion budget shared across the range.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Recompute the 60-row classification table and compare it against
    /// the printed reference values.
    Table1 {
        /// Exhaustively verify "+" cells over all orders up to this.
        #[arg(long, default_value_t = 4)]
        max_order: usize,
        /// Order cap for counterexample searches backing "−" cells.
        #[arg(long, default_value_t = 6)]
        witness_cap: usize,
        /// Also write the full JSON report to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Analyze one identity (or dump the whole catalog).
    Identity {
        /// Catalog label to analyze.
        #[arg(long, conflicts_with = "parse")]
        label: Option<String>,
        /// Inline identity to analyze.
        #[arg(long)]
        parse: Option<String>,
        /// Print the execution-order type.
        #[arg(long = "type")]
        type_: bool,
        /// Print the parastrophe partner and image.
        #[arg(long)]
        parastrophe: bool,
        /// Print the whole 60-identity catalog.
        #[arg(long, conflicts_with_all = ["label", "parse", "type_", "parastrophe"])]
        catalog: bool,
    },
}

fn parse_predicate(s: &str) -> Result<Predicate, String> {
    Predicate::from_str(s)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((output, code)) => {
            write_stdout(&output);
            ExitCode::from(code)
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

/// Writes the finished output, exiting quietly when the reader has closed
/// the pipe (e.g. `bmlab table1 | head`).
fn write_stdout(text: &str) {
    use std::io::{ErrorKind, Write};
    let mut out = std::io::stdout().lock();
    let result = out.write_all(text.as_bytes()).and_then(|()| out.flush());
    if let Err(e) = result {
        if e.kind() == ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: cannot write to stdout: {e}");
        std::process::exit(2);
    }
}

/// Runs one subcommand, returning the stdout payload and the exit code.
fn run(cli: &Cli) -> Result<(String, u8)> {
    match &cli.command {
        Command::Check { table, identity } => cmd_check(cli, table, identity),
        Command::Units { table } => cmd_units(cli, table),
        Command::Search {
            identity,
            require,
            orders,
            budget,
        } => cmd_search(cli, identity, *require, orders, *budget),
        Command::Table1 {
            max_order,
            witness_cap,
            out,
        } => cmd_table1(cli, *max_order, *witness_cap, out.as_deref()),
        Command::Identity {
            label,
            parse,
            type_,
            parastrophe,
            catalog,
        } => cmd_identity(
            cli,
            label.as_deref(),
            parse.as_deref(),
            *type_,
            *parastrophe,
            *catalog,
        ),
    }
}

/// Reads and validates a Cayley table file.
fn load_table(path: &Path) -> Result<CayleyTable> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read table file {}", path.display()))?;
    CayleyTable::from_text(&text).map_err(|e| anyhow!("{}: {e}", path.display()))
}

/// Accepts a catalog label or an inline identity string.
fn resolve_identity(arg: &str) -> Result<Identity> {
    if let Some(entry) = lookup(arg) {
        return Ok(entry.identity().clone());
    }
    Identity::parse(arg)
        .map_err(|e| anyhow!("`{arg}` is neither a catalog label nor a valid identity: {e}"))
}

/// `F7` for catalog identities, the equation text otherwise.
fn identity_name(identity: &Identity) -> String {
    identity
        .label()
        .map_or_else(|| identity.to_string(), str::to_owned)
}

fn profile_line(profile: &UnitProfile) -> String {
    let unit = |u: Option<usize>| u.map_or_else(|| "none".to_string(), |v| v.to_string());
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    format!(
        "left: {}, right: {}, loop: {}, group: {}",
        unit(profile.left_unit),
        unit(profile.right_unit),
        yes_no(profile.is_loop),
        yes_no(profile.is_group),
    )
}

fn cmd_check(cli: &Cli, table: &Path, identity_arg: &str) -> Result<(String, u8)> {
    let table = load_table(table)?;
    let identity = resolve_identity(identity_arg)?;
    let report = satisfies(&table, &identity);
    let output = if cli.json {
        format!(
            "{}\n",
            json!({
                "identity": identity_name(&identity),
                "order": table.order(),
                "holds": report.holds,
                "failing_assignment": report.failing_assignment,
                "assignments_checked": report.assignments_checked,
            })
        )
    } else if report.holds {
        format!(
            "{}: holds ({} assignments checked)\n",
            identity_name(&identity),
            report.assignments_checked
        )
    } else {
        let failing = report
            .failing_assignment
            .expect("a failing report carries the first failing assignment");
        format!("{}: fails at {}\n", identity_name(&identity), failing)
    };
    Ok((output, if report.holds { 0 } else { 1 }))
}

fn cmd_units(cli: &Cli, table: &Path) -> Result<(String, u8)> {
    let table = load_table(table)?;
    let profile = table.units();
    let output = if cli.json {
        format!("{}\n", serde_json::to_value(&profile)?)
    } else {
        format!("{}\n", profile_line(&profile))
    };
    Ok((output, 0))
}

/// Inclusive `a..b` range, or a single order `n`.
fn parse_orders(arg: &str) -> Result<(usize, usize)> {
    let parse_end = |s: &str| -> Result<usize> {
        s.trim()
            .parse()
            .with_context(|| format!("bad order `{}` in range `{arg}`", s.trim()))
    };
    match arg.split_once("..") {
        Some((a, b)) => Ok((parse_end(a)?, parse_end(b)?)),
        None => {
            let n = parse_end(arg)?;
            Ok((n, n))
        }
    }
}

fn cmd_search(
    cli: &Cli,
    identity_arg: &str,
    require: Predicate,
    orders: &str,
    budget: u64,
) -> Result<(String, u8)> {
    let identity = resolve_identity(identity_arg)?;
    let mut query = SearchQuery::new(identity, require, parse_orders(orders)?);
    query.budget = budget;
    let outcome = find_with_threads(&query, cli.threads).map_err(|e| anyhow!("{e}"))?;
    let mut output = String::new();
    if cli.json {
        let _ = writeln!(
            output,
            "{}",
            serde_json::to_string_pretty(&outcome.to_json(&query))?
        );
    } else if let Some(witness) = &outcome.witness {
        let _ = writeln!(
            output,
            "witness of order {} ({} nodes expanded):",
            witness.order, outcome.nodes_expanded
        );
        output.push_str(&witness.table.to_text());
        let _ = writeln!(output, "{}", profile_line(&witness.profile));
    } else if outcome.budget_exhausted {
        output.push_str("none (budget)\n");
    } else {
        output.push_str("none (exhaustive)\n");
    }
    let code = if outcome.witness.is_some() {
        0
    } else if outcome.budget_exhausted {
        3
    } else {
        1
    };
    Ok((output, code))
}

fn cmd_table1(
    cli: &Cli,
    max_order: usize,
    witness_cap: usize,
    out: Option<&Path>,
) -> Result<(String, u8)> {
    let report = reproduce_table1(max_order, witness_cap).map_err(|e| anyhow!("{e}"))?;
    if let Some(path) = out {
        let file = fs::File::create(path)
            .with_context(|| format!("cannot write report to {}", path.display()))?;
        serde_json::to_writer_pretty(file, &report.to_json())?;
    }
    let output = if cli.json {
        format!("{}\n", serde_json::to_string_pretty(&report.to_json())?)
    } else {
        report.render_text()
    };
    Ok((output, if report.is_clean() { 0 } else { 1 }))
}

fn cmd_identity(
    cli: &Cli,
    label: Option<&str>,
    parse: Option<&str>,
    type_: bool,
    parastrophe: bool,
    catalog: bool,
) -> Result<(String, u8)> {
    if catalog {
        let output = if cli.json {
            format!("{}\n", serde_json::to_string_pretty(&catalog_json())?)
        } else {
            let mut out = String::new();
            for entry in bm_lab::catalog() {
                let ty = entry.identity().identity_type();
                let _ = writeln!(
                    out,
                    "{:<4} {:<20} {:<16} {}",
                    entry.label,
                    entry.text,
                    entry.abbrev.unwrap_or(""),
                    ty,
                );
            }
            out
        };
        return Ok((output, 0));
    }

    let identity = match (label, parse) {
        (Some(label), None) => lookup(label)
            .map(|entry| entry.identity().clone())
            .ok_or_else(|| anyhow!("`{label}` is not a catalog label (expected F1..F60)"))?,
        (None, Some(text)) => {
            Identity::parse(text).map_err(|e| anyhow!("cannot parse `{text}`: {e}"))?
        }
        _ => bail!("pass exactly one of --label or --parse (or --catalog)"),
    };

    let image = identity.parastrophe();
    if cli.json {
        let ty = identity.identity_type();
        let output = format!(
            "{}\n",
            serde_json::to_string_pretty(&json!({
                "label": identity.label(),
                "identity": identity.to_string(),
                "type": ty,
                "parastrophe": {
                    "label": image.label(),
                    "identity": image.to_string(),
                },
            }))?
        );
        return Ok((output, 0));
    }

    let mut output = String::new();
    if type_ {
        let _ = writeln!(output, "{}", identity.identity_type());
    }
    if parastrophe {
        match image.label() {
            Some(partner) if Some(partner) == identity.label() => {
                let _ = writeln!(output, "{partner} (self-dual)");
            }
            Some(partner) => {
                let _ = writeln!(output, "{partner}");
            }
            None => {
                let _ = writeln!(output, "(not in catalog)");
            }
        }
        let _ = writeln!(output, "{image}");
    }
    if output.is_empty() {
        match identity.label() {
            Some(label) => {
                let _ = writeln!(output, "{label}: {identity}");
            }
            None => {
                let _ = writeln!(output, "{identity} (not in catalog)");
            }
        }
    }
    Ok((output, 0))
}
