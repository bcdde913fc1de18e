//! `loopgrass`: batch front end for cells, series, motives and loop-group
//! matrices.
//!
//! Exit status: 0 on success, 1 on a domain error (bad matrix, failed
//! check), 2 on a usage error.

use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use loopgrass::algebra::{Field, LaurentMatrix};
use loopgrass::cells::{
    cell_dim, cell_series, cell_series_per_component, enumerate_cells_in_components,
    product_formula_series,
};
use loopgrass::lattice_model::{
    birkhoff_factorize, cartan_coweight, find_chart_translate, lattice_of, BirkhoffOutcome,
};
use loopgrass::matrix_file::{lattice_to_json, read_matrix_file};
use loopgrass::motive::{motive_of_gr_in_components, motive_of_stage, TateSum};
use loopgrass::rootdata::{RootSystem, RootType};
use loopgrass::selftest::run_suites;

#[derive(Parser)]
#[command(
    name = "loopgrass",
    version,
    about = "Affine Grassmannians of split classical groups, computed exactly"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// List the Bruhat cells of dimension at most --max-dim.
    Cells {
        #[arg(long = "type")]
        system: RootSystem,
        #[arg(long)]
        max_dim: u64,
        /// Components to enumerate for A<r>gl, e.g. -2..2 (default 0..0).
        #[arg(long, allow_hyphen_values = true, value_parser = parse_range)]
        components: Option<RangeInclusive<i64>>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Cell-count series, compared with the product formula when it applies.
    Series {
        #[arg(long = "type")]
        system: RootSystem,
        #[arg(long)]
        max_dim: u64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_range)]
        components: Option<RangeInclusive<i64>>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Tate decomposition of the motive, truncated or of one closed stage.
    Motive {
        #[arg(long = "type")]
        system: RootSystem,
        #[arg(long, required_unless_present = "stage", conflicts_with = "stage")]
        max_twist: Option<u64>,
        /// Closed stage X_i (cells of dimension at most i); -1 is empty.
        #[arg(long, allow_hyphen_values = true)]
        stage: Option<i64>,
        /// Characteristic of the base field: 0 or a prime.
        #[arg(long = "char", default_value = "0", value_parser = parse_char)]
        field: Field,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_range, conflicts_with = "stage")]
        components: Option<RangeInclusive<i64>>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Cartan coweight, component, cell dimension and canonical lattice.
    Classify {
        #[arg(long)]
        matrix: PathBuf,
        /// Field for files declaring "Fp"; must agree with a concrete field.
        #[arg(long, value_parser = parse_field)]
        field: Option<Field>,
        /// Print only the canonical lattice, as a matrix file.
        #[arg(long)]
        emit_canonical: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Factor M = A·B with A negative based and B positive, if possible.
    Birkhoff {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, value_parser = parse_field)]
        field: Option<Field>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Find t^nu · w with M in the translated big cell.
    Chart {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, value_parser = parse_field)]
        field: Option<Field>,
        /// Largest <nu⁺, 2ρ> to search.
        #[arg(long, default_value_t = 6)]
        bound: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the oracle suites; golden files from $LOOPGRASS_GOLDEN_DIR if set.
    Selftest {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn parse_range(s: &str) -> Result<RangeInclusive<i64>, String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected <lo>..<hi>, got `{s}`"))?;
    let lo: i64 = a
        .trim()
        .parse()
        .map_err(|_| format!("bad lower bound `{a}`"))?;
    let hi: i64 = b
        .trim_start_matches('=')
        .trim()
        .parse()
        .map_err(|_| format!("bad upper bound `{b}`"))?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok(lo..=hi)
}

fn parse_char(s: &str) -> Result<Field, String> {
    match s.parse::<u64>().map_err(|e| e.to_string())? {
        0 => Ok(Field::Rational),
        p => Field::prime(p).map_err(|e| e.to_string()),
    }
}

fn parse_field(s: &str) -> Result<Field, String> {
    Field::parse(s).map_err(|e| e.to_string())
}

/// What a command printed and how it should exit.
struct Output {
    stdout: String,
    code: u8,
}

impl Output {
    fn ok(stdout: String) -> Output {
        Output { stdout, code: 0 }
    }
}

fn to_json(v: &Value) -> String {
    serde_json::to_string(v).expect("json values serialise")
}

fn entries(m: &LaurentMatrix) -> Value {
    m.rows()
        .iter()
        .map(|r| r.iter().map(|p| p.to_string()).collect::<Vec<_>>())
        .collect()
}

fn cells(
    sys: &RootSystem,
    max_dim: u64,
    components: RangeInclusive<i64>,
    format: Format,
) -> Output {
    let cells = enumerate_cells_in_components(sys, max_dim, components);
    let gl = sys.kind() == RootType::AGl;
    match format {
        Format::Json => Output::ok(to_json(&json!({
            "type": sys.label(),
            "maxDim": max_dim,
            "cells": cells,
        }))),
        Format::Text => Output::ok(
            cells
                .iter()
                .map(|c| {
                    if gl {
                        format!("{} dim={} component={}\n", c.mu, c.dim, c.component)
                    } else {
                        format!("{} dim={}\n", c.mu, c.dim)
                    }
                })
                .collect(),
        ),
    }
}

fn series(
    sys: &RootSystem,
    max_dim: u64,
    components: Option<RangeInclusive<i64>>,
    format: Format,
) -> loopgrass::Result<Output> {
    if let Some(range) = components.filter(|_| sys.kind() == RootType::AGl) {
        let per = cell_series_per_component(sys, max_dim, range);
        return Ok(match format {
            Format::Json => Output::ok(to_json(&json!({
                "type": sys.label(),
                "maxDim": max_dim,
                "components": per.iter().map(|(c, s)| json!({"component": c, "series": s.coeffs()})).collect::<Vec<_>>(),
            }))),
            Format::Text => Output::ok(
                per.iter()
                    .map(|(c, s)| format!("component {c}: {}\n", s.coefficient_list()))
                    .collect(),
            ),
        });
    }
    let s = cell_series(sys, max_dim);
    let product = if sys.is_simply_connected() {
        Some(product_formula_series(sys, max_dim)?)
    } else {
        None
    };
    let matches = product.as_ref().map(|p| *p == s);
    let code = if matches == Some(false) { 1 } else { 0 };
    let stdout = match format {
        Format::Json => to_json(&json!({
            "type": sys.label(),
            "maxDim": max_dim,
            "series": s.coeffs(),
            "productFormula": product.as_ref().map(|p| p.coeffs()),
            "matches": matches,
        })),
        Format::Text => {
            let mut out = format!("{}\n", s.coefficient_list());
            match (&product, matches) {
                (_, Some(true)) => out.push_str("MATCHES product formula\n"),
                (Some(p), Some(false)) => out.push_str(&format!(
                    "DIFFERS from product formula {}\n",
                    p.coefficient_list()
                )),
                _ => {}
            }
            out
        }
    };
    Ok(Output { stdout, code })
}

fn motive_output(m: &TateSum, format: Format) -> Output {
    Output::ok(match format {
        Format::Json => m.to_json(),
        Format::Text => m.to_text(),
    })
}

fn classify(
    path: &Path,
    field: Option<Field>,
    emit_canonical: bool,
    format: Format,
) -> loopgrass::Result<Output> {
    let m = read_matrix_file(path, field)?;
    let lattice = lattice_of(&m)?;
    if emit_canonical {
        return Ok(Output::ok(lattice_to_json(&lattice)));
    }
    let mu = cartan_coweight(&m)?;
    let n = m.size();
    // the dominant representative of a GL_n coweight is mu sorted decreasingly
    let dim = if n < 2 {
        0
    } else {
        cell_dim(&RootSystem::new(RootType::AGl, n - 1)?, &mu)
    };
    Ok(Output::ok(match format {
        Format::Json => to_json(&json!({
            "field": m.field().to_string(),
            "coweight": mu.coords(),
            "component": lattice.component(),
            "cellDim": dim,
            "canonical": {"window": lattice.window(), "entries": entries(&lattice.generator())},
        })),
        Format::Text => format!(
            "coweight: {mu}\ncomponent: {}\ncell_dim: {dim}\nwindow: {}\ncanonical:\n{}",
            lattice.component(),
            lattice.window(),
            lattice.generator()
        ),
    }))
}

fn birkhoff(path: &Path, field: Option<Field>, format: Format) -> loopgrass::Result<Output> {
    let m = read_matrix_file(path, field)?;
    let outcome = birkhoff_factorize(&m)?;
    Ok(Output::ok(match (format, outcome) {
        (Format::Json, BirkhoffOutcome::Factored(w)) => to_json(&json!({
            "inBigCell": true,
            "negative": entries(&w.negative),
            "positive": entries(&w.positive),
        })),
        (Format::Json, BirkhoffOutcome::NotInBigCell) => to_json(&json!({"inBigCell": false})),
        (Format::Text, BirkhoffOutcome::Factored(w)) => {
            format!("A:\n{}B:\n{}", w.negative, w.positive)
        }
        (Format::Text, BirkhoffOutcome::NotInBigCell) => "NOT_IN_BIG_CELL\n".to_string(),
    }))
}

fn chart(
    path: &Path,
    field: Option<Field>,
    bound: i64,
    format: Format,
) -> loopgrass::Result<Output> {
    let m = read_matrix_file(path, field)?;
    let c = find_chart_translate(&m, bound)?;
    Ok(Output::ok(match format {
        Format::Json => to_json(&json!({
            "nu": c.nu.coords(),
            "w": {"source": c.w.source(), "signs": c.w.signs()},
            "negative": entries(&c.witness.negative),
            "positive": entries(&c.witness.positive),
        })),
        Format::Text => c.to_string(),
    }))
}

fn selftest(format: Format) -> Output {
    let dir = std::env::var_os("LOOPGRASS_GOLDEN_DIR").map(PathBuf::from);
    let results = run_suites(dir.as_deref());
    let passed = results.iter().all(|r| r.passed);
    let stdout = match format {
        Format::Json => to_json(&json!({
            "passed": passed,
            "suites": results
                .iter()
                .map(|r| json!({"name": r.name, "passed": r.passed, "detail": r.detail}))
                .collect::<Vec<_>>(),
        })),
        Format::Text => results
            .iter()
            .map(|r| {
                format!(
                    "{} {}: {}\n",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.name,
                    r.detail
                )
            })
            .collect(),
    };
    Output {
        stdout,
        code: u8::from(!passed),
    }
}

fn run(command: Command) -> (Format, loopgrass::Result<Output>) {
    match command {
        Command::Cells {
            system,
            max_dim,
            components,
            format,
        } => (
            format,
            Ok(cells(&system, max_dim, components.unwrap_or(0..=0), format)),
        ),
        Command::Series {
            system,
            max_dim,
            components,
            format,
        } => (format, series(&system, max_dim, components, format)),
        Command::Motive {
            system,
            max_twist,
            stage,
            field,
            components,
            format,
        } => {
            let m = match (stage, max_twist) {
                (Some(i), _) => motive_of_stage(&system, i, field),
                (None, Some(t)) => Ok(motive_of_gr_in_components(
                    &system,
                    t,
                    field,
                    components.unwrap_or(0..=0),
                )),
                (None, None) => unreachable!("clap requires one of --stage, --max-twist"),
            };
            (format, m.map(|m| motive_output(&m, format)))
        }
        Command::Classify {
            matrix,
            field,
            emit_canonical,
            format,
        } => (format, classify(&matrix, field, emit_canonical, format)),
        Command::Birkhoff {
            matrix,
            field,
            format,
        } => (format, birkhoff(&matrix, field, format)),
        Command::Chart {
            matrix,
            field,
            bound,
            format,
        } => (format, chart(&matrix, field, bound, format)),
        Command::Selftest { format } => (format, Ok(selftest(format))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (format, result) = run(cli.command);
    match result {
        Ok(out) => {
            print!("{}", out.stdout);
            if !out.stdout.is_empty() && !out.stdout.ends_with('\n') {
                println!();
            }
            ExitCode::from(out.code)
        }
        Err(loopgrass::Error::InvalidArgument(msg)) if msg.starts_with("stage") => Cli::command()
            .error(clap::error::ErrorKind::ValueValidation, msg)
            .exit(),
        Err(e) => {
            match format {
                Format::Json => eprintln!("{}", to_json(&json!({"error": e.to_string()}))),
                Format::Text => eprintln!("error: {e}"),
            }
            ExitCode::from(1)
        }
    }
}
