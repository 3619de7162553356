//! Command-line front end: a small text format for algebras and a set of
//! commands that each produce one structured report.
//!
//! Algebra arguments are paths to algebra documents, `-` for standard input,
//! or `catalog:ID` for a built-in entry (with `--params` overrides).

pub mod commands;
pub mod dsl;
pub mod report;

use std::collections::BTreeMap;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use homassoc::catalog::{catalog_entry, CatalogEntry, Params};
use homassoc::{AlgebraError, GaussianRational, HomAlgebra};
use homassoc_poly::{PolyError, DEFAULT_BUDGET};
use serde_json::json;
use thiserror::Error;

use dsl::ParseError;
use report::{Report, Status};

#[derive(Debug, Parser)]
#[command(name = "homassoc", version, about = "Exact computations with Hom-associative algebras")]
pub struct Cli {
    /// Omit volatile fields such as the timestamp.
    #[arg(long, global = true)]
    pub deterministic: bool,
    /// Render the report as plain text instead of JSON.
    #[arg(long, global = true)]
    pub human: bool,
    /// Cap on Groebner reduction steps.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// Catalog parameter overrides, `name=value` separated by commas.
    #[arg(long, global = true, value_delimiter = ',')]
    pub params: Vec<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check Hom-associativity, multiplicativity and (if declared) the unit.
    Verify { file: String },
    /// Twist an algebra along an endomorphism given as a map document.
    Twist {
        file: String,
        #[arg(long)]
        morphism: String,
    },
    /// The compatible associative algebra of an algebra with invertible twist.
    Untwist { file: String },
    /// Dimensions of cochains, cocycles, coboundaries and cohomology.
    Cohomology {
        file: String,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        degree: Option<u8>,
    },
    /// The space of α^k-derivations and its inner part.
    Derivations {
        file: String,
        #[arg(long, default_value_t = 0)]
        k: u32,
    },
    /// Simplicity certificate.
    Simple { file: String },
    /// The center.
    Center { file: String },
    /// Whether the product is the twist of an associative product.
    AssocType { file: String },
    /// Built-in classification data.
    Catalog {
        #[command(subcommand)]
        action: CatalogCommand,
    },
    /// Ideals of the variety of structure constants.
    Groebner {
        #[command(subcommand)]
        action: GroebnerCommand,
    },
    /// Try to prove two algebras non-isomorphic.
    Noniso { first: String, second: String },
    /// Check a truncated formal deformation.
    Deform {
        file: String,
        #[arg(long)]
        jet: String,
        #[arg(long)]
        order: Option<usize>,
    },
    /// Isomorphism invariants.
    Fingerprint { file: String },
}

#[derive(Debug, Subcommand)]
pub enum CatalogCommand {
    List {
        #[arg(long)]
        family: Option<String>,
    },
    Show { id: String },
    VerifyAll,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Equations {
    HomAssoc,
    Multiplicativity,
    Unitality,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Order {
    Degrevlex,
    Lex,
}

#[derive(Debug, Subcommand)]
pub enum GroebnerCommand {
    /// Reduced Groebner basis of the ideal for dimension `n`.
    Ideal {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, value_delimiter = ',', default_value = "hom-assoc")]
        equations: Vec<Equations>,
        #[arg(long, value_enum, default_value_t = Order::Degrevlex)]
        order: Order,
    },
    /// Ideal membership; `n` is inferred from the variable names when omitted.
    Member {
        #[arg(short = 'p')]
        poly: String,
        #[arg(short = 'n')]
        n: Option<usize>,
        #[arg(long, value_delimiter = ',', default_value = "hom-assoc")]
        equations: Vec<Equations>,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn status(&self) -> Status {
        match self {
            CliError::Algebra(AlgebraError::BudgetExceeded { .. })
            | CliError::Algebra(AlgebraError::Poly(PolyError::BudgetExceeded { .. }))
            | CliError::Poly(PolyError::BudgetExceeded { .. }) => Status::Budget,
            _ => Status::Error,
        }
    }

    fn into_report(self, command: &str) -> Report {
        let status = self.status();
        let mut r = Report::error(command, self.to_string());
        r.status = status;
        if let CliError::Parse { path, source } = &self {
            r.detail("file", json!(path));
            r.detail("line", json!(source.line));
            r.detail("column", json!(source.column));
            r.detail("expected", json!(source.expected));
        }
        r
    }
}

/// Global options shared by every command.
#[derive(Clone, Debug)]
pub struct Options {
    pub budget: u64,
    pub params: Params,
}

/// An algebra argument after loading, with the names to print it in.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub algebra: HomAlgebra,
    pub basis: Vec<String>,
    pub entry: Option<&'static CatalogEntry>,
    pub params: Params,
}

pub fn parse_params(items: &[String]) -> Result<Params, CliError> {
    let mut out = BTreeMap::new();
    for item in items.iter().filter(|s| !s.trim().is_empty()) {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("parameter `{item}` is not of the form name=value")))?;
        let value = GaussianRational::from_str(v.trim())
            .map_err(|e| CliError::Usage(format!("parameter {}: {e}", k.trim())))?;
        out.insert(k.trim().to_string(), value);
    }
    Ok(out)
}

pub fn read_source(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s)
            .map_err(|source| CliError::Io { path: path.into(), source })?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })
    }
}

pub fn load_algebra(source: &str, opts: &Options) -> Result<Loaded, CliError> {
    if let Some(id) = source.strip_prefix("catalog:") {
        let entry = catalog_entry(id)?;
        let params = entry.resolve_params(&opts.params)?;
        let algebra = entry.instantiate(&params)?;
        return Ok(Loaded { algebra, basis: entry.basis_names(), entry: Some(entry), params });
    }
    let text = read_source(source)?;
    let doc = dsl::parse(&text).map_err(|e| CliError::Parse { path: source.into(), source: e })?;
    let algebra = doc.to_algebra();
    let entry = catalog_entry(&algebra.label).ok();
    Ok(Loaded { algebra, basis: doc.basis, entry, params: Params::new() })
}

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> Report {
    let name = commands::command_name(&cli.command);
    let opts = match parse_params(&cli.params) {
        Ok(params) => Options { budget: cli.budget, params },
        Err(e) => return e.into_report(&name),
    };
    commands::dispatch(&cli.command, &opts).unwrap_or_else(|e| e.into_report(&name))
}

/// Result of a full invocation: exit code and the text to print.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub text: String,
}

/// Parses arguments (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => Status::Error.exit_code(),
            };
            return Output { code, text: e.render().to_string() };
        }
    };
    let report = run(&cli);
    let text = if cli.human { report.render_human() } else { report.render_json(cli.deterministic) + "\n" };
    Output { code: report.status.exit_code(), text }
}
