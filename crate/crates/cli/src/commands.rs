use std::ffi::OsString;
use std::io::{self, Write};
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use thiserror::Error;
use vanideal_core::{
    build_basis, count_polynomial_functions, functionally_equal, is_vanishing_with_budget, rec_comp_traced, reduced_nf,
    GroebnerBasis, Modulus, MonomialOrder, DEFAULT_BUDGET,
};

use crate::basisfile::{serialize_basis, serialize_basis_expanded, write_text_atomic, BasisCache, BasisFileError};
use crate::context::{ContextError, RingContext};
use crate::format::{format_entry, format_poly};
use crate::parse::{parse_poly, ParseError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "vanideal",
    version,
    about = "Vanishing ideals and polynomial functions over Z/m"
)]
pub struct Cli {
    /// Coefficient modulus m >= 2 (decimal, any size).
    #[arg(long, global = true, value_name = "M")]
    pub modulus: Option<String>,
    /// Comma-separated variable names.
    #[arg(long, global = true, value_name = "NAMES", default_value = "x")]
    pub vars: String,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the minimal strong Gröbner basis of the vanishing ideal.
    Basis {
        #[arg(long, default_value_t = MonomialOrder::Lex)]
        order: MonomialOrder,
        /// Also print each element as an expanded polynomial.
        #[arg(long)]
        expanded: bool,
        /// Write the JSON basis document to FILE.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        /// Print the JSON basis document instead of the listing.
        #[arg(long)]
        json: bool,
        /// Build by lifting along the prime factorization of m.
        #[arg(long)]
        recursive: bool,
        /// Report cache status and candidates discarded by the recursion.
        #[arg(long)]
        verbose: bool,
        /// Reuse (and re-validate) bases stored in DIR.
        #[arg(long, value_name = "DIR")]
        cache: Option<PathBuf>,
    },
    /// Print the reduced normal form of an expression.
    Nf {
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        #[arg(long, default_value_t = MonomialOrder::Lex)]
        order: MonomialOrder,
    },
    /// Decide whether two expressions define the same function on (Z/m)^n.
    Equiv {
        #[arg(long, allow_hyphen_values = true)]
        lhs: String,
        #[arg(long, allow_hyphen_values = true)]
        rhs: String,
        #[arg(long, default_value_t = MonomialOrder::Lex)]
        order: MonomialOrder,
    },
    /// Print the number of polynomial functions (Z/m)^n -> Z/m.
    Count,
    /// Check by evaluation whether an expression vanishes everywhere.
    Vanish {
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        /// Maximum number of points to evaluate.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Print the least k with m | k!.
    Smarandache,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{error}\n  {input}\n  {caret:>width$}", caret = "^", width = error.offset() + 1)]
    Parse { error: ParseError, input: String },
    #[error(transparent)]
    Context(#[from] ContextError),
    #[error(transparent)]
    Core(#[from] vanideal_core::Error),
    #[error(transparent)]
    BasisFile(#[from] BasisFileError),
    #[error(transparent)]
    Io(#[from] io::Error),
}

fn parse_expr(text: &str, ctx: &RingContext) -> Result<vanideal_core::Polynomial, CliError> {
    parse_poly(text, ctx).map_err(|error| CliError::Parse {
        error,
        input: text.to_string(),
    })
}

fn context(cli: &Cli) -> Result<RingContext, CliError> {
    let m = cli
        .modulus
        .as_deref()
        .ok_or_else(|| CliError::Usage("--modulus is required".into()))?;
    let modulus = Modulus::from_str(m)?;
    Ok(RingContext::from_var_list(modulus, &cli.vars)?)
}

fn basis_listing(g: &GroebnerBasis, ctx: &RingContext, order: MonomialOrder, expanded: bool) -> String {
    let mut text = String::new();
    for e in g.entries() {
        text.push_str(&format_entry(e));
        if expanded {
            text.push_str("  ");
            text.push_str(&format_poly(&e.polynomial(g.modulus()), ctx, order));
        }
        text.push('\n');
    }
    text
}

/// Executes a parsed command, returning the process exit code.
pub fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let ctx = context(cli)?;
    let m = ctx.modulus();
    let n = ctx.nvars();
    match &cli.command {
        Command::Basis {
            order,
            expanded,
            out: file,
            json,
            recursive,
            verbose,
            cache,
        } => {
            let g = match cache {
                Some(dir) => {
                    let (g, status) = BasisCache::new(dir).load_or_build(m, n, *recursive)?;
                    if *verbose {
                        writeln!(err, "cache: {status:?}")?;
                    }
                    g
                }
                None if *recursive => {
                    let trace = rec_comp_traced(m, n)?;
                    if *verbose {
                        for (level, dropped) in &trace.discarded {
                            for e in dropped {
                                writeln!(err, "m={level}: discarded {}", format_entry(e))?;
                            }
                        }
                    }
                    trace.basis
                }
                None => build_basis(m, n)?,
            };
            let document = || {
                if *expanded {
                    serialize_basis_expanded(&g, &ctx, *order)
                } else {
                    serialize_basis(&g)
                }
            };
            if let Some(path) = file {
                write_text_atomic(path, &(document() + "\n"))?;
            }
            if *json {
                writeln!(out, "{}", document())?;
            } else {
                write!(out, "{}", basis_listing(&g, &ctx, *order, *expanded))?;
            }
            if *verbose {
                writeln!(err, "{} entries", g.len())?;
            }
            Ok(EXIT_OK)
        }
        Command::Nf { expr, order } => {
            let f = parse_expr(expr, &ctx)?;
            writeln!(out, "{}", format_poly(&reduced_nf(&f, *order), &ctx, *order))?;
            Ok(EXIT_OK)
        }
        Command::Equiv { lhs, rhs, order } => {
            let f = parse_expr(lhs, &ctx)?;
            let g = parse_expr(rhs, &ctx)?;
            if functionally_equal(&f, &g)? {
                writeln!(out, "equivalent")?;
                Ok(EXIT_OK)
            } else {
                let diff = reduced_nf(&(&f - &g), *order);
                writeln!(out, "not equivalent")?;
                writeln!(out, "difference: {}", format_poly(&diff, &ctx, *order))?;
                Ok(EXIT_FALSE)
            }
        }
        Command::Count => {
            let count = count_polynomial_functions(m, n)?;
            let digits = count.to_string();
            writeln!(out, "{digits}")?;
            writeln!(out, "digits: {}", digits.len())?;
            Ok(EXIT_OK)
        }
        Command::Vanish { expr, budget } => {
            let f = parse_expr(expr, &ctx)?;
            if is_vanishing_with_budget(&f, *budget)? {
                writeln!(out, "vanishing")?;
                Ok(EXIT_OK)
            } else {
                writeln!(out, "not vanishing")?;
                Ok(EXIT_FALSE)
            }
        }
        Command::Smarandache => {
            writeln!(out, "{}", m.smarandache())?;
            Ok(EXIT_OK)
        }
    }
}

/// Parses `args` (including the program name) and runs the command. Help and
/// version requests exit 0, every error exits 2.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return if code == 0 { EXIT_OK } else { EXIT_ERROR };
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}
