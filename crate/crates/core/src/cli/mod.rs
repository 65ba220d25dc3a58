//! Command-line front end. [`run`] is the whole program minus process exit.

pub mod bfile;

use std::ffi::OsString;
use std::fmt::Display;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use crate::asympt::{
    coeff_asymptotic, conjectured_log_estimate, kotesovec_ratio, log_coeff_asymptotic,
    AsymptoticModel, Capability, Index,
};
use crate::divisors::{AdmissibleTriple, Form};
use crate::error::{Error, Result};
use crate::oracle::cycle_type_sum;
use crate::series::{egf_coeffs, egf_coeffs_weighted, ogf_coeffs_euler, CoeffSequence};

pub use bfile::{compare_sequence, parse_bfile, BFileRecord, ComparisonReport, Mismatch};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "partition-forge",
    version,
    about = "Exact coefficients and asymptotics of divisor-weighted partition products"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the exact coefficient sequence of P or Q.
    Coeffs(CoeffsArgs),
    /// Print rational coefficients of the weighted product P(z, v).
    Weighted(WeightedArgs),
    /// Closed-form estimate of a single coefficient.
    Estimate(IndexArgs),
    /// First-order value of log [z^n] F(z).
    Logasymp(IndexArgs),
    /// Tabulate w_n^2 / ln^2 n with w_n = W(e^gamma n).
    TableW(TableArgs),
    /// TSV of log(p_n/n!) for (0,1,0) against three growth estimates.
    Figure1(Figure1Args),
    /// Compare a computed sequence with an OEIS b-file.
    Compare(CompareArgs),
    /// Brute-force cycle-type sum for a single coefficient.
    #[command(hide = true)]
    Oracle(OracleArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutputFormat {
    Plain,
    Bfile,
    Json,
    Tsv,
}

#[derive(Debug, Args)]
struct CoeffsArgs {
    #[arg(long)]
    triple: AdmissibleTriple,
    #[arg(long)]
    form: Form,
    /// Largest index to compute.
    #[arg(long)]
    n: usize,
    /// Ordinary coefficients instead of EGF numerators (needs j = 0).
    #[arg(long)]
    ogf: bool,
    #[arg(long, value_enum, default_value = "plain")]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct WeightedArgs {
    #[arg(long)]
    triple: AdmissibleTriple,
    /// Weight as NUM/DEN or an integer.
    #[arg(long, allow_hyphen_values = true)]
    v: BigRational,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "plain")]
    format: OutputFormat,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("index").required(true).args(["n", "log10n"])))]
struct IndexArgs {
    #[arg(long)]
    triple: AdmissibleTriple,
    #[arg(long)]
    form: Form,
    #[arg(long)]
    n: Option<f64>,
    /// Give the index through its base-10 logarithm.
    #[arg(long)]
    log10n: Option<f64>,
}

impl IndexArgs {
    fn index(&self) -> Index {
        match (self.n, self.log10n) {
            (_, Some(x)) => Index::from_log10(x),
            (Some(n), None) => Index::Value(n),
            (None, None) => unreachable!("clap enforces the index group"),
        }
    }
}

/// A number that remembers how it was written.
#[derive(Clone, Debug)]
struct Number {
    text: String,
    value: f64,
}

impl FromStr for Number {
    type Err = std::num::ParseFloatError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Ok(Number {
            text: s.trim().to_string(),
            value: s.trim().parse()?,
        })
    }
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("list").required(true).args(["n_list", "log10n_list"])))]
struct TableArgs {
    #[arg(long, value_delimiter = ',')]
    n_list: Vec<Number>,
    #[arg(long, value_delimiter = ',')]
    log10n_list: Vec<Number>,
}

#[derive(Debug, Args)]
struct Figure1Args {
    #[arg(long)]
    nmax: usize,
}

#[derive(Debug, Args)]
struct CompareArgs {
    #[arg(long)]
    triple: AdmissibleTriple,
    #[arg(long)]
    form: Form,
    #[arg(long)]
    bfile: PathBuf,
    /// Reference index matched with computed index 0.
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    offset: i64,
    #[arg(long)]
    ogf: bool,
}

#[derive(Debug, Args)]
struct OracleArgs {
    #[arg(long)]
    triple: AdmissibleTriple,
    #[arg(long, default_value = "P")]
    form: Form,
    #[arg(long)]
    n: usize,
}

/// Parses `args` (including the program name), writes to `out` and `err`,
/// and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_DOMAIN
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Coeffs(a) => {
            let seq = if a.ogf {
                ogf_coeffs_euler(a.triple, a.form, a.n)?
            } else {
                egf_coeffs(a.triple, a.form, a.n)?
            };
            write!(out, "{}", render(&seq, a.format))?;
        }
        Command::Weighted(a) => {
            let seq = egf_coeffs_weighted(a.triple, &a.v, a.n)?;
            write!(out, "{}", render(&seq, a.format))?;
        }
        Command::Estimate(a) => estimate(&a, out)?,
        Command::Logasymp(a) => {
            let v = log_coeff_asymptotic(a.triple, a.form, a.index())?;
            writeln!(out, "{v:.12e}")?;
        }
        Command::TableW(a) => {
            let (list, log10) = if a.log10n_list.is_empty() {
                (&a.n_list, false)
            } else {
                (&a.log10n_list, true)
            };
            for x in list {
                let idx = if log10 {
                    Index::from_log10(x.value)
                } else {
                    Index::Value(x.value)
                };
                writeln!(out, "{} {}", x.text, truncate4(kotesovec_ratio(idx)?))?;
            }
        }
        Command::Figure1(a) => figure1(a.nmax, out)?,
        Command::Compare(a) => return compare(&a, out),
        Command::Oracle(a) => {
            writeln!(out, "{}", cycle_type_sum(a.triple, a.form, a.n)?)?;
        }
    }
    Ok(EXIT_OK)
}

fn render<T: Display>(seq: &CoeffSequence<T>, format: OutputFormat) -> String {
    match format {
        OutputFormat::Plain => seq.to_plain(),
        OutputFormat::Bfile => seq.to_bfile(),
        OutputFormat::Json => seq.to_json() + "\n",
        OutputFormat::Tsv => seq.to_tsv(),
    }
}

/// Four decimals, truncated toward zero as in the published tables.
pub fn truncate4(v: f64) -> String {
    format!("{:.4}", (v * 1e4).trunc() / 1e4)
}

fn estimate(a: &IndexArgs, out: &mut dyn Write) -> Result<()> {
    let model = AsymptoticModel::new(a.triple, a.form);
    let index = a.index();
    writeln!(out, "triple {} {}", a.triple, a.form)?;
    match model.capability {
        Capability::FullCoefficient => {
            let e = coeff_asymptotic(a.triple, a.form, index)?;
            writeln!(out, "ln_estimate {:.12}", e.ln_value)?;
            writeln!(out, "estimate {e}")?;
        }
        Capability::LogOnly(note) => {
            writeln!(out, "log-only: {note}")?;
            let v = log_coeff_asymptotic(a.triple, a.form, index)?;
            writeln!(out, "log_asymptotic {v:.12e}")?;
        }
    }
    Ok(())
}

fn figure1(nmax: usize, out: &mut dyn Write) -> Result<()> {
    let triple = AdmissibleTriple::new(0, 1, 0)?;
    let seq = egf_coeffs(triple, Form::P, nmax)?;
    writeln!(
        out,
        "n\tlog_exact\tconjectured\tkotesovec\thalf_log_squared"
    )?;
    for n in 2..=nmax {
        let exact = seq.ln_coefficient(n).expect("coefficients are positive");
        let l = (n as f64).ln();
        let est = coeff_asymptotic(triple, Form::P, n as f64)?;
        writeln!(
            out,
            "{n}\t{exact:.6}\t{:.6}\t{:.6}\t{:.6}",
            conjectured_log_estimate(n as f64),
            est.ln_value,
            l * l / 2.0
        )?;
    }
    Ok(())
}

fn compare(a: &CompareArgs, out: &mut dyn Write) -> Result<i32> {
    let text = std::fs::read_to_string(&a.bfile)?;
    let records = parse_bfile(&text)?;
    let last = records.last().ok_or(Error::EmptyOverlap)?.index;
    let n = usize::try_from(last - a.offset).map_err(|_| Error::EmptyOverlap)?;
    let seq = if a.ogf {
        ogf_coeffs_euler(a.triple, a.form, n)?
    } else {
        egf_coeffs(a.triple, a.form, n)?
    };
    let report = compare_sequence(&seq, &records, a.offset)?;
    write!(out, "{report}")?;
    Ok(if report.is_full_match() {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    })
}
