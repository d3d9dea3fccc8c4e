//! The `grainy` command-line front end.
//!
//! Exit status: `0` on success, `1` when a law, a supplement check or a
//! domain comparison fails, `2` on usage, parse and I/O errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::expr;
use crate::fuzzy::{FuzzyError, GrainyFuzzySet};
use crate::hasse;
use crate::lawcheck::{self, enumerate};
use crate::notation;
use crate::number::GrainyNumber;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable overriding every `max_len` safety cap.
pub const CAP_ENV: &str = "GRAINY_MAXLEN_CAP";

const TABLE_CAP: usize = 10;
const LAWS_CAP: usize = 6;
const HASSE_CAP: usize = 5;

const AFTER_HELP: &str = "\
Grainy literals:
  0           the empty tuple
  1°3°(5)     ones at positions 1 and 3, total length 5 (degree sign may be typed ')
  (3)         flat number of length 3
  1-1--       bitstring
  [1,[-,0]]   nested tuple

Expressions (eval):
  x + y   addition (also ⊕)        x * y   multiplication (also ⊗)
  supp(x, k)   supplement of x along k
  x >= y  order test, top level only (also ≥)
  '*' binds tighter than '+'; inside expressions write 1'3' rather than 1*3*.

Exit status: 0 success, 1 law/verification/domain failure, 2 usage or parse error.";

#[derive(Debug, Parser)]
#[command(name = "grainy", version, about = "Grainy numbers and grainy fuzzy sets", after_help = AFTER_HELP)]
struct Cli {
    /// Output style for tables and reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the result to this file instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Debug, Args)]
struct MaxLen {
    /// Maximum tuple length of the enumerated universe.
    #[arg(value_name = "MAX_LEN", conflicts_with = "max_len_flag")]
    max_len: Option<usize>,

    #[arg(long = "max-len", value_name = "N")]
    max_len_flag: Option<usize>,
}

impl MaxLen {
    fn resolve(&self, command: &str, default_cap: usize, force: bool) -> Result<usize, CliError> {
        let n = self
            .max_len
            .or(self.max_len_flag)
            .ok_or_else(|| CliError::Usage(format!("{command}: a maximum length is required")))?;
        let cap = match std::env::var(CAP_ENV) {
            Ok(v) => v.trim().parse::<usize>().map_err(|_| {
                CliError::Usage(format!(
                    "{CAP_ENV} must be a non-negative integer, got '{v}'"
                ))
            })?,
            Err(_) => default_cap,
        };
        if n > cap && !force {
            return Err(CliError::Usage(format!(
                "{command}: max length {n} exceeds the cap of {cap} (set {CAP_ENV} to raise it)"
            )));
        }
        Ok(n)
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate an expression over grainy literals.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// List every grainy number up to a length in tuple, bitstring and compact form.
    Table {
        #[command(flatten)]
        max_len: MaxLen,
    },
    /// Check the lattice laws exhaustively up to a length.
    Laws {
        #[command(flatten)]
        max_len: MaxLen,
        /// Run even when the length exceeds the safety cap.
        #[arg(long)]
        force: bool,
    },
    /// Emit the Hasse diagram of the order as a Graphviz digraph.
    Hasse {
        #[command(flatten)]
        max_len: MaxLen,
    },
    /// Operations on grainy fuzzy set files.
    Fuzzy {
        #[command(subcommand)]
        command: FuzzyCommand,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SetOp {
    Add,
    Mul,
}

#[derive(Debug, Subcommand)]
enum FuzzyCommand {
    /// Print label and membership of every element.
    Show { file: PathBuf },
    /// Combine two sets pointwise.
    Op {
        #[arg(value_enum)]
        op: SetOp,
        a: PathBuf,
        b: PathBuf,
        /// Name of the resulting set.
        #[arg(long)]
        name: Option<String>,
    },
    /// Supplement of a set along a grainy number.
    Supp {
        file: PathBuf,
        #[arg(allow_hyphen_values = true)]
        k: String,
        /// Name of the resulting set.
        #[arg(long)]
        name: Option<String>,
    },
    /// Verify that B is the supplement of A along k.
    CheckSupp {
        a: PathBuf,
        b: PathBuf,
        #[arg(allow_hyphen_values = true)]
        k: String,
    },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    /// A parse error with the offending text and a 0-based column.
    Parse {
        text: String,
        position: usize,
        message: String,
    },
    Failure(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse { .. } => EXIT_USAGE,
            CliError::Failure(_) => EXIT_FAILURE,
        }
    }

    fn render(&self) -> String {
        match self {
            CliError::Usage(m) | CliError::Failure(m) => format!("error: {m}\n"),
            CliError::Parse {
                text,
                position,
                message,
            } => format!("error: {message}\n  {text}\n  {}^\n", " ".repeat(*position)),
        }
    }
}

impl From<FuzzyError> for CliError {
    fn from(e: FuzzyError) -> Self {
        match e {
            FuzzyError::DomainMismatch { .. } => CliError::Failure(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

/// What a successful command produced.
struct Outcome {
    text: String,
    code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome {
            text,
            code: EXIT_OK,
        }
    }
}

/// Run the CLI with `args` (including the program name) and return the
/// process exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            let code = e.exit_code();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };

    match execute(&cli) {
        Ok(outcome) => match deliver(cli.output.as_deref(), &outcome.text, stdout) {
            Ok(()) => outcome.code,
            Err(e) => {
                let _ = stderr.write_all(e.render().as_bytes());
                e.exit_code()
            }
        },
        Err(e) => {
            let _ = stderr.write_all(e.render().as_bytes());
            e.exit_code()
        }
    }
}

fn deliver(output: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    match output {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Usage(format!("cannot write output: {e}"))),
    }
}

fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Eval { expr } => cmd_eval(expr),
        Command::Table { max_len } => {
            cmd_table(max_len.resolve("table", TABLE_CAP, false)?, cli.format)
        }
        Command::Laws { max_len, force } => {
            cmd_laws(max_len.resolve("laws", LAWS_CAP, *force)?, cli.format)
        }
        Command::Hasse { max_len } => cmd_hasse(max_len.resolve("hasse", HASSE_CAP, false)?),
        Command::Fuzzy { command } => cmd_fuzzy(command, cli.format),
    }
}

fn cmd_eval(text: &str) -> Result<Outcome, CliError> {
    let value = expr::eval(text).map_err(|e| CliError::Parse {
        text: text.to_string(),
        position: e.position,
        message: e.message,
    })?;
    Ok(Outcome::ok(format!("{value}\n")))
}

fn cmd_table(max_len: usize, format: Format) -> Result<Outcome, CliError> {
    let mut out = String::new();
    if format == Format::Text {
        out.push_str("tuple | bitstring | compact\n");
    }
    let sep = match format {
        Format::Text => " | ",
        Format::Machine => "\t",
    };
    for x in &enumerate(max_len) {
        let _ = writeln!(
            out,
            "{}{sep}{}{sep}{}",
            notation::render_tuple(x),
            notation::render_bitstring(x),
            notation::render(x)
        );
    }
    Ok(Outcome::ok(out))
}

fn cmd_laws(max_len: usize, format: Format) -> Result<Outcome, CliError> {
    let report = lawcheck::check_laws(max_len);
    let text = match format {
        Format::Text => report.render_text(),
        Format::Machine => report.render_machine(),
    };
    Ok(Outcome {
        text,
        code: if report.all_pass() {
            EXIT_OK
        } else {
            EXIT_FAILURE
        },
    })
}

fn cmd_hasse(max_len: usize) -> Result<Outcome, CliError> {
    Ok(Outcome::ok(hasse::render_dot(&enumerate(max_len))))
}

fn load_set(path: &Path) -> Result<GrainyFuzzySet, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    GrainyFuzzySet::load(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn parse_k(text: &str) -> Result<GrainyNumber, CliError> {
    notation::parse(text).map_err(|e| CliError::Parse {
        text: text.to_string(),
        position: e.position,
        message: e.reason,
    })
}

fn cmd_fuzzy(command: &FuzzyCommand, format: Format) -> Result<Outcome, CliError> {
    match command {
        FuzzyCommand::Show { file } => {
            let set = load_set(file)?;
            Ok(Outcome::ok(match format {
                Format::Text => set.render_table(),
                Format::Machine => set.store(),
            }))
        }
        FuzzyCommand::Op { op, a, b, name } => {
            let (a, b) = (load_set(a)?, load_set(b)?);
            let result = match op {
                SetOp::Add => a.pointwise_add(&b)?,
                SetOp::Mul => a.pointwise_mul(&b)?,
            };
            let result = match name {
                Some(n) => result.renamed(n.clone())?,
                None => result,
            };
            Ok(Outcome::ok(result.store()))
        }
        FuzzyCommand::Supp { file, k, name } => {
            let k = parse_k(k)?;
            let result = load_set(file)?.supplement_set(&k);
            let result = match name {
                Some(n) => result.renamed(n.clone())?,
                None => result,
            };
            Ok(Outcome::ok(result.store()))
        }
        FuzzyCommand::CheckSupp { a, b, k } => {
            let k = parse_k(k)?;
            let (a, b) = (load_set(a)?, load_set(b)?);
            a.check_same_domain(&b)?;
            let expected = a.supplement_set(&k);
            match expected.first_difference(&b) {
                None => Ok(Outcome::ok(format!(
                    "ok: {} is the supplement of {} along {k}\n",
                    b.name(),
                    a.name()
                ))),
                Some((label, want, got)) => Err(CliError::Failure(format!(
                    "{} is not the supplement of {} along {k}: at label {label} expected {want}, found {got}",
                    b.name(),
                    a.name()
                ))),
            }
        }
    }
}
