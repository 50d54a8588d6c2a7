//! The `barbell-w3` command line.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::barbell::{hexagon, psi, span_generators, t_poly, w3_target, Disk, TKind};
use crate::error::{Error, Result};
use crate::ring::RingElement;
use crate::solver::{regenerate_table, table_markdown};
use crate::verify::{self, emit, Format, MainInputs, Params, Report};
use crate::word::{Alphabet, Word};

#[derive(Debug, Parser)]
#[command(name = "barbell-w3", version, about = "Free-group words, group-ring elements and the W3 non-membership certificate")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OutFormat {
    Md,
    Json,
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Format {
        match f {
            OutFormat::Md => Format::Markdown,
            OutFormat::Json => Format::Json,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DiskArg {
    D1,
    D2,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Suite {
    All,
    Psi,
    Hexagon,
    Span,
    Main,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Reduce a word or a ring expression and print it.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Print the hexagon relation H(NU, MU).
    Hexagon {
        #[arg(allow_hyphen_values = true)]
        nu: String,
        #[arg(allow_hyphen_values = true)]
        mu: String,
    },
    /// Print T_i at the unbarred pair (A, C).
    Tpoly {
        #[arg(value_parser = ["1", "3", "4", "6"])]
        kind: String,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// Print the W3 target on disk d1 or d2.
    Target {
        disk: DiskArg,
        #[arg(long)]
        k: u64,
    },
    /// Evaluate Psi_k on a ring element.
    Psi {
        #[arg(long)]
        k: u64,
        /// Read the element as ring-element JSON from this file.
        #[arg(long = "in", conflicts_with = "expr")]
        input: Option<PathBuf>,
        #[arg(allow_hyphen_values = true, required_unless_present = "input")]
        expr: Option<String>,
    },
    /// Regenerate the solution table for m_1(k), m_2(k).
    Table {
        #[arg(long)]
        k: u64,
        #[arg(long, value_enum, default_value = "md")]
        format: OutFormat,
    },
    /// Run verification suites.
    Verify {
        suite: Suite,
        #[arg(long, default_value_t = 10)]
        kmax: u64,
        #[arg(long, default_value_t = 3)]
        max_syllables: usize,
        #[arg(long, default_value_t = 3)]
        max_exponent: u32,
        #[arg(long, default_value_t = 10_000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads (default: number of processors).
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: OutFormat,
    },
    /// Dump the span generators as a JSON array.
    SpanDump {
        #[arg(long)]
        max_syllables: usize,
        #[arg(long)]
        max_exponent: u32,
        #[arg(long, value_delimiter = ',', default_value = "1,3,4,6")]
        kinds: Vec<u8>,
    },
}

fn base(text: &str) -> Result<Word> {
    Word::parse(text, Alphabet::Base)
}

fn disk(d: DiskArg) -> Disk {
    match d {
        DiskArg::D1 => Disk::Delta1,
        DiskArg::D2 => Disk::Delta2,
    }
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn io<T>(r: std::io::Result<T>) -> std::result::Result<T, Failure> {
    r.map_err(|e| Failure::Usage(format!("i/o error: {e}")))
}

/// Runs the command line and returns the exit status: 0 on success,
/// 1 when a verification suite fails, 2 on usage or input errors.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(()) => 0,
        Err(Failure::Verification) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> std::result::Result<(), Failure> {
    match command {
        Command::Eval { expr } => {
            let text = match Word::parse_any(&expr) {
                Ok(w) => w.to_string(),
                Err(word_err) => match RingElement::parse(&expr, None) {
                    Ok(x) => x.to_string(),
                    Err(_) => return Err(word_err.into()),
                },
            };
            io(writeln!(out, "{text}"))
        }
        Command::Hexagon { nu, mu } => {
            let h = hexagon(&base(&nu)?, &base(&mu)?)?;
            io(writeln!(out, "{h}"))
        }
        Command::Tpoly { kind, a, c } => {
            let kind = TKind::from_number(kind.parse().expect("validated by clap")).expect("validated by clap");
            let x = t_poly(kind, &base(&a)?, &base(&c)?)?;
            io(writeln!(out, "{x}"))
        }
        Command::Target { disk: d, k } => {
            let t = w3_target(disk(d), k)?;
            io(writeln!(out, "{}", t.value))
        }
        Command::Psi { k, input, expr } => {
            let x = match (input, expr) {
                (Some(path), _) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
                    RingElement::from_json(&text)?
                }
                (None, Some(e)) => RingElement::parse(&e, Some(Alphabet::Quad))?,
                (None, None) => return Err(Failure::Usage("missing EXPR or --in FILE".into())),
            };
            let v = psi(k)?.evaluate(&x);
            io(writeln!(out, "{v}"))
        }
        Command::Table { k, format } => {
            let rows = regenerate_table(k)?;
            let text = match format {
                OutFormat::Md => table_markdown(&rows, k),
                OutFormat::Json => {
                    serde_json::to_string_pretty(&rows).expect("rows serialize") + "\n"
                }
            };
            io(write!(out, "{text}"))
        }
        Command::Verify {
            suite,
            kmax,
            max_syllables,
            max_exponent,
            trials,
            seed,
            workers,
            format,
        } => {
            let params = Params {
                kmax,
                max_syllables,
                max_exponent,
                trials,
                seed,
                ..Params::default()
            };
            params.validate()?;
            let mut pool = rayon::ThreadPoolBuilder::new();
            if let Some(n) = workers {
                if n == 0 {
                    return Err(Failure::Usage("--workers must be at least 1".into()));
                }
                pool = pool.num_threads(n);
            }
            let pool = pool
                .build()
                .map_err(|e| Failure::Usage(format!("cannot start worker pool: {e}")))?;
            let reports: Vec<Report> = pool.install(|| -> Result<Vec<Report>> {
                Ok(match suite {
                    Suite::All => verify::verify_all(&params)?,
                    Suite::Psi => vec![verify::verify_psi_targets(&params)?],
                    Suite::Hexagon => vec![verify::verify_hexagon_vanishing(&params)?],
                    Suite::Span => vec![verify::verify_span_vanishing(&params)?],
                    Suite::Main => vec![verify::verify_main_theorem(&params, &MainInputs::default())?],
                })
            })?;
            for r in &reports {
                let ms: u64 = r.checks.iter().filter_map(|c| c.elapsed_ms).sum();
                let _ = writeln!(err, "{}: {} ({} checks, {ms} ms)", r.suite, r.overall, r.checks.len());
            }
            let stripped: Vec<Report> = reports.iter().map(Report::without_timings).collect();
            io(writeln!(out, "{}", emit(&stripped, format.into())))?;
            if reports.iter().all(Report::passed) {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
        Command::SpanDump {
            max_syllables,
            max_exponent,
            kinds,
        } => {
            if max_syllables == 0 || max_exponent == 0 {
                return Err(Failure::Usage("bounds must be at least 1".into()));
            }
            let kinds: Vec<TKind> = kinds
                .iter()
                .map(|&n| {
                    TKind::from_number(n)
                        .ok_or_else(|| Failure::Usage(format!("unknown kind {n}; expected 1, 3, 4 or 6")))
                })
                .collect::<std::result::Result<_, _>>()?;
            io(write!(out, "["))?;
            for (i, g) in span_generators(max_syllables, max_exponent, &kinds).enumerate() {
                let sep = if i == 0 { "\n" } else { ",\n" };
                io(write!(out, "{sep}{}", serde_json::to_string(&g).expect("generators serialize")))?;
            }
            io(writeln!(out, "\n]"))
        }
    }
}
