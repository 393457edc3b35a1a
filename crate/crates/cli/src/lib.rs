//! Command implementations behind the `sesx` binary.
//!
//! Every command is a pure function over byte buffers; [`run`] wires them to
//! files, standard streams and exit codes.

pub mod format;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use sesx_core::suffix::{bwt_run_count, greedy_lz_count};
use sesx_core::text::{fibonacci_word, random_text, thue_morse};
use sesx_core::{compress, decompress, solve, suffix, Error as CoreError, Text, Verdict};
use thiserror::Error;

pub use format::{parse, render, FormatError, SesFile};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{0}")]
    Input(CoreError),
    #[error("{0}")]
    Format(#[from] FormatError),
    #[error("{0}")]
    BadParams(String),
    #[error("corrupted: {0}")]
    Corrupted(String),
    #[error("mismatch: {0}")]
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } => 1,
            CliError::Input(_) | CliError::Format(_) | CliError::BadParams(_) => 2,
            CliError::Corrupted(_) => 3,
            CliError::Mismatch(_) => 4,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Counters printed by `compress`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompressReport {
    pub n: usize,
    pub chi: usize,
    pub sigma: usize,
    pub eq: usize,
    pub ch: usize,
    pub size: usize,
    pub file_bytes: usize,
}

impl CompressReport {
    pub fn summary(&self) -> String {
        format!(
            "n={} chi={} sigma={} eq={} ch={} size={}",
            self.n, self.chi, self.sigma, self.eq, self.ch, self.size
        )
    }

    pub fn sizes(&self) -> String {
        format!("words={} bytes={}", self.size, self.file_bytes)
    }
}

pub fn compress_bytes(raw: &[u8]) -> CliResult<(String, CompressReport)> {
    let c = compress(raw).map_err(CliError::Input)?;
    let file = SesFile {
        raw_len: c.raw_len,
        ses: c.ses,
    };
    let rendered = render(&file);
    let report = CompressReport {
        n: file.ses.n,
        chi: c.chi,
        sigma: c.sigma,
        eq: file.ses.eq.len(),
        ch: file.ses.ch.len(),
        size: file.ses.size(),
        file_bytes: rendered.len(),
    };
    Ok((rendered, report))
}

/// Decodes a container, accepting only the exact bytes `compress` would
/// write for the decoded text.
///
/// Equation systems are redundant: many single-field edits still solve to
/// the original. Re-encoding turns every such edit into a `Corrupted` error
/// instead of a silent success.
pub fn decompress_bytes(container: &[u8]) -> CliResult<Vec<u8>> {
    let file = parse(container)?;
    let raw = decompress(&file.ses, file.raw_len).map_err(|e| match e {
        CoreError::Corrupted(msg) => CliError::Corrupted(msg),
        other => CliError::Format(FormatError::Invalid(other)),
    })?;
    let (canonical, _) = compress_bytes(&raw)?;
    if canonical.as_bytes() != container {
        return Err(CliError::Corrupted(
            "container is not the canonical encoding of its solution".into(),
        ));
    }
    Ok(raw)
}

pub const STATS_HEADER: &str = "n\tsigma\tchi\tr\tz_greedy\teq\tch\tsize\tchi_le_2r";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatsRow {
    pub n: usize,
    pub sigma: usize,
    pub chi: usize,
    pub r: usize,
    pub z_greedy: usize,
    pub eq: usize,
    pub ch: usize,
    pub size: usize,
}

impl StatsRow {
    pub fn chi_le_2r(&self) -> bool {
        self.chi <= 2 * self.r
    }

    pub fn to_tsv(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.n,
            self.sigma,
            self.chi,
            self.r,
            self.z_greedy,
            self.eq,
            self.ch,
            self.size,
            self.chi_le_2r()
        )
    }
}

pub fn stats_bytes(raw: &[u8]) -> CliResult<StatsRow> {
    let w = Text::attach_sentinel(raw).map_err(CliError::Input)?;
    let r = bwt_run_count(&suffix::SuffixIndex::build(&w), &w);
    let z_greedy = greedy_lz_count(&w);
    let c = compress(raw).map_err(CliError::Input)?;
    Ok(StatsRow {
        n: w.len(),
        sigma: c.sigma,
        chi: c.chi,
        r,
        z_greedy,
        eq: c.ses.eq.len(),
        ch: c.ses.ch.len(),
        size: c.ses.size(),
    })
}

/// Independent re-check of a container against the text it claims to hold.
pub fn verify_bytes(original: &[u8], container: &[u8]) -> CliResult<()> {
    let file = parse(container)?;
    let sys = &file.ses;
    if file.raw_len != original.len() {
        return Err(CliError::Mismatch(format!(
            "container holds {} bytes, original has {}",
            file.raw_len,
            original.len()
        )));
    }
    let solution = solve(sys, sesx_core::ses::DEFAULT_ALPHABET_SIZE)
        .map_err(|e| CliError::Format(FormatError::Invalid(e)))?;
    let solved = match solution.verdict {
        Verdict::Unique(t) => t,
        Verdict::Unsat { first, second } => {
            return Err(CliError::Mismatch(format!(
                "system is unsatisfiable (pins at {first} and {second})"
            )))
        }
        Verdict::Ambiguous { free_pos } => {
            return Err(CliError::Mismatch(format!(
                "system is ambiguous at position {free_pos}"
            )))
        }
    };
    let mut w = original.to_vec();
    w.push(sesx_core::SENTINEL);
    if let Some(k) = solved.iter().zip(&w).position(|(a, b)| a != b) {
        return Err(CliError::Mismatch(format!(
            "decoded byte at position {} is {}, original has {}",
            k + 1,
            solved[k],
            w[k]
        )));
    }
    for (k, e) in sys.eq.iter().enumerate() {
        if w[e.i - 1..e.i - 1 + e.len] != w[e.j - 1..e.j - 1 + e.len] {
            return Err(CliError::Mismatch(format!(
                "equation {} (E {} {} {}) does not hold in the original",
                k + 1,
                e.i,
                e.j,
                e.len
            )));
        }
    }
    for p in &sys.ch {
        if w[p.pos - 1] != p.byte {
            return Err(CliError::Mismatch(format!(
                "pin C {} {} does not hold in the original",
                p.pos, p.byte
            )));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    ThueMorse,
    Fibonacci,
    Random,
}

pub fn generate(
    kind: GenKind,
    order: Option<usize>,
    seed: u64,
    len: Option<usize>,
    sigma: usize,
) -> CliResult<Vec<u8>> {
    let bad = |e: CoreError| CliError::BadParams(e.to_string());
    match kind {
        GenKind::ThueMorse | GenKind::Fibonacci => {
            let k = order.ok_or_else(|| CliError::BadParams("missing order k".into()))?;
            if kind == GenKind::ThueMorse {
                thue_morse(k).map_err(bad)
            } else {
                fibonacci_word(k).map_err(bad)
            }
        }
        GenKind::Random => {
            if order.is_some() {
                return Err(CliError::BadParams(
                    "random takes --seed, --len and --sigma, not an order".into(),
                ));
            }
            let len = len.ok_or_else(|| CliError::BadParams("missing --len".into()))?;
            random_text(seed, len, sigma).map_err(bad)
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "sesx",
    version,
    about = "Compress texts into substring equation systems"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compress a sentinel-free file into an SESX1 container.
    Compress {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Also report the word count against the container size in bytes.
        #[arg(long)]
        sizes: bool,
    },
    /// Recover the original bytes from a container.
    Decompress {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print repetitiveness measures as one TSV row.
    Stats {
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Check a container against the original file.
    Verify { original: PathBuf, ses: PathBuf },
    /// Write a generated test text.
    Gen {
        kind: GenKind,
        /// Morphism or recurrence order for thue-morse and fibonacci.
        order: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        len: Option<usize>,
        #[arg(long, default_value_t = 2)]
        sigma: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn read_input(path: Option<&Path>) -> CliResult<Vec<u8>> {
    match path {
        Some(p) => fs::read(p).map_err(|source| CliError::Io {
            path: p.display().to_string(),
            source,
        }),
        None => {
            let mut buf = Vec::new();
            io::stdin()
                .lock()
                .read_to_end(&mut buf)
                .map_err(|source| CliError::Io {
                    path: "<stdin>".into(),
                    source,
                })?;
            Ok(buf)
        }
    }
}

fn write_output(path: Option<&Path>, data: &[u8]) -> CliResult<()> {
    match path {
        Some(p) => fs::write(p, data).map_err(|source| CliError::Io {
            path: p.display().to_string(),
            source,
        }),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(data)
                .and_then(|_| out.flush())
                .map_err(|source| CliError::Io {
                    path: "<stdout>".into(),
                    source,
                })
        }
    }
}

fn execute(cmd: Command, log: &mut dyn Write) -> CliResult<()> {
    match cmd {
        Command::Compress {
            input,
            output,
            sizes,
        } => {
            let raw = read_input(input.as_deref())?;
            let (container, report) = compress_bytes(&raw)?;
            write_output(output.as_deref(), container.as_bytes())?;
            let _ = writeln!(log, "{}", report.summary());
            if sizes {
                let _ = writeln!(log, "{}", report.sizes());
            }
        }
        Command::Decompress { input, output } => {
            let container = read_input(input.as_deref())?;
            let raw = decompress_bytes(&container)?;
            write_output(output.as_deref(), &raw)?;
        }
        Command::Stats { input } => {
            let raw = read_input(input.as_deref())?;
            let row = stats_bytes(&raw)?;
            let table = format!("{STATS_HEADER}\n{}\n", row.to_tsv());
            write_output(None, table.as_bytes())?;
        }
        Command::Verify { original, ses } => {
            let original = read_input(Some(&original))?;
            let container = read_input(Some(&ses))?;
            verify_bytes(&original, &container)?;
            let _ = writeln!(log, "ok");
        }
        Command::Gen {
            kind,
            order,
            seed,
            len,
            sigma,
            output,
        } => {
            let text = generate(kind, order, seed, len, sigma)?;
            write_output(output.as_deref(), &text)?;
        }
    }
    Ok(())
}

/// Runs one command and returns its exit code; diagnostics go to `log`.
pub fn run(cli: Cli, log: &mut dyn Write) -> u8 {
    match execute(cli.command, log) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(log, "sesx: {e}");
            e.exit_code()
        }
    }
}
