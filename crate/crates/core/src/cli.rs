//! Command-line front end.
//!
//! Exit codes: 0 success, 1 negative verdict (invalid attractor, conjecture
//! violation), 2 malformed input or class mismatch, 3 length or record budget
//! exceeded.

use std::fs::{File, OpenOptions};
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::attractor::{
    minimal_attractor, pseudostandard_attractor, theorem_attractor, verify, Attractor, RenderedWord,
};
use crate::directive::{generate, DirectiveBiSequence, Family, GenerateError, DEFAULT_MAX_LEN};
use crate::explorer::{read_checkpoint, run_scan, Restriction, ScanConfig, ScanWriter};
use crate::words::BinaryWord;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "attractors",
    version,
    about = "String attractors of generalized pseudostandard prefixes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct DirectiveArgs {
    /// Δ as `pre` or `pre(period)` over {0,1}, e.g. "0(1)".
    #[arg(long, allow_hyphen_values = true)]
    pub delta: String,
    /// Θ as `pre` or `pre(period)` over {R,E}, e.g. "(RE)".
    #[arg(long)]
    pub theta: String,
    /// Maximum length of any generated word.
    #[arg(long, env = "ATTRACTOR_MAX_LEN", default_value_t = DEFAULT_MAX_LEN)]
    pub max_len: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the prefix chain w_1 … w_steps.
    Generate {
        #[command(flatten)]
        directive: DirectiveArgs,
        #[arg(long)]
        steps: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check whether a position set is an attractor of a word.
    Verify {
        #[arg(long)]
        word: String,
        /// Comma-separated 0-based positions; whitespace is ignored.
        #[arg(long, allow_hyphen_values = true)]
        gamma: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Exact minimum-size attractor (lexicographically smallest).
    Minimal {
        #[arg(long)]
        word: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Closed-form attractor of w_index for a directive family.
    Construct {
        /// sturmian, pseudostandard or rote.
        #[arg(long)]
        family: Family,
        #[command(flatten)]
        directive: DirectiveArgs,
        #[arg(long)]
        index: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Scan all directive prefixes and record minimum attractor sizes.
    Scan {
        #[arg(long)]
        max_steps: usize,
        /// Skip words longer than this.
        #[arg(long, default_value_t = 60)]
        max_len: usize,
        #[arg(long, default_value_t = 4)]
        bound: usize,
        /// JSON-lines output file.
        #[arg(long)]
        out: PathBuf,
        /// Optional CSV output file.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Checkpoint file holding the last completed canonical index.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Continue from the checkpoint, appending to the outputs.
        #[arg(long, requires = "checkpoint")]
        resume: bool,
        /// Restrict to one family.
        #[arg(long)]
        family: Option<Family>,
        /// Stop after this many records (exit 3, output marked truncated).
        #[arg(long)]
        max_records: Option<usize>,
    },
}

#[derive(Debug)]
enum CliError {
    Input(String),
    Budget(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Budget(_) => EXIT_BUDGET,
        }
    }
}

impl From<GenerateError> for CliError {
    fn from(e: GenerateError) -> Self {
        match e {
            GenerateError::LengthBudget { .. } => CliError::Budget(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

fn input<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Input(e.to_string())
}

pub fn parse_gamma(text: &str) -> Result<Vec<usize>, String> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Ok(Vec::new());
    }
    compact
        .split(',')
        .map(|p| {
            p.parse::<usize>()
                .map_err(|e| format!("bad position {p:?}: {e}"))
        })
        .collect()
}

/// Runs a parsed command, writing to `out` and diagnostics to `err`;
/// returns the process exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let (CliError::Input(msg) | CliError::Budget(msg)) = &e;
            let _ = writeln!(err, "error: {msg}");
            e.exit_code()
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Generate {
            directive,
            steps,
            format,
        } => cmd_generate(&directive, steps, format, out),
        Command::Verify {
            word,
            gamma,
            format,
        } => cmd_verify(&word, &gamma, format, out),
        Command::Minimal { word, format } => cmd_minimal(&word, format, out),
        Command::Construct {
            family,
            directive,
            index,
            format,
        } => cmd_construct(family, &directive, index, format, out),
        Command::Scan {
            max_steps,
            max_len,
            bound,
            out: jsonl,
            csv,
            checkpoint,
            resume,
            family,
            max_records,
        } => {
            let config = ScanConfig {
                max_steps,
                max_word_len: max_len,
                bound,
                restriction: family.map_or(Restriction::All, Restriction::Family),
                max_records,
            };
            cmd_scan(&config, jsonl, csv, checkpoint, resume, out)
        }
    }
}

fn parse_directive(args: &DirectiveArgs) -> Result<DirectiveBiSequence, CliError> {
    DirectiveBiSequence::parse(&args.delta, &args.theta).map_err(input)
}

fn cmd_generate(
    args: &DirectiveArgs,
    steps: usize,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let bi = parse_directive(args)?;
    let chain = generate(&bi, steps, args.max_len)?;
    match format {
        Format::Json => writeln!(out, "{}", chain.to_json())?,
        Format::Text => {
            for step in &chain.steps {
                writeln!(out, "w_{} {}", step.n, step.word)?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn parse_word(text: &str) -> Result<BinaryWord, CliError> {
    let word: BinaryWord = text.parse().map_err(input)?;
    if word.is_empty() {
        return Err(CliError::Input("the empty word has no attractor".into()));
    }
    Ok(word)
}

fn cmd_verify(
    word: &str,
    gamma: &str,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let word = parse_word(word)?;
    let positions = parse_gamma(gamma).map_err(CliError::Input)?;
    let gamma = Attractor::new(positions, word.len()).map_err(input)?;
    let report = verify(&word, &gamma).map_err(input)?;
    let rendered = RenderedWord::new(&word, &gamma);
    match format {
        Format::Json => writeln!(
            out,
            "{}",
            json!({ "valid": report.valid, "witness": report.witness, "gamma": gamma, "rendered": rendered })
        )?,
        Format::Text => {
            writeln!(out, "valid: {}", report.valid)?;
            if let Some(w) = &report.witness {
                writeln!(out, "witness: {w}")?;
            }
            writeln!(out, "rendered: {rendered}")?;
        }
    }
    Ok(if report.valid { EXIT_OK } else { EXIT_NEGATIVE })
}

fn cmd_minimal(word: &str, format: Format, out: &mut dyn Write) -> Result<i32, CliError> {
    let word = parse_word(word)?;
    let gamma = minimal_attractor(&word).map_err(input)?;
    let rendered = RenderedWord::new(&word, &gamma);
    match format {
        Format::Json => writeln!(
            out,
            "{}",
            json!({ "size": gamma.len(), "gamma": gamma, "rendered": rendered })
        )?,
        Format::Text => {
            writeln!(out, "size: {}", gamma.len())?;
            writeln!(out, "gamma: {gamma}")?;
            writeln!(out, "rendered: {rendered}")?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_construct(
    family: Family,
    args: &DirectiveArgs,
    index: usize,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let bi = parse_directive(args)?;
    if index == 0 {
        return Err(CliError::Input("index must be at least 1".into()));
    }
    let chain = generate(&bi, index, args.max_len)?;
    let word = chain.word(index).unwrap();
    let (gamma, verdict) = match family {
        Family::Pseudostandard => {
            let v = pseudostandard_attractor(&chain, index).map_err(input)?;
            (v.gamma.clone(), serde_json::to_value(&v).unwrap())
        }
        _ => {
            let gamma = theorem_attractor(family, &chain, index).map_err(input)?;
            (gamma, json!({ "is_minimal": true }))
        }
    };
    let report = verify(word, &gamma).map_err(input)?;
    let rendered = RenderedWord::new(word, &gamma);
    match format {
        Format::Json => writeln!(
            out,
            "{}",
            json!({
                "n": index,
                "word": word,
                "gamma": gamma,
                "rendered": rendered,
                "valid": report.valid,
                "is_minimal": verdict["is_minimal"],
                "size_class": verdict.get("size_class"),
                "smaller": verdict.get("smaller"),
            })
        )?,
        Format::Text => {
            writeln!(out, "gamma: {gamma}")?;
            writeln!(out, "rendered: {rendered}")?;
            writeln!(out, "valid: {}", report.valid)?;
            writeln!(out, "minimal: {}", verdict["is_minimal"])?;
            if let Some(class) = verdict.get("size_class") {
                writeln!(out, "size_class: {}", class.as_str().unwrap_or_default())?;
            }
            if let Some(smaller) = verdict.get("smaller").filter(|s| !s.is_null()) {
                writeln!(out, "smaller: {smaller}")?;
            }
        }
    }
    Ok(if report.valid { EXIT_OK } else { EXIT_NEGATIVE })
}

fn open_output(path: &PathBuf, append: bool) -> io::Result<BufWriter<File>> {
    let file = if append {
        OpenOptions::new().create(true).append(true).open(path)?
    } else {
        File::create(path)?
    };
    Ok(BufWriter::new(file))
}

fn cmd_scan(
    config: &ScanConfig,
    jsonl: PathBuf,
    csv: Option<PathBuf>,
    checkpoint: Option<PathBuf>,
    resume: bool,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let resume_after = match (&checkpoint, resume) {
        (Some(path), true) => read_checkpoint(path)?,
        _ => None,
    };
    let append = resume_after.is_some();
    let mut writer = ScanWriter {
        jsonl: open_output(&jsonl, append)?,
        csv: csv.as_ref().map(|p| open_output(p, append)).transpose()?,
        checkpoint,
    };
    if !append {
        writer.write_csv_header()?;
    }
    let summary = run_scan(config, resume_after, |event| writer.handle(event)).map_err(input)?;
    writer.jsonl.flush()?;
    if let Some(csv) = &mut writer.csv {
        csv.flush()?;
    }
    writeln!(out, "{}", serde_json::to_string(&summary).unwrap())?;
    Ok(if summary.truncated {
        EXIT_BUDGET
    } else if summary.violations > 0 {
        EXIT_NEGATIVE
    } else {
        EXIT_OK
    })
}
