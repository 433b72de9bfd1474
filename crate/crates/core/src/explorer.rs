//! Exhaustive scans over directive prefixes, recording the minimum attractor
//! size of every generated pseudopalindromic prefix against a size bound.
//!
//! Work items are the directive prefixes of length `1..=max_steps`, listed in
//! depth-first preorder over the paired alphabet `0R < 0E < 1R < 1E`; an
//! item's position in that list is its canonical index. Each distinct word is
//! recorded once, by the first item producing it.

use std::collections::HashSet;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::attractor::{minimal_attractor, theorem_attractor};
use crate::directive::{generate, DirectiveBiSequence, Family, GenerateError, SequenceClass};
use crate::words::{BinaryWord, ClosureKind};

/// Items evaluated between two checkpoints.
const BATCH: usize = 512;

#[derive(Debug, Error)]
pub enum ExplorerError {
    #[error("bound must be at least 1")]
    InvalidBound,
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Letter/closure pairs in canonical order.
const PAIRS: [(u8, ClosureKind); 4] = [
    (0, ClosureKind::Palindromic),
    (0, ClosureKind::Antipalindromic),
    (1, ClosureKind::Palindromic),
    (1, ClosureKind::Antipalindromic),
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecord {
    #[serde(rename = "delta")]
    pub delta_prefix: BinaryWord,
    #[serde(rename = "theta", with = "theta_text")]
    pub theta_prefix: Vec<ClosureKind>,
    pub n: usize,
    #[serde(rename = "len")]
    pub word_length: usize,
    pub minimal_size: usize,
    pub theorem_size: Option<usize>,
    #[serde(rename = "ok")]
    pub conjecture_ok: bool,
}

mod theta_text {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::words::ClosureKind;

    pub fn serialize<S: Serializer>(theta: &[ClosureKind], s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(&theta.iter().map(|k| k.symbol()).collect::<String>())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<ClosureKind>, D::Error> {
        String::deserialize(d)?
            .chars()
            .map(|c| {
                ClosureKind::from_symbol(c)
                    .ok_or_else(|| serde::de::Error::custom(format!("bad closure {c:?}")))
            })
            .collect()
    }
}

impl ScanRecord {
    pub fn directive(&self) -> DirectiveBiSequence {
        DirectiveBiSequence::finite(
            self.delta_prefix.letters().to_vec(),
            self.theta_prefix.clone(),
        )
    }

    pub const CSV_HEADER: &'static str = "delta,theta,n,len,minimal_size,theorem_size,ok";

    pub fn csv_row(&self) -> String {
        let theta: String = self.theta_prefix.iter().map(|k| k.symbol()).collect();
        let theorem = self.theorem_size.map(|s| s.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{}",
            self.delta_prefix,
            theta,
            self.n,
            self.word_length,
            self.minimal_size,
            theorem,
            self.conjecture_ok
        )
    }
}

/// Which directives a scan visits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Restriction {
    All,
    /// Only prefixes whose first `n` steps admit the family's construction.
    Family(Family),
    /// Only prefixes admitting none of the constructions.
    NoFamily,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanConfig {
    pub max_steps: usize,
    pub max_word_len: usize,
    pub bound: usize,
    pub restriction: Restriction,
    /// Stop after this many records and mark the output truncated.
    pub max_records: Option<usize>,
}

impl ScanConfig {
    pub fn new(max_steps: usize, max_word_len: usize, bound: usize) -> Self {
        ScanConfig {
            max_steps,
            max_word_len,
            bound,
            restriction: Restriction::All,
            max_records: None,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    pub items: usize,
    pub records: usize,
    pub violations: usize,
    pub duplicates: usize,
    pub over_length: usize,
    pub truncated: bool,
    pub last_completed_index: Option<usize>,
}

pub enum ScanEvent<'a> {
    Record(&'a ScanRecord),
    /// Every item up to and including this canonical index is done.
    Checkpoint(usize),
    Truncated {
        last_completed_index: Option<usize>,
    },
}

/// All directive prefixes of length `1..=max_steps` in canonical preorder.
pub fn canonical_items(max_steps: usize) -> Vec<Vec<(u8, ClosureKind)>> {
    fn visit(
        prefix: &mut Vec<(u8, ClosureKind)>,
        max_steps: usize,
        out: &mut Vec<Vec<(u8, ClosureKind)>>,
    ) {
        if prefix.len() == max_steps {
            return;
        }
        for pair in PAIRS {
            prefix.push(pair);
            out.push(prefix.clone());
            visit(prefix, max_steps, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    visit(&mut Vec::new(), max_steps, &mut out);
    out
}

fn directive_of(item: &[(u8, ClosureKind)]) -> DirectiveBiSequence {
    let (delta, theta) = item.iter().copied().unzip();
    DirectiveBiSequence::finite(delta, theta)
}

fn admitted(restriction: Restriction, bi: &DirectiveBiSequence, n: usize) -> bool {
    match restriction {
        Restriction::All => true,
        Restriction::Family(f) => f.admits(bi, n),
        Restriction::NoFamily => Family::of_prefix(bi, n).is_none(),
    }
}

fn evaluate(bi: &DirectiveBiSequence, word: &BinaryWord, config: &ScanConfig) -> ScanRecord {
    let n = bi.available_steps().unwrap_or(0);
    let minimal_size = minimal_attractor(word)
        .expect("generated words are non-empty")
        .len();
    let family = match config.restriction {
        Restriction::Family(f) => Some(f),
        Restriction::All => Family::of_prefix(bi, n),
        Restriction::NoFamily => None,
    };
    let theorem_size = family.and_then(|f| {
        let chain = generate(bi, n, config.max_word_len).ok()?;
        theorem_attractor(f, &chain, n).ok().map(|a| a.len())
    });
    ScanRecord {
        delta_prefix: BinaryWord::from_letters(bi.delta.prefix.clone()).unwrap(),
        theta_prefix: bi.theta.prefix.clone(),
        n,
        word_length: word.len(),
        minimal_size,
        theorem_size,
        conjecture_ok: minimal_size <= config.bound,
    }
}

/// Runs a scan, streaming events to `emit`. Items with canonical index
/// `<= resume_after` are only replayed to rebuild the set of seen words.
pub fn run_scan(
    config: &ScanConfig,
    resume_after: Option<usize>,
    mut emit: impl FnMut(ScanEvent<'_>) -> io::Result<()>,
) -> Result<ScanSummary, ExplorerError> {
    if config.bound == 0 {
        return Err(ExplorerError::InvalidBound);
    }
    let items = canonical_items(config.max_steps);
    let mut summary = ScanSummary {
        items: items.len(),
        ..ScanSummary::default()
    };
    let mut seen: HashSet<BinaryWord> = HashSet::new();

    for (batch_no, batch) in items.chunks(BATCH).enumerate() {
        let base = batch_no * BATCH;
        let mut fresh: Vec<(DirectiveBiSequence, BinaryWord)> = Vec::new();
        for (offset, item) in batch.iter().enumerate() {
            let index = base + offset;
            let bi = directive_of(item);
            if !admitted(config.restriction, &bi, item.len()) {
                continue;
            }
            let word = match generate(&bi, item.len(), config.max_word_len) {
                Ok(chain) => chain.last_word().clone(),
                Err(GenerateError::LengthBudget { .. }) => {
                    summary.over_length += 1;
                    continue;
                }
                Err(e) => unreachable!("finite prefix of its own length: {e}"),
            };
            if !seen.insert(word.clone()) {
                summary.duplicates += 1;
                continue;
            }
            if resume_after.is_none_or(|r| index > r) {
                fresh.push((bi, word));
            }
        }

        let records: Vec<ScanRecord> = fresh
            .par_iter()
            .map(|(bi, word)| evaluate(bi, word, config))
            .collect();
        for record in &records {
            if config.max_records.is_some_and(|m| summary.records >= m) {
                summary.truncated = true;
                emit(ScanEvent::Truncated {
                    last_completed_index: summary.last_completed_index,
                })?;
                return Ok(summary);
            }
            summary.records += 1;
            summary.violations += usize::from(!record.conjecture_ok);
            emit(ScanEvent::Record(record))?;
        }
        let last = base + batch.len() - 1;
        if resume_after.is_none_or(|r| last > r) {
            summary.last_completed_index = Some(last);
            emit(ScanEvent::Checkpoint(last))?;
        }
    }
    Ok(summary)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanOutcome {
    pub records: Vec<ScanRecord>,
    pub summary: ScanSummary,
}

fn collect(config: &ScanConfig) -> Result<ScanOutcome, ExplorerError> {
    let mut records = Vec::new();
    let summary = run_scan(config, None, |event| {
        if let ScanEvent::Record(r) = event {
            records.push(r.clone());
        }
        Ok(())
    })?;
    Ok(ScanOutcome { records, summary })
}

/// All directive prefixes up to `max_steps`, words up to `max_word_len`.
pub fn scan(
    max_steps: usize,
    max_word_len: usize,
    bound: usize,
) -> Result<ScanOutcome, ExplorerError> {
    collect(&ScanConfig::new(max_steps, max_word_len, bound))
}

/// The scan restricted to one family, with `theorem_size` from its
/// construction. `Other` selects prefixes outside every family.
pub fn family_report(
    class: SequenceClass,
    max_steps: usize,
    max_word_len: usize,
) -> Result<ScanOutcome, ExplorerError> {
    let restriction = Family::from_class(class).map_or(Restriction::NoFamily, Restriction::Family);
    collect(&ScanConfig {
        restriction,
        ..ScanConfig::new(max_steps, max_word_len, 4)
    })
}

pub fn read_checkpoint(path: &Path) -> io::Result<Option<usize>> {
    match fs::read_to_string(path) {
        Ok(text) => text.trim().parse().map(Some).map_err(|e| {
            io::Error::new(
                io::ErrorKind::InvalidData,
                format!("checkpoint {}: {e}", path.display()),
            )
        }),
        Err(e) if e.kind() == io::ErrorKind::NotFound => Ok(None),
        Err(e) => Err(e),
    }
}

pub fn write_checkpoint(path: &Path, index: usize) -> io::Result<()> {
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, format!("{index}\n"))?;
    fs::rename(tmp, path)
}

/// Writes records as JSON lines and optionally CSV, checkpointing after each
/// batch.
pub struct ScanWriter<J: Write, C: Write> {
    pub jsonl: J,
    pub csv: Option<C>,
    pub checkpoint: Option<std::path::PathBuf>,
}

impl<J: Write, C: Write> ScanWriter<J, C> {
    pub fn write_csv_header(&mut self) -> io::Result<()> {
        if let Some(csv) = &mut self.csv {
            writeln!(csv, "{}", ScanRecord::CSV_HEADER)?;
        }
        Ok(())
    }

    pub fn handle(&mut self, event: ScanEvent<'_>) -> io::Result<()> {
        match event {
            ScanEvent::Record(r) => {
                serde_json::to_writer(&mut self.jsonl, r)?;
                self.jsonl.write_all(b"\n")?;
                if let Some(csv) = &mut self.csv {
                    writeln!(csv, "{}", r.csv_row())?;
                }
            }
            ScanEvent::Checkpoint(index) => {
                self.jsonl.flush()?;
                if let Some(csv) = &mut self.csv {
                    csv.flush()?;
                }
                if let Some(path) = &self.checkpoint {
                    write_checkpoint(path, index)?;
                }
            }
            ScanEvent::Truncated {
                last_completed_index,
            } => {
                let marker = serde_json::json!({ "truncated": true, "last_completed_index": last_completed_index });
                writeln!(self.jsonl, "{marker}")?;
                if let Some(csv) = &mut self.csv {
                    let at = last_completed_index.map_or("none".to_string(), |i| i.to_string());
                    writeln!(csv, "# truncated after index {at}")?;
                }
                self.jsonl.flush()?;
            }
        }
        Ok(())
    }
}
