//! String attractors: verification, exact minimum search, and the
//! closed-form constructions for Sturmian, pseudostandard and Rote prefixes.
//!
//! A factor occurring at `i` occupies the positions `{i, …, i + |f| - 1}`;
//! it crosses `γ` when `γ` lies in that set.

mod construct;
mod factors;
mod search;

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::words::BinaryWord;
use factors::FactorIndex;

pub use construct::{
    pseudostandard_attractor, rote_attractor, sturmian_attractor, theorem_attractor,
    ConstructError, MinimalityVerdict, SizeClass,
};
pub use search::{attractor_of_size, minimal_attractor, minimal_size};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AttractorError {
    #[error("position {position} is out of range for a word of length {word_length}")]
    PositionOutOfRange { position: usize, word_length: usize },
    #[error("attractor is for a word of length {attractor}, but the word has length {word}")]
    LengthMismatch { attractor: usize, word: usize },
    #[error("the empty word has no attractor")]
    EmptyWord,
}

/// A set of 0-based positions inside a word of known length.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Attractor {
    positions: Vec<usize>,
    word_length: usize,
}

impl Attractor {
    /// Builds the set from arbitrary positions; duplicates collapse.
    pub fn new(mut positions: Vec<usize>, word_length: usize) -> Result<Self, AttractorError> {
        positions.sort_unstable();
        positions.dedup();
        if let Some(&position) = positions.iter().find(|&&p| p >= word_length) {
            return Err(AttractorError::PositionOutOfRange {
                position,
                word_length,
            });
        }
        Ok(Attractor {
            positions,
            word_length,
        })
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn word_length(&self) -> usize {
        self.word_length
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn contains(&self, position: usize) -> bool {
        self.positions.binary_search(&position).is_ok()
    }
}

impl fmt::Display for Attractor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.positions.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for Attractor {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.positions.serialize(serializer)
    }
}

/// Mirror image `{|w| - 1 - γ}`; an attractor of a pseudopalindrome maps to
/// another attractor of the same word.
pub fn mirror(gamma: &Attractor) -> Attractor {
    let n = gamma.word_length;
    let mut positions: Vec<usize> = gamma.positions.iter().map(|&p| n - 1 - p).collect();
    positions.reverse();
    Attractor {
        positions,
        word_length: n,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub valid: bool,
    /// Shortest factor with no occurrence crossing the set (lexicographically
    /// least among the shortest); present iff `valid` is false.
    pub witness: Option<BinaryWord>,
}

/// `next[i]` = smallest position of `gamma` that is `>= i`, or `usize::MAX`.
fn next_position_table(gamma: &Attractor) -> Vec<usize> {
    let n = gamma.word_length;
    let mut next = vec![usize::MAX; n + 1];
    let mut marks = vec![false; n];
    for &p in &gamma.positions {
        marks[p] = true;
    }
    for i in (0..n).rev() {
        next[i] = if marks[i] { i } else { next[i + 1] };
    }
    next
}

/// Checks that every non-empty factor of `w` has an occurrence crossing
/// `gamma`.
pub fn verify(w: &BinaryWord, gamma: &Attractor) -> Result<VerificationReport, AttractorError> {
    if w.is_empty() {
        return Err(AttractorError::EmptyWord);
    }
    if gamma.word_length != w.len() {
        return Err(AttractorError::LengthMismatch {
            attractor: gamma.word_length,
            word: w.len(),
        });
    }
    let index = FactorIndex::new(w.letters());
    let next = next_position_table(gamma);
    for len in 1..=index.len() {
        let mut witness = None;
        index.for_each_factor(len, |occurrences| {
            let crossed = occurrences.iter().any(|&i| next[i] < i + len);
            if !crossed {
                witness = Some(occurrences[0]);
            }
            crossed
        });
        if let Some(start) = witness {
            let factor =
                BinaryWord::from_letters(w.letters()[start..start + len].to_vec()).unwrap();
            return Ok(VerificationReport {
                valid: false,
                witness: Some(factor),
            });
        }
    }
    Ok(VerificationReport {
        valid: true,
        witness: None,
    })
}

/// Convenience wrapper: `verify(w, {positions})`.
pub fn verify_positions(
    w: &BinaryWord,
    positions: &[usize],
) -> Result<VerificationReport, AttractorError> {
    verify(w, &Attractor::new(positions.to_vec(), w.len())?)
}

/// A word with attractor positions wrapped in square brackets, e.g.
/// `0[1]0[0]10`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct RenderedWord(pub String);

impl RenderedWord {
    pub fn new(w: &BinaryWord, gamma: &Attractor) -> Self {
        let mut s = String::with_capacity(w.len() + 2 * gamma.len());
        for (i, &b) in w.letters().iter().enumerate() {
            let c = if b == 0 { '0' } else { '1' };
            if gamma.contains(i) {
                s.push('[');
                s.push(c);
                s.push(']');
            } else {
                s.push(c);
            }
        }
        RenderedWord(s)
    }

    /// Recovers the word and the bracketed positions.
    pub fn parse(&self) -> Option<(BinaryWord, Vec<usize>)> {
        let mut letters = Vec::new();
        let mut positions = Vec::new();
        let mut chars = self.0.chars();
        while let Some(c) = chars.next() {
            match c {
                '0' | '1' => letters.push(u8::from(c == '1')),
                '[' => {
                    let inner = chars.next()?;
                    if !matches!(inner, '0' | '1') || chars.next()? != ']' {
                        return None;
                    }
                    positions.push(letters.len());
                    letters.push(u8::from(inner == '1'));
                }
                _ => return None,
            }
        }
        Some((BinaryWord::from_letters(letters).ok()?, positions))
    }
}

impl fmt::Display for RenderedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}
