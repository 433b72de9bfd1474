//! Finite binary words, the reversal and exchange antimorphisms, and the
//! pseudopalindromic closures built on them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("invalid symbol {symbol:?} at position {position}; expected '0' or '1'")]
    InvalidSymbol { position: usize, symbol: char },
    #[error("letter value {0} is not binary")]
    InvalidLetter(u8),
    #[error("operation requires a non-empty word")]
    Empty,
}

/// A finite word over {0, 1}. Positions are 0-based.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinaryWord(Vec<u8>);

impl BinaryWord {
    pub const EMPTY: BinaryWord = BinaryWord(Vec::new());

    pub fn empty() -> Self {
        BinaryWord(Vec::new())
    }

    pub fn from_letters(letters: Vec<u8>) -> Result<Self, WordError> {
        if let Some(&bad) = letters.iter().find(|&&b| b > 1) {
            return Err(WordError::InvalidLetter(bad));
        }
        Ok(BinaryWord(letters))
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<u8> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<u8> {
        self.0.get(i).copied()
    }

    pub fn push(&mut self, letter: u8) -> Result<(), WordError> {
        if letter > 1 {
            return Err(WordError::InvalidLetter(letter));
        }
        self.0.push(letter);
        Ok(())
    }

    pub fn prefix(&self, len: usize) -> BinaryWord {
        BinaryWord(self.0[..len].to_vec())
    }

    pub fn starts_with(&self, other: &BinaryWord) -> bool {
        self.0.starts_with(&other.0)
    }

    pub fn contains_letter(&self, letter: u8) -> bool {
        self.0.contains(&letter)
    }

    pub fn distinct_letters(&self) -> usize {
        usize::from(self.contains_letter(0)) + usize::from(self.contains_letter(1))
    }

    /// Letterwise exchange 0 <-> 1, without reversal.
    pub fn complement(&self) -> BinaryWord {
        BinaryWord(self.0.iter().map(|&b| b ^ 1).collect())
    }

    pub fn concat(&self, other: &BinaryWord) -> BinaryWord {
        let mut out = Vec::with_capacity(self.len() + other.len());
        out.extend_from_slice(&self.0);
        out.extend_from_slice(&other.0);
        BinaryWord(out)
    }
}

impl FromStr for BinaryWord {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .enumerate()
            .map(|(position, symbol)| match symbol {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(WordError::InvalidSymbol { position, symbol }),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(BinaryWord)
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self
            .0
            .iter()
            .map(|&b| if b == 0 { '0' } else { '1' })
            .collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryWord(\"{self}\")")
    }
}

impl Serialize for BinaryWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BinaryWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Which pseudopalindromic closure a directive step applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClosureKind {
    /// Reversal `R`; fixed points are palindromes.
    Palindromic,
    /// Exchange antimorphism `E`; fixed points are antipalindromes.
    Antipalindromic,
}

impl ClosureKind {
    pub fn symbol(self) -> char {
        match self {
            ClosureKind::Palindromic => 'R',
            ClosureKind::Antipalindromic => 'E',
        }
    }

    pub fn from_symbol(c: char) -> Option<Self> {
        match c {
            'R' => Some(ClosureKind::Palindromic),
            'E' => Some(ClosureKind::Antipalindromic),
            _ => None,
        }
    }
}

impl fmt::Display for ClosureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

impl Serialize for ClosureKind {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ClosureKind {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        let mut chars = s.chars();
        match (
            chars.next().and_then(ClosureKind::from_symbol),
            chars.next(),
        ) {
            (Some(kind), None) => Ok(kind),
            _ => Err(serde::de::Error::custom(format!(
                "expected \"R\" or \"E\", got {s:?}"
            ))),
        }
    }
}

pub fn reverse(w: &BinaryWord) -> BinaryWord {
    BinaryWord(w.0.iter().rev().copied().collect())
}

/// The exchange antimorphism: reversal composed with letter exchange.
pub fn exchange(w: &BinaryWord) -> BinaryWord {
    BinaryWord(w.0.iter().rev().map(|&b| b ^ 1).collect())
}

/// Image of `w` under the antimorphism associated with `kind`.
pub fn antimorphism(w: &BinaryWord, kind: ClosureKind) -> BinaryWord {
    match kind {
        ClosureKind::Palindromic => reverse(w),
        ClosureKind::Antipalindromic => exchange(w),
    }
}

pub fn is_palindrome(w: &BinaryWord) -> bool {
    is_fixed(&w.0, ClosureKind::Palindromic)
}

pub fn is_antipalindrome(w: &BinaryWord) -> bool {
    is_fixed(&w.0, ClosureKind::Antipalindromic)
}

pub fn is_pseudopalindrome(w: &BinaryWord, kind: ClosureKind) -> bool {
    is_fixed(&w.0, kind)
}

fn is_fixed(s: &[u8], kind: ClosureKind) -> bool {
    let flip = match kind {
        ClosureKind::Palindromic => 0,
        ClosureKind::Antipalindromic => 1,
    };
    let n = s.len();
    (0..n.div_ceil(2)).all(|i| s[i] == s[n - 1 - i] ^ flip)
}

/// KMP failure function: `fail[i]` is the length of the longest proper
/// border of `s[..=i]`.
fn failure_function(s: &[u8]) -> Vec<usize> {
    let mut fail = vec![0; s.len()];
    let mut k = 0;
    for i in 1..s.len() {
        while k > 0 && s[i] != s[k] {
            k = fail[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        fail[i] = k;
    }
    fail
}

/// Separator letter for border computations; never a binary symbol.
const SEPARATOR: u8 = 2;

/// Length of the longest suffix of `w` fixed by the antimorphism of `kind`.
///
/// A suffix `x` of `w` is fixed iff `x` equals a prefix of `θ(w)`, so the
/// answer is the longest border of `θ(w) # w`.
pub fn longest_pseudopalindromic_suffix(w: &BinaryWord, kind: ClosureKind) -> usize {
    if w.is_empty() {
        return 0;
    }
    let image = antimorphism(w, kind);
    let mut s = Vec::with_capacity(2 * w.len() + 1);
    s.extend_from_slice(&image.0);
    s.push(SEPARATOR);
    s.extend_from_slice(&w.0);
    *failure_function(&s).last().unwrap()
}

/// Lengths of all prefixes of `v` fixed by the antimorphism of `kind`, in
/// increasing order, including the empty prefix.
///
/// A prefix of length `l` is fixed iff it equals the length-`l` suffix of
/// `θ(v)`, i.e. the fixed prefixes are the borders of `v # θ(v)`.
pub fn pseudopalindromic_prefix_lengths(v: &BinaryWord, kind: ClosureKind) -> Vec<usize> {
    let mut lengths = vec![0];
    if v.is_empty() {
        return lengths;
    }
    let image = antimorphism(v, kind);
    let mut s = Vec::with_capacity(2 * v.len() + 1);
    s.extend_from_slice(&v.0);
    s.push(SEPARATOR);
    s.extend_from_slice(&image.0);
    let fail = failure_function(&s);
    let mut k = fail[s.len() - 1];
    while k > 0 {
        lengths.push(k);
        k = fail[k - 1];
    }
    lengths[1..].reverse();
    lengths
}

/// `w^R` (palindromic) or `w^E` (antipalindromic): the shortest
/// pseudopalindrome of the given kind having `w` as a prefix.
pub fn closure(w: &BinaryWord, kind: ClosureKind) -> BinaryWord {
    let fixed_suffix = longest_pseudopalindromic_suffix(w, kind);
    let head = w.prefix(w.len() - fixed_suffix);
    w.concat(&antimorphism(&head, kind))
}

pub fn palindromic_closure(w: &BinaryWord) -> BinaryWord {
    closure(w, ClosureKind::Palindromic)
}

pub fn antipalindromic_closure(w: &BinaryWord) -> BinaryWord {
    closure(w, ClosureKind::Antipalindromic)
}

/// Sums of adjacent letters modulo 2; maps a word of length `n >= 1` to one
/// of length `n - 1`.
pub fn s_derivative(u: &BinaryWord) -> Result<BinaryWord, WordError> {
    if u.is_empty() {
        return Err(WordError::Empty);
    }
    Ok(BinaryWord(u.0.windows(2).map(|p| p[0] ^ p[1]).collect()))
}

/// Longest `|p|` such that `p` is fixed by the antimorphism of `kind` and
/// `p·letter` is a prefix of `v`; `None` if no such `p` exists.
pub fn longest_pp_prefix_followed_by(
    v: &BinaryWord,
    letter: u8,
    kind: ClosureKind,
) -> Option<usize> {
    pseudopalindromic_prefix_lengths(v, kind)
        .into_iter()
        .rev()
        .find(|&len| v.get(len) == Some(letter))
}
