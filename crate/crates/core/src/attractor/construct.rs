//! Closed-form attractors of the pseudopalindromic prefixes `w_n` of
//! Sturmian, pseudostandard and complementary-symmetric Rote directives.

use serde::Serialize;
use thiserror::Error;

use super::Attractor;
use crate::directive::{Family, PrefixChain};
use crate::words::{longest_pp_prefix_followed_by, BinaryWord, ClosureKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("index must be at least 1")]
    ZeroIndex,
    #[error("chain has {len} steps, w_{n} requested")]
    IndexOutOfRange { n: usize, len: usize },
    #[error("the first {n} directive steps do not belong to the {family:?} family")]
    WrongFamily { family: Family, n: usize },
    #[error("w_{n} has no {kind:?} prefix followed by {letter}")]
    MissingPrefix {
        n: usize,
        letter: u8,
        kind: ClosureKind,
    },
}

fn checked_word(
    chain: &PrefixChain,
    n: usize,
    family: Family,
) -> Result<&BinaryWord, ConstructError> {
    if n == 0 {
        return Err(ConstructError::ZeroIndex);
    }
    if n > chain.len() {
        return Err(ConstructError::IndexOutOfRange {
            n,
            len: chain.len(),
        });
    }
    if !family.admits(&chain.source, n) {
        return Err(ConstructError::WrongFamily { family, n });
    }
    Ok(chain.word(n).unwrap())
}

fn prefix_followed_by(
    v: &BinaryWord,
    n: usize,
    letter: u8,
    kind: ClosureKind,
) -> Result<usize, ConstructError> {
    longest_pp_prefix_followed_by(v, letter, kind).ok_or(ConstructError::MissingPrefix {
        n,
        letter,
        kind,
    })
}

/// `{r_a : a occurs in w_n}` where `r_a` is the length of the longest
/// palindromic prefix of `w_n` followed by `a`. Minimum size.
pub fn sturmian_attractor(chain: &PrefixChain, n: usize) -> Result<Attractor, ConstructError> {
    let v = checked_word(chain, n, Family::Sturmian)?;
    let positions = (0..2)
        .filter(|&a| v.contains_letter(a))
        .map(|a| prefix_followed_by(v, n, a, ClosureKind::Palindromic))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Attractor::new(positions, v.len()).expect("prefix lengths lie inside the word"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SizeClass {
    Two,
    Three,
    /// Size three, but a size-two attractor exists (Δ starts with `0·1^{n-1}`).
    NotMinimalException,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimalityVerdict {
    pub gamma: Attractor,
    pub is_minimal: bool,
    pub size_class: SizeClass,
    /// In the exceptional case, the explicit size-two attractor `{2, 4}`.
    pub smaller: Option<Attractor>,
}

/// `Γ = {e_0, e_1, |v| - e_1 - 1}` for the antipalindromic prefix `v = w_n`
/// of a pseudostandard directive, where `e_a` is the length of the longest
/// antipalindromic prefix followed by `a` (falling back to `e_ā` when there
/// is none). Directives starting with 1 are handled through the letter
/// exchange, which leaves positions unchanged.
pub fn pseudostandard_attractor(
    chain: &PrefixChain,
    n: usize,
) -> Result<MinimalityVerdict, ConstructError> {
    let word = checked_word(chain, n, Family::Pseudostandard)?;
    let first = chain
        .source
        .delta_at(1)
        .expect("chain has at least one step");
    let v = if first == 0 {
        word.clone()
    } else {
        word.complement()
    };

    let kind = ClosureKind::Antipalindromic;
    let e = |a| longest_pp_prefix_followed_by(&v, a, kind);
    let (e0, e1) = match (e(0), e(1)) {
        (Some(e0), Some(e1)) => (e0, e1),
        (Some(e0), None) => (e0, e0),
        (None, Some(e1)) => (e1, e1),
        (None, None) => return Err(ConstructError::MissingPrefix { n, letter: 0, kind }),
    };
    let gamma =
        Attractor::new(vec![e0, e1, v.len() - e1 - 1], v.len()).expect("positions inside the word");

    // Δ normalised so that it starts with 0.
    let delta = |i: usize| chain.source.delta_at(i).unwrap() ^ first;
    let exceptional = n >= 2 && (2..=n).all(|i| delta(i) == 1);
    let (size_class, is_minimal, smaller) = if gamma.len() == 2 {
        (SizeClass::Two, true, None)
    } else if exceptional {
        let smaller =
            Attractor::new(vec![2, 4], v.len()).expect("|w_n| >= 6 in the exceptional case");
        (SizeClass::NotMinimalException, false, Some(smaller))
    } else {
        (SizeClass::Three, true, None)
    };
    Ok(MinimalityVerdict {
        gamma,
        is_minimal,
        size_class,
        smaller,
    })
}

/// Minimum-size attractor of `w_n` for a complementary-symmetric Rote
/// directive: `{0}` for a one-letter prefix, otherwise a pair
/// `{|w|, |w_{n-1}|}` chosen by the closure types of `w_{n-1}` and `w_n`.
pub fn rote_attractor(chain: &PrefixChain, n: usize) -> Result<Attractor, ConstructError> {
    let word = checked_word(chain, n, Family::Rote)?;
    if word.distinct_letters() == 1 {
        return Ok(Attractor::new(vec![0], word.len()).unwrap());
    }
    let theta = |i: usize| chain.step(i).unwrap().theta;
    let pair = |m: usize, kind: ClosureKind| -> Result<Vec<usize>, ConstructError> {
        let w_m = chain.word(m).unwrap();
        let a = chain.step(m).unwrap().delta;
        let w = prefix_followed_by(w_m, m, a ^ 1, kind)?;
        Ok(vec![w, chain.word(m - 1).unwrap().len()])
    };
    let positions = match theta(n) {
        ClosureKind::Antipalindromic => pair(n, ClosureKind::Antipalindromic)?,
        ClosureKind::Palindromic => {
            // Walk back over the run of palindromic closures ending at n;
            // the run starts right after an antipalindromic step because
            // two-letter prefixes cannot be built from R alone here.
            let mut m = n;
            while m > 1 && theta(m - 1) == ClosureKind::Palindromic {
                m -= 1;
            }
            if m == 1 {
                return Err(ConstructError::WrongFamily {
                    family: Family::Rote,
                    n,
                });
            }
            pair(m, ClosureKind::Palindromic)?
        }
    };
    Ok(Attractor::new(positions, word.len()).expect("positions inside the word"))
}

/// The closed-form attractor of `w_n` for `family`.
pub fn theorem_attractor(
    family: Family,
    chain: &PrefixChain,
    n: usize,
) -> Result<Attractor, ConstructError> {
    match family {
        Family::Sturmian => sturmian_attractor(chain, n),
        Family::Pseudostandard => pseudostandard_attractor(chain, n).map(|v| v.gamma),
        Family::Rote => rote_attractor(chain, n),
    }
}
