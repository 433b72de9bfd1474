//! Directive bi-sequences `(Δ, Θ)`, the prefix chains they generate by
//! iterated pseudopalindromic closure, and their classification.
//!
//! Step indices are 1-based: step `n` appends `δ_n` to `w_{n-1}` and closes
//! the result under `ϑ_n`. Positions inside words stay 0-based.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::words::{closure, BinaryWord, ClosureKind};

/// Default upper bound on the length of any generated word.
pub const DEFAULT_MAX_LEN: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{field}: unexpected character {found:?} at position {position}")]
    IllegalCharacter {
        field: &'static str,
        position: usize,
        found: char,
    },
    #[error("{field}: empty period at position {position}")]
    EmptyPeriod {
        field: &'static str,
        position: usize,
    },
    #[error("{field}: unclosed '(' opened at position {position}")]
    Unclosed {
        field: &'static str,
        position: usize,
    },
    #[error("{field}: trailing input after ')' at position {position}")]
    Trailing {
        field: &'static str,
        position: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("directive defines only {available} steps, {requested} requested")]
    DirectiveExhausted { requested: usize, available: usize },
    #[error("w_{step} would have length {length}, exceeding the budget of {max_len} (last completed step: {last_completed})")]
    LengthBudget {
        step: usize,
        length: usize,
        max_len: usize,
        last_completed: usize,
    },
    #[error("directive is not in the required class: {0}")]
    ClassMismatch(String),
}

/// An eventually periodic sequence `prefix · period^ω`, or the finite
/// sequence `prefix` when `period` is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EventuallyPeriodic<T> {
    pub prefix: Vec<T>,
    pub period: Vec<T>,
}

impl<T: Copy> EventuallyPeriodic<T> {
    pub fn finite(prefix: Vec<T>) -> Self {
        EventuallyPeriodic {
            prefix,
            period: Vec::new(),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.period.is_empty()
    }

    /// Number of defined terms; `None` for infinite sequences.
    pub fn available(&self) -> Option<usize> {
        self.is_finite().then_some(self.prefix.len())
    }

    /// Term at 0-based index `i`.
    pub fn at(&self, i: usize) -> Option<T> {
        if i < self.prefix.len() {
            Some(self.prefix[i])
        } else if self.period.is_empty() {
            None
        } else {
            Some(self.period[(i - self.prefix.len()) % self.period.len()])
        }
    }

    /// Every term from the preperiod on lies in the period.
    pub fn eventually_all(&self, pred: impl Fn(T) -> bool) -> bool {
        !self.is_finite() && self.period.iter().all(|&t| pred(t))
    }
}

fn parse_periodic<T>(
    text: &str,
    field: &'static str,
    symbol: impl Fn(char) -> Option<T>,
) -> Result<EventuallyPeriodic<T>, ParseError> {
    let mut prefix = Vec::new();
    let mut period = Vec::new();
    let mut open: Option<usize> = None;
    let mut closed = false;
    for (position, c) in text.chars().enumerate() {
        if closed {
            return Err(ParseError::Trailing { field, position });
        }
        match (c, open) {
            ('(', None) => open = Some(position),
            (')', Some(_)) => {
                if period.is_empty() {
                    return Err(ParseError::EmptyPeriod { field, position });
                }
                closed = true;
            }
            _ => match symbol(c) {
                Some(t) if open.is_some() => period.push(t),
                Some(t) => prefix.push(t),
                None => {
                    return Err(ParseError::IllegalCharacter {
                        field,
                        position,
                        found: c,
                    })
                }
            },
        }
    }
    if let (Some(position), false) = (open, closed) {
        return Err(ParseError::Unclosed { field, position });
    }
    Ok(EventuallyPeriodic { prefix, period })
}

fn render_periodic<T>(seq: &EventuallyPeriodic<T>, symbol: impl Fn(&T) -> char) -> String {
    let mut s: String = seq.prefix.iter().map(&symbol).collect();
    if !seq.period.is_empty() {
        s.push('(');
        s.extend(seq.period.iter().map(&symbol));
        s.push(')');
    }
    s
}

/// The paired description `(Δ, Θ)`. Step `n` is defined iff both `δ_n` and
/// `ϑ_n` are.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DirectiveBiSequence {
    pub delta: EventuallyPeriodic<u8>,
    pub theta: EventuallyPeriodic<ClosureKind>,
}

impl DirectiveBiSequence {
    /// Parse `pre` or `pre(period)` for Δ over {0,1} and Θ over {R,E}.
    pub fn parse(delta_text: &str, theta_text: &str) -> Result<Self, ParseError> {
        let delta = parse_periodic(delta_text, "delta", |c| match c {
            '0' => Some(0),
            '1' => Some(1),
            _ => None,
        })?;
        let theta = parse_periodic(theta_text, "theta", ClosureKind::from_symbol)?;
        Ok(DirectiveBiSequence { delta, theta })
    }

    /// A finite directive from explicit letters and closures.
    pub fn finite(delta: Vec<u8>, theta: Vec<ClosureKind>) -> Self {
        DirectiveBiSequence {
            delta: EventuallyPeriodic::finite(delta),
            theta: EventuallyPeriodic::finite(theta),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.delta.is_finite() || self.theta.is_finite()
    }

    /// Number of defined steps; `None` when infinite.
    pub fn available_steps(&self) -> Option<usize> {
        match (self.delta.available(), self.theta.available()) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (Some(a), None) | (None, Some(a)) => Some(a),
            (None, None) => None,
        }
    }

    /// `δ_n` for 1-based `n`.
    pub fn delta_at(&self, n: usize) -> Option<u8> {
        n.checked_sub(1).and_then(|i| self.delta.at(i))
    }

    /// `ϑ_n` for 1-based `n`.
    pub fn theta_at(&self, n: usize) -> Option<ClosureKind> {
        n.checked_sub(1).and_then(|i| self.theta.at(i))
    }

    /// `(δ_n, ϑ_n)` when step `n` is defined.
    pub fn step(&self, n: usize) -> Option<(u8, ClosureKind)> {
        match self.available_steps() {
            Some(avail) if n > avail => None,
            _ => Some((self.delta_at(n)?, self.theta_at(n)?)),
        }
    }

    /// The first `steps` pairs as a finite directive.
    pub fn truncate(&self, steps: usize) -> DirectiveBiSequence {
        let steps = self.available_steps().map_or(steps, |a| a.min(steps));
        let (delta, theta) = (1..=steps).map(|n| self.step(n).unwrap()).unzip();
        DirectiveBiSequence::finite(delta, theta)
    }

    pub fn delta_text(&self) -> String {
        render_periodic(&self.delta, |&b| if b == 0 { '0' } else { '1' })
    }

    pub fn theta_text(&self) -> String {
        render_periodic(&self.theta, |k| k.symbol())
    }

    /// First index (1-based) past which both descriptions are purely periodic,
    /// and a common period of the pair.
    fn periodic_window(&self) -> Option<(usize, usize)> {
        if self.is_finite() {
            return None;
        }
        let start = self.delta.prefix.len().max(self.theta.prefix.len()) + 1;
        let period = lcm(self.delta.period.len(), self.theta.period.len());
        Some((start, period))
    }

    /// Steps whose consecutive pairs cover every length-2 factor of the
    /// bi-sequence: all steps when finite, otherwise preperiod plus two
    /// common periods.
    fn factor_window(&self) -> usize {
        match self.periodic_window() {
            Some((start, period)) => start + 2 * period,
            None => self.available_steps().unwrap_or(0),
        }
    }
}

impl fmt::Display for DirectiveBiSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.delta_text(), self.theta_text())
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// One step of a prefix chain: `w_n = (w_{n-1} δ_n)^{ϑ_n}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainStep {
    pub n: usize,
    #[serde(serialize_with = "serialize_letter")]
    pub delta: u8,
    pub theta: ClosureKind,
    pub word: BinaryWord,
    pub length: usize,
}

fn serialize_letter<S: serde::Serializer>(letter: &u8, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(if *letter == 0 { "0" } else { "1" })
}

/// The words `w_1, …, w_k` generated from a directive (`w_0 = ε` implicit).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefixChain {
    pub source: DirectiveBiSequence,
    pub steps: Vec<ChainStep>,
}

impl PrefixChain {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// `w_n`; `w_0` is the empty word.
    pub fn word(&self, n: usize) -> Option<&BinaryWord> {
        static EMPTY: BinaryWord = BinaryWord::EMPTY;
        if n == 0 {
            Some(&EMPTY)
        } else {
            self.steps.get(n - 1).map(|s| &s.word)
        }
    }

    pub fn step(&self, n: usize) -> Option<&ChainStep> {
        n.checked_sub(1).and_then(|i| self.steps.get(i))
    }

    pub fn last_word(&self) -> &BinaryWord {
        self.word(self.len()).unwrap()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(&self.steps).expect("chain steps serialize")
    }
}

/// Compute `w_1 … w_steps` by iterated closure, aborting once a word would
/// exceed `max_len` symbols.
pub fn generate(
    bi: &DirectiveBiSequence,
    steps: usize,
    max_len: usize,
) -> Result<PrefixChain, GenerateError> {
    if let Some(available) = bi.available_steps() {
        if steps > available {
            return Err(GenerateError::DirectiveExhausted {
                requested: steps,
                available,
            });
        }
    }
    let mut chain = PrefixChain {
        source: bi.clone(),
        steps: Vec::with_capacity(steps),
    };
    let mut current = BinaryWord::empty();
    for n in 1..=steps {
        let (delta, theta) = bi.step(n).expect("step within available range");
        // |(wδ)^θ| <= 2|wδ|; reject early before materializing a huge word.
        let extended_len = current.len() + 1;
        if extended_len > max_len {
            return Err(GenerateError::LengthBudget {
                step: n,
                length: extended_len,
                max_len,
                last_completed: n - 1,
            });
        }
        let mut extended = current;
        extended.push(delta).expect("directive letters are binary");
        let next = closure(&extended, theta);
        if next.len() > max_len {
            return Err(GenerateError::LengthBudget {
                step: n,
                length: next.len(),
                max_len,
                last_completed: n - 1,
            });
        }
        chain.steps.push(ChainStep {
            n,
            delta,
            theta,
            word: next.clone(),
            length: next.len(),
        });
        current = next;
    }
    Ok(chain)
}

/// Pseudopalindromic prefixes of a complementary-symmetric Rote sequence:
/// for such directives the generated chain lists all of them.
pub fn pseudopalindromic_prefixes(
    bi: &DirectiveBiSequence,
    steps: usize,
    max_len: usize,
) -> Result<PrefixChain, GenerateError> {
    let class = classify(bi);
    if !class.is_rote() {
        return Err(GenerateError::ClassMismatch(format!(
            "{bi} is classified as {:?}",
            class.classes
        )));
    }
    generate(bi, steps, max_len)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Periodicity {
    Aperiodic,
    EventuallyPeriodic,
    Unknown,
}

/// The generated sequence is eventually periodic iff some bijection
/// `f: {E, R} -> {0, 1}` satisfies `f(ϑ_n) = δ_{n+1}` for all large `n`.
pub fn is_aperiodic(bi: &DirectiveBiSequence) -> Periodicity {
    let Some((start, period)) = bi.periodic_window() else {
        return Periodicity::Unknown;
    };
    // image[kind] collects the letters δ_{n+1} seen after ϑ_n = kind.
    let mut image: [Option<u8>; 2] = [None, None];
    for n in start..start + period {
        let slot = match bi.theta_at(n).unwrap() {
            ClosureKind::Palindromic => 0,
            ClosureKind::Antipalindromic => 1,
        };
        let next = bi.delta_at(n + 1).unwrap();
        match image[slot] {
            None => image[slot] = Some(next),
            Some(prev) if prev != next => return Periodicity::Aperiodic,
            Some(_) => {}
        }
    }
    match image {
        [Some(a), Some(b)] if a == b => Periodicity::Aperiodic,
        _ => Periodicity::EventuallyPeriodic,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SequenceClass {
    StandardSturmian,
    Pseudostandard,
    /// Aperiodic, starts with R, and avoids the forbidden length-2 factors.
    CsRoteValid,
    /// A finite directive that starts with R and avoids the forbidden
    /// factors; aperiodicity cannot be decided.
    CsRoteValidSoFar,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub classes: Vec<SequenceClass>,
    pub periodicity: Periodicity,
}

impl Classification {
    pub fn contains(&self, class: SequenceClass) -> bool {
        self.classes.contains(&class)
    }

    pub fn is_rote(&self) -> bool {
        self.contains(SequenceClass::CsRoteValid) || self.contains(SequenceClass::CsRoteValidSoFar)
    }
}

/// Whether the consecutive pairs `(δ_i δ_{i+1}, ϑ_i ϑ_{i+1})` are excluded
/// from complementary-symmetric Rote directives.
pub fn is_rote_forbidden(first: (u8, ClosureKind), second: (u8, ClosureKind)) -> bool {
    use ClosureKind::{Antipalindromic as E, Palindromic as R};
    match (first.1, second.1) {
        (E, E) => true,
        (R, R) => first.0 != second.0,
        (R, E) => first.0 == second.0,
        (E, R) => false,
    }
}

/// Rote directive conditions checked on the first `steps` pairs only.
pub fn rote_prefix_valid(bi: &DirectiveBiSequence, steps: usize) -> bool {
    if steps == 0 {
        return true;
    }
    if bi.theta_at(1) != Some(ClosureKind::Palindromic) {
        return false;
    }
    (1..steps).all(|n| match (bi.step(n), bi.step(n + 1)) {
        (Some(a), Some(b)) => !is_rote_forbidden(a, b),
        _ => true,
    })
}

pub fn classify(bi: &DirectiveBiSequence) -> Classification {
    let periodicity = is_aperiodic(bi);
    let mut classes = Vec::new();

    let all_r = bi.theta.eventually_all(|k| k == ClosureKind::Palindromic)
        && bi
            .theta
            .prefix
            .iter()
            .all(|&k| k == ClosureKind::Palindromic);
    let all_e = bi
        .theta
        .eventually_all(|k| k == ClosureKind::Antipalindromic)
        && bi
            .theta
            .prefix
            .iter()
            .all(|&k| k == ClosureKind::Antipalindromic);
    let both_letters_recur =
        !bi.delta.is_finite() && bi.delta.period.contains(&0) && bi.delta.period.contains(&1);

    if all_r && both_letters_recur {
        classes.push(SequenceClass::StandardSturmian);
    }
    if all_e {
        classes.push(SequenceClass::Pseudostandard);
    }
    if rote_prefix_valid(bi, bi.factor_window()) {
        match periodicity {
            Periodicity::Aperiodic => classes.push(SequenceClass::CsRoteValid),
            Periodicity::Unknown => classes.push(SequenceClass::CsRoteValidSoFar),
            Periodicity::EventuallyPeriodic => {}
        }
    }
    if classes.is_empty() {
        classes.push(SequenceClass::Other);
    }
    Classification {
        classes,
        periodicity,
    }
}

/// Attractor families with a closed-form construction, decided on the
/// first `steps` directive pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// Only palindromic closures.
    Sturmian,
    /// Only antipalindromic closures.
    Pseudostandard,
    /// Complementary-symmetric Rote directive conditions.
    Rote,
}

impl Family {
    pub fn admits(self, bi: &DirectiveBiSequence, steps: usize) -> bool {
        let all = |kind| (1..=steps).all(|n| bi.theta_at(n) == Some(kind));
        match self {
            Family::Sturmian => all(ClosureKind::Palindromic),
            Family::Pseudostandard => all(ClosureKind::Antipalindromic),
            Family::Rote => rote_prefix_valid(bi, steps),
        }
    }

    /// Family whose constructor applies to the first `steps` pairs, if any.
    /// Pure-R prefixes are Sturmian even when they also satisfy the Rote
    /// conditions (e.g. a single step or a constant Δ).
    pub fn of_prefix(bi: &DirectiveBiSequence, steps: usize) -> Option<Family> {
        [Family::Sturmian, Family::Pseudostandard, Family::Rote]
            .into_iter()
            .find(|f| f.admits(bi, steps))
    }

    pub fn from_class(class: SequenceClass) -> Option<Family> {
        match class {
            SequenceClass::StandardSturmian => Some(Family::Sturmian),
            SequenceClass::Pseudostandard => Some(Family::Pseudostandard),
            SequenceClass::CsRoteValid | SequenceClass::CsRoteValidSoFar => Some(Family::Rote),
            SequenceClass::Other => None,
        }
    }
}

impl std::str::FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "sturmian" => Ok(Family::Sturmian),
            "pseudostandard" => Ok(Family::Pseudostandard),
            "rote" => Ok(Family::Rote),
            _ => Err(format!(
                "unknown family {s:?}; expected sturmian, pseudostandard or rote"
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(d: &str, t: &str) -> DirectiveBiSequence {
        DirectiveBiSequence::parse(d, t).unwrap()
    }

    fn word_at(d: &str, t: &str, n: usize) -> String {
        generate(&bi(d, t), n, DEFAULT_MAX_LEN)
            .unwrap()
            .word(n)
            .unwrap()
            .to_string()
    }

    #[test]
    fn parse_examples() {
        let tm = bi("0(1)", "(RE)");
        assert_eq!(tm.delta.prefix, vec![0]);
        assert_eq!(tm.delta.period, vec![1]);
        assert_eq!(
            tm.theta.period,
            vec![ClosureKind::Palindromic, ClosureKind::Antipalindromic]
        );
        assert_eq!(tm.available_steps(), None);
        assert_eq!(
            (1..=5).map(|n| tm.delta_at(n).unwrap()).collect::<Vec<_>>(),
            vec![0, 1, 1, 1, 1]
        );

        let fib = bi("(01)", "(R)");
        assert_eq!(fib.delta_text(), "(01)");
        assert_eq!(fib.theta_text(), "(R)");

        let ps = bi("01001", "EEEEE");
        assert_eq!(ps.available_steps(), Some(5));
        assert!(ps.is_finite());
    }

    #[test]
    fn parse_errors_name_position() {
        assert_eq!(
            DirectiveBiSequence::parse("01x", "R"),
            Err(ParseError::IllegalCharacter {
                field: "delta",
                position: 2,
                found: 'x'
            })
        );
        assert_eq!(
            DirectiveBiSequence::parse("0()", "R"),
            Err(ParseError::EmptyPeriod {
                field: "delta",
                position: 2
            })
        );
        assert_eq!(
            DirectiveBiSequence::parse("0", "R(E"),
            Err(ParseError::Unclosed {
                field: "theta",
                position: 1
            })
        );
        assert_eq!(
            DirectiveBiSequence::parse("0(1)0", "R"),
            Err(ParseError::Trailing {
                field: "delta",
                position: 4
            })
        );
        assert!(matches!(
            DirectiveBiSequence::parse("0", "RX"),
            Err(ParseError::IllegalCharacter {
                field: "theta",
                position: 1,
                found: 'X'
            })
        ));
        assert!(DirectiveBiSequence::parse("0((1))", "R").is_err());
    }

    #[test]
    fn generate_examples() {
        assert_eq!(word_at("0(1)", "(RE)", 4), "01101001");
        assert_eq!(word_at("0(1)", "(RE)", 5), "0110100110010110");
        assert_eq!(word_at("(01)", "(R)", 3), "010010");
        assert_eq!(word_at("(0)", "(E)", 2), "0101");
    }

    #[test]
    fn generate_errors() {
        assert_eq!(
            generate(&bi("01", "RRR"), 3, DEFAULT_MAX_LEN),
            Err(GenerateError::DirectiveExhausted {
                requested: 3,
                available: 2
            })
        );
        // Thue–Morse doubles each step: w_5 has length 16.
        match generate(&bi("0(1)", "(RE)"), 6, 20) {
            Err(GenerateError::LengthBudget {
                last_completed: 5, ..
            }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn chain_json_shape() {
        let chain = generate(&bi("(01)", "(R)"), 2, 100).unwrap();
        let json = chain.to_json();
        assert_eq!(
            json,
            serde_json::json!([
                {"n": 1, "delta": "0", "theta": "R", "word": "0", "length": 1},
                {"n": 2, "delta": "1", "theta": "R", "word": "010", "length": 3},
            ])
        );
    }

    #[test]
    fn aperiodicity_examples() {
        assert_eq!(
            is_aperiodic(&bi("(0)", "(R)")),
            Periodicity::EventuallyPeriodic
        );
        assert_eq!(is_aperiodic(&bi("(01)", "(R)")), Periodicity::Aperiodic);
        assert_eq!(
            is_aperiodic(&bi("(01)", "(RE)")),
            Periodicity::EventuallyPeriodic
        );
        assert_eq!(is_aperiodic(&bi("0(1)", "(RE)")), Periodicity::Aperiodic);
        assert_eq!(is_aperiodic(&bi("0101", "RRRR")), Periodicity::Unknown);
    }

    #[test]
    fn classify_examples() {
        let c = classify(&bi("0011001", "RRERERE"));
        assert_eq!(c.classes, vec![SequenceClass::CsRoteValidSoFar]);
        assert_eq!(
            classify(&bi("01", "RR")).classes,
            vec![SequenceClass::Other]
        );
        assert_eq!(
            classify(&bi("(01)", "(R)")).classes,
            vec![SequenceClass::StandardSturmian]
        );
        assert_eq!(
            classify(&bi("01(001)", "(E)")).classes,
            vec![SequenceClass::Pseudostandard]
        );
        // Thue–Morse: (11, RE) is forbidden for Rote.
        assert_eq!(
            classify(&bi("0(1)", "(RE)")).classes,
            vec![SequenceClass::Other]
        );
        // Constant Δ with R^ω is neither Sturmian nor aperiodic.
        assert_eq!(
            classify(&bi("(0)", "(R)")).classes,
            vec![SequenceClass::Other]
        );
    }

    #[test]
    fn classify_infinite_rote() {
        let c = classify(&bi("0(0110)", "R(RE)"));
        assert_eq!(c.periodicity, Periodicity::Aperiodic);
        assert!(c.classes.contains(&SequenceClass::CsRoteValid), "{c:?}");
        // (00, RE) occurs only in the periodic part.
        let c = classify(&bi("0(0)", "R(RE)"));
        assert!(!c.is_rote(), "{c:?}");
    }

    #[test]
    fn rote_alias_rejects_other_classes() {
        assert!(matches!(
            pseudopalindromic_prefixes(&bi("01", "RR"), 2, 100),
            Err(GenerateError::ClassMismatch(_))
        ));
        let chain =
            pseudopalindromic_prefixes(&bi("0011001", "RRERERE"), 6, DEFAULT_MAX_LEN).unwrap();
        assert_eq!(chain.word(4).unwrap().to_string(), "0011100");
        assert_eq!(chain.word(6).unwrap().to_string(), "001110001100011100");
        let chain =
            pseudopalindromic_prefixes(&bi("001100001", "RRERERRRE"), 5, DEFAULT_MAX_LEN).unwrap();
        assert_eq!(chain.word(5).unwrap().to_string(), "0011100011");
    }

    #[test]
    fn family_admission() {
        let fib = bi("(01)", "(R)");
        assert_eq!(Family::of_prefix(&fib, 4), Some(Family::Sturmian));
        assert_eq!(
            Family::of_prefix(&bi("01001", "EEEEE"), 5),
            Some(Family::Pseudostandard)
        );
        assert_eq!(
            Family::of_prefix(&bi("0011001", "RRERERE"), 7),
            Some(Family::Rote)
        );
        assert_eq!(
            Family::of_prefix(&bi("0(1)", "(RE)"), 3),
            Some(Family::Rote)
        );
        assert_eq!(Family::of_prefix(&bi("0(1)", "(RE)"), 4), None);
    }
}
