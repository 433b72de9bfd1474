//! Exact minimum-size attractor search.
//!
//! Each distinct factor contributes one constraint: the union of its
//! occurrence intervals, which the attractor must hit. A factor with a unique
//! occurrence gives a plain interval. Constraints that contain another
//! constraint are dropped, then candidate sets are enumerated in
//! lexicographic order by cardinality.

use super::factors::FactorIndex;
use super::{Attractor, AttractorError};
use crate::words::BinaryWord;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Constraint {
    /// Largest position in the set; the search uses it to bound the next pick.
    last: usize,
    bits: Vec<u64>,
}

impl Constraint {
    fn hits(&self, p: usize) -> bool {
        (self.bits[p / 64] >> (p % 64)) & 1 == 1
    }

    fn is_subset_of(&self, other: &Constraint) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }
}

fn constraints(w: &BinaryWord) -> Vec<Constraint> {
    let n = w.len();
    let blocks = n.div_ceil(64);
    let index = FactorIndex::new(w.letters());
    let mut all = Vec::new();
    for len in 1..=n {
        index.for_each_factor(len, |occurrences| {
            let mut bits = vec![0u64; blocks];
            let mut last = 0;
            for &start in occurrences {
                for p in start..start + len {
                    bits[p / 64] |= 1 << (p % 64);
                }
                last = last.max(start + len - 1);
            }
            all.push(Constraint { last, bits });
            true
        });
    }
    all.sort();
    all.dedup();
    // Keep inclusion-minimal sets; sorting by popcount lets each set be
    // compared only against those kept so far.
    all.sort_by_key(|c| c.bits.iter().map(|b| b.count_ones()).sum::<u32>());
    let mut kept: Vec<Constraint> = Vec::new();
    for c in all {
        if !kept.iter().any(|k| k.is_subset_of(&c)) {
            kept.push(c);
        }
    }
    kept.sort_by_key(|c| c.last);
    kept
}

struct Search<'a> {
    n: usize,
    constraints: &'a [Constraint],
    target: usize,
    chosen: Vec<usize>,
}

impl Search<'_> {
    /// Extends `chosen` with `remaining` increasing positions `>= from`
    /// hitting every constraint in `open`; first success in lexicographic
    /// order wins.
    fn extend(&mut self, from: usize, remaining: usize, open: &[usize]) -> bool {
        if open.is_empty() {
            // Only reachable with remaining == 0 when the cardinality is
            // minimal; pad otherwise so the set still has the requested size.
            self.chosen.extend(from..from + remaining);
            return self.chosen.len() == self.target && from + remaining <= self.n;
        }
        if remaining == 0 {
            return false;
        }
        // `open` is ordered by `last`, so the first entry bounds the next pick.
        let bound = self.constraints[open[0]].last.min(self.n - remaining);
        let mut p = from;
        while p <= bound {
            if remaining == 1 && !open.iter().all(|&c| self.constraints[c].hits(p)) {
                p += 1;
                continue;
            }
            let rest: Vec<usize> = open
                .iter()
                .copied()
                .filter(|&c| !self.constraints[c].hits(p))
                .collect();
            self.chosen.push(p);
            if self.extend(p + 1, remaining - 1, &rest) {
                return true;
            }
            self.chosen.pop();
            p += 1;
        }
        false
    }
}

/// The lexicographically smallest attractor of `w` with exactly `size`
/// positions, if one exists.
pub fn attractor_of_size(w: &BinaryWord, size: usize) -> Result<Option<Attractor>, AttractorError> {
    if w.is_empty() {
        return Err(AttractorError::EmptyWord);
    }
    let constraints = constraints(w);
    Ok(search_with(w.len(), &constraints, size))
}

fn search_with(n: usize, constraints: &[Constraint], size: usize) -> Option<Attractor> {
    if size > n {
        return None;
    }
    let mut search = Search {
        n,
        constraints,
        target: size,
        chosen: Vec::with_capacity(size),
    };
    let open: Vec<usize> = (0..constraints.len()).collect();
    if search.extend(0, size, &open) {
        Some(Attractor {
            positions: search.chosen,
            word_length: n,
        })
    } else {
        None
    }
}

/// A minimum-cardinality attractor; ties broken by the lexicographically
/// smallest position list.
pub fn minimal_attractor(w: &BinaryWord) -> Result<Attractor, AttractorError> {
    if w.is_empty() {
        return Err(AttractorError::EmptyWord);
    }
    let constraints = constraints(w);
    // Every letter must be covered, so at least one position per letter.
    (w.distinct_letters()..=w.len())
        .find_map(|k| search_with(w.len(), &constraints, k))
        .ok_or(AttractorError::EmptyWord)
}

pub fn minimal_size(w: &BinaryWord) -> Result<usize, AttractorError> {
    minimal_attractor(w).map(|a| a.len())
}
