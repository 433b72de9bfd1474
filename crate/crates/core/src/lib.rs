//! Pseudopalindromic prefixes of binary generalized pseudostandard sequences
//! and their string attractors.
//!
//! - [`words`]: binary words, reversal/exchange, closures, S-derivative.
//! - [`directive`]: directive bi-sequences, prefix chains, classification.
//! - [`attractor`]: verification, exact minimum search, closed-form attractors.
//! - [`explorer`]: exhaustive scans of minimum attractor sizes.
//! - [`cli`]: the `attractors` command-line tool.

pub mod attractor;
pub mod cli;
pub mod directive;
pub mod explorer;
pub mod words;
