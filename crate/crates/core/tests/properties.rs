use attractors::attractor::{
    minimal_size, mirror, pseudostandard_attractor, rote_attractor, sturmian_attractor,
    theorem_attractor, verify, Attractor, SizeClass,
};
use attractors::directive::{
    classify, generate, is_aperiodic, rote_prefix_valid, DirectiveBiSequence, Family, Periodicity,
    PrefixChain, SequenceClass,
};
use attractors::words::{
    is_palindrome, is_pseudopalindrome, palindromic_closure, s_derivative, BinaryWord, ClosureKind,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use ClosureKind::{Antipalindromic as E, Palindromic as R};

const PAIRS: [(u8, ClosureKind); 4] = [(0, R), (0, E), (1, R), (1, E)];

fn all_prefixes(steps: usize) -> impl Iterator<Item = DirectiveBiSequence> {
    (0..4usize.pow(steps as u32)).map(move |code| {
        let (delta, theta) = (0..steps).map(|i| PAIRS[(code >> (2 * i)) & 3]).unzip();
        DirectiveBiSequence::finite(delta, theta)
    })
}

fn chain(delta: &str, theta: &str, steps: usize) -> PrefixChain {
    generate(
        &DirectiveBiSequence::parse(delta, theta).unwrap(),
        steps,
        1 << 22,
    )
    .unwrap()
}

fn naive_verify(word: &[u8], positions: &[usize]) -> bool {
    let n = word.len();
    (0..n).all(|i| {
        (i + 1..=n).all(|j| {
            let f = &word[i..j];
            (0..=n - f.len())
                .filter(|&k| &word[k..k + f.len()] == f)
                .any(|k| positions.iter().any(|&p| k <= p && p < k + f.len()))
        })
    })
}

#[test]
fn every_chain_word_is_a_pseudopalindrome_and_prefix_of_the_next() {
    for bi in all_prefixes(6) {
        let c = generate(&bi, 6, 1 << 20).unwrap();
        for n in 1..=6 {
            let step = c.step(n).unwrap();
            assert!(is_pseudopalindrome(&step.word, step.theta), "{bi} w_{n}");
            assert!(step.word.starts_with(c.word(n - 1).unwrap()));
            assert_eq!(step.length, step.word.len());
        }
    }
}

#[test]
fn sturmian_decomposition() {
    // w_n is a concatenation w_{m} a w_{m'} with m, m' the last occurrences
    // of the two letters; equivalently |w_n| = r_0 + r_1 + 2.
    for bi in all_prefixes(8).filter(|bi| Family::Sturmian.admits(bi, 8)) {
        let c = generate(&bi, 8, 1 << 20).unwrap();
        for n in 1..=8 {
            let word = c.word(n).unwrap();
            let gamma = sturmian_attractor(&c, n).unwrap();
            if word.distinct_letters() == 2 {
                let (r0, r1) = (gamma.positions()[0], gamma.positions()[1]);
                assert_eq!(r0 + r1 + 2, word.len(), "{bi} w_{n}");
            } else {
                assert_eq!(gamma.positions(), &[word.len() - 1]);
            }
        }
    }
}

#[test]
fn rote_sturmian_bridge_reconstructs_by_palindromic_closure() {
    for bi in all_prefixes(7).filter(|bi| rote_prefix_valid(bi, 7)) {
        let c = generate(&bi, 7, 1 << 20).unwrap();
        let derived: Vec<BinaryWord> = (1..=7)
            .map(|n| s_derivative(c.word(n).unwrap()).unwrap())
            .collect();
        for (i, u) in derived.iter().enumerate() {
            assert!(is_palindrome(u), "{bi} S(w_{})", i + 1);
            if let Some(next) = derived.get(i + 1) {
                assert!(next.starts_with(u));
                // Either unchanged or one palindromic closure step further.
                let closed = [0u8, 1].map(|a| {
                    let mut v = u.clone();
                    v.push(a).unwrap();
                    palindromic_closure(&v)
                });
                assert!(
                    next == u || closed.contains(next),
                    "{bi}: S(w_{}) = {next}",
                    i + 2
                );
            }
        }
    }
}

#[test]
fn rote_attractor_cases() {
    // The pair is {last prefix length, |w_{m-1}|} with m = n for E-steps and
    // m = start of the trailing R-run otherwise.
    for bi in all_prefixes(8).filter(|bi| Family::Rote.admits(bi, 8)) {
        let c = generate(&bi, 8, 1 << 20).unwrap();
        for n in 1..=8 {
            let word = c.word(n).unwrap();
            let gamma = rote_attractor(&c, n).unwrap();
            if word.distinct_letters() == 1 {
                assert_eq!(gamma.positions(), &[0]);
                continue;
            }
            assert_eq!(gamma.len(), 2, "{bi} w_{n}");
            let mut m = n;
            while c.step(m).unwrap().theta == R && m > 1 && c.step(m - 1).unwrap().theta == R {
                m -= 1;
            }
            assert!(
                gamma.contains(c.word(m - 1).unwrap().len()),
                "{bi} w_{n}: {gamma}"
            );
            // A run of R steps keeps the same pair.
            if m < n {
                assert_eq!(
                    rote_attractor(&c, m).unwrap(),
                    Attractor::new(gamma.positions().to_vec(), c.word(m).unwrap().len()).unwrap()
                );
            }
        }
    }
}

#[test]
fn aperiodicity_matches_generated_words() {
    // Eventually periodic directives give words with a short period on the
    // latest prefix; aperiodic ones do not.
    let cases = [
        ("(01)", "(R)", Periodicity::Aperiodic),
        ("0(1)", "(RE)", Periodicity::Aperiodic),
        ("(0)", "(R)", Periodicity::EventuallyPeriodic),
        ("(0)", "(E)", Periodicity::EventuallyPeriodic),
        ("(01)", "(E)", Periodicity::Aperiodic),
        ("(10)", "(RE)", Periodicity::EventuallyPeriodic),
        ("0(0110)", "R(RE)", Periodicity::Aperiodic),
    ];
    for (d, t, expected) in cases {
        let bi = DirectiveBiSequence::parse(d, t).unwrap();
        assert_eq!(is_aperiodic(&bi), expected, "{d} {t}");
        let c = generate(&bi, 14, 1 << 22).unwrap();
        let word = c.last_word().letters();
        let smallest_period = (1..=word.len())
            .find(|&p| (p..word.len()).all(|i| word[i] == word[i - p]))
            .unwrap();
        match expected {
            Periodicity::EventuallyPeriodic => {
                assert!(smallest_period <= 8, "{d} {t}: period {smallest_period}")
            }
            _ => assert!(smallest_period > 16, "{d} {t}: period {smallest_period}"),
        }
    }
}

#[test]
fn constructors_are_valid_for_all_family_prefixes() {
    for bi in all_prefixes(8) {
        let Some(c) = generate(&bi, 8, 3000).ok() else {
            continue;
        };
        for n in 1..=8 {
            for family in [Family::Sturmian, Family::Pseudostandard, Family::Rote] {
                if !family.admits(&bi, n) {
                    continue;
                }
                let gamma = theorem_attractor(family, &c, n).unwrap();
                let word = c.word(n).unwrap();
                let report = verify(word, &gamma).unwrap();
                assert!(
                    report.valid,
                    "{family:?} {bi} w_{n}: {gamma} witness {:?}",
                    report.witness
                );
                assert!(
                    verify(word, &mirror(&gamma)).unwrap().valid,
                    "{family:?} {bi} w_{n} mirror"
                );
            }
        }
    }
}

#[test]
fn constructed_sizes_against_exact_minimum() {
    for bi in all_prefixes(6) {
        let c = generate(&bi, 6, 1 << 20).unwrap();
        for n in 1..=6 {
            let word = c.word(n).unwrap();
            if word.len() > 60 {
                continue;
            }
            let m = minimal_size(word).unwrap();
            assert!(m >= word.distinct_letters());
            if Family::Sturmian.admits(&bi, n) {
                assert_eq!(sturmian_attractor(&c, n).unwrap().len(), m, "{bi} w_{n}");
            }
            if Family::Rote.admits(&bi, n) {
                assert_eq!(rote_attractor(&c, n).unwrap().len(), m, "{bi} w_{n}");
                assert_eq!(m, word.distinct_letters(), "{bi} w_{n}");
            }
            if Family::Pseudostandard.admits(&bi, n) {
                let v = pseudostandard_attractor(&c, n).unwrap();
                match v.size_class {
                    SizeClass::Two | SizeClass::Three => assert_eq!(v.gamma.len(), m, "{bi} w_{n}"),
                    SizeClass::NotMinimalException => {
                        assert_eq!(m, 2, "{bi} w_{n}");
                        assert!(verify(word, v.smaller.as_ref().unwrap()).unwrap().valid);
                    }
                }
                assert_eq!(v.is_minimal, v.gamma.len() == m, "{bi} w_{n}");
            }
        }
    }
}

#[test]
fn classification_of_infinite_directives() {
    let has = |d: &str, t: &str, class| {
        classify(&DirectiveBiSequence::parse(d, t).unwrap()).contains(class)
    };
    assert!(has("(01)", "(R)", SequenceClass::StandardSturmian));
    assert!(has("01001(0)", "(E)", SequenceClass::Pseudostandard));
    assert!(has("0(0110)", "R(RE)", SequenceClass::CsRoteValid));
    assert!(has("0(1)", "(RE)", SequenceClass::Other));
    assert!(has("(0)", "(R)", SequenceClass::Other));
}

#[test]
fn verifier_agrees_with_definition_on_random_words() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..1000 {
        let len = rng.random_range(1..=200);
        let word =
            BinaryWord::from_letters((0..len).map(|_| rng.random_range(0..2u8)).collect()).unwrap();
        let k = rng.random_range(0..=6);
        let gamma =
            Attractor::new((0..k).map(|_| rng.random_range(0..len)).collect(), len).unwrap();
        let report = verify(&word, &gamma).unwrap();
        assert_eq!(
            report.valid,
            naive_verify(word.letters(), gamma.positions()),
            "{word} {gamma}"
        );
    }
}

#[test]
fn fibonacci_chain_words() {
    let c = chain("(01)", "(R)", 5);
    let words: Vec<String> = (1..=5).map(|n| c.word(n).unwrap().to_string()).collect();
    assert_eq!(
        words,
        ["0", "010", "010010", "01001010010", "0100101001001010010"]
    );
}
