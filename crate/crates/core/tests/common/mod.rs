#![allow(dead_code)]

use lss_core::{Alphabet, Dfa, Word};
use rand::Rng;

/// Every word over `k` symbols of length at most `max_len`, in length-then-lexicographic order.
pub fn words_up_to(k: usize, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * k);
        for w in &layer {
            for s in 0..k {
                let mut v = w.clone();
                v.push(s);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

pub fn random_dfa<R: Rng>(rng: &mut R, states: usize, alphabet: &Alphabet) -> Dfa {
    let delta: Vec<Vec<usize>> = (0..states)
        .map(|_| {
            (0..alphabet.len())
                .map(|_| rng.gen_range(0..states))
                .collect()
        })
        .collect();
    let accepting: Vec<usize> = (0..states).filter(|_| rng.gen_bool(0.5)).collect();
    let initial = rng.gen_range(0..states);
    Dfa::new(alphabet.clone(), states, initial, &accepting, &delta).unwrap()
}

/// Acceptance of every word of length at most `max_len`, packed as bits in
/// the order of [`words_up_to`]. Runs the DFA layer by layer through
/// [`Dfa::step`] only.
pub fn acceptance_bits(dfa: &Dfa, max_len: usize) -> Vec<u64> {
    let k = dfa.alphabet().len();
    let mut layer = vec![dfa.initial()];
    let mut flags = vec![dfa.is_accepting(dfa.initial())];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|&q| (0..k).map(move |s| dfa.step(q, s)))
            .collect();
        flags.extend(layer.iter().map(|&q| dfa.is_accepting(q)));
    }
    let mut bits = vec![0u64; flags.len().div_ceil(64)];
    for (i, _) in flags.iter().enumerate().filter(|(_, &f)| f) {
        bits[i / 64] |= 1 << (i % 64);
    }
    bits
}

/// Index of the first word accepted by all of `sets`.
pub fn first_common(sets: &[&[u64]]) -> Option<usize> {
    let len = sets[0].len();
    (0..len).find_map(|block| {
        let v = sets.iter().fold(u64::MAX, |acc, s| acc & s[block]);
        (v != 0).then(|| block * 64 + v.trailing_zeros() as usize)
    })
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
