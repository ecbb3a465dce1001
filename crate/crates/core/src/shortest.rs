//! Shortest accepted words.

use std::collections::VecDeque;

use crate::automaton::{Dfa, Word};
use crate::error::Result;
use crate::product::product;

/// Length of the shortest accepted word together with the lexicographically
/// least accepted word of that length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LssResult {
    pub length: u64,
    pub witness: Word,
}

const UNSEEN: usize = usize::MAX;

/// Breadth-first search for the shortest accepted word, or `None` when the
/// language is empty.
///
/// States are discovered layer by layer with symbols taken in alphabet order
/// and each state keeps its first discoverer as predecessor. Within a layer
/// the queue is then ordered by the least word reaching each state, so the
/// first accepting state popped yields the least shortest witness.
pub fn shortest_accepted(dfa: &Dfa) -> Option<LssResult> {
    let n = dfa.state_count();
    let k = dfa.alphabet().len();
    // (predecessor, symbol) per state; the initial state points at itself.
    let mut parent = vec![(UNSEEN, 0usize); n];
    let mut depth = vec![0u64; n];
    let mut queue = VecDeque::with_capacity(n);
    parent[dfa.initial()] = (dfa.initial(), 0);
    queue.push_back(dfa.initial());

    while let Some(q) = queue.pop_front() {
        if dfa.is_accepting(q) {
            return Some(LssResult {
                length: depth[q],
                witness: trace_back(dfa, &parent, q),
            });
        }
        for symbol in 0..k {
            let t = dfa.step(q, symbol);
            if parent[t].0 == UNSEEN {
                parent[t] = (q, symbol);
                depth[t] = depth[q] + 1;
                queue.push_back(t);
            }
        }
    }
    None
}

fn trace_back(dfa: &Dfa, parent: &[(usize, usize)], mut q: usize) -> Word {
    let mut symbols = Vec::new();
    while q != dfa.initial() {
        let (p, s) = parent[q];
        symbols.push(s);
        q = p;
    }
    symbols.reverse();
    Word::new(symbols)
}

/// [`shortest_accepted`] on the product of `components`.
pub fn intersection_lss<D: AsRef<Dfa>>(components: &[D]) -> Result<Option<LssResult>> {
    let (p, _) = product(components)?;
    Ok(shortest_accepted(&p))
}
