//! Minimization and canonical forms.

use std::collections::{HashMap, VecDeque};
use std::ops::Deref;

use crate::automaton::Dfa;
use crate::error::{Error, Result};

/// A minimal complete DFA with states numbered in breadth-first first-visit
/// order from the initial state (symbols in alphabet order).
///
/// Two values over the same alphabet are equal iff their languages are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalDfa(Dfa);

impl CanonicalDfa {
    pub fn into_inner(self) -> Dfa {
        self.0
    }
}

impl Deref for CanonicalDfa {
    type Target = Dfa;

    fn deref(&self) -> &Dfa {
        &self.0
    }
}

impl AsRef<Dfa> for CanonicalDfa {
    fn as_ref(&self) -> &Dfa {
        &self.0
    }
}

/// One Moore refinement round: states stay together iff they share a block
/// and their successors share blocks symbol by symbol. Returns the new block
/// of every state and the number of blocks. `states` lists the states taking
/// part; other entries of `block` are ignored.
pub(crate) fn refine(dfa: &Dfa, states: &[usize], block: &[usize]) -> (Vec<usize>, usize) {
    let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut next = vec![0; block.len()];
    for &q in states {
        let mut signature = Vec::with_capacity(dfa.alphabet().len() + 1);
        signature.push(block[q]);
        signature.extend(dfa.row(q).iter().map(|&t| block[t]));
        let fresh = ids.len();
        next[q] = *ids.entry(signature).or_insert(fresh);
    }
    (next, ids.len())
}

/// Refines the acceptance partition of `states` to its fixpoint.
fn stable_partition(dfa: &Dfa, states: &[usize]) -> (Vec<usize>, usize) {
    let mut block: Vec<usize> = (0..dfa.state_count())
        .map(|q| usize::from(dfa.is_accepting(q)))
        .collect();
    let mut count = usize::from(states.iter().any(|&q| dfa.is_accepting(q)))
        + usize::from(states.iter().any(|&q| !dfa.is_accepting(q)));
    loop {
        let (next, next_count) = refine(dfa, states, &block);
        block = next;
        if next_count == count {
            return (block, count);
        }
        count = next_count;
    }
}

/// Removes unreachable states, merges equivalent states and renumbers the
/// result canonically.
pub fn minimize(dfa: &Dfa) -> CanonicalDfa {
    let reachable = dfa.reachable_states();
    let (block, count) = stable_partition(dfa, &reachable);

    // Renumber blocks by BFS first visit from the initial block.
    let k = dfa.alphabet().len();
    let mut order = vec![usize::MAX; count];
    let mut representative = Vec::with_capacity(count);
    let mut queue = VecDeque::new();
    order[block[dfa.initial()]] = 0;
    representative.push(dfa.initial());
    queue.push_back(dfa.initial());
    let mut delta = Vec::with_capacity(count * k);
    while let Some(q) = queue.pop_front() {
        for &t in dfa.row(q) {
            let b = block[t];
            if order[b] == usize::MAX {
                order[b] = representative.len();
                representative.push(t);
                queue.push_back(t);
            }
            delta.push(order[b]);
        }
    }
    let accepting = representative
        .iter()
        .map(|&q| dfa.is_accepting(q))
        .collect();
    CanonicalDfa(Dfa::from_raw(dfa.alphabet().clone(), 0, accepting, delta))
}

/// The number of states of the minimal complete DFA for the language of `dfa`.
pub fn state_complexity(dfa: &Dfa) -> usize {
    minimize(dfa).state_count()
}

/// Whether `a` and `b` accept the same language.
pub fn equivalent(a: &Dfa, b: &Dfa) -> Result<bool> {
    if a.alphabet() != b.alphabet() {
        return Err(Error::AlphabetMismatch {
            left: a.alphabet().labels().to_vec(),
            right: b.alphabet().labels().to_vec(),
        });
    }
    Ok(minimize(a) == minimize(b))
}

/// True when every state is reachable and no two states are language
/// equivalent.
pub fn is_minimal(dfa: &Dfa) -> bool {
    let all: Vec<usize> = (0..dfa.state_count()).collect();
    dfa.reachable_states().len() == all.len() && stable_partition(dfa, &all).1 == all.len()
}
