//! Exhaustive search over tuples of small automata for the largest shortest
//! word in an intersection.
//!
//! The search runs over languages rather than raw automata: the shortest word
//! of an intersection depends only on the component languages, and every
//! language of state complexity at most `s` is accepted by some complete
//! `s`-state DFA (pad with unreachable states), so enumerating canonical
//! minimal DFAs of every `s`-state DFA covers the same tuples exactly.

use std::collections::{HashMap, HashSet};
use std::thread;

use crate::automaton::{Alphabet, Dfa, Word};
use crate::error::{Error, Result};
use crate::minimize::{minimize, CanonicalDfa};
use crate::shortest::intersection_lss;

/// Every complete DFA with a given number of states over an alphabet, with
/// initial state 0: all transition tables, each with every accepting subset.
#[derive(Debug, Clone)]
pub struct DfaEnumerator {
    alphabet: Alphabet,
    states: usize,
    table: Vec<usize>,
    accepting_mask: u64,
    done: bool,
}

/// All DFAs with `states` states over `alphabet`; yields
/// `states^(states·|alphabet|) · 2^states` automata.
pub fn enumerate_dfas(states: usize, alphabet: &Alphabet) -> DfaEnumerator {
    assert!(states >= 1, "at least one state is required");
    assert!(
        states < 64,
        "accepting subsets are enumerated through a u64 mask"
    );
    DfaEnumerator {
        alphabet: alphabet.clone(),
        states,
        table: vec![0; states * alphabet.len()],
        accepting_mask: 0,
        done: false,
    }
}

/// `states^(states·|alphabet|) · 2^states`, or `None` on overflow.
pub fn enumeration_size(states: usize, alphabet: &Alphabet) -> Option<u64> {
    let exponent = u32::try_from(states.checked_mul(alphabet.len())?).ok()?;
    let tables = u64::try_from(states).ok()?.checked_pow(exponent)?;
    let subsets = 1u64.checked_shl(u32::try_from(states).ok()?)?;
    tables.checked_mul(subsets)
}

impl Iterator for DfaEnumerator {
    type Item = Dfa;

    fn next(&mut self) -> Option<Dfa> {
        if self.done {
            return None;
        }
        let accepting = (0..self.states)
            .map(|q| self.accepting_mask >> q & 1 == 1)
            .collect();
        let dfa = Dfa::from_raw(self.alphabet.clone(), 0, accepting, self.table.clone());

        self.accepting_mask += 1;
        if self.accepting_mask == 1 << self.states {
            self.accepting_mask = 0;
            // Odometer over the table, last entry fastest.
            let mut carry = true;
            for entry in self.table.iter_mut().rev() {
                *entry += 1;
                if *entry < self.states {
                    carry = false;
                    break;
                }
                *entry = 0;
            }
            self.done = carry;
        }
        Some(dfa)
    }
}

/// One canonical minimal DFA per language of state complexity at most
/// `states`, sorted by serialized canonical form.
pub fn canonical_languages(states: usize, alphabet: &Alphabet) -> Vec<CanonicalDfa> {
    let unique: HashSet<CanonicalDfa> = enumerate_dfas(states, alphabet)
        .map(|d| minimize(&d))
        .collect();
    let mut keyed: Vec<(String, CanonicalDfa)> =
        unique.into_iter().map(|c| (c.to_json(), c)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.into_iter().map(|(_, c)| c).collect()
}

/// Guard rails for [`tightness_search`]. Exceeding any of them is an error,
/// never a truncated search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Upper bound on the product of the sizes.
    pub max_product_states: u64,
    /// Upper bound on the number of language tuples to examine.
    pub max_tuples: u64,
    /// Upper bound on raw DFAs enumerated to build the language lists.
    pub max_enumerated: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_product_states: 64,
            max_tuples: 100_000_000,
            max_enumerated: 10_000_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub workers: usize,
    pub budget: Budget,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            workers: 1,
            budget: Budget::default(),
        }
    }
}

/// The tuple attaining the maximum, with its least shortest common word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TupleWitness {
    pub components: Vec<CanonicalDfa>,
    pub word: Word,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub sizes: Vec<usize>,
    pub alphabet: Alphabet,
    /// `∏ sizes − 1`.
    pub target: u64,
    /// Largest shortest-word length over tuples with a nonempty intersection.
    pub max_lss: Option<u64>,
    pub witness: Option<TupleWitness>,
    pub attained: bool,
    /// Tuples whose intersection was computed.
    pub tuples_examined: u64,
    /// Tuples skipped because some component language is empty.
    pub tuples_skipped: u64,
    /// Distinct languages per size, including the empty language.
    pub languages_per_size: Vec<usize>,
    /// Tuples whose shortest word exceeded `target`. Always zero unless the
    /// product or search code is broken.
    pub bound_violations: u64,
}

#[derive(Default)]
struct Partial {
    best: Option<(u64, Vec<usize>, Word)>,
    examined: u64,
    violations: u64,
}

impl Partial {
    /// Keeps the larger length; on a tie the lexicographically smaller index tuple.
    fn offer(&mut self, lss: u64, indices: &[usize], word: Word) {
        let better = match &self.best {
            None => true,
            Some((best, at, _)) => lss > *best || (lss == *best && indices < at.as_slice()),
        };
        if better {
            self.best = Some((lss, indices.to_vec(), word));
        }
    }

    fn merge(mut self, other: Partial) -> Partial {
        self.examined += other.examined;
        self.violations += other.violations;
        if let Some((lss, at, word)) = other.best {
            self.offer(lss, &at, word);
        }
        self
    }
}

/// Searches every tuple of languages with state complexities at most `sizes`
/// for the largest shortest word of the intersection.
///
/// The first component's language list is split round-robin across
/// `options.workers` threads; the merge is independent of the split.
pub fn tightness_search(
    sizes: &[usize],
    alphabet: &Alphabet,
    options: SearchOptions,
) -> Result<SearchReport> {
    if sizes.is_empty() {
        return Err(Error::InvalidParameters("sizes must be nonempty".into()));
    }
    if sizes.contains(&0) {
        return Err(Error::InvalidParameters("sizes must be positive".into()));
    }
    let budget = options.budget;
    let product_states = sizes
        .iter()
        .try_fold(1u64, |acc, &s| acc.checked_mul(s as u64))
        .filter(|&p| p <= budget.max_product_states)
        .ok_or_else(|| {
            Error::BudgetExceeded(format!(
                "product of sizes {sizes:?} exceeds {} states",
                budget.max_product_states
            ))
        })?;
    let target = product_states - 1;

    let mut distinct: Vec<usize> = sizes.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let mut enumerated = 0u64;
    for &s in &distinct {
        enumerated = enumeration_size(s, alphabet)
            .and_then(|c| enumerated.checked_add(c))
            .filter(|&e| e <= budget.max_enumerated)
            .ok_or_else(|| {
                Error::BudgetExceeded(format!(
                    "enumerating {s}-state automata exceeds {} DFAs",
                    budget.max_enumerated
                ))
            })?;
    }

    let mut by_size: HashMap<usize, Vec<CanonicalDfa>> = HashMap::new();
    for &s in &distinct {
        by_size.insert(s, canonical_languages(s, alphabet));
    }
    let languages_per_size: Vec<usize> = sizes.iter().map(|s| by_size[s].len()).collect();
    let lists: Vec<Vec<&CanonicalDfa>> = sizes
        .iter()
        .map(|s| {
            by_size[s]
                .iter()
                .filter(|c| !c.is_empty_language())
                .collect()
        })
        .collect();

    let all_tuples = languages_per_size
        .iter()
        .try_fold(1u64, |acc, &c| acc.checked_mul(c as u64));
    let examined_tuples = lists
        .iter()
        .try_fold(1u64, |acc, l| acc.checked_mul(l.len() as u64));
    let (all_tuples, examined_tuples) = match (all_tuples, examined_tuples) {
        (Some(a), Some(e)) if e <= budget.max_tuples => (a, e),
        _ => {
            return Err(Error::BudgetExceeded(format!(
                "more than {} language tuples",
                budget.max_tuples
            )))
        }
    };

    let workers = options.workers.max(1);
    let merged = thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let lists = &lists;
                scope.spawn(move || search_slice(lists, w, workers, target))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("search worker panicked"))
            .fold(Partial::default(), Partial::merge)
    });
    debug_assert_eq!(merged.examined, examined_tuples);

    let (max_lss, witness) = match merged.best {
        Some((lss, indices, word)) => {
            let components = indices
                .iter()
                .zip(&lists)
                .map(|(&i, list)| list[i].clone())
                .collect();
            (Some(lss), Some(TupleWitness { components, word }))
        }
        None => (None, None),
    };
    Ok(SearchReport {
        sizes: sizes.to_vec(),
        alphabet: alphabet.clone(),
        target,
        attained: max_lss == Some(target),
        max_lss,
        witness,
        tuples_examined: merged.examined,
        tuples_skipped: all_tuples - examined_tuples,
        languages_per_size,
        bound_violations: merged.violations,
    })
}

fn search_slice(
    lists: &[Vec<&CanonicalDfa>],
    worker: usize,
    workers: usize,
    target: u64,
) -> Partial {
    let mut partial = Partial::default();
    let mut indices = vec![0; lists.len()];
    let mut components: Vec<&CanonicalDfa> = Vec::with_capacity(lists.len());
    if lists.iter().any(|l| l.is_empty()) {
        return partial;
    }
    let mut first = worker;
    while first < lists[0].len() {
        indices.iter_mut().for_each(|i| *i = 0);
        indices[0] = first;
        loop {
            components.clear();
            components.extend(indices.iter().zip(lists).map(|(&i, l)| l[i]));
            let result = intersection_lss(&components).expect("components share an alphabet");
            partial.examined += 1;
            if let Some(r) = result {
                if r.length > target {
                    partial.violations += 1;
                }
                partial.offer(r.length, &indices, r.witness);
            }
            if !advance(&mut indices[1..], &lists[1..]) {
                break;
            }
        }
        first += workers;
    }
    partial
}

/// Odometer step over `indices`; false once every combination was visited.
fn advance(indices: &mut [usize], lists: &[Vec<&CanonicalDfa>]) -> bool {
    for (i, list) in indices.iter_mut().zip(lists).rev() {
        *i += 1;
        if *i < list.len() {
            return true;
        }
        *i = 0;
    }
    false
}
