//! Cross-product construction for intersections.

use std::collections::{HashMap, VecDeque};

use crate::automaton::Dfa;
use crate::error::{Error, Result};

/// Grids up to this many cells are indexed with a dense table instead of a map.
const DENSE_LIMIT: usize = 1 << 20;

/// For each product state, the tuple of component states it stands for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductTag {
    tuples: Vec<Vec<usize>>,
}

impl ProductTag {
    pub fn tuple(&self, state: usize) -> &[usize] {
        &self.tuples[state]
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &[usize]> {
        self.tuples.iter().map(Vec::as_slice)
    }

    /// Product state standing for `tuple`, if it was reached.
    pub fn state_of(&self, tuple: &[usize]) -> Option<usize> {
        self.tuples.iter().position(|t| t == tuple)
    }
}

enum Index {
    Dense {
        radix: Vec<usize>,
        slots: Vec<usize>,
    },
    Sparse(HashMap<Vec<usize>, usize>),
}

impl Index {
    const VACANT: usize = usize::MAX;

    fn new(sizes: &[usize]) -> Self {
        let cells = sizes
            .iter()
            .try_fold(1usize, |acc, &s| acc.checked_mul(s))
            .filter(|&c| c <= DENSE_LIMIT);
        match cells {
            Some(cells) => Index::Dense {
                radix: sizes.to_vec(),
                slots: vec![Self::VACANT; cells],
            },
            None => Index::Sparse(HashMap::new()),
        }
    }

    /// Returns the existing id of `tuple`, or registers it as `fresh`.
    fn get_or_insert(&mut self, tuple: &[usize], fresh: usize) -> (usize, bool) {
        match self {
            Index::Dense { radix, slots } => {
                let key = tuple
                    .iter()
                    .zip(radix.iter())
                    .fold(0, |acc, (&q, &r)| acc * r + q);
                if slots[key] == Self::VACANT {
                    slots[key] = fresh;
                    (fresh, true)
                } else {
                    (slots[key], false)
                }
            }
            Index::Sparse(map) => match map.get(tuple) {
                Some(&id) => (id, false),
                None => {
                    map.insert(tuple.to_vec(), fresh);
                    (fresh, true)
                }
            },
        }
    }
}

/// Builds the intersection automaton of `components` over their reachable
/// state tuples.
///
/// Product states are numbered in breadth-first discovery order from the
/// tuple of initial states, taking symbols in alphabet order. A state accepts
/// when every coordinate accepts in its component.
pub fn product<D: AsRef<Dfa>>(components: &[D]) -> Result<(Dfa, ProductTag)> {
    let components: Vec<&Dfa> = components.iter().map(AsRef::as_ref).collect();
    let first = components.first().ok_or(Error::NoComponents)?;
    let alphabet = first.alphabet();
    for c in &components[1..] {
        if c.alphabet() != alphabet {
            return Err(Error::AlphabetMismatch {
                left: alphabet.labels().to_vec(),
                right: c.alphabet().labels().to_vec(),
            });
        }
    }
    let k = alphabet.len();
    let sizes: Vec<usize> = components.iter().map(|c| c.state_count()).collect();
    let mut index = Index::new(&sizes);

    let start: Vec<usize> = components.iter().map(|c| c.initial()).collect();
    index.get_or_insert(&start, 0);
    let mut tuples = vec![start];
    let mut delta = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    let mut next = Vec::with_capacity(components.len());

    while let Some(id) = queue.pop_front() {
        for symbol in 0..k {
            next.clear();
            next.extend(
                components
                    .iter()
                    .zip(&tuples[id])
                    .map(|(c, &q)| c.step(q, symbol)),
            );
            let (target, fresh) = index.get_or_insert(&next, tuples.len());
            if fresh {
                tuples.push(next.clone());
                queue.push_back(target);
            }
            delta.push(target);
        }
    }
    // BFS pops states in id order, so `delta` is already row-major.
    let accepting = tuples
        .iter()
        .map(|t| components.iter().zip(t).all(|(c, &q)| c.is_accepting(q)))
        .collect();
    let dfa = Dfa::from_raw(alphabet.clone(), 0, accepting, delta);
    Ok((dfa, ProductTag { tuples }))
}
