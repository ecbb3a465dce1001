//! Complete DFAs over small alphabets, intersection products, shortest
//! accepted words, minimization, and exhaustive searches for automaton tuples
//! whose intersection has a long shortest word.
//!
//! The [`constructions`] module provides, for every `1 ≤ m ≤ n`, an `m`-state
//! and an `n`-state binary DFA whose intersection has shortest word length
//! exactly `m·n − 1`, the largest possible.

pub mod automaton;
pub mod constructions;
pub mod error;
pub mod minimize;
pub mod product;
pub mod search;
pub mod shortest;

pub use automaton::{Alphabet, Dfa, DfaDocument, Word};
pub use constructions::{
    count_profile_admits, cycle_gadget, cycle_witness, ones_modulo, tight_witness, unary_residue,
    CycleCounts,
};
pub use error::{Error, Result};
pub use minimize::{equivalent, is_minimal, minimize, state_complexity, CanonicalDfa};
pub use product::{product, ProductTag};
pub use search::{
    canonical_languages, enumerate_dfas, enumeration_size, tightness_search, Budget, SearchOptions,
    SearchReport, TupleWitness,
};
pub use shortest::{intersection_lss, shortest_accepted, LssResult};
