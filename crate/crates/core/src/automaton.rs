//! Complete deterministic finite automata.
//!
//! States are dense indices `0..state_count`, symbols are indices into an
//! [`Alphabet`], and the transition function is a dense row-major table, so
//! every [`Dfa`] value is complete by construction.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An ordered set of symbol labels. The position of a label is its symbol index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alphabet {
    symbols: Arc<[String]>,
}

impl Alphabet {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = labels.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        let mut seen = HashSet::new();
        for s in &symbols {
            if !seen.insert(s.as_str()) {
                return Err(Error::DuplicateSymbol(s.clone()));
            }
        }
        Ok(Alphabet {
            symbols: symbols.into(),
        })
    }

    /// The alphabet `{0, 1}`.
    pub fn binary() -> Self {
        Alphabet::new(["0", "1"]).expect("static alphabet")
    }

    /// A one-letter alphabet `{a}`.
    pub fn unary() -> Self {
        Alphabet::new(["a"]).expect("static alphabet")
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.symbols
    }

    pub fn label(&self, index: usize) -> Option<&str> {
        self.symbols.get(index).map(String::as_str)
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.symbols.iter().position(|s| s == label)
    }

    fn single_chars(&self) -> bool {
        self.symbols.iter().all(|s| s.chars().count() == 1)
    }
}

/// A finite word, stored as symbol indices.
///
/// Words order lexicographically by symbol index, which is the alphabet's
/// label order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(symbols: Vec<usize>) -> Self {
        Word(symbols)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Parses a word written with the alphabet's labels.
    ///
    /// When every label is a single character the text is read character by
    /// character (`"10010"`); otherwise labels are separated by whitespace or
    /// commas. Whitespace is ignored in the single-character form.
    pub fn parse(alphabet: &Alphabet, text: &str) -> Result<Self> {
        let lookup = |label: &str| {
            alphabet
                .index_of(label)
                .ok_or_else(|| Error::UnknownSymbol(label.to_owned()))
        };
        let symbols = if alphabet.single_chars() {
            text.chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| lookup(c.encode_utf8(&mut [0; 4])))
                .collect::<Result<Vec<_>>>()?
        } else {
            text.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(lookup)
                .collect::<Result<Vec<_>>>()?
        };
        Ok(Word(symbols))
    }

    /// Checks that every symbol index belongs to `alphabet`.
    pub fn check(&self, alphabet: &Alphabet) -> Result<()> {
        match self.0.iter().find(|&&s| s >= alphabet.len()) {
            Some(&index) => Err(Error::SymbolOutOfRange {
                index,
                size: alphabet.len(),
            }),
            None => Ok(()),
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[usize] {
        &self.0
    }

    /// Number of occurrences of `symbol`.
    pub fn count(&self, symbol: usize) -> usize {
        self.0.iter().filter(|&&s| s == symbol).count()
    }

    pub fn push(&mut self, symbol: usize) {
        self.0.push(symbol);
    }

    /// Appends `symbol` repeated `times` times.
    pub fn push_run(&mut self, symbol: usize, times: usize) {
        self.0.extend(std::iter::repeat_n(symbol, times));
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut symbols = self.0.clone();
        symbols.extend_from_slice(&other.0);
        Word(symbols)
    }

    /// Renders the word with the alphabet's labels. The empty word renders
    /// as the empty string.
    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> DisplayWord<'a> {
        DisplayWord {
            word: self,
            alphabet,
        }
    }
}

impl From<Vec<usize>> for Word {
    fn from(symbols: Vec<usize>) -> Self {
        Word(symbols)
    }
}

pub struct DisplayWord<'a> {
    word: &'a Word,
    alphabet: &'a Alphabet,
}

impl fmt::Display for DisplayWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.alphabet.single_chars() {
            ""
        } else {
            " "
        };
        for (k, &s) in self.word.0.iter().enumerate() {
            if k > 0 {
                f.write_str(sep)?;
            }
            match self.alphabet.label(s) {
                Some(label) => f.write_str(label)?,
                None => write!(f, "<{s}>")?,
            }
        }
        Ok(())
    }
}

/// A complete deterministic finite automaton.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dfa {
    alphabet: Alphabet,
    state_count: usize,
    initial: usize,
    accepting: Vec<bool>,
    delta: Vec<usize>,
}

impl Dfa {
    /// Builds a DFA from a `state_count × |alphabet|` transition table, checking
    /// every invariant first. The first violated invariant is reported.
    pub fn new(
        alphabet: Alphabet,
        state_count: usize,
        initial: usize,
        accepting: &[usize],
        delta: &[Vec<usize>],
    ) -> Result<Self> {
        validate(&alphabet, state_count, initial, accepting, delta)?;
        let mut flags = vec![false; state_count];
        for &q in accepting {
            flags[q] = true;
        }
        Ok(Dfa {
            alphabet,
            state_count,
            initial,
            accepting: flags,
            delta: delta.concat(),
        })
    }

    /// Builds a DFA from parts already in internal layout. The caller
    /// guarantees the invariants; they are checked in debug builds.
    pub(crate) fn from_raw(
        alphabet: Alphabet,
        initial: usize,
        accepting: Vec<bool>,
        delta: Vec<usize>,
    ) -> Self {
        let state_count = accepting.len();
        debug_assert!(state_count > 0 && initial < state_count);
        debug_assert_eq!(delta.len(), state_count * alphabet.len());
        debug_assert!(delta.iter().all(|&t| t < state_count));
        Dfa {
            alphabet,
            state_count,
            initial,
            accepting,
            delta,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn is_accepting(&self, state: usize) -> bool {
        self.accepting[state]
    }

    /// Accepting states in increasing order.
    pub fn accepting_states(&self) -> impl Iterator<Item = usize> + '_ {
        self.accepting
            .iter()
            .enumerate()
            .filter_map(|(q, &a)| a.then_some(q))
    }

    /// Single transition. Panics if `state` or `symbol` is out of range.
    #[inline]
    pub fn step(&self, state: usize, symbol: usize) -> usize {
        assert!(symbol < self.alphabet.len(), "symbol out of range");
        self.delta[state * self.alphabet.len() + symbol]
    }

    /// The transition row of `state`, one target per symbol.
    pub fn row(&self, state: usize) -> &[usize] {
        let k = self.alphabet.len();
        &self.delta[state * k..(state + 1) * k]
    }

    /// The transition table as nested rows.
    pub fn table(&self) -> Vec<Vec<usize>> {
        (0..self.state_count)
            .map(|q| self.row(q).to_vec())
            .collect()
    }

    /// Re-checks the invariants. Always `Ok` for values built through the
    /// public constructors.
    pub fn validate(&self) -> Result<()> {
        let accepting: Vec<usize> = self.accepting_states().collect();
        validate(
            &self.alphabet,
            self.state_count,
            self.initial,
            &accepting,
            &self.table(),
        )
    }

    /// Runs `word` from `start`.
    pub fn run_from(&self, start: usize, word: &Word) -> Result<usize> {
        word.check(&self.alphabet)?;
        Ok(word
            .symbols()
            .iter()
            .fold(start, |q, &s| self.delta[q * self.alphabet.len() + s]))
    }

    /// The state reached from the initial state after reading `word`.
    pub fn run(&self, word: &Word) -> Result<usize> {
        self.run_from(self.initial, word)
    }

    pub fn accepts(&self, word: &Word) -> Result<bool> {
        Ok(self.accepting[self.run(word)?])
    }

    /// States reachable from the initial state, as a membership vector.
    pub fn reachable_mask(&self) -> Vec<bool> {
        let mut seen = vec![false; self.state_count];
        let mut stack = vec![self.initial];
        seen[self.initial] = true;
        while let Some(q) = stack.pop() {
            for &t in self.row(q) {
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
        seen
    }

    /// States reachable from the initial state, in increasing order.
    pub fn reachable_states(&self) -> Vec<usize> {
        self.reachable_mask()
            .into_iter()
            .enumerate()
            .filter_map(|(q, r)| r.then_some(q))
            .collect()
    }

    pub fn is_empty_language(&self) -> bool {
        self.reachable_mask()
            .iter()
            .zip(&self.accepting)
            .all(|(&r, &a)| !(r && a))
    }

    pub fn to_document(&self) -> DfaDocument {
        DfaDocument {
            states: self.state_count,
            alphabet: self.alphabet.labels().to_vec(),
            initial: self.initial,
            accepting: self.accepting_states().collect(),
            delta: self.table(),
        }
    }

    /// Parses the JSON interchange document.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: DfaDocument =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Dfa::try_from(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_document()).expect("DFA documents always serialize")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("DFA documents always serialize")
    }
}

fn validate(
    alphabet: &Alphabet,
    state_count: usize,
    initial: usize,
    accepting: &[usize],
    delta: &[Vec<usize>],
) -> Result<()> {
    if state_count == 0 {
        return Err(Error::NoStates);
    }
    if initial >= state_count {
        return Err(Error::InitialOutOfRange {
            initial,
            states: state_count,
        });
    }
    if let Some(&state) = accepting.iter().find(|&&q| q >= state_count) {
        return Err(Error::AcceptingOutOfRange {
            state,
            states: state_count,
        });
    }
    if delta.len() != state_count {
        return Err(Error::DeltaRowCount {
            expected: state_count,
            found: delta.len(),
        });
    }
    for (row, targets) in delta.iter().enumerate() {
        if targets.len() != alphabet.len() {
            return Err(Error::DeltaColumnCount {
                row,
                expected: alphabet.len(),
                found: targets.len(),
            });
        }
        if let Some((symbol, &target)) = targets.iter().enumerate().find(|(_, &t)| t >= state_count)
        {
            return Err(Error::DeltaEntryOutOfRange {
                state: row,
                symbol,
                target,
                states: state_count,
            });
        }
    }
    Ok(())
}

impl AsRef<Dfa> for Dfa {
    fn as_ref(&self) -> &Dfa {
        self
    }
}

/// The on-disk interchange form of a [`Dfa`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DfaDocument {
    pub states: usize,
    pub alphabet: Vec<String>,
    pub initial: usize,
    pub accepting: Vec<usize>,
    pub delta: Vec<Vec<usize>>,
}

impl TryFrom<DfaDocument> for Dfa {
    type Error = Error;

    fn try_from(doc: DfaDocument) -> Result<Self> {
        let alphabet = Alphabet::new(doc.alphabet)?;
        Dfa::new(
            alphabet,
            doc.states,
            doc.initial,
            &doc.accepting,
            &doc.delta,
        )
    }
}

impl From<&Dfa> for DfaDocument {
    fn from(dfa: &Dfa) -> Self {
        dfa.to_document()
    }
}

impl Serialize for Dfa {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_document().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Dfa {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let doc = DfaDocument::deserialize(deserializer)?;
        Dfa::try_from(doc).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bin() -> Alphabet {
        Alphabet::binary()
    }

    #[test]
    fn smallest_complete_dfa_is_valid() {
        let d = Dfa::new(bin(), 1, 0, &[0], &[vec![0, 0]]).unwrap();
        assert!(d.validate().is_ok());
        assert_eq!(d.run(&Word::empty()).unwrap(), 0);
        assert_eq!(d.reachable_states(), vec![0]);
    }

    #[test]
    fn delta_entry_out_of_range() {
        let err = Dfa::new(bin(), 1, 0, &[0], &[vec![0, 1]]).unwrap_err();
        assert!(matches!(err, Error::DeltaEntryOutOfRange { target: 1, .. }));
        assert!(err.to_string().starts_with("delta entry out of range"));
    }

    #[test]
    fn first_violation_is_reported() {
        assert_eq!(
            Dfa::new(bin(), 0, 0, &[], &[]).unwrap_err(),
            Error::NoStates
        );
        assert!(matches!(
            Dfa::new(bin(), 2, 2, &[5], &[vec![0, 0]]).unwrap_err(),
            Error::InitialOutOfRange { initial: 2, .. }
        ));
        assert!(matches!(
            Dfa::new(bin(), 2, 0, &[5], &[vec![0, 0]]).unwrap_err(),
            Error::AcceptingOutOfRange { state: 5, .. }
        ));
        assert!(matches!(
            Dfa::new(bin(), 2, 0, &[1], &[vec![0, 0]]).unwrap_err(),
            Error::DeltaRowCount {
                expected: 2,
                found: 1
            }
        ));
        assert!(matches!(
            Dfa::new(bin(), 1, 0, &[], &[vec![0]]).unwrap_err(),
            Error::DeltaColumnCount { row: 0, .. }
        ));
    }

    #[test]
    fn alphabet_rejects_duplicates_and_empty() {
        assert_eq!(
            Alphabet::new(Vec::<String>::new()).unwrap_err(),
            Error::EmptyAlphabet
        );
        assert_eq!(
            Alphabet::new(["a", "b", "a"]).unwrap_err(),
            Error::DuplicateSymbol("a".into())
        );
    }

    #[test]
    fn unreachable_second_state() {
        let d = Dfa::new(bin(), 2, 0, &[1], &[vec![0, 0], vec![1, 0]]).unwrap();
        assert_eq!(d.reachable_states(), vec![0]);
        assert!(d.is_empty_language());
    }

    #[test]
    fn run_rejects_foreign_symbols() {
        let d = Dfa::new(bin(), 1, 0, &[0], &[vec![0, 0]]).unwrap();
        assert_eq!(
            d.run(&Word::new(vec![0, 2])).unwrap_err(),
            Error::SymbolOutOfRange { index: 2, size: 2 }
        );
    }

    #[test]
    fn word_parsing_and_display() {
        let w = Word::parse(&bin(), "10 010").unwrap();
        assert_eq!(w.symbols(), &[1, 0, 0, 1, 0]);
        assert_eq!(w.display(&bin()).to_string(), "10010");
        assert_eq!(w.count(1), 2);
        assert!(Word::parse(&bin(), "102").is_err());

        let long = Alphabet::new(["ab", "c"]).unwrap();
        let w = Word::parse(&long, "ab, c ab").unwrap();
        assert_eq!(w.symbols(), &[0, 1, 0]);
        assert_eq!(w.display(&long).to_string(), "ab c ab");
    }

    #[test]
    fn document_rejects_unknown_keys() {
        let text = r#"{"states":1,"alphabet":["0","1"],"initial":0,"accepting":[0],"delta":[[0,0]],"extra":1}"#;
        let err = Dfa::from_json(text).unwrap_err();
        assert!(err.to_string().contains("extra"), "{err}");
    }

    #[test]
    fn document_round_trip() {
        let d = Dfa::new(bin(), 2, 1, &[0, 0], &[vec![1, 0], vec![1, 1]]).unwrap();
        let back = Dfa::from_json(&d.to_json()).unwrap();
        assert_eq!(d, back);
        assert_eq!(back.to_document().accepting, vec![0]);
    }
}
