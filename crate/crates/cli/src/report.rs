//! Report types behind each subcommand, and their text/CSV/JSON renderings.

use std::fmt::Write;

use anyhow::{bail, Result};
use lss_core::{
    cycle_gadget, intersection_lss, ones_modulo, state_complexity, tight_witness, Alphabet,
    LssResult, SearchReport,
};
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

/// Outcome of checking one `(m, n)` pair of the tight construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub m: usize,
    pub n: usize,
    /// The sizes were given as `m > n` and swapped.
    pub swapped: bool,
    pub computed_lss: Option<u64>,
    /// Least shortest word accepted by both automata.
    pub witness_word: Option<String>,
    pub closed_form_word: String,
    pub closed_form_accepted: bool,
    pub expected: u64,
    pub pass: bool,
    /// State complexity of the `m`-state automaton.
    pub sc_first: usize,
    /// State complexity of the `n`-state automaton.
    pub sc_second: usize,
}

/// Builds both automata for `(m, n)`, ordering the sizes first if needed.
pub fn witness_report(m: usize, n: usize) -> Result<WitnessReport> {
    if m == 0 || n == 0 {
        bail!("sizes must be at least 1 (got m = {m}, n = {n})");
    }
    let swapped = m > n;
    let (m, n) = if swapped { (n, m) } else { (m, n) };
    let first = ones_modulo(m)?;
    let second = cycle_gadget(m, n)?;
    let bin = Alphabet::binary();

    let result = intersection_lss(&[&first, &second])?;
    let closed_form = tight_witness(m, n)?;
    let closed_form_accepted = first.accepts(&closed_form)? && second.accepts(&closed_form)?;
    let expected = (m * n - 1) as u64;
    let computed_lss = result.as_ref().map(|r| r.length);
    let pass = computed_lss == Some(expected)
        && closed_form_accepted
        && closed_form.len() as u64 == expected;
    Ok(WitnessReport {
        m,
        n,
        swapped,
        computed_lss,
        witness_word: result.map(|r| r.witness.display(&bin).to_string()),
        closed_form_word: closed_form.display(&bin).to_string(),
        closed_form_accepted,
        expected,
        pass,
        sc_first: state_complexity(&first),
        sc_second: state_complexity(&second),
    })
}

/// One report per pair `1 ≤ m ≤ n ≤ max_n`, ordered by `n` then `m`.
pub fn verify_range(max_n: usize) -> Result<Vec<WitnessReport>> {
    if max_n == 0 {
        bail!("--max-n must be at least 1");
    }
    (1..=max_n)
        .flat_map(|n| (1..=n).map(move |m| (m, n)))
        .map(|(m, n)| witness_report(m, n))
        .collect()
}

const WITNESS_CSV_HEADER: &str =
    "m,n,swapped,computed_lss,witness_word,closed_form_word,closed_form_accepted,expected,pass,sc_first,sc_second";

fn witness_csv_row(r: &WitnessReport) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{},{},{}",
        r.m,
        r.n,
        r.swapped,
        r.computed_lss.map_or(String::new(), |l| l.to_string()),
        r.witness_word.as_deref().unwrap_or(""),
        r.closed_form_word,
        r.closed_form_accepted,
        r.expected,
        r.pass,
        r.sc_first,
        r.sc_second
    )
}

pub fn witness_csv(reports: &[WitnessReport]) -> String {
    let mut out = String::from(WITNESS_CSV_HEADER);
    out.push('\n');
    for r in reports {
        out.push_str(&witness_csv_row(r));
        out.push('\n');
    }
    out
}

fn show_word(w: &str) -> &str {
    if w.is_empty() {
        "ε"
    } else {
        w
    }
}

pub fn witness_text(r: &WitnessReport) -> String {
    let mut out = String::new();
    if r.swapped {
        writeln!(
            out,
            "note: sizes swapped to m = {}, n = {} (m ≤ n)",
            r.m, r.n
        )
        .unwrap();
    }
    writeln!(out, "m = {}, n = {}", r.m, r.n).unwrap();
    writeln!(
        out,
        "state complexities: {} and {}",
        r.sc_first, r.sc_second
    )
    .unwrap();
    match (&r.computed_lss, &r.witness_word) {
        (Some(l), Some(w)) => writeln!(
            out,
            "shortest common word: length {l}, least witness {}",
            show_word(w)
        )
        .unwrap(),
        _ => writeln!(out, "shortest common word: none (empty intersection)").unwrap(),
    }
    writeln!(
        out,
        "closed-form word: {} (length {}, accepted by both: {})",
        show_word(&r.closed_form_word),
        r.closed_form_word.chars().count(),
        r.closed_form_accepted
    )
    .unwrap();
    writeln!(out, "expected m·n − 1 = {}", r.expected).unwrap();
    writeln!(out, "{}", if r.pass { "PASS" } else { "FAIL" }).unwrap();
    out
}

pub fn verify_text(reports: &[WitnessReport]) -> String {
    let mut out = format!(
        "{:>4} {:>4} {:>8} {:>8} {:>5} {:>5}  {}\n",
        "m", "n", "lss", "expected", "sc_m", "sc_n", "result"
    );
    for r in reports {
        writeln!(
            out,
            "{:>4} {:>4} {:>8} {:>8} {:>5} {:>5}  {}",
            r.m,
            r.n,
            r.computed_lss.map_or("-".to_string(), |l| l.to_string()),
            r.expected,
            r.sc_first,
            r.sc_second,
            if r.pass { "PASS" } else { "FAIL" }
        )
        .unwrap();
    }
    let failed = reports.iter().filter(|r| !r.pass).count();
    writeln!(out, "{} pairs, {} failed", reports.len(), failed).unwrap();
    out
}

/// Serializable view of a [`SearchReport`].
#[derive(Debug, Clone, Serialize)]
pub struct SearchSummary {
    pub sizes: Vec<usize>,
    pub alphabet: Vec<String>,
    pub target: u64,
    pub max_lss: Option<u64>,
    pub attained: bool,
    pub tuples_examined: u64,
    pub tuples_skipped: u64,
    pub languages_per_size: Vec<usize>,
    pub bound_violations: u64,
    pub witness_tuple: Option<Vec<lss_core::DfaDocument>>,
    pub witness_word: Option<String>,
}

impl From<&SearchReport> for SearchSummary {
    fn from(r: &SearchReport) -> Self {
        SearchSummary {
            sizes: r.sizes.clone(),
            alphabet: r.alphabet.labels().to_vec(),
            target: r.target,
            max_lss: r.max_lss,
            attained: r.attained,
            tuples_examined: r.tuples_examined,
            tuples_skipped: r.tuples_skipped,
            languages_per_size: r.languages_per_size.clone(),
            bound_violations: r.bound_violations,
            witness_tuple: r
                .witness
                .as_ref()
                .map(|w| w.components.iter().map(|c| c.to_document()).collect()),
            witness_word: r
                .witness
                .as_ref()
                .map(|w| w.word.display(&r.alphabet).to_string()),
        }
    }
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

pub fn search_text(s: &SearchSummary) -> String {
    let mut out = String::new();
    writeln!(out, "sizes: {}", join(&s.sizes, ", ")).unwrap();
    writeln!(
        out,
        "languages per size: {}",
        join(&s.languages_per_size, ", ")
    )
    .unwrap();
    writeln!(
        out,
        "tuples examined: {} (skipped {} with an empty component)",
        s.tuples_examined, s.tuples_skipped
    )
    .unwrap();
    writeln!(out, "target ∏ sizes − 1 = {}", s.target).unwrap();
    match s.max_lss {
        Some(l) => writeln!(out, "max shortest common word: {l}").unwrap(),
        None => writeln!(out, "max shortest common word: none").unwrap(),
    }
    writeln!(out, "attained: {}", s.attained).unwrap();
    if let (Some(tuple), Some(word)) = (&s.witness_tuple, &s.witness_word) {
        writeln!(out, "witness word: {}", show_word(word)).unwrap();
        for doc in tuple {
            writeln!(out, "  {}", serde_json::to_string(doc).unwrap()).unwrap();
        }
    }
    out
}

pub fn search_csv(s: &SearchSummary) -> String {
    format!(
        "sizes,target,max_lss,attained,tuples_examined,tuples_skipped,languages_per_size,witness_word\n{},{},{},{},{},{},{},{}\n",
        join(&s.sizes, ";"),
        s.target,
        s.max_lss.map_or(String::new(), |l| l.to_string()),
        s.attained,
        s.tuples_examined,
        s.tuples_skipped,
        join(&s.languages_per_size, ";"),
        s.witness_word.as_deref().unwrap_or("")
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LssSummary {
    pub components: usize,
    pub empty: bool,
    pub length: Option<u64>,
    pub witness: Option<String>,
}

impl LssSummary {
    pub fn new(components: usize, alphabet: &Alphabet, result: Option<&LssResult>) -> Self {
        LssSummary {
            components,
            empty: result.is_none(),
            length: result.map(|r| r.length),
            witness: result.map(|r| r.witness.display(alphabet).to_string()),
        }
    }
}

pub fn lss_text(s: &LssSummary) -> String {
    match (s.length, &s.witness) {
        (Some(l), Some(w)) => format!("length {l}\nwitness {}\n", show_word(w)),
        _ => "empty intersection\n".to_string(),
    }
}

pub fn lss_csv(s: &LssSummary) -> String {
    format!(
        "empty,length,witness\n{},{},{}\n",
        s.empty,
        s.length.map_or(String::new(), |l| l.to_string()),
        s.witness.as_deref().unwrap_or("")
    )
}

/// Wraps a payload as `{"schema_version": .., "command": .., <payload fields>}`.
pub fn structured<T: Serialize>(command: &str, payload: &T, timestamp: Option<u64>) -> String {
    let mut doc = serde_json::Map::new();
    doc.insert("schema_version".into(), SCHEMA_VERSION.into());
    doc.insert("command".into(), command.into());
    if let Some(t) = timestamp {
        doc.insert("generated_at_unix".into(), t.into());
    }
    match serde_json::to_value(payload).expect("reports serialize") {
        serde_json::Value::Object(fields) => doc.extend(fields),
        other => {
            doc.insert("rows".into(), other);
        }
    }
    let mut text = serde_json::to_string_pretty(&serde_json::Value::Object(doc)).unwrap();
    text.push('\n');
    text
}
