//! Graphviz DOT rendering.
//!
//! Output is deterministic: nodes in state order, then one edge per
//! (state, symbol) in state-major, symbol-minor order.

use std::fmt::Write;

use lss_core::{Dfa, ProductTag};

/// How states are labeled in the rendered graph.
#[derive(Debug, Clone, Copy)]
pub enum StateNames<'a> {
    /// `0`, `1`, ...
    Plain,
    /// `p_0`, `p_1`, ... with the given prefix.
    Prefixed(&'a str),
    /// `(p_0,q_1)` style tuples, one prefix per component. Components
    /// without a prefix print plain indices.
    Product(&'a ProductTag, &'a [&'a str]),
}

impl StateNames<'_> {
    fn name(&self, state: usize) -> String {
        match self {
            StateNames::Plain => state.to_string(),
            StateNames::Prefixed(p) => format!("{p}_{state}"),
            StateNames::Product(tag, prefixes) => {
                let parts: Vec<String> = tag
                    .tuple(state)
                    .iter()
                    .enumerate()
                    .map(|(k, q)| match prefixes.get(k) {
                        Some(p) => format!("{p}_{q}"),
                        None => q.to_string(),
                    })
                    .collect();
                format!("({})", parts.join(","))
            }
        }
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn render(dfa: &Dfa, title: &str, names: StateNames<'_>) -> String {
    let mut out = String::new();
    let node = |q| quote(&names.name(q));
    writeln!(out, "digraph {} {{", quote(title)).unwrap();
    writeln!(out, "    rankdir=LR;").unwrap();
    writeln!(out, "    __start [shape=point, label=\"\"];").unwrap();
    for q in 0..dfa.state_count() {
        let shape = if dfa.is_accepting(q) {
            "doublecircle"
        } else {
            "circle"
        };
        writeln!(out, "    {} [shape={shape}];", node(q)).unwrap();
    }
    writeln!(out, "    __start -> {};", node(dfa.initial())).unwrap();
    for q in 0..dfa.state_count() {
        for (s, &t) in dfa.row(q).iter().enumerate() {
            let label = dfa.alphabet().label(s).unwrap_or_default();
            writeln!(
                out,
                "    {} -> {} [label={}];",
                node(q),
                node(t),
                quote(label)
            )
            .unwrap();
        }
    }
    out.push_str("}\n");
    out
}
