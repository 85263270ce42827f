//! Proof polynomials and formulas: AST, concrete syntax, subterm sets.
//!
//! Concrete syntax (ASCII; the Unicode symbols `∧ ∨ ¬ → ↔ □ ◇ × ⊤ ⊥` are
//! accepted as alternatives):
//!
//! | construct            | syntax            |
//! |----------------------|-------------------|
//! | conjunction          | `A & B`           |
//! | negation             | `~A`              |
//! | implication (sugar)  | `A -> B`          |
//! | disjunction (sugar)  | `A \| B`          |
//! | biconditional (sugar)| `A <-> B`         |
//! | cstit                | `[j]A`            |
//! | historical necessity | `Box A`, `Dia A`  |
//! | knowledge            | `K A`             |
//! | justification        | `t : A`           |
//! | presentation         | `E t`             |
//! | polynomials          | `x`, `c`, `s + t`, `s * t`, `!t` |
//!
//! Precedence from tightest: `!`, `*`, `+` for polynomials; `:`, `~`, `&`,
//! `|`, `->`, `<->` for formulas. `->` associates to the right, `&`, `|`,
//! `+` and `*` to the left. Identifiers in polynomial position starting
//! with `c` or `d` are proof constants, all others proof variables.

mod ast;
mod lexer;
mod parser;
mod render;

use std::collections::HashSet;
use std::fmt;

pub use ast::{is_constant_name, Agent, Formula, Polynomial};
pub use parser::{parse_formula, parse_formula_for, parse_polynomial};
pub use render::{render, render_polynomial};

/// Parse failure with the byte offset of the offending token.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct SyntaxError {
    pub position: usize,
    pub found: String,
    pub expected: Vec<String>,
}

impl SyntaxError {
    pub(crate) fn new(position: usize, found: impl Into<String>, expected: Vec<String>) -> Self {
        SyntaxError {
            position,
            found: found.into(),
            expected,
        }
    }
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "syntax error at offset {}: unexpected {}",
            self.position, self.found
        )?;
        if !self.expected.is_empty() {
            write!(f, ", expected one of: {}", self.expected.join(", "))?;
        }
        Ok(())
    }
}

/// All subformulas of `f`, `f` included, in post-order with duplicates
/// removed (first occurrence wins).
pub fn subformulas(f: &Formula) -> Vec<Formula> {
    fn go<'a>(f: &'a Formula, seen: &mut HashSet<&'a Formula>, out: &mut Vec<Formula>) {
        for c in f.children() {
            go(c, seen, out);
        }
        if seen.insert(f) {
            out.push(f.clone());
        }
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    go(f, &mut seen, &mut out);
    out
}

/// Every polynomial occurring in `f` under `:` or `E`, with all its
/// subterms, in post-order with duplicates removed.
pub fn subpolynomials(f: &Formula) -> Vec<Polynomial> {
    let mut all = Vec::new();
    collect_polys(f, &mut all);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for t in all {
        if seen.insert(t) {
            out.push(t.clone());
        }
    }
    out
}

fn collect_polys<'a>(f: &'a Formula, out: &mut Vec<&'a Polynomial>) {
    match f {
        Formula::Proves(t, a) => {
            t.walk(out);
            collect_polys(a, out);
        }
        Formula::Announced(t) => t.walk(out),
        _ => {
            for c in f.children() {
                collect_polys(c, out);
            }
        }
    }
}

/// Proposition letters of `f` in order of first occurrence.
pub fn prop_vars(f: &Formula) -> Vec<String> {
    subformulas(f)
        .into_iter()
        .filter_map(|g| match g {
            Formula::Prop(p) => Some(p),
            _ => None,
        })
        .collect()
}
