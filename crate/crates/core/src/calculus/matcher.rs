//! First-order matching of scheme patterns against formulas.
//!
//! Patterns are ordinary formulas: a propositional letter starting with an
//! uppercase letter is a formula metavariable, every polynomial variable is
//! a polynomial metavariable, and every agent index is an agent
//! metavariable.

use std::collections::BTreeMap;

use crate::syntax::{Agent, Formula, Polynomial};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Bindings {
    pub formulas: BTreeMap<String, Formula>,
    pub polynomials: BTreeMap<String, Polynomial>,
    pub agents: BTreeMap<usize, Agent>,
}

impl Bindings {
    /// `name := value` pairs, rendered, in a stable order.
    pub fn describe(&self) -> Vec<(String, String)> {
        let mut out: Vec<(String, String)> = self
            .formulas
            .iter()
            .map(|(k, v)| (k.clone(), v.to_string()))
            .collect();
        out.extend(
            self.polynomials
                .iter()
                .map(|(k, v)| (k.clone(), v.to_string())),
        );
        out.extend(
            self.agents
                .iter()
                .map(|(k, v)| (format!("j{k}"), v.0.to_string())),
        );
        out
    }
}

fn is_metavar(name: &str) -> bool {
    name.starts_with(|c: char| c.is_ascii_uppercase())
}

fn bind<K: Ord + Clone, V: PartialEq + Clone>(map: &mut BTreeMap<K, V>, k: &K, v: &V) -> bool {
    match map.get(k) {
        Some(old) => old == v,
        None => {
            map.insert(k.clone(), v.clone());
            true
        }
    }
}

fn match_poly(pat: &Polynomial, t: &Polynomial, b: &mut Bindings) -> bool {
    match (pat, t) {
        (Polynomial::Var(x), _) => bind(&mut b.polynomials, x, t),
        (Polynomial::Const(c), Polynomial::Const(d)) => c == d,
        (Polynomial::Sum(p1, p2), Polynomial::Sum(t1, t2))
        | (Polynomial::App(p1, p2), Polynomial::App(t1, t2)) => {
            match_poly(p1, t1, b) && match_poly(p2, t2, b)
        }
        (Polynomial::Check(p), Polynomial::Check(s)) => match_poly(p, s, b),
        _ => false,
    }
}

fn go(pat: &Formula, f: &Formula, b: &mut Bindings) -> bool {
    match (pat, f) {
        (Formula::Prop(x), _) if is_metavar(x) => bind(&mut b.formulas, x, f),
        (Formula::Prop(x), Formula::Prop(y)) => x == y,
        (Formula::And(p1, p2), Formula::And(f1, f2)) => go(p1, f1, b) && go(p2, f2, b),
        (Formula::Not(p), Formula::Not(g))
        | (Formula::Box(p), Formula::Box(g))
        | (Formula::Knows(p), Formula::Knows(g)) => go(p, g, b),
        (Formula::Cstit(j, p), Formula::Cstit(k, g)) => bind(&mut b.agents, &j.0, k) && go(p, g, b),
        (Formula::Proves(s, p), Formula::Proves(t, g)) => match_poly(s, t, b) && go(p, g, b),
        (Formula::Announced(s), Formula::Announced(t)) => match_poly(s, t, b),
        _ => false,
    }
}

/// Matches `pat` against `f`, extending `b` on success and leaving it
/// untouched on failure.
pub fn match_pattern(pat: &Formula, f: &Formula, b: &mut Bindings) -> bool {
    let mut trial = b.clone();
    if go(pat, f, &mut trial) {
        *b = trial;
        true
    } else {
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_formula;

    #[test]
    fn binds_consistently() {
        let pat = parse_formula("Box A -> [0]A").unwrap();
        let mut b = Bindings::default();
        assert!(match_pattern(
            &pat,
            &parse_formula("Box (p & q) -> [1](p & q)").unwrap(),
            &mut b
        ));
        assert_eq!(b.formulas["A"], parse_formula("p & q").unwrap());
        assert_eq!(b.agents[&0], Agent(1));
        let mut b = Bindings::default();
        assert!(!match_pattern(
            &pat,
            &parse_formula("Box p -> [1]q").unwrap(),
            &mut b
        ));
        assert_eq!(b, Bindings::default());
    }

    #[test]
    fn polynomial_metavariables() {
        let pat = parse_formula("(s : A | t : A) -> (s + t) : A").unwrap();
        let f = parse_formula("(c : p | x * y : p) -> (c + x * y) : p").unwrap();
        let mut b = Bindings::default();
        assert!(match_pattern(&pat, &f, &mut b));
        assert_eq!(b.polynomials["t"].to_string(), "x * y");
        let g = parse_formula("(c : p | x : p) -> (x + c) : p").unwrap();
        assert!(!match_pattern(&pat, &g, &mut Bindings::default()));
    }
}
