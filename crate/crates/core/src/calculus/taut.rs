//! Propositional tautology check by signed tableau over the Boolean
//! skeleton; every non-Boolean subformula is an atom.

use std::collections::HashMap;

use crate::syntax::Formula;

/// Maximal non-Boolean subformulas of `f`, in first-occurrence order.
pub fn boolean_atoms(f: &Formula) -> Vec<&Formula> {
    fn go<'a>(f: &'a Formula, out: &mut Vec<&'a Formula>) {
        match f {
            Formula::Not(a) => go(a, out),
            Formula::And(a, b) => {
                go(a, out);
                go(b, out);
            }
            _ => {
                if !out.contains(&f) {
                    out.push(f);
                }
            }
        }
    }
    let mut out = Vec::new();
    go(f, &mut out);
    out
}

/// Whether some atom assignment gives every signed formula its sign.
/// `pending` holds conjunctions signed false, expanded only once all
/// non-branching work is done.
fn satisfiable<'a>(
    mut todo: Vec<(&'a Formula, bool)>,
    mut lits: HashMap<&'a Formula, bool>,
    mut pending: Vec<&'a Formula>,
) -> bool {
    loop {
        while let Some((g, sign)) = todo.pop() {
            match (g, sign) {
                (Formula::Not(a), s) => todo.push((a, !s)),
                (Formula::And(a, b), true) => {
                    todo.push((a, true));
                    todo.push((b, true));
                }
                (Formula::And(..), false) => pending.push(g),
                (atom, s) => {
                    if *lits.entry(atom).or_insert(s) != s {
                        return false;
                    }
                }
            }
        }
        let Some(Formula::And(a, b)) = pending.pop() else {
            return true;
        };
        if satisfiable(vec![(a, false)], lits.clone(), pending.clone()) {
            return true;
        }
        todo.push((b, false));
    }
}

pub fn is_tautology(f: &Formula) -> bool {
    !satisfiable(vec![(f, false)], HashMap::new(), Vec::new())
}
