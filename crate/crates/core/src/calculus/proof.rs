use thiserror::Error;

use super::{instance_of, match_axiom_with, AxiomMatch, CalculusOptions, Scheme};
use crate::diag::{Constraint, Diagnostics, Violation};
use crate::models::ConstantSpecification;
use crate::syntax::{Formula, Polynomial};

/// How a proof line is obtained. Premise references are 1-based line
/// numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Justification {
    /// Instance of the given scheme, or of any scheme when `None`.
    Axiom(Option<Scheme>),
    /// From line `i` (`A`) and line `j` (`A → B`) infer `B`.
    Mp(usize, usize),
    /// From `A` infer `KA`.
    KNec(usize),
    /// `R_D` applied to the premise line.
    Rd(usize),
    /// A member of the constant specification.
    Rcs,
    /// From `A` infer `Box A` (`None`) or `[j]A`; needs
    /// [`CalculusOptions::box_necessitation`].
    Nec(usize, Option<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofLine {
    pub formula: Formula,
    pub just: Justification,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Proof {
    pub lines: Vec<ProofLine>,
}

impl Proof {
    pub fn new(lines: Vec<ProofLine>) -> Proof {
        Proof { lines }
    }

    pub fn push(&mut self, formula: Formula, just: Justification) {
        self.lines.push(ProofLine { formula, just });
    }

    pub fn conclusion(&self) -> Option<&Formula> {
        self.lines.last().map(|l| &l.formula)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LineError {
    #[error("premise {premise} is not an earlier line")]
    PremiseOutOfRange { premise: usize },
    #[error("not an instance of {0}")]
    WrongScheme(Scheme),
    #[error("not an axiom instance")]
    NotAnAxiom,
    #[error("line {major} is not (line {minor} -> this formula)")]
    MpShape { minor: usize, major: usize },
    #[error("not K applied to line {0}")]
    KNecShape(usize),
    #[error("not an R_D conclusion from line {0}")]
    RdShape(usize),
    #[error("not in the constant specification")]
    NotInCs,
    #[error("necessitation for Box and [j] is disabled")]
    NecDisabled,
    #[error("not the necessitation of line {0}")]
    NecShape(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineVerdict {
    pub line: usize,
    pub result: Result<Option<AxiomMatch>, LineError>,
}

impl LineVerdict {
    pub fn ok(&self) -> bool {
        self.result.is_ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub lines: Vec<LineVerdict>,
}

impl Verdict {
    pub fn accepted(&self) -> bool {
        self.lines.iter().all(LineVerdict::ok)
    }

    pub fn first_error(&self) -> Option<(usize, &LineError)> {
        self.lines
            .iter()
            .find_map(|v| v.result.as_ref().err().map(|e| (v.line, e)))
    }
}

/// Flattens `f` as a disjunction of `¬□Et` / `□Es` literals into
/// `(negated, t)` pairs; `boxed` selects the premise or conclusion form.
pub fn rd_literals(f: &Formula, boxed: bool) -> Option<Vec<(bool, Polynomial)>> {
    fn flatten<'a>(f: &'a Formula, out: &mut Vec<&'a Formula>) {
        match f.as_disjunction() {
            Some((a, b)) => {
                flatten(a, out);
                flatten(b, out);
            }
            None => out.push(f),
        }
    }
    let atom = |g: &Formula| -> Option<Polynomial> {
        let g = if boxed {
            match g {
                Formula::Box(inner) => &**inner,
                _ => return None,
            }
        } else {
            g
        };
        match g {
            Formula::Announced(t) => Some(t.clone()),
            _ => None,
        }
    };
    let mut parts = Vec::new();
    flatten(f, &mut parts);
    parts
        .into_iter()
        .map(|g| match g {
            Formula::Not(inner) => atom(inner).map(|t| (true, t)),
            _ => atom(g).map(|t| (false, t)),
        })
        .collect()
}

/// `R_D`: from `KA → (¬□Et1 ∨ … ∨ □Es1 ∨ …)` infer `KA → (¬Et1 ∨ … ∨ Es1 ∨ …)`,
/// with the disjuncts compared as multisets and at least one disjunct.
pub fn match_rd(premise: &Formula, conclusion: &Formula) -> bool {
    let split = |f: &Formula| -> Option<(Formula, Formula)> {
        let (k, d) = f.as_implication()?;
        matches!(k, Formula::Knows(_)).then(|| (k.clone(), d.clone()))
    };
    let (Some((k1, d1)), Some((k2, d2))) = (split(premise), split(conclusion)) else {
        return false;
    };
    if k1 != k2 {
        return false;
    }
    let (Some(mut l1), Some(mut l2)) = (rd_literals(&d1, true), rd_literals(&d2, false)) else {
        return false;
    };
    l1.sort();
    l2.sort();
    !l1.is_empty() && l1 == l2
}

fn check_line(
    proof: &Proof,
    i: usize,
    cs: &ConstantSpecification,
    options: CalculusOptions,
) -> Result<Option<AxiomMatch>, LineError> {
    let line = &proof.lines[i];
    let own = &line.formula;
    let number = i + 1;
    let premise = |k: usize| -> Result<&Formula, LineError> {
        if k >= 1 && k < number {
            Ok(&proof.lines[k - 1].formula)
        } else {
            Err(LineError::PremiseOutOfRange { premise: k })
        }
    };
    match &line.just {
        Justification::Axiom(Some(s)) => instance_of(own, *s, options)
            .map(Some)
            .ok_or(LineError::WrongScheme(*s)),
        Justification::Axiom(None) => match_axiom_with(own, options)
            .map(Some)
            .ok_or(LineError::NotAnAxiom),
        Justification::Mp(a, b) => {
            let minor = premise(*a)?;
            let major = premise(*b)?;
            match major.as_implication() {
                Some((x, y)) if x == minor && y == own => Ok(None),
                _ => Err(LineError::MpShape {
                    minor: *a,
                    major: *b,
                }),
            }
        }
        Justification::KNec(a) => {
            let p = premise(*a)?;
            match own {
                Formula::Knows(g) if **g == *p => Ok(None),
                _ => Err(LineError::KNecShape(*a)),
            }
        }
        Justification::Rd(a) => {
            let p = premise(*a)?;
            match_rd(p, own)
                .then_some(None)
                .ok_or(LineError::RdShape(*a))
        }
        Justification::Rcs => cs
            .contains_formula(own)
            .then_some(None)
            .ok_or(LineError::NotInCs),
        Justification::Nec(a, agent) => {
            if !options.box_necessitation {
                return Err(LineError::NecDisabled);
            }
            let p = premise(*a)?;
            let ok = match (own, agent) {
                (Formula::Box(g), None) => **g == *p,
                (Formula::Cstit(j, g), Some(k)) => j.0 == *k && **g == *p,
                _ => false,
            };
            ok.then_some(None).ok_or(LineError::NecShape(*a))
        }
    }
}

/// Checks every line; the proof is accepted iff every line is justified.
pub fn verify_proof(
    proof: &Proof,
    cs: &ConstantSpecification,
    options: CalculusOptions,
) -> Verdict {
    Verdict {
        lines: (0..proof.lines.len())
            .map(|i| LineVerdict {
                line: i + 1,
                result: check_line(proof, i, cs, options),
            })
            .collect(),
    }
}

/// Every entry's core must be an axiom instance; completed lower entries
/// are reported as warnings.
pub fn check_cs(cs: &ConstantSpecification) -> Diagnostics {
    let mut d = Diagnostics::new();
    for e in cs.entries() {
        if match_axiom_with(&e.core, CalculusOptions::default()).is_none() {
            d.push(
                Violation::new(Constraint::CsAxiomInstance)
                    .with("entry", e.formula())
                    .with("A", &e.core),
            );
        }
    }
    for w in cs.warnings() {
        d.warn(w);
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_formula;

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn rd_examples() {
        assert!(match_rd(
            &f("K(Box E x | ~Box E y) -> (Box E x | ~Box E y)"),
            &f("K(Box E x | ~Box E y) -> (E x | ~E y)")
        ));
        assert!(match_rd(&f("K p -> Box E x"), &f("K p -> E x")));
        assert!(match_rd(
            &f("K p -> Box E x | Box E y"),
            &f("K p -> E y | E x")
        ));
        assert!(!match_rd(&f("K p -> Box E x"), &f("K q -> E x")));
        assert!(!match_rd(&f("K p -> Box E x"), &f("K p -> E y")));
        assert!(!match_rd(&f("K p -> Box E x | Box E x"), &f("K p -> E x")));
        assert!(!match_rd(&f("p -> Box E x"), &f("p -> E x")));
        assert!(!match_rd(&f("K p -> Box p"), &f("K p -> p")));
    }

    fn target_proof() -> Proof {
        let mut p = Proof::default();
        p.push(
            f("K(Box E x | ~Box E y) -> (Box E x | ~Box E y)"),
            Justification::Axiom(Some(Scheme::A7)),
        );
        p.push(
            f("K(Box E x | ~Box E y) -> (E x | ~E y)"),
            Justification::Rd(1),
        );
        p
    }

    #[test]
    fn two_line_derivation() {
        let v = verify_proof(
            &target_proof(),
            &ConstantSpecification::empty(),
            CalculusOptions::default(),
        );
        assert!(v.accepted(), "{:?}", v.first_error());
    }

    #[test]
    fn mp_and_errors() {
        let mut p = Proof::default();
        p.push(f("p -> p"), Justification::Axiom(None));
        p.push(
            f("(p -> p) -> (q -> (p -> p))"),
            Justification::Axiom(Some(Scheme::A0)),
        );
        p.push(f("q -> (p -> p)"), Justification::Mp(1, 2));
        p.push(f("K (p -> p)"), Justification::KNec(1));
        p.push(f("r"), Justification::Mp(1, 2));
        p.push(f("r"), Justification::Mp(1, 9));
        p.push(f("Box p -> p"), Justification::Axiom(Some(Scheme::A9)));
        p.push(f("Box (p -> p)"), Justification::Nec(1, None));
        let cs = ConstantSpecification::empty();
        let v = verify_proof(&p, &cs, CalculusOptions::default());
        let res: Vec<bool> = v.lines.iter().map(LineVerdict::ok).collect();
        assert_eq!(res, [true, true, true, true, false, false, false, false]);
        assert_eq!(
            v.lines[5].result,
            Err(LineError::PremiseOutOfRange { premise: 9 })
        );
        assert_eq!(v.lines[7].result, Err(LineError::NecDisabled));
        let nec = CalculusOptions {
            box_necessitation: true,
            ..Default::default()
        };
        assert!(verify_proof(&p, &cs, nec).lines[7].ok());
    }

    #[test]
    fn cs_checks() {
        let good = ConstantSpecification::from_formulas([&f("c : (Box p -> [0]p)")]).unwrap();
        assert!(check_cs(&good).is_ok());
        let chained =
            ConstantSpecification::from_formulas([&f("d : c : (Box p -> [0]p)")]).unwrap();
        let d = check_cs(&chained);
        assert!(d.is_ok());
        assert_eq!(d.warnings.len(), 1);
        let bad = ConstantSpecification::from_formulas([&f("c : p")]).unwrap();
        assert!(check_cs(&bad).has(Constraint::CsAxiomInstance));
        let mut p = Proof::default();
        p.push(f("d : c : (Box p -> [0]p)"), Justification::Rcs);
        p.push(f("c : (Box p -> [0]p)"), Justification::Rcs);
        assert!(verify_proof(&p, &chained, CalculusOptions::default()).accepted());
    }
}
