//! Axiom recognition, rule application and Hilbert proof checking for the
//! system with schemes A0-A9 and rules MP, K-necessitation, R_D and R_CS.

mod matcher;
mod proof;
mod taut;

pub use matcher::{match_pattern, Bindings};
pub use proof::{
    check_cs, match_rd, rd_literals, verify_proof, Justification, LineError, LineVerdict, Proof,
    ProofLine, Verdict,
};
pub use taut::{boolean_atoms, is_tautology};

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::syntax::{parse_formula, Formula};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Scheme {
    A0,
    A1,
    A2,
    A3,
    A4,
    A5,
    A6,
    A7,
    A8,
    A9,
}

impl Scheme {
    pub const ALL: [Scheme; 10] = [
        Scheme::A0,
        Scheme::A1,
        Scheme::A2,
        Scheme::A3,
        Scheme::A4,
        Scheme::A5,
        Scheme::A6,
        Scheme::A7,
        Scheme::A8,
        Scheme::A9,
    ];

    /// Order in which [`match_axiom`] tries the schemes.
    pub const MATCH_ORDER: [Scheme; 10] = [
        Scheme::A2,
        Scheme::A3,
        Scheme::A4,
        Scheme::A5,
        Scheme::A6,
        Scheme::A8,
        Scheme::A9,
        Scheme::A1,
        Scheme::A7,
        Scheme::A0,
    ];
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A{}", *self as usize)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown axiom scheme {0:?}")]
pub struct UnknownScheme(pub String);

impl FromStr for Scheme {
    type Err = UnknownScheme;

    fn from_str(s: &str) -> Result<Scheme, UnknownScheme> {
        let n: usize = s
            .strip_prefix(['A', 'a'])
            .and_then(|d| d.parse().ok())
            .ok_or_else(|| UnknownScheme(s.to_string()))?;
        Scheme::ALL
            .get(n)
            .copied()
            .ok_or_else(|| UnknownScheme(s.to_string()))
    }
}

/// Checker switches.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CalculusOptions {
    /// Recognize A0 only through a fixed ten-scheme Hilbert basis instead
    /// of the tautology check.
    pub strict_a0: bool,
    /// Accept necessitation for `Box` and `[j]`.
    pub box_necessitation: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomMatch {
    pub scheme: Scheme,
    pub variant: &'static str,
    pub bindings: Bindings,
}

struct Pattern {
    scheme: Scheme,
    variant: &'static str,
    pat: Formula,
}

const SCHEME_TEXT: &[(Scheme, &str, &str)] = &[
    (Scheme::A1, "K for Box", "Box (A -> B) -> (Box A -> Box B)"),
    (Scheme::A1, "T for Box", "Box A -> A"),
    (Scheme::A1, "5 for Box", "Dia A -> Box Dia A"),
    (Scheme::A1, "K for [j]", "[0](A -> B) -> ([0]A -> [0]B)"),
    (Scheme::A1, "T for [j]", "[0]A -> A"),
    (Scheme::A1, "5 for [j]", "~[0]~A -> [0]~[0]~A"),
    (Scheme::A2, "", "Box A -> [0]A"),
    (Scheme::A4, "", "s : (A -> B) -> (t : A -> (s * t) : B)"),
    (Scheme::A5, "", "t : A -> (!t : (t : A) & K A)"),
    (Scheme::A6, "", "(s : A | t : A) -> (s + t) : A"),
    (Scheme::A7, "K", "K (A -> B) -> (K A -> K B)"),
    (Scheme::A7, "T", "K A -> A"),
    (Scheme::A7, "4", "K A -> K K A"),
    (Scheme::A8, "", "K A -> Box K Box A"),
    (Scheme::A9, "", "Box E t -> K Box E t"),
];

/// Kleene's propositional basis, used by the strict A0 mode.
const KLEENE_TEXT: &[(&str, &str)] = &[
    ("kleene 1", "A -> (B -> A)"),
    ("kleene 2", "(A -> B) -> ((A -> (B -> C)) -> (A -> C))"),
    ("kleene 3", "A -> (B -> A & B)"),
    ("kleene 4a", "A & B -> A"),
    ("kleene 4b", "A & B -> B"),
    ("kleene 5a", "A -> A | B"),
    ("kleene 5b", "B -> A | B"),
    ("kleene 6", "(A -> C) -> ((B -> C) -> (A | B -> C))"),
    ("kleene 7", "(A -> B) -> ((A -> ~B) -> ~A)"),
    ("kleene 8", "~~A -> A"),
];

fn compile(scheme: Scheme, variant: &'static str, text: &str) -> Pattern {
    Pattern {
        scheme,
        variant,
        pat: parse_formula(text).expect("built-in scheme parses"),
    }
}

fn patterns() -> &'static [Pattern] {
    static P: OnceLock<Vec<Pattern>> = OnceLock::new();
    P.get_or_init(|| {
        SCHEME_TEXT
            .iter()
            .map(|&(s, v, t)| compile(s, v, t))
            .collect()
    })
}

fn kleene() -> &'static [Pattern] {
    static P: OnceLock<Vec<Pattern>> = OnceLock::new();
    P.get_or_init(|| {
        KLEENE_TEXT
            .iter()
            .map(|&(v, t)| compile(Scheme::A0, v, t))
            .collect()
    })
}

/// `(variant, pattern)` pairs for `scheme`. A0 yields the ten-scheme
/// propositional basis; A3 yields nothing since it is matched structurally.
pub fn scheme_patterns(scheme: Scheme) -> Vec<(&'static str, &'static Formula)> {
    let source = if scheme == Scheme::A0 {
        kleene()
    } else {
        patterns()
    };
    source
        .iter()
        .filter(|p| p.scheme == scheme)
        .map(|p| (p.variant, &p.pat))
        .collect()
}

fn conjuncts(f: &Formula) -> Vec<&Formula> {
    match f {
        Formula::And(a, b) => {
            let mut v = conjuncts(a);
            v.extend(conjuncts(b));
            v
        }
        _ => vec![f],
    }
}

fn as_dia(f: &Formula) -> Option<&Formula> {
    match f {
        Formula::Not(g) => match &**g {
            Formula::Box(h) => match &**h {
                Formula::Not(a) => Some(a),
                _ => None,
            },
            _ => None,
        },
        _ => None,
    }
}

/// `(◇[j1]A1 ∧ ... ∧ ◇[jn]An) → ◇([j1]A1 ∧ ... ∧ [jn]An)` with pairwise
/// distinct agents; conjunctions are compared flattened.
fn match_a3(f: &Formula) -> Option<AxiomMatch> {
    let (lhs, rhs) = f.as_implication()?;
    let left: Vec<&Formula> = conjuncts(lhs)
        .into_iter()
        .map(as_dia)
        .collect::<Option<_>>()?;
    let right = conjuncts(as_dia(rhs)?);
    if left.len() != right.len() || left.iter().zip(&right).any(|(a, b)| a != b) {
        return None;
    }
    let mut bindings = Bindings::default();
    for (i, g) in left.iter().enumerate() {
        let Formula::Cstit(j, a) = g else { return None };
        if bindings.agents.values().any(|k| k == j) {
            return None;
        }
        bindings.agents.insert(i, *j);
        bindings
            .formulas
            .insert(format!("A{}", i + 1), (**a).clone());
    }
    Some(AxiomMatch {
        scheme: Scheme::A3,
        variant: "",
        bindings,
    })
}

fn match_a0(f: &Formula, options: CalculusOptions) -> Option<AxiomMatch> {
    if options.strict_a0 {
        kleene().iter().find_map(|p| try_pattern(p, f))
    } else {
        is_tautology(f).then(|| AxiomMatch {
            scheme: Scheme::A0,
            variant: "tautology",
            bindings: Bindings::default(),
        })
    }
}

fn try_pattern(p: &Pattern, f: &Formula) -> Option<AxiomMatch> {
    let mut b = Bindings::default();
    let ok = match_pattern(&p.pat, f, &mut b);
    ok.then_some(AxiomMatch {
        scheme: p.scheme,
        variant: p.variant,
        bindings: b,
    })
}

/// Matches `f` against one scheme.
pub fn instance_of(f: &Formula, scheme: Scheme, options: CalculusOptions) -> Option<AxiomMatch> {
    match scheme {
        Scheme::A0 => match_a0(f, options),
        Scheme::A3 => match_a3(f),
        _ => patterns()
            .iter()
            .filter(|p| p.scheme == scheme)
            .find_map(|p| try_pattern(p, f)),
    }
}

/// First scheme `f` instantiates, in [`Scheme::MATCH_ORDER`].
pub fn match_axiom(f: &Formula) -> Option<AxiomMatch> {
    match_axiom_with(f, CalculusOptions::default())
}

pub fn match_axiom_with(f: &Formula, options: CalculusOptions) -> Option<AxiomMatch> {
    Scheme::MATCH_ORDER
        .iter()
        .find_map(|&s| instance_of(f, s, options))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scheme(s: &str) -> Option<Scheme> {
        match_axiom(&parse_formula(s).unwrap()).map(|m| m.scheme)
    }

    #[test]
    fn named_examples() {
        assert_eq!(scheme("Box E x -> K Box E x"), Some(Scheme::A9));
        assert_eq!(scheme("Box p -> [0]p"), Some(Scheme::A2));
        let m =
            match_axiom(&parse_formula("K(Box E x | ~Box E y) -> (Box E x | ~Box E y)").unwrap())
                .unwrap();
        assert_eq!((m.scheme, m.variant), (Scheme::A7, "T"));
    }

    #[test]
    fn each_scheme() {
        assert_eq!(scheme("p | ~p"), Some(Scheme::A0));
        assert_eq!(scheme("Box (p -> q) -> (Box p -> Box q)"), Some(Scheme::A1));
        assert_eq!(scheme("Dia K p -> Box Dia K p"), Some(Scheme::A1));
        assert_eq!(scheme("[1]p -> p"), Some(Scheme::A1));
        assert_eq!(
            scheme("Dia [0]p & Dia [1]q -> Dia ([0]p & [1]q)"),
            Some(Scheme::A3)
        );
        assert_eq!(scheme("Dia [0]p & Dia [0]q -> Dia ([0]p & [0]q)"), None);
        assert_eq!(
            scheme("x : (p -> q) -> (y : p -> (x * y) : q)"),
            Some(Scheme::A4)
        );
        assert_eq!(scheme("x : p -> (!x : (x : p) & K p)"), Some(Scheme::A5));
        assert_eq!(scheme("(x : p | y : p) -> (x + y) : p"), Some(Scheme::A6));
        assert_eq!(scheme("K p -> K K p"), Some(Scheme::A7));
        assert_eq!(scheme("K p -> Box K Box p"), Some(Scheme::A8));
        assert_eq!(scheme("p -> q"), None);
        assert_eq!(scheme("Box p -> K p"), None);
    }

    #[test]
    fn strict_a0() {
        let strict = CalculusOptions {
            strict_a0: true,
            ..Default::default()
        };
        let f = parse_formula("p -> (q -> p)").unwrap();
        assert_eq!(match_axiom_with(&f, strict).unwrap().variant, "kleene 1");
        let g = parse_formula("p | ~p").unwrap();
        assert!(match_axiom_with(&g, strict).is_none());
        assert!(match_axiom(&g).is_some());
    }

    #[test]
    fn scheme_names() {
        assert_eq!("A7".parse::<Scheme>().unwrap(), Scheme::A7);
        assert!("A10".parse::<Scheme>().is_err());
        assert_eq!(Scheme::A3.to_string(), "A3");
    }
}
