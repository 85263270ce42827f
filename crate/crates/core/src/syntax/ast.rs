use std::fmt;

/// Agent index into the fixed finite community `0..agents`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Agent(pub usize);

impl fmt::Display for Agent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Proof polynomial.
///
/// Variables and constants live in disjoint name spaces; the concrete syntax
/// tells them apart by the leading letter (see [`is_constant_name`]).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Polynomial {
    Var(String),
    Const(String),
    /// `s + t`
    Sum(Box<Polynomial>, Box<Polynomial>),
    /// `s * t`, application of the left argument to the right one
    App(Box<Polynomial>, Box<Polynomial>),
    /// `!t`
    Check(Box<Polynomial>),
}

/// Returns true when an identifier in polynomial position names a proof
/// constant: it starts with `c` or `d`.
pub fn is_constant_name(name: &str) -> bool {
    matches!(name.as_bytes().first(), Some(b'c') | Some(b'd'))
}

impl Polynomial {
    /// Builds a variable or constant from an identifier according to the
    /// naming convention.
    pub fn atom(name: impl Into<String>) -> Polynomial {
        let name = name.into();
        if is_constant_name(&name) {
            Polynomial::Const(name)
        } else {
            Polynomial::Var(name)
        }
    }

    pub fn var(name: impl Into<String>) -> Polynomial {
        Polynomial::Var(name.into())
    }

    pub fn constant(name: impl Into<String>) -> Polynomial {
        Polynomial::Const(name.into())
    }

    pub fn sum(s: Polynomial, t: Polynomial) -> Polynomial {
        Polynomial::Sum(Box::new(s), Box::new(t))
    }

    pub fn app(s: Polynomial, t: Polynomial) -> Polynomial {
        Polynomial::App(Box::new(s), Box::new(t))
    }

    pub fn check(t: Polynomial) -> Polynomial {
        Polynomial::Check(Box::new(t))
    }

    pub fn is_constant(&self) -> bool {
        matches!(self, Polynomial::Const(_))
    }

    /// Post-order walk over all subterms, duplicates included.
    pub fn walk<'a>(&'a self, out: &mut Vec<&'a Polynomial>) {
        match self {
            Polynomial::Var(_) | Polynomial::Const(_) => {}
            Polynomial::Sum(s, t) | Polynomial::App(s, t) => {
                s.walk(out);
                t.walk(out);
            }
            Polynomial::Check(t) => t.walk(out),
        }
        out.push(self);
    }
}

/// Core formula AST. Derived connectives only exist in the concrete syntax.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Prop(String),
    And(Box<Formula>, Box<Formula>),
    Not(Box<Formula>),
    /// `[j]A`
    Cstit(Agent, Box<Formula>),
    /// `Box A`, historical necessity
    Box(Box<Formula>),
    /// `t : A`
    Proves(Polynomial, Box<Formula>),
    /// `K A`
    Knows(Box<Formula>),
    /// `E t`
    Announced(Polynomial),
}

impl Formula {
    pub fn prop(name: impl Into<String>) -> Formula {
        Formula::Prop(name.into())
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(a: Formula) -> Formula {
        Formula::Not(Box::new(a))
    }

    pub fn cstit(j: usize, a: Formula) -> Formula {
        Formula::Cstit(Agent(j), Box::new(a))
    }

    pub fn boxed(a: Formula) -> Formula {
        Formula::Box(Box::new(a))
    }

    pub fn proves(t: Polynomial, a: Formula) -> Formula {
        Formula::Proves(t, Box::new(a))
    }

    pub fn knows(a: Formula) -> Formula {
        Formula::Knows(Box::new(a))
    }

    pub fn announced(t: Polynomial) -> Formula {
        Formula::Announced(t)
    }

    /// `A -> B`, desugared to `~(A & ~B)`.
    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::not(Formula::and(a, Formula::not(b)))
    }

    /// `A | B`, desugared to `~(~A & ~B)`.
    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::not(Formula::and(Formula::not(a), Formula::not(b)))
    }

    /// `A <-> B`, desugared to `(A -> B) & (B -> A)`.
    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::and(
            Formula::implies(a.clone(), b.clone()),
            Formula::implies(b, a),
        )
    }

    /// `Dia A`, desugared to `~Box ~A`.
    pub fn dia(a: Formula) -> Formula {
        Formula::not(Formula::boxed(Formula::not(a)))
    }

    /// `false`, desugared to `p & ~p`.
    pub fn bottom() -> Formula {
        Formula::and(Formula::prop("p"), Formula::not(Formula::prop("p")))
    }

    /// `true`, desugared to `~(p & ~p)`.
    pub fn top() -> Formula {
        Formula::not(Formula::bottom())
    }

    /// Left-nested disjunction of a nonempty list.
    pub fn disjunction(items: Vec<Formula>) -> Option<Formula> {
        items.into_iter().reduce(Formula::or)
    }

    /// Left-nested conjunction of a nonempty list.
    pub fn conjunction(items: Vec<Formula>) -> Option<Formula> {
        items.into_iter().reduce(Formula::and)
    }

    /// Matches `~(A & ~B)` and returns `(A, B)`.
    pub fn as_implication(&self) -> Option<(&Formula, &Formula)> {
        match self {
            Formula::Not(inner) => match inner.as_ref() {
                Formula::And(a, nb) => match nb.as_ref() {
                    Formula::Not(b) => Some((a, b)),
                    _ => None,
                },
                _ => None,
            },
            _ => None,
        }
    }

    /// Matches `~(~A & ~B)` and returns `(A, B)`.
    pub fn as_disjunction(&self) -> Option<(&Formula, &Formula)> {
        let (na, b) = self.as_implication()?;
        match na {
            Formula::Not(a) => Some((a, b)),
            _ => None,
        }
    }

    /// Immediate formula children, left to right.
    pub fn children(&self) -> Vec<&Formula> {
        match self {
            Formula::Prop(_) | Formula::Announced(_) => vec![],
            Formula::And(a, b) => vec![a, b],
            Formula::Not(a)
            | Formula::Cstit(_, a)
            | Formula::Box(a)
            | Formula::Proves(_, a)
            | Formula::Knows(a) => vec![a],
        }
    }

    /// Largest agent index mentioned, if any.
    pub fn max_agent(&self) -> Option<usize> {
        let own = match self {
            Formula::Cstit(j, _) => Some(j.0),
            _ => None,
        };
        self.children()
            .into_iter()
            .filter_map(Formula::max_agent)
            .chain(own)
            .max()
    }

    pub fn size(&self) -> usize {
        1 + self
            .children()
            .into_iter()
            .map(Formula::size)
            .sum::<usize>()
    }

    /// S-expression dump of the core AST.
    pub fn to_sexpr(&self) -> String {
        match self {
            Formula::Prop(p) => p.clone(),
            Formula::And(a, b) => format!("(and {} {})", a.to_sexpr(), b.to_sexpr()),
            Formula::Not(a) => format!("(not {})", a.to_sexpr()),
            Formula::Cstit(j, a) => format!("(cstit {} {})", j, a.to_sexpr()),
            Formula::Box(a) => format!("(box {})", a.to_sexpr()),
            Formula::Proves(t, a) => format!("(proves {} {})", t.to_sexpr(), a.to_sexpr()),
            Formula::Knows(a) => format!("(knows {})", a.to_sexpr()),
            Formula::Announced(t) => format!("(announced {})", t.to_sexpr()),
        }
    }
}

impl Polynomial {
    pub fn to_sexpr(&self) -> String {
        match self {
            Polynomial::Var(x) => format!("(var {x})"),
            Polynomial::Const(c) => format!("(const {c})"),
            Polynomial::Sum(s, t) => format!("(sum {} {})", s.to_sexpr(), t.to_sexpr()),
            Polynomial::App(s, t) => format!("(app {} {})", s.to_sexpr(), t.to_sexpr()),
            Polynomial::Check(t) => format!("(check {})", t.to_sexpr()),
        }
    }
}
