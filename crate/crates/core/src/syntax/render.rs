use super::ast::{Formula, Polynomial};

const IMP: u8 = 1;
const OR: u8 = 2;
const AND: u8 = 3;
const UNARY: u8 = 4;

/// Prints a formula in the ASCII concrete syntax. Implications,
/// disjunctions and diamonds are resugared, so the output parses back to
/// exactly the same core AST.
pub fn render(f: &Formula) -> String {
    let mut out = String::new();
    write_formula(f, 0, &mut out);
    out
}

pub fn render_polynomial(t: &Polynomial) -> String {
    let mut out = String::new();
    write_poly(t, 0, &mut out);
    out
}

fn level(f: &Formula) -> u8 {
    if f.as_disjunction().is_some() {
        OR
    } else if f.as_implication().is_some() {
        IMP
    } else if let Formula::And(..) = f {
        AND
    } else {
        UNARY
    }
}

fn write_formula(f: &Formula, min: u8, out: &mut String) {
    let own = level(f);
    let paren = own < min;
    if paren {
        out.push('(');
    }
    if let Some((a, b)) = f.as_disjunction() {
        write_formula(a, OR, out);
        out.push_str(" | ");
        write_formula(b, AND, out);
    } else if let Some((a, b)) = f.as_implication() {
        write_formula(a, OR, out);
        out.push_str(" -> ");
        write_formula(b, IMP, out);
    } else {
        match f {
            Formula::Prop(p) => out.push_str(p),
            Formula::And(a, b) => {
                write_formula(a, AND, out);
                out.push_str(" & ");
                write_formula(b, UNARY, out);
            }
            Formula::Not(a) => match a.as_ref() {
                Formula::Box(inner) if matches!(inner.as_ref(), Formula::Not(_)) => {
                    let Formula::Not(body) = inner.as_ref() else {
                        unreachable!()
                    };
                    out.push_str("Dia ");
                    write_formula(body, UNARY, out);
                }
                _ => {
                    out.push('~');
                    write_formula(a, UNARY, out);
                }
            },
            Formula::Cstit(j, a) => {
                out.push_str(&format!("[{j}]"));
                write_formula(a, UNARY, out);
            }
            Formula::Box(a) => {
                out.push_str("Box ");
                write_formula(a, UNARY, out);
            }
            Formula::Knows(a) => {
                out.push_str("K ");
                write_formula(a, UNARY, out);
            }
            Formula::Proves(t, a) => {
                write_poly(t, 0, out);
                out.push_str(" : ");
                write_formula(a, UNARY, out);
            }
            Formula::Announced(t) => {
                out.push_str("E ");
                write_poly(t, 0, out);
            }
        }
    }
    if paren {
        out.push(')');
    }
}

fn poly_level(t: &Polynomial) -> u8 {
    match t {
        Polynomial::Sum(..) => 0,
        Polynomial::App(..) => 1,
        _ => 2,
    }
}

fn write_poly(t: &Polynomial, min: u8, out: &mut String) {
    let paren = poly_level(t) < min;
    if paren {
        out.push('(');
    }
    match t {
        Polynomial::Var(x) | Polynomial::Const(x) => out.push_str(x),
        Polynomial::Sum(s, u) => {
            write_poly(s, 0, out);
            out.push_str(" + ");
            write_poly(u, 1, out);
        }
        Polynomial::App(s, u) => {
            write_poly(s, 1, out);
            out.push_str(" * ");
            write_poly(u, 2, out);
        }
        Polynomial::Check(u) => {
            out.push('!');
            write_poly(u, 2, out);
        }
    }
    if paren {
        out.push(')');
    }
}

impl std::fmt::Display for Formula {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&render(self))
    }
}

impl std::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&render_polynomial(self))
    }
}
