use super::ast::{Agent, Formula, Polynomial};
use super::lexer::{tokenize, Spanned, Tok};
use super::SyntaxError;

/// Recursive-descent parser over a token vector.
///
/// Grammar, loosest first:
///
/// ```text
/// formula := imp ('<->' imp)*
/// imp     := or ('->' imp)?
/// or      := and ('|' and)*
/// and     := unary ('&' unary)*
/// unary   := '~' unary | 'Box' unary | 'Dia' unary | 'K' unary
///          | '[' INT ']' unary | 'E' poly | poly ':' unary | atom
/// atom    := IDENT | 'true' | 'false' | '(' formula ')'
/// poly    := app ('+' app)*
/// app     := pre ('*' pre)*
/// pre     := '!' pre | IDENT | '(' poly ')'
/// ```
struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    agents: Option<usize>,
}

type PResult<T> = Result<T, SyntaxError>;

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> SyntaxError {
        SyntaxError::new(
            self.offset(),
            self.peek().describe(),
            expected.iter().map(|s| s.to_string()).collect(),
        )
    }

    fn expect(&mut self, tok: Tok, what: &str) -> PResult<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[what]))
        }
    }

    fn formula(&mut self) -> PResult<Formula> {
        let mut lhs = self.imp()?;
        while *self.peek() == Tok::Iff {
            self.bump();
            let rhs = self.imp()?;
            lhs = Formula::iff(lhs, rhs);
        }
        Ok(lhs)
    }

    fn imp(&mut self) -> PResult<Formula> {
        let lhs = self.or()?;
        if *self.peek() == Tok::Arrow {
            self.bump();
            let rhs = self.imp()?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> PResult<Formula> {
        let mut lhs = self.and()?;
        while *self.peek() == Tok::Pipe {
            self.bump();
            let rhs = self.and()?;
            lhs = Formula::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> PResult<Formula> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::Amp {
            self.bump();
            let rhs = self.unary()?;
            lhs = Formula::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> PResult<Formula> {
        match self.peek().clone() {
            Tok::Tilde => {
                self.bump();
                Ok(Formula::not(self.unary()?))
            }
            Tok::Box => {
                self.bump();
                Ok(Formula::boxed(self.unary()?))
            }
            Tok::Dia => {
                self.bump();
                Ok(Formula::dia(self.unary()?))
            }
            Tok::K => {
                self.bump();
                Ok(Formula::knows(self.unary()?))
            }
            Tok::LBracket => {
                self.bump();
                let at = self.offset();
                let j = match self.bump() {
                    Tok::Int(j) => j,
                    _ => {
                        self.pos -= 1;
                        return Err(self.error(&["agent index"]));
                    }
                };
                if let Some(n) = self.agents {
                    if j >= n {
                        return Err(SyntaxError::new(
                            at,
                            format!("agent {j}"),
                            vec![format!("agent index below {n}")],
                        ));
                    }
                }
                self.expect(Tok::RBracket, "`]`")?;
                Ok(Formula::Cstit(Agent(j), Box::new(self.unary()?)))
            }
            Tok::E => {
                self.bump();
                Ok(Formula::announced(self.poly()?))
            }
            _ => {
                let save = self.pos;
                if let Ok(t) = self.poly() {
                    if *self.peek() == Tok::Colon {
                        self.bump();
                        return Ok(Formula::proves(t, self.unary()?));
                    }
                }
                self.pos = save;
                self.atom()
            }
        }
    }

    fn atom(&mut self) -> PResult<Formula> {
        match self.peek().clone() {
            Tok::Ident(name) => {
                self.bump();
                Ok(Formula::Prop(name))
            }
            Tok::True => {
                self.bump();
                Ok(Formula::top())
            }
            Tok::False => {
                self.bump();
                Ok(Formula::bottom())
            }
            Tok::LParen => {
                self.bump();
                let f = self.formula()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(f)
            }
            _ => Err(self.error(&[
                "proposition",
                "`(`",
                "`~`",
                "`Box`",
                "`Dia`",
                "`K`",
                "`[`",
                "`E`",
                "polynomial",
            ])),
        }
    }

    fn poly(&mut self) -> PResult<Polynomial> {
        let mut lhs = self.app()?;
        while *self.peek() == Tok::Plus {
            self.bump();
            let rhs = self.app()?;
            lhs = Polynomial::sum(lhs, rhs);
        }
        Ok(lhs)
    }

    fn app(&mut self) -> PResult<Polynomial> {
        let mut lhs = self.pre()?;
        while *self.peek() == Tok::Star {
            self.bump();
            let rhs = self.pre()?;
            lhs = Polynomial::app(lhs, rhs);
        }
        Ok(lhs)
    }

    fn pre(&mut self) -> PResult<Polynomial> {
        match self.peek().clone() {
            Tok::Bang => {
                self.bump();
                Ok(Polynomial::check(self.pre()?))
            }
            Tok::Ident(name) => {
                self.bump();
                Ok(Polynomial::atom(name))
            }
            Tok::LParen => {
                self.bump();
                let t = self.poly()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(t)
            }
            _ => Err(self.error(&["proof variable", "proof constant", "`!`", "`(`"])),
        }
    }

    fn finish(&self) -> PResult<()> {
        if *self.peek() == Tok::Eof {
            Ok(())
        } else {
            Err(self.error(&["`&`", "`|`", "`->`", "`<->`", "end of input"]))
        }
    }
}

fn parser(text: &str, agents: Option<usize>) -> PResult<Parser> {
    Ok(Parser {
        toks: tokenize(text)?,
        pos: 0,
        agents,
    })
}

/// Parses a formula into the desugared core AST. Agent indices are not
/// range-checked.
pub fn parse_formula(text: &str) -> Result<Formula, SyntaxError> {
    let mut p = parser(text, None)?;
    let f = p.formula()?;
    p.finish()?;
    Ok(f)
}

/// Like [`parse_formula`], rejecting `[j]` with `j >= agents`.
pub fn parse_formula_for(text: &str, agents: usize) -> Result<Formula, SyntaxError> {
    let mut p = parser(text, Some(agents))?;
    let f = p.formula()?;
    p.finish()?;
    Ok(f)
}

pub fn parse_polynomial(text: &str) -> Result<Polynomial, SyntaxError> {
    let mut p = parser(text, None)?;
    let t = p.poly()?;
    if *p.peek() != Tok::Eof {
        return Err(p.error(&["`+`", "`*`", "end of input"]));
    }
    Ok(t)
}
