use super::SyntaxError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    Int(usize),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Amp,
    Pipe,
    Tilde,
    Arrow,
    Iff,
    Colon,
    Bang,
    Star,
    Plus,
    Box,
    Dia,
    K,
    E,
    True,
    False,
    Eof,
}

impl Tok {
    pub(crate) fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Int(n) => format!("integer `{n}`"),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::Amp => "`&`".into(),
            Tok::Pipe => "`|`".into(),
            Tok::Tilde => "`~`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::Iff => "`<->`".into(),
            Tok::Colon => "`:`".into(),
            Tok::Bang => "`!`".into(),
            Tok::Star => "`*`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Box => "`Box`".into(),
            Tok::Dia => "`Dia`".into(),
            Tok::K => "`K`".into(),
            Tok::E => "`E`".into(),
            Tok::True => "`true`".into(),
            Tok::False => "`false`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

/// Token with its byte offset in the source.
pub(crate) type Spanned = (Tok, usize);

pub(crate) fn tokenize(src: &str) -> Result<Vec<Spanned>, SyntaxError> {
    let mut out = Vec::new();
    let mut chars = src.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut ident = String::new();
            while let Some(&(_, c)) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' || c == '\'' {
                    ident.push(c);
                    chars.next();
                } else {
                    break;
                }
            }
            let tok = match ident.as_str() {
                "Box" => Tok::Box,
                "Dia" => Tok::Dia,
                "K" => Tok::K,
                "E" => Tok::E,
                "true" => Tok::True,
                "false" => Tok::False,
                _ => Tok::Ident(ident),
            };
            out.push((tok, pos));
            continue;
        }
        if c.is_ascii_digit() {
            let mut n: usize = 0;
            while let Some(&(_, c)) = chars.peek() {
                if let Some(d) = c.to_digit(10) {
                    n = n
                        .checked_mul(10)
                        .and_then(|n| n.checked_add(d as usize))
                        .ok_or_else(|| SyntaxError::new(pos, "integer too large", vec![]))?;
                    chars.next();
                } else {
                    break;
                }
            }
            out.push((Tok::Int(n), pos));
            continue;
        }
        chars.next();
        let tok = match c {
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            '&' | '∧' => Tok::Amp,
            '|' | '∨' => Tok::Pipe,
            '~' | '¬' => Tok::Tilde,
            ':' => Tok::Colon,
            '!' => Tok::Bang,
            '*' | '×' => Tok::Star,
            '+' => Tok::Plus,
            '□' => Tok::Box,
            '◇' => Tok::Dia,
            '→' => Tok::Arrow,
            '↔' => Tok::Iff,
            '⊤' => Tok::True,
            '⊥' => Tok::False,
            '-' => {
                if matches!(chars.peek(), Some(&(_, '>'))) {
                    chars.next();
                    Tok::Arrow
                } else {
                    return Err(SyntaxError::new(pos, "`-`", vec!["`->`".into()]));
                }
            }
            '<' => {
                let ok = matches!(chars.next(), Some((_, '-')))
                    && matches!(chars.next(), Some((_, '>')));
                if !ok {
                    return Err(SyntaxError::new(pos, "`<`", vec!["`<->`".into()]));
                }
                Tok::Iff
            }
            other => {
                return Err(SyntaxError::new(
                    pos,
                    format!("character `{other}`"),
                    vec![],
                ));
            }
        };
        out.push((tok, pos));
    }
    out.push((Tok::Eof, src.len()));
    Ok(out)
}
