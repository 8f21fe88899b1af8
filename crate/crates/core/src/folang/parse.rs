//! Lexer and recursive-descent parser for the sentence grammar.

use super::{FolangError, Formula, Term};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Number(i64),
    Star,
    Caret,
    Minus,
    Eq,
    Ne,
    And,
    Or,
    Not,
    Arrow,
    Iff,
    LParen,
    RParen,
    Dot,
    ForAll,
    Exists,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, FolangError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let pos = i;
        match c {
            ' ' | '\t' | '\r' | '\n' => i += 1,
            '#' => {
                while i < bytes.len() && bytes[i] != b'\n' {
                    i += 1;
                }
            }
            '*' => {
                out.push((Tok::Star, pos));
                i += 1;
            }
            '^' => {
                out.push((Tok::Caret, pos));
                i += 1;
            }
            '=' => {
                out.push((Tok::Eq, pos));
                i += 1;
            }
            '&' => {
                out.push((Tok::And, pos));
                i += 1;
            }
            '|' => {
                out.push((Tok::Or, pos));
                i += 1;
            }
            '(' => {
                out.push((Tok::LParen, pos));
                i += 1;
            }
            ')' => {
                out.push((Tok::RParen, pos));
                i += 1;
            }
            '.' => {
                out.push((Tok::Dot, pos));
                i += 1;
            }
            '!' => {
                if bytes.get(i + 1) == Some(&b'=') {
                    out.push((Tok::Ne, pos));
                    i += 2;
                } else {
                    out.push((Tok::Not, pos));
                    i += 1;
                }
            }
            '-' => {
                if bytes.get(i + 1) == Some(&b'>') {
                    out.push((Tok::Arrow, pos));
                    i += 2;
                } else {
                    out.push((Tok::Minus, pos));
                    i += 1;
                }
            }
            '<' => {
                if bytes.get(i + 1) == Some(&b'-') && bytes.get(i + 2) == Some(&b'>') {
                    out.push((Tok::Iff, pos));
                    i += 3;
                } else {
                    return Err(FolangError::Syntax {
                        pos,
                        msg: "expected '<->'".into(),
                    });
                }
            }
            'A' => {
                out.push((Tok::ForAll, pos));
                i += 1;
            }
            'E' => {
                out.push((Tok::Exists, pos));
                i += 1;
            }
            'a'..='z' => {
                let start = i;
                i += 1;
                while i < bytes.len()
                    && (bytes[i].is_ascii_lowercase() || bytes[i].is_ascii_digit())
                {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), pos));
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: i64 = text[start..i].parse().map_err(|_| FolangError::Syntax {
                    pos,
                    msg: "integer literal too large".into(),
                })?;
                out.push((Tok::Number(n), pos));
            }
            other => {
                return Err(FolangError::Syntax {
                    pos,
                    msg: format!("unexpected character {other:?}"),
                })
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
    end: usize,
    scope: Vec<String>,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|&(_, p)| p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(t, _)| t.clone());
        self.at += 1;
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), FolangError> {
        if self.peek() == Some(&tok) {
            self.at += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected {what}")))
        }
    }

    fn err(&self, msg: String) -> FolangError {
        FolangError::Syntax {
            pos: self.pos(),
            msg,
        }
    }

    // iff := implies ('<->' implies)*
    fn formula(&mut self) -> Result<Formula, FolangError> {
        let mut lhs = self.implies()?;
        while self.peek() == Some(&Tok::Iff) {
            self.at += 1;
            let rhs = self.implies()?;
            lhs = Formula::Iff(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    // implies := or ('->' implies)?   (right associative)
    fn implies(&mut self) -> Result<Formula, FolangError> {
        let lhs = self.or()?;
        if self.peek() == Some(&Tok::Arrow) {
            self.at += 1;
            let rhs = self.implies()?;
            return Ok(Formula::Implies(Box::new(lhs), Box::new(rhs)));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Formula, FolangError> {
        let mut lhs = self.and()?;
        while self.peek() == Some(&Tok::Or) {
            self.at += 1;
            let rhs = self.and()?;
            lhs = Formula::Or(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Formula, FolangError> {
        let mut lhs = self.unary()?;
        while self.peek() == Some(&Tok::And) {
            self.at += 1;
            let rhs = self.unary()?;
            lhs = Formula::And(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, FolangError> {
        match self.peek() {
            Some(Tok::Not) => {
                self.at += 1;
                let inner = self.unary()?;
                Ok(Formula::Not(Box::new(inner)))
            }
            Some(Tok::ForAll) | Some(Tok::Exists) => self.quantified(),
            _ => self.atom(),
        }
    }

    // quantifier bodies extend as far right as possible
    fn quantified(&mut self) -> Result<Formula, FolangError> {
        let forall = match self.bump() {
            Some(Tok::ForAll) => true,
            Some(Tok::Exists) => false,
            _ => unreachable!(),
        };
        let name = match self.bump() {
            Some(Tok::Ident(name)) => name,
            _ => {
                self.at -= 1;
                return Err(self.err("expected a variable after the quantifier".into()));
            }
        };
        self.expect(Tok::Dot, "'.' after the quantified variable")?;
        self.scope.push(name.clone());
        let body = self.formula();
        self.scope.pop();
        let body = body?;
        Ok(if forall {
            Formula::ForAll(name, Box::new(body))
        } else {
            Formula::Exists(name, Box::new(body))
        })
    }

    // atom := term ('=' | '!=') term | '(' formula ')'
    fn atom(&mut self) -> Result<Formula, FolangError> {
        let save = self.at;
        match self.relation() {
            Ok(f) => Ok(f),
            Err(rel_err) => {
                if self.toks.get(save).map(|(t, _)| t) == Some(&Tok::LParen) {
                    self.at = save + 1;
                    let inner = self.formula()?;
                    self.expect(Tok::RParen, "')'")?;
                    Ok(inner)
                } else {
                    Err(rel_err)
                }
            }
        }
    }

    fn relation(&mut self) -> Result<Formula, FolangError> {
        let lhs = self.term()?;
        match self.bump() {
            Some(Tok::Eq) => {
                let rhs = self.term()?;
                Ok(Formula::Eq(lhs, rhs))
            }
            Some(Tok::Ne) => {
                let rhs = self.term()?;
                Ok(Formula::Not(Box::new(Formula::Eq(lhs, rhs))))
            }
            _ => {
                self.at -= 1;
                Err(self.err("expected '=' or '!='".into()))
            }
        }
    }

    // term := factor ('*' factor)*
    fn term(&mut self) -> Result<Term, FolangError> {
        let mut lhs = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.at += 1;
            let rhs = self.factor()?;
            lhs = Term::Mul(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    // factor := primary ('^' integer)*
    fn factor(&mut self) -> Result<Term, FolangError> {
        let mut base = self.primary()?;
        while self.peek() == Some(&Tok::Caret) {
            self.at += 1;
            let negative = if self.peek() == Some(&Tok::Minus) {
                self.at += 1;
                true
            } else {
                false
            };
            let k = match self.bump() {
                Some(Tok::Number(n)) => n,
                _ => {
                    self.at -= 1;
                    return Err(self.err("expected an integer exponent after '^'".into()));
                }
            };
            let k = if negative { -k } else { k };
            let k = i32::try_from(k).map_err(|_| self.err("exponent out of range".into()))?;
            base = if k == -1 {
                Term::Inv(Box::new(base))
            } else {
                Term::Pow(Box::new(base), k)
            };
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Term, FolangError> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Ident(name)) => {
                if !self.scope.iter().any(|s| s == &name) {
                    return Err(FolangError::UnboundVariable { name, pos });
                }
                Ok(Term::Var(name))
            }
            Some(Tok::Number(1)) => Ok(Term::One),
            Some(Tok::Number(_)) => Err(FolangError::Syntax {
                pos,
                msg: "the only constant is the identity 1".into(),
            }),
            Some(Tok::LParen) => {
                let inner = self.term()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            _ => {
                self.at -= 1;
                Err(self.err("expected a term".into()))
            }
        }
    }
}

/// Parse a sentence. Variables must be bound by a quantifier in scope;
/// printing the result and parsing it again yields the same AST.
pub fn parse_formula(text: &str) -> Result<Formula, FolangError> {
    let toks = lex(text)?;
    let mut parser = Parser {
        toks,
        at: 0,
        end: text.len(),
        scope: Vec::new(),
    };
    let f = parser.formula()?;
    if parser.at != parser.toks.len() {
        return Err(parser.err("trailing input after the sentence".into()));
    }
    Ok(f)
}
