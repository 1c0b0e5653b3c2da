//! Parser for polynomial expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' | '**') natural | base
//! base   := name | integer | '(' expr ')' | '-' factor
//! ```

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::funceq::FuncEq;
use crate::poly::{MPoly, Var};

const MAX_EXPONENT: u32 = 4096;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Name(String),
    Plus,
    Minus,
    Star,
    Pow,
    Slash,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push((start, Tok::Num(text[start..i].parse().unwrap())));
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Name(text[start..i].to_string())));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' if bytes.get(i + 1) == Some(&b'*') => {
                i += 1;
                Tok::Pow
            }
            '*' => Tok::Star,
            '^' => Tok::Pow,
            '/' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => {
                let ch = text[i..].chars().next().unwrap();
                return Err(Error::SyntaxError {
                    pos: i,
                    msg: format!("unexpected character {ch:?}"),
                });
            }
        };
        i += 1;
        out.push((start, tok));
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    allowed: &'a [Var],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(_, t)| t.clone());
        self.at += 1;
        t
    }

    fn syntax<T>(&self, msg: &str) -> Result<T> {
        Err(Error::SyntaxError {
            pos: self.pos(),
            msg: msg.to_string(),
        })
    }

    fn expr(&mut self) -> Result<MPoly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = &acc * &self.factor()?;
                }
                Some(Tok::Slash) => {
                    return Err(Error::NonPolynomial {
                        pos: self.pos(),
                        msg: "division".into(),
                    });
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<MPoly> {
        if self.peek() == Some(&Tok::Minus) {
            self.bump();
            return Ok(-&self.factor()?);
        }
        let base = self.base()?;
        if self.peek() != Some(&Tok::Pow) {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Num(n)) => {
                let e: u32 = n
                    .try_into()
                    .ok()
                    .filter(|&e| e <= MAX_EXPONENT)
                    .ok_or_else(|| Error::SyntaxError {
                        pos,
                        msg: format!("exponent larger than {MAX_EXPONENT}"),
                    })?;
                Ok(base.pow(e))
            }
            Some(Tok::Minus) | Some(Tok::Name(_)) | Some(Tok::LParen) => {
                Err(Error::NonPolynomial {
                    pos,
                    msg: "exponent is not a natural number".into(),
                })
            }
            _ => Err(Error::SyntaxError {
                pos,
                msg: "expected an exponent".into(),
            }),
        }
    }

    fn base(&mut self) -> Result<MPoly> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Num(n)) => Ok(MPoly::constant(n)),
            Some(Tok::Name(name)) => {
                match Var::from_name(&name).filter(|v| self.allowed.contains(v)) {
                    Some(v) => Ok(MPoly::var(v)),
                    None => Err(Error::UnknownVariable(name)),
                }
            }
            Some(Tok::LParen) => {
                let e = self.expr()?;
                if self.bump() != Some(Tok::RParen) {
                    self.at -= 1;
                    return self.syntax("expected ')'");
                }
                Ok(e)
            }
            Some(Tok::Minus) => {
                self.at -= 1;
                self.factor()
            }
            Some(_) => Err(Error::SyntaxError {
                pos,
                msg: "expected a number, variable or '('".into(),
            }),
            None => Err(Error::SyntaxError {
                pos,
                msg: "unexpected end of input".into(),
            }),
        }
    }
}

fn parse_with(text: &str, allowed: &[Var]) -> Result<MPoly> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: text.len(),
        allowed,
    };
    let e = p.expr()?;
    if p.at < p.toks.len() {
        if p.peek() == Some(&Tok::Slash) {
            return Err(Error::NonPolynomial {
                pos: p.pos(),
                msg: "division".into(),
            });
        }
        return p.syntax("unexpected trailing input");
    }
    Ok(e)
}

/// Parses a polynomial over all variable names (f, z, psi, g, x, y).
pub fn parse_poly(text: &str) -> Result<MPoly> {
    parse_with(text, &Var::ALL)
}

/// Parses a functional equation in psi, g, x, y.
pub fn parse_equation(text: &str) -> Result<FuncEq> {
    FuncEq::new(parse_with(text, &[Var::Psi, Var::G, Var::X, Var::Y])?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: Var) -> MPoly {
        MPoly::var(x)
    }

    #[test]
    fn tutte_string() {
        let eq = parse_equation("y**2*psi**2+(x+x*g*y-y-y**2)*psi+y-x*g").unwrap();
        let (psi, g, x, y) = (v(Var::Psi), v(Var::G), v(Var::X), v(Var::Y));
        let lin = &(&(&x + &(&(&x * &g) * &y)) - &y) - &(&y * &y);
        let q = &(&(&(&y * &y) * &(&psi * &psi)) + &(&lin * &psi)) + &(&y - &(&x * &g));
        assert_eq!(eq.q(), &q);
        assert_eq!(
            parse_equation("y^2*psi^2+(x+x*g*y-y-y^2)*psi+y-x*g").unwrap(),
            eq
        );
    }

    #[test]
    fn whitespace_and_unary_minus() {
        let eq = parse_equation(" psi - 1 - x*( y*psi + g ) ").unwrap();
        let (psi, g, x, y) = (v(Var::Psi), v(Var::G), v(Var::X), v(Var::Y));
        let expected = &(&(&psi - &MPoly::one()) - &(&(&x * &y) * &psi)) - &(&x * &g);
        assert_eq!(eq.q(), &expected);
        assert_eq!(parse_poly("-x^2").unwrap(), -&(&x * &x));
        assert_eq!(parse_poly("--x").unwrap(), x);
    }

    #[test]
    fn errors() {
        assert_eq!(
            parse_equation("psi + z"),
            Err(Error::UnknownVariable("z".into()))
        );
        assert_eq!(
            parse_equation("psi + w1"),
            Err(Error::UnknownVariable("w1".into()))
        );
        assert!(matches!(
            parse_equation("psi/x"),
            Err(Error::NonPolynomial { pos: 3, .. })
        ));
        assert!(matches!(
            parse_equation("psi^-1"),
            Err(Error::NonPolynomial { .. })
        ));
        assert!(matches!(
            parse_equation("psi^y"),
            Err(Error::NonPolynomial { .. })
        ));
        assert!(matches!(
            parse_equation("psi + (x"),
            Err(Error::SyntaxError { pos: 8, .. })
        ));
        assert!(matches!(
            parse_equation("psi x"),
            Err(Error::SyntaxError { pos: 4, .. })
        ));
        assert!(matches!(
            parse_equation("psi $ x"),
            Err(Error::SyntaxError { pos: 4, .. })
        ));
        assert!(matches!(parse_equation(""), Err(Error::SyntaxError { .. })));
        assert!(matches!(
            parse_equation("x + y"),
            Err(Error::InvalidEquation(_))
        ));
    }

    #[test]
    fn display_round_trip() {
        let eq = parse_equation("y**2*psi**2+(x+x*g*y-y-y**2)*psi+y-x*g").unwrap();
        assert_eq!(parse_equation(&eq.to_string()).unwrap(), eq);
    }
}
