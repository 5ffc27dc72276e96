//! Recursive-descent parser for ODE and expression input.
//!
//! Grammar:
//!   ode    := ("y''" | "y'") "=" expr
//!   expr   := term (('+'|'-') term)*
//!   term   := factor (('*'|'/') factor)*
//!   factor := base ('^' int)?
//!   base   := 'x' | 'y' | "y'" | rational | '(' expr ')' | '-' factor
//!
//! `y1` is accepted as a synonym for `y'` so the input survives shells
//! that eat quotes. Decimal literals convert exactly (0.5 -> 1/2).

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;

use crate::ode::{Foode, OdeInput, Soode};
use crate::poly::Var;
use crate::rat::{rat_from_decimal, Rat};
use crate::ratfun::RatFun;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedEnd,
    UnexpectedToken(String),
    NonIntegerExponent,
    UnsupportedExpression(String),
    DivisionByZero,
    MissingEquation,
}

/// Syntax or semantic error with a byte position into the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub kind: ParseErrorKind,
}

impl core::fmt::Display for ParseError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match &self.kind {
            ParseErrorKind::UnexpectedChar(c) => {
                write!(f, "unexpected character '{}' at position {}", c, self.pos)
            }
            ParseErrorKind::UnexpectedEnd => write!(f, "unexpected end of input"),
            ParseErrorKind::UnexpectedToken(t) => {
                write!(f, "unexpected '{}' at position {}", t, self.pos)
            }
            ParseErrorKind::NonIntegerExponent => {
                write!(f, "exponent at position {} must be an integer literal", self.pos)
            }
            ParseErrorKind::UnsupportedExpression(what) => {
                write!(f, "unsupported expression '{}' at position {}", what, self.pos)
            }
            ParseErrorKind::DivisionByZero => {
                write!(f, "division by zero at position {}", self.pos)
            }
            ParseErrorKind::MissingEquation => {
                write!(f, "expected \"y'' = ...\" or \"y' = ...\"")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ParseError {}

/// Expression tree as parsed, before normalization into a `RatFun`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprAst {
    Number(Rat),
    Variable(Var),
    Add(Box<ExprAst>, Box<ExprAst>),
    Sub(Box<ExprAst>, Box<ExprAst>),
    Mul(Box<ExprAst>, Box<ExprAst>),
    Div(Box<ExprAst>, Box<ExprAst>),
    Pow(Box<ExprAst>, i64),
    Neg(Box<ExprAst>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(Rat),
    Var(Var),
    DoublePrime, // y''
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LPar,
    RPar,
    Eq,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                out.push((i, Tok::Minus));
                i += 1;
            }
            '*' => {
                out.push((i, Tok::Star));
                i += 1;
            }
            '/' => {
                out.push((i, Tok::Slash));
                i += 1;
            }
            '^' => {
                out.push((i, Tok::Caret));
                i += 1;
            }
            '(' => {
                out.push((i, Tok::LPar));
                i += 1;
            }
            ')' => {
                out.push((i, Tok::RPar));
                i += 1;
            }
            '=' => {
                out.push((i, Tok::Eq));
                i += 1;
            }
            'x' => {
                out.push((i, Tok::Var(Var::X)));
                i += 1;
            }
            'y' => {
                let start = i;
                i += 1;
                if i + 1 < bytes.len() && bytes[i] == b'\'' && bytes[i + 1] == b'\'' {
                    out.push((start, Tok::DoublePrime));
                    i += 2;
                } else if i < bytes.len() && bytes[i] == b'\'' {
                    out.push((start, Tok::Var(Var::Yp)));
                    i += 1;
                } else if i < bytes.len() && bytes[i] == b'1' {
                    out.push((start, Tok::Var(Var::Yp)));
                    i += 1;
                } else {
                    out.push((start, Tok::Var(Var::Y)));
                }
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'.') {
                    i += 1;
                }
                let lit = &text[start..i];
                let value = rat_from_decimal(lit).ok_or(ParseError {
                    pos: start,
                    kind: ParseErrorKind::UnsupportedExpression(String::from(lit)),
                })?;
                out.push((start, Tok::Num(value)));
            }
            _ if c.is_ascii_alphabetic() => {
                // Scan the identifier to produce a readable error (sin, exp...).
                let start = i;
                while i < bytes.len() && (bytes[i] as char).is_ascii_alphanumeric() {
                    i += 1;
                }
                return Err(ParseError {
                    pos: start,
                    kind: ParseErrorKind::UnsupportedExpression(String::from(&text[start..i])),
                });
            }
            _ => {
                return Err(ParseError {
                    pos: i,
                    kind: ParseErrorKind::UnexpectedChar(c),
                })
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError { pos: self.here(), kind }
    }

    fn unexpected(&self) -> ParseError {
        match self.peek() {
            None => self.err(ParseErrorKind::UnexpectedEnd),
            Some(t) => self.err(ParseErrorKind::UnexpectedToken(alloc::format!("{t:?}"))),
        }
    }

    fn expr(&mut self) -> Result<ExprAst, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let rhs = self.term()?;
                    lhs = ExprAst::Add(Box::new(lhs), Box::new(rhs));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let rhs = self.term()?;
                    lhs = ExprAst::Sub(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<ExprAst, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    let rhs = self.factor()?;
                    lhs = ExprAst::Mul(Box::new(lhs), Box::new(rhs));
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let rhs = self.factor()?;
                    lhs = ExprAst::Div(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<ExprAst, ParseError> {
        let base = self.base()?;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            let exp_pos = self.here();
            let negative = if let Some(Tok::Minus) = self.peek() {
                self.bump();
                true
            } else {
                false
            };
            match self.bump() {
                Some(Tok::Num(n)) => {
                    if !num_traits::One::is_one(n.denom()) {
                        return Err(ParseError {
                            pos: exp_pos,
                            kind: ParseErrorKind::NonIntegerExponent,
                        });
                    }
                    let mut e: i64 = num_traits::ToPrimitive::to_i64(n.numer()).ok_or(ParseError {
                        pos: exp_pos,
                        kind: ParseErrorKind::NonIntegerExponent,
                    })?;
                    if negative {
                        e = -e;
                    }
                    Ok(ExprAst::Pow(Box::new(base), e))
                }
                _ => Err(ParseError {
                    pos: exp_pos,
                    kind: ParseErrorKind::NonIntegerExponent,
                }),
            }
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<ExprAst, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.bump();
                Ok(ExprAst::Number(n))
            }
            Some(Tok::Var(v)) => {
                self.bump();
                Ok(ExprAst::Variable(v))
            }
            Some(Tok::LPar) => {
                self.bump();
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RPar) => Ok(inner),
                    _ => Err(self.err(ParseErrorKind::UnexpectedToken(String::from(")")))),
                }
            }
            Some(Tok::Minus) => {
                self.bump();
                let f = self.factor()?;
                Ok(ExprAst::Neg(Box::new(f)))
            }
            _ => Err(self.unexpected()),
        }
    }
}

/// Evaluate a parse tree into a reduced rational function.
pub fn ast_to_ratfun(ast: &ExprAst) -> Result<RatFun, ParseError> {
    match ast {
        ExprAst::Number(n) => Ok(RatFun::constant(n.clone())),
        ExprAst::Variable(v) => Ok(RatFun::var(*v)),
        ExprAst::Add(a, b) => Ok(&ast_to_ratfun(a)? + &ast_to_ratfun(b)?),
        ExprAst::Sub(a, b) => Ok(&ast_to_ratfun(a)? - &ast_to_ratfun(b)?),
        ExprAst::Mul(a, b) => Ok(&ast_to_ratfun(a)? * &ast_to_ratfun(b)?),
        ExprAst::Div(a, b) => {
            let den = ast_to_ratfun(b)?;
            if den.is_zero() {
                return Err(ParseError {
                    pos: 0,
                    kind: ParseErrorKind::DivisionByZero,
                });
            }
            Ok(&ast_to_ratfun(a)? / &den)
        }
        ExprAst::Pow(a, e) => {
            let base = ast_to_ratfun(a)?;
            if *e < 0 && base.is_zero() {
                return Err(ParseError {
                    pos: 0,
                    kind: ParseErrorKind::DivisionByZero,
                });
            }
            Ok(base.pow(*e).expect("nonzero base checked"))
        }
        ExprAst::Neg(a) => Ok(-&ast_to_ratfun(a)?),
    }
}

/// Parse a bare expression into a reduced rational function.
pub fn parse_expr(text: &str) -> Result<RatFun, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
    };
    let ast = p.expr()?;
    if p.peek().is_some() {
        return Err(p.unexpected());
    }
    ast_to_ratfun(&ast)
}

/// Parse `y'' = expr` or `y' = expr` into a canonical equation.
pub fn parse_ode(text: &str) -> Result<OdeInput, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
    };
    let order = match p.bump() {
        Some(Tok::DoublePrime) => 2,
        Some(Tok::Var(Var::Yp)) => 1,
        _ => {
            return Err(ParseError {
                pos: 0,
                kind: ParseErrorKind::MissingEquation,
            })
        }
    };
    match p.bump() {
        Some(Tok::Eq) => {}
        _ => {
            return Err(ParseError {
                pos: p.here(),
                kind: ParseErrorKind::MissingEquation,
            })
        }
    }
    let ast = p.expr()?;
    if p.peek().is_some() {
        return Err(p.unexpected());
    }
    let rhs = ast_to_ratfun(&ast)?;
    if order == 2 {
        Ok(OdeInput::Second(Soode::from_phi(&rhs)))
    } else {
        if rhs.contains_var(Var::Yp) {
            return Err(ParseError {
                pos: 0,
                kind: ParseErrorKind::UnsupportedExpression(String::from(
                    "y' on the right-hand side of a first-order equation",
                )),
            });
        }
        Ok(OdeInput::First(Foode::new(
            rhs.num().clone(),
            rhs.den().clone(),
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;
    use crate::rat::{rat_frac, rat_i64};

    fn x() -> Poly {
        Poly::var(Var::X)
    }
    fn y() -> Poly {
        Poly::var(Var::Y)
    }
    fn yp() -> Poly {
        Poly::var(Var::Yp)
    }

    #[test]
    fn harmonic_oscillator() {
        let ode = parse_ode("y'' = -y").unwrap();
        match ode {
            OdeInput::Second(s) => {
                assert_eq!(s.m(), &-&y());
                assert!(s.n().is_one());
            }
            _ => panic!("expected second order"),
        }
    }

    #[test]
    fn fluid_sphere_equation() {
        let ode = parse_ode("y'' = (x^2*y'^2 + y^2 - 1)/(x^2*y)").unwrap();
        match ode {
            OdeInput::Second(s) => {
                let m = &(&x().pow(2) * &yp().pow(2)) + &(&y().pow(2) - &Poly::one());
                let n = &x().pow(2) * &y();
                assert_eq!(s.m(), &m);
                assert_eq!(s.n(), &n);
            }
            _ => panic!("expected second order"),
        }
    }

    #[test]
    fn gcd_and_sign_canonicalization() {
        let ode = parse_ode("y'' = (2*y)/(2)").unwrap();
        match ode {
            OdeInput::Second(s) => {
                assert_eq!(s.m(), &y());
                assert!(s.n().is_one());
            }
            _ => panic!(),
        }
        // Negative denominator flips into the numerator.
        let ode = parse_ode("y' = y/(-x)").unwrap();
        match ode {
            OdeInput::First(f) => {
                assert_eq!(f.m(), &-&y());
                assert_eq!(f.n(), &x());
            }
            _ => panic!(),
        }
    }

    #[test]
    fn y1_synonym_and_decimals() {
        let a = parse_expr("y1^2 + 0.5*x").unwrap();
        let b = parse_expr("y'^2 + 1/2*x").unwrap();
        assert_eq!(a, b);
        assert_eq!(
            parse_expr("0.25").unwrap(),
            RatFun::constant(rat_frac(1, 4))
        );
    }

    #[test]
    fn negative_exponents_fold_into_division() {
        let a = parse_expr("x^-2").unwrap();
        let b = parse_expr("1/x^2").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn error_positions() {
        let e = parse_ode("y'' = sin(x)").unwrap_err();
        assert_eq!(e.pos, 6);
        assert!(matches!(e.kind, ParseErrorKind::UnsupportedExpression(_)));
        let e = parse_ode("y'' = x +").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::UnexpectedEnd));
        let e = parse_expr("x^y").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::NonIntegerExponent));
        let e = parse_expr("x^(1/2)").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::NonIntegerExponent));
    }

    #[test]
    fn unary_minus_binds_factor() {
        // -x^2 parses as -(x^2)
        let a = parse_expr("-x^2").unwrap();
        assert_eq!(a, RatFun::from_poly(-&x().pow(2)));
        // 2*-x is a syntax error under the grammar... actually '-' factor
        // is a valid base, so it parses as 2*(-x).
        let b = parse_expr("2*-x").unwrap();
        assert_eq!(b, RatFun::from_poly(x().scale(&rat_i64(-2))));
    }

    #[test]
    fn first_order_rejects_yp() {
        assert!(parse_ode("y' = y'").is_err());
        assert!(parse_ode("y' = y/x").is_ok());
    }
}
