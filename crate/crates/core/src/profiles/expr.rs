// SPDX-License-Identifier: Apache-2.0

//! Expression trees over the single variable `t`.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := ('-' | '+') unary | power
//! power   := primary ('^' unary)?
//! primary := number | 't' | func '(' expr ')' | '(' expr ')'
//! ```
//!
//! `^` is right associative and binds tighter than unary minus, so `-t^2`
//! is `-(t^2)` and `2^-1` is `0.5`.

use std::fmt;

use super::jet::Jet;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Cosh,
    Sinh,
    Tanh,
    Exp,
    Ln,
    Sin,
    Cos,
    Sqrt,
}

impl Func {
    fn from_name(s: &str) -> Option<Func> {
        Some(match s {
            "cosh" => Func::Cosh,
            "sinh" => Func::Sinh,
            "tanh" => Func::Tanh,
            "exp" => Func::Exp,
            "ln" => Func::Ln,
            "sin" => Func::Sin,
            "cos" => Func::Cos,
            "sqrt" => Func::Sqrt,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Func::Cosh => "cosh",
            Func::Sinh => "sinh",
            Func::Tanh => "tanh",
            Func::Exp => "exp",
            Func::Ln => "ln",
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Sqrt => "sqrt",
        }
    }

    fn apply(self, a: &Jet) -> Result<Jet> {
        Ok(match self {
            Func::Cosh => a.sinh_cosh().1,
            Func::Sinh => a.sinh_cosh().0,
            Func::Tanh => a.tanh(),
            Func::Exp => a.exp(),
            Func::Ln => a.ln()?,
            Func::Sin => a.sin_cos().0,
            Func::Cos => a.sin_cos().1,
            Func::Sqrt => a.sqrt()?,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(f64),
    Var,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
    Call(Func, Box<Expr>),
}

impl Expr {
    /// Forward-mode evaluation: returns the Taylor jet of the expression at `t`.
    pub fn jet(&self, t: f64) -> Result<Jet> {
        let out = match self {
            Expr::Num(v) => Jet::constant(*v),
            Expr::Var => Jet::variable(t),
            Expr::Neg(a) => -a.jet(t)?,
            Expr::Add(a, b) => a.jet(t)? + b.jet(t)?,
            Expr::Sub(a, b) => a.jet(t)? - b.jet(t)?,
            Expr::Mul(a, b) => a.jet(t)? * b.jet(t)?,
            Expr::Div(a, b) => a.jet(t)?.checked_div(&b.jet(t)?)?,
            Expr::Pow(a, b) => {
                let base = a.jet(t)?;
                match b.constant_value() {
                    Some(e) if e.fract() == 0.0 && e.abs() <= 64.0 => base.powi(e as i32)?,
                    _ => base.pow(&b.jet(t)?)?,
                }
            }
            Expr::Call(f, a) => f.apply(&a.jet(t)?)?,
        };
        if !out.is_finite() {
            return Err(Error::Domain(format!("non-finite value of {self} at t = {t}")));
        }
        Ok(out)
    }

    /// Value if the expression does not depend on `t`.
    pub fn constant_value(&self) -> Option<f64> {
        let p = self.polynomial()?;
        if p.iter().skip(1).all(|c| *c == 0.0) {
            Some(p[0])
        } else {
            None
        }
    }

    /// Coefficients in ascending powers of `t` if the tree is a polynomial.
    pub fn polynomial(&self) -> Option<Vec<f64>> {
        const MAX_DEGREE: usize = 16;
        fn trim(mut v: Vec<f64>) -> Vec<f64> {
            while v.len() > 1 && *v.last().unwrap() == 0.0 {
                v.pop();
            }
            v
        }
        fn add(a: &[f64], b: &[f64], sign: f64) -> Vec<f64> {
            let n = a.len().max(b.len());
            (0..n)
                .map(|i| a.get(i).copied().unwrap_or(0.0) + sign * b.get(i).copied().unwrap_or(0.0))
                .collect()
        }
        fn mul(a: &[f64], b: &[f64]) -> Option<Vec<f64>> {
            if a.len() + b.len() - 1 > MAX_DEGREE + 1 {
                return None;
            }
            let mut out = vec![0.0; a.len() + b.len() - 1];
            for (i, x) in a.iter().enumerate() {
                for (j, y) in b.iter().enumerate() {
                    out[i + j] += x * y;
                }
            }
            Some(out)
        }
        let v = match self {
            Expr::Num(v) => vec![*v],
            Expr::Var => vec![0.0, 1.0],
            Expr::Neg(a) => a.polynomial()?.iter().map(|c| -c).collect(),
            Expr::Add(a, b) => add(&a.polynomial()?, &b.polynomial()?, 1.0),
            Expr::Sub(a, b) => add(&a.polynomial()?, &b.polynomial()?, -1.0),
            Expr::Mul(a, b) => mul(&a.polynomial()?, &b.polynomial()?)?,
            Expr::Div(a, b) => {
                let d = trim(b.polynomial()?);
                if d.len() != 1 || d[0] == 0.0 {
                    return None;
                }
                a.polynomial()?.iter().map(|c| c / d[0]).collect()
            }
            Expr::Pow(a, b) => {
                let e = trim(b.polynomial()?);
                if e.len() != 1 || e[0].fract() != 0.0 || e[0] < 0.0 || e[0] > MAX_DEGREE as f64 {
                    return None;
                }
                let base = a.polynomial()?;
                let mut acc = vec![1.0];
                for _ in 0..e[0] as usize {
                    acc = mul(&acc, &base)?;
                }
                acc
            }
            Expr::Call(f, a) => {
                let arg = trim(a.polynomial()?);
                if arg.len() != 1 {
                    return None;
                }
                let v = f.apply(&Jet::constant(arg[0])).ok()?.value();
                vec![v]
            }
        };
        Some(trim(v))
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(v) => write!(f, "{v}"),
            Expr::Var => write!(f, "t"),
            Expr::Neg(a) => write!(f, "(-{a})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "({a} * {b})"),
            Expr::Div(a, b) => write!(f, "({a} / {b})"),
            Expr::Pow(a, b) => write!(f, "({a} ^ {b})"),
            Expr::Call(func, a) => write!(f, "{}({a})", func.name()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    Ident(String),
    Op(char),
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let ch = bytes[i] as char;
        let start = i;
        if ch.is_ascii_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() || ch == '.' {
            while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'.') {
                i += 1;
            }
            // optional exponent, e.g. 1e-3
            if i < bytes.len() && (bytes[i] == b'e' || bytes[i] == b'E') {
                let mut j = i + 1;
                if j < bytes.len() && (bytes[j] == b'+' || bytes[j] == b'-') {
                    j += 1;
                }
                if j < bytes.len() && bytes[j].is_ascii_digit() {
                    while j < bytes.len() && bytes[j].is_ascii_digit() {
                        j += 1;
                    }
                    i = j;
                }
            }
            let text = &src[start..i];
            let v: f64 = text.parse().map_err(|_| Error::Syntax {
                pos: start,
                msg: format!("malformed number '{text}'"),
            })?;
            out.push((Tok::Num(v), start));
        } else if ch.is_ascii_alphabetic() || ch == '_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(src[start..i].to_string()), start));
        } else {
            let tok = match ch {
                '+' | '-' | '*' | '/' | '^' => Tok::Op(ch),
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                _ => {
                    return Err(Error::Syntax {
                        pos: start,
                        msg: format!("unexpected character '{ch}'"),
                    })
                }
            };
            out.push((tok, start));
            i += ch.len_utf8();
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(_, p)| *p)
    }

    fn fail<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos(), msg: msg.into() })
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        while let Some(Tok::Op(c @ ('+' | '-'))) = self.peek().cloned() {
            self.at += 1;
            let rhs = self.term()?;
            lhs = if c == '+' {
                Expr::Add(Box::new(lhs), Box::new(rhs))
            } else {
                Expr::Sub(Box::new(lhs), Box::new(rhs))
            };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while let Some(Tok::Op(c @ ('*' | '/'))) = self.peek().cloned() {
            self.at += 1;
            let rhs = self.unary()?;
            lhs = if c == '*' {
                Expr::Mul(Box::new(lhs), Box::new(rhs))
            } else {
                Expr::Div(Box::new(lhs), Box::new(rhs))
            };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(Tok::Op('-')) => {
                self.at += 1;
                Ok(Expr::Neg(Box::new(self.unary()?)))
            }
            Some(Tok::Op('+')) => {
                self.at += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.primary()?;
        if let Some(Tok::Op('^')) = self.peek() {
            self.at += 1;
            let exp = self.unary()?;
            return Ok(Expr::Pow(Box::new(base), Box::new(exp)));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Expr> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Num(v)) => {
                self.at += 1;
                Ok(Expr::Num(v))
            }
            Some(Tok::Ident(name)) => {
                self.at += 1;
                if name == "t" {
                    return Ok(Expr::Var);
                }
                let Some(func) = Func::from_name(&name) else {
                    return Err(Error::UnknownIdentifier { name, pos });
                };
                if self.peek() != Some(&Tok::LParen) {
                    return self.fail(format!("expected '(' after {name}"));
                }
                self.at += 1;
                let arg = self.expr()?;
                self.close()?;
                Ok(Expr::Call(func, Box::new(arg)))
            }
            Some(Tok::LParen) => {
                self.at += 1;
                let inner = self.expr()?;
                self.close()?;
                Ok(inner)
            }
            Some(tok) => self.fail(format!("unexpected {}", describe(&tok))),
            None => self.fail("unexpected end of input"),
        }
    }

    fn close(&mut self) -> Result<()> {
        if self.peek() == Some(&Tok::RParen) {
            self.at += 1;
            Ok(())
        } else {
            self.fail("expected ')'")
        }
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Num(v) => format!("number {v}"),
        Tok::Ident(s) => format!("identifier {s}"),
        Tok::Op(c) => format!("'{c}'"),
        Tok::LParen => "'('".into(),
        Tok::RParen => "')'".into(),
    }
}

/// Parse an expression in `t`.
pub fn parse(src: &str) -> Result<Expr> {
    if src.trim().is_empty() {
        return Err(Error::Empty);
    }
    let toks = tokenize(src)?;
    let mut p = Parser { toks, at: 0, end: src.len() };
    let e = p.expr()?;
    if p.at != p.toks.len() {
        let (tok, _) = &p.toks[p.at];
        return p.fail(format!("unexpected {} after expression", describe(tok)));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval(s: &str, t: f64) -> f64 {
        parse(s).unwrap().jet(t).unwrap().value()
    }

    #[test]
    fn precedence() {
        assert_eq!(eval("-t^2", 3.0), -9.0);
        assert_eq!(eval("2^3^2", 0.0), 512.0);
        assert_eq!(eval("2^-1", 0.0), 0.5);
        assert_eq!(eval("1 + 2*3 - 4/2", 0.0), 5.0);
        assert_eq!(eval("(1+2)*3", 0.0), 9.0);
        assert_eq!(eval("1e-3*1e3", 0.0), 1.0);
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse("  "), Err(Error::Empty));
        assert_eq!(
            parse("cosh(q)"),
            Err(Error::UnknownIdentifier { name: "q".into(), pos: 5 })
        );
        match parse("1 + * 2") {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        match parse("cosh(t") {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse("t $ 2"), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse("t t"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn unknown_identifier_message() {
        let msg = parse("cosh(q)").unwrap_err().to_string();
        assert!(msg.contains("syntax error"));
        assert!(msg.contains("unknown identifier q"));
    }

    #[test]
    fn polynomial_reduction() {
        assert_eq!(parse("1 + 2*t + 3*t^2").unwrap().polynomial(), Some(vec![1.0, 2.0, 3.0]));
        assert_eq!(parse("(t+1)^2/2").unwrap().polynomial(), Some(vec![0.5, 1.0, 0.5]));
        assert_eq!(parse("exp(0) + t").unwrap().polynomial(), Some(vec![1.0, 1.0]));
        assert_eq!(parse("cosh(t)").unwrap().polynomial(), None);
        assert_eq!(parse("1/t").unwrap().polynomial(), None);
        assert_eq!(parse("t^t").unwrap().polynomial(), None);
    }

    #[test]
    fn real_power_uses_log_route() {
        let j = parse("t^0.5").unwrap().jet(4.0).unwrap();
        assert!((j.value() - 2.0).abs() < 1e-15);
        assert!((j.derivative(1).unwrap() - 0.25).abs() < 1e-15);
        assert!(parse("t^0.5").unwrap().jet(-1.0).is_err());
        // integer powers work for negative bases
        assert_eq!(parse("t^3").unwrap().jet(-2.0).unwrap().value(), -8.0);
    }

    #[test]
    fn domain_failures_are_errors() {
        assert!(parse("ln(t)").unwrap().jet(0.0).is_err());
        assert!(parse("1/(t-1)").unwrap().jet(1.0).is_err());
        assert!(parse("exp(exp(t))").unwrap().jet(10.0).is_err());
    }
}
