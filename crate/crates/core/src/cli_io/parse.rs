//! Expression parser.
//!
//! ```text
//! element := term (("+" | "-") term)*
//! term    := coeff ("*")? factor (sep factor)* | coeff | factor (sep factor)*
//! sep     := "<>" | "*" | nothing
//! factor  := gen ("^" nat)?
//! gen     := "X(" int ")" | "t(" int ")" | "th" | "E(" int ")"
//! coeff   := "(" ratfunc ")" | nat ("/" nat)?
//! ratfunc := sum of products and quotients of nat, H and ( ratfunc ), with ^ nat
//! ```
//!
//! `X`, `t`, `th` are letters of `U`; `E(k)` is a generator of `Z` with
//! `E(0)` the Cartan one. One expression never mixes the two.

use std::fmt;

use crate::coeff::{Rational, RationalFunction};
use crate::error::{Error, Result};
use crate::uea::{normal_order, Generator, RawTerm, UeaElement};
use crate::zalg::{ZElement, ZGen};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algebra {
    U,
    Z,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Letter {
    U(Generator),
    Z(ZGen),
}

impl Letter {
    fn algebra(self) -> Algebra {
        match self {
            Letter::U(_) => Algebra::U,
            Letter::Z(_) => Algebra::Z,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub letter: Letter,
    pub exp: u32,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub negative: bool,
    pub coeff: Option<RationalFunction>,
    pub factors: Vec<Factor>,
    pub pos: Pos,
}

impl Term {
    fn signed_coeff(&self) -> RationalFunction {
        let c = self.coeff.clone().unwrap_or_else(RationalFunction::one);
        if self.negative {
            -c
        } else {
            c
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    pub terms: Vec<Term>,
}

impl Expr {
    /// The algebra named by the generators, `None` for a pure scalar.
    pub fn algebra(&self) -> Option<Algebra> {
        self.terms
            .iter()
            .flat_map(|t| &t.factors)
            .map(|f| f.letter.algebra())
            .next()
    }

    fn check_algebra(&self, want: Algebra) -> Result<()> {
        for f in self.terms.iter().flat_map(|t| &t.factors) {
            if f.letter.algebra() != want {
                let message = match want {
                    Algebra::U => "E(k) belongs to Z; use the z algebra or `project`",
                    Algebra::Z => "U letter in a Z expression; use the u algebra",
                };
                return Err(Error::Syntax {
                    line: f.pos.line,
                    column: f.pos.column,
                    message: message.into(),
                });
            }
        }
        Ok(())
    }

    /// Normal form in `U`; products are taken in the written order.
    pub fn to_uea(&self) -> Result<UeaElement> {
        self.check_algebra(Algebra::U)?;
        let raw: Vec<RawTerm> = self
            .terms
            .iter()
            .map(|t| {
                let mut letters = Vec::new();
                for f in &t.factors {
                    if let Letter::U(g) = f.letter {
                        letters.extend(std::iter::repeat_n(g, f.exp as usize));
                    }
                }
                RawTerm {
                    coeff: t.signed_coeff(),
                    ..RawTerm::word(&letters)
                }
            })
            .collect();
        Ok(normal_order(&raw))
    }

    /// Ordered form in `Z`; products are diamond products in the written
    /// order.
    pub fn to_z(&self) -> Result<ZElement> {
        self.check_algebra(Algebra::Z)?;
        let mut out = ZElement::zero();
        for t in &self.terms {
            let mut acc = ZElement::scalar(t.signed_coeff());
            for f in &t.factors {
                if let Letter::Z(g) = f.letter {
                    acc = acc.mul(&ZElement::gen(g).pow(f.exp));
                }
            }
            out = &out + &acc;
        }
        Ok(out)
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            match (i, t.negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let sep = match t.factors.first().map(|x| x.letter.algebra()) {
                Some(Algebra::Z) => " <> ",
                _ => " ",
            };
            let letters: Vec<String> = t
                .factors
                .iter()
                .map(|x| {
                    let tok = match x.letter {
                        Letter::U(g) => g.token(),
                        Letter::Z(g) => g.token(),
                    };
                    if x.exp == 1 {
                        tok
                    } else {
                        format!("{tok}^{}", x.exp)
                    }
                })
                .collect();
            let letters = letters.join(sep);
            match &t.coeff {
                None => f.write_str(&letters)?,
                Some(c) => {
                    let c = match c.constant_value() {
                        Some(r) => r.to_string(),
                        None => format!("({c})"),
                    };
                    if letters.is_empty() {
                        f.write_str(&c)?;
                    } else {
                        write!(f, "{c} * {letters}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Nat(u64),
    LParen,
    RParen,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Diamond,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Nat(n) => write!(f, "`{n}`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Slash => f.write_str("`/`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::Diamond => f.write_str("`<>`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, Pos)>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut line, mut column) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, column };
        if c == '\n' {
            line += 1;
            column = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            column += 1;
            i += 1;
            continue;
        }
        let start = i;
        let tok = if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            let n = s.parse().map_err(|_| Error::Syntax {
                line,
                column,
                message: format!("number `{s}` is too large"),
            })?;
            Tok::Nat(n)
        } else if c.is_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            Tok::Ident(chars[start..i].iter().collect())
        } else {
            i += 1;
            match c {
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '<' if chars.get(i) == Some(&'>') => {
                    i += 1;
                    Tok::Diamond
                }
                _ => {
                    return Err(Error::UnknownToken {
                        token: c.to_string(),
                        line,
                        column,
                    })
                }
            }
        };
        column += i - start;
        out.push((tok, pos));
    }
    out.push((Tok::End, Pos { line, column }));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        let p = self.pos();
        Err(Error::Syntax {
            line: p.line,
            column: p.column,
            message: message.into(),
        })
    }

    fn expect(&mut self, tok: Tok) -> Result<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.error(format!("expected {tok}, found {}", self.peek()))
        }
    }

    fn element(&mut self) -> Result<Expr> {
        let mut terms = Vec::new();
        let mut negative = false;
        if *self.peek() == Tok::Minus {
            self.bump();
            negative = true;
        }
        if *self.peek() == Tok::Nat(0) && self.toks.len() == self.at + 2 && !negative {
            self.bump();
            return Ok(Expr { terms });
        }
        loop {
            terms.push(self.term(negative)?);
            match self.peek() {
                Tok::Plus => negative = false,
                Tok::Minus => negative = true,
                Tok::End => break,
                other => return self.error(format!("expected `+`, `-` or end of input, found {other}")),
            }
            self.bump();
        }
        Ok(Expr { terms })
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Tok::Ident(_))
    }

    fn term(&mut self, negative: bool) -> Result<Term> {
        let pos = self.pos();
        let coeff = match self.peek() {
            Tok::LParen => {
                self.bump();
                let f = self.sum()?;
                self.expect(Tok::RParen)?;
                Some(f)
            }
            Tok::Nat(_) => Some(self.rational()?),
            _ => None,
        };
        if coeff.is_some() && *self.peek() == Tok::Star {
            self.bump();
            if !self.starts_factor() {
                return self.error(format!("expected a generator, found {}", self.peek()));
            }
        }
        let mut factors = Vec::new();
        if coeff.is_none() && !self.starts_factor() {
            return self.error(format!("expected a term, found {}", self.peek()));
        }
        while self.starts_factor() {
            factors.push(self.factor()?);
            if matches!(self.peek(), Tok::Diamond | Tok::Star) {
                self.bump();
                if !self.starts_factor() {
                    return self.error(format!("expected a generator, found {}", self.peek()));
                }
            }
        }
        Ok(Term {
            negative,
            coeff,
            factors,
            pos,
        })
    }

    fn rational(&mut self) -> Result<RationalFunction> {
        let n = self.nat()?;
        if *self.peek() == Tok::Slash {
            self.bump();
            let d = self.nat()?;
            if d == 0 {
                return self.error("division by zero");
            }
            return Ok(RationalFunction::constant(Rational::new(n.into(), d.into())));
        }
        Ok(RationalFunction::constant(Rational::from_integer(n.into())))
    }

    fn nat(&mut self) -> Result<u64> {
        match self.peek().clone() {
            Tok::Nat(n) => {
                self.bump();
                Ok(n)
            }
            other => self.error(format!("expected a number, found {other}")),
        }
    }

    fn int(&mut self) -> Result<i64> {
        let neg = *self.peek() == Tok::Minus;
        if neg {
            self.bump();
        }
        let n = self.nat()? as i64;
        Ok(if neg { -n } else { n })
    }

    fn factor(&mut self) -> Result<Factor> {
        let pos = self.pos();
        let Tok::Ident(name) = self.bump().0 else {
            unreachable!("checked by starts_factor")
        };
        let letter = match name.as_str() {
            "th" => Letter::U(Generator::th()),
            "X" | "t" | "E" => {
                self.expect(Tok::LParen)?;
                let root_pos = self.pos();
                let k = self.int()?;
                self.expect(Tok::RParen)?;
                let bad = |msg: String| {
                    Err(Error::Syntax {
                        line: root_pos.line,
                        column: root_pos.column,
                        message: msg,
                    })
                };
                match name.as_str() {
                    "E" if (-2..=2).contains(&k) => Letter::Z(ZGen::new(k as i8)),
                    "X" | "t" if k == 0 => return bad(format!("no letter {name}(0); the Cartan parts are H and th")),
                    "X" if (-2..=2).contains(&k) => Letter::U(Generator::x(k as i8)),
                    "t" if (-2..=2).contains(&k) => Letter::U(Generator::t(k as i8)),
                    _ => return bad(format!("root {k} is out of range -2..=2")),
                }
            }
            _ => {
                return Err(Error::UnknownToken {
                    token: name,
                    line: pos.line,
                    column: pos.column,
                })
            }
        };
        let exp = if *self.peek() == Tok::Caret {
            self.bump();
            let e = self.nat()?;
            u32::try_from(e).or_else(|_| self.error("exponent too large"))?
        } else {
            1
        };
        Ok(Factor { letter, exp, pos })
    }

    fn sum(&mut self) -> Result<RationalFunction> {
        let mut acc = self.product()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.product()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.product()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<RationalFunction> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Tok::Slash => {
                    self.bump();
                    let pos = self.pos();
                    let d = self.unary()?;
                    acc = acc.try_div(&d).map_err(|_| Error::Syntax {
                        line: pos.line,
                        column: pos.column,
                        message: "division by zero".into(),
                    })?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RationalFunction> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(-self.unary()?);
        }
        let base = self.atom()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            let e = self.nat()?;
            let e = u32::try_from(e).or_else(|_| self.error("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RationalFunction> {
        match self.peek().clone() {
            Tok::Nat(n) => {
                self.bump();
                Ok(RationalFunction::constant(Rational::from_integer(n.into())))
            }
            Tok::Ident(name) if name == "H" => {
                self.bump();
                Ok(RationalFunction::h())
            }
            Tok::Ident(name) => {
                let p = self.pos();
                Err(Error::UnknownToken {
                    token: name,
                    line: p.line,
                    column: p.column,
                })
            }
            Tok::LParen => {
                self.bump();
                let f = self.sum()?;
                self.expect(Tok::RParen)?;
                Ok(f)
            }
            other => self.error(format!("expected a number, `H` or `(`, found {other}")),
        }
    }
}

/// Parses an expression; see the module docs for the grammar.
pub fn parse(text: &str) -> Result<Expr> {
    let toks = lex(text)?;
    let mut p = Parser { toks, at: 0 };
    let expr = p.element()?;
    if let Some(first) = expr.algebra() {
        expr.check_algebra(first)?;
    }
    Ok(expr)
}

/// Parses a coefficient expression in `H`, such as `1 - 2/(H - 1)`.
pub fn parse_ratfunc(text: &str) -> Result<RationalFunction> {
    let toks = lex(text)?;
    let mut p = Parser { toks, at: 0 };
    let f = p.sum()?;
    if *p.peek() != Tok::End {
        return p.error(format!("expected end of input, found {}", p.peek()));
    }
    Ok(f)
}

pub fn parse_uea(text: &str) -> Result<UeaElement> {
    parse(text)?.to_uea()
}

pub fn parse_z(text: &str) -> Result<ZElement> {
    parse(text)?.to_z()
}
