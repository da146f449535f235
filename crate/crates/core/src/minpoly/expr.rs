//! A small polynomial expression language for the exception tables.
//!
//! ```text
//! expr  := term (('+' | '-' | 'pm' | 'mp') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := ('-' | 'pm' | 'mp') unary | power
//! power := atom ('^' atom)?
//! atom  := 'x' | INT | 'i' | 'sqrt' '(' INT ')' | 'w' '(' INT ',' expr ')' | '(' expr ')'
//! ```
//!
//! `pm` stands for the table's ± and `mp` for ∓; a binary `a pm b` is
//! a + s·b where s is the sign chosen at evaluation. `w(N,k)` is ζ_N^k, and
//! `sqrt(m)` the principal square root (i·√|m| for m < 0). Exponents are
//! integer-valued expressions, so `x^(15-1)` is x^14.

use alloc::{boxed::Box, format, string::String, vec::Vec};
use core::fmt;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exactnum::{CycNum, CycPoly};
use crate::partitions::Sign;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    X,
    Int(i64),
    I,
    Surd(i64),
    RootU(u32, Box<Expr>),
    /// ± (false) or ∓ (true) as a unit scalar.
    Pm(bool),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(i64),
    Ident(String),
    Sym(char),
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let t: String = cs[st..i].iter().collect();
            out.push(Tok::Num(t.parse().map_err(|_| Error::Parse(format!("integer {t} too large")))?));
        } else if c.is_ascii_alphabetic() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push(Tok::Ident(cs[st..i].iter().collect()));
        } else if "+-*/^(),".contains(c) {
            out.push(Tok::Sym(c));
            i += 1;
        } else if c == '±' {
            out.push(Tok::Ident(String::from("pm")));
            i += 1;
        } else if c == '∓' {
            out.push(Tok::Ident(String::from("mp")));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?} in {s:?}")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.next() {
            Some(Tok::Sym(d)) if d == c => Ok(()),
            other => Err(Error::Parse(format!("expected {c:?}, found {other:?}"))),
        }
    }

    fn is_ident(&self, name: &str) -> bool {
        matches!(self.peek(), Some(Tok::Ident(s)) if s == name)
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.peek() == Some(&Tok::Sym('+')) {
                self.pos += 1;
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.peek() == Some(&Tok::Sym('-')) {
                self.pos += 1;
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else if self.is_ident("pm") || self.is_ident("mp") {
                let mp = self.is_ident("mp");
                self.pos += 1;
                let rhs = Expr::Mul(Box::new(Expr::Pm(mp)), Box::new(self.term()?));
                lhs = Expr::Add(Box::new(lhs), Box::new(rhs));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Sym('*')) => {
                    self.pos += 1;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(Tok::Sym('/')) => {
                    self.pos += 1;
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.peek() == Some(&Tok::Sym('-')) {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.is_ident("pm") || self.is_ident("mp") {
            let mp = self.is_ident("mp");
            self.pos += 1;
            return Ok(Expr::Mul(Box::new(Expr::Pm(mp)), Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Sym('^')) {
            self.pos += 1;
            let e = if self.peek() == Some(&Tok::Sym('-')) {
                self.pos += 1;
                Expr::Neg(Box::new(self.atom()?))
            } else {
                self.atom()?
            };
            return Ok(Expr::Pow(Box::new(base), Box::new(e)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.next() {
            Some(Tok::Num(v)) => Ok(Expr::Int(v)),
            Some(Tok::Sym('(')) => {
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(Tok::Ident(s)) => match s.as_str() {
                "x" => Ok(Expr::X),
                "i" => Ok(Expr::I),
                "pm" => Ok(Expr::Pm(false)),
                "mp" => Ok(Expr::Pm(true)),
                "sqrt" => {
                    self.expect('(')?;
                    let neg = if self.peek() == Some(&Tok::Sym('-')) {
                        self.pos += 1;
                        true
                    } else {
                        false
                    };
                    let v = match self.next() {
                        Some(Tok::Num(v)) => v,
                        other => return Err(Error::Parse(format!("sqrt needs an integer, found {other:?}"))),
                    };
                    self.expect(')')?;
                    Ok(Expr::Surd(if neg { -v } else { v }))
                }
                "w" => {
                    self.expect('(')?;
                    let n = match self.next() {
                        Some(Tok::Num(v)) if v > 0 => v as u32,
                        other => return Err(Error::Parse(format!("w needs a positive order, found {other:?}"))),
                    };
                    self.expect(',')?;
                    let k = self.expr()?;
                    self.expect(')')?;
                    Ok(Expr::RootU(n, Box::new(k)))
                }
                other => Err(Error::Parse(format!("unknown identifier {other:?}"))),
            },
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

pub fn parse_expr(s: &str) -> Result<Expr> {
    let mut p = Parser { toks: lex(s)?, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input in {s:?}")));
    }
    Ok(e)
}

/// A quotient of polynomials, kept unreduced until the end.
#[derive(Clone, Debug)]
struct Frac {
    num: CycPoly,
    den: CycPoly,
}

impl Frac {
    fn poly(p: CycPoly) -> Self {
        Frac { num: p, den: CycPoly::constant(CycNum::one()) }
    }

    fn scalar(c: CycNum) -> Self {
        Self::poly(CycPoly::constant(c))
    }

    fn as_integer(&self) -> Result<i64> {
        let bad = || Error::Parse(String::from("exponent is not an integer constant"));
        if self.num.degree().unwrap_or(0) != 0 || self.den.degree() != Some(0) {
            return Err(bad());
        }
        let n = self.num.coeffs().first().cloned().unwrap_or_else(CycNum::zero);
        let q = n.checked_div(&self.den.coeffs()[0])?.to_rational().ok_or_else(bad)?;
        if !q.is_integer() {
            return Err(bad());
        }
        q.to_integer().to_i64().ok_or_else(bad)
    }
}

impl Expr {
    fn eval_frac(&self, s: Sign) -> Result<Frac> {
        Ok(match self {
            Expr::X => Frac::poly(CycPoly::x()),
            Expr::Int(v) => Frac::scalar(CycNum::from_i64(*v)),
            Expr::I => Frac::scalar(CycNum::i()),
            Expr::Surd(m) => Frac::scalar(CycNum::sqrt_int(*m)),
            Expr::RootU(n, k) => Frac::scalar(CycNum::root_of_unity(*n, k.eval_frac(s)?.as_integer()?)),
            Expr::Pm(mp) => {
                let v = if *mp { -s.as_i64() } else { s.as_i64() };
                Frac::scalar(CycNum::from_i64(v))
            }
            Expr::Neg(a) => {
                let a = a.eval_frac(s)?;
                Frac { num: a.num.neg(), den: a.den }
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                let (a, b) = (a.eval_frac(s)?, b.eval_frac(s)?);
                let bn = b.num.mul(&a.den);
                let an = a.num.mul(&b.den);
                let num = if matches!(self, Expr::Add(..)) { an.add(&bn) } else { an.sub(&bn) };
                Frac { num, den: a.den.mul(&b.den) }
            }
            Expr::Mul(a, b) => {
                let (a, b) = (a.eval_frac(s)?, b.eval_frac(s)?);
                Frac { num: a.num.mul(&b.num), den: a.den.mul(&b.den) }
            }
            Expr::Div(a, b) => {
                let (a, b) = (a.eval_frac(s)?, b.eval_frac(s)?);
                if b.num.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Frac { num: a.num.mul(&b.den), den: a.den.mul(&b.num) }
            }
            Expr::Pow(a, e) => {
                let a = a.eval_frac(s)?;
                let e = e.eval_frac(s)?.as_integer()?;
                let m = e.unsigned_abs() as u32;
                if e >= 0 {
                    Frac { num: a.num.pow(m), den: a.den.pow(m) }
                } else {
                    Frac { num: a.den.pow(m), den: a.num.pow(m) }
                }
            }
        })
    }

    /// The polynomial denoted by the expression with ± read as `s`; an
    /// error when a quotient does not divide exactly.
    pub fn eval(&self, s: Sign) -> Result<CycPoly> {
        let f = self.eval_frac(s)?;
        let q = f.num.div_exact(&f.den).map_err(|_| Error::MalformedEntry(format!("{self} is not a polynomial")))?;
        Ok(q)
    }

    pub fn has_pm(&self) -> bool {
        match self {
            Expr::Pm(_) => true,
            Expr::X | Expr::Int(_) | Expr::I | Expr::Surd(_) => false,
            Expr::RootU(_, a) | Expr::Neg(a) => a.has_pm(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) | Expr::Pow(a, b) => {
                a.has_pm() || b.has_pm()
            }
        }
    }
}

fn prec(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 1,
        Expr::Mul(..) | Expr::Div(..) => 2,
        Expr::Neg(..) => 3,
        Expr::Pow(..) => 4,
        _ => 5,
    }
}

fn wrap(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
    if prec(e) < min {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::X => f.write_str("x"),
            Expr::Int(v) => write!(f, "{v}"),
            Expr::I => f.write_str("i"),
            Expr::Surd(m) => write!(f, "sqrt({m})"),
            Expr::RootU(n, k) => write!(f, "w({n},{k})"),
            Expr::Pm(false) => f.write_str("±"),
            Expr::Pm(true) => f.write_str("∓"),
            Expr::Neg(a) => {
                f.write_str("-")?;
                wrap(f, a, 3)
            }
            Expr::Add(a, b) => {
                wrap(f, a, 1)?;
                if let Expr::Mul(p, rest) = b.as_ref() {
                    if let Expr::Pm(_) = p.as_ref() {
                        write!(f, "{p}")?;
                        return wrap(f, rest, 2);
                    }
                }
                f.write_str("+")?;
                wrap(f, b, 1)
            }
            Expr::Sub(a, b) => {
                wrap(f, a, 1)?;
                f.write_str("-")?;
                wrap(f, b, 2)
            }
            Expr::Mul(a, b) => {
                wrap(f, a, 2)?;
                f.write_str("*")?;
                wrap(f, b, 3)
            }
            Expr::Div(a, b) => {
                wrap(f, a, 2)?;
                f.write_str("/")?;
                wrap(f, b, 3)
            }
            Expr::Pow(a, e) => {
                wrap(f, a, 5)?;
                f.write_str("^")?;
                wrap(f, e, 5)
            }
        }
    }
}
