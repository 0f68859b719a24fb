//! A small expression language for test functions.
//!
//! ```text
//! expr    = term { ("+" | "-") term } ;
//! term    = unary { ("*" | "/") unary } ;
//! unary   = "-" unary | power ;
//! power   = primary [ "^" unary ] ;          (* exponent must be constant *)
//! primary = number | "x" | "y" | "pi"
//!         | ("exp" | "log" | "abs") "(" expr ")"
//!         | "ind" "(" bound "," bound ")"     (* indicator in x *)
//!         | "ind" "(" ("x" | "y") "," bound "," bound ")"
//!         | "(" expr ")" ;
//! bound   = constant expr | "inf" ;
//! ```
//!
//! Indicators are closed: `ind(1,2)` is 1 on `[1, 2]`. In two variables `x`
//! is the real part `u` and `y` the imaginary part `v` of `w = u + iv`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::func::{Func1D, Func2D, Hints2D};
use crate::quad::SingularityHints;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Var {
    X,
    Y,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Fun {
    Exp,
    Log,
    Abs,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(f64),
    Var(Var),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, f64),
    Call(Fun, Box<Expr>),
    Ind { var: Var, lo: f64, hi: f64 },
}

/// Evaluation point: one or two coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Point {
    One(f64),
    Two(f64, f64),
}

impl Serialize for Expr {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

// ---------------------------------------------------------------------------
// lexer

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    Ident(String),
    Op(char),
    End,
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    /// Next token and its starting offset.
    fn next(&mut self) -> Result<(Tok, usize)> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[self.pos..];
        let Some(c) = rest.chars().next() else {
            return Ok((Tok::End, start));
        };
        if c.is_ascii_digit() || c == '.' {
            let bytes = rest.as_bytes();
            let mut i = 0;
            while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'.') {
                i += 1;
            }
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
            let text = &rest[..i];
            let value: f64 = text.parse().map_err(|_| Error::Syntax {
                offset: start,
                message: format!("malformed number '{text}'"),
            })?;
            self.pos += i;
            return Ok((Tok::Num(value), start));
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let len = rest
                .find(|ch: char| !(ch.is_ascii_alphanumeric() || ch == '_'))
                .unwrap_or(rest.len());
            self.pos += len;
            return Ok((Tok::Ident(rest[..len].to_string()), start));
        }
        if "+-*/^(),".contains(c) {
            self.pos += 1;
            return Ok((Tok::Op(c), start));
        }
        Err(Error::Syntax {
            offset: start,
            message: format!("unexpected character '{c}'"),
        })
    }
}

// ---------------------------------------------------------------------------
// parser

struct Parser<'a> {
    lexer: Lexer<'a>,
    tok: Tok,
    at: usize,
}

fn syntax(offset: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        offset,
        message: message.into(),
    }
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Result<Self> {
        let mut lexer = Lexer { src, pos: 0 };
        let (tok, at) = lexer.next()?;
        Ok(Parser { lexer, tok, at })
    }

    fn bump(&mut self) -> Result<()> {
        let (tok, at) = self.lexer.next()?;
        self.tok = tok;
        self.at = at;
        Ok(())
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.tok == Tok::Op(c) {
            self.bump()
        } else {
            Err(syntax(self.at, format!("expected '{c}'")))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.tok {
                Tok::Op('+') => {
                    self.bump()?;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Op('-') => {
                    self.bump()?;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            match self.tok {
                Tok::Op('*') => {
                    self.bump()?;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Tok::Op('/') => {
                    self.bump()?;
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.tok == Tok::Op('-') {
            self.bump()?;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.primary()?;
        if self.tok != Tok::Op('^') {
            return Ok(base);
        }
        self.bump()?;
        let at = self.at;
        let exponent = self.unary()?;
        let value = exponent
            .constant()
            .ok_or_else(|| syntax(at, "exponent must be a constant"))?;
        if !value.is_finite() {
            return Err(syntax(at, "exponent must be finite"));
        }
        Ok(Expr::Pow(Box::new(base), value))
    }

    fn primary(&mut self) -> Result<Expr> {
        let at = self.at;
        match self.tok.clone() {
            Tok::Num(v) => {
                self.bump()?;
                Ok(Expr::Num(v))
            }
            Tok::Op('(') => {
                self.bump()?;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Ident(name) => {
                self.bump()?;
                match name.as_str() {
                    "x" => Ok(Expr::Var(Var::X)),
                    "y" => Ok(Expr::Var(Var::Y)),
                    "pi" => Ok(Expr::Num(std::f64::consts::PI)),
                    "inf" => Err(syntax(at, "'inf' is only allowed as an indicator bound")),
                    "exp" | "log" | "abs" => {
                        let fun = match name.as_str() {
                            "exp" => Fun::Exp,
                            "log" => Fun::Log,
                            _ => Fun::Abs,
                        };
                        let args = self.args()?;
                        if args.len() != 1 {
                            return Err(syntax(
                                at,
                                format!("arity error: {name} takes 1 argument, got {}", args.len()),
                            ));
                        }
                        let arg = args.into_iter().next().map(|(e, _)| e).unwrap_or(Expr::Num(0.0));
                        Ok(Expr::Call(fun, Box::new(arg)))
                    }
                    "ind" => self.indicator(at),
                    _ => Err(syntax(at, format!("unknown identifier '{name}'"))),
                }
            }
            Tok::End => Err(syntax(at, "unexpected end of input")),
            Tok::Op(c) => Err(syntax(at, format!("unexpected '{c}'"))),
        }
    }

    /// Parenthesised argument list; `inf` is accepted as an argument.
    fn args(&mut self) -> Result<Vec<(Expr, usize)>> {
        self.expect('(')?;
        let mut out = Vec::new();
        loop {
            let at = self.at;
            if self.tok == Tok::Ident("inf".into()) {
                self.bump()?;
                out.push((Expr::Num(f64::INFINITY), at));
            } else {
                out.push((self.expr()?, at));
            }
            match self.tok {
                Tok::Op(',') => self.bump()?,
                Tok::Op(')') => {
                    self.bump()?;
                    return Ok(out);
                }
                _ => return Err(syntax(self.at, "expected ',' or ')'")),
            }
        }
    }

    fn indicator(&mut self, at: usize) -> Result<Expr> {
        let args = self.args()?;
        let (var, bounds) = match args.len() {
            2 => (Var::X, &args[..]),
            3 => match args[0].0 {
                Expr::Var(v) => (v, &args[1..]),
                _ => return Err(syntax(args[0].1, "indicator variable must be x or y")),
            },
            n => {
                return Err(syntax(
                    at,
                    format!("arity error: ind takes 2 or 3 arguments, got {n}"),
                ))
            }
        };
        let mut vals = [0.0; 2];
        for (slot, (e, pos)) in vals.iter_mut().zip(bounds) {
            *slot = e
                .constant()
                .ok_or_else(|| syntax(*pos, "indicator bounds must be constants"))?;
        }
        let [lo, hi] = vals;
        if lo.is_nan() || hi.is_nan() || lo == f64::INFINITY || !(lo < hi) {
            return Err(syntax(at, format!("indicator needs lo < hi, got ({lo}, {hi})")));
        }
        Ok(Expr::Ind { var, lo, hi })
    }
}

/// Parse an expression.
pub fn parse(src: &str) -> Result<Expr> {
    if src.trim().is_empty() {
        return Err(syntax(0, "empty expression"));
    }
    let mut p = Parser::new(src)?;
    let e = p.expr()?;
    if p.tok != Tok::End {
        return Err(syntax(p.at, "unexpected trailing input"));
    }
    Ok(e)
}

// ---------------------------------------------------------------------------
// evaluation

impl Expr {
    /// Value of a variable-free expression.
    pub fn constant(&self) -> Option<f64> {
        Some(match self {
            Expr::Num(v) => *v,
            Expr::Var(_) | Expr::Ind { .. } => return None,
            Expr::Neg(a) => -a.constant()?,
            Expr::Add(a, b) => a.constant()? + b.constant()?,
            Expr::Sub(a, b) => a.constant()? - b.constant()?,
            Expr::Mul(a, b) => a.constant()? * b.constant()?,
            Expr::Div(a, b) => a.constant()? / b.constant()?,
            Expr::Pow(a, c) => a.constant()?.powf(*c),
            Expr::Call(f, a) => {
                let v = a.constant()?;
                match f {
                    Fun::Exp => v.exp(),
                    Fun::Log => v.ln(),
                    Fun::Abs => v.abs(),
                }
            }
        })
    }

    /// True when the expression mentions `y`.
    pub fn uses_y(&self) -> bool {
        match self {
            Expr::Var(v) => *v == Var::Y,
            Expr::Ind { var, .. } => *var == Var::Y,
            Expr::Num(_) => false,
            Expr::Neg(a) | Expr::Pow(a, _) | Expr::Call(_, a) => a.uses_y(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.uses_y() || b.uses_y()
            }
        }
    }

    pub fn eval(&self, point: Point) -> Result<f64> {
        let (x, y) = match point {
            Point::One(x) => {
                if self.uses_y() {
                    return Err(Error::domain("expression uses y but only x was given"));
                }
                (x, f64::NAN)
            }
            Point::Two(x, y) => (x, y),
        };
        self.eval_xy(x, y)
    }

    fn eval_xy(&self, x: f64, y: f64) -> Result<f64> {
        Ok(match self {
            Expr::Num(v) => *v,
            Expr::Var(Var::X) => x,
            Expr::Var(Var::Y) => y,
            Expr::Neg(a) => -a.eval_xy(x, y)?,
            Expr::Add(a, b) => a.eval_xy(x, y)? + b.eval_xy(x, y)?,
            Expr::Sub(a, b) => a.eval_xy(x, y)? - b.eval_xy(x, y)?,
            Expr::Mul(a, b) => {
                let l = a.eval_xy(x, y)?;
                // indicators switch off factors that are undefined outside them
                if l == 0.0 && matches!(**a, Expr::Ind { .. }) {
                    return Ok(0.0);
                }
                let r = b.eval_xy(x, y)?;
                l * r
            }
            Expr::Div(a, b) => a.eval_xy(x, y)? / b.eval_xy(x, y)?,
            Expr::Pow(a, c) => {
                let base = a.eval_xy(x, y)?;
                if base == 0.0 && *c < 0.0 {
                    return Err(Error::domain(format!("0^{c}")));
                }
                if base < 0.0 && c.fract() != 0.0 {
                    return Err(Error::domain(format!("({base})^{c} is not real")));
                }
                if c.fract() == 0.0 && c.abs() <= 64.0 {
                    base.powi(*c as i32)
                } else {
                    base.powf(*c)
                }
            }
            Expr::Call(f, a) => {
                let v = a.eval_xy(x, y)?;
                match f {
                    Fun::Exp => v.exp(),
                    Fun::Abs => v.abs(),
                    Fun::Log => {
                        if !(v > 0.0) {
                            return Err(Error::domain(format!("log({v})")));
                        }
                        v.ln()
                    }
                }
            }
            Expr::Ind { var, lo, hi } => {
                let t = if *var == Var::X { x } else { y };
                if t >= *lo && t <= *hi {
                    1.0
                } else {
                    0.0
                }
            }
        })
    }
}

// ---------------------------------------------------------------------------
// printing

fn precedence(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 1,
        Expr::Mul(..) | Expr::Div(..) => 2,
        Expr::Neg(_) => 3,
        Expr::Num(v) if *v < 0.0 || v.is_sign_negative() => 3,
        Expr::Pow(..) => 4,
        _ => 5,
    }
}

fn write_child(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
    if precedence(e) < min {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

fn write_var(f: &mut fmt::Formatter<'_>, v: Var) -> fmt::Result {
    f.write_str(match v {
        Var::X => "x",
        Var::Y => "y",
    })
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(v) => write!(f, "{v}"),
            Expr::Var(v) => write_var(f, *v),
            Expr::Neg(a) => {
                f.write_str("-")?;
                write_child(f, a, 3)
            }
            Expr::Add(a, b) => {
                write_child(f, a, 1)?;
                f.write_str(" + ")?;
                write_child(f, b, 2)
            }
            Expr::Sub(a, b) => {
                write_child(f, a, 1)?;
                f.write_str(" - ")?;
                write_child(f, b, 2)
            }
            Expr::Mul(a, b) => {
                write_child(f, a, 2)?;
                f.write_str("*")?;
                write_child(f, b, 3)
            }
            Expr::Div(a, b) => {
                write_child(f, a, 2)?;
                f.write_str("/")?;
                write_child(f, b, 3)
            }
            Expr::Pow(a, c) => {
                write_child(f, a, 5)?;
                if *c < 0.0 || c.is_sign_negative() {
                    write!(f, "^({c})")
                } else {
                    write!(f, "^{c}")
                }
            }
            Expr::Call(fun, a) => {
                let name = match fun {
                    Fun::Exp => "exp",
                    Fun::Log => "log",
                    Fun::Abs => "abs",
                };
                write!(f, "{name}({a})")
            }
            Expr::Ind { var, lo, hi } => {
                f.write_str("ind(")?;
                if *var == Var::Y {
                    f.write_str("y, ")?;
                }
                write!(f, "{lo}, {hi})")
            }
        }
    }
}

// ---------------------------------------------------------------------------
// asymptotics and hints

/// Size of `|e|` at an end, written in terms of a variable `t -> ∞`
/// (`t = x` at infinity, `t = 1/x` at zero).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Asym {
    /// Identically zero near the end.
    Zero,
    /// Nonzero but smaller than every power of `t`.
    Rapid,
    /// `~ C t^growth` with `C` of the given sign (0 when unknown).
    Power { growth: f64, sign: i8 },
    /// Larger than every power of `t`.
    Huge,
    Unknown,
}

use Asym::*;

fn rank(a: Asym) -> u8 {
    match a {
        Zero => 0,
        Rapid => 1,
        Power { .. } => 2,
        Huge => 3,
        Unknown => 4,
    }
}

fn asym_add(a: Asym, b: Asym, b_sign: i8) -> Asym {
    let b = match b {
        Power { growth, sign } => Power {
            growth,
            sign: sign * b_sign,
        },
        other => other,
    };
    match (a, b) {
        (Unknown, _) | (_, Unknown) => Unknown,
        (Power { growth: g1, sign: s1 }, Power { growth: g2, sign: s2 }) => {
            if g1 > g2 {
                a
            } else if g2 > g1 {
                b
            } else {
                Power {
                    growth: g1,
                    sign: if s1 == s2 { s1 } else { 0 },
                }
            }
        }
        _ => {
            if rank(a) >= rank(b) {
                a
            } else {
                b
            }
        }
    }
}

fn asym_mul(a: Asym, b: Asym) -> Asym {
    match (a, b) {
        (Unknown, _) | (_, Unknown) => Unknown,
        (Zero, Huge) | (Huge, Zero) | (Rapid, Huge) | (Huge, Rapid) => Unknown,
        (Zero, _) | (_, Zero) => Zero,
        (Rapid, _) | (_, Rapid) => Rapid,
        (Huge, _) | (_, Huge) => Huge,
        (Power { growth: g1, sign: s1 }, Power { growth: g2, sign: s2 }) => Power {
            growth: g1 + g2,
            sign: s1 * s2,
        },
    }
}

fn asym_recip(a: Asym) -> Asym {
    match a {
        Zero | Unknown => Unknown,
        Rapid => Huge,
        Huge => Rapid,
        Power { growth, sign } => Power {
            growth: -growth,
            sign,
        },
    }
}

/// Which end is being analysed, and the direction of `x` there.
#[derive(Debug, Clone, Copy, PartialEq)]
enum End {
    Zero,
    PlusInf,
    MinusInf,
}

impl Expr {
    fn asym(&self, var: Var, end: End) -> Asym {
        match self {
            Expr::Num(v) => {
                if *v == 0.0 {
                    Zero
                } else {
                    Power {
                        growth: 0.0,
                        sign: if *v > 0.0 { 1 } else { -1 },
                    }
                }
            }
            Expr::Var(v) if *v == var => match end {
                End::Zero => Power { growth: -1.0, sign: 1 },
                End::PlusInf => Power { growth: 1.0, sign: 1 },
                End::MinusInf => Power { growth: 1.0, sign: -1 },
            },
            // the other variable is a fixed, possibly vanishing constant
            Expr::Var(_) => Power { growth: 0.0, sign: 0 },
            Expr::Neg(a) => match a.asym(var, end) {
                Power { growth, sign } => Power { growth, sign: -sign },
                other => other,
            },
            Expr::Add(a, b) => asym_add(a.asym(var, end), b.asym(var, end), 1),
            Expr::Sub(a, b) => asym_add(a.asym(var, end), b.asym(var, end), -1),
            Expr::Mul(a, b) => asym_mul(a.asym(var, end), b.asym(var, end)),
            Expr::Div(a, b) => asym_mul(a.asym(var, end), asym_recip(b.asym(var, end))),
            Expr::Pow(a, c) => {
                let c = *c;
                match a.asym(var, end) {
                    _ if c == 0.0 => Power { growth: 0.0, sign: 1 },
                    Zero => {
                        if c > 0.0 {
                            Zero
                        } else {
                            Unknown
                        }
                    }
                    Rapid => {
                        if c > 0.0 {
                            Rapid
                        } else {
                            Huge
                        }
                    }
                    Huge => {
                        if c > 0.0 {
                            Huge
                        } else {
                            Rapid
                        }
                    }
                    Power { growth, sign } => Power {
                        growth: growth * c,
                        sign: if sign > 0 || c.fract() == 0.0 && (c as i64) % 2 == 0 {
                            1
                        } else {
                            sign
                        },
                    },
                    Unknown => Unknown,
                }
            }
            Expr::Call(Fun::Abs, a) => match a.asym(var, end) {
                Power { growth, .. } => Power { growth, sign: 1 },
                other => other,
            },
            Expr::Call(Fun::Exp, a) => match a.asym(var, end) {
                Zero | Rapid => Power { growth: 0.0, sign: 1 },
                Power { growth, sign } => {
                    if growth <= 0.0 {
                        Power { growth: 0.0, sign: 1 }
                    } else if sign < 0 {
                        Rapid
                    } else if sign > 0 {
                        Huge
                    } else {
                        Unknown
                    }
                }
                Huge | Unknown => Unknown,
            },
            Expr::Call(Fun::Log, a) => match a.asym(var, end) {
                // log of a power is a power of order zero (up to a log factor)
                Power { growth, sign: 1 } => Power {
                    growth: 0.0,
                    sign: if growth > 0.0 {
                        1
                    } else if growth < 0.0 {
                        -1
                    } else {
                        0
                    },
                },
                _ => Unknown,
            },
            Expr::Ind { var: v, lo, hi } => {
                if *v != var {
                    return Power { growth: 0.0, sign: 0 };
                }
                let near = match end {
                    End::Zero => *lo <= 0.0 && *hi > 0.0,
                    End::PlusInf => *hi == f64::INFINITY,
                    End::MinusInf => *lo == f64::NEG_INFINITY,
                };
                if near {
                    Power { growth: 0.0, sign: 1 }
                } else {
                    Zero
                }
            }
        }
    }

    /// Interval hull of the support in `var`, within `[lo_domain, inf]`.
    fn support(&self, var: Var) -> Option<(f64, f64)> {
        let full = Some((f64::NEG_INFINITY, f64::INFINITY));
        match self {
            Expr::Num(v) => {
                if *v == 0.0 {
                    None
                } else {
                    full
                }
            }
            Expr::Var(_) | Expr::Call(..) => full,
            Expr::Neg(a) => a.support(var),
            Expr::Add(a, b) | Expr::Sub(a, b) => match (a.support(var), b.support(var)) {
                (None, s) | (s, None) => s,
                (Some((a0, a1)), Some((b0, b1))) => Some((a0.min(b0), a1.max(b1))),
            },
            Expr::Mul(a, b) => match (a.support(var), b.support(var)) {
                (Some((a0, a1)), Some((b0, b1))) => {
                    let lo = a0.max(b0);
                    let hi = a1.min(b1);
                    if lo <= hi {
                        Some((lo, hi))
                    } else {
                        None
                    }
                }
                _ => None,
            },
            Expr::Div(a, _) => a.support(var),
            Expr::Pow(a, c) => {
                if *c > 0.0 {
                    a.support(var)
                } else {
                    full
                }
            }
            Expr::Ind { var: v, lo, hi } => {
                if *v == var {
                    Some((*lo, *hi))
                } else {
                    full
                }
            }
        }
    }

    fn breakpoints(&self, var: Var, out: &mut Vec<f64>) {
        match self {
            Expr::Ind { var: v, lo, hi } if *v == var => {
                out.extend([*lo, *hi].into_iter().filter(|b| b.is_finite()));
            }
            Expr::Neg(a) | Expr::Pow(a, _) | Expr::Call(_, a) => a.breakpoints(var, out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.breakpoints(var, out);
                b.breakpoints(var, out);
            }
            _ => {}
        }
    }

    /// Behaviour of `|e|` near 0 and near infinity in `x` (one variable).
    pub fn endpoint_asymptotics(&self) -> (Asym, Asym) {
        (self.asym(Var::X, End::Zero), self.asym(Var::X, End::PlusInf))
    }

    /// Half-line hints in the variable `var` (`x` for one-variable expressions).
    pub fn half_line_hints(&self, var: Var) -> SingularityHints {
        let left = match self.asym(var, End::Zero) {
            Zero | Rapid => f64::INFINITY,
            Power { growth, .. } => -growth,
            Huge => f64::NEG_INFINITY,
            // unknown behaviour: no fail-fast, numerical tail checks decide
            Unknown => 0.0,
        };
        let decay = match self.asym(var, End::PlusInf) {
            Zero | Rapid => f64::INFINITY,
            Power { growth, .. } => -growth,
            Huge => f64::NEG_INFINITY,
            Unknown => 2.0,
        };
        let mut points = Vec::new();
        self.breakpoints(var, &mut points);
        let mut hints = SingularityHints::new(left, decay).with_breakpoints(points);
        match self.support(var) {
            Some((lo, hi)) => {
                hints = hints.with_support(lo.max(0.0), hi);
            }
            None => {
                hints = hints.with_support(1.0, 1.0);
            }
        }
        hints
    }

    /// Hints for a two-variable expression over the upper half-plane.
    pub fn half_plane_hints(&self) -> Hints2D {
        let mut u_points = Vec::new();
        self.breakpoints(Var::X, &mut u_points);
        u_points.sort_by(f64::total_cmp);
        u_points.dedup();
        let decay_of = |a: Asym| match a {
            Zero | Rapid => Some(f64::INFINITY),
            Power { growth, .. } => Some(-growth),
            Huge | Unknown => None,
        };
        let u_decay = match (
            decay_of(self.asym(Var::X, End::PlusInf)),
            decay_of(self.asym(Var::X, End::MinusInf)),
        ) {
            (Some(a), Some(b)) => Some(a.min(b)),
            _ => None,
        };
        let u_support = self
            .support(Var::X)
            .filter(|(lo, hi)| lo.is_finite() && hi.is_finite());
        Hints2D {
            u_breakpoints: u_points,
            u_support,
            u_decay,
            u_peak: None,
            v: self.half_line_hints(Var::Y),
        }
    }
}

// ---------------------------------------------------------------------------
// function wrappers

/// A parsed one-variable expression used as a half-line function.
#[derive(Debug, Clone)]
pub struct ExprFunc1D {
    expr: Expr,
    hints: SingularityHints,
}

impl ExprFunc1D {
    pub fn new(expr: Expr) -> Result<Self> {
        if expr.uses_y() {
            return Err(Error::domain("a half-line function may only use x"));
        }
        let hints = expr.half_line_hints(Var::X);
        Ok(ExprFunc1D { expr, hints })
    }

    pub fn parse(src: &str) -> Result<Self> {
        Self::new(parse(src)?)
    }

    pub fn expr(&self) -> &Expr {
        &self.expr
    }
}

impl Func1D for ExprFunc1D {
    fn eval(&self, x: f64) -> Result<f64> {
        self.expr.eval_xy(x, f64::NAN)
    }
    fn hints(&self) -> SingularityHints {
        self.hints.clone()
    }
}

/// A parsed expression in `x` (real part) and `y` (imaginary part).
#[derive(Debug, Clone)]
pub struct ExprFunc2D {
    expr: Expr,
    hints: Hints2D,
}

impl ExprFunc2D {
    pub fn new(expr: Expr) -> Self {
        let hints = expr.half_plane_hints();
        ExprFunc2D { expr, hints }
    }

    pub fn parse(src: &str) -> Result<Self> {
        Ok(Self::new(parse(src)?))
    }

    pub fn expr(&self) -> &Expr {
        &self.expr
    }
}

impl Func2D for ExprFunc2D {
    fn eval(&self, u: f64, v: f64) -> Result<f64> {
        self.expr.eval_xy(u, v)
    }
    fn hints(&self) -> Hints2D {
        self.hints.clone()
    }
}
