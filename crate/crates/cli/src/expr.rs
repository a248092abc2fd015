//! The tiny generating-function expression grammar.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := factor (('*' | '/') factor)*
//! factor  := '-' factor | power
//! power   := primary ('^' uint)?
//! primary := rational
//!          | atom ('(' 'x' ('^' uint)? ')')?
//!          | '(' expr ')'
//!          | 'invert' '(' rational ',' expr ')'
//! atom    := 'c' | 'r' | 'rbc' | 'motzkin' | 'x'
//! ```
//!
//! Atoms are the Catalan, Rueppel, two-parameter Rueppel and Motzkin
//! series and the indeterminate itself; the only composition allowed is
//! monomial substitution `f(x^k)`. Everything richer belongs in library
//! code, not in a command line.

use std::fmt;

use rueppel_core::exact::{Integer, Poly2, Rational, Ring};
use rueppel_core::riordan::invert_transform;
use rueppel_core::series::{
    catalan_series, motzkin_series, rueppel_bc_series, rueppel_series, Series,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprError {
    Parse(String),
    Eval(String),
}

impl fmt::Display for ExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExprError::Parse(m) => write!(f, "parse error: {m}"),
            ExprError::Eval(m) => write!(f, "evaluation error: {m}"),
        }
    }
}

impl std::error::Error for ExprError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Atom {
    Catalan,
    Rueppel,
    RueppelBC,
    Motzkin,
    X,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Number(Rational),
    /// An atom composed with `x^k` (`k = 1` is the plain atom).
    Atom(Atom, u32),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    /// `invert(t, f)`: the INVERT(t) transform of the expansion of `f`.
    Invert(Rational, Box<Expr>),
}

// --- lexer -------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
}

fn lex(input: &str) -> Result<Vec<Token>, ExprError> {
    let mut tokens = Vec::new();
    let mut chars = input.chars().peekable();
    while let Some(&ch) = chars.peek() {
        match ch {
            ' ' | '\t' | '\n' => {
                chars.next();
            }
            '0'..='9' => {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        s.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                tokens.push(Token::Number(s));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        s.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                tokens.push(Token::Ident(s));
            }
            '+' => {
                chars.next();
                tokens.push(Token::Plus);
            }
            '-' => {
                chars.next();
                tokens.push(Token::Minus);
            }
            '*' => {
                chars.next();
                tokens.push(Token::Star);
            }
            '/' => {
                chars.next();
                tokens.push(Token::Slash);
            }
            '^' => {
                chars.next();
                tokens.push(Token::Caret);
            }
            '(' => {
                chars.next();
                tokens.push(Token::LParen);
            }
            ')' => {
                chars.next();
                tokens.push(Token::RParen);
            }
            ',' => {
                chars.next();
                tokens.push(Token::Comma);
            }
            other => return Err(ExprError::Parse(format!("unexpected character {other:?}"))),
        }
    }
    Ok(tokens)
}

// --- parser ------------------------------------------------------------

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, token: Token) -> Result<(), ExprError> {
        match self.next() {
            Some(t) if t == token => Ok(()),
            other => Err(ExprError::Parse(format!("expected {token:?}, got {other:?}"))),
        }
    }

    fn parse_expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.parse_term()?;
        while let Some(op) = self.peek().cloned() {
            match op {
                Token::Plus => {
                    self.next();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.parse_term()?));
                }
                Token::Minus => {
                    self.next();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.parse_term()?));
                }
                _ => break,
            }
        }
        Ok(lhs)
    }

    fn parse_term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.parse_factor()?;
        while let Some(op) = self.peek().cloned() {
            match op {
                Token::Star => {
                    self.next();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.parse_factor()?));
                }
                Token::Slash => {
                    self.next();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.parse_factor()?));
                }
                _ => break,
            }
        }
        Ok(lhs)
    }

    fn parse_factor(&mut self) -> Result<Expr, ExprError> {
        if self.peek() == Some(&Token::Minus) {
            self.next();
            return Ok(Expr::Neg(Box::new(self.parse_factor()?)));
        }
        self.parse_power()
    }

    fn parse_power(&mut self) -> Result<Expr, ExprError> {
        let base = self.parse_primary()?;
        if self.peek() == Some(&Token::Caret) {
            self.next();
            let e = self.parse_uint()?;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn parse_uint(&mut self) -> Result<u32, ExprError> {
        match self.next() {
            Some(Token::Number(s)) => s
                .parse()
                .map_err(|e| ExprError::Parse(format!("bad exponent {s:?}: {e}"))),
            other => Err(ExprError::Parse(format!("expected an exponent, got {other:?}"))),
        }
    }

    fn parse_rational(&mut self) -> Result<Rational, ExprError> {
        let negative = if self.peek() == Some(&Token::Minus) {
            self.next();
            true
        } else {
            false
        };
        let Some(Token::Number(num)) = self.next() else {
            return Err(ExprError::Parse("expected a number".into()));
        };
        let mut value: Rational = num
            .parse()
            .map_err(|e: String| ExprError::Parse(e))?;
        if self.peek() == Some(&Token::Slash) {
            self.next();
            let Some(Token::Number(den)) = self.next() else {
                return Err(ExprError::Parse("expected a denominator".into()));
            };
            let den: Rational = den.parse().map_err(|e: String| ExprError::Parse(e))?;
            if den.is_zero() {
                return Err(ExprError::Parse("zero denominator".into()));
            }
            value = value.exact_div(&den).expect("nonzero denominator");
        }
        Ok(if negative { value.neg() } else { value })
    }

    fn parse_primary(&mut self) -> Result<Expr, ExprError> {
        match self.next() {
            Some(Token::Number(s)) => {
                let mut value: Rational = s.parse().map_err(|e: String| ExprError::Parse(e))?;
                // A numeric literal may continue as p/q; binds tighter than
                // series division only when both sides are bare numbers.
                if self.peek() == Some(&Token::Slash) {
                    if let Some(Token::Number(d)) = self.tokens.get(self.pos + 1).cloned() {
                        self.next();
                        self.next();
                        let den: Rational =
                            d.parse().map_err(|e: String| ExprError::Parse(e))?;
                        if den.is_zero() {
                            return Err(ExprError::Parse("zero denominator".into()));
                        }
                        value = value.exact_div(&den).expect("nonzero denominator");
                    }
                }
                Ok(Expr::Number(value))
            }
            Some(Token::Ident(name)) => match name.as_str() {
                "invert" => {
                    self.expect(Token::LParen)?;
                    let t = self.parse_rational()?;
                    self.expect(Token::Comma)?;
                    let inner = self.parse_expr()?;
                    self.expect(Token::RParen)?;
                    Ok(Expr::Invert(t, Box::new(inner)))
                }
                "x" => Ok(Expr::Atom(Atom::X, 1)),
                "c" | "r" | "rbc" | "motzkin" => {
                    let atom = match name.as_str() {
                        "c" => Atom::Catalan,
                        "r" => Atom::Rueppel,
                        "rbc" => Atom::RueppelBC,
                        _ => Atom::Motzkin,
                    };
                    let k = self.parse_substitution()?;
                    Ok(Expr::Atom(atom, k))
                }
                other => Err(ExprError::Parse(format!(
                    "unknown name {other:?} (atoms: c, r, rbc, motzkin, x)"
                ))),
            },
            Some(Token::LParen) => {
                let inner = self.parse_expr()?;
                self.expect(Token::RParen)?;
                Ok(inner)
            }
            other => Err(ExprError::Parse(format!("unexpected token {other:?}"))),
        }
    }

    /// Optional `(x^k)` after an atom.
    fn parse_substitution(&mut self) -> Result<u32, ExprError> {
        if self.peek() != Some(&Token::LParen) {
            return Ok(1);
        }
        self.next();
        match self.next() {
            Some(Token::Ident(v)) if v == "x" => {}
            other => {
                return Err(ExprError::Parse(format!(
                    "substitution must be x or x^k, got {other:?}"
                )))
            }
        }
        let k = if self.peek() == Some(&Token::Caret) {
            self.next();
            self.parse_uint()?
        } else {
            1
        };
        if k == 0 {
            return Err(ExprError::Parse("substitution exponent must be positive".into()));
        }
        self.expect(Token::RParen)?;
        Ok(k)
    }
}

pub fn parse(input: &str) -> Result<Expr, ExprError> {
    let tokens = lex(input)?;
    if tokens.is_empty() {
        return Err(ExprError::Parse("empty expression".into()));
    }
    let mut parser = Parser { tokens, pos: 0 };
    let expr = parser.parse_expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(ExprError::Parse(format!(
            "trailing input from token {:?}",
            parser.tokens[parser.pos]
        )));
    }
    Ok(expr)
}

// --- evaluation --------------------------------------------------------

/// Ring-specific pieces of expression evaluation.
pub trait CliRing: Ring + rueppel_core::hankel::DetRing {
    const NAME: &'static str;

    fn from_rational(q: &Rational) -> Result<Self, ExprError>;

    fn rueppel_bc(order: usize) -> Result<Series<Self>, ExprError> {
        let _ = order;
        Err(ExprError::Eval(format!(
            "the rbc atom needs the poly-bc ring, not {}",
            Self::NAME
        )))
    }
}

impl CliRing for Integer {
    const NAME: &'static str = "int";

    fn from_rational(q: &Rational) -> Result<Self, ExprError> {
        q.to_integer().ok_or_else(|| {
            ExprError::Eval(format!("{q} is not an integer; use --ring rat"))
        })
    }
}

impl CliRing for Rational {
    const NAME: &'static str = "rat";

    fn from_rational(q: &Rational) -> Result<Self, ExprError> {
        Ok(q.clone())
    }
}

impl CliRing for Poly2 {
    const NAME: &'static str = "poly-bc";

    fn from_rational(q: &Rational) -> Result<Self, ExprError> {
        let n = q.to_integer().ok_or_else(|| {
            ExprError::Eval(format!("{q} is not an integer constant for the poly-bc ring"))
        })?;
        Ok(Poly2::from_integer(n))
    }

    fn rueppel_bc(order: usize) -> Result<Series<Self>, ExprError> {
        Ok(rueppel_bc_series(order))
    }
}

/// Evaluates an expression to a series with `order` trusted coefficients.
pub fn eval<R: CliRing>(expr: &Expr, order: usize) -> Result<Series<R>, ExprError> {
    match expr {
        Expr::Number(q) => Ok(Series::constant(R::from_rational(q)?, order)),
        Expr::Atom(atom, k) => {
            let k = *k as usize;
            let base_order = order / k + 1;
            let base: Series<R> = match atom {
                Atom::Catalan => catalan_series(base_order),
                Atom::Rueppel => rueppel_series(base_order),
                Atom::Motzkin => motzkin_series(base_order),
                Atom::RueppelBC => R::rueppel_bc(base_order)?,
                Atom::X => Series::x(base_order),
            };
            let composed = if k == 1 { base } else { base.compose_xk(k) };
            composed
                .truncated(order)
                .map_err(|e| ExprError::Eval(e.to_string()))
        }
        Expr::Neg(inner) => Ok(eval::<R>(inner, order)?.neg()),
        Expr::Add(a, b) => Ok(eval::<R>(a, order)?.add(&eval::<R>(b, order)?)),
        Expr::Sub(a, b) => Ok(eval::<R>(a, order)?.sub(&eval::<R>(b, order)?)),
        Expr::Mul(a, b) => {
            let lhs = eval::<R>(a, order)?;
            let rhs = eval::<R>(b, order)?;
            // A product loses trusted coefficients only through its inputs;
            // both arrive at full order here.
            Ok(lhs.mul(&rhs))
        }
        Expr::Div(a, b) => {
            let lhs = eval::<R>(a, order)?;
            let rhs = eval::<R>(b, order)?;
            lhs.div(&rhs).map_err(|e| {
                ExprError::Eval(format!(
                    "{e} (dividing in the {} ring; --ring rat admits more divisors)",
                    R::NAME
                ))
            })
        }
        Expr::Pow(base, e) => {
            let base = eval::<R>(base, order)?;
            let mut acc = Series::one(order);
            for _ in 0..*e {
                acc = acc.mul(&base);
            }
            Ok(acc)
        }
        Expr::Invert(t, inner) => {
            let series = eval::<R>(inner, order)?;
            let t = R::from_rational(t)?;
            let seq = invert_transform(&series.to_sequence(0), &t)
                .map_err(|e| ExprError::Eval(e.to_string()))?;
            Ok(seq.to_series())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rueppel_core::series::int_series;

    fn eval_int(src: &str, order: usize) -> Series<Integer> {
        eval::<Integer>(&parse(src).unwrap(), order).unwrap()
    }

    #[test]
    fn parses_and_evaluates_the_basic_forms() {
        assert_eq!(eval_int("1 - x*r", 8), int_series(&[1, -1, -1, 0, -1, 0, 0, 0]));
        assert_eq!(eval_int("c", 5), int_series(&[1, 1, 2, 5, 14]));
        assert_eq!(
            eval_int("1 - x + x^2*r(x^2)", 9),
            int_series(&[1, -1, 1, 0, 1, 0, 0, 0, 1])
        );
        assert_eq!(eval_int("x + 1/r(x^2)", 7), int_series(&[1, 1, -1, 0, 1, 0, -2]));
        assert_eq!(eval_int("motzkin", 5), int_series(&[1, 1, 2, 4, 9]));
        assert_eq!(eval_int("(1+x)^2", 4), int_series(&[1, 2, 1, 0]));
    }

    #[test]
    fn invert_function() {
        let s = eval_int("invert(-1, r(x^2))", 8);
        assert_eq!(s, int_series(&[1, -1, 2, -3, 4, -6, 10, -15]));
        let identity = eval_int("invert(0, c)", 5);
        assert_eq!(identity, int_series(&[1, 1, 2, 5, 14]));
    }

    #[test]
    fn rational_ring_accepts_fractions() {
        let s = eval::<Rational>(&parse("1/2 + x").unwrap(), 3).unwrap();
        assert_eq!(s.coeff(0), &Rational::from_i64s(1, 2));
        assert_eq!(s.coeff(1), &Rational::from_i64(1));
    }

    #[test]
    fn integer_ring_rejects_fractions_and_nonunit_division() {
        assert!(matches!(
            eval::<Integer>(&parse("1/2 + x").unwrap(), 3),
            Err(ExprError::Eval(_))
        ));
        assert!(matches!(
            eval::<Integer>(&parse("c / (2 + x)").unwrap(), 3),
            Err(ExprError::Eval(_))
        ));
        assert!(eval::<Rational>(&parse("c / (2 + x)").unwrap(), 3).is_ok());
    }

    #[test]
    fn rbc_requires_the_polynomial_ring() {
        assert!(eval::<Integer>(&parse("rbc").unwrap(), 4).is_err());
        let s = eval::<Poly2>(&parse("rbc").unwrap(), 4).unwrap();
        assert_eq!(s.coeff(1), &Poly2::var_c());
        assert_eq!(s.coeff(3), &Poly2::var_b());
    }

    #[test]
    fn parse_errors_are_reported() {
        assert!(parse("").is_err());
        assert!(parse("1 +").is_err());
        assert!(parse("q").is_err());
        assert!(parse("c(y^2)").is_err());
        assert!(parse("r(x^0)").is_err());
        assert!(parse("1 2").is_err());
        assert!(parse("invert(1 c)").is_err());
    }

    #[test]
    fn substitution_composes() {
        let direct = eval_int("r(x^4)", 13);
        let composed = eval::<Integer>(&parse("r").unwrap(), 4)
            .unwrap()
            .compose_xk(4)
            .truncated(13)
            .unwrap();
        assert_eq!(direct, composed);
    }
}
