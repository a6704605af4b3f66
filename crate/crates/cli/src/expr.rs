//! Expression syntax for elements of `O_A^(0)`.
//!
//! ```text
//! sum     := product (('+' | '-') product)*
//! product := ['-'] postfix (['.'] postfix)*
//! postfix := atom '*'*
//! atom    := 's' digits | 'I' | 'i' | number | '(' sum ')'
//! number  := digits ['/' digits] | digits '.' digits
//! ```
//!
//! Juxtaposition and `.` both multiply; `*` is the adjoint.

use ckstar::{AlgebraElement, GaussianRational, Scalar, ZeroOneMatrix};
use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error(transparent)]
    Algebra(#[from] ckstar::Error),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Gen(u32),
    Unit,
    Imag,
    Num(BigInt, BigInt),
    Plus,
    Minus,
    Star,
    Dot,
    Open,
    Close,
}

fn syntax(position: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        position,
        message: message.into(),
    }
}

fn digits(chars: &[char], mut i: usize) -> usize {
    while i < chars.len() && chars[i].is_ascii_digit() {
        i += 1;
    }
    i
}

fn parse_int(chars: &[char], from: usize, to: usize) -> BigInt {
    chars[from..to]
        .iter()
        .collect::<String>()
        .parse()
        .expect("ascii digits")
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let tok = match c {
            _ if c.is_whitespace() => {
                i += 1;
                continue;
            }
            's' => {
                let end = digits(&chars, i + 1);
                if end == i + 1 {
                    return Err(syntax(i, "expected a generator index after 's'"));
                }
                let k: u32 = chars[i + 1..end]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| syntax(i, "generator index too large"))?;
                i = end;
                Tok::Gen(k)
            }
            'I' => {
                i += 1;
                Tok::Unit
            }
            'i' => {
                i += 1;
                Tok::Imag
            }
            '+' | '-' | '*' | '.' | '(' | ')' => {
                i += 1;
                match c {
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    '.' => Tok::Dot,
                    '(' => Tok::Open,
                    _ => Tok::Close,
                }
            }
            _ if c.is_ascii_digit() => {
                let end = digits(&chars, i);
                let numer = parse_int(&chars, i, end);
                i = end;
                if i + 1 < chars.len() && chars[i] == '/' && chars[i + 1].is_ascii_digit() {
                    let dend = digits(&chars, i + 1);
                    let denom = parse_int(&chars, i + 1, dend);
                    if denom.is_zero() {
                        return Err(syntax(i + 1, "zero denominator"));
                    }
                    i = dend;
                    Tok::Num(numer, denom)
                } else if i + 1 < chars.len() && chars[i] == '.' && chars[i + 1].is_ascii_digit() {
                    let fend = digits(&chars, i + 1);
                    let scale = BigInt::from(10).pow((fend - i - 1) as u32);
                    let frac = parse_int(&chars, i + 1, fend);
                    i = fend;
                    Tok::Num(numer * &scale + frac, scale)
                } else if i < chars.len() && chars[i] == '/' {
                    return Err(syntax(i + 1, "expected digits after '/'"));
                } else {
                    Tok::Num(numer, BigInt::one())
                }
            }
            _ => return Err(syntax(i, format!("unexpected character '{c}'"))),
        };
        out.push((start, tok));
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    ctx: &'a ZeroOneMatrix,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn sum(&mut self) -> Result<AlgebraElement, ParseError> {
        let mut acc = self.product()?;
        while let Some(t) = self.peek() {
            let negate = match t {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => break,
            };
            self.pos += 1;
            let rhs = self.product()?;
            acc = if negate { &acc - &rhs } else { &acc + &rhs };
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<AlgebraElement, ParseError> {
        let negate = self.peek() == Some(&Tok::Minus);
        if negate {
            self.pos += 1;
        }
        let mut acc = self.postfix()?;
        loop {
            match self.peek() {
                Some(Tok::Dot) => {
                    self.pos += 1;
                }
                Some(Tok::Gen(_) | Tok::Unit | Tok::Imag | Tok::Num(..) | Tok::Open) => {}
                _ => break,
            }
            let rhs = self.postfix()?;
            acc = &acc * &rhs;
        }
        Ok(if negate { -&acc } else { acc })
    }

    fn postfix(&mut self) -> Result<AlgebraElement, ParseError> {
        let mut x = self.atom()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            x = x.adjoint();
        }
        Ok(x)
    }

    fn atom(&mut self) -> Result<AlgebraElement, ParseError> {
        let at = self.here();
        let Some((_, tok)) = self.toks.get(self.pos).cloned() else {
            return Err(syntax(at, "unexpected end of input"));
        };
        self.pos += 1;
        match tok {
            Tok::Gen(k) => Ok(AlgebraElement::generator(self.ctx, k)?),
            Tok::Unit => Ok(AlgebraElement::unit(self.ctx)),
            Tok::Imag => Ok(AlgebraElement::scalar(
                self.ctx,
                GaussianRational::imaginary_unit().expect("complex field"),
            )),
            Tok::Num(p, q) => Ok(AlgebraElement::scalar(
                self.ctx,
                GaussianRational::from_ratio(&p, &q),
            )),
            Tok::Open => {
                let x = self.sum()?;
                if self.peek() != Some(&Tok::Close) {
                    return Err(syntax(self.here(), "expected ')'"));
                }
                self.pos += 1;
                Ok(x)
            }
            other => Err(syntax(at, format!("unexpected {}", describe(&other)))),
        }
    }
}

fn describe(t: &Tok) -> &'static str {
    match t {
        Tok::Plus => "'+'",
        Tok::Minus => "'-'",
        Tok::Star => "'*'",
        Tok::Dot => "'.'",
        Tok::Close => "')'",
        _ => "token",
    }
}

/// Parses `src` over `ctx` and returns its normal form.
pub fn parse_expression(src: &str, ctx: &ZeroOneMatrix) -> Result<AlgebraElement, ParseError> {
    let toks = lex(src)?;
    let end = src.chars().count();
    let mut p = Parser {
        toks,
        pos: 0,
        end,
        ctx,
    };
    if p.peek().is_none() {
        return Err(syntax(0, "empty expression"));
    }
    let x = p.sum()?;
    if p.pos < p.toks.len() {
        return Err(syntax(p.here(), "unexpected trailing input"));
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn golden() -> ZeroOneMatrix {
        ZeroOneMatrix::from_rows(&[[1, 1], [1, 0]]).unwrap()
    }

    #[test]
    fn half_unit_plus_generator_pair() {
        let f2 = ZeroOneMatrix::full(2);
        let x = parse_expression("s1 s2* + (1/2)I", &f2).unwrap();
        let s1 = AlgebraElement::generator(&f2, 1).unwrap();
        let s2 = AlgebraElement::generator(&f2, 2).unwrap();
        let half = AlgebraElement::scalar(&f2, GaussianRational::from_ratio(&1.into(), &2.into()));
        assert_eq!(x, &(&s1 * &s2.adjoint()) + &half);
        assert_eq!(parse_expression("s1.s2* + 0.5 I", &f2).unwrap(), x);
    }

    #[test]
    fn inadmissible_square_is_zero() {
        assert!(parse_expression("s2 s2", &golden()).unwrap().is_zero());
    }

    #[test]
    fn errors() {
        let f2 = ZeroOneMatrix::full(2);
        assert_eq!(
            parse_expression("s3", &f2),
            Err(ParseError::Algebra(ckstar::Error::IndexOutOfRange {
                index: 3,
                bound: 2
            }))
        );
        assert!(matches!(
            parse_expression("s1 + ", &f2),
            Err(ParseError::Syntax { position: 5, .. })
        ));
        assert!(matches!(
            parse_expression("s1 ) s2", &f2),
            Err(ParseError::Syntax { position: 3, .. })
        ));
        assert!(matches!(
            parse_expression("s1 # s2", &f2),
            Err(ParseError::Syntax { position: 3, .. })
        ));
        assert!(matches!(
            parse_expression("1/0", &f2),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_expression("", &f2),
            Err(ParseError::Syntax { .. })
        ));
    }

    #[test]
    fn adjoint_of_products_and_scalars() {
        let f2 = ZeroOneMatrix::full(2);
        assert_eq!(
            parse_expression("(s1 s2)*", &f2).unwrap(),
            parse_expression("s2* s1*", &f2).unwrap()
        );
        assert_eq!(
            parse_expression("(2 + i)* s1", &f2).unwrap(),
            parse_expression("2 s1 - i s1", &f2).unwrap()
        );
        assert_eq!(
            parse_expression("-s1 - -s1", &f2).unwrap(),
            AlgebraElement::zero(&f2)
        );
    }

    #[test]
    fn printed_forms_parse_back() {
        let f2 = ZeroOneMatrix::full(2);
        for src in [
            "3/4 i s1 s2* s1* - (2 + i) s2",
            "s1 s1* - 1/2 I",
            "-i s2*",
            "(1/3 - 2 i) s1 s2",
        ] {
            let x = parse_expression(src, &f2).unwrap();
            assert_eq!(
                parse_expression(&x.to_string(), &f2).unwrap(),
                x,
                "{src} -> {x}"
            );
        }
    }
}
