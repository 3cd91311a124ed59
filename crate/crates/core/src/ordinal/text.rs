//! Text form of ordinal terms.
//!
//! ```text
//! term  := "0" | mono ("+" mono)*
//! mono  := nat | head ("*" nat)?
//! head  := "1" | "w" | "w^(" term ")" | "e(" term ")"
//! ```
//!
//! Whitespace is ignored. A bare natural `n` denotes `w^0 * n`. Printing
//! uses the shortest head form, omits `*1`, separates top-level monomials
//! with `" + "` and nested ones with `"+"`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use super::{Head, Monomial, Ordinal};
use crate::ackmath::Nat;
use crate::error::Error;

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_term(self, f, " + ")
    }
}

fn write_term(o: &Ordinal, f: &mut fmt::Formatter<'_>, sep: &str) -> fmt::Result {
    if o.is_zero() {
        return f.write_str("0");
    }
    for (i, mono) in o.terms.iter().enumerate() {
        if i > 0 {
            f.write_str(sep)?;
        }
        match &mono.head {
            Head::Omega(e) if e.is_zero() => {
                write!(f, "{}", mono.coeff)?;
                continue;
            }
            Head::Omega(e) if *e == Ordinal::one() => f.write_str("w")?,
            Head::Omega(e) => {
                f.write_str("w^(")?;
                write_term(e, f, "+")?;
                f.write_str(")")?;
            }
            Head::Eps(g) => {
                f.write_str("e(")?;
                write_term(g, f, "+")?;
                f.write_str(")")?;
            }
        }
        if !mono.coeff.is_one() {
            write!(f, "*{}", mono.coeff)?;
        }
    }
    Ok(())
}

impl FromStr for Ordinal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser {
            src: s.as_bytes(),
            pos: 0,
        };
        let term = p.term()?;
        p.skip_ws();
        if p.pos < p.src.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(term)
    }
}

struct Parser<'s> {
    src: &'s [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), Error> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn term(&mut self) -> Result<Ordinal, Error> {
        let mut monos: Vec<(usize, Monomial)> = Vec::new();
        loop {
            let at = {
                self.skip_ws();
                self.pos
            };
            monos.push((at, self.mono()?));
            if !self.eat(b'+') {
                break;
            }
        }
        if let [(_, only)] = monos.as_slice() {
            if only.coeff.is_zero() {
                return Ok(Ordinal::zero());
            }
        }
        let mut terms: Vec<Monomial> = Vec::with_capacity(monos.len());
        for (at, mono) in monos {
            if mono.coeff.is_zero() {
                return Err(Error::Parse {
                    pos: at,
                    msg: "zero monomial inside a sum".into(),
                });
            }
            if let Some(prev) = terms.last() {
                if prev.head <= mono.head {
                    return Err(Error::Parse {
                        pos: at,
                        msg: "monomials must appear in strictly decreasing order".into(),
                    });
                }
            }
            terms.push(mono);
        }
        Ok(Ordinal { terms })
    }

    fn mono(&mut self) -> Result<Monomial, Error> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let mut n = self.nat()?;
                if self.eat(b'*') {
                    n *= self.nat()?;
                }
                Ok(Monomial {
                    head: Head::Omega(Ordinal::zero()),
                    coeff: n,
                })
            }
            Some(b'w') | Some(b'e') => {
                let head = self.head()?;
                let coeff = if self.eat(b'*') {
                    let at = self.pos;
                    let n = self.nat()?;
                    if n.is_zero() {
                        return Err(Error::Parse {
                            pos: at,
                            msg: "coefficient must be positive".into(),
                        });
                    }
                    n
                } else {
                    Nat::one()
                };
                Ok(Monomial { head, coeff })
            }
            _ => Err(self.error("expected a natural number, 'w' or 'e('")),
        }
    }

    fn head(&mut self) -> Result<Head, Error> {
        if self.eat(b'e') {
            self.expect(b'(')?;
            let g = self.term()?;
            self.expect(b')')?;
            return Ok(Head::Eps(g));
        }
        self.expect(b'w')?;
        let exponent = if self.eat(b'^') {
            self.expect(b'(')?;
            let e = self.term()?;
            self.expect(b')')?;
            e
        } else {
            Ordinal::one()
        };
        // w^(e_g) collapses to e_g.
        let collapsed = Ordinal::omega_pow(&exponent);
        Ok(collapsed.terms.into_iter().next().expect("nonzero").head)
    }

    fn nat(&mut self) -> Result<Nat, Error> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a natural number"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("decimal digits"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_zero_and_naturals() {
        assert_eq!("0".parse::<Ordinal>().unwrap(), Ordinal::zero());
        assert_eq!(" 7 ".parse::<Ordinal>().unwrap(), Ordinal::from(7));
        assert_eq!("1*5".parse::<Ordinal>().unwrap(), Ordinal::from(5));
    }

    #[test]
    fn round_trips() {
        for s in [
            "e(0)*2 + w^(2)*3 + 5",
            "w^(e(1)+e(0)) + e(1)*2",
            "w^(w)",
            "w*4 + 1",
            "e(e(0)+w) + e(3)",
            "w^(w^(w^(e(0)+1)))",
        ] {
            let o: Ordinal = s.parse().unwrap();
            assert_eq!(o.to_string(), s);
            assert_eq!(o.to_string().parse::<Ordinal>().unwrap(), o);
        }
    }

    #[test]
    fn whitespace_insensitive() {
        let a: Ordinal = "w ^ ( e ( 1 ) + e(0) )+e( 1 ) * 2".parse().unwrap();
        assert_eq!(a.to_string(), "w^(e(1)+e(0)) + e(1)*2");
    }

    #[test]
    fn collapses_omega_of_epsilon() {
        let a: Ordinal = "w^(e(0))".parse().unwrap();
        assert_eq!(a.to_string(), "e(0)");
        let b: Ordinal = "w^(1)".parse().unwrap();
        assert_eq!(b.to_string(), "w");
        let c: Ordinal = "w^(0)*3".parse().unwrap();
        assert_eq!(c.to_string(), "3");
    }

    #[test]
    fn errors_carry_positions() {
        let err = |s: &str| match s.parse::<Ordinal>() {
            Err(Error::Parse { pos, .. }) => pos,
            other => panic!("expected parse error for {s:?}, got {other:?}"),
        };
        assert_eq!(err(""), 0);
        assert_eq!(err("w + e(0)"), 4);
        assert_eq!(err("w^(2"), 4);
        assert_eq!(err("e(0) x"), 5);
        assert_eq!(err("w*0"), 2);
        assert_eq!(err("w + 0"), 4);
        assert_eq!(err("1 + 1"), 4);
        assert_eq!(err("w^(e(0)) + e(0)"), 11);
    }
}
