//! `E(n)^k` text form, e.g. `2*E(4)`, `E(8)-E(8)^3`, `-1/2*E(3)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::Cyclotomic;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid cyclotomic literal at offset {offset}: {message}")]
pub struct ParseCyclotomicError {
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            if negative {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            let mag = c.abs();
            if *k == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "E({})", self.conductor)?;
            if *k != 1 {
                write!(f, "^{k}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Cyclotomic {
    type Err = ParseCyclotomicError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parser = Parser {
            src: s.as_bytes(),
            pos: 0,
        };
        let value = parser.expr()?;
        parser.skip_ws();
        if parser.pos != parser.src.len() {
            return Err(parser.error("unexpected trailing input"));
        }
        Ok(value)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> ParseCyclotomicError {
        ParseCyclotomicError {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, byte: u8) -> Result<(), ParseCyclotomicError> {
        if self.eat(byte) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", byte as char)))
        }
    }

    fn expr(&mut self) -> Result<Cyclotomic, ParseCyclotomicError> {
        let mut acc = if self.eat(b'-') {
            -self.term()?
        } else {
            self.eat(b'+');
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = acc + self.term()?;
            } else if self.eat(b'-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Cyclotomic, ParseCyclotomicError> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = acc * self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Cyclotomic, ParseCyclotomicError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(b'E') => {
                self.pos += 1;
                self.expect(b'(')?;
                let n = self.unsigned()?;
                self.expect(b')')?;
                if n.is_zero() {
                    return Err(self.error("E(0) is undefined"));
                }
                let n: u64 = n
                    .try_into()
                    .map_err(|_| self.error("conductor too large"))?;
                let k = if self.eat(b'^') {
                    let negative = self.eat(b'-');
                    let k: i64 = self
                        .unsigned()?
                        .try_into()
                        .map_err(|_| self.error("exponent too large"))?;
                    if negative {
                        -k
                    } else {
                        k
                    }
                } else {
                    1
                };
                Ok(Cyclotomic::root_of_unity(n, k))
            }
            Some(b'0'..=b'9') => {
                let num = self.unsigned()?;
                let value = if self.eat(b'/') {
                    let den = self.unsigned()?;
                    if den.is_zero() {
                        return Err(self.error("zero denominator"));
                    }
                    BigRational::new(num, den)
                } else {
                    BigRational::from_integer(num)
                };
                Ok(Cyclotomic::from_rational(value))
            }
            _ => Err(self.error("expected a number, E(n) or '('")),
        }
    }

    fn unsigned(&mut self) -> Result<BigInt, ParseCyclotomicError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(digits.parse().unwrap())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_and_parses() {
        for text in ["0", "1", "-1", "3/2", "2*E(4)", "-2*E(4)", "E(8)-E(8)^3", "1+E(4)", "E(3)^2"] {
            let value: Cyclotomic = text.parse().unwrap();
            assert_eq!(value.to_string(), text);
        }
    }

    #[test]
    fn parses_non_canonical_input() {
        let a: Cyclotomic = "E(4)^2".parse().unwrap();
        assert_eq!(a, Cyclotomic::from(-1));
        let b: Cyclotomic = "2 * E(4)^-1 + 2*E(4)".parse().unwrap();
        assert!(b.is_zero());
        let c: Cyclotomic = "(E(8)+E(8)^7)*(E(8)+E(8)^7)".parse().unwrap();
        assert_eq!(c, Cyclotomic::from(2));
        let d: Cyclotomic = "-E(3)-E(3)^2".parse().unwrap();
        assert!(d.is_one());
    }

    #[test]
    fn reports_offsets() {
        let err = "2*E(4".parse::<Cyclotomic>().unwrap_err();
        assert_eq!(err.offset, 5);
        assert!("E(0)".parse::<Cyclotomic>().is_err());
        assert!("1/0".parse::<Cyclotomic>().is_err());
        assert!("2 3".parse::<Cyclotomic>().is_err());
    }
}
