//! Text syntax for group words and relations.
//!
//! ```text
//! relation := word ('=' word)*
//! word     := factor (['*'] factor)*
//! factor   := atom ('^' ['-'] int | '^' '(' ['-'] int ')')*
//! atom     := ident | '1' | '(' word ')' | '[' word ',' word ']'
//! ```
//!
//! `[x,y]` is `x y x^-1 y^-1`. A chain `u = v = w` yields the relators
//! `u v^-1` and `v w^-1`; a lone word is itself a relator.

use crate::coset::Word;

/// A syntax or name-resolution error at a 1-based column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordError {
    pub column: usize,
    pub message: String,
    pub unknown_generator: Option<String>,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    names: &'a [String],
}

impl<'a> Lexer<'a> {
    fn error(&self, message: impl Into<String>) -> WordError {
        WordError {
            column: self.pos + 1,
            message: message.into(),
            unknown_generator: None,
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

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<(), WordError> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", b as char)))
        }
    }

    fn starts_atom(&mut self) -> bool {
        matches!(self.peek(), Some(c) if c == b'(' || c == b'[' || c == b'1' || c.is_ascii_alphabetic() || c == b'_')
    }

    fn relation(&mut self) -> Result<Vec<Word>, WordError> {
        let mut sides = vec![self.word()?];
        while self.eat(b'=') {
            sides.push(self.word()?);
        }
        if self.peek().is_some() {
            return Err(self.error("unexpected character"));
        }
        if sides.len() == 1 {
            return Ok(sides);
        }
        Ok(sides
            .windows(2)
            .map(|pair| pair[0].clone() * pair[1].inverse())
            .collect())
    }

    fn word(&mut self) -> Result<Word, WordError> {
        if !self.starts_atom() {
            return Err(self.error("expected a word"));
        }
        let mut acc = self.factor()?;
        loop {
            if self.eat(b'*') {
                acc = acc * self.factor()?;
            } else if self.starts_atom() {
                acc = acc * self.factor()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Word, WordError> {
        let mut base = self.atom()?;
        while self.eat(b'^') {
            let paren = self.eat(b'(');
            let negative = self.eat(b'-');
            let n = self.integer()?;
            if paren {
                self.expect(b')')?;
            }
            base = base.pow(if negative { -n } else { n });
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Word, WordError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let w = self.word()?;
                self.expect(b')')?;
                Ok(w)
            }
            Some(b'[') => {
                self.pos += 1;
                let x = self.word()?;
                self.expect(b',')?;
                let y = self.word()?;
                self.expect(b']')?;
                Ok(Word::commutator(&x, &y))
            }
            Some(b'1') => {
                let start = self.pos;
                let n = self.integer()?;
                if n != 1 {
                    self.pos = start;
                    return Err(self.error("only 1 may stand for the identity"));
                }
                Ok(Word::identity())
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match split_identifier(name, self.names) {
                    Some(gens) => Ok(Word::from_syllables(gens.into_iter().map(|g| (g, 1)))),
                    None => Err(WordError {
                        column: start + 1,
                        message: format!("unknown generator '{name}'"),
                        unknown_generator: Some(name.to_string()),
                    }),
                }
            }
            _ => Err(self.error("expected a generator, 1, '(' or '['")),
        }
    }

    fn integer(&mut self) -> Result<i64, WordError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.error("integer out of range"))
    }
}

/// Resolves an identifier to generators. A declared name wins outright;
/// otherwise the identifier must split uniquely into declared names, so
/// `abc` reads as `a*b*c` when only `a`, `b`, `c` are declared.
fn split_identifier(ident: &str, names: &[String]) -> Option<Vec<usize>> {
    if let Some(idx) = names.iter().position(|n| n == ident) {
        return Some(vec![idx]);
    }
    // ways[i]: number of segmentations of ident[i..] (capped at 2), with the
    // first name used for a unique one.
    let n = ident.len();
    let mut ways = vec![0u8; n + 1];
    let mut first = vec![usize::MAX; n + 1];
    ways[n] = 1;
    for i in (0..n).rev() {
        for (idx, name) in names.iter().enumerate() {
            if !name.is_empty() && ident[i..].starts_with(name.as_str()) {
                let rest = ways[i + name.len()];
                if rest > 0 {
                    ways[i] = (ways[i] + rest).min(2);
                    first[i] = idx;
                }
            }
        }
    }
    if ways[0] != 1 {
        return None;
    }
    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        out.push(first[i]);
        i += names[first[i]].len();
    }
    Some(out)
}

/// Parses a single word over the given generator names.
pub fn parse_word(text: &str, names: &[String]) -> Result<Word, WordError> {
    let mut lx = Lexer {
        src: text.as_bytes(),
        pos: 0,
        names,
    };
    let w = lx.word()?;
    if lx.peek().is_some() {
        return Err(lx.error("unexpected character"));
    }
    Ok(w)
}

/// Parses a relation (possibly a chain of equalities) into relators.
pub fn parse_relation(text: &str, names: &[String]) -> Result<Vec<Word>, WordError> {
    Lexer {
        src: text.as_bytes(),
        pos: 0,
        names,
    }
    .relation()
}

/// Renders a word in the same syntax, e.g. `a^2*b^-1`.
pub fn format_word(w: &Word, names: &[String]) -> String {
    if w.is_identity() {
        return "1".to_string();
    }
    w.syllables()
        .iter()
        .map(|&(g, e)| {
            if e == 1 {
                names[g].clone()
            } else {
                format!("{}^{}", names[g], e)
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> Vec<String> {
        ["a", "b", "c"].iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn juxtaposition_and_commutators() {
        let n = abc();
        let w = parse_word("a^4[[a,c],a]", &n).unwrap();
        let a = Word::generator(0);
        let c = Word::generator(2);
        let expected = a.pow(4) * Word::commutator(&Word::commutator(&a, &c), &a);
        assert_eq!(w, expected);
        assert_eq!(parse_word("a*b", &n).unwrap(), parse_word("a b", &n).unwrap());
        assert_eq!(parse_word("(a*b)^-1", &n).unwrap(), parse_word("b^-1 a^(-1)", &n).unwrap());
        assert!(parse_word("1", &n).unwrap().is_identity());
    }

    #[test]
    fn equality_chains() {
        let n = abc();
        let rels = parse_relation("a^4 = b^4 = c^2", &n).unwrap();
        assert_eq!(rels.len(), 2);
        assert_eq!(rels[0], Word::from_syllables([(0, 4), (1, -4)]));
        assert_eq!(rels[1], Word::from_syllables([(1, 4), (2, -2)]));
        let rels = parse_relation("[[a,b],b] = 1", &n).unwrap();
        assert_eq!(rels.len(), 1);
    }

    #[test]
    fn juxtaposed_single_letters() {
        let n = abc();
        assert_eq!(parse_word("abc", &n).unwrap(), parse_word("a*b*c", &n).unwrap());
        assert_eq!(
            parse_word("ab[a,c]a^4", &n).unwrap(),
            parse_word("a b [a,c] a^4", &n).unwrap()
        );
        let long: Vec<String> = ["x", "xy", "y"].iter().map(|s| s.to_string()).collect();
        assert_eq!(parse_word("xy", &long).unwrap(), Word::generator(1));
        // "xyy" splits as x·y·y or xy·y: ambiguous
        assert!(parse_word("xyy", &long).is_err());
    }

    #[test]
    fn errors_carry_columns() {
        let n = abc();
        let err = parse_word("a*d", &n).unwrap_err();
        assert_eq!(err.column, 3);
        assert_eq!(err.unknown_generator.as_deref(), Some("d"));
        let err = parse_word("[a,b", &n).unwrap_err();
        assert_eq!(err.column, 5);
        assert!(parse_word("a^", &n).is_err());
        assert!(parse_word("2", &n).is_err());
        assert!(parse_relation("a = ", &n).is_err());
    }

    #[test]
    fn formatting_round_trips() {
        let n = abc();
        let w = parse_word("a^2 b^-1 c", &n).unwrap();
        assert_eq!(format_word(&w, &n), "a^2*b^-1*c");
        assert_eq!(parse_word(&format_word(&w, &n), &n).unwrap(), w);
    }
}
