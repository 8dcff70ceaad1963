use std::ops::Mul;

/// A freely reduced word in numbered generators, stored as syllables
/// `(generator, exponent)` with nonzero exponents and no two adjacent
/// syllables on the same generator.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    syllables: Vec<(usize, i64)>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn generator(gen: usize) -> Self {
        Word::power(gen, 1)
    }

    pub fn power(gen: usize, exp: i64) -> Self {
        Word::from_syllables([(gen, exp)])
    }

    /// Builds a word from arbitrary syllables, reducing freely.
    pub fn from_syllables(parts: impl IntoIterator<Item = (usize, i64)>) -> Self {
        let mut w = Word::identity();
        for (g, e) in parts {
            w.push(g, e);
        }
        w
    }

    fn push(&mut self, gen: usize, exp: i64) {
        if exp == 0 {
            return;
        }
        match self.syllables.last_mut() {
            Some((g, e)) if *g == gen => {
                *e += exp;
                if *e == 0 {
                    self.syllables.pop();
                }
            }
            _ => self.syllables.push((gen, exp)),
        }
    }

    pub fn syllables(&self) -> &[(usize, i64)] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn len(&self) -> usize {
        self.syllables.iter().map(|(_, e)| e.unsigned_abs() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word::from_syllables(self.syllables.iter().rev().map(|&(g, e)| (g, -e)))
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..n.unsigned_abs() {
            out = out * base.clone();
        }
        out
    }

    /// `[x, y] = x y x^-1 y^-1`.
    pub fn commutator(x: &Word, y: &Word) -> Word {
        x.clone() * y.clone() * x.inverse() * y.inverse()
    }

    /// Letters as signed generator numbers: `g + 1` or `-(g + 1)`.
    pub fn letters(&self) -> Vec<i64> {
        self.syllables
            .iter()
            .flat_map(|&(g, e)| {
                let letter = if e > 0 { g as i64 + 1 } else { -(g as i64 + 1) };
                std::iter::repeat_n(letter, e.unsigned_abs() as usize)
            })
            .collect()
    }
}

impl Mul for Word {
    type Output = Word;
    fn mul(mut self, rhs: Word) -> Word {
        for (g, e) in rhs.syllables {
            self.push(g, e);
        }
        self
    }
}
