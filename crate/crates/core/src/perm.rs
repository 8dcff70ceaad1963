//! Permutations of `{0, .., degree - 1}`.
//!
//! Products act on the right: `a.then(&b)` sends `i` to `b[a[i]]`. This is the
//! convention coset enumeration produces, so words evaluate left to right.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("image array is not a bijection on 0..{degree}")]
    NotBijective { degree: usize },
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("point {point} repeated inside cycle notation")]
    RepeatedPoint { point: usize },
    #[error("permutations of degree {left} and {right} cannot be composed")]
    DegreeMismatch { left: usize, right: usize },
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image array, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self, PermError> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &img in &images {
            let img = img as usize;
            if img >= degree || seen[img] {
                return Err(PermError::NotBijective { degree });
            }
            seen[img] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from disjoint cycles given with 1-based points,
    /// the way they are usually printed: `(1 2 4 7)(3 6 8 5)`.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (pos, &pt) in cycle.iter().enumerate() {
                if pt == 0 || pt > degree {
                    return Err(PermError::PointOutOfRange { point: pt, degree });
                }
                if used[pt - 1] {
                    return Err(PermError::RepeatedPoint { point: pt });
                }
                used[pt - 1] = true;
                let next = cycle[(pos + 1) % cycle.len()];
                if next == 0 || next > degree {
                    return Err(PermError::PointOutOfRange { point: next, degree });
                }
                images[pt - 1] = (next - 1) as u32;
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        }
    }

    pub fn checked_then(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.then(other))
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Permutation { images }
    }

    pub fn pow(&self, exp: i64) -> Permutation {
        let base = if exp < 0 { self.inverse() } else { self.clone() };
        let mut n = exp.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        let mut sq = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.then(&sq);
            }
            sq = sq.then(&sq);
            n >>= 1;
        }
        acc
    }

    /// Order as the lcm of cycle lengths.
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.degree()];
        let mut ord = 1u64;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut pt = start;
            while !seen[pt] {
                seen[pt] = true;
                pt = self.images[pt] as usize;
                len += 1;
            }
            ord = num_integer::lcm(ord, len);
        }
        ord
    }

    /// Disjoint cycles of length > 1, 1-based, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut pt = start;
            while !seen[pt] {
                seen[pt] = true;
                cycle.push(pt + 1);
                pt = self.images[pt] as usize;
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (i, pt) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{pt}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_bijection() {
        assert_eq!(
            Permutation::from_images(vec![0, 0, 1]),
            Err(PermError::NotBijective { degree: 3 })
        );
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
    }

    #[test]
    fn composition_acts_on_the_right() {
        let a = Permutation::from_cycles(3, &[vec![1, 2]]).unwrap();
        let b = Permutation::from_cycles(3, &[vec![2, 3]]).unwrap();
        // 1 -a-> 2 -b-> 3
        assert_eq!(a.then(&b).image(0), 2);
        assert_eq!(a.then(&b).to_string(), "(1 3 2)");
    }

    #[test]
    fn four_cycle_order_and_inverse() {
        let c = Permutation::from_cycles(4, &[vec![1, 2, 3, 4]]).unwrap();
        assert_eq!(c.order(), 4);
        assert!(c.then(&c.inverse()).is_identity());
        assert_eq!(c.pow(-1), c.inverse());
        assert!(c.pow(4).is_identity());
        assert_eq!(c.pow(6), c.pow(2));
    }

    #[test]
    fn cycle_notation_errors() {
        assert!(matches!(
            Permutation::from_cycles(3, &[vec![1, 4]]),
            Err(PermError::PointOutOfRange { .. })
        ));
        assert!(matches!(
            Permutation::from_cycles(3, &[vec![1, 2], vec![2, 3]]),
            Err(PermError::RepeatedPoint { point: 2 })
        ));
    }
}
