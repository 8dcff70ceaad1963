//! Exact arithmetic in cyclotomic fields `Q(E(n))`, `E(n) = exp(2 pi i / n)`.
//!
//! Values are stored over the Zumbroich basis of their minimal conductor, so
//! equal numbers have identical representations and equality is structural.
//! This is the basis GAP uses, which keeps the `E(n)^k` text rendering
//! interchangeable with GAP output.

mod basis;
mod text;

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::util::{gcd, lcm};

pub use text::ParseCyclotomicError;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    conductor: u64,
    /// `(exponent, coefficient)` over the Zumbroich basis, exponent ascending,
    /// coefficients nonzero.
    terms: Vec<(u64, BigRational)>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic {
            conductor: 1,
            terms: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(q: BigRational) -> Self {
        let terms = if q.is_zero() { Vec::new() } else { vec![(0, q)] };
        Cyclotomic { conductor: 1, terms }
    }

    /// `E(n)^k`.
    pub fn root_of_unity(n: u64, k: i64) -> Self {
        assert!(n > 0, "conductor must be positive");
        let mut dense = vec![BigRational::zero(); n as usize];
        dense[k.rem_euclid(n as i64) as usize] = BigRational::one();
        Self::from_power_coefficients(n, dense)
    }

    /// Builds `sum_k coeffs[k] E(n)^k` and canonicalizes it.
    pub fn from_power_coefficients(n: u64, coeffs: Vec<BigRational>) -> Self {
        assert_eq!(coeffs.len() as u64, n, "one coefficient per power of E(n)");
        basis::canonicalize(n, coeffs)
    }

    /// Integer-coefficient variant of [`Cyclotomic::from_power_coefficients`].
    pub fn from_integer_powers(n: u64, coeffs: &[i64]) -> Self {
        let dense = coeffs
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        Self::from_power_coefficients(n, dense)
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn terms(&self) -> &[(u64, BigRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.conductor == 1 && self.terms.len() == 1 && self.terms[0].1.is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        match (self.conductor, self.terms.as_slice()) {
            (1, []) => Some(BigRational::zero()),
            (1, [(_, c)]) => Some(c.clone()),
            _ => None,
        }
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    /// True when every basis coefficient is an integer. The Zumbroich basis
    /// is an integral basis, so this tests for algebraic integers.
    pub fn is_integral(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_integer())
    }

    /// Dense coefficients over `E(n)^0 .. E(n)^(n-1)` for a multiple `n` of
    /// the conductor.
    pub fn power_coefficients(&self, n: u64) -> Vec<BigRational> {
        assert_eq!(n % self.conductor, 0, "{n} is not a multiple of the conductor");
        let scale = n / self.conductor;
        let mut dense = vec![BigRational::zero(); n as usize];
        for (k, c) in &self.terms {
            dense[(k * scale) as usize] = c.clone();
        }
        dense
    }

    fn combine(&self, other: &Cyclotomic, negate_other: bool) -> Cyclotomic {
        let n = lcm(self.conductor, other.conductor);
        let mut dense = vec![BigRational::zero(); n as usize];
        let (sa, sb) = (n / self.conductor, n / other.conductor);
        for (k, c) in &self.terms {
            dense[(k * sa) as usize] += c;
        }
        for (k, c) in &other.terms {
            let slot = &mut dense[(k * sb) as usize];
            if negate_other {
                *slot -= c;
            } else {
                *slot += c;
            }
        }
        basis::canonicalize(n, dense)
    }

    fn product(&self, other: &Cyclotomic) -> Cyclotomic {
        if self.is_zero() || other.is_zero() {
            return Cyclotomic::zero();
        }
        if let Some(q) = self.as_rational() {
            return other.scale(&q);
        }
        if let Some(q) = other.as_rational() {
            return self.scale(&q);
        }
        let n = lcm(self.conductor, other.conductor);
        let (sa, sb) = (n / self.conductor, n / other.conductor);
        let mut dense = vec![BigRational::zero(); n as usize];
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let k = (ka * sa + kb * sb) % n;
                dense[k as usize] += ca * cb;
            }
        }
        basis::canonicalize(n, dense)
    }

    pub fn scale(&self, q: &BigRational) -> Cyclotomic {
        if q.is_zero() {
            return Cyclotomic::zero();
        }
        Cyclotomic {
            conductor: self.conductor,
            terms: self.terms.iter().map(|(k, c)| (*k, c * q)).collect(),
        }
    }

    pub fn pow(&self, mut exp: u64) -> Cyclotomic {
        let mut acc = Cyclotomic::one();
        let mut sq = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &sq;
            }
            exp >>= 1;
            if exp > 0 {
                sq = &sq * &sq;
            }
        }
        acc
    }

    /// Image under the Galois automorphism `E(n) -> E(n)^k`, where `k` must be
    /// coprime to the conductor.
    pub fn galois(&self, k: i64) -> Cyclotomic {
        let n = self.conductor;
        let k = k.rem_euclid(n as i64) as u64;
        assert_eq!(gcd(k.max(1), n), 1, "exponent {k} is not coprime to conductor {n}");
        if n == 1 {
            return self.clone();
        }
        let mut dense = vec![BigRational::zero(); n as usize];
        for (e, c) in &self.terms {
            dense[((e * k) % n) as usize] += c;
        }
        basis::canonicalize(n, dense)
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Cyclotomic {
        self.galois(-1)
    }

    /// Multiplicative inverse via the norm: `x^-1 = (prod of the other
    /// conjugates) / N(x)`.
    pub fn inv(&self) -> Option<Cyclotomic> {
        if self.is_zero() {
            return None;
        }
        let n = self.conductor;
        let mut others = Cyclotomic::one();
        for k in 2..n.max(2) {
            if gcd(k, n) == 1 {
                others = &others * &self.galois(k as i64);
            }
        }
        let norm = (self * &others)
            .as_rational()
            .expect("norm of a cyclotomic number is rational");
        Some(others.scale(&norm.recip()))
    }

    /// Least `k >= 1` with `self^k = 1`, or `None` when `self` is not a root
    /// of unity.
    pub fn root_order(&self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let n = self.conductor;
        // Fast path: a single basis element with coefficient +-1.
        if let [(k, c)] = self.terms.as_slice() {
            if c.is_one() {
                return Some(n / gcd(*k, n));
            }
            if (-c).is_one() {
                let (two_n, e) = (2 * n, 2 * k + n);
                return Some(two_n / gcd(e % two_n, two_n));
            }
            if n == 1 {
                return None;
            }
        }
        // Roots of unity in Q(E(n)) have order dividing lcm(2, n).
        let big = lcm(2, n);
        if !self.pow(big).is_one() {
            return None;
        }
        (1..=big)
            .filter(|d| big % d == 0)
            .find(|&d| self.pow(d).is_one())
    }

    /// Floating-point value, for display only.
    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.conductor as f64;
        self.terms.iter().fold((0.0, 0.0), |(re, im), (k, c)| {
            let c = c.to_f64().unwrap_or(f64::NAN);
            let angle = 2.0 * std::f64::consts::PI * (*k as f64) / n;
            (re + c * angle.cos(), im + c * angle.sin())
        })
    }

    pub(crate) fn from_canonical(conductor: u64, terms: Vec<(u64, BigRational)>) -> Self {
        Cyclotomic { conductor, terms }
    }
}

impl Default for Cyclotomic {
    fn default() -> Self {
        Cyclotomic::zero()
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Cyclotomic::from_integer(n)
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                let f: fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic = $body;
                f(self, rhs)
            }
        }
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| a.combine(b, false));
binop!(Sub, sub, |a, b| a.combine(b, true));
binop!(Mul, mul, |a, b| a.product(b));

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |a, b| a + b)
    }
}

impl<'a> Sum<&'a Cyclotomic> for Cyclotomic {
    fn sum<I: Iterator<Item = &'a Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |a, b| a + b)
    }
}
