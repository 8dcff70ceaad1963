//! Exact integer arithmetic on algebraic integers of `Q(E(n))` written in
//! the power basis, used to check orthogonality without big rationals.

use num_traits::ToPrimitive;

use crate::cyclotomic::Cyclotomic;

/// Sparse power-basis form `sum c * E(n)^k` with machine-integer
/// coefficients.
#[derive(Debug, Clone)]
pub(crate) struct IntCyc {
    pub terms: Vec<(usize, i64)>,
}

impl IntCyc {
    /// `None` if a coefficient is not an integer or does not fit.
    pub fn from_cyclotomic(c: &Cyclotomic, n: u64) -> Option<IntCyc> {
        let scale = (n / c.conductor()) as usize;
        let terms = c
            .terms()
            .iter()
            .map(|(k, q)| {
                if !q.is_integer() {
                    return None;
                }
                Some((*k as usize * scale, q.to_integer().to_i64()?))
            })
            .collect::<Option<Vec<_>>>()?;
        Some(IntCyc { terms })
    }
}

/// Accumulator in `Z[x]/(x^n - 1)` with a zero test modulo `Phi_n`.
pub(crate) struct Accumulator<'a> {
    n: usize,
    phi: &'a [i128],
    coeffs: Vec<i128>,
}

impl<'a> Accumulator<'a> {
    pub fn new(n: usize, phi: &'a [i128]) -> Self {
        Accumulator {
            n,
            phi,
            coeffs: vec![0; n],
        }
    }

    /// Adds `weight * a * conj(b)`.
    pub fn add_product_conj(&mut self, weight: i128, a: &IntCyc, b: &IntCyc) {
        for &(ka, ca) in &a.terms {
            for &(kb, cb) in &b.terms {
                let k = (ka + self.n - kb) % self.n;
                self.coeffs[k] += weight * ca as i128 * cb as i128;
            }
        }
    }

    /// Whether the accumulated value equals the rational integer `target`.
    pub fn equals(&self, target: i128) -> bool {
        let mut c = self.coeffs.clone();
        c[0] -= target;
        let d = self.phi.len() - 1;
        for i in (d..self.n).rev() {
            let top = c[i];
            if top != 0 {
                for (j, &p) in self.phi.iter().enumerate() {
                    c[i - d + j] -= top * p;
                }
            }
        }
        c[..d].iter().all(|&x| x == 0)
    }
}

/// Coefficients of the `n`-th cyclotomic polynomial, low degree first.
pub(crate) fn cyclotomic_polynomial(n: u64) -> Vec<i128> {
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    let mut num = vec![0i128; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in (1..n).filter(|d| n % d == 0) {
        num = exact_divide(&num, &cyclotomic_polynomial(d));
    }
    num
}

fn exact_divide(num: &[i128], den: &[i128]) -> Vec<i128> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i128; num.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        for (j, &p) in den.iter().enumerate() {
            rem[i + j] -= c * p;
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    quot
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(cyclotomic_polynomial(9), vec![1, 0, 0, 1, 0, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
    }

    #[test]
    fn accumulator_zero_test() {
        let phi = cyclotomic_polynomial(4);
        let i = IntCyc::from_cyclotomic(&Cyclotomic::root_of_unity(4, 1), 4).unwrap();
        let one = IntCyc::from_cyclotomic(&Cyclotomic::one(), 4).unwrap();
        let mut acc = Accumulator::new(4, &phi);
        acc.add_product_conj(1, &i, &i);
        assert!(acc.equals(1));
        acc.add_product_conj(1, &i, &one);
        acc.add_product_conj(-1, &i, &one);
        assert!(acc.equals(1));
        acc.add_product_conj(1, &i, &one);
        assert!(!acc.equals(1));
    }
}
