//! Zumbroich basis reduction and minimal-conductor search.
//!
//! Write `n = q * m` with `q = p^v` the full power of a prime `p` dividing
//! `n`. The `p`-component of `E(n)^k` is `E(q)^s` with `s = k * m^-1 mod q`.
//! Split `s = low + d * q/p` where `low` is the balanced residue of `s`
//! modulo `q/p` (plain residue when `p = 2`). The element is a basis element
//! for `p` iff `d != 0` (odd `p`) or `d == 0` (`p = 2`). Non-basis terms are
//! rewritten with `1 + E(p) + ... + E(p)^(p-1) = 0`, i.e. by shifting the
//! exponent by multiples of `n/p`, which leaves the other components alone.

use num_rational::BigRational;
use num_traits::Zero;

use super::Cyclotomic;
use crate::util::distinct_prime_factors;

struct PrimePart {
    p: u64,
    q: u64,
    m_inv: u64,
}

impl PrimePart {
    fn new(n: u64, p: u64) -> Self {
        let mut q = 1;
        while n % (q * p) == 0 {
            q *= p;
        }
        let m = n / q;
        let m_inv = (1..=q).find(|&x| (m % q) * x % q == 1 % q).unwrap_or(0);
        PrimePart { p, q, m_inv }
    }

    /// The `E(p)` digit of `E(n)^k`.
    fn top_digit(&self, k: u64) -> u64 {
        let s = (k % self.q) * self.m_inv % self.q;
        let step = self.q / self.p;
        let low = if self.p == 2 {
            s % step
        } else {
            let r = s % step;
            // balanced residue: shift into (-step/2, step/2]
            if 2 * r > step {
                r as i64 - step as i64
            } else {
                r as i64
            }
            .rem_euclid(self.q as i64) as u64
        };
        ((s + self.q - low) % self.q) / step % self.p
    }

    fn is_basis(&self, k: u64) -> bool {
        let d = self.top_digit(k);
        if self.p == 2 {
            d == 0
        } else {
            d != 0
        }
    }
}

/// Exponents `k` with `E(n)^k` in the Zumbroich basis of `Q(E(n))`.
#[cfg(test)]
pub(crate) fn basis_exponents(n: u64) -> Vec<u64> {
    let parts: Vec<PrimePart> = distinct_prime_factors(n)
        .into_iter()
        .map(|p| PrimePart::new(n, p))
        .collect();
    (0..n)
        .filter(|&k| parts.iter().all(|pp| pp.is_basis(k)))
        .collect()
}

/// Rewrites a dense power vector over the basis of `Q(E(n))` and then
/// descends to the minimal conductor.
pub(crate) fn canonicalize(n: u64, mut dense: Vec<BigRational>) -> Cyclotomic {
    for p in distinct_prime_factors(n) {
        let part = PrimePart::new(n, p);
        let shift = n / p;
        for k in 0..n {
            if dense[k as usize].is_zero() || part.is_basis(k) {
                continue;
            }
            let c = std::mem::take(&mut dense[k as usize]);
            if p == 2 {
                // E(2) = -1
                dense[((k + shift) % n) as usize] -= &c;
            } else {
                for j in 1..p {
                    dense[((k + j * shift) % n) as usize] -= &c;
                }
            }
        }
    }
    reduce_conductor(n, dense)
}

fn reduce_conductor(mut n: u64, mut dense: Vec<BigRational>) -> Cyclotomic {
    'outer: loop {
        if n == 1 {
            break;
        }
        for p in distinct_prime_factors(n) {
            if let Some(smaller) = try_descend(n, p, &dense) {
                n /= p;
                dense = smaller;
                continue 'outer;
            }
        }
        break;
    }
    let terms = dense
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k as u64, c))
        .collect();
    Cyclotomic::from_canonical(n, terms)
}

/// If the canonical vector `dense` lies in `Q(E(n/p))`, returns its canonical
/// vector there.
fn try_descend(n: u64, p: u64, dense: &[BigRational]) -> Option<Vec<BigRational>> {
    let small = n / p;
    let squared = n % (p * p) == 0;
    let mut out = vec![BigRational::zero(); small as usize];
    if squared || p == 2 {
        // The top layer for p has a relative basis containing 1: only terms
        // with exponent divisible by p may appear.
        for (k, c) in dense.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k as u64 % p != 0 {
                return None;
            }
            out[k / p as usize] = c.clone();
        }
        return Some(out);
    }
    // p exactly divides n and is odd: the relative basis is E(p)^1..E(p)^(p-1);
    // an element of the subfield has equal coefficients along each such fibre.
    let part = PrimePart::new(n, p);
    let shift = small;
    for base in 0..shift {
        // exponent in this fibre with E(p)-digit 0
        let anchor = (0..p)
            .map(|j| base + j * shift)
            .find(|&k| part.top_digit(k) == 0)
            .expect("each fibre has one exponent per digit");
        let fibre: Vec<&BigRational> = (1..p)
            .map(|j| &dense[((anchor + j * shift) % n) as usize])
            .collect();
        if fibre.iter().any(|c| *c != fibre[0]) {
            return None;
        }
        if !fibre[0].is_zero() {
            out[(anchor / p) as usize] = -fibre[0].clone();
        }
    }
    Some(out)
}
