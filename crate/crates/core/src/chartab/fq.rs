//! Dense linear algebra over a prime field `F_q` with `q < 2^32`.

/// One step of a Hessenberg reduction: a simultaneous row and column
/// swap, or `row -= factor * pivot` on rows with the inverse column update.
#[derive(Debug, Clone, Copy)]
pub(crate) enum Step {
    Swap(usize, usize),
    Eliminate { row: usize, pivot: usize, factor: u64 },
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Fq {
    pub q: u64,
}

impl Fq {
    pub fn add(self, a: u64, b: u64) -> u64 {
        (a + b) % self.q
    }

    pub fn sub(self, a: u64, b: u64) -> u64 {
        (a + self.q - b) % self.q
    }

    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.q
    }

    pub fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.q;
        base %= self.q;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn inv(self, a: u64) -> u64 {
        assert_ne!(a % self.q, 0, "zero has no inverse");
        self.pow(a, self.q - 2)
    }

    /// A primitive `e`-th root of unity; `e` must divide `q - 1`.
    pub fn primitive_root_of_unity(self, e: u64) -> u64 {
        assert_eq!((self.q - 1) % e, 0);
        let primes = crate::util::distinct_prime_factors(e);
        (2..self.q)
            .map(|g| self.pow(g, (self.q - 1) / e))
            .find(|&z| primes.iter().all(|&l| self.pow(z, e / l) != 1))
            .expect("F_q^* is cyclic")
    }

    /// Reduces a square matrix to upper Hessenberg form `H = P A P^-1`,
    /// returning `H` and the elementary steps making up `P`.
    pub fn hessenberg(self, a: &[Vec<u64>]) -> (Vec<Vec<u64>>, Vec<Step>) {
        let n = a.len();
        let mut h: Vec<Vec<u64>> = a.to_vec();
        let mut steps = Vec::new();
        for c in 0..n.saturating_sub(2) {
            let Some(piv) = (c + 1..n).find(|&i| h[i][c] != 0) else {
                continue;
            };
            if piv != c + 1 {
                h.swap(piv, c + 1);
                for row in h.iter_mut() {
                    row.swap(piv, c + 1);
                }
                steps.push(Step::Swap(piv, c + 1));
            }
            let inv = self.inv(h[c + 1][c]);
            for k in c + 2..n {
                if h[k][c] == 0 {
                    continue;
                }
                let f = self.mul(h[k][c], inv);
                for j in 0..n {
                    let t = self.mul(f, h[c + 1][j]);
                    h[k][j] = self.sub(h[k][j], t);
                }
                for row in h.iter_mut() {
                    let t = self.mul(f, row[k]);
                    row[c + 1] = self.add(row[c + 1], t);
                }
                steps.push(Step::Eliminate { row: k, pivot: c + 1, factor: f });
            }
        }
        (h, steps)
    }

    /// Maps a vector `x` to `P^-1 x` for the steps of [`Fq::hessenberg`],
    /// so eigenvectors of `H` become eigenvectors of `A`.
    pub fn undo_steps(self, steps: &[Step], x: &mut [u64]) {
        for step in steps.iter().rev() {
            match *step {
                Step::Swap(a, b) => x.swap(a, b),
                Step::Eliminate { row, pivot, factor } => {
                    let t = self.mul(factor, x[pivot]);
                    x[row] = self.add(x[row], t);
                }
            }
        }
    }

    /// Characteristic polynomial `det(xI - A)` of a square matrix, low
    /// degree first.
    #[cfg(test)]
    pub fn charpoly(self, a: &[Vec<u64>]) -> Vec<u64> {
        self.charpoly_hessenberg(&self.hessenberg(a).0)
    }

    /// Characteristic polynomial of an upper Hessenberg matrix.
    pub fn charpoly_hessenberg(self, h: &[Vec<u64>]) -> Vec<u64> {
        let n = h.len();
        // p[m] is the characteristic polynomial of the leading m x m block.
        let mut p: Vec<Vec<u64>> = vec![vec![1]];
        for m in 1..=n {
            let prev = &p[m - 1];
            let mut next = vec![0u64; m + 1];
            for (d, &c) in prev.iter().enumerate() {
                next[d + 1] = self.add(next[d + 1], c);
                let t = self.mul(h[m - 1][m - 1], c);
                next[d] = self.sub(next[d], t);
            }
            let mut t = 1u64;
            for i in (1..m).rev() {
                t = self.mul(t, h[i][i - 1]);
                let f = self.mul(h[i - 1][m - 1], t);
                for (d, &c) in p[i - 1].iter().enumerate() {
                    let s = self.mul(f, c);
                    next[d] = self.sub(next[d], s);
                }
            }
            p.push(next);
        }
        p.pop().unwrap()
    }

    /// Null space by row echelon form and back substitution. Rows are only
    /// eliminated below the pivot, which keeps the cost quadratic on
    /// Hessenberg input.
    pub fn nullspace_echelon(self, a: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let rows = a.len();
        let cols = if rows == 0 { 0 } else { a[0].len() };
        let mut m = a.to_vec();
        let mut pivots: Vec<usize> = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else {
                continue;
            };
            m.swap(r, piv);
            let inv = self.inv(m[r][c]);
            for i in r + 1..rows {
                if m[i][c] == 0 {
                    continue;
                }
                let f = self.mul(m[i][c], inv);
                for j in c..cols {
                    if m[r][j] != 0 {
                        let t = self.mul(f, m[r][j]);
                        m[i][j] = self.sub(m[i][j], t);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        let mut is_pivot = vec![false; cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..cols)
            .filter(|&f| !is_pivot[f])
            .map(|free| {
                let mut v = vec![0u64; cols];
                v[free] = 1;
                for (i, &p) in pivots.iter().enumerate().rev() {
                    let mut acc = 0;
                    for j in p + 1..cols {
                        if m[i][j] != 0 && v[j] != 0 {
                            acc = self.add(acc, self.mul(m[i][j], v[j]));
                        }
                    }
                    v[p] = self.sub(0, self.mul(acc, self.inv(m[i][p])));
                }
                v
            })
            .collect()
    }

    pub fn eval(self, poly: &[u64], x: u64) -> u64 {
        poly.iter().rev().fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }

    /// Distinct roots of a polynomial in ascending order, by exhaustion.
    pub fn roots(self, poly: &[u64]) -> Vec<u64> {
        (0..self.q).filter(|&x| self.eval(poly, x) == 0).collect()
    }

    /// Basis of the right null space `{v : A v = 0}`.
    #[cfg(test)]
    pub fn nullspace(self, a: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let rows = a.len();
        let cols = if rows == 0 { 0 } else { a[0].len() };
        let mut m = a.to_vec();
        let pivots = self.rref_in_place(&mut m);
        let mut is_pivot = vec![false; cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..cols)
            .filter(|&f| !is_pivot[f])
            .map(|free| {
                let mut v = vec![0u64; cols];
                v[free] = 1;
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = self.sub(0, m[r][free]);
                }
                v
            })
            .collect()
    }

    /// Row-reduces in place and returns the pivot column of each nonzero
    /// row; zero rows are dropped from `m`.
    pub fn rref_in_place(self, m: &mut Vec<Vec<u64>>) -> Vec<usize> {
        let rows = m.len();
        let cols = if rows == 0 { 0 } else { m[0].len() };
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else {
                continue;
            };
            m.swap(r, piv);
            let inv = self.inv(m[r][c]);
            for x in m[r].iter_mut() {
                *x = self.mul(*x, inv);
            }
            for i in 0..rows {
                if i != r && m[i][c] != 0 {
                    let f = m[i][c];
                    for j in 0..cols {
                        let t = self.mul(f, m[r][j]);
                        m[i][j] = self.sub(m[i][j], t);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.truncate(r);
        pivots
    }
}
