//! Dixon's method: simultaneous eigenvectors of the class-sum matrices over
//! a prime field, lifted to cyclotomic integers through eigenvalue
//! multiplicities.
//!
//! For an irreducible `chi` the central character
//! `w_k = |C_k| chi(g_k) / chi(1)` satisfies `w_i w_j = sum_k a_ijk w_k`, so
//! `w` is a common right eigenvector of the matrices `M_j[i][k] = a_ijk`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::algebra::{class_algebra, ClassAlgebra};
use super::fq::Fq;
use super::{sort_rows, CharacterTable, ChartabError};
use crate::cyclotomic::Cyclotomic;
use crate::group::{Group, PowerMap};
use crate::util::is_prime;

pub const DEFAULT_SEED: u64 = 0x9e37_79b9;

/// Random splitting rounds before falling back to the individual class
/// matrices.
const RANDOM_ROUNDS: usize = 8;

/// Character table of `g` with the default splitting seed.
pub fn character_table(g: &Group) -> Result<CharacterTable, ChartabError> {
    character_table_with_seed(g, DEFAULT_SEED)
}

pub fn character_table_with_seed(g: &Group, seed: u64) -> Result<CharacterTable, ChartabError> {
    let classes = g.conjugacy_classes();
    let power_map = g.power_map(&classes);
    let algebra = class_algebra(g, &classes);
    let values = compute_values(&algebra, &power_map, g.order() as u64, g.exponent(), seed)?;
    CharacterTable::new(
        g.order() as u64,
        g.prime(),
        algebra.sizes().to_vec(),
        algebra.element_orders().to_vec(),
        power_map,
        values,
    )
    .map_err(|e| ChartabError::Internal(format!("computed table failed validation: {e}")))
}

/// Least prime `q = 1 (mod e)` with `q > 2 sqrt(order)`.
fn dixon_prime(order: u64, e: u64) -> u64 {
    let mut q = e + 1;
    while !(is_prime(q) && (q as u128 * q as u128) > 4 * order as u128) {
        q += e;
    }
    q
}

struct Splitter<'a> {
    f: Fq,
    algebra: &'a ClassAlgebra,
}

impl Splitter<'_> {
    fn matrix(&self, weights: &[u64]) -> Vec<Vec<u64>> {
        let r = self.algebra.class_count();
        let mut m = vec![vec![0u64; r]; r];
        for (j, &w) in weights.iter().enumerate() {
            if w == 0 {
                continue;
            }
            for (i, row) in m.iter_mut().enumerate() {
                for (k, x) in row.iter_mut().enumerate() {
                    let a = self.algebra.coefficient(i, j, k);
                    if a != 0 {
                        *x = self.f.add(*x, self.f.mul(w, a % self.f.q));
                    }
                }
            }
        }
        m
    }

    /// Splits an invariant subspace (RREF basis rows) into eigenspaces of
    /// `m`. Returns `None` when `m` acts as a scalar.
    fn split(&self, basis: &[Vec<u64>], m: &[Vec<u64>]) -> Result<Option<Vec<Vec<Vec<u64>>>>, ChartabError> {
        let f = self.f;
        let d = basis.len();
        let r = m.len();
        let pivots: Vec<usize> = basis
            .iter()
            .map(|b| b.iter().position(|&x| x != 0).unwrap())
            .collect();
        // restricted[s][t]: coordinate s of M b_t
        let mut restricted = vec![vec![0u64; d]; d];
        for (t, b) in basis.iter().enumerate() {
            for (s, &p) in pivots.iter().enumerate() {
                let row = &m[p];
                let mut acc = 0;
                for k in 0..r {
                    if b[k] != 0 && row[k] != 0 {
                        acc = f.add(acc, f.mul(row[k], b[k]));
                    }
                }
                restricted[s][t] = acc;
            }
        }
        let (h, steps) = f.hessenberg(&restricted);
        let roots = f.roots(&f.charpoly_hessenberg(&h));
        if roots.len() <= 1 {
            return Ok(None);
        }
        let mut pieces = Vec::with_capacity(roots.len());
        let mut total = 0;
        for lambda in roots {
            let shifted: Vec<Vec<u64>> = h
                .iter()
                .enumerate()
                .map(|(s, row)| {
                    row.iter()
                        .enumerate()
                        .map(|(t, &x)| if s == t { f.sub(x, lambda) } else { x })
                        .collect()
                })
                .collect();
            let mut vectors: Vec<Vec<u64>> = f
                .nullspace_echelon(&shifted)
                .into_iter()
                .map(|mut coords| {
                    f.undo_steps(&steps, &mut coords);
                    let mut v = vec![0u64; r];
                    for (t, &c) in coords.iter().enumerate() {
                        if c != 0 {
                            for k in 0..r {
                                v[k] = f.add(v[k], f.mul(c, basis[t][k]));
                            }
                        }
                    }
                    v
                })
                .collect();
            f.rref_in_place(&mut vectors);
            total += vectors.len();
            pieces.push(vectors);
        }
        if total != d {
            return Err(ChartabError::Internal(
                "class matrix is not diagonalizable over the splitting field".into(),
            ));
        }
        Ok(Some(pieces))
    }

    fn split_all(&self, spaces: Vec<Vec<Vec<u64>>>, m: &[Vec<u64>]) -> Result<Vec<Vec<Vec<u64>>>, ChartabError> {
        let mut out = Vec::with_capacity(spaces.len());
        for space in spaces {
            if space.len() == 1 {
                out.push(space);
                continue;
            }
            match self.split(&space, m)? {
                Some(pieces) => out.extend(pieces),
                None => out.push(space),
            }
        }
        Ok(out)
    }
}

fn compute_values(
    algebra: &ClassAlgebra,
    power_map: &PowerMap,
    order: u64,
    exponent: u64,
    seed: u64,
) -> Result<Vec<Vec<Cyclotomic>>, ChartabError> {
    let r = algebra.class_count();
    let e = exponent;
    let f = Fq { q: dixon_prime(order, e) };
    let splitter = Splitter { f, algebra };

    let identity: Vec<Vec<u64>> = (0..r)
        .map(|i| (0..r).map(|k| u64::from(i == k)).collect())
        .collect();
    let mut spaces = vec![identity];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_ROUNDS {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let weights: Vec<u64> = (0..r).map(|_| rng.gen_range(0..f.q)).collect();
        spaces = splitter.split_all(spaces, &splitter.matrix(&weights))?;
    }
    for j in 1..r {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut weights = vec![0u64; r];
        weights[j] = 1;
        spaces = splitter.split_all(spaces, &splitter.matrix(&weights))?;
    }
    if spaces.len() != r {
        return Err(ChartabError::Internal(format!(
            "found {} common eigenspaces for {r} classes",
            spaces.len()
        )));
    }

    let sizes = algebra.sizes();
    let inverse_class: Vec<usize> = (0..r).map(|k| power_map.apply(k, -1)).collect();
    let z = f.primitive_root_of_unity(e);
    let e_inv = f.inv(e % f.q);
    let mut z_log = std::collections::HashMap::new();
    for l in 0..e {
        z_log.insert(f.pow(z, l), l);
    }

    let mut rows = Vec::with_capacity(r);
    for space in spaces {
        let v = &space[0];
        if v[0] == 0 {
            return Err(ChartabError::Internal("eigenvector vanishes at the identity class".into()));
        }
        let scale = f.inv(v[0]);
        let w: Vec<u64> = v.iter().map(|&x| f.mul(x, scale)).collect();
        // chi(1)^2 = |G| / sum_k w_k w_{k'} / |C_k|
        let s = (0..r).fold(0, |acc, k| {
            let t = f.mul(f.mul(w[k], w[inverse_class[k]]), f.inv(sizes[k] % f.q));
            f.add(acc, t)
        });
        if s == 0 {
            return Err(ChartabError::Internal("degree equation is singular".into()));
        }
        let d2 = f.mul(order % f.q, f.inv(s));
        let degree = (1..=f.q / 2)
            .find(|&d| f.mul(d, d) == d2 && order % d == 0)
            .ok_or_else(|| ChartabError::Internal("no admissible degree".into()))?;
        let chi_mod: Vec<u64> = (0..r)
            .map(|k| f.mul(f.mul(w[k], degree % f.q), f.inv(sizes[k] % f.q)))
            .collect();
        let row = (0..r)
            .map(|k| lift(f, &chi_mod, k, degree, e, z, e_inv, &z_log, power_map))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    sort_rows(&mut rows);
    Ok(rows)
}

/// Recovers `chi(g_k)` as `sum_l mu_l E(e)^l`, where `mu_l` is the
/// multiplicity of the eigenvalue `E(e)^l` of `g_k` in the representation.
#[allow(clippy::too_many_arguments)]
fn lift(
    f: Fq,
    chi_mod: &[u64],
    k: usize,
    degree: u64,
    e: u64,
    z: u64,
    e_inv: u64,
    z_log: &std::collections::HashMap<u64, u64>,
    power_map: &PowerMap,
) -> Result<Cyclotomic, ChartabError> {
    if degree == 1 {
        let l = z_log
            .get(&chi_mod[k])
            .ok_or_else(|| ChartabError::Internal("linear value is not a root of unity".into()))?;
        return Ok(Cyclotomic::root_of_unity(e, *l as i64));
    }
    let powers: Vec<u64> = (0..e).map(|s| chi_mod[power_map.apply(k, s as i64)]).collect();
    let z_inv = f.inv(z);
    let mut mu = vec![0i64; e as usize];
    for l in 0..e {
        let step = f.pow(z_inv, l);
        let mut root = 1;
        let mut acc = 0;
        for &p in &powers {
            acc = f.add(acc, f.mul(p, root));
            root = f.mul(root, step);
        }
        let m = f.mul(acc, e_inv);
        if m > degree {
            return Err(ChartabError::Internal(format!(
                "eigenvalue multiplicity {m} exceeds degree {degree}"
            )));
        }
        mu[l as usize] = m as i64;
    }
    if mu.iter().sum::<i64>() != degree as i64 {
        return Err(ChartabError::Internal("eigenvalue multiplicities do not sum to the degree".into()));
    }
    Ok(Cyclotomic::from_integer_powers(e, &mu))
}
