//! Concrete finite p-groups as fully enumerated permutation groups.

mod classes;
mod subgroup;

use std::collections::HashMap;

use thiserror::Error;

use crate::perm::{PermError, Permutation};
use crate::util::{is_prime, prime_power_exponent};

pub use classes::{Classes, ConjugacyClass, PowerMap};
pub use subgroup::Subgroup;

/// Default bound on the number of elements enumerated by closure.
pub const DEFAULT_ELEMENT_CAP: usize = 10_000;

/// Groups up to this order keep a full Cayley table.
const CAYLEY_TABLE_LIMIT: usize = 4096;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("closure exceeds the cap of {cap} elements")]
    ClosureExceedsCap { cap: usize },
    #[error("group of order {order} is not a {prime}-group")]
    NotAPGroup { order: usize, prime: u64 },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("generators act on different degrees ({expected} and {found})")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("rank is undefined for the trivial group")]
    TrivialGroup,
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// A finite p-group given by permutation generators, with every element
/// enumerated. The identity sits at index 0.
#[derive(Clone)]
pub struct Group {
    degree: usize,
    prime: u64,
    generators: Vec<Permutation>,
    generator_indices: Vec<usize>,
    elements: Vec<Permutation>,
    lookup: HashMap<Permutation, usize>,
    inverses: Vec<usize>,
    orders: Vec<u64>,
    cayley: Option<Vec<u32>>,
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Group")
            .field("degree", &self.degree)
            .field("prime", &self.prime)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

/// Closes `generators` into a p-group with the default element cap.
pub fn generate_group(generators: Vec<Permutation>, prime: u64) -> Result<Group, GroupError> {
    let degree = generators.first().map_or(0, Permutation::degree);
    Group::from_generators(degree, generators, prime, DEFAULT_ELEMENT_CAP)
}

impl Group {
    pub fn from_generators(
        degree: usize,
        generators: Vec<Permutation>,
        prime: u64,
        cap: usize,
    ) -> Result<Group, GroupError> {
        if !is_prime(prime) {
            return Err(GroupError::NotPrime(prime));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }

        // Breadth-first closure under right multiplication by generators.
        // `right[k][i]` is the index of elements[i] * generators[k].
        let identity = Permutation::identity(degree);
        let mut elements = vec![identity.clone()];
        let mut lookup = HashMap::from([(identity, 0usize)]);
        let mut parent: Vec<(usize, usize)> = vec![(0, usize::MAX)];
        let mut right: Vec<Vec<u32>> = vec![Vec::new(); generators.len()];
        let mut head = 0;
        while head < elements.len() {
            for (k, gen) in generators.iter().enumerate() {
                let prod = elements[head].then(gen);
                let idx = match lookup.get(&prod) {
                    Some(&idx) => idx,
                    None => {
                        if elements.len() >= cap {
                            return Err(GroupError::ClosureExceedsCap { cap });
                        }
                        let idx = elements.len();
                        lookup.insert(prod.clone(), idx);
                        elements.push(prod);
                        parent.push((head, k));
                        idx
                    }
                };
                right[k].push(idx as u32);
            }
            head += 1;
        }

        let order = elements.len();
        if prime_power_exponent(order as u64, prime).is_none() {
            return Err(GroupError::NotAPGroup { order, prime });
        }

        let generator_indices = generators.iter().map(|g| lookup[g]).collect();
        let inverses = elements.iter().map(|x| lookup[&x.inverse()]).collect();
        let orders = elements.iter().map(Permutation::order).collect();

        // Row i of the Cayley table follows the BFS tree:
        // x * e_j = (x * e_parent(j)) * g_label(j).
        let cayley = (order <= CAYLEY_TABLE_LIMIT).then(|| {
            let mut table = vec![0u32; order * order];
            for i in 0..order {
                let row = &mut table[i * order..(i + 1) * order];
                row[0] = i as u32;
                for j in 1..order {
                    let (p, k) = parent[j];
                    row[j] = right[k][row[p] as usize];
                }
            }
            table
        });

        Ok(Group {
            degree,
            prime,
            generators,
            generator_indices,
            elements,
            lookup,
            inverses,
            orders,
            cayley,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Element indices of the generators, in generator order.
    pub fn generator_indices(&self) -> &[usize] {
        &self.generator_indices
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, idx: usize) -> &Permutation {
        &self.elements[idx]
    }

    pub fn index_of(&self, perm: &Permutation) -> Option<usize> {
        self.lookup.get(perm).copied()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.cayley {
            Some(table) => table[a * self.order() + b] as usize,
            None => self.lookup[&self.elements[a].then(&self.elements[b])],
        }
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn pow(&self, a: usize, exp: i64) -> usize {
        let base = if exp < 0 { self.inv(a) } else { a };
        let mut n = exp.unsigned_abs() % self.orders[a];
        let mut acc = 0;
        let mut sq = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, sq);
            }
            sq = self.mul(sq, sq);
            n >>= 1;
        }
        acc
    }

    /// `x^-1 * a * x`.
    pub fn conjugate(&self, a: usize, x: usize) -> usize {
        self.mul(self.mul(self.inv(x), a), x)
    }

    /// `[a, b] = a b a^-1 b^-1`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.mul(a, b);
        self.mul(self.mul(ab, self.inv(a)), self.inv(b))
    }

    pub fn element_order(&self, a: usize) -> u64 {
        self.orders[a]
    }

    /// Largest element order, which is the exponent of a p-group.
    pub fn exponent(&self) -> u64 {
        self.orders.iter().copied().max().unwrap_or(1)
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generator_indices;
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Indices of the subgroup generated by `gens`, sorted.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.order()];
        member[0] = true;
        let mut queue = vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    queue.push(y);
                }
            }
        }
        queue.sort_unstable();
        queue
    }

    /// Smallest normal subgroup containing `gens`.
    pub fn normal_closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut pool: Vec<usize> = gens.to_vec();
        loop {
            let members = self.closure(&pool);
            let mut grew = false;
            let mut inside = vec![false; self.order()];
            for &m in &members {
                inside[m] = true;
            }
            for &m in &members {
                for &g in &self.generator_indices {
                    let c = self.conjugate(m, g);
                    if !inside[c] {
                        inside[c] = true;
                        pool.push(c);
                        grew = true;
                    }
                }
            }
            if !grew {
                return members;
            }
        }
    }

    pub fn generates(&self, gens: &[usize]) -> bool {
        self.closure(gens).len() == self.order()
    }
}
