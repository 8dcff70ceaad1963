//! Exact irreducible character tables.

mod algebra;
mod compare;
mod dixon;
pub(crate) mod exact;
mod fq;

use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use crate::cyclotomic::Cyclotomic;
use crate::group::PowerMap;
use crate::util::{gcd, lcm, primes_up_to};

pub use algebra::{class_algebra, ClassAlgebra};
pub use compare::{find_bijection, TableBijection};
pub use dixon::{character_table, character_table_with_seed, DEFAULT_SEED};

use exact::{cyclotomic_polynomial, Accumulator, IntCyc};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ChartabError {
    #[error("malformed character table: {0}")]
    MalformedTable(String),
    #[error("character table computation failed: {0}")]
    Internal(String),
}

fn malformed(msg: impl Into<String>) -> ChartabError {
    ChartabError::MalformedTable(msg.into())
}

/// A validated character table with class metadata.
///
/// Rows are irreducible characters, columns are conjugacy classes. Column 0
/// is the identity class and row 0 the trivial character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    order: u64,
    prime: u64,
    conductor: u64,
    sizes: Vec<u64>,
    orders: Vec<u64>,
    power_map: PowerMap,
    degrees: Vec<u64>,
    values: Vec<Vec<Cyclotomic>>,
}

impl CharacterTable {
    /// Builds a table and checks every invariant exactly: shape, class
    /// equation, integrality, both orthogonality relations, and power-map
    /// consistency.
    pub fn new(
        order: u64,
        prime: u64,
        sizes: Vec<u64>,
        orders: Vec<u64>,
        power_map: PowerMap,
        values: Vec<Vec<Cyclotomic>>,
    ) -> Result<Self, ChartabError> {
        let r = sizes.len();
        if r == 0 {
            return Err(malformed("no classes"));
        }
        if orders.len() != r || power_map.class_orders().len() != r {
            return Err(malformed("class metadata lengths disagree"));
        }
        if power_map.class_orders() != orders.as_slice() {
            return Err(malformed("power map element orders disagree with class records"));
        }
        if values.len() != r {
            return Err(malformed(format!("{} rows for {r} classes", values.len())));
        }
        if let Some(i) = values.iter().position(|row| row.len() != r) {
            return Err(malformed(format!("row {i} has {} entries, expected {r}", values[i].len())));
        }
        if sizes[0] != 1 || orders[0] != 1 {
            return Err(malformed("class 0 must be the identity class"));
        }
        if let Some(c) = (1..r).find(|&c| orders[c] <= 1) {
            return Err(malformed(format!("class {c} has element order {}", orders[c])));
        }
        if sizes.iter().sum::<u64>() != order {
            return Err(malformed("class sizes do not sum to the group order"));
        }
        if let Some(c) = (0..r).find(|&c| sizes[c] == 0 || order % sizes[c] != 0) {
            return Err(malformed(format!("class {c} size does not divide the group order")));
        }
        if values[0].iter().any(|v| !v.is_one()) {
            return Err(malformed("row 0 is not the trivial character"));
        }
        let mut degrees = Vec::with_capacity(r);
        for (i, row) in values.iter().enumerate() {
            match row[0].as_integer().and_then(|d| u64::try_from(d).ok()) {
                Some(d) if d > 0 => degrees.push(d),
                _ => return Err(malformed(format!("row {i} has no positive integer degree"))),
            }
        }
        if degrees.iter().map(|d| d * d).sum::<u64>() != order {
            return Err(malformed("squared degrees do not sum to the group order"));
        }
        let conductor = orders.iter().fold(1, |acc, &o| lcm(acc, o));
        let table = CharacterTable {
            order,
            prime,
            conductor,
            sizes,
            orders,
            power_map,
            degrees,
            values,
        };
        table.check_orthogonality()?;
        table.check_power_map()?;
        Ok(table)
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    /// Exponent of the group; every value lies in `Q(E(conductor))`.
    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn class_count(&self) -> usize {
        self.sizes.len()
    }

    pub fn class_sizes(&self) -> &[u64] {
        &self.sizes
    }

    pub fn element_orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn power_map(&self) -> &PowerMap {
        &self.power_map
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn rows(&self) -> &[Vec<Cyclotomic>] {
        &self.values
    }

    pub fn value(&self, row: usize, class: usize) -> &Cyclotomic {
        &self.values[row][class]
    }

    /// Rows of degree 1.
    pub fn linear_rows(&self) -> Vec<usize> {
        (0..self.degrees.len()).filter(|&i| self.degrees[i] == 1).collect()
    }

    fn int_values(&self) -> Result<Vec<Vec<IntCyc>>, ChartabError> {
        self.values
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(c, v)| {
                        if self.conductor % v.conductor() != 0 {
                            return Err(malformed(format!(
                                "value at row {i}, class {c} lies outside Q(E({}))",
                                self.conductor
                            )));
                        }
                        IntCyc::from_cyclotomic(v, self.conductor).ok_or_else(|| {
                            malformed(format!("value at row {i}, class {c} is not an algebraic integer"))
                        })
                    })
                    .collect()
            })
            .collect()
    }

    fn check_orthogonality(&self) -> Result<(), ChartabError> {
        let ints = self.int_values()?;
        let n = self.conductor as usize;
        let phi = cyclotomic_polynomial(self.conductor);
        let r = self.class_count();
        // sum_c |C_c| chi_i(c) conj(chi_j(c)) = |G| delta_ij
        for i in 0..r {
            for j in i..r {
                let mut acc = Accumulator::new(n, &phi);
                for c in 0..r {
                    acc.add_product_conj(self.sizes[c] as i128, &ints[i][c], &ints[j][c]);
                }
                let target = if i == j { self.order as i128 } else { 0 };
                if !acc.equals(target) {
                    return Err(malformed(format!("rows {i} and {j} violate orthogonality")));
                }
            }
        }
        for c in 0..r {
            for d in c..r {
                let mut acc = Accumulator::new(n, &phi);
                for row in &ints {
                    acc.add_product_conj(1, &row[c], &row[d]);
                }
                let target = if c == d { (self.order / self.sizes[c]) as i128 } else { 0 };
                if !acc.equals(target) {
                    return Err(malformed(format!("classes {c} and {d} violate orthogonality")));
                }
            }
        }
        Ok(())
    }

    /// Each stored prime map must respect element orders, and every linear
    /// character must satisfy `chi(g^q) = chi(g)^q`.
    fn check_power_map(&self) -> Result<(), ChartabError> {
        let r = self.class_count();
        let primes: Vec<u64> = self.power_map.primes().collect();
        for &q in &primes {
            let map = self.power_map.prime_map(q).unwrap();
            for c in 0..r {
                let expected = self.orders[c] / gcd(self.orders[c], q);
                if self.orders[map[c]] != expected {
                    return Err(malformed(format!(
                        "{q}-th power of class {c} has order {}, expected {expected}",
                        self.orders[map[c]]
                    )));
                }
            }
        }
        let e = self.conductor;
        let logs: HashMap<Cyclotomic, u64> =
            (0..e).map(|k| (Cyclotomic::root_of_unity(e, k as i64), k)).collect();
        for i in self.linear_rows() {
            let row_logs = self.values[i]
                .iter()
                .enumerate()
                .map(|(c, v)| {
                    logs.get(v).copied().ok_or_else(|| {
                        malformed(format!("linear row {i} takes a non-root value at class {c}"))
                    })
                })
                .collect::<Result<Vec<u64>, _>>()?;
            for &q in &primes {
                let map = self.power_map.prime_map(q).unwrap();
                for c in 0..r {
                    if row_logs[map[c]] != row_logs[c] * q % e {
                        return Err(malformed(format!(
                            "linear row {i} is not multiplicative on the {q}-th power of class {c}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Completes power maps given only for the primes dividing the conductor.
/// For a prime `q` coprime to the conductor, the class of `g^q` is the
/// unique class whose column is the image of the column of `g` under
/// `E(e) -> E(e)^q`.
pub fn complete_power_map(
    orders: &[u64],
    mut maps: BTreeMap<u64, Vec<usize>>,
    values: &[Vec<Cyclotomic>],
) -> Result<PowerMap, ChartabError> {
    let r = orders.len();
    let e = orders.iter().fold(1, |acc, &o| lcm(acc, o));
    let max_order = orders.iter().copied().max().unwrap_or(1);
    if values.iter().any(|row| row.len() != r) {
        return Err(malformed("ragged table"));
    }
    let column = |c: usize| values.iter().map(|row| row[c].clone()).collect::<Vec<_>>();
    let mut by_column: HashMap<Vec<Cyclotomic>, usize> = HashMap::new();
    for c in 0..r {
        if by_column.insert(column(c), c).is_some() {
            return Err(malformed(format!("class {c} repeats an earlier column")));
        }
    }
    for q in primes_up_to(max_order.saturating_sub(1)) {
        if maps.contains_key(&q) {
            continue;
        }
        if e % q == 0 {
            return Err(malformed(format!("power map for prime {q} is missing")));
        }
        let map = (0..r)
            .map(|c| {
                let image: Vec<Cyclotomic> = values.iter().map(|row| row[c].galois(q as i64)).collect();
                by_column.get(&image).copied().ok_or_else(|| {
                    malformed(format!("no class matches the Galois image of class {c} under {q}"))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        maps.insert(q, map);
    }
    PowerMap::from_prime_maps(maps, orders.to_vec()).map_err(malformed)
}

/// Canonical row order: trivial character first, then ascending degree,
/// then lexicographic on rendered values.
pub(crate) fn sort_rows(rows: &mut [Vec<Cyclotomic>]) {
    rows.sort_by_cached_key(|row| {
        let trivial = row.iter().all(Cyclotomic::is_one);
        let degree = row[0].as_integer();
        let text: Vec<String> = row.iter().map(ToString::to_string).collect();
        (!trivial, degree, text)
    });
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::tests::{cyclic, q8};

    fn table_of(g: &crate::group::Group) -> CharacterTable {
        character_table(g).unwrap()
    }

    #[test]
    fn quaternion_table() {
        let t = table_of(&q8());
        assert_eq!(t.degrees(), &[1, 1, 1, 1, 2]);
        let two = t.rows()[4].clone();
        assert_eq!(two[0], Cyclotomic::from(2));
        assert_eq!(two[1], Cyclotomic::from(-2));
        assert!(two[2..].iter().all(Cyclotomic::is_zero));
        assert_eq!(t.linear_rows(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn cyclic_table_uses_roots_of_unity() {
        let t = table_of(&cyclic(8, 2));
        assert_eq!(t.class_count(), 8);
        assert_eq!(t.conductor(), 8);
        assert_eq!(t.linear_rows().len(), 8);
        for row in t.rows() {
            for v in row {
                assert!(v.root_order().unwrap() <= 8);
            }
        }
    }

    #[test]
    fn rejects_broken_tables() {
        let t = table_of(&q8());
        let mut values = t.rows().to_vec();
        values[4][1] = Cyclotomic::from(2);
        let err = CharacterTable::new(
            t.order(),
            2,
            t.class_sizes().to_vec(),
            t.element_orders().to_vec(),
            t.power_map().clone(),
            values,
        )
        .unwrap_err();
        assert!(matches!(err, ChartabError::MalformedTable(_)));

        let mut values = t.rows().to_vec();
        values.swap(0, 1);
        assert!(CharacterTable::new(
            t.order(),
            2,
            t.class_sizes().to_vec(),
            t.element_orders().to_vec(),
            t.power_map().clone(),
            values,
        )
        .is_err());
    }

    #[test]
    fn rejects_inconsistent_power_map() {
        let t = table_of(&cyclic(4, 2));
        // Squaring a generator must land in the class of order 2.
        let mut maps = BTreeMap::new();
        maps.insert(2, vec![0, 0, 0, 0]);
        maps.insert(3, t.power_map().prime_map(3).unwrap().to_vec());
        let pm = PowerMap::from_prime_maps(maps, t.element_orders().to_vec()).unwrap();
        assert!(CharacterTable::new(4, 2, vec![1; 4], t.element_orders().to_vec(), pm, t.rows().to_vec()).is_err());
    }

    #[test]
    fn coprime_power_maps_follow_from_values() {
        for g in [cyclic(8, 2), q8(), cyclic(9, 3)] {
            let t = table_of(&g);
            let mut maps = BTreeMap::new();
            maps.insert(g.prime(), t.power_map().prime_map(g.prime()).unwrap().to_vec());
            let derived = complete_power_map(t.element_orders(), maps, t.rows()).unwrap();
            assert_eq!(&derived, t.power_map());
        }
    }
}
