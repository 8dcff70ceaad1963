use std::collections::BTreeMap;

use super::Group;
use crate::util::{factorize, primes_up_to};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    /// Smallest member index.
    pub representative: usize,
    /// Sorted element indices.
    pub members: Vec<usize>,
    pub size: usize,
    pub element_order: u64,
}

/// The class partition of a group together with the element-to-class map.
///
/// Ordering is canonical: the identity class first, then ascending
/// `(element_order, size, representative)`.
#[derive(Debug, Clone)]
pub struct Classes {
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
}

impl Classes {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn get(&self, idx: usize) -> &ConjugacyClass {
        &self.classes[idx]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, ConjugacyClass> {
        self.classes.iter()
    }

    pub fn as_slice(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    /// Class index of an element.
    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.size).collect()
    }

    pub fn element_orders(&self) -> Vec<u64> {
        self.classes.iter().map(|c| c.element_order).collect()
    }
}

/// The power map `f(c, k)` on classes.
///
/// One class map is stored per prime `q` up to the largest element order;
/// `f(c, k)` reduces `k` modulo the order of `c` and composes the prime maps
/// along the factorization of the residue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerMap {
    maps: BTreeMap<u64, Vec<usize>>,
    class_orders: Vec<u64>,
}

impl PowerMap {
    /// Assembles a power map from per-prime class maps. Every prime below the
    /// largest class order must be present.
    pub fn from_prime_maps(
        maps: BTreeMap<u64, Vec<usize>>,
        class_orders: Vec<u64>,
    ) -> Result<PowerMap, String> {
        let n = class_orders.len();
        let max_order = class_orders.iter().copied().max().unwrap_or(1);
        for q in primes_up_to(max_order.saturating_sub(1)) {
            if !maps.contains_key(&q) {
                return Err(format!("power map for prime {q} is missing"));
            }
        }
        for (q, map) in &maps {
            if map.len() != n {
                return Err(format!("power map for prime {q} has {} entries, expected {n}", map.len()));
            }
            if let Some(bad) = map.iter().find(|&&c| c >= n) {
                return Err(format!("power map for prime {q} names class {bad} out of range"));
            }
        }
        Ok(PowerMap { maps, class_orders })
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.maps.keys().copied()
    }

    pub fn prime_map(&self, q: u64) -> Option<&[usize]> {
        self.maps.get(&q).map(Vec::as_slice)
    }

    pub fn class_orders(&self) -> &[u64] {
        &self.class_orders
    }

    /// Class of `g^k` for any `g` in class `class`. Negative `k` is allowed.
    pub fn apply(&self, class: usize, k: i64) -> usize {
        let m = self.class_orders[class] as i64;
        let r = k.rem_euclid(m) as u64;
        if r == 0 {
            return 0;
        }
        factorize(r)
            .into_iter()
            .fold(class, |c, q| self.maps[&q][c])
    }
}

impl Group {
    /// Conjugacy classes in canonical order.
    pub fn conjugacy_classes(&self) -> Classes {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut raw: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut orbit = vec![start];
            let mut head = 0;
            while head < orbit.len() {
                let x = orbit[head];
                head += 1;
                for &g in self.generator_indices() {
                    let y = self.conjugate(x, g);
                    if !seen[y] {
                        seen[y] = true;
                        orbit.push(y);
                    }
                }
            }
            orbit.sort_unstable();
            raw.push(orbit);
        }

        let mut classes: Vec<ConjugacyClass> = raw
            .into_iter()
            .map(|members| ConjugacyClass {
                representative: members[0],
                size: members.len(),
                element_order: self.element_order(members[0]),
                members,
            })
            .collect();
        classes.sort_by_key(|c| (c.representative != 0, c.element_order, c.size, c.representative));

        let mut class_of = vec![0; n];
        for (idx, class) in classes.iter().enumerate() {
            for &m in &class.members {
                class_of[m] = idx;
            }
        }
        Classes { classes, class_of }
    }

    /// Power map with a class map for every prime up to the exponent.
    pub fn power_map(&self, classes: &Classes) -> PowerMap {
        let exponent = self.exponent();
        let maps = primes_up_to(exponent)
            .into_iter()
            .map(|q| {
                let map = classes
                    .iter()
                    .map(|c| classes.class_of(self.pow(c.representative, q as i64)))
                    .collect();
                (q, map)
            })
            .collect();
        PowerMap {
            maps,
            class_orders: classes.element_orders(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::{cyclic, q8};
    use super::*;
    use crate::group::generate_group;

    #[test]
    fn trivial_group_has_one_class() {
        let g = generate_group(vec![], 2).unwrap();
        let cls = g.conjugacy_classes();
        assert_eq!(cls.len(), 1);
        assert_eq!(cls.get(0).members, vec![0]);
    }

    #[test]
    fn quaternion_class_sizes() {
        let g = q8();
        let cls = g.conjugacy_classes();
        assert_eq!(cls.sizes(), vec![1, 1, 2, 2, 2]);
        assert_eq!(cls.element_orders(), vec![1, 2, 4, 4, 4]);
        assert_eq!(cls.sizes().iter().sum::<usize>(), 8);
    }

    #[test]
    fn cyclic_power_map() {
        let g = cyclic(4, 2);
        let cls = g.conjugacy_classes();
        let pm = g.power_map(&cls);
        let x = g.generator_indices()[0];
        let cx = cls.class_of(x);
        let cx2 = cls.class_of(g.pow(x, 2));
        assert_eq!(pm.apply(cx, 2), cx2);
        assert_eq!(pm.apply(cx, 1), cx);
        assert_eq!(pm.apply(cx, 4), 0);
        assert_eq!(pm.apply(cx, -1), cls.class_of(g.inv(x)));
        assert_eq!(pm.apply(0, 7), 0);
    }

    #[test]
    fn quaternion_squares_land_in_minus_one() {
        let g = q8();
        let cls = g.conjugacy_classes();
        let pm = g.power_map(&cls);
        for c in 2..5 {
            assert_eq!(pm.apply(c, 2), 1);
            assert_eq!(pm.apply(c, 3), c);
        }
        assert_eq!(pm.prime_map(2).unwrap(), &[0, 0, 1, 1, 1]);
    }

    #[test]
    fn power_map_requires_all_small_primes() {
        let mut maps = BTreeMap::new();
        maps.insert(2, vec![0, 0, 1]);
        assert!(PowerMap::from_prime_maps(maps.clone(), vec![1, 2, 4]).is_err());
        maps.insert(3, vec![0, 1, 2]);
        assert!(PowerMap::from_prime_maps(maps, vec![1, 2, 4]).is_ok());
    }
}
