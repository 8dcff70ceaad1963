//! Certified equivalence of two character tables up to reordering.

use std::collections::HashMap;

use super::CharacterTable;
use crate::cyclotomic::Cyclotomic;

/// Index maps from the first table into the second: class `c` of the first
/// table is class `class_map[c]` of the second, and likewise for rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableBijection {
    pub class_map: Vec<usize>,
    pub row_map: Vec<usize>,
}

/// Searches for class and row bijections under which the two tables agree
/// exactly, including class sizes, element orders and every power map the
/// two tables share.
pub fn find_bijection(a: &CharacterTable, b: &CharacterTable) -> Option<TableBijection> {
    let r = a.class_count();
    if a.order() != b.order() || b.class_count() != r {
        return None;
    }
    let mut ids: HashMap<Cyclotomic, u32> = HashMap::new();
    let mut intern = |t: &CharacterTable| -> Vec<Vec<u32>> {
        t.rows()
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| {
                        let next = ids.len() as u32;
                        *ids.entry(v.clone()).or_insert(next)
                    })
                    .collect()
            })
            .collect()
    };
    let av = intern(a);
    let bv = intern(b);
    let column_key = |v: &[Vec<u32>], c: usize| {
        let mut col: Vec<u32> = v.iter().map(|row| row[c]).collect();
        col.sort_unstable();
        col
    };
    let candidates: Vec<Vec<usize>> = (0..r)
        .map(|c| {
            let key = column_key(&av, c);
            (0..r)
                .filter(|&d| {
                    a.class_sizes()[c] == b.class_sizes()[d]
                        && a.element_orders()[c] == b.element_orders()[d]
                        && column_key(&bv, d) == key
                })
                .collect()
        })
        .collect();
    if candidates.iter().any(Vec::is_empty) {
        return None;
    }
    let shared_primes: Vec<u64> = a
        .power_map()
        .primes()
        .filter(|q| b.power_map().prime_map(*q).is_some())
        .collect();

    let mut search = Search {
        a,
        b,
        av: &av,
        bv: &bv,
        candidates: &candidates,
        shared_primes: &shared_primes,
        class_map: vec![usize::MAX; r],
        used: vec![false; r],
    };
    if !search.assign(0) {
        return None;
    }
    let class_map = search.class_map;
    let b_rows: HashMap<Vec<u32>, usize> = bv.iter().cloned().enumerate().map(|(i, row)| (row, i)).collect();
    let row_map = av
        .iter()
        .map(|row| {
            let mut image = vec![0u32; r];
            for c in 0..r {
                image[class_map[c]] = row[c];
            }
            b_rows.get(&image).copied()
        })
        .collect::<Option<Vec<_>>>()?;
    Some(TableBijection { class_map, row_map })
}

struct Search<'a> {
    a: &'a CharacterTable,
    b: &'a CharacterTable,
    av: &'a [Vec<u32>],
    bv: &'a [Vec<u32>],
    candidates: &'a [Vec<usize>],
    shared_primes: &'a [u64],
    class_map: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn assign(&mut self, c: usize) -> bool {
        let r = self.class_map.len();
        if c == r {
            return true;
        }
        for idx in 0..self.candidates[c].len() {
            let d = self.candidates[c][idx];
            if self.used[d] {
                continue;
            }
            self.class_map[c] = d;
            self.used[d] = true;
            if self.power_maps_agree(c) && self.prefixes_agree(c) && self.assign(c + 1) {
                return true;
            }
            self.used[d] = false;
            self.class_map[c] = usize::MAX;
        }
        false
    }

    /// Power-map commutation for every pair of assigned classes involving
    /// `c`.
    fn power_maps_agree(&self, c: usize) -> bool {
        for &q in self.shared_primes {
            let fa = self.a.power_map().prime_map(q).unwrap();
            let fb = self.b.power_map().prime_map(q).unwrap();
            for x in 0..=c {
                let y = fa[x];
                if y <= c && fb[self.class_map[x]] != self.class_map[y] {
                    return false;
                }
            }
        }
        true
    }

    /// The rows of both tables, restricted to the assigned classes, must
    /// agree as multisets.
    fn prefixes_agree(&self, c: usize) -> bool {
        let mut pa: Vec<Vec<u32>> = self.av.iter().map(|row| row[..=c].to_vec()).collect();
        let mut pb: Vec<Vec<u32>> = self
            .bv
            .iter()
            .map(|row| (0..=c).map(|x| row[self.class_map[x]]).collect())
            .collect();
        pa.sort_unstable();
        pb.sort_unstable();
        pa == pb
    }
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;
    use crate::chartab::character_table;
    use crate::group::tests::q8;
    use crate::group::PowerMap;

    fn permuted(t: &CharacterTable, classes: &[usize], rows: &[usize]) -> CharacterTable {
        // new class i is old class classes[i]; new row i is old row rows[i]
        let r = t.class_count();
        let mut old_to_new = vec![0; r];
        for (new, &old) in classes.iter().enumerate() {
            old_to_new[old] = new;
        }
        let maps: BTreeMap<u64, Vec<usize>> = t
            .power_map()
            .primes()
            .map(|q| {
                let m = t.power_map().prime_map(q).unwrap();
                (q, classes.iter().map(|&old| old_to_new[m[old]]).collect())
            })
            .collect();
        let orders: Vec<u64> = classes.iter().map(|&c| t.element_orders()[c]).collect();
        CharacterTable::new(
            t.order(),
            t.prime(),
            classes.iter().map(|&c| t.class_sizes()[c]).collect(),
            orders.clone(),
            PowerMap::from_prime_maps(maps, orders).unwrap(),
            rows.iter()
                .map(|&i| classes.iter().map(|&c| t.value(i, c).clone()).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn recovers_a_permutation() {
        let t = character_table(&q8()).unwrap();
        let p = permuted(&t, &[0, 1, 4, 2, 3], &[0, 4, 3, 1, 2]);
        let bij = find_bijection(&t, &p).unwrap();
        for i in 0..5 {
            for c in 0..5 {
                assert_eq!(t.value(i, c), p.value(bij.row_map[i], bij.class_map[c]));
            }
        }
        assert!(find_bijection(&t, &t).is_some());
    }
}
