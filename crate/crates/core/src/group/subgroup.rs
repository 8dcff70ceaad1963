use super::{Classes, Group, GroupError};
use crate::util::prime_power_exponent;

/// A subgroup of a [`Group`] as a sorted set of element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    members: Vec<usize>,
    normal: bool,
}

impl Subgroup {
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn is_normal(&self) -> bool {
        self.normal
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn contains(&self, element: usize) -> bool {
        self.members.binary_search(&element).is_ok()
    }

    fn mask(&self, order: usize) -> Vec<bool> {
        let mut mask = vec![false; order];
        for &m in &self.members {
            mask[m] = true;
        }
        mask
    }
}

impl Group {
    fn subgroup_from_members(&self, members: Vec<usize>) -> Subgroup {
        let normal = self.is_normal_set(&members);
        Subgroup { members, normal }
    }

    fn is_normal_set(&self, members: &[usize]) -> bool {
        let mut mask = vec![false; self.order()];
        for &m in members {
            mask[m] = true;
        }
        members.iter().all(|&m| {
            self.generator_indices()
                .iter()
                .all(|&g| mask[self.conjugate(m, g)])
        })
    }

    /// Subgroup generated by the given element indices.
    pub fn subgroup(&self, gens: &[usize]) -> Subgroup {
        self.subgroup_from_members(self.closure(gens))
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup {
            members: (0..self.order()).collect(),
            normal: true,
        }
    }

    /// `[G, G]`, the normal closure of commutators of generator pairs.
    pub fn derived_subgroup(&self) -> Subgroup {
        let gens = self.generator_indices();
        let comms: Vec<usize> = gens
            .iter()
            .flat_map(|&a| gens.iter().map(move |&b| (a, b)))
            .map(|(a, b)| self.commutator(a, b))
            .collect();
        self.subgroup_from_members(self.normal_closure(&comms))
    }

    /// `[H, G]` for a normal subgroup `H`.
    pub fn commutator_with_whole(&self, h: &Subgroup) -> Subgroup {
        let comms: Vec<usize> = h
            .members
            .iter()
            .flat_map(|&x| self.generator_indices().iter().map(move |&g| (x, g)))
            .map(|(x, g)| self.commutator(x, g))
            .collect();
        self.subgroup_from_members(self.normal_closure(&comms))
    }

    /// `Phi(G) = [G, G] G^p`, valid for p-groups.
    pub fn frattini_subgroup(&self) -> Subgroup {
        let derived = self.derived_subgroup();
        let mut gens: Vec<usize> = (0..self.order())
            .map(|x| self.pow(x, self.prime() as i64))
            .collect();
        gens.extend_from_slice(derived.members());
        gens.sort_unstable();
        gens.dedup();
        self.subgroup_from_members(self.closure(&gens))
    }

    /// Dimension of `G / Phi(G)` over the field with p elements.
    pub fn rank(&self) -> Result<u32, GroupError> {
        if self.is_trivial() {
            return Err(GroupError::TrivialGroup);
        }
        let phi = self.frattini_subgroup();
        let index = (self.order() / phi.order()) as u64;
        Ok(prime_power_exponent(index, self.prime()).expect("index of a subgroup of a p-group"))
    }

    /// Terms `G = L_1 > L_2 > ...` of the lower central series, ending at the
    /// first term that repeats (the trivial group for a nilpotent group).
    pub fn lower_central_series(&self) -> Vec<Subgroup> {
        let mut series = vec![self.whole()];
        loop {
            let last = series.last().unwrap();
            let next = self.commutator_with_whole(last);
            if next.order() == last.order() {
                return series;
            }
            let done = next.is_trivial();
            series.push(next);
            if done {
                return series;
            }
        }
    }

    /// Length of the lower central series until it reaches the trivial
    /// subgroup; 0 for the trivial group.
    pub fn nilpotency_class(&self) -> usize {
        let series = self.lower_central_series();
        assert!(
            series.last().unwrap().is_trivial(),
            "lower central series of a p-group must reach the trivial subgroup"
        );
        series.len() - 1
    }

    /// Classes whose members lie outside the Frattini subgroup.
    pub fn primitive_classes_oracle(&self, classes: &Classes) -> Vec<usize> {
        let phi = self.frattini_subgroup().mask(self.order());
        classes
            .iter()
            .enumerate()
            .filter_map(|(idx, class)| {
                let outside = !phi[class.representative];
                assert!(
                    class.members.iter().all(|&m| phi[m] != outside),
                    "Frattini subgroup splits class {idx}"
                );
                outside.then_some(idx)
            })
            .collect()
    }

    /// Invariant factors (descending) of an abelian subgroup, or `None` when
    /// the subgroup is not abelian.
    ///
    /// Uses the counts `|{x : x^(p^k) = 1}|`, which determine an abelian
    /// p-group up to isomorphism.
    pub fn abelian_invariants(&self, h: &Subgroup) -> Option<Vec<u64>> {
        let m = h.members();
        let abelian = m
            .iter()
            .all(|&a| m.iter().all(|&b| self.mul(a, b) == self.mul(b, a)));
        if !abelian {
            return None;
        }
        let p = self.prime();
        let max_order = m.iter().map(|&x| self.element_order(x)).max().unwrap_or(1);
        let top = prime_power_exponent(max_order, p).unwrap();
        // omega[k] = log_p |{x in H : x^(p^k) = 1}|
        let omega: Vec<u32> = (0..=top)
            .map(|k| {
                let count = m
                    .iter()
                    .filter(|&&x| p.pow(k) % self.element_order(x) == 0)
                    .count();
                prime_power_exponent(count as u64, p).unwrap()
            })
            .collect();
        // Number of cyclic factors of order >= p^k is omega[k] - omega[k-1].
        let at_least: Vec<u32> = (1..=top as usize).map(|k| omega[k] - omega[k - 1]).collect();
        let mut factors = Vec::new();
        for k in (1..=top as usize).rev() {
            let exactly = at_least[k - 1] - at_least.get(k).copied().unwrap_or(0);
            for _ in 0..exactly {
                factors.push(p.pow(k as u32));
            }
        }
        Some(factors)
    }
}
