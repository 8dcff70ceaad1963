use crate::group::{Classes, Group};

/// Structure constants of the class algebra: `K_i K_j = sum_k a_ijk K_k`
/// where `K_i` is the sum of the elements of class `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassAlgebra {
    r: usize,
    sizes: Vec<u64>,
    orders: Vec<u64>,
    coeffs: Vec<u32>,
}

impl ClassAlgebra {
    pub fn class_count(&self) -> usize {
        self.r
    }

    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    pub fn element_orders(&self) -> &[u64] {
        &self.orders
    }

    /// Number of pairs `(x, y)` in classes `i`, `j` with `x y` equal to a
    /// fixed element of class `k`.
    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> u64 {
        self.coeffs[(i * self.r + j) * self.r + k] as u64
    }
}

pub fn class_algebra(g: &Group, classes: &Classes) -> ClassAlgebra {
    let r = classes.len();
    let mut counts = vec![0u32; r * r * r];
    for (i, ci) in classes.iter().enumerate() {
        for &x in &ci.members {
            for y in 0..g.order() {
                let j = classes.class_of(y);
                let k = classes.class_of(g.mul(x, y));
                counts[(i * r + j) * r + k] += 1;
            }
        }
    }
    let sizes: Vec<u64> = classes.iter().map(|c| c.size as u64).collect();
    for (idx, c) in counts.iter_mut().enumerate() {
        let k = idx % r;
        debug_assert_eq!(*c as u64 % sizes[k], 0);
        *c /= sizes[k] as u32;
    }
    ClassAlgebra {
        r,
        sizes,
        orders: classes.element_orders(),
        coeffs: counts,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::tests::{cyclic, q8};

    #[test]
    fn trivial_and_cyclic() {
        let g = cyclic(1, 2);
        let a = class_algebra(&g, &g.conjugacy_classes());
        assert_eq!(a.coefficient(0, 0, 0), 1);
        let g = cyclic(2, 2);
        let a = class_algebra(&g, &g.conjugacy_classes());
        assert_eq!(a.coefficient(1, 1, 0), 1);
        assert_eq!(a.coefficient(1, 1, 1), 0);
    }

    #[test]
    fn quaternion_square_of_i_class() {
        let g = q8();
        let classes = g.conjugacy_classes();
        let a = class_algebra(&g, &classes);
        // classes: 1, -1, then three classes {±i}, {±j}, {±k}
        assert_eq!(a.coefficient(2, 2, 1), 2);
        assert_eq!(a.coefficient(2, 2, 0), 2);
        assert_eq!(a.coefficient(2, 3, 4), 2);
    }

    #[test]
    fn class_size_identity() {
        let g = q8();
        let classes = g.conjugacy_classes();
        let a = class_algebra(&g, &classes);
        let r = a.class_count();
        for i in 0..r {
            for j in 0..r {
                let total: u64 = (0..r).map(|k| a.coefficient(i, j, k) * a.sizes()[k]).sum();
                assert_eq!(total, a.sizes()[i] * a.sizes()[j]);
            }
        }
    }
}
