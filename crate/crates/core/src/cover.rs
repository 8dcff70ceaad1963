//! The `G`-cover of the rose with `n` petals and the character of `G` on its
//! first homology.
//!
//! Vertices are group elements and petal `i` lifts to the edges
//! `v -> v * s_i`. `G` acts by left multiplication, freely on vertices and
//! edges. Since the cover is connected, `H_0` is trivial and the Lefschetz
//! trace identity gives `chi_H1(h) = fixed_edges(h) - fixed_vertices(h) + 1`.

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::chartab::CharacterTable;
use crate::cyclotomic::Cyclotomic;
use crate::group::{Classes, Group};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CoverError {
    #[error("petal elements do not generate the group")]
    NotGenerating,
    #[error("expected {expected} petals (the rank), got {got}")]
    WrongPetalCount { expected: usize, got: usize },
    #[error("petal element {0} is not a group element")]
    UnknownElement(usize),
    #[error("Gaschutz decomposition fails for row {row}: expected multiplicity {expected}, found {found}")]
    GaschutzViolation {
        row: usize,
        expected: u64,
        found: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoseCover {
    petals: Vec<usize>,
    vertices: usize,
    /// `heads[v * n + i]` is the head of the lift of petal `i` at `v`.
    heads: Vec<usize>,
}

impl RoseCover {
    pub fn petal_count(&self) -> usize {
        self.petals.len()
    }

    pub fn petals(&self) -> &[usize] {
        &self.petals
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.heads.len()
    }

    pub fn head(&self, vertex: usize, petal: usize) -> usize {
        self.heads[vertex * self.petals.len() + petal]
    }

    /// `|E| - |V| + 1`, the dimension of `H_1` of a connected graph.
    pub fn first_betti_number(&self) -> usize {
        self.edge_count() + 1 - self.vertex_count()
    }
}

/// Builds the cover for the given petal elements. For a nontrivial group
/// the petal count must equal the rank; the trivial group accepts any count.
pub fn build_cover(g: &Group, petals: &[usize]) -> Result<RoseCover, CoverError> {
    if let Some(&bad) = petals.iter().find(|&&x| x >= g.order()) {
        return Err(CoverError::UnknownElement(bad));
    }
    if let Ok(rank) = g.rank() {
        if petals.len() != rank as usize {
            return Err(CoverError::WrongPetalCount {
                expected: rank as usize,
                got: petals.len(),
            });
        }
    }
    let n = petals.len();
    let heads: Vec<usize> = (0..g.order())
        .flat_map(|v| petals.iter().map(move |&s| g.mul(v, s)))
        .collect();
    let cover = RoseCover {
        petals: petals.to_vec(),
        vertices: g.order(),
        heads,
    };
    if !cover.is_connected(n) {
        return Err(CoverError::NotGenerating);
    }
    Ok(cover)
}

impl RoseCover {
    fn is_connected(&self, n: usize) -> bool {
        let mut adjacency = vec![Vec::new(); self.vertices];
        for v in 0..self.vertices {
            for i in 0..n {
                let w = self.heads[v * n + i];
                adjacency[v].push(w);
                adjacency[w].push(v);
            }
        }
        let mut seen = vec![false; self.vertices];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// Character of `G` on `H_1` of the cover, one value per class, from
/// fixed-point counts of a class representative acting on cells.
pub fn h1_character(cover: &RoseCover, g: &Group, classes: &Classes) -> Vec<Cyclotomic> {
    let n = cover.petal_count();
    classes
        .iter()
        .map(|class| {
            let h = class.representative;
            let fixed_vertices = (0..cover.vertex_count()).filter(|&v| g.mul(h, v) == v).count();
            // (v, i) maps to (h v, i); its head must follow.
            let fixed_edges = (0..cover.vertex_count())
                .flat_map(|v| (0..n).map(move |i| (v, i)))
                .filter(|&(v, i)| {
                    let hv = g.mul(h, v);
                    debug_assert_eq!(cover.head(hv, i), g.mul(h, cover.head(v, i)));
                    hv == v
                })
                .count();
            Cyclotomic::from(fixed_edges as i64 - fixed_vertices as i64 + 1)
        })
        .collect()
}

/// Multiplicity of each irreducible in `H_1`, checked against
/// `(n - 1) deg + [trivial]`.
pub fn verify_gaschutz(
    cover: &RoseCover,
    t: &CharacterTable,
    h1: &[Cyclotomic],
) -> Result<Vec<u64>, CoverError> {
    let n = cover.petal_count() as u64;
    let order = BigRational::from_integer(BigInt::from(t.order()));
    let mut out = Vec::with_capacity(t.rows().len());
    for (i, row) in t.rows().iter().enumerate() {
        let inner: Cyclotomic = (0..t.class_count())
            .map(|c| (&h1[c] * &row[c].conj()).scale(&BigRational::from_integer(t.class_sizes()[c].into())))
            .sum::<Cyclotomic>()
            .scale(&(BigRational::from_integer(1.into()) / &order));
        let expected = if n == 0 { 0 } else { (n - 1) * t.degrees()[i] } + u64::from(i == 0);
        if inner != Cyclotomic::from(expected as i64) {
            return Err(CoverError::GaschutzViolation {
                row: i,
                expected,
                found: inner.to_string(),
            });
        }
        out.push(expected);
    }
    Ok(out)
}
