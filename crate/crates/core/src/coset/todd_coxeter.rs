//! HLT coset enumeration over the trivial subgroup.
//!
//! Columns are `2g` for generator `g` and `2g + 1` for its inverse. Coset 0
//! is the subgroup itself. Coincidences are processed immediately with a
//! union-find over coset numbers (smaller number survives).

use super::{CosetError, Presentation};
use crate::perm::Permutation;

const UNDEF: u32 = u32::MAX;

/// A closed, compacted coset table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetTable {
    generators: usize,
    /// `rows[c * 2 * generators + col]`
    rows: Vec<u32>,
}

impl CosetTable {
    pub fn order(&self) -> usize {
        if self.generators == 0 {
            1
        } else {
            self.rows.len() / (2 * self.generators)
        }
    }

    /// Image of coset `c` under column `col`.
    pub fn entry(&self, c: usize, col: usize) -> usize {
        self.rows[c * 2 * self.generators + col] as usize
    }

    /// The right action of each generator on cosets.
    pub fn generator_permutations(&self) -> Vec<Permutation> {
        (0..self.generators)
            .map(|g| {
                let images = (0..self.order()).map(|c| self.entry(c, 2 * g) as u32).collect();
                Permutation::from_images(images).expect("closed coset table columns are bijections")
            })
            .collect()
    }
}

struct Enumerator {
    width: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    max_cosets: usize,
    queue: Vec<u32>,
}

impl Enumerator {
    fn cosets(&self) -> usize {
        self.parent.len()
    }

    fn get(&self, c: u32, col: usize) -> u32 {
        self.table[c as usize * self.width + col]
    }

    fn set(&mut self, c: u32, col: usize, v: u32) {
        self.table[c as usize * self.width + col] = v;
    }

    fn is_live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn define(&mut self, c: u32, col: usize) -> Result<u32, CosetError> {
        if self.cosets() >= self.max_cosets {
            return Err(CosetError::TableOverflow {
                max_cosets: self.max_cosets,
            });
        }
        let n = self.cosets() as u32;
        self.parent.push(n);
        self.table.extend(std::iter::repeat_n(UNDEF, self.width));
        self.set(c, col, n);
        self.set(n, col ^ 1, c);
        Ok(n)
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut root = c;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut cur = c;
        while self.parent[cur as usize] != root {
            let next = self.parent[cur as usize];
            self.parent[cur as usize] = root;
            cur = next;
        }
        root
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.rep(a), self.rep(b));
        if ra == rb {
            return;
        }
        let (keep, drop) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[drop as usize] = keep;
        self.queue.push(drop);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let dead = self.queue[i];
            i += 1;
            for col in 0..self.width {
                let target = self.get(dead, col);
                if target == UNDEF {
                    continue;
                }
                self.set(target, col ^ 1, UNDEF);
                let mu = self.rep(dead);
                let nu = self.rep(target);
                let mu_img = self.get(mu, col);
                if mu_img != UNDEF {
                    self.merge(nu, mu_img);
                } else {
                    let nu_img = self.get(nu, col ^ 1);
                    if nu_img != UNDEF {
                        self.merge(mu, nu_img);
                    } else {
                        self.set(mu, col, nu);
                        self.set(nu, col ^ 1, mu);
                    }
                }
            }
        }
    }

    /// Scans relator `rel` (as columns) from coset `c`, defining cosets to
    /// complete the scan and recording the resulting deduction or
    /// coincidence.
    fn scan_and_fill(&mut self, c: u32, rel: &[usize]) -> Result<(), CosetError> {
        if rel.is_empty() {
            return Ok(());
        }
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0isize, rel.len() as isize - 1);
        loop {
            while i <= j && self.get(f, rel[i as usize]) != UNDEF {
                f = self.get(f, rel[i as usize]);
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i && self.get(b, rel[j as usize] ^ 1) != UNDEF {
                b = self.get(b, rel[j as usize] ^ 1);
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                // deduction closes the scan
                let col = rel[i as usize];
                self.set(f, col, b);
                self.set(b, col ^ 1, f);
                return Ok(());
            }
            self.define(f, rel[i as usize])?;
        }
    }
}

/// Runs HLT enumeration of the cosets of the trivial subgroup.
pub fn enumerate(pres: &Presentation, max_cosets: usize) -> Result<CosetTable, CosetError> {
    let gens = pres.generator_count();
    let width = 2 * gens;
    if gens == 0 {
        return Ok(CosetTable {
            generators: 0,
            rows: Vec::new(),
        });
    }
    let relators: Vec<Vec<usize>> = pres
        .relators()
        .iter()
        .map(|w| {
            w.letters()
                .into_iter()
                .map(|l| {
                    let g = (l.unsigned_abs() - 1) as usize;
                    if l > 0 {
                        2 * g
                    } else {
                        2 * g + 1
                    }
                })
                .collect()
        })
        .collect();

    let mut en = Enumerator {
        width,
        table: vec![UNDEF; width],
        parent: vec![0],
        max_cosets,
        queue: Vec::new(),
    };

    let mut c = 0u32;
    while (c as usize) < en.cosets() {
        if en.is_live(c) {
            for rel in &relators {
                en.scan_and_fill(c, rel)?;
                if !en.is_live(c) {
                    break;
                }
            }
            if en.is_live(c) {
                for col in 0..width {
                    if en.get(c, col) == UNDEF {
                        en.define(c, col)?;
                    }
                }
            }
        }
        c += 1;
    }

    // Compact live cosets, preserving their relative order.
    let mut label = vec![UNDEF; en.cosets()];
    let mut live = Vec::new();
    for k in 0..en.cosets() as u32 {
        if en.is_live(k) {
            label[k as usize] = live.len() as u32;
            live.push(k);
        }
    }
    let mut rows = Vec::with_capacity(live.len() * width);
    for &k in &live {
        for col in 0..width {
            let target = en.get(k, col);
            debug_assert_ne!(target, UNDEF, "closed table has no gaps");
            let target = en.rep(target);
            rows.push(label[target as usize]);
        }
    }
    Ok(CosetTable {
        generators: gens,
        rows,
    })
}
