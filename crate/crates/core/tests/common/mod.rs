//! Fixture loading and brute-force oracles shared by the integration tests.
//! The oracles work from the multiplication table only.

#![allow(dead_code)]

use std::collections::HashSet;
use std::path::PathBuf;
use std::sync::OnceLock;

use pgroup_core::io::GroupFile;
use pgroup_core::{generate_group, Group, Permutation};

pub fn fixture_dir(sub: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(sub)
}

pub fn fixture_text(sub: &str, name: &str) -> String {
    let path = fixture_dir(sub).join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

pub fn load(name: &str) -> Group {
    GroupFile::parse(&fixture_text("groups", &format!("{name}.group")))
        .unwrap()
        .build(None)
        .unwrap()
}

pub fn load_extra(name: &str) -> Group {
    GroupFile::parse(&fixture_text("extra", &format!("{name}.group")))
        .unwrap()
        .build(None)
        .unwrap()
}

/// Names of the shipped census fixtures.
pub fn shipped() -> Vec<String> {
    let mut names: Vec<String> = std::fs::read_dir(fixture_dir("groups"))
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "group"))
        .map(|p| p.file_stem().unwrap().to_string_lossy().into_owned())
        .collect();
    names.sort();
    names
}

/// Subgroup generated by `gens`, by breadth-first closure under
/// multiplication, as a membership mask.
pub fn closure(g: &Group, gens: &[usize]) -> Vec<bool> {
    let mut member = vec![false; g.order()];
    member[0] = true;
    let mut list = vec![0];
    let mut head = 0;
    while head < list.len() {
        let x = list[head];
        head += 1;
        for &s in gens {
            let y = g.mul(x, s);
            if !member[y] {
                member[y] = true;
                list.push(y);
            }
        }
    }
    member
}

/// Every subgroup, from cyclic subgroups closed under joins.
pub fn all_subgroups(g: &Group) -> Vec<Vec<bool>> {
    let mut seen: HashSet<Vec<bool>> = HashSet::new();
    let mut subgroups: Vec<Vec<bool>> = Vec::new();
    for x in 0..g.order() {
        let h = closure(g, &[x]);
        if seen.insert(h.clone()) {
            subgroups.push(h);
        }
    }
    let mut i = 0;
    while i < subgroups.len() {
        for j in 0..i {
            let gens: Vec<usize> = (0..g.order()).filter(|&x| subgroups[i][x] || subgroups[j][x]).collect();
            let join = closure(g, &gens);
            if seen.insert(join.clone()) {
                subgroups.push(join);
            }
        }
        i += 1;
    }
    subgroups
}

/// Intersection of the maximal proper subgroups.
pub fn brute_frattini(g: &Group) -> Vec<usize> {
    let n = g.order();
    let proper: Vec<Vec<bool>> = all_subgroups(g).into_iter().filter(|h| h.iter().any(|m| !m)).collect();
    let contains = |big: &Vec<bool>, small: &Vec<bool>| (0..n).all(|x| !small[x] || big[x]);
    let maximal: Vec<&Vec<bool>> = proper
        .iter()
        .filter(|h| !proper.iter().any(|k| k != *h && contains(k, h)))
        .collect();
    (0..n).filter(|&x| maximal.iter().all(|h| h[x])).collect()
}

/// Size of a smallest generating set, by exhaustion over subsets of size
/// up to `max`.
pub fn brute_rank(g: &Group, max: usize) -> Option<usize> {
    let n = g.order();
    if n == 1 {
        return Some(0);
    }
    fn search(g: &Group, chosen: &mut Vec<usize>, start: usize, k: usize) -> bool {
        if chosen.len() == k {
            return closure(g, chosen).into_iter().all(|m| m);
        }
        for x in start..g.order() {
            chosen.push(x);
            if search(g, chosen, x + 1, k) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    (1..=max).find(|&k| search(g, &mut Vec::new(), 1, k))
}

const ORACLE_PRIME: u64 = 1_000_000_007;

/// `|G|` minus the rank of the span of left cosets `h<x>` over primitive
/// `x`, in `F_q[G]` with `q` prime to `|G|`. This is the sum of squared
/// degrees of the irreducibles on which no primitive element has a fixed
/// vector, since the averaging idempotent of `<x>` kills exactly the
/// representations without `x`-fixed vectors.
pub fn imprimitive_mass(g: &Group, primitive: &[usize]) -> usize {
    let n = g.order();
    let q = ORACLE_PRIME;
    let mut cyclic: HashSet<Vec<bool>> = HashSet::new();
    for &x in primitive {
        cyclic.insert(closure(g, &[x]));
    }
    let mut cosets: HashSet<Vec<bool>> = HashSet::new();
    for c in &cyclic {
        let members: Vec<usize> = (0..n).filter(|&y| c[y]).collect();
        for h in 0..n {
            let mut mask = vec![false; n];
            for &y in &members {
                mask[g.mul(h, y)] = true;
            }
            cosets.insert(mask);
        }
    }
    let mut cosets: Vec<Vec<bool>> = cosets.into_iter().collect();
    cosets.sort();
    // Row echelon basis keyed by pivot column.
    let mut basis: Vec<Option<Vec<u64>>> = vec![None; n];
    let mut rank = 0;
    for mask in cosets {
        let mut v: Vec<u64> = mask.iter().map(|&b| u64::from(b)).collect();
        for col in 0..n {
            if v[col] == 0 {
                continue;
            }
            match &basis[col] {
                Some(row) => {
                    let f = v[col];
                    for k in col..n {
                        v[k] = (v[k] + q - f * row[k] % q) % q;
                    }
                }
                None => {
                    let inv = pow_mod(v[col], q - 2, q);
                    for x in v.iter_mut() {
                        *x = *x * inv % q;
                    }
                    basis[col] = Some(v);
                    rank += 1;
                    break;
                }
            }
        }
    }
    n - rank
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// Elements outside a subgroup given by its members.
pub fn complement(g: &Group, members: &[usize]) -> Vec<usize> {
    let inside: HashSet<usize> = members.iter().copied().collect();
    (0..g.order()).filter(|x| !inside.contains(x)).collect()
}

/// Product of cyclic groups of the given orders, acting on disjoint
/// cycles.
pub fn abelian(prime: u64, orders: &[usize]) -> Group {
    let degree: usize = orders.iter().sum();
    let mut offset = 0;
    let gens = orders
        .iter()
        .map(|&m| {
            let mut images: Vec<u32> = (0..degree as u32).collect();
            for i in 0..m {
                images[offset + i] = (offset + (i + 1) % m) as u32;
            }
            offset += m;
            Permutation::from_images(images).unwrap()
        })
        .collect();
    generate_group(gens, prime).unwrap()
}

/// Sylow subgroups of small symmetric groups, used as a source of random
/// p-groups: order 128 in `S_8` and order 81 in `S_9`.
pub fn sylow(prime: u64) -> &'static Group {
    static TWO: OnceLock<Group> = OnceLock::new();
    static THREE: OnceLock<Group> = OnceLock::new();
    match prime {
        2 => TWO.get_or_init(|| {
            let gens = [
                vec![vec![1, 2]],
                vec![vec![1, 3], vec![2, 4]],
                vec![vec![1, 5], vec![2, 6], vec![3, 7], vec![4, 8]],
            ];
            generate_group(gens.iter().map(|c| Permutation::from_cycles(8, c).unwrap()).collect(), 2).unwrap()
        }),
        3 => THREE.get_or_init(|| {
            let gens = [vec![vec![1, 2, 3]], vec![vec![1, 4, 7], vec![2, 5, 8], vec![3, 6, 9]]];
            generate_group(gens.iter().map(|c| Permutation::from_cycles(9, c).unwrap()).collect(), 3).unwrap()
        }),
        _ => panic!("no Sylow source for {prime}"),
    }
}

/// The subgroup of a Sylow source generated by elements picked by index.
pub fn random_p_group(prime: u64, picks: &[usize]) -> Group {
    let s = sylow(prime);
    let gens: Vec<Permutation> = picks.iter().map(|&i| s.element(i % s.order()).clone()).collect();
    generate_group(gens, prime).unwrap()
}
