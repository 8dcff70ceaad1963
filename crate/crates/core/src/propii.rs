//! Table-only decision of Property II.
//!
//! A class is primitive when it lies outside the Frattini subgroup. From the
//! table alone this is detected with linear characters: `c` is primitive iff
//! some linear `chi` has `chi(c) != 1` and `chi(c)` of maximal multiplicative
//! order among the values of `chi`. An irreducible is imprimitive iff
//! `sum_{i=1}^{ord g} chi(g^i) = 0` for every primitive `g`, i.e. no
//! primitive element fixes a nonzero vector.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use thiserror::Error;

use crate::chartab::exact::IntCyc;
use crate::chartab::CharacterTable;
use crate::cyclotomic::Cyclotomic;
use crate::group::{Classes, Group};
use crate::util::prime_power_exponent;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum PropiiError {
    #[error("malformed character table: {0}")]
    MalformedTable(String),
    #[error("the trivial group has no rank")]
    TrivialGroup,
    #[error("inconsistency detected: {detail}")]
    InconsistencyDetected {
        detail: String,
        class: Option<usize>,
        row: Option<usize>,
    },
}

fn malformed(msg: impl Into<String>) -> PropiiError {
    PropiiError::MalformedTable(msg.into())
}

/// Which inputs a report was derived from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    Group,
    TableOnly,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Group => "group",
            Provenance::TableOnly => "table-only",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyIIReport {
    pub order: u64,
    pub prime: u64,
    pub rank: u32,
    pub class_count: usize,
    pub degrees: Vec<u64>,
    pub primitive_classes: Vec<usize>,
    /// `restriction_sums[r][i]` is the sum for row `r` over
    /// `primitive_classes[i]`.
    pub restriction_sums: Vec<Vec<Cyclotomic>>,
    pub imprimitive_irreps: Vec<usize>,
    pub has_property_ii: bool,
    pub provenance: Provenance,
}

/// Checks that the table describes a nontrivial p-group: the order, every
/// element order and every degree is a power of the table's prime.
pub fn validate_p_group(t: &CharacterTable) -> Result<(), PropiiError> {
    let p = t.prime();
    if p < 2 || !crate::util::is_prime(p) {
        return Err(malformed(format!("{p} is not a prime")));
    }
    if prime_power_exponent(t.order(), p).is_none() {
        return Err(malformed(format!("order {} is not a power of {p}", t.order())));
    }
    if let Some(c) = t.element_orders().iter().position(|&o| prime_power_exponent(o, p).is_none()) {
        return Err(malformed(format!("class {c} has element order not a power of {p}")));
    }
    if let Some(r) = t.degrees().iter().position(|&d| prime_power_exponent(d, p).is_none()) {
        return Err(malformed(format!("row {r} has degree not a power of {p}")));
    }
    Ok(())
}

/// Primitive classes read off the linear characters.
pub fn primitive_classes_from_table(t: &CharacterTable) -> Result<Vec<usize>, PropiiError> {
    validate_p_group(t)?;
    let r = t.class_count();
    let mut primitive = vec![false; r];
    for row in t.linear_rows() {
        let orders = t.rows()[row]
            .iter()
            .enumerate()
            .map(|(c, v)| {
                v.root_order()
                    .ok_or_else(|| malformed(format!("linear row {row} is not a root of unity at class {c}")))
            })
            .collect::<Result<Vec<u64>, _>>()?;
        let max = orders.iter().copied().max().unwrap_or(1);
        for c in 0..r {
            if orders[c] == max && !t.value(row, c).is_one() {
                primitive[c] = true;
            }
        }
    }
    Ok((0..r).filter(|&c| primitive[c]).collect())
}

/// The terms `chi(g), chi(g^2), ..., chi(g^m)` for `g` in class `class`,
/// with `m` its element order, read through the power map.
pub fn restriction_terms(t: &CharacterTable, row: usize, class: usize) -> Vec<Cyclotomic> {
    let m = t.element_orders()[class];
    (1..=m as i64)
        .map(|i| t.value(row, t.power_map().apply(class, i)).clone())
        .collect()
}

/// `sum_{i=1}^{m} chi(g^i)`: `m` times the multiplicity of the trivial
/// character in the restriction of `chi` to `<g>`.
pub fn restriction_sum(t: &CharacterTable, row: usize, class: usize) -> Cyclotomic {
    restriction_terms(t, row, class).iter().sum()
}

/// All restriction sums of one row over the given classes, accumulated in
/// the power basis of `Q(E(e))` with machine integers and converted once
/// per sum. Agrees with [`restriction_sum`].
fn restriction_sums_for_row(t: &CharacterTable, row: usize, classes: &[usize]) -> Vec<Cyclotomic> {
    let n = t.conductor();
    let Some(values) = t.rows()[row]
        .iter()
        .map(|v| IntCyc::from_cyclotomic(v, n))
        .collect::<Option<Vec<_>>>()
    else {
        return classes.iter().map(|&c| restriction_sum(t, row, c)).collect();
    };
    classes
        .iter()
        .map(|&c| {
            let mut acc = vec![0i64; n as usize];
            for i in 1..=t.element_orders()[c] as i64 {
                for &(k, x) in &values[t.power_map().apply(c, i)].terms {
                    acc[k] += x;
                }
            }
            Cyclotomic::from_integer_powers(n, &acc)
        })
        .collect()
}

/// Rank from the table alone: `|Phi|` is the total size of the
/// non-primitive classes.
fn table_rank(t: &CharacterTable, primitive: &[usize]) -> Result<u32, PropiiError> {
    let prim_size: u64 = primitive.iter().map(|&c| t.class_sizes()[c]).sum();
    let phi = t.order() - prim_size;
    if phi == 0 || t.order() % phi != 0 {
        return Err(malformed("non-primitive classes do not form a subgroup"));
    }
    prime_power_exponent(t.order() / phi, t.prime())
        .ok_or_else(|| malformed("Frattini index is not a prime power"))
}

/// Runs the full decision from table data alone. Every restriction sum is
/// computed, then rows vanishing on all primitive classes are collected.
pub fn decide_property_ii(t: &CharacterTable) -> Result<PropertyIIReport, PropiiError> {
    validate_p_group(t)?;
    if t.order() == 1 {
        return Err(PropiiError::TrivialGroup);
    }
    let primitive = primitive_classes_from_table(t)?;
    let rank = table_rank(t, &primitive)?;
    let rows = t.rows().len();
    let mut sums = Vec::with_capacity(rows);
    for r in 0..rows {
        let row_sums = restriction_sums_for_row(t, r, &primitive);
        for (s, &c) in row_sums.iter().zip(&primitive) {
            check_multiplicity(s, t.element_orders()[c]).map_err(|why| {
                malformed(format!("row {r}, class {c}: restriction sum {s} {why}"))
            })?;
        }
        sums.push(row_sums);
    }
    let imprimitive: Vec<usize> = (0..rows)
        .filter(|&r| sums[r].iter().all(Cyclotomic::is_zero))
        .collect();
    Ok(PropertyIIReport {
        order: t.order(),
        prime: t.prime(),
        rank,
        class_count: t.class_count(),
        degrees: t.degrees().to_vec(),
        has_property_ii: !imprimitive.is_empty(),
        primitive_classes: primitive,
        restriction_sums: sums,
        imprimitive_irreps: imprimitive,
        provenance: Provenance::TableOnly,
    })
}

/// A restriction sum must be `m` times a nonnegative integer.
fn check_multiplicity(s: &Cyclotomic, m: u64) -> Result<(), &'static str> {
    let n = s.as_integer().ok_or("is not a rational integer")?;
    if n.is_negative() {
        return Err("is negative");
    }
    if !n.is_multiple_of(&BigInt::from(m)) {
        return Err("is not a multiple of the element order");
    }
    Ok(())
}

/// Checks the table-only route against direct computation in the group:
/// the primitive classes must be the classes outside the Frattini
/// subgroup, and each restriction sum must match the sum over the actual
/// powers of a class representative.
pub fn cross_validate(g: &Group, classes: &Classes, t: &CharacterTable) -> Result<(), PropiiError> {
    let inconsistent = |detail: String, class: Option<usize>, row: Option<usize>| {
        PropiiError::InconsistencyDetected { detail, class, row }
    };
    if t.class_count() != classes.len()
        || classes.iter().zip(t.class_sizes()).any(|(c, &s)| c.size as u64 != s)
    {
        return Err(inconsistent("table classes do not match the group".into(), None, None));
    }
    let from_table = primitive_classes_from_table(t)?;
    let oracle = g.primitive_classes_oracle(classes);
    if from_table != oracle {
        let class = (0..classes.len()).find(|c| from_table.contains(c) != oracle.contains(c));
        return Err(inconsistent(
            format!("primitive classes from the table {from_table:?} differ from the Frattini complement {oracle:?}"),
            class,
            None,
        ));
    }
    for &c in &oracle {
        let rep = classes.get(c).representative;
        let m = g.element_order(rep);
        let power_classes: Vec<usize> = (1..=m as i64).map(|i| classes.class_of(g.pow(rep, i))).collect();
        for r in 0..t.rows().len() {
            let direct: Cyclotomic = power_classes.iter().map(|&k| t.value(r, k)).sum();
            let via_map = restriction_sum(t, r, c);
            if direct != via_map || direct.is_zero() != via_map.is_zero() {
                return Err(inconsistent(
                    format!("row {r}, class {c}: power-map sum {via_map} but direct sum {direct}"),
                    Some(c),
                    Some(r),
                ));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::character_table;
    use crate::group::tests::{cyclic, q8};

    #[test]
    fn quaternion_decision() {
        let g = q8();
        let t = character_table(&g).unwrap();
        assert_eq!(primitive_classes_from_table(&t).unwrap(), vec![2, 3, 4]);
        let report = decide_property_ii(&t).unwrap();
        assert!(report.has_property_ii);
        assert_eq!(report.rank, 2);
        assert_eq!(report.imprimitive_irreps, vec![4]);
        assert_eq!(t.degrees()[4], 2);
        // chi(i) + chi(-1) + chi(-i) + chi(1) = 0 - 2 + 0 + 2
        let terms = restriction_terms(&t, 4, 2);
        let expected: Vec<Cyclotomic> = [0, -2, 0, 2].into_iter().map(Cyclotomic::from).collect();
        assert_eq!(terms, expected);
        cross_validate(&g, &g.conjugacy_classes(), &t).unwrap();
    }

    #[test]
    fn accumulated_sums_match_direct_sums() {
        for g in [q8(), cyclic(8, 2), cyclic(9, 3)] {
            let t = character_table(&g).unwrap();
            let all: Vec<usize> = (0..t.class_count()).collect();
            for r in 0..t.rows().len() {
                let direct: Vec<Cyclotomic> = all.iter().map(|&c| restriction_sum(&t, r, c)).collect();
                assert_eq!(restriction_sums_for_row(&t, r, &all), direct);
            }
        }
    }

    #[test]
    fn trivial_row_sums_to_element_order() {
        let g = q8();
        let t = character_table(&g).unwrap();
        for c in 0..t.class_count() {
            assert_eq!(restriction_sum(&t, 0, c), Cyclotomic::from(t.element_orders()[c] as i64));
        }
    }

    #[test]
    fn rank_one_is_degenerate() {
        // The primitive elements of a cyclic group are its generators, so
        // every nontrivial character is imprimitive.
        for n in [2, 4, 8] {
            let t = character_table(&cyclic(n, 2)).unwrap();
            let report = decide_property_ii(&t).unwrap();
            assert_eq!(report.rank, 1);
            assert_eq!(report.imprimitive_irreps, (1..n).collect::<Vec<_>>());
        }
    }

    #[test]
    fn trivial_group_has_no_rank() {
        let g = cyclic(1, 2);
        let t = character_table(&g).unwrap();
        assert_eq!(decide_property_ii(&t).unwrap_err(), PropiiError::TrivialGroup);
        assert_eq!(primitive_classes_from_table(&t).unwrap(), Vec::<usize>::new());
        cross_validate(&g, &g.conjugacy_classes(), &t).unwrap();
    }

    #[test]
    fn rejects_non_p_group_tables() {
        let g = cyclic(4, 2);
        let t = character_table(&g).unwrap();
        let wrong = CharacterTable::new(
            4,
            3,
            t.class_sizes().to_vec(),
            t.element_orders().to_vec(),
            t.power_map().clone(),
            t.rows().to_vec(),
        )
        .unwrap();
        assert!(matches!(decide_property_ii(&wrong), Err(PropiiError::MalformedTable(_))));
    }
}
