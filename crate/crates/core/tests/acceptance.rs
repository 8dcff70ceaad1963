//! Acceptance run: one pass/fail line per criterion. Exits nonzero if any
//! criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::{brute_frattini, fixture_dir, fixture_text, load, random_p_group, shipped};
use pgroup_core::chartab::find_bijection;
use pgroup_core::cover::{build_cover, h1_character, verify_gaschutz};
use pgroup_core::io::parse_table;
use pgroup_core::propii::{cross_validate, primitive_classes_from_table, restriction_sum, restriction_terms};
use pgroup_core::workflow::{analyze, census, chartab, check_table, Options};
use pgroup_core::{character_table, decide_property_ii, CharacterTable, Cyclotomic, Group};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn group_text(name: &str) -> String {
    fixture_text("groups", &format!("{name}.group"))
}

fn g128_end_to_end() -> Outcome {
    let started = Instant::now();
    let (a, doc) = analyze(&group_text("g128"), &Options::default()).map_err(|e| e.to_string())?;
    let elapsed = started.elapsed();
    let r = &a.decision;
    ensure(a.group.order() == 128, "order")?;
    ensure(r.rank == 3, "rank")?;
    ensure(a.nilpotency_class == 3, "nilpotency class")?;
    ensure(a.frattini_order == 16, "Frattini order")?;
    ensure(a.frattini_invariants == Some(vec![4, 2, 2]), "Frattini invariants")?;
    ensure(a.classes.len() == 23, "class count")?;
    ensure(doc.get("decision", "degrees") == Some("1^8 2^14 8^1"), "degree multiset")?;
    ensure(r.primitive_classes.len() == 14, "primitive class count")?;
    ensure(r.imprimitive_irreps.len() == 1, "imprimitive irrep count")?;
    ensure(a.table.degrees()[r.imprimitive_irreps[0]] == 8, "imprimitive degree")?;
    ensure(r.has_property_ii, "verdict")?;
    ensure(elapsed < Duration::from_secs(30), format!("took {elapsed:?}"))?;
    Ok(format!("{} ms", elapsed.as_millis()))
}

fn reference_table() -> Outcome {
    let computed = character_table(&load("g128")).map_err(|e| e.to_string())?;
    let reference = parse_table(&fixture_text("tables", "g128_reference.table")).map_err(|e| e.to_string())?;
    let bij = find_bijection(&computed, &reference).ok_or("no row/column bijection")?;
    for i in 0..23 {
        for c in 0..23 {
            ensure(
                computed.value(i, c) == reference.value(bij.row_map[i], bij.class_map[c]),
                format!("entry ({i}, {c})"),
            )?;
        }
    }
    let two_i = Cyclotomic::root_of_unity(4, 1) * Cyclotomic::from(2);
    ensure(reference.rows().iter().flatten().any(|v| *v == two_i), "2i entries")?;
    Ok("23x23 exact".into())
}

fn degree_eight_sums() -> Outcome {
    let t = character_table(&load("g128")).map_err(|e| e.to_string())?;
    let r = decide_property_ii(&t).map_err(|e| e.to_string())?;
    let row = r.imprimitive_irreps[0];
    for &c in &r.primitive_classes {
        let terms = restriction_terms(&t, row, c);
        let nonzero: Vec<&Cyclotomic> = terms.iter().filter(|v| !v.is_zero()).collect();
        ensure(nonzero == vec![&Cyclotomic::from(-8), &Cyclotomic::from(8)], format!("class {}", c + 1))?;
        ensure(restriction_sum(&t, row, c).is_zero(), format!("sum on class {}", c + 1))?;
    }
    Ok(format!("{} primitive classes", r.primitive_classes.len()))
}

fn verdicts() -> Outcome {
    let verdict = |name: &str| -> Result<bool, String> {
        let t = character_table(&load(name)).map_err(|e| e.to_string())?;
        Ok(decide_property_ii(&t).map_err(|e| e.to_string())?.has_property_ii)
    };
    ensure(verdict("q8")?, "q8")?;
    ensure(verdict("q16")?, "q16")?;
    ensure(!verdict("d8")?, "d8")?;
    let mut abelian = Vec::new();
    for name in shipped() {
        let g = load(&name);
        if g.is_abelian() && g.rank().map_err(|e| e.to_string())? >= 2 {
            ensure(!verdict(&name)?, name.clone())?;
            abelian.push(name);
        }
    }
    ensure(!abelian.is_empty(), "no abelian fixtures of rank >= 2")?;
    Ok(format!("abelian negatives: {}", abelian.join(" ")))
}

fn oracle_equivalence() -> Outcome {
    let mut brute = 0;
    for name in shipped() {
        let g = load(&name);
        let classes = g.conjugacy_classes();
        let t = character_table(&g).map_err(|e| e.to_string())?;
        let from_table = primitive_classes_from_table(&t).map_err(|e| e.to_string())?;
        ensure(from_table == g.primitive_classes_oracle(&classes), format!("{name} primitive classes"))?;
        if g.order() <= 64 {
            let mut phi = g.frattini_subgroup().members().to_vec();
            phi.sort_unstable();
            ensure(phi == brute_frattini(&g), format!("{name} Frattini"))?;
            brute += 1;
        }
    }
    Ok(format!("{} groups, {brute} by brute force", shipped().len()))
}

fn check_invariants(t: &CharacterTable, g: &Group) -> Result<(), String> {
    let r = t.class_count();
    let sizes = t.class_sizes();
    for i in 0..r {
        for j in 0..r {
            let row: Cyclotomic = (0..r)
                .map(|c| (t.value(i, c) * &t.value(j, c).conj()) * Cyclotomic::from(sizes[c] as i64))
                .sum();
            let expected = if i == j { Cyclotomic::from(t.order() as i64) } else { Cyclotomic::zero() };
            ensure(row == expected, format!("row orthogonality ({i}, {j})"))?;
            let col: Cyclotomic = (0..r).map(|k| t.value(k, i) * &t.value(k, j).conj()).sum();
            let expected = if i == j { Cyclotomic::from((t.order() / sizes[i]) as i64) } else { Cyclotomic::zero() };
            ensure(col == expected, format!("column orthogonality ({i}, {j})"))?;
        }
    }
    ensure(t.degrees().iter().map(|d| d * d).sum::<u64>() == t.order(), "sum of squared degrees")?;
    let pm = t.power_map();
    for row in t.linear_rows() {
        for q in pm.primes() {
            for c in 0..r {
                ensure(t.value(row, pm.apply(c, q as i64)) == &t.value(row, c).pow(q), "power map on a linear row")?;
            }
        }
    }
    cross_validate(g, &g.conjugacy_classes(), t).map_err(|e| e.to_string())
}

fn table_invariants() -> Outcome {
    let mut count = 0;
    for name in shipped() {
        let g = load(&name);
        let t = character_table(&g).map_err(|e| e.to_string())?;
        check_invariants(&t, &g).map_err(|e| format!("{name}: {e}"))?;
        count += 1;
    }
    // Subgroups of the Sylow sources picked by a fixed walk.
    for k in 0..12usize {
        let p = if k % 3 == 2 { 3 } else { 2 };
        let picks = [k * 37 + 5, k * 11 + 3, k * 53 + 1];
        let g = random_p_group(p, &picks[..1 + k % 3]);
        let t = character_table(&g).map_err(|e| e.to_string())?;
        check_invariants(&t, &g).map_err(|e| format!("subgroup {k}: {e}"))?;
        count += 1;
    }
    Ok(format!("{count} tables"))
}

fn gaschutz() -> Outcome {
    for (name, petals, dim) in [("q8", 2, 9), ("g128", 3, 257)] {
        let g = load(name);
        let classes = g.conjugacy_classes();
        let cover = build_cover(&g, g.generator_indices()).map_err(|e| e.to_string())?;
        ensure(cover.first_betti_number() == dim, format!("{name} dimension"))?;
        let h1 = h1_character(&cover, &g, &classes);
        ensure(h1[0] == Cyclotomic::from(dim as i64), format!("{name} character at 1"))?;
        ensure(h1[1..].iter().all(Cyclotomic::is_one), format!("{name} character off 1"))?;
        let t = character_table(&g).map_err(|e| e.to_string())?;
        let mult = verify_gaschutz(&cover, &t, &h1).map_err(|e| e.to_string())?;
        for (i, m) in mult.iter().enumerate() {
            let expected = (petals - 1) * t.degrees()[i] + u64::from(i == 0);
            ensure(*m == expected, format!("{name} multiplicity of irrep {}", i + 1))?;
        }
    }
    Ok("dimensions 9 and 257".into())
}

fn table_only_path() -> Outcome {
    let opts = Options::default();
    for name in shipped() {
        let text = group_text(&name);
        let (_, analyzed) = analyze(&text, &opts).map_err(|e| format!("{name}: {e}"))?;
        let table = chartab(&text, &opts).map_err(|e| format!("{name}: {e}"))?;
        let (_, checked) = check_table(&table, &opts).map_err(|e| format!("{name}: {e}"))?;
        ensure(checked.section("decision").is_some(), format!("{name} has no decision"))?;
        ensure(checked.section("decision") == analyzed.section("decision"), name.clone())?;
    }
    Ok(format!("{} fixtures", shipped().len()))
}

fn census_shape() -> Outcome {
    let c = census(&fixture_dir("groups"), &Options::default(), 2).map_err(|e| e.to_string())?;
    ensure(c.failures.is_empty(), "census failures")?;
    let flagged: Vec<&str> = c.flagged().map(|e| e.name.as_str()).collect();
    ensure(flagged == ["q8", "q16", "g128"], format!("flagged {flagged:?}"))?;
    let counts = c.rank3_counts();
    let (examined, by_class) = counts.get(&128).ok_or("no rank-3 groups of order 128")?;
    ensure(*examined == 1, "rank-3 groups of order 128 examined")?;
    ensure(by_class.get(&3) == Some(&1) && by_class.get(&4).is_none(), "order-128 counts by class")?;
    Ok("order 128: 1 group, 3-step; orders 256 and 512 need an external group library and are not shipped".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("g128 end to end", g128_end_to_end),
        ("g128 table matches the reference", reference_table),
        ("degree-8 restriction sums", degree_eight_sums),
        ("rank-2 verdicts", verdicts),
        ("table and group oracles agree", oracle_equivalence),
        ("character table invariants", table_invariants),
        ("Gaschutz formula", gaschutz),
        ("table-only decision", table_only_path),
        ("census shape", census_shape),
    ];
    let mut failed = 0;
    for (n, (desc, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {desc} ({detail})", n + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {desc} ({why})", n + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
