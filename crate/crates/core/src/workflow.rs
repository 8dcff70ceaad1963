//! The commands behind the CLI: analyze, chartab, check-table, verify-cover
//! and census. Each returns a report document; files are written by the
//! caller.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::chartab::{character_table_with_seed, CharacterTable, DEFAULT_SEED};
use crate::cover::{build_cover, h1_character, verify_gaschutz};
use crate::group::{Classes, Group};
use crate::io::{emit_table, parse_table, Document, GroupFile, Section};
use crate::propii::{cross_validate, decide_property_ii, PropertyIIReport, PropiiError, Provenance};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    pub seed: u64,
    pub max_cosets: Option<usize>,
    pub approx: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            seed: DEFAULT_SEED,
            max_cosets: None,
            approx: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WorkflowError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Inconsistency(String),
}

impl WorkflowError {
    pub fn exit_code(&self) -> i32 {
        match self {
            WorkflowError::Input(_) => 1,
            WorkflowError::Inconsistency(_) => 2,
        }
    }
}

fn input(e: impl ToString) -> WorkflowError {
    WorkflowError::Input(e.to_string())
}

fn from_propii(e: PropiiError) -> WorkflowError {
    match e {
        PropiiError::InconsistencyDetected { .. } => WorkflowError::Inconsistency(e.to_string()),
        other => input(other),
    }
}

/// Everything computed by `analyze`.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub name: Option<String>,
    pub group: Group,
    pub classes: Classes,
    pub table: CharacterTable,
    pub decision: PropertyIIReport,
    pub nilpotency_class: usize,
    pub frattini_order: usize,
    pub frattini_invariants: Option<Vec<u64>>,
}

pub fn load_group(text: &str, opts: &Options) -> Result<(GroupFile, Group), WorkflowError> {
    let file = GroupFile::parse(text).map_err(input)?;
    let group = file.build(opts.max_cosets).map_err(input)?;
    Ok((file, group))
}

pub fn analyze_group(file: &GroupFile, group: Group, opts: &Options) -> Result<Analysis, WorkflowError> {
    let classes = group.conjugacy_classes();
    let table = character_table_with_seed(&group, opts.seed).map_err(|e| WorkflowError::Inconsistency(e.to_string()))?;
    let mut decision = decide_property_ii(&table).map_err(from_propii)?;
    cross_validate(&group, &classes, &table).map_err(from_propii)?;
    let rank = group.rank().map_err(input)?;
    if rank != decision.rank {
        return Err(WorkflowError::Inconsistency(format!(
            "rank {rank} from the group but {} from the table",
            decision.rank
        )));
    }
    decision.provenance = Provenance::Group;
    let phi = group.frattini_subgroup();
    Ok(Analysis {
        name: file.name.clone(),
        nilpotency_class: group.nilpotency_class(),
        frattini_order: phi.order(),
        frattini_invariants: group.abelian_invariants(&phi),
        group,
        classes,
        table,
        decision,
    })
}

fn sha256_hex(text: &str) -> String {
    format!("{:x}", Sha256::digest(text.as_bytes()))
}

fn run_section(command: &str, text: &str, provenance: Option<Provenance>, seed: Option<u64>, started: Instant) -> Section {
    let mut s = Section::new("run");
    s.push("command", command).push("toolkit-version", VERSION).push("input-sha256", sha256_hex(text));
    if let Some(p) = provenance {
        s.push("provenance", p.as_str());
    }
    if let Some(seed) = seed {
        s.push("seed", seed);
    }
    s.push("elapsed-ms", started.elapsed().as_millis());
    s
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// `1^8 2^14 8^1` style multiset of degrees.
pub fn degree_multiset(degrees: &[u64]) -> String {
    let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
    for &d in degrees {
        *counts.entry(d).or_default() += 1;
    }
    join(counts.iter().map(|(d, n)| format!("{d}^{n}")))
}

/// The part of a report determined by the character table alone. Classes
/// and rows are numbered from 1.
pub fn decision_section(r: &PropertyIIReport, approx: bool) -> Section {
    let mut s = Section::new("decision");
    s.push("order", r.order)
        .push("prime", r.prime)
        .push("rank", r.rank)
        .push("classes", r.class_count)
        .push("degrees", degree_multiset(&r.degrees))
        .push("primitive-classes", join(r.primitive_classes.iter().map(|c| c + 1)))
        .push("imprimitive-irreps", join(r.imprimitive_irreps.iter().map(|i| i + 1)))
        .push("imprimitive-degrees", join(r.imprimitive_irreps.iter().map(|&i| r.degrees[i])))
        .push("has-property-ii", r.has_property_ii);
    for (row, sums) in r.restriction_sums.iter().enumerate() {
        for (k, sum) in sums.iter().enumerate() {
            let mut value = format!("X.{} C.{} {sum}", row + 1, r.primitive_classes[k] + 1);
            if approx {
                let (re, im) = sum.to_complex();
                value.push_str(&format!(" ~{re:.6}{im:+.6}i"));
            }
            s.push("restriction-sum", value);
        }
    }
    s
}

fn group_section(a: &Analysis) -> Section {
    let mut s = Section::new("group");
    if let Some(name) = &a.name {
        s.push("name", name);
    }
    s.push("order", a.group.order())
        .push("nilpotency-class", a.nilpotency_class)
        .push("frattini-order", a.frattini_order);
    if let Some(inv) = &a.frattini_invariants {
        s.push("frattini-invariants", join(inv));
    }
    s.push("cross-validation", "ok");
    s
}

pub fn analyze(text: &str, opts: &Options) -> Result<(Analysis, Document), WorkflowError> {
    let started = Instant::now();
    let (file, group) = load_group(text, opts)?;
    let analysis = analyze_group(&file, group, opts)?;
    let doc = Document {
        sections: vec![
            run_section("analyze", text, Some(Provenance::Group), Some(opts.seed), started),
            decision_section(&analysis.decision, opts.approx),
            group_section(&analysis),
        ],
    };
    Ok((analysis, doc))
}

/// The character table of a group file, as table-file text.
pub fn chartab(text: &str, opts: &Options) -> Result<String, WorkflowError> {
    let (_, group) = load_group(text, opts)?;
    let table = character_table_with_seed(&group, opts.seed).map_err(|e| WorkflowError::Inconsistency(e.to_string()))?;
    Ok(emit_table(&table))
}

pub fn check_table(text: &str, opts: &Options) -> Result<(PropertyIIReport, Document), WorkflowError> {
    let started = Instant::now();
    let table = parse_table(text).map_err(input)?;
    let decision = decide_property_ii(&table).map_err(from_propii)?;
    let doc = Document {
        sections: vec![
            run_section("check-table", text, Some(decision.provenance), None, started),
            decision_section(&decision, opts.approx),
        ],
    };
    Ok((decision, doc))
}

/// Builds the cover of the rose on the file's generators and checks the
/// homology decomposition.
pub fn verify_cover(text: &str, opts: &Options) -> Result<Document, WorkflowError> {
    let started = Instant::now();
    let (_, group) = load_group(text, opts)?;
    let petals = group.generator_indices().to_vec();
    let cover = build_cover(&group, &petals).map_err(input)?;
    let classes = group.conjugacy_classes();
    let table = character_table_with_seed(&group, opts.seed).map_err(|e| WorkflowError::Inconsistency(e.to_string()))?;
    let h1 = h1_character(&cover, &group, &classes);
    let multiplicities =
        verify_gaschutz(&cover, &table, &h1).map_err(|e| WorkflowError::Inconsistency(e.to_string()))?;
    let mut s = Section::new("cover");
    s.push("petals", cover.petal_count())
        .push("vertices", cover.vertex_count())
        .push("edges", cover.edge_count())
        .push("h1-dimension", cover.first_betti_number());
    for (c, v) in h1.iter().enumerate() {
        s.push("h1-character", format!("C.{} {v}", c + 1));
    }
    for (i, m) in multiplicities.iter().enumerate() {
        s.push("multiplicity", format!("X.{} {m}", i + 1));
    }
    s.push("gaschutz", "ok");
    Ok(Document {
        sections: vec![run_section("verify-cover", text, None, Some(opts.seed), started), s],
    })
}

/// One census line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusEntry {
    pub file: String,
    pub name: String,
    pub order: usize,
    pub rank: u32,
    pub nilpotency_class: usize,
    pub has_property_ii: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub entries: Vec<CensusEntry>,
    pub failures: Vec<(String, WorkflowError)>,
}

impl Census {
    /// Groups of rank at least 2 with an imprimitive irrep. Cyclic groups
    /// satisfy the definition vacuously and are not counted.
    pub fn flagged(&self) -> impl Iterator<Item = &CensusEntry> {
        self.entries.iter().filter(|e| e.rank >= 2 && e.has_property_ii)
    }

    /// Rank-3 groups with the property, counted per order and nilpotency
    /// class: `order -> (examined, class -> count)`.
    pub fn rank3_counts(&self) -> BTreeMap<usize, (usize, BTreeMap<usize, usize>)> {
        let mut out: BTreeMap<usize, (usize, BTreeMap<usize, usize>)> = BTreeMap::new();
        for e in self.entries.iter().filter(|e| e.rank == 3) {
            let slot = out.entry(e.order).or_default();
            slot.0 += 1;
            if e.has_property_ii {
                *slot.1.entry(e.nilpotency_class).or_default() += 1;
            }
        }
        out
    }

    pub fn worst_exit_code(&self) -> i32 {
        self.failures.iter().map(|(_, e)| e.exit_code()).max().unwrap_or(0)
    }

    pub fn document(&self) -> Document {
        let mut summary = Section::new("census");
        summary
            .push("toolkit-version", VERSION)
            .push("files", self.entries.len() + self.failures.len())
            .push("analyzed", self.entries.len())
            .push("failed", self.failures.len());
        let mut groups = Section::new("groups");
        for e in &self.entries {
            groups.push(
                "group",
                format!(
                    "{} file {} order {} rank {} class {} property-ii {}",
                    e.name, e.file, e.order, e.rank, e.nilpotency_class, e.has_property_ii
                ),
            );
        }
        let mut flagged = Section::new("flagged");
        for e in self.flagged() {
            flagged.push("group", format!("{} order {} rank {}", e.name, e.order, e.rank));
        }
        // Columns run from class 3, the least class a rank-3 example can have.
        let counts = self.rank3_counts();
        let max_class = counts.values().flat_map(|(_, m)| m.keys().copied()).max().unwrap_or(4).max(4);
        let mut table = Section::new("rank-3-by-order");
        table.push("columns", format!("order total {}", join((3..=max_class).map(|c| format!("{c}-step")))));
        for (order, (_, by_class)) in &counts {
            let total: usize = by_class.values().sum();
            let cells = join((3..=max_class).map(|c| by_class.get(&c).copied().unwrap_or(0)));
            table.push("row", format!("{order} {total} {cells}"));
        }
        let mut sections = vec![summary, groups, flagged, table];
        if !self.failures.is_empty() {
            let mut f = Section::new("failures");
            for (file, e) in &self.failures {
                f.push("failure", format!("{file} exit {}: {e}", e.exit_code()));
            }
            sections.push(f);
        }
        Document { sections }
    }
}

/// Group files (`*.group`) directly inside `dir`, sorted by name.
pub fn group_files(dir: &Path) -> Result<Vec<PathBuf>, WorkflowError> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| input(format!("{}: {e}", dir.display())))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_some_and(|x| x == "group"))
        .collect();
    files.sort();
    Ok(files)
}

/// Runs `analyze` on every group file in `dir` with `jobs` workers.
pub fn census(dir: &Path, opts: &Options, jobs: usize) -> Result<Census, WorkflowError> {
    let files = group_files(dir)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| WorkflowError::Inconsistency(e.to_string()))?;
    let results: Vec<(String, Result<CensusEntry, WorkflowError>)> = pool.install(|| {
        files
            .par_iter()
            .map(|path| {
                let file = path.file_name().unwrap().to_string_lossy().into_owned();
                let started = Instant::now();
                let outcome = std::fs::read_to_string(path)
                    .map_err(input)
                    .and_then(|text| analyze(&text, opts))
                    .map(|(a, _)| CensusEntry {
                        name: a.name.clone().unwrap_or_else(|| file.trim_end_matches(".group").to_string()),
                        file: file.clone(),
                        order: a.group.order(),
                        rank: a.decision.rank,
                        nilpotency_class: a.nilpotency_class,
                        has_property_ii: a.decision.has_property_ii,
                    });
                match &outcome {
                    Ok(_) => log::info!("{file}: analyzed in {} ms", started.elapsed().as_millis()),
                    Err(e) => log::warn!("{file}: {e}"),
                }
                (file, outcome)
            })
            .collect()
    });
    let mut entries = Vec::new();
    let mut failures = Vec::new();
    for (file, r) in results {
        match r {
            Ok(e) => entries.push(e),
            Err(e) => failures.push((file, e)),
        }
    }
    entries.sort_by(|a, b| {
        (a.order, a.has_property_ii, &a.name, &a.file).cmp(&(b.order, b.has_property_ii, &b.name, &b.file))
    });
    failures.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(Census { entries, failures })
}
