//! Resumable census sweeps over a group catalog, with a persistent
//! deduplicating store, verification of individual complexes, and report
//! rendering.
//!
//! A sweep walks cells `(n, d)`. Within a cell the catalog groups run in
//! decreasing order of group order (ties by catalog index), so each complex
//! is attributed to the largest group it is first discovered under. The
//! store directory holds three files:
//!
//! * `records.jsonl` — one record per line, append-only, in merge order;
//! * `sweep.json`    — per-task progress, including suspended search states;
//! * `index.json`    — canonical key to census symbol, a rebuildable cache.
//!
//! Tasks compute in parallel but merge strictly sequentially in task order
//! through a single writer. A task's records enter the store only once the
//! task finishes; a suspended task keeps its partial finds in `sweep.json`
//! and blocks the rest of its cell, so interrupting a sweep and resuming it
//! (with the same options) yields a byte-identical store.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::fs::{self, OpenOptions};
use std::io::Write as _;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::time::Duration;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bistellar::{links_are_spheres, reduce, ReduceVerdict, DEFAULT_BUDGET};
use crate::classify::{canonical_key, ManifoldRecord, OrbitRep, RecordStatus};
use crate::complex::{manifold_link_conditions, SimplicialComplex};
use crate::enumerate::{enumerate_vt, EnumerateOptions, SearchState};
use crate::groups::{
    self, family_index, resolve_group, Catalog, CatalogError, PermutationGroup,
};
use crate::homology::{
    integer_homology, link_sphere_homology_check, poincare_z2_check, HomologyProfile,
};
use crate::vertex_set::VertexSet;

#[derive(Debug, Error)]
pub enum CensusError {
    #[error("store io: {0}")]
    Io(#[from] std::io::Error),
    #[error("store parse: {0}")]
    Json(#[from] serde_json::Error),
    #[error("catalog: {0}")]
    Catalog(#[from] CatalogError),
    #[error("store corrupt: {0}")]
    Corrupt(String),
    #[error("{0}")]
    Other(String),
}

/// One unit of sweep work: one group acting in one cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TaskKey {
    pub n: u8,
    pub d: u8,
    /// Catalog index of the group within its degree.
    pub index: u32,
}

/// A record found by a still-unfinished task, parked in `sweep.json` until
/// the task completes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StashEntry {
    pub key: String,
    pub record: ManifoldRecord,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "state", rename_all = "snake_case")]
pub enum TaskState {
    /// Finished; `appended` lines were added to `records.jsonl` for it.
    Done { appended: u64 },
    /// Finished computing while an earlier task still held the writer; the
    /// records wait in the stash until the writer reaches this task.
    Computed { stash: Vec<StashEntry> },
    /// Ran out of budget; keeps the search checkpoint and the records found
    /// so far, none of which have been merged yet.
    Suspended {
        checkpoint: SearchState,
        stash: Vec<StashEntry>,
    },
    /// The group could not be built or enumerated.
    Failed { error: String },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct TaskRow {
    n: u8,
    d: u8,
    index: u32,
    /// Group order, kept so merge order is known without the catalog.
    order: u64,
    #[serde(flatten)]
    state: TaskState,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
struct SweepFile {
    tasks: Vec<TaskRow>,
    missing_degrees: Vec<u8>,
}

#[derive(Debug, Clone)]
pub struct SweepOptions {
    /// Wall-clock budget per task; `None` runs each task to completion.
    pub budget: Option<Duration>,
    /// Search-step budget per task. Deterministic, unlike `budget`.
    pub max_steps: Option<u64>,
    /// Seed for the bistellar verification of each record.
    pub seed: u64,
    /// Flip budget for each bistellar reduction.
    pub reduce_budget: u64,
    /// Worker threads for the compute phase; 0 uses the rayon default.
    pub threads: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            budget: None,
            max_steps: None,
            seed: 0,
            reduce_budget: DEFAULT_BUDGET,
            threads: 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportStyle {
    /// Per-cell record counts.
    Counts,
    /// One line per record, with generating orbits.
    Orbits,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SweepSummary {
    pub tasks_run: usize,
    pub records_added: usize,
    /// Every task in the requested ranges is done and no degree was missing
    /// from the catalog.
    pub complete: bool,
}

/// The persistent census: records, their symbols, and sweep progress.
#[derive(Debug)]
pub struct CensusStore {
    dir: PathBuf,
    records: Vec<ManifoldRecord>,
    /// Canonical key of each record's complex, mapped to its symbol.
    index: BTreeMap<String, String>,
    tasks: BTreeMap<TaskKey, (u64, TaskState)>,
    missing_degrees: BTreeSet<u8>,
    /// The key index did not match the records on disk and must be rebuilt
    /// (needs a catalog, so it waits for the next sweep).
    index_stale: bool,
}

impl CensusStore {
    /// Opens (or creates) a store directory, reconciling a partially
    /// written merge: record lines beyond what `sweep.json` accounts for
    /// are rolled back, and a lagging key index is marked for rebuild.
    pub fn open(dir: &Path) -> Result<CensusStore, CensusError> {
        fs::create_dir_all(dir)?;
        let mut tasks = BTreeMap::new();
        let mut missing_degrees = BTreeSet::new();
        let sweep_path = dir.join("sweep.json");
        if sweep_path.exists() {
            let sf: SweepFile = serde_json::from_str(&fs::read_to_string(&sweep_path)?)?;
            for row in sf.tasks {
                let key = TaskKey {
                    n: row.n,
                    d: row.d,
                    index: row.index,
                };
                tasks.insert(key, (row.order, row.state));
            }
            missing_degrees = sf.missing_degrees.into_iter().collect();
        }
        let expected: u64 = tasks
            .values()
            .filter_map(|(_, s)| match s {
                TaskState::Done { appended } => Some(*appended),
                _ => None,
            })
            .sum();

        let rec_path = dir.join("records.jsonl");
        let mut records = Vec::new();
        if rec_path.exists() {
            let text = fs::read_to_string(&rec_path)?;
            let mut lines: Vec<&str> = text.lines().collect();
            if (lines.len() as u64) < expected {
                return Err(CensusError::Corrupt(format!(
                    "records.jsonl has {} lines but sweep state accounts for {expected}",
                    lines.len()
                )));
            }
            if (lines.len() as u64) > expected {
                lines.truncate(expected as usize);
                let mut rolled = String::new();
                for l in &lines {
                    rolled.push_str(l);
                    rolled.push('\n');
                }
                fs::write(&rec_path, rolled)?;
            }
            for line in &lines {
                records.push(serde_json::from_str::<ManifoldRecord>(line)?);
            }
        } else if expected > 0 {
            return Err(CensusError::Corrupt(format!(
                "records.jsonl missing but sweep state accounts for {expected} records"
            )));
        }

        let idx_path = dir.join("index.json");
        let mut index = BTreeMap::new();
        let mut index_stale = !records.is_empty();
        if idx_path.exists() {
            let idx: BTreeMap<String, String> =
                serde_json::from_str(&fs::read_to_string(&idx_path)?)?;
            if idx.len() == records.len() {
                index = idx;
                index_stale = false;
            }
        }

        Ok(CensusStore {
            dir: dir.to_path_buf(),
            records,
            index,
            tasks,
            missing_degrees,
            index_stale,
        })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn records(&self) -> &[ManifoldRecord] {
        &self.records
    }

    pub fn tasks(&self) -> impl Iterator<Item = (&TaskKey, &TaskState)> {
        self.tasks.iter().map(|(k, (_, s))| (k, s))
    }

    pub fn missing_degrees(&self) -> &BTreeSet<u8> {
        &self.missing_degrees
    }

    /// True when any task is unfinished or a swept degree had no groups.
    pub fn is_partial(&self) -> bool {
        !self.missing_degrees.is_empty()
            || self
                .tasks
                .values()
                .any(|(_, s)| !matches!(s, TaskState::Done { .. }))
    }

    fn append_records(&self, fresh: &[ManifoldRecord]) -> Result<(), CensusError> {
        if fresh.is_empty() {
            return Ok(());
        }
        let mut buf = String::new();
        for r in fresh {
            buf.push_str(&serde_json::to_string(r)?);
            buf.push('\n');
        }
        let mut f = OpenOptions::new()
            .create(true)
            .append(true)
            .open(self.dir.join("records.jsonl"))?;
        f.write_all(buf.as_bytes())?;
        f.flush()?;
        Ok(())
    }

    fn save_sweep(&self) -> Result<(), CensusError> {
        let sf = SweepFile {
            tasks: self
                .tasks
                .iter()
                .map(|(k, (order, state))| TaskRow {
                    n: k.n,
                    d: k.d,
                    index: k.index,
                    order: *order,
                    state: state.clone(),
                })
                .collect(),
            missing_degrees: self.missing_degrees.iter().copied().collect(),
        };
        write_atomic(
            &self.dir.join("sweep.json"),
            &serde_json::to_string_pretty(&sf)?,
        )
    }

    fn save_index(&self) -> Result<(), CensusError> {
        write_atomic(
            &self.dir.join("index.json"),
            &serde_json::to_string_pretty(&self.index)?,
        )
    }

    fn rebuild_index(&mut self, catalog: &Catalog) -> Result<(), CensusError> {
        let mut index = BTreeMap::new();
        for r in &self.records {
            let g = record_group(r, catalog)?;
            let c = r
                .complex(&g)
                .map_err(|e| CensusError::Corrupt(format!("record {}: {e}", r.symbol)))?;
            index.insert(canonical_key(&c), r.symbol.clone());
        }
        self.index = index;
        self.index_stale = false;
        self.save_index()
    }

    /// Symbol for the next record of its `(d, n, group)` series.
    fn next_symbol(&self, r: &ManifoldRecord) -> String {
        let i = r.group_index.unwrap_or(0);
        let k = self
            .records
            .iter()
            .filter(|q| q.n == r.n && q.d == r.d && q.group_index.unwrap_or(0) == i)
            .count()
            + 1;
        format!("^{} {}^{}_{}", r.d, r.n, i, k)
    }

    /// Runs (or resumes) the census over `ns x ds`, writing through to the
    /// store directory as tasks finish. Re-running a finished sweep is a
    /// no-op. Resuming must use the same catalog and options as the
    /// original run for the store to come out byte-identical.
    pub fn sweep(
        &mut self,
        ns: RangeInclusive<u8>,
        ds: RangeInclusive<u8>,
        catalog: &Catalog,
        opts: &SweepOptions,
    ) -> Result<SweepSummary, CensusError> {
        if self.index_stale {
            self.rebuild_index(catalog)?;
        }
        let mut summary = SweepSummary {
            complete: true,
            ..SweepSummary::default()
        };

        // Cells and their tasks, in merge order.
        let mut cells: Vec<Vec<TaskKey>> = Vec::new();
        for n in ns {
            let mut entries: Vec<_> = catalog.entries_of_degree(n).collect();
            if entries.is_empty() {
                self.missing_degrees.insert(n);
                summary.complete = false;
                continue;
            }
            self.missing_degrees.remove(&n);
            entries.sort_by_key(|e| (Reverse(e.order), e.index));
            for d in ds.clone() {
                if d < 2 || n < d + 2 {
                    continue;
                }
                cells.push(
                    entries
                        .iter()
                        .map(|e| TaskKey { n, d, index: e.index })
                        .collect(),
                );
            }
        }

        // Compute phase: every task that still needs search time runs in
        // parallel; tasks already computed just wait for the writer.
        let jobs: Vec<(TaskKey, Option<SearchState>)> = cells
            .iter()
            .flatten()
            .filter_map(|t| match self.tasks.get(t) {
                Some((_, TaskState::Done { .. })) | Some((_, TaskState::Computed { .. })) => None,
                Some((_, TaskState::Suspended { checkpoint, .. })) => {
                    Some((*t, Some(checkpoint.clone())))
                }
                _ => Some((*t, None)),
            })
            .collect();
        summary.tasks_run = jobs.len();
        let run = || -> Vec<(TaskKey, TaskComputation)> {
            jobs.par_iter()
                .map(|(t, resume)| (*t, compute_task(*t, catalog, opts, resume.clone())))
                .collect()
        };
        let computed: BTreeMap<TaskKey, TaskComputation> = if opts.threads > 0 {
            rayon::ThreadPoolBuilder::new()
                .num_threads(opts.threads)
                .build()
                .map_err(|e| CensusError::Other(e.to_string()))?
                .install(run)
        } else {
            run()
        }
        .into_iter()
        .collect();

        // Merge phase: the writer walks tasks strictly in order and stops
        // advancing at the first one still unfinished, so `records.jsonl`
        // is always a prefix of the one uninterrupted order produces.
        // Completed tasks beyond that point park their finds as `Computed`.
        let mut writer_open = true;
        for t in cells.iter().flatten() {
            let prior = self.tasks.get(t).map(|(_, s)| s.clone());
            if matches!(prior, Some(TaskState::Done { .. })) {
                continue;
            }

            // This task's finds, in emission order, and whether the search
            // finished: parked results carry over; a resumed run appends
            // its new finds to the suspended stash, dropping re-emissions.
            let (mut entries, mut complete_now) = match &prior {
                Some(TaskState::Computed { stash }) => (stash.clone(), true),
                Some(TaskState::Suspended { stash, .. }) => (stash.clone(), false),
                _ => (Vec::new(), false),
            };
            let mut order = self.tasks.get(t).map(|(o, _)| *o).unwrap_or(0);
            let mut checkpoint = None;
            if let Some(comp) = computed.get(t) {
                order = comp.order;
                if let Some(error) = &comp.error {
                    // A broken entry is reported and skipped; it never has
                    // records, so it does not hold up the writer.
                    self.tasks
                        .insert(*t, (order, TaskState::Failed { error: error.clone() }));
                    self.save_sweep()?;
                    summary.complete = false;
                    continue;
                }
                for e in &comp.new_entries {
                    if !entries.iter().any(|p| p.key == e.key) {
                        entries.push(e.clone());
                    }
                }
                complete_now = comp.complete;
                checkpoint = comp.checkpoint.clone();
            }

            if !complete_now {
                let checkpoint = checkpoint.expect("suspended search carries a checkpoint");
                self.tasks.insert(
                    *t,
                    (
                        order,
                        TaskState::Suspended {
                            checkpoint,
                            stash: entries,
                        },
                    ),
                );
                self.save_sweep()?;
                summary.complete = false;
                writer_open = false;
                continue;
            }
            if !writer_open {
                self.tasks
                    .insert(*t, (order, TaskState::Computed { stash: entries }));
                self.save_sweep()?;
                summary.complete = false;
                continue;
            }

            let mut fresh: Vec<ManifoldRecord> = Vec::new();
            for e in entries {
                if self.index.contains_key(&e.key) {
                    continue;
                }
                let mut rec = e.record;
                rec.symbol = self.next_symbol(&rec);
                self.index.insert(e.key, rec.symbol.clone());
                self.records.push(rec.clone());
                fresh.push(rec);
            }
            self.append_records(&fresh)?;
            self.tasks.insert(
                *t,
                (
                    order,
                    TaskState::Done {
                        appended: fresh.len() as u64,
                    },
                ),
            );
            summary.records_added += fresh.len();
            self.save_sweep()?;
            self.save_index()?;
        }
        self.save_sweep()?;
        Ok(summary)
    }

    pub fn report(&self, style: ReportStyle) -> String {
        match style {
            ReportStyle::Counts => self.counts_report(),
            ReportStyle::Orbits => self.orbits_report(),
        }
    }

    /// Grid of records per `(n, d)` cell: spheres / non-spheres, with a
    /// third component counting unsettled records when there are any. `-`
    /// marks a swept cell with no records.
    fn counts_report(&self) -> String {
        let covered: BTreeSet<(u8, u8)> = self.tasks.keys().map(|k| (k.n, k.d)).collect();
        if covered.is_empty() && self.missing_degrees.is_empty() {
            return "census is empty\n".into();
        }
        let mut cells: BTreeMap<(u8, u8), (u64, u64, u64)> = BTreeMap::new();
        for r in &self.records {
            let c = cells.entry((r.n, r.d)).or_default();
            match record_verdict(r) {
                Verdict::Sphere => c.0 += 1,
                Verdict::NonSphere => c.1 += 1,
                Verdict::Unsettled => c.2 += 1,
            }
        }
        let ds: Vec<u8> = covered
            .iter()
            .map(|&(_, d)| d)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let ns: Vec<u8> = {
            let mut v: Vec<u8> = covered
                .iter()
                .map(|&(n, _)| n)
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
            v.reverse();
            v
        };
        let mut grid: Vec<Vec<String>> = Vec::new();
        let mut header = vec!["n \\ d".to_string()];
        header.extend(ds.iter().map(|d| d.to_string()));
        grid.push(header);
        for &n in &ns {
            let mut row = vec![n.to_string()];
            for &d in &ds {
                row.push(if !covered.contains(&(n, d)) {
                    String::new()
                } else {
                    match cells.get(&(n, d)) {
                        Some(&(s, x, 0)) => format!("{s}/{x}"),
                        Some(&(s, x, u)) => format!("{s}/{x}/{u}"),
                        None => "-".into(),
                    }
                });
            }
            grid.push(row);
        }
        let widths: Vec<usize> = (0..grid[0].len())
            .map(|j| grid.iter().map(|row| row[j].len()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for row in &grid {
            let line: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(cell, &w)| format!("{cell:>w$}"))
                .collect();
            out.push_str(line.join("  ").trim_end());
            out.push('\n');
        }
        out.push_str("cells: spheres/non-spheres[/unsettled]; - = swept, none found\n");
        for &n in &self.missing_degrees {
            let _ = writeln!(out, "warning: no catalog groups of degree {n}; skipped");
        }
        let unfinished = self
            .tasks
            .values()
            .filter(|(_, s)| !matches!(s, TaskState::Done { .. }))
            .count();
        if unfinished > 0 {
            let _ = writeln!(out, "warning: {unfinished} tasks unfinished; counts are partial");
        }
        out
    }

    /// One line per record: symbol, f-vector, group, generating orbits with
    /// their sizes, and what the record turned out to be.
    fn orbits_report(&self) -> String {
        if self.records.is_empty() {
            return "census is empty\n".into();
        }
        let mut out = String::new();
        for r in &self.records {
            let f: Vec<String> = r.f_vector.iter().skip(1).map(u64::to_string).collect();
            let reps: Vec<String> = r.orbit_reps.iter().map(format_rep).collect();
            let _ = writeln!(
                out,
                "{} | f = ({}) | {} | {} | {}",
                r.symbol,
                f.join(","),
                r.group,
                reps.join(" "),
                record_remark(r),
            );
        }
        out
    }
}

fn write_atomic(path: &Path, text: &str) -> Result<(), CensusError> {
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, text)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

fn record_group(r: &ManifoldRecord, catalog: &Catalog) -> Result<PermutationGroup, CensusError> {
    if let Some(i) = r.group_index {
        if let Ok(g) = catalog.group(r.n, i) {
            return Ok(g);
        }
    }
    resolve_group(&r.group, catalog)
        .map_err(|e| CensusError::Other(format!("group of record {}: {e}", r.symbol)))
}

struct TaskComputation {
    order: u64,
    new_entries: Vec<StashEntry>,
    complete: bool,
    checkpoint: Option<SearchState>,
    error: Option<String>,
}

fn compute_task(
    t: TaskKey,
    catalog: &Catalog,
    opts: &SweepOptions,
    resume: Option<SearchState>,
) -> TaskComputation {
    let fail = |order: u64, error: String| TaskComputation {
        order,
        new_entries: Vec::new(),
        complete: false,
        checkpoint: None,
        error: Some(error),
    };
    let order = match catalog.entry(t.n, t.index) {
        Ok(e) => e.order,
        Err(e) => return fail(0, e.to_string()),
    };
    let g = match catalog.group(t.n, t.index) {
        Ok(g) => g,
        Err(e) => return fail(order, e.to_string()),
    };
    let eopts = EnumerateOptions {
        budget: opts.budget,
        max_steps: opts.max_steps,
        resume,
        group_index: Some(t.index),
    };
    let out = match enumerate_vt(t.n, t.d, &g, &eopts) {
        Ok(o) => o,
        Err(e) => return fail(order, e.to_string()),
    };
    let mut new_entries = Vec::new();
    for mut rec in out.records {
        let c = match rec.complex(&g) {
            Ok(c) => c,
            Err(e) => return fail(order, e.to_string()),
        };
        if !finalize_record(&mut rec, &c, opts.seed, opts.reduce_budget) {
            continue;
        }
        let key = canonical_key(&c);
        new_entries.push(StashEntry { key, record: rec });
    }
    TaskComputation {
        order,
        new_entries,
        complete: out.complete,
        checkpoint: out.checkpoint,
        error: None,
    }
}

/// Fills in verification results on a freshly enumerated record, or
/// returns `false` to drop it: a complex whose homology refutes being a
/// closed manifold is not census material, however many cheap screens it
/// slipped through.
///
/// The complex is vertex-transitive, so checking links through one vertex
/// covers every vertex orbit. For `d <= 3` the link conditions alone settle
/// being a closed manifold; above that, reducing the vertex link certifies
/// it. Sphere status additionally needs the complex itself to reduce to a
/// simplex boundary; homology that disagrees with a sphere's settles the
/// question the other way, and anything in between stays unsettled.
fn finalize_record(rec: &mut ManifoldRecord, c: &SimplicialComplex, seed: u64, budget: u64) -> bool {
    rec.seed = Some(seed);
    let d = c.dim();
    if refuted_by_homology(c) {
        return false;
    }
    let h = integer_homology(c);
    let verified = match d {
        0 | 1 => true,
        2 | 3 => manifold_link_conditions(c, false).is_ok(),
        _ => matches!(
            links_are_spheres(c, seed, budget),
            ReduceVerdict::BoundaryOfSimplex
        ),
    };
    if rec.status != RecordStatus::Sphere {
        rec.status = if !verified {
            RecordStatus::Candidate
        } else if is_sphere_homology(&h, d)
            && matches!(reduce(c, seed, budget).verdict, ReduceVerdict::BoundaryOfSimplex)
        {
            RecordStatus::Sphere
        } else if let Some(name) = recognize_type(c, &h) {
            RecordStatus::Typed(name)
        } else {
            RecordStatus::VerifiedManifold
        };
    }
    rec.homology = Some(h);
    true
}

/// Decisive homology tests that a closed manifold cannot fail: palindromic
/// mod-2 Betti numbers and a homology-sphere vertex link (one vertex
/// suffices under a transitive action). Run before the bistellar work —
/// no point burning a reduction budget on a refutable complex. Dimensions
/// up to 3 are skipped: there the link conditions already decide.
fn refuted_by_homology(c: &SimplicialComplex) -> bool {
    c.dim() >= 4 && (!poincare_z2_check(c) || !link_sphere_homology_check(c))
}

fn is_sphere_homology(h: &HomologyProfile, d: u8) -> bool {
    let d = d as usize;
    h.betti.len() == d + 1
        && h.torsion.iter().all(|t| t.is_empty())
        && h.betti
            .iter()
            .enumerate()
            .all(|(k, &b)| b == u64::from(k == 0 || k == d))
}

/// Names the topological type when homology and orientability pin a
/// familiar closed manifold. Spheres are certified by reduction, never
/// here, and unnamed does not mean unknown — just unnamed.
fn recognize_type(c: &SimplicialComplex, h: &HomologyProfile) -> Option<String> {
    let d = c.dim();
    let orient = c.is_orientable();
    let b = &h.betti;
    let no_torsion = h.torsion.iter().all(|t| t.is_empty());
    let torsion_only_at = |k: usize, want: &[&str]| {
        h.torsion
            .iter()
            .enumerate()
            .all(|(j, t)| if j == k { t == want } else { t.is_empty() })
    };
    if d == 2 {
        let chi = c.euler_characteristic();
        return match (orient, chi) {
            (true, 2) => None,
            (true, 0) => Some("T^2".into()),
            (true, _) => Some(format!("orientable surface, genus {}", (2 - chi) / 2)),
            (false, 1) => Some("RP^2".into()),
            (false, 0) => Some("Klein bottle".into()),
            (false, _) => Some(format!("non-orientable surface, genus {}", 2 - chi)),
        };
    }
    if d < 3 {
        return None;
    }
    let du = d as usize;
    // Sphere bundles over the circle: Z in degrees 0, 1, d-1, d when the
    // total space is orientable; the twisted ones trade the two top free
    // classes for 2-torsion in degree d-1.
    let product_betti = (0..=du)
        .all(|k| b[k] == u64::from(k == 0 || k == 1 || k == du - 1 || k == du));
    if orient && no_torsion && product_betti {
        return Some(format!("S^{} x S^1", du - 1));
    }
    let twisted_betti = (0..=du).all(|k| b[k] == u64::from(k <= 1));
    if !orient && twisted_betti && torsion_only_at(du - 1, &["2"]) {
        return Some(format!("S^{} ~ S^1", du - 1));
    }
    match d {
        3 => {
            if orient && b[1] == 0 && b[2] == 0 {
                let t1 = h.torsion[1].iter().map(String::as_str).collect::<Vec<_>>();
                return match t1.as_slice() {
                    ["2"] if torsion_only_at(1, &["2"]) => Some("RP^3".into()),
                    ["3"] if torsion_only_at(1, &["3"]) => Some("L(3,1)".into()),
                    ["2", "2"] if torsion_only_at(1, &["2", "2"]) => Some("S^3/Q8".into()),
                    _ => None,
                };
            }
            if orient && no_torsion && b[1] == 2 && b[2] == 2 {
                return Some("(S^2 x S^1)#(S^2 x S^1)".into());
            }
            if orient && no_torsion && b[1] == 3 && b[2] == 3 {
                return Some("T^3".into());
            }
            None
        }
        4 if orient && no_torsion => match (b[1], b[2], b[3]) {
            (0, 1, 0) => Some("CP^2".into()),
            (0, 2, 0) => Some("S^2 x S^2".into()),
            _ => None,
        },
        5 if orient && b == &[1, 0, 0, 0, 0, 1] && torsion_only_at(2, &["2"]) => {
            Some("SU(3)/SO(3)".into())
        }
        6 if orient && no_torsion && b == &[1, 0, 0, 2, 0, 0, 1] => Some("S^3 x S^3".into()),
        _ => None,
    }
}

/// How a record lands in the counts report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Sphere,
    NonSphere,
    Unsettled,
}

pub fn record_verdict(r: &ManifoldRecord) -> Verdict {
    match &r.status {
        RecordStatus::Sphere => Verdict::Sphere,
        RecordStatus::Typed(_) => Verdict::NonSphere,
        RecordStatus::VerifiedManifold => match &r.homology {
            Some(h) if !is_sphere_homology(h, r.d) => Verdict::NonSphere,
            _ => Verdict::Unsettled,
        },
        RecordStatus::Candidate => Verdict::Unsettled,
    }
}

fn record_remark(r: &ManifoldRecord) -> String {
    match &r.status {
        RecordStatus::Sphere => {
            if r.n == r.d + 2 {
                format!("S^{} (simplex boundary)", r.d)
            } else {
                format!("S^{}", r.d)
            }
        }
        RecordStatus::Typed(name) => name.clone(),
        RecordStatus::VerifiedManifold => match &r.homology {
            Some(h) => format!("manifold, H = {}", h.tuple_notation()),
            None => "manifold".into(),
        },
        RecordStatus::Candidate => "unsettled".into(),
    }
}

fn format_rep(o: &OrbitRep) -> String {
    let verts: Vec<String> = o.rep.iter().map(u8::to_string).collect();
    let joined = if o.rep.iter().all(|&v| v <= 9) {
        verts.concat()
    } else {
        verts.join(",")
    };
    format!("{}_{}", joined, o.size)
}

/// A catalog holding only the cyclic and dihedral actions of the given
/// degrees, carrying their classification indices. Lets sweeps reach
/// degrees the embedded catalog does not cover.
pub fn cyclic_dihedral_catalog(degrees: &[u8]) -> Result<Catalog, CensusError> {
    let mut entries = Vec::new();
    let bad = |e: groups::GroupError| CensusError::Other(e.to_string());
    for &n in degrees {
        let c = groups::cyclic(n).map_err(bad)?;
        entries.push(crate::groups::CatalogEntry {
            degree: n,
            index: family_index(&c).unwrap_or(1),
            name: format!("C{n}"),
            order: n as u64,
            generators: vec![groups::standard_cycle(n).to_cycles()],
        });
        if n >= 3 {
            let dg = groups::dihedral(n).map_err(bad)?;
            entries.push(crate::groups::CatalogEntry {
                degree: n,
                index: family_index(&dg).unwrap_or(0),
                name: format!("D{n}"),
                order: 2 * n as u64,
                generators: vec![
                    groups::standard_cycle(n).to_cycles(),
                    groups::standard_reflection(n).to_cycles(),
                ],
            });
        }
    }
    Ok(Catalog::from_json(&serde_json::to_string(&entries)?)?)
}

/// Structured result of checking one complex from the outside: no
/// transitivity is assumed, so every vertex link gets looked at.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub d: u8,
    pub f_vector: Vec<u64>,
    pub verdict: VerifyVerdict,
}

#[derive(Debug, Clone)]
pub enum VerifyVerdict {
    NotPseudomanifold {
        ridge: Vec<u8>,
        facet_count: usize,
    },
    LinkDefect(String),
    /// Homology rules the complex out: closed manifolds have palindromic
    /// mod-2 Betti numbers and homology-sphere vertex links.
    NotManifold {
        reason: String,
    },
    /// Some vertex link would not reduce to a simplex boundary; being a
    /// manifold is neither confirmed nor refuted.
    Unverified {
        vertex: u8,
    },
    Manifold(ManifoldSummary),
}

#[derive(Debug, Clone)]
pub struct ManifoldSummary {
    pub euler: i64,
    pub orientable: bool,
    pub homology: HomologyProfile,
    /// The complex itself reduced to a simplex boundary.
    pub sphere: bool,
    pub type_name: Option<String>,
}

pub fn verify(m: &SimplicialComplex, seed: u64, budget: u64) -> VerifyReport {
    let report = |verdict| VerifyReport {
        d: m.dim(),
        f_vector: m.f_vector(),
        verdict,
    };
    if let Some((ridge, count)) = m.pseudomanifold_violation() {
        return report(VerifyVerdict::NotPseudomanifold {
            ridge: ridge.vertices(),
            facet_count: count,
        });
    }
    if let Err(defect) = manifold_link_conditions(m, true) {
        return report(VerifyVerdict::LinkDefect(defect.to_string()));
    }
    let d = m.dim();
    if d >= 4 {
        for v in m.support().vertices() {
            let link = m.link(VertexSet::singleton(v)).expect("vertex of a pseudomanifold");
            if !matches!(
                reduce(&link, seed, budget).verdict,
                ReduceVerdict::BoundaryOfSimplex
            ) {
                // The reduction came up empty-handed; see whether homology
                // can refute instead of leaving the question open.
                if !is_sphere_homology(&integer_homology(&link), d - 1) {
                    return report(VerifyVerdict::NotManifold {
                        reason: format!("the link of vertex {v} is not a homology sphere"),
                    });
                }
                if !poincare_z2_check(m) {
                    return report(VerifyVerdict::NotManifold {
                        reason: "mod-2 Betti numbers are not palindromic".into(),
                    });
                }
                return report(VerifyVerdict::Unverified { vertex: v });
            }
        }
    }
    let h = integer_homology(m);
    let sphere = is_sphere_homology(&h, d)
        && matches!(reduce(m, seed, budget).verdict, ReduceVerdict::BoundaryOfSimplex);
    let type_name = if sphere {
        Some(format!("S^{d}"))
    } else {
        recognize_type(m, &h)
    };
    report(VerifyVerdict::Manifold(ManifoldSummary {
        euler: m.euler_characteristic(),
        orientable: m.is_orientable(),
        homology: h,
        sphere,
        type_name,
    }))
}

impl std::fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let fv: Vec<String> = self.f_vector.iter().map(u64::to_string).collect();
        writeln!(f, "f-vector: ({})", fv.join(","))?;
        match &self.verdict {
            VerifyVerdict::NotPseudomanifold { ridge, facet_count } => {
                let rv: Vec<String> = ridge.iter().map(u8::to_string).collect();
                write!(
                    f,
                    "not a pseudomanifold: ridge {{{}}} lies in {} facets",
                    rv.join(","),
                    facet_count
                )
            }
            VerifyVerdict::LinkDefect(s) => write!(f, "link conditions failed: {s}"),
            VerifyVerdict::NotManifold { reason } => {
                write!(f, "not a closed manifold: {reason}")
            }
            VerifyVerdict::Unverified { vertex } => write!(
                f,
                "pseudomanifold; link of vertex {vertex} was not recognized as a sphere \
                 (inconclusive)"
            ),
            VerifyVerdict::Manifold(ms) => {
                writeln!(
                    f,
                    "{}-manifold, chi = {}, {}",
                    self.d,
                    ms.euler,
                    if ms.orientable {
                        "orientable"
                    } else {
                        "non-orientable"
                    }
                )?;
                writeln!(f, "homology: {}", ms.homology.tuple_notation())?;
                match (&ms.type_name, ms.sphere) {
                    (Some(t), true) => write!(f, "type: {t} (reduced to the simplex boundary)"),
                    (Some(t), false) => write!(f, "type: {t}"),
                    (None, _) => write!(f, "type: undetermined"),
                }
            }
        }
    }
}
