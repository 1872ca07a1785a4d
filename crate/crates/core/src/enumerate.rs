//! Backtracking over the orbit-incidence matrix, with integrated filtering
//! and deduplication of the emitted candidates.
//!
//! The search keeps a sum vector over ridge-orbit columns and a pointer into
//! the row list. Rows are added in index order; a combination whose sum has
//! entries 0 and 2 only is emitted and its branch closed (extending it could
//! only produce complexes that are not strongly connected). Block jumps and
//! an early-abandonment rule prune rows that can no longer contribute.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classify::{
    as_determinant, isomorphism_with_seeds, multiplication_isomorphic, ManifoldRecord,
    OrbitRep, RecordStatus,
};
use crate::complex::{manifold_link_conditions, SimplicialComplex};
use crate::groups::{family_index, standard_cycle, PermutationGroup, DEFAULT_ELEMENT_CAP};
use crate::orbits::{build_incidence, OrbitIncidence};
use crate::vertex_set::{k_subsets, VertexSet};

#[derive(Debug, Error)]
pub enum EnumerateError {
    #[error("dimension {d} out of range for {n} vertices (need 2 <= d <= n-2)")]
    BadDimensions { n: u8, d: u8 },
    #[error("group degree {found} does not match n = {expected}")]
    DegreeMismatch { expected: u8, found: u8 },
    #[error("group {0} is not transitive")]
    NotTransitive(String),
}

/// Resumable search position: the chosen row stack plus the pointer
/// (`None` = END). The sum vector is recomputed on resume.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchState {
    pub chosen: Vec<usize>,
    pub pointer: Option<usize>,
}

/// What happened to the pointer after a state change.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceAction {
    /// Plain move to a row.
    PointerTo(usize),
    /// Skipped one or more blocks whose leading column was already full.
    BlockJump { col: usize, to: usize },
    /// Closed sum: candidate emitted, branch closed.
    Candidate,
    /// An entry exceeded 2.
    Invalid,
    /// A column holds a 1 that no remaining row can reach.
    Abandon,
    /// Ran off the end of the row list.
    PointerEnd,
}

/// One line of the search trace: the combination after the change, the sum
/// vector, and the action taken.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceLine {
    pub chosen: Vec<usize>,
    pub sum: Vec<u32>,
    pub action: TraceAction,
}

fn row_name(r: usize) -> String {
    if r < 26 {
        ((b'a' + r as u8) as char).to_string()
    } else {
        format!("r{}", r + 1)
    }
}

impl TraceLine {
    pub fn render(&self) -> String {
        let label = if self.chosen.is_empty() {
            "-".to_string()
        } else {
            self.chosen
                .iter()
                .map(|&r| row_name(r))
                .collect::<Vec<_>>()
                .join("+")
        };
        let sums = self
            .sum
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        let action = match &self.action {
            TraceAction::PointerTo(r) => format!("Set pointer to {}.", row_name(*r)),
            TraceAction::BlockJump { col: 0, to } => {
                format!("First entry is 2: set pointer to {}.", row_name(*to))
            }
            TraceAction::BlockJump { col, to } => {
                format!("Entry {} is 2: set pointer to {}.", col + 1, row_name(*to))
            }
            TraceAction::Candidate => "Candidate! Set pointer to END.".into(),
            TraceAction::Invalid => "Invalid combination! Set pointer to END.".into(),
            TraceAction::Abandon => {
                "Cannot complete a closed vector: set pointer to END.".into()
            }
            TraceAction::PointerEnd => "Set pointer to END.".into(),
        };
        format!("{label}: ( {sums} ) {action}")
    }
}

/// A closed combination: chosen rows and the assembled complex.
#[derive(Debug, Clone)]
pub struct CandidateEmission {
    pub rows: Vec<usize>,
    pub complex: SimplicialComplex,
}

/// Stopping conditions for one search run.
#[derive(Debug, Clone, Copy, Default)]
pub struct SearchLimits {
    pub deadline: Option<Instant>,
    pub max_steps: Option<u64>,
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub emissions: u64,
    /// Present when a limit fired; feed back in to continue.
    pub suspended: Option<SearchState>,
}

/// Moves the pointer to `next`, applying block jumps (the block's leading
/// column already sums to 2) and the abandonment rule (a 1 sits strictly
/// left of everything the remaining rows can touch).
fn advance(inc: &OrbitIncidence, sum: &[u32], mut next: usize) -> (Option<usize>, TraceAction) {
    let nrows = inc.n_rows();
    let mut last_jump: Option<usize> = None;
    while next < nrows {
        let block = inc.block_of_row(next);
        if sum[block.first_col] == 2 {
            last_jump = Some(block.first_col);
            next = block.rows.end;
        } else {
            break;
        }
    }
    if next >= nrows {
        return (None, TraceAction::PointerEnd);
    }
    let lead = inc.leading_col(next);
    if sum[..lead].iter().any(|&x| x == 1) {
        return (None, TraceAction::Abandon);
    }
    match last_jump {
        Some(col) => (Some(next), TraceAction::BlockJump { col, to: next }),
        None => (Some(next), TraceAction::PointerTo(next)),
    }
}

fn assemble(inc: &OrbitIncidence, rows: &[usize]) -> SimplicialComplex {
    let mut facets = Vec::new();
    let mut n = 0u8;
    for &r in rows {
        for m in &inc.facet_orbits[r].members {
            n = n.max(m.max_vertex().expect("nonempty facet"));
            facets.push(*m);
        }
    }
    SimplicialComplex::new(n, facets).expect("orbit members form a pure complex")
}

/// Full search over the incidence matrix; see [`backtrack_resumable`].
pub fn backtrack(
    inc: &OrbitIncidence,
    emit: &mut dyn FnMut(CandidateEmission),
) -> u64 {
    backtrack_resumable(inc, None, &SearchLimits::default(), emit, &mut |_| {}).emissions
}

/// The search loop. Emits every nonempty row combination whose sum vector is
/// closed and has no closed proper prefix, in depth-first order. `resume`
/// continues a suspended run; `limits` can suspend it again.
pub fn backtrack_resumable(
    inc: &OrbitIncidence,
    resume: Option<&SearchState>,
    limits: &SearchLimits,
    emit: &mut dyn FnMut(CandidateEmission),
    trace: &mut dyn FnMut(&TraceLine),
) -> SearchOutcome {
    let ncols = inc.n_cols();
    let mut sum = vec![0u32; ncols];
    let mut ones = 0usize; // columns currently holding a 1
    let mut over = 0usize; // columns currently above 2
    let mut chosen: Vec<usize> = Vec::new();
    let mut pointer: Option<usize>;

    macro_rules! apply_row {
        ($r:expr, $sign:literal) => {
            for &(c, t) in inc.row($r) {
                let old = sum[c];
                let new = if $sign > 0 { old + t } else { old - t };
                sum[c] = new;
                if old == 1 {
                    ones -= 1;
                }
                if new == 1 {
                    ones += 1;
                }
                if old > 2 && new <= 2 {
                    over -= 1;
                }
                if new > 2 && old <= 2 {
                    over += 1;
                }
            }
        };
    }

    match resume {
        Some(st) => {
            for &r in &st.chosen {
                apply_row!(r, 1);
            }
            chosen = st.chosen.clone();
            pointer = st.pointer;
        }
        None => {
            let (p, act) = advance(inc, &sum, 0);
            pointer = p;
            trace(&TraceLine {
                chosen: Vec::new(),
                sum: sum.clone(),
                action: act,
            });
        }
    }

    let mut emissions = 0u64;
    let mut steps = 0u64;
    loop {
        if let Some(cap) = limits.max_steps {
            if steps >= cap {
                return SearchOutcome {
                    emissions,
                    suspended: Some(SearchState { chosen, pointer }),
                };
            }
        }
        if steps & 0xFFF == 0xFFF {
            if let Some(dl) = limits.deadline {
                if Instant::now() >= dl {
                    return SearchOutcome {
                        emissions,
                        suspended: Some(SearchState { chosen, pointer }),
                    };
                }
            }
        }
        steps += 1;
        match pointer {
            None => {
                let Some(r) = chosen.pop() else { break };
                apply_row!(r, -1);
                let (p, act) = advance(inc, &sum, r + 1);
                pointer = p;
                trace(&TraceLine {
                    chosen: chosen.clone(),
                    sum: sum.clone(),
                    action: act,
                });
            }
            Some(ptr) => {
                apply_row!(ptr, 1);
                chosen.push(ptr);
                let action;
                if over > 0 {
                    action = TraceAction::Invalid;
                    pointer = None;
                } else if ones == 0 {
                    emissions += 1;
                    emit(CandidateEmission {
                        rows: chosen.clone(),
                        complex: assemble(inc, &chosen),
                    });
                    action = TraceAction::Candidate;
                    pointer = None;
                } else {
                    let (p, act) = advance(inc, &sum, ptr + 1);
                    pointer = p;
                    action = act;
                }
                trace(&TraceLine {
                    chosen: chosen.clone(),
                    sum: sum.clone(),
                    action,
                });
            }
        }
    }
    SearchOutcome {
        emissions,
        suspended: None,
    }
}

#[derive(Debug, Clone, Default)]
pub struct EnumerateOptions {
    pub budget: Option<Duration>,
    pub max_steps: Option<u64>,
    pub resume: Option<SearchState>,
    /// Classification index of the group, when the caller knows it.
    pub group_index: Option<u32>,
}

#[derive(Debug, Clone)]
pub struct EnumerateOutcome {
    pub records: Vec<ManifoldRecord>,
    /// Raw candidate emissions, before filtering and deduplication.
    pub emissions: u64,
    pub complete: bool,
    pub checkpoint: Option<SearchState>,
}

/// Searches for `d`-dimensional candidates on `n` vertices invariant under
/// `g`, filters them through the link conditions, and deduplicates up to
/// isomorphism. Symmetric and alternating actions short-circuit: the only
/// invariant pseudomanifold is the boundary of the simplex, present exactly
/// when `n = d + 2`.
pub fn enumerate_vt(
    n: u8,
    d: u8,
    g: &PermutationGroup,
    opts: &EnumerateOptions,
) -> Result<EnumerateOutcome, EnumerateError> {
    if g.degree() != n {
        return Err(EnumerateError::DegreeMismatch {
            expected: n,
            found: g.degree(),
        });
    }
    if d < 2 || n < d + 2 {
        return Err(EnumerateError::BadDimensions { n, d });
    }
    if !g.is_transitive() {
        return Err(EnumerateError::NotTransitive(g.name().to_string()));
    }
    if g.is_natural_symmetric() || g.is_natural_alternating() {
        let mut records = Vec::new();
        if n == d + 2 {
            let complex =
                SimplicialComplex::new(n, k_subsets(n, d as usize + 1).collect())
                    .expect("boundary of the simplex");
            let rep: Vec<u8> = (1..=d + 1).collect();
            records.push(make_record(
                n,
                d,
                g,
                opts.group_index,
                vec![OrbitRep {
                    rep,
                    size: n as u64,
                }],
                &complex,
            ));
        }
        let emissions = records.len() as u64;
        return Ok(EnumerateOutcome {
            records,
            emissions,
            complete: true,
            checkpoint: None,
        });
    }
    enumerate_via_search(n, d, g, opts)
}

/// The generic path: build the incidence matrix and run the backtracking
/// search. Also used to cross-check the symmetric/alternating shortcut.
pub(crate) fn enumerate_via_search(
    n: u8,
    d: u8,
    g: &PermutationGroup,
    opts: &EnumerateOptions,
) -> Result<EnumerateOutcome, EnumerateError> {
    let inc = build_incidence(g, d);
    let has_standard_cycle = g
        .generators()
        .iter()
        .any(|p| *p == standard_cycle(n));
    let limits = SearchLimits {
        deadline: opts.budget.map(|b| Instant::now() + b),
        max_steps: opts.max_steps,
    };

    struct Kept {
        record: ManifoldRecord,
        complex: SimplicialComplex,
        seeds: Vec<VertexSet>,
    }
    let mut kept: Vec<Kept> = Vec::new();
    let mut emit = |e: CandidateEmission| {
        debug_assert!(e.complex.is_pseudomanifold());
        debug_assert_eq!(e.complex.n(), n, "transitive orbits span all labels");
        if manifold_link_conditions(&e.complex, false).is_err() {
            return;
        }
        let duplicate = kept.iter().any(|k| {
            if has_standard_cycle
                && multiplication_isomorphic(&e.complex, &k.complex, n).is_some()
            {
                return true;
            }
            isomorphism_with_seeds(&e.complex, &k.complex, &k.seeds).is_some()
        });
        if duplicate {
            return;
        }
        let reps = e
            .rows
            .iter()
            .map(|&r| OrbitRep {
                rep: inc.facet_orbits[r].rep.vertices(),
                size: inc.facet_orbits[r].size(),
            })
            .collect();
        let record = make_record(n, d, g, opts.group_index, reps, &e.complex);
        let seeds = e
            .rows
            .iter()
            .map(|&r| inc.facet_orbits[r].rep)
            .collect();
        kept.push(Kept {
            record,
            complex: e.complex,
            seeds,
        });
    };
    let outcome = backtrack_resumable(
        &inc,
        opts.resume.as_ref(),
        &limits,
        &mut emit,
        &mut |_| {},
    );
    let records = kept.into_iter().map(|k| k.record).collect();
    Ok(EnumerateOutcome {
        records,
        emissions: outcome.emissions,
        complete: outcome.suspended.is_none(),
        checkpoint: outcome.suspended,
    })
}

fn make_record(
    n: u8,
    d: u8,
    g: &PermutationGroup,
    group_index: Option<u32>,
    orbit_reps: Vec<OrbitRep>,
    complex: &SimplicialComplex,
) -> ManifoldRecord {
    let order = g
        .declared_order()
        .or_else(|| g.order(DEFAULT_ELEMENT_CAP).ok())
        .unwrap_or(0);
    ManifoldRecord {
        symbol: String::new(),
        n,
        d,
        group: g.name().to_string(),
        group_order: order.try_into().unwrap_or(u64::MAX),
        group_index: group_index.or_else(|| family_index(g)),
        orbit_reps,
        f_vector: complex.f_vector(),
        as_det: as_determinant(complex).to_string(),
        status: if n == d + 2 {
            RecordStatus::Sphere
        } else {
            RecordStatus::Candidate
        },
        homology: None,
        seed: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::are_isomorphic;
    use crate::complex::fixtures::torus_7;
    use crate::groups::{
        affine_frobenius, alternating, cyclic, dihedral, symmetric,
    };
    use rand::prelude::*;
    use rand::rngs::StdRng;

    fn run_traced(inc: &OrbitIncidence) -> (Vec<String>, Vec<Vec<usize>>) {
        let mut lines = Vec::new();
        let mut rows = Vec::new();
        backtrack_resumable(
            inc,
            None,
            &SearchLimits::default(),
            &mut |e| rows.push(e.rows),
            &mut |l| lines.push(l.render()),
        );
        (lines, rows)
    }

    #[test]
    fn walkthrough_trace_is_exact() {
        let g = dihedral(7).unwrap();
        let inc = build_incidence(&g, 3);
        let (lines, rows) = run_traced(&inc);
        let expected = [
            "-: ( 0 0 0 0 ) Set pointer to a.",
            "a: ( 2 1 0 0 ) First entry is 2: set pointer to c.",
            "a+c: ( 2 2 2 0 ) Candidate! Set pointer to END.",
            "a: ( 2 1 0 0 ) Set pointer to d.",
            "a+d: ( 2 2 0 2 ) Candidate! Set pointer to END.",
            "a: ( 2 1 0 0 ) Set pointer to END.",
            "-: ( 0 0 0 0 ) Set pointer to b.",
            "b: ( 2 1 2 2 ) Set pointer to c.",
            "b+c: ( 2 2 4 2 ) Invalid combination! Set pointer to END.",
            "b: ( 2 1 2 2 ) Set pointer to d.",
            "b+d: ( 2 2 2 4 ) Invalid combination! Set pointer to END.",
            "b: ( 2 1 2 2 ) Set pointer to END.",
            "-: ( 0 0 0 0 ) Set pointer to c.",
            "c: ( 0 1 2 0 ) Set pointer to d.",
            "c+d: ( 0 2 2 2 ) Candidate! Set pointer to END.",
            "c: ( 0 1 2 0 ) Set pointer to END.",
            "-: ( 0 0 0 0 ) Set pointer to d.",
            "d: ( 0 1 0 2 ) Set pointer to END.",
            "-: ( 0 0 0 0 ) Set pointer to END.",
        ];
        assert_eq!(lines, expected);
        assert_eq!(rows, vec![vec![0, 2], vec![0, 3], vec![2, 3]]);
    }

    #[test]
    fn single_closed_row() {
        let inc = OrbitIncidence::from_dense_rows(vec![vec![2, 2]]);
        let (lines, rows) = run_traced(&inc);
        assert_eq!(rows, vec![vec![0]]);
        assert_eq!(
            lines,
            [
                "-: ( 0 0 ) Set pointer to a.",
                "a: ( 2 2 ) Candidate! Set pointer to END.",
                "-: ( 0 0 ) Set pointer to END.",
            ]
        );
    }

    #[test]
    fn abandonment_fires() {
        // Adding row a strands a 1 in the first column; the only remaining
        // row starts further right, so the branch is abandoned.
        let inc =
            OrbitIncidence::from_dense_rows(vec![vec![1, 2, 0], vec![0, 0, 2]]);
        let (lines, rows) = run_traced(&inc);
        assert_eq!(rows, vec![vec![1]]);
        assert_eq!(
            lines,
            [
                "-: ( 0 0 0 ) Set pointer to a.",
                "a: ( 1 2 0 ) Cannot complete a closed vector: set pointer to END.",
                "-: ( 0 0 0 ) Set pointer to b.",
                "b: ( 0 0 2 ) Candidate! Set pointer to END.",
                "-: ( 0 0 0 ) Set pointer to END.",
            ]
        );
    }

    fn brute_force(dense: &[Vec<u32>]) -> Vec<Vec<usize>> {
        let nrows = dense.len();
        let ncols = if nrows == 0 { 0 } else { dense[0].len() };
        let closed =
            |s: &[u32]| s.iter().all(|&x| x == 0 || x == 2);
        let mut out = Vec::new();
        for mask in 1u32..1 << nrows {
            let rows: Vec<usize> =
                (0..nrows).filter(|r| mask >> r & 1 == 1).collect();
            let mut sum = vec![0u32; ncols];
            for &r in &rows {
                for c in 0..ncols {
                    sum[c] += dense[r][c];
                }
            }
            if !closed(&sum) {
                continue;
            }
            let mut psum = vec![0u32; ncols];
            let mut closed_prefix = false;
            for &r in rows.iter().take(rows.len() - 1) {
                for c in 0..ncols {
                    psum[c] += dense[r][c];
                }
                if closed(&psum) {
                    closed_prefix = true;
                    break;
                }
            }
            if !closed_prefix {
                out.push(rows);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn oracle_equivalence_on_random_matrices() {
        let mut rng = StdRng::seed_from_u64(2024);
        for case in 0..210 {
            let nrows = if case < 200 {
                rng.random_range(1..=10)
            } else {
                rng.random_range(11..=14)
            };
            let ncols = rng.random_range(1..=8);
            let dense: Vec<Vec<u32>> = (0..nrows)
                .map(|_| loop {
                    let row: Vec<u32> = (0..ncols)
                        .map(|_| match rng.random_range(0..4) {
                            0 | 1 => 0,
                            2 => 1,
                            _ => 2,
                        })
                        .collect();
                    if row.iter().any(|&x| x > 0) {
                        break row;
                    }
                })
                .collect();
            let inc = OrbitIncidence::from_dense_rows(dense);
            let sorted = inc.dense();
            let mut got = Vec::new();
            backtrack(&inc, &mut |e| got.push(e.rows));
            assert_eq!(got, brute_force(&sorted), "case {case}: {sorted:?}");
        }
    }

    #[test]
    fn deterministic_across_runs() {
        let g = dihedral(9).unwrap();
        let inc = build_incidence(&g, 4);
        let (l1, r1) = run_traced(&inc);
        let (l2, r2) = run_traced(&inc);
        assert_eq!(l1, l2);
        assert_eq!(r1, r2);
    }

    #[test]
    fn suspension_and_resume_reproduce_the_full_run() {
        let g = dihedral(9).unwrap();
        let inc = build_incidence(&g, 4);
        let mut full = Vec::new();
        backtrack(&inc, &mut |e| full.push(e.rows));
        assert!(!full.is_empty(), "want a nontrivial search for this test");
        for step_cap in [1u64, 2, 3, 5, 7, 11, 50] {
            let mut got = Vec::new();
            let mut resume: Option<SearchState> = None;
            let mut rounds = 0;
            loop {
                let out = backtrack_resumable(
                    &inc,
                    resume.as_ref(),
                    &SearchLimits {
                        deadline: None,
                        max_steps: Some(step_cap),
                    },
                    &mut |e| got.push(e.rows),
                    &mut |_| {},
                );
                rounds += 1;
                assert!(rounds < 100_000, "search failed to terminate");
                match out.suspended {
                    Some(st) => {
                        // Round-trip the checkpoint through serialization.
                        let json = serde_json::to_string(&st).unwrap();
                        resume = Some(serde_json::from_str(&json).unwrap());
                    }
                    None => break,
                }
            }
            assert_eq!(got, full, "step cap {step_cap}");
        }
    }

    #[test]
    fn seven_vertex_three_manifold_is_unique() {
        let g = dihedral(7).unwrap();
        let out = enumerate_vt(7, 3, &g, &EnumerateOptions::default()).unwrap();
        assert!(out.complete);
        assert_eq!(out.emissions, 3);
        assert_eq!(out.records.len(), 1);
        let rec = &out.records[0];
        assert_eq!(rec.f_vector, vec![7, 21, 28, 14]);
        assert_eq!(rec.status, RecordStatus::Candidate);
        assert_eq!(rec.group, "D7");
        assert_eq!(rec.group_index, Some(2));
        let c = rec.complex(&g).unwrap();
        assert!(c.is_pseudomanifold());
        assert!(manifold_link_conditions(&c, true).is_ok());
    }

    #[test]
    fn torus_found_by_order_42_group() {
        let g = affine_frobenius(7, 6).unwrap();
        let out = enumerate_vt(7, 2, &g, &EnumerateOptions::default()).unwrap();
        assert_eq!(out.records.len(), 1);
        let c = out.records[0].complex(&g).unwrap();
        assert!(are_isomorphic(&c, &torus_7()).is_some());
        assert_eq!(out.records[0].group_index, Some(4));
    }

    #[test]
    fn symmetric_shortcut() {
        let g = symmetric(6).unwrap();
        let out = enumerate_vt(6, 4, &g, &EnumerateOptions::default()).unwrap();
        assert_eq!(out.records.len(), 1);
        let rec = &out.records[0];
        assert_eq!(rec.f_vector, vec![6, 15, 20, 15, 6]);
        assert_eq!(rec.status, RecordStatus::Sphere);
        assert_eq!(out.records[0].group_index, Some(16));
        let out = enumerate_vt(6, 2, &g, &EnumerateOptions::default()).unwrap();
        assert!(out.records.is_empty());
        let g5 = symmetric(5).unwrap();
        let out = enumerate_vt(5, 3, &g5, &EnumerateOptions::default()).unwrap();
        assert_eq!(out.records.len(), 1);
    }

    #[test]
    fn shortcut_agrees_with_full_search() {
        for n in 4..=6u8 {
            for d in 2..=n - 2 {
                for g in [symmetric(n).unwrap(), alternating(n).unwrap()] {
                    let quick =
                        enumerate_vt(n, d, &g, &EnumerateOptions::default()).unwrap();
                    let slow =
                        enumerate_via_search(n, d, &g, &EnumerateOptions::default())
                            .unwrap();
                    assert_eq!(
                        quick.records.len(),
                        slow.records.len(),
                        "n={n} d={d} {}",
                        g.name()
                    );
                    for (a, b) in quick.records.iter().zip(&slow.records) {
                        assert_eq!(a.f_vector, b.f_vector);
                    }
                }
            }
        }
    }

    #[test]
    fn emitted_complexes_are_invariant_and_filtered() {
        for (g, d) in [
            (cyclic(7).unwrap(), 3u8),
            (dihedral(8).unwrap(), 3),
            (cyclic(9).unwrap(), 2),
        ] {
            let n = g.degree();
            let out = enumerate_vt(n, d, &g, &EnumerateOptions::default()).unwrap();
            for rec in &out.records {
                let c = rec.complex(&g).unwrap();
                assert!(c.is_pseudomanifold());
                assert!(manifold_link_conditions(&c, false).is_ok());
                for p in g.generators() {
                    let image: Vec<VertexSet> =
                        c.facets().iter().map(|f| p.apply_set(*f)).collect();
                    let mut image = image;
                    image.sort();
                    assert_eq!(image, c.facets(), "not invariant under {p:?}");
                }
            }
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        let g = cyclic(7).unwrap();
        assert!(matches!(
            enumerate_vt(8, 3, &g, &EnumerateOptions::default()),
            Err(EnumerateError::DegreeMismatch { .. })
        ));
        assert!(matches!(
            enumerate_vt(7, 1, &g, &EnumerateOptions::default()),
            Err(EnumerateError::BadDimensions { .. })
        ));
        assert!(matches!(
            enumerate_vt(7, 6, &g, &EnumerateOptions::default()),
            Err(EnumerateError::BadDimensions { .. })
        ));
        let blocks = PermutationGroup::new(
            6,
            vec![crate::perm::Permutation::parse_cycles("(1,2,3)", 6).unwrap()],
            "blocks",
        )
        .unwrap();
        assert!(matches!(
            enumerate_vt(6, 2, &blocks, &EnumerateOptions::default()),
            Err(EnumerateError::NotTransitive(_))
        ));
    }
}
