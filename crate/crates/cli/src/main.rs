//! Command-line front end: group and orbit inspection, one-off searches,
//! complex checks, and the resumable census sweep/report pair.
//!
//! Complexes travel as plain text files: a header line `n d`, then one
//! facet per line as space-separated vertex labels. Exit codes: 0 success,
//! 1 bad input, 2 partial or inconclusive results.

use std::collections::BTreeMap;
use std::fs;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use vtcensus::bistellar::{self, ReduceVerdict};
use vtcensus::census::{self, CensusStore, ReportStyle, SweepOptions, Verdict, VerifyVerdict};
use vtcensus::classify;
use vtcensus::enumerate::{enumerate_vt, EnumerateOptions, SearchState};
use vtcensus::groups::{resolve_group, Catalog};
use vtcensus::homology;
use vtcensus::orbits;
use vtcensus::reference;
use vtcensus::SimplicialComplex;

#[derive(Parser)]
#[command(
    name = "vtcensus",
    version,
    about = "Census of vertex-transitive combinatorial manifolds"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Global {
    /// Group catalog JSON; defaults to the embedded one (degrees 4-8).
    #[arg(long, global = true)]
    catalog: Option<PathBuf>,
    /// Census store directory.
    #[arg(long, global = true, default_value = "census")]
    out: PathBuf,
    /// Seed for bistellar verification.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Flip budget per bistellar reduction.
    #[arg(long, global = true, default_value_t = bistellar::DEFAULT_BUDGET)]
    budget: u64,
    /// Worker threads for sweeps; 0 uses all cores.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Pick up saved state: a sweep continues its store (also the default);
    /// `enumerate` reads the `--state` checkpoint.
    #[arg(long, global = true)]
    resume: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the groups in the catalog.
    Groups {
        #[arg(long)]
        degree: Option<u8>,
    },
    /// Count (and optionally list) orbits of k-subsets under a group.
    Orbits {
        /// Group spec: family (C7, D15, S6, A5, 13:3), id (t7n4), or name.
        #[arg(long)]
        group: String,
        #[arg(short)]
        k: u8,
        /// Print one line per orbit: representative and size.
        #[arg(long)]
        reps: bool,
    },
    /// Search for invariant combinatorial manifolds under one group.
    Enumerate {
        #[arg(long)]
        group: String,
        /// Dimension of the facets minus one, i.e. of the manifold.
        #[arg(short)]
        d: u8,
        /// Stop after this many search steps (suspends, exit code 2).
        #[arg(long)]
        max_steps: Option<u64>,
        /// Wall-clock budget in seconds (suspends, exit code 2).
        #[arg(long)]
        seconds: Option<f64>,
        /// Checkpoint file; written on suspension, read back with --resume.
        #[arg(long)]
        state: Option<PathBuf>,
    },
    /// Check one complex: pseudomanifold, links, homology, type.
    Verify { file: PathBuf },
    /// Integer and mod-2 homology of a complex.
    Homology { file: PathBuf },
    /// Bistellar reduction toward a simplex boundary.
    Reduce { file: PathBuf },
    /// Decide combinatorial isomorphism of two complexes.
    Compare { a: PathBuf, b: PathBuf },
    /// Print a reference complex in the file format.
    Reference {
        #[command(subcommand)]
        which: Ref,
    },
    /// Run (or resume) a census sweep over a range of cells.
    Sweep {
        /// Vertex counts, e.g. `7` or `4..8` (inclusive).
        #[arg(long)]
        n: String,
        /// Dimensions, e.g. `2..6`; default is everything possible.
        #[arg(long)]
        d: Option<String>,
        /// Step budget per task; deterministic interruption.
        #[arg(long)]
        max_steps: Option<u64>,
        /// Wall-clock budget per task, in seconds.
        #[arg(long)]
        seconds: Option<f64>,
        /// Sweep only the cyclic and dihedral group of each degree,
        /// ignoring the catalog. Reaches degrees the catalog lacks.
        #[arg(long)]
        cyclic_dihedral: bool,
    },
    /// Render the census store.
    Report {
        #[arg(long, value_enum, default_value = "counts")]
        style: Style,
    },
}

#[derive(Subcommand)]
enum Ref {
    /// Boundary of the (d+1)-simplex: the minimal d-sphere.
    Simplex { d: u8 },
    /// Boundary of the cyclic polytope C_dim(n).
    Cyclic { dim: u8, n: u8 },
    /// Boundary of the k-dimensional cross-polytope.
    Cross { k: u8 },
    /// The k-gon.
    Polygon { k: u8 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
enum Style {
    Counts,
    Orbits,
}

fn main() {
    let code = match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            1
        }
    };
    std::process::exit(code);
}

fn run() -> Result<i32> {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version print to stdout and succeed; anything else
            // is a usage error.
            let code = i32::from(e.use_stderr());
            let _ = e.print();
            return Ok(code);
        }
    };
    let catalog = match &cli.global.catalog {
        Some(p) => {
            Catalog::load(p).with_context(|| format!("loading catalog {}", p.display()))?
        }
        None => Catalog::builtin(),
    };

    match cli.cmd {
        Cmd::Groups { degree } => {
            let mut shown = 0;
            for e in catalog.entries() {
                if degree.is_some_and(|want| want != e.degree) {
                    continue;
                }
                println!(
                    "t{}n{:<4} {:<16} order {:<7} {}",
                    e.degree,
                    e.index,
                    e.name,
                    e.order,
                    e.generators.join("; ")
                );
                shown += 1;
            }
            if shown == 0 {
                match degree {
                    Some(d) => bail!("the catalog has no groups of degree {d}"),
                    None => bail!("the catalog is empty"),
                }
            }
            Ok(0)
        }

        Cmd::Orbits { group, k, reps } => {
            let g = resolve_group(&group, &catalog)?;
            let orbs = orbits::orbits_of_k_subsets(&g, k);
            println!(
                "{} orbits of {}-subsets under {} (degree {})",
                orbs.len(),
                k,
                g.name(),
                g.degree()
            );
            let mut hist: BTreeMap<u64, usize> = BTreeMap::new();
            for o in &orbs {
                *hist.entry(o.size()).or_default() += 1;
            }
            let parts: Vec<String> = hist
                .iter()
                .rev()
                .map(|(size, count)| format!("{count} of size {size}"))
                .collect();
            println!("{}", parts.join(", "));
            if reps {
                for o in &orbs {
                    println!("{}", rep_text(&o.rep.vertices(), o.size()));
                }
            }
            Ok(0)
        }

        Cmd::Enumerate {
            group,
            d,
            max_steps,
            seconds,
            state,
        } => {
            let g = resolve_group(&group, &catalog)?;
            let resume: Option<SearchState> = match (&state, cli.global.resume) {
                (Some(p), true) if p.exists() => Some(
                    serde_json::from_str(&fs::read_to_string(p)?)
                        .with_context(|| format!("reading checkpoint {}", p.display()))?,
                ),
                _ => None,
            };
            let opts = EnumerateOptions {
                budget: seconds.map(Duration::from_secs_f64),
                max_steps,
                resume,
                group_index: catalog_id_index(&group),
            };
            let out = enumerate_vt(g.degree(), d, &g, &opts)?;
            for r in &out.records {
                let f: Vec<String> = r.f_vector.iter().skip(1).map(u64::to_string).collect();
                let reps: Vec<String> = r
                    .orbit_reps
                    .iter()
                    .map(|o| rep_text(&o.rep, o.size))
                    .collect();
                println!("f = ({}) | {} | {}", f.join(","), r.group, reps.join(" "));
            }
            println!(
                "emissions: {}, records kept: {}, complete: {}",
                out.emissions,
                out.records.len(),
                out.complete
            );
            if let Some(cp) = &out.checkpoint {
                match &state {
                    Some(p) => {
                        fs::write(p, serde_json::to_string(cp)?)?;
                        eprintln!("suspended; checkpoint saved to {}", p.display());
                    }
                    None => eprintln!("suspended; pass --state FILE to keep the position"),
                }
                return Ok(2);
            }
            if let Some(p) = &state {
                let _ = fs::remove_file(p);
            }
            Ok(0)
        }

        Cmd::Verify { file } => {
            let m = load_complex(&file)?;
            let report = census::verify(&m, cli.global.seed, cli.global.budget);
            println!("{report}");
            Ok(match report.verdict {
                VerifyVerdict::Unverified { .. } => 2,
                _ => 0,
            })
        }

        Cmd::Homology { file } => {
            let m = load_complex(&file)?;
            let h = homology::integer_homology(&m);
            let z2: Vec<String> = h.z2_betti.iter().map(u64::to_string).collect();
            println!("homology: {}", h.tuple_notation());
            println!("z2 betti: ({})", z2.join(","));
            println!("euler characteristic: {}", m.euler_characteristic());
            Ok(0)
        }

        Cmd::Reduce { file } => {
            let m = load_complex(&file)?;
            let out = bistellar::reduce(&m, cli.global.seed, cli.global.budget);
            let verdict = match out.verdict {
                ReduceVerdict::BoundaryOfSimplex => "boundary of the simplex",
                ReduceVerdict::ReducedButUnrecognized => "local minimum, not a simplex boundary",
                ReduceVerdict::BudgetExhausted => "budget exhausted",
            };
            let before: Vec<String> = m.f_vector().iter().map(u64::to_string).collect();
            let after: Vec<String> = out.complex.f_vector().iter().map(u64::to_string).collect();
            println!("verdict: {verdict}");
            println!("f-vector: ({}) -> ({})", before.join(","), after.join(","));
            println!("moves applied: {}", out.moves_applied);
            Ok(match out.verdict {
                ReduceVerdict::BoundaryOfSimplex => 0,
                _ => 2,
            })
        }

        Cmd::Compare { a, b } => {
            let ma = load_complex(&a)?;
            let mb = load_complex(&b)?;
            match classify::are_isomorphic(&ma, &mb) {
                Some(map) => {
                    let pairs: Vec<String> =
                        map.iter().map(|(x, y)| format!("{x}->{y}")).collect();
                    println!("isomorphic: {}", pairs.join(" "));
                }
                None => println!("not isomorphic"),
            }
            Ok(0)
        }

        Cmd::Reference { which } => {
            let m = match which {
                Ref::Simplex { d } => reference::boundary_simplex(d)?,
                Ref::Cyclic { dim, n } => reference::cyclic_polytope_boundary(dim, n)?,
                Ref::Cross { k } => reference::cross_polytope_boundary(k)?,
                Ref::Polygon { k } => reference::polygon(k)?,
            };
            print!("{}", m.to_file_string());
            Ok(0)
        }

        Cmd::Sweep {
            n,
            d,
            max_steps,
            seconds,
            cyclic_dihedral,
        } => {
            let ns = parse_range(&n).context("--n")?;
            let ds = match &d {
                Some(s) => parse_range(s).context("--d")?,
                None => 2..=62,
            };
            let family_cat;
            let cat = if cyclic_dihedral {
                let degrees: Vec<u8> = ns.clone().collect();
                family_cat = census::cyclic_dihedral_catalog(&degrees)?;
                &family_cat
            } else {
                &catalog
            };
            let mut store = CensusStore::open(&cli.global.out)?;
            let opts = SweepOptions {
                budget: seconds.map(Duration::from_secs_f64),
                max_steps,
                seed: cli.global.seed,
                reduce_budget: cli.global.budget,
                threads: cli.global.threads,
            };
            let sum = store.sweep(ns, ds, cat, &opts)?;
            eprintln!(
                "tasks run: {}, records added: {}",
                sum.tasks_run, sum.records_added
            );
            print!("{}", store.report(ReportStyle::Counts));
            Ok(store_exit_code(&store))
        }

        Cmd::Report { style } => {
            let store = CensusStore::open(&cli.global.out)?;
            let style = match style {
                Style::Counts => ReportStyle::Counts,
                Style::Orbits => ReportStyle::Orbits,
            };
            print!("{}", store.report(style));
            Ok(store_exit_code(&store))
        }
    }
}

fn load_complex(path: &Path) -> Result<SimplicialComplex> {
    let text =
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    SimplicialComplex::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

/// Unfinished tasks or unsettled records leave the census partial.
fn store_exit_code(store: &CensusStore) -> i32 {
    let unsettled = store
        .records()
        .iter()
        .any(|r| census::record_verdict(r) == Verdict::Unsettled);
    if store.is_partial() || unsettled {
        2
    } else {
        0
    }
}

/// `4..8`, `4-8`, or a single `7`, all inclusive.
fn parse_range(s: &str) -> Result<RangeInclusive<u8>> {
    let (a, b) = if let Some((a, b)) = s.split_once("..") {
        (a, b)
    } else if let Some((a, b)) = s.split_once('-') {
        (a, b)
    } else {
        (s, s)
    };
    let lo: u8 = a.trim().parse().with_context(|| format!("bad range `{s}`"))?;
    let hi: u8 = b.trim().parse().with_context(|| format!("bad range `{s}`"))?;
    if lo > hi {
        bail!("empty range `{s}`");
    }
    Ok(lo..=hi)
}

/// Catalog index baked into a `tXnY` group spec, if that is what it is.
fn catalog_id_index(spec: &str) -> Option<u32> {
    let rest = spec.strip_prefix('t')?;
    let (deg, idx) = rest.split_once('n')?;
    deg.parse::<u8>().ok()?;
    idx.parse::<u32>().ok()
}

/// `1234568_30` when all labels are single digits, `1,2,10_5` otherwise.
fn rep_text(verts: &[u8], size: u64) -> String {
    let parts: Vec<String> = verts.iter().map(u8::to_string).collect();
    let joined = if verts.iter().all(|&v| v <= 9) {
        parts.concat()
    } else {
        parts.join(",")
    };
    format!("{joined}_{size}")
}
