//! Bistellar flips, a seeded greedy reduction for sphere recognition, and a
//! heuristic equivalence search against reference triangulations.
//!
//! A flip is encoded by a face `F` and a cofacet `V'` with |F| + |V'| = d+2.
//! It is admissible when link(F) is the boundary of the simplex on `V'` and
//! `V'` is not itself a face; applying it replaces star(F) = F * ∂V' with
//! ∂F * V'. The inverse move swaps the two sets. When `F` is a facet the
//! cofacet is a single vertex label absent from the support (fresh or freed
//! earlier), which subdivides the facet; the mirror image removes a vertex
//! whose link is a simplex boundary.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::classify::are_isomorphic;
use crate::complex::SimplicialComplex;
use crate::vertex_set::{VertexSet, MAX_VERTEX};

/// Default move budget for one reduction run.
pub const DEFAULT_BUDGET: u64 = 50_000;
/// Moves without a new record before a heating phase kicks in.
const STALL_LIMIT: u64 = 2_000;
/// Length of a heating phase (uniformly random admissible moves).
const HEAT_MOVES: u64 = 50;
/// Heating phases without any record improvement before giving up.
const FRUITLESS_HEAT_CAP: u32 = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlipMove {
    pub face: VertexSet,
    pub cofacet: VertexSet,
}

impl FlipMove {
    pub fn inverse(&self) -> FlipMove {
        FlipMove {
            face: self.cofacet,
            cofacet: self.face,
        }
    }

    /// One-line text form, e.g. `1,2 -> 3,6`.
    pub fn to_line(&self) -> String {
        let side = |s: VertexSet| {
            s.vertices()
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        format!("{} -> {}", side(self.face), side(self.cofacet))
    }

    pub fn parse_line(line: &str) -> Option<FlipMove> {
        let (lhs, rhs) = line.split_once("->")?;
        let side = |t: &str| -> Option<VertexSet> {
            let mut s = VertexSet::EMPTY;
            for part in t.split(',') {
                let v: u8 = part.trim().parse().ok()?;
                if v == 0 || v > MAX_VERTEX {
                    return None;
                }
                s = s.with(v);
            }
            Some(s)
        };
        Some(FlipMove {
            face: side(lhs)?,
            cofacet: side(rhs)?,
        })
    }
}

/// Checks the admissibility rule for `mv` in `m`.
pub fn is_admissible(m: &SimplicialComplex, mv: &FlipMove) -> bool {
    let d = m.dim() as usize;
    let fsize = mv.face.len();
    if fsize == 0 || fsize + mv.cofacet.len() != d + 2 {
        return false;
    }
    if !mv.face.intersection(mv.cofacet).is_empty() {
        return false;
    }
    if fsize == d + 1 {
        // Facet subdivision: the new vertex must be outside the support.
        return mv.cofacet.len() == 1
            && m.contains_facet(mv.face)
            && mv.cofacet.intersection(m.support()).is_empty();
    }
    if !m.contains_face(mv.face) || m.contains_face(mv.cofacet) {
        return false;
    }
    let lf = m.link_facets(mv.face);
    lf.len() == d + 1 - fsize + 1 && lf.iter().all(|l| l.is_subset_of(mv.cofacet))
}

/// All admissible moves, ordered by face size then lexicographically.
pub fn valid_moves(m: &SimplicialComplex) -> Vec<FlipMove> {
    let d = m.dim() as usize;
    let mut out = Vec::new();
    let by_dim = m.faces_by_dim();
    for (k, faces) in by_dim.iter().enumerate() {
        if k == d {
            if let Some(v) = free_label(m) {
                for &f in faces {
                    out.push(FlipMove {
                        face: f,
                        cofacet: VertexSet::singleton(v),
                    });
                }
            }
            continue;
        }
        let want = d - k + 1;
        for &f in faces {
            let lf = m.link_facets(f);
            if lf.len() != want {
                continue;
            }
            let mut union = VertexSet::EMPTY;
            for l in &lf {
                union = union.union(*l);
            }
            if union.len() == want && !m.contains_face(union) {
                out.push(FlipMove {
                    face: f,
                    cofacet: union,
                });
            }
        }
    }
    out.sort_by_key(|mv| (mv.face.len(), mv.face, mv.cofacet));
    out
}

fn free_label(m: &SimplicialComplex) -> Option<u8> {
    let support = m.support();
    (1..=MAX_VERTEX).find(|&v| !support.contains(v))
}

/// Replaces star(face) with ∂face * cofacet. The move must be admissible.
pub fn apply_move(m: &SimplicialComplex, mv: &FlipMove) -> SimplicialComplex {
    debug_assert!(is_admissible(m, mv), "inadmissible move {}", mv.to_line());
    let mut facets: Vec<VertexSet> = m
        .facets()
        .iter()
        .copied()
        .filter(|g| !mv.face.is_subset_of(*g))
        .collect();
    for x in mv.face.iter() {
        facets.push(mv.face.without(x).union(mv.cofacet));
    }
    let n = m.n().max(mv.cofacet.max_vertex().unwrap_or(0));
    SimplicialComplex::new(n, facets).expect("flip output is a pure complex")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReduceVerdict {
    /// The working copy reached d+2 vertices, so it is the simplex boundary.
    BoundaryOfSimplex,
    /// The search gave up at a local minimum; not a negative result.
    ReducedButUnrecognized,
    BudgetExhausted,
}

#[derive(Debug, Clone)]
pub struct ReduceOutcome {
    /// Best complex reached (lexicographically smallest (f_d, …, f_0)).
    pub complex: SimplicialComplex,
    pub verdict: ReduceVerdict,
    /// Move sequence replaying the input to `complex`.
    pub moves: Vec<FlipMove>,
    pub moves_applied: u64,
}

/// (f_d, …, f_0), the order in which the reduction compares complexes.
fn descending_f(m: &SimplicialComplex) -> Vec<u64> {
    let mut f = m.f_vector();
    f.reverse();
    f
}

/// Greedy vertex-count reduction. Prefers moves with the smallest face
/// (these lexicographically reduce (f_d, …, f_0)), breaks ties with the
/// seeded generator, and runs a heating phase of random moves after a stall.
pub fn reduce(m: &SimplicialComplex, seed: u64, budget: u64) -> ReduceOutcome {
    let target = m.dim() as usize + 2;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = m.clone();
    let mut log: Vec<FlipMove> = Vec::new();
    let mut best = cur.clone();
    let mut best_key = descending_f(&cur);
    let mut best_at = 0usize;
    let mut applied = 0u64;
    let mut stall = 0u64;
    let mut heat_left = 0u64;
    let mut fruitless_heats = 0u32;
    #[cfg(debug_assertions)]
    let z2_ref = crate::homology::z2_betti_numbers(m);

    loop {
        if cur.support().len() == target {
            return ReduceOutcome {
                complex: cur,
                verdict: ReduceVerdict::BoundaryOfSimplex,
                moves: log,
                moves_applied: applied,
            };
        }
        if applied >= budget {
            log.truncate(best_at);
            return ReduceOutcome {
                complex: best,
                verdict: ReduceVerdict::BudgetExhausted,
                moves: log,
                moves_applied: applied,
            };
        }
        let moves = valid_moves(&cur);
        if moves.is_empty() || fruitless_heats >= FRUITLESS_HEAT_CAP {
            log.truncate(best_at);
            return ReduceOutcome {
                complex: best,
                verdict: ReduceVerdict::ReducedButUnrecognized,
                moves: log,
                moves_applied: applied,
            };
        }
        let mv = if heat_left > 0 {
            heat_left -= 1;
            moves[rng.random_range(0..moves.len())].clone()
        } else {
            let min_size = moves.iter().map(|mv| mv.face.len()).min().unwrap();
            let pool: Vec<&FlipMove> =
                moves.iter().filter(|mv| mv.face.len() == min_size).collect();
            pool[rng.random_range(0..pool.len())].clone()
        };
        cur = apply_move(&cur, &mv);
        log.push(mv);
        applied += 1;
        #[cfg(debug_assertions)]
        if applied.is_multiple_of(100) {
            assert_eq!(
                crate::homology::z2_betti_numbers(&cur),
                z2_ref,
                "homology drifted during reduction"
            );
        }
        let key = descending_f(&cur);
        if key < best_key {
            best_key = key;
            best = cur.clone();
            best_at = log.len();
            stall = 0;
            fruitless_heats = 0;
        } else {
            stall += 1;
            if heat_left == 0 && stall >= STALL_LIMIT {
                heat_left = HEAT_MOVES;
                stall = 0;
                fruitless_heats += 1;
            }
        }
    }
}

/// Reduces the link of the smallest vertex. For a vertex-transitive complex
/// one link decides them all; `BoundaryOfSimplex` certifies the links are
/// spheres and the candidate is a combinatorial manifold.
pub fn links_are_spheres(m: &SimplicialComplex, seed: u64, budget: u64) -> ReduceVerdict {
    let v = m.support().min_vertex().expect("nonempty complex");
    let link = m
        .link(VertexSet::singleton(v))
        .expect("vertex link exists");
    reduce(&link, seed, budget).verdict
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Equivalence {
    /// Proof: replaying the moves on the first complex yields a complex
    /// isomorphic to the second.
    Equivalent(Vec<FlipMove>),
    /// Not a disproof; the search merely failed within the budget.
    Undetermined,
}

/// One-sided heuristic: flips `m1` toward the f-vector of `m2`, testing
/// isomorphism every 25 accepted moves and whenever the f-vectors match.
pub fn bistellar_equivalent(
    m1: &SimplicialComplex,
    m2: &SimplicialComplex,
    seed: u64,
    budget: u64,
) -> Equivalence {
    if m1.dim() != m2.dim() {
        return Equivalence::Undetermined;
    }
    if are_isomorphic(m1, m2).is_some() {
        return Equivalence::Equivalent(Vec::new());
    }
    let target_key = descending_f(m2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = m1.clone();
    let mut log: Vec<FlipMove> = Vec::new();
    let mut applied = 0u64;
    let mut stall = 0u64;
    let mut heat_left = 0u64;
    let mut since_test = 0u32;
    while applied < budget {
        let moves = valid_moves(&cur);
        if moves.is_empty() {
            return Equivalence::Undetermined;
        }
        let mv = if heat_left > 0 {
            heat_left -= 1;
            moves[rng.random_range(0..moves.len())].clone()
        } else {
            let pool: Vec<&FlipMove> = match descending_f(&cur).cmp(&target_key) {
                std::cmp::Ordering::Greater => {
                    let min_size = moves.iter().map(|mv| mv.face.len()).min().unwrap();
                    moves.iter().filter(|mv| mv.face.len() == min_size).collect()
                }
                std::cmp::Ordering::Less => {
                    let max_size = moves.iter().map(|mv| mv.face.len()).max().unwrap();
                    moves.iter().filter(|mv| mv.face.len() == max_size).collect()
                }
                std::cmp::Ordering::Equal => moves.iter().collect(),
            };
            pool[rng.random_range(0..pool.len())].clone()
        };
        cur = apply_move(&cur, &mv);
        log.push(mv);
        applied += 1;
        since_test += 1;
        if since_test >= 25 || descending_f(&cur) == target_key {
            since_test = 0;
            if are_isomorphic(&cur, m2).is_some() {
                return Equivalence::Equivalent(log);
            }
        }
        stall += 1;
        if heat_left == 0 && stall >= STALL_LIMIT {
            heat_left = HEAT_MOVES;
            stall = 0;
        }
    }
    Equivalence::Undetermined
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::fixtures::{boundary_simplex, octahedron, rp2_6, torus_7};
    use crate::enumerate::{enumerate_vt, EnumerateOptions};
    use crate::groups::dihedral;
    use crate::homology::z2_betti_numbers;

    fn nine_torus() -> SimplicialComplex {
        let mut facets = Vec::new();
        for i in 0..9u8 {
            let v = |x: u8| (i + x) % 9 + 1;
            facets.push(VertexSet::from_vertices(&[v(0), v(1), v(3)]));
            facets.push(VertexSet::from_vertices(&[v(0), v(2), v(3)]));
        }
        SimplicialComplex::new(9, facets).unwrap()
    }

    #[test]
    fn nine_torus_fixture_is_a_torus() {
        let t = nine_torus();
        assert!(t.is_pseudomanifold());
        assert!(t.is_orientable());
        assert_eq!(t.f_vector(), vec![9, 27, 18]);
        assert_eq!(t.euler_characteristic(), 0);
        assert_eq!(z2_betti_numbers(&t), vec![1, 2, 1]);
    }

    #[test]
    fn move_inventory_on_fixtures() {
        // Octahedron: no triangle vertex links, all 12 edges flippable
        // (their link pairs are the antipodal non-edges), 8 subdivisions.
        let oct = octahedron();
        let moves = valid_moves(&oct);
        assert!(moves.iter().all(|m| m.face.len() != 1));
        assert_eq!(moves.iter().filter(|m| m.face.len() == 2).count(), 12);
        assert_eq!(moves.iter().filter(|m| m.face.len() == 3).count(), 8);

        // Minimal sphere: every candidate cofacet is already a face.
        let s = boundary_simplex(2);
        let moves = valid_moves(&s);
        assert!(moves.iter().all(|m| m.face.len() == 3));

        // 9-vertex torus: edge flips and subdivisions only.
        let t = nine_torus();
        let moves = valid_moves(&t);
        assert!(moves.iter().all(|m| m.face.len() != 1));
        assert!(moves.iter().any(|m| m.face.len() == 2));
        assert_eq!(moves.iter().filter(|m| m.face.len() == 3).count(), 18);

        // Complete 1-skeleton: nothing but subdivisions.
        let k7 = torus_7();
        assert!(valid_moves(&k7).iter().all(|m| m.face.len() == 3));
    }

    #[test]
    fn flips_preserve_structure_and_invert() {
        for m in [octahedron(), torus_7(), rp2_6(), boundary_simplex(3)] {
            let chi = m.euler_characteristic();
            let z2 = z2_betti_numbers(&m);
            for mv in valid_moves(&m) {
                let flipped = apply_move(&m, &mv);
                assert!(flipped.is_pseudomanifold(), "{}", mv.to_line());
                assert_eq!(flipped.dim(), m.dim());
                assert_eq!(flipped.euler_characteristic(), chi);
                assert_eq!(z2_betti_numbers(&flipped), z2);
                let back = apply_move(&flipped, &mv.inverse());
                assert_eq!(back.facets(), m.facets(), "{}", mv.to_line());
            }
        }
    }

    #[test]
    fn edge_flip_keeps_octahedron_f_vector() {
        let oct = octahedron();
        let mv = valid_moves(&oct)
            .into_iter()
            .find(|m| m.face.len() == 2)
            .unwrap();
        let flipped = apply_move(&oct, &mv);
        assert_eq!(flipped.f_vector(), vec![6, 12, 8]);
        assert!(are_isomorphic(&oct, &flipped).is_none(), "octahedron is rigid");
    }

    #[test]
    fn subdivision_of_tetrahedron_boundary() {
        let s = boundary_simplex(2);
        let mv = FlipMove {
            face: VertexSet::from_vertices(&[1, 2, 3]),
            cofacet: VertexSet::singleton(5),
        };
        assert!(is_admissible(&s, &mv));
        let sub = apply_move(&s, &mv);
        assert_eq!(sub.f_vector(), vec![5, 9, 6]);
        let out = reduce(&sub, 7, DEFAULT_BUDGET);
        assert_eq!(out.verdict, ReduceVerdict::BoundaryOfSimplex);
        assert_eq!(out.complex.support().len(), 4);
    }

    #[test]
    fn move_lines_roundtrip() {
        let mv = FlipMove {
            face: VertexSet::from_vertices(&[2, 5]),
            cofacet: VertexSet::from_vertices(&[1, 7]),
        };
        assert_eq!(mv.to_line(), "2,5 -> 1,7");
        assert_eq!(FlipMove::parse_line(&mv.to_line()).unwrap(), mv);
        assert!(FlipMove::parse_line("junk").is_none());
        assert!(FlipMove::parse_line("0,2 -> 3").is_none());
    }

    #[test]
    fn reduce_recognizes_three_sphere() {
        let g = dihedral(7).unwrap();
        let rec = enumerate_vt(7, 3, &g, &EnumerateOptions::default())
            .unwrap()
            .records
            .remove(0);
        let c = rec.complex(&g).unwrap();
        let out = reduce(&c, 11, DEFAULT_BUDGET);
        assert_eq!(out.verdict, ReduceVerdict::BoundaryOfSimplex);
        // Replay the log to the reduced complex.
        let mut replay = c;
        for mv in &out.moves {
            replay = apply_move(&replay, mv);
        }
        assert_eq!(replay.facets(), out.complex.facets());
    }

    #[test]
    fn reduce_is_immediate_on_minimal_spheres() {
        let out = reduce(&boundary_simplex(3), 0, 0);
        assert_eq!(out.verdict, ReduceVerdict::BoundaryOfSimplex);
        assert_eq!(out.moves_applied, 0);
    }

    #[test]
    fn tori_reduce_to_seven_vertices() {
        let out = reduce(&nine_torus(), 5, DEFAULT_BUDGET);
        assert_eq!(out.verdict, ReduceVerdict::ReducedButUnrecognized);
        assert_eq!(out.complex.f_vector(), vec![7, 21, 14]);
        assert!(are_isomorphic(&out.complex, &torus_7()).is_some());

        let stuck = reduce(&torus_7(), 5, DEFAULT_BUDGET);
        assert_eq!(stuck.verdict, ReduceVerdict::ReducedButUnrecognized);
        assert_eq!(stuck.complex.f_vector(), vec![7, 21, 14]);
    }

    #[test]
    fn projective_plane_stays_at_six_vertices() {
        let out = reduce(&rp2_6(), 3, DEFAULT_BUDGET);
        assert_eq!(out.verdict, ReduceVerdict::ReducedButUnrecognized);
        assert_eq!(out.complex.f_vector(), vec![6, 15, 10]);
    }

    #[test]
    fn link_verdicts() {
        assert_eq!(
            links_are_spheres(&torus_7(), 1, DEFAULT_BUDGET),
            ReduceVerdict::BoundaryOfSimplex
        );
        assert_eq!(
            links_are_spheres(&boundary_simplex(4), 1, DEFAULT_BUDGET),
            ReduceVerdict::BoundaryOfSimplex
        );
        assert_eq!(
            links_are_spheres(&nine_torus(), 1, 0),
            ReduceVerdict::BudgetExhausted
        );
    }

    #[test]
    fn equivalence_search() {
        let t7 = torus_7();
        match bistellar_equivalent(&t7, &t7, 9, 1_000) {
            Equivalence::Equivalent(moves) => assert!(moves.is_empty()),
            Equivalence::Undetermined => panic!("identical complexes"),
        }

        match bistellar_equivalent(&nine_torus(), &t7, 13, DEFAULT_BUDGET) {
            Equivalence::Equivalent(moves) => {
                assert!(!moves.is_empty());
                let mut replay = nine_torus();
                for mv in &moves {
                    replay = apply_move(&replay, mv);
                }
                assert!(are_isomorphic(&replay, &t7).is_some());
            }
            Equivalence::Undetermined => panic!("tori should be connected by flips"),
        }

        match bistellar_equivalent(&octahedron(), &boundary_simplex(2), 2, DEFAULT_BUDGET) {
            Equivalence::Equivalent(_) => {}
            Equivalence::Undetermined => panic!("spheres should be connected by flips"),
        }

        // Different surfaces can never be equivalent; the search must give up.
        assert_eq!(
            bistellar_equivalent(&t7, &boundary_simplex(2), 4, 3_000),
            Equivalence::Undetermined
        );
    }
}
