//! Combinatorial-equivalence testing: invariants, isomorphism search, and
//! canonical keys for deduplication.

use std::collections::HashMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::groups::multiplication_map;
use crate::homology::HomologyProfile;
use crate::vertex_set::VertexSet;

/// Determinant of `A * A^T`, where `A` is the 0/1 incidence matrix between
/// the support vertices and the facets. Invariant under vertex relabeling
/// and facet reordering, so it serves as a cheap isomorphism fingerprint.
pub fn as_determinant(m: &SimplicialComplex) -> BigInt {
    let support = m.support().vertices();
    let s = support.len();
    // Gram matrix: entry (i,j) counts facets containing both vertices.
    let mut gram = vec![vec![BigInt::from(0); s]; s];
    for f in m.facets() {
        for (i, &u) in support.iter().enumerate() {
            if !f.contains(u) {
                continue;
            }
            for (j, &v) in support.iter().enumerate() {
                if f.contains(v) {
                    gram[i][j] += 1;
                }
            }
        }
    }
    bareiss_determinant(gram)
}

/// Fraction-free (Bareiss) determinant; exact over arbitrary-precision
/// integers.
fn bareiss_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut sign = 1i32;
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if a[k][k] == BigInt::from(0) {
            match (k + 1..n).find(|&r| a[r][k] != BigInt::from(0)) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::from(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
            a[i][k] = BigInt::from(0);
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Smallest `m` with `gcd(m, n) = 1` whose multiplication map carries the
/// facets of `m1` onto the facets of `m2`, if any. A cheap shortcut for
/// complexes invariant under the standard `n`-cycle, where relabeling by
/// multiplication realizes the useful outer automorphisms.
pub fn multiplication_isomorphic(
    m1: &SimplicialComplex,
    m2: &SimplicialComplex,
    n: u8,
) -> Option<u8> {
    if m1.n_facets() != m2.n_facets() || m1.dim() != m2.dim() {
        return None;
    }
    for m in 1..=n {
        if num_integer::gcd(m as u32, n as u32) != 1 {
            continue;
        }
        let map = multiplication_map(n, m).expect("unit multiplier");
        let mut image: Vec<VertexSet> =
            m1.facets().iter().map(|f| map.apply_set(*f)).collect();
        image.sort();
        if image == m2.facets() {
            return Some(m);
        }
    }
    None
}

/// Isomorphism search anchored at facet seeds: the first facet of `m1` is
/// mapped to each seed facet of `m2` under every vertex ordering, and each
/// partial map is propagated across ridges. Complete when the seeds meet
/// every facet orbit of some vertex-transitive symmetry of `m2` (in
/// particular, when they are all facets).
///
/// Both complexes must be strongly connected pseudomanifolds; anything else
/// conservatively returns `None`.
pub fn isomorphism_with_seeds(
    m1: &SimplicialComplex,
    m2: &SimplicialComplex,
    seeds: &[VertexSet],
) -> Option<Vec<(u8, u8)>> {
    if m1.dim() != m2.dim() || m1.n_facets() != m2.n_facets() {
        return None;
    }
    if m1.f_vector() != m2.f_vector() {
        return None;
    }
    if as_determinant(m1) != as_determinant(m2) {
        return None;
    }
    if !m1.is_pseudomanifold() || !m2.is_pseudomanifold() {
        return None;
    }
    if !m1.is_strongly_connected() || !m2.is_strongly_connected() {
        return None;
    }

    let ridge_pairs_2 = ridge_pairs(m2);
    let ridge_index_1 = m1.ridge_index();
    let pd1 = PairDegrees::of(m1);
    let pd2 = PairDegrees::of(m2);
    let f0 = m1.facets()[0];
    let f0v = f0.vertices();
    for &seed in seeds {
        debug_assert!(m2.contains_facet(seed));
        // Depth-first assignment of images for f0's vertices; candidate
        // images must match facet-degree and pairwise co-facet counts,
        // which every isomorphism preserves.
        let sv = seed.vertices();
        let mut images: Vec<u8> = Vec::with_capacity(f0v.len());
        if let Some(found) = assign_images(
            m1,
            m2,
            &ridge_pairs_2,
            &ridge_index_1,
            &pd1,
            &pd2,
            &f0v,
            &sv,
            &mut images,
        ) {
            return Some(found);
        }
    }
    None
}

#[allow(clippy::too_many_arguments)]
fn assign_images(
    m1: &SimplicialComplex,
    m2: &SimplicialComplex,
    ridge_pairs_2: &HashMap<VertexSet, (usize, usize)>,
    ridge_index_1: &HashMap<VertexSet, Vec<usize>>,
    pd1: &PairDegrees,
    pd2: &PairDegrees,
    f0v: &[u8],
    seed_vertices: &[u8],
    images: &mut Vec<u8>,
) -> Option<Vec<(u8, u8)>> {
    let k = images.len();
    if k == f0v.len() {
        return propagate(m1, m2, ridge_pairs_2, ridge_index_1, f0v, images);
    }
    let v = f0v[k];
    for &w in seed_vertices {
        if images.contains(&w) || pd1.get(v, v) != pd2.get(w, w) {
            continue;
        }
        if (0..k).any(|j| pd1.get(f0v[j], v) != pd2.get(images[j], w)) {
            continue;
        }
        images.push(w);
        let found = assign_images(
            m1,
            m2,
            ridge_pairs_2,
            ridge_index_1,
            pd1,
            pd2,
            f0v,
            seed_vertices,
            images,
        );
        images.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Number of facets containing each vertex pair (diagonal: each vertex).
/// Relabel-invariant up to permutation, so it prunes isomorphism searches.
struct PairDegrees {
    counts: Vec<u32>,
}

impl PairDegrees {
    fn of(m: &SimplicialComplex) -> PairDegrees {
        let mut counts = vec![0u32; 65 * 65];
        for f in m.facets() {
            let vs = f.vertices();
            for (i, &u) in vs.iter().enumerate() {
                for &v in &vs[i..] {
                    counts[u as usize * 65 + v as usize] += 1;
                }
            }
        }
        PairDegrees { counts }
    }

    fn get(&self, u: u8, v: u8) -> u32 {
        let (a, b) = if u <= v { (u, v) } else { (v, u) };
        self.counts[a as usize * 65 + b as usize]
    }
}

/// Isomorphism test over all facets of `m2` as seeds.
pub fn are_isomorphic(m1: &SimplicialComplex, m2: &SimplicialComplex) -> Option<Vec<(u8, u8)>> {
    isomorphism_with_seeds(m1, m2, &m2.facets().to_vec())
}

fn ridge_pairs(m: &SimplicialComplex) -> HashMap<VertexSet, (usize, usize)> {
    let mut out = HashMap::new();
    for (r, fs) in m.ridge_index() {
        debug_assert_eq!(fs.len(), 2);
        out.insert(r, (fs[0], fs[1]));
    }
    out
}

/// Extends the seed map facet-by-facet across ridges; returns the vertex
/// bijection on the support if every extension is forced consistently.
fn propagate(
    m1: &SimplicialComplex,
    m2: &SimplicialComplex,
    ridge_pairs_2: &HashMap<VertexSet, (usize, usize)>,
    ridge_index_1: &HashMap<VertexSet, Vec<usize>>,
    f0v: &[u8],
    images: &[u8],
) -> Option<Vec<(u8, u8)>> {
    let mut vmap = [0u8; 65];
    let mut used = [false; 65];
    for (&v, &w) in f0v.iter().zip(images) {
        vmap[v as usize] = w;
        used[w as usize] = true;
    }
    let nf = m1.n_facets();
    let mut fimg: Vec<Option<VertexSet>> = vec![None; nf];
    let seed_mask = VertexSet::from_vertices(images);
    fimg[0] = Some(seed_mask);
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(0usize);
    while let Some(i) = queue.pop_front() {
        let f = m1.facets()[i];
        let img = fimg[i].unwrap();
        for v in f.iter() {
            let ridge = f.without(v);
            let pair = &ridge_index_1[&ridge];
            let j = if pair[0] == i { pair[1] } else { pair[0] };
            let ridge_img = apply_vmap(&vmap, ridge);
            let &(p, q) = ridge_pairs_2.get(&ridge_img)?;
            let partner = if m2.facets()[p] == img {
                m2.facets()[q]
            } else if m2.facets()[q] == img {
                m2.facets()[p]
            } else {
                return None;
            };
            match fimg[j] {
                Some(existing) => {
                    if existing != partner {
                        return None;
                    }
                }
                None => {
                    let y = m1.facets()[j].difference(ridge).min_vertex().unwrap();
                    let y_img = partner.difference(ridge_img).min_vertex().unwrap();
                    let cur = vmap[y as usize];
                    if cur != 0 {
                        if cur != y_img {
                            return None;
                        }
                    } else {
                        if used[y_img as usize] {
                            return None;
                        }
                        vmap[y as usize] = y_img;
                        used[y_img as usize] = true;
                    }
                    fimg[j] = Some(partner);
                    queue.push_back(j);
                }
            }
        }
    }
    debug_assert!(fimg.iter().all(|x| x.is_some()));
    let pairs: Vec<(u8, u8)> = m1
        .support()
        .iter()
        .map(|v| (v, vmap[v as usize]))
        .collect();
    Some(pairs)
}

fn apply_vmap(vmap: &[u8; 65], s: VertexSet) -> VertexSet {
    let mut out = VertexSet::EMPTY;
    for v in s.iter() {
        debug_assert_ne!(vmap[v as usize], 0);
        out = out.with(vmap[v as usize]);
    }
    out
}

/// Canonical key: equal exactly for isomorphic complexes.
///
/// Layout: support size, f-vector, incidence determinant, then the
/// lexicographically smallest facet-discovery sequence over all seed flags
/// (facet plus vertex ordering), with vertices renamed in discovery order.
/// Complexes on `d+2` vertices short-circuit to a fixed tag (the boundary of
/// the simplex is the only strongly connected pseudomanifold there).
///
/// The input must be strongly connected — the discovery walk crosses ridges,
/// so it can only name one facet-ridge component.
pub fn canonical_key(m: &SimplicialComplex) -> String {
    assert!(
        m.is_strongly_connected(),
        "canonical_key needs a strongly connected complex"
    );
    let support = m.support();
    let s = support.len();
    let d = m.dim() as usize;
    let head = format!(
        "s{};f{:?};det{}",
        s,
        m.f_vector(),
        as_determinant(m)
    );
    if s == d + 2 {
        return format!("{head};simplex");
    }
    let seq = minimal_discovery_sequence(m);
    let body: Vec<String> = seq.iter().map(|x| format!("{x:x}")).collect();
    format!("{head};{}", body.join("."))
}

/// Smallest facet-mask sequence over a relabel-invariant set of (seed
/// facet, vertex ordering) flags. Vertices are relabeled in discovery
/// order, so the sequence only depends on the isomorphism class.
///
/// Trying every flag is correct but factorial in `d`; instead flags are
/// restricted to those minimizing a degree/pair-degree signature. The
/// signature is preserved by isomorphisms, so the restricted flag set — and
/// with it the minimal sequence — is still an isomorphism invariant, and
/// any sequence uniquely reconstructs the complex, so keys stay complete.
fn minimal_discovery_sequence(m: &SimplicialComplex) -> Vec<u64> {
    let ridge_index = m.ridge_index();
    let pd = PairDegrees::of(m);
    let nf = m.n_facets();

    // Pass 1: globally minimal ordering signature and the facets attaining
    // it. The signature of an ordering v_0..v_d concatenates per position k
    // the column (deg v_k, pairdeg(v_0,v_k), .., pairdeg(v_{k-1},v_k)).
    let mut global: Option<Vec<u32>> = None;
    let mut seeds: Vec<usize> = Vec::new();
    for i in 0..nf {
        let verts = m.facets()[i].vertices();
        let mut prefix = Vec::with_capacity(verts.len());
        let mut sig = Vec::new();
        let mut attained = false;
        let mut lowered = false;
        signature_scan(
            &pd,
            &verts,
            &mut prefix,
            &mut sig,
            &mut global,
            &mut attained,
            &mut lowered,
        );
        if lowered {
            seeds.clear();
        }
        if attained {
            seeds.push(i);
        }
    }
    debug_assert!(!seeds.is_empty());

    // Pass 2: run the discovery BFS for exactly the orderings matching the
    // minimal signature.
    let target = global.expect("nonempty facet");
    let mut best: Option<Vec<u64>> = None;
    for &seed in &seeds {
        let verts = m.facets()[seed].vertices();
        let mut prefix = Vec::with_capacity(verts.len());
        matching_orderings(&pd, &verts, &target, &mut prefix, &mut |perm| {
            run_discovery(m, &ridge_index, seed, perm, &mut best);
        });
    }
    best.expect("at least one flag")
}

/// Depth-first minimization of the ordering signature of one facet against
/// the running global minimum; `attained` is set when some ordering of this
/// facet matches the (possibly updated) global minimum, `lowered` when this
/// facet strictly improved it.
#[allow(clippy::too_many_arguments)]
fn signature_scan(
    pd: &PairDegrees,
    verts: &[u8],
    prefix: &mut Vec<u8>,
    sig: &mut Vec<u32>,
    global: &mut Option<Vec<u32>>,
    attained: &mut bool,
    lowered: &mut bool,
) {
    if prefix.len() == verts.len() {
        match global.as_mut() {
            Some(g) => match sig.as_slice().cmp(g) {
                std::cmp::Ordering::Less => {
                    *g = sig.clone();
                    *attained = true;
                    *lowered = true;
                }
                std::cmp::Ordering::Equal => *attained = true,
                std::cmp::Ordering::Greater => {}
            },
            None => {
                *global = Some(sig.clone());
                *attained = true;
                *lowered = true;
            }
        }
        return;
    }
    for &v in verts {
        if prefix.contains(&v) {
            continue;
        }
        let mark = sig.len();
        sig.push(pd.get(v, v));
        for &u in prefix.iter() {
            sig.push(pd.get(u, v));
        }
        // prune branches that are already lexicographically worse
        let worse = match global.as_ref() {
            Some(g) => sig.as_slice() > &g[..sig.len()],
            None => false,
        };
        if !worse {
            prefix.push(v);
            signature_scan(pd, verts, prefix, sig, global, attained, lowered);
            prefix.pop();
        }
        sig.truncate(mark);
    }
}

/// Enumerates the orderings of `verts` whose signature equals `target`.
fn matching_orderings(
    pd: &PairDegrees,
    verts: &[u8],
    target: &[u32],
    prefix: &mut Vec<u8>,
    visit: &mut impl FnMut(&[u8]),
) {
    if prefix.len() == verts.len() {
        visit(prefix);
        return;
    }
    let start = prefix.len() * (prefix.len() + 1) / 2;
    for &v in verts {
        if prefix.contains(&v) {
            continue;
        }
        if pd.get(v, v) != target[start] {
            continue;
        }
        if prefix
            .iter()
            .enumerate()
            .any(|(j, &u)| pd.get(u, v) != target[start + 1 + j])
        {
            continue;
        }
        prefix.push(v);
        matching_orderings(pd, verts, target, prefix, visit);
        prefix.pop();
    }
}

/// One BFS relabeling run; replaces `best` if the produced sequence is
/// smaller, aborts as soon as it is larger.
fn run_discovery(
    m: &SimplicialComplex,
    ridge_index: &HashMap<VertexSet, Vec<usize>>,
    seed: usize,
    seed_order: &[u8],
    best: &mut Option<Vec<u64>>,
) {
    let d1 = seed_order.len(); // d + 1
    let mut label = [0u8; 65];
    let mut next_label = 0u8;
    for &v in seed_order {
        next_label += 1;
        label[v as usize] = next_label;
    }
    let nf = m.n_facets();
    let mut img: Vec<u64> = vec![0; nf];
    let mut visited = vec![false; nf];
    visited[seed] = true;
    img[seed] = (1u64 << d1) - 1;
    let mut seq: Vec<u64> = Vec::with_capacity(nf - 1);
    let mut tied = best.is_some();
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(seed);
    while let Some(i) = queue.pop_front() {
        let f = m.facets()[i];
        // Cross ridges in increasing lex order of the relabeled ridge:
        // drop the largest assigned label first.
        let mut verts = f.vertices();
        verts.sort_by_key(|&v| std::cmp::Reverse(label[v as usize]));
        for v in verts {
            let ridge = f.without(v);
            let pair = &ridge_index[&ridge];
            let j = if pair[0] == i { pair[1] } else { pair[0] };
            if visited[j] {
                continue;
            }
            visited[j] = true;
            let y = m.facets()[j].difference(ridge).min_vertex().unwrap();
            if label[y as usize] == 0 {
                next_label += 1;
                label[y as usize] = next_label;
            }
            let mask = (img[i] & !(1u64 << (label[v as usize] - 1)))
                | 1u64 << (label[y as usize] - 1);
            img[j] = mask;
            if tied {
                let b = best.as_ref().unwrap();
                match mask.cmp(&b[seq.len()]) {
                    std::cmp::Ordering::Greater => return,
                    std::cmp::Ordering::Less => tied = false,
                    std::cmp::Ordering::Equal => {}
                }
            }
            seq.push(mask);
            queue.push_back(j);
        }
    }
    debug_assert_eq!(seq.len(), nf - 1);
    if best.is_none() || !tied {
        *best = Some(seq);
    }
}

/// Surface-count inequality `C(n-4,3) >= 10 (chi - 2)` constraining how
/// large the Euler characteristic of an `n`-vertex 4-manifold can get.
pub fn kuehnel_bound_check(n: u8, chi: i64) -> bool {
    binomial(n as i64 - 4, 3) >= 10 * (chi - 2)
}

fn binomial(n: i64, k: i64) -> i64 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    let mut r: i64 = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// What the vertex-count bound forces about the topology of a combinatorial
/// `d`-manifold on `n` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundVerdict {
    MustBeSphere,
    SphereOrProjectiveLike,
    Unconstrained,
}

/// Below `3 ceil(d/2) + 3` vertices only spheres exist; at exactly that
/// count, non-spheres exist only in the projective-plane-like dimensions
/// 2, 4, 8, 16.
pub fn brehm_kuehnel_bound(n: u8, d: u8) -> BoundVerdict {
    let bound = 3 * d.div_ceil(2) as u16 + 3;
    if (n as u16) < bound {
        BoundVerdict::MustBeSphere
    } else if n as u16 == bound {
        if matches!(d, 2 | 4 | 8 | 16) {
            BoundVerdict::SphereOrProjectiveLike
        } else {
            BoundVerdict::MustBeSphere
        }
    } else {
        BoundVerdict::Unconstrained
    }
}

/// Classification status of a census record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RecordStatus {
    /// Emitted by the search and passed the cheap link conditions only.
    Candidate,
    /// Vertex link verified as a sphere by bistellar reduction.
    VerifiedManifold,
    /// The complex itself reduced to the boundary of a simplex.
    Sphere,
    /// Identified with a named topological type.
    Typed(String),
}

/// One orbit generator of a record's facet list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitRep {
    pub rep: Vec<u8>,
    pub size: u64,
}

/// A census entry: a vertex-transitive complex together with the acting
/// group, discovery metadata, and verification results.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifoldRecord {
    /// Census symbol, e.g. `^3 10^1_2`; assigned by the census store.
    #[serde(default)]
    pub symbol: String,
    pub n: u8,
    pub d: u8,
    /// Name of the acting group this record was discovered with (not
    /// certified to be the full symmetry group).
    pub group: String,
    pub group_order: u64,
    pub group_index: Option<u32>,
    pub orbit_reps: Vec<OrbitRep>,
    pub f_vector: Vec<u64>,
    pub as_det: String,
    pub status: RecordStatus,
    pub homology: Option<HomologyProfile>,
    /// RNG seed used for the bistellar verification of this record.
    pub seed: Option<u64>,
}

impl ManifoldRecord {
    /// Rebuilds the complex from the stored orbit representatives.
    pub fn complex(
        &self,
        g: &crate::groups::PermutationGroup,
    ) -> Result<SimplicialComplex, crate::complex::ComplexError> {
        let reps: Vec<VertexSet> = self
            .orbit_reps
            .iter()
            .map(|o| VertexSet::from_vertices(&o.rep))
            .collect();
        SimplicialComplex::from_orbits(g, &reps)
    }
}
