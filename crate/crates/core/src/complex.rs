//! Pure simplicial complexes on a small labeled vertex set.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use thiserror::Error;

use crate::groups::PermutationGroup;
use crate::orbits::orbit_of_subset;
use crate::vertex_set::{VertexSet, MAX_VERTEX};

/// Face counts `(f_0, f_1, ..., f_d)`.
pub type FVector = Vec<u64>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("complex has no facets")]
    Empty,
    #[error("facets have mixed dimensions")]
    NotPure,
    #[error("vertex label {0} outside 1..={1}")]
    LabelOutOfRange(u8, u8),
    #[error("duplicate facet {0}")]
    DuplicateFacet(String),
    #[error("parse error at line {line}: {problem}")]
    Parse { line: usize, problem: String },
}

/// A pure simplicial complex given by its facet list.
///
/// `n` bounds the vertex label space; a complex need not use every label
/// (links, for example, keep the ambient labels of their parent). Facets are
/// kept sorted lexicographically and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: u8,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    pub fn new(n: u8, mut facets: Vec<VertexSet>) -> Result<Self, ComplexError> {
        if n == 0 || n > MAX_VERTEX {
            return Err(ComplexError::LabelOutOfRange(n, MAX_VERTEX));
        }
        if facets.is_empty() {
            return Err(ComplexError::Empty);
        }
        let k = facets[0].len();
        if k == 0 {
            return Err(ComplexError::Empty);
        }
        for f in &facets {
            if f.len() != k {
                return Err(ComplexError::NotPure);
            }
            if let Some(v) = f.max_vertex() {
                if v > n {
                    return Err(ComplexError::LabelOutOfRange(v, n));
                }
            }
        }
        facets.sort();
        facets.dedup();
        Ok(SimplicialComplex { n, facets })
    }

    /// Union of the orbits of the given representatives; overlapping orbits
    /// merge silently.
    pub fn from_orbits(
        g: &PermutationGroup,
        reps: &[VertexSet],
    ) -> Result<Self, ComplexError> {
        let mut facets = Vec::new();
        for &r in reps {
            facets.extend(orbit_of_subset(g, r).members);
        }
        SimplicialComplex::new(g.degree(), facets)
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    /// Dimension `d` (facets have `d + 1` vertices).
    pub fn dim(&self) -> u8 {
        self.facets[0].len() as u8 - 1
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn n_facets(&self) -> usize {
        self.facets.len()
    }

    /// Union of all facet labels.
    pub fn support(&self) -> VertexSet {
        VertexSet(self.facets.iter().fold(0, |acc, f| acc | f.0))
    }

    pub fn is_spanning(&self) -> bool {
        self.support() == VertexSet::full(self.n)
    }

    pub fn contains_facet(&self, f: VertexSet) -> bool {
        self.facets.binary_search(&f).is_ok()
    }

    /// True if `face` is a face of some facet.
    pub fn contains_face(&self, face: VertexSet) -> bool {
        self.facets.iter().any(|f| face.is_subset_of(*f))
    }

    /// All faces of each dimension, as sorted deduplicated lists indexed by
    /// dimension `0..=d`.
    pub fn faces_by_dim(&self) -> Vec<Vec<VertexSet>> {
        let d = self.dim() as usize;
        let mut sets: Vec<HashSet<u64>> = vec![HashSet::new(); d + 1];
        for f in &self.facets {
            // Enumerate all nonempty submasks of the facet.
            let m = f.0;
            let mut s = m;
            while s != 0 {
                sets[s.count_ones() as usize - 1].insert(s);
                s = (s - 1) & m;
            }
        }
        sets.into_iter()
            .map(|hs| {
                let mut v: Vec<VertexSet> = hs.into_iter().map(VertexSet).collect();
                v.sort();
                v
            })
            .collect()
    }

    pub fn faces_of_dim(&self, k: u8) -> Vec<VertexSet> {
        self.faces_by_dim()
            .into_iter()
            .nth(k as usize)
            .unwrap_or_default()
    }

    pub fn f_vector(&self) -> FVector {
        self.faces_by_dim().iter().map(|v| v.len() as u64).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(k, &f)| if k % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }

    /// Facets containing `face`.
    pub fn star_facets(&self, face: VertexSet) -> Vec<VertexSet> {
        self.facets
            .iter()
            .copied()
            .filter(|f| face.is_subset_of(*f))
            .collect()
    }

    /// Facets of the link of `face`: `{ f \ face : f a facet containing face }`.
    /// Contains the empty set exactly when `face` is itself a facet.
    pub fn link_facets(&self, face: VertexSet) -> Vec<VertexSet> {
        self.star_facets(face)
            .into_iter()
            .map(|f| f.difference(face))
            .collect()
    }

    /// Link as a complex in the ambient label space, or `None` if `face` is
    /// not a proper face (absent, or a facet).
    pub fn link(&self, face: VertexSet) -> Option<SimplicialComplex> {
        let lf = self.link_facets(face);
        if lf.is_empty() || lf[0].is_empty() {
            return None;
        }
        Some(SimplicialComplex::new(self.n, lf).expect("link of a proper face"))
    }

    /// Map from each ridge to the indices of the facets containing it.
    pub fn ridge_index(&self) -> HashMap<VertexSet, Vec<usize>> {
        let mut map: HashMap<VertexSet, Vec<usize>> = HashMap::new();
        for (i, f) in self.facets.iter().enumerate() {
            for v in f.iter() {
                map.entry(f.without(v)).or_default().push(i);
            }
        }
        map
    }

    /// Every ridge lies in exactly two facets.
    pub fn is_pseudomanifold(&self) -> bool {
        self.pseudomanifold_violation().is_none()
    }

    /// A ridge with facet count != 2, if one exists.
    pub fn pseudomanifold_violation(&self) -> Option<(VertexSet, usize)> {
        let mut worst: Option<(VertexSet, usize)> = None;
        for (r, fs) in self.ridge_index() {
            if fs.len() != 2 {
                let better = match worst {
                    Some((wr, _)) => r < wr,
                    None => true,
                };
                if better {
                    worst = Some((r, fs.len()));
                }
            }
        }
        worst
    }

    /// Connectivity of the 1-skeleton (on the support vertices).
    pub fn is_connected(&self) -> bool {
        let support = self.support();
        let mut uf = UnionFind::new(self.n as usize);
        for f in &self.facets {
            let mut it = f.iter();
            if let Some(first) = it.next() {
                for v in it {
                    uf.union(first as usize - 1, v as usize - 1);
                }
            }
        }
        let mut roots = HashSet::new();
        for v in support.iter() {
            roots.insert(uf.find(v as usize - 1));
        }
        roots.len() <= 1
    }

    /// Connectivity of the facet-ridge adjacency graph.
    pub fn is_strongly_connected(&self) -> bool {
        let mut uf = UnionFind::new(self.facets.len());
        for (_, fs) in self.ridge_index() {
            for w in fs.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        let root = uf.find(0);
        (1..self.facets.len()).all(|i| uf.find(i) == root)
    }

    /// Whether the facets admit a coherent orientation (signs such that the
    /// two induced orientations on every ridge are opposite). Meaningful for
    /// pseudomanifolds; returns `false` when some ridge has more than two
    /// facets and a consistent assignment fails.
    pub fn is_orientable(&self) -> bool {
        let ridge_index = self.ridge_index();
        let mut sign = vec![0i8; self.facets.len()];
        for start in 0..self.facets.len() {
            if sign[start] != 0 {
                continue;
            }
            sign[start] = 1;
            let mut queue = vec![start];
            while let Some(i) = queue.pop() {
                let f = self.facets[i];
                for (p, v) in f.iter().enumerate() {
                    let ridge = f.without(v);
                    for &j in &ridge_index[&ridge] {
                        if j == i {
                            continue;
                        }
                        let g = self.facets[j];
                        let q = g
                            .iter()
                            .position(|w| !ridge.contains(w))
                            .expect("ridge is a subface");
                        // Compatible: induced ridge orientations opposite.
                        let want = -sign[i] * parity_sign(p) * parity_sign(q);
                        if sign[j] == 0 {
                            sign[j] = want;
                            queue.push(j);
                        } else if sign[j] != want {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Relabels vertices through `map` (1-based, injective on the support).
    pub fn relabel(&self, new_n: u8, map: impl Fn(u8) -> u8) -> Result<Self, ComplexError> {
        let facets = self
            .facets
            .iter()
            .map(|f| VertexSet::from_vertices(&f.iter().map(&map).collect::<Vec<_>>()))
            .collect();
        SimplicialComplex::new(new_n, facets)
    }

    /// Serializes as the standard file format: header `n d`, then one facet
    /// per line as sorted space-separated labels.
    pub fn to_file_string(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.dim());
        for f in &self.facets {
            let labels: Vec<String> = f.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "{}", labels.join(" "));
        }
        out
    }

    /// Facet list in GAP's list syntax.
    pub fn to_gap_string(&self) -> String {
        let inner: Vec<String> = self
            .facets
            .iter()
            .map(|f| {
                let labels: Vec<String> = f.iter().map(|v| v.to_string()).collect();
                format!("[{}]", labels.join(","))
            })
            .collect();
        format!("[{}]", inner.join(","))
    }

    /// Parses the standard file format. Blank lines and `#` comments are
    /// ignored.
    pub fn parse(text: &str) -> Result<Self, ComplexError> {
        let mut header: Option<(u8, u8)> = None;
        let mut facets = Vec::new();
        let mut seen = HashSet::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let nums: Result<Vec<u8>, _> =
                line.split_whitespace().map(|t| t.parse::<u8>()).collect();
            let nums = nums.map_err(|e| ComplexError::Parse {
                line: lineno + 1,
                problem: e.to_string(),
            })?;
            match header {
                None => {
                    if nums.len() != 2 {
                        return Err(ComplexError::Parse {
                            line: lineno + 1,
                            problem: "expected header `n d`".into(),
                        });
                    }
                    header = Some((nums[0], nums[1]));
                }
                Some((n, d)) => {
                    if nums.len() != d as usize + 1 {
                        return Err(ComplexError::Parse {
                            line: lineno + 1,
                            problem: format!(
                                "facet has {} vertices, expected {}",
                                nums.len(),
                                d + 1
                            ),
                        });
                    }
                    let mut sorted = nums.clone();
                    sorted.sort_unstable();
                    sorted.dedup();
                    if sorted.len() != nums.len() {
                        return Err(ComplexError::Parse {
                            line: lineno + 1,
                            problem: "repeated vertex in facet".into(),
                        });
                    }
                    for &v in &sorted {
                        if v == 0 || v > n {
                            return Err(ComplexError::LabelOutOfRange(v, n));
                        }
                    }
                    let f = VertexSet::from_vertices(&sorted);
                    if !seen.insert(f) {
                        return Err(ComplexError::DuplicateFacet(f.to_compact_string()));
                    }
                    facets.push(f);
                }
            }
        }
        let (n, _) = header.ok_or(ComplexError::Empty)?;
        SimplicialComplex::new(n, facets)
    }
}

fn parity_sign(p: usize) -> i8 {
    if p.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Failures of the cheap link-based manifold conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinkDefect {
    NotConnected,
    NotStronglyConnected,
    BadLink {
        face: VertexSet,
        problem: String,
    },
}

impl std::fmt::Display for LinkDefect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LinkDefect::NotConnected => write!(f, "complex is not connected"),
            LinkDefect::NotStronglyConnected => {
                write!(f, "complex is not strongly connected")
            }
            LinkDefect::BadLink { face, problem } => {
                write!(f, "link of {face} {problem}")
            }
        }
    }
}

/// Cheap necessary conditions for being a closed manifold: connectivity
/// (vertex and facet-ridge), plus Euler characteristic and connectivity of
/// the links of low-dimensional faces (vertices, and for higher `d` edges
/// and triangles). Strong connectivity in particular rejects facet-disjoint
/// unions of smaller closed complexes that happen to share vertices.
///
/// With `all_faces = false` only faces through the smallest vertex are
/// tested, which suffices for vertex-transitive complexes; `all_faces = true`
/// checks every vertex, edge, and triangle.
pub fn manifold_link_conditions(
    m: &SimplicialComplex,
    all_faces: bool,
) -> Result<(), LinkDefect> {
    let d = m.dim();
    if !m.is_connected() {
        return Err(LinkDefect::NotConnected);
    }
    if d == 0 {
        return Ok(());
    }
    if !m.is_strongly_connected() {
        return Err(LinkDefect::NotStronglyConnected);
    }
    let v0 = m.support().min_vertex().expect("nonempty complex");
    let max_face_dim = match d {
        1 | 2 => 0u8,
        3 => 1,
        _ => 2,
    };
    for fd in 0..=max_face_dim {
        let faces = m.faces_of_dim(fd);
        for face in faces {
            if !all_faces && !face.contains(v0) {
                continue;
            }
            let sphere_dim = d - fd - 1;
            let lf = m.link_facets(face);
            check_shallow_sphere(m, face, &lf, sphere_dim)?;
        }
    }
    Ok(())
}

/// Euler characteristic / connectivity screen for "is this link plausibly a
/// `sphere_dim`-sphere".
fn check_shallow_sphere(
    m: &SimplicialComplex,
    face: VertexSet,
    link_facets: &[VertexSet],
    sphere_dim: u8,
) -> Result<(), LinkDefect> {
    let defect = |problem: String| LinkDefect::BadLink { face, problem };
    if sphere_dim == 0 {
        return if link_facets.len() == 2 {
            Ok(())
        } else {
            Err(defect(format!(
                "has {} points, expected 2",
                link_facets.len()
            )))
        };
    }
    let link = SimplicialComplex::new(m.n(), link_facets.to_vec())
        .map_err(|e| defect(e.to_string()))?;
    if !link.is_connected() {
        return Err(defect("is not connected".into()));
    }
    let want: i64 = 1 + if sphere_dim.is_multiple_of(2) { 1 } else { -1 };
    let got = link.euler_characteristic();
    if got != want {
        return Err(defect(format!(
            "has Euler characteristic {got}, expected {want}"
        )));
    }
    Ok(())
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn from_lists(n: u8, lists: &[&[u8]]) -> SimplicialComplex {
        let facets = lists.iter().map(|l| VertexSet::from_vertices(l)).collect();
        SimplicialComplex::new(n, facets).unwrap()
    }

    /// The 7-vertex 2-torus.
    pub fn torus_7() -> SimplicialComplex {
        from_lists(
            7,
            &[
                &[1, 2, 4],
                &[1, 2, 6],
                &[1, 3, 4],
                &[1, 3, 7],
                &[1, 5, 6],
                &[1, 5, 7],
                &[2, 3, 5],
                &[2, 3, 7],
                &[2, 4, 5],
                &[2, 6, 7],
                &[3, 4, 6],
                &[3, 5, 6],
                &[4, 5, 7],
                &[4, 6, 7],
            ],
        )
    }

    /// The 6-vertex real projective plane.
    pub fn rp2_6() -> SimplicialComplex {
        from_lists(
            6,
            &[
                &[1, 2, 3],
                &[1, 2, 4],
                &[1, 3, 5],
                &[1, 4, 6],
                &[1, 5, 6],
                &[2, 3, 6],
                &[2, 4, 5],
                &[2, 5, 6],
                &[3, 4, 5],
                &[3, 4, 6],
            ],
        )
    }

    /// The octahedron (boundary of the 3-dimensional cross-polytope),
    /// antipodal pairs {1,4}, {2,5}, {3,6}.
    pub fn octahedron() -> SimplicialComplex {
        from_lists(
            6,
            &[
                &[1, 2, 3],
                &[1, 2, 6],
                &[1, 3, 5],
                &[1, 5, 6],
                &[2, 3, 4],
                &[2, 4, 6],
                &[3, 4, 5],
                &[4, 5, 6],
            ],
        )
    }

    /// Boundary of the `(d+1)`-simplex on `d+2` vertices.
    pub fn boundary_simplex(d: u8) -> SimplicialComplex {
        let n = d + 2;
        let all = VertexSet::full(n);
        let facets = (1..=n).map(|v| all.without(v)).collect();
        SimplicialComplex::new(n, facets).unwrap()
    }
}
