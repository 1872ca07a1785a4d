//! Integer and mod-2 simplicial homology, duality and link filters, and an
//! edge-path fundamental-group presentation.

use std::collections::{HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::vertex_set::VertexSet;

/// Homology summary of a complex: integer Betti numbers, torsion
/// coefficients per dimension (elementary divisors > 1, as decimal strings),
/// and Betti numbers over the two-element field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyProfile {
    pub betti: Vec<u64>,
    pub torsion: Vec<Vec<String>>,
    pub z2_betti: Vec<u64>,
}

impl HomologyProfile {
    /// Tuple notation, e.g. `(Z, 0, Z_2, 0, 0, Z)` or `(Z, Z^2, Z)`.
    pub fn tuple_notation(&self) -> String {
        let parts: Vec<String> = (0..self.betti.len())
            .map(|k| {
                let mut terms: Vec<String> = Vec::new();
                match self.betti[k] {
                    0 => {}
                    1 => terms.push("Z".into()),
                    b => terms.push(format!("Z^{b}")),
                }
                for t in &self.torsion[k] {
                    terms.push(format!("Z_{t}"));
                }
                if terms.is_empty() {
                    "0".into()
                } else {
                    terms.join(" + ")
                }
            })
            .collect();
        format!("({})", parts.join(", "))
    }
}

/// Boundary matrices `∂_1 .. ∂_d` with faces in lexicographic order and the
/// usual alternating signs: deleting the vertex at position `i` (ascending)
/// contributes `(-1)^i`.
pub fn boundary_matrices(m: &SimplicialComplex) -> Vec<Vec<Vec<i64>>> {
    let faces = m.faces_by_dim();
    let d = faces.len() - 1;
    let mut out = Vec::with_capacity(d);
    for k in 1..=d {
        let row_of: HashMap<VertexSet, usize> = faces[k - 1]
            .iter()
            .enumerate()
            .map(|(i, &f)| (f, i))
            .collect();
        let mut mat = vec![vec![0i64; faces[k].len()]; faces[k - 1].len()];
        for (j, &f) in faces[k].iter().enumerate() {
            for (pos, v) in f.iter().enumerate() {
                let i = row_of[&f.without(v)];
                mat[i][j] = if pos % 2 == 0 { 1 } else { -1 };
            }
        }
        out.push(mat);
    }
    out
}

/// Diagonal of the Smith normal form: the number of nonzero entries and
/// their absolute values in divisibility order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfOutcome {
    pub rank: usize,
    pub divisors: Vec<BigInt>,
}

/// Exact Smith normal form of an integer matrix. Runs in 128-bit arithmetic
/// with overflow checks and restarts in arbitrary precision if an
/// intermediate value ever overflows.
pub fn smith_normal_form(mat: &[Vec<i64>]) -> SnfOutcome {
    let narrow: Vec<Vec<i128>> = mat
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    if let Some((rank, divisors)) = snf_generic(narrow) {
        return SnfOutcome {
            rank,
            divisors: divisors.into_iter().map(BigInt::from).collect(),
        };
    }
    let wide: Vec<Vec<BigInt>> = mat
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let (rank, divisors) = snf_generic(wide).expect("arbitrary precision cannot overflow");
    SnfOutcome { rank, divisors }
}

/// Integer scalar interface for the reduction: all arithmetic is checked so
/// the fixed-width instantiation can report overflow.
trait SnfScalar: Clone + PartialEq {
    fn is_zero_val(&self) -> bool;
    fn abs_val(&self) -> Self;
    fn cmp_abs(&self, other: &Self) -> std::cmp::Ordering;
    /// `self - q * x`.
    fn sub_mul(&self, q: &Self, x: &Self) -> Option<Self>;
    /// Truncated quotient; `other` nonzero.
    fn div_trunc(&self, other: &Self) -> Option<Self>;
    fn add(&self, other: &Self) -> Option<Self>;
    /// `self | other`; `self` nonzero.
    fn divides(&self, other: &Self) -> bool;
}

impl SnfScalar for i128 {
    fn is_zero_val(&self) -> bool {
        *self == 0
    }
    fn abs_val(&self) -> Self {
        self.abs()
    }
    fn cmp_abs(&self, other: &Self) -> std::cmp::Ordering {
        self.unsigned_abs().cmp(&other.unsigned_abs())
    }
    fn sub_mul(&self, q: &Self, x: &Self) -> Option<Self> {
        self.checked_sub(q.checked_mul(*x)?)
    }
    fn div_trunc(&self, other: &Self) -> Option<Self> {
        self.checked_div(*other)
    }
    fn add(&self, other: &Self) -> Option<Self> {
        self.checked_add(*other)
    }
    fn divides(&self, other: &Self) -> bool {
        other % self == 0
    }
}

impl SnfScalar for BigInt {
    fn is_zero_val(&self) -> bool {
        self.is_zero()
    }
    fn abs_val(&self) -> Self {
        self.abs()
    }
    fn cmp_abs(&self, other: &Self) -> std::cmp::Ordering {
        self.abs().cmp(&other.abs())
    }
    fn sub_mul(&self, q: &Self, x: &Self) -> Option<Self> {
        Some(self - q * x)
    }
    fn div_trunc(&self, other: &Self) -> Option<Self> {
        Some(self / other)
    }
    fn add(&self, other: &Self) -> Option<Self> {
        Some(self + other)
    }
    fn divides(&self, other: &Self) -> bool {
        (other % self).is_zero()
    }
}

fn swap_cols<T>(a: &mut [Vec<T>], x: usize, y: usize) {
    if x != y {
        for row in a.iter_mut() {
            row.swap(x, y);
        }
    }
}

/// Diagonalization by row/column reduction with greedy smallest-pivot
/// selection; returns `None` on arithmetic overflow.
fn snf_generic<T: SnfScalar>(mut a: Vec<Vec<T>>) -> Option<(usize, Vec<T>)> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut t = 0;
    while t < rows && t < cols {
        // Smallest nonzero entry of the remaining block becomes the pivot.
        let mut piv: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if a[i][j].is_zero_val() {
                    continue;
                }
                let better = match piv {
                    Some((pi, pj)) => {
                        a[i][j].cmp_abs(&a[pi][pj]) == std::cmp::Ordering::Less
                    }
                    None => true,
                };
                if better {
                    piv = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = piv else { break };
        a.swap(t, pi);
        swap_cols(&mut a, t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a[i][t].is_zero_val() {
                    continue;
                }
                let q = a[i][t].div_trunc(&a[t][t])?;
                if !q.is_zero_val() {
                    for j in t..cols {
                        a[i][j] = a[i][j].sub_mul(&q, &a[t][j])?;
                    }
                }
                if !a[i][t].is_zero_val() {
                    // Remainder is smaller than the pivot; promote it.
                    a.swap(t, i);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            for j in t + 1..cols {
                if a[t][j].is_zero_val() {
                    continue;
                }
                let q = a[t][j].div_trunc(&a[t][t])?;
                if !q.is_zero_val() {
                    for i in t..rows {
                        a[i][j] = a[i][j].sub_mul(&q, &a[i][t])?;
                    }
                }
                if !a[t][j].is_zero_val() {
                    swap_cols(&mut a, t, j);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // Force the divisibility chain: the pivot must divide the rest.
            let mut fixed = true;
            'scan: for i in t + 1..rows {
                for j in t + 1..cols {
                    if !a[t][t].divides(&a[i][j]) {
                        for j2 in t..cols {
                            let tmp = a[t][j2].add(&a[i][j2])?;
                            a[t][j2] = tmp;
                        }
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        t += 1;
    }
    let divisors = (0..t).map(|k| a[k][k].abs_val()).collect();
    Some((t, divisors))
}

/// Rank over the two-element field via packed bit rows.
pub fn z2_rank(mat: &[Vec<i64>]) -> usize {
    let rows = mat.len();
    if rows == 0 {
        return 0;
    }
    let cols = mat[0].len();
    let words = cols.div_ceil(64);
    let mut packed: Vec<Vec<u64>> = mat
        .iter()
        .map(|r| {
            let mut w = vec![0u64; words];
            for (j, &x) in r.iter().enumerate() {
                if x & 1 != 0 {
                    w[j / 64] |= 1 << (j % 64);
                }
            }
            w
        })
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        let (wi, bit) = (col / 64, col % 64);
        let Some(p) = (rank..rows).find(|&r| packed[r][wi] >> bit & 1 == 1) else {
            continue;
        };
        packed.swap(rank, p);
        let pivot_row = packed[rank].clone();
        for (r, row) in packed.iter_mut().enumerate() {
            if r != rank && row[wi] >> bit & 1 == 1 {
                for (w, p) in row.iter_mut().zip(&pivot_row) {
                    *w ^= p;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Betti numbers over the two-element field only; much cheaper than the
/// integer computation, used as a standalone filter.
pub fn z2_betti_numbers(m: &SimplicialComplex) -> Vec<u64> {
    let faces = m.faces_by_dim();
    let d = faces.len() - 1;
    let mats = boundary_matrices(m);
    let mut rank2 = vec![0usize; d + 2];
    for k in 1..=d {
        rank2[k] = z2_rank(&mats[k - 1]);
    }
    (0..=d)
        .map(|k| (faces[k].len() - rank2[k] - rank2[k + 1]) as u64)
        .collect()
}

/// Full integer homology by Smith normal form, plus mod-2 Betti numbers.
pub fn integer_homology(m: &SimplicialComplex) -> HomologyProfile {
    let faces = m.faces_by_dim();
    let d = faces.len() - 1;
    let mats = boundary_matrices(m);
    let mut rank = vec![0usize; d + 2];
    let mut rank2 = vec![0usize; d + 2];
    let mut torsion: Vec<Vec<String>> = vec![Vec::new(); d + 1];
    for k in 1..=d {
        let out = smith_normal_form(&mats[k - 1]);
        rank[k] = out.rank;
        rank2[k] = z2_rank(&mats[k - 1]);
        torsion[k - 1] = out
            .divisors
            .iter()
            .filter(|x| **x > BigInt::one())
            .map(|x| x.to_string())
            .collect();
    }
    let betti = (0..=d)
        .map(|k| (faces[k].len() - rank[k] - rank[k + 1]) as u64)
        .collect();
    let z2_betti = (0..=d)
        .map(|k| (faces[k].len() - rank2[k] - rank2[k + 1]) as u64)
        .collect();
    HomologyProfile {
        betti,
        torsion,
        z2_betti,
    }
}

/// Mod-2 Betti numbers must read the same in both directions.
pub fn poincare_z2_check(m: &SimplicialComplex) -> bool {
    let z = z2_betti_numbers(m);
    (0..z.len()).all(|k| z[k] == z[z.len() - 1 - k])
}

/// The link of vertex 1 (or the smallest support vertex) must have the
/// reduced homology of a `(d-1)`-sphere: free, with a single generator at
/// the top and nothing in between.
pub fn link_sphere_homology_check(m: &SimplicialComplex) -> bool {
    let d = m.dim();
    if d == 0 {
        return false;
    }
    let v = if m.support().contains(1) {
        1
    } else {
        m.support().min_vertex().expect("nonempty complex")
    };
    let Some(link) = m.link(VertexSet::singleton(v)) else {
        return false;
    };
    let h = integer_homology(&link);
    let ld = d as usize - 1;
    if h.betti.len() != ld + 1 {
        return false;
    }
    for k in 0..=ld {
        let expect = match (k, ld) {
            (0, 0) => 2,
            (0, _) => 1,
            (k, ld) if k == ld => 1,
            _ => 0,
        };
        if h.betti[k] != expect || !h.torsion[k].is_empty() {
            return false;
        }
    }
    true
}

/// Edge-path group presentation read off a spanning tree: one generator per
/// non-tree edge, one relator per triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    /// Non-tree edges `(a, b)` with `a < b`, one generator each.
    pub generators: Vec<(u8, u8)>,
    /// Words as `(generator index, ±1)` sequences.
    pub relators: Vec<Vec<(usize, i8)>>,
}

impl Presentation {
    /// `(rank, torsion coefficients)` of the abelianized group; the torsion
    /// entries are the elementary divisors > 1 in divisibility order.
    pub fn abelianization(&self) -> (u64, Vec<String>) {
        let mut mat = vec![vec![0i64; self.generators.len()]; self.relators.len()];
        for (i, w) in self.relators.iter().enumerate() {
            for &(g, s) in w {
                mat[i][g] += s as i64;
            }
        }
        let out = smith_normal_form(&mat);
        let rank = self.generators.len() as u64 - out.rank as u64;
        let torsion = out
            .divisors
            .iter()
            .filter(|d| **d > BigInt::one())
            .map(|d| d.to_string())
            .collect();
        (rank, torsion)
    }
}

fn free_reduce(word: &mut Vec<(usize, i8)>) {
    let mut out: Vec<(usize, i8)> = Vec::with_capacity(word.len());
    for &(g, s) in word.iter() {
        if let Some(&(h, t)) = out.last() {
            if h == g && t == -s {
                out.pop();
                continue;
            }
        }
        out.push((g, s));
    }
    *word = out;
}

/// Fundamental-group presentation of a connected complex. Simplification is
/// deliberately shallow: identity relators are dropped, and a length-one
/// relator kills its generator everywhere; nothing more.
pub fn pi1_presentation(m: &SimplicialComplex) -> Presentation {
    let edges = m.faces_of_dim(1);
    let support = m.support();
    // Breadth-first spanning tree of the 1-skeleton.
    let mut adj: HashMap<u8, Vec<u8>> = HashMap::new();
    for e in &edges {
        let vs = e.vertices();
        adj.entry(vs[0]).or_default().push(vs[1]);
        adj.entry(vs[1]).or_default().push(vs[0]);
    }
    for nbrs in adj.values_mut() {
        nbrs.sort_unstable();
    }
    let root = support.min_vertex().expect("nonempty complex");
    let mut tree: HashSet<VertexSet> = HashSet::new();
    let mut seen: HashSet<u8> = HashSet::new();
    seen.insert(root);
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &w in adj.get(&v).into_iter().flatten() {
            if seen.insert(w) {
                tree.insert(VertexSet::from_vertices(&[v, w]));
                queue.push_back(w);
            }
        }
    }
    debug_assert_eq!(seen.len(), support.len(), "1-skeleton must be connected");

    let generators: Vec<(u8, u8)> = edges
        .iter()
        .filter(|e| !tree.contains(e))
        .map(|e| {
            let vs = e.vertices();
            (vs[0], vs[1])
        })
        .collect();
    let gidx: HashMap<VertexSet, usize> = generators
        .iter()
        .enumerate()
        .map(|(i, &(a, b))| (VertexSet::from_vertices(&[a, b]), i))
        .collect();

    let mut relators: Vec<Vec<(usize, i8)>> = Vec::new();
    for tri in m.faces_of_dim(2) {
        let vs = tri.vertices();
        let (a, b, c) = (vs[0], vs[1], vs[2]);
        let mut word: Vec<(usize, i8)> = Vec::new();
        for (x, y, s) in [(a, b, 1i8), (b, c, 1), (a, c, -1)] {
            if let Some(&g) = gidx.get(&VertexSet::from_vertices(&[x, y])) {
                word.push((g, s));
            }
        }
        free_reduce(&mut word);
        if !word.is_empty() {
            relators.push(word);
        }
    }

    // Kill generators forced trivial by length-one relators.
    let mut dead = vec![false; generators.len()];
    loop {
        let Some(g) = relators
            .iter()
            .find(|w| w.len() == 1)
            .map(|w| w[0].0)
        else {
            break;
        };
        dead[g] = true;
        for w in relators.iter_mut() {
            w.retain(|&(h, _)| h != g);
            free_reduce(w);
        }
        relators.retain(|w| !w.is_empty());
    }
    let mut newindex = vec![usize::MAX; generators.len()];
    let mut live: Vec<(u8, u8)> = Vec::new();
    for (i, &g) in generators.iter().enumerate() {
        if !dead[i] {
            newindex[i] = live.len();
            live.push(g);
        }
    }
    for w in relators.iter_mut() {
        for (g, _) in w.iter_mut() {
            *g = newindex[*g];
        }
    }
    Presentation {
        generators: live,
        relators,
    }
}
