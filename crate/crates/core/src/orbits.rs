//! Orbits of vertex subsets and the facet-orbit / ridge-orbit incidence
//! matrix that drives the enumeration search.

use std::collections::{HashSet, VecDeque};
use std::ops::Range;

use crate::groups::PermutationGroup;
use crate::vertex_set::{k_subsets, VertexSet};

/// One orbit of `k`-subsets. `rep` is the lexicographically smallest member;
/// `members` is the full orbit sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetOrbit {
    pub k: u8,
    pub rep: VertexSet,
    pub members: Vec<VertexSet>,
}

impl SubsetOrbit {
    pub fn size(&self) -> u64 {
        self.members.len() as u64
    }
}

/// Orbit of a single subset under the group generators.
pub fn orbit_of_subset(g: &PermutationGroup, s: VertexSet) -> SubsetOrbit {
    let mut seen: HashSet<u64> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(s.0);
    queue.push_back(s);
    let mut members = vec![s];
    while let Some(cur) = queue.pop_front() {
        for p in g.generators() {
            let im = p.apply_set(cur);
            if seen.insert(im.0) {
                members.push(im);
                queue.push_back(im);
            }
        }
    }
    members.sort();
    SubsetOrbit {
        k: s.len() as u8,
        rep: members[0],
        members,
    }
}

/// All orbits of `k`-subsets of `{1..=n}`, sorted by representative.
pub fn orbits_of_k_subsets(g: &PermutationGroup, k: u8) -> Vec<SubsetOrbit> {
    let n = g.degree();
    let mut visited: HashSet<u64> = HashSet::new();
    let mut orbits = Vec::new();
    for s in k_subsets(n, k as usize) {
        if visited.contains(&s.0) {
            continue;
        }
        let orbit = orbit_of_subset(g, s);
        for m in &orbit.members {
            visited.insert(m.0);
        }
        orbits.push(orbit);
    }
    orbits.sort_by_key(|o| o.rep);
    orbits
}

/// Number of members of `facet_orbit` that contain the representative of
/// `ridge_orbit`. Transitivity makes the count independent of which ridge
/// orbit member is used.
pub fn inclusion_multiplicity(facet_orbit: &SubsetOrbit, ridge_orbit: &SubsetOrbit) -> u32 {
    let rep = ridge_orbit.rep;
    facet_orbit
        .members
        .iter()
        .filter(|m| rep.is_subset_of(**m))
        .count() as u32
}

/// A maximal run of incidence rows sharing the same leading column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub first_col: usize,
    pub rows: Range<usize>,
}

/// Incidence of facet orbits against ridge orbits after pruning.
///
/// Rows are facet orbits ordered by (leading column, representative); this
/// makes leading columns monotone, which the search's abandonment rule
/// relies on. Columns are the surviving ridge orbits in lexicographic order
/// of their representatives. Entries `t` count how many members of the row's
/// orbit contain the column's representative.
#[derive(Debug, Clone)]
pub struct OrbitIncidence {
    pub facet_orbits: Vec<SubsetOrbit>,
    pub ridge_orbits: Vec<SubsetOrbit>,
    entries: Vec<Vec<(usize, u32)>>,
    blocks: Vec<Block>,
}

impl OrbitIncidence {
    pub fn n_rows(&self) -> usize {
        self.facet_orbits.len()
    }

    pub fn n_cols(&self) -> usize {
        self.ridge_orbits.len()
    }

    /// Sparse entries of one row as `(column, t)` pairs, column-sorted.
    pub fn row(&self, r: usize) -> &[(usize, u32)] {
        &self.entries[r]
    }

    pub fn t(&self, r: usize, c: usize) -> u32 {
        self.entries[r]
            .iter()
            .find(|&&(col, _)| col == c)
            .map_or(0, |&(_, t)| t)
    }

    pub fn leading_col(&self, r: usize) -> usize {
        self.entries[r][0].0
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn block_of_row(&self, r: usize) -> &Block {
        self.blocks
            .iter()
            .find(|b| b.rows.contains(&r))
            .expect("row belongs to a block")
    }

    /// Dense copy of the matrix, mainly for display and tests.
    pub fn dense(&self) -> Vec<Vec<u32>> {
        let mut m = vec![vec![0; self.n_cols()]; self.n_rows()];
        for (r, row) in self.entries.iter().enumerate() {
            for &(c, t) in row {
                m[r][c] = t;
            }
        }
        m
    }

    /// Synthetic incidence from a dense matrix with placeholder orbits;
    /// zero rows are dropped and the rest sorted by leading column.
    pub fn from_dense_rows(mut dense: Vec<Vec<u32>>) -> OrbitIncidence {
        dense.retain(|r| r.iter().any(|&x| x > 0));
        dense.sort_by_key(|r| r.iter().position(|&x| x > 0).unwrap());
        let nc = dense.first().map_or(0, |r| r.len());
        let fake = |i: usize| {
            let v = VertexSet::singleton(i as u8 + 1);
            SubsetOrbit {
                k: 1,
                rep: v,
                members: vec![v],
            }
        };
        let facet_orbits: Vec<SubsetOrbit> = (0..dense.len()).map(fake).collect();
        let ridge_orbits: Vec<SubsetOrbit> = (0..nc).map(fake).collect();
        let entries: Vec<Vec<(usize, u32)>> = dense
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(_, &x)| x > 0)
                    .map(|(c, &x)| (c, x))
                    .collect()
            })
            .collect();
        let mut blocks: Vec<Block> = Vec::new();
        for (r, row) in entries.iter().enumerate() {
            let lead = row[0].0;
            match blocks.last_mut() {
                Some(b) if b.first_col == lead => b.rows.end = r + 1,
                _ => blocks.push(Block {
                    first_col: lead,
                    rows: r..r + 1,
                }),
            }
        }
        OrbitIncidence {
            facet_orbits,
            ridge_orbits,
            entries,
            blocks,
        }
    }
}

/// Builds the pruned incidence matrix for facet dimension `d` (facets are
/// `(d+1)`-subsets, ridges `d`-subsets).
///
/// Pruning first discards facet orbits with any entry of 3 or more (such an
/// orbit would cover some ridge too often in any selection), then repeatedly
/// discards ridge orbits whose total coverage by surviving facet orbits is
/// 0 or 1 together with the facet orbits containing them.
pub fn build_incidence(g: &PermutationGroup, d: u8) -> OrbitIncidence {
    let facet_orbits = orbits_of_k_subsets(g, d + 1);
    let ridge_orbits = orbits_of_k_subsets(g, d);
    let nr = facet_orbits.len();
    let nc = ridge_orbits.len();

    let mut t = vec![vec![0u32; nc]; nr];
    for (i, fo) in facet_orbits.iter().enumerate() {
        for (j, ro) in ridge_orbits.iter().enumerate() {
            t[i][j] = inclusion_multiplicity(fo, ro);
        }
    }

    let mut row_alive = vec![true; nr];
    let mut col_alive = vec![true; nc];
    for i in 0..nr {
        if t[i].iter().any(|&x| x >= 3) {
            row_alive[i] = false;
        }
    }
    loop {
        let mut changed = false;
        for j in 0..nc {
            if !col_alive[j] {
                continue;
            }
            let total: u32 = (0..nr).filter(|&i| row_alive[i]).map(|i| t[i][j]).sum();
            if total <= 1 {
                col_alive[j] = false;
                changed = true;
                for i in 0..nr {
                    if row_alive[i] && t[i][j] > 0 {
                        row_alive[i] = false;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }

    let col_map: Vec<Option<usize>> = {
        let mut next = 0;
        col_alive
            .iter()
            .map(|&alive| {
                if alive {
                    next += 1;
                    Some(next - 1)
                } else {
                    None
                }
            })
            .collect()
    };
    let kept_ridges: Vec<SubsetOrbit> = ridge_orbits
        .into_iter()
        .zip(&col_alive)
        .filter(|(_, &a)| a)
        .map(|(o, _)| o)
        .collect();

    struct RowData {
        orbit: SubsetOrbit,
        entries: Vec<(usize, u32)>,
    }
    let mut rows: Vec<RowData> = facet_orbits
        .into_iter()
        .zip(&row_alive)
        .zip(t)
        .filter(|((_, &a), _)| a)
        .map(|((orbit, _), trow)| {
            let entries: Vec<(usize, u32)> = trow
                .iter()
                .enumerate()
                .filter_map(|(j, &x)| match (col_map[j], x) {
                    (Some(c), x) if x > 0 => Some((c, x)),
                    _ => None,
                })
                .collect();
            debug_assert!(!entries.is_empty());
            RowData { orbit, entries }
        })
        .collect();
    rows.sort_by(|a, b| {
        (a.entries[0].0, a.orbit.rep).cmp(&(b.entries[0].0, b.orbit.rep))
    });

    let mut blocks: Vec<Block> = Vec::new();
    for (r, row) in rows.iter().enumerate() {
        let lead = row.entries[0].0;
        match blocks.last_mut() {
            Some(b) if b.first_col == lead => b.rows.end = r + 1,
            _ => blocks.push(Block {
                first_col: lead,
                rows: r..r + 1,
            }),
        }
    }

    let (facet_orbits, entries) = rows
        .into_iter()
        .map(|r| (r.orbit, r.entries))
        .unzip();
    OrbitIncidence {
        facet_orbits,
        ridge_orbits: kept_ridges,
        entries,
        blocks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{affine_frobenius, cyclic, dihedral};
    use crate::perm::Permutation;
    use crate::groups::PermutationGroup;

    #[test]
    fn orbit_partition_covers_all_subsets() {
        let g = dihedral(8).unwrap();
        for k in 1..=4u8 {
            let orbits = orbits_of_k_subsets(&g, k);
            let total: u64 = orbits.iter().map(|o| o.size()).sum();
            let expect = k_subsets(8, k as usize).count() as u64;
            assert_eq!(total, expect, "k={k}");
            let mut all: Vec<u64> = orbits
                .iter()
                .flat_map(|o| o.members.iter().map(|m| m.0))
                .collect();
            all.sort_unstable();
            all.dedup();
            assert_eq!(all.len() as u64, total, "orbits must be disjoint");
            for o in &orbits {
                assert_eq!(o.rep, *o.members.iter().min().unwrap());
            }
        }
    }

    #[test]
    fn orbits_stable_under_generator_order() {
        let g1 = affine_frobenius(7, 6).unwrap();
        let gens: Vec<Permutation> = g1.generators().iter().rev().cloned().collect();
        let g2 = PermutationGroup::new(7, gens, "reversed").unwrap();
        for k in 1..=4u8 {
            let o1 = orbits_of_k_subsets(&g1, k);
            let o2 = orbits_of_k_subsets(&g2, k);
            assert_eq!(o1, o2);
        }
    }

    #[test]
    fn frobenius_triangle_orbit() {
        let g = affine_frobenius(7, 6).unwrap();
        let o = orbit_of_subset(&g, VertexSet::from_vertices(&[1, 2, 4]));
        assert_eq!(o.size(), 14);
    }

    #[test]
    fn brute_force_multiplicity_cross_check() {
        // Z4 acting on triangles (d=2): exhaustive count against the
        // orbit-based computation.
        let g = cyclic(4).unwrap();
        let tris = orbits_of_k_subsets(&g, 3);
        let edges = orbits_of_k_subsets(&g, 2);
        for to in &tris {
            for eo in &edges {
                let brute = to
                    .members
                    .iter()
                    .filter(|m| eo.rep.is_subset_of(**m))
                    .count() as u32;
                assert_eq!(inclusion_multiplicity(to, eo), brute);
            }
        }
    }

    #[test]
    fn dihedral_7_incidence_matrix() {
        let g = dihedral(7).unwrap();
        let inc = build_incidence(&g, 3);
        let reps: Vec<String> = inc
            .facet_orbits
            .iter()
            .map(|o| o.rep.to_compact_string())
            .collect();
        assert_eq!(reps, ["1234", "1235", "1245", "1246"]);
        let ridge_reps: Vec<String> = inc
            .ridge_orbits
            .iter()
            .map(|o| o.rep.to_compact_string())
            .collect();
        assert_eq!(ridge_reps, ["123", "124", "125", "135"]);
        assert_eq!(
            inc.dense(),
            vec![
                vec![2, 1, 0, 0],
                vec![2, 1, 2, 2],
                vec![0, 1, 2, 0],
                vec![0, 1, 0, 2],
            ]
        );
        assert_eq!(inc.blocks().len(), 2);
        assert_eq!(inc.blocks()[0], Block { first_col: 0, rows: 0..2 });
        assert_eq!(inc.blocks()[1], Block { first_col: 1, rows: 2..4 });
        // Orbit sizes: each facet orbit has 7 or 14 members.
        assert_eq!(
            inc.facet_orbits.iter().map(|o| o.size()).collect::<Vec<_>>(),
            [7, 14, 7, 7]
        );
    }

    #[test]
    fn row_sum_identity() {
        // Sum over a row of t * |ridge orbit| = (d+1) * |facet orbit|:
        // both sides count (member, ridge) incidences.
        for (g, d) in [
            (dihedral(7).unwrap(), 3u8),
            (cyclic(10).unwrap(), 3),
            (affine_frobenius(7, 6).unwrap(), 2),
        ] {
            let inc = build_incidence(&g, d);
            for r in 0..inc.n_rows() {
                let lhs: u64 = inc
                    .row(r)
                    .iter()
                    .map(|&(c, t)| t as u64 * inc.ridge_orbits[c].size())
                    .sum();
                let rhs = (d as u64 + 1) * inc.facet_orbits[r].size();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn leading_columns_monotone() {
        for (g, d) in [
            (dihedral(7).unwrap(), 3u8),
            (cyclic(12).unwrap(), 4),
            (dihedral(15).unwrap(), 6),
        ] {
            let inc = build_incidence(&g, d);
            for r in 1..inc.n_rows() {
                assert!(inc.leading_col(r - 1) <= inc.leading_col(r));
            }
            // Blocks tile the rows.
            let mut covered = 0;
            for b in inc.blocks() {
                assert_eq!(b.rows.start, covered);
                covered = b.rows.end;
                for r in b.rows.clone() {
                    assert_eq!(inc.leading_col(r), b.first_col);
                }
            }
            assert_eq!(covered, inc.n_rows());
        }
    }
}
