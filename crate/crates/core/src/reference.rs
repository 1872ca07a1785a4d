//! Reference triangulations used when identifying census entries: simplex
//! boundaries, cyclic and cross polytope boundaries, joins, products, and
//! connected sums.

use thiserror::Error;

use crate::complex::SimplicialComplex;
use crate::vertex_set::{k_subsets, VertexSet, MAX_VERTEX};

#[derive(Debug, Error)]
pub enum ReferenceError {
    #[error("need at least {min} vertices, got {got}")]
    TooSmall { min: u8, got: u8 },
    #[error("construction needs {needed} labels, only {} available", MAX_VERTEX)]
    TooManyVertices { needed: u16 },
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(u8, u8),
    #[error("parameter out of range: {0}")]
    BadParameter(&'static str),
}

/// Boundary of the (d+1)-simplex: all (d+1)-subsets of {1..d+2}.
pub fn boundary_simplex(d: u8) -> Result<SimplicialComplex, ReferenceError> {
    if d == 0 || d > MAX_VERTEX - 2 {
        return Err(ReferenceError::BadParameter("dimension"));
    }
    let n = d + 2;
    let facets = k_subsets(n, d as usize + 1).collect();
    Ok(SimplicialComplex::new(n, facets).expect("simplex boundary"))
}

/// Gale's evenness condition: `s` qualifies iff between any two labels
/// outside `s` there is an even number of labels of `s`.
fn gale_even(s: VertexSet, n: u8) -> bool {
    let outside: Vec<u8> = (1..=n).filter(|&v| !s.contains(v)).collect();
    for (a, &i) in outside.iter().enumerate() {
        for &j in &outside[a + 1..] {
            let between = (i + 1..j).filter(|&v| s.contains(v)).count();
            if between % 2 != 0 {
                return false;
            }
        }
    }
    true
}

/// Boundary of the cyclic `dim`-polytope on `n` vertices; facets are the
/// `dim`-subsets of {1..n} satisfying Gale's evenness condition.
pub fn cyclic_polytope_boundary(dim: u8, n: u8) -> Result<SimplicialComplex, ReferenceError> {
    if dim < 2 {
        return Err(ReferenceError::BadParameter("polytope dimension"));
    }
    if n < dim + 1 {
        return Err(ReferenceError::TooSmall { min: dim + 1, got: n });
    }
    if n > MAX_VERTEX {
        return Err(ReferenceError::TooManyVertices { needed: n as u16 });
    }
    let facets: Vec<VertexSet> = k_subsets(n, dim as usize)
        .filter(|&s| gale_even(s, n))
        .collect();
    Ok(SimplicialComplex::new(n, facets).expect("cyclic polytope boundary"))
}

/// Boundary of the k-dimensional cross-polytope: vertices {1..2k} in
/// antipodal pairs {i, i+k}, facets the 2^k transversals.
pub fn cross_polytope_boundary(k: u8) -> Result<SimplicialComplex, ReferenceError> {
    if k < 2 {
        return Err(ReferenceError::BadParameter("cross-polytope dimension"));
    }
    if 2 * k as u16 > MAX_VERTEX as u16 {
        return Err(ReferenceError::TooManyVertices { needed: 2 * k as u16 });
    }
    let mut facets = Vec::with_capacity(1 << k);
    for mask in 0u32..1 << k {
        let mut f = VertexSet::EMPTY;
        for i in 0..k {
            f = f.with(if mask >> i & 1 == 1 { i + 1 + k } else { i + 1 });
        }
        facets.push(f);
    }
    Ok(SimplicialComplex::new(2 * k, facets).expect("cross-polytope boundary"))
}

/// Cycle on k vertices.
pub fn polygon(k: u8) -> Result<SimplicialComplex, ReferenceError> {
    if k < 3 {
        return Err(ReferenceError::TooSmall { min: 3, got: k });
    }
    if k > MAX_VERTEX {
        return Err(ReferenceError::TooManyVertices { needed: k as u16 });
    }
    let facets = (1..=k)
        .map(|i| VertexSet::from_vertices(&[i, i % k + 1]))
        .collect();
    Ok(SimplicialComplex::new(k, facets).expect("polygon"))
}

/// Join product: facets are unions of one facet from each complex, with the
/// second complex relabeled onto fresh labels after the first.
pub fn join(
    k1: &SimplicialComplex,
    k2: &SimplicialComplex,
) -> Result<SimplicialComplex, ReferenceError> {
    let n = k1.n() as u16 + k2.n() as u16;
    if n > MAX_VERTEX as u16 {
        return Err(ReferenceError::TooManyVertices { needed: n });
    }
    let shift = k1.n();
    let mut facets = Vec::with_capacity(k1.n_facets() * k2.n_facets());
    for &f1 in k1.facets() {
        for &f2 in k2.facets() {
            let mut f = f1;
            for v in f2.iter() {
                f = f.with(v + shift);
            }
            facets.push(f);
        }
    }
    Ok(SimplicialComplex::new(n as u8, facets).expect("join"))
}

/// Staircase triangulation of the cartesian product. Vertices are pairs
/// (u, v) laid out as (u-1)·n2 + v; each facet pair σ×τ contributes its
/// monotone staircases.
pub fn product(
    k1: &SimplicialComplex,
    k2: &SimplicialComplex,
) -> Result<SimplicialComplex, ReferenceError> {
    let n2 = k2.n() as u16;
    let n = k1.n() as u16 * n2;
    if n > MAX_VERTEX as u16 {
        return Err(ReferenceError::TooManyVertices { needed: n });
    }
    let pair = |u: u8, v: u8| ((u as u16 - 1) * n2 + v as u16) as u8;
    let mut facets = Vec::new();
    for &f1 in k1.facets() {
        for &f2 in k2.facets() {
            let us = f1.vertices();
            let vs = f2.vertices();
            // Walk all monotone lattice paths from (us[0], vs[0]) to the
            // opposite corner; each path is one simplex of the product.
            let p = us.len() - 1;
            let q = vs.len() - 1;
            let mut stack: Vec<(usize, usize, VertexSet)> =
                vec![(0, 0, VertexSet::singleton(pair(us[0], vs[0])))];
            while let Some((a, b, cur)) = stack.pop() {
                if a == p && b == q {
                    facets.push(cur);
                    continue;
                }
                if a < p {
                    stack.push((a + 1, b, cur.with(pair(us[a + 1], vs[b]))));
                }
                if b < q {
                    stack.push((a, b + 1, cur.with(pair(us[a], vs[b + 1]))));
                }
            }
        }
    }
    Ok(SimplicialComplex::new(n as u8, facets).expect("staircase product"))
}

/// Connected sum: drop the lexicographically first facet of each summand and
/// glue along the removed boundaries by the order-preserving bijection.
pub fn connected_sum(
    k1: &SimplicialComplex,
    k2: &SimplicialComplex,
) -> Result<SimplicialComplex, ReferenceError> {
    if k1.dim() != k2.dim() {
        return Err(ReferenceError::DimensionMismatch(k1.dim(), k2.dim()));
    }
    let f1 = *k1.facets().first().expect("nonempty");
    let f2 = *k2.facets().first().expect("nonempty");
    let glued1 = f1.vertices();
    let glued2 = f2.vertices();
    let mut map = [0u8; 65];
    for (a, b) in glued2.iter().zip(&glued1) {
        map[*a as usize] = *b;
    }
    let mut next = k1.n();
    for v in k2.support().iter() {
        if !f2.contains(v) {
            next += 1;
            map[v as usize] = next;
        }
    }
    if next as u16 > MAX_VERTEX as u16 {
        return Err(ReferenceError::TooManyVertices { needed: next as u16 });
    }
    let mut facets: Vec<VertexSet> = k1
        .facets()
        .iter()
        .copied()
        .filter(|&f| f != f1)
        .collect();
    for &f in k2.facets() {
        if f == f2 {
            continue;
        }
        let mut g = VertexSet::EMPTY;
        for v in f.iter() {
            g = g.with(map[v as usize]);
        }
        facets.push(g);
    }
    Ok(SimplicialComplex::new(next, facets).expect("connected sum"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::are_isomorphic;
    use crate::complex::fixtures::{octahedron, torus_7};
    use crate::complex::manifold_link_conditions;
    use crate::enumerate::{enumerate_vt, EnumerateOptions};
    use crate::groups::dihedral;
    use crate::homology::integer_homology;

    #[test]
    fn simplex_boundaries() {
        let s2 = boundary_simplex(2).unwrap();
        assert_eq!(s2.f_vector(), vec![4, 6, 4]);
        let s6 = boundary_simplex(6).unwrap();
        assert_eq!(s6.f_vector(), vec![8, 28, 56, 70, 56, 28, 8]);
        let s9 = boundary_simplex(9).unwrap();
        assert_eq!(&s9.f_vector()[..3], &[11, 55, 165]);
        assert!(boundary_simplex(0).is_err());
    }

    #[test]
    fn cyclic_polytopes() {
        let c47 = cyclic_polytope_boundary(4, 7).unwrap();
        assert_eq!(c47.n_facets(), 14);
        let g = dihedral(7).unwrap();
        let rec = enumerate_vt(7, 3, &g, &EnumerateOptions::default())
            .unwrap()
            .records
            .remove(0);
        assert!(are_isomorphic(&c47, &rec.complex(&g).unwrap()).is_some());

        let c10 = cyclic_polytope_boundary(10, 13).unwrap();
        assert_eq!(
            c10.f_vector(),
            vec![13, 78, 286, 715, 1287, 1703, 1638, 1092, 455, 91]
        );

        // Minimal case degenerates to the simplex boundary.
        for d in 2..=5u8 {
            let c = cyclic_polytope_boundary(d + 1, d + 2).unwrap();
            assert_eq!(c.facets(), boundary_simplex(d).unwrap().facets());
        }

        assert!(cyclic_polytope_boundary(4, 4).is_err());
    }

    #[test]
    fn cyclic_polytopes_pass_the_link_screen() {
        for dim in 3..=10u8 {
            for n in dim + 1..=15 {
                let c = cyclic_polytope_boundary(dim, n).unwrap();
                assert!(c.is_pseudomanifold(), "C_{dim}({n})");
                assert!(
                    manifold_link_conditions(&c, false).is_ok(),
                    "C_{dim}({n})"
                );
            }
        }
    }

    #[test]
    fn cross_polytopes() {
        let square = cross_polytope_boundary(2).unwrap();
        assert_eq!(square.f_vector(), vec![4, 4]);
        let oct = cross_polytope_boundary(3).unwrap();
        assert_eq!(oct.f_vector(), vec![6, 12, 8]);
        assert!(are_isomorphic(&oct, &octahedron()).is_some());
        let c7 = cross_polytope_boundary(7).unwrap();
        assert_eq!(c7.f_vector(), vec![14, 84, 280, 560, 672, 448, 128]);
        assert_eq!(c7.n_facets(), 1 << 7);
        assert!(c7.is_pseudomanifold());
    }

    #[test]
    fn joins_of_polygons() {
        let p3 = polygon(3).unwrap();
        let s3 = join(&p3, &p3).unwrap();
        assert_eq!(s3.dim(), 3);
        assert_eq!(s3.n(), 6);
        assert_eq!(s3.n_facets(), 9);
        assert!(s3.is_pseudomanifold());
        assert_eq!(s3.euler_characteristic(), 0);

        let mut five_fold = p3.clone();
        for _ in 0..4 {
            five_fold = join(&five_fold, &p3).unwrap();
        }
        assert_eq!(five_fold.dim(), 9);
        assert_eq!(five_fold.n(), 15);
        assert_eq!(five_fold.n_facets(), 243);
        assert!(five_fold.is_pseudomanifold());
        assert!(manifold_link_conditions(&five_fold, false).is_ok());
    }

    #[test]
    fn join_is_associative_and_respects_euler() {
        let p3 = polygon(3).unwrap();
        let oct = octahedron();
        let left = join(&join(&p3, &p3).unwrap(), &p3).unwrap();
        let right = join(&p3, &join(&p3, &p3).unwrap()).unwrap();
        assert!(are_isomorphic(&left, &right).is_some());
        for (a, b) in [(&p3, &p3), (&oct, &p3), (&p3, &oct)] {
            let (x, y) = (a.euler_characteristic(), b.euler_characteristic());
            assert_eq!(join(a, b).unwrap().euler_characteristic(), x + y - x * y);
        }
    }

    #[test]
    fn cone_over_a_complex() {
        let point = SimplicialComplex::new(1, vec![VertexSet::singleton(1)]).unwrap();
        let cone = join(&octahedron(), &point).unwrap();
        assert_eq!(cone.dim(), 3);
        assert_eq!(cone.n_facets(), 8);
        assert_eq!(cone.euler_characteristic(), 1);
    }

    fn s2xs1() -> SimplicialComplex {
        product(&boundary_simplex(2).unwrap(), &polygon(3).unwrap()).unwrap()
    }

    #[test]
    fn product_makes_sphere_times_circle() {
        let m = s2xs1();
        assert_eq!(m.dim(), 3);
        assert_eq!(m.n(), 12);
        assert_eq!(m.n_facets(), 36);
        assert!(m.is_pseudomanifold());
        assert!(m.is_orientable());
        assert!(manifold_link_conditions(&m, true).is_ok());
        let h = integer_homology(&m);
        assert_eq!(h.betti, vec![1, 1, 1, 1]);
        assert!(h.torsion.iter().all(|t| t.is_empty()));
    }

    #[test]
    fn connected_sums() {
        let s = boundary_simplex(2).unwrap();
        let ss = connected_sum(&s, &s).unwrap();
        assert_eq!(ss.f_vector(), vec![5, 9, 6]);
        assert!(ss.is_pseudomanifold());
        assert_eq!(ss.euler_characteristic(), 2);

        let t = torus_7();
        let genus2 = connected_sum(&t, &t).unwrap();
        assert!(genus2.is_pseudomanifold());
        assert_eq!(genus2.euler_characteristic(), -2);
        let h = integer_homology(&genus2);
        assert_eq!(h.betti, vec![1, 4, 1]);

        let m = s2xs1();
        let double = connected_sum(&m, &m).unwrap();
        assert!(double.is_pseudomanifold());
        let h = integer_homology(&double);
        assert_eq!(h.betti, vec![1, 2, 2, 1]);
        assert!(h.torsion.iter().all(|t| t.is_empty()));

        assert!(connected_sum(&s, &t.link(VertexSet::singleton(1)).unwrap()).is_err());
    }
}
