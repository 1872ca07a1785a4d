//! Permutation groups given by generators, builtin families, and the
//! transitive-group catalog.

use std::collections::{HashSet, VecDeque};
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::perm::{PermError, Permutation};
use crate::vertex_set::MAX_VERTEX;

/// Default element cap for group closures.
pub const DEFAULT_ELEMENT_CAP: usize = 1_000_000;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("generator degree {found} does not match group degree {expected}")]
    DegreeMismatch { expected: u8, found: u8 },
    #[error("group closure exceeded the element cap of {0}")]
    CapExceeded(usize),
    #[error("{0} is not prime")]
    NotPrime(u8),
    #[error("{k} does not divide {n} - 1")]
    BadMultiplierOrder { n: u8, k: u8 },
    #[error("multiplier {m} is not a unit mod {n}")]
    NotAUnit { n: u8, m: u8 },
    #[error("degree must lie in 1..={max}, got {0}", max = MAX_VERTEX)]
    BadDegree(u8),
    #[error("unknown group {0:?}")]
    UnknownGroup(String),
}

/// A permutation group on `{1..=degree}` given by generators.
///
/// The element list is only ever materialized through [`Self::elements`],
/// which enforces a cap; the symmetric and alternating families carry their
/// order so that callers can special-case them without a closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationGroup {
    degree: u8,
    generators: Vec<Permutation>,
    name: String,
    declared_order: Option<u128>,
}

impl PermutationGroup {
    pub fn new(
        degree: u8,
        generators: Vec<Permutation>,
        name: impl Into<String>,
    ) -> Result<Self, GroupError> {
        if degree == 0 || degree > MAX_VERTEX {
            return Err(GroupError::BadDegree(degree));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        Ok(PermutationGroup {
            degree,
            generators,
            name: name.into(),
            declared_order: None,
        })
    }

    fn with_order(mut self, order: u128) -> Self {
        self.declared_order = Some(order);
        self
    }

    pub fn degree(&self) -> u8 {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Order if known without running a closure.
    pub fn declared_order(&self) -> Option<u128> {
        self.declared_order
    }

    /// Full element list via breadth-first closure, sorted by image table.
    /// Fails once more than `cap` elements have been produced.
    pub fn elements(&self, cap: usize) -> Result<Vec<Permutation>, GroupError> {
        let mut seen: HashSet<Permutation> = HashSet::new();
        let mut queue = VecDeque::new();
        let id = Permutation::identity(self.degree);
        seen.insert(id.clone());
        queue.push_back(id);
        while let Some(p) = queue.pop_front() {
            for g in &self.generators {
                let q = g.compose(&p);
                if !seen.contains(&q) {
                    if seen.len() >= cap {
                        return Err(GroupError::CapExceeded(cap));
                    }
                    seen.insert(q.clone());
                    queue.push_back(q);
                }
            }
        }
        let mut out: Vec<Permutation> = seen.into_iter().collect();
        out.sort();
        Ok(out)
    }

    /// Group order: the declared order if present, otherwise computed by
    /// closure under `cap`.
    pub fn order(&self, cap: usize) -> Result<u128, GroupError> {
        if let Some(o) = self.declared_order {
            return Ok(o);
        }
        Ok(self.elements(cap)?.len() as u128)
    }

    /// Orbit of the point `v` under the generators.
    pub fn orbit_of_point(&self, v: u8) -> Vec<u8> {
        let mut seen = vec![false; self.degree as usize];
        let mut queue = VecDeque::new();
        seen[v as usize - 1] = true;
        queue.push_back(v);
        let mut orbit = vec![v];
        while let Some(p) = queue.pop_front() {
            for g in &self.generators {
                let q = g.apply(p);
                if !seen[q as usize - 1] {
                    seen[q as usize - 1] = true;
                    orbit.push(q);
                    queue.push_back(q);
                }
            }
        }
        orbit.sort_unstable();
        orbit
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit_of_point(1).len() == self.degree as usize
    }

    /// Membership test; materializes the element list.
    pub fn contains(&self, p: &Permutation, cap: usize) -> Result<bool, GroupError> {
        Ok(self.elements(cap)?.iter().any(|q| q == p))
    }

    /// True if this is the full symmetric group in its natural action,
    /// judged by the declared order.
    pub fn is_natural_symmetric(&self) -> bool {
        matches!((self.declared_order, factorial(self.degree)), (Some(o), Some(f)) if o == f)
    }

    /// True if this is the alternating group in its natural action,
    /// judged by the declared order.
    pub fn is_natural_alternating(&self) -> bool {
        self.degree >= 3
            && matches!(
                (self.declared_order, factorial(self.degree)),
                (Some(o), Some(f)) if o == f / 2
            )
    }
}

pub fn factorial(n: u8) -> Option<u128> {
    let mut f: u128 = 1;
    for i in 2..=n as u128 {
        f = f.checked_mul(i)?;
    }
    Some(f)
}

/// The standard `n`-cycle `(1,2,...,n)`.
pub fn standard_cycle(n: u8) -> Permutation {
    let images: Vec<u8> = (0..n).map(|i| (i + 1) % n).collect();
    Permutation::from_images(images).unwrap()
}

/// The reflection `(1,2m)(2,2m-1)...(m,m+1)` with `m = n/2`, fixing the
/// remaining points; together with the `n`-cycle it generates the dihedral
/// group, e.g. `(1,6)(2,5)(3,4)` for `n = 7`.
pub fn standard_reflection(n: u8) -> Permutation {
    let m = n / 2;
    let mut images: Vec<u8> = (0..n).collect();
    for i in 1..=m {
        images[i as usize - 1] = 2 * m - i;
        images[2 * m as usize - i as usize] = i - 1;
    }
    Permutation::from_images(images).unwrap()
}

/// Cyclic group generated by the `n`-cycle.
pub fn cyclic(n: u8) -> Result<PermutationGroup, GroupError> {
    if n == 0 || n > MAX_VERTEX {
        return Err(GroupError::BadDegree(n));
    }
    Ok(
        PermutationGroup::new(n, vec![standard_cycle(n)], format!("C{n}"))?
            .with_order(n as u128),
    )
}

/// Dihedral group of order `2n` in its natural degree-`n` action.
pub fn dihedral(n: u8) -> Result<PermutationGroup, GroupError> {
    if !(3..=MAX_VERTEX).contains(&n) {
        return Err(GroupError::BadDegree(n));
    }
    Ok(PermutationGroup::new(
        n,
        vec![standard_cycle(n), standard_reflection(n)],
        format!("D{n}"),
    )?
    .with_order(2 * n as u128))
}

/// Full symmetric group. Never materialized by the pipeline; the declared
/// order lets callers detect it.
pub fn symmetric(n: u8) -> Result<PermutationGroup, GroupError> {
    if n == 0 || n > MAX_VERTEX {
        return Err(GroupError::BadDegree(n));
    }
    let mut gens = vec![];
    if n >= 2 {
        gens.push(Permutation::parse_cycles("(1,2)", n)?);
    }
    if n >= 3 {
        gens.push(standard_cycle(n));
    }
    let order = factorial(n).ok_or(GroupError::BadDegree(n))?;
    Ok(PermutationGroup::new(n, gens, format!("S{n}"))?.with_order(order))
}

/// Alternating group in its natural action.
pub fn alternating(n: u8) -> Result<PermutationGroup, GroupError> {
    if !(3..=MAX_VERTEX).contains(&n) {
        return Err(GroupError::BadDegree(n));
    }
    let three = Permutation::parse_cycles("(1,2,3)", n)?;
    let long = if n % 2 == 1 {
        standard_cycle(n)
    } else {
        // (2,3,...,n) is even when n is even.
        let mut images: Vec<u8> = (0..n).collect();
        for i in 1..n {
            images[i as usize] = if i + 1 < n { i + 1 } else { 1 };
        }
        Permutation::from_images(images)?
    };
    let order = factorial(n).ok_or(GroupError::BadDegree(n))? / 2;
    Ok(PermutationGroup::new(n, vec![three, long], format!("A{n}"))?.with_order(order))
}

fn is_prime(n: u8) -> bool {
    if n < 2 {
        return false;
    }
    (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Smallest primitive root mod the prime `p`.
fn primitive_root(p: u8) -> u8 {
    let phi = (p - 1) as u32;
    'cand: for g in 2..p as u32 {
        let mut x = 1u32;
        for _ in 1..phi {
            x = x * g % p as u32;
            if x == 1 {
                continue 'cand;
            }
        }
        return g as u8;
    }
    unreachable!("no primitive root found");
}

/// Permutation `k -> m*k mod n` of `{1..=n}`, with residue 0 read as the
/// point `n`. Requires `gcd(m, n) = 1`.
pub fn multiplication_map(n: u8, m: u8) -> Result<Permutation, GroupError> {
    if n == 0 || n > MAX_VERTEX {
        return Err(GroupError::BadDegree(n));
    }
    if num_integer::gcd(m as u32, n as u32) != 1 {
        return Err(GroupError::NotAUnit { n, m });
    }
    let images: Vec<u8> = (1..=n as u32)
        .map(|k| {
            let r = m as u32 * k % n as u32;
            (if r == 0 { n as u32 } else { r } - 1) as u8
        })
        .collect();
    Ok(Permutation::from_images(images)?)
}

/// Subgroup of the affine group of `GF(n)` (for `n` prime) generated by the
/// translation `x -> x+1` and a multiplication of order `k`, where
/// `k | n-1`. Has order `n*k`; named `"n:k"`.
pub fn affine_frobenius(n: u8, k: u8) -> Result<PermutationGroup, GroupError> {
    if !is_prime(n) {
        return Err(GroupError::NotPrime(n));
    }
    if k == 0 || !(n - 1).is_multiple_of(k) {
        return Err(GroupError::BadMultiplierOrder { n, k });
    }
    let mut gens = vec![standard_cycle(n)];
    if k > 1 {
        let g = primitive_root(n);
        let e = (n as u32 - 1) / k as u32;
        let m = pow_mod(g as u32, e, n as u32) as u8;
        gens.push(multiplication_map(n, m)?);
    }
    Ok(PermutationGroup::new(n, gens, format!("{n}:{k}"))?.with_order(n as u128 * k as u128))
}

fn pow_mod(mut b: u32, mut e: u32, m: u32) -> u32 {
    let mut r = 1u32;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// One catalog record: a transitive group of small degree with its
/// classification index and generators in cycle notation.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub degree: u8,
    pub index: u32,
    pub name: String,
    pub order: u64,
    pub generators: Vec<String>,
}

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("failed to read catalog: {0}")]
    Io(#[from] std::io::Error),
    #[error("failed to parse catalog: {0}")]
    Json(#[from] serde_json::Error),
    #[error("catalog entry t{degree}n{index}: {problem}")]
    BadEntry {
        degree: u8,
        index: u32,
        problem: String,
    },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("no catalog entry for degree {0} index {1}")]
    NoSuchEntry(u8, u32),
}

/// The transitive-group catalog shipped with the crate (degrees 4..=8).
pub const BUILTIN_CATALOG_JSON: &str = include_str!("../data/transitive_groups.json");

#[derive(Debug, Clone)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    /// Loads and validates a catalog from JSON text.
    pub fn from_json(text: &str) -> Result<Catalog, CatalogError> {
        let mut entries: Vec<CatalogEntry> = serde_json::from_str(text)?;
        entries.sort_by_key(|e| (e.degree, e.index));
        let cat = Catalog { entries };
        cat.validate()?;
        Ok(cat)
    }

    pub fn load(path: &Path) -> Result<Catalog, CatalogError> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    /// The embedded catalog.
    pub fn builtin() -> Catalog {
        Self::from_json(BUILTIN_CATALOG_JSON).expect("embedded catalog is valid")
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn degrees(&self) -> Vec<u8> {
        let mut ds: Vec<u8> = self.entries.iter().map(|e| e.degree).collect();
        ds.dedup();
        ds
    }

    pub fn entries_of_degree(&self, degree: u8) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.iter().filter(move |e| e.degree == degree)
    }

    pub fn entry(&self, degree: u8, index: u32) -> Result<&CatalogEntry, CatalogError> {
        self.entries
            .iter()
            .find(|e| e.degree == degree && e.index == index)
            .ok_or(CatalogError::NoSuchEntry(degree, index))
    }

    /// Instantiates the group for an entry.
    pub fn group(&self, degree: u8, index: u32) -> Result<PermutationGroup, CatalogError> {
        let e = self.entry(degree, index)?;
        Ok(entry_group(e)?)
    }

    /// Checks every entry: generators parse, the group is transitive, and
    /// the computed order matches the declared one.
    pub fn validate(&self) -> Result<(), CatalogError> {
        let mut seen = HashSet::new();
        for e in &self.entries {
            let bad = |problem: String| CatalogError::BadEntry {
                degree: e.degree,
                index: e.index,
                problem,
            };
            if !seen.insert((e.degree, e.index)) {
                return Err(bad("duplicate (degree, index)".into()));
            }
            let g = entry_group(e).map_err(|err| bad(err.to_string()))?;
            if !g.is_transitive() {
                return Err(bad("declared transitive but is not".into()));
            }
            let computed = g
                .elements(2 * e.order as usize + 1)
                .map_err(|err| bad(err.to_string()))?
                .len() as u64;
            if computed != e.order {
                return Err(bad(format!(
                    "declared order {} but closure has {computed} elements",
                    e.order
                )));
            }
        }
        Ok(())
    }
}

fn entry_group(e: &CatalogEntry) -> Result<PermutationGroup, GroupError> {
    let gens = e
        .generators
        .iter()
        .map(|s| Permutation::parse_cycles(s, e.degree))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PermutationGroup::new(e.degree, gens, e.name.clone())?.with_order(e.order as u128))
}

/// Resolves a group spec string: builtin families (`C7`, `D15`, `S6`, `A5`,
/// `13:3`), catalog ids (`t7n4`), or a catalog name (`L(3,2)`).
pub fn resolve_group(spec: &str, catalog: &Catalog) -> Result<PermutationGroup, GroupError> {
    let spec = spec.trim();
    if let Some((d, i)) = parse_txny(spec) {
        if let Ok(g) = catalog.group(d, i) {
            return Ok(g);
        }
        return Err(GroupError::UnknownGroup(spec.to_string()));
    }
    if let Some((p, k)) = spec.split_once(':') {
        if let (Ok(p), Ok(k)) = (p.parse(), k.parse()) {
            return affine_frobenius(p, k);
        }
    }
    if spec.len() >= 2 {
        let (head, tail) = spec.split_at(1);
        if let Ok(n) = tail.parse::<u8>() {
            match head {
                "C" | "Z" => return cyclic(n),
                "D" => return dihedral(n),
                "S" => return symmetric(n),
                "A" => return alternating(n),
                _ => {}
            }
        }
    }
    for e in catalog.entries() {
        if e.name == spec {
            return entry_group(e);
        }
    }
    Err(GroupError::UnknownGroup(spec.to_string()))
}

fn parse_txny(s: &str) -> Option<(u8, u32)> {
    let rest = s.strip_prefix('t')?;
    let npos = rest.find('n')?;
    let d = rest[..npos].parse().ok()?;
    let i = rest[npos + 1..].parse().ok()?;
    Some((d, i))
}

/// Number of transitive groups per degree, used to place the symmetric and
/// alternating groups in the classification numbering.
const TRANSITIVE_COUNTS: [(u8, u32); 12] = [
    (4, 5),
    (5, 5),
    (6, 16),
    (7, 7),
    (8, 50),
    (9, 34),
    (10, 45),
    (11, 8),
    (12, 301),
    (13, 9),
    (14, 63),
    (15, 104),
];

/// Classification indices of the dihedral groups in their natural action.
const DIHEDRAL_INDICES: [(u8, u32); 12] = [
    (4, 3),
    (5, 2),
    (6, 3),
    (7, 2),
    (8, 6),
    (9, 3),
    (10, 3),
    (11, 2),
    (12, 12),
    (13, 2),
    (14, 3),
    (15, 2),
];

/// Classification index of a builtin-family group, where known. Catalog
/// groups carry their index directly; this covers the families used for
/// larger degrees: cyclic groups are always index 1, dihedral indices are
/// tabulated, the affine groups of prime degree are numbered by multiplier
/// order, and the alternating/symmetric groups sit at the end of the list.
pub fn family_index(g: &PermutationGroup) -> Option<u32> {
    let n = g.degree();
    let name = g.name();
    if name == format!("C{n}") {
        return Some(1);
    }
    if name == format!("D{n}") {
        return DIHEDRAL_INDICES.iter().find(|&&(d, _)| d == n).map(|&(_, i)| i);
    }
    if let Some((p, k)) = name.split_once(':') {
        if p.parse::<u8>() == Ok(n) {
            if let Ok(k) = k.parse::<u8>() {
                // Position of k among the divisors of n-1.
                let rank = (1..=k).filter(|&d| (n - 1).is_multiple_of(d)).count() as u32;
                return Some(rank);
            }
        }
    }
    let count = TRANSITIVE_COUNTS.iter().find(|&&(d, _)| d == n).map(|&(_, c)| c)?;
    if g.is_natural_symmetric() {
        return Some(count);
    }
    if g.is_natural_alternating() {
        return Some(count - 1);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_15_has_30_elements() {
        let g = dihedral(15).unwrap();
        let els = g.elements(DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!(els.len(), 30);
        assert_eq!(g.declared_order(), Some(30));
    }

    #[test]
    fn standard_reflection_shape() {
        assert_eq!(standard_reflection(7).to_cycles(), "(1,6)(2,5)(3,4)");
        assert_eq!(
            standard_reflection(15).to_cycles(),
            "(1,14)(2,13)(3,12)(4,11)(5,10)(6,9)(7,8)"
        );
        assert_eq!(standard_reflection(6).to_cycles(), "(1,6)(2,5)(3,4)");
    }

    #[test]
    fn closure_cap_triggers() {
        let g = symmetric(8).unwrap();
        match g.elements(1000) {
            Err(GroupError::CapExceeded(1000)) => {}
            other => panic!("expected cap failure, got {other:?}"),
        }
    }

    #[test]
    fn transitivity() {
        assert!(cyclic(9).unwrap().is_transitive());
        let a = Permutation::parse_cycles("(1,2,3)", 6).unwrap();
        let b = Permutation::parse_cycles("(4,5,6)", 6).unwrap();
        let g = PermutationGroup::new(6, vec![a, b], "blocks").unwrap();
        assert!(!g.is_transitive());
        assert_eq!(g.orbit_of_point(2), vec![1, 2, 3]);
    }

    #[test]
    fn transitive_group_order_divisible_by_degree() {
        for g in [
            cyclic(12).unwrap(),
            dihedral(9).unwrap(),
            affine_frobenius(7, 3).unwrap(),
            affine_frobenius(13, 4).unwrap(),
        ] {
            let o = g.elements(DEFAULT_ELEMENT_CAP).unwrap().len();
            assert_eq!(o as u128, g.declared_order().unwrap());
            assert_eq!(o % g.degree() as usize, 0);
        }
    }

    #[test]
    fn multiplication_map_values() {
        let m2 = multiplication_map(7, 2).unwrap();
        assert_eq!(m2.to_cycles(), "(1,2,4)(3,6,5)");
        assert_eq!(m2.apply(7), 7);
        // Composition of maps multiplies the multipliers.
        let m3 = multiplication_map(7, 3).unwrap();
        let m6 = multiplication_map(7, 6).unwrap();
        assert_eq!(m2.compose(&m3), m6);
        assert!(multiplication_map(6, 3).is_err());
    }

    #[test]
    fn affine_frobenius_7_6() {
        let g = affine_frobenius(7, 6).unwrap();
        assert_eq!(g.declared_order(), Some(42));
        assert_eq!(g.elements(DEFAULT_ELEMENT_CAP).unwrap().len(), 42);
        assert!(g.is_transitive());
        assert!(affine_frobenius(8, 7).is_err());
        assert!(affine_frobenius(7, 4).is_err());
    }

    #[test]
    fn natural_symmetric_and_alternating_flags() {
        assert!(symmetric(9).unwrap().is_natural_symmetric());
        assert!(!symmetric(9).unwrap().is_natural_alternating());
        assert!(alternating(9).unwrap().is_natural_alternating());
        assert!(!cyclic(9).unwrap().is_natural_symmetric());
        let a9 = alternating(9).unwrap();
        assert!(a9.generators().iter().all(|g| g.is_even()));
        assert!(a9.is_transitive());
    }

    #[test]
    fn alternating_small_orders() {
        for n in [3u8, 4, 5, 6] {
            let g = alternating(n).unwrap();
            let o = g.elements(DEFAULT_ELEMENT_CAP).unwrap().len() as u128;
            assert_eq!(o, g.declared_order().unwrap(), "A{n}");
        }
    }

    #[test]
    fn builtin_catalog_is_complete_for_small_degrees() {
        let cat = Catalog::builtin();
        for (d, count) in [(4u8, 5usize), (5, 5), (6, 16), (7, 7), (8, 50)] {
            assert_eq!(cat.entries_of_degree(d).count(), count, "degree {d}");
        }
        // anchors of the classification numbering
        for (d, i, name, order) in [
            (4u8, 1u32, "C4", 4u64),
            (4, 3, "D4", 8),
            (5, 2, "D5", 10),
            (6, 3, "D6", 12),
            (6, 12, "PSL(2,5)", 60),
            (7, 2, "D7", 14),
            (7, 4, "F42", 42),
            (7, 5, "L(3,2)", 168),
            (8, 6, "D8", 16),
            (8, 36, "PSL(2,7)", 168),
            (8, 49, "A8", 20160),
            (8, 50, "S8", 40320),
        ] {
            let e = cat.entry(d, i).unwrap();
            assert_eq!(e.name, name);
            assert_eq!(e.order, order);
        }
    }

    #[test]
    fn resolution_through_the_catalog() {
        let cat = Catalog::builtin();
        let g = resolve_group("t7n4", &cat).unwrap();
        assert_eq!(g.declared_order(), Some(42));
        let g = resolve_group("L(3,2)", &cat).unwrap();
        assert_eq!(g.degree(), 7);
        assert_eq!(g.declared_order(), Some(168));
        // names opening with a family letter still resolve by exact match
        let g = resolve_group("C4xC2", &cat).unwrap();
        assert_eq!((g.degree(), g.declared_order()), (8, Some(8)));
        let g = resolve_group("D4(8)", &cat).unwrap();
        assert_eq!((g.degree(), g.declared_order()), (8, Some(8)));
        assert!(resolve_group("t9n1", &cat).is_err());
    }

    #[test]
    fn catalog_groups_match_their_family_constructions() {
        let cat = Catalog::builtin();
        for (spec, family) in [
            ("t6n1", cyclic(6).unwrap()),
            ("t6n3", dihedral(6).unwrap()),
            ("t7n3", affine_frobenius(7, 3).unwrap()),
            ("t8n50", symmetric(8).unwrap()),
        ] {
            let g = resolve_group(spec, &cat).unwrap();
            assert_eq!(g.degree(), family.degree());
            let a: Vec<String> = g.generators().iter().map(|p| p.to_cycles()).collect();
            let b: Vec<String> = family.generators().iter().map(|p| p.to_cycles()).collect();
            assert_eq!(a, b, "{spec}");
        }
    }

    #[test]
    fn family_indices() {
        assert_eq!(family_index(&cyclic(13).unwrap()), Some(1));
        assert_eq!(family_index(&dihedral(12).unwrap()), Some(12));
        assert_eq!(family_index(&affine_frobenius(13, 3).unwrap()), Some(3));
        assert_eq!(family_index(&affine_frobenius(13, 12).unwrap()), Some(6));
        assert_eq!(family_index(&affine_frobenius(7, 6).unwrap()), Some(4));
        assert_eq!(family_index(&symmetric(13).unwrap()), Some(9));
        assert_eq!(family_index(&alternating(11).unwrap()), Some(7));
    }
}
