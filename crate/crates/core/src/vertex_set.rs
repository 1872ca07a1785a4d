//! Small vertex sets represented as 64-bit masks.
//!
//! Vertex labels are 1-based: label `v` occupies bit `v - 1`. All orderings
//! on vertex sets in this crate are lexicographic on the sorted vertex
//! sequence (so `{1,2,3,9} < {1,2,4,5}`), which differs from the numeric
//! order of the underlying masks.

use std::cmp::Ordering;
use std::fmt;

/// Maximum vertex label supported by the mask representation.
pub const MAX_VERTEX: u8 = 64;

/// A set of vertex labels out of `1..=64`, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// Set containing the single label `v`.
    pub fn singleton(v: u8) -> Self {
        debug_assert!((1..=MAX_VERTEX).contains(&v));
        VertexSet(1u64 << (v - 1))
    }

    /// Set `{1, 2, ..., n}`.
    pub fn full(n: u8) -> Self {
        debug_assert!(n <= MAX_VERTEX);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn from_vertices(vs: &[u8]) -> Self {
        let mut m = 0u64;
        for &v in vs {
            assert!((1..=MAX_VERTEX).contains(&v), "vertex label out of range: {v}");
            m |= 1u64 << (v - 1);
        }
        VertexSet(m)
    }

    pub fn vertices(self) -> Vec<u8> {
        self.iter().collect()
    }

    /// Iterates labels in increasing order.
    pub fn iter(self) -> impl Iterator<Item = u8> {
        let mut m = self.0;
        std::iter::from_fn(move || {
            if m == 0 {
                None
            } else {
                let v = m.trailing_zeros() as u8 + 1;
                m &= m - 1;
                Some(v)
            }
        })
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: u8) -> bool {
        (1..=MAX_VERTEX).contains(&v) && self.0 & (1u64 << (v - 1)) != 0
    }

    pub fn with(self, v: u8) -> Self {
        VertexSet(self.0 | VertexSet::singleton(v).0)
    }

    pub fn without(self, v: u8) -> Self {
        VertexSet(self.0 & !VertexSet::singleton(v).0)
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn min_vertex(self) -> Option<u8> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as u8 + 1)
        }
    }

    pub fn max_vertex(self) -> Option<u8> {
        if self.0 == 0 {
            None
        } else {
            Some(64 - self.0.leading_zeros() as u8)
        }
    }

    /// Lexicographic comparison of the sorted label sequences.
    ///
    /// The smallest differing label decides; a proper prefix sorts first.
    pub fn lex_cmp(self, other: Self) -> Ordering {
        if self.0 == other.0 {
            return Ordering::Equal;
        }
        let diff = self.0 ^ other.0;
        let low = diff & diff.wrapping_neg();
        let pos = low.trailing_zeros();
        let rest = |m: u64| {
            if pos == 63 {
                0
            } else {
                m >> (pos + 1)
            }
        };
        if self.0 & low != 0 {
            // `self` owns the smallest differing label. It precedes `other`
            // unless `other` has already run out (then `other` is a prefix).
            if rest(other.0) != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        } else if rest(self.0) != 0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    /// Compact label string: one digit per label below 10, larger labels
    /// space-separated, e.g. `{1,2,3,5,7,11,13}` renders as `12357 11 13`.
    pub fn to_compact_string(self) -> String {
        let mut out = String::new();
        for v in self.iter() {
            if v < 10 {
                out.push_str(&v.to_string());
            } else {
                out.push(' ');
                out.push_str(&v.to_string());
            }
        }
        out
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lex_cmp(*other)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_compact_string())
    }
}

/// All `k`-subsets of `{1..=n}` in increasing numeric mask order
/// (Gosper's hack). Callers needing lexicographic order must re-sort.
pub fn k_subsets(n: u8, k: usize) -> impl Iterator<Item = VertexSet> {
    assert!(n <= MAX_VERTEX);
    let limit: u128 = 1u128 << n;
    let mut cur: u128 = if k == 0 { 0 } else { (1u128 << k) - 1 };
    let mut done = k == 0 || k > n as usize;
    std::iter::from_fn(move || {
        if done || cur >= limit {
            return None;
        }
        let out = VertexSet(cur as u64);
        // Gosper: next mask with the same popcount.
        let c = cur & cur.wrapping_neg();
        let r = cur + c;
        if r >= limit {
            done = true;
        } else {
            cur = (((r ^ cur) >> 2) / c) | r;
        }
        Some(out)
    })
}
