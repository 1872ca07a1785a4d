//! Permutations of `{1..=n}` in cycle notation.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::vertex_set::{VertexSet, MAX_VERTEX};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("degree {0} exceeds the supported maximum of {max}", max = MAX_VERTEX)]
    DegreeTooLarge(u8),
    #[error("point {0} outside 1..={1}")]
    PointOutOfRange(u8, u8),
    #[error("point {0} appears twice")]
    RepeatedPoint(u8),
    #[error("malformed cycle notation: {0}")]
    Malformed(String),
}

/// A permutation of `{1..=degree}`, stored as a 0-based image table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(degree: u8) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from a 0-based image table.
    pub fn from_images(images: Vec<u8>) -> Result<Self, PermError> {
        let n = images.len();
        if n > MAX_VERTEX as usize {
            return Err(PermError::DegreeTooLarge(n as u8));
        }
        let mut seen = vec![false; n];
        for &im in &images {
            if im as usize >= n {
                return Err(PermError::PointOutOfRange(im + 1, n as u8));
            }
            if seen[im as usize] {
                return Err(PermError::RepeatedPoint(im + 1));
            }
            seen[im as usize] = true;
        }
        Ok(Permutation { images })
    }

    /// Parses disjoint cycle notation over `1..=degree`, e.g. `"(1,2)(3,4)"`.
    /// `"()"` and the empty string denote the identity. Points absent from
    /// every cycle are fixed.
    pub fn parse_cycles(text: &str, degree: u8) -> Result<Self, PermError> {
        if degree > MAX_VERTEX {
            return Err(PermError::DegreeTooLarge(degree));
        }
        let mut images: Vec<u8> = (0..degree).collect();
        let mut used = vec![false; degree as usize];
        let mut rest = text.trim();
        if rest.is_empty() || rest == "()" {
            return Ok(Permutation { images });
        }
        while !rest.is_empty() {
            let Some(open) = rest.strip_prefix('(') else {
                return Err(PermError::Malformed(format!(
                    "expected '(' at {rest:?}"
                )));
            };
            let Some(close) = open.find(')') else {
                return Err(PermError::Malformed("unbalanced parenthesis".into()));
            };
            let body = &open[..close];
            rest = open[close + 1..].trim_start();
            let mut cycle = Vec::new();
            for tok in body.split(|c: char| c == ',' || c.is_whitespace()) {
                let tok = tok.trim();
                if tok.is_empty() {
                    continue;
                }
                let p: u8 = tok
                    .parse()
                    .map_err(|_| PermError::Malformed(format!("bad point {tok:?}")))?;
                if p == 0 || p > degree {
                    return Err(PermError::PointOutOfRange(p, degree));
                }
                if used[p as usize - 1] {
                    return Err(PermError::RepeatedPoint(p));
                }
                used[p as usize - 1] = true;
                cycle.push(p - 1);
            }
            if cycle.len() == 1 {
                return Err(PermError::Malformed(format!(
                    "cycle of length one: ({})",
                    cycle[0] + 1
                )));
            }
            for w in 0..cycle.len() {
                images[cycle[w] as usize] = cycle[(w + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> u8 {
        self.images.len() as u8
    }

    /// Image of the 1-based point `v`.
    pub fn apply(&self, v: u8) -> u8 {
        self.images[v as usize - 1] + 1
    }

    /// Pointwise image of a vertex set.
    pub fn apply_set(&self, s: VertexSet) -> VertexSet {
        let mut out = 0u64;
        let mut m = s.0;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            out |= 1u64 << self.images[i];
            m &= m - 1;
        }
        VertexSet(out)
    }

    /// Composition acting as `self` after `rhs`:
    /// `self.compose(&rhs).apply(v) == self.apply(rhs.apply(v))`.
    pub fn compose(&self, rhs: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), rhs.degree());
        Permutation {
            images: rhs.images.iter().map(|&i| self.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.images.len()];
        for (i, &im) in self.images.iter().enumerate() {
            images[im as usize] = i as u8;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i as u8 == im)
    }

    /// Multiplicative order.
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.images.len()];
        let mut ord: u64 = 1;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p] as usize;
                len += 1;
            }
            ord = num_integer::lcm(ord, len);
        }
        ord
    }

    /// Cycle lengths greater than one, sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.images.len()];
        let mut lens = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p] as usize;
                len += 1;
            }
            if len > 1 {
                lens.push(len);
            }
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    /// Sign: `true` for even permutations.
    pub fn is_even(&self) -> bool {
        self.cycle_type().iter().map(|l| l - 1).sum::<usize>() % 2 == 0
    }

    /// Disjoint cycle notation with the smallest moved point first in each
    /// cycle and cycles ordered by smallest moved point.
    pub fn to_cycles(&self) -> String {
        let mut seen = vec![false; self.images.len()];
        let mut out = String::new();
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] as usize == start {
                seen[start] = true;
                continue;
            }
            out.push('(');
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    out.push(',');
                }
                out.push_str(&(p + 1).to_string());
                first = false;
                p = self.images[p] as usize;
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycles())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycles())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_apply() {
        let p = Permutation::parse_cycles("(1,2)(3,4)", 4).unwrap();
        assert_eq!(p.apply(1), 2);
        assert_eq!(p.apply(2), 1);
        assert_eq!(p.apply(3), 4);
        assert_eq!(p.apply(4), 3);
        assert_eq!(p.to_cycles(), "(1,2)(3,4)");
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert_eq!(
            Permutation::parse_cycles("(1,8)", 7),
            Err(PermError::PointOutOfRange(8, 7))
        );
        assert_eq!(
            Permutation::parse_cycles("(1,2)(2,3)", 7),
            Err(PermError::RepeatedPoint(2))
        );
        assert!(Permutation::parse_cycles("(1,2", 7).is_err());
        assert!(Permutation::parse_cycles("1,2)", 7).is_err());
    }

    #[test]
    fn identity_forms() {
        assert!(Permutation::parse_cycles("()", 5).unwrap().is_identity());
        assert!(Permutation::parse_cycles("", 5).unwrap().is_identity());
        assert_eq!(Permutation::identity(5).to_cycles(), "()");
    }

    #[test]
    fn compose_and_inverse() {
        let a = Permutation::parse_cycles("(1,2,3,4,5,6,7)", 7).unwrap();
        let b = Permutation::parse_cycles("(1,6)(2,5)(3,4)", 7).unwrap();
        // b inverts the 7-cycle: b a b^-1 = a^-1.
        let conj = b.compose(&a).compose(&b.inverse());
        assert_eq!(conj, a.inverse());
        assert!(a.compose(&a.inverse()).is_identity());
        let c = a.compose(&b);
        assert_eq!(c.apply(1), a.apply(b.apply(1)));
    }

    #[test]
    fn apply_set_matches_pointwise() {
        let p = Permutation::parse_cycles("(1,2,3,4,5,6,7)", 7).unwrap();
        let s = VertexSet::from_vertices(&[1, 2, 4]);
        assert_eq!(p.apply_set(s), VertexSet::from_vertices(&[2, 3, 5]));
    }

    #[test]
    fn order_and_parity() {
        let a = Permutation::parse_cycles("(1,2,3,4,5,6,7)", 7).unwrap();
        assert_eq!(a.order(), 7);
        assert!(a.is_even());
        let b = Permutation::parse_cycles("(1,6)(2,5)(3,4)", 7).unwrap();
        assert_eq!(b.order(), 2);
        assert!(!b.is_even());
        assert_eq!(b.cycle_type(), vec![2, 2, 2]);
    }

    #[test]
    fn roundtrip_cycles() {
        for text in ["(1,3,5)(2,4)", "(2,7)", "()", "(1,2,3,4,5,6,7)"] {
            let p = Permutation::parse_cycles(text, 7).unwrap();
            let q = Permutation::parse_cycles(&p.to_cycles(), 7).unwrap();
            assert_eq!(p, q);
        }
    }
}
