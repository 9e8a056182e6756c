//! Permutations on the point set `{0, …, degree−1}`.
//!
//! Composition convention, fixed once for the whole crate: the **left factor
//! acts first**. `a.compose(&b)` is the map `i ↦ b(a(i))`, written `a·b`.
//! Conjugation is defined from it as `x^g = g⁻¹·x·g` and the commutator as
//! `[x,y] = x⁻¹·y⁻¹·x·y`. Points are 0-based in memory and 1-based in all
//! text I/O (cycle notation).

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::lcm;

/// Errors from constructing or parsing permutations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("image list of length {len} is not a bijection on 0..{len}")]
    NotABijection { len: usize },
    #[error("malformed cycle text at {token:?}")]
    Malformed { token: String },
    #[error("point {point} repeated in cycle notation")]
    RepeatedPoint { point: u64 },
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: u64, degree: usize },
}

/// A bijection on `{0, …, degree−1}`, stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    /// The identity on `degree` points.
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image list, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &im in &images {
            if (im as usize) >= n || seen[im as usize] {
                return Err(PermError::NotABijection { len: n });
            }
            seen[im as usize] = true;
        }
        Ok(Permutation { images })
    }

    /// Parses disjoint-cycle notation over 1-based points, e.g. `"(1,2,3)(4,5)"`.
    ///
    /// The empty string (or `"()"`) denotes the identity. Points not mentioned
    /// are fixed. Rejects repeated points, points exceeding `degree`, and
    /// malformed text.
    pub fn parse(text: &str, degree: usize) -> Result<Self, PermError> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Ok(Permutation { images });
        }
        let mut rest = trimmed;
        while !rest.is_empty() {
            rest = rest.trim_start();
            if rest.is_empty() {
                break;
            }
            if !rest.starts_with('(') {
                return Err(PermError::Malformed {
                    token: rest.chars().take(8).collect(),
                });
            }
            let close = rest.find(')').ok_or_else(|| PermError::Malformed {
                token: rest.chars().take(8).collect(),
            })?;
            let body = &rest[1..close];
            rest = &rest[close + 1..];
            let body = body.trim();
            if body.is_empty() {
                continue; // "()" is the identity cycle
            }
            let mut cycle: Vec<u32> = Vec::new();
            for tok in body.split(',') {
                let tok = tok.trim();
                let point: u64 = tok.parse().map_err(|_| PermError::Malformed {
                    token: tok.to_string(),
                })?;
                if point == 0 || point as usize > degree {
                    return Err(PermError::PointOutOfRange { point, degree });
                }
                let zero_based = (point - 1) as u32;
                if used[zero_based as usize] {
                    return Err(PermError::RepeatedPoint { point });
                }
                used[zero_based as usize] = true;
                cycle.push(zero_based);
            }
            for (k, &pt) in cycle.iter().enumerate() {
                images[pt as usize] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Image of a single point.
    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i as u32 == im)
    }

    /// `self` followed by `other`: the map `i ↦ other(self(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(
            self.degree(),
            other.degree(),
            "degree mismatch in composition"
        );
        Permutation {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (i, &im) in self.images.iter().enumerate() {
            images[im as usize] = i as u32;
        }
        Permutation { images }
    }

    /// The conjugate `self^g = g⁻¹·self·g`, i.e. the map `g(i) ↦ g(self(i))`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        assert_eq!(self.degree(), g.degree(), "degree mismatch in conjugation");
        let mut images = vec![0u32; self.images.len()];
        for i in 0..self.images.len() {
            images[g.images[i] as usize] = g.images[self.images[i] as usize];
        }
        Permutation { images }
    }

    /// Allocation-free commuting test: `self·other = other·self`.
    pub fn commutes_with(&self, other: &Permutation) -> bool {
        debug_assert_eq!(self.degree(), other.degree());
        self.images
            .iter()
            .zip(&other.images)
            .all(|(&a, &b)| other.images[a as usize] == self.images[b as usize])
    }

    /// The commutator `[self, other] = self⁻¹·other⁻¹·self·other`.
    pub fn commutator_with(&self, other: &Permutation) -> Permutation {
        self.inverse()
            .compose(&other.inverse())
            .compose(self)
            .compose(other)
    }

    /// `self` composed with itself `k` times; negative `k` powers the inverse.
    pub fn pow(&self, k: i64) -> Permutation {
        let mut base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order: the least `k ≥ 1` with `self^k` the identity.
    pub fn order(&self) -> u64 {
        self.cycles_with_fixed(false)
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    /// Cycle decomposition; `include_fixed` keeps length-1 cycles.
    fn cycles_with_fixed(&self, include_fixed: bool) -> Vec<Vec<u32>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start as u32];
            seen[start] = true;
            let mut next = self.images[start] as usize;
            while next != start {
                seen[next] = true;
                cycle.push(next as u32);
                next = self.images[next] as usize;
            }
            if cycle.len() > 1 || include_fixed {
                cycles.push(cycle);
            }
        }
        cycles
    }

    /// Nontrivial cycles, each starting at its smallest point, ordered by
    /// that point. This is the canonical form used by `Display`.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        self.cycles_with_fixed(false)
    }
}

impl fmt::Display for Permutation {
    /// Canonical 1-based cycle notation; identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (k, pt) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", pt + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_transposition() {
        let p = Permutation::parse("(1,2)", 3).unwrap();
        assert_eq!(p.images(), &[1, 0, 2]);
    }

    #[test]
    fn parse_identity_forms() {
        assert_eq!(
            Permutation::parse("", 4).unwrap().images(),
            &[0, 1, 2, 3]
        );
        assert_eq!(
            Permutation::parse("()", 4).unwrap(),
            Permutation::identity(4)
        );
    }

    #[test]
    fn parse_two_cycles() {
        let p = Permutation::parse("(1,2,3)(4,5)", 5).unwrap();
        assert_eq!(p.images(), &[1, 2, 0, 4, 3]);
    }

    #[test]
    fn parse_errors_name_the_token() {
        match Permutation::parse("(1,x)", 3) {
            Err(PermError::Malformed { token }) => assert_eq!(token, "x"),
            other => panic!("expected malformed token, got {other:?}"),
        }
        assert_eq!(
            Permutation::parse("(1,2)(2,3)", 3),
            Err(PermError::RepeatedPoint { point: 2 })
        );
        assert_eq!(
            Permutation::parse("(1,4)", 3),
            Err(PermError::PointOutOfRange { point: 4, degree: 3 })
        );
        assert!(matches!(
            Permutation::parse("(1,2", 3),
            Err(PermError::Malformed { .. })
        ));
    }

    #[test]
    fn compose_is_left_first() {
        // (1,2) then (2,3): 1→2→3, 2→1, 3→2 — the 3-cycle (1,3,2).
        let a = Permutation::parse("(1,2)", 3).unwrap();
        let b = Permutation::parse("(2,3)", 3).unwrap();
        assert_eq!(a.compose(&b).images(), &[2, 0, 1]);
        assert_eq!(a.compose(&b).to_string(), "(1,3,2)");
    }

    #[test]
    fn identity_and_inverse_laws() {
        let p = Permutation::parse("(1,4,2)(3,5)", 5).unwrap();
        let id = Permutation::identity(5);
        assert_eq!(id.compose(&p), p);
        assert_eq!(p.compose(&p.inverse()), id);
        assert_eq!(
            Permutation::parse("(1,2,3)", 3).unwrap().inverse(),
            Permutation::parse("(1,3,2)", 3).unwrap()
        );
    }

    #[test]
    fn orders() {
        assert_eq!(Permutation::identity(4).order(), 1);
        assert_eq!(Permutation::parse("(1,2,3)(4,5)", 5).unwrap().order(), 6);
        assert_eq!(Permutation::parse("(1,2,3,4)", 4).unwrap().order(), 4);
    }

    #[test]
    fn conjugation_matches_definition() {
        let x = Permutation::parse("(1,2,3)", 4).unwrap();
        let g = Permutation::parse("(1,4)", 4).unwrap();
        let direct = g.inverse().compose(&x).compose(&g);
        assert_eq!(x.conjugate_by(&g), direct);
        assert_eq!(x.conjugate_by(&g).to_string(), "(2,3,4)");
    }

    #[test]
    fn pow_and_order_agree() {
        let p = Permutation::parse("(1,2,3,4,5,6)", 6).unwrap();
        assert_eq!(p.pow(6), Permutation::identity(6));
        assert_eq!(p.pow(-1), p.inverse());
        assert_eq!(p.pow(2).order(), 3);
    }

    #[test]
    fn display_roundtrip() {
        let p = Permutation::parse("(2,7)(3,5,4)", 8).unwrap();
        let shown = p.to_string();
        assert_eq!(Permutation::parse(&shown, 8).unwrap(), p);
    }
}
