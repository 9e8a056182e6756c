//! Finite permutation groups with fully materialized element sets.
//!
//! Element sets are produced by breadth-first closure under right
//! multiplication by the generators, then sorted; exceeding the element cap
//! aborts generation rather than returning a partial group. The sorted order
//! puts the identity at index 0 and gives every downstream computation a
//! canonical element numbering.

use std::collections::HashSet;

use thiserror::Error;

use crate::perm::Permutation;

/// Default ceiling on materialized element counts.
pub const DEFAULT_ELEMENT_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("generator list is empty")]
    NoGenerators,
    #[error("generator degree {found} differs from expected degree {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("closure exceeds the element cap of {cap}")]
    ClosureExceedsCap { cap: usize },
}

/// A finite permutation group: generators plus its full, sorted element set.
///
/// Immutable after generation and safe to share across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

impl Group {
    /// Breadth-first closure of the generators. Fails with
    /// [`GenerateError::ClosureExceedsCap`] once more than `cap` elements
    /// appear; no partial group is ever returned.
    pub fn generate(generators: Vec<Permutation>, cap: usize) -> Result<Group, GenerateError> {
        let degree = match generators.first() {
            Some(g) => g.degree(),
            None => return Err(GenerateError::NoGenerators),
        };
        for g in &generators {
            if g.degree() != degree {
                return Err(GenerateError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let elements = close_under_product(degree, &generators, cap)?;
        Ok(Group {
            degree,
            generators,
            elements,
        })
    }

    /// Wraps an already-closed element set without re-generating. The caller
    /// guarantees closure; element order is normalized here.
    pub(crate) fn from_closed_elements(
        degree: usize,
        generators: Vec<Permutation>,
        mut elements: Vec<Permutation>,
    ) -> Group {
        elements.sort_unstable();
        debug_assert!(elements.windows(2).all(|w| w[0] != w[1]));
        debug_assert!(!elements.is_empty() && elements[0].is_identity());
        Group {
            degree,
            generators,
            elements,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// All elements, sorted by image list; the identity sits at index 0.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, index: usize) -> &Permutation {
        &self.elements[index]
    }

    pub fn identity(&self) -> &Permutation {
        &self.elements[0]
    }

    /// Canonical index of `p`, or `None` when `p` is not a member.
    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        assert_eq!(self.degree, p.degree(), "degree mismatch in membership test");
        self.elements.binary_search(p).ok()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index_of(p).is_some()
    }

    /// Index of the product `elements[a] · elements[b]`.
    pub fn multiply_indices(&self, a: usize, b: usize) -> usize {
        let prod = self.elements[a].compose(&self.elements[b]);
        self.index_of(&prod).expect("group not closed under product")
    }

    /// Index of the inverse of `elements[a]`.
    pub fn inverse_index(&self, a: usize) -> usize {
        let inv = self.elements[a].inverse();
        self.index_of(&inv).expect("group not closed under inverse")
    }

    /// Multiplicative orders of all elements, indexed like `elements()`.
    pub fn element_orders(&self) -> Vec<u64> {
        self.elements.iter().map(|p| p.order()).collect()
    }
}

fn close_under_product(
    degree: usize,
    generators: &[Permutation],
    cap: usize,
) -> Result<Vec<Permutation>, GenerateError> {
    let mut seen: HashSet<Permutation> = HashSet::new();
    let identity = Permutation::identity(degree);
    seen.insert(identity.clone());
    let mut frontier = vec![identity];
    while let Some(current) = frontier.pop() {
        for g in generators {
            let next = current.compose(g);
            if !seen.contains(&next) {
                if seen.len() >= cap {
                    return Err(GenerateError::ClosureExceedsCap { cap });
                }
                seen.insert(next.clone());
                frontier.push(next);
            }
        }
    }
    let mut elements: Vec<Permutation> = seen.into_iter().collect();
    elements.sort_unstable();
    Ok(elements)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perms(texts: &[&str], degree: usize) -> Vec<Permutation> {
        texts
            .iter()
            .map(|t| Permutation::parse(t, degree).unwrap())
            .collect()
    }

    #[test]
    fn sym3_has_order_6() {
        let g = Group::generate(perms(&["(1,2)", "(1,2,3)"], 3), 100).unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.elements()[0].is_identity());
    }

    #[test]
    fn dihedral_10_by_brute_closure() {
        let g = Group::generate(perms(&["(1,2,3,4,5)", "(2,5)(3,4)"], 5), 100).unwrap();
        assert_eq!(g.order(), 10);
    }

    #[test]
    fn cap_violation_is_an_error() {
        let err = Group::generate(perms(&["(1,2)"], 2), 1).unwrap_err();
        assert_eq!(err, GenerateError::ClosureExceedsCap { cap: 1 });
    }

    #[test]
    fn membership() {
        let g = Group::generate(perms(&["(1,2,3)"], 3), 100).unwrap();
        assert!(g.contains(&Permutation::identity(3)));
        assert!(g.contains(&Permutation::parse("(1,2,3)", 3).unwrap()));
        assert!(!g.contains(&Permutation::parse("(1,2)", 3).unwrap()));
    }

    #[test]
    fn empty_generator_list_rejected() {
        assert_eq!(
            Group::generate(vec![], 10).unwrap_err(),
            GenerateError::NoGenerators
        );
    }

    #[test]
    fn mixed_degrees_rejected() {
        let gens = vec![
            Permutation::parse("(1,2)", 2).unwrap(),
            Permutation::parse("(1,2,3)", 3).unwrap(),
        ];
        assert!(matches!(
            Group::generate(gens, 10),
            Err(GenerateError::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn index_arithmetic() {
        let g = Group::generate(perms(&["(1,2)", "(1,2,3)"], 3), 100).unwrap();
        for a in 0..g.order() as usize {
            let inv = g.inverse_index(a);
            assert_eq!(g.multiply_indices(a, inv), 0);
        }
    }
}
