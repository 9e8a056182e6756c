//! Real elements and real conjugacy classes.
//!
//! An element is real when some group element conjugates it to its inverse;
//! a class is real when it coincides with the class of the inverses. Reality
//! is always relative to an explicit ambient group — `Real(S)` for a
//! subgroup `S` means conjugation within `S` only.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::arith::{p_part, prime_divisors};
use crate::group::Group;
use crate::perm::Permutation;
use crate::structure::classes::{ClassData, ConjugacyClass};
use crate::structure::subgroup::Subgroup;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealError {
    #[error("element is not real, no inverting witness exists")]
    NotReal,
    #[error("group of order {order} is not a 2-group")]
    NotA2Group { order: u64 },
}

/// The real classes of a group with their derived size data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealClassData {
    /// Real classes only, ordered by (size, representative image list).
    pub classes: Vec<ConjugacyClass>,
    /// All real class sizes, sorted ascending, duplicates retained.
    pub sizes: Vec<u64>,
    /// Sizes of the real classes whose representative is non-central
    /// (equivalently, sizes exceeding 1), sorted ascending.
    pub noncentral_sizes: Vec<u64>,
    /// Primes dividing some real class size.
    pub rho_star: BTreeSet<u64>,
}

impl RealClassData {
    /// Extracts real-class data from a full class partition.
    pub fn from_classes(g: &Group, classes: &ClassData) -> RealClassData {
        let mut real: Vec<ConjugacyClass> = classes
            .classes
            .iter()
            .filter(|c| c.is_real)
            .cloned()
            .collect();
        real.sort_by(|a, b| {
            a.size
                .cmp(&b.size)
                .then_with(|| g.element(a.representative).cmp(g.element(b.representative)))
        });
        let sizes: Vec<u64> = real.iter().map(|c| c.size).collect();
        let noncentral_sizes: Vec<u64> = sizes.iter().copied().filter(|&s| s > 1).collect();
        let rho_star: BTreeSet<u64> = sizes
            .iter()
            .flat_map(|&s| prime_divisors(s))
            .collect();
        RealClassData {
            classes: real,
            sizes,
            noncentral_sizes,
            rho_star,
        }
    }

    /// The distinct 2-parts of the non-central real class sizes.
    pub fn noncentral_two_parts(&self) -> BTreeSet<u64> {
        self.noncentral_sizes.iter().map(|&s| p_part(s, 2)).collect()
    }

    /// The common 2-part demanded by the equal-2-part hypotheses:
    /// `Some(v)` when all non-central real class sizes share the 2-part `v`,
    /// `None` when there are no non-central real classes and the hypothesis
    /// holds vacuously. Groups with mixed 2-parts return `Err(())`-like
    /// absence via `CommonTwoPart::Mixed`.
    pub fn common_two_part(&self) -> CommonTwoPart {
        let parts = self.noncentral_two_parts();
        match parts.len() {
            0 => CommonTwoPart::Vacuous,
            1 => CommonTwoPart::Value(*parts.iter().next().unwrap()),
            _ => CommonTwoPart::Mixed,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommonTwoPart {
    /// No non-central real classes at all.
    Vacuous,
    /// Every non-central real class size has this 2-part.
    Value(u64),
    /// At least two distinct 2-parts occur.
    Mixed,
}

/// Full pipeline: classes of `g`, then the real restriction.
pub fn real_class_data(g: &Group) -> RealClassData {
    let classes = crate::structure::classes::conjugacy_classes(g);
    RealClassData::from_classes(g, &classes)
}

/// True iff some `g`-conjugate of `x` equals `x⁻¹`, by direct scan.
pub fn is_real(g: &Group, x: &Permutation) -> bool {
    assert!(g.contains(x), "reality test requires a group member");
    let inverse = x.inverse();
    g.elements().iter().any(|t| x.conjugate_by(t) == inverse)
}

/// Element indices of all real elements, read off the class partition.
pub fn real_element_indices(classes: &ClassData) -> Vec<usize> {
    let mut out: Vec<usize> = classes
        .classes
        .iter()
        .filter(|c| c.is_real)
        .flat_map(|c| c.members.iter().copied())
        .collect();
    out.sort_unstable();
    out
}

/// The extended centralizer `{g ∈ G : x^g ∈ {x, x⁻¹}}`. It contains the
/// centralizer with index 1 (when no element inverts `x`, or `x² = 1`) or 2.
pub fn extended_centralizer(g: &Group, x: &Permutation) -> Subgroup {
    assert!(g.contains(x), "extended centralizer requires a group member");
    let inverse = x.inverse();
    let elements: Vec<usize> = (0..g.order() as usize)
        .filter(|&i| {
            let conj = x.conjugate_by(g.element(i));
            conj == *x || conj == inverse
        })
        .collect();
    Subgroup::from_closed(elements, vec![])
}

/// For real `x`, a 2-element `t` with `x^t = x⁻¹`: take any inverting `g`
/// and raise it to the odd part of its order. Involutions and the identity
/// accept the identity witness.
pub fn inverting_two_element(g: &Group, x: &Permutation) -> Result<Permutation, RealError> {
    assert!(g.contains(x), "witness search requires a group member");
    let inverse = x.inverse();
    let witness = g
        .elements()
        .iter()
        .find(|t| x.conjugate_by(t) == inverse)
        .ok_or(RealError::NotReal)?;
    let odd_part = crate::arith::p_prime_part(witness.order(), 2);
    let t = witness.pow(odd_part as i64);
    debug_assert!(crate::arith::is_p_power(t.order(), 2));
    debug_assert_eq!(x.conjugate_by(&t), inverse);
    Ok(t)
}

/// Whether every real element of a Sylow 2-subgroup `S` (reality inside `S`)
/// is central in `S`. Cross-checked in debug builds against the equivalent
/// square condition on 2-groups.
pub fn sylow_two_real_central(g: &Group) -> bool {
    let sylow = crate::structure::sylow::sylow_subgroup(g, 2);
    let s = sylow.to_group(g);
    let result = real_central(&s);
    debug_assert_eq!(
        result,
        squares_determine_center_cosets(&s).expect("Sylow 2-subgroup is a 2-group"),
    );
    result
}

/// `Real(S) ⊆ Z(S)` for an arbitrary group `S`.
pub fn real_central(s: &Group) -> bool {
    let classes = crate::structure::classes::conjugacy_classes(s);
    classes
        .classes
        .iter()
        .filter(|c| c.is_real)
        .all(|c| c.size == 1)
}

/// The square condition on 2-groups: `x² = y²` forces `xZ(S) = yZ(S)`.
/// Errors when `s` is not a 2-group.
pub fn squares_determine_center_cosets(s: &Group) -> Result<bool, RealError> {
    if !crate::arith::is_p_power(s.order(), 2) {
        return Err(RealError::NotA2Group { order: s.order() });
    }
    let center = crate::structure::classes::center(s);
    let n = s.order() as usize;
    let squares: Vec<usize> = (0..n)
        .map(|i| {
            let sq = s.element(i).compose(s.element(i));
            s.index_of(&sq).expect("square stays in the group")
        })
        .collect();
    for x in 0..n {
        for y in (x + 1)..n {
            if squares[x] == squares[y] {
                let ratio = s.multiply_indices(x, s.inverse_index(y));
                if !center.contains_index(ratio) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::classes::conjugacy_classes;

    fn group(texts: &[&str], degree: usize) -> Group {
        let gens = texts
            .iter()
            .map(|t| Permutation::parse(t, degree).unwrap())
            .collect();
        Group::generate(gens, 10_000).unwrap()
    }

    // Quaternion group of order 8 in its regular representation.
    fn quaternion8() -> Group {
        group(&["(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)"], 8)
    }

    #[test]
    fn quaternion_sanity() {
        let q8 = quaternion8();
        assert_eq!(q8.order(), 8);
        assert_eq!(crate::structure::classes::center(&q8).order(), 2);
        assert_eq!(conjugacy_classes(&q8).size_multiset(), vec![1, 1, 2, 2, 2]);
    }

    #[test]
    fn involutions_and_identity_are_real() {
        let g = group(&["(1,2)", "(1,2,3)"], 3);
        assert!(is_real(&g, &Permutation::identity(3)));
        assert!(is_real(&g, &Permutation::parse("(1,2)", 3).unwrap()));
        // A 3-cycle is inverted by a transposition.
        assert!(is_real(&g, &Permutation::parse("(1,2,3)", 3).unwrap()));
    }

    #[test]
    fn c2_real_data() {
        let g = group(&["(1,2)"], 2);
        let data = real_class_data(&g);
        assert_eq!(data.sizes, vec![1, 1]);
        assert!(data.rho_star.is_empty());
        assert!(data.noncentral_sizes.is_empty());
    }

    #[test]
    fn dihedral_d10_real_sizes() {
        // Order 10 = 2·5: real class sizes 1, 2, 2, 5 — nontrivial sizes {2, 5}.
        let g = group(&["(1,2,3,4,5)", "(2,5)(3,4)"], 5);
        let data = real_class_data(&g);
        assert_eq!(data.sizes, vec![1, 2, 2, 5]);
        let nontrivial: BTreeSet<u64> = data.noncentral_sizes.iter().copied().collect();
        assert_eq!(nontrivial, BTreeSet::from([2, 5]));
    }

    #[test]
    fn extended_centralizer_cases() {
        let g = group(&["(1,2)", "(1,2,3)"], 3);
        // Involution: C* = C.
        let t = Permutation::parse("(1,2)", 3).unwrap();
        let c = crate::structure::classes::centralizer(&g, &t);
        let c_star = extended_centralizer(&g, &t);
        assert_eq!(c.element_indices(), c_star.element_indices());
        // Real of order > 2: index exactly 2.
        let r = Permutation::parse("(1,2,3)", 3).unwrap();
        let c = crate::structure::classes::centralizer(&g, &r);
        let c_star = extended_centralizer(&g, &r);
        assert_eq!(c_star.order(), 2 * c.order());
    }

    #[test]
    fn extended_centralizer_of_nonreal_equals_centralizer() {
        let g = group(&["(1,2,3,4)"], 4);
        let x = Permutation::parse("(1,2,3,4)", 4).unwrap();
        assert!(!is_real(&g, &x));
        let c = crate::structure::classes::centralizer(&g, &x);
        let c_star = extended_centralizer(&g, &x);
        assert_eq!(c.element_indices(), c_star.element_indices());
    }

    #[test]
    fn witness_for_involution_is_identity() {
        let g = group(&["(1,2)", "(1,2,3)"], 3);
        let t = inverting_two_element(&g, &Permutation::parse("(1,2)", 3).unwrap()).unwrap();
        assert!(t.is_identity());
    }

    #[test]
    fn witness_for_rotation_is_a_reflection() {
        let g = group(&["(1,2,3,4,5)", "(2,5)(3,4)"], 5);
        let x = Permutation::parse("(1,2,3,4,5)", 5).unwrap();
        let t = inverting_two_element(&g, &x).unwrap();
        assert_eq!(t.order(), 2);
        assert_eq!(x.conjugate_by(&t), x.inverse());
    }

    #[test]
    fn witness_absent_for_nonreal_element() {
        let g = group(&["(1,2,3,4)"], 4);
        let x = Permutation::parse("(1,2,3,4)", 4).unwrap();
        assert_eq!(inverting_two_element(&g, &x), Err(RealError::NotReal));
    }

    #[test]
    fn quaternion_fails_both_central_conditions() {
        let q8 = quaternion8();
        assert!(!real_central(&q8));
        assert_eq!(squares_determine_center_cosets(&q8), Ok(false));
        assert!(!sylow_two_real_central(&q8));
    }

    #[test]
    fn cyclic4_square_condition_holds() {
        let c4 = group(&["(1,2,3,4)"], 4);
        assert_eq!(squares_determine_center_cosets(&c4), Ok(true));
        assert!(sylow_two_real_central(&c4));
    }

    #[test]
    fn square_condition_rejects_non_2_groups() {
        let sym3 = group(&["(1,2)", "(1,2,3)"], 3);
        assert_eq!(
            squares_determine_center_cosets(&sym3),
            Err(RealError::NotA2Group { order: 6 })
        );
    }

    #[test]
    fn sym3_two_parts() {
        let g = group(&["(1,2)", "(1,2,3)"], 3);
        let data = real_class_data(&g);
        assert_eq!(data.sizes, vec![1, 2, 3]);
        assert_eq!(data.noncentral_two_parts(), BTreeSet::from([1, 2]));
        assert_eq!(data.common_two_part(), CommonTwoPart::Mixed);
    }

    #[test]
    fn abelian_two_parts_empty() {
        let g = group(&["(1,2,3,4,5,6)"], 6);
        let data = real_class_data(&g);
        assert!(data.noncentral_two_parts().is_empty());
        assert_eq!(data.common_two_part(), CommonTwoPart::Vacuous);
    }

    #[test]
    fn sym4_two_parts_fixed_by_brute_force() {
        let g = group(&["(1,2)", "(1,2,3,4)"], 4);
        let data = real_class_data(&g);
        assert_eq!(data.sizes, vec![1, 3, 6, 6, 8]);
        assert_eq!(data.noncentral_two_parts(), BTreeSet::from([1, 2, 8]));
    }
}
