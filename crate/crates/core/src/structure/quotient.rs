//! Quotient groups realized as permutation groups on right cosets.
//!
//! For normal `N ⊴ G`, right multiplication permutes the right cosets `Ng`;
//! because `N` is normal the action is faithful for `G/N`, and it is in fact
//! the regular action of the quotient on itself.

use std::collections::HashMap;

use crate::group::Group;
use crate::perm::Permutation;
use crate::structure::subgroup::Subgroup;

/// Projection data from a group onto its quotient by a normal subgroup.
#[derive(Debug, Clone)]
pub struct QuotientMap {
    /// `coset_of[i]` is the coset index of parent element `i`.
    coset_of: Vec<usize>,
    /// Least parent element index in each coset.
    coset_rep: Vec<usize>,
    /// Element index, in the quotient group, of each coset's permutation.
    quotient_element_of_coset: Vec<usize>,
}

impl QuotientMap {
    /// The identity projection used when the kernel is trivial and the
    /// quotient is represented by the group itself.
    pub fn identity(order: usize) -> QuotientMap {
        QuotientMap {
            coset_of: (0..order).collect(),
            coset_rep: (0..order).collect(),
            quotient_element_of_coset: (0..order).collect(),
        }
    }

    pub fn coset_count(&self) -> usize {
        self.coset_rep.len()
    }

    pub fn coset_of(&self, parent_index: usize) -> usize {
        self.coset_of[parent_index]
    }

    pub fn coset_representative(&self, coset: usize) -> usize {
        self.coset_rep[coset]
    }

    /// Parent element indices making up a coset.
    pub fn coset_members(&self, coset: usize) -> Vec<usize> {
        self.coset_of
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c == coset)
            .map(|(i, _)| i)
            .collect()
    }

    /// Image of parent element `i` as an element index of the quotient group.
    pub fn project_element(&self, i: usize) -> usize {
        self.quotient_element_of_coset[self.coset_of[i]]
    }

    /// Coset index whose quotient-group element index is `q_index`.
    pub fn coset_of_quotient_element(&self, q_index: usize) -> usize {
        self.quotient_element_of_coset
            .iter()
            .position(|&e| e == q_index)
            .expect("every quotient element corresponds to a coset")
    }
}

/// The quotient `G/N` as a permutation group of degree `|G:N|`, together with
/// the projection map. Panics if `n` is not normal in `g`.
pub fn quotient(g: &Group, n: &Subgroup) -> (Group, QuotientMap) {
    assert!(n.is_normal_in(g), "quotient requires a normal subgroup");
    let order = g.order() as usize;

    // Label cosets by sweeping elements in canonical order: a coset's label
    // is assigned when its least element is first seen, so labels are
    // deterministic.
    let mut coset_of = vec![usize::MAX; order];
    let mut coset_rep: Vec<usize> = Vec::new();
    for start in 0..order {
        if coset_of[start] != usize::MAX {
            continue;
        }
        let coset = coset_rep.len();
        coset_rep.push(start);
        for &m in n.element_indices() {
            let member = g.multiply_indices(m, start);
            coset_of[member] = coset;
        }
    }
    let coset_count = coset_rep.len();

    // Right multiplication by a fixed element permutes cosets.
    let action = |element: usize| -> Permutation {
        let images: Vec<u32> = (0..coset_count)
            .map(|c| coset_of[g.multiply_indices(coset_rep[c], element)] as u32)
            .collect();
        Permutation::from_images(images).expect("coset action is a permutation")
    };

    let generator_perms: Vec<Permutation> = g
        .generators()
        .iter()
        .map(|gen| action(g.index_of(gen).expect("generator is a member")))
        .collect();
    let element_perms: Vec<Permutation> = (0..coset_count).map(|c| action(coset_rep[c])).collect();

    let mut index_by_perm: HashMap<Permutation, usize> = HashMap::new();
    let quotient_group = Group::from_closed_elements(coset_count, generator_perms, element_perms.clone());
    for (i, e) in quotient_group.elements().iter().enumerate() {
        index_by_perm.insert(e.clone(), i);
    }
    let quotient_element_of_coset: Vec<usize> = element_perms
        .iter()
        .map(|p| index_by_perm[p])
        .collect();

    (
        quotient_group,
        QuotientMap {
            coset_of,
            coset_rep,
            quotient_element_of_coset,
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::classes::conjugacy_classes;
    use crate::structure::subgroup::normal_closure;

    fn group(texts: &[&str], degree: usize) -> Group {
        let gens = texts
            .iter()
            .map(|t| Permutation::parse(t, degree).unwrap())
            .collect();
        Group::generate(gens, 10_000).unwrap()
    }

    #[test]
    fn sym4_mod_v4_looks_like_sym3() {
        let g = group(&["(1,2)", "(1,2,3,4)"], 4);
        let v4 = normal_closure(
            &g,
            &[g.index_of(&Permutation::parse("(1,2)(3,4)", 4).unwrap()).unwrap()],
        );
        let (q, _) = quotient(&g, &v4);
        assert_eq!(q.order(), 6);
        assert_eq!(conjugacy_classes(&q).size_multiset(), vec![1, 2, 3]);
    }

    #[test]
    fn quotient_by_whole_is_trivial() {
        let g = group(&["(1,2)", "(1,2,3)"], 3);
        let (q, _) = quotient(&g, &Subgroup::whole(&g));
        assert_eq!(q.order(), 1);
        assert_eq!(q.degree(), 1);
    }

    #[test]
    fn quotient_by_trivial_is_regular() {
        let g = group(&["(1,2)", "(1,2,3)"], 3);
        let (q, map) = quotient(&g, &Subgroup::trivial(&g));
        assert_eq!(q.order(), 6);
        assert_eq!(q.degree(), 6);
        // Projection is a bijection here.
        for i in 0..6 {
            assert_eq!(map.coset_of(i), i);
        }
    }

    #[test]
    fn projection_is_a_homomorphism() {
        let g = group(&["(1,2)", "(1,2,3,4)"], 4);
        let v4 = normal_closure(
            &g,
            &[g.index_of(&Permutation::parse("(1,2)(3,4)", 4).unwrap()).unwrap()],
        );
        let (q, map) = quotient(&g, &v4);
        for a in 0..g.order() as usize {
            for b in [0usize, 3, 7, 11, 23] {
                let ab = g.multiply_indices(a, b);
                let pa = map.project_element(a);
                let pb = map.project_element(b);
                let pab = map.project_element(ab);
                assert_eq!(q.multiply_indices(pa, pb), pab);
            }
        }
    }

    #[test]
    fn coset_members_partition() {
        let g = group(&["(1,2)", "(1,2,3,4)"], 4);
        let a4 = normal_closure(
            &g,
            &[g.index_of(&Permutation::parse("(1,2,3)", 4).unwrap()).unwrap()],
        );
        let (_, map) = quotient(&g, &a4);
        assert_eq!(map.coset_count(), 2);
        let mut all: Vec<usize> = (0..map.coset_count())
            .flat_map(|c| map.coset_members(c))
            .collect();
        all.sort_unstable();
        assert_eq!(all, (0..24).collect::<Vec<_>>());
    }
}
