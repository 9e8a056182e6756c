//! Conjugacy classes, centralizers and the center, all by exhaustive search.

use std::collections::HashSet;

use crate::group::Group;
use crate::perm::Permutation;
use crate::structure::subgroup::Subgroup;

/// A conjugacy class `x^G`, stored as sorted element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    /// Index of the lexicographically least member, which seeds the orbit.
    pub representative: usize,
    /// All members, sorted ascending.
    pub members: Vec<usize>,
    pub size: u64,
    /// Real ⇔ the inverse of the representative lies in the class.
    pub is_real: bool,
}

/// The full class partition of a group plus the member→class lookup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassData {
    /// Classes ordered by representative index (hence deterministically).
    pub classes: Vec<ConjugacyClass>,
    /// `class_of[i]` is the position in `classes` of the class containing
    /// element `i`.
    pub class_of: Vec<usize>,
}

impl ClassData {
    pub fn class_of_index(&self, element: usize) -> &ConjugacyClass {
        &self.classes[self.class_of[element]]
    }

    pub fn size_of_class_of(&self, element: usize) -> u64 {
        self.class_of_index(element).size
    }

    /// Class sizes as a sorted multiset.
    pub fn size_multiset(&self) -> Vec<u64> {
        let mut sizes: Vec<u64> = self.classes.iter().map(|c| c.size).collect();
        sizes.sort_unstable();
        sizes
    }
}

/// Partitions the group into conjugacy classes.
///
/// Each class is the conjugation orbit of its representative, grown by
/// conjugating with the group generators only; reality is read off by
/// locating the inverse of the representative inside the orbit.
pub fn conjugacy_classes(g: &Group) -> ClassData {
    let n = g.order() as usize;
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<ConjugacyClass> = Vec::new();
    for start in 0..n {
        if class_of[start] != usize::MAX {
            continue;
        }
        let class_index = classes.len();
        let mut members = vec![start];
        class_of[start] = class_index;
        let mut frontier = vec![start];
        while let Some(current) = frontier.pop() {
            for gen in g.generators() {
                let conj = g.element(current).conjugate_by(gen);
                let idx = g.index_of(&conj).expect("conjugate must stay in the group");
                if class_of[idx] == usize::MAX {
                    class_of[idx] = class_index;
                    members.push(idx);
                    frontier.push(idx);
                }
            }
        }
        members.sort_unstable();
        let inverse_index = g.inverse_index(start);
        classes.push(ConjugacyClass {
            representative: start,
            size: members.len() as u64,
            is_real: members.binary_search(&inverse_index).is_ok(),
            members,
        });
    }
    ClassData { classes, class_of }
}

/// The centralizer `C_G(x)`. Panics if `x` is not a member.
pub fn centralizer(g: &Group, x: &Permutation) -> Subgroup {
    assert!(g.contains(x), "centralizer argument must lie in the group");
    let elements: Vec<usize> = (0..g.order() as usize)
        .filter(|&i| {
            let e = g.element(i);
            e.compose(x) == x.compose(e)
        })
        .collect();
    Subgroup::from_closed(elements, vec![])
}

/// The center `Z(G)`, by exhaustive commuting test against the generators.
pub fn center(g: &Group) -> Subgroup {
    let elements: Vec<usize> = (0..g.order() as usize)
        .filter(|&i| {
            let e = g.element(i);
            g.generators().iter().all(|h| e.compose(h) == h.compose(e))
        })
        .collect();
    Subgroup::from_closed(elements, vec![])
}

pub fn is_central(g: &Group, x: &Permutation) -> bool {
    assert!(g.contains(x), "centrality argument must lie in the group");
    g.generators().iter().all(|h| x.compose(h) == h.compose(x))
}

/// The two divisibility facts tying class sizes of a normal subgroup and of
/// the quotient to class sizes of the whole group: returns
/// (`|x^N|` divides `|x^G|` when `x ∈ N`, `|(Nx)^{G/N}|` divides `|x^G|`).
///
/// The first component is reported as `true` when `x ∉ N` (no claim made).
/// Panics if `n` is not normal.
pub fn class_size_divides(g: &Group, n: &Subgroup, x: &Permutation) -> (bool, bool) {
    assert!(n.is_normal_in(g), "subgroup must be normal");
    let x_index = g.index_of(x).expect("element must lie in the group");
    let g_class_size = conjugation_orbit_size(g, x_index);

    let in_n = n.contains_index(x_index);
    let first = if in_n {
        let n_group = n.to_group(g);
        let x_in_n = n_group.index_of(x).expect("member of the subgroup");
        let n_class_size = conjugation_orbit_size(&n_group, x_in_n);
        g_class_size % n_class_size == 0
    } else {
        true
    };

    let (q, map) = crate::structure::quotient::quotient(g, n);
    let image = map.project_element(x_index);
    let q_class_size = conjugation_orbit_size(&q, image);
    let second = g_class_size % q_class_size == 0;

    (first, second)
}

fn conjugation_orbit_size(g: &Group, start: usize) -> u64 {
    let mut seen: HashSet<usize> = HashSet::new();
    seen.insert(start);
    let mut frontier = vec![start];
    while let Some(current) = frontier.pop() {
        for gen in g.generators() {
            let conj = g.element(current).conjugate_by(gen);
            let idx = g.index_of(&conj).expect("conjugate must stay in the group");
            if seen.insert(idx) {
                frontier.push(idx);
            }
        }
    }
    seen.len() as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::subgroup::normal_closure;

    fn group(texts: &[&str], degree: usize) -> Group {
        let gens = texts
            .iter()
            .map(|t| Permutation::parse(t, degree).unwrap())
            .collect();
        Group::generate(gens, 10_000).unwrap()
    }

    #[test]
    fn cyclic4_classes() {
        let g = group(&["(1,2,3,4)"], 4);
        let data = conjugacy_classes(&g);
        assert_eq!(data.classes.len(), 4);
        assert!(data.classes.iter().all(|c| c.size == 1));
        // Exactly the two elements of order ≤ 2 are real.
        let real_count = data.classes.iter().filter(|c| c.is_real).count();
        assert_eq!(real_count, 2);
    }

    #[test]
    fn sym4_class_sizes() {
        let g = group(&["(1,2)", "(1,2,3,4)"], 4);
        let data = conjugacy_classes(&g);
        assert_eq!(data.size_multiset(), vec![1, 3, 6, 6, 8]);
        assert!(data.classes.iter().all(|c| c.is_real));
    }

    #[test]
    fn class_sizes_partition_the_group() {
        let g = group(&["(1,2,3,4,5)", "(2,5)(3,4)"], 5);
        let data = conjugacy_classes(&g);
        let total: u64 = data.classes.iter().map(|c| c.size).sum();
        assert_eq!(total, g.order());
    }

    #[test]
    fn centralizer_of_transposition_in_sym3() {
        let g = group(&["(1,2)", "(1,2,3)"], 3);
        let t = Permutation::parse("(1,2)", 3).unwrap();
        let c = centralizer(&g, &t);
        assert_eq!(c.order(), 2);
    }

    #[test]
    fn centralizer_of_identity_is_whole() {
        let g = group(&["(1,2)", "(1,2,3)"], 3);
        let c = centralizer(&g, &Permutation::identity(3));
        assert!(c.is_whole(&g));
    }

    #[test]
    fn abelian_center_is_whole() {
        let g = group(&["(1,2,3,4,5,6)"], 6);
        assert!(center(&g).is_whole(&g));
        let x = Permutation::parse("(1,3,5)(2,4,6)", 6).unwrap();
        assert_eq!(centralizer(&g, &x).order(), g.order());
    }

    #[test]
    fn sym3_center_is_trivial() {
        let g = group(&["(1,2)", "(1,2,3)"], 3);
        assert!(center(&g).is_trivial());
    }

    #[test]
    fn orbit_stabilizer() {
        let g = group(&["(1,2)", "(1,2,3,4)"], 4);
        let data = conjugacy_classes(&g);
        for class in &data.classes {
            let c = centralizer(&g, g.element(class.representative));
            assert_eq!(c.order() * class.size, g.order());
        }
    }

    #[test]
    fn divisibility_in_sym4_mod_v4() {
        let g = group(&["(1,2)", "(1,2,3,4)"], 4);
        let v4_seed = g
            .index_of(&Permutation::parse("(1,2)(3,4)", 4).unwrap())
            .unwrap();
        let v4 = normal_closure(&g, &[v4_seed]);
        assert_eq!(v4.order(), 4);
        let transposition = Permutation::parse("(1,2)", 4).unwrap();
        assert_eq!(class_size_divides(&g, &v4, &transposition), (true, true));
        // Degenerate ends: N = G and N = 1.
        assert_eq!(
            class_size_divides(&g, &Subgroup::whole(&g), &transposition),
            (true, true)
        );
        assert_eq!(
            class_size_divides(&g, &Subgroup::trivial(&g), &transposition),
            (true, true)
        );
    }
}
