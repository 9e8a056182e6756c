//! Subgroups as sorted index sets into a parent group.
//!
//! A `Subgroup` stores canonical element indices (into the parent's sorted
//! element list) rather than permutations, so subgroups are cheap to store,
//! hash and compare. Every operation that needs the parent takes it
//! explicitly; the indices are only meaningful relative to that parent.

use std::collections::HashSet;

use crate::group::Group;
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    elements: Vec<usize>,
    generators: Vec<usize>,
}

impl Subgroup {
    /// The subgroup `{1}`.
    pub fn trivial(parent: &Group) -> Subgroup {
        let id = parent
            .index_of(&Permutation::identity(parent.degree()))
            .expect("identity must belong to the group");
        Subgroup {
            elements: vec![id],
            generators: vec![],
        }
    }

    /// The improper subgroup `G` itself.
    pub fn whole(parent: &Group) -> Subgroup {
        let gens = parent
            .generators()
            .iter()
            .map(|g| parent.index_of(g).expect("generator must be a member"))
            .collect();
        Subgroup {
            elements: (0..parent.order() as usize).collect(),
            generators: gens,
        }
    }

    /// Closure of the given generator indices inside `parent`. The recorded
    /// generating set is greedily thinned to the prefix members that actually
    /// enlarge the closure, so it stays logarithmic in the subgroup order.
    pub fn generated_by(parent: &Group, generator_indices: &[usize]) -> Subgroup {
        let mut kept: Vec<usize> = Vec::new();
        let mut closed = vec![identity_index(parent)];
        for &candidate in generator_indices {
            if closed.binary_search(&candidate).is_err() {
                kept.push(candidate);
                closed = close_indices(parent, &kept);
            }
        }
        Subgroup {
            elements: closed,
            generators: kept,
        }
    }

    /// Wraps an element-index set already known to be closed.
    pub(crate) fn from_closed(mut elements: Vec<usize>, generators: Vec<usize>) -> Subgroup {
        elements.sort_unstable();
        elements.dedup();
        Subgroup {
            elements,
            generators,
        }
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn index_in(&self, parent: &Group) -> u64 {
        parent.order() / self.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_whole(&self, parent: &Group) -> bool {
        self.order() == parent.order()
    }

    /// Sorted element indices into the parent's element list.
    pub fn element_indices(&self) -> &[usize] {
        &self.elements
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generators
    }

    pub fn contains_index(&self, index: usize) -> bool {
        self.elements.binary_search(&index).is_ok()
    }

    pub fn contains_perm(&self, parent: &Group, p: &Permutation) -> bool {
        parent
            .index_of(p)
            .map(|i| self.contains_index(i))
            .unwrap_or(false)
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&i| other.contains_index(i))
    }

    /// Promotes the subgroup to a standalone [`Group`] on the same points.
    /// When no generating set was recorded, a greedy one is computed first so
    /// the promoted group's generators really generate it.
    pub fn to_group(&self, parent: &Group) -> Group {
        let elements: Vec<Permutation> = self
            .elements
            .iter()
            .map(|&i| parent.element(i).clone())
            .collect();
        let generator_indices: Vec<usize> = if self.generators.is_empty() {
            greedy_generators(parent, &self.elements)
        } else {
            self.generators.clone()
        };
        let generators: Vec<Permutation> = if generator_indices.is_empty() {
            vec![Permutation::identity(parent.degree())]
        } else {
            generator_indices
                .iter()
                .map(|&i| parent.element(i).clone())
                .collect()
        };
        Group::from_closed_elements(parent.degree(), generators, elements)
    }

    /// True iff `self^g = self` for every `g` in the parent; checked on the
    /// parent's generators, which suffices.
    pub fn is_normal_in(&self, parent: &Group) -> bool {
        let probe: &[usize] = if self.generators.is_empty() {
            &self.elements
        } else {
            &self.generators
        };
        parent.generators().iter().all(|g| {
            probe.iter().all(|&i| {
                let conj = parent.element(i).conjugate_by(g);
                parent
                    .index_of(&conj)
                    .map(|j| self.contains_index(j))
                    .unwrap_or(false)
            })
        })
    }

    /// The join `⟨self ∪ other⟩`.
    pub fn join(&self, parent: &Group, other: &Subgroup) -> Subgroup {
        if self.is_subset_of(other) {
            return other.clone();
        }
        if other.is_subset_of(self) {
            return self.clone();
        }
        let mut gens: Vec<usize> = self.generating_indices().to_vec();
        gens.extend_from_slice(other.generating_indices());
        gens.sort_unstable();
        gens.dedup();
        Subgroup::generated_by(parent, &gens)
    }

    /// A generating set: the recorded generators, or all elements when none
    /// were recorded (trivial subgroup, promoted sets).
    fn generating_indices(&self) -> &[usize] {
        if self.generators.is_empty() {
            &self.elements
        } else {
            &self.generators
        }
    }

    /// Intersection of two subgroups of the same parent.
    pub fn intersect(&self, other: &Subgroup) -> Subgroup {
        let smaller = if self.order() <= other.order() { self } else { other };
        let larger = if self.order() <= other.order() { other } else { self };
        let elements: Vec<usize> = smaller
            .elements
            .iter()
            .copied()
            .filter(|&i| larger.contains_index(i))
            .collect();
        Subgroup::from_closed(elements, vec![])
    }
}

fn identity_index(parent: &Group) -> usize {
    parent
        .index_of(&Permutation::identity(parent.degree()))
        .expect("identity must belong to the group")
}

/// A small generating set for a closed element set, picked greedily in
/// canonical order; each kept element at least doubles the closure.
fn greedy_generators(parent: &Group, elements: &[usize]) -> Vec<usize> {
    let mut kept: Vec<usize> = Vec::new();
    let mut closed = vec![identity_index(parent)];
    for &candidate in elements {
        if closed.binary_search(&candidate).is_err() {
            kept.push(candidate);
            closed = close_indices(parent, &kept);
            if closed.len() == elements.len() {
                break;
            }
        }
    }
    kept
}

/// Closure of the given indices under multiplication inside `parent`.
fn close_indices(parent: &Group, generator_indices: &[usize]) -> Vec<usize> {
    let mut seen: HashSet<usize> = HashSet::new();
    seen.insert(identity_index(parent));
    let mut frontier = vec![identity_index(parent)];
    while let Some(current) = frontier.pop() {
        for &g in generator_indices {
            let next = parent.multiply_indices(current, g);
            if seen.insert(next) {
                frontier.push(next);
            }
        }
    }
    let mut out: Vec<usize> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

/// The normalizer `N_G(H) = {g ∈ G : H^g = H}`.
pub fn normalizer(parent: &Group, h: &Subgroup) -> Subgroup {
    let probe: Vec<usize> = if h.generator_indices().is_empty() {
        h.element_indices().to_vec()
    } else {
        h.generator_indices().to_vec()
    };
    let elements: Vec<usize> = (0..parent.order() as usize)
        .filter(|&gi| {
            let g = parent.element(gi);
            probe.iter().all(|&i| {
                let conj = parent.element(i).conjugate_by(g);
                parent
                    .index_of(&conj)
                    .map(|j| h.contains_index(j))
                    .unwrap_or(false)
            })
        })
        .collect();
    Subgroup::from_closed(elements, vec![])
}

/// Smallest normal subgroup of `parent` containing the seed elements:
/// the subgroup generated by all conjugates of the seeds.
pub fn normal_closure(parent: &Group, seed_indices: &[usize]) -> Subgroup {
    // Conjugates of a seed are exactly its conjugacy orbit; the subgroup
    // generated by a conjugation-closed set is normal.
    let mut orbit_gens: Vec<usize> = Vec::new();
    let mut in_orbit: HashSet<usize> = HashSet::new();
    for &seed in seed_indices {
        if !in_orbit.insert(seed) {
            continue;
        }
        let mut frontier = vec![seed];
        orbit_gens.push(seed);
        while let Some(current) = frontier.pop() {
            for g in parent.generators() {
                let conj = parent.element(current).conjugate_by(g);
                let idx = parent
                    .index_of(&conj)
                    .expect("conjugate must stay inside the group");
                if in_orbit.insert(idx) {
                    orbit_gens.push(idx);
                    frontier.push(idx);
                }
            }
        }
    }
    orbit_gens.sort_unstable();
    Subgroup::generated_by(parent, &orbit_gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(texts: &[&str], degree: usize) -> Group {
        let gens = texts
            .iter()
            .map(|t| Permutation::parse(t, degree).unwrap())
            .collect();
        Group::generate(gens, 10_000).unwrap()
    }

    #[test]
    fn trivial_and_whole() {
        let g = group(&["(1,2)", "(1,2,3)"], 3);
        assert_eq!(Subgroup::trivial(&g).order(), 1);
        assert_eq!(Subgroup::whole(&g).order(), 6);
        assert!(Subgroup::whole(&g).is_normal_in(&g));
    }

    #[test]
    fn closure_of_a_seed_in_sym4() {
        let g = group(&["(1,2)", "(1,2,3,4)"], 4);
        let three_cycle = g
            .index_of(&Permutation::parse("(1,2,3)", 4).unwrap())
            .unwrap();
        let h = Subgroup::generated_by(&g, &[three_cycle]);
        assert_eq!(h.order(), 3);
        // Normal closure of a 3-cycle in Sym4 is Alt4.
        let n = normal_closure(&g, &[three_cycle]);
        assert_eq!(n.order(), 12);
        assert!(n.is_normal_in(&g));
    }

    #[test]
    fn normal_closure_of_identity_is_trivial() {
        let g = group(&["(1,2)", "(1,2,3)"], 3);
        let n = normal_closure(&g, &[0]);
        assert!(n.is_trivial());
    }

    #[test]
    fn normal_closure_of_generators_is_whole() {
        let g = group(&["(1,2)", "(1,2,3)"], 3);
        let gens: Vec<usize> = g
            .generators()
            .iter()
            .map(|p| g.index_of(p).unwrap())
            .collect();
        assert!(normal_closure(&g, &gens).is_whole(&g));
    }

    #[test]
    fn normalizer_of_sylow2_in_sym3_is_itself() {
        let g = group(&["(1,2)", "(1,2,3)"], 3);
        let t = g.index_of(&Permutation::parse("(1,2)", 3).unwrap()).unwrap();
        let h = Subgroup::generated_by(&g, &[t]);
        let n = normalizer(&g, &h);
        assert_eq!(n.order(), 2);
        assert_eq!(n.element_indices(), h.element_indices());
    }

    #[test]
    fn normalizer_of_normal_subgroup_is_whole() {
        let g = group(&["(1,2)", "(1,2,3,4)"], 4);
        let three_cycle = g
            .index_of(&Permutation::parse("(1,2,3)", 4).unwrap())
            .unwrap();
        let alt4 = normal_closure(&g, &[three_cycle]);
        assert!(normalizer(&g, &alt4).is_whole(&g));
    }

    #[test]
    fn join_and_intersect() {
        let g = group(&["(1,2)", "(1,2,3)"], 3);
        let a = Subgroup::generated_by(
            &g,
            &[g.index_of(&Permutation::parse("(1,2)", 3).unwrap()).unwrap()],
        );
        let b = Subgroup::generated_by(
            &g,
            &[g.index_of(&Permutation::parse("(1,2,3)", 3).unwrap()).unwrap()],
        );
        assert!(a.join(&g, &b).is_whole(&g));
        assert!(a.intersect(&b).is_trivial());
    }

    #[test]
    fn promotion_keeps_elements() {
        let g = group(&["(1,2)", "(1,2,3)"], 3);
        let c3 = Subgroup::generated_by(
            &g,
            &[g.index_of(&Permutation::parse("(1,2,3)", 3).unwrap()).unwrap()],
        );
        let promoted = c3.to_group(&g);
        assert_eq!(promoted.order(), 3);
        assert_eq!(promoted.degree(), 3);
        assert!(promoted.contains(&Permutation::parse("(1,3,2)", 3).unwrap()));
    }
}
