//! Discovery of normal subgroups as joins of class-representative normal
//! closures.
//!
//! Every normal subgroup is a join of closures `⟨x⟩^G` over the classes it
//! contains, so closing the class closures under pairwise joins finds the
//! whole normal-subgroup lattice — unless the cap trips first, in which case
//! the result is explicitly marked as a sample.

use std::collections::HashSet;

use crate::group::Group;
use crate::structure::classes::ClassData;
use crate::structure::subgroup::{normal_closure, Subgroup};

/// Cap on discovered subgroups per scan; beyond it the scan stops and the
/// result is marked `sampled`.
pub const NORMAL_SCAN_CAP: usize = 512;

#[derive(Debug, Clone)]
pub struct NormalScan {
    /// Distinct normal subgroups, sorted by (order, element encoding).
    pub subgroups: Vec<Subgroup>,
    /// True when the cap cut the join closure short.
    pub sampled: bool,
}

impl NormalScan {
    /// Subgroups of odd order.
    pub fn odd_order(&self) -> impl Iterator<Item = &Subgroup> {
        self.subgroups.iter().filter(|s| s.order() % 2 == 1)
    }

    /// Subgroups of odd index in `g`.
    pub fn odd_index<'a>(&'a self, g: &'a Group) -> impl Iterator<Item = &'a Subgroup> {
        self.subgroups.iter().filter(move |s| s.index_in(g) % 2 == 1)
    }
}

/// Runs the join-closure scan with the default cap.
pub fn normal_subgroup_scan(g: &Group, classes: &ClassData) -> NormalScan {
    normal_subgroup_scan_capped(g, classes, NORMAL_SCAN_CAP)
}

pub fn normal_subgroup_scan_capped(g: &Group, classes: &ClassData, cap: usize) -> NormalScan {
    let mut found: Vec<Subgroup> = Vec::new();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut sampled = false;

    let push = |sub: Subgroup, found: &mut Vec<Subgroup>, seen: &mut HashSet<Vec<usize>>| -> bool {
        if seen.insert(sub.element_indices().to_vec()) {
            found.push(sub);
            true
        } else {
            false
        }
    };

    push(Subgroup::trivial(g), &mut found, &mut seen);
    push(Subgroup::whole(g), &mut found, &mut seen);
    for class in &classes.classes {
        if found.len() >= cap {
            sampled = true;
            break;
        }
        push(normal_closure(g, &[class.representative]), &mut found, &mut seen);
    }

    // Pairwise joins, breadth-first over the growing list.
    let mut next_pair = 0usize;
    while next_pair < found.len() {
        if found.len() >= cap {
            sampled = true;
            break;
        }
        let a = next_pair;
        next_pair += 1;
        for b in 0..a {
            if found.len() >= cap {
                sampled = true;
                break;
            }
            let joined = found[a].join(g, &found[b]);
            push(joined, &mut found, &mut seen);
        }
    }

    found.sort_by(|x, y| {
        x.order()
            .cmp(&y.order())
            .then_with(|| x.element_indices().cmp(y.element_indices()))
    });
    NormalScan { subgroups: found, sampled }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;
    use crate::structure::classes::conjugacy_classes;

    fn group(texts: &[&str], degree: usize) -> Group {
        let gens = texts
            .iter()
            .map(|t| Permutation::parse(t, degree).unwrap())
            .collect();
        Group::generate(gens, 10_000).unwrap()
    }

    #[test]
    fn sym4_normal_subgroups() {
        let g = group(&["(1,2)", "(1,2,3,4)"], 4);
        let scan = normal_subgroup_scan(&g, &conjugacy_classes(&g));
        assert!(!scan.sampled);
        let orders: Vec<u64> = scan.subgroups.iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![1, 4, 12, 24]);
        assert!(scan.subgroups.iter().all(|s| s.is_normal_in(&g)));
    }

    #[test]
    fn simple_group_has_no_middle() {
        let g = group(&["(1,2,3)", "(1,2,3,4,5)"], 5);
        let scan = normal_subgroup_scan(&g, &conjugacy_classes(&g));
        let orders: Vec<u64> = scan.subgroups.iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![1, 60]);
    }

    #[test]
    fn abelian_scan_finds_all_cyclic_joins() {
        let g = group(&["(1,2,3,4,5,6)"], 6);
        let scan = normal_subgroup_scan(&g, &conjugacy_classes(&g));
        // C6 has exactly the subgroups 1, C2, C3, C6.
        let orders: Vec<u64> = scan.subgroups.iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![1, 2, 3, 6]);
    }

    #[test]
    fn cap_marks_sampling() {
        let g = group(&["(1,2)", "(3,4)", "(5,6)", "(7,8)"], 8);
        let scan = normal_subgroup_scan_capped(&g, &conjugacy_classes(&g), 5);
        assert!(scan.sampled);
        assert_eq!(scan.subgroups.len(), 5);
    }
}
