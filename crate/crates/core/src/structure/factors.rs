//! Composition factors up to fingerprint, and fingerprint-based group
//! comparison.
//!
//! Factors are identified only by (order, abelian flag, class-size multiset);
//! that is enough for the one detection the engine needs — a nonabelian
//! factor of order 168 is the linear group on the Fano plane, the unique
//! simple group of that order.

use serde::Serialize;

use crate::group::Group;
use crate::structure::classes::conjugacy_classes;
use crate::structure::quotient::quotient;
use crate::structure::scan::normal_subgroup_scan;
use crate::structure::series::derived_subgroup;
use crate::structure::subgroup::Subgroup;

/// Fingerprint of a composition factor.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct CompositionFactorFingerprint {
    pub order: u64,
    pub abelian: bool,
    pub class_sizes: Vec<u64>,
}

/// Order + class-size multiset + abelianization order; used to compare
/// groups up to "fingerprint consistency" where true isomorphism testing is
/// out of scope.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupFingerprint {
    pub order: u64,
    pub class_sizes: Vec<u64>,
    pub abelianization_order: u64,
}

pub fn fingerprint(g: &Group) -> GroupFingerprint {
    let classes = conjugacy_classes(g);
    GroupFingerprint {
        order: g.order(),
        class_sizes: classes.size_multiset(),
        abelianization_order: g.order() / derived_subgroup(g).order(),
    }
}

fn is_abelian(g: &Group) -> bool {
    let gens = g.generators();
    gens.iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.compose(b) == b.compose(a)))
}

/// A maximal proper normal subgroup, or `None` for the trivial group.
///
/// When the derived subgroup is proper, the quotient by it is abelian and a
/// maximal normal subgroup is the preimage of an index-r subgroup of that
/// quotient (r the smallest prime dividing its order); this route never
/// depends on the capped lattice scan. Perfect groups fall back to the scan,
/// whose lattice at desk scale is small.
pub fn maximal_normal_subgroup(g: &Group) -> Option<Subgroup> {
    if g.order() == 1 {
        return None;
    }
    let derived = derived_subgroup(g);
    if derived.is_whole(g) {
        // Perfect group: take the largest proper subgroup the scan finds.
        let classes = conjugacy_classes(g);
        let scan = normal_subgroup_scan(g, &classes);
        return scan
            .subgroups
            .iter()
            .rev()
            .find(|s| !s.is_whole(g))
            .cloned();
    }

    let (abelianization, map) = quotient(g, &derived);
    let r = crate::arith::prime_divisors(abelianization.order())[0];

    // Start from the subgroup of r-th powers; the quotient by it has
    // exponent r, so every extension below grows the subgroup exactly r-fold.
    let mut power_gens: Vec<usize> = (0..abelianization.order() as usize)
        .map(|i| {
            abelianization
                .index_of(&abelianization.element(i).pow(r as i64))
                .unwrap()
        })
        .collect();
    power_gens.sort_unstable();
    power_gens.dedup();
    let mut h = Subgroup::generated_by(&abelianization, &power_gens);
    while h.index_in(&abelianization) > r {
        let mut extended = false;
        for cand in 0..abelianization.order() as usize {
            if h.contains_index(cand) {
                continue;
            }
            let mut gens: Vec<usize> = h.element_indices().to_vec();
            gens.push(cand);
            let bigger = Subgroup::generated_by(&abelianization, &gens);
            if !bigger.is_whole(&abelianization) {
                h = bigger;
                extended = true;
                break;
            }
        }
        assert!(extended, "an index-r subgroup always exists below exponent-r quotients");
    }

    // Pull back to the parent.
    let elements: Vec<usize> = (0..g.order() as usize)
        .filter(|&i| {
            let image = map.project_element(i);
            h.contains_index(image)
        })
        .collect();
    Some(Subgroup::from_closed(elements, vec![]))
}

/// Composition factor fingerprints, sorted. Factor multisets are
/// Jordan–Hölder invariants, so the result does not depend on which maximal
/// normal subgroup each refinement step picks.
pub fn composition_factors(g: &Group) -> Vec<CompositionFactorFingerprint> {
    let mut factors = Vec::new();
    let mut current = g.clone();
    while current.order() > 1 {
        let maximal = maximal_normal_subgroup(&current)
            .expect("nontrivial group has a maximal normal subgroup");
        assert!(
            maximal.order() < current.order(),
            "refinement step must strictly shrink"
        );
        let (factor, _) = quotient(&current, &maximal);
        let factor_classes = conjugacy_classes(&factor);
        factors.push(CompositionFactorFingerprint {
            order: factor.order(),
            abelian: is_abelian(&factor),
            class_sizes: factor_classes.size_multiset(),
        });
        current = maximal.to_group(&current);
    }
    factors.sort();
    factors
}

/// Detects a composition factor that can only be the simple group of order
/// 168 (nonabelian of that order).
pub fn has_order168_simple_factor(g: &Group) -> bool {
    composition_factors(g)
        .iter()
        .any(|f| !f.abelian && f.order == 168)
}

/// Every composition factor is a p-group or a p′-group.
pub fn is_p_solvable(g: &Group, p: u64) -> bool {
    composition_factors(g)
        .iter()
        .all(|f| crate::arith::is_p_power(f.order, p) || f.order % p != 0)
}

/// Multiset equality of nontrivial class sizes plus matching order and
/// abelianization; the crate's stand-in for isomorphism checks.
pub fn fingerprints_match(a: &GroupFingerprint, b: &GroupFingerprint) -> bool {
    a == b
}
