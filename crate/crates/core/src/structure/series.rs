//! Derived series and solvability.

use crate::group::Group;
use crate::structure::subgroup::{normal_closure, Subgroup};

/// The derived subgroup `G′`, computed as the normal closure of the
/// commutators of generator pairs (which generates the same subgroup as all
/// commutators).
pub fn derived_subgroup(g: &Group) -> Subgroup {
    let mut seeds: Vec<usize> = Vec::new();
    for a in g.generators() {
        for b in g.generators() {
            let c = a.commutator_with(b);
            seeds.push(g.index_of(&c).expect("commutator stays in the group"));
        }
    }
    seeds.sort_unstable();
    seeds.dedup();
    normal_closure(g, &seeds)
}

/// The derived series `G ⊇ G′ ⊇ G″ ⊇ …` until it stabilizes, every term
/// expressed as a subgroup of `g`.
pub fn derived_series(g: &Group) -> Vec<Subgroup> {
    let mut series = vec![Subgroup::whole(g)];
    loop {
        let current = series.last().unwrap();
        let current_group = current.to_group(g);
        let next_in_current = derived_subgroup(&current_group);
        // Re-express inside the original parent.
        let next_elements: Vec<usize> = next_in_current
            .element_indices()
            .iter()
            .map(|&i| {
                g.index_of(current_group.element(i))
                    .expect("subgroup element lies in the parent")
            })
            .collect();
        let next_generators: Vec<usize> = next_in_current
            .generator_indices()
            .iter()
            .map(|&i| g.index_of(current_group.element(i)).unwrap())
            .collect();
        let next = Subgroup::from_closed(next_elements, next_generators);
        if next.order() == current.order() {
            break;
        }
        series.push(next);
    }
    series
}

/// Solvable ⇔ the derived series reaches the trivial subgroup.
pub fn is_solvable(g: &Group) -> bool {
    derived_series(g).last().unwrap().is_trivial()
}
