//! Sylow subgroups by normalizer climbing, plus the standard normal
//! subgroup operators built from them: the p-core `O_p(G)`, the p′-core
//! `O_{p′}(G)` and the p′-residual `O^{p′}(G)`.

use crate::arith::{p_part, p_prime_part};
use crate::group::Group;
use crate::structure::classes::ClassData;
use crate::structure::subgroup::{normal_closure, normalizer, Subgroup};

/// A Sylow p-subgroup of `g`.
///
/// Starts from the cyclic subgroup on the p-element part of the first element
/// of order divisible by `p`, then climbs: as long as the current p-subgroup
/// `P` is smaller than the full p-part, `p` divides `|N_G(P):P|`, so some
/// element of the normalizer has a p-element part outside `P`; extending by
/// it multiplies the order by `p`. The climb cannot fail.
pub fn sylow_subgroup(g: &Group, p: u64) -> Subgroup {
    assert!(crate::arith::is_prime(p), "sylow requires a prime");
    let target = p_part(g.order(), p);
    if target == 1 {
        return Subgroup::trivial(g);
    }
    let orders = g.element_orders();

    // Seed with a p-element of maximal order among elements (any p-element
    // works; picking deterministically keeps results stable).
    let seed = (0..g.order() as usize)
        .find_map(|i| p_element_part(g, &orders, i, p))
        .expect("p divides the group order, so a p-element exists");
    let mut current = Subgroup::generated_by(g, &[seed]);

    while current.order() < target {
        let norm = normalizer(g, &current);
        let mut extended = false;
        for &cand in norm.element_indices() {
            if let Some(part) = p_element_part_index(g, &orders, cand, p) {
                if !current.contains_index(part) {
                    let mut gens: Vec<usize> = current.generator_indices().to_vec();
                    gens.push(part);
                    current = Subgroup::generated_by(g, &gens);
                    extended = true;
                    break;
                }
            }
        }
        assert!(extended, "normalizer climb must always extend a small p-subgroup");
    }
    current
}

/// Index of the p-element part `x^m` (with `m` the p′-part of the order of
/// `x`), provided it is nontrivial.
fn p_element_part(g: &Group, orders: &[u64], i: usize, p: u64) -> Option<usize> {
    p_element_part_index(g, orders, i, p).filter(|&idx| idx != 0)
}

fn p_element_part_index(g: &Group, orders: &[u64], i: usize, p: u64) -> Option<usize> {
    let order = orders[i];
    if p_part(order, p) == 1 {
        return None;
    }
    let m = p_prime_part(order, p);
    let part = g.element(i).pow(m as i64);
    Some(g.index_of(&part).expect("power stays in the group"))
}

/// p-closed ⇔ a Sylow p-subgroup is normal (hence unique).
pub fn is_p_closed(g: &Group, p: u64) -> bool {
    sylow_subgroup(g, p).is_normal_in(g)
}

/// p-nilpotent ⇔ there is a normal p-complement, i.e. the p′-core has full
/// p′-order.
pub fn is_p_nilpotent(g: &Group, classes: &ClassData, p: u64) -> bool {
    p_prime_core(g, classes, p).order() == p_prime_part(g.order(), p)
}

/// The p′-residual `O^{p′}(G)`: the smallest normal subgroup of p′-index,
/// obtained as the normal closure of one Sylow p-subgroup.
pub fn p_prime_residual(g: &Group, p: u64) -> Subgroup {
    let sylow = sylow_subgroup(g, p);
    if sylow.is_trivial() {
        return Subgroup::trivial(g);
    }
    let seeds: Vec<usize> = if sylow.generator_indices().is_empty() {
        sylow.element_indices().to_vec()
    } else {
        sylow.generator_indices().to_vec()
    };
    normal_closure(g, &seeds)
}

/// The p′-core `O_{p′}(G)`: the largest normal subgroup of p′-order, obtained
/// as the join of the normal closures `⟨x⟩^G` of p′-order, taken over class
/// representatives `x` of p′-element order. Each such closure is a normal
/// p′-subgroup, and every element of the p′-core is covered by one.
pub fn p_prime_core(g: &Group, classes: &ClassData, p: u64) -> Subgroup {
    let mut core = Subgroup::trivial(g);
    for class in &classes.classes {
        let rep = class.representative;
        if g.element(rep).order() % p == 0 {
            continue;
        }
        let closure = normal_closure(g, &[rep]);
        if closure.order() % p != 0 {
            core = core.join(g, &closure);
        }
    }
    debug_assert!(core.is_normal_in(g));
    debug_assert_eq!(p_part(core.order(), p), 1);
    core
}

/// The p-core `O_p(G)`: the largest normal p-subgroup, which equals the
/// intersection of all conjugates of one Sylow p-subgroup — concretely, the
/// union of the conjugacy classes wholly contained in that Sylow subgroup.
pub fn p_core(g: &Group, classes: &ClassData, p: u64) -> Subgroup {
    let sylow = sylow_subgroup(g, p);
    let elements: Vec<usize> = sylow
        .element_indices()
        .iter()
        .copied()
        .filter(|&i| {
            classes
                .class_of_index(i)
                .members
                .iter()
                .all(|&m| sylow.contains_index(m))
        })
        .collect();
    let core = Subgroup::from_closed(elements, vec![]);
    debug_assert!(core.is_normal_in(g));
    core
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
    fn sylow_orders_match_p_parts() {
        let g = group(&["(1,2)", "(1,2,3,4)"], 4);
        assert_eq!(sylow_subgroup(&g, 2).order(), 8);
        assert_eq!(sylow_subgroup(&g, 3).order(), 3);
        assert_eq!(sylow_subgroup(&g, 5).order(), 1);
    }

    #[test]
    fn sylow3_of_sym3_is_the_rotation_subgroup() {
        let g = group(&["(1,2)", "(1,2,3)"], 3);
        let s = sylow_subgroup(&g, 3);
        assert_eq!(s.order(), 3);
        assert!(s.contains_perm(&g, &Permutation::parse("(1,2,3)", 3).unwrap()));
    }

    #[test]
    fn odd_group_has_trivial_sylow2() {
        let g = group(&["(1,2,3,4,5,6,7)"], 7);
        assert!(sylow_subgroup(&g, 2).is_trivial());
    }

    #[test]
    fn closed_and_nilpotent_flags() {
        let sym3 = group(&["(1,2)", "(1,2,3)"], 3);
        let sym3_classes = conjugacy_classes(&sym3);
        assert!(!is_p_closed(&sym3, 2));
        assert!(is_p_nilpotent(&sym3, &sym3_classes, 2));

        let sym4 = group(&["(1,2)", "(1,2,3,4)"], 4);
        let sym4_classes = conjugacy_classes(&sym4);
        assert!(!is_p_closed(&sym4, 2));
        assert!(!is_p_nilpotent(&sym4, &sym4_classes, 2));

        let abelian = group(&["(1,2)", "(3,4,5)"], 5);
        let abelian_classes = conjugacy_classes(&abelian);
        assert!(is_p_closed(&abelian, 2));
        assert!(is_p_nilpotent(&abelian, &abelian_classes, 2));
    }

    #[test]
    fn residual_of_sym4_is_sym4() {
        let g = group(&["(1,2)", "(1,2,3,4)"], 4);
        assert!(p_prime_residual(&g, 2).is_whole(&g));
    }

    #[test]
    fn residual_of_odd_group_at_2_is_trivial() {
        let g = group(&["(1,2,3)", "(4,5,6,7,8)"], 8);
        assert!(p_prime_residual(&g, 2).is_trivial());
    }

    #[test]
    fn cores_of_sym3() {
        let g = group(&["(1,2)", "(1,2,3)"], 3);
        let classes = conjugacy_classes(&g);
        let odd_core = p_prime_core(&g, &classes, 2);
        assert_eq!(odd_core.order(), 3); // the alternating subgroup
        assert!(p_core(&g, &classes, 2).is_trivial());
        assert!(p_core(&g, &classes, 3).order() == 3);
    }

    #[test]
    fn cores_of_a_2_group() {
        let g = group(&["(1,2,3,4)", "(1,3)"], 4); // dihedral of order 8
        let classes = conjugacy_classes(&g);
        assert!(p_prime_core(&g, &classes, 2).is_trivial());
        assert!(p_core(&g, &classes, 2).is_whole(&g));
    }
}
