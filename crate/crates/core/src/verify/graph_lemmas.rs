//! Checkers for the 3.x statements: the involution with π₂-sized class,
//! subgraph inheritance under odd quotients, disconnectedness of odd-index
//! subgroups and odd quotients, solvability from disconnectedness, the
//! {2}/π(|i^G|) component shapes, connectedness under a normal Sylow
//! 2-subgroup with central reals, and the structure dichotomy.

use std::collections::BTreeSet;

use crate::arith::{is_p_power, prime_divisors};
use crate::graph::ComponentSplit;
use crate::group::Group;
use crate::verify::context::Analysis;
use crate::verify::suite::Statement;
use crate::verify::witness::{Verdict, Witness};

/// The labelings (π₁, π₂) with 2 ∉ π₂ of a two-component split. Usually one;
/// two when 2 is not a vertex at all.
fn two_component_labelings(a: &Analysis) -> Vec<(BTreeSet<u64>, BTreeSet<u64>)> {
    match a.graph.component_split() {
        ComponentSplit::Two { pi_one, pi_two } => {
            let mut labelings = vec![(pi_one.clone(), pi_two.clone())];
            if !pi_one.contains(&2) && !pi_two.contains(&2) {
                labelings.push((pi_two, pi_one));
            }
            labelings
        }
        _ => Vec::new(),
    }
}

/// Disconnected graph: some involution has a nontrivial class of π₂-size
/// and a centralizer with a normal Sylow 2-subgroup.
pub fn check_lemma_3_1(g: &Group, a: &Analysis) -> Verdict {
    let labelings = two_component_labelings(a);
    if labelings.is_empty() {
        return Verdict::inapplicable(Statement::Lemma3_1);
    }
    for (_, pi_two) in labelings {
        let witness_involution = a.classes.classes.iter().find(|c| {
            a.orders[c.representative] == 2
                && c.size > 1
                && prime_divisors(c.size).iter().all(|p| pi_two.contains(p))
                && centralizer_is_2_closed(g, a, c.representative)
        });
        if witness_involution.is_none() {
            let w = Witness::new(
                "no involution with nontrivial π₂-number class size and 2-closed centralizer",
            );
            return Verdict::fail(Statement::Lemma3_1, w);
        }
    }
    Verdict::pass(Statement::Lemma3_1)
}

fn centralizer_is_2_closed(g: &Group, a: &Analysis, element: usize) -> bool {
    let c = crate::structure::classes::centralizer(g, g.element(element));
    let c_group = a.bundle(g, &c);
    crate::structure::sylow::is_p_closed(&c_group.group, 2)
}

/// For odd-order normal subgroups, the quotient graph embeds in the group
/// graph.
pub fn check_lemma_3_2(g: &Group, a: &Analysis) -> Verdict {
    let scan = a.scan(g);
    for n in scan.odd_order() {
        let q = a.quotient_bundle(g, n);
        if !q.graph.is_subgraph_of(&a.graph) {
            let w = Witness::new("quotient graph is not a subgraph")
                .with_value("subgroup_order", n.order());
            return Verdict::fail(Statement::Lemma3_2, w);
        }
    }
    Verdict::pass(Statement::Lemma3_2)
}

/// Disconnected graph: (1) odd-index normal subgroups of non-2-closed
/// groups inherit disconnectedness; (2) so do quotients by odd-order normal
/// subgroups when the group equals its odd-index residual and is not
/// 2-nilpotent.
pub fn check_prop_3_3(g: &Group, a: &Analysis) -> Verdict {
    if two_component_labelings(a).is_empty() {
        return Verdict::inapplicable(Statement::Prop3_3);
    }
    let scan = a.scan(g);

    if !a.two_closed(g) {
        for m in scan.odd_index(g) {
            let bundle = a.bundle(g, m);
            if bundle.graph.is_connected() {
                let w = Witness::new("odd-index normal subgroup has a connected graph")
                    .with_value("subgroup_order", m.order());
                return Verdict::fail(Statement::Prop3_3, w);
            }
        }
    }

    if a.two_prime_residual(g).is_whole(g) && !a.two_nilpotent(g) {
        for n in scan.odd_order() {
            let q = a.quotient_bundle(g, n);
            if q.graph.is_connected() {
                let w = Witness::new("quotient by odd-order normal subgroup has a connected graph")
                    .with_value("subgroup_order", n.order());
                return Verdict::fail(Statement::Prop3_3, w);
            }
        }
    }
    Verdict::pass(Statement::Prop3_3)
}

/// Disconnected graph forces solvability.
pub fn check_theorem_a(g: &Group, a: &Analysis) -> Verdict {
    if a.graph.is_connected() {
        return Verdict::inapplicable(Statement::TheoremA);
    }
    if a.solvable(g) {
        Verdict::pass(Statement::TheoremA)
    } else {
        Verdict::fail(
            Statement::TheoremA,
            Witness::new("disconnected real prime graph on a non-solvable group"),
        )
    }
}

/// For a group equal to its odd-index residual with a disconnected graph,
/// one component is exactly {2} and the other is the prime set of the class
/// size of some non-central involution.
pub fn check_theorem_3_5(g: &Group, a: &Analysis) -> Verdict {
    if !a.two_prime_residual(g).is_whole(g) || a.graph.is_connected() {
        return Verdict::inapplicable(Statement::Theorem3_5);
    }
    let (pi_one, pi_two) = match a.graph.component_split() {
        ComponentSplit::Two { pi_one, pi_two } => (pi_one, pi_two),
        _ => {
            return Verdict::fail(
                Statement::Theorem3_5,
                Witness::new("disconnected graph without exactly two components"),
            )
        }
    };
    if pi_one != BTreeSet::from([2]) {
        let w = Witness::new("component containing 2 is not {2}")
            .with_value("pi_one_size", pi_one.len() as u64);
        return Verdict::fail(Statement::Theorem3_5, w);
    }
    let found = a.classes.classes.iter().any(|c| {
        a.orders[c.representative] == 2
            && c.size > 1
            && prime_divisors(c.size).into_iter().collect::<BTreeSet<u64>>() == pi_two
    });
    if found {
        Verdict::pass(Statement::Theorem3_5)
    } else {
        Verdict::fail(
            Statement::Theorem3_5,
            Witness::new("no non-central involution matches the second component"),
        )
    }
}

/// Disconnected graph: 2 divides some real class size, and either the group
/// is 2-closed or its odd-index residual has a disconnected graph with all
/// real class sizes odd or powers of 2.
pub fn check_theorem_b(g: &Group, a: &Analysis) -> Verdict {
    if a.graph.is_connected() {
        return Verdict::inapplicable(Statement::TheoremB);
    }
    if !a.graph.has_vertex(2) {
        return Verdict::fail(
            Statement::TheoremB,
            Witness::new("2 divides no real class size despite a disconnected graph"),
        );
    }
    if a.two_closed(g) {
        return Verdict::pass(Statement::TheoremB);
    }
    let k = a.bundle(g, &a.two_prime_residual(g));
    if k.graph.is_connected() {
        return Verdict::fail(
            Statement::TheoremB,
            Witness::new("odd-index residual has a connected graph and no normal Sylow 2-subgroup"),
        );
    }
    if let Some(&bad) = k
        .real
        .sizes
        .iter()
        .find(|&&s| s % 2 == 0 && !is_p_power(s, 2))
    {
        let w = Witness::new("real class size of the residual is neither odd nor a 2-power")
            .with_value("class_size", bad);
        return Verdict::fail(Statement::TheoremB, w);
    }
    Verdict::pass(Statement::TheoremB)
}

/// A normal Sylow 2-subgroup whose real elements are central forces a
/// connected graph.
pub fn check_lemma_3_6(g: &Group, a: &Analysis) -> Verdict {
    let sylow = a.sylow2(g);
    let reals_central = a.bundle(g, &sylow).real.sizes.iter().all(|&s| s == 1);
    if !sylow.is_normal_in(g) || !reals_central {
        return Verdict::inapplicable(Statement::Lemma3_6);
    }
    if a.graph.is_connected() {
        Verdict::pass(Statement::Lemma3_6)
    } else {
        Verdict::fail(
            Statement::Lemma3_6,
            Witness::new("graph disconnected despite normal Sylow 2 with central reals"),
        )
    }
}
