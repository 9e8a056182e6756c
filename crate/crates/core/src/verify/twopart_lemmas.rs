//! Checkers for the 4.x statements on equal 2-parts: centrality of real
//! 2-power-order elements, reduction to odd-index normal subgroups,
//! centrality in the quotient by the odd core, solvability, and
//! 2-nilpotence of the odd-index residual.

use crate::arith::{is_p_power, p_part};
use crate::group::Group;
use crate::real::CommonTwoPart;
use crate::verify::context::Analysis;
use crate::verify::suite::Statement;
use crate::verify::witness::{Verdict, Witness};

/// Equal-2-parts hypothesis in its strict form: a common 2-part that is at
/// least 2 (vacuously satisfied when no non-central real class exists).
fn strict_two_part_hypothesis(a: &Analysis) -> bool {
    match a.real.common_two_part() {
        CommonTwoPart::Vacuous => true,
        CommonTwoPart::Value(v) => v >= 2,
        CommonTwoPart::Mixed => false,
    }
}

/// Equal-2-parts hypothesis in its weak form: any common 2-part.
fn weak_two_part_hypothesis(a: &Analysis) -> bool {
    !matches!(a.real.common_two_part(), CommonTwoPart::Mixed)
}

/// Under the strict hypothesis plus central Sylow-2 reals, every nontrivial
/// real element of 2-power order is a central involution.
pub fn check_lemma_4_1(g: &Group, a: &Analysis) -> Verdict {
    if !strict_two_part_hypothesis(a) || !sylow_reals_central(g, a) {
        return Verdict::inapplicable(Statement::Lemma4_1);
    }
    for class in &a.real.classes {
        let y = class.representative;
        let order = a.orders[y];
        if order == 1 || !is_p_power(order, 2) {
            continue;
        }
        if order != 2 || class.size != 1 {
            let w = Witness::new("real 2-power-order element is not a central involution")
                .with_element(g, y)
                .with_value("order", order)
                .with_value("class_size", class.size);
            return Verdict::fail(Statement::Lemma4_1, w);
        }
    }
    Verdict::pass(Statement::Lemma4_1)
}

/// Under the strict hypothesis, every odd-index normal subgroup inherits the
/// same common 2-part on its non-central real class sizes.
pub fn check_lemma_4_2(g: &Group, a: &Analysis) -> Verdict {
    if !strict_two_part_hypothesis(a) {
        return Verdict::inapplicable(Statement::Lemma4_2);
    }
    let expected = a.real.common_two_part();
    let scan = a.scan(g);
    for k in scan.odd_index(g) {
        let bundle = a.bundle(g, k);
        for class in &bundle.classes.classes {
            if !class.is_real || class.size == 1 {
                continue;
            }
            let part = p_part(class.size, 2);
            let consistent = match expected {
                CommonTwoPart::Value(v) => part == v,
                // No non-central reals upstairs: the subgroup's common
                // 2-part may be anything the hypothesis allows, i.e. ≥ 2.
                CommonTwoPart::Vacuous => part >= 2,
                CommonTwoPart::Mixed => unreachable!("hypothesis filtered out mixed 2-parts"),
            };
            if !consistent {
                let rep_in_g = g
                    .index_of(bundle.group.element(class.representative))
                    .expect("subgroup element lies in the parent");
                let w = Witness::new("odd-index normal subgroup breaks the common 2-part")
                    .with_element(g, rep_in_g)
                    .with_value("subgroup_order", k.order())
                    .with_value("subgroup_class_size", class.size);
                return Verdict::fail(Statement::Lemma4_2, w);
            }
        }
    }
    Verdict::pass(Statement::Lemma4_2)
}

/// Under the strict hypothesis plus central Sylow-2 reals, nontrivial real
/// 2-power-order elements of the quotient by the odd core are central there.
pub fn check_lemma_4_3(g: &Group, a: &Analysis) -> Verdict {
    if !strict_two_part_hypothesis(a) || !sylow_reals_central(g, a) {
        return Verdict::inapplicable(Statement::Lemma4_3);
    }
    let core = a.two_prime_core(g);
    let q = a.quotient_bundle(g, &core);
    for class in &q.classes.classes {
        if !class.is_real {
            continue;
        }
        let order = q.orders[class.representative];
        if order == 1 || !is_p_power(order, 2) {
            continue;
        }
        if class.size != 1 {
            let w = Witness::new("real 2-power-order coset is not central in the quotient")
                .with_value("coset_order", order)
                .with_value("quotient_class_size", class.size);
            return Verdict::fail(Statement::Lemma4_3, w);
        }
    }
    Verdict::pass(Statement::Lemma4_3)
}

/// Weak hypothesis plus central Sylow-2 reals forces solvability.
pub fn check_theorem_4_4(g: &Group, a: &Analysis) -> Verdict {
    if !weak_two_part_hypothesis(a) || !sylow_reals_central(g, a) {
        return Verdict::inapplicable(Statement::Theorem4_4);
    }
    if a.solvable(g) {
        Verdict::pass(Statement::Theorem4_4)
    } else {
        Verdict::fail(
            Statement::Theorem4_4,
            Witness::new("equal 2-parts with central Sylow reals but not solvable"),
        )
    }
}

/// Weak hypothesis plus central Sylow-2 reals forces a normal 2-complement
/// in the odd-index residual.
pub fn check_theorem_4_5(g: &Group, a: &Analysis) -> Verdict {
    if !weak_two_part_hypothesis(a) || !sylow_reals_central(g, a) {
        return Verdict::inapplicable(Statement::Theorem4_5);
    }
    if residual_is_2_nilpotent(g, a) {
        Verdict::pass(Statement::Theorem4_5)
    } else {
        Verdict::fail(
            Statement::Theorem4_5,
            Witness::new("odd-index residual has no normal 2-complement"),
        )
    }
}

/// The combined statement: solvability plus 2-nilpotence of the residual.
pub fn check_theorem_c(g: &Group, a: &Analysis) -> Verdict {
    if !weak_two_part_hypothesis(a) || !sylow_reals_central(g, a) {
        return Verdict::inapplicable(Statement::TheoremC);
    }
    if !a.solvable(g) {
        return Verdict::fail(
            Statement::TheoremC,
            Witness::new("hypotheses hold but the group is not solvable"),
        );
    }
    if !residual_is_2_nilpotent(g, a) {
        return Verdict::fail(
            Statement::TheoremC,
            Witness::new("hypotheses hold but the odd-index residual is not 2-nilpotent"),
        );
    }
    Verdict::pass(Statement::TheoremC)
}

fn sylow_reals_central(g: &Group, a: &Analysis) -> bool {
    let sylow = a.sylow2(g);
    a.bundle(g, &sylow).real.sizes.iter().all(|&s| s == 1)
}

fn residual_is_2_nilpotent(g: &Group, a: &Analysis) -> bool {
    let k = a.bundle(g, &a.two_prime_residual(g));
    crate::structure::sylow::is_p_nilpotent(&k.group, &k.classes, 2)
}
