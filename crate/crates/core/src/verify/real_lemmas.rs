//! Checkers for the 2.x statements: power closure of reality, 2-element
//! inverting witnesses, odd-size forcing, products of commuting real
//! elements, reality across normal subgroups and quotients, divisibility,
//! the even-order characterization of 2-closure, component count, existence
//! of real elements of odd prime order, the odd-size characterization, and
//! the prime-absence structure statement.

use crate::arith::{gcd, is_p_power, prime_divisors};
use crate::group::Group;
use crate::structure::series::derived_subgroup;
use crate::structure::sylow::{p_prime_residual, sylow_subgroup};
use crate::verify::context::Analysis;
use crate::verify::suite::Statement;
use crate::verify::witness::{Verdict, Witness};

/// Every power of a real element is real.
pub fn check_lemma_2_1_1(g: &Group, a: &Analysis) -> Verdict {
    for class in &a.real.classes {
        let x = class.representative;
        let order = a.orders[x];
        for k in 0..order {
            let power = g.element(x).pow(k as i64);
            let idx = g.index_of(&power).expect("power stays in the group");
            if !a.is_real_index(idx) {
                let w = Witness::new("power of a real element is not real")
                    .with_element(g, x)
                    .with_element(g, idx)
                    .with_value("exponent", k);
                return Verdict::fail(Statement::Lemma2_1_1, w);
            }
        }
    }
    Verdict::pass(Statement::Lemma2_1_1)
}

/// Every real element is inverted by some 2-element.
pub fn check_lemma_2_1_2(g: &Group, a: &Analysis) -> Verdict {
    let two_elements = a.two_element_indices();
    for class in &a.real.classes {
        let x = g.element(class.representative);
        let inverse = x.inverse();
        let found = two_elements
            .iter()
            .any(|&t| x.conjugate_by(g.element(t)) == inverse);
        if !found {
            let w = Witness::new("real element has no 2-element inverting it")
                .with_element(g, class.representative);
            return Verdict::fail(Statement::Lemma2_1_2, w);
        }
    }
    Verdict::pass(Statement::Lemma2_1_2)
}

/// A real element with odd class size is an involution or the identity.
pub fn check_lemma_2_1_3(g: &Group, a: &Analysis) -> Verdict {
    for class in &a.real.classes {
        if class.size % 2 == 1 {
            let x = g.element(class.representative);
            if !x.compose(x).is_identity() {
                let w = Witness::new("odd real class size but the square is nontrivial")
                    .with_element(g, class.representative)
                    .with_value("class_size", class.size);
                return Verdict::fail(Statement::Lemma2_1_3, w);
            }
        }
    }
    Verdict::pass(Statement::Lemma2_1_3)
}

/// For commuting real elements with coprime class sizes, the product is
/// real; with coprime orders too, the primes of both sizes divide the size
/// of the product's class.
pub fn check_lemma_2_1_4(g: &Group, a: &Analysis) -> Verdict {
    let real_indices = crate::real::real_element_indices(&a.classes);
    for (pos, &x) in real_indices.iter().enumerate() {
        let xp = g.element(x);
        let x_size = a.classes.size_of_class_of(x);
        for &y in &real_indices[pos..] {
            let yp = g.element(y);
            if !xp.commutes_with(yp) {
                continue;
            }
            let y_size = a.classes.size_of_class_of(y);
            if gcd(x_size, y_size) != 1 {
                continue;
            }
            let product = xp.compose(yp);
            let product_idx = g.index_of(&product).expect("product stays in the group");
            if !a.is_real_index(product_idx) {
                let w = Witness::new("product of commuting real elements with coprime class sizes is not real")
                    .with_element(g, x)
                    .with_element(g, y);
                return Verdict::fail(Statement::Lemma2_1_4, w);
            }
            if gcd(a.orders[x], a.orders[y]) == 1 {
                let product_size = a.classes.size_of_class_of(product_idx);
                let needed: Vec<u64> = prime_divisors(x_size)
                    .into_iter()
                    .chain(prime_divisors(y_size))
                    .collect();
                if needed.iter().any(|&p| product_size % p != 0) {
                    let w = Witness::new("class-size primes are lost in the product class")
                        .with_element(g, x)
                        .with_element(g, y)
                        .with_value("product_class_size", product_size);
                    return Verdict::fail(Statement::Lemma2_1_4, w);
                }
            }
        }
    }
    Verdict::pass(Statement::Lemma2_1_4)
}

/// For a normal subgroup of odd index, the real elements of the group and
/// of the subgroup coincide as sets.
pub fn check_lemma_2_1_5(g: &Group, a: &Analysis) -> Verdict {
    let scan = a.scan(g);
    let real_of_g = crate::real::real_element_indices(&a.classes);
    for n in scan.odd_index(g) {
        let bundle = a.bundle(g, n);
        let real_of_n = bundle.real_indices_in(g);
        if real_of_g != real_of_n {
            let w = Witness::new("real elements of group and odd-index normal subgroup differ")
                .with_value("subgroup_order", n.order())
                .with_value("group_real_count", real_of_g.len() as u64)
                .with_value("subgroup_real_count", real_of_n.len() as u64);
            return Verdict::fail(Statement::Lemma2_1_5, w);
        }
    }
    Verdict::pass(Statement::Lemma2_1_5)
}

/// Real cosets of a normal subgroup lift to real elements when the subgroup
/// order or the coset order is odd; odd-order cosets lift to odd-order
/// elements.
pub fn check_lemma_2_1_6(g: &Group, a: &Analysis) -> Verdict {
    let scan = a.scan(g);
    for n in scan.subgroups.iter() {
        let q = a.quotient_bundle(g, n);
        let n_odd = n.order() % 2 == 1;
        for class in &q.classes.classes {
            if !class.is_real {
                continue;
            }
            let coset_order = q.orders[class.representative];
            let coset_odd = coset_order % 2 == 1;
            if !(n_odd || coset_odd) {
                continue;
            }
            let coset = q.map.coset_of_quotient_element(class.representative);
            let lift = q.map.coset_members(coset).into_iter().find(|&y| {
                a.is_real_index(y) && (!coset_odd || a.orders[y] % 2 == 1)
            });
            if lift.is_none() {
                let w = Witness::new("real coset admits no real lift")
                    .with_value("subgroup_order", n.order())
                    .with_value("coset_order", coset_order);
                return Verdict::fail(Statement::Lemma2_1_6, w);
            }
        }
    }
    Verdict::pass(Statement::Lemma2_1_6)
}

/// Class sizes of normal subgroups and of quotients divide the ambient
/// class sizes.
pub fn check_lemma_2_2(g: &Group, a: &Analysis) -> Verdict {
    let scan = a.scan(g);
    for n in scan.subgroups.iter() {
        // |x^N| divides |x^G| for x in N.
        let bundle = a.bundle(g, n);
        for class in &bundle.classes.classes {
            let rep_in_g = g
                .index_of(bundle.group.element(class.representative))
                .expect("subgroup element lies in the parent");
            let g_size = a.classes.size_of_class_of(rep_in_g);
            if g_size % class.size != 0 {
                let w = Witness::new("subgroup class size does not divide ambient class size")
                    .with_element(g, rep_in_g)
                    .with_value("subgroup_class_size", class.size)
                    .with_value("group_class_size", g_size);
                return Verdict::fail(Statement::Lemma2_2, w);
            }
        }
        // |(Nx)^{G/N}| divides |x^G| for all x.
        let q = a.quotient_bundle(g, n);
        for class in &a.classes.classes {
            let x = class.representative;
            let image = q.map.project_element(x);
            let q_size = q.classes.size_of_class_of(image);
            if class.size % q_size != 0 {
                let w = Witness::new("quotient class size does not divide ambient class size")
                    .with_element(g, x)
                    .with_value("quotient_class_size", q_size)
                    .with_value("group_class_size", class.size);
                return Verdict::fail(Statement::Lemma2_2, w);
            }
        }
    }
    Verdict::pass(Statement::Lemma2_2)
}

/// Three equivalent conditions: nontrivial real elements all of even order;
/// real elements all 2-elements; normal Sylow 2-subgroup.
pub fn check_lemma_2_3(g: &Group, a: &Analysis) -> Verdict {
    let cond_even = a
        .real
        .classes
        .iter()
        .all(|c| a.orders[c.representative] == 1 || a.orders[c.representative] % 2 == 0);
    let cond_two_element = a
        .real
        .classes
        .iter()
        .all(|c| is_p_power(a.orders[c.representative], 2));
    let cond_closed = a.two_closed(g);
    if cond_even == cond_two_element && cond_two_element == cond_closed {
        Verdict::pass(Statement::Lemma2_3)
    } else {
        let w = Witness::new("the three 2-closure conditions disagree")
            .with_value("nontrivial_reals_even_order", cond_even as u64)
            .with_value("reals_are_2_elements", cond_two_element as u64)
            .with_value("normal_sylow_2", cond_closed as u64);
        Verdict::fail(Statement::Lemma2_3, w)
    }
}

/// The real prime graph has at most two connected components.
pub fn check_lemma_2_4(_g: &Group, a: &Analysis) -> Verdict {
    let count = a.graph.components.len();
    if count <= 2 {
        Verdict::pass(Statement::Lemma2_4)
    } else {
        Verdict::fail(
            Statement::Lemma2_4,
            Witness::new("more than two components").with_value("components", count as u64),
        )
    }
}

/// A group equal to its own odd-index residual, p-solvable for an odd prime
/// p dividing its order, has a real element of order p.
pub fn check_lemma_2_5(g: &Group, a: &Analysis) -> Verdict {
    if !a.two_prime_residual(g).is_whole(g) {
        return Verdict::inapplicable(Statement::Lemma2_5);
    }
    let odd_primes: Vec<u64> = prime_divisors(g.order())
        .into_iter()
        .filter(|&p| p != 2 && a.is_p_solvable(g, p))
        .collect();
    if odd_primes.is_empty() {
        return Verdict::inapplicable(Statement::Lemma2_5);
    }
    for p in odd_primes {
        let found = a
            .real
            .classes
            .iter()
            .any(|c| a.orders[c.representative] == p);
        if !found {
            let w = Witness::new("no real element of the required odd prime order")
                .with_value("prime", p);
            return Verdict::fail(Statement::Lemma2_5, w);
        }
    }
    Verdict::pass(Statement::Lemma2_5)
}

/// All real classes have odd size iff the Sylow 2-subgroup is normal with
/// all its real elements central.
pub fn check_lemma_2_6(g: &Group, a: &Analysis) -> Verdict {
    let all_odd = a.real.sizes.iter().all(|&s| s % 2 == 1);
    let sylow = a.sylow2(g);
    let rhs = sylow.is_normal_in(g)
        && a.bundle(g, &sylow).real.sizes.iter().all(|&s| s == 1);
    if all_odd == rhs {
        Verdict::pass(Statement::Lemma2_6)
    } else {
        let w = Witness::new("odd-size condition and normal-central-Sylow condition disagree")
            .with_value("all_real_sizes_odd", all_odd as u64)
            .with_value("normal_sylow_with_central_reals", rhs as u64);
        Verdict::fail(Statement::Lemma2_6, w)
    }
}

/// If an odd prime p divides no real class size (and, for p = 3, no
/// composition factor is the simple group of order 168), the group is
/// p-solvable, its p′-residual is solvable, and the odd-index residual has
/// a normal Sylow p-subgroup whose derived subgroup is central there.
pub fn check_lemma_2_7(g: &Group, a: &Analysis) -> Verdict {
    let qualifying: Vec<u64> = prime_divisors(g.order())
        .into_iter()
        .filter(|&p| p != 2)
        .filter(|&p| !a.real.rho_star.contains(&p))
        .filter(|&p| p != 3 || !a.has_order168_simple_factor(g))
        .collect();
    if qualifying.is_empty() {
        return Verdict::inapplicable(Statement::Lemma2_7);
    }
    let k_sub = a.two_prime_residual(g);
    let k = a.bundle(g, &k_sub);
    for p in qualifying {
        if !a.is_p_solvable(g, p) {
            let w = Witness::new("group is not p-solvable").with_value("prime", p);
            return Verdict::fail(Statement::Lemma2_7, w);
        }
        let residual = p_prime_residual(g, p);
        if !crate::structure::series::is_solvable(&a.bundle(g, &residual).group) {
            let w = Witness::new("p-residual subgroup is not solvable").with_value("prime", p);
            return Verdict::fail(Statement::Lemma2_7, w);
        }
        let sylow_p = sylow_subgroup(&k.group, p);
        if !sylow_p.is_normal_in(&k.group) {
            let w = Witness::new("odd-index residual lacks a normal Sylow p-subgroup")
                .with_value("prime", p);
            return Verdict::fail(Statement::Lemma2_7, w);
        }
        let p_group = sylow_p.to_group(&k.group);
        let p_derived = derived_subgroup(&p_group);
        let k_center = crate::structure::classes::center(&k.group);
        let central = p_derived.element_indices().iter().all(|&i| {
            let perm = p_group.element(i);
            k.group
                .index_of(perm)
                .map(|j| k_center.contains_index(j))
                .unwrap_or(false)
        });
        if !central {
            let w = Witness::new("derived subgroup of the normal Sylow p-subgroup is not central")
                .with_value("prime", p);
            return Verdict::fail(Statement::Lemma2_7, w);
        }
    }
    Verdict::pass(Statement::Lemma2_7)
}
