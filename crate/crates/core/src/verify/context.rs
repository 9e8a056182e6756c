//! Per-group analysis cache shared by the statement checkers.
//!
//! Checkers repeatedly need the same derived data — class partition, real
//! classes, the prime graph, Sylow 2-subgroup, the normal-subgroup scan,
//! promoted subgroups and quotients with their own class data. `Analysis`
//! computes the cheap ones eagerly and memoizes the rest. Per-group
//! verification is single-threaded, so plain interior mutability suffices.

use std::cell::{OnceCell, RefCell};
use std::collections::HashMap;
use std::rc::Rc;

use crate::graph::PrimeGraph;
use crate::group::Group;
use crate::real::RealClassData;
use crate::structure::classes::{conjugacy_classes, ClassData};
use crate::structure::factors::{composition_factors, CompositionFactorFingerprint};
use crate::structure::quotient::{quotient, QuotientMap};
use crate::structure::scan::{normal_subgroup_scan, NormalScan};
use crate::structure::series::is_solvable;
use crate::structure::subgroup::Subgroup;
use crate::structure::sylow::{p_prime_core, p_prime_residual, sylow_subgroup};

/// A subgroup promoted to a group of its own, with its derived data.
pub struct SubgroupBundle {
    pub group: Group,
    pub classes: ClassData,
    pub orders: Vec<u64>,
    pub real: RealClassData,
    pub graph: PrimeGraph,
}

impl SubgroupBundle {
    fn build(group: Group) -> SubgroupBundle {
        let classes = conjugacy_classes(&group);
        let orders = group.element_orders();
        let real = RealClassData::from_classes(&group, &classes);
        let graph = PrimeGraph::from_real_data(&real);
        SubgroupBundle {
            group,
            classes,
            orders,
            real,
            graph,
        }
    }

    /// Indices (in the original parent) of the real elements of this
    /// subgroup, reality relative to the subgroup itself.
    pub fn real_indices_in(&self, parent: &Group) -> Vec<usize> {
        let mut out: Vec<usize> = crate::real::real_element_indices(&self.classes)
            .into_iter()
            .map(|i| {
                parent
                    .index_of(self.group.element(i))
                    .expect("subgroup element lies in the parent")
            })
            .collect();
        out.sort_unstable();
        out
    }
}

/// A quotient by a normal subgroup, with its derived data.
pub struct QuotientBundle {
    pub group: Group,
    pub map: QuotientMap,
    pub classes: ClassData,
    pub orders: Vec<u64>,
    pub real: RealClassData,
    pub graph: PrimeGraph,
}

/// Memoized per-group computation state.
pub struct Analysis {
    pub classes: ClassData,
    pub orders: Vec<u64>,
    pub real: RealClassData,
    pub graph: PrimeGraph,
    solvable: OnceCell<bool>,
    factors: OnceCell<Rc<Vec<CompositionFactorFingerprint>>>,
    scan: OnceCell<Rc<NormalScan>>,
    sylow2: OnceCell<Rc<Subgroup>>,
    two_closed: OnceCell<bool>,
    two_nilpotent: OnceCell<bool>,
    two_prime_core: OnceCell<Rc<Subgroup>>,
    two_prime_residual: OnceCell<Rc<Subgroup>>,
    bundles: RefCell<HashMap<Vec<usize>, Rc<SubgroupBundle>>>,
    quotients: RefCell<HashMap<Vec<usize>, Rc<QuotientBundle>>>,
}

impl Analysis {
    pub fn new(g: &Group) -> Analysis {
        let classes = conjugacy_classes(g);
        let orders = g.element_orders();
        let real = RealClassData::from_classes(g, &classes);
        let graph = PrimeGraph::from_real_data(&real);
        Analysis {
            classes,
            orders,
            real,
            graph,
            solvable: OnceCell::new(),
            factors: OnceCell::new(),
            scan: OnceCell::new(),
            sylow2: OnceCell::new(),
            two_closed: OnceCell::new(),
            two_nilpotent: OnceCell::new(),
            two_prime_core: OnceCell::new(),
            two_prime_residual: OnceCell::new(),
            bundles: RefCell::new(HashMap::new()),
            quotients: RefCell::new(HashMap::new()),
        }
    }

    pub fn is_central_index(&self, element: usize) -> bool {
        self.classes.size_of_class_of(element) == 1
    }

    pub fn is_real_index(&self, element: usize) -> bool {
        self.classes.class_of_index(element).is_real
    }

    pub fn solvable(&self, g: &Group) -> bool {
        *self.solvable.get_or_init(|| is_solvable(g))
    }

    pub fn factors(&self, g: &Group) -> Rc<Vec<CompositionFactorFingerprint>> {
        self.factors
            .get_or_init(|| Rc::new(composition_factors(g)))
            .clone()
    }

    pub fn has_order168_simple_factor(&self, g: &Group) -> bool {
        self.factors(g).iter().any(|f| !f.abelian && f.order == 168)
    }

    pub fn is_p_solvable(&self, g: &Group, p: u64) -> bool {
        self.factors(g)
            .iter()
            .all(|f| crate::arith::is_p_power(f.order, p) || f.order % p != 0)
    }

    pub fn scan(&self, g: &Group) -> Rc<NormalScan> {
        self.scan
            .get_or_init(|| Rc::new(normal_subgroup_scan(g, &self.classes)))
            .clone()
    }

    pub fn sylow2(&self, g: &Group) -> Rc<Subgroup> {
        self.sylow2
            .get_or_init(|| Rc::new(sylow_subgroup(g, 2)))
            .clone()
    }

    pub fn two_closed(&self, g: &Group) -> bool {
        *self
            .two_closed
            .get_or_init(|| self.sylow2(g).is_normal_in(g))
    }

    pub fn two_nilpotent(&self, g: &Group) -> bool {
        *self.two_nilpotent.get_or_init(|| {
            self.two_prime_core(g).order() == crate::arith::p_prime_part(g.order(), 2)
        })
    }

    /// The largest normal odd-order subgroup.
    pub fn two_prime_core(&self, g: &Group) -> Rc<Subgroup> {
        self.two_prime_core
            .get_or_init(|| Rc::new(p_prime_core(g, &self.classes, 2)))
            .clone()
    }

    /// The smallest normal subgroup of odd index.
    pub fn two_prime_residual(&self, g: &Group) -> Rc<Subgroup> {
        self.two_prime_residual
            .get_or_init(|| Rc::new(p_prime_residual(g, 2)))
            .clone()
    }

    /// Promotes a subgroup and memoizes its derived data.
    pub fn bundle(&self, g: &Group, sub: &Subgroup) -> Rc<SubgroupBundle> {
        let key = sub.element_indices().to_vec();
        if let Some(b) = self.bundles.borrow().get(&key) {
            return b.clone();
        }
        let bundle = Rc::new(SubgroupBundle::build(sub.to_group(g)));
        self.bundles.borrow_mut().insert(key, bundle.clone());
        bundle
    }

    /// Quotient by a normal subgroup, memoized on the subgroup's elements.
    /// The quotient by the trivial subgroup is the group itself (up to the
    /// regular-action relabeling), so it is served directly instead of
    /// materializing a degree-|G| regular representation.
    pub fn quotient_bundle(&self, g: &Group, n: &Subgroup) -> Rc<QuotientBundle> {
        let key = n.element_indices().to_vec();
        if let Some(b) = self.quotients.borrow().get(&key) {
            return b.clone();
        }
        if n.is_trivial() {
            let bundle = Rc::new(QuotientBundle {
                group: g.clone(),
                map: crate::structure::quotient::QuotientMap::identity(g.order() as usize),
                classes: self.classes.clone(),
                orders: self.orders.clone(),
                real: self.real.clone(),
                graph: self.graph.clone(),
            });
            self.quotients.borrow_mut().insert(key, bundle.clone());
            return bundle;
        }
        let (group, map) = quotient(g, n);
        let classes = conjugacy_classes(&group);
        let orders = group.element_orders();
        let real = RealClassData::from_classes(&group, &classes);
        let graph = PrimeGraph::from_real_data(&real);
        let bundle = Rc::new(QuotientBundle {
            group,
            map,
            classes,
            orders,
            real,
            graph,
        });
        self.quotients.borrow_mut().insert(key, bundle.clone());
        bundle
    }

    /// Element indices whose order is a power of two (identity included).
    pub fn two_element_indices(&self) -> Vec<usize> {
        (0..self.orders.len())
            .filter(|&i| crate::arith::is_p_power(self.orders[i], 2))
            .collect()
    }
}
