//! Structural subgroup machinery: centralizers, classes, normal closures,
//! derived series, Sylow subgroups and core operators, quotients, and
//! composition-factor fingerprints.

pub mod classes;
pub mod factors;
pub mod quotient;
pub mod scan;
pub mod series;
pub mod subgroup;
pub mod sylow;

pub use classes::{center, centralizer, class_size_divides, conjugacy_classes, is_central, ClassData, ConjugacyClass};
pub use factors::{
    composition_factors, fingerprint, fingerprints_match, has_order168_simple_factor,
    is_p_solvable, maximal_normal_subgroup, CompositionFactorFingerprint, GroupFingerprint,
};
pub use quotient::{quotient, QuotientMap};
pub use scan::{normal_subgroup_scan, normal_subgroup_scan_capped, NormalScan, NORMAL_SCAN_CAP};
pub use series::{derived_series, derived_subgroup, is_solvable};
pub use subgroup::{normal_closure, normalizer, Subgroup};
pub use sylow::{is_p_closed, is_p_nilpotent, p_core, p_prime_core, p_prime_residual, sylow_subgroup};
