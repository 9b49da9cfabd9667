//! The group catalog and the explicit constructions checked against it.

mod alternating;
mod catalog;
mod kl;
mod pigeonhole;
mod simple;

pub use alternating::alternating_pair;
pub use catalog::{instantiate, load_catalog, Catalog, CatalogEntry, BUILTIN_CATALOG};
pub use kl::{
    kl_criterion_check, random_matrix, rows_generate_power, search_kl_matrix, AutAction,
    TupleMatrix,
};
pub use pigeonhole::{induced_class_action, pigeonhole_bound};
pub use simple::{
    almost_simple_lower_example, best_invgen_pair, is_nonabelian_simple, theorem3c_check,
    ClassSizeCheck, LowerExampleReport, Theorem3cReport, LOWER_EXAMPLE_GROUP,
};
