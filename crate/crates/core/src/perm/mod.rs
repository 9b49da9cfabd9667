//! Permutations and permutation groups.

mod chain;
mod permutation;
mod table;

pub use chain::{
    contains, embed_in_copy, group_from_generators, power_group, project_coordinate,
    random_element, tuple_element, GroupHandle, StabChain,
};
pub use permutation::{compose, element_order, inverse, power, Permutation};
pub use table::{enumerate_elements, ElementTable, DEFAULT_ENUMERATION_CAP};
