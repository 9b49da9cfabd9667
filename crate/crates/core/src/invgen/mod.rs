//! Invariable generation: the class-by-maximal-subgroup incidence profile,
//! the generation test, exact `d_I`, bounds and counterexamples.

mod bounds;
mod cover;
mod noninvariable;
mod profile;
mod refuter;

pub use bounds::{chief_bound_check, class_count_bounds, ChiefBoundReport, ClassCountBounds};
pub use cover::{d_i_exact, greedy_cover, invariably_generates, MinimalCover};
pub use noninvariable::{
    find_noninvariable_generating_set, random_generating_set, NonInvariableWitness,
};
pub use profile::{build_profile, IncidenceProfile, KillSet};
pub use refuter::{invgen_sample_refuter, RefuterVerdict};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::structure::GroupStructure;

/// Row of the profile containing a permutation of the group.
pub fn row_of_element(g: &GroupStructure, profile: &IncidenceProfile, p: &Permutation) -> Result<usize> {
    let e = g.table().index_of(p).ok_or(Error::NotInGroup)?;
    Ok(profile.row_of_class(g.classes().class_of(e)))
}

/// Element-level form of [`invariably_generates`].
pub fn elements_invariably_generate(
    g: &GroupStructure,
    profile: &IncidenceProfile,
    elements: &[Permutation],
) -> Result<bool> {
    let rows = elements
        .iter()
        .map(|p| row_of_element(g, profile, p))
        .collect::<Result<Vec<_>>>()?;
    invariably_generates(profile, &rows)
}
