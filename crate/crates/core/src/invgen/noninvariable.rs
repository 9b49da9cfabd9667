use rand::Rng;

use crate::perm::{GroupHandle, Permutation, StabChain};
use crate::structure::{GroupStructure, SubgroupRecord};

/// A generating set that does not invariably generate: `x` generates the
/// group, while `y`, obtained by conjugating one element of `x`, generates
/// only the maximal subgroup.
#[derive(Clone, Debug)]
pub struct NonInvariableWitness {
    /// A non-normal maximal subgroup `M`.
    pub maximal: SubgroupRecord,
    /// Element index `g` with `M^g ≠ M`.
    pub conjugator: usize,
    /// Element index of `x ∈ M^g \ M`.
    pub extra: usize,
    /// `M ∪ {x}`, sorted element indices.
    pub x: Vec<usize>,
    /// `M ∪ {x^(g⁻¹)}`, the same list with `x` replaced by a conjugate.
    pub y: Vec<usize>,
}

/// For a non-nilpotent group, some maximal subgroup `M` is not normal; pick
/// `g` moving it and `x ∈ M^g \ M`. Then `M ∪ {x}` generates the group while
/// the conjugate `x^(g⁻¹)` lies in `M`. Nilpotent groups give `None`.
pub fn find_noninvariable_generating_set(g: &GroupStructure) -> Option<NonInvariableWitness> {
    let m = g.maximal_subgroups().iter().find(|m| !m.is_normal())?;
    let m = &m.representative;
    let t = g.table();
    let (conjugator, moved) = g.generator_indices().iter().find_map(|&s| {
        let c = g.conjugate_subgroup(m, s);
        (c.members != m.members).then_some((s, c))
    })?;
    let extra = *moved.elements.iter().find(|&&e| !m.contains(e))?;
    let back = t.conj(extra, t.inv(conjugator));
    debug_assert!(m.contains(back));
    let mut x = m.elements.clone();
    x.push(extra);
    x.sort_unstable();
    let y = x
        .iter()
        .map(|&e| if e == extra { back } else { e })
        .collect();
    Some(NonInvariableWitness {
        maximal: m.clone(),
        conjugator,
        extra,
        x,
        y,
    })
}

/// Uniform elements drawn until they generate the group.
pub fn random_generating_set<R: Rng + ?Sized>(group: &GroupHandle, rng: &mut R) -> Vec<Permutation> {
    let mut chain = StabChain::new(group.degree());
    let mut out = Vec::new();
    while &chain.order() != group.order() {
        let e = group.random_element(rng);
        chain.add_generator(&e);
        out.push(e);
    }
    out
}
