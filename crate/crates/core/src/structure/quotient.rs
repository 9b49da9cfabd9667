use super::{GroupStructure, SubgroupRecord};
use crate::error::{Error, Result};
use crate::perm::{GroupHandle, Permutation};

impl GroupStructure {
    /// `G/N` as the permutation action of `G` on the cosets of `N`.
    pub fn quotient_group(&self, n: &SubgroupRecord) -> Result<GroupHandle> {
        if !self.is_normal(n) {
            return Err(Error::NotNormal);
        }
        let index = self.order() / n.order();
        if index > self.caps.enumeration {
            return Err(Error::cap("enumeration", index, self.caps.enumeration));
        }
        if index == 1 {
            return Ok(GroupHandle::trivial(1));
        }
        let action = self.coset_action(n);
        let gens: Vec<Permutation> = action.nontrivial_generators();
        GroupHandle::from_generators(&gens)
    }
}
