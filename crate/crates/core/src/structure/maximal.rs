use std::collections::HashSet;

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_rational::BigRational;

use super::{ExactProbability, GroupStructure, SubgroupRecord};
use crate::perm::{GroupHandle, Permutation};

/// A conjugacy class of maximal subgroups, with everything the invariable
/// generation machinery needs from it.
#[derive(Clone, Debug)]
pub struct MaximalClass {
    /// Canonical representative: the conjugate with the least sorted element list.
    pub representative: SubgroupRecord,
    /// Number of conjugates, `|G : N_G(M)|`.
    pub class_size: usize,
    pub normalizer_order: usize,
    /// The core: the union of the conjugacy classes lying entirely in `M`.
    pub core: FixedBitSet,
    pub core_order: usize,
    /// Classes meeting `M`; their union is `~M`, the union of all conjugates.
    pub mtilde_classes: FixedBitSet,
    /// `|~M|`.
    pub mtilde_size: usize,
    /// `|~M| / |G|`.
    pub v: ExactProbability,
}

impl MaximalClass {
    pub fn order(&self) -> usize {
        self.representative.order()
    }

    pub fn is_normal(&self) -> bool {
        self.class_size == 1
    }

    pub fn index(&self, group_order: usize) -> usize {
        group_order / self.order()
    }
}

impl GroupStructure {
    /// One representative per conjugacy class of maximal subgroups, ordered by
    /// decreasing order, then by the `~M` class set, then by representative.
    pub fn maximal_subgroups(&self) -> &[MaximalClass] {
        self.maximal.get_or_init(|| self.compute_maximal())
    }

    fn compute_maximal(&self) -> Vec<MaximalClass> {
        let n = self.order();
        let mut out: Vec<MaximalClass> = self
            .subgroup_classes()
            .iter()
            .filter(|c| c.is_maximal)
            .map(|c| self.maximal_class(&c.representative, c.normalizer_order))
            .collect();
        out.sort_by(|a, b| {
            b.order()
                .cmp(&a.order())
                .then_with(|| {
                    let x: Vec<usize> = a.mtilde_classes.ones().collect();
                    let y: Vec<usize> = b.mtilde_classes.ones().collect();
                    x.cmp(&y)
                })
                .then_with(|| a.representative.elements.cmp(&b.representative.elements))
        });
        debug_assert!(out.iter().all(|m| m.mtilde_size < n));
        out
    }

    fn maximal_class(&self, m: &SubgroupRecord, normalizer_order: usize) -> MaximalClass {
        let n = self.order();
        let representative = self.canonical_conjugate(m);
        let hist = self.classes.histogram(representative.elements.iter().copied());
        let mut core = FixedBitSet::with_capacity(n);
        let mut mtilde_classes = FixedBitSet::with_capacity(self.classes.len());
        for (c, &count) in hist.iter().enumerate() {
            if count == 0 {
                continue;
            }
            mtilde_classes.insert(c);
            if count as usize == self.classes.class(c).size {
                core.union_with(&self.classes.class(c).members);
            }
        }
        let mtilde_size = self.classes.weight(&mtilde_classes);
        let core_order = core.count_ones(..);
        MaximalClass {
            representative,
            class_size: n / normalizer_order,
            normalizer_order,
            core,
            core_order,
            mtilde_classes,
            mtilde_size,
            v: BigRational::new(BigInt::from(mtilde_size), BigInt::from(n)),
        }
    }

    /// All conjugates of `h`.
    pub fn conjugates(&self, h: &SubgroupRecord) -> Vec<SubgroupRecord> {
        let mut seen: HashSet<FixedBitSet> = HashSet::new();
        seen.insert(h.members.clone());
        let mut all = vec![h.clone()];
        let mut i = 0;
        while i < all.len() {
            for &g in &self.gens {
                let c = self.conjugate_subgroup(&all[i], g);
                if seen.insert(c.members.clone()) {
                    all.push(c);
                }
            }
            i += 1;
        }
        all
    }

    fn canonical_conjugate(&self, h: &SubgroupRecord) -> SubgroupRecord {
        let best = self
            .conjugates(h)
            .into_iter()
            .min_by(|a, b| a.elements.cmp(&b.elements))
            .unwrap();
        // Re-derive a short generating list for the chosen conjugate.
        self.subgroup_from_elements(&best.elements)
    }

    /// Permutation action of the group on the right cosets of `h`.
    pub fn coset_action(&self, h: &SubgroupRecord) -> GroupHandle {
        let n = self.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for e in 0..n {
            if coset_of[e] != usize::MAX {
                continue;
            }
            for &x in &h.elements {
                coset_of[self.table.mul(x, e)] = reps.len();
            }
            reps.push(e);
        }
        let gens: Vec<Permutation> = self
            .gens
            .iter()
            .map(|&s| {
                let images = reps
                    .iter()
                    .map(|&r| coset_of[self.table.mul(r, s)] as u32)
                    .collect();
                Permutation::from_images(images).expect("coset action is a permutation")
            })
            .collect();
        if gens.is_empty() {
            return GroupHandle::trivial(reps.len());
        }
        GroupHandle::from_generators(&gens).expect("equal degrees")
    }
}

/// `v(M) = |~M| / |G|`.
pub fn v_of(m: &MaximalClass) -> ExactProbability {
    m.v.clone()
}
