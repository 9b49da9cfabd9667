//! Conjugacy classes, subgroups, maximal subgroups, chief series, quotients
//! and class fusion for enumerable permutation groups.

mod chief;
mod classes;
mod fusion;
mod maximal;
mod quotient;
mod subgroups;

use std::sync::OnceLock;

use num_bigint::BigUint;
use num_rational::BigRational;

pub use chief::{ChiefFactor, ChiefSeries};
pub use classes::{ConjugacyClass, ConjugacyTable};
pub use fusion::FusionMap;
pub use maximal::{v_of, MaximalClass};
pub use subgroups::{SubgroupClass, SubgroupRecord};

use crate::error::Result;
use crate::perm::{ElementTable, GroupHandle, DEFAULT_ENUMERATION_CAP};

/// Exact probability / density.
pub type ExactProbability = BigRational;

pub const DEFAULT_LATTICE_CAP: usize = 20_000;
pub const DEFAULT_SUBSET_CAP: usize = 24;

/// Size limits for the exact paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest group whose elements are enumerated.
    pub enumeration: usize,
    /// Largest group whose full subgroup list is built.
    pub lattice: usize,
    /// Largest family of distinct `~M` sets for inclusion–exclusion.
    pub subsets: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            enumeration: DEFAULT_ENUMERATION_CAP,
            lattice: DEFAULT_LATTICE_CAP,
            subsets: DEFAULT_SUBSET_CAP,
        }
    }
}

/// An enumerated group with its conjugacy classes; everything heavier
/// (subgroup classes, maximal subgroups) is computed on first use and cached.
pub struct GroupStructure {
    group: GroupHandle,
    table: ElementTable,
    classes: ConjugacyTable,
    gens: Vec<usize>,
    caps: Caps,
    centralizers: OnceLock<Vec<Vec<usize>>>,
    coprime_powers: OnceLock<Vec<Vec<u32>>>,
    subgroup_classes: OnceLock<Vec<SubgroupClass>>,
    maximal: OnceLock<Vec<MaximalClass>>,
}

impl GroupStructure {
    pub fn new(group: &GroupHandle, caps: &Caps) -> Result<Self> {
        let table = ElementTable::enumerate(group, caps.enumeration)?;
        let mut gens: Vec<usize> = group
            .generators()
            .iter()
            .map(|g| table.idx(g))
            .filter(|&i| i != 0)
            .collect();
        gens.dedup();
        let classes = ConjugacyTable::compute(&table, &gens);
        Ok(GroupStructure {
            group: group.clone(),
            table,
            classes,
            gens,
            caps: *caps,
            centralizers: OnceLock::new(),
            coprime_powers: OnceLock::new(),
            subgroup_classes: OnceLock::new(),
            maximal: OnceLock::new(),
        })
    }

    pub fn group(&self) -> &GroupHandle {
        &self.group
    }

    pub fn table(&self) -> &ElementTable {
        &self.table
    }

    pub fn classes(&self) -> &ConjugacyTable {
        &self.classes
    }

    pub fn caps(&self) -> &Caps {
        &self.caps
    }

    /// Element indices of the group's nontrivial generators.
    pub fn generator_indices(&self) -> &[usize] {
        &self.gens
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn order_big(&self) -> BigUint {
        BigUint::from(self.order())
    }

    /// Elements of the centralizer of each class representative.
    pub(crate) fn centralizers(&self) -> &[Vec<usize>] {
        self.centralizers.get_or_init(|| {
            self.classes
                .classes()
                .iter()
                .map(|c| {
                    let rep = c.representative;
                    (0..self.order())
                        .filter(|&g| self.table.conj(rep, g) == rep)
                        .collect()
                })
                .collect()
        })
    }

    /// Elements `g` with `x^g` in `target`.
    pub(crate) fn transporters_into(
        &self,
        x: usize,
        target: &fixedbitset::FixedBitSet,
    ) -> impl Iterator<Item = usize> + '_ {
        let class = self.classes.class_of(x);
        let tx_inv = self.table.inv(self.classes.transporter(x));
        let cent = &self.centralizers()[class];
        let targets: Vec<usize> = self.classes.class(class).members.intersection(target).collect();
        targets.into_iter().flat_map(move |r| {
            let tr = self.classes.transporter(r);
            cent.iter()
                .map(move |&c| self.table.mul(self.table.mul(tx_inv, c), tr))
        })
    }

    pub fn is_abelian(&self) -> bool {
        self.gens.iter().all(|&a| {
            self.gens
                .iter()
                .all(|&b| self.table.mul(a, b) == self.table.mul(b, a))
        })
    }

    /// Abelian, of 2-power order, every element squaring to the identity.
    pub fn is_elementary_abelian_2(&self) -> bool {
        self.order() > 1
            && self.is_abelian()
            && (1..self.order()).all(|e| self.table.element_order(e) == 2)
    }
}

pub fn conjugacy_classes(group: &GroupHandle, caps: &Caps) -> Result<ConjugacyTable> {
    Ok(GroupStructure::new(group, caps)?.classes)
}


#[cfg(test)]
mod tests {
    use super::test_util::*;

    #[test]
    fn class_sizes() {
        let a5 = structure(A5.0, A5.1);
        let mut sizes = a5.classes().sizes();
        assert_eq!(sizes, vec![1, 12, 12, 15, 20]);
        sizes.sort();
        assert_eq!(a5.classes().labels(), vec!["1a", "5a", "5b", "2a", "3a"]);

        let s4 = structure(S4.0, S4.1);
        assert_eq!(s4.classes().sizes(), vec![1, 3, 6, 6, 8]);
        assert_eq!(s4.classes().labels(), vec!["1a", "2a", "2b", "4a", "3a"]);

        let c5 = structure("(1 2 3 4 5)", 5);
        assert_eq!(c5.classes().sizes(), vec![1; 5]);
    }

    #[test]
    fn class_invariants() {
        for (g, n) in [A5, S4, S3, A4, ("(1 2 3 4 5 6) ; (1 2)", 6)] {
            let s = structure(g, n);
            let t = s.classes();
            assert_eq!(t.sizes().iter().sum::<usize>(), s.order());
            assert!(t.sizes().iter().all(|&k| s.order() % k == 0));
            assert_eq!(t.class(0).size, 1);
            assert_eq!(t.class(0).representative, 0);
            for e in 0..s.order() {
                let c = t.class_of(e);
                let rep = t.class(c).representative;
                assert_eq!(s.table().conj(rep, t.transporter(e)), e);
            }
        }
    }

    #[test]
    fn elementary_abelian_detection() {
        assert!(structure("(1 2) ; (3 4)", 4).is_elementary_abelian_2());
        assert!(!structure("(1 2 3 4)", 4).is_elementary_abelian_2());
        assert!(!structure(S3.0, S3.1).is_elementary_abelian_2());
    }
}
