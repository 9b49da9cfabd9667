use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use rustc_hash::FxHashMap;

use super::GroupStructure;
use crate::error::{Error, Result};
use crate::perm::StabChain;

/// A subgroup of an enumerated group, as a set of element indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupRecord {
    pub members: FixedBitSet,
    /// Sorted element indices.
    pub elements: Vec<usize>,
    /// A (small) generating list of element indices.
    pub generators: Vec<usize>,
}

impl SubgroupRecord {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.members.contains(e)
    }

    pub fn is_subset(&self, other: &SubgroupRecord) -> bool {
        self.members.is_subset(&other.members)
    }
}

/// A conjugacy class of subgroups.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    pub representative: SubgroupRecord,
    pub normalizer_order: usize,
    pub is_maximal: bool,
}

impl SubgroupClass {
    pub fn class_size(&self, group_order: usize) -> usize {
        group_order / self.normalizer_order
    }
}

impl GroupStructure {
    pub fn trivial_subgroup(&self) -> SubgroupRecord {
        let mut members = FixedBitSet::with_capacity(self.order());
        members.insert(0);
        SubgroupRecord {
            members,
            elements: vec![0],
            generators: Vec::new(),
        }
    }

    pub fn whole_group(&self) -> SubgroupRecord {
        let mut members = FixedBitSet::with_capacity(self.order());
        members.insert_range(..);
        SubgroupRecord {
            members,
            elements: (0..self.order()).collect(),
            generators: self.gens.clone(),
        }
    }

    /// `⟨h, g⟩` by Dimino's coset enumeration. Returns `None` as soon as the
    /// result exceeds `limit` elements.
    pub(crate) fn extend_subgroup(
        &self,
        h: &SubgroupRecord,
        g: usize,
        limit: Option<usize>,
    ) -> Option<SubgroupRecord> {
        if h.contains(g) {
            return Some(h.clone());
        }
        let t = &self.table;
        let mut members = h.members.clone();
        let mut elements = h.elements.clone();
        let mut gens = h.generators.clone();
        gens.push(g);
        let mut reps = vec![0usize];
        let add_coset = |r: usize, members: &mut FixedBitSet, elements: &mut Vec<usize>| {
            for &x in &h.elements {
                let y = t.mul(x, r);
                members.insert(y);
                elements.push(y);
            }
        };
        add_coset(g, &mut members, &mut elements);
        reps.push(g);
        let mut i = 0;
        while i < reps.len() {
            let r = reps[i];
            for &s in &gens {
                let x = t.mul(r, s);
                if !members.contains(x) {
                    add_coset(x, &mut members, &mut elements);
                    reps.push(x);
                    if limit.is_some_and(|l| elements.len() > l) {
                        return None;
                    }
                }
            }
            i += 1;
        }
        if limit.is_some_and(|l| elements.len() > l) {
            return None;
        }
        elements.sort_unstable();
        Some(SubgroupRecord {
            members,
            elements,
            generators: gens,
        })
    }

    /// Subgroup generated by the given element indices.
    pub fn subgroup_generated(&self, gens: &[usize]) -> SubgroupRecord {
        let mut h = self.trivial_subgroup();
        for &g in gens {
            if !h.contains(g) {
                h = self.extend_subgroup(&h, g, None).unwrap();
            }
        }
        h
    }

    /// Subgroup whose element set is known to be closed; picks generators greedily.
    pub(crate) fn subgroup_from_elements(&self, elements: &[usize]) -> SubgroupRecord {
        // High-order elements first keeps the generating list short.
        let mut by_order = elements.to_vec();
        by_order.sort_by_key(|&e| (std::cmp::Reverse(self.table.element_order(e)), e));
        let mut h = self.trivial_subgroup();
        for &e in &by_order {
            if h.order() == elements.len() {
                break;
            }
            if !h.contains(e) {
                h = self.extend_subgroup(&h, e, None).unwrap();
            }
        }
        debug_assert_eq!(h.order(), elements.len());
        h
    }

    /// Normal closure of the subgroup generated by `h` and `seed`.
    pub fn normal_closure(&self, h: &SubgroupRecord, seed: &[usize]) -> SubgroupRecord {
        let mut k = h.clone();
        let mut classes: Vec<usize> = seed.iter().map(|&e| self.classes.class_of(e)).collect();
        for &g in &h.generators {
            classes.push(self.classes.class_of(g));
        }
        classes.sort_unstable();
        classes.dedup();
        for c in classes {
            for e in self.classes.class(c).members.ones() {
                if !k.contains(e) {
                    k = self.extend_subgroup(&k, e, None).unwrap();
                }
            }
        }
        k
    }

    pub fn is_normal(&self, h: &SubgroupRecord) -> bool {
        self.gens.iter().all(|&g| {
            h.generators
                .iter()
                .all(|&x| h.contains(self.table.conj(x, g)))
        })
    }

    pub fn conjugate_subgroup(&self, h: &SubgroupRecord, g: usize) -> SubgroupRecord {
        let mut members = FixedBitSet::with_capacity(self.order());
        let mut elements: Vec<usize> = h
            .elements
            .iter()
            .map(|&x| {
                let y = self.table.conj(x, g);
                members.insert(y);
                y
            })
            .collect();
        elements.sort_unstable();
        SubgroupRecord {
            members,
            elements,
            generators: h.generators.iter().map(|&x| self.table.conj(x, g)).collect(),
        }
    }

    /// Generator of `h` with the fewest candidate transporters into `target`.
    fn pivot_generator(&self, h: &SubgroupRecord, target: &FixedBitSet) -> usize {
        let cent = self.centralizers();
        *h.generators
            .iter()
            .min_by_key(|&&x| {
                let c = self.classes.class_of(x);
                self.classes.class(c).members.intersection(target).count() * cent[c].len()
            })
            .unwrap()
    }

    /// Some `g` with `a^g = b`, if one exists.
    pub fn conjugating_element(&self, a: &SubgroupRecord, b: &SubgroupRecord) -> Option<usize> {
        if a.order() != b.order() {
            return None;
        }
        if a.generators.is_empty() {
            return Some(0);
        }
        let pivot = self.pivot_generator(a, &b.members);
        self.transporters_into(pivot, &b.members).find(|&g| {
            a.generators
                .iter()
                .all(|&x| b.contains(self.table.conj(x, g)))
        })
    }

    pub fn normalizer(&self, h: &SubgroupRecord) -> SubgroupRecord {
        if h.generators.is_empty() || h.order() == self.order() {
            return self.whole_group();
        }
        let pivot = self.pivot_generator(h, &h.members);
        let mut elems: Vec<usize> = self
            .transporters_into(pivot, &h.members)
            .filter(|&g| {
                h.generators
                    .iter()
                    .all(|&x| h.contains(self.table.conj(x, g)))
            })
            .collect();
        elems.sort_unstable();
        self.subgroup_from_elements(&elems)
    }

    /// Every subgroup, each exactly once, ordered by (order, element list).
    ///
    /// Seeds with the cyclic subgroups and closes under joins with them.
    pub fn subgroup_lattice(&self) -> Result<Vec<SubgroupRecord>> {
        if self.order() > self.caps.lattice {
            return Err(Error::cap("lattice", self.order(), self.caps.lattice));
        }
        let mut seen: FxHashMap<FixedBitSet, usize> = FxHashMap::default();
        let mut all = vec![self.trivial_subgroup()];
        seen.insert(all[0].members.clone(), 0);
        let mut cyclic: Vec<usize> = Vec::new();
        for e in 1..self.order() {
            let c = self.subgroup_generated(&[e]);
            if !seen.contains_key(&c.members) {
                seen.insert(c.members.clone(), all.len());
                cyclic.push(e);
                all.push(c);
            }
        }
        let mut i = 0;
        while i < all.len() {
            for &c in &cyclic {
                if all[i].contains(c) {
                    continue;
                }
                let j = self.extend_subgroup(&all[i], c, None).unwrap();
                if !seen.contains_key(&j.members) {
                    seen.insert(j.members.clone(), all.len());
                    all.push(j);
                }
            }
            i += 1;
        }
        all.sort_by(|a, b| (a.order(), &a.elements).cmp(&(b.order(), &b.elements)));
        Ok(all)
    }

    /// For each element, the indices of its powers that generate the same cyclic subgroup.
    pub(crate) fn coprime_powers(&self) -> &[Vec<u32>] {
        self.coprime_powers.get_or_init(|| {
            (0..self.order())
                .into_par_iter()
                .map(|x| {
                    let ord = self.table.element_order(x) as usize;
                    let mut out = Vec::new();
                    let mut p = x;
                    for k in 1..ord {
                        if k > 1 && num_integer::gcd(k, ord) == 1 {
                            out.push(p as u32);
                        }
                        p = self.table.mul(p, x);
                    }
                    out
                })
                .collect()
        })
    }

    /// Representatives of the conjugacy classes of subgroups, with maximality flags.
    pub fn subgroup_classes(&self) -> &[SubgroupClass] {
        self.subgroup_classes
            .get_or_init(|| self.compute_subgroup_classes())
    }

    fn compute_subgroup_classes(&self) -> Vec<SubgroupClass> {
        let n = self.order();
        let mut reps: Vec<SubgroupRecord> = vec![self.trivial_subgroup()];
        let mut buckets: HashMap<(usize, Vec<u32>), Vec<usize>> = HashMap::new();
        buckets
            .entry((1, self.classes.histogram([0])))
            .or_default()
            .push(0);
        let mut out = Vec::new();
        let mut i = 0;
        while i < reps.len() {
            let h = reps[i].clone();
            i += 1;
            if h.order() == n {
                out.push(SubgroupClass {
                    representative: h,
                    normalizer_order: n,
                    is_maximal: false,
                });
                continue;
            }
            let norm = self.normalizer(&h);
            let powers = self.coprime_powers();
            let mut seen = h.members.clone();
            let mut orbit_reps = Vec::new();
            for g in 0..n {
                if seen.contains(g) {
                    continue;
                }
                // g and everything giving ⟨h, g⟩ up to conjugacy in N(h).
                orbit_reps.push(g);
                seen.insert(g);
                let mut stack = vec![g];
                while let Some(x) = stack.pop() {
                    let mut visit = |y: usize| {
                        if !seen.contains(y) {
                            seen.insert(y);
                            stack.push(y);
                        }
                    };
                    for &s in &norm.generators {
                        visit(self.table.conj(x, s));
                    }
                    for &s in &h.generators {
                        visit(self.table.mul(s, x));
                    }
                    for &p in &powers[x] {
                        visit(p as usize);
                    }
                }
            }
            let h_perms: Vec<_> = h
                .generators
                .iter()
                .map(|&x| self.table.element(x).clone())
                .collect();
            let extensions: Vec<Option<SubgroupRecord>> = orbit_reps
                .par_iter()
                .map(|&g| {
                    if n > 2000 {
                        let mut gens = h_perms.clone();
                        gens.push(self.table.element(g).clone());
                        let chain = StabChain::from_generators(self.group.degree(), &gens);
                        if chain.order() == self.order_big() {
                            return None;
                        }
                    }
                    self.extend_subgroup(&h, g, Some(n / 2))
                })
                .collect();
            let maximal = extensions.iter().all(Option::is_none);
            for k in extensions.into_iter().flatten() {
                let key = (k.order(), self.classes.histogram(k.elements.iter().copied()));
                let bucket = buckets.entry(key).or_default();
                if !bucket
                    .iter()
                    .any(|&r| self.conjugating_element(&k, &reps[r]).is_some())
                {
                    bucket.push(reps.len());
                    reps.push(k);
                }
            }
            out.push(SubgroupClass {
                representative: h,
                normalizer_order: norm.order(),
                is_maximal: maximal,
            });
        }
        // Joins reaching G are never materialized above.
        if n > 1 {
            out.push(SubgroupClass {
                representative: self.whole_group(),
                normalizer_order: n,
                is_maximal: false,
            });
        }
        out
    }
}
