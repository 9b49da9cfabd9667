use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::structure::{ExactProbability, GroupStructure};

/// The distinct sets `~M` (as sets of conjugacy classes) of a group.
#[derive(Clone, Debug)]
pub struct DistinctTildeFamily {
    sets: Vec<FixedBitSet>,
    sizes: Vec<usize>,
    provenance: Vec<Vec<usize>>,
    group_order: usize,
    class_sizes: Vec<usize>,
}

impl DistinctTildeFamily {
    /// One set per class of maximal subgroups, merged by exact equality when
    /// `dedup` is set.
    pub fn new(g: &GroupStructure, dedup: bool) -> Self {
        let mut sets: Vec<FixedBitSet> = Vec::new();
        let mut provenance: Vec<Vec<usize>> = Vec::new();
        for (m, mc) in g.maximal_subgroups().iter().enumerate() {
            match sets.iter().position(|s| dedup && *s == mc.mtilde_classes) {
                Some(i) => provenance[i].push(m),
                None => {
                    sets.push(mc.mtilde_classes.clone());
                    provenance.push(vec![m]);
                }
            }
        }
        let class_sizes = g.classes().sizes();
        let sizes = sets
            .iter()
            .map(|s| s.ones().map(|c| class_sizes[c]).sum())
            .collect();
        DistinctTildeFamily {
            sets,
            sizes,
            provenance,
            group_order: g.order(),
            class_sizes,
        }
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn sets(&self) -> &[FixedBitSet] {
        &self.sets
    }

    /// Maximal-class indices mapping to each set.
    pub fn provenance(&self) -> &[Vec<usize>] {
        &self.provenance
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    /// `|~M| / |G|` for each set.
    pub fn densities(&self) -> Vec<ExactProbability> {
        self.sizes.iter().map(|&s| ratio(s, self.group_order)).collect()
    }

    fn weight(&self, set: &FixedBitSet) -> usize {
        set.ones().map(|c| self.class_sizes[c]).sum()
    }

    /// Inclusion–exclusion over nonempty subfamilies `S`, collected as
    /// `Σ (−1)^{|S|+1} [·]` grouped by the size of `∩S`. Entries are
    /// `(size, coefficient)` with nonzero coefficients, by increasing size.
    ///
    /// A subfamily whose intersection already lies in every later set has
    /// descendants with the same intersection and alternating signs, which
    /// cancel it exactly, so the whole subtree is skipped.
    pub fn intersection_coefficients(&self, cap: usize) -> Result<Vec<(usize, i64)>> {
        if self.len() > cap {
            return Err(Error::cap("distinct ~M sets", self.len(), cap));
        }
        let n = self.len();
        let mut suffix = vec![FixedBitSet::with_capacity(self.class_sizes.len()); n + 1];
        suffix[n].insert_range(..);
        for i in (0..n).rev() {
            suffix[i] = suffix[i + 1].clone();
            suffix[i].intersect_with(&self.sets[i]);
        }
        let mut coeffs: BTreeMap<usize, i64> = BTreeMap::new();
        let mut stack: Vec<(usize, FixedBitSet, i64)> = Vec::new();
        for i in 0..n {
            stack.push((i, self.sets[i].clone(), 1));
        }
        while let Some((last, w, sign)) = stack.pop() {
            if last + 1 < n && w.is_subset(&suffix[last + 1]) {
                continue;
            }
            *coeffs.entry(self.weight(&w)).or_insert(0) += sign;
            for j in last + 1..n {
                let mut next = w.clone();
                next.intersect_with(&self.sets[j]);
                stack.push((j, next, -sign));
            }
        }
        Ok(coeffs.into_iter().filter(|&(_, c)| c != 0).collect())
    }
}

fn ratio(a: usize, b: usize) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

/// `P_I(G, k)`: probability that `k` uniform elements invariably generate.
pub fn p_i_exact(family: &DistinctTildeFamily, k: u32, cap: usize) -> Result<ExactProbability> {
    let coeffs = family.intersection_coefficients(cap)?;
    let n = family.group_order;
    let mut fail = BigRational::zero();
    for (size, c) in coeffs {
        fail += ratio(size, n).pow(k as i32) * BigInt::from(c);
    }
    Ok(BigRational::one() - fail)
}

/// `C(G) = Σ_{k≥0} (1 − P_I(G,k)) = Σ_S (−1)^{|S|+1} / (1 − v_S)`.
pub fn chebotarev_exact(family: &DistinctTildeFamily, cap: usize) -> Result<ExactProbability> {
    let coeffs = family.intersection_coefficients(cap)?;
    let n = family.group_order;
    let mut c = BigRational::zero();
    for (size, coeff) in coeffs {
        debug_assert!(size < n);
        c += ratio(n, n - size) * BigInt::from(coeff);
    }
    Ok(c)
}

/// `Σ_{k=0}^{K} (1 − P_I(G,k))` and a bound on the remaining tail,
/// `Σ |coeff| v^{K+1} / (1 − v)` over the grouped intersection sizes.
pub fn chebotarev_partial_sum(
    family: &DistinctTildeFamily,
    terms: u32,
    cap: usize,
) -> Result<(ExactProbability, ExactProbability)> {
    let coeffs = family.intersection_coefficients(cap)?;
    let n = family.group_order;
    let mut partial = BigRational::zero();
    let mut tail = BigRational::zero();
    for &(size, coeff) in &coeffs {
        let v = ratio(size, n);
        let mut power = BigRational::one();
        for _ in 0..=terms {
            partial += &power * BigInt::from(coeff);
            power *= &v;
        }
        tail += power * BigInt::from(coeff.abs()) / (BigRational::one() - v);
    }
    Ok((partial, tail))
}
