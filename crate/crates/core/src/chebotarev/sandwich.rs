use num_rational::BigRational;
use num_traits::{One, Zero};

use super::family::{p_i_exact, DistinctTildeFamily};
use crate::error::Result;
use crate::structure::GroupStructure;

/// `max_M v(M)^k ≤ 1 − P_I(G,k) ≤ Σ_M v(M)^k`, the sum over all classes of
/// maximal subgroups.
#[derive(Clone, Debug, PartialEq)]
pub struct SandwichReport {
    pub k: u32,
    pub lower: BigRational,
    pub failure: BigRational,
    pub upper: BigRational,
}

impl SandwichReport {
    pub fn lower_holds(&self) -> bool {
        self.lower <= self.failure
    }

    pub fn upper_holds(&self) -> bool {
        self.failure <= self.upper
    }

    pub fn holds(&self) -> bool {
        self.lower_holds() && self.upper_holds()
    }
}

pub fn p_i_sandwich_check(g: &GroupStructure, k: u32, subset_cap: usize) -> Result<SandwichReport> {
    let family = DistinctTildeFamily::new(g, true);
    let failure = BigRational::one() - p_i_exact(&family, k, subset_cap)?;
    let powers: Vec<BigRational> = g
        .maximal_subgroups()
        .iter()
        .map(|m| m.v.pow(k as i32))
        .collect();
    let lower = powers.iter().max().cloned().unwrap_or_else(BigRational::zero);
    let upper = powers.iter().fold(BigRational::zero(), |acc, p| acc + p);
    Ok(SandwichReport {
        k,
        lower,
        failure,
        upper,
    })
}
