//! Exact `P_I(G,k)` and `C(G)` by inclusion–exclusion over the distinct sets
//! `~M`, the probability sandwich, and a seeded Monte Carlo estimator.

mod family;
mod mc;
mod report;
mod sandwich;

pub use family::{chebotarev_exact, chebotarev_partial_sum, p_i_exact, DistinctTildeFamily};
pub use mc::{chebotarev_mc, McEstimate};
pub use report::{ratios, theorem2_ratio_report, Ratios, Theorem2Report};
pub use sandwich::{p_i_sandwich_check, SandwichReport};
