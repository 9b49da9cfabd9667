use num_rational::BigRational;
use serde::Serialize;

use super::family::{chebotarev_exact, DistinctTildeFamily};
use super::mc::{chebotarev_mc, McEstimate};
use crate::error::{Error, Result};
use crate::rational::{to_decimal, to_f64, ExactJson};
use crate::structure::GroupStructure;

/// `C(G)` normalized by `√|G|` and by `√(|G| ln |G|)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Ratios {
    pub c_over_sqrt_order: f64,
    pub c_over_sqrt_order_log: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Theorem2Report {
    pub group: String,
    pub order: usize,
    pub c_exact: Option<ExactJson>,
    pub c_decimal: Option<String>,
    pub mc: Option<McEstimate>,
    /// Computed from the exact value when present, else from the MC mean.
    pub ratios: Ratios,
}

impl Theorem2Report {
    pub fn c_exact_value(&self) -> Option<&BigRational> {
        self.c_exact.as_ref().map(|e| &e.0)
    }
}

pub fn ratios(c: f64, order: usize) -> Ratios {
    let n = order as f64;
    Ratios {
        c_over_sqrt_order: c / n.sqrt(),
        c_over_sqrt_order_log: if order > 1 { c / (n * n.ln()).sqrt() } else { 0.0 },
    }
}

/// Exact `C(G)` when the family is within `subset_cap`, Monte Carlo when
/// `mc` is `Some((trials, seed))`; at least one must be available.
pub fn theorem2_ratio_report(
    name: &str,
    g: &GroupStructure,
    subset_cap: usize,
    mc: Option<(usize, u64)>,
) -> Result<Theorem2Report> {
    let family = DistinctTildeFamily::new(g, true);
    let exact = match chebotarev_exact(&family, subset_cap) {
        Ok(c) => Some(c),
        Err(e @ Error::CapExceeded { .. }) if mc.is_none() => return Err(e),
        Err(Error::CapExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    let mc = mc
        .map(|(trials, seed)| chebotarev_mc(g, trials, seed))
        .transpose()?;
    let c = match (&exact, &mc) {
        (Some(c), _) => to_f64(c),
        (None, Some(m)) => m.mean,
        (None, None) => unreachable!(),
    };
    Ok(Theorem2Report {
        group: name.to_string(),
        order: g.order(),
        c_decimal: exact.as_ref().map(|c| to_decimal(c, 6)),
        c_exact: exact.map(ExactJson),
        mc,
        ratios: ratios(c, g.order()),
    })
}
