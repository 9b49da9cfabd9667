use fixedbitset::FixedBitSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::structure::GroupStructure;

/// Monte Carlo estimate of the waiting time until invariable generation.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct McEstimate {
    pub mean: f64,
    /// Sample standard deviation over `√trials`.
    #[serde(rename = "se")]
    pub std_error: f64,
    pub trials: usize,
    pub seed: u64,
}

/// Simulates draws of uniform elements, tracking which maximal classes are
/// still alive (every draw so far lies in `~M`); a trial stops when none are.
///
/// Trial `t` uses ChaCha8 seeded with `seed` on stream `t`, so the result does
/// not depend on scheduling.
pub fn chebotarev_mc(g: &GroupStructure, trials: usize, seed: u64) -> Result<McEstimate> {
    if trials < 1 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    let maximal = g.maximal_subgroups();
    let columns = maximal.len();
    let classes = g.classes();
    // alive_after[c]: columns whose ~M contains class c.
    let alive_after: Vec<FixedBitSet> = (0..classes.len())
        .map(|c| {
            let mut s = FixedBitSet::with_capacity(columns);
            for (m, mc) in maximal.iter().enumerate() {
                if mc.mtilde_classes.contains(c) {
                    s.insert(m);
                }
            }
            s
        })
        .collect();
    let n = g.order();
    let draws: Vec<u64> = (0..trials as u64)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(t);
            let mut alive = FixedBitSet::with_capacity(columns);
            alive.insert_range(..);
            let mut count = 0u64;
            while !alive.is_clear() {
                let e = rng.gen_range(0..n);
                alive.intersect_with(&alive_after[classes.class_of(e)]);
                count += 1;
            }
            count
        })
        .collect();
    let mean = draws.iter().sum::<u64>() as f64 / trials as f64;
    let var = if trials > 1 {
        draws
            .iter()
            .map(|&d| (d as f64 - mean).powi(2))
            .sum::<f64>()
            / (trials - 1) as f64
    } else {
        0.0
    };
    Ok(McEstimate {
        mean,
        std_error: (var / trials as f64).sqrt(),
        trials,
        seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::test_util::*;

    #[test]
    fn c2_is_geometric() {
        let e = chebotarev_mc(&structure("(1 2)", 2), 10_000, 1).unwrap();
        assert!((e.mean - 2.0).abs() <= 3.0 * e.std_error);
    }

    #[test]
    fn a5_matches_exact() {
        let e = chebotarev_mc(&structure(A5.0, A5.1), 20_000, 7).unwrap();
        assert!((e.mean - 91.0 / 22.0).abs() <= 3.0 * e.std_error, "{e:?}");
    }

    #[test]
    fn deterministic() {
        let s = structure(S4.0, S4.1);
        assert_eq!(chebotarev_mc(&s, 500, 5).unwrap(), chebotarev_mc(&s, 500, 5).unwrap());
        assert_ne!(chebotarev_mc(&s, 500, 5).unwrap(), chebotarev_mc(&s, 500, 6).unwrap());
        assert!(chebotarev_mc(&s, 0, 5).is_err());
    }

    #[test]
    fn trivial_group_needs_no_draws() {
        let e = chebotarev_mc(&structure("()", 1), 10, 0).unwrap();
        assert_eq!(e.mean, 0.0);
    }
}
