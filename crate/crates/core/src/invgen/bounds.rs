use serde::Serialize;

use super::cover::d_i_exact;
use super::profile::build_profile;
use crate::error::Result;
use crate::structure::GroupStructure;

/// Number of conjugacy classes and of conjugacy classes of cyclic subgroups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClassCountBounds {
    pub k_g: usize,
    pub cyclic_classes: usize,
}

/// Both class-count upper bounds on `d_I`. Two elements generate conjugate
/// cyclic subgroups iff one is conjugate to a generating power of the other,
/// so cyclic-subgroup classes are element classes merged under coprime powers.
pub fn class_count_bounds(g: &GroupStructure) -> ClassCountBounds {
    let classes = g.classes();
    let k = classes.len();
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let powers = g.coprime_powers();
    for c in 0..k {
        let rep = classes.class(c).representative;
        for &p in &powers[rep] {
            let d = classes.class_of(p as usize);
            let (a, b) = (find(&mut parent, c), find(&mut parent, d));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let cyclic_classes = (0..k).filter(|&c| find(&mut parent, c) == c).count();
    ClassCountBounds {
        k_g: k,
        cyclic_classes,
    }
}

/// `d_I` against the chief-series bound `a + 2b` and `log2 |G|`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChiefBoundReport {
    pub d_i: usize,
    /// Abelian chief factors.
    pub a: usize,
    /// Non-abelian chief factors.
    pub b: usize,
    pub a_plus_2b: usize,
    pub log2_order: f64,
    pub within_chief_bound: bool,
    pub within_log_bound: bool,
}

pub fn chief_bound_check(g: &GroupStructure) -> Result<ChiefBoundReport> {
    let profile = build_profile(g, None)?;
    let d_i = d_i_exact(&profile)
        .expect("unfused profiles always have a cover")
        .size;
    let series = g.chief_series();
    let log2_order = g.log2_order();
    let a_plus_2b = series.a + 2 * series.b;
    Ok(ChiefBoundReport {
        d_i,
        a: series.a,
        b: series.b,
        a_plus_2b,
        log2_order,
        within_chief_bound: d_i <= a_plus_2b,
        // Exact for powers of two, where the comparison is tight.
        within_log_bound: (d_i as f64) <= log2_order + 1e-9,
    })
}
