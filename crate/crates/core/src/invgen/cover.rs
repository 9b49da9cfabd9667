use fixedbitset::FixedBitSet;

use super::profile::IncidenceProfile;
use crate::error::Result;

/// Whether the classes in `x` (a multiset of row indices) invariably generate:
/// every column must be killed by some member.
pub fn invariably_generates(profile: &IncidenceProfile, x: &[usize]) -> Result<bool> {
    for &r in x {
        profile.check_row(r)?;
    }
    let mut covered = FixedBitSet::with_capacity(profile.columns());
    for &r in x {
        covered.union_with(profile.kill_set().kill(r));
    }
    Ok(covered.count_ones(..) == profile.columns())
}

/// A minimum invariable generating set of classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalCover {
    pub size: usize,
    /// Lexicographically least minimum cover, as increasing row indices.
    pub witness: Vec<usize>,
}

/// Exact `d_I` by minimum set cover over the kill sets.
///
/// Returns `None` when no set of classes covers every column, which can
/// happen only for fused profiles.
pub fn d_i_exact(profile: &IncidenceProfile) -> Option<MinimalCover> {
    let columns = profile.columns();
    if columns == 0 {
        return Some(MinimalCover {
            size: 0,
            witness: Vec::new(),
        });
    }
    let kills = profile.kill_set();
    if kills.union().count_ones(..) != columns {
        return None;
    }
    let largest = (0..kills.len())
        .map(|r| kills.kill(r).count_ones(..))
        .max()
        .unwrap_or(0);
    let lower = columns.div_ceil(largest).max(1);
    let upper = greedy_cover(profile).len();
    for d in lower..=upper {
        let mut chosen = Vec::with_capacity(d);
        let covered = FixedBitSet::with_capacity(columns);
        if search(profile, d, 0, &covered, &mut chosen) {
            return Some(MinimalCover {
                size: d,
                witness: chosen,
            });
        }
    }
    unreachable!("the greedy cover has size {upper}")
}

/// Depth-first search over increasing row indices, so the first cover found
/// is the lexicographically least of its size.
fn search(
    profile: &IncidenceProfile,
    slots: usize,
    start: usize,
    covered: &FixedBitSet,
    chosen: &mut Vec<usize>,
) -> bool {
    let kills = profile.kill_set();
    let columns = profile.columns();
    let missing = columns - covered.count_ones(..);
    if missing == 0 {
        return true;
    }
    if slots == 0 {
        return false;
    }
    let best_gain = (start..kills.len())
        .map(|r| kills.kill(r).difference(covered).count())
        .max()
        .unwrap_or(0);
    if best_gain * slots < missing {
        return false;
    }
    // Some chosen row must kill the least uncovered column.
    let need = (0..columns).find(|&m| !covered.contains(m)).unwrap();
    for r in start..kills.len() {
        let gain = kills.kill(r).difference(covered).count();
        if gain == 0 {
            continue;
        }
        let can_reach_need = kills.kill(r).contains(need)
            || (r + 1..kills.len()).any(|s| kills.kill(s).contains(need));
        if !can_reach_need {
            return false;
        }
        let mut next = covered.clone();
        next.union_with(kills.kill(r));
        chosen.push(r);
        if search(profile, slots - 1, r + 1, &next, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Greedy cover: repeatedly take the row killing the most uncovered columns.
pub fn greedy_cover(profile: &IncidenceProfile) -> Vec<usize> {
    let kills = profile.kill_set();
    let mut covered = FixedBitSet::with_capacity(profile.columns());
    let mut chosen = Vec::new();
    while covered.count_ones(..) < profile.columns() {
        let best = (0..kills.len())
            .max_by_key(|&r| {
                (
                    kills.kill(r).difference(&covered).count(),
                    std::cmp::Reverse(r),
                )
            })
            .unwrap();
        if kills.kill(best).difference(&covered).count() == 0 {
            break;
        }
        covered.union_with(kills.kill(best));
        chosen.push(best);
    }
    chosen.sort_unstable();
    chosen
}

#[cfg(test)]
mod tests {
    use super::super::build_profile;
    use super::*;
    use crate::structure::test_util::*;
    use crate::GroupHandle;

    #[test]
    fn a5_pairs() {
        let s = structure(A5.0, A5.1);
        let p = build_profile(&s, None).unwrap();
        let l = |x: &str| p.row_of_label(x).unwrap();
        assert!(invariably_generates(&p, &[l("3a"), l("5a")]).unwrap());
        assert!(!invariably_generates(&p, &[l("5a"), l("5b")]).unwrap());
        assert!(!invariably_generates(&p, &[0]).unwrap());
        assert!(!invariably_generates(&p, &[0, 0, 0]).unwrap());
        assert!(invariably_generates(&p, &[9]).is_err());
        let d = d_i_exact(&p).unwrap();
        assert_eq!(d.size, 2);
        assert_eq!(d.witness, vec![l("5a"), l("3a")]);
    }

    #[test]
    fn s4_witness() {
        let s = structure(S4.0, S4.1);
        let p = build_profile(&s, None).unwrap();
        let d = d_i_exact(&p).unwrap();
        assert_eq!(d.size, 2);
        let labels: Vec<_> = d.witness.iter().map(|&r| p.row_labels()[r].as_str()).collect();
        assert_eq!(labels, vec!["4a", "3a"]);
    }

    #[test]
    fn elementary_abelian() {
        let s = structure("(1 2) ; (3 4) ; (5 6)", 6);
        let p = build_profile(&s, None).unwrap();
        assert_eq!(d_i_exact(&p).unwrap().size, 3);
    }

    #[test]
    fn cyclic_and_trivial() {
        let s = structure("(1 2 3 4 5 6)", 6);
        let p = build_profile(&s, None).unwrap();
        assert_eq!(d_i_exact(&p).unwrap().size, 1);
        let t = structure("()", 2);
        let p = build_profile(&t, None).unwrap();
        assert_eq!(d_i_exact(&p).unwrap().size, 0);
        assert!(invariably_generates(&p, &[]).unwrap());
    }

    #[test]
    fn fusion_can_destroy_every_cover() {
        // The three involutions of V4 fuse in S4 and each lies in a maximal subgroup.
        let s = structure("(1 2)(3 4) ; (1 3)(2 4)", 4);
        let s4 = GroupHandle::parse(S4.0, S4.1).unwrap();
        let f = s.fuse_classes_under(&s4).unwrap();
        let p = build_profile(&s, Some(&f)).unwrap();
        assert_eq!(d_i_exact(&p), None);
    }

    #[test]
    fn greedy_is_a_cover() {
        for (g, n) in [A5, S4, S3, A4] {
            let s = structure(g, n);
            let p = build_profile(&s, None).unwrap();
            let greedy = greedy_cover(&p);
            assert!(invariably_generates(&p, &greedy).unwrap());
            assert!(greedy.len() >= d_i_exact(&p).unwrap().size);
        }
    }
}
