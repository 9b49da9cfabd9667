use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde::Serialize;

use super::catalog::Catalog;
use crate::error::{Error, Result};
use crate::invgen::{build_profile, invariably_generates};
use crate::perm::Permutation;
use crate::rational::ExactJson;
use crate::structure::{Caps, GroupStructure};

/// Whether the group is non-abelian simple (a single non-abelian chief factor).
pub fn is_nonabelian_simple(g: &GroupStructure) -> bool {
    let series = g.chief_series();
    series.length() == 1 && series.b == 1
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassSizeCheck {
    pub label: String,
    pub size: usize,
    pub passes: bool,
}

/// Both witness classes against `|G|^{2/3} / 2`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Theorem3cReport {
    pub order: usize,
    pub threshold: f64,
    pub classes: Vec<ClassSizeCheck>,
    pub passes: bool,
}

/// `|c| > |G|^{2/3} / 2`, decided exactly as `(2|c|)^3 > |G|^2`.
fn exceeds_threshold(size: usize, order: usize) -> bool {
    BigUint::from(2 * size).pow(3) > BigUint::from(order).pow(2)
}

pub fn theorem3c_check(g: &GroupStructure, witness: (usize, usize)) -> Result<Theorem3cReport> {
    if !is_nonabelian_simple(g) {
        return Err(Error::InvalidArgument("group is not non-abelian simple".into()));
    }
    let profile = build_profile(g, None)?;
    if !invariably_generates(&profile, &[witness.0, witness.1])? {
        return Err(Error::InvalidArgument(
            "witness classes do not invariably generate".into(),
        ));
    }
    let n = g.order();
    let classes: Vec<ClassSizeCheck> = [witness.0, witness.1]
        .iter()
        .map(|&c| {
            let class = g.classes().class(c);
            ClassSizeCheck {
                label: class.label.clone(),
                size: class.size,
                passes: exceeds_threshold(class.size, n),
            }
        })
        .collect();
    Ok(Theorem3cReport {
        order: n,
        threshold: (n as f64).powf(2.0 / 3.0) / 2.0,
        passes: classes.iter().all(|c| c.passes),
        classes,
    })
}

/// The invariably generating pair of classes with the largest smaller class
/// (then the largest larger class, then the least indices).
pub fn best_invgen_pair(g: &GroupStructure) -> Result<Option<(usize, usize)>> {
    let profile = build_profile(g, None)?;
    let sizes = g.classes().sizes();
    let mut best: Option<((usize, usize), (usize, usize))> = None;
    for a in 0..sizes.len() {
        for b in a..sizes.len() {
            if !invariably_generates(&profile, &[a, b])? {
                continue;
            }
            let key = (sizes[a].min(sizes[b]), sizes[a].max(sizes[b]));
            if best.as_ref().map_or(true, |(k, _)| key > *k) {
                best = Some((key, (a, b)));
            }
        }
    }
    Ok(best.map(|(_, pair)| pair))
}

/// A maximal class containing the normalizer of a field-automorphism
/// subgroup, in the almost simple group `PSL(2,8).3`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LowerExampleReport {
    pub group: String,
    /// `b`, the order of the field-automorphism group.
    pub b: usize,
    pub field_automorphism: String,
    pub normalizer_order: usize,
    pub normalizer_is_maximal: bool,
    /// Orders and densities of every maximal class containing a conjugate of the normalizer.
    pub candidates: Vec<(usize, ExactJson)>,
    pub maximal_order: usize,
    pub v: ExactJson,
    pub bound: ExactJson,
    pub v_meets_bound: bool,
    pub socle_order: usize,
    pub fixed_point_free: usize,
    pub fixed_point_free_in_socle: bool,
}

pub const LOWER_EXAMPLE_GROUP: &str = "PGammaL(2,8)";

/// Takes `B = ⟨x⟩` for the least element `x` of order `b` outside the socle,
/// finds the maximal classes containing `N_G(B)`, and reports the one with the
/// largest `v(M)` against `1 − 1/b`, together with whether every
/// fixed-point-free element (every element outside `~M`) lies in the socle.
pub fn almost_simple_lower_example(catalog: &Catalog, caps: &Caps) -> Result<LowerExampleReport> {
    let b = 3;
    let handle = catalog.instantiate(LOWER_EXAMPLE_GROUP)?;
    let g = GroupStructure::new(&handle, caps)?;
    let socle = g
        .chief_series()
        .subgroups
        .first()
        .cloned()
        .ok_or_else(|| Error::InvalidArgument("trivial group".into()))?;
    let t = g.table();
    let x = (0..g.order())
        .find(|&e| !socle.contains(e) && t.element_order(e) == b as u64)
        .ok_or_else(|| Error::InvalidArgument("no outer element of order b".into()))?;
    let field = g.subgroup_generated(&[x]);
    let normalizer = g.normalizer(&field);
    let maximal = g.maximal_subgroups();
    let containing: Vec<usize> = (0..maximal.len())
        .filter(|&m| {
            g.conjugates(&maximal[m].representative)
                .iter()
                .any(|c| normalizer.is_subset(c))
        })
        .collect();
    let chosen = *containing
        .iter()
        .max_by(|&&a, &&c| maximal[a].v.cmp(&maximal[c].v).then(c.cmp(&a)))
        .ok_or_else(|| Error::InvalidArgument("normalizer lies in no maximal subgroup".into()))?;
    let m = &maximal[chosen];
    let bound = BigRational::new(BigInt::from(b - 1), BigInt::from(b));
    let outside: Vec<usize> = (0..g.classes().len())
        .filter(|&c| !m.mtilde_classes.contains(c))
        .collect();
    let fixed_point_free = outside.iter().map(|&c| g.classes().class(c).size).sum();
    let fixed_point_free_in_socle = outside
        .iter()
        .all(|&c| g.classes().class(c).members.is_subset(&socle.members));
    let perm: &Permutation = t.element(x);
    Ok(LowerExampleReport {
        group: LOWER_EXAMPLE_GROUP.to_string(),
        b,
        field_automorphism: perm.to_string(),
        normalizer_order: normalizer.order(),
        // A maximal overgroup of the same order is the normalizer itself.
        normalizer_is_maximal: containing
            .iter()
            .any(|&i| maximal[i].order() == normalizer.order()),
        candidates: containing
            .iter()
            .map(|&i| (maximal[i].order(), ExactJson(maximal[i].v.clone())))
            .collect(),
        maximal_order: m.order(),
        v_meets_bound: m.v >= bound,
        v: ExactJson(m.v.clone()),
        bound: ExactJson(bound),
        socle_order: socle.order(),
        fixed_point_free,
        fixed_point_free_in_socle,
    })
}
