use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::perm::{ElementTable, GroupHandle, Permutation};
use crate::structure::GroupStructure;

/// The permutation group induced by `a` on the conjugacy classes of `t`.
pub fn induced_class_action(t: &GroupStructure, a: &GroupHandle) -> Result<GroupHandle> {
    let classes = t.classes();
    let k = classes.len();
    let mut gens = Vec::new();
    for x in a.generators() {
        let images = (0..k)
            .map(|c| {
                let rep = t.table().element(classes.class(c).representative);
                let img = t.table().index_of(&rep.conjugate_by(x)).ok_or(Error::NotNormal)?;
                Ok(classes.class_of(img) as u32)
            })
            .collect::<Result<Vec<_>>>()?;
        gens.push(Permutation::from_images(images)?);
    }
    GroupHandle::from_generators(&gens)
}

/// Number of `A`-orbits on ordered `r`-tuples of classes of `T`, by Burnside
/// over the induced action: `(1/|Ā|) Σ fix(ā)^r`.
///
/// If `k` exceeds this, no `r` elements invariably generate `T^k`.
pub fn pigeonhole_bound(t: &GroupStructure, a: &GroupHandle, r: u32) -> Result<BigUint> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be at least 1".into()));
    }
    let induced = induced_class_action(t, a)?;
    let table = ElementTable::enumerate(&induced, t.caps().enumeration)?;
    let mut total = BigUint::zero();
    for p in table.elements() {
        total += BigUint::from(p.fixed_points()).pow(r);
    }
    Ok(total / BigUint::from(table.len()))
}
