use super::GroupStructure;
use crate::error::{Error, Result};
use crate::perm::GroupHandle;

/// Merging of the classes of `G` under conjugation by an overgroup `A` with
/// `G ◁ A`.
#[derive(Clone, Debug)]
pub struct FusionMap {
    /// `fused_class_of[c]` for each `G`-class `c`. Fused classes are numbered
    /// by their least constituent `G`-class.
    pub fused_class_of: Vec<usize>,
    pub fused_count: usize,
    pub overgroup: GroupHandle,
}

impl FusionMap {
    /// `G`-classes making up fused class `f`.
    pub fn constituents(&self, f: usize) -> Vec<usize> {
        (0..self.fused_class_of.len())
            .filter(|&c| self.fused_class_of[c] == f)
            .collect()
    }

    pub fn identity(classes: usize, overgroup: GroupHandle) -> Self {
        FusionMap {
            fused_class_of: (0..classes).collect(),
            fused_count: classes,
            overgroup,
        }
    }
}

impl GroupStructure {
    /// Fuses classes under conjugation by `a`; fails unless `G ◁ A`.
    pub fn fuse_classes_under(&self, a: &GroupHandle) -> Result<FusionMap> {
        if a.degree() != self.group.degree() {
            return Err(Error::DegreeMismatch {
                left: self.group.degree(),
                right: a.degree(),
            });
        }
        let own_gens: Vec<_> = self.group.nontrivial_generators();
        let a_gens = a.nontrivial_generators();
        for x in &a_gens {
            for g in &own_gens {
                if !self.group.contains(&g.conjugate_by(x))? {
                    return Err(Error::NotNormal);
                }
            }
        }
        for g in &own_gens {
            if !a.contains(g)? {
                return Err(Error::NotNormal);
            }
        }
        let k = self.classes.len();
        let mut parent: Vec<usize> = (0..k).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            parent[x] = r;
            r
        }
        for c in 0..k {
            let rep = self.table.element(self.classes.class(c).representative);
            for x in &a_gens {
                let img = self.table.idx(&rep.conjugate_by(x));
                let d = self.classes.class_of(img);
                let (ra, rb) = (find(&mut parent, c), find(&mut parent, d));
                if ra != rb {
                    parent[ra.max(rb)] = ra.min(rb);
                }
            }
        }
        let mut fused_class_of = vec![0; k];
        let mut numbering = vec![usize::MAX; k];
        let mut next = 0;
        for c in 0..k {
            let r = find(&mut parent, c);
            if numbering[r] == usize::MAX {
                numbering[r] = next;
                next += 1;
            }
            fused_class_of[c] = numbering[r];
        }
        Ok(FusionMap {
            fused_class_of,
            fused_count: next,
            overgroup: a.clone(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::super::test_util::*;
    use crate::GroupHandle;

    #[test]
    fn a5_in_s5() {
        let s = structure(A5.0, A5.1);
        let s5 = GroupHandle::parse("(1 2 3 4 5) ; (1 2)", 5).unwrap();
        let f = s.fuse_classes_under(&s5).unwrap();
        assert_eq!(f.fused_count, 4);
        assert_eq!(f.constituents(1), vec![1, 2]);
    }

    #[test]
    fn self_fusion_is_identity() {
        let s = structure(S4.0, S4.1);
        let f = s.fuse_classes_under(s.group()).unwrap();
        assert_eq!(f.fused_class_of, (0..5).collect::<Vec<_>>());
    }

    #[test]
    fn c3_in_s3() {
        let s = structure("(1 2 3)", 3);
        let s3 = GroupHandle::parse(S3.0, S3.1).unwrap();
        let f = s.fuse_classes_under(&s3).unwrap();
        assert_eq!(f.fused_count, 2);
        assert_eq!(f.fused_class_of[1], f.fused_class_of[2]);
    }

    #[test]
    fn rejects_non_normal_embedding() {
        let s = structure("(1 2)", 3);
        let s3 = GroupHandle::parse(S3.0, S3.1).unwrap();
        assert_eq!(s.fuse_classes_under(&s3).unwrap_err(), crate::Error::NotNormal);
    }
}
