use num_traits::ToPrimitive;
use rustc_hash::FxHashMap;

use super::chain::GroupHandle;
use super::permutation::Permutation;
use crate::error::{Error, Result};

pub const DEFAULT_ENUMERATION_CAP: usize = 200_000;

/// Every element of a group, sorted lexicographically by image array.
///
/// Index 0 is always the identity.
#[derive(Clone, Debug)]
pub struct ElementTable {
    elements: Vec<Permutation>,
    index_of: FxHashMap<Permutation, u32>,
    /// Packed lookup for degree at most 16, four bits per point.
    packed: Option<FxHashMap<u64, u32>>,
    inverse: Vec<u32>,
    orders: Vec<u32>,
}

impl ElementTable {
    pub fn enumerate(group: &GroupHandle, cap: usize) -> Result<Self> {
        let order = group
            .order()
            .to_usize()
            .filter(|&n| n <= cap)
            .ok_or_else(|| Error::cap("enumeration", group.order(), cap))?;
        let mut elements = group.elements_unsorted();
        debug_assert_eq!(elements.len(), order);
        elements.sort_unstable();
        let index_of: FxHashMap<Permutation, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, g)| (g.clone(), i as u32))
            .collect();
        let packed = (elements[0].degree() <= 16).then(|| {
            elements
                .iter()
                .enumerate()
                .map(|(i, g)| (pack(g.images()), i as u32))
                .collect()
        });
        let inverse = elements.iter().map(|g| index_of[&g.inverse()]).collect();
        let orders = elements.iter().map(|g| g.order() as u32).collect();
        Ok(ElementTable {
            elements,
            index_of,
            packed,
            inverse,
            orders,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index_of.get(p).map(|&i| i as usize)
    }

    /// Index of an element known to be in the group.
    #[inline]
    pub(crate) fn idx(&self, p: &Permutation) -> usize {
        self.index_of[p] as usize
    }

    #[inline]
    fn lookup_with(&self, fill: impl FnOnce(&mut [u32])) -> usize {
        if let Some(packed) = &self.packed {
            let mut buf = [0u32; 16];
            let degree = self.elements[0].degree();
            fill(&mut buf[..degree]);
            return packed[&pack(&buf[..degree])] as usize;
        }
        let degree = self.elements[0].degree();
        let mut stack = [0u32; 32];
        let mut heap;
        let buf: &mut [u32] = if degree <= stack.len() {
            &mut stack[..degree]
        } else {
            heap = vec![0u32; degree];
            &mut heap
        };
        fill(buf);
        self.index_of[&*buf] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        let (pa, pb) = (self.elements[a].images(), self.elements[b].images());
        self.lookup_with(|buf| {
            for (o, &i) in buf.iter_mut().zip(pa) {
                *o = pb[i as usize];
            }
        })
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// Index of `x^g = g⁻¹ x g`.
    #[inline]
    pub fn conj(&self, x: usize, g: usize) -> usize {
        let (px, pg) = (self.elements[x].images(), self.elements[g].images());
        // g⁻¹xg sends i^g to (i^x)^g.
        self.lookup_with(|buf| {
            for (&i, &gi) in px.iter().zip(pg) {
                buf[gi as usize] = pg[i as usize];
            }
        })
    }

    pub fn element_order(&self, i: usize) -> u64 {
        self.orders[i] as u64
    }
}

#[inline]
fn pack(images: &[u32]) -> u64 {
    images.iter().rev().fold(0u64, |acc, &i| (acc << 4) | i as u64)
}

pub fn enumerate_elements(group: &GroupHandle, cap: usize) -> Result<ElementTable> {
    ElementTable::enumerate(group, cap)
}
