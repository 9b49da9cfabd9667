use std::collections::HashSet;

use num_bigint::BigUint;
use rand::Rng;

use crate::error::{Error, Result};
use crate::perm::{tuple_element, ElementTable, GroupHandle, Permutation};
use crate::structure::GroupStructure;

/// An `r × k` array over `T`: row `i` is the `k`-tuple `(t_1^i, …, t_k^i)`,
/// column `j` the `r`-tuple `(t_j^1, …, t_j^r)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TupleMatrix {
    rows: Vec<Vec<Permutation>>,
}

impl TupleMatrix {
    pub fn from_rows(rows: Vec<Vec<Permutation>>) -> Result<Self> {
        let k = rows.first().map_or(0, Vec::len);
        if rows.is_empty() || k == 0 {
            return Err(Error::InvalidArgument("matrix dimensions must be at least 1".into()));
        }
        if rows.iter().any(|r| r.len() != k) {
            return Err(Error::InvalidArgument("ragged matrix".into()));
        }
        Ok(TupleMatrix { rows })
    }

    pub fn from_columns(columns: Vec<Vec<Permutation>>) -> Result<Self> {
        let r = columns.first().map_or(0, Vec::len);
        let rows = (0..r)
            .map(|i| columns.iter().map(|c| c.get(i).cloned()).collect::<Option<Vec<_>>>())
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::InvalidArgument("ragged matrix".into()))?;
        Self::from_rows(rows)
    }

    pub fn r(&self) -> usize {
        self.rows.len()
    }

    pub fn k(&self) -> usize {
        self.rows[0].len()
    }

    pub fn rows(&self) -> &[Vec<Permutation>] {
        &self.rows
    }

    pub fn column(&self, j: usize) -> Vec<Permutation> {
        self.rows.iter().map(|r| r[j].clone()).collect()
    }

    /// Row `i` as an element of `T^k` acting on `k` disjoint copies.
    pub fn row_element(&self, i: usize) -> Permutation {
        tuple_element(&self.rows[i])
    }
}

/// `T` with the conjugation action of an overgroup `A` normalizing it.
pub struct AutAction<'a> {
    t: &'a GroupStructure,
    a_elements: Vec<Permutation>,
}

impl<'a> AutAction<'a> {
    pub fn new(t: &'a GroupStructure, a: &GroupHandle, cap: usize) -> Result<Self> {
        if a.degree() != t.group().degree() {
            return Err(Error::DegreeMismatch {
                left: t.group().degree(),
                right: a.degree(),
            });
        }
        for x in a.generators() {
            for g in t.group().generators() {
                if !t.group().contains(&g.conjugate_by(x))? {
                    return Err(Error::NotNormal);
                }
            }
        }
        let a_elements = ElementTable::enumerate(a, cap)?.elements().to_vec();
        Ok(AutAction { t, a_elements })
    }

    fn indices(&self, tuple: &[Permutation]) -> Result<Vec<usize>> {
        tuple
            .iter()
            .map(|p| self.t.table().index_of(p).ok_or(Error::NotInGroup))
            .collect()
    }

    /// Least image of a tuple (as element indices) under coordinatewise
    /// conjugation by `A`; equal exactly for tuples in the same orbit.
    pub fn canonical(&self, tuple: &[Permutation]) -> Result<Vec<usize>> {
        let mut best = self.indices(tuple)?;
        let table = self.t.table();
        for a in &self.a_elements {
            let image: Vec<usize> = tuple
                .iter()
                .map(|p| table.index_of(&p.conjugate_by(a)).expect("A normalizes T"))
                .collect();
            if image < best {
                best = image;
            }
        }
        Ok(best)
    }
}

impl AutAction<'_> {
    /// Whether every column generates `T` and no two columns are conjugate
    /// coordinatewise under `A`.
    pub fn kl_check(&self, m: &TupleMatrix) -> Result<bool> {
        let order = self.t.order_big();
        let mut seen = HashSet::new();
        let mut ok = true;
        for j in 0..m.k() {
            let column = m.column(j);
            let canon = self.canonical(&column)?;
            ok &= GroupHandle::generates_order(&column, &order);
            ok &= seen.insert(canon);
        }
        Ok(ok)
    }
}

/// [`AutAction::kl_check`] for a one-off matrix.
pub fn kl_criterion_check(t: &GroupStructure, a: &GroupHandle, m: &TupleMatrix) -> Result<bool> {
    AutAction::new(t, a, t.caps().enumeration)?.kl_check(m)
}

/// The independent side: whether the rows generate all of `T^k`.
pub fn rows_generate_power(t: &GroupHandle, m: &TupleMatrix) -> bool {
    let target: BigUint = t.order().pow(m.k() as u32);
    let rows: Vec<Permutation> = (0..m.r()).map(|i| m.row_element(i)).collect();
    GroupHandle::generates_order(&rows, &target)
}

/// Draws uniform `r`-tuples from `T`, keeping those that generate `T` and lie
/// in a new `A`-orbit, until `k` columns are found or `max_draws` run out.
pub fn search_kl_matrix<R: Rng + ?Sized>(
    action: &AutAction,
    r: usize,
    k: usize,
    max_draws: usize,
    rng: &mut R,
) -> Result<Option<TupleMatrix>> {
    let t = action.t.group();
    let order = action.t.order_big();
    let mut seen = HashSet::new();
    let mut columns = Vec::with_capacity(k);
    for _ in 0..max_draws {
        if columns.len() == k {
            break;
        }
        let column: Vec<Permutation> = (0..r).map(|_| t.random_element(rng)).collect();
        if !GroupHandle::generates_order(&column, &order) {
            continue;
        }
        if seen.insert(action.canonical(&column)?) {
            columns.push(column);
        }
    }
    if columns.len() < k {
        return Ok(None);
    }
    TupleMatrix::from_columns(columns).map(Some)
}

/// A uniform `r × k` matrix over `T`.
pub fn random_matrix<R: Rng + ?Sized>(t: &GroupHandle, r: usize, k: usize, rng: &mut R) -> TupleMatrix {
    let rows = (0..r)
        .map(|_| (0..k).map(|_| t.random_element(rng)).collect())
        .collect();
    TupleMatrix::from_rows(rows).expect("nonempty dimensions")
}
