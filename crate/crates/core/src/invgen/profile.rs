use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::structure::{ExactProbability, FusionMap, GroupStructure};

/// Rows are (possibly fused) conjugacy classes, columns are conjugacy classes
/// of maximal subgroups. `B[c][m]` is set iff class `c` lies inside `~M_m`.
#[derive(Clone, Debug)]
pub struct IncidenceProfile {
    rows: Vec<FixedBitSet>,
    kills: KillSet,
    row_sizes: Vec<usize>,
    row_labels: Vec<String>,
    constituents: Vec<Vec<usize>>,
    row_of_class: Vec<usize>,
    column_labels: Vec<String>,
    column_v: Vec<ExactProbability>,
    column_orders: Vec<usize>,
    group_order: usize,
    fused: bool,
}

/// For each row, the columns it kills (entries equal to 0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KillSet {
    sets: Vec<FixedBitSet>,
    columns: usize,
}

impl KillSet {
    pub fn kill(&self, row: usize) -> &FixedBitSet {
        &self.sets[row]
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn columns(&self) -> usize {
        self.columns
    }

    pub fn union(&self) -> FixedBitSet {
        let mut all = FixedBitSet::with_capacity(self.columns);
        for s in &self.sets {
            all.union_with(s);
        }
        all
    }
}

impl IncidenceProfile {
    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn columns(&self) -> usize {
        self.column_labels.len()
    }

    /// `B[row][column]`.
    pub fn entry(&self, row: usize, column: usize) -> bool {
        self.rows[row].contains(column)
    }

    pub fn row(&self, row: usize) -> &FixedBitSet {
        &self.rows[row]
    }

    /// The matrix as 0/1 rows.
    pub fn matrix(&self) -> Vec<Vec<u8>> {
        (0..self.rows())
            .map(|r| (0..self.columns()).map(|m| self.entry(r, m) as u8).collect())
            .collect()
    }

    pub fn kill_set(&self) -> &KillSet {
        &self.kills
    }

    /// Number of group elements in each row.
    pub fn row_sizes(&self) -> &[usize] {
        &self.row_sizes
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    /// Classes of the group making up each row.
    pub fn constituents(&self, row: usize) -> &[usize] {
        &self.constituents[row]
    }

    /// Row containing a class of the group.
    pub fn row_of_class(&self, class: usize) -> usize {
        self.row_of_class[class]
    }

    pub fn column_labels(&self) -> &[String] {
        &self.column_labels
    }

    pub fn column_v(&self) -> &[ExactProbability] {
        &self.column_v
    }

    pub fn column_orders(&self) -> &[usize] {
        &self.column_orders
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn is_fused(&self) -> bool {
        self.fused
    }

    /// Row index for a label; fused rows answer to any constituent label
    /// and to the joined form `5a∪5b`.
    pub fn row_of_label(&self, label: &str) -> Result<usize> {
        if let Some(r) = self.row_labels.iter().position(|l| l == label) {
            return Ok(r);
        }
        self.row_labels
            .iter()
            .position(|l| l.split('∪').any(|part| part == label))
            .ok_or_else(|| Error::UnknownClassLabel(label.to_string()))
    }

    pub(crate) fn check_row(&self, row: usize) -> Result<()> {
        if row >= self.rows() {
            return Err(Error::ClassIndexOutOfRange {
                index: row,
                count: self.rows(),
            });
        }
        Ok(())
    }
}

/// Builds the incidence profile, optionally with rows fused under an
/// overgroup. A fused row is set in a column when any constituent is.
pub fn build_profile(g: &GroupStructure, fusion: Option<&FusionMap>) -> Result<IncidenceProfile> {
    let classes = g.classes();
    let maximal = g.maximal_subgroups();
    let k = classes.len();
    let (row_count, row_of_class) = match fusion {
        Some(f) => {
            if f.fused_class_of.len() != k {
                return Err(Error::InvalidArgument(format!(
                    "fusion map covers {} classes, group has {k}",
                    f.fused_class_of.len()
                )));
            }
            (f.fused_count, f.fused_class_of.clone())
        }
        None => (k, (0..k).collect()),
    };
    let columns = maximal.len();
    let mut rows = vec![FixedBitSet::with_capacity(columns); row_count];
    let mut constituents = vec![Vec::new(); row_count];
    let mut row_sizes = vec![0; row_count];
    for c in 0..k {
        let r = row_of_class[c];
        constituents[r].push(c);
        row_sizes[r] += classes.class(c).size;
        for (m, mc) in maximal.iter().enumerate() {
            if mc.mtilde_classes.contains(c) {
                rows[r].insert(m);
            }
        }
    }
    let row_labels = constituents
        .iter()
        .map(|cs| {
            cs.iter()
                .map(|&c| classes.class(c).label.as_str())
                .collect::<Vec<_>>()
                .join("∪")
        })
        .collect();
    let kills = KillSet {
        sets: rows
            .iter()
            .map(|r| {
                let mut k = FixedBitSet::with_capacity(columns);
                k.insert_range(..);
                k.difference_with(r);
                k
            })
            .collect(),
        columns,
    };
    Ok(IncidenceProfile {
        rows,
        kills,
        row_sizes,
        row_labels,
        constituents,
        row_of_class,
        column_labels: column_labels(&maximal.iter().map(|m| m.order()).collect::<Vec<_>>()),
        column_v: maximal.iter().map(|m| m.v.clone()).collect(),
        column_orders: maximal.iter().map(|m| m.order()).collect(),
        group_order: g.order(),
        fused: fusion.is_some(),
    })
}

/// `M<order><letter>`, lettered within each order.
fn column_labels(orders: &[usize]) -> Vec<String> {
    let mut seen: std::collections::HashMap<usize, u8> = Default::default();
    orders
        .iter()
        .map(|&o| {
            let k = seen.entry(o).or_insert(0);
            let label = format!("M{o}{}", (b'a' + *k) as char);
            *k += 1;
            label
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::test_util::*;
    use crate::GroupHandle;

    #[test]
    fn a5_matrix() {
        let s = structure(A5.0, A5.1);
        let p = build_profile(&s, None).unwrap();
        // Rows 1a 5a 5b 2a 3a; columns A4, D10, S3.
        assert_eq!(p.column_orders(), &[12, 10, 6]);
        assert_eq!(
            p.matrix(),
            vec![
                vec![1, 1, 1],
                vec![0, 1, 0],
                vec![0, 1, 0],
                vec![1, 1, 1],
                vec![1, 0, 1]
            ]
        );
        assert_eq!(p.kill_set().union().count_ones(..), 3);
        assert!(p.kill_set().kill(0).is_clear());
    }

    #[test]
    fn a5_fused_under_s5() {
        let s = structure(A5.0, A5.1);
        let s5 = GroupHandle::parse("(1 2 3 4 5) ; (1 2)", 5).unwrap();
        let f = s.fuse_classes_under(&s5).unwrap();
        let p = build_profile(&s, Some(&f)).unwrap();
        assert_eq!(p.rows(), 4);
        let r = p.row_of_label("5b").unwrap();
        assert_eq!(p.row_labels()[r], "5a∪5b");
        assert_eq!(p.matrix()[r], vec![0, 1, 0]);
        assert_eq!(p.row_sizes()[r], 24);
    }

    #[test]
    fn prime_cyclic() {
        let s = structure("(1 2 3 4 5)", 5);
        let p = build_profile(&s, None).unwrap();
        assert_eq!(p.columns(), 1);
        assert!(p.entry(0, 0));
        assert!((1..5).all(|r| !p.entry(r, 0)));
    }

    #[test]
    fn unknown_label() {
        let s = structure(A5.0, A5.1);
        let p = build_profile(&s, None).unwrap();
        assert_eq!(p.row_of_label("7a"), Err(Error::UnknownClassLabel("7a".into())));
    }
}
