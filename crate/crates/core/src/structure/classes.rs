use fixedbitset::FixedBitSet;

use crate::perm::ElementTable;

/// One conjugacy class of elements.
#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    /// Element index of the lexicographically least member.
    pub representative: usize,
    pub size: usize,
    pub element_order: u64,
    pub members: FixedBitSet,
    /// ATLAS-style label: element order followed by a letter, e.g. `5a`.
    pub label: String,
}

/// Conjugacy classes in canonical order: by size, then element order, then
/// least representative. Class 0 is the identity class.
#[derive(Clone, Debug)]
pub struct ConjugacyTable {
    classes: Vec<ConjugacyClass>,
    class_of: Vec<u32>,
    /// `transporter[e]` conjugates its class representative to `e`.
    transporter: Vec<u32>,
}

impl ConjugacyTable {
    pub fn compute(table: &ElementTable, gens: &[usize]) -> Self {
        let n = table.len();
        const UNSEEN: u32 = u32::MAX;
        let mut raw_class = vec![UNSEEN; n];
        let mut transporter = vec![0u32; n];
        let mut raw: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if raw_class[start] != UNSEEN {
                continue;
            }
            let id = raw.len() as u32;
            raw_class[start] = id;
            transporter[start] = 0;
            let mut orbit = vec![start];
            let mut i = 0;
            while i < orbit.len() {
                let x = orbit[i];
                for &s in gens {
                    let y = table.conj(x, s);
                    if raw_class[y] == UNSEEN {
                        raw_class[y] = id;
                        transporter[y] = table.mul(transporter[x] as usize, s) as u32;
                        orbit.push(y);
                    }
                }
                i += 1;
            }
            raw.push(orbit);
        }

        // Elements are scanned in increasing index order, so each orbit's first
        // element is its least member and the transporters are rooted there.
        let mut order: Vec<usize> = (0..raw.len()).collect();
        order.sort_by_key(|&c| (raw[c].len(), table.element_order(raw[c][0]), raw[c][0]));
        let mut remap = vec![0u32; raw.len()];
        let mut classes = Vec::with_capacity(raw.len());
        let mut letters: std::collections::HashMap<u64, usize> = Default::default();
        for (new, &old) in order.iter().enumerate() {
            remap[old] = new as u32;
            let rep = raw[old][0];
            let ord = table.element_order(rep);
            let k = letters.entry(ord).or_insert(0);
            let label = format!("{ord}{}", letter_suffix(*k));
            *k += 1;
            let mut members = FixedBitSet::with_capacity(n);
            for &e in &raw[old] {
                members.insert(e);
            }
            classes.push(ConjugacyClass {
                representative: rep,
                size: raw[old].len(),
                element_order: ord,
                members,
                label,
            });
        }
        let class_of = raw_class.iter().map(|&c| remap[c as usize]).collect();
        ConjugacyTable {
            classes,
            class_of,
            transporter,
        }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class(&self, c: usize) -> &ConjugacyClass {
        &self.classes[c]
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element] as usize
    }

    pub fn transporter(&self, element: usize) -> usize {
        self.transporter[element] as usize
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.size).collect()
    }

    pub fn labels(&self) -> Vec<String> {
        self.classes.iter().map(|c| c.label.clone()).collect()
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.label == label)
    }

    /// Set of classes meeting the given element set.
    pub fn classes_meeting(&self, elements: impl IntoIterator<Item = usize>) -> FixedBitSet {
        let mut set = FixedBitSet::with_capacity(self.len());
        for e in elements {
            set.insert(self.class_of(e));
        }
        set
    }

    /// Number of elements in each class that lie in `elements`.
    pub fn histogram(&self, elements: impl IntoIterator<Item = usize>) -> Vec<u32> {
        let mut h = vec![0u32; self.len()];
        for e in elements {
            h[self.class_of(e)] += 1;
        }
        h
    }

    /// Total size of a set of classes.
    pub fn weight(&self, set: &FixedBitSet) -> usize {
        set.ones().map(|c| self.classes[c].size).sum()
    }
}

fn letter_suffix(mut k: usize) -> String {
    let mut s = Vec::new();
    loop {
        s.push(b'a' + (k % 26) as u8);
        if k < 26 {
            break;
        }
        k = k / 26 - 1;
    }
    s.reverse();
    String::from_utf8(s).unwrap()
}
