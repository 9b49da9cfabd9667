//! Brute-force reference computations for small groups (order at most 128).
//! Nothing here touches the library's tables or stabilizer chains: elements
//! are raw image vectors, subsets are `u128` masks over a BFS enumeration.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::OnceLock;

use invgen::families::{Catalog, CatalogEntry};
use invgen::{Caps, GroupStructure, Permutation};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Images = Vec<u32>;
pub type Mask = u128;

/// `a` then `b`.
pub fn mul(a: &[u32], b: &[u32]) -> Images {
    a.iter().map(|&x| b[x as usize]).collect()
}

pub fn inv(a: &[u32]) -> Images {
    let mut out = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        out[x as usize] = i as u32;
    }
    out
}

pub struct Oracle {
    pub elements: Vec<Images>,
    pub index: HashMap<Images, usize>,
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
}

pub fn bits(m: Mask) -> impl Iterator<Item = usize> {
    (0..128).filter(move |&i| m >> i & 1 == 1)
}

impl Oracle {
    pub fn new(gens: &[Images]) -> Self {
        let n = gens[0].len();
        let id: Images = (0..n as u32).collect();
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0)]);
        let mut queue = VecDeque::from([0]);
        while let Some(i) = queue.pop_front() {
            for g in gens {
                let p = mul(&elements[i], g);
                if !index.contains_key(&p) {
                    index.insert(p.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(p);
                }
            }
        }
        assert!(elements.len() <= 128, "oracle groups have order at most 128");
        let table = elements
            .iter()
            .map(|a| elements.iter().map(|b| index[&mul(a, b)]).collect())
            .collect();
        let inverse = elements.iter().map(|a| index[&inv(a)]).collect();
        Oracle {
            elements,
            index,
            table,
            inverse,
        }
    }

    pub fn from_structure(g: &GroupStructure) -> Self {
        let gens: Vec<Images> = g.group().generators().iter().map(|p| p.images().to_vec()).collect();
        Oracle::new(&gens)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn full(&self) -> Mask {
        if self.order() == 128 {
            Mask::MAX
        } else {
            (1 << self.order()) - 1
        }
    }

    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.table[self.table[self.inverse[g]][x]][g]
    }

    pub fn index_of(&self, p: &Permutation) -> usize {
        self.index[p.images()]
    }

    /// Subgroup generated by the elements of `m`.
    pub fn generate(&self, m: Mask) -> Mask {
        let gens: Vec<usize> = bits(m).collect();
        let mut out: Mask = 1;
        let mut queue = VecDeque::from([0]);
        while let Some(i) = queue.pop_front() {
            for &g in &gens {
                let p = self.table[i][g];
                if out >> p & 1 == 0 {
                    out |= 1 << p;
                    queue.push_back(p);
                }
            }
        }
        out
    }

    pub fn generates_group(&self, elems: &[usize]) -> bool {
        let m = elems.iter().fold(0, |m, &e| m | 1 << e);
        self.generate(m) == self.full()
    }

    pub fn conjugate_set(&self, m: Mask, g: usize) -> Mask {
        bits(m).fold(0, |acc, x| acc | 1 << self.conj(x, g))
    }

    pub fn conjugacy_classes(&self) -> Vec<Mask> {
        let mut seen: Mask = 0;
        let mut out = Vec::new();
        for x in 0..self.order() {
            if seen >> x & 1 == 1 {
                continue;
            }
            let class = (0..self.order()).fold(0, |acc, g| acc | 1 << self.conj(x, g));
            seen |= class;
            out.push(class);
        }
        out
    }

    /// All subgroups: cyclic subgroups closed under pairwise joins.
    pub fn all_subgroups(&self) -> BTreeSet<Mask> {
        let mut subs: BTreeSet<Mask> = (0..self.order()).map(|x| self.generate(1 << x)).collect();
        loop {
            let list: Vec<Mask> = subs.iter().copied().collect();
            let mut added = false;
            for (i, &a) in list.iter().enumerate() {
                for &b in &list[i + 1..] {
                    if a & b == a || a & b == b {
                        continue;
                    }
                    let j = self.generate(a | b);
                    added |= subs.insert(j);
                }
            }
            if !added {
                return subs;
            }
        }
    }

    pub fn conjugacy_class_of_subgroup(&self, h: Mask) -> BTreeSet<Mask> {
        (0..self.order()).map(|g| self.conjugate_set(h, g)).collect()
    }

    /// Maximal subgroups, grouped into conjugacy classes, each class listed as
    /// its set of members.
    pub fn maximal_classes(&self) -> Vec<BTreeSet<Mask>> {
        let subs = self.all_subgroups();
        let full = self.full();
        let maximal: Vec<Mask> = subs
            .iter()
            .copied()
            .filter(|&h| h != full)
            .filter(|&h| !subs.iter().any(|&k| k != h && k != full && k & h == h))
            .collect();
        let mut classes: Vec<BTreeSet<Mask>> = Vec::new();
        for h in maximal {
            if !classes.iter().any(|c| c.contains(&h)) {
                classes.push(self.conjugacy_class_of_subgroup(h));
            }
        }
        classes
    }

    /// `~M`: union of the conjugates.
    pub fn tilde(class: &BTreeSet<Mask>) -> Mask {
        class.iter().fold(0, |a, &m| a | m)
    }

    /// Definition (a) for a list of elements: every choice of conjugates
    /// generates. The first element is fixed, since conjugating all of them
    /// by one element does not change whether they generate.
    pub fn invariably_generate(&self, elems: &[usize]) -> bool {
        if elems.is_empty() {
            return self.order() == 1;
        }
        let choices: Vec<Vec<usize>> = elems
            .iter()
            .enumerate()
            .map(|(i, &x)| {
                if i == 0 {
                    vec![x]
                } else {
                    let c: BTreeSet<usize> = (0..self.order()).map(|g| self.conj(x, g)).collect();
                    c.into_iter().collect()
                }
            })
            .collect();
        let mut pick = vec![0; elems.len()];
        loop {
            let chosen: Vec<usize> = pick.iter().zip(&choices).map(|(&i, c)| c[i]).collect();
            if !self.generates_group(&chosen) {
                return false;
            }
            let mut j = elems.len();
            loop {
                if j == 0 {
                    return true;
                }
                j -= 1;
                pick[j] += 1;
                if pick[j] < choices[j].len() {
                    break;
                }
                pick[j] = 0;
            }
        }
    }

    /// Alive-set chain over the maximal classes: each draw keeps the classes
    /// whose `~M` contains it. Returns `(P_I(k) for k in 0..=kmax, C(G))`.
    pub fn chebotarev_chain(&self, kmax: usize) -> (Vec<BigRational>, BigRational) {
        let tildes: Vec<Mask> = self.maximal_classes().iter().map(Oracle::tilde).collect();
        let m = tildes.len();
        assert!(m <= 20);
        let n = BigInt::from(self.order());
        // keep[x]: classes whose ~M contains x, bucketed by mask.
        let mut weights: HashMap<u32, usize> = HashMap::new();
        for x in 0..self.order() {
            let keep = (0..m).filter(|&i| tildes[i] >> x & 1 == 1).fold(0u32, |a, i| a | 1 << i);
            *weights.entry(keep).or_default() += 1;
        }
        let start: u32 = if m == 0 { 0 } else { (1u32 << m) - 1 };
        let mut dist: HashMap<u32, BigRational> = HashMap::from([(start, BigRational::one())]);
        let mut p = Vec::new();
        for _ in 0..=kmax {
            p.push(dist.get(&0).cloned().unwrap_or_else(BigRational::zero));
            let mut next: HashMap<u32, BigRational> = HashMap::new();
            for (s, q) in &dist {
                for (&keep, &w) in &weights {
                    let t = s & keep;
                    *next.entry(t).or_insert_with(BigRational::zero) +=
                        q * BigRational::new(BigInt::from(w), n.clone());
                }
            }
            dist = next;
        }
        // E(S) = (1 + Σ_{keep ⊉ S} p E(S ∩ keep)) / (1 − p_stay), E(∅) = 0,
        // evaluated over subsets in increasing order.
        let mut e: HashMap<u32, BigRational> = HashMap::from([(0, BigRational::zero())]);
        let mut states: Vec<u32> = (1..=start).filter(|s| s & start == *s).collect();
        states.sort_by_key(|s| s.count_ones());
        for s in states {
            let mut stay = BigRational::zero();
            let mut acc = BigRational::one();
            for (&keep, &w) in &weights {
                let pr = BigRational::new(BigInt::from(w), n.clone());
                let t = s & keep;
                if t == s {
                    stay += pr;
                } else {
                    acc += pr * &e[&t];
                }
            }
            e.insert(s, acc / (BigRational::one() - stay));
        }
        (p, e[&start].clone())
    }
}

/// Catalog groups with their structures, built once per test binary.
pub fn catalog_structures() -> &'static [(CatalogEntry, GroupStructure)] {
    static CACHE: OnceLock<Vec<(CatalogEntry, GroupStructure)>> = OnceLock::new();
    CACHE.get_or_init(|| {
        Catalog::builtin()
            .entries()
            .iter()
            .map(|e| {
                let g = GroupStructure::new(&e.instantiate().expect("catalog entry"), &Caps::default())
                    .expect("within caps");
                (e.clone(), g)
            })
            .collect()
    })
}

pub fn structure_of(name: &str) -> &'static GroupStructure {
    &catalog_structures()
        .iter()
        .find(|(e, _)| e.name == name)
        .unwrap_or_else(|| panic!("{name} in catalog"))
        .1
}

/// Library subgroup (element indices into its table) as an oracle mask.
pub fn to_mask(g: &GroupStructure, o: &Oracle, elements: impl IntoIterator<Item = usize>) -> Mask {
    elements
        .into_iter()
        .fold(0, |m, e| m | 1 << o.index_of(g.table().element(e)))
}

pub fn q(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}
