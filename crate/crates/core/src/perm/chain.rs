use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rand::Rng;

use super::permutation::Permutation;
use crate::error::{Error, Result};

/// One level of a stabilizer chain: the orbit of a base point under the
/// pointwise stabilizer of the earlier base points, with coset representatives.
#[derive(Clone, Debug)]
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    /// `transversal[β]` maps the base point to `β`.
    transversal: Vec<Option<Permutation>>,
    transversal_inv: Vec<Option<Permutation>>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        let mut transversal_inv = vec![None; degree];
        transversal[base] = Some(Permutation::identity(degree));
        transversal_inv[base] = Some(Permutation::identity(degree));
        Level {
            base,
            gens: Vec::new(),
            orbit: vec![base],
            transversal,
            transversal_inv,
        }
    }

    fn add_point(&mut self, point: usize, rep: Permutation) {
        self.transversal_inv[point] = Some(rep.inverse());
        self.transversal[point] = Some(rep);
        self.orbit.push(point);
    }
}

/// Deterministic Schreier–Sims stabilizer chain.
///
/// Base points are chosen as the smallest point moved by the first element
/// that needs a new level, so the chain depends only on the generator list.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize) -> Self {
        StabChain {
            degree,
            levels: Vec::new(),
        }
    }

    pub fn from_generators(degree: usize, gens: &[Permutation]) -> Self {
        let mut chain = StabChain::new(degree);
        for g in gens {
            chain.add_generator(g);
        }
        chain
    }

    /// Adds `g` to the group described by the chain; returns `true` if the
    /// group grew.
    pub fn add_generator(&mut self, g: &Permutation) -> bool {
        let (residue, _) = self.sift(g.clone(), 0);
        if residue.is_identity() {
            return false;
        }
        self.extend(0, residue);
        true
    }

    /// Sifts `g` through levels `from..`; returns the residue and the level
    /// at which sifting stopped (`levels.len()` if it got through).
    fn sift(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for (j, level) in self.levels.iter().enumerate().skip(from) {
            let beta = g.apply(level.base);
            match &level.transversal_inv[beta] {
                Some(u_inv) => g = g.then(u_inv),
                None => return (g, j),
            }
        }
        let n = self.levels.len();
        (g, n)
    }

    /// Adds `g` (which fixes the first `i` base points and is not in the
    /// current level-`i` stabilizer) as a strong generator at level `i`.
    fn extend(&mut self, i: usize, g: Permutation) {
        if i == self.levels.len() {
            let base = g.first_moved().expect("non-identity residue");
            self.levels.push(Level::new(base, self.degree));
        }
        let level = &mut self.levels[i];
        level.gens.push(g.clone());
        let old_len = level.orbit.len();

        // Grow the orbit: images of old points under g, then close under all gens.
        for idx in 0..old_len {
            let beta = level.orbit[idx];
            let gamma = g.apply(beta);
            if level.transversal[gamma].is_none() {
                let rep = level.transversal[beta].as_ref().unwrap().then(&g);
                level.add_point(gamma, rep);
            }
        }
        let mut idx = old_len;
        while idx < level.orbit.len() {
            let beta = level.orbit[idx];
            for s in 0..level.gens.len() {
                let gamma = level.gens[s].apply(beta);
                if level.transversal[gamma].is_none() {
                    let rep = level.transversal[beta].as_ref().unwrap().then(&level.gens[s]);
                    level.add_point(gamma, rep);
                }
            }
            idx += 1;
        }

        // Schreier generators involving the new generator or new orbit points.
        let new_gen = level.gens.len() - 1;
        let mut pairs: Vec<(usize, usize)> = (0..old_len)
            .map(|o| (level.orbit[o], new_gen))
            .collect();
        for o in old_len..level.orbit.len() {
            for s in 0..level.gens.len() {
                pairs.push((level.orbit[o], s));
            }
        }
        for (beta, s) in pairs {
            let schreier = {
                let level = &self.levels[i];
                let gen = &level.gens[s];
                let target = gen.apply(beta);
                level.transversal[beta]
                    .as_ref()
                    .unwrap()
                    .then(gen)
                    .then(level.transversal_inv[target].as_ref().unwrap())
            };
            if schreier.is_identity() {
                continue;
            }
            let (residue, _) = self.sift(schreier, i + 1);
            if !residue.is_identity() {
                self.extend(i + 1, residue);
            }
        }
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && self.sift(p.clone(), 0).0.is_identity()
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn transversal_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Exactly uniform element: one independent uniform transversal pick per level.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Permutation {
        let mut g = Permutation::identity(self.degree);
        for level in self.levels.iter().rev() {
            let beta = level.orbit[rng.gen_range(0..level.orbit.len())];
            g = g.then(level.transversal[beta].as_ref().unwrap());
        }
        g
    }

    /// All elements, in transversal-product order.
    fn for_each_element(&self, mut f: impl FnMut(Permutation)) {
        fn rec(levels: &[Level], acc: Permutation, f: &mut dyn FnMut(Permutation)) {
            match levels.split_last() {
                None => f(acc),
                Some((level, rest)) => {
                    for &beta in &level.orbit {
                        let next = acc.then(level.transversal[beta].as_ref().unwrap());
                        rec(rest, next, f);
                    }
                }
            }
        }
        rec(&self.levels, Permutation::identity(self.degree), &mut f);
    }
}

/// A permutation group given by generators, with an exact stabilizer chain.
///
/// Immutable after construction; share freely across threads.
#[derive(Clone, Debug)]
pub struct GroupHandle {
    degree: usize,
    generators: Vec<Permutation>,
    chain: StabChain,
    order: BigUint,
}

impl GroupHandle {
    pub fn from_generators(gens: &[Permutation]) -> Result<Self> {
        let first = gens.first().ok_or(Error::NoGenerators)?;
        let degree = first.degree();
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        for g in gens {
            first.check_degree(g)?;
        }
        let chain = StabChain::from_generators(degree, gens);
        let order = chain.order();
        Ok(GroupHandle {
            degree,
            generators: gens.to_vec(),
            chain,
            order,
        })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_generators(&[Permutation::identity(degree.max(1))]).unwrap()
    }

    /// Parses `;`-separated cycle-notation generators.
    pub fn parse(gens: &str, degree: usize) -> Result<Self> {
        let perms = gens
            .split(';')
            .map(|g| Permutation::parse_cycles(g, degree))
            .collect::<Result<Vec<_>>>()?;
        Self::from_generators(&perms)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Generators with identities removed.
    pub fn nontrivial_generators(&self) -> Vec<Permutation> {
        self.generators
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect()
    }

    pub fn chain(&self) -> &StabChain {
        &self.chain
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    /// Order as `u64` when it fits.
    pub fn order_u64(&self) -> Option<u64> {
        self.order.to_u64()
    }

    pub fn is_trivial(&self) -> bool {
        self.order.is_one()
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: p.degree(),
            });
        }
        Ok(self.chain.contains(p))
    }

    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Permutation {
        self.chain.random_element(rng)
    }

    /// Every element, in chain order. Caller is responsible for size.
    pub(crate) fn elements_unsorted(&self) -> Vec<Permutation> {
        let mut out = Vec::new();
        self.chain.for_each_element(|g| out.push(g));
        out
    }

    /// Whether `gens` generate a subgroup of order `target`, assuming they
    /// lie in a group of that order.
    pub fn generates_order(gens: &[Permutation], target: &BigUint) -> bool {
        let Some(first) = gens.first() else {
            return target.is_one();
        };
        let mut chain = StabChain::new(first.degree());
        for g in gens {
            chain.add_generator(g);
            if &chain.order() == target {
                return true;
            }
        }
        &chain.order() == target
    }

    /// The subgroup generated by `gens` (all of which must lie in the group).
    pub fn subgroup(&self, gens: &[Permutation]) -> Result<GroupHandle> {
        for g in gens {
            if !self.contains(g)? {
                return Err(Error::NotInGroup);
            }
        }
        if gens.is_empty() {
            return Ok(GroupHandle::trivial(self.degree));
        }
        GroupHandle::from_generators(gens)
    }

    /// `T^k` acting on `k` disjoint copies of the points.
    pub fn power_group(&self, k: usize) -> Result<GroupHandle> {
        if k == 0 {
            return Err(Error::InvalidArgument("power_group needs k >= 1".into()));
        }
        let gens = self.nontrivial_generators();
        let mut out = Vec::new();
        for copy in 0..k {
            for g in &gens {
                out.push(embed_in_copy(g, copy, k));
            }
        }
        if out.is_empty() {
            return Ok(GroupHandle::trivial(self.degree * k));
        }
        GroupHandle::from_generators(&out)
    }
}

/// Places `g` on copy `copy` of `k` disjoint blocks.
pub fn embed_in_copy(g: &Permutation, copy: usize, k: usize) -> Permutation {
    let n = g.degree();
    let mut images: Vec<u32> = (0..(n * k) as u32).collect();
    for p in 0..n {
        images[copy * n + p] = (copy * n + g.apply(p)) as u32;
    }
    Permutation::from_images_unchecked(images)
}

/// The element of `T^k` with coordinates `coords`.
pub fn tuple_element(coords: &[Permutation]) -> Permutation {
    let n = coords[0].degree();
    let mut images = Vec::with_capacity(n * coords.len());
    for (c, g) in coords.iter().enumerate() {
        images.extend(g.images().iter().map(|&x| (c * n) as u32 + x));
    }
    Permutation::from_images_unchecked(images)
}

/// Coordinate `copy` of an element of `T^k` (blocks of `n` points).
pub fn project_coordinate(g: &Permutation, n: usize, copy: usize) -> Permutation {
    let images = (0..n)
        .map(|p| (g.apply(copy * n + p) - copy * n) as u32)
        .collect();
    Permutation::from_images_unchecked(images)
}

pub fn group_from_generators(gens: &[Permutation]) -> Result<GroupHandle> {
    GroupHandle::from_generators(gens)
}

pub fn contains(group: &GroupHandle, p: &Permutation) -> Result<bool> {
    group.contains(p)
}

pub fn random_element<R: Rng + ?Sized>(group: &GroupHandle, rng: &mut R) -> Permutation {
    group.random_element(rng)
}

pub fn power_group(group: &GroupHandle, k: usize) -> Result<GroupHandle> {
    group.power_group(k)
}
