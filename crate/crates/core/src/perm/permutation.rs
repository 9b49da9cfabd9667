use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A permutation of the points `1..=degree`.
///
/// Points are stored 0-based internally; everything user-facing (cycle
/// notation, [`Permutation::to_one_based`]) is 1-based. Products act on the
/// right: `p.compose(&q)` applies `p` first, then `q`, so conjugation is
/// `x^g = g⁻¹ x g`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::ZeroDegree);
        }
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n {
                return Err(Error::PointOutOfRange {
                    point: x + 1,
                    degree: n,
                });
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::RepeatedPoint(x + 1));
            }
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from 1-based images.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let mut v = Vec::with_capacity(images.len());
        for &x in images {
            if x == 0 || x > images.len() {
                return Err(Error::PointOutOfRange {
                    point: x,
                    degree: images.len(),
                });
            }
            v.push((x - 1) as u32);
        }
        Self::from_images(v)
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        Permutation { images }
    }

    /// Builds the `n`-cycle style permutation from 1-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for &p in cycle {
                if p == 0 || p > degree {
                    return Err(Error::PointOutOfRange { point: p, degree });
                }
                if std::mem::replace(&mut used[p - 1], true) {
                    return Err(Error::RepeatedPoint(p));
                }
            }
            for (i, &p) in cycle.iter().enumerate() {
                images[p - 1] = (cycle[(i + 1) % cycle.len()] - 1) as u32;
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    /// 0-based image array.
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// Smallest moved point (0-based).
    pub fn first_moved(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &x)| *i != x as usize)
            .map(|(i, _)| i)
    }

    pub fn check_degree(&self, other: &Permutation) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(())
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        self.check_degree(other)?;
        Ok(self.then(other))
    }

    /// Unchecked product: apply `self`, then `other`.
    #[inline]
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `g⁻¹ · self · g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        // x^g maps g(i) to g(self(i)).
        let mut out = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            out[g.images[i] as usize] = g.images[x as usize];
        }
        Permutation { images: out }
    }

    pub fn power(&self, e: i64) -> Permutation {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&sq);
            }
            sq = sq.then(&sq);
            e >>= 1;
        }
        acc
    }

    /// Disjoint cycles (0-based points), each starting at its least point,
    /// ordered by that point. Fixed points are omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p);
                p = self.apply(p);
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths including fixed points, sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        let moved: usize = lens.iter().sum();
        lens.extend(std::iter::repeat(1).take(self.degree() - moved));
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    /// Least `e ≥ 1` with `self^e = 1`.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    pub fn fixed_points(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &x)| *i == x as usize)
            .count()
    }

    /// Parses disjoint-cycle notation such as `"(1 2 3)(4 5)"` on `degree` points.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        let cycles = parse_cycle_list(text)?;
        Permutation::from_cycles(degree, &cycles)
    }

    pub fn format_cycles(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        let mut s = String::new();
        for c in cycles {
            s.push('(');
            for (i, p) in c.iter().enumerate() {
                if i > 0 {
                    s.push(' ');
                }
                s.push_str(&(p + 1).to_string());
            }
            s.push(')');
        }
        s
    }
}

/// Tokenizes cycle notation into 1-based cycles without range checks.
fn parse_cycle_list(text: &str) -> Result<Vec<Vec<usize>>> {
    let bytes = text.as_bytes();
    let mut i = 0;
    let mut cycles = Vec::new();
    let malformed = |offset: usize, reason: &str| Error::Malformed {
        offset,
        reason: reason.to_string(),
    };
    let skip_ws = |i: &mut usize| {
        while *i < bytes.len() && bytes[*i].is_ascii_whitespace() {
            *i += 1;
        }
    };
    skip_ws(&mut i);
    if i == bytes.len() {
        return Err(malformed(i, "empty input"));
    }
    while i < bytes.len() {
        if bytes[i] != b'(' {
            return Err(malformed(i, "expected '('"));
        }
        i += 1;
        let mut cycle = Vec::new();
        loop {
            skip_ws(&mut i);
            match bytes.get(i) {
                None => return Err(malformed(i, "unterminated cycle")),
                Some(b')') => {
                    i += 1;
                    break;
                }
                Some(c) if c.is_ascii_digit() => {
                    let start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if i < bytes.len() && !bytes[i].is_ascii_whitespace() && bytes[i] != b')' {
                        return Err(malformed(i, "points must be separated by spaces"));
                    }
                    let p: usize = text[start..i]
                        .parse()
                        .map_err(|_| malformed(start, "point does not fit in an integer"))?;
                    cycle.push(p);
                }
                Some(_) => return Err(malformed(i, "unexpected character")),
            }
        }
        cycles.push(cycle);
        skip_ws(&mut i);
    }
    Ok(cycles)
}

// Hashing a `Vec<u32>` field matches hashing the slice, so lookups by image
// slice agree with lookups by permutation.
impl std::borrow::Borrow<[u32]> for Permutation {
    fn borrow(&self) -> &[u32] {
        &self.images
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_cycles())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.format_cycles(), self.degree())
    }
}

pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation> {
    p.compose(q)
}

pub fn inverse(p: &Permutation) -> Permutation {
    p.inverse()
}

pub fn power(p: &Permutation, e: i64) -> Permutation {
    p.power(e)
}

pub fn element_order(p: &Permutation) -> u64 {
    p.order()
}
