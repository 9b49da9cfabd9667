use super::{GroupStructure, SubgroupRecord};

/// One factor `K/N` of a chief series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiefFactor {
    pub order: usize,
    pub abelian: bool,
    pub description: String,
}

/// A chief series `1 = N_0 < N_1 < … < N_l = G`, each `N_{i+1}/N_i` minimal
/// normal in `G/N_i`.
#[derive(Clone, Debug)]
pub struct ChiefSeries {
    pub factors: Vec<ChiefFactor>,
    /// Number of abelian factors.
    pub a: usize,
    /// Number of non-abelian factors.
    pub b: usize,
    /// The normal subgroups `N_1, …, N_l`.
    pub subgroups: Vec<SubgroupRecord>,
}

impl ChiefSeries {
    pub fn length(&self) -> usize {
        self.factors.len()
    }

    /// Multiset of `(order, abelian)` pairs, sorted.
    pub fn signature(&self) -> Vec<(usize, bool)> {
        let mut s: Vec<_> = self.factors.iter().map(|f| (f.order, f.abelian)).collect();
        s.sort_unstable();
        s
    }
}

fn prime_power(n: usize) -> Option<(usize, u32)> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|p| n % p == 0)?;
    let mut m = n;
    let mut e = 0;
    while m % p == 0 {
        m /= p;
        e += 1;
    }
    (m == 1).then_some((p, e))
}

impl GroupStructure {
    /// Whether `k/n` is abelian, for `n ◁ k`.
    fn quotient_is_abelian(&self, k: &SubgroupRecord, n: &SubgroupRecord) -> bool {
        let t = &self.table;
        k.generators.iter().all(|&x| {
            k.generators.iter().all(|&y| {
                let comm = t.mul(t.mul(t.inv(x), t.inv(y)), t.mul(x, y));
                n.contains(comm)
            })
        })
    }

    /// Chief series built inside `G`: at each step the minimal normal
    /// subgroups over the current `N` are found among the normal closures of
    /// `N` with single conjugacy classes.
    pub fn chief_series(&self) -> ChiefSeries {
        let order = self.order();
        let mut n = self.trivial_subgroup();
        let mut factors = Vec::new();
        let mut subgroups = Vec::new();
        while n.order() < order {
            let mut candidates: Vec<SubgroupRecord> = Vec::new();
            for c in 1..self.classes.len() {
                let rep = self.classes.class(c).representative;
                if n.contains(rep) {
                    continue;
                }
                let k = self.normal_closure(&n, &[rep]);
                if !candidates.iter().any(|x| x.members == k.members) {
                    candidates.push(k);
                }
            }
            let minimal = candidates
                .iter()
                .filter(|k| {
                    !candidates
                        .iter()
                        .any(|o| o.order() < k.order() && o.is_subset(k))
                })
                .min_by_key(|k| k.order())
                .expect("a proper normal subgroup has a minimal normal overgroup")
                .clone();
            let size = minimal.order() / n.order();
            let abelian = self.quotient_is_abelian(&minimal, &n);
            let description = if abelian {
                match prime_power(size) {
                    Some((p, 1)) => format!("C{p}"),
                    Some((p, e)) => format!("C{p}^{e}"),
                    None => format!("abelian of order {size}"),
                }
            } else {
                format!("non-abelian of order {size}")
            };
            debug_assert!(!abelian || prime_power(size).is_some());
            factors.push(ChiefFactor {
                order: size,
                abelian,
                description,
            });
            subgroups.push(minimal.clone());
            n = minimal;
        }
        let a = factors.iter().filter(|f| f.abelian).count();
        let b = factors.len() - a;
        ChiefSeries {
            factors,
            a,
            b,
            subgroups,
        }
    }

    /// Fitting-style check: nilpotent iff every maximal subgroup is normal.
    pub fn is_nilpotent(&self) -> bool {
        self.maximal_subgroups().iter().all(|m| m.is_normal())
    }

    /// `log2 |G|`.
    pub fn log2_order(&self) -> f64 {
        (self.order() as f64).log2()
    }

    /// Whether the group is solvable (every chief factor abelian).
    pub fn is_solvable(&self) -> bool {
        self.chief_series().b == 0
    }
}
