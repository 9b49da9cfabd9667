//! Acceptance criteria, one pass/fail line each. Runs without the libtest
//! harness so the summary is always printed.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::*;
use invgen::chebotarev::{
    chebotarev_exact, chebotarev_mc, chebotarev_partial_sum, p_i_exact, p_i_sandwich_check,
    theorem2_ratio_report, DistinctTildeFamily,
};
use invgen::families::{
    almost_simple_lower_example, alternating_pair, best_invgen_pair, pigeonhole_bound,
    random_matrix, rows_generate_power, search_kl_matrix, theorem3c_check, AutAction, Catalog,
};
use invgen::invgen::{
    build_profile, chief_bound_check, d_i_exact, elements_invariably_generate,
    find_noninvariable_generating_set, invariably_generates, invgen_sample_refuter,
    random_generating_set,
};
use invgen::{Caps, GroupHandle, GroupStructure, Permutation};
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)*) => {
        if !$cond {
            return Err(format!($($fmt)*));
        }
    };
}

const ORACLE_MAX_ORDER: usize = 120;
const SEED: u64 = 20_240_601;

fn small_catalog() -> Vec<(String, GroupStructure)> {
    Catalog::builtin()
        .entries()
        .iter()
        .filter(|e| e.expected_order <= BigUint::from(ORACLE_MAX_ORDER))
        .map(|e| {
            let g = GroupStructure::new(&e.instantiate().unwrap(), &Caps::default()).unwrap();
            (e.name.clone(), g)
        })
        .collect()
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    if t < limit {
        Ok(())
    } else {
        Err(format!("took {t:?}, limit {limit:?}"))
    }
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let groups = small_catalog();
    for (name, g) in &groups {
        let o = Oracle::from_structure(g);
        ensure!(o.order() == g.order(), "{name}: order {} vs oracle {}", g.order(), o.order());

        let lib_classes: BTreeSet<Mask> = g
            .classes()
            .classes()
            .iter()
            .map(|c| to_mask(g, &o, c.members.ones()))
            .collect();
        let oracle_classes: BTreeSet<Mask> = o.conjugacy_classes().into_iter().collect();
        ensure!(g.classes().len() == oracle_classes.len(), "{name}: class count");
        ensure!(lib_classes == oracle_classes, "{name}: class partition differs");

        let lattice: BTreeSet<Mask> = g
            .subgroup_lattice()
            .map_err(|e| e.to_string())?
            .iter()
            .map(|h| to_mask(g, &o, h.elements.iter().copied()))
            .collect();
        let oracle_subs = o.all_subgroups();
        ensure!(lattice == oracle_subs, "{name}: lattice {} vs oracle {}", lattice.len(), oracle_subs.len());

        let mut oracle_sub_classes: Vec<BTreeSet<Mask>> = Vec::new();
        for &h in &oracle_subs {
            if !oracle_sub_classes.iter().any(|c| c.contains(&h)) {
                oracle_sub_classes.push(o.conjugacy_class_of_subgroup(h));
            }
        }
        let oracle_max = o.maximal_classes();
        let lib_sub_classes = g.subgroup_classes();
        ensure!(
            lib_sub_classes.len() == oracle_sub_classes.len(),
            "{name}: {} subgroup classes vs oracle {}",
            lib_sub_classes.len(),
            oracle_sub_classes.len()
        );
        let mut matched = BTreeSet::new();
        for sc in lib_sub_classes {
            let h = to_mask(g, &o, sc.representative.elements.iter().copied());
            let i = oracle_sub_classes
                .iter()
                .position(|c| c.contains(&h))
                .ok_or(format!("{name}: subgroup not in oracle"))?;
            ensure!(matched.insert(i), "{name}: two subgroup classes are conjugate");
            ensure!(
                sc.class_size(g.order()) == oracle_sub_classes[i].len(),
                "{name}: subgroup class size"
            );
            ensure!(
                sc.is_maximal == oracle_max.contains(&oracle_sub_classes[i]),
                "{name}: maximality flag"
            );
        }

        let maximal = g.maximal_subgroups();
        ensure!(maximal.len() == oracle_max.len(), "{name}: maximal class count");
        let mut seen = BTreeSet::new();
        for m in maximal {
            let h = to_mask(g, &o, m.representative.elements.iter().copied());
            let i = oracle_max
                .iter()
                .position(|c| c.contains(&h))
                .ok_or(format!("{name}: maximal class not maximal in oracle"))?;
            ensure!(seen.insert(i), "{name}: duplicate maximal class");
            let class = &oracle_max[i];
            ensure!(m.class_size == class.len(), "{name}: maximal class size");
            let tilde = Oracle::tilde(class).count_ones() as i64;
            ensure!(m.v == q(tilde, g.order() as i64), "{name}: v(M)");
            let core = class.iter().fold(o.full(), |a, &c| a & c).count_ones() as usize;
            ensure!(m.core_order == core, "{name}: core order");
        }
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("{} groups of order <= {ORACLE_MAX_ORDER}", groups.len()))
}

fn criterion_2() -> Check {
    let mut checked = 0;
    for (name, g) in small_catalog() {
        let o = Oracle::from_structure(&g);
        let profile = build_profile(&g, None).map_err(|e| e.to_string())?;
        let k = g.classes().len();
        let rep = |c: usize| o.index_of(g.table().element(g.classes().class(c).representative));
        for a in 0..k {
            let lib = invariably_generates(&profile, &[profile.row_of_class(a)]).unwrap();
            ensure!(lib == o.invariably_generate(&[rep(a)]), "{name}: class {a}");
            for b in a..k {
                let rows = [profile.row_of_class(a), profile.row_of_class(b)];
                let lib = invariably_generates(&profile, &rows).unwrap();
                ensure!(
                    lib == o.invariably_generate(&[rep(a), rep(b)]),
                    "{name}: classes {a}, {b}"
                );
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} class pairs"))
}

/// Least `k` with a class multiset of size `k` passing the oracle test.
fn oracle_d_i(o: &Oracle) -> usize {
    let reps: Vec<usize> = o
        .conjugacy_classes()
        .iter()
        .map(|&c| bits(c).next().unwrap())
        .collect();
    fn search(o: &Oracle, reps: &[usize], from: usize, left: usize, chosen: &mut Vec<usize>) -> bool {
        if left == 0 {
            return o.invariably_generate(chosen);
        }
        for i in from..reps.len() {
            chosen.push(reps[i]);
            if search(o, reps, i, left - 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    (0..)
        .find(|&k| search(o, &reps, 0, k, &mut Vec::new()))
        .unwrap()
}

fn criterion_3() -> Check {
    let d = |g: &GroupStructure| d_i_exact(&build_profile(g, None).unwrap()).map(|c| c.size);
    for (name, want) in [
        ("A5", 2),
        ("S4", 2),
        ("PSL(2,7)", 2),
        ("C2", 1),
        ("C2^2", 2),
        ("C2^3", 3),
        ("C2^4", 4),
        ("C3", 1),
        ("C5", 1),
        ("C7", 1),
        ("C11", 1),
        ("C13", 1),
    ] {
        ensure!(d(structure_of(name)) == Some(want), "d_I({name}) = {:?}, want {want}", d(structure_of(name)));
    }
    for (name, g) in small_catalog() {
        let o = Oracle::from_structure(&g);
        ensure!(d(&g) == Some(oracle_d_i(&o)), "{name}: d_I differs from oracle");
    }
    let mut equality = Vec::new();
    for (e, g) in catalog_structures() {
        let r = chief_bound_check(g).map_err(|e| e.to_string())?;
        let two_pow = BigUint::from(2u32).pow(r.d_i as u32);
        ensure!(two_pow <= g.order_big(), "{}: d_I > log2|G|", e.name);
        let eq = two_pow == g.order_big();
        ensure!(
            eq == g.is_elementary_abelian_2() && eq == e.has_tag("elementary-abelian-2"),
            "{}: log2 equality {eq}",
            e.name
        );
        ensure!(r.within_chief_bound, "{}: d_I = {} > a + 2b = {}", e.name, r.d_i, r.a_plus_2b);
        if r.d_i == r.a_plus_2b {
            equality.push(e.name.clone());
        }
    }
    for name in ["A5", "C2", "C2^2", "C2^3", "C2^4"] {
        ensure!(equality.iter().any(|n| n == name), "{name}: d_I < a + 2b");
    }
    Ok(format!("{} catalog groups swept", catalog_structures().len()))
}

const MC_TRIALS: usize = 20_000;

fn criterion_4() -> Check {
    let start = Instant::now();
    let catalog = Catalog::builtin();
    let mut notes = Vec::new();
    for (name, want) in [("C2", q(2, 1)), ("C2^2", q(10, 3)), ("A5", q(91, 22))] {
        let g = GroupStructure::new(&catalog.instantiate(name).unwrap(), &Caps::default()).unwrap();
        let family = DistinctTildeFamily::new(&g, true);
        let exact = chebotarev_exact(&family, 24).map_err(|e| e.to_string())?;
        ensure!(exact == want, "{name}: subset formula gives {exact}");

        let (partial, tail) = chebotarev_partial_sum(&family, 200, 24).map_err(|e| e.to_string())?;
        ensure!(partial <= want && want <= &partial + &tail, "{name}: partial sum bracket");
        ensure!(tail < q(1, 1_000_000), "{name}: tail {tail} too loose");
        // The partial sum must also be the sum of 1 - P_I term by term.
        let mut direct = BigRational::from_integer(0.into());
        for k in 0..=20 {
            direct += BigRational::one() - p_i_exact(&family, k, 24).unwrap();
        }
        let (partial20, _) = chebotarev_partial_sum(&family, 20, 24).unwrap();
        ensure!(direct == partial20, "{name}: partial sum differs from sum of 1 - P_I");

        let (_, oracle_c) = Oracle::from_structure(&g).chebotarev_chain(0);
        ensure!(oracle_c == want, "{name}: oracle chain gives {oracle_c}");

        let mc = chebotarev_mc(&g, MC_TRIALS, SEED).map_err(|e| e.to_string())?;
        let target = invgen::rational::to_f64(&want);
        let z = (mc.mean - target).abs() / mc.std_error;
        ensure!(
            z <= 4.0,
            "{name}: MC mean {} se {} is {z:.2} SE from {target}",
            mc.mean,
            mc.std_error
        );
        notes.push(format!("{name} {}±{:.4}", mc.mean, mc.std_error));
    }
    within(start, Duration::from_secs(30))?;
    Ok(notes.join(", "))
}

fn criterion_5() -> Check {
    let mut rows = 0;
    for (e, g) in catalog_structures() {
        let oracle = (g.order() <= ORACLE_MAX_ORDER).then(|| Oracle::from_structure(g).chebotarev_chain(8).0);
        for k in 1..=8u32 {
            let s = p_i_sandwich_check(g, k, 24).map_err(|e| e.to_string())?;
            ensure!(s.holds(), "{} k={k}: {} <= {} <= {} fails", e.name, s.lower, s.failure, s.upper);
            if let Some(p) = &oracle {
                ensure!(
                    BigRational::one() - &p[k as usize] == s.failure,
                    "{} k={k}: P_I differs from oracle chain",
                    e.name
                );
            }
            rows += 1;
        }
    }
    Ok(format!("{rows} (group, k) pairs"))
}

const RANDOM_GENERATING_SETS: usize = 200;

fn criterion_6() -> Check {
    for (i, (e, g)) in catalog_structures().iter().enumerate() {
        let profile = build_profile(g, None).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        rng.set_stream(i as u64);
        let all = (0..RANDOM_GENERATING_SETS).all(|_| {
            let set = random_generating_set(g.group(), &mut rng);
            elements_invariably_generate(g, &profile, &set).unwrap()
        });
        let witness = find_noninvariable_generating_set(g);
        let nilpotent = g.is_nilpotent();
        ensure!(nilpotent == e.has_tag("nilpotent"), "{}: nilpotency flag", e.name);
        ensure!(all == nilpotent, "{}: nilpotent {nilpotent}, samples all invariable {all}", e.name);
        ensure!(witness.is_none() == nilpotent, "{}: counterexample construction", e.name);
        if let Some(w) = witness {
            // The construction must generate, and its parts must all meet one
            // conjugate of M.
            let elems: Vec<Permutation> = w
                .x
                .iter()
                .chain(&w.y)
                .map(|&x| g.table().element(x).clone())
                .collect();
            ensure!(
                GroupHandle::generates_order(&elems, &g.order_big()),
                "{}: counterexample does not generate",
                e.name
            );
            ensure!(
                !elements_invariably_generate(g, &profile, &elems).unwrap(),
                "{}: counterexample generates invariably",
                e.name
            );
        }
    }
    Ok(format!("{} catalog groups", catalog_structures().len()))
}

fn criterion_7() -> Check {
    let mut worst = (String::new(), 0.0f64);
    for (e, g) in catalog_structures() {
        let r = theorem2_ratio_report(&e.name, g, 24, None).map_err(|err| format!("{}: {err}", e.name))?;
        let ratio = r.ratios.c_over_sqrt_order_log;
        ensure!(ratio <= 2.0, "{}: C/sqrt(|G| ln|G|) = {ratio}", e.name);
        if ratio > worst.1 {
            worst = (e.name.clone(), ratio);
        }
    }
    for p in [5, 7, 11, 13] {
        let name = format!("AGL(1,{p})");
        let g = structure_of(&name);
        let r = theorem2_ratio_report(&name, g, 24, None).unwrap();
        let s = r.ratios.c_over_sqrt_order;
        ensure!((1.0..=2.5).contains(&s), "{name}: C/sqrt|G| = {s}");
    }
    Ok(format!("largest log ratio {:.3} ({})", worst.1, worst.0))
}

fn alternating(n: usize) -> (GroupHandle, GroupHandle) {
    let cycle = |pts: Vec<usize>| Permutation::from_cycles(n, &[pts]).unwrap();
    let long = if n % 2 == 1 { cycle((1..=n).collect()) } else { cycle((2..=n).collect()) };
    let a = GroupHandle::from_generators(&[cycle(vec![1, 2, 3]), long]).unwrap();
    let s = GroupHandle::from_generators(&[cycle(vec![1, 2]), cycle((1..=n).collect())]).unwrap();
    (a, s)
}

fn criterion_8() -> Check {
    let start = Instant::now();
    let catalog = Catalog::builtin();
    for n in 5..=8 {
        let t = structure_of(&format!("A{n}"));
        let s = catalog.instantiate(&format!("S{n}")).unwrap();
        let fusion = t.fuse_classes_under(&s).unwrap();
        let profile = build_profile(t, Some(&fusion)).unwrap();
        let (x, y) = alternating_pair(n).unwrap();
        ensure!(
            elements_invariably_generate(t, &profile, &[x, y]).unwrap(),
            "A{n}: pair fails the fused test"
        );
    }
    for n in 9..=14 {
        let (a, s) = alternating(n);
        let (x, y) = alternating_pair(n).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        rng.set_stream(n as u64);
        let v = invgen_sample_refuter(&a, &[x, y], 1000, &mut rng, Some(&s)).unwrap();
        ensure!(!v.is_refuted(), "A{n}: refuted {v:?}");
    }
    within(start, Duration::from_secs(300))?;
    Ok("n = 5..8 exact, n = 9..14 refuter".into())
}

fn criterion_9() -> Check {
    let t = structure_of("A5");
    let s5 = Catalog::builtin().instantiate("S5").unwrap();
    let n2 = pigeonhole_bound(t, &s5, 2).unwrap();
    ensure!(n2 == BigUint::from(17u32), "pigeonhole N(2) = {n2}");
    let action = AutAction::new(t, &s5, 1000).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let m = search_kl_matrix(&action, 2, 18, 200_000, &mut rng)
        .unwrap()
        .ok_or("no 2 x 18 matrix found")?;
    ensure!(action.kl_check(&m).unwrap(), "found matrix fails the KL check");
    ensure!(rows_generate_power(t.group(), &m), "rows do not generate A5^18");
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    rng.set_stream(1);
    let mut generating = 0;
    for i in 0..200 {
        let r = rng.gen_range(1..=3);
        let k = rng.gen_range(1..=3);
        let m = random_matrix(t.group(), r, k, &mut rng);
        let full = rows_generate_power(t.group(), &m);
        ensure!(action.kl_check(&m).unwrap() == full, "random matrix {i} ({r} x {k}) disagrees");
        generating += usize::from(full);
    }
    ensure!(generating > 0 && generating < 200, "random matrices too uniform: {generating}");
    Ok(format!("N(2) = 17, 2 x 18 found, {generating}/200 random matrices generate"))
}

fn criterion_10() -> Check {
    let r = almost_simple_lower_example(&Catalog::builtin(), &Caps::default()).unwrap();
    ensure!(r.v.0 >= q(2, 3), "v(M) = {}", r.v.0);
    ensure!(r.v_meets_bound, "v(M) below 1 - 1/b");
    ensure!(r.fixed_point_free_in_socle, "fixed-point-free element outside the socle");
    ensure!(r.socle_order == 504, "socle order {}", r.socle_order);
    let mut pairs = Vec::new();
    for name in ["A5", "A6", "A7"] {
        let g = structure_of(name);
        let pair = best_invgen_pair(g).unwrap().ok_or(format!("{name}: no pair"))?;
        let rep = theorem3c_check(g, pair).unwrap();
        ensure!(rep.passes, "{name}: {:?}", rep.classes);
        pairs.push(format!(
            "{name} {}",
            rep.classes.iter().map(|c| c.label.as_str()).collect::<Vec<_>>().join("/")
        ));
    }
    Ok(format!(
        "M of order {} with v = {}, {}",
        r.maximal_order,
        r.v.0,
        pairs.join(", ")
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("engine matches brute-force oracle", criterion_1),
        ("generation test matches conjugate enumeration", criterion_2),
        ("d_I values and bound sweeps", criterion_3),
        ("Chebotarev invariant three ways", criterion_4),
        ("probability sandwich, k = 1..8", criterion_5),
        ("nilpotency characterization", criterion_6),
        ("Chebotarev ratio brackets", criterion_7),
        ("alternating pairs", criterion_8),
        ("pigeonhole and KL instance", criterion_9),
        ("almost simple example and class sizes", criterion_10),
    ];
    // Keep panics from individual criteria to the summary line.
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(note) => println!("criterion {:>2} PASS  {name} ({secs:.1}s): {note}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({secs:.1}s): {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
