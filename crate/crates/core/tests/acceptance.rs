//! End-to-end acceptance checks. Each test prints one `PASS`/`FAIL` line.

use std::collections::HashSet;

use cyclic_core::counterexamples::{
    gale_dual_check, lift_d, lift_n, maximal_nonoverlap_check, rambau_example, random_complex,
    random_maximal_family, verify_nonextendable, Verdict,
};
use cyclic_core::extension::{
    extend_small, greedy_extend, level_triangulation_d3, lmr_triangulate, t_of_sigma_d2, Complex,
    LmrInstance,
};
use cyclic_core::geometry::geometric_classify;
use cyclic_core::moment::{classify_pair, PairClass};
use cyclic_core::triangulation::{
    enumerate_triangulations, enumerate_triangulations_on, link_at_max, meet, psi_chain,
    simplex_below, submersion_set, validate, HstPoset, Triangulation,
};
use cyclic_core::Simplex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

fn verdict(id: u32, name: &str, failures: &[String]) {
    if failures.is_empty() {
        println!("PASS  {id:>2} {name}");
    } else {
        println!("FAIL  {id:>2} {name}: {} violation(s)", failures.len());
        for f in failures.iter().take(10) {
            println!("        {f}");
        }
    }
    assert!(
        failures.is_empty(),
        "criterion {id} failed: {:?}",
        &failures[..failures.len().min(10)]
    );
}

fn simplices_up_to(n: u32, max_len: usize) -> Vec<Simplex> {
    (1..=max_len)
        .flat_map(|k| Simplex::ground(n).subsets(k))
        .collect()
}

/// `w1 < a < w2 < b < w3` with all `wi ∈ w`, for an edge `{a, b}`.
fn five_interlaced(edge: Simplex, w: Simplex) -> bool {
    let (a, b) = (edge.min().unwrap(), edge.max().unwrap());
    w.vertices().any(|x| x < a)
        && w.vertices().any(|x| a < x && x < b)
        && w.vertices().any(|x| x > b)
}

/// The three edge conditions of an LMR instance, written out directly.
fn lmr_edge_ok(inst: &LmrInstance, e: Simplex) -> bool {
    let (v1, v2) = (e.min().unwrap(), e.max().unwrap());
    let left = inst.left.iter().all(|l| {
        let (l1, l2) = (Simplex::min(*l).unwrap(), Simplex::max(*l).unwrap());
        !(v1 < l1 && l1 < v2 && v2 < l2)
    });
    let right = inst.right.iter().all(|r| {
        let (r1, r2) = (Simplex::min(*r).unwrap(), Simplex::max(*r).unwrap());
        !(r1 < v1 && v1 < r2 && r2 < v2)
    });
    let middle = inst.middle.iter().all(|&m| !five_interlaced(e, m));
    left && right && middle
}

fn random_lmr_instance(rng: &mut ChaCha8Rng) -> Option<LmrInstance> {
    let n = rng.gen_range(4..=10u32);
    let vs: Vec<u32> = (1..=n).filter(|_| rng.gen_bool(0.75)).collect();
    if vs.len() < 3 {
        return None;
    }
    let mut inst = LmrInstance {
        n,
        vertices: Simplex::from_iter_unchecked(vs),
        left: vec![],
        right: vec![],
        middle: vec![],
    };
    for _ in 0..rng.gen_range(0..12) {
        let kind = rng.gen_range(0..3);
        let size = if kind == 2 { 3 } else { 2 };
        let s = Simplex::from_iter_unchecked(
            rand::seq::index::sample(rng, n as usize, size)
                .into_iter()
                .map(|i| i as u32 + 1),
        );
        let mut cand = inst.clone();
        match kind {
            0 => cand.left.push(s),
            1 => cand.right.push(s),
            _ => cand.middle.push(s),
        }
        if cand.check().is_ok() {
            inst = cand;
        }
    }
    inst.check().is_ok().then_some(inst)
}

#[test]
fn c01_interlacing_matches_geometry() {
    let mut failures = Vec::new();
    for d in 1..=4usize {
        let all = simplices_up_to(8, d + 1);
        failures.extend(
            all.par_iter()
                .flat_map_iter(|&s| {
                    all.iter().filter_map(move |&t| {
                        let c = classify_pair(s, t, d).unwrap();
                        let g = geometric_classify(s, t, d).unwrap();
                        (c != g).then(|| format!("d={d} {s} {t}: {c:?} vs {g:?}"))
                    })
                })
                .collect::<Vec<_>>(),
        );
    }
    verdict(
        1,
        "classify_pair equals the exact geometric classification, d ≤ 4, n ≤ 8",
        &failures,
    );
}

#[test]
fn c02_canonical_counterexample() {
    let f = rambau_example();
    let mut failures = Vec::new();
    let cert = verify_nonextendable(&f, 10_000_000).unwrap();
    if cert.verdict != Verdict::NonExtendable || !cert.search.is_some_and(|s| s.complete) {
        failures.push(format!("search verdict {:?}", cert.verdict));
    }
    let candidates = Simplex::ground(8).subsets(6);
    if candidates.len() != 28 {
        failures.push(format!("{} candidates", candidates.len()));
    }
    let addable = maximal_nonoverlap_check(&f);
    if !addable.is_empty() {
        failures.push(format!("addable simplices {addable:?}"));
    }
    verdict(2, "(8, 5) family is non-extendable and maximal", &failures);
}

#[test]
fn c03_lifted_families() {
    let mut failures = Vec::new();
    let mut checked = 0;
    for big_d in 5..=7usize {
        let k = big_d - 5;
        for n in (big_d as u32 + 3)..=(big_d as u32 + 5).min(11) {
            let m = n as usize - 8 - k;
            // every interleaving of k dimension lifts and m vertex lifts
            for mask in 0u32..(1 << (k + m)) {
                if mask.count_ones() as usize != k {
                    continue;
                }
                let mut f = rambau_example();
                for bit in 0..k + m {
                    f = if mask >> bit & 1 == 1 {
                        lift_d(&f)
                    } else {
                        lift_n(&f)
                    }
                    .unwrap();
                }
                assert_eq!((f.n(), f.d()), (n, big_d));
                checked += 1;
                match verify_nonextendable(&f, 10_000_000) {
                    Ok(c) if c.verdict == Verdict::NonExtendable => {}
                    Ok(c) => failures.push(format!("{f}: {:?}", c.verdict)),
                    Err(e) => failures.push(format!("{f}: {e}")),
                }
            }
        }
    }
    println!("      {checked} lifted families certified");
    verdict(
        3,
        "lifted families are non-extendable within 10^7 nodes",
        &failures,
    );
}

#[test]
fn c04_gale_agrees_with_search() {
    let mut failures = Vec::new();
    let f = rambau_example();
    let g = gale_dual_check(&f).unwrap();
    let s = verify_nonextendable(&f, 10_000_000).unwrap();
    if g.verdict != s.verdict || g.verdict != Verdict::NonExtendable {
        failures.push(format!(
            "canonical family: gale {:?} search {:?}",
            g.verdict, s.verdict
        ));
    }
    let mut pairs: Vec<Simplex> = g.gale.unwrap().dual_cones.iter().map(|p| p.1).collect();
    pairs.sort();
    let expected = [
        Simplex::new(&[1, 2]),
        Simplex::new(&[4, 5]),
        Simplex::new(&[7, 8]),
    ]
    .map(Result::unwrap);
    if pairs != expected {
        failures.push(format!("spanning pairs {pairs:?}"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut counts = [0usize; 2];
    for _ in 0..50 {
        let f = random_maximal_family(8, 5, &mut rng).unwrap();
        let g = gale_dual_check(&f).unwrap().verdict;
        let s = verify_nonextendable(&f, 10_000_000).unwrap().verdict;
        counts[(s == Verdict::NonExtendable) as usize] += 1;
        if g != s {
            failures.push(format!("{f}: gale {g:?} search {s:?}"));
        }
    }
    println!(
        "      random maximal families: {} extendable, {} non-extendable",
        counts[0], counts[1]
    );
    verdict(
        4,
        "Gale dual-cone test agrees with exhaustive search at (8, 5)",
        &failures,
    );
}

#[test]
fn c05_greedy_succeeds_in_low_dimension() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut failures = Vec::new();
    for i in 0..200 {
        let d = 3 + i % 2;
        let n = rng.gen_range(d as u32 + 2..=12);
        let attempts = rng.gen_range(1..=24);
        let c = random_complex(n, d, attempts, &mut rng).unwrap();
        match greedy_extend(&c) {
            Ok(r) => {
                let t = &r.triangulation;
                let v = validate(t);
                if !v.ok {
                    failures.push(format!("{c}: invalid output {:?}", v.failures));
                } else if !c.simplices().iter().all(|&s| t.has_face(s)) {
                    failures.push(format!("{c}: a member is missing from {t}"));
                }
            }
            Err(e) => failures.push(format!("{c}: {e}")),
        }
    }
    verdict(
        5,
        "greedy extension succeeds on 200 random complexes, d ∈ {3, 4}, n ≤ 12",
        &failures,
    );
}

#[test]
fn c06_catalan_counts() {
    let mut failures = Vec::new();
    for (n, expected) in [(4u32, 2usize), (5, 5), (6, 14), (7, 42)] {
        let got = enumerate_triangulations(n, 2).unwrap().len();
        if got != expected {
            failures.push(format!("|S({n},2)| = {got}, expected {expected}"));
        }
    }
    verdict(6, "|S(n,2)| = 2, 5, 14, 42 for n = 4..7", &failures);
}

#[test]
fn c07_lattice_theorem() {
    let mut failures = Vec::new();
    for d in 2..=3usize {
        for n in d as u32 + 1..=7 {
            let p = HstPoset::build(n, d).unwrap();
            let subs: Vec<_> = p.elements().iter().map(submersion_set).collect();
            let distinct: HashSet<_> = subs.iter().map(|s| s.members.clone()).collect();
            if distinct.len() != p.len() {
                failures.push(format!("sub is not injective on S({n},{d})"));
            }
            let m = p.len();
            for i in 0..m {
                for j in i..m {
                    let Some(g) = p.glb(i, j) else {
                        failures.push(format!("S({n},{d}): no meet for {i}, {j}"));
                        continue;
                    };
                    match meet(p.element(i), p.element(j)) {
                        Ok(t) if &t == p.element(g) => {}
                        Ok(t) => failures.push(format!(
                            "S({n},{d}): computed meet {t} ≠ glb {}",
                            p.element(g)
                        )),
                        Err(e) => failures.push(format!("S({n},{d}): {e}")),
                    }
                    if subs[g] != subs[i].intersection(&subs[j]) {
                        failures.push(format!("S({n},{d}): sub(meet) ≠ intersection for {i}, {j}"));
                    }
                }
            }
        }
    }
    verdict(
        7,
        "submersion sets encode the lattice for d ∈ {2, 3}, n ≤ 7",
        &failures,
    );
}

#[test]
fn c08_meet_intersection_table() {
    let mut failures = Vec::new();
    let p = HstPoset::build(7, 4).unwrap();
    match p.meet_intersection_violation() {
        Some((i, j)) => println!(
            "      (7, 4) witness: {} and {}",
            p.element(i),
            p.element(j)
        ),
        None => failures.push("no violating pair at (n, d) = (7, 4)".into()),
    }
    for d in [4usize, 5] {
        let p = HstPoset::build(d as u32 + 2, d).unwrap();
        if let Some((i, j)) = p.meet_intersection_violation() {
            failures.push(format!("n = d + 2 = {}: violating pair {i}, {j}", d + 2));
        }
    }
    verdict(
        8,
        "meet-intersection fails at (7, 4) and holds at n = d + 2 for d = 4, 5",
        &failures,
    );
}

#[test]
fn c09_small_n_extendability() {
    let mut failures = Vec::new();
    let mut families = 0;
    for big_d in 1..=6usize {
        let n = big_d as u32 + 2;
        let cands = Simplex::ground(n).subsets(big_d + 1);
        for mask in 1u32..(1 << cands.len()) {
            let chosen: Vec<Simplex> = (0..cands.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| cands[i])
                .collect();
            let Ok(c) = Complex::new(n, big_d, chosen.clone()) else {
                continue;
            };
            let maximal = cands
                .iter()
                .filter(|s| !chosen.contains(s))
                .all(|&s| Complex::new(n, big_d, [chosen.clone(), vec![s]].concat()).is_err());
            if !maximal {
                continue;
            }
            families += 1;
            match extend_small(&c).map(|r| r.triangulation) {
                Ok(t) if validate(&t).ok && chosen.iter().all(|&s| t.contains_facet(s)) => {}
                Ok(t) => failures.push(format!("{c}: bad output {t}")),
                Err(e) => failures.push(format!("{c}: {e}")),
            }
        }
    }
    println!("      {families} maximal families");
    verdict(
        9,
        "every maximal family with n = D + 2, D ≤ 6, extends",
        &failures,
    );
}

#[test]
fn c10_construction_postconditions() {
    let mut failures = Vec::new();

    for n in 3..=8u32 {
        let ground = Simplex::ground(n);
        let cands: Vec<Simplex> = ground
            .subsets(2)
            .into_iter()
            .chain(ground.subsets(3))
            .collect();
        for &sigma in &cands {
            let t = t_of_sigma_d2(sigma, n).unwrap();
            if !validate(&t).ok || !t.has_face(sigma) {
                failures.push(format!(
                    "T({sigma}) on [{n}] = {t} is not valid or misses σ"
                ));
            }
            for &tau in &cands {
                if matches!(
                    classify_pair(tau, sigma, 2).unwrap(),
                    PairClass::A | PairClass::B
                ) && !simplex_below(tau, &t).unwrap()
                {
                    failures.push(format!("{tau} is not below T({sigma}) on [{n}]"));
                }
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut lmr_checked = 0;
    while lmr_checked < 500 {
        let Some(inst) = random_lmr_instance(&mut rng) else {
            continue;
        };
        lmr_checked += 1;
        let all = enumerate_triangulations_on(inst.vertices, 2, 1_000_000)
            .unwrap()
            .solutions;
        let feasible: Vec<&Triangulation> = all
            .iter()
            .filter(|t| t.faces(2).iter().all(|&e| lmr_edge_ok(&inst, e)))
            .collect();
        match lmr_triangulate(&inst) {
            Ok(t) => {
                if !t.faces(2).iter().all(|&e| lmr_edge_ok(&inst, e)) {
                    failures.push(format!("{inst:?}: output {t} has a forbidden edge"));
                }
                if !feasible.iter().any(|f| f.facets() == t.facets()) {
                    failures.push(format!(
                        "{inst:?}: output {t} not among the brute-force solutions"
                    ));
                }
            }
            Err(e) => failures.push(format!(
                "{inst:?}: {e} ({} brute-force solutions)",
                feasible.len()
            )),
        }
        if feasible.is_empty() {
            failures.push(format!(
                "{inst:?}: brute force finds no admissible triangulation"
            ));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut level_checked = 0;
    for _ in 0..2000 {
        let n = rng.gen_range(4..=9u32);
        let tri = |rng: &mut ChaCha8Rng| {
            Simplex::from_iter_unchecked(
                rand::seq::index::sample(rng, n as usize, 3)
                    .into_iter()
                    .map(|i| i as u32 + 1),
            )
        };
        let sigma = tri(&mut rng);
        let (lo, hi) = (sigma.min().unwrap(), sigma.max().unwrap());
        let mut taus: Vec<Simplex> = Vec::new();
        for _ in 0..rng.gen_range(0..10) {
            let t = tri(&mut rng);
            let (tlo, thi) = (t.min().unwrap(), t.max().unwrap());
            if tlo < lo || (tlo == lo && thi > hi) || t == sigma || taus.contains(&t) {
                continue;
            }
            let lifted_overlap = std::iter::once(&sigma)
                .chain(&taus)
                .any(|&s| cyclic_core::moment::overlaps(s, t, 4).unwrap());
            if !lifted_overlap {
                taus.push(t);
            }
        }
        level_checked += 1;
        match level_triangulation_d3(sigma, &taus, n) {
            Ok(t) => {
                if !validate(&t).ok || !t.has_face(sigma) {
                    failures.push(format!(
                        "level({sigma}, {taus:?}, {n}) = {t}: invalid or σ missing"
                    ));
                }
                for &tau in &taus {
                    if !simplex_below(tau, &t).unwrap() {
                        failures.push(format!("level({sigma}, {taus:?}, {n}): {tau} not below"));
                    }
                    if let Some(e) = t.faces(2).into_iter().find(|&e| five_interlaced(e, tau)) {
                        failures.push(format!(
                            "level({sigma}, {taus:?}, {n}): edge {e} 5-interlaces {tau}"
                        ));
                    }
                }
            }
            Err(e) => failures.push(format!("level({sigma}, {taus:?}, {n}): {e}")),
        }
    }
    println!("      {lmr_checked} LMR instances, {level_checked} level instances");
    verdict(
        10,
        "T(σ), LMR and level constructions meet their guarantees",
        &failures,
    );
}

#[test]
fn c11_psi_and_links() {
    let mut failures = Vec::new();
    for n in 4..=6u32 {
        let p = HstPoset::build(n, 2).unwrap();
        let upper: HashSet<Triangulation> = enumerate_triangulations(n, 3)
            .unwrap()
            .into_iter()
            .collect();
        let chains = p.maximal_chains(1_000_000).unwrap();
        for chain in &chains {
            let members: Vec<Triangulation> = chain.iter().map(|&i| p.element(i).clone()).collect();
            match psi_chain(&members, &p) {
                Ok(t) if validate(&t).ok && upper.contains(&t) => {}
                Ok(t) => failures.push(format!(
                    "Ψ of a chain in HST({n},2) = {t} is not in S({n},3)"
                )),
                Err(e) => failures.push(format!("HST({n},2): {e}")),
            }
        }
        println!("      HST({n},2): {} maximal chains", chains.len());
    }
    for d in 2..=3usize {
        for n in d as u32 + 2..=7 {
            let lower: HashSet<Triangulation> = enumerate_triangulations(n - 1, d - 1)
                .unwrap()
                .into_iter()
                .collect();
            for t in enumerate_triangulations(n, d).unwrap() {
                match link_at_max(&t) {
                    Ok(l) if lower.contains(&l) => {}
                    Ok(l) => {
                        failures.push(format!("{t}/{n} = {l} is not in S({}, {})", n - 1, d - 1))
                    }
                    Err(e) => failures.push(format!("{t}: {e}")),
                }
            }
        }
    }
    verdict(
        11,
        "Ψ of maximal chains and links at the maximum vertex land in the right sets",
        &failures,
    );
}

#[test]
fn c12_greedy_growth() {
    let sizes: Vec<u32> = (8..=40).step_by(4).collect();
    let ops: Vec<f64> = sizes
        .par_iter()
        .map(|&n| greedy_extend(&Complex::empty(n, 4).unwrap()).unwrap().ops as f64)
        .collect();
    let ratios: Vec<f64> = sizes
        .iter()
        .zip(&ops)
        .map(|(&n, &o)| o / (n as f64).powi(5))
        .collect();
    let c = (ratios.iter().map(|r| r.ln()).sum::<f64>() / ratios.len() as f64).exp();
    let mut failures = Vec::new();
    for ((&n, &o), r) in sizes.iter().zip(&ops).zip(&ratios) {
        println!("      n={n:>2} ops={o:>10} ops/n^5={r:.4}");
        if o > 4.0 * c * (n as f64).powi(5) {
            failures.push(format!("n={n}: {o} ops exceeds 4·c·n^5 with c={c:.4}"));
        }
    }
    let k = sizes.len();
    let slope = (ops[k - 1] / ops[k - 2]).ln() / (sizes[k - 1] as f64 / sizes[k - 2] as f64).ln();
    println!("      fitted c={c:.4}, log-log slope over the last step {slope:.2}");
    verdict(
        12,
        "greedy op count at d = 4 stays within 4·c·n^5 on n ∈ [8, 40]",
        &failures,
    );
}
