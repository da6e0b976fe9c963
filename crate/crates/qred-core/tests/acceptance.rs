//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use qred_core::cascade::kostant_cascade;
use qred_core::classify::{classify_parabolic, enumerate_index_zero, enumerate_verdicts, single_root_test};
use qred_core::exact::{q, rank_i64};
use qred_core::rootsys::{AlgebraElement, Family, RootSystem};
use qred_core::seaweed::*;
use qred_core::stabilizer::*;
use qred_core::RootSubset;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

// Pinned tolerances and sample sizes.
const E7_RESAMPLES: usize = 3;
const SWEEP_TRIALS: usize = 20;
const SWEEP_SEED: u64 = 2024;
const JACOBI_RANDOM_PER_TYPE: usize = 10_000;
const KILLING_TRIPLES: usize = 1_000;
const E7_IDENTITY_PAIRS: usize = 2_000;
const REGULARITY_DRAWS: usize = 100;
const REGULARITY_MIN_EQUAL: usize = 90;

struct Criterion {
    id: usize,
    name: &'static str,
    budget: Duration,
    run: fn() -> Result<String, String>,
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn spec(r: &RootSystem, a: RootSubset, b: RootSubset) -> BiparabolicSpec {
    BiparabolicSpec::new(r.simple_type(), a, b).unwrap()
}

fn index(r: &RootSystem, a: RootSubset, b: RootSubset) -> usize {
    seaweed_index(r, &spec(r, a, b)).unwrap()
}

fn coeffs64(r: &RootSystem, id: usize) -> Vec<i64> {
    r.root(id).coeffs().iter().map(|&c| c as i64).collect()
}

fn c1_cascade_sizes() -> Result<String, String> {
    let types = cascade_size_types();
    for &(f, l) in &types {
        let r = rs(f, l);
        let k = kostant_cascade(&r, RootSubset::full(l)).len();
        ensure(k == cascade_size(f, l), || format!("{f:?}{l}: k = {k}, expected {}", cascade_size(f, l)))?;
    }
    Ok(format!("{} types", types.len()))
}

fn c2_cascade_structure() -> Result<String, String> {
    for (f, l) in cascade_size_types() {
        let r = rs(f, l);
        let c = kostant_cascade(&r, RootSubset::full(l));
        let eps = c.eps_ids();
        for (i, &a) in eps.iter().enumerate() {
            for &b in &eps[i + 1..] {
                let (x, y) = (r.root(a).coeffs(), r.root(b).coeffs());
                let plus: Vec<i32> = x.iter().zip(y).map(|(s, t)| s + t).collect();
                let minus: Vec<i32> = x.iter().zip(y).map(|(s, t)| s - t).collect();
                ensure(r.root_id(&plus).is_none() && r.root_id(&minus).is_none(), || {
                    format!("{f:?}{l}: eps {a} and {b} are not strongly orthogonal")
                })?;
            }
        }
        let mut gammas: Vec<usize> = c.nodes.iter().flat_map(|n| n.gamma.iter().copied()).collect();
        gammas.sort_unstable();
        ensure(gammas == (0..r.num_positive()).collect::<Vec<_>>(), || format!("{f:?}{l}: gammas do not partition"))?;
    }
    for (f, l, want) in [(Family::F, 4, 4), (Family::E, 6, 4), (Family::E, 7, 7), (Family::E, 8, 8)] {
        let r = rs(f, l);
        let got = kostant_cascade(&r, RootSubset::full(l)).eps_ids().len();
        ensure(got == want, || format!("{f:?}{l}: {got} eps roots, expected {want}"))?;
    }
    Ok("strongly orthogonal, partition, exceptional sizes 4/4/7/8".into())
}

fn c3_e6_index_zero() -> Result<String, String> {
    let r = rs(Family::E, 6);
    let got: BTreeSet<Vec<usize>> = enumerate_index_zero(&r).unwrap().into_iter().map(|s| s.labels()).collect();
    let want: BTreeSet<Vec<usize>> = e6_index_zero().into_iter().collect();
    ensure(got == want, || format!("got {got:?}"))?;
    Ok(format!("{} of 64 subsets", got.len()))
}

fn c4_d6_flags() -> Result<String, String> {
    let r = rs(Family::D, 6);
    let got: BTreeSet<Vec<usize>> =
        enumerate_verdicts(&r).unwrap().into_iter().filter(|v| !v.qr).map(|v| v.subset).collect();
    let want: BTreeSet<Vec<usize>> = d6_non_qr().into_iter().collect();
    ensure(got == want, || format!("got {got:?}"))?;
    Ok(format!("{} non-QR subsets", got.len()))
}

fn c5_exceptional_tables() -> Result<String, String> {
    let types = [(Family::G, 2), (Family::F, 4), (Family::E, 6), (Family::E, 7), (Family::E, 8)];
    for (f, l) in types {
        let r = rs(f, l);
        let by_rule: Vec<usize> = (0..l).filter(|&i| !single_root_test(&r, i).unwrap()).map(|i| i + 1).collect();
        ensure(by_rule == single_root_non_qr(f, l), || format!("{f:?}{l}: single roots {by_rule:?}"))?;
    }
    let mut rows = 0;
    for (f, l) in [(Family::F, 4), (Family::E, 7), (Family::E, 8)] {
        let r = rs(f, l);
        let got: BTreeSet<(Vec<usize>, usize)> = enumerate_verdicts(&r)
            .unwrap()
            .into_iter()
            .filter(|v| !v.qr && r.is_connected(set(&v.subset, l)))
            .map(|v| (v.subset, v.index))
            .collect();
        let want: BTreeSet<(Vec<usize>, usize)> = connected_non_qr(f, l).into_iter().map(|(s, i, _)| (s, i)).collect();
        ensure(got == want, || format!("{f:?}{l}: connected non-QR {got:?}"))?;
        for (s, i) in &want {
            let direct = index(&r, set(s, l), RootSubset::full(l));
            ensure(direct == *i, || format!("{f:?}{l} {s:?}: index {direct}, listed {i}"))?;
        }
        rows += want.len();
    }
    let e6 = rs(Family::E, 6);
    let got: BTreeSet<(Vec<usize>, usize)> =
        enumerate_verdicts(&e6).unwrap().into_iter().filter(|v| !v.qr).map(|v| (v.subset, v.index)).collect();
    let want: BTreeSet<(Vec<usize>, usize)> = e6_non_qr().into_iter().map(|(s, i, _)| (sorted(s), i)).collect();
    ensure(got == want, || format!("E6 non-QR {got:?}"))?;
    rows += want.len();
    let g2 = rs(Family::G, 2);
    let g2_non_qr: Vec<Vec<usize>> =
        enumerate_verdicts(&g2).unwrap().into_iter().filter(|v| !v.qr).map(|v| v.subset).collect();
    ensure(g2_non_qr == vec![vec![1]], || format!("G2 non-QR {g2_non_qr:?}"))?;
    let e8 = rs(Family::E, 8);
    let v = classify_parabolic(&e8, set(&[1, 3, 4, 5, 6, 7, 8], 8)).unwrap();
    ensure(!v.qr && v.index == 4, || "E8 {1,3,4,5,6,7,8}".into())?;
    Ok(format!("{rows} tabulated rows plus single-root lists"))
}

fn c6_e7_certificate() -> Result<String, String> {
    let r = rs(Family::E, 7);
    let s = BiparabolicSpec::parabolic(r.simple_type(), set(&[1, 2, 3, 4, 5], 7)).unwrap();
    let dim_p = biparabolic_basis(&r, &s).unwrap().dim();
    ensure(dim_p == 90, || format!("dim P = {dim_p}"))?;
    let c = certify_quasi_reductive(&r, &s, E7_RESAMPLES, 7).unwrap();
    let cert = c.certificate.ok_or_else(|| format!("no certificate in {E7_RESAMPLES} draws"))?;
    ensure(matches!(cert.form, FormKind::Cascade(_)), || "needed a dense form".into())?;
    ensure(cert.stab.dim() == 4 && cert.index == 4, || format!("dim S = {}", cert.stab.dim()))?;
    ensure(killing_radical_on(&r, &cert.stab).dim() == 0, || "S ∩ S^⊥ ≠ 0".into())?;
    ensure(is_abelian(&r, &cert.stab).unwrap(), || "S not abelian".into())?;
    for x in cert.stab.basis() {
        ensure(is_semisimple_element(&r, &x).unwrap(), || "basis element not semisimple".into())?;
    }
    Ok(format!("dim P 90, dim S 4 at draw {}", cert.trial + 1))
}

fn c7_certificate_sweep() -> Result<String, String> {
    let workers = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1).min(8);
    let mut summary = Vec::new();
    for (f, l) in [(Family::G, 2), (Family::F, 4), (Family::E, 6)] {
        let r = rs(f, l);
        let (mut qr, mut non_qr) = (0, 0);
        for pi in RootSubset::all(l) {
            let verdict = classify_parabolic(&r, pi).unwrap();
            let s = BiparabolicSpec::parabolic(r.simple_type(), pi).unwrap();
            let c = certify_with_workers(&r, &s, SWEEP_TRIALS, SWEEP_SEED, workers).unwrap();
            ensure(c.certificate.is_some() == verdict.qr, || {
                format!("{f:?}{l} {pi}: verdict qr={}, certificate found={}", verdict.qr, c.certificate.is_some())
            })?;
            if verdict.qr {
                qr += 1;
            } else {
                non_qr += 1;
            }
        }
        summary.push(format!("{f:?}{l} {qr}/{non_qr}"));
    }
    Ok(format!("QR/non-QR {}", summary.join(", ")))
}

fn c8_chevalley() -> Result<String, String> {
    let jacobi = |r: &RootSystem, x: &AlgebraElement, y: &AlgebraElement, z: &AlgebraElement| {
        let t1 = r.bracket(x, &r.bracket(y, z).unwrap()).unwrap();
        let t2 = r.bracket(y, &r.bracket(z, x).unwrap()).unwrap();
        let t3 = r.bracket(z, &r.bracket(x, y).unwrap()).unwrap();
        (&(&t1 + &t2) + &t3).is_zero()
    };
    let mut exhaustive = 0usize;
    for (f, l) in [(Family::G, 2), (Family::F, 4)] {
        let r = rs(f, l);
        let d = r.dim();
        let basis: Vec<AlgebraElement> = (0..d).map(AlgebraElement::basis).collect();
        for i in 0..d {
            for j in i + 1..d {
                for k in j + 1..d {
                    ensure(jacobi(&r, &basis[i], &basis[j], &basis[k]), || format!("{f:?}{l} ({i},{j},{k})"))?;
                    exhaustive += 1;
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for l in 6..=8 {
        let r = rs(Family::E, l);
        let d = r.dim();
        for _ in 0..JACOBI_RANDOM_PER_TYPE {
            let [i, j, k] = [0; 3].map(|_| rng.random_range(0..d));
            let [x, y, z] = [i, j, k].map(AlgebraElement::basis);
            ensure(jacobi(&r, &x, &y, &z), || format!("E{l} ({i},{j},{k})"))?;
        }
    }
    // |N_{α,β}| = p + 1, with p walked down the α-string through β.
    let mut pairs = 0usize;
    for (f, l) in cascade_size_types() {
        let r = rs(f, l);
        let n = 2 * r.num_positive();
        for a in 0..n {
            for b in 0..n {
                let (ca, cb) = (coeffs64(&r, a), coeffs64(&r, b));
                let sum: Vec<i32> = ca.iter().zip(&cb).map(|(x, y)| (x + y) as i32).collect();
                if r.root_id(&sum).is_none() {
                    continue;
                }
                let mut p = 0;
                let mut cur = cb.clone();
                loop {
                    let next: Vec<i32> = cur.iter().zip(&ca).map(|(x, y)| (x - y) as i32).collect();
                    if r.root_id(&next).is_none() {
                        break;
                    }
                    p += 1;
                    cur = next.iter().map(|&x| x as i64).collect();
                }
                let nab = r.structure_constant(a, b).abs();
                ensure(nab == p + 1, || format!("{f:?}{l}: |N({a},{b})| = {nab}, p + 1 = {}", p + 1))?;
                pairs += 1;
            }
        }
    }
    let types = [(Family::G, 2), (Family::F, 4), (Family::E, 6), (Family::E, 7), (Family::E, 8)];
    for t in 0..KILLING_TRIPLES {
        let (f, l) = types[t % types.len()];
        let r = rs(f, l);
        let mut random = || {
            AlgebraElement::from_terms(
                (0..rng.random_range(1..=4)).map(|_| (rng.random_range(0..r.dim()), q(rng.random_range(-5..=5)))),
            )
        };
        let (x, y, z) = (random(), random(), random());
        let left = r.killing(&r.bracket(&x, &y).unwrap(), &z).unwrap();
        let right = r.killing(&x, &r.bracket(&y, &z).unwrap()).unwrap();
        ensure(left == right, || format!("{f:?}{l}: Killing form not invariant"))?;
    }
    Ok(format!(
        "{exhaustive} exhaustive triples, {} random triples, {pairs} root pairs, {KILLING_TRIPLES} Killing triples",
        3 * JACOBI_RANDOM_PER_TYPE
    ))
}

fn span_dim(r: &RootSystem, sets: &[RootSubset]) -> usize {
    let rows: Vec<Vec<i64>> =
        sets.iter().flat_map(|&s| kostant_cascade(r, s).eps_ids()).map(|id| coeffs64(r, id)).collect();
    rank_i64(&rows, r.rank())
}

fn orthogonal(r: &RootSystem, a: RootSubset, b: RootSubset) -> bool {
    a.intersection(b).is_empty() && !a.positions().any(|i| b.positions().any(|j| r.adjacent(i, j)))
}

/// Checks the three identities on one pair; returns how many applied.
fn identities(r: &RootSystem, a: RootSubset, b: RootSubset) -> Result<usize, String> {
    let l = r.rank();
    let full = RootSubset::full(l);
    let mut applied = 1;
    ensure(index(r, a, b) == index(r, b, a), || format!("symmetry fails at {a} {b}"))?;
    let c_full = kostant_cascade(r, full);
    let c_a = kostant_cascade(r, a);
    // Index shift: π″ = b ∩ a ⊂ π′ = a, assuming K_{π′} ⊂ K_π.
    if c_a.nodes.iter().all(|n| c_full.node_with_support(n.support).is_some()) {
        let sub = a.intersection(b);
        let lhs = index(r, sub, a);
        let rhs = index(r, sub, full) + c_full.len() - c_a.len();
        ensure(lhs == rhs, || format!("index shift fails at {sub} ⊂ {a}: {lhs} vs {rhs}"))?;
        applied += 1;
    }
    if orthogonal(r, a, b) {
        let meet = span_dim(r, &[a, full]) + span_dim(r, &[b, full]) - span_dim(r, &[a, b, full]);
        let lhs = index(r, a.union(b), full) as i64;
        let rhs = index(r, a, full) as i64 + index(r, b, full) as i64 - (l + c_full.len()) as i64 + 2 * meet as i64;
        ensure(lhs == rhs, || format!("additivity fails at {a} {b}: {lhs} vs {rhs}"))?;
        applied += 1;
    }
    Ok(applied)
}

fn c9_index_identities() -> Result<String, String> {
    let f4 = rs(Family::F, 4);
    let mut checks = 0;
    for a in RootSubset::all(4) {
        for b in RootSubset::all(4) {
            checks += identities(&f4, a, b)?;
        }
    }
    let e7 = rs(Family::E, 7);
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for i in 0..E7_IDENTITY_PAIRS {
        let a = RootSubset(rng.random_range(0..128));
        // Every other pair is made orthogonal so the additivity identity is exercised.
        let b = if i % 2 == 0 {
            let blocked = a.positions().fold(a, |acc, p| (0..7).filter(|&j| e7.adjacent(p, j)).fold(acc, |s, j| s.union(RootSubset::single(j))));
            RootSubset(rng.random_range(0..128u16) & !blocked.0 & 0x7f)
        } else {
            RootSubset(rng.random_range(0..128))
        };
        checks += identities(&e7, a, b)?;
    }
    Ok(format!("{checks} identity instances (F4 exhaustive, {E7_IDENTITY_PAIRS} E7 pairs)"))
}

fn c10_generic_regularity() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut equal = 0;
    for draw in 0..REGULARITY_DRAWS {
        let (f, l) = if draw % 2 == 0 { (Family::F, 4) } else { (Family::E, 6) };
        let r = rs(f, l);
        let s = spec(&r, RootSubset(rng.random_range(0..1u16 << l)), RootSubset(rng.random_range(0..1u16 << l)));
        let u = build_u(&r, &s, &CoefficientVector::random(&r, &s, &mut rng)).unwrap();
        let d = form_stabilizer(&r, &biparabolic_basis(&r, &s).unwrap(), &u).unwrap().dim();
        let i = seaweed_index(&r, &s).unwrap();
        ensure(d >= i, || format!("{f:?}{l} {} {}: stabilizer {d} below index {i}", s.pi1, s.pi2))?;
        if d == i {
            equal += 1;
        }
    }
    ensure(equal >= REGULARITY_MIN_EQUAL, || format!("only {equal}/{REGULARITY_DRAWS} regular"))?;
    Ok(format!("{equal}/{REGULARITY_DRAWS} draws regular, none below the index"))
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, name: "cascade sizes", budget: secs(5), run: c1_cascade_sizes },
        Criterion { id: 2, name: "cascade structure", budget: secs(10), run: c2_cascade_structure },
        Criterion { id: 3, name: "E6 index-zero parabolics", budget: secs(5), run: c3_e6_index_zero },
        Criterion { id: 4, name: "D6 flag criterion", budget: secs(5), run: c4_d6_flags },
        Criterion { id: 5, name: "exceptional non-QR tables", budget: secs(30), run: c5_exceptional_tables },
        Criterion { id: 6, name: "E7 torus certificate", budget: secs(60), run: c6_e7_certificate },
        Criterion { id: 7, name: "certificate sweep G2/F4/E6", budget: secs(30 * 60), run: c7_certificate_sweep },
        Criterion { id: 8, name: "Chevalley basis", budget: secs(5 * 60), run: c8_chevalley },
        Criterion { id: 9, name: "index identities", budget: secs(2 * 60), run: c9_index_identities },
        Criterion { id: 10, name: "generic regularity", budget: secs(10 * 60), run: c10_generic_regularity },
    ];
    let mut failures = 0;
    for c in criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > c.budget => Err(format!("{detail}; over budget {:?}", c.budget)),
            other => other,
        };
        let (tag, detail) = match outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failures += 1;
                ("FAIL", d)
            }
        };
        println!("{tag} [{:>2}] {}: {detail} ({:.1}s)", c.id, c.name, elapsed.as_secs_f64());
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failures} criteria failed");
        ExitCode::FAILURE
    }
}
