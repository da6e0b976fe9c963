use std::collections::BTreeSet;

use qred_core::cascade::*;
use qred_core::rootsys::{Family, RootSystem, SimpleType};
use qred_core::RootSubset;

fn rs(f: Family, l: usize) -> RootSystem {
    RootSystem::new(SimpleType::new(f, l).unwrap())
}

fn full(r: &RootSystem) -> Cascade {
    kostant_cascade(r, RootSubset::full(r.rank()))
}

fn set(labels: &[usize], l: usize) -> RootSubset {
    RootSubset::from_labels(labels, l).unwrap()
}

/// Root with coefficient `c` on the 1-based labels `from..=to`.
fn run(l: usize, parts: &[(usize, usize, i32)]) -> Vec<i32> {
    let mut v = vec![0; l];
    for &(from, to, c) in parts {
        for k in from..=to {
            v[k - 1] += c;
        }
    }
    v
}

fn eps_set(r: &RootSystem) -> BTreeSet<Vec<i32>> {
    full(r).eps_roots(r).into_iter().map(|x| x.coeffs().to_vec()).collect()
}

fn expected_k(f: Family, l: usize) -> usize {
    match f {
        Family::A => l.div_ceil(2),
        Family::B | Family::C => l,
        Family::D => 2 * (l / 2),
        Family::G => 2,
        Family::F => 4,
        Family::E => [4, 7, 8][l - 6],
    }
}

fn table_types() -> Vec<(Family, usize)> {
    let mut v = vec![];
    v.extend((1..=10).map(|l| (Family::A, l)));
    v.extend((2..=10).map(|l| (Family::B, l)));
    v.extend((3..=10).map(|l| (Family::C, l)));
    v.extend((4..=10).map(|l| (Family::D, l)));
    v.extend([(Family::G, 2), (Family::F, 4), (Family::E, 6), (Family::E, 7), (Family::E, 8)]);
    v
}

#[test]
fn cascade_sizes_follow_the_closed_forms() {
    for (f, l) in table_types() {
        assert_eq!(full(&rs(f, l)).len(), expected_k(f, l), "{f:?}{l}");
    }
}

#[test]
fn classical_eps_sets_match_the_listed_formulas() {
    for l in 1..=9usize {
        let want: BTreeSet<_> = (1..=l.div_ceil(2)).map(|i| run(l, &[(i, l + 1 - i, 1)])).collect();
        assert_eq!(eps_set(&rs(Family::A, l)), want, "A{l}");
    }
    for l in 2..=9 {
        let want: BTreeSet<_> = (1..=l)
            .map(|i| if i % 2 == 0 { run(l, &[(i - 1, i - 1, 1), (i, l, 2)]) } else { run(l, &[(i, i, 1)]) })
            .collect();
        assert_eq!(eps_set(&rs(Family::B, l)), want, "B{l}");
    }
    for l in 3..=9 {
        let mut want: BTreeSet<_> = (1..l).map(|i| run(l, &[(i, l - 1, 2), (l, l, 1)])).collect();
        want.insert(run(l, &[(l, l, 1)]));
        assert_eq!(eps_set(&rs(Family::C, l)), want, "C{l}");
    }
    for l in 4..=9 {
        let mut want = BTreeSet::new();
        for i in 1..l {
            if i % 2 == 0 && i < l - 1 {
                want.insert(run(l, &[(i - 1, i - 1, 1), (i, l - 2, 2), (l - 1, l, 1)]));
            } else if i % 2 == 1 {
                want.insert(run(l, &[(i, i, 1)]));
            }
        }
        if l % 2 == 0 {
            want.insert(run(l, &[(l, l, 1)]));
        } else {
            want.insert(run(l, &[(l - 2, l, 1)]));
        }
        assert_eq!(eps_set(&rs(Family::D, l)), want, "D{l}");
    }
}

#[test]
fn g2_and_f4_eps_sets() {
    let g2: BTreeSet<_> = [vec![2, 3], vec![0, 1]].into_iter().collect();
    assert_eq!(eps_set(&rs(Family::G, 2)), g2);
    let f4: BTreeSet<_> =
        [vec![2, 3, 4, 2], vec![0, 1, 2, 2], vec![0, 1, 2, 0], vec![0, 1, 0, 0]].into_iter().collect();
    assert_eq!(eps_set(&rs(Family::F, 4)), f4);
    for l in 6..=8 {
        let r = rs(Family::E, l);
        let c = full(&r);
        assert_eq!(c.nodes[0].eps, r.highest_root_id(RootSubset::full(l)).unwrap());
    }
}

#[test]
fn strong_orthogonality_and_gamma_partition_everywhere() {
    for (f, l) in table_types() {
        let r = rs(f, l);
        let c = full(&r);
        let eps = c.eps_ids();
        for (i, &a) in eps.iter().enumerate() {
            for &b in &eps[i + 1..] {
                assert!(r.sum_id(a, b).is_none() && r.diff_id(a, b).is_none(), "{f:?}{l}");
                assert_eq!(r.pairing(r.root(a).coeffs(), r.root(b)), 0);
            }
        }
        let mut seen = vec![0usize; r.num_positive()];
        for n in &c.nodes {
            assert_eq!(n.eps, r.highest_root_id(n.support).unwrap());
            for &g in &n.gamma {
                seen[g] += 1;
            }
            assert_eq!(n.gamma0().count() + 1, n.gamma.len());
        }
        assert!(seen.iter().all(|&k| k == 1), "{f:?}{l}");
    }
}

#[test]
fn gamma_sets_are_heisenberg() {
    // Two Γ roots can only sum to ε_K, and every non-ε root of Γ_K pairs with ε_K − itself.
    for (f, l) in [(Family::F, 4), (Family::E, 7), (Family::B, 5), (Family::G, 2)] {
        let r = rs(f, l);
        for n in &full(&r).nodes {
            for &a in &n.gamma {
                for &b in &n.gamma {
                    if let Some(s) = r.sum_id(a, b) {
                        assert_eq!(s, n.eps);
                    }
                }
            }
            for a in n.gamma0() {
                let partner = r.diff_id(n.eps, a).expect("ε_K − α is a root");
                assert!(n.gamma.contains(&partner));
            }
        }
    }
}

#[test]
fn e6_cascade_shape() {
    let r = rs(Family::E, 6);
    let c = full(&r);
    assert_eq!((c.len(), r.rank()), (4, 6));
    let (e1, e2) = (c.nodes[0].eps, c.nodes[1].eps);
    assert_eq!(r.pairing(r.root(e2).coeffs(), r.root(e1)), 0);
    assert_eq!(k_plus(&r, &c, 0).unwrap(), k_plus(&r, &c, 5).unwrap());
    let node = &c.nodes[k_plus(&r, &c, 0).unwrap()];
    assert_eq!(node.support, set(&[1, 3, 4, 5, 6], 6));
}

#[test]
fn k_minus_examples() {
    let r = rs(Family::E, 7);
    let c = full(&r);
    let a = r.root_id(&[0, 0, 0, 1, 1, 1, 0]).unwrap();
    assert!(k_minus_set(&r, &c, a).unwrap().len() >= 3);
}

#[test]
fn half_differences_follow_the_listed_sets() {
    for (f, l) in [(Family::A, 5), (Family::D, 5), (Family::E, 6), (Family::E, 7), (Family::E, 8)] {
        assert!(tilde_delta_plus(&rs(f, l)).is_empty(), "{f:?}{l}");
    }
    assert_eq!(tilde_delta_plus(&rs(Family::G, 2)).len(), 1);
    let f4 = rs(Family::F, 4);
    let got: BTreeSet<Vec<i32>> =
        tilde_delta_plus(&f4).iter().map(|h| f4.root(h.root).coeffs().to_vec()).collect();
    let want: BTreeSet<Vec<i32>> = [[1, 1, 1, 0], [1, 1, 1, 1], [1, 1, 2, 1], [0, 0, 0, 1], [0, 0, 1, 1], [0, 0, 1, 0]]
        .iter()
        .map(|a| a.to_vec())
        .collect();
    assert_eq!(got, want);
    for l in 2..=8 {
        assert_eq!(tilde_delta_plus(&rs(Family::B, l)).len(), l / 2, "B{l}");
    }
    for l in 3..=8 {
        assert_eq!(tilde_delta_plus(&rs(Family::C, l)).len(), l * (l - 1) / 2, "C{l}");
    }
}

#[test]
fn half_differences_name_their_plus_and_minus_nodes() {
    for (f, l) in [(Family::F, 4), (Family::G, 2), (Family::B, 6), (Family::C, 5)] {
        let r = rs(f, l);
        let c = full(&r);
        for h in tilde_delta_plus(&r) {
            assert_eq!(k_plus(&r, &c, h.root).unwrap(), h.plus);
            assert_eq!(k_minus_set(&r, &c, h.root).unwrap(), vec![h.minus]);
            let two_a: Vec<i32> = r.root(h.root).coeffs().iter().map(|x| 2 * x).collect();
            let lhs: Vec<i32> = two_a.iter().zip(r.root(c.nodes[h.minus].eps).coeffs()).map(|(a, b)| a + b).collect();
            assert_eq!(lhs.as_slice(), r.root(c.nodes[h.plus].eps).coeffs());
        }
    }
}

#[test]
fn well_interlacing_examples() {
    let r = rs(Family::E, 6);
    let pi = RootSubset::full(6);
    for s in RootSubset::all(6) {
        assert!(well_interlaced(&r, RootSubset::EMPTY, s).well_interlaced);
    }
    for p1 in [set(&[2, 3, 4], 6), set(&[2, 3, 4, 6], 6), set(&[1, 2, 3, 4], 6)] {
        let w = well_interlaced(&r, p1, pi);
        // Independent up to shared nodes: the only overlap is the common ε's.
        assert!(w.well_interlaced);
        assert_eq!(w.dim_intersection, w.common_nodes);
    }
    assert!(!well_interlaced(&r, set(&[2, 4], 6), pi).well_interlaced);
}

#[test]
fn tilde_pi_of_exceptional_and_classical_systems() {
    use qred_core::rootsys::identify_subsystem;
    for (f, l, fam, rank, missing) in [
        (Family::F, 4, Family::C, 3, 0),
        (Family::E, 6, Family::A, 5, 1),
        (Family::E, 7, Family::D, 6, 0),
        (Family::E, 8, Family::E, 7, 7),
        (Family::G, 2, Family::A, 1, 0),
    ] {
        let r = rs(f, l);
        let (t, single) = tilde_pi(&r, RootSubset::full(l)).unwrap();
        let ty = identify_subsystem(&r, t).unwrap();
        assert_eq!((ty.family, ty.rank, single), (fam, rank, Some(missing)), "{f:?}{l}");
    }
    let r = rs(Family::A, 4);
    assert!(tilde_pi(&r, set(&[1, 3], 4)).is_err());
}

#[test]
fn condition_star_examples() {
    // k_π = rk g: always satisfied.
    for (f, l) in [(Family::F, 4), (Family::E, 7), (Family::G, 2)] {
        let r = rs(f, l);
        for a in RootSubset::all(l) {
            for b in RootSubset::all(l) {
                if let Ok(v) = condition_star(&r, a, b) {
                    assert!(v, "{f:?}{l} {a} {b}");
                }
            }
        }
    }
    let r = rs(Family::E, 6);
    assert!(!condition_star(&r, set(&[1, 2, 3, 4], 6), set(&[6], 6)).unwrap());
    assert!(!condition_star(&r, set(&[2, 4, 5, 6], 6), set(&[1], 6)).unwrap());
    // Connected sets containing α_2, against every set they do not touch.
    for p1 in RootSubset::all(6) {
        if !p1.contains(1) || !r.is_connected(p1) {
            continue;
        }
        for p2 in RootSubset::all(6) {
            let Ok(v) = condition_star(&r, p1, p2) else { continue };
            let exception = (p1 == set(&[1, 2, 3, 4], 6) && p2 == set(&[6], 6))
                || (p1 == set(&[2, 4, 5, 6], 6) && p2 == set(&[1], 6));
            assert_eq!(v, !exception, "{p1} {p2}");
        }
    }
}
