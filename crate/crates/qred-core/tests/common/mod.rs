//! Published reference data, typed in by hand for the integration tests.
#![allow(dead_code)]

use qred_core::rootsys::{Family, RootSystem, SimpleType};
use qred_core::RootSubset;

pub fn rs(f: Family, l: usize) -> RootSystem {
    RootSystem::new(SimpleType::new(f, l).unwrap())
}

pub fn set(labels: &[usize], l: usize) -> RootSubset {
    RootSubset::from_labels(labels, l).unwrap()
}

/// Number of cascade nodes of the whole root system.
pub fn cascade_size(f: Family, l: usize) -> usize {
    match f {
        Family::A => l.div_ceil(2),
        Family::B | Family::C => l,
        Family::D => 2 * (l / 2),
        Family::G => 2,
        Family::F => 4,
        Family::E => [4, 7, 8][l - 6],
    }
}

pub fn cascade_size_types() -> Vec<(Family, usize)> {
    let mut v = vec![];
    v.extend((1..=10).map(|l| (Family::A, l)));
    v.extend((2..=10).map(|l| (Family::B, l)));
    v.extend((3..=10).map(|l| (Family::C, l)));
    v.extend((4..=10).map(|l| (Family::D, l)));
    v.extend([(Family::G, 2), (Family::F, 4), (Family::E, 6), (Family::E, 7), (Family::E, 8)]);
    v
}

/// Simple roots `α_i` (1-based) with `p^+_{{α_i}}` not quasi-reductive.
pub fn single_root_non_qr(f: Family, l: usize) -> Vec<usize> {
    match f {
        Family::A | Family::C => vec![],
        Family::B => (2..l).filter(|i| i % 2 == 0).collect(),
        Family::D => (2..l - 1).filter(|i| i % 2 == 0).collect(),
        Family::G | Family::F => vec![1],
        Family::E => match l {
            6 => vec![2],
            7 => vec![1, 4, 6],
            _ => vec![1, 4, 6, 8],
        },
    }
}

/// Connected non-quasi-reductive subsets with (index, torus dimension).
pub fn connected_non_qr(f: Family, l: usize) -> Vec<(Vec<usize>, usize, usize)> {
    let rows: &[(&[usize], usize, usize)] = match (f, l) {
        (Family::F, 4) => &[(&[1], 1, 0)],
        (Family::E, 7) => &[
            (&[1], 1, 0),
            (&[4], 1, 0),
            (&[6], 1, 0),
            (&[1, 3, 4], 2, 1),
            (&[4, 5, 6], 2, 1),
            (&[1, 3, 4, 5, 6], 3, 2),
        ],
        (Family::E, 8) => &[
            (&[1], 1, 0),
            (&[4], 1, 0),
            (&[6], 1, 0),
            (&[8], 1, 0),
            (&[1, 3, 4], 2, 1),
            (&[4, 5, 6], 2, 1),
            (&[6, 7, 8], 2, 1),
            (&[1, 3, 4, 5, 6], 3, 2),
            (&[4, 5, 6, 7, 8], 3, 2),
            (&[1, 3, 4, 5, 6, 7, 8], 4, 3),
        ],
        _ => &[],
    };
    rows.iter().map(|(s, i, t)| (s.to_vec(), *i, *t)).collect()
}

/// Non-quasi-reductive parabolics of E6 with (index, torus dimension). One
/// row is printed out of order in the source and is compared as a set.
pub fn e6_non_qr() -> Vec<(Vec<usize>, usize, usize)> {
    let rows: &[(&[usize], usize, usize)] = &[
        (&[2], 3, 2),
        (&[1, 2], 2, 1),
        (&[2, 6], 2, 1),
        (&[2, 3], 2, 1),
        (&[2, 5], 2, 1),
        (&[1, 2, 5], 1, 0),
        (&[2, 3, 6], 1, 0),
        (&[1, 2, 6], 3, 2),
        (&[2, 3, 5], 3, 2),
        (&[1, 2, 3], 2, 1),
        (&[2, 5, 6], 2, 1),
        (&[1, 2, 3, 5], 1, 0),
        (&[2, 3, 5, 6], 1, 0),
        (&[1, 2, 3, 6], 1, 0),
        (&[2, 1, 5, 6], 1, 0),
        (&[1, 2, 3, 5, 6], 3, 2),
        (&[1, 2, 3, 4, 6], 1, 0),
        (&[1, 2, 4, 5, 6], 1, 0),
    ];
    rows.iter().map(|(s, i, t)| (s.to_vec(), *i, *t)).collect()
}

/// Parabolics of E6 with index zero.
pub fn e6_index_zero() -> Vec<Vec<usize>> {
    [
        &[1, 5][..],
        &[3, 6],
        &[1, 4, 5],
        &[3, 4, 6],
        &[1, 5, 6],
        &[1, 3, 6],
        &[1, 3, 5],
        &[3, 5, 6],
        &[1, 3, 4],
        &[4, 5, 6],
        &[1, 3, 4, 5],
        &[3, 4, 5, 6],
        &[1, 2, 3, 4],
        &[2, 4, 5, 6],
    ]
    .iter()
    .map(|s| s.to_vec())
    .collect()
}

/// Non-quasi-reductive parabolics of D6.
pub fn d6_non_qr() -> Vec<Vec<usize>> {
    [
        &[2][..],
        &[4],
        &[1, 4],
        &[2, 4],
        &[2, 5],
        &[2, 6],
        &[1, 2, 4],
        &[2, 3, 4],
        &[2, 4, 5],
        &[2, 4, 6],
        &[2, 5, 6],
        &[2, 4, 5, 6],
    ]
    .iter()
    .map(|s| s.to_vec())
    .collect()
}

/// Sorted copy, for comparing rows as sets.
pub fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}
