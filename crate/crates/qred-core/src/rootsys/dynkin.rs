//! Recognising the type of a connected subdiagram and numbering it.

use super::{Family, RootSystem};
use crate::error::{Error, Result};
use crate::subset::RootSubset;

/// The type of a connected subset of simple roots, with the ambient positions
/// of its simple roots listed in the standard numbering of that type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsystemType {
    pub family: Family,
    pub rank: usize,
    pub order: Vec<usize>,
}

impl SubsystemType {
    /// Ambient subset corresponding to a subset in the subsystem's own numbering.
    pub fn to_ambient(&self, local: RootSubset) -> RootSubset {
        let mut s = RootSubset::EMPTY;
        for p in local.positions() {
            s.insert(self.order[p]);
        }
        s
    }

    /// Subset in the subsystem's own numbering for an ambient subset inside it.
    pub fn to_local(&self, ambient: RootSubset) -> RootSubset {
        let mut s = RootSubset::EMPTY;
        for (k, &p) in self.order.iter().enumerate() {
            if ambient.contains(p) {
                s.insert(k);
            }
        }
        s
    }
}

fn walk(rs: &RootSystem, s: RootSubset, start: usize, avoid: Option<usize>) -> Vec<usize> {
    let mut path = vec![start];
    let mut prev = avoid;
    let mut cur = start;
    loop {
        let next = s.positions().find(|&j| rs.adjacent(cur, j) && Some(j) != prev && !path.contains(&j));
        match next {
            Some(j) => {
                prev = Some(cur);
                cur = j;
                path.push(j);
            }
            None => return path,
        }
    }
}

/// Identifies a connected subset of simple roots.
pub fn identify_subsystem(rs: &RootSystem, s: RootSubset) -> Result<SubsystemType> {
    if s.is_empty() {
        return Err(Error::EmptySubset);
    }
    if !rs.is_connected(s) {
        return Err(Error::Disconnected(s.to_string()));
    }
    let nodes: Vec<usize> = s.positions().collect();
    let n = nodes.len();
    let deg = |i: usize| nodes.iter().filter(|&&j| rs.adjacent(i, j)).count();
    let len = |i: usize| rs.simple_lengths()[i];
    let bond = |i: usize, j: usize| rs.cartan()[i][j] * rs.cartan()[j][i];

    if n == 1 {
        return Ok(SubsystemType { family: Family::A, rank: 1, order: nodes });
    }
    if let Some(&branch) = nodes.iter().find(|&&i| deg(i) == 3) {
        let mut arms: Vec<Vec<usize>> = nodes
            .iter()
            .filter(|&&j| rs.adjacent(branch, j))
            .map(|&j| walk(rs, s, j, Some(branch)))
            .collect();
        arms.sort_by_key(|a| (a.len(), a[0]));
        let lens: Vec<usize> = arms.iter().map(|a| a.len()).collect();
        if lens[0] == 1 && lens[1] == 1 {
            let mut order: Vec<usize> = arms[2].iter().rev().copied().collect();
            order.push(branch);
            order.push(arms[0][0]);
            order.push(arms[1][0]);
            return Ok(SubsystemType { family: Family::D, rank: n, order });
        }
        if lens[0] == 1 && lens[1] == 2 {
            let mut order = vec![arms[1][1], arms[0][0], arms[1][0], branch];
            order.extend(arms[2].iter().copied());
            return Ok(SubsystemType { family: Family::E, rank: n, order });
        }
        return Err(Error::NotApplicable(format!("unrecognised diagram on {s}")));
    }
    // A path: orient it and read off multiple bonds.
    let ends: Vec<usize> = nodes.iter().copied().filter(|&i| deg(i) == 1).collect();
    let path = walk(rs, s, ends[0], None);
    let bonds: Vec<i64> = path.windows(2).map(|w| bond(w[0], w[1])).collect();
    let max_bond = *bonds.iter().max().expect("at least one edge");
    if max_bond == 1 {
        return Ok(SubsystemType { family: Family::A, rank: n, order: path });
    }
    if max_bond == 3 {
        let order = if len(path[0]) > len(path[1]) { path } else { path.into_iter().rev().collect() };
        return Ok(SubsystemType { family: Family::G, rank: 2, order });
    }
    let k = bonds.iter().position(|&b| b == 2).expect("double bond");
    if n == 4 && k == 1 {
        let order = if len(path[0]) > len(path[3]) { path } else { path.into_iter().rev().collect() };
        return Ok(SubsystemType { family: Family::F, rank: 4, order });
    }
    // Double bond at one end: it sits between the last two roots.
    let order: Vec<usize> = if k == 0 && n > 2 { path.into_iter().rev().collect() } else { path };
    let order = if n == 2 && len(order[1]) > len(order[0]) { order.into_iter().rev().collect() } else { order };
    let last = order[n - 1];
    let family = if len(last) < len(order[n - 2]) { Family::B } else { Family::C };
    Ok(SubsystemType { family, rank: n, order })
}
