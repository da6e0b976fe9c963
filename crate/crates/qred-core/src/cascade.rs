//! Kostant cascades of strongly orthogonal roots and the combinatorics built on them.

use crate::error::{Error, Result};
use crate::exact::rank_i64;
use crate::rootsys::{Root, RootSystem};
use crate::subset::RootSubset;

/// One node `K` of a cascade: a connected set of simple roots with its highest
/// root `ε_K` and the set `Γ_K` of positive roots of `K` pairing positively with `ε_K^∨`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CascadeNode {
    pub support: RootSubset,
    /// Root id of `ε_K`.
    pub eps: usize,
    /// Root ids of `Γ_K`, in root order.
    pub gamma: Vec<usize>,
}

impl CascadeNode {
    /// `Γ_K^0 = Γ_K \ {ε_K}`.
    pub fn gamma0(&self) -> impl Iterator<Item = usize> + '_ {
        self.gamma.iter().copied().filter(move |&g| g != self.eps)
    }
}

/// The cascade of a subset, nodes in depth-first order with components taken
/// by increasing simple root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cascade {
    pub source: RootSubset,
    pub nodes: Vec<CascadeNode>,
}

impl Cascade {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Root ids of the `ε_K`, in node order.
    pub fn eps_ids(&self) -> Vec<usize> {
        self.nodes.iter().map(|n| n.eps).collect()
    }

    pub fn eps_roots(&self, rs: &RootSystem) -> Vec<Root> {
        self.nodes.iter().map(|n| rs.root(n.eps).clone()).collect()
    }

    pub fn node_with_support(&self, s: RootSubset) -> Option<usize> {
        self.nodes.iter().position(|n| n.support == s)
    }

    pub fn node_with_eps(&self, eps: usize) -> Option<usize> {
        self.nodes.iter().position(|n| n.eps == eps)
    }
}

fn eps_vector(rs: &RootSystem, id: usize) -> Vec<i64> {
    rs.root(id).coeffs().iter().map(|&c| c as i64).collect()
}

/// Builds the cascade of `s`: nothing for the empty set, the union over
/// connected components otherwise, and for connected `s` the node `s` followed
/// by the cascade of the roots of `s` orthogonal to `ε_s`.
pub fn kostant_cascade(rs: &RootSystem, s: RootSubset) -> Cascade {
    let mut nodes = Vec::new();
    build(rs, s, &mut nodes);
    Cascade { source: s, nodes }
}

fn build(rs: &RootSystem, s: RootSubset, out: &mut Vec<CascadeNode>) {
    for comp in rs.components(s) {
        let eps = rs.highest_root_id(comp).expect("components are connected");
        let eps_root = rs.root(eps).clone();
        let gamma = rs
            .positive_ids_in(comp)
            .into_iter()
            .filter(|&a| rs.pairing(rs.root(a).coeffs(), &eps_root) > 0)
            .collect();
        out.push(CascadeNode { support: comp, eps, gamma });
        let mut rest = RootSubset::EMPTY;
        for i in comp.positions() {
            if rs.pairing(rs.root(i).coeffs(), &eps_root) == 0 {
                rest.insert(i);
            }
        }
        build(rs, rest, out);
    }
}

fn check_positive_in(rs: &RootSystem, c: &Cascade, alpha: usize) -> Result<()> {
    if rs.is_positive_id(alpha) && rs.root(alpha).support().is_subset_of(c.source) {
        Ok(())
    } else {
        Err(Error::NotApplicable(format!(
            "{} is not a positive root of {}",
            rs.root(alpha),
            c.source
        )))
    }
}

/// Index of the unique node `L` with `α ∈ Γ_L`.
pub fn k_plus(rs: &RootSystem, c: &Cascade, alpha: usize) -> Result<usize> {
    check_positive_in(rs, c, alpha)?;
    c.nodes
        .iter()
        .position(|n| n.gamma.contains(&alpha))
        .ok_or_else(|| Error::NotApplicable(format!("{} lies in no Γ-set", rs.root(alpha))))
}

/// Indices of the nodes `L` with `ε_L + α` a positive root of the source subsystem.
pub fn k_minus_set(rs: &RootSystem, c: &Cascade, alpha: usize) -> Result<Vec<usize>> {
    check_positive_in(rs, c, alpha)?;
    Ok(c.nodes
        .iter()
        .enumerate()
        .filter(|(_, n)| {
            rs.sum_id(n.eps, alpha)
                .is_some_and(|s| rs.is_positive_id(s) && rs.root(s).support().is_subset_of(c.source))
        })
        .map(|(i, _)| i)
        .collect())
}

/// A positive root `α = ½(ε_K − ε_{K'})` together with the two node indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HalfDifference {
    pub root: usize,
    pub plus: usize,
    pub minus: usize,
}

/// All positive roots of the source subsystem that are half the difference
/// of two cascade roots.
pub fn tilde_delta_plus_of(rs: &RootSystem, c: &Cascade) -> Vec<HalfDifference> {
    let mut out = Vec::new();
    for (i, k) in c.nodes.iter().enumerate() {
        for (j, kp) in c.nodes.iter().enumerate() {
            if i == j {
                continue;
            }
            let a = rs.root(k.eps).coeffs();
            let b = rs.root(kp.eps).coeffs();
            let diff: Vec<i32> = a.iter().zip(b).map(|(x, y)| x - y).collect();
            if diff.iter().any(|d| d % 2 != 0) {
                continue;
            }
            let half: Vec<i32> = diff.iter().map(|d| d / 2).collect();
            if let Some(id) = rs.root_id(&half) {
                if rs.is_positive_id(id) && rs.root(id).support().is_subset_of(c.source) {
                    out.push(HalfDifference { root: id, plus: i, minus: j });
                }
            }
        }
    }
    out.sort_by_key(|h| h.root);
    out
}

/// `Δ̃^+` of the whole system.
pub fn tilde_delta_plus(rs: &RootSystem) -> Vec<HalfDifference> {
    let c = kostant_cascade(rs, RootSubset::full(rs.rank()));
    tilde_delta_plus_of(rs, &c)
}

/// `dim E_{π1,π2}`: the rank of both eps-sets together.
pub fn dim_e(rs: &RootSystem, c1: &Cascade, c2: &Cascade) -> usize {
    let rows: Vec<Vec<i64>> =
        c1.nodes.iter().chain(&c2.nodes).map(|n| eps_vector(rs, n.eps)).collect();
    rank_i64(&rows, rs.rank())
}

/// The counts entering the well-interlacing condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Interlacing {
    pub dim_intersection: usize,
    pub common_nodes: usize,
    /// Nodes `M` of the first cascade with `ε_M ∈ Δ̃^+` of the second.
    pub tilde_12: usize,
    /// Nodes `N` of the second cascade with `ε_N ∈ Δ̃^+` of the first.
    pub tilde_21: usize,
    pub well_interlaced: bool,
}

/// Nodes of `a` whose root is a half difference in `b`.
pub fn tilde_nodes(rs: &RootSystem, a: &Cascade, b: &Cascade) -> Vec<(usize, HalfDifference)> {
    let halves = tilde_delta_plus_of(rs, b);
    a.nodes
        .iter()
        .enumerate()
        .filter_map(|(i, m)| halves.iter().find(|h| h.root == m.eps).map(|h| (i, *h)))
        .collect()
}

pub fn well_interlaced(rs: &RootSystem, pi1: RootSubset, pi2: RootSubset) -> Interlacing {
    let c1 = kostant_cascade(rs, pi1);
    let c2 = kostant_cascade(rs, pi2);
    let dim_intersection = c1.len() + c2.len() - dim_e(rs, &c1, &c2);
    let common_nodes = c1.nodes.iter().filter(|n| c2.node_with_support(n.support).is_some()).count();
    let tilde_12 = tilde_nodes(rs, &c1, &c2).len();
    let tilde_21 = tilde_nodes(rs, &c2, &c1).len();
    Interlacing {
        dim_intersection,
        common_nodes,
        tilde_12,
        tilde_21,
        well_interlaced: dim_intersection == common_nodes + tilde_12 + tilde_21,
    }
}

/// For connected `π′`, the union `π̃′` of the supports of all nodes below the
/// top one, and the position of the single simple root `π′ \ π̃′` when there is exactly one.
pub fn tilde_pi(rs: &RootSystem, s: RootSubset) -> Result<(RootSubset, Option<usize>)> {
    if s.is_empty() {
        return Err(Error::EmptySubset);
    }
    if !rs.is_connected(s) {
        return Err(Error::Disconnected(s.to_string()));
    }
    let c = kostant_cascade(rs, s);
    let rest = c.nodes[1..].iter().fold(RootSubset::EMPTY, |acc, n| acc.union(n.support));
    let missing = s.difference(rest);
    let single = (missing.len() == 1).then(|| missing.positions().next().expect("one element"));
    Ok((rest, single))
}

/// True when `K_π^+(α′) ≠ K_π^+(α″)` for all `α′ ∈ π′`, `α″ ∈ π″`.
pub fn condition_star(rs: &RootSystem, p1: RootSubset, p2: RootSubset) -> Result<bool> {
    let touching = !p1.intersection(p2).is_empty()
        || p1.positions().any(|i| p2.positions().any(|j| rs.adjacent(i, j)));
    if touching {
        return Err(Error::NotOrthogonal(p1.to_string(), p2.to_string()));
    }
    let c = kostant_cascade(rs, RootSubset::full(rs.rank()));
    for i in p1.positions() {
        for j in p2.positions() {
            if k_plus(rs, &c, i)? == k_plus(rs, &c, j)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
