//! Simple root systems and their Chevalley bases.
//!
//! Roots are integer coefficient vectors over the simple roots, numbered as in
//! Bourbaki except for G2, where `α_1` is the long simple root. Positive roots
//! are ordered by height and then by decreasing coefficient vector, which puts
//! `α_1 ≺ α_2 ≺ …`. Structure constants are fixed by declaring `N_{γ,δ} = p+1`
//! on every extraspecial pair and propagating through the usual relations.

mod algebra;
mod dynkin;

pub use algebra::AlgebraElement;
pub use dynkin::{identify_subsystem, SubsystemType};

use std::cmp::Reverse;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::subset::RootSubset;

/// The seven families of simple Lie algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(s: &str) -> Result<Family> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            _ => Err(Error::UnknownFamily(s.to_string())),
        }
    }

    pub fn is_exceptional(self) -> bool {
        matches!(self, Family::E | Family::F | Family::G)
    }
}

/// A simple type such as `E7`, with the rank bounds enforced on construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        // Subsets are stored as 16-bit masks.
        if !ok || rank > 16 {
            return Err(Error::InvalidType { family: family.letter(), rank });
        }
        Ok(SimpleType { family, rank })
    }

    /// Parses `"E7"`, `"e 7"` or `"B10"`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(|| Error::Parse("empty type".into()))?;
        let family = Family::from_letter(&letter.to_string())?;
        let rank = chars
            .as_str()
            .trim()
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad rank in {s:?}")))?;
        Self::new(family, rank)
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// A root written in the basis of simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root {
    coeffs: Vec<i32>,
}

impl Root {
    /// Wraps a coefficient vector. Membership in a root system is checked by
    /// [`RootSystem::root_id`].
    pub fn from_coeffs(coeffs: Vec<i32>) -> Self {
        Root { coeffs }
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.coeffs
    }

    pub fn height(&self) -> i32 {
        self.coeffs.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    pub fn neg(&self) -> Root {
        Root { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    /// Simple roots occurring with a nonzero coefficient.
    pub fn support(&self) -> RootSubset {
        let mut s = RootSubset::EMPTY;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                s.insert(i);
            }
        }
        s
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", body.join(","))
    }
}

const NONE: u32 = u32::MAX;

/// Immutable tables for one simple type: roots, Cartan matrix, structure
/// constants and the Killing form on the Chevalley basis.
///
/// Basis layout: positive root vectors `x_{β_0}..x_{β_{N-1}}`, then the
/// coroots `h_1..h_l`, then `x_{-β_0}..x_{-β_{N-1}}`. Root ids follow the
/// same pattern without the Cartan block: id `p < N` is `β_p` and id `N + p`
/// is `-β_p`.
#[derive(Debug)]
pub struct RootSystem {
    ty: SimpleType,
    sq: Vec<i64>,
    gram: Vec<Vec<i64>>,
    cartan: Vec<Vec<i64>>,
    roots: Vec<Root>,
    lookup: HashMap<Vec<i32>, usize>,
    npos: usize,
    sum_table: Vec<u32>,
    n_table: Vec<i8>,
    coroots: Vec<Vec<i64>>,
    root_pairings: Vec<Vec<i64>>,
    kill_root: Vec<i64>,
    kill_cartan: Vec<Vec<i64>>,
}

/// Squared lengths of the simple roots and the edges of the Dynkin diagram.
fn dynkin_data(t: SimpleType) -> (Vec<i64>, Vec<(usize, usize)>) {
    let l = t.rank;
    let chain = |n: usize| (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
    match t.family {
        Family::A => (vec![2; l], chain(l)),
        Family::B => {
            let mut sq = vec![4; l];
            sq[l - 1] = 2;
            (sq, chain(l))
        }
        Family::C => {
            let mut sq = vec![2; l];
            sq[l - 1] = 4;
            (sq, chain(l))
        }
        Family::D => {
            let mut edges = chain(l - 1);
            edges.push((l - 3, l - 1));
            (vec![2; l], edges)
        }
        Family::E => {
            let mut edges = vec![(0, 2), (1, 3)];
            for i in 2..l - 1 {
                edges.push((i, i + 1));
            }
            (vec![2; l], edges)
        }
        Family::F => (vec![4, 4, 2, 2], chain(4)),
        Family::G => (vec![6, 2], chain(2)),
    }
}

impl RootSystem {
    /// Builds all tables for `t`.
    pub fn new(t: SimpleType) -> RootSystem {
        let l = t.rank;
        let (sq, edges) = dynkin_data(t);
        let mut gram = vec![vec![0i64; l]; l];
        for i in 0..l {
            gram[i][i] = sq[i];
        }
        for &(i, j) in &edges {
            let v = -sq[i].max(sq[j]) / 2;
            gram[i][j] = v;
            gram[j][i] = v;
        }
        let cartan: Vec<Vec<i64>> = (0..l)
            .map(|i| (0..l).map(|j| 2 * gram[i][j] / gram[j][j]).collect())
            .collect();

        let positives = generate_positive_roots(l, &cartan);
        let npos = positives.len();
        let mut roots: Vec<Root> = positives.iter().map(|c| Root::from_coeffs(c.clone())).collect();
        roots.extend(positives.iter().map(|c| Root::from_coeffs(c.iter().map(|x| -x).collect())));
        let lookup = roots.iter().enumerate().map(|(i, r)| (r.coeffs.clone(), i)).collect();

        let mut rs = RootSystem {
            ty: t,
            sq,
            gram,
            cartan,
            roots,
            lookup,
            npos,
            sum_table: Vec::new(),
            n_table: Vec::new(),
            coroots: Vec::new(),
            root_pairings: Vec::new(),
            kill_root: Vec::new(),
            kill_cartan: Vec::new(),
        };
        rs.fill_sums();
        rs.fill_structure_constants();
        rs.coroots = (0..npos).map(|p| rs.coroot_coeffs(p)).collect();
        rs.root_pairings = (0..2 * npos)
            .map(|r| (0..l).map(|i| rs.pairing_simple(rs.roots[r].coeffs(), i)).collect())
            .collect();
        rs.fill_killing();
        rs
    }

    /// A process-wide shared instance per type; construction happens once.
    pub fn shared(t: SimpleType) -> Arc<RootSystem> {
        static CACHE: OnceLock<Mutex<HashMap<SimpleType, Arc<RootSystem>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(rs) = cache.lock().expect("root system cache poisoned").get(&t) {
            return rs.clone();
        }
        let rs = Arc::new(RootSystem::new(t));
        cache.lock().expect("root system cache poisoned").entry(t).or_insert(rs).clone()
    }

    fn fill_sums(&mut self) {
        let n2 = 2 * self.npos;
        let mut table = vec![NONE; n2 * n2];
        let mut buf = vec![0i32; self.rank()];
        for r in 0..n2 {
            for s in 0..n2 {
                for (k, b) in buf.iter_mut().enumerate() {
                    *b = self.roots[r].coeffs[k] + self.roots[s].coeffs[k];
                }
                if let Some(&id) = self.lookup.get(&buf) {
                    table[r * n2 + s] = id as u32;
                }
            }
        }
        self.sum_table = table;
    }

    fn fill_structure_constants(&mut self) {
        let n = self.npos;
        // Constants on pairs of positive roots; the rest follows from them.
        let mut pos = vec![0i64; n * n];
        for xi in 0..n {
            if self.roots[xi].height() < 2 {
                continue;
            }
            let pairs: Vec<(usize, usize)> = (0..n)
                .filter_map(|a| {
                    let b = self.diff_id(xi, a)?;
                    (b < n && a < b).then_some((a, b))
                })
                .collect();
            let (gamma, delta) = pairs[0];
            let p = self.string_down(gamma, delta) as i64;
            pos[gamma * n + delta] = p + 1;
            pos[delta * n + gamma] = -(p + 1);
            let len_xi = self.root_len(xi);
            let n_gd = Rational64::from_integer(p + 1);
            for &(a, b) in &pairs[1..] {
                let mut acc = Rational64::from_integer(0);
                // Jacobi on x_a, x_b, x_{-γ}.
                let mg = gamma + n;
                let md = delta + n;
                if let Some(bg) = self.sum_id(b, mg) {
                    let t = self.n_from_positive(&pos, b, mg) * self.n_from_positive(&pos, a, md);
                    acc += t / self.root_len(bg);
                }
                if let Some(ag) = self.sum_id(a, mg) {
                    let t = self.n_from_positive(&pos, mg, a) * self.n_from_positive(&pos, b, md);
                    acc += t / self.root_len(ag);
                }
                let v = acc * len_xi / n_gd;
                assert!(v.is_integer(), "non-integral structure constant in {}", self.ty);
                let v = v.to_integer();
                pos[a * n + b] = v;
                pos[b * n + a] = -v;
            }
        }
        let n2 = 2 * n;
        let mut table = vec![0i8; n2 * n2];
        for r in 0..n2 {
            for s in 0..n2 {
                if self.sum_id(r, s).is_some() {
                    let v = self.n_from_positive(&pos, r, s);
                    assert!(v.is_integer());
                    table[r * n2 + s] = v.to_integer() as i8;
                }
            }
        }
        self.n_table = table;
    }

    /// `N_{r,s}` for arbitrary roots, given the constants on positive pairs of
    /// smaller height. Uses `N_{-α,-β} = -N_{α,β}` and, for `a+b+c = 0`,
    /// `N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b)`.
    fn n_from_positive(&self, pos: &[i64], r: usize, s: usize) -> Rational64 {
        let n = self.npos;
        let Some(sum) = self.sum_id(r, s) else {
            return Rational64::from_integer(0);
        };
        match (r < n, s < n) {
            (true, true) => Rational64::from_integer(pos[r * n + s]),
            (false, false) => Rational64::from_integer(-pos[(r - n) * n + (s - n)]),
            (true, false) => {
                let c = self.neg_id(sum);
                if c < n {
                    Rational64::from_integer(pos[c * n + r]) * self.root_len(c) / self.root_len(s)
                } else {
                    Rational64::from_integer(-pos[(s - n) * n + (c - n)]) * self.root_len(c)
                        / self.root_len(r)
                }
            }
            (false, true) => -self.n_from_positive(pos, s, r),
        }
    }

    fn coroot_coeffs(&self, p: usize) -> Vec<i64> {
        let len = self.root_len(p);
        self.roots[p]
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, &k)| {
                let v = k as i64 * self.sq[i];
                debug_assert_eq!(v % len, 0);
                v / len
            })
            .collect()
    }

    pub fn simple_type(&self) -> SimpleType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    /// Number of positive roots.
    pub fn num_positive(&self) -> usize {
        self.npos
    }

    /// Dimension of the Lie algebra.
    pub fn dim(&self) -> usize {
        2 * self.npos + self.rank()
    }

    /// `cartan()[i][j] = ⟨α_i, α_j^∨⟩`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Squared lengths of the simple roots (short roots have length 2).
    pub fn simple_lengths(&self) -> &[i64] {
        &self.sq
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.npos]
    }

    /// All roots, positive ones first.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, id: usize) -> &Root {
        &self.roots[id]
    }

    pub fn root_id(&self, coeffs: &[i32]) -> Option<usize> {
        self.lookup.get(coeffs).copied()
    }

    pub fn require_root(&self, coeffs: &[i32]) -> Result<usize> {
        self.root_id(coeffs).ok_or_else(|| Error::NotARoot(coeffs.to_vec()))
    }

    pub fn neg_id(&self, id: usize) -> usize {
        if id < self.npos {
            id + self.npos
        } else {
            id - self.npos
        }
    }

    pub fn is_positive_id(&self, id: usize) -> bool {
        id < self.npos
    }

    /// Root id of `r + s` when it is a root.
    pub fn sum_id(&self, r: usize, s: usize) -> Option<usize> {
        let v = self.sum_table[r * 2 * self.npos + s];
        (v != NONE).then_some(v as usize)
    }

    /// Root id of `r - s` when it is a root.
    pub fn diff_id(&self, r: usize, s: usize) -> Option<usize> {
        self.sum_id(r, self.neg_id(s))
    }

    /// Signed structure constant `N_{r,s}`, zero when `r + s` is not a root.
    pub fn structure_constant(&self, r: usize, s: usize) -> i64 {
        self.n_table[r * 2 * self.npos + s] as i64
    }

    /// Largest `p` such that `s - p·r` is a root.
    pub fn string_down(&self, r: usize, s: usize) -> usize {
        let mut p = 0;
        let mut cur = s;
        while let Some(next) = self.diff_id(cur, r) {
            p += 1;
            cur = next;
        }
        p
    }

    /// `(r, r)` for a root id.
    pub fn root_len(&self, id: usize) -> i64 {
        let c = self.roots[id].coeffs();
        self.inner(c, c)
    }

    /// The invariant inner product of two integral combinations of simple roots.
    pub fn inner(&self, a: &[i32], b: &[i32]) -> i64 {
        let mut s = 0;
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj != 0 {
                    s += ai as i64 * bj as i64 * self.gram[i][j];
                }
            }
        }
        s
    }

    fn pairing_simple(&self, lambda: &[i32], i: usize) -> i64 {
        lambda.iter().enumerate().map(|(j, &c)| c as i64 * self.cartan[j][i]).sum()
    }

    /// `⟨λ, α^∨⟩ = 2(λ, α)/(α, α)` for an integral weight `λ` over the simple roots.
    pub fn pairing(&self, lambda: &[i32], alpha: &Root) -> i64 {
        let num = 2 * self.inner(lambda, alpha.coeffs());
        let den = self.inner(alpha.coeffs(), alpha.coeffs());
        debug_assert_eq!(num % den, 0);
        num / den
    }

    /// `⟨r, α_i^∨⟩` for a root id and a simple root position.
    pub fn root_pairing_simple(&self, id: usize, i: usize) -> i64 {
        self.root_pairings[id][i]
    }

    /// `α + β` when it is a root.
    pub fn root_sum(&self, a: &Root, b: &Root) -> Option<Root> {
        let s: Vec<i32> = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        self.root_id(&s).map(|id| self.roots[id].clone())
    }

    /// Coordinates of `h_α` in the simple coroots, for a positive root id.
    pub fn coroot(&self, p: usize) -> &[i64] {
        &self.coroots[p]
    }

    /// True when the Dynkin subdiagram on `s` is connected (and nonempty).
    pub fn is_connected(&self, s: RootSubset) -> bool {
        let comps = self.components(s);
        comps.len() == 1
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.cartan[i][j] != 0
    }

    /// Connected components ordered by their smallest simple root.
    pub fn components(&self, s: RootSubset) -> Vec<RootSubset> {
        let mut seen = RootSubset::EMPTY;
        let mut out = Vec::new();
        for start in s.positions() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = RootSubset::single(start);
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                for j in s.positions() {
                    if !comp.contains(j) && self.adjacent(i, j) {
                        comp.insert(j);
                        stack.push(j);
                    }
                }
            }
            seen = seen.union(comp);
            out.push(comp);
        }
        out
    }

    /// Positive root ids whose support lies in `s`.
    pub fn positive_ids_in(&self, s: RootSubset) -> Vec<usize> {
        (0..self.npos).filter(|&p| self.roots[p].support().is_subset_of(s)).collect()
    }

    /// Root id of the highest root of the subsystem generated by a connected `s`.
    pub fn highest_root_id(&self, s: RootSubset) -> Result<usize> {
        if s.is_empty() {
            return Err(Error::EmptySubset);
        }
        if !self.is_connected(s) {
            return Err(Error::Disconnected(s.to_string()));
        }
        // The last root in the order among those supported in s has maximal height.
        Ok(*self.positive_ids_in(s).last().expect("simple roots lie in s"))
    }

    /// The highest root of the subsystem generated by a connected `s`.
    pub fn highest_root(&self, s: RootSubset) -> Result<Root> {
        Ok(self.roots[self.highest_root_id(s)?].clone())
    }
}

/// Positive roots by successive simple-root strings, sorted by height and then
/// by decreasing coefficient vector.
fn generate_positive_roots(l: usize, cartan: &[Vec<i64>]) -> Vec<Vec<i32>> {
    let simple: Vec<Vec<i32>> = (0..l)
        .map(|i| {
            let mut v = vec![0; l];
            v[i] = 1;
            v
        })
        .collect();
    let mut all: Vec<Vec<i32>> = simple.clone();
    let mut known: std::collections::HashSet<Vec<i32>> = simple.iter().cloned().collect();
    let mut level = simple;
    while !level.is_empty() {
        let mut next = Vec::new();
        for beta in &level {
            for i in 0..l {
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pair: i64 = (0..l).map(|j| beta[j] as i64 * cartan[j][i]).sum();
                if p - pair > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        level = next;
    }
    all.sort_by_key(|c| (c.iter().sum::<i32>(), Reverse(c.clone())));
    all
}
