//! Elements of the Lie algebra and the operations on them.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::RootSystem;
use crate::error::{Error, Result};
use crate::exact::Q;

/// A sparse vector over the Chevalley basis. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgebraElement {
    coords: BTreeMap<usize, Q>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(i: usize) -> Self {
        let mut e = Self::zero();
        e.coords.insert(i, Q::one());
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (usize, Q)>>(terms: I) -> Self {
        let mut e = Self::zero();
        for (i, c) in terms {
            e.add_term(i, c);
        }
        e
    }

    pub fn from_dense(v: &[Q]) -> Self {
        Self::from_terms(v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())))
    }

    pub fn to_dense(&self, dim: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); dim];
        for (&i, c) in &self.coords {
            v[i] = c.clone();
        }
        v
    }

    pub fn get(&self, i: usize) -> Q {
        self.coords.get(&i).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, i: usize, c: Q) {
        if c.is_zero() {
            return;
        }
        let e = self.coords.entry(i).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.coords.remove(&i);
        }
    }

    pub fn add_scaled(&mut self, other: &AlgebraElement, c: &Q) {
        for (&i, x) in &other.coords {
            self.add_term(i, x * c);
        }
    }

    pub fn scaled(&self, c: &Q) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    /// Number of nonzero coordinates.
    pub fn support_len(&self) -> usize {
        self.coords.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Q)> {
        self.coords.iter().map(|(&i, c)| (i, c))
    }

    fn max_index(&self) -> Option<usize> {
        self.coords.keys().next_back().copied()
    }
}

impl std::ops::Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, o: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        out.add_scaled(o, &Q::one());
        out
    }
}

impl std::ops::Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, o: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        out.add_scaled(o, &-Q::one());
        out
    }
}

/// What a basis index stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisKind {
    Root(usize),
    Cartan(usize),
}

impl RootSystem {
    /// Basis index of the root vector `x_r`.
    pub fn basis_of_root(&self, id: usize) -> usize {
        if id < self.npos {
            id
        } else {
            id + self.rank()
        }
    }

    /// Basis index of `h_i` (zero-based simple root position).
    pub fn basis_of_cartan(&self, i: usize) -> usize {
        self.npos + i
    }

    pub fn basis_kind(&self, b: usize) -> BasisKind {
        let n = self.npos;
        let l = self.rank();
        if b < n {
            BasisKind::Root(b)
        } else if b < n + l {
            BasisKind::Cartan(b - n)
        } else {
            BasisKind::Root(b - l)
        }
    }

    /// The root vector `x_r` as an element.
    pub fn x(&self, id: usize) -> AlgebraElement {
        AlgebraElement::basis(self.basis_of_root(id))
    }

    /// The coroot `h_i` as an element.
    pub fn h(&self, i: usize) -> AlgebraElement {
        AlgebraElement::basis(self.basis_of_cartan(i))
    }

    /// `h_α` for any root id, in the simple coroots.
    pub fn h_root(&self, id: usize) -> AlgebraElement {
        let (p, sign) = if id < self.npos { (id, 1) } else { (id - self.npos, -1) };
        AlgebraElement::from_terms(
            self.coroot(p)
                .iter()
                .enumerate()
                .map(|(i, &c)| (self.basis_of_cartan(i), Q::from_integer(BigInt::from(sign * c)))),
        )
    }

    /// Calls `f(k, c)` for every term `c·b_k` of `[b_i, b_j]`.
    pub fn bracket_basis_with<F: FnMut(usize, i64)>(&self, i: usize, j: usize, mut f: F) {
        match (self.basis_kind(i), self.basis_kind(j)) {
            (BasisKind::Root(r), BasisKind::Root(s)) => {
                if s == self.neg_id(r) {
                    let (p, sign) = if r < self.npos { (r, 1) } else { (s, -1) };
                    for (k, &c) in self.coroot(p).iter().enumerate() {
                        if c != 0 {
                            f(self.basis_of_cartan(k), sign * c);
                        }
                    }
                } else if let Some(t) = self.sum_id(r, s) {
                    f(self.basis_of_root(t), self.structure_constant(r, s));
                }
            }
            (BasisKind::Cartan(k), BasisKind::Root(r)) => {
                let c = self.root_pairing_simple(r, k);
                if c != 0 {
                    f(j, c);
                }
            }
            (BasisKind::Root(r), BasisKind::Cartan(k)) => {
                let c = self.root_pairing_simple(r, k);
                if c != 0 {
                    f(i, -c);
                }
            }
            (BasisKind::Cartan(_), BasisKind::Cartan(_)) => {}
        }
    }

    /// `[b_i, b_j]` as a list of terms.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<(usize, i64)> {
        let mut out = Vec::with_capacity(2);
        self.bracket_basis_with(i, j, |k, c| out.push((k, c)));
        out
    }

    fn check(&self, x: &AlgebraElement) -> Result<()> {
        match x.max_index() {
            Some(m) if m >= self.dim() => Err(Error::MixedRootSystems),
            _ => Ok(()),
        }
    }

    /// The Lie bracket, extended bilinearly from the basis.
    pub fn bracket(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
        for (i, a) in x.terms() {
            for (j, b) in y.terms() {
                let ab = a * b;
                self.bracket_basis_with(i, j, |k, c| {
                    *acc.entry(k).or_insert_with(Q::zero) += &ab * Q::from_integer(BigInt::from(c));
                });
            }
        }
        AlgebraElement::from_terms(acc)
    }

    /// `κ(b_i, b_j)` on the Chevalley basis.
    pub fn killing_basis(&self, i: usize, j: usize) -> i64 {
        match (self.basis_kind(i), self.basis_kind(j)) {
            (BasisKind::Root(r), BasisKind::Root(s)) if s == self.neg_id(r) => {
                self.kill_root[r.min(s)]
            }
            (BasisKind::Cartan(a), BasisKind::Cartan(b)) => self.kill_cartan[a][b],
            _ => 0,
        }
    }

    /// Calls `f(j, κ(b_i, b_j))` for every `j` with a nonzero value.
    pub fn killing_partners<F: FnMut(usize, i64)>(&self, i: usize, mut f: F) {
        match self.basis_kind(i) {
            BasisKind::Root(r) => {
                let j = self.basis_of_root(self.neg_id(r));
                f(j, self.kill_root[r.min(self.neg_id(r))]);
            }
            BasisKind::Cartan(a) => {
                for b in 0..self.rank() {
                    let v = self.kill_cartan[a][b];
                    if v != 0 {
                        f(self.basis_of_cartan(b), v);
                    }
                }
            }
        }
    }

    /// The Killing form.
    pub fn killing(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<Q> {
        self.check(x)?;
        self.check(y)?;
        let mut s = Q::zero();
        for (i, a) in x.terms() {
            self.killing_partners(i, |j, v| {
                let b = y.get(j);
                if !b.is_zero() {
                    s += a * b * Q::from_integer(BigInt::from(v));
                }
            });
        }
        Ok(s)
    }

    /// Matrix of `ad x`: entry `[k][j]` is the coefficient of `b_k` in `[x, b_j]`.
    #[allow(clippy::needless_range_loop)]
    pub fn ad_matrix(&self, x: &AlgebraElement) -> Result<Vec<Vec<Q>>> {
        self.check(x)?;
        let n = self.dim();
        let mut m = vec![vec![Q::zero(); n]; n];
        for (i, a) in x.terms() {
            for j in 0..n {
                self.bracket_basis_with(i, j, |k, c| {
                    m[k][j] += a * Q::from_integer(BigInt::from(c));
                });
            }
        }
        Ok(m)
    }

    /// `ad x` on integer coordinates, for an element with integer coordinates.
    #[allow(clippy::needless_range_loop)]
    pub fn ad_matrix_int(&self, x: &[(usize, BigInt)]) -> Vec<Vec<BigInt>> {
        let n = self.dim();
        let mut m = vec![vec![BigInt::zero(); n]; n];
        for (i, a) in x {
            for j in 0..n {
                self.bracket_basis_with(*i, j, |k, c| {
                    m[k][j] += a * c;
                });
            }
        }
        m
    }

    /// `tr(ad b_i ∘ ad b_j)` computed from the brackets.
    pub fn trace_form_basis(&self, i: usize, j: usize) -> i64 {
        let mut t = 0;
        for k in 0..self.dim() {
            self.bracket_basis_with(j, k, |m, c| {
                self.bracket_basis_with(i, m, |kk, d| {
                    if kk == k {
                        t += c * d;
                    }
                });
            });
        }
        t
    }

    pub(super) fn fill_killing(&mut self) {
        let l = self.rank();
        self.kill_root = (0..self.npos)
            .map(|p| self.trace_form_basis(self.basis_of_root(p), self.basis_of_root(p + self.npos)))
            .collect();
        self.kill_cartan = (0..l)
            .map(|a| {
                (0..l).map(|b| self.trace_form_basis(self.basis_of_cartan(a), self.basis_of_cartan(b))).collect()
            })
            .collect();
    }
}
