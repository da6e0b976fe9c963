//! Standard seaweed subalgebras `q_{π1,π2}`, their index, and the explicit
//! elements used to write down stabilizers of the forms `φ_{u(a,b)}`.
//!
//! `q_{π1,π2}` is spanned by the Cartan subalgebra, the root vectors of the
//! positive roots of `Δ_{π2}` and those of the negative roots of `Δ_{π1}`; the
//! parabolic `p^+_{π′}` is `q_{π′,π}`.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cascade::{dim_e, kostant_cascade, tilde_delta_plus_of, tilde_pi, Cascade};
use crate::error::{Error, Result};
use crate::exact::{q, solve_q, Q};
use crate::rootsys::{AlgebraElement, RootSystem, SimpleType};
use crate::subset::RootSubset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BiparabolicSpec {
    pub ty: SimpleType,
    pub pi1: RootSubset,
    pub pi2: RootSubset,
}

impl BiparabolicSpec {
    pub fn new(ty: SimpleType, pi1: RootSubset, pi2: RootSubset) -> Result<Self> {
        let full = RootSubset::full(ty.rank());
        for s in [pi1, pi2] {
            if let Some(p) = s.difference(full).positions().next() {
                return Err(Error::IndexOutOfRange { index: p + 1, rank: ty.rank() });
            }
        }
        Ok(BiparabolicSpec { ty, pi1, pi2 })
    }

    /// The parabolic `p^+_{π′}`.
    pub fn parabolic(ty: SimpleType, pi: RootSubset) -> Result<Self> {
        Self::new(ty, pi, RootSubset::full(ty.rank()))
    }

    pub fn is_parabolic(&self) -> bool {
        self.pi2 == RootSubset::full(self.ty.rank())
    }

    /// The complementary seaweed `q_{π2,π1}`.
    pub fn swapped(&self) -> Self {
        BiparabolicSpec { ty: self.ty, pi1: self.pi2, pi2: self.pi1 }
    }

    /// Cascades of `π1` and `π2`, in that order.
    pub fn cascades(&self, rs: &RootSystem) -> (Cascade, Cascade) {
        (kostant_cascade(rs, self.pi1), kostant_cascade(rs, self.pi2))
    }

    fn check(&self, rs: &RootSystem) -> Result<()> {
        if rs.simple_type() == self.ty {
            Ok(())
        } else {
            Err(Error::MixedRootSystems)
        }
    }
}

/// A subalgebra spanned by Chevalley basis vectors, listed by basis index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubalgebraBasis {
    pub indices: Vec<usize>,
}

impl SubalgebraBasis {
    pub fn dim(&self) -> usize {
        self.indices.len()
    }

    pub fn elements(&self) -> Vec<AlgebraElement> {
        self.indices.iter().map(|&i| AlgebraElement::basis(i)).collect()
    }

    pub fn contains_index(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    /// True when every bracket of two basis vectors stays inside the span.
    pub fn is_closed(&self, rs: &RootSystem) -> bool {
        self.indices.iter().all(|&i| {
            self.indices.iter().all(|&j| rs.bracket_basis(i, j).iter().all(|&(k, _)| self.contains_index(k)))
        })
    }
}

pub fn biparabolic_basis(rs: &RootSystem, spec: &BiparabolicSpec) -> Result<SubalgebraBasis> {
    spec.check(rs)?;
    let mut indices = Vec::new();
    for id in 0..2 * rs.num_positive() {
        let root = rs.root(id);
        let home = if root.is_positive() { spec.pi2 } else { spec.pi1 };
        if root.support().is_subset_of(home) {
            indices.push(rs.basis_of_root(id));
        }
    }
    indices.extend((0..rs.rank()).map(|i| rs.basis_of_cartan(i)));
    indices.sort_unstable();
    let basis = SubalgebraBasis { indices };
    debug_assert!(basis.is_closed(rs));
    Ok(basis)
}

/// `(rk g − dim E_{π1,π2}) + (k_{π1} + k_{π2} − dim E_{π1,π2})`.
pub fn seaweed_index(rs: &RootSystem, spec: &BiparabolicSpec) -> Result<usize> {
    spec.check(rs)?;
    let (c1, c2) = spec.cascades(rs);
    let e = dim_e(rs, &c1, &c2);
    Ok((rs.rank() - e) + (c1.len() + c2.len() - e))
}

/// Coefficients `a_K` (nodes of the cascade of `π2`) and `b_L` (nodes of the
/// cascade of `π1`), both in cascade node order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientVector {
    pub a: Vec<Q>,
    pub b: Vec<Q>,
}

/// Smallest and largest magnitude of sampled coefficients.
pub const COEFF_RANGE: i64 = 50;

fn sample_nonzero(rng: &mut ChaCha8Rng) -> i64 {
    let k = rng.random_range(0..2 * COEFF_RANGE);
    if k < COEFF_RANGE {
        k - COEFF_RANGE
    } else {
        k - COEFF_RANGE + 1
    }
}

impl CoefficientVector {
    pub fn new(rs: &RootSystem, spec: &BiparabolicSpec, a: Vec<Q>, b: Vec<Q>) -> Result<Self> {
        spec.check(rs)?;
        let (c1, c2) = spec.cascades(rs);
        if a.len() != c2.len() {
            return Err(Error::MissingCoefficient(format!("expected {} a-coefficients, got {}", c2.len(), a.len())));
        }
        if b.len() != c1.len() {
            return Err(Error::MissingCoefficient(format!("expected {} b-coefficients, got {}", c1.len(), b.len())));
        }
        if let Some(i) = a.iter().position(Zero::is_zero) {
            return Err(Error::ZeroCoefficient(format!("a[{}]", i + 1)));
        }
        if let Some(i) = b.iter().position(Zero::is_zero) {
            return Err(Error::ZeroCoefficient(format!("b[{}]", i + 1)));
        }
        Ok(CoefficientVector { a, b })
    }

    pub fn from_ints(rs: &RootSystem, spec: &BiparabolicSpec, a: &[i64], b: &[i64]) -> Result<Self> {
        Self::new(rs, spec, a.iter().map(|&x| q(x)).collect(), b.iter().map(|&x| q(x)).collect())
    }

    pub fn ones(rs: &RootSystem, spec: &BiparabolicSpec) -> Self {
        let (c1, c2) = spec.cascades(rs);
        CoefficientVector { a: vec![Q::one(); c2.len()], b: vec![Q::one(); c1.len()] }
    }

    /// Integers drawn uniformly from `[−50, 50] \ {0}`.
    pub fn random(rs: &RootSystem, spec: &BiparabolicSpec, rng: &mut ChaCha8Rng) -> Self {
        let (c1, c2) = spec.cascades(rs);
        let a = (0..c2.len()).map(|_| q(sample_nonzero(rng))).collect();
        let b = (0..c1.len()).map(|_| q(sample_nonzero(rng))).collect();
        CoefficientVector { a, b }
    }

    /// The draw for trial `trial` of a run seeded with `seed`; each trial has
    /// its own stream so trials can be run in any order.
    pub fn seeded(rs: &RootSystem, spec: &BiparabolicSpec, seed: u64, trial: u64) -> Self {
        Self::random(rs, spec, &mut trial_rng(seed, trial))
    }
}

pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// `u(a,b) = Σ_K a_K x_{−ε_K} + Σ_L b_L x_{ε_L}`.
pub fn build_u(rs: &RootSystem, spec: &BiparabolicSpec, cv: &CoefficientVector) -> Result<AlgebraElement> {
    let cv = CoefficientVector::new(rs, spec, cv.a.clone(), cv.b.clone())?;
    let (c1, c2) = spec.cascades(rs);
    let mut u = AlgebraElement::zero();
    for (node, a) in c2.nodes.iter().zip(cv.a) {
        u.add_term(rs.basis_of_root(rs.neg_id(node.eps)), a);
    }
    for (node, b) in c1.nodes.iter().zip(cv.b) {
        u.add_term(rs.basis_of_root(node.eps), b);
    }
    Ok(u)
}

/// `Σ x_{−ε}` over the roots `ε` of the cascade of `π2` outside `Δ_{π1}^+`.
pub fn build_u_minus(rs: &RootSystem, spec: &BiparabolicSpec) -> Result<AlgebraElement> {
    spec.check(rs)?;
    let c2 = kostant_cascade(rs, spec.pi2);
    let mut u = AlgebraElement::zero();
    for node in &c2.nodes {
        if !rs.root(node.eps).support().is_subset_of(spec.pi1) {
            u.add_term(rs.basis_of_root(rs.neg_id(node.eps)), Q::one());
        }
    }
    Ok(u)
}

/// Which family a torus element of an interlaced pair belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TorusElementKind {
    /// `y_K` for a node common to both cascades (index into the cascade of `π1`).
    Shared(usize),
    /// `z_M` for a node `M` of the first cascade with `ε_M` a half difference in the second.
    First(usize),
    /// `t_N` for a node `N` of the second cascade with `ε_N` a half difference in the first.
    Second(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusElement {
    pub kind: TorusElementKind,
    pub element: AlgebraElement,
}

fn nonzero(x: i64, what: &str) -> Result<Q> {
    if x == 0 {
        Err(Error::Degenerate(format!("structure constant {what} vanishes")))
    } else {
        Ok(q(x))
    }
}

/// Solves `h_γ = c⁺ h_{ε+} − c⁻ h_{ε−}` in the simple coroots.
fn coroot_split(rs: &RootSystem, gamma: usize, plus: usize, minus: usize) -> Result<(Q, Q)> {
    let l = rs.rank();
    let rows: Vec<Vec<Q>> = (0..l).map(|i| vec![q(rs.coroot(plus)[i]), q(-rs.coroot(minus)[i])]).collect();
    let rhs: Vec<Q> = rs.coroot(gamma).iter().map(|&c| q(c)).collect();
    let sol = solve_q(&rows, &rhs, 2)
        .ok_or_else(|| Error::Degenerate(format!("h of {} is not in the span of its two cascade coroots", rs.root(gamma))))?;
    Ok((sol[0].clone(), sol[1].clone()))
}

/// One `z`-type element: `x_γ + λ x_{−γ} + μ x_{ε+} + ν x_{ε−}` where `γ` is a
/// cascade root of one side, `ε±` the cascade roots of the other side with
/// `2γ = ε+ − ε−`, `p` the coefficient of `x_γ` in `u` and `a±` those of `x_{−ε±}`.
/// With `sign = −1` every root is negated, which gives the `t`-type elements.
#[allow(clippy::too_many_arguments)]
fn half_difference_element(
    rs: &RootSystem,
    gamma: usize,
    plus: usize,
    minus: usize,
    p: &Q,
    a_plus: &Q,
    a_minus: &Q,
    sign: i32,
) -> Result<AlgebraElement> {
    let flip = |id: usize| if sign > 0 { id } else { rs.neg_id(id) };
    let bar: Vec<i32> =
        rs.root(plus).coeffs().iter().zip(rs.root(minus).coeffs()).map(|(x, y)| sign * (x + y) / 2).collect();
    let neg_bar = rs.require_root(&bar.iter().map(|x| -x).collect::<Vec<_>>())?;
    let (g, ng) = (flip(gamma), flip(rs.neg_id(gamma)));
    let (ep, em) = (flip(plus), flip(minus));
    let tau1 = nonzero(rs.structure_constant(g, rs.neg_id(ep)), "τ1")?;
    let tau2 = nonzero(rs.structure_constant(ng, rs.neg_id(em)), "τ2")?;
    debug_assert_eq!(rs.sum_id(g, rs.neg_id(ep)), Some(neg_bar));
    let (cp, cm) = coroot_split(rs, gamma, plus, minus)?;
    let lambda = -(&tau1 * a_plus) / (&tau2 * a_minus);
    let mu = &cp * &lambda * p / a_plus;
    let nu = -&cm * &lambda * p / a_minus;
    let mut z = AlgebraElement::zero();
    z.add_term(rs.basis_of_root(g), Q::one());
    z.add_term(rs.basis_of_root(ng), lambda);
    z.add_term(rs.basis_of_root(ep), mu);
    z.add_term(rs.basis_of_root(em), nu);
    Ok(z)
}

/// The elements `y_K`, `z_M`, `t_N` attached to a pair of cascades.
pub fn interlaced_torus_elements(
    rs: &RootSystem,
    spec: &BiparabolicSpec,
    cv: &CoefficientVector,
) -> Result<Vec<TorusElement>> {
    let cv = CoefficientVector::new(rs, spec, cv.a.clone(), cv.b.clone())?;
    let (c1, c2) = spec.cascades(rs);
    let mut out = Vec::new();
    for (i, node) in c1.nodes.iter().enumerate() {
        if let Some(j) = c2.node_with_support(node.support) {
            let mut y = AlgebraElement::zero();
            y.add_term(rs.basis_of_root(node.eps), Q::one());
            y.add_term(rs.basis_of_root(rs.neg_id(node.eps)), &cv.a[j] / &cv.b[i]);
            out.push(TorusElement { kind: TorusElementKind::Shared(i), element: y });
        }
    }
    let halves2 = tilde_delta_plus_of(rs, &c2);
    for (m, node) in c1.nodes.iter().enumerate() {
        if let Some(h) = halves2.iter().find(|h| h.root == node.eps) {
            let (kp, km) = (&c2.nodes[h.plus], &c2.nodes[h.minus]);
            let z = half_difference_element(rs, node.eps, kp.eps, km.eps, &cv.b[m], &cv.a[h.plus], &cv.a[h.minus], 1)?;
            out.push(TorusElement { kind: TorusElementKind::First(m), element: z });
        }
    }
    let halves1 = tilde_delta_plus_of(rs, &c1);
    for (n, node) in c2.nodes.iter().enumerate() {
        if let Some(h) = halves1.iter().find(|h| h.root == node.eps) {
            let (lp, lm) = (&c1.nodes[h.plus], &c1.nodes[h.minus]);
            let t = half_difference_element(rs, node.eps, lp.eps, lm.eps, &cv.a[n], &cv.b[h.plus], &cv.b[h.minus], -1)?;
            out.push(TorusElement { kind: TorusElementKind::Second(n), element: t });
        }
    }
    Ok(out)
}

/// The data attached to a rank-two connected `π′ ∋ α_π̃` in types F4, E6, E7, E8.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rank2Data {
    /// Node indices `j_0..j_3` in the cascade of `π`.
    pub j: [usize; 4],
    /// `h_{ε_{π′}} = Σ c_k h_{ε_{j_k}}`.
    pub c: [Q; 4],
    /// Root id of `ε_{π′}`.
    pub eps: usize,
    pub beta2: usize,
    pub beta3: usize,
    /// `τ_0, …, τ_6`.
    pub tau: [i64; 7],
}

impl Rank2Data {
    /// `(τ2 τ5)/τ1 + (τ4 τ6)/τ3`, whose nonvanishing makes the element semisimple.
    pub fn semisimplicity_witness(&self) -> Q {
        let t = |i: usize| q(self.tau[i]);
        t(2) * t(5) / t(1) + t(4) * t(6) / t(3)
    }
}

fn shape_error(pi: RootSubset) -> Error {
    Error::NotApplicable(format!("{pi} is not a rank-two connected set through the extra root"))
}

pub fn rank2_data(rs: &RootSystem, pi: RootSubset) -> Result<Rank2Data> {
    let full = RootSubset::full(rs.rank());
    if !matches!(rs.simple_type().family(), crate::rootsys::Family::F | crate::rootsys::Family::E) {
        return Err(Error::NotApplicable(format!("type {} has no rank-two construction", rs.simple_type())));
    }
    let (_, extra) = tilde_pi(rs, full)?;
    let i2 = extra.ok_or_else(|| shape_error(pi))?;
    if pi.len() != 2 || !pi.contains(i2) || !rs.is_connected(pi) {
        return Err(shape_error(pi));
    }
    let i1 = pi.positions().find(|&i| i != i2).expect("two elements");
    let c = kostant_cascade(rs, full);
    let j1 = c.node_with_eps(i1).ok_or_else(|| shape_error(pi))?;
    let eps_vec = |k: usize| -> Vec<i64> { rs.root(c.nodes[k].eps).coeffs().iter().map(|&x| x as i64).collect() };

    // 2α_{i2} + ε_{j1} = ε_{j0} − ε_{j2} − ε_{j3}.
    let l = rs.rank();
    let mut target = vec![0i64; l];
    target[i2] += 2;
    for (t, e) in target.iter_mut().zip(eps_vec(j1)) {
        *t += e;
    }
    let rows: Vec<Vec<Q>> = (0..l).map(|r| (0..c.len()).map(|k| q(eps_vec(k)[r])).collect()).collect();
    let rhs: Vec<Q> = target.iter().map(|&t| q(t)).collect();
    let sol = solve_q(&rows, &rhs, c.len()).ok_or_else(|| shape_error(pi))?;
    let plus: Vec<usize> = (0..c.len()).filter(|&k| sol[k] == Q::one()).collect();
    let minus: Vec<usize> = (0..c.len()).filter(|&k| sol[k] == -Q::one()).collect();
    let rest = (0..c.len()).filter(|&k| !sol[k].is_zero()).count();
    if plus.len() != 1 || minus.len() != 2 || rest != 3 {
        return Err(shape_error(pi));
    }
    let j = [plus[0], j1, minus[0], minus[1]];

    let eps = rs.highest_root_id(pi)?;
    let rows: Vec<Vec<Q>> = (0..l).map(|r| j.iter().map(|&k| q(rs.coroot(c.nodes[k].eps)[r])).collect()).collect();
    let rhs: Vec<Q> = rs.coroot(eps).iter().map(|&x| q(x)).collect();
    let cs = solve_q(&rows, &rhs, 4).ok_or_else(|| shape_error(pi))?;

    let e = |k: usize| c.nodes[j[k]].eps;
    let minus_of = |a: usize, b: usize| -> Result<usize> {
        let v: Vec<i32> = rs.root(e(0)).coeffs().iter().zip(rs.root(a).coeffs()).zip(rs.root(b).coeffs()).map(|((x, y), z)| x - y - z).collect();
        rs.require_root(&v)
    };
    let beta2 = minus_of(eps, e(2))?;
    let beta3 = minus_of(eps, e(3))?;
    let n = |r: usize, s: usize| rs.structure_constant(r, s);
    let neg = |r: usize| rs.neg_id(r);
    let tau = [
        n(neg(e(1)), eps),
        n(beta2, neg(e(0))),
        n(neg(eps), neg(e(2))),
        n(beta3, neg(e(0))),
        n(neg(eps), neg(e(3))),
        n(beta2, neg(e(3))),
        n(beta3, neg(e(2))),
    ];
    if tau.contains(&0) {
        return Err(Error::Degenerate(format!("a structure constant for {pi} vanishes")));
    }
    let c = [cs[0].clone(), cs[1].clone(), cs[2].clone(), cs[3].clone()];
    Ok(Rank2Data { j, c, eps, beta2, beta3, tau })
}

/// `x(λ) = x_{−ε_{π′}} + λ2 x_{β2} + λ3 x_{β3} + Σ μ_k x_{ε_{j_k}} + ν x_{−ε_{j_1}}`,
/// stabilizing `φ_{u(a,b)}` on `p^+_{π′}`.
pub fn rank2_stabilizer_element(rs: &RootSystem, pi: RootSubset, cv: &CoefficientVector) -> Result<AlgebraElement> {
    let d = rank2_data(rs, pi)?;
    let spec = BiparabolicSpec::parabolic(rs.simple_type(), pi)?;
    let cv = CoefficientVector::new(rs, &spec, cv.a.clone(), cv.b.clone())?;
    let c = kostant_cascade(rs, RootSubset::full(rs.rank()));
    let a = |k: usize| cv.a[d.j[k]].clone();
    let b = cv.b[0].clone();
    let t = |i: usize| q(d.tau[i]);
    let lambda2 = -(a(2) * t(2)) / (a(0) * t(1));
    let lambda3 = -(a(3) * t(4)) / (a(0) * t(3));
    let nu = -(&lambda2 * a(3) * t(5) + &lambda3 * a(2) * t(6)) / (&b * t(0));
    if nu.is_zero() {
        return Err(Error::Degenerate("ν vanishes".into()));
    }
    let mut x = AlgebraElement::zero();
    x.add_term(rs.basis_of_root(rs.neg_id(d.eps)), Q::one());
    x.add_term(rs.basis_of_root(d.beta2), lambda2);
    x.add_term(rs.basis_of_root(d.beta3), lambda3);
    for k in 0..4 {
        x.add_term(rs.basis_of_root(c.nodes[d.j[k]].eps), &b * &d.c[k] / a(k));
    }
    x.add_term(rs.basis_of_root(rs.neg_id(c.nodes[d.j[1]].eps)), nu);
    Ok(x)
}
