//! Stabilizers of linear forms on subalgebras, semisimplicity, and torus
//! certificates of quasi-reductivity.
//!
//! A certificate records a seaweed, an element `u` of the ambient algebra and
//! the stabilizer `S` of `φ_u = κ(u, ·)` restricted to the seaweed. It is
//! accepted when `dim S` equals the index, `S` is abelian, the Killing form is
//! nondegenerate on `S` and every basis vector of `S` is semisimple.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{clear_denominators, int_echelon, q, rref_q, Q};
use crate::rootsys::{AlgebraElement, RootSystem, SimpleType};
use crate::seaweed::{
    biparabolic_basis, build_u, seaweed_index, trial_rng, BiparabolicSpec, CoefficientVector, SubalgebraBasis,
    COEFF_RANGE,
};
use crate::subset::RootSubset;
use rand::Rng;

/// A subspace of the algebra in reduced echelon form over the Chevalley basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    pub ambient: usize,
    pub rows: Vec<Vec<Q>>,
    pub pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    /// The span of the given dense vectors.
    pub fn span(vectors: &[Vec<Q>], ambient: usize) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient);
        }
        let (rows, pivots) = rref_q(vectors, ambient);
        Subspace { ambient, rows, pivots }
    }

    pub fn span_elements(elements: &[AlgebraElement], ambient: usize) -> Self {
        let dense: Vec<Vec<Q>> = elements.iter().map(|e| e.to_dense(ambient)).collect();
        Self::span(&dense, ambient)
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> Vec<AlgebraElement> {
        self.rows.iter().map(|r| AlgebraElement::from_dense(r)).collect()
    }

    pub fn contains(&self, x: &AlgebraElement) -> bool {
        let mut v = x.to_dense(self.ambient);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let c = v[p].clone();
                for (vi, ri) in v.iter_mut().zip(row) {
                    if !ri.is_zero() {
                        *vi -= &c * ri;
                    }
                }
            }
        }
        v.iter().all(Zero::is_zero)
    }
}

/// Integer coordinates of a rational element up to a positive scalar.
fn integral(x: &AlgebraElement, dim: usize) -> Vec<BigInt> {
    clear_denominators(&x.to_dense(dim))
}

/// `κ(v, b_k)` for every basis index `k`.
fn killing_row(rs: &RootSystem, v: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); rs.dim()];
    for (i, vi) in v.iter().enumerate() {
        if vi.is_zero() {
            continue;
        }
        rs.killing_partners(i, |j, k| out[j] += vi * BigInt::from(k));
    }
    out
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).filter(|(x, y)| !x.is_zero() && !y.is_zero()).map(|(x, y)| x * y).sum()
}

fn check_indices(rs: &RootSystem, x: &AlgebraElement) -> Result<()> {
    match x.terms().map(|(i, _)| i).max() {
        Some(i) if i >= rs.dim() => Err(Error::MixedRootSystems),
        _ => Ok(()),
    }
}

/// `{x ∈ span P : κ(u, [x, p]) = 0 for all p ∈ P}`.
pub fn form_stabilizer(rs: &RootSystem, p: &SubalgebraBasis, u: &AlgebraElement) -> Result<Subspace> {
    check_indices(rs, u)?;
    let n = rs.dim();
    let ku = killing_row(rs, &integral(u, n));
    let rows: Vec<Vec<BigInt>> = p
        .indices
        .iter()
        .map(|&j| {
            p.indices
                .iter()
                .map(|&i| {
                    let mut s = BigInt::zero();
                    rs.bracket_basis_with(i, j, |k, c| {
                        if !ku[k].is_zero() {
                            s += &ku[k] * BigInt::from(c);
                        }
                    });
                    s
                })
                .collect()
        })
        .collect();
    let kernel = int_echelon(rows, p.dim()).kernel();
    let vectors: Vec<Vec<Q>> = kernel
        .into_iter()
        .map(|v| {
            let mut dense = vec![Q::zero(); n];
            for (c, &idx) in v.into_iter().zip(&p.indices) {
                dense[idx] = Q::from_integer(c);
            }
            dense
        })
        .collect();
    Ok(Subspace::span(&vectors, n))
}

/// `S ∩ S^⊥` for the Killing form of the whole algebra.
pub fn killing_radical_on(rs: &RootSystem, s: &Subspace) -> Subspace {
    let vs: Vec<Vec<BigInt>> = s.rows.iter().map(|r| clear_denominators(r)).collect();
    let ks: Vec<Vec<BigInt>> = vs.iter().map(|v| killing_row(rs, v)).collect();
    let gram: Vec<Vec<BigInt>> = ks.iter().map(|k| vs.iter().map(|v| dot(k, v)).collect()).collect();
    let kernel = int_echelon(gram, vs.len()).kernel();
    let vectors: Vec<Vec<Q>> = kernel
        .iter()
        .map(|c| {
            let mut out = vec![Q::zero(); s.ambient];
            for (ci, row) in c.iter().zip(&s.rows) {
                if ci.is_zero() {
                    continue;
                }
                let cq = Q::from_integer(ci.clone());
                for (o, r) in out.iter_mut().zip(row) {
                    if !r.is_zero() {
                        *o += &cq * r;
                    }
                }
            }
            out
        })
        .collect();
    Subspace::span(&vectors, s.ambient)
}

/// Basis of the centralizer of a family of elements, as integer vectors.
fn joint_centralizer(rs: &RootSystem, xs: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut rows = Vec::new();
    for x in xs {
        let terms: Vec<(usize, BigInt)> =
            x.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect();
        rows.extend(rs.ad_matrix_int(&terms));
    }
    int_echelon(rows, rs.dim()).kernel()
}

fn killing_nondegenerate_on(rs: &RootSystem, basis: &[Vec<BigInt>]) -> bool {
    let ks: Vec<Vec<BigInt>> = basis.iter().map(|v| killing_row(rs, v)).collect();
    let gram: Vec<Vec<BigInt>> = ks.iter().map(|k| basis.iter().map(|v| dot(k, v)).collect()).collect();
    int_echelon(gram, basis.len()).rank() == basis.len()
}

/// `x` is semisimple exactly when the Killing form is nondegenerate on its
/// centralizer: a nonzero nilpotent part lies in the centralizer and is
/// Killing-orthogonal to all of it, while the centralizer of a semisimple
/// element is reductive.
pub fn is_semisimple_element(rs: &RootSystem, x: &AlgebraElement) -> Result<bool> {
    check_indices(rs, x)?;
    let z = joint_centralizer(rs, &[integral(x, rs.dim())]);
    Ok(killing_nondegenerate_on(rs, &z))
}

/// Semisimplicity from the minimal polynomial of `ad x`: the lcm of the
/// minimal polynomials of the basis vectors is squarefree iff each one is.
pub fn is_semisimple_krylov(rs: &RootSystem, x: &AlgebraElement) -> Result<bool> {
    use crate::exact::{poly, solve_q};
    let ad = rs.ad_matrix(x)?;
    let n = rs.dim();
    let apply = |v: &[Q]| crate::exact::mat_vec(&ad, v);
    for j in 0..n {
        let mut e = vec![Q::zero(); n];
        e[j] = Q::one();
        let mut krylov = vec![e];
        let coeffs = loop {
            let next = apply(krylov.last().expect("nonempty"));
            let cols = krylov.len();
            let a: Vec<Vec<Q>> = (0..n).map(|r| krylov.iter().map(|v| v[r].clone()).collect()).collect();
            if let Some(c) = solve_q(&a, &next, cols) {
                break c;
            }
            krylov.push(next);
        };
        // A^d v = Σ c_k A^k v, so the minimal polynomial is t^d − Σ c_k t^k.
        let mut p: Vec<Q> = coeffs.into_iter().map(|c| -c).collect();
        p.push(Q::one());
        if !poly::is_squarefree(&p) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_abelian(rs: &RootSystem, s: &Subspace) -> Result<bool> {
    let b = s.basis();
    for (i, x) in b.iter().enumerate() {
        for y in &b[i + 1..] {
            if !rs.bracket(x, y)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// How the form of a certificate was produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormKind {
    /// `u(a,b)` built from cascade coefficients.
    Cascade(CoefficientVector),
    /// A dense generic element of the dual seaweed `q_{π2,π1}`.
    Dense,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Checks {
    pub dim_equals_index: bool,
    pub abelian: bool,
    pub killing_nondegenerate: bool,
    pub basis_semisimple: bool,
}

impl Checks {
    pub fn all(&self) -> bool {
        self.dim_equals_index && self.abelian && self.killing_nondegenerate && self.basis_semisimple
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusCertificate {
    pub spec: BiparabolicSpec,
    pub form: FormKind,
    pub u: AlgebraElement,
    pub stab: Subspace,
    pub index: usize,
    pub trial: u64,
    pub checks: Checks,
}

/// Runs the four checks on the stabilizer of `u`; later checks are skipped
/// once one fails.
pub fn check_form(rs: &RootSystem, spec: &BiparabolicSpec, u: &AlgebraElement) -> Result<(Subspace, Checks)> {
    let p = biparabolic_basis(rs, spec)?;
    let index = seaweed_index(rs, spec)?;
    let stab = form_stabilizer(rs, &p, u)?;
    let mut c = Checks { dim_equals_index: stab.dim() == index, ..Checks::default() };
    if c.dim_equals_index {
        c.abelian = is_abelian(rs, &stab)?;
    }
    if c.abelian {
        c.killing_nondegenerate = killing_radical_on(rs, &stab).dim() == 0;
    }
    if c.killing_nondegenerate {
        c.basis_semisimple = true;
        for x in stab.basis() {
            if !is_semisimple_element(rs, &x)? {
                c.basis_semisimple = false;
                break;
            }
        }
    }
    Ok((stab, c))
}

/// A dense element of `q_{π2,π1}` with coefficients drawn like the cascade ones.
pub fn dense_form(rs: &RootSystem, spec: &BiparabolicSpec, seed: u64, trial: u64) -> Result<AlgebraElement> {
    let dual = biparabolic_basis(rs, &spec.swapped())?;
    // A separate stream family keeps these draws apart from the cascade ones.
    let mut rng = trial_rng(seed ^ 0x5eed_d00d, trial);
    Ok(AlgebraElement::from_terms(dual.indices.iter().map(|&i| {
        let k = rng.random_range(1..=COEFF_RANGE);
        (i, q(if rng.random_bool(0.5) { k } else { -k }))
    })))
}

/// Dense draws tried after every cascade draw has failed.
pub const DENSE_TRIALS: usize = 3;

/// Outcome of a certification run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certification {
    pub certificate: Option<TorusCertificate>,
    /// Cascade draws whose stabilizer had dimension above the index.
    pub irregular_trials: usize,
    pub cascade_trials: usize,
    pub dense_trials: usize,
}

type Found = (FormKind, AlgebraElement, Subspace, Checks);
/// Winner with its trial index, trials run, irregular trials.
type TrialOutcome = (Option<(u64, Found)>, usize, usize);

struct Attempt {
    found: Option<Found>,
    irregular: bool,
}

fn attempt(rs: &RootSystem, spec: &BiparabolicSpec, seed: u64, t: u64, dense: bool) -> Result<Attempt> {
    let (form, u) = if dense {
        (FormKind::Dense, dense_form(rs, spec, seed, t)?)
    } else {
        let cv = CoefficientVector::seeded(rs, spec, seed, t);
        let u = build_u(rs, spec, &cv)?;
        (FormKind::Cascade(cv), u)
    };
    let (stab, checks) = check_form(rs, spec, &u)?;
    let irregular = !checks.dim_equals_index;
    Ok(Attempt { found: checks.all().then_some((form, u, stab, checks)), irregular })
}

/// Runs trials `0..count` in waves of `workers` threads and stops at the first
/// wave with a success; the lowest successful trial index wins. Returns the
/// winner, the number of trials up to it and the irregular ones among them.
fn run_trials(
    rs: &RootSystem,
    spec: &BiparabolicSpec,
    seed: u64,
    count: usize,
    dense: bool,
    workers: usize,
) -> Result<TrialOutcome> {
    let workers = workers.max(1);
    let mut irregular = 0;
    let mut t = 0;
    while t < count {
        let wave: Vec<u64> = (t..count.min(t + workers)).map(|x| x as u64).collect();
        let results: Vec<Result<Attempt>> = if wave.len() == 1 {
            vec![attempt(rs, spec, seed, wave[0], dense)]
        } else {
            std::thread::scope(|scope| {
                let handles: Vec<_> =
                    wave.iter().map(|&k| scope.spawn(move || attempt(rs, spec, seed, k, dense))).collect();
                handles.into_iter().map(|h| h.join().expect("trial thread panicked")).collect()
            })
        };
        for (k, r) in wave.into_iter().zip(results) {
            let a = r?;
            irregular += usize::from(a.irregular);
            if let Some(found) = a.found {
                return Ok((Some((k, found)), k as usize + 1, irregular));
            }
        }
        t += workers;
    }
    Ok((None, count, irregular))
}

/// Tries `trials` seeded cascade forms `u(a,b)` and, if none passes,
/// [`DENSE_TRIALS`] dense generic forms of the dual seaweed.
pub fn certify_quasi_reductive(
    rs: &RootSystem,
    spec: &BiparabolicSpec,
    trials: usize,
    seed: u64,
) -> Result<Certification> {
    certify_with_workers(rs, spec, trials, seed, 1)
}

/// As [`certify_quasi_reductive`], running up to `workers` trials at once.
/// The result does not depend on `workers`.
pub fn certify_with_workers(
    rs: &RootSystem,
    spec: &BiparabolicSpec,
    trials: usize,
    seed: u64,
    workers: usize,
) -> Result<Certification> {
    let index = seaweed_index(rs, spec)?;
    let (mut found, cascade_trials, irregular_trials) = run_trials(rs, spec, seed, trials, false, workers)?;
    let mut dense_trials = 0;
    if found.is_none() && trials > 0 {
        let (f, n, _) = run_trials(rs, spec, seed, DENSE_TRIALS, true, workers)?;
        found = f;
        dense_trials = n;
    }
    let certificate = found.map(|(trial, (form, u, stab, checks))| TorusCertificate {
        spec: *spec,
        form,
        u,
        stab,
        index,
        trial,
        checks,
    });
    Ok(Certification { certificate, irregular_trials, cascade_trials, dense_trials })
}

impl TorusCertificate {
    /// Recomputes the stabilizer from the stored subsets and form alone and reruns every check.
    pub fn reverify(&self, rs: &RootSystem) -> Result<bool> {
        if let FormKind::Cascade(cv) = &self.form {
            if build_u(rs, &self.spec, cv)? != self.u {
                return Ok(false);
            }
        }
        let (stab, checks) = check_form(rs, &self.spec, &self.u)?;
        Ok(checks.all() && stab == self.stab && seaweed_index(rs, &self.spec)? == self.index)
    }

    /// Canonical line-oriented text form.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let join = |v: &[Q]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        let sparse = |e: &AlgebraElement| e.terms().map(|(i, c)| format!("{i}:{c}")).collect::<Vec<_>>().join(" ");
        writeln!(s, "qred-certificate 1").ok();
        writeln!(s, "type: {}", self.spec.ty).ok();
        writeln!(s, "pi1: {}", self.spec.pi1.0).ok();
        writeln!(s, "pi2: {}", self.spec.pi2.0).ok();
        writeln!(s, "trial: {}", self.trial).ok();
        writeln!(s, "index: {}", self.index).ok();
        match &self.form {
            FormKind::Cascade(cv) => {
                writeln!(s, "form: cascade").ok();
                writeln!(s, "a: {}", join(&cv.a)).ok();
                writeln!(s, "b: {}", join(&cv.b)).ok();
            }
            FormKind::Dense => {
                writeln!(s, "form: dense").ok();
            }
        }
        writeln!(s, "u: {}", sparse(&self.u)).ok();
        writeln!(s, "stabilizer-dim: {}", self.stab.dim()).ok();
        for row in self.stab.basis() {
            writeln!(s, "s: {}", sparse(&row)).ok();
        }
        s
    }

    /// Parses the text form and reruns all checks; a certificate that fails
    /// them is rejected.
    pub fn from_text(text: &str) -> Result<TorusCertificate> {
        let bad = |m: &str| Error::Parse(format!("certificate: {m}"));
        let mut lines = text.lines();
        if lines.next().map(str::trim) != Some("qred-certificate 1") {
            return Err(bad("missing header"));
        }
        let mut fields: Vec<(String, String)> = Vec::new();
        for line in lines {
            if line.trim().is_empty() {
                continue;
            }
            let (k, v) = line.split_once(':').ok_or_else(|| bad(line))?;
            fields.push((k.trim().to_string(), v.trim().to_string()));
        }
        let get = |k: &str| fields.iter().find(|(a, _)| a == k).map(|(_, v)| v.as_str()).ok_or_else(|| bad(k));
        let rat = |t: &str| t.parse::<Q>().map_err(|_| bad(t));
        let rats = |v: &str| v.split_whitespace().map(rat).collect::<Result<Vec<Q>>>();
        let sparse = |v: &str| -> Result<AlgebraElement> {
            let mut e = AlgebraElement::zero();
            for tok in v.split_whitespace() {
                let (i, c) = tok.split_once(':').ok_or_else(|| bad(tok))?;
                e.add_term(i.parse().map_err(|_| bad(i))?, rat(c)?);
            }
            Ok(e)
        };
        let num = |k: &str| get(k)?.parse::<u64>().map_err(|_| bad(k));

        let ty = SimpleType::parse(get("type")?)?;
        let spec = BiparabolicSpec::new(ty, RootSubset(num("pi1")? as u16), RootSubset(num("pi2")? as u16))?;
        let rs = RootSystem::shared(ty);
        let form = match get("form")? {
            "cascade" => FormKind::Cascade(CoefficientVector::new(&rs, &spec, rats(get("a")?)?, rats(get("b")?)?)?),
            "dense" => FormKind::Dense,
            other => return Err(bad(other)),
        };
        let u = sparse(get("u")?)?;
        let rows: Vec<AlgebraElement> =
            fields.iter().filter(|(k, _)| k == "s").map(|(_, v)| sparse(v)).collect::<Result<_>>()?;
        let stab = Subspace::span_elements(&rows, rs.dim());
        if stab.dim() != num("stabilizer-dim")? as usize {
            return Err(bad("stabilizer rows are dependent"));
        }
        let (recomputed, checks) = check_form(&rs, &spec, &u)?;
        if !checks.all() || recomputed != stab {
            return Err(Error::Degenerate("certificate does not verify".into()));
        }
        Ok(TorusCertificate { spec, form, u, stab, index: num("index")? as usize, trial: num("trial")?, checks })
    }
}
