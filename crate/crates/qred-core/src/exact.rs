//! Exact linear algebra over the integers and the rationals.
//!
//! Elimination is done on integer rows without fractions: every update is a
//! cross-multiplication followed by division of the row by its content, which
//! keeps entry sizes close to the size of the minors involved. Rational inputs
//! are brought to this form by clearing denominators row by row.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The exact rational scalar used throughout the crate.
pub type Q = BigRational;

/// Integer `n` as a rational.
pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// The rational `n/d`. Panics when `d` is zero.
pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Divides a row by the gcd of its entries.
pub fn make_primitive(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in row.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in row.iter_mut() {
        if !x.is_zero() {
            *x /= &g;
        }
    }
}

/// Replaces `dest` by a primitive multiple of `p*dest - a*src` with `a = dest[col]`
/// and `p = src[col]`, so that `dest[col]` becomes zero.
fn eliminate(dest: &mut [BigInt], src: &[BigInt], col: usize) {
    if dest[col].is_zero() {
        return;
    }
    let a = dest[col].clone();
    let p = &src[col];
    let g = a.gcd(p);
    let mp = p / &g;
    let ma = &a / &g;
    let unit = mp.is_one();
    for (d, s) in dest.iter_mut().zip(src.iter()) {
        if s.is_zero() {
            if !unit && !d.is_zero() {
                *d *= &mp;
            }
            continue;
        }
        let mut v = if unit { std::mem::take(d) } else { &*d * &mp };
        v -= &ma * s;
        *d = v;
    }
    make_primitive(dest);
}

/// A fully reduced row echelon form with primitive integer rows.
///
/// Each row has a positive pivot, and every pivot column is zero outside its
/// own row. Zero rows are dropped.
#[derive(Clone, Debug)]
pub struct IntEchelon {
    pub rows: Vec<Vec<BigInt>>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

impl IntEchelon {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Columns without a pivot.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ncols).filter(|&c| !is_pivot[c]).collect()
    }

    /// A basis of the right kernel as primitive integer vectors, one per free column.
    pub fn kernel(&self) -> Vec<Vec<BigInt>> {
        let mut out = Vec::new();
        for f in self.free_columns() {
            let mut l = BigInt::one();
            for (r, row) in self.rows.iter().enumerate() {
                if !row[f].is_zero() {
                    l = l.lcm(&row[self.pivots[r]]);
                }
            }
            let mut x = vec![BigInt::zero(); self.ncols];
            for (r, row) in self.rows.iter().enumerate() {
                let a = &row[f];
                if !a.is_zero() {
                    let p = &row[self.pivots[r]];
                    x[self.pivots[r]] = -(a * (&l / p));
                }
            }
            x[f] = l;
            make_primitive(&mut x);
            out.push(x);
        }
        out
    }
}

/// Gauss-Jordan elimination of integer rows of length `ncols`.
pub fn int_echelon(mut rows: Vec<Vec<BigInt>>, ncols: usize) -> IntEchelon {
    for row in rows.iter_mut() {
        debug_assert_eq!(row.len(), ncols);
        make_primitive(row);
    }
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        // Smallest nonzero entry in the column makes the cheapest pivot.
        let mut best: Option<(usize, u64)> = None;
        for (i, row) in rows.iter().enumerate().skip(r) {
            if !row[c].is_zero() {
                let b = row[c].bits();
                if best.is_none_or(|(_, bb)| b < bb) {
                    best = Some((i, b));
                }
            }
        }
        let Some((pi, _)) = best else { continue };
        rows.swap(r, pi);
        let (head, tail) = rows.split_at_mut(r + 1);
        let src = &head[r];
        for dest in tail.iter_mut() {
            eliminate(dest, src, c);
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    for k in (0..r).rev() {
        let (upper, lower) = rows.split_at_mut(k);
        let src = &lower[0];
        for dest in upper.iter_mut() {
            eliminate(dest, src, pivots[k]);
        }
    }
    for (row, &p) in rows.iter_mut().zip(&pivots) {
        if row[p].is_negative() {
            for x in row.iter_mut() {
                *x = -std::mem::take(x);
            }
        }
    }
    IntEchelon { rows, pivots, ncols }
}

/// Multiplies a rational row by the lcm of its denominators.
pub fn clear_denominators(row: &[Q]) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for x in row {
        if !x.is_zero() && !x.denom().is_one() {
            l = l.lcm(x.denom());
        }
    }
    row.iter()
        .map(|x| {
            if x.is_zero() {
                BigInt::zero()
            } else {
                x.numer() * (&l / x.denom())
            }
        })
        .collect()
}

/// Integer rows from small machine integers.
pub fn int_rows(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

fn q_rows_to_int(rows: &[Vec<Q>]) -> Vec<Vec<BigInt>> {
    rows.iter().map(|r| clear_denominators(r)).collect()
}

/// Rank of a small integer matrix.
pub fn rank_i64(rows: &[Vec<i64>], ncols: usize) -> usize {
    int_echelon(int_rows(rows), ncols).rank()
}

/// Rank of a rational matrix.
pub fn rank_q(rows: &[Vec<Q>], ncols: usize) -> usize {
    int_echelon(q_rows_to_int(rows), ncols).rank()
}

/// A basis of `{x : A x = 0}` for a rational matrix `A` with `ncols` columns.
pub fn kernel_q(rows: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    int_echelon(q_rows_to_int(rows), ncols)
        .kernel()
        .into_iter()
        .map(|v| v.into_iter().map(Q::from_integer).collect())
        .collect()
}

/// Reduced row echelon form over the rationals with unit pivots.
pub fn rref_q(rows: &[Vec<Q>], ncols: usize) -> (Vec<Vec<Q>>, Vec<usize>) {
    let e = int_echelon(q_rows_to_int(rows), ncols);
    let out = e
        .rows
        .iter()
        .zip(&e.pivots)
        .map(|(row, &p)| {
            let piv = row[p].clone();
            row.iter().map(|x| Q::new(x.clone(), piv.clone())).collect()
        })
        .collect();
    (out, e.pivots)
}

/// One solution of `A x = b`, with free variables set to zero, or `None` when
/// the system is inconsistent.
pub fn solve_q(a: &[Vec<Q>], b: &[Q], ncols: usize) -> Option<Vec<Q>> {
    assert_eq!(a.len(), b.len());
    let aug: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let (rref, pivots) = rref_q(&aug, ncols + 1);
    let mut x = vec![Q::zero(); ncols];
    for (row, &p) in rref.iter().zip(&pivots) {
        if p == ncols {
            return None;
        }
        x[p] = row[ncols].clone();
    }
    Some(x)
}

/// Dense rational matrix-vector product.
pub fn mat_vec(a: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .filter(|(x, y)| !x.is_zero() && !y.is_zero())
                .fold(Q::zero(), |acc, (x, y)| acc + x * y)
        })
        .collect()
}

/// Polynomials over the rationals, coefficients from low to high degree.
pub mod poly {
    use super::Q;
    use num_traits::{One, Zero};

    pub fn trim(mut p: Vec<Q>) -> Vec<Q> {
        while p.last().is_some_and(|c| c.is_zero()) {
            p.pop();
        }
        p
    }

    pub fn degree(p: &[Q]) -> Option<usize> {
        p.iter().rposition(|c| !c.is_zero())
    }

    pub fn derivative(p: &[Q]) -> Vec<Q> {
        trim(
            p.iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Q::from_integer((i as i64).into()))
                .collect(),
        )
    }

    /// Remainder of `a` modulo a nonzero `b`.
    pub fn rem(a: &[Q], b: &[Q]) -> Vec<Q> {
        let db = degree(b).expect("division by the zero polynomial");
        let lead = b[db].clone();
        let mut r = trim(a.to_vec());
        while let Some(dr) = degree(&r) {
            if dr < db {
                break;
            }
            let f = &r[dr] / &lead;
            let shift = dr - db;
            for (i, c) in b.iter().enumerate().take(db + 1) {
                if !c.is_zero() {
                    r[i + shift] -= &f * c;
                }
            }
            r = trim(r);
        }
        r
    }

    /// Monic greatest common divisor.
    pub fn gcd(a: &[Q], b: &[Q]) -> Vec<Q> {
        let mut x = trim(a.to_vec());
        let mut y = trim(b.to_vec());
        while degree(&y).is_some() {
            let r = rem(&x, &y);
            x = y;
            y = r;
        }
        match degree(&x) {
            None => x,
            Some(d) => {
                let lead = x[d].clone();
                x.iter().map(|c| c / &lead).collect()
            }
        }
    }

    /// True when the polynomial has no repeated factor over an algebraic closure.
    pub fn is_squarefree(p: &[Q]) -> bool {
        degree(&gcd(p, &derivative(p))) == Some(0)
    }

    pub fn monomial(k: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); k + 1];
        v[k] = Q::one();
        v
    }
}
