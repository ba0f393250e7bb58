//! Weighted sums of products of Bernoulli numbers.
//!
//! For a weight vector `m = (m_1, ..., m_n)` and `k >= n`,
//!
//! ```text
//! sum_{k_1+..+k_n=k} k_1^{m_1}..k_n^{m_n} prod_j B_{2k_j}/(2k_j)!
//!     = sum_{l=0}^{min(T,k)} rhs_l(k) B_{2k-2l}/(2k-2l)!
//! ```
//!
//! where `rhs_l` is assembled from the even polynomials `F_j(t)` obtained by
//! multiplying the rows of the `f` table and re-expanding through the `g`
//! table.

use num_traits::{One, Zero};

use crate::combinatorics::compositions;
use crate::error::{domain, Result};
use crate::polynomials::UniPoly;
use crate::rationals::{bernoulli_over_factorial, pow2, rat, sign_pow, Rational};
use crate::tables::Tables;

/// Exponent vector `(m_1, ..., m_n)`, `n >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MVector(Vec<u32>);

impl MVector {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return domain("weight vector must have at least one entry");
        }
        Ok(MVector(entries))
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// `m_1 + ... + m_n`
    pub fn weight(&self) -> usize {
        self.0.iter().map(|&m| m as usize).sum()
    }

    pub fn all_zero(&self) -> bool {
        self.0.iter().all(|&m| m == 0)
    }

    /// Depth of the derivative tables needed to build the identity.
    pub fn table_depth(&self) -> usize {
        (self.weight() + self.n()).saturating_sub(1)
    }

    /// `T = max{ floor((|m|+n-2)/2), floor((n-1)/2) }`
    pub fn top_index(&self) -> usize {
        top_index(self.weight(), self.n())
    }
}

impl TryFrom<Vec<u32>> for MVector {
    type Error = crate::error::Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        MVector::new(v)
    }
}

/// `max{ floor((r+n-2)/2), floor((n-1)/2) }`
pub fn top_index(r: usize, n: usize) -> usize {
    let a = (r as i64 + n as i64 - 2).div_euclid(2);
    let b = (n as i64 - 1).div_euclid(2);
    a.max(b).max(0) as usize
}

/// Right-hand side of the weighted Bernoulli sum formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BernoulliIdentity {
    pub mvec: MVector,
    /// Largest `l` with a (possibly) nonzero coefficient.
    pub t: usize,
    /// `rhs[l]` is the coefficient polynomial in `k` of `B_{2k-2l}/(2k-2l)!`.
    pub rhs: Vec<UniPoly>,
}

impl BernoulliIdentity {
    /// `sum_{l=0}^{min(T,k)} rhs_l(k) B_{2k-2l}/(2k-2l)!`
    pub fn evaluate(&self, k: u64) -> Rational {
        let top = self.t.min(k as usize);
        (0..=top).fold(Rational::zero(), |acc, l| {
            acc + self.rhs[l].eval_int(k as i64) * bernoulli_over_factorial(k as usize - l)
        })
    }

    /// `deg rhs[l] <= |m| + n - 2l - 1` for every `l`.
    pub fn degree_bounds_hold(&self) -> bool {
        let top = (self.mvec.weight() + self.mvec.n()) as i64;
        self.rhs.iter().enumerate().all(|(l, p)| match p.degree() {
            None => true,
            Some(d) => (d as i64) < top - 2 * l as i64,
        })
    }
}

/// `f_i(t) = sum over i_1+..+i_n = i of prod_j f_{m_j, i_j}(t)`, for
/// `0 <= i <= |m| + n`.
pub fn f_prod(tables: &Tables, mvec: &MVector) -> Vec<UniPoly> {
    let mut acc = vec![UniPoly::one()];
    for &m in mvec.entries() {
        let row = tables.f.row(m as usize);
        let mut next = vec![UniPoly::zero(); acc.len() + row.len() - 1];
        for (a, pa) in acc.iter().enumerate() {
            for (b, pb) in row.iter().enumerate() {
                next[a + b] = &next[a + b] + &(pa * pb);
            }
        }
        acc = next;
    }
    acc
}

/// `(F_0, F_1, ..., F_{|m|+n})`, where
/// `F_0 = f_0 + 1/2 sum_{i>=1} (-1)^i f_i t^i` and
/// `F_j = sum_{i=j}^{|m|+n} f_i g_{i-1,j}`.
pub fn big_f(tables: &Tables, mvec: &MVector) -> Result<Vec<UniPoly>> {
    let top = mvec.weight() + mvec.n();
    if tables.depth() + 1 < top || tables.depth() < max_entry(mvec) {
        return domain(format!(
            "tables of depth {} are too shallow for {:?}",
            tables.depth(),
            mvec.entries()
        ));
    }
    let f = f_prod(tables, mvec);
    let half = rat(1, 2);
    let mut out = Vec::with_capacity(top + 1);
    let tail: UniPoly = (1..=top)
        .map(|i| f[i].mul_x_pow(i).scale(&sign_pow(i as u64)))
        .sum();
    out.push(&f[0] + &tail.scale(&half));
    for j in 1..=top {
        out.push((j..=top).map(|i| &f[i] * tables.g.get(i - 1, j)).sum());
    }
    Ok(out)
}

fn max_entry(mvec: &MVector) -> usize {
    mvec.entries().iter().copied().max().unwrap_or(0) as usize
}

/// Closed form `F_0 = 1/2 prod(t/2 - d_j) + 1/2 (-1)^n prod(t/2 + d_j)` with
/// `d_j = [m_j = 0]`.
pub fn big_f0_closed_form(mvec: &MVector) -> UniPoly {
    let mut minus = UniPoly::one();
    let mut plus = UniPoly::one();
    for &m in mvec.entries() {
        let d = if m == 0 { 1 } else { 0 };
        minus = minus * UniPoly::from_ratios(&[(-d, 1), (1, 2)]);
        plus = plus * UniPoly::from_ratios(&[(d, 1), (1, 2)]);
    }
    let half = rat(1, 2);
    minus.scale(&half) + plus.scale(&(half * sign_pow(mvec.n() as u64)))
}

/// Coefficients `a_{j,l}` of `t^{2l}` in `F_j`; `a[j-1][l]` for
/// `1 <= j <= |m|+n` and `0 <= 2l <= deg F_j`.
pub fn a_coeffs(tables: &Tables, mvec: &MVector) -> Result<Vec<Vec<Rational>>> {
    let big = big_f(tables, mvec)?;
    Ok(big[1..]
        .iter()
        .map(|fj| {
            let deg = fj.degree().unwrap_or(0);
            (0..=deg / 2).map(|l| fj.coefficient(2 * l)).collect()
        })
        .collect())
}

fn a_at(a: &[Vec<Rational>], j: usize, l: usize) -> Rational {
    a.get(j - 1)
        .and_then(|row| row.get(l))
        .cloned()
        .unwrap_or_else(Rational::zero)
}

/// Builds the identity using precomputed tables.
pub fn bernoulli_identity_with(tables: &Tables, mvec: &MVector) -> Result<BernoulliIdentity> {
    let a = a_coeffs(tables, mvec)?;
    let top = mvec.weight() + mvec.n();
    let t = mvec.top_index();
    let inv = pow2(-(mvec.weight() as i64));
    let mut rhs = Vec::with_capacity(t + 1);
    for l in 0..=t {
        let mut p = UniPoly::zero();
        for j in 1..=top.saturating_sub(2 * l) {
            let ajl = a_at(&a, j, l);
            if ajl.is_zero() {
                continue;
            }
            let c = &ajl * pow2(j as i64 - 1) * &inv;
            let power = UniPoly::monomial(Rational::one(), j - 1).shift(l as i64);
            p = p + power.scale(&c);
        }
        rhs.push(p);
    }
    debug_assert!(
        (t + 1..=top / 2).all(|l| (1..=top).all(|j| a_at(&a, j, l).is_zero())),
        "nonzero a_(j,l) beyond T"
    );
    Ok(BernoulliIdentity {
        mvec: mvec.clone(),
        t,
        rhs,
    })
}

/// Builds the identity for `mvec`.
pub fn bernoulli_identity(mvec: &MVector) -> Result<BernoulliIdentity> {
    let tables = Tables::new(mvec.table_depth().max(max_entry(mvec)));
    bernoulli_identity_with(&tables, mvec)
}

/// `sum_{k_1+..+k_n=k} prod_j k_j^{m_j} B_{2k_j}/(2k_j)!` by enumeration of
/// compositions.
pub fn bernoulli_lhs(mvec: &MVector, k: u64) -> Result<Rational> {
    let n = mvec.n();
    if k < n as u64 {
        return domain(format!("k = {k} is smaller than n = {n}"));
    }
    let weights: Vec<Vec<Rational>> = mvec
        .entries()
        .iter()
        .map(|&m| {
            (0..=k)
                .map(|kj| {
                    let base = Rational::from_integer(kj.into());
                    num_traits::pow(base, m as usize) * bernoulli_over_factorial(kj as usize)
                })
                .collect()
        })
        .collect();
    Ok(compositions(k, n).fold(Rational::zero(), |acc, comp| {
        let term = comp
            .iter()
            .zip(&weights)
            .fold(Rational::one(), |t, (&kj, w)| t * &w[kj as usize]);
        acc + term
    }))
}

/// Outcome of an exact comparison of the two sides of an identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check<V> {
    pub lhs: V,
    pub rhs: V,
}

impl<V: PartialEq> Check<V> {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Compares [`bernoulli_lhs`] with the evaluated identity at `k`.
pub fn verify_bernoulli(mvec: &MVector, k: u64) -> Result<Check<Rational>> {
    let id = bernoulli_identity(mvec)?;
    verify_bernoulli_identity(&id, k)
}

pub fn verify_bernoulli_identity(id: &BernoulliIdentity, k: u64) -> Result<Check<Rational>> {
    let lhs = bernoulli_lhs(&id.mvec, k)?;
    Ok(Check {
        lhs,
        rhs: id.evaluate(k),
    })
}
