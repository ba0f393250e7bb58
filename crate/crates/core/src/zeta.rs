//! Even zeta values as exact rational multiples of `pi^{2w}`, and weighted
//! sums of products of even zeta values.
//!
//! Euler's evaluation `zeta(2j) = (-1)^{j+1} B_{2j} (2 pi)^{2j} / (2 (2j)!)`
//! turns every weighted Bernoulli sum into an identity of the form
//!
//! ```text
//! sum_{k_1+..+k_n=k} F(k_1..k_n) zeta(2k_1)..zeta(2k_n)
//!     = terms_0(k) zeta(2k) + sum_{l=1}^{min(T,k)} terms_l(k) zeta(2l) zeta(2k-2l)
//! ```
//!
//! The `l = 0` coefficient is stored as the coefficient of plain `zeta(2k)`,
//! i.e. already multiplied by `zeta(0) = -1/2`.

use std::fmt;
use std::ops::Mul;

use num_traits::{One, Zero};

use crate::bernoulli_sums::{a_coeffs, top_index, BernoulliIdentity, MVector};
use crate::combinatorics::compositions;
use crate::error::{domain, Error, Result};
use crate::polynomials::{MultiPoly, UniPoly};
use crate::rationals::{bernoulli, factorial, pow2, rat, sign_pow, Rational};
use crate::tables::Tables;

/// `coeff * pi^{2 weight}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PiValue {
    pub weight: u32,
    pub coeff: Rational,
}

impl PiValue {
    pub fn new(weight: u32, coeff: Rational) -> Self {
        PiValue { weight, coeff }
    }

    pub fn zero(weight: u32) -> Self {
        PiValue::new(weight, Rational::zero())
    }

    pub fn one() -> Self {
        PiValue::new(0, Rational::one())
    }

    pub fn checked_add(&self, other: &PiValue) -> Result<PiValue> {
        if self.weight != other.weight {
            return Err(Error::WeightMismatch {
                left: self.weight,
                right: other.weight,
            });
        }
        Ok(PiValue::new(self.weight, &self.coeff + &other.coeff))
    }

    pub fn scale(&self, c: &Rational) -> PiValue {
        PiValue::new(self.weight, &self.coeff * c)
    }

    /// Floating-point approximation.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.coeff.to_f64().unwrap_or(f64::NAN) * std::f64::consts::PI.powi(2 * self.weight as i32)
    }
}

impl Mul for &PiValue {
    type Output = PiValue;
    fn mul(self, rhs: &PiValue) -> PiValue {
        PiValue::new(self.weight + rhs.weight, &self.coeff * &rhs.coeff)
    }
}

impl fmt::Display for PiValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.weight {
            0 => write!(f, "{}", self.coeff),
            w => write!(f, "{} pi^{}", self.coeff, 2 * w),
        }
    }
}

/// `zeta(2j)` for `j >= 1`, and the formal value `zeta(0) = -1/2`.
pub fn zeta_even(j: u32) -> PiValue {
    let b = bernoulli(2 * j as usize);
    let two_pow = pow2(2 * j as i64);
    let fact = Rational::from_integer(factorial(2 * j as u64));
    let coeff = sign_pow(j as u64 + 1) * b * two_pow / (fact * Rational::from_integer(2.into()));
    PiValue::new(j, coeff)
}

/// Which multiple zeta flavour an identity sums over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityKind {
    /// Products of single zeta values `zeta(2k_1)..zeta(2k_n)`.
    Zeta,
    /// Multiple zeta values `zeta(2k_1, ..., 2k_n)`.
    Mzv,
    /// Multiple zeta-star values `zeta*(2k_1, ..., 2k_n)`.
    Mzsv,
}

impl IdentityKind {
    pub fn as_str(self) -> &'static str {
        match self {
            IdentityKind::Zeta => "zeta",
            IdentityKind::Mzv => "mzv",
            IdentityKind::Mzsv => "mzsv",
        }
    }
}

/// How the weight polynomial `F` was supplied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightSpec {
    /// `F = x_1^{m_1} .. x_n^{m_n}`
    Monomial(MVector),
    Poly(MultiPoly),
}

impl WeightSpec {
    /// Total degree `r` of `F` (zero for `F = 0`).
    pub fn degree(&self) -> usize {
        match self {
            WeightSpec::Monomial(m) => m.weight(),
            WeightSpec::Poly(p) => p.total_degree().unwrap_or(0) as usize,
        }
    }

    pub fn as_poly(&self) -> MultiPoly {
        match self {
            WeightSpec::Monomial(m) => {
                MultiPoly::monomial(m.n(), Rational::one(), m.entries().to_vec())
                    .expect("exponents match arity")
            }
            WeightSpec::Poly(p) => p.clone(),
        }
    }
}

/// Symbolic right-hand side `sum_l terms[l](k) zeta(2l) zeta(2k-2l)`, with
/// `terms[0]` the coefficient of plain `zeta(2k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedSumIdentity {
    pub kind: IdentityKind,
    pub n: usize,
    pub weight: WeightSpec,
    pub t: usize,
    pub terms: Vec<UniPoly>,
}

impl WeightedSumIdentity {
    /// Total degree `r` of the weight polynomial.
    pub fn degree(&self) -> usize {
        self.weight.degree()
    }

    /// `deg terms[l] <= r + n - 2l - 1` for every `l`.
    pub fn degree_bounds_hold(&self) -> bool {
        let top = (self.degree() + self.n) as i64;
        self.terms.iter().enumerate().all(|(l, p)| match p.degree() {
            None => true,
            Some(d) => (d as i64) < top - 2 * l as i64,
        })
    }

    /// `terms[l]`, zero beyond `T`.
    pub fn term(&self, l: usize) -> UniPoly {
        self.terms.get(l).cloned().unwrap_or_else(UniPoly::zero)
    }
}

fn empty_identity(kind: IdentityKind, n: usize, weight: WeightSpec) -> WeightedSumIdentity {
    let t = top_index(weight.degree(), n);
    WeightedSumIdentity {
        kind,
        n,
        weight,
        t,
        terms: vec![UniPoly::zero(); t + 1],
    }
}

/// `(2l)! / B_{2l}`, times `zeta(0) = -1/2` when `l = 0`.
fn basis_factor(l: usize) -> Rational {
    let f = Rational::from_integer(factorial(2 * l as u64)) / bernoulli(2 * l);
    if l == 0 {
        f * rat(-1, 2)
    } else {
        f
    }
}

/// Identity for `F = x_1^{m_1}..x_n^{m_n}`, built directly from the `a_{j,l}`:
/// `terms[l] = (-1)^n (2l)!/B_{2l} sum_j a_{j,l} 2^{j+1-|m|-n} (k-l)^{j-1}`.
pub fn zeta_identity_monomial_with(tables: &Tables, mvec: &MVector) -> Result<WeightedSumIdentity> {
    let a = a_coeffs(tables, mvec)?;
    let n = mvec.n();
    let top = mvec.weight() + n;
    let mut id = empty_identity(IdentityKind::Zeta, n, WeightSpec::Monomial(mvec.clone()));
    let sign = sign_pow(n as u64);
    for l in 0..=id.t {
        let mut p = UniPoly::zero();
        for j in 1..=top.saturating_sub(2 * l) {
            let ajl = a
                .get(j - 1)
                .and_then(|r| r.get(l))
                .cloned()
                .unwrap_or_else(Rational::zero);
            if ajl.is_zero() {
                continue;
            }
            let c = ajl * pow2(j as i64 + 1 - top as i64);
            p = p + UniPoly::monomial(Rational::one(), j - 1).shift(l as i64).scale(&c);
        }
        id.terms[l] = p.scale(&(&sign * basis_factor(l)));
    }
    Ok(id)
}

pub fn zeta_identity_monomial(mvec: &MVector) -> Result<WeightedSumIdentity> {
    zeta_identity_monomial_with(&Tables::new(mvec.table_depth()), mvec)
}

/// Converts a Bernoulli identity term by term through Euler's formula:
/// `terms[l] = (-1)^n 2^{2-n} (2l)!/B_{2l} rhs[l]` (times `-1/2` at `l = 0`).
pub fn zeta_identity_from_bernoulli(id: &BernoulliIdentity) -> WeightedSumIdentity {
    let n = id.mvec.n();
    let scale = sign_pow(n as u64) * pow2(2 - n as i64);
    let mut out = empty_identity(IdentityKind::Zeta, n, WeightSpec::Monomial(id.mvec.clone()));
    for (l, p) in id.rhs.iter().enumerate() {
        out.terms[l] = p.scale(&(&scale * basis_factor(l)));
    }
    out
}

/// Identity for an arbitrary (not necessarily symmetric) polynomial `F` in
/// `n` variables, by linearity over its monomials.
pub fn zeta_identity_poly(f: &MultiPoly, n: usize) -> Result<WeightedSumIdentity> {
    if f.arity() != n {
        return Err(Error::ArityMismatch {
            left: n,
            right: f.arity(),
        });
    }
    if n == 0 {
        return domain("n must be positive");
    }
    let r = f.total_degree().unwrap_or(0) as usize;
    let tables = Tables::new(r + n - 1);
    let mut id = empty_identity(IdentityKind::Zeta, n, WeightSpec::Poly(f.clone()));
    for (c, e) in f.monomials() {
        let mono = zeta_identity_monomial_with(&tables, &MVector::new(e)?)?;
        for (l, p) in mono.terms.iter().enumerate() {
            id.terms[l] = &id.terms[l] + &p.scale(&c);
        }
    }
    Ok(id)
}

/// `sum_{k_1+..+k_n=k} F(k_1..k_n) zeta(2k_1)..zeta(2k_n)` by enumeration.
pub fn eval_zeta_lhs(f: &MultiPoly, n: usize, k: u64) -> Result<PiValue> {
    if f.arity() != n {
        return Err(Error::ArityMismatch {
            left: n,
            right: f.arity(),
        });
    }
    if k < n as u64 || n == 0 {
        return domain(format!("k = {k} is smaller than n = {n}"));
    }
    let zetas: Vec<PiValue> = (0..=k as u32).map(zeta_even).collect();
    let mut acc = PiValue::zero(k as u32);
    for comp in compositions(k, n) {
        let w = f.evaluate_ints(&comp)?;
        if w.is_zero() {
            continue;
        }
        let prod = comp
            .iter()
            .fold(PiValue::one(), |p, &kj| &p * &zetas[kj as usize]);
        acc = acc.checked_add(&prod.scale(&w))?;
    }
    Ok(acc)
}

/// Evaluates the symbolic right-hand side at `k`, truncated at
/// `min(T, k)`.
pub fn eval_identity_rhs(id: &WeightedSumIdentity, k: u64) -> Result<PiValue> {
    let mut acc = PiValue::zero(k as u32);
    let top = id.t.min(k as usize);
    for l in 0..=top {
        let c = id.terms[l].eval_int(k as i64);
        if c.is_zero() {
            continue;
        }
        let basis = if l == 0 {
            zeta_even(k as u32)
        } else {
            &zeta_even(l as u32) * &zeta_even((k as usize - l) as u32)
        };
        acc = acc.checked_add(&basis.scale(&c))?;
    }
    Ok(acc)
}

/// Exact comparison of both sides of the weighted zeta sum formula.
pub fn verify_zeta(
    f: &MultiPoly,
    n: usize,
    k: u64,
) -> Result<crate::bernoulli_sums::Check<PiValue>> {
    let id = zeta_identity_poly(f, n)?;
    verify_zeta_identity(&id, k)
}

pub fn verify_zeta_identity(
    id: &WeightedSumIdentity,
    k: u64,
) -> Result<crate::bernoulli_sums::Check<PiValue>> {
    let f = id.weight.as_poly();
    Ok(crate::bernoulli_sums::Check {
        lhs: eval_zeta_lhs(&f, id.n, k)?,
        rhs: eval_identity_rhs(id, k)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bernoulli_sums::bernoulli_identity;
    use crate::polynomials::parse_poly;
    use crate::rationals::int;

    fn mv(v: &[u32]) -> MVector {
        MVector::new(v.to_vec()).unwrap()
    }

    fn k_poly(c: &[(i64, i64)]) -> UniPoly {
        UniPoly::from_ratios(c)
    }

    #[test]
    fn euler_values() {
        assert_eq!(zeta_even(1), PiValue::new(1, rat(1, 6)));
        assert_eq!(zeta_even(2), PiValue::new(2, rat(1, 90)));
        assert_eq!(zeta_even(3), PiValue::new(3, rat(1, 945)));
        assert_eq!(zeta_even(0), PiValue::new(0, rat(-1, 2)));
        assert!((zeta_even(2).to_f64() - 1.082_323_233_711_138).abs() < 1e-12);
    }

    #[test]
    fn pi_value_arithmetic() {
        let a = zeta_even(1);
        let b = zeta_even(2);
        assert!(a.checked_add(&b).is_err());
        assert_eq!((&a * &a).weight, 2);
        assert_eq!(
            (&a * &a).checked_add(&b).unwrap(),
            PiValue::new(2, rat(1, 36) + rat(1, 90))
        );
    }

    #[test]
    fn four_fold_examples() {
        let id = zeta_identity_monomial(&mv(&[0, 0, 0, 0])).unwrap();
        // (k+1)(2k+1)(2k+3)/24
        let t0 = k_poly(&[(1, 1), (1, 1)]) * k_poly(&[(1, 1), (2, 1)]) * k_poly(&[(3, 1), (2, 1)]);
        assert_eq!(id.terms[0], t0.scale(&rat(1, 24)));
        assert_eq!(id.terms[1], k_poly(&[(0, 1), (-2, 1)]));
        let id = zeta_identity_monomial(&mv(&[2, 0, 0, 0])).unwrap();
        assert_eq!(id.terms[2], k_poly(&[(-5, 1), (2, 1)]).scale(&rat(9, 8)));
    }

    #[test]
    fn depth_one() {
        let id = zeta_identity_monomial(&mv(&[0])).unwrap();
        assert_eq!(id.terms, vec![UniPoly::one()]);
        let x1 = parse_poly("x1", 1).unwrap();
        assert!(verify_zeta(&x1, 1, 5).unwrap().holds());
    }

    #[test]
    fn lhs_examples() {
        let one2 = MultiPoly::one(2);
        assert_eq!(eval_zeta_lhs(&one2, 2, 2).unwrap(), PiValue::new(2, rat(1, 36)));
        let one1 = MultiPoly::one(1);
        assert_eq!(eval_zeta_lhs(&one1, 1, 3).unwrap(), PiValue::new(3, rat(1, 945)));
        assert!(eval_zeta_lhs(&one2, 2, 1).is_err());
    }

    #[test]
    fn monomial_grid_verifies_and_matches_bernoulli_route() {
        for n in 1..=4usize {
            for code in 0..4u32.pow(n as u32) {
                let v: Vec<u32> = (0..n).map(|i| (code / 4u32.pow(i as u32)) % 4).collect();
                if v.iter().sum::<u32>() > 3 {
                    continue;
                }
                let m = mv(&v);
                let direct = zeta_identity_monomial(&m).unwrap();
                let via = zeta_identity_from_bernoulli(&bernoulli_identity(&m).unwrap());
                assert_eq!(direct, via, "{v:?}");
                assert!(direct.degree_bounds_hold());
                for k in n as u64..=12 {
                    let check = verify_zeta_identity(&direct, k).unwrap();
                    assert!(check.holds(), "{v:?} k={k}");
                    assert_eq!(check.lhs.weight, k as u32);
                }
            }
        }
    }

    #[test]
    fn polynomial_weights() {
        let p4 = parse_poly("x1^2+x2^2+x3^2+x4^2", 4).unwrap();
        let id = zeta_identity_poly(&p4, 4).unwrap();
        let mono = zeta_identity_monomial(&mv(&[2, 0, 0, 0])).unwrap();
        for l in 0..=id.t {
            assert_eq!(id.terms[l], mono.terms[l].scale(&int(4)));
        }
        let one2 = MultiPoly::one(2);
        for k in 2..=10 {
            assert!(verify_zeta(&one2, 2, k).unwrap().holds());
        }
        let zero = zeta_identity_poly(&MultiPoly::zero(3), 3).unwrap();
        assert!(zero.terms.iter().all(UniPoly::is_zero));
        let cubes = MultiPoly::power_sum(4, 3);
        for k in 4..=10 {
            assert!(verify_zeta(&cubes, 4, k).unwrap().holds());
        }
        // non-symmetric weights are fine here
        let skew = parse_poly("x1^2*x2 - 3*x3 + 1/2", 3).unwrap();
        let id = zeta_identity_poly(&skew, 3).unwrap();
        assert!(id.degree_bounds_hold());
        for k in 3..=9 {
            assert!(verify_zeta_identity(&id, k).unwrap().holds());
        }
        assert!(zeta_identity_poly(&skew, 2).is_err());
    }
}
