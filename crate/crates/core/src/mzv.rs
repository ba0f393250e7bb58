//! Weighted sums of multiple zeta and zeta-star values at even arguments.
//!
//! For a symmetric weight `F` the sum over compositions of `k` of
//! `F(k_1..k_n) zeta(2k_1, ..., 2k_n)` is rewritten through the symmetric sum
//! formulas as a signed combination, over set partitions of `{1..n}`, of
//! weighted sums of products of single zeta values. Partitions with the same
//! block sizes contribute equally, so each block shape is reduced once to a
//! polynomial weight in fewer variables and handed to
//! [`zeta_identity_poly`].

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::bernoulli_sums::{top_index, Check};
use crate::combinatorics::compositions;
use crate::error::{domain, Error, Result};
use crate::polynomials::{MultiPoly, UniPoly};
use crate::rationals::{bernoulli, binom, factorial, sign_pow, Rational};
use crate::zeta::{
    eval_identity_rhs, zeta_even, zeta_identity_poly, IdentityKind, PiValue, WeightSpec,
    WeightedSumIdentity,
};

/// Largest `n` accepted by [`partitions`].
pub const MAX_PARTITION_SIZE: usize = 12;

/// A set partition of `{1..n}`. Blocks are sorted ascending and ordered by
/// their smallest element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Canonicalizes and validates a cover of `{1..n}` by disjoint blocks.
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        for b in &mut blocks {
            if b.is_empty() {
                return domain("empty block");
            }
            b.sort_unstable();
            for &x in b.iter() {
                if x == 0 || x > n || seen[x] {
                    return domain(format!("{x} is out of range or repeated"));
                }
                seen[x] = true;
            }
        }
        if seen[1..].iter().any(|s| !s) {
            return domain("blocks do not cover the ground set");
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition { blocks })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Number of blocks `i`.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Size `n` of the ground set.
    pub fn ground_size(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// Block sizes in non-increasing order.
    pub fn shape(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.blocks.iter().map(Vec::len).collect();
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    }

    pub fn weight(&self) -> PartitionWeight {
        PartitionWeight::of_shape(self.ground_size(), &self.shape())
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let items: Vec<String> = b.iter().map(usize::to_string).collect();
                format!("{{{}}}", items.join(","))
            })
            .collect();
        write!(f, "{{{}}}", blocks.join(","))
    }
}

/// `c = prod_j (l_j - 1)!` and `c_tilde = (-1)^{n-i} c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionWeight {
    pub c: BigInt,
    pub c_tilde: BigInt,
}

impl PartitionWeight {
    pub fn of_shape(n: usize, shape: &[usize]) -> Self {
        let c: BigInt = shape
            .iter()
            .map(|&l| factorial(l as u64 - 1))
            .product();
        let c_tilde = if (n - shape.len()).is_multiple_of(2) {
            c.clone()
        } else {
            -c.clone()
        };
        PartitionWeight { c, c_tilde }
    }

    /// `c` for zeta-star sums, `c_tilde` otherwise.
    pub fn signed(&self, star: bool) -> &BigInt {
        if star {
            &self.c
        } else {
            &self.c_tilde
        }
    }
}

/// Set partitions of `{1..n}` in restricted-growth-string order.
#[derive(Debug, Clone)]
pub struct SetPartitions {
    rgs: Vec<usize>,
    maxes: Vec<usize>,
    done: bool,
}

impl Iterator for SetPartitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        let n = self.rgs.len();
        let count = self.rgs.iter().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); count];
        for (i, &b) in self.rgs.iter().enumerate() {
            blocks[b].push(i + 1);
        }
        let current = SetPartition { blocks };
        // advance: rightmost position that can grow
        let mut i = n;
        loop {
            if i <= 1 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.rgs[i] <= self.maxes[i - 1] {
                self.rgs[i] += 1;
                self.maxes[i] = self.maxes[i - 1].max(self.rgs[i]);
                for j in i + 1..n {
                    self.rgs[j] = 0;
                    self.maxes[j] = self.maxes[i];
                }
                break;
            }
        }
        Some(current)
    }
}

/// Every set partition of `{1..n}`, `1 <= n <= 12`, in canonical form.
pub fn partitions(n: usize) -> Result<SetPartitions> {
    if n == 0 || n > MAX_PARTITION_SIZE {
        return domain(format!("n = {n} is outside 1..={MAX_PARTITION_SIZE}"));
    }
    Ok(SetPartitions {
        rgs: vec![0; n],
        maxes: vec![0; n],
        done: false,
    })
}

/// Integer partitions of `n` as non-increasing part lists, largest first.
pub fn shapes(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=cap.min(rest)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, n, &mut Vec::new(), &mut out);
    }
    out
}

fn check_shape(shape: &[usize]) -> Result<usize> {
    if shape.is_empty() || shape.contains(&0) {
        return domain("a shape needs at least one part and every part positive");
    }
    if shape.windows(2).any(|w| w[0] < w[1]) {
        return domain("shape parts must be non-increasing");
    }
    Ok(shape.iter().sum())
}

/// Number of set partitions of `{1..n}` with block sizes `shape`:
/// `n! / (prod l_j! * prod_s (multiplicity of s)!)`.
pub fn shape_count(shape: &[usize]) -> Result<BigInt> {
    let n = check_shape(shape)?;
    let mut denom = BigInt::one();
    for &l in shape {
        denom *= factorial(l as u64);
    }
    for (_, run) in &itertools::Itertools::chunk_by(shape.iter(), |&&l| l) {
        denom *= factorial(run.count() as u64);
    }
    Ok(factorial(n as u64) / denom)
}

/// `sum_{i=1}^{k-1} i^{p1} (k-i)^{p2}` as a polynomial in `k`, valid for
/// every `k >= 1`.
pub fn power_sum_2(p1: u32, p2: u32) -> UniPoly {
    let (p1, p2) = (p1 as usize, p2 as usize);
    let km1 = UniPoly::from_ratios(&[(-1, 1), (1, 1)]);
    let mut out = UniPoly::zero();
    for s in p1..=p1 + p2 {
        for i in 0..=s {
            let j = s - i;
            let b = bernoulli(i);
            if b.is_zero() {
                continue;
            }
            let c = sign_pow((j + p1) as u64)
                * Rational::from_integer(binom(s as u64, i as u64) * binom(p2 as u64, (s - p1) as u64))
                * b
                / Rational::from_integer((j as i64 + 1).into());
            let term = km1.pow(j as u32 + 1).mul_x_pow(p1 + p2 - s).scale(&c);
            out = out + term;
        }
    }
    out
}

/// `sum_{k_1+..+k_n=k, k_j>=1} k_1^{p_1}..k_n^{p_n}` as a polynomial in `k`,
/// valid for every `k >= 1` (it vanishes for `k < n`).
pub fn composition_power_sum(pvec: &[u32]) -> Result<UniPoly> {
    let Some((&last, rest)) = pvec.split_last() else {
        return domain("empty exponent vector");
    };
    let mut cache: HashMap<(u32, u32), UniPoly> = HashMap::new();
    let mut acc = UniPoly::monomial(Rational::one(), last as usize);
    for &p in rest.iter().rev() {
        let mut next = UniPoly::zero();
        for (q, c) in acc.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let s = cache
                .entry((p, q as u32))
                .or_insert_with(|| power_sum_2(p, q as u32));
            next = next + s.scale(c);
        }
        acc = next;
    }
    Ok(acc)
}

/// Sums `F` over compositions of each block total, with block `j` owning
/// consecutive variables: the result `G(t_1..t_i)` is the sum of
/// `F(k_1..k_n)` over all ways of splitting each `t_j` into `l_j` positive
/// parts.
pub fn block_reduce(f: &MultiPoly, shape: &[usize]) -> Result<MultiPoly> {
    let n = shape.iter().sum::<usize>();
    if shape.is_empty() || shape.contains(&0) {
        return domain("a shape needs at least one part and every part positive");
    }
    if f.arity() != n {
        return Err(Error::ArityMismatch {
            left: n,
            right: f.arity(),
        });
    }
    let i = shape.len();
    let mut cache: HashMap<Vec<u32>, UniPoly> = HashMap::new();
    let mut out = MultiPoly::zero(i);
    for (c, e) in f.monomials() {
        let mut term = MultiPoly::constant(i, c);
        let mut offset = 0;
        for (j, &l) in shape.iter().enumerate() {
            let slice = e[offset..offset + l].to_vec();
            offset += l;
            let p = match cache.get(&slice) {
                Some(p) => p.clone(),
                None => {
                    let p = composition_power_sum(&slice)?;
                    cache.insert(slice, p.clone());
                    p
                }
            };
            let block = MultiPoly::from_terms(
                i,
                p.coeffs().iter().enumerate().map(|(d, c)| {
                    let mut ex = vec![0; i];
                    ex[j] = d as u32;
                    (ex, c.clone())
                }),
            )?;
            term = term.mul(&block)?;
        }
        out = out.add(&term)?;
    }
    Ok(out)
}

fn require_symmetric(f: &MultiPoly, n: usize) -> Result<()> {
    if f.arity() != n {
        return Err(Error::ArityMismatch {
            left: n,
            right: f.arity(),
        });
    }
    if n == 0 {
        return domain("n must be positive");
    }
    if !f.is_symmetric() {
        return domain("the weight polynomial must be symmetric");
    }
    Ok(())
}

fn weighted_identity(f: &MultiPoly, n: usize, star: bool) -> Result<WeightedSumIdentity> {
    require_symmetric(f, n)?;
    let r = f.total_degree().unwrap_or(0) as usize;
    let t = top_index(r, n);
    let mut terms = vec![UniPoly::zero(); t + 1];
    let n_fact = Rational::from_integer(factorial(n as u64));
    for shape in shapes(n) {
        let w = PartitionWeight::of_shape(n, &shape);
        let coef = Rational::from_integer(w.signed(star) * shape_count(&shape)?) / &n_fact;
        let g = block_reduce(f, &shape)?;
        let part = zeta_identity_poly(&g, shape.len())?;
        for (l, p) in part.terms.iter().enumerate() {
            terms[l] = &terms[l] + &p.scale(&coef);
        }
    }
    Ok(WeightedSumIdentity {
        kind: if star {
            IdentityKind::Mzsv
        } else {
            IdentityKind::Mzv
        },
        n,
        weight: WeightSpec::Poly(f.clone()),
        t,
        terms,
    })
}

/// Identity for `sum F(k_1..k_n) zeta(2k_1, ..., 2k_n)` with `F` symmetric.
pub fn mzv_identity(f: &MultiPoly, n: usize) -> Result<WeightedSumIdentity> {
    weighted_identity(f, n, false)
}

/// Identity for `sum F(k_1..k_n) zeta*(2k_1, ..., 2k_n)` with `F` symmetric.
pub fn mzsv_identity(f: &MultiPoly, n: usize) -> Result<WeightedSumIdentity> {
    weighted_identity(f, n, true)
}

/// Left side by direct expansion: `1/n!` times the sum over every set
/// partition and every composition of `k`, with no shape grouping or
/// polynomial reduction.
pub fn mzv_lhs_exact(f: &MultiPoly, n: usize, k: u64, star: bool) -> Result<PiValue> {
    require_symmetric(f, n)?;
    if k < n as u64 {
        return domain(format!("k = {k} is smaller than n = {n}"));
    }
    let parts: Vec<(SetPartition, BigInt)> = partitions(n)?
        .map(|p| {
            let w = p.weight().signed(star).clone();
            (p, w)
        })
        .collect();
    let zetas: Vec<PiValue> = (0..=k as u32).map(zeta_even).collect();
    let mut total = Rational::zero();
    for comp in compositions(k, n) {
        let fv = f.evaluate_ints(&comp)?;
        if fv.is_zero() {
            continue;
        }
        let mut inner = Rational::zero();
        for (p, w) in &parts {
            let prod = p.blocks().iter().fold(Rational::from_integer(w.clone()), |acc, b| {
                let s: u64 = b.iter().map(|&x| comp[x - 1]).sum();
                acc * &zetas[s as usize].coeff
            });
            inner += prod;
        }
        total += fv * inner;
    }
    Ok(PiValue::new(
        k as u32,
        total / Rational::from_integer(factorial(n as u64)),
    ))
}

/// Compares [`mzv_lhs_exact`] with the evaluated symbolic identity.
pub fn verify_mzv(f: &MultiPoly, n: usize, k: u64, star: bool) -> Result<Check<PiValue>> {
    let id = if star {
        mzsv_identity(f, n)?
    } else {
        mzv_identity(f, n)?
    };
    verify_mzv_identity(&id, k)
}

pub fn verify_mzv_identity(id: &WeightedSumIdentity, k: u64) -> Result<Check<PiValue>> {
    let star = match id.kind {
        IdentityKind::Mzv => false,
        IdentityKind::Mzsv => true,
        IdentityKind::Zeta => return domain("expected a multiple zeta identity"),
    };
    let f = id.weight.as_poly();
    Ok(Check {
        lhs: mzv_lhs_exact(&f, id.n, k, star)?,
        rhs: eval_identity_rhs(id, k)?,
    })
}

/// Truncated series value together with an upper bound on the omitted tail.
#[derive(Debug, Clone, PartialEq)]
pub struct NumericEstimate {
    /// Exact partial sum over `M >= m_1 > .. > m_n >= 1`.
    pub partial: Rational,
    /// `zeta(2)^{n-1} M^{1-k_1}`
    pub tail_bound: f64,
}

impl NumericEstimate {
    pub fn value(&self) -> f64 {
        self.partial.to_f64().unwrap_or(f64::NAN)
    }

    /// The partial sum truncated to `digits` decimal places.
    pub fn decimal(&self, digits: usize) -> String {
        let scale = num_traits::pow(BigInt::from(10), digits);
        let q = (self.partial.numer() * scale).div_floor(self.partial.denom());
        let s = q.to_string();
        if digits == 0 {
            return s;
        }
        let padded = format!("{:0>width$}", s, width = digits + 1);
        let (int_part, frac) = padded.split_at(padded.len() - digits);
        format!("{int_part}.{frac}")
    }
}

impl fmt::Display for NumericEstimate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (tail <= {:e})", self.decimal(15), self.tail_bound)
    }
}

/// Partial sum of `zeta(k_1, ..., k_n)` over `m_1 <= M`, computed exactly.
///
/// Every letter must be at least 2 so the tail bound applies.
pub fn mzv_numeric(kvec: &[u32], m: u64) -> Result<NumericEstimate> {
    if kvec.is_empty() {
        return domain("empty index");
    }
    if kvec.iter().any(|&k| k < 2) {
        return domain("every index must be at least 2");
    }
    if m < 10 {
        return domain(format!("truncation bound {m} is below 10"));
    }
    // common denominator L = lcm(1..M), so m^{-k} = (L/m)^k / L^k
    let l = (1..=m).fold(BigInt::one(), |acc, i| acc.lcm(&BigInt::from(i)));
    let quotients: Vec<BigInt> = (1..=m).map(|i| &l / BigInt::from(i)).collect();
    // level j: running sums over m_j <= x, scaled by L^{k_j + .. + k_n}
    let mut below: Vec<BigInt> = vec![BigInt::one(); m as usize + 1];
    below[0] = BigInt::zero();
    let mut first = true;
    for &k in kvec.iter().rev() {
        let mut cur = vec![BigInt::zero(); m as usize + 1];
        let mut run = BigInt::zero();
        for x in 1..=m as usize {
            let prev = if first { &below[x] } else { &below[x - 1] };
            if !prev.is_zero() {
                run += num_traits::pow(quotients[x - 1].clone(), k as usize) * prev;
            }
            cur[x] = run.clone();
        }
        below = cur;
        first = false;
    }
    let weight: u32 = kvec.iter().sum();
    let partial = Rational::new(below[m as usize].clone(), num_traits::pow(l, weight as usize));
    let zeta2 = std::f64::consts::PI.powi(2) / 6.0;
    let tail_bound = zeta2.powi(kvec.len() as i32 - 1) * (m as f64).powf(1.0 - kvec[0] as f64);
    Ok(NumericEstimate {
        partial,
        tail_bound,
    })
}
