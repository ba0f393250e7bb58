use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rationals::Rational;

/// Exponent sequence of a monomial `x1^e1 ... xn^en`.
pub type Exponents = Vec<u32>;

/// Sparse multivariate polynomial over the rationals in `x1..xn`.
///
/// Terms are kept in lexicographic order of their exponent sequences and no
/// zero coefficient is ever stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    arity: usize,
    terms: BTreeMap<Exponents, Rational>,
}

impl MultiPoly {
    pub fn zero(arity: usize) -> Self {
        MultiPoly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(arity: usize, c: Rational) -> Self {
        Self::monomial(arity, c, vec![0; arity]).expect("constant exponents have the right length")
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, Rational::one())
    }

    /// The variable `x_{index+1}` (zero-based `index`).
    pub fn var(arity: usize, index: usize) -> Result<Self> {
        if index >= arity {
            return Err(Error::Domain(format!(
                "variable index {index} out of range for arity {arity}"
            )));
        }
        let mut e = vec![0; arity];
        e[index] = 1;
        Self::monomial(arity, Rational::one(), e)
    }

    pub fn monomial(arity: usize, c: Rational, exponents: Exponents) -> Result<Self> {
        if exponents.len() != arity {
            return Err(Error::ArityMismatch {
                left: arity,
                right: exponents.len(),
            });
        }
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponents, c);
        }
        Ok(MultiPoly { arity, terms })
    }

    /// Builds from a term list; repeated exponent sequences are summed.
    pub fn from_terms(
        arity: usize,
        terms: impl IntoIterator<Item = (Exponents, Rational)>,
    ) -> Result<Self> {
        let mut p = Self::zero(arity);
        for (e, c) in terms {
            if e.len() != arity {
                return Err(Error::ArityMismatch {
                    left: arity,
                    right: e.len(),
                });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// `sum_i x_i^p`
    pub fn power_sum(arity: usize, p: u32) -> Self {
        let terms = (0..arity).map(|i| {
            let mut e = vec![0; arity];
            e[i] = p;
            (e, Rational::one())
        });
        Self::from_terms(arity, terms).expect("exponent lengths match arity")
    }

    /// Elementary symmetric polynomial `e_d(x1..xn)`.
    pub fn elementary(arity: usize, d: usize) -> Self {
        use itertools::Itertools;
        let terms = (0..arity).combinations(d).map(|idx| {
            let mut e = vec![0; arity];
            for i in idx {
                e[i] = 1;
            }
            (e, Rational::one())
        });
        Self::from_terms(arity, terms).expect("exponent lengths match arity")
    }

    fn add_term(&mut self, e: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    /// Canonical (lexicographically ascending) term list.
    pub fn monomials(&self) -> Vec<(Rational, Exponents)> {
        self.terms
            .iter()
            .map(|(e, c)| (c.clone(), e.clone()))
            .collect()
    }

    fn check_arity(&self, other: &MultiPoly) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: other.arity,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.add(&other.negate())
    }

    pub fn mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_arity(other)?;
        let mut out = MultiPoly::zero(self.arity);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        (0..e).fold(MultiPoly::one(self.arity), |acc, _| {
            acc.mul(self).expect("same arity")
        })
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.arity);
        }
        MultiPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    pub fn negate(&self) -> MultiPoly {
        MultiPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), -a)).collect(),
        }
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: point.len(),
            });
        }
        Ok(self.terms.iter().fold(Rational::zero(), |acc, (e, c)| {
            let m = e
                .iter()
                .zip(point)
                .fold(c.clone(), |m, (&k, x)| m * num_traits::pow(x.clone(), k as usize));
            acc + m
        }))
    }

    /// Evaluation at a point of nonnegative integers.
    pub fn evaluate_ints(&self, point: &[u64]) -> Result<Rational> {
        let pt: Vec<Rational> = point
            .iter()
            .map(|&v| Rational::from_integer(v.into()))
            .collect();
        self.evaluate(&pt)
    }

    /// The polynomial with variables relabelled: variable `i` of `self`
    /// becomes variable `perm[i]` of the result.
    pub fn permute(&self, perm: &[usize]) -> Result<MultiPoly> {
        let mut seen = vec![false; self.arity];
        if perm.len() != self.arity
            || perm
                .iter()
                .any(|&p| p >= self.arity || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::Domain(format!(
                "{perm:?} is not a permutation of {} variables",
                self.arity
            )));
        }
        let terms = self.terms.iter().map(|(e, c)| {
            let mut ne = vec![0; self.arity];
            for (i, &k) in e.iter().enumerate() {
                ne[perm[i]] = k;
            }
            (ne, c.clone())
        });
        MultiPoly::from_terms(self.arity, terms)
    }

    /// Invariance under every adjacent transposition.
    pub fn is_symmetric(&self) -> bool {
        (0..self.arity.saturating_sub(1)).all(|i| {
            self.terms.iter().all(|(e, c)| {
                let mut swapped = e.clone();
                swapped.swap(i, i + 1);
                self.terms.get(&swapped) == Some(c)
            })
        })
    }

    /// Parser-compatible rendering, highest lexicographic term first
    /// (`x1^2 + 1/2*x1*x2 - 3`).
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (e, c) in self.terms.iter().rev() {
            let negative = c.is_negative();
            let abs = c.abs();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, k)
                    }
                })
                .collect();
            let mut factors = Vec::new();
            if !abs.is_one() || vars.is_empty() {
                factors.push(abs.to_string());
            }
            factors.extend(vars);
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({})", self.arity, self.render())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
