//! Noncommutative polynomials in letters `z_1, z_2, ...` with the two
//! harmonic (quasi-shuffle) products
//!
//! ```text
//! z_k w1 * z_l w2 = z_k (w1 * z_l w2) + z_l (z_k w1 * w2) + z_{k+l} (w1 * w2)
//! ```
//!
//! and its variant with `- z_{k+l}` on the merged term, and a word-level check
//! of the symmetric sum formulas.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::bernoulli_sums::Check;
use crate::error::{domain, Result};
use crate::mzv::partitions;
use crate::rationals::Rational;

/// Largest length accepted by [`symmetric_word_sum`].
pub const MAX_SYMMETRIC_LENGTH: usize = 8;
/// Largest length accepted by [`verify_symmetric_sums`].
pub const MAX_VERIFY_LENGTH: usize = 6;

/// The word `z_{k_1} .. z_{k_n}`; the empty word is the unit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if letters.contains(&0) {
            return domain("letters must be positive");
        }
        Ok(Word(letters))
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Empty, or first letter at least 2.
    pub fn is_admissible(&self) -> bool {
        self.0.first().is_none_or(|&k| k >= 2)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        write!(f, "{}", self.0.iter().map(|k| format!("z{k}")).join(" "))
    }
}

/// Finite rational combination of words, zero coefficients never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NCPoly {
    terms: BTreeMap<Word, Rational>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly::default()
    }

    pub fn one() -> Self {
        NCPoly::word(Word::empty())
    }

    pub fn word(w: Word) -> Self {
        let mut p = NCPoly::zero();
        p.add_term(w, Rational::one());
        p
    }

    /// The single-letter polynomial `z_k`.
    pub fn letter(k: u32) -> Result<Self> {
        Ok(NCPoly::word(Word::new(vec![k])?))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Rational)>) -> Self {
        let mut p = NCPoly::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
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

    pub fn add(&self, other: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> NCPoly {
        NCPoly::from_terms(self.terms.iter().map(|(w, v)| (w.clone(), v * c)))
    }

    /// Every word with a nonzero coefficient is admissible.
    pub fn is_admissible(&self) -> bool {
        self.terms.keys().all(Word::is_admissible)
    }
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut parts = self.terms.iter().map(|(w, c)| {
            if c.is_one() {
                w.to_string()
            } else {
                format!("{c} {w}")
            }
        });
        write!(f, "{}", parts.join(" + "))
    }
}

/// Which harmonic product: `+` (`Star`) or `-` (`Sbar`) on the merged letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Product {
    Star,
    Sbar,
}

type Memo = HashMap<(Vec<u32>, Vec<u32>), BTreeMap<Vec<u32>, i64>>;

fn word_product(u: &[u32], v: &[u32], merge_sign: i64, memo: &mut Memo) -> BTreeMap<Vec<u32>, i64> {
    if u.is_empty() || v.is_empty() {
        let w = if u.is_empty() { v } else { u };
        return BTreeMap::from([(w.to_vec(), 1)]);
    }
    let key = (u.to_vec(), v.to_vec());
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let mut out: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
    let mut prepend = |letter: u32, part: BTreeMap<Vec<u32>, i64>, sign: i64| {
        for (w, c) in part {
            let mut word = Vec::with_capacity(w.len() + 1);
            word.push(letter);
            word.extend(w);
            *out.entry(word).or_insert(0) += sign * c;
        }
    };
    prepend(u[0], word_product(&u[1..], v, merge_sign, memo), 1);
    prepend(v[0], word_product(u, &v[1..], merge_sign, memo), 1);
    prepend(u[0] + v[0], word_product(&u[1..], &v[1..], merge_sign, memo), merge_sign);
    out.retain(|_, c| *c != 0);
    memo.insert(key, out.clone());
    out
}

/// Bilinear extension of the word recursion.
pub fn product(u: &NCPoly, v: &NCPoly, kind: Product) -> NCPoly {
    let sign = match kind {
        Product::Star => 1,
        Product::Sbar => -1,
    };
    let mut memo = Memo::new();
    let mut out = NCPoly::zero();
    for (wu, cu) in &u.terms {
        for (wv, cv) in &v.terms {
            let c = cu * cv;
            for (w, m) in word_product(&wu.0, &wv.0, sign, &mut memo) {
                out.add_term(Word(w), &c * Rational::from_integer(m.into()));
            }
        }
    }
    out
}

/// The harmonic product with `+ z_{k+l}`.
pub fn star(u: &NCPoly, v: &NCPoly) -> NCPoly {
    product(u, v, Product::Star)
}

/// The harmonic product with `- z_{k+l}`.
pub fn sbar(u: &NCPoly, v: &NCPoly) -> NCPoly {
    product(u, v, Product::Sbar)
}

fn check_letters(kvec: &[u32], max_len: usize) -> Result<()> {
    if kvec.is_empty() || kvec.len() > max_len {
        return domain(format!("length {} is outside 1..={max_len}", kvec.len()));
    }
    if kvec.contains(&0) {
        return domain("letters must be positive");
    }
    Ok(())
}

/// `sum_{sigma in S_n} z_{k_sigma(1)} .. z_{k_sigma(n)}`, repeated letters
/// counted with multiplicity.
pub fn symmetric_word_sum(kvec: &[u32]) -> Result<NCPoly> {
    check_letters(kvec, MAX_SYMMETRIC_LENGTH)?;
    let mut counts: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
    for perm in (0..kvec.len()).permutations(kvec.len()) {
        *counts.entry(perm.iter().map(|&i| kvec[i]).collect()).or_insert(0) += 1;
    }
    Ok(NCPoly::from_terms(
        counts
            .into_iter()
            .map(|(w, c)| (Word(w), Rational::from_integer(c.into()))),
    ))
}

/// Sum over set partitions of `(c_tilde or c)` times the product, in the
/// chosen harmonic product, of one letter per block carrying the block's
/// letter sum. `Star` pairs with `c_tilde`, `Sbar` with `c`.
pub fn partition_word_sum(kvec: &[u32], kind: Product) -> Result<NCPoly> {
    check_letters(kvec, MAX_SYMMETRIC_LENGTH)?;
    let mut out = NCPoly::zero();
    let mut cache: HashMap<Vec<u32>, NCPoly> = HashMap::new();
    for p in partitions(kvec.len())? {
        let w = p.weight();
        let coef: &BigInt = w.signed(kind == Product::Sbar);
        let mut sums: Vec<u32> = p
            .blocks()
            .iter()
            .map(|b| b.iter().map(|&i| kvec[i - 1]).sum())
            .collect();
        // both products are commutative and associative
        sums.sort_unstable();
        let prod = match cache.get(&sums) {
            Some(hit) => hit.clone(),
            None => {
                let mut acc = NCPoly::one();
                for &s in &sums {
                    acc = product(&acc, &NCPoly::letter(s)?, kind);
                }
                cache.insert(sums, acc.clone());
                acc
            }
        };
        out = out.add(&prod.scale(&Rational::from_integer(coef.clone())));
    }
    Ok(out)
}

/// Word-level symmetric sum formulas, one check per harmonic product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricSumReport {
    pub star: Check<NCPoly>,
    pub sbar: Check<NCPoly>,
}

impl SymmetricSumReport {
    pub fn holds(&self) -> bool {
        self.star.holds() && self.sbar.holds()
    }
}

/// Compares [`symmetric_word_sum`] with both [`partition_word_sum`] forms.
pub fn verify_symmetric_sums(kvec: &[u32]) -> Result<SymmetricSumReport> {
    check_letters(kvec, MAX_VERIFY_LENGTH)?;
    let lhs = symmetric_word_sum(kvec)?;
    Ok(SymmetricSumReport {
        star: Check {
            lhs: lhs.clone(),
            rhs: partition_word_sum(kvec, Product::Star)?,
        },
        sbar: Check {
            lhs,
            rhs: partition_word_sum(kvec, Product::Sbar)?,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rationals::int;
    use proptest::prelude::*;

    fn w(letters: &[u32]) -> NCPoly {
        NCPoly::word(Word::new(letters.to_vec()).unwrap())
    }

    fn combo(items: &[(i64, &[u32])]) -> NCPoly {
        NCPoly::from_terms(
            items
                .iter()
                .map(|(c, l)| (Word::new(l.to_vec()).unwrap(), int(*c))),
        )
    }

    #[test]
    fn products_of_letters() {
        assert_eq!(star(&w(&[2]), &w(&[3])), combo(&[(1, &[2, 3]), (1, &[3, 2]), (1, &[5])]));
        assert_eq!(sbar(&w(&[2]), &w(&[2])), combo(&[(2, &[2, 2]), (-1, &[4])]));
        let x = w(&[1, 2, 3]);
        assert_eq!(star(&NCPoly::one(), &x), x);
        assert_eq!(sbar(&x, &NCPoly::one()), x);
        assert_eq!(star(&NCPoly::zero(), &x), NCPoly::zero());
    }

    #[test]
    fn longer_product() {
        // z2 z3 * z4 = z2 z3 z4 + z2 z4 z3 + z4 z2 z3 + z2 z7 + z6 z3
        assert_eq!(
            star(&w(&[2, 3]), &w(&[4])),
            combo(&[
                (1, &[2, 3, 4]),
                (1, &[2, 4, 3]),
                (1, &[4, 2, 3]),
                (1, &[2, 7]),
                (1, &[6, 3]),
            ])
        );
    }

    #[test]
    fn symmetric_sums() {
        assert_eq!(symmetric_word_sum(&[2]).unwrap(), w(&[2]));
        assert_eq!(symmetric_word_sum(&[2, 3]).unwrap(), combo(&[(1, &[2, 3]), (1, &[3, 2])]));
        assert_eq!(symmetric_word_sum(&[2, 2]).unwrap(), combo(&[(2, &[2, 2])]));
        assert!(symmetric_word_sum(&[1; 9]).is_err());
        assert!(symmetric_word_sum(&[]).is_err());
    }

    #[test]
    fn partition_sums() {
        for kind in [Product::Star, Product::Sbar] {
            assert_eq!(partition_word_sum(&[2], kind).unwrap(), w(&[2]));
            assert_eq!(
                partition_word_sum(&[2, 3], kind).unwrap(),
                combo(&[(1, &[2, 3]), (1, &[3, 2])])
            );
        }
    }

    #[test]
    fn symmetric_sum_formulas() {
        for k in [&[2, 3][..], &[2, 2, 2], &[1, 2, 3], &[1, 1, 2, 5, 3]] {
            assert!(verify_symmetric_sums(k).unwrap().holds(), "{k:?}");
        }
        for n in 1..=4usize {
            for kvec in (1..=3u32).combinations_with_replacement(n) {
                assert!(verify_symmetric_sums(&kvec).unwrap().holds(), "{kvec:?}");
            }
        }
        assert!(verify_symmetric_sums(&[1; 7]).is_err());
    }

    #[test]
    fn admissibility() {
        assert!(Word::empty().is_admissible());
        assert!(Word::new(vec![2, 1]).unwrap().is_admissible());
        assert!(!Word::new(vec![1, 2]).unwrap().is_admissible());
        assert!(Word::new(vec![0]).is_err());
    }

    fn arb_word() -> impl Strategy<Value = Vec<u32>> {
        prop::collection::vec(1u32..=4, 0..=4)
    }

    fn arb_admissible() -> impl Strategy<Value = Vec<u32>> {
        (2u32..=4, prop::collection::vec(1u32..=4, 0..=3)).prop_map(|(h, mut t)| {
            t.insert(0, h);
            t
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn products_commute(a in arb_word(), b in arb_word()) {
            let (u, v) = (w(&a), w(&b));
            prop_assert_eq!(star(&u, &v), star(&v, &u));
            prop_assert_eq!(sbar(&u, &v), sbar(&v, &u));
        }

        #[test]
        fn products_associate(a in arb_word(), b in arb_word(), c in arb_word()) {
            let (u, v, x) = (w(&a), w(&b), w(&c));
            prop_assert_eq!(star(&star(&u, &v), &x), star(&u, &star(&v, &x)));
            prop_assert_eq!(sbar(&sbar(&u, &v), &x), sbar(&u, &sbar(&v, &x)));
        }

        #[test]
        fn admissible_words_closed(a in arb_admissible(), b in arb_admissible()) {
            let (u, v) = (w(&a), w(&b));
            prop_assert!(star(&u, &v).is_admissible());
            prop_assert!(sbar(&u, &v).is_admissible());
        }
    }
}
