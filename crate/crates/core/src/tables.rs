//! Triangular tables `f_{m,i}(t)` and `g_{m,i}(t)`.
//!
//! With `D = t d/dt`, `h(t) = t/(e^t - 1)` and `f(t) = h(t) - 1 + t/2`,
//! the `m`-th derivative expands as `D^m f = sum_{i=0}^{m+1} f_{m,i}(t) h(t)^i`.
//! Columns `i >= 1` form a lower-triangular matrix `A_m(t)` with constant
//! diagonal `(-1)^m m!`; the `g_{m,i}(t)` are the entries of its inverse.
//! Only these coefficient tables are ever materialised.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{domain, Result};
use crate::polynomials::UniPoly;
use crate::rationals::{factorial, int, rat, sign_pow, Rational};

/// Rows `(f_{m,0}, ..., f_{m,m+1})` for `0 <= m <= depth`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FTable {
    rows: Vec<Vec<UniPoly>>,
}

/// Rows `(g_{m,1}, ..., g_{m,m+1})` for `0 <= m <= depth`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GTable {
    rows: Vec<Vec<UniPoly>>,
}

impl FTable {
    pub fn depth(&self) -> usize {
        self.rows.len() - 1
    }

    /// `f_{m,i}` for `0 <= i <= m+1`.
    pub fn get(&self, m: usize, i: usize) -> &UniPoly {
        &self.rows[m][i]
    }

    pub fn row(&self, m: usize) -> &[UniPoly] {
        &self.rows[m]
    }

    /// The strictly lower-triangular part (columns `i >= 1`) as a square
    /// lower-triangular matrix `A_depth(t)`.
    pub fn matrix(&self) -> Vec<Vec<UniPoly>> {
        self.rows.iter().map(|r| r[1..].to_vec()).collect()
    }
}

impl GTable {
    pub fn depth(&self) -> usize {
        self.rows.len() - 1
    }

    /// `g_{m,i}` for `1 <= i <= m+1`.
    pub fn get(&self, m: usize, i: usize) -> &UniPoly {
        &self.rows[m][i - 1]
    }

    pub fn matrix(&self) -> Vec<Vec<UniPoly>> {
        self.rows.clone()
    }
}

/// Builds `f_{m,i}` from `f_{0,0} = t/2 - 1`, `f_{0,1} = 1` and
///
/// ```text
/// f_{m,0}   = t f'_{m-1,0}
/// f_{m,m+1} = -m f_{m-1,m}
/// f_{m,i}   = t f'_{m-1,i} + i(1-t) f_{m-1,i} - (i-1) f_{m-1,i-1}   (1 <= i <= m)
/// ```
pub fn f_table(depth: usize) -> FTable {
    let t = UniPoly::x();
    let one_minus_t = UniPoly::from_ratios(&[(1, 1), (-1, 1)]);
    let mut rows = vec![vec![UniPoly::from_ratios(&[(-1, 1), (1, 2)]), UniPoly::one()]];
    for m in 1..=depth {
        let prev = &rows[m - 1];
        let mut row = Vec::with_capacity(m + 2);
        row.push(&t * &prev[0].derivative());
        for i in 1..=m {
            let ii = int(i as i64);
            let mut p = &t * &prev[i].derivative() + (&one_minus_t * &prev[i]).scale(&ii);
            if i > 1 {
                p = p - prev[i - 1].scale(&int(i as i64 - 1));
            }
            row.push(p);
        }
        row.push(prev[m].scale(&int(-(m as i64))));
        rows.push(row);
    }
    FTable { rows }
}

/// Builds `g_{m,i}` from `g_{m,m+1} = (-1)^m / m!` and
/// `g_{m,i} = (-1)^{m+1}/m! sum_{j=i}^{m} f_{m,j} g_{j-1,i}`.
pub fn g_table(f: &FTable) -> GTable {
    let depth = f.depth();
    let mut rows: Vec<Vec<UniPoly>> = Vec::with_capacity(depth + 1);
    for m in 0..=depth {
        let inv_fact = Rational::new(BigInt::one(), factorial(m as u64));
        let diag = &sign_pow(m as u64) * &inv_fact;
        let off = -&diag;
        let mut row = Vec::with_capacity(m + 1);
        for i in 1..=m {
            let s: UniPoly = (i..=m).map(|j| f.get(m, j) * &rows[j - 1][i - 1]).sum();
            row.push(s.scale(&off));
        }
        row.push(UniPoly::constant(diag));
        rows.push(row);
    }
    GTable { rows }
}

/// Inverse of a lower-triangular polynomial matrix whose diagonal entries
/// are nonzero constants, computed column by column as a left inverse
/// (`X A = I`), independently of the row recursion in [`g_table`].
pub fn invert_lower_triangular(a: &[Vec<UniPoly>]) -> Result<Vec<Vec<UniPoly>>> {
    let n = a.len();
    let mut diag_inv = Vec::with_capacity(n);
    for (r, row) in a.iter().enumerate() {
        if row.len() != r + 1 {
            return domain(format!("row {r} has {} entries, expected {}", row.len(), r + 1));
        }
        match row[r].degree() {
            Some(0) => diag_inv.push(Rational::one() / row[r].coefficient(0)),
            _ => return domain(format!("diagonal entry {r} is not a nonzero constant")),
        }
    }
    let mut x: Vec<Vec<UniPoly>> = (0..n).map(|r| vec![UniPoly::zero(); r + 1]).collect();
    for r in 0..n {
        x[r][r] = UniPoly::constant(diag_inv[r].clone());
        for c in (0..r).rev() {
            let s: UniPoly = (c + 1..=r).map(|s| &x[r][s] * &a[s][c]).sum();
            x[r][c] = (-s).scale(&diag_inv[c]);
        }
    }
    Ok(x)
}

/// Product of two lower-triangular polynomial matrices.
pub fn lower_triangular_product(a: &[Vec<UniPoly>], b: &[Vec<UniPoly>]) -> Vec<Vec<UniPoly>> {
    (0..a.len())
        .map(|r| {
            (0..=r)
                .map(|c| (c..=r).map(|s| &a[r][s] * &b[s][c]).sum())
                .collect()
        })
        .collect()
}

/// Triangular array of rationals indexed `(m, i)` with `i` starting at
/// `offset`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffTable {
    offset: usize,
    rows: Vec<Vec<Rational>>,
}

impl CoeffTable {
    pub fn get(&self, m: usize, i: usize) -> &Rational {
        &self.rows[m][i - self.offset]
    }

    pub fn row(&self, m: usize) -> &[Rational] {
        &self.rows[m]
    }

    pub fn depth(&self) -> usize {
        self.rows.len() - 1
    }
}

/// Leading coefficients `c_{m,i}` of `f_{m,i}` (`0 <= i <= m+1`) from
/// `c_{m,0} = 1/2`, `c_{m,m+1} = (-1)^m m!` and
/// `c_{m,i} = -i c_{m-1,i} - (i-1) c_{m-1,i-1}`.
pub fn c_coeffs(depth: usize) -> CoeffTable {
    let mut rows: Vec<Vec<Rational>> = vec![vec![rat(1, 2), int(1)]];
    for m in 1..=depth {
        let prev = &rows[m - 1];
        let mut row = vec![rat(1, 2)];
        for i in 1..=m {
            let mut c = -&prev[i] * int(i as i64);
            if i > 1 {
                c -= &prev[i - 1] * int(i as i64 - 1);
            }
            row.push(c);
        }
        row.push(sign_pow(m as u64) * Rational::from_integer(factorial(m as u64)));
        rows.push(row);
    }
    CoeffTable { offset: 0, rows }
}

/// Top coefficients `d_{m,i}` (of `t^{m+1-i}`) of `g_{m,i}` from
/// `d_{m,m+1} = (-1)^m / m!` and
/// `d_{m,i} = (-1)^{m+1}/m! sum_{j=i}^{m} c_{m,j} d_{j-1,i}`.
pub fn d_coeffs(depth: usize) -> CoeffTable {
    let c = c_coeffs(depth);
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(depth + 1);
    for m in 0..=depth {
        let inv_fact = Rational::new(BigInt::one(), factorial(m as u64));
        let diag = sign_pow(m as u64) * &inv_fact;
        let mut row = Vec::with_capacity(m + 1);
        for i in 1..=m {
            let s = (i..=m).fold(Rational::zero(), |acc, j| acc + c.get(m, j) * &rows[j - 1][i - 1]);
            row.push(-&diag * s);
        }
        row.push(diag);
        rows.push(row);
    }
    CoeffTable { offset: 1, rows }
}

/// Both tables built to a common depth.
#[derive(Debug, Clone)]
pub struct Tables {
    pub f: FTable,
    pub g: GTable,
}

impl Tables {
    pub fn new(depth: usize) -> Self {
        let f = f_table(depth);
        let g = g_table(&f);
        Tables { f, g }
    }

    pub fn depth(&self) -> usize {
        self.f.depth()
    }
}

/// One named structural property checked over every row up to some depth.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantCheck {
    pub name: &'static str,
    pub cases: usize,
    /// First violation, if any.
    pub failure: Option<String>,
}

impl InvariantCheck {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }
}

struct Tally {
    name: &'static str,
    cases: usize,
    failure: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            name,
            cases: 0,
            failure: None,
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }

    fn done(self) -> InvariantCheck {
        InvariantCheck {
            name: self.name,
            cases: self.cases,
            failure: self.failure,
        }
    }
}

/// Structural properties of the tables for `0 <= m <= depth`: degrees,
/// integrality, leading-coefficient signs, the two alternating row sums, the
/// leading-coefficient recursions, and `A_m A_m^{-1} = I` with the inverse
/// computed independently by back substitution.
pub fn check_invariants(depth: usize) -> Vec<InvariantCheck> {
    let tables = Tables::new(depth);
    let (f, g) = (&tables.f, &tables.g);
    let c = c_coeffs(depth);
    let d = d_coeffs(depth);

    let mut degree = Tally::new("deg f_{m,i} = m+1-i");
    let mut integral = Tally::new("f_{m,i} has integer coefficients");
    let mut sign = Tally::new("(-1)^m c_{m,i} > 0");
    let mut row_sum = Tally::new("sum_i (-1)^{i-1} t^{i-1} f_{m,i} = 1");
    let mut lead_sum = Tally::new("sum_i (-1)^{i-1} c_{m,i} = [m = 0]");
    let mut lead_rec = Tally::new("c and d recursions match extracted coefficients");
    let mut g_degree = Tally::new("deg g_{m,i} <= m+1-i");
    let mut inverse = Tally::new("A_m A_m^{-1} = I");

    for m in 0..=depth {
        let sm = sign_pow(m as u64);
        let mut alt = UniPoly::zero();
        let mut alt_lead = Rational::zero();
        for i in 1..=m + 1 {
            let p = f.get(m, i);
            degree.check(p.degree() == Some(m + 1 - i), || format!("m={m} i={i}"));
            integral.check(p.has_integer_coeffs(), || format!("m={m} i={i}"));
            let lead = p.leading().unwrap_or_else(|_| Rational::zero());
            sign.check((&sm * &lead) > Rational::zero(), || format!("m={m} i={i}"));
            let si = sign_pow(i as u64 - 1);
            alt = alt + p.mul_x_pow(i - 1).scale(&si);
            alt_lead += si * c.get(m, i);
            g_degree.check(
                g.get(m, i).degree().is_none_or(|dg| dg <= m + 1 - i),
                || format!("m={m} i={i}"),
            );
            lead_rec.check(
                *d.get(m, i) == g.get(m, i).coefficient(m + 1 - i),
                || format!("d at m={m} i={i}"),
            );
        }
        for i in 0..=m + 1 {
            lead_rec.check(
                f.get(m, i).leading().ok().as_ref() == Some(c.get(m, i)),
                || format!("c at m={m} i={i}"),
            );
        }
        row_sum.check(alt == UniPoly::one(), || format!("m={m}"));
        let expected = if m == 0 { Rational::one() } else { Rational::zero() };
        lead_sum.check(alt_lead == expected, || format!("m={m}"));
    }

    let a = f.matrix();
    match invert_lower_triangular(&a) {
        Ok(inv) => {
            inverse.check(inv == g.matrix(), || "back substitution disagrees with g".into());
            let prod = lower_triangular_product(&a, &inv);
            for (r, row) in prod.iter().enumerate() {
                for (col, v) in row.iter().enumerate() {
                    let ok = if r == col { *v == UniPoly::one() } else { v.is_zero() };
                    inverse.check(ok, || format!("entry ({r}, {col})"));
                }
            }
        }
        Err(e) => inverse.check(false, || e.to_string()),
    }

    [degree, integral, sign, row_sum, lead_sum, lead_rec, g_degree, inverse]
        .into_iter()
        .map(Tally::done)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    const DEPTH: usize = 12;

    #[test]
    fn first_rows() {
        let f = f_table(4);
        assert_eq!(*f.get(0, 0), UniPoly::from_ratios(&[(-1, 1), (1, 2)]));
        assert_eq!(*f.get(0, 1), UniPoly::one());
        assert_eq!(*f.get(1, 1), UniPoly::from_ratios(&[(1, 1), (-1, 1)]));
        assert_eq!(*f.get(3, 4), UniPoly::constant(int(-6)));
        let g = g_table(&f);
        assert_eq!(*g.get(0, 1), UniPoly::one());
        assert_eq!(*g.get(1, 1), UniPoly::from_ratios(&[(1, 1), (-1, 1)]));
        assert_eq!(*g.get(4, 5), UniPoly::constant(rat(1, 24)));
    }

    #[test]
    fn f_table_invariants() {
        let f = f_table(DEPTH);
        let half_t = UniPoly::from_ratios(&[(0, 1), (1, 2)]);
        for m in 0..=DEPTH {
            let expected0 = if m == 0 { &half_t - &UniPoly::one() } else { half_t.clone() };
            assert_eq!(*f.get(m, 0), expected0);
            let diag = sign_pow(m as u64) * Rational::from_integer(factorial(m as u64));
            assert_eq!(*f.get(m, m + 1), UniPoly::constant(diag));
            let mut alt = UniPoly::zero();
            for i in 1..=m + 1 {
                let p = f.get(m, i);
                assert!(p.has_integer_coeffs(), "f_{m},{i} not integral");
                assert_eq!(p.degree(), Some(m + 1 - i), "deg f_{m},{i}");
                let lead = p.leading().unwrap();
                assert!((sign_pow(m as u64) * lead).is_positive(), "sign of c_{m},{i}");
                let term = p.mul_x_pow(i - 1).scale(&sign_pow(i as u64 - 1));
                alt = alt + term;
            }
            assert_eq!(alt, UniPoly::one(), "alternating sum row {m}");
        }
    }

    #[test]
    fn g_table_invariants() {
        let tables = Tables::new(DEPTH);
        for m in 0..=DEPTH {
            let diag = sign_pow(m as u64) / Rational::from_integer(factorial(m as u64));
            assert_eq!(*tables.g.get(m, m + 1), UniPoly::constant(diag));
            for i in 1..=m + 1 {
                assert!(tables.g.get(m, i).degree().is_none_or(|d| d <= m + 1 - i));
            }
        }
    }

    #[test]
    fn inverse_matches_back_substitution() {
        let tables = Tables::new(DEPTH);
        let a = tables.f.matrix();
        let independent = invert_lower_triangular(&a).unwrap();
        assert_eq!(independent, tables.g.matrix());
        for m in 0..=DEPTH {
            let prod = lower_triangular_product(&a[..=m], &tables.g.matrix()[..=m]);
            for (r, row) in prod.iter().enumerate() {
                for (c, v) in row.iter().enumerate() {
                    let expected = if r == c { UniPoly::one() } else { UniPoly::zero() };
                    assert_eq!(*v, expected, "(A_{m} A_{m}^-1)[{r}][{c}]");
                }
            }
        }
    }

    #[test]
    fn invariant_report_is_clean() {
        let report = check_invariants(DEPTH);
        assert_eq!(report.len(), 8);
        for check in report {
            assert!(check.holds(), "{}: {:?}", check.name, check.failure);
            assert!(check.cases > 0);
        }
    }

    #[test]
    fn inversion_rejects_nonconstant_diagonal() {
        let a = vec![vec![UniPoly::x()]];
        assert!(invert_lower_triangular(&a).is_err());
        let ragged = vec![vec![UniPoly::one(), UniPoly::one()]];
        assert!(invert_lower_triangular(&ragged).is_err());
    }

    #[test]
    fn leading_coefficient_recursions() {
        let f = f_table(DEPTH);
        let g = g_table(&f);
        let c = c_coeffs(DEPTH);
        let d = d_coeffs(DEPTH);
        for m in 0..=DEPTH {
            for i in 0..=m + 1 {
                assert_eq!(*c.get(m, i), f.get(m, i).leading().unwrap(), "c_{m},{i}");
            }
            for i in 1..=m + 1 {
                assert_eq!(*d.get(m, i), g.get(m, i).coefficient(m + 1 - i), "d_{m},{i}");
            }
        }
        for m in 0..=10 {
            assert_eq!(*c.get(m, 1), sign_pow(m as u64));
            assert_eq!(*d.get(m, 1), sign_pow(m as u64));
            let s = (1..=m + 1).fold(Rational::zero(), |acc, i| {
                acc + sign_pow(i as u64 - 1) * c.get(m, i)
            });
            assert_eq!(s, if m == 0 { int(1) } else { int(0) });
        }
    }
}
