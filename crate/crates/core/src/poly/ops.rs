use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::{HalfPolynomial, Monomial, Polynomial};
use crate::error::{Error, Result};

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc.into()
}

/// `C(a, 0..=a)`.
fn binomial_row(a: u32) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(a as usize + 1);
    let mut c = BigInt::one();
    row.push(c.clone());
    for l in 0..a {
        c = c * (a - l) / (l + 1);
        row.push(c.clone());
    }
    row
}

/// The pair-raising operator: every unordered pair of factor positions of a
/// monomial has both indices incremented, extended linearly.
///
/// Positions are counted with multiplicity, so `X_2^3` has three pairs. Two
/// distinct variables `X_a^e X_b^f` contribute `e*f` identical pairs and a
/// single variable `X_a^e` contributes `C(e, 2)`.
pub fn op_l(p: &Polynomial) -> Polynomial {
    let mut out = Polynomial::zero();
    for (m, c) in p.terms() {
        let exps = m.exponents();
        for (i, &(a, ea)) in exps.iter().enumerate() {
            if ea >= 2 {
                let pairs = u64::from(ea) * u64::from(ea - 1) / 2;
                out.add_term(m.replace(&[a, a], &[a + 1, a + 1]), c * pairs);
            }
            for &(b, eb) in &exps[i + 1..] {
                let pairs = u64::from(ea) * u64::from(eb);
                out.add_term(m.replace(&[a, b], &[a + 1, b + 1]), c * pairs);
            }
        }
    }
    out
}

/// The splitting operator: each factor `X_a` is replaced by
/// `-1/2 * sum_{l=1}^{a-1} C(a, l) X_{1+l} X_{1+a-l}`, summed over factor
/// positions and extended linearly.
///
/// Aggregation happens on doubled coefficients; the halving at the end is
/// exact because `l` and `a - l` hit the same monomial and `C(a, a/2)` is
/// even. An odd aggregate is reported as [`Error::ArithmeticFault`].
pub fn op_h(p: &Polynomial) -> Result<Polynomial> {
    let mut rows: Vec<Option<Vec<BigInt>>> = Vec::new();
    let mut half = HalfPolynomial::default();
    for (m, c) in p.terms() {
        for &(a, ea) in m.exponents() {
            let a_idx = a as usize;
            if rows.len() <= a_idx {
                rows.resize(a_idx + 1, None);
            }
            let row = rows[a_idx].get_or_insert_with(|| binomial_row(a));
            let weight = -(c * ea);
            for l in 1..a {
                let child = m.replace(&[a], &[1 + l, 1 + a - l]);
                half.add_doubled(child, &weight * &row[l as usize]);
            }
        }
    }
    half.halve()
}

/// `A_n = -sum_{k=1}^{n-1} C(n, k) X_{1+k} X_{1+n-k} X_n`.
pub fn a_poly(n: u32) -> Result<Polynomial> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("A_n needs n >= 2, got {n}")));
    }
    let mut out = Polynomial::zero();
    for k in 1..n {
        let m = Monomial::from_factors(&[1 + k, 1 + n - k, n])?;
        out.add_term(m, -binomial(u64::from(n), i64::from(k)));
    }
    Ok(out)
}
