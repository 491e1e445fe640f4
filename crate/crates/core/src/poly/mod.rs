//! Sparse multivariate polynomials over the variables `X_2, X_3, ...` with
//! arbitrary-precision integer coefficients, and the operator recursion that
//! generates `R_n`.

mod json;
mod ops;
mod recursion;

use std::cmp::Ordering;
use std::collections::{btree_map, BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partitions::DegreeSequence;

pub use ops::{a_poly, binomial, op_h, op_l};
pub use recursion::{compute_r, compute_r_tilde, support, RSequence, DEFAULT_TERM_BUDGET};

/// Smallest admissible variable index. `X_1` never occurs.
pub const MIN_VARIABLE: u32 = 2;

/// A product `X_{a_1}^{e_1} ... X_{a_k}^{e_k}` stored as `(index, exponent)`
/// pairs with strictly increasing indices and non-zero exponents.
///
/// Reading the factors with multiplicity in non-increasing order gives the
/// degree sequence of the monomial; monomials are ordered lexicographically
/// by that sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<(u32, u32)>,
}

impl Monomial {
    /// The empty product.
    pub fn one() -> Self {
        Self::default()
    }

    /// Single variable `X_index`.
    pub fn var(index: u32) -> Result<Self> {
        Self::new([(index, 1)])
    }

    /// Builds a monomial from `(index, exponent)` pairs in any order.
    /// Repeated indices are merged and zero exponents dropped.
    pub fn new(pairs: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (index, exp) in pairs {
            if index < MIN_VARIABLE {
                return Err(Error::InvalidArgument(format!(
                    "variable index {index} is below {MIN_VARIABLE}"
                )));
            }
            *map.entry(index).or_insert(0u32) += exp;
        }
        Ok(Self {
            exps: map.into_iter().filter(|&(_, e)| e > 0).collect(),
        })
    }

    /// The product of `X_f` over the given factor list (with repetition).
    pub fn from_factors(factors: &[u32]) -> Result<Self> {
        Self::new(factors.iter().map(|&f| (f, 1)))
    }

    pub fn from_sequence(seq: &DegreeSequence) -> Result<Self> {
        Self::from_factors(seq.parts())
    }

    pub fn exponents(&self) -> &[(u32, u32)] {
        &self.exps
    }

    pub fn exponent(&self, index: u32) -> u32 {
        self.exps
            .binary_search_by_key(&index, |&(i, _)| i)
            .map(|pos| self.exps[pos].1)
            .unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// `sum(index * exponent)`.
    pub fn weighted_degree(&self) -> u64 {
        self.exps
            .iter()
            .map(|&(i, e)| u64::from(i) * u64::from(e))
            .sum()
    }

    /// Number of factors counted with multiplicity (the sequence length `r`).
    pub fn factor_count(&self) -> u64 {
        self.exps.iter().map(|&(_, e)| u64::from(e)).sum()
    }

    pub fn max_index(&self) -> Option<u32> {
        self.exps.last().map(|&(i, _)| i)
    }

    pub fn min_index(&self) -> Option<u32> {
        self.exps.first().map(|&(i, _)| i)
    }

    /// Factors with multiplicity, largest first.
    pub fn factors_desc(&self) -> impl Iterator<Item = u32> + '_ {
        self.exps
            .iter()
            .rev()
            .flat_map(|&(i, e)| std::iter::repeat_n(i, e as usize))
    }

    pub fn to_sequence(&self) -> DegreeSequence {
        DegreeSequence::from_sorted_unchecked(self.factors_desc().collect())
    }

    /// Divides by `X_r` for every `r` in `remove` and multiplies by `X_a` for
    /// every `a` in `add`. Callers guarantee the division is exact and every
    /// added index is admissible.
    pub(crate) fn replace(&self, remove: &[u32], add: &[u32]) -> Self {
        let mut exps = self.exps.clone();
        for &r in remove {
            let pos = exps
                .binary_search_by_key(&r, |&(i, _)| i)
                .expect("divisor must be a factor");
            exps[pos].1 -= 1;
            if exps[pos].1 == 0 {
                exps.remove(pos);
            }
        }
        for &a in add {
            debug_assert!(a >= MIN_VARIABLE);
            match exps.binary_search_by_key(&a, |&(i, _)| i) {
                Ok(pos) => exps[pos].1 += 1,
                Err(pos) => exps.insert(pos, (a, 1)),
            }
        }
        Self { exps }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.factors_desc().cmp(other.factors_desc())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Formats as `X2*X3^2`, variables in increasing index order; the empty
/// product prints as `1`.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return f.write_str("1");
        }
        for (k, &(i, e)) in self.exps.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "X{i}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A finite sum of monomials with non-zero integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(m: Monomial, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(m, coeff.into());
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of monomials with non-zero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Terms in descending degree-sequence order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> + '_ {
        self.terms.iter().rev()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> + '_ {
        self.terms.keys().rev()
    }

    /// Adds `coeff * m`, merging with any existing term and dropping it if
    /// the sum cancels.
    pub fn add_term(&mut self, m: Monomial, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn support(&self) -> BTreeSet<DegreeSequence> {
        self.terms.keys().map(Monomial::to_sequence).collect()
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: Polynomial) -> Polynomial {
        let (mut big, small) = if self.len() >= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        for (m, c) in small.terms {
            big.add_term(m, c);
        }
        big
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(mut self) -> Polynomial {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

/// Text form `-12*X2*X3^2 + 6*X2^4`; the zero polynomial prints as `0`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (k, c.is_negative()) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                _ => write!(f, " {sign} ")?,
            }
            let mag = c.abs();
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Polynomial whose stored coefficients are twice their true value. Used to
/// aggregate the `-1/2`-weighted splitting operator without leaving the
/// integers.
#[derive(Clone, Debug, Default)]
pub(crate) struct HalfPolynomial {
    doubled: BTreeMap<Monomial, BigInt>,
}

impl HalfPolynomial {
    pub(crate) fn add_doubled(&mut self, m: Monomial, doubled_coeff: BigInt) {
        *self.doubled.entry(m).or_default() += doubled_coeff;
    }

    /// Exact halving; every aggregated coefficient must be even.
    pub(crate) fn halve(self) -> Result<Polynomial> {
        let mut terms = BTreeMap::new();
        for (m, c) in self.doubled {
            if c.is_zero() {
                continue;
            }
            if c.is_odd() {
                return Err(Error::ArithmeticFault(format!(
                    "odd doubled coefficient {c} on {m}"
                )));
            }
            terms.insert(m, c / 2);
        }
        Ok(Polynomial { terms })
    }
}

trait IsOdd {
    fn is_odd(&self) -> bool;
}

impl IsOdd for BigInt {
    fn is_odd(&self) -> bool {
        self.bit(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(f: &[u32]) -> Monomial {
        Monomial::from_factors(f).unwrap()
    }

    #[test]
    fn monomial_canonical_form() {
        let a = Monomial::new([(3, 1), (2, 1), (3, 1), (5, 0)]).unwrap();
        assert_eq!(a.exponents(), &[(2, 1), (3, 2)]);
        assert_eq!(a, mono(&[3, 2, 3]));
        assert_eq!(a.weighted_degree(), 8);
        assert_eq!(a.factor_count(), 3);
        assert_eq!(a.exponent(4), 0);
        assert_eq!(a.to_sequence().parts(), &[3, 3, 2]);
        assert!(Monomial::var(1).is_err());
        assert!(Monomial::var(0).is_err());
    }

    #[test]
    fn monomial_order_is_sequence_lex() {
        // (3,3) > (3,2,2,2)? lex: first 3 == 3, then 3 > 2.
        assert!(mono(&[3, 3]) > mono(&[3, 2, 2, 2]));
        assert!(mono(&[2, 2, 2, 2]) < mono(&[3, 3, 2]));
        assert!(mono(&[4, 4]) > mono(&[4, 3, 3, 2]));
        // prefix is smaller
        assert!(mono(&[2, 2]) < mono(&[2, 2, 2]));
    }

    #[test]
    fn replace_updates_exponents() {
        let m = mono(&[2, 2, 3]);
        assert_eq!(m.replace(&[2, 2], &[3, 3]), mono(&[3, 3, 3]));
        assert_eq!(m.replace(&[3], &[2, 4]), mono(&[2, 2, 2, 4]));
    }

    #[test]
    fn add_term_cancels() {
        let mut p = Polynomial::monomial(mono(&[2, 2, 2]), -2);
        p.add_term(mono(&[2, 2, 2]), BigInt::from(2));
        assert!(p.is_zero());
        assert_eq!(p.to_string(), "0");
        p.add_term(mono(&[2]), BigInt::zero());
        assert!(p.is_zero());
    }

    #[test]
    fn display_matches_listing_style() {
        let p = Polynomial::from_terms([
            (mono(&[2, 2, 2, 2]), BigInt::from(6)),
            (mono(&[3, 3, 2]), BigInt::from(-12)),
        ]);
        assert_eq!(p.to_string(), "-12*X2*X3^2 + 6*X2^4");
        let q = Polynomial::from_terms([
            (mono(&[3, 3]), BigInt::from(1)),
            (mono(&[2, 2, 2]), BigInt::from(-1)),
        ]);
        assert_eq!(q.to_string(), "X3^2 - X2^3");
        assert_eq!(Polynomial::monomial(Monomial::one(), 7).to_string(), "7");
    }

    #[test]
    fn arithmetic() {
        let p = Polynomial::monomial(mono(&[2, 3]), 4);
        let q = Polynomial::monomial(mono(&[3, 2]), -4);
        assert!((&p + &q).is_zero());
        assert_eq!(&p - &q, p.scale(&BigInt::from(2)));
        assert_eq!(-p.clone(), q);
        assert!(p.scale(&BigInt::zero()).is_zero());
    }

    #[test]
    fn halving_detects_odd_aggregate() {
        let mut h = HalfPolynomial::default();
        h.add_doubled(mono(&[2, 2]), BigInt::from(3));
        assert!(matches!(h.halve(), Err(Error::ArithmeticFault(_))));

        let mut h = HalfPolynomial::default();
        h.add_doubled(mono(&[2, 2]), BigInt::from(3));
        h.add_doubled(mono(&[2, 2]), BigInt::from(-1));
        h.add_doubled(mono(&[2]), BigInt::from(5));
        h.add_doubled(mono(&[2]), BigInt::from(-5));
        let p = h.halve().unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.coeff(&mono(&[2, 2])), BigInt::from(1));
    }
}
