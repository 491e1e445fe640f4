use std::collections::BTreeSet;

use num_bigint::BigUint;

use super::{a_poly, op_h, op_l, Monomial, Polynomial};
use crate::error::{Error, Result};
use crate::partitions::{partition_count, DegreeSequence};

/// Default cap on `p(2n)`, which bounds the number of terms of `R_n`.
/// Reached around `n = 33`.
pub const DEFAULT_TERM_BUDGET: u64 = 2_000_000;

/// Memoized sweep over `R_2, R_3, ...` following
/// `R_2 = 0`, `R_{n+1} = A_n + L(R_n) + H(R_n)`.
#[derive(Clone, Debug)]
pub struct RSequence {
    /// `polys[i]` is `R_{i+2}`.
    polys: Vec<Polynomial>,
    term_budget: u64,
}

impl Default for RSequence {
    fn default() -> Self {
        Self::new()
    }
}

impl RSequence {
    pub fn new() -> Self {
        Self::with_term_budget(DEFAULT_TERM_BUDGET)
    }

    pub fn with_term_budget(term_budget: u64) -> Self {
        Self {
            polys: vec![Polynomial::zero()],
            term_budget,
        }
    }

    /// Largest `n` computed so far.
    pub fn computed_up_to(&self) -> u32 {
        self.polys.len() as u32 + 1
    }

    /// `R_n`, extending the cache as needed.
    pub fn get(&mut self, n: u32) -> Result<&Polynomial> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!("R_n needs n >= 2, got {n}")));
        }
        self.check_budget(n)?;
        while self.computed_up_to() < n {
            let cur = self.computed_up_to();
            let prev = self.polys.last().expect("R_2 is always present");
            let next = a_poly(cur)? + op_l(prev) + op_h(prev)?;
            self.polys.push(next);
        }
        Ok(&self.polys[(n - 2) as usize])
    }

    fn check_budget(&self, n: u32) -> Result<()> {
        if n <= self.computed_up_to() {
            return Ok(());
        }
        let bound = partition_count(2 * i64::from(n))?;
        if bound > BigUint::from(self.term_budget) {
            return Err(Error::ResourceExhausted(format!(
                "R_{n} may have up to p({}) = {bound} terms, over the budget of {}",
                2 * n,
                self.term_budget
            )));
        }
        Ok(())
    }
}

/// `R_n` from scratch.
pub fn compute_r(n: u32) -> Result<Polynomial> {
    RSequence::new().get(n).cloned()
}

/// `X_n^2 + R_n`.
pub fn compute_r_tilde(n: u32) -> Result<Polynomial> {
    let mut r = compute_r(n)?;
    r.add_term(Monomial::new([(n, 2)])?, 1.into());
    Ok(r)
}

/// The monomials of `p` as non-increasing degree sequences.
pub fn support(p: &Polynomial) -> BTreeSet<DegreeSequence> {
    p.support()
}
