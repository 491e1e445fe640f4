//! Executable checks of the identities linking `R_n` to `DNSG(n)`.
//!
//! Every check is attached to one `n` and yields a [`CheckResult`] whose
//! detail carries the symmetric difference or the mismatching counts.
//! Steps of the recursion are reported under their target: the report for
//! `n` checks how `DNSG(n)` (or the support of `R_n`) arises from level
//! `n - 1`.
//!
//! Level 2 has no admissible sequence of length three or more, so the
//! recursion is seeded there with the single sequence `(2, 2)` (the monomial
//! `X_2^2` of `X_2^2 + R_2`) and images are cut down to length at least 3.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{degree_sequence, realize_nonseparable};
use crate::partitions::{dns_count, enumerate_dnsg, DegreeSequence};
use crate::poly::{a_poly, op_h, op_l, Monomial, Polynomial, RSequence};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckKind {
    /// support of `R_n` equals `DNSG(n)`
    Support,
    /// number of terms of `R_n` equals `d_ns(2n) - 1`
    Count,
    /// `DNSG(n)` is the union of the images of `DNSG(n-1)`, with disjoint
    /// L- and H-images per source sequence
    Recursion,
    /// coefficient of `X_2^n` in `R_n` is `(-1)^n (n-1)!`
    Coeff,
    /// every element of `DNSG(n)` has a certified realization
    Realize,
    /// support of `R_n` is the union of the images of the support of
    /// `R_{n-1}`, and contains the support of `A_{n-1}`
    Strict,
    /// the explicit preimage (two largest parts decremented, or all twos
    /// shortened by one) of every `d` in `DNSG(n)` lies in `DNSG(n-1)` and
    /// maps onto `d`
    Witness,
}

impl CheckKind {
    pub const ALL: [CheckKind; 7] = [
        CheckKind::Support,
        CheckKind::Count,
        CheckKind::Recursion,
        CheckKind::Coeff,
        CheckKind::Realize,
        CheckKind::Strict,
        CheckKind::Witness,
    ];

    /// The checks run when none are requested.
    pub const DEFAULT: [CheckKind; 5] = [
        CheckKind::Support,
        CheckKind::Count,
        CheckKind::Recursion,
        CheckKind::Coeff,
        CheckKind::Realize,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Support => "support",
            CheckKind::Count => "count",
            CheckKind::Recursion => "recursion",
            CheckKind::Coeff => "coeff",
            CheckKind::Realize => "realize",
            CheckKind::Strict => "strict",
            CheckKind::Witness => "witness",
        }
    }

    fn needs_polynomial(self) -> bool {
        matches!(
            self,
            CheckKind::Support | CheckKind::Count | CheckKind::Coeff | CheckKind::Strict
        )
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown check {s:?}")))
    }
}

/// Structured evidence attached to a check. Empty fields are omitted from
/// JSON.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Detail {
    /// expected but not found
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub missing: Vec<DegreeSequence>,
    /// found but not expected
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub extra: Vec<DegreeSequence>,
    /// inputs on which a per-element property failed
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failed: Vec<DegreeSequence>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub actual: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

impl Detail {
    fn is_empty(&self) -> bool {
        *self == Detail::default()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub passed: bool,
    pub detail: Detail,
}

impl CheckResult {
    fn new(passed: bool, mut detail: Detail) -> Self {
        if !passed && detail.is_empty() {
            detail.message = Some("check failed".into());
        }
        Self { passed, detail }
    }

    fn error(e: &Error) -> Self {
        Self::new(
            false,
            Detail {
                message: Some(e.to_string()),
                ..Detail::default()
            },
        )
    }

    fn from_result(r: Result<CheckResult>) -> Self {
        r.unwrap_or_else(|e| Self::error(&e))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub n: u32,
    pub checks: BTreeMap<String, CheckResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.values().all(|c| c.passed)
    }
}

/// `(L-image, H-image)` of the monomial `X_alpha`: the degree sequences of
/// the monomials of `L(X_alpha)` and `H(X_alpha)`.
pub fn image_sets(
    alpha: &DegreeSequence,
) -> Result<(BTreeSet<DegreeSequence>, BTreeSet<DegreeSequence>)> {
    if alpha.parts().iter().any(|&p| p < 2) {
        return Err(Error::InvalidArgument(format!(
            "image sets need parts >= 2, got {alpha}"
        )));
    }
    let x = Polynomial::monomial(Monomial::from_sequence(alpha)?, 1);
    Ok((op_l(&x).support(), op_h(&x)?.support()))
}

fn seed_level() -> Vec<DegreeSequence> {
    vec![DegreeSequence::from_unsorted(vec![2, 2])]
}

/// `DNSG(n)`, or the seed `{(2, 2)}` at `n = 2`.
fn dnsg_or_seed(n: u32) -> Result<Vec<DegreeSequence>> {
    if n == 2 {
        Ok(seed_level())
    } else {
        enumerate_dnsg(n)
    }
}

fn set_diff_detail(
    expected: &BTreeSet<DegreeSequence>,
    actual: &BTreeSet<DegreeSequence>,
) -> (bool, Detail) {
    let missing: Vec<_> = expected.difference(actual).cloned().collect();
    let extra: Vec<_> = actual.difference(expected).cloned().collect();
    let passed = missing.is_empty() && extra.is_empty();
    (
        passed,
        Detail {
            missing,
            extra,
            expected: Some(expected.len().to_string()),
            actual: Some(actual.len().to_string()),
            ..Detail::default()
        },
    )
}

/// Union of the images of `sources`, keeping length >= 3, and the sources
/// whose L- and H-images intersect.
fn image_union(
    sources: &[DegreeSequence],
) -> Result<(BTreeSet<DegreeSequence>, Vec<DegreeSequence>)> {
    let mut union = BTreeSet::new();
    let mut overlapping = Vec::new();
    for alpha in sources {
        let (l, h) = image_sets(alpha)?;
        if l.intersection(&h).next().is_some() {
            overlapping.push(alpha.clone());
        }
        union.extend(l.into_iter().chain(h).filter(|d| d.len() >= 3));
    }
    Ok((union, overlapping))
}

fn check_n_at_least(n: u32, min: u32, what: &str) -> Result<()> {
    if n < min {
        return Err(Error::InvalidArgument(format!(
            "{what} needs n >= {min}, got {n}"
        )));
    }
    Ok(())
}

/// `(-1)^n (n-1)!`, the coefficient of `X_2^n` in `R_n` for `n >= 3`.
///
/// Only `H` reaches `X_2^{n+1}` from `R_n` (via `X_2^n -> -n X_2^{n+1}`),
/// starting from `-2 X_2^3` in `R_3`.
pub fn pure_x2_coefficient(n: u32) -> BigInt {
    let mut f = BigInt::one();
    for k in 2..n {
        f *= k;
    }
    if n % 2 == 1 {
        -f
    } else {
        f
    }
}

/// Runs checks against a shared memoized sweep of `R_n`.
#[derive(Debug, Default)]
pub struct Verifier {
    rseq: RSequence,
}

impl Verifier {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_sequence(rseq: RSequence) -> Self {
        Self { rseq }
    }

    pub fn r(&mut self, n: u32) -> Result<&Polynomial> {
        self.rseq.get(n)
    }

    pub fn check_support_equals_dnsg(&mut self, n: u32) -> Result<CheckResult> {
        check_n_at_least(n, 3, "support check")?;
        let dnsg: BTreeSet<_> = enumerate_dnsg(n)?.into_iter().collect();
        let support = self.rseq.get(n)?.support();
        let (passed, detail) = set_diff_detail(&dnsg, &support);
        Ok(CheckResult::new(passed, detail))
    }

    pub fn check_term_count(&mut self, n: u32) -> Result<CheckResult> {
        check_n_at_least(n, 3, "term count check")?;
        let expected: BigInt = dns_count(2 * u64::from(n))? - 1;
        let actual = BigInt::from(self.rseq.get(n)?.len());
        Ok(CheckResult::new(
            expected == actual,
            Detail {
                expected: Some(expected.to_string()),
                actual: Some(actual.to_string()),
                ..Detail::default()
            },
        ))
    }

    pub fn check_pure_x2_coefficient(&mut self, n: u32) -> Result<CheckResult> {
        check_n_at_least(n, 3, "coefficient check")?;
        let expected = pure_x2_coefficient(n);
        let actual = self.rseq.get(n)?.coeff(&Monomial::new([(2, n)])?);
        Ok(CheckResult::new(
            expected == actual,
            Detail {
                expected: Some(expected.to_string()),
                actual: Some(actual.to_string()),
                ..Detail::default()
            },
        ))
    }

    /// Support of `R_n` against the images of the support of `R_{n-1}`
    /// (seeded at level 2), plus `supp A_{n-1}` inside that union.
    pub fn check_strict(&mut self, n: u32) -> Result<CheckResult> {
        check_n_at_least(n, 3, "strict check")?;
        let sources: Vec<_> = if n == 3 {
            seed_level()
        } else {
            self.rseq.get(n - 1)?.support().into_iter().collect()
        };
        let (union, overlapping) = image_union(&sources)?;
        let support = self.rseq.get(n)?.support();
        let (mut passed, mut detail) = set_diff_detail(&support, &union);
        let a_support = a_poly(n - 1)?.support();
        let uncovered: Vec<_> = a_support.difference(&union).cloned().collect();
        if !uncovered.is_empty() {
            passed = false;
            detail.message = Some(format!(
                "{} monomial(s) of A_{} not produced by L or H",
                uncovered.len(),
                n - 1
            ));
            detail.failed.extend(uncovered);
        }
        if !overlapping.is_empty() {
            passed = false;
            detail.message = Some("L- and H-images intersect".into());
            detail.failed.extend(overlapping);
        }
        Ok(CheckResult::new(passed, detail))
    }

    pub fn run(&mut self, kind: CheckKind, n: u32) -> CheckResult {
        CheckResult::from_result(match kind {
            CheckKind::Support => self.check_support_equals_dnsg(n),
            CheckKind::Count => self.check_term_count(n),
            CheckKind::Recursion => {
                check_n_at_least(n, 3, "recursion check").and_then(|_| check_recursion_cover(n - 1))
            }
            CheckKind::Coeff => self.check_pure_x2_coefficient(n),
            CheckKind::Realize => check_realizations(n),
            CheckKind::Strict => self.check_strict(n),
            CheckKind::Witness => check_witness(n),
        })
    }

    /// All `checks` for one `n`. Checks that need `R_n` all fail with the
    /// same message when it cannot be computed.
    pub fn report(&mut self, n: u32, checks: &[CheckKind]) -> VerificationReport {
        let poly_error = if checks.iter().any(|k| k.needs_polynomial()) {
            self.rseq.get(n).err()
        } else {
            None
        };
        let mut out = BTreeMap::new();
        for &kind in checks {
            let result = match &poly_error {
                Some(e) if kind.needs_polynomial() => CheckResult::error(e),
                _ => self.run(kind, n),
            };
            out.insert(kind.name().to_string(), result);
        }
        VerificationReport { n, checks: out }
    }
}

/// `DNSG(n+1)` equals the union of `T_{n+1}(alpha)` over `alpha` in
/// `DNSG(n)`, and each `T_{n+1}(alpha)` is a disjoint union of its L- and
/// H-parts. `n = 2` uses the seed `{(2, 2)}`.
pub fn check_recursion_cover(n: u32) -> Result<CheckResult> {
    check_n_at_least(n, 2, "recursion cover")?;
    let sources = dnsg_or_seed(n)?;
    let (union, overlapping) = image_union(&sources)?;
    let target: BTreeSet<_> = enumerate_dnsg(n + 1)?.into_iter().collect();
    let (mut passed, mut detail) = set_diff_detail(&target, &union);
    if !overlapping.is_empty() {
        passed = false;
        detail.message = Some("L- and H-images intersect".into());
        detail.failed = overlapping;
    }
    Ok(CheckResult::new(passed, detail))
}

/// Every element of `DNSG(n)` realizes to a certified non-separable
/// multigraph with exactly that degree sequence.
pub fn check_realizations(n: u32) -> Result<CheckResult> {
    check_n_at_least(n, 2, "realization check")?;
    let dnsg = enumerate_dnsg(n)?;
    let mut failed = Vec::new();
    for d in &dnsg {
        let ok = match realize_nonseparable(d) {
            Ok(r) => r.certified && degree_sequence(&r.graph) == *d,
            Err(_) => false,
        };
        if !ok {
            failed.push(d.clone());
        }
    }
    let passed = failed.is_empty();
    Ok(CheckResult::new(
        passed,
        Detail {
            expected: Some(dnsg.len().to_string()),
            actual: Some((dnsg.len() - failed.len()).to_string()),
            failed,
            ..Detail::default()
        },
    ))
}

/// Explicit preimage at level `n - 1` of `d` in `DNSG(n)`: all twos lose one
/// part; otherwise the two largest parts drop by one.
pub fn witness_preimage(d: &DegreeSequence) -> DegreeSequence {
    let parts = d.parts();
    if parts.iter().all(|&p| p == 2) {
        DegreeSequence::from_unsorted(vec![2; parts.len().saturating_sub(1)])
    } else {
        let mut v = parts.to_vec();
        v[0] -= 1;
        if v.len() > 1 {
            v[1] -= 1;
        }
        DegreeSequence::from_unsorted(v)
    }
}

/// For every `d` in `DNSG(n)`, [`witness_preimage`] lies in `DNSG(n-1)` (or
/// the level-2 seed) and `d` is in its L-image (or H-image for all twos).
pub fn check_witness(n: u32) -> Result<CheckResult> {
    check_n_at_least(n, 3, "witness check")?;
    let previous: BTreeSet<_> = dnsg_or_seed(n - 1)?.into_iter().collect();
    let mut failed = Vec::new();
    for d in enumerate_dnsg(n)? {
        let alpha = witness_preimage(&d);
        let all_twos = d.parts().iter().all(|&p| p == 2);
        let ok = previous.contains(&alpha)
            && match image_sets(&alpha) {
                Ok((l, h)) => {
                    if all_twos {
                        h.contains(&d)
                    } else {
                        l.contains(&d)
                    }
                }
                Err(_) => false,
            };
        if !ok {
            failed.push(d);
        }
    }
    Ok(CheckResult::new(
        failed.is_empty(),
        Detail {
            failed,
            ..Detail::default()
        },
    ))
}

/// Reports for `n = 3..=max_n`, in order. Failures (including resource
/// limits) are recorded per `n` and never abort the sweep.
pub fn run_suite(max_n: u32, checks: &[CheckKind]) -> Result<Vec<VerificationReport>> {
    run_suite_with(Verifier::new(), max_n, checks)
}

/// [`run_suite`] on a caller-configured verifier.
pub fn run_suite_with(
    mut verifier: Verifier,
    max_n: u32,
    checks: &[CheckKind],
) -> Result<Vec<VerificationReport>> {
    check_n_at_least(max_n, 3, "verification suite")?;
    let mut checks = checks.to_vec();
    checks.sort();
    checks.dedup();
    Ok((3..=max_n).map(|n| verifier.report(n, &checks)).collect())
}
