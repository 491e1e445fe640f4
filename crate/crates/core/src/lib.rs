//! Exact computation of the polynomials `R_n` that appear in the derivatives
//! of entropy along the heat flow, together with the combinatorics of degree
//! sequences admitting a non-separable multigraph realization.
//!
//! The support of `R_n` (read as a set of non-increasing degree sequences)
//! coincides with `DNSG(n)`, the degree sequences of sum `2n` and length at
//! least three that pass Hakimi's test. The [`verify`] module checks this and
//! the intermediate set identities for any range of `n`.
//!
//! ```
//! use rnpoly::poly::compute_r;
//! let r4 = compute_r(4).unwrap();
//! assert_eq!(r4.to_string(), "-12*X2*X3^2 + 6*X2^4");
//! ```

pub mod error;
pub mod graph;
pub mod partitions;
pub mod poly;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Multigraph, RealizationResult};
pub use partitions::DegreeSequence;
pub use poly::{Monomial, Polynomial};
