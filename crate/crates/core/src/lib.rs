//! Exact character-degree combinatorics for finite general linear groups.
//!
//! The irreducible characters of GL(n, q) are indexed by assignments of
//! partitions to monic irreducible polynomials over F_q. This crate builds
//! that bookkeeping from the ground up — integer partitions with hooks,
//! cores and quotients; l-adic valuations through lifting-the-exponent
//! identities; exact big-integer character degrees — and uses it to compute
//! divisibility statistics of character degrees and certified lower bounds
//! on the proportion of characters whose value at a fixed matrix is
//! divisible by a given integer.
//!
//! Everything is exact: degrees and counts are big integers, proportions are
//! integer fractions, and valuations are computed both through closed-form
//! identities and (in the verification suites) literal factorization, so the
//! two routes check each other.
//!
//! ```
//! use glqchar::chardeg::{degree, v_degree, v_p_degree};
//! use glqchar::glq::CharLabel;
//! use glqchar::partitions::Partition;
//! use glqchar::valuations::ValuationContext;
//!
//! // The unipotent character of GL(4, 3) indexed by (2, 1, 1).
//! let lambda = Partition::new(vec![2, 1, 1]).unwrap();
//! let label = CharLabel::unipotent(&lambda);
//!
//! let f = degree(&label, 3).unwrap();
//! assert_eq!(f.degree.to_string(), "351"); // 3^3 * 13
//!
//! // Valuations without the big integer: the defining characteristic via
//! // the exact power formula, 13 via lifting the exponent.
//! assert_eq!(v_p_degree(&label, 3).unwrap().to_string(), "3");
//! let ctx = ValuationContext::new(13, 3).unwrap();
//! assert_eq!(v_degree(&label, &ctx).unwrap().to_string(), "1");
//! ```

pub mod arith;
pub mod chardeg;
pub mod error;
pub mod glq;
pub mod partitions;
pub mod statistics;
pub mod valuations;
pub mod verify;

pub use error::Error;
