//! Exact 2-loop polynomials of torus knots and cable knots.
//!
//! The crate computes, in exact rational arithmetic,
//!
//! * the Alexander polynomial and the 2-loop polynomial `Θ(t1, t2, t3)` of
//!   torus knots ([`torus`]),
//! * the same pair for `(p, q)` cables of any knot whose pair is known
//!   ([`cabling`]),
//! * the reduced 2-loop polynomial `Θ̂(t)` and the Vassiliev invariants
//!   `v2`, `v3` ([`vassiliev`]),
//!
//! together with a canonical text format for knot records ([`knotio`]) and a
//! self-check harness that re-derives the published coefficient tables
//! ([`verify`]).
//!
//! ```
//! use two_loop::torus::{theta_hat, TorusParams};
//!
//! let trefoil = TorusParams::new(3, 2).unwrap();
//! assert_eq!(theta_hat(trefoil).unwrap().to_string(), "t + t^-1");
//! ```

pub mod algebra;
pub mod cabling;
pub mod cli;
pub mod error;
pub mod knotio;
pub mod tables;
pub mod torus;
pub mod trivariate;
pub mod vassiliev;
pub mod verify;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/laurent.md")]
    mod laurent {}
    #[doc = include_str!("../../../book/src/quotient-ring.md")]
    mod quotient_ring {}
    #[doc = include_str!("../../../book/src/torus.md")]
    mod torus {}
    #[doc = include_str!("../../../book/src/cabling.md")]
    mod cabling {}
    #[doc = include_str!("../../../book/src/vassiliev.md")]
    mod vassiliev {}
    #[doc = include_str!("../../../book/src/file-format.md")]
    mod file_format {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
