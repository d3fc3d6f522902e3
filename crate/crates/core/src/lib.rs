//! Exact symbolic toolkit for tautological systems of differential operators.
//!
//! The crate is organised bottom-up:
//!
//! * [`algebra`]: rationals, multivariate polynomials, rational functions,
//!   term orders and commutative Groebner bases.
//! * [`gb`]: the Buchberger engine shared by the commutative and the Weyl
//!   algebra case.
//! * [`weyl`]: normal-ordered differential operators, transpose,
//!   Fourier-Laplace transform, left Groebner bases and holonomic rank.
//! * [`rootsys`]: root systems, Killing-normalized pairings and the
//!   beta-parameter of a highest weight.
//! * [`tautbuild`]: representation data, cone ideals, tautological generator
//!   sets and the Casimir identities.
//! * [`charts`]: local chart computations on the cone over the rational
//!   normal curve.
//! * [`topo`]: Euler-characteristic predictions of holonomic ranks.
//! * [`cli`]: the `taut` command line front end.

pub mod algebra;
pub mod charts;
pub mod cli;
pub mod error;
pub mod gb;
pub mod rootsys;
pub mod tautbuild;
pub mod topo;
pub mod weyl;

pub use error::{Error, Result};
