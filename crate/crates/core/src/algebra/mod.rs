//! Exact commutative algebra: the coefficient substrate for the operator
//! computations.

mod coeff;
mod gcd;
mod groebner;
mod monomial;
mod order;
pub mod parse;
mod poly;
mod ratfun;
mod rational;
mod vars;

pub use coeff::Coeff;
pub use gcd::{poly_div_exact, poly_gcd};
pub use groebner::{comm_groebner, GroebnerBasis};
pub use monomial::Monomial;
pub use order::TermOrder;
pub use poly::Polynomial;
pub(crate) use poly::{power as poly_power, write_signed_term};
pub use ratfun::RationalFunction;
pub use rational::{binomial, parse_rational, rat, Rational};
pub use vars::Vars;
