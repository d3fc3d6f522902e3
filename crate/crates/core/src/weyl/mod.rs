//! The Weyl algebra of differential operators with polynomial or
//! rational-function coefficients.

mod context;
mod element;
mod groebner;
mod mul;
mod ops;
mod rank;
mod text;

pub use context::{Symbol, WeylContext};
pub use element::WeylElement;
pub use groebner::{left_groebner, weyl_normal_form, LeftGB};
pub use ops::{antipode, apply, euler_operator, fourier_laplace, is_euler_homogeneous, proportional, transpose};
pub use rank::{
    count_standard_monomials, holonomic_rank, holonomic_rank_in_weyl, holonomic_rank_localized, holonomic_rank_with,
    Rank,
};
pub use text::parse_operator;
