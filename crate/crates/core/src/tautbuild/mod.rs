//! Tautological systems: representation data, cone ideals, generator sets
//! and the Casimir operator identities.

mod casimir;
mod families;
mod rep;
mod spec;

pub use casimir::{casimir_weyl, casimir_weyl_with, verify_casimir_identity, verify_zztop, zztop_operator};
pub use families::{
    family_spec, family_weight, parse_family, rnc_ideal, rnc_spec, segre_ideal, segre_reference_generators, segre_rep,
    segre_spec, sym_power_rep, Family,
};
pub use rep::{commutator, identity, invert, mat_mul, trace, vector_field, zeros, Matrix, RepSpec};
pub use spec::{build_tauthat, fl_ideal, ideal_equal, TautSpec};
