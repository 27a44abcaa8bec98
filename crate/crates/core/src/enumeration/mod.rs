//! Exact counting of tensions and flows, their polynomials and
//! quasipolynomials, and the reciprocity identities linking them to
//! orientation classes.

mod counts;
mod poly;
mod reciprocity;
mod system;
mod witness;

pub use counts::{
    balanced_flow_system, count_balanced_flows, count_flows, count_integral, count_integral_flows,
    count_integral_local_tensions, count_local_tensions, count_modular, count_nz_balanced_flows,
    count_nz_balanced_flows_via_dual, count_nz_flows, count_nz_local_tensions, count_nz_tensions, count_tensions,
    flow_system, integral_quasipolynomial, local_tension_system, poly_balanced_flow, poly_flow, poly_local_tension,
    poly_tension, polynomial, system, tension_system, tension_system_all_cycles, Kind,
};
pub use poly::{
    eval_rational, fit_quasipolynomial, interpolate, interpolate_rational, IntegerPolynomial, QuasiPolynomial,
    RationalVector,
};
pub use reciprocity::{
    check_integral_reciprocity, check_reciprocity, integral_local_tension_reciprocity_pairs, reciprocity_pairs,
    reciprocity_pairs_balanced_flow, reciprocity_pairs_flow, reciprocity_pairs_local_tension,
    reciprocity_pairs_tension, signed_value_at_negative, IntegralReciprocityCheck, ReciprocityCheck,
};
pub use system::{support_mask, Domain, LinearSystem};
pub use witness::{bao_witness_vector, is_witness};
