//! Filtered de la Vallee Poussin (VP) interpolation at the zeros of the four
//! Chebyshev weights, side by side with classical Lagrange interpolation.
//!
//! All evaluation happens in the angle `t = arccos x`. Node indices are
//! 0-based, with node angles ascending.

pub mod analysis;
pub mod basis;
pub mod cli;
pub mod error;
pub mod operators;
pub mod testfns;
pub mod vp;

pub use analysis::{
    divergence_probe, lagrange_bounds_check, lagrange_conditions, lagrange_lebesgue, lagrange_sweep, lebesgue_constant,
    lebesgue_constant_on_nodes, lebesgue_sweep, vp_bounds_check, vp_conditions, weighted_errors, weighted_sup_error,
    Condition, EvaluationGrid, LebesgueEntry, LebesgueReport,
};
pub use basis::{darboux_kernel, make_nodes, ortho_poly_eval, ChebyshevKind, NodeSystem};
pub use error::{Error, Result};
pub use operators::{lagrange_interpolate, vp_interpolate, JacobiWeight, VpInterpolant};
pub use testfns::{sample_at_nodes, test_function_eval, TestCase, TestFunction};
pub use vp::{
    filter_coefficients, fundamental_lagrange, fundamental_lagrange_compact, fundamental_vp_darboux_mean,
    fundamental_vp_sum, fundamental_vp_trig, q_poly_eval, FilterCoefficients, FundamentalSet, VpParams,
};
