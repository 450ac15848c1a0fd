//! Exact linear algebra over the rationals: kernels, solves and linear programs.

mod matrix;
mod rational;
mod simplex;

pub use matrix::{
    in_span, mat_kernel, mat_rank, mat_solve, normalize_leading, primitive_integer, projected_rank,
    span_touches, RatMatrix, SolutionSpace, SolveOutcome,
};
pub use rational::{
    clear_denominators, floor_rational, format_rational, frac, is_nonneg_integer, lcm_denominators,
    parse_rational, rat, Rational,
};
pub use simplex::{lp_max, LpOutcome};
