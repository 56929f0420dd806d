//! Alternating sign matrices, corner sums, interlacing families, Aztec diamond tilings and the
//! multi-parameter λ-determinant.

mod aztec;
mod corner;
mod interlacing;
mod lambda;
mod laurent;
mod matrix;

pub use aztec::{aztec_pair, elementary_flip, enumerate_tilings, flip_component_size, tiling_of_pair, Dir, Domino, Tiling};
pub use corner::{entry_or_zero, f_matrix, g_matrix, lambda_weight, matrix_power, mu_weight, CornerSum, Side};
pub use interlacing::{
    complement, corner_sums_complement, families_are_dual, fg_increment_props, interlacing, interlacing_family,
    interlacing_pair, inversions_from_corner_sums, IncrementReport, InterlacingFamily, Relation,
};
pub use lambda::{
    cofactor_determinant, compare_at_random_points, corollary_form, determinant_polynomial, lambda_closed_form,
    lambda_layer, lambda_recurrence, lambda_recurrence_symbolic, random_point, random_rational, robbins_rumsey_form,
    weighted_asm_count, with_determinant_parameters, with_uniform_lambda, with_unit_base, Assignment, LaurentFraction,
    PointRecord, RecurrenceValue,
};
pub use laurent::{indexed, Laurent, Monomial};
pub use matrix::{asm_count, enumerate_asm, validate_asm, Asm, MonotoneTriangle};
