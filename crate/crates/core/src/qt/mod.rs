//! Macdonald Pieri coefficients, the cylindric weight `W_c(q,t)`, its alphabet `D_c`,
//! plethystic Ω, truncated series and the product-formula checks.

mod factor;
mod identities;
mod pieri;
mod series;

pub use factor::{Alphabet, FactorProduct};
pub use identities::{
    check_borodin, check_macmahon, check_qt_borodin, check_refined_borodin, check_stanley, cpp_counts, hook_lengths,
    identity_check, plane_partition_counts, pochhammer_ratio, predicted_cpp_count, product_exponents, qt_lhs, qt_rhs,
    rpp_counts, shape_profile, Bounds, CoefficientRecord, IdentityMode, IdentityReport, ProductExponents,
};
pub use pieri::{alphabet_d, pieri_phi, pieri_psi, weight_w, PieriContext};
pub use series::{Cutoff, Grading, TruncatedSeries};
