//! Fourier-side machinery for one-dimensional higher-order Hardy inequalities:
//! exact coefficient families, their combinatorial identity, the explicit
//! higher-order constants and the torus lemmas they rest on.

mod coeffs;
mod constants;
mod discrete;
mod torus_lemmas;
mod trig;

pub use coeffs::{
    alpha_raw, alpha_simplified, beta_raw, beta_simplified, coeff_alpha_beta_gamma, coeff_xi, coefficient_table_csv,
    combinatorial_identity_check, gamma_raw, gamma_simplified, xi_closed, CoefficientRow, IdentityReport,
    COEFFICIENT_CSV_HEADER,
};
pub use constants::{higher_order_constant, weighted_rellich_step, weighted_rellich_step_from_tables, HigherOrderFamily};
pub use discrete::{
    half_line_laplacian_pow, verify_discrete_inequality, weighted_sharpness_family, weighted_sharpness_limit_ratio,
    zero_moment_conditions, DiscreteInequality, DiscreteInequalityReport, ZeroMomentReport,
};
pub use torus_lemmas::{
    closed_form_check, half_frequency_test_function, torus_lemma_check, ClosedFormReport, TorusLemma,
    TorusLemmaReport, TORUS_TOLERANCE,
};
pub use trig::{quadrature_grid_size, TrigPolynomial};
