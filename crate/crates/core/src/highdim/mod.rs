//! Hardy and Rellich inequalities on `Z^d` and on the torus: explicit
//! constants, the lattice-torus correspondence, discrete polar coordinates
//! on `Z^2`, sphere spectra and antisymmetric functions.

mod antisym;
mod constants;
mod polar;
mod quotient;
mod sphere;
mod torus;

pub use antisym::{
    antisym_quotient_2d, antisym_quotient_nd, antisymmetrize, is_antisymmetric, minimal_antisymmetric,
    signed_permutations, PlanarWeight,
};
pub use constants::{
    antisymmetric_hardy_constant, antisymmetric_planar_constant, antisymmetric_torus_constant, cp_constant,
    cp_constant_brute, explicit_constant, hardy_constant, hardy_rellich_constant, iterated_hardy_constant,
    iterated_rellich_constant, rellich_constant, ConstantName,
};
pub use polar::{polar_coords_2d, polar_to_point, rotate, PolarPoint2D};
pub use quotient::{
    hardy_constant_bracket, hardy_quotient_nd, lattice_lower_bound, lattice_upper_bound, plateau_function,
    plateau_profile, plateau_ratio, sphere_inverse_square_sum, unit_sphere_indicator, HardyBracket, NdOperator,
    NdQuotientReport, PlateauReport,
};
pub use sphere::{sphere_spectrum, SphereSpectrum};
pub use torus::{
    is_antisymmetric_poly, lattice_to_torus_psi, midpoint, richardson_weighted_integral, spectral_multiplier_check,
    torus_identity_check, torus_inequality_check, weighted_integral, GridParams, IdentityCheck, Parity,
    RichardsonReport, SingularWeight, TorusGridFunction, TorusIdentity, TorusInequality, TorusInequalityReport,
    IDENTITY_TOLERANCE, RICHARDSON_TOLERANCE, TORUS_SLACK,
};
