//! One-dimensional weighted Hardy inequalities via power supersolutions.

mod quotient;
mod supersolution;
mod weight;

pub use quotient::{
    hardy_quotient_weighted, improved_hardy_check, sharpness_family, sharpness_limit_ratio, ImprovementReport,
};
pub use supersolution::{
    graph_supersolution_check, power_phi, supersolution_check, GraphSupersolutionReport, SupersolutionReport,
    SupersolutionTriple, Violation,
};
pub use weight::{
    b4_closed, b6_closed, coeff_b, coeff_b_exact, default_grid, g_function, weight_dominance_scan, weight_w,
    DominanceScan, HardyWeightParams,
};
