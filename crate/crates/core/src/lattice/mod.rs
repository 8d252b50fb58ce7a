//! Lattice-graph primitives on `Z^d`.

mod boundary;
mod coarea;
mod function;
mod norms;
mod ops;
mod point;

pub use boundary::{edge_boundary, l1_ball, vertex_boundary, Edge, EdgeSet, VertexSet};
pub use coarea::{coarea_decompose, CoareaReport, LevelReport};
pub use function::{FunctionRepr, LatticeValue, SparseLatticeFunction};
pub use norms::{edge_differences, grad_lp_energy, grad_lp_norm, lp_norm, support_edges, Exponent};
pub use ops::{
    difference_ops, gradient, grad_laplacian_energy, grad_laplacian_pow, laplacian, laplacian_energy,
    laplacian_pow, partial, DifferenceKind,
};
pub use point::LatticePoint;
