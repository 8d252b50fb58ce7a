//! Verification toolkit for discrete functional inequalities on lattice
//! graphs: weighted Hardy and Rellich inequalities on `Z^d` and on the torus,
//! rearrangements on the half line, on the Fourier side and along lattice
//! enumerations, and the isoperimetric constructions behind them.

pub mod error;
pub mod hardy1d;
pub mod hardy_fourier;
pub mod highdim;
pub mod lattice;
pub mod numerics;
pub mod rational;
pub mod rearrange_axis;
pub mod rearrange_fourier;
pub mod rearrange_lattice;
pub mod report;
pub mod sampling;

pub use error::{Error, Result};
