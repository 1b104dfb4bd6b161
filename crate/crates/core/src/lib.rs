//! Cyclic finite-state approximation (CFSA) of data-driven discrete-time systems.
//!
//! Given a snapshot history of a system that is approximately eventually
//! periodic, this crate fits a closed-loop finite-state model built around a
//! generic cyclic shift matrix, forecasts the orbit at cost independent of the
//! horizon, classifies the cyclic structure from data, and compares the fitted
//! operator against a DMD companion matrix through pseudospectra.
//!
//! The main entry points are [`cfsa_engine::fit`] and
//! [`cfsa_engine::forecast`]; [`wave_gen`] produces damped-wave snapshot data
//! to drive them, and [`pseudospectra`] renders spectral portraits of the
//! resulting operators.

pub mod cfsa_engine;
pub mod dmd;
mod error;
pub mod gcs_core;
pub mod io;
pub mod matrix_kernel;
pub mod pseudospectra;
pub mod wave_gen;

pub use error::Error;

/// Complex scalar used throughout the crate.
pub type Complex64 = nalgebra::Complex<f64>;
/// Dense complex matrix; the (i, j) access contract is the only fixed layout.
pub type ComplexMatrix = nalgebra::DMatrix<Complex64>;
/// Dense complex column vector.
pub type ComplexVector = nalgebra::DVector<Complex64>;

pub use cfsa_engine::{CfsaModel, EpsilonIndex, SnapshotMatrix};
pub use gcs_core::GcsSpec;
pub use matrix_kernel::SvdResult;
pub use pseudospectra::PseudospectrumGrid;
pub use wave_gen::{FirstOrderSystem, WaveConfig};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
