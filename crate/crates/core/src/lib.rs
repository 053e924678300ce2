//! Computational harmonic analysis on discretized tori.
//!
//! Fields live on uniform power-of-two grids over `T^d = (R/2π)^d`, `d ≤ 3`.
//! Truncated Fourier sums (square, rectangular, conjugate, modified) run as
//! exact spectral multipliers; conjugate functions, diagonal conjugates, and
//! U-type operators run as principal-value quadratures with symmetric node
//! pairing; the `majorant` module assembles the positive controlling field
//! for square partial sums out of slicewise maximal functions, and `verify`
//! sweeps the exponential integrals and convergence metrics over truncation
//! degree. Everything is deterministic: quadrature uses fixed-order pairwise
//! summation, so results are identical run to run and across thread counts.

pub mod catalog;
mod error;
mod fft;
pub mod grid;
pub mod majorant;
pub mod oracles;
pub mod orlicz;
pub mod report;
pub mod singular;
pub mod spectral;
pub mod verify;

pub use error::{Result, TorusError};
pub use grid::{GridMask, SampledField, TorusGrid};
