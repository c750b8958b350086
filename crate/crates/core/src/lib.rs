//! Exact simulation and analysis of dipolar-coupled nuclear spin-1/2
//! ensembles in diluted lattices under multiple-pulse decoupling sequences.
//!
//! The crate is organized as a pipeline:
//!
//! * [`lattice`] — diluted diamond-cubic site generation and geometric
//!   dipolar couplings.
//! * [`spinops`] — dense Hermitian operator algebra on the 2^N product
//!   space (Hamiltonians, initial states, observables).
//! * [`sequences`] — pulse sequences as timed event lists, with a
//!   name-keyed registry of interchangeable sequence builders
//!   (WAHUHA, MREV-8, MREV-16) and CPMG wrapping.
//! * [`engine`] — exact piecewise-constant unitary propagation with
//!   propagator caching, classical dephasing noise, and disorder
//!   averaging.
//! * [`aht`] — numerical average Hamiltonian theory: toggling frames,
//!   Magnus terms, decoupling verification, cycle-error scaling.
//! * [`analysis`] — the measurement chain: per-echo spectra, side-peak
//!   integration, decay fits, scans, figures of merit.

pub mod aht;
pub mod analysis;
pub mod constants;
pub mod engine;
pub mod lattice;
pub mod sequences;
pub mod spinops;

pub use num_complex::Complex64;

/// Dense complex matrix used throughout for operators and unitaries.
pub type CMatrix = nalgebra::DMatrix<Complex64>;
