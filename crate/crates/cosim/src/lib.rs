//! Explicit co-simulation of coupled ODE subsystems.
//!
//! Subsystems integrate independently over macro intervals of width `H` and
//! exchange coupling data only at the interval boundaries. Between exchanges
//! each input is *realized* as a concrete function of time: an extrapolant
//! built from past samples, optionally blended into the previous extrapolant
//! with an S-shaped switch so the realized signal stays C², plus hat-shaped
//! balance-correction contributions that refeed the integral error of earlier
//! intervals.
//!
//! The crate is organized along the data flow:
//!
//! - [`shapes`] — hat and switch kernels on arbitrary intervals, with exact
//!   integrals and derivatives.
//! - [`signals`] — extrapolation, smooth switching, and closed-form
//!   integration of realized inputs.
//! - [`balance`] — balance-error computation, error splitting, and refeed
//!   scheduling with a per-channel correction ledger.
//! - [`models`] — benchmark systems (spring–mass, double spring–mass,
//!   spring–mass on moving ground), their split forms, analytic references
//!   and energy diagnostics.
//! - [`master`] — the co-simulation orchestrator and the adaptive embedded
//!   Runge–Kutta micro-integrator.
//! - [`experiments`] — convergence, energy-drift and oscillation studies,
//!   CSV output, and the command-line interface.

pub mod balance;
pub mod error;
pub mod experiments;
pub mod master;
pub mod models;
pub mod shapes;
pub mod signals;

pub use error::CosimError;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, CosimError>;
