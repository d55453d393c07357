//! Verification toolkit for the correspondence between the Dirac bispinor
//! equations and Maxwell's equations with sources.
//!
//! The crate is organised bottom-up:
//!
//! * [`algebra`]: exact scalars over Q(√2, i), 4×4 matrices and the Dirac
//!   matrix apparatus.
//! * [`bridge`]: packing transverse electromagnetic fields into bispinors
//!   for each propagation axis and sense.
//! * [`bilinears`]: ψ⁺Âψ for the enumerated matrices against their
//!   electromagnetic closed forms.
//! * [`planewave`]: multiplicative operator calculus on plane waves.
//! * [`gridfields`]: finite-difference residuals on sampled fields.
//! * [`forces`]: energy-momentum and spin-tensor force densities, ring
//!   balance and the hydrodynamic (Lamb–Gromeka) form.
//! * [`report`]: scenarios, suites and machine-readable reports.

pub mod algebra;
pub mod bilinears;
pub mod bridge;
pub mod error;
pub mod forces;
pub mod gridfields;
pub mod planewave;
pub mod report;

pub use error::{Error, Result};
