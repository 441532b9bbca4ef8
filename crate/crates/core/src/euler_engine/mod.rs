//! Euler products for the conductor series over `F_q(T)`.
//!
//! Over a genus-0 base the series is exactly `Σ_H w_H Φ_H`, with `H` running
//! over `pG ⊴ H ⊴ G` grouped by signature and `Φ_H` a product of local
//! factors over all places, the infinite one included.

pub mod diagnostic;
pub mod global;
pub mod local;

pub use diagnostic::{asymptotic_diagnostic, diagnose_series, DiagnosticReport, ResidueClassReport, RhoPoint, Window};
pub use global::{
    count_from_series, count_function, global_series, global_series_with, global_terms, signature_series,
    signature_weights, EngineLimits, SeriesTerm,
};
pub use local::{b_local, lambda_series, local_factor, phi_series, psi_exponent_check, psi_series, u_value, LocalFactor};
