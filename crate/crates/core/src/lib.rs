//! Exact conductor statistics for abelian p-extensions of the rational
//! function field `F_q(T)`.

pub mod arith;
pub mod bounds;
pub mod delsarte;
pub mod error;
pub mod euler_engine;
pub mod explicit;
pub mod field_model;
pub mod oracles;
pub mod pgroup;
pub mod series;

pub use error::{Error, Result};
pub use pgroup::{GroupDesc, InvariantReport, Signature};
