//! Independent brute-force checks: one-unit groups of residue rings, and
//! Artin-Schreier class spaces of `F_p(T)`.

pub mod asw;
pub mod linalg;
pub mod units;

pub use asw::{asw_count, asw_counting_function, asw_degree_counts, asw_rank2_count, AswClassSpace};
pub use units::{hasse_check, one_unit_signature, OneUnitGroup};
