//! Generating functions `h_N(z)` and `h_{N,s}(z_1..z_s)` at the solvable
//! points, and their large-`N` log-densities.

mod density;
mod hpoly;
pub mod hypergeometric;
mod multi;

pub use density::{empirical_log_density, log_density, q3_combined_derivative, LogDensityLimit};
pub use hpoly::{boundary_probabilities, h_poly, MAX_POLY_N};
pub use multi::{h_multi, reduce_last, MAX_MULTI_S};
