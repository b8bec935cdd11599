//! Quadrature, radial reduction weights, direction packings, Monte Carlo
//! ball integration, and a small dense symmetric eigensolver.

pub mod eigen;
pub mod montecarlo;
pub mod packing;
pub mod quadrature;
pub mod weights;

pub use eigen::{min_eigenvalue_sym, SymmetricMatrix};
pub use montecarlo::{ball_monte_carlo, MonteCarloEstimate};
pub use packing::{projective_distance, projective_packing, PackedDirections};
pub use quadrature::{gauss_legendre_rule, QuadratureRule};
pub use weights::{
    ball_volume, gamma_weight, radial_constant_k, radial_constant_k_prime, rho_weight,
    slice_weight_independent, slice_weight_parallel, sphere_area, MeasureWeight,
};
