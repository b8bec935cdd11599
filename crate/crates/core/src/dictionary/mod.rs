//! Dictionary atoms for ReLU^k ridge functions and decay-weighted complex
//! exponentials, sparse ℓ1-budgeted combinations, and L² geometry over the
//! unit ball computed through reduced ridge integrals.

pub mod atom;
pub mod combo;
pub mod distance;
pub mod profile;
pub mod reduced;

pub use atom::{relu_power, RidgeAtom, SpectralAtom};
pub use combo::{RidgeCombo, SparseCombo, SpectralCombo};
pub use distance::{
    combo_distance, dictionary_norm_bound, ridge_atom_norm, spectral_pair_inner_product,
    DictionaryGram,
};
pub use profile::{RidgeFunction, RidgeProfile};
pub use reduced::{reduced_inner_product_opts, reduced_ridge_inner_product, ReducedOpts};
