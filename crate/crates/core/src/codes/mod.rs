//! Binary linear codes: distance, fixed subcodes, the projection maps and
//! the automorphism/equivalence machinery.

mod brute;
mod canon;
mod code;
mod distance;
mod fixed;
pub mod library;

pub use brute::{automorphism_group_brute_force, equivalence_brute_force};
pub use canon::{
    automorphism_group, automorphism_group_of_structure, canonical_form, canonical_labeling,
    equivalence, CanonicalLabeling,
};
pub use code::{code_image, is_self_dual, make_code, LinearCode};
pub use distance::{
    min_distance, min_distance_with, weight_enumerator, weight_enumerator_bounded, DistanceMode,
    WeightEnumerator, MAX_FAST_LENGTH,
};
pub use fixed::{eta, fixed_subcode, lift_orbit_permutation, pi_lift, pi_project};

use thiserror::Error;

use crate::perm::PermError;

/// Default limit on `2^k` for full codeword enumeration.
pub const DEFAULT_WORD_BOUND: u64 = 1 << 28;

/// Default length limit for the automorphism and canonical-form search.
pub const DEFAULT_AUT_LENGTH_BOUND: usize = 72;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("degree mismatch: code length {expected}, permutation degree {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("the zero code has no minimum distance")]
    ZeroDimension,
    #[error("enumerating 2^{k} codewords exceeds the bound of {bound}")]
    EnumerationBound { k: usize, bound: u64 },
    #[error("length {n} exceeds the supported bound {bound}")]
    LengthBound { n: usize, bound: usize },
    #[error("{0} is not a fixed-point-free involution")]
    NotFpfInvolution(String),
    #[error("code is not pointwise fixed by {0}")]
    NotFixed(String),
    #[error("{0} does not commute with {1}")]
    NotCentralizing(String, String),
    #[error("parameter mismatch: [{n1},{k1}] vs [{n2},{k2}]")]
    ParameterMismatch { n1: usize, k1: usize, n2: usize, k2: usize },
    #[error(transparent)]
    Perm(#[from] PermError),
}
