//! Permutations of `{0, .., n-1}` and finite permutation groups.

mod chain;
mod classes;
mod group;
mod permutation;
mod search;
mod transversal;

pub use classes::{
    conjugator_in_sym, involution_class_reps, involution_class_reps_where, is_free_klein_pair,
    klein_pair_conjugator,
};
pub use group::{PermGroup, DEFAULT_ENUMERATION_BOUND};
pub(crate) use group::orbit_of;
pub use permutation::Permutation;
pub use search::{centralizer, centralizer_by_enumeration};
pub use transversal::{canonical_coset_rep, right_transversal, Transversal};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("images do not form a bijection")]
    NotBijection,
    #[error("cannot parse permutation: {0}")]
    Parse(String),
    #[error("{0} is not an involution")]
    NotInvolution(String),
    #[error("involutions do not commute")]
    NotCommuting,
    #[error("subgroup is not contained in the group")]
    NotSubgroup,
    #[error("group order {order} exceeds the enumeration bound {bound}")]
    OrderExceedsBound { order: String, bound: u64 },
}

/// The involution `x -> x xor mask` on `{0, .., n-1}`; `n` must be a multiple
/// of `2 * mask` so that it is well defined.
pub fn xor_involution(n: usize, mask: usize) -> Permutation {
    assert!(mask > 0 && n % (2 * mask) == 0, "degree {n} incompatible with mask {mask}");
    Permutation::from_images((0..n).map(|x| x ^ mask).collect()).unwrap()
}
