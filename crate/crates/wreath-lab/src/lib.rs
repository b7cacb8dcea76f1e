//! A small-scale lab for permutations in product action on `Δ^k`.
//!
//! Elements are pairs of a component tuple and a top permutation, acting on
//! tuples by permuting slots after applying the slot components. Everything
//! here stays tiny by design — the point of the crate is to validate
//! closed-form combinatorial facts (involution fixed-point counts, the shape
//! forced by a fixed-point ratio of exactly one half, and slab dichotomies of
//! point-indexed bit functions) against brute enumeration on small domains.
//!
//! Tuples `(β₀, …, β_{k−1})` are indexed in mixed radix with slot 0 the least
//! significant digit: `index = Σ βᵢ·|Δ|^i`.

mod counting;
mod element;

pub use counting::{
    brute_fixed_point_count, half_fpr_shape, slab_dichotomy, wreath_fixed_point_count,
    BRUTE_MAX_POINTS,
};
pub use element::{all_permutations, random_involution, WreathElement};

use thiserror::Error;

/// Errors from constructing or analyzing product-action elements.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum WreathError {
    #[error("component {slot} is not a permutation of the {delta_size}-point set")]
    BadComponent { slot: usize, delta_size: usize },
    #[error("top is not a permutation of the {k} slots")]
    BadTop { k: usize },
    #[error("need at least one slot and two points per slot, got k = {k}, |Δ| = {delta_size}")]
    DegenerateShape { k: usize, delta_size: usize },
    #[error("the element is not an involution")]
    NotInvolution,
    #[error("slot set size {delta_size} must be a power of two that is at least 4")]
    SlotSizeNotHalvable { delta_size: usize },
    #[error("domain has {points} points, above the brute-force cap {max}")]
    DomainTooLarge { points: usize, max: usize },
    #[error("bit table has {got} entries but the domain has {expected} points")]
    BitTableSizeMismatch { got: usize, expected: usize },
    #[error("slot index {j} is out of range for k = {k}")]
    SlotOutOfRange { j: usize, k: usize },
}
