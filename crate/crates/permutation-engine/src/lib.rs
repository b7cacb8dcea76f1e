//! Dense permutations realizing a concentric group's coordinate operations
//! on the `2^m` points `{0, …, 2^m − 1}` (point = packed coordinate vector).
//!
//! The crate provides:
//!
//! - [`DensePermutation`]: image arrays with composition, inversion, powers,
//!   fixed points, parity, and a disjoint-cycle dump.
//! - [`TauVector`]: the constrained search vector τ (first coordinate 1,
//!   coordinates above `d+1` zero).
//! - Builders ([`phi_perm`], [`right_mul_perm`], [`x_tau`], [`x_tau_inv`],
//!   [`y_tau_closed`], [`y_tau_composed`], [`conjugate_closed_form`]) and the
//!   evaluation functions [`f0`]/[`f_t`].
//!
//! Composition is written left-to-right as a right action:
//! `a.compose(&b)` maps every point `q` to `b.image(a.image(q))`.
//!
//! All values are immutable after construction and safe to share across
//! threads; building permutations for different τ in parallel needs no
//! coordination.

mod builders;
mod perm;
mod tau;

pub use builders::{
    c1_c2_hold, conjugate_closed_form, f0, f_t, f_t_bits, phi_inv_packed, phi_inv_perm,
    phi_packed, phi_perm, right_mul_perm, verify_shift_conjugation,
    verify_shift_conjugation_with, x_image, x_image_definitional, x_inv_image, x_tau,
    x_tau_definitional, x_tau_inv, y_tau_closed, y_tau_composed,
};
pub use perm::{DensePermutation, Parity, PermutationError, MAX_DEGREE};
pub use tau::TauVector;

use thiserror::Error;

/// Errors from τ validation and closed-form builders.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum EngineError {
    /// τ only exists when the diameter is strictly below the rank.
    #[error("τ requires d < m, got m = {m}, d = {d}")]
    TauRequiresProperDiameter { m: u32, d: u32 },
    /// The coordinate vector violates the τ constraint set.
    #[error("malformed τ: {reason}")]
    TauMalformed { reason: String },
    /// A closed-form builder was asked for a presentation outside its
    /// hypotheses.
    #[error("closed form unavailable: {reason}")]
    ClosedFormUnavailable { reason: String },
    /// Conjugate exponent outside the range covered by the closed forms.
    #[error("conjugate exponent {t} outside {lo}..={hi}")]
    ConjugateOutOfRange { t: i32, lo: i32, hi: i32 },
}
