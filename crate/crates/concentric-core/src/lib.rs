//! Coordinate-form algebra of concentric 2-groups.
//!
//! A concentric 2-group is generated by involutions `a_1, …, a_m` whose
//! pairwise commutators vanish below a distance threshold `d` (the diameter)
//! and otherwise land in the centre according to a triangular table of bits
//! `ε_{k,c}`. Every element has a unique normal form `a_1^{α_1} ⋯ a_m^{α_m}`,
//! so the group lives on the `2^m` bitvectors of [`Coord`] and the whole law
//! is the XOR of the operands plus a bilinear correction ([`the λ
//! coefficients`](ConcentricPresentation::lambda)) supported on the central
//! window `d'+1..d`, where `d' = m − d`.
//!
//! This crate owns:
//! - the presentation data model [`ConcentricPresentation`] and its JSON file
//!   format, including the stock families used as CLI built-ins;
//! - the group operations: [`multiply`](ConcentricPresentation::multiply),
//!   [`commutator`](ConcentricPresentation::commutator),
//!   [`basis_commutator`](ConcentricPresentation::basis_commutator),
//!   [`square`](ConcentricPresentation::square),
//!   [`inverse`](ConcentricPresentation::inverse);
//! - the tightness test
//!   [`is_tightly_concentric`](ConcentricPresentation::is_tightly_concentric);
//! - the validator ([`validate_raw`], [`ConcentricPresentation::validate`])
//!   with its [`ValidationReport`].
//!
//! All types are immutable values after construction and every operation is
//! pure, so everything is safe to share across threads without
//! synchronization.
//!
//! Indexing convention: the mathematical notation is 1-based (`a_1..a_m`,
//! `ε_{k,0}` starting rows at `k = d`); storage is 0-based. Every public
//! signature documents which convention it takes, and conversion happens at
//! the call boundary, never inside a formula.

mod algebra;
mod coord;
mod presentation;
mod validate;

pub use coord::{Coord, MAX_M};
pub use presentation::{ConcentricPresentation, PresentationError, PresentationFile};
pub use validate::{validate_raw, ValidationReport};
