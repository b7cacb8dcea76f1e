//! Exclusion of affine overgroups by a fixed-point count: any element of the
//! affine group on `F₂^m` fixes either no point or a power-of-two number of
//! points, so exhibiting a group element whose fixed-point count is odd and
//! greater than one proves the group lies in no affine subgroup of the
//! symmetric group.

use concentric_core::ConcentricPresentation;
use permutation_engine::{x_tau, TauVector};

/// Outcome of the affine-overgroup test with `x_τ²` as candidate witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AffineVerdict {
    /// `|Fix(x_τ²)|` is odd and > 1: no affine group contains `⟨R(H), x_τ⟩`.
    ExcludedWithWitness { witness_fixed_points: u64 },
    /// The count is even or 1; nothing is concluded either way.
    Inconclusive { witness_fixed_points: u64 },
}

impl AffineVerdict {
    pub fn is_excluded(self) -> bool {
        matches!(self, AffineVerdict::ExcludedWithWitness { .. })
    }

    pub fn witness_fixed_points(self) -> u64 {
        match self {
            AffineVerdict::ExcludedWithWitness { witness_fixed_points }
            | AffineVerdict::Inconclusive { witness_fixed_points } => witness_fixed_points,
        }
    }
}

/// Count the fixed points of `x_τ²` and apply the odd-and-greater-than-one
/// criterion.
pub fn affine_exclusion(p: &ConcentricPresentation, tau: TauVector) -> AffineVerdict {
    let count = x_tau(p, tau).power(2).fixed_point_count();
    if count % 2 == 1 && count > 1 {
        AffineVerdict::ExcludedWithWitness { witness_fixed_points: count }
    } else {
        AffineVerdict::Inconclusive { witness_fixed_points: count }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_count_is_never_a_witness() {
        // A count of 2^m (every point fixed) is even, hence inconclusive.
        let p = ConcentricPresentation::minimal_tight7();
        for tau in TauVector::enumerate_all(&p) {
            let v = affine_exclusion(&p, tau);
            let c = v.witness_fixed_points();
            assert_eq!(v.is_excluded(), c % 2 == 1 && c > 1);
        }
    }
}
