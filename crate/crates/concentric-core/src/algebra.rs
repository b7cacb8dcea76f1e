//! The coordinate-form group law.
//!
//! Products in a concentric 2-group reduce to F₂-vector arithmetic plus a
//! correction supported on positions `d'+1..d`:
//!
//! ```text
//! αβ = α + β + Σ_{ℓ=d'+1}^{d} λ_ℓ(α, β) e_ℓ
//! ```
//!
//! where the convolution coefficient is the double sum
//!
//! ```text
//! λ_ℓ(α, β) = Σ_{i=1}^{min{d', ℓ−d'}}  Σ_{j=max{d+i, ℓ+d'}}^{m}  β_i α_j ε_{j−i, ℓ−d'−i}
//! ```
//!
//! (all indices 1-based, arithmetic over F₂). Everything else — commutators,
//! squares, inverses — is derived from `multiply`.

use crate::coord::Coord;
use crate::presentation::ConcentricPresentation;

impl ConcentricPresentation {
    /// The convolution coefficient `λ_ℓ(α, β)` for `ℓ ∈ {d'+1..d}`.
    ///
    /// # Panics
    /// If `ℓ` lies outside `{d'+1..d}`.
    pub fn lambda(&self, ell: u32, alpha: Coord, beta: Coord) -> u8 {
        let (m, d, dp) = (self.m(), self.d(), self.d_prime());
        assert!(
            ell >= dp + 1 && ell <= d,
            "lambda index ell={ell} outside {}..={} (m={m}, d={d})",
            dp + 1,
            d
        );
        let mut acc = 0u8;
        let i_hi = dp.min(ell - dp);
        for i in 1..=i_hi {
            if beta.bit(i) == 0 {
                continue;
            }
            let j_lo = (d + i).max(ell + dp);
            for j in j_lo..=m {
                acc ^= alpha.bit(j) & self.eps(j - i, ell - dp - i);
            }
        }
        acc
    }

    /// The special case `λ_ℓ(e_m, β) = Σ_{i=1}^{min{d', ℓ−d'}} β_i ε_{m−i, ℓ−d'−i}`.
    ///
    /// Agrees with `lambda(ℓ, e_m, β)` but skips the inner loop; the x-builders
    /// call it per point.
    ///
    /// # Panics
    /// If `ℓ` lies outside `{d'+1..d}`.
    pub fn lambda_em(&self, ell: u32, beta: Coord) -> u8 {
        let (m, d, dp) = (self.m(), self.d(), self.d_prime());
        assert!(
            ell >= dp + 1 && ell <= d,
            "lambda index ell={ell} outside {}..={} (m={m}, d={d})",
            dp + 1,
            d
        );
        let mut acc = 0u8;
        for i in 1..=dp.min(ell - dp) {
            acc ^= beta.bit(i) & self.eps(m - i, ell - dp - i);
        }
        acc
    }

    /// The group product in coordinate form.
    pub fn multiply(&self, alpha: Coord, beta: Coord) -> Coord {
        let (d, dp) = (self.d(), self.d_prime());
        let mut out = alpha ^ beta;
        for ell in (dp + 1)..=d {
            if self.lambda(ell, alpha, beta) == 1 {
                out ^= Coord::basis(ell);
            }
        }
        out
    }

    /// The commutator `[α, β] = Σ_ℓ (λ_ℓ(α,β) + λ_ℓ(β,α)) e_ℓ`; symmetric in
    /// its arguments and supported on positions `d'+1..d`.
    pub fn commutator(&self, alpha: Coord, beta: Coord) -> Coord {
        let (d, dp) = (self.d(), self.d_prime());
        let mut out = Coord::ZERO;
        for ell in (dp + 1)..=d {
            if self.lambda(ell, alpha, beta) ^ self.lambda(ell, beta, alpha) == 1 {
                out ^= Coord::basis(ell);
            }
        }
        out
    }

    /// Closed form of the basis commutator `[e_i, e_j]` (1-based, symmetric):
    /// `Σ_{ℓ=d'+i}^{j−d'} ε_{j−i, ℓ−d'−i} e_ℓ` when `i ≤ d'` and `j ≥ d+1`
    /// (after swapping so `i ≤ j`), otherwise 0. Distances below `d` fall out
    /// of the stored triangle and read as 0.
    ///
    /// # Panics
    /// If an index lies outside `1..=m`.
    pub fn basis_commutator(&self, i: u32, j: u32) -> Coord {
        let (m, d, dp) = (self.m(), self.d(), self.d_prime());
        assert!((1..=m).contains(&i) && (1..=m).contains(&j), "basis indices ({i},{j}) outside 1..={m}");
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        let mut out = Coord::ZERO;
        if i > dp || j < d + 1 {
            return out;
        }
        for ell in (dp + i)..=(j - dp) {
            if self.eps(j - i, ell - dp - i) == 1 {
                out ^= Coord::basis(ell);
            }
        }
        out
    }

    /// The square `α² = Σ_ℓ λ_ℓ(α, α) e_ℓ`; central, supported on `d'+1..d`.
    pub fn square(&self, alpha: Coord) -> Coord {
        self.multiply(alpha, alpha)
    }

    /// The inverse `α⁻¹ = α · α²` (valid because squares are central and the
    /// exponent of the group divides 4).
    pub fn inverse(&self, alpha: Coord) -> Coord {
        self.multiply(alpha, self.square(alpha))
    }

    /// The tightness conditions: `3d > 2m`, plus
    /// (C1) `ε_{d,0} = 1` and `ε_{d,i} = 0` for `i ∈ {1..3d−2m}`, plus
    /// (C2) `ε_{m−i, 2d−m−i} = 0` for `i ∈ {1..m−d}` (the last entry of every
    /// row is zero).
    pub fn is_tightly_concentric(&self) -> bool {
        let (m, d) = (self.m(), self.d());
        if 3 * d <= 2 * m {
            return false;
        }
        // C1: row d is exactly [1, 0, …, 0] up to entry 3d−2m (which is the
        // whole row, since row d has 3d−2m+1 entries).
        if self.eps(d, 0) != 1 {
            return false;
        }
        if (1..=(3 * d - 2 * m)).any(|i| self.eps(d, i) != 0) {
            return false;
        }
        // C2: the final entry of each row k = m−i vanishes.
        (1..=(m - d)).all(|i| self.eps(m - i, 2 * d - m - i) == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::ConcentricPresentation;

    fn h7() -> ConcentricPresentation {
        ConcentricPresentation::h7_family(7).unwrap()
    }

    #[test]
    fn lambda_on_generator_pair() {
        // a₆a₁ = a₁a₆a₃ in the base group: λ₃(e₆, e₁) = 1 via β₁α₆ε_{5,0}.
        let p = h7();
        assert_eq!(p.lambda(3, Coord::basis(6), Coord::basis(1)), 1);
    }

    #[test]
    fn lambda_em_second_argument_support() {
        // λ_ℓ(e_m, e_m) = 0: the second argument has no support in 1..d'.
        let p = h7();
        for ell in 3..=5 {
            assert_eq!(p.lambda(ell, Coord::basis(7), Coord::basis(7)), 0);
            assert_eq!(p.lambda_em(ell, Coord::basis(7)), 0);
        }
    }

    #[test]
    fn lambda_em_hand_values() {
        let p = h7();
        // λ₃(e_m, e₁) touches ε_{6,0} = 0 only.
        assert_eq!(p.lambda_em(3, Coord::basis(1)), 0);
        // λ₃(e_m, e₂) has only the i=1 term β₁ε_{6,0}, and β₁ = 0.
        assert_eq!(p.lambda_em(3, Coord::basis(2)), 0);
        // λ₄(e_m, e₂) touches ε_{5,0} = 1; this is the coefficient behind
        // a₇a₂ = a₂a₇a₄.
        assert_eq!(p.lambda_em(4, Coord::basis(2)), 1);
        // λ₅(e_m, e₁) touches ε_{6,2} = 1.
        assert_eq!(p.lambda_em(5, Coord::basis(1)), 1);
    }

    #[test]
    fn multiply_reproduces_defining_relation() {
        // a₆a₁ = a₁a₆a₃.
        let p = h7();
        let product = p.multiply(Coord::basis(6), Coord::basis(1));
        let expected = Coord::basis(1) ^ Coord::basis(6) ^ Coord::basis(3);
        assert_eq!(product, expected);
    }

    #[test]
    fn multiply_identity_laws() {
        let p = h7();
        for packed in 0..(1u32 << 7) {
            let a = Coord::from_packed(packed);
            assert_eq!(p.multiply(a, Coord::ZERO), a);
            assert_eq!(p.multiply(Coord::ZERO, a), a);
        }
    }

    #[test]
    fn commutators_of_distant_generators() {
        let p = h7();
        assert_eq!(p.commutator(Coord::basis(1), Coord::basis(7)), Coord::basis(5));
        assert_eq!(p.commutator(Coord::basis(2), Coord::basis(7)), Coord::basis(4));
        for packed in 0..(1u32 << 7) {
            let a = Coord::from_packed(packed);
            assert_eq!(p.commutator(a, a), Coord::ZERO);
        }
    }

    #[test]
    fn basis_commutator_matches_relations() {
        let p = h7();
        assert_eq!(p.basis_commutator(1, 6), Coord::basis(3));
        assert_eq!(p.basis_commutator(6, 1), Coord::basis(3));
        // Distances below the diameter commute.
        for i in 1..=7u32 {
            for j in 1..=7u32 {
                if i.abs_diff(j) < 5 {
                    assert_eq!(p.basis_commutator(i, j), Coord::ZERO);
                }
            }
        }
    }

    #[test]
    fn squares_and_inverses() {
        let p = h7();
        for i in 1..=7 {
            assert_eq!(p.square(Coord::basis(i)), Coord::ZERO);
        }
        // (a₁a₆)² = a₃.
        let a16 = p.multiply(Coord::basis(1), Coord::basis(6));
        assert_eq!(p.square(a16), Coord::basis(3));
        assert_eq!(p.inverse(Coord::ZERO), Coord::ZERO);
        for packed in 0..(1u32 << 7) {
            let a = Coord::from_packed(packed);
            assert_eq!(p.multiply(a, p.inverse(a)), Coord::ZERO);
            assert_eq!(p.multiply(p.inverse(a), a), Coord::ZERO);
        }
    }

    #[test]
    fn tightness_verdicts() {
        assert!(!h7().is_tightly_concentric(), "ε_{{6,2}}=1 violates the last-entry condition");
        assert!(ConcentricPresentation::h7_family(9).unwrap().is_tightly_concentric());
        assert!(ConcentricPresentation::minimal_tight7().is_tightly_concentric());
        assert!(!ConcentricPresentation::elementary_abelian(7).unwrap().is_tightly_concentric());
    }
}
