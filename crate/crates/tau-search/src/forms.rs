//! F₂-linear conditions on the free offset coordinates.
//!
//! The fixed-point counts of the shift permutation and its square are
//! controlled by three affine-linear conditions on `(τ₂, …, τ_{d+1})`, and
//! the three conditions sum to a single diagonal constraint. Every form here
//! is an explicit coefficient vector plus constant with `τ₁ = 1` already
//! substituted, so forms can be summed, compared coefficient-wise, and
//! evaluated in one masked-popcount dot product.

use concentric_core::ConcentricPresentation;
use permutation_engine::TauVector;

use crate::SearchError;

/// An affine-linear form over F₂ in the free coordinates `τ₂..τ_{d+1}`.
///
/// The value at τ is `Σ coeff_i·τ_i + constant`; the form is *satisfied*
/// where the value is 0. Bit `i−2` of `coeffs` holds the coefficient of
/// `τ_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinearFormF2 {
    coeffs: u32,
    constant: u8,
    d: u32,
}

impl LinearFormF2 {
    /// The coefficient of `τ_i`, for `i ∈ {2, …, d+1}`.
    ///
    /// # Panics
    /// If `i` is outside the free coordinate range.
    pub fn coeff(&self, i: u32) -> u8 {
        assert!((2..=self.d + 1).contains(&i), "coordinate {i} is not free");
        ((self.coeffs >> (i - 2)) & 1) as u8
    }

    /// The constant term (with `τ₁ = 1` and the right-hand side folded in).
    pub fn constant(&self) -> u8 {
        self.constant
    }

    /// The number of free coordinates.
    pub fn d(&self) -> u32 {
        self.d
    }

    /// Evaluate at a concrete offset vector.
    pub fn evaluate(&self, tau: TauVector) -> u8 {
        assert_eq!(tau.d(), self.d, "offset has a different free-coordinate count");
        ((self.coeffs & tau.free_bits()).count_ones() as u8 & 1) ^ self.constant
    }

    /// Whether the form's condition holds at τ (evaluates to 0).
    pub fn is_satisfied_by(&self, tau: TauVector) -> bool {
        self.evaluate(tau) == 0
    }

    /// Whether the form depends on `τ_i` at all.
    pub fn depends_on(&self, i: u32) -> bool {
        self.coeff(i) == 1
    }

    /// The F₂ sum of two forms (condition conjunction is not preserved;
    /// this is the formal sum used to compare derivations).
    pub fn xor(&self, other: &LinearFormF2) -> LinearFormF2 {
        assert_eq!(self.d, other.d, "forms over different coordinate counts");
        LinearFormF2 {
            coeffs: self.coeffs ^ other.coeffs,
            constant: self.constant ^ other.constant,
            d: self.d,
        }
    }
}

/// Accumulates coefficients over `τ₁..τ_{d+1}` before the `τ₁ = 1`
/// substitution.
struct RawForm {
    coeff: Vec<u8>,
    d: u32,
}

impl RawForm {
    fn new(d: u32) -> RawForm {
        RawForm { coeff: vec![0; d as usize + 2], d }
    }

    fn flip(&mut self, i: u32) {
        self.coeff[i as usize] ^= 1;
    }

    /// Fold `τ₁ = 1` and the stated right-hand side into the constant.
    fn finish(self, rhs: u8) -> LinearFormF2 {
        let mut coeffs = 0u32;
        for i in 2..=self.d + 1 {
            coeffs |= u32::from(self.coeff[i as usize]) << (i - 2);
        }
        LinearFormF2 { coeffs, constant: self.coeff[1] ^ rhs, d: self.d }
    }
}

/// Whether the leading relation row (row `d`) is `[1, 0, …, 0]`.
fn leading_row_ok(p: &ConcentricPresentation) -> bool {
    let (d, dp) = (p.d(), p.d_prime());
    p.eps(d, 0) == 1 && (1..=(d - 2 * dp)).all(|c| p.eps(d, c) == 0)
}

/// The condition for the shift permutation to fix only the identity:
/// `Σ_{i=1}^{d+1} τ_i + Σ_{ℓ=1}^{d−d'} Σ_{i=1}^{min{d',ℓ}} Σ_{k=1}^{i}
/// τ_k ε_{m−i,ℓ−i} = 0`, with `τ₁ = 1` substituted.
pub fn build_e1(p: &ConcentricPresentation) -> LinearFormF2 {
    let (m, d, dp) = (p.m(), p.d(), p.d_prime());
    let mut raw = RawForm::new(d);
    for i in 1..=d + 1 {
        raw.flip(i);
    }
    for l in 1..=d - dp {
        for i in 1..=dp.min(l) {
            if p.eps(m - i, l - i) == 1 {
                for k in 1..=i {
                    raw.flip(k);
                }
            }
        }
    }
    raw.finish(0)
}

/// First condition for the squared shift to fix more than one point:
/// `Σ_{i=1}^{d+1} (m+i)τ_i + Σ_{ℓ=1}^{d−d'} (ℓ+d+1) Σ_{i=1}^{min{d',ℓ}}
/// Σ_{k=1}^{i−1} (i+k)τ_k ε_{m−i,ℓ−i} = 1`, coefficients mod 2.
pub fn build_e2(p: &ConcentricPresentation) -> LinearFormF2 {
    build_e2_e3(p, 0)
}

/// Second condition for the squared shift to fix more than one point: the
/// companion with weights `(m+i+1)` and `(ℓ+d)`, and right-hand side 0.
pub fn build_e3(p: &ConcentricPresentation) -> LinearFormF2 {
    build_e2_e3(p, 1)
}

/// `shift = 0` builds the first squared-shift condition, `shift = 1` the
/// second: the two differ only by an index shift in the integer weights and
/// the right-hand side.
fn build_e2_e3(p: &ConcentricPresentation, shift: u32) -> LinearFormF2 {
    let (m, d, dp) = (p.m(), p.d(), p.d_prime());
    let mut raw = RawForm::new(d);
    for i in 1..=d + 1 {
        if (m + i + shift) & 1 == 1 {
            raw.flip(i);
        }
    }
    for l in 1..=d - dp {
        if (l + d + 1 - shift) & 1 == 0 {
            continue;
        }
        for i in 1..=dp.min(l) {
            if p.eps(m - i, l - i) == 0 {
                continue;
            }
            for k in 1..i {
                if (i + k) & 1 == 1 {
                    raw.flip(k);
                }
            }
        }
    }
    raw.finish(1 - shift as u8)
}

/// The diagonal-sum constraint
/// `τ_{d'} = 1 + Σ_{k=1}^{d'−1} (Σ_{i=k}^{d'} Σ_{ℓ=i}^{d−d'} (i+k+1)
/// ε_{m−i,ℓ−i}) τ_k`, as a form on the free coordinates.
///
/// Requires the leading relation row to be `[1, 0, …, 0]` (which makes the
/// `τ_{d'}` coefficient collapse to 1); refuses otherwise. The result equals
/// the formal sum of the three fixed-point conditions.
pub fn sum_condition(p: &ConcentricPresentation) -> Result<LinearFormF2, SearchError> {
    if !leading_row_ok(p) {
        return Err(SearchError::LeadingRowViolation);
    }
    let (m, d, dp) = (p.m(), p.d(), p.d_prime());
    let mut raw = RawForm::new(d);
    raw.flip(dp);
    for k in 1..dp {
        let mut coeff = 0u8;
        for i in k..=dp {
            if (i + k + 1) & 1 == 0 {
                continue;
            }
            for l in i..=d - dp {
                coeff ^= p.eps(m - i, l - i);
            }
        }
        if coeff == 1 {
            raw.flip(k);
        }
    }
    Ok(raw.finish(1))
}

/// Solve the invertible 2×2 system in `(τ_{d−3}, τ_{d−2})` that makes both
/// squared-shift conditions hold, the other coordinates of `tau` staying
/// fixed. When the diagonal-sum constraint already holds for those fixed
/// coordinates, the first condition follows from the form-sum identity, so
/// the returned pair makes all three conditions hold.
pub fn solve_e_system(p: &ConcentricPresentation, tau: TauVector) -> (u8, u8) {
    let (m, d) = (p.m(), p.d());
    let (e2, e3) = (build_e2(p), build_e3(p));
    // The pair coefficients are parities of the consecutive integers
    // (m+d−3, m+d−2; m+d−2, m+d−1): an identity or swap matrix.
    debug_assert_eq!(e2.coeff(d - 3), ((m + d - 3) & 1) as u8);
    debug_assert_eq!(e2.coeff(d - 2), ((m + d - 2) & 1) as u8);
    debug_assert_eq!(e3.coeff(d - 3), e2.coeff(d - 2));
    debug_assert_eq!(e3.coeff(d - 2), e2.coeff(d - 3));
    let zeroed = tau.with_coordinate(d - 3, 0).with_coordinate(d - 2, 0);
    let r2 = e2.evaluate(zeroed);
    let r3 = e3.evaluate(zeroed);
    if e2.coeff(d - 3) == 1 {
        (r2, r3)
    } else {
        (r3, r2)
    }
}
