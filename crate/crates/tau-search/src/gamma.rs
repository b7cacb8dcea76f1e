//! Selection of the probe vector γ and the closed-form pair
//! `(τ_{d−1}, τ_d)`.
//!
//! The product-action exclusion needs a point γ whose top conjugate
//! evaluation `f_{d−d'+1}(γ, ·)` is constantly 1 over the five coordinates
//! selected later, and then two offset coordinates chosen so that conjugating
//! γ flips both `f₀` and `f_{−1}`. Both selections follow explicit closed
//! forms; the pair selection re-verifies its own increment postcondition by
//! direct permutation composition before returning.

use concentric_core::{ConcentricPresentation, Coord};
use permutation_engine::{f_t, phi_inv_packed, x_tau, y_tau_closed, TauVector};

use crate::SearchError;

/// The largest relation-row index with leading entry 1, in `{d, …, m−1}`.
/// `None` when even row `d` lacks its leading 1.
pub fn u_index(p: &ConcentricPresentation) -> Option<u32> {
    (p.d()..p.m()).rev().find(|&i| p.eps(i, 0) == 1)
}

/// Whether γ has the required evaluation pattern: first and last coordinate
/// zero, and `f_{d−d'+1}(γ, τ) = 1` for all 32 completions of
/// `(τ_{d−3}, …, τ_{d+1})` on top of the fixed prefix.
pub fn gamma_qualifies(p: &ConcentricPresentation, prefix: &[u8], gamma: Coord) -> bool {
    let (m, d, dp) = (p.m(), p.d(), p.d_prime());
    if gamma.bit(1) != 0 || gamma.bit(m) != 0 {
        return false;
    }
    let mut base = TauVector::from_free_bits(p, 0);
    for (idx, &v) in prefix.iter().enumerate() {
        base = base.with_coordinate(2 + idx as u32, v);
    }
    let t_top = (d - dp + 1) as i32;
    (0..32u32).all(|completion| {
        let mut tau = base;
        for (j, i) in (d - 3..=d + 1).enumerate() {
            tau = tau.with_coordinate(i, ((completion >> j) & 1) as u8);
        }
        f_t(p, tau, t_top, gamma) == 1
    })
}

/// Find γ with `γ₁ = γ_m = 0` whose top conjugate evaluation is constantly 1
/// over all completions of the five selected coordinates. `prefix` fixes
/// `τ₂..τ_{d−4}` (empty when `d = 5`). Candidates are scanned in ascending
/// packed order, so the result is deterministic.
pub fn find_gamma(p: &ConcentricPresentation, prefix: &[u8]) -> Result<Coord, SearchError> {
    let (m, d) = (p.m(), p.d());
    if d < 5 {
        return Err(SearchError::DiameterTooSmall { d });
    }
    let expected = d as usize - 5;
    assert_eq!(prefix.len(), expected, "prefix must fix exactly τ₂..τ_{{d−4}}");
    for packed in 0u32..(1u32 << m) {
        if packed & 1 != 0 || packed >> (m - 1) != 0 {
            continue;
        }
        let gamma = Coord::from_packed(packed);
        if gamma_qualifies(p, prefix, gamma) {
            return Ok(gamma);
        }
    }
    Err(SearchError::GammaNotFound {
        prefix: prefix.iter().map(|b| char::from(b'0' + b)).collect(),
    })
}

/// Select `(τ_{d−1}, τ_d)` by the closed forms
///
/// ```text
/// τ_d   = 1 + λ_{d−1}(e_m, γ^{φ⁻¹}) + τ_{d+1}·ε_{d+1,0}
/// τ_{d−1} = 1 + λ_{d−2}(e_m, γ^{φ⁻¹})
///         + (τ_d + λ_{d−1}(e_m, γ^{φ⁻¹}))·ε_{d+1,0}
///         + τ_{d+1}·ε_{d+2,0} + τ_{m−1}·τ_{d+1}
/// ```
///
/// (γ₁ = 0 lets the inverse shift of γ stand in for its full conjugate, so
/// both λ values are plain constants. The last term is nonzero only when
/// `m − 1 = d + 1`, i.e. the offset window is exactly two coordinates deep;
/// for deeper windows `τ_{m−1}` is a fixed zero coordinate.) Before returning, the increment
/// postcondition is re-verified by direct permutation composition: with
/// `z = x^{−(d−d'+1)} y x^{d−d'+1}`, both `f₀` and `f_{−1}` must flip on γ
/// under z for all four settings of `(τ_{d−3}, τ_{d−2})`.
///
/// `tau` supplies the fixed coordinates (prefix and `τ_{d+1}`); the pair and
/// the solvable pair positions of `tau` are ignored.
pub fn select_tau_d_minus_1_d(
    p: &ConcentricPresentation,
    tau: TauVector,
    gamma: Coord,
) -> Result<(u8, u8), SearchError> {
    let (m, d, dp) = (p.m(), p.d(), p.d_prime());
    if d < 5 {
        return Err(SearchError::DiameterTooSmall { d });
    }
    assert_eq!(gamma.bit(1), 0, "γ must have first coordinate 0");

    let shifted = Coord::from_packed(phi_inv_packed(m, gamma.packed()));
    let lam_d1 = p.lambda_em(d - 1, shifted);
    let lam_d2 = p.lambda_em(d - 2, shifted);
    let eps_d1 = p.eps(d + 1, 0);
    let eps_d2 = p.eps(d + 2, 0);
    let top = tau.get(d + 1);

    let tau_d = 1 ^ lam_d1 ^ (top & eps_d1);
    // When m − 1 = d + 1, the shifted conjugate picks up τ_{m−1}·τ_{d+1} =
    // τ_{d+1}; for larger windows τ_{m−1} is pinned to zero and the term dies.
    let edge = u8::from(m - 1 == d + 1) & top;
    let tau_d_minus_1 =
        1 ^ lam_d2 ^ ((tau_d ^ lam_d1) & eps_d1) ^ (top & eps_d2) ^ edge;

    let exponent = i64::from(d - dp + 1);
    for pair in 0..4u32 {
        let full = tau
            .with_coordinate(d, tau_d)
            .with_coordinate(d - 1, tau_d_minus_1)
            .with_coordinate(d - 3, (pair & 1) as u8)
            .with_coordinate(d - 2, ((pair >> 1) & 1) as u8);
        let x = x_tau(p, full);
        let y = y_tau_closed(p, full)?;
        let z = x.power(-exponent).compose(&y).compose(&x.power(exponent));
        let moved = Coord::from_packed(z.image(gamma.packed()));
        for t in [0, -1] {
            if f_t(p, full, t, moved) != f_t(p, full, t, gamma) ^ 1 {
                return Err(SearchError::PostconditionViolated {
                    detail: format!(
                        "conjugate evaluation at t = {t} did not flip on γ for offset {}",
                        full.bitstring()
                    ),
                });
            }
        }
    }
    Ok((tau_d_minus_1, tau_d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_leading_index_reads_the_relation_rows() {
        let p = ConcentricPresentation::minimal_tight7();
        // Rows 5 and 6 have entries [1, 0] and [0, 0, 1]: only row 5 leads.
        assert_eq!(u_index(&p), Some(5));
        let flat = ConcentricPresentation::new(7, 5, vec![vec![0, 0], vec![0, 0, 0]]).unwrap();
        assert_eq!(u_index(&flat), None);
    }

    #[test]
    fn gamma_exists_and_is_nonzero_on_the_tight_m7_instance() {
        let p = ConcentricPresentation::minimal_tight7();
        let gamma = find_gamma(&p, &[]).unwrap();
        assert_ne!(gamma, Coord::ZERO, "the zero vector evaluates to 0, never 1");
        assert_eq!(gamma.bit(1), 0);
        assert_eq!(gamma.bit(7), 0);
        assert!(gamma_qualifies(&p, &[], gamma));
    }

    #[test]
    fn zero_vector_never_qualifies() {
        let p = ConcentricPresentation::minimal_tight7();
        assert!(!gamma_qualifies(&p, &[], Coord::ZERO));
    }

    #[test]
    fn pair_selection_passes_its_increment_postcondition() {
        let p = ConcentricPresentation::minimal_tight7();
        let gamma = find_gamma(&p, &[]).unwrap();
        for top in [0u8, 1u8] {
            let tau = TauVector::from_free_bits(&p, 0).with_coordinate(6, top);
            let (a, b) = select_tau_d_minus_1_d(&p, tau, gamma).unwrap();
            assert!(a <= 1 && b <= 1);
        }
    }

    #[test]
    fn gamma_exists_for_every_prefix_at_m9() {
        let p = ConcentricPresentation::h7_family(9).unwrap();
        // d = 7: the prefix fixes τ₂ and τ₃.
        for bits in 0..4u8 {
            let prefix = [bits & 1, (bits >> 1) & 1];
            let gamma = find_gamma(&p, &prefix).unwrap();
            assert!(gamma_qualifies(&p, &prefix, gamma));
        }
    }
}
