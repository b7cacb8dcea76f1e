//! Builders for the concrete permutations on the `2^m` coordinate vectors:
//! the coordinate shift φ, right translations R(h), the shift-conjugating
//! permutation x_τ and its inverse, the involution y_τ, the evaluation
//! functions f_t, and the conjugates of y_τ by powers of x_τ.
//!
//! Every permutation with a closed coordinate form also has a definitional
//! construction here; tests require the two to agree pointwise.

use concentric_core::{ConcentricPresentation, Coord};

use crate::{DensePermutation, EngineError, TauVector};

/// Packed form of the cyclic right shift: `α^φ = (α_m, α₁, …, α_{m−1})`.
#[inline]
pub fn phi_packed(m: u32, packed: u32) -> u32 {
    let mask = (1u32 << m) - 1;
    ((packed << 1) | (packed >> (m - 1))) & mask
}

/// Packed form of the inverse shift: `α^{φ⁻¹} = (α₂, …, α_m, α₁)`.
#[inline]
pub fn phi_inv_packed(m: u32, packed: u32) -> u32 {
    ((packed >> 1) | ((packed & 1) << (m - 1))) & ((1u32 << m) - 1)
}

fn perm_from_coord_map(
    p: &ConcentricPresentation,
    f: impl Fn(Coord) -> Coord,
) -> DensePermutation {
    DensePermutation::from_fn(p.num_points() as usize, |q| f(Coord::from_packed(q)).packed())
        .expect("coordinate map must be a bijection")
}

/// The coordinate shift φ as a permutation of the `2^m` points.
pub fn phi_perm(p: &ConcentricPresentation) -> DensePermutation {
    let m = p.m();
    perm_from_coord_map(p, |a| Coord::from_packed(phi_packed(m, a.packed())))
}

/// The inverse coordinate shift φ⁻¹ as a permutation.
pub fn phi_inv_perm(p: &ConcentricPresentation) -> DensePermutation {
    let m = p.m();
    perm_from_coord_map(p, |a| Coord::from_packed(phi_inv_packed(m, a.packed())))
}

/// Right translation `R(h): b ↦ b·h` of the regular representation.
pub fn right_mul_perm(p: &ConcentricPresentation, h: Coord) -> DensePermutation {
    perm_from_coord_map(p, |b| p.multiply(b, h))
}

/// Image of one point under x_τ, by the closed coordinate form
/// `α^{x_τ} = α^φ + α_m(e₁ + τ + Σ_{ℓ=d'+2}^{d+1} λ_{ℓ−1}(e_m, α) e_ℓ)`.
pub fn x_image(p: &ConcentricPresentation, tau: TauVector, alpha: Coord) -> Coord {
    let (m, d, dp) = (p.m(), p.d(), p.d_prime());
    let mut out = Coord::from_packed(phi_packed(m, alpha.packed()));
    if alpha.bit(m) == 1 {
        out ^= Coord::basis(1) ^ tau.coord();
        for ell in (dp + 2)..=(d + 1) {
            if p.lambda_em(ell - 1, alpha) == 1 {
                out ^= Coord::basis(ell);
            }
        }
    }
    out
}

/// Image of one point under x_τ by the defining rule: vectors with last
/// coordinate 0 shift by φ; vectors `a_m·h` map to `τ·h^φ`.
///
/// `tau` may be any coordinate vector with first coordinate 1 (the wider
/// range accepted by [`verify_shift_conjugation`]).
pub fn x_image_definitional(p: &ConcentricPresentation, tau: Coord, alpha: Coord) -> Coord {
    let m = p.m();
    if alpha.bit(m) == 0 {
        return Coord::from_packed(phi_packed(m, alpha.packed()));
    }
    let h = p.multiply(Coord::basis(m), alpha);
    let h_shift = Coord::from_packed(phi_packed(m, h.packed()));
    p.multiply(tau, h_shift)
}

/// Image of one point under x_τ⁻¹, by the closed coordinate form
/// `α^{x_τ⁻¹} = α^{φ⁻¹} + α₁(τ^{φ⁻¹} + e_m + Σ_{ℓ=d'+1}^{d} λ_ℓ(e_m, α^{φ⁻¹}+τ^{φ⁻¹}) e_ℓ)`.
pub fn x_inv_image(p: &ConcentricPresentation, tau: TauVector, alpha: Coord) -> Coord {
    let (m, d, dp) = (p.m(), p.d(), p.d_prime());
    let beta = Coord::from_packed(phi_inv_packed(m, alpha.packed()));
    if alpha.bit(1) == 0 {
        return beta;
    }
    let gamma = beta ^ Coord::from_packed(phi_inv_packed(m, tau.coord().packed()));
    let mut out = gamma ^ Coord::basis(m);
    for ell in (dp + 1)..=d {
        if p.lambda_em(ell, gamma) == 1 {
            out ^= Coord::basis(ell);
        }
    }
    out
}

/// x_τ as a dense permutation (closed coordinate form).
pub fn x_tau(p: &ConcentricPresentation, tau: TauVector) -> DensePermutation {
    perm_from_coord_map(p, |a| x_image(p, tau, a))
}

/// x_τ built from the defining rule instead of the closed form.
pub fn x_tau_definitional(p: &ConcentricPresentation, tau: TauVector) -> DensePermutation {
    perm_from_coord_map(p, |a| x_image_definitional(p, tau.coord(), a))
}

/// x_τ⁻¹ as a dense permutation (closed coordinate form).
pub fn x_tau_inv(p: &ConcentricPresentation, tau: TauVector) -> DensePermutation {
    perm_from_coord_map(p, |a| x_inv_image(p, tau, a))
}

/// y_τ built by composing its definition `(x_τ R(τ) x_τ⁻¹ R(a_m))²`.
pub fn y_tau_composed(p: &ConcentricPresentation, tau: TauVector) -> DensePermutation {
    let x = x_tau(p, tau);
    let xi = x_tau_inv(p, tau);
    let r_tau = right_mul_perm(p, tau.coord());
    let r_am = right_mul_perm(p, Coord::basis(p.m()));
    let half = x.compose(&r_tau).compose(&xi).compose(&r_am);
    half.compose(&half)
}

/// Whether the two ε-pattern conditions behind the closed form of y_τ hold:
/// the first row of the triangle is `1, 0, …, 0`, and the last entry of every
/// row is 0.
pub fn c1_c2_hold(p: &ConcentricPresentation) -> bool {
    let (m, d) = (p.m(), p.d());
    if p.eps(d, 0) != 1 {
        return false;
    }
    let row_d_cols = 3 * d as i64 - 2 * m as i64;
    if row_d_cols >= 1 && (1..=row_d_cols as u32).any(|i| p.eps(d, i) != 0) {
        return false;
    }
    (1..=(m - d)).all(|i| {
        let col = 2 * d as i64 - m as i64 - i as i64;
        col < 0 || p.eps(m - i, col as u32) == 0
    })
}

/// The evaluation `f₀(α, τ) = Σ_{i=d}^{m−1} α_i ε_{i,0} + α_m τ_{d+1}`.
pub fn f0(p: &ConcentricPresentation, tau: TauVector, alpha: Coord) -> u8 {
    let (m, d) = (p.m(), p.d());
    let mut acc = alpha.bit(m) & tau.get(d + 1);
    for i in d..m {
        acc ^= alpha.bit(i) & p.eps(i, 0);
    }
    acc
}

/// The evaluation `f_t(α, τ) = f₀(α^{x_τ^{−t}}, τ)` for any integer `t`,
/// computed by applying x_τ⁻¹ (t > 0) or x_τ (t < 0) `|t|` times.
pub fn f_t(p: &ConcentricPresentation, tau: TauVector, t: i32, alpha: Coord) -> u8 {
    let mut point = alpha;
    for _ in 0..t.unsigned_abs() {
        point = if t > 0 { x_inv_image(p, tau, point) } else { x_image(p, tau, point) };
    }
    f0(p, tau, point)
}

/// Bulk evaluation of `f_t` on every point, via one array power `x_τ^{−t}`.
pub fn f_t_bits(p: &ConcentricPresentation, tau: TauVector, t: i32) -> Vec<u8> {
    let n = p.num_points() as usize;
    let x_pow = match t.cmp(&0) {
        std::cmp::Ordering::Equal => DensePermutation::identity(n),
        std::cmp::Ordering::Greater => x_tau_inv(p, tau).power(t as i64),
        std::cmp::Ordering::Less => x_tau(p, tau).power(-t as i64),
    };
    (0..n as u32)
        .map(|q| f0(p, tau, Coord::from_packed(x_pow.image(q))))
        .collect()
}

/// The conjugate `x_τ^{−t} y_τ x_τ^{t}` by its closed coordinate form:
/// `α + f_t(α) e_{2d'+t}` for `t ∈ {−d'+1, …, d−d'}`, and for `t = d−d'+1`
/// the form `α + f_t(α)(τ + Σ_{ℓ=d'+2}^{d} λ_{ℓ−1}(e_m, α^{x_τ⁻¹}) e_ℓ)`.
pub fn conjugate_closed_form(
    p: &ConcentricPresentation,
    tau: TauVector,
    t: i32,
) -> Result<DensePermutation, EngineError> {
    let (d, dp) = (p.d() as i32, p.d_prime() as i32);
    let (lo, hi) = (-dp + 1, d - dp + 1);
    if !(lo..=hi).contains(&t) {
        return Err(EngineError::ConjugateOutOfRange { t, lo, hi });
    }
    if !c1_c2_hold(p) {
        return Err(EngineError::ClosedFormUnavailable {
            reason: "the ε pattern violates the conditions the closed form needs".to_string(),
        });
    }
    let ft = f_t_bits(p, tau, t);
    if t <= d - dp {
        let ev = Coord::basis((2 * dp + t) as u32).packed();
        return Ok(DensePermutation::from_fn(ft.len(), |q| {
            if ft[q as usize] == 1 {
                q ^ ev
            } else {
                q
            }
        })
        .expect("closed-form conjugate must be a bijection"));
    }
    // t = d − d' + 1: the added vector depends on the point through α^{x_τ⁻¹}.
    let xi = x_tau_inv(p, tau);
    Ok(DensePermutation::from_fn(ft.len(), |q| {
        if ft[q as usize] == 0 {
            return q;
        }
        let a_xi = Coord::from_packed(xi.image(q));
        let mut w = tau.coord();
        for ell in (dp as u32 + 2)..=(d as u32) {
            if p.lambda_em(ell - 1, a_xi) == 1 {
                w ^= Coord::basis(ell);
            }
        }
        q ^ w.packed()
    })
    .expect("closed-form conjugate must be a bijection"))
}

/// y_τ by its closed coordinate form `α ↦ α + f₀(α) e_{2d'}`.
///
/// # Errors
/// Refuses presentations whose ε pattern violates the conditions the
/// closed form needs (see [`c1_c2_hold`]).
pub fn y_tau_closed(
    p: &ConcentricPresentation,
    tau: TauVector,
) -> Result<DensePermutation, EngineError> {
    conjugate_closed_form(p, tau, 0)
}

/// Check `x_τ⁻¹ R(a_i) x_τ = R(a_{i+1})` for every `i ∈ {1, …, m−1}` by
/// exact permutation comparison, with x_τ built from the defining rule.
///
/// `tau` may be any coordinate vector with first coordinate 1 — wider than
/// [`TauVector`] allows.
///
/// # Panics
/// If `tau` has first coordinate 0 or bits above coordinate `m`.
pub fn verify_shift_conjugation(p: &ConcentricPresentation, tau: Coord) -> bool {
    assert_eq!(tau.bit(1), 1, "τ must have first coordinate 1");
    assert_eq!(tau.packed() >> p.m(), 0, "τ has bits above coordinate m");
    let x = perm_from_coord_map(p, |a| x_image_definitional(p, tau, a));
    verify_shift_conjugation_with(p, &x)
}

/// The same check against a caller-supplied candidate for x_τ.
pub fn verify_shift_conjugation_with(p: &ConcentricPresentation, x: &DensePermutation) -> bool {
    let xi = x.inverse();
    (1..p.m()).all(|i| {
        let conjugated = xi.compose(&right_mul_perm(p, Coord::basis(i))).compose(x);
        conjugated == right_mul_perm(p, Coord::basis(i + 1))
    })
}
