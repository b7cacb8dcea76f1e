//! Enumeration utilities for the product-action exclusion: exact fiber
//! counts of the conjugate evaluation map, variable-dependency checks, and
//! the feasible wreath decompositions of the degree.

use concentric_core::ConcentricPresentation;
use permutation_engine::{f_t_bits, TauVector};

use crate::gamma::u_index;
use crate::SearchError;

/// Largest `m` for which full point enumeration is attempted.
pub const ENUMERATION_MAX_M: u32 = 12;

/// Exact number of points α with `f_t(α) = targets[t + d' − 1]` for every
/// admissible conjugate index `t`, starting at `t = −d'+1`. A target slice
/// of length `d` covers `t ∈ {−d'+1, …, d−d'}`; length `d+1` extends to the
/// top index `d−d'+1`.
pub fn count_common_solutions(
    p: &ConcentricPresentation,
    tau: TauVector,
    targets: &[u8],
) -> Result<u64, SearchError> {
    let (m, d, dp) = (p.m(), p.d(), p.d_prime());
    if m > ENUMERATION_MAX_M {
        return Err(SearchError::EnumerationTooLarge { m, max: ENUMERATION_MAX_M });
    }
    let max_len = d as usize + 1;
    if targets.is_empty() || targets.len() > max_len {
        return Err(SearchError::TargetLengthInvalid { len: targets.len(), max: max_len });
    }
    let lo = 1 - dp as i32;
    let tables: Vec<Vec<u8>> =
        (0..targets.len()).map(|j| f_t_bits(p, tau, lo + j as i32)).collect();
    let n = p.num_points();
    Ok((0..n)
        .filter(|&point| {
            tables.iter().zip(targets).all(|(table, &want)| table[point as usize] == want)
        })
        .count() as u64)
}

/// The variable-dependency contract of the conjugate evaluation `f_t`: a
/// designated leading coordinate that always flips the value, and a listed
/// variable set outside of which no coordinate (of the point or of the
/// offset) affects the value. Verified by exhaustive toggling.
pub fn f_t_dependency_check(
    p: &ConcentricPresentation,
    tau: TauVector,
    t: i32,
) -> Result<bool, SearchError> {
    let (m, d, dp) = (p.m(), p.d(), p.d_prime());
    if m > ENUMERATION_MAX_M {
        return Err(SearchError::EnumerationTooLarge { m, max: ENUMERATION_MAX_M });
    }
    let u = u_index(p).ok_or(SearchError::LeadingRowViolation)?;
    let lo = 1 - dp as i32;
    let hi = (d - dp + 1) as i32;
    if t < lo || t > hi {
        return Err(SearchError::TOutOfRange { t, lo, hi });
    }

    // Leading coordinate and allowed variables per the index window. All
    // three windows assume the leading-row and trailing-entry constraints.
    let (lead, point_vars, offset_vars): (u32, Vec<u32>, Vec<u32>) = if t <= 0 {
        let lead = (d as i32 + t) as u32;
        ((lead), (1..=dp).chain(lead + 1..=m).collect(), (2..=d + 1).collect())
    } else if t <= (m - u) as i32 {
        let lead = u + t as u32;
        (lead, (d + 1..lead).collect(), Vec::new())
    } else {
        let lead = (t - (m - u) as i32) as u32;
        (lead, (1..lead).chain(d + 1..=m).collect(), (2..=lead).collect())
    };

    let n = p.num_points() as usize;
    let base = f_t_bits(p, tau, t);

    // (i) the leading coordinate always flips the value.
    let lead_mask = 1usize << (lead - 1);
    if (0..n).any(|a| base[a ^ lead_mask] != base[a] ^ 1) {
        return Ok(false);
    }
    // (ii) point coordinates outside the listed set never change the value.
    for j in (1..=m).filter(|j| *j != lead && !point_vars.contains(j)) {
        let mask = 1usize << (j - 1);
        if (0..n).any(|a| base[a ^ mask] != base[a]) {
            return Ok(false);
        }
    }
    // (iii) offset coordinates outside the listed set never change the value.
    for j in (2..=d + 1).filter(|j| !offset_vars.contains(j)) {
        let toggled = f_t_bits(p, tau.with_coordinate(j, tau.get(j) ^ 1), t);
        if toggled != base {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All ways to factor the `2^m` points as a product of `k ≥ 2` equal blocks
/// of size at least 5: divisors `k` of `m` with `2^{m/k} ≥ 5`, paired with
/// the block size.
pub fn wreath_feasible_decompositions(m: u32) -> Vec<(u32, u64)> {
    (2..=m).filter(|k| m % k == 0 && m / k >= 3).map(|k| (k, 1u64 << (m / k))).collect()
}
