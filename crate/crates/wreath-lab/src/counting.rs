//! Fixed-point counts, the half-ratio shape, and slab dichotomies.

use crate::element::WreathElement;
use crate::WreathError;

/// Cap on brute-force domain sizes for enumeration-backed checks.
pub const BRUTE_MAX_POINTS: usize = 1 << 12;

/// Closed-form fixed point count of an involution in product action:
/// one free slot value per moved slot pair, and a component fixed point per
/// unmoved slot:
///
/// ```text
/// |Δ|^(|moved slots|/2) · Π_{i unmoved} |Fix(gᵢ)|
/// ```
pub fn wreath_fixed_point_count(g: &WreathElement) -> Result<u64, WreathError> {
    if !g.is_involution() {
        return Err(WreathError::NotInvolution);
    }
    let support = g.top_support();
    debug_assert!(support.len() % 2 == 0, "involutions move slots in pairs");
    let mut count = (g.delta_size() as u64).pow(support.len() as u32 / 2);
    for i in 0..g.k() {
        if g.top()[i] as usize == i {
            count *= g.component_fixed_count(i) as u64;
        }
    }
    Ok(count)
}

/// Fixed point count by enumerating the whole tuple space.
pub fn brute_fixed_point_count(g: &WreathElement) -> Result<u64, WreathError> {
    let points = g.point_count();
    if points > BRUTE_MAX_POINTS {
        return Err(WreathError::DomainTooLarge { points, max: BRUTE_MAX_POINTS });
    }
    Ok((0..points).filter(|&index| g.apply_packed(index) == index).count() as u64)
}

/// When an involution fixes exactly half of the tuple space (slot sets of
/// power-of-two size at least 4), its shape is forced: the top is trivial
/// and exactly one slot carries a non-trivial component, itself fixing
/// exactly half its slot set. Returns that slot and component, or `None`
/// when the ratio is not one half.
pub fn half_fpr_shape(g: &WreathElement) -> Result<Option<(usize, Vec<u32>)>, WreathError> {
    let delta = g.delta_size();
    if delta < 4 || !delta.is_power_of_two() {
        return Err(WreathError::SlotSizeNotHalvable { delta_size: delta });
    }
    let fixed = wreath_fixed_point_count(g)?;
    if fixed.checked_mul(2) != Some(g.point_count() as u64) {
        return Ok(None);
    }
    assert!(
        g.top_support().is_empty(),
        "a moved slot caps the ratio at 1/|Δ| below one half",
    );
    let nontrivial: Vec<usize> =
        (0..g.k()).filter(|&i| g.component_fixed_count(i) != delta).collect();
    assert_eq!(nontrivial.len(), 1, "a half ratio forces exactly one non-trivial slot");
    let j = nontrivial[0];
    assert_eq!(g.component_fixed_count(j), delta / 2);
    Ok(Some((j, g.components()[j].clone())))
}

/// Whether the bit table `f` over the tuple space splits along slot `j`:
/// true iff some nonempty proper subset of slot values makes `f` constantly
/// 0 on those slabs and constantly 1 on the remaining slabs. Equivalently,
/// every slab is constant and both values occur.
///
/// `f[index]` is the bit at the mixed-radix tuple `index`; `shape` supplies
/// the slot count and slot set size.
pub fn slab_dichotomy(f: &[u8], shape: &WreathElement, j: usize) -> Result<bool, WreathError> {
    let points = shape.point_count();
    if points > BRUTE_MAX_POINTS {
        return Err(WreathError::DomainTooLarge { points, max: BRUTE_MAX_POINTS });
    }
    if f.len() != points {
        return Err(WreathError::BitTableSizeMismatch { got: f.len(), expected: points });
    }
    if j >= shape.k() {
        return Err(WreathError::SlotOutOfRange { j, k: shape.k() });
    }

    let delta = shape.delta_size();
    let mut slab_value = vec![None::<u8>; delta];
    for (index, &bit) in f.iter().enumerate() {
        let b = shape.unpack(index)[j] as usize;
        match slab_value[b] {
            None => slab_value[b] = Some(bit & 1),
            Some(seen) if seen != bit & 1 => return Ok(false),
            Some(_) => {}
        }
    }
    let zeros = slab_value.iter().filter(|v| **v == Some(0)).count();
    Ok(zeros > 0 && zeros < delta)
}
