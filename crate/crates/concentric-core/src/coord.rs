//! Group elements in coordinate form: length-`m` bitvectors over F₂.
//!
//! Every element of a concentric 2-group on generators `a_1, …, a_m` has a
//! unique normal form `a_1^{α_1} ⋯ a_m^{α_m}`, so elements are identified with
//! bitvectors `(α_1, …, α_m)`. The vector is packed little-endian into a
//! `u32`: bit `i−1` holds `α_i`. All public indexing is 1-based to match the
//! generator numbering; conversion happens at the call boundary.

use std::fmt;
use std::ops::{BitXor, BitXorAssign};

/// An element of the group in coordinate form (packed length-`m` bitvector).
///
/// The all-zero vector is the group identity. The packing makes `Coord`
/// double as a point index in `0..2^m` for the permutation representations.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Coord(u32);

/// Largest supported generator count: coordinates pack into a `u32` and the
/// dense permutation representation caps the degree at `2^24`.
pub const MAX_M: u32 = 24;

impl Coord {
    /// The identity element (all-zero vector).
    pub const ZERO: Coord = Coord(0);

    /// The basis vector `e_i` (1-based): the generator `a_i` in coordinate form.
    ///
    /// # Panics
    /// If `i` is 0 or exceeds [`MAX_M`].
    #[inline]
    pub fn basis(i: u32) -> Coord {
        assert!(
            (1..=MAX_M).contains(&i),
            "basis index {i} outside 1..={MAX_M}"
        );
        Coord(1 << (i - 1))
    }

    /// Wrap a packed bitvector (bit `i−1` holds `α_i`).
    #[inline]
    pub const fn from_packed(bits: u32) -> Coord {
        Coord(bits)
    }

    /// The packed bitvector. Doubles as the point index in `0..2^m`.
    #[inline]
    pub const fn packed(self) -> u32 {
        self.0
    }

    /// Coordinate `α_i` (1-based), as 0 or 1.
    ///
    /// # Panics
    /// If `i` is 0 or exceeds [`MAX_M`].
    #[inline]
    pub fn bit(self, i: u32) -> u8 {
        assert!(
            (1..=MAX_M).contains(&i),
            "coordinate index {i} outside 1..={MAX_M}"
        );
        ((self.0 >> (i - 1)) & 1) as u8
    }

    /// Copy of `self` with coordinate `α_i` (1-based) set to `v` (0 or 1).
    #[inline]
    pub fn with_bit(self, i: u32, v: u8) -> Coord {
        assert!(
            (1..=MAX_M).contains(&i),
            "coordinate index {i} outside 1..={MAX_M}"
        );
        debug_assert!(v <= 1);
        let mask = 1u32 << (i - 1);
        Coord((self.0 & !mask) | (u32::from(v & 1)) << (i - 1))
    }

    /// Build from explicit coordinates `[α_1, α_2, …]` (each 0 or 1).
    pub fn from_bits(bits: &[u8]) -> Coord {
        assert!(bits.len() <= MAX_M as usize, "too many coordinates");
        let mut packed = 0u32;
        for (idx, &b) in bits.iter().enumerate() {
            debug_assert!(b <= 1);
            packed |= u32::from(b & 1) << idx;
        }
        Coord(packed)
    }

    /// The coordinates `[α_1, …, α_m]` as a vector of 0/1 bytes.
    pub fn to_bits(self, m: u32) -> Vec<u8> {
        (1..=m).map(|i| self.bit(i)).collect()
    }

    /// Render as the bitstring `α_1 α_2 … α_m` (first character is `α_1`).
    pub fn bitstring(self, m: u32) -> String {
        (1..=m).map(|i| if self.bit(i) == 1 { '1' } else { '0' }).collect()
    }

    /// Parse a bitstring in the same convention as [`Coord::bitstring`].
    pub fn from_bitstring(s: &str) -> Result<Coord, String> {
        if s.len() > MAX_M as usize {
            return Err(format!("bitstring longer than {MAX_M} coordinates: {s:?}"));
        }
        let mut packed = 0u32;
        for (idx, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => packed |= 1 << idx,
                _ => return Err(format!("invalid bitstring character {ch:?} in {s:?}")),
            }
        }
        Ok(Coord(packed))
    }

    /// Number of nonzero coordinates.
    #[inline]
    pub const fn weight(self) -> u32 {
        self.0.count_ones()
    }

    /// True when every nonzero coordinate index `i` satisfies `lo ≤ i ≤ hi` (1-based).
    pub fn support_within(self, lo: u32, hi: u32) -> bool {
        if lo > hi {
            return self.0 == 0;
        }
        let width = hi - lo + 1;
        let mask = if width >= 32 { u32::MAX } else { ((1u32 << width) - 1) << (lo - 1) };
        self.0 & !mask == 0
    }
}

impl BitXor for Coord {
    type Output = Coord;
    #[inline]
    fn bitxor(self, rhs: Coord) -> Coord {
        Coord(self.0 ^ rhs.0)
    }
}

impl BitXorAssign for Coord {
    #[inline]
    fn bitxor_assign(&mut self, rhs: Coord) {
        self.0 ^= rhs.0;
    }
}

impl fmt::Debug for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coord({:#b})", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_and_bit_round_trip() {
        for i in 1..=MAX_M {
            let e = Coord::basis(i);
            for j in 1..=MAX_M {
                assert_eq!(e.bit(j), u8::from(i == j));
            }
        }
    }

    #[test]
    fn bitstring_round_trip_is_identity() {
        let m = 9;
        for packed in 0..(1u32 << m) {
            let c = Coord::from_packed(packed);
            let s = c.bitstring(m);
            assert_eq!(Coord::from_bitstring(&s).unwrap(), c);
        }
    }

    #[test]
    fn bitstring_is_low_coordinate_first() {
        // α_1 = 1, everything else 0 renders with the leading character set.
        let e1 = Coord::basis(1);
        assert_eq!(e1.bitstring(5), "10000");
        let e5 = Coord::basis(5);
        assert_eq!(e5.bitstring(5), "00001");
    }

    #[test]
    fn support_window_checks() {
        let c = Coord::from_bits(&[0, 1, 1, 0, 0]);
        assert!(c.support_within(2, 3));
        assert!(c.support_within(2, 4));
        assert!(!c.support_within(3, 5));
        assert!(Coord::ZERO.support_within(4, 2));
        assert!(!c.support_within(4, 2));
    }

    #[test]
    fn xor_is_componentwise_addition() {
        let a = Coord::from_bits(&[1, 0, 1]);
        let b = Coord::from_bits(&[1, 1, 0]);
        assert_eq!(a ^ b, Coord::from_bits(&[0, 1, 1]));
    }
}
