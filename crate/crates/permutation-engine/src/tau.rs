//! The search variable τ: a coordinate vector constrained to
//! `τ₁ = 1` and `τ_{d+2} = … = τ_m = 0`, leaving `τ₂..τ_{d+1}` free.

use concentric_core::{ConcentricPresentation, Coord};

use crate::EngineError;

/// A well-formed τ for a given `(m, d)`: first coordinate 1, coordinates
/// above `d+1` zero. The free coordinates are `τ₂..τ_{d+1}` (d bits).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TauVector {
    bits: Coord,
    m: u32,
    d: u32,
}

impl TauVector {
    /// Validate a coordinate vector as a τ for presentation `p`.
    pub fn new(p: &ConcentricPresentation, bits: Coord) -> Result<TauVector, EngineError> {
        let (m, d) = (p.m(), p.d());
        if d >= m {
            return Err(EngineError::TauRequiresProperDiameter { m, d });
        }
        if bits.bit(1) != 1 {
            return Err(EngineError::TauMalformed {
                reason: "first coordinate must be 1".to_string(),
            });
        }
        if bits.packed() >> m != 0 || ((d + 2)..=m).any(|i| bits.bit(i) != 0) {
            return Err(EngineError::TauMalformed {
                reason: format!("coordinates above {} must be 0", d + 1),
            });
        }
        Ok(TauVector { bits, m, d })
    }

    /// Build from the packed free coordinates: bit `i` of `free` is `τ_{2+i}`,
    /// so `free` ranges over `0..2^d`.
    ///
    /// # Panics
    /// If `free` has bits at or above position `d`, or if `d = m`.
    pub fn from_free_bits(p: &ConcentricPresentation, free: u32) -> TauVector {
        let (m, d) = (p.m(), p.d());
        assert!(d < m, "τ requires d < m");
        assert!(free < (1u32 << d), "free bits {free:#b} exceed {d} coordinates");
        TauVector { bits: Coord::from_packed(1 | (free << 1)), m, d }
    }

    /// The packed free coordinates (inverse of [`TauVector::from_free_bits`]).
    pub fn free_bits(self) -> u32 {
        (self.bits.packed() >> 1) & ((1u32 << self.d) - 1)
    }

    /// All `2^d` τ values, ascending by free-coordinate integer.
    pub fn enumerate_all(p: &ConcentricPresentation) -> impl Iterator<Item = TauVector> + '_ {
        (0..(1u32 << p.d())).map(move |free| TauVector::from_free_bits(p, free))
    }

    /// The underlying coordinate vector.
    #[inline]
    pub fn coord(self) -> Coord {
        self.bits
    }

    /// Coordinate `τ_i` (1-based).
    #[inline]
    pub fn get(self, i: u32) -> u8 {
        self.bits.bit(i)
    }

    /// Copy with coordinate `τ_i` set to `v`.
    ///
    /// # Panics
    /// If `i` is outside the free range `2..=d+1`.
    pub fn with_coordinate(self, i: u32, v: u8) -> TauVector {
        assert!(
            (2..=self.d + 1).contains(&i),
            "τ coordinate {i} is not free (free range 2..={})",
            self.d + 1
        );
        TauVector { bits: self.bits.with_bit(i, v), ..self }
    }

    /// Render as an `m`-character bitstring, first character `τ₁`.
    pub fn bitstring(self) -> String {
        self.bits.bitstring(self.m)
    }

    /// Parse the same format back (length must be exactly `m`).
    pub fn parse(p: &ConcentricPresentation, s: &str) -> Result<TauVector, EngineError> {
        if s.len() != p.m() as usize {
            return Err(EngineError::TauMalformed {
                reason: format!("expected {} characters, got {}", p.m(), s.len()),
            });
        }
        let bits = Coord::from_bitstring(s)
            .map_err(|reason| EngineError::TauMalformed { reason })?;
        TauVector::new(p, bits)
    }

    #[inline]
    pub fn m(self) -> u32 {
        self.m
    }

    #[inline]
    pub fn d(self) -> u32 {
        self.d
    }
}
