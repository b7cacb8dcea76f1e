//! The presentation data model for concentric 2-groups.
//!
//! A concentric 2-group on `m` involutory generators `a_1, …, a_m` with
//! diameter `d` is described by relations
//!
//! - `a_i² = 1`,
//! - `[a_i, a_j] = 1` whenever `|i − j| < d`,
//! - `[a_i, a_j] = a_{d'+i}^{ε_{j−i,0}} ⋯ a_{j−d'}^{ε_{j−i,j−i−2d'}}`
//!   for `i ∈ {1..d'}`, `j ∈ {d+i..m}`, where `d' = m − d`,
//!
//! so the whole group law is encoded by the triangular bit array
//! `ε_{k,c}` with rows `k ∈ {d..m−1}` and row `k` holding the entries
//! `ε_{k,0} ..= ε_{k,k−2d'}`. This module owns that tuple `(m, d, ε)`,
//! its structural invariants, its JSON file format, and the stock families
//! used as CLI built-ins and test fixtures.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coord::MAX_M;

/// Structural failures when constructing or parsing a presentation.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum PresentationError {
    #[error("generator count m must be in 1..={MAX_M}, got {0}")]
    MOutOfRange(u32),
    #[error("diameter d={d} outside ceil(2m/3)..=m for m={m}")]
    DiameterOutOfRange { m: u32, d: u32 },
    #[error("expected {expected} epsilon rows (one per k in d..=m-1), got {got}")]
    RowCount { expected: usize, got: usize },
    #[error("epsilon row k={k} must have {expected} entries, got {got}")]
    RowLength { k: u32, expected: usize, got: usize },
    #[error("epsilon entries must be 0 or 1 (row k={k}, entry {c})")]
    EntryNotBit { k: u32, c: usize },
    #[error("no tightly concentric presentation exists for (m={m}, d={d}): need 3d > 2m and m - d >= 2")]
    InfeasibleTight { m: u32, d: u32 },
    #[error("the h7 family requires m >= 7, got {0}")]
    H7TooSmall(u32),
    #[error("the dihedral family requires m >= 3, got {0}")]
    DihedralTooSmall(u32),
    #[error("invalid presentation JSON: {0}")]
    Json(String),
}

/// On-disk form of a presentation: `{"m": …, "d": …, "eps": [[…], …]}` with
/// `eps` listing the rows `k = d, d+1, …, m−1` in order, each row the bits
/// `ε_{k,0}, ε_{k,1}, …` as 0/1 integers.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PresentationFile {
    pub m: u32,
    pub d: u32,
    pub eps: Vec<Vec<u8>>,
}

/// The tuple `(m, d, ε-triangle)` defining a concentric 2-group; the single
/// source of truth for the group law.
///
/// Invariants enforced at construction:
/// - `⌈2m/3⌉ ≤ d ≤ m` and `1 ≤ m ≤ 24`;
/// - exactly one ε row per `k ∈ {d..m−1}` (none when `d = m`);
/// - row `k` has exactly `k − 2(m−d) + 1` entries, each 0 or 1.
///
/// The derived quantity `d' = m − d` is never stored; call
/// [`ConcentricPresentation::d_prime`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConcentricPresentation {
    m: u32,
    d: u32,
    /// `eps[r]` is row `k = d + r`, entries `ε_{k,0} ..= ε_{k,k−2d'}`.
    eps: Vec<Vec<u8>>,
}

/// Structural errors for raw `(m, d, eps)` data, if any.
pub(crate) fn structural_errors(m: u32, d: u32, eps: &[Vec<u8>]) -> Vec<PresentationError> {
    let mut errs = Vec::new();
    if m == 0 || m > MAX_M {
        errs.push(PresentationError::MOutOfRange(m));
        return errs; // everything else is relative to m
    }
    let d_min = 2 * m / 3 + u32::from(2 * m % 3 != 0); // ⌈2m/3⌉
    if d < d_min || d > m {
        errs.push(PresentationError::DiameterOutOfRange { m, d });
        return errs;
    }
    let expected_rows = (m - d) as usize;
    if eps.len() != expected_rows {
        errs.push(PresentationError::RowCount { expected: expected_rows, got: eps.len() });
        return errs;
    }
    let dp = m - d;
    for (r, row) in eps.iter().enumerate() {
        let k = d + r as u32;
        let expected = (k + 1 - 2 * dp) as usize; // k − 2d' + 1 ≥ 1 since 3d ≥ 2m
        if row.len() != expected {
            errs.push(PresentationError::RowLength { k, expected, got: row.len() });
            continue;
        }
        for (c, &bit) in row.iter().enumerate() {
            if bit > 1 {
                errs.push(PresentationError::EntryNotBit { k, c });
            }
        }
    }
    errs
}

impl ConcentricPresentation {
    /// Validate and build a presentation from the raw tuple.
    pub fn new(m: u32, d: u32, eps: Vec<Vec<u8>>) -> Result<Self, PresentationError> {
        match structural_errors(m, d, &eps).into_iter().next() {
            Some(err) => Err(err),
            None => Ok(ConcentricPresentation { m, d, eps }),
        }
    }

    /// Generator count `m`.
    #[inline]
    pub fn m(&self) -> u32 {
        self.m
    }

    /// Diameter `d`.
    #[inline]
    pub fn d(&self) -> u32 {
        self.d
    }

    /// The derived quantity `d' = m − d`.
    #[inline]
    pub fn d_prime(&self) -> u32 {
        self.m - self.d
    }

    /// Number of points `2^m` of the regular permutation representation.
    #[inline]
    pub fn num_points(&self) -> u64 {
        1u64 << self.m
    }

    /// The triangle entry `ε_{k,c}` (row `k` 1-based as in the relations,
    /// entry `c` 0-based). Reads outside the stored triangle return 0; this
    /// uniform convention absorbs the empty-sum cases of the algebra.
    #[inline]
    pub fn eps(&self, k: u32, c: u32) -> u8 {
        if k < self.d || k >= self.m {
            return 0;
        }
        let row = &self.eps[(k - self.d) as usize];
        row.get(c as usize).copied().unwrap_or(0)
    }

    /// The stored rows (row `r` is `k = d + r`).
    pub fn eps_rows(&self) -> &[Vec<u8>] {
        &self.eps
    }

    /// Serialize to the JSON file format.
    pub fn to_json(&self) -> String {
        let file = PresentationFile { m: self.m, d: self.d, eps: self.eps.clone() };
        serde_json::to_string_pretty(&file).expect("presentation serialization cannot fail")
    }

    /// Parse and structurally validate the JSON file format.
    pub fn from_json(text: &str) -> Result<Self, PresentationError> {
        let file: PresentationFile =
            serde_json::from_str(text).map_err(|e| PresentationError::Json(e.to_string()))?;
        Self::new(file.m, file.d, file.eps)
    }

    /// The family with diameter `d = m − 2` and nonzero entries
    /// `ε_{d,0} = ε_{d+1,2} = 1`: the direct product of the base group on
    /// seven generators with an elementary abelian factor. Requires `m ≥ 7`.
    pub fn h7_family(m: u32) -> Result<Self, PresentationError> {
        if m < 7 {
            return Err(PresentationError::H7TooSmall(m));
        }
        let d = m - 2;
        // d' = 2; row k holds k − 3 entries … spelled out: k − 2·2 + 1 = k − 3.
        let mut eps = Vec::new();
        for k in d..m {
            let mut row = vec![0u8; (k - 3) as usize];
            if k == d {
                row[0] = 1;
            } else {
                row[2] = 1;
            }
            eps.push(row);
        }
        Self::new(m, d, eps)
    }

    /// The elementary abelian group `C₂^m`: diameter `d = m`, no ε rows.
    pub fn elementary_abelian(m: u32) -> Result<Self, PresentationError> {
        Self::new(m, m, Vec::new())
    }

    /// The family with diameter `d = m − 1` and single nonzero entry
    /// `ε_{m−1,0} = 1`: the direct product of a dihedral group of order 8
    /// with an elementary abelian factor. Requires `m ≥ 3`.
    pub fn dihedral_family(m: u32) -> Result<Self, PresentationError> {
        if m < 3 {
            return Err(PresentationError::DihedralTooSmall(m));
        }
        let d = m - 1;
        // Single row k = m − 1 with m − 2 entries; only ε_{m−1,0} set.
        let mut row = vec![0u8; (m - 2) as usize];
        row[0] = 1;
        Self::new(m, d, vec![row])
    }

    /// The minimal tightly concentric instance at `m = 7`, `d = 5`: row 5 is
    /// `[1, 0]` (forced) and row 6 is all zero (free entries left at 0).
    pub fn minimal_tight7() -> Self {
        Self::new(7, 5, vec![vec![1, 0], vec![0, 0, 0]])
            .expect("the built-in minimal m=7 instance is structurally valid")
    }

    /// Sample a tightly concentric presentation uniformly over the free ε
    /// entries. The forced entries are `ε_{d,0} = 1`, the rest of row `d`
    /// zero, and the last entry of every row zero. Deterministic per seed.
    pub fn random_tightly_concentric(m: u32, d: u32, seed: u64) -> Result<Self, PresentationError> {
        use rand::{Rng, SeedableRng};
        if m == 0 || m > MAX_M {
            return Err(PresentationError::MOutOfRange(m));
        }
        if 3 * d <= 2 * m || m - d < 2 {
            return Err(PresentationError::InfeasibleTight { m, d });
        }
        let dp = m - d;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut eps = Vec::new();
        for k in d..m {
            let len = (k + 1 - 2 * dp) as usize;
            let mut row = vec![0u8; len];
            if k == d {
                // Row d is fully forced to [1, 0, …, 0].
                row[0] = 1;
            } else {
                // Free entries everywhere but the last (forced 0).
                for entry in row.iter_mut().take(len - 1) {
                    *entry = u8::from(rng.gen::<bool>());
                }
            }
            eps.push(row);
        }
        Self::new(m, d, eps)
    }
}
