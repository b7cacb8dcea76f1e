//! Dense permutations stored as image arrays.
//!
//! A permutation on `{0..n−1}` is stored as the array of images; points are
//! packed coordinate vectors, so `n = 2^m` throughout this workspace. All
//! permutations act on the right: `compose(a, b)` is "apply `a`, then `b`".

use thiserror::Error;

/// Largest supported degree (`2^24`): dense image arrays dominate every
/// alternative at this scale, and the coordinate packing caps `m` at 24.
pub const MAX_DEGREE: usize = 1 << 24;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermutationError {
    #[error("degree {0} exceeds the maximum {MAX_DEGREE}")]
    DegreeTooLarge(usize),
    #[error("degree must be positive")]
    DegreeZero,
    #[error("images do not form a bijection (point {0} repeated or out of range)")]
    NotABijection(u32),
}

/// Whether a permutation is an even or odd product of transpositions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// A permutation on `{0..degree−1}` stored as its image array.
#[derive(Clone, PartialEq, Eq)]
pub struct DensePermutation {
    images: Vec<u32>,
}

impl std::fmt::Debug for DensePermutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "DensePermutation(degree {}, {} moved)", self.degree(), self.support_size())
    }
}

impl DensePermutation {
    /// The identity on `degree` points.
    pub fn identity(degree: usize) -> DensePermutation {
        assert!(degree > 0 && degree <= MAX_DEGREE);
        DensePermutation { images: (0..degree as u32).collect() }
    }

    /// Validate an image array as a bijection and wrap it.
    pub fn from_images(images: Vec<u32>) -> Result<DensePermutation, PermutationError> {
        let n = images.len();
        if n == 0 {
            return Err(PermutationError::DegreeZero);
        }
        if n > MAX_DEGREE {
            return Err(PermutationError::DegreeTooLarge(n));
        }
        let mut seen = vec![false; n];
        for &img in &images {
            let idx = img as usize;
            if idx >= n || seen[idx] {
                return Err(PermutationError::NotABijection(img));
            }
            seen[idx] = true;
        }
        Ok(DensePermutation { images })
    }

    /// Build from a point map; the map must be a bijection on `0..degree`.
    pub fn from_fn(
        degree: usize,
        f: impl Fn(u32) -> u32,
    ) -> Result<DensePermutation, PermutationError> {
        if degree == 0 {
            return Err(PermutationError::DegreeZero);
        }
        if degree > MAX_DEGREE {
            return Err(PermutationError::DegreeTooLarge(degree));
        }
        Self::from_images((0..degree as u32).map(f).collect())
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// The image `pt^g`.
    #[inline]
    pub fn image(&self, pt: u32) -> u32 {
        self.images[pt as usize]
    }

    #[inline]
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i as u32 == img)
    }

    /// `self` followed by `then` (right action: `pt^(self·then) = (pt^self)^then`).
    ///
    /// # Panics
    /// If the degrees differ.
    pub fn compose(&self, then: &DensePermutation) -> DensePermutation {
        assert_eq!(self.degree(), then.degree(), "composing permutations of unequal degree");
        let images = self.images.iter().map(|&mid| then.images[mid as usize]).collect();
        DensePermutation { images }
    }

    /// The inverse permutation (array transpose).
    pub fn inverse(&self) -> DensePermutation {
        let mut images = vec![0u32; self.degree()];
        for (pt, &img) in self.images.iter().enumerate() {
            images[img as usize] = pt as u32;
        }
        DensePermutation { images }
    }

    /// The power `self^e` by binary composition; negative exponents invert.
    pub fn power(&self, e: i64) -> DensePermutation {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut acc = DensePermutation::identity(self.degree());
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.compose(&sq);
            }
            exp >>= 1;
            if exp > 0 {
                sq = sq.compose(&sq);
            }
        }
        acc
    }

    /// Number of fixed points.
    pub fn fixed_point_count(&self) -> u64 {
        self.images.iter().enumerate().filter(|&(i, &img)| i as u32 == img).count() as u64
    }

    /// Iterator over the fixed points in increasing order.
    pub fn fixed_points(&self) -> impl Iterator<Item = u32> + '_ {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &img)| i as u32 == img)
            .map(|(i, _)| i as u32)
    }

    /// Number of moved points.
    pub fn support_size(&self) -> usize {
        self.images.iter().enumerate().filter(|&(i, &img)| i as u32 != img).count()
    }

    /// Parity from the cycle structure: odd iff `degree − #cycles` is odd.
    pub fn parity(&self) -> Parity {
        let n = self.degree();
        let mut visited = vec![false; n];
        let mut transpositions = 0usize; // Σ (cycle length − 1)
        for start in 0..n {
            if visited[start] {
                continue;
            }
            let mut pt = start;
            let mut len = 0usize;
            while !visited[pt] {
                visited[pt] = true;
                pt = self.images[pt] as usize;
                len += 1;
            }
            transpositions += len - 1;
        }
        if transpositions % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// The nontrivial cycles, each starting at its smallest point, ordered by
    /// that smallest point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.degree();
        let mut visited = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if visited[start] || self.images[start] as usize == start {
                visited[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut pt = start;
            while !visited[pt] {
                visited[pt] = true;
                cycle.push(pt as u32);
                pt = self.images[pt] as usize;
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Disjoint-cycle dump over 0-based points: one line per nontrivial
    /// cycle, e.g. `(0 5 3)`, for cross-checking in external systems.
    pub fn cycle_dump(&self) -> String {
        let mut out = String::new();
        for cycle in self.cycles() {
            out.push('(');
            for (i, pt) in cycle.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                out.push_str(&pt.to_string());
            }
            out.push_str(")\n");
        }
        out
    }
}
