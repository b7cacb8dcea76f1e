//! Orbits, transitivity, and block systems (minimal blocks through a seed
//! pair, and the primitivity test built on them).

use permutation_engine::DensePermutation;

use crate::AnalysisError;

fn check_gens(gens: &[DensePermutation]) -> Result<usize, AnalysisError> {
    let degree = match gens.first() {
        Some(g) => g.degree(),
        None => return Err(AnalysisError::DegreeZero),
    };
    for g in gens {
        if g.degree() != degree {
            return Err(AnalysisError::DegreeMismatch { expected: degree, got: g.degree() });
        }
    }
    Ok(degree)
}

/// Orbit partition of `{0..degree−1}` under the generated group, each orbit
/// ascending, orbits ordered by smallest element.
pub fn orbits(gens: &[DensePermutation], degree: usize) -> Vec<Vec<u32>> {
    let mut seen = vec![false; degree];
    let mut out = Vec::new();
    for start in 0..degree as u32 {
        if seen[start as usize] {
            continue;
        }
        let mut orbit = vec![start];
        seen[start as usize] = true;
        let mut head = 0;
        while head < orbit.len() {
            let q = orbit[head];
            head += 1;
            for g in gens {
                let img = g.image(q);
                if !seen[img as usize] {
                    seen[img as usize] = true;
                    orbit.push(img);
                }
            }
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

/// Whether the generated group moves every point to every other.
pub fn is_transitive(gens: &[DensePermutation], degree: usize) -> bool {
    degree == 1 || orbits(gens, degree).len() == 1
}

/// A partition of the points into blocks permuted setwise by the group.
#[derive(Debug, Clone)]
pub struct BlockSystem {
    block_of: Vec<u32>,
    block_count: usize,
    witness_pair: (u32, u32),
}

impl BlockSystem {
    /// Block id of each point.
    pub fn block_of(&self) -> &[u32] {
        &self.block_of
    }

    /// Number of blocks.
    pub fn block_count(&self) -> usize {
        self.block_count
    }

    /// The seed pair the system was grown from.
    pub fn witness_pair(&self) -> (u32, u32) {
        self.witness_pair
    }

    /// All points sharing a block with `pt`, ascending.
    pub fn block_containing(&self, pt: u32) -> Vec<u32> {
        let id = self.block_of[pt as usize];
        (0..self.block_of.len() as u32).filter(|&q| self.block_of[q as usize] == id).collect()
    }

    /// More than one block, and some block bigger than a point.
    pub fn is_nontrivial(&self) -> bool {
        self.block_count > 1 && self.block_count < self.block_of.len()
    }

    /// Check the defining property against a generator list: blocks have
    /// equal sizes and every generator maps blocks onto blocks.
    pub fn verify(&self, gens: &[DensePermutation]) -> bool {
        let n = self.block_of.len();
        if gens.iter().any(|g| g.degree() != n) {
            return false;
        }
        let mut sizes = vec![0u32; self.block_count];
        for &b in &self.block_of {
            if b as usize >= self.block_count {
                return false;
            }
            sizes[b as usize] += 1;
        }
        if sizes.iter().any(|&s| s != sizes[0] || s == 0) {
            return false;
        }
        for g in gens {
            let mut image_block = vec![u32::MAX; self.block_count];
            for pt in 0..n as u32 {
                let (from, to) = (self.block_of[pt as usize], self.block_of[g.image(pt) as usize]);
                if image_block[from as usize] == u32::MAX {
                    image_block[from as usize] = to;
                } else if image_block[from as usize] != to {
                    return false;
                }
            }
        }
        true
    }
}

struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind { parent: (0..n as u32).collect(), size: vec![1; n] }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let grand = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = grand;
            x = grand;
        }
        x
    }

    /// Union; true if the two were previously separate.
    fn union(&mut self, a: u32, b: u32) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (big, small) =
            if self.size[ra as usize] >= self.size[rb as usize] { (ra, rb) } else { (rb, ra) };
        self.parent[small as usize] = big;
        self.size[big as usize] += self.size[small as usize];
        true
    }
}

/// The finest block system in which the two seed points share a block
/// (union-find refinement; requires a transitive group).
pub fn minimal_block(
    gens: &[DensePermutation],
    pair: (u32, u32),
) -> Result<BlockSystem, AnalysisError> {
    let degree = check_gens(gens)?;
    let (a, b) = pair;
    for pt in [a, b] {
        if pt as usize >= degree {
            return Err(AnalysisError::PointOutOfRange { point: pt, degree });
        }
    }
    if a == b {
        return Err(AnalysisError::SeedPairDegenerate { point: a });
    }
    if !is_transitive(gens, degree) {
        return Err(AnalysisError::Intransitive);
    }
    Ok(minimal_block_transitive(gens, degree, (a, b)))
}

/// Core of [`minimal_block`], after all validation: grows the finest
/// invariant partition joining the seed pair.
fn minimal_block_transitive(
    gens: &[DensePermutation],
    degree: usize,
    (a, b): (u32, u32),
) -> BlockSystem {
    let mut uf = UnionFind::new(degree);
    let mut queue = vec![(a, b)];
    uf.union(a, b);
    while let Some((u, v)) = queue.pop() {
        for g in gens {
            let (ug, vg) = (g.image(u), g.image(v));
            if uf.union(ug, vg) {
                queue.push((ug, vg));
            }
        }
    }
    let mut block_of = vec![u32::MAX; degree];
    let mut next_id = 0u32;
    for pt in 0..degree as u32 {
        let root = uf.find(pt);
        if block_of[root as usize] == u32::MAX {
            block_of[root as usize] = next_id;
            next_id += 1;
        }
        block_of[pt as usize] = block_of[root as usize];
    }
    BlockSystem { block_of, block_count: next_id as usize, witness_pair: (a, b) }
}

/// Primitivity of the generated (transitive) group. An imprimitive verdict
/// carries a verified nontrivial block system as witness.
pub fn is_primitive(
    gens: &[DensePermutation],
    degree: usize,
) -> Result<(bool, Option<BlockSystem>), AnalysisError> {
    if !gens.is_empty() {
        check_gens(gens)?;
    }
    if gens.iter().any(|g| g.degree() != degree) {
        return Err(AnalysisError::DegreeMismatch { expected: degree, got: 0 });
    }
    if degree <= 2 {
        return if is_transitive(gens, degree) {
            Ok((true, None))
        } else {
            Err(AnalysisError::Intransitive)
        };
    }
    if !is_transitive(gens, degree) {
        return Err(AnalysisError::Intransitive);
    }
    for q in 1..degree as u32 {
        let system = minimal_block_transitive(gens, degree, (0, q));
        if system.is_nontrivial() {
            debug_assert!(system.verify(gens));
            return Ok((false, Some(system)));
        }
    }
    Ok((true, None))
}
