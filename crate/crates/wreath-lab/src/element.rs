//! Product-action elements on `Δ^k` and small generators for them.

use crate::WreathError;
use rand::seq::SliceRandom;
use rand::Rng;

/// An element `(g₀, …, g_{k−1})·π` acting on tuples over a `|Δ|`-point slot
/// set: slot `i` of the input is moved to slot `π(i)` of the output after
/// applying `gᵢ`. All slot and point labels are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WreathElement {
    delta_size: usize,
    k: usize,
    /// `components[i][b]` is the image of point `b` under the slot-`i` map.
    components: Vec<Vec<u32>>,
    /// `top[i]` is the output slot receiving input slot `i`.
    top: Vec<u32>,
}

fn is_permutation(images: &[u32], n: usize) -> bool {
    if images.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &b in images {
        let b = b as usize;
        if b >= n || seen[b] {
            return false;
        }
        seen[b] = true;
    }
    true
}

impl WreathElement {
    pub fn new(
        delta_size: usize,
        components: Vec<Vec<u32>>,
        top: Vec<u32>,
    ) -> Result<Self, WreathError> {
        let k = components.len();
        if k == 0 || delta_size < 2 {
            return Err(WreathError::DegenerateShape { k, delta_size });
        }
        for (slot, component) in components.iter().enumerate() {
            if !is_permutation(component, delta_size) {
                return Err(WreathError::BadComponent { slot, delta_size });
            }
        }
        if !is_permutation(&top, k) {
            return Err(WreathError::BadTop { k });
        }
        Ok(WreathElement { delta_size, k, components, top })
    }

    pub fn identity(delta_size: usize, k: usize) -> Result<Self, WreathError> {
        let trivial: Vec<u32> = (0..delta_size as u32).collect();
        Self::new(delta_size, vec![trivial; k], (0..k as u32).collect())
    }

    pub fn delta_size(&self) -> usize {
        self.delta_size
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn components(&self) -> &[Vec<u32>] {
        &self.components
    }

    pub fn top(&self) -> &[u32] {
        &self.top
    }

    /// Number of points of the acted-on tuple space `Δ^k`.
    pub fn point_count(&self) -> usize {
        self.delta_size.pow(self.k as u32)
    }

    /// Image of a tuple: slot `π(i)` of the output is `gᵢ(βᵢ)`.
    pub fn apply(&self, point: &[u32]) -> Vec<u32> {
        debug_assert_eq!(point.len(), self.k);
        let mut image = vec![0u32; self.k];
        for i in 0..self.k {
            image[self.top[i] as usize] = self.components[i][point[i] as usize];
        }
        image
    }

    /// Image of a mixed-radix packed tuple index (slot 0 least significant).
    pub fn apply_packed(&self, index: usize) -> usize {
        let point = self.unpack(index);
        self.pack(&self.apply(&point))
    }

    pub fn pack(&self, point: &[u32]) -> usize {
        let mut index = 0usize;
        for &b in point.iter().rev() {
            index = index * self.delta_size + b as usize;
        }
        index
    }

    pub fn unpack(&self, mut index: usize) -> Vec<u32> {
        let mut point = vec![0u32; self.k];
        for digit in point.iter_mut() {
            *digit = (index % self.delta_size) as u32;
            index /= self.delta_size;
        }
        point
    }

    /// Composition acting left to right: `a.compose(b)` acts as `a` then `b`.
    pub fn compose(&self, then: &WreathElement) -> WreathElement {
        assert_eq!(self.delta_size, then.delta_size);
        assert_eq!(self.k, then.k);
        let mut components = Vec::with_capacity(self.k);
        for i in 0..self.k {
            let after = &then.components[self.top[i] as usize];
            let combined =
                self.components[i].iter().map(|&b| after[b as usize]).collect::<Vec<u32>>();
            components.push(combined);
        }
        let top = (0..self.k).map(|i| then.top[self.top[i] as usize]).collect();
        WreathElement { delta_size: self.delta_size, k: self.k, components, top }
    }

    pub fn inverse(&self) -> WreathElement {
        let mut inv_top = vec![0u32; self.k];
        for (i, &j) in self.top.iter().enumerate() {
            inv_top[j as usize] = i as u32;
        }
        let mut components = Vec::with_capacity(self.k);
        for j in 0..self.k {
            let source = &self.components[inv_top[j] as usize];
            let mut inverted = vec![0u32; self.delta_size];
            for (b, &image) in source.iter().enumerate() {
                inverted[image as usize] = b as u32;
            }
            components.push(inverted);
        }
        WreathElement { delta_size: self.delta_size, k: self.k, components, top: inv_top }
    }

    /// Conjugate `x⁻¹·self·x`.
    pub fn conjugate_by(&self, x: &WreathElement) -> WreathElement {
        x.inverse().compose(self).compose(x)
    }

    pub fn is_identity(&self) -> bool {
        self.top.iter().enumerate().all(|(i, &j)| i as u32 == j)
            && self
                .components
                .iter()
                .all(|c| c.iter().enumerate().all(|(b, &image)| b as u32 == image))
    }

    /// An involution squares to the identity and is not itself the identity.
    pub fn is_involution(&self) -> bool {
        !self.is_identity() && self.compose(self).is_identity()
    }

    /// Slots moved by the top permutation.
    pub fn top_support(&self) -> Vec<usize> {
        (0..self.k).filter(|&i| self.top[i] as usize != i).collect()
    }

    /// Fixed points of the slot-`i` component.
    pub fn component_fixed_count(&self, i: usize) -> usize {
        self.components[i].iter().enumerate().filter(|&(b, &image)| b as u32 == image).count()
    }
}

/// All permutations of `{0, …, n−1}` as image vectors, in lexicographic
/// order of the generating recursion. Intended for tiny `n` only.
pub fn all_permutations(n: usize) -> Vec<Vec<u32>> {
    fn extend(prefix: &mut Vec<u32>, used: &mut Vec<bool>, out: &mut Vec<Vec<u32>>) {
        let n = used.len();
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for b in 0..n {
            if !used[b] {
                used[b] = true;
                prefix.push(b as u32);
                extend(prefix, used, out);
                prefix.pop();
                used[b] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn random_matching_involution<R: Rng>(n: usize, rng: &mut R) -> Vec<u32> {
    let mut images: Vec<u32> = (0..n as u32).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for pair in order.chunks_exact(2) {
        if rng.gen::<bool>() {
            images.swap(pair[0], pair[1]);
        }
    }
    images
}

fn random_permutation<R: Rng>(n: usize, rng: &mut R) -> Vec<u32> {
    let mut images: Vec<u32> = (0..n as u32).collect();
    images.shuffle(rng);
    images
}

/// A uniformly seeded (not uniformly distributed) involution of the product
/// action: the top is a random partial matching of slots; matched slots get
/// mutually inverse components and fixed slots get involutive-or-trivial
/// components. Resamples until the result is not the identity.
pub fn random_involution<R: Rng>(delta_size: usize, k: usize, rng: &mut R) -> WreathElement {
    loop {
        let top = random_matching_involution(k, rng);
        let mut components: Vec<Option<Vec<u32>>> = vec![None; k];
        for i in 0..k {
            let j = top[i] as usize;
            if j == i {
                components[i] = Some(random_matching_involution(delta_size, rng));
            } else if components[i].is_none() {
                let forward = random_permutation(delta_size, rng);
                let mut backward = vec![0u32; delta_size];
                for (b, &image) in forward.iter().enumerate() {
                    backward[image as usize] = b as u32;
                }
                components[i] = Some(forward);
                components[j] = Some(backward);
            }
        }
        let components = components.into_iter().map(Option::unwrap).collect();
        let element = WreathElement::new(delta_size, components, top)
            .expect("generated slots and top are permutations by construction");
        if element.is_involution() {
            return element;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn construction_rejects_bad_slots_and_tops() {
        assert_eq!(
            WreathElement::new(3, vec![vec![0, 0, 2]], vec![0]),
            Err(WreathError::BadComponent { slot: 0, delta_size: 3 })
        );
        let trivial: Vec<u32> = vec![0, 1, 2];
        assert_eq!(
            WreathElement::new(3, vec![trivial.clone(), trivial], vec![1, 1]),
            Err(WreathError::BadTop { k: 2 })
        );
        assert_eq!(
            WreathElement::new(1, vec![vec![0]], vec![0]),
            Err(WreathError::DegenerateShape { k: 1, delta_size: 1 })
        );
    }

    #[test]
    fn acting_twice_equals_acting_with_the_square() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let g = WreathElement::new(
                4,
                (0..3).map(|_| random_permutation(4, &mut rng)).collect(),
                random_permutation(3, &mut rng),
            )
            .unwrap();
            let square = g.compose(&g);
            for index in 0..g.point_count() {
                assert_eq!(g.apply_packed(g.apply_packed(index)), square.apply_packed(index));
            }
        }
    }

    #[test]
    fn composition_matches_pointwise_application() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..50 {
            let a = WreathElement::new(
                3,
                (0..4).map(|_| random_permutation(3, &mut rng)).collect(),
                random_permutation(4, &mut rng),
            )
            .unwrap();
            let b = WreathElement::new(
                3,
                (0..4).map(|_| random_permutation(3, &mut rng)).collect(),
                random_permutation(4, &mut rng),
            )
            .unwrap();
            let ab = a.compose(&b);
            for index in 0..a.point_count() {
                assert_eq!(b.apply_packed(a.apply_packed(index)), ab.apply_packed(index));
            }
        }
    }

    #[test]
    fn inverse_undoes_the_action() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..50 {
            let g = WreathElement::new(
                4,
                (0..3).map(|_| random_permutation(4, &mut rng)).collect(),
                random_permutation(3, &mut rng),
            )
            .unwrap();
            assert!(g.compose(&g.inverse()).is_identity());
            assert!(g.inverse().compose(&g).is_identity());
        }
    }

    #[test]
    fn packed_indexing_round_trips() {
        let g = WreathElement::identity(5, 3).unwrap();
        for index in 0..g.point_count() {
            assert_eq!(g.pack(&g.unpack(index)), index);
        }
        assert_eq!(g.pack(&[2, 0, 1]), 2 + 25);
    }

    #[test]
    fn random_involutions_square_to_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for _ in 0..100 {
            let g = random_involution(4, 3, &mut rng);
            assert!(g.is_involution());
            assert!(g.top_support().len() % 2 == 0);
        }
    }

    #[test]
    fn conjugation_moves_the_distinguished_slot_by_the_top() {
        // A one-nontrivial-slot element keeps that shape under conjugation,
        // and the distinguished slot moves by the conjugator's top.
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let k = 4;
            let delta = 4;
            let x = WreathElement::new(
                delta,
                (0..k).map(|_| random_permutation(delta, &mut rng)).collect(),
                random_permutation(k, &mut rng),
            )
            .unwrap();
            let j = rng.gen_range(0..k);
            let mut components: Vec<Vec<u32>> =
                vec![(0..delta as u32).collect::<Vec<u32>>(); k];
            loop {
                components[j] = random_permutation(delta, &mut rng);
                if components[j].iter().enumerate().any(|(b, &v)| b as u32 != v) {
                    break;
                }
            }
            let y =
                WreathElement::new(delta, components, (0..k as u32).collect()).unwrap();

            let conj = y.conjugate_by(&x);
            assert!(conj.top_support().is_empty(), "top stays trivial");
            let nontrivial: Vec<usize> = (0..k)
                .filter(|&i| conj.component_fixed_count(i) != delta)
                .collect();
            assert_eq!(nontrivial, vec![x.top()[j] as usize]);
        }
    }

    #[test]
    fn all_permutations_has_factorial_size_and_distinct_entries() {
        let perms = all_permutations(4);
        assert_eq!(perms.len(), 24);
        let mut sorted = perms.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 24);
    }
}
