//! Lemma-level checks on the product-action lab: iterated conjugation of a
//! one-slot element and closed-form fixed point counts at the three-slot
//! scale.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wreath_lab::{
    brute_fixed_point_count, random_involution, wreath_fixed_point_count, WreathElement,
};

fn random_perm(n: usize, rng: &mut ChaCha8Rng) -> Vec<u32> {
    use rand::seq::SliceRandom;
    let mut v: Vec<u32> = (0..n as u32).collect();
    v.shuffle(rng);
    v
}

#[test]
fn iterated_conjugation_walks_the_slot_along_the_top_orbit() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let (delta, k) = (4usize, 5usize);
    for _ in 0..40 {
        let x = WreathElement::new(
            delta,
            (0..k).map(|_| random_perm(delta, &mut rng)).collect(),
            random_perm(k, &mut rng),
        )
        .unwrap();
        let j0 = rng.gen_range(0..k);
        let mut components: Vec<Vec<u32>> = vec![(0..delta as u32).collect(); k];
        components[j0] = vec![1, 0, 3, 2];
        let y = WreathElement::new(delta, components, (0..k as u32).collect()).unwrap();

        let mut conjugate = y.clone();
        let mut expected_slot = j0;
        for _t in 1..=8 {
            conjugate = conjugate.conjugate_by(&x);
            expected_slot = x.top()[expected_slot] as usize;
            assert!(conjugate.top_support().is_empty());
            let nontrivial: Vec<usize> = (0..k)
                .filter(|&i| conjugate.component_fixed_count(i) != delta)
                .collect();
            assert_eq!(nontrivial, vec![expected_slot]);
        }
    }
}

#[test]
fn closed_form_count_matches_enumeration_across_three_slots() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    let mut support_sizes_seen = [false; 3];
    for _ in 0..200 {
        let g = random_involution(4, 3, &mut rng);
        let support = g.top_support().len();
        assert!(support % 2 == 0);
        support_sizes_seen[support / 2] = true;
        assert_eq!(wreath_fixed_point_count(&g).unwrap(), brute_fixed_point_count(&g).unwrap());
    }
    assert!(support_sizes_seen[0] && support_sizes_seen[1], "both top shapes must be exercised");
}
