//! Cross-checks of the chain/order/primitivity machinery against independent
//! brute-force computations and frozen instance facts.

use std::collections::{BTreeMap, HashSet};

use concentric_core::{ConcentricPresentation, Coord};
use group_analysis::{
    affine_exclusion, factorial, is_primitive, is_transitive, minimal_block, schreier_sims,
    AffineVerdict,
};
use num_bigint::BigUint;
use permutation_engine::{right_mul_perm, x_tau, DensePermutation, TauVector};

fn cyc(degree: usize, pts: &[u32]) -> DensePermutation {
    let mut images: Vec<u32> = (0..degree as u32).collect();
    for w in 0..pts.len() {
        images[pts[w] as usize] = pts[(w + 1) % pts.len()];
    }
    DensePermutation::from_images(images).unwrap()
}

/// Group order by plain breadth-first closure over products (only for groups
/// comfortably below 10^4 elements).
fn brute_order(gens: &[DensePermutation]) -> usize {
    let degree = gens[0].degree();
    let id: Vec<u32> = (0..degree as u32).collect();
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    seen.insert(id.clone());
    let mut frontier = vec![id];
    while let Some(cur) = frontier.pop() {
        for g in gens {
            let nxt: Vec<u32> = cur.iter().map(|&q| g.image(q)).collect();
            if seen.insert(nxt.clone()) {
                frontier.push(nxt);
            }
        }
    }
    seen.len()
}

fn shift_generators(p: &ConcentricPresentation) -> Vec<DensePermutation> {
    (1..=p.m()).map(|i| right_mul_perm(p, Coord::basis(i))).collect()
}

fn with_x(p: &ConcentricPresentation, tau: TauVector) -> Vec<DensePermutation> {
    let mut gens = shift_generators(p);
    gens.push(x_tau(p, tau));
    gens
}

#[test]
fn bsgs_order_matches_brute_closure_on_small_groups() {
    // Dihedral of order 12 on a hexagon.
    let dihedral = vec![cyc(6, &[0, 1, 2, 3, 4, 5]), cyc(6, &[1, 5]).compose(&cyc(6, &[2, 4]))];
    // Full symmetric group on four points.
    let sym4 = vec![cyc(4, &[0, 1]), cyc(4, &[0, 1, 2, 3])];
    // Alternating group on five points.
    let alt5 = vec![cyc(5, &[0, 1, 2]), cyc(5, &[2, 3, 4])];
    // Cyclic 15 as a product of disjoint cycles of coprime lengths.
    let c15 = vec![cyc(8, &[0, 1, 2, 3, 4]).compose(&cyc(8, &[5, 6, 7]))];
    for gens in [dihedral, sym4, alt5, c15] {
        let brute = brute_order(&gens);
        let chain = schreier_sims(&gens, gens[0].degree()).unwrap();
        assert_eq!(chain.order(), &BigUint::from(brute));
    }
}

#[test]
fn translation_groups_are_regular_with_brute_checked_order() {
    for p in [
        ConcentricPresentation::elementary_abelian(5).unwrap(),
        ConcentricPresentation::minimal_tight7(),
    ] {
        let gens = shift_generators(&p);
        let n = p.num_points() as usize;
        assert_eq!(brute_order(&gens), n);
        let chain = schreier_sims(&gens, n).unwrap();
        assert_eq!(chain.order(), &BigUint::from(n as u64));
        assert!(is_transitive(&gens, n));
    }
}

#[test]
fn translation_blocks_are_cyclic_subgroup_cosets() {
    let p = ConcentricPresentation::minimal_tight7();
    let gens = shift_generators(&p);
    let n = p.num_points() as usize;

    let (prim, witness) = is_primitive(&gens, n).unwrap();
    assert!(!prim);
    let witness = witness.unwrap();
    assert!(witness.is_nontrivial());
    assert!(witness.verify(&gens));

    // Seed (identity, b): the block through the identity is the cyclic
    // subgroup generated by b, as a point set.
    for q in 1..n as u32 {
        let block = minimal_block(&gens, (0, q)).unwrap();
        let b = Coord::from_packed(q);
        let mut subgroup = vec![0u32];
        let mut acc = b;
        while acc.packed() != 0 {
            subgroup.push(acc.packed());
            acc = p.multiply(acc, b);
        }
        subgroup.sort_unstable();
        assert_eq!(block.block_containing(0), subgroup);
        assert!(matches!(subgroup.len(), 2 | 4));
    }
}

#[test]
fn every_tau_shift_extension_is_primitive_at_m7() {
    let p = ConcentricPresentation::minimal_tight7();
    let n = p.num_points() as usize;
    let translation_blocks = minimal_block(&shift_generators(&p), (0, 1)).unwrap();
    for tau in TauVector::enumerate_all(&p) {
        let gens = with_x(&p, tau);
        let (prim, block) = is_primitive(&gens, n).unwrap();
        assert!(prim, "tau={} should act primitively", tau.bitstring());
        assert!(block.is_none());
        // The coset system of the translations is not invariant once the
        // shift permutation joins the generating set.
        assert!(!translation_blocks.verify(&gens));
    }
}

#[test]
fn every_tau_at_m7_generates_the_alternating_group() {
    let p = ConcentricPresentation::minimal_tight7();
    let n = p.num_points() as usize;
    let alt_order = factorial(n as u64) / 2u32;
    for tau in TauVector::enumerate_all(&p) {
        let chain = schreier_sims(&with_x(&p, tau), n).unwrap();
        assert_eq!(chain.order(), &alt_order, "tau={}", tau.bitstring());
        assert!(chain.is_alternating());
        // Lagrange: the order is divisible by the translation subgroup size.
        assert_eq!(chain.order() % BigUint::from(n as u64), BigUint::from(0u32));
    }
}

#[test]
fn membership_in_the_generated_alternating_group() {
    let p = ConcentricPresentation::minimal_tight7();
    let n = p.num_points() as usize;
    let tau = TauVector::from_free_bits(&p, 9);
    let gens = with_x(&p, tau);
    let chain = schreier_sims(&gens, n).unwrap();
    for g in &gens {
        assert!(chain.contains(g).unwrap());
    }
    // The group is all of Alt(n): any even permutation belongs, odd ones do not.
    assert!(chain.contains(&cyc(n, &[0, 1, 2])).unwrap());
    assert!(chain.contains(&cyc(n, &[5, 99, 3]).compose(&cyc(n, &[40, 41]).compose(&cyc(n, &[77, 13])))).unwrap());
    assert!(!chain.contains(&cyc(n, &[0, 1])).unwrap());
}

#[test]
fn point_stabilizer_in_the_alternating_extension() {
    let p = ConcentricPresentation::minimal_tight7();
    let n = p.num_points() as usize;
    let tau = TauVector::from_free_bits(&p, 1);
    let chain = schreier_sims(&with_x(&p, tau), n).unwrap();
    let stab = chain.point_stabilizer(0).unwrap();
    assert!(stab.iter().all(|g| g.image(0) == 0));
    let stab_chain = schreier_sims(&stab, n).unwrap();
    // Stabilizer of a point in Alt(n) is Alt(n−1).
    assert_eq!(stab_chain.order(), &(factorial(n as u64 - 1) / 2u32));
}

#[test]
fn affine_exclusion_profile_at_m7() {
    let p = ConcentricPresentation::minimal_tight7();
    let mut excluded = Vec::new();
    let mut histogram: BTreeMap<u64, u32> = BTreeMap::new();
    for tau in TauVector::enumerate_all(&p) {
        match affine_exclusion(&p, tau) {
            AffineVerdict::ExcludedWithWitness { witness_fixed_points } => {
                assert!(witness_fixed_points % 2 == 1 && witness_fixed_points > 1);
                excluded.push(tau.free_bits());
                *histogram.entry(witness_fixed_points).or_insert(0) += 1;
            }
            AffineVerdict::Inconclusive { witness_fixed_points } => {
                assert!(witness_fixed_points % 2 == 0 || witness_fixed_points == 1);
                *histogram.entry(witness_fixed_points).or_insert(0) += 1;
            }
        }
    }
    // Hand-checked profile: four excluded tau, each with exactly three fixed
    // points of the squared shift.
    assert_eq!(excluded, vec![1, 11, 21, 31]);
    assert_eq!(histogram, BTreeMap::from([(1, 12), (2, 12), (3, 4), (4, 4)]));
}

#[test]
fn affine_exclusion_profile_at_m9() {
    let p = ConcentricPresentation::h7_family(9).unwrap();
    let mut excluded_count = 0u32;
    let mut histogram: BTreeMap<u64, u32> = BTreeMap::new();
    for tau in TauVector::enumerate_all(&p) {
        let verdict = affine_exclusion(&p, tau);
        if let AffineVerdict::ExcludedWithWitness { witness_fixed_points } = &verdict {
            assert_eq!(*witness_fixed_points, 3);
            excluded_count += 1;
        }
        *histogram.entry(verdict.witness_fixed_points()).or_insert(0) += 1;
    }
    assert_eq!(excluded_count, 16);
    assert_eq!(histogram, BTreeMap::from([(1, 48), (2, 48), (3, 16), (4, 16)]));
}

#[test]
fn m9_extension_is_certified_alternating() {
    let p = ConcentricPresentation::h7_family(9).unwrap();
    let n = p.num_points() as usize;
    assert_eq!(n, 512);
    let tau = TauVector::from_free_bits(&p, 0b0000101);
    let gens = with_x(&p, tau);
    let (prim, _) = is_primitive(&gens, n).unwrap();
    assert!(prim);
    let chain = schreier_sims(&gens, n).unwrap();
    assert_eq!(chain.order(), &(factorial(512) / 2u32));
    assert!(chain.is_alternating());
    assert_eq!(chain.base().len(), 510);
    let digits = chain.order().to_string().len();
    assert_eq!(digits, 1167);
}
