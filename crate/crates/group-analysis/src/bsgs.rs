//! Deterministic Schreier–Sims: builds a base and strong generating set with
//! verified stabilizer chains, so the reported group order is exact.
//!
//! Internals use 16-bit points (degree ≤ 2^16) and store, for every point of
//! every fundamental orbit, the full inverse transversal element as a dense
//! array. That makes sifting a sequence of O(degree) table lookups at the
//! price of memory proportional to (sum of orbit sizes) × degree; the arena
//! size is guarded by a byte budget.
//!
//! Construction stops early — with the order still exact — when the product
//! of fundamental orbit sizes reaches a proven upper bound on the group
//! order. The bound is `degree!` in general and `degree!/2` when every input
//! generator is even (the group then sits inside the alternating group). The
//! product of orbit sizes never exceeds the true order at any point during
//! construction: transversal elements at each level fix all earlier base
//! points, so distinct tuples of base images give distinct group elements.
//! Equality with the bound therefore certifies both the order and that every
//! fundamental orbit is the full orbit of the corresponding stabilizer, which
//! is exactly what membership sifting needs. Groups that never reach the
//! bound get the ordinary fully-verified construction.

use num_bigint::BigUint;
use permutation_engine::{DensePermutation, Parity};

use crate::AnalysisError;

/// Largest degree the 16-bit internal tables accept.
pub const MAX_BSGS_DEGREE: usize = 1 << 16;

/// Environment variable holding the transversal-arena byte budget.
pub const BSGS_MEMORY_ENV: &str = "CONCENTRIC_BSGS_MAX_BYTES";

/// Default arena budget: 4 GB.
pub const DEFAULT_BSGS_MAX_BYTES: u64 = 4_000_000_000;

const NO_SLOT: u32 = u32::MAX;

/// Degrees above this skip the factorial order-bound precomputation (the
/// factorial itself would dominate small-group runs).
const ORDER_CAP_MAX_DEGREE: usize = 8192;

/// Log-space headroom below the order bound at which the exact (big-integer)
/// product comparison starts running after each orbit extension.
const CAP_LOG_SLACK: f64 = 1e-6;

/// Construction knobs for [`schreier_sims_with`].
#[derive(Debug, Clone, Default)]
pub struct BsgsOptions {
    /// Force this point to head the base (useful for point stabilizers).
    pub first_base: Option<u32>,
    /// Arena budget in bytes; `None` reads the environment variable and
    /// falls back to [`DEFAULT_BSGS_MAX_BYTES`].
    pub max_arena_bytes: Option<u64>,
}

fn arena_budget(opts: &BsgsOptions) -> u64 {
    opts.max_arena_bytes
        .or_else(|| std::env::var(BSGS_MEMORY_ENV).ok().and_then(|v| v.parse().ok()))
        .unwrap_or(DEFAULT_BSGS_MAX_BYTES)
}

/// All strong generators, stored once with their inverses.
struct GenPool {
    degree: usize,
    perms: Vec<Box<[u16]>>,
    invs: Vec<Box<[u16]>>,
}

impl GenPool {
    fn add(&mut self, images: Box<[u16]>) -> u32 {
        let mut inv = vec![0u16; self.degree].into_boxed_slice();
        for (pt, &img) in images.iter().enumerate() {
            inv[img as usize] = pt as u16;
        }
        self.perms.push(images);
        self.invs.push(inv);
        (self.perms.len() - 1) as u32
    }
}

/// One stabilizer-chain level: base point, its generator list, the
/// fundamental orbit, and the inverse-transversal arena.
struct Level {
    base_pt: u16,
    gen_ids: Vec<u32>,
    orbit: Vec<u16>,
    slot_of: Vec<u32>,
    /// Flat arena: slot `s` owns `inv_rep[s*degree .. (s+1)*degree]`, the
    /// array of the element mapping the orbit point back to the base point.
    inv_rep: Vec<u16>,
    /// Per slot: how many entries of `gen_ids` have been paired with it.
    processed: Vec<u32>,
}

impl Level {
    fn new(base_pt: u16, degree: usize) -> Level {
        let mut slot_of = vec![NO_SLOT; degree];
        slot_of[base_pt as usize] = 0;
        Level {
            base_pt,
            gen_ids: Vec::new(),
            orbit: vec![base_pt],
            slot_of,
            inv_rep: (0..degree as u16).collect(),
            processed: vec![0],
        }
    }

    fn inv_rep_of(&self, slot: u32, degree: usize) -> &[u16] {
        let start = slot as usize * degree;
        &self.inv_rep[start..start + degree]
    }
}

struct Builder {
    degree: usize,
    pool: GenPool,
    levels: Vec<Level>,
    arena_bytes: u64,
    arena_cap: u64,
    /// Proven upper bound on the group order, when cheap enough to compute.
    order_cap: Option<BigUint>,
    /// Natural log of the bound (∞ when absent).
    cap_log: f64,
    /// Running Σ ln(orbit size) over the levels.
    orbit_log: f64,
    /// Set once the orbit-size product provably equals the group order.
    complete: bool,
}

/// Small deterministic generator for the bootstrap walk (fixed seed so runs
/// are reproducible).
struct XorShift64(u64);

impl XorShift64 {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }
}

enum SiftOutcome {
    Sifted,
    /// Nontrivial residue fixing every base point above `level`.
    Residue { level: usize, residue: Vec<u16> },
}

impl Builder {
    fn sift(&self, mut r: Vec<u16>, from: usize) -> SiftOutcome {
        for t in from..self.levels.len() {
            let level = &self.levels[t];
            let q = r[level.base_pt as usize];
            if q == level.base_pt {
                continue;
            }
            let slot = level.slot_of[q as usize];
            if slot == NO_SLOT {
                return SiftOutcome::Residue { level: t, residue: r };
            }
            let inv = level.inv_rep_of(slot, self.degree);
            for img in r.iter_mut() {
                *img = inv[*img as usize];
            }
        }
        if r.iter().enumerate().all(|(pt, &img)| pt as u16 == img) {
            SiftOutcome::Sifted
        } else {
            SiftOutcome::Residue { level: self.levels.len(), residue: r }
        }
    }

    fn add_orbit_point(
        &mut self,
        li: usize,
        parent_slot: usize,
        gen_id: u32,
        new_pt: u16,
    ) -> Result<(), AnalysisError> {
        let needed = self.arena_bytes + 2 * self.degree as u64;
        if needed > self.arena_cap {
            return Err(AnalysisError::ResourceCap {
                needed_bytes: needed,
                cap_bytes: self.arena_cap,
            });
        }
        self.arena_bytes = needed;
        let g_inv: &[u16] = &self.pool.invs[gen_id as usize];
        let level = &mut self.levels[li];
        let start = parent_slot * self.degree;
        let mut new_rep = Vec::with_capacity(self.degree);
        // u_new = u_parent · g, so u_new⁻¹ applies g⁻¹ first.
        for pt in 0..self.degree {
            new_rep.push(level.inv_rep[start + g_inv[pt] as usize]);
        }
        let old_len = level.orbit.len();
        level.slot_of[new_pt as usize] = old_len as u32;
        level.orbit.push(new_pt);
        level.inv_rep.extend_from_slice(&new_rep);
        level.processed.push(0);
        self.orbit_log += ((old_len + 1) as f64 / old_len as f64).ln();
        if !self.complete && self.orbit_log >= self.cap_log - CAP_LOG_SLACK {
            if let Some(cap) = &self.order_cap {
                let product: BigUint =
                    self.levels.iter().map(|l| BigUint::from(l.orbit.len() as u64)).product();
                if &product == cap {
                    self.complete = true;
                }
            }
        }
        Ok(())
    }

    /// Close the fundamental orbit of level `li` under its current generator
    /// list (plain breadth-first scan; no Schreier sifting).
    fn extend_orbit_closure(&mut self, li: usize) -> Result<(), AnalysisError> {
        let mut slot = 0usize;
        while slot < self.levels[li].orbit.len() {
            if self.complete {
                return Ok(());
            }
            for gi in 0..self.levels[li].gen_ids.len() {
                let gen_id = self.levels[li].gen_ids[gi];
                let q = self.levels[li].orbit[slot];
                let qg = self.pool.perms[gen_id as usize][q as usize];
                if self.levels[li].slot_of[qg as usize] == NO_SLOT {
                    self.add_orbit_point(li, slot, gen_id, qg)?;
                }
            }
            slot += 1;
        }
        Ok(())
    }

    /// Ensure level `j` exists for a residue, extending the base with the
    /// smallest point the residue moves.
    fn ensure_level(&mut self, j: usize, residue: &[u16]) {
        if j < self.levels.len() {
            return;
        }
        debug_assert_eq!(j, self.levels.len());
        let base_pt = residue
            .iter()
            .enumerate()
            .find(|(pt, &img)| *pt as u16 != img)
            .map(|(pt, _)| pt as u16)
            .expect("residue is not the identity");
        self.levels.push(Level::new(base_pt, self.degree));
    }

    /// Grow the chain by sifting a random walk over the generator pool.
    ///
    /// Each failed sift contributes a genuine group element fixing every base
    /// point above its blocking level, adjoined exactly there, so the
    /// orbit-size product stays a lower bound on the group order while
    /// climbing toward the order cap as fast as orbits can grow. The walk
    /// stops when the cap certifies completeness or after a stretch of rounds
    /// with no growth (then the deterministic pass below finishes the job).
    fn random_bootstrap(&mut self) -> Result<(), AnalysisError> {
        if self.order_cap.is_none() || self.pool.perms.is_empty() {
            return Ok(());
        }
        let mut rng = XorShift64(0x9E37_79B9_7F4A_7C15);
        let mut word: Vec<u16> = (0..self.degree as u16).collect();
        let mut stall = 0u64;
        let stall_budget = 256.max(4 * self.degree as u64);
        while !self.complete && stall < stall_budget {
            let gid = (rng.next() % self.pool.perms.len() as u64) as usize;
            let g: &[u16] = &self.pool.perms[gid];
            for img in word.iter_mut() {
                *img = g[*img as usize];
            }
            match self.sift(word.clone(), 0) {
                SiftOutcome::Sifted => stall += 1,
                SiftOutcome::Residue { level: j, residue } => {
                    self.ensure_level(j, &residue);
                    let rid = self.pool.add(residue.into_boxed_slice());
                    self.levels[j].gen_ids.push(rid);
                    self.extend_orbit_closure(j)?;
                    stall = 0;
                }
            }
        }
        Ok(())
    }

    /// Establish the chain invariant at level `li`: every Schreier generator
    /// of the level sifts to the identity through the levels below it.
    /// Returns immediately once the order bound certifies completeness.
    fn process_level(&mut self, li: usize) -> Result<(), AnalysisError> {
        self.extend_orbit_closure(li)?;
        let mut slot = 0usize;
        while slot < self.levels[li].orbit.len() {
            if self.complete {
                return Ok(());
            }
            // Forward transversal element of this slot, built on demand.
            let mut fwd: Option<Vec<u16>> = None;
            while (self.levels[li].processed[slot] as usize) < self.levels[li].gen_ids.len() {
                let gi = self.levels[li].processed[slot] as usize;
                self.levels[li].processed[slot] += 1;
                let gen_id = self.levels[li].gen_ids[gi];
                let q = self.levels[li].orbit[slot];
                let qg = self.pool.perms[gen_id as usize][q as usize];
                let target_slot = self.levels[li].slot_of[qg as usize];
                if target_slot == NO_SLOT {
                    self.add_orbit_point(li, slot, gen_id, qg)?;
                    continue;
                }
                // Schreier generator u_q · g · u_{qg}⁻¹.
                let fwd = fwd.get_or_insert_with(|| {
                    let mut f = vec![0u16; self.degree];
                    let inv = self.levels[li].inv_rep_of(slot as u32, self.degree);
                    for (pt, &img) in inv.iter().enumerate() {
                        f[img as usize] = pt as u16;
                    }
                    f
                });
                let g: &[u16] = &self.pool.perms[gen_id as usize];
                let inv_t = self.levels[li].inv_rep_of(target_slot, self.degree);
                let mut w = Vec::with_capacity(self.degree);
                let mut is_identity = true;
                for pt in 0..self.degree {
                    let img = inv_t[g[fwd[pt] as usize] as usize];
                    is_identity &= img as usize == pt;
                    w.push(img);
                }
                if is_identity {
                    continue;
                }
                if let SiftOutcome::Residue { level: j, residue } = self.sift(w, li + 1) {
                    self.ensure_level(j, &residue);
                    let rid = self.pool.add(residue.into_boxed_slice());
                    for t in (li + 1)..=j {
                        self.levels[t].gen_ids.push(rid);
                    }
                    // Grow all affected orbits first: the orbit-size product
                    // is what proves completeness, and closure is cheap.
                    for t in ((li + 1)..=j).rev() {
                        self.extend_orbit_closure(t)?;
                    }
                    for t in ((li + 1)..=j).rev() {
                        if self.complete {
                            return Ok(());
                        }
                        self.process_level(t)?;
                    }
                }
            }
            slot += 1;
        }
        Ok(())
    }
}

/// A verified base and strong generating set.
pub struct Bsgs {
    degree: usize,
    pool: GenPool,
    levels: Vec<Level>,
    order: BigUint,
}

impl std::fmt::Debug for Bsgs {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Bsgs")
            .field("degree", &self.degree)
            .field("base", &self.base())
            .field("order", &self.order)
            .field("strong_generator_count", &self.pool.perms.len())
            .finish()
    }
}

/// Build a BSGS with default options.
pub fn schreier_sims(
    gens: &[DensePermutation],
    degree: usize,
) -> Result<Bsgs, AnalysisError> {
    schreier_sims_with(gens, degree, &BsgsOptions::default())
}

/// Build a BSGS, optionally forcing the first base point and the arena cap.
pub fn schreier_sims_with(
    gens: &[DensePermutation],
    degree: usize,
    opts: &BsgsOptions,
) -> Result<Bsgs, AnalysisError> {
    if degree == 0 {
        return Err(AnalysisError::DegreeZero);
    }
    if degree > MAX_BSGS_DEGREE {
        return Err(AnalysisError::DegreeTooLarge { degree, max: MAX_BSGS_DEGREE });
    }
    for g in gens {
        if g.degree() != degree {
            return Err(AnalysisError::DegreeMismatch { expected: degree, got: g.degree() });
        }
    }
    if let Some(b) = opts.first_base {
        if b as usize >= degree {
            return Err(AnalysisError::PointOutOfRange { point: b, degree });
        }
    }
    let mut pool = GenPool { degree, perms: Vec::new(), invs: Vec::new() };
    let mut initial_ids = Vec::new();
    for g in gens {
        if g.is_identity() {
            continue;
        }
        let images: Box<[u16]> = g.images().iter().map(|&x| x as u16).collect();
        initial_ids.push(pool.add(images));
    }
    if initial_ids.is_empty() {
        return Ok(Bsgs { degree, pool, levels: Vec::new(), order: BigUint::from(1u32) });
    }
    let first_base = opts.first_base.map(|b| b as u16).unwrap_or_else(|| {
        (0..degree as u16)
            .find(|&pt| initial_ids.iter().any(|&id| pool.perms[id as usize][pt as usize] != pt))
            .expect("some generator is not the identity")
    });
    let order_cap = if degree <= ORDER_CAP_MAX_DEGREE {
        let full = factorial(degree as u64);
        let all_even = gens.iter().all(|g| g.parity() == Parity::Even);
        Some(if all_even && degree >= 2 { full / 2u32 } else { full })
    } else {
        None
    };
    let cap_log = order_cap.as_ref().map(ln_biguint).unwrap_or(f64::INFINITY);
    let mut builder = Builder {
        degree,
        pool,
        levels: vec![Level::new(first_base, degree)],
        arena_bytes: 2 * degree as u64,
        arena_cap: arena_budget(opts),
        order_cap,
        cap_log,
        orbit_log: 0.0,
        complete: false,
    };
    builder.levels[0].gen_ids = initial_ids;
    builder.extend_orbit_closure(0)?;
    builder.random_bootstrap()?;
    if !builder.complete {
        builder.process_level(0)?;
    }
    let order = builder
        .levels
        .iter()
        .map(|l| BigUint::from(l.orbit.len() as u64))
        .product();
    Ok(Bsgs { degree: builder.degree, pool: builder.pool, levels: builder.levels, order })
}

/// Natural logarithm of a positive big integer, from its top 64 bits.
fn ln_biguint(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 64 {
        let digits = x.to_u64_digits();
        return (digits.first().copied().unwrap_or(0).max(1) as f64).ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_u64_digits()[0];
    (top as f64).ln() + shift as f64 * std::f64::consts::LN_2
}

impl Bsgs {
    /// Number of points acted on.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The exact group order.
    pub fn order(&self) -> &BigUint {
        &self.order
    }

    /// The base, in chain order.
    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base_pt as u32).collect()
    }

    /// Sizes of the fundamental orbits along the chain.
    pub fn fundamental_orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Every strong generator (the input generators plus the sifted residues).
    pub fn strong_generators(&self) -> Vec<DensePermutation> {
        self.pool
            .perms
            .iter()
            .map(|p| {
                DensePermutation::from_images(p.iter().map(|&x| x as u32).collect())
                    .expect("pool entries are bijections")
            })
            .collect()
    }

    /// Exact membership test by sifting.
    pub fn contains(&self, g: &DensePermutation) -> Result<bool, AnalysisError> {
        if g.degree() != self.degree {
            return Err(AnalysisError::DegreeMismatch { expected: self.degree, got: g.degree() });
        }
        let mut r: Vec<u16> = g.images().iter().map(|&x| x as u16).collect();
        for level in &self.levels {
            let q = r[level.base_pt as usize];
            if q == level.base_pt {
                continue;
            }
            let slot = level.slot_of[q as usize];
            if slot == NO_SLOT {
                return Ok(false);
            }
            let inv = level.inv_rep_of(slot, self.degree);
            for img in r.iter_mut() {
                *img = inv[*img as usize];
            }
        }
        Ok(r.iter().enumerate().all(|(pt, &img)| pt as u16 == img))
    }

    /// Generators of the stabilizer of `pt` in the group.
    ///
    /// When `pt` heads the base, the generators attached to the deeper chain
    /// levels (all of which fix `pt`) generate the full stabilizer; any other
    /// point triggers a rebuild with `pt` forced to the front.
    pub fn point_stabilizer(&self, pt: u32) -> Result<Vec<DensePermutation>, AnalysisError> {
        if pt as usize >= self.degree {
            return Err(AnalysisError::PointOutOfRange { point: pt, degree: self.degree });
        }
        if self.levels.is_empty() {
            return Ok(Vec::new());
        }
        if self.levels[0].base_pt as u32 != pt {
            let rebuilt = schreier_sims_with(
                &self.strong_generators(),
                self.degree,
                &BsgsOptions { first_base: Some(pt), ..BsgsOptions::default() },
            )?;
            return rebuilt.point_stabilizer(pt);
        }
        let mut ids: Vec<u32> =
            self.levels.iter().skip(1).flat_map(|l| l.gen_ids.iter().copied()).collect();
        ids.sort_unstable();
        ids.dedup();
        Ok(ids
            .into_iter()
            .map(|id| {
                DensePermutation::from_images(
                    self.pool.perms[id as usize].iter().map(|&x| x as u32).collect(),
                )
                .expect("pool entries are bijections")
            })
            .collect())
    }

    /// True exactly when the group is the full alternating group: the order
    /// equals `degree!/2` and every strong generator is even.
    pub fn is_alternating(&self) -> bool {
        let doubled = self.order() * 2u32;
        doubled == factorial(self.degree as u64)
            && self.strong_generators().iter().all(|g| g.parity() == Parity::Even)
    }
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigUint {
    let mut acc = BigUint::from(1u32);
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// The group order of a generator list: convenience wrapper over a full
/// BSGS construction.
pub fn group_order(gens: &[DensePermutation], degree: usize) -> Result<BigUint, AnalysisError> {
    Ok(schreier_sims(gens, degree)?.order().clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(degree: usize, pts: &[u32]) -> DensePermutation {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for w in 0..pts.len() {
            images[pts[w] as usize] = pts[(w + 1) % pts.len()];
        }
        DensePermutation::from_images(images).unwrap()
    }

    #[test]
    fn trivial_group_has_order_one() {
        let b = schreier_sims(&[], 8).unwrap();
        assert_eq!(b.order(), &BigUint::from(1u32));
        assert!(b.contains(&DensePermutation::identity(8)).unwrap());
        assert!(!b.contains(&cyc(8, &[0, 1, 2])).unwrap());
        let b2 = schreier_sims(&[DensePermutation::identity(5)], 5).unwrap();
        assert_eq!(b2.order(), &BigUint::from(1u32));
    }

    #[test]
    fn single_three_cycle() {
        let g = cyc(5, &[0, 1, 2]);
        let b = schreier_sims(&[g.clone()], 5).unwrap();
        assert_eq!(b.order(), &BigUint::from(3u32));
        assert!(!b.is_alternating());
        assert!(b.contains(&g.power(2)).unwrap());
        assert!(!b.contains(&cyc(5, &[0, 1, 3])).unwrap());
    }

    #[test]
    fn alternating_six_is_recognized() {
        let gens: Vec<DensePermutation> = (0..4).map(|i| cyc(6, &[i, i + 1, i + 2])).collect();
        let b = schreier_sims(&gens, 6).unwrap();
        assert_eq!(b.order(), &BigUint::from(360u32));
        assert!(b.is_alternating());
        assert!(b.contains(&cyc(6, &[4, 5, 3])).unwrap());
        assert!(!b.contains(&cyc(6, &[0, 1])).unwrap());
        // The stabilizer of the first base point has index 6.
        let stab = b.point_stabilizer(b.base()[0]).unwrap();
        let sb = schreier_sims(&stab, 6).unwrap();
        assert_eq!(sb.order(), &BigUint::from(60u32));
    }

    #[test]
    fn symmetric_five_is_not_alternating() {
        let gens = vec![cyc(5, &[0, 1]), cyc(5, &[0, 1, 2, 3, 4])];
        let b = schreier_sims(&gens, 5).unwrap();
        assert_eq!(b.order(), &BigUint::from(120u32));
        assert!(!b.is_alternating());
    }

    #[test]
    fn forced_first_base_gives_direct_stabilizer() {
        let gens = vec![cyc(6, &[0, 1, 2, 3, 4, 5]), cyc(6, &[1, 5]).compose(&cyc(6, &[2, 4]))];
        // Dihedral group of order 12 on a hexagon.
        let b = schreier_sims_with(
            &gens,
            6,
            &BsgsOptions { first_base: Some(2), max_arena_bytes: None },
        )
        .unwrap();
        assert_eq!(b.order(), &BigUint::from(12u32));
        assert_eq!(b.base()[0], 2);
        let stab = b.point_stabilizer(2).unwrap();
        let sb = schreier_sims(&stab, 6).unwrap();
        assert_eq!(sb.order(), &BigUint::from(2u32));
    }

    #[test]
    fn arena_cap_is_enforced() {
        let gens: Vec<DensePermutation> = (0..4).map(|i| cyc(6, &[i, i + 1, i + 2])).collect();
        let err = schreier_sims_with(
            &gens,
            6,
            &BsgsOptions { first_base: None, max_arena_bytes: Some(20) },
        )
        .unwrap_err();
        assert!(matches!(err, AnalysisError::ResourceCap { .. }));
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), BigUint::from(1u32));
        assert_eq!(factorial(5), BigUint::from(120u32));
        assert_eq!(factorial(10), BigUint::from(3_628_800u64));
    }

    #[test]
    fn order_cap_exit_keeps_membership_and_stabilizers_exact() {
        // Two even generators of Alt(40): large enough that construction
        // finishes through the order-cap certificate, not full verification.
        let n = 40usize;
        let gens = vec![cyc(n, &[0, 1, 2]), cyc(n, &(1..n as u32).collect::<Vec<_>>())];
        let b = schreier_sims(&gens, n).unwrap();
        assert_eq!(b.order() * 2u32, factorial(n as u64));
        assert!(b.is_alternating());
        // Membership: even permutations in, odd permutations out.
        assert!(b.contains(&cyc(n, &[7, 31, 5])).unwrap());
        assert!(b.contains(&cyc(n, &[3, 9]).compose(&cyc(n, &[20, 11]))).unwrap());
        assert!(!b.contains(&cyc(n, &[3, 9])).unwrap());
        // The point stabilizer of the first base point is Alt(n−1).
        let stab = b.point_stabilizer(b.base()[0]).unwrap();
        let sb = schreier_sims(&stab, n).unwrap();
        assert_eq!(sb.order() * 2u32, factorial(n as u64 - 1));
    }

    #[test]
    fn odd_generators_cap_at_the_symmetric_group() {
        let n = 24usize;
        let gens = vec![cyc(n, &[0, 1]), cyc(n, &(0..n as u32).collect::<Vec<_>>())];
        let b = schreier_sims(&gens, n).unwrap();
        assert_eq!(b.order(), &factorial(n as u64));
        assert!(!b.is_alternating());
    }

    #[test]
    fn ln_biguint_tracks_known_logs() {
        assert!((ln_biguint(&BigUint::from(1u32)) - 0.0).abs() < 1e-12);
        assert!((ln_biguint(&BigUint::from(1024u32)) - 1024f64.ln()).abs() < 1e-9);
        let big = factorial(512) / 2u32;
        let stirling: f64 = (2..=512u64).map(|k| (k as f64).ln()).sum::<f64>() - 2f64.ln();
        assert!((ln_biguint(&big) - stirling).abs() < 1e-6 * stirling);
    }
}
