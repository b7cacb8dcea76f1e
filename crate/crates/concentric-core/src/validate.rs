//! Presentation validation: structure, group law, diameter maximality, and
//! the index-shift isomorphism.
//!
//! The group-law check establishes that `multiply` really is a group
//! operation of order `2^m` on the coordinate vectors:
//!
//! - the closure of the generators under `multiply` (breadth-first over
//!   right-multiplication) reaches all `2^m` vectors;
//! - `multiply` is associative — verified by a full triple loop for `m ≤ 7`
//!   and by the generator-restricted associativity test (every
//!   `(a·s)·b = a·(s·b)` with `s` a generator) for larger `m`, which together
//!   with generation is equivalent to full associativity and to the
//!   right-translation maps of the generators inducing a regular
//!   representation of order `2^m`;
//! - every element has a two-sided inverse.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coord::Coord;
use crate::presentation::{structural_errors, ConcentricPresentation};

/// Outcome of [`validate_raw`] / [`ConcentricPresentation::validate`].
///
/// All flags true means the presentation passed every implemented check.
#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub structural_ok: bool,
    pub group_order_ok: bool,
    pub diameter_maximal_ok: bool,
    pub shift_isomorphism_ok: bool,
    pub messages: Vec<String>,
}

impl ValidationReport {
    pub fn all_ok(&self) -> bool {
        self.structural_ok
            && self.group_order_ok
            && self.diameter_maximal_ok
            && self.shift_isomorphism_ok
    }
}

/// Largest `m` for which the full multiplication table is materialized.
const TABLE_MAX_M: u32 = 12;
/// Largest `m` for which associativity/shift scans are exhaustive.
const EXHAUSTIVE_MAX_M: u32 = 13;
/// Pair-sample size per generator for the sampled scans.
const SAMPLE_PAIRS: usize = 1_000_000;
/// Fixed seed for the sampled scans (the validator is deterministic).
const SAMPLE_SEED: u64 = 0x5EED_CAFE;

/// Validate raw `(m, d, eps)` data. Structural failures short-circuit the
/// semantic checks (their flags come back `false` with an explanatory
/// message). Never panics on bad data — failures are reported, not thrown.
pub fn validate_raw(m: u32, d: u32, eps: &[Vec<u8>]) -> ValidationReport {
    let mut messages = Vec::new();
    let errs = structural_errors(m, d, eps);
    if !errs.is_empty() {
        for e in &errs {
            messages.push(format!("structure: {e}"));
        }
        messages.push("semantic checks skipped: structure invalid".to_string());
        return ValidationReport {
            structural_ok: false,
            group_order_ok: false,
            diameter_maximal_ok: false,
            shift_isomorphism_ok: false,
            messages,
        };
    }
    let p = ConcentricPresentation::new(m, d, eps.to_vec())
        .expect("structural_errors returned empty, construction must succeed");
    messages.push("structure: ok".to_string());
    let report = p.validate();
    ValidationReport {
        structural_ok: true,
        group_order_ok: report.group_order_ok,
        diameter_maximal_ok: report.diameter_maximal_ok,
        shift_isomorphism_ok: report.shift_isomorphism_ok,
        messages: messages.into_iter().chain(report.messages).collect(),
    }
}

impl ConcentricPresentation {
    /// Run the semantic checks on an already-constructed (hence structurally
    /// valid) presentation.
    pub fn validate(&self) -> ValidationReport {
        let mut messages = Vec::new();
        let group_order_ok = self.check_group_law(&mut messages);
        let diameter_maximal_ok = self.check_diameter_maximal(&mut messages);
        let shift_isomorphism_ok = self.check_shift_isomorphism(&mut messages);
        ValidationReport {
            structural_ok: true,
            group_order_ok,
            diameter_maximal_ok,
            shift_isomorphism_ok,
            messages,
        }
    }

    fn check_group_law(&self, messages: &mut Vec<String>) -> bool {
        let m = self.m();
        let n: usize = 1usize << m;

        // Closure of {e_1..e_m} under right multiplication reaches everything.
        let mut visited = vec![false; n];
        let mut stack = vec![Coord::ZERO];
        visited[0] = true;
        let mut count = 1usize;
        while let Some(a) = stack.pop() {
            for i in 1..=m {
                let b = self.multiply(a, Coord::basis(i));
                let idx = b.packed() as usize;
                if !visited[idx] {
                    visited[idx] = true;
                    count += 1;
                    stack.push(b);
                }
            }
        }
        let closure_ok = count == n;
        if closure_ok {
            messages.push(format!("group law: generator closure has {count} = 2^{m} elements"));
        } else {
            messages.push(format!(
                "group law: generator closure has {count} elements, expected 2^{m} = {n}"
            ));
        }

        // Associativity.
        let assoc_ok = if m <= TABLE_MAX_M {
            let table = self.multiplication_table();
            let at = |a: usize, b: usize| table[(a << m) | b] as usize;
            if m <= 7 {
                let mut ok = true;
                'outer: for a in 0..n {
                    for b in 0..n {
                        let ab = at(a, b);
                        for c in 0..n {
                            if at(ab, c) != at(a, at(b, c)) {
                                ok = false;
                                break 'outer;
                            }
                        }
                    }
                }
                messages.push(format!(
                    "group law: associativity by full triple scan over {n}^3 triples: {}",
                    if ok { "ok" } else { "FAILED" }
                ));
                ok
            } else {
                let mut ok = true;
                'light: for s in 1..=m {
                    let sj = 1usize << (s - 1);
                    for a in 0..n {
                        let a_s = at(a, sj);
                        for b in 0..n {
                            if at(a_s, b) != at(a, at(sj, b)) {
                                ok = false;
                                break 'light;
                            }
                        }
                    }
                }
                messages.push(format!(
                    "group law: associativity by exhaustive generator-restricted test \
                     ({m} generators x {n}^2 pairs): {}",
                    if ok { "ok" } else { "FAILED" }
                ));
                ok
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
            let mask = (n - 1) as u32;
            let mut ok = true;
            'sampled: for s in 1..=m {
                let es = Coord::basis(s);
                for _ in 0..SAMPLE_PAIRS {
                    let a = Coord::from_packed(rng.gen::<u32>() & mask);
                    let b = Coord::from_packed(rng.gen::<u32>() & mask);
                    if self.multiply(self.multiply(a, es), b)
                        != self.multiply(a, self.multiply(es, b))
                    {
                        ok = false;
                        break 'sampled;
                    }
                }
            }
            messages.push(format!(
                "group law: associativity by sampled generator-restricted test \
                 ({SAMPLE_PAIRS} pairs per generator, fixed seed): {}",
                if ok { "ok" } else { "FAILED" }
            ));
            ok
        };

        // Two-sided inverses for every element.
        let mut inverses_ok = true;
        for packed in 0..n {
            let a = Coord::from_packed(packed as u32);
            let inv = self.inverse(a);
            if self.multiply(a, inv) != Coord::ZERO || self.multiply(inv, a) != Coord::ZERO {
                inverses_ok = false;
                messages.push(format!(
                    "group law: element {} lacks a two-sided inverse",
                    a.bitstring(m)
                ));
                break;
            }
        }
        if inverses_ok {
            messages.push("group law: every element has a two-sided inverse".to_string());
        }

        closure_ok && assoc_ok && inverses_ok
    }

    /// Full multiplication table, indexed `table[(a << m) | b] = a·b` (packed).
    /// Only sensible for small `m`; entries fit `u16` up to `m = 16`.
    fn multiplication_table(&self) -> Vec<u16> {
        let m = self.m();
        assert!(m <= 16);
        let n = 1usize << m;
        let mut table = vec![0u16; n * n];
        for a in 0..n {
            let ca = Coord::from_packed(a as u32);
            for b in 0..n {
                let cb = Coord::from_packed(b as u32);
                table[(a << m) | b] = self.multiply(ca, cb).packed() as u16;
            }
        }
        table
    }

    fn check_diameter_maximal(&self, messages: &mut Vec<String>) -> bool {
        let (m, d, dp) = (self.m(), self.d(), self.d_prime());
        if d == m {
            messages.push("diameter: d = m, maximality vacuous".to_string());
            return true;
        }
        let witness = (1..=dp).find(|&i| self.basis_commutator(i, i + d) != Coord::ZERO);
        match witness {
            Some(i) => {
                messages.push(format!(
                    "diameter: [a_{i}, a_{}] != 1 witnesses maximality of d = {d}",
                    i + d
                ));
                true
            }
            None => {
                messages.push(format!(
                    "diameter: all generator pairs at distance {d} commute; d is not maximal"
                ));
                false
            }
        }
    }

    fn check_shift_isomorphism(&self, messages: &mut Vec<String>) -> bool {
        let m = self.m();
        if m == 1 {
            messages.push("shift: m = 1, nothing to check".to_string());
            return true;
        }
        // The shift a_i -> a_{i+1} on the subgroup generated by a_1..a_{m-1}
        // (coordinate vectors with α_m = 0) must preserve products.
        let half = 1u32 << (m - 1);
        let shift = |c: Coord| Coord::from_packed(c.packed() << 1);
        let check = |a: Coord, b: Coord| {
            shift(self.multiply(a, b)) == self.multiply(shift(a), shift(b))
        };
        if m <= EXHAUSTIVE_MAX_M {
            for a in 0..half {
                let ca = Coord::from_packed(a);
                for b in 0..half {
                    if !check(ca, Coord::from_packed(b)) {
                        messages.push(format!(
                            "shift: product of {} and {} is not shift-equivariant",
                            ca.bitstring(m),
                            Coord::from_packed(b).bitstring(m)
                        ));
                        return false;
                    }
                }
            }
            messages.push(format!(
                "shift: index-shift isomorphism holds on all {half}x{half} products"
            ));
            true
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
            for _ in 0..SAMPLE_PAIRS {
                let a = Coord::from_packed(rng.gen::<u32>() & (half - 1));
                let b = Coord::from_packed(rng.gen::<u32>() & (half - 1));
                if !check(a, b) {
                    messages.push(format!(
                        "shift: product of {} and {} is not shift-equivariant",
                        a.bitstring(m),
                        b.bitstring(m)
                    ));
                    return false;
                }
            }
            messages.push(format!(
                "shift: index-shift isomorphism holds on {SAMPLE_PAIRS} sampled products (fixed seed)"
            ));
            true
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_family_passes_all_checks() {
        let p = ConcentricPresentation::h7_family(7).unwrap();
        let report = p.validate();
        assert!(report.all_ok(), "{:#?}", report);
    }

    #[test]
    fn elementary_abelian_passes_all_checks() {
        let p = ConcentricPresentation::elementary_abelian(6).unwrap();
        let report = p.validate();
        assert!(report.all_ok(), "{:#?}", report);
    }

    #[test]
    fn ill_shaped_triangle_fails_structurally() {
        // d = m admits no ε rows, so a row with ε_{d,0}=1 is ill-shaped.
        let report = validate_raw(7, 7, &[vec![1]]);
        assert!(!report.structural_ok);
        assert!(!report.all_ok());
    }

    #[test]
    fn zero_row_d_fails_diameter_maximality() {
        let p = ConcentricPresentation::new(7, 5, vec![vec![0, 0], vec![0, 0, 1]]).unwrap();
        let report = p.validate();
        assert!(report.structural_ok);
        assert!(report.group_order_ok);
        assert!(!report.diameter_maximal_ok);
    }
}
