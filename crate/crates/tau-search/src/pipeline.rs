//! The end-to-end search: constructive coordinate selection first, falling
//! back to exhaustive enumeration, then full oracle certification.
//!
//! The constructive route fixes the offset coordinates in the order
//! `τ_{d+1}` (primitivity probe), the prefix `τ₂..τ_{d−4}` under the
//! diagonal-sum constraint, `(τ_{d−1}, τ_d)` (closed forms around the probe
//! vector γ), and finally `(τ_{d−3}, τ_{d−2})` (the invertible 2×2 system).
//! It needs the five selected coordinates to sit above the prefix, i.e.
//! `d − 4 ≥ d'`; below that (and only up to the configured size) every
//! offset is enumerated with a cheap fixed-point screen before the heavy
//! oracles run.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use concentric_core::ConcentricPresentation;
use num_bigint::BigUint;
use permutation_engine::{x_tau, DensePermutation, TauVector};

use group_analysis::{factorial, is_primitive, schreier_sims};

use crate::certificate::{run_checks, SearchCertificate, SearchPath, TauVerdict};
use crate::forms::sum_condition;
use crate::gamma::{find_gamma, select_tau_d_minus_1_d};
use crate::select::{select_tau_d_plus_1, translation_generators, TailBudget};
use crate::{presentation_digest, SearchError, TOOL_VERSION};

/// Knobs for [`pipeline`].
#[derive(Debug, Clone, Copy)]
pub struct PipelineOptions {
    /// Largest `m` for which exhaustive offset enumeration is allowed.
    pub max_exhaustive_m: u32,
    /// Seed for sampled primitivity tails above the exhaustive range.
    pub seed: u64,
    /// Sample size for those tails.
    pub sample_tails: u32,
    /// Worker threads for independent offset candidates on the exhaustive
    /// path (each candidate's oracles are self-contained, so the verdicts
    /// and the chosen offset are identical for any worker count).
    pub workers: usize,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions { max_exhaustive_m: 9, seed: 0, sample_tails: 24, workers: 1 }
    }
}

/// Search for a certified offset and return the certificate.
///
/// Preconditions: the presentation must be tightly concentric with
/// `d' ≥ 2`. Constructive selection failures fall back to enumeration (the
/// certificate records why); resource errors propagate.
pub fn pipeline(
    p: &ConcentricPresentation,
    options: &PipelineOptions,
) -> Result<SearchCertificate, SearchError> {
    let started = Instant::now();
    if !p.is_tightly_concentric() {
        return Err(SearchError::NotTightlyConcentric { diagnosis: tightness_diagnosis(p) });
    }
    let (m, d, dp) = (p.m(), p.d(), p.d_prime());
    if dp < 2 {
        return Err(SearchError::DPrimeTooSmall { d_prime: dp });
    }

    let constructive_available = d >= dp + 4;
    let fallback_reason;
    if constructive_available {
        match constructive_search(p, options) {
            Ok((tau, path)) => return certify(p, tau, path, started),
            Err(e) if e.allows_fallback() => {
                fallback_reason = format!("construction failed: {e}");
            }
            Err(e) => return Err(e),
        }
    } else {
        fallback_reason = format!(
            "the five selected coordinates need d − 4 ≥ d', but (d, d') = ({d}, {dp})"
        );
    }

    if m > options.max_exhaustive_m {
        return Err(SearchError::ExhaustiveTooLarge { m, max: options.max_exhaustive_m });
    }
    let (tau, path) = exhaustive_search(p, fallback_reason, options.workers)?;
    certify(p, tau, path, started)
}

/// Name the first violated tight-concentricity condition.
fn tightness_diagnosis(p: &ConcentricPresentation) -> String {
    let (m, d, dp) = (p.m(), p.d(), p.d_prime());
    if 3 * d <= 2 * m {
        return format!("needs 3d > 2m, got 3·{d} ≤ 2·{m}");
    }
    if p.eps(d, 0) != 1 || (1..=(d - 2 * dp)).any(|c| p.eps(d, c) != 0) {
        return format!("leading relation row (row {d}) must be [1, 0, …, 0]");
    }
    for k in d..m {
        if p.eps(k, k - 2 * dp) != 0 {
            return format!("trailing entry of relation row {k} must be 0");
        }
    }
    "unknown violation".to_string()
}

/// The constructive coordinate selection. Returns the full offset and the
/// path record; certification happens in the caller.
fn constructive_search(
    p: &ConcentricPresentation,
    options: &PipelineOptions,
) -> Result<(TauVector, SearchPath), SearchError> {
    let (d, dp) = (p.d(), p.d_prime());

    let budget = TailBudget {
        exhaustive_max_m: options.max_exhaustive_m,
        sample_count: options.sample_tails,
        seed: options.seed,
    };
    let selection = select_tau_d_plus_1(p, &budget)?;

    // Prefix: all zero except τ_{d'}, which the diagonal-sum constraint
    // determines from the lower prefix coordinates (all zero here).
    let diagonal = sum_condition(p)?;
    debug_assert_eq!(diagonal.coeff(dp), 1);
    let mut tau = TauVector::from_free_bits(p, 0).with_coordinate(d + 1, selection.bit);
    let forced = diagonal.evaluate(tau);
    tau = tau.with_coordinate(dp, forced);
    debug_assert!(diagonal.is_satisfied_by(tau));
    let prefix: Vec<u8> = (2..=d - 4).map(|i| tau.get(i)).collect();

    let gamma = find_gamma(p, &prefix)?;
    let (tau_d_minus_1, tau_d) = select_tau_d_minus_1_d(p, tau, gamma)?;
    tau = tau.with_coordinate(d - 1, tau_d_minus_1).with_coordinate(d, tau_d);

    let (a, b) = crate::forms::solve_e_system(p, tau);
    tau = tau.with_coordinate(d - 3, a).with_coordinate(d - 2, b);

    let path = SearchPath::Constructive {
        tau_d_plus_1: selection.bit,
        tails_tested: selection.tails_tested,
        tails_exhaustive: selection.exhaustive,
        prefix: prefix.iter().map(|v| char::from(b'0' + v)).collect(),
        gamma: gamma.bitstring(p.m()),
    };
    Ok((tau, path))
}

/// The full verdict for one offset candidate: the cheap fixed-point screen,
/// and for screened-in candidates the primitivity and order oracles.
fn evaluate_candidate(
    p: &ConcentricPresentation,
    translations: &[DensePermutation],
    alt_order: &BigUint,
    tau: TauVector,
) -> Result<TauVerdict, SearchError> {
    let n = p.num_points() as usize;
    let x = x_tau(p, tau);
    let fixed_x = x.fixed_point_count();
    let fixed_x2 = x.compose(&x).fixed_point_count();
    let screen = fixed_x == 1 && fixed_x2 > 1 && fixed_x2 % 2 == 1;
    let mut verdict = TauVerdict {
        tau: tau.bitstring(),
        fixed_points_x: fixed_x,
        fixed_points_x2: fixed_x2,
        screened_in: screen,
        primitive: None,
        alternating: None,
    };
    if screen {
        let mut gens = translations.to_vec();
        gens.push(x);
        let (prim, _) = is_primitive(&gens, n)?;
        verdict.primitive = Some(prim);
        if prim {
            let chain = schreier_sims(&gens, n)?;
            let alt = chain.order() == alt_order && chain.is_alternating();
            verdict.alternating = Some(alt);
        }
    }
    Ok(verdict)
}

/// Enumerate all `2^d` offsets with a cheap fixed-point screen, then run the
/// heavy oracles on every screened-in candidate. The first fully certified
/// offset is returned; the path records a verdict for every candidate.
///
/// Candidates are independent, so they fan out over `workers` threads; the
/// verdict list keeps enumeration order and the choice is the first
/// certified candidate in that order, making the result identical for every
/// worker count.
fn exhaustive_search(
    p: &ConcentricPresentation,
    reason: String,
    workers: usize,
) -> Result<(TauVector, SearchPath), SearchError> {
    let translations = translation_generators(p);
    let alt_order = factorial(p.num_points()) / 2u32;
    let candidates: Vec<TauVector> = TauVector::enumerate_all(p).collect();

    let mut slots: Vec<Option<Result<TauVerdict, SearchError>>> =
        (0..candidates.len()).map(|_| None).collect();
    let workers = workers.clamp(1, candidates.len().max(1));
    if workers == 1 {
        for (i, &tau) in candidates.iter().enumerate() {
            slots[i] = Some(evaluate_candidate(p, &translations, &alt_order, tau));
        }
    } else {
        let next = AtomicUsize::new(0);
        let finished: Mutex<Vec<(usize, Result<TauVerdict, SearchError>)>> =
            Mutex::new(Vec::with_capacity(candidates.len()));
        std::thread::scope(|scope| {
            for _ in 0..workers {
                scope.spawn(|| {
                    let mut local = Vec::new();
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        if i >= candidates.len() {
                            break;
                        }
                        local.push((
                            i,
                            evaluate_candidate(p, &translations, &alt_order, candidates[i]),
                        ));
                    }
                    finished.lock().expect("no worker panics while holding").extend(local);
                });
            }
        });
        for (i, result) in finished.into_inner().expect("workers joined") {
            slots[i] = Some(result);
        }
    }

    let mut verdicts = Vec::with_capacity(candidates.len());
    let mut chosen: Option<TauVector> = None;
    let mut screened_in = 0u64;
    for (i, slot) in slots.into_iter().enumerate() {
        let verdict = slot.expect("every candidate was evaluated")?;
        screened_in += u64::from(verdict.screened_in);
        if verdict.alternating == Some(true) && chosen.is_none() {
            chosen = Some(candidates[i]);
        }
        verdicts.push(verdict);
    }

    match chosen {
        Some(tau) => {
            let path = SearchPath::Exhaustive {
                candidates: verdicts.len() as u64,
                screened_in,
                reason,
                verdicts,
            };
            Ok((tau, path))
        }
        None => Err(SearchError::NoCertifiedTau {
            summary: format!(
                "{} candidates, {screened_in} past the fixed-point screen, none certified",
                verdicts.len()
            ),
        }),
    }
}

/// Run the final oracles and assemble the certificate.
fn certify(
    p: &ConcentricPresentation,
    tau: TauVector,
    path: SearchPath,
    started: Instant,
) -> Result<SearchCertificate, SearchError> {
    let (checks, order_decimal) = run_checks(p, tau)?;
    if !checks.all_passed() {
        let stage = [
            ("tight concentricity", &checks.tightly_concentric),
            ("primitivity", &checks.primitive),
            ("affine exclusion", &checks.affine_excluded),
            ("order", &checks.order_is_alt),
        ]
        .iter()
        .find(|(_, c)| !c.passed)
        .map(|(name, _)| name.to_string())
        .unwrap_or_default();
        let detail = format!("offset {} failed certification", tau.bitstring());
        return Err(SearchError::CertificationFailed { stage, detail });
    }
    Ok(SearchCertificate {
        tool_version: TOOL_VERSION.to_string(),
        presentation_digest: presentation_digest(p),
        m: p.m(),
        d: p.d(),
        tau: tau.bitstring(),
        search_path: path,
        checks,
        order_decimal,
        elapsed_ms: started.elapsed().as_millis() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tight_m7_instance_goes_through_enumeration() {
        let p = ConcentricPresentation::minimal_tight7();
        let cert = pipeline(&p, &PipelineOptions::default()).unwrap();
        assert!(cert.checks.all_passed());
        assert_eq!(cert.order_decimal, (factorial(128) / 2u32).to_string());
        match &cert.search_path {
            SearchPath::Exhaustive { candidates, screened_in, verdicts, .. } => {
                assert_eq!(*candidates, 32);
                assert_eq!(*screened_in, 4);
                assert_eq!(verdicts.len(), 32);
                assert!(verdicts.iter().all(|v| v.fixed_points_x >= 1));
            }
            SearchPath::Constructive { .. } => panic!("d − 4 < d' cannot use the construction"),
        }
        // The first certified offset has free bits 1 (coordinate vector
        // 1100000), per the frozen instance facts.
        assert_eq!(cert.tau, "1100000");
    }

    #[test]
    fn worker_count_does_not_change_the_findings() {
        let p = ConcentricPresentation::minimal_tight7();
        let sequential = pipeline(&p, &PipelineOptions::default()).unwrap();
        let parallel =
            pipeline(&p, &PipelineOptions { workers: 4, ..PipelineOptions::default() }).unwrap();
        assert!(sequential.same_findings(&parallel));
        assert_eq!(sequential.tau, parallel.tau);
    }

    #[test]
    fn non_tight_input_is_rejected_with_a_diagnosis() {
        let flat = ConcentricPresentation::new(7, 5, vec![vec![0, 0], vec![0, 0, 0]]).unwrap();
        match pipeline(&flat, &PipelineOptions::default()) {
            Err(SearchError::NotTightlyConcentric { diagnosis }) => {
                assert!(diagnosis.contains("leading relation row"), "got: {diagnosis}");
            }
            other => panic!("expected a tightness rejection, got {other:?}"),
        }
    }

    #[test]
    fn shallow_diameter_is_rejected() {
        // m = 6, d = 5: tightly concentric, but with d' = 1.
        let p = ConcentricPresentation::new(6, 5, vec![vec![1, 0, 0, 0]]);
        if let Ok(p) = p {
            match pipeline(&p, &PipelineOptions::default()) {
                Err(SearchError::DPrimeTooSmall { d_prime: 1 }) => {}
                other => panic!("expected a co-diameter rejection, got {other:?}"),
            }
        }
    }
}
