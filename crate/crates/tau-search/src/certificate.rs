//! Self-contained certificates for a certified offset, and their
//! re-verification.
//!
//! A certificate records the presentation digest, the full offset vector,
//! the outcome and evidence of each oracle check, and how the offset was
//! found. Everything needed to re-check the claim from scratch is either in
//! the certificate or recomputable from the presentation plus the stored
//! offset; [`verify_certificate`] does exactly that.

use concentric_core::ConcentricPresentation;
use group_analysis::{affine_exclusion, factorial, is_primitive, schreier_sims, AffineVerdict};
use permutation_engine::{x_tau, TauVector};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::select::translation_generators;
use crate::SearchError;

/// Version stamp embedded in every certificate.
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// SHA-256 of the presentation's canonical JSON serialization, hex-encoded.
pub fn presentation_digest(p: &ConcentricPresentation) -> String {
    let mut hasher = Sha256::new();
    hasher.update(p.to_json().as_bytes());
    hasher.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

/// One oracle check: verdict plus human-readable evidence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub passed: bool,
    pub evidence: String,
}

/// The four checks backing a certificate. The order claim is only meaningful
/// with the other three recorded, so they are kept together.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateChecks {
    pub tightly_concentric: CheckOutcome,
    pub primitive: CheckOutcome,
    pub affine_excluded: CheckOutcome,
    pub order_is_alt: CheckOutcome,
}

impl CertificateChecks {
    pub fn all_passed(&self) -> bool {
        self.tightly_concentric.passed
            && self.primitive.passed
            && self.affine_excluded.passed
            && self.order_is_alt.passed
    }
}

/// Per-offset outcome recorded by the exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TauVerdict {
    pub tau: String,
    pub fixed_points_x: u64,
    pub fixed_points_x2: u64,
    /// Passed the cheap fixed-point screen (unique fixed point of the shift,
    /// odd > 1 fixed points of its square).
    pub screened_in: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub primitive: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alternating: Option<bool>,
}

/// How the certified offset was found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SearchPath {
    /// The coordinate-by-coordinate construction.
    Constructive {
        /// Selected top coordinate and how broadly it was probed.
        tau_d_plus_1: u8,
        tails_tested: u64,
        tails_exhaustive: bool,
        /// The fixed prefix `τ₂..τ_{d−4}` as a bit string (may be empty).
        prefix: String,
        /// The probe vector, as an `m`-character bit string.
        gamma: String,
    },
    /// Full enumeration of the `2^d` offsets with per-offset verdicts.
    Exhaustive {
        candidates: u64,
        screened_in: u64,
        /// Why enumeration ran instead of the construction.
        reason: String,
        verdicts: Vec<TauVerdict>,
    },
}

/// A certified offset together with everything needed to re-check it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchCertificate {
    pub tool_version: String,
    pub presentation_digest: String,
    pub m: u32,
    pub d: u32,
    /// The full offset vector as an `m`-character bit string (τ₁ first).
    pub tau: String,
    pub search_path: SearchPath,
    pub checks: CertificateChecks,
    /// Decimal expansion of the generated group's order.
    pub order_decimal: String,
    /// Wall-clock duration of the search; excluded from semantic equality.
    pub elapsed_ms: u64,
}

impl SearchCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<SearchCertificate, SearchError> {
        serde_json::from_str(text)
            .map_err(|e| SearchError::CertificateMalformed { detail: e.to_string() })
    }

    /// Equality of everything except wall-clock timing.
    pub fn same_findings(&self, other: &SearchCertificate) -> bool {
        let mut a = self.clone();
        let mut b = other.clone();
        a.elapsed_ms = 0;
        b.elapsed_ms = 0;
        a == b
    }
}

/// Run the four oracle checks for a concrete offset and report the group
/// order. Shared by the search paths and by re-verification.
pub(crate) fn run_checks(
    p: &ConcentricPresentation,
    tau: TauVector,
) -> Result<(CertificateChecks, String), SearchError> {
    let (m, d) = (p.m(), p.d());
    let n = p.num_points() as usize;

    let tight = p.is_tightly_concentric();
    let tightly_concentric = CheckOutcome {
        passed: tight,
        evidence: if tight {
            format!("3d > 2m for (m, d) = ({m}, {d}); leading row and trailing entries conform")
        } else {
            "tight-concentricity conditions violated".to_string()
        },
    };

    let mut gens = translation_generators(p);
    gens.push(x_tau(p, tau));

    let (prim, block) = is_primitive(&gens, n)?;
    let primitive = CheckOutcome {
        passed: prim,
        evidence: match block {
            None => format!("all {} seed-pair block probes returned the trivial partition", n - 1),
            Some(b) => format!(
                "invariant partition into {} blocks found from seed pair {:?}",
                b.block_count(),
                b.witness_pair()
            ),
        },
    };

    let affine = affine_exclusion(p, tau);
    let affine_excluded = CheckOutcome {
        passed: affine.is_excluded(),
        evidence: match affine {
            AffineVerdict::ExcludedWithWitness { witness_fixed_points } => format!(
                "squared shift fixes {witness_fixed_points} points (odd and > 1), \
                 ruling out every affine embedding"
            ),
            AffineVerdict::Inconclusive { witness_fixed_points } => format!(
                "squared shift fixes {witness_fixed_points} points; no affine exclusion witness"
            ),
        },
    };

    let chain = schreier_sims(&gens, n)?;
    let order = chain.order().clone();
    let is_alt = order == factorial(n as u64) / 2u32 && chain.is_alternating();
    let order_decimal = order.to_string();
    let order_is_alt = CheckOutcome {
        passed: is_alt,
        evidence: if is_alt {
            format!(
                "group order has {} digits and equals {n}!/2, with all generators even",
                order_decimal.len()
            )
        } else {
            format!("group order {order_decimal} differs from {n}!/2")
        },
    };

    Ok((
        CertificateChecks { tightly_concentric, primitive, affine_excluded, order_is_alt },
        order_decimal,
    ))
}

/// Outcome of re-checking a stored certificate against a presentation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    /// The presentation hashes to the digest in the certificate.
    pub digest_matches: bool,
    /// Fresh oracle outcomes for the stored offset.
    pub recomputed: CertificateChecks,
    /// The freshly computed order equals the stored decimal string.
    pub order_matches: bool,
    /// Every recomputed check agrees with the stored one, including
    /// evidence text.
    pub verdicts_match: bool,
}

impl VerificationReport {
    /// The certificate is genuine for this presentation: digest, verdicts,
    /// and order all reproduce, and every check passed.
    pub fn accepted(&self) -> bool {
        self.digest_matches
            && self.order_matches
            && self.verdicts_match
            && self.recomputed.all_passed()
    }
}

/// Re-run every oracle from the stored offset and compare with the stored
/// verdicts.
pub fn verify_certificate(
    p: &ConcentricPresentation,
    certificate: &SearchCertificate,
) -> Result<VerificationReport, SearchError> {
    let tau = TauVector::parse(p, &certificate.tau)?;
    let digest_matches = presentation_digest(p) == certificate.presentation_digest;
    let (recomputed, order_decimal) = run_checks(p, tau)?;
    let order_matches = order_decimal == certificate.order_decimal;
    let verdicts_match = recomputed == certificate.checks;
    Ok(VerificationReport { digest_matches, recomputed, order_matches, verdicts_match })
}
