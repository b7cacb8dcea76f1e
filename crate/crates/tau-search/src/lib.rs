//! Selection of the shift offset τ and end-to-end certification.
//!
//! The extension `⟨R(H), x_τ⟩` of the translation group by the shift
//! permutation depends on the free offset coordinates `τ₂..τ_{d+1}`. This
//! crate provides:
//!
//! * the F₂-linear fixed-point conditions on τ and their algebra
//!   ([`LinearFormF2`], [`build_e1`], [`build_e2`], [`build_e3`],
//!   [`sum_condition`], [`solve_e_system`]);
//! * the constructive coordinate selections ([`select_tau_d_plus_1`],
//!   [`find_gamma`], [`select_tau_d_minus_1_d`]);
//! * enumeration utilities for the product-action exclusion
//!   ([`count_common_solutions`], [`f_t_dependency_check`],
//!   [`wreath_feasible_decompositions`]);
//! * the end-to-end [`pipeline`] emitting a self-contained
//!   [`SearchCertificate`], and [`verify_certificate`] to re-check one.

mod certificate;
mod counting;
mod forms;
mod gamma;
mod pipeline;
mod select;

pub use certificate::{
    presentation_digest, verify_certificate, CertificateChecks, CheckOutcome, SearchCertificate,
    SearchPath, TauVerdict, VerificationReport, TOOL_VERSION,
};
pub use counting::{
    count_common_solutions, f_t_dependency_check, wreath_feasible_decompositions,
    ENUMERATION_MAX_M,
};
pub use forms::{build_e1, build_e2, build_e3, solve_e_system, sum_condition, LinearFormF2};
pub use gamma::{find_gamma, gamma_qualifies, select_tau_d_minus_1_d, u_index};
pub use pipeline::{pipeline, PipelineOptions};
pub use select::{select_tau_d_plus_1, TailBudget, TailSelection};

use thiserror::Error;

/// Errors from selection, counting, and certification.
#[derive(Debug, Error)]
pub enum SearchError {
    /// The presentation misses a tight-concentricity condition; the message
    /// names which one.
    #[error("presentation is not tightly concentric: {diagnosis}")]
    NotTightlyConcentric { diagnosis: String },

    /// The co-diameter `d' = m − d` is below the minimum the selection
    /// machinery supports.
    #[error("co-diameter d' = {d_prime} is too small (need d' ≥ 2)")]
    DPrimeTooSmall { d_prime: u32 },

    /// The diameter is too small for the five selected coordinates
    /// `τ_{d−3}..τ_{d+1}` to be distinct free coordinates.
    #[error("diameter d = {d} is too small for coordinate selection (need d ≥ 5)")]
    DiameterTooSmall { d: u32 },

    /// The diagonal-sum constraint requires the leading relation row to be
    /// `[1, 0, …, 0]`.
    #[error("the diagonal-sum constraint requires the leading relation row [1, 0, …, 0]")]
    LeadingRowViolation,

    /// Exhaustive enumeration of 2^d offsets was requested above the
    /// configured size limit.
    #[error("exhaustive offset search needs m ≤ {max}, got m = {m}")]
    ExhaustiveTooLarge { m: u32, max: u32 },

    /// Point enumeration (fiber counts, dependency toggling) above the size
    /// limit.
    #[error("point enumeration needs m ≤ {max}, got m = {m}")]
    EnumerationTooLarge { m: u32, max: u32 },

    /// A conjugate index `t` outside the supported window.
    #[error("conjugate index t = {t} outside {lo}..={hi}")]
    TOutOfRange { t: i32, lo: i32, hi: i32 },

    /// An invalid target-sequence length for fiber counting.
    #[error("target sequence of length {len} exceeds the {max} admissible conjugate indices")]
    TargetLengthInvalid { len: usize, max: usize },

    /// Neither value of τ_{d+1} passed every budgeted primitivity test. For
    /// a valid presentation this contradicts the selection theory, so it is
    /// reported loudly rather than patched over.
    #[error(
        "no value of the top offset coordinate passed all {tails_tested} primitivity probes; \
         this contradicts the selection theory and likely indicates an implementation defect"
    )]
    TailSelectionFailed { tails_tested: u64 },

    /// No vector γ with the required evaluation pattern exists in the search
    /// space. Contradicts the selection theory on valid input.
    #[error(
        "no γ with γ₁ = γ_m = 0 makes the top conjugate evaluation constantly 1 \
         (prefix {prefix}); this contradicts the selection theory"
    )]
    GammaNotFound { prefix: String },

    /// The closed-form pair selection failed its own postcondition.
    #[error("selected (τ_{{d−1}}, τ_d) failed the increment postcondition: {detail}")]
    PostconditionViolated { detail: String },

    /// A fully-selected τ failed one of the final certification oracles.
    #[error("certification failed at the {stage} stage: {detail}")]
    CertificationFailed { stage: String, detail: String },

    /// Exhaustive enumeration completed without a certified offset.
    #[error("no offset could be certified: {summary}")]
    NoCertifiedTau { summary: String },

    /// A stored certificate could not be parsed or refers to other input.
    #[error("certificate is malformed: {detail}")]
    CertificateMalformed { detail: String },

    #[error(transparent)]
    Analysis(#[from] group_analysis::AnalysisError),

    #[error(transparent)]
    Engine(#[from] permutation_engine::EngineError),
}

impl SearchError {
    /// Whether the pipeline may fall back to exhaustive enumeration after
    /// this error. Resource and degree errors propagate instead: retrying
    /// them on 2^d offsets cannot succeed.
    pub(crate) fn allows_fallback(&self) -> bool {
        matches!(
            self,
            SearchError::TailSelectionFailed { .. }
                | SearchError::GammaNotFound { .. }
                | SearchError::PostconditionViolated { .. }
                | SearchError::CertificationFailed { .. }
                | SearchError::LeadingRowViolation
        )
    }
}
