//! Bipartite density-matrix families, conditional Rényi/Tsallis entropies, and
//! steerability criteria, plus the analysis machinery (bisection thresholds,
//! two-parameter region maps, randomized theorem verification) needed to
//! reproduce the associated parameter-region claims at desk scale.
//!
//! The crate is organized as five layers:
//!
//! * [`numkit`] — self-contained dense complex linear algebra for the small
//!   matrices that appear here (Hermitian spectra, singular values, Kronecker
//!   products, partial trace/transpose).
//! * [`states`] — validated density matrices, the Bloch–Fano codec, and the
//!   named state families.
//! * [`entropy`] — von Neumann, Rényi-α, and Tsallis-α entropies and their
//!   conditional versions, all base-2.
//! * [`steering`] — CJWR/F₃, Horodecki CHSH, the Bowles unsteerability
//!   criterion, AF₃ purity membership, LHS thresholds, and a PPT oracle.
//! * [`analysis`] — threshold root-finding, region scans, gap functions, and
//!   randomized verification with deterministic seeding.
//!
//! All operations are pure functions of immutable inputs and safe to use from
//! multiple threads.

pub mod analysis;
pub mod entropy;
pub mod error;
pub mod numkit;
pub mod states;
pub mod steering;

pub use error::{Error, Result};

/// Fixed numerical tolerances used across the crate.
///
/// These are constants rather than knobs so that golden test values stay
/// stable.
pub mod tol {
    /// Max entrywise |M − M†| for a matrix to count as Hermitian.
    pub const HERMITICITY: f64 = 1e-10;
    /// Max |Tr ρ − 1| for a valid density matrix.
    pub const UNIT_TRACE: f64 = 1e-10;
    /// Eigenvalues at or above −PSD are treated as non-negative; values in
    /// [−PSD, 0) are clipped to zero before powering or logging.
    pub const PSD: f64 = 1e-9;
    /// Off-diagonal Frobenius norm at which a Jacobi sweep cycle stops.
    pub const JACOBI_OFF: f64 = 1e-12;
    /// Jacobi sweep cap.
    pub const JACOBI_MAX_SWEEPS: usize = 100;
    /// Bisection terminates once the bracket is narrower than this.
    pub const BISECTION: f64 = 1e-10;
    /// Bisection iteration cap.
    pub const BISECTION_MAX_ITER: usize = 200;
    /// Margin treated as "on the boundary" in randomized equivalence checks.
    pub const BOUNDARY_BAND: f64 = 1e-9;
    /// Strict-violation guard used by the F₃ and AF₃ verdicts.
    pub const VERDICT: f64 = 1e-12;
    /// Residual local Bloch vector allowed after canonicalization.
    pub const CANONICAL_B: f64 = 1e-10;
    /// A partial-transpose eigenvalue below −PPT certifies entanglement.
    pub const PPT: f64 = 1e-10;
    /// Slack on the Bowles certification threshold.
    pub const BOWLES: f64 = 1e-9;
}
