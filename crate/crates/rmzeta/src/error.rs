//! Crate-wide error type.
//!
//! Every fallible operation returns [`Error`]; infallible exact identities
//! panic on internal inconsistency instead (a wrong exact identity is a bug,
//! not an input error).

/// Errors reported by the exact and numerical engines.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[non_exhaustive]
pub enum Error {
    /// A Pochhammer factor in a series denominator vanished before the series
    /// terminated.
    #[error("denominator parameter produced a zero Pochhammer factor at term {term}")]
    DenominatorPole {
        /// Index of the series term whose denominator vanished.
        term: u32,
    },
    /// Exact Meixner–Pollaczek evaluation was requested at a phase other than
    /// π/2 (the only phase with Gaussian-rational series data).
    #[error("exact Meixner-Pollaczek evaluation requires phase = pi/2")]
    UnsupportedExactPhase,
    /// A difference/Sturm–Liouville residual was requested at a pole of its
    /// coefficient functions.
    #[error("evaluation point is a pole of the difference-equation coefficients")]
    PoleAtEvaluationPoint,
    /// A parameter lies outside the admissible range of the requested
    /// operation.
    #[error("parameter out of range: {0}")]
    ParameterRange(&'static str),
    /// The requested moment (or zeta value) does not exist: the defining
    /// integral diverges.
    #[error("moment diverges: {0}")]
    DivergentMoment(&'static str),
    /// A brute-force enumeration was requested beyond its feasible bound.
    #[error("enumeration bound exceeded: {0}")]
    TooLarge(&'static str),
    /// The support endpoints of a limiting spectral measure are invalid.
    #[error("invalid spectral cut: endpoints must satisfy 0 < x- < x+")]
    InvalidCut,
    /// Evaluation at a pole of a Gamma prefactor.
    #[error("gamma prefactor pole at the requested point")]
    PrefactorPole,
    /// A Gamma factor in a closed form is at a pole.
    #[error("gamma function pole")]
    GammaPole,
    /// The number of located real roots differs from the polynomial degree.
    #[error("root count {found} does not match polynomial degree {degree}")]
    RootCountMismatch {
        /// Number of certified real roots found.
        found: usize,
        /// Degree of the polynomial that was scanned.
        degree: usize,
    },
    /// Evaluation point lies outside the support of the density.
    #[error("evaluation point outside the spectral support")]
    OutOfSupport,
    /// The Wronskian Mellin relation degenerates at s = 1.
    #[error("relation is singular at s = 1")]
    SingularAtOne,
    /// Adaptive quadrature did not reach the requested tolerance.
    #[error("quadrature failed to converge (estimated error {err:e})")]
    NonConvergent {
        /// Final error estimate.
        err: f64,
    },
    /// A bootstrapped polynomial failed its monicity/degree postcondition.
    #[error("bootstrapped polynomial has wrong degree or is not monic")]
    DegreeMismatch,
    /// A bootstrap recursion is missing its initial values.
    #[error("missing initial value: {0}")]
    MissingInitialValue(&'static str),
    /// Invalid ensemble parameters.
    #[error("invalid ensemble parameters: {0}")]
    InvalidParameters(&'static str),
    /// The named verification suite is not registered.
    #[error("unknown verification suite")]
    UnknownSuite,
}

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
