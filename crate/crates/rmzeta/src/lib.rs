//! # rmzeta: exact spectral moments and zeta functions of random matrices
//!
//! This crate computes moments `E Tr Xⁿᵏ` and averaged spectral zeta functions
//! `E Σⱼ |λⱼ|⁻ˢ` of the classical Gaussian, Laguerre (Wishart) and Jacobi
//! (MANOVA) random matrix ensembles at β ∈ {1, 2, 4}, in **exact rational
//! arithmetic**, through their representations as hypergeometric orthogonal
//! polynomials of the Askey scheme.
//!
//! ## What lives where
//!
//! - [`exact`] — arbitrary-precision rational and Gaussian-rational scalars,
//!   Pochhammer symbols, factorials, and exact Γ-values at half-integers
//!   (carried as `rational × √π^p` so transcendental factors cancel instead of
//!   being approximated).
//! - [`poly`] — dense univariate polynomials over the exact scalars:
//!   arithmetic, interpolation, Sturm sequences and certified real-root
//!   isolation.
//! - [`hyper`] — terminating generalized hypergeometric series `pFq` and all
//!   eleven Askey-scheme families used here (Hermite … Wilson), with their
//!   difference/Sturm–Liouville equations and orthogonality relations.
//! - [`unitary`] — β = 2 moments: closed forms, three-term recursions,
//!   reciprocity laws between positive and negative moments, generating
//!   functions, genus-expansion integrality, loop equations and covariances.
//! - [`zeta`] — completed zeta functions ξₙ(s): polynomial representations,
//!   functional equations, critical-line zeros, and the n → ∞ limits with
//!   their equilibrium measures (semicircle, Marchenko–Pastur, MANOVA law).
//! - [`mellin`] — Mellin transforms of harmonic-oscillator, Laguerre and
//!   Jacobi wavefunctions, of their products and Wronskians; one-point density
//!   ODEs; convolution identities; a numerical Mellin quadrature oracle.
//! - [`beta_moments`] — β = 1 and β = 4 moments: the moment combinations with
//!   single orthogonal-polynomial closed forms, five-term recursions, monic
//!   symplectic moment polynomials, orthogonal–symplectic dualities, and the
//!   density duality between sizes 2n+1 (β=1) and n (β=4).
//! - [`montecarlo`] — an independent stochastic oracle: tridiagonal /
//!   bidiagonal / dense samplers whose eigenvalue law is exactly the target
//!   ensemble for every β > 0, with reproducible counter-based RNG streams.
//! - [`verify`] — the registry of identity suites consumed by the CLI and by
//!   the acceptance tests: each suite reports per-identity residuals.
//! - [`quad`] — adaptive Gauss–Kronrod quadrature used by every numerical
//!   oracle.
//!
//! ## Design principles
//!
//! 1. **Exactness is load-bearing.** Every identity that is rational in its
//!    parameters is verified with `==` on arbitrary-precision rationals, not
//!    with a tolerance. Gamma functions never appear as floats inside exact
//!    values: formulas are split into a rational part and a declared prefactor
//!    tag (`(2k−1)!!`, `Γ(k+α+1)/Γ(α+1)`, …) that reduces to rationals at
//!    integer indices.
//! 2. **Two routes or no claim.** Closed forms are always checked against an
//!    independent route: a second in-source representation, brute-force
//!    enumeration, quadrature, or Monte Carlo.
//! 3. **`no_std` core.** The crate is `no_std` + `alloc`; floating-point
//!    transcendentals go through `libm` in every build, so numerical results
//!    are identical with and without the `std` feature. Parallel Monte Carlo
//!    sweeps are opt-in via the `parallel` feature and change no results
//!    (streams are keyed by sample index, not by thread).
//!
//! ## Quick start
//!
//! ```rust
//! use rmzeta::ensemble::{EnsembleSpec, Family};
//! use rmzeta::unitary::gue_moment;
//!
//! // E Tr X⁴ for the 3×3 Gaussian unitary ensemble: 2·3³ + 3 = 57.
//! let q2 = gue_moment(3, 2);
//! assert_eq!(q2.full_value().to_string(), "57");
//!
//! // Zeros of the completed zeta function of the 8×8 Laguerre ensemble lie
//! // on the critical line Re(s) = 1/2: all 14 roots of the degree-14
//! // polynomial in t (s = 1/2 + it) are real.
//! let spec = EnsembleSpec::laguerre(2, 8, 11).unwrap();
//! let zeros = rmzeta::zeta::critical_zeros(&spec).unwrap();
//! assert_eq!(zeros.zeros.len(), 14);
//! ```

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]
#![warn(missing_docs)]
#![allow(clippy::too_many_arguments)]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

#[cfg(feature = "std")]
extern crate std;

pub mod beta_moments;
pub mod ensemble;
pub mod error;
pub mod exact;
pub mod fm;
pub mod hyper;
pub mod mellin;
pub mod montecarlo;
pub mod poly;
pub mod quad;
pub mod unitary;
pub mod verify;
pub mod zeta;

pub use ensemble::{EnsembleSpec, Family, MomentValue};
pub use error::Error;
pub use exact::{ComplexRational, Rational};
pub use poly::Poly;
