//! Averaged spectral zeta functions of the unitary-symmetry ensembles.
//!
//! For an `n×n` random matrix `X` the averaged spectral zeta function is
//! `ζ_X(s) = E Σⱼ |λⱼ|^{−s}`. Dividing out an explicit Γ-prefactor turns it
//! into a **completed** function `ξₙ(s)` that is a polynomial in the shifted
//! variable `t` (with `s = 1/2 + i t`), satisfies an exact functional
//! equation under `s ↦ 1 − s`, and has all of its zeros on the critical line
//! `Re(s) = 1/2`. This module provides:
//!
//! * [`xi`] — exact evaluation of `ξₙ` at Gaussian-rational `s`, and
//!   [`xi_polynomial`] — its coefficients as a real polynomial in `t`,
//!   with the transcendental normalization carried symbolically as an
//!   [`XiPrefactor`];
//! * [`zeta_avg`] / [`zeta_avg_exact`] — the zeta average itself, recovered
//!   from `ξₙ` by restoring the Γ-prefactor (for the Jacobi family this is
//!   the difference `E[ζ(s) − ζ(s−1)]`, which is the quantity with a clean
//!   completed form);
//! * [`critical_zeros`] — certified critical-line zeros `t` of `ξₙ` with a
//!   per-zero residual bound and CSV rendering;
//! * [`LimitShape`], [`zeta_limit`], [`jacobi_zeta_difference`],
//!   [`equilibrium_density`](LimitShape::equilibrium_density), [`xi_limit`],
//!   [`xi_limit_functional_residual`] — the `n → ∞` objects: semicircle,
//!   Marchenko–Pastur and Jacobi equilibrium laws, their Mellin transforms in
//!   Gauss-hypergeometric closed form, and the limit functional equations;
//! * [`finite_n_orthogonality_check`] and [`jue_neretin_diagonal_residual`]
//!   — numerical confirmation that the completed functions of consecutive
//!   sizes are orthogonal on the critical line for the matching Γ-weight,
//!   with the diagonal constants compared against closed-form norms.
//!
//! Everything rational is exact ([`Rational`]/[`ComplexRational`]); floats
//! appear only where a value is genuinely transcendental (Γ at generic
//! arguments, quadrature, root refinement).

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use core::f64::consts::{FRAC_PI_2, FRAC_PI_6, LN_2, PI};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::ensemble::{EnsembleSpec, Family};
use crate::error::{Error, Result};
use crate::exact::{
    as_integer, c_re, complex_to_f64, crat_i, factorial, gamma_half, gamma_ratio, i_pow,
    pochhammer_rat, rat, rat_i, rational_pow, rational_to_f64, ComplexRational, Rational,
};
use crate::fm;
use crate::hyper::{op_coefficients, op_eval, OPParams};
use crate::poly::RealPoly;
use crate::quad::{integrate, integrate_power_endpoint, integrate_to_inf, QuadConfig};

/// Half-width of the detection window around Γ-prefactor poles.
const POLE_WINDOW: f64 = 1e-9;

/// Transcendental normalization of a completed zeta polynomial, kept
/// symbolic so that exact evaluations stay rational.
///
/// The value returned by [`xi`] and the polynomial stored in
/// [`XiPolynomial`] must be multiplied by this prefactor to give the
/// completed function `ξₙ(s)` itself.
#[derive(Debug, Clone, PartialEq)]
pub enum XiPrefactor {
    /// `1/√π` (Gaussian family).
    InverseSqrtPi,
    /// `1/(Γ(n)Γ(α+n))` (Laguerre family).
    InverseGammaProduct {
        /// Matrix size.
        n: u32,
        /// Laguerre weight exponent `α`.
        alpha: Rational,
    },
    /// `Γ(α₁+α₂+n+1)/(Γ(n)Γ(α₂+n))` (Jacobi family).
    GammaRatio {
        /// Matrix size.
        n: u32,
        /// Exponent of `(1−x)` in the weight.
        alpha1: Rational,
        /// Exponent of `x` in the weight.
        alpha2: Rational,
    },
}

impl XiPrefactor {
    /// The prefactor as a double. Positive for every supported parameter
    /// set; underflows to zero (rather than erroring) for sizes where
    /// `Γ(n)` exceeds the double range.
    pub fn to_f64(&self) -> f64 {
        match self {
            XiPrefactor::InverseSqrtPi => 1.0 / fm::sqrt(PI),
            XiPrefactor::InverseGammaProduct { n, alpha } => {
                let nf = f64::from(*n);
                let af = rational_to_f64(alpha);
                fm::exp(-(fm::lgamma_signed(nf).0 + fm::lgamma_signed(af + nf).0))
            }
            XiPrefactor::GammaRatio { n, alpha1, alpha2 } => {
                let nf = f64::from(*n);
                let a1 = rational_to_f64(alpha1);
                let a2 = rational_to_f64(alpha2);
                fm::exp(
                    fm::lgamma_signed(a1 + a2 + nf + 1.0).0
                        - fm::lgamma_signed(nf).0
                        - fm::lgamma_signed(a2 + nf).0,
                )
            }
        }
    }
}

/// The completed zeta function of a finite ensemble as a polynomial in the
/// critical-line coordinate `t` (where `s = 1/2 + i t`).
///
/// `ξₙ(1/2 + i t) = phase · poly_in_t(t) · prefactor`, with the phase equal
/// to `i^{1−n}` for the Gaussian family and `1` otherwise. The polynomial
/// has exact rational coefficients and definite parity: even for the
/// Laguerre and Jacobi families, `(−1)^{n−1}` for the Gaussian family —
/// which is precisely the reflection `s ↦ 1 − s` acting as `t ↦ −t`.
#[derive(Debug, Clone, PartialEq)]
pub struct XiPolynomial {
    /// The ensemble this polynomial completes.
    pub spec: EnsembleSpec,
    /// Exact coefficients in `t`, constant term first.
    pub poly_in_t: RealPoly,
    /// Degree: `n−1` (Gaussian) or `2(n−1)` (Laguerre/Jacobi).
    pub degree: usize,
    /// Transcendental normalization carried symbolically.
    pub prefactor: XiPrefactor,
}

/// `t` with `s = 1/2 + i t`, i.e. `t = −i(s − 1/2) = i(1/2 − s)`.
fn t_coordinate(s: &ComplexRational) -> ComplexRational {
    ComplexRational::new(s.im.clone(), rat(1, 2) - s.re.clone())
}

fn require_unitary(spec: &EnsembleSpec) -> Result<()> {
    if spec.beta != 2 {
        return Err(Error::InvalidParameters(
            "averaged spectral zeta functions are implemented for the unitary symmetry class",
        ));
    }
    Ok(())
}

/// The sign `ε` in the functional equation `ξₙ(s) = ε·ξₙ(1−s)`:
/// `(−1)^{n−1}` for the Gaussian family, `+1` otherwise.
pub fn functional_equation_sign(spec: &EnsembleSpec) -> i32 {
    match spec.family {
        Family::Gaussian => {
            if spec.n % 2 == 1 {
                1
            } else {
                -1
            }
        }
        _ => 1,
    }
}

fn laguerre_op(alpha: &Rational) -> OPParams {
    OPParams::ContinuousDualHahn {
        a: rat(3, 2),
        b: rat(1, 2),
        c: alpha.clone() + rat(1, 2),
    }
}

fn jacobi_op(alpha1: &Rational, alpha2: &Rational, n: u32) -> OPParams {
    let g = alpha1.clone() + alpha2.clone() + rat_i(2 * i64::from(n));
    OPParams::Wilson {
        a: rat(3, 2),
        b: rat(1, 2),
        c: alpha2.clone() + rat(1, 2),
        d: rat(1, 2) - g,
    }
}

/// `(−1)^{n−1}(α₁ + n)`: the scalar relating the Jacobi completed function
/// to its Wilson polynomial.
fn jacobi_scale(alpha1: &Rational, n: u32) -> Rational {
    let s = alpha1.clone() + rat_i(i64::from(n));
    if n % 2 == 1 {
        s
    } else {
        -s
    }
}

/// Exact evaluation of the completed zeta function, up to the declared
/// [`XiPrefactor`]: the returned value times the prefactor is `ξₙ(s)`.
///
/// The Gaussian phase `i^{1−n}` **is** included (it is exact), so for even
/// `n` the returned value is purely imaginary on the critical line.
///
/// # Errors
/// [`Error::InvalidParameters`] unless `spec.beta == 2`; evaluation errors
/// from the orthogonal-polynomial layer are propagated.
pub fn xi(spec: &EnsembleSpec, s: &ComplexRational) -> Result<ComplexRational> {
    require_unitary(spec)?;
    let n = spec.n;
    let x = t_coordinate(s);
    match spec.family {
        Family::Gaussian => {
            let mp = OPParams::meixner_pollaczek(rat_i(1));
            let two_x = ComplexRational::new(x.re.clone() * rat_i(2), x.im.clone() * rat_i(2));
            let p = op_eval(&mp, n - 1, &two_x)?;
            Ok(p * i_pow(1 - i64::from(n)))
        }
        Family::Laguerre => {
            let alpha = spec.alpha().expect("Laguerre spec carries alpha");
            op_eval(&laguerre_op(&alpha), n - 1, &x)
        }
        Family::Jacobi => {
            let (a1, a2) = spec.alphas().expect("Jacobi spec carries exponents");
            let w = op_eval(&jacobi_op(&a1, &a2, n), n - 1, &x)?;
            Ok(w * c_re(jacobi_scale(&a1, n)))
        }
    }
}

/// Insert zeros at odd positions: `q(y) ↦ p(t) = q(t²)`.
fn spread_even(q: &RealPoly) -> RealPoly {
    let qc = q.coeffs();
    if qc.is_empty() {
        return RealPoly::new(Vec::new());
    }
    let mut out = alloc::vec![rat_i(0); 2 * (qc.len() - 1) + 1];
    for (j, c) in qc.iter().enumerate() {
        out[2 * j] = c.clone();
    }
    RealPoly::new(out)
}

fn gaussian_xi_poly(n: u32) -> Result<RealPoly> {
    let mp = OPParams::meixner_pollaczek(rat_i(1));
    let c = op_coefficients(&mp, n - 1)?;
    let in_t = c.compose_linear(&crat_i(0), &crat_i(2));
    Ok(in_t
        .real_coeffs()
        .expect("Meixner–Pollaczek polynomials have real coefficients"))
}

fn laguerre_xi_poly(alpha: &Rational, n: u32) -> Result<RealPoly> {
    let q = op_coefficients(&laguerre_op(alpha), n - 1)?
        .real_coeffs()
        .expect("continuous dual Hahn polynomials have real coefficients");
    Ok(spread_even(&q))
}

fn jacobi_xi_poly(alpha1: &Rational, alpha2: &Rational, n: u32) -> Result<RealPoly> {
    let q = op_coefficients(&jacobi_op(alpha1, alpha2, n), n - 1)?
        .real_coeffs()
        .expect("Wilson polynomials have real coefficients");
    Ok(spread_even(&q).scale(&jacobi_scale(alpha1, n)))
}

/// The completed zeta function of `spec` as an exact polynomial in the
/// critical-line coordinate `t`.
///
/// # Errors
/// [`Error::InvalidParameters`] unless `spec.beta == 2`;
/// [`Error::DegreeMismatch`] if the constructed polynomial fails its degree
/// postcondition (`n−1` for Gaussian, `2(n−1)` otherwise).
pub fn xi_polynomial(spec: &EnsembleSpec) -> Result<XiPolynomial> {
    require_unitary(spec)?;
    let n = spec.n;
    let (poly, prefactor, expected) = match spec.family {
        Family::Gaussian => (
            gaussian_xi_poly(n)?,
            XiPrefactor::InverseSqrtPi,
            (n - 1) as usize,
        ),
        Family::Laguerre => {
            let alpha = spec.alpha().expect("Laguerre spec carries alpha");
            (
                laguerre_xi_poly(&alpha, n)?,
                XiPrefactor::InverseGammaProduct { n, alpha },
                2 * (n - 1) as usize,
            )
        }
        Family::Jacobi => {
            let (a1, a2) = spec.alphas().expect("Jacobi spec carries exponents");
            (
                jacobi_xi_poly(&a1, &a2, n)?,
                XiPrefactor::GammaRatio {
                    n,
                    alpha1: a1,
                    alpha2: a2,
                },
                2 * (n - 1) as usize,
            )
        }
    };
    let degree = poly.degree().unwrap_or(0);
    if degree != expected {
        return Err(Error::DegreeMismatch);
    }
    Ok(XiPolynomial {
        spec: spec.clone(),
        poly_in_t: poly,
        degree,
        prefactor,
    })
}

// ---------------------------------------------------------------------------
// Zeta averages recovered from the completed function
// ---------------------------------------------------------------------------

/// Exact zeta average at an integer argument.
///
/// * Gaussian: `E Σ|λ|^{−s}` for **even** `s` (odd integer arguments are
///   either poles of the prefactor or irrational values).
/// * Laguerre: `E Σ λ^{−s}` at any integer `s` away from prefactor poles.
/// * Jacobi: the difference `E[ζ(s) − ζ(s−1)] = E Σ λ^{−s}(1−λ)`, which is
///   the quantity completed by `ξₙ`.
///
/// At `s = −k ≤ 0` these reproduce the exact spectral moments.
///
/// # Errors
/// [`Error::PrefactorPole`] at poles of the restored Γ-prefactor (for the
/// Laguerre family the points `s = 1 + α + j`, `j ≥ 0`, where the zeta
/// average genuinely diverges); [`Error::InvalidParameters`] for odd
/// Gaussian arguments or non-unitary `spec`.
pub fn zeta_avg_exact(spec: &EnsembleSpec, s: i64) -> Result<Rational> {
    require_unitary(spec)?;
    let n = i64::from(spec.n);
    match spec.family {
        Family::Gaussian => {
            if s.rem_euclid(2) != 0 {
                return Err(Error::InvalidParameters(
                    "exact Gaussian zeta averages need an even integer argument",
                ));
            }
            let m = s / 2;
            // Γ((1−s)/2) = Γ(1/2 − m) is a rational multiple of √π that
            // cancels the 1/√π prefactor of the completed function.
            let gh = gamma_half(&(rat(1, 2) - rat_i(m)))?;
            debug_assert_eq!(gh.sqrt_pi_pow, 1);
            let pref = rational_pow(&rat_i(2), -m) * gh.rational;
            let v = xi(spec, &c_re(rat(s, 4)))?;
            debug_assert!(v.im.is_zero());
            Ok(pref * v.re)
        }
        Family::Laguerre => {
            let alpha = spec.alpha().expect("Laguerre spec carries alpha");
            let gr = gamma_ratio(&(alpha.clone() + rat_i(1)), -s).map_err(|e| match e {
                Error::GammaPole => Error::PrefactorPole,
                other => other,
            })?;
            let base = factorial((spec.n - 1) as u64)
                * pochhammer_rat(&(alpha + rat_i(1)), (spec.n - 1) as u64);
            let v = xi(spec, &c_re(rat_i(s)))?;
            debug_assert!(v.im.is_zero());
            Ok(gr / base * v.re)
        }
        Family::Jacobi => {
            let (a1, a2) = spec.alphas().expect("Jacobi spec carries exponents");
            let g = a1.clone() + a2.clone() + rat_i(2 * n);
            // Ratio Γ(1+α₂−s)/Γ(1+g−s), normalized by its value at s = 0.
            let ratio = if let Some(gb) = as_integer(&(a1.clone() + rat_i(2 * n))) {
                // Integer α₁: both Γ's can sit on poles simultaneously; the
                // Pochhammer form 1/(1+α₂−s)_G takes the finite limit value
                // automatically and reports a genuine pole as a zero
                // denominator.
                let gu = gb
                    .to_u64()
                    .ok_or(Error::TooLarge("Jacobi parameter total"))?;
                let num = pochhammer_rat(&(a2.clone() + rat_i(1)), gu);
                let den = pochhammer_rat(&(a2.clone() + rat_i(1) - rat_i(s)), gu);
                if den.is_zero() {
                    return Err(Error::PrefactorPole);
                }
                num / den
            } else {
                let num = gamma_ratio(&(a2.clone() + rat_i(1)), -s).map_err(|e| match e {
                    Error::GammaPole => Error::PrefactorPole,
                    other => other,
                })?;
                let den = gamma_ratio(&(g.clone() + rat_i(1)), -s)?;
                num / den
            };
            let base = factorial((spec.n - 1) as u64)
                * pochhammer_rat(&(a2 + rat_i(1)), (spec.n - 1) as u64)
                * pochhammer_rat(&(g.clone() - rat_i(n) + rat_i(1)), spec.n as u64);
            let v = xi(spec, &c_re(rat_i(s)))?;
            debug_assert!(v.im.is_zero());
            Ok(ratio / base * v.re)
        }
    }
}

fn horner_c(coeffs: &[f64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        acc = acc * z + Complex64::new(*c, 0.0);
    }
    acc
}

fn horner_r(coeffs: &[f64], x: f64) -> f64 {
    let mut acc = 0.0;
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn f64_coeffs(p: &RealPoly) -> Vec<f64> {
    p.coeffs().iter().map(rational_to_f64).collect()
}

/// `t` with `s = 1/2 + i t` (double version).
fn t_coordinate_f64(s: Complex64) -> Complex64 {
    Complex64::new(s.im, 0.5 - s.re)
}

/// Distance-checked detection: is `z` within the pole window of a
/// nonpositive integer `−j`? Returns `j`.
fn near_nonpositive_integer(z: Complex64) -> Option<i64> {
    if z.im.abs() >= POLE_WINDOW {
        return None;
    }
    let r = libm::round(z.re);
    if (z.re - r).abs() < POLE_WINDOW && r <= 0.5 {
        Some(-r as i64)
    } else {
        None
    }
}

/// Averaged spectral zeta function at a complex argument (double
/// precision).
///
/// Same conventions as [`zeta_avg_exact`]: for the Gaussian family this is
/// `E Σ|λ|^{−s}`, for Laguerre `E Σ λ^{−s}`, and for Jacobi the difference
/// `E Σ λ^{−s}(1−λ)`. For the Jacobi family with **non-integer** `α₁` the
/// points `s = 1+α₁+α₂+2n+j` are genuine ("trivial") zeros and the value
/// `0` is returned there; with integer `α₁` the two Γ-factors sit on poles
/// simultaneously and the finite limit value is returned instead.
///
/// # Errors
/// [`Error::PrefactorPole`] within `1e−9` of a prefactor pole (`s` an odd
/// positive integer for Gaussian; `s = 1+α+j` for Laguerre;
/// `s = 1+α₂+j` for Jacobi); [`Error::InvalidParameters`] for non-unitary
/// `spec`.
pub fn zeta_avg(spec: &EnsembleSpec, s: Complex64) -> Result<Complex64> {
    require_unitary(spec)?;
    let xp = xi_polynomial(spec)?;
    let coeffs = f64_coeffs(&xp.poly_in_t);
    let nf = f64::from(spec.n);
    match spec.family {
        Family::Gaussian => {
            if s.im.abs() < POLE_WINDOW {
                let r = libm::round(s.re);
                if (s.re - r).abs() < POLE_WINDOW && r >= 1.0 && (r as i64) % 2 == 1 {
                    return Err(Error::PrefactorPole);
                }
            }
            let phase = complex_to_f64(&i_pow(1 - i64::from(spec.n)));
            let p = horner_c(&coeffs, t_coordinate_f64(s / 4.0));
            let g = fm::cgamma((Complex64::new(1.0, 0.0) - s).scale(0.5));
            Ok(fm::cexp(s * (-0.5 * LN_2)) * g * phase * p / fm::sqrt(PI))
        }
        Family::Laguerre => {
            let alpha = rational_to_f64(&spec.alpha().expect("Laguerre spec carries alpha"));
            if near_nonpositive_integer(Complex64::new(1.0 + alpha, 0.0) - s).is_some() {
                return Err(Error::PrefactorPole);
            }
            let p = horner_c(&coeffs, t_coordinate_f64(s));
            let g = fm::cgamma(Complex64::new(1.0 + alpha, 0.0) - s);
            Ok(g * xp.prefactor.to_f64() * p)
        }
        Family::Jacobi => {
            let (a1, a2) = spec.alphas().expect("Jacobi spec carries exponents");
            let a1f = rational_to_f64(&a1);
            let a2f = rational_to_f64(&a2);
            let gf = a1f + a2f + 2.0 * nf;
            let p = horner_c(&coeffs, t_coordinate_f64(s));
            let c = xp.prefactor.to_f64();
            // Denominator Γ(1+g−s) first: a pole there is a zero of the
            // average — or a finite limit when α₁ is an integer and the
            // numerator Γ(1+α₂−s) sits on a pole at the same point.
            if let Some(j) = near_nonpositive_integer(Complex64::new(1.0 + gf, 0.0) - s) {
                let a1_int = as_integer(&a1).is_some();
                if !a1_int {
                    return Ok(Complex64::new(0.0, 0.0));
                }
                let big_a = a1f + 2.0 * nf + j as f64;
                let sign = if (a1f as i64).rem_euclid(2) == 0 {
                    1.0
                } else {
                    -1.0
                };
                let ratio = sign
                    * fm::exp(fm::lgamma_signed(j as f64 + 1.0).0 - fm::lgamma_signed(big_a + 1.0).0);
                return Ok(p * (ratio * c));
            }
            if near_nonpositive_integer(Complex64::new(1.0 + a2f, 0.0) - s).is_some() {
                return Err(Error::PrefactorPole);
            }
            let gn = fm::cgamma(Complex64::new(1.0 + a2f, 0.0) - s);
            let gd = fm::cgamma(Complex64::new(1.0 + gf, 0.0) - s);
            Ok(gn / gd * c * p)
        }
    }
}

// ---------------------------------------------------------------------------
// Critical-line zeros
// ---------------------------------------------------------------------------

/// One zero of a completed zeta polynomial on the critical line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriticalZero {
    /// Coordinate `t` of the zero `s = 1/2 + i t`.
    pub t: f64,
    /// Residual bound: absolute value of the max-normalized even part of
    /// the polynomial at the converged point.
    pub residual: f64,
}

/// All critical-line zeros of a completed zeta polynomial, ascending in
/// `t` and exactly symmetric under `t ↦ −t`.
#[derive(Debug, Clone, PartialEq)]
pub struct CriticalZeroList {
    /// The ensemble whose completed function was scanned.
    pub spec: EnsembleSpec,
    /// Zeros in ascending `t` order.
    pub zeros: Vec<CriticalZero>,
}

impl CriticalZeroList {
    /// Number of zeros (equals the polynomial degree).
    pub fn count(&self) -> usize {
        self.zeros.len()
    }

    /// Render as CSV with header `t,residual`, one row per zero,
    /// ascending in `t`, 17 significant digits for `t`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("t,residual\n");
        for z in &self.zeros {
            out += &format!("{:.16e},{:.3e}\n", z.t, z.residual);
        }
        out
    }
}

/// Natural log of `|x|` for a nonzero big integer, overflow-free.
fn ln_abs_big(x: &BigInt) -> f64 {
    let a = x.abs();
    let bits = a.bits();
    if bits <= 52 {
        fm::ln(a.to_f64().unwrap_or(1.0))
    } else {
        let shift = bits - 52;
        let top: BigInt = a >> shift;
        fm::ln(top.to_f64().unwrap_or(1.0)) + shift as f64 * LN_2
    }
}

fn ln_abs_rational(q: &Rational) -> f64 {
    ln_abs_big(q.numer()) - ln_abs_big(q.denom())
}

/// Power-of-two upper bound `R ≥` every |root| of `q`, via the Fujiwara
/// bound computed in log space (coefficients may exceed the double range).
fn root_bound_pow2(q: &RealPoly) -> Result<(Rational, f64)> {
    let d = q.degree().expect("nonconstant polynomial");
    let lead = ln_abs_rational(&q.coeff(d));
    let mut ln_bound: f64 = 0.0;
    for j in 1..=d {
        let c = q.coeff(d - j);
        if c.is_zero() {
            continue;
        }
        let v = (ln_abs_rational(&c) - lead) / j as f64;
        if v > ln_bound {
            ln_bound = v;
        }
    }
    let e = libm::ceil((ln_bound + LN_2) / LN_2) as i64;
    if e.abs() > 1000 {
        return Err(Error::TooLarge("root bound"));
    }
    Ok((rational_pow(&rat_i(2), e), libm::exp2(e as f64)))
}

/// Scan `v ∈ [0,1]` for sign changes of `f(v) = q̂(v²)` and bisect each
/// bracket down to `|Δt| ≤ 1e−13` where `t = tmax·v`.
fn scan_positive_roots(nc: &[f64], tmax: f64, grid: usize) -> Vec<(f64, f64)> {
    let f = |v: f64| horner_r(nc, v * v);
    let mut roots = Vec::new();
    let width_v = (1e-13 / tmax).max(4.0 * f64::EPSILON);
    let mut prev_v = 0.0_f64;
    let mut prev_f = f(0.0);
    for i in 1..=grid {
        let v = i as f64 / grid as f64;
        let fv = f(v);
        if fv == 0.0 {
            roots.push((tmax * v, 0.0));
        } else if prev_f != 0.0 && (prev_f > 0.0) != (fv > 0.0) {
            let (mut a, mut b) = (prev_v, v);
            let mut fa = prev_f;
            for _ in 0..200 {
                if b - a <= width_v {
                    break;
                }
                let m = 0.5 * (a + b);
                let fm_mid = f(m);
                if fm_mid == 0.0 {
                    a = m;
                    b = m;
                    break;
                }
                if (fa > 0.0) == (fm_mid > 0.0) {
                    a = m;
                    fa = fm_mid;
                } else {
                    b = m;
                }
            }
            let mid = 0.5 * (a + b);
            roots.push((tmax * mid, f(mid).abs()));
        }
        prev_v = v;
        prev_f = fv;
    }
    roots
}

/// Certified critical-line zeros of the completed zeta function of `spec`.
///
/// The polynomial is split by parity as `p(t) = t^r·q(t²)`; the positive
/// roots of `q` are located by a sign-change scan over a rescaled `[0,1]`
/// grid plus bisection (`|Δt| < 1e−12`), then mirrored. The list length
/// always equals the polynomial degree.
///
/// # Errors
/// [`Error::RootCountMismatch`] if, after grid refinement, the number of
/// sign changes does not account for every root (this would contradict the
/// critical-line theorem and signals a defect); construction errors as in
/// [`xi_polynomial`].
pub fn critical_zeros(spec: &EnsembleSpec) -> Result<CriticalZeroList> {
    let xp = xi_polynomial(spec)?;
    let deg = xp.degree;
    if deg == 0 {
        return Ok(CriticalZeroList {
            spec: spec.clone(),
            zeros: Vec::new(),
        });
    }
    let coeffs = xp.poly_in_t.coeffs();
    let r = deg % 2;
    let mut even = Vec::new();
    for (j, c) in coeffs.iter().enumerate() {
        if j % 2 == r {
            even.push(c.clone());
        } else if !c.is_zero() {
            return Err(Error::InvalidParameters(
                "completed polynomial lacks the parity forced by its functional equation",
            ));
        }
    }
    let q = RealPoly::new(even);
    let dq = q.degree().unwrap_or(0);
    let mut pos: Vec<(f64, f64)> = Vec::new();
    if dq > 0 {
        let (r_rat, r_f) = root_bound_pow2(&q)?;
        let scaled = q.compose_linear(&rat_i(0), &r_rat);
        let nc = scaled.normalized_f64_coeffs();
        let tmax = fm::sqrt(r_f);
        let mut grid = (128 * dq).max(2048);
        let mut attempt = 0;
        loop {
            pos = scan_positive_roots(&nc, tmax, grid);
            if pos.len() == dq {
                break;
            }
            attempt += 1;
            if attempt > 2 {
                return Err(Error::RootCountMismatch {
                    found: 2 * pos.len() + r,
                    degree: deg,
                });
            }
            grid *= 4;
        }
    }
    let mut zeros = Vec::with_capacity(deg);
    for &(t, res) in pos.iter().rev() {
        zeros.push(CriticalZero { t: -t, residual: res });
    }
    if r == 1 {
        zeros.push(CriticalZero {
            t: 0.0,
            residual: 0.0,
        });
    }
    for &(t, res) in &pos {
        zeros.push(CriticalZero { t, residual: res });
    }
    Ok(CriticalZeroList {
        spec: spec.clone(),
        zeros,
    })
}

// ---------------------------------------------------------------------------
// The n → ∞ limits
// ---------------------------------------------------------------------------

/// Shape of a large-`n` spectral limit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LimitShape {
    /// Semicircle law on `[−2, 2]` (Gaussian family, eigenvalues scaled by
    /// `1/√n`).
    Gaussian,
    /// Marchenko–Pastur law with aspect parameter `c > 1` (Laguerre family
    /// with `α = (c−1)n`, eigenvalues scaled by `1/n`).
    Laguerre {
        /// Aspect parameter, strictly above 1 so the support stays away
        /// from the origin.
        c: f64,
    },
    /// Jacobi equilibrium law with parameters `c₁, c₂ > 1` (exponents
    /// `α₁ = (c₁−1)n`, `α₂ = (c₂−1)n`).
    Jacobi {
        /// Parameter coupled to the `(1−x)` exponent.
        c1: f64,
        /// Parameter coupled to the `x` exponent.
        c2: f64,
    },
}

impl LimitShape {
    fn validate(&self) -> Result<()> {
        match self {
            LimitShape::Gaussian => Ok(()),
            LimitShape::Laguerre { c } => {
                if c.is_finite() && *c > 1.0 {
                    Ok(())
                } else {
                    Err(Error::ParameterRange("limit shape parameter must exceed 1"))
                }
            }
            LimitShape::Jacobi { c1, c2 } => {
                if c1.is_finite() && *c1 > 1.0 && c2.is_finite() && *c2 > 1.0 {
                    Ok(())
                } else {
                    Err(Error::ParameterRange("limit shape parameters must exceed 1"))
                }
            }
        }
    }

    /// Endpoints `(lo, hi)` of the support of the equilibrium density.
    ///
    /// # Errors
    /// [`Error::ParameterRange`] for parameters outside the one-cut regime
    /// (`c ≤ 1`, `cᵢ ≤ 1`, or non-finite).
    pub fn support(&self) -> Result<(f64, f64)> {
        self.validate()?;
        match self {
            LimitShape::Gaussian => Ok((-2.0, 2.0)),
            LimitShape::Laguerre { c } => {
                let rc = fm::sqrt(*c);
                Ok(((1.0 - rc) * (1.0 - rc), (1.0 + rc) * (1.0 + rc)))
            }
            LimitShape::Jacobi { c1, c2 } => {
                let den = c1 + c2;
                let u = fm::sqrt(*c1);
                let v = fm::sqrt(c2 * (c1 + c2 - 1.0));
                let lo = (v - u) / den;
                let hi = (v + u) / den;
                Ok((lo * lo, hi * hi))
            }
        }
    }

    /// The equilibrium eigenvalue density at `x` (a probability density:
    /// semicircle, Marchenko–Pastur, or the Jacobi equilibrium law).
    ///
    /// # Errors
    /// [`Error::OutOfSupport`] if `x` lies outside the support;
    /// [`Error::ParameterRange`] as in [`LimitShape::support`].
    pub fn equilibrium_density(&self, x: f64) -> Result<f64> {
        let (lo, hi) = self.support()?;
        if !(x >= lo && x <= hi) {
            return Err(Error::OutOfSupport);
        }
        let edge = ((hi - x) * (x - lo)).max(0.0);
        match self {
            LimitShape::Gaussian => Ok(fm::sqrt(edge) / (2.0 * PI)),
            LimitShape::Laguerre { .. } => Ok(fm::sqrt(edge) / (2.0 * PI * x)),
            LimitShape::Jacobi { c1, c2 } => {
                Ok((c1 + c2) * fm::sqrt(edge) / (2.0 * PI * x * (1.0 - x)))
            }
        }
    }
}

/// `₂F₁(3/2, b; 3; w)` for real `0 < w < 1` by direct series summation,
/// truncating when two consecutive terms fall below `1e−18` of the partial
/// sum.
fn gauss_2f1_series(b: Complex64, w: f64) -> Result<Complex64> {
    let mut term = Complex64::new(1.0, 0.0);
    let mut acc = term;
    let mut small = 0u32;
    for k in 0..500_000u64 {
        let kf = k as f64;
        term = term * (b + kf) * ((1.5 + kf) * w / ((3.0 + kf) * (1.0 + kf)));
        acc += term;
        if term.norm() <= 1e-18 * acc.norm() {
            small += 1;
            if small >= 2 {
                return Ok(acc);
            }
        } else {
            small = 0;
        }
    }
    Err(Error::NonConvergent { err: term.norm() })
}

/// `₂F₁(3/2, s+1; 3; w)` with the Euler transformation applied for
/// `Re(s) < −1` so that every summed term stays positive (the direct
/// series alternates catastrophically there).
fn gauss_2f1_stable(s: Complex64, w: f64) -> Result<Complex64> {
    if s.re < -1.0 {
        let f = gauss_2f1_series(Complex64::new(2.0, 0.0) - s, w)?;
        Ok(fm::cexp((Complex64::new(0.5, 0.0) - s) * fm::ln(1.0 - w)) * f)
    } else {
        gauss_2f1_series(s + Complex64::new(1.0, 0.0), w)
    }
}

fn gaussian_limit_zeta(s: Complex64) -> Result<Complex64> {
    if s.im.abs() < 1e-12 {
        let r = libm::round(s.re);
        if (s.re - r).abs() < 1e-12 && r >= 1.0 {
            let k = r as i64;
            if k % 2 == 1 {
                // Simple poles at odd positive integers.
                return Err(Error::PoleAtEvaluationPoint);
            }
            if k >= 4 {
                // Simple zeros at even integers ≥ 4 (the value at 2 is
                // finite: −1/2).
                return Ok(Complex64::new(0.0, 0.0));
            }
        }
    }
    let g1 = fm::cgamma((Complex64::new(1.0, 0.0) - s).scale(0.5));
    let g2 = fm::cgamma(Complex64::new(2.0, 0.0) - s.scale(0.5));
    Ok(fm::cexp(s * (-LN_2)) * g1 / (fm::sqrt(PI) * g2))
}

fn laguerre_limit_zeta(c: f64, s: Complex64) -> Result<Complex64> {
    let shape = LimitShape::Laguerre { c };
    let (lo, hi) = shape.support()?;
    let w = (hi - lo) / hi;
    let f = gauss_2f1_stable(s, w)?;
    let scale = (hi - lo) * (hi - lo) / 16.0;
    Ok(fm::cexp((s + Complex64::new(1.0, 0.0)) * (-fm::ln(hi))) * f * scale)
}

/// The Mellin difference `ζ_∞(s) − ζ_∞(s−1) = ∫ x^{−s}(1−x)ρ(x)dx` of the
/// Jacobi equilibrium law, in Gauss-hypergeometric closed form.
///
/// This is the object with the clean completed form: `(x₋x₊)^{s/2}` times
/// it is invariant under `s ↦ 1−s` (see [`xi_limit`]).
///
/// # Errors
/// [`Error::ParameterRange`] unless `c1, c2 > 1`;
/// [`Error::NonConvergent`] if the series stalls.
pub fn jacobi_zeta_difference(c1: f64, c2: f64, s: Complex64) -> Result<Complex64> {
    let shape = LimitShape::Jacobi { c1, c2 };
    let (lo, hi) = shape.support()?;
    let w = (hi - lo) / hi;
    let f = gauss_2f1_stable(s, w)?;
    let scale = (c1 + c2) * (hi - lo) * (hi - lo) / 16.0;
    Ok(fm::cexp((s + Complex64::new(1.0, 0.0)) * (-fm::ln(hi))) * f * scale)
}

fn jacobi_limit_zeta_plain(c1: f64, c2: f64, s: Complex64) -> Result<Complex64> {
    // The support sits strictly inside (0, 1), so x^{−s} is smooth there
    // and the direct Mellin quadrature of the density converges for every
    // s; this avoids telescoping the closed-form differences, whose series
    // lose precision once the shift grows.
    let shape = LimitShape::Jacobi { c1, c2 };
    let (lo, hi) = shape.support()?;
    let wdt = hi - lo;
    let den = c1 + c2;
    let cfg = QuadConfig::default();
    let res = integrate(
        |th: f64| {
            let sn = fm::sin(th);
            let cs = fm::cos(th);
            let x = lo + wdt * sn * sn;
            let bulk = den * (wdt * sn * cs) / (2.0 * PI * x * (1.0 - x)) * (wdt * 2.0 * sn * cs);
            fm::cexp(s * (-fm::ln(x))).scale(bulk)
        },
        0.0,
        FRAC_PI_2,
        &cfg,
    )?;
    Ok(res.value)
}

/// Averaged spectral zeta function of the `n → ∞` limit law.
///
/// * Gaussian: `∫|x|^{−s}ρ_sc(x)dx` in Γ closed form; at `s = −2k` this is
///   the `k`-th Catalan number. Simple poles sit at **odd** positive
///   integers and simple zeros at even integers `≥ 4`.
/// * Laguerre (`c > 1`): Gauss-hypergeometric closed form, transformed so
///   the series argument lies in `(0, 1)`.
/// * Jacobi (`c₁, c₂ > 1`): the plain average, by direct Mellin quadrature
///   of the equilibrium density (the hypergeometric closed form belongs to
///   the difference — see [`jacobi_zeta_difference`]).
///
/// # Errors
/// [`Error::PoleAtEvaluationPoint`] at the Gaussian poles;
/// [`Error::ParameterRange`] for shape parameters `≤ 1`.
pub fn zeta_limit(shape: LimitShape, s: Complex64) -> Result<Complex64> {
    match shape {
        LimitShape::Gaussian => gaussian_limit_zeta(s),
        LimitShape::Laguerre { c } => laguerre_limit_zeta(c, s),
        LimitShape::Jacobi { c1, c2 } => jacobi_limit_zeta_plain(c1, c2, s),
    }
}

/// Completed limit zeta function `ξ_∞(s)`, satisfying
/// `ξ_∞(s) = ξ_∞(1−s)`:
///
/// * Laguerre: `(x₋x₊)^{s/2}·ζ_∞(s)` with `x₋x₊ = (c−1)²`;
/// * Jacobi: `(x₋x₊)^{s/2}·(ζ_∞(s) − ζ_∞(s−1))`.
///
/// # Errors
/// [`Error::InvalidParameters`] for the Gaussian shape (its reflection
/// symmetry is expressed through the finite-`n` family instead);
/// otherwise as [`zeta_limit`].
pub fn xi_limit(shape: LimitShape, s: Complex64) -> Result<Complex64> {
    match shape {
        LimitShape::Gaussian => Err(Error::InvalidParameters(
            "the completed limit function is defined for the Laguerre and Jacobi shapes",
        )),
        LimitShape::Laguerre { c } => {
            shape.validate()?;
            let p = (c - 1.0) * (c - 1.0);
            Ok(fm::cexp(s * (0.5 * fm::ln(p))) * laguerre_limit_zeta(c, s)?)
        }
        LimitShape::Jacobi { c1, c2 } => {
            let (lo, hi) = shape.support()?;
            let p = lo * hi;
            Ok(fm::cexp(s * (0.5 * fm::ln(p))) * jacobi_zeta_difference(c1, c2, s)?)
        }
    }
}

/// `|ξ_∞(s) − ξ_∞(1−s)|`: residual of the limit functional equation.
///
/// # Errors
/// As [`xi_limit`].
pub fn xi_limit_functional_residual(shape: LimitShape, s: Complex64) -> Result<f64> {
    let a = xi_limit(shape, s)?;
    let b = xi_limit(shape, Complex64::new(1.0, 0.0) - s)?;
    Ok((a - b).norm())
}

/// Independent density-side evaluation of the limit zeta function:
/// `∫ x^{−s} ρ(x) dx` by adaptive quadrature over the support.
///
/// For the Gaussian shape only real `s < 1` is supported (the integrable
/// singularity at the origin is handled by a power-endpoint transform,
/// which needs a real exponent). This is the oracle the closed forms of
/// [`zeta_limit`] are tested against.
///
/// # Errors
/// [`Error::InvalidParameters`] for complex `s` with the Gaussian shape;
/// [`Error::ParameterRange`] for out-of-range shape parameters or
/// `Re(s) ≥ 1` at a hard edge touching the origin; quadrature errors are
/// propagated.
pub fn zeta_limit_quadrature_oracle(
    shape: LimitShape,
    s: Complex64,
    cfg: &QuadConfig,
) -> Result<Complex64> {
    match shape {
        LimitShape::Gaussian => {
            if s.im != 0.0 {
                return Err(Error::InvalidParameters(
                    "the Gaussian density oracle supports real arguments",
                ));
            }
            let sr = s.re;
            // 2∫₀² x^{−s}ρ_sc = (power-endpoint piece on [0,1]) + (smooth
            // piece on [1,2] via x = 2 sin θ).
            let i1 = integrate_power_endpoint(
                |x: f64| fm::powf(x, -sr) * fm::sqrt((4.0 - x * x).max(0.0)) / PI,
                1.0,
                -sr,
                cfg,
            )?;
            let i2 = integrate(
                |th: f64| {
                    let x = 2.0 * fm::sin(th);
                    let c = fm::cos(th);
                    fm::powf(x, -sr) * 4.0 * c * c / PI
                },
                FRAC_PI_6,
                FRAC_PI_2,
                cfg,
            )?;
            Ok(Complex64::new(i1.value + i2.value, 0.0))
        }
        LimitShape::Laguerre { .. } | LimitShape::Jacobi { .. } => {
            let (lo, hi) = shape.support()?;
            let wdt = hi - lo;
            let res = integrate(
                |th: f64| {
                    let sn = fm::sin(th);
                    let cs = fm::cos(th);
                    let x = lo + wdt * sn * sn;
                    let rho = shape.equilibrium_density(x).unwrap_or(0.0);
                    let jac = wdt * 2.0 * sn * cs;
                    fm::cexp(s * (-fm::ln(x))).scale(rho * jac)
                },
                0.0,
                FRAC_PI_2,
                cfg,
            )?;
            Ok(res.value)
        }
    }
}

// ---------------------------------------------------------------------------
// Critical-line orthogonality
// ---------------------------------------------------------------------------

/// `ln cosh x` for `x ≥ 0`, overflow-free.
fn ln_cosh(x: f64) -> f64 {
    x - LN_2 + fm::ln(1.0 + fm::exp(-2.0 * x))
}

/// `ln sinh x` for `x > 0`, overflow-free.
fn ln_sinh(x: f64) -> f64 {
    x - LN_2 + fm::ln(1.0 - fm::exp(-2.0 * x))
}

/// `|2√π Γ(1+2it)|² = 8π²t/sinh(2πt)` — the Gaussian critical-line weight.
fn gaussian_line_weight(t: f64) -> f64 {
    if t < 1e-12 {
        return 4.0 * PI;
    }
    let sh = fm::sinh(2.0 * PI * t);
    if sh.is_infinite() {
        return 0.0;
    }
    8.0 * PI * PI * t / sh
}

/// `|Γ(1/2+it)Γ(3/2+it)Γ(α+1/2+it)/Γ(2it)|²`, in log space so the
/// exponentially large and small factors never overflow individually.
fn laguerre_line_weight(alpha: f64, t: f64) -> f64 {
    if t < 1e-300 {
        return 0.0;
    }
    let ln_pi = fm::ln(PI);
    let lc = ln_cosh(PI * t);
    let l = (ln_pi - lc)
        + (fm::ln(0.25 + t * t) + ln_pi - lc)
        + 2.0 * fm::clgamma(Complex64::new(alpha + 0.5, t)).re
        + fm::ln(2.0 * t) - ln_pi
        + ln_sinh(2.0 * PI * t);
    fm::exp(l)
}

/// `|Γ(1/2+it)Γ(3/2+it)Γ(α₂+1/2+it)/(Γ(1/2+g+it)Γ(2it))|²` — the Jacobi
/// (Neretin) critical-line weight, log space.
fn neretin_line_weight(a2: f64, g: f64, t: f64) -> f64 {
    if t < 1e-300 {
        return 0.0;
    }
    let ln_pi = fm::ln(PI);
    let lc = ln_cosh(PI * t);
    let l = (ln_pi - lc)
        + (fm::ln(0.25 + t * t) + ln_pi - lc)
        + 2.0 * fm::clgamma(Complex64::new(a2 + 0.5, t)).re
        - 2.0 * fm::clgamma(Complex64::new(0.5 + g, t)).re
        + fm::ln(2.0 * t) - ln_pi
        + ln_sinh(2.0 * PI * t);
    fm::exp(l)
}

/// Critical-line orthogonality integral
/// `|⟨ξ_m, ξ_n⟩| = |(1/2π)∫ ξ_m(1/2+it) ξ̄_n(1/2+it) w(t) dt|`
/// for the Gaussian (full line) or Laguerre (half line) weight.
///
/// Off-diagonal values vanish up to quadrature error; the diagonal gives
/// the norm constants `m/2` (Gaussian) and `m(m+α)` (Laguerre). Index `0`
/// denotes the identically-zero completed function of an empty matrix, so
/// any pairing with it returns `0` exactly. The Jacobi family needs the
/// `n`-dependent Neretin weight — use [`jue_neretin_diagonal_residual`].
///
/// # Errors
/// [`Error::ParameterRange`] for indices above 5 or `α ≤ −1/2`;
/// [`Error::InvalidParameters`] for the Jacobi family or a missing `α`;
/// quadrature errors are propagated.
pub fn finite_n_orthogonality_check(
    family: Family,
    alpha: Option<&Rational>,
    m: u32,
    n: u32,
    cfg: &QuadConfig,
) -> Result<f64> {
    if m > 5 || n > 5 {
        return Err(Error::ParameterRange(
            "the orthogonality check is sized for indices up to 5",
        ));
    }
    if m == 0 || n == 0 {
        return Ok(0.0);
    }
    match family {
        Family::Gaussian => {
            if (m + n) % 2 == 1 {
                // Opposite parity: the full-line integral vanishes exactly.
                return Ok(0.0);
            }
            let pm = f64_coeffs(&gaussian_xi_poly(m)?);
            let pn = f64_coeffs(&gaussian_xi_poly(n)?);
            let half = integrate_to_inf(
                |t: f64| horner_r(&pm, t) * horner_r(&pn, t) * gaussian_line_weight(t),
                0.0,
                cfg,
            )?;
            // Full line = 2 × half line for equal parity; the two 1/√π
            // prefactors contribute 1/π; phases have unit modulus.
            Ok((half.value * 2.0 / (PI * 2.0 * PI)).abs())
        }
        Family::Laguerre => {
            let alpha = alpha.ok_or(Error::InvalidParameters(
                "the Laguerre orthogonality check needs the weight exponent",
            ))?;
            if *alpha <= rat(-1, 2) {
                return Err(Error::ParameterRange(
                    "the Laguerre critical-line weight needs alpha > -1/2",
                ));
            }
            let af = rational_to_f64(alpha);
            let pm = f64_coeffs(&laguerre_xi_poly(alpha, m)?);
            let pn = f64_coeffs(&laguerre_xi_poly(alpha, n)?);
            let half = integrate_to_inf(
                |t: f64| horner_r(&pm, t) * horner_r(&pn, t) * laguerre_line_weight(af, t),
                0.0,
                cfg,
            )?;
            let ln_pref = fm::lgamma_signed(f64::from(m)).0
                + fm::lgamma_signed(af + f64::from(m)).0
                + fm::lgamma_signed(f64::from(n)).0
                + fm::lgamma_signed(af + f64::from(n)).0;
            Ok((half.value * fm::exp(-ln_pref) / (2.0 * PI)).abs())
        }
        Family::Jacobi => Err(Error::InvalidParameters(
            "Jacobi critical-line orthogonality uses an n-dependent weight; \
             see jue_neretin_diagonal_residual",
        )),
    }
}

/// Relative residual between the numerically integrated diagonal
/// `(1/2π)∫ W²_{n−1} w(t) dt` for the Jacobi critical-line (Neretin)
/// weight and its closed-form norm.
///
/// # Errors
/// [`Error::ParameterRange`] for `n = 0`, `n > 6`, `α₁ ≤ 0` (the weight
/// then decays too slowly to integrate) or `α₂ ≤ −1/2`; quadrature errors
/// are propagated.
pub fn jue_neretin_diagonal_residual(
    alpha1: &Rational,
    alpha2: &Rational,
    n: u32,
    cfg: &QuadConfig,
) -> Result<f64> {
    if n == 0 || n > 6 {
        return Err(Error::ParameterRange(
            "the Neretin diagonal check is sized for 1 ≤ n ≤ 6",
        ));
    }
    if *alpha1 <= rat_i(0) {
        return Err(Error::ParameterRange(
            "the Neretin weight tail needs alpha1 > 0",
        ));
    }
    if *alpha2 <= rat(-1, 2) {
        return Err(Error::ParameterRange(
            "the Neretin weight needs alpha2 > -1/2",
        ));
    }
    let nu = n - 1;
    let wpoly = op_coefficients(&jacobi_op(alpha1, alpha2, n), nu)?
        .real_coeffs()
        .expect("Wilson polynomials have real coefficients");
    let wc = f64_coeffs(&wpoly);
    let a1f = rational_to_f64(alpha1);
    let a2f = rational_to_f64(alpha2);
    let gf = a1f + a2f + 2.0 * f64::from(n);
    let numeric = integrate_to_inf(
        |t: f64| {
            let q = horner_r(&wc, t * t);
            q * q * neretin_line_weight(a2f, gf, t)
        },
        0.0,
        cfg,
    )?
    .value
        / (2.0 * PI);
    // Closed-form norm: rational part exact, Γ-part in doubles.
    let a = rat(3, 2);
    let b = rat(1, 2);
    let c = alpha2.clone() + rat(1, 2);
    let g = alpha1.clone() + alpha2.clone() + rat_i(2 * i64::from(n));
    let d = rat(1, 2) - g.clone();
    let s_tot = a.clone() + b.clone() + c.clone() + d.clone();
    let mut rp = (s_tot.clone() - rat_i(1)) / (s_tot.clone() + rat_i(2 * i64::from(nu)) - rat_i(1));
    for l in 0..i64::from(nu) {
        let lr = rat_i(l);
        rp *= (a.clone() + b.clone() + lr.clone())
            * (a.clone() + c.clone() + lr.clone())
            * (a.clone() + d.clone() + lr.clone())
            * (b.clone() + c.clone() + lr.clone())
            * (b.clone() + d.clone() + lr.clone())
            * (c.clone() + d.clone() + lr.clone())
            / (s_tot.clone() - rat_i(1) + lr);
    }
    rp *= factorial(u64::from(nu));
    let nf = f64::from(n);
    let gamma_part = fm::tgamma(a2f + 2.0) * fm::tgamma(a2f + 1.0)
        * fm::tgamma(a1f + 2.0 * nf - 2.0)
        / (fm::tgamma(gf - 1.0) * fm::tgamma(gf) * fm::tgamma(gf - a2f));
    let closed = rational_to_f64(&rp) * gamma_part;
    Ok(((numeric - closed) / closed).abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{c_im, catalan};
    use crate::unitary::{gue_moment, gue_normalized_at, jue_delta_moment, lue_moment};

    fn gue(n: u32) -> EnsembleSpec {
        EnsembleSpec::gaussian(2, n).unwrap()
    }

    fn lue(n: u32, m: u32) -> EnsembleSpec {
        EnsembleSpec::laguerre(2, n, m).unwrap()
    }

    fn jue(n: u32, a1: Rational, a2: Rational) -> EnsembleSpec {
        EnsembleSpec::jacobi(2, n, a1, a2).unwrap()
    }

    fn close(a: f64, b: f64, tol: f64) {
        assert!(
            (a - b).abs() <= tol * b.abs().max(1.0),
            "{a} vs {b} (tol {tol})"
        );
    }

    fn cclose(a: Complex64, b: Complex64, tol: f64) {
        assert!(
            (a - b).norm() <= tol * b.norm().max(1.0),
            "{a} vs {b} (tol {tol})"
        );
    }

    #[test]
    fn size_one_completed_functions_are_constant() {
        for s in [c_re(rat(3, 7)), c_re(rat(-5, 2)), c_im(rat(2, 3))] {
            assert_eq!(xi(&gue(1), &s).unwrap(), crat_i(1));
            assert_eq!(xi(&lue(1, 4), &s).unwrap(), crat_i(1));
            // Jacobi: the constant is (α₁ + 1).
            let v = xi(&jue(1, rat_i(2), rat_i(1)), &s).unwrap();
            assert_eq!(v, c_re(rat_i(3)));
        }
        let xp = xi_polynomial(&lue(1, 4)).unwrap();
        assert_eq!(xp.degree, 0);
        assert!(critical_zeros(&lue(1, 4)).unwrap().zeros.is_empty());
    }

    #[test]
    fn functional_equation_holds_exactly() {
        // 20 rational sample points, several complex.
        let mut samples = Vec::new();
        for j in 0..16i64 {
            samples.push(c_re(rat(2 * j - 15, 14)));
        }
        samples.push(ComplexRational::new(rat(1, 3), rat(2, 5)));
        samples.push(ComplexRational::new(rat(-3, 4), rat(1, 7)));
        samples.push(ComplexRational::new(rat(9, 5), rat(-2, 3)));
        samples.push(ComplexRational::new(rat(1, 2), rat(11, 6)));
        assert_eq!(samples.len(), 20);
        let specs: Vec<EnsembleSpec> = alloc::vec![
            gue(2),
            gue(3),
            gue(5),
            gue(12),
            lue(2, 4),
            lue(3, 3),
            lue(5, 9),
            lue(12, 14),
            jue(2, rat_i(1), rat_i(1)),
            jue(3, rat(1, 2), rat(3, 2)),
            jue(5, rat_i(2), rat_i(3)),
            jue(8, rat(5, 2), rat(1, 3)),
        ];
        for spec in &specs {
            let sign = functional_equation_sign(spec);
            for s in &samples {
                let one_minus = ComplexRational::new(rat_i(1) - s.re.clone(), -s.im.clone());
                let a = xi(spec, s).unwrap();
                let b = xi(spec, &one_minus).unwrap();
                let expect = if sign == 1 { b } else { -b };
                assert_eq!(a, expect, "spec {spec:?} at s = {s:?}");
            }
        }
    }

    #[test]
    fn gaussian_xi_matches_moment_series_at_half_integers() {
        // ξ√π at s = −k/2 equals the normalized Gaussian moment value
        // n·₂F₁(−k, 1−n; 2; 2).
        for n in 1..=6u32 {
            for k in 0..=8i64 {
                let v = xi(&gue(n), &c_re(rat(-k, 2))).unwrap();
                assert!(v.im.is_zero());
                assert_eq!(v.re, gue_normalized_at(n, &rat_i(k)));
            }
        }
    }

    #[test]
    fn xi_polynomial_small_cases_by_hand() {
        // Gaussian n = 2: P₁^{(1)}(2t; π/2) = 4t.
        let xp = xi_polynomial(&gue(2)).unwrap();
        assert_eq!(xp.poly_in_t.coeffs(), &[rat_i(0), rat_i(4)]);
        // Laguerre n = 2, α = 2: 23/4 − t².
        let xp = xi_polynomial(&lue(2, 4)).unwrap();
        assert_eq!(xp.poly_in_t.coeffs(), &[rat(23, 4), rat_i(0), rat_i(-1)]);
        assert_eq!(xp.degree, 2);
        // Jacobi n = 2, α₁ = α₂ = 1: −(1+2)·(2t² − 39/2) spread from
        // W₁(y) = (a+b)(a+c)(a+d) − S(a² + y) = 2y − 39/2 at
        // (a,b,c,d) = (3/2, 1/2, 3/2, −11/2).
        let xp = xi_polynomial(&jue(2, rat_i(1), rat_i(1))).unwrap();
        assert_eq!(
            xp.poly_in_t.coeffs(),
            &[rat(117, 2), rat_i(0), rat_i(-6)]
        );
    }

    #[test]
    fn critical_zeros_match_hand_computed_values() {
        // Gaussian n = 2: single zero at t = 0.
        let z = critical_zeros(&gue(2)).unwrap();
        assert_eq!(z.zeros.len(), 1);
        assert_eq!(z.zeros[0].t, 0.0);
        // Gaussian n = 3: zeros at ±1/(2√2).
        let z = critical_zeros(&gue(3)).unwrap();
        assert_eq!(z.zeros.len(), 2);
        close(z.zeros[1].t, 0.353_553_390_593_273_8, 1e-12);
        assert_eq!(z.zeros[0].t, -z.zeros[1].t);
        // Laguerre n = 2, α = 2: zeros at ±√23/2.
        let z = critical_zeros(&lue(2, 4)).unwrap();
        assert_eq!(z.zeros.len(), 2);
        close(z.zeros[1].t, 2.397_915_761_656_36, 1e-12);
        // Jacobi n = 2, α₁ = α₂ = 1: zeros at ±√39/2 (checked against a
        // 30-digit quadrature of the 2×2 eigenvalue density).
        let z = critical_zeros(&jue(2, rat_i(1), rat_i(1))).unwrap();
        assert_eq!(z.zeros.len(), 2);
        close(z.zeros[1].t, 3.122_498_999_199_199, 1e-12);
    }

    #[test]
    fn critical_zeros_count_symmetry_residuals() {
        let specs = alloc::vec![
            gue(20),
            gue(15),
            lue(12, 15),
            lue(8, 11),
            jue(10, rat_i(1), rat_i(2)),
            jue(7, rat(1, 2), rat(3, 2)),
        ];
        for spec in specs {
            let xp = xi_polynomial(&spec).unwrap();
            let z = critical_zeros(&spec).unwrap();
            assert_eq!(z.zeros.len(), xp.degree, "count for {spec:?}");
            let m = z.zeros.len();
            for i in 0..m {
                assert_eq!(z.zeros[i].t, -z.zeros[m - 1 - i].t, "symmetry {spec:?}");
                assert!(z.zeros[i].residual < 1e-9, "residual for {spec:?}");
                if i > 0 {
                    assert!(z.zeros[i].t > z.zeros[i - 1].t, "ordering {spec:?}");
                }
            }
            if xp.degree % 2 == 1 {
                assert_eq!(z.zeros[m / 2].t, 0.0);
            }
        }
    }

    #[test]
    fn csv_rendering_is_stable() {
        let z = critical_zeros(&lue(3, 5)).unwrap();
        let csv = z.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("t,residual"));
        let rows: Vec<&str> = lines.collect();
        assert_eq!(rows.len(), 4);
        let ts: Vec<f64> = rows
            .iter()
            .map(|r| r.split(',').next().unwrap().parse::<f64>().unwrap())
            .collect();
        assert!(ts.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn zeta_avg_exact_reproduces_moments() {
        for n in 1..=5u32 {
            for k in 0..=6u32 {
                let lhs = zeta_avg_exact(&gue(n), -2 * i64::from(k)).unwrap();
                assert_eq!(lhs, gue_moment(n, k).full_value());
            }
        }
        for (n, m) in [(1u32, 3u32), (2, 4), (3, 5)] {
            for k in 0..=6i64 {
                let lhs = zeta_avg_exact(&lue(n, m), -k).unwrap();
                assert_eq!(lhs, lue_moment(m, n, k).unwrap().full_value());
            }
        }
        // Positive arguments recover inverse moments (reciprocity side).
        for k in 0..=3i64 {
            let lhs = zeta_avg_exact(&lue(3, 8), k + 1).unwrap();
            assert_eq!(lhs, lue_moment(8, 3, -(k + 1)).unwrap().full_value());
        }
        let cases = [
            (2u32, rat_i(1), rat_i(1)),
            (3, rat_i(2), rat_i(3)),
            (2, rat(1, 2), rat(3, 2)),
        ];
        for (n, a1, a2) in cases {
            for k in 0..=5i64 {
                let spec = jue(n, a1.clone(), a2.clone());
                let lhs = zeta_avg_exact(&spec, -k).unwrap();
                assert_eq!(lhs, jue_delta_moment(&a1, &a2, n, k).unwrap().full_value());
            }
        }
    }

    #[test]
    fn zeta_average_argument_poles_are_flagged() {
        // Laguerre n = 4, α = 5: s = 1+α+j are poles of the average (the
        // completed function has a Γ(1+α−s) prefactor pole there), so the
        // operation refuses them rather than reporting spurious zeros.
        let spec = lue(4, 9);
        for s in [6i64, 7, 8, 9] {
            assert_eq!(zeta_avg_exact(&spec, s), Err(Error::PrefactorPole));
            assert_eq!(
                zeta_avg(&spec, Complex64::new(s as f64, 0.0)),
                Err(Error::PrefactorPole)
            );
        }
        // Pole-ness, not zero-ness: the value blows up like a simple pole
        // as s → 1+α.
        let v = zeta_avg(&spec, Complex64::new(6.0 + 1e-6, 0.0)).unwrap();
        assert!(v.norm() > 1e3, "|ζ(6+1e−6)| = {}", v.norm());
        // Gaussian: odd positive arguments are prefactor poles.
        assert_eq!(
            zeta_avg(&gue(3), Complex64::new(1.0, 0.0)),
            Err(Error::PrefactorPole)
        );
        assert_eq!(
            zeta_avg_exact(&gue(3), 3),
            Err(Error::InvalidParameters(
                "exact Gaussian zeta averages need an even integer argument"
            ))
        );
    }

    #[test]
    fn jacobi_trivial_zeros_only_for_fractional_alpha1() {
        // Non-integer α₁: s = 1+g+j are genuine zeros of the average.
        let spec = jue(2, rat(1, 2), rat(3, 2));
        let g = 0.5 + 1.5 + 4.0;
        for j in 0..3 {
            let v = zeta_avg(&spec, Complex64::new(1.0 + g + j as f64, 0.0)).unwrap();
            assert_eq!(v, Complex64::new(0.0, 0.0));
        }
        // Integer α₁: the same points take finite nonzero limit values.
        let spec = jue(2, rat_i(1), rat_i(1));
        let gi = 1.0 + 1.0 + 4.0;
        let v = zeta_avg(&spec, Complex64::new(1.0 + gi, 0.0)).unwrap();
        assert!(v.norm() > 1e-12 && v.norm().is_finite());
        // Exact route agrees with the float limit there (s = 1 + g = 7).
        let ve = zeta_avg_exact(&spec, 7).unwrap();
        close(v.re, rational_to_f64(&ve), 1e-9);
    }

    #[test]
    fn zeta_avg_matches_independent_quadrature_freezes() {
        // Frozen by 40-digit quadrature of the explicit n = 2 eigenvalue
        // densities.
        let v = zeta_avg(&lue(2, 4), Complex64::new(0.3, 0.0)).unwrap();
        cclose(v, Complex64::new(1.490_621_841_245_823, 0.0), 1e-12);
        let v = zeta_avg(&lue(2, 4), Complex64::new(0.4, 1.1)).unwrap();
        cclose(
            v,
            Complex64::new(0.501_517_815_660_882, -0.657_336_305_130_432),
            1e-12,
        );
        let v = zeta_avg(&gue(2), Complex64::new(0.6, 0.0)).unwrap();
        cclose(v, Complex64::new(2.945_347_957_154_493_4, 0.0), 1e-12);
        let v = zeta_avg(
            &jue(2, rat(1, 2), rat(3, 2)),
            Complex64::new(0.4, 0.0),
        )
        .unwrap();
        cclose(v, Complex64::new(1.350_533_611_067_573_4, 0.0), 1e-12);
    }

    #[test]
    fn beta_guard_rejects_non_unitary_specs() {
        let spec = EnsembleSpec::gaussian(1, 3).unwrap();
        assert!(matches!(
            xi(&spec, &c_re(rat_i(0))),
            Err(Error::InvalidParameters(_))
        ));
        assert!(matches!(
            critical_zeros(&spec),
            Err(Error::InvalidParameters(_))
        ));
    }

    #[test]
    fn limit_gaussian_catalan_poles_zeros_and_freezes() {
        for k in 1..=5u32 {
            let v = zeta_limit(LimitShape::Gaussian, Complex64::new(-2.0 * f64::from(k), 0.0))
                .unwrap();
            close(v.re, rational_to_f64(&catalan(k as u64)), 1e-10);
            assert!(v.im.abs() < 1e-14);
        }
        for s in [1.0, 3.0, 5.0] {
            assert_eq!(
                zeta_limit(LimitShape::Gaussian, Complex64::new(s, 0.0)),
                Err(Error::PoleAtEvaluationPoint)
            );
        }
        for s in [4.0, 6.0] {
            let v = zeta_limit(LimitShape::Gaussian, Complex64::new(s, 0.0)).unwrap();
            assert_eq!(v, Complex64::new(0.0, 0.0));
        }
        let v = zeta_limit(LimitShape::Gaussian, Complex64::new(2.0, 0.0)).unwrap();
        cclose(v, Complex64::new(-0.5, 0.0), 1e-14);
        let v = zeta_limit(LimitShape::Gaussian, Complex64::new(0.3, 0.0)).unwrap();
        cclose(v, Complex64::new(1.233_919_814_311_430_3, 0.0), 1e-13);
        let v = zeta_limit(LimitShape::Gaussian, Complex64::new(-1.5, 0.0)).unwrap();
        cclose(v, Complex64::new(0.899_307_123_059_882_8, 0.0), 1e-13);
    }

    #[test]
    fn limit_laguerre_closed_form_freezes() {
        let sh = LimitShape::Laguerre { c: 2.0 };
        let v = zeta_limit(sh, Complex64::new(0.3, 0.0)).unwrap();
        cclose(v, Complex64::new(0.921_048_205_265_138_1, 0.0), 1e-12);
        let v = zeta_limit(sh, Complex64::new(0.5, 3.0)).unwrap();
        cclose(v, Complex64::new(-0.127_257_783_724_865_03, 0.0), 1e-12);
        let v = zeta_limit(sh, Complex64::new(2.5, 0.0)).unwrap();
        cclose(v, Complex64::new(3.347_325_163_052_135, 0.0), 1e-12);
        // Moments of the limit law (terminating / Euler-transformed side).
        let v = zeta_limit(sh, Complex64::new(-2.0, 0.0)).unwrap();
        cclose(v, Complex64::new(6.0, 0.0), 1e-12);
        let v = zeta_limit(sh, Complex64::new(-4.0, 0.0)).unwrap();
        cclose(v, Complex64::new(90.0, 0.0), 1e-12);
        assert!(matches!(
            zeta_limit(LimitShape::Laguerre { c: 1.0 }, Complex64::new(0.3, 0.0)),
            Err(Error::ParameterRange(_))
        ));
        assert!(matches!(
            zeta_limit(LimitShape::Laguerre { c: 0.5 }, Complex64::new(0.3, 0.0)),
            Err(Error::ParameterRange(_))
        ));
    }

    #[test]
    fn limit_jacobi_difference_and_plain_freezes() {
        let (c1, c2) = (2.0, 2.0);
        let v = jacobi_zeta_difference(c1, c2, Complex64::new(0.3, 0.0)).unwrap();
        cclose(v, Complex64::new(0.723_937_137_126_961, 0.0), 1e-12);
        let v = jacobi_zeta_difference(c1, c2, Complex64::new(0.5, 2.0)).unwrap();
        cclose(
            v,
            Complex64::new(-0.301_223_329_417_002_77, 0.116_488_389_752_352_7),
            1e-12,
        );
        let sh = LimitShape::Jacobi { c1, c2 };
        let v = zeta_limit(sh, Complex64::new(0.3, 0.0)).unwrap();
        cclose(v, Complex64::new(1.320_902_269_958_172_3, 0.0), 1e-9);
        let v = zeta_limit(sh, Complex64::new(0.5, 2.0)).unwrap();
        cclose(
            v,
            Complex64::new(-0.111_330_185_089_593_07, 0.476_316_025_397_937_8),
            1e-9,
        );
        // Difference consistency between the closed form and the plain
        // quadrature route.
        for s in [Complex64::new(0.3, 0.0), Complex64::new(0.5, 2.0)] {
            let d = jacobi_zeta_difference(c1, c2, s).unwrap();
            let p1 = zeta_limit(sh, s).unwrap();
            let p0 = zeta_limit(sh, s - Complex64::new(1.0, 0.0)).unwrap();
            cclose(d, p1 - p0, 1e-8);
        }
    }

    #[test]
    fn limit_functional_equation_residuals() {
        let lag = LimitShape::Laguerre { c: 2.0 };
        let jac = LimitShape::Jacobi { c1: 2.0, c2: 2.0 };
        for s in [
            Complex64::new(0.3, 0.0),
            Complex64::new(0.5, 3.0),
            Complex64::new(-0.7, 1.2),
            Complex64::new(2.2, -0.4),
        ] {
            assert!(xi_limit_functional_residual(lag, s).unwrap() < 1e-8);
        }
        for s in [
            Complex64::new(0.3, 0.0),
            Complex64::new(0.5, 2.0),
            Complex64::new(1.6, 0.8),
        ] {
            assert!(xi_limit_functional_residual(jac, s).unwrap() < 1e-8);
        }
        assert!(matches!(
            xi_limit(LimitShape::Gaussian, Complex64::new(0.3, 0.0)),
            Err(Error::InvalidParameters(_))
        ));
    }

    #[test]
    fn equilibrium_density_support_mass_and_values() {
        // Semicircle at the origin.
        let sc = LimitShape::Gaussian;
        close(sc.equilibrium_density(0.0).unwrap(), 1.0 / PI, 1e-15);
        assert_eq!(sc.equilibrium_density(2.5), Err(Error::OutOfSupport));
        // Marchenko–Pastur support endpoints at c = 2.
        let mp = LimitShape::Laguerre { c: 2.0 };
        let (lo, hi) = mp.support().unwrap();
        close(lo, 0.171_572_875_253_809_9, 1e-14);
        close(hi, 5.828_427_124_746_19, 1e-14);
        assert_eq!(mp.equilibrium_density(0.1), Err(Error::OutOfSupport));
        // Jacobi support at c₁ = c₂ = 2.
        let jj = LimitShape::Jacobi { c1: 2.0, c2: 2.0 };
        let (lo, hi) = jj.support().unwrap();
        close(lo, 0.066_987_298_107_780_68, 1e-13);
        close(hi, 0.933_012_701_892_219_3, 1e-13);
        // Unit mass for all three shapes.
        let cfg = QuadConfig::default();
        for shape in [sc, mp, jj] {
            let (lo, hi) = shape.support().unwrap();
            let w = hi - lo;
            let mass = integrate(
                |th: f64| {
                    let sn = fm::sin(th);
                    let cs = fm::cos(th);
                    let x = lo + w * sn * sn;
                    shape.equilibrium_density(x).unwrap_or(0.0) * w * 2.0 * sn * cs
                },
                0.0,
                FRAC_PI_2,
                &cfg,
            )
            .unwrap()
            .value;
            close(mass, 1.0, 1e-10);
        }
    }

    #[test]
    fn limit_closed_forms_match_density_quadrature() {
        let cfg = QuadConfig::default();
        // Gaussian (real s < 1).
        for s in [-1.5, -0.5, 0.3, 0.7] {
            let a = zeta_limit(LimitShape::Gaussian, Complex64::new(s, 0.0)).unwrap();
            let b =
                zeta_limit_quadrature_oracle(LimitShape::Gaussian, Complex64::new(s, 0.0), &cfg)
                    .unwrap();
            cclose(a, b, 1e-7);
        }
        // Laguerre c = 2.
        let lag = LimitShape::Laguerre { c: 2.0 };
        for s in [
            Complex64::new(0.3, 0.0),
            Complex64::new(2.5, 0.0),
            Complex64::new(0.5, 3.0),
            Complex64::new(-2.0, 0.0),
        ] {
            let a = zeta_limit(lag, s).unwrap();
            let b = zeta_limit_quadrature_oracle(lag, s, &cfg).unwrap();
            cclose(a, b, 1e-7);
        }
        // Jacobi difference (closed form) against quadrature differences.
        for s in [Complex64::new(0.3, 0.0), Complex64::new(0.5, 2.0)] {
            let jac = LimitShape::Jacobi { c1: 2.0, c2: 2.0 };
            let a = jacobi_zeta_difference(2.0, 2.0, s).unwrap();
            let b0 = zeta_limit_quadrature_oracle(jac, s, &cfg).unwrap();
            let b1 =
                zeta_limit_quadrature_oracle(jac, s - Complex64::new(1.0, 0.0), &cfg).unwrap();
            cclose(a, b0 - b1, 1e-7);
        }
    }

    #[test]
    fn critical_line_orthogonality_constants() {
        // The off-diagonal integrals are ~0, so the relative target is
        // unreachable and the absolute target must sit above the
        // error-estimator noise floor of the larger integrands; the
        // assertions below are at 1e−6 relative, 100× looser.
        let cfg = QuadConfig {
            abs_tol: 1e-7,
            rel_tol: 1e-12,
            max_segments: 4096,
        };
        // Gaussian diagonal: h_m = m/2 over the full line.
        for m in 1..=3u32 {
            let h = finite_n_orthogonality_check(Family::Gaussian, None, m, m, &cfg).unwrap();
            close(h, f64::from(m) / 2.0, 1e-6);
        }
        // Gaussian off-diagonal: zero by parity or by orthogonality.
        assert_eq!(
            finite_n_orthogonality_check(Family::Gaussian, None, 0, 1, &cfg).unwrap(),
            0.0
        );
        assert_eq!(
            finite_n_orthogonality_check(Family::Gaussian, None, 1, 2, &cfg).unwrap(),
            0.0
        );
        let off = finite_n_orthogonality_check(Family::Gaussian, None, 1, 3, &cfg).unwrap();
        assert!(off < 1e-6, "G(1,3) = {off}");
        let off = finite_n_orthogonality_check(Family::Gaussian, None, 2, 4, &cfg).unwrap();
        assert!(off < 1e-6, "G(2,4) = {off}");
        // Laguerre, α = 3: h_m = m(m+α).
        let alpha = rat_i(3);
        for m in 1..=2u32 {
            let h =
                finite_n_orthogonality_check(Family::Laguerre, Some(&alpha), m, m, &cfg).unwrap();
            close(h, f64::from(m) * (f64::from(m) + 3.0), 1e-6);
        }
        for (m, n) in [(1u32, 2u32), (1, 3), (2, 3)] {
            let off =
                finite_n_orthogonality_check(Family::Laguerre, Some(&alpha), m, n, &cfg).unwrap();
            let sym =
                finite_n_orthogonality_check(Family::Laguerre, Some(&alpha), n, m, &cfg).unwrap();
            let scale = fm::sqrt(
                f64::from(m) * (f64::from(m) + 3.0) * f64::from(n) * (f64::from(n) + 3.0),
            );
            assert!(off < 1e-6 * scale, "L({m},{n}) = {off}");
            assert!((off - sym).abs() < 1e-12);
        }
        // Jacobi routes to the Neretin check.
        assert!(matches!(
            finite_n_orthogonality_check(Family::Jacobi, None, 1, 1, &cfg),
            Err(Error::InvalidParameters(_))
        ));
    }

    #[test]
    fn neretin_diagonal_matches_closed_norm() {
        let cfg = QuadConfig::default();
        for (a1, a2, n) in [
            (rat_i(2), rat_i(1), 2u32),
            (rat_i(2), rat_i(1), 1),
            (rat(5, 2), rat(3, 2), 2),
        ] {
            let r = jue_neretin_diagonal_residual(&a1, &a2, n, &cfg).unwrap();
            assert!(r < 1e-6, "Neretin residual {r} at {a1}/{a2}, n = {n}");
        }
        assert!(matches!(
            jue_neretin_diagonal_residual(&rat(-1, 4), &rat_i(1), 2, &cfg),
            Err(Error::ParameterRange(_))
        ));
    }
}

