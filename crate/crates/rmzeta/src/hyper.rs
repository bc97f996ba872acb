//! Terminating hypergeometric series and the Askey-scheme polynomial families.
//!
//! Everything here is exact: polynomial coefficients and point values are
//! Gaussian rationals, and every family's difference / Sturm–Liouville
//! equation residual is exactly zero (not merely small). Floating-point
//! enters only in [`orthogonality_quadrature`], which integrates the weighted
//! products numerically, and in [`mp_eval_f64`], the general-phase
//! Meixner–Pollaczek evaluator.
//!
//! ## Conventions
//!
//! * Hermite `Hₙ` is the physicists' polynomial (`H₂ = 4x² − 2`), orthogonal
//!   w.r.t. `e^{−x²}` on ℝ.
//! * Laguerre `Lₙ^{(α)}(x) = ((α+1)ₙ/n!)·₁F₁(−n; α+1; x)` — note the **+x**
//!   series argument; orthogonality w.r.t. `x^α e^{−x}` on `[0, ∞)` holds
//!   with this sign because `₁F₁(−n; α+1; x) = (−1)ⁿ n!/(α+1)ₙ · (classical)`
//!   up to the usual reflection. Concretely `L₁^{(α)} = α + 1 − x`.
//! * Jacobi lives on `[0, 1]` with weight `(1−x)^{α₁} x^{α₂}`:
//!   `Pₙ^{(α₁,α₂)}(x) = ((α₁+1)ₙ/n!)·₂F₁(−n, n+α₁+α₂+1; α₁+1; 1−x)`.
//! * Meixner `Mₙ(x; β, c) = ₂F₁(−n, −x; β; 1 − 1/c)`, self-dual in `n ↔ x`.
//! * Hahn/dual Hahn/Racah are the standard `₃F₂`/`₄F₃` forms; for dual Hahn
//!   and Racah the polynomial variable is `λ(x) = x(x+γ+δ+1)` and callers
//!   pass the spectral point `x` itself (see [`spectral_variable`]).
//! * Meixner–Pollaczek is exact only at phase `φ = π/2`, where
//!   `Pₙ^{(λ)}(x; π/2) = iⁿ (2λ)ₙ/n! · ₂F₁(−n, λ+ix; 2λ; 2)` is a polynomial
//!   with Gaussian-rational data. Other phases go through the float path.
//! * Continuous Hahn `pₙ(x; a,b,c,d)`, continuous dual Hahn `Sₙ(x²; a,b,c)`
//!   and Wilson `Wₙ(x²; a,b,c,d)` follow the standard normalizations; the
//!   latter two are polynomials in `x²`.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{
    as_nonpos_integer, c_i, c_re, crat_i, factorial, i_pow, pochhammer_rat, rat, rat_i,
    rational_to_f64, ComplexRational, Rational,
};
use crate::fm;
use crate::poly::Poly;
use crate::quad::{self, QuadConfig};

pub use crate::exact::pochhammer;

/// Parameter set selecting one Askey-scheme family.
///
/// All parameters are exact rationals. The discrete lattice families carry
/// their lattice size `n_max` (`N` in the classical notation); Racah encodes
/// `N` implicitly through one of `α+1`, `β+δ+1`, `γ+1` being `−N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OPParams {
    /// Physicists' Hermite polynomials, weight `e^{−x²}` on ℝ.
    Hermite,
    /// Laguerre polynomials, weight `x^α e^{−x}` on `[0, ∞)`.
    Laguerre {
        /// Weight exponent `α` (orthogonality needs `α > −1`).
        alpha: Rational,
    },
    /// Jacobi polynomials on `[0, 1]`, weight `(1−x)^{α₁} x^{α₂}`.
    Jacobi {
        /// Exponent of `(1−x)`.
        alpha1: Rational,
        /// Exponent of `x`.
        alpha2: Rational,
    },
    /// Meixner polynomials on the lattice `x = 0, 1, 2, …`.
    Meixner {
        /// Weight shape parameter `β`.
        beta: Rational,
        /// Weight ratio parameter `c` (nonzero; orthogonality needs `0<c<1`).
        c: Rational,
    },
    /// Hahn polynomials on `{0, …, N}`.
    Hahn {
        /// First weight exponent `α`.
        alpha: Rational,
        /// Second weight exponent `β`.
        beta: Rational,
        /// Lattice size `N`.
        n_max: u32,
    },
    /// Dual Hahn polynomials in `λ(x) = x(x+γ+δ+1)` on `{0, …, N}`.
    DualHahn {
        /// Parameter `γ`.
        gamma: Rational,
        /// Parameter `δ`.
        delta: Rational,
        /// Lattice size `N`.
        n_max: u32,
    },
    /// Racah polynomials in `λ(x) = x(x+γ+δ+1)`.
    Racah {
        /// Parameter `α`.
        alpha: Rational,
        /// Parameter `β`.
        beta: Rational,
        /// Parameter `γ`.
        gamma: Rational,
        /// Parameter `δ`.
        delta: Rational,
    },
    /// Meixner–Pollaczek polynomials `Pₙ^{(λ)}(x; φ)`.
    MeixnerPollaczek {
        /// Positive shape parameter `λ`.
        lambda: Rational,
        /// Phase as a fraction of π; exact evaluation requires the value 1/2.
        phase_over_pi: Rational,
    },
    /// Continuous Hahn polynomials `pₙ(x; a, b, c, d)`.
    ContinuousHahn {
        /// Parameter `a`.
        a: Rational,
        /// Parameter `b`.
        b: Rational,
        /// Parameter `c`.
        c: Rational,
        /// Parameter `d`.
        d: Rational,
    },
    /// Continuous dual Hahn polynomials `Sₙ(x²; a, b, c)`.
    ContinuousDualHahn {
        /// Parameter `a`.
        a: Rational,
        /// Parameter `b`.
        b: Rational,
        /// Parameter `c`.
        c: Rational,
    },
    /// Wilson polynomials `Wₙ(x²; a, b, c, d)`.
    Wilson {
        /// Parameter `a`.
        a: Rational,
        /// Parameter `b`.
        b: Rational,
        /// Parameter `c`.
        c: Rational,
        /// Parameter `d`.
        d: Rational,
    },
}

impl OPParams {
    /// Meixner–Pollaczek parameters at the exact phase `φ = π/2`.
    pub fn meixner_pollaczek(lambda: Rational) -> Self {
        OPParams::MeixnerPollaczek {
            lambda,
            phase_over_pi: rat(1, 2),
        }
    }

    /// Short lowercase family name, used in diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            OPParams::Hermite => "hermite",
            OPParams::Laguerre { .. } => "laguerre",
            OPParams::Jacobi { .. } => "jacobi",
            OPParams::Meixner { .. } => "meixner",
            OPParams::Hahn { .. } => "hahn",
            OPParams::DualHahn { .. } => "dual-hahn",
            OPParams::Racah { .. } => "racah",
            OPParams::MeixnerPollaczek { .. } => "meixner-pollaczek",
            OPParams::ContinuousHahn { .. } => "continuous-hahn",
            OPParams::ContinuousDualHahn { .. } => "continuous-dual-hahn",
            OPParams::Wilson { .. } => "wilson",
        }
    }

    fn require_exact_phase(&self) -> Result<()> {
        if let OPParams::MeixnerPollaczek { phase_over_pi, .. } = self {
            if *phase_over_pi != rat(1, 2) {
                return Err(Error::UnsupportedExactPhase);
            }
        }
        Ok(())
    }
}

/// `i·z` for a Gaussian rational.
fn times_i(z: &ComplexRational) -> ComplexRational {
    ComplexRational::new(-z.im.clone(), z.re.clone())
}

/// `x ± 1` and `x ± i` shift helpers.
fn shift_re(x: &ComplexRational, k: i64) -> ComplexRational {
    x.clone() + crat_i(k)
}
fn shift_im(x: &ComplexRational, k: i64) -> ComplexRational {
    x.clone() + c_i() * crat_i(k)
}

/// Terminating generalized hypergeometric sum
/// `Σ_{j=0}^{nmax} (a₁)ⱼ…(a_p)ⱼ / ((b₁)ⱼ…(b_q)ⱼ j!) zʲ`.
///
/// The sum stops early (and exactly) as soon as a numerator Pochhammer factor
/// vanishes — every later term contains the same zero factor. Termination is
/// checked **before** denominator poles at the same index, matching the
/// convention that e.g. a Hahn polynomial of top degree `n = N` is still
/// well defined.
///
/// # Errors
/// [`Error::DenominatorPole`] when a denominator factor `(b + j)` vanishes
/// before the series has terminated.
pub fn pfq_terminating(
    num: &[ComplexRational],
    den: &[ComplexRational],
    z: &ComplexRational,
    nmax: u32,
) -> Result<ComplexRational> {
    let mut sum = ComplexRational::one();
    let mut term = ComplexRational::one();
    for j in 0..nmax {
        let jc = crat_i(i64::from(j));
        let mut num_factor = z.clone();
        let mut terminated = false;
        for a in num {
            let f = a.clone() + jc.clone();
            if f.is_zero() {
                terminated = true;
                break;
            }
            num_factor *= f;
        }
        if terminated || num_factor.is_zero() {
            break;
        }
        let mut den_factor = crat_i(i64::from(j) + 1);
        for b in den {
            let f = b.clone() + jc.clone();
            if f.is_zero() {
                return Err(Error::DenominatorPole { term: j + 1 });
            }
            den_factor *= f;
        }
        term = term * num_factor / den_factor;
        sum += term.clone();
    }
    Ok(sum)
}

/// The value of the internal polynomial variable at the spectral point `x`.
///
/// Most families are polynomials in `x` itself; continuous dual Hahn and
/// Wilson are polynomials in `x²`; dual Hahn and Racah are polynomials in
/// `λ(x) = x(x+γ+δ+1)`. [`op_coefficients`] returns the polynomial in this
/// variable, so for every family and every point
/// `op_eval(p, n, x) = op_coefficients(p, n).eval(spectral_variable(p, x))`.
pub fn spectral_variable(params: &OPParams, x: &ComplexRational) -> ComplexRational {
    match params {
        OPParams::ContinuousDualHahn { .. } | OPParams::Wilson { .. } => x.clone() * x.clone(),
        OPParams::DualHahn { gamma, delta, .. }
        | OPParams::Racah { gamma, delta, .. } => {
            let s = c_re(gamma.clone() + delta.clone() + rat_i(1));
            x.clone() * (x.clone() + s)
        }
        _ => x.clone(),
    }
}

/// Exact value of the degree-`n` family polynomial at the spectral point `x`.
///
/// # Errors
/// [`Error::DenominatorPole`] from the underlying series;
/// [`Error::UnsupportedExactPhase`] for Meixner–Pollaczek away from `φ = π/2`;
/// [`Error::InvalidParameters`] for a zero Meixner ratio parameter.
pub fn op_eval(params: &OPParams, n: u32, x: &ComplexRational) -> Result<ComplexRational> {
    params.require_exact_phase()?;
    let nn = i64::from(n);
    let minus_n = crat_i(-nn);
    match params {
        OPParams::Hermite => {
            let two_x = crat_i(2) * x.clone();
            let mut acc = ComplexRational::zero();
            for j in 0..=n / 2 {
                let mut coeff = factorial(u64::from(n))
                    / (factorial(u64::from(j)) * factorial(u64::from(n - 2 * j)));
                if j % 2 == 1 {
                    coeff = -coeff;
                }
                acc += c_re(coeff) * two_x.powu(n - 2 * j);
            }
            Ok(acc)
        }
        OPParams::Laguerre { alpha } => {
            let pre = c_re(
                pochhammer_rat(&(alpha.clone() + rat_i(1)), u64::from(n)) / factorial(u64::from(n)),
            );
            let v = pfq_terminating(&[minus_n], &[c_re(alpha.clone() + rat_i(1))], x, n)?;
            Ok(pre * v)
        }
        OPParams::Jacobi { alpha1, alpha2 } => {
            let pre = c_re(
                pochhammer_rat(&(alpha1.clone() + rat_i(1)), u64::from(n))
                    / factorial(u64::from(n)),
            );
            let s = alpha1.clone() + alpha2.clone() + rat_i(1);
            let v = pfq_terminating(
                &[minus_n, c_re(s + rat_i(nn))],
                &[c_re(alpha1.clone() + rat_i(1))],
                &(crat_i(1) - x.clone()),
                n,
            )?;
            Ok(pre * v)
        }
        OPParams::Meixner { beta, c } => {
            if c.is_zero() {
                return Err(Error::InvalidParameters("meixner parameter c must be nonzero"));
            }
            let z = c_re(rat_i(1) - c.recip());
            pfq_terminating(&[minus_n, -x.clone()], &[c_re(beta.clone())], &z, n)
        }
        OPParams::Hahn { alpha, beta, n_max } => {
            let s = alpha.clone() + beta.clone() + rat_i(1);
            pfq_terminating(
                &[minus_n, c_re(s + rat_i(nn)), -x.clone()],
                &[
                    c_re(alpha.clone() + rat_i(1)),
                    crat_i(-i64::from(*n_max)),
                ],
                &crat_i(1),
                n,
            )
        }
        OPParams::DualHahn { gamma, delta, n_max } => {
            let s = c_re(gamma.clone() + delta.clone() + rat_i(1));
            pfq_terminating(
                &[minus_n, -x.clone(), x.clone() + s],
                &[
                    c_re(gamma.clone() + rat_i(1)),
                    crat_i(-i64::from(*n_max)),
                ],
                &crat_i(1),
                n,
            )
        }
        OPParams::Racah { alpha, beta, gamma, delta } => {
            let e = alpha.clone() + beta.clone() + rat_i(1);
            let s = c_re(gamma.clone() + delta.clone() + rat_i(1));
            pfq_terminating(
                &[minus_n, c_re(e + rat_i(nn)), -x.clone(), x.clone() + s],
                &[
                    c_re(alpha.clone() + rat_i(1)),
                    c_re(beta.clone() + delta.clone() + rat_i(1)),
                    c_re(gamma.clone() + rat_i(1)),
                ],
                &crat_i(1),
                n,
            )
        }
        OPParams::MeixnerPollaczek { lambda, .. } => {
            let two_lambda = lambda.clone() + lambda.clone();
            let pre = i_pow(nn)
                * c_re(pochhammer_rat(&two_lambda, u64::from(n)) / factorial(u64::from(n)));
            let v = pfq_terminating(
                &[minus_n, c_re(lambda.clone()) + times_i(x)],
                &[c_re(two_lambda)],
                &crat_i(2),
                n,
            )?;
            Ok(pre * v)
        }
        OPParams::ContinuousHahn { a, b, c, d } => {
            let e = a.clone() + b.clone() + c.clone() + d.clone();
            let pre = i_pow(nn)
                * c_re(
                    pochhammer_rat(&(a.clone() + c.clone()), u64::from(n))
                        * pochhammer_rat(&(a.clone() + d.clone()), u64::from(n))
                        / factorial(u64::from(n)),
                );
            let v = pfq_terminating(
                &[
                    minus_n,
                    c_re(e + rat_i(nn - 1)),
                    c_re(a.clone()) + times_i(x),
                ],
                &[c_re(a.clone() + c.clone()), c_re(a.clone() + d.clone())],
                &crat_i(1),
                n,
            )?;
            Ok(pre * v)
        }
        OPParams::ContinuousDualHahn { a, b, c } => {
            let pre = c_re(
                pochhammer_rat(&(a.clone() + b.clone()), u64::from(n))
                    * pochhammer_rat(&(a.clone() + c.clone()), u64::from(n)),
            );
            let v = pfq_terminating(
                &[
                    minus_n,
                    c_re(a.clone()) + times_i(x),
                    c_re(a.clone()) - times_i(x),
                ],
                &[c_re(a.clone() + b.clone()), c_re(a.clone() + c.clone())],
                &crat_i(1),
                n,
            )?;
            Ok(pre * v)
        }
        OPParams::Wilson { a, b, c, d } => {
            let e = a.clone() + b.clone() + c.clone() + d.clone();
            let pre = c_re(
                pochhammer_rat(&(a.clone() + b.clone()), u64::from(n))
                    * pochhammer_rat(&(a.clone() + c.clone()), u64::from(n))
                    * pochhammer_rat(&(a.clone() + d.clone()), u64::from(n)),
            );
            let v = pfq_terminating(
                &[
                    minus_n,
                    c_re(e + rat_i(nn - 1)),
                    c_re(a.clone()) + times_i(x),
                    c_re(a.clone()) - times_i(x),
                ],
                &[
                    c_re(a.clone() + b.clone()),
                    c_re(a.clone() + c.clone()),
                    c_re(a.clone() + d.clone()),
                ],
                &crat_i(1),
                n,
            )?;
            Ok(pre * v)
        }
    }
}

/// Accumulate `prefactor · Σⱼ sⱼ Φⱼ(v)` where `s₀ = 1`, `Φ₀ = 1`,
/// `s_{j+1}/sⱼ = num(j)/den(j)` and `Φ_{j+1}/Φⱼ = var_step(j)`.
fn series_poly<SF, XF>(n: u32, prefactor: ComplexRational, scalar_step: SF, var_step: XF) -> Result<Poly>
where
    SF: Fn(u32) -> (ComplexRational, ComplexRational),
    XF: Fn(u32) -> Poly,
{
    let mut acc = Poly::constant(ComplexRational::one());
    let mut term_scalar = ComplexRational::one();
    let mut term_poly = Poly::constant(ComplexRational::one());
    for j in 0..n {
        let (num, den) = scalar_step(j);
        if num.is_zero() {
            break;
        }
        if den.is_zero() {
            return Err(Error::DenominatorPole { term: j + 1 });
        }
        term_scalar = term_scalar * num / den;
        term_poly = term_poly.mul(&var_step(j));
        acc = acc.add(&term_poly.scale(&term_scalar));
    }
    Ok(acc.scale(&prefactor))
}

/// Coefficients of the degree-`n` family polynomial **in its spectral
/// variable** (see [`spectral_variable`]), low degree first.
///
/// Built by symbolic accumulation of the terminating series, which is a
/// different code path from [`op_eval`]'s scalar summation; agreement of the
/// two routes at rational points is part of the test suite.
///
/// # Errors
/// As [`op_eval`].
pub fn op_coefficients(params: &OPParams, n: u32) -> Result<Poly> {
    params.require_exact_phase()?;
    let nn = i64::from(n);
    match params {
        OPParams::Hermite => {
            let mut prev = Poly::constant(ComplexRational::one());
            if n == 0 {
                return Ok(prev);
            }
            let two_x = Poly::new(vec![crat_i(0), crat_i(2)]);
            let mut cur = two_x.clone();
            for j in 1..n {
                let next = two_x
                    .mul(&cur)
                    .sub(&prev.scale(&crat_i(2 * i64::from(j))));
                prev = cur;
                cur = next;
            }
            Ok(cur)
        }
        OPParams::Laguerre { alpha } => series_poly(
            n,
            c_re(pochhammer_rat(&(alpha.clone() + rat_i(1)), u64::from(n)) / factorial(u64::from(n))),
            |j| {
                let jj = i64::from(j);
                (
                    crat_i(jj - nn),
                    c_re((alpha.clone() + rat_i(1 + jj)) * rat_i(jj + 1)),
                )
            },
            |_| Poly::x(),
        ),
        OPParams::Jacobi { alpha1, alpha2 } => {
            let s = alpha1.clone() + alpha2.clone() + rat_i(1);
            series_poly(
                n,
                c_re(
                    pochhammer_rat(&(alpha1.clone() + rat_i(1)), u64::from(n))
                        / factorial(u64::from(n)),
                ),
                |j| {
                    let jj = i64::from(j);
                    (
                        c_re(rat_i(jj - nn) * (s.clone() + rat_i(nn + jj))),
                        c_re((alpha1.clone() + rat_i(1 + jj)) * rat_i(jj + 1)),
                    )
                },
                |_| Poly::new(vec![crat_i(1), crat_i(-1)]),
            )
        }
        OPParams::Meixner { beta, c } => {
            if c.is_zero() {
                return Err(Error::InvalidParameters("meixner parameter c must be nonzero"));
            }
            let z = rat_i(1) - c.recip();
            series_poly(
                n,
                ComplexRational::one(),
                |j| {
                    let jj = i64::from(j);
                    (
                        c_re(rat_i(jj - nn) * z.clone()),
                        c_re((beta.clone() + rat_i(jj)) * rat_i(jj + 1)),
                    )
                },
                |j| Poly::new(vec![crat_i(i64::from(j)), crat_i(-1)]),
            )
        }
        OPParams::Hahn { alpha, beta, n_max } => {
            let s = alpha.clone() + beta.clone() + rat_i(1);
            let cap = i64::from(*n_max);
            series_poly(
                n,
                ComplexRational::one(),
                |j| {
                    let jj = i64::from(j);
                    (
                        c_re(rat_i(jj - nn) * (s.clone() + rat_i(nn + jj))),
                        c_re(
                            (alpha.clone() + rat_i(1 + jj))
                                * rat_i(jj - cap)
                                * rat_i(jj + 1),
                        ),
                    )
                },
                |j| Poly::new(vec![crat_i(i64::from(j)), crat_i(-1)]),
            )
        }
        OPParams::DualHahn { gamma, delta, n_max } => {
            let s = gamma.clone() + delta.clone() + rat_i(1);
            let cap = i64::from(*n_max);
            series_poly(
                n,
                ComplexRational::one(),
                |j| {
                    let jj = i64::from(j);
                    (
                        crat_i(jj - nn),
                        c_re(
                            (gamma.clone() + rat_i(1 + jj))
                                * rat_i(jj - cap)
                                * rat_i(jj + 1),
                        ),
                    )
                },
                |j| {
                    let jj = i64::from(j);
                    Poly::new(vec![
                        c_re(rat_i(jj) * (rat_i(jj) + s.clone())),
                        crat_i(-1),
                    ])
                },
            )
        }
        OPParams::Racah { alpha, beta, gamma, delta } => {
            let e = alpha.clone() + beta.clone() + rat_i(1);
            let s = gamma.clone() + delta.clone() + rat_i(1);
            series_poly(
                n,
                ComplexRational::one(),
                |j| {
                    let jj = i64::from(j);
                    (
                        c_re(rat_i(jj - nn) * (e.clone() + rat_i(nn + jj))),
                        c_re(
                            (alpha.clone() + rat_i(1 + jj))
                                * (beta.clone() + delta.clone() + rat_i(1 + jj))
                                * (gamma.clone() + rat_i(1 + jj))
                                * rat_i(jj + 1),
                        ),
                    )
                },
                |j| {
                    let jj = i64::from(j);
                    Poly::new(vec![
                        c_re(rat_i(jj) * (rat_i(jj) + s.clone())),
                        crat_i(-1),
                    ])
                },
            )
        }
        OPParams::MeixnerPollaczek { lambda, .. } => {
            let two_lambda = lambda.clone() + lambda.clone();
            series_poly(
                n,
                i_pow(nn)
                    * c_re(pochhammer_rat(&two_lambda, u64::from(n)) / factorial(u64::from(n))),
                |j| {
                    let jj = i64::from(j);
                    (
                        crat_i(2 * (jj - nn)),
                        c_re((two_lambda.clone() + rat_i(jj)) * rat_i(jj + 1)),
                    )
                },
                |j| Poly::new(vec![c_re(lambda.clone() + rat_i(i64::from(j))), c_i()]),
            )
        }
        OPParams::ContinuousHahn { a, b, c, d } => {
            let e = a.clone() + b.clone() + c.clone() + d.clone();
            series_poly(
                n,
                i_pow(nn)
                    * c_re(
                        pochhammer_rat(&(a.clone() + c.clone()), u64::from(n))
                            * pochhammer_rat(&(a.clone() + d.clone()), u64::from(n))
                            / factorial(u64::from(n)),
                    ),
                |j| {
                    let jj = i64::from(j);
                    (
                        c_re(rat_i(jj - nn) * (e.clone() + rat_i(nn - 1 + jj))),
                        c_re(
                            (a.clone() + c.clone() + rat_i(jj))
                                * (a.clone() + d.clone() + rat_i(jj))
                                * rat_i(jj + 1),
                        ),
                    )
                },
                |j| Poly::new(vec![c_re(a.clone() + rat_i(i64::from(j))), c_i()]),
            )
        }
        OPParams::ContinuousDualHahn { a, b, c } => series_poly(
            n,
            c_re(
                pochhammer_rat(&(a.clone() + b.clone()), u64::from(n))
                    * pochhammer_rat(&(a.clone() + c.clone()), u64::from(n)),
            ),
            |j| {
                let jj = i64::from(j);
                (
                    crat_i(jj - nn),
                    c_re(
                        (a.clone() + b.clone() + rat_i(jj))
                            * (a.clone() + c.clone() + rat_i(jj))
                            * rat_i(jj + 1),
                    ),
                )
            },
            |j| {
                let aj = a.clone() + rat_i(i64::from(j));
                Poly::new(vec![c_re(aj.clone() * aj), crat_i(1)])
            },
        ),
        OPParams::Wilson { a, b, c, d } => {
            let e = a.clone() + b.clone() + c.clone() + d.clone();
            series_poly(
                n,
                c_re(
                    pochhammer_rat(&(a.clone() + b.clone()), u64::from(n))
                        * pochhammer_rat(&(a.clone() + c.clone()), u64::from(n))
                        * pochhammer_rat(&(a.clone() + d.clone()), u64::from(n)),
                ),
                |j| {
                    let jj = i64::from(j);
                    (
                        c_re(rat_i(jj - nn) * (e.clone() + rat_i(nn - 1 + jj))),
                        c_re(
                            (a.clone() + b.clone() + rat_i(jj))
                                * (a.clone() + c.clone() + rat_i(jj))
                                * (a.clone() + d.clone() + rat_i(jj))
                                * rat_i(jj + 1),
                        ),
                    )
                },
                |j| {
                    let aj = a.clone() + rat_i(i64::from(j));
                    Poly::new(vec![c_re(aj.clone() * aj), crat_i(1)])
                },
            )
        }
    }
}

/// `B(x)` and `D(x)` of the lattice difference equation
/// `B·y(x+1) − (B+D)·y(x) + D·y(x−1) = λₙ·y(x)` for the four real-lattice
/// families, evaluated exactly at a (complex rational) point.
///
/// These same functions drive the Pearson weight ratio
/// `w(x+1)/w(x) = B(x)/D(x+1)`, which is how the finite orthogonality sums
/// are built without any independently stated weight formula.
fn discrete_bd(params: &OPParams, x: &ComplexRational) -> Result<(ComplexRational, ComplexRational)> {
    match params {
        OPParams::Meixner { beta, c } => {
            let b = c_re(c.clone()) * (x.clone() + c_re(beta.clone()));
            let d = x.clone();
            Ok((b, d))
        }
        OPParams::Hahn { alpha, beta, n_max } => {
            let cap = crat_i(i64::from(*n_max));
            let b = (x.clone() + c_re(alpha.clone() + rat_i(1))) * (x.clone() - cap.clone());
            let d = x.clone() * (x.clone() - c_re(beta.clone()) - cap - crat_i(1));
            Ok((b, d))
        }
        OPParams::DualHahn { gamma, delta, n_max } => {
            let s = c_re(gamma.clone() + delta.clone()); // γ+δ
            let cap = crat_i(i64::from(*n_max));
            let two_x = crat_i(2) * x.clone();
            let den_b = (two_x.clone() + s.clone() + crat_i(1)) * (two_x.clone() + s.clone() + crat_i(2));
            let den_d = (two_x.clone() + s.clone()) * (two_x + s.clone() + crat_i(1));
            if den_b.is_zero() || den_d.is_zero() {
                return Err(Error::PoleAtEvaluationPoint);
            }
            let b = (x.clone() + c_re(gamma.clone() + rat_i(1)))
                * (x.clone() + s.clone() + crat_i(1))
                * (cap.clone() - x.clone())
                / den_b;
            let d = x.clone()
                * (x.clone() + s + cap + crat_i(1))
                * (x.clone() + c_re(delta.clone()))
                / den_d;
            Ok((b, d))
        }
        OPParams::Racah { alpha, beta, gamma, delta } => {
            let s = c_re(gamma.clone() + delta.clone()); // γ+δ
            let two_x = crat_i(2) * x.clone();
            let den_b = (two_x.clone() + s.clone() + crat_i(1)) * (two_x.clone() + s.clone() + crat_i(2));
            let den_d = (two_x.clone() + s.clone()) * (two_x + s.clone() + crat_i(1));
            if den_b.is_zero() || den_d.is_zero() {
                return Err(Error::PoleAtEvaluationPoint);
            }
            let b = (x.clone() + c_re(alpha.clone() + rat_i(1)))
                * (x.clone() + c_re(beta.clone() + delta.clone() + rat_i(1)))
                * (x.clone() + c_re(gamma.clone() + rat_i(1)))
                * (x.clone() + s.clone() + crat_i(1))
                / den_b;
            let d = x.clone()
                * (x.clone() - c_re(alpha.clone()) + s.clone())
                * (x.clone() - c_re(beta.clone()) + c_re(gamma.clone()))
                * (x.clone() + c_re(delta.clone()))
                / den_d;
            Ok((b, d))
        }
        _ => Err(Error::InvalidParameters("not a real-lattice family")),
    }
}

/// Left-minus-right residual of the family's difference / Sturm–Liouville
/// equation at the point `x`; exactly zero for every family polynomial.
///
/// # Errors
/// [`Error::PoleAtEvaluationPoint`] at poles of the equation coefficients
/// (`x ∈ {0, ±i/2}` for Wilson and continuous dual Hahn, lattice half-integer
/// symmetry points for dual Hahn/Racah); otherwise as [`op_eval`].
pub fn sl_residual(params: &OPParams, n: u32, x: &ComplexRational) -> Result<ComplexRational> {
    params.require_exact_phase()?;
    let nn = i64::from(n);
    match params {
        OPParams::Hermite => {
            let p = op_coefficients(params, n)?;
            let d1 = p.derivative();
            let d2 = d1.derivative();
            let y = p.eval(x);
            Ok(d2.eval(x) - crat_i(2) * x.clone() * d1.eval(x) + crat_i(2 * nn) * y)
        }
        OPParams::Laguerre { alpha } => {
            let p = op_coefficients(params, n)?;
            let d1 = p.derivative();
            let d2 = d1.derivative();
            let lin = c_re(alpha.clone() + rat_i(1)) - x.clone();
            Ok(x.clone() * d2.eval(x) + lin * d1.eval(x) + crat_i(nn) * p.eval(x))
        }
        OPParams::Jacobi { alpha1, alpha2 } => {
            let p = op_coefficients(params, n)?;
            let d1 = p.derivative();
            let d2 = d1.derivative();
            let s = alpha1.clone() + alpha2.clone();
            let quad_coef = x.clone() * (crat_i(1) - x.clone());
            let lin = c_re(alpha2.clone() + rat_i(1)) - c_re(s.clone() + rat_i(2)) * x.clone();
            let eig = c_re(rat_i(nn) * (rat_i(nn) + s + rat_i(1)));
            Ok(quad_coef * d2.eval(x) + lin * d1.eval(x) + eig * p.eval(x))
        }
        OPParams::Meixner { beta: _, c } => {
            let yp = op_eval(params, n, &shift_re(x, 1))?;
            let y0 = op_eval(params, n, x)?;
            let ym = op_eval(params, n, &shift_re(x, -1))?;
            let (b, d) = discrete_bd(params, x)?;
            let eig = c_re((c.clone() - rat_i(1)) * rat_i(nn));
            Ok(b.clone() * yp - (b + d.clone()) * y0.clone() + d * ym - eig * y0)
        }
        OPParams::Hahn { alpha, beta, .. } => {
            let yp = op_eval(params, n, &shift_re(x, 1))?;
            let y0 = op_eval(params, n, x)?;
            let ym = op_eval(params, n, &shift_re(x, -1))?;
            let (b, d) = discrete_bd(params, x)?;
            let eig = c_re(rat_i(nn) * (rat_i(nn) + alpha.clone() + beta.clone() + rat_i(1)));
            Ok(b.clone() * yp - (b + d.clone()) * y0.clone() + d * ym - eig * y0)
        }
        OPParams::DualHahn { .. } => {
            let yp = op_eval(params, n, &shift_re(x, 1))?;
            let y0 = op_eval(params, n, x)?;
            let ym = op_eval(params, n, &shift_re(x, -1))?;
            let (b, d) = discrete_bd(params, x)?;
            Ok(b.clone() * yp - (b + d.clone()) * y0.clone() + d * ym + crat_i(nn) * y0)
        }
        OPParams::Racah { alpha, beta, .. } => {
            let yp = op_eval(params, n, &shift_re(x, 1))?;
            let y0 = op_eval(params, n, x)?;
            let ym = op_eval(params, n, &shift_re(x, -1))?;
            let (b, d) = discrete_bd(params, x)?;
            let eig = c_re(rat_i(nn) * (rat_i(nn) + alpha.clone() + beta.clone() + rat_i(1)));
            Ok(b.clone() * yp - (b + d.clone()) * y0.clone() + d * ym - eig * y0)
        }
        OPParams::MeixnerPollaczek { lambda, .. } => {
            let yp = op_eval(params, n, &shift_im(x, 1))?;
            let y0 = op_eval(params, n, x)?;
            let ym = op_eval(params, n, &shift_im(x, -1))?;
            let lam = c_re(lambda.clone());
            let ix = times_i(x);
            let eig = crat_i(2) * (crat_i(nn) + lam.clone());
            Ok((lam.clone() - ix.clone()) * yp + (lam + ix) * ym - eig * y0)
        }
        OPParams::ContinuousHahn { a, b, c, d } => {
            let yp = op_eval(params, n, &shift_im(x, 1))?;
            let y0 = op_eval(params, n, x)?;
            let ym = op_eval(params, n, &shift_im(x, -1))?;
            let ix = times_i(x);
            let bb = (c_re(c.clone()) - ix.clone()) * (c_re(d.clone()) - ix.clone());
            let dd = (c_re(a.clone()) + ix.clone()) * (c_re(b.clone()) + ix);
            let e = a.clone() + b.clone() + c.clone() + d.clone();
            let eig = c_re(rat_i(nn) * (rat_i(nn) + e - rat_i(1)));
            Ok(bb.clone() * yp - (bb + dd.clone()) * y0.clone() + dd * ym - eig * y0)
        }
        OPParams::ContinuousDualHahn { a, b, c } => {
            let ix = times_i(x);
            let two_ix = crat_i(2) * ix.clone();
            let den_b = two_ix.clone() * (two_ix.clone() - crat_i(1));
            let den_d = two_ix.clone() * (two_ix + crat_i(1));
            if den_b.is_zero() || den_d.is_zero() {
                return Err(Error::PoleAtEvaluationPoint);
            }
            let yp = op_eval(params, n, &shift_im(x, 1))?;
            let y0 = op_eval(params, n, x)?;
            let ym = op_eval(params, n, &shift_im(x, -1))?;
            let bb = (c_re(a.clone()) - ix.clone())
                * (c_re(b.clone()) - ix.clone())
                * (c_re(c.clone()) - ix.clone())
                / den_b;
            let dd = (c_re(a.clone()) + ix.clone())
                * (c_re(b.clone()) + ix.clone())
                * (c_re(c.clone()) + ix)
                / den_d;
            Ok(bb.clone() * yp - (bb + dd.clone()) * y0.clone() + dd * ym - crat_i(nn) * y0)
        }
        OPParams::Wilson { a, b, c, d } => {
            let ix = times_i(x);
            let two_ix = crat_i(2) * ix.clone();
            let den_b = two_ix.clone() * (two_ix.clone() - crat_i(1));
            let den_d = two_ix.clone() * (two_ix + crat_i(1));
            if den_b.is_zero() || den_d.is_zero() {
                return Err(Error::PoleAtEvaluationPoint);
            }
            let yp = op_eval(params, n, &shift_im(x, 1))?;
            let y0 = op_eval(params, n, x)?;
            let ym = op_eval(params, n, &shift_im(x, -1))?;
            let bb = (c_re(a.clone()) - ix.clone())
                * (c_re(b.clone()) - ix.clone())
                * (c_re(c.clone()) - ix.clone())
                * (c_re(d.clone()) - ix.clone())
                / den_b;
            let dd = (c_re(a.clone()) + ix.clone())
                * (c_re(b.clone()) + ix.clone())
                * (c_re(c.clone()) + ix.clone())
                * (c_re(d.clone()) + ix)
                / den_d;
            let e = a.clone() + b.clone() + c.clone() + d.clone();
            let eig = c_re(rat_i(nn) * (rat_i(nn) + e - rat_i(1)));
            Ok(bb.clone() * yp - (bb + dd.clone()) * y0.clone() + dd * ym - eig * y0)
        }
    }
}

/// Lattice size of a finite discrete family (`N` such that the support is
/// `{0, …, N}`). For Racah the size is detected from whichever of `α+1`,
/// `β+δ+1`, `γ+1` is a nonpositive integer `−N`.
fn lattice_size(params: &OPParams) -> Result<u32> {
    match params {
        OPParams::Hahn { n_max, .. } | OPParams::DualHahn { n_max, .. } => Ok(*n_max),
        OPParams::Racah { alpha, beta, gamma, delta } => {
            let candidates = [
                alpha.clone() + rat_i(1),
                beta.clone() + delta.clone() + rat_i(1),
                gamma.clone() + rat_i(1),
            ];
            let mut best: Option<u64> = None;
            for q in candidates {
                if let Some(k) = as_nonpos_integer(&q) {
                    best = Some(match best {
                        Some(cur) if cur <= k => cur,
                        _ => k,
                    });
                }
            }
            match best {
                Some(k) if k <= u64::from(u32::MAX) => Ok(k as u32),
                Some(_) => Err(Error::TooLarge("racah lattice size")),
                None => Err(Error::ParameterRange(
                    "racah parameters admit no finite lattice",
                )),
            }
        }
        _ => Err(Error::InvalidParameters("family has no finite lattice")),
    }
}

/// Exact finite orthogonality sum `Σ_{x=0}^{N} w(x)·p_m(x)·p_n(x)` for the
/// Hahn, dual Hahn and Racah families, with the Pearson weight generated from
/// the difference-equation coefficients via `w(0) = 1`,
/// `w(x+1) = w(x)·B(x)/D(x+1)`.
///
/// Off-diagonal sums are exactly zero: summation by parts of the difference
/// equation telescopes, and the boundary terms vanish because `D(0) = 0` and
/// `B(N) = 0`.
///
/// # Errors
/// [`Error::ParameterRange`] when a degree exceeds the lattice size or the
/// weight ratio degenerates; otherwise as [`op_eval`].
pub fn discrete_orthogonality_exact(params: &OPParams, m: u32, n: u32) -> Result<Rational> {
    let cap = lattice_size(params)?;
    if m > cap || n > cap {
        return Err(Error::ParameterRange(
            "polynomial degree exceeds the lattice size",
        ));
    }
    let mut w = Rational::one();
    let mut acc = Rational::zero();
    for x in 0..=cap {
        let xc = crat_i(i64::from(x));
        let pm = op_eval(params, m, &xc)?;
        let pn = op_eval(params, n, &xc)?;
        let prod = pm * pn;
        debug_assert!(prod.im.is_zero());
        acc += w.clone() * prod.re;
        if x < cap {
            let (b_here, _) = discrete_bd(params, &xc)?;
            let (_, d_next) = discrete_bd(params, &shift_re(&xc, 1))?;
            debug_assert!(b_here.im.is_zero() && d_next.im.is_zero());
            if d_next.re.is_zero() {
                return Err(Error::ParameterRange("degenerate lattice weight"));
            }
            w = w * b_here.re / d_next.re;
        }
    }
    Ok(acc)
}

fn horner_f64(coeffs: &[f64], x: f64) -> f64 {
    let mut acc = 0.0;
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn real_f64_coeffs(p: &Poly) -> Result<Vec<f64>> {
    let rp = p
        .real_coeffs()
        .ok_or(Error::InvalidParameters("polynomial has nonreal coefficients"))?;
    Ok(rp.coeffs().iter().map(rational_to_f64).collect())
}

/// Integrate over consecutive panels `[breaks[0], breaks[1]], [breaks[1],
/// breaks[2]], …`. Exponentially localized weights need this: on a single
/// wide interval every node of the first Gauss–Kronrod rule can land where
/// the weight has already underflowed, so adaptive refinement never starts.
fn integrate_panels<F: Fn(f64) -> f64>(f: &F, breaks: &[f64], cfg: &QuadConfig) -> Result<f64> {
    let mut acc = 0.0;
    for w in breaks.windows(2) {
        acc += quad::integrate(f, w[0], w[1], cfg)?.value;
    }
    Ok(acc)
}

/// Graded symmetric panels for weights decaying like `e^{−c|x|}` on ℝ.
const LINE_PANELS: [f64; 15] = [
    -60.0, -32.0, -16.0, -8.0, -4.0, -2.0, -1.0, 0.0, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 60.0,
];

/// `ln sinh t` for `t > 0` without overflow.
fn ln_sinh(t: f64) -> f64 {
    if t > 30.0 {
        t - core::f64::consts::LN_2
    } else {
        fm::ln(fm::sinh(t))
    }
}

/// Real part of `ln Γ(q + ix)`.
fn re_lngamma(q: f64, x: f64) -> f64 {
    fm::clgamma(Complex64::new(q, x)).re
}

fn poch_f64(q: f64, n: u32) -> f64 {
    let mut acc = 1.0;
    for i in 0..n {
        acc *= q + f64::from(i);
    }
    acc
}

fn fact_f64(n: u32) -> f64 {
    let mut acc = 1.0;
    for i in 1..=n {
        acc *= f64::from(i);
    }
    acc
}

/// General-phase Meixner–Pollaczek value `Pₙ^{(λ)}(x; φ)` in floating point.
///
/// Real for real `x` and `0 < φ < π`; the imaginary part of the returned
/// value is rounding noise.
pub fn mp_eval_f64(lambda: f64, phase: f64, n: u32, x: f64) -> Complex64 {
    let z = Complex64::new(1.0 - fm::cos(2.0 * phase), fm::sin(2.0 * phase));
    let pre = Complex64::new(fm::cos(f64::from(n) * phase), fm::sin(f64::from(n) * phase))
        * (poch_f64(2.0 * lambda, n) / fact_f64(n));
    let mut sum = Complex64::new(1.0, 0.0);
    let mut term = Complex64::new(1.0, 0.0);
    for j in 0..n {
        let jf = f64::from(j);
        let a = Complex64::new(lambda + jf, x);
        term = term * (jf - f64::from(n)) * a * z / ((2.0 * lambda + jf) * (jf + 1.0));
        sum += term;
    }
    pre * sum
}

/// Numerical weighted inner product `⟨p_m, p_n⟩` for the family's
/// orthogonality measure (integral for the continuous families, lattice sum
/// for the discrete ones, both in the normalization `w(0)=1` for lattice
/// weights and the standard analytic weight otherwise).
///
/// Diagonal entries match [`orthogonality_diagonal`]; off-diagonal entries
/// vanish to quadrature accuracy.
///
/// # Errors
/// [`Error::ParameterRange`] when the parameters leave the orthogonality
/// regime (e.g. Laguerre `α ≤ −1`, Meixner `c ∉ (0,1)`, Wilson weights whose
/// power-law tail makes `⟨p_m, p_n⟩` divergent); quadrature failures as
/// [`Error::NonConvergent`].
pub fn orthogonality_quadrature(
    params: &OPParams,
    m: u32,
    n: u32,
    cfg: &QuadConfig,
) -> Result<f64> {
    match params {
        OPParams::Hermite => {
            let pm = real_f64_coeffs(&op_coefficients(params, m)?)?;
            let pn = real_f64_coeffs(&op_coefficients(params, n)?)?;
            let f = |x: f64| fm::exp(-x * x) * horner_f64(&pm, x) * horner_f64(&pn, x);
            integrate_panels(
                &f,
                &[-15.0, -8.0, -4.0, -2.0, -1.0, 0.0, 1.0, 2.0, 4.0, 8.0, 15.0],
                cfg,
            )
        }
        OPParams::Laguerre { alpha } => {
            let af = rational_to_f64(alpha);
            if af <= -1.0 {
                return Err(Error::ParameterRange("laguerre orthogonality needs alpha > -1"));
            }
            let pm = real_f64_coeffs(&op_coefficients(params, m)?)?;
            let pn = real_f64_coeffs(&op_coefficients(params, n)?)?;
            let f = |x: f64| {
                fm::powf(x, af) * fm::exp(-x) * horner_f64(&pm, x) * horner_f64(&pn, x)
            };
            let head = quad::integrate_power_endpoint(f, 1.0, af, cfg)?.value;
            let tail = quad::integrate_to_inf(f, 1.0, cfg)?.value;
            Ok(head + tail)
        }
        OPParams::Jacobi { alpha1, alpha2 } => {
            let a1 = rational_to_f64(alpha1);
            let a2 = rational_to_f64(alpha2);
            if a1 <= -1.0 || a2 <= -1.0 {
                return Err(Error::ParameterRange("jacobi orthogonality needs alpha_i > -1"));
            }
            let pm = real_f64_coeffs(&op_coefficients(params, m)?)?;
            let pn = real_f64_coeffs(&op_coefficients(params, n)?)?;
            // Split at 1/2 and put the potentially singular endpoint at the
            // origin of each half.
            let left = quad::integrate_power_endpoint(
                |x: f64| {
                    fm::powf(1.0 - x, a1)
                        * fm::powf(x, a2)
                        * horner_f64(&pm, x)
                        * horner_f64(&pn, x)
                },
                0.5,
                a2,
                cfg,
            )?
            .value;
            let right = quad::integrate_power_endpoint(
                |u: f64| {
                    fm::powf(u, a1)
                        * fm::powf(1.0 - u, a2)
                        * horner_f64(&pm, 1.0 - u)
                        * horner_f64(&pn, 1.0 - u)
                },
                0.5,
                a1,
                cfg,
            )?
            .value;
            Ok(left + right)
        }
        OPParams::Meixner { beta, c } => {
            let bf = rational_to_f64(beta);
            let cf = rational_to_f64(c);
            if bf <= 0.0 || cf <= 0.0 || cf >= 1.0 {
                return Err(Error::ParameterRange(
                    "meixner orthogonality needs beta > 0 and 0 < c < 1",
                ));
            }
            let pm = real_f64_coeffs(&op_coefficients(params, m)?)?;
            let pn = real_f64_coeffs(&op_coefficients(params, n)?)?;
            let mut w = 1.0;
            let mut acc = 0.0;
            let deg = f64::from(m + n);
            for x in 0..500_000u32 {
                let xf = f64::from(x);
                acc += w * horner_f64(&pm, xf) * horner_f64(&pn, xf);
                if xf > 20.0 && w * fm::powf(xf + 1.0, deg) < 1e-18 * (1.0 + acc.abs()) {
                    break;
                }
                w *= cf * (bf + xf) / (xf + 1.0);
            }
            Ok(acc)
        }
        OPParams::Hahn { .. } | OPParams::DualHahn { .. } | OPParams::Racah { .. } => {
            Ok(rational_to_f64(&discrete_orthogonality_exact(params, m, n)?))
        }
        OPParams::MeixnerPollaczek { lambda, phase_over_pi } => {
            let lf = rational_to_f64(lambda);
            let pf = rational_to_f64(phase_over_pi) * core::f64::consts::PI;
            if lf <= 0.0 || pf <= 0.0 || pf >= core::f64::consts::PI {
                return Err(Error::ParameterRange(
                    "meixner-pollaczek orthogonality needs lambda > 0 and 0 < phase < pi",
                ));
            }
            let f = |x: f64| {
                let w = fm::exp((2.0 * pf - core::f64::consts::PI) * x + 2.0 * re_lngamma(lf, x))
                    / (2.0 * core::f64::consts::PI);
                w * mp_eval_f64(lf, pf, m, x).re * mp_eval_f64(lf, pf, n, x).re
            };
            integrate_panels(&f, &LINE_PANELS, cfg)
        }
        OPParams::ContinuousHahn { a, b, c, d } => {
            if c != a || d != b {
                return Err(Error::ParameterRange(
                    "continuous-hahn orthogonality implemented for the conjugate-symmetric case c=a, d=b",
                ));
            }
            let af = rational_to_f64(a);
            let bf = rational_to_f64(b);
            if af <= 0.0 || bf <= 0.0 {
                return Err(Error::ParameterRange(
                    "continuous-hahn orthogonality needs a, b > 0",
                ));
            }
            let pm = real_f64_coeffs(&op_coefficients(params, m)?)?;
            let pn = real_f64_coeffs(&op_coefficients(params, n)?)?;
            let f = |x: f64| {
                let w = fm::exp(2.0 * (re_lngamma(af, x) + re_lngamma(bf, x)))
                    / (2.0 * core::f64::consts::PI);
                w * horner_f64(&pm, x) * horner_f64(&pn, x)
            };
            integrate_panels(&f, &LINE_PANELS, cfg)
        }
        OPParams::ContinuousDualHahn { a, b, c } => {
            let af = rational_to_f64(a);
            let bf = rational_to_f64(b);
            let cf = rational_to_f64(c);
            if af <= 0.0 || bf <= 0.0 || cf <= 0.0 {
                return Err(Error::ParameterRange(
                    "continuous-dual-hahn orthogonality needs a, b, c > 0",
                ));
            }
            let pm = real_f64_coeffs(&op_coefficients(params, m)?)?;
            let pn = real_f64_coeffs(&op_coefficients(params, n)?)?;
            // |Γ(a+ix)Γ(b+ix)Γ(c+ix)/Γ(2ix)|²/(2π) with
            // 1/|Γ(2ix)|² = 2x·sinh(2πx)/π.
            let f = |x: f64| {
                if x <= 0.0 {
                    return 0.0;
                }
                let lnw = 2.0 * (re_lngamma(af, x) + re_lngamma(bf, x) + re_lngamma(cf, x))
                    + fm::ln(2.0 * x / core::f64::consts::PI)
                    + ln_sinh(2.0 * core::f64::consts::PI * x)
                    - fm::ln(2.0 * core::f64::consts::PI);
                let y = x * x;
                fm::exp(lnw) * horner_f64(&pm, y) * horner_f64(&pn, y)
            };
            integrate_panels(&f, &[0.0, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 80.0], cfg)
        }
        OPParams::Wilson { a, b, c, d } => {
            let af = rational_to_f64(a);
            let bf = rational_to_f64(b);
            let cf = rational_to_f64(c);
            let df = rational_to_f64(d);
            let esum = af + bf + cf + df;
            if af <= 0.0 || bf <= 0.0 || cf <= 0.0 || 1.0 - df <= 0.0 {
                return Err(Error::ParameterRange(
                    "wilson orthogonality needs a, b, c, 1-d > 0",
                ));
            }
            if f64::from(m + n) >= 1.0 - esum {
                return Err(Error::ParameterRange(
                    "wilson inner product diverges: need m+n < 1-a-b-c-d",
                ));
            }
            let pm = real_f64_coeffs(&op_coefficients(params, m)?)?;
            let pn = real_f64_coeffs(&op_coefficients(params, n)?)?;
            let ef = 1.0 - df;
            let f = move |x: f64| {
                if x <= 0.0 {
                    return 0.0;
                }
                let pi = core::f64::consts::PI;
                let lnw = if x < 30.0 {
                    2.0 * (re_lngamma(af, x) + re_lngamma(bf, x) + re_lngamma(cf, x)
                        - re_lngamma(ef, x))
                        + fm::ln(2.0 * x / pi)
                        + ln_sinh(2.0 * pi * x)
                        - fm::ln(2.0 * pi)
                } else {
                    // Beyond x ≈ 30 the four log-Gamma terms and ln sinh each
                    // carry a ±πx-sized piece whose floating-point noise grows
                    // linearly in x even though the pieces cancel exactly, so
                    // the cancellation is performed symbolically: Stirling for
                    // each ln|Γ(q+ix)| with the x·arg(q+ix) parts combined
                    // into x·(atan differences) that stay O(1).  The dropped
                    // ln(1−e^{−4πx}) correction is below 1e−300 here.
                    let half_ln_sq = |qv: f64| 0.5 * fm::ln(qv * qv + x * x);
                    let stirl = |qv: f64| {
                        let z = Complex64::new(qv, x);
                        let w = Complex64::new(1.0, 0.0) / z;
                        let w2 = w * w;
                        (w * (Complex64::new(1.0 / 12.0, 0.0)
                            + w2 * (Complex64::new(-1.0 / 360.0, 0.0)
                                + w2 * (Complex64::new(1.0 / 1260.0, 0.0)
                                    + w2 * Complex64::new(-1.0 / 1680.0, 0.0)))))
                        .re
                    };
                    let atan_sum =
                        fm::atan2(af, x) + fm::atan2(bf, x) + fm::atan2(cf, x) - fm::atan2(ef, x);
                    2.0 * ((af - 0.5) * half_ln_sq(af)
                        + (bf - 0.5) * half_ln_sq(bf)
                        + (cf - 0.5) * half_ln_sq(cf)
                        - (ef - 0.5) * half_ln_sq(ef))
                        + 2.0 * x * atan_sum
                        - 2.0 * (af + bf + cf - ef)
                        + 2.0 * (stirl(af) + stirl(bf) + stirl(cf) - stirl(ef))
                        + fm::ln(2.0 * x / pi)
                        - core::f64::consts::LN_2
                        + fm::ln(2.0 * pi)
                };
                let y = x * x;
                fm::exp(lnw) * horner_f64(&pm, y) * horner_f64(&pn, y)
            };
            let head = quad::integrate(&f, 0.0, 1.0, cfg)?.value;
            // The tail decays like x^p with p = 2(a+b+c+d) − 3 + 2(m+n); make
            // it a power-endpoint integral in u = 1/x so the quadrature sees
            // a smooth integrand instead of an algebraic endpoint singularity.
            let p_tail = 2.0 * esum - 3.0 + 2.0 * f64::from(m + n);
            let tail = quad::integrate_power_endpoint(
                |u: f64| f(1.0 / u) / (u * u),
                1.0,
                -p_tail - 2.0,
                cfg,
            )?
            .value;
            Ok(head + tail)
        }
    }
}

/// Closed-form diagonal `⟨p_n, p_n⟩` of the orthogonality relation, in the
/// same normalization as [`orthogonality_quadrature`].
///
/// For the finite lattice families the reference value is the exact Pearson
/// sum (converted to a float), since their natural closed forms depend on a
/// weight normalization this crate does not otherwise need.
///
/// # Errors
/// As [`orthogonality_quadrature`].
pub fn orthogonality_diagonal(params: &OPParams, n: u32) -> Result<f64> {
    let pi = core::f64::consts::PI;
    match params {
        OPParams::Hermite => Ok(fm::powi(2.0, i64::from(n)) * fact_f64(n) * fm::sqrt(pi)),
        OPParams::Laguerre { alpha } => {
            let af = rational_to_f64(alpha);
            if af <= -1.0 {
                return Err(Error::ParameterRange("laguerre orthogonality needs alpha > -1"));
            }
            Ok(fm::tgamma(f64::from(n) + af + 1.0) / fact_f64(n))
        }
        OPParams::Jacobi { alpha1, alpha2 } => {
            let a1 = rational_to_f64(alpha1);
            let a2 = rational_to_f64(alpha2);
            if a1 <= -1.0 || a2 <= -1.0 {
                return Err(Error::ParameterRange("jacobi orthogonality needs alpha_i > -1"));
            }
            let nf = f64::from(n);
            Ok(
                fm::tgamma(nf + a1 + 1.0) * fm::tgamma(nf + a2 + 1.0)
                    / ((2.0 * nf + a1 + a2 + 1.0)
                        * fm::tgamma(nf + a1 + a2 + 1.0)
                        * fact_f64(n)),
            )
        }
        OPParams::Meixner { beta, c } => {
            let bf = rational_to_f64(beta);
            let cf = rational_to_f64(c);
            if bf <= 0.0 || cf <= 0.0 || cf >= 1.0 {
                return Err(Error::ParameterRange(
                    "meixner orthogonality needs beta > 0 and 0 < c < 1",
                ));
            }
            Ok(fact_f64(n)
                / (poch_f64(bf, n) * fm::powi(cf, i64::from(n)) * fm::powf(1.0 - cf, bf)))
        }
        OPParams::Hahn { .. } | OPParams::DualHahn { .. } | OPParams::Racah { .. } => {
            Ok(rational_to_f64(&discrete_orthogonality_exact(params, n, n)?))
        }
        OPParams::MeixnerPollaczek { lambda, phase_over_pi } => {
            let lf = rational_to_f64(lambda);
            let pf = rational_to_f64(phase_over_pi) * pi;
            if lf <= 0.0 || pf <= 0.0 || pf >= pi {
                return Err(Error::ParameterRange(
                    "meixner-pollaczek orthogonality needs lambda > 0 and 0 < phase < pi",
                ));
            }
            Ok(fm::tgamma(f64::from(n) + 2.0 * lf)
                / (fm::powf(2.0 * fm::sin(pf), 2.0 * lf) * fact_f64(n)))
        }
        OPParams::ContinuousHahn { a, b, c, d } => {
            if c != a || d != b {
                return Err(Error::ParameterRange(
                    "continuous-hahn orthogonality implemented for the conjugate-symmetric case c=a, d=b",
                ));
            }
            let af = rational_to_f64(a);
            let bf = rational_to_f64(b);
            if af <= 0.0 || bf <= 0.0 {
                return Err(Error::ParameterRange(
                    "continuous-hahn orthogonality needs a, b > 0",
                ));
            }
            let nf = f64::from(n);
            let g_ab = fm::tgamma(nf + af + bf);
            Ok(fm::tgamma(nf + 2.0 * af) * g_ab * g_ab * fm::tgamma(nf + 2.0 * bf)
                / ((2.0 * nf + 2.0 * af + 2.0 * bf - 1.0)
                    * fm::tgamma(nf + 2.0 * af + 2.0 * bf - 1.0)
                    * fact_f64(n)))
        }
        OPParams::ContinuousDualHahn { a, b, c } => {
            let af = rational_to_f64(a);
            let bf = rational_to_f64(b);
            let cf = rational_to_f64(c);
            if af <= 0.0 || bf <= 0.0 || cf <= 0.0 {
                return Err(Error::ParameterRange(
                    "continuous-dual-hahn orthogonality needs a, b, c > 0",
                ));
            }
            let nf = f64::from(n);
            Ok(fm::tgamma(nf + af + bf)
                * fm::tgamma(nf + af + cf)
                * fm::tgamma(nf + bf + cf)
                * fact_f64(n))
        }
        OPParams::Wilson { a, b, c, d } => {
            let af = rational_to_f64(a);
            let bf = rational_to_f64(b);
            let cf = rational_to_f64(c);
            let df = rational_to_f64(d);
            let esum = af + bf + cf + df;
            if af <= 0.0 || bf <= 0.0 || cf <= 0.0 || 1.0 - df <= 0.0 {
                return Err(Error::ParameterRange(
                    "wilson orthogonality needs a, b, c, 1-d > 0",
                ));
            }
            if 2.0 * f64::from(n) >= 1.0 - esum {
                return Err(Error::ParameterRange(
                    "wilson inner product diverges: need 2n < 1-a-b-c-d",
                ));
            }
            let front = (esum - 1.0) / (esum + 2.0 * f64::from(n) - 1.0);
            let poch = poch_f64(af + bf, n)
                * poch_f64(af + cf, n)
                * poch_f64(af + df, n)
                * poch_f64(bf + cf, n)
                * poch_f64(bf + df, n)
                * poch_f64(cf + df, n)
                / poch_f64(esum - 1.0, n);
            let gammas = fm::tgamma(af + bf) * fm::tgamma(af + cf) * fm::tgamma(bf + cf)
                * fm::tgamma(1.0 - esum)
                / (fm::tgamma(1.0 - af - df)
                    * fm::tgamma(1.0 - bf - df)
                    * fm::tgamma(1.0 - cf - df));
            Ok(front * poch * gammas * fact_f64(n))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn q(n: i64, d: i64) -> Rational {
        rat(n, d)
    }

    fn cq(n: i64, d: i64) -> ComplexRational {
        c_re(rat(n, d))
    }

    /// A deterministic spread of rational test points.
    fn sample_points() -> Vec<ComplexRational> {
        vec![
            cq(1, 3),
            cq(-2, 1),
            cq(7, 2),
            cq(-5, 7),
            ComplexRational::new(q(1, 2), q(3, 5)),
        ]
    }

    fn all_family_params() -> Vec<OPParams> {
        vec![
            OPParams::Hermite,
            OPParams::Laguerre { alpha: q(5, 2) },
            OPParams::Jacobi { alpha1: q(1, 3), alpha2: q(3, 4) },
            OPParams::Meixner { beta: q(2, 1), c: q(-1, 1) },
            OPParams::Meixner { beta: q(3, 2), c: q(1, 3) },
            OPParams::Hahn { alpha: q(1, 4), beta: q(2, 3), n_max: 9 },
            OPParams::DualHahn { gamma: q(1, 3), delta: q(3, 4), n_max: 9 },
            OPParams::Racah { alpha: q(-10, 1), beta: q(1, 2), gamma: q(1, 3), delta: q(3, 4) },
            OPParams::meixner_pollaczek(q(3, 2)),
            OPParams::ContinuousHahn { a: q(1, 2), b: q(3, 2), c: q(5, 4), d: q(3, 4) },
            OPParams::ContinuousDualHahn { a: q(3, 2), b: q(1, 2), c: q(7, 2) },
            OPParams::Wilson { a: q(3, 2), b: q(1, 2), c: q(5, 2), d: q(7, 2) },
        ]
    }

    #[test]
    fn pfq_one_term_truncation() {
        // ₂F₁(−1, b; c; z) = 1 − (b/c)z.
        let b = cq(5, 3);
        let c = cq(7, 2);
        let z = cq(2, 9);
        let got = pfq_terminating(&[crat_i(-1), b.clone()], std::slice::from_ref(&c), &z, 5).unwrap();
        assert_eq!(got, crat_i(1) - b * z / c);
    }

    #[test]
    fn pfq_two_term_value() {
        // ₂F₁(−k, 1−n; 2; 2) at k=1, n=2 equals 2.
        let got = pfq_terminating(&[crat_i(-1), crat_i(-1)], &[crat_i(2)], &crat_i(2), 1).unwrap();
        assert_eq!(got, crat_i(2));
    }

    #[test]
    fn pfq_zero_argument() {
        let got = pfq_terminating(
            &[crat_i(-4), cq(1, 2), cq(5, 3)],
            &[cq(7, 5), cq(9, 4)],
            &crat_i(0),
            4,
        )
        .unwrap();
        assert_eq!(got, crat_i(1));
    }

    #[test]
    fn pfq_denominator_pole_detected() {
        // (−2)ⱼ in the denominator vanishes at the j=2 step, before the
        // numerator (−3)ⱼ can terminate the series.
        let err = pfq_terminating(&[crat_i(-3)], &[crat_i(-2)], &crat_i(1), 3).unwrap_err();
        assert_eq!(err, Error::DenominatorPole { term: 3 });
    }

    #[test]
    fn pfq_termination_beats_same_index_pole() {
        // Both (−2)ⱼ factors hit zero at the same step: the series terminates.
        let got = pfq_terminating(&[crat_i(-2)], &[crat_i(-2)], &crat_i(1), 5).unwrap();
        // Σ_{j=0}^{2} (−2)ⱼ/(−2)ⱼ·1ʲ/j! = 1 + 1 + 1/2.
        assert_eq!(got, cq(5, 2));
    }

    #[test]
    fn hermite_small_table() {
        let h2 = op_coefficients(&OPParams::Hermite, 2).unwrap();
        assert_eq!(h2.coeffs(), &[crat_i(-2), crat_i(0), crat_i(4)]);
        let h3 = op_coefficients(&OPParams::Hermite, 3).unwrap();
        assert_eq!(h3.coeffs(), &[crat_i(0), crat_i(-12), crat_i(0), crat_i(8)]);
    }

    #[test]
    fn laguerre_linear() {
        // L₁^{(α)} = α + 1 − x.
        let p = op_coefficients(&OPParams::Laguerre { alpha: q(5, 2) }, 1).unwrap();
        assert_eq!(p.coeffs(), &[cq(7, 2), crat_i(-1)]);
    }

    #[test]
    fn jacobi_linear() {
        // P₁^{(α₁,α₂)} = (α₁+α₂+2)x − (α₂+1).
        let p = op_coefficients(&OPParams::Jacobi { alpha1: q(1, 3), alpha2: q(3, 4) }, 1).unwrap();
        assert_eq!(p.coeffs(), &[cq(-7, 4), cq(37, 12)]);
    }

    #[test]
    fn meixner_closed_value() {
        // M₂(x; 2, −1) = (2x² + 4x + 3)/3 at x = 2 gives 19/3.
        let params = OPParams::Meixner { beta: q(2, 1), c: q(-1, 1) };
        let got = op_eval(&params, 2, &crat_i(2)).unwrap();
        assert_eq!(got, cq(19, 3));
        // And M₀ ≡ 1.
        assert_eq!(op_eval(&params, 0, &cq(11, 7)).unwrap(), crat_i(1));
    }

    #[test]
    fn meixner_self_duality() {
        let params = OPParams::Meixner { beta: q(3, 2), c: q(2, 7) };
        for n in 0..=8u32 {
            for x in 0..=8u32 {
                let lhs = op_eval(&params, n, &crat_i(i64::from(x))).unwrap();
                let rhs = op_eval(&params, x, &crat_i(i64::from(n))).unwrap();
                assert_eq!(lhs, rhs, "duality failed at n={n}, x={x}");
            }
        }
    }

    #[test]
    fn meixner_pollaczek_linear() {
        // P₁^{(1)}(x; π/2) = 2x.
        let p = op_coefficients(&OPParams::meixner_pollaczek(q(1, 1)), 1).unwrap();
        assert_eq!(p.coeffs(), &[crat_i(0), crat_i(2)]);
    }

    #[test]
    fn meixner_pollaczek_meixner_bridge() {
        // Pₙ^{(λ)}(x; π/2) = e^{−inπ/2} (2λ)ₙ/n! · Mₙ(−λ+ix; 2λ, −1).
        let lambda = q(3, 2);
        let mp = OPParams::meixner_pollaczek(lambda.clone());
        let mei = OPParams::Meixner { beta: q(3, 1), c: q(-1, 1) };
        for n in 0..=6u32 {
            for x in &sample_points() {
                let lhs = op_eval(&mp, n, x).unwrap();
                let arg = times_i(x) - c_re(lambda.clone());
                let scale = i_pow(-i64::from(n))
                    * c_re(
                        pochhammer_rat(&(lambda.clone() + lambda.clone()), u64::from(n))
                            / factorial(u64::from(n)),
                    );
                let rhs = scale * op_eval(&mei, n, &arg).unwrap();
                assert_eq!(lhs, rhs, "bridge failed at n={n}");
            }
        }
    }

    #[test]
    fn meixner_pollaczek_exact_phase_guard() {
        let params = OPParams::MeixnerPollaczek { lambda: q(1, 1), phase_over_pi: q(1, 3) };
        assert_eq!(op_eval(&params, 2, &crat_i(1)).unwrap_err(), Error::UnsupportedExactPhase);
        assert_eq!(op_coefficients(&params, 2).unwrap_err(), Error::UnsupportedExactPhase);
        assert_eq!(sl_residual(&params, 2, &crat_i(1)).unwrap_err(), Error::UnsupportedExactPhase);
    }

    #[test]
    fn continuous_dual_hahn_quadratic() {
        // S₁(x²; a,b,c) = (a+b)(a+c) − (a² + x²).
        let (a, b, c) = (q(3, 2), q(1, 2), q(7, 2));
        let p = op_coefficients(
            &OPParams::ContinuousDualHahn { a: a.clone(), b: b.clone(), c: c.clone() },
            1,
        )
        .unwrap();
        let c0 = (a.clone() + b) * (a.clone() + c) - a.clone() * a;
        assert_eq!(p.coeffs(), &[c_re(c0), crat_i(-1)]);
    }

    #[test]
    fn wilson_linear_in_x_squared() {
        // W₁(x²; a,b,c,d) = (a+b)(a+c)(a+d) − (a+b+c+d)(a² + x²).
        let (a, b, c, d) = (q(3, 2), q(1, 2), q(5, 2), q(7, 2));
        let p = op_coefficients(
            &OPParams::Wilson { a: a.clone(), b: b.clone(), c: c.clone(), d: d.clone() },
            1,
        )
        .unwrap();
        let e = a.clone() + b.clone() + c.clone() + d.clone();
        let c0 = (a.clone() + b) * (a.clone() + c) * (a.clone() + d) - e.clone() * a.clone() * a;
        assert_eq!(p.coeffs(), &[c_re(c0), c_re(-e)]);
    }

    #[test]
    fn eval_matches_coefficients_everywhere() {
        for params in all_family_params() {
            for n in 0..=5u32 {
                let p = op_coefficients(&params, n).unwrap();
                for x in &sample_points() {
                    let direct = op_eval(&params, n, x).unwrap();
                    let via_poly = p.eval(&spectral_variable(&params, x));
                    assert_eq!(direct, via_poly, "family {} n={n}", params.name());
                }
            }
        }
    }

    #[test]
    fn sl_residual_vanishes_for_all_families() {
        for params in all_family_params() {
            for n in 0..=6u32 {
                for x in &sample_points() {
                    match sl_residual(&params, n, x) {
                        Ok(r) => assert!(
                            r.is_zero(),
                            "nonzero residual for {} at n={n}: {r:?}",
                            params.name()
                        ),
                        Err(Error::PoleAtEvaluationPoint) => {}
                        Err(e) => panic!("unexpected error for {}: {e:?}", params.name()),
                    }
                }
            }
        }
    }

    #[test]
    fn sl_residual_reference_points() {
        let wilson = OPParams::Wilson { a: q(3, 2), b: q(1, 2), c: q(5, 2), d: q(7, 2) };
        assert!(sl_residual(&wilson, 1, &crat_i(1)).unwrap().is_zero());
        let cdh = OPParams::ContinuousDualHahn { a: q(3, 2), b: q(1, 2), c: q(7, 2) };
        assert!(sl_residual(&cdh, 3, &crat_i(2)).unwrap().is_zero());
        let mp = OPParams::meixner_pollaczek(q(1, 1));
        assert!(sl_residual(&mp, 4, &crat_i(3)).unwrap().is_zero());
    }

    #[test]
    fn sl_residual_pole_guard() {
        let cdh = OPParams::ContinuousDualHahn { a: q(3, 2), b: q(1, 2), c: q(7, 2) };
        assert_eq!(
            sl_residual(&cdh, 2, &crat_i(0)).unwrap_err(),
            Error::PoleAtEvaluationPoint
        );
        let half_i = ComplexRational::new(q(0, 1), q(1, 2));
        assert_eq!(
            sl_residual(&cdh, 2, &half_i).unwrap_err(),
            Error::PoleAtEvaluationPoint
        );
    }

    #[test]
    fn discrete_orthogonality_exactly_zero() {
        let families = [
            OPParams::Hahn { alpha: q(1, 4), beta: q(2, 3), n_max: 5 },
            OPParams::DualHahn { gamma: q(1, 3), delta: q(3, 4), n_max: 5 },
            OPParams::Racah { alpha: q(-5, 1), beta: q(1, 2), gamma: q(1, 3), delta: q(3, 4) },
        ];
        for params in families {
            for m in 0..=4u32 {
                for n in 0..=4u32 {
                    let s = discrete_orthogonality_exact(&params, m, n).unwrap();
                    if m == n {
                        assert!(!s.is_zero(), "{} diagonal vanished at n={n}", params.name());
                    } else {
                        assert!(
                            s.is_zero(),
                            "{} off-diagonal ({m},{n}) = {s}",
                            params.name()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn racah_lattice_detection() {
        // α+1 = −5 wins over no other candidate.
        let p = OPParams::Racah { alpha: q(-6, 1), beta: q(1, 2), gamma: q(1, 3), delta: q(3, 4) };
        assert_eq!(lattice_size(&p).unwrap(), 5);
        // No candidate: error.
        let p = OPParams::Racah { alpha: q(1, 2), beta: q(1, 2), gamma: q(1, 3), delta: q(3, 4) };
        assert!(matches!(lattice_size(&p), Err(Error::ParameterRange(_))));
    }

    #[test]
    fn hermite_orthogonality_quadrature() {
        let cfg = QuadConfig::default();
        let params = OPParams::Hermite;
        let diag1 = orthogonality_quadrature(&params, 1, 1, &cfg).unwrap();
        let expect = orthogonality_diagonal(&params, 1).unwrap();
        assert!((diag1 - expect).abs() < 1e-8 * expect.abs());
        let off = orthogonality_quadrature(&params, 0, 2, &cfg).unwrap();
        assert!(off.abs() < 1e-6 * expect.abs());
    }

    #[test]
    fn laguerre_orthogonality_quadrature() {
        let cfg = QuadConfig::default();
        // Negative α exercises the endpoint-singular branch.
        let params = OPParams::Laguerre { alpha: q(-1, 2) };
        for n in 0..=3u32 {
            let diag = orthogonality_quadrature(&params, n, n, &cfg).unwrap();
            let expect = orthogonality_diagonal(&params, n).unwrap();
            assert!(
                (diag - expect).abs() < 1e-7 * expect.abs(),
                "diag n={n}: {diag} vs {expect}"
            );
        }
        let off = orthogonality_quadrature(&params, 1, 3, &cfg).unwrap();
        let scale = orthogonality_diagonal(&params, 3).unwrap();
        assert!(off.abs() < 1e-6 * scale);
    }

    #[test]
    fn jacobi_orthogonality_quadrature() {
        let cfg = QuadConfig::default();
        let params = OPParams::Jacobi { alpha1: q(-1, 3), alpha2: q(3, 4) };
        for n in 0..=3u32 {
            let diag = orthogonality_quadrature(&params, n, n, &cfg).unwrap();
            let expect = orthogonality_diagonal(&params, n).unwrap();
            assert!(
                (diag - expect).abs() < 1e-7 * expect.abs(),
                "diag n={n}: {diag} vs {expect}"
            );
        }
        let off = orthogonality_quadrature(&params, 0, 3, &cfg).unwrap();
        let scale = orthogonality_diagonal(&params, 3).unwrap();
        assert!(off.abs() < 1e-6 * scale);
    }

    #[test]
    fn meixner_orthogonality_sum() {
        let cfg = QuadConfig::default();
        let params = OPParams::Meixner { beta: q(3, 2), c: q(1, 3) };
        for n in 0..=4u32 {
            let diag = orthogonality_quadrature(&params, n, n, &cfg).unwrap();
            let expect = orthogonality_diagonal(&params, n).unwrap();
            assert!(
                (diag - expect).abs() < 1e-9 * expect.abs(),
                "diag n={n}: {diag} vs {expect}"
            );
        }
        let off = orthogonality_quadrature(&params, 2, 4, &cfg).unwrap();
        let scale = orthogonality_diagonal(&params, 4).unwrap();
        assert!(off.abs() < 1e-9 * scale);
    }

    #[test]
    fn meixner_pollaczek_orthogonality_quadrature() {
        let cfg = QuadConfig::default();
        let params = OPParams::meixner_pollaczek(q(1, 1));
        // ⟨P₀, P₁⟩ ≈ 0.
        let off = orthogonality_quadrature(&params, 0, 1, &cfg).unwrap();
        assert!(off.abs() < 1e-8);
        // Diagonal n=1: Γ(3)/(2² · 1!) = 1/2.
        let diag = orthogonality_quadrature(&params, 1, 1, &cfg).unwrap();
        let expect = orthogonality_diagonal(&params, 1).unwrap();
        assert!((expect - 0.5).abs() < 1e-12);
        assert!((diag - expect).abs() < 1e-7 * expect.abs());
    }

    #[test]
    fn meixner_pollaczek_general_phase_quadrature() {
        // Float path at φ = π/3.
        let cfg = QuadConfig::default();
        let params = OPParams::MeixnerPollaczek { lambda: q(1, 1), phase_over_pi: q(1, 3) };
        for n in 0..=2u32 {
            let diag = orthogonality_quadrature(&params, n, n, &cfg).unwrap();
            let expect = orthogonality_diagonal(&params, n).unwrap();
            assert!(
                (diag - expect).abs() < 1e-6 * expect.abs(),
                "diag n={n}: {diag} vs {expect}"
            );
        }
        let off = orthogonality_quadrature(&params, 0, 2, &cfg).unwrap();
        let scale = orthogonality_diagonal(&params, 2).unwrap();
        assert!(off.abs() < 1e-6 * scale);
    }

    #[test]
    fn continuous_hahn_conjugate_orthogonality() {
        let cfg = QuadConfig::default();
        let params = OPParams::ContinuousHahn { a: q(3, 4), b: q(5, 4), c: q(3, 4), d: q(5, 4) };
        for n in 0..=2u32 {
            let diag = orthogonality_quadrature(&params, n, n, &cfg).unwrap();
            let expect = orthogonality_diagonal(&params, n).unwrap();
            assert!(
                (diag - expect).abs() < 1e-6 * expect.abs(),
                "diag n={n}: {diag} vs {expect}"
            );
        }
        let off = orthogonality_quadrature(&params, 1, 2, &cfg).unwrap();
        let scale = orthogonality_diagonal(&params, 2).unwrap();
        assert!(off.abs() < 1e-6 * scale);
    }

    #[test]
    fn continuous_dual_hahn_norm_value() {
        // ⟨S₀, S₀⟩ = Γ(a+b)Γ(a+c)Γ(b+c) = Γ(2)Γ(5)Γ(4) = 144 at (3/2, 1/2, 7/2).
        let cfg = QuadConfig::default();
        let params = OPParams::ContinuousDualHahn { a: q(3, 2), b: q(1, 2), c: q(7, 2) };
        let diag = orthogonality_quadrature(&params, 0, 0, &cfg).unwrap();
        assert!((diag - 144.0).abs() < 1e-6 * 144.0, "got {diag}");
        let off = orthogonality_quadrature(&params, 0, 1, &cfg).unwrap();
        assert!(off.abs() < 1e-6 * 144.0);
        for n in 1..=3u32 {
            let d = orthogonality_quadrature(&params, n, n, &cfg).unwrap();
            let e = orthogonality_diagonal(&params, n).unwrap();
            assert!((d - e).abs() < 1e-6 * e.abs(), "diag n={n}: {d} vs {e}");
        }
    }

    #[test]
    fn wilson_orthogonality_quadrature() {
        let cfg = QuadConfig::default();
        // Strongly negative d buys admissible degrees m+n ≤ 3.
        let params = OPParams::Wilson { a: q(1, 4), b: q(1, 4), c: q(1, 4), d: q(-3, 1) };
        for n in 0..=1u32 {
            let diag = orthogonality_quadrature(&params, n, n, &cfg).unwrap();
            let expect = orthogonality_diagonal(&params, n).unwrap();
            assert!(
                (diag - expect).abs() < 1e-6 * expect.abs(),
                "diag n={n}: {diag} vs {expect}"
            );
        }
        for (m, n) in [(0u32, 1u32), (0, 2), (0, 3), (1, 2)] {
            let off = orthogonality_quadrature(&params, m, n, &cfg).unwrap();
            let scale = orthogonality_diagonal(&params, 0).unwrap();
            assert!(off.abs() < 1e-6 * scale.abs(), "off ({m},{n}) = {off}");
        }
        // Divergent request is refused.
        assert!(matches!(
            orthogonality_quadrature(&params, 2, 2, &cfg),
            Err(Error::ParameterRange(_))
        ));
    }

    #[test]
    fn mp_eval_f64_matches_exact_at_half_pi() {
        let params = OPParams::meixner_pollaczek(q(3, 2));
        let half_pi = core::f64::consts::FRAC_PI_2;
        for n in 0..=4u32 {
            for xr in [q(-2, 1), q(3, 10), q(17, 10)] {
                let x = ComplexRational::new(xr.clone(), q(0, 1));
                let exact = op_eval(&params, n, &x).unwrap();
                let exact_f = crate::exact::complex_to_f64(&exact);
                let float = mp_eval_f64(1.5, half_pi, n, rational_to_f64(&xr));
                assert!(
                    (exact_f - float).norm() < 1e-10 * (1.0 + float.norm()),
                    "n={n} x={xr}: {exact_f} vs {float}"
                );
            }
        }
    }
}
