//! Exact scalar arithmetic.
//!
//! The exact layer works in two fields and one graded extension:
//!
//! - [`Rational`] — arbitrary-precision rationals (always stored reduced,
//!   with positive denominator).
//! - [`ComplexRational`] — Gaussian rationals `re + i·im`, the smallest field
//!   containing every evaluation point used by the polynomial
//!   representations (points like `x = i(k+1)` included).
//! - [`SqrtPiScaled`] — numbers of the form `r · √π^p` with `r` rational and
//!   `p ∈ ℤ`. Exact Γ-values at integers and half-integers live here, and the
//!   grading makes √π a bookkeeping symbol that must cancel before any
//!   exactness assertion.
//!
//! Gamma functions never become floats inside exact values: ratios at integer
//! offsets reduce to Pochhammer products ([`gamma_ratio`]), and isolated
//! factors at half-integers reduce to [`SqrtPiScaled`] ([`gamma_half`]).

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint, Sign};
use num_complex::Complex;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number (reduced, positive denominator).
pub type Rational = num_rational::Ratio<BigInt>;

/// Gaussian rational: exact complex number with rational real and imaginary
/// parts. Conjugation is an involution; arithmetic is exact field arithmetic.
pub type ComplexRational = Complex<Rational>;

/// `n` as a rational.
pub fn rat_i(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d` as a rational.
///
/// # Panics
/// Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `n` as a Gaussian rational.
pub fn crat_i(n: i64) -> ComplexRational {
    ComplexRational::new(rat_i(n), rat_i(0))
}

/// A real rational as a Gaussian rational.
pub fn c_re(r: Rational) -> ComplexRational {
    ComplexRational::new(r, rat_i(0))
}

/// A purely imaginary Gaussian rational `i·r`.
pub fn c_im(r: Rational) -> ComplexRational {
    ComplexRational::new(rat_i(0), r)
}

/// The imaginary unit.
pub fn c_i() -> ComplexRational {
    c_im(rat_i(1))
}

/// `i^n` for any integer `n` (period 4).
pub fn i_pow(n: i64) -> ComplexRational {
    match n.rem_euclid(4) {
        0 => crat_i(1),
        1 => c_i(),
        2 => crat_i(-1),
        _ => c_im(rat_i(-1)),
    }
}

/// Exact integer value of a rational, when it is one.
pub fn as_integer(q: &Rational) -> Option<BigInt> {
    if q.denom().is_one() {
        Some(q.numer().clone())
    } else {
        None
    }
}

/// Exact `i64` value of a rational, when it is one and fits.
pub fn as_i64(q: &Rational) -> Option<i64> {
    as_integer(q).and_then(|n| n.to_i64())
}

/// If `q` is a nonpositive integer `−n`, return `n ≥ 0`.
pub fn as_nonpos_integer(q: &Rational) -> Option<u64> {
    match as_integer(q) {
        Some(n) if n.sign() != Sign::Plus => n.magnitude().to_u64(),
        _ => None,
    }
}

/// Rising factorial (Pochhammer symbol) `(a)ⱼ = a(a+1)…(a+j−1)`, `(a)₀ = 1`.
pub fn pochhammer(a: &ComplexRational, j: u64) -> ComplexRational {
    let mut acc = crat_i(1);
    let mut term = a.clone();
    let one = crat_i(1);
    for _ in 0..j {
        acc *= term.clone();
        term += one.clone();
    }
    acc
}

/// Rising factorial of a real rational argument.
pub fn pochhammer_rat(a: &Rational, j: u64) -> Rational {
    let mut acc = rat_i(1);
    let mut term = a.clone();
    for _ in 0..j {
        acc *= term.clone();
        term += rat_i(1);
    }
    acc
}

/// `n!` as a rational.
pub fn factorial(n: u64) -> Rational {
    let mut acc = BigInt::one();
    for j in 2..=n {
        acc *= BigInt::from(j);
    }
    Rational::from_integer(acc)
}

/// Odd double factorial `(2k−1)!! = 1·3·5…(2k−1)`, with `(−1)!! = 1`.
pub fn odd_double_factorial(k: u64) -> Rational {
    let mut acc = BigInt::one();
    for j in 1..=k {
        acc *= BigInt::from(2 * j - 1);
    }
    Rational::from_integer(acc)
}

/// Binomial coefficient `C(n, k)` for nonnegative integers.
pub fn binomial(n: u64, k: u64) -> Rational {
    if k > n {
        return rat_i(0);
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..k {
        num *= BigInt::from(n - j);
        den *= BigInt::from(j + 1);
    }
    Rational::new(num, den)
}

/// Generalized binomial coefficient `C(a, k) = a(a−1)…(a−k+1)/k!` for
/// rational `a`.
pub fn binomial_rat(a: &Rational, k: u64) -> Rational {
    let mut acc = rat_i(1);
    let mut term = a.clone();
    for j in 0..k {
        acc *= term.clone();
        term -= rat_i(1);
        acc /= rat_i((j + 1) as i64);
    }
    acc
}

/// Catalan number `C_k = C(2k, k)/(k+1)`.
pub fn catalan(k: u64) -> Rational {
    binomial(2 * k, k) / rat_i((k + 1) as i64)
}

/// Exact integer power `qᵉ` of a rational, for either sign of `e`.
///
/// # Panics
/// Panics when `q` is zero and `e` is negative.
pub fn rational_pow(q: &Rational, e: i64) -> Rational {
    let base = if e >= 0 {
        q.clone()
    } else {
        assert!(!q.is_zero(), "zero cannot be raised to a negative power");
        rat_i(1) / q.clone()
    };
    let mut acc = rat_i(1);
    for _ in 0..e.unsigned_abs() {
        acc *= base.clone();
    }
    acc
}

/// Exact ratio `Γ(a + m)/Γ(a)` for integer offset `m` (any sign), as a
/// rational function of `a`: `(a)ₘ` for `m ≥ 0` and `1/(a+m)₋ₘ` for `m < 0`.
///
/// # Errors
/// [`Error::GammaPole`] when the denominator Pochhammer vanishes (the ratio
/// has a pole at this `a`).
pub fn gamma_ratio(a: &Rational, m: i64) -> Result<Rational> {
    if m >= 0 {
        Ok(pochhammer_rat(a, m as u64))
    } else {
        let shifted = a.clone() + rat_i(m);
        let den = pochhammer_rat(&shifted, (-m) as u64);
        if den.is_zero() {
            Err(Error::GammaPole)
        } else {
            Ok(rat_i(1) / den)
        }
    }
}

// ---------------------------------------------------------------------------
// √π-graded exact values
// ---------------------------------------------------------------------------

/// An exact value `rational · √π^{sqrt_pi_pow}`.
///
/// Addition is only defined within one grade; the public API therefore keeps
/// values of mixed grade apart, and comparisons first cancel the grades.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SqrtPiScaled {
    /// Rational part.
    pub rational: Rational,
    /// Power of √π (may be negative).
    pub sqrt_pi_pow: i64,
}

impl SqrtPiScaled {
    /// The value 1 (grade 0).
    pub fn one() -> Self {
        SqrtPiScaled {
            rational: rat_i(1),
            sqrt_pi_pow: 0,
        }
    }

    /// A plain rational (grade 0).
    pub fn from_rational(r: Rational) -> Self {
        SqrtPiScaled {
            rational: r,
            sqrt_pi_pow: 0,
        }
    }

    /// True when the rational part is zero.
    pub fn is_zero(&self) -> bool {
        self.rational.is_zero()
    }

    /// Product.
    #[must_use]
    pub fn mul(&self, other: &Self) -> Self {
        SqrtPiScaled {
            rational: self.rational.clone() * other.rational.clone(),
            sqrt_pi_pow: if self.rational.is_zero() || other.rational.is_zero() {
                0
            } else {
                self.sqrt_pi_pow + other.sqrt_pi_pow
            },
        }
    }

    /// Quotient.
    ///
    /// # Panics
    /// Panics if `other` is zero.
    #[must_use]
    pub fn div(&self, other: &Self) -> Self {
        assert!(!other.rational.is_zero(), "division by zero SqrtPiScaled");
        SqrtPiScaled {
            rational: self.rational.clone() / other.rational.clone(),
            sqrt_pi_pow: if self.rational.is_zero() {
                0
            } else {
                self.sqrt_pi_pow - other.sqrt_pi_pow
            },
        }
    }

    /// Multiply by a rational.
    #[must_use]
    pub fn scale(&self, r: &Rational) -> Self {
        SqrtPiScaled {
            rational: self.rational.clone() * r.clone(),
            sqrt_pi_pow: self.sqrt_pi_pow,
        }
    }

    /// Exact rational value, when the √π grade is zero (or the value is 0).
    pub fn as_rational(&self) -> Option<Rational> {
        if self.sqrt_pi_pow == 0 || self.rational.is_zero() {
            Some(self.rational.clone())
        } else {
            None
        }
    }

    /// Floating-point value.
    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.rational)
            * libm::pow(core::f64::consts::PI, self.sqrt_pi_pow as f64 / 2.0)
    }
}

/// Exact `Γ(q)` for integer or half-integer `q`.
///
/// `Γ(n) = (n−1)!` for integers `n ≥ 1`; `Γ(m + 1/2)` is a rational times
/// √π for every integer `m` (negative included).
///
/// # Errors
/// - [`Error::GammaPole`] at nonpositive integers.
/// - [`Error::ParameterRange`] when `q` is neither integer nor half-integer.
pub fn gamma_half(q: &Rational) -> Result<SqrtPiScaled> {
    if let Some(n) = as_integer(q) {
        if n.sign() != Sign::Plus {
            return Err(Error::GammaPole);
        }
        let n = n.to_u64().ok_or(Error::TooLarge("gamma argument"))?;
        return Ok(SqrtPiScaled::from_rational(factorial(n - 1)));
    }
    if *q.denom() == BigInt::from(2) {
        // q = 1/2 + m. Walk the recurrence Γ(q+1) = q Γ(q) from Γ(1/2) = √π.
        let m_twice = q.numer() - BigInt::one();
        let m = (&m_twice / BigInt::from(2))
            .to_i64()
            .ok_or(Error::TooLarge("gamma argument"))?;
        let mut r = rat_i(1);
        if m >= 0 {
            let mut a = rat(1, 2);
            for _ in 0..m {
                r *= a.clone();
                a += rat_i(1);
            }
        } else {
            let mut a = rat(1, 2);
            for _ in 0..(-m) {
                a -= rat_i(1);
                r /= a.clone();
            }
        }
        return Ok(SqrtPiScaled {
            rational: r,
            sqrt_pi_pow: 1,
        });
    }
    Err(Error::ParameterRange(
        "exact gamma requires an integer or half-integer argument",
    ))
}

// ---------------------------------------------------------------------------
// Quotients of Gamma factors
// ---------------------------------------------------------------------------

/// A formal product `Π Γ(numᵢ) / Π Γ(denⱼ)` of Gamma factors at rational
/// arguments, reduced lazily.
///
/// [`GammaProd::reduce`] cancels factor pairs whose arguments differ by an
/// integer into Pochhammer products and evaluates the remaining factors
/// exactly when their arguments are integers or half-integers; otherwise the
/// caller falls back to [`GammaProd::to_f64`].
#[derive(Debug, Clone, Default)]
pub struct GammaProd {
    num: Vec<Rational>,
    den: Vec<Rational>,
}

impl GammaProd {
    /// Empty product (value 1).
    pub fn new() -> Self {
        Self::default()
    }

    /// Multiply by `Γ(q)`.
    #[must_use]
    pub fn times_gamma(mut self, q: Rational) -> Self {
        self.num.push(q);
        self
    }

    /// Divide by `Γ(q)`.
    #[must_use]
    pub fn over_gamma(mut self, q: Rational) -> Self {
        self.den.push(q);
        self
    }

    /// Product of two Gamma quotients.
    #[must_use]
    #[allow(clippy::should_implement_trait)]
    pub fn mul(mut self, other: &GammaProd) -> Self {
        self.num.extend(other.num.iter().cloned());
        self.den.extend(other.den.iter().cloned());
        self
    }

    /// Exact reduction to `rational · √π^p`.
    ///
    /// # Errors
    /// [`Error::GammaPole`] when a denominator factor is at a pole that no
    /// numerator factor cancels, and [`Error::ParameterRange`] when a
    /// leftover factor is neither integer nor half-integer.
    pub fn reduce(&self) -> Result<SqrtPiScaled> {
        let mut num = self.num.clone();
        let mut den: Vec<Option<Rational>> = self.den.iter().cloned().map(Some).collect();
        let mut acc = SqrtPiScaled::one();
        let mut numerator_pole = false;

        // Cancel Γ(a)/Γ(b) pairs with a − b ∈ ℤ into Pochhammer ratios.
        let mut remaining_num: Vec<Rational> = Vec::new();
        'outer: for a in num.drain(..) {
            for slot in den.iter_mut() {
                let Some(b) = slot else { continue };
                let diff = a.clone() - b.clone();
                if let Some(m) = as_i64(&diff) {
                    let b = slot.take().expect("slot non-empty");
                    match gamma_ratio(&b, m) {
                        Ok(r) => acc = acc.scale(&r),
                        Err(_) => {
                            // Γ(a)/Γ(b) with the *denominator* at a pole: the
                            // ratio is zero (or needs residue bookkeeping when
                            // a is also a pole — detect that case exactly).
                            let a_pole = as_nonpos_integer(&a).is_some();
                            let b_pole = as_nonpos_integer(&b).is_some();
                            match (a_pole, b_pole) {
                                (false, true) => acc = acc.scale(&rat_i(0)),
                                (true, true) => {
                                    // Both at poles: Γ(−p)/Γ(−q) = (−1)^{p+q} q!/p!.
                                    let p = as_nonpos_integer(&a).expect("checked") as i64;
                                    let q = as_nonpos_integer(&b).expect("checked") as i64;
                                    let sign = if (p + q) % 2 == 0 { 1 } else { -1 };
                                    let r = rat_i(sign) * factorial(q as u64)
                                        / factorial(p as u64);
                                    acc = acc.scale(&r);
                                }
                                _ => return Err(Error::GammaPole),
                            }
                        }
                    }
                    continue 'outer;
                }
            }
            remaining_num.push(a);
        }

        for a in remaining_num {
            match gamma_half(&a) {
                Ok(g) => acc = acc.mul(&g),
                Err(Error::GammaPole) => numerator_pole = true,
                Err(e) => return Err(e),
            }
        }
        for slot in den.into_iter().flatten() {
            match gamma_half(&slot) {
                Ok(g) => acc = acc.div(&g),
                Err(Error::GammaPole) => {
                    // Γ at a pole in the denominator: the quotient is zero.
                    acc = acc.scale(&rat_i(0));
                }
                Err(e) => return Err(e),
            }
        }
        if numerator_pole {
            // An uncancelled numerator pole means the product is infinite (or
            // a 0·∞ form whose cancellation the caller must make explicit).
            return Err(Error::GammaPole);
        }
        Ok(acc)
    }

    /// Floating-point value via log-Gamma, with sign tracking (arguments may
    /// be negative non-integers).
    pub fn to_f64(&self) -> f64 {
        let mut log = 0.0f64;
        let mut sign = 1.0f64;
        for a in &self.num {
            let (l, s) = lgamma_signed(rational_to_f64(a));
            log += l;
            sign *= s;
        }
        for b in &self.den {
            let (l, s) = lgamma_signed(rational_to_f64(b));
            log -= l;
            sign /= s;
        }
        sign * libm::exp(log)
    }
}

fn lgamma_signed(x: f64) -> (f64, f64) {
    let (l, s) = libm::lgamma_r(x);
    (l, s as f64)
}

// ---------------------------------------------------------------------------
// Float conversion
// ---------------------------------------------------------------------------

/// Convert a rational to `f64`, correctly handling magnitudes far outside the
/// naive `numer as f64 / denom as f64` range.
pub fn rational_to_f64(q: &Rational) -> f64 {
    if q.is_zero() {
        return 0.0;
    }
    let negative = q.numer().sign() == Sign::Minus;
    let n: &BigUint = q.numer().magnitude();
    let d: &BigUint = q.denom().magnitude();
    let nb = n.bits() as i64;
    let db = d.bits() as i64;
    // Scale so the integer quotient carries ~64 significant bits.
    let a = 64 - (nb - db);
    let quot: BigUint = if a >= 0 {
        (n << (a as u64)) / d
    } else {
        n / (d << ((-a) as u64))
    };
    let mantissa = quot.to_f64().unwrap_or(f64::INFINITY);
    let value = mantissa * libm::exp2(-(a as f64));
    if negative {
        -value
    } else {
        value
    }
}

/// Convert a Gaussian rational to complex double precision.
pub fn complex_to_f64(z: &ComplexRational) -> num_complex::Complex64 {
    num_complex::Complex64::new(rational_to_f64(&z.re), rational_to_f64(&z.im))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pochhammer_basics() {
        // (1)_4 = 4!
        assert_eq!(pochhammer(&crat_i(1), 4), crat_i(24));
        // (a)_0 = 1
        assert_eq!(pochhammer(&crat_i(7), 0), crat_i(1));
        // (−3)_5 crosses zero
        assert_eq!(pochhammer(&crat_i(-3), 5), crat_i(0));
    }

    #[test]
    fn double_factorial_and_catalan() {
        assert_eq!(odd_double_factorial(0), rat_i(1));
        assert_eq!(odd_double_factorial(3), rat_i(15));
        assert_eq!(catalan(0), rat_i(1));
        assert_eq!(catalan(1), rat_i(1));
        assert_eq!(catalan(2), rat_i(2));
        assert_eq!(catalan(3), rat_i(5));
        assert_eq!(catalan(4), rat_i(14));
    }

    #[test]
    fn gamma_half_values() {
        // Γ(4) = 6
        assert_eq!(gamma_half(&rat_i(4)).unwrap().as_rational(), Some(rat_i(6)));
        // Γ(1/2) = √π
        let g = gamma_half(&rat(1, 2)).unwrap();
        assert_eq!(g.rational, rat_i(1));
        assert_eq!(g.sqrt_pi_pow, 1);
        // Γ(7/2) = 15/8 √π
        let g = gamma_half(&rat(7, 2)).unwrap();
        assert_eq!(g.rational, rat(15, 8));
        // Γ(−1/2) = −2√π
        let g = gamma_half(&rat(-1, 2)).unwrap();
        assert_eq!(g.rational, rat_i(-2));
        // Γ(0) is a pole
        assert_eq!(gamma_half(&rat_i(0)), Err(Error::GammaPole));
    }

    #[test]
    fn gamma_prod_reduction() {
        // Γ(k+α+1)/Γ(α+1) at k=3, α=5/2 → (7/2)(9/2)(11/2) = 693/8
        let p = GammaProd::new()
            .times_gamma(rat(13, 2))
            .over_gamma(rat(7, 2));
        assert_eq!(p.reduce().unwrap().as_rational(), Some(rat(693, 8)));
        // Γ(1/2)·Γ(5/2)/Γ(3) = (3/4)π/2 → grade 2
        let p = GammaProd::new()
            .times_gamma(rat(1, 2))
            .times_gamma(rat(5, 2))
            .over_gamma(rat_i(3));
        let r = p.reduce().unwrap();
        assert_eq!(r.sqrt_pi_pow, 2);
        assert_eq!(r.rational, rat(3, 8));
        // Γ(−2) in the denominator → 0
        let p = GammaProd::new().times_gamma(rat_i(2)).over_gamma(rat_i(-2));
        assert!(p.reduce().unwrap().is_zero());
    }

    #[test]
    fn rational_f64_extremes() {
        let big = pochhammer_rat(&rat_i(1), 200); // 200! ≫ f64 max
        let inv = rat_i(1) / big.clone();
        assert!(rational_to_f64(&big).is_infinite());
        assert_eq!(rational_to_f64(&inv), 0.0);
        let x = rat(-355, 113);
        assert!((rational_to_f64(&x) + 3.1415929203539825).abs() < 1e-15);
    }

    #[test]
    fn gamma_ratio_negative_offset() {
        // Γ(a−2)/Γ(a) = 1/((a−2)(a−1)) at a = 7/2 → 1/(3/2·5/2) = 4/15
        assert_eq!(gamma_ratio(&rat(7, 2), -2).unwrap(), rat(4, 15));
    }
}
