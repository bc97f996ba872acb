//! Floating-point special functions.
//!
//! All transcendental scalar functions route through `libm` (not the
//! `std`-only intrinsic methods), so every numerical result of this crate is
//! identical in `std` and `no_std` builds. Complex transcendentals are built
//! here from the scalar ones, together with a Lanczos-series Gamma function
//! on the complex plane.

use num_complex::Complex64;

/// `eˣ`.
#[inline]
pub fn exp(x: f64) -> f64 {
    libm::exp(x)
}

/// Natural logarithm.
#[inline]
pub fn ln(x: f64) -> f64 {
    libm::log(x)
}

/// Square root.
#[inline]
pub fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

/// `x^y` for real exponent.
#[inline]
pub fn powf(x: f64, y: f64) -> f64 {
    libm::pow(x, y)
}

/// `xⁿ` for integer exponent, by repeated squaring.
pub fn powi(x: f64, n: i64) -> f64 {
    let mut base = if n < 0 { 1.0 / x } else { x };
    let mut e = n.unsigned_abs();
    let mut acc = 1.0;
    while e > 0 {
        if e & 1 == 1 {
            acc *= base;
        }
        base *= base;
        e >>= 1;
    }
    acc
}

/// Sine.
#[inline]
pub fn sin(x: f64) -> f64 {
    libm::sin(x)
}

/// Cosine.
#[inline]
pub fn cos(x: f64) -> f64 {
    libm::cos(x)
}

/// Two-argument arctangent.
#[inline]
pub fn atan2(y: f64, x: f64) -> f64 {
    libm::atan2(y, x)
}

/// Hyperbolic sine.
#[inline]
pub fn sinh(x: f64) -> f64 {
    libm::sinh(x)
}

/// Hyperbolic cosine.
#[inline]
pub fn cosh(x: f64) -> f64 {
    libm::cosh(x)
}

/// Error function.
#[inline]
pub fn erf(x: f64) -> f64 {
    libm::erf(x)
}

/// Complementary error function.
#[inline]
pub fn erfc(x: f64) -> f64 {
    libm::erfc(x)
}

/// Real Gamma function.
#[inline]
pub fn tgamma(x: f64) -> f64 {
    libm::tgamma(x)
}

/// `ln |Γ(x)|` together with the sign of `Γ(x)`.
#[inline]
pub fn lgamma_signed(x: f64) -> (f64, i32) {
    libm::lgamma_r(x)
}

/// Complex exponential.
pub fn cexp(z: Complex64) -> Complex64 {
    let r = exp(z.re);
    Complex64::new(r * cos(z.im), r * sin(z.im))
}

/// Principal complex logarithm.
pub fn cln(z: Complex64) -> Complex64 {
    // hypot keeps the modulus finite where norm_sqr() would over/underflow.
    Complex64::new(ln(libm::hypot(z.re, z.im)), atan2(z.im, z.re))
}

/// Principal complex square root.
pub fn csqrt(z: Complex64) -> Complex64 {
    if z.re == 0.0 && z.im == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    let m = sqrt(libm::hypot(z.re, z.im));
    let half_arg = atan2(z.im, z.re) * 0.5;
    Complex64::new(m * cos(half_arg), m * sin(half_arg))
}

/// Principal power `z^w`.
pub fn cpow(z: Complex64, w: Complex64) -> Complex64 {
    if z.re == 0.0 && z.im == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    cexp(w * cln(z))
}

/// Complex sine.
pub fn csin(z: Complex64) -> Complex64 {
    Complex64::new(sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im))
}

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// Complex Gamma function (Lanczos approximation, reflection for
/// `Re z < 1/2`). Relative accuracy ~1e−13 away from poles.
pub fn cgamma(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        // Γ(z) Γ(1−z) = π / sin(πz)
        let pi = core::f64::consts::PI;
        let s = csin(Complex64::new(pi, 0.0) * z);
        return Complex64::new(pi, 0.0) / (s * cgamma(Complex64::new(1.0, 0.0) - z));
    }
    let z = z - Complex64::new(1.0, 0.0);
    let mut x = Complex64::new(LANCZOS[0], 0.0);
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        x += Complex64::new(*c, 0.0) / (z + Complex64::new(i as f64, 0.0));
    }
    let t = z + Complex64::new(LANCZOS_G + 0.5, 0.0);
    let sqrt_two_pi = 2.506_628_274_631_000_7;
    Complex64::new(sqrt_two_pi, 0.0) * cpow(t, z + Complex64::new(0.5, 0.0)) * cexp(-t) * x
}

/// `ln sin(πz)` without materializing `sin(πz)` itself, which overflows f64
/// once `|Im z| ≳ 226` even though its logarithm stays modest.  For large
/// `|Im z|` the dominant exponential is factored out analytically; the
/// neglected correction has modulus `e^{−2π·20} ≈ 3e−55`.  Imaginary part is
/// principal only up to multiples of `2π`.
fn cln_sin_pi(z: Complex64) -> Complex64 {
    let pi = core::f64::consts::PI;
    if z.im.abs() <= 20.0 {
        return cln(csin(Complex64::new(pi, 0.0) * z));
    }
    let (sgn, ya) = if z.im > 0.0 { (1.0, z.im) } else { (-1.0, -z.im) };
    Complex64::new(
        ya * pi - core::f64::consts::LN_2,
        sgn * (0.5 * pi - pi * z.re),
    )
}

/// Complex log-Gamma (principal value up to multiples of 2πi; the real part —
/// `ln |Γ(z)|` — is accurate everywhere, which is what the decay bounds and
/// quadrature truncations consume).
pub fn clgamma(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        let pi = core::f64::consts::PI;
        return cln(Complex64::new(pi, 0.0)) - cln_sin_pi(z) - clgamma(Complex64::new(1.0, 0.0) - z);
    }
    let zm = z - Complex64::new(1.0, 0.0);
    let mut x = Complex64::new(LANCZOS[0], 0.0);
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        x += Complex64::new(*c, 0.0) / (zm + Complex64::new(i as f64, 0.0));
    }
    let t = zm + Complex64::new(LANCZOS_G + 0.5, 0.0);
    let half_ln_two_pi = 0.918_938_533_204_672_8;
    Complex64::new(half_ln_two_pi, 0.0)
        + (zm + Complex64::new(0.5, 0.0)) * cln(t)
        - t
        + cln(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * (1.0 + a.abs().max(b.abs()))
    }

    #[test]
    fn gamma_real_axis() {
        for (x, want) in [(1.0, 1.0), (2.0, 1.0), (5.0, 24.0), (0.5, 1.772_453_850_905_516)] {
            let got = cgamma(Complex64::new(x, 0.0));
            assert!(close(got.re, want, 1e-12), "gamma({x}) = {got}");
            assert!(got.im.abs() < 1e-12);
        }
    }

    #[test]
    fn gamma_reflection_and_known_modulus() {
        // |Γ(1/2 + it)|² = π / cosh(πt)
        let t = 1.7;
        let g = cgamma(Complex64::new(0.5, t));
        let want = core::f64::consts::PI / cosh(core::f64::consts::PI * t);
        assert!(close(g.norm_sqr(), want, 1e-11));
        // |Γ(1 + it)|² = πt / sinh(πt)
        let g = cgamma(Complex64::new(1.0, t));
        let want = core::f64::consts::PI * t / sinh(core::f64::consts::PI * t);
        assert!(close(g.norm_sqr(), want, 1e-11));
    }

    #[test]
    fn clgamma_matches_cgamma() {
        for &(re, im) in &[(3.2, 1.1), (0.7, -2.0), (5.0, 10.0)] {
            let z = Complex64::new(re, im);
            let via_log = cexp(clgamma(z));
            let direct = cgamma(z);
            assert!((via_log - direct).norm() < 1e-10 * direct.norm());
        }
    }

    #[test]
    fn powi_matches_powf() {
        assert!(close(powi(1.7, 13), powf(1.7, 13.0), 1e-14));
        assert!(close(powi(0.3, -7), powf(0.3, -7.0), 1e-14));
    }
}
