//! Dense univariate polynomials over the exact scalars.
//!
//! Two representations:
//!
//! - [`Poly`] — coefficients in [`ComplexRational`] (Gaussian rationals);
//!   houses orthogonal-polynomial coefficient vectors and completed zeta
//!   polynomials before their reality is established.
//! - [`RealPoly`] — coefficients in [`Rational`]; carries everything
//!   root-related: Sturm sequences, certified real-root counting and
//!   isolation, and exact bisection refinement.
//!
//! Coefficients are stored low-to-high; the zero polynomial is the empty
//! vector and has degree `None`.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::exact::{c_re, crat_i, rat, rat_i, rational_to_f64, ComplexRational, Rational};

/// Dense polynomial with Gaussian-rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<ComplexRational>,
}

impl Poly {
    /// Build from a low-to-high coefficient vector (trailing zeros trimmed).
    pub fn new(mut coeffs: Vec<ComplexRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    /// The constant polynomial `c`.
    pub fn constant(c: ComplexRational) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Poly::new(vec![crat_i(0), crat_i(1)])
    }

    /// Coefficient vector, low-to-high.
    pub fn coeffs(&self) -> &[ComplexRational] {
        &self.coeffs
    }

    /// Coefficient of `x^j` (zero beyond the degree).
    pub fn coeff(&self, j: usize) -> ComplexRational {
        self.coeffs.get(j).cloned().unwrap_or_else(|| crat_i(0))
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Is this the zero polynomial?
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, x: &ComplexRational) -> ComplexRational {
        let mut acc = crat_i(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Sum.
    #[must_use]
    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|j| self.coeff(j) + other.coeff(j)).collect())
    }

    /// Difference.
    #[must_use]
    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|j| self.coeff(j) - other.coeff(j)).collect())
    }

    /// Product (schoolbook; degrees here stay in the hundreds).
    #[must_use]
    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![crat_i(0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }

    /// Scalar multiple.
    #[must_use]
    pub fn scale(&self, c: &ComplexRational) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Derivative.
    #[must_use]
    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(j, c)| c.clone() * crat_i((j + 1) as i64))
                .collect(),
        )
    }

    /// Composition with the affine map `x ↦ a + b·x`: returns `p(a + b x)`.
    #[must_use]
    pub fn compose_linear(&self, a: &ComplexRational, b: &ComplexRational) -> Poly {
        let lin = Poly::new(vec![a.clone(), b.clone()]);
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&Poly::constant(c.clone()));
        }
        acc
    }

    /// The coefficient vector as real rationals, when every imaginary part
    /// vanishes.
    pub fn real_coeffs(&self) -> Option<RealPoly> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            if !c.im.is_zero() {
                return None;
            }
            out.push(c.re.clone());
        }
        Some(RealPoly::new(out))
    }

    /// Lift a real polynomial.
    pub fn from_real(p: &RealPoly) -> Poly {
        Poly::new(p.coeffs.iter().cloned().map(c_re).collect())
    }
}

/// Dense polynomial with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealPoly {
    coeffs: Vec<Rational>,
}

impl RealPoly {
    /// Build from a low-to-high coefficient vector (trailing zeros trimmed).
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RealPoly { coeffs }
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        RealPoly { coeffs: Vec::new() }
    }

    /// The constant polynomial `c`.
    pub fn constant(c: Rational) -> Self {
        RealPoly::new(vec![c])
    }

    /// Coefficient vector, low-to-high.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^j` (zero beyond the degree).
    pub fn coeff(&self, j: usize) -> Rational {
        self.coeffs.get(j).cloned().unwrap_or_else(|| rat_i(0))
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Is this the zero polynomial?
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Leading coefficient (panics on the zero polynomial).
    pub fn leading(&self) -> &Rational {
        self.coeffs
            .last()
            .expect("zero polynomial has no leading coefficient")
    }

    /// True when the leading coefficient is 1.
    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| *c == rat_i(1))
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = rat_i(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Floating-point evaluation with coefficients pre-normalized by the
    /// largest coefficient magnitude, i.e. `p(x)/maxⱼ|cⱼ|`. This is the
    /// meaningful residual scale for polynomials whose exact coefficients are
    /// astronomically large.
    pub fn eval_f64_normalized(&self, x: f64) -> f64 {
        let coeffs = self.normalized_f64_coeffs();
        let mut acc = 0.0f64;
        for c in coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Coefficients divided (exactly) by the largest coefficient magnitude,
    /// then rounded to f64. Empty for the zero polynomial.
    pub fn normalized_f64_coeffs(&self) -> Vec<f64> {
        let Some(max) = self.coeffs.iter().map(Rational::abs).max() else {
            return Vec::new();
        };
        self.coeffs
            .iter()
            .map(|c| rational_to_f64(&(c.clone() / max.clone())))
            .collect()
    }

    /// Sum.
    #[must_use]
    pub fn add(&self, other: &RealPoly) -> RealPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        RealPoly::new((0..n).map(|j| self.coeff(j) + other.coeff(j)).collect())
    }

    /// Difference.
    #[must_use]
    pub fn sub(&self, other: &RealPoly) -> RealPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        RealPoly::new((0..n).map(|j| self.coeff(j) - other.coeff(j)).collect())
    }

    /// Product.
    #[must_use]
    pub fn mul(&self, other: &RealPoly) -> RealPoly {
        if self.is_zero() || other.is_zero() {
            return RealPoly::zero();
        }
        let mut out = vec![rat_i(0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a.clone() * b.clone();
            }
        }
        RealPoly::new(out)
    }

    /// Scalar multiple.
    #[must_use]
    pub fn scale(&self, c: &Rational) -> RealPoly {
        RealPoly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Derivative.
    #[must_use]
    pub fn derivative(&self) -> RealPoly {
        if self.coeffs.len() <= 1 {
            return RealPoly::zero();
        }
        RealPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(j, c)| c.clone() * rat_i((j + 1) as i64))
                .collect(),
        )
    }

    /// Composition with `x ↦ a + b·x`.
    #[must_use]
    pub fn compose_linear(&self, a: &Rational, b: &Rational) -> RealPoly {
        let lin = RealPoly::new(vec![a.clone(), b.clone()]);
        let mut acc = RealPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&RealPoly::constant(c.clone()));
        }
        acc
    }

    /// Euclidean division: returns `(quotient, remainder)` with
    /// `self = q·other + r` and `deg r < deg other`.
    ///
    /// # Panics
    /// Panics when `other` is the zero polynomial.
    pub fn divrem(&self, other: &RealPoly) -> (RealPoly, RealPoly) {
        assert!(!other.is_zero(), "division by the zero polynomial");
        let d = other.coeffs.len() - 1;
        if self.coeffs.len() <= d {
            return (RealPoly::zero(), self.clone());
        }
        let lead = other.leading().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![rat_i(0); rem.len() - d];
        while rem.len() > d {
            let deg_r = rem.len() - 1;
            let factor = rem[deg_r].clone() / lead.clone();
            if !factor.is_zero() {
                quot[deg_r - d] = factor.clone();
                for j in 0..d {
                    let t = other.coeffs[j].clone() * factor.clone();
                    rem[deg_r - d + j] -= t;
                }
            }
            rem.pop();
        }
        (RealPoly::new(quot), RealPoly::new(rem))
    }

    /// Primitive part under *positive* scaling: clear denominators, divide by
    /// the positive integer content. Signs of all coefficients are preserved,
    /// so Sturm-sequence sign data is unchanged while coefficient growth is
    /// tamed.
    #[must_use]
    pub fn primitive(&self) -> RealPoly {
        if self.is_zero() {
            return RealPoly::zero();
        }
        use num_bigint::BigInt;
        use num_integer::Integer;
        let mut lcm_den = BigInt::from(1);
        for c in &self.coeffs {
            lcm_den = lcm_den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm_den / c.denom()))
            .collect();
        let mut g = BigInt::from(0);
        for v in &ints {
            g = g.gcd(v);
        }
        RealPoly::new(
            ints.into_iter()
                .map(|v| Rational::from_integer(v / &g))
                .collect(),
        )
    }

    /// Polynomial gcd, returned monic.
    #[must_use]
    pub fn gcd(&self, other: &RealPoly) -> RealPoly {
        let mut a = self.primitive();
        let mut b = other.primitive();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.primitive();
        }
        if a.is_zero() {
            return a;
        }
        let lead = a.leading().clone();
        a.scale(&(rat_i(1) / lead))
    }

    /// True when the polynomial has no repeated roots.
    pub fn is_square_free(&self) -> bool {
        match self.degree() {
            None | Some(0) => true,
            _ => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }

    /// Newton-form interpolation through exact points with distinct abscissae.
    ///
    /// # Panics
    /// Panics when two abscissae coincide.
    pub fn interpolate(points: &[(Rational, Rational)]) -> RealPoly {
        let mut result = RealPoly::zero();
        let mut basis = RealPoly::constant(rat_i(1));
        for (xi, yi) in points {
            let b = basis.eval(xi);
            assert!(!b.is_zero(), "interpolation abscissae must be distinct");
            let v = (yi.clone() - result.eval(xi)) / b;
            result = result.add(&basis.scale(&v));
            basis = basis.mul(&RealPoly::new(vec![-xi.clone(), rat_i(1)]));
        }
        result
    }
}

// ---------------------------------------------------------------------------
// Sturm sequences and certified real roots
// ---------------------------------------------------------------------------

/// A Sturm chain of a square-free polynomial, supporting exact root counting
/// on arbitrary intervals and at ±∞.
#[derive(Debug, Clone)]
pub struct SturmChain {
    chain: Vec<RealPoly>,
}

impl SturmChain {
    /// Build the chain `p, p′, −rem(…), …`, with positive-scaling primitive
    /// normalization at each step to keep integer coefficients small.
    pub fn new(p: &RealPoly) -> Self {
        let mut chain = Vec::new();
        let p0 = p.primitive();
        if p0.is_zero() {
            return SturmChain { chain };
        }
        chain.push(p0.clone());
        let mut prev = p0;
        let mut cur = p.derivative().primitive();
        while !cur.is_zero() {
            chain.push(cur.clone());
            let (_, r) = prev.divrem(&cur);
            prev = cur;
            cur = RealPoly::zero().sub(&r).primitive();
        }
        SturmChain { chain }
    }

    fn sign_variations<F: Fn(&RealPoly) -> i8>(&self, sign_at: F) -> usize {
        let mut variations = 0;
        let mut last = 0i8;
        for p in &self.chain {
            let s = sign_at(p);
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                variations += 1;
            }
            last = s;
        }
        variations
    }

    fn variations_at(&self, x: &Rational) -> usize {
        self.sign_variations(|p| sign_of(&p.eval(x)))
    }

    fn variations_at_neg_inf(&self) -> usize {
        self.sign_variations(|p| {
            let s = if p.leading().is_positive() { 1i8 } else { -1 };
            if p.degree().unwrap_or(0) % 2 == 0 {
                s
            } else {
                -s
            }
        })
    }

    fn variations_at_pos_inf(&self) -> usize {
        self.sign_variations(|p| if p.leading().is_positive() { 1 } else { -1 })
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`;
    /// `None` bounds mean ∓∞.
    pub fn count_roots(&self, a: Option<&Rational>, b: Option<&Rational>) -> usize {
        if self.chain.is_empty() {
            return 0;
        }
        let va = match a {
            Some(x) => self.variations_at(x),
            None => self.variations_at_neg_inf(),
        };
        let vb = match b {
            Some(x) => self.variations_at(x),
            None => self.variations_at_pos_inf(),
        };
        va.saturating_sub(vb)
    }
}

/// A certified real root of a square-free polynomial.
#[derive(Debug, Clone)]
pub enum IsolatedRoot {
    /// The root is exactly this rational.
    Exact(Rational),
    /// The unique root lies in the open interval `(lo, hi)`, and the
    /// polynomial is nonzero with opposite signs at the endpoints.
    Bracket(Rational, Rational),
}

/// Isolate all real roots of a square-free polynomial into disjoint
/// certificates, ordered increasingly.
///
/// # Panics
/// Panics when `p` has repeated roots; callers establish square-freeness
/// first (every polynomial this crate isolates is proven square-free).
pub fn isolate_real_roots(p: &RealPoly) -> Vec<IsolatedRoot> {
    let p = p.primitive();
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    assert!(p.is_square_free(), "root isolation requires a square-free input");
    let chain = SturmChain::new(&p);
    let total = chain.count_roots(None, None);
    if total == 0 {
        return Vec::new();
    }
    // Grow a symmetric window until it provably contains every real root.
    // (Doubling from a small start beats a Cauchy bound here: the coefficient
    // ratios of the polynomials this crate produces can be astronomically
    // large while the roots stay moderate.)
    let mut bound = rat_i(2);
    loop {
        let inside = chain.count_roots(Some(&-bound.clone()), Some(&bound));
        let at_neg = p.eval(&-bound.clone()).is_zero();
        if inside == total && !at_neg {
            break;
        }
        bound *= rat_i(2);
    }
    let mut out = Vec::new();
    subdivide(&p, &chain, -bound.clone(), bound, &mut out);
    out.sort_by_key(root_key);
    debug_assert_eq!(out.len(), total);
    out
}

fn root_key(r: &IsolatedRoot) -> Rational {
    match r {
        IsolatedRoot::Exact(x) => x.clone(),
        IsolatedRoot::Bracket(lo, hi) => (lo.clone() + hi.clone()) / rat_i(2),
    }
}

/// Report every root of `p` in `(lo, hi]`: brackets for interior roots, an
/// exact certificate when `hi` itself is a root. Roots at `lo` belong to the
/// neighbour that owns `lo` as its upper endpoint.
fn subdivide(
    p: &RealPoly,
    chain: &SturmChain,
    lo: Rational,
    hi: Rational,
    out: &mut Vec<IsolatedRoot>,
) {
    let hit_hi = p.eval(&hi).is_zero();
    let mut n = chain.count_roots(Some(&lo), Some(&hi));
    if hit_hi {
        n -= 1;
    }
    match n {
        0 | 1 => {
            if n == 1 {
                out.push(shrink_bracket(p, chain, lo, hi.clone()));
            }
            if hit_hi {
                out.push(IsolatedRoot::Exact(hi));
            }
        }
        _ => {
            let mid = (lo.clone() + hi.clone()) / rat_i(2);
            subdivide(p, chain, lo, mid.clone(), out);
            subdivide(p, chain, mid, hi, out);
        }
    }
}

/// Given exactly one root of `p` in the *open* interval `(lo, hi)` — the
/// endpoints may coincidentally be roots of `p`, reported by other intervals
/// — shrink until both endpoints have nonzero values, or the interior root is
/// hit exactly.
fn shrink_bracket(
    p: &RealPoly,
    chain: &SturmChain,
    mut lo: Rational,
    mut hi: Rational,
) -> IsolatedRoot {
    loop {
        if !p.eval(&lo).is_zero() && !p.eval(&hi).is_zero() {
            return IsolatedRoot::Bracket(lo, hi);
        }
        let mid = (lo.clone() + hi.clone()) / rat_i(2);
        if p.eval(&mid).is_zero() {
            // Roots are simple, so this is the unique interior root.
            return IsolatedRoot::Exact(mid);
        }
        let mut upper = chain.count_roots(Some(&mid), Some(&hi));
        if p.eval(&hi).is_zero() {
            upper -= 1;
        }
        if upper == 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}

/// Refine a root certificate by exact bisection until the bracket width is
/// below `width`; returns the midpoint rounded to f64.
pub fn refine_root(p: &RealPoly, root: &IsolatedRoot, width: &Rational) -> f64 {
    match root {
        IsolatedRoot::Exact(x) => rational_to_f64(x),
        IsolatedRoot::Bracket(lo, hi) => {
            let mut lo = lo.clone();
            let mut hi = hi.clone();
            let mut s_lo = sign_of(&p.eval(&lo));
            while hi.clone() - lo.clone() > *width {
                let mid = (lo.clone() + hi.clone()) / rat_i(2);
                let s_mid = sign_of(&p.eval(&mid));
                if s_mid == 0 {
                    return rational_to_f64(&mid);
                }
                if s_mid == s_lo {
                    lo = mid;
                    s_lo = s_mid;
                } else {
                    hi = mid;
                }
            }
            rational_to_f64(&((lo + hi) / rat_i(2)))
        }
    }
}

fn sign_of(v: &Rational) -> i8 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

/// The default refinement width, 2⁻⁴⁸ ≈ 3.6·10⁻¹⁵.
pub fn default_root_width() -> Rational {
    rat(1, 1 << 48)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::c_im;

    fn rp(coeffs: &[i64]) -> RealPoly {
        RealPoly::new(coeffs.iter().map(|&c| rat_i(c)).collect())
    }

    #[test]
    fn arithmetic_and_eval() {
        // (x² − 1)(x + 3) = x³ + 3x² − x − 3
        let p = rp(&[-1, 0, 1]).mul(&rp(&[3, 1]));
        assert_eq!(p, rp(&[-3, -1, 3, 1]));
        assert_eq!(p.eval(&rat_i(2)), rat_i(15));
        let (q, r) = p.divrem(&rp(&[3, 1]));
        assert_eq!(q, rp(&[-1, 0, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn divrem_with_remainder() {
        // x³ + 2 = (x/2)(2x² + 1) + (2 − x/2)
        let (q, r) = rp(&[2, 0, 0, 1]).divrem(&rp(&[1, 0, 2]));
        assert_eq!(q, RealPoly::new(vec![rat_i(0), rat(1, 2)]));
        assert_eq!(r, RealPoly::new(vec![rat_i(2), rat(-1, 2)]));
    }

    #[test]
    fn compose_linear_shifts() {
        // p(x) = x² composed with x ↦ 1 + 2x gives 1 + 4x + 4x²
        let p = rp(&[0, 0, 1]);
        assert_eq!(p.compose_linear(&rat_i(1), &rat_i(2)), rp(&[1, 4, 4]));
    }

    #[test]
    fn complex_poly_realness() {
        // (x − i)(x + i) = x² + 1 is real
        let a = Poly::new(vec![c_im(rat_i(-1)), crat_i(1)]);
        let b = Poly::new(vec![c_im(rat_i(1)), crat_i(1)]);
        let p = a.mul(&b).real_coeffs().expect("real");
        assert_eq!(p, rp(&[1, 0, 1]));
    }

    #[test]
    fn interpolation_reproduces() {
        let pts = [
            (rat_i(0), rat_i(1)),
            (rat_i(1), rat_i(2)),
            (rat_i(2), rat_i(5)),
        ];
        assert_eq!(RealPoly::interpolate(&pts), rp(&[1, 0, 1]));
        let pts = [
            (rat_i(0), rat(1, 2)),
            (rat_i(1), rat(3, 2)),
            (rat_i(-1), rat(3, 2)),
            (rat_i(2), rat(9, 2)),
        ];
        let p = RealPoly::interpolate(&pts);
        // The data lies on x² + 1/2, so the cubic term vanishes.
        assert_eq!(p, RealPoly::new(vec![rat(1, 2), rat_i(0), rat_i(1)]));
    }

    #[test]
    fn sturm_counts() {
        // (x−1)(x−2)(x−3)(x−4) has 4 real roots
        let p = rp(&[24, -50, 35, -10, 1]);
        let chain = SturmChain::new(&p);
        assert_eq!(chain.count_roots(None, None), 4);
        assert_eq!(chain.count_roots(Some(&rat(3, 2)), Some(&rat(7, 2))), 2);
        // boundary semantics: (1, 2] contains the root at 2
        assert_eq!(chain.count_roots(Some(&rat_i(1)), Some(&rat_i(2))), 1);
        // x² + 1 has none
        assert_eq!(SturmChain::new(&rp(&[1, 0, 1])).count_roots(None, None), 0);
    }

    #[test]
    fn isolation_with_exact_rational_roots() {
        // x(x − 1/2)(x² − 2): roots 0, 1/2, ±√2
        let p = RealPoly::new(vec![rat_i(0), rat_i(1)])
            .mul(&RealPoly::new(vec![rat(-1, 2), rat_i(1)]))
            .mul(&rp(&[-2, 0, 1]));
        let roots = isolate_real_roots(&p);
        assert_eq!(roots.len(), 4);
        let vals: Vec<f64> = roots
            .iter()
            .map(|r| refine_root(&p, r, &default_root_width()))
            .collect();
        let expect = [
            -core::f64::consts::SQRT_2,
            0.0,
            0.5,
            core::f64::consts::SQRT_2,
        ];
        for (v, e) in vals.iter().zip(expect) {
            assert!((v - e).abs() < 1e-12, "{v} vs {e}");
        }
    }

    #[test]
    fn isolation_dense_roots() {
        // Π (x − k/8), k = −3..3 — closely spaced rational roots that land
        // exactly on bisection points.
        let mut p = RealPoly::constant(rat_i(1));
        for k in -3i64..=3 {
            p = p.mul(&RealPoly::new(vec![rat(-k, 8), rat_i(1)]));
        }
        let roots = isolate_real_roots(&p);
        assert_eq!(roots.len(), 7);
        for (i, r) in roots.iter().enumerate() {
            let v = refine_root(&p, r, &default_root_width());
            let e = (i as f64 - 3.0) / 8.0;
            assert!((v - e).abs() < 1e-12, "{v} vs {e}");
        }
    }

    #[test]
    fn square_free_detection() {
        assert!(rp(&[-2, 0, 1]).is_square_free());
        // (x − 1)² is not
        assert!(!rp(&[1, -2, 1]).is_square_free());
    }

    #[test]
    fn normalized_eval_is_scale_invariant() {
        let p = rp(&[2, -4, 8]);
        let q = p.scale(&rat_i(1_000_000));
        let a = p.eval_f64_normalized(0.3);
        let b = q.eval_f64_normalized(0.3);
        assert!((a - b).abs() < 1e-15);
    }
}
