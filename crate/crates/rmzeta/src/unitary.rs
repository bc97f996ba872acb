//! Exact spectral moments of the unitary-symmetry (β = 2) ensembles.
//!
//! This module computes `E Tr Xⁿᵏ`-type averages for the Gaussian, Laguerre,
//! and Jacobi unitary ensembles entirely in rational arithmetic:
//!
//! * closed-form positive moments (Harer–Zagier sums for the Gaussian case,
//!   Hanlon–Stanley–Stembridge sums for the Laguerre case, a Wilson-polynomial
//!   closed form for Jacobi moment differences);
//! * negative moments through exact reciprocity products;
//! * three-term recursions in the moment index and residual checks for them;
//! * reflection and convolution identities for Gaussian moments;
//! * exact Taylor coefficients of the moment generating functions;
//! * the integrality expansion of scaled inverse-moment observables of
//!   square Wishart matrices;
//! * closed-form trace covariances, loop-equation stencils and residuals, and
//!   the exact large-size covariance series of one-cut ensembles.
//!
//! Every value is either a plain `Rational` or a [`MomentValue`] pairing a
//! normalized rational with a symbolic prefactor unit, so downstream layers
//! can keep factorially large magnitudes in factored form.

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::ensemble::{EnsembleSpec, Family, MomentValue, PrefactorTag};
use crate::error::{Error, Result};
use crate::exact::{
    binomial, binomial_rat, c_im, factorial, odd_double_factorial, pochhammer_rat, rat, rat_i,
    rational_pow, Rational,
};
use crate::hyper::{op_eval, OPParams};
use crate::poly::RealPoly;

// ---------------------------------------------------------------------------
// Gaussian unitary ensemble
// ---------------------------------------------------------------------------

/// Exact even moment `E Tr X^{2k}` of the `n × n` Gaussian unitary ensemble,
/// returned in units of `(2k−1)!!`.
///
/// Uses the Harer–Zagier closed form
/// `E Tr X^{2k} = (2k−1)!! Σ_{i≥1} 2^{i−1} C(n,i) C(k,i−1)`,
/// which is exact for all `n ≥ 1, k ≥ 0`. The degenerate size `n = 0` yields
/// the empty-matrix value `0`, which the size recursion relies on.
pub fn gue_moment(n: u32, k: u32) -> MomentValue {
    let mut normalized = Rational::zero();
    let top = core::cmp::min(n as u64, k as u64 + 1);
    for i in 1..=top {
        let term = binomial(n as u64, i)
            * binomial(k as u64, i - 1)
            * rational_pow(&rat_i(2), i as i64 - 1);
        normalized += term;
    }
    MomentValue::in_double_factorial_units(k as i64, normalized)
}

/// The normalized Gaussian moment `E Tr X^{2k} / (2k−1)!!` extended to a
/// rational moment index `k`.
///
/// As a function of `k` this is the degree-`(n−1)` polynomial
/// `n · ₂F₁(−k, 1−n; 2; 2)`; at nonnegative integer `k` it agrees with
/// [`gue_moment`]. The polynomial is invariant up to the sign `(−1)^{n−1}`
/// under the reflection `k → −2−k`.
pub fn gue_normalized_at(n: u32, k: &Rational) -> Rational {
    let neg_k = -k.clone();
    let one_minus_n = rat_i(1 - n as i64);
    let mut sum = Rational::zero();
    for j in 0..n as u64 {
        let term = pochhammer_rat(&one_minus_n, j)
            * pochhammer_rat(&neg_k, j)
            * rational_pow(&rat_i(2), j as i64)
            / (pochhammer_rat(&rat_i(2), j) * factorial(j));
        sum += term;
    }
    rat_i(n as i64) * sum
}

/// Residual of the Gaussian moment reflection identity, exactly zero for all
/// `n ≥ 1, k ≥ 0`:
///
/// `Q_k(n) / (n (2k−1)!!) = Q_{n−1}(k+1) / ((k+1) (2n−3)!!)`,
///
/// which swaps the roles of the moment index and the matrix size. The point
/// `n = k + 1` is the fixed point of the swap.
pub fn gue_reflection_residual(n: u32, k: u32) -> Rational {
    assert!(n >= 1, "matrix size must be positive");
    let lhs = gue_moment(n, k).normalized / rat_i(n as i64);
    let rhs = gue_moment(k + 1, n - 1).normalized / rat_i(k as i64 + 1);
    lhs - rhs
}

/// Residual of the Gaussian moment convolution identity, exactly zero for all
/// `n ≥ 1, k ≥ 0`: the binomial-weighted self-convolution of normalized
/// moments of size `n` equals a two-point combination of moments of sizes
/// `2n ± 1` at index `k + 2`.
pub fn gue_convolution_residual(n: u32, k: u32) -> Rational {
    assert!(n >= 1, "matrix size must be positive");
    let nn = rat_i(n as i64);
    let mut lhs = Rational::zero();
    for j in 0..=k {
        let left = rat_i(j as i64 + 1) * gue_moment(n, j).normalized / nn.clone();
        let right = rat_i((k - j) as i64 + 1) * gue_moment(n, k - j).normalized / nn.clone();
        lhs += left * right;
    }
    let kk = k as i64;
    let up = gue_moment(2 * n + 1, k + 2).full_value() / rat_i(2 * n as i64 + 1)
        * rat_i(kk + 2 - 2 * n as i64);
    let down = gue_moment(2 * n - 1, k + 2).full_value() / rat_i(2 * n as i64 - 1)
        * rat_i(kk + 2 + 2 * n as i64);
    let rhs = (up + down) / (rat_i(4) * odd_double_factorial(k as u64 + 2));
    lhs - rhs
}

/// Residual of the Gaussian moment recursion in the matrix size, exactly zero
/// for all `n ≥ 1, k ≥ 0`:
///
/// `n Q_k(n+1) = 2(k+1) Q_k(n) + n Q_k(n−1)`, with `Q_k(0) = 0`.
pub fn gue_size_recursion_residual(n: u32, k: u32) -> Rational {
    assert!(n >= 1, "matrix size must be positive");
    let nn = rat_i(n as i64);
    nn.clone() * gue_moment(n + 1, k).full_value()
        - rat_i(2 * (k as i64 + 1)) * gue_moment(n, k).full_value()
        - nn * gue_moment(n - 1, k).full_value()
}

// ---------------------------------------------------------------------------
// Laguerre unitary ensemble
// ---------------------------------------------------------------------------

/// Exact moment `E Tr Xᵏ` of the Laguerre unitary ensemble built from an
/// `n × m` data matrix (`m ≥ n ≥ 1`), for positive or negative integer `k`.
///
/// Positive moments use the Hanlon–Stanley–Stembridge alternating sum, a
/// symmetric polynomial in `m` and `n`; negative moments follow from the
/// reciprocity product `Q_{−(k+1)} = Q_k · Π_{j=−k}^{k} (α+j)^{−1}` with
/// `α = m − n`.
///
/// # Errors
/// [`Error::InvalidParameters`] unless `m ≥ n ≥ 1`;
/// [`Error::DivergentMoment`] when `k < −α` (the negative moment diverges).
pub fn lue_moment(m: u32, n: u32, k: i64) -> Result<MomentValue> {
    if n == 0 || m < n {
        return Err(Error::InvalidParameters(
            "Laguerre moments need data-matrix dimensions m ≥ n ≥ 1",
        ));
    }
    lue_moment_rational(&rat_i(m as i64 - n as i64), n, k)
}

/// [`lue_moment`] with a rational weight parameter `α > −1` in place of the
/// integer dimension difference `m − n`.
///
/// All closed forms are rational in `α`, so the moment extends exactly;
/// `m = α + n` enters the positive-moment sum as a rational.
///
/// # Errors
/// [`Error::InvalidParameters`] if `n = 0` or `α ≤ −1`;
/// [`Error::DivergentMoment`] for `k = −j` unless `α > j − 1`.
pub fn lue_moment_rational(alpha: &Rational, n: u32, k: i64) -> Result<MomentValue> {
    if n == 0 {
        return Err(Error::InvalidParameters("matrix size must be positive"));
    }
    if *alpha <= rat_i(-1) {
        return Err(Error::InvalidParameters(
            "Laguerre weight parameter must exceed −1",
        ));
    }
    let full = if k >= 0 {
        lue_full_positive(alpha, n, k as u64)
    } else {
        let j = k.unsigned_abs();
        if *alpha <= rat_i(j as i64 - 1) {
            return Err(Error::DivergentMoment(
                "negative Laguerre moment of order beyond the weight parameter",
            ));
        }
        let mut product = Rational::one();
        for i in -(j as i64 - 1)..=(j as i64 - 1) {
            product *= alpha.clone() + rat_i(i);
        }
        lue_full_positive(alpha, n, j - 1) / product
    };
    let tag = PrefactorTag::LaguerrePochhammer {
        alpha: alpha.clone(),
    };
    let unit = tag.value(k)?;
    Ok(MomentValue {
        k,
        normalized: full / unit,
        prefactor: tag,
    })
}

/// The full positive Laguerre moment `Q_k` as an explicit rational, with
/// `m = α + n` entering as a rational parameter:
///
/// `Q_k = (1/k) Σ_{i=1}^{min(k,n)} (−1)^{i−1} (m−i+1)_k (n−i+1)_k / ((k−i)! (i−1)!)`.
fn lue_full_positive(alpha: &Rational, n: u32, k: u64) -> Rational {
    if k == 0 {
        return rat_i(n as i64);
    }
    let m = alpha.clone() + rat_i(n as i64);
    let mut sum = Rational::zero();
    let top = core::cmp::min(k, n as u64);
    for i in 1..=top {
        let term = pochhammer_rat(&(m.clone() - rat_i(i as i64 - 1)), k)
            * pochhammer_rat(&rat_i(n as i64 - i as i64 + 1), k)
            / (factorial(k - i) * factorial(i - 1));
        if i % 2 == 1 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum / rat_i(k as i64)
}

/// Brute-force permutation-sum oracle for the scaled Laguerre moment
/// `E Tr Xᵏ / n^{k+1}`:
///
/// `Σ_{σ ∈ S_k} n^{#(σ) + #(γ_k σ^{−1}) − (k+1)} (m/n)^{#(σ)}`,
///
/// where `γ_k` is the full `k`-cycle and `#` counts cycles. An independent
/// combinatorial route to the same value as [`lue_moment`]`/n^{k+1}`; the
/// degenerate index `k = 0` returns `1` (the scaled trace of the identity).
///
/// # Errors
/// [`Error::TooLarge`] when `k > 9` (the sum enumerates `k!` permutations);
/// [`Error::InvalidParameters`] unless `m, n ≥ 1`.
pub fn lue_permutation_oracle(m: u32, n: u32, k: u32) -> Result<Rational> {
    if k > 9 {
        return Err(Error::TooLarge(
            "permutation enumeration is limited to k ≤ 9",
        ));
    }
    if m == 0 || n == 0 {
        return Err(Error::InvalidParameters(
            "data-matrix dimensions must be positive",
        ));
    }
    if k == 0 {
        return Ok(Rational::one());
    }
    let kk = k as usize;
    let ratio = rat(m as i64, n as i64);
    let base_n = rat_i(n as i64);
    let mut total = Rational::zero();
    for_each_permutation(kk, |perm| {
        let c_sigma = cycle_count(perm);
        let mut inv = vec![0usize; kk];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let composed: Vec<usize> = (0..kk).map(|i| (inv[i] + 1) % kk).collect();
        let c_comp = cycle_count(&composed);
        total += rational_pow(&base_n, c_sigma as i64 + c_comp as i64 - (kk as i64 + 1))
            * rational_pow(&ratio, c_sigma as i64);
    });
    Ok(total)
}

/// Visit every permutation of `{0, …, k−1}` (Heap's algorithm).
fn for_each_permutation(k: usize, mut visit: impl FnMut(&[usize])) {
    let mut a: Vec<usize> = (0..k).collect();
    let mut c = vec![0usize; k];
    visit(&a);
    let mut i = 0;
    while i < k {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            visit(&a);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Number of cycles of a permutation given in one-line notation.
fn cycle_count(perm: &[usize]) -> usize {
    let mut seen = vec![false; perm.len()];
    let mut cycles = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut t = start;
        while !seen[t] {
            seen[t] = true;
            t = perm[t];
        }
    }
    cycles
}

// ---------------------------------------------------------------------------
// Jacobi unitary ensemble
// ---------------------------------------------------------------------------

fn jacobi_guards(alpha1: &Rational, alpha2: &Rational, n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameters("matrix size must be positive"));
    }
    if *alpha1 <= rat_i(-1) || *alpha2 <= rat_i(-1) {
        return Err(Error::InvalidParameters(
            "Jacobi weight exponents must exceed −1",
        ));
    }
    Ok(())
}

/// Exact Jacobi moment difference `ΔQ_k = Q_k − Q_{k+1}` where
/// `Q_k = E Tr Xᵏ` over the weight `(1−x)^{α₁} x^{α₂}` on `[0, 1]`,
/// returned in units of `(α₂+1)_k / (g+1)_k` with `g = α₁+α₂+2n`.
///
/// The normalized part is a Wilson polynomial of degree `n − 1` evaluated at
/// the purely imaginary spectral point `x = i(k + 1/2)`, where the series
/// arguments `a ± ix = {1−k, 2+k}` collapse to rationals, so the whole value
/// is exact for every integer `k` — negative indices included, which makes
/// the reciprocity law a testable consequence rather than a second code path.
///
/// # Errors
/// [`Error::InvalidParameters`] if `n = 0` or an exponent is ≤ −1;
/// [`Error::DivergentMoment`] for `k ≤ −1` when `|k| − 1 ≥ α₂ + 1` or when
/// the prefactor unit has a pole at `k` (integer `α₂` inside the reflection
/// range).
pub fn jue_delta_moment(
    alpha1: &Rational,
    alpha2: &Rational,
    n: u32,
    k: i64,
) -> Result<MomentValue> {
    jacobi_guards(alpha1, alpha2, n)?;
    if k <= -1 && rat_i(-k - 1) >= alpha2.clone() + rat_i(1) {
        return Err(Error::DivergentMoment(
            "negative Jacobi moment difference of order beyond the weight parameter",
        ));
    }
    let g = alpha1.clone() + alpha2.clone() + rat_i(2 * n as i64);
    let tag = PrefactorTag::JacobiPochhammerRatio {
        alpha2: alpha2.clone(),
        g: g.clone(),
    };
    // The prefactor unit must be finite for the full value to exist; surface
    // its poles as divergences before the Wilson evaluation.
    tag.value(k).map_err(|e| match e {
        Error::PrefactorPole => Error::DivergentMoment(
            "Jacobi moment-difference prefactor has a pole at this index",
        ),
        other => other,
    })?;
    let params = OPParams::Wilson {
        a: rat(3, 2),
        b: rat(1, 2),
        c: alpha2.clone() + rat(1, 2),
        d: rat(1, 2) - g.clone(),
    };
    let x = c_im(rat_i(k) + rat(1, 2));
    let w = op_eval(&params, n - 1, &x)?;
    debug_assert!(w.im.is_zero(), "Wilson value at i(k+1/2) must be real");
    let denominator = pochhammer_rat(
        &(alpha1.clone() + alpha2.clone() + rat_i(n as i64 + 1)),
        n as u64,
    ) * pochhammer_rat(&(alpha2.clone() + rat_i(1)), n as u64 - 1)
        * factorial(n as u64 - 1);
    let mut normalized = w.re * (alpha1.clone() + rat_i(n as i64)) / denominator;
    if n % 2 == 0 {
        normalized = -normalized;
    }
    Ok(MomentValue {
        k,
        normalized,
        prefactor: tag,
    })
}

/// Exact Jacobi moment `Q_k = E Tr Xᵏ`, telescoped from the anchor
/// `Q₀ = n` with [`jue_delta_moment`]: `Q_{k+1} = Q_k − ΔQ_k` upward and
/// `Q_k = Q_{k+1} + ΔQ_k` downward (so `Q_{−1} = Q₀ + ΔQ_{−1}`).
///
/// # Errors
/// As [`jue_delta_moment`], for the deepest difference required.
pub fn jue_moment(alpha1: &Rational, alpha2: &Rational, n: u32, k: i64) -> Result<MomentValue> {
    jacobi_guards(alpha1, alpha2, n)?;
    let mut q = rat_i(n as i64);
    if k >= 0 {
        for j in 0..k {
            q -= jue_delta_moment(alpha1, alpha2, n, j)?.full_value();
        }
    } else {
        for j in 1..=(-k) {
            q += jue_delta_moment(alpha1, alpha2, n, -j)?.full_value();
        }
    }
    Ok(MomentValue::exact(k, q))
}

// ---------------------------------------------------------------------------
// Three-term recursions in the moment index
// ---------------------------------------------------------------------------

/// Left-minus-right residual of the three-term moment recursion of the given
/// β = 2 ensemble at index `k`; exactly zero wherever all stencil entries are
/// finite. Stencil terms whose coefficient vanishes are treated as absent, so
/// boundary indices work without special-casing.
///
/// * Gaussian (Harer–Zagier):
///   `(k+2) Q_{k+1} = 2n(2k+1) Q_k + k(2k+1)(2k−1) Q_{k−1}`, `k ≥ 0`.
/// * Laguerre (Haagerup–Thorbjørnsen):
///   `(k+2) Q_{k+1} = (2k+1)(2n+α) Q_k + (k−1)(k²−α²) Q_{k−1}`, any integer
///   `k` for which the moments converge.
/// * Jacobi, on the differences `ΔQ` with `g = α₁+α₂+2n`:
///   `(k+2)(g²−(k+1)²) ΔQ_{k+1} − (2k+1)(2n(α₁+α₂+n)+α₂²+α₁α₂−k(k+1)) ΔQ_k
///    + (k−1)(α₂²−k²) ΔQ_{k−1} = 0`.
///
/// # Errors
/// [`Error::InvalidParameters`] unless `spec.beta == 2`;
/// [`Error::DivergentMoment`] when a needed stencil entry diverges.
pub fn recursion_residual(spec: &EnsembleSpec, k: i64) -> Result<Rational> {
    if spec.beta != 2 {
        return Err(Error::InvalidParameters(
            "moment recursions are implemented for beta = 2",
        ));
    }
    match spec.family {
        Family::Gaussian => {
            if k < 0 {
                return Err(Error::DivergentMoment(
                    "Gaussian moments have no negative-index extension",
                ));
            }
            let n = spec.n;
            let mut residual = rat_i(k + 2) * gue_moment(n, k as u32 + 1).full_value()
                - rat_i(2 * spec.n_i64() * (2 * k + 1)) * gue_moment(n, k as u32).full_value();
            let back = k * (2 * k + 1) * (2 * k - 1);
            if back != 0 {
                residual -= rat_i(back) * gue_moment(n, k as u32 - 1).full_value();
            }
            Ok(residual)
        }
        Family::Laguerre => {
            let alpha = spec
                .alpha()
                .expect("Laguerre specs always carry a weight parameter");
            let n = spec.n;
            let q = |idx: i64| -> Result<Rational> {
                Ok(lue_moment_rational(&alpha, n, idx)?.full_value())
            };
            let mut residual = Rational::zero();
            let ahead = rat_i(k + 2);
            if !ahead.is_zero() {
                residual += ahead * q(k + 1)?;
            }
            residual -= rat_i(2 * k + 1) * (rat_i(2 * spec.n_i64()) + alpha.clone()) * q(k)?;
            let back = rat_i(k - 1) * (rat_i(k * k) - alpha.clone() * alpha.clone());
            if !back.is_zero() {
                residual -= back * q(k - 1)?;
            }
            Ok(residual)
        }
        Family::Jacobi => {
            let (alpha1, alpha2) = spec
                .alphas()
                .expect("Jacobi specs always carry both weight exponents");
            let n = spec.n;
            let g = alpha1.clone() + alpha2.clone() + rat_i(2 * spec.n_i64());
            let dq = |idx: i64| -> Result<Rational> {
                Ok(jue_delta_moment(&alpha1, &alpha2, n, idx)?.full_value())
            };
            let ahead =
                rat_i(k + 2) * (g.clone() * g.clone() - rat_i((k + 1) * (k + 1)));
            let middle = rat_i(2 * k + 1)
                * (rat_i(2 * spec.n_i64()) * (alpha1.clone() + alpha2.clone() + rat_i(spec.n_i64()))
                    + alpha2.clone() * alpha2.clone()
                    + alpha1.clone() * alpha2.clone()
                    - rat_i(k * (k + 1)));
            let back = rat_i(k - 1) * (alpha2.clone() * alpha2.clone() - rat_i(k * k));
            let mut residual = Rational::zero();
            if !ahead.is_zero() {
                residual += ahead * dq(k + 1)?;
            }
            if !middle.is_zero() {
                residual -= middle * dq(k)?;
            }
            if !back.is_zero() {
                residual += back * dq(k - 1)?;
            }
            Ok(residual)
        }
    }
}

// ---------------------------------------------------------------------------
// Generating functions
// ---------------------------------------------------------------------------

/// Expansion mode for [`gf_coefficients`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GfMode {
    /// Series in the moment-index variable, at the matrix size fixed by the
    /// ensemble description.
    FixedN,
    /// Series in the matrix-size variable, at the given moment index.
    FixedK(u32),
    /// Joint series in every variable, flattened row-major (see
    /// [`gf_coefficients`] for the index layout).
    Joint,
}

/// Exact Taylor coefficients of the closed-form moment generating functions
/// of the Gaussian and Laguerre unitary ensembles.
///
/// All coefficients are produced by exact series algebra on the closed forms
/// (binomial series, exponentials, and terminating hypergeometric factors) —
/// no moments are computed — so termwise agreement with the moment routines
/// is a genuine cross-check. Layout of the returned list:
///
/// * Gaussian `FixedN` (size `n` from the spec): coefficient `k` of
///   `(((1+t)/(1−t))ⁿ − 1)/(2t)` equals `Q_k(n)/(2k−1)!!`, `k = 0..=order`.
/// * Gaussian `FixedK(k)`: coefficient `n` of `z(1+z)ᵏ(1−z)^{−(k+2)}` equals
///   `Q_k(n)/(2k−1)!!`, `n = 0..=order` (the `n = 0` entry is zero).
/// * Gaussian `Joint`: coefficient of `zⁿ tᵏ` in `z/((1−z)((1−t)−z(1+t)))`
///   at flat index `n·(order+1) + k`.
/// * Laguerre `FixedN` (integer sizes `m, n` from the spec): coefficient `k`
///   of `t eᵗ L⁽¹⁾_{n−1}(−t) L⁽¹⁾_{m−1}(−t)` equals `Q_k/((k−1)!k!)` for
///   `k ≥ 1`.
/// * Laguerre `FixedK(k)` (weight parameter `α` from the spec): coefficient
///   `n` of `z(1−z)^{−(α+k+1)} ₂F₁(−k, 1−k; 2; z)` equals
///   `Q_k(n+α, n) · Γ(n+α)/(Γ(α+k+1) n!)`.
/// * Laguerre `Joint`: coefficient of `z₁ⁿ z₂ᵐ tᵏ` in
///   `z₁z₂t/((1−z₁)²(1−z₂)²) · exp((1−z₁z₂) t/((1−z₁)(1−z₂)))`
///   at flat index `(n·(order+1) + m)·(order+1) + k`, equal to
///   `Q_k(m,n)/((k−1)!k!)` for `n, m, k ≥ 1`.
///
/// # Errors
/// [`Error::TooLarge`] when `order > 64`; [`Error::InvalidParameters`] for
/// the Jacobi family (its moment generating function has no closed form at
/// this level) or a non-β=2 spec.
pub fn gf_coefficients(spec: &EnsembleSpec, mode: &GfMode, order: u32) -> Result<Vec<Rational>> {
    if order > 64 {
        return Err(Error::TooLarge("generating functions expand to order ≤ 64"));
    }
    if spec.beta != 2 {
        return Err(Error::InvalidParameters(
            "closed-form generating functions are implemented for beta = 2",
        ));
    }
    let len = order as usize + 1;
    match (spec.family, mode) {
        (Family::Gaussian, GfMode::FixedN) => {
            let n = spec.n_i64();
            let long = len + 1;
            let grow = series_mul(
                &binomial_series(&rat_i(1), &rat_i(n), long),
                &binomial_series(&rat_i(-1), &rat_i(-n), long),
                long,
            );
            Ok((0..len).map(|k| grow[k + 1].clone() / rat_i(2)).collect())
        }
        (Family::Gaussian, GfMode::FixedK(kf)) => {
            let f = series_mul(
                &binomial_series(&rat_i(1), &rat_i(*kf as i64), len),
                &binomial_series(&rat_i(-1), &rat_i(-(*kf as i64) - 2), len),
                len,
            );
            Ok(shift_up(&f, len))
        }
        (Family::Gaussian, GfMode::Joint) => {
            let step = series_mul(
                &binomial_series(&rat_i(1), &rat_i(1), len),
                &binomial_series(&rat_i(-1), &rat_i(-1), len),
                len,
            );
            let mut row = binomial_series(&rat_i(-1), &rat_i(-1), len);
            let mut acc = vec![Rational::zero(); len];
            let mut flat = vec![Rational::zero(); len * len];
            for n_idx in 1..len {
                for (a, r) in acc.iter_mut().zip(row.iter()) {
                    *a += r.clone();
                }
                for k_idx in 0..len {
                    flat[n_idx * len + k_idx] = acc[k_idx].clone();
                }
                row = series_mul(&row, &step, len);
            }
            Ok(flat)
        }
        (Family::Laguerre, GfMode::FixedN) => {
            let m = spec.m.expect("Laguerre specs always carry both dimensions");
            let prod = series_mul(
                &laguerre_shift_series(spec.n as u64 - 1, len),
                &laguerre_shift_series(m as u64 - 1, len),
                len,
            );
            let exp_t: Vec<Rational> = (0..len).map(|i| rat_i(1) / factorial(i as u64)).collect();
            let f = series_mul(&prod, &exp_t, len);
            Ok(shift_up(&f, len))
        }
        (Family::Laguerre, GfMode::FixedK(kf)) => {
            let alpha = spec
                .alpha()
                .expect("Laguerre specs always carry a weight parameter");
            let exponent = -(alpha + rat_i(*kf as i64 + 1));
            let base = binomial_series(&rat_i(-1), &exponent, len);
            let mut hyp = vec![Rational::zero(); len];
            let neg_k = rat_i(-(*kf as i64));
            let one_minus_k = rat_i(1 - *kf as i64);
            for (j, h) in hyp.iter_mut().enumerate() {
                let j64 = j as u64;
                *h = pochhammer_rat(&neg_k, j64) * pochhammer_rat(&one_minus_k, j64)
                    / (pochhammer_rat(&rat_i(2), j64) * factorial(j64));
            }
            let f = series_mul(&base, &hyp, len);
            Ok(shift_up(&f, len))
        }
        (Family::Laguerre, GfMode::Joint) => {
            let z_geo2 = shift_up(&binomial_series(&rat_i(-1), &rat_i(-2), len), len);
            let front = bi_outer(&z_geo2, &z_geo2);
            let ones = vec![Rational::one(); len];
            let geo_geo = bi_outer(&ones, &ones);
            let mut corner = vec![vec![Rational::zero(); len]; len];
            corner[0][0] = rat_i(1);
            if len > 1 {
                corner[1][1] = rat_i(-1);
            }
            let rate = bi_mul(&corner, &geo_geo, len);
            let mut flat = vec![Rational::zero(); len * len * len];
            let mut slice = front;
            for k_idx in 1..len {
                for (i, row) in slice.iter().enumerate() {
                    for (j, value) in row.iter().enumerate() {
                        flat[(i * len + j) * len + k_idx] = value.clone();
                    }
                }
                if k_idx + 1 < len {
                    slice = bi_mul(&slice, &rate, len);
                    let divisor = rat_i(k_idx as i64);
                    for row in slice.iter_mut() {
                        for value in row.iter_mut() {
                            *value /= divisor.clone();
                        }
                    }
                }
            }
            Ok(flat)
        }
        (Family::Jacobi, _) => Err(Error::InvalidParameters(
            "the Jacobi moment generating function has no closed form here",
        )),
    }
}

/// Truncated Cauchy product of two coefficient lists.
fn series_mul(a: &[Rational], b: &[Rational], len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for (i, ai) in a.iter().enumerate().take(len) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(len - i) {
            if bj.is_zero() {
                continue;
            }
            out[i + j] += ai.clone() * bj.clone();
        }
    }
    out
}

/// Coefficients of `(1 + c·t)^e` for rational `c` and `e`.
fn binomial_series(c: &Rational, e: &Rational, len: usize) -> Vec<Rational> {
    (0..len)
        .map(|j| binomial_rat(e, j as u64) * rational_pow(c, j as i64))
        .collect()
}

/// Multiply a series by `t`: shift all coefficients up one slot.
fn shift_up(a: &[Rational], len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    out[1..len].clone_from_slice(&a[..(len - 1)]);
    out
}

/// Coefficients of the sign-flipped associated Laguerre polynomial
/// `L⁽¹⁾_j(−t) = Σ_i C(j+1, j−i) tⁱ/i!`, a polynomial with positive
/// rational coefficients.
fn laguerre_shift_series(j: u64, len: usize) -> Vec<Rational> {
    (0..len)
        .map(|i| {
            if (i as u64) <= j {
                binomial(j + 1, j - i as u64) / factorial(i as u64)
            } else {
                Rational::zero()
            }
        })
        .collect()
}

/// Truncated product of bivariate coefficient tables (`out[i][j]` multiplies
/// the monomial `x^i y^j`).
fn bi_mul(a: &[Vec<Rational>], b: &[Vec<Rational>], len: usize) -> Vec<Vec<Rational>> {
    let mut out = vec![vec![Rational::zero(); len]; len];
    for i1 in 0..len.min(a.len()) {
        for j1 in 0..len.min(a[i1].len()) {
            if a[i1][j1].is_zero() {
                continue;
            }
            for i2 in 0..(len - i1).min(b.len()) {
                for j2 in 0..(len - j1).min(b[i2].len()) {
                    if b[i2][j2].is_zero() {
                        continue;
                    }
                    out[i1 + i2][j1 + j2] += a[i1][j1].clone() * b[i2][j2].clone();
                }
            }
        }
    }
    out
}

/// Outer product of two univariate coefficient lists.
fn bi_outer(a: &[Rational], b: &[Rational]) -> Vec<Vec<Rational>> {
    a.iter()
        .map(|ai| b.iter().map(|bj| ai.clone() * bj.clone()).collect())
        .collect()
}

// ---------------------------------------------------------------------------
// Square-Wishart integrality expansion
// ---------------------------------------------------------------------------

/// The scaled Laguerre moment `Q_k(c·n, n)/n` as an exact polynomial in `n`,
/// recovered by interpolation at `k + 2` integer sizes and certified to have
/// degree exactly `k`. Its nonzero coefficients share the parity of `k`, so
/// `Q_k(c·n, n)/n^{k+1}` is a polynomial in `n^{−2}`.
///
/// # Errors
/// [`Error::InvalidParameters`] if `c = 0`; [`Error::TooLarge`] when `c·n`
/// overflows the size type; [`Error::DegreeMismatch`] if interpolation does
/// not produce the certified degree (a defect guard, not an expected path).
pub fn lue_poly_in_n(c: u32, k: u32) -> Result<RealPoly> {
    if c == 0 {
        return Err(Error::InvalidParameters(
            "aspect ratio must be a positive integer",
        ));
    }
    let mut points = Vec::with_capacity(k as usize + 2);
    for size in 1..=(k + 2) {
        let m = c
            .checked_mul(size)
            .ok_or(Error::TooLarge("aspect ratio times size overflows"))?;
        let q = lue_moment(m, size, k as i64)?;
        points.push((rat_i(size as i64), q.full_value() / rat_i(size as i64)));
    }
    let p = RealPoly::interpolate(&points);
    if p.degree() != Some(k as usize) {
        return Err(Error::DegreeMismatch);
    }
    Ok(p)
}

/// The companion polynomial `p_k(x) = i^k q_k(−i x)` of
/// [`lue_poly_in_n`]`(c, k)`, which has real coefficients and `k` real zeros
/// (counted with multiplicity) that weakly interlace those of `p_{k+1}`.
///
/// # Errors
/// As [`lue_poly_in_n`]; additionally [`Error::DegreeMismatch`] if a
/// coefficient violates the parity structure that makes `p_k` real.
pub fn lue_sturm_poly(c: u32, k: u32) -> Result<RealPoly> {
    let q = lue_poly_in_n(c, k)?;
    let mut coeffs = vec![Rational::zero(); k as usize + 1];
    for (j, slot) in coeffs.iter_mut().enumerate() {
        let a = q.coeff(j);
        if a.is_zero() {
            continue;
        }
        if (k as usize - j) % 2 != 0 {
            return Err(Error::DegreeMismatch);
        }
        *slot = if ((k as usize - j) / 2) % 2 == 0 { a } else { -a };
    }
    Ok(RealPoly::new(coeffs))
}

/// Integer coefficients `κ_g` of the `1/n` expansion
/// `Π_{j=1}^{k} (1 − j²/n²)^{−1} · Q_k(2n, n)/n^{k+1} = Σ_g κ_g n^{−g}`
/// for the square-Wishart aspect ratio `c = 2`, `g = 0..=g_max`.
///
/// The product expands through complete homogeneous symmetric sums of
/// `1², …, k²` and the moment factor through [`lue_poly_in_n`]; every
/// returned coefficient is a nonnegative integer and the odd-`g` entries
/// vanish identically.
///
/// # Errors
/// [`Error::TooLarge`] when `k > 10` or `g_max > 10` (the certified range);
/// [`Error::DegreeMismatch`] on a parity defect in the moment polynomial.
pub fn lue_tau_coefficients(k: u32, g_max: u32) -> Result<Vec<BigInt>> {
    if k > 10 || g_max > 10 {
        return Err(Error::TooLarge(
            "integrality expansion is certified for k ≤ 10 and g ≤ 10",
        ));
    }
    let q = lue_poly_in_n(2, k)?;
    for j in 0..=k as usize {
        if (k as usize - j) % 2 != 0 && !q.coeff(j).is_zero() {
            return Err(Error::DegreeMismatch);
        }
    }
    let evens: Vec<Rational> = (0..=(k / 2))
        .map(|i| q.coeff((k - 2 * i) as usize))
        .collect();
    let gmax = g_max as usize;
    let mut homogeneous = vec![Rational::zero(); gmax + 1];
    homogeneous[0] = Rational::one();
    for j in 1..=k as i64 {
        for g in 1..=gmax {
            let carried = homogeneous[g - 1].clone() * rat_i(j * j);
            homogeneous[g] += carried;
        }
    }
    let mut out = Vec::with_capacity(gmax + 1);
    for g in 0..=gmax {
        if g % 2 == 1 {
            out.push(BigInt::zero());
            continue;
        }
        let half = g / 2;
        let mut sum = Rational::zero();
        for (i, b) in evens.iter().enumerate().take(half + 1) {
            sum += b.clone() * homogeneous[half - i].clone();
        }
        out.push(
            crate::exact::as_integer(&sum)
                .expect("integrality expansion coefficients are integers in the certified range"),
        );
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Trace covariances and loop equations
// ---------------------------------------------------------------------------

/// Closed-form Laguerre trace covariance
/// `C_{k,l} = E[Tr Xᵏ Tr Xˡ] − E[Tr Xᵏ] E[Tr Xˡ]` for the index pairs with
/// an exact reduction: one index of each pair must be `±1` and the signs
/// must match (`C_{k,1} = k Q_k` and `C_{−k,−1} = k Q_{−k−1}/α`), or an
/// index is `0` and the covariance vanishes.
///
/// # Errors
/// [`Error::InvalidParameters`] for index pairs outside the closed family;
/// [`Error::DivergentMoment`] when the required negative moment diverges.
pub fn lue_covariance(m: u32, n: u32, k: i64, l: i64) -> Result<Rational> {
    if n == 0 || m < n {
        return Err(Error::InvalidParameters(
            "Laguerre covariances need data-matrix dimensions m ≥ n ≥ 1",
        ));
    }
    if k == 0 || l == 0 {
        return Ok(Rational::zero());
    }
    if k >= 1 && l >= 1 {
        let idx = if l == 1 {
            k
        } else if k == 1 {
            l
        } else {
            return Err(Error::InvalidParameters(
                "closed-form covariances need one unit index per pair",
            ));
        };
        Ok(rat_i(idx) * lue_moment(m, n, idx)?.full_value())
    } else if k <= -1 && l <= -1 {
        let idx = if l == -1 {
            -k
        } else if k == -1 {
            -l
        } else {
            return Err(Error::InvalidParameters(
                "closed-form covariances need one unit index per pair",
            ));
        };
        let alpha = rat_i(m as i64 - n as i64);
        let deep = lue_moment(m, n, -idx - 1)?.full_value();
        Ok(rat_i(idx) * deep / alpha)
    } else {
        Err(Error::InvalidParameters(
            "closed-form covariances need matching index signs",
        ))
    }
}

/// One signed expectation in a loop-equation stencil:
/// `coefficient · E[Π_i Tr X^{e_i}]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopTerm {
    /// Rational multiplier of the expectation.
    pub coefficient: Rational,
    /// Trace exponents inside the expectation (an exponent `0` contributes a
    /// factor `n`).
    pub exponents: Vec<i64>,
}

/// The loop-equation stencil of the Laguerre unitary ensemble for a trace
/// product `E[Π_i Tr X^{k_i}]`, as a signed list of expectations summing to
/// zero.
///
/// For all-positive indices `k₁, …, k_v ≥ 1` the identity is
///
/// `Σ_{ℓ=0}^{k₁−1} E[Tr X^ℓ Tr X^{k₁−1−ℓ} Π_{i≥2}] + Σ_{j≥2} k_j
/// E[Tr X^{k₁+k_j−1} Π_{i≥2, i≠j}] = E[Π_i Tr X^{k_i}] − α E[Tr X^{k₁−1}
/// Π_{i≥2}]`,
///
/// and for all-negative indices `−K₁, …, −K_v` it is
///
/// `Σ_{ℓ=0}^{K₁−1} E[Tr X^{−ℓ−1} Tr X^{−K₁+ℓ} Π_{i≥2}] + Σ_{j≥2} K_j
/// E[Tr X^{−K₁−K_j−1} Π_{i≥2, i≠j}] = −E[Π_i Tr X^{−K_i}] + α E[Tr X^{−K₁−1}
/// Π_{i≥2}]`.
///
/// The returned terms are the left side minus the right side. The first
/// index plays the marked role, so reordering the input permutes the family
/// of identities rather than reproducing one.
///
/// # Errors
/// [`Error::InvalidParameters`] when the index list is empty or mixes signs.
pub fn loop_equation_stencil(alpha: &Rational, exponents: &[i64]) -> Result<Vec<LoopTerm>> {
    let first = *exponents
        .first()
        .ok_or(Error::InvalidParameters("loop equations need at least one trace index"))?;
    let positive = exponents.iter().all(|&e| e >= 1);
    let negative = exponents.iter().all(|&e| e <= -1);
    if !positive && !negative {
        return Err(Error::InvalidParameters(
            "loop equations apply to all-positive or all-negative index lists",
        ));
    }
    let rest = &exponents[1..];
    let mut terms = Vec::new();
    let with_rest = |head: &[i64]| -> Vec<i64> {
        let mut exps = head.to_vec();
        exps.extend_from_slice(rest);
        exps
    };
    let without = |skip: usize, head: i64| -> Vec<i64> {
        let mut exps = vec![head];
        for (i, &e) in rest.iter().enumerate() {
            if i != skip {
                exps.push(e);
            }
        }
        exps
    };
    if positive {
        for l in 0..first {
            terms.push(LoopTerm {
                coefficient: Rational::one(),
                exponents: with_rest(&[l, first - 1 - l]),
            });
        }
        for (j, &kj) in rest.iter().enumerate() {
            terms.push(LoopTerm {
                coefficient: rat_i(kj),
                exponents: without(j, first + kj - 1),
            });
        }
        terms.push(LoopTerm {
            coefficient: rat_i(-1),
            exponents: exponents.to_vec(),
        });
        terms.push(LoopTerm {
            coefficient: alpha.clone(),
            exponents: with_rest(&[first - 1]),
        });
    } else {
        let big_k = -first;
        for l in 0..big_k {
            terms.push(LoopTerm {
                coefficient: Rational::one(),
                exponents: with_rest(&[-l - 1, first + l]),
            });
        }
        for (j, &ej) in rest.iter().enumerate() {
            terms.push(LoopTerm {
                coefficient: rat_i(-ej),
                exponents: without(j, first + ej - 1),
            });
        }
        terms.push(LoopTerm {
            coefficient: Rational::one(),
            exponents: exponents.to_vec(),
        });
        terms.push(LoopTerm {
            coefficient: -alpha.clone(),
            exponents: with_rest(&[first - 1]),
        });
    }
    Ok(terms)
}

/// Exact mixed trace moment `E[Π_i Tr X^{e_i}]` of the Laguerre unitary
/// ensemble, for the closed family: any single trace, plus products that
/// reduce through a unit index — `E[Tr X¹ Π] = (mn + Σ deg) E[Π]` for
/// positive products and `α E[Tr X⁻¹ Π] = n E[Π] + Σ_j K_j E[Π_j↓]` (the
/// `j`-th exponent deepened by one) for negative ones. A zero exponent
/// contributes a factor `n`.
fn mixed_moment(alpha: &Rational, n: u32, exponents: &[i64]) -> Result<Rational> {
    let mut scale = Rational::one();
    let mut rest: Vec<i64> = Vec::with_capacity(exponents.len());
    for &e in exponents {
        if e == 0 {
            scale *= rat_i(n as i64);
        } else {
            rest.push(e);
        }
    }
    match rest.len() {
        0 => Ok(scale),
        1 => Ok(scale * lue_moment_rational(alpha, n, rest[0])?.full_value()),
        _ => {
            if rest.iter().all(|&e| e > 0) {
                let Some(pos) = rest.iter().position(|&e| e == 1) else {
                    return Err(Error::InvalidParameters(
                        "mixed positive trace products close only through a unit index",
                    ));
                };
                rest.swap_remove(pos);
                let degree: i64 = rest.iter().sum();
                let mn = (alpha.clone() + rat_i(n as i64)) * rat_i(n as i64);
                Ok(scale * (mn + rat_i(degree)) * mixed_moment(alpha, n, &rest)?)
            } else if rest.iter().all(|&e| e < 0) {
                let Some(pos) = rest.iter().position(|&e| e == -1) else {
                    return Err(Error::InvalidParameters(
                        "mixed negative trace products close only through a unit index",
                    ));
                };
                if alpha.is_zero() {
                    return Err(Error::DivergentMoment(
                        "negative trace products diverge at zero weight parameter",
                    ));
                }
                rest.swap_remove(pos);
                let mut acc = rat_i(n as i64) * mixed_moment(alpha, n, &rest)?;
                for idx in 0..rest.len() {
                    let mut deeper = rest.clone();
                    deeper[idx] -= 1;
                    acc += rat_i(-rest[idx]) * mixed_moment(alpha, n, &deeper)?;
                }
                Ok(scale * acc / alpha.clone())
            } else {
                Err(Error::InvalidParameters(
                    "mixed-sign trace products have no closed form",
                ))
            }
        }
    }
}

/// Exact residual of the Laguerre loop equation for the given trace indices
/// (all ≥ 1 or all ≤ −1); zero whenever every stencil expectation lies in
/// the exactly-reducible family.
///
/// # Errors
/// [`Error::TooLarge`] beyond two indices or beyond `|k_i| ≤ 4`;
/// [`Error::InvalidParameters`] when a stencil term needs a mixed moment
/// outside the closed family (those are a Monte Carlo job, not an exact
/// one); [`Error::DivergentMoment`] when a negative moment diverges.
pub fn loop_equation_residual(m: u32, n: u32, exponents: &[i64]) -> Result<Rational> {
    if exponents.len() > 2 || exponents.iter().any(|&e| e.unsigned_abs() > 4) {
        return Err(Error::TooLarge(
            "exact loop residuals cover at most two traces of order ≤ 4",
        ));
    }
    if n == 0 || m < n {
        return Err(Error::InvalidParameters(
            "Laguerre loop equations need data-matrix dimensions m ≥ n ≥ 1",
        ));
    }
    let alpha = rat_i(m as i64 - n as i64);
    let stencil = loop_equation_stencil(&alpha, exponents)?;
    let mut residual = Rational::zero();
    for term in stencil {
        residual += term.coefficient * mixed_moment(&alpha, n, &term.exponents)?;
    }
    Ok(residual)
}

// ---------------------------------------------------------------------------
// Large-size covariance series of one-cut ensembles
// ---------------------------------------------------------------------------

/// Exact large-size trace covariance `lim C_{k,l}` of a one-cut ensemble
/// with cut `[x₋, x₊]` (`0 < x₋ < x₊`) and Dyson index `β > 0`, extracted
/// from the closed-form two-point correlator
///
/// `G₂(z,w) = (1/β) (z−w)^{−2} [(zw − σ(z+w)/2 + p)/√((z−x₋)(z−x₊)(w−x₋)(w−x₊)) − 1]`
///
/// (`σ = x₋+x₊`, `p = x₋x₊`) by exact bivariate series expansion — at
/// infinity for positive index pairs, at the origin for negative pairs (the
/// analytic square-root branch is `−√(x₋−z)√(x₊−z)` there). Mixed-sign
/// pairs are not generated by either expansion; a zero index gives a zero
/// covariance. The two expansions satisfy
/// `C_{−k,−l} = (x₋x₊)^{−(k+l)} C_{k,l}` exactly.
///
/// # Errors
/// [`Error::InvalidCut`] unless `0 < x₋ < x₊`;
/// [`Error::InvalidParameters`] for `β ≤ 0` or mixed index signs;
/// [`Error::TooLarge`] when `|k| + |l| > 32`.
pub fn limit_covariance(
    x_minus: &Rational,
    x_plus: &Rational,
    k: i64,
    l: i64,
    beta: &Rational,
) -> Result<Rational> {
    if *x_minus <= Rational::zero() || *x_plus <= *x_minus {
        return Err(Error::InvalidCut);
    }
    if *beta <= Rational::zero() {
        return Err(Error::InvalidParameters("Dyson index must be positive"));
    }
    if k == 0 || l == 0 {
        return Ok(Rational::zero());
    }
    if (k > 0) != (l > 0) {
        return Err(Error::InvalidParameters(
            "limit covariances expand with matching index signs",
        ));
    }
    if k.unsigned_abs() + l.unsigned_abs() > 32 {
        return Err(Error::TooLarge(
            "limit covariance series is capped at |k| + |l| ≤ 32",
        ));
    }
    let a = (k.unsigned_abs() - 1) as usize;
    let b = (l.unsigned_abs() - 1) as usize;
    let sigma = x_minus.clone() + x_plus.clone();
    let p = x_minus.clone() * x_plus.clone();
    let value = if k > 0 {
        covariance_series_coefficient(x_minus, x_plus, &(sigma / rat_i(2)), &p, a, b)
    } else {
        let inv_minus = rat_i(1) / x_minus.clone();
        let inv_plus = rat_i(1) / x_plus.clone();
        let inv_p = rat_i(1) / p.clone();
        covariance_series_coefficient(
            &inv_minus,
            &inv_plus,
            &(sigma / (rat_i(2) * p)),
            &inv_p,
            a,
            b,
        )
    };
    Ok(value / beta.clone())
}

/// Coefficients of `(1 − c·u)^{−1/2} = Σ_j C(2j, j) (c/4)^j u^j`.
fn half_binomial_series(c: &Rational, len: usize) -> Vec<Rational> {
    let quarter = c.clone() / rat_i(4);
    (0..len)
        .map(|j| binomial(2 * j as u64, j as u64) * rational_pow(&quarter, j as i64))
        .collect()
}

/// Coefficient `s_{a,b}` of the symmetric series `S(u, v)` defined by
/// `(u − v)² S = N(u,v) B(u) B(v) − 1`, where
/// `N = 1 − n₁(u+v) + n₂ uv` and `B = (1−c₁u)^{−1/2}(1−c₂u)^{−1/2}`.
///
/// The right side vanishes to second order on the diagonal, so `S` is a
/// genuine power series; its coefficients satisfy
/// `s_{i,j} = t_{i,j+2} − s_{i−2,j+2} + 2 s_{i−1,j+1}` and are computed row
/// by row with exactly the needed widths.
fn covariance_series_coefficient(
    c1: &Rational,
    c2: &Rational,
    n1: &Rational,
    n2: &Rational,
    a: usize,
    b: usize,
) -> Rational {
    let blen = a + b + 3;
    let edge = series_mul(
        &half_binomial_series(c1, blen),
        &half_binomial_series(c2, blen),
        blen,
    );
    let t_at = |i: usize, q: usize| -> Rational {
        let get = |idx: Option<usize>| -> Rational {
            match idx {
                Some(s) => edge[s].clone(),
                None => Rational::zero(),
            }
        };
        let mut value = edge[i].clone() * edge[q].clone();
        let left = get(i.checked_sub(1));
        let right = get(q.checked_sub(1));
        value -= n1.clone() * (left.clone() * edge[q].clone() + edge[i].clone() * right.clone());
        value += n2.clone() * left * right;
        if i == 0 && q == 0 {
            value -= rat_i(1);
        }
        value
    };
    let mut two_back: Vec<Rational> = Vec::new();
    let mut one_back: Vec<Rational> = Vec::new();
    let mut current: Vec<Rational> = Vec::new();
    for i in 0..=a {
        let width = b + (a - i);
        current = (0..=width)
            .map(|j| {
                let mut s = t_at(i, j + 2);
                if i >= 2 {
                    s -= two_back[j + 2].clone();
                }
                if i >= 1 {
                    s += rat_i(2) * one_back[j + 1].clone();
                }
                s
            })
            .collect();
        two_back = core::mem::take(&mut one_back);
        one_back = current.clone();
    }
    current[b].clone()
}
