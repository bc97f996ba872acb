//! Ensemble descriptions and exact moment values.
//!
//! [`EnsembleSpec`] names one of the classical matrix ensembles — Gaussian,
//! Laguerre (Wishart), or Jacobi (MANOVA) — together with its Dyson index
//! β ∈ {1, 2, 4} and size parameters. [`MomentValue`] carries an exact
//! spectral moment as a normalized rational times a symbolic prefactor tag,
//! so that results indexed by a continuous exponent stay exact at every
//! integer index.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{rat_i, Rational};

/// The three classical weight families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Gaussian (Hermite) weight on the whole line.
    Gaussian,
    /// Laguerre (Wishart) weight on the half-line.
    Laguerre,
    /// Jacobi (MANOVA) weight on the unit interval.
    Jacobi,
}

impl Family {
    /// Lowercase name used by the command-line tools.
    pub fn name(self) -> &'static str {
        match self {
            Family::Gaussian => "gaussian",
            Family::Laguerre => "laguerre",
            Family::Jacobi => "jacobi",
        }
    }
}

/// A fully specified matrix ensemble.
///
/// The Laguerre ensemble of an `n × m` data matrix (`m ≥ n`) has weight
/// parameter `α = m − n` in the β = 2 exact layer; Jacobi ensembles carry a
/// pair of rational exponents `α₁, α₂ > −1`. Construct through
/// [`EnsembleSpec::gaussian`], [`EnsembleSpec::laguerre`], or
/// [`EnsembleSpec::jacobi`], which validate the parameter ranges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnsembleSpec {
    /// Weight family.
    pub family: Family,
    /// Dyson index: 1 (orthogonal), 2 (unitary), or 4 (symplectic).
    pub beta: u8,
    /// Matrix size (number of eigenvalues).
    pub n: u32,
    /// Laguerre only: the long dimension of the data matrix, `m ≥ n`.
    pub m: Option<u32>,
    /// Jacobi only: exponent on `(1 − x)`.
    pub alpha1: Option<Rational>,
    /// Jacobi only: exponent on `x`.
    pub alpha2: Option<Rational>,
}

impl EnsembleSpec {
    /// Gaussian ensemble of size `n` at Dyson index `beta`.
    pub fn gaussian(beta: u8, n: u32) -> Result<Self> {
        check_beta_n(beta, n)?;
        Ok(EnsembleSpec {
            family: Family::Gaussian,
            beta,
            n,
            m: None,
            alpha1: None,
            alpha2: None,
        })
    }

    /// Laguerre ensemble from an `n × m` data matrix, `m ≥ n ≥ 1`.
    pub fn laguerre(beta: u8, n: u32, m: u32) -> Result<Self> {
        check_beta_n(beta, n)?;
        if m < n {
            return Err(Error::InvalidParameters(
                "laguerre requires m >= n (data matrix has at least as many columns as rows)",
            ));
        }
        Ok(EnsembleSpec {
            family: Family::Laguerre,
            beta,
            n,
            m: Some(m),
            alpha1: None,
            alpha2: None,
        })
    }

    /// Jacobi ensemble with exponents `α₁, α₂ > −1`.
    pub fn jacobi(beta: u8, n: u32, alpha1: Rational, alpha2: Rational) -> Result<Self> {
        check_beta_n(beta, n)?;
        let minus_one = -rat_i(1);
        if alpha1 <= minus_one || alpha2 <= minus_one {
            return Err(Error::InvalidParameters(
                "jacobi exponents must exceed -1 for an integrable weight",
            ));
        }
        Ok(EnsembleSpec {
            family: Family::Jacobi,
            beta,
            n,
            m: Some(n),
            alpha1: Some(alpha1),
            alpha2: Some(alpha2),
        })
    }

    /// Laguerre weight parameter `α = m − n` (β = 2 exact layer).
    pub fn alpha(&self) -> Option<Rational> {
        match self.family {
            Family::Laguerre => {
                let m = self.m?;
                Some(rat_i(i64::from(m)) - rat_i(i64::from(self.n)))
            }
            _ => None,
        }
    }

    /// Jacobi exponent pair.
    pub fn alphas(&self) -> Option<(Rational, Rational)> {
        Some((self.alpha1.clone()?, self.alpha2.clone()?))
    }

    /// Matrix size as a signed integer for exact formula work.
    pub fn n_i64(&self) -> i64 {
        i64::from(self.n)
    }

    /// Laguerre long dimension as a signed integer.
    pub fn m_i64(&self) -> Option<i64> {
        self.m.map(i64::from)
    }
}

fn check_beta_n(beta: u8, n: u32) -> Result<()> {
    if !matches!(beta, 1 | 2 | 4) {
        return Err(Error::InvalidParameters("beta must be 1, 2, or 4"));
    }
    if n == 0 {
        return Err(Error::InvalidParameters("matrix size must be positive"));
    }
    Ok(())
}

/// Symbolic prefactor carried by a [`MomentValue`].
///
/// Each tag is a function of the integer moment index `k` that evaluates to
/// an exact rational, so `full_value = normalized × tag(k)` stays exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrefactorTag {
    /// No prefactor.
    One,
    /// `(2k−1)!!` — the Gaussian natural unit (requires `k ≥ 0`).
    OddDoubleFactorial,
    /// `(α+1)ₖ = Γ(α+k+1)/Γ(α+1)` — the Laguerre natural unit.
    LaguerrePochhammer {
        /// Weight parameter α.
        alpha: Rational,
    },
    /// `(α₂+1)ₖ / (g+1)ₖ` with `g = α₁+α₂+2n` — the Jacobi natural unit.
    JacobiPochhammerRatio {
        /// Weight parameter α₂.
        alpha2: Rational,
        /// Combined parameter `g = α₁ + α₂ + 2n`.
        g: Rational,
    },
}

impl PrefactorTag {
    /// Evaluate the tag at integer index `k`.
    ///
    /// Errors with [`Error::PrefactorPole`] when a Pochhammer factor in a
    /// denominator vanishes (only possible at negative `k` outside the
    /// finiteness range).
    pub fn value(&self, k: i64) -> Result<Rational> {
        match self {
            PrefactorTag::One => Ok(rat_i(1)),
            PrefactorTag::OddDoubleFactorial => {
                if k < 0 {
                    return Err(Error::PrefactorPole);
                }
                Ok(crate::exact::odd_double_factorial(k as u64))
            }
            PrefactorTag::LaguerrePochhammer { alpha } => {
                signed_pochhammer(&(alpha.clone() + rat_i(1)), k)
            }
            PrefactorTag::JacobiPochhammerRatio { alpha2, g } => {
                let num = signed_pochhammer(&(alpha2.clone() + rat_i(1)), k)?;
                let den = signed_pochhammer(&(g.clone() + rat_i(1)), k)?;
                if den.is_zero() {
                    return Err(Error::PrefactorPole);
                }
                Ok(num / den)
            }
        }
    }
}

/// Pochhammer symbol `(a)ₖ` extended to negative integer `k` via
/// `(a)₋ⱼ = 1/((a−1)(a−2)⋯(a−j))`.
pub fn signed_pochhammer(a: &Rational, k: i64) -> Result<Rational> {
    if k >= 0 {
        Ok(crate::exact::pochhammer_rat(a, k as u64))
    } else {
        let mut den = Rational::one();
        let mut factor = a.clone();
        for _ in 0..(-k) {
            factor -= rat_i(1);
            if factor.is_zero() {
                return Err(Error::PrefactorPole);
            }
            den *= factor.clone();
        }
        Ok(Rational::one() / den)
    }
}

/// An exact spectral moment: `full_value = normalized × prefactor(k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentValue {
    /// Moment index (power of the matrix inside the trace).
    pub k: i64,
    /// Normalized exact value (the polynomial part of the closed form).
    pub normalized: Rational,
    /// Symbolic unit multiplying `normalized`.
    pub prefactor: PrefactorTag,
}

impl MomentValue {
    /// A moment with no symbolic prefactor.
    pub fn exact(k: i64, value: Rational) -> Self {
        MomentValue {
            k,
            normalized: value,
            prefactor: PrefactorTag::One,
        }
    }

    /// A moment in units of `(2k−1)!!`.
    pub fn in_double_factorial_units(k: i64, normalized: Rational) -> Self {
        MomentValue {
            k,
            normalized,
            prefactor: PrefactorTag::OddDoubleFactorial,
        }
    }

    /// The exact full value `normalized × prefactor(k)`.
    ///
    /// # Panics
    /// Panics if the prefactor has a pole at `k`; constructors only produce
    /// values inside the finiteness range, so this cannot happen for values
    /// built by this crate.
    pub fn full_value(&self) -> Rational {
        let tag = self
            .prefactor
            .value(self.k)
            .expect("prefactor is finite at this index");
        self.normalized.clone() * tag
    }

    /// The full value as a floating-point number.
    pub fn to_f64(&self) -> f64 {
        crate::exact::rational_to_f64(&self.full_value())
    }

    /// Re-expresses the moment with prefactor [`PrefactorTag::One`].
    #[must_use]
    pub fn flattened(&self) -> MomentValue {
        MomentValue::exact(self.k, self.full_value())
    }
}

impl core::fmt::Display for MomentValue {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let v = self.full_value();
        if v.denom().is_one() {
            write!(f, "{}", v.numer())
        } else {
            write!(f, "{}/{}", v.numer(), v.denom())
        }
    }
}

impl PartialOrd for MomentValue {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        self.full_value().partial_cmp(&other.full_value())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn constructors_validate() {
        assert!(EnsembleSpec::gaussian(2, 5).is_ok());
        assert!(EnsembleSpec::gaussian(3, 5).is_err());
        assert!(EnsembleSpec::gaussian(2, 0).is_err());
        assert!(EnsembleSpec::laguerre(2, 8, 11).is_ok());
        assert!(EnsembleSpec::laguerre(2, 8, 7).is_err());
        assert!(EnsembleSpec::jacobi(2, 3, rat(1, 2), rat(3, 2)).is_ok());
        assert!(EnsembleSpec::jacobi(2, 3, rat_i(-2), rat_i(0)).is_err());
    }

    #[test]
    fn laguerre_alpha() {
        let spec = EnsembleSpec::laguerre(2, 8, 11).unwrap();
        assert_eq!(spec.alpha(), Some(rat_i(3)));
    }

    #[test]
    fn double_factorial_tag() {
        let m = MomentValue::in_double_factorial_units(3, rat_i(4));
        // (2·3−1)!! = 15, so the full value is 60.
        assert_eq!(m.full_value(), rat_i(60));
        assert_eq!(m.to_string(), "60");
    }

    #[test]
    fn laguerre_tag_negative_index() {
        // (α+1)₋₂ = 1/(α(α−1)) at α=3 → 1/6
        let tag = PrefactorTag::LaguerrePochhammer { alpha: rat_i(3) };
        assert_eq!(tag.value(-2).unwrap(), rat(1, 6));
        // pole at α=1, k=−2: (2)₋₂ = 1/((1)(0)) → pole
        let tag = PrefactorTag::LaguerrePochhammer { alpha: rat_i(1) };
        assert!(tag.value(-2).is_err());
    }

    #[test]
    fn jacobi_tag_ratio() {
        // (α₂+1)₂/(g+1)₂ at α₂=1, g=6: (2·3)/(7·8) = 6/56 = 3/28
        let tag = PrefactorTag::JacobiPochhammerRatio {
            alpha2: rat_i(1),
            g: rat_i(6),
        };
        assert_eq!(tag.value(2).unwrap(), rat(3, 28));
    }
}
