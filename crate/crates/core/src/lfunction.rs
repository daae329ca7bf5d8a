//! L-functions of constant abelian schemes `B x X / X` as rational functions
//! in `t = q^(-s)`.
//!
//! The numerator is the L-factor of `h^1(B) (x) h^1(X)`, with roots
//! `a_i b_j`; the denominator is the L-factor of `h^1(B)`. Near `s = 1`,
//! `1 - q t = 1 - q^(1-s) ~ (log q)(s - 1)`, so writing the numerator as
//! `(1 - qt)^rho N~(t)` gives `L(s) ~ c (log q)^rho (s - 1)^rho` with
//! `c = N~(1/q) / D(1/q)`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::{linear_factor_multiplicity, IntegerPolynomial, RationalScalar};
use crate::tensor::{composed_product, to_lfactor};
use crate::weil::{PrimeFieldSize, WeilPolynomial};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LFunctionRep {
    field: PrimeFieldSize,
    numerator: IntegerPolynomial,
    denominator: IntegerPolynomial,
    g: usize,
    d: usize,
}

/// Vanishing order and leading coefficient at `s = 1`, in the normalization
/// `L(s) ~ c (log q)^rho (s - 1)^rho`. The `(log q)^rho` factor is carried
/// symbolically through `rho`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialValue {
    pub rho: usize,
    pub c: RationalScalar,
}

impl LFunctionRep {
    pub fn field(&self) -> &PrimeFieldSize {
        &self.field
    }

    pub fn numerator(&self) -> &IntegerPolynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &IntegerPolynomial {
        &self.denominator
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// `1 - q t`
    pub fn critical_factor(&self) -> IntegerPolynomial {
        IntegerPolynomial::new(vec![BigInt::one(), -self.field.q_big()])
    }

    /// `t = 1/q`, the image of `s = 1`.
    pub fn critical_point(&self) -> RationalScalar {
        RationalScalar::new(BigInt::one(), self.field.q_big())
    }
}

/// Builds `L(B x X / X, t)` from the Albanese polynomial `fa` (trivial when
/// `g = 0`) and the fibre polynomial `fb`.
pub fn build_lfunction(fa: &WeilPolynomial, fb: &WeilPolynomial) -> Result<LFunctionRep> {
    fa.field().ensure_same(fb.field())?;
    let numerator = if fa.is_trivial() || fb.is_trivial() {
        IntegerPolynomial::one()
    } else {
        to_lfactor(&composed_product(fa, fb)?)?
    };
    let denominator = to_lfactor(fb.poly())?;
    let (g, d) = (fa.g(), fb.g());
    let rep = LFunctionRep { field: *fa.field(), numerator, denominator, g, d };
    if rep.numerator.degree() != Some(4 * g * d) || rep.denominator.degree() != Some(2 * d) {
        return Err(Error::Internal("L-function factors have unexpected degrees".into()));
    }
    if rep.denominator.eval_rational(&rep.critical_point()).is_zero() {
        return Err(Error::DenominatorVanishes);
    }
    Ok(rep)
}

/// Multiplicity of `1 - qt` in the numerator.
pub fn analytic_rank(l: &LFunctionRep) -> Result<usize> {
    let factor = l.critical_factor();
    if linear_factor_multiplicity(&l.denominator, &factor)? > 0 {
        return Err(Error::DenominatorVanishes);
    }
    linear_factor_multiplicity(&l.numerator, &factor)
}

pub fn leading_coefficient(l: &LFunctionRep) -> Result<SpecialValue> {
    let rho = analytic_rank(l)?;
    let reduced = reduced_numerator(l, rho)?;
    let at = l.critical_point();
    let c = reduced.eval_rational(&at) / l.denominator.eval_rational(&at);
    if !c.is_positive() {
        return Err(Error::Internal(format!("leading coefficient {c} is not positive")));
    }
    Ok(SpecialValue { rho, c })
}

/// `N~(t) = N(t) / (1 - qt)^rho`.
pub(crate) fn reduced_numerator(l: &LFunctionRep, rho: usize) -> Result<IntegerPolynomial> {
    let power = l.critical_factor().pow(rho as u32);
    l.numerator
        .div_exact(&power)
        .ok_or_else(|| Error::Internal("(1 - qt)^rho does not divide the numerator".into()))
}

/// Exact `N(t0) / D(t0)`.
pub fn evaluate_at(l: &LFunctionRep, t0: &RationalScalar) -> Result<RationalScalar> {
    let den = l.denominator.eval_rational(t0);
    if den.is_zero() {
        return Err(Error::PoleAtPoint(t0.to_string()));
    }
    Ok(l.numerator.eval_rational(t0) / den)
}
