//! Composed products: polynomials whose roots are the pairwise products of
//! the roots of two others.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::{resultant_in_parameter, IntegerPolynomial};
use crate::weil::WeilPolynomial;

/// Monic polynomial with root multiset `{a_i * b_j}` for monic `f`, `g`.
///
/// Computed as `Res_x(f(x), x^deg g * g(T/x))`, specialized at
/// `deg f * deg g + 1` integer values of `T` and interpolated.
pub fn composed_product_poly(f: &IntegerPolynomial, g: &IntegerPolynomial) -> Result<IntegerPolynomial> {
    let (Some(df), Some(dg)) = (f.degree(), g.degree()) else {
        return Err(Error::InvalidInput("composed product with the zero polynomial".into()));
    };
    if !f.is_monic() || !g.is_monic() {
        return Err(Error::NotMonic);
    }
    if df == 0 || dg == 0 {
        return Ok(IntegerPolynomial::one());
    }
    // x^dg g(T/x) = sum_j g_j T^j x^(dg - j)
    let g_in_x: Vec<IntegerPolynomial> = (0..=dg)
        .map(|k| IntegerPolynomial::monomial(g.coeff(dg - k), dg - k))
        .collect();
    let product = resultant_in_parameter(f, &g_in_x, df * dg)?;
    normalize_monic(product, df * dg)
}

fn normalize_monic(p: IntegerPolynomial, expected_degree: usize) -> Result<IntegerPolynomial> {
    let lc = p.leading_coefficient();
    if p.degree() != Some(expected_degree) || !lc.abs().is_one() {
        return Err(Error::Internal(format!(
            "composed product has leading coefficient {lc} and degree {:?}",
            p.degree()
        )));
    }
    Ok(if lc.is_negative() { -p } else { p })
}

/// Composed product of two certified Weil polynomials over the same field.
pub fn composed_product(fa: &WeilPolynomial, fb: &WeilPolynomial) -> Result<IntegerPolynomial> {
    fa.field().ensure_same(fb.field())?;
    composed_product_poly(fa.poly(), fb.poly())
}

/// Reversal `t^deg P(1/t) = prod (1 - r_k t)`.
pub fn to_lfactor(p: &IntegerPolynomial) -> Result<IntegerPolynomial> {
    if p.constant_term().is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    Ok(p.reversed())
}
