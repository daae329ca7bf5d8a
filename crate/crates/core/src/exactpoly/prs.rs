//! Subresultant remainder sequences: gcd, resultant, and the derived
//! squarefree decomposition.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{IntegerPolynomial, RationalScalar};
use crate::error::{Error, Result};

/// Primitive gcd with positive leading coefficient, via the subresultant PRS.
///
/// `gcd(0, 0)` is the zero polynomial.
pub fn gcd_subresultant(f: &IntegerPolynomial, g: &IntegerPolynomial) -> IntegerPolynomial {
    let (mut a, mut b) = match (f.degree(), g.degree()) {
        (None, _) => return g.normalized(),
        (_, None) => return f.normalized(),
        (Some(df), Some(dg)) if df >= dg => (f.primitive_part(), g.primitive_part()),
        _ => (g.primitive_part(), f.primitive_part()),
    };
    let mut g_coef = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = a.degree().unwrap() - b.degree().unwrap();
        let r = a.pseudo_remainder(&b);
        match r.degree() {
            None => break,
            Some(0) => return IntegerPolynomial::one(),
            Some(_) => {}
        }
        a = b;
        let divisor = &g_coef * num_traits::pow(h.clone(), delta);
        b = r.div_scalar_exact(&divisor);
        g_coef = a.leading_coefficient();
        h = update_h(&h, &g_coef, delta);
    }
    b.normalized()
}

/// `h^(1-delta) * g^delta`, exact for the subresultant recurrences.
fn update_h(h: &BigInt, g: &BigInt, delta: usize) -> BigInt {
    match delta {
        0 => h.clone(),
        1 => g.clone(),
        _ => {
            let num = num_traits::pow(g.clone(), delta);
            let den = num_traits::pow(h.clone(), delta - 1);
            debug_assert!((&num % &den).is_zero());
            num / den
        }
    }
}

/// Resultant of two nonzero polynomials:
/// `lc(f)^deg g * lc(g)^deg f * prod (alpha_i - beta_j)`.
pub fn resultant(f: &IntegerPolynomial, g: &IntegerPolynomial) -> Result<BigInt> {
    let (Some(df), Some(dg)) = (f.degree(), g.degree()) else {
        return Err(Error::InvalidInput("resultant of the zero polynomial".into()));
    };
    if df == 0 {
        return Ok(num_traits::pow(f.leading_coefficient(), dg));
    }
    if dg == 0 {
        return Ok(num_traits::pow(g.leading_coefficient(), df));
    }

    let (mut a, mut b, mut sign) = if df >= dg {
        (f.clone(), g.clone(), 1)
    } else {
        let s = if df % 2 == 1 && dg % 2 == 1 { -1 } else { 1 };
        (g.clone(), f.clone(), s)
    };
    let ca = a.content();
    let cb = b.content();
    a = a.div_scalar_exact(&ca);
    b = b.div_scalar_exact(&cb);
    let scale = num_traits::pow(ca, b.degree().unwrap()) * num_traits::pow(cb, a.degree().unwrap());

    let mut g_coef = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            sign = -sign;
        }
        let r = a.pseudo_remainder(&b);
        if r.is_zero() {
            return Ok(BigInt::zero());
        }
        a = b;
        let divisor = &g_coef * num_traits::pow(h.clone(), delta);
        b = r.div_scalar_exact(&divisor);
        g_coef = a.leading_coefficient();
        h = update_h(&h, &g_coef, delta);
        if b.degree().unwrap() == 0 {
            break;
        }
    }
    let da = a.degree().unwrap();
    let lb = b.leading_coefficient();
    let h_final = update_h(&h, &lb, da);
    let out = scale * h_final;
    Ok(if sign < 0 { -out } else { out })
}

/// Resultant in `x` of `f(x)` against a polynomial `G(x, T)` whose `x`-coefficients
/// are polynomials in `T`, returned as a polynomial in `T`.
///
/// `G` is passed as its `x`-coefficients in ascending order. The result is
/// `lc(f)^n * prod_i G(alpha_i, T)` where `n = g_in_x.len() - 1` is the formal
/// `x`-degree, so specializations where the top coefficient vanishes are still
/// handled consistently. `degree_bound` must bound the `T`-degree of the
/// result; the value is recovered by exact interpolation at the integer nodes
/// `0..=degree_bound`.
pub fn resultant_in_parameter(
    f: &IntegerPolynomial,
    g_in_x: &[IntegerPolynomial],
    degree_bound: usize,
) -> Result<IntegerPolynomial> {
    let Some(df) = f.degree() else {
        return Err(Error::InvalidInput("resultant of the zero polynomial".into()));
    };
    let formal = g_in_x.len().saturating_sub(1);
    let lc_f = f.leading_coefficient();
    let values: Vec<BigInt> = (0..=degree_bound)
        .map(|node| {
            let t0 = BigInt::from(node);
            let specialized = IntegerPolynomial::new(g_in_x.iter().map(|c| c.eval_int(&t0)).collect());
            match specialized.degree() {
                None => Ok(BigInt::zero()),
                Some(ds) => {
                    let base = if df == 0 {
                        num_traits::pow(lc_f.clone(), ds)
                    } else {
                        resultant(f, &specialized)?
                    };
                    Ok(base * num_traits::pow(lc_f.clone(), formal - ds))
                }
            }
        })
        .collect::<Result<_>>()?;
    interpolate_integer_nodes(&values)
}

/// Exact Newton interpolation through `(k, values[k])` for `k = 0..n`.
/// Fails if the interpolant does not have integer coefficients.
fn interpolate_integer_nodes(values: &[BigInt]) -> Result<IntegerPolynomial> {
    let n = values.len();
    // Divided differences on equally spaced integer nodes.
    let mut table: Vec<RationalScalar> = values
        .iter()
        .map(|v| RationalScalar::from_integer(v.clone()))
        .collect();
    let mut newton = Vec::with_capacity(n);
    for level in 0..n {
        newton.push(table[0].clone());
        let step = RationalScalar::from_integer(BigInt::from(level + 1));
        table = table
            .windows(2)
            .map(|w| (&w[1] - &w[0]) / &step)
            .collect();
    }
    // Expand sum_k c_k * prod_{m<k} (T - m) by Horner from the top.
    let mut acc: Vec<RationalScalar> = Vec::new();
    for (k, c) in newton.iter().enumerate().rev() {
        // acc = acc * (T - k) + c
        let mut next = vec![RationalScalar::zero(); acc.len() + 1];
        let shift = RationalScalar::from_integer(BigInt::from(k));
        for (i, a) in acc.iter().enumerate() {
            next[i + 1] += a;
            next[i] -= a * &shift;
        }
        next[0] += c;
        acc = next;
    }
    let coeffs = acc
        .into_iter()
        .map(|c| {
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(Error::Internal(format!("non-integral interpolant coefficient {c}")))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IntegerPolynomial::new(coeffs))
}

/// Yun's squarefree decomposition of the primitive part of `f`.
///
/// Factors are primitive with positive leading coefficient; their product
/// `prod factor^multiplicity` equals `f.normalized()`. Constants decompose to
/// the empty list.
pub fn squarefree_decomposition(f: &IntegerPolynomial) -> Result<Vec<(u32, IntegerPolynomial)>> {
    if f.is_zero() {
        return Err(Error::InvalidInput("squarefree decomposition of zero".into()));
    }
    let f = f.normalized();
    if f.is_constant() {
        return Ok(Vec::new());
    }
    let df = f.derivative();
    let a0 = gcd_subresultant(&f, &df);
    let mut b = exact(&f, &a0)?;
    let c = exact(&df, &a0)?;
    let mut d = &c - &b.derivative();
    let mut out = Vec::new();
    let mut mult = 1u32;
    while !b.is_constant() {
        let a = gcd_subresultant(&b, &d);
        if !a.is_constant() {
            out.push((mult, a.clone()));
        }
        let b_next = exact(&b, &a)?;
        let c_next = exact(&d, &a)?;
        d = &c_next - &b_next.derivative();
        b = b_next;
        mult += 1;
    }
    Ok(out)
}

fn exact(n: &IntegerPolynomial, d: &IntegerPolynomial) -> Result<IntegerPolynomial> {
    n.div_exact(d)
        .ok_or_else(|| Error::Internal(format!("{d} does not divide {n}")))
}

/// Largest `m` with `factor^m | f` over the rationals.
pub fn linear_factor_multiplicity(f: &IntegerPolynomial, factor: &IntegerPolynomial) -> Result<usize> {
    if factor.degree() != Some(1) {
        return Err(Error::InvalidInput(format!("{factor} is not linear")));
    }
    if f.is_zero() {
        return Err(Error::InvalidInput("multiplicity in the zero polynomial".into()));
    }
    let factor = factor.primitive_part();
    let mut rest = f.primitive_part();
    let mut m = 0;
    while let Some(q) = rest.div_exact(&factor) {
        rest = q;
        m += 1;
    }
    Ok(m)
}
