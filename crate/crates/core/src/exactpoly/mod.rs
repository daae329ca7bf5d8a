//! Exact univariate polynomials over the integers.
//!
//! Coefficients are stored in ascending order: index `i` holds the
//! coefficient of `t^i`. The zero polynomial is the empty sequence and has
//! no degree ([`IntegerPolynomial::degree`] returns `None`).

mod prs;
mod sturm;

pub use prs::{
    gcd_subresultant, linear_factor_multiplicity, resultant, resultant_in_parameter,
    squarefree_decomposition,
};
pub use sturm::{cauchy_bound, SturmSequence};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational value, always in lowest terms with positive denominator.
pub type RationalScalar = BigRational;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntegerPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntegerPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntegerPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntegerPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// The linear polynomial `t - root`.
    pub fn linear_root(root: BigInt) -> Self {
        Self::new(vec![-root, BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `t^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn leading_coefficient(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Nonnegative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// `self / content`, sign of the leading coefficient preserved.
    pub fn primitive_part(&self) -> Self {
        let content = self.content();
        if content.is_zero() || content.is_one() {
            return self.clone();
        }
        self.div_scalar_exact(&content)
    }

    /// Primitive part with nonnegative leading coefficient.
    pub fn normalized(&self) -> Self {
        let pp = self.primitive_part();
        if pp.leading_coefficient().is_negative() {
            -pp
        } else {
            pp
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Coefficient-wise division; every coefficient must be divisible by `c`.
    pub(crate) fn div_scalar_exact(&self, c: &BigInt) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .map(|x| {
                    debug_assert!((x % c).is_zero());
                    x / c
                })
                .collect(),
        )
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// `t^deg * f(1/t)`; trailing zeros of `self` drop out of the result.
    pub fn reversed(&self) -> Self {
        Self::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// `f(-t)`
    pub fn negate_variable(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder or is not integral.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let ddeg = divisor.degree()?;
        let Some(ndeg) = self.degree() else {
            return Some(Self::zero());
        };
        if ndeg < ddeg {
            return None;
        }
        let lc = divisor.leading_coefficient();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); ndeg - ddeg + 1];
        for k in (0..=ndeg - ddeg).rev() {
            let top = &rem[k + ddeg];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * d;
            }
            quot[k] = q;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(Self::new(quot))
        } else {
            None
        }
    }

    /// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a mod b`.
    ///
    /// Panics if `b` is zero.
    pub fn pseudo_remainder(&self, b: &Self) -> Self {
        let bdeg = b.degree().expect("pseudo-division by the zero polynomial");
        let Some(adeg) = self.degree() else {
            return Self::zero();
        };
        if adeg < bdeg {
            // lc(b)^0 * a
            return self.clone();
        }
        let lc = b.leading_coefficient();
        let mut rem = self.coeffs.clone();
        let mut steps = 0u32;
        let mut top = adeg;
        loop {
            if rem.len() <= bdeg || top < bdeg {
                break;
            }
            let lead = rem[top].clone();
            for c in rem.iter_mut() {
                *c *= &lc;
            }
            for (j, d) in b.coeffs.iter().enumerate() {
                rem[top - bdeg + j] -= &lead * d;
            }
            steps += 1;
            rem.truncate(top);
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
            match rem.len().checked_sub(1) {
                Some(d) => top = d,
                None => break,
            }
        }
        let expected = (adeg - bdeg + 1) as u32;
        let r = Self::new(rem);
        if steps < expected {
            r.scale(&num_traits::pow(lc, (expected - steps) as usize))
        } else {
            r
        }
    }

    pub fn eval_int(&self, t0: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t0 + c)
    }

    pub fn eval_rational(&self, t0: &RationalScalar) -> RationalScalar {
        eval_rational(self, t0)
    }

    /// Sign of `f(t0)` for rational `t0`, computed without building the
    /// reduced fraction.
    pub fn sign_at(&self, t0: &RationalScalar) -> i32 {
        let num = t0.numer();
        let den = t0.denom();
        // den^deg * f(num/den) as a homogeneous Horner sum; den > 0.
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * num + c * &den_pow;
            den_pow *= den;
        }
        sign_of(&acc)
    }
}

/// Exact value of `f(t0)`.
pub fn eval_rational(f: &IntegerPolynomial, t0: &RationalScalar) -> RationalScalar {
    f.coeffs.iter().rev().fold(RationalScalar::zero(), |acc, c| {
        acc * t0 + RationalScalar::from_integer(c.clone())
    })
}

pub(crate) fn sign_of(x: &BigInt) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

impl Add for &IntegerPolynomial {
    type Output = IntegerPolynomial;
    fn add(self, rhs: &IntegerPolynomial) -> IntegerPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntegerPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntegerPolynomial {
    type Output = IntegerPolynomial;
    fn sub(self, rhs: &IntegerPolynomial) -> IntegerPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntegerPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntegerPolynomial {
    type Output = IntegerPolynomial;
    fn mul(self, rhs: &IntegerPolynomial) -> IntegerPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntegerPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntegerPolynomial::new(out)
    }
}

impl Neg for IntegerPolynomial {
    type Output = IntegerPolynomial;
    fn neg(self) -> IntegerPolynomial {
        IntegerPolynomial::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl Neg for &IntegerPolynomial {
    type Output = IntegerPolynomial;
    fn neg(self) -> IntegerPolynomial {
        -self.clone()
    }
}

impl fmt::Display for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntegerPolynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntegerPolynomial {
        IntegerPolynomial::from_i64s(c)
    }

    fn r(n: i64, d: i64) -> RationalScalar {
        RationalScalar::new(n.into(), d.into())
    }

    #[test]
    fn zero_has_no_degree() {
        assert_eq!(IntegerPolynomial::zero().degree(), None);
        assert_eq!(p(&[0, 0, 0]), IntegerPolynomial::zero());
        assert_eq!(p(&[3]).degree(), Some(0));
    }

    #[test]
    fn eval_rational_examples() {
        assert_eq!(p(&[2, 1, 1]).eval_rational(&r(1, 1)), r(4, 1));
        assert_eq!(p(&[1, 6, 25]).eval_rational(&r(1, 5)), r(16, 5));
        assert_eq!(p(&[7, -3, 11]).eval_rational(&r(0, 1)), r(7, 1));
    }

    #[test]
    fn sign_at_matches_eval() {
        let f = p(&[5, -2, 1, -7, 3]);
        for (n, d) in [(1, 3), (-7, 2), (0, 1), (5, 4), (-1, 9)] {
            let v = f.eval_rational(&r(n, d));
            let s = if v.is_positive() { 1 } else if v.is_negative() { -1 } else { 0 };
            assert_eq!(f.sign_at(&r(n, d)), s);
        }
    }

    #[test]
    fn pseudo_remainder_identity() {
        let a = p(&[3, 0, -2, 5, 1]);
        let b = p(&[1, 2, 3]);
        let r = a.pseudo_remainder(&b);
        // lc(b)^3 * a - r must be divisible by b
        let lhs = &a.scale(&BigInt::from(27)) - &r;
        assert!(lhs.div_exact(&b).is_some());
        assert!(r.degree().unwrap() < 2);
    }

    #[test]
    fn div_exact_detects_remainder() {
        let f = &p(&[-1, 1]) * &p(&[2, 1, 1]);
        assert_eq!(f.div_exact(&p(&[-1, 1])), Some(p(&[2, 1, 1])));
        assert_eq!(f.div_exact(&p(&[1, 1])), None);
        assert_eq!(p(&[1, 2]).div_exact(&p(&[0, 2])), None);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[5, -2, 1]).to_string(), "t^2 - 2t + 5");
        assert_eq!(p(&[0, -1]).to_string(), "-t");
        assert_eq!(IntegerPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn reversed_and_pow() {
        assert_eq!(p(&[-5, 1]).reversed(), p(&[1, -5]));
        assert_eq!(p(&[1, 1]).pow(3), p(&[1, 3, 3, 1]));
        assert_eq!(p(&[1, 1]).pow(0), IntegerPolynomial::one());
    }
}
