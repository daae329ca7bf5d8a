use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{sign_of, IntegerPolynomial, RationalScalar};

/// Sturm sequence of a squarefree polynomial, built from sign-corrected
/// pseudo-remainders so every entry stays in `Z[t]`.
#[derive(Debug, Clone)]
pub struct SturmSequence {
    chain: Vec<IntegerPolynomial>,
}

impl SturmSequence {
    /// Panics if `f` is zero. Callers pass squarefree parts; with repeated
    /// roots the counts below refer to distinct roots only on intervals
    /// whose endpoints are not roots.
    pub fn new(f: &IntegerPolynomial) -> Self {
        assert!(!f.is_zero(), "Sturm sequence of the zero polynomial");
        let mut chain = vec![f.primitive_part()];
        let d = f.derivative();
        if !d.is_zero() {
            chain.push(d.primitive_part());
        }
        while chain.len() >= 2 {
            let n = chain.len();
            let (prev, cur) = (&chain[n - 2], &chain[n - 1]);
            if cur.is_constant() {
                break;
            }
            let delta = prev.degree().unwrap() - cur.degree().unwrap();
            let mut rem = prev.pseudo_remainder(cur);
            if rem.is_zero() {
                break;
            }
            // prem = lc^(delta+1) * rem; undo a negative scaling factor.
            if cur.leading_coefficient().is_negative() && delta % 2 == 0 {
                rem = -rem;
            }
            chain.push((-rem).primitive_part());
        }
        SturmSequence { chain }
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    fn variations(signs: impl Iterator<Item = i32>) -> usize {
        let mut last = 0;
        let mut count = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    pub fn variations_at(&self, x: &RationalScalar) -> usize {
        Self::variations(self.chain.iter().map(|p| p.sign_at(x)))
    }

    pub fn variations_at_pos_infinity(&self) -> usize {
        Self::variations(self.chain.iter().map(|p| sign_of(&p.leading_coefficient())))
    }

    pub fn variations_at_neg_infinity(&self) -> usize {
        Self::variations(self.chain.iter().map(|p| {
            let s = sign_of(&p.leading_coefficient());
            if p.degree().unwrap_or(0) % 2 == 1 {
                -s
            } else {
                s
            }
        }))
    }

    /// Distinct real roots in the half-open interval `(lo, hi]`.
    pub fn count_in(&self, lo: &RationalScalar, hi: &RationalScalar) -> usize {
        assert!(lo < hi);
        self.variations_at(lo).saturating_sub(self.variations_at(hi))
    }

    /// Distinct real roots of the sequence's first polynomial.
    pub fn count_real(&self) -> usize {
        self.variations_at_neg_infinity() - self.variations_at_pos_infinity()
    }
}

/// Cauchy bound `1 + max |c_i / c_n|`: every complex root has modulus
/// strictly below it.
pub fn cauchy_bound(f: &IntegerPolynomial) -> RationalScalar {
    let lc = f.leading_coefficient().abs();
    assert!(!lc.is_zero(), "Cauchy bound of the zero polynomial");
    let n = f.degree().unwrap();
    let max = f.coeffs()[..n]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(BigInt::zero);
    RationalScalar::from_integer(1.into()) + RationalScalar::new(max, lc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntegerPolynomial {
        IntegerPolynomial::from_i64s(c)
    }

    fn int(n: i64) -> RationalScalar {
        RationalScalar::from_integer(n.into())
    }

    #[test]
    fn counts_real_roots() {
        // (t-1)(t+2)(t-3)
        let f = &(&p(&[-1, 1]) * &p(&[2, 1])) * &p(&[-3, 1]);
        let s = SturmSequence::new(&f);
        assert_eq!(s.count_real(), 3);
        assert_eq!(s.count_in(&int(0), &int(4)), 2);
        assert_eq!(s.count_in(&int(-5), &int(0)), 1);
        // half-open: root at hi counted, at lo not
        assert_eq!(s.count_in(&int(1), &int(3)), 1);
    }

    #[test]
    fn no_real_roots() {
        let s = SturmSequence::new(&p(&[5, -2, 1]));
        assert_eq!(s.count_real(), 0);
    }

    #[test]
    fn negative_leading_coefficient() {
        // -(t^2 - 2) has two real roots
        let s = SturmSequence::new(&p(&[2, 0, -1]));
        assert_eq!(s.count_real(), 2);
        let s = SturmSequence::new(&p(&[0, 3, 0, -1]));
        assert_eq!(s.count_real(), 3);
    }

    #[test]
    fn cauchy_bound_dominates_roots() {
        let f = p(&[-6, 1]);
        assert!(cauchy_bound(&f) > int(6));
        let s = SturmSequence::new(&f);
        let b = cauchy_bound(&f);
        assert_eq!(s.count_in(&-b.clone(), &b), 1);
    }
}
