//! Weil `q`-polynomials: certification, point counts, and construction from
//! curve point counts.
//!
//! A [`WeilPolynomial`] is the monic characteristic polynomial
//! `f(t) = prod (t - a_i)` of Frobenius. Its certification is exact: the
//! functional equation is a coefficient identity, and the Riemann hypothesis
//! is reduced to real-root location questions answered by Sturm sequences.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::{
    cauchy_bound, gcd_subresultant, resultant_in_parameter, IntegerPolynomial, RationalScalar,
    SturmSequence,
};

/// Deterministic primality by trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Size `q = p^n` of a finite field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeFieldSize {
    q: u64,
    p: u64,
    n: u32,
}

impl PrimeFieldSize {
    /// Factors `q` as a prime power.
    pub fn new(q: u64) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidField(format!("q = {q} is not a prime power")));
        }
        let mut p = 2u64;
        while p.saturating_mul(p) <= q && q % p != 0 {
            p += 1;
        }
        if q % p != 0 {
            p = q;
        }
        let mut rest = q;
        let mut n = 0;
        while rest % p == 0 {
            rest /= p;
            n += 1;
        }
        if rest != 1 {
            return Err(Error::InvalidField(format!("q = {q} is not a prime power")));
        }
        Ok(PrimeFieldSize { q, p, n })
    }

    /// Checks a caller-supplied `(q, p, n)` triple.
    pub fn from_parts(q: u64, p: u64, n: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("p = {p} is not prime")));
        }
        let field = Self::new(q)?;
        if field.p != p || field.n != n {
            return Err(Error::InvalidField(format!("q = {q} is not {p}^{n}")));
        }
        Ok(field)
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q_big(&self) -> BigInt {
        BigInt::from(self.q)
    }

    pub fn q_pow(&self, e: usize) -> BigInt {
        num_traits::pow(self.q_big(), e)
    }

    pub(crate) fn ensure_same(&self, other: &PrimeFieldSize) -> Result<()> {
        if self.q == other.q {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.q.to_string(), other.q.to_string()))
        }
    }
}

impl fmt::Display for PrimeFieldSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.q)
    }
}

/// A certified Weil `q`-polynomial of degree `2g`.
///
/// `g = 0` is allowed and denotes the constant polynomial `1`, the
/// characteristic polynomial of a zero-dimensional abelian variety.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeilPolynomial {
    field: PrimeFieldSize,
    poly: IntegerPolynomial,
    g: usize,
}

impl WeilPolynomial {
    pub fn trivial(field: PrimeFieldSize) -> Self {
        WeilPolynomial { field, poly: IntegerPolynomial::one(), g: 0 }
    }

    pub fn field(&self) -> &PrimeFieldSize {
        &self.field
    }

    pub fn poly(&self) -> &IntegerPolynomial {
        &self.poly
    }

    /// Half the degree: the dimension of the abelian variety.
    pub fn g(&self) -> usize {
        self.g
    }

    pub fn degree(&self) -> usize {
        2 * self.g
    }

    pub fn is_trivial(&self) -> bool {
        self.g == 0
    }

    /// Product of two Weil polynomials over the same field, recertified.
    pub fn product(&self, other: &WeilPolynomial) -> Result<WeilPolynomial> {
        self.field.ensure_same(&other.field)?;
        validate_weil(self.field, &(&self.poly * &other.poly))
    }

    /// `|B(F_q)| = f(1)`.
    pub fn point_count(&self) -> BigInt {
        point_count(self)
    }

    /// The Frobenius eigenvalue involution `a -> q/a` applied to the root
    /// multiset: `t^(2g) f(q/t) / q^g`.
    pub fn involution_image(&self) -> IntegerPolynomial {
        let n = self.degree();
        let qg = self.field.q_pow(self.g);
        let coeffs = (0..=n)
            .map(|i| {
                // coefficient of t^i is c_{n-i} q^{n-i} / q^g
                let c = self.poly.coeff(n - i) * self.field.q_pow(n - i);
                debug_assert!((&c % &qg).is_zero());
                c / &qg
            })
            .collect();
        IntegerPolynomial::new(coeffs)
    }
}

impl fmt::Display for WeilPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self.poly, self.field)
    }
}

fn check_shape(field: &PrimeFieldSize, poly: &IntegerPolynomial) -> Result<usize> {
    let Some(deg) = poly.degree() else {
        return Err(Error::InvalidInput("the zero polynomial is not a Weil polynomial".into()));
    };
    if deg % 2 == 1 {
        return Err(Error::DegreeOdd(deg));
    }
    if !poly.is_monic() {
        return Err(Error::NotMonic);
    }
    let g = deg / 2;
    let expected = field.q_pow(g);
    if poly.constant_term() != expected {
        return Err(Error::FunctionalEquationFailure(format!(
            "constant term {} differs from q^g = {expected}",
            poly.constant_term()
        )));
    }
    Ok(g)
}

fn check_symmetry(field: &PrimeFieldSize, poly: &IntegerPolynomial, g: usize) -> Result<()> {
    for i in 0..=g {
        let lhs = poly.coeff(i);
        let rhs = field.q_pow(g - i) * poly.coeff(2 * g - i);
        if lhs != rhs {
            return Err(Error::FunctionalEquationFailure(format!(
                "c_{i} = {lhs} but q^{} * c_{} = {rhs}",
                g - i,
                2 * g - i
            )));
        }
    }
    Ok(())
}

/// `h` with `f(t) = t^g h(t + q/t)`, assuming the symmetry already holds.
fn real_weil_unchecked(field: &PrimeFieldSize, poly: &IntegerPolynomial, g: usize) -> IntegerPolynomial {
    // s_k(x) = t^k + (q/t)^k as a polynomial in x = t + q/t.
    let q = IntegerPolynomial::constant(field.q_big());
    let x = IntegerPolynomial::monomial(BigInt::one(), 1);
    let mut h = IntegerPolynomial::constant(poly.coeff(g));
    let mut prev = IntegerPolynomial::constant(BigInt::from(2));
    let mut cur = x.clone();
    for k in 1..=g {
        h = &h + &cur.scale(&poly.coeff(g + k));
        let next = &(&x * &cur) - &(&q * &prev);
        prev = cur;
        cur = next;
    }
    h
}

/// Certifies `poly` as a Weil `q`-polynomial.
///
/// Checks, in order: even degree, monic, constant term `q^g`, coefficient
/// symmetry `c_i = q^(g-i) c_(2g-i)`, then the Riemann hypothesis. For the
/// latter, every root `x_i = a_i + q/a_i` of the real Weil transform `h`
/// must be real (Sturm count on the squarefree part) and satisfy
/// `x_i^2 <= 4q`, i.e. `s(y) = Res_x(h(x), x^2 + y - 4q)` has no negative
/// real root.
pub fn validate_weil(field: PrimeFieldSize, poly: &IntegerPolynomial) -> Result<WeilPolynomial> {
    let g = check_shape(&field, poly)?;
    check_symmetry(&field, poly, g)?;
    if g > 0 {
        let h = real_weil_unchecked(&field, poly, g);
        check_real_roots_in_band(&field, &h)?;
    }
    Ok(WeilPolynomial { field, poly: poly.clone(), g })
}

fn squarefree_part(f: &IntegerPolynomial) -> IntegerPolynomial {
    let common = gcd_subresultant(f, &f.derivative());
    f.normalized()
        .div_exact(&common)
        .expect("gcd with the derivative divides the polynomial")
}

fn check_real_roots_in_band(field: &PrimeFieldSize, h: &IntegerPolynomial) -> Result<()> {
    let h_sf = squarefree_part(h);
    let deg = h_sf.degree().unwrap_or(0);
    let real = SturmSequence::new(&h_sf).count_real();
    if real != deg {
        return Err(Error::RiemannHypothesisFailure(format!(
            "real Weil polynomial {h} has {} non-real roots",
            deg - real
        )));
    }
    // x^2 + (y - 4q), coefficients in x, each a polynomial in y
    let four_q = BigInt::from(4) * field.q_big();
    let g_in_x = [
        IntegerPolynomial::new(vec![-four_q, BigInt::one()]),
        IntegerPolynomial::zero(),
        IntegerPolynomial::one(),
    ];
    let s = resultant_in_parameter(&h_sf, &g_in_x, deg)?;
    let s_sf = squarefree_part(&s);
    if s_sf.is_constant() {
        return Ok(());
    }
    let sturm = SturmSequence::new(&s_sf);
    let bound = cauchy_bound(&s_sf);
    let zero = RationalScalar::zero();
    let mut negative = sturm.count_in(&-bound, &zero);
    if s_sf.constant_term().is_zero() {
        negative -= 1;
    }
    if negative > 0 {
        return Err(Error::RiemannHypothesisFailure(format!(
            "{negative} roots of {h} lie outside [-2 sqrt(q), 2 sqrt(q)]"
        )));
    }
    Ok(())
}

/// `f(1)`, the number of rational points of the abelian variety.
pub fn point_count(f: &WeilPolynomial) -> BigInt {
    f.poly.eval_int(&BigInt::one())
}

/// Real Weil transform `h`, of degree `g`, with `f(t) = t^g h(t + q/t)`.
pub fn real_weil_transform(f: &WeilPolynomial) -> IntegerPolynomial {
    real_weil_unchecked(&f.field, &f.poly, f.g)
}

/// Real Weil transform of an uncertified polynomial; fails unless the
/// functional equation holds.
pub fn real_weil_transform_of(field: PrimeFieldSize, poly: &IntegerPolynomial) -> Result<IntegerPolynomial> {
    let g = check_shape(&field, poly)?;
    check_symmetry(&field, poly, g)?;
    Ok(real_weil_unchecked(&field, poly, g))
}

/// Characteristic polynomial of Frobenius on `H^1` of a genus-`g` curve with
/// `counts[m-1] = #X(F_(q^m))`.
pub fn zeta_from_counts(field: PrimeFieldSize, g: usize, counts: &[BigInt]) -> Result<WeilPolynomial> {
    if g == 0 {
        return Err(Error::InvalidInput("genus must be positive".into()));
    }
    if counts.len() != g {
        return Err(Error::InvalidInput(format!("expected {g} point counts, got {}", counts.len())));
    }
    if let Some(bad) = counts.iter().find(|n| !n.is_positive()) {
        return Err(Error::InvalidInput(format!("point count {bad} is not positive")));
    }
    let power_sums: Vec<BigInt> = counts
        .iter()
        .enumerate()
        .map(|(i, n)| field.q_pow(i + 1) + 1 - n)
        .collect();

    // Newton: k e_k = sum_{i=1}^k (-1)^(i-1) e_(k-i) p_i
    let mut e = vec![BigInt::one()];
    for k in 1..=g {
        let mut acc = BigInt::zero();
        for i in 1..=k {
            let term = &e[k - i] * &power_sums[i - 1];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        let (quot, rem) = acc.div_rem(&BigInt::from(k));
        if !rem.is_zero() {
            return Err(Error::ValidationFailure(format!(
                "elementary symmetric function e_{k} = {acc}/{k} is not integral"
            )));
        }
        e.push(quot);
    }

    let mut coeffs = vec![BigInt::zero(); 2 * g + 1];
    for (k, ek) in e.iter().enumerate() {
        coeffs[2 * g - k] = if k % 2 == 1 { -ek } else { ek.clone() };
    }
    for i in 0..g {
        coeffs[i] = field.q_pow(g - i) * &coeffs[2 * g - i];
    }
    validate_weil(field, &IntegerPolynomial::new(coeffs))
        .map_err(|err| Error::ValidationFailure(format!("{}: {err}", err.name())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntegerPolynomial {
        IntegerPolynomial::from_i64s(c)
    }

    fn field(q: u64) -> PrimeFieldSize {
        PrimeFieldSize::new(q).unwrap()
    }

    fn counts(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&n| BigInt::from(n)).collect()
    }

    #[test]
    fn field_factorization() {
        let f = field(125);
        assert_eq!((f.p(), f.n()), (5, 3));
        assert_eq!(field(2).p(), 2);
        assert!(PrimeFieldSize::new(12).is_err());
        assert!(PrimeFieldSize::new(1).is_err());
        assert!(PrimeFieldSize::from_parts(9, 3, 2).is_ok());
        assert!(PrimeFieldSize::from_parts(9, 3, 1).is_err());
        assert!(PrimeFieldSize::from_parts(4, 4, 1).is_err());
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn validate_examples() {
        let w = validate_weil(field(5), &p(&[5, -2, 1])).unwrap();
        assert_eq!(w.g(), 1);
        assert!(matches!(
            validate_weil(field(5), &p(&[5, -5, 1])),
            Err(Error::RiemannHypothesisFailure(_))
        ));
        assert!(matches!(
            validate_weil(field(5), &p(&[3, -2, 1])),
            Err(Error::FunctionalEquationFailure(_))
        ));
    }

    #[test]
    fn validate_error_order() {
        assert!(matches!(validate_weil(field(5), &p(&[5, 1])), Err(Error::DegreeOdd(1))));
        assert!(matches!(validate_weil(field(5), &p(&[5, -2, 2])), Err(Error::NotMonic)));
        // constant term right, middle symmetry wrong: c_1 = 3 vs 5 * c_3 = -5
        assert!(matches!(
            validate_weil(field(5), &p(&[25, 3, 0, -1, 1])),
            Err(Error::FunctionalEquationFailure(_))
        ));
        assert!(matches!(
            validate_weil(field(5), &IntegerPolynomial::zero()),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn boundary_roots_are_accepted() {
        // supersingular: (t - 3)^2 over F_9 has roots of modulus 3 on the band edge
        assert!(validate_weil(field(9), &p(&[9, -6, 1])).is_ok());
        assert!(validate_weil(field(9), &p(&[9, 6, 1])).is_ok());
        // t^2 - 7t + 9 has discriminant 13 > 0: real roots off the circle
        assert!(validate_weil(field(9), &p(&[9, -7, 1])).is_err());
    }

    #[test]
    fn complex_real_weil_roots_rejected() {
        // h(x) = x^2 + 1 has no real roots; f = t^2 h(t + 5/t)
        let f = p(&[25, 0, 11, 0, 1]);
        assert!(matches!(
            validate_weil(field(5), &f),
            Err(Error::RiemannHypothesisFailure(_))
        ));
    }

    #[test]
    fn point_counts() {
        assert_eq!(validate_weil(field(5), &p(&[5, -2, 1])).unwrap().point_count(), 4.into());
        assert_eq!(validate_weil(field(2), &p(&[2, 1, 1])).unwrap().point_count(), 4.into());
        assert_eq!(validate_weil(field(2), &p(&[2, 2, 1])).unwrap().point_count(), 5.into());
    }

    #[test]
    fn real_weil_examples() {
        let f = validate_weil(field(5), &p(&[5, -2, 1])).unwrap();
        assert_eq!(real_weil_transform(&f), p(&[-2, 1]));
        let f = validate_weil(field(2), &p(&[2, 0, 1])).unwrap();
        assert_eq!(real_weil_transform(&f), p(&[0, 1]));
        let prod = &p(&[5, -2, 1]) * &p(&[5, 1, 1]);
        let f = validate_weil(field(5), &prod).unwrap();
        assert_eq!(real_weil_transform(&f), &p(&[-2, 1]) * &p(&[1, 1]));
        assert!(matches!(
            real_weil_transform_of(field(5), &p(&[5, -2, 1, 1, 1])),
            Err(Error::FunctionalEquationFailure(_))
        ));
    }

    #[test]
    fn zeta_examples() {
        assert_eq!(zeta_from_counts(field(2), 1, &counts(&[4])).unwrap().poly(), &p(&[2, 1, 1]));
        assert_eq!(zeta_from_counts(field(5), 1, &counts(&[4])).unwrap().poly(), &p(&[5, -2, 1]));
        assert_eq!(zeta_from_counts(field(2), 1, &counts(&[3])).unwrap().poly(), &p(&[2, 0, 1]));
    }

    #[test]
    fn zeta_rejects_bad_counts() {
        // N_1 = 10 over F_2 violates the Hasse bound
        assert!(matches!(
            zeta_from_counts(field(2), 1, &counts(&[10])),
            Err(Error::ValidationFailure(_))
        ));
        // e_2 = (p_1^2 - p_2)/2 with p_1 = 0, p_2 = 1 is not integral
        assert!(matches!(
            zeta_from_counts(field(2), 2, &counts(&[3, 4])),
            Err(Error::ValidationFailure(_))
        ));
        assert!(matches!(zeta_from_counts(field(2), 2, &counts(&[3])), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn genus_two_curve() {
        // y^2 + y = x^5 over F_2 is supersingular with P(t) = 1 + 4t^4:
        // N_1 = 3, N_2 = 5.
        let f = zeta_from_counts(field(2), 2, &counts(&[3, 5])).unwrap();
        assert_eq!(f.poly(), &p(&[4, 0, 0, 0, 1]));
    }

    #[test]
    fn trivial_polynomial() {
        let t = WeilPolynomial::trivial(field(5));
        assert_eq!(t.g(), 0);
        assert_eq!(validate_weil(field(5), &IntegerPolynomial::one()).unwrap(), t);
        assert_eq!(t.point_count(), BigInt::one());
    }
}
