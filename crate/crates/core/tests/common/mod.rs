//! Floating-point and naive exact oracles, plus generators of Weil
//! polynomials with known roots.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use weilbsd::weil::validate_weil;
use weilbsd::{IntegerPolynomial, PrimeFieldSize, WeilPolynomial};

pub fn poly(c: &[i64]) -> IntegerPolynomial {
    IntegerPolynomial::from_i64s(c)
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn field(q: u64) -> PrimeFieldSize {
    PrimeFieldSize::new(q).unwrap()
}

pub fn to_f64(x: &BigInt) -> f64 {
    x.to_f64().unwrap()
}

pub fn rat_f64(x: &BigRational) -> f64 {
    to_f64(x.numer()) / to_f64(x.denom())
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// `(p, n)` with `p^n = q`, if `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut m = q;
    let mut n = 0;
    while m % p == 0 {
        m /= p;
        n += 1;
    }
    (m == 1).then_some((p, n))
}

/// Integers `a` with `a^2 <= 4q`.
pub fn weil_traces(q: u64) -> Vec<i64> {
    let q = q as i64;
    (-2 * q..=2 * q).filter(|a| a * a <= 4 * q).collect()
}

/// Exact value by Horner in rationals.
pub fn horner(coeffs: &[BigInt], t: &BigRational) -> BigRational {
    coeffs
        .iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * t + BigRational::from_integer(c.clone()))
}

/// Determinant of the Sylvester matrix by rational Gaussian elimination.
pub fn sylvester_resultant(f: &[BigInt], g: &[BigInt]) -> BigInt {
    let m = f.len() - 1;
    let n = g.len() - 1;
    let size = m + n;
    if size == 0 {
        return BigInt::one();
    }
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for i in 0..n {
        let mut row = vec![BigRational::zero(); size];
        for (k, c) in f.iter().rev().enumerate() {
            row[i + k] = BigRational::from_integer(c.clone());
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![BigRational::zero(); size];
        for (k, c) in g.iter().rev().enumerate() {
            row[i + k] = BigRational::from_integer(c.clone());
        }
        rows.push(row);
    }
    let mut det = BigRational::one();
    for col in 0..size {
        let Some(pivot) = (col..size).find(|&r| !rows[r][col].is_zero()) else {
            return BigInt::zero();
        };
        if pivot != col {
            rows.swap(pivot, col);
            det = -det;
        }
        let p = rows[col][col].clone();
        det *= &p;
        for r in col + 1..size {
            let factor = &rows[r][col] / &p;
            if factor.is_zero() {
                continue;
            }
            for k in col..size {
                let delta = &factor * &rows[col][k];
                rows[r][k] -= delta;
            }
        }
    }
    assert!(det.is_integer());
    det.to_integer()
}

/// Complex roots of a monic polynomial (ascending coefficients) by
/// Durand-Kerner. Clusters of nearly equal roots are replaced by their
/// centroid, which is far better conditioned than the individual members.
pub fn roots(coeffs: &[f64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    let lc = coeffs[n];
    let c: Vec<f64> = coeffs.iter().map(|x| x / lc).collect();
    let bound = 1.0 + c[..n].iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let eval = |z: Complex64| c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &k| acc * z + k);
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32) * bound.min(4.0)).collect();
    for _ in 0..5000 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    denom *= z[i] - z[j];
                }
            }
            let step = eval(z[i]) / denom;
            z[i] -= step;
            delta = delta.max(step.norm() / z[i].norm().max(1.0));
        }
        if delta < 1e-16 {
            break;
        }
    }
    cluster(&c, z, 1e-5 * bound)
}

fn derivative(c: &[f64]) -> Vec<f64> {
    c.iter().enumerate().skip(1).map(|(i, x)| x * i as f64).collect()
}

/// Replaces each cluster of `m` nearly equal roots by a Newton-polished
/// root of the `(m-1)`-th derivative, where it is simple.
fn cluster(c: &[f64], z: Vec<Complex64>, tol: f64) -> Vec<Complex64> {
    let n = z.len();
    let mut group: Vec<usize> = (0..n).collect();
    for i in 0..n {
        for j in 0..i {
            if (z[i] - z[j]).norm() < tol {
                group[i] = group[j];
                break;
            }
        }
    }
    let eval = |p: &[f64], x: Complex64| p.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &k| acc * x + k);
    (0..n)
        .map(|i| {
            let members: Vec<Complex64> = (0..n).filter(|&j| group[j] == group[i]).map(|j| z[j]).collect();
            let mut x = members.iter().sum::<Complex64>() / members.len() as f64;
            if members.len() > 1 {
                let mut d = c.to_vec();
                for _ in 1..members.len() {
                    d = derivative(&d);
                }
                let dd = derivative(&d);
                for _ in 0..20 {
                    let slope = eval(&dd, x);
                    if slope.norm() == 0.0 {
                        break;
                    }
                    x -= eval(&d, x) / slope;
                }
            }
            x
        })
        .collect()
}

pub fn coeffs_f64(p: &IntegerPolynomial) -> Vec<f64> {
    p.coeffs().iter().map(to_f64).collect()
}

/// Ascending coefficients of `prod (t - r)`.
pub fn from_roots(rs: &[Complex64]) -> Vec<Complex64> {
    let mut c = vec![Complex64::new(1.0, 0.0)];
    for &r in rs {
        let mut next = vec![Complex64::new(0.0, 0.0); c.len() + 1];
        for (i, &x) in c.iter().enumerate() {
            next[i + 1] += x;
            next[i] -= x * r;
        }
        c = next;
    }
    c
}

pub const SAME_ROOT: f64 = 1e-6;

/// Number of pairs `(i, j)` with `a_i = b_j`.
pub fn matching_pairs(a: &[Complex64], b: &[Complex64]) -> usize {
    a.iter().map(|x| b.iter().filter(|y| (*x - **y).norm() < SAME_ROOT).count()).sum()
}

/// `q^(gd) prod_(a_i != b_j) (1 - a_i / b_j)`.
pub fn special_product_oracle(q: u64, a: &[Complex64], b: &[Complex64]) -> f64 {
    let gd = (a.len() / 2 * b.len() / 2) as i32;
    let mut prod = Complex64::new((q as f64).powi(gd), 0.0);
    for x in a {
        for y in b {
            if (*x - *y).norm() >= SAME_ROOT {
                prod *= Complex64::new(1.0, 0.0) - x / y;
            }
        }
    }
    assert!(prod.im.abs() <= 1e-6 * prod.norm().max(1.0), "product not real: {prod}");
    prod.re
}

/// `L(s) = prod (1 - a_i b_j t) / prod (1 - b_j t)`, `t = q^(-s)`.
pub fn l_value(q: u64, a: &[Complex64], b: &[Complex64], s: f64) -> f64 {
    let t = (q as f64).powf(-s);
    let one = Complex64::new(1.0, 0.0);
    let mut num = one;
    for x in a {
        for y in b {
            num *= one - x * y * t;
        }
    }
    let den: Complex64 = b.iter().map(|y| one - y * t).product();
    (num / den).re
}

pub fn rel_err(x: f64, y: f64) -> f64 {
    (x - y).abs() / y.abs().max(f64::MIN_POSITIVE)
}

/// A Weil polynomial assembled from factors whose roots are known in
/// closed form.
#[derive(Debug, Clone)]
pub struct Sample {
    pub q: u64,
    pub poly: IntegerPolynomial,
    pub roots: Vec<Complex64>,
    /// Real Weil roots `x = a + q/a`, one per conjugate pair.
    pub real_roots: Vec<f64>,
}

impl Sample {
    pub fn trivial(q: u64) -> Self {
        Sample { q, poly: IntegerPolynomial::one(), roots: Vec::new(), real_roots: Vec::new() }
    }

    pub fn g(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn certified(&self) -> WeilPolynomial {
        if self.roots.is_empty() {
            return WeilPolynomial::trivial(field(self.q));
        }
        validate_weil(field(self.q), &self.poly).unwrap_or_else(|e| panic!("{} rejected: {e}", self.poly))
    }

    pub fn times(&self, other: &Sample) -> Sample {
        assert_eq!(self.q, other.q);
        Sample {
            q: self.q,
            poly: &self.poly * &other.poly,
            roots: self.roots.iter().chain(&other.roots).copied().collect(),
            real_roots: self.real_roots.iter().chain(&other.real_roots).copied().collect(),
        }
    }
}

fn pair_roots(q: u64, x: f64) -> [Complex64; 2] {
    let disc = (4.0 * q as f64 - x * x).max(0.0).sqrt();
    [Complex64::new(x / 2.0, disc / 2.0), Complex64::new(x / 2.0, -disc / 2.0)]
}

/// `t^2 - a t + q`.
pub fn quadratic(q: u64, a: i64) -> Sample {
    assert!(a * a <= 4 * q as i64);
    let x = a as f64;
    Sample { q, poly: poly(&[q as i64, -a, 1]), roots: pair_roots(q, x).to_vec(), real_roots: vec![x] }
}

/// `t^4 + a t^3 + (b + 2q) t^2 + q a t + q^2`, whose real Weil polynomial
/// is `x^2 + a x + b`. `None` unless both roots of that quadratic lie in
/// `(-2 sqrt q, 2 sqrt q)` with a margin.
pub fn quartic(q: u64, a: i64, b: i64) -> Option<Sample> {
    let disc = (a * a - 4 * b) as f64;
    if disc < 1e-9 {
        return None;
    }
    let lim = 2.0 * (q as f64).sqrt() - 1e-9;
    let xs = [(-a as f64 + disc.sqrt()) / 2.0, (-a as f64 - disc.sqrt()) / 2.0];
    if xs.iter().any(|x| x.abs() >= lim) {
        return None;
    }
    let q = q as i64;
    let roots = xs.iter().flat_map(|&x| pair_roots(q as u64, x)).collect();
    Some(Sample {
        q: q as u64,
        poly: poly(&[q * q, q * a, b + 2 * q, a, 1]),
        roots,
        real_roots: xs.to_vec(),
    })
}

pub fn random_quadratic(rng: &mut impl Rng, q: u64) -> Sample {
    let traces = weil_traces(q);
    quadratic(q, traces[rng.gen_range(0..traces.len())])
}

pub fn random_quartic(rng: &mut impl Rng, q: u64) -> Sample {
    let s = 2 * (q as f64).sqrt() as i64 + 1;
    loop {
        let a = rng.gen_range(-2 * s..=2 * s);
        let b = rng.gen_range(-s * s..=s * s);
        if let Some(x) = quartic(q, a, b) {
            return x;
        }
    }
}

/// Product of random factors with total half-degree in `1..=max_g`.
pub fn random_weil(rng: &mut impl Rng, q: u64, max_g: usize) -> Sample {
    let target = rng.gen_range(1..=max_g);
    let mut s = Sample::trivial(q);
    while s.g() < target {
        let f = if target - s.g() >= 2 && rng.gen_bool(0.4) { random_quartic(rng, q) } else { random_quadratic(rng, q) };
        s = s.times(&f);
    }
    s
}

pub const SMALL_Q: &[u64] = &[2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25];

/// `floor(sqrt(n))`.
pub fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

pub fn valuation(x: &BigInt, ell: u64) -> i64 {
    let ell = BigInt::from(ell);
    let mut x = x.abs();
    let mut v = 0;
    while !x.is_zero() && (&x % &ell).is_zero() {
        x /= &ell;
        v += 1;
    }
    v
}

/// Two products drawn from a shared pool of factors, so that common roots
/// are frequent.
pub fn related_pair(rng: &mut impl Rng, q: u64, max_g: usize, max_d: usize) -> (Sample, Sample) {
    let pool: Vec<Sample> = (0..3)
        .map(|_| if rng.gen_bool(0.3) { random_quartic(rng, q) } else { random_quadratic(rng, q) })
        .collect();
    let mut build = |max: usize| {
        let target = rng.gen_range(1..=max);
        let mut s = Sample::trivial(q);
        while s.g() < target {
            let pick = &pool[rng.gen_range(0..pool.len())];
            s = if s.g() + pick.g() <= max { s.times(pick) } else { s.times(&random_quadratic(rng, q)) };
        }
        s
    };
    let a = build(max_g);
    let b = build(max_d);
    (a, b)
}

/// `x + y sqrt(q) >= 0`, exactly.
pub fn surd_nonneg(x: &BigInt, y: &BigInt, q: u64) -> bool {
    use num_traits::Signed;
    match (x.is_negative(), y.is_negative()) {
        (false, false) => true,
        (true, true) => false,
        (false, true) => x * x >= y * y * BigInt::from(q),
        (true, false) => y * y * BigInt::from(q) >= x * x,
    }
}

/// `(sqrt(q) + sign)^k` as `x + y sqrt(q)`.
pub fn surd_pow(q: u64, sign: i64, k: usize) -> (BigInt, BigInt) {
    let (mut x, mut y) = (BigInt::one(), BigInt::zero());
    let s = BigInt::from(sign);
    for _ in 0..k {
        let nx = &x * &s + &y * BigInt::from(q);
        let ny = &x + &y * &s;
        x = nx;
        y = ny;
    }
    (x, y)
}
