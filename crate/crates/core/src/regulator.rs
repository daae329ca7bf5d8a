//! Trace pairings on Hom lattices and the regulator `|det <alpha_i, beta_j>|`.
//!
//! The native model is the order `Z[pi]` with `pi^2 = a pi - q`, the
//! endomorphism lattice generated by Frobenius on an elliptic curve with
//! trace `a`. Other lattices enter as explicit Gram matrices.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The order `Z[pi]`, `pi^2 = trace * pi - q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FrobeniusOrder {
    trace: BigInt,
    q: BigInt,
}

impl FrobeniusOrder {
    /// Requires the Weil bound `a^2 <= 4q`.
    pub fn new(trace: BigInt, q: BigInt) -> Result<Self> {
        if !q.is_positive() {
            return Err(Error::InvalidInput(format!("q = {q} is not positive")));
        }
        if &trace * &trace > BigInt::from(4) * &q {
            return Err(Error::InvalidInput(format!("trace {trace} violates a^2 <= 4q for q = {q}")));
        }
        Ok(FrobeniusOrder { trace, q })
    }

    pub fn trace_of_frobenius(&self) -> &BigInt {
        &self.trace
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn element(&self, x: impl Into<BigInt>, y: impl Into<BigInt>) -> FrobeniusOrderElement {
        FrobeniusOrderElement { x: x.into(), y: y.into(), ambient: self.clone() }
    }

    pub fn one(&self) -> FrobeniusOrderElement {
        self.element(1, 0)
    }

    pub fn pi(&self) -> FrobeniusOrderElement {
        self.element(0, 1)
    }

    /// `{1, pi}`
    pub fn standard_basis(&self) -> Vec<FrobeniusOrderElement> {
        vec![self.one(), self.pi()]
    }
}

/// `x + y pi` in a [`FrobeniusOrder`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FrobeniusOrderElement {
    pub x: BigInt,
    pub y: BigInt,
    ambient: FrobeniusOrder,
}

impl FrobeniusOrderElement {
    pub fn ambient(&self) -> &FrobeniusOrder {
        &self.ambient
    }

    fn same_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient == other.ambient {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_ambient(other)?;
        let FrobeniusOrder { trace, q } = &self.ambient;
        let yy = &self.y * &other.y;
        let x = &self.x * &other.x - q * &yy;
        let y = &self.x * &other.y + &other.x * &self.y + trace * &yy;
        Ok(FrobeniusOrderElement { x, y, ambient: self.ambient.clone() })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_ambient(other)?;
        Ok(FrobeniusOrderElement {
            x: &self.x + &other.x,
            y: &self.y + &other.y,
            ambient: self.ambient.clone(),
        })
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        FrobeniusOrderElement { x: &self.x * k, y: &self.y * k, ambient: self.ambient.clone() }
    }

    /// Trace of the endomorphism on `H^1`: `Tr(x + y pi) = 2x + a y`.
    pub fn trace(&self) -> BigInt {
        BigInt::from(2) * &self.x + &self.ambient.trace * &self.y
    }
}

impl fmt::Display for FrobeniusOrderElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}pi", self.x, self.y)
    }
}

/// `Tr(beta * alpha)`.
pub fn trace_pairing(alpha: &FrobeniusOrderElement, beta: &FrobeniusOrderElement) -> Result<BigInt> {
    Ok(beta.mul(alpha)?.trace())
}

/// Square integer matrix of trace pairings, possibly `0 x 0`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GramMatrix {
    entries: Vec<Vec<BigInt>>,
}

impl GramMatrix {
    pub fn new(entries: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = entries.len();
        if let Some(row) = entries.iter().find(|row| row.len() != n) {
            return Err(Error::InvalidInput(format!(
                "Gram matrix row of length {} in a {n}-row matrix",
                row.len()
            )));
        }
        Ok(GramMatrix { entries })
    }

    pub fn from_i64s(rows: &[&[i64]]) -> Result<Self> {
        Self::new(rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect())
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<BigInt>] {
        &self.entries
    }
}

/// Entry `(i, j)` is `Tr(beta_j alpha_i)`.
pub fn gram_matrix(
    left_basis: &[FrobeniusOrderElement],
    right_basis: &[FrobeniusOrderElement],
) -> Result<GramMatrix> {
    if left_basis.len() != right_basis.len() {
        return Err(Error::LengthMismatch(left_basis.len(), right_basis.len()));
    }
    let entries = left_basis
        .iter()
        .map(|alpha| {
            right_basis
                .iter()
                .map(|beta| trace_pairing(alpha, beta))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GramMatrix { entries })
}

/// Signed determinant by Bareiss fraction-free elimination.
pub fn determinant(m: &GramMatrix) -> BigInt {
    let n = m.size();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.entries.clone();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// `R = |det m|`; the empty matrix gives 1.
pub fn regulator_det(m: &GramMatrix) -> BigInt {
    determinant(m).abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(a: i64, q: i64) -> FrobeniusOrder {
        FrobeniusOrder::new(a.into(), q.into()).unwrap()
    }

    #[test]
    fn pairing_examples() {
        let o = order(2, 5);
        assert_eq!(trace_pairing(&o.one(), &o.one()).unwrap(), 2.into());
        assert_eq!(trace_pairing(&o.pi(), &o.one()).unwrap(), 2.into());
        assert_eq!(trace_pairing(&o.pi(), &o.pi()).unwrap(), (-6).into());
    }

    #[test]
    fn ambient_checks() {
        let a = order(2, 5);
        let b = order(1, 5);
        assert!(matches!(trace_pairing(&a.pi(), &b.pi()), Err(Error::AmbientMismatch)));
        assert!(FrobeniusOrder::new(5.into(), 5.into()).is_err());
    }

    #[test]
    fn gram_examples() {
        let o = order(2, 5);
        let basis = o.standard_basis();
        assert_eq!(gram_matrix(&basis, &basis).unwrap(), GramMatrix::from_i64s(&[&[2, 2], &[2, -6]]).unwrap());
        assert_eq!(gram_matrix(&[], &[]).unwrap().size(), 0);
        assert_eq!(gram_matrix(&[o.one()], &[o.pi()]).unwrap(), GramMatrix::from_i64s(&[&[2]]).unwrap());
        assert!(matches!(gram_matrix(&basis, &[o.one()]), Err(Error::LengthMismatch(2, 1))));
    }

    #[test]
    fn regulator_examples() {
        assert_eq!(regulator_det(&GramMatrix::from_i64s(&[&[2, 2], &[2, -6]]).unwrap()), 16.into());
        assert_eq!(regulator_det(&GramMatrix::default()), 1.into());
        assert_eq!(regulator_det(&GramMatrix::from_i64s(&[&[5]]).unwrap()), 5.into());
    }

    #[test]
    fn determinant_with_pivoting() {
        let m = GramMatrix::from_i64s(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]]).unwrap();
        // cofactor expansion: 0*(0+9) - 1*(8-12) + 2*(-3-0) = -2
        assert_eq!(determinant(&m), (-2).into());
        let singular = GramMatrix::from_i64s(&[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(determinant(&singular), BigInt::zero());
    }

    #[test]
    fn ragged_matrix_rejected() {
        assert!(GramMatrix::new(vec![vec![1.into(), 2.into()], vec![3.into()]]).is_err());
    }
}
