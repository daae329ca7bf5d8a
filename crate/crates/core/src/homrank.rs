//! Rank of `Hom_k(A, B)` from characteristic polynomials alone.

use crate::error::{Error, Result};
use crate::exactpoly::{gcd_subresultant, squarefree_decomposition};
use crate::lfunction::{analytic_rank, build_lfunction};
use crate::weil::WeilPolynomial;

/// Analytic and algebraic ranks, known to agree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RankCertificate {
    pub analytic: usize,
    pub algebraic: usize,
}

/// Number of root pairs `(i, j)` with `a_i = b_j`, with multiplicity.
///
/// Each squarefree component has simple roots, so a common root of the
/// multiplicity-`k` part of `fa` and the multiplicity-`m` part of `fb`
/// contributes `k * m` pairs.
pub fn hom_rank(fa: &WeilPolynomial, fb: &WeilPolynomial) -> Result<usize> {
    fa.field().ensure_same(fb.field())?;
    let parts_a = squarefree_decomposition(fa.poly())?;
    let parts_b = squarefree_decomposition(fb.poly())?;
    let mut rank = 0;
    for (k, a) in &parts_a {
        for (m, b) in &parts_b {
            let shared = gcd_subresultant(a, b).degree().unwrap_or(0);
            rank += (*k as usize) * (*m as usize) * shared;
        }
    }
    Ok(rank)
}

pub fn rank_consistency_check(fa: &WeilPolynomial, fb: &WeilPolynomial) -> Result<RankCertificate> {
    let analytic = analytic_rank(&build_lfunction(fa, fb)?)?;
    let algebraic = hom_rank(fa, fb)?;
    if analytic != algebraic {
        return Err(Error::RankMismatch { analytic, algebraic });
    }
    Ok(RankCertificate { analytic, algebraic })
}
