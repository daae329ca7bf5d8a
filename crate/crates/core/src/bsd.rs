//! Assembly of the Birch and Swinnerton-Dyer data for `B x X / X`.
//!
//! Given the Albanese polynomial `f_A` of the base and the fibre polynomial
//! `f_B`, the report carries:
//!
//! * the rank, computed twice (vanishing order and root-pair count);
//! * the special product `SP = q^(gd) prod_(a_i != b_j) (1 - a_i/b_j)`,
//!   evaluated as `q^(gd) N~(1/q)` from the reduced L-numerator;
//! * the regulator `R = |det <alpha_i, beta_j>|` and `|Sha| = SP / R`;
//! * the torsion order `|B(F_q)| = f_B(1)`;
//! * the leading coefficient `c` and the identity
//!   `c * |Tor| = q^((1-g)d) * |Sha| * R`;
//! * the valuation identity `v_l(c) = v_l(Sha) + v_l(R) - v_l(Tor)` for each
//!   requested prime `l != p`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::RationalScalar;
use crate::homrank::hom_rank;
use crate::lfunction::{analytic_rank, build_lfunction, leading_coefficient, reduced_numerator};
use crate::regulator::{gram_matrix, regulator_det, FrobeniusOrder, GramMatrix};
use crate::weil::{is_prime, PrimeFieldSize, WeilPolynomial};

/// How the Hom lattice bases are supplied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RegulatorInput {
    /// `f_A = f_B = t^2 - a t + q` with bases `{1, pi}` of `Z[pi]` on both
    /// sides. The trace, when given, must match `f_B`.
    Endomorphism { trace_of_frobenius: Option<BigInt> },
    /// An explicit Gram matrix of trace pairings.
    Gram(GramMatrix),
    /// No bases; only valid when the rank is zero.
    Absent,
}

/// Hypotheses on `X` that the library cannot check, echoed into reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Attestations {
    pub ns_torsion_free: bool,
    pub defect_of_smoothness_zero: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ReportOptions {
    /// Primes for the valuation check; `None` means all primes `<= 100`
    /// other than the characteristic.
    pub ell_primes: Option<Vec<u64>>,
    pub attestations: Attestations,
    /// Whether the supplied bases are known to span the full Hom lattices.
    /// When false, `sha` is only relative to the supplied bases.
    pub bases_certified_full: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EllCheck {
    pub ell: u64,
    pub passed: bool,
}

/// `c * torsion` against `q^exponent * sha * regulator`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeadingCoefficientIdentity {
    pub q_exponent: i64,
    pub lhs: RationalScalar,
    pub rhs: RationalScalar,
}

impl LeadingCoefficientIdentity {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BsdReport {
    pub field: PrimeFieldSize,
    pub g: usize,
    pub d: usize,
    pub rank: usize,
    pub rho: usize,
    pub torsion: BigInt,
    pub special_product: RationalScalar,
    pub regulator: BigInt,
    pub sha: BigInt,
    pub c: RationalScalar,
    pub identity: LeadingCoefficientIdentity,
    pub ell_checks: Vec<EllCheck>,
    pub attestations: Attestations,
    pub bases_certified_full: bool,
}

impl BsdReport {
    /// `L^*` with `(log q)^rho` left symbolic, e.g. `4 (log 5)^2`.
    pub fn l_star(&self) -> String {
        match self.rho {
            0 => self.c.to_string(),
            1 => format!("{} (log {})", self.c, self.field.q()),
            r => format!("{} (log {})^{r}", self.c, self.field.q()),
        }
    }
}

/// `q^(gd) N~(1/q)`, where `N = (1 - qt)^rho N~` is the L-numerator.
pub fn special_product(fa: &WeilPolynomial, fb: &WeilPolynomial) -> Result<RationalScalar> {
    let l = build_lfunction(fa, fb)?;
    let rho = analytic_rank(&l)?;
    let reduced = reduced_numerator(&l, rho)?;
    let value = reduced.eval_rational(&l.critical_point());
    let sp = value * RationalScalar::from_integer(fa.field().q_pow(fa.g() * fb.g()));
    if !sp.is_positive() {
        return Err(Error::Internal(format!("special product {sp} is not positive")));
    }
    Ok(sp)
}

/// `f_B(1) = |B(F_q)|`, cross-checked against `q^d D(1/q)`.
pub fn torsion_order(fb: &WeilPolynomial) -> Result<BigInt> {
    let count = fb.point_count();
    let field = fb.field();
    let at = RationalScalar::new(BigInt::one(), field.q_big());
    let denominator_value = fb.poly().reversed().eval_rational(&at);
    let scaled = denominator_value * RationalScalar::from_integer(field.q_pow(fb.g()));
    if scaled != RationalScalar::from_integer(count.clone()) {
        return Err(Error::Internal(format!("q^d D(1/q) = {scaled} differs from f_B(1) = {count}")));
    }
    Ok(count)
}

/// `SP / R`, required to be a positive integer.
pub fn sha_order(sp: &RationalScalar, regulator: &BigInt) -> Result<BigInt> {
    let non_integral = || Error::NonIntegralSha { sp: sp.to_string(), regulator: regulator.to_string() };
    if !regulator.is_positive() || !sp.is_positive() {
        return Err(non_integral());
    }
    let quotient = sp / RationalScalar::from_integer(regulator.clone());
    if !quotient.is_integer() {
        return Err(non_integral());
    }
    Ok(quotient.to_integer())
}

fn resolve_gram(
    fa: &WeilPolynomial,
    fb: &WeilPolynomial,
    input: &RegulatorInput,
    rank: usize,
) -> Result<GramMatrix> {
    let gram = match input {
        RegulatorInput::Endomorphism { trace_of_frobenius } => {
            if fa.poly() != fb.poly() || fb.g() != 1 {
                return Err(Error::InvalidInput(
                    "endomorphism mode needs f_A = f_B of degree 2".into(),
                ));
            }
            let trace = -fb.poly().coeff(1);
            if let Some(given) = trace_of_frobenius {
                if *given != trace {
                    return Err(Error::InvalidInput(format!(
                        "trace_of_frobenius {given} does not match f_B (trace {trace})"
                    )));
                }
            }
            let order = FrobeniusOrder::new(trace, fb.field().q_big())?;
            let basis = order.standard_basis();
            gram_matrix(&basis, &basis)?
        }
        RegulatorInput::Gram(m) => m.clone(),
        RegulatorInput::Absent if rank == 0 => GramMatrix::default(),
        RegulatorInput::Absent => {
            return Err(Error::InvalidInput(format!(
                "rank is {rank}; a regulator stanza is required"
            )))
        }
    };
    if gram.size() != rank {
        return Err(Error::ReportInconsistent(format!(
            "Gram matrix is {0}x{0} but the rank is {rank}",
            gram.size()
        )));
    }
    Ok(gram)
}

fn valuation(n: &BigInt, ell: u64) -> u64 {
    let ell = BigInt::from(ell);
    let mut n = n.abs();
    let mut v = 0;
    if n.is_zero() {
        return 0;
    }
    loop {
        let (quot, rem) = n.div_rem(&ell);
        if !rem.is_zero() {
            return v;
        }
        n = quot;
        v += 1;
    }
}

fn rational_valuation(x: &RationalScalar, ell: u64) -> i64 {
    valuation(x.numer(), ell) as i64 - valuation(x.denom(), ell) as i64
}

/// `v_l(c) = v_l(Sha) + v_l(R) - v_l(Tor)`.
pub fn ell_adic_check(report: &BsdReport, ell: u64) -> Result<bool> {
    if !is_prime(ell) {
        return Err(Error::InvalidInput(format!("{ell} is not prime")));
    }
    if ell == report.field.p() {
        return Err(Error::PrecludedPrime(ell));
    }
    let lhs = rational_valuation(&report.c, ell);
    let rhs = valuation(&report.sha, ell) as i64 + valuation(&report.regulator, ell) as i64
        - valuation(&report.torsion, ell) as i64;
    Ok(lhs == rhs)
}

pub fn default_ell_primes(field: &PrimeFieldSize) -> Vec<u64> {
    (2..=100).filter(|&l| is_prime(l) && l != field.p()).collect()
}

pub fn bsd_report(
    fa: &WeilPolynomial,
    fb: &WeilPolynomial,
    regulator_input: &RegulatorInput,
    options: &ReportOptions,
) -> Result<BsdReport> {
    let field = *fa.field();
    field.ensure_same(fb.field())?;
    let (g, d) = (fa.g(), fb.g());

    let l = build_lfunction(fa, fb)?;
    let special = leading_coefficient(&l)?;
    let rank = hom_rank(fa, fb)?;
    if special.rho != rank {
        return Err(Error::RankMismatch { analytic: special.rho, algebraic: rank });
    }

    let torsion = torsion_order(fb)?;
    let sp = special_product(fa, fb)?;
    let gram = resolve_gram(fa, fb, regulator_input, rank)?;
    let regulator = regulator_det(&gram);
    let sha = sha_order(&sp, &regulator)?;
    if RationalScalar::from_integer(&sha * &regulator) != sp {
        return Err(Error::ReportInconsistent("SP differs from sha * R".into()));
    }

    let q_exponent = (d as i64) - (g * d) as i64;
    let q_power = if q_exponent >= 0 {
        RationalScalar::from_integer(field.q_pow(q_exponent as usize))
    } else {
        RationalScalar::new(BigInt::one(), field.q_pow(q_exponent.unsigned_abs() as usize))
    };
    let identity = LeadingCoefficientIdentity {
        q_exponent,
        lhs: &special.c * RationalScalar::from_integer(torsion.clone()),
        rhs: q_power * RationalScalar::from_integer(&sha * &regulator),
    };
    if !identity.holds() {
        return Err(Error::ReportInconsistent(format!(
            "c * |Tor| = {} but q^{q_exponent} * |Sha| * R = {}",
            identity.lhs, identity.rhs
        )));
    }

    let mut report = BsdReport {
        field,
        g,
        d,
        rank,
        rho: special.rho,
        torsion,
        special_product: sp,
        regulator,
        sha,
        c: special.c,
        identity,
        ell_checks: Vec::new(),
        attestations: options.attestations,
        bases_certified_full: options.bases_certified_full,
    };
    let ells = match &options.ell_primes {
        Some(list) => list.clone(),
        None => default_ell_primes(&field),
    };
    report.ell_checks = ells
        .into_iter()
        .map(|ell| Ok(EllCheck { ell, passed: ell_adic_check(&report, ell)? }))
        .collect::<Result<_>>()?;
    if let Some(failed) = report.ell_checks.iter().find(|c| !c.passed) {
        return Err(Error::ReportInconsistent(format!("valuation identity fails at l = {}", failed.ell)));
    }
    Ok(report)
}
