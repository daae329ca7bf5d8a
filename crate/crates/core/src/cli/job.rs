//! Job input schema.
//!
//! ```json
//! {
//!   "q": 5,
//!   "f_A": [5, -2, 1],
//!   "f_B": [5, -2, 1],
//!   "regulator": {"mode": "endomorphism", "trace_of_frobenius": 2},
//!   "ell_primes": [2, 3],
//!   "attestations": {"ns_torsion_free": true, "defect_of_smoothness_zero": true},
//!   "bases_certified_full": false
//! }
//! ```
//!
//! Polynomial coefficients are listed constant term first. The base is
//! given by exactly one of `f_A`, `curve_counts` (`{"g": 1, "counts": [4]}`)
//! or `"albanese": "trivial"`. The `validate` command also accepts a single
//! polynomial under `f`. An optional `command` key overrides the subcommand
//! for that job in batch runs.

use num_bigint::BigInt;
use serde_json::{Map, Value};

use super::json::{parse_bool, parse_int, parse_int_array, parse_poly, parse_u64};
use super::Command;
use crate::bsd::{Attestations, RegulatorInput};
use crate::error::{Error, Result};
use crate::exactpoly::IntegerPolynomial;
use crate::regulator::GramMatrix;
use crate::weil::{validate_weil, zeta_from_counts, PrimeFieldSize, WeilPolynomial};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseInput {
    Polynomial(IntegerPolynomial),
    CurveCounts { g: usize, counts: Vec<BigInt> },
    Trivial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JobInput {
    pub field: PrimeFieldSize,
    pub command: Option<Command>,
    pub f: Option<IntegerPolynomial>,
    pub base: Option<BaseInput>,
    pub f_b: Option<IntegerPolynomial>,
    pub regulator: RegulatorInput,
    pub ell_primes: Option<Vec<u64>>,
    pub attestations: Attestations,
    pub bases_certified_full: bool,
}

const KNOWN_KEYS: &[&str] = &[
    "q",
    "p",
    "n",
    "command",
    "f",
    "f_A",
    "curve_counts",
    "albanese",
    "f_B",
    "regulator",
    "ell_primes",
    "attestations",
    "bases_certified_full",
];

impl JobInput {
    pub fn from_json_str(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text)
            .map_err(|e| Error::InvalidInput(format!("malformed JSON: {e}")))?;
        Self::from_value(&value)
    }

    pub fn from_value(value: &Value) -> Result<Self> {
        let Value::Object(obj) = value else {
            return Err(Error::InvalidInput("job must be a JSON object".into()));
        };
        if let Some(unknown) = obj.keys().find(|k| !KNOWN_KEYS.contains(&k.as_str())) {
            return Err(Error::InvalidInput(format!("unknown key {unknown:?}")));
        }

        let q = parse_u64(obj.get("q").ok_or_else(|| missing("q"))?, "q")?;
        let field = match (obj.get("p"), obj.get("n")) {
            (None, None) => PrimeFieldSize::new(q)?,
            (Some(p), Some(n)) => {
                let n = u32::try_from(parse_u64(n, "n")?)
                    .map_err(|_| Error::InvalidField("n is too large".into()))?;
                PrimeFieldSize::from_parts(q, parse_u64(p, "p")?, n)?
            }
            _ => return Err(Error::InvalidInput("p and n must be given together".into())),
        };

        let command = obj
            .get("command")
            .map(|v| {
                let name = v
                    .as_str()
                    .ok_or_else(|| Error::InvalidInput("command must be a string".into()))?;
                Command::from_name(name)
                    .ok_or_else(|| Error::InvalidInput(format!("unknown command {name:?}")))
            })
            .transpose()?;

        let f = obj.get("f").map(|v| parse_poly(v, "f")).transpose()?;
        let base = parse_base(obj)?;
        let f_b = obj.get("f_B").map(|v| parse_poly(v, "f_B")).transpose()?;
        let regulator = match obj.get("regulator") {
            None => RegulatorInput::Absent,
            Some(v) => parse_regulator(v)?,
        };
        let ell_primes = obj
            .get("ell_primes")
            .map(|v| match v {
                Value::Array(items) => items.iter().map(|x| parse_u64(x, "ell_primes")).collect(),
                _ => Err(Error::InvalidInput("ell_primes must be an array".into())),
            })
            .transpose()?;
        let attestations = match obj.get("attestations") {
            None => Attestations::default(),
            Some(Value::Object(a)) => Attestations {
                ns_torsion_free: flag(a, "ns_torsion_free")?,
                defect_of_smoothness_zero: flag(a, "defect_of_smoothness_zero")?,
            },
            Some(_) => return Err(Error::InvalidInput("attestations must be an object".into())),
        };
        let bases_certified_full = match obj.get("bases_certified_full") {
            None => false,
            Some(v) => parse_bool(v, "bases_certified_full")?,
        };

        Ok(JobInput {
            field,
            command,
            f,
            base,
            f_b,
            regulator,
            ell_primes,
            attestations,
            bases_certified_full,
        })
    }

    /// Certified Albanese polynomial of the base.
    pub fn certified_base(&self) -> Result<WeilPolynomial> {
        match &self.base {
            None => Err(missing("f_A, curve_counts or albanese")),
            Some(BaseInput::Polynomial(p)) => validate_weil(self.field, p),
            Some(BaseInput::CurveCounts { g, counts }) => zeta_from_counts(self.field, *g, counts),
            Some(BaseInput::Trivial) => Ok(WeilPolynomial::trivial(self.field)),
        }
    }

    pub fn certified_fibre(&self) -> Result<WeilPolynomial> {
        validate_weil(self.field, self.f_b.as_ref().ok_or_else(|| missing("f_B"))?)
    }
}

fn missing(key: &str) -> Error {
    Error::InvalidInput(format!("missing {key}"))
}

fn flag(obj: &Map<String, Value>, key: &str) -> Result<bool> {
    obj.get(key).map_or(Ok(false), |v| parse_bool(v, key))
}

fn parse_base(obj: &Map<String, Value>) -> Result<Option<BaseInput>> {
    let mut sources = Vec::new();
    if let Some(v) = obj.get("f_A") {
        sources.push(BaseInput::Polynomial(parse_poly(v, "f_A")?));
    }
    if let Some(v) = obj.get("curve_counts") {
        let Value::Object(cc) = v else {
            return Err(Error::InvalidInput("curve_counts must be an object".into()));
        };
        let g = parse_u64(cc.get("g").ok_or_else(|| missing("curve_counts.g"))?, "curve_counts.g")?;
        let counts = parse_int_array(
            cc.get("counts").ok_or_else(|| missing("curve_counts.counts"))?,
            "curve_counts.counts",
        )?;
        let g = usize::try_from(g).map_err(|_| Error::InvalidInput("genus is too large".into()))?;
        sources.push(BaseInput::CurveCounts { g, counts });
    }
    if let Some(v) = obj.get("albanese") {
        if v.as_str() != Some("trivial") {
            return Err(Error::InvalidInput("albanese must be \"trivial\"".into()));
        }
        sources.push(BaseInput::Trivial);
    }
    if sources.len() > 1 {
        return Err(Error::InvalidInput(
            "give exactly one of f_A, curve_counts, albanese".into(),
        ));
    }
    Ok(sources.pop())
}

fn parse_regulator(v: &Value) -> Result<RegulatorInput> {
    let Value::Object(obj) = v else {
        return Err(Error::InvalidInput("regulator must be an object".into()));
    };
    match obj.get("mode").and_then(Value::as_str) {
        Some("endomorphism") => Ok(RegulatorInput::Endomorphism {
            trace_of_frobenius: obj
                .get("trace_of_frobenius")
                .map(|t| parse_int(t, "trace_of_frobenius"))
                .transpose()?,
        }),
        Some("gram") => {
            let Some(Value::Array(rows)) = obj.get("matrix") else {
                return Err(Error::InvalidInput("gram mode needs a matrix array".into()));
            };
            let entries = rows
                .iter()
                .enumerate()
                .map(|(i, row)| parse_int_array(row, &format!("matrix[{i}]")))
                .collect::<Result<Vec<_>>>()?;
            Ok(RegulatorInput::Gram(GramMatrix::new(entries)?))
        }
        _ => Err(Error::InvalidInput(
            "regulator.mode must be \"endomorphism\" or \"gram\"".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_full_job() {
        let job = JobInput::from_json_str(
            r#"{"q": 5, "p": 5, "n": 1, "f_A": [5, -2, 1], "f_B": ["5", -2, 1],
                "regulator": {"mode": "gram", "matrix": [[2, 2], [2, -6]]},
                "ell_primes": [2, 3], "attestations": {"ns_torsion_free": true},
                "bases_certified_full": true}"#,
        )
        .unwrap();
        assert_eq!(job.field.q(), 5);
        assert_eq!(job.f_b, Some(IntegerPolynomial::from_i64s(&[5, -2, 1])));
        assert!(matches!(job.regulator, RegulatorInput::Gram(ref m) if m.size() == 2));
        assert_eq!(job.ell_primes, Some(vec![2, 3]));
        assert!(job.attestations.ns_torsion_free);
        assert!(!job.attestations.defect_of_smoothness_zero);
        assert!(job.bases_certified_full);
    }

    #[test]
    fn base_sources_are_exclusive() {
        let err = JobInput::from_json_str(r#"{"q": 5, "f_A": [5, -2, 1], "albanese": "trivial"}"#);
        assert!(matches!(err, Err(Error::InvalidInput(_))));
        let job = JobInput::from_json_str(r#"{"q": 2, "curve_counts": {"g": 1, "counts": [4]}}"#).unwrap();
        assert_eq!(job.certified_base().unwrap().poly(), &IntegerPolynomial::from_i64s(&[2, 1, 1]));
        let job = JobInput::from_json_str(r#"{"q": 2, "albanese": "trivial"}"#).unwrap();
        assert!(job.certified_base().unwrap().is_trivial());
    }

    #[test]
    fn rejects_bad_fields() {
        assert!(matches!(JobInput::from_json_str(r#"{"q": 6}"#), Err(Error::InvalidField(_))));
        assert!(matches!(JobInput::from_json_str(r#"{"q": 9, "p": 3, "n": 1}"#), Err(Error::InvalidField(_))));
        assert!(JobInput::from_json_str(r#"{"q": 5, "bogus": 1}"#).is_err());
        assert!(JobInput::from_json_str(r#"{"q": 5, "command": "explode"}"#).is_err());
        assert!(JobInput::from_json_str("[1, 2]").is_err());
        assert!(JobInput::from_json_str("{").is_err());
    }
}
