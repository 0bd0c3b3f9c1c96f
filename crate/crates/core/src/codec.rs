//! Input formats and stable JSON schemas.
//!
//! Polynomials travel as `{"rank": k, "terms": [{"exp": [...], "coef":
//! "decimal"}]}` with coefficients as decimal strings (arbitrary precision),
//! terms sorted lexicographically by exponent, duplicates rejected. Verdicts
//! and certificates carry `"schema": "gamma-cert/1"`. All parsers here are
//! total over untrusted bytes: they return errors, never panic.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, Result};
use crate::factor::Factorization;
use crate::gamma::{Automorphism, GammaResult, GammaWitness, WitnessSide};
use crate::knots::{AlexanderPolynomial, KnotInput};
use crate::laurent::{ExponentVector, LaurentPoly};
use crate::surgery::{
    ChainStep, GammaCertificate, SWElement, TorsionTerm, Verdict, VerdictKind,
};

/// Schema tag on verdict and certificate JSON.
pub const CERT_SCHEMA: &str = "gamma-cert/1";

const MAX_RANK: usize = 64;
const MAX_EXPONENT: i64 = 1 << 40;
const MAX_STRANDS: usize = 64;
const MAX_WORD_LEN: usize = 10_000;

// ---------------------------------------------------------------------------
// raw serde mirrors
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: Vec<i64>,
    coef: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    tor: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    rank: usize,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct UnitJson {
    sign: i8,
    monomial: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct FactorEntryJson {
    poly: PolyJson,
    mult: u32,
}

#[derive(Serialize, Deserialize)]
struct FactorizationJson {
    unit: UnitJson,
    factors: Vec<FactorEntryJson>,
}

#[derive(Serialize, Deserialize)]
struct AutomorphismJson {
    matrix: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
struct WitnessJson {
    n: i64,
    which: WitnessSide,
    multiplicity: u64,
}

#[derive(Serialize, Deserialize)]
struct GammaResultJson {
    value: u64,
    witnesses: Vec<WitnessJson>,
}

#[derive(Serialize, Deserialize)]
struct SwJson {
    rank: usize,
    labels: Option<Vec<String>>,
    torus: Option<usize>,
    terms: Vec<TermJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    convention: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct ChainStepJson {
    lhs: String,
    rhs: String,
    rule: String,
    lhs_value: Option<u64>,
    rhs_value: Option<u64>,
}

#[derive(Serialize, Deserialize)]
struct CertificateJson {
    alpha: PolyJson,
    alpha_pretty: String,
    gamma1: GammaResultJson,
    gamma2: GammaResultJson,
    chain: Vec<ChainStepJson>,
}

#[derive(Serialize, Deserialize)]
struct VerdictJson {
    schema: String,
    kind: String,
    reason: String,
    delta1: PolyJson,
    delta2: PolyJson,
    certificate: Option<CertificateJson>,
}

#[derive(Serialize, Deserialize)]
struct BraidJson {
    strands: usize,
    word: serde_json::Value,
}

#[derive(Serialize, Deserialize)]
struct KnotJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    seifert: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    torus: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    braid: Option<BraidJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    coeffs: Option<PolyJson>,
}

#[derive(Serialize, Deserialize)]
struct AlexanderJson {
    schema: String,
    convention: String,
    poly: PolyJson,
    pretty: String,
}

// ---------------------------------------------------------------------------
// polynomials
// ---------------------------------------------------------------------------

fn poly_to_raw(p: &LaurentPoly) -> PolyJson {
    PolyJson {
        rank: p.rank(),
        terms: p
            .terms()
            .map(|(e, c)| TermJson {
                exp: e.entries().to_vec(),
                coef: c.to_string(),
                tor: None,
            })
            .collect(),
    }
}

fn poly_from_raw(raw: &PolyJson) -> Result<LaurentPoly> {
    if raw.rank == 0 || raw.rank > MAX_RANK {
        return Err(ParseError::RankRange(raw.rank).into());
    }
    let mut pairs: Vec<(ExponentVector, BigInt)> = Vec::with_capacity(raw.terms.len());
    let mut prev: Option<&Vec<i64>> = None;
    for term in &raw.terms {
        if term.exp.len() != raw.rank {
            return Err(ParseError::WrongExponentLength {
                len: term.exp.len(),
                rank: raw.rank,
            }
            .into());
        }
        for &e in &term.exp {
            if e.abs() > MAX_EXPONENT {
                return Err(ParseError::ExponentRange(e).into());
            }
        }
        if let Some(p) = prev {
            match p.cmp(&term.exp) {
                std::cmp::Ordering::Less => {}
                std::cmp::Ordering::Equal => {
                    return Err(ParseError::DuplicateExponent.into());
                }
                std::cmp::Ordering::Greater => {
                    return Err(ParseError::UnsortedTerms.into());
                }
            }
        }
        prev = Some(&term.exp);
        let coef = parse_coef(&term.coef)?;
        pairs.push((ExponentVector::new(term.exp.clone()), coef));
    }
    LaurentPoly::from_terms(raw.rank, pairs)
}

fn parse_coef(s: &str) -> Result<BigInt> {
    let c = BigInt::from_str(s).map_err(|_| ParseError::BadCoefficient(s.to_string()))?;
    if c.is_zero() {
        return Err(ParseError::ZeroCoefficient.into());
    }
    Ok(c)
}

pub fn poly_to_json_string(p: &LaurentPoly) -> String {
    serde_json::to_string_pretty(&poly_to_raw(p)).expect("poly serialization cannot fail")
}

pub fn parse_poly_json(s: &str) -> Result<LaurentPoly> {
    let raw: PolyJson = serde_json::from_str(s).map_err(ParseError::Json)?;
    poly_from_raw(&raw)
}

// ---------------------------------------------------------------------------
// factorizations
// ---------------------------------------------------------------------------

pub fn factorization_to_json_string(f: &Factorization) -> String {
    let raw = FactorizationJson {
        unit: UnitJson {
            sign: f.unit().sign(),
            monomial: f.unit().monomial().entries().to_vec(),
        },
        factors: f
            .factors()
            .iter()
            .map(|e| FactorEntryJson {
                poly: poly_to_raw(&e.poly),
                mult: e.multiplicity,
            })
            .collect(),
    };
    serde_json::to_string_pretty(&raw).expect("factorization serialization cannot fail")
}

// ---------------------------------------------------------------------------
// automorphisms
// ---------------------------------------------------------------------------

pub fn parse_automorphism_json(s: &str) -> Result<Automorphism> {
    let raw: AutomorphismJson = serde_json::from_str(s).map_err(ParseError::Json)?;
    if raw.matrix.len() > MAX_RANK {
        return Err(ParseError::RankRange(raw.matrix.len()).into());
    }
    Automorphism::new(raw.matrix)
}

pub fn automorphism_to_json_string(phi: &Automorphism) -> String {
    let raw = AutomorphismJson {
        matrix: phi.matrix().to_vec(),
    };
    serde_json::to_string_pretty(&raw).expect("matrix serialization cannot fail")
}

// ---------------------------------------------------------------------------
// gamma results
// ---------------------------------------------------------------------------

fn gamma_to_raw(g: &GammaResult) -> GammaResultJson {
    GammaResultJson {
        value: g.value,
        witnesses: g
            .witnesses
            .iter()
            .map(|w| WitnessJson {
                n: w.n,
                which: w.side,
                multiplicity: w.multiplicity,
            })
            .collect(),
    }
}

fn gamma_from_raw(raw: &GammaResultJson) -> GammaResult {
    GammaResult {
        value: raw.value,
        witnesses: raw
            .witnesses
            .iter()
            .map(|w| GammaWitness {
                n: w.n,
                side: w.which,
                multiplicity: w.multiplicity,
            })
            .collect(),
    }
}

pub fn gamma_result_to_json_string(g: &GammaResult) -> String {
    serde_json::to_string_pretty(&gamma_to_raw(g)).expect("gamma serialization cannot fail")
}

// ---------------------------------------------------------------------------
// SW elements
// ---------------------------------------------------------------------------

/// Parses an SW element. Terms carrying a `tor` label are funneled through
/// the torsion quotient (merging equal free parts); without torsion labels
/// the strict polynomial term rules apply.
pub fn parse_sw_json(s: &str) -> Result<SWElement> {
    let raw: SwJson = serde_json::from_str(s).map_err(ParseError::Json)?;
    if raw.rank == 0 || raw.rank > MAX_RANK {
        return Err(ParseError::RankRange(raw.rank).into());
    }
    let labels = match raw.labels {
        Some(l) => {
            if l.len() != raw.rank {
                return Err(Error::LabelCountMismatch {
                    labels: l.len(),
                    rank: raw.rank,
                });
            }
            l
        }
        None => (1..=raw.rank).map(|i| format!("h{i}")).collect(),
    };

    let has_torsion = raw.terms.iter().any(|t| t.tor.is_some());
    if has_torsion {
        let mut terms = Vec::with_capacity(raw.terms.len());
        for t in &raw.terms {
            if t.exp.len() != raw.rank {
                return Err(ParseError::WrongExponentLength {
                    len: t.exp.len(),
                    rank: raw.rank,
                }
                .into());
            }
            for &e in &t.exp {
                if e.abs() > MAX_EXPONENT {
                    return Err(ParseError::ExponentRange(e).into());
                }
            }
            terms.push(TorsionTerm {
                exp: ExponentVector::new(t.exp.clone()),
                torsion: t.tor.clone().unwrap_or_else(|| "0".to_string()),
                coef: parse_coef(&t.coef)?,
            });
        }
        crate::surgery::torsion_quotient(raw.rank, &terms, labels, raw.torus)
    } else {
        let poly = poly_from_raw(&PolyJson {
            rank: raw.rank,
            terms: raw.terms,
        })?;
        SWElement::new(poly, labels, raw.torus)
    }
}

pub fn sw_to_json_string(sw: &SWElement) -> String {
    let raw = SwJson {
        rank: sw.rank(),
        labels: Some(sw.basis_labels().to_vec()),
        torus: sw.torus_index(),
        terms: poly_to_raw(sw.poly()).terms,
        convention: Some("delta normalized bar-fixed with value 1 at t=1".to_string()),
    };
    serde_json::to_string_pretty(&raw).expect("sw serialization cannot fail")
}

// ---------------------------------------------------------------------------
// verdicts and certificates
// ---------------------------------------------------------------------------

fn certificate_to_raw(c: &GammaCertificate) -> CertificateJson {
    CertificateJson {
        alpha: poly_to_raw(&c.alpha),
        alpha_pretty: c.alpha.to_string(),
        gamma1: gamma_to_raw(&c.gamma_1),
        gamma2: gamma_to_raw(&c.gamma_2),
        chain: c
            .chain
            .iter()
            .map(|s| ChainStepJson {
                lhs: s.lhs.clone(),
                rhs: s.rhs.clone(),
                rule: s.rule.clone(),
                lhs_value: s.lhs_value,
                rhs_value: s.rhs_value,
            })
            .collect(),
    }
}

fn certificate_from_raw(raw: &CertificateJson) -> Result<GammaCertificate> {
    Ok(GammaCertificate {
        alpha: poly_from_raw(&raw.alpha)?,
        gamma_1: gamma_from_raw(&raw.gamma1),
        gamma_2: gamma_from_raw(&raw.gamma2),
        chain: raw
            .chain
            .iter()
            .map(|s| ChainStep {
                lhs: s.lhs.clone(),
                rhs: s.rhs.clone(),
                rule: s.rule.clone(),
                lhs_value: s.lhs_value,
                rhs_value: s.rhs_value,
            })
            .collect(),
    })
}

pub fn verdict_to_json_string(v: &Verdict) -> String {
    let raw = VerdictJson {
        schema: CERT_SCHEMA.to_string(),
        kind: v.kind.as_str().to_string(),
        reason: v.reason.clone(),
        delta1: poly_to_raw(v.delta_1.poly()),
        delta2: poly_to_raw(v.delta_2.poly()),
        certificate: v.certificate.as_ref().map(certificate_to_raw),
    };
    serde_json::to_string_pretty(&raw).expect("verdict serialization cannot fail")
}

/// Accepts either a full verdict document (`"schema": "gamma-cert/1"`) or a
/// bare certificate object.
pub fn parse_certificate_json(s: &str) -> Result<GammaCertificate> {
    if let Ok(v) = serde_json::from_str::<VerdictJson>(s) {
        if v.schema != CERT_SCHEMA {
            return Err(ParseError::UnknownSchema(v.schema).into());
        }
        let cert = v
            .certificate
            .ok_or_else(|| ParseError::Invalid("verdict carries no certificate".to_string()))?;
        return certificate_from_raw(&cert);
    }
    let raw: CertificateJson = serde_json::from_str(s).map_err(ParseError::Json)?;
    certificate_from_raw(&raw)
}

// ---------------------------------------------------------------------------
// Alexander polynomial output
// ---------------------------------------------------------------------------

pub fn alexander_to_json_string(d: &AlexanderPolynomial) -> String {
    let raw = AlexanderJson {
        schema: "alexander/1".to_string(),
        convention: "bar-fixed, value 1 at t=1".to_string(),
        poly: poly_to_raw(d.poly()),
        pretty: d.to_string(),
    };
    serde_json::to_string_pretty(&raw).expect("alexander serialization cannot fail")
}

// ---------------------------------------------------------------------------
// knot inputs: braid words, spec strings, knot files
// ---------------------------------------------------------------------------

/// Braid word text form: whitespace-separated signed generator indices,
/// e.g. `1 1 1` or `1 -2 1 -2`. Zero indices are rejected.
pub fn parse_braid_word(s: &str) -> Result<Vec<i64>> {
    let mut word = Vec::new();
    for token in s.split_whitespace() {
        let g: i64 = token
            .parse()
            .map_err(|_| ParseError::BadBraidToken(token.to_string()))?;
        if g == 0 {
            return Err(ParseError::ZeroBraidIndex.into());
        }
        word.push(g);
        if word.len() > MAX_WORD_LEN {
            return Err(ParseError::Invalid(format!(
                "braid word longer than {MAX_WORD_LEN}"
            ))
            .into());
        }
    }
    Ok(word)
}

/// Parsed knot spec `kind:payload`; file-backed kinds keep their path until
/// the caller resolves them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KnotSpec {
    Torus(i64, i64),
    Braid { strands: usize, word: Vec<i64> },
    SeifertPath(String),
    CoeffsPath(String),
}

impl KnotSpec {
    /// Resolves file-backed specs through `read`, which maps a path to file
    /// contents.
    pub fn resolve(&self, read: &mut dyn FnMut(&str) -> Result<String>) -> Result<KnotInput> {
        match self {
            KnotSpec::Torus(p, q) => Ok(KnotInput::Torus(*p, *q)),
            KnotSpec::Braid { strands, word } => Ok(KnotInput::Braid {
                strands: *strands,
                word: word.clone(),
            }),
            KnotSpec::SeifertPath(path) => parse_knot_json(&read(path)?),
            KnotSpec::CoeffsPath(path) => Ok(KnotInput::Coefficients(parse_poly_json(&read(path)?)?)),
        }
    }
}

/// Mini-grammar `torus:p,q | braid:n:"word" | seifert:path | coeffs:path`.
pub fn parse_knot_spec(s: &str) -> Result<KnotSpec> {
    let (kind, payload) = s
        .split_once(':')
        .ok_or_else(|| ParseError::BadSpec(format!("missing ':' in {s:?}")))?;
    match kind {
        "torus" => {
            let (p, q) = payload
                .split_once(',')
                .ok_or_else(|| ParseError::BadSpec(format!("torus payload {payload:?}")))?;
            let p: i64 = p
                .trim()
                .parse()
                .map_err(|_| ParseError::BadSpec(format!("torus p {p:?}")))?;
            let q: i64 = q
                .trim()
                .parse()
                .map_err(|_| ParseError::BadSpec(format!("torus q {q:?}")))?;
            Ok(KnotSpec::Torus(p, q))
        }
        "braid" => {
            let (n, word) = payload
                .split_once(':')
                .ok_or_else(|| ParseError::BadSpec(format!("braid payload {payload:?}")))?;
            let strands: usize = n
                .trim()
                .parse()
                .map_err(|_| ParseError::BadSpec(format!("strand count {n:?}")))?;
            if !(2..=MAX_STRANDS).contains(&strands) {
                return Err(ParseError::BadSpec(format!(
                    "strand count {strands} outside 2..={MAX_STRANDS}"
                ))
                .into());
            }
            let word = word.trim();
            let word = word
                .strip_prefix('"')
                .and_then(|w| w.strip_suffix('"'))
                .unwrap_or(word);
            Ok(KnotSpec::Braid {
                strands,
                word: parse_braid_word(word)?,
            })
        }
        "seifert" => {
            if payload.is_empty() {
                return Err(ParseError::BadSpec("empty seifert path".to_string()).into());
            }
            Ok(KnotSpec::SeifertPath(payload.to_string()))
        }
        "coeffs" => {
            if payload.is_empty() {
                return Err(ParseError::BadSpec("empty coeffs path".to_string()).into());
            }
            Ok(KnotSpec::CoeffsPath(payload.to_string()))
        }
        other => Err(ParseError::UnknownSpecKind(other.to_string()).into()),
    }
}

/// Knot file: a JSON object with exactly one of `seifert`, `torus`, `braid`,
/// `coeffs`.
pub fn parse_knot_json(s: &str) -> Result<KnotInput> {
    let raw: KnotJson = serde_json::from_str(s).map_err(ParseError::Json)?;
    let given = [
        raw.seifert.is_some(),
        raw.torus.is_some(),
        raw.braid.is_some(),
        raw.coeffs.is_some(),
    ]
    .iter()
    .filter(|b| **b)
    .count();
    if given != 1 {
        return Err(ParseError::Invalid(
            "knot JSON needs exactly one of seifert|torus|braid|coeffs".to_string(),
        )
        .into());
    }
    if let Some(seifert) = raw.seifert {
        if seifert.len() > MAX_RANK {
            return Err(ParseError::RankRange(seifert.len()).into());
        }
        return Ok(KnotInput::Seifert(seifert));
    }
    if let Some(torus) = raw.torus {
        if torus.len() != 2 {
            return Err(ParseError::Invalid("torus needs [p, q]".to_string()).into());
        }
        return Ok(KnotInput::Torus(torus[0], torus[1]));
    }
    if let Some(braid) = raw.braid {
        if !(2..=MAX_STRANDS).contains(&braid.strands) {
            return Err(ParseError::Invalid(format!(
                "strand count {} outside 2..={MAX_STRANDS}",
                braid.strands
            ))
            .into());
        }
        let word = match &braid.word {
            serde_json::Value::String(s) => parse_braid_word(s)?,
            serde_json::Value::Array(items) => {
                let mut word = Vec::with_capacity(items.len());
                for item in items {
                    let g = item
                        .as_i64()
                        .ok_or_else(|| ParseError::BadBraidToken(item.to_string()))?;
                    if g == 0 {
                        return Err(ParseError::ZeroBraidIndex.into());
                    }
                    word.push(g);
                }
                if word.len() > MAX_WORD_LEN {
                    return Err(ParseError::Invalid(format!(
                        "braid word longer than {MAX_WORD_LEN}"
                    ))
                    .into());
                }
                word
            }
            other => return Err(ParseError::BadBraidToken(other.to_string()).into()),
        };
        return Ok(KnotInput::Braid {
            strands: braid.strands,
            word,
        });
    }
    let coeffs = raw.coeffs.expect("counted above");
    Ok(KnotInput::Coefficients(poly_from_raw(&coeffs)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_roundtrip() {
        let p = LaurentPoly::uni(&[(2, 1), (0, -3), (-1, 7)]);
        let s = poly_to_json_string(&p);
        assert_eq!(parse_poly_json(&s).unwrap(), p);
    }

    #[test]
    fn poly_strictness() {
        // unsorted
        let s = r#"{"rank":1,"terms":[{"exp":[1],"coef":"1"},{"exp":[0],"coef":"1"}]}"#;
        assert!(matches!(
            parse_poly_json(s),
            Err(Error::Parse(ParseError::UnsortedTerms))
        ));
        // duplicate
        let s = r#"{"rank":1,"terms":[{"exp":[0],"coef":"1"},{"exp":[0],"coef":"2"}]}"#;
        assert!(matches!(
            parse_poly_json(s),
            Err(Error::Parse(ParseError::DuplicateExponent))
        ));
        // zero coefficient
        let s = r#"{"rank":1,"terms":[{"exp":[0],"coef":"0"}]}"#;
        assert!(matches!(
            parse_poly_json(s),
            Err(Error::Parse(ParseError::ZeroCoefficient))
        ));
        // wrong exponent length
        let s = r#"{"rank":2,"terms":[{"exp":[0],"coef":"1"}]}"#;
        assert!(matches!(
            parse_poly_json(s),
            Err(Error::Parse(ParseError::WrongExponentLength { .. }))
        ));
        // bad coefficient
        let s = r#"{"rank":1,"terms":[{"exp":[0],"coef":"x"}]}"#;
        assert!(matches!(
            parse_poly_json(s),
            Err(Error::Parse(ParseError::BadCoefficient(_)))
        ));
        // rank 0
        let s = r#"{"rank":0,"terms":[]}"#;
        assert!(parse_poly_json(s).is_err());
    }

    #[test]
    fn braid_word_parsing() {
        assert_eq!(parse_braid_word("1 1 1").unwrap(), vec![1, 1, 1]);
        assert_eq!(parse_braid_word("1 -2 1 -2").unwrap(), vec![1, -2, 1, -2]);
        assert_eq!(parse_braid_word("").unwrap(), Vec::<i64>::new());
        assert!(parse_braid_word("1 0 1").is_err());
        assert!(parse_braid_word("1 x").is_err());
    }

    #[test]
    fn knot_spec_parsing() {
        assert_eq!(parse_knot_spec("torus:2,3").unwrap(), KnotSpec::Torus(2, 3));
        assert_eq!(
            parse_knot_spec("braid:3:\"1 -2 1 -2\"").unwrap(),
            KnotSpec::Braid {
                strands: 3,
                word: vec![1, -2, 1, -2]
            }
        );
        assert_eq!(
            parse_knot_spec("braid:2:1 1 1").unwrap(),
            KnotSpec::Braid {
                strands: 2,
                word: vec![1, 1, 1]
            }
        );
        assert_eq!(
            parse_knot_spec("seifert:/tmp/v.json").unwrap(),
            KnotSpec::SeifertPath("/tmp/v.json".to_string())
        );
        assert!(parse_knot_spec("nope:1").is_err());
        assert!(parse_knot_spec("torus").is_err());
        assert!(parse_knot_spec("braid:1:1").is_err());
    }

    #[test]
    fn knot_json_forms() {
        let k = parse_knot_json(r#"{"seifert":[[-1,1],[0,-1]]}"#).unwrap();
        assert_eq!(k, KnotInput::Seifert(vec![vec![-1, 1], vec![0, -1]]));

        let k = parse_knot_json(r#"{"torus":[2,5]}"#).unwrap();
        assert_eq!(k, KnotInput::Torus(2, 5));

        let k = parse_knot_json(r#"{"braid":{"strands":3,"word":"1 -2 1 -2"}}"#).unwrap();
        assert_eq!(
            k,
            KnotInput::Braid {
                strands: 3,
                word: vec![1, -2, 1, -2]
            }
        );

        let k = parse_knot_json(r#"{"braid":{"strands":2,"word":[1,1,1]}}"#).unwrap();
        assert_eq!(
            k,
            KnotInput::Braid {
                strands: 2,
                word: vec![1, 1, 1]
            }
        );

        assert!(parse_knot_json(r#"{}"#).is_err());
        assert!(parse_knot_json(r#"{"torus":[2,5],"seifert":[]}"#).is_err());
    }

    #[test]
    fn sw_roundtrip_and_torsion() {
        let sw = parse_sw_json(
            r#"{"rank":2,"labels":["g","T"],"torus":1,
                "terms":[{"exp":[-1,0],"coef":"1"},{"exp":[1,0],"coef":"1"}]}"#,
        )
        .unwrap();
        assert_eq!(sw.basis_labels(), ["g", "T"]);
        assert_eq!(sw.torus_index(), Some(1));
        let s = sw_to_json_string(&sw);
        assert_eq!(parse_sw_json(&s).unwrap(), sw);

        // torsion terms merge
        let sw = parse_sw_json(
            r#"{"rank":1,"labels":["h"],"torus":null,
                "terms":[{"exp":[1],"coef":"1","tor":"tau"},{"exp":[1],"coef":"1"}]}"#,
        )
        .unwrap();
        assert_eq!(sw.poly().coeff(&ExponentVector::new(vec![1])), BigInt::from(2));

        // zero image errors
        assert!(parse_sw_json(
            r#"{"rank":1,"labels":["h"],"torus":null,
                "terms":[{"exp":[1],"coef":"1","tor":"tau"},{"exp":[1],"coef":"-1"}]}"#,
        )
        .is_err());
    }

    #[test]
    fn verdict_roundtrip() {
        use crate::surgery::distinguish;
        let v = distinguish(
            &KnotInput::Torus(2, 3),
            &KnotInput::Torus(2, 5),
            None,
        )
        .unwrap();
        let s = verdict_to_json_string(&v);
        assert!(s.contains("gamma-cert/1"));
        let cert = parse_certificate_json(&s).unwrap();
        assert_eq!(cert, v.certificate.unwrap());
    }

}
