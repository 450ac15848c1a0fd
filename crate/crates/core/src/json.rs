//! JSON documents for spectra, fields, series and every report.
//!
//! Component indices are 1-based and rationals are strings `"p"` or
//! `"p/q"`. Every report type implements both `Serialize` and
//! `Deserialize`, so emitted documents re-parse under the same schema.

use std::collections::BTreeMap;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::centralizer::{
    CentralizerResult, NormalizerPair, NormalizerReduction, NormalizerResult,
};
use crate::error::{Error, Result};
use crate::field::{MultiIndex, PolySeries, PolyVectorField, Polynomial, Truncation};
use crate::invariants::{
    InvariantAlgebra, ModuleCheck, ReducedField, TrivialityCertificate, Verdict,
};
use crate::jacobi::{LadderStatus, MultiplierLadder, Obstruction, ObstructionStatus};
use crate::linalg::{format_rational, parse_rational, RatMatrix, Rational};
use crate::resonance::ResonanceSet;
use crate::spectrum::{Dim3Classification, EigenSpectrum};

fn rats(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn parse_rats(v: &[String]) -> Result<Vec<Rational>> {
    v.iter().map(|s| parse_rational(s)).collect()
}

fn matrix_json(m: &RatMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| rats(m.row(i))).collect()
}

/// Parses a document, mapping serde failures to `Error::Parse`.
pub fn from_str<T: for<'de> Deserialize<'de>>(s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

/// Pretty JSON with a trailing newline.
pub fn to_string<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report types serialize");
    s.push('\n');
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumJson {
    pub n: usize,
    pub q: usize,
    pub lambda: Vec<Vec<String>>,
    #[serde(default)]
    pub nilpotent: Vec<(usize, usize, String)>,
}

impl SpectrumJson {
    pub fn from_spectrum(s: &EigenSpectrum) -> Self {
        SpectrumJson {
            n: s.n(),
            q: s.q(),
            lambda: s.lambda().iter().map(|r| rats(r)).collect(),
            nilpotent: s
                .nilpotent_entries()
                .into_iter()
                .map(|(i, j, v)| (i + 1, j + 1, format_rational(&v)))
                .collect(),
        }
    }

    pub fn to_spectrum(&self) -> Result<EigenSpectrum> {
        if self.lambda.len() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "n = {} but lambda has {} rows",
                self.n,
                self.lambda.len()
            )));
        }
        let lambda = self
            .lambda
            .iter()
            .map(|r| parse_rats(r))
            .collect::<Result<Vec<_>>>()?;
        let mut nil = Vec::with_capacity(self.nilpotent.len());
        for (i, j, v) in &self.nilpotent {
            if *i == 0 || *j == 0 {
                return Err(Error::InvalidArgument(
                    "nilpotent indices are 1-based".into(),
                ));
            }
            nil.push((i - 1, j - 1, parse_rational(v)?));
        }
        EigenSpectrum::new(lambda, self.q, &nil)
    }
}

/// `"inf"` or a degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TruncJson(pub Truncation);

impl Serialize for TruncJson {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0 {
            Truncation::Infinite => s.serialize_str("inf"),
            Truncation::Degree(d) => s.serialize_u32(d),
        }
    }
}

impl<'de> Deserialize<'de> for TruncJson {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Degree(u32),
            Word(String),
        }
        match Raw::deserialize(d)? {
            Raw::Degree(k) => Ok(TruncJson(Truncation::Degree(k))),
            Raw::Word(w) if w == "inf" => Ok(TruncJson(Truncation::Infinite)),
            Raw::Word(w) => Err(D::Error::custom(format!(
                "trunc must be an integer or \"inf\", got {w:?}"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub j: usize,
    pub m: Vec<u32>,
    pub c: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldJson {
    pub n: usize,
    pub trunc: TruncJson,
    pub terms: Vec<TermJson>,
}

impl FieldJson {
    pub fn from_field(f: &PolyVectorField) -> Self {
        FieldJson {
            n: f.n(),
            trunc: TruncJson(f.trunc()),
            terms: f
                .terms()
                .map(|(j, m, c)| TermJson {
                    j: j + 1,
                    m: m.exps().to_vec(),
                    c: format_rational(c),
                })
                .collect(),
        }
    }

    pub fn to_field(&self) -> Result<PolyVectorField> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            if t.j == 0 || t.j > self.n {
                return Err(Error::InvalidArgument(format!(
                    "component index {} outside 1..={}",
                    t.j, self.n
                )));
            }
            terms.push((t.j - 1, MultiIndex::new(t.m.clone()), parse_rational(&t.c)?));
        }
        PolyVectorField::from_terms(self.n, self.trunc.0, terms)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialJson {
    pub m: Vec<u32>,
    pub c: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub n: usize,
    pub trunc: TruncJson,
    pub terms: Vec<MonomialJson>,
}

impl SeriesJson {
    pub fn from_series(p: &PolySeries) -> Self {
        SeriesJson {
            n: p.n(),
            trunc: TruncJson(p.trunc()),
            terms: p
                .poly()
                .terms()
                .map(|(m, c)| MonomialJson {
                    m: m.exps().to_vec(),
                    c: format_rational(c),
                })
                .collect(),
        }
    }

    pub fn to_series(&self) -> Result<PolySeries> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            if t.m.len() != self.n {
                return Err(Error::DimensionMismatch(format!(
                    "exponent {:?} in {} variables",
                    t.m, self.n
                )));
            }
            terms.push((MultiIndex::new(t.m.clone()), parse_rational(&t.c)?));
        }
        Ok(PolySeries::new(
            Polynomial::from_terms(self.n, terms),
            self.trunc.0,
        ))
    }
}

/// Map from 1-based component index to exponents, serialized in numeric
/// key order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentMap(pub BTreeMap<usize, Vec<Vec<u32>>>);

impl Serialize for ComponentMap {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_map(self.0.iter().map(|(k, v)| (k.to_string(), v)))
    }
}

impl<'de> Deserialize<'de> for ComponentMap {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = BTreeMap::<String, Vec<Vec<u32>>>::deserialize(d)?;
        raw.into_iter()
            .map(|(k, v)| k.parse::<usize>().map(|k| (k, v)).map_err(D::Error::custom))
            .collect::<std::result::Result<_, _>>()
            .map(ComponentMap)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResonanceJson {
    pub finite: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_bound: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cap: Option<u32>,
    pub r: usize,
    #[serde(rename = "R")]
    pub per_component: ComponentMap,
}

impl ResonanceJson {
    pub fn from_set(r: &ResonanceSet) -> Self {
        ResonanceJson {
            finite: r.finite,
            degree_bound: r.degree_bound,
            cap: r.cap,
            r: r.count(),
            per_component: ComponentMap(
                r.per_component
                    .iter()
                    .enumerate()
                    .map(|(j, ms)| (j + 1, ms.iter().map(|m| m.exps().to_vec()).collect()))
                    .collect(),
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisTermJson {
    pub j: usize,
    pub m: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PdnfBasisJson {
    pub max_degree: u32,
    pub count: usize,
    pub basis: Vec<BasisTermJson>,
}

impl PdnfBasisJson {
    pub fn new(max_degree: u32, basis: &[PolyVectorField]) -> Self {
        let basis: Vec<BasisTermJson> = basis
            .iter()
            .flat_map(|f| {
                f.terms()
                    .map(|(j, m, _)| BasisTermJson {
                        j: j + 1,
                        m: m.exps().to_vec(),
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
        PdnfBasisJson {
            max_degree,
            count: basis.len(),
            basis,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsJson {
    pub d: usize,
    pub r: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralizerJson {
    pub dimension: usize,
    pub exact: bool,
    pub basis: Vec<FieldJson>,
    pub bounds: BoundsJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncation: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graded: Option<Vec<usize>>,
}

impl CentralizerJson {
    pub fn from_result(r: &CentralizerResult) -> Self {
        CentralizerJson {
            dimension: r.dimension,
            exact: r.exact,
            basis: r.basis.iter().map(FieldJson::from_field).collect(),
            bounds: BoundsJson {
                d: r.commutant_dim,
                r: r.resonance_count,
            },
            truncation: r.truncation,
            graded: r.graded.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairJson {
    pub g: FieldJson,
    pub lambda: SeriesJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionJson {
    pub beta: SeriesJson,
    pub alpha: SeriesJson,
    pub commutes_with_semisimple: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalizerJson {
    pub dimension: usize,
    pub truncation: u32,
    pub basis: Vec<PairJson>,
    /// Decomposition of each basis pair, when `A_s != 0`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reductions: Option<Vec<ReductionJson>>,
}

impl NormalizerJson {
    pub fn from_result(r: &NormalizerResult, reductions: Option<&[NormalizerReduction]>) -> Self {
        let pair = |p: &NormalizerPair| PairJson {
            g: FieldJson::from_field(&p.g),
            lambda: SeriesJson::from_series(&p.lambda),
        };
        NormalizerJson {
            dimension: r.dimension,
            truncation: r.truncation,
            basis: r.basis.iter().map(pair).collect(),
            reductions: reductions.map(|rs| {
                rs.iter()
                    .map(|x| ReductionJson {
                        beta: SeriesJson::from_series(&x.beta),
                        alpha: SeriesJson::from_series(&x.alpha),
                        commutes_with_semisimple: x.commutes_with_semisimple,
                    })
                    .collect()
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VerdictJson {
    Holds,
    Fails,
    Unknown,
}

impl From<Verdict> for VerdictJson {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::Holds => VerdictJson::Holds,
            Verdict::Fails => VerdictJson::Fails,
            Verdict::Unknown => VerdictJson::Unknown,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub j: usize,
    pub m: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleCheckJson {
    pub verdict: VerdictJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace_nonzero: Option<bool>,
}

impl ModuleCheckJson {
    pub fn from_check(c: &ModuleCheck) -> Self {
        ModuleCheckJson {
            verdict: c.verdict.into(),
            witness: c.witness.as_ref().map(|(j, m)| WitnessJson {
                j: j + 1,
                m: m.exps().to_vec(),
            }),
            trace_nonzero: c.trace_nonzero,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsJson {
    pub generators: Vec<Vec<u32>>,
    pub independent: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub free_module: Option<ModuleCheckJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub onediv: Option<ModuleCheckJson>,
}

impl InvariantsJson {
    pub fn new(
        inv: &InvariantAlgebra,
        free: Option<&ModuleCheck>,
        onediv: Option<&ModuleCheck>,
    ) -> Self {
        InvariantsJson {
            generators: inv.generators.iter().map(|g| g.exps().to_vec()).collect(),
            independent: inv.independent,
            free_module: free.map(ModuleCheckJson::from_check),
            onediv: onediv.map(ModuleCheckJson::from_check),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub certified: bool,
    pub reasons: Vec<String>,
    pub eigenvalues: Vec<String>,
    pub kernel_dims: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub commuting_degrees: Option<Vec<u32>>,
}

impl CertificateJson {
    pub fn from_certificate(c: &TrivialityCertificate) -> Self {
        CertificateJson {
            certified: c.certified,
            reasons: c.reasons.clone(),
            eigenvalues: rats(&c.eigenvalues),
            kernel_dims: c.kernel_dims.clone(),
            commuting_degrees: c.commuting.as_ref().map(|l| l.degrees.clone()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionJson {
    /// `"no_multiplier"`, `"unique_candidate"` or `"undecided"`.
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<String>>,
    pub system: Vec<Vec<String>>,
}

impl ObstructionJson {
    pub fn from_obstruction(o: &Obstruction) -> Self {
        let (status, alpha) = match &o.status {
            ObstructionStatus::NoMultiplier => ("no_multiplier", None),
            ObstructionStatus::UniqueCandidate(a) => ("unique_candidate", Some(rats(a))),
            ObstructionStatus::Undecided => ("undecided", None),
        };
        ObstructionJson {
            status: status.into(),
            alpha,
            system: matrix_json(&o.system),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedJson {
    #[serde(flatten)]
    pub field: FieldJson,
    pub nu: Vec<Vec<String>>,
    pub generators: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub obstruction: Option<ObstructionJson>,
}

impl ReducedJson {
    pub fn new(
        inv: &InvariantAlgebra,
        red: &ReducedField,
        cert: Option<&TrivialityCertificate>,
        obstruction: Option<&Obstruction>,
    ) -> Self {
        ReducedJson {
            field: FieldJson::from_field(&red.field),
            nu: matrix_json(&red.nu),
            generators: inv.generators.iter().map(|g| g.exps().to_vec()).collect(),
            certificate: cert.map(CertificateJson::from_certificate),
            obstruction: obstruction.map(ObstructionJson::from_obstruction),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LadderEntryJson {
    pub r: u32,
    /// `"solved"` or `"inconsistent"`.
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiplier: Option<SeriesJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub leading_dimension: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failed_degree: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedPointJson {
    pub axis: usize,
    pub eigenvalues: Vec<String>,
    pub cofactor: String,
    pub admissible_orders: Vec<u32>,
    pub complete: bool,
    pub covers_range: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LadderJson {
    #[serde(rename = "D")]
    pub truncation: u32,
    pub entries: Vec<LadderEntryJson>,
    pub support_note: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixed_point: Option<FixedPointJson>,
}

impl LadderJson {
    pub fn from_ladder(l: &MultiplierLadder) -> Self {
        LadderJson {
            truncation: l.truncation,
            entries: l
                .entries
                .iter()
                .map(|e| match &e.status {
                    LadderStatus::Solved {
                        multiplier,
                        leading_dimension,
                        ..
                    } => LadderEntryJson {
                        r: e.r,
                        status: "solved".into(),
                        multiplier: Some(SeriesJson::from_series(multiplier)),
                        leading_dimension: Some(*leading_dimension),
                        failed_degree: None,
                    },
                    LadderStatus::InconsistentAtDegree(d) => LadderEntryJson {
                        r: e.r,
                        status: "inconsistent".into(),
                        multiplier: None,
                        leading_dimension: None,
                        failed_degree: Some(*d),
                    },
                })
                .collect(),
            support_note: l.support_note.clone(),
            fixed_point: l.fixed_point.as_ref().map(|fp| {
                let mut orders: Vec<u32> = fp.ladder.solutions.iter().map(|s| s.s).collect();
                orders.dedup();
                FixedPointJson {
                    axis: fp.axis + 1,
                    eigenvalues: rats(&fp.eigenvalues),
                    cofactor: format_rational(&fp.cofactor),
                    admissible_orders: orders,
                    complete: fp.ladder.complete,
                    covers_range: fp.covers_range,
                }
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dim3Json {
    pub holds: bool,
    pub l1: Option<u64>,
    pub l2: Option<u64>,
}

impl From<Dim3Classification> for Dim3Json {
    fn from(c: Dim3Classification) -> Self {
        Dim3Json {
            holds: c.holds,
            l1: c.l1,
            l2: c.l2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckJson {
    pub finite_resonance: bool,
    pub positive_relation: bool,
    /// 1-based coordinates inside the support of the invariant monoid.
    pub u: Vec<usize>,
    pub w: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pdnf: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub offending_term: Option<WitnessJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub divergence_invariant: Option<bool>,
}

/// `{"error": code, "message": text}` written on failure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorJson {
    pub error: String,
    pub message: String,
}

impl ErrorJson {
    pub fn from_error(e: &Error) -> Self {
        ErrorJson {
            error: error_code(e).into(),
            message: e.to_string(),
        }
    }
}

/// Stable machine-readable code of an error.
pub fn error_code(e: &Error) -> &'static str {
    match e {
        Error::DimensionMismatch(_) => "dimension_mismatch",
        Error::Parse(_) => "parse",
        Error::InvalidArgument(_) => "invalid_argument",
        Error::RankMismatch { .. } => "rank_mismatch",
        Error::NilpotentViolatesCommutation { .. } => "nilpotent_violates_commutation",
        Error::InfiniteResonance => "infinite_resonance",
        Error::InfiniteResonanceWithoutCap => "infinite_resonance_without_cap",
        Error::LinearPartMismatch => "linear_part_mismatch",
        Error::NotPdnf { .. } => "not_pdnf",
        Error::ClosureViolation { .. } => "closure_violation",
        Error::NotNormalizerPair(_) => "not_normalizer_pair",
        Error::ZeroSemisimplePart => "zero_semisimple_part",
        Error::ZeroEigenvalue(_) => "zero_eigenvalue",
        Error::NotFreeModuleShape { .. } => "not_free_module_shape",
        Error::RewriteFailure(_) => "rewrite_failure",
        Error::DependentGenerators => "dependent_generators",
        Error::WrongShape(_) => "wrong_shape",
        Error::GcdNotOne => "gcd_not_one",
        Error::UnsupportedRank(_) => "unsupported_rank",
        Error::CapReached(_) => "cap_reached",
        Error::TruncationTooShallow { .. } => "truncation_too_shallow",
        Error::IdentityFailure(_) => "identity_failure",
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{frac, rat};

    #[test]
    fn spectrum_round_trip() {
        let doc =
            r#"{"n": 3, "q": 1, "lambda": [["3"], ["3"], ["1/2"]], "nilpotent": [[1, 2, "1"]]}"#;
        let s = from_str::<SpectrumJson>(doc)
            .unwrap()
            .to_spectrum()
            .unwrap();
        assert_eq!(s.nilpotent()[(0, 1)], rat(1));
        assert_eq!(s.row(2), &[frac(1, 2)]);
        let back = SpectrumJson::from_spectrum(&s);
        assert_eq!(back.to_spectrum().unwrap(), s);
        let bad = r#"{"n": 2, "q": 1, "lambda": [["1"], ["2"]], "nilpotent": [[1, 2, "1"]]}"#;
        assert_eq!(
            from_str::<SpectrumJson>(bad)
                .unwrap()
                .to_spectrum()
                .unwrap_err(),
            Error::NilpotentViolatesCommutation { i: 1, j: 2 }
        );
        assert!(matches!(
            from_str::<SpectrumJson>("{"),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn field_round_trip() {
        let doc = r#"{"n": 2, "trunc": "inf", "terms": [
            {"j": 1, "m": [1, 0], "c": "1"}, {"j": 2, "m": [1, 2], "c": "-3/4"}]}"#;
        let f = from_str::<FieldJson>(doc).unwrap().to_field().unwrap();
        assert_eq!(f.coeff(1, &MultiIndex::new(vec![1, 2])), frac(-3, 4));
        let text = to_string(&FieldJson::from_field(&f));
        assert_eq!(from_str::<FieldJson>(&text).unwrap().to_field().unwrap(), f);
        let t = r#"{"n": 1, "trunc": 4, "terms": []}"#;
        assert_eq!(
            from_str::<FieldJson>(t).unwrap().trunc.0,
            Truncation::Degree(4)
        );
        assert!(from_str::<FieldJson>(r#"{"n": 1, "trunc": "x", "terms": []}"#).is_err());
        let zero_j = r#"{"n": 1, "trunc": "inf", "terms": [{"j": 0, "m": [1], "c": "1"}]}"#;
        assert!(matches!(
            from_str::<FieldJson>(zero_j).unwrap().to_field(),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn component_map_numeric_order() {
        let mut m = BTreeMap::new();
        for k in [1usize, 2, 10, 11] {
            m.insert(k, vec![vec![k as u32]]);
        }
        let text = serde_json::to_string(&ComponentMap(m.clone())).unwrap();
        assert_eq!(text, r#"{"1":[[1]],"2":[[2]],"10":[[10]],"11":[[11]]}"#);
        assert_eq!(serde_json::from_str::<ComponentMap>(&text).unwrap().0, m);
    }
}
