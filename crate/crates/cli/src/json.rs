//! JSON shapes for reports, manifests and module dumps.
//!
//! Rationals are written as JSON integers when integral and as strings such as `"-1/2"`
//! otherwise.

use serde::{Deserialize, Serialize};

use queer_core::weight::{fmt_rat, parse_rational};
use queer_core::{Entry, GradedDecomposition, Parity, Rat, Weight, XSpec};
use queer_oracle::module::GModule;
use queer_oracle::supermatrix::q_basis;
use queer_oracle::{Field, Q};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Num {
    Int(i64),
    Frac(String),
}

impl Num {
    pub fn from_rat(r: &Rat) -> Self {
        if r.is_integer() {
            Num::Int(r.to_integer())
        } else {
            Num::Frac(fmt_rat(r))
        }
    }

    pub fn to_rat(&self) -> queer_core::Result<Rat> {
        match self {
            Num::Int(i) => Ok(Rat::from_integer(*i)),
            Num::Frac(s) => parse_rational(s),
        }
    }
}

fn nums(rs: &[Rat]) -> Vec<Num> {
    rs.iter().map(Num::from_rat).collect()
}

fn rats(ns: &[Num]) -> queer_core::Result<Vec<Rat>> {
    ns.iter().map(Num::to_rat).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct XJson {
    pub nil_pairs: usize,
    pub ss_coeffs: Vec<Num>,
}

impl XJson {
    pub fn from_spec(x: &XSpec) -> Self {
        XJson { nil_pairs: x.nil_pairs(), ss_coeffs: nums(x.ss_coeffs()) }
    }

    pub fn to_spec(&self) -> queer_core::Result<XSpec> {
        XSpec::new(self.nil_pairs, rats(&self.ss_coeffs)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryJson {
    pub nu: Vec<Num>,
    pub mult: u32,
    pub parity: String,
    pub h: Option<Vec<Num>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub lambda: Vec<Num>,
    pub x: XJson,
    pub entries: Vec<EntryJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl DecompositionJson {
    pub fn from_decomposition(d: &GradedDecomposition) -> Self {
        DecompositionJson {
            lambda: nums(d.lambda.coords()),
            x: XJson::from_spec(&d.x),
            entries: d
                .entries
                .iter()
                .map(|e| EntryJson {
                    nu: nums(e.nu.coords()),
                    mult: e.mult,
                    parity: e.parity.to_string(),
                    h: e.h.as_ref().map(|h| nums(h)),
                })
                .collect(),
            note: None,
        }
    }

    pub fn to_decomposition(&self) -> queer_core::Result<GradedDecomposition> {
        let entries = self
            .entries
            .iter()
            .map(|e| {
                let parity = match e.parity.as_str() {
                    "balanced" => Parity::Balanced,
                    "single" => Parity::Single,
                    other => return Err(queer_core::Error::Parse(format!("unknown parity {other:?}"))),
                };
                Ok(Entry {
                    nu: Weight::new(rats(&e.nu)?),
                    mult: e.mult,
                    parity,
                    h: e.h.as_ref().map(|h| rats(h)).transpose()?,
                })
            })
            .collect::<queer_core::Result<Vec<_>>>()?;
        Ok(GradedDecomposition { lambda: Weight::new(rats(&self.lambda)?), x: self.x.to_spec()?, entries })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestCase {
    pub id: String,
    /// `q`, `sq`, `pq` or `psq`.
    pub kind: String,
    pub n: usize,
    pub x: XJson,
    /// Class string: `0`, `C`, `PiC`, `C(1|1)`, `q(1)`, or `q(m)`, `sq(m)`, ... .
    pub expected: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct Manifest {
    #[serde(default)]
    pub name: String,
    pub cases: Vec<ManifestCase>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseResult {
    pub id: String,
    pub expected: String,
    pub got: String,
    pub sdim: [usize; 2],
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub manifest: String,
    pub cases: Vec<CaseResult>,
    pub suites: Vec<SuiteResult>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionJson {
    pub element: String,
    /// Row-major.
    pub matrix: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleDump {
    pub n: usize,
    pub labels: Vec<String>,
    pub parity: Vec<String>,
    pub weights: Vec<Vec<i64>>,
    pub action: Vec<ActionJson>,
}

impl ModuleDump {
    pub fn from_module(m: &GModule<Q>) -> Self {
        let action = q_basis(m.n)
            .into_iter()
            .map(|b| {
                let d = m.rho(b).to_dense();
                let matrix = (0..d.rows()).map(|r| d.row(r).iter().map(|a| a.to_exact_string()).collect()).collect();
                ActionJson { element: b.label(), matrix }
            })
            .collect();
        ModuleDump {
            n: m.n,
            labels: m.labels.clone(),
            parity: m.parity.iter().map(|&p| if p { "odd" } else { "even" }.to_string()).collect(),
            weights: m.weights.clone(),
            action,
        }
    }
}
