//! Serialized report format: `{version, schema, format, input, payload}`.
//! Every number is an integer or an exact `"num/den"` string.

use std::fmt::Write as _;

use rhbw::cstar::NodeBandwidth;
use rhbw::rational::to_exact_string;
use rhbw::table1::Table1;
use rhbw::{
    BBDecomposition, BandwidthReport, DynkinType, FixedPointPolytope, GeneralizedGrassmannian, HasseGraph,
    LevelDecomposition, Polynomial,
};
use serde::{Deserialize, Serialize};

use crate::fuzz::FuzzReport;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportEnvelope {
    pub version: String,
    pub schema: u32,
    pub format: String,
    pub input: InputEcho,
    pub payload: Payload,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    #[serde(rename = "type", skip_serializing_if = "Option::is_none")]
    pub dynkin_type: Option<DynkinType>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub node: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub direction: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nmax: Option<usize>,
}

impl InputEcho {
    pub fn new(x: &GeneralizedGrassmannian, direction: Option<usize>) -> Self {
        Self { dynkin_type: Some(x.dynkin_type()), node: Some(x.node()), direction, nmax: None }
    }

    pub fn table(nmax: usize) -> Self {
        Self { dynkin_type: None, node: None, direction: None, nmax: Some(nmax) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoincarePayload {
    /// Coefficients, lowest degree first, complex-degree variable.
    pub polynomial: Polynomial,
    pub display: String,
    /// `(q, P(q))`, the value as a decimal string.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value_at: Option<(i64, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "data", rename_all = "snake_case")]
pub enum Payload {
    Table1(Table1),
    Bandwidth(BandwidthReport),
    NodeBandwidth(NodeBandwidth),
    Levels(LevelDecomposition),
    Bb(BBDecomposition),
    Poincare(PoincarePayload),
    Hasse(HasseGraph),
    Polytope(FixedPointPolytope),
    Fuzz(FuzzReport),
}

impl ReportEnvelope {
    pub fn new(format: &str, input: InputEcho, payload: Payload) -> Self {
        Self {
            version: env!("CARGO_PKG_VERSION").to_string(),
            schema: SCHEMA_VERSION,
            format: format.to_string(),
            input,
            payload,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

/// `node,on_o1,on_ok,minimal`.
pub fn node_bandwidth_csv(rows: &[NodeBandwidth], minimizers: Option<&[usize]>) -> String {
    let mut out = String::from("node,on_o1,on_ok,minimal\n");
    for b in rows {
        let minimal = minimizers.map(|m| m.contains(&b.node));
        let flag = match minimal {
            Some(true) => "true",
            Some(false) => "false",
            None => "",
        };
        let _ = writeln!(out, "{},{},{},{}", b.node, to_exact_string(&b.on_o1), b.on_ok, flag);
    }
    out
}

/// One row per component, top level first:
/// `value,label,count,component,size,dimension,nu_plus,nu_minus,poincare`
/// with the component polynomial as `;`-separated coefficients.
pub fn levels_csv(dec: &LevelDecomposition) -> String {
    let mut out = String::from("value,label,count,component,size,dimension,nu_plus,nu_minus,poincare\n");
    for level in &dec.levels {
        for c in &level.components {
            let coeffs: Vec<String> = c.poincare.coeffs().iter().map(u64::to_string).collect();
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{}",
                level.value,
                to_exact_string(&level.label),
                level.count,
                c.id,
                c.size,
                c.dimension,
                c.nu_plus,
                c.nu_minus,
                coeffs.join(";")
            );
        }
    }
    out
}
