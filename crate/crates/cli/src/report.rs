//! JSON reports. Keys are sorted (serde_json's default map), so a report is
//! byte-identical across runs for the same inputs, seed and version.

use dcx_core::derived::{Certificate, DerivedInvariants};
use dcx_core::fgmod::ModuleInvariants;
use dcx_core::verdict::{Conclusion, TheoremReport, Tri, Value};
use serde_json::{json, Map, Value as Json};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub fn certificate(c: &Certificate) -> Json {
    match *c {
        Certificate::Exact => json!({"kind": "Exact"}),
        Certificate::Periodic { start, period, .. } => json!({"kind": "Periodic", "start": start, "period": period}),
        Certificate::UpToBound(n) => json!({"kind": "UpToBound", "n": n}),
    }
}

/// A named input: where it came from and the hash of its content.
#[derive(Debug, Clone)]
pub struct Input {
    pub role: String,
    pub source: String,
    pub sha256: String,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<Input>,
    pub results: Map<String, Json>,
    pub certificates: Map<String, Json>,
    pub seed: u64,
}

impl Report {
    pub fn new(command: impl Into<String>, seed: u64) -> Self {
        Report { command: command.into(), inputs: Vec::new(), results: Map::new(), certificates: Map::new(), seed }
    }

    pub fn to_json(&self) -> Json {
        let inputs: Map<String, Json> = self
            .inputs
            .iter()
            .map(|i| (i.role.clone(), json!({"source": i.source, "sha256": i.sha256})))
            .collect();
        json!({
            "command": self.command,
            "inputs": inputs,
            "results": self.results,
            "certificates": self.certificates,
            "seed": self.seed,
            "version": VERSION,
        })
    }

    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("reports serialize");
        s.push('\n');
        s
    }
}

pub fn module_invariants(m: &ModuleInvariants) -> Json {
    json!({
        "length": m.length,
        "min_gens": m.min_gens,
        "socle_dim": m.socle_dim,
        "annihilator_dim": m.annihilator_dim,
    })
}

fn numbers(v: &std::collections::BTreeMap<i64, usize>) -> Json {
    Json::Object(v.iter().map(|(k, n)| (k.to_string(), json!(n))).collect())
}

/// Derived invariants as results plus their certificates.
pub fn derived_invariants(d: &DerivedInvariants) -> (Json, Map<String, Json>) {
    let results = json!({
        "inf": d.inf,
        "sup": d.sup,
        "amp": d.amp,
        "depth": d.depth,
        "kdim": d.kdim,
        "type": d.type_,
        "cohen_macaulay": d.cm,
        "bass": numbers(&d.bass),
        "betti": numbers(&d.betti),
    });
    let mut certs = Map::new();
    certs.insert("bass".into(), certificate(&d.bass_certificate));
    certs.insert("betti".into(), certificate(&d.betti_certificate));
    (results, certs)
}

fn tri(t: &Tri) -> Json {
    json!({"value": t.value, "pool_relative": t.pool_relative})
}

pub fn conclusion(c: &Conclusion) -> Json {
    json!({"status": c.label(), "detail": c.detail()})
}

/// A theorem report as results and the certificates of its truth values.
pub fn theorem(r: &TheoremReport) -> (Json, Map<String, Json>) {
    let mut values = Map::new();
    let mut certs = Map::new();
    for (k, v) in &r.values {
        let j = match v {
            Value::Truth(t) => {
                certs.insert(k.clone(), certificate(&t.certificate));
                tri(t)
            }
            Value::Int(n) => json!(n),
            Value::Text(s) => json!(s),
        };
        values.insert(k.clone(), j);
    }
    let results = json!({
        "theorem": r.theorem.name(),
        "inputs": r.inputs,
        "values": values,
        "conclusion": conclusion(&r.conclusion),
        "notes": r.notes,
    });
    (results, certs)
}
