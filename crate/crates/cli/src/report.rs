//! Structured command reports.

use std::fmt::Write as _;
use std::time::{SystemTime, UNIX_EPOCH};

use homassoc::catalog::TableDiscrepancy;
use homassoc::{GaussianRational, VerificationReport, Witness};
use homassoc_poly::GroebnerStats;
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Fail,
    Error,
    Budget,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Fail => "fail",
            Status::Error => "error",
            Status::Budget => "budget",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Fail => 1,
            Status::Error => 2,
            Status::Budget => 3,
        }
    }

    pub fn from_holds(holds: bool) -> Status {
        if holds {
            Status::Ok
        } else {
            Status::Fail
        }
    }
}

/// One command's outcome. Serialized with sorted keys.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: String,
    pub algebra_label: Option<String>,
    pub status: Status,
    pub dims: Map<String, Value>,
    pub witnesses: Vec<Value>,
    pub discrepancies: Vec<Value>,
    pub stats: Map<String, Value>,
    pub details: Map<String, Value>,
    pub message: Option<String>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            algebra_label: None,
            status: Status::Ok,
            dims: Map::new(),
            witnesses: Vec::new(),
            discrepancies: Vec::new(),
            stats: Map::new(),
            details: Map::new(),
            message: None,
        }
    }

    pub fn error(command: impl Into<String>, message: impl Into<String>) -> Self {
        let mut r = Report::new(command);
        r.status = Status::Error;
        r.message = Some(message.into());
        r
    }

    pub fn label(mut self, label: &str) -> Self {
        self.algebra_label = Some(label.to_string());
        self
    }

    pub fn dim(&mut self, key: &str, value: usize) {
        self.dims.insert(key.to_string(), json!(value));
    }

    pub fn detail(&mut self, key: &str, value: Value) {
        self.details.insert(key.to_string(), value);
    }

    /// Records the witnesses of a verification and downgrades the status on failure.
    pub fn absorb(&mut self, report: &VerificationReport) {
        self.details.insert(report.property.clone(), json!(report.holds));
        self.witnesses.extend(report.witnesses.iter().map(|w| witness_json(&report.property, w)));
        if !report.holds && self.status == Status::Ok {
            self.status = Status::Fail;
        }
    }

    pub fn groebner_stats(&mut self, stats: &GroebnerStats) {
        self.stats = groebner_stats_json(stats);
    }

    pub fn to_json(&self, deterministic: bool) -> Value {
        let mut m = Map::new();
        m.insert("command".into(), json!(self.command));
        m.insert("algebra_label".into(), self.algebra_label.as_ref().map_or(Value::Null, |l| json!(l)));
        m.insert("status".into(), json!(self.status.as_str()));
        m.insert("dims".into(), Value::Object(self.dims.clone()));
        m.insert("witnesses".into(), Value::Array(self.witnesses.clone()));
        m.insert("discrepancies".into(), Value::Array(self.discrepancies.clone()));
        m.insert("stats".into(), Value::Object(self.stats.clone()));
        m.insert("details".into(), Value::Object(self.details.clone()));
        if let Some(msg) = &self.message {
            m.insert("message".into(), json!(msg));
        }
        if !deterministic {
            let secs = SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs());
            m.insert("timestamp".into(), json!(secs));
        }
        Value::Object(m)
    }

    pub fn render_json(&self, deterministic: bool) -> String {
        serde_json::to_string_pretty(&self.to_json(deterministic)).expect("report serializes")
    }

    pub fn render_human(&self) -> String {
        let mut out = String::new();
        let label = self.algebra_label.as_deref().map(|l| format!(" [{l}]")).unwrap_or_default();
        let _ = writeln!(out, "{}{}: {}", self.command, label, self.status.as_str());
        if let Some(msg) = &self.message {
            let _ = writeln!(out, "  {msg}");
        }
        for (k, v) in &self.dims {
            let _ = writeln!(out, "  {k} = {v}");
        }
        for (k, v) in &self.details {
            match v {
                Value::String(s) if s.contains('\n') => {
                    let _ = writeln!(out, "  {k}:");
                    for line in s.lines() {
                        let _ = writeln!(out, "    {line}");
                    }
                }
                _ => {
                    let _ = writeln!(out, "  {k}: {v}");
                }
            }
        }
        for (k, v) in &self.stats {
            let _ = writeln!(out, "  stats.{k} = {v}");
        }
        for w in &self.witnesses {
            let _ = writeln!(out, "  witness: {w}");
        }
        for d in &self.discrepancies {
            let _ = writeln!(out, "  discrepancy: {d}");
        }
        out
    }
}

pub fn scalar_json(c: &GaussianRational) -> Value {
    json!(c.to_dsl_string())
}

pub fn vector_json(v: &[GaussianRational]) -> Value {
    Value::Array(v.iter().map(scalar_json).collect())
}

pub fn witness_json(property: &str, w: &Witness) -> Value {
    json!({
        "property": property,
        "relation": w.relation,
        "indices": w.indices,
        "lhs": vector_json(&w.lhs),
        "rhs": vector_json(&w.rhs),
    })
}

pub fn table_discrepancy_json(d: &TableDiscrepancy) -> Value {
    let params: Map<String, Value> = d.params.iter().map(|(k, v)| (k.clone(), scalar_json(v))).collect();
    json!({
        "kind": "product_table",
        "id": d.id,
        "product": format!("{}*{}", d.left, d.right),
        "params": params,
        "published": vector_json(&d.printed),
        "computed": vector_json(&d.computed),
    })
}

pub fn groebner_stats_json(s: &GroebnerStats) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("pairs_created".into(), json!(s.pairs_created));
    m.insert("pairs_pruned".into(), json!(s.pairs_pruned));
    m.insert("pairs_reduced".into(), json!(s.pairs_reduced));
    m.insert("zero_reductions".into(), json!(s.zero_reductions));
    m.insert("reduction_steps".into(), json!(s.reduction_steps));
    m
}
