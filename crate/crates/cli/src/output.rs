//! The `QueryResult` envelope and its renderings.

use ak_core::{Error, Polynomial};
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Fail,
    Invalid,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Fail => "fail",
            Status::Invalid => "invalid",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Fail => 1,
            Status::Invalid => 2,
        }
    }
}

#[derive(Debug, Clone)]
pub struct QueryResult {
    pub command: Value,
    pub status: Status,
    pub payload: Value,
    pub citations: Vec<String>,
}

impl QueryResult {
    pub fn ok(command: Value, payload: Value, citations: Vec<String>) -> QueryResult {
        QueryResult {
            command,
            status: Status::Ok,
            payload,
            citations,
        }
    }

    pub fn invalid(command: Value, err: &Error) -> QueryResult {
        QueryResult {
            command,
            status: Status::Invalid,
            payload: json!({ "error": { "kind": err.kind(), "message": err.to_string() } }),
            citations: Vec::new(),
        }
    }

    pub fn to_value(&self) -> Value {
        let mut citations = self.citations.clone();
        citations.sort();
        citations.dedup();
        json!({
            "command": self.command,
            "status": self.status.as_str(),
            "payload": self.payload,
            "citations": citations,
        })
    }

    /// Compact JSON. Keys are sorted (serde_json's default map).
    pub fn to_json(&self) -> String {
        self.to_value().to_string()
    }

    /// Indented, for humans.
    pub fn to_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.to_value()).expect("serializable")
    }
}

/// `[{"monomial": .., "coefficient": ..}]` in canonical term order.
pub fn terms_value(p: &Polynomial) -> Value {
    Value::Array(
        p.terms()
            .into_iter()
            .map(|(m, c)| json!({ "monomial": m.display(p.algebra()), "coefficient": c.residue() }))
            .collect(),
    )
}

pub fn command_echo(name: &str, args: &[(&str, Value)]) -> Value {
    let mut m = Map::new();
    m.insert("name".into(), Value::String(name.into()));
    for (k, v) in args {
        m.insert((*k).into(), v.clone());
    }
    Value::Object(m)
}
