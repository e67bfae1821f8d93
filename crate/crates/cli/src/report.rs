use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verification {
    Pass,
    Fail,
}

/// How the process should exit once the report is written.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Success,
    None,
    Error,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Success => 0,
            Status::None => 2,
            Status::Error => 1,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub outcome: Value,
    pub verification: Verification,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
    #[serde(skip)]
    pub status: Status,
}

/// One recomputed quantity next to the value the library reported.
#[derive(Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub predicted: Value,
    pub measured: Value,
}

impl RunReport {
    pub fn new(command: &str, inputs: BTreeMap<String, Value>) -> Self {
        RunReport {
            command: command.to_string(),
            inputs,
            outcome: Value::Null,
            verification: Verification::Pass,
            checks: Vec::new(),
            error: None,
            wall_time_ms: None,
            status: Status::Success,
        }
    }

    pub fn outcome(mut self, outcome: impl Serialize) -> Self {
        self.outcome = serde_json::to_value(outcome).expect("outcome serialises");
        self
    }

    pub fn none(mut self) -> Self {
        self.status = Status::None;
        self
    }

    /// Records a check; a mismatch fails the whole report.
    pub fn check<T: Serialize + PartialEq>(&mut self, name: &str, predicted: T, measured: T) {
        if predicted != measured {
            self.verification = Verification::Fail;
            self.status = Status::Error;
        }
        self.checks.push(Check {
            name: name.to_string(),
            predicted: serde_json::to_value(predicted).expect("serialisable"),
            measured: serde_json::to_value(measured).expect("serialisable"),
        });
    }

    pub fn failed(command: &str, inputs: BTreeMap<String, Value>, err: &anyhow::Error) -> Self {
        let mut report = RunReport::new(command, inputs);
        report.verification = Verification::Fail;
        report.error = Some(format!("{err:#}"));
        report.status = Status::Error;
        report
    }
}
