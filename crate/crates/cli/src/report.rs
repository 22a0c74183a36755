//! Deterministic reports: a JSON document mirroring the task list plus a
//! plain-text summary. Nothing time-dependent is ever written here; wall
//! times go to stderr only.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Serialize)]
pub struct Report {
    pub ring: Vec<String>,
    pub tasks: Vec<TaskRecord>,
}

#[derive(Debug, Serialize)]
pub struct TaskRecord {
    pub task: String,
    pub inputs: Value,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    Failed,
}

impl Report {
    pub fn any_failed(&self) -> bool {
        self.tasks.iter().any(|t| t.status == Status::Failed)
    }

    /// Serialized form written to report files; stable across runs.
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serialization");
        text.push('\n');
        text
    }

    /// One line per task, for terminals.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for (i, t) in self.tasks.iter().enumerate() {
            match (&t.status, &t.error) {
                (Status::Ok, _) => {
                    let _ = writeln!(out, "task {} {}: ok", i + 1, t.task);
                }
                (Status::Failed, Some(e)) => {
                    let _ = writeln!(out, "task {} {}: failed ({e})", i + 1, t.task);
                }
                (Status::Failed, None) => {
                    let _ = writeln!(out, "task {} {}: failed", i + 1, t.task);
                }
            }
        }
        let failed = self.tasks.iter().filter(|t| t.status == Status::Failed).count();
        let _ = writeln!(
            out,
            "{} task(s), {} ok, {} failed",
            self.tasks.len(),
            self.tasks.len() - failed,
            failed
        );
        out
    }
}
