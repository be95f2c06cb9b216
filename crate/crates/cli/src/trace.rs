//! JSON trace export.

use origami::script::{ConstructionState, Produced};
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct TraceEntry<'a> {
    pub step_index: usize,
    pub statement_text: &'a str,
    pub produced: ProducedJson<'a>,
}

#[derive(Debug, Serialize)]
pub struct ProducedJson<'a> {
    pub name: Option<&'a str>,
    pub kind: &'static str,
    /// Point: `[x, y]`. Line: `[nx, ny, d]` with `nx·x + ny·y = d`.
    /// Assert: `[residual, tol]`.
    pub values: Vec<f64>,
}

pub fn entries(state: &ConstructionState) -> Vec<TraceEntry<'_>> {
    state
        .trace()
        .iter()
        .map(|s| TraceEntry {
            step_index: s.index,
            statement_text: &s.statement,
            produced: match &s.produced {
                Produced::Point { name, point } => ProducedJson {
                    name: Some(name),
                    kind: "point",
                    values: vec![point.x, point.y],
                },
                Produced::Line { name, line } => ProducedJson {
                    name: Some(name),
                    kind: "line",
                    values: vec![line.nx(), line.ny(), line.d()],
                },
                Produced::Check { residual, tol } => ProducedJson {
                    name: None,
                    kind: "assert",
                    values: vec![*residual, *tol],
                },
            },
        })
        .collect()
}

/// Pretty-printed JSON array, one object per step, full precision.
pub fn trace_json(state: &ConstructionState) -> String {
    let mut s = serde_json::to_string_pretty(&entries(state)).expect("trace serializes");
    s.push('\n');
    s
}
