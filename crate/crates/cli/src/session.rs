//! Session files: a JSON document declaring a ring, named objects and a
//! task list. Parsing returns either a fully validated session or a list
//! of positioned errors.

use std::collections::BTreeMap;

use logalg_core::{BilinearMetric, Ideal, PoissonStructure, PolyRing, VectorField};
use serde::Deserialize;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SessionFile {
    pub ring: Vec<String>,
    #[serde(default)]
    pub ideals: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    pub fields: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    pub poisson: Option<PoissonDecl>,
    #[serde(default)]
    pub metric: Option<Vec<Vec<String>>>,
    pub tasks: Vec<TaskDecl>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PoissonDecl {
    /// Strict upper triangle of the bracket matrix, row by row.
    pub upper: Vec<String>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "task", rename_all = "snake_case", deny_unknown_fields)]
pub enum TaskDecl {
    FromPoisson,
    LInvariance { ideal: String },
    InvariantFunctions { degree: u32 },
    HermitianTable,
    ImageMetric { kind: ImageMetricKind },
    QuotientMetric { ideal: String, fields: [String; 2] },
    LogDerivations { ideal: String },
    Cond1 { ideal: String },
    Saito { ideal: String },
    NormalModule { ideal: String },
    Koszul,
    KernelSplit,
    Cohomology { dmax: u32 },
}

#[derive(Debug, Clone, Copy, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum ImageMetricKind {
    Naive,
    Orthogonal,
}

impl TaskDecl {
    pub fn name(&self) -> &'static str {
        match self {
            TaskDecl::FromPoisson => "from_poisson",
            TaskDecl::LInvariance { .. } => "l_invariance",
            TaskDecl::InvariantFunctions { .. } => "invariant_functions",
            TaskDecl::HermitianTable => "hermitian_table",
            TaskDecl::ImageMetric { .. } => "image_metric",
            TaskDecl::QuotientMetric { .. } => "quotient_metric",
            TaskDecl::LogDerivations { .. } => "log_derivations",
            TaskDecl::Cond1 { .. } => "cond1",
            TaskDecl::Saito { .. } => "saito",
            TaskDecl::NormalModule { .. } => "normal_module",
            TaskDecl::Koszul => "koszul",
            TaskDecl::KernelSplit => "kernel_split",
            TaskDecl::Cohomology { .. } => "cohomology",
        }
    }
}

/// Fully validated session: every polynomial parsed, every name resolved.
#[derive(Debug)]
pub struct Session {
    pub ring: PolyRing,
    pub ring_vars: Vec<String>,
    pub ideals: BTreeMap<String, Ideal>,
    pub fields: BTreeMap<String, VectorField>,
    pub poisson: Option<PoissonStructure>,
    pub metric: Option<BilinearMetric>,
    pub tasks: Vec<TaskDecl>,
}

/// Parses and validates a session document. On failure every detected
/// problem is reported with its position: JSON syntax and shape errors
/// carry line/column, semantic errors carry the object path.
pub fn parse_session(text: &str) -> Result<Session, Vec<String>> {
    if text.trim().is_empty() {
        return Err(vec![
            "session file is empty: missing ring declaration".to_string()
        ]);
    }
    let file: SessionFile = match serde_json::from_str(text) {
        Ok(f) => f,
        Err(e) => {
            return Err(vec![format!(
                "line {}, column {}: {}",
                e.line(),
                e.column(),
                e
            )]);
        }
    };

    let mut errors = Vec::new();
    let names: Vec<&str> = file.ring.iter().map(String::as_str).collect();
    let ring = match PolyRing::new(&names) {
        Ok(r) => r,
        Err(e) => return Err(vec![format!("ring: {e}")]),
    };

    let mut ideals = BTreeMap::new();
    for (name, gen_texts) in &file.ideals {
        let mut gens = Vec::new();
        for (i, text) in gen_texts.iter().enumerate() {
            match ring.parse(text) {
                Ok(p) => gens.push(p),
                Err(e) => errors.push(format!("ideals.{name}[{i}]: {e}")),
            }
        }
        if gens.len() == gen_texts.len() {
            match Ideal::new(&ring, gens) {
                Ok(ideal) => {
                    ideals.insert(name.clone(), ideal);
                }
                Err(e) => errors.push(format!("ideals.{name}: {e}")),
            }
        }
    }

    let mut fields = BTreeMap::new();
    for (name, comp_texts) in &file.fields {
        let comps: Vec<&str> = comp_texts.iter().map(String::as_str).collect();
        match VectorField::parse(&ring, &comps) {
            Ok(f) => {
                fields.insert(name.clone(), f);
            }
            Err(e) => errors.push(format!("fields.{name}: {e}")),
        }
    }

    let mut poisson = None;
    if let Some(decl) = &file.poisson {
        let mut upper = Vec::new();
        for (i, text) in decl.upper.iter().enumerate() {
            match ring.parse(text) {
                Ok(p) => upper.push(p),
                Err(e) => errors.push(format!("poisson.upper[{i}]: {e}")),
            }
        }
        if upper.len() == decl.upper.len() {
            match PoissonStructure::from_upper(&ring, &upper) {
                Ok(p) => poisson = Some(p),
                Err(e) => errors.push(format!("poisson: {e}")),
            }
        }
    }

    let mut metric = None;
    if let Some(rows) = &file.metric {
        let mut mat = Vec::new();
        let mut ok = true;
        for (i, row) in rows.iter().enumerate() {
            let mut out = Vec::new();
            for (j, text) in row.iter().enumerate() {
                match ring.parse(text) {
                    Ok(p) => out.push(p),
                    Err(e) => {
                        errors.push(format!("metric[{i}][{j}]: {e}"));
                        ok = false;
                    }
                }
            }
            mat.push(out);
        }
        if ok {
            match BilinearMetric::new(&ring, mat) {
                Ok(m) => metric = Some(m),
                Err(e) => errors.push(format!("metric: {e}")),
            }
        }
    }

    for (i, task) in file.tasks.iter().enumerate() {
        let check_ideal = |ideal: &String, errors: &mut Vec<String>| {
            if !ideals.contains_key(ideal) {
                errors.push(format!(
                    "tasks[{i}].ideal: unknown ideal `{ideal}`"
                ));
            }
        };
        match task {
            TaskDecl::LInvariance { ideal }
            | TaskDecl::LogDerivations { ideal }
            | TaskDecl::Cond1 { ideal }
            | TaskDecl::Saito { ideal }
            | TaskDecl::NormalModule { ideal } => check_ideal(ideal, &mut errors),
            TaskDecl::QuotientMetric {
                ideal,
                fields: field_names,
            } => {
                check_ideal(ideal, &mut errors);
                for fname in field_names {
                    if !fields.contains_key(fname) {
                        errors.push(format!(
                            "tasks[{i}].fields: unknown field `{fname}`"
                        ));
                    }
                }
            }
            _ => {}
        }
        let needs_poisson = matches!(
            task,
            TaskDecl::FromPoisson
                | TaskDecl::LInvariance { .. }
                | TaskDecl::InvariantFunctions { .. }
                | TaskDecl::HermitianTable
                | TaskDecl::ImageMetric { .. }
                | TaskDecl::Cohomology { .. }
        );
        if needs_poisson && poisson.is_none() {
            errors.push(format!(
                "tasks[{i}]: task `{}` needs a poisson declaration",
                task.name()
            ));
        }
    }

    if !errors.is_empty() {
        return Err(errors);
    }
    Ok(Session {
        ring,
        ring_vars: file.ring,
        ideals,
        fields,
        poisson,
        metric,
        tasks: file.tasks,
    })
}
