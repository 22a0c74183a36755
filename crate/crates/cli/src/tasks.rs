//! Task execution: each task builds what it needs from the session and
//! produces a JSON payload. Failures surface as per-task records, never
//! as process aborts.

use logalg_core::{
    characteristic_foliation, cond1_check, from_poisson, image_metric_naive,
    image_metric_orthogonal, invariant_functions, kernel_split, koszul_christoffel,
    l_invariance_check, log_derivations, normal_module, quotient_metric, saito_free_check,
    standard_hermitian, truncated_cohomology_ranks_up_to, BilinearMetric, CoefficientModule,
    DivisorChart, Error, Ideal, LieAlgebroid, PolyVec, Result, TruncationWindow,
};
use serde_json::{json, Value};

use crate::session::{ImageMetricKind, Session, TaskDecl};

/// Arguments echoed back into the report for one task.
pub fn task_inputs(task: &TaskDecl) -> Value {
    match task {
        TaskDecl::FromPoisson | TaskDecl::HermitianTable | TaskDecl::Koszul
        | TaskDecl::KernelSplit => json!({}),
        TaskDecl::LInvariance { ideal }
        | TaskDecl::LogDerivations { ideal }
        | TaskDecl::Cond1 { ideal }
        | TaskDecl::Saito { ideal }
        | TaskDecl::NormalModule { ideal } => json!({ "ideal": ideal }),
        TaskDecl::InvariantFunctions { degree } => json!({ "degree": degree }),
        TaskDecl::ImageMetric { kind } => json!({
            "kind": match kind {
                ImageMetricKind::Naive => "naive",
                ImageMetricKind::Orthogonal => "orthogonal",
            }
        }),
        TaskDecl::QuotientMetric { ideal, fields } => {
            json!({ "ideal": ideal, "fields": fields })
        }
        TaskDecl::Cohomology { dmax } => json!({ "dmax": dmax }),
    }
}

fn algebroid_for(session: &Session) -> Result<LieAlgebroid> {
    match &session.poisson {
        Some(p) => from_poisson(p),
        None => Ok(LieAlgebroid::tangent(&session.ring)),
    }
}

fn metric_for(session: &Session, rank: usize) -> Result<BilinearMetric> {
    match &session.metric {
        Some(m) => {
            if m.rank() != rank {
                return Err(Error::Arity(format!(
                    "session metric has rank {}, the task needs rank {rank}",
                    m.rank()
                )));
            }
            Ok(m.clone())
        }
        None => Ok(BilinearMetric::identity(&session.ring, rank)),
    }
}

fn ideal_for<'s>(session: &'s Session, name: &str) -> &'s Ideal {
    // Validated during parsing.
    &session.ideals[name]
}

fn single_generator_chart(ideal: &Ideal) -> Result<DivisorChart> {
    let gens = ideal.gens();
    if gens.len() != 1 {
        return Err(Error::UnsupportedChart(format!(
            "divisor tasks need a principal ideal, got {} generators",
            gens.len()
        )));
    }
    DivisorChart::new(gens[0].clone())
}

fn check_degree_cap(degree: u32, cap: Option<u32>) -> Result<()> {
    if let Some(cap) = cap {
        if degree > cap {
            return Err(Error::Degree(format!(
                "degree {degree} exceeds the configured cap {cap}"
            )));
        }
    }
    Ok(())
}

/// Runs one task to a JSON payload.
pub fn execute(session: &Session, task: &TaskDecl, degree_cap: Option<u32>) -> Result<Value> {
    match task {
        TaskDecl::FromPoisson => {
            let a = algebroid_for(session)?;
            let anchor: Vec<Vec<String>> = a
                .anchor()
                .iter()
                .map(|f| f.coeffs().iter().map(|p| p.to_string()).collect())
                .collect();
            let mut brackets = Vec::new();
            for s in 0..a.rank() {
                for t in (s + 1)..a.rank() {
                    let coeffs: Vec<String> = (0..a.rank())
                        .map(|u| a.struct_const(s, t, u).to_string())
                        .collect();
                    brackets.push(json!({ "pair": [s, t], "coefficients": coeffs }));
                }
            }
            Ok(json!({ "anchor": anchor, "brackets": brackets }))
        }
        TaskDecl::LInvariance { ideal } => {
            let a = algebroid_for(session)?;
            let invariant = l_invariance_check(&a, ideal_for(session, ideal))?;
            Ok(json!({ "invariant": invariant }))
        }
        TaskDecl::InvariantFunctions { degree } => {
            check_degree_cap(*degree, degree_cap)?;
            let a = algebroid_for(session)?;
            let fol = characteristic_foliation(&a)?;
            let funcs: Vec<String> = invariant_functions(&fol, *degree)?
                .iter()
                .map(|p| p.to_string())
                .collect();
            Ok(json!({ "functions": funcs }))
        }
        TaskDecl::HermitianTable => {
            let a = algebroid_for(session)?;
            let mut table = Vec::new();
            for i in 0..a.rank() {
                let mut row = Vec::new();
                for j in 0..a.rank() {
                    row.push(
                        standard_hermitian(a.anchor_field(i), a.anchor_field(j))?.to_string(),
                    );
                }
                table.push(row);
            }
            Ok(json!({ "table": table }))
        }
        TaskDecl::ImageMetric { kind } => {
            let a = algebroid_for(session)?;
            let metric = metric_for(session, a.rank())?;
            let basis: Vec<PolyVec> = (0..a.rank())
                .map(|i| PolyVec::unit(&session.ring, a.rank(), i))
                .collect();
            let mut table = Vec::new();
            for i in 0..a.rank() {
                let mut row = Vec::new();
                for j in 0..a.rank() {
                    let text = match kind {
                        ImageMetricKind::Naive => image_metric_naive(
                            &a,
                            &metric,
                            a.anchor_field(i),
                            &basis[i],
                            a.anchor_field(j),
                            &basis[j],
                        )?
                        .to_string(),
                        ImageMetricKind::Orthogonal => image_metric_orthogonal(
                            &a,
                            &metric,
                            a.anchor_field(i),
                            &basis[i],
                            a.anchor_field(j),
                            &basis[j],
                        )?
                        .to_string(),
                    };
                    row.push(text);
                }
                table.push(row);
            }
            Ok(json!({ "table": table }))
        }
        TaskDecl::QuotientMetric {
            ideal,
            fields: names,
        } => {
            let d1 = &session.fields[&names[0]];
            let d2 = &session.fields[&names[1]];
            let value = quotient_metric(d1, d2, ideal_for(session, ideal))?;
            Ok(json!({ "value": value.to_string() }))
        }
        TaskDecl::LogDerivations { ideal } => {
            let log = log_derivations(ideal_for(session, ideal))?;
            let gens: Vec<String> = log.generators()?.iter().map(|f| f.to_string()).collect();
            Ok(json!({ "generators": gens }))
        }
        TaskDecl::Cond1 { ideal } => {
            let chart = single_generator_chart(ideal_for(session, ideal))?;
            let report = cond1_check(&chart)?;
            Ok(json!({ "holds": report.holds, "witness": report.witness.to_string() }))
        }
        TaskDecl::Saito { ideal } => {
            let chart = single_generator_chart(ideal_for(session, ideal))?;
            let gens = log_derivations(ideal_for(session, ideal))?.generators()?;
            let report = saito_free_check(&gens, &chart)?;
            Ok(json!({
                "free": report.free,
                "determinant": report.determinant.to_string(),
                "unit_factor": report.unit_factor.map(|c| c.to_string()),
            }))
        }
        TaskDecl::NormalModule { ideal } => {
            let report = normal_module(ideal_for(session, ideal))?;
            let gens: Vec<String> = report.module.gens().iter().map(|v| v.to_string()).collect();
            Ok(json!({
                "generators": gens,
                "degenerate": report.degenerate,
                "matches_grad_plus_zero": report.matches_grad_plus_zero,
                "matches_grad_span": report.matches_grad_span,
                "grad_members": report.grad_members,
            }))
        }
        TaskDecl::Koszul => {
            let a = algebroid_for(session)?;
            let metric = metric_for(session, a.rank())?;
            let conn = koszul_christoffel(&a, &metric)?;
            let mut entries = Vec::new();
            for i in 0..a.rank() {
                for j in 0..a.rank() {
                    for k in 0..a.rank() {
                        let v = conn.entry(i, j, k);
                        if !v.is_zero() {
                            entries.push(json!({
                                "index": [i, j, k],
                                "value": v.to_string(),
                            }));
                        }
                    }
                }
            }
            Ok(json!({ "entries": entries }))
        }
        TaskDecl::KernelSplit => {
            let a = algebroid_for(session)?;
            let metric = metric_for(session, a.rank())?;
            let split = kernel_split(&a, &metric)?;
            let kernel: Vec<String> = split.kernel.gens().iter().map(|v| v.to_string()).collect();
            let complement: Vec<String> = split
                .complement
                .gens()
                .iter()
                .map(|v| v.to_string())
                .collect();
            Ok(json!({
                "kernel": kernel,
                "complement": complement,
                "spans": split.spans,
            }))
        }
        TaskDecl::Cohomology { dmax } => {
            check_degree_cap(*dmax, degree_cap)?;
            let a = algebroid_for(session)?;
            let m = CoefficientModule::trivial(&a, 1);
            let report =
                truncated_cohomology_ranks_up_to(&a, &m, TruncationWindow::new(*dmax), 1)?;
            let degrees: Vec<Value> = report
                .degrees
                .iter()
                .map(|d| {
                    json!({
                        "degree": d.degree,
                        "slice": d.slice_dim,
                        "kernel": d.kernel_dim,
                        "image": d.image_dim,
                        "estimate": d.betti_estimate,
                        "edge_affected": d.edge_affected,
                    })
                })
                .collect();
            Ok(json!({ "dmax": report.dmax, "degrees": degrees }))
        }
    }
}
