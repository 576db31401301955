//! The subcommand implementations. Each one ingests function-spec
//! documents, runs the analysis and produces a deterministic report;
//! analyses that merely fail hypotheses still complete with exit 0.

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use serde::Serialize;
use serde_json::{json, Value};

use padic_factor::permutability::{
    commute_residual, coprime_support_check, find_affine_commutants, first_nonzero_term,
    AffineMap, CoprimeSupportOutcome,
};
use padic_factor::polygon::ModelKind;
use padic_factor::{
    check_dominates, check_ratio_condition, rule_engine, CoefficientModel, Error, Evidence,
    Hypothesis, HypothesisCheck, HypothesisKind, LogRadius, Poly, Rat, Target, TruncatedSeries,
};

use crate::doc::{FunctionSpecDoc, Metadata, ModelSpec, SeriesSpec};
use crate::report::Report;

pub struct CommandOutput {
    pub report: Report,
    pub csv: Option<String>,
}

fn load_inputs(paths: &[PathBuf]) -> Result<Vec<(String, FunctionSpecDoc)>> {
    paths
        .iter()
        .map(|p| {
            let display = p.display().to_string();
            let text = fs::read_to_string(p).with_context(|| format!("reading {display}"))?;
            let doc =
                FunctionSpecDoc::parse(&text).with_context(|| format!("parsing {display}"))?;
            Ok((display, doc))
        })
        .collect()
}

#[derive(Serialize, Clone)]
struct RadiusRow {
    component: String,
    t: Rat,
    log_max_modulus: Rat,
    mu: usize,
    nu: usize,
    in_open_disk: usize,
    in_closed_disk: usize,
    on_circle: usize,
}

fn radius_rows(
    report: &mut Report,
    input: usize,
    component: &str,
    model: &CoefficientModel,
    ts: &[Rat],
) -> Vec<RadiusRow> {
    let mut rows = Vec::new();
    for t in ts {
        let lr = LogRadius(t.clone());
        match model.max_modulus_log(&lr) {
            Ok(pt) => rows.push(RadiusRow {
                component: component.to_string(),
                t: t.clone(),
                log_max_modulus: pt.value,
                mu: pt.mu,
                nu: pt.nu,
                in_open_disk: pt.mu,
                in_closed_disk: pt.nu,
                on_circle: pt.nu - pt.mu,
            }),
            Err(e @ Error::InsufficientPrefix { .. }) => {
                report.warn(input, format!("{component}: t = {t}: {e}"));
            }
            Err(e) => report.warn(input, format!("{component}: t = {t}: {e}")),
        }
    }
    rows
}

fn csv_table(rows: &[(usize, RadiusRow)]) -> String {
    let mut out = String::from(
        "input,component,t,log_max_modulus,mu,nu,in_open_disk,in_closed_disk,on_circle\n",
    );
    for (input, r) in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            input,
            r.component,
            r.t,
            r.log_max_modulus,
            r.mu,
            r.nu,
            r.in_open_disk,
            r.in_closed_disk,
            r.on_circle
        ));
    }
    out
}

pub fn run_polygon(paths: &[PathBuf], ts: &[Rat], up_to: usize, csv: bool) -> Result<CommandOutput> {
    let inputs = load_inputs(paths)?;
    let mut report = Report::new("polygon");
    report.option("t", ts);
    report.option("up_to", up_to);
    let mut results = Vec::new();
    let mut all_rows: Vec<(usize, RadiusRow)> = Vec::new();

    for (i, (path, doc)) in inputs.iter().enumerate() {
        report.push_input(path, doc.clone());
        let mut components_out = Vec::new();
        for (label, model) in doc.components()? {
            // clamp the hull window to what a prefix model can state
            let cap = match model.known_prefix_end() {
                Some(end) => up_to.min(end),
                None => up_to,
            };
            let hull = match model.newton_polygon(cap) {
                Ok(hull) => serde_json::to_value(&hull)?,
                Err(e) => {
                    report.warn(i, format!("{label}: polygon: {e}"));
                    Value::Null
                }
            };
            let rows = radius_rows(&mut report, i, &label, &model, ts);
            all_rows.extend(rows.iter().cloned().map(|r| (i, r)));
            components_out.push(json!({
                "component": label,
                "newton_polygon": hull,
                "radii": rows,
            }));
        }
        results.push(json!({ "input": i, "components": components_out }));
    }
    report.results = Value::Array(results);
    let csv = csv.then(|| csv_table(&all_rows));
    Ok(CommandOutput { report, csv })
}

pub fn run_zeros(paths: &[PathBuf], ts: &[Rat], csv: bool) -> Result<CommandOutput> {
    let inputs = load_inputs(paths)?;
    let mut report = Report::new("zeros");
    report.option("t", ts);
    let mut results = Vec::new();
    let mut all_rows: Vec<(usize, RadiusRow)> = Vec::new();

    for (i, (path, doc)) in inputs.iter().enumerate() {
        report.push_input(path, doc.clone());
        let mut components_out = Vec::new();
        for (label, model) in doc.components()? {
            let rows = radius_rows(&mut report, i, &label, &model, ts);
            all_rows.extend(rows.iter().cloned().map(|r| (i, r)));
            components_out.push(json!({ "component": label, "radii": rows }));
        }
        results.push(json!({ "input": i, "components": components_out }));
    }
    report.results = Value::Array(results);
    let csv = csv.then(|| csv_table(&all_rows));
    Ok(CommandOutput { report, csv })
}

pub fn parse_assumed_hypothesis(s: &str) -> Result<HypothesisKind> {
    match s {
        "poles-simple-except-finitely" => Ok(HypothesisKind::PolesSimpleExceptFinitely),
        "multiple-zeros-finite" | "multiple-zeros-finite-for-every-beta" => {
            Ok(HypothesisKind::MultipleZerosFiniteForEveryBeta)
        }
        "at-most-one-multiple-zero" | "at-most-one-multiple-zero-per-beta" => {
            Ok(HypothesisKind::AtMostOneMultipleZeroPerBeta)
        }
        "finitely-many-poles" => Ok(HypothesisKind::FinitelyManyPoles),
        "dominates" => Ok(HypothesisKind::Dominates),
        other => {
            if let Some(n) = other.strip_prefix("ratio-condition=") {
                let n0: usize = n
                    .parse()
                    .with_context(|| format!("invalid ratio-condition start index {n:?}"))?;
                return Ok(HypothesisKind::RatioCondition { n0 });
            }
            bail!(
                "unknown hypothesis {other:?}; expected one of poles-simple-except-finitely, \
                 multiple-zeros-finite, at-most-one-multiple-zero, finitely-many-poles, \
                 dominates, ratio-condition=N"
            )
        }
    }
}

pub fn run_certify(paths: &[PathBuf], scan_to: usize, assume: &[String]) -> Result<CommandOutput> {
    let assumed_kinds: Vec<HypothesisKind> = assume
        .iter()
        .map(|s| parse_assumed_hypothesis(s))
        .collect::<Result<_>>()?;

    let inputs = load_inputs(paths)?;
    let mut report = Report::new("certify");
    report.option("scan_to", scan_to);
    report.option("assume", assume);
    let mut results = Vec::new();

    for (i, (path, doc)) in inputs.iter().enumerate() {
        report.push_input(path, doc.clone());
        let subject = doc.subject()?;
        let mut hypotheses: Vec<Hypothesis> = Vec::new();
        let mut failed: Vec<Value> = Vec::new();

        match check_ratio_condition(subject.numerator(), scan_to) {
            HypothesisCheck::Established(h) => hypotheses.push(h.on(Target::Numerator)),
            HypothesisCheck::Failed { reason } => {
                failed.push(json!({"target": "numerator", "kind": "ratio_condition", "reason": reason}));
            }
        }
        if subject.denominator().is_transcendental() {
            match check_ratio_condition(subject.denominator(), scan_to) {
                HypothesisCheck::Established(h) => hypotheses.push(h.on(Target::Denominator)),
                HypothesisCheck::Failed { reason } => {
                    failed.push(json!({"target": "denominator", "kind": "ratio_condition", "reason": reason}));
                }
            }
            match check_dominates(subject.numerator(), subject.denominator()) {
                Ok(HypothesisCheck::Established(h)) => hypotheses.push(h),
                Ok(HypothesisCheck::Failed { reason }) => {
                    failed.push(json!({"target": "subject", "kind": "dominates", "reason": reason}));
                }
                Err(e) => {
                    report.warn(i, format!("dominates check: {e}"));
                }
            }
        }
        for kind in &assumed_kinds {
            report.warn(
                i,
                format!("assumed hypothesis injected by --assume: {kind:?}"),
            );
            hypotheses.push(Hypothesis::new(kind.clone(), Evidence::Assumed));
        }

        match rule_engine(&subject, &hypotheses) {
            Ok(certs) => {
                for c in &certs {
                    let mut v = serde_json::to_value(c)?;
                    v.as_object_mut()
                        .expect("certificate object")
                        .insert("input".into(), json!(i));
                    report.certificates.push(v);
                }
                results.push(json!({
                    "input": i,
                    "subject": if subject.is_entire() { "entire" } else { "quotient" },
                    "growth": subject.numerator().growth_classify(),
                    "hypotheses": hypotheses,
                    "failed_hypotheses": failed,
                    "certificate_count": certs.len(),
                }));
            }
            Err(Error::NotTranscendental) => {
                results.push(json!({
                    "input": i,
                    "subject": if subject.is_entire() { "entire" } else { "quotient" },
                    "growth": subject.numerator().growth_classify(),
                    "refusal": "not_transcendental",
                    "hypotheses": hypotheses,
                    "failed_hypotheses": failed,
                }));
            }
            Err(e) => return Err(e).context("rule engine"),
        }
    }
    report.results = Value::Array(results);
    Ok(CommandOutput { report, csv: None })
}

pub fn run_family(
    prime: u64,
    n: u32,
    v_alpha: &Rat,
    v_beta: &Rat,
    name: Option<&str>,
) -> Result<String> {
    // validates the ordering 0 < v_alpha < v_beta and N >= 3
    let p = padic_factor::Prime::new(prime).with_context(|| format!("{prime} is not prime"))?;
    padic_factor::build_family_pair(p, n, v_alpha, v_beta)?;
    let doc = FunctionSpecDoc {
        prime,
        metadata: name.map(|name| Metadata {
            name: Some(name.to_string()),
            description: None,
        }),
        model: None,
        series: None,
        meromorphic: Some(crate::doc::MeromorphicSpec {
            numerator: ModelSpec::Prop214Family {
                n,
                v_alpha: v_alpha.clone(),
            },
            denominator: ModelSpec::Prop214Family {
                n,
                v_alpha: v_beta.clone(),
            },
        }),
    };
    let mut out = serde_json::to_string_pretty(&doc)?;
    out.push('\n');
    Ok(out)
}

pub enum CommuteMode {
    Affine(AffineMap),
    Poly(Poly),
    Search,
}

pub fn run_commute(
    paths: &[PathBuf],
    mode: &CommuteMode,
    order: Option<usize>,
    degree_bound: usize,
) -> Result<CommandOutput> {
    let inputs = load_inputs(paths)?;
    let mut report = Report::new("commute");
    report.option("degree_bound", degree_bound);
    if let Some(order) = order {
        report.option("order", order);
    }
    let mut results = Vec::new();

    for (i, (path, doc)) in inputs.iter().enumerate() {
        report.push_input(path, doc.clone());
        let series: TruncatedSeries = doc
            .to_series()?
            .with_context(|| format!("{path}: the commute command needs a `series` document"))?;
        let order = order.unwrap_or_else(|| series.order());
        let mut warn_sensitive = |p: &Poly, report: &mut Report| {
            if !p.coeff(0).is_zero() {
                report.warn(
                    i,
                    format!(
                        "inner map has a nonzero constant term: the residual is a property \
                         of the truncated representative at order {order}"
                    ),
                );
            }
        };
        match mode {
            CommuteMode::Affine(map) => {
                let p = map.to_poly();
                warn_sensitive(&p, &mut report);
                results.push(residual_result(i, &series, &p, order)?);
            }
            CommuteMode::Poly(p) => {
                warn_sensitive(p, &mut report);
                results.push(residual_result(i, &series, p, order)?);
            }
            CommuteMode::Search => {
                let commutants = find_affine_commutants(&series, order)?;
                let outcome = coprime_support_check(&series, order, degree_bound)?;
                if let CoprimeSupportOutcome::HypothesisNotMet { reason } = &outcome {
                    report.warn(i, format!("coprime support hypothesis not met: {reason}"));
                }
                results.push(json!({
                    "input": i,
                    "mode": "search",
                    "order": order,
                    "affine_commutants": commutants,
                    "coprime_support_check": outcome,
                    "degree_bound": degree_bound,
                }));
            }
        }
    }
    report.results = Value::Array(results);
    Ok(CommandOutput { report, csv: None })
}

fn residual_result(
    input: usize,
    series: &TruncatedSeries,
    p: &Poly,
    order: usize,
) -> Result<Value> {
    let residual = commute_residual(series, p, order)?;
    let first = first_nonzero_term(&residual);
    Ok(json!({
        "input": input,
        "mode": "residual",
        "order": order,
        "map": p.coeffs(),
        "residual_zero": first.is_none(),
        "first_nonzero": first.map(|(degree, value)| json!({
            "degree": degree,
            "value": value,
        })),
    }))
}

/// Shared helper for callers that need the coefficient models of a
/// document keyed by component label.
pub fn component_map(doc: &FunctionSpecDoc) -> Result<BTreeMap<String, CoefficientModel>> {
    Ok(doc.components()?.into_iter().collect())
}

/// True when a model is a polynomial-kind model (used by reporting).
pub fn is_polynomial_model(model: &CoefficientModel) -> bool {
    matches!(model.kind(), ModelKind::Poly(_))
}

pub fn parse_series_doc(prime: u64, order: usize, coeffs: Vec<Rat>) -> Result<FunctionSpecDoc> {
    let doc = FunctionSpecDoc {
        prime,
        metadata: None,
        model: None,
        series: Some(SeriesSpec {
            prime,
            order,
            coeffs,
        }),
        meromorphic: None,
    };
    doc.validate()?;
    Ok(doc)
}
