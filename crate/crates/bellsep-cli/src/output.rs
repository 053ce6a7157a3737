//! Report rendering: a fixed-layout text form and a JSON form.
//!
//! Every float is printed with 17 significant digits (text) or as a
//! shortest-round-trip JSON number, so repeated runs with the same inputs
//! and seeds produce byte-identical documents.

use bellsep::bell::OmegaDiagonal;
use bellsep::ensemble::{ChainAudit, CrosscheckSummary, NecessityAudit, AUDIT_SLACK};
use bellsep::matrix::ComplexMatrix;
use bellsep::separability::{SeparabilityReport, SeparableDecomposition};
use serde_json::{json, Value};

/// 17 significant digits: full f64 precision.
pub fn fmt_f(x: f64) -> String {
    format!("{x:.16e}")
}

fn fmt_list(values: &[f64]) -> String {
    values.iter().map(|&v| fmt_f(v)).collect::<Vec<_>>().join(" ")
}

fn omega_json(omega: &OmegaDiagonal) -> Value {
    let mut map = serde_json::Map::new();
    for (idx, v) in omega.iter() {
        map.insert(idx.to_string(), json!(v));
    }
    Value::Object(map)
}

fn matrix_json(m: &ComplexMatrix) -> Value {
    let rows: Vec<Value> = (0..m.dim())
        .map(|r| {
            let cols: Vec<Value> = (0..m.dim())
                .map(|c| json!([m[(r, c)].re, m[(r, c)].im]))
                .collect();
            Value::Array(cols)
        })
        .collect();
    Value::Array(rows)
}

fn matrix_lines(m: &ComplexMatrix, indent: &str) -> String {
    let mut out = String::new();
    for r in 0..m.dim() {
        out.push_str(indent);
        for c in 0..m.dim() {
            let z = m[(r, c)];
            out.push_str(&format!("({} {}i) ", fmt_f(z.re), fmt_f(z.im)));
        }
        out.pop();
        out.push('\n');
    }
    out
}

fn certificate_json(d: &SeparableDecomposition, residual: f64) -> Value {
    json!({
        "weights": d.weights(),
        "local_a": d.local_a().iter().map(matrix_json).collect::<Vec<_>>(),
        "local_b": d.local_b().iter().map(matrix_json).collect::<Vec<_>>(),
        "reconstruction_residual": residual,
    })
}

pub fn render_analyze(report: &SeparabilityReport, omega: &OmegaDiagonal, json_mode: bool) -> String {
    let residual = report
        .certificate
        .as_ref()
        .map(|d| d.reconstruct().max_abs_diff(&omega.to_density_matrix()));

    if json_mode {
        let mut doc = serde_json::Map::new();
        doc.insert("p".into(), json!(report.p));
        doc.insert("omega".into(), omega_json(omega));
        doc.insert("criterion_sum".into(), json!(report.criterion_sum));
        doc.insert("criterion_bound".into(), json!(report.criterion_bound));
        doc.insert(
            "criterion_verdict".into(),
            json!(report.criterion_verdict.to_string()),
        );
        doc.insert("ppt_spectrum".into(), json!(report.ppt_spectrum));
        doc.insert("ppt_verdict".into(), json!(report.ppt_verdict.to_string()));
        doc.insert("purity".into(), json!(report.purity));
        doc.insert(
            "certificate".into(),
            match (&report.certificate, residual) {
                (Some(d), Some(r)) => certificate_json(d, r),
                _ => Value::Null,
            },
        );
        let mut text = serde_json::to_string(&Value::Object(doc)).expect("valid JSON");
        text.push('\n');
        return text;
    }

    let mut out = String::new();
    out.push_str(&format!("p:                 {}\n", report.p));
    for (idx, v) in omega.iter() {
        out.push_str(&format!("omega[{idx}]:          {}\n", fmt_f(v)));
    }
    out.push_str(&format!(
        "criterion-sum:     {}\n",
        fmt_f(report.criterion_sum)
    ));
    out.push_str(&format!(
        "criterion-bound:   {}\n",
        fmt_f(report.criterion_bound)
    ));
    out.push_str(&format!("criterion-verdict: {}\n", report.criterion_verdict));
    out.push_str(&format!(
        "ppt-spectrum:      {}\n",
        fmt_list(&report.ppt_spectrum)
    ));
    out.push_str(&format!("ppt-verdict:       {}\n", report.ppt_verdict));
    out.push_str(&format!("purity:            {}\n", fmt_f(report.purity)));
    match (&report.certificate, residual) {
        (Some(d), Some(r)) => out.push_str(&format!(
            "certificate:       {} terms, reconstruction residual {}\n",
            d.weights().len(),
            fmt_f(r)
        )),
        _ => out.push_str("certificate:       none\n"),
    }
    out
}

pub struct DecompositionDocument<'a> {
    pub omega: &'a OmegaDiagonal,
    pub decomposition: &'a SeparableDecomposition,
    pub criterion_sum: f64,
    pub local_eigenvalues: (f64, f64),
    pub factor_spectra: Vec<Vec<f64>>,
    pub reconstruction_residual: f64,
    pub verified: bool,
}

pub fn render_decompose(doc: &DecompositionDocument, json_mode: bool) -> String {
    let d = doc.decomposition;
    if json_mode {
        let value = json!({
            "p": d.p(),
            "omega": omega_json(doc.omega),
            "criterion_sum": doc.criterion_sum,
            "local_eigenvalues": [doc.local_eigenvalues.0, doc.local_eigenvalues.1],
            "weights": d.weights(),
            "local_a": d.local_a().iter().map(matrix_json).collect::<Vec<_>>(),
            "local_b": d.local_b().iter().map(matrix_json).collect::<Vec<_>>(),
            "factor_spectra": doc.factor_spectra,
            "reconstruction_residual": doc.reconstruction_residual,
            "verified": doc.verified,
        });
        let mut text = serde_json::to_string(&value).expect("valid JSON");
        text.push('\n');
        return text;
    }

    let mut out = String::new();
    out.push_str(&format!("p:                       {}\n", d.p()));
    out.push_str(&format!(
        "criterion-sum:           {}\n",
        fmt_f(doc.criterion_sum)
    ));
    out.push_str(&format!(
        "local-eigenvalues:       {} {}\n",
        fmt_f(doc.local_eigenvalues.0),
        fmt_f(doc.local_eigenvalues.1)
    ));
    out.push_str(&format!(
        "weights:                 {}\n",
        fmt_list(d.weights())
    ));
    for (l, (a, b)) in d.local_a().iter().zip(d.local_b().iter()).enumerate() {
        out.push_str(&format!("term {} A:\n", l + 1));
        out.push_str(&matrix_lines(a, "  "));
        out.push_str(&format!(
            "term {} A eigenvalues:    {}\n",
            l + 1,
            fmt_list(&doc.factor_spectra[2 * l])
        ));
        out.push_str(&format!("term {} B:\n", l + 1));
        out.push_str(&matrix_lines(b, "  "));
        out.push_str(&format!(
            "term {} B eigenvalues:    {}\n",
            l + 1,
            fmt_list(&doc.factor_spectra[2 * l + 1])
        ));
    }
    out.push_str(&format!(
        "reconstruction-residual: {}\n",
        fmt_f(doc.reconstruction_residual)
    ));
    out.push_str(&format!(
        "verification:            {}\n",
        if doc.verified { "ok" } else { "FAILED" }
    ));
    out
}

pub fn render_crosscheck(summary: &CrosscheckSummary) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "crosscheck: p={} n={} seed={} tol={}\n",
        summary.p,
        summary.n_samples,
        summary.seed,
        fmt_f(summary.tol)
    ));
    out.push_str(&format!(
        "{:<14}{:>12}{:>12}\n",
        "verdict", "ppt", "npt"
    ));
    let rows = ["separable", "entangled", "inconclusive"];
    for (name, cells) in rows.iter().zip(summary.cells.iter()) {
        out.push_str(&format!("{name:<14}{:>12}{:>12}\n", cells[0], cells[1]));
    }
    out.push_str(&format!("boundary-count:             {}\n", summary.boundary_count));
    out.push_str(&format!(
        "off-boundary-disagreements: {}\n",
        summary.off_boundary_disagreements
    ));
    out
}

pub fn render_audit(necessity: &NecessityAudit, chain: &ChainAudit) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "audit: p={} n={} terms={} seed={} slack={}\n",
        necessity.p,
        necessity.n_samples,
        necessity.n_terms,
        necessity.seed,
        fmt_f(AUDIT_SLACK)
    ));
    out.push_str(&format!(
        "{:<22}{:>12}  {}\n",
        "inequality", "violations", "min-slack"
    ));
    out.push_str(&format!(
        "{:<22}{:>12}  {}\n",
        "moment-bound",
        chain.moment_violations,
        fmt_f(chain.moment_min_slack)
    ));
    out.push_str(&format!(
        "{:<22}{:>12}  {}\n",
        "product-bound",
        chain.product_violations,
        fmt_f(chain.product_min_slack)
    ));
    out.push_str(&format!(
        "{:<22}{:>12}  {}\n",
        "aggregate-sum-bound",
        necessity.violation_count,
        fmt_f(necessity.bound - necessity.max_sum)
    ));
    out.push_str(&format!(
        "max-aggregate-sum:  {} (bound {})\n",
        fmt_f(necessity.max_sum),
        fmt_f(necessity.bound)
    ));
    out
}
