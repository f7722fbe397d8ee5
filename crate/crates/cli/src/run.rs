use std::fmt::Write as _;
use std::path::Path;

use eirep_core::algebra::{analyze, radical, radical_series};
use eirep_core::oracle::{count_indecomposables, CountOptions, DEFAULT_BUDGET};
use eirep_core::reptype::{classify, classify_coprime, coprime_field, ClassifyOptions, OracleMode, Verdict};
use eirep_core::{category_algebra, endotrivialize, Field, FiniteCategory, RepSystem};
use serde::Serialize;
use serde_json::{json, Value};

use crate::Command;

#[derive(Clone, Copy, Debug)]
pub enum FieldChoice {
    Unset,
    CoprimeAuto,
    Fixed { p: u32, k: u32 },
}

pub struct Request {
    pub command: Command,
    pub field: FieldChoice,
    pub dims: Option<Vec<usize>>,
    pub budget: Option<u128>,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct FieldInfo {
    pub p: u32,
    pub k: u32,
    pub coprime_auto: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub seed: u64,
    pub input: String,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldInfo>,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip)]
    text: String,
}

impl Report {
    pub fn human(&self) -> String {
        let mut s = format!("== {} ({}) ==\n", self.input, self.command);
        if let Some(f) = &self.field {
            let auto = if f.coprime_auto { ", chosen for characteristic 0" } else { "" };
            let _ = writeln!(s, "field: F_{}^{}{auto}", f.p, f.k);
        }
        match &self.error {
            Some(e) => {
                let _ = writeln!(s, "error: {e}");
            }
            None => s.push_str(&self.text),
        }
        s
    }
}

fn command_name(c: Command) -> String {
    use clap::ValueEnum;
    c.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
}

fn field_for(req: &Request, c: &FiniteCategory) -> Result<(Field, FieldInfo), String> {
    match req.field {
        FieldChoice::Unset => Err("this command needs --char".into()),
        FieldChoice::Fixed { p, k } => {
            let f = Field::new(p, k).map_err(|e| e.to_string())?;
            Ok((f, FieldInfo { p, k, coprime_auto: false }))
        }
        FieldChoice::CoprimeAuto => {
            c.require_ei().map_err(|e| e.to_string())?;
            let (skel, _) = c.skeletalize();
            let f = coprime_field(&skel).map_err(|e| e.to_string())?;
            let spec = f.spec();
            Ok((f, FieldInfo { p: spec.p, k: spec.k, coprime_auto: true }))
        }
    }
}

type Outcome = Result<(Value, String), String>;

pub fn run_one(req: &Request, path: &Path) -> Report {
    let mut report = Report {
        tool: "eirep",
        version: env!("CARGO_PKG_VERSION"),
        seed: req.seed,
        input: path.display().to_string(),
        command: command_name(req.command),
        field: None,
        result: Value::Null,
        error: None,
        text: String::new(),
    };
    let outcome = std::fs::read_to_string(path)
        .map_err(|e| e.to_string())
        .and_then(|text| FiniteCategory::from_json(&text).map_err(|e| e.to_string()))
        .and_then(|c| dispatch(req, &c, &mut report.field));
    match outcome {
        Ok((v, t)) => {
            report.result = v;
            report.text = t;
        }
        Err(e) => report.error = Some(e),
    }
    report
}

fn dispatch(req: &Request, c: &FiniteCategory, field: &mut Option<FieldInfo>) -> Outcome {
    let mut with_field = || -> Result<Field, String> {
        let (f, info) = field_for(req, c)?;
        *field = Some(info);
        Ok(f)
    };
    match req.command {
        Command::Validate => validate(c),
        Command::Ei => ei(c),
        Command::Endotrivialize => endotrivial(c),
        Command::Poset => poset(c),
        Command::Algebra => algebra(c, &with_field()?),
        Command::Radical => radical_report(c, &with_field()?),
        Command::Idempotents => idempotents(c, &with_field()?),
        Command::Quiver => quiver(c, &with_field()?),
        Command::Classify => {
            let f = with_field()?;
            classify_report(req, c, &f)
        }
        Command::OracleCount => oracle_count(req, c, &with_field()?),
        Command::Bundle => Err("bundle takes an output directory".into()),
    }
}

fn validate(c: &FiniteCategory) -> Outcome {
    let text = format!("valid: {} objects, {} morphisms\n", c.object_count(), c.morphism_count());
    Ok((json!({ "valid": true, "objects": c.object_count(), "morphisms": c.morphism_count() }), text))
}

fn ei(c: &FiniteCategory) -> Outcome {
    Ok(match c.require_ei() {
        Ok(()) => (json!({ "ei": true }), "EI: yes\n".into()),
        Err(e) => (json!({ "ei": false, "reason": e.to_string() }), format!("EI: no ({e})\n")),
    })
}

fn endotrivial(c: &FiniteCategory) -> Outcome {
    let (skel, _) = c.skeletalize();
    let e = endotrivialize(&skel).map_err(|e| e.to_string())?;
    let q = &e.quotient;
    let mut text = format!("quotient: {} objects, {} morphisms\n", q.object_count(), q.morphism_count());
    for x in 0..q.object_count() {
        for y in 0..q.object_count() {
            if x != y && !q.hom(x, y).is_empty() {
                let ids: Vec<&str> = q.hom(x, y).iter().map(|&f| q.morphism_id(f)).collect();
                let _ = writeln!(text, "  {} -> {}: {}", q.object_id(x), q.object_id(y), ids.join(", "));
            }
        }
    }
    let classes: Vec<(String, String)> = (0..skel.morphism_count())
        .map(|f| (skel.morphism_id(f).to_string(), q.morphism_id(e.functor.morphisms[f]).to_string()))
        .collect();
    Ok((json!({ "quotient": q.to_raw(), "classes": classes }), text))
}

fn poset(c: &FiniteCategory) -> Outcome {
    let (skel, _) = c.skeletalize();
    let p = skel.object_poset().map_err(|e| e.to_string())?;
    let edges: Vec<(String, String)> =
        p.hasse_edges().into_iter().map(|(a, b)| (p.elements()[a].clone(), p.elements()[b].clone())).collect();
    let mut text = format!("elements: {}\n", p.elements().join(", "));
    for (a, b) in &edges {
        let _ = writeln!(text, "  {a} < {b}");
    }
    Ok((json!({ "elements": p.elements(), "hasse": edges, "chain": p.is_chain() }), text))
}

fn algebra(c: &FiniteCategory, f: &Field) -> Outcome {
    let a = category_algebra(c, f);
    let text = format!("dimension: {}\n", a.dim());
    Ok((serde_json::to_value(a.to_json()).expect("serializable"), text))
}

fn radical_report(c: &FiniteCategory, f: &Field) -> Outcome {
    let a = category_algebra(c, f);
    let r = radical(&a).map_err(|e| e.to_string())?;
    let series: Vec<usize> = radical_series(&a, &r).iter().map(|s| s.dim()).collect();
    let loewy = series.iter().filter(|&&d| d > 0).count() + 1;
    let text = format!("radical dimension: {}\nradical layers: {series:?}\nLoewy length: {loewy}\n", r.dim());
    Ok((json!({ "dim": a.dim(), "radical_dim": r.dim(), "series": series, "loewy_length": loewy }), text))
}

fn idempotents(c: &FiniteCategory, f: &Field) -> Outcome {
    let an = analyze(&category_algebra(c, f)).map_err(|e| e.to_string())?;
    let d = &an.decomposition;
    let mut text = format!("{} primitive idempotents, {} simple classes\n", d.idempotents.len(), d.class_count);
    for (l, k) in d.labels.iter().zip(&d.classes) {
        let _ = writeln!(text, "  {l} (class {k})");
    }
    Ok((json!({ "decomposition": d.report(), "extended_to": an.extended_to }), text))
}

fn quiver(c: &FiniteCategory, f: &Field) -> Outcome {
    let an = analyze(&category_algebra(c, f)).map_err(|e| e.to_string())?;
    let q = &an.quiver;
    let mut text = format!("vertices: {}\n", q.vertices.join(", "));
    for (i, row) in q.arrows.iter().enumerate() {
        for (j, &m) in row.iter().enumerate() {
            if m > 0 {
                let _ = writeln!(text, "  {} -> {} x{m}", q.vertices[i], q.vertices[j]);
            }
        }
    }
    let _ = writeln!(text, "Loewy length: {}", an.loewy_length);
    let v = json!({
        "vertices": q.vertices,
        "arrows": q.arrows,
        "loewy_length": an.loewy_length,
        "extended_to": an.extended_to,
    });
    Ok((v, text))
}

fn classify_report(req: &Request, c: &FiniteCategory, f: &Field) -> Outcome {
    let mut opts = ClassifyOptions::default();
    if let Some(budget) = req.budget {
        opts.oracle = OracleMode::Auto { budget };
    }
    let v = match req.field {
        FieldChoice::CoprimeAuto => classify_coprime(c, &opts),
        _ => classify(c, f, &opts),
    }
    .map_err(|e| e.to_string())?;
    let verdict = match v.verdict {
        Verdict::Finite => "finite",
        Verdict::Infinite => "infinite",
        Verdict::Unknown => "unknown",
    };
    let mut text = format!("verdict: {verdict}\n");
    if let Some(cert) = v.certificate() {
        let _ = writeln!(text, "rule: {} ({})", cert.rule, cert.summary);
    }
    for cert in v.supporting.iter().filter(|s| Some(s.rule) != v.rule) {
        let _ = writeln!(text, "  also {}: {:?}, {}", cert.rule, cert.verdict, cert.summary);
    }
    if v.verdict == Verdict::Unknown {
        for a in &v.attempted {
            let _ = writeln!(text, "  {}: {}", a.rule, a.reason);
        }
    }
    if v.conflict {
        text.push_str("warning: rules disagree\n");
    }
    Ok((serde_json::to_value(&v).expect("serializable"), text))
}

fn oracle_count(req: &Request, c: &FiniteCategory, f: &Field) -> Outcome {
    let dims = req.dims.as_ref().ok_or("oracle-count needs --dim")?;
    let sys = RepSystem::from_category(c);
    let opts = CountOptions { budget: req.budget.unwrap_or(DEFAULT_BUDGET), ..CountOptions::default() };
    let r = count_indecomposables(&sys, f, dims, &opts).map_err(|e| e.to_string())?;
    let text = format!(
        "indecomposables of dimension {:?}: {}\nrepresentations: {}\n",
        dims, r.indecomposable_classes, r.total_reps
    );
    Ok((serde_json::to_value(&r).expect("serializable"), text))
}
