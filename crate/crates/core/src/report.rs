//! Deterministic JSON reports for each front-end command.

use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::algebra::{Algebra, ProjMatrix};
use crate::error::{Error, Result};
use crate::format::{expectation_met, parse_projmatrix, AlgebraFile};
use crate::higher::{cross_check, detect_n, is_von_neumann_regular, n_cokernel, transpose, NAbelianVerdict, VerdictKind};
use crate::homological::{domdim, gldim, grade, minimal_resolution, pdim};
use crate::linalg::ExactMatrix;
use crate::repr::Representation;

pub const DEFAULT_CAP: usize = 11;
pub const DEFAULT_SEED: u64 = 0;
pub const DEFAULT_SAMPLES: usize = 200;

/// A report body with sorted keys. Timings are kept aside so that the
/// default output is byte-identical across runs.
#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub exit_code: i32,
    body: Map<String, Value>,
    timings: Vec<(String, f64)>,
}

impl Report {
    pub fn new(command: &str, id: &str, file: &AlgebraFile) -> Report {
        let alg = &file.algebra;
        let mut r = Report { command: command.to_string(), exit_code: 0, body: Map::new(), timings: Vec::new() };
        r.set("command", command);
        r.set("algebra", id);
        r.set("field", alg.field().to_string());
        r.set("dimension", alg.dim());
        r.set("vertices", alg.quiver().vertices());
        r
    }

    pub fn set(&mut self, key: &str, value: impl Serialize) {
        let value = serde_json::to_value(value).expect("report values serialize");
        self.body.insert(key.to_string(), value);
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.body.get(key)
    }

    pub fn fail(&mut self) {
        self.exit_code = self.exit_code.max(1);
    }

    pub fn timed<T>(&mut self, section: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.timings.push((section.to_string(), start.elapsed().as_secs_f64() * 1000.0));
        out
    }

    pub fn to_value(&self, timings: bool) -> Value {
        let mut body = self.body.clone();
        body.insert("status".into(), json!(if self.exit_code == 0 { "ok" } else { "failed" }));
        if timings {
            let t: Map<String, Value> = self.timings.iter().map(|(k, ms)| (k.clone(), json!(ms))).collect();
            body.insert("timings_ms".into(), Value::Object(t));
        }
        Value::Object(body)
    }

    pub fn to_json(&self, timings: bool) -> String {
        serde_json::to_string_pretty(&self.to_value(timings)).expect("json")
    }
}

pub fn matrix_json(m: &ExactMatrix) -> Value {
    json!(m.row_vectors().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>()).collect::<Vec<_>>())
}

pub fn module_json(m: &Representation) -> Value {
    let alg = m.algebra();
    let maps: Map<String, Value> =
        alg.quiver().arrows().iter().enumerate().map(|(k, a)| (a.label.clone(), matrix_json(m.map(k)))).collect();
    json!({ "dims": m.dims(), "maps": maps })
}

fn vertex_labels(alg: &Algebra, vs: &[usize]) -> Vec<String> {
    vs.iter().map(|&v| alg.quiver().vertices()[v].clone()).collect()
}

fn verdict_json(v: &NAbelianVerdict) -> Value {
    json!({
        "result": v.result.to_string(),
        "gldim": v.gldim.to_string(),
        "domdim": v.domdim.to_string(),
        "cap": v.cap,
        "reason": v.reason,
    })
}

/// Compares `expect` lines of the file, failing the report on a mismatch.
fn record_expectations(report: &mut Report, file: &AlgebraFile, computed: &[(&str, String)]) {
    let mut rows = Vec::new();
    for (key, value) in computed {
        if let Some(expected) = file.expect.get(*key) {
            let met = expectation_met(expected, value);
            if !met {
                report.fail();
            }
            rows.push(json!({ "key": key, "expected": expected, "computed": value, "met": met }));
        }
    }
    report.set("expectations", rows);
}

pub fn validate_report(id: &str, file: &AlgebraFile) -> Report {
    let mut r = Report::new("validate", id, file);
    let alg = &file.algebra;
    let arrows: Vec<Value> = alg
        .quiver()
        .arrows()
        .iter()
        .map(|a| json!([a.label, alg.quiver().vertices()[a.source], alg.quiver().vertices()[a.target]]))
        .collect();
    r.set("arrows", arrows);
    r.set("relations", alg.relations().relations().len());
    r.set("basis", (0..alg.dim()).map(|k| alg.basis_label(k)).collect::<Vec<_>>());
    let modules: Map<String, Value> = file.modules.iter().map(|(n, m)| (n.clone(), json!(m.dims()))).collect();
    r.set("modules", modules);
    r
}

pub fn invariants_report(id: &str, file: &AlgebraFile, cap: usize) -> Report {
    let mut r = Report::new("invariants", id, file);
    let alg = &file.algebra;
    let g = r.timed("gldim", || gldim(alg, cap));
    let gop = r.timed("gldim_op", || gldim(&alg.opposite(), cap));
    let d = r.timed("domdim", || domdim(alg, cap));
    r.set("cap", cap);
    r.set("gldim", g.to_string());
    r.set("gldim_op", gop.to_string());
    r.set("domdim", d.to_string());
    r.set("von_neumann_regular", is_von_neumann_regular(alg));
    let simples: Map<String, Value> = (0..alg.num_vertices())
        .map(|v| {
            let s = Representation::simple(alg, v);
            let label = format!("S({})", alg.quiver().vertices()[v]);
            (label, json!({ "pdim": pdim(&s, cap).to_string(), "grade": grade(&s, cap).to_string() }))
        })
        .collect();
    r.set("simples", simples);
    let modules: Map<String, Value> = file
        .modules
        .iter()
        .map(|(n, m)| (n.clone(), json!({ "pdim": pdim(m, cap).to_string(), "grade": grade(m, cap).to_string() })))
        .collect();
    r.set("modules", modules);
    if g != gop {
        r.fail();
    }
    record_expectations(&mut r, file, &[("dimension", alg.dim().to_string()), ("gldim", g.to_string()), ("domdim", d.to_string())]);
    r
}

pub fn detect_report(id: &str, file: &AlgebraFile, cap: usize) -> Report {
    let mut r = Report::new("detect", id, file);
    let v = r.timed("detect", || detect_n(&file.algebra, cap));
    r.set("verdict", verdict_json(&v));
    record_expectations(
        &mut r,
        file,
        &[
            ("dimension", file.algebra.dim().to_string()),
            ("gldim", v.gldim.to_string()),
            ("domdim", v.domdim.to_string()),
            ("verdict", v.result.to_string()),
        ],
    );
    r
}

/// The `n` whose axioms a verdict is tested against by default.
pub fn default_n(v: &NAbelianVerdict) -> usize {
    match v.result {
        VerdictKind::ExactlyN(n) => n,
        _ => 1,
    }
}

pub fn check_report(id: &str, file: &AlgebraFile, n: usize, seed: u64, samples: usize, cap: usize) -> Result<Report> {
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    let mut r = Report::new("check", id, file);
    let v = r.timed("detect", || detect_n(&file.algebra, cap));
    let cc = r.timed("cross_check", || cross_check(&file.algebra, &v, n, seed, samples));
    r.set("verdict", verdict_json(&v));
    r.set("n", n);
    r.set("seed", seed);
    r.set("samples", samples);
    r.set("checks", &cc.checks);
    r.set("fatal", cc.fatal());
    if !cc.all_passed() {
        r.fail();
    }
    Ok(r)
}

pub fn resolve_report(id: &str, file: &AlgebraFile, module: &str, length: usize) -> Result<Report> {
    let m = file.module(module)?;
    let mut r = Report::new("resolve", id, file);
    let res = r.timed("resolve", || minimal_resolution(&m, length));
    let alg = &file.algebra;
    r.set("module", module);
    r.set("length", length);
    r.set("complete", res.complete);
    r.set("terms", res.terms.iter().map(|t| vertex_labels(alg, t)).collect::<Vec<_>>());
    r.set("differentials", res.differentials.iter().map(ToString::to_string).collect::<Vec<_>>());
    r.set("pdim", if res.complete { json!(res.length()) } else { json!(format!("AboveCap({length})")) });
    Ok(r)
}

pub fn transpose_report(id: &str, file: &AlgebraFile, module: &str) -> Result<Report> {
    let m = file.module(module)?;
    let mut r = Report::new("transpose", id, file);
    let tr = r.timed("transpose", || transpose(&m));
    r.set("module", module);
    r.set("presentation", tr.presentation.to_string());
    r.set("dual_presentation", tr.dual_presentation.to_string());
    r.set("transpose", module_json(&tr.module));
    Ok(r)
}

pub fn ncokernel_report(id: &str, file: &AlgebraFile, spec: &str, n: usize) -> Result<Report> {
    let f: ProjMatrix = parse_projmatrix(&file.algebra, spec)?;
    let mut r = Report::new("ncokernel", id, file);
    r.set("map", f.to_string());
    r.set("n", n);
    match r.timed("ncokernel", || n_cokernel(&f, n)) {
        Ok(seq) => {
            r.set("exceeds_length", false);
            r.set("maps", seq.maps().iter().map(ToString::to_string).collect::<Vec<_>>());
            r.set("objects", seq.objects().iter().map(|o| vertex_labels(&file.algebra, o)).collect::<Vec<_>>());
        }
        Err(Error::ResolutionExceedsLength(_)) => r.set("exceeds_length", true),
        Err(e) => return Err(e),
    }
    Ok(r)
}

/// Verdict, expectations and the full cross-check at the verdict's `n`.
/// Fails on a mismatched expectation or a fatal check.
pub fn selftest_report(id: &str, file: &AlgebraFile, seed: u64, samples: usize, cap: usize) -> Report {
    let mut r = Report::new("selftest", id, file);
    let alg = &file.algebra;
    let v = r.timed("detect", || detect_n(alg, cap));
    let gop = r.timed("gldim_op", || gldim(&alg.opposite(), cap));
    let n = default_n(&v);
    let cc = r.timed("cross_check", || cross_check(alg, &v, n, seed, samples));
    r.set("verdict", verdict_json(&v));
    r.set("gldim_op", gop.to_string());
    r.set("n", n);
    r.set("seed", seed);
    r.set("samples", samples);
    r.set("checks", &cc.checks);
    r.set("fatal", cc.fatal());
    if cc.fatal() {
        r.fail();
    }
    record_expectations(
        &mut r,
        file,
        &[
            ("dimension", alg.dim().to_string()),
            ("gldim", v.gldim.to_string()),
            ("domdim", v.domdim.to_string()),
            ("verdict", v.result.to_string()),
        ],
    );
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::load_corpus;

    #[test]
    fn keys_are_sorted_and_timings_optional() {
        let file = load_corpus("auslander_kx2").unwrap().parse();
        let r = detect_report("auslander_kx2", &file, DEFAULT_CAP);
        let text = r.to_json(false);
        assert!(!text.contains("timings_ms"));
        assert!(r.to_json(true).contains("timings_ms"));
        let value = r.to_value(false);
        let keys: Vec<&String> = value.as_object().unwrap().keys().collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!(r.get("verdict").unwrap()["result"], "ExactlyN(1)");
        assert_eq!(r.exit_code, 0);
    }

    #[test]
    fn check_on_a2_fails_with_s1() {
        let file = load_corpus("a2_hereditary").unwrap().parse();
        let r = check_report("a2_hereditary", &file, 1, 0, 20, DEFAULT_CAP).unwrap();
        assert_eq!(r.exit_code, 1);
        let checks = r.get("checks").unwrap().as_array().unwrap();
        let tf = checks.iter().find(|c| c["name"] == "pdim_one_torsion_free").unwrap();
        assert_eq!(tf["witness"], "S(1)");
        assert_eq!(r.get("fatal").unwrap(), false);
    }

    #[test]
    fn ncokernel_reports_long_resolution() {
        let file = load_corpus("nakayama_x2").unwrap().parse();
        let r = ncokernel_report("nakayama_x2", &file, "P(1)->P(1): [[x]]", 2).unwrap();
        assert_eq!(r.get("exceeds_length").unwrap(), true);
        assert_eq!(r.exit_code, 0);
    }

    #[test]
    fn resolve_and_transpose() {
        let file = load_corpus("a2_hereditary").unwrap().parse();
        let r = resolve_report("a2", &file, "S1", 3).unwrap();
        assert_eq!(r.get("differentials").unwrap()[0], "P(2)->P(1): [[a]]");
        assert_eq!(r.get("pdim").unwrap(), 1);
        let t = transpose_report("a2", &file, "S(1)").unwrap();
        assert_eq!(t.get("transpose").unwrap()["dims"], json!([0, 1]));
        assert!(resolve_report("a2", &file, "nope", 2).is_err());
    }
}
