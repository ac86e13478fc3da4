//! Line-oriented text format for algebras, modules and maps.
//!
//! ```text
//! # comment
//! field Q                 # or: field F 5
//! vertex 1 2
//! arrow a 1 2
//! arrow b 2 1
//! relation a*b            # terms: [coeff*]arr*arr*..., joined by + or -
//! module M
//! dim 1 1
//! map a [[1]]             # dims(source) x dims(target), rows are row vectors
//! expect gldim 2          # dimension | gldim | domdim | verdict
//! ```

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::{Algebra, Element, ProjMatrix, Quiver, Relation, RelationSet, DEFAULT_DEGREE_CAP};
use crate::error::{Error, Result};
use crate::linalg::{ExactMatrix, FieldSpec, Scalar};
use crate::repr::Representation;

#[derive(Clone, Debug)]
pub struct AlgebraFile {
    pub algebra: Arc<Algebra>,
    /// Module blocks in file order.
    pub modules: Vec<(String, Representation)>,
    pub expect: BTreeMap<String, String>,
}

impl AlgebraFile {
    /// A module block by name, or a standard module `S(v)`, `P(v)`, `I(v)`.
    pub fn module(&self, name: &str) -> Result<Representation> {
        if let Some((_, m)) = self.modules.iter().find(|(n, _)| n == name) {
            return Ok(m.clone());
        }
        let standard = |prefix: char| {
            name.strip_prefix(prefix)
                .and_then(|r| r.strip_prefix('('))
                .and_then(|r| r.strip_suffix(')'))
        };
        for (prefix, make) in [
            ('S', Representation::simple as fn(&Arc<Algebra>, usize) -> Representation),
            ('P', Representation::projective),
            ('I', Representation::injective),
        ] {
            if let Some(label) = standard(prefix) {
                let v = self.algebra.quiver().vertex_index(label)?;
                return Ok(make(&self.algebra, v));
            }
        }
        Err(Error::InvalidModule(format!("no module named `{name}`")))
    }
}

/// Whether a computed value satisfies an `expect` line: equal, or equal up
/// to a parenthesised argument (`AboveCap` matches `AboveCap(11)`).
pub fn expectation_met(expected: &str, computed: &str) -> bool {
    expected == computed || computed.strip_prefix(expected).is_some_and(|rest| rest.starts_with('('))
}

struct PendingModule {
    name: String,
    line: usize,
    dims: Option<Vec<usize>>,
    maps: BTreeMap<usize, (usize, String)>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn at_line(line: usize) -> impl Fn(Error) -> Error {
    move |e| match e {
        Error::Parse { .. } => e,
        other => parse_err(line, other.to_string()),
    }
}

pub fn parse_algebra(text: &str) -> Result<AlgebraFile> {
    parse_algebra_with_cap(text, DEFAULT_DEGREE_CAP)
}

pub fn parse_algebra_with_cap(text: &str, degree_cap: usize) -> Result<AlgebraFile> {
    let mut field = None;
    let mut vertices: Vec<String> = Vec::new();
    let mut arrows: Vec<(String, String, String)> = Vec::new();
    let mut relations: Vec<(usize, String)> = Vec::new();
    let mut modules: Vec<PendingModule> = Vec::new();
    let mut expect = BTreeMap::new();
    let mut last_line = 0;

    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (keyword, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
        let rest = rest.trim();
        let words: Vec<&str> = rest.split_whitespace().collect();
        let in_module = !modules.is_empty();
        match keyword {
            "field" => {
                if field.is_some() {
                    return Err(parse_err(line, "field declared twice"));
                }
                field = Some(match words.as_slice() {
                    ["Q"] => FieldSpec::Rationals,
                    ["F", p] => {
                        let p = p.parse().map_err(|_| parse_err(line, format!("invalid prime `{p}`")))?;
                        FieldSpec::prime(p).map_err(at_line(line))?
                    }
                    _ => return Err(parse_err(line, "expected `field Q` or `field F <p>`")),
                });
            }
            "vertex" | "arrow" | "relation" if in_module => {
                return Err(parse_err(line, format!("`{keyword}` after the first module block")));
            }
            "vertex" => {
                if words.is_empty() {
                    return Err(parse_err(line, "vertex needs at least one label"));
                }
                vertices.extend(words.iter().map(|w| w.to_string()));
            }
            "arrow" => match words.as_slice() {
                [l, s, t] => arrows.push((l.to_string(), s.to_string(), t.to_string())),
                _ => return Err(parse_err(line, "expected `arrow <label> <source> <target>`")),
            },
            "relation" => {
                if rest.is_empty() {
                    return Err(parse_err(line, "empty relation"));
                }
                relations.push((line, rest.to_string()));
            }
            "module" => match words.as_slice() {
                [name] => {
                    if modules.iter().any(|m| m.name == *name) {
                        return Err(parse_err(line, format!("module `{name}` declared twice")));
                    }
                    modules.push(PendingModule { name: name.to_string(), line, dims: None, maps: BTreeMap::new() });
                }
                _ => return Err(parse_err(line, "expected `module <name>`")),
            },
            "dim" | "map" if !in_module => {
                return Err(parse_err(line, format!("`{keyword}` outside a module block")));
            }
            "dim" => {
                let dims = words
                    .iter()
                    .map(|w| w.parse::<usize>().map_err(|_| parse_err(line, format!("invalid dimension `{w}`"))))
                    .collect::<Result<Vec<_>>>()?;
                let m = modules.last_mut().expect("in module");
                if m.dims.replace(dims).is_some() {
                    return Err(parse_err(line, "dim given twice"));
                }
            }
            "map" => {
                let (label, matrix) = rest
                    .split_once(char::is_whitespace)
                    .ok_or_else(|| parse_err(line, "expected `map <arrow> [[...]]`"))?;
                let idx = arrows
                    .iter()
                    .position(|a| a.0 == label)
                    .ok_or_else(|| parse_err(line, format!("unknown arrow `{label}`")))?;
                let m = modules.last_mut().expect("in module");
                if m.maps.insert(idx, (line, matrix.trim().to_string())).is_some() {
                    return Err(parse_err(line, format!("map `{label}` given twice")));
                }
            }
            "expect" => match words.as_slice() {
                [key @ ("dimension" | "gldim" | "domdim" | "verdict"), value] => {
                    expect.insert(key.to_string(), value.to_string());
                }
                _ => return Err(parse_err(line, "expected `expect <dimension|gldim|domdim|verdict> <value>`")),
            },
            other => return Err(parse_err(line, format!("unknown keyword `{other}`"))),
        }
    }

    let field = field.ok_or_else(|| parse_err(last_line.max(1), "missing `field` line"))?;
    if vertices.is_empty() {
        return Err(parse_err(last_line.max(1), "no vertices"));
    }
    let quiver = Quiver::new(&vertices, &arrows).map_err(at_line(1))?;
    let rels = relations
        .iter()
        .map(|(line, text)| parse_relation(&quiver, field, text).map_err(at_line(*line)))
        .collect::<Result<Vec<_>>>()?;
    let relation_line = relations.first().map_or(1, |r| r.0);
    let rels = RelationSet::new(&quiver, field, rels).map_err(at_line(relation_line))?;
    let algebra = Algebra::build(field, quiver, rels, degree_cap).map_err(at_line(relation_line))?;

    let modules = modules
        .into_iter()
        .map(|pm| {
            let dims = pm.dims.clone().ok_or_else(|| parse_err(pm.line, format!("module `{}` has no dim line", pm.name)))?;
            if dims.len() != algebra.num_vertices() {
                return Err(parse_err(pm.line, format!("dim needs {} entries", algebra.num_vertices())));
            }
            let maps = algebra
                .quiver()
                .arrows()
                .iter()
                .enumerate()
                .map(|(k, a)| {
                    let (rows, cols) = (dims[a.source], dims[a.target]);
                    match pm.maps.get(&k) {
                        Some((line, text)) => parse_matrix(field, text, rows, cols).map_err(at_line(*line)),
                        None => Ok(ExactMatrix::zeros(field, rows, cols)),
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            let m = Representation::new(algebra.clone(), dims, maps).map_err(at_line(pm.line))?;
            Ok((pm.name, m))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AlgebraFile { algebra, modules, expect })
}

/// Splits `x - 2*y + z` into signed terms.
fn signed_terms(text: &str) -> Result<Vec<(bool, String)>> {
    let mut out = Vec::new();
    let mut negative = false;
    let mut current = String::new();
    for ch in text.chars() {
        if ch == '+' || ch == '-' {
            let t = current.trim().to_string();
            if !t.is_empty() {
                out.push((negative, t));
                negative = ch == '-';
            } else if ch == '-' {
                negative = !negative;
            }
            current.clear();
        } else {
            current.push(ch);
        }
    }
    let t = current.trim().to_string();
    if t.is_empty() {
        return Err(Error::Relation(format!("dangling sign in `{text}`")));
    }
    out.push((negative, t));
    Ok(out)
}

/// `(coefficient, factors)` of one `[coeff*]f1*f2*...` term.
fn split_term(field: FieldSpec, term: &str, is_factor: impl Fn(&str) -> bool) -> Result<(Scalar, Vec<String>)> {
    let mut factors: Vec<String> = term.split('*').map(|f| f.trim().to_string()).collect();
    if factors.iter().any(String::is_empty) {
        return Err(Error::Relation(format!("empty factor in `{term}`")));
    }
    let mut coeff = field.one();
    if !is_factor(&factors[0]) {
        if let Ok(c) = field.parse_scalar(&factors[0]) {
            coeff = c;
            factors.remove(0);
        }
    }
    if let Some(bad) = factors.iter().find(|f| !is_factor(f)) {
        return Err(Error::Relation(format!("unknown arrow `{bad}`")));
    }
    Ok((coeff, factors))
}

pub fn parse_relation(quiver: &Quiver, field: FieldSpec, text: &str) -> Result<Relation> {
    let mut terms = Vec::new();
    for (negative, term) in signed_terms(text)? {
        let (c, factors) = split_term(field, &term, |f| quiver.arrow_index(f).is_some())?;
        if factors.is_empty() {
            return Err(Error::Relation(format!("term `{term}` has no arrows")));
        }
        let word = factors.iter().map(|f| quiver.arrow_index(f).expect("checked")).collect();
        terms.push((if negative { -c } else { c }, word));
    }
    Ok(Relation { terms })
}

/// A linear combination of paths, e.g. `a*b - 2*c`, `e1`, `0`.
pub fn parse_element(algebra: &Algebra, text: &str) -> Result<Element> {
    let field = algebra.field();
    let quiver = algebra.quiver();
    let trivial = |f: &str| f.strip_prefix('e').and_then(|v| quiver.vertex_index(v).ok());
    let is_factor = |f: &str| quiver.arrow_index(f).is_some() || trivial(f).is_some();
    let mut acc = Element::zero();
    for (negative, term) in signed_terms(text)? {
        if let Ok(c) = field.parse_scalar(&term) {
            if c.is_zero() {
                continue;
            }
            return Err(Error::InvalidMap(format!("scalar `{term}` is not a path; write it as c*e<vertex>")));
        }
        let (c, factors) = split_term(field, &term, is_factor)?;
        let mut vertex = None;
        let mut word = Vec::new();
        for f in &factors {
            match quiver.arrow_index(f) {
                Some(a) => word.push(a),
                None => {
                    let v = trivial(f).expect("checked");
                    if vertex.replace(v).is_some_and(|u| u != v) {
                        return Err(Error::InvalidMap(format!("`{term}` multiplies distinct idempotents")));
                    }
                }
            }
        }
        let x = if word.is_empty() {
            algebra.idempotent(vertex.expect("nonempty term"))
        } else {
            let (s, t) = quiver
                .endpoints(&word)
                .ok_or_else(|| Error::InvalidMap(format!("`{term}` is not a path")))?;
            if vertex.is_some_and(|v| v != s && v != t) {
                return Err(Error::InvalidMap(format!("`{term}` is zero by an idempotent")));
            }
            algebra.normal_form_word(word)
        };
        acc = acc.add(&x.scale(&if negative { -c } else { c }));
    }
    Ok(acc)
}

fn parse_vertex_sum(algebra: &Algebra, text: &str) -> Result<Vec<usize>> {
    let inner = text
        .trim()
        .strip_prefix("P(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::InvalidMap(format!("expected `P(...)`, found `{text}`")))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner.split('+').map(|v| algebra.quiver().vertex_index(v.trim())).collect()
}

/// Splits `[[x,y],[z,w]]` into rows of cell strings.
fn parse_rows(text: &str) -> Result<Vec<Vec<String>>> {
    let bad = || Error::InvalidMap(format!("malformed matrix `{text}`"));
    let inner = text.trim().strip_prefix('[').and_then(|r| r.strip_suffix(']')).ok_or_else(bad)?.trim();
    let mut rows = Vec::new();
    let mut rest = inner;
    while !rest.is_empty() {
        let open = rest.strip_prefix('[').ok_or_else(bad)?;
        let close = open.find(']').ok_or_else(bad)?;
        let cells = open[..close].trim();
        rows.push(if cells.is_empty() { Vec::new() } else { cells.split(',').map(|c| c.trim().to_string()).collect() });
        rest = open[close + 1..].trim_start();
        if let Some(r) = rest.strip_prefix(',') {
            rest = r.trim_start();
            if rest.is_empty() {
                return Err(bad());
            }
        } else if !rest.is_empty() {
            return Err(bad());
        }
    }
    Ok(rows)
}

pub fn parse_matrix(field: FieldSpec, text: &str, rows: usize, cols: usize) -> Result<ExactMatrix> {
    let cells = parse_rows(text)?;
    if rows == 0 && cells.iter().all(Vec::is_empty) {
        return Ok(ExactMatrix::zeros(field, 0, cols));
    }
    if cells.len() != rows || cells.iter().any(|r| r.len() != cols) {
        return Err(Error::Shape(format!("expected a {rows}x{cols} matrix")));
    }
    let values = cells
        .iter()
        .map(|r| r.iter().map(|c| field.parse_scalar(c)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    ExactMatrix::from_rows(field, cols, values)
}

/// `P(i1+i2+..)->P(j1+..): [[entry,...],...]`, one row per source summand.
pub fn parse_projmatrix(algebra: &Arc<Algebra>, spec: &str) -> Result<ProjMatrix> {
    let (head, body) = spec
        .split_once(':')
        .ok_or_else(|| Error::InvalidMap("expected `P(..)->P(..): [[..]]`".into()))?;
    let (src, tgt) = head
        .split_once("->")
        .ok_or_else(|| Error::InvalidMap("expected `->` between source and target".into()))?;
    let source = parse_vertex_sum(algebra, src)?;
    let target = parse_vertex_sum(algebra, tgt)?;
    let cells = parse_rows(body)?;
    let cells = if source.is_empty() && cells.iter().all(Vec::is_empty) { Vec::new() } else { cells };
    if cells.len() != source.len() || cells.iter().any(|r| r.len() != target.len()) {
        return Err(Error::InvalidMap(format!("expected {} rows of {} entries", source.len(), target.len())));
    }
    let entries = cells
        .iter()
        .map(|r| r.iter().map(|c| parse_element(algebra, c)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    ProjMatrix::new(algebra.clone(), source, target, entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    const KX2: &str = "field Q\nvertex 1 2\narrow a 1 2\narrow b 2 1\nrelation a*b\n";

    #[test]
    fn parses_kx2() {
        let f = parse_algebra(KX2).unwrap();
        assert_eq!(f.algebra.dim(), 5);
        assert!(f.modules.is_empty());
    }

    #[test]
    fn parses_modules_and_expectations() {
        let text = format!("{KX2}module M\ndim 1 1\nmap a [[1]]\nexpect gldim 2\n");
        let f = parse_algebra(&text).unwrap();
        let m = f.module("M").unwrap();
        assert_eq!(m.dims(), &[1, 1]);
        assert_eq!(f.expect["gldim"], "2");
        assert_eq!(f.module("S(2)").unwrap().dims(), &[0, 1]);
        assert!(f.module("X").is_err());
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_algebra("field Q\nvertex 1\narrow a 1 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }), "{err}");
        let err = parse_algebra("field Q\nvertex 1 2\nfoo\n").unwrap_err();
        assert_eq!(err, Error::Parse { line: 3, message: "unknown keyword `foo`".into() });
        let err = parse_algebra(&format!("{KX2}module M\ndim 1 1\nmap a [[1]]\nmap b [[1]]\n")).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 6, .. }), "{err}");
        let err = parse_algebra(&format!("{KX2}module M\ndim 1 1\nmap a [[1,0]]\n")).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 8, .. }), "{err}");
        let err = parse_algebra(&format!("{KX2}relation b*x\n")).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 6, .. }), "{err}");
    }

    #[test]
    fn relation_terms_with_coefficients() {
        let text = "field F 5\nvertex 1\narrow x 1 1\narrow y 1 1\nrelation x*y - 2*y*x\nrelation x*x\nrelation y*y\n";
        let f = parse_algebra(text).unwrap();
        assert_eq!(f.algebra.dim(), 4);
        let rel = &f.algebra.relations().relations()[0];
        assert_eq!(rel.terms[1].0, FieldSpec::PrimeField(5).from_i64(-2));
    }

    #[test]
    fn rejects_inadmissible() {
        let err = parse_algebra("field Q\nvertex 1\narrow x 1 1\nrelation x*x - x*x*x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 4, .. }), "{err}");
    }

    #[test]
    fn projmatrix_round_trip() {
        let f = parse_algebra(KX2).unwrap();
        let alg = &f.algebra;
        for spec in ["P(1+2)->P(2): [[b],[b*a - e2]]", "P(2)->P(1): [[-3/2*a]]", "P()->P(1): []", "P(1)->P(): [[]]"] {
            let m = parse_projmatrix(alg, spec).unwrap();
            assert_eq!(parse_projmatrix(alg, &m.to_string()).unwrap(), m, "{spec}");
        }
        assert_eq!(parse_projmatrix(alg, "P(1)->P(1): [[e1 + a*b]]").unwrap(), ProjMatrix::identity(alg.clone(), vec![0]));
        assert!(parse_projmatrix(alg, "P(1)->P(2): [[a]]").is_err());
        assert!(parse_projmatrix(alg, "P(1)->P(2): [[a,a]]").is_err());
    }

    #[test]
    fn expectation_matching() {
        assert!(expectation_met("AboveCap", "AboveCap(11)"));
        assert!(expectation_met("NotNAbelianUpTo", "NotNAbelianUpTo(11)"));
        assert!(expectation_met("ExactlyN(1)", "ExactlyN(1)"));
        assert!(!expectation_met("2", "3"));
    }
}
