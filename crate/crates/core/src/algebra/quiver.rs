use std::cmp::Ordering;
use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

/// A finite quiver. Vertices and arrows are addressed by their position in
/// declaration order, which also fixes the arrow order used for paths.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new<S: AsRef<str>>(vertices: &[S], arrows: &[(S, S, S)]) -> Result<Self> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        let mut seen = HashSet::new();
        for v in &vertices {
            if !seen.insert(v.clone()) {
                return Err(Error::Quiver(format!("duplicate label `{v}`")));
            }
        }
        let mut q = Quiver { vertices, arrows: Vec::new() };
        for (label, src, dst) in arrows {
            let label = label.as_ref().to_string();
            if !seen.insert(label.clone()) {
                return Err(Error::Quiver(format!("duplicate label `{label}`")));
            }
            let source = q.vertex_index(src.as_ref())?;
            let target = q.vertex_index(dst.as_ref())?;
            q.arrows.push(Arrow { label, source, target });
        }
        Ok(q)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, label: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn arrow_index(&self, label: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.label == label)
    }

    /// Same vertices, every arrow reversed, arrow indices preserved.
    pub fn opposite(&self) -> Quiver {
        let arrows = self
            .arrows
            .iter()
            .map(|a| Arrow { label: a.label.clone(), source: a.target, target: a.source })
            .collect();
        Quiver { vertices: self.vertices.clone(), arrows }
    }

    /// Checks that the arrow sequence is a composable path and returns its
    /// endpoints.
    pub fn endpoints(&self, word: &[usize]) -> Option<(usize, usize)> {
        let first = self.arrows.get(*word.first()?)?;
        let mut at = first.target;
        for &a in &word[1..] {
            let arrow = self.arrows.get(a)?;
            if arrow.source != at {
                return None;
            }
            at = arrow.target;
        }
        Some((first.source, at))
    }
}

/// A path in the quiver: a trivial path at `source` when `arrows` is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn label(&self, quiver: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e{}", quiver.vertices[self.source])
        } else {
            self.arrows
                .iter()
                .map(|&a| quiver.arrows[a].label.as_str())
                .collect::<Vec<_>>()
                .join("*")
        }
    }
}

/// Length-lexicographic order: shorter paths first, then by arrow indices,
/// trivial paths by vertex.
impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.arrows
            .len()
            .cmp(&other.arrows.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.source.cmp(&other.source))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// One relation: a linear combination of parallel paths of length >= 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    pub terms: Vec<(Scalar, Vec<usize>)>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RelationSet {
    relations: Vec<Relation>,
}

impl RelationSet {
    pub fn new(quiver: &Quiver, field: FieldSpec, relations: Vec<Relation>) -> Result<Self> {
        for (k, rel) in relations.iter().enumerate() {
            let mut ends = None;
            for (c, word) in &rel.terms {
                if c.field() != field {
                    return Err(Error::Relation(format!("relation {k}: coefficient from another field")));
                }
                if word.len() < 2 {
                    return Err(Error::Relation(format!("relation {k}: path of length {} < 2", word.len())));
                }
                let e = quiver
                    .endpoints(word)
                    .ok_or_else(|| Error::Relation(format!("relation {k}: not a path")))?;
                if *ends.get_or_insert(e) != e {
                    return Err(Error::Relation(format!("relation {k}: terms are not parallel")));
                }
            }
        }
        Ok(RelationSet { relations })
    }

    /// Parses labelled words, e.g. `[(1, ["a", "b"])]`.
    pub fn from_labels(quiver: &Quiver, field: FieldSpec, relations: &[Vec<(i64, Vec<&str>)>]) -> Result<Self> {
        let mut out = Vec::new();
        for rel in relations {
            let mut terms = Vec::new();
            for (c, word) in rel {
                let word = word
                    .iter()
                    .map(|l| quiver.arrow_index(l).ok_or_else(|| Error::Relation(format!("unknown arrow `{l}`"))))
                    .collect::<Result<Vec<_>>>()?;
                terms.push((field.from_i64(*c), word));
            }
            out.push(Relation { terms });
        }
        Self::new(quiver, field, out)
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }

    /// Every word reversed, for the opposite quiver.
    pub fn reversed(&self) -> RelationSet {
        let relations = self
            .relations
            .iter()
            .map(|r| Relation {
                terms: r
                    .terms
                    .iter()
                    .map(|(c, w)| (c.clone(), w.iter().rev().copied().collect()))
                    .collect(),
            })
            .collect();
        RelationSet { relations }
    }

    pub fn max_length(&self) -> usize {
        self.relations
            .iter()
            .flat_map(|r| r.terms.iter().map(|(_, w)| w.len()))
            .max()
            .unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_quivers() {
        assert!(Quiver::new(&["1", "1"], &[]).is_err());
        assert!(Quiver::new(&["1"], &[("a", "1", "2")]).is_err());
        assert!(Quiver::new(&["1", "2"], &[("1", "1", "2")]).is_err());
    }

    #[test]
    fn rejects_bad_relations() {
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1"), ("c", "1", "2")]).unwrap();
        let f = FieldSpec::Rationals;
        assert!(RelationSet::from_labels(&q, f, &[vec![(1, vec!["a"])]]).is_err());
        assert!(RelationSet::from_labels(&q, f, &[vec![(1, vec!["a", "c"])]]).is_err());
        assert!(RelationSet::from_labels(&q, f, &[vec![(1, vec!["a", "b"]), (1, vec!["b", "a"])]]).is_err());
        assert!(RelationSet::from_labels(&q, f, &[vec![(1, vec!["a", "b"])]]).is_ok());
    }

    #[test]
    fn opposite_reverses_arrows() {
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2")]).unwrap();
        let op = q.opposite();
        assert_eq!(op.arrows()[0].source, 1);
        assert_eq!(op.arrows()[0].target, 0);
        assert_eq!(op.opposite(), q);
    }
}
