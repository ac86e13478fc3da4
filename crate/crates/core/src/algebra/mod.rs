//! Bound quiver algebras `kQ/I` with an explicit path basis.
//!
//! Paths compose left to right: `a*b` means "first `a`, then `b`", so a
//! basis path `p` lies in `e_{source(p)} Λ e_{target(p)}`. Right modules
//! are therefore representations where an arrow `a: i -> j` acts
//! `M_i -> M_j`, and the indecomposable projectives are `P(i) = e_i Λ`.

mod element;
pub mod groebner;
mod projmatrix;
mod quiver;

use std::collections::HashMap;
use std::sync::{Arc, Weak};

pub use element::Element;
pub use groebner::{complete as groebner_complete, Completion, GroebnerBasis, PathPoly};
pub use projmatrix::ProjMatrix;
pub use quiver::{Arrow, Path, Quiver, Relation, RelationSet};

use crate::error::{Error, Result};
use crate::linalg::{ExactMatrix, FieldSpec, Scalar};

pub const DEFAULT_DEGREE_CAP: usize = 20;

enum OppositeLink {
    Owned(Arc<Algebra>),
    Parent(Weak<Algebra>),
}

/// A finite-dimensional algebra `Λ = kQ/I` with `I` admissible.
///
/// Basis elements are the irreducible paths, ordered length-lexicographically,
/// so `e_v` has index `v` and arrow `a` has index `num_vertices + a`.
pub struct Algebra {
    field: FieldSpec,
    quiver: Quiver,
    relations: RelationSet,
    degree_cap: usize,
    groebner: GroebnerBasis,
    basis: Vec<Path>,
    index: HashMap<(usize, Vec<usize>), usize>,
    between: Vec<Vec<Vec<usize>>>,
    table: Vec<Vec<(usize, Scalar)>>,
    fingerprint: String,
    opposite: OppositeLink,
}

impl std::fmt::Debug for Algebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Algebra")
            .field("field", &self.field)
            .field("vertices", &self.quiver.vertices())
            .field("dimension", &self.dim())
            .finish()
    }
}

impl Algebra {
    /// Builds `Λ` and its opposite together.
    pub fn build(field: FieldSpec, quiver: Quiver, relations: RelationSet, degree_cap: usize) -> Result<Arc<Algebra>> {
        let primary = Self::build_raw(field, quiver.clone(), relations.clone(), degree_cap)?;
        let op = Self::build_raw(field, quiver.opposite(), relations.reversed(), degree_cap)?;
        Ok(Self::link(primary, op))
    }

    fn link(mut primary: Algebra, mut op: Algebra) -> Arc<Algebra> {
        Arc::new_cyclic(|weak| {
            op.opposite = OppositeLink::Parent(weak.clone());
            primary.opposite = OppositeLink::Owned(Arc::new(op));
            primary
        })
    }

    /// Convenience constructor from string labels; coefficients are integers.
    pub fn from_labels(
        field: FieldSpec,
        vertices: &[&str],
        arrows: &[(&str, &str, &str)],
        relations: &[Vec<(i64, Vec<&str>)>],
    ) -> Result<Arc<Algebra>> {
        let quiver = Quiver::new(vertices, arrows)?;
        let relations = RelationSet::from_labels(&quiver, field, relations)?;
        Self::build(field, quiver, relations, DEFAULT_DEGREE_CAP)
    }

    fn build_raw(field: FieldSpec, quiver: Quiver, relations: RelationSet, degree_cap: usize) -> Result<Algebra> {
        let completion = groebner::complete(field, &quiver, &relations, degree_cap)?;
        let basis = completion.irreducible;
        let n = quiver.num_vertices();
        let index: HashMap<(usize, Vec<usize>), usize> = basis
            .iter()
            .enumerate()
            .map(|(i, p)| ((p.source, p.arrows.clone()), i))
            .collect();
        let mut between = vec![vec![Vec::new(); n]; n];
        for (i, p) in basis.iter().enumerate() {
            between[p.source][p.target].push(i);
        }
        let fingerprint = fingerprint(field, &quiver, &relations);
        let mut alg = Algebra {
            field,
            quiver,
            relations,
            degree_cap,
            groebner: completion.basis,
            basis,
            index,
            between,
            table: Vec::new(),
            fingerprint,
            opposite: OppositeLink::Parent(Weak::new()),
        };
        let dim = alg.basis.len();
        let mut table = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                table.push(alg.compute_product(i, j));
            }
        }
        alg.table = table;
        alg.check_radical_nilpotent()?;
        Ok(alg)
    }

    fn compute_product(&self, i: usize, j: usize) -> Vec<(usize, Scalar)> {
        let (p, q) = (&self.basis[i], &self.basis[j]);
        if p.target != q.source {
            return Vec::new();
        }
        if p.is_trivial() {
            return vec![(j, self.field.one())];
        }
        if q.is_trivial() {
            return vec![(i, self.field.one())];
        }
        let mut word = p.arrows.clone();
        word.extend_from_slice(&q.arrows);
        self.normal_form_word(word).terms().to_vec()
    }

    /// The powers of the arrow ideal must reach zero; this rules out ideals
    /// such as `(x^2 - x^3)` whose quotient is finite but not basic-local.
    fn check_radical_nilpotent(&self) -> Result<()> {
        let dim = self.dim();
        let n = self.num_vertices();
        let mut current = ExactMatrix::zeros(self.field, dim - n, dim);
        for k in n..dim {
            current.set(k - n, k, self.field.one());
        }
        let mut rank = current.rank();
        while rank > 0 {
            let mut rows = Vec::new();
            for r in current.row_vectors() {
                let x = Element::from_dense(r);
                for a in 0..self.quiver.arrows().len() {
                    rows.push(self.mul(&x, &self.arrow(a)).to_dense(self.field, dim));
                }
            }
            let next = ExactMatrix::from_rows(self.field, dim, rows).expect("dense rows").row_space();
            if next.rows() == rank {
                return Err(Error::Inadmissible("the arrow ideal is not nilpotent in the quotient".into()));
            }
            rank = next.rows();
            current = next;
        }
        Ok(())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &RelationSet {
        &self.relations
    }

    pub fn groebner(&self) -> &GroebnerBasis {
        &self.groebner
    }

    pub fn degree_cap(&self) -> usize {
        self.degree_cap
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.quiver.num_vertices()
    }

    pub fn num_arrows(&self) -> usize {
        self.quiver.arrows().len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn path(&self, i: usize) -> &Path {
        &self.basis[i]
    }

    pub fn basis_label(&self, i: usize) -> String {
        self.basis[i].label(&self.quiver)
    }

    pub fn basis_index(&self, source: usize, arrows: &[usize]) -> Option<usize> {
        self.index.get(&(source, arrows.to_vec())).copied()
    }

    /// Indices of the basis paths from `i` to `j`, i.e. a basis of `e_i Λ e_j`.
    pub fn between(&self, i: usize, j: usize) -> &[usize] {
        &self.between[i][j]
    }

    pub fn idempotent(&self, v: usize) -> Element {
        Element::basis(v, self.field.one())
    }

    pub fn arrow(&self, a: usize) -> Element {
        Element::basis(self.num_vertices() + a, self.field.one())
    }

    pub fn one(&self) -> Element {
        Element::from_terms((0..self.num_vertices()).map(|v| (v, self.field.one())))
    }

    pub fn product_of_basis(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim() + j]
    }

    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        let mut acc = Vec::new();
        for (i, a) in x.terms() {
            for (j, b) in y.terms() {
                let ab = a * b;
                for (k, c) in self.product_of_basis(*i, *j) {
                    acc.push((*k, &ab * c));
                }
            }
        }
        Element::from_terms(acc)
    }

    /// Normal form of a nonempty arrow word, as an element of `Λ`.
    pub fn normal_form_word(&self, word: Vec<usize>) -> Element {
        let poly = self.groebner.reduce(PathPoly::word(word, self.field.one()));
        self.poly_to_element(&poly)
    }

    fn poly_to_element(&self, poly: &PathPoly) -> Element {
        Element::from_terms(poly.terms().map(|(w, c)| {
            let source = self.quiver.arrows()[w.0[0]].source;
            let idx = self.basis_index(source, &w.0).expect("normal words are basis paths");
            (idx, c.clone())
        }))
    }

    /// `true` when every term of `x` is a path from `i` to `j`.
    pub fn is_supported_in(&self, x: &Element, i: usize, j: usize) -> bool {
        x.terms().iter().all(|(k, _)| self.basis[*k].source == i && self.basis[*k].target == j)
    }

    /// `true` when `x` has no component on a trivial path.
    pub fn is_radical(&self, x: &Element) -> bool {
        x.terms().iter().all(|(k, _)| *k >= self.num_vertices())
    }

    pub fn fingerprint(&self) -> &str {
        &self.fingerprint
    }

    pub fn same_as(&self, other: &Algebra) -> bool {
        std::ptr::eq(self, other) || self.fingerprint == other.fingerprint
    }

    pub fn ensure_same(&self, other: &Algebra) -> Result<()> {
        if self.same_as(other) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch(format!("{} vs {}", self.fingerprint, other.fingerprint)))
        }
    }

    /// The opposite algebra: reversed quiver and reversed relations.
    pub fn opposite(self: &Arc<Self>) -> Arc<Algebra> {
        match &self.opposite {
            OppositeLink::Owned(op) => op.clone(),
            OppositeLink::Parent(w) => w.upgrade().unwrap_or_else(|| {
                // The owning side was dropped; rebuild an equivalent pair.
                let primary = Self::build_raw(
                    self.field,
                    self.quiver.opposite(),
                    self.relations.reversed(),
                    self.degree_cap,
                )
                .expect("opposite of a built algebra");
                let op = Self::build_raw(self.field, self.quiver.clone(), self.relations.clone(), self.degree_cap)
                    .expect("rebuilding a built algebra");
                Self::link(primary, op)
            }),
        }
    }

    /// The anti-isomorphism `Λ -> Λ^op`, reversing every path. `target`
    /// must be the opposite of `self`.
    pub fn reverse_element(&self, x: &Element, target: &Algebra) -> Element {
        let mut acc = Vec::new();
        for (k, c) in x.terms() {
            let p = &self.basis[*k];
            if p.is_trivial() {
                acc.push((p.source, c.clone()));
            } else {
                let word: Vec<usize> = p.arrows.iter().rev().copied().collect();
                for (j, d) in target.normal_form_word(word).terms() {
                    acc.push((*j, c * d));
                }
            }
        }
        Element::from_terms(acc)
    }

    pub fn element_label(&self, x: &Element) -> String {
        if x.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (n, (k, c)) in x.terms().iter().enumerate() {
            let mut coeff = c.clone();
            if n > 0 {
                if c.is_negative() {
                    out.push_str(" - ");
                    coeff = -c;
                } else {
                    out.push_str(" + ");
                }
            }
            if !coeff.is_one() {
                out.push_str(&format!("{coeff}*"));
            }
            out.push_str(&self.basis_label(*k));
        }
        out
    }
}

fn fingerprint(field: FieldSpec, quiver: &Quiver, relations: &RelationSet) -> String {
    let arrows: Vec<String> = quiver
        .arrows()
        .iter()
        .map(|a| format!("{}:{}>{}", a.label, a.source, a.target))
        .collect();
    let rels: Vec<String> = relations
        .relations()
        .iter()
        .map(|r| {
            r.terms
                .iter()
                .map(|(c, w)| format!("{c}{w:?}"))
                .collect::<Vec<_>>()
                .join("+")
        })
        .collect();
    format!("{field}|{}|{}|{}", quiver.vertices().join(","), arrows.join(","), rels.join(";"))
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn kx2() -> Arc<Algebra> {
        Algebra::from_labels(Q, &["1", "2"], &[("a", "1", "2"), ("b", "2", "1")], &[vec![(1, vec!["a", "b"])]]).unwrap()
    }

    #[test]
    fn semisimple_table_is_idempotent() {
        let a = Algebra::from_labels(Q, &["1", "2", "3"], &[], &[]).unwrap();
        assert_eq!(a.dim(), 3);
        for i in 0..3 {
            for j in 0..3 {
                let prod = a.product_of_basis(i, j);
                if i == j {
                    assert_eq!(prod, &[(i, Q.one())]);
                } else {
                    assert!(prod.is_empty());
                }
            }
        }
    }

    #[test]
    fn a2_has_dimension_three_and_no_square() {
        let a = Algebra::from_labels(Q, &["1", "2"], &[("a", "1", "2")], &[]).unwrap();
        assert_eq!(a.dim(), 3);
        assert!(a.mul(&a.arrow(0), &a.arrow(0)).is_zero());
    }

    #[test]
    fn kx2_dimension_five() {
        let a = kx2();
        assert_eq!(a.dim(), 5);
        let ba = a.mul(&a.arrow(1), &a.arrow(0));
        assert_eq!(a.element_label(&ba), "b*a");
        assert!(a.mul(&a.arrow(0), &a.arrow(1)).is_zero());
    }

    #[test]
    fn identity_is_sum_of_idempotents() {
        let a = kx2();
        for k in 0..a.dim() {
            let x = Element::basis(k, Q.one());
            assert_eq!(a.mul(&a.one(), &x), x);
            assert_eq!(a.mul(&x, &a.one()), x);
        }
    }

    #[test]
    fn opposite_is_linked_both_ways() {
        let a = kx2();
        let op = a.opposite();
        assert_eq!(op.dim(), a.dim());
        assert!(Arc::ptr_eq(&op.opposite(), &a));
        assert_eq!(op.quiver().arrows()[0].source, 1);
        // a*b = 0 becomes b*a = 0 in the reversed arrows
        assert!(op.mul(&op.arrow(1), &op.arrow(0)).is_zero());
        assert!(!op.mul(&op.arrow(0), &op.arrow(1)).is_zero());
    }

    #[test]
    fn reversal_is_an_anti_homomorphism() {
        let a = kx2();
        let op = a.opposite();
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let x = Element::basis(i, Q.one());
                let y = Element::basis(j, Q.one());
                let lhs = a.reverse_element(&a.mul(&x, &y), &op);
                let rhs = op.mul(&a.reverse_element(&y, &op), &a.reverse_element(&x, &op));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn non_nilpotent_ideal_is_inadmissible() {
        let err = Algebra::from_labels(Q, &["1"], &[("x", "1", "1")], &[vec![(1, vec!["x", "x"]), (-1, vec!["x", "x", "x"])]])
            .unwrap_err();
        assert!(matches!(err, Error::Inadmissible(_)));
    }
}
