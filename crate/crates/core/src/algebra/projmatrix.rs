use std::fmt;
use std::sync::Arc;

use super::{Algebra, Element};
use crate::error::{Error, Result};
use crate::linalg::Scalar;

/// A morphism `⊕_s P(source[s]) -> ⊕_t P(target[t])` between finitely
/// generated projectives, `P(i) = e_i Λ`.
///
/// `entries[s][t]` lies in `e_{target[t]} Λ e_{source[s]}`; the generator of
/// summand `s` is sent to `entries[s][t]` in summand `t`, so an arrow
/// `a: 1 -> 2` gives a map `P(2) -> P(1)`.
#[derive(Clone)]
pub struct ProjMatrix {
    algebra: Arc<Algebra>,
    source: Vec<usize>,
    target: Vec<usize>,
    entries: Vec<Vec<Element>>,
}

impl ProjMatrix {
    pub fn new(algebra: Arc<Algebra>, source: Vec<usize>, target: Vec<usize>, entries: Vec<Vec<Element>>) -> Result<Self> {
        let n = algebra.num_vertices();
        if let Some(v) = source.iter().chain(&target).find(|&&v| v >= n) {
            return Err(Error::UnknownVertex(v.to_string()));
        }
        if entries.len() != source.len() || entries.iter().any(|row| row.len() != target.len()) {
            return Err(Error::InvalidMap(format!(
                "expected a {}x{} matrix of algebra elements",
                source.len(),
                target.len()
            )));
        }
        for (s, row) in entries.iter().enumerate() {
            for (t, x) in row.iter().enumerate() {
                if x.terms().iter().any(|(k, c)| *k >= algebra.dim() || c.field() != algebra.field()) {
                    return Err(Error::InvalidMap(format!("entry ({s},{t}) is not an element of the algebra")));
                }
                if !algebra.is_supported_in(x, target[t], source[s]) {
                    return Err(Error::InvalidMap(format!(
                        "entry ({s},{t}) = {} is not in e{} Λ e{}",
                        algebra.element_label(x),
                        algebra.quiver().vertices()[target[t]],
                        algebra.quiver().vertices()[source[s]]
                    )));
                }
            }
        }
        Ok(ProjMatrix { algebra, source, target, entries })
    }

    pub fn zero(algebra: Arc<Algebra>, source: Vec<usize>, target: Vec<usize>) -> Self {
        let entries = vec![vec![Element::zero(); target.len()]; source.len()];
        ProjMatrix { algebra, source, target, entries }
    }

    pub fn identity(algebra: Arc<Algebra>, vertices: Vec<usize>) -> Self {
        let mut m = Self::zero(algebra, vertices.clone(), vertices.clone());
        for (s, &v) in vertices.iter().enumerate() {
            m.entries[s][s] = m.algebra.idempotent(v);
        }
        m
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn source(&self) -> &[usize] {
        &self.source
    }

    pub fn target(&self) -> &[usize] {
        &self.target
    }

    pub fn entry(&self, s: usize, t: usize) -> &Element {
        &self.entries[s][t]
    }

    pub fn entries(&self) -> &[Vec<Element>] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Element::is_zero)
    }

    /// No entry has a component on a trivial path; for a differential this
    /// is the minimality certificate.
    pub fn is_radical(&self) -> bool {
        self.entries.iter().flatten().all(|x| self.algebra.is_radical(x))
    }

    /// `self` followed by `next`.
    pub fn compose(&self, next: &ProjMatrix) -> Result<ProjMatrix> {
        self.algebra.ensure_same(&next.algebra)?;
        if self.target != next.source {
            return Err(Error::InvalidMap("composition of non-composable maps".into()));
        }
        let mut out = Self::zero(self.algebra.clone(), self.source.clone(), next.target.clone());
        for s in 0..self.source.len() {
            for u in 0..next.target.len() {
                let mut acc = Element::zero();
                for t in 0..self.target.len() {
                    acc = acc.add(&self.algebra.mul(&next.entries[t][u], &self.entries[s][t]));
                }
                out.entries[s][u] = acc;
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &ProjMatrix) -> Result<ProjMatrix> {
        self.algebra.ensure_same(&other.algebra)?;
        if self.source != other.source || self.target != other.target {
            return Err(Error::InvalidMap("sum of maps with different endpoints".into()));
        }
        let mut out = self.clone();
        for (row, orow) in out.entries.iter_mut().zip(&other.entries) {
            for (x, y) in row.iter_mut().zip(orow) {
                *x = x.add(y);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> ProjMatrix {
        let mut out = self.clone();
        for x in out.entries.iter_mut().flatten() {
            *x = x.scale(c);
        }
        out
    }

    /// `Hom_Λ(-, Λ)`: the transpose with every path reversed, a map
    /// `⊕ P^op(target) -> ⊕ P^op(source)` over the opposite algebra.
    pub fn dual(&self) -> ProjMatrix {
        let op = self.algebra.opposite();
        let mut out = Self::zero(op.clone(), self.target.clone(), self.source.clone());
        for s in 0..self.source.len() {
            for t in 0..self.target.len() {
                out.entries[t][s] = self.algebra.reverse_element(&self.entries[s][t], &op);
            }
        }
        out
    }

    /// A basis of `Hom(⊕ P(source), ⊕ P(target))` by matrix units.
    pub fn hom_basis(algebra: &Arc<Algebra>, source: &[usize], target: &[usize]) -> Vec<ProjMatrix> {
        let mut out = Vec::new();
        for (s, &i) in source.iter().enumerate() {
            for (t, &j) in target.iter().enumerate() {
                for &k in algebra.between(j, i) {
                    let mut m = Self::zero(algebra.clone(), source.to_vec(), target.to_vec());
                    m.entries[s][t] = Element::basis(k, algebra.field().one());
                    out.push(m);
                }
            }
        }
        out
    }

    /// Coordinates with respect to `hom_basis` ordering.
    pub fn flatten(&self) -> Vec<Scalar> {
        let alg = &self.algebra;
        let mut out = Vec::new();
        for (s, &i) in self.source.iter().enumerate() {
            for (t, &j) in self.target.iter().enumerate() {
                let x = &self.entries[s][t];
                for &k in alg.between(j, i) {
                    out.push(x.coefficient(k).cloned().unwrap_or_else(|| alg.field().zero()));
                }
            }
        }
        out
    }
}

impl PartialEq for ProjMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.algebra.same_as(&other.algebra)
            && self.source == other.source
            && self.target == other.target
            && self.entries == other.entries
    }
}

impl fmt::Debug for ProjMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ProjMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.algebra.quiver().vertices();
        let sum = |vs: &[usize]| vs.iter().map(|&v| names[v].as_str()).collect::<Vec<_>>().join("+");
        let rows: Vec<String> = self
            .entries
            .iter()
            .map(|row| {
                let cells: Vec<String> = row.iter().map(|x| self.algebra.element_label(x)).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        write!(f, "P({})->P({}): [{}]", sum(&self.source), sum(&self.target), rows.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::FieldSpec;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn kx2() -> Arc<Algebra> {
        Algebra::from_labels(Q, &["1", "2"], &[("a", "1", "2"), ("b", "2", "1")], &[vec![(1, vec!["a", "b"])]]).unwrap()
    }

    #[test]
    fn rejects_misplaced_entries() {
        let a = kx2();
        // a lies in e1 Λ e2, so it defines P(2) -> P(1) but not P(1) -> P(2)
        assert!(ProjMatrix::new(a.clone(), vec![1], vec![0], vec![vec![a.arrow(0)]]).is_ok());
        assert!(ProjMatrix::new(a.clone(), vec![0], vec![1], vec![vec![a.arrow(0)]]).is_err());
        assert!(ProjMatrix::new(a.clone(), vec![0, 1], vec![0], vec![vec![a.one()]]).is_err());
    }

    #[test]
    fn dual_of_identity_is_identity() {
        let a = kx2();
        let id = ProjMatrix::identity(a.clone(), vec![0]);
        assert_eq!(id.dual(), ProjMatrix::identity(a.opposite(), vec![0]));
    }

    #[test]
    fn dual_of_arrow_reverses_direction() {
        let a = Algebra::from_labels(Q, &["1", "2"], &[("a", "1", "2")], &[]).unwrap();
        let f = ProjMatrix::new(a.clone(), vec![1], vec![0], vec![vec![a.arrow(0)]]).unwrap();
        let d = f.dual();
        assert_eq!(d.source(), &[0]);
        assert_eq!(d.target(), &[1]);
        assert_eq!(d.to_string(), "P(1)->P(2): [[a]]");
        assert_eq!(d.dual(), f);
    }

    #[test]
    fn double_dual_of_column_is_original() {
        let a = kx2();
        let ba = a.mul(&a.arrow(1), &a.arrow(0));
        // P(2) -> P(1) + P(2) with entries a and b*a
        let f = ProjMatrix::new(a.clone(), vec![1], vec![0, 1], vec![vec![a.arrow(0), ba]]).unwrap();
        let d = f.dual();
        assert_eq!((d.source().len(), d.target().len()), (2, 1));
        assert_eq!(d.dual(), f);
    }

    #[test]
    fn dual_reverses_composition() {
        let a = kx2();
        let f = ProjMatrix::new(a.clone(), vec![0], vec![1], vec![vec![a.arrow(1)]]).unwrap();
        let g = ProjMatrix::new(a.clone(), vec![1], vec![0], vec![vec![a.arrow(0)]]).unwrap();
        let fg = f.compose(&g).unwrap();
        assert_eq!(a.element_label(fg.entry(0, 0)), "0");
        let gf = g.compose(&f).unwrap();
        assert_eq!(a.element_label(gf.entry(0, 0)), "b*a");
        assert_eq!(gf.dual(), f.dual().compose(&g.dual()).unwrap());
    }

    #[test]
    fn flatten_matches_hom_basis() {
        let a = kx2();
        let basis = ProjMatrix::hom_basis(&a, &[0, 1], &[1]);
        assert_eq!(basis.len(), a.between(1, 0).len() + a.between(1, 1).len());
        for (k, m) in basis.iter().enumerate() {
            let v = m.flatten();
            assert!(v.iter().enumerate().all(|(j, c)| c.is_one() == (j == k) && (c.is_zero() || j == k)));
        }
    }
}
