use crate::linalg::{FieldSpec, Scalar};

/// A sparse element of an algebra in its path basis; terms are sorted by
/// basis index and never zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Element {
    terms: Vec<(usize, Scalar)>,
}

impl Element {
    pub fn zero() -> Self {
        Element { terms: Vec::new() }
    }

    pub fn basis(i: usize, c: Scalar) -> Self {
        Element::from_terms([(i, c)])
    }

    /// Combines repeated indices and drops zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut terms: Vec<(usize, Scalar)> = terms.into_iter().collect();
        terms.sort_by_key(|(i, _)| *i);
        let mut out: Vec<(usize, Scalar)> = Vec::with_capacity(terms.len());
        for (i, c) in terms {
            match out.last_mut() {
                Some((j, d)) if *j == i => *d = &*d + &c,
                _ => out.push((i, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Element { terms: out }
    }

    pub fn from_dense(coeffs: &[Scalar]) -> Self {
        Element::from_terms(coeffs.iter().cloned().enumerate())
    }

    pub fn to_dense(&self, field: FieldSpec, dim: usize) -> Vec<Scalar> {
        let mut out = vec![field.zero(); dim];
        for (i, c) in &self.terms {
            out[*i] = c.clone();
        }
        out
    }

    pub fn terms(&self) -> &[(usize, Scalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, i: usize) -> Option<&Scalar> {
        self.terms
            .binary_search_by_key(&i, |(j, _)| *j)
            .ok()
            .map(|k| &self.terms[k].1)
    }

    pub fn add(&self, other: &Element) -> Element {
        Element::from_terms(self.terms.iter().chain(other.terms.iter()).cloned())
    }

    pub fn sub(&self, other: &Element) -> Element {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Element {
        Element { terms: self.terms.iter().map(|(i, c)| (*i, -c)).collect() }
    }

    pub fn scale(&self, s: &Scalar) -> Element {
        Element::from_terms(self.terms.iter().map(|(i, c)| (*i, c * s)))
    }
}
